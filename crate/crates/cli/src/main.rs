//! Command-line front end: load quadratic sets from JSON documents, run
//! property and structure checks, compute normal forms, and drive the census.
//!
//! Exit codes are a stable contract: 0 ok, 1 property failure, 2 input error,
//! 3 consistency violation, 4 resource cap exceeded.

mod doc;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use doc::SetDocument;
use quadset::harness::{self, SurveyError};
use quadset::words::{Engine, LetterOrder};
use quadset::{Error, PropertyReport, SkewReport, TheoremReport, DEFAULT_ORBIT_CAP};

const EXIT_PROPERTY: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CONSISTENCY: u8 = 3;
const EXIT_RESOURCE: u8 = 4;

/// Largest order the census accepts; beyond it the search space is out of
/// desk-scale reach.
const MAX_SURVEY_N: usize = 5;

#[derive(Parser)]
#[command(name = "quadset", version, about = "Exact computations with finite quadratic sets")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the pointwise properties of a set, and optionally the full
    /// structural equivalence.
    Check {
        /// Path to a set document (JSON).
        path: PathBuf,
        /// Also evaluate the four equivalent structural conditions.
        #[arg(long)]
        theorem: bool,
        /// Also check skew-polynomial type.
        #[arg(long)]
        skew: bool,
        /// Generator ordering as comma-separated indices, smallest first.
        #[arg(long)]
        ordering: Option<String>,
        /// Emit the report as JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Also print the Hilbert function up to this degree.
        #[arg(long)]
        degree: Option<usize>,
        /// Bound on equality-orbit size.
        #[arg(long, default_value_t = DEFAULT_ORBIT_CAP)]
        max_orbit: usize,
    },
    /// Enumerate all quantum binomial classes of one order and cross-check
    /// the structural equivalence on each.
    Survey {
        n: usize,
        /// Emit the census as JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Write the census to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Bound on equality-orbit size.
        #[arg(long, default_value_t = DEFAULT_ORBIT_CAP)]
        max_orbit: usize,
    },
    /// Normal form of a word in the monoid of a set.
    Nf {
        /// Path to a set document (JSON).
        path: PathBuf,
        /// Word as comma-separated generator indices.
        word: String,
        /// Generator ordering as comma-separated indices, smallest first.
        #[arg(long)]
        ordering: Option<String>,
        /// Bound on equality-orbit size.
        #[arg(long, default_value_t = DEFAULT_ORBIT_CAP)]
        max_orbit: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.cmd {
        Cmd::Check {
            path,
            theorem,
            skew,
            ordering,
            json,
            degree,
            max_orbit,
        } => cmd_check(&path, theorem, skew, ordering.as_deref(), json, degree, max_orbit),
        Cmd::Survey {
            n,
            json,
            out,
            max_orbit,
        } => cmd_survey(n, json, out.as_deref(), max_orbit),
        Cmd::Nf {
            path,
            word,
            ordering,
            max_orbit,
        } => cmd_nf(&path, &word, ordering.as_deref(), max_orbit),
    };
    match code {
        Ok(c) => ExitCode::from(c),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

fn input_err(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

fn engine_err(e: Error) -> Failure {
    let code = match e {
        Error::OrbitCapExceeded { .. } => EXIT_RESOURCE,
        _ => EXIT_INPUT,
    };
    Failure {
        code,
        message: e.to_string(),
    }
}

fn load_document(path: &std::path::Path) -> Result<SetDocument, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| input_err(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| input_err(format!("{}: {e}", path.display())))
}

fn parse_word(s: &str, n: usize) -> Result<Vec<u8>, Failure> {
    let word: Vec<u8> = s
        .split(',')
        .map(|t| t.trim().parse::<u8>())
        .collect::<Result<_, _>>()
        .map_err(|e| input_err(format!("bad word {s:?}: {e}")))?;
    if let Some(&c) = word.iter().find(|&&c| c as usize >= n) {
        return Err(input_err(format!("letter {c} out of range for n = {n}")));
    }
    Ok(word)
}

fn parse_ordering(s: Option<&str>, doc: &SetDocument) -> Result<Option<LetterOrder>, Failure> {
    let listing = match (s, &doc.ordering) {
        (Some(s), _) => Some(parse_word(s, doc.n)?),
        (None, Some(listing)) => Some(listing.clone()),
        (None, None) => None,
    };
    listing
        .map(|l| LetterOrder::from_listing(&l).map_err(engine_err))
        .transpose()
}

fn fmt_word(w: &[u8]) -> String {
    w.iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[derive(Serialize)]
struct CheckOutput {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    n: usize,
    properties: PropertyReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    skew: Option<SkewReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    theorem: Option<TheoremReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hilbert_dims: Option<Vec<usize>>,
}

#[allow(clippy::too_many_arguments)]
fn cmd_check(
    path: &std::path::Path,
    theorem: bool,
    skew: bool,
    ordering: Option<&str>,
    json: bool,
    degree: Option<usize>,
    max_orbit: usize,
) -> Result<u8, Failure> {
    let doc = load_document(path)?;
    let set = doc.build().map_err(input_err)?;
    let engine = Engine::with_cap(&set, max_orbit);
    let properties = set.check_properties();
    let mut ok = properties.quantum_binomial();

    let skew_report = if skew {
        let order = match parse_ordering(ordering, &doc)? {
            Some(order) => Some(order),
            None => engine
                .find_skew_ordering()
                .map_err(engine_err)?
                .map(|l| LetterOrder::from_listing(&l).expect("search returns valid listings")),
        };
        match order {
            Some(order) => {
                let report = engine.is_skew_type(&order).map_err(engine_err)?;
                ok &= report.accepted();
                Some(report)
            }
            None => {
                ok = false;
                None
            }
        }
    } else {
        None
    };

    let mut consistent = true;
    let theorem_report = if theorem {
        let report = engine.main_theorem_report().map_err(engine_err)?;
        ok &= report.cond_garside
            && report.cond_regular_quantum
            && report.cond_skew
            && report.cond_ybe;
        consistent = report.consistent;
        Some(report)
    } else {
        None
    };

    let hilbert_dims = degree
        .map(|d| engine.hilbert_dims(d).map_err(engine_err))
        .transpose()?;

    let output = CheckOutput {
        name: doc.name.clone(),
        n: set.n(),
        properties,
        skew: skew_report,
        theorem: theorem_report,
        hilbert_dims,
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&output).expect("serializable"));
    } else {
        print_check_text(&output);
    }
    if !consistent {
        return Ok(EXIT_CONSISTENCY);
    }
    Ok(if ok { 0 } else { EXIT_PROPERTY })
}

fn print_check_text(out: &CheckOutput) {
    if let Some(name) = &out.name {
        println!("set: {name} (n = {})", out.n);
    } else {
        println!("set: n = {}", out.n);
    }
    let p = &out.properties;
    for (label, value) in [
        ("involutive", p.involutive),
        ("left nondegenerate", p.left_nondegenerate),
        ("right nondegenerate", p.right_nondegenerate),
        ("square-free", p.square_free),
        ("quantum binomial", p.quantum_binomial()),
        ("lri", p.lri),
        ("cyclic", p.cyclic()),
        ("braided", p.braided),
    ] {
        println!("  {label:<20} {value}");
    }
    println!("  {:<20} {}", "fixed points", p.fixed_points.len());
    println!("  {:<20} {}", "relations", p.relation_count);
    if let Some(s) = &out.skew {
        println!("skew type (ordering {}):", fmt_word(&s.ordering));
        println!("  {:<20} {}", "(i) occurrences", s.cond_i);
        println!("  {:<20} {}", "(ii) desc = asc", s.cond_ii);
        println!("  {:<20} {}", "(iii) groebner", s.cond_iii);
    }
    if let Some(t) = &out.theorem {
        println!("structural equivalence:");
        println!("  {:<20} {}", "regular garside", t.cond_garside);
        println!("  {:<20} {}", "regular quantum", t.cond_regular_quantum);
        println!("  {:<20} {}", "skew type", t.cond_skew);
        println!("  {:<20} {}", "braided (ybe)", t.cond_ybe);
        println!("  {:<20} {}", "consistent", t.consistent);
        if let Some(d) = &t.delta {
            println!("  {:<20} {}", "delta", fmt_word(d));
        }
        if let Some(o) = &t.skew_ordering {
            println!("  {:<20} {}", "skew ordering", fmt_word(o));
        }
    }
    if let Some(dims) = &out.hilbert_dims {
        println!("hilbert dims: {dims:?}");
    }
}

fn cmd_survey(
    n: usize,
    json: bool,
    out: Option<&std::path::Path>,
    max_orbit: usize,
) -> Result<u8, Failure> {
    if n == 0 || n > MAX_SURVEY_N {
        return Err(input_err(format!(
            "order {n} outside supported bound 1..={MAX_SURVEY_N}"
        )));
    }
    let report = match harness::survey(n, max_orbit) {
        Ok(report) => report,
        Err(SurveyError::Consistency { detail, r_table }) => {
            let n_ = n;
            let set = quadset::QuadraticSet::from_table(n_, r_table).expect("census table");
            let dump = SetDocument::from_set(Some("violation".into()), &set);
            eprintln!(
                "consistency violation ({detail}); offending set:\n{}",
                serde_json::to_string_pretty(&dump).expect("serializable")
            );
            return Ok(EXIT_CONSISTENCY);
        }
        Err(SurveyError::Resource(e)) => return Err(engine_err(e)),
    };
    let rendered = if json {
        serde_json::to_string_pretty(&report).expect("serializable")
    } else {
        let mut text = format!(
            "n = {}: {} classes ({} raw tables), {} braided\n",
            report.n, report.class_count, report.raw_count, report.braided_classes
        );
        for (i, record) in report.records.iter().enumerate() {
            text.push_str(&format!(
                "  class {:>2}: braided={:<5} garside={:<5} skew={:<5} quantum={:<5} sf_dims={:?}\n",
                i,
                record.properties.braided,
                record.theorem.cond_garside,
                record.theorem.cond_skew,
                record.theorem.cond_regular_quantum,
                record.sf_dims,
            ));
        }
        text
    };
    match out {
        Some(path) => std::fs::write(path, rendered.as_bytes())
            .map_err(|e| input_err(format!("{}: {e}", path.display())))?,
        None => print!("{rendered}{}", if json { "\n" } else { "" }),
    }
    Ok(0)
}

fn cmd_nf(
    path: &std::path::Path,
    word: &str,
    ordering: Option<&str>,
    max_orbit: usize,
) -> Result<u8, Failure> {
    let doc = load_document(path)?;
    let set = doc.build().map_err(input_err)?;
    let word = parse_word(word, set.n())?;
    let order = parse_ordering(ordering, &doc)?.unwrap_or_else(|| LetterOrder::identity(set.n()));
    let engine = Engine::with_cap(&set, max_orbit);
    let nf = engine.normal_form(&word, &order).map_err(engine_err)?;
    let size = engine.orbit(&word).map_err(engine_err)?.size();
    println!("{} (orbit size {size})", fmt_word(&nf));
    Ok(0)
}
