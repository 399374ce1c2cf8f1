//! The quadratic presentation of `S(X, r)`: defining relations, cancellation
//! and Ore checks, and skew-polynomial type.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::set::QuadraticSet;
use crate::words::{Engine, LetterOrder, Word};
use crate::Result;

/// One defining relation `lhs = rhs` between two words of length 2. The
/// lexicographically smaller side is stored as `rhs`, so the list of relations
/// is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
}

/// The defining relations: one per unordered pair `{(x,y), r(x,y)}` with
/// `r(x,y) != (x,y)`.
pub fn relations(set: &QuadraticSet) -> Vec<Relation> {
    let n = set.n() as u8;
    let mut out: Vec<Relation> = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let (u, v) = set.apply(x, y);
            if (u, v) == (x, y) {
                continue;
            }
            let a = vec![x, y];
            let b = vec![u, v];
            let (rhs, lhs) = if a < b { (a, b) } else { (b, a) };
            out.push(Relation { lhs, rhs });
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Exhaustive verdicts for 2-cancellation and the one-sided Ore conditions on
/// generators, with a witness for the first failure of each.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OreReport {
    pub cancellation: bool,
    /// Two distinct words found equal where cancellation forbids it.
    pub cancellation_witness: Option<(Word, Word)>,
    pub left_ore: bool,
    /// A pair `(s, t)` without a unique completion `sa = tb`.
    pub left_ore_witness: Option<(u8, u8)>,
    pub right_ore: bool,
    pub right_ore_witness: Option<(u8, u8)>,
}

impl OreReport {
    pub fn all_hold(&self) -> bool {
        self.cancellation && self.left_ore && self.right_ore
    }
}

/// Verdicts for the three conditions of a skew-polynomial presentation under a
/// fixed ordering of the generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkewReport {
    /// Listing of the generators from smallest to largest.
    pub ordering: Vec<u8>,
    /// Every off-diagonal monomial `xy` occurs in exactly one relation, and no
    /// diagonal monomial occurs in any.
    pub cond_i: bool,
    /// Every relation pairs a strictly descending word with a strictly
    /// ascending one, and the descending head is larger than the ascending one.
    pub cond_ii: bool,
    /// Every ascending word of length 3 is minimal in its orbit, so the
    /// relations form a Groebner basis.
    pub cond_iii: bool,
    pub witness: Option<SkewWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SkewWitness {
    Relation(Relation),
    Word(Word),
}

impl SkewReport {
    pub fn accepted(&self) -> bool {
        self.cond_i && self.cond_ii && self.cond_iii
    }
}

impl Engine<'_> {
    /// Checks 2-cancellation and the left and right Ore conditions on `X^2` by
    /// exhausting all generator pairs.
    pub fn ore_and_cancellation_check(&self) -> Result<OreReport> {
        let n = self.set().n() as u8;
        let mut report = OreReport {
            cancellation: true,
            cancellation_witness: None,
            left_ore: true,
            left_ore_witness: None,
            right_ore: true,
            right_ore_witness: None,
        };
        'cancel: for s in 0..n {
            for a in 0..n {
                for b in 0..n {
                    if a == b {
                        continue;
                    }
                    for (u, v) in [(vec![s, a], vec![s, b]), (vec![a, s], vec![b, s])] {
                        if self.equal(&u, &v)? {
                            report.cancellation = false;
                            report.cancellation_witness = Some((u, v));
                            break 'cancel;
                        }
                    }
                }
            }
        }
        for s in 0..n {
            for t in 0..n {
                if s == t {
                    continue;
                }
                let mut left_count = 0usize;
                let mut right_count = 0usize;
                for a in 0..n {
                    for b in 0..n {
                        if self.equal(&[s, a], &[t, b])? {
                            left_count += 1;
                        }
                        if self.equal(&[a, s], &[b, t])? {
                            right_count += 1;
                        }
                    }
                }
                if left_count != 1 && report.left_ore {
                    report.left_ore = false;
                    report.left_ore_witness = Some((s, t));
                }
                if right_count != 1 && report.right_ore {
                    report.right_ore = false;
                    report.right_ore_witness = Some((s, t));
                }
            }
        }
        Ok(report)
    }

    /// Decides skew-polynomial type for the given generator ordering.
    pub fn is_skew_type(&self, order: &LetterOrder) -> Result<SkewReport> {
        let rels = relations(self.set());
        let mut report = SkewReport {
            ordering: order.listing(),
            cond_i: cond_i(self.set(), &rels),
            cond_ii: true,
            cond_iii: true,
            witness: None,
        };
        for rel in &rels {
            if !cond_ii_holds(rel, order) {
                report.cond_ii = false;
                report.witness = Some(SkewWitness::Relation(rel.clone()));
                break;
            }
        }
        if report.cond_i && report.cond_ii {
            let listing = order.listing();
            let n = listing.len();
            'outer: for i in 0..n {
                for j in i..n {
                    for k in j..n {
                        let w = vec![listing[i], listing[j], listing[k]];
                        if self.normal_form(&w, order)? != w {
                            report.cond_iii = false;
                            report.witness = Some(SkewWitness::Word(w));
                            break 'outer;
                        }
                    }
                }
            }
        } else {
            report.cond_iii = false;
        }
        Ok(report)
    }

    /// First generator ordering (in lex order over listings) whose skew report
    /// is all-true, if any.
    pub fn find_skew_ordering(&self) -> Result<Option<Vec<u8>>> {
        let n = self.set().n();
        let rels = relations(self.set());
        if !cond_i(self.set(), &rels) {
            return Ok(None);
        }
        for listing in (0..n as u8).permutations(n) {
            let order = LetterOrder::from_listing(&listing).expect("valid listing");
            if !rels.iter().all(|rel| cond_ii_holds(rel, &order)) {
                continue;
            }
            if self.is_skew_type(&order)?.accepted() {
                return Ok(Some(listing));
            }
        }
        Ok(None)
    }
}

fn cond_i(set: &QuadraticSet, rels: &[Relation]) -> bool {
    let n = set.n();
    let mut count = vec![0usize; n * n];
    for rel in rels {
        for w in [&rel.lhs, &rel.rhs] {
            count[w[0] as usize * n + w[1] as usize] += 1;
        }
    }
    (0..n).all(|x| {
        (0..n).all(|y| {
            let c = count[x * n + y];
            if x == y {
                c == 0
            } else {
                c == 1
            }
        })
    })
}

fn cond_ii_holds(rel: &Relation, order: &LetterOrder) -> bool {
    let classify = |w: &Word| -> i8 {
        let (a, b) = (order.rank(w[0]), order.rank(w[1]));
        if a > b {
            1 // descending
        } else if a < b {
            -1 // ascending
        } else {
            0
        }
    };
    let (c1, c2) = (classify(&rel.lhs), classify(&rel.rhs));
    let (desc, asc) = match (c1, c2) {
        (1, -1) => (&rel.lhs, &rel.rhs),
        (-1, 1) => (&rel.rhs, &rel.lhs),
        _ => return false,
    };
    order.rank(desc[0]) > order.rank(asc[0])
}
