//! Divisor structure of a candidate Garside element and the regular-Garside
//! verdict.
//!
//! Divisors are read off the orbit of the candidate: `a` left-divides `delta`
//! exactly when some spelling of `delta` starts with a spelling of `a`, so the
//! graded divisor sets are the classes of prefixes (resp. suffixes) of the
//! orbit members.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::Error;
use crate::koszul::regular_presentation_in;
use crate::presentations::relations;
use crate::set::QuadraticSet;
use crate::words::{Engine, LetterOrder, Word};
use crate::Result;

/// Graded left and right divisor sets, as lex-min class representatives;
/// index = degree, including the empty word and the element itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisorSets {
    pub left: Vec<BTreeSet<Word>>,
    pub right: Vec<BTreeSet<Word>>,
}

impl DivisorSets {
    pub fn left_counts(&self) -> Vec<usize> {
        self.left.iter().map(|s| s.len()).collect()
    }

    pub fn right_counts(&self) -> Vec<usize> {
        self.right.iter().map(|s| s.len()).collect()
    }
}

/// Full verdict for the regular-Garside conditions on the unique square-free
/// element of maximal degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GarsideReport {
    pub delta: Word,
    /// The candidate has a regular presentation by n distinct letters.
    pub delta_regular: bool,
    pub left_divisors: Vec<BTreeSet<Word>>,
    pub right_divisors: Vec<BTreeSet<Word>>,
    /// Left and right divisor sets coincide.
    pub sigma_equal: bool,
    /// Every generator divides the candidate.
    pub generates: bool,
    /// `delta a = delta b` (and `a delta = b delta`) forces `a = b` on divisors.
    pub delta_cancel: bool,
    /// Minimal common divisor-multiple of each pair of atoms.
    pub atom_lcms: BTreeMap<(u8, u8), Word>,
    /// Each atom pair has a unique minimal common multiple inside the divisor
    /// set, and it agrees with the Ore completion.
    pub lcm_ok: bool,
    /// All generators and relators lie inside the divisor set.
    pub comprehensive: bool,
    /// Every square-free element of degree <= n divides the candidate on both
    /// sides.
    pub square_free_coverage: bool,
}

impl GarsideReport {
    pub fn all_ok(&self) -> bool {
        self.delta_regular
            && self.sigma_equal
            && self.generates
            && self.delta_cancel
            && self.lcm_ok
            && self.comprehensive
            && self.square_free_coverage
    }
}

/// One step ladder of relation lookups along an ordered suffix, ending in the
/// letter that extends the suffix product back by one generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaChain {
    pub xi: Vec<u8>,
    pub eta: Vec<u8>,
}

impl EtaChain {
    pub fn final_eta(&self) -> u8 {
        *self.eta.last().unwrap()
    }
}

impl Engine<'_> {
    /// Graded left and right divisors of a square-free element.
    pub fn divisors(&self, delta: &[u8]) -> Result<DivisorSets> {
        if !self.is_square_free_word(delta)? {
            return Err(Error::NotSquareFree);
        }
        let orbit = self.orbit(delta)?;
        let k = delta.len();
        let mut left = vec![BTreeSet::new(); k + 1];
        let mut right = vec![BTreeSet::new(); k + 1];
        for member in orbit.iter() {
            for d in 0..=k {
                let prefix = &member[..d];
                let suffix = &member[k - d..];
                left[d].insert(self.orbit(prefix)?.representative().clone());
                right[d].insert(self.orbit(suffix)?.representative().clone());
            }
        }
        Ok(DivisorSets { left, right })
    }

    /// The unique length-2 common multiple `a x = b y` of two distinct atoms,
    /// from the Ore condition; absent when existence or uniqueness fails.
    pub fn atom_lcm(&self, a: u8, b: u8) -> Result<Option<Word>> {
        assert_ne!(a, b);
        let n = self.set().n() as u8;
        let mut found: Option<Word> = None;
        let mut count = 0usize;
        for x in 0..n {
            for y in 0..n {
                if self.equal(&[a, x], &[b, y])? {
                    count += 1;
                    found = Some(self.orbit(&[a, x])?.representative().clone());
                }
            }
        }
        Ok(if count == 1 { found } else { None })
    }

    /// Runs the full regular-Garside battery on the unique square-free element
    /// of degree n, if there is one.
    pub fn is_regular_garside(&self) -> Result<GarsideReport> {
        let n = self.set().n();
        let sf = self.square_free_elements(n)?;
        if sf[n].len() != 1 {
            return Err(Error::NoCandidateDelta);
        }
        let delta = sf[n][0].clone();
        let delta_orbit = self.orbit(&delta)?;
        let delta_regular = regular_presentation_in(&delta_orbit).is_some();

        let div = self.divisors(&delta)?;
        let sigma_equal = div.left == div.right;
        let generates = (0..n as u8).all(|x| div.left[1].contains(&vec![x]));

        // sigma as flat class list; degree is the word length
        let sigma: Vec<Word> = div.left.iter().flatten().cloned().collect();
        let id = LetterOrder::identity(n);
        let mut delta_cancel = true;
        for (pre, post) in [(true, false), (false, true)] {
            let mut seen: BTreeSet<Word> = BTreeSet::new();
            for a in &sigma {
                let mut w = Word::new();
                if pre {
                    w.extend_from_slice(&delta);
                }
                w.extend_from_slice(a);
                if post {
                    w.extend_from_slice(&delta);
                }
                if !seen.insert(self.normal_form(&w, &id)?) {
                    delta_cancel = false;
                }
            }
        }

        // prefix classes of each divisor, for divisibility inside sigma
        let mut prefix_classes: BTreeMap<&Word, Vec<BTreeSet<Word>>> = BTreeMap::new();
        for c in &sigma {
            let orbit = self.orbit(c)?;
            let mut by_len = vec![BTreeSet::new(); c.len() + 1];
            for member in orbit.iter() {
                for d in 0..=c.len() {
                    by_len[d].insert(self.orbit(&member[..d])?.representative().clone());
                }
            }
            prefix_classes.insert(c, by_len);
        }
        let divides = |u: &Word, c: &Word| -> bool {
            u.len() <= c.len() && prefix_classes[c][u.len()].contains(u)
        };

        let mut atom_lcms = BTreeMap::new();
        let mut lcm_ok = true;
        for s in 0..n as u8 {
            for t in (s + 1)..n as u8 {
                let ore = self.atom_lcm(s, t)?;
                let common: Vec<&Word> = sigma
                    .iter()
                    .filter(|c| divides(&vec![s], c) && divides(&vec![t], c))
                    .collect();
                let minimal: Vec<&&Word> = common
                    .iter()
                    .filter(|m| common.iter().all(|c| divides(m, c)))
                    .collect();
                match (&ore, minimal.as_slice()) {
                    (Some(lcm), [m]) if *lcm == ***m => {
                        atom_lcms.insert((s, t), lcm.clone());
                    }
                    _ => lcm_ok = false,
                }
            }
        }

        let comprehensive = generates
            && relations(self.set()).iter().all(|rel| {
                div.left[2]
                    .contains(rel.rhs.as_slice())
            });

        let mut square_free_coverage = true;
        for (d, reps) in sf.iter().enumerate() {
            for rep in reps {
                if !div.left[d].contains(rep) || !div.right[d].contains(rep) {
                    square_free_coverage = false;
                }
            }
        }

        Ok(GarsideReport {
            delta,
            delta_regular,
            left_divisors: div.left,
            right_divisors: div.right,
            sigma_equal,
            generates,
            delta_cancel,
            atom_lcms,
            lcm_ok,
            comprehensive,
            square_free_coverage,
        })
    }
}

/// Builds the relation ladder starting at positions `j, j+1` of the ordering:
/// each step looks up the relation containing the previous eta and the next
/// generator. Fails if a lookup lands on a fixed point of `r`.
pub fn eta_chain(set: &QuadraticSet, order: &LetterOrder, j: usize) -> Result<EtaChain> {
    let listing = order.listing();
    let n = listing.len();
    assert!(j + 1 < n, "j must index a generator with a successor");
    let lookup = |a: u8, b: u8| -> Result<(u8, u8)> {
        let (u, v) = set.apply(a, b);
        if (u, v) == (a, b) {
            Err(Error::RelationLookupFailed { x: a, y: b })
        } else {
            Ok((u, v))
        }
    };
    let (u, v) = lookup(listing[j], listing[j + 1])?;
    let mut chain = EtaChain {
        xi: vec![u],
        eta: vec![v],
    };
    for &next in &listing[j + 2..n] {
        let (u, v) = lookup(*chain.eta.last().unwrap(), next)?;
        chain.xi.push(u);
        chain.eta.push(v);
    }
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::set::QuadraticSet;

    #[test]
    fn e4_divisor_lattice() {
        let e4 = fixtures::e4();
        let eng = Engine::new(&e4);
        let div = eng.divisors(&[0, 1, 2, 3]).unwrap();
        assert_eq!(div.left_counts(), vec![1, 4, 6, 4, 1]);
        assert_eq!(div.left, div.right);
    }

    #[test]
    fn t4_divisors_are_subsets() {
        let t4 = QuadraticSet::trivial(4);
        let eng = Engine::new(&t4);
        let div = eng.divisors(&[0, 1, 2, 3]).unwrap();
        assert_eq!(div.left_counts(), vec![1, 4, 6, 4, 1]);
        assert_eq!(div.left, div.right);
    }

    #[test]
    fn divisors_reject_non_square_free_delta() {
        let e4 = fixtures::e4();
        let eng = Engine::new(&e4);
        assert_eq!(
            eng.divisors(&[0, 0, 1, 2]).unwrap_err(),
            Error::NotSquareFree
        );
    }

    #[test]
    fn atom_lcms_in_e4() {
        let e4 = fixtures::e4();
        let eng = Engine::new(&e4);
        // 0.2 = 3.1, so the lcm of atoms 0 and 3 is the class {02, 31}
        assert_eq!(eng.atom_lcm(0, 3).unwrap(), Some(vec![0, 2]));
        // 0.3 = 2.1
        assert_eq!(eng.atom_lcm(0, 2).unwrap(), Some(vec![0, 3]));

        let t3 = QuadraticSet::trivial(3);
        let eng = Engine::new(&t3);
        assert_eq!(eng.atom_lcm(0, 1).unwrap(), Some(vec![0, 1]));
    }

    #[test]
    fn degenerate_set_has_no_atom_lcm() {
        let d = fixtures::degenerate2();
        let eng = Engine::new(&d);
        assert_eq!(eng.atom_lcm(0, 1).unwrap(), None);
    }

    #[test]
    fn e4_is_regular_garside() {
        let e4 = fixtures::e4();
        let eng = Engine::new(&e4);
        let report = eng.is_regular_garside().unwrap();
        assert_eq!(report.delta, vec![0, 1, 2, 3]);
        assert!(report.all_ok(), "{report:?}");
        assert_eq!(report.atom_lcms.len(), 6);
    }

    #[test]
    fn t4_is_regular_garside() {
        let t4 = QuadraticSet::trivial(4);
        let eng = Engine::new(&t4);
        assert!(eng.is_regular_garside().unwrap().all_ok());
    }

    #[test]
    fn non_braided_set_has_no_candidate_delta() {
        let n4 = fixtures::n4();
        let eng = Engine::new(&n4);
        assert_eq!(eng.is_regular_garside().unwrap_err(), Error::NoCandidateDelta);
    }

    #[test]
    fn eta_chain_last_step_in_e4() {
        let e4 = fixtures::e4();
        let order = LetterOrder::identity(4);
        // 23 = 32 gives xi = 3, eta = 2
        let chain = eta_chain(&e4, &order, 2).unwrap();
        assert_eq!(chain.xi, vec![3]);
        assert_eq!(chain.final_eta(), 2);
    }

    #[test]
    fn eta_chain_in_trivial_set() {
        let t4 = QuadraticSet::trivial(4);
        let order = LetterOrder::identity(4);
        for j in 0..3 {
            let chain = eta_chain(&t4, &order, j).unwrap();
            assert_eq!(chain.xi, (j as u8 + 1..4).collect::<Vec<_>>());
            assert_eq!(chain.final_eta(), j as u8);
        }
    }

    #[test]
    fn eta_chain_product_identities_in_e4() {
        let e4 = fixtures::e4();
        let eng = Engine::new(&e4);
        let order = LetterOrder::identity(4);
        let chain = eta_chain(&e4, &order, 0).unwrap();
        // xi product equals x_{j+1} ... x_n in S
        assert!(eng.equal(&chain.xi, &[1, 2, 3]).unwrap());
        // x_{j+1} ... x_n . eta_j = x_j ... x_n in S
        let mut w = vec![1, 2, 3];
        w.push(chain.final_eta());
        assert!(eng.equal(&w, &[0, 1, 2, 3]).unwrap());
    }
}
