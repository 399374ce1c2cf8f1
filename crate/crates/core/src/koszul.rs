//! Koszul-dual data of the quadratic algebra: the dual presentation, graded
//! square-free dimensions, the combinatorial Frobenius property, and the
//! principal monomial.

use serde::Serialize;

use crate::presentations::{relations, Relation};
use crate::set::QuadraticSet;
use crate::words::{Engine, LetterOrder, Orbit, Word};
use crate::Result;

/// Presentation of the dual quadratic algebra on dual generators: one signed
/// binomial per original relation (`xi_j xi_i + xi_{i'} xi_{j'}`, the sign flip
/// is implicit) plus one square `xi_x^2` per generator. Dropping signs and
/// reading the squares as `xx = 0` gives the dual monoid-with-zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KoszulPresentation {
    pub binomials: Vec<Relation>,
    pub squares: Vec<u8>,
}

impl KoszulPresentation {
    pub fn relation_count(&self) -> usize {
        self.binomials.len() + self.squares.len()
    }
}

/// Mirrors the defining relations one-to-one into the dual presentation.
pub fn koszul_presentation(set: &QuadraticSet) -> KoszulPresentation {
    KoszulPresentation {
        binomials: relations(set),
        squares: (0..set.n() as u8).collect(),
    }
}

/// Graded square-free structure of the dual algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrobeniusReport {
    /// `dims[d]` = number of square-free elements of degree `d`, for
    /// `d = 0..=n+1`. The extra degree certifies that nothing survives past n.
    pub dims: Vec<usize>,
    /// Top degree is one-dimensional and degree n+1 is empty.
    pub socle_ok: bool,
    /// Every complementary-degree multiplication pairing is square and
    /// invertible over the two-element field.
    pub pairing_ok: bool,
    /// The dimension vector is the full binomial row.
    pub grassmann: bool,
    /// Lex-min representative of the unique square-free element of degree n.
    pub principal: Option<Word>,
    /// A degree-n spelling of the principal monomial by n distinct letters that
    /// is minimal in its orbit under the ordering it induces.
    pub regular_presentation: Option<Word>,
}

impl FrobeniusReport {
    pub fn frobenius(&self) -> bool {
        self.socle_ok && self.pairing_ok
    }
}

impl Engine<'_> {
    /// Decides the combinatorial Frobenius property of the dual algebra.
    pub fn frobenius_check(&self) -> Result<FrobeniusReport> {
        let n = self.set().n();
        let sf = self.square_free_elements(n + 1)?;
        let dims: Vec<usize> = sf.iter().map(|reps| reps.len()).collect();
        let socle_ok = dims[n] == 1 && dims[n + 1] == 0;
        let principal = if dims[n] == 1 {
            Some(sf[n][0].clone())
        } else {
            None
        };

        let mut pairing_ok = principal.is_some();
        if let Some(w) = &principal {
            for d in 0..=n {
                let rows = &sf[d];
                let cols = &sf[n - d];
                if rows.len() != cols.len() || rows.len() > 128 {
                    pairing_ok = false;
                    break;
                }
                let mut matrix = Vec::with_capacity(rows.len());
                for u in rows {
                    let mut bits: u128 = 0;
                    for (j, v) in cols.iter().enumerate() {
                        let mut prod = u.clone();
                        prod.extend_from_slice(v);
                        if self.equal(&prod, w)? {
                            bits |= 1u128 << j;
                        }
                    }
                    matrix.push(bits);
                }
                if rank_gf2(matrix) != rows.len() {
                    pairing_ok = false;
                    break;
                }
            }
        }

        let grassmann = (0..=n).all(|d| dims[d] == binomial(n, d)) && dims[n + 1] == 0;

        let regular_presentation = match &principal {
            Some(w) => {
                let orbit = self.orbit(w)?;
                regular_presentation_in(&orbit)
            }
            None => None,
        };

        Ok(FrobeniusReport {
            dims,
            socle_ok,
            pairing_ok,
            grassmann,
            principal,
            regular_presentation,
        })
    }

    /// True iff the dual algebra is Frobenius and the principal monomial has a
    /// regular presentation.
    pub fn is_regular_quantum_monoid(&self) -> Result<(bool, FrobeniusReport)> {
        let report = self.frobenius_check()?;
        let ok = report.frobenius() && report.regular_presentation.is_some();
        Ok((ok, report))
    }
}

/// Searches the orbit for a member with pairwise-distinct letters that is
/// minimal under the ordering it induces on the generators. Members are
/// scanned in lex order, so the result is deterministic.
pub(crate) fn regular_presentation_in(orbit: &Orbit) -> Option<Word> {
    for member in orbit.iter() {
        if !distinct_letters(member) {
            continue;
        }
        let order = LetterOrder::from_listing(member).expect("distinct letters");
        let key = order.key(member);
        if orbit.iter().all(|m| key <= order.key(m)) {
            return Some(member.clone());
        }
    }
    None
}

fn distinct_letters(w: &[u8]) -> bool {
    let mut mask: u64 = 0;
    for &c in w {
        if mask & (1 << c) != 0 {
            return false;
        }
        mask |= 1 << c;
    }
    true
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Rank of a 0/1 matrix over the two-element field, rows packed into bits.
fn rank_gf2(mut rows: Vec<u128>) -> usize {
    let mut rank = 0;
    for bit in 0..128 {
        let mask = 1u128 << bit;
        if let Some(pivot) = (rank..rows.len()).find(|&i| rows[i] & mask != 0) {
            rows.swap(rank, pivot);
            let lead = rows[rank];
            for (i, row) in rows.iter_mut().enumerate() {
                if i != rank && *row & mask != 0 {
                    *row ^= lead;
                }
            }
            rank += 1;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::set::QuadraticSet;

    #[test]
    fn dual_presentation_counts() {
        let t3 = QuadraticSet::trivial(3);
        let p = koszul_presentation(&t3);
        assert_eq!(p.binomials.len(), 3);
        assert_eq!(p.squares, vec![0, 1, 2]);
        assert_eq!(p.relation_count(), 6);

        let e4 = fixtures::e4();
        let p = koszul_presentation(&e4);
        assert_eq!(p.binomials, relations(&e4));
        assert_eq!(p.binomials.len(), 6);
        assert_eq!(p.squares.len(), 4);

        let t1 = QuadraticSet::trivial(1);
        let p = koszul_presentation(&t1);
        assert_eq!(p.binomials.len(), 0);
        assert_eq!(p.squares.len(), 1);
    }

    #[test]
    fn e4_is_frobenius_with_regular_socle() {
        let e4 = fixtures::e4();
        let eng = Engine::new(&e4);
        let report = eng.frobenius_check().unwrap();
        assert_eq!(report.dims, vec![1, 4, 6, 4, 1, 0]);
        assert!(report.socle_ok && report.pairing_ok && report.grassmann);
        assert_eq!(report.principal, Some(vec![0, 1, 2, 3]));
        assert_eq!(report.regular_presentation, Some(vec![0, 1, 2, 3]));
        assert!(eng.is_regular_quantum_monoid().unwrap().0);
    }

    #[test]
    fn t4_frobenius() {
        let t4 = QuadraticSet::trivial(4);
        let eng = Engine::new(&t4);
        let report = eng.frobenius_check().unwrap();
        assert_eq!(report.dims, vec![1, 4, 6, 4, 1, 0]);
        assert_eq!(report.principal, Some(vec![0, 1, 2, 3]));
        assert!(report.frobenius());
    }

    #[test]
    fn t5_is_regular_quantum_monoid() {
        let t5 = QuadraticSet::trivial(5);
        let eng = Engine::new(&t5);
        assert!(eng.is_regular_quantum_monoid().unwrap().0);
    }

    #[test]
    fn non_braided_set_fails_frobenius() {
        let n4 = fixtures::n4();
        let eng = Engine::new(&n4);
        let (ok, report) = eng.is_regular_quantum_monoid().unwrap();
        assert!(!ok);
        assert_eq!(report.dims, vec![1, 4, 6, 2, 0, 0]);
        assert!(!report.socle_ok && report.principal.is_none());
    }

    #[test]
    fn binomial_helper() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn gf2_rank() {
        assert_eq!(rank_gf2(vec![0b01, 0b10]), 2);
        assert_eq!(rank_gf2(vec![0b11, 0b11]), 1);
        assert_eq!(rank_gf2(vec![0]), 0);
    }
}
