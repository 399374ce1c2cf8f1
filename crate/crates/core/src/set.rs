//! Finite quadratic sets and their pointwise properties.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::Result;

/// A finite set `X = {0, .., n-1}` with a bijection `r : X x X -> X x X`.
///
/// We write `r(x, y) = (l, r)` where `l = left[x][y]` is the left action of `x`
/// on `y` and `r = right[y][x]` is the right action of `y` on `x`. The tables
/// are derived once at construction; the value is immutable afterwards.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuadraticSet {
    n: usize,
    /// Row-major: `r_table[x * n + y] = r(x, y)`.
    r_table: Vec<(u8, u8)>,
    r_inv: Vec<(u8, u8)>,
    left: Vec<Vec<u8>>,
    right: Vec<Vec<u8>>,
}

impl QuadraticSet {
    /// Builds a set from the full `r`-table in row-major order. Rejects tables
    /// that are not bijections of the `n^2` pairs.
    pub fn from_table(n: usize, r_table: Vec<(u8, u8)>) -> Result<Self> {
        assert!(n >= 1, "n must be positive");
        if r_table.len() != n * n {
            return Err(Error::IndexOutOfRange {
                value: r_table.len(),
                n,
            });
        }
        let mut seen: Vec<Option<(u8, u8)>> = vec![None; n * n];
        for (idx, &(u, v)) in r_table.iter().enumerate() {
            let (x, y) = ((idx / n) as u8, (idx % n) as u8);
            if (u as usize) >= n || (v as usize) >= n {
                return Err(Error::IndexOutOfRange {
                    value: u.max(v) as usize,
                    n,
                });
            }
            let slot = u as usize * n + v as usize;
            if let Some((x1, y1)) = seen[slot] {
                return Err(Error::NotABijection {
                    x1,
                    y1,
                    x2: x,
                    y2: y,
                    u,
                    v,
                });
            }
            seen[slot] = Some((x, y));
        }
        let mut r_inv = vec![(0u8, 0u8); n * n];
        for (slot, pre) in seen.iter().enumerate() {
            r_inv[slot] = pre.unwrap();
        }
        let left = (0..n)
            .map(|x| (0..n).map(|y| r_table[x * n + y].0).collect())
            .collect();
        let right = (0..n)
            .map(|y| (0..n).map(|x| r_table[x * n + y].1).collect())
            .collect();
        Ok(QuadraticSet {
            n,
            r_table,
            r_inv,
            left,
            right,
        })
    }

    /// Builds the set with `r(x, y) = (L[x](y), L[y]^{-1}(x))` from a family of
    /// permutations, one per generator. The result satisfies lri by
    /// construction; involutivity is not guaranteed and must be checked.
    pub fn from_left_action(n: usize, actions: &[Vec<u8>]) -> Result<Self> {
        assert!(n >= 1, "n must be positive");
        if actions.len() != n {
            return Err(Error::IndexOutOfRange {
                value: actions.len(),
                n,
            });
        }
        let mut inverses = Vec::with_capacity(n);
        for (row, p) in actions.iter().enumerate() {
            if p.len() != n {
                return Err(Error::NotAPermutation { row });
            }
            let mut inv = vec![u8::MAX; n];
            for (i, &v) in p.iter().enumerate() {
                if (v as usize) >= n || inv[v as usize] != u8::MAX {
                    return Err(Error::NotAPermutation { row });
                }
                inv[v as usize] = i as u8;
            }
            inverses.push(inv);
        }
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                table.push((actions[x][y], inverses[y][x]));
            }
        }
        Self::from_table(n, table)
    }

    /// The trivial set `r(x, y) = (y, x)`, whose monoid is free abelian.
    pub fn trivial(n: usize) -> Self {
        let identity: Vec<u8> = (0..n as u8).collect();
        let actions = vec![identity; n];
        Self::from_left_action(n, &actions).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r_table(&self) -> &[(u8, u8)] {
        &self.r_table
    }

    #[inline]
    pub fn apply(&self, x: u8, y: u8) -> (u8, u8) {
        self.r_table[x as usize * self.n + y as usize]
    }

    #[inline]
    pub fn apply_inv(&self, x: u8, y: u8) -> (u8, u8) {
        self.r_inv[x as usize * self.n + y as usize]
    }

    /// `left_action(x, y)` is the first component of `r(x, y)`.
    #[inline]
    pub fn left_action(&self, x: u8, y: u8) -> u8 {
        self.left[x as usize][y as usize]
    }

    /// `right_action(y, x)` is the second component of `r(x, y)`.
    #[inline]
    pub fn right_action(&self, y: u8, x: u8) -> u8 {
        self.right[y as usize][x as usize]
    }

    /// If the set was built from a left action (or satisfies lri), these rows
    /// are exactly that action.
    pub fn left_rows(&self) -> &[Vec<u8>] {
        &self.left
    }

    /// Computes every pointwise property of `r` by exhaustive evaluation over
    /// pairs and triples.
    pub fn check_properties(&self) -> PropertyReport {
        let n = self.n;
        let is_perm = |row: &Vec<u8>| {
            let mut seen = vec![false; n];
            row.iter().all(|&v| {
                let v = v as usize;
                !std::mem::replace(&mut seen[v], true)
            })
        };
        let left_nondegenerate = self.left.iter().all(is_perm);
        let right_nondegenerate = self.right.iter().all(is_perm);

        let mut involutive = true;
        let mut square_free = true;
        let mut lri = true;
        let (mut cl1, mut cl2, mut cr1, mut cr2) = (true, true, true, true);
        let mut fixed_points = Vec::new();
        let mut relation_words: BTreeSet<(Vec<u8>, Vec<u8>)> = BTreeSet::new();

        for x in 0..n as u8 {
            for y in 0..n as u8 {
                let (u, v) = self.apply(x, y);
                involutive &= self.apply(u, v) == (x, y);
                if (u, v) == (x, y) {
                    fixed_points.push((x, y));
                } else {
                    let a = vec![x, y];
                    let b = vec![u, v];
                    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                    relation_words.insert((lo, hi));
                }
                if x == y {
                    square_free &= (u, v) == (x, y);
                }
                let lx = self.left[x as usize][y as usize];
                let rx = self.right[x as usize][y as usize];
                lri &= self.right[x as usize][lx as usize] == y
                    && self.left[x as usize][rx as usize] == y;

                let yx = self.right[x as usize][y as usize]; // y <| x
                let xy = self.left[x as usize][y as usize]; // x |> y
                cl1 &= self.left[yx as usize][x as usize] == self.left[y as usize][x as usize];
                cl2 &= self.left[xy as usize][x as usize] == self.left[y as usize][x as usize];
                cr1 &= self.right[xy as usize][x as usize] == self.right[y as usize][x as usize];
                cr2 &= self.right[yx as usize][x as usize] == self.right[y as usize][x as usize];
            }
        }

        let (mut l1, mut r1, mut lr3, mut braided) = (true, true, true, true);
        let r12 = |w: (u8, u8, u8)| {
            let (u, v) = self.apply(w.0, w.1);
            (u, v, w.2)
        };
        let r23 = |w: (u8, u8, u8)| {
            let (u, v) = self.apply(w.1, w.2);
            (w.0, u, v)
        };
        for x in 0..n as u8 {
            for y in 0..n as u8 {
                for z in 0..n as u8 {
                    let lt = |a: u8, b: u8| self.left[a as usize][b as usize];
                    let rt = |a: u8, b: u8| self.right[a as usize][b as usize];
                    l1 &= lt(x, lt(y, z)) == lt(lt(x, y), lt(rt(y, x), z));
                    r1 &= rt(z, rt(y, x)) == rt(rt(z, y), rt(lt(y, z), x));
                    lr3 &= rt(lt(rt(y, x), z), lt(x, y)) == lt(rt(lt(y, z), x), rt(z, y));
                    let w = (x, y, z);
                    braided &= r12(r23(r12(w))) == r23(r12(r23(w)));
                }
            }
        }

        PropertyReport {
            involutive,
            left_nondegenerate,
            right_nondegenerate,
            square_free,
            lri,
            cl1,
            cl2,
            cr1,
            cr2,
            l1,
            r1,
            lr3,
            braided,
            fixed_points,
            relation_count: relation_words.len(),
        }
    }

    /// Relabels the generators by `perm` (old index -> new index).
    pub fn relabel(&self, perm: &[u8]) -> QuadraticSet {
        let n = self.n;
        let mut inv = vec![0u8; n];
        for (i, &v) in perm.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        let mut table = vec![(0u8, 0u8); n * n];
        for x in 0..n {
            for y in 0..n {
                let (u, v) = self.apply(inv[x], inv[y]);
                table[x * n + y] = (perm[u as usize], perm[v as usize]);
            }
        }
        QuadraticSet::from_table(n, table).expect("relabeling preserves bijectivity")
    }

    /// The relabeling of this set whose flattened `r`-table is
    /// lexicographically minimal over all `n!` relabelings. Idempotent, and
    /// constant on isomorphism classes.
    pub fn canonical_form(&self) -> QuadraticSet {
        let n = self.n;
        let mut best: Option<QuadraticSet> = None;
        for perm in (0..n as u8).permutations(n) {
            let candidate = self.relabel(&perm);
            match &best {
                Some(b) if candidate.r_table >= b.r_table => {}
                _ => best = Some(candidate),
            }
        }
        best.unwrap()
    }
}

/// Verdicts for every pointwise property of the map `r`, plus the fixed points
/// of `r` and the number of defining relations of the associated monoid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub involutive: bool,
    pub left_nondegenerate: bool,
    pub right_nondegenerate: bool,
    pub square_free: bool,
    pub lri: bool,
    pub cl1: bool,
    pub cl2: bool,
    pub cr1: bool,
    pub cr2: bool,
    pub l1: bool,
    pub r1: bool,
    pub lr3: bool,
    pub braided: bool,
    pub fixed_points: Vec<(u8, u8)>,
    pub relation_count: usize,
}

impl PropertyReport {
    pub fn nondegenerate(&self) -> bool {
        self.left_nondegenerate && self.right_nondegenerate
    }

    /// Nondegenerate, involutive and square-free.
    pub fn quantum_binomial(&self) -> bool {
        self.nondegenerate() && self.involutive && self.square_free
    }

    pub fn cyclic(&self) -> bool {
        self.cl1 && self.cl2 && self.cr1 && self.cr2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn transposition_map_is_valid() {
        let s = QuadraticSet::trivial(2);
        for x in 0..2u8 {
            for y in 0..2u8 {
                assert_eq!(s.apply(x, y), (y, x));
            }
        }
        // left[x] is the identity row for every x
        for x in 0..2 {
            assert_eq!(s.left_rows()[x], vec![0, 1]);
        }
    }

    #[test]
    fn non_injective_table_rejected() {
        // both (0,1) and (1,0) sent to (0,1)
        let table = vec![(0, 0), (0, 1), (0, 1), (1, 1)];
        let err = QuadraticSet::from_table(2, table).unwrap_err();
        assert!(matches!(err, Error::NotABijection { .. }));
    }

    #[test]
    fn out_of_range_table_rejected() {
        let table = vec![(0, 0), (0, 2), (1, 0), (1, 1)];
        let err = QuadraticSet::from_table(2, table).unwrap_err();
        assert!(matches!(err, Error::IndexOutOfRange { .. }));
    }

    #[test]
    fn e4_roundtrips_through_its_r_table() {
        let e4 = fixtures::e4();
        let again = QuadraticSet::from_table(4, e4.r_table().to_vec()).unwrap();
        assert_eq!(e4, again);
        // right[y] is the inverse of left[y] (lri construction)
        for y in 0..4u8 {
            for x in 0..4u8 {
                let l = e4.left_action(y, x);
                assert_eq!(e4.right_action(y, l), x);
            }
        }
    }

    #[test]
    fn bad_left_action_rejected() {
        let err = QuadraticSet::from_left_action(3, &[vec![0, 0, 1], vec![0, 1, 2], vec![0, 1, 2]])
            .unwrap_err();
        assert_eq!(err, Error::NotAPermutation { row: 0 });
    }

    #[test]
    fn trivial_set_properties() {
        let t3 = QuadraticSet::trivial(3);
        let p = t3.check_properties();
        assert!(p.involutive && p.braided && p.quantum_binomial() && p.lri);
        assert_eq!(p.relation_count, 3);
    }

    #[test]
    fn t4_properties_and_counts() {
        let p = QuadraticSet::trivial(4).check_properties();
        assert!(
            p.involutive
                && p.nondegenerate()
                && p.square_free
                && p.lri
                && p.cyclic()
                && p.l1
                && p.r1
                && p.lr3
                && p.braided
        );
        assert_eq!(p.fixed_points, vec![(0, 0), (1, 1), (2, 2), (3, 3)]);
        assert_eq!(p.relation_count, 6);
    }

    #[test]
    fn e4_properties() {
        let p = fixtures::e4().check_properties();
        assert!(p.quantum_binomial() && p.lri && p.cyclic());
        assert!(p.l1 && p.r1 && p.lr3 && p.braided);
        assert_eq!(p.fixed_points, vec![(0, 0), (1, 1), (2, 2), (3, 3)]);
        assert_eq!(p.relation_count, 6);
    }

    #[test]
    fn non_involutive_left_action_may_fail_bijectivity() {
        // L0 a 3-cycle, L1 = L2 = id sends both (0,2) and (1,0) to (0,0)
        let err = QuadraticSet::from_left_action(
            3,
            &[vec![1, 2, 0], vec![0, 1, 2], vec![0, 1, 2]],
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotABijection { .. }));
    }

    #[test]
    fn four_cycle_table_is_not_involutive() {
        // r cycles (0,0) -> (0,1) -> (1,0) -> (1,1) -> (0,0)
        let s = QuadraticSet::from_table(2, vec![(0, 1), (1, 0), (1, 1), (0, 0)]).unwrap();
        assert_eq!(s.apply(0, 0), (0, 1));
        assert_eq!(s.apply(0, 1), (1, 0));
        assert!(!s.check_properties().involutive);
        assert!(!s.check_properties().square_free);
    }

    #[test]
    fn canonical_form_fixes_trivial_set() {
        let t3 = QuadraticSet::trivial(3);
        assert_eq!(t3.canonical_form(), t3.canonical_form().canonical_form());
        assert_eq!(t3.canonical_form().r_table(), t3.canonical_form().r_table());
    }

    #[test]
    fn canonical_form_constant_on_relabelings() {
        let e4 = fixtures::e4();
        let relabeled = e4.relabel(&[2, 3, 0, 1]);
        assert_eq!(e4.canonical_form(), relabeled.canonical_form());
    }

    #[test]
    fn canonical_form_separates_non_isomorphic_sets() {
        // the two quantum binomial lri classes at n = 3
        let t3 = QuadraticSet::trivial(3);
        let other = QuadraticSet::from_left_action(
            3,
            &[vec![0, 2, 1], vec![0, 1, 2], vec![0, 1, 2]],
        )
        .unwrap();
        assert!(other.check_properties().quantum_binomial());
        assert_ne!(t3.canonical_form(), other.canonical_form());
    }
}
