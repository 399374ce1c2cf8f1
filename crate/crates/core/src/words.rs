//! Words over the generators and equality in the monoid `S(X, r)`.
//!
//! Two words of equal length are equal in `S` exactly when one can be carried
//! to the other by applying `r` (or its inverse) at adjacent positions, so each
//! equality class is the orbit of the group generated by those moves. All
//! word-level questions reduce to orbit closures, computed breadth-first under
//! a hard size cap.

use std::cell::RefCell;
use std::collections::{HashMap, HashSet, VecDeque};
use std::rc::Rc;

use crate::error::Error;
use crate::set::QuadraticSet;
use crate::Result;

/// A word over the generators: a finite sequence of indices in `0..n`.
pub type Word = Vec<u8>;

/// Default bound on orbit size. On overflow the operation fails loudly rather
/// than returning a wrong answer.
pub const DEFAULT_ORBIT_CAP: usize = 100_000;

/// The full equality class of a word, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    members: Vec<Word>,
}

impl Orbit {
    /// Lexicographically least member under the identity ordering.
    pub fn representative(&self) -> &Word {
        &self.members[0]
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.members.binary_search(w).is_ok()
    }

    pub fn members(&self) -> &[Word] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.members.iter()
    }
}

/// A total order on the generators, given as a listing from smallest to
/// largest. Words of equal length compare lexicographically by rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterOrder {
    rank: Vec<u8>,
}

impl LetterOrder {
    pub fn identity(n: usize) -> Self {
        LetterOrder {
            rank: (0..n as u8).collect(),
        }
    }

    /// `listing[i]` is the i-th smallest generator.
    pub fn from_listing(listing: &[u8]) -> Result<Self> {
        let n = listing.len();
        let mut rank = vec![u8::MAX; n];
        for (i, &c) in listing.iter().enumerate() {
            if (c as usize) >= n || rank[c as usize] != u8::MAX {
                return Err(Error::InvalidOrdering);
            }
            rank[c as usize] = i as u8;
        }
        Ok(LetterOrder { rank })
    }

    #[inline]
    pub fn rank(&self, c: u8) -> u8 {
        self.rank[c as usize]
    }

    pub fn key(&self, w: &[u8]) -> Vec<u8> {
        w.iter().map(|&c| self.rank(c)).collect()
    }

    /// The listing of generators from smallest to largest.
    pub fn listing(&self) -> Vec<u8> {
        let mut out = vec![0u8; self.rank.len()];
        for (c, &r) in self.rank.iter().enumerate() {
            out[r as usize] = c as u8;
        }
        out
    }
}

/// Orbit engine over one quadratic set. Orbits are memoized per queried word
/// for the lifetime of the engine; all results are value-identical to the
/// uncached computation.
pub struct Engine<'a> {
    set: &'a QuadraticSet,
    cap: usize,
    memo: RefCell<HashMap<Word, Rc<Orbit>>>,
}

impl<'a> Engine<'a> {
    pub fn new(set: &'a QuadraticSet) -> Self {
        Self::with_cap(set, DEFAULT_ORBIT_CAP)
    }

    pub fn with_cap(set: &'a QuadraticSet, cap: usize) -> Self {
        assert!(cap >= 1);
        Engine {
            set,
            cap,
            memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn set(&self) -> &QuadraticSet {
        self.set
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Breadth-first closure of `{w}` under `r` and `r^{-1}` applied at every
    /// adjacent position. Exact and complete if the size stays within the cap.
    pub fn orbit(&self, w: &[u8]) -> Result<Rc<Orbit>> {
        if let Some(o) = self.memo.borrow().get(w) {
            return Ok(Rc::clone(o));
        }
        let members = self.orbit_raw(w)?;
        let orbit = Rc::new(Orbit { members });
        self.memo
            .borrow_mut()
            .insert(w.to_vec(), Rc::clone(&orbit));
        Ok(orbit)
    }

    fn orbit_raw(&self, w: &[u8]) -> Result<Vec<Word>> {
        let mut seen: HashSet<Word> = HashSet::new();
        let mut queue: VecDeque<Word> = VecDeque::new();
        seen.insert(w.to_vec());
        queue.push_back(w.to_vec());
        while let Some(cur) = queue.pop_front() {
            for i in 0..cur.len().saturating_sub(1) {
                let (a, b) = (cur[i], cur[i + 1]);
                for (u, v) in [self.set.apply(a, b), self.set.apply_inv(a, b)] {
                    if (u, v) == (a, b) {
                        continue;
                    }
                    let mut next = cur.clone();
                    next[i] = u;
                    next[i + 1] = v;
                    if !seen.contains(&next) {
                        if seen.len() >= self.cap {
                            return Err(Error::OrbitCapExceeded { cap: self.cap });
                        }
                        seen.insert(next.clone());
                        queue.push_back(next);
                    }
                }
            }
        }
        let mut members: Vec<Word> = seen.into_iter().collect();
        members.sort();
        Ok(members)
    }

    /// Equality in `S`. Words of different lengths are never equal: the
    /// presentation is length balanced.
    pub fn equal(&self, u: &[u8], v: &[u8]) -> Result<bool> {
        if u.len() != v.len() {
            return Ok(false);
        }
        if u == v {
            return Ok(true);
        }
        Ok(self.orbit(u)?.contains(&v.to_vec()))
    }

    /// The minimal member of the orbit under `order`; the unique normal form
    /// once the presentation is known to be of skew-polynomial type.
    pub fn normal_form(&self, w: &[u8], order: &LetterOrder) -> Result<Word> {
        let orbit = self.orbit(w)?;
        Ok(orbit
            .iter()
            .min_by_key(|m| order.key(m))
            .expect("orbit is nonempty")
            .clone())
    }

    /// True iff no member of the orbit contains two equal adjacent letters.
    pub fn is_square_free_word(&self, w: &[u8]) -> Result<bool> {
        let orbit = self.orbit(w)?;
        let ok = orbit.iter().all(|m| m.windows(2).all(|p| p[0] != p[1]));
        Ok(ok)
    }

    /// All first letters (heads) and last letters (tails) over the orbit.
    pub fn boundary_letters(&self, w: &[u8]) -> Result<(Vec<u8>, Vec<u8>)> {
        assert!(!w.is_empty());
        let orbit = self.orbit(w)?;
        let mut heads: Vec<u8> = orbit.iter().map(|m| m[0]).collect();
        let mut tails: Vec<u8> = orbit.iter().map(|m| *m.last().unwrap()).collect();
        heads.sort_unstable();
        heads.dedup();
        tails.sort_unstable();
        tails.dedup();
        Ok((heads, tails))
    }

    /// Lex-min representatives of the square-free elements of each degree
    /// `0..=max_len`, built by extending the previous degree one letter at a
    /// time. Any prefix of a square-free element is square-free, so pruning to
    /// square-free representatives loses nothing.
    pub fn square_free_elements(&self, max_len: usize) -> Result<Vec<Vec<Word>>> {
        let n = self.set.n();
        let mut by_degree: Vec<Vec<Word>> = vec![vec![Vec::new()]];
        for d in 1..=max_len {
            let mut reps: Vec<Word> = Vec::new();
            for base in &by_degree[d - 1] {
                for c in 0..n as u8 {
                    let mut w = base.clone();
                    w.push(c);
                    if !self.is_square_free_word(&w)? {
                        continue;
                    }
                    let rep = self.orbit(&w)?.representative().clone();
                    reps.push(rep);
                }
            }
            reps.sort();
            reps.dedup();
            by_degree.push(reps);
        }
        Ok(by_degree)
    }

    /// Number of elements of `S` of each degree `0..=max_deg`, i.e. the number
    /// of orbits on words of that length.
    pub fn hilbert_dims(&self, max_deg: usize) -> Result<Vec<usize>> {
        let n = self.set.n();
        let mut dims = Vec::with_capacity(max_deg + 1);
        for d in 0..=max_deg {
            let mut visited: HashSet<Word> = HashSet::new();
            let mut count = 0usize;
            let mut w: Word = vec![0; d];
            loop {
                if !visited.contains(&w) {
                    for m in self.orbit_raw(&w)? {
                        visited.insert(m);
                    }
                    count += 1;
                }
                if !next_word(&mut w, n) {
                    break;
                }
            }
            dims.push(count);
        }
        Ok(dims)
    }
}

/// Advances `w` to the next word over `0..n` in lex order; false at the last.
fn next_word(w: &mut [u8], n: usize) -> bool {
    for i in (0..w.len()).rev() {
        if (w[i] as usize) + 1 < n {
            w[i] += 1;
            for c in w.iter_mut().skip(i + 1) {
                *c = 0;
            }
            return true;
        }
    }
    false
}
