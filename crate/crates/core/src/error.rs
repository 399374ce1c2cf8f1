use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two distinct pairs map to the same image, so the table is not a bijection.
    #[error("NotABijection at ({x2}, {y2}): image ({u}, {v}) already taken by ({x1}, {y1})")]
    NotABijection {
        x1: u8,
        y1: u8,
        x2: u8,
        y2: u8,
        u: u8,
        v: u8,
    },

    #[error("index {value} out of range for n = {n}")]
    IndexOutOfRange { value: usize, n: usize },

    #[error("row {row} of the left action table is not a permutation of 0..n-1")]
    NotAPermutation { row: usize },

    /// The orbit closure would exceed the configured bound. Raise the cap and
    /// retry; a partial orbit is never returned.
    #[error("orbit size exceeds cap {cap}")]
    OrbitCapExceeded { cap: usize },

    #[error("no unique square-free element of maximal degree exists")]
    NoCandidateDelta,

    /// The pair is a fixed point of `r`, so no defining relation contains it.
    #[error("no relation contains the monomial ({x}, {y})")]
    RelationLookupFailed { x: u8, y: u8 },

    #[error("ordering is not a permutation of the generators")]
    InvalidOrdering,

    /// A word whose construction requires square-freeness was not square-free.
    #[error("word is not square-free in the monoid")]
    NotSquareFree,
}
