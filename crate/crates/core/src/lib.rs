//! Exact computation with finite quadratic sets `(X, r)` and their associated
//! monoids.
//!
//! A quadratic set is a finite set `X = {0, .., n-1}` together with a bijection
//! `r` of `X x X`, written `r(x, y) = (x |> y, x <| y)` in terms of a left and a
//! right action. The crate constructs such sets, decides their pointwise
//! properties (involutive, nondegenerate, square-free, lri, cyclic, braided),
//! and analyses the monoid `S(X, r)` presented by the quadratic relations
//! `xy = y'x'` read off from `r`: equality via orbit search, normal forms,
//! skew-polynomial presentations, Koszul-dual Frobenius data, and Garside
//! structure. The [`harness`] module enumerates all sets of a given small order
//! and cross-checks the structural equivalences exhaustively.

pub mod error;
pub mod fixtures;
pub mod garside;
pub mod harness;
pub mod koszul;
pub mod presentations;
pub mod set;
pub mod words;

pub use error::Error;
pub use garside::{EtaChain, GarsideReport};
pub use harness::{CensusRecord, CensusReport, Constraints, TheoremReport};
pub use koszul::{FrobeniusReport, KoszulPresentation};
pub use presentations::{OreReport, Relation, SkewReport};
pub use set::{PropertyReport, QuadraticSet};
pub use words::{Engine, LetterOrder, Orbit, Word, DEFAULT_ORBIT_CAP};

pub type Result<T> = std::result::Result<T, Error>;
