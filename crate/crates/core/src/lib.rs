//! Exact combinatorial invariants of Fibonacci and Lucas cubes.
//!
//! The library builds the cubes as explicit induced subgraphs of the
//! hypercube and computes their Mostar and Wiener indices by several
//! mutually independent routes:
//!
//! - a brute-force graph oracle ([`oracle`]), exponential but ground truth;
//! - coordinate-cut summations and closed forms ([`formula`]);
//! - a coefficient recursion for the edge-partition polynomial ([`formula`]);
//! - rational generating function expansion ([`series`]).
//!
//! All arithmetic is exact ([`BigInt`] end to end), and the [`check`] module
//! cross-validates every route against every other, bit for bit.

pub mod check;
pub mod error;
pub mod formula;
pub mod graph;
pub mod oracle;
pub mod seq;
pub mod series;
pub mod word;

pub use error::{Error, Result};
pub use formula::PartitionPolynomial;
pub use graph::{CubeGraph, CubeKind, OrientedEdge, MAX_GUARDED_DIMENSION};
pub use num_bigint::BigInt;
pub use oracle::EdgeBalance;
pub use series::{IntPolynomial, NamedGf, RationalGf};
pub use word::BitWord;
