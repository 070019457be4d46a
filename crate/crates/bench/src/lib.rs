//! Shared setup for the criterion benchmarks.

use fibcube::{CubeGraph, CubeKind};

/// Dimensions the oracle benchmarks run at; the growth from one to the next
/// makes the exponential cost visible.
pub const ORACLE_DIMENSIONS: [usize; 3] = [8, 10, 12];

/// A dimension far beyond oracle reach, cheap for the closed forms.
pub const CLOSED_FORM_DIMENSION: usize = 1000;

pub fn gamma(n: usize) -> CubeGraph {
    CubeGraph::build(CubeKind::Gamma, n).expect("benchmark dimensions are desk scale")
}

pub fn lambda(n: usize) -> CubeGraph {
    CubeGraph::build(CubeKind::Lambda, n).expect("benchmark dimensions are desk scale")
}
