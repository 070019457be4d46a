//! Fibonacci and Lucas cubes as explicit induced subgraphs of the hypercube.
//!
//! A cube is stored as its canonically ordered vertex list (ascending packed
//! value); adjacency is implicit, two vertices being adjacent exactly when
//! their words differ in one coordinate. Every edge is reported once in
//! oriented, coordinate-labelled form.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::word::{self, BitWord};

pub use crate::word::MAX_GUARDED_DIMENSION;

/// Which family of strings induces the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CubeKind {
    /// Fibonacci cube: words with no two adjacent 1s. Defined for n >= 0
    /// (dimension 0 is the single empty-string vertex).
    Gamma,
    /// Lucas cube: Fibonacci words whose first and last coordinates are not
    /// both 1. Defined for n >= 2.
    Lambda,
}

impl CubeKind {
    pub fn min_dimension(self) -> usize {
        match self {
            CubeKind::Gamma => 0,
            CubeKind::Lambda => 2,
        }
    }

    fn enumerate(self, n: usize) -> Result<Vec<BitWord>> {
        match self {
            CubeKind::Gamma => Ok(word::fib_words_unguarded(n)),
            CubeKind::Lambda => word::lucas_words_unguarded(n),
        }
    }
}

/// An edge normalized by its differing coordinate: `u` carries 0 there and
/// `v` carries 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrientedEdge {
    pub u: BitWord,
    pub v: BitWord,
    /// The unique coordinate (1-based) where the endpoints differ.
    pub coord: usize,
}

/// An induced subgraph of the hypercube over a validated vertex set.
#[derive(Debug, Clone)]
pub struct CubeGraph {
    kind: CubeKind,
    n: usize,
    vertices: Vec<BitWord>,
    index: HashMap<u64, usize>,
}

impl CubeGraph {
    /// Builds the cube of dimension `n`, refusing `n > MAX_GUARDED_DIMENSION`.
    pub fn build(kind: CubeKind, n: usize) -> Result<Self> {
        word::guard(n)?;
        Self::build_forced(kind, n)
    }

    /// Builds without the desk-scale guard (the `u64` packing still caps `n`).
    pub fn build_forced(kind: CubeKind, n: usize) -> Result<Self> {
        word::hard_cap(n)?;
        if n < kind.min_dimension() {
            let what = match kind {
                CubeKind::Gamma => "Fibonacci cube",
                CubeKind::Lambda => "Lucas cube",
            };
            return Err(Error::DimensionTooSmall {
                what,
                n,
                min: kind.min_dimension(),
            });
        }
        let vertices = kind.enumerate(n)?;
        let index = vertices
            .iter()
            .enumerate()
            .map(|(i, w)| (w.bits(), i))
            .collect();
        Ok(CubeGraph {
            kind,
            n,
            vertices,
            index,
        })
    }

    pub fn kind(&self) -> CubeKind {
        self.kind
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Vertices in canonical (ascending packed value) order.
    pub fn vertices(&self) -> &[BitWord] {
        &self.vertices
    }

    /// Ordinal of a word in the canonical order, if it is a vertex.
    pub fn index_of(&self, w: &BitWord) -> Option<usize> {
        if w.len() != self.n {
            return None;
        }
        self.index.get(&w.bits()).copied()
    }

    pub fn contains(&self, w: &BitWord) -> bool {
        self.index_of(w).is_some()
    }

    /// Every edge exactly once, in deterministic order: ascending coordinate,
    /// then ascending 1-endpoint. Each vertex with a 1 at coordinate `k`
    /// yields the edge to that vertex with the 1 cleared; the cleared word is
    /// always a vertex because validity is preserved under clearing a 1.
    pub fn edges(&self) -> impl Iterator<Item = OrientedEdge> + '_ {
        (1..=self.n).flat_map(move |k| {
            self.vertices
                .iter()
                .filter(move |w| w.coordinate(k))
                .map(move |&v| OrientedEdge {
                    u: v.with_coordinate_cleared(k),
                    v,
                    coord: k,
                })
        })
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.iter().map(|w| w.weight() as usize).sum()
    }

    /// Number of edges whose endpoints differ at coordinate `k` (the
    /// coordinate cut).
    pub fn cut_size(&self, k: usize) -> Result<usize> {
        if k < 1 || k > self.n {
            return Err(Error::CoordinateOutOfRange {
                coord: k,
                len: self.n,
            });
        }
        Ok(self.vertices.iter().filter(|w| w.coordinate(k)).count())
    }

    /// Checks that `e` is a correctly oriented edge of this graph.
    pub fn validate_edge(&self, e: &OrientedEdge) -> Result<()> {
        let in_range = e.coord >= 1 && e.coord <= self.n;
        if !in_range
            || !self.contains(&e.u)
            || !self.contains(&e.v)
            || !e.v.coordinate(e.coord)
            || e.u != e.v.with_coordinate_cleared(e.coord)
        {
            return Err(Error::EdgeNotInGraph);
        }
        Ok(())
    }

    /// Adjacency lists over vertex ordinals, in edge order.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for e in self.edges() {
            let ui = self.index_of(&e.u).expect("edge endpoint is a vertex");
            let vi = self.index_of(&e.v).expect("edge endpoint is a vertex");
            adj[ui].push(vi);
            adj[vi].push(ui);
        }
        adj
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::{fib, lucas};
    use num_bigint::BigInt;

    fn w(s: &str) -> BitWord {
        s.parse().unwrap()
    }

    #[test]
    fn gamma_0_is_a_single_empty_vertex() {
        let g = CubeGraph::build(CubeKind::Gamma, 0).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.vertices()[0], BitWord::empty());
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.edges().count(), 0);
    }

    #[test]
    fn gamma_2_is_the_three_vertex_path() {
        let g = CubeGraph::build(CubeKind::Gamma, 2).unwrap();
        assert_eq!(g.vertices(), &[w("00"), w("01"), w("10")]);
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(
            edges,
            vec![
                OrientedEdge {
                    u: w("00"),
                    v: w("10"),
                    coord: 1
                },
                OrientedEdge {
                    u: w("00"),
                    v: w("01"),
                    coord: 2
                },
            ]
        );
    }

    #[test]
    fn lambda_3_is_a_star_centered_at_000() {
        let g = CubeGraph::build(CubeKind::Lambda, 3).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 3);
        for e in g.edges() {
            assert_eq!(e.u, w("000"));
        }
    }

    #[test]
    fn vertex_counts_match_sequences() {
        for n in 0..=20 {
            let g = CubeGraph::build(CubeKind::Gamma, n).unwrap();
            assert_eq!(BigInt::from(g.vertex_count()), fib(n + 2), "Gamma {n}");
        }
        for n in 2..=20 {
            let g = CubeGraph::build(CubeKind::Lambda, n).unwrap();
            assert_eq!(BigInt::from(g.vertex_count()), lucas(n), "Lambda {n}");
        }
    }

    #[test]
    fn edge_counts_match_cut_formulas() {
        for n in 2..=16 {
            let g = CubeGraph::build(CubeKind::Gamma, n).unwrap();
            let by_cuts: BigInt = (1..=n).map(|k| fib(k) * fib(n - k + 1)).sum();
            assert_eq!(BigInt::from(g.edge_count()), by_cuts, "Gamma {n}");

            let l = CubeGraph::build(CubeKind::Lambda, n).unwrap();
            assert_eq!(
                BigInt::from(l.edge_count()),
                BigInt::from(n) * fib(n - 1),
                "Lambda {n}"
            );
        }
    }

    #[test]
    fn gamma_cut_sizes_match_fib_products() {
        for n in 1..=14 {
            let g = CubeGraph::build(CubeKind::Gamma, n).unwrap();
            for k in 1..=n {
                let got = BigInt::from(g.cut_size(k).unwrap());
                assert_eq!(got, fib(k) * fib(n - k + 1), "Gamma {n} cut {k}");
            }
        }
        let g5 = CubeGraph::build(CubeKind::Gamma, 5).unwrap();
        assert_eq!(g5.cut_size(1).unwrap(), 5);
        assert_eq!(g5.cut_size(3).unwrap(), 4);
    }

    #[test]
    fn lambda_cut_sizes_measured() {
        // No formula assumed: measured values, all cuts of a given dimension
        // agree and the value observed is fib(n - 1).
        let l4 = CubeGraph::build(CubeKind::Lambda, 4).unwrap();
        assert_eq!(l4.cut_size(1).unwrap(), 2);
        for n in 2..=12 {
            let g = CubeGraph::build(CubeKind::Lambda, n).unwrap();
            let sizes: Vec<usize> = (1..=n).map(|k| g.cut_size(k).unwrap()).collect();
            assert!(
                sizes.windows(2).all(|p| p[0] == p[1]),
                "uniform cuts at {n}"
            );
            assert_eq!(BigInt::from(sizes[0]), fib(n - 1), "measured cut at {n}");
        }
    }

    #[test]
    fn edges_are_oriented_valid_and_unique() {
        for (kind, min) in [(CubeKind::Gamma, 1), (CubeKind::Lambda, 2)] {
            for n in min..=12 {
                let g = CubeGraph::build(kind, n).unwrap();
                let mut seen = std::collections::HashSet::new();
                let mut count = 0;
                for e in g.edges() {
                    count += 1;
                    assert!(g.validate_edge(&e).is_ok());
                    assert!(!e.u.coordinate(e.coord));
                    assert!(e.v.coordinate(e.coord));
                    assert_eq!(e.u.hamming(&e.v), 1);
                    let key = (e.u.bits().min(e.v.bits()), e.u.bits().max(e.v.bits()));
                    assert!(seen.insert(key), "duplicate edge in {kind:?} {n}");
                }
                assert_eq!(count, g.edge_count());
            }
        }
    }

    #[test]
    fn fundamental_decomposition_of_gamma() {
        for n in 2..=12usize {
            let g = CubeGraph::build(CubeKind::Gamma, n).unwrap();
            // Vertices starting with 0, first coordinate stripped, are exactly
            // the length-(n-1) Fibonacci words; those starting with 10 give the
            // length-(n-2) words.
            let tail = |v: &BitWord, drop: usize| {
                let keep = n - drop;
                let mask = if keep == 0 { 0 } else { (1u64 << keep) - 1 };
                BitWord::new(keep, v.bits() & mask)
            };
            let zero_side: Vec<BitWord> = g
                .vertices()
                .iter()
                .filter(|v| !v.coordinate(1))
                .map(|v| tail(v, 1))
                .collect();
            assert_eq!(zero_side, word::fib_words_unguarded(n - 1));
            let one_side: Vec<BitWord> = g
                .vertices()
                .iter()
                .filter(|v| v.coordinate(1))
                .map(|v| tail(v, 2))
                .collect();
            assert_eq!(one_side, word::fib_words_unguarded(n - 2));

            // Link edges (coordinate-1 cut) form a perfect matching of size
            // fib(n) between the 00- and 10-prefixed copies.
            let links: Vec<OrientedEdge> = g.edges().filter(|e| e.coord == 1).collect();
            assert_eq!(BigInt::from(links.len()), fib(n));
            let mut zeros = std::collections::HashSet::new();
            let mut ones = std::collections::HashSet::new();
            for e in &links {
                assert!(!e.u.coordinate(1) && (n < 2 || !e.u.coordinate(2)));
                assert!(e.v.coordinate(1));
                assert!(zeros.insert(e.u));
                assert!(ones.insert(e.v));
            }
            assert_eq!(ones.len(), one_side.len());
        }
    }

    #[test]
    fn dimension_bounds_are_enforced() {
        assert!(matches!(
            CubeGraph::build(CubeKind::Gamma, MAX_GUARDED_DIMENSION + 1),
            Err(Error::DimensionTooLarge { .. })
        ));
        assert!(matches!(
            CubeGraph::build(CubeKind::Lambda, 1),
            Err(Error::DimensionTooSmall { .. })
        ));
        assert!(matches!(
            CubeGraph::build_forced(CubeKind::Gamma, 64),
            Err(Error::DimensionTooLarge { limit: 63, .. })
        ));
        // The forced path matches the guarded one where both apply.
        let a = CubeGraph::build(CubeKind::Gamma, 8).unwrap();
        let b = CubeGraph::build_forced(CubeKind::Gamma, 8).unwrap();
        assert_eq!(a.vertices(), b.vertices());
    }

    #[test]
    fn builds_are_deterministic() {
        let a = CubeGraph::build(CubeKind::Lambda, 9).unwrap();
        let b = CubeGraph::build(CubeKind::Lambda, 9).unwrap();
        assert_eq!(a.vertices(), b.vertices());
        assert_eq!(a.edges().collect::<Vec<_>>(), b.edges().collect::<Vec<_>>());
    }

    #[test]
    fn invalid_edges_are_rejected() {
        let g = CubeGraph::build(CubeKind::Gamma, 3).unwrap();
        let bogus = OrientedEdge {
            u: w("000"),
            v: w("011"),
            coord: 3,
        };
        assert_eq!(g.validate_edge(&bogus), Err(Error::EdgeNotInGraph));
        let misoriented = OrientedEdge {
            u: w("001"),
            v: w("000"),
            coord: 3,
        };
        assert_eq!(g.validate_edge(&misoriented), Err(Error::EdgeNotInGraph));
        let wrong_coord = OrientedEdge {
            u: w("000"),
            v: w("001"),
            coord: 2,
        };
        assert_eq!(g.validate_edge(&wrong_coord), Err(Error::EdgeNotInGraph));
    }
}
