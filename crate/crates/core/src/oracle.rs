//! Ground-truth index computation straight from the graph.
//!
//! Everything here works by exhaustive counting over vertices and edges and
//! serves as the oracle the formula evaluators are validated against. The
//! inner loops compare Hamming distances through XOR and popcount, which is
//! legitimate because graph distance equals Hamming distance in these cubes;
//! `distance_check` verifies exactly that property by BFS, once per graph.
//!
//! Counts are kept in `u64`/`u128`: the builders cap the dimension, so the
//! vertex count stays far below any overflow and every sum here is exact.
//! Results surface as `BigInt` like every other index value.

use std::collections::VecDeque;

use num_bigint::BigInt;

use crate::error::Result;
use crate::formula::PartitionPolynomial;
use crate::graph::{CubeGraph, CubeKind, OrientedEdge};
use crate::word;

/// Vertex counts on the two sides of an edge: how many vertices are strictly
/// closer to the 0-endpoint `u`, and how many to the 1-endpoint `v`. No
/// vertex is equidistant (distances to adjacent vertices differ by exactly 1
/// in the Hamming metric), so the two counts partition the vertex set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeBalance {
    pub edge: OrientedEdge,
    pub closer_to_u: u64,
    pub closer_to_v: u64,
}

impl EdgeBalance {
    /// The edge's contribution to the Mostar index.
    pub fn imbalance(&self) -> u64 {
        self.closer_to_u.abs_diff(self.closer_to_v)
    }
}

fn balance_of(g: &CubeGraph, e: &OrientedEdge) -> EdgeBalance {
    let mut closer_to_u = 0u64;
    let mut closer_to_v = 0u64;
    for alpha in g.vertices() {
        let du = alpha.hamming(&e.u);
        let dv = alpha.hamming(&e.v);
        if du < dv {
            closer_to_u += 1;
        } else if dv < du {
            closer_to_v += 1;
        }
    }
    EdgeBalance {
        edge: *e,
        closer_to_u,
        closer_to_v,
    }
}

/// Side counts for one edge, validated to belong to `g`.
pub fn edge_balance(g: &CubeGraph, e: &OrientedEdge) -> Result<EdgeBalance> {
    g.validate_edge(e)?;
    Ok(balance_of(g, e))
}

/// Side counts for every edge, in the graph's edge order.
pub fn edge_balances(g: &CubeGraph) -> Vec<EdgeBalance> {
    g.edges().map(|e| balance_of(g, &e)).collect()
}

/// Mostar index by direct summation of side imbalances over all edges.
pub fn mostar_brute(g: &CubeGraph) -> BigInt {
    let total: u128 = g
        .edges()
        .map(|e| balance_of(g, &e).imbalance() as u128)
        .sum();
    BigInt::from(total)
}

/// Wiener index by summing Hamming distances over ordered vertex pairs and
/// halving.
pub fn wiener_brute(g: &CubeGraph) -> BigInt {
    let vs = g.vertices();
    let mut ordered: u128 = 0;
    for a in vs {
        for b in vs {
            ordered += a.hamming(b) as u128;
        }
    }
    debug_assert_eq!(ordered % 2, 0);
    BigInt::from(ordered / 2)
}

/// True iff BFS graph distance equals Hamming distance for every vertex
/// pair. This is the one place distances are measured on the graph itself
/// rather than on the words.
pub fn distance_check(g: &CubeGraph) -> bool {
    let adj = g.adjacency();
    let vs = g.vertices();
    let mut dist = vec![u32::MAX; vs.len()];
    for start in 0..vs.len() {
        dist.fill(u32::MAX);
        dist[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for &j in &adj[i] {
                if dist[j] == u32::MAX {
                    dist[j] = dist[i] + 1;
                    queue.push_back(j);
                }
            }
        }
        for (j, &d) in dist.iter().enumerate() {
            if d != vs[start].hamming(&vs[j]) {
                return false;
            }
        }
    }
    true
}

/// Edge-partition sums of the Fibonacci cube measured on the graph: edges
/// are classified by the leading coordinates of their endpoints (both start
/// with 0; the coordinate-1 link edges; both start with 10) and the side
/// imbalances are summed per class.
pub fn mn_partition_brute(n: usize) -> Result<PartitionPolynomial> {
    word::guard(n)?;
    if n < 2 {
        return Err(crate::error::Error::DimensionTooSmall {
            what: "edge-partition measurement",
            n,
            min: 2,
        });
    }
    let g = CubeGraph::build(CubeKind::Gamma, n)?;
    let mut a = 0u128;
    let mut b = 0u128;
    let mut c = 0u128;
    for e in g.edges() {
        let imbalance = balance_of(&g, &e).imbalance() as u128;
        if e.coord == 1 {
            b += imbalance;
        } else if e.u.coordinate(1) {
            c += imbalance;
        } else {
            a += imbalance;
        }
    }
    Ok(PartitionPolynomial {
        a: BigInt::from(a),
        b: BigInt::from(b),
        c: BigInt::from(c),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::seq::fib;
    use crate::word::BitWord;
    use num_bigint::BigInt;

    fn gamma(n: usize) -> CubeGraph {
        CubeGraph::build(CubeKind::Gamma, n).unwrap()
    }

    fn lambda(n: usize) -> CubeGraph {
        CubeGraph::build(CubeKind::Lambda, n).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn balance_on_the_three_vertex_path() {
        let g = gamma(2);
        let e = g.edges().find(|e| e.coord == 1).unwrap();
        let bal = edge_balance(&g, &e).unwrap();
        assert_eq!((bal.closer_to_u, bal.closer_to_v), (2, 1));
        assert_eq!(bal.imbalance(), 1);
    }

    #[test]
    fn balance_matches_fib_products_on_gamma_5() {
        let g = gamma(5);
        for e in g.edges().filter(|e| e.coord == 2) {
            let bal = edge_balance(&g, &e).unwrap();
            assert_eq!((bal.closer_to_u, bal.closer_to_v), (10, 3)); // f_3 f_5, f_2 f_4
        }
    }

    #[test]
    fn balance_on_lambda_4_is_uniform() {
        let g = lambda(4);
        for e in g.edges() {
            let bal = edge_balance(&g, &e).unwrap();
            assert_eq!((bal.closer_to_u, bal.closer_to_v), (5, 2)); // f_5, f_3
        }
    }

    #[test]
    fn edge_balance_rejects_foreign_edges() {
        let g = gamma(3);
        let e = OrientedEdge {
            u: "000".parse::<BitWord>().unwrap(),
            v: "010".parse::<BitWord>().unwrap(),
            coord: 1,
        };
        assert_eq!(edge_balance(&g, &e).unwrap_err(), Error::EdgeNotInGraph);
    }

    #[test]
    fn mostar_small_values() {
        assert_eq!(mostar_brute(&gamma(3)), big(7));
        assert_eq!(mostar_brute(&gamma(4)), big(28));
        assert_eq!(mostar_brute(&gamma(5)), big(92));
        assert_eq!(mostar_brute(&gamma(6)), big(298));
        assert_eq!(mostar_brute(&lambda(2)), big(2));
        assert_eq!(mostar_brute(&lambda(3)), big(6));
        assert_eq!(mostar_brute(&lambda(4)), big(24));
    }

    #[test]
    fn wiener_small_values() {
        assert_eq!(wiener_brute(&gamma(1)), big(1));
        assert_eq!(wiener_brute(&gamma(2)), big(4));
        assert_eq!(wiener_brute(&gamma(3)), big(16));
        assert_eq!(wiener_brute(&gamma(5)), big(176));
        assert_eq!(wiener_brute(&gamma(0)), big(0));
    }

    #[test]
    fn distances_equal_hamming() {
        assert!(distance_check(&gamma(0)));
        assert!(distance_check(&gamma(6)));
        assert!(distance_check(&lambda(6)));
    }

    #[test]
    fn partition_small_values() {
        let expected = [
            (2, (1, 1, 0)),
            (3, (4, 2, 1)),
            (4, (16, 6, 6)),
            (5, (54, 15, 23)),
        ];
        for (n, (a, b, c)) in expected {
            let got = mn_partition_brute(n).unwrap();
            assert_eq!(
                got,
                PartitionPolynomial {
                    a: big(a),
                    b: big(b),
                    c: big(c)
                },
                "n = {n}"
            );
        }
        assert!(mn_partition_brute(1).is_err());
    }

    #[test]
    fn partition_total_is_mostar() {
        for n in 2..=10 {
            assert_eq!(
                mn_partition_brute(n).unwrap().total(),
                mostar_brute(&gamma(n))
            );
        }
    }

    #[test]
    fn sides_partition_the_vertex_set() {
        for n in 2..=10 {
            for g in [gamma(n), lambda(n)] {
                let total = g.vertex_count() as u64;
                for bal in edge_balances(&g) {
                    assert_eq!(bal.closer_to_u + bal.closer_to_v, total);
                    assert!(bal.closer_to_u >= 1 && bal.closer_to_v >= 1);
                }
            }
        }
    }

    #[test]
    fn imbalance_depends_only_on_coordinate() {
        for n in 2..=10 {
            let g = gamma(n);
            let mut per_coord: Vec<Option<u64>> = vec![None; n + 1];
            for bal in edge_balances(&g) {
                let k = bal.edge.coord;
                match per_coord[k] {
                    None => per_coord[k] = Some(bal.imbalance()),
                    Some(seen) => assert_eq!(seen, bal.imbalance(), "n = {n}, k = {k}"),
                }
            }
        }
    }

    #[test]
    fn lambda_imbalance_is_fib_n() {
        for n in 2..=10 {
            let g = lambda(n);
            for bal in edge_balances(&g) {
                assert_eq!(BigInt::from(bal.imbalance()), fib(n), "n = {n}");
            }
        }
    }

    #[test]
    fn reversal_symmetry() {
        // Reversing every word permutes the vertex set and maps the
        // coordinate-k cut onto the coordinate-(n+1-k) cut, so mirrored cuts
        // carry identical sizes and imbalances.
        for n in 2..=10 {
            let g = gamma(n);
            for v in g.vertices() {
                assert!(g.contains(&v.reversed()));
            }
            let balances = edge_balances(&g);
            for k in 1..=n {
                let mirror = n + 1 - k;
                assert_eq!(g.cut_size(k).unwrap(), g.cut_size(mirror).unwrap());
                let at = |kk: usize| {
                    balances
                        .iter()
                        .find(|b| b.edge.coord == kk)
                        .map(EdgeBalance::imbalance)
                };
                assert_eq!(at(k), at(mirror), "n = {n}, k = {k}");
            }
        }
    }
}
