//! The cross-validation suite: every invariant the library promises, run as
//! named pass/fail checks with the first counterexample reported.
//!
//! Formula-level checks scale with `max_n`, anything that needs a
//! materialized graph scales with `oracle_max_n`, and the cheap structural
//! count checks use fixed small ranges. The CLI `check` command prints one
//! line per entry here; nothing is asserted anywhere in the library that
//! this suite does not re-run.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::formula::{
    mn_recursion, mostar_gamma_alt, mostar_gamma_closed, mostar_gamma_sum, mostar_lambda,
    square_cut_sum, wiener_gamma_closed_cited, wiener_gamma_closed_new, wiener_gamma_sum,
};
use crate::graph::{CubeGraph, CubeKind};
use crate::oracle::{
    distance_check, edge_balances, mn_partition_brute, mostar_brute, wiener_brute,
};
use crate::seq::{fib, fib_table, lucas, lucas_table};
use crate::series::{builtin, NamedGf};
use crate::word;

/// Outcome of one named check; `detail` holds the first counterexample.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub result: Result<(), String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.result.is_ok()
    }
}

type CheckFn = fn(usize, usize) -> Result<(), String>;

fn fail(msg: String) -> Result<(), String> {
    Err(msg)
}

fn divisible(value: &BigInt, by: &BigInt) -> bool {
    let rem: BigInt = value % by;
    rem.is_zero()
}

fn expect_eq<T: PartialEq + std::fmt::Display>(
    label: &str,
    expected: T,
    actual: T,
) -> Result<(), String> {
    if expected == actual {
        Ok(())
    } else {
        fail(format!("{label}: expected {expected}, got {actual}"))
    }
}

fn gamma(n: usize) -> CubeGraph {
    CubeGraph::build(CubeKind::Gamma, n).expect("guarded build")
}

fn lambda(n: usize) -> CubeGraph {
    CubeGraph::build(CubeKind::Lambda, n).expect("guarded build")
}

// ---------------------------------------------------------------------------
// Sequence checks
// ---------------------------------------------------------------------------

fn check_fib_lucas_recurrence(max_n: usize, _oracle: usize) -> Result<(), String> {
    let f = fib_table(max_n + 1);
    let l = lucas_table(max_n + 1);
    for n in 2..=max_n {
        if f[n] != &f[n - 1] + &f[n - 2] {
            return fail(format!("fib recurrence fails at n = {n}"));
        }
        if l[n] != &l[n - 1] + &l[n - 2] {
            return fail(format!("lucas recurrence fails at n = {n}"));
        }
    }
    Ok(())
}

fn check_lucas_fib_identity(max_n: usize, _oracle: usize) -> Result<(), String> {
    let f = fib_table(max_n + 2);
    let l = lucas_table(max_n + 1);
    for n in 1..=max_n {
        if l[n] != &f[n - 1] + &f[n + 1] {
            return fail(format!("L_n = f_(n-1) + f_(n+1) fails at n = {n}"));
        }
    }
    Ok(())
}

fn check_fib_monotone(max_n: usize, _oracle: usize) -> Result<(), String> {
    let f = fib_table(max_n + 1);
    for n in 1..=max_n {
        if f[n] < f[n - 1] {
            return fail(format!("fib decreases at n = {n}"));
        }
    }
    Ok(())
}

fn check_decimal_round_trip(_max_n: usize, _oracle: usize) -> Result<(), String> {
    for n in [1000usize, 2003, 10_000] {
        let value = fib(n);
        let parsed: BigInt = value
            .to_string()
            .parse()
            .map_err(|e| format!("parse: {e}"))?;
        if parsed != value {
            return fail(format!("decimal round trip fails for f_{n}"));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Graph structure checks
// ---------------------------------------------------------------------------

fn check_gamma_vertex_count(_max_n: usize, _oracle: usize) -> Result<(), String> {
    for n in 0..=20 {
        expect_eq(
            &format!("|V(Gamma_{n})|"),
            fib(n + 2),
            BigInt::from(gamma(n).vertex_count()),
        )?;
    }
    Ok(())
}

fn check_lambda_vertex_count(_max_n: usize, _oracle: usize) -> Result<(), String> {
    for n in 2..=20 {
        expect_eq(
            &format!("|V(Lambda_{n})|"),
            lucas(n),
            BigInt::from(lambda(n).vertex_count()),
        )?;
    }
    Ok(())
}

fn check_gamma_edge_count(_max_n: usize, _oracle: usize) -> Result<(), String> {
    for n in 2..=16 {
        let by_cuts: BigInt = (1..=n).map(|k| fib(k) * fib(n - k + 1)).sum();
        expect_eq(
            &format!("|E(Gamma_{n})|"),
            by_cuts,
            BigInt::from(gamma(n).edge_count()),
        )?;
    }
    Ok(())
}

fn check_lambda_edge_count(_max_n: usize, _oracle: usize) -> Result<(), String> {
    for n in 2..=16 {
        expect_eq(
            &format!("|E(Lambda_{n})|"),
            BigInt::from(n) * fib(n - 1),
            BigInt::from(lambda(n).edge_count()),
        )?;
    }
    Ok(())
}

fn check_enumeration_canonical(_max_n: usize, oracle_max_n: usize) -> Result<(), String> {
    for n in 0..=oracle_max_n {
        let list = word::fib_words(n).map_err(|e| e.to_string())?;
        if !list.windows(2).all(|p| p[0].bits() < p[1].bits()) {
            return fail(format!(
                "Fibonacci enumeration not strictly ascending at n = {n}"
            ));
        }
        if n >= 2 {
            let list = word::lucas_words(n).map_err(|e| e.to_string())?;
            if !list.windows(2).all(|p| p[0].bits() < p[1].bits()) {
                return fail(format!(
                    "Lucas enumeration not strictly ascending at n = {n}"
                ));
            }
        }
    }
    Ok(())
}

fn check_word_closure(_max_n: usize, oracle_max_n: usize) -> Result<(), String> {
    for n in 1..=oracle_max_n {
        for w in word::fib_words(n).map_err(|e| e.to_string())? {
            for k in w.support() {
                if !w.with_coordinate_cleared(k).is_fibonacci() {
                    return fail(format!("clearing coordinate {k} of {w} leaves the family"));
                }
            }
        }
        if n >= 2 {
            for w in word::lucas_words(n).map_err(|e| e.to_string())? {
                for k in w.support() {
                    if !w.with_coordinate_cleared(k).is_lucas() {
                        return fail(format!(
                            "clearing coordinate {k} of Lucas {w} leaves the family"
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_fundamental_decomposition(_max_n: usize, oracle_max_n: usize) -> Result<(), String> {
    for n in 2..=oracle_max_n {
        let g = gamma(n);
        let zero_side = g.vertices().iter().filter(|v| !v.coordinate(1)).count();
        let one_side = g.vertices().iter().filter(|v| v.coordinate(1)).count();
        expect_eq(
            &format!("0-side of Gamma_{n}"),
            fib(n + 1),
            BigInt::from(zero_side),
        )?;
        expect_eq(
            &format!("10-side of Gamma_{n}"),
            fib(n),
            BigInt::from(one_side),
        )?;

        let links: Vec<_> = g.edges().filter(|e| e.coord == 1).collect();
        expect_eq(
            &format!("link edges of Gamma_{n}"),
            fib(n),
            BigInt::from(links.len()),
        )?;
        let mut matched = std::collections::HashSet::new();
        for e in &links {
            if !matched.insert(e.u) || !matched.insert(e.v) {
                return fail(format!("link edges of Gamma_{n} are not a matching"));
            }
        }
    }
    Ok(())
}

fn check_reversal_symmetry(_max_n: usize, oracle_max_n: usize) -> Result<(), String> {
    for n in 2..=oracle_max_n {
        let g = gamma(n);
        for v in g.vertices() {
            if !g.contains(&v.reversed()) {
                return fail(format!("Gamma_{n} not closed under reversal at {v}"));
            }
        }
        let balances = edge_balances(&g);
        for k in 1..=n {
            let mirror = n + 1 - k;
            let a = g.cut_size(k).map_err(|e| e.to_string())?;
            let b = g.cut_size(mirror).map_err(|e| e.to_string())?;
            if a != b {
                return fail(format!(
                    "Gamma_{n}: cut {k} has size {a}, mirror {mirror} has {b}"
                ));
            }
            let at = |kk: usize| {
                balances
                    .iter()
                    .find(|bal| bal.edge.coord == kk)
                    .map(|bal| bal.imbalance())
            };
            if at(k) != at(mirror) {
                return fail(format!(
                    "Gamma_{n}: imbalance differs between cuts {k} and {mirror}"
                ));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Oracle checks (per-edge side counts, distance property)
// ---------------------------------------------------------------------------

fn check_gamma_edge_balance(_max_n: usize, oracle_max_n: usize) -> Result<(), String> {
    for n in 2..=oracle_max_n {
        let g = gamma(n);
        let f = fib_table(n + 3);
        let total = g.vertex_count() as u64;
        for bal in edge_balances(&g) {
            let k = bal.edge.coord;
            if bal.closer_to_u + bal.closer_to_v != total {
                return fail(format!("Gamma_{n}: sides do not partition V at cut {k}"));
            }
            if bal.closer_to_u < 1 || bal.closer_to_v < 1 {
                return fail(format!("Gamma_{n}: empty side at cut {k}"));
            }
            let expect_u = &f[k + 1] * &f[n - k + 2];
            let expect_v = &f[k] * &f[n - k + 1];
            if BigInt::from(bal.closer_to_u) != expect_u
                || BigInt::from(bal.closer_to_v) != expect_v
            {
                return fail(format!(
                    "Gamma_{n} cut {k}: sides ({}, {}) differ from ({expect_u}, {expect_v})",
                    bal.closer_to_u, bal.closer_to_v,
                ));
            }
        }
    }
    Ok(())
}

fn check_gamma_cut_sizes(_max_n: usize, oracle_max_n: usize) -> Result<(), String> {
    for n in 2..=oracle_max_n {
        let g = gamma(n);
        for k in 1..=n {
            expect_eq(
                &format!("Gamma_{n} cut {k}"),
                fib(k) * fib(n - k + 1),
                BigInt::from(g.cut_size(k).map_err(|e| e.to_string())?),
            )?;
        }
    }
    Ok(())
}

fn check_lambda_edge_balance(_max_n: usize, oracle_max_n: usize) -> Result<(), String> {
    for n in 2..=oracle_max_n {
        let g = lambda(n);
        let total = g.vertex_count() as u64;
        let expect_u = fib(n + 1);
        let expect_v = fib(n - 1);
        let expect_diff = fib(n);
        for bal in edge_balances(&g) {
            if bal.closer_to_u + bal.closer_to_v != total {
                return fail(format!("Lambda_{n}: sides do not partition V"));
            }
            if BigInt::from(bal.closer_to_u) != expect_u
                || BigInt::from(bal.closer_to_v) != expect_v
            {
                return fail(format!(
                    "Lambda_{n}: sides ({}, {}) differ from ({expect_u}, {expect_v})",
                    bal.closer_to_u, bal.closer_to_v,
                ));
            }
            if BigInt::from(bal.imbalance()) != expect_diff {
                return fail(format!("Lambda_{n}: imbalance is not f_n"));
            }
        }
    }
    Ok(())
}

fn check_lambda_cut_uniformity(_max_n: usize, oracle_max_n: usize) -> Result<(), String> {
    // Measured, not assumed: all n cuts agree, and the common size times n
    // must reproduce the known edge count n * f_(n-1).
    for n in 2..=oracle_max_n {
        let g = lambda(n);
        let sizes: Vec<usize> = (1..=n)
            .map(|k| g.cut_size(k).expect("k in range"))
            .collect();
        if sizes.windows(2).any(|p| p[0] != p[1]) {
            return fail(format!("Lambda_{n}: cut sizes {sizes:?} are not uniform"));
        }
        expect_eq(
            &format!("Lambda_{n} total over cuts"),
            BigInt::from(n) * fib(n - 1),
            BigInt::from(sizes.iter().sum::<usize>()),
        )?;
    }
    Ok(())
}

fn check_distance_metric(_max_n: usize, oracle_max_n: usize) -> Result<(), String> {
    if !distance_check(&gamma(0)) {
        return fail("Gamma_0 distance check failed".into());
    }
    for n in 2..=oracle_max_n {
        if !distance_check(&gamma(n)) {
            return fail(format!("BFS distance differs from Hamming on Gamma_{n}"));
        }
        if !distance_check(&lambda(n)) {
            return fail(format!("BFS distance differs from Hamming on Lambda_{n}"));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Formula vs oracle checks
// ---------------------------------------------------------------------------

fn check_mostar_gamma_methods(max_n: usize, _oracle: usize) -> Result<(), String> {
    for n in 2..=max_n {
        let sum = mostar_gamma_sum(n).map_err(|e| e.to_string())?;
        expect_eq(
            &format!("Mostar alternate sum at n = {n}"),
            sum.clone(),
            mostar_gamma_alt(n).map_err(|e| e.to_string())?,
        )?;
        expect_eq(
            &format!("Mostar closed form at n = {n}"),
            sum.clone(),
            mostar_gamma_closed(n).map_err(|e| e.to_string())?,
        )?;
        expect_eq(
            &format!("Mostar recursion total at n = {n}"),
            sum,
            mn_recursion(n).total(),
        )?;
    }
    Ok(())
}

fn check_mostar_gamma_oracle(_max_n: usize, oracle_max_n: usize) -> Result<(), String> {
    for n in 2..=oracle_max_n {
        expect_eq(
            &format!("Mo(Gamma_{n}) brute vs closed"),
            mostar_brute(&gamma(n)),
            mostar_gamma_closed(n).map_err(|e| e.to_string())?,
        )?;
    }
    Ok(())
}

fn check_mostar_lambda_oracle(_max_n: usize, oracle_max_n: usize) -> Result<(), String> {
    for n in 2..=oracle_max_n {
        expect_eq(
            &format!("Mo(Lambda_{n}) brute vs formula"),
            mostar_brute(&lambda(n)),
            mostar_lambda(n).map_err(|e| e.to_string())?,
        )?;
    }
    Ok(())
}

fn check_partition_recursion_oracle(_max_n: usize, oracle_max_n: usize) -> Result<(), String> {
    for n in 2..=oracle_max_n {
        let measured = mn_partition_brute(n).map_err(|e| e.to_string())?;
        let recursed = mn_recursion(n);
        if measured != recursed {
            return fail(format!(
                "partition mismatch at n = {n}: measured ({}, {}, {}), recursion ({}, {}, {})",
                measured.a, measured.b, measured.c, recursed.a, recursed.b, recursed.c,
            ));
        }
        expect_eq(
            &format!("partition total vs Mostar at n = {n}"),
            mostar_brute(&gamma(n)),
            measured.total(),
        )?;
    }
    Ok(())
}

fn check_partition_b_link(max_n: usize, _oracle: usize) -> Result<(), String> {
    let f = fib_table(max_n + 1);
    for n in 2..=max_n {
        expect_eq(
            &format!("b_n at n = {n}"),
            &f[n] * &f[n - 1],
            mn_recursion(n).b,
        )?;
    }
    Ok(())
}

fn check_wiener_chain(max_n: usize, _oracle: usize) -> Result<(), String> {
    for n in 2..=max_n {
        let sum = wiener_gamma_sum(n).map_err(|e| e.to_string())?;
        expect_eq(
            &format!("Wiener quadratic closed form at n = {n}"),
            sum.clone(),
            wiener_gamma_closed_cited(n).map_err(|e| e.to_string())?,
        )?;
        expect_eq(
            &format!("Wiener bisected closed form at n = {n}"),
            sum.clone(),
            wiener_gamma_closed_new(n).map_err(|e| e.to_string())?,
        )?;
        expect_eq(
            &format!("Wiener = Mostar + squared cuts at n = {n}"),
            sum,
            mostar_gamma_closed(n).map_err(|e| e.to_string())? + square_cut_sum(n),
        )?;
    }
    Ok(())
}

fn check_wiener_oracle(_max_n: usize, oracle_max_n: usize) -> Result<(), String> {
    for n in 2..=oracle_max_n {
        expect_eq(
            &format!("W(Gamma_{n}) brute vs summation"),
            wiener_brute(&gamma(n)),
            wiener_gamma_sum(n).map_err(|e| e.to_string())?,
        )?;
    }
    Ok(())
}

fn check_partition_a_is_wiener(max_n: usize, oracle_max_n: usize) -> Result<(), String> {
    for n in 3..=max_n {
        expect_eq(
            &format!("a_n = W(Gamma_(n-1)) at n = {n}"),
            wiener_gamma_sum(n - 1).map_err(|e| e.to_string())?,
            mn_recursion(n).a,
        )?;
    }
    for n in 3..=oracle_max_n {
        expect_eq(
            &format!("a_n = brute W(Gamma_(n-1)) at n = {n}"),
            wiener_brute(&gamma(n - 1)),
            mn_recursion(n).a,
        )?;
    }
    Ok(())
}

fn check_divisibility(max_n: usize, _oracle: usize) -> Result<(), String> {
    let f = fib_table(2 * max_n + 4);
    let five = BigInt::from(5);
    let twenty_five = BigInt::from(25);
    for n in 2..=max_n {
        let n_int = BigInt::from(n);
        let sign = if n % 2 == 0 {
            BigInt::from(1)
        } else {
            BigInt::from(-1)
        };
        let mostar_bracket =
            (3 * &n_int - 2) * &f[2 * n + 2] + &n_int * &f[2 * n + 1] + (3 * &n_int + 2) * &sign;
        if !divisible(&mostar_bracket, &twenty_five) {
            return fail(format!("25 does not divide the Mostar bracket at n = {n}"));
        }
        let wiener_quadratic = 4 * (&n_int + 1) * &f[n] * &f[n]
            + (9 * &n_int + 2) * &f[n] * &f[n + 1]
            + 6 * &n_int * &f[n + 1] * &f[n + 1];
        if !divisible(&wiener_quadratic, &twenty_five) {
            return fail(format!(
                "25 does not divide the quadratic Wiener bracket at n = {n}"
            ));
        }
        let wiener_bisected =
            (3 * &n_int + 2) * &f[2 * n + 3] + (&n_int - 2) * &f[2 * n + 2] - (&n_int + 2) * &sign;
        if !divisible(&wiener_bisected, &twenty_five) {
            return fail(format!(
                "25 does not divide the bisected Wiener bracket at n = {n}"
            ));
        }
        let expansion = (4 * &n_int + 2) * &f[2 * n + 2] + (3 * &n_int + 3) * &f[2 * n + 1];
        if !divisible(&expansion, &five) {
            return fail(format!(
                "5 does not divide the squared-bisection bracket at n = {n}"
            ));
        }
    }
    Ok(())
}

fn check_imbalance_identity(max_n: usize, _oracle: usize) -> Result<(), String> {
    let f = fib_table(max_n + 3);
    for n in 1..=max_n {
        for k in 1..=n {
            let lhs = &f[k + 1] * &f[n - k + 2] - &f[k] * &f[n - k + 1];
            let rhs = &f[k] * &f[n - k] + &f[k - 1] * &f[n - k + 2];
            if lhs != rhs {
                return fail(format!("imbalance identity fails at n = {n}, k = {k}"));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Generating function checks
// ---------------------------------------------------------------------------

fn series(name: NamedGf, count: usize) -> Result<Vec<BigInt>, String> {
    builtin(name).coefficients(count).map_err(|e| e.to_string())
}

fn check_gf_partition_sum(max_n: usize, _oracle: usize) -> Result<(), String> {
    let count = max_n;
    let a = series(NamedGf::PartitionA, count)?;
    let b = series(NamedGf::PartitionB, count)?;
    let c = series(NamedGf::PartitionC, count)?;
    let mo = series(NamedGf::MostarGamma, count)?;
    for n in 0..count {
        if &a[n] + &b[n] + &c[n] != mo[n] {
            return fail(format!(
                "A + B + C differs from the Mostar series at n = {n}"
            ));
        }
    }
    Ok(())
}

fn check_gf_wiener_sum(max_n: usize, _oracle: usize) -> Result<(), String> {
    let count = max_n;
    let mo = series(NamedGf::MostarGamma, count)?;
    let sq = series(NamedGf::CutSquares, count)?;
    let w = series(NamedGf::WienerGamma, count)?;
    for n in 0..count {
        if &mo[n] + &sq[n] != w[n] {
            return fail(format!(
                "Mostar + cut squares differs from the Wiener series at n = {n}"
            ));
        }
    }
    Ok(())
}

fn check_gf_fib_bisection(max_n: usize, _oracle: usize) -> Result<(), String> {
    let count = max_n;
    let f = fib_table(2 * count + 4);
    for (n, got) in series(NamedGf::FibBisection, count)?
        .into_iter()
        .enumerate()
    {
        if got != f[2 * n + 2] {
            return fail(format!("bisection series differs from f_(2n+2) at n = {n}"));
        }
    }
    let five = BigInt::from(5);
    for (n, got) in series(NamedGf::FibBisectionSquared, count)?
        .into_iter()
        .enumerate()
    {
        let n_int = BigInt::from(n);
        let bracket = (4 * &n_int + 2) * &f[2 * n + 2] + (3 * &n_int + 3) * &f[2 * n + 1];
        if !divisible(&bracket, &five) {
            return fail(format!(
                "5 does not divide the squared-bisection bracket at n = {n}"
            ));
        }
        if got * &five != bracket {
            return fail(format!("squared bisection series mismatch at n = {n}"));
        }
    }
    Ok(())
}

fn check_gf_matches_formulas(max_n: usize, _oracle: usize) -> Result<(), String> {
    let count = max_n + 1;
    let mo = series(NamedGf::MostarGamma, count)?;
    let w = series(NamedGf::WienerGamma, count)?;
    for (n, coefficient) in mo.iter().enumerate().skip(2) {
        expect_eq(
            &format!("Mostar series vs closed form at n = {n}"),
            mostar_gamma_closed(n).map_err(|e| e.to_string())?,
            coefficient.clone(),
        )?;
    }
    for (n, coefficient) in w.iter().enumerate().skip(1) {
        expect_eq(
            &format!("Wiener series vs summation at n = {n}"),
            wiener_gamma_sum(n).map_err(|e| e.to_string())?,
            coefficient.clone(),
        )?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Suite
// ---------------------------------------------------------------------------

const CHECKS: &[(&str, CheckFn)] = &[
    ("fib-lucas-recurrence", check_fib_lucas_recurrence),
    ("lucas-fib-identity", check_lucas_fib_identity),
    ("fib-monotone", check_fib_monotone),
    ("decimal-round-trip", check_decimal_round_trip),
    ("gamma-vertex-count", check_gamma_vertex_count),
    ("lambda-vertex-count", check_lambda_vertex_count),
    ("gamma-edge-count", check_gamma_edge_count),
    ("lambda-edge-count", check_lambda_edge_count),
    ("enumeration-canonical", check_enumeration_canonical),
    ("valid-word-closure", check_word_closure),
    ("fundamental-decomposition", check_fundamental_decomposition),
    ("reversal-symmetry", check_reversal_symmetry),
    ("gamma-edge-balance", check_gamma_edge_balance),
    ("gamma-cut-sizes", check_gamma_cut_sizes),
    ("lambda-edge-balance", check_lambda_edge_balance),
    ("lambda-cut-uniformity", check_lambda_cut_uniformity),
    ("distance-metric", check_distance_metric),
    ("mostar-gamma-methods", check_mostar_gamma_methods),
    ("mostar-gamma-oracle", check_mostar_gamma_oracle),
    ("mostar-lambda-oracle", check_mostar_lambda_oracle),
    (
        "partition-recursion-oracle",
        check_partition_recursion_oracle,
    ),
    ("partition-b-link", check_partition_b_link),
    ("wiener-chain", check_wiener_chain),
    ("wiener-oracle", check_wiener_oracle),
    ("partition-a-wiener", check_partition_a_is_wiener),
    ("divisibility-25", check_divisibility),
    ("imbalance-identity", check_imbalance_identity),
    ("gf-partition-sum", check_gf_partition_sum),
    ("gf-wiener-sum", check_gf_wiener_sum),
    ("gf-fib-bisection", check_gf_fib_bisection),
    ("gf-matches-formulas", check_gf_matches_formulas),
];

/// Runs the whole suite. `max_n` bounds the formula-level ranges and the
/// number of series coefficients compared; `oracle_max_n` bounds everything
/// that materializes a graph.
pub fn run_all(max_n: usize, oracle_max_n: usize) -> Vec<CheckOutcome> {
    CHECKS
        .iter()
        .map(|(name, f)| CheckOutcome {
            name,
            result: f(max_n, oracle_max_n),
        })
        .collect()
}

/// Names of all checks, in run order.
pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(name, _)| *name).collect()
}
