//! Formula-level evaluators for the Mostar and Wiener indices of the cubes:
//! cut summations, closed forms, and the coefficient recursion for the
//! edge-partition polynomial. Each is an independent computation route; the
//! check suite and tests cross-validate them against each other and against
//! the brute-force graph oracle.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::seq::fib_table;

/// Coefficients of the edge-partition linear form `a*x + b*y + c*z` for the
/// Fibonacci cube of some dimension: `a` collects edges inside the 0-prefixed
/// subcube, `b` the link edges of the decomposition, `c` the edges inside the
/// 10-prefixed subcube. Evaluating at x = y = z = 1 gives the Mostar index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionPolynomial {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl PartitionPolynomial {
    pub fn zero() -> Self {
        PartitionPolynomial {
            a: BigInt::zero(),
            b: BigInt::zero(),
            c: BigInt::zero(),
        }
    }

    /// Evaluation at x = y = z = 1.
    pub fn total(&self) -> BigInt {
        &self.a + &self.b + &self.c
    }
}

fn require(n: usize, min: usize, what: &'static str) -> Result<()> {
    if n < min {
        return Err(Error::DimensionTooSmall { what, n, min });
    }
    Ok(())
}

/// Divides by `div`, panicking if the division is not exact. The formulas
/// guarantee exactness, so a remainder can only mean an implementation bug.
fn exact_div(value: BigInt, div: u32) -> BigInt {
    let div = BigInt::from(div);
    let rem = &value % &div;
    assert!(
        rem.is_zero(),
        "inexact division: {value} not divisible by {div}"
    );
    value / div
}

fn sign(n: usize) -> BigInt {
    if n.is_multiple_of(2) {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

/// Mostar index of the Fibonacci cube as the coordinate-cut summation:
/// sum over k of (cut size) * (side imbalance), both in Fibonacci numbers.
pub fn mostar_gamma_sum(n: usize) -> Result<BigInt> {
    require(n, 2, "Mostar cut summation")?;
    let f = fib_table(n + 3);
    let mut total = BigInt::zero();
    for k in 1..=n {
        let cut = &f[k] * &f[n - k + 1];
        let imbalance = &f[k + 1] * &f[n - k + 2] - &cut;
        total += cut * imbalance;
    }
    Ok(total)
}

/// Same summation with the imbalance rewritten as
/// `f_k f_(n-k) + f_(k-1) f_(n-k+2)`; must agree with `mostar_gamma_sum`.
pub fn mostar_gamma_alt(n: usize) -> Result<BigInt> {
    require(n, 2, "Mostar alternate summation")?;
    let f = fib_table(n + 3);
    let mut total = BigInt::zero();
    for k in 1..=n {
        let cut = &f[k] * &f[n - k + 1];
        let imbalance = &f[k] * &f[n - k] + &f[k - 1] * &f[n - k + 2];
        total += cut * imbalance;
    }
    Ok(total)
}

/// Closed form for the Mostar index of the Fibonacci cube:
/// `((3n-2) f_(2n+2) + n f_(2n+1) + (3n+2)(-1)^n) / 25`.
pub fn mostar_gamma_closed(n: usize) -> Result<BigInt> {
    require(n, 2, "Mostar closed form")?;
    let f = fib_table(2 * n + 3);
    let n_int = BigInt::from(n);
    let bracket =
        (3 * &n_int - 2) * &f[2 * n + 2] + &n_int * &f[2 * n + 1] + (3 * &n_int + 2) * sign(n);
    Ok(exact_div(bracket, 25))
}

/// Mostar index of the Lucas cube: `n f_n f_(n-1)`.
pub fn mostar_lambda(n: usize) -> Result<BigInt> {
    require(n, 2, "Lucas Mostar formula")?;
    let f = fib_table(n + 1);
    Ok(BigInt::from(n) * &f[n] * &f[n - 1])
}

/// Partition coefficients by the substitution recursion, expanded once into
/// linear recurrences on the coefficient triple:
///
/// ```text
/// a_n = a_(n-1) + c_(n-1) + 2 a_(n-2) + b_(n-2) + c_(n-2) + f_(n-1) (f_n + f_(n-2))
/// b_n = f_n f_(n-1)
/// c_n = a_(n-1) + a_(n-2) + b_(n-2) + c_(n-2)
/// ```
///
/// with the zero triple for n = 0 and n = 1. Note the `2 a_(n-2)` term: the
/// tempting `2 a_(n-1)` variant yields a_4 = 22 instead of 16.
pub fn mn_recursion(n: usize) -> PartitionPolynomial {
    let mut prev2 = PartitionPolynomial::zero(); // n - 2
    let mut prev1 = PartitionPolynomial::zero(); // n - 1
    if n < 2 {
        return prev1;
    }
    let f = fib_table(n + 1);
    for m in 2..=n {
        let a = &prev1.a
            + &prev1.c
            + 2 * &prev2.a
            + &prev2.b
            + &prev2.c
            + &f[m - 1] * (&f[m] + &f[m - 2]);
        let b = &f[m] * &f[m - 1];
        let c = &prev1.a + &prev2.a + &prev2.b + &prev2.c;
        prev2 = std::mem::replace(&mut prev1, PartitionPolynomial { a, b, c });
    }
    prev1
}

/// Wiener index of the Fibonacci cube as the cut summation
/// `sum over k of f_k f_(k+1) f_(n-k+1) f_(n-k+2)`.
pub fn wiener_gamma_sum(n: usize) -> Result<BigInt> {
    require(n, 1, "Wiener cut summation")?;
    let f = fib_table(n + 3);
    let mut total = BigInt::zero();
    for k in 1..=n {
        total += &f[k] * &f[k + 1] * &f[n - k + 1] * &f[n - k + 2];
    }
    Ok(total)
}

/// The previously known closed form for the Wiener index:
/// `(4(n+1) f_n^2 + (9n+2) f_n f_(n+1) + 6n f_(n+1)^2) / 25`.
pub fn wiener_gamma_closed_cited(n: usize) -> Result<BigInt> {
    require(n, 1, "Wiener closed form (quadratic)")?;
    let f = fib_table(n + 2);
    let n_int = BigInt::from(n);
    let bracket = 4 * (&n_int + 1) * &f[n] * &f[n]
        + (9 * &n_int + 2) * &f[n] * &f[n + 1]
        + 6 * &n_int * &f[n + 1] * &f[n + 1];
    Ok(exact_div(bracket, 25))
}

/// The simpler closed form derived through the Mostar generating function:
/// `((3n+2) f_(2n+3) + (n-2) f_(2n+2) - (n+2)(-1)^n) / 25`, valid for n >= 2.
pub fn wiener_gamma_closed_new(n: usize) -> Result<BigInt> {
    require(n, 2, "Wiener closed form (bisected)")?;
    let f = fib_table(2 * n + 4);
    let n_int = BigInt::from(n);
    let bracket =
        (3 * &n_int + 2) * &f[2 * n + 3] + (&n_int - 2) * &f[2 * n + 2] - (&n_int + 2) * sign(n);
    Ok(exact_div(bracket, 25))
}

/// `sum over k of (f_k f_(n-k+1))^2`: the squared-cut contribution linking
/// the Wiener and Mostar indices, `W = Mo + this`.
pub fn square_cut_sum(n: usize) -> BigInt {
    if n == 0 {
        return BigInt::zero();
    }
    let f = fib_table(n + 1);
    let mut total = BigInt::zero();
    for k in 1..=n {
        let cut = &f[k] * &f[n - k + 1];
        total += &cut * &cut;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn triple(a: i64, b: i64, c: i64) -> PartitionPolynomial {
        PartitionPolynomial {
            a: big(a),
            b: big(b),
            c: big(c),
        }
    }

    #[test]
    fn mostar_gamma_small_values() {
        // Mo(Gamma_2..6) = 2, 7, 28, 92, 298.
        let expected = [(2, 2), (3, 7), (4, 28), (5, 92), (6, 298)];
        for (n, want) in expected {
            assert_eq!(mostar_gamma_sum(n).unwrap(), big(want), "sum at {n}");
            assert_eq!(mostar_gamma_alt(n).unwrap(), big(want), "alt at {n}");
            assert_eq!(mostar_gamma_closed(n).unwrap(), big(want), "closed at {n}");
            assert_eq!(mn_recursion(n).total(), big(want), "recursion at {n}");
        }
    }

    #[test]
    fn mostar_lambda_small_values() {
        assert_eq!(mostar_lambda(2).unwrap(), big(2));
        assert_eq!(mostar_lambda(3).unwrap(), big(6));
        assert_eq!(mostar_lambda(4).unwrap(), big(24));
        assert_eq!(mostar_lambda(5).unwrap(), big(75));
    }

    #[test]
    fn partition_table() {
        assert_eq!(mn_recursion(0), PartitionPolynomial::zero());
        assert_eq!(mn_recursion(1), PartitionPolynomial::zero());
        assert_eq!(mn_recursion(2), triple(1, 1, 0));
        assert_eq!(mn_recursion(3), triple(4, 2, 1));
        assert_eq!(mn_recursion(4), triple(16, 6, 6));
        assert_eq!(mn_recursion(5), triple(54, 15, 23));
    }

    #[test]
    fn recursion_rejects_wrong_lag() {
        // With 2 a_(n-1) in place of 2 a_(n-2) the a-column would run
        // 1, 4, 22, ... instead of 1, 4, 16, ...
        assert_eq!(mn_recursion(4).a, big(16));
        assert_ne!(mn_recursion(4).a, big(22));
    }

    #[test]
    fn wiener_small_values() {
        // W(Gamma_1..7) = 1, 4, 16, 54, 176, 548, 1667.
        let expected = [1, 4, 16, 54, 176, 548, 1667];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(wiener_gamma_sum(n).unwrap(), big(want), "sum at {n}");
            assert_eq!(
                wiener_gamma_closed_cited(n).unwrap(),
                big(want),
                "cited at {n}"
            );
            if n >= 2 {
                assert_eq!(wiener_gamma_closed_new(n).unwrap(), big(want), "new at {n}");
            }
        }
    }

    #[test]
    fn square_cut_small_values() {
        assert_eq!(square_cut_sum(0), big(0));
        assert_eq!(square_cut_sum(2), big(2));
        assert_eq!(square_cut_sum(3), big(9));
        assert_eq!(square_cut_sum(5), big(84));
    }

    #[test]
    fn wiener_decomposes_as_mostar_plus_squares() {
        for n in 2..=200 {
            let lhs = wiener_gamma_sum(n).unwrap();
            let rhs = mostar_gamma_closed(n).unwrap() + square_cut_sum(n);
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn methods_agree_to_200() {
        for n in 2..=200 {
            let sum = mostar_gamma_sum(n).unwrap();
            assert_eq!(sum, mostar_gamma_alt(n).unwrap(), "alt at {n}");
            assert_eq!(sum, mostar_gamma_closed(n).unwrap(), "closed at {n}");
            assert_eq!(sum, mn_recursion(n).total(), "recursion at {n}");
            let w = wiener_gamma_sum(n).unwrap();
            assert_eq!(w, wiener_gamma_closed_cited(n).unwrap(), "w cited at {n}");
            assert_eq!(w, wiener_gamma_closed_new(n).unwrap(), "w new at {n}");
        }
    }

    #[test]
    fn partition_a_is_previous_wiener() {
        for n in 3..=200 {
            assert_eq!(
                mn_recursion(n).a,
                wiener_gamma_sum(n - 1).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn partition_b_is_fib_product() {
        let f = fib_table(201);
        for n in 2..=200 {
            assert_eq!(mn_recursion(n).b, &f[n] * &f[n - 1], "n = {n}");
        }
    }

    #[test]
    fn imbalance_identity_term_level() {
        // f_(k+1) f_(n-k+2) - f_k f_(n-k+1) = f_k f_(n-k) + f_(k-1) f_(n-k+2)
        let f = fib_table(203);
        for n in 1..=200usize {
            for k in 1..=n {
                let lhs = &f[k + 1] * &f[n - k + 2] - &f[k] * &f[n - k + 1];
                let rhs = &f[k] * &f[n - k] + &f[k - 1] * &f[n - k + 2];
                assert_eq!(lhs, rhs, "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn domains_are_enforced() {
        assert!(mostar_gamma_sum(1).is_err());
        assert!(mostar_gamma_alt(0).is_err());
        assert!(mostar_gamma_closed(1).is_err());
        assert!(mostar_lambda(1).is_err());
        assert!(wiener_gamma_sum(0).is_err());
        assert!(wiener_gamma_closed_cited(0).is_err());
        assert!(wiener_gamma_closed_new(1).is_err());
    }
}
