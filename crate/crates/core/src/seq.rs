//! Exact Fibonacci and Lucas numbers.
//!
//! Everything downstream (cut sizes, index formulas, generating function
//! coefficients) is expressed in these two sequences, so they are computed
//! with arbitrary precision integers: `fib(2003)` has 419 digits and the
//! closed-form evaluators routinely reach that far.

use num_bigint::BigInt;

/// Fibonacci number `f_n`, with `f_0 = 0`, `f_1 = 1`.
pub fn fib(n: usize) -> BigInt {
    let mut a = BigInt::from(0u8);
    let mut b = BigInt::from(1u8);
    for _ in 0..n {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}

/// Lucas number `L_n`, with `L_0 = 2`, `L_1 = 1`.
pub fn lucas(n: usize) -> BigInt {
    let mut a = BigInt::from(2u8);
    let mut b = BigInt::from(1u8);
    for _ in 0..n {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}

/// Prefix table `[f_0, f_1, ..., f_{len-1}]`.
///
/// The summation formulas index Fibonacci numbers O(n) times per evaluation;
/// a per-call table keeps them O(n) overall without any shared cache.
pub fn fib_table(len: usize) -> Vec<BigInt> {
    let mut table = Vec::with_capacity(len);
    let mut a = BigInt::from(0u8);
    let mut b = BigInt::from(1u8);
    for _ in 0..len {
        let next = &a + &b;
        table.push(std::mem::replace(&mut a, b));
        b = next;
    }
    table
}

/// Prefix table `[L_0, L_1, ..., L_{len-1}]`.
pub fn lucas_table(len: usize) -> Vec<BigInt> {
    let mut table = Vec::with_capacity(len);
    let mut a = BigInt::from(2u8);
    let mut b = BigInt::from(1u8);
    for _ in 0..len {
        let next = &a + &b;
        table.push(std::mem::replace(&mut a, b));
        b = next;
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fib_values() {
        let expected = [0u64, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(fib(n), BigInt::from(want), "f_{n}");
        }
    }

    #[test]
    fn small_lucas_values() {
        let expected = [2u64, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(lucas(n), BigInt::from(want), "L_{n}");
        }
    }

    #[test]
    fn recurrences_hold_up_to_1000() {
        let f = fib_table(1001);
        let l = lucas_table(1001);
        for n in 2..=1000 {
            assert_eq!(f[n], &f[n - 1] + &f[n - 2], "fib recurrence at {n}");
            assert_eq!(l[n], &l[n - 1] + &l[n - 2], "lucas recurrence at {n}");
        }
    }

    #[test]
    fn lucas_is_sum_of_fib_neighbors() {
        let f = fib_table(1002);
        let l = lucas_table(1001);
        for n in 1..=1000 {
            assert_eq!(
                l[n],
                &f[n - 1] + &f[n + 1],
                "L_n = f_(n-1) + f_(n+1) at {n}"
            );
        }
    }

    #[test]
    fn fib_is_monotone() {
        let f = fib_table(1001);
        for n in 1..=1000 {
            assert!(f[n] >= f[n - 1], "f monotone at {n}");
        }
    }

    #[test]
    fn tables_match_point_evaluations() {
        let f = fib_table(300);
        let l = lucas_table(300);
        for n in (0..300).step_by(37) {
            assert_eq!(f[n], fib(n));
            assert_eq!(l[n], lucas(n));
        }
    }

    #[test]
    fn decimal_round_trip_is_lossless_at_depth() {
        // The closed forms at n = 1000 need f_2003; exactness must extend
        // to at least n = 10^4.
        for value in [fib(2003), fib(10_000), lucas(10_000)] {
            let rendered = value.to_string();
            let parsed: BigInt = rendered.parse().expect("decimal parse");
            assert_eq!(parsed, value);
        }
        assert_eq!(fib(10_000).to_string().len(), 2090);
    }
}
