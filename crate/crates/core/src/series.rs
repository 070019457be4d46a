//! Exact power-series coefficient extraction for rational generating
//! functions with integer polynomial numerator and denominator.
//!
//! When the denominator has constant term ±1 the series coefficients obey an
//! integer linear recurrence read off the denominator, so they can be pumped
//! out one by one with no division beyond a sign flip. That gives a third,
//! independent route to the index sequences next to the summations and
//! closed forms.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense integer polynomial; `coeffs[i]` multiplies `t^i`. Trailing zeros
/// are stripped, the zero polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: impl IntoIterator<Item = BigInt>) -> Self {
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().collect();
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)))
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Exact convolution product.
    pub fn multiply(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

/// A ratio of integer polynomials regarded as a formal power series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGf {
    numerator: IntPolynomial,
    denominator: IntPolynomial,
}

impl RationalGf {
    /// The denominator needs a nonzero constant term for the power-series
    /// expansion to exist at all.
    pub fn new(numerator: IntPolynomial, denominator: IntPolynomial) -> Result<Self> {
        if denominator.coeff(0).is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(RationalGf {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.denominator
    }

    /// First `count` power-series coefficients.
    ///
    /// Writing the identity `denominator * series = numerator` out per power
    /// of `t` gives `q_0 s_n = p_n - sum_(i>=1) q_i s_(n-i)`; a constant term
    /// `q_0 = ±1` keeps every step in the integers, anything else is
    /// rejected.
    pub fn coefficients(&self, count: usize) -> Result<Vec<BigInt>> {
        let q0 = self.denominator.coeff(0);
        let negate = if q0 == BigInt::one() {
            false
        } else if q0 == -BigInt::one() {
            true
        } else {
            return Err(Error::NonUnitConstantTerm);
        };
        let q = self.denominator.coeffs();
        let mut series: Vec<BigInt> = Vec::with_capacity(count);
        for n in 0..count {
            let mut s = self.numerator.coeff(n);
            for i in 1..q.len().min(n + 1) {
                s -= &q[i] * &series[n - i];
            }
            series.push(if negate { -s } else { s });
        }
        Ok(series)
    }
}

/// The generating functions under study, assembled from their factored
/// denominators so the printed factorizations themselves are exercised.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGf {
    /// Coefficients a_n of the partition polynomial (edges in the 0-prefixed
    /// subcube): t^2 / ((1+t)^2 (1-3t+t^2)^2).
    PartitionA,
    /// Coefficients b_n (link edges): t^2 / ((1+t)(1-3t+t^2)).
    PartitionB,
    /// Coefficients c_n (edges in the 10-prefixed subcube):
    /// (t^3 + 2t^4 - t^5) / ((1+t)^2 (1-3t+t^2)^2).
    PartitionC,
    /// Mostar index of the Fibonacci cube: (2-t)t^2 / ((1+t)^2 (1-3t+t^2)^2).
    MostarGamma,
    /// Squared cut sizes, the Wiener-minus-Mostar correction:
    /// t(1-t)^2 / ((1+t)^2 (1-3t+t^2)^2).
    CutSquares,
    /// Wiener index of the Fibonacci cube: t / ((1+t)^2 (1-3t+t^2)^2).
    WienerGamma,
    /// 1 / (1-3t+t^2), whose coefficients are the even-indexed Fibonacci
    /// numbers f_(2n+2).
    FibBisection,
    /// 1 / (1-3t+t^2)^2; coefficients are ((4n+2) f_(2n+2) + (3n+3) f_(2n+1)) / 5.
    FibBisectionSquared,
}

impl NamedGf {
    pub const ALL: [NamedGf; 8] = [
        NamedGf::PartitionA,
        NamedGf::PartitionB,
        NamedGf::PartitionC,
        NamedGf::MostarGamma,
        NamedGf::CutSquares,
        NamedGf::WienerGamma,
        NamedGf::FibBisection,
        NamedGf::FibBisectionSquared,
    ];
}

/// One of the named generating functions, with its denominator expanded from
/// factors.
pub fn builtin(name: NamedGf) -> RationalGf {
    let one_plus_t = IntPolynomial::from_i64(&[1, 1]);
    let bisection = IntPolynomial::from_i64(&[1, -3, 1]);
    let linear = one_plus_t.multiply(&bisection);
    let squared = linear.multiply(&linear);

    let (numerator, denominator) = match name {
        NamedGf::PartitionA => (IntPolynomial::from_i64(&[0, 0, 1]), squared),
        NamedGf::PartitionB => (IntPolynomial::from_i64(&[0, 0, 1]), linear),
        NamedGf::PartitionC => (IntPolynomial::from_i64(&[0, 0, 0, 1, 2, -1]), squared),
        NamedGf::MostarGamma => (IntPolynomial::from_i64(&[0, 0, 2, -1]), squared),
        NamedGf::CutSquares => (IntPolynomial::from_i64(&[0, 1, -2, 1]), squared),
        NamedGf::WienerGamma => (IntPolynomial::from_i64(&[0, 1]), squared),
        NamedGf::FibBisection => (IntPolynomial::one(), bisection),
        NamedGf::FibBisectionSquared => {
            let sq = bisection.multiply(&bisection);
            (IntPolynomial::one(), sq)
        }
    };
    RationalGf::new(numerator, denominator).expect("builtin denominators have unit constant term")
}
