//! Scalar backends. The simulator is generic over [`Amplitude`]; the two
//! implementations are exact [`DyadicReal`] and double-precision
//! [`FloatComplex`].

mod dyadic;

use std::fmt;

pub use dyadic::DyadicReal;
pub use num_complex::Complex64 as FloatComplex;
use serde::{Deserialize, Serialize};

use crate::error::ArithmeticError;

/// Absolute per-amplitude tolerance for float comparisons.
pub const FLOAT_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Float,
}

impl Backend {
    pub fn as_str(&self) -> &'static str {
        match self {
            Backend::Exact => "exact",
            Backend::Float => "float",
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Real scalars: probabilities, norms, distances.
pub trait RealScalar: Clone + PartialEq + PartialOrd + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn from_dyadic(d: DyadicReal) -> Self;
    fn try_add(&self, rhs: &Self) -> Result<Self, ArithmeticError>;
    fn try_sub(&self, rhs: &Self) -> Result<Self, ArithmeticError>;
    fn try_abs(&self) -> Result<Self, ArithmeticError>;
    fn try_half(&self) -> Result<Self, ArithmeticError>;
    fn to_f64(&self) -> f64;
    /// Exact equality for the dyadic backend, [`FLOAT_TOLERANCE`] for floats.
    fn agrees_with(&self, other: &Self) -> bool;
}

/// State-vector amplitudes.
pub trait Amplitude: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    type Real: RealScalar;
    const BACKEND: Backend;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_dyadic(d: DyadicReal) -> Self;
    fn is_zero(&self) -> bool;
    fn try_neg(&self) -> Result<Self, ArithmeticError>;
    fn try_add(&self, rhs: &Self) -> Result<Self, ArithmeticError>;
    fn try_sub(&self, rhs: &Self) -> Result<Self, ArithmeticError>;
    fn try_mul(&self, rhs: &Self) -> Result<Self, ArithmeticError>;
    fn conj(&self) -> Self;
    /// `|z|²`
    fn norm_sqr(&self) -> Result<Self::Real, ArithmeticError>;
    /// `|self - other|` as a double, for reporting.
    fn deviation(&self, other: &Self) -> f64;
    fn agrees_with(&self, other: &Self) -> bool;
    fn to_complex(&self) -> FloatComplex;
}

impl RealScalar for DyadicReal {
    fn zero() -> Self {
        DyadicReal::ZERO
    }
    fn from_dyadic(d: DyadicReal) -> Self {
        d
    }
    fn try_add(&self, rhs: &Self) -> Result<Self, ArithmeticError> {
        self.checked_add(rhs)
    }
    fn try_sub(&self, rhs: &Self) -> Result<Self, ArithmeticError> {
        self.checked_sub(rhs)
    }
    fn try_abs(&self) -> Result<Self, ArithmeticError> {
        self.checked_abs()
    }
    fn try_half(&self) -> Result<Self, ArithmeticError> {
        self.checked_half()
    }
    fn to_f64(&self) -> f64 {
        DyadicReal::to_f64(self)
    }
    fn agrees_with(&self, other: &Self) -> bool {
        self == other
    }
}

impl Amplitude for DyadicReal {
    type Real = DyadicReal;
    const BACKEND: Backend = Backend::Exact;

    fn zero() -> Self {
        DyadicReal::ZERO
    }
    fn one() -> Self {
        DyadicReal::ONE
    }
    fn from_dyadic(d: DyadicReal) -> Self {
        d
    }
    fn is_zero(&self) -> bool {
        DyadicReal::is_zero(self)
    }
    fn try_neg(&self) -> Result<Self, ArithmeticError> {
        self.checked_neg()
    }
    fn try_add(&self, rhs: &Self) -> Result<Self, ArithmeticError> {
        self.checked_add(rhs)
    }
    fn try_sub(&self, rhs: &Self) -> Result<Self, ArithmeticError> {
        self.checked_sub(rhs)
    }
    fn try_mul(&self, rhs: &Self) -> Result<Self, ArithmeticError> {
        self.checked_mul(rhs)
    }
    fn conj(&self) -> Self {
        *self
    }
    fn norm_sqr(&self) -> Result<DyadicReal, ArithmeticError> {
        self.checked_mul(self)
    }
    fn deviation(&self, other: &Self) -> f64 {
        match self.checked_sub(other) {
            Ok(d) => d.to_f64().abs(),
            Err(_) => (self.to_f64() - other.to_f64()).abs(),
        }
    }
    fn agrees_with(&self, other: &Self) -> bool {
        self == other
    }
    fn to_complex(&self) -> FloatComplex {
        FloatComplex::new(self.to_f64(), 0.0)
    }
}

fn finite(x: f64) -> Result<f64, ArithmeticError> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(ArithmeticError::NonFinite)
    }
}

fn finite_c(z: FloatComplex) -> Result<FloatComplex, ArithmeticError> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(ArithmeticError::NonFinite)
    }
}

impl RealScalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn from_dyadic(d: DyadicReal) -> Self {
        d.to_f64()
    }
    fn try_add(&self, rhs: &Self) -> Result<Self, ArithmeticError> {
        finite(self + rhs)
    }
    fn try_sub(&self, rhs: &Self) -> Result<Self, ArithmeticError> {
        finite(self - rhs)
    }
    fn try_abs(&self) -> Result<Self, ArithmeticError> {
        Ok(self.abs())
    }
    fn try_half(&self) -> Result<Self, ArithmeticError> {
        Ok(self * 0.5)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn agrees_with(&self, other: &Self) -> bool {
        (self - other).abs() <= FLOAT_TOLERANCE
    }
}

impl Amplitude for FloatComplex {
    type Real = f64;
    const BACKEND: Backend = Backend::Float;

    fn zero() -> Self {
        FloatComplex::new(0.0, 0.0)
    }
    fn one() -> Self {
        FloatComplex::new(1.0, 0.0)
    }
    fn from_dyadic(d: DyadicReal) -> Self {
        FloatComplex::new(d.to_f64(), 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn try_neg(&self) -> Result<Self, ArithmeticError> {
        Ok(-*self)
    }
    fn try_add(&self, rhs: &Self) -> Result<Self, ArithmeticError> {
        finite_c(self + rhs)
    }
    fn try_sub(&self, rhs: &Self) -> Result<Self, ArithmeticError> {
        finite_c(self - rhs)
    }
    fn try_mul(&self, rhs: &Self) -> Result<Self, ArithmeticError> {
        finite_c(self * rhs)
    }
    fn conj(&self) -> Self {
        FloatComplex::conj(self)
    }
    fn norm_sqr(&self) -> Result<f64, ArithmeticError> {
        finite(FloatComplex::norm_sqr(self))
    }
    fn deviation(&self, other: &Self) -> f64 {
        (self - other).norm()
    }
    fn agrees_with(&self, other: &Self) -> bool {
        self.deviation(other) <= FLOAT_TOLERANCE
    }
    fn to_complex(&self) -> FloatComplex {
        *self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dyadic() -> impl Strategy<Value = DyadicReal> {
        (
            -(1i128 << 16)..=(1i128 << 16),
            -(1i128 << 16)..=(1i128 << 16),
            0u32..=32,
        )
            .prop_map(|(a, b, h)| DyadicReal::new(a, b, h))
    }

    fn rel_close(x: f64, y: f64) -> bool {
        (x - y).abs() <= 1e-12 * x.abs().max(y.abs()).max(f64::MIN_POSITIVE)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn add_matches_float(x in dyadic(), y in dyadic()) {
            let s = x.checked_add(&y).unwrap();
            let expected = x.to_f64() + y.to_f64();
            // Cancellation makes relative error meaningless near zero.
            prop_assert!(rel_close(s.to_f64(), expected) || (s.to_f64() - expected).abs() < 1e-12 * (x.to_f64().abs() + y.to_f64().abs()));
        }

        #[test]
        fn mul_matches_float(x in dyadic(), y in dyadic()) {
            let p = x.checked_mul(&y).unwrap();
            let expected = x.to_f64() * y.to_f64();
            prop_assert!(rel_close(p.to_f64(), expected) || (p.to_f64() - expected).abs() < 1e-12 * (x.to_f64() * y.to_f64()).abs().max(1e-300));
        }

        #[test]
        fn equality_iff_float_images_agree(x in dyadic(), y in dyadic()) {
            let close = (x.to_f64() - y.to_f64()).abs() <= 1e-9 * x.to_f64().abs().max(y.to_f64().abs()).max(1e-30);
            prop_assert_eq!(x == y, close);
        }

        #[test]
        fn add_commutes_and_associates(x in dyadic(), y in dyadic(), z in dyadic()) {
            prop_assert_eq!(x.checked_add(&y).unwrap(), y.checked_add(&x).unwrap());
            let left = x.checked_add(&y).unwrap().checked_add(&z).unwrap();
            let right = x.checked_add(&y.checked_add(&z).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn ordering_matches_float(x in dyadic(), y in dyadic()) {
            let ord = x.partial_cmp(&y).unwrap();
            if x != y {
                prop_assert_eq!(ord, x.to_f64().partial_cmp(&y.to_f64()).unwrap());
            } else {
                prop_assert_eq!(ord, std::cmp::Ordering::Equal);
            }
        }
    }
}
