//! Exact numbers of the form `(a + b√2) / 2^h`.
//!
//! Every amplitude produced by Hadamard and comparison gates acting on basis
//! states lives in this ring, so the simulator can check identities with zero
//! tolerance. Components are 128-bit integers; every operation is checked and
//! reports [`ArithmeticError::Overflow`] instead of wrapping.

use std::cmp::Ordering;
use std::f64::consts::SQRT_2;
use std::fmt;

use crate::error::ArithmeticError;

/// An element of ℤ[√2] scaled by `2^-h`, always held in canonical form
/// (`h` minimal), so structural equality is value equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct DyadicReal {
    a: i128,
    b: i128,
    h: u32,
}

impl DyadicReal {
    pub const ZERO: Self = Self { a: 0, b: 0, h: 0 };
    pub const ONE: Self = Self { a: 1, b: 0, h: 0 };
    /// `1/√2 = √2/2`
    pub const FRAC_1_SQRT_2: Self = Self { a: 0, b: 1, h: 1 };

    /// Builds `(a + b√2) / 2^h` and reduces it to canonical form.
    pub fn new(a: i128, b: i128, h: u32) -> Self {
        let mut x = Self { a, b, h };
        x.canonicalize();
        x
    }

    pub fn from_int(a: i128) -> Self {
        Self { a, b: 0, h: 0 }
    }

    /// `2^-n`
    pub fn pow2_inv(n: u32) -> Self {
        Self { a: 1, b: 0, h: n }
    }

    /// `(1/√2)^n`
    pub fn inv_sqrt2_pow(n: u32) -> Self {
        if n.is_multiple_of(2) {
            Self::pow2_inv(n / 2)
        } else {
            Self {
                a: 0,
                b: 1,
                h: n / 2 + 1,
            }
        }
    }

    pub fn a(&self) -> i128 {
        self.a
    }

    pub fn b(&self) -> i128 {
        self.b
    }

    pub fn h(&self) -> u32 {
        self.h
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    fn canonicalize(&mut self) {
        if self.is_zero() {
            self.h = 0;
            return;
        }
        let shift = self
            .a
            .trailing_zeros()
            .min(self.b.trailing_zeros())
            .min(self.h);
        self.a >>= shift;
        self.b >>= shift;
        self.h -= shift;
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, ArithmeticError> {
        let h = self.h.max(rhs.h);
        let (xa, xb) = (scale_up(self.a, h - self.h)?, scale_up(self.b, h - self.h)?);
        let (ya, yb) = (scale_up(rhs.a, h - rhs.h)?, scale_up(rhs.b, h - rhs.h)?);
        let a = xa.checked_add(ya).ok_or(ArithmeticError::Overflow)?;
        let b = xb.checked_add(yb).ok_or(ArithmeticError::Overflow)?;
        Ok(Self::new(a, b, h))
    }

    pub fn checked_neg(&self) -> Result<Self, ArithmeticError> {
        Ok(Self {
            a: self.a.checked_neg().ok_or(ArithmeticError::Overflow)?,
            b: self.b.checked_neg().ok_or(ArithmeticError::Overflow)?,
            h: self.h,
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, ArithmeticError> {
        self.checked_add(&rhs.checked_neg()?)
    }

    /// `(a₁+b₁√2)(a₂+b₂√2) = (a₁a₂ + 2b₁b₂) + (a₁b₂ + a₂b₁)√2`
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, ArithmeticError> {
        let ovf = || ArithmeticError::Overflow;
        let aa = self.a.checked_mul(rhs.a).ok_or_else(ovf)?;
        let bb2 = self
            .b
            .checked_mul(rhs.b)
            .and_then(|v| v.checked_mul(2))
            .ok_or_else(ovf)?;
        let ab = self.a.checked_mul(rhs.b).ok_or_else(ovf)?;
        let ba = self.b.checked_mul(rhs.a).ok_or_else(ovf)?;
        let h = self.h.checked_add(rhs.h).ok_or_else(ovf)?;
        Ok(Self::new(
            aa.checked_add(bb2).ok_or_else(ovf)?,
            ab.checked_add(ba).ok_or_else(ovf)?,
            h,
        ))
    }

    /// Exact halving; only fails when the exponent itself would overflow.
    pub fn checked_half(&self) -> Result<Self, ArithmeticError> {
        if self.is_zero() {
            return Ok(*self);
        }
        let h = self.h.checked_add(1).ok_or(ArithmeticError::Overflow)?;
        Ok(Self::new(self.a, self.b, h))
    }

    pub fn checked_abs(&self) -> Result<Self, ArithmeticError> {
        match self.signum() {
            Ordering::Less => self.checked_neg(),
            _ => Ok(*self),
        }
    }

    /// Sign of `a + b√2`, decided exactly.
    pub fn signum(&self) -> Ordering {
        match (self.a.cmp(&0), self.b.cmp(&0)) {
            (Ordering::Equal, Ordering::Equal) => Ordering::Equal,
            (Ordering::Less, Ordering::Greater) | (Ordering::Greater, Ordering::Less) => {
                // a² ≠ 2b² because √2 is irrational.
                let a_sq = wide_mul(self.a.unsigned_abs(), self.a.unsigned_abs());
                let (hi, lo) = wide_mul(self.b.unsigned_abs(), self.b.unsigned_abs());
                let two_b_sq = ((hi << 1) | (lo >> 127), lo << 1);
                if a_sq > two_b_sq {
                    self.a.cmp(&0)
                } else {
                    self.b.cmp(&0)
                }
            }
            (sa, Ordering::Equal) => sa,
            (Ordering::Equal, sb) => sb,
            (sa, _) => sa,
        }
    }

    /// Exact ordering; `None` only if the difference overflows.
    pub fn try_cmp(&self, other: &Self) -> Result<Ordering, ArithmeticError> {
        Ok(self.checked_sub(other)?.signum())
    }

    /// Nearest double to the value, up to a few ulps.
    pub fn to_f64(&self) -> f64 {
        let num = self.numerator_f64();
        // Split the scaling so large h does not produce an infinite divisor.
        let mut value = num;
        let mut h = self.h;
        while h > 0 {
            let step = h.min(1000);
            value /= 2f64.powi(step as i32);
            h -= step;
        }
        value
    }

    /// `a + b√2` in double precision. When the two terms have opposite signs
    /// the conjugate form `(a² − 2b²) / (a − b√2)` avoids cancellation.
    fn numerator_f64(&self) -> f64 {
        const LIMIT: i128 = 1 << 62;
        let mixed = (self.a < 0) != (self.b < 0) && self.a != 0 && self.b != 0;
        if mixed && self.a.abs() < LIMIT && self.b.abs() < LIMIT {
            let norm = self.a * self.a - 2 * self.b * self.b;
            norm as f64 / (self.a as f64 - self.b as f64 * SQRT_2)
        } else {
            self.a as f64 + self.b as f64 * SQRT_2
        }
    }
}

impl PartialOrd for DyadicReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.try_cmp(other).ok()
    }
}

impl fmt::Display for DyadicReal {
    /// Renders as `(a+b√2)/2^h`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.b < 0 { '-' } else { '+' };
        write!(
            f,
            "({}{}{}√2)/2^{}",
            self.a,
            sign,
            self.b.unsigned_abs(),
            self.h
        )
    }
}

fn scale_up(v: i128, bits: u32) -> Result<i128, ArithmeticError> {
    if v == 0 || bits == 0 {
        return Ok(v);
    }
    if bits >= 127 {
        return Err(ArithmeticError::Overflow);
    }
    v.checked_mul(1i128 << bits)
        .ok_or(ArithmeticError::Overflow)
}

/// Full 256-bit product as `(high, low)` halves.
fn wide_mul(x: u128, y: u128) -> (u128, u128) {
    const MASK: u128 = u64::MAX as u128;
    let (x1, x0) = (x >> 64, x & MASK);
    let (y1, y0) = (y >> 64, y & MASK);
    let p00 = x0 * y0;
    let p01 = x0 * y1;
    let p10 = x1 * y0;
    let p11 = x1 * y1;
    let mid = (p00 >> 64) + (p01 & MASK) + (p10 & MASK);
    let lo = (p00 & MASK) | (mid << 64);
    let hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
    (hi, lo)
}
