//! Closed-form states of the comparison-search circuit, built by direct
//! summation over basis labels without touching the gate kernels.
//!
//! Index layout matches [`StateVector`]: the first register `j` occupies the
//! high `n` bits and the second register `k` the low `n` bits, so `|j⟩|k⟩` is
//! stored at `(j << n) | k`.
//!
//! [`psi2a`] and [`psi3`] are deliberately literal sums (the latter costs
//! `O(2^{3n})`); their agreement with both the simulator and
//! [`target_output`] is what the verification relies on.

use crate::amplitude::{Amplitude, DyadicReal};
use crate::bits::{BitString, BooleanOracle};
use crate::error::{Error, Result};
use crate::state::StateVector;

#[inline]
fn parity_of_and(x: u64, y: u64) -> u32 {
    (x & y).count_ones() & 1
}

/// `x·y = Σ xᵢyᵢ mod 2`.
pub fn mod2_inner(x: &BitString, y: &BitString) -> Result<u8> {
    if x.width() != y.width() {
        return Err(Error::WidthMismatch {
            expected: x.width(),
            found: y.width(),
        });
    }
    Ok(parity_of_and(x.value(), y.value()) as u8)
}

/// `Σ_j (-1)^{j·(k ⊕ l)}` summed directly over all `2^n` values of `j`.
/// Equals `2^n` when `k = l` and `0` otherwise.
pub fn delta_identity(n: usize, k: &BitString, l: &BitString) -> Result<i64> {
    if k.width() != n || l.width() != n {
        return Err(Error::WidthMismatch {
            expected: n,
            found: if k.width() != n { k.width() } else { l.width() },
        });
    }
    let sum_kl = k.xor(l)?;
    let mut total = 0i64;
    for j in 0..(1u64 << n) {
        let j = BitString::new(j, n)?;
        total += if mod2_inner(&j, &sum_kl)? == 0 { 1 } else { -1 };
    }
    Ok(total)
}

fn check(n: usize, f: Option<&BooleanOracle>) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "register size n must be positive".into(),
        ));
    }
    if let Some(f) = f {
        if f.n() != n {
            return Err(Error::WidthMismatch {
                expected: n,
                found: f.n(),
            });
        }
    }
    Ok(())
}

fn sign(odd: bool) -> i64 {
    if odd {
        -1
    } else {
        1
    }
}

/// Scales integer coefficients by an exact common factor.
fn scaled<A: Amplitude>(coeffs: &[i64], scale: DyadicReal) -> Result<StateVector<A>> {
    let amps = coeffs
        .iter()
        .map(|&c| {
            Ok(A::from_dyadic(
                DyadicReal::from_int(c as i128).checked_mul(&scale)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    StateVector::from_amplitudes(amps)
}

/// `ψ₀ = |0⟩|0⟩` on `2n` qubits.
pub fn psi0<A: Amplitude>(n: usize) -> Result<StateVector<A>> {
    check(n, None)?;
    StateVector::zero_state(2 * n)
}

/// `ψ₁ = 2^{-n} (Σ_j |j⟩)(Σ_k |k⟩)`
pub fn psi1<A: Amplitude>(n: usize) -> Result<StateVector<A>> {
    check(n, None)?;
    scaled(&vec![1; 1 << (2 * n)], DyadicReal::pow2_inv(n as u32))
}

/// `ψ₂ = 2^{-n} Σ_{j,k} (-1)^{f(k)} |j⟩|k⟩`
pub fn psi2<A: Amplitude>(n: usize, f: &BooleanOracle) -> Result<StateVector<A>> {
    check(n, Some(f))?;
    let size = 1usize << n;
    let mut coeffs = vec![0i64; size * size];
    for j in 0..size {
        for k in 0..size {
            coeffs[(j << n) | k] = sign(f.eval(k));
        }
    }
    scaled(&coeffs, DyadicReal::pow2_inv(n as u32))
}

/// `ψ₂ₐ`: `ψ₂` with qubit `n` of every term `|j⟩|k⟩` replaced by
/// `(-1)^{jₙkₙ} (|0⟩ + (-1)^{1+jₙ+kₙ}|1⟩)/√2`.
pub fn psi2a<A: Amplitude>(n: usize, f: &BooleanOracle) -> Result<StateVector<A>> {
    check(n, Some(f))?;
    let size = 1usize << n;
    let mut coeffs = vec![0i64; size * size];
    for j in 0..size {
        let jn = j & 1;
        let rest = j & !1;
        for k in 0..size {
            let kn = k & 1;
            let term = sign(f.eval(k)) * sign(jn * kn == 1);
            coeffs[(rest << n) | k] += term;
            coeffs[((rest | 1) << n) | k] += term * sign((1 + jn + kn) % 2 == 1);
        }
    }
    let scale = DyadicReal::pow2_inv(n as u32).checked_mul(&DyadicReal::FRAC_1_SQRT_2)?;
    scaled(&coeffs, scale)
}

/// `ψ₃` from the fully expanded triple sum: the amplitude of `|l⟩|k⟩` is
/// `2^{-n}·2^{-n/2} Σ_j (-1)^{f(k) + j·k + l₁+…+lₙ + l·(j⊕k)}`.
pub fn psi3<A: Amplitude>(n: usize, f: &BooleanOracle) -> Result<StateVector<A>> {
    check(n, Some(f))?;
    let size = 1u64 << n;
    let mut coeffs = vec![0i64; 1 << (2 * n)];
    for l in 0..size {
        let l_weight = l.count_ones();
        for k in 0..size {
            let fk = f.eval(k as usize) as u32;
            let mut sum = 0i64;
            for j in 0..size {
                let exponent = fk + parity_of_and(j, k) + l_weight + parity_of_and(l, j ^ k);
                sum += sign(exponent % 2 == 1);
            }
            coeffs[((l << n) | k) as usize] = sum;
        }
    }
    let scale = DyadicReal::pow2_inv(n as u32).checked_mul(&DyadicReal::inv_sqrt2_pow(n as u32))?;
    scaled(&coeffs, scale)
}

/// `2^{-n/2} Σ_k (-1)^{f(k)} |k⟩|k⟩`, the output the circuit actually
/// produces.
pub fn target_output<A: Amplitude>(n: usize, f: &BooleanOracle) -> Result<StateVector<A>> {
    check(n, Some(f))?;
    let size = 1usize << n;
    let mut coeffs = vec![0i64; size * size];
    for k in 0..size {
        coeffs[(k << n) | k] = sign(f.eval(k));
    }
    scaled(&coeffs, DyadicReal::inv_sqrt2_pow(n as u32))
}
