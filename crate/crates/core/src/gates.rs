//! Gate matrices and the kernels that apply them to a [`StateVector`].
//!
//! One-qubit gates use basis order `|0⟩, |1⟩`. Two-qubit gates placed on an
//! ordered pair `(p, q)` use basis order `|b_p b_q⟩`: row/column index is
//! `2·b_p + b_q`. The pair need not be adjacent.

use crate::amplitude::{Amplitude, DyadicReal};
use crate::bits::BooleanOracle;
use crate::error::{Error, Result};
use crate::state::{qubit_mask, StateVector};

#[derive(Debug, Clone, PartialEq)]
pub struct Gate1<A> {
    m: [[A; 2]; 2],
}

#[derive(Debug, Clone, PartialEq)]
pub struct Gate2<A> {
    m: [[A; 4]; 4],
}

fn dot<A: Amplitude>(row: &[A], v: &[A]) -> Result<A> {
    let mut acc = A::zero();
    for (g, x) in row.iter().zip(v) {
        if g.is_zero() || x.is_zero() {
            continue;
        }
        acc = acc.try_add(&g.try_mul(x)?)?;
    }
    Ok(acc)
}

fn mat_mul<A: Amplitude, const N: usize>(x: &[[A; N]; N], y: &[[A; N]; N]) -> Result<[[A; N]; N]> {
    let mut out: [[A; N]; N] = std::array::from_fn(|_| std::array::from_fn(|_| A::zero()));
    for (r, row) in out.iter_mut().enumerate() {
        for (c, cell) in row.iter_mut().enumerate() {
            let col: [A; N] = std::array::from_fn(|k| y[k][c].clone());
            *cell = dot(&x[r], &col)?;
        }
    }
    Ok(out)
}

fn dagger<A: Amplitude, const N: usize>(x: &[[A; N]; N]) -> [[A; N]; N] {
    std::array::from_fn(|r| std::array::from_fn(|c| x[c][r].conj()))
}

fn is_identity<A: Amplitude, const N: usize>(x: &[[A; N]; N]) -> bool {
    x.iter().enumerate().all(|(r, row)| {
        row.iter().enumerate().all(|(c, v)| {
            let expected = if r == c { A::one() } else { A::zero() };
            v.agrees_with(&expected)
        })
    })
}

impl<A: Amplitude> Gate1<A> {
    pub fn new(m: [[A; 2]; 2]) -> Self {
        Self { m }
    }

    pub fn identity() -> Self {
        Self::new([[A::one(), A::zero()], [A::zero(), A::one()]])
    }

    pub fn matrix(&self) -> &[[A; 2]; 2] {
        &self.m
    }

    pub fn dagger(&self) -> Self {
        Self::new(dagger(&self.m))
    }

    /// Matrix product `self · rhs`.
    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        Ok(Self::new(mat_mul(&self.m, &rhs.m)?))
    }

    /// `G†G = I`, exactly in the dyadic backend.
    pub fn is_unitary(&self) -> Result<bool> {
        Ok(is_identity(&mat_mul(&dagger(&self.m), &self.m)?))
    }
}

impl<A: Amplitude> Gate2<A> {
    pub fn new(m: [[A; 4]; 4]) -> Self {
        Self { m }
    }

    pub fn identity() -> Self {
        Self::new(std::array::from_fn(|r| {
            std::array::from_fn(|c| if r == c { A::one() } else { A::zero() })
        }))
    }

    pub fn matrix(&self) -> &[[A; 4]; 4] {
        &self.m
    }

    pub fn dagger(&self) -> Self {
        Self::new(dagger(&self.m))
    }

    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        Ok(Self::new(mat_mul(&self.m, &rhs.m)?))
    }

    pub fn is_unitary(&self) -> Result<bool> {
        Ok(is_identity(&mat_mul(&dagger(&self.m), &self.m)?))
    }

    /// The same operator expressed for the reversed pair `(q, p)`:
    /// conjugation by the swap of basis states `|01⟩ ↔ |10⟩`.
    pub fn swapped(&self) -> Self {
        const PERM: [usize; 4] = [0, 2, 1, 3];
        Self::new(std::array::from_fn(|r| {
            std::array::from_fn(|c| self.m[PERM[r]][PERM[c]].clone())
        }))
    }
}

/// `(1/√2)·[[1, 1], [1, -1]]`
pub fn hadamard<A: Amplitude>() -> Gate1<A> {
    let r = A::from_dyadic(DyadicReal::FRAC_1_SQRT_2);
    let neg = A::from_dyadic(DyadicReal::new(0, -1, 1));
    Gate1::new([[r.clone(), r.clone()], [r, neg]])
}

/// The comparison gate coupling a first-register qubit `i` (first basis bit)
/// with second-register qubit `i+n` (second basis bit):
///
/// ```text
///          [  1  0  1  0 ]
/// (1/√2) · [  0  1  0 -1 ]
///          [ -1  0  1  0 ]
///          [  0  1  0  1 ]
/// ```
///
/// Acting on a basis pair it gives
/// `C|j⟩|k⟩ = (-1)^{jk} · (|0⟩ + (-1)^{1+j+k}|1⟩)/√2 ⊗ |k⟩`.
pub fn comparison_gate<A: Amplitude>() -> Gate2<A> {
    let p = || A::from_dyadic(DyadicReal::FRAC_1_SQRT_2);
    let m = || A::from_dyadic(DyadicReal::new(0, -1, 1));
    let z = A::zero;
    Gate2::new([
        [p(), z(), p(), z()],
        [z(), p(), z(), m()],
        [m(), z(), p(), z()],
        [z(), p(), z(), p()],
    ])
}

/// Inserts a zero bit at position `pos` (0 = least significant).
#[inline]
fn insert_zero_bit(x: usize, pos: u32) -> usize {
    let low = x & ((1 << pos) - 1);
    ((x >> pos) << (pos + 1)) | low
}

/// Mixes each pair of amplitudes that differ only in qubit `q` by `g`.
pub fn apply_gate1<A: Amplitude>(s: &mut StateVector<A>, q: usize, g: &Gate1<A>) -> Result<()> {
    s.check_qubit(q)?;
    let mask = qubit_mask(s.num_qubits(), q);
    let pos = mask.trailing_zeros();
    let half = s.len() / 2;
    let amps = s.amplitudes_mut();
    for k in 0..half {
        let i0 = insert_zero_bit(k, pos);
        let i1 = i0 | mask;
        let v = [amps[i0].clone(), amps[i1].clone()];
        let out0 = dot(&g.m[0], &v)?;
        let out1 = dot(&g.m[1], &v)?;
        amps[i0] = out0;
        amps[i1] = out1;
    }
    Ok(())
}

/// Applies `g` to the ordered qubit pair `(p, q)`; the four amplitudes that
/// agree on every other qubit are mixed, indexed by `2·b_p + b_q`.
pub fn apply_gate2<A: Amplitude>(
    s: &mut StateVector<A>,
    p: usize,
    q: usize,
    g: &Gate2<A>,
) -> Result<()> {
    s.check_qubit(p)?;
    s.check_qubit(q)?;
    if p == q {
        return Err(Error::SameQubit(p));
    }
    let mp = qubit_mask(s.num_qubits(), p);
    let mq = qubit_mask(s.num_qubits(), q);
    let (lo, hi) = {
        let (a, b) = (mp.trailing_zeros(), mq.trailing_zeros());
        (a.min(b), a.max(b))
    };
    let quarter = s.len() / 4;
    let amps = s.amplitudes_mut();
    for k in 0..quarter {
        let base = insert_zero_bit(insert_zero_bit(k, lo), hi);
        let idx = [base, base | mq, base | mp, base | mp | mq];
        let v: [A; 4] = std::array::from_fn(|r| amps[idx[r]].clone());
        let out: [A; 4] = {
            let mut out: [A; 4] = std::array::from_fn(|_| A::zero());
            for (r, o) in out.iter_mut().enumerate() {
                *o = dot(&g.m[r], &v)?;
            }
            out
        };
        for (i, o) in idx.into_iter().zip(out) {
            amps[i] = o;
        }
    }
    Ok(())
}

/// Multiplies the amplitude of every basis state whose register
/// `reg_start .. reg_start+n-1` reads `k` by `(-1)^{f(k)}`.
pub fn apply_phase_oracle<A: Amplitude>(
    s: &mut StateVector<A>,
    f: &BooleanOracle,
    reg_start: usize,
) -> Result<()> {
    let n = f.n();
    let m = s.num_qubits();
    if reg_start == 0 || reg_start + n - 1 > m {
        return Err(Error::RegisterOutOfRange {
            start: reg_start,
            len: n,
            num_qubits: m,
        });
    }
    let shift = m - (reg_start + n - 1);
    let mask = (1usize << n) - 1;
    for (x, amp) in s.amplitudes_mut().iter_mut().enumerate() {
        if f.eval((x >> shift) & mask) {
            *amp = amp.try_neg()?;
        }
    }
    Ok(())
}

/// XOR oracle `|k⟩|b⟩ → |k⟩|b ⊕ f(k)⟩` on `n+1` qubits; the ancilla is the
/// last qubit.
pub fn apply_ancilla_oracle<A: Amplitude>(s: &mut StateVector<A>, f: &BooleanOracle) -> Result<()> {
    s.check_width_matches(f.n() + 1)?;
    let amps = s.amplitudes_mut();
    for k in 0..f.domain_size() {
        if f.eval(k) {
            amps.swap(2 * k, 2 * k + 1);
        }
    }
    Ok(())
}

/// `|−⟩ = (|0⟩ − |1⟩)/√2`
pub fn minus_state<A: Amplitude>() -> StateVector<A> {
    StateVector::from_amplitudes(vec![
        A::from_dyadic(DyadicReal::FRAC_1_SQRT_2),
        A::from_dyadic(DyadicReal::new(0, -1, 1)),
    ])
    .expect("two amplitudes form a valid one-qubit state")
}

/// Appends an ancilla prepared in `|−⟩` as the last qubit.
pub fn attach_minus_ancilla<A: Amplitude>(s: &StateVector<A>) -> Result<StateVector<A>> {
    s.tensor(&minus_state())
}

/// Removes a trailing `|−⟩` ancilla after checking that the state factors as
/// `|ψ⟩ ⊗ |−⟩`; fails with [`Error::EntangledAncilla`] otherwise.
pub fn discard_minus_ancilla<A: Amplitude>(s: &StateVector<A>) -> Result<StateVector<A>> {
    if s.num_qubits() < 2 {
        return Err(Error::InvalidArgument(
            "no register left after discarding the ancilla".into(),
        ));
    }
    let sqrt2 = A::from_dyadic(DyadicReal::new(0, 1, 0));
    let amps = s.amplitudes();
    let mut reduced = Vec::with_capacity(amps.len() / 2);
    for pair in amps.chunks_exact(2) {
        if !pair[1].agrees_with(&pair[0].try_neg()?) {
            return Err(Error::EntangledAncilla);
        }
        reduced.push(pair[0].try_mul(&sqrt2)?);
    }
    StateVector::from_amplitudes(reduced)
}

/// Gates a circuit can reference by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gate1Kind {
    Hadamard,
    Identity,
}

impl Gate1Kind {
    pub fn matrix<A: Amplitude>(&self) -> Gate1<A> {
        match self {
            Gate1Kind::Hadamard => hadamard(),
            Gate1Kind::Identity => Gate1::identity(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gate2Kind {
    Comparison,
    Identity,
}

impl Gate2Kind {
    pub fn matrix<A: Amplitude>(&self) -> Gate2<A> {
        match self {
            Gate2Kind::Comparison => comparison_gate(),
            Gate2Kind::Identity => Gate2::identity(),
        }
    }
}
