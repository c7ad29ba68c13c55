use crate::amplitude::{Amplitude, FloatComplex, RealScalar};
use crate::error::{Error, Result};

/// Upper bound on simulated width; 2^30 amplitudes is already several GiB.
pub const MAX_QUBITS: usize = 30;

/// Dense state of `m` qubits. Qubit 1 is the most significant bit of the
/// amplitude index, so `|j₁…jₘ⟩` sits at index `j₁…jₘ` read in binary.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<A> {
    num_qubits: usize,
    amps: Vec<A>,
}

/// Index mask of qubit `q` (1-based) in an `m`-qubit state.
pub(crate) fn qubit_mask(num_qubits: usize, q: usize) -> usize {
    1 << (num_qubits - q)
}

impl<A: Amplitude> StateVector<A> {
    fn check_width(num_qubits: usize) -> Result<()> {
        if num_qubits == 0 {
            return Err(Error::InvalidArgument(
                "state needs at least one qubit".into(),
            ));
        }
        if num_qubits > MAX_QUBITS {
            return Err(Error::CapExceeded {
                what: "qubit count",
                value: num_qubits,
                cap: MAX_QUBITS,
            });
        }
        Ok(())
    }

    /// `|0…0⟩`
    pub fn zero_state(num_qubits: usize) -> Result<Self> {
        Self::basis_state(num_qubits, 0)
    }

    pub fn basis_state(num_qubits: usize, index: usize) -> Result<Self> {
        Self::check_width(num_qubits)?;
        let len = 1usize << num_qubits;
        if index >= len {
            return Err(Error::InvalidArgument(format!(
                "basis index {index} out of range for {num_qubits} qubits"
            )));
        }
        let mut amps = vec![A::zero(); len];
        amps[index] = A::one();
        Ok(Self { num_qubits, amps })
    }

    /// Wraps raw amplitudes. Normalization is the caller's responsibility.
    pub fn from_amplitudes(amps: Vec<A>) -> Result<Self> {
        let len = amps.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::InvalidLength(len));
        }
        let num_qubits = len.trailing_zeros() as usize;
        Self::check_width(num_qubits)?;
        Ok(Self { num_qubits, amps })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn amplitudes(&self) -> &[A] {
        &self.amps
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [A] {
        &mut self.amps
    }

    pub fn into_amplitudes(self) -> Vec<A> {
        self.amps
    }

    pub fn amplitude(&self, index: usize) -> &A {
        &self.amps[index]
    }

    pub fn check_qubit(&self, q: usize) -> Result<()> {
        if q == 0 || q > self.num_qubits {
            return Err(Error::QubitOutOfRange {
                qubit: q,
                num_qubits: self.num_qubits,
            });
        }
        Ok(())
    }

    pub fn check_width_matches(&self, expected: usize) -> Result<()> {
        if self.num_qubits != expected {
            return Err(Error::WidthMismatch {
                expected,
                found: self.num_qubits,
            });
        }
        Ok(())
    }

    /// `Σ |amps[x]|²`, exact in the dyadic backend.
    pub fn norm_squared(&self) -> Result<A::Real> {
        self.amps
            .iter()
            .try_fold(A::Real::zero(), |acc, a| Ok(acc.try_add(&a.norm_sqr()?)?))
    }

    /// Largest `|a_x - b_x|` over all indices.
    pub fn max_deviation(&self, other: &Self) -> Result<f64> {
        other.check_width_matches(self.num_qubits)?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.deviation(b))
            .fold(0.0, f64::max))
    }

    /// Amplitude-wise agreement: exact equality for the dyadic backend,
    /// within [`crate::FLOAT_TOLERANCE`] per amplitude for floats.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.num_qubits == other.num_qubits
            && self
                .amps
                .iter()
                .zip(&other.amps)
                .all(|(a, b)| a.agrees_with(b))
    }

    /// `self ⊗ other`, with `self` occupying the leading (most significant)
    /// qubits.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let num_qubits = self.num_qubits + other.num_qubits;
        Self::check_width(num_qubits)?;
        let mut amps = Vec::with_capacity(self.amps.len() * other.amps.len());
        for a in &self.amps {
            for b in &other.amps {
                amps.push(a.try_mul(b)?);
            }
        }
        Ok(Self { num_qubits, amps })
    }

    pub fn to_float(&self) -> StateVector<FloatComplex> {
        StateVector {
            num_qubits: self.num_qubits,
            amps: self.amps.iter().map(Amplitude::to_complex).collect(),
        }
    }
}
