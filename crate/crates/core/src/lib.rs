//! State-vector simulation of the qubit-comparison search circuit, with an
//! exact `ℤ[√2]` dyadic backend for zero-tolerance verification.
//!
//! The circuit prepares two `n`-qubit registers in uniform superposition,
//! phase-marks the second register with an oracle `f`, then couples qubit `i`
//! of the first register with qubit `i+n` of the second through a comparison
//! gate. Its output is `2^{-n/2} Σ_k (-1)^{f(k)} |k⟩|k⟩`, whose measurement
//! statistics do not depend on `f`. The [`analytic`] module rebuilds every
//! intermediate state in closed form and [`refutation`] turns that into
//! checkable statements about distributions.

pub mod amplitude;
pub mod analytic;
pub mod bits;
pub mod circuit;
pub mod error;
pub mod gates;
pub mod refutation;
pub mod state;

pub use amplitude::{Amplitude, Backend, DyadicReal, FloatComplex, RealScalar, FLOAT_TOLERANCE};
pub use bits::{BitString, BooleanOracle};
pub use circuit::{
    build_devries, build_grover, grover_optimal_iterations, Circuit, CircuitOp, Trace,
};
pub use error::{ArithmeticError, Error, Result};
pub use state::StateVector;
