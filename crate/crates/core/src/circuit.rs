//! Gate sequences with named checkpoints, the comparison-search circuit and a
//! Grover baseline.

use std::collections::HashSet;
use std::f64::consts::PI;
use std::sync::Arc;

use crate::amplitude::Amplitude;
use crate::bits::BooleanOracle;
use crate::error::{Error, Result};
use crate::gates::{apply_gate1, apply_gate2, apply_phase_oracle, Gate1Kind, Gate2Kind};
use crate::state::StateVector;

pub const PSI0: &str = "psi0";
pub const PSI1: &str = "psi1";
pub const PSI2: &str = "psi2";
pub const PSI2A: &str = "psi2a";
pub const PSI3: &str = "psi3";

/// Checkpoint labels of the comparison-search circuit, in circuit order.
pub const CHECKPOINTS: [&str; 5] = [PSI0, PSI1, PSI2, PSI2A, PSI3];

#[derive(Debug, Clone, PartialEq)]
pub enum CircuitOp {
    Gate1 {
        qubit: usize,
        gate: Gate1Kind,
    },
    Gate2 {
        first: usize,
        second: usize,
        gate: Gate2Kind,
    },
    PhaseOracle {
        reg_start: usize,
        oracle: Arc<BooleanOracle>,
    },
    Checkpoint(String),
}

/// An immutable-after-construction list of operations on `width` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    width: usize,
    ops: Vec<CircuitOp>,
    labels: HashSet<String>,
}

/// States captured at each checkpoint, in circuit order, plus the output.
#[derive(Debug, Clone, PartialEq)]
pub struct Trace<A> {
    checkpoints: Vec<(String, StateVector<A>)>,
    output: StateVector<A>,
}

impl<A> Trace<A> {
    pub fn get(&self, label: &str) -> Option<&StateVector<A>> {
        self.checkpoints
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, s)| s)
    }

    pub fn checkpoints(&self) -> &[(String, StateVector<A>)] {
        &self.checkpoints
    }

    pub fn output(&self) -> &StateVector<A> {
        &self.output
    }

    pub fn len(&self) -> usize {
        self.checkpoints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checkpoints.is_empty()
    }
}

impl Circuit {
    pub fn new(width: usize) -> Result<Self> {
        if width == 0 {
            return Err(Error::InvalidArgument(
                "circuit width must be positive".into(),
            ));
        }
        Ok(Self {
            width,
            ops: Vec::new(),
            labels: HashSet::new(),
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn ops(&self) -> &[CircuitOp] {
        &self.ops
    }

    fn check_qubit(&self, q: usize) -> Result<()> {
        if q == 0 || q > self.width {
            return Err(Error::QubitOutOfRange {
                qubit: q,
                num_qubits: self.width,
            });
        }
        Ok(())
    }

    /// Appends an operation after validating it against the circuit width.
    pub fn push(&mut self, op: CircuitOp) -> Result<&mut Self> {
        match &op {
            CircuitOp::Gate1 { qubit, .. } => self.check_qubit(*qubit)?,
            CircuitOp::Gate2 { first, second, .. } => {
                self.check_qubit(*first)?;
                self.check_qubit(*second)?;
                if first == second {
                    return Err(Error::SameQubit(*first));
                }
            }
            CircuitOp::PhaseOracle { reg_start, oracle } => {
                if *reg_start == 0 || reg_start + oracle.n() - 1 > self.width {
                    return Err(Error::RegisterOutOfRange {
                        start: *reg_start,
                        len: oracle.n(),
                        num_qubits: self.width,
                    });
                }
            }
            CircuitOp::Checkpoint(label) => {
                if !self.labels.insert(label.clone()) {
                    return Err(Error::DuplicateCheckpoint(label.clone()));
                }
            }
        }
        self.ops.push(op);
        Ok(self)
    }

    pub fn h(&mut self, qubit: usize) -> Result<&mut Self> {
        self.push(CircuitOp::Gate1 {
            qubit,
            gate: Gate1Kind::Hadamard,
        })
    }

    pub fn comparison(&mut self, first: usize, second: usize) -> Result<&mut Self> {
        self.push(CircuitOp::Gate2 {
            first,
            second,
            gate: Gate2Kind::Comparison,
        })
    }

    pub fn oracle(&mut self, reg_start: usize, oracle: Arc<BooleanOracle>) -> Result<&mut Self> {
        self.push(CircuitOp::PhaseOracle { reg_start, oracle })
    }

    pub fn checkpoint(&mut self, label: &str) -> Result<&mut Self> {
        self.push(CircuitOp::Checkpoint(label.to_owned()))
    }

    pub fn gate_count(&self) -> usize {
        self.ops
            .iter()
            .filter(|op| !matches!(op, CircuitOp::Checkpoint(_)))
            .count()
    }

    /// Ordered `(first, second)` placements of every two-qubit gate.
    pub fn two_qubit_placements(&self) -> Vec<(usize, usize)> {
        self.ops
            .iter()
            .filter_map(|op| match op {
                CircuitOp::Gate2 { first, second, .. } => Some((*first, *second)),
                _ => None,
            })
            .collect()
    }

    fn apply<A: Amplitude>(op: &CircuitOp, s: &mut StateVector<A>) -> Result<()> {
        match op {
            CircuitOp::Gate1 { qubit, gate } => apply_gate1(s, *qubit, &gate.matrix()),
            CircuitOp::Gate2 {
                first,
                second,
                gate,
            } => apply_gate2(s, *first, *second, &gate.matrix()),
            CircuitOp::PhaseOracle { reg_start, oracle } => {
                apply_phase_oracle(s, oracle, *reg_start)
            }
            CircuitOp::Checkpoint(_) => Ok(()),
        }
    }

    /// Applies every operation in order to `s0` and returns the final state.
    pub fn run<A: Amplitude>(&self, s0: StateVector<A>) -> Result<StateVector<A>> {
        s0.check_width_matches(self.width)?;
        let mut s = s0;
        for op in &self.ops {
            Self::apply(op, &mut s)?;
        }
        Ok(s)
    }

    /// As [`Circuit::run`], additionally snapshotting the state at every
    /// checkpoint.
    pub fn run_with_trace<A: Amplitude>(&self, s0: StateVector<A>) -> Result<Trace<A>> {
        s0.check_width_matches(self.width)?;
        let mut s = s0;
        let mut checkpoints = Vec::new();
        for op in &self.ops {
            if let CircuitOp::Checkpoint(label) = op {
                checkpoints.push((label.clone(), s.clone()));
            } else {
                Self::apply(op, &mut s)?;
            }
        }
        Ok(Trace {
            checkpoints,
            output: s,
        })
    }
}

fn check_oracle_width(n: usize, f: &BooleanOracle) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "register size n must be positive".into(),
        ));
    }
    if f.n() != n {
        return Err(Error::WidthMismatch {
            expected: n,
            found: f.n(),
        });
    }
    Ok(())
}

/// The comparison-search circuit on two `n`-qubit registers:
/// `ψ₀ → H^{⊗2n} → ψ₁ → Q_f (second register) → ψ₂ → C_{n,2n} → ψ₂ₐ →
/// C_{n-1,2n-1} … C_{1,n+1} → ψ₃`.
pub fn build_devries(n: usize, f: &BooleanOracle) -> Result<Circuit> {
    build_devries_with_order(n, f, &(1..=n).rev().collect::<Vec<_>>())
}

/// Variant of [`build_devries`] placing the comparison gates `C_{i,i+n}` in
/// the given order of `i`. The `ψ₂ₐ` checkpoint follows the first of them.
pub fn build_devries_with_order(n: usize, f: &BooleanOracle, order: &[usize]) -> Result<Circuit> {
    check_oracle_width(n, f)?;
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (1..=n).collect::<Vec<_>>() {
        return Err(Error::InvalidArgument(format!(
            "comparison order {order:?} is not a permutation of 1..={n}"
        )));
    }
    let mut c = Circuit::new(2 * n)?;
    c.checkpoint(PSI0)?;
    for q in 1..=2 * n {
        c.h(q)?;
    }
    c.checkpoint(PSI1)?;
    c.oracle(n + 1, Arc::new(f.clone()))?;
    c.checkpoint(PSI2)?;
    for (pos, &i) in order.iter().enumerate() {
        c.comparison(i, i + n)?;
        if pos == 0 {
            c.checkpoint(PSI2A)?;
        }
    }
    c.checkpoint(PSI3)?;
    Ok(c)
}

/// Grover search on `n` qubits: a Hadamard layer followed by `iterations`
/// rounds of phase oracle and diffusion. Diffusion is `H^{⊗n}`, a phase flip
/// on every nonzero basis state, `H^{⊗n}`.
pub fn build_grover(n: usize, f: &BooleanOracle, iterations: usize) -> Result<Circuit> {
    check_oracle_width(n, f)?;
    let oracle = Arc::new(f.clone());
    let nonzero = Arc::new(BooleanOracle::from_fn(n, |k| k != 0)?);
    let mut c = Circuit::new(n)?;
    for q in 1..=n {
        c.h(q)?;
    }
    for _ in 0..iterations {
        c.oracle(1, oracle.clone())?;
        for q in 1..=n {
            c.h(q)?;
        }
        c.oracle(1, nonzero.clone())?;
        for q in 1..=n {
            c.h(q)?;
        }
    }
    Ok(c)
}

/// `⌊(π/4)·√(2^n / M)⌋`
pub fn grover_optimal_iterations(n: usize, marked_count: usize) -> Result<usize> {
    if marked_count == 0 {
        return Err(Error::InvalidArgument(
            "marked_count must be positive".into(),
        ));
    }
    if n >= usize::BITS as usize || marked_count > 1usize << n {
        return Err(Error::InvalidArgument(format!(
            "marked_count {marked_count} exceeds the 2^{n} search space"
        )));
    }
    let ratio = (1u128 << n) as f64 / marked_count as f64;
    Ok((PI / 4.0 * ratio.sqrt()).floor() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amplitude::DyadicReal;

    fn f0(n: usize) -> BooleanOracle {
        BooleanOracle::zero(n).unwrap()
    }

    #[test]
    fn devries_structure_n1() {
        let c = build_devries(1, &f0(1)).unwrap();
        let labels: Vec<_> = c
            .ops()
            .iter()
            .map(|op| match op {
                CircuitOp::Gate1 { qubit, .. } => format!("H({qubit})"),
                CircuitOp::Gate2 { first, second, .. } => format!("C({first},{second})"),
                CircuitOp::PhaseOracle { reg_start, .. } => format!("Oracle({reg_start})"),
                CircuitOp::Checkpoint(l) => l.clone(),
            })
            .collect();
        assert_eq!(
            labels,
            [
                "psi0",
                "H(1)",
                "H(2)",
                "psi1",
                "Oracle(2)",
                "psi2",
                "C(1,2)",
                "psi2a",
                "psi3"
            ]
        );
    }

    #[test]
    fn devries_gate_counts() {
        let c = build_devries(2, &f0(2)).unwrap();
        let h = c
            .ops()
            .iter()
            .filter(|op| matches!(op, CircuitOp::Gate1 { .. }))
            .count();
        let o = c
            .ops()
            .iter()
            .filter(|op| matches!(op, CircuitOp::PhaseOracle { .. }))
            .count();
        assert_eq!((h, o, c.two_qubit_placements().len()), (4, 1, 2));
        assert_eq!(c.gate_count(), 7);
    }

    #[test]
    fn devries_comparison_placements_descend() {
        let c = build_devries(3, &f0(3)).unwrap();
        assert_eq!(c.two_qubit_placements(), vec![(3, 6), (2, 5), (1, 4)]);
    }

    #[test]
    fn devries_rejects_bad_input() {
        assert!(build_devries(0, &f0(1)).is_err());
        assert!(matches!(
            build_devries(2, &f0(3)),
            Err(Error::WidthMismatch { .. })
        ));
        assert!(build_devries_with_order(2, &f0(2), &[1, 1]).is_err());
    }

    #[test]
    fn empty_circuit_is_identity() {
        let c = Circuit::new(2).unwrap();
        let s = StateVector::<DyadicReal>::basis_state(2, 3).unwrap();
        assert_eq!(c.run(s.clone()).unwrap(), s);
    }

    #[test]
    fn run_rejects_width_mismatch() {
        let c = build_devries(1, &f0(1)).unwrap();
        let s = StateVector::<DyadicReal>::zero_state(3).unwrap();
        assert!(matches!(c.run(s), Err(Error::WidthMismatch { .. })));
    }

    #[test]
    fn duplicate_checkpoints_rejected() {
        let mut c = Circuit::new(1).unwrap();
        c.checkpoint("a").unwrap();
        assert_eq!(
            c.checkpoint("a").err(),
            Some(Error::DuplicateCheckpoint("a".into()))
        );
        assert!(c.h(2).is_err());
    }

    #[test]
    fn optimal_iterations() {
        assert_eq!(grover_optimal_iterations(2, 1).unwrap(), 1);
        assert_eq!(grover_optimal_iterations(4, 1).unwrap(), 3);
        assert_eq!(grover_optimal_iterations(10, 1).unwrap(), 25);
        assert!(grover_optimal_iterations(3, 0).is_err());
        assert!(grover_optimal_iterations(2, 5).is_err());
    }

    #[test]
    fn grover_structure() {
        let f = BooleanOracle::from_marked(3, &[5]).unwrap();
        let c = build_grover(3, &f, 2).unwrap();
        // 3 H + 2 × (oracle + 3 H + flip + 3 H)
        assert_eq!(c.gate_count(), 3 + 2 * 8);
        assert!(build_grover(0, &f, 1).is_err());
    }
}
