//! Measurement statistics of the comparison-search circuit.
//!
//! The circuit's output `2^{-n/2} Σ_k (-1)^{f(k)} |k⟩|k⟩` loses the oracle's
//! signs under computational-basis measurement. This module computes the
//! distributions, checks they are identical across oracles, and contrasts the
//! marked-element probability with Grover amplification.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::amplitude::{Amplitude, Backend, DyadicReal, FloatComplex, RealScalar};
use crate::analytic::target_output;
use crate::bits::{BitString, BooleanOracle};
use crate::circuit::{build_devries, build_grover, grover_optimal_iterations};
use crate::error::{Error, Result};
use crate::state::StateVector;

/// Identifier of the generator behind every seeded draw, recorded in reports.
pub const RNG_ALGORITHM: &str = "ChaCha8Rng/seed_from_u64";

/// Probability table over the `2^m` computational-basis outcomes.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution<R> {
    num_qubits: usize,
    probs: Vec<R>,
}

impl<R: RealScalar> Distribution<R> {
    pub fn from_probabilities(probs: Vec<R>) -> Result<Self> {
        let len = probs.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::InvalidLength(len));
        }
        Ok(Self {
            num_qubits: len.trailing_zeros() as usize,
            probs,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn probabilities(&self) -> &[R] {
        &self.probs
    }

    pub fn probability(&self, outcome: usize) -> &R {
        &self.probs[outcome]
    }

    pub fn total(&self) -> Result<R> {
        self.probs
            .iter()
            .try_fold(R::zero(), |acc, p| Ok(acc.try_add(p)?))
    }

    /// Outcomes with nonzero probability.
    pub fn support(&self) -> Vec<usize> {
        self.probs
            .iter()
            .enumerate()
            .filter(|(_, p)| **p != R::zero())
            .map(|(x, _)| x)
            .collect()
    }

    /// Distribution of qubits `qubits` (1-based, inclusive) with every other
    /// qubit summed out.
    pub fn marginal(&self, qubits: RangeInclusive<usize>) -> Result<Self> {
        let (shift, mask) = register_window(self.num_qubits, &qubits)?;
        let mut out = vec![R::zero(); mask + 1];
        for (x, p) in self.probs.iter().enumerate() {
            let slot = &mut out[(x >> shift) & mask];
            *slot = slot.try_add(p)?;
        }
        Self::from_probabilities(out)
    }

    pub fn to_f64(&self) -> Distribution<f64> {
        Distribution {
            num_qubits: self.num_qubits,
            probs: self.probs.iter().map(RealScalar::to_f64).collect(),
        }
    }
}

fn register_window(num_qubits: usize, qubits: &RangeInclusive<usize>) -> Result<(usize, usize)> {
    let (lo, hi) = (*qubits.start(), *qubits.end());
    if lo == 0 || hi < lo || hi > num_qubits {
        return Err(Error::RegisterOutOfRange {
            start: lo,
            len: (hi + 1).saturating_sub(lo),
            num_qubits,
        });
    }
    Ok((num_qubits - hi, (1usize << (hi - lo + 1)) - 1))
}

/// `p(x) = |amps[x]|²`
pub fn distribution<A: Amplitude>(s: &StateVector<A>) -> Result<Distribution<A::Real>> {
    let probs = s
        .amplitudes()
        .iter()
        .map(|a| Ok(a.norm_sqr()?))
        .collect::<Result<Vec<_>>>()?;
    Distribution::from_probabilities(probs)
}

/// Marginal of the measurement distribution of `s` over `qubits`, without
/// materializing the full table.
pub fn state_marginal<A: Amplitude>(
    s: &StateVector<A>,
    qubits: RangeInclusive<usize>,
) -> Result<Distribution<A::Real>> {
    let (shift, mask) = register_window(s.num_qubits(), &qubits)?;
    let mut out = vec![A::Real::zero(); mask + 1];
    for (x, a) in s.amplitudes().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let slot = &mut out[(x >> shift) & mask];
        *slot = slot.try_add(&a.norm_sqr()?)?;
    }
    Distribution::from_probabilities(out)
}

/// `½ Σ_x |p(x) − q(x)|`, exact for dyadic probabilities.
pub fn tv_distance<R: RealScalar>(p: &Distribution<R>, q: &Distribution<R>) -> Result<R> {
    if p.num_qubits != q.num_qubits {
        return Err(Error::WidthMismatch {
            expected: p.num_qubits,
            found: q.num_qubits,
        });
    }
    let sum = p
        .probs
        .iter()
        .zip(&q.probs)
        .try_fold(R::zero(), |acc, (a, b)| -> Result<R> {
            Ok(acc.try_add(&a.try_sub(b)?.try_abs()?)?)
        })?;
    Ok(sum.try_half()?)
}

/// Outcome counts from seeded inverse-CDF draws.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampleCounts {
    pub num_qubits: usize,
    pub draws: u64,
    pub counts: BTreeMap<usize, u64>,
}

impl SampleCounts {
    pub fn count(&self, outcome: usize) -> u64 {
        self.counts.get(&outcome).copied().unwrap_or(0)
    }

    pub fn frequency(&self, outcome: usize) -> f64 {
        self.count(outcome) as f64 / self.draws as f64
    }

    pub fn empirical(&self) -> Distribution<f64> {
        let mut probs = vec![0.0; 1 << self.num_qubits];
        for (&x, &c) in &self.counts {
            probs[x] = c as f64 / self.draws as f64;
        }
        Distribution {
            num_qubits: self.num_qubits,
            probs,
        }
    }
}

/// Draws `count` outcomes from `d` with the supplied generator.
pub fn sample_distribution<R: RealScalar, G: Rng + ?Sized>(
    d: &Distribution<R>,
    count: u64,
    rng: &mut G,
) -> Result<SampleCounts> {
    if count == 0 {
        return Err(Error::InvalidArgument(
            "sample count must be positive".into(),
        ));
    }
    let mut cdf = Vec::with_capacity(d.probs.len());
    let mut acc = 0.0;
    for p in &d.probs {
        acc += p.to_f64();
        cdf.push(acc);
    }
    let last_positive = d
        .probs
        .iter()
        .rposition(|p| p.to_f64() > 0.0)
        .ok_or_else(|| Error::InvalidArgument("cannot sample an all-zero distribution".into()))?;
    let mut counts = BTreeMap::new();
    for _ in 0..count {
        let u = rng.random::<f64>() * acc;
        let x = cdf.partition_point(|&c| c <= u).min(last_positive);
        *counts.entry(x).or_insert(0) += 1;
    }
    Ok(SampleCounts {
        num_qubits: d.num_qubits,
        draws: count,
        counts,
    })
}

/// Measures `s` `count` times; deterministic for a given seed.
pub fn sample<A: Amplitude>(s: &StateVector<A>, count: u64, seed: u64) -> Result<SampleCounts> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_distribution(&distribution(s)?, count, &mut rng)
}

/// Limits that keep sweeps inside a sane time and memory budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    /// Largest oracle count (`2^{2^n}`) swept exhaustively.
    pub max_exhaustive_oracles: u64,
    /// Oracles drawn when the exhaustive count exceeds the cap.
    pub sampled_oracles: usize,
    pub seed: u64,
    pub exact_max_n: usize,
    pub float_max_n: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            max_exhaustive_oracles: 65_536,
            sampled_oracles: 1_000,
            seed: 0,
            exact_max_n: 4,
            float_max_n: 8,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepMode {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleVerdict {
    /// Truth table in hex, LSB = `f(0)`.
    pub oracle_id: String,
    /// Output matches the closed form (exactly, or within tolerance for floats).
    pub exact_match: bool,
    pub max_dev: f64,
    /// TV distance from the first swept oracle's output distribution.
    pub tv_to_first: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub n: usize,
    pub backend: Backend,
    pub mode: SweepMode,
    /// Present for sampled sweeps only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rng: Option<&'static str>,
    pub oracle_count: usize,
    pub matched: usize,
    pub max_deviation: f64,
    pub max_norm_drift: f64,
    /// Largest `|p(k) − 2^{-n}|` over second-register outcomes and oracles.
    pub max_marginal_deviation: f64,
    /// Second-register marginal equals `2^{-n}` for every outcome and oracle
    /// (exactly, or within tolerance for floats).
    pub marginal_uniform: bool,
    pub max_pairwise_tv: f64,
    /// Number of pairwise-distinct output distributions seen.
    pub distinct_distributions: usize,
    pub verdicts: Vec<OracleVerdict>,
}

impl SweepReport {
    /// Every oracle matched, every marginal was uniform and all output
    /// distributions coincide.
    pub fn all_passed(&self) -> bool {
        let tv_limit = match self.backend {
            Backend::Exact => 0.0,
            Backend::Float => crate::FLOAT_TOLERANCE,
        };
        self.matched == self.oracle_count
            && self.marginal_uniform
            && self.max_pairwise_tv <= tv_limit
    }
}

/// Oracles a sweep at width `n` visits: all `2^{2^n}` when within the cap,
/// otherwise `sampled_oracles` seeded random truth tables.
pub fn sweep_oracles(n: usize, config: &SweepConfig) -> Result<(SweepMode, Vec<BooleanOracle>)> {
    let exhaustive_count = if (1usize << n) < 64 {
        Some(1u64 << (1u64 << n))
    } else {
        None
    };
    match exhaustive_count {
        Some(count) if count <= config.max_exhaustive_oracles => {
            let oracles = (0..count)
                .map(|t| BooleanOracle::from_index(n, t))
                .collect::<Result<Vec<_>>>()?;
            Ok((SweepMode::Exhaustive, oracles))
        }
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            let oracles = (0..config.sampled_oracles)
                .map(|_| BooleanOracle::random(n, &mut rng))
                .collect::<Result<Vec<_>>>()?;
            Ok((SweepMode::Sampled, oracles))
        }
    }
}

/// Circuit output for one oracle, compared with the closed form.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleCheck<A> {
    pub matches: bool,
    pub max_deviation: f64,
    /// `|‖ψ‖² − 1|`
    pub norm_drift: f64,
    pub output: StateVector<A>,
}

/// Runs the circuit for one oracle from `|0…0⟩` and compares the output
/// with the closed form amplitude by amplitude.
pub fn check_oracle<A: Amplitude>(n: usize, f: &BooleanOracle) -> Result<OracleCheck<A>> {
    let output = build_devries(n, f)?.run(StateVector::<A>::zero_state(2 * n)?)?;
    let expected = target_output::<A>(n, f)?;
    Ok(OracleCheck {
        matches: output.agrees_with(&expected),
        max_deviation: output.max_deviation(&expected)?,
        norm_drift: (output.norm_squared()?.to_f64() - 1.0).abs(),
        output,
    })
}

fn sweep_generic<A: Amplitude>(
    n: usize,
    mode: SweepMode,
    oracles: &[BooleanOracle],
    config: &SweepConfig,
) -> Result<SweepReport> {
    let uniform = A::Real::from_dyadic(DyadicReal::pow2_inv(n as u32));
    let mut verdicts = Vec::with_capacity(oracles.len());
    let mut distinct: Vec<Distribution<A::Real>> = Vec::new();
    let mut first: Option<Distribution<A::Real>> = None;
    let mut max_deviation = 0.0f64;
    let mut max_norm_drift = 0.0f64;
    let mut max_marginal_deviation = 0.0f64;
    let mut marginal_uniform = true;

    for f in oracles {
        let check = check_oracle::<A>(n, f)?;
        let dist = distribution(&check.output)?;
        let marginal = dist.marginal(n + 1..=2 * n)?;
        for p in marginal.probabilities() {
            marginal_uniform &= p.agrees_with(&uniform);
            max_marginal_deviation =
                max_marginal_deviation.max(p.try_sub(&uniform)?.try_abs()?.to_f64());
        }
        let first = first.get_or_insert_with(|| dist.clone());
        let tv_to_first = tv_distance(first, &dist)?.to_f64();
        if !distinct.contains(&dist) {
            distinct.push(dist);
        }
        max_deviation = max_deviation.max(check.max_deviation);
        max_norm_drift = max_norm_drift.max(check.norm_drift);
        verdicts.push(OracleVerdict {
            oracle_id: f.to_hex(),
            exact_match: check.matches,
            max_dev: check.max_deviation,
            tv_to_first,
        });
    }

    // Every pairwise distance between equal distributions is zero, so the
    // maximum over all pairs is the maximum over distinct representatives.
    let mut max_pairwise_tv = 0.0f64;
    for (i, p) in distinct.iter().enumerate() {
        for q in &distinct[i + 1..] {
            max_pairwise_tv = max_pairwise_tv.max(tv_distance(p, q)?.to_f64());
        }
    }

    let sampled = mode == SweepMode::Sampled;
    Ok(SweepReport {
        n,
        backend: A::BACKEND,
        mode,
        seed: sampled.then_some(config.seed),
        rng: sampled.then_some(RNG_ALGORITHM),
        oracle_count: oracles.len(),
        matched: verdicts.iter().filter(|v| v.exact_match).count(),
        max_deviation,
        max_norm_drift,
        max_marginal_deviation,
        marginal_uniform,
        max_pairwise_tv,
        distinct_distributions: distinct.len(),
        verdicts,
    })
}

/// Checks the circuit output against the closed form for every oracle at
/// width `n` (or a seeded sample of them when `2^{2^n}` is over the cap).
pub fn sweep_all_f(n: usize, backend: Backend, config: &SweepConfig) -> Result<SweepReport> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "register size n must be positive".into(),
        ));
    }
    let cap = match backend {
        Backend::Exact => config.exact_max_n,
        Backend::Float => config.float_max_n,
    };
    if n > cap {
        return Err(Error::CapExceeded {
            what: "register size n",
            value: n,
            cap,
        });
    }
    let (mode, oracles) = sweep_oracles(n, config)?;
    match backend {
        Backend::Exact => sweep_generic::<DyadicReal>(n, mode, &oracles, config),
        Backend::Float => sweep_generic::<FloatComplex>(n, mode, &oracles, config),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EmpiricalFrequencies {
    pub samples: u64,
    pub seed: u64,
    pub rng: &'static str,
    pub devries_marked_frequency: f64,
    pub grover_marked_frequency: f64,
}

/// Marked-element probability with and without amplification.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroverComparison {
    pub n: usize,
    pub marked: u64,
    /// Exact probability of reading `marked` on the second register of the
    /// comparison-search output.
    #[serde(skip)]
    pub devries_prob_exact: DyadicReal,
    pub devries_prob: f64,
    /// `devries_prob_exact == 2^{-n}`.
    pub devries_prob_is_uniform: bool,
    pub grover_iterations: usize,
    pub grover_prob: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub empirical: Option<EmpiricalFrequencies>,
}

/// Largest register size [`compare_grover`] accepts; the exact
/// comparison-search run holds `2^{2n}` dyadic amplitudes.
pub const COMPARE_MAX_N: usize = 12;

/// Contrasts the marked-element probability of the comparison-search circuit
/// (second register, exact backend) with Grover search after the optimal
/// iteration count (float backend). `samples = 0` skips the empirical draws.
pub fn compare_grover(
    n: usize,
    marked: &BitString,
    samples: u64,
    seed: u64,
) -> Result<GroverComparison> {
    if !(2..=COMPARE_MAX_N).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "grover comparison needs 2 <= n <= {COMPARE_MAX_N}, got {n}"
        )));
    }
    if marked.width() != n {
        return Err(Error::WidthMismatch {
            expected: n,
            found: marked.width(),
        });
    }
    let target = marked.value() as usize;
    let f = BooleanOracle::from_marked(n, &[target])?;

    let devries_out = build_devries(n, &f)?.run(StateVector::<DyadicReal>::zero_state(2 * n)?)?;
    let devries_marginal = state_marginal(&devries_out, n + 1..=2 * n)?;
    drop(devries_out);
    let devries_prob_exact = *devries_marginal.probability(target);

    let iterations = grover_optimal_iterations(n, 1)?;
    let grover_out =
        build_grover(n, &f, iterations)?.run(StateVector::<FloatComplex>::zero_state(n)?)?;
    let grover_dist = distribution(&grover_out)?;
    let grover_prob = *grover_dist.probability(target);

    let empirical = if samples > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = sample_distribution(&devries_marginal, samples, &mut rng)?;
        let g = sample_distribution(&grover_dist, samples, &mut rng)?;
        Some(EmpiricalFrequencies {
            samples,
            seed,
            rng: RNG_ALGORITHM,
            devries_marked_frequency: d.frequency(target),
            grover_marked_frequency: g.frequency(target),
        })
    } else {
        None
    };

    Ok(GroverComparison {
        n,
        marked: marked.value(),
        devries_prob_exact,
        devries_prob: devries_prob_exact.to_f64(),
        devries_prob_is_uniform: devries_prob_exact == DyadicReal::pow2_inv(n as u32),
        grover_iterations: iterations,
        grover_prob,
        empirical,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::psi1;

    type Dy = DyadicReal;

    fn half() -> Dy {
        Dy::pow2_inv(1)
    }

    #[test]
    fn distribution_examples() {
        let s = StateVector::<Dy>::zero_state(2).unwrap();
        let d = distribution(&s).unwrap();
        assert_eq!(d.probabilities(), &[Dy::ONE, Dy::ZERO, Dy::ZERO, Dy::ZERO]);

        let r = Dy::FRAC_1_SQRT_2;
        let bell = StateVector::from_amplitudes(vec![r, Dy::ZERO, Dy::ZERO, r]).unwrap();
        let d = distribution(&bell).unwrap();
        assert_eq!(d.probabilities(), &[half(), Dy::ZERO, Dy::ZERO, half()]);
        assert_eq!(d.support(), vec![0, 3]);
        assert_eq!(d.total().unwrap(), Dy::ONE);
    }

    #[test]
    fn target_distribution_ignores_signs() {
        let quarter = Dy::pow2_inv(2);
        for table in 0..16 {
            let f = BooleanOracle::from_index(2, table).unwrap();
            let d = distribution(&target_output::<Dy>(2, &f).unwrap()).unwrap();
            for (x, p) in d.probabilities().iter().enumerate() {
                let diagonal = x >> 2 == x & 3;
                assert_eq!(*p, if diagonal { quarter } else { Dy::ZERO });
            }
        }
    }

    #[test]
    fn marginals() {
        let f = BooleanOracle::from_marked(2, &[1]).unwrap();
        let d = distribution(&target_output::<Dy>(2, &f).unwrap()).unwrap();
        let quarter = Dy::pow2_inv(2);
        assert_eq!(d.marginal(3..=4).unwrap().probabilities(), &[quarter; 4]);
        assert_eq!(d.marginal(1..=2).unwrap().probabilities(), &[quarter; 4]);
        assert_eq!(d.marginal(1..=4).unwrap(), d);
        assert!(d.marginal(0..=2).is_err());
        assert!(d.marginal(2..=5).is_err());
        #[allow(clippy::reversed_empty_ranges)]
        let bad = 3..=2;
        assert!(d.marginal(bad).is_err());

        let s = target_output::<Dy>(2, &f).unwrap();
        assert_eq!(
            state_marginal(&s, 3..=4).unwrap(),
            d.marginal(3..=4).unwrap()
        );
    }

    #[test]
    fn tv_examples() {
        let p = Distribution::from_probabilities(vec![half(), half()]).unwrap();
        assert_eq!(tv_distance(&p, &p).unwrap(), Dy::ZERO);
        let a = Distribution::from_probabilities(vec![Dy::ONE, Dy::ZERO]).unwrap();
        let b = Distribution::from_probabilities(vec![Dy::ZERO, Dy::ONE]).unwrap();
        assert_eq!(tv_distance(&a, &b).unwrap(), Dy::ONE);
        let c =
            Distribution::from_probabilities(vec![Dy::ONE, Dy::ZERO, Dy::ZERO, Dy::ZERO]).unwrap();
        assert!(matches!(
            tv_distance(&a, &c),
            Err(Error::WidthMismatch { .. })
        ));
    }

    #[test]
    fn no_gain_before_and_after() {
        for n in 1..=3 {
            let uniform = Dy::pow2_inv(n as u32);
            let before = state_marginal(&psi1::<Dy>(n).unwrap(), n + 1..=2 * n).unwrap();
            assert!(before.probabilities().iter().all(|p| *p == uniform));
            let f = BooleanOracle::from_marked(n, &[0]).unwrap();
            let out = check_oracle::<Dy>(n, &f).unwrap().output;
            let after = state_marginal(&out, n + 1..=2 * n).unwrap();
            assert_eq!(before, after);
        }
    }

    #[test]
    fn sampling_point_mass() {
        let s = StateVector::<Dy>::basis_state(2, 2).unwrap();
        let c = sample(&s, 1000, 7).unwrap();
        assert_eq!(c.counts.len(), 1);
        assert_eq!(c.count(2), 1000);
        assert!(sample(&s, 0, 7).is_err());
    }

    #[test]
    fn sampling_is_deterministic() {
        let s = psi1::<Dy>(1).unwrap();
        assert_eq!(sample(&s, 500, 3).unwrap(), sample(&s, 500, 3).unwrap());
        assert_ne!(sample(&s, 500, 3).unwrap(), sample(&s, 500, 4).unwrap());
    }

    #[test]
    fn sampling_never_hits_zero_probability_outcomes() {
        let r = Dy::FRAC_1_SQRT_2;
        let bell = StateVector::from_amplitudes(vec![Dy::ZERO, r, r, Dy::ZERO]).unwrap();
        let c = sample(&bell, 10_000, 11).unwrap();
        assert_eq!(c.count(0) + c.count(3), 0);
    }

    #[test]
    fn sweep_small_exact() {
        let cfg = SweepConfig::default();
        let report = sweep_all_f(1, Backend::Exact, &cfg).unwrap();
        assert_eq!(report.oracle_count, 4);
        assert_eq!(report.matched, 4);
        assert_eq!(report.max_pairwise_tv, 0.0);
        assert_eq!(report.distinct_distributions, 1);
        assert!(report.marginal_uniform);
        assert!(report.all_passed());
        assert_eq!(report.mode, SweepMode::Exhaustive);
        assert_eq!(report.seed, None);
    }

    #[test]
    fn sweep_caps() {
        let cfg = SweepConfig::default();
        assert!(matches!(
            sweep_all_f(5, Backend::Exact, &cfg),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            sweep_all_f(9, Backend::Float, &cfg),
            Err(Error::CapExceeded { .. })
        ));
        assert!(sweep_all_f(0, Backend::Float, &cfg).is_err());
        let lifted = SweepConfig {
            exact_max_n: 5,
            sampled_oracles: 3,
            ..cfg
        };
        let report = sweep_all_f(5, Backend::Exact, &lifted).unwrap();
        assert_eq!(report.mode, SweepMode::Sampled);
        assert!(report.all_passed());
    }

    #[test]
    fn sampled_sweep_records_seed() {
        let cfg = SweepConfig {
            sampled_oracles: 5,
            seed: 9,
            ..SweepConfig::default()
        };
        let report = sweep_all_f(5, Backend::Float, &cfg).unwrap();
        assert_eq!(report.mode, SweepMode::Sampled);
        assert_eq!(report.oracle_count, 5);
        assert_eq!(report.seed, Some(9));
        assert_eq!(report.rng, Some(RNG_ALGORITHM));
        assert!(report.all_passed());
    }

    #[test]
    fn grover_compare_small() {
        let c = compare_grover(2, &BitString::new(1, 2).unwrap(), 0, 0).unwrap();
        assert_eq!(c.devries_prob_exact, Dy::pow2_inv(2));
        assert!(c.devries_prob_is_uniform);
        assert_eq!(c.grover_iterations, 1);
        assert!((c.grover_prob - 1.0).abs() < 1e-12);
        assert!(c.empirical.is_none());
        assert!(compare_grover(1, &BitString::new(1, 1).unwrap(), 0, 0).is_err());
        assert!(compare_grover(3, &BitString::new(1, 2).unwrap(), 0, 0).is_err());
    }
}
