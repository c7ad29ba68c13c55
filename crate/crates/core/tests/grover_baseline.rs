//! Grover baseline checked against an independent dense-matrix simulation.

use compsearch::refutation::distribution;
use compsearch::{
    build_grover, grover_optimal_iterations, BooleanOracle, DyadicReal, FloatComplex, StateVector,
};

/// Plain `Vec<f64>` simulation: uniform start, then `iterations` rounds of
/// `D·O` with `O = diag((-1)^{f(x)})` and `D = 2|s⟩⟨s| − I` as explicit
/// matrices.
fn dense_success_probability(n: usize, marked: usize, iterations: usize) -> f64 {
    let size = 1usize << n;
    let inv = 1.0 / size as f64;
    let diffusion: Vec<Vec<f64>> = (0..size)
        .map(|r| {
            (0..size)
                .map(|c| 2.0 * inv - if r == c { 1.0 } else { 0.0 })
                .collect()
        })
        .collect();
    let mut v = vec![(inv).sqrt(); size];
    for _ in 0..iterations {
        v[marked] = -v[marked];
        v = diffusion
            .iter()
            .map(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum())
            .collect();
    }
    v[marked] * v[marked]
}

fn simulated(n: usize, marked: usize, iterations: usize) -> f64 {
    let f = BooleanOracle::from_marked(n, &[marked]).unwrap();
    let out = build_grover(n, &f, iterations)
        .unwrap()
        .run(StateVector::<FloatComplex>::zero_state(n).unwrap())
        .unwrap();
    *distribution(&out).unwrap().probability(marked)
}

#[test]
fn dense_oracle_reference_values() {
    let theta = (1.0f64 / 8.0f64.sqrt()).asin();
    let closed = (5.0 * theta).sin().powi(2);
    assert!((dense_success_probability(3, 5, 2) - closed).abs() < 1e-12);
    assert!((closed - 0.9453).abs() < 5e-5);
    assert!((dense_success_probability(2, 1, 1) - 1.0).abs() < 1e-12);
}

#[test]
fn simulator_matches_dense_oracle() {
    for n in 2..=6 {
        for iterations in 0..=grover_optimal_iterations(n, 1).unwrap() + 1 {
            let marked = (5 * n + 1) % (1 << n);
            let expected = dense_success_probability(n, marked, iterations);
            let got = simulated(n, marked, iterations);
            assert!(
                (got - expected).abs() < 1e-12,
                "n={n} t={iterations}: {got} vs {expected}"
            );
        }
    }
}

#[test]
fn zero_iterations_leave_uniform_state() {
    for n in 1..=5 {
        assert!((simulated(n, 0, 0) - 1.0 / (1 << n) as f64).abs() < 1e-15);
    }
}

#[test]
fn n2_single_iteration_is_exact_in_dyadic_backend() {
    for marked in 0..4 {
        let f = BooleanOracle::from_marked(2, &[marked]).unwrap();
        let out = build_grover(2, &f, 1)
            .unwrap()
            .run(StateVector::<DyadicReal>::zero_state(2).unwrap())
            .unwrap();
        assert_eq!(
            *distribution(&out).unwrap().probability(marked),
            DyadicReal::ONE
        );
    }
}
