//! Shared generators for the integration suites: seeded RNG, random
//! integer-coefficient multivectors, and random well-conditioned metrics.
//!
//! Each integration target compiles its own copy, so helpers unused by a
//! particular target are expected.
#![allow(dead_code)]

use gacalc_core::{all_blades, Algebra, MetricTensor, Multivector};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random multivector with integer coefficients in `[-5, 5]`; roughly half
/// of all blades appear.
pub fn random_int_mv(rng: &mut ChaCha8Rng, dim: usize) -> Multivector {
    let mut out = Multivector::zero(dim).unwrap();
    let mut any = false;
    for blade in all_blades(dim) {
        if rng.gen_bool(0.5) {
            let c = rng.gen_range(-5..=5i32);
            if c != 0 {
                any = true;
            }
            out = out
                .add(
                    &Multivector::from_terms(dim, [(blade, c as f64)]).unwrap(),
                )
                .unwrap();
        }
    }
    if !any {
        // Keep the generators away from the trivial zero case most of the
        // time; identities hold there anyway.
        let blade = all_blades(dim)[rng.gen_range(0..1 << dim)];
        out = Multivector::from_terms(dim, [(blade, 1.0)]).unwrap();
    }
    out
}

/// Random homogeneous grade-`k` multivector with integer coefficients.
pub fn random_int_kvector(rng: &mut ChaCha8Rng, dim: usize, k: usize) -> Multivector {
    let mut out = Multivector::zero(dim).unwrap();
    for blade in all_blades(dim) {
        if blade.grade() == k && rng.gen_bool(0.7) {
            let c = rng.gen_range(-5..=5i32);
            out = out
                .add(
                    &Multivector::from_terms(dim, [(blade, c as f64)]).unwrap(),
                )
                .unwrap();
        }
    }
    out
}

/// Random vector with integer coordinates in `[-5, 5]`.
pub fn random_int_vector(rng: &mut ChaCha8Rng, dim: usize) -> Multivector {
    let coords: Vec<f64> = (0..dim).map(|_| rng.gen_range(-5..=5i32) as f64).collect();
    Multivector::from_vector(&coords).unwrap()
}

/// Crude infinity-norm condition estimate from the metric and its stored
/// inverse.
pub fn condition_estimate(algebra: &Algebra) -> f64 {
    let n = algebra.dim();
    let row_sum = |get: &dyn Fn(usize, usize) -> f64| -> f64 {
        (1..=n)
            .map(|i| (1..=n).map(|j| get(i, j).abs()).sum::<f64>())
            .fold(0.0, f64::max)
    };
    let direct = row_sum(&|i, j| algebra.metric().entry(i, j));
    let inverse = row_sum(&|i, j| algebra.inverse_entry(i, j));
    direct * inverse
}

/// Random symmetric integer metric with small entries, rejected until it
/// is non-degenerate with condition estimate below `cond_cap`.
pub fn random_int_metric(rng: &mut ChaCha8Rng, dim: usize, cond_cap: f64) -> MetricTensor {
    loop {
        let mut rows = vec![vec![0.0; dim]; dim];
        // Mirrored writes (`rows[i][j]` and `rows[j][i]`) rule out the
        // iterator form clippy would otherwise ask for.
        #[allow(clippy::needless_range_loop)]
        for i in 0..dim {
            for j in i..dim {
                let e = rng.gen_range(-3..=3i32) as f64;
                rows[i][j] = e;
                rows[j][i] = e;
            }
        }
        let metric = MetricTensor::new(rows).unwrap();
        if let Ok(algebra) = Algebra::new(metric.clone()) {
            if condition_estimate(&algebra) <= cond_cap {
                return metric;
            }
        }
    }
}

/// Random positive-definite integer metric (a Gram matrix `BᵀB` plus a
/// positive diagonal), condition-bounded like [`random_int_metric`].
pub fn random_pd_metric(rng: &mut ChaCha8Rng, dim: usize, cond_cap: f64) -> MetricTensor {
    loop {
        let b: Vec<Vec<i32>> = (0..dim)
            .map(|_| (0..dim).map(|_| rng.gen_range(-2..=2)).collect())
            .collect();
        let shift = rng.gen_range(1..=3i32) as f64;
        let mut rows = vec![vec![0.0; dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                let dot: i32 = (0..dim).map(|k| b[k][i] * b[k][j]).sum();
                rows[i][j] = dot as f64;
            }
            rows[i][i] += shift;
        }
        let metric = MetricTensor::new(rows).unwrap();
        if !metric.is_positive_definite() {
            continue;
        }
        if let Ok(algebra) = Algebra::new(metric.clone()) {
            if condition_estimate(&algebra) <= cond_cap {
                return metric;
            }
        }
    }
}

/// `|a − b|` measured against the larger magnitude (floored at 1).
pub fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / 1.0f64.max(a.abs()).max(b.abs())
}

/// Worst per-blade deviation measured against the larger coefficient
/// magnitude (floored at 1).
pub fn rel_mv_err(a: &Multivector, b: &Multivector) -> f64 {
    a.max_abs_diff(b) / 1.0f64.max(a.max_abs_coeff()).max(b.max_abs_coeff())
}
