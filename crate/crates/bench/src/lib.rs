//! Shared fixtures for the benchmark suite: seeded generators so every run
//! measures the same workload.

use gacalc_core::{all_blades, Algebra, MetricTensor, Multivector};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random multivector with integer coefficients in `[-5, 5]`; about half
/// of all blades are populated.
pub fn random_int_mv(rng: &mut ChaCha8Rng, dim: usize) -> Multivector {
    let mut terms = Vec::new();
    for blade in all_blades(dim) {
        if rng.gen_bool(0.5) {
            terms.push((blade, rng.gen_range(-5..=5i32) as f64));
        }
    }
    if terms.is_empty() {
        terms.push((all_blades(dim)[0], 1.0));
    }
    Multivector::from_terms(dim, terms).unwrap()
}

/// A fixed non-diagonal metric: tridiagonal with integer entries, the same
/// shape at every dimension so results compare across sizes.
pub fn banded_metric(dim: usize) -> MetricTensor {
    let mut rows = vec![vec![0.0; dim]; dim];
    for i in 0..dim {
        rows[i][i] = if i % 2 == 0 { 2.0 } else { 3.0 };
        if i + 1 < dim {
            rows[i][i + 1] = 1.0;
            rows[i + 1][i] = 1.0;
        }
    }
    MetricTensor::new(rows).unwrap()
}

/// Deterministic workload: an algebra over the banded metric plus `count`
/// random operand pairs.
pub fn workload(dim: usize, count: usize) -> (Algebra, Vec<(Multivector, Multivector)>) {
    let algebra = Algebra::new(banded_metric(dim)).unwrap();
    let mut rng = seeded(0xbe9c * dim as u64);
    let pairs = (0..count)
        .map(|_| (random_int_mv(&mut rng, dim), random_int_mv(&mut rng, dim)))
        .collect();
    (algebra, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn workload_is_deterministic() {
        let (_, a) = workload(4, 3);
        let (_, b) = workload(4, 3);
        assert_eq!(a, b);
    }

    #[test]
    fn banded_metric_is_invertible_at_bench_sizes() {
        for dim in [2, 4, 6, 8] {
            assert!(Algebra::new(banded_metric(dim)).is_ok(), "dim {dim}");
        }
    }
}
