//! End-to-end checks of the metric-operator machinery on randomly drawn
//! metrics: the defining property and its uniqueness, adjoint symmetry of
//! the operator and its outermorphism, both inverse routes, the exterior
//! power law, and equality of the deformed products with the direct ones.

mod common;

use common::{
    random_int_metric, random_int_mv, random_int_vector, random_pd_metric, rel_err, rel_mv_err,
    seeded,
};
use gacalc_core::{LinearMap, MetricOperator, MetricTensor, Multivector};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

const DEFINING_TOL: f64 = 1e-10;
const PATH_TOL: f64 = 1e-9;
const CONDITION_CAP: f64 = 1e3;

fn random_operator(rng: &mut ChaCha8Rng, dim: usize) -> MetricOperator {
    let euclidean = if rng.gen_bool(0.5) {
        MetricTensor::euclidean(dim).unwrap()
    } else {
        random_pd_metric(rng, dim, CONDITION_CAP)
    };
    let metric = random_int_metric(rng, dim, CONDITION_CAP);
    MetricOperator::new(euclidean, metric).unwrap()
}

#[test]
fn defining_property_holds_on_random_vectors() {
    let mut rng = seeded(0xdef0_0001);
    for dim in 2..=4usize {
        for _ in 0..30 {
            let op = random_operator(&mut rng, dim);
            for _ in 0..10 {
                let v = random_int_vector(&mut rng, dim);
                let w = random_int_vector(&mut rng, dim);
                let direct = op.metric().scalar_product(&v, &w).unwrap();
                let deformed = op
                    .euclidean()
                    .scalar_product(&op.map().apply_vector(&v).unwrap(), &w)
                    .unwrap();
                assert!(
                    rel_err(direct, deformed) <= DEFINING_TOL,
                    "dim {dim}: {direct} vs {deformed}"
                );
            }
        }
    }
}

#[test]
fn operator_is_unique_given_the_defining_property() {
    // Reconstruct the matrix column by column from scalar-product data
    // alone: g(e_j) is the euclidean-reciprocal expansion of the column
    // G(·, e_j).  Any operator satisfying the defining property must have
    // exactly this matrix.
    let mut rng = seeded(0xdef0_0002);
    for dim in 2..=4usize {
        for _ in 0..40 {
            let op = random_operator(&mut rng, dim);
            for j in 1..=dim {
                let mut column = Multivector::zero(dim).unwrap();
                for k in 1..=dim {
                    let weight = op.metric().metric().entry(j, k);
                    column = column
                        .add(&op.euclidean().reciprocal_vector(k).unwrap().scale(weight))
                        .unwrap();
                }
                let stored = op
                    .map()
                    .apply_vector(&Multivector::basis_vector(dim, j).unwrap())
                    .unwrap();
                assert!(
                    rel_mv_err(&stored, &column) <= DEFINING_TOL,
                    "dim {dim}, column {j}"
                );
            }
        }
    }
}

#[test]
fn operator_and_outermorphism_are_adjoint_symmetric() {
    let mut rng = seeded(0xdef0_0003);
    for dim in 2..=4usize {
        for _ in 0..30 {
            let op = random_operator(&mut rng, dim);
            for _ in 0..10 {
                let x = random_int_mv(&mut rng, dim);
                let y = random_int_mv(&mut rng, dim);
                let lhs = op
                    .euclidean()
                    .scalar_product(&op.apply(&x).unwrap(), &y)
                    .unwrap();
                let rhs = op
                    .euclidean()
                    .scalar_product(&x, &op.apply(&y).unwrap())
                    .unwrap();
                assert!(rel_err(lhs, rhs) <= PATH_TOL, "dim {dim}: {lhs} vs {rhs}");
            }
        }
    }
}

#[test]
fn both_inverse_routes_agree_and_compose_to_identity() {
    let mut rng = seeded(0xdef0_0004);
    for dim in 2..=4usize {
        for _ in 0..40 {
            let op = random_operator(&mut rng, dim);
            let inv = op.inverse().unwrap();
            let formula = op.inverse_formula().unwrap();
            for (a, b) in inv.entries().iter().zip(formula.entries()) {
                assert!((a - b).abs() <= PATH_TOL, "dim {dim}: {a} vs {b}");
            }
            let identity = LinearMap::identity(dim).unwrap();
            for round in [
                inv.compose(op.map()).unwrap(),
                op.map().compose(&inv).unwrap(),
            ] {
                for (a, b) in round.entries().iter().zip(identity.entries()) {
                    assert!((a - b).abs() <= DEFINING_TOL, "dim {dim}: {a} vs {b}");
                }
            }
        }
    }
}

#[test]
fn outermorphism_is_an_exterior_power() {
    let mut rng = seeded(0xdef0_0005);
    for dim in 2..=4usize {
        for _ in 0..30 {
            let op = random_operator(&mut rng, dim);
            // Factor law on simple k-vectors built from random vectors.
            for k in 1..=dim {
                let vectors: Vec<Multivector> =
                    (0..k).map(|_| random_int_vector(&mut rng, dim)).collect();
                let mut blade = Multivector::scalar(dim, 1.0).unwrap();
                let mut mapped = Multivector::scalar(dim, 1.0).unwrap();
                for v in &vectors {
                    blade = blade.wedge(v).unwrap();
                    mapped = mapped.wedge(&op.map().apply_vector(v).unwrap()).unwrap();
                }
                let through = op.apply(&blade).unwrap();
                assert!(
                    rel_mv_err(&through, &mapped) <= PATH_TOL,
                    "dim {dim}, k {k}"
                );
            }
            // Wedge multiplicativity on general multivectors.
            let x = random_int_mv(&mut rng, dim);
            let y = random_int_mv(&mut rng, dim);
            let lhs = op.apply(&x.wedge(&y).unwrap()).unwrap();
            let rhs = op.apply(&x).unwrap().wedge(&op.apply(&y).unwrap()).unwrap();
            assert!(rel_mv_err(&lhs, &rhs) <= PATH_TOL, "dim {dim}");
        }
    }
}

#[test]
fn deformed_scalar_product_equals_direct_per_grade_and_in_full() {
    let mut rng = seeded(0xdef0_0006);
    for dim in 2..=4usize {
        for _ in 0..30 {
            let op = random_operator(&mut rng, dim);
            for _ in 0..8 {
                let x = random_int_mv(&mut rng, dim);
                let y = random_int_mv(&mut rng, dim);
                for k in 0..=dim {
                    let xk = x.grade_part(k).unwrap();
                    let yk = y.grade_part(k).unwrap();
                    let direct = op.metric().scalar_product(&xk, &yk).unwrap();
                    let deformed = op.deformed_scalar_product(&xk, &yk).unwrap();
                    assert!(
                        rel_err(direct, deformed) <= PATH_TOL,
                        "dim {dim}, grade {k}: {direct} vs {deformed}"
                    );
                }
                let direct = op.metric().scalar_product(&x, &y).unwrap();
                let deformed = op.deformed_scalar_product(&x, &y).unwrap();
                assert!(
                    rel_err(direct, deformed) <= PATH_TOL,
                    "dim {dim}: {direct} vs {deformed}"
                );
            }
        }
    }
}

#[test]
fn deformed_contractions_equal_direct_contractions() {
    let mut rng = seeded(0xdef0_0007);
    for dim in 2..=4usize {
        for _ in 0..30 {
            let op = random_operator(&mut rng, dim);
            for _ in 0..8 {
                let x = random_int_mv(&mut rng, dim);
                let y = random_int_mv(&mut rng, dim);
                let (left, right) = op.deformed_contractions(&x, &y).unwrap();
                let direct_left = op.metric().left_contract(&x, &y).unwrap();
                let direct_right = op.metric().right_contract(&x, &y).unwrap();
                assert!(
                    rel_mv_err(&left, &direct_left) <= PATH_TOL,
                    "dim {dim} left:\n{left:?}\nvs\n{direct_left:?}"
                );
                assert!(
                    rel_mv_err(&right, &direct_right) <= PATH_TOL,
                    "dim {dim} right:\n{right:?}\nvs\n{direct_right:?}"
                );
            }
        }
    }
}

#[test]
fn frame_construction_is_frame_independent() {
    let mut rng = seeded(0xdef0_0008);
    for dim in 2..=4usize {
        for _ in 0..25 {
            let euclidean = if rng.gen_bool(0.5) {
                MetricTensor::euclidean(dim).unwrap()
            } else {
                random_pd_metric(&mut rng, dim, CONDITION_CAP)
            };
            let metric = random_int_metric(&mut rng, dim, CONDITION_CAP);
            let standard = MetricOperator::new(euclidean.clone(), metric.clone()).unwrap();
            let frame = random_unimodular_frame(&mut rng, dim);
            let reframed = MetricOperator::from_basis(euclidean, metric, &frame).unwrap();
            for (a, b) in reframed
                .map()
                .entries()
                .iter()
                .zip(standard.map().entries())
            {
                assert!((a - b).abs() <= PATH_TOL, "dim {dim}: {a} vs {b}");
            }
        }
    }
}

/// Unit-determinant integer frame: identity sheared by a few random
/// unit row operations, entries kept within ±2.
fn random_unimodular_frame(rng: &mut ChaCha8Rng, dim: usize) -> Vec<Vec<f64>> {
    let mut rows = vec![vec![0.0f64; dim]; dim];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    for _ in 0..2 * dim {
        let from = rng.gen_range(0..dim);
        let to = rng.gen_range(0..dim);
        if from == to {
            continue;
        }
        let factor = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let source = rows[from].clone();
        let target = &mut rows[to];
        let fits = target
            .iter()
            .zip(&source)
            .all(|(t, s)| (t + factor * s).abs() <= 2.0);
        if fits {
            for (t, s) in target.iter_mut().zip(&source) {
                *t += factor * s;
            }
        }
    }
    rows
}
