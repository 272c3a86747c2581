//! Reversion and the left/right contracted products.
//!
//! Contractions are computed through their adjoint characterisation: the
//! coefficient of canonical blade `e_K` in `x ⌟ y` is the scalar product
//! of `y` with `x̃ ∧ e^K`, where `e^K` is the reciprocal blade of `e_K`.
//! That needs one Gram-product per result blade instead of the
//! `(q-p)!`-fold redundant tuple sum of the textbook definition; the
//! tuple-sum forms are kept as [`Algebra::left_contract_summed`] and
//! [`Algebra::right_contract_summed`] so tests can cross-check the two
//! routes (and do so in arbitrary bases).

use crate::blade::blades_unsorted;
use crate::linalg;
use crate::metric::Algebra;
use crate::{Error, Multivector, Result};

fn reversion_sign(k: usize) -> f64 {
    // (-1)^{k(k-1)/2} cycles every four grades: +, +, -, -.
    if k % 4 < 2 {
        1.0
    } else {
        -1.0
    }
}

impl Multivector {
    /// Reversion: the grade-`k` part changes sign by `(-1)^{k(k-1)/2}`,
    /// i.e. blades reverse the order of their vector factors.
    pub fn reversion(&self) -> Multivector {
        let mut out = Multivector::zero(self.dim()).expect("dimension already validated");
        for (blade, c) in self.terms() {
            out.insert_term(blade, reversion_sign(blade.grade()) * c);
        }
        out
    }
}

impl Algebra {
    /// The left contracted product `x ⌟ y`.
    ///
    /// Grade parts pair as `⟨x⟩_p ⌟ ⟨y⟩_{p+k}` into grade `k`; parts of
    /// `x` exceeding the grade of `y` contribute nothing.
    pub fn left_contract(&self, x: &Multivector, y: &Multivector) -> Result<Multivector> {
        self.check_pair(x, y)?;
        let xr = x.reversion();
        let mut out = Multivector::zero(self.dim())?;
        for blade in blades_unsorted(self.dim()) {
            if !self.result_grade_possible(x, y, blade.grade(), true) {
                continue;
            }
            let probe = xr.wedge(&self.reciprocal_blade(blade)?)?;
            out.add_term(blade, self.scalar_product(y, &probe)?);
        }
        Ok(out)
    }

    /// The right contracted product `x ⌞ y`.
    ///
    /// Mirror of [`left_contract`](Self::left_contract): grade parts pair
    /// as `⟨x⟩_{q+k} ⌞ ⟨y⟩_q` into grade `k`.
    pub fn right_contract(&self, x: &Multivector, y: &Multivector) -> Result<Multivector> {
        self.check_pair(x, y)?;
        let yr = y.reversion();
        let mut out = Multivector::zero(self.dim())?;
        for blade in blades_unsorted(self.dim()) {
            if !self.result_grade_possible(x, y, blade.grade(), false) {
                continue;
            }
            let probe = self.reciprocal_blade(blade)?.wedge(&yr)?;
            out.add_term(blade, self.scalar_product(x, &probe)?);
        }
        Ok(out)
    }

    /// Left contraction evaluated as the literal tuple sum
    /// `(1/k!) Σ [(x̃_p ∧ f^{i_1} ∧ … ∧ f^{i_k}) · y_q] f_{i_1} ∧ … ∧ f_{i_k}`
    /// over all `k = q - p` index tuples of an explicit basis `{f_i}`
    /// (given as coordinate rows) and its reciprocal under this metric.
    ///
    /// The result does not depend on the basis; this is the reference
    /// path used to cross-check [`left_contract`](Self::left_contract).
    pub fn left_contract_summed(
        &self,
        x: &Multivector,
        y: &Multivector,
        basis: &[Vec<f64>],
    ) -> Result<Multivector> {
        self.check_pair(x, y)?;
        let frame = self.frame(basis)?;
        let mut out = Multivector::zero(self.dim())?;
        for p in x.grades().iter() {
            let xp = x.grade_part(p)?.reversion();
            for q in y.grades().iter() {
                if p > q {
                    continue;
                }
                let yq = y.grade_part(q)?;
                out = out.add(&self.tuple_sum(q - p, &frame, |recip_chain, direct_chain| {
                    let probe = xp.wedge(recip_chain)?;
                    Ok((self.scalar_product(&probe, &yq)?, direct_chain.clone()))
                })?)?;
            }
        }
        Ok(out)
    }

    /// Right contraction evaluated as the literal tuple sum
    /// `(1/k!) Σ [x_p · (f^{i_1} ∧ … ∧ f^{i_k} ∧ ỹ_q)] f_{i_1} ∧ … ∧ f_{i_k}`
    /// with `k = p - q`; see [`left_contract_summed`](Self::left_contract_summed).
    pub fn right_contract_summed(
        &self,
        x: &Multivector,
        y: &Multivector,
        basis: &[Vec<f64>],
    ) -> Result<Multivector> {
        self.check_pair(x, y)?;
        let frame = self.frame(basis)?;
        let mut out = Multivector::zero(self.dim())?;
        for q in y.grades().iter() {
            let yq = y.grade_part(q)?.reversion();
            for p in x.grades().iter() {
                if p < q {
                    continue;
                }
                let xp = x.grade_part(p)?;
                out = out.add(&self.tuple_sum(p - q, &frame, |recip_chain, direct_chain| {
                    let probe = recip_chain.wedge(&yq)?;
                    Ok((self.scalar_product(&xp, &probe)?, direct_chain.clone()))
                })?)?;
            }
        }
        Ok(out)
    }

    pub(crate) fn check_pair(&self, x: &Multivector, y: &Multivector) -> Result<()> {
        for operand in [x, y] {
            if operand.dim() != self.dim() {
                return Err(Error::DimensionMismatch {
                    left: operand.dim(),
                    right: self.dim(),
                });
            }
        }
        Ok(())
    }

    /// True if grade `k` can occur in a contraction of `x` with `y`
    /// (`left`: `q - p = k`; otherwise `p - q = k`).
    fn result_grade_possible(&self, x: &Multivector, y: &Multivector, k: usize, left: bool) -> bool {
        x.grades().iter().any(|p| {
            y.grades().iter().any(|q| {
                if left {
                    q >= p && q - p == k
                } else {
                    p >= q && p - q == k
                }
            })
        })
    }

    /// Basis vectors and their metric reciprocals as grade-1 multivectors.
    fn frame(&self, basis: &[Vec<f64>]) -> Result<(Vec<Multivector>, Vec<Multivector>)> {
        let n = self.dim();
        if basis.len() != n {
            return Err(Error::DimensionMismatch {
                left: basis.len(),
                right: n,
            });
        }
        for v in basis {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    left: v.len(),
                    right: n,
                });
            }
        }
        let vectors = basis
            .iter()
            .map(|v| Multivector::from_vector(v))
            .collect::<Result<Vec<_>>>()?;
        let mut gram = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                gram[i * n + j] = self.scalar_product(&vectors[i], &vectors[j])?;
            }
        }
        let inv = linalg::invert(n, &gram).ok_or(Error::DegenerateMetric)?;
        let reciprocals = (0..n)
            .map(|i| {
                let mut v = Multivector::zero(n)?;
                for (j, vec) in vectors.iter().enumerate() {
                    v = v.add(&vec.scale(inv[i * n + j]))?;
                }
                Ok(v)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((vectors, reciprocals))
    }

    /// Accumulates `(1/k!) Σ_tuples coeff(tuple) · f_{i_1} ∧ … ∧ f_{i_k}`
    /// where `coeff` sees the reciprocal chain `f^{i_1} ∧ … ∧ f^{i_k}`
    /// and the direct chain for the current tuple.
    fn tuple_sum(
        &self,
        k: usize,
        (vectors, reciprocals): &(Vec<Multivector>, Vec<Multivector>),
        mut coeff: impl FnMut(&Multivector, &Multivector) -> Result<(f64, Multivector)>,
    ) -> Result<Multivector> {
        let n = self.dim();
        let mut out = Multivector::zero(n)?;
        let mut tuple = vec![0usize; k]; // 0-based indices into the frame
        loop {
            let mut recip_chain = Multivector::scalar(n, 1.0)?;
            let mut direct_chain = Multivector::scalar(n, 1.0)?;
            for &i in &tuple {
                recip_chain = recip_chain.wedge(&reciprocals[i])?;
                direct_chain = direct_chain.wedge(&vectors[i])?;
            }
            let (c, blade_product) = coeff(&recip_chain, &direct_chain)?;
            out = out.add(&blade_product.scale(c))?;
            // Odometer over all n^k tuples.
            let mut pos = k;
            loop {
                if pos == 0 {
                    break;
                }
                tuple[pos - 1] += 1;
                if tuple[pos - 1] < n {
                    break;
                }
                tuple[pos - 1] = 0;
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
        }
        let kfact: f64 = (1..=k).product::<usize>() as f64;
        Ok(out.scale(1.0 / kfact))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::MetricTensor;

    fn euclid(dim: usize) -> Algebra {
        Algebra::euclidean(dim).unwrap()
    }

    fn standard_basis(dim: usize) -> Vec<Vec<f64>> {
        (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
            .collect()
    }

    fn mv(dim: usize, indices: &[usize]) -> Multivector {
        Multivector::basis_blade(dim, indices).unwrap()
    }

    #[test]
    fn reversion_signs_by_grade() {
        let x = Multivector::scalar(4, 1.0).unwrap();
        assert_eq!(x.reversion(), x);
        let v = mv(4, &[2]);
        assert_eq!(v.reversion(), v);
        assert_eq!(mv(4, &[1, 2]).reversion(), mv(4, &[1, 2]).neg());
        assert_eq!(mv(4, &[1, 2, 3]).reversion(), mv(4, &[1, 2, 3]).neg());
        assert_eq!(mv(4, &[1, 2, 3, 4]).reversion(), mv(4, &[1, 2, 3, 4]));
    }

    #[test]
    fn reversion_is_an_involution() {
        let x = mv(3, &[1, 2])
            .scale(2.0)
            .add(&mv(3, &[3]).scale(-5.0))
            .unwrap()
            .add(&Multivector::scalar(3, 7.0).unwrap())
            .unwrap();
        assert_eq!(x.reversion().reversion(), x);
    }

    #[test]
    fn vector_contracts_bivector() {
        let a = euclid(3);
        let got = a.left_contract(&mv(3, &[1]), &mv(3, &[1, 2])).unwrap();
        assert_eq!(got, mv(3, &[2]));
    }

    #[test]
    fn bivector_contracts_trivector() {
        let a = euclid(3);
        let got = a.left_contract(&mv(3, &[1, 2]), &mv(3, &[1, 2, 3])).unwrap();
        assert_eq!(got, mv(3, &[3]).neg());
    }

    #[test]
    fn right_contraction_mirrors_left() {
        let a = euclid(3);
        let got = a.right_contract(&mv(3, &[1, 2, 3]), &mv(3, &[1, 2])).unwrap();
        assert_eq!(got, mv(3, &[3]).neg());
        let got = a.right_contract(&mv(3, &[1, 2]), &mv(3, &[2])).unwrap();
        assert_eq!(got, mv(3, &[1]));
    }

    #[test]
    fn scalars_contract_as_scale_factors() {
        let a = euclid(2);
        let two = Multivector::scalar(2, 2.0).unwrap();
        let y = mv(2, &[1, 2]);
        assert_eq!(a.left_contract(&two, &y).unwrap(), y.scale(2.0));
        // A higher grade contracted into a lower one vanishes.
        assert!(a.left_contract(&y, &two).unwrap().is_zero());
        assert!(a.right_contract(&two, &y).unwrap().is_zero());
    }

    #[test]
    fn equal_grades_contract_to_reverted_scalar_product() {
        let a = euclid(2);
        let e12 = mv(2, &[1, 2]);
        let got = a.left_contract(&e12, &e12).unwrap();
        assert_eq!(got, Multivector::scalar(2, -1.0).unwrap());
    }

    #[test]
    fn diagonal_metric_weights_the_contraction() {
        let a = Algebra::new(MetricTensor::diagonal(&[2.0, 3.0]).unwrap()).unwrap();
        let got = a.left_contract(&mv(2, &[1]), &mv(2, &[1, 2])).unwrap();
        assert_eq!(got, mv(2, &[2]).scale(2.0));
    }

    #[test]
    fn swap_law_between_contractions() {
        // x_p ⌟ y_q = (-1)^{p(q-p)} y_q ⌞ x_p for p <= q.
        let a = euclid(4);
        // p = 1, q = 2: p(q-p) = 1, sign flips.
        let x = mv(4, &[1]);
        let y = mv(4, &[1, 2]);
        let left = a.left_contract(&x, &y).unwrap();
        let right = a.right_contract(&y, &x).unwrap();
        assert_eq!(left, mv(4, &[2]));
        assert_eq!(left, right.neg());
        // p = 1, q = 3: p(q-p) = 2, sign is even.
        let x = mv(4, &[2]);
        let y = mv(4, &[1, 2, 3]);
        let left = a.left_contract(&x, &y).unwrap();
        let right = a.right_contract(&y, &x).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn contraction_is_not_associative() {
        let a = euclid(3);
        let e1 = mv(3, &[1]);
        let e12 = mv(3, &[1, 2]);
        let nested_left = a
            .left_contract(&a.left_contract(&e1, &e1).unwrap(), &e12)
            .unwrap();
        let nested_right = a
            .left_contract(&e1, &a.left_contract(&e1, &e12).unwrap())
            .unwrap();
        assert_eq!(nested_left, e12);
        assert!(nested_right.is_zero());
    }

    #[test]
    fn summed_form_agrees_with_adjoint_form() {
        let g = MetricTensor::new(vec![
            vec![2.0, 1.0, 0.0],
            vec![1.0, 3.0, -1.0],
            vec![0.0, -1.0, 1.0],
        ])
        .unwrap();
        let a = Algebra::new(g).unwrap();
        let x = mv(3, &[1]).add(&mv(3, &[2, 3]).scale(2.0)).unwrap();
        let y = mv(3, &[1, 2])
            .scale(-3.0)
            .add(&mv(3, &[1, 2, 3]))
            .unwrap()
            .add(&mv(3, &[3]).scale(4.0))
            .unwrap();
        let basis = standard_basis(3);
        let fast = a.left_contract(&x, &y).unwrap();
        let summed = a.left_contract_summed(&x, &y, &basis).unwrap();
        assert!(fast.approx_eq(&summed, 1e-10), "{fast:?} vs {summed:?}");
        let fast = a.right_contract(&y, &x).unwrap();
        let summed = a.right_contract_summed(&y, &x, &basis).unwrap();
        assert!(fast.approx_eq(&summed, 1e-10), "{fast:?} vs {summed:?}");
    }

    #[test]
    fn summed_form_is_basis_independent() {
        let a = euclid(3);
        let x = mv(3, &[2]);
        let y = mv(3, &[1, 2, 3]).scale(2.0).add(&mv(3, &[1, 2])).unwrap();
        // A sheared (unimodular) basis.
        let basis = vec![
            vec![1.0, 1.0, 0.0],
            vec![0.0, 1.0, 2.0],
            vec![0.0, 0.0, 1.0],
        ];
        let standard = a.left_contract_summed(&x, &y, &standard_basis(3)).unwrap();
        let sheared = a.left_contract_summed(&x, &y, &basis).unwrap();
        assert!(standard.approx_eq(&sheared, 1e-10));
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let a = euclid(2);
        let x = mv(3, &[1]);
        assert!(matches!(
            a.left_contract(&x, &x),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
