//! Deformation of metric products into euclidean ones.
//!
//! For any metric `G` and a fixed positive-definite "euclidean" metric
//! `G_E` on the same space there is a unique linear operator `g`,
//! self-adjoint with respect to `·_E`, such that `v ·_G w = g(v) ·_E w`
//! for all vectors.  Its outermorphism extension `ḡ` turns every
//! `G`-scalar-product and `G`-contraction into a euclidean one:
//!
//! * `X ·_G Y  = ḡ(X) ·_E Y`
//! * `X ⌟_G Y = ḡ(X) ⌟_E Y`
//! * `X ⌞_G Y = X ⌞_E ḡ(Y)`
//!
//! [`MetricOperator`] owns `g` together with both metric contexts and
//! exposes the deformed products; [`LinearMap`] is the plain linear-map
//! carrier with the outermorphism extension.

use crate::blade::BladeIndex;
use crate::error::Error;
use crate::linalg;
use crate::metric::{Algebra, MetricTensor};
use crate::multivector::Multivector;
use crate::{Result, MAX_DIM};

/// Residual allowed, relative to the largest metric entry, when verifying
/// that a constructed operator satisfies its defining property
/// `g(e_i) ·_E e_j = G(e_i, e_j)` and is self-adjoint under `·_E`.
pub const DEFORMATION_EPS: f64 = 1e-10;

/// A linear map on the underlying vector space, extendable to all
/// multivectors as an outermorphism (factorwise on wedge products,
/// fixing scalars).
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMap {
    dim: usize,
    matrix: Vec<f64>, // row-major dim x dim; column j holds the image of e_{j+1}
}

impl LinearMap {
    /// Wraps a square matrix given as rows; column `j` is read as the
    /// coordinate vector of the image of the `j`-th basis vector.
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        let dim = rows.len();
        if !(1..=MAX_DIM).contains(&dim) {
            return Err(Error::DimensionOutOfRange { dim, max: MAX_DIM });
        }
        let mut matrix = Vec::with_capacity(dim * dim);
        for row in &rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    left: row.len(),
                    right: dim,
                });
            }
            matrix.extend_from_slice(row);
        }
        Ok(LinearMap { dim, matrix })
    }

    /// The identity map.
    pub fn identity(dim: usize) -> Result<Self> {
        if !(1..=MAX_DIM).contains(&dim) {
            return Err(Error::DimensionOutOfRange { dim, max: MAX_DIM });
        }
        let mut matrix = vec![0.0; dim * dim];
        for i in 0..dim {
            matrix[i * dim + i] = 1.0;
        }
        Ok(LinearMap { dim, matrix })
    }

    pub(crate) fn from_flat(dim: usize, matrix: Vec<f64>) -> Self {
        debug_assert_eq!(matrix.len(), dim * dim);
        LinearMap { dim, matrix }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Matrix entry with 1-based indices (`entry(i, j)` is the `i`-th
    /// coordinate of the image of `e_j`).
    pub fn entry(&self, i: usize, j: usize) -> f64 {
        assert!(i >= 1 && i <= self.dim && j >= 1 && j <= self.dim);
        self.matrix[(i - 1) * self.dim + (j - 1)]
    }

    /// Row-major entry buffer.
    pub fn entries(&self) -> &[f64] {
        &self.matrix
    }

    /// Image of the `j`-th basis vector (1-based) as a multivector.
    pub fn basis_image(&self, j: usize) -> Result<Multivector> {
        if j < 1 || j > self.dim {
            return Err(Error::IndexOutOfRange {
                index: j,
                dim: self.dim,
            });
        }
        let coords: Vec<f64> = (0..self.dim)
            .map(|i| self.matrix[i * self.dim + (j - 1)])
            .collect();
        Multivector::from_vector(&coords)
    }

    /// Applies the map to a vector (grade-1 multivector); the zero
    /// multivector is accepted and maps to itself.
    pub fn apply_vector(&self, v: &Multivector) -> Result<Multivector> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: v.dim(),
                right: self.dim,
            });
        }
        if v.is_zero() {
            return Multivector::zero(self.dim);
        }
        if v.homogeneous_grade() != Some(1) {
            return Err(Error::MixedGrade { expected: 1 });
        }
        let coords: Vec<f64> = (1..=self.dim)
            .map(|i| v.coeff(BladeIndex::from_indices(&[i]).expect("valid index")))
            .collect();
        Multivector::from_vector(&linalg::mat_vec(self.dim, &self.matrix, &coords))
    }

    /// Outermorphism extension: scalars are fixed, each blade maps to the
    /// wedge of the images of its vector factors, extended linearly.
    pub fn outermorphism(&self, x: &Multivector) -> Result<Multivector> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: x.dim(),
                right: self.dim,
            });
        }
        let images: Vec<Multivector> = (1..=self.dim)
            .map(|j| self.basis_image(j))
            .collect::<Result<_>>()?;
        let mut out = Multivector::zero(self.dim)?;
        for (blade, coeff) in x.terms() {
            let mut factor = Multivector::scalar(self.dim, coeff)?;
            for i in blade.indices() {
                factor = factor.wedge(&images[i - 1])?;
            }
            out = out.add(&factor)?;
        }
        Ok(out)
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(LinearMap::from_flat(
            self.dim,
            linalg::mat_mul(self.dim, &self.matrix, &other.matrix),
        ))
    }

    /// Matrix inverse, or `None` when singular.
    pub fn inverse(&self) -> Option<LinearMap> {
        linalg::invert(self.dim, &self.matrix).map(|m| LinearMap::from_flat(self.dim, m))
    }
}

/// The metric operator `g` tying a metric context to a fixed euclidean
/// one, with its outermorphism and the deformed products.
#[derive(Clone, Debug)]
pub struct MetricOperator {
    map: LinearMap,
    euclidean: Algebra,
    metric: Algebra,
}

impl MetricOperator {
    /// Builds `g` from the euclidean metric (must be positive definite)
    /// and the target metric, using the standard basis:
    /// `g(e_j) = Σ_k G(e_j, e_k) e^k_E` with `e^k_E` the euclidean
    /// reciprocal vectors.
    pub fn new(euclidean_metric: MetricTensor, metric: MetricTensor) -> Result<Self> {
        let dim = euclidean_metric.dim();
        if metric.dim() != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: metric.dim(),
            });
        }
        if !euclidean_metric.is_positive_definite() {
            return Err(Error::NotPositiveDefinite);
        }
        let euclidean = Algebra::new(euclidean_metric)?;
        let metric = Algebra::new(metric)?;
        let mut matrix = vec![0.0; dim * dim];
        for j in 1..=dim {
            let mut image = Multivector::zero(dim)?;
            for k in 1..=dim {
                let weight = metric.metric().entry(j, k);
                image = image.add(&euclidean.reciprocal_vector(k)?.scale(weight))?;
            }
            for i in 1..=dim {
                matrix[(i - 1) * dim + (j - 1)] =
                    image.coeff(BladeIndex::from_indices(&[i]).expect("valid index"));
            }
        }
        Self::verified(LinearMap::from_flat(dim, matrix), euclidean, metric)
    }

    /// Builds `g` from an arbitrary frame `{b_j}` (coordinate vectors in
    /// the standard basis) via `g(b_j) = Σ_k (b_j ·_G b_k) b^k_E`, where
    /// `b^k_E` is the euclidean reciprocal frame of `{b_j}`.  The result
    /// does not depend on the frame; this entry point exists to exercise
    /// that independence.
    pub fn from_basis(
        euclidean_metric: MetricTensor,
        metric: MetricTensor,
        basis: &[Vec<f64>],
    ) -> Result<Self> {
        let dim = euclidean_metric.dim();
        if metric.dim() != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: metric.dim(),
            });
        }
        if !euclidean_metric.is_positive_definite() {
            return Err(Error::NotPositiveDefinite);
        }
        if basis.len() != dim {
            return Err(Error::LengthMismatch {
                left: basis.len(),
                right: dim,
            });
        }
        let euclidean = Algebra::new(euclidean_metric)?;
        let metric = Algebra::new(metric)?;
        let vectors: Vec<Multivector> = basis
            .iter()
            .map(|coords| {
                if coords.len() != dim {
                    return Err(Error::LengthMismatch {
                        left: coords.len(),
                        right: dim,
                    });
                }
                Multivector::from_vector(coords)
            })
            .collect::<Result<_>>()?;
        // Change-of-basis matrix with the frame vectors as columns.
        let mut change = vec![0.0; dim * dim];
        for (j, coords) in basis.iter().enumerate() {
            for i in 0..dim {
                change[i * dim + j] = coords[i];
            }
        }
        let change_inv = linalg::invert(dim, &change).ok_or(Error::SingularBasis)?;
        // Euclidean Gram matrix of the frame and its inverse give the
        // reciprocal frame b^k = Σ_m R_{km} b_m.
        let mut gram = vec![0.0; dim * dim];
        for j in 0..dim {
            for k in 0..dim {
                gram[j * dim + k] = euclidean.scalar_product(&vectors[j], &vectors[k])?;
            }
        }
        let gram_inv = linalg::invert(dim, &gram).ok_or(Error::SingularBasis)?;
        let reciprocal: Vec<Multivector> = (0..dim)
            .map(|k| {
                let mut out = Multivector::zero(dim)?;
                for m in 0..dim {
                    out = out.add(&vectors[m].scale(gram_inv[k * dim + m]))?;
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;
        // Images of the frame vectors, as columns of a matrix in the
        // standard basis.
        let mut images = vec![0.0; dim * dim];
        for j in 0..dim {
            let mut image = Multivector::zero(dim)?;
            for k in 0..dim {
                let weight = metric.scalar_product(&vectors[j], &vectors[k])?;
                image = image.add(&reciprocal[k].scale(weight))?;
            }
            for i in 1..=dim {
                images[(i - 1) * dim + j] =
                    image.coeff(BladeIndex::from_indices(&[i]).expect("valid index"));
            }
        }
        // g(change · e_j) = images · e_j, so g = images · change⁻¹.
        let matrix = linalg::mat_mul(dim, &images, &change_inv);
        Self::verified(LinearMap::from_flat(dim, matrix), euclidean, metric)
    }

    /// Checks the defining property `g(e_i) ·_E e_j = G(e_i, e_j)` and
    /// euclidean self-adjointness on all basis pairs before accepting the
    /// operator.
    fn verified(map: LinearMap, euclidean: Algebra, metric: Algebra) -> Result<Self> {
        let dim = map.dim();
        let scale = metric
            .metric()
            .entries()
            .iter()
            .fold(1.0f64, |m, e| m.max(e.abs()));
        let op = MetricOperator {
            map,
            euclidean,
            metric,
        };
        for i in 1..=dim {
            let ei = Multivector::basis_vector(dim, i)?;
            let gi = op.map.apply_vector(&ei)?;
            for j in 1..=dim {
                let ej = Multivector::basis_vector(dim, j)?;
                let gj = op.map.apply_vector(&ej)?;
                let defining =
                    op.euclidean.scalar_product(&gi, &ej)? - op.metric.metric().entry(i, j);
                if defining.abs() > DEFORMATION_EPS * scale {
                    return Err(Error::Internal(format!(
                        "metric operator residual {:e} exceeds {DEFORMATION_EPS:e}",
                        defining.abs()
                    )));
                }
                let adjoint = op.euclidean.scalar_product(&gi, &ej)?
                    - op.euclidean.scalar_product(&ei, &gj)?;
                if adjoint.abs() > DEFORMATION_EPS * scale {
                    return Err(Error::Internal(format!(
                        "metric operator asymmetry {:e} exceeds {DEFORMATION_EPS:e}",
                        adjoint.abs()
                    )));
                }
            }
        }
        Ok(op)
    }

    pub fn dim(&self) -> usize {
        self.map.dim()
    }

    /// The operator `g` as a plain linear map.
    pub fn map(&self) -> &LinearMap {
        &self.map
    }

    /// The euclidean context `G_E`.
    pub fn euclidean(&self) -> &Algebra {
        &self.euclidean
    }

    /// The deformed context `G`.
    pub fn metric(&self) -> &Algebra {
        &self.metric
    }

    /// The outermorphism `ḡ` applied to a multivector.
    pub fn apply(&self, x: &Multivector) -> Result<Multivector> {
        self.map.outermorphism(x)
    }

    /// `g⁻¹` by matrix inversion.
    pub fn inverse(&self) -> Result<LinearMap> {
        self.map
            .inverse()
            .ok_or_else(|| Error::Internal("metric operator is singular".into()))
    }

    /// `g⁻¹` by the closed formula `g⁻¹(v) = Σ_{jk} G^{jk} (v ·_E e_j) e_k`,
    /// assembled column by column; agrees with [`MetricOperator::inverse`].
    pub fn inverse_formula(&self) -> Result<LinearMap> {
        let dim = self.dim();
        let mut matrix = vec![0.0; dim * dim];
        for i in 1..=dim {
            let v = Multivector::basis_vector(dim, i)?;
            let mut image = Multivector::zero(dim)?;
            for j in 1..=dim {
                let ej = Multivector::basis_vector(dim, j)?;
                let weight = self.euclidean.scalar_product(&v, &ej)?;
                for k in 1..=dim {
                    let ek = Multivector::basis_vector(dim, k)?;
                    image = image.add(&ek.scale(self.metric.inverse_entry(j, k) * weight))?;
                }
            }
            for r in 1..=dim {
                matrix[(r - 1) * dim + (i - 1)] =
                    image.coeff(BladeIndex::from_indices(&[r]).expect("valid index"));
            }
        }
        Ok(LinearMap::from_flat(dim, matrix))
    }

    /// `X ·_G Y` computed as `ḡ(X) ·_E Y`.
    pub fn deformed_scalar_product(&self, x: &Multivector, y: &Multivector) -> Result<f64> {
        self.euclidean.scalar_product(&self.apply(x)?, y)
    }

    /// `X ⌟_G Y` computed as `ḡ(X) ⌟_E Y`.
    pub fn deformed_left_contract(&self, x: &Multivector, y: &Multivector) -> Result<Multivector> {
        self.euclidean.left_contract(&self.apply(x)?, y)
    }

    /// `X ⌞_G Y` computed as `X ⌞_E ḡ(Y)`.
    pub fn deformed_right_contract(&self, x: &Multivector, y: &Multivector) -> Result<Multivector> {
        self.euclidean.right_contract(x, &self.apply(y)?)
    }

    /// Both deformed contractions, left then right.
    pub fn deformed_contractions(
        &self,
        x: &Multivector,
        y: &Multivector,
    ) -> Result<(Multivector, Multivector)> {
        Ok((
            self.deformed_left_contract(x, y)?,
            self.deformed_right_contract(x, y)?,
        ))
    }
}
