//! Metric structure: symmetric non-degenerate metric tensors, the
//! [`Algebra`] context that carries the inverse metric and reciprocal
//! basis, scalar products of multivectors via Gram determinants, and
//! covariant/contravariant component extraction.

use std::collections::BTreeMap;

use crate::blade::{all_blades, BladeIndex};
use crate::linalg;
use crate::{Error, Multivector, Result, MAX_DIM};

/// Metric matrices may deviate from exact symmetry by this much, relative
/// to the largest entry, before being rejected.
pub const SYMMETRY_EPS: f64 = 1e-12;

/// A metric is rejected as degenerate when `|det|` falls at or below this
/// fraction of the product of row maxima (a Hadamard-style scale).
pub const DEGENERACY_EPS: f64 = 1e-10;

/// Residual allowed in the duality relation `e^k · e_j = δ^k_j` after
/// inverting the metric.
pub const DUALITY_EPS: f64 = 1e-10;

/// A symmetric metric matrix on a space of dimension `1..=MAX_DIM`.
///
/// Symmetry is validated at construction; non-degeneracy is checked when
/// an [`Algebra`] is built, because only then is the inverse needed.
#[derive(Clone, Debug, PartialEq)]
pub struct MetricTensor {
    dim: usize,
    entries: Vec<f64>, // row-major dim x dim
}

impl MetricTensor {
    /// Wraps a square symmetric matrix given as rows.
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        let dim = rows.len();
        if !(1..=MAX_DIM).contains(&dim) {
            return Err(Error::DimensionOutOfRange { dim, max: MAX_DIM });
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for row in &rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    left: row.len(),
                    right: dim,
                });
            }
            entries.extend_from_slice(row);
        }
        let scale = entries.iter().fold(0.0f64, |m, e| m.max(e.abs())).max(1.0);
        for r in 0..dim {
            for c in r + 1..dim {
                if (entries[r * dim + c] - entries[c * dim + r]).abs() > SYMMETRY_EPS * scale {
                    return Err(Error::AsymmetricMetric);
                }
            }
        }
        // Store the exactly symmetric average; a no-op for symmetric input.
        for r in 0..dim {
            for c in r + 1..dim {
                let avg = 0.5 * (entries[r * dim + c] + entries[c * dim + r]);
                entries[r * dim + c] = avg;
                entries[c * dim + r] = avg;
            }
        }
        Ok(MetricTensor { dim, entries })
    }

    /// The identity metric.
    pub fn euclidean(dim: usize) -> Result<Self> {
        if !(1..=MAX_DIM).contains(&dim) {
            return Err(Error::DimensionOutOfRange { dim, max: MAX_DIM });
        }
        MetricTensor::diagonal(&vec![1.0; dim])
    }

    /// A diagonal metric with the given entries.
    pub fn diagonal(diag: &[f64]) -> Result<Self> {
        let dim = diag.len();
        if !(1..=MAX_DIM).contains(&dim) {
            return Err(Error::DimensionOutOfRange { dim, max: MAX_DIM });
        }
        let mut entries = vec![0.0; dim * dim];
        for (i, &d) in diag.iter().enumerate() {
            entries[i * dim + i] = d;
        }
        Ok(MetricTensor { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry `G(e_i, e_j)` with 1-based indices.
    pub fn entry(&self, i: usize, j: usize) -> f64 {
        assert!(i >= 1 && i <= self.dim && j >= 1 && j <= self.dim);
        self.entries[(i - 1) * self.dim + (j - 1)]
    }

    /// Row-major entry buffer.
    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    /// True if the matrix is positive definite (Cholesky succeeds).
    pub fn is_positive_definite(&self) -> bool {
        linalg::is_positive_definite(self.dim, &self.entries)
    }
}

/// Sparse table of per-blade components, keyed by canonical blade.
pub type ComponentTable = BTreeMap<BladeIndex, f64>;

/// A metric context: the metric, its inverse, and the reciprocal basis
/// vectors `e^k` satisfying `e^k · e_j = δ^k_j`.
#[derive(Clone, Debug)]
pub struct Algebra {
    metric: MetricTensor,
    inverse: Vec<f64>, // row-major dim x dim
    reciprocal: Vec<Multivector>,
}

impl Algebra {
    /// Builds the context for a metric, rejecting numerically singular
    /// matrices (`|det|` at or below [`DEGENERACY_EPS`] times the product
    /// of row maxima).
    pub fn new(metric: MetricTensor) -> Result<Self> {
        let n = metric.dim;
        let det = linalg::determinant(n, &metric.entries);
        let scale = linalg::hadamard_scale(n, &metric.entries);
        if det.abs() <= DEGENERACY_EPS * scale {
            return Err(Error::DegenerateMetric);
        }
        let inverse = linalg::invert(n, &metric.entries).ok_or(Error::DegenerateMetric)?;
        // Duality residual: G^{-1} G must be the identity to DUALITY_EPS.
        let product = linalg::mat_mul(n, &inverse, &metric.entries);
        for r in 0..n {
            for c in 0..n {
                let expect = if r == c { 1.0 } else { 0.0 };
                if (product[r * n + c] - expect).abs() > DUALITY_EPS {
                    return Err(Error::Internal(format!(
                        "reciprocal duality residual {:e} exceeds {DUALITY_EPS:e}",
                        (product[r * n + c] - expect).abs()
                    )));
                }
            }
        }
        // Reciprocal vector e^k has the k-th row of the inverse metric as
        // its coordinates.
        let reciprocal = (0..n)
            .map(|k| Multivector::from_vector(&inverse[k * n..(k + 1) * n]))
            .collect::<Result<Vec<_>>>()?;
        Ok(Algebra {
            metric,
            inverse,
            reciprocal,
        })
    }

    /// The context for the identity metric.
    pub fn euclidean(dim: usize) -> Result<Self> {
        Algebra::new(MetricTensor::euclidean(dim)?)
    }

    pub fn dim(&self) -> usize {
        self.metric.dim
    }

    pub fn metric(&self) -> &MetricTensor {
        &self.metric
    }

    /// Entry `G^{ij}` of the inverse metric, 1-based.
    pub fn inverse_entry(&self, i: usize, j: usize) -> f64 {
        let n = self.metric.dim;
        assert!(i >= 1 && i <= n && j >= 1 && j <= n);
        self.inverse[(i - 1) * n + (j - 1)]
    }

    /// The reciprocal basis vector `e^k`, 1-based.
    pub fn reciprocal_vector(&self, k: usize) -> Result<&Multivector> {
        if k < 1 || k > self.metric.dim {
            return Err(Error::IndexOutOfRange {
                index: k,
                dim: self.metric.dim,
            });
        }
        Ok(&self.reciprocal[k - 1])
    }

    /// The reciprocal blade `e^{j1} ∧ ... ∧ e^{jk}` for an increasing
    /// index set, expanded over canonical blades.
    pub fn reciprocal_blade(&self, blade: BladeIndex) -> Result<Multivector> {
        let mut out = Multivector::scalar(self.dim(), 1.0)?;
        for i in blade.indices() {
            out = out.wedge(self.reciprocal_vector(i)?)?;
        }
        Ok(out)
    }

    fn check_operand(&self, x: &Multivector) -> Result<()> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                left: x.dim(),
                right: self.dim(),
            });
        }
        Ok(())
    }

    /// Scalar product of canonical blades of equal grade: the determinant
    /// of the metric sampled at their index sets.  Blades of different
    /// grade multiply to zero.
    pub(crate) fn blade_scalar_product(&self, lhs: BladeIndex, rhs: BladeIndex) -> f64 {
        let k = lhs.grade();
        if k != rhs.grade() {
            return 0.0;
        }
        if k == 0 {
            return 1.0;
        }
        let rows: Vec<usize> = lhs.indices().collect();
        let cols: Vec<usize> = rhs.indices().collect();
        let mut gram = vec![0.0; k * k];
        for (r, &i) in rows.iter().enumerate() {
            for (c, &j) in cols.iter().enumerate() {
                gram[r * k + c] = self.metric.entry(i, j);
            }
        }
        // Cofactor expansion is exact for integer metrics and cheap up to
        // 4x4; larger Gram matrices go through pivoted elimination.
        if k <= 4 {
            linalg::det_cofactor(k, &gram)
        } else {
            linalg::determinant(k, &gram)
        }
    }

    /// The scalar product `x · y`: blades of equal grade meet through
    /// Gram determinants, distinct grades contribute nothing.
    pub fn scalar_product(&self, x: &Multivector, y: &Multivector) -> Result<f64> {
        self.check_operand(x)?;
        self.check_operand(y)?;
        let mut total = 0.0;
        for (lhs, a) in x.terms() {
            for (rhs, b) in y.terms() {
                if lhs.grade() == rhs.grade() {
                    total += a * b * self.blade_scalar_product(lhs, rhs);
                }
            }
        }
        Ok(total)
    }

    /// Contravariant grade-`k` components: `x · (e^{j1} ∧ ... ∧ e^{jk})`
    /// for every increasing index set.  In the euclidean metric this is
    /// exactly the stored coefficient table.
    pub fn contravariant_components(&self, x: &Multivector, k: usize) -> Result<ComponentTable> {
        self.components(x, k, true)
    }

    /// Covariant grade-`k` components: `x · (e_{j1} ∧ ... ∧ e_{jk})` for
    /// every increasing index set.
    pub fn covariant_components(&self, x: &Multivector, k: usize) -> Result<ComponentTable> {
        self.components(x, k, false)
    }

    fn components(&self, x: &Multivector, k: usize, contravariant: bool) -> Result<ComponentTable> {
        self.check_operand(x)?;
        if k > self.dim() {
            return Err(Error::GradeOutOfRange {
                grade: k,
                dim: self.dim(),
            });
        }
        match x.homogeneous_grade() {
            Some(g) if g == k || x.is_zero() => {}
            _ => return Err(Error::MixedGrade { expected: k }),
        }
        let mut table = ComponentTable::new();
        for blade in all_blades(self.dim()) {
            if blade.grade() != k {
                continue;
            }
            let probe = if contravariant {
                self.reciprocal_blade(blade)?
            } else {
                Multivector::from_terms(self.dim(), [(blade, 1.0)])?
            };
            table.insert(blade, self.scalar_product(x, &probe)?);
        }
        Ok(table)
    }
}
