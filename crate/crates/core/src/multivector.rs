//! Sparse graded multivector storage.
//!
//! A multivector over an `n`-dimensional space is a map from canonical
//! basis blades to real coefficients.  Only nonzero coefficients are
//! stored; every constructor and arithmetic operation prunes exact zeros
//! so that structural equality (`==`) means equality of the represented
//! multivectors whenever coefficients are produced by exact arithmetic.

use std::collections::BTreeMap;

use crate::blade::{BladeIndex, GradeIndexSet};
use crate::{Error, Result, MAX_DIM};

/// Coefficients with magnitude at or below this are treated as numerical
/// noise by [`Multivector::pruned`] on floating-point code paths.
pub const DEFAULT_PRUNE_EPS: f64 = 1e-12;

/// A multivector stored as a sparse map from basis blades to coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Multivector {
    dim: usize,
    terms: BTreeMap<BladeIndex, f64>,
}

impl Multivector {
    /// The zero multivector in dimension `dim` (`1..=MAX_DIM`).
    pub fn zero(dim: usize) -> Result<Self> {
        if !(1..=MAX_DIM).contains(&dim) {
            return Err(Error::DimensionOutOfRange { dim, max: MAX_DIM });
        }
        Ok(Multivector {
            dim,
            terms: BTreeMap::new(),
        })
    }

    /// The real `a` embedded as a grade-0 multivector.
    pub fn scalar(dim: usize, a: f64) -> Result<Self> {
        let mut mv = Multivector::zero(dim)?;
        mv.insert_term(BladeIndex::SCALAR, a);
        Ok(mv)
    }

    /// The basis vector `e_i`, `i` in `1..=dim`.
    pub fn basis_vector(dim: usize, i: usize) -> Result<Self> {
        Multivector::basis_blade(dim, &[i])
    }

    /// The canonical blade `e_{i1} ∧ ... ∧ e_{ik}` for distinct indices in
    /// any order, carrying the sign of the permutation that sorts them.
    /// A repeated index names a degenerate blade and is rejected.
    pub fn basis_blade(dim: usize, indices: &[usize]) -> Result<Self> {
        let mut mv = Multivector::zero(dim)?;
        for &i in indices {
            if i < 1 || i > dim {
                return Err(Error::IndexOutOfRange { index: i, dim });
            }
        }
        let (blade, sign) = BladeIndex::from_unsorted(indices)?;
        mv.insert_term(blade, sign);
        Ok(mv)
    }

    /// A grade-1 multivector with the given coordinates.
    pub fn from_vector(coords: &[f64]) -> Result<Self> {
        let mut mv = Multivector::zero(coords.len())?;
        for (idx, &c) in coords.iter().enumerate() {
            mv.insert_term(BladeIndex::from_indices(&[idx + 1])?, c);
        }
        Ok(mv)
    }

    /// Builds a multivector from `(blade, coefficient)` pairs, accumulating
    /// duplicates.
    pub fn from_terms<I>(dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BladeIndex, f64)>,
    {
        let mut mv = Multivector::zero(dim)?;
        for (blade, c) in terms {
            if blade.max_index() > dim {
                return Err(Error::IndexOutOfRange {
                    index: blade.max_index(),
                    dim,
                });
            }
            mv.add_term(blade, c);
        }
        Ok(mv)
    }

    /// Dimension of the underlying vector space.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// True if no term is stored.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the given blade (0 when absent).
    pub fn coeff(&self, blade: BladeIndex) -> f64 {
        self.terms.get(&blade).copied().unwrap_or(0.0)
    }

    /// Iterates stored terms in canonical (grade, lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (BladeIndex, f64)> + '_ {
        self.terms.iter().map(|(&b, &c)| (b, c))
    }

    /// The set of grades with at least one stored term.
    pub fn grades(&self) -> GradeIndexSet {
        self.terms.keys().map(|b| b.grade()).collect()
    }

    /// The grade-`k` part, `0 <= k <= dim`.
    pub fn grade_part(&self, k: usize) -> Result<Self> {
        if k > self.dim {
            return Err(Error::GradeOutOfRange {
                grade: k,
                dim: self.dim,
            });
        }
        let mut out = Multivector::zero(self.dim)?;
        for (blade, c) in self.terms() {
            if blade.grade() == k {
                out.insert_term(blade, c);
            }
        }
        Ok(out)
    }

    /// `Some(k)` if every stored term has grade `k`; `Some(0)` for zero;
    /// `None` for mixed grades.
    pub fn homogeneous_grade(&self) -> Option<usize> {
        let mut grades = self.terms.keys().map(|b| b.grade());
        let first = match grades.next() {
            None => return Some(0),
            Some(g) => g,
        };
        grades.all(|g| g == first).then_some(first)
    }

    /// Componentwise sum.  Fails on mismatched dimensions.
    pub fn add(&self, other: &Multivector) -> Result<Self> {
        self.check_same_dim(other)?;
        let mut out = self.clone();
        for (blade, c) in other.terms() {
            out.add_term(blade, c);
        }
        Ok(out)
    }

    /// Componentwise difference.  Fails on mismatched dimensions.
    pub fn sub(&self, other: &Multivector) -> Result<Self> {
        self.add(&other.neg())
    }

    /// The multivector scaled by `a`.
    pub fn scale(&self, a: f64) -> Self {
        let mut out = Multivector {
            dim: self.dim,
            terms: BTreeMap::new(),
        };
        for (blade, c) in self.terms() {
            out.insert_term(blade, a * c);
        }
        out
    }

    /// The negated multivector.
    pub fn neg(&self) -> Self {
        self.scale(-1.0)
    }

    /// Largest coefficient magnitude (0 for the zero multivector).
    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Largest coefficient difference against `other` over the union of
    /// their blades.  Panics on mismatched dimensions.
    pub fn max_abs_diff(&self, other: &Multivector) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch in max_abs_diff");
        let mut worst: f64 = 0.0;
        for (blade, c) in self.terms() {
            worst = worst.max((c - other.coeff(blade)).abs());
        }
        for (blade, c) in other.terms() {
            worst = worst.max((c - self.coeff(blade)).abs());
        }
        worst
    }

    /// True if every coefficient agrees with `other` within `tol`.
    pub fn approx_eq(&self, other: &Multivector, tol: f64) -> bool {
        self.dim == other.dim && self.max_abs_diff(other) <= tol
    }

    /// Copy with coefficients of magnitude at or below `eps` removed.
    pub fn pruned(&self, eps: f64) -> Self {
        let mut out = Multivector {
            dim: self.dim,
            terms: BTreeMap::new(),
        };
        for (blade, c) in self.terms() {
            if c.abs() > eps {
                out.insert_term(blade, c);
            }
        }
        out
    }

    pub(crate) fn check_same_dim(&self, other: &Multivector) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    /// Sets `blade += c`, dropping the entry if the result is exactly zero.
    pub(crate) fn add_term(&mut self, blade: BladeIndex, c: f64) {
        debug_assert!(blade.max_index() <= self.dim);
        let entry = self.terms.entry(blade).or_insert(0.0);
        *entry += c;
        if *entry == 0.0 {
            self.terms.remove(&blade);
        }
    }

    /// Sets `blade = c`, dropping the entry if `c` is exactly zero.
    pub(crate) fn insert_term(&mut self, blade: BladeIndex, c: f64) {
        debug_assert!(blade.max_index() <= self.dim);
        if c == 0.0 {
            self.terms.remove(&blade);
        } else {
            self.terms.insert(blade, c);
        }
    }
}
