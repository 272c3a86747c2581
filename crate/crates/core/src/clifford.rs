//! Geometric (Clifford) product of multivectors.
//!
//! The product is defined recursively from two rules:
//!
//! * for a vector `v`, the product with any multivector `M` splits into
//!   contraction plus wedge: `v M = v ⌟ M + v ∧ M`;
//! * a basis blade `e_{i1} ∧ R` peels its lowest vector: with `Y` arbitrary,
//!   `(e_{i1} ∧ R) Y = e_{i1} (R Y) − (e_{i1} ⌟ R) Y`.
//!
//! The recursion terminates because every step strictly reduces the grade of
//! the left factor.  [`CayleyTable`] memoizes all blade-by-blade products of an
//! algebra so that repeated full products avoid re-running the recursion.

use crate::blade::{blade_count, BladeIndex};
use crate::error::Error;
use crate::metric::Algebra;
use crate::multivector::Multivector;
use crate::Result;

impl Algebra {
    /// Geometric product of `x` and `y` under this algebra's metric.
    ///
    /// Computed by the vector-peeling recursion; for bulk work build a
    /// [`CayleyTable`] once and call [`CayleyTable::product`] instead.
    pub fn geometric_product(&self, x: &Multivector, y: &Multivector) -> Result<Multivector> {
        self.check_pair(x, y)?;
        self.gp_unchecked(x, y)
    }

    /// Term-by-term product loop shared by the public entry point and the
    /// recursion (which re-enters with already-validated operands).
    fn gp_unchecked(&self, x: &Multivector, y: &Multivector) -> Result<Multivector> {
        let mut out = Multivector::zero(self.dim())?;
        for (lhs, a) in x.terms() {
            let partial = self.gp_blade_with(lhs, y)?;
            for (blade, c) in partial.terms() {
                out.add_term(blade, a * c);
            }
        }
        Ok(out)
    }

    /// Product of the single basis blade `lhs` with the multivector `y`.
    fn gp_blade_with(&self, lhs: BladeIndex, y: &Multivector) -> Result<Multivector> {
        if lhs == BladeIndex::SCALAR {
            return Ok(y.clone());
        }
        let (lowest, rest) = lhs
            .split_lowest()
            .ok_or_else(|| Error::Internal("non-scalar blade with no lowest index".into()))?;
        let v = Multivector::basis_vector(self.dim(), lowest)?;
        if rest == BladeIndex::SCALAR {
            // Vector case: v y = v ⌟ y + v ∧ y.
            let mut out = self.left_contract(&v, y)?;
            for (blade, c) in v.wedge(y)?.terms() {
                out.add_term(blade, c);
            }
            return Ok(out);
        }
        // lhs = e_lowest ∧ rest with merge sign +1 because `lowest` precedes
        // every index of `rest`.
        let rest_mv = Multivector::from_terms(self.dim(), [(rest, 1.0)])?;
        let ry = self.gp_blade_with(rest, y)?;
        let mut out = self.gp_blade_with(BladeIndex::from_indices(&[lowest])?, &ry)?;
        let correction = self.gp_unchecked(&self.left_contract(&v, &rest_mv)?, y)?;
        for (blade, c) in correction.terms() {
            out.add_term(blade, -c);
        }
        Ok(out)
    }
}

/// Memoized table of all pairwise basis-blade geometric products for one
/// algebra.
///
/// Entry `(a, b)` holds the full multivector value of `e_A e_B`, so a product
/// of two multivectors becomes a double loop over their stored terms with
/// table lookups, no recursion.
pub struct CayleyTable {
    dim: usize,
    entries: Vec<Multivector>,
}

impl CayleyTable {
    /// Precompute every blade-by-blade product of `algebra`.
    pub fn new(algebra: &Algebra) -> Result<Self> {
        let dim = algebra.dim();
        let n = blade_count(dim) as usize;
        let mut entries = Vec::with_capacity(n * n);
        let blades: Vec<BladeIndex> = crate::blade::all_blades(dim);
        let mut by_mask: Vec<BladeIndex> = vec![BladeIndex::SCALAR; n];
        for &b in &blades {
            by_mask[b.mask() as usize] = b;
        }
        for &a in &by_mask {
            let lhs = Multivector::from_terms(dim, [(a, 1.0)])?;
            for &b in &by_mask {
                let rhs = Multivector::from_terms(dim, [(b, 1.0)])?;
                entries.push(algebra.geometric_product(&lhs, &rhs)?);
            }
        }
        Ok(Self { dim, entries })
    }

    /// Dimension of the underlying vector space.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The stored product `e_A e_B` for two basis blades.
    pub fn blade_product(&self, a: BladeIndex, b: BladeIndex) -> Result<&Multivector> {
        let n = blade_count(self.dim) as usize;
        let (ai, bi) = (a.mask() as usize, b.mask() as usize);
        if ai >= n || bi >= n {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: a.max_index().max(b.max_index()),
            });
        }
        Ok(&self.entries[ai * n + bi])
    }

    /// Geometric product of two multivectors via table lookups.
    pub fn product(&self, x: &Multivector, y: &Multivector) -> Result<Multivector> {
        if x.dim() != self.dim || y.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: x.dim(),
                right: y.dim(),
            });
        }
        let mut out = Multivector::zero(self.dim)?;
        for (lhs, a) in x.terms() {
            for (rhs, b) in y.terms() {
                let cell = self.blade_product(lhs, rhs)?;
                for (blade, c) in cell.terms() {
                    out.add_term(blade, a * b * c);
                }
            }
        }
        Ok(out)
    }
}
