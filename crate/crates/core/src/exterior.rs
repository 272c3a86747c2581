//! Exterior (wedge) product on the sparse graded representation.
//!
//! Canonical blades multiply by merging their index sets: blades sharing
//! an index annihilate, disjoint blades merge into the union with the
//! sign of the permutation that interleaves them.  The product of general
//! multivectors is the bilinear extension over stored terms, which costs
//! `O(p + q)` per blade pair instead of the factorial cost of the dense
//! antisymmetrised tensor product it represents.

use crate::{Multivector, Result};

impl Multivector {
    /// The exterior product `self ∧ other`.
    ///
    /// Grades add: the grade-`(p+q)` part of the result collects exactly
    /// the products of grade-`p` terms of `self` with grade-`q` terms of
    /// `other`.  Terms whose combined grade would exceed the dimension
    /// vanish automatically because their blades share an index.
    pub fn wedge(&self, other: &Multivector) -> Result<Multivector> {
        self.check_same_dim(other)?;
        let mut out = Multivector::zero(self.dim())?;
        for (lhs, a) in self.terms() {
            for (rhs, b) in other.terms() {
                if lhs.is_disjoint(rhs) {
                    let (blade, sign) = lhs.merged(rhs);
                    out.add_term(blade, sign * a * b);
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blade::BladeIndex;
    use crate::Error;

    fn blade(indices: &[usize]) -> BladeIndex {
        BladeIndex::from_indices(indices).unwrap()
    }

    fn basis(dim: usize, indices: &[usize]) -> Multivector {
        Multivector::basis_blade(dim, indices).unwrap()
    }

    #[test]
    fn basis_vectors_anticommute() {
        let e1 = basis(3, &[1]);
        let e2 = basis(3, &[2]);
        let w = e1.wedge(&e2).unwrap();
        assert_eq!(w.coeff(blade(&[1, 2])), 1.0);
        let w = e2.wedge(&e1).unwrap();
        assert_eq!(w.coeff(blade(&[1, 2])), -1.0);
    }

    #[test]
    fn shared_index_annihilates() {
        let e1 = basis(2, &[1]);
        assert!(e1.wedge(&e1).unwrap().is_zero());
        let e12 = basis(3, &[1, 2]);
        let e23 = basis(3, &[2, 3]);
        assert!(e12.wedge(&e23).unwrap().is_zero());
    }

    #[test]
    fn interleaving_sign_is_tracked() {
        // (e1^e3) ∧ (e2^e4) sorts with one transposition.
        let w = basis(4, &[1, 3]).wedge(&basis(4, &[2, 4])).unwrap();
        assert_eq!(w.coeff(blade(&[1, 2, 3, 4])), -1.0);
    }

    #[test]
    fn scalars_act_as_scale_factors() {
        let x = basis(3, &[2, 3]).scale(5.0);
        let two = Multivector::scalar(3, 2.0).unwrap();
        assert_eq!(two.wedge(&x).unwrap(), x.scale(2.0));
        assert_eq!(x.wedge(&two).unwrap(), x.scale(2.0));
    }

    #[test]
    fn repeated_vector_in_a_sum_squares_to_zero() {
        let v = basis(2, &[1]).add(&basis(2, &[2])).unwrap();
        assert!(v.wedge(&v).unwrap().is_zero());
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let x = basis(2, &[1]);
        let y = basis(3, &[1]);
        assert!(matches!(
            x.wedge(&y),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn distributes_over_addition() {
        let x = basis(3, &[1]).add(&basis(3, &[2]).scale(2.0)).unwrap();
        let y = basis(3, &[3]).scale(-3.0);
        let z = basis(3, &[2]).scale(4.0);
        let lhs = x.wedge(&y.add(&z).unwrap()).unwrap();
        let rhs = x.wedge(&y).unwrap().add(&x.wedge(&z).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}
