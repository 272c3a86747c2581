//! Canonical basis blades and grade bookkeeping.
//!
//! A basis blade is identified by a strictly increasing list of basis
//! indices drawn from `1..=dim`.  [`BladeIndex`] stores that list as a bit
//! mask (bit `i-1` set ⇔ index `i` present), which makes grade extraction,
//! disjointness tests and reordering signs cheap while keeping the
//! "strictly increasing" invariant true by construction.

use crate::{Error, Result, MAX_DIM};

/// Identifier of a canonical basis blade: a strictly increasing set of
/// basis indices in `1..=MAX_DIM`.  The empty set names the scalar blade.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BladeIndex(u16);

impl BladeIndex {
    /// The empty blade, spanning the scalars.
    pub const SCALAR: BladeIndex = BladeIndex(0);

    /// Builds a blade from strictly increasing indices in `1..=MAX_DIM`.
    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        let mut mask = 0u16;
        let mut prev = 0usize;
        for &i in indices {
            if !(1..=MAX_DIM).contains(&i) {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    dim: MAX_DIM,
                });
            }
            if i == prev {
                return Err(Error::RepeatedIndex { index: i });
            }
            if i < prev {
                return Err(Error::Internal(format!(
                    "blade indices must be strictly increasing, got {i} after {prev}"
                )));
            }
            mask |= 1 << (i - 1);
            prev = i;
        }
        Ok(BladeIndex(mask))
    }

    /// Builds a blade from distinct indices in any order, returning the
    /// sign (±1) of the permutation that sorts them.
    pub fn from_unsorted(indices: &[usize]) -> Result<(Self, f64)> {
        for &i in indices {
            if !(1..=MAX_DIM).contains(&i) {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    dim: MAX_DIM,
                });
            }
        }
        let mut mask = 0u16;
        for &i in indices {
            let bit = 1u16 << (i - 1);
            if mask & bit != 0 {
                return Err(Error::RepeatedIndex { index: i });
            }
            mask |= bit;
        }
        // Parity of the sorting permutation = parity of the inversion count.
        let mut inversions = 0usize;
        for (a, &ia) in indices.iter().enumerate() {
            inversions += indices[a + 1..].iter().filter(|&&ib| ib < ia).count();
        }
        let sign = if inversions.is_multiple_of(2) { 1.0 } else { -1.0 };
        Ok((BladeIndex(mask), sign))
    }

    pub(crate) fn from_mask(mask: u16) -> Self {
        BladeIndex(mask)
    }

    pub(crate) fn mask(self) -> u16 {
        self.0
    }

    /// Number of indices in the blade.
    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    /// The indices of the blade in increasing order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (1..=MAX_DIM).filter(move |i| mask & (1 << (i - 1)) != 0)
    }

    /// Largest index present, or 0 for the scalar blade.
    pub fn max_index(self) -> usize {
        if self.0 == 0 {
            0
        } else {
            16 - self.0.leading_zeros() as usize
        }
    }

    /// True if the blade uses index `i`.
    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_DIM).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    /// True if the two blades share no index.
    pub fn is_disjoint(self, other: BladeIndex) -> bool {
        self.0 & other.0 == 0
    }

    /// Merges two disjoint blades into their union, returning the sign
    /// (±1) picked up by sorting the concatenation `self ++ other` into
    /// increasing order.  The sign is the parity of the number of index
    /// pairs `(i, j)` with `i` from `self`, `j` from `other`, and `j < i`.
    pub fn merged(self, other: BladeIndex) -> (BladeIndex, f64) {
        debug_assert!(self.is_disjoint(other));
        let mut inversions = 0u32;
        for i in self.indices() {
            let below = (1u16 << (i - 1)) - 1;
            inversions += (other.0 & below).count_ones();
        }
        let sign = if inversions.is_multiple_of(2) { 1.0 } else { -1.0 };
        (BladeIndex(self.0 | other.0), sign)
    }

    /// Splits off the lowest index, returning `(index, rest)`.
    /// Returns `None` on the scalar blade.
    pub fn split_lowest(self) -> Option<(usize, BladeIndex)> {
        if self.0 == 0 {
            return None;
        }
        let low = self.0.trailing_zeros() as usize + 1;
        Some((low, BladeIndex(self.0 & (self.0 - 1))))
    }
}

impl Ord for BladeIndex {
    /// Blades sort by grade first, then lexicographically by index list,
    /// matching the canonical display order `1, e1, e2, e1^e2, ...`.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.grade()
            .cmp(&other.grade())
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for BladeIndex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for BladeIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for i in self.indices() {
            if !first {
                write!(f, "^")?;
            }
            write!(f, "e{i}")?;
            first = false;
        }
        Ok(())
    }
}

/// Subset of `{0, ..., MAX_DIM}` reporting which grades a multivector
/// occupies.
#[derive(Clone, Copy, PartialEq, Eq, Default)]
pub struct GradeIndexSet(u16);

impl GradeIndexSet {
    /// The empty set (grades of the zero multivector).
    pub fn empty() -> Self {
        GradeIndexSet(0)
    }

    pub(crate) fn insert(&mut self, grade: usize) {
        debug_assert!(grade <= MAX_DIM);
        self.0 |= 1 << grade;
    }

    /// True if grade `k` is present.
    pub fn contains(self, k: usize) -> bool {
        k <= MAX_DIM && self.0 & (1 << k) != 0
    }

    /// True if no grade is present.
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Number of grades present.
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// The grades in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..=MAX_DIM).filter(move |k| mask & (1 << k) != 0)
    }
}

impl std::fmt::Debug for GradeIndexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for GradeIndexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut set = GradeIndexSet::empty();
        for k in iter {
            set.insert(k);
        }
        set
    }
}

/// Number of canonical basis blades in dimension `dim`, i.e. `2^dim`.
pub fn blade_count(dim: usize) -> u64 {
    assert!(dim <= MAX_DIM, "dimension {dim} exceeds {MAX_DIM}");
    1 << dim
}

/// Number of grade-`k` basis blades in dimension `dim`, i.e. `C(dim, k)`.
pub fn grade_count(dim: usize, k: usize) -> u64 {
    assert!(dim <= MAX_DIM, "dimension {dim} exceeds {MAX_DIM}");
    assert!(k <= dim, "grade {k} exceeds dimension {dim}");
    // Small enough that the multiplicative formula stays exact in u64.
    let mut c = 1u64;
    for j in 0..k.min(dim - k) {
        c = c * (dim - j) as u64 / (j + 1) as u64;
    }
    c
}

/// Enumerates all blades over `1..=dim` in canonical (grade, lexicographic)
/// order.
pub fn all_blades(dim: usize) -> Vec<BladeIndex> {
    assert!(dim <= MAX_DIM, "dimension {dim} exceeds {MAX_DIM}");
    let mut blades: Vec<BladeIndex> = blades_unsorted(dim).collect();
    blades.sort();
    blades
}

/// Enumerates all blades over `1..=dim` in unspecified order, without
/// allocating; for internal loops where order is irrelevant.
pub(crate) fn blades_unsorted(dim: usize) -> impl Iterator<Item = BladeIndex> {
    debug_assert!(dim <= MAX_DIM);
    (0..1u32 << dim).map(|m| BladeIndex::from_mask(m as u16))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blade_counts() {
        assert_eq!(blade_count(0), 1);
        assert_eq!(blade_count(3), 8);
        assert_eq!(blade_count(12), 4096);
    }

    #[test]
    fn grade_counts() {
        assert_eq!(grade_count(4, 2), 6);
        assert_eq!(grade_count(12, 6), 924);
        assert_eq!(grade_count(5, 0), 1);
    }

    #[test]
    fn from_indices_enforces_invariants() {
        assert!(BladeIndex::from_indices(&[1, 2, 5]).is_ok());
        assert!(matches!(
            BladeIndex::from_indices(&[1, 1]),
            Err(Error::RepeatedIndex { index: 1 })
        ));
        assert!(matches!(
            BladeIndex::from_indices(&[0]),
            Err(Error::IndexOutOfRange { index: 0, .. })
        ));
        assert!(matches!(
            BladeIndex::from_indices(&[13]),
            Err(Error::IndexOutOfRange { index: 13, .. })
        ));
    }

    #[test]
    fn from_unsorted_tracks_parity() {
        let (b, s) = BladeIndex::from_unsorted(&[2, 1]).unwrap();
        assert_eq!(b, BladeIndex::from_indices(&[1, 2]).unwrap());
        assert_eq!(s, -1.0);
        let (b, s) = BladeIndex::from_unsorted(&[3, 1, 2]).unwrap();
        assert_eq!(b, BladeIndex::from_indices(&[1, 2, 3]).unwrap());
        assert_eq!(s, 1.0);
        assert!(BladeIndex::from_unsorted(&[2, 2]).is_err());
    }

    #[test]
    fn merge_signs_count_inversions() {
        let e1 = BladeIndex::from_indices(&[1]).unwrap();
        let e2 = BladeIndex::from_indices(&[2]).unwrap();
        let (b12, s) = e1.merged(e2);
        assert_eq!(b12, BladeIndex::from_indices(&[1, 2]).unwrap());
        assert_eq!(s, 1.0);
        let (b21, s) = e2.merged(e1);
        assert_eq!(b21, b12);
        assert_eq!(s, -1.0);

        let e13 = BladeIndex::from_indices(&[1, 3]).unwrap();
        let e24 = BladeIndex::from_indices(&[2, 4]).unwrap();
        // Sorting 1,3,2,4 needs one transposition.
        let (b, s) = e13.merged(e24);
        assert_eq!(b, BladeIndex::from_indices(&[1, 2, 3, 4]).unwrap());
        assert_eq!(s, -1.0);
    }

    #[test]
    fn canonical_order_is_grade_major() {
        let blades = all_blades(3);
        let names: Vec<String> = blades.iter().map(|b| format!("{b:?}")).collect();
        assert_eq!(
            names,
            ["1", "e1", "e2", "e3", "e1^e2", "e1^e3", "e2^e3", "e1^e2^e3"]
        );
    }

    #[test]
    fn lexicographic_order_within_grade() {
        let e14 = BladeIndex::from_indices(&[1, 4]).unwrap();
        let e23 = BladeIndex::from_indices(&[2, 3]).unwrap();
        assert!(e14 < e23);
    }

    #[test]
    fn split_lowest_peels_indices() {
        let b = BladeIndex::from_indices(&[2, 3, 5]).unwrap();
        let (i, rest) = b.split_lowest().unwrap();
        assert_eq!(i, 2);
        assert_eq!(rest, BladeIndex::from_indices(&[3, 5]).unwrap());
        assert!(BladeIndex::SCALAR.split_lowest().is_none());
    }
}
