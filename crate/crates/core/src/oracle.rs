//! Dense-tensor reference model for the graded operations.
//!
//! This module is deliberately naive: multivectors of grade `k` are
//! expanded into dense rank-`k` antisymmetric arrays and every operation
//! is a literal permutation sum.  Dimensions are capped at
//! [`ORACLE_MAX_DIM`] so those sums stay cheap to enumerate.  The sparse
//! blade implementations elsewhere in the crate are tested against this
//! module, never the other way round, so nothing here is allowed to
//! depend on them.
//!
//! Divisions by factorials are performed after the integer-valued
//! permutation sums, so for integer inputs every result that is
//! mathematically an integer (or a dyadic rational) is produced exactly.

use crate::blade::{all_blades, BladeIndex};
use crate::metric::MetricTensor;
use crate::{Error, Multivector, Result};

/// Largest dimension the dense model enumerates.
pub const ORACLE_MAX_DIM: usize = 4;

/// Largest tensor rank the dense model stores (two grade-4 factors).
pub const ORACLE_MAX_RANK: usize = 8;

fn check_dim(dim: usize) -> Result<()> {
    if !(1..=ORACLE_MAX_DIM).contains(&dim) {
        return Err(Error::DimensionOutOfRange {
            dim,
            max: ORACLE_MAX_DIM,
        });
    }
    Ok(())
}

fn check_rank(rank: usize) -> Result<()> {
    if rank > ORACLE_MAX_RANK {
        return Err(Error::RankOutOfRange {
            rank,
            max: ORACLE_MAX_RANK,
        });
    }
    Ok(())
}

/// Row-major offset of a 1-based index tuple.
fn offset_of(dim: usize, idx: &[usize]) -> usize {
    idx.iter().fold(0, |acc, &i| acc * dim + (i - 1))
}

/// Validates a 1-based index tuple against a tensor shape.
fn check_tuple(dim: usize, rank: usize, idx: &[usize]) -> Result<()> {
    if idx.len() != rank {
        return Err(Error::LengthMismatch {
            left: idx.len(),
            right: rank,
        });
    }
    for &i in idx {
        if i < 1 || i > dim {
            return Err(Error::IndexOutOfRange { index: i, dim });
        }
    }
    Ok(())
}

/// Decodes a row-major offset into the 1-based tuple `buf`.
fn decode(dim: usize, offset: usize, buf: &mut [usize]) {
    let mut rest = offset;
    for slot in buf.iter_mut().rev() {
        *slot = rest % dim + 1;
        rest /= dim;
    }
}

/// Visits every permutation of `0..k` with its sign, via Heap's algorithm.
fn for_each_permutation(k: usize, mut f: impl FnMut(&[usize], f64)) {
    let mut perm: Vec<usize> = (0..k).collect();
    let mut counters = vec![0usize; k];
    let mut sign = 1.0;
    f(&perm, sign);
    let mut i = 0;
    while i < k {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            sign = -sign;
            f(&perm, sign);
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
}

fn factorial(k: usize) -> f64 {
    (1..=k).product::<usize>() as f64
}

/// Dense rank-`k` tensor over a `dim`-dimensional space, stored row-major
/// by 1-based index tuple.  Rank 0 holds a single scalar entry.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor {
    dim: usize,
    rank: usize,
    entries: Vec<f64>,
}

impl Tensor {
    /// The zero tensor of the given shape.
    pub fn zeros(dim: usize, rank: usize) -> Result<Self> {
        check_dim(dim)?;
        check_rank(rank)?;
        Ok(Tensor {
            dim,
            rank,
            entries: vec![0.0; dim.pow(rank as u32)],
        })
    }

    /// Wraps a row-major entry buffer of length `dim^rank`.
    pub fn from_entries(dim: usize, rank: usize, entries: Vec<f64>) -> Result<Self> {
        check_dim(dim)?;
        check_rank(rank)?;
        if entries.len() != dim.pow(rank as u32) {
            return Err(Error::ShapeMismatch {
                len: entries.len(),
                dim,
                rank,
            });
        }
        Ok(Tensor { dim, rank, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Entry at a 1-based index tuple.  Evaluating the tensor on dual
    /// basis covectors is exactly this lookup.
    pub fn component(&self, idx: &[usize]) -> Result<f64> {
        check_tuple(self.dim, self.rank, idx)?;
        Ok(self.entries[offset_of(self.dim, idx)])
    }

    /// Overwrites the entry at a 1-based index tuple.
    pub fn set_component(&mut self, idx: &[usize], value: f64) -> Result<()> {
        check_tuple(self.dim, self.rank, idx)?;
        self.entries[offset_of(self.dim, idx)] = value;
        Ok(())
    }

    /// The tensor product `self ⊗ other` (ranks add).
    pub fn tensor_product(&self, other: &Tensor) -> Result<Tensor> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        check_rank(self.rank + other.rank)?;
        let mut entries = Vec::with_capacity(self.entries.len() * other.entries.len());
        for &a in &self.entries {
            for &b in &other.entries {
                entries.push(a * b);
            }
        }
        Tensor::from_entries(self.dim, self.rank + other.rank, entries)
    }

    /// Componentwise sum.
    pub fn add(&self, other: &Tensor) -> Result<Tensor> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        if self.rank != other.rank {
            return Err(Error::LengthMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Tensor::from_entries(self.dim, self.rank, entries)
    }

    /// The tensor scaled by `a`.
    pub fn scale(&self, a: f64) -> Tensor {
        Tensor {
            dim: self.dim,
            rank: self.rank,
            entries: self.entries.iter().map(|e| a * e).collect(),
        }
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().fold(0.0, |m, e| m.max(e.abs()))
    }
}

/// A dense tensor validated (or constructed) to be fully antisymmetric.
///
/// Ranks above the dimension are permitted: such a tensor is identically
/// zero and reports [`is_overflow_grade`](Self::is_overflow_grade).
#[derive(Clone, Debug, PartialEq)]
pub struct AntisymmetricTensor {
    dim: usize,
    rank: usize,
    entries: Vec<f64>,
}

/// Absolute-per-unit-scale tolerance for antisymmetry validation.
pub const ANTISYMMETRY_EPS: f64 = 1e-12;

impl AntisymmetricTensor {
    /// The zero antisymmetric tensor of the given shape.
    pub fn zeros(dim: usize, rank: usize) -> Result<Self> {
        check_dim(dim)?;
        check_rank(rank)?;
        Ok(AntisymmetricTensor {
            dim,
            rank,
            entries: vec![0.0; dim.pow(rank as u32)],
        })
    }

    /// Wraps an entry buffer after checking full antisymmetry: swapping
    /// any two adjacent tuple positions must negate the entry (within
    /// [`ANTISYMMETRY_EPS`] relative to the largest entry).  Adjacent
    /// transpositions generate every permutation, so this implies the
    /// sign rule for all of them and zero entries on repeated indices.
    pub fn from_entries(dim: usize, rank: usize, entries: Vec<f64>) -> Result<Self> {
        let t = Tensor::from_entries(dim, rank, entries)?;
        let scale = t.max_abs().max(1.0);
        let mut idx = vec![0usize; rank];
        let mut worst = 0.0f64;
        for offset in 0..t.entries.len() {
            decode(dim, offset, &mut idx);
            for pos in 0..rank.saturating_sub(1) {
                idx.swap(pos, pos + 1);
                let swapped = t.entries[offset_of(dim, &idx)];
                idx.swap(pos, pos + 1);
                worst = worst.max((t.entries[offset] + swapped).abs());
            }
        }
        if worst > ANTISYMMETRY_EPS * scale {
            return Err(Error::NotAntisymmetric { deviation: worst });
        }
        Ok(AntisymmetricTensor {
            dim: t.dim,
            rank: t.rank,
            entries: t.entries,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// True when the rank exceeds the dimension, which forces every entry
    /// to vanish.
    pub fn is_overflow_grade(&self) -> bool {
        self.rank > self.dim
    }

    /// Entry at a 1-based index tuple.
    pub fn component(&self, idx: &[usize]) -> Result<f64> {
        check_tuple(self.dim, self.rank, idx)?;
        Ok(self.entries[offset_of(self.dim, idx)])
    }

    /// Copy of the underlying dense tensor.
    pub fn to_tensor(&self) -> Tensor {
        Tensor {
            dim: self.dim,
            rank: self.rank,
            entries: self.entries.clone(),
        }
    }

    /// Componentwise sum (shapes must match).
    pub fn add(&self, other: &AntisymmetricTensor) -> Result<AntisymmetricTensor> {
        let sum = self.to_tensor().add(&other.to_tensor())?;
        Ok(AntisymmetricTensor {
            dim: sum.dim,
            rank: sum.rank,
            entries: sum.entries,
        })
    }

    /// The tensor scaled by `a`.
    pub fn scale(&self, a: f64) -> AntisymmetricTensor {
        AntisymmetricTensor {
            dim: self.dim,
            rank: self.rank,
            entries: self.entries.iter().map(|e| a * e).collect(),
        }
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().fold(0.0, |m, e| m.max(e.abs()))
    }

    /// Largest entry difference against `other` (shapes must match).
    pub fn max_abs_diff(&self, other: &AntisymmetricTensor) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch in max_abs_diff");
        assert_eq!(self.rank, other.rank, "rank mismatch in max_abs_diff");
        self.entries
            .iter()
            .zip(&other.entries)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    /// True if every entry agrees with `other` within `tol`.
    pub fn approx_eq(&self, other: &AntisymmetricTensor, tol: f64) -> bool {
        self.dim == other.dim && self.rank == other.rank && self.max_abs_diff(other) <= tol
    }
}

/// The permutation symbol ε: +1 for an even arrangement of `1..=k`,
/// −1 for an odd one, 0 if the list is not a permutation of `1..=k`.
pub fn permutation_symbol(indices: &[usize]) -> i32 {
    let k = indices.len();
    let mut seen = vec![false; k];
    for &i in indices {
        if i < 1 || i > k || seen[i - 1] {
            return 0;
        }
        seen[i - 1] = true;
    }
    let mut inversions = 0usize;
    for (a, &ia) in indices.iter().enumerate() {
        inversions += indices[a + 1..].iter().filter(|&&ib| ib < ia).count();
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The generalized Kronecker symbol: the determinant of the `k x k`
/// matrix whose `(r, c)` entry is 1 when `upper[r] == lower[c]`, else 0.
pub fn generalized_kronecker(upper: &[usize], lower: &[usize]) -> Result<i64> {
    if upper.len() != lower.len() {
        return Err(Error::LengthMismatch {
            left: upper.len(),
            right: lower.len(),
        });
    }
    check_rank(upper.len())?;
    for &i in upper.iter().chain(lower) {
        if i < 1 {
            return Err(Error::IndexOutOfRange {
                index: i,
                dim: crate::MAX_DIM,
            });
        }
    }
    let k = upper.len();
    let mut m = vec![0i64; k * k];
    for r in 0..k {
        for c in 0..k {
            m[r * k + c] = (upper[r] == lower[c]) as i64;
        }
    }
    Ok(det_i64(k, &m))
}

fn det_i64(n: usize, m: &[i64]) -> i64 {
    match n {
        0 => 1,
        1 => m[0],
        2 => m[0] * m[3] - m[1] * m[2],
        _ => {
            let mut det = 0i64;
            let mut minor = vec![0i64; (n - 1) * (n - 1)];
            for col in 0..n {
                if m[col] == 0 {
                    continue;
                }
                let mut k = 0;
                for r in 1..n {
                    for c in 0..n {
                        if c != col {
                            minor[k] = m[r * n + c];
                            k += 1;
                        }
                    }
                }
                let sign = if col % 2 == 0 { 1 } else { -1 };
                det += sign * m[col] * det_i64(n - 1, &minor);
            }
            det
        }
    }
}

/// The antisymmetrisation `(1/k!) Σ_σ sign(σ) t∘σ` of a dense tensor.
///
/// When the rank exceeds the dimension every output entry is a cancelling
/// pair sum (each tuple repeats an index), so the zero tensor is returned
/// directly, flagged via [`AntisymmetricTensor::is_overflow_grade`].
pub fn antisymmetrize(t: &Tensor) -> Result<AntisymmetricTensor> {
    if t.rank > t.dim {
        return AntisymmetricTensor::zeros(t.dim, t.rank);
    }
    let len = t.entries.len();
    let mut out = vec![0.0; len];
    let mut idx = vec![0usize; t.rank];
    let mut permuted = vec![0usize; t.rank];
    for_each_permutation(t.rank, |perm, sign| {
        for (offset, acc) in out.iter_mut().enumerate() {
            decode(t.dim, offset, &mut idx);
            for (slot, &p) in permuted.iter_mut().zip(perm) {
                *slot = idx[p];
            }
            *acc += sign * t.entries[offset_of(t.dim, &permuted)];
        }
    });
    let kfact = factorial(t.rank);
    for e in &mut out {
        *e /= kfact;
    }
    AntisymmetricTensor::from_entries(t.dim, t.rank, out)
}

/// Exterior product of dense antisymmetric tensors:
/// `(p+q)!/(p!q!)` times the antisymmetrised tensor product.
///
/// Computed as the full permutation sum divided by `p!q!` at the end, so
/// integer inputs give exact integer entries.  When `p+q` exceeds the
/// dimension the zero tensor is returned, flagged as overflow grade.
pub fn oracle_exterior(
    x: &AntisymmetricTensor,
    y: &AntisymmetricTensor,
) -> Result<AntisymmetricTensor> {
    if x.dim != y.dim {
        return Err(Error::DimensionMismatch {
            left: x.dim,
            right: y.dim,
        });
    }
    let (p, q) = (x.rank, y.rank);
    check_rank(p + q)?;
    if p + q > x.dim {
        return AntisymmetricTensor::zeros(x.dim, p + q);
    }
    let dim = x.dim;
    let len = dim.pow((p + q) as u32);
    let mut out = vec![0.0; len];
    let mut idx = vec![0usize; p + q];
    let mut permuted = vec![0usize; p + q];
    for_each_permutation(p + q, |perm, sign| {
        for (offset, acc) in out.iter_mut().enumerate() {
            decode(dim, offset, &mut idx);
            for (slot, &pos) in permuted.iter_mut().zip(perm) {
                *slot = idx[pos];
            }
            let a = x.entries[offset_of(dim, &permuted[..p])];
            let b = y.entries[offset_of(dim, &permuted[p..])];
            *acc += sign * a * b;
        }
    });
    let norm = factorial(p) * factorial(q);
    for e in &mut out {
        *e /= norm;
    }
    AntisymmetricTensor::from_entries(dim, p + q, out)
}

/// The simple `k`-vector spanned by `k` coordinate vectors: entry
/// `(j_1..j_k)` is `Σ_σ sign(σ) Π_r v_{σ(r)}[j_r]`, i.e. the determinant
/// of the matrix whose columns are the vectors sampled at the tuple.
pub fn oracle_simple_kvector(vectors: &[Vec<f64>]) -> Result<AntisymmetricTensor> {
    let k = vectors.len();
    let dim = vectors.first().map(|v| v.len()).unwrap_or(0);
    check_dim(dim)?;
    if k < 1 || k > dim {
        return Err(Error::GradeOutOfRange { grade: k, dim });
    }
    for v in vectors {
        if v.len() != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: v.len(),
            });
        }
    }
    let len = dim.pow(k as u32);
    let mut out = vec![0.0; len];
    let mut idx = vec![0usize; k];
    for_each_permutation(k, |perm, sign| {
        for (offset, slot) in out.iter_mut().enumerate() {
            decode(dim, offset, &mut idx);
            let mut product = sign;
            for (r, &j) in idx.iter().enumerate() {
                product *= vectors[perm[r]][j - 1];
            }
            *slot += product;
        }
    });
    AntisymmetricTensor::from_entries(dim, k, out)
}

/// Reads the strictly increasing entries of an antisymmetric tensor off
/// as blade coefficients.  Inverse of [`from_blades`] on its image.
pub fn to_blades(t: &AntisymmetricTensor) -> Result<Multivector> {
    let mut mv = Multivector::zero(t.dim)?;
    if t.rank > t.dim {
        return Ok(mv);
    }
    for blade in all_blades(t.dim) {
        if blade.grade() != t.rank {
            continue;
        }
        let idx: Vec<usize> = blade.indices().collect();
        mv.add_term(blade, t.entries[offset_of(t.dim, &idx)]);
    }
    Ok(mv)
}

/// Expands a homogeneous grade-`k` multivector into its dense
/// antisymmetric component tensor.  Inverse of [`to_blades`].
pub fn from_blades(x: &Multivector, k: usize) -> Result<AntisymmetricTensor> {
    check_dim(x.dim())?;
    if k > x.dim() {
        return Err(Error::GradeOutOfRange {
            grade: k,
            dim: x.dim(),
        });
    }
    if x.terms().any(|(blade, _)| blade.grade() != k) {
        return Err(Error::MixedGrade { expected: k });
    }
    let dim = x.dim();
    let len = dim.pow(k as u32);
    let mut out = vec![0.0; len];
    let mut idx = vec![0usize; k];
    for (offset, slot) in out.iter_mut().enumerate() {
        decode(dim, offset, &mut idx);
        match BladeIndex::from_unsorted(&idx) {
            Ok((blade, sign)) => *slot = sign * x.coeff(blade),
            Err(_) => *slot = 0.0, // repeated index
        }
    }
    AntisymmetricTensor::from_entries(dim, k, out)
}

/// Scalar product via dense components: for each grade `k`, contract the
/// contravariant components of `x` against the components of `y` with
/// every index lowered through the metric, then divide by `k!`.
///
/// This is the reference path the Gram-determinant scalar product is
/// checked against; it shares no code with it.
pub fn oracle_scalar_product(metric: &MetricTensor, x: &Multivector, y: &Multivector) -> Result<f64> {
    check_dim(x.dim())?;
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            left: x.dim(),
            right: y.dim(),
        });
    }
    if metric.dim() != x.dim() {
        return Err(Error::DimensionMismatch {
            left: metric.dim(),
            right: x.dim(),
        });
    }
    let dim = x.dim();
    let mut total = 0.0;
    for k in 0..=dim {
        let xk = x.grade_part(k)?;
        let yk = y.grade_part(k)?;
        if xk.is_zero() || yk.is_zero() {
            continue;
        }
        let xt = from_blades(&xk, k)?;
        let yt = from_blades(&yk, k)?;
        let len = dim.pow(k as u32);
        let mut upper = vec![0usize; k];
        let mut lower = vec![0usize; k];
        let mut grade_sum = 0.0;
        for xoff in 0..len {
            let xv = xt.entries[xoff];
            if xv == 0.0 {
                continue;
            }
            decode(dim, xoff, &mut upper);
            // Lower every index of y through the metric.
            let mut lowered = 0.0;
            for yoff in 0..len {
                let yv = yt.entries[yoff];
                if yv == 0.0 {
                    continue;
                }
                decode(dim, yoff, &mut lower);
                let mut weight = yv;
                for r in 0..k {
                    weight *= metric.entry(upper[r], lower[r]);
                }
                lowered += weight;
            }
            grade_sum += xv * lowered;
        }
        total += grade_sum / factorial(k);
    }
    Ok(total)
}
