//! Error type shared by every kernel operation.

/// Everything that can go wrong inside the kernel.
///
/// Variants are grouped by how callers typically react: argument errors
/// (dimensions, grades, indices), metric construction errors, and internal
/// invariant failures that indicate a bug rather than bad input.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Requested dimension lies outside the supported range.
    #[error("dimension {dim} outside supported range 1..={max}")]
    DimensionOutOfRange { dim: usize, max: usize },
    /// Two operands live in spaces of different dimension.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    /// A grade argument lies outside `0..=dim`.
    #[error("grade {grade} out of range for dimension {dim}")]
    GradeOutOfRange { grade: usize, dim: usize },
    /// A basis index lies outside `1..=dim`.
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    /// A repeated basis index names a degenerate blade.
    #[error("repeated basis index {index} names a degenerate blade")]
    RepeatedIndex { index: usize },
    /// An operation that needs a homogeneous input got mixed grades.
    #[error("expected a homogeneous multivector of grade {expected}")]
    MixedGrade { expected: usize },
    /// A metric matrix is not symmetric.
    #[error("metric matrix is not symmetric")]
    AsymmetricMetric,
    /// A metric matrix is numerically singular.
    #[error("metric matrix is numerically singular")]
    DegenerateMetric,
    /// The euclidean side of a deformation must be positive definite.
    #[error("euclidean metric is not positive definite")]
    NotPositiveDefinite,
    /// A dense tensor failed an antisymmetry check.
    #[error("tensor is not antisymmetric (max deviation {deviation:e})")]
    NotAntisymmetric { deviation: f64 },
    /// Paired index lists must have equal length.
    #[error("index lists of unequal length: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    /// A tensor shape does not match the declared dimension and rank.
    #[error("entry buffer of length {len} does not match dim {dim} rank {rank}")]
    ShapeMismatch { len: usize, dim: usize, rank: usize },
    /// A tensor rank exceeds what the dense reference model enumerates.
    #[error("tensor rank {rank} exceeds supported cap {max}")]
    RankOutOfRange { rank: usize, max: usize },
    /// A supplied set of frame vectors is linearly dependent.
    #[error("basis vectors are linearly dependent")]
    SingularBasis,
    /// A computed result violated a structural invariant; indicates a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors that indicate a kernel bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
