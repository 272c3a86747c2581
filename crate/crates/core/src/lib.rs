//! Graded multivector kernel over real vector spaces of dimension `1..=12`.
//!
//! The crate is organised around a sparse [`Multivector`] representation
//! (canonical basis blades mapped to coefficients) and a metric context
//! [`Algebra`] that carries a symmetric non-degenerate [`MetricTensor`]
//! together with its reciprocal basis.  On top of those sit:
//!
//! * [`exterior`] — the wedge product on the graded representation,
//! * [`oracle`] — a deliberately naive dense-tensor model of the same
//!   operations (small dimensions only), used as an independent reference,
//! * [`metric`] — scalar products of blades via Gram determinants, plus
//!   covariant/contravariant component extraction,
//! * [`contraction`] — reversion and the left/right contractions,
//! * [`clifford`] — the geometric product and its memoised blade table,
//! * [`deformation`] — the metric operator that rewrites products in a
//!   general metric as euclidean products of deformed arguments.

pub mod blade;
pub mod clifford;
pub mod contraction;
pub mod deformation;
pub mod error;
pub mod exterior;
mod linalg;
pub mod metric;
pub mod multivector;
pub mod oracle;

pub use blade::{all_blades, blade_count, grade_count, BladeIndex, GradeIndexSet};
pub use clifford::CayleyTable;
pub use deformation::{LinearMap, MetricOperator};
pub use error::Error;
pub use metric::{Algebra, ComponentTable, MetricTensor};
pub use multivector::Multivector;
pub use oracle::{AntisymmetricTensor, Tensor};

/// Largest supported vector-space dimension.
pub const MAX_DIM: usize = 12;

/// Convenience alias for kernel results.
pub type Result<T> = std::result::Result<T, Error>;
