//! Expression evaluation against a configured algebra.
//!
//! Scalar-product nodes produce a real number; it is re-wrapped as a
//! scalar multivector immediately, which is indistinguishable from keeping
//! a separate real type since every consumer (arithmetic, formatting)
//! treats a grade-0 multivector exactly like its coefficient.

use gacalc_core::{Algebra, MetricOperator, Multivector};

use crate::error::CliError;
use crate::parser::{BinaryOp, Node, NodeKind, UnaryOp};

/// Everything evaluation needs: the algebra of the requested metric, plus
/// the deformation operator when products should be routed through the
/// euclidean algebra (`--deform`).
pub struct Context {
    algebra: Algebra,
    deform: Option<MetricOperator>,
}

impl Context {
    pub fn new(algebra: Algebra, deform: Option<MetricOperator>) -> Self {
        Context { algebra, deform }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

pub fn evaluate(ctx: &Context, node: &Node) -> Result<Multivector, CliError> {
    let at = |source| CliError::Eval { offset: node.offset, source };
    match &node.kind {
        NodeKind::Number(x) => Multivector::scalar(ctx.dim(), *x).map_err(at),
        NodeKind::Basis(i) => Multivector::basis_vector(ctx.dim(), *i).map_err(at),
        NodeKind::Grade(inner, k) => evaluate(ctx, inner)?.grade_part(*k).map_err(at),
        NodeKind::Unary(op, inner) => {
            let x = evaluate(ctx, inner)?;
            Ok(match op {
                UnaryOp::Neg => x.neg(),
                UnaryOp::Reverse => x.reversion(),
            })
        }
        NodeKind::Binary(op, lhs, rhs) => {
            let x = evaluate(ctx, lhs)?;
            let y = evaluate(ctx, rhs)?;
            match op {
                BinaryOp::Add => x.add(&y).map_err(at),
                BinaryOp::Sub => x.sub(&y).map_err(at),
                BinaryOp::Wedge => x.wedge(&y).map_err(at),
                BinaryOp::ScalarProduct => {
                    let value = match &ctx.deform {
                        Some(op) => op.deformed_scalar_product(&x, &y),
                        None => ctx.algebra.scalar_product(&x, &y),
                    }
                    .map_err(at)?;
                    Multivector::scalar(ctx.dim(), value).map_err(at)
                }
                BinaryOp::LeftContract => match &ctx.deform {
                    Some(op) => op.deformed_left_contract(&x, &y),
                    None => ctx.algebra.left_contract(&x, &y),
                }
                .map_err(at),
                BinaryOp::RightContract => match &ctx.deform {
                    Some(op) => op.deformed_right_contract(&x, &y),
                    None => ctx.algebra.right_contract(&x, &y),
                }
                .map_err(at),
                // The geometric product is always computed directly in the
                // requested metric; the deformation machinery covers the
                // scalar product and contractions only.
                BinaryOp::Geometric => ctx.algebra.geometric_product(&x, &y).map_err(at),
            }
        }
    }
}
