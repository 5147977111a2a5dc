//! Counting the real solutions of `F(X, Y) = G(X, Y) = 0` for a dense `F`
//! and a sparse `G`.
//!
//! The line is cut at the real roots of `Res_Y(F, F_Y)`; over each open
//! interval between them the real zeros of `F` form `m_I` disjoint graphs
//! `phi_1 < ... < phi_m`. Solutions over the intervals are counted branch by
//! branch, and solutions over the cut points fiber by fiber.

mod count;
mod decompose;
mod generator;
mod sparsity;

use thiserror::Error;

use crate::poly::{DenseBiPoly, PolyError, SparseBiPoly};

pub use count::{
    count_solutions, count_solutions_with, oracle_count, oracle_count_with, CountReport,
    OracleCount, PipelineOptions, Route, Status,
};
pub use decompose::{
    decompose, trace_branch, zeros_on_branches, Branch, BranchZeroSet, CellInterval,
    Decomposition, Location,
};
pub use generator::{random_dense, random_sparse, random_system, random_system_in, GeneratorConfig};
pub use sparsity::{reduce_sparsity, support_dependence};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntersectError {
    #[error("F is identically zero; such systems encode two sparse equations and are not handled")]
    ZeroF,
    #[error("F is a nonzero constant")]
    ConstantF,
    #[error("F_Y vanishes identically")]
    FYIdenticallyZero,
    #[error("Res_Y(F, F_Y) vanishes identically; deflate F first")]
    ResultantZero,
    #[error("abscissa lies outside the branch interval")]
    OutsideInterval,
    #[error("branch index {index} outside 1..={m}")]
    BranchIndex { index: usize, m: usize },
    #[error("support is independent modulo F")]
    NoDependence,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `F = G = 0` with `F` dense of degree `d >= 1` and `G` sparse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSystem {
    pub f: DenseBiPoly,
    pub g: SparseBiPoly,
}

impl CurveSystem {
    pub fn new(f: DenseBiPoly, g: SparseBiPoly) -> Result<Self, IntersectError> {
        match f.degree() {
            None => Err(IntersectError::ZeroF),
            Some(0) => Err(IntersectError::ConstantF),
            Some(_) => Ok(CurveSystem { f, g }),
        }
    }

    pub fn d(&self) -> usize {
        self.f.degree().unwrap_or(0)
    }

    pub fn t(&self) -> usize {
        self.g.t()
    }
}

impl std::fmt::Display for CurveSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "F = {}; G = {}", self.f, self.g)
    }
}
