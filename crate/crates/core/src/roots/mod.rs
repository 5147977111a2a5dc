//! Real root counting and isolation.

mod algebraic;
mod descartes;
mod fiber;
mod isolate;
mod sturm;

use thiserror::Error;

pub use algebraic::RealAlgebraic;
pub use descartes::{descartes_positive_bound, sparse_real_bound, DescartesInput};
pub use fiber::{
    fiber_common_real_roots, fiber_count_real_roots, fiber_gcd, fiber_is_zero, fiber_sign_at,
    normalize_fiber,
};
pub use isolate::{count_roots_in, isolate_roots, refine, IntervalKind, IsolatingInterval};
pub use sturm::SturmChain;

pub(crate) use isolate::{isolate_z, refine_z};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("operation requires a nonzero polynomial")]
    ZeroInput,
    #[error("interval does not isolate a root of the polynomial")]
    NotIsolating,
}

/// Isolated real roots of an integer polynomial as algebraic numbers.
pub fn real_roots_z(p: &crate::poly::ZPoly) -> Vec<RealAlgebraic> {
    let z = p.squarefree();
    isolate_z(&z)
        .iter()
        .map(|iv| RealAlgebraic::from_isolating(&z, iv))
        .collect()
}
