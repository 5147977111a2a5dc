//! Derivatives of powers `f^alpha` and of implicit branches `y = phi(x)`.

mod formal;
mod numerator;
mod partitions;
mod power;

pub use formal::{FormalPoly, Monomial, Var};
pub use numerator::{
    eval_phi_derivative, eval_phi_jet, formal_numerator, identity_residual, implicit_numerator,
    phi_jet_unchecked, quotient_rule_step, recursion_state, ImplicitDerivative, DEFAULT_MAX_ORDER,
};
pub use partitions::{enumerate_partitions, PartitionSequence};
pub use power::{power_derivative, PowerDerivativeExpansion};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CalculusError {
    #[error("the point does not lie on the curve")]
    NotOnCurve,
    #[error("F_Y vanishes at the point")]
    SingularFiber,
    #[error("derivative order must be at least 1")]
    ZeroOrder,
    #[error("derivative order {k} exceeds the cap {max}")]
    OrderTooLarge { k: usize, max: usize },
    #[error("the curve polynomial is zero")]
    ZeroPolynomial,
    #[error("degree certificate failed: {0}")]
    CertificateViolated(&'static str),
}
