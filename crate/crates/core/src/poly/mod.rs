//! Exact polynomial algebra over the rationals.

pub(crate) mod bigcd;
mod dense;
pub(crate) mod resultant;
mod sparse;
mod text;
mod uni;
mod zbi;
mod zpoly;

use thiserror::Error;

pub use bigcd::{bivariate_common_factor, bivariate_gcd, squarefree_y};
pub use dense::DenseBiPoly;
pub use resultant::{bareiss_det, subresultants, sylvester_resultant, Axis, BareissRing};
pub use sparse::{SparseBiPoly, SparseUniPoly, DEFAULT_DENSIFY_BUDGET, MAX_EXPONENT};
pub use text::{format_terms, parse_terms};
pub use uni::UniPoly;
pub use zbi::ZBiPoly;
pub use zpoly::ZPoly;

pub(crate) use zpoly::SignOrdering;

/// Exact rational numbers: always reduced, positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("neither polynomial involves the eliminated variable")]
    BothConstantInAxis,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("operation requires a nonzero polynomial")]
    ZeroInput,
    #[error("exponent {exponent} exceeds the densification budget {budget}")]
    ExponentBudgetExceeded { exponent: u64, budget: u64 },
    #[error("exponent {0} exceeds 2^31-1")]
    ExponentTooLarge(u64),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Parses a decimal integer or `p/q` token.
pub fn parse_rational(tok: &str) -> Option<Rational> {
    let tok = tok.trim();
    let (n, d) = match tok.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (tok, "1"),
    };
    let n: num_bigint::BigInt = n.parse().ok()?;
    let d: num_bigint::BigInt = d.parse().ok()?;
    if num_traits::Zero::is_zero(&d) {
        return None;
    }
    Some(Rational::new(n, d))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
