use super::RootError;
use crate::poly::{SparseUniPoly, UniPoly};

/// Either input shape accepted by the Descartes bound.
pub enum DescartesInput<'a> {
    Dense(&'a UniPoly),
    Sparse(&'a SparseUniPoly),
}

impl<'a> From<&'a UniPoly> for DescartesInput<'a> {
    fn from(p: &'a UniPoly) -> Self {
        DescartesInput::Dense(p)
    }
}

impl<'a> From<&'a SparseUniPoly> for DescartesInput<'a> {
    fn from(p: &'a SparseUniPoly) -> Self {
        DescartesInput::Sparse(p)
    }
}

/// Sign variations of the coefficient sequence; bounds the positive roots.
pub fn descartes_positive_bound<'a>(p: impl Into<DescartesInput<'a>>) -> Result<usize, RootError> {
    let s = match p.into() {
        DescartesInput::Dense(u) => SparseUniPoly::from_uni(u),
        DescartesInput::Sparse(s) => s.clone(),
    };
    if s.is_zero() {
        return Err(RootError::ZeroInput);
    }
    Ok(s.sign_variations())
}

/// Distinct real roots of a `t`-term univariate polynomial are at most `2t - 1`.
pub fn sparse_real_bound(t: usize) -> usize {
    (2 * t).saturating_sub(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descartes_examples() {
        assert_eq!(descartes_positive_bound(&UniPoly::from_i64(&[-1, 0, 1])), Ok(1));
        assert_eq!(descartes_positive_bound(&UniPoly::from_i64(&[1, 0, -1, 1])), Ok(2));
        assert_eq!(descartes_positive_bound(&UniPoly::from_i64(&[1, 0, 1])), Ok(0));
        assert_eq!(descartes_positive_bound(&UniPoly::zero()), Err(RootError::ZeroInput));
    }

    #[test]
    fn sparse_bound_examples() {
        assert_eq!(sparse_real_bound(1), 1);
        assert_eq!(sparse_real_bound(2), 3);
        assert_eq!(sparse_real_bound(5), 9);
    }
}
