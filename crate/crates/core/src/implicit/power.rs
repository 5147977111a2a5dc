//! Derivatives of `f^alpha` with `alpha` kept symbolic.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::partitions::PartitionSequence;
use crate::poly::{Rational, UniPoly};

/// `(f^alpha)^(p) = sum_s beta_(alpha,s) f^(alpha-|s|) prod_k (f^(k))^(s_k)`,
/// with each `beta` a polynomial in `alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerDerivativeExpansion {
    pub p: usize,
    pub terms: Vec<(UniPoly, PartitionSequence)>,
}

impl PowerDerivativeExpansion {
    /// `beta_(alpha,s)` as a polynomial in `alpha`; zero if `s` is absent.
    pub fn beta(&self, s: &PartitionSequence) -> UniPoly {
        self.terms
            .iter()
            .find(|(_, t)| t == s)
            .map(|(c, _)| c.clone())
            .unwrap_or_else(UniPoly::zero)
    }

    /// Value of the expansion given `alpha` and the values `f, f', ..., f^(p)`.
    pub fn evaluate(&self, alpha: &Rational, derivs: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (c, s) in &self.terms {
            let b = c.eval(alpha);
            if b.is_zero() {
                continue;
            }
            let e = alpha - Rational::from_integer(s.size().into());
            let mut t = b * pow_rational_exp(&derivs[0], &e);
            for (k, &m) in s.parts().iter().enumerate() {
                for _ in 0..m {
                    t *= &derivs[k + 1];
                }
            }
            acc += t;
        }
        acc
    }
}

/// `base^e` for integral `e`; panics on a fractional exponent.
fn pow_rational_exp(base: &Rational, e: &Rational) -> Rational {
    assert!(e.is_integer(), "fractional exponent");
    let n: i64 = num_traits::ToPrimitive::to_i64(&e.to_integer()).expect("small exponent");
    if n >= 0 {
        num_traits::pow(base.clone(), n as usize)
    } else {
        Rational::one() / num_traits::pow(base.clone(), (-n) as usize)
    }
}

/// Expansion of the `p`-th derivative of `f^alpha` by repeated product and
/// chain rule on the monomials.
pub fn power_derivative(p: usize) -> PowerDerivativeExpansion {
    let mut cur: BTreeMap<PartitionSequence, UniPoly> = BTreeMap::new();
    cur.insert(PartitionSequence::empty(), UniPoly::constant(Rational::one()));
    let alpha = UniPoly::x();
    for _ in 0..p {
        let mut next: BTreeMap<PartitionSequence, UniPoly> = BTreeMap::new();
        for (s, c) in &cur {
            // derivative of f^(alpha - |s|)
            let shift = UniPoly::constant(Rational::from_integer(s.size().into()));
            let c1 = c.mul(&alpha.sub(&shift));
            add_term(&mut next, s.bumped(1, 1), c1);
            // derivative of each (f^(k))^(s_k)
            for (k0, &m) in s.parts().iter().enumerate() {
                if m == 0 {
                    continue;
                }
                let k = k0 + 1;
                let ck = c.scale(&Rational::from_integer(m.into()));
                add_term(&mut next, s.bumped(k, -1).bumped(k + 1, 1), ck);
            }
        }
        cur = next;
    }
    let mut terms: Vec<(UniPoly, PartitionSequence)> =
        cur.into_iter().filter(|(_, c)| !c.is_zero()).map(|(s, c)| (c, s)).collect();
    terms.sort_by(|a, b| b.1.cmp(&a.1));
    PowerDerivativeExpansion { p, terms }
}

fn add_term(map: &mut BTreeMap<PartitionSequence, UniPoly>, s: PartitionSequence, c: UniPoly) {
    let e = map.entry(s).or_insert_with(UniPoly::zero);
    *e = e.add(&c);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    #[test]
    fn first_and_second_derivatives() {
        let e1 = power_derivative(1);
        assert_eq!(e1.terms, vec![(UniPoly::x(), PartitionSequence::new(vec![1]))]);
        let e2 = power_derivative(2);
        assert_eq!(e2.terms.len(), 2);
        assert_eq!(e2.beta(&PartitionSequence::new(vec![0, 1])), UniPoly::x());
        assert_eq!(
            e2.beta(&PartitionSequence::new(vec![2])),
            UniPoly::from_i64(&[0, -1, 1])
        );
    }

    #[test]
    fn third_derivative_top_term_is_alpha() {
        let e3 = power_derivative(3);
        assert_eq!(e3.beta(&PartitionSequence::new(vec![0, 0, 1])), UniPoly::x());
        // 3 alpha (alpha - 1) for f' f''
        assert_eq!(
            e3.beta(&PartitionSequence::new(vec![1, 1])),
            UniPoly::from_i64(&[0, -3, 3])
        );
    }

    #[test]
    fn terms_index_exactly_the_partition_set() {
        for p in 1..=7 {
            let e = power_derivative(p);
            let mut got: Vec<_> = e.terms.iter().map(|(_, s)| s.clone()).collect();
            let mut want = super::super::partitions::enumerate_partitions(p);
            got.sort();
            want.sort();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn evaluates_like_chain_rule() {
        // f = x^2 + 1 at x = 2: f = 5, f' = 4, f'' = 2; (f^3)'' = 6 f f'^2 + 3 f^2 f''
        let e = power_derivative(2);
        let v = e.evaluate(&int(3), &[int(5), int(4), int(2)]);
        assert_eq!(v, int(6 * 5 * 16 + 3 * 25 * 2));
    }
}
