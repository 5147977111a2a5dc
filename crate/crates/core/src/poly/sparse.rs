//! Sparse polynomials whose exponents may be far too large to densify.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{DenseBiPoly, PolyError, Rational, SignOrdering, UniPoly};

pub const MAX_EXPONENT: u64 = (1 << 31) - 1;
pub const DEFAULT_DENSIFY_BUDGET: u64 = 64;

/// `sum a_j X^alpha_j Y^beta_j` with distinct exponent pairs and nonzero
/// coefficients, kept sorted by `(alpha, beta)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SparseBiPoly {
    terms: Vec<(Rational, u32, u32)>,
}

impl SparseBiPoly {
    /// Merges repeated exponent pairs and drops zero coefficients.
    pub fn new(terms: Vec<(Rational, u64, u64)>) -> Result<Self, PolyError> {
        let mut v: Vec<(Rational, u32, u32)> = Vec::with_capacity(terms.len());
        for (c, a, b) in terms {
            for e in [a, b] {
                if e > MAX_EXPONENT {
                    return Err(PolyError::ExponentTooLarge(e));
                }
            }
            v.push((c, a as u32, b as u32));
        }
        v.sort_by_key(|x| (x.1, x.2));
        let mut out: Vec<(Rational, u32, u32)> = Vec::with_capacity(v.len());
        for (c, a, b) in v {
            match out.last_mut() {
                Some(last) if last.1 == a && last.2 == b => last.0 += c,
                _ => out.push((c, a, b)),
            }
        }
        out.retain(|t| !t.0.is_zero());
        Ok(SparseBiPoly { terms: out })
    }

    pub fn from_int_terms(terms: &[(i64, u64, u64)]) -> Result<Self, PolyError> {
        Self::new(
            terms
                .iter()
                .map(|&(c, a, b)| (Rational::from_integer(c.into()), a, b))
                .collect(),
        )
    }

    pub fn from_dense(p: &DenseBiPoly) -> Self {
        Self::new(p.terms().into_iter().map(|(c, i, j)| (c, i as u64, j as u64)).collect())
            .expect("dense exponents are small")
    }

    pub fn terms(&self) -> &[(Rational, u32, u32)] {
        &self.terms
    }

    /// Number of monomials.
    pub fn t(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> Vec<(u64, u64)> {
        self.terms.iter().map(|t| (t.1 as u64, t.2 as u64)).collect()
    }

    pub fn max_exponent(&self) -> u64 {
        self.terms
            .iter()
            .map(|t| t.1.max(t.2) as u64)
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.1 as u64 + t.2 as u64).max()
    }

    /// Exact value; powers by repeated squaring.
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (c, a, b) in &self.terms {
            acc += c * pow_rat(x, *a as u64) * pow_rat(y, *b as u64);
        }
        acc
    }

    /// Mixed partial; stays sparse.
    pub fn partial(&self, a: u32, b: u32) -> Self {
        let mut out = Vec::new();
        for (c, al, be) in &self.terms {
            if *al < a || *be < b {
                continue;
            }
            let k = falling(*al as u64, a as u64) * falling(*be as u64, b as u64);
            out.push((c * Rational::from_integer(k), (al - a) as u64, (be - b) as u64));
        }
        Self::new(out).expect("exponents only decrease")
    }

    pub fn densify(&self, budget: u64) -> Result<DenseBiPoly, PolyError> {
        let m = self.max_exponent();
        if m > budget {
            return Err(PolyError::ExponentBudgetExceeded { exponent: m, budget });
        }
        Ok(DenseBiPoly::from_terms(
            &self
                .terms
                .iter()
                .map(|(c, a, b)| (c.clone(), *a as usize, *b as usize))
                .collect::<Vec<_>>(),
        ))
    }

    /// `P(X, 0)`.
    pub fn restrict_y0(&self) -> SparseUniPoly {
        SparseUniPoly::new(
            self.terms
                .iter()
                .filter(|t| t.2 == 0)
                .map(|(c, a, _)| (c.clone(), *a as u64))
                .collect(),
        )
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut v: Vec<(Rational, u64, u64)> = self
            .terms
            .iter()
            .map(|(c, a, b)| (c.clone(), *a as u64, *b as u64))
            .collect();
        v.extend(o.terms.iter().map(|(c, a, b)| (c.clone(), *a as u64, *b as u64)));
        Self::new(v).expect("exponents already validated")
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(
            self.terms
                .iter()
                .map(|(c, a, b)| (c * k, *a as u64, *b as u64))
                .collect(),
        )
        .expect("exponents already validated")
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-Rational::one()))
    }
}

impl fmt::Display for SparseBiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, a, b)| format!("({c})*X^{a}*Y^{b}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Sparse univariate polynomial `sum c_k X^e_k`, sorted by exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SparseUniPoly {
    terms: Vec<(Rational, u64)>,
}

impl SparseUniPoly {
    pub fn new(mut terms: Vec<(Rational, u64)>) -> Self {
        terms.sort_by_key(|t| t.1);
        let mut out: Vec<(Rational, u64)> = Vec::with_capacity(terms.len());
        for (c, e) in terms {
            match out.last_mut() {
                Some(last) if last.1 == e => last.0 += c,
                _ => out.push((c, e)),
            }
        }
        out.retain(|t| !t.0.is_zero());
        SparseUniPoly { terms: out }
    }

    pub fn from_int_terms(terms: &[(i64, u64)]) -> Self {
        Self::new(
            terms
                .iter()
                .map(|&(c, e)| (Rational::from_integer(c.into()), e))
                .collect(),
        )
    }

    pub fn from_uni(p: &UniPoly) -> Self {
        Self::new(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (c.clone(), i as u64))
                .collect(),
        )
    }

    pub fn terms(&self) -> &[(Rational, u64)] {
        &self.terms
    }

    pub fn t(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sign changes in the coefficient sequence ordered by exponent.
    pub fn sign_variations(&self) -> usize {
        self.terms
            .windows(2)
            .filter(|w| w[0].0.is_negative() != w[1].0.is_negative())
            .count()
    }

    /// `X^m Q(X^g)` with `m` the least exponent and `g` the gcd of the
    /// exponent gaps; returns `(m, g, Q)` where `Q` is given sparsely in `u`.
    pub fn deflate(&self) -> Option<(u64, u64, SparseUniPoly)> {
        let m = self.terms.first()?.1;
        let mut g = 0u64;
        for t in &self.terms {
            g = g.gcd(&(t.1 - m));
        }
        let g = g.max(1);
        let q = SparseUniPoly {
            terms: self.terms.iter().map(|(c, e)| (c.clone(), (e - m) / g)).collect(),
        };
        Some((m, g, q))
    }

    pub fn degree(&self) -> Option<u64> {
        self.terms.last().map(|t| t.1)
    }

    pub fn to_uni(&self) -> Option<UniPoly> {
        let d = self.degree()?;
        let d = usize::try_from(d).ok()?;
        let mut c = vec![Rational::zero(); d + 1];
        for (a, e) in &self.terms {
            c[*e as usize] = a.clone();
        }
        Some(UniPoly::new(c))
    }

    /// Exact value; only sensible when `|x|^e` stays small.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(c, e)| c * pow_rat(x, *e))
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Sign at `x`, certified either by exact evaluation (when the bit size of
    /// `x^e` stays under `bit_budget`) or by one monomial dominating the sum
    /// of the others in absolute value. `None` when neither certifies.
    pub fn sign_at(&self, x: &Rational, bit_budget: u64) -> Option<Ordering> {
        if self.terms.is_empty() {
            return Some(Ordering::Equal);
        }
        if x.is_zero() {
            let c0 = self.terms.iter().find(|t| t.1 == 0);
            return Some(c0.map_or(Ordering::Equal, |t| t.0.sign_ordering()));
        }
        if x.abs().is_one() {
            let neg = x.is_negative();
            let v = self.terms.iter().fold(Rational::zero(), |acc, (c, e)| {
                if neg && e % 2 == 1 {
                    acc - c
                } else {
                    acc + c
                }
            });
            return Some(v.sign_ordering());
        }
        let bits = (x.numer().bits() + x.denom().bits()) * self.degree().unwrap_or(0);
        if bits <= bit_budget {
            return Some(self.eval(x).sign_ordering());
        }
        let lx = log2_abs(x);
        let logs: Vec<f64> = self
            .terms
            .iter()
            .map(|(c, e)| log2_abs(c) + lx * (*e as f64))
            .collect();
        let (imax, &lmax) = logs
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.partial_cmp(b.1).unwrap_or(Ordering::Equal))?;
        // others are bounded by (t-1) * 2^second; require a margin of 4 bits
        let second = logs
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != imax)
            .map(|(_, l)| *l)
            .fold(f64::NEG_INFINITY, f64::max);
        let slack = ((self.terms.len() as f64).log2()).ceil() + 4.0;
        if lmax - second < slack || !lmax.is_finite() {
            return None;
        }
        let (c, e) = &self.terms[imax];
        let mut s = c.sign_ordering();
        if x.is_negative() && e % 2 == 1 {
            s = s.reverse();
        }
        Some(s)
    }

    /// Exact count of distinct real roots, when the deflated polynomial is
    /// small enough to handle densely (or has at most two terms).
    pub fn count_real_roots(&self, budget: u64) -> Result<usize, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroInput);
        }
        let (m, g, q) = self.deflate().unwrap();
        let zero_root = usize::from(m > 0);
        if q.t() == 1 {
            return Ok(zero_root);
        }
        if q.t() == 2 {
            // c0 + c1 u^k = 0 with u = x^g
            let (c0, _) = &q.terms[0];
            let (c1, k) = &q.terms[1];
            let ratio_neg = c0.is_negative() != c1.is_negative();
            let e = g * k;
            let n = if e % 2 == 1 {
                1
            } else if ratio_neg {
                2
            } else {
                0
            };
            return Ok(zero_root + n);
        }
        let qd = q.degree().unwrap();
        if qd > budget {
            return Err(PolyError::ExponentBudgetExceeded { exponent: qd, budget });
        }
        let qu = q.to_uni().unwrap();
        let roots = crate::roots::isolate_roots(&qu).map_err(|_| PolyError::ZeroInput)?;
        let mut n = 0usize;
        for r in roots {
            let s = r.sign_relative_to_zero(&qu);
            n += match (g % 2 == 1, s) {
                (true, _) => 1,
                (false, Ordering::Greater) => 2,
                (false, _) => 0,
            };
        }
        Ok(zero_root + n)
    }
}

fn log2_abs(r: &Rational) -> f64 {
    let n = r.numer().abs();
    let d = r.denom();
    big_log2(&n) - big_log2(d)
}

fn big_log2(n: &BigInt) -> f64 {
    let bits = n.bits();
    if bits < 1000 {
        return n.to_f64().unwrap_or(f64::INFINITY).log2();
    }
    let shift = bits - 64;
    let top: BigInt = n >> shift;
    top.to_f64().unwrap().log2() + shift as f64
}

pub(crate) fn pow_rat(x: &Rational, e: u64) -> Rational {
    if e == 0 {
        return Rational::one();
    }
    let n = num_traits::pow::pow(x.numer().clone(), e as usize);
    let d = num_traits::pow::pow(x.denom().clone(), e as usize);
    Rational::new_raw(n, d)
}

fn falling(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, m| acc * BigInt::from(n - m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    #[test]
    fn sparse_eval_uses_exact_powers() {
        let p = SparseBiPoly::from_int_terms(&[(3, 5, 2)]).unwrap();
        assert_eq!(p.eval(&int(2), &int(1)), int(96));
        let q = SparseBiPoly::from_int_terms(&[(1, 1000, 0), (-1, 0, 0)]).unwrap();
        assert_eq!(q.eval(&int(1), &rat(5, 7)), int(0));
    }

    #[test]
    fn merging_and_validation() {
        let p = SparseBiPoly::from_int_terms(&[(1, 1, 0), (-1, 1, 0), (2, 0, 3)]).unwrap();
        assert_eq!(p.t(), 1);
        assert!(SparseBiPoly::from_int_terms(&[(1, 1 << 31, 0)]).is_err());
        assert!(SparseBiPoly::from_int_terms(&[(1, MAX_EXPONENT, 0)]).is_ok());
    }

    #[test]
    fn densify_respects_budget() {
        let p = SparseBiPoly::from_int_terms(&[(1, 100, 0)]).unwrap();
        assert_eq!(
            p.densify(64),
            Err(PolyError::ExponentBudgetExceeded { exponent: 100, budget: 64 })
        );
        assert!(p.densify(100).is_ok());
    }

    #[test]
    fn sparse_partial_stays_sparse() {
        let p = SparseBiPoly::from_int_terms(&[(1, 1_000_000, 2), (5, 0, 1)]).unwrap();
        let d = p.partial(1, 1);
        assert_eq!(d.terms(), &[(int(2_000_000), 999_999, 1)]);
    }

    #[test]
    fn descartes_variations() {
        assert_eq!(SparseUniPoly::from_int_terms(&[(-1, 0), (1, 2)]).sign_variations(), 1);
        assert_eq!(
            SparseUniPoly::from_int_terms(&[(1, 0), (-1, 2), (1, 3)]).sign_variations(),
            2
        );
        assert_eq!(SparseUniPoly::from_int_terms(&[(1, 0), (1, 2)]).sign_variations(), 0);
    }

    #[test]
    fn binomial_root_counts() {
        let p = SparseUniPoly::from_int_terms(&[(-1, 0), (1, 2_000_000_000)]);
        assert_eq!(p.count_real_roots(64).unwrap(), 2);
        let p = SparseUniPoly::from_int_terms(&[(1, 0), (1, 2_000_000_001)]);
        assert_eq!(p.count_real_roots(64).unwrap(), 1);
        let p = SparseUniPoly::from_int_terms(&[(1, 3), (1, 2_000_000_003)]);
        assert_eq!(p.count_real_roots(64).unwrap(), 1);
        let p = SparseUniPoly::from_int_terms(&[(2, 7)]);
        assert_eq!(p.count_real_roots(64).unwrap(), 1);
    }

    #[test]
    fn deflated_trinomial_counts() {
        // x^(2k) - 3x^k + 2 with k huge and even: u^2 - 3u + 2 has roots 1, 2
        let k = 1_000_000u64;
        let p = SparseUniPoly::from_int_terms(&[(2, 0), (-3, k), (1, 2 * k)]);
        assert_eq!(p.count_real_roots(64).unwrap(), 4);
    }

    #[test]
    fn dominance_signs() {
        let p = SparseUniPoly::from_int_terms(&[(-5, 0), (1, 1_000_000)]);
        assert_eq!(p.sign_at(&int(2), 4096), Some(Ordering::Greater));
        assert_eq!(p.sign_at(&rat(1, 2), 4096), Some(Ordering::Less));
        assert_eq!(p.sign_at(&int(-2), 4096), Some(Ordering::Greater));
        assert_eq!(p.sign_at(&int(1), 4096), Some(Ordering::Less));
    }
}
