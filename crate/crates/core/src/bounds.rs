//! Closed-form bounds on the number of real solutions, in exact arithmetic.
//!
//! Integer bounds are `BigInt`; bounds with fractional terms are `Rational`
//! and are rounded up only once, at the end.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::poly::Rational;

/// Certified upper value for `e^2` (`e^2 = 7.389...`).
pub fn e_squared_upper() -> Rational {
    Rational::new(BigInt::from(739), BigInt::from(100))
}

fn big(n: u64) -> BigInt {
    BigInt::from(n)
}

fn binom2(n: u64) -> BigInt {
    big(n) * big(n.saturating_sub(1)) / 2
}

fn pow(b: u64, e: &BigInt) -> BigInt {
    let e: u32 = e.try_into().expect("exponent fits in u32");
    num_traits::pow(big(b), e as usize)
}

fn ceil(r: &Rational) -> BigInt {
    r.ceil().to_integer()
}

/// `2^C(l+n, 2) (n+1)^(l+n)` for `n` equations with `l+n+1` monomials.
pub fn khovanskii(l: u64, n: u64) -> BigInt {
    pow(2, &binom2(l + n)) * pow(n + 1, &big(l + n))
}

/// Parameters `(l, n)` for a system of one dense degree-`d` polynomial and
/// one `t`-sparse polynomial in two variables: the dense polynomial
/// contributes up to `C(d+2, 2)` monomials and `l = monomials - n - 1`.
pub fn khovanskii_params(d: u64, t: u64) -> (u64, u64) {
    let dense: u64 = (d + 2) * (d + 1) / 2;
    ((dense + t).saturating_sub(3), 2)
}

/// `(e^2 + 3)/4 * 2^C(l, 2) * n^l` with `e^2` replaced by its upper value.
pub fn bihan_sottile(l: u64, n: u64) -> Rational {
    let c = (e_squared_upper() + Rational::from_integer(big(3))) / Rational::from_integer(big(4));
    c * Rational::from_integer(pow(2, &binom2(l)) * pow(n, &big(l)))
}

/// `2^t - 2`, for a trinomial `F`.
pub fn lrw_trinomial(t: u64) -> BigInt {
    pow(2, &big(t)) - 2
}

/// `6t - 4`, for a linear `F`.
pub fn avendano(t: u64) -> BigInt {
    big(6 * t) - 4
}

/// `n + n^2 + ... + n^(t-1)`.
pub fn lrw_general(n: u64, t: u64) -> BigInt {
    (1..t).map(|k| pow(n, &big(k))).sum()
}

/// Product of the degrees.
pub fn bezout(degrees: &[u64]) -> BigInt {
    degrees.iter().map(|&d| big(d)).product()
}

/// `d (2d - 1)^(n-1)`.
pub fn optm(d: u64, n: u64) -> BigInt {
    big(d) * pow(2 * d - 1, &big(n.saturating_sub(1)))
}

/// `d^2/4 + d delta`.
pub fn real_bezout(d: u64, delta: u64) -> Rational {
    Rational::new(big(d * d), big(4)) + Rational::from_integer(big(d) * big(delta))
}

/// `d^2`: a polynomial of degree `d` has either infinitely many real zeros
/// or at most this many.
pub fn zero_f_bound(d: u64) -> BigInt {
    big(d) * big(d)
}

/// Exact solutions off the interval set: `2d^3 - d^2`.
pub fn off_interval_bound(d: u64) -> BigInt {
    big(2) * pow(d, &big(3)) - big(d * d)
}

/// Number of open intervals cut out by the critical abscissae: `2d^2 - d + 1`.
pub fn interval_count_bound(d: u64) -> BigInt {
    big(2 * d * d) - big(d) + 1
}

/// Upper bound on the zeros of `T_s` along one branch family:
/// `d^2/4 + 2d (1 + 2d) C(s, 2)`.
pub fn ts_zero_bound(d: u64, s: u64) -> Rational {
    Rational::new(big(d * d), big(4))
        + Rational::from_integer(big(2 * d) * big(1 + 2 * d) * binom2(s))
}

/// Exact value, before rounding, of
/// `(2d^2-d+1) d (t-1) + 2dt + 2td^2 + 2 sum_s [d^2/4 + 2(1+2d) C(s,2) d]`
/// plus the off-interval term `2d^3 - d^2`.
pub fn paper_bound_irreducible_exact(d: u64, t: u64) -> Rational {
    let on = interval_count_bound(d) * big(d) * big(t.saturating_sub(1))
        + big(2 * d * t)
        + big(2 * t) * big(d * d);
    let mut sum = Rational::zero();
    for s in 1..=t {
        sum += ts_zero_bound(d, s);
    }
    Rational::from_integer(on + off_interval_bound(d)) + sum * Rational::from_integer(big(2))
}

/// Ceiling of [`paper_bound_irreducible_exact`].
pub fn paper_bound_irreducible(d: u64, t: u64) -> BigInt {
    ceil(&paper_bound_irreducible_exact(d, t))
}

/// Bound for arbitrary (possibly reducible) `F` of degree `d`: the
/// irreducible bound plus `ceil(d^2/4)` isolated points.
pub fn paper_bound_general(d: u64, t: u64) -> BigInt {
    paper_bound_irreducible(d, t) + Integer::div_ceil(&big(d * d), &big(4))
}

/// Leading terms `2d^3 t + 4 d^2 t^3`.
pub fn leading_terms(d: u64, t: u64) -> BigInt {
    big(2) * pow(d, &big(3)) * big(t) + big(4) * big(d * d) * pow(t, &big(3))
}

/// Bound on connected components of an infinite solution set: `d (2d - 1)`.
pub fn component_bound(d: u64) -> BigInt {
    optm(d, 2)
}

/// Every bound evaluated for one `(d, t)` system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundTable {
    pub d: u64,
    pub t: u64,
    /// Degree of the sparse polynomial, when known and small.
    pub g_degree: Option<u64>,
    pub khovanskii_params: (u64, u64),
    pub khovanskii: BigInt,
    pub bihan_sottile: Rational,
    pub lrw_trinomial: BigInt,
    pub lrw_general: BigInt,
    pub avendano: BigInt,
    pub optm: BigInt,
    pub bezout: Option<BigInt>,
    pub real_bezout: Option<Rational>,
    pub paper_irreducible: BigInt,
    pub paper_general: BigInt,
}

impl BoundTable {
    pub fn new(d: u64, t: u64, g_degree: Option<u64>) -> Self {
        let (l, n) = khovanskii_params(d, t);
        BoundTable {
            d,
            t,
            g_degree,
            khovanskii_params: (l, n),
            khovanskii: khovanskii(l, n),
            bihan_sottile: bihan_sottile(l, n),
            lrw_trinomial: lrw_trinomial(t),
            lrw_general: lrw_general(2, t),
            avendano: avendano(t),
            optm: optm(d, 2),
            bezout: g_degree.map(|g| bezout(&[d, g])),
            real_bezout: g_degree.map(|g| real_bezout(d, g)),
            paper_irreducible: paper_bound_irreducible(d, t),
            paper_general: paper_bound_general(d, t),
        }
    }

    /// `(name, value)` pairs in a fixed order; rationals as `p/q`.
    pub fn entries(&self) -> Vec<(&'static str, String)> {
        let opt = |v: &Option<BigInt>| v.as_ref().map(|x| x.to_string()).unwrap_or_default();
        vec![
            ("khovanskii", self.khovanskii.to_string()),
            ("bihan_sottile", self.bihan_sottile.to_string()),
            ("lrw_trinomial", self.lrw_trinomial.to_string()),
            ("lrw_general", self.lrw_general.to_string()),
            ("avendano", self.avendano.to_string()),
            ("optm", self.optm.to_string()),
            ("bezout", opt(&self.bezout)),
            (
                "real_bezout",
                self.real_bezout.as_ref().map(|x| x.to_string()).unwrap_or_default(),
            ),
            ("paper_irreducible", self.paper_irreducible.to_string()),
            ("paper_general", self.paper_general.to_string()),
        ]
    }
}

impl Default for BoundTable {
    fn default() -> Self {
        Self::new(1, 1, None)
    }
}

/// `true` if `count <= bound`.
pub fn fits(count: u64, bound: &BigInt) -> bool {
    &big(count) <= bound
}
