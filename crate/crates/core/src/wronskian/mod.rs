//! Wronskians of the functions `x^a_j phi(x)^b_j` along a branch of `F = 0`.
//!
//! The `p`-th derivative of `x^a phi^b` equals
//! `x^(a-p) phi^(b-p) T_(j,p)(x, phi) / F_Y^(2p)`, so the Wronskian of the
//! first `s` functions factors as
//! `x^(A - C(s,2)) phi^(B - C(s,2)) T_s(x, phi) / F_Y^(s(s-1))`
//! with `T_s = det[T_(j,p)]` and `A`, `B` the exponent sums.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::implicit::{eval_phi_jet, implicit_numerator, power_derivative, CalculusError};
use crate::poly::{bareiss_det, DenseBiPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WronskianError {
    #[error("F_Y vanishes identically")]
    FYZero,
    #[error("the point does not lie on the curve")]
    NotOnCurve,
    #[error("F_Y vanishes at the point")]
    SingularFiber,
    #[error("expected {expected} zero counts, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid basis family: {0}")]
    InvalidFamily(&'static str),
    #[error("prefix length {s} outside 1..={t}")]
    PrefixOutOfRange { s: usize, t: usize },
    #[error("degree certificate failed: {0}")]
    CertificateViolated(&'static str),
    #[error("factored form has a negative power of a vanishing factor")]
    FactoredUndefined,
    #[error("direct and factored values differ")]
    Mismatch,
    #[error(transparent)]
    Calculus(#[from] CalculusError),
}

/// Exponent pairs `(a_j, b_j)` of the functions `x^a_j phi^b_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisFamily {
    pairs: Vec<(u32, u32)>,
}

impl BasisFamily {
    pub fn new(pairs: Vec<(u32, u32)>) -> Result<Self, WronskianError> {
        if pairs.is_empty() {
            return Err(WronskianError::InvalidFamily("empty"));
        }
        let distinct: HashSet<_> = pairs.iter().collect();
        if distinct.len() != pairs.len() {
            return Err(WronskianError::InvalidFamily("repeated pair"));
        }
        Ok(BasisFamily { pairs })
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    fn prefix(&self, s: usize) -> Result<&[(u32, u32)], WronskianError> {
        if s == 0 || s > self.pairs.len() {
            return Err(WronskianError::PrefixOutOfRange { s, t: self.pairs.len() });
        }
        Ok(&self.pairs[..s])
    }
}

/// `x^(A - C(s,2)) phi^(B - C(s,2)) T_s / F_Y^(s(s-1))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredWronskian {
    pub s: usize,
    pub x_exponent: i64,
    pub phi_exponent: i64,
    pub fy_power: u32,
    pub ts: DenseBiPoly,
}

impl FactoredWronskian {
    /// Value at a curve point with `F_Y(x, y) = fy`.
    pub fn eval(&self, x: &Rational, y: &Rational, fy: &Rational) -> Result<Rational, WronskianError> {
        let v = self.ts.eval(x, y);
        let mut out = v / num_traits::pow(fy.clone(), self.fy_power as usize);
        for (base, e) in [(x, self.x_exponent), (y, self.phi_exponent)] {
            if e >= 0 {
                out *= num_traits::pow(base.clone(), e as usize);
            } else if base.is_zero() {
                return Err(WronskianError::FactoredUndefined);
            } else {
                out /= num_traits::pow(base.clone(), (-e) as usize);
            }
        }
        Ok(out)
    }
}

/// Composed numerators `N_1, N_2, ...` of `phi^(l) = N_l / F_Y^(2l-1)`.
struct Numerators<'a> {
    f: &'a DenseBiPoly,
    fy: DenseBiPoly,
    n: Vec<DenseBiPoly>,
}

impl<'a> Numerators<'a> {
    fn new(f: &'a DenseBiPoly) -> Result<Self, WronskianError> {
        let fy = f.partial(0, 1);
        if fy.is_zero() {
            return Err(WronskianError::FYZero);
        }
        Ok(Numerators { f, fy, n: Vec::new() })
    }

    fn get(&mut self, l: usize) -> Result<&DenseBiPoly, WronskianError> {
        while self.n.len() < l {
            let k = self.n.len() + 1;
            self.n.push(implicit_numerator(self.f, k)?.composed);
        }
        Ok(&self.n[l - 1])
    }
}

fn falling(a: u32, k: usize) -> BigInt {
    (0..k).map(|i| BigInt::from(a as i64 - i as i64)).product()
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

fn build_tjp_with(
    nums: &mut Numerators<'_>,
    a: u32,
    b: u32,
    p: usize,
) -> Result<DenseBiPoly, WronskianError> {
    let mut out = DenseBiPoly::zero();
    let brat = Rational::from_integer(BigInt::from(b));
    for k in 0..=p {
        let outer = binomial(p, k) * falling(a, p - k);
        if outer.is_zero() {
            continue;
        }
        let expansion = power_derivative(k);
        for (beta, s) in &expansion.terms {
            let c = beta.eval(&brat) * Rational::from_integer(outer.clone());
            if c.is_zero() {
                continue;
            }
            let size = s.size() as usize;
            let mut term = DenseBiPoly::from_terms(&[(c, k, p - size)]);
            term = term.mul(&nums.fy.pow(2 * (p - k) + size));
            for (l0, &e) in s.parts().iter().enumerate() {
                if e > 0 {
                    let nl = nums.get(l0 + 1)?.pow(e as usize);
                    term = term.mul(&nl);
                }
            }
            out = out.add(&term);
        }
    }
    Ok(out)
}

/// `T_(j,p)` for the function `x^a phi^b`; `T_(j,0) = 1`.
pub fn build_tjp(f: &DenseBiPoly, a: u32, b: u32, p: usize) -> Result<DenseBiPoly, WronskianError> {
    let mut nums = Numerators::new(f)?;
    let t = build_tjp_with(&mut nums, a, b, p)?;
    let d = f.degree().unwrap_or(0);
    let cap = 2 * d * p + p;
    if t.deg_x().unwrap_or(0) > cap || t.deg_y().unwrap_or(0) > cap {
        return Err(WronskianError::CertificateViolated("T_(j,p) degree"));
    }
    Ok(t)
}

/// Factored Wronskian of the first `s` functions of the family.
pub fn build_ts(
    f: &DenseBiPoly,
    family: &BasisFamily,
    s: usize,
) -> Result<FactoredWronskian, WronskianError> {
    let pairs = family.prefix(s)?;
    let mut nums = Numerators::new(f)?;
    let mut rows = Vec::with_capacity(s);
    for &(a, b) in pairs {
        let mut row = Vec::with_capacity(s);
        for p in 0..s {
            row.push(build_tjp_with(&mut nums, a, b, p)?);
        }
        rows.push(row);
    }
    let ts = bareiss_det(rows);
    let c2 = (s * (s - 1) / 2) as i64;
    let d = f.degree().unwrap_or(0);
    let cap = (1 + 2 * d) * (s * (s - 1) / 2);
    if ts.deg_x().unwrap_or(0) > cap || ts.deg_y().unwrap_or(0) > cap {
        return Err(WronskianError::CertificateViolated("T_s degree"));
    }
    let sa: i64 = pairs.iter().map(|p| p.0 as i64).sum();
    let sb: i64 = pairs.iter().map(|p| p.1 as i64).sum();
    Ok(FactoredWronskian {
        s,
        x_exponent: sa - c2,
        phi_exponent: sb - c2,
        fy_power: (s * (s - 1)) as u32,
        ts,
    })
}

/// Truncated power series product, keeping terms below `n`.
fn series_mul(a: &[Rational], b: &[Rational], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn series_pow(a: &[Rational], e: u32, n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    out[0] = Rational::one();
    for _ in 0..e {
        out = series_mul(&out, a, n);
    }
    out
}

/// Wronskian of the first `s` functions computed as the determinant of their
/// derivatives, obtained by Taylor expansion of `x^a phi^b` around the point.
pub fn wronskian_direct(
    f: &DenseBiPoly,
    family: &BasisFamily,
    s: usize,
    x: &Rational,
    y: &Rational,
) -> Result<Rational, WronskianError> {
    let pairs = family.prefix(s)?;
    if f.partial(0, 1).is_zero() {
        return Err(WronskianError::FYZero);
    }
    let jet = if s > 1 {
        eval_phi_jet(f, s - 1, x, y).map_err(map_calc)?
    } else {
        if !f.eval(x, y).is_zero() {
            return Err(WronskianError::NotOnCurve);
        }
        Vec::new()
    };
    // Taylor coefficients of x and phi at the point
    let mut xs = vec![Rational::zero(); s];
    xs[0] = x.clone();
    if s > 1 {
        xs[1] = Rational::one();
    }
    let mut ps = vec![Rational::zero(); s];
    ps[0] = y.clone();
    let mut fact = Rational::one();
    for i in 1..s {
        fact *= Rational::from_integer(BigInt::from(i));
        ps[i] = &jet[i - 1] / &fact;
    }
    let mut rows = Vec::with_capacity(s);
    for &(a, b) in pairs {
        let g = series_mul(&series_pow(&xs, a, s), &series_pow(&ps, b, s), s);
        let mut row = Vec::with_capacity(s);
        let mut fact = Rational::one();
        for (p, c) in g.into_iter().enumerate() {
            if p > 0 {
                fact *= Rational::from_integer(BigInt::from(p));
            }
            row.push(c * &fact);
        }
        rows.push(row);
    }
    Ok(bareiss_det(rows))
}

fn map_calc(e: CalculusError) -> WronskianError {
    match e {
        CalculusError::NotOnCurve => WronskianError::NotOnCurve,
        CalculusError::SingularFiber => WronskianError::SingularFiber,
        other => WronskianError::Calculus(other),
    }
}

/// Wronskian value at a curve point. The direct determinant is returned; the
/// factored form is evaluated as well and must agree whenever it is defined.
pub fn wronskian_value(
    f: &DenseBiPoly,
    family: &BasisFamily,
    s: usize,
    x: &Rational,
    y: &Rational,
) -> Result<Rational, WronskianError> {
    if !f.eval(x, y).is_zero() {
        return Err(WronskianError::NotOnCurve);
    }
    let fy = f.partial(0, 1).eval(x, y);
    if fy.is_zero() {
        return Err(WronskianError::SingularFiber);
    }
    let direct = wronskian_direct(f, family, s, x, y)?;
    let fw = build_ts(f, family, s)?;
    match fw.eval(x, y, &fy) {
        Ok(v) if v != direct => Err(WronskianError::Mismatch),
        Ok(_) | Err(WronskianError::FactoredUndefined) => Ok(direct),
        Err(e) => Err(e),
    }
}

/// `t - 1 + Z(W_t) + Z(W_(t-1)) + 2 sum_(j <= t-2) Z(W_j)`; for `t = 1` the
/// function is its own Wronskian and the value is `Z(W_1)`.
pub fn theorem1_bound(t: usize, z: &[u64]) -> Result<u64, WronskianError> {
    if t == 0 || z.len() != t {
        return Err(WronskianError::LengthMismatch { expected: t, got: z.len() });
    }
    if t == 1 {
        return Ok(z[0]);
    }
    let inner: u64 = z[..t - 2].iter().sum();
    Ok(t as u64 - 1 + z[t - 1] + z[t - 2] + 2 * inner)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    fn dp(t: &[(i64, usize, usize)]) -> DenseBiPoly {
        DenseBiPoly::from_int_terms(t)
    }

    fn fam(p: &[(u32, u32)]) -> BasisFamily {
        BasisFamily::new(p.to_vec()).unwrap()
    }

    #[test]
    fn zeroth_entry_is_one() {
        let f = dp(&[(1, 0, 2), (1, 2, 0), (-1, 0, 0)]);
        assert_eq!(build_tjp(&f, 3, 2, 0).unwrap(), DenseBiPoly::constant(int(1)));
    }

    #[test]
    fn first_derivative_entries() {
        // F = Y - X, a = 0, b = 2: (x^2)' = x^(-1) phi T / F_Y^2 = T(x, x)
        let line = dp(&[(1, 0, 1), (-1, 1, 0)]);
        let t = build_tjp(&line, 0, 2, 1).unwrap();
        for x in [int(1), int(3), int(-2)] {
            assert_eq!(t.eval(&x, &x), int(2) * &x);
        }
        // F = Y - X^2, a = b = 1: T = Y + 2X^2 and (x * x^2)' = 3x^2
        let par = dp(&[(1, 0, 1), (-1, 2, 0)]);
        let t = build_tjp(&par, 1, 1, 1).unwrap();
        assert_eq!(t, dp(&[(1, 0, 1), (2, 2, 0)]));
        let x = int(2);
        let y = int(4);
        let value = t.eval(&x, &y); // x^0 phi^0 / F_Y^2 = 1
        assert_eq!(value, int(3) * &x * &x);
    }

    #[test]
    fn singleton_family_is_trivial() {
        let f = dp(&[(1, 0, 2), (1, 2, 0), (-1, 0, 0)]);
        let w = build_ts(&f, &fam(&[(4, 1)]), 1).unwrap();
        assert_eq!(w.ts, DenseBiPoly::constant(int(1)));
        assert_eq!((w.x_exponent, w.phi_exponent, w.fy_power), (4, 1, 0));
        let line = dp(&[(1, 0, 1), (-1, 1, 0)]);
        assert_eq!(wronskian_value(&line, &fam(&[(2, 0)]), 1, &int(3), &int(3)).unwrap(), int(9));
    }

    #[test]
    fn two_by_two_examples() {
        let par = dp(&[(1, 0, 1), (-1, 2, 0)]);
        let f2 = fam(&[(0, 1), (1, 0)]);
        let w = build_ts(&par, &f2, 2).unwrap();
        for x in [int(2), int(-3), int(5)] {
            let y = &x * &x;
            let fy = int(1);
            assert_eq!(w.eval(&x, &y, &fy).unwrap(), -(&x * &x));
        }
        assert_eq!(wronskian_value(&par, &f2, 2, &int(2), &int(4)).unwrap(), int(-4));
        let line = dp(&[(1, 0, 1), (-1, 1, 0)]);
        assert_eq!(wronskian_value(&line, &fam(&[(0, 1), (0, 2)]), 2, &int(1), &int(1)).unwrap(), int(1));
        for (m, n) in [(1u32, 2u32), (2, 5), (3, 1)] {
            let w = build_ts(&line, &fam(&[(0, m), (0, n)]), 2).unwrap();
            let x = int(3);
            let want = Rational::from_integer(BigInt::from(n as i64 - m as i64))
                * num_traits::pow(x.clone(), (m + n - 1) as usize);
            assert_eq!(w.eval(&x, &x, &int(1)).unwrap(), want);
        }
    }

    #[test]
    fn direct_and_factored_agree_on_the_circle_branches() {
        let f = dp(&[(25, 0, 2), (25, 2, 0), (-25, 0, 0)]);
        let family = fam(&[(0, 1), (2, 0), (1, 2), (0, 3)]);
        // (3/5, 4/5) on the upper branch, (3/5, -4/5) on the lower one
        let x = Rational::new(3.into(), 5.into());
        for y in [Rational::new(4.into(), 5.into()), Rational::new((-4).into(), 5.into())] {
            for s in 1..=4 {
                let fy = f.partial(0, 1).eval(&x, &y);
                let fw = build_ts(&f, &family, s).unwrap();
                let direct = wronskian_direct(&f, &family, s, &x, &y).unwrap();
                assert_eq!(fw.eval(&x, &y, &fy).unwrap(), direct, "s = {s}");
            }
        }
    }

    #[test]
    fn errors() {
        let vertical = dp(&[(1, 1, 0), (-1, 0, 0)]);
        assert_eq!(build_ts(&vertical, &fam(&[(1, 0)]), 1), Err(WronskianError::FYZero));
        let line = dp(&[(1, 0, 1), (-1, 1, 0)]);
        assert_eq!(
            wronskian_value(&line, &fam(&[(1, 0)]), 1, &int(1), &int(2)),
            Err(WronskianError::NotOnCurve)
        );
        let circle = dp(&[(1, 0, 2), (1, 2, 0), (-1, 0, 0)]);
        assert_eq!(
            wronskian_value(&circle, &fam(&[(1, 0)]), 1, &int(1), &int(0)),
            Err(WronskianError::SingularFiber)
        );
        assert!(BasisFamily::new(vec![(1, 1), (1, 1)]).is_err());
        assert!(matches!(
            build_ts(&line, &fam(&[(1, 0)]), 2),
            Err(WronskianError::PrefixOutOfRange { .. })
        ));
    }

    #[test]
    fn theorem1_values() {
        assert_eq!(theorem1_bound(2, &[0, 1]).unwrap(), 2);
        assert_eq!(theorem1_bound(3, &[0, 1, 1]).unwrap(), 4);
        assert_eq!(theorem1_bound(1, &[0]).unwrap(), 0);
        assert_eq!(theorem1_bound(4, &[1, 2, 0, 3]).unwrap(), 3 + 3 + 2 * 3);
        assert!(matches!(theorem1_bound(2, &[1]), Err(WronskianError::LengthMismatch { .. })));
    }
}
