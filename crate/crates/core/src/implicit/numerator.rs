//! Numerators `S_k` with `phi^(k) = S_k / F_Y^(2k-1)` for a branch `y = phi(x)`
//! of `F(x, y) = 0`.
//!
//! Differentiating `F(x, phi(x)) = 0` k times gives
//! `D_k = phi^(k) F_Y + R_k = 0`, with `R_1 = F_X` and
//! `R_(k+1) = phi^(k) (F_XY + F_YY phi') + d/dx R_k`.
//! `R_k` involves only `phi', ..., phi^(k-1)`, so substituting the earlier
//! quotients and clearing `F_Y^(2k-2)` yields `S_k = -F_Y^(2k-2) R_k[...]`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::formal::{FormalPoly, Var};
use super::CalculusError;
use crate::poly::{DenseBiPoly, Rational};

pub const DEFAULT_MAX_ORDER: usize = 12;

/// `r[k-1] = R_k`, `s[k-1] = S_k`.
#[derive(Default)]
struct Table {
    r: Vec<FormalPoly>,
    s: Vec<FormalPoly>,
}

fn table() -> &'static Mutex<Table> {
    static T: OnceLock<Mutex<Table>> = OnceLock::new();
    T.get_or_init(|| Mutex::new(Table::default()))
}

fn fy() -> FormalPoly {
    FormalPoly::var(Var::Partial(0, 1))
}

/// Replaces every `phi^(i)` by `S_i / F_Y^(2i-1)` and multiplies by `F_Y^clear`.
fn clear_phi(r: &FormalPoly, s: &[FormalPoly], clear: u32) -> FormalPoly {
    let mut out = FormalPoly::zero();
    for (m, c) in r.terms() {
        let mut t = FormalPoly::constant(c.clone());
        let mut used = 0u32;
        for &(v, e) in m {
            match v {
                Var::Phi(i) => {
                    t = t.mul(&s[i as usize - 1].pow(e));
                    used += e * (2 * i - 1);
                }
                Var::Partial(..) => t = t.mul(&FormalPoly::var(v).pow(e)),
            }
        }
        assert!(used <= clear, "negative power of F_Y");
        out = out.add(&t.mul(&fy().pow(clear - used)));
    }
    out
}

fn extend_to(tab: &mut Table, k: usize) {
    if tab.r.is_empty() {
        let fx = FormalPoly::var(Var::Partial(1, 0));
        tab.s.push(fx.neg());
        tab.r.push(fx);
    }
    while tab.r.len() < k {
        let j = tab.r.len() as u32;
        let inner = FormalPoly::var(Var::Partial(1, 1)).add(
            &FormalPoly::var(Var::Partial(0, 2)).mul(&FormalPoly::var(Var::Phi(1))),
        );
        let next = FormalPoly::var(Var::Phi(j))
            .mul(&inner)
            .add(&tab.r[j as usize - 1].total_derivative());
        let s_next = clear_phi(&next, &tab.s, 2 * j).neg();
        tab.r.push(next);
        tab.s.push(s_next);
    }
}

fn check_order(k: usize) -> Result<(), CalculusError> {
    if k == 0 {
        return Err(CalculusError::ZeroOrder);
    }
    if k > DEFAULT_MAX_ORDER {
        return Err(CalculusError::OrderTooLarge { k, max: DEFAULT_MAX_ORDER });
    }
    Ok(())
}

/// Formal `S_k` in the symbols `F_(X^a Y^b)`.
pub fn formal_numerator(k: usize) -> Result<FormalPoly, CalculusError> {
    check_order(k)?;
    let mut tab = table().lock().unwrap_or_else(|e| e.into_inner());
    extend_to(&mut tab, k);
    Ok(tab.s[k - 1].clone())
}

/// Formal `R_k` in the symbols `phi^(i)` (`i < k`) and `F_(X^a Y^b)`.
pub fn recursion_state(k: usize) -> Result<FormalPoly, CalculusError> {
    check_order(k)?;
    let mut tab = table().lock().unwrap_or_else(|e| e.into_inner());
    extend_to(&mut tab, k);
    Ok(tab.r[k - 1].clone())
}

#[derive(Clone, Debug)]
pub struct ImplicitDerivative {
    pub k: usize,
    pub formal: FormalPoly,
    pub denominator_exponent: u32,
    /// `S_k` with the partials of `F` substituted.
    pub composed: DenseBiPoly,
    /// Degree of `formal` in the partial symbols.
    pub formal_degree: u32,
    /// Total degree of `composed`; `None` if it vanishes.
    pub composed_degree: Option<usize>,
}

fn compose(f: &DenseBiPoly, formal: &FormalPoly) -> DenseBiPoly {
    let mut cache: HashMap<(u32, u32), DenseBiPoly> = HashMap::new();
    formal.substitute(
        |v, e| match v {
            Var::Partial(a, b) => cache
                .entry((a, b))
                .or_insert_with(|| f.partial(a as usize, b as usize))
                .pow(e as usize),
            Var::Phi(_) => unreachable!("numerators are free of phi"),
        },
        |c| DenseBiPoly::constant(Rational::from_integer(c.clone())),
        |a, b| a.mul(b),
        |a, b| a.add(b),
        DenseBiPoly::zero(),
    )
}

/// `S_k` for `F`, formal and composed, with both degree certificates checked.
pub fn implicit_numerator(f: &DenseBiPoly, k: usize) -> Result<ImplicitDerivative, CalculusError> {
    if f.is_zero() {
        return Err(CalculusError::ZeroPolynomial);
    }
    let formal = formal_numerator(k)?;
    let formal_degree = formal.degree_in_partials();
    let e = 2 * k as u32 - 1;
    if formal_degree > e {
        return Err(CalculusError::CertificateViolated("formal degree"));
    }
    let composed = compose(f, &formal);
    let composed_degree = composed.degree();
    let d = f.degree().unwrap_or(0);
    if composed_degree.is_some_and(|c| c > e as usize * d) {
        return Err(CalculusError::CertificateViolated("composed degree"));
    }
    Ok(ImplicitDerivative {
        k,
        formal,
        denominator_exponent: e,
        composed,
        formal_degree,
        composed_degree,
    })
}

/// Values of the partials `F_(X^a Y^b)` at a point, computed on demand.
struct PartialValues<'a> {
    f: &'a DenseBiPoly,
    x: &'a Rational,
    y: &'a Rational,
    cache: HashMap<(u32, u32), Rational>,
}

impl<'a> PartialValues<'a> {
    fn new(f: &'a DenseBiPoly, x: &'a Rational, y: &'a Rational) -> Self {
        PartialValues { f, x, y, cache: HashMap::new() }
    }

    fn get(&mut self, a: u32, b: u32) -> Rational {
        let (f, x, y) = (self.f, self.x, self.y);
        self.cache
            .entry((a, b))
            .or_insert_with(|| f.partial(a as usize, b as usize).eval(x, y))
            .clone()
    }

    /// Evaluates a formal polynomial, reading `phi^(i)` from `phi[i-1]`.
    fn eval(&mut self, p: &FormalPoly, phi: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in p.terms() {
            let mut t = Rational::from_integer(c.clone());
            for &(v, e) in m {
                let b = match v {
                    Var::Partial(a, b) => self.get(a, b),
                    Var::Phi(i) => phi[i as usize - 1].clone(),
                };
                t *= num_traits::pow(b, e as usize);
            }
            acc += t;
        }
        acc
    }
}

/// `phi', ..., phi^(k)` from the formula at `(x, y)`, without checking that
/// the point lies on the curve. Useful at rational points close to a branch.
pub fn phi_jet_unchecked(
    f: &DenseBiPoly,
    k: usize,
    x: &Rational,
    y: &Rational,
) -> Result<Vec<Rational>, CalculusError> {
    check_order(k)?;
    let mut pv = PartialValues::new(f, x, y);
    let fy = pv.get(0, 1);
    if fy.is_zero() {
        return Err(CalculusError::SingularFiber);
    }
    let mut out = Vec::with_capacity(k);
    let mut den = Rational::one();
    for j in 1..=k {
        let s = formal_numerator(j)?;
        if j == 1 {
            den = fy.clone();
        } else {
            den *= &fy * &fy;
        }
        out.push(pv.eval(&s, &[]) / &den);
    }
    Ok(out)
}

/// Exact `phi', ..., phi^(k)` at a point of the curve.
pub fn eval_phi_jet(
    f: &DenseBiPoly,
    k: usize,
    x: &Rational,
    y: &Rational,
) -> Result<Vec<Rational>, CalculusError> {
    if f.is_zero() {
        return Err(CalculusError::ZeroPolynomial);
    }
    if !f.eval(x, y).is_zero() {
        return Err(CalculusError::NotOnCurve);
    }
    phi_jet_unchecked(f, k, x, y)
}

/// Exact `phi^(k)(x)` for the branch through `(x, y)`.
pub fn eval_phi_derivative(
    f: &DenseBiPoly,
    k: usize,
    x: &Rational,
    y: &Rational,
) -> Result<Rational, CalculusError> {
    Ok(eval_phi_jet(f, k, x, y)?.pop().expect("k >= 1"))
}

/// Residual `phi^(k) F_Y + R_k` of the differentiated identity, with the
/// supplied derivative values `phi[i-1] = phi^(i)` for `i <= k`.
pub fn identity_residual(
    f: &DenseBiPoly,
    k: usize,
    x: &Rational,
    y: &Rational,
    phi: &[Rational],
) -> Result<Rational, CalculusError> {
    let r = recursion_state(k)?;
    let mut pv = PartialValues::new(f, x, y);
    let fy = pv.get(0, 1);
    Ok(&phi[k - 1] * fy + pv.eval(&r, phi))
}

/// Quotient-rule step: if `phi^(k) = n / F_Y^(2k-1)` then
/// `phi^(k+1) = [F_Y (F_Y n_X - F_X n_Y) - (2k-1) n (F_Y F_XY - F_X F_YY)] / F_Y^(2k+1)`.
pub fn quotient_rule_step(f: &DenseBiPoly, n: &DenseBiPoly, k: usize) -> DenseBiPoly {
    let fx = f.partial(1, 0);
    let fy = f.partial(0, 1);
    let fxy = f.partial(1, 1);
    let fyy = f.partial(0, 2);
    let first = fy.mul(&fy.mul(&n.partial(1, 0)).sub(&fx.mul(&n.partial(0, 1))));
    let second = n
        .mul(&fy.mul(&fxy).sub(&fx.mul(&fyy)))
        .scale(&Rational::from_integer(BigInt::from(2 * k as i64 - 1)));
    first.sub(&second)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    fn dp(t: &[(i64, usize, usize)]) -> DenseBiPoly {
        DenseBiPoly::from_int_terms(t)
    }

    #[test]
    fn first_numerator_is_minus_fx() {
        let s1 = formal_numerator(1).unwrap();
        assert_eq!(s1, FormalPoly::var(Var::Partial(1, 0)).neg());
        let f = dp(&[(1, 0, 2), (1, 2, 0), (-1, 0, 0)]);
        let d = implicit_numerator(&f, 1).unwrap();
        assert_eq!(d.denominator_exponent, 1);
        assert_eq!(d.composed, dp(&[(-2, 1, 0)]));
    }

    #[test]
    fn second_numerator_has_the_classical_shape() {
        // S_2 = -(F_XX F_Y^2 - 2 F_XY F_X F_Y + F_YY F_X^2)
        let s2 = formal_numerator(2).unwrap();
        let v = |a, b| FormalPoly::var(Var::Partial(a, b));
        let want = v(2, 0)
            .mul(&v(0, 1).pow(2))
            .add(&v(1, 1).mul(&v(1, 0)).mul(&v(0, 1)).scale(&BigInt::from(-2)))
            .add(&v(0, 2).mul(&v(1, 0).pow(2)))
            .neg();
        assert_eq!(s2, want);
    }

    #[test]
    fn known_values() {
        let circle = dp(&[(1, 0, 2), (1, 2, 0), (-1, 0, 0)]);
        assert_eq!(eval_phi_derivative(&circle, 2, &int(0), &int(1)).unwrap(), int(-1));
        assert_eq!(eval_phi_derivative(&circle, 1, &int(0), &int(1)).unwrap(), int(0));
        let cubic = dp(&[(1, 0, 1), (-1, 3, 0)]);
        assert_eq!(eval_phi_derivative(&cubic, 2, &int(1), &int(1)).unwrap(), int(6));
        assert_eq!(eval_phi_derivative(&cubic, 3, &int(1), &int(1)).unwrap(), int(6));
        assert_eq!(eval_phi_derivative(&cubic, 4, &int(1), &int(1)).unwrap(), int(0));
        let parabola = dp(&[(1, 0, 1), (-1, 2, 0)]);
        assert_eq!(eval_phi_derivative(&parabola, 1, &int(1), &int(1)).unwrap(), int(2));
        let hyper = dp(&[(1, 1, 1), (-1, 0, 0)]);
        assert_eq!(eval_phi_derivative(&hyper, 2, &int(1), &int(1)).unwrap(), int(2));
        // 1/x has k-th derivative (-1)^k k! / x^(k+1)
        assert_eq!(eval_phi_derivative(&hyper, 4, &int(2), &rat(1, 2)).unwrap(), rat(24, 32));
    }

    #[test]
    fn errors_off_curve_and_on_singular_fibers() {
        let circle = dp(&[(1, 0, 2), (1, 2, 0), (-1, 0, 0)]);
        assert!(matches!(
            eval_phi_derivative(&circle, 1, &int(0), &int(2)),
            Err(CalculusError::NotOnCurve)
        ));
        assert!(matches!(
            eval_phi_derivative(&circle, 1, &int(1), &int(0)),
            Err(CalculusError::SingularFiber)
        ));
        assert!(matches!(formal_numerator(13), Err(CalculusError::OrderTooLarge { .. })));
        assert!(matches!(formal_numerator(0), Err(CalculusError::ZeroOrder)));
    }

    #[test]
    fn composed_numerators_match_the_quotient_rule() {
        let curves = [
            dp(&[(1, 0, 2), (1, 2, 0), (-1, 0, 0)]),
            dp(&[(1, 0, 3), (-3, 0, 1), (-1, 1, 0)]),
            dp(&[(2, 3, 1), (-1, 1, 2), (1, 0, 3), (5, 2, 0), (-3, 0, 0)]),
        ];
        for f in &curves {
            let mut n = implicit_numerator(f, 1).unwrap().composed;
            for k in 1..5 {
                n = quotient_rule_step(f, &n, k);
                let s = implicit_numerator(f, k + 1).unwrap();
                assert_eq!(s.composed, n, "k = {}", k + 1);
            }
        }
    }

    #[test]
    fn formal_degrees_and_variables() {
        for k in 1..=6 {
            let s = formal_numerator(k).unwrap();
            assert!(s.degree_in_partials() < 2 * k as u32);
            assert_eq!(s.max_phi_order(), 0);
            for (a, b) in s.partial_vars() {
                assert!(a + b >= 1 && a + b <= k as u32);
            }
        }
    }

    #[test]
    fn differentiated_identity_vanishes() {
        let f = dp(&[(1, 0, 3), (-3, 0, 1), (-1, 1, 0)]);
        let (x, y) = (int(2), int(2)); // 8 - 6 - 2 = 0
        let jet = eval_phi_jet(&f, 5, &x, &y).unwrap();
        for k in 1..=5 {
            assert!(identity_residual(&f, k, &x, &y, &jet).unwrap().is_zero());
        }
    }
}
