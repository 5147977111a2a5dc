//! Univariate polynomials over `Q(xi)` for a real algebraic `xi`, stored as
//! `ZBiPoly` whose `X`-coefficients are reduced modulo the defining
//! polynomial of `xi`. All rescalings are by positive factors common to the
//! whole polynomial, so roots and signs in `Y` are preserved.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::One;

use super::algebraic::RealAlgebraic;
use crate::poly::{Rational, ZBiPoly, ZPoly};

fn reduce_coeffs(alpha: &RealAlgebraic, coeffs: &[ZPoly]) -> Vec<ZPoly> {
    let m = alpha.defining_poly();
    let dm = m.deg0();
    let lc = m.lc();
    let es: Vec<usize> = coeffs
        .iter()
        .map(|c| if c.is_zero() { 0 } else { (c.deg0() + 1).saturating_sub(dm) })
        .collect();
    let emax = es.iter().copied().max().unwrap_or(0);
    let mut out: Vec<ZPoly> = coeffs
        .iter()
        .zip(&es)
        .map(|(c, &e)| {
            let r = if e == 0 { c.clone() } else { c.prem(m) };
            if emax > e {
                r.scale(&lc.pow((emax - e) as u32))
            } else {
                r
            }
        })
        .collect();
    let mut g = BigInt::from(0);
    for c in &out {
        g = num_integer::Integer::gcd(&g, &c.content());
    }
    if g > BigInt::one() {
        for c in out.iter_mut() {
            *c = c.div_scalar_exact(&g);
        }
    }
    out
}

/// Reduces and drops leading coefficients that vanish at `alpha`.
pub fn normalize_fiber(alpha: &mut RealAlgebraic, f: &ZBiPoly) -> ZBiPoly {
    let mut c = reduce_coeffs(alpha, f.coeffs());
    while let Some(top) = c.last() {
        if alpha.sign_of(top) == Ordering::Equal {
            c.pop();
        } else {
            break;
        }
    }
    // coefficients below the top may still vanish at alpha; that is harmless
    ZBiPoly::new(c)
}

/// True if every coefficient vanishes at `alpha`.
pub fn fiber_is_zero(alpha: &mut RealAlgebraic, f: &ZBiPoly) -> bool {
    normalize_fiber(alpha, f).is_zero()
}

/// Gcd of `f(alpha, Y)` and `g(alpha, Y)` up to a nonzero factor.
pub fn fiber_gcd(alpha: &mut RealAlgebraic, f: &ZBiPoly, g: &ZBiPoly) -> ZBiPoly {
    let mut a = normalize_fiber(alpha, f);
    let mut b = normalize_fiber(alpha, g);
    if a.deg_y() < b.deg_y() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        if b.is_zero() {
            return a;
        }
        if b.deg_y() == Some(0) {
            return b;
        }
        let r = normalize_fiber(alpha, &a.prem(&b));
        a = b;
        b = r;
    }
}

/// Sign of `f(alpha, y)` for rational `y`.
pub fn fiber_sign_at(alpha: &mut RealAlgebraic, f: &ZBiPoly, y: &Rational) -> Ordering {
    let v = f.eval_y(y);
    alpha.sign_of(&v)
}

/// Number of distinct real roots of `f(alpha, Y)`; `None` if it vanishes
/// identically.
pub fn fiber_count_real_roots(alpha: &mut RealAlgebraic, f: &ZBiPoly) -> Option<usize> {
    let p0 = normalize_fiber(alpha, f);
    if p0.is_zero() {
        return None;
    }
    if p0.deg_y() == Some(0) {
        return Some(0);
    }
    if let Some(r) = alpha.rational().cloned() {
        // coefficients are constants now: plain Sturm over the integers
        let z = p0.eval_x(&r);
        return Some(super::sturm::SturmChain::new(&z).count(None, None));
    }
    let mut chain_lc: Vec<(Ordering, usize)> = Vec::new();
    let s0 = alpha.sign_of(&p0.lc_y());
    chain_lc.push((s0, p0.deg_y().unwrap()));
    let mut a = p0.clone();
    let mut b = normalize_fiber(alpha, &p0.derivative_y());
    while !b.is_zero() {
        let sb = alpha.sign_of(&b.lc_y());
        chain_lc.push((sb, b.deg_y().unwrap()));
        if b.deg_y() == Some(0) {
            break;
        }
        let k = a.deg_y().unwrap() + 1 - b.deg_y().unwrap();
        let r = a.prem(&b);
        // prem = lc(b)^k * rem; next = -rem
        let negate = !(sb == Ordering::Less && k % 2 == 1);
        let r = if negate { r.neg() } else { r };
        let r = normalize_fiber(alpha, &r);
        a = b;
        b = r;
    }
    let var = |signs: Vec<Ordering>| {
        let mut last = Ordering::Equal;
        let mut v = 0usize;
        for s in signs {
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                v += 1;
            }
            last = s;
        }
        v
    };
    let pos: Vec<Ordering> = chain_lc.iter().map(|(s, _)| *s).collect();
    let neg: Vec<Ordering> = chain_lc
        .iter()
        .map(|(s, d)| if d % 2 == 1 { s.reverse() } else { *s })
        .collect();
    Some(var(neg).saturating_sub(var(pos)))
}

/// Number of distinct real roots of `f(alpha, Y)` that are also roots of
/// `g(alpha, Y)`. `None` when both vanish identically.
pub fn fiber_common_real_roots(
    alpha: &mut RealAlgebraic,
    f: &ZBiPoly,
    g: &ZBiPoly,
) -> Option<usize> {
    let h = fiber_gcd(alpha, f, g);
    if h.is_zero() {
        return None;
    }
    fiber_count_real_roots(alpha, &h)
}
