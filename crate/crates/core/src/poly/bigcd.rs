use num_traits::Signed;

use super::resultant::res_y;
use super::{DenseBiPoly, ZBiPoly};

/// Gcd in `Z[X][Y]` via the primitive remainder sequence. The result has a
/// positive leading coefficient; `gcd(0, 0) = 0`.
pub(crate) fn zgcd(a: &ZBiPoly, b: &ZBiPoly) -> ZBiPoly {
    if a.is_zero() {
        return normalize(b);
    }
    if b.is_zero() {
        return normalize(a);
    }
    let ca = a.content_x().scale(&a.int_content());
    let cb = b.content_x().scale(&b.int_content());
    let c = ca.gcd_with(&cb, true);
    let (mut p, mut q) = (a.primitive_y(), b.primitive_y());
    if p.deg_y() < q.deg_y() {
        std::mem::swap(&mut p, &mut q);
    }
    let g = loop {
        if q.deg_y() == Some(0) {
            break ZBiPoly::one();
        }
        let r = p.prem(&q);
        if r.is_zero() {
            break q.primitive_y();
        }
        p = q;
        q = r.primitive_y();
    };
    normalize(&g.mul_x(&c))
}

fn normalize(p: &ZBiPoly) -> ZBiPoly {
    if p.lc_y().lc().is_negative() {
        p.neg()
    } else {
        p.clone()
    }
}

/// Primitive, `Y`-squarefree part of the `Y`-primitive part of `f`.
pub(crate) fn zsquarefree_y(f: &ZBiPoly) -> ZBiPoly {
    let p = f.primitive_y();
    if p.deg_y().unwrap_or(0) == 0 {
        return normalize(&p);
    }
    let g = zgcd(&p, &p.derivative_y());
    if g.deg_y() == Some(0) {
        return normalize(&p);
    }
    normalize(&p.exact_div(&g).expect("gcd divides").primitive_y())
}

pub(crate) fn zcommon_factor(f: &ZBiPoly, g: &ZBiPoly) -> bool {
    if f.is_zero() || g.is_zero() {
        return true;
    }
    let cf = f.content_x();
    let cg = g.content_x();
    if cf.gcd(&cg).degree().unwrap_or(0) > 0 {
        return true;
    }
    if f.deg_y().unwrap_or(0) == 0 || g.deg_y().unwrap_or(0) == 0 {
        return false;
    }
    res_y(f, g).is_zero()
}

/// Greatest common divisor over the rationals, scaled to a primitive integer
/// polynomial with positive leading coefficient.
pub fn bivariate_gcd(f: &DenseBiPoly, g: &DenseBiPoly) -> DenseBiPoly {
    DenseBiPoly::from_zbi(&zgcd(&f.to_zbi(), &g.to_zbi()).int_primitive())
}

/// Squarefree part in `Y` of the `Y`-primitive part of `f` (the factor
/// depending on `X` alone is dropped).
pub fn squarefree_y(f: &DenseBiPoly) -> DenseBiPoly {
    DenseBiPoly::from_zbi(&zsquarefree_y(&f.to_zbi()))
}

/// True iff `f` and `g` share a factor of positive degree. A common factor in
/// `X` alone shows up in the `X`-contents; any other factor forces
/// `Res_Y(f, g)` to vanish identically.
pub fn bivariate_common_factor(f: &DenseBiPoly, g: &DenseBiPoly) -> bool {
    zcommon_factor(&f.to_zbi(), &g.to_zbi())
}
