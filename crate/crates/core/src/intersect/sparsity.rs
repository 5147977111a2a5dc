use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{CurveSystem, IntersectError};
use crate::poly::{
    DenseBiPoly, PolyError, Rational, SparseBiPoly, UniPoly, ZBiPoly, ZPoly,
    DEFAULT_DENSIFY_BUDGET,
};

fn monomial(a: usize, b: usize) -> ZBiPoly {
    let mut c = vec![ZPoly::zero(); b + 1];
    c[b] = ZPoly::monomial(BigInt::one(), a);
    ZBiPoly::new(c)
}

/// A nonzero `c` with `sum c_j X^alpha_j Y^beta_j` a multiple of `F`, scaled
/// so that its first nonzero entry is 1; `None` if the monomials are
/// independent modulo `F`.
///
/// Write `F = c(X) P(X, Y)` with `P` primitive in `Y`. Divisibility by `P` is
/// a linear condition on the pseudo-remainders of the monomials (all scaled
/// to the same power of `lc_Y(P)`), divisibility by `c` a condition on the
/// remainders of the `X`-powers in each `Y`-degree.
pub fn support_dependence(
    f: &DenseBiPoly,
    support: &[(u64, u64)],
) -> Result<Option<Vec<Rational>>, IntersectError> {
    support_dependence_with(f, support, DEFAULT_DENSIFY_BUDGET)
}

pub(crate) fn support_dependence_with(
    f: &DenseBiPoly,
    support: &[(u64, u64)],
    budget: u64,
) -> Result<Option<Vec<Rational>>, IntersectError> {
    if f.is_zero() {
        return Err(IntersectError::ZeroF);
    }
    for &(a, b) in support {
        let e = a.max(b);
        if e > budget {
            return Err(PolyError::ExponentBudgetExceeded { exponent: e, budget }.into());
        }
    }
    let n = support.len();
    if n == 0 {
        return Ok(None);
    }
    let fz = f.to_zbi();
    let content = fz.content_x();
    let p = fz.primitive_y();
    // rows keyed by (kind, y-degree, x-degree)
    let mut rows: BTreeMap<(u8, usize, usize), Vec<Rational>> = BTreeMap::new();
    let dp = p.deg_y().unwrap_or(0);
    if dp >= 1 {
        let lc = p.lc_y();
        let es: Vec<usize> = support
            .iter()
            .map(|&(_, b)| if b as usize >= dp { b as usize - dp + 1 } else { 0 })
            .collect();
        let emax = *es.iter().max().unwrap();
        for (j, &(a, b)) in support.iter().enumerate() {
            let m = monomial(a as usize, b as usize);
            let r = if es[j] > 0 { m.prem(&p) } else { m };
            let r = r.mul_x(&lc.pow(emax - es[j]));
            for (k, cx) in r.coeffs().iter().enumerate() {
                for (i, v) in cx.coeffs().iter().enumerate() {
                    if !v.is_zero() {
                        rows.entry((0, k, i)).or_insert_with(|| vec![Rational::zero(); n])[j] =
                            Rational::from_integer(v.clone());
                    }
                }
            }
        }
    }
    if content.degree().unwrap_or(0) >= 1 {
        let cu = UniPoly::from_zpoly(&content);
        for (j, &(a, b)) in support.iter().enumerate() {
            let mut xa = vec![Rational::zero(); a as usize + 1];
            xa[a as usize] = Rational::one();
            let (_, r) = UniPoly::new(xa).divrem(&cu);
            for (i, v) in r.coeffs().iter().enumerate() {
                if !v.is_zero() {
                    rows.entry((1, b as usize, i)).or_insert_with(|| vec![Rational::zero(); n])[j] =
                        v.clone();
                }
            }
        }
    }
    Ok(kernel_vector(rows.into_values().collect(), n))
}

/// First kernel vector of the reduced row echelon form, or `None`.
fn kernel_vector(mut m: Vec<Vec<Rational>>, n: usize) -> Option<Vec<Rational>> {
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for v in m[row].iter_mut() {
            *v *= &inv;
        }
        let pivot = m[row].clone();
        for (r, line) in m.iter_mut().enumerate() {
            if r != row && !line[col].is_zero() {
                let k = line[col].clone();
                for (v, p) in line.iter_mut().zip(&pivot) {
                    *v -= &k * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    let free = (0..n).find(|c| !pivots.contains(c))?;
    let mut c = vec![Rational::zero(); n];
    c[free] = Rational::one();
    for (r, &pc) in pivots.iter().enumerate() {
        c[pc] = -m[r][free].clone();
    }
    let first = c.iter().find(|v| !v.is_zero()).unwrap().clone();
    Some(c.into_iter().map(|v| v / &first).collect())
}

/// `G - (a_u / c_u) H` for the dependence `H = sum c_j m_j` over the support
/// of `G`, with `u` the last index where `c_u != 0`. Same real solutions as
/// `sys`, one monomial fewer.
pub fn reduce_sparsity(sys: &CurveSystem) -> Result<CurveSystem, IntersectError> {
    reduce_sparsity_with(sys, DEFAULT_DENSIFY_BUDGET)
}

pub(crate) fn reduce_sparsity_with(
    sys: &CurveSystem,
    budget: u64,
) -> Result<CurveSystem, IntersectError> {
    let support = sys.g.support();
    let c = support_dependence_with(&sys.f, &support, budget)?.ok_or(IntersectError::NoDependence)?;
    let u = (0..c.len()).rev().find(|&j| !c[j].is_zero()).expect("kernel vector is nonzero");
    let k = &sys.g.terms()[u].0 / &c[u];
    let h = SparseBiPoly::new(
        support
            .iter()
            .zip(&c)
            .map(|(&(a, b), cj)| (cj * &k, a, b))
            .collect(),
    )?;
    Ok(CurveSystem { f: sys.f.clone(), g: sys.g.sub(&h) })
}
