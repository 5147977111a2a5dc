//! Sylvester resultants and subresultants by fraction-free elimination.

use num_traits::{One, Zero};

use super::{DenseBiPoly, PolyError, Rational, UniPoly, ZBiPoly, ZPoly};

/// Variable to eliminate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
}

/// An integral domain with exact division, enough for Bareiss elimination.
pub trait BareissRing: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / d`, where `d` is known to divide `self`.
    fn div_exact(&self, d: &Self) -> Self;
}

impl BareissRing for ZPoly {
    fn zero() -> Self {
        ZPoly::zero()
    }
    fn one() -> Self {
        ZPoly::one()
    }
    fn is_zero(&self) -> bool {
        ZPoly::is_zero(self)
    }
    fn mul(&self, o: &Self) -> Self {
        ZPoly::mul(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        ZPoly::sub(self, o)
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn div_exact(&self, d: &Self) -> Self {
        self.exact_div(d).expect("Bareiss division is exact")
    }
}

impl BareissRing for ZBiPoly {
    fn zero() -> Self {
        ZBiPoly::zero()
    }
    fn one() -> Self {
        ZBiPoly::one()
    }
    fn is_zero(&self) -> bool {
        ZBiPoly::is_zero(self)
    }
    fn mul(&self, o: &Self) -> Self {
        ZBiPoly::mul(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        ZBiPoly::sub(self, o)
    }
    fn neg(&self) -> Self {
        ZBiPoly::neg(self)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self.exact_div(d).expect("Bareiss division is exact")
    }
}

impl BareissRing for DenseBiPoly {
    fn zero() -> Self {
        DenseBiPoly::zero()
    }
    fn one() -> Self {
        DenseBiPoly::constant(<Rational as One>::one())
    }
    fn is_zero(&self) -> bool {
        DenseBiPoly::is_zero(self)
    }
    fn mul(&self, o: &Self) -> Self {
        DenseBiPoly::mul(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        DenseBiPoly::sub(self, o)
    }
    fn neg(&self) -> Self {
        DenseBiPoly::neg(self)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self.exact_div(d).expect("Bareiss division is exact")
    }
}

impl BareissRing for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

/// Determinant of a square matrix by Bareiss elimination with row pivoting.
pub fn bareiss_det<T: BareissRing>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    if n == 0 {
        return T::one();
    }
    let mut prev = T::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.div_exact(&prev);
            }
            m[i][k] = T::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

/// Rows `Y^(n-k-1) A, ..., A, Y^(m-k-1) B, ..., B` written over the columns
/// `Y^(m+n-k-1) .. Y^0`.
fn sylvester_rows(a: &[ZPoly], b: &[ZPoly], k: usize) -> Vec<Vec<ZPoly>> {
    let m = a.len() - 1;
    let n = b.len() - 1;
    let width = m + n - k;
    let mut rows = Vec::with_capacity(m + n - 2 * k);
    for (src, shifts) in [(a, n - k), (b, m - k)] {
        for s in (0..shifts).rev() {
            // row for Y^s * src; entry at column c holds coefficient of Y^(width-1-c)
            let mut row = vec![ZPoly::zero(); width];
            for (e, coef) in src.iter().enumerate() {
                let pow = e + s;
                row[width - 1 - pow] = coef.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// `Res_Y(A, B)` over `Z[X]`. Zero if either input is zero.
pub(crate) fn res_y(a: &ZBiPoly, b: &ZBiPoly) -> ZPoly {
    if a.is_zero() || b.is_zero() {
        return ZPoly::zero();
    }
    let (m, n) = (a.deg_y().unwrap(), b.deg_y().unwrap());
    if m == 0 && n == 0 {
        return ZPoly::one();
    }
    if m == 0 {
        return a.coeff(0).pow(n);
    }
    if n == 0 {
        return b.coeff(0).pow(m);
    }
    bareiss_det(sylvester_rows(a.coeffs(), b.coeffs(), 0))
}

/// Subresultant polynomials `S_0 .. S_(min(m,n)-1)` of `A` and `B` in `Y`,
/// with `S_0 = Res_Y(A, B)`. The principal coefficient `psc_k` is the
/// coefficient of `Y^k` in `S_k`.
pub(crate) fn subresultants_z(a: &ZBiPoly, b: &ZBiPoly) -> Vec<ZBiPoly> {
    let (m, n) = (a.deg_y().unwrap_or(0), b.deg_y().unwrap_or(0));
    let top = m.min(n);
    let mut out = Vec::with_capacity(top);
    for k in 0..top {
        let rows = sylvester_rows(a.coeffs(), b.coeffs(), k);
        let size = m + n - 2 * k;
        let width = m + n - k;
        let mut coeffs = vec![ZPoly::zero(); k + 1];
        for (j, slot) in coeffs.iter_mut().enumerate() {
            let col = width - 1 - j;
            let mat: Vec<Vec<ZPoly>> = rows
                .iter()
                .map(|r| {
                    let mut v: Vec<ZPoly> = r[..size - 1].to_vec();
                    v.push(r[col].clone());
                    v
                })
                .collect();
            *slot = bareiss_det(mat);
        }
        out.push(ZBiPoly::new(coeffs));
    }
    out
}

/// Principal subresultant coefficients `psc_0 .. psc_(min(m,n)-1)`.
#[cfg(test)]
pub(crate) fn psc_z(a: &ZBiPoly, b: &ZBiPoly) -> Vec<ZPoly> {
    let (m, n) = (a.deg_y().unwrap_or(0), b.deg_y().unwrap_or(0));
    let top = m.min(n);
    (0..top)
        .map(|k| {
            let rows = sylvester_rows(a.coeffs(), b.coeffs(), k);
            let size = m + n - 2 * k;
            bareiss_det(rows.into_iter().map(|r| r[..size].to_vec()).collect())
        })
        .collect()
}

/// Sylvester resultant eliminating `eliminate`, as a polynomial in the other
/// variable.
pub fn sylvester_resultant(
    a: &DenseBiPoly,
    b: &DenseBiPoly,
    eliminate: Axis,
) -> Result<UniPoly, PolyError> {
    let (la, za) = a.to_zbi_scaled();
    let (lb, zb) = b.to_zbi_scaled();
    let (za, zb) = match eliminate {
        Axis::Y => (za, zb),
        Axis::X => (za.swap(), zb.swap()),
    };
    if za.deg_y().unwrap_or(0) == 0 && zb.deg_y().unwrap_or(0) == 0 {
        return Err(PolyError::BothConstantInAxis);
    }
    let r = res_y(&za, &zb);
    // Res(la A, lb B) = la^n lb^m Res(A, B)
    let (m, n) = (za.deg_y().unwrap_or(0), zb.deg_y().unwrap_or(0));
    let scale = Rational::new(num_bigint::BigInt::one(), num_traits::pow(la, n) * num_traits::pow(lb, m));
    Ok(UniPoly::from_zpoly(&r).scale(&scale))
}

/// Subresultants `S_0 .. S_(min(m,n)-1)` in `Y`, as dense polynomials over the
/// integer multiples of the inputs.
pub fn subresultants(a: &DenseBiPoly, b: &DenseBiPoly) -> Vec<DenseBiPoly> {
    subresultants_z(&a.to_zbi(), &b.to_zbi())
        .iter()
        .map(DenseBiPoly::from_zbi)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    fn d(t: &[(i64, usize, usize)]) -> DenseBiPoly {
        DenseBiPoly::from_int_terms(t)
    }

    #[test]
    fn resultant_examples() {
        let r = sylvester_resultant(&d(&[(1, 0, 2), (-1, 1, 0)]), &d(&[(2, 0, 1)]), Axis::Y);
        assert_eq!(r.unwrap(), UniPoly::from_i64(&[0, -4]));
        let r = sylvester_resultant(&d(&[(1, 0, 1), (-1, 0, 0)]), &d(&[(1, 0, 1), (1, 0, 0)]), Axis::Y);
        assert_eq!(r.unwrap(), UniPoly::from_i64(&[2]));
        let circle = d(&[(1, 2, 0), (1, 0, 2), (-1, 0, 0)]);
        let r = sylvester_resultant(&circle, &d(&[(2, 0, 1)]), Axis::Y);
        assert_eq!(r.unwrap(), UniPoly::from_i64(&[-4, 0, 4]));
    }

    #[test]
    fn both_constant_is_an_error() {
        let r = sylvester_resultant(&d(&[(1, 1, 0)]), &d(&[(1, 2, 0)]), Axis::Y);
        assert_eq!(r, Err(PolyError::BothConstantInAxis));
    }

    #[test]
    fn eliminating_x_swaps_roles() {
        // Res_X(X - Y^2, X - 1) = Y^2 - 1 up to sign
        let r = sylvester_resultant(&d(&[(1, 1, 0), (-1, 0, 2)]), &d(&[(1, 1, 0), (-1, 0, 0)]), Axis::X)
            .unwrap();
        assert_eq!(r.eval(&int(1)), int(0));
        assert_eq!(r.degree(), Some(2));
    }

    #[test]
    fn rational_scaling_is_undone() {
        let a = DenseBiPoly::from_terms(&[(crate::poly::rat(1, 2), 0, 2), (int(-1), 1, 0)]);
        let b = d(&[(2, 0, 1)]);
        let r = sylvester_resultant(&a, &b, Axis::Y).unwrap();
        // Res(A, B) for A = Y^2/2 - X, B = 2Y: lc(B)^2 * A(0) = 4 * (-X)
        assert_eq!(r, UniPoly::from_i64(&[0, -4]));
    }

    #[test]
    fn subresultant_gcd_degree() {
        // (Y - X)(Y + 1) and (Y - X)(Y - 2): gcd degree 1 for generic X
        let a = d(&[(1, 0, 2), (1, 0, 1), (-1, 1, 1), (-1, 1, 0)]);
        let b = d(&[(1, 0, 2), (-2, 0, 1), (-1, 1, 1), (2, 1, 0)]);
        let s = subresultants(&a, &b);
        assert!(s[0].is_zero());
        assert!(!s[1].is_zero());
        let ps = psc_z(&a.to_zbi(), &b.to_zbi());
        assert!(ps[0].is_zero());
        assert!(!ps[1].is_zero());
    }

    #[test]
    fn determinant_needs_pivoting() {
        let m = vec![
            vec![int(0), int(1), int(2)],
            vec![int(1), int(0), int(3)],
            vec![int(4), int(-3), int(8)],
        ];
        assert_eq!(bareiss_det(m), int(-2));
    }
}
