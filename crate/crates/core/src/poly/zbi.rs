//! Bivariate integer polynomials viewed as polynomials in `Y` over `Z[X]`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Rational, ZPoly};

/// `c[j]` is the coefficient of `Y^j`, a polynomial in `X`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ZBiPoly {
    c: Vec<ZPoly>,
}

impl ZBiPoly {
    pub fn new(mut c: Vec<ZPoly>) -> Self {
        while c.last().is_some_and(|p| p.is_zero()) {
            c.pop();
        }
        ZBiPoly { c }
    }

    pub fn zero() -> Self {
        ZBiPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::new(vec![ZPoly::one()])
    }

    /// Builds from `(coeff, i, j)` meaning `coeff * X^i * Y^j`.
    pub fn from_terms(terms: &[(i64, usize, usize)]) -> Self {
        let mut grid: Vec<Vec<BigInt>> = Vec::new();
        for &(c, i, j) in terms {
            if grid.len() <= j {
                grid.resize(j + 1, Vec::new());
            }
            if grid[j].len() <= i {
                grid[j].resize(i + 1, BigInt::zero());
            }
            grid[j][i] += BigInt::from(c);
        }
        Self::new(grid.into_iter().map(ZPoly::new).collect())
    }

    /// Constant in `Y`.
    pub fn from_x(p: ZPoly) -> Self {
        Self::new(vec![p])
    }

    pub fn coeffs(&self) -> &[ZPoly] {
        &self.c
    }

    pub fn coeff(&self, j: usize) -> ZPoly {
        self.c.get(j).cloned().unwrap_or_else(ZPoly::zero)
    }

    /// Integer coefficient of `X^i Y^j`.
    pub fn term(&self, i: usize, j: usize) -> BigInt {
        self.c.get(j).map(|p| p.coeff(i)).unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg_y(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn deg_x(&self) -> Option<usize> {
        self.c.iter().filter_map(|p| p.degree()).max()
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.c
            .iter()
            .enumerate()
            .filter_map(|(j, p)| p.degree().map(|i| i + j))
            .max()
    }

    pub fn lc_y(&self) -> ZPoly {
        self.c.last().cloned().unwrap_or_else(ZPoly::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|j| self.coeff(j).add(&o.coeff(j))).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|j| self.coeff(j).sub(&o.coeff(j))).collect())
    }

    pub fn neg(&self) -> Self {
        ZBiPoly { c: self.c.iter().map(|p| -p.clone()).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![ZPoly::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] = c[i + j].add(&a.mul(b));
                }
            }
        }
        Self::new(c)
    }

    pub fn mul_x(&self, p: &ZPoly) -> Self {
        Self::new(self.c.iter().map(|a| a.mul(p)).collect())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.c.iter().map(|a| a.scale(k)).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplies by `X^a Y^b`.
    pub fn shift(&self, a: usize, b: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![ZPoly::zero(); b];
        c.extend(self.c.iter().map(|p| p.shift(a)));
        Self::new(c)
    }

    pub fn derivative_y(&self) -> Self {
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, p)| p.scale(&BigInt::from(j)))
                .collect(),
        )
    }

    pub fn derivative_x(&self) -> Self {
        Self::new(self.c.iter().map(|p| p.derivative()).collect())
    }

    /// Exchanges the roles of `X` and `Y`.
    pub fn swap(&self) -> Self {
        let dx = match self.deg_x() {
            Some(d) => d,
            None => return Self::zero(),
        };
        let mut c = vec![vec![BigInt::zero(); self.c.len()]; dx + 1];
        for (j, p) in self.c.iter().enumerate() {
            for (i, a) in p.coeffs().iter().enumerate() {
                c[i][j] = a.clone();
            }
        }
        Self::new(c.into_iter().map(ZPoly::new).collect())
    }

    /// Gcd of all integer coefficients.
    pub fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for p in &self.c {
            g = num_integer::Integer::gcd(&g, &p.content());
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Gcd in `Z[X]` of the `Y`-coefficients, primitive with positive leading coefficient.
    pub fn content_x(&self) -> ZPoly {
        let mut g = ZPoly::zero();
        for p in &self.c {
            if p.is_zero() {
                continue;
            }
            g = if g.is_zero() { p.normalized() } else { g.gcd(p) };
            if g.degree() == Some(0) {
                return ZPoly::one();
            }
        }
        g
    }

    /// Divides by both the `X`-content and the integer content; signs of the
    /// leading coefficient are not normalised.
    pub fn primitive_y(&self) -> Self {
        let cx = self.content_x();
        let p = if cx.degree().unwrap_or(0) > 0 {
            self.div_x_exact(&cx).expect("content divides")
        } else {
            self.clone()
        };
        p.int_primitive()
    }

    pub fn int_primitive(&self) -> Self {
        let g = self.int_content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        ZBiPoly { c: self.c.iter().map(|p| p.div_scalar_exact(&g)).collect() }
    }

    pub fn div_x_exact(&self, d: &ZPoly) -> Option<Self> {
        let mut c = Vec::with_capacity(self.c.len());
        for p in &self.c {
            c.push(p.exact_div(d)?);
        }
        Some(Self::new(c))
    }

    /// Pseudo-division in `Y`: `lc(d)^(deg a - deg d + 1) a = q d + r`.
    pub fn pseudo_divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "pseudo-division by zero polynomial");
        let dd = d.deg_y().unwrap();
        let Some(da) = self.deg_y() else {
            return (Self::zero(), Self::zero());
        };
        if da < dd {
            return (Self::zero(), self.clone());
        }
        let b = d.lc_y();
        let mut r = self.c.clone();
        let mut q = vec![ZPoly::zero(); da - dd + 1];
        for top in (dd..=da).rev() {
            let lead = r[top].clone();
            for qi in q.iter_mut() {
                *qi = qi.mul(&b);
            }
            for ri in r.iter_mut().take(top + 1) {
                *ri = ri.mul(&b);
            }
            if !lead.is_zero() {
                q[top - dd] = q[top - dd].add(&lead);
                for (j, dj) in d.c.iter().enumerate() {
                    r[top - dd + j] = r[top - dd + j].sub(&lead.mul(dj));
                }
            }
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn prem(&self, d: &Self) -> Self {
        self.pseudo_divrem(d).1
    }

    /// Exact quotient in `Z[X][Y]`, or `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = d.deg_y().unwrap();
        let da = self.deg_y().unwrap();
        if da < dd {
            return None;
        }
        let b = d.lc_y();
        let mut r = self.c.clone();
        let mut q = vec![ZPoly::zero(); da - dd + 1];
        for top in (dd..=da).rev() {
            if r[top].is_zero() {
                continue;
            }
            let qq = r[top].exact_div(&b)?;
            for (j, dj) in d.c.iter().enumerate() {
                r[top - dd + j] = r[top - dd + j].sub(&qq.mul(dj));
            }
            q[top - dd] = qq;
        }
        if r.iter().any(|p| !p.is_zero()) {
            return None;
        }
        Some(Self::new(q))
    }

    /// `q^(deg_x) * F(p/q, Y)` as an integer polynomial in `Y`; positive
    /// scaling, so signs match `F(p/q, Y)`.
    pub fn eval_x(&self, r: &Rational) -> ZPoly {
        let dx = self.deg_x().unwrap_or(0);
        let p = r.numer();
        let q = r.denom();
        let mut qp = Vec::with_capacity(dx + 1);
        let mut pp = Vec::with_capacity(dx + 1);
        let (mut a, mut b) = (BigInt::one(), BigInt::one());
        for _ in 0..=dx {
            qp.push(a.clone());
            pp.push(b.clone());
            a *= q;
            b *= p;
        }
        ZPoly::new(
            self.c
                .iter()
                .map(|poly| {
                    let mut acc = BigInt::zero();
                    for (i, ci) in poly.coeffs().iter().enumerate() {
                        if !ci.is_zero() {
                            acc += ci * &pp[i] * &qp[dx - i];
                        }
                    }
                    acc
                })
                .collect(),
        )
    }

    /// `q^(deg_y) * F(X, p/q)` as an integer polynomial in `X`.
    pub fn eval_y(&self, r: &Rational) -> ZPoly {
        let n = self.c.len();
        if n == 0 {
            return ZPoly::zero();
        }
        let p = r.numer();
        let q = r.denom();
        let mut acc = ZPoly::zero();
        let mut pw = vec![BigInt::one(); n];
        for k in 1..n {
            pw[k] = &pw[k - 1] * q;
        }
        let mut pp = BigInt::one();
        for (j, cj) in self.c.iter().enumerate() {
            acc = acc.add(&cj.scale(&(&pp * &pw[n - 1 - j])));
            pp *= p;
        }
        acc
    }

    /// Exact value at a rational point.
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for p in self.c.iter().rev() {
            acc = acc * y + p.eval(x);
        }
        acc
    }
}
