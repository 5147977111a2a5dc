use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::isolate::IsolatingInterval;
use crate::poly::{Rational, SignOrdering, ZPoly};

const CHEAP_ATTEMPTS: usize = 3;

/// A real algebraic number: the unique root of a squarefree integer
/// polynomial (positive leading coefficient) inside an open interval whose
/// endpoints are not roots. Rational roots are stored exactly.
///
/// The defining polynomial need not be irreducible; zero tests that discover
/// a proper factor vanishing at the number replace the polynomial by it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealAlgebraic {
    poly: ZPoly,
    lo: Rational,
    hi: Rational,
    exact: Option<Rational>,
}

impl RealAlgebraic {
    pub fn from_rational(r: Rational) -> Self {
        RealAlgebraic {
            poly: ZPoly::linear_root(&r),
            lo: r.clone(),
            hi: r.clone(),
            exact: Some(r),
        }
    }

    /// `z` must be squarefree and `iv` must isolate one of its roots.
    pub fn from_isolating(z: &ZPoly, iv: &IsolatingInterval) -> Self {
        if iv.is_exact() {
            return Self::from_rational(iv.lo.clone());
        }
        let poly = z.normalized();
        if poly.deg0() == 1 {
            return Self::from_rational(Rational::new(-poly.coeff(0), poly.coeff(1)));
        }
        RealAlgebraic { poly, lo: iv.lo.clone(), hi: iv.hi.clone(), exact: None }
    }

    pub fn rational(&self) -> Option<&Rational> {
        self.exact.as_ref()
    }

    pub fn defining_poly(&self) -> &ZPoly {
        &self.poly
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// A rational inside the isolating interval (the number itself when rational).
    pub fn sample(&self) -> Rational {
        match &self.exact {
            Some(r) => r.clone(),
            None => (&self.lo + &self.hi) / Rational::from_integer(2.into()),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.sample().to_f64().unwrap_or(f64::NAN)
    }

    fn set_exact(&mut self, r: Rational) {
        *self = Self::from_rational(r);
    }

    /// Halves the isolating interval.
    pub fn bisect(&mut self) {
        if self.exact.is_some() {
            return;
        }
        let m = self.sample();
        let sm = self.poly.sign_at(&m);
        if sm == Ordering::Equal {
            self.set_exact(m);
        } else if sm == self.poly.sign_at(&self.hi) {
            self.hi = m;
        } else {
            self.lo = m;
        }
    }

    pub fn refine_to(&mut self, width: &Rational) {
        while self.exact.is_none() && &self.width() > width {
            self.bisect();
        }
    }

    /// Sign of `q` at this number, decided exactly.
    pub fn sign_of(&mut self, q: &ZPoly) -> Ordering {
        if let Some(r) = &self.exact {
            return q.sign_at(r);
        }
        if q.is_zero() {
            return Ordering::Equal;
        }
        if q.deg0() == 0 {
            return q.lc().sign_ordering();
        }
        // a few cheap enclosures first; the gcd zero test is expensive
        for _ in 0..CHEAP_ATTEMPTS {
            if let Some(s) = self.taylor_sign(q) {
                return s;
            }
            self.bisect();
            if let Some(r) = &self.exact {
                return q.sign_at(r);
            }
        }
        let g = self.poly.gcd(q);
        if g.deg0() > 0 {
            let (sl, sh) = (g.sign_at(&self.lo), g.sign_at(&self.hi));
            if sl != sh {
                self.shrink_to(g);
                return Ordering::Equal;
            }
        }
        loop {
            if let Some(s) = self.taylor_sign(q) {
                return s;
            }
            self.bisect();
            if let Some(r) = &self.exact {
                return q.sign_at(r);
            }
        }
    }

    fn shrink_to(&mut self, g: ZPoly) {
        let g = g.normalized();
        if g.deg0() == 1 {
            self.set_exact(Rational::new(-g.coeff(0), g.coeff(1)));
        } else {
            self.poly = g;
        }
    }

    /// Sign of `q` over the whole interval when the Taylor expansion at the
    /// midpoint `m` certifies it: `|q(m)| > sum_k |q^(k)(m)/k!| r^k` with `r`
    /// the half-width. Computed on `s^n q((p + Z)/s)` for `m = p/s` so that
    /// only integers are involved.
    fn taylor_sign(&self, q: &ZPoly) -> Option<Ordering> {
        let m = self.sample();
        let (p, s) = (m.numer(), m.denom());
        let n = q.deg0();
        let mut c: Vec<BigInt> = Vec::with_capacity(n + 1);
        let mut spow = BigInt::one();
        let mut rev = Vec::with_capacity(n + 1);
        for a in q.coeffs().iter().rev() {
            rev.push(a * &spow);
            spow *= s;
        }
        c.extend(rev.into_iter().rev());
        for i in 0..n {
            for j in (i..n).rev() {
                let t = &c[j + 1] * p;
                c[j] += t;
            }
        }
        if c[0].is_zero() {
            return None;
        }
        // u = Z/s ranges over |u| <= r, so |Z| <= s r = a/b
        let rho = Rational::from_integer(s.clone()) * self.width() / Rational::from_integer(2.into());
        let (a, b) = (rho.numer(), rho.denom());
        let mut bpow = vec![BigInt::one(); n + 1];
        for k in 1..=n {
            bpow[k] = &bpow[k - 1] * b;
        }
        let lhs = c[0].abs() * &bpow[n];
        let mut rhs = BigInt::zero();
        let mut apow = BigInt::one();
        for k in 1..=n {
            apow *= a;
            rhs += c[k].abs() * &apow * &bpow[n - k];
            if rhs >= lhs {
                return None;
            }
        }
        Some(c[0].sign_ordering())
    }

    /// Compares with a rational, tightening the interval on the way.
    pub fn cmp_rational(&mut self, r: &Rational) -> Ordering {
        if let Some(e) = &self.exact {
            return e.cmp(r);
        }
        if r <= &self.lo {
            return Ordering::Greater;
        }
        if r >= &self.hi {
            return Ordering::Less;
        }
        let s = self.poly.sign_at(r);
        if s == Ordering::Equal {
            self.set_exact(r.clone());
            return Ordering::Equal;
        }
        if s == self.poly.sign_at(&self.hi) {
            self.hi = r.clone();
            Ordering::Less
        } else {
            self.lo = r.clone();
            Ordering::Greater
        }
    }

    /// Exact comparison of two algebraic numbers.
    pub fn cmp_algebraic(&mut self, other: &mut RealAlgebraic) -> Ordering {
        if let Some(r) = other.exact.clone() {
            return self.cmp_rational(&r);
        }
        if let Some(r) = self.exact.clone() {
            return other.cmp_rational(&r).reverse();
        }
        let oq = other.poly.clone();
        if self.sign_of(&oq) == Ordering::Equal {
            // self is a root of other's polynomial; equal iff it lies in other's interval
            let lo = other.lo.clone();
            let hi = other.hi.clone();
            if self.cmp_rational(&lo) == Ordering::Greater && self.cmp_rational(&hi) == Ordering::Less {
                return Ordering::Equal;
            }
        }
        loop {
            if self.hi <= other.lo {
                return Ordering::Less;
            }
            if other.hi <= self.lo {
                return Ordering::Greater;
            }
            self.bisect();
            other.bisect();
            if let Some(r) = other.exact.clone() {
                return self.cmp_rational(&r);
            }
            if let Some(r) = self.exact.clone() {
                return other.cmp_rational(&r).reverse();
            }
        }
    }
}
