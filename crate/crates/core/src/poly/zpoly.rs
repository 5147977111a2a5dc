//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! This is the internal workhorse behind the rational-coefficient types: every
//! sign decision (Sturm sequences, resultants, gcds) runs on primitive integer
//! polynomials, where content removal keeps coefficient growth in check.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

/// Coefficients in increasing degree order; empty means the zero polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ZPoly {
    c: Vec<BigInt>,
}

impl ZPoly {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        ZPoly { c }
    }

    pub fn zero() -> Self {
        ZPoly { c: Vec::new() }
    }

    pub fn constant(v: BigInt) -> Self {
        Self::new(vec![v])
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// `X - r` scaled to integers: `den*X - num`.
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r.numer().clone(), r.denom().clone()])
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn monomial(coeff: BigInt, deg: usize) -> Self {
        let mut c = vec![BigInt::zero(); deg + 1];
        c[deg] = coeff;
        Self::new(c)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.c.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn lc(&self) -> BigInt {
        self.c.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    /// Non-negative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for a in &self.c {
            g = g.gcd(a);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the positive content; signs are preserved.
    pub fn primitive(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        ZPoly { c: self.c.iter().map(|a| a / &g).collect() }
    }

    /// Primitive part normalised to a positive leading coefficient.
    pub fn normalized(&self) -> Self {
        let p = self.primitive();
        if p.lc().is_negative() {
            -p
        } else {
            p
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        ZPoly { c: self.c.iter().map(|a| a * k).collect() }
    }

    pub fn div_scalar_exact(&self, k: &BigInt) -> Self {
        ZPoly { c: self.c.iter().map(|a| a / k).collect() }
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.c.iter().cloned());
        ZPoly { c }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * BigInt::from(i))
                .collect(),
        )
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(match (self.c.get(i), o.c.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::new(c)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&-o.clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::new(c)
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

    /// Pseudo-division: returns `(q, r)` with `lc(d)^(deg a - deg d + 1) * a = q*d + r`.
    pub fn pseudo_divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "pseudo-division by zero polynomial");
        let dd = d.degree().unwrap();
        let Some(da) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if da < dd {
            return (Self::zero(), self.clone());
        }
        let b = d.lc();
        let mut r = self.c.clone();
        let mut q = vec![BigInt::zero(); da - dd + 1];
        let steps = da - dd + 1;
        for step in 0..steps {
            let top = da - step;
            let lead = r[top].clone();
            // every pass multiplies by b, including the accumulated quotient
            for qi in q.iter_mut() {
                *qi *= &b;
            }
            for ri in r.iter_mut().take(top + 1) {
                *ri *= &b;
            }
            if !lead.is_zero() {
                q[top - dd] += &lead;
                for (j, dj) in d.c.iter().enumerate() {
                    r[top - dd + j] -= &lead * dj;
                }
            }
            debug_assert!(r[top].is_zero());
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn prem(&self, d: &Self) -> Self {
        self.pseudo_divrem(d).1
    }

    /// Exact quotient in `Z[X]`, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = d.degree().unwrap();
        let da = self.degree().unwrap();
        if da < dd {
            return None;
        }
        let b = d.lc();
        let mut r = self.c.clone();
        let mut q = vec![BigInt::zero(); da - dd + 1];
        for top in (dd..=da).rev() {
            if r[top].is_zero() {
                continue;
            }
            let (qq, rem) = r[top].div_rem(&b);
            if !rem.is_zero() {
                return None;
            }
            for (j, dj) in d.c.iter().enumerate() {
                r[top - dd + j] -= &qq * dj;
            }
            q[top - dd] = qq;
        }
        if r.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(Self::new(q))
    }

    /// Gcd via the primitive polynomial remainder sequence. The result is
    /// primitive with positive leading coefficient (times the integer gcd of
    /// the contents when `with_content` is set). `gcd(0, 0) = 0`.
    pub fn gcd_with(&self, o: &Self, with_content: bool) -> Self {
        if self.is_zero() {
            return if with_content { o.abs_lc() } else { o.normalized() };
        }
        if o.is_zero() {
            return if with_content { self.abs_lc() } else { self.normalized() };
        }
        let cont = if with_content {
            self.content().gcd(&o.content())
        } else {
            BigInt::one()
        };
        if self.deg0() > 0 && o.deg0() > 0 && coprime_mod_p(self, o) {
            return Self::constant(cont);
        }
        let (mut a, mut b) = if self.degree() >= o.degree() {
            (self.primitive(), o.primitive())
        } else {
            (o.primitive(), self.primitive())
        };
        loop {
            if b.degree() == Some(0) {
                return Self::constant(cont);
            }
            let r = a.prem(&b);
            if r.is_zero() {
                return b.normalized().scale(&cont);
            }
            a = b;
            b = r.primitive();
        }
    }

    pub fn gcd(&self, o: &Self) -> Self {
        self.gcd_with(o, false)
    }

    fn abs_lc(&self) -> Self {
        if self.lc().is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Squarefree part, primitive with positive leading coefficient.
    pub fn squarefree(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.normalized();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.normalized();
        }
        self.primitive()
            .exact_div(&g)
            .expect("gcd divides its argument")
            .normalized()
    }

    /// Sign of `P(r)` computed without leaving the integers:
    /// `sum a_i p^i q^(n-i)` has the sign of `P(p/q)` for `q > 0`.
    pub fn sign_at(&self, r: &Rational) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        let p = r.numer();
        let q = r.denom();
        let n = self.c.len() - 1;
        let mut acc = self.c[n].clone();
        let mut qpow = BigInt::one();
        for i in (0..n).rev() {
            qpow *= q;
            acc = acc * p + &self.c[i] * &qpow;
        }
        acc.sign_ordering()
    }

    pub fn sign_at_int(&self, x: &BigInt) -> Ordering {
        self.eval_int(x).sign_ordering()
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn eval(&self, r: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for a in self.c.iter().rev() {
            acc = acc * r + Rational::from_integer(a.clone());
        }
        acc
    }

    /// Sign of the polynomial as `x -> +inf`.
    pub fn sign_pos_inf(&self) -> Ordering {
        self.lc().sign_ordering()
    }

    /// Sign of the polynomial as `x -> -inf`.
    pub fn sign_neg_inf(&self) -> Ordering {
        let s = self.lc().sign_ordering();
        if self.deg0() % 2 == 1 {
            s.reverse()
        } else {
            s
        }
    }

    /// Composition `P(X + r)` rescaled to integer coefficients: returns the
    /// coefficients of `q^n * P(X/q + p/q)` style Taylor shift as rationals.
    pub fn taylor_shift(&self, r: &Rational) -> Vec<Rational> {
        let mut b: Vec<Rational> = self
            .c
            .iter()
            .map(|a| Rational::from_integer(a.clone()))
            .collect();
        let n = b.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &b[j + 1] * r;
                b[j] += t;
            }
        }
        b
    }
}

const MODULI: [u64; 2] = [2_147_483_647, 2_147_483_629];

fn reduce_mod(a: &ZPoly, p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut v: Vec<u64> = a
        .c
        .iter()
        .map(|c| {
            let r = c.mod_floor(&pb);
            r.to_u64().expect("reduced below the modulus")
        })
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: p is prime
    let (mut base, mut e, mut acc) = (a % p, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Degree of `gcd(a, b)` over `F_p`.
fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> usize {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let inv = inv_mod(*b.last().unwrap(), p);
        while a.len() >= b.len() {
            let k = ((*a.last().unwrap() as u128 * inv as u128) % p as u128) as u64;
            let shift = a.len() - b.len();
            for (i, &bi) in b.iter().enumerate() {
                let t = ((k as u128 * bi as u128) % p as u128) as u64;
                a[i + shift] = (a[i + shift] + p - t) % p;
            }
            while a.last() == Some(&0) {
                a.pop();
            }
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// True when the image of the gcd modulo a prime not dividing `lc(a)` is
/// constant. Such a prime cannot lower the degree of the true gcd, so the
/// integer gcd is then constant as well. `false` means "undecided".
fn coprime_mod_p(a: &ZPoly, b: &ZPoly) -> bool {
    for p in MODULI {
        let ap = reduce_mod(a, p);
        if ap.len() != a.c.len() {
            continue;
        }
        let bp = reduce_mod(b, p);
        if gcd_degree_mod(ap, bp, p) == 0 {
            return true;
        }
    }
    false
}

impl std::ops::Neg for ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly { c: self.c.into_iter().map(|a| -a).collect() }
    }
}

pub(crate) trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

impl SignOrdering for Rational {
    fn sign_ordering(&self) -> Ordering {
        self.numer().sign_ordering()
    }
}
