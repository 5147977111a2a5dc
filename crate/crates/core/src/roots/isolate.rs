use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::sturm::SturmChain;
use super::RootError;
use crate::poly::{Rational, SignOrdering, UniPoly, ZPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IntervalKind {
    ExactPoint,
    Open,
}

/// Either an exact rational root (`lo == hi`) or an open interval `(lo, hi)`
/// holding exactly one root, with the polynomial nonzero at both endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsolatingInterval {
    pub kind: IntervalKind,
    pub lo: Rational,
    pub hi: Rational,
}

impl IsolatingInterval {
    pub fn exact(r: Rational) -> Self {
        IsolatingInterval { kind: IntervalKind::ExactPoint, lo: r.clone(), hi: r }
    }

    pub fn open(lo: Rational, hi: Rational) -> Self {
        IsolatingInterval { kind: IntervalKind::Open, lo, hi }
    }

    pub fn is_exact(&self) -> bool {
        self.kind == IntervalKind::ExactPoint
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        match self.kind {
            IntervalKind::ExactPoint => x == &self.lo,
            IntervalKind::Open => &self.lo < x && x < &self.hi,
        }
    }

    /// Sign of the isolated root itself.
    pub fn sign_relative_to_zero(&self, p: &UniPoly) -> Ordering {
        let z = p.to_zpoly().squarefree();
        let mut iv = self.clone();
        loop {
            if iv.is_exact() {
                return iv.lo.sign_ordering();
            }
            if !iv.lo.is_negative() {
                return Ordering::Greater;
            }
            if !iv.hi.is_positive() {
                return Ordering::Less;
            }
            if z.sign_at(&Rational::zero()) == Ordering::Equal {
                return Ordering::Equal;
            }
            iv = bisect(&z, &iv);
        }
    }

    /// Approximate midpoint as a float.
    pub fn approx(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }
}

/// One bisection step on a squarefree `z` whose root lies in `iv`.
pub(crate) fn bisect(z: &ZPoly, iv: &IsolatingInterval) -> IsolatingInterval {
    if iv.is_exact() {
        return iv.clone();
    }
    let m = iv.midpoint();
    let sm = z.sign_at(&m);
    if sm == Ordering::Equal {
        return IsolatingInterval::exact(m);
    }
    if sm == z.sign_at(&iv.hi) {
        IsolatingInterval::open(iv.lo.clone(), m)
    } else {
        IsolatingInterval::open(m, iv.hi.clone())
    }
}

/// Power of two strictly above every root's absolute value.
pub(crate) fn root_bound(z: &ZPoly) -> Rational {
    let lc = z.lc().abs();
    let mut m = BigInt::zero();
    for c in &z.coeffs()[..z.coeffs().len().saturating_sub(1)] {
        let a = c.abs();
        if a > m {
            m = a;
        }
    }
    // Cauchy: |root| < 1 + max|a_i| / |a_n|
    let bound = BigInt::one() + (m + &lc - BigInt::one()) / &lc;
    let mut p = BigInt::one();
    while p <= bound {
        p <<= 1;
    }
    Rational::from_integer(p)
}

/// Isolates the real roots of a nonzero integer polynomial.
pub(crate) fn isolate_z(p: &ZPoly) -> Vec<IsolatingInterval> {
    let z = p.squarefree();
    if z.deg0() == 0 {
        return Vec::new();
    }
    if z.deg0() == 1 {
        let r = Rational::new(-z.coeff(0), z.coeff(1));
        return vec![IsolatingInterval::exact(r)];
    }
    let chain = SturmChain::from_squarefree(z.clone());
    let b = root_bound(&z);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b, None::<usize>)];
    while let Some((lo, hi, known)) = stack.pop() {
        let n = known.unwrap_or_else(|| chain.count(Some(&lo), Some(&hi)));
        if n == 0 {
            continue;
        }
        if n == 1 {
            if z.sign_at(&hi) == Ordering::Equal {
                out.push(IsolatingInterval::exact(hi));
            } else {
                let iv = fix_open_lower(&z, lo, hi);
                out.push(refine_z(&z, &iv, &Rational::one()));
            }
            continue;
        }
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        let left = chain.count(Some(&lo), Some(&mid));
        // pushed right first so that the left half pops first
        stack.push((mid.clone(), hi, Some(n - left)));
        stack.push((lo, mid, Some(left)));
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

/// Moves a root-valued lower endpoint inward until the polynomial is nonzero
/// at both ends.
fn fix_open_lower(z: &ZPoly, lo: Rational, mut hi: Rational) -> IsolatingInterval {
    if z.sign_at(&lo) != Ordering::Equal {
        return IsolatingInterval::open(lo, hi);
    }
    let shi = z.sign_at(&hi);
    loop {
        let m = (&lo + &hi) / Rational::from_integer(2.into());
        let sm = z.sign_at(&m);
        if sm == Ordering::Equal {
            return IsolatingInterval::exact(m);
        }
        if sm != shi {
            return IsolatingInterval::open(m, hi);
        }
        hi = m;
    }
}

/// Distinct real roots of `p` in `(lo, hi]`, `None` meaning infinite.
pub fn count_roots_in(
    p: &UniPoly,
    lo: Option<&Rational>,
    hi: Option<&Rational>,
) -> Result<usize, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroInput);
    }
    Ok(SturmChain::new(&p.to_zpoly()).count(lo, hi))
}

/// Sorted isolating intervals, one per distinct real root.
pub fn isolate_roots(p: &UniPoly) -> Result<Vec<IsolatingInterval>, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroInput);
    }
    Ok(isolate_z(&p.to_zpoly()))
}

/// Bisects until the width is at most `width`.
pub fn refine(
    iv: &IsolatingInterval,
    p: &UniPoly,
    width: &Rational,
) -> Result<IsolatingInterval, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroInput);
    }
    let z = p.to_zpoly().squarefree();
    if iv.is_exact() {
        if z.sign_at(&iv.lo) != Ordering::Equal {
            return Err(RootError::NotIsolating);
        }
        return Ok(iv.clone());
    }
    let (slo, shi) = (z.sign_at(&iv.lo), z.sign_at(&iv.hi));
    if iv.lo >= iv.hi
        || slo == Ordering::Equal
        || shi == Ordering::Equal
        || slo == shi
        || SturmChain::from_squarefree(z.clone()).count(Some(&iv.lo), Some(&iv.hi)) != 1
    {
        return Err(RootError::NotIsolating);
    }
    Ok(refine_z(&z, iv, width))
}

pub(crate) fn refine_z(z: &ZPoly, iv: &IsolatingInterval, width: &Rational) -> IsolatingInterval {
    let mut cur = iv.clone();
    while !cur.is_exact() && &cur.width() > width {
        cur = bisect(z, &cur);
    }
    cur
}
