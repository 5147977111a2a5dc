use std::cmp::Ordering;

use num_traits::One;

use super::IntersectError;
use crate::poly::bigcd::{zgcd, zsquarefree_y};
use crate::poly::resultant::res_y;
use crate::poly::{DenseBiPoly, Rational, ZBiPoly, ZPoly};
use crate::roots::{
    fiber_gcd, fiber_sign_at, isolate_z, real_roots_z, refine_z, IsolatingInterval,
    RealAlgebraic, SturmChain,
};

/// Open interval between consecutive critical abscissae (`None` = infinite
/// end) with its rational sample point, branch count `m` and the number `v`
/// of roots of `F(X, 0)` inside.
#[derive(Clone, Debug)]
pub struct CellInterval {
    pub lo: Option<RealAlgebraic>,
    pub hi: Option<RealAlgebraic>,
    pub sample: Rational,
    pub m: usize,
    pub v: usize,
}

/// Where an abscissa falls relative to the critical set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Interval(usize),
    Critical(usize),
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    /// Squarefree integer polynomial the decomposition was built for.
    pub f: ZBiPoly,
    /// `Res_Y(f, f_Y)`.
    pub discriminant: ZPoly,
    pub critical: Vec<RealAlgebraic>,
    pub intervals: Vec<CellInterval>,
}

/// A branch `phi_(I,i)`, with `i` counted from the bottom starting at 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    pub interval: usize,
    pub index: usize,
    pub witness_x: Rational,
    pub witness_y: IsolatingInterval,
}

/// Rational strictly between two distinct algebraic numbers `a < b`.
pub(crate) fn rational_between(a: &mut RealAlgebraic, b: &mut RealAlgebraic) -> Rational {
    loop {
        if a.hi() < b.lo() {
            return (a.hi() + b.lo()) / Rational::from_integer(2.into());
        }
        a.bisect();
        b.bisect();
    }
}

/// Squarefree part of `f`, keeping factors in `X` alone.
pub(crate) fn squarefree_full(f: &ZBiPoly) -> ZBiPoly {
    let c = f.content_x().squarefree();
    let p = zsquarefree_y(f);
    if p.deg_y() == Some(0) {
        return ZBiPoly::from_x(c).int_primitive();
    }
    p.mul_x(&c).int_primitive()
}

pub(crate) fn decompose_z(f: &ZBiPoly) -> Result<Decomposition, IntersectError> {
    if f.is_zero() {
        return Err(IntersectError::ZeroF);
    }
    if f.deg_y() == Some(0) {
        return Err(IntersectError::FYIdenticallyZero);
    }
    let disc = res_y(f, &f.derivative_y());
    if disc.is_zero() {
        return Err(IntersectError::ResultantZero);
    }
    let mut critical = real_roots_z(&disc);
    let n = critical.len();
    let mut intervals = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let sample = if n == 0 {
            Rational::from_integer(0.into())
        } else if k == 0 {
            -(Rational::one() + critical[0].lo().abs_val())
        } else if k == n {
            Rational::one() + critical[n - 1].hi().abs_val()
        } else {
            let (l, r) = critical.split_at_mut(k);
            rational_between(&mut l[k - 1], &mut r[0])
        };
        let m = SturmChain::new(&f.eval_x(&sample)).count(None, None);
        intervals.push(CellInterval {
            lo: if k == 0 { None } else { Some(critical[k - 1].clone()) },
            hi: if k == n { None } else { Some(critical[k].clone()) },
            sample,
            m,
            v: 0,
        });
    }
    let mut dec = Decomposition { f: f.clone(), discriminant: disc, critical, intervals };
    let f0 = f.coeff(0);
    if !f0.is_zero() {
        for mut r in real_roots_z(&f0) {
            if let Location::Interval(k) = dec.locate(&mut r) {
                dec.intervals[k].v += 1;
            }
        }
    }
    Ok(dec)
}

trait AbsVal {
    fn abs_val(&self) -> Rational;
}

impl AbsVal for Rational {
    fn abs_val(&self) -> Rational {
        num_traits::Signed::abs(self)
    }
}

/// Decomposition of the line for a curve whose `Res_Y(F, F_Y)` is nonzero.
pub fn decompose(f: &DenseBiPoly) -> Result<Decomposition, IntersectError> {
    if f.is_zero() {
        return Err(IntersectError::ZeroF);
    }
    decompose_z(&f.to_zbi())
}

impl Decomposition {
    pub fn critical_intervals(&self) -> Vec<IsolatingInterval> {
        self.critical
            .iter()
            .map(|c| match c.rational() {
                Some(r) => IsolatingInterval::exact(r.clone()),
                None => IsolatingInterval::open(c.lo().clone(), c.hi().clone()),
            })
            .collect()
    }

    pub fn branch_counts(&self) -> Vec<usize> {
        self.intervals.iter().map(|c| c.m).collect()
    }

    pub fn total_v(&self) -> usize {
        self.intervals.iter().map(|c| c.v).sum()
    }

    pub fn locate(&self, x: &mut RealAlgebraic) -> Location {
        let (mut lo, mut hi) = (0usize, self.critical.len());
        // invariant: x lies above critical[..lo] and below critical[hi..]
        while lo < hi {
            let mid = (lo + hi) / 2;
            let mut c = self.critical[mid].clone();
            match x.cmp_algebraic(&mut c) {
                Ordering::Equal => return Location::Critical(mid),
                Ordering::Less => hi = mid,
                Ordering::Greater => lo = mid + 1,
            }
        }
        Location::Interval(lo)
    }

    pub fn locate_rational(&self, x: &Rational) -> Location {
        self.locate(&mut RealAlgebraic::from_rational(x.clone()))
    }

    /// `n` distinct rationals inside interval `k`, spread over it.
    pub fn rational_points(&self, k: usize, n: usize) -> Vec<Rational> {
        let cell = &self.intervals[k];
        let (a, b) = match (&cell.lo, &cell.hi) {
            (None, None) => (-Rational::from_integer(10.into()), Rational::from_integer(10.into())),
            (Some(l), None) => {
                let mut l = l.clone();
                let a = upper_rational_above(&mut l);
                (a.clone(), a + Rational::from_integer(10.into()))
            }
            (None, Some(h)) => {
                let mut h = h.clone();
                let b = lower_rational_below(&mut h);
                (&b - Rational::from_integer(10.into()), b)
            }
            (Some(l), Some(h)) => {
                let (mut l, mut h) = (l.clone(), h.clone());
                let mid = rational_between(&mut l, &mut h);
                let a = {
                    let mut l2 = l.clone();
                    let mut m = RealAlgebraic::from_rational(mid.clone());
                    rational_between(&mut l2, &mut m)
                };
                let b = {
                    let mut h2 = h.clone();
                    let mut m = RealAlgebraic::from_rational(mid);
                    rational_between(&mut m, &mut h2)
                };
                (a, b)
            }
        };
        let step = (&b - &a) / Rational::from_integer((n + 1).into());
        (1..=n)
            .map(|i| &a + &step * Rational::from_integer(i.into()))
            .collect()
    }

    /// Every branch with a witness point at its interval's sample.
    pub fn branches(&self) -> Vec<Branch> {
        let mut out = Vec::new();
        for (k, cell) in self.intervals.iter().enumerate() {
            if cell.m == 0 {
                continue;
            }
            let z = self.f.eval_x(&cell.sample).squarefree();
            for (i, iv) in isolate_z(&z).into_iter().enumerate() {
                out.push(Branch {
                    interval: k,
                    index: i + 1,
                    witness_x: cell.sample.clone(),
                    witness_y: iv,
                });
            }
        }
        out
    }
}

fn upper_rational_above(a: &mut RealAlgebraic) -> Rational {
    a.hi().clone() + Rational::one()
}

fn lower_rational_below(a: &mut RealAlgebraic) -> Rational {
    a.lo().clone() - Rational::one()
}

/// Isolating interval of width at most `precision` around `phi_(I,i)(x)`.
pub fn trace_branch(
    dec: &Decomposition,
    branch: &Branch,
    x: &Rational,
    precision: &Rational,
) -> Result<IsolatingInterval, IntersectError> {
    if dec.locate_rational(x) != Location::Interval(branch.interval) {
        return Err(IntersectError::OutsideInterval);
    }
    let m = dec.intervals[branch.interval].m;
    if branch.index == 0 || branch.index > m {
        return Err(IntersectError::BranchIndex { index: branch.index, m });
    }
    let z = dec.f.eval_x(x).squarefree();
    let ivs = isolate_z(&z);
    Ok(refine_z(&z, &ivs[branch.index - 1], precision))
}

/// `m + 1` rationals `c_0 < ... < c_m` with exactly one root of `f(xi, Y)`
/// between consecutive ones, where `m` is the number of real roots of the
/// fiber over a non-critical `xi`.
pub(crate) fn fiber_separators(f: &ZBiPoly, xi: &mut RealAlgebraic, m: usize) -> Vec<Rational> {
    if m == 0 {
        return Vec::new();
    }
    loop {
        let xs = xi.sample();
        let z = f.eval_x(&xs);
        if !z.is_zero() {
            let zs = z.squarefree();
            let ivs = isolate_z(&zs);
            if ivs.len() == m {
                let mut ys: Vec<RealAlgebraic> =
                    ivs.iter().map(|iv| RealAlgebraic::from_isolating(&zs, iv)).collect();
                let mut seps = Vec::with_capacity(m + 1);
                seps.push(ys[0].lo() - Rational::one());
                for j in 1..m {
                    let (l, r) = ys.split_at_mut(j);
                    seps.push(rational_between(&mut l[j - 1], &mut r[0]));
                }
                seps.push(ys[m - 1].hi() + Rational::one());
                if separators_hold(f, xi, &seps) {
                    return seps;
                }
            }
        }
        assert!(xi.rational().is_none(), "fiber root count differs from the interval's");
        let w = xi.width() / Rational::from_integer(4.into());
        xi.refine_to(&w);
    }
}

fn separators_hold(f: &ZBiPoly, xi: &mut RealAlgebraic, seps: &[Rational]) -> bool {
    let mut prev = Ordering::Equal;
    for c in seps {
        let s = fiber_sign_at(xi, f, c);
        if s == Ordering::Equal || s == prev {
            return false;
        }
        prev = s;
    }
    true
}

/// Branch indices (1-based) whose value at `xi` is a root of `h(xi, Y)`.
pub(crate) fn hits_at(
    f: &ZBiPoly,
    xi: &mut RealAlgebraic,
    seps: &[Rational],
    h: &ZBiPoly,
) -> Vec<usize> {
    if seps.is_empty() {
        return Vec::new();
    }
    let g = fiber_gcd(xi, f, h);
    if g.deg_y().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let signs: Vec<Ordering> = seps.iter().map(|c| fiber_sign_at(xi, &g, c)).collect();
    (1..seps.len()).filter(|&i| signs[i - 1] != signs[i]).collect()
}

/// Zeros of a polynomial along the branches over the open intervals.
#[derive(Clone, Debug, Default)]
pub struct BranchZeroSet {
    /// `(interval, abscissa, branch indices hit there)`.
    pub points: Vec<(usize, RealAlgebraic, Vec<usize>)>,
    /// `(interval, branch)` pairs along which the polynomial vanishes identically.
    pub vanishing: Vec<(usize, usize)>,
}

impl BranchZeroSet {
    pub fn total(&self) -> usize {
        self.points.iter().map(|(_, _, b)| b.len()).sum()
    }

    pub fn per_interval(&self, n: usize) -> Vec<usize> {
        let mut out = vec![0; n];
        for (k, _, b) in &self.points {
            out[*k] += b.len();
        }
        out
    }

    /// Zeros on branch `(k, i)` with abscissa strictly between `lo` and `hi`;
    /// `None` if the polynomial vanishes along the branch.
    pub fn count_on(
        &self,
        k: usize,
        i: usize,
        lo: Option<&RealAlgebraic>,
        hi: Option<&RealAlgebraic>,
    ) -> Option<usize> {
        if self.vanishing.contains(&(k, i)) {
            return None;
        }
        let mut n = 0;
        for (kk, xi, b) in &self.points {
            if *kk != k || !b.contains(&i) {
                continue;
            }
            let mut x = xi.clone();
            if let Some(l) = lo {
                if x.cmp_algebraic(&mut l.clone()) != Ordering::Greater {
                    continue;
                }
            }
            if let Some(h) = hi {
                if x.cmp_algebraic(&mut h.clone()) != Ordering::Less {
                    continue;
                }
            }
            n += 1;
        }
        Some(n)
    }
}

/// Points `(x, phi_(I,i)(x))` with `h = 0`, over the open intervals of `dec`.
pub fn zeros_on_branches(dec: &Decomposition, h: &ZBiPoly) -> BranchZeroSet {
    let f = &dec.f;
    let all_branches = || -> Vec<(usize, usize)> {
        dec.intervals
            .iter()
            .enumerate()
            .flat_map(|(k, c)| (1..=c.m).map(move |i| (k, i)))
            .collect()
    };
    // on the branches lc_Y(f) != 0, so reducing modulo f keeps the zero set
    let ht = if h.deg_y() >= f.deg_y() { h.prem(f) } else { h.clone() };
    if ht.is_zero() {
        return BranchZeroSet { points: Vec::new(), vanishing: all_branches() };
    }
    let g = zgcd(f, &ht);
    let mut vanishing = Vec::new();
    let fprime = if g.deg_y().unwrap_or(0) >= 1 {
        for (k, cell) in dec.intervals.iter().enumerate() {
            if cell.m == 0 {
                continue;
            }
            let mut xi = RealAlgebraic::from_rational(cell.sample.clone());
            let seps = fiber_separators(f, &mut xi, cell.m);
            for i in hits_at(f, &mut xi, &seps, &g) {
                vanishing.push((k, i));
            }
        }
        f.exact_div(&g).expect("gcd divides")
    } else {
        f.clone()
    };
    let r = res_y(&fprime, &ht);
    debug_assert!(!r.is_zero());
    let mut points = Vec::new();
    for mut xi in real_roots_z(&r) {
        let Location::Interval(k) = dec.locate(&mut xi) else {
            continue;
        };
        let m = dec.intervals[k].m;
        if m == 0 {
            continue;
        }
        let seps = fiber_separators(f, &mut xi, m);
        let hits: Vec<usize> = hits_at(f, &mut xi, &seps, &ht)
            .into_iter()
            .filter(|i| !vanishing.contains(&(k, *i)))
            .collect();
        if !hits.is_empty() {
            points.push((k, xi, hits));
        }
    }
    BranchZeroSet { points, vanishing }
}
