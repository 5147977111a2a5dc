use num_bigint::BigInt;

use super::decompose::{decompose_z, squarefree_full, zeros_on_branches, Decomposition};
use super::sparsity::{reduce_sparsity_with, support_dependence_with};
use super::{CurveSystem, IntersectError};
use crate::bounds::{component_bound, paper_bound_general, paper_bound_irreducible};
use crate::poly::bigcd::zgcd;
use crate::poly::resultant::res_y;
use crate::poly::{ZBiPoly, ZPoly, DEFAULT_DENSIFY_BUDGET};
use crate::roots::{fiber_common_real_roots, real_roots_z};
use crate::wronskian::{build_ts, BasisFamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Finite,
    Infinite,
}

/// Which branch of the pipeline produced the count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    /// `F = cY`: roots of `G(X, 0)`.
    LinearInY,
    /// `F_Y = 0`: vertical lines over the roots of `F(X)`.
    Vertical,
    /// Branches over the intervals plus fibers over the critical abscissae.
    Delineation,
    /// `F` and `G` share a factor with infinitely many real points.
    CommonFactor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PipelineOptions {
    /// Largest exponent of `G` that may be densified.
    pub densify_budget: u64,
    /// Drop monomials of `G` while its support is dependent modulo `F`.
    pub reduce_sparsity: bool,
    /// Count the zeros of each `T_s` along the branches.
    pub compute_rs: bool,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions { densify_budget: DEFAULT_DENSIFY_BUDGET, reduce_sparsity: true, compute_rs: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub status: Status,
    pub route: Route,
    /// Number of distinct real solutions when finite.
    pub total: Option<usize>,
    /// `d (2d - 1)` when the solution set is infinite.
    pub component_bound: Option<BigInt>,
    /// Solutions over the open intervals.
    pub s_on: usize,
    /// Solutions over the critical abscissae.
    pub s_off: usize,
    /// Solutions over each open interval.
    pub per_interval: Vec<usize>,
    /// `m_I` for each interval.
    pub branch_counts: Vec<usize>,
    /// `v_I` for each interval.
    pub v_counts: Vec<usize>,
    pub critical_count: usize,
    /// Critical fibers that are whole vertical lines of `F`.
    pub vertical_fibers: usize,
    /// Part of `s_off` lying on those vertical lines.
    pub s_off_vertical: usize,
    /// Degree of `Res_Y(F, F_Y)` for the squarefree part of `F`.
    pub resultant_degree: Option<usize>,
    pub d: usize,
    pub t_original: usize,
    pub t_reduced: usize,
    /// True when `F` is known to be irreducible; selects the bound.
    pub irreducible_certified: bool,
    pub bound: BigInt,
    pub within_bound: bool,
    /// Zeros of `T_s` along the branches, `s = 1..=t_reduced`.
    pub rs: Option<Vec<usize>>,
}

impl CountReport {
    fn new(sys: &CurveSystem, route: Route) -> Self {
        let d = sys.d();
        let t = sys.t();
        let irreducible_certified = d == 1;
        let bound = if irreducible_certified {
            paper_bound_irreducible(d as u64, t as u64)
        } else {
            paper_bound_general(d as u64, t as u64)
        };
        CountReport {
            status: Status::Finite,
            route,
            total: None,
            component_bound: None,
            s_on: 0,
            s_off: 0,
            per_interval: Vec::new(),
            branch_counts: Vec::new(),
            v_counts: Vec::new(),
            critical_count: 0,
            vertical_fibers: 0,
            s_off_vertical: 0,
            resultant_degree: None,
            d,
            t_original: t,
            t_reduced: t,
            irreducible_certified,
            bound,
            within_bound: true,
            rs: None,
        }
    }

    fn finish(mut self) -> Self {
        let total = self.s_on + self.s_off;
        self.total = Some(total);
        self.within_bound = BigInt::from(total) <= self.bound;
        self
    }

    fn infinite(mut self) -> Self {
        self.status = Status::Infinite;
        self.route = Route::CommonFactor;
        self.component_bound = Some(component_bound(self.d as u64));
        self.total = None;
        self
    }
}

/// Outcome of the elimination cross-check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleCount {
    Finite(usize),
    Infinite,
}

/// True iff `g = 0` has infinitely many real points.
pub(crate) fn real_zero_set_infinite(g: &ZBiPoly) -> bool {
    if g.is_zero() {
        return true;
    }
    let c = g.content_x();
    if c.degree().unwrap_or(0) >= 1 && !real_roots_z(&c).is_empty() {
        return true;
    }
    let p = squarefree_full(&ZBiPoly::new(g.primitive_y().coeffs().to_vec()));
    if p.deg_y().unwrap_or(0) == 0 {
        return false;
    }
    let dec = decompose_z(&p).expect("squarefree in Y");
    dec.intervals.iter().any(|c| c.m > 0)
}

fn is_c_times_y(f: &ZBiPoly) -> bool {
    f.deg_y() == Some(1) && f.coeff(0).is_zero() && f.coeff(1).is_constant()
}

pub fn count_solutions(sys: &CurveSystem) -> Result<CountReport, IntersectError> {
    count_solutions_with(sys, &PipelineOptions::default())
}

pub fn count_solutions_with(
    sys: &CurveSystem,
    opts: &PipelineOptions,
) -> Result<CountReport, IntersectError> {
    let fz = sys.f.to_zbi();
    if is_c_times_y(&fz) {
        return linear_in_y(sys, opts);
    }
    let gz = sys.g.densify(opts.densify_budget)?.to_zbi();
    let common = zgcd(&fz, &gz);
    let has_common = common.total_degree().unwrap_or(0) >= 1;
    let mut report = CountReport::new(sys, Route::Delineation);
    if has_common && real_zero_set_infinite(&common) {
        return Ok(report.infinite());
    }
    let mut reduced = sys.clone();
    if opts.reduce_sparsity && !has_common {
        while reduced.t() > 1
            && support_dependence_with(&reduced.f, &reduced.g.support(), opts.densify_budget)?
                .is_some()
        {
            reduced = reduce_sparsity_with(&reduced, opts.densify_budget)?;
        }
        report.t_reduced = reduced.t();
    }
    let gz = reduced.g.densify(opts.densify_budget)?.to_zbi();
    if fz.deg_y() == Some(0) {
        report.route = Route::Vertical;
        for mut r in real_roots_z(&fz.coeff(0)) {
            match fiber_common_real_roots(&mut r, &fz, &gz) {
                Some(k) => report.s_off += k,
                None => return Ok(report.infinite()),
            }
            report.critical_count += 1;
            report.vertical_fibers += 1;
        }
        report.s_off_vertical = report.s_off;
        return Ok(report.finish());
    }
    let w = squarefree_full(&fz);
    let dec = decompose_z(&w)?;
    let zs = zeros_on_branches(&dec, &gz);
    if !zs.vanishing.is_empty() {
        return Ok(report.infinite());
    }
    report.s_on = zs.total();
    report.per_interval = zs.per_interval(dec.intervals.len());
    report.branch_counts = dec.branch_counts();
    report.v_counts = dec.intervals.iter().map(|c| c.v).collect();
    report.critical_count = dec.critical.len();
    report.resultant_degree = dec.discriminant.degree();
    for xi in &dec.critical {
        let mut xi = xi.clone();
        let vertical = crate::roots::fiber_is_zero(&mut xi, &w);
        match fiber_common_real_roots(&mut xi, &w, &gz) {
            Some(k) => {
                report.s_off += k;
                if vertical {
                    report.vertical_fibers += 1;
                    report.s_off_vertical += k;
                }
            }
            None => return Ok(report.infinite()),
        }
    }
    if opts.compute_rs && !reduced.g.is_zero() {
        report.rs = rs_counts(&reduced, &dec);
    }
    Ok(report.finish())
}

fn linear_in_y(sys: &CurveSystem, opts: &PipelineOptions) -> Result<CountReport, IntersectError> {
    let mut report = CountReport::new(sys, Route::LinearInY);
    let g0 = sys.g.restrict_y0();
    report.branch_counts = vec![1];
    report.v_counts = vec![0];
    if g0.is_zero() {
        return Ok(report.infinite());
    }
    let n = g0.count_real_roots(opts.densify_budget)?;
    report.s_on = n;
    report.per_interval = vec![n];
    Ok(report.finish())
}

fn rs_counts(sys: &CurveSystem, dec: &Decomposition) -> Option<Vec<usize>> {
    let pairs: Vec<(u32, u32)> = sys.g.terms().iter().map(|(_, a, b)| (*a, *b)).collect();
    let family = BasisFamily::new(pairs).ok()?;
    let mut out = Vec::with_capacity(family.len());
    for s in 1..=family.len() {
        let ts = build_ts(&sys.f, &family, s).ok()?;
        let tz = ts.ts.to_zbi();
        if tz.is_zero() {
            return None;
        }
        out.push(zeros_on_branches(dec, &tz).total());
    }
    Some(out)
}

/// Independent count by elimination: candidate abscissae are the real roots
/// of `Res_Y(F, G)` (after removing a common factor), and each candidate
/// fiber is checked exactly.
pub fn oracle_count(sys: &CurveSystem) -> Result<OracleCount, IntersectError> {
    oracle_count_with(sys, DEFAULT_DENSIFY_BUDGET)
}

pub fn oracle_count_with(sys: &CurveSystem, budget: u64) -> Result<OracleCount, IntersectError> {
    let fz = sys.f.to_zbi();
    let gz = sys.g.densify(budget)?.to_zbi();
    let common = zgcd(&fz, &gz);
    let mut candidates = ZPoly::one();
    let (fr, gr) = if common.total_degree().unwrap_or(0) >= 1 {
        if real_zero_set_infinite(&common) {
            return Ok(OracleCount::Infinite);
        }
        // the isolated real points of the common factor sit over the roots
        // of its discriminant or of its content
        let cs = squarefree_full(&common);
        candidates = candidates.mul(&cs.content_x());
        if cs.deg_y().unwrap_or(0) >= 1 {
            candidates = candidates.mul(&res_y(&cs, &cs.derivative_y()));
        }
        let fr = fz.exact_div(&common).expect("gcd divides");
        let gr = if gz.is_zero() { gz.clone() } else { gz.exact_div(&common).expect("gcd divides") };
        (fr, gr)
    } else {
        (fz.clone(), gz.clone())
    };
    if !gr.is_zero() {
        let r = res_y(&fr, &gr);
        debug_assert!(!r.is_zero());
        candidates = candidates.mul(&r);
    }
    let mut total = 0;
    for mut x in real_roots_z(&candidates) {
        match fiber_common_real_roots(&mut x, &fz, &gz) {
            Some(k) => total += k,
            None => return Ok(OracleCount::Infinite),
        }
    }
    Ok(OracleCount::Finite(total))
}
