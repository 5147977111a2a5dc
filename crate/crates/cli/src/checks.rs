use fewcurve::bounds::{
    interval_count_bound, off_interval_bound, paper_bound_general, paper_bound_irreducible,
    BoundTable,
};
use fewcurve::implicit::{implicit_numerator, phi_jet_unchecked};
use fewcurve::intersect::{
    count_solutions, decompose, oracle_count, random_dense, random_system_in, trace_branch,
    CountReport, CurveSystem, GeneratorConfig, Location, OracleCount, Route, Status,
};
use fewcurve::poly::{DenseBiPoly, Rational};
use fewcurve::wronskian::{build_ts, wronskian_direct, BasisFamily};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::{encode_dense, encode_sparse, parse_system, CliError, Report, RunConfig};

/// Instance `i` draws from its own stream, so rows do not depend on the
/// order in which workers finish.
fn instance_rng(seed: u64, i: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i as u64);
    rng
}

fn generator(cfg: &RunConfig) -> GeneratorConfig {
    // enough exponent pairs for t_max distinct monomials
    let mut exp_max = 4u32;
    while ((exp_max + 1) * (exp_max + 1)) < cfg.t_max as u32 {
        exp_max += 1;
    }
    GeneratorConfig { d_max: cfg.d_max, t_max: cfg.t_max, coeff: cfg.coeff_max, exp_max }
}

fn par_rows<F>(n: usize, f: F) -> Result<Vec<Vec<String>>, CliError>
where
    F: Fn(usize) -> Result<Vec<Vec<String>>, CliError> + Send + Sync,
{
    let chunks: Vec<Vec<Vec<String>>> = (0..n).into_par_iter().map(f).collect::<Result<_, _>>()?;
    Ok(chunks.into_iter().flatten().collect())
}

fn flag(b: bool) -> String {
    b.to_string()
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn route_name(r: Route) -> &'static str {
    match r {
        Route::LinearInY => "linear_in_y",
        Route::Vertical => "vertical",
        Route::Delineation => "delineation",
        Route::CommonFactor => "common_factor",
    }
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Finite => "finite",
        Status::Infinite => "infinite",
    }
}

const COUNT_COLUMNS: &[&str] = &[
    "index",
    "d",
    "t",
    "t_reduced",
    "status",
    "route",
    "count",
    "s_on",
    "s_off",
    "critical",
    "intervals",
    "component_bound",
    "bound_irreducible",
    "bound_general",
    "bound",
    "within_bound",
    "f",
    "g",
];

fn count_row(i: usize, sys: &CurveSystem, r: &CountReport) -> Vec<String> {
    let (d, t) = (sys.d() as u64, sys.t() as u64);
    vec![
        i.to_string(),
        d.to_string(),
        t.to_string(),
        r.t_reduced.to_string(),
        status_name(r.status).into(),
        route_name(r.route).into(),
        opt(r.total),
        r.s_on.to_string(),
        r.s_off.to_string(),
        r.critical_count.to_string(),
        r.per_interval.len().to_string(),
        opt(r.component_bound.as_ref()),
        paper_bound_irreducible(d, t).to_string(),
        paper_bound_general(d, t).to_string(),
        r.bound.to_string(),
        flag(r.within_bound),
        encode_dense(&sys.f),
        encode_sparse(&sys.g),
    ]
}

fn given_system(cfg: &RunConfig) -> Result<Option<CurveSystem>, CliError> {
    match (&cfg.f_path, &cfg.g_path) {
        (Some(f), Some(g)) => Ok(Some(parse_system(f, g)?)),
        _ => Ok(None),
    }
}

pub(crate) fn count(cfg: &RunConfig) -> Result<Report, CliError> {
    let mut report = Report::new("count", COUNT_COLUMNS);
    if let Some(sys) = given_system(cfg)? {
        let r = count_solutions(&sys)?;
        report.push(count_row(0, &sys, &r));
        return Ok(report);
    }
    let gen = generator(cfg);
    for row in par_rows(cfg.n_instances, |i| {
        let sys = random_system_in(&mut instance_rng(cfg.seed, i), &gen);
        let r = count_solutions(&sys)?;
        Ok(vec![count_row(i, &sys, &r)])
    })? {
        report.push(row);
    }
    Ok(report)
}

pub(crate) fn bounds(cfg: &RunConfig) -> Result<Report, CliError> {
    let table = BoundTable::default();
    let mut columns = vec!["d", "t", "g_degree", "khovanskii_l", "khovanskii_n"];
    columns.extend(table.entries().iter().map(|(k, _)| *k));
    let mut report = Report::new("bounds", &columns);
    let mut push = |tab: BoundTable| {
        let mut row = vec![
            tab.d.to_string(),
            tab.t.to_string(),
            opt(tab.g_degree),
            tab.khovanskii_params.0.to_string(),
            tab.khovanskii_params.1.to_string(),
        ];
        row.extend(tab.entries().into_iter().map(|(_, v)| v));
        report.push(row);
    };
    if let Some(sys) = given_system(cfg)? {
        push(BoundTable::new(sys.d() as u64, sys.t() as u64, sys.g.total_degree()));
        return Ok(report);
    }
    for d in 1..=cfg.d_max as u64 {
        for t in 1..=cfg.t_max as u64 {
            for g in 1..=cfg.d_max as u64 {
                push(BoundTable::new(d, t, Some(g)));
            }
        }
    }
    Ok(report)
}

const VERIFY_COLUMNS: &[&str] = &[
    "index",
    "d",
    "t",
    "status",
    "route",
    "count",
    "oracle",
    "bound",
    "agree",
    "within_bound",
    "intervals_ok",
    "branches_ok",
    "v_sum_ok",
    "s_off_ok",
    "resultant_degree_ok",
    "pass",
    "f",
    "g",
];

fn verify_row(i: usize, sys: &CurveSystem) -> Result<Vec<String>, CliError> {
    let r = count_solutions(sys)?;
    let oracle = oracle_count(sys)?;
    let d = sys.d();
    let agree = match (r.status, oracle) {
        (Status::Finite, OracleCount::Finite(n)) => r.total == Some(n),
        (Status::Infinite, OracleCount::Infinite) => true,
        _ => false,
    };
    let big = |v: usize| BigInt::from(v);
    // structural checks apply to the delineation route only
    let structural = r.route == Route::Delineation;
    let check = |ok: bool| if structural { flag(ok) } else { String::new() };
    let intervals_ok = big(r.per_interval.len()) <= interval_count_bound(d as u64);
    let branches_ok = r.branch_counts.iter().all(|&m| m <= d);
    let v_sum_ok = r.v_counts.iter().sum::<usize>() <= d;
    let s_off_ok = big(r.s_off - r.s_off_vertical) <= off_interval_bound(d as u64);
    let res_ok = r.resultant_degree.is_none_or(|k| k <= 2 * d * d - d);
    let pass = agree
        && r.within_bound
        && (!structural || (intervals_ok && branches_ok && v_sum_ok && s_off_ok && res_ok));
    let oracle_text = match oracle {
        OracleCount::Finite(n) => n.to_string(),
        OracleCount::Infinite => "infinite".into(),
    };
    Ok(vec![
        i.to_string(),
        d.to_string(),
        sys.t().to_string(),
        status_name(r.status).into(),
        route_name(r.route).into(),
        opt(r.total),
        oracle_text,
        r.bound.to_string(),
        flag(agree),
        flag(r.within_bound),
        check(intervals_ok),
        check(branches_ok),
        check(v_sum_ok),
        check(s_off_ok),
        check(res_ok),
        flag(pass),
        encode_dense(&sys.f),
        encode_sparse(&sys.g),
    ])
}

pub(crate) fn verify(cfg: &RunConfig) -> Result<Report, CliError> {
    let mut report = Report::new("verify", VERIFY_COLUMNS);
    if let Some(sys) = given_system(cfg)? {
        report.push(verify_row(0, &sys)?);
        return Ok(report);
    }
    let gen = generator(cfg);
    for row in par_rows(cfg.n_instances, |i| {
        let sys = random_system_in(&mut instance_rng(cfg.seed, i), &gen);
        Ok(vec![verify_row(i, &sys)?])
    })? {
        report.push(row);
    }
    Ok(report)
}

/// Highest derivative order checked.
const DERIV_ORDER: usize = 4;
/// Finite-difference step `10^-8`. Traced values are exact to `10^-70`, so
/// round-off stays near `10^-38` even at order four and truncation dominates.
const STEP_DIGITS: u32 = 8;
const TRACE_DIGITS: u32 = 70;
/// Attempts at drawing a curve with a usable branch before giving up.
const ATTEMPTS: usize = 50;

const DERIV_COLUMNS: &[&str] = &[
    "index",
    "k",
    "d",
    "x",
    "interval",
    "branch",
    "step",
    "exact",
    "finite_difference",
    "relative_error",
    "degree_ok",
    "pass",
    "f",
];

/// Order-`k` central difference from values at `x - 2h, ..., x + 2h`.
pub(crate) fn central_difference(k: usize, v: &[Rational], h: &Rational) -> Rational {
    let w: [i64; 5] = match k {
        1 => [0, -1, 0, 1, 0],
        2 => [0, 1, -2, 1, 0],
        3 => [-1, 2, 0, -2, 1],
        4 => [1, -4, 6, -4, 1],
        _ => panic!("difference order {k} not supported"),
    };
    let scale = if k % 2 == 1 { 2 } else { 1 };
    let num: Rational = v.iter().zip(w).map(|(a, c)| a * Rational::from_integer(c.into())).sum();
    num / (Rational::from_integer(scale.into()) * num_traits::pow(h.clone(), k))
}

fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn deriv_rows(cfg: &RunConfig, i: usize) -> Result<Vec<Vec<String>>, CliError> {
    let mut rng = instance_rng(cfg.seed, i);
    let precision = Rational::new(BigInt::one(), BigInt::from(10).pow(TRACE_DIGITS));
    for _ in 0..ATTEMPTS {
        let d = rng.gen_range(1..=cfg.d_max);
        let f = random_dense(&mut rng, d, cfg.coeff_max);
        if f.deg_y().unwrap_or(0) == 0 {
            continue;
        }
        let Ok(dec) = decompose(&f) else { continue };
        let branches = dec.branches();
        if branches.is_empty() {
            continue;
        }
        let branch = &branches[rng.gen_range(0..branches.len())];
        let points = dec.rational_points(branch.interval, 3);
        let x0 = points[1].clone();
        let mut h = Rational::new(BigInt::one(), BigInt::from(10).pow(STEP_DIGITS));
        let inside = |h: &Rational| {
            [-2i64, 2].iter().all(|&j| {
                dec.locate_rational(&(&x0 + h * Rational::from_integer(j.into())))
                    == Location::Interval(branch.interval)
            })
        };
        while !inside(&h) {
            h /= Rational::from_integer(2.into());
        }
        let mut values = Vec::with_capacity(5);
        for j in -2i64..=2 {
            let x = &x0 + &h * Rational::from_integer(j.into());
            values.push(trace_branch(&dec, branch, &x, &precision)?.midpoint());
        }
        let Ok(jet) = phi_jet_unchecked(&f, DERIV_ORDER, &x0, &values[2]) else { continue };
        let mut rows = Vec::with_capacity(DERIV_ORDER);
        for k in 1..=DERIV_ORDER {
            let exact = &jet[k - 1];
            let fd = central_difference(k, &values, &h);
            let scale = if exact.abs() > Rational::one() { exact.abs() } else { Rational::one() };
            let rel = (&fd - exact).abs() / scale;
            let der = implicit_numerator(&f, k).map_err(|e| CliError::Config(e.to_string()))?;
            let degree_ok = (der.formal_degree as usize) < 2 * k
                && der.composed_degree.is_none_or(|g| g <= (2 * k - 1) * d);
            let pass = degree_ok && rel <= cfg.tolerance;
            rows.push(vec![
                i.to_string(),
                k.to_string(),
                d.to_string(),
                x0.to_string(),
                branch.interval.to_string(),
                branch.index.to_string(),
                h.to_string(),
                format!("{:.12e}", to_f64(exact)),
                format!("{:.12e}", to_f64(&fd)),
                format!("{:.3e}", to_f64(&rel)),
                flag(degree_ok),
                flag(pass),
                encode_dense(&f),
            ]);
        }
        return Ok(rows);
    }
    Err(CliError::Config(format!("instance {i}: no curve with a smooth branch in {ATTEMPTS} draws")))
}

pub(crate) fn derivcheck(cfg: &RunConfig) -> Result<Report, CliError> {
    let mut report = Report::new("derivcheck", DERIV_COLUMNS);
    for row in par_rows(cfg.n_instances, |i| deriv_rows(cfg, i))? {
        report.push(row);
    }
    Ok(report)
}

const WRONSK_COLUMNS: &[&str] = &[
    "index", "d", "s", "family", "x", "y", "direct", "factored_equal", "deg_x", "deg_y", "cap",
    "pass", "f",
];

fn nonzero_rational<R: Rng>(rng: &mut R, c: i64) -> Rational {
    let p = rng.gen_range(1..=c);
    let p = if rng.gen_bool(0.5) { -p } else { p };
    Rational::new(p.into(), rng.gen_range(1..=3i64).into())
}

fn wronsk_rows(cfg: &RunConfig, i: usize) -> Result<Vec<Vec<String>>, CliError> {
    let mut rng = instance_rng(cfg.seed, i);
    let emax = generator(cfg).exp_max;
    let side = emax as usize + 1;
    for _ in 0..ATTEMPTS {
        let d = rng.gen_range(1..=cfg.d_max);
        let f0 = random_dense(&mut rng, d, cfg.coeff_max);
        let (x, y) = (nonzero_rational(&mut rng, cfg.coeff_max), nonzero_rational(&mut rng, cfg.coeff_max));
        let f = f0.sub(&DenseBiPoly::constant(f0.eval(&x, &y)));
        let fy = f.partial(0, 1).eval(&x, &y);
        if f.degree() != Some(d) || fy.is_zero() {
            continue;
        }
        let s = rng.gen_range(1..=cfg.t_max);
        let pairs: Vec<(u32, u32)> = sample(&mut rng, side * side, s)
            .into_iter()
            .map(|k| ((k / side) as u32, (k % side) as u32))
            .collect();
        let family = BasisFamily::new(pairs).map_err(|e| CliError::Config(e.to_string()))?;
        let wr = |e: fewcurve::wronskian::WronskianError| CliError::Config(e.to_string());
        let direct = wronskian_direct(&f, &family, s, &x, &y).map_err(wr)?;
        let ts = build_ts(&f, &family, s).map_err(wr)?;
        let equal = ts.eval(&x, &y, &fy).map_err(wr)? == direct;
        let cap = (1 + 2 * d) * (s * (s - 1) / 2);
        let (dx, dy) = (ts.ts.deg_x().unwrap_or(0), ts.ts.deg_y().unwrap_or(0));
        let pass = equal && dx <= cap && dy <= cap;
        let fam: Vec<String> = family.pairs().iter().map(|(a, b)| format!("{a} {b}")).collect();
        return Ok(vec![vec![
            i.to_string(),
            d.to_string(),
            s.to_string(),
            fam.join(";"),
            x.to_string(),
            y.to_string(),
            direct.to_string(),
            flag(equal),
            dx.to_string(),
            dy.to_string(),
            cap.to_string(),
            flag(pass),
            encode_dense(&f),
        ]]);
    }
    Err(CliError::Config(format!("instance {i}: no smooth point in {ATTEMPTS} draws")))
}

pub(crate) fn wronskcheck(cfg: &RunConfig) -> Result<Report, CliError> {
    let mut report = Report::new("wronskcheck", WRONSK_COLUMNS);
    for row in par_rows(cfg.n_instances, |i| wronsk_rows(cfg, i))? {
        report.push(row);
    }
    Ok(report)
}
