//! One test per acceptance criterion. Each prints a single PASS/FAIL line;
//! run with `--nocapture` to see them.

use std::cmp::Ordering;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use fewcurve::bounds::{
    interval_count_bound, khovanskii, khovanskii_params, off_interval_bound, paper_bound_general,
    paper_bound_irreducible,
};
use fewcurve::implicit::{enumerate_partitions, implicit_numerator, phi_jet_unchecked, power_derivative};
use fewcurve::intersect::{
    count_solutions, decompose, oracle_count, random_dense, random_system_in, support_dependence,
    trace_branch, zeros_on_branches, CountReport, CurveSystem, GeneratorConfig, Location,
    OracleCount, Route, Status,
};
use fewcurve::poly::{int, rat, DenseBiPoly, Rational, SparseBiPoly, UniPoly, ZBiPoly};
use fewcurve::roots::{real_roots_z, RealAlgebraic};
use fewcurve::wronskian::{build_ts, theorem1_bound, wronskian_direct, BasisFamily};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CAMPAIGN_SIZE: usize = 500;
const CAMPAIGN_SEED: u64 = 20_240_601;
const CAMPAIGN_TIME_LIMIT: Duration = Duration::from_secs(600);
const FD_TOLERANCE: f64 = 1e-6;

fn report(id: u32, name: &str, ok: bool, detail: String) {
    println!("[AC{id}] {} {name}: {detail}", if ok { "PASS" } else { "FAIL" });
}

struct CampaignRow {
    sys: CurveSystem,
    report: CountReport,
    oracle: OracleCount,
}

struct Campaign {
    rows: Vec<CampaignRow>,
    elapsed: Duration,
}

fn campaign() -> &'static Campaign {
    static CELL: OnceLock<Campaign> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(CAMPAIGN_SEED);
        let cfg = GeneratorConfig::default();
        let start = Instant::now();
        let rows = (0..CAMPAIGN_SIZE)
            .map(|_| {
                let sys = random_system_in(&mut rng, &cfg);
                let report = count_solutions(&sys).expect("pipeline");
                let oracle = oracle_count(&sys).expect("oracle");
                CampaignRow { sys, report, oracle }
            })
            .collect();
        Campaign { rows, elapsed: start.elapsed() }
    })
}

#[test]
fn ac1_bound_soundness_campaign() {
    let c = campaign();
    let mut failures = Vec::new();
    let mut finite = 0;
    for (i, row) in c.rows.iter().enumerate() {
        let r = &row.report;
        let ok = match (r.status, row.oracle) {
            (Status::Finite, OracleCount::Finite(n)) => {
                finite += 1;
                let total = r.total.unwrap();
                total == n
                    && BigInt::from(total) <= paper_bound_general(row.sys.d() as u64, row.sys.t() as u64)
            }
            (Status::Infinite, OracleCount::Infinite) => true,
            _ => false,
        };
        if !ok {
            failures.push(format!("#{i}: {} -> {:?} vs {:?}", row.sys, r.total, row.oracle));
        }
    }
    let in_time = c.elapsed < CAMPAIGN_TIME_LIMIT;
    let ok = failures.is_empty() && in_time;
    report(
        1,
        "bound soundness campaign",
        ok,
        format!(
            "{} systems ({finite} finite), {} failures, {:.1}s",
            c.rows.len(),
            failures.len(),
            c.elapsed.as_secs_f64()
        ),
    );
    assert!(ok, "{failures:#?}");
}

fn central_difference(k: usize, v: &[Rational], h: &Rational) -> Rational {
    // v holds values at x - 2h, ..., x + 2h
    let w: [i64; 5] = match k {
        1 => [0, -1, 0, 1, 0],
        2 => [0, 1, -2, 1, 0],
        3 => [-1, 2, 0, -2, 1],
        4 => [1, -4, 6, -4, 1],
        _ => unreachable!(),
    };
    let scale = match k {
        1 | 3 => int(2),
        _ => int(1),
    };
    let num: Rational = v.iter().zip(w).map(|(a, c)| a * int(c)).sum();
    num / (scale * num_traits::pow(h.clone(), k))
}

fn to_f64(r: &Rational) -> f64 {
    num_traits::ToPrimitive::to_f64(r).unwrap()
}

/// Name, terms, sample abscissa, branch index.
type Curve<'a> = (&'a str, &'a [(i64, usize, usize)], Rational, usize);

#[test]
fn ac2_implicit_derivatives_against_finite_differences() {
    let curves: [Curve; 4] = [
        ("Y - X^2", &[(1, 0, 1), (-1, 2, 0)], rat(1, 3), 1),
        ("X^2 + Y^2 - 1", &[(1, 2, 0), (1, 0, 2), (-1, 0, 0)], rat(1, 5), 2),
        ("XY - 1", &[(1, 1, 1), (-1, 0, 0)], int(2), 1),
        ("Y^3 - 3Y - X", &[(1, 0, 3), (-3, 0, 1), (-1, 1, 0)], rat(1, 2), 2),
    ];
    let h = rat(1, 10_000);
    let precision = Rational::new(BigInt::one(), BigInt::from(10).pow(45));
    let mut worst = 0.0f64;
    let mut failures = Vec::new();
    for (name, terms, x0, index) in curves {
        let f = DenseBiPoly::from_int_terms(terms);
        let d = f.degree().unwrap();
        let dec = decompose(&f).unwrap();
        let Location::Interval(k) = dec.locate_rational(&x0) else { panic!("critical sample") };
        let branch = dec.branches().into_iter().find(|b| b.interval == k && b.index == index).unwrap();
        let trace = |x: &Rational| trace_branch(&dec, &branch, x, &precision).unwrap().midpoint();
        let values: Vec<Rational> =
            (-2..=2).map(|j| trace(&(&x0 + &h * int(j)))).collect();
        let jet = phi_jet_unchecked(&f, 4, &x0, &values[2]).unwrap();
        for kk in 1..=4 {
            let exact = to_f64(&jet[kk - 1]);
            let fd = to_f64(&central_difference(kk, &values, &h));
            let err = (fd - exact).abs() / exact.abs().max(1.0);
            worst = worst.max(err);
            if err > FD_TOLERANCE {
                failures.push(format!("{name} k={kk}: exact {exact} fd {fd}"));
            }
            let der = implicit_numerator(&f, kk).unwrap();
            let composed_ok = der.composed_degree.is_none_or(|g| g <= (2 * kk - 1) * d);
            if der.formal_degree as usize > 2 * kk - 1 || !composed_ok {
                failures.push(format!("{name} k={kk}: degree bound"));
            }
        }
    }
    let ok = failures.is_empty();
    report(
        2,
        "implicit derivatives vs finite differences",
        ok,
        format!("4 curves, k <= 4, worst relative error {worst:.2e}"),
    );
    assert!(ok, "{failures:#?}");
}

fn binom2(s: usize) -> usize {
    s * s.saturating_sub(1) / 2
}

fn random_family<R: Rng>(rng: &mut R, s: usize, emax: u32) -> BasisFamily {
    let side = emax as usize + 1;
    let pairs = sample(rng, side * side, s)
        .into_iter()
        .map(|k| ((k / side) as u32, (k % side) as u32))
        .collect();
    BasisFamily::new(pairs).unwrap()
}

fn nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    let mut p = rng.gen_range(1..=5);
    if rng.gen_bool(0.5) {
        p = -p;
    }
    rat(p, rng.gen_range(1..=3))
}

#[test]
fn ac3_factored_wronskian_matches_determinant() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut cases, mut attempts) = (0, 0);
    let mut failures = Vec::new();
    while cases < 60 && attempts < 1000 {
        attempts += 1;
        let d = rng.gen_range(1..=3);
        let f0 = random_dense(&mut rng, d, 5);
        let (x0, y0) = (nonzero_rational(&mut rng), nonzero_rational(&mut rng));
        let f = f0.sub(&DenseBiPoly::constant(f0.eval(&x0, &y0)));
        if f.degree() != Some(d) || f.partial(0, 1).eval(&x0, &y0).is_zero() {
            continue;
        }
        let s = rng.gen_range(1..=4);
        let family = random_family(&mut rng, s, 4);
        let direct = wronskian_direct(&f, &family, s, &x0, &y0).unwrap();
        let ts = build_ts(&f, &family, s).unwrap();
        let fy = f.partial(0, 1).eval(&x0, &y0);
        let factored = ts.eval(&x0, &y0, &fy).unwrap();
        let cap = (1 + 2 * d) * binom2(s);
        let deg_ok = ts.ts.deg_x().unwrap_or(0) <= cap && ts.ts.deg_y().unwrap_or(0) <= cap;
        if direct != factored || !deg_ok {
            failures.push(format!("F = {f}, family {:?}, point ({x0}, {y0})", family.pairs()));
        }
        cases += 1;
    }
    let ok = failures.is_empty() && cases >= 50;
    report(
        3,
        "factored Wronskian",
        ok,
        format!("{cases} triples with d <= 3, s <= 4, {} mismatches", failures.len()),
    );
    assert!(ok, "{failures:#?}");
}

fn sort_algebraic(v: &mut [RealAlgebraic]) {
    // insertion sort: comparisons refine in place
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 {
            let (l, r) = v.split_at_mut(j);
            if r[0].cmp_algebraic(&mut l[j - 1]) == Ordering::Less {
                v.swap(j - 1, j);
                j -= 1;
            } else {
                break;
            }
        }
    }
}

#[test]
fn ac4_theorem1_soundness() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut cases, mut attempts, mut tight) = (0, 0, 0);
    let mut violations = Vec::new();
    while cases < 120 && attempts < 5000 {
        attempts += 1;
        let d = rng.gen_range(1..=3);
        let f = random_dense(&mut rng, d, 5);
        let Ok(dec) = decompose(&f) else { continue };
        let t = rng.gen_range(2..=4);
        let family = random_family(&mut rng, t, 3);
        let support: Vec<(u64, u64)> =
            family.pairs().iter().map(|&(a, b)| (a as u64, b as u64)).collect();
        if support_dependence(&f, &support).unwrap().is_some() {
            continue;
        }
        let live: Vec<usize> = (0..dec.intervals.len()).filter(|&k| dec.intervals[k].m > 0).collect();
        if live.is_empty() {
            continue;
        }
        let k = live[rng.gen_range(0..live.len())];
        let cell = &dec.intervals[k];
        let i = rng.gen_range(1..=cell.m);
        // cut the interval at x = 0 and at the zeros of the branch values
        let mut cuts: Vec<RealAlgebraic> = Vec::new();
        if dec.locate_rational(&int(0)) == Location::Interval(k) {
            cuts.push(RealAlgebraic::from_rational(int(0)));
        }
        let f0 = f.eval_y(&int(0));
        if !f0.is_zero() {
            for mut r in real_roots_z(&f0.to_zpoly()) {
                if dec.locate(&mut r) == Location::Interval(k) && r.rational() != Some(&int(0)) {
                    cuts.push(r);
                }
            }
        }
        sort_algebraic(&mut cuts);
        let mut ends: Vec<Option<RealAlgebraic>> = vec![cell.lo.clone()];
        ends.extend(cuts.into_iter().map(Some));
        ends.push(cell.hi.clone());
        let j = rng.gen_range(0..ends.len() - 1);
        let (lo, hi) = (ends[j].as_ref(), ends[j + 1].as_ref());
        let coeffs: Vec<(i64, usize, usize)> = family
            .pairs()
            .iter()
            .map(|&(a, b)| {
                let c = rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 };
                (c, a as usize, b as usize)
            })
            .collect();
        let g = DenseBiPoly::from_int_terms(&coeffs).to_zbi();
        let Some(measured) = zeros_on_branches(&dec, &g).count_on(k, i, lo, hi) else {
            continue;
        };
        let mut z = Vec::with_capacity(t);
        for s in 1..=t {
            let ts: ZBiPoly = build_ts(&f, &family, s).unwrap().ts.to_zbi();
            match zeros_on_branches(&dec, &ts).count_on(k, i, lo, hi) {
                Some(n) => z.push(n as u64),
                None => break,
            }
        }
        if z.len() < t {
            continue;
        }
        let bound = theorem1_bound(t, &z).unwrap();
        if measured as u64 > bound {
            violations.push(format!("F = {f}, G = {g:?}, branch ({k}, {i}): {measured} > {bound}"));
        }
        if measured as u64 == bound {
            tight += 1;
        }
        cases += 1;
    }
    let ok = violations.is_empty() && cases >= 100;
    report(
        4,
        "Theorem 1 soundness",
        ok,
        format!("{cases} cases, {} violations, {tight} attain the bound", violations.len()),
    );
    assert!(ok, "{violations:#?}");
}

#[test]
fn ac5_structural_bounds() {
    let c = campaign();
    let mut checked = 0;
    let mut failures = Vec::new();
    for (n, row) in c.rows.iter().enumerate() {
        let r = &row.report;
        if r.route != Route::Delineation || r.status != Status::Finite {
            continue;
        }
        let d = row.sys.d();
        let d64 = d as u64;
        let intervals_ok = BigInt::from(r.branch_counts.len()) <= interval_count_bound(d64);
        let m_ok = r.branch_counts.iter().all(|&m| m <= d);
        let v_ok = r.v_counts.iter().sum::<usize>() <= d;
        let s_off_ok = BigInt::from(r.s_off - r.s_off_vertical) <= off_interval_bound(d64);
        let res_ok = r.resultant_degree.is_none_or(|e| e + d <= 2 * d * d);
        if !(intervals_ok && m_ok && v_ok && s_off_ok && res_ok) {
            failures.push(format!("#{n}: {}", row.sys));
        }
        checked += 1;
    }
    let ok = failures.is_empty() && checked > 0;
    report(
        5,
        "structural bounds",
        ok,
        format!("{checked} decompositions checked, {} violations", failures.len()),
    );
    assert!(ok, "{failures:#?}");
}

fn uni_pow(p: &UniPoly, e: usize) -> UniPoly {
    (0..e).fold(UniPoly::constant(Rational::one()), |acc, _| acc.mul(p))
}

#[test]
fn ac6_power_derivative_and_partitions() {
    let base = UniPoly::from_i64(&[1, 0, 1]);
    let mut derivs = vec![base.clone()];
    for _ in 0..5 {
        let last = derivs.last().unwrap().derivative();
        derivs.push(last);
    }
    let mut mismatches = 0;
    for alpha in 2..=4usize {
        let mut direct = uni_pow(&base, alpha);
        for p in 0..=5 {
            if p > 0 {
                direct = direct.derivative();
            }
            let exp = power_derivative(p);
            let mut sum = UniPoly::zero();
            for (beta, s) in &exp.terms {
                let b = beta.eval(&int(alpha as i64));
                if b.is_zero() {
                    continue;
                }
                let mut term = uni_pow(&base, alpha - s.size() as usize).scale(&b);
                for (k, &m) in s.parts().iter().enumerate() {
                    term = term.mul(&uni_pow(&derivs[k + 1], m as usize));
                }
                sum = sum.add(&term);
            }
            if sum != direct {
                mismatches += 1;
            }
        }
    }
    let partition_numbers = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
    let counts_ok = (0..=10).all(|p| enumerate_partitions(p).len() == partition_numbers[p]);
    let ok = mismatches == 0 && counts_ok;
    report(
        6,
        "power derivative expansion",
        ok,
        format!("alpha 2..4, p <= 5: {mismatches} mismatches; partition counts p <= 10 ok: {counts_ok}"),
    );
    assert!(ok);
}

fn system(f: &[(i64, usize, usize)], g: &[(i64, u64, u64)]) -> CurveSystem {
    CurveSystem::new(DenseBiPoly::from_int_terms(f), SparseBiPoly::from_int_terms(g).unwrap()).unwrap()
}

/// The assembled bound recomputed from its displayed terms.
fn assembled(d: i64, t: i64) -> Rational {
    let mut sum = Rational::zero();
    for s in 1..=t {
        sum += rat(d * d, 4) + int(2 * (1 + 2 * d) * (s * (s - 1) / 2) * d);
    }
    int((2 * d * d - d + 1) * d * (t - 1) + 2 * d * t + 2 * t * d * d) + int(2) * sum
        + int(2 * d * d * d - d * d)
}

#[test]
fn ac7_known_values() {
    let line = &[(1, 0, 1), (-1, 1, 0)];
    let circle = &[(1, 2, 0), (1, 0, 2), (-1, 0, 0)];
    let line_circle = count_solutions(&system(line, &[(1, 2, 0), (1, 0, 2), (-2, 0, 0)])).unwrap();
    let concentric = count_solutions(&system(circle, &[(1, 2, 0), (1, 0, 2), (-2, 0, 0)])).unwrap();
    let same_line = count_solutions(&system(line, &[(1, 0, 1), (-1, 1, 0)])).unwrap();
    let same_circle = count_solutions(&system(circle, &[(3, 2, 0), (3, 0, 2), (-3, 0, 0)])).unwrap();
    let ceil = |r: Rational| r.ceil().to_integer();
    let checks = [
        ("line/circle = 2", line_circle.total == Some(2)),
        ("concentric circles = 0", concentric.total == Some(0)),
        (
            "identical line infinite, bound 1",
            same_line.status == Status::Infinite && same_line.component_bound == Some(BigInt::from(1)),
        ),
        (
            "identical circle infinite, bound 6",
            same_circle.status == Status::Infinite
                && same_circle.component_bound == Some(BigInt::from(6)),
        ),
        ("irreducible(2,2) = 94", paper_bound_irreducible(2, 2) == BigInt::from(94)),
        ("general(2,2) = 95", paper_bound_general(2, 2) == BigInt::from(95)),
        ("assembled(2,2) = 94", ceil(assembled(2, 2)) == BigInt::from(94)),
        (
            "assembled formula agrees for d, t <= 6",
            (1..=6).all(|d| (1..=6).all(|t| ceil(assembled(d, t)) == paper_bound_irreducible(d as u64, t as u64))),
        ),
    ];
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    let ok = failed.is_empty();
    report(7, "known values", ok, format!("{} checks, failed: {failed:?}", checks.len()));
    assert!(ok);
}

#[test]
fn ac8_polynomial_vs_exponential_separation() {
    let mut failures = Vec::new();
    let mut min_ratio = f64::INFINITY;
    for t in 12..=30u64 {
        let (l, n) = khovanskii_params(2, t);
        let kh = khovanskii(l, n);
        let ours = paper_bound_general(2, t);
        if ours >= kh {
            failures.push(t);
        }
        let ratio = num_traits::ToPrimitive::to_f64(&kh).unwrap()
            / num_traits::ToPrimitive::to_f64(&ours).unwrap();
        min_ratio = min_ratio.min(ratio);
    }
    let ok = failures.is_empty();
    report(
        8,
        "polynomial vs exponential separation",
        ok,
        format!("d = 2, t = 12..30, failures at {failures:?}, smallest khovanskii/ours ratio {min_ratio:.3e}"),
    );
    assert!(ok);
}

#[test]
fn campaign_reports_are_consistent() {
    for row in &campaign().rows {
        let r = &row.report;
        if r.status == Status::Finite {
            assert_eq!(r.total, Some(r.s_on + r.s_off));
            assert!(r.total.unwrap() as i64 >= 0);
        } else {
            assert!(r.component_bound.as_ref().is_some_and(|b| b.is_positive()));
        }
    }
}
