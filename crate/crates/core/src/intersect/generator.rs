use rand::seq::index::sample;
use rand::Rng;

use super::CurveSystem;
use crate::poly::{DenseBiPoly, Rational, SparseBiPoly};

/// Ranges for random instances: `1 <= d <= d_max`, `1 <= t <= t_max`,
/// integer coefficients in `[-coeff, coeff]`, exponents of `G` in
/// `[0, exp_max]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub d_max: usize,
    pub t_max: usize,
    pub coeff: i64,
    pub exp_max: u32,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig { d_max: 4, t_max: 5, coeff: 5, exp_max: 4 }
    }
}

fn nonzero<R: Rng + ?Sized>(rng: &mut R, c: i64) -> i64 {
    let v = rng.gen_range(1..=c);
    if rng.gen_bool(0.5) {
        -v
    } else {
        v
    }
}

/// Dense polynomial of exact total degree `d` with every monomial of degree
/// at most `d` drawn uniformly from `[-c, c]`.
pub fn random_dense<R: Rng + ?Sized>(rng: &mut R, d: usize, c: i64) -> DenseBiPoly {
    assert!(c >= 1);
    let mut terms = Vec::new();
    for i in 0..=d {
        for j in 0..=d - i {
            terms.push((rng.gen_range(-c..=c), i, j));
        }
    }
    if terms.iter().all(|&(v, i, j)| v == 0 || i + j < d) {
        let i = rng.gen_range(0..=d);
        let k = terms.iter().position(|&(_, a, b)| a == i && b == d - i).unwrap();
        terms[k].0 = nonzero(rng, c);
    }
    DenseBiPoly::from_int_terms(&terms)
}

/// `t` distinct exponent pairs in `[0, emax]^2` with nonzero coefficients in
/// `[-c, c]`.
pub fn random_sparse<R: Rng + ?Sized>(rng: &mut R, t: usize, c: i64, emax: u32) -> SparseBiPoly {
    let side = emax as usize + 1;
    assert!(t <= side * side, "not enough exponent pairs");
    let terms = sample(rng, side * side, t)
        .into_iter()
        .map(|k| (Rational::from_integer(nonzero(rng, c).into()), (k / side) as u64, (k % side) as u64))
        .collect();
    SparseBiPoly::new(terms).expect("small exponents")
}

pub fn random_system<R: Rng + ?Sized>(
    rng: &mut R,
    d: usize,
    t: usize,
    c: i64,
    emax: u32,
) -> CurveSystem {
    let f = random_dense(rng, d.max(1), c);
    let g = random_sparse(rng, t, c, emax);
    CurveSystem::new(f, g).expect("degree at least one")
}

/// Draws `d` and `t` first, then the system.
pub fn random_system_in<R: Rng + ?Sized>(rng: &mut R, cfg: &GeneratorConfig) -> CurveSystem {
    let d = rng.gen_range(1..=cfg.d_max);
    let t = rng.gen_range(1..=cfg.t_max);
    random_system(rng, d, t, cfg.coeff, cfg.exp_max)
}
