#![allow(dead_code)]

use fewcurve::poly::{rat, DenseBiPoly, Rational};
use proptest::prelude::*;

/// Dense polynomial of total degree at most `d` with coefficients in `[-c, c]`.
pub fn dense_total(d: usize, c: i64) -> impl Strategy<Value = DenseBiPoly> {
    let n = (d + 1) * (d + 2) / 2;
    prop::collection::vec(-c..=c, n).prop_map(move |v| {
        let mut terms = Vec::with_capacity(n);
        let mut k = 0;
        for i in 0..=d {
            for j in 0..=d - i {
                terms.push((v[k], i, j));
                k += 1;
            }
        }
        DenseBiPoly::from_int_terms(&terms)
    })
}

/// Dense polynomial with `deg_X, deg_Y <= d`.
pub fn dense_box(d: usize, c: i64) -> impl Strategy<Value = DenseBiPoly> {
    prop::collection::vec(-c..=c, (d + 1) * (d + 1)).prop_map(move |v| {
        let terms: Vec<(i64, usize, usize)> =
            v.iter().enumerate().map(|(k, &a)| (a, k / (d + 1), k % (d + 1))).collect();
        DenseBiPoly::from_int_terms(&terms)
    })
}

/// Small rational `p/q` with `|p| <= 6`, `1 <= q <= 4`.
pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..=6, 1i64..=4, any::<bool>()).prop_map(|(p, q, neg)| rat(if neg { -p } else { p }, q))
}

/// Shifts `f` by a constant so that it passes through `(x, y)`.
pub fn through(f: &DenseBiPoly, x: &Rational, y: &Rational) -> DenseBiPoly {
    f.sub(&DenseBiPoly::constant(f.eval(x, y)))
}
