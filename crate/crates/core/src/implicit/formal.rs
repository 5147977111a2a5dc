//! Integer polynomials in the formal symbols `phi^(i)` and `F_(X^a Y^b)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// `phi^(i)`, `i >= 1`.
    Phi(u32),
    /// `F_(X^a Y^b)`.
    Partial(u32, u32),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Phi(i) => write!(f, "phi{i}"),
            Var::Partial(a, b) => write!(f, "F_{a}_{b}"),
        }
    }
}

/// Sorted `(var, exponent)` pairs with positive exponents.
pub type Monomial = Vec<(Var, u32)>;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FormalPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl FormalPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn var(v: Var) -> Self {
        let mut p = Self::zero();
        p.add_term(vec![(v, 1)], BigInt::one());
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (m, c) in &o.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut p = Self::zero();
        for (m, c) in &self.terms {
            p.add_term(m.clone(), c * k);
        }
        p
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigInt::one())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut p = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                p.add_term(mono_mul(m1, m2), c1 * c2);
            }
        }
        p
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(BigInt::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Total degree in the `F` partial symbols.
    pub fn degree_in_partials(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| {
                m.iter()
                    .filter(|(v, _)| matches!(v, Var::Partial(..)))
                    .map(|(_, e)| e)
                    .sum()
            })
            .max()
            .unwrap_or(0)
    }

    /// Largest `sum i * e_i` over the `phi^(i)` factors of a monomial.
    pub fn derivation_order(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| {
                m.iter()
                    .map(|(v, e)| match v {
                        Var::Phi(i) => i * e,
                        Var::Partial(..) => 0,
                    })
                    .sum()
            })
            .max()
            .unwrap_or(0)
    }

    pub fn max_phi_order(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|m| m.iter())
            .filter_map(|(v, _)| match v {
                Var::Phi(i) => Some(*i),
                _ => None,
            })
            .max()
            .unwrap_or(0)
    }

    /// Distinct `F` partial symbols present.
    pub fn partial_vars(&self) -> Vec<(u32, u32)> {
        let mut v: Vec<(u32, u32)> = self
            .terms
            .keys()
            .flat_map(|m| m.iter())
            .filter_map(|(v, _)| match v {
                Var::Partial(a, b) => Some((*a, *b)),
                _ => None,
            })
            .collect();
        v.sort();
        v.dedup();
        v
    }

    /// Total derivative along the curve: `phi^(i) -> phi^(i+1)` and
    /// `F_(a,b) -> F_(a+1,b) + phi' F_(a,b+1)`, extended by Leibniz.
    pub fn total_derivative(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            for (idx, &(v, e)) in m.iter().enumerate() {
                let mut rest: Monomial = m.clone();
                if e == 1 {
                    rest.remove(idx);
                } else {
                    rest[idx].1 -= 1;
                }
                let ce = c * BigInt::from(e);
                let d = match v {
                    Var::Phi(i) => Self::var(Var::Phi(i + 1)),
                    Var::Partial(a, b) => Self::var(Var::Partial(a + 1, b))
                        .add(&Self::var(Var::Phi(1)).mul(&Self::var(Var::Partial(a, b + 1)))),
                };
                for (dm, dc) in &d.terms {
                    out.add_term(mono_mul(&rest, dm), &ce * dc);
                }
            }
        }
        out
    }

    /// Substitutes every symbol through `f`, combining with `mul`/`add`.
    pub fn substitute<T, FV, FC, FM, FA>(&self, mut var: FV, constant: FC, mul: FM, add: FA, zero: T) -> T
    where
        T: Clone,
        FV: FnMut(Var, u32) -> T,
        FC: Fn(&BigInt) -> T,
        FM: Fn(&T, &T) -> T,
        FA: Fn(&T, &T) -> T,
    {
        let mut acc = zero;
        for (m, c) in &self.terms {
            let mut t = constant(c);
            for &(v, e) in m {
                t = mul(&t, &var(v, e));
            }
            acc = add(&acc, &t);
        }
        acc
    }
}

impl fmt::Display for FormalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            let mut parts: Vec<String> = Vec::new();
            if !a.is_one() || m.is_empty() {
                parts.push(a.to_string());
            }
            for (v, e) in m {
                parts.push(if *e == 1 { v.to_string() } else { format!("{v}^{e}") });
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}
