use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Rational, UniPoly, ZBiPoly, ZPoly};

/// Dense bivariate polynomial; `grid[i][j]` is the coefficient of `X^i Y^j`.
///
/// The grid is trimmed: no trailing zero rows or columns, and the zero
/// polynomial has an empty grid.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DenseBiPoly {
    grid: Vec<Vec<Rational>>,
    degree: Option<usize>,
}

impl DenseBiPoly {
    pub fn from_grid(mut grid: Vec<Vec<Rational>>) -> Self {
        for row in grid.iter_mut() {
            while row.last().is_some_and(|c| c.is_zero()) {
                row.pop();
            }
        }
        while grid.last().is_some_and(|r| r.is_empty()) {
            grid.pop();
        }
        let degree = grid
            .iter()
            .enumerate()
            .flat_map(|(i, r)| {
                r.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(move |(j, _)| i + j)
            })
            .max();
        DenseBiPoly { grid, degree }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_terms(&[(c, 0, 0)])
    }

    /// Sums `(coeff, i, j)` terms meaning `coeff * X^i * Y^j`.
    pub fn from_terms(terms: &[(Rational, usize, usize)]) -> Self {
        let mut grid: Vec<Vec<Rational>> = Vec::new();
        for (c, i, j) in terms {
            if grid.len() <= *i {
                grid.resize(i + 1, Vec::new());
            }
            if grid[*i].len() <= *j {
                grid[*i].resize(j + 1, Rational::zero());
            }
            grid[*i][*j] += c;
        }
        Self::from_grid(grid)
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_int_terms(terms: &[(i64, usize, usize)]) -> Self {
        let t: Vec<_> = terms
            .iter()
            .map(|&(c, i, j)| (Rational::from_integer(c.into()), i, j))
            .collect();
        Self::from_terms(&t)
    }

    pub fn grid(&self) -> &[Vec<Rational>] {
        &self.grid
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.grid
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.grid.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.degree
    }

    pub fn deg_x(&self) -> Option<usize> {
        self.grid.len().checked_sub(1)
    }

    pub fn deg_y(&self) -> Option<usize> {
        self.grid.iter().map(|r| r.len()).max().and_then(|n| n.checked_sub(1))
    }

    /// Nonzero terms as `(coeff, i, j)` in increasing `(i, j)` order.
    pub fn terms(&self) -> Vec<(Rational, usize, usize)> {
        let mut out = Vec::new();
        for (i, r) in self.grid.iter().enumerate() {
            for (j, c) in r.iter().enumerate() {
                if !c.is_zero() {
                    out.push((c.clone(), i, j));
                }
            }
        }
        out
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for r in self.grid.iter().rev() {
            let mut inner = Rational::zero();
            for c in r.iter().rev() {
                inner = inner * y + c;
            }
            acc = acc * x + inner;
        }
        acc
    }

    /// `P(x, Y)` as a polynomial in `Y`.
    pub fn eval_x(&self, x: &Rational) -> UniPoly {
        let n = self.deg_y().map_or(0, |d| d + 1);
        let mut c = vec![Rational::zero(); n];
        let mut xp = Rational::one();
        for r in &self.grid {
            for (j, a) in r.iter().enumerate() {
                c[j] += a * &xp;
            }
            xp *= x;
        }
        UniPoly::new(c)
    }

    /// `P(X, y)` as a polynomial in `X`.
    pub fn eval_y(&self, y: &Rational) -> UniPoly {
        UniPoly::new(
            self.grid
                .iter()
                .map(|r| {
                    let mut acc = Rational::zero();
                    for c in r.iter().rev() {
                        acc = acc * y + c;
                    }
                    acc
                })
                .collect(),
        )
    }

    /// Mixed partial `d^(a+b) / dX^a dY^b`.
    pub fn partial(&self, a: usize, b: usize) -> Self {
        let mut grid = Vec::new();
        for (i, r) in self.grid.iter().enumerate().skip(a) {
            let fi = falling(i, a);
            let row: Vec<Rational> = r
                .iter()
                .enumerate()
                .skip(b)
                .map(|(j, c)| c * Rational::from_integer(&fi * falling(j, b)))
                .collect();
            grid.push(row);
        }
        Self::from_grid(grid)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.grid.len().max(o.grid.len());
        let mut grid = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.grid.get(i).map(|r| r.as_slice()).unwrap_or(&[]);
            let b = o.grid.get(i).map(|r| r.as_slice()).unwrap_or(&[]);
            let m = a.len().max(b.len());
            grid.push(
                (0..m)
                    .map(|j| match (a.get(j), b.get(j)) {
                        (Some(x), Some(y)) => x + y,
                        (Some(x), None) => x.clone(),
                        (None, Some(y)) => y.clone(),
                        (None, None) => Rational::zero(),
                    })
                    .collect(),
            );
        }
        Self::from_grid(grid)
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::from_grid(
            self.grid
                .iter()
                .map(|r| r.iter().map(|c| c * k).collect())
                .collect(),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let (ax, ay) = (self.deg_x().unwrap(), self.deg_y().unwrap());
        let (bx, by) = (o.deg_x().unwrap(), o.deg_y().unwrap());
        let mut grid = vec![vec![Rational::zero(); ay + by + 1]; ax + bx + 1];
        for (i, r) in self.grid.iter().enumerate() {
            for (j, c) in r.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (k, s) in o.grid.iter().enumerate() {
                    for (l, d) in s.iter().enumerate() {
                        if !d.is_zero() {
                            grid[i + k][j + l] += c * d;
                        }
                    }
                }
            }
        }
        Self::from_grid(grid)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::constant(Rational::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Positive integer `lambda` with `lambda * self` integral, and that multiple.
    pub fn to_zbi_scaled(&self) -> (BigInt, ZBiPoly) {
        let mut l = BigInt::one();
        for r in &self.grid {
            for c in r {
                l = l.lcm(c.denom());
            }
        }
        (l.clone(), self.to_zbi_with(&l))
    }

    fn to_zbi_with(&self, l: &BigInt) -> ZBiPoly {
        let ny = self.deg_y().map_or(0, |d| d + 1);
        let mut cols: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); self.grid.len()]; ny];
        for (i, r) in self.grid.iter().enumerate() {
            for (j, c) in r.iter().enumerate() {
                cols[j][i] = c.numer() * (l / c.denom());
            }
        }
        ZBiPoly::new(cols.into_iter().map(ZPoly::new).collect())
    }

    /// Integer multiple with no common integer content; positive scaling.
    pub fn to_zbi(&self) -> ZBiPoly {
        self.to_zbi_scaled().1.int_primitive()
    }

    pub fn from_zbi(p: &ZBiPoly) -> Self {
        let mut terms = Vec::new();
        for (j, cx) in p.coeffs().iter().enumerate() {
            for (i, c) in cx.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    terms.push((Rational::from_integer(c.clone()), i, j));
                }
            }
        }
        Self::from_terms(&terms)
    }

    /// Exact quotient in `Q[X,Y]`, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (la, a) = self.to_zbi_scaled();
        let (lb, b) = d.to_zbi_scaled();
        let (ca, cb) = (a.int_content(), b.int_content());
        let q = a.int_primitive().exact_div(&b.int_primitive())?;
        let k = Rational::new(ca * lb, cb * la);
        Some(Self::from_zbi(&q).scale(&k))
    }
}

fn falling(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for m in 0..k {
        acc *= BigInt::from(n - m);
    }
    acc
}

impl fmt::Display for DenseBiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, i, j)) in terms.iter().rev().enumerate() {
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            let mut parts = Vec::new();
            if !a.is_one() || (*i == 0 && *j == 0) {
                parts.push(a.to_string());
            }
            match i {
                0 => {}
                1 => parts.push("X".into()),
                _ => parts.push(format!("X^{i}")),
            }
            match j {
                0 => {}
                1 => parts.push("Y".into()),
                _ => parts.push(format!("Y^{j}")),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}
