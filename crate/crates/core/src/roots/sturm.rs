use std::cmp::Ordering;

use num_traits::Signed;

use crate::poly::{Rational, UniPoly, ZPoly};

/// Sturm sequence of a squarefree integer polynomial. Each element after the
/// first two is the negated pseudo-remainder, rescaled by a positive factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    seq: Vec<ZPoly>,
}

/// Negated remainder of `a` by `b`, up to a positive factor.
pub(crate) fn sturm_step(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let r = a.prem(b);
    let k = a.deg0() + 1 - b.deg0().min(a.deg0() + 1);
    let flip = b.lc().is_negative() && k % 2 == 1;
    let r = r.primitive();
    if flip {
        r
    } else {
        -r
    }
}

impl SturmChain {
    /// Chain for the squarefree part of `p`; `p` must be nonzero.
    pub fn new(p: &ZPoly) -> Self {
        let p0 = p.squarefree();
        Self::from_squarefree(p0)
    }

    pub(crate) fn from_squarefree(p0: ZPoly) -> Self {
        let mut seq = vec![p0.clone()];
        if p0.deg0() == 0 {
            return SturmChain { seq };
        }
        let mut a = p0;
        let mut b = a.derivative().primitive();
        while !b.is_zero() {
            seq.push(b.clone());
            let r = sturm_step(&a, &b);
            a = b;
            b = r;
        }
        SturmChain { seq }
    }

    pub fn sequence(&self) -> Vec<UniPoly> {
        self.seq.iter().map(UniPoly::from_zpoly).collect()
    }

    pub fn source(&self) -> &ZPoly {
        &self.seq[0]
    }

    fn variations<I: Iterator<Item = Ordering>>(signs: I) -> usize {
        let mut last = Ordering::Equal;
        let mut v = 0;
        for s in signs {
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        Self::variations(self.seq.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_pos_inf(&self) -> usize {
        Self::variations(self.seq.iter().map(|p| p.sign_pos_inf()))
    }

    pub fn variations_neg_inf(&self) -> usize {
        Self::variations(self.seq.iter().map(|p| p.sign_neg_inf()))
    }

    /// Distinct real roots in `(lo, hi]`; `None` bounds mean infinity.
    pub fn count(&self, lo: Option<&Rational>, hi: Option<&Rational>) -> usize {
        let vl = lo.map_or_else(|| self.variations_neg_inf(), |x| self.variations_at(x));
        let vh = hi.map_or_else(|| self.variations_pos_inf(), |x| self.variations_at(x));
        vl.saturating_sub(vh)
    }
}
