//! Sturm chains and exact real-root counting.

use num_traits::Signed;

use super::Polynomial;
use crate::error::{Error, Result};
use crate::rational::{sign, Rational};

/// Interval endpoint: a rational or one of the two infinities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInfinity,
    Finite(Rational),
    PosInfinity,
}

impl Bound {
    fn rank(&self) -> u8 {
        match self {
            Bound::NegInfinity => 0,
            Bound::Finite(_) => 1,
            Bound::PosInfinity => 2,
        }
    }

    fn less_than(&self, other: &Bound) -> bool {
        match (self, other) {
            (Bound::Finite(a), Bound::Finite(b)) => a < b,
            _ => self.rank() < other.rank(),
        }
    }
}

impl From<Rational> for Bound {
    fn from(x: Rational) -> Self {
        Bound::Finite(x)
    }
}

impl From<&Rational> for Bound {
    fn from(x: &Rational) -> Self {
        Bound::Finite(x.clone())
    }
}

/// `s, s', -rem(s, s'), ...` for a square-free `s`. Each remainder is scaled
/// by a positive constant to keep coefficients small; signs are unaffected.
#[derive(Debug, Clone)]
pub struct SturmChain {
    sequence: Vec<Polynomial>,
}

impl SturmChain {
    /// Build the chain of the square-free part of `p`.
    pub fn new(p: &Polynomial) -> Result<Self> {
        let s = p.square_free_part()?;
        let mut sequence = vec![s.clone(), s.derivative()];
        loop {
            let n = sequence.len();
            let last = &sequence[n - 1];
            if last.is_zero() {
                sequence.pop();
                break;
            }
            if last.degree() == Some(0) {
                break;
            }
            let r = sequence[n - 2].rem(last)?;
            if r.is_zero() {
                break;
            }
            let lc = r.leading_coefficient().expect("nonzero").abs();
            sequence.push(-&r.scale(&lc.recip()));
        }
        Ok(SturmChain { sequence })
    }

    pub fn sequence(&self) -> &[Polynomial] {
        &self.sequence
    }

    /// Sign variations of the chain at `at`, zeros skipped.
    pub fn variations(&self, at: &Bound) -> usize {
        let signs = self.sequence.iter().map(|q| match at {
            Bound::NegInfinity => q.sign_at_neg_infinity(),
            Bound::PosInfinity => q.sign_at_pos_infinity(),
            Bound::Finite(x) => sign(&q.eval(x)),
        });
        let mut count = 0;
        let mut prev = 0i8;
        for s in signs.filter(|&s| s != 0) {
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    }

    /// Distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> Result<usize> {
        if !lo.less_than(hi) {
            return Err(Error::precondition("sturm_count needs lo < hi"));
        }
        let (vl, vh) = (self.variations(lo), self.variations(hi));
        Ok(vl.saturating_sub(vh))
    }
}

/// Number of distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_count(p: &Polynomial, lo: impl Into<Bound>, hi: impl Into<Bound>) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    SturmChain::new(p)?.count(&lo.into(), &hi.into())
}

/// Split `(lo, hi]` until every piece holds exactly one root of the chain's
/// polynomial; pieces are returned in increasing order.
pub fn isolate_roots(
    chain: &SturmChain,
    lo: &Rational,
    hi: &Rational,
) -> Result<Vec<(Rational, Rational)>> {
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone())];
    while let Some((a, b)) = stack.pop() {
        let n = chain.count(&Bound::from(&a), &Bound::from(&b))?;
        match n {
            0 => {}
            1 => out.push((a, b)),
            _ => {
                let mid = (&a + &b) / Rational::from_integer(2.into());
                // Push the upper half first so the lower half is processed first.
                stack.push((mid.clone(), b));
                stack.push((a, mid));
            }
        }
    }
    debug_assert!(out.windows(2).all(|w| w[0].1 <= w[1].0));
    Ok(out)
}
