//! Exact decision of nonnegativity on the half-line `[0, inf)`, with a
//! rational witness on rejection, plus a numeric sum-of-squares style
//! certificate `p = f1^2 + f2^2 + x (g1^2 + g2^2)` for accepted inputs.

mod certificate;
mod complex;

pub use certificate::{polya_szego_certificate, PolyaSzegoCertificate};

use num_traits::{Signed, Zero};

use crate::poly::{isolate_roots, Bound, Polynomial, SturmChain};
use crate::rational::{int, Rational};

/// Which sub-check rejected the polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalflineFailure {
    /// Negative leading coefficient: negative beyond the Cauchy bound.
    LeadingSign,
    /// `p(0) < 0`.
    ValueAtZero,
    /// A strictly positive root of odd multiplicity.
    OddRoot,
}

impl HalflineFailure {
    pub fn as_str(self) -> &'static str {
        match self {
            HalflineFailure::LeadingSign => "leading-sign",
            HalflineFailure::ValueAtZero => "value-at-zero",
            HalflineFailure::OddRoot => "odd-root",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalflineVerdict {
    pub member: bool,
    /// A point `x0 >= 0` with `p(x0) < 0`; present iff `!member`.
    pub witness: Option<Rational>,
    pub failure: Option<HalflineFailure>,
}

impl HalflineVerdict {
    fn member() -> Self {
        HalflineVerdict {
            member: true,
            witness: None,
            failure: None,
        }
    }

    fn reject(witness: Rational, failure: HalflineFailure) -> Self {
        HalflineVerdict {
            member: false,
            witness: Some(witness),
            failure: Some(failure),
        }
    }
}

/// Decide whether `p(x) >= 0` for every `x >= 0`.
pub fn check_nonneg_halfline(p: &Polynomial) -> HalflineVerdict {
    let Some(lc) = p.leading_coefficient() else {
        return HalflineVerdict::member();
    };
    if lc.is_negative() {
        let bound = p.cauchy_bound().expect("nonzero");
        debug_assert!(p.eval(&bound).is_negative());
        return HalflineVerdict::reject(bound, HalflineFailure::LeadingSign);
    }
    if p.coeff(0).is_negative() {
        return HalflineVerdict::reject(Rational::zero(), HalflineFailure::ValueAtZero);
    }
    let odd = odd_multiplicity_part(p);
    if odd.degree().unwrap_or(0) == 0 {
        return HalflineVerdict::member();
    }
    let odd_chain = SturmChain::new(&odd).expect("nonzero");
    let positive_odd_roots = odd_chain
        .count(&Bound::Finite(Rational::zero()), &Bound::PosInfinity)
        .expect("0 < inf");
    if positive_odd_roots == 0 {
        return HalflineVerdict::member();
    }
    let witness = witness_below_largest_odd_root(p, &odd_chain);
    debug_assert!(p.eval(&witness).is_negative() && !witness.is_negative());
    HalflineVerdict::reject(witness, HalflineFailure::OddRoot)
}

/// Product of the square-free factors that occur with odd multiplicity.
fn odd_multiplicity_part(p: &Polynomial) -> Polynomial {
    p.square_free_decompose()
        .expect("nonzero")
        .into_iter()
        .filter(|(_, mult)| mult % 2 == 1)
        .fold(Polynomial::one(), |acc, (q, _)| &acc * &q)
}

/// `p` has positive leading coefficient and an odd-multiplicity root in
/// `(0, inf)`. Isolate the largest such root `r`; `p` is negative on the
/// stretch of its isolating interval below `r`, so bisect until a midpoint
/// lands there.
fn witness_below_largest_odd_root(p: &Polynomial, odd_chain: &SturmChain) -> Rational {
    let all_chain = SturmChain::new(p).expect("nonzero");
    let bound = p.cauchy_bound().expect("nonzero");
    let pieces = isolate_roots(&all_chain, &Rational::zero(), &bound).expect("0 < bound");
    let (mut lo, mut hi) = pieces
        .into_iter()
        .rev()
        .find(|(a, b)| {
            odd_chain
                .count(&Bound::from(a), &Bound::from(b))
                .expect("a < b")
                == 1
        })
        .expect("an odd positive root exists");
    let two = int(2);
    loop {
        let mid = (&lo + &hi) / &two;
        if p.eval(&mid).is_negative() {
            return mid;
        }
        if all_chain
            .count(&Bound::from(&lo), &Bound::from(&mid))
            .expect("lo < mid")
            == 1
        {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn examples() {
        assert!(check_nonneg_halfline(&p(&[2, 0, -6, 0, 5])).member);
        assert!(check_nonneg_halfline(&p(&[1, 0, -1, 0, 1])).member);
        assert!(check_nonneg_halfline(&Polynomial::zero()).member);

        let v = check_nonneg_halfline(&p(&[0, -1]));
        assert!(!v.member);
        assert_eq!(v.witness, Some(int(1)));
        assert_eq!(p(&[0, -1]).eval(&int(1)), int(-1));
    }

    #[test]
    fn root_at_zero_alone_does_not_reject() {
        assert!(check_nonneg_halfline(&Polynomial::x()).member);
        assert!(check_nonneg_halfline(&p(&[0, 0, 0, 1])).member);
    }

    #[test]
    fn even_touch_points_are_fine() {
        // (x - 1)^2 (x + 2)
        assert!(check_nonneg_halfline(&p(&[2, -3, 0, 1])).member);
    }

    #[test]
    fn value_at_zero_failure() {
        let v = check_nonneg_halfline(&p(&[-1, 0, 1]));
        assert_eq!(v.failure, Some(HalflineFailure::ValueAtZero));
        assert_eq!(v.witness, Some(Rational::zero()));
    }

    #[test]
    fn odd_root_failure_yields_negative_point() {
        // (x - 1)(x - 2) = x^2 - 3x + 2 is negative on (1, 2)
        let q = p(&[2, -3, 1]);
        let v = check_nonneg_halfline(&q);
        assert_eq!(v.failure, Some(HalflineFailure::OddRoot));
        let w = v.witness.unwrap();
        assert!(q.eval(&w).is_negative());
        assert!(w > int(1) && w < int(2));
    }

    #[test]
    fn odd_root_behind_even_root() {
        // (x - 1)(x - 2)(x - 3)^2: largest root is even, negative on (1, 2)
        let q = &p(&[2, -3, 1]) * &p(&[9, -6, 1]);
        let v = check_nonneg_halfline(&q);
        let w = v.witness.unwrap();
        assert!(q.eval(&w).is_negative());
    }

    #[test]
    fn thin_negative_window() {
        // (x - 1/1000)(x - 2/1000) + tiny is still negative between the roots
        let q = &Polynomial::new(vec![rat(-1, 1000), int(1)])
            * &Polynomial::new(vec![rat(-2, 1000), int(1)]);
        let w = check_nonneg_halfline(&q).witness.unwrap();
        assert!(q.eval(&w).is_negative());
    }
}
