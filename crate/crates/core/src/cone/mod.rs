//! The ratio condition `rho * p(-mu) + mu * p(rho) >= 0` on the cone
//! `0 < mu <= rho`.
//!
//! With `mu = t * rho` and `rho = r / (1 - r)` the cone maps onto
//! `(0, 1] x (0, 1)` and, after clearing the positive factor
//! `(1 - r)^m / rho`, the condition becomes nonnegativity of the bivariate
//! polynomial
//!
//! ```text
//! P(t, r) = sum_k a_k ((-t)^k + t) r^k (1 - r)^(m - k)
//! ```
//!
//! on the unit square (closed, by continuity). Violations are searched on a
//! dyadic grid; nonnegativity is certified by Bernstein subdivision.

mod bernstein;
mod bipoly;
mod certify;
mod refute;

pub use bernstein::{
    bernstein_by_substitution, bernstein_tensor, unit_bernstein, Axis, BernsteinBox, BoxRegion,
};
pub use bipoly::BiPoly;
pub use certify::{certify_ratio, BernsteinCertificate, EdgeChecks};
pub use refute::refute_ratio;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::halfline::check_nonneg_halfline;
use crate::poly::Polynomial;
use crate::rational::Rational;

/// `rho * p(-mu) + mu * p(rho)`.
pub fn ratio_value(p: &Polynomial, rho: &Rational, mu: &Rational) -> Rational {
    rho * p.eval(&-mu) + mu * p.eval(rho)
}

/// `P(t, r)` as described in the module docs; `m = 0` for constants and the
/// zero polynomial.
pub fn compactify(p: &Polynomial) -> BiPoly {
    let m = p.degree().unwrap_or(0);
    let one_minus_r = Polynomial::from_ints(&[1, -1]);
    let mut acc = BiPoly::zero();
    for (k, a) in p.coeffs().iter().enumerate() {
        if a.is_zero() || k == 1 {
            // (-t)^1 + t vanishes identically
            continue;
        }
        let sign = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
        let t_part = &Polynomial::monomial(sign * a, k) + &Polynomial::monomial(a.clone(), 1);
        let r_part = &Polynomial::monomial(Rational::one(), k) * &one_minus_r.pow(m - k);
        acc = acc.add(&BiPoly::outer(&t_part, &r_part));
    }
    acc
}

/// A point of the cone where the ratio condition fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeWitness {
    pub rho: Rational,
    pub mu: Rational,
    pub value: Rational,
}

impl ConeWitness {
    /// Validates `0 < mu <= rho` and a strictly negative ratio value.
    pub fn new(p: &Polynomial, rho: Rational, mu: Rational) -> Result<Self> {
        if !(mu.is_positive() && mu <= rho) {
            return Err(Error::precondition("cone witness needs 0 < mu <= rho"));
        }
        let value = ratio_value(p, &rho, &mu);
        if !value.is_negative() {
            return Err(Error::precondition("ratio value at witness is not negative"));
        }
        Ok(ConeWitness { rho, mu, value })
    }

    /// Map a grid point `(t, r)` of the compactified square back to the cone.
    pub fn from_grid(p: &Polynomial, t: &Rational, r: &Rational) -> Result<Self> {
        let rho = r / (Rational::one() - r);
        let mu = t * &rho;
        Self::new(p, rho, mu)
    }

    pub fn validate(&self, p: &Polynomial) -> bool {
        self.mu.is_positive() && self.mu <= self.rho && ratio_value(p, &self.rho, &self.mu) == self.value && self.value.is_negative()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatioStatus {
    Holds,
    Fails,
    Unknown,
}

impl RatioStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            RatioStatus::Holds => "holds",
            RatioStatus::Fails => "fails",
            RatioStatus::Unknown => "unknown",
        }
    }
}

/// Why the ratio condition holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RatioCertificate {
    /// `P` is identically zero (only `a_1` can be nonzero).
    ZeroCompactification,
    /// `a_k >= 0` for every `k != 1`: each term of `P` is nonnegative.
    NonnegativeCoefficients,
    /// The odd part is `c * x` (ratio value identically zero) and the even
    /// part is nonnegative on the half-line.
    LinearOddPart,
    /// Bernstein subdivision of the unit square.
    Bernstein(BernsteinCertificate),
}

impl RatioCertificate {
    pub fn name(&self) -> &'static str {
        match self {
            RatioCertificate::ZeroCompactification => "zero-compactification",
            RatioCertificate::NonnegativeCoefficients => "nonnegative-coefficients",
            RatioCertificate::LinearOddPart => "linear-odd-part",
            RatioCertificate::Bernstein(_) => "bernstein",
        }
    }
}

/// Search and certification limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RatioBudget {
    /// Finest refutation grid is `2^-grid_exponent`.
    pub grid_exponent: u32,
    /// Maximum number of boxes the certifier examines.
    pub max_boxes: usize,
}

impl Default for RatioBudget {
    fn default() -> Self {
        RatioBudget {
            grid_exponent: 10,
            max_boxes: 1 << 14,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BudgetSpent {
    pub grid_points: u64,
    pub grid_level: u32,
    pub boxes: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioVerdict {
    pub status: RatioStatus,
    pub witness: Option<ConeWitness>,
    pub certificate: Option<RatioCertificate>,
    pub budget_spent: BudgetSpent,
    /// Reason for an `Unknown` status.
    pub note: Option<String>,
}

impl RatioVerdict {
    fn holds(certificate: RatioCertificate, budget_spent: BudgetSpent) -> Self {
        RatioVerdict {
            status: RatioStatus::Holds,
            witness: None,
            certificate: Some(certificate),
            budget_spent,
            note: None,
        }
    }
}

/// Cheap sufficient conditions, tried before any search.
pub fn fast_path(p: &Polynomial) -> Option<RatioCertificate> {
    if compactify(p).is_zero() {
        return Some(RatioCertificate::ZeroCompactification);
    }
    let nonneg = p
        .coeffs()
        .iter()
        .enumerate()
        .all(|(k, a)| k == 1 || !a.is_negative());
    if nonneg {
        return Some(RatioCertificate::NonnegativeCoefficients);
    }
    let (even, odd) = p.decompose_parity();
    if odd.degree().unwrap_or(0) <= 1 && check_nonneg_halfline(&even).member {
        return Some(RatioCertificate::LinearOddPart);
    }
    None
}

/// Fast paths, then grid refutation, then Bernstein certification.
pub fn check_ratio(p: &Polynomial, budget: RatioBudget) -> RatioVerdict {
    if let Some(cert) = fast_path(p) {
        return RatioVerdict::holds(cert, BudgetSpent::default());
    }
    let search = refute::search(p, budget.grid_exponent);
    let mut spent = BudgetSpent {
        grid_points: search.points,
        grid_level: search.level,
        boxes: 0,
    };
    if let Some(witness) = search.witness {
        return RatioVerdict {
            status: RatioStatus::Fails,
            witness: Some(witness),
            certificate: None,
            budget_spent: spent,
            note: None,
        };
    }
    let mut verdict = certify_ratio(p, budget);
    spent.boxes = verdict.budget_spent.boxes;
    verdict.budget_spent = spent;
    verdict
}
