use std::collections::{HashSet, VecDeque};

use num_traits::{Signed, Zero};

use super::bernstein::{bernstein_by_substitution, unit_bernstein, BoxRegion};
use super::{compactify, BiPoly, BudgetSpent, RatioBudget, RatioCertificate, RatioStatus, RatioVerdict};
use crate::halfline::check_nonneg_halfline;
use crate::poly::Polynomial;

/// Exact univariate facts about `P` on the four edges of the unit square.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeChecks {
    /// `P(0, r) = a_0 (1 - r)^m` and `P(t, 0) = a_0 (1 + t)`: `a_0 >= 0`.
    pub value_at_zero: bool,
    /// `P(1, r) = 2 (1 - r)^m p_e(r / (1 - r))`: `p_e` nonnegative on `[0, inf)`.
    pub even_part: bool,
    /// `P(t, 1) = a_m ((-t)^m + t)`: nonnegative on `[0, 1]`.
    pub leading: bool,
}

impl EdgeChecks {
    pub fn evaluate(p: &Polynomial) -> Self {
        let m = p.degree().unwrap_or(0);
        let lc = p.leading_coefficient().cloned().unwrap_or_else(Zero::zero);
        EdgeChecks {
            value_at_zero: !p.coeff(0).is_negative(),
            even_part: check_nonneg_halfline(&p.decompose_parity().0).member,
            // (-t)^1 + t vanishes; for m >= 2, (-t)^m + t >= 0 on [0, 1]
            leading: m == 1 || !lc.is_negative(),
        }
    }

    pub fn all(&self) -> bool {
        self.value_at_zero && self.even_part && self.leading
    }
}

/// `P = t^a r^b Q` with the Bernstein coefficients of `Q` nonnegative on each
/// listed box; the boxes tile the unit square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernsteinCertificate {
    pub monomial: (usize, usize),
    pub boxes: Vec<BoxRegion>,
    pub edges: EdgeChecks,
}

impl BernsteinCertificate {
    /// Re-derive everything from `p`: the stripped quotient, Bernstein
    /// coefficients of every box by affine substitution (not subdivision),
    /// and that the boxes tile `[0, 1]^2` under the halving rule.
    pub fn replay(&self, p: &Polynomial) -> Result<(), String> {
        let (a, b, q) = compactify(p).strip_monomial();
        if (a, b) != self.monomial {
            return Err(format!("monomial factor is t^{a} r^{b}, certificate says {:?}", self.monomial));
        }
        for region in &self.boxes {
            let bern = bernstein_by_substitution(&q, region);
            if !bern.all_nonnegative() {
                return Err(format!("negative Bernstein coefficient on {region:?}"));
            }
        }
        if !tiles_unit_square(&self.boxes) {
            return Err("boxes do not tile the unit square".into());
        }
        Ok(())
    }

    /// The stripped quotient `Q` the boxes certify.
    pub fn quotient(p: &Polynomial) -> BiPoly {
        compactify(p).strip_monomial().2
    }
}

/// The boxes are exactly the leaves of a halving tree rooted at the unit
/// square that always splits the longer side (ties: `t`).
fn tiles_unit_square(boxes: &[BoxRegion]) -> bool {
    let set: HashSet<&BoxRegion> = boxes.iter().collect();
    if set.len() != boxes.len() {
        return false;
    }
    let mut used = 0usize;
    let mut stack = vec![BoxRegion::unit()];
    let finest = boxes
        .iter()
        .map(BoxRegion::area)
        .min()
        .unwrap_or_else(Zero::zero);
    while let Some(region) = stack.pop() {
        if set.contains(&region) {
            used += 1;
            continue;
        }
        if region.area() <= finest {
            return false;
        }
        let (lo, hi) = region.halves(region.split_axis());
        stack.push(hi);
        stack.push(lo);
    }
    used == boxes.len()
}

/// Breadth-first Bernstein subdivision of `[0, 1]^2`. Never reports a
/// violation; the result is `Holds` with a certificate or `Unknown`.
pub fn certify_ratio(p: &Polynomial, budget: RatioBudget) -> RatioVerdict {
    let unknown = |boxes: usize, note: String| RatioVerdict {
        status: RatioStatus::Unknown,
        witness: None,
        certificate: None,
        budget_spent: BudgetSpent {
            boxes,
            ..BudgetSpent::default()
        },
        note: Some(note),
    };
    let bp = compactify(p);
    if bp.is_zero() {
        return RatioVerdict {
            status: RatioStatus::Holds,
            witness: None,
            certificate: Some(RatioCertificate::ZeroCompactification),
            budget_spent: BudgetSpent::default(),
            note: None,
        };
    }
    let edges = EdgeChecks::evaluate(p);
    if !edges.all() {
        return unknown(0, format!("boundary of the unit square is negative: {edges:?}"));
    }
    let (a, b, q) = bp.strip_monomial();
    let mut queue = VecDeque::from([unit_bernstein(&q)]);
    let mut certified = Vec::new();
    let mut examined = 0usize;
    while let Some(bbox) = queue.pop_front() {
        if examined >= budget.max_boxes {
            return unknown(examined, format!("box budget of {} exhausted", budget.max_boxes));
        }
        examined += 1;
        if bbox.all_nonnegative() {
            certified.push(bbox.region);
            continue;
        }
        if bbox.corners().iter().any(|c| c.is_negative()) {
            return unknown(examined, format!("negative value at a corner of {:?}", bbox.region));
        }
        let (lo, hi) = bbox.split(bbox.region.split_axis());
        queue.push_back(lo);
        queue.push_back(hi);
    }
    RatioVerdict {
        status: RatioStatus::Holds,
        witness: None,
        certificate: Some(RatioCertificate::Bernstein(BernsteinCertificate {
            monomial: (a, b),
            boxes: certified,
            edges,
        })),
        budget_spent: BudgetSpent {
            boxes: examined,
            ..BudgetSpent::default()
        },
        note: None,
    }
}
