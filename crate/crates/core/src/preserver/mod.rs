//! Membership of a polynomial in the classes of nonnegativity preservers.
//!
//! A polynomial `p` preserves `n x n` nonnegative matrices when `p(A)` is
//! entrywise nonnegative for every entrywise nonnegative `A`. For `n = 1`
//! that is nonnegativity on the half-line. For `n = 2` it holds exactly
//! when `p'`, the even part `p_e` and the odd part `p_o` are nonnegative on
//! the half-line and the ratio condition holds on the cone `0 < mu <= rho`;
//! the first three alone characterize the preservers of 2x2 nonnegative
//! circulants.
//!
//! Inputs have rational coefficients by construction. Complex coefficients
//! never arise because every preserver of nonnegative matrices, in any
//! dimension, has real coefficients.
//!
//! Each rejection carries an explicit nonnegative witness matrix whose exact
//! image has a negative entry.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::cone::{check_ratio, BudgetSpent, RatioBudget, RatioCertificate, RatioStatus, RatioVerdict};
use crate::halfline::{check_nonneg_halfline, HalflineVerdict};
use crate::matrix::{horner_matrix_eval, Matrix2};
use crate::poly::{sturm_count, Polynomial};
use crate::rational::{pow2, Rational};

pub use crate::matrix::{witness_from_ratio, witness_from_spectral};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixClass {
    P1,
    P2,
    Circulant2,
    P3Screen,
}

impl MatrixClass {
    pub fn as_str(self) -> &'static str {
        match self {
            MatrixClass::P1 => "P1",
            MatrixClass::P2 => "P2",
            MatrixClass::Circulant2 => "circulant2",
            MatrixClass::P3Screen => "P3-screen",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Member,
    NotMember,
    Unknown,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Member => "member",
            Status::NotMember => "not_member",
            Status::Unknown => "unknown",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Member => 0,
            Status::NotMember => 1,
            Status::Unknown => 2,
        }
    }
}

/// The sub-conditions recorded in a verdict's trail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    Derivative,
    EvenPart,
    OddPart,
    Ratio,
}

impl Condition {
    pub fn as_str(self) -> &'static str {
        match self {
            Condition::Derivative => "derivative",
            Condition::EvenPart => "even_part",
            Condition::OddPart => "odd_part",
            Condition::Ratio => "ratio",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrailEntry {
    pub condition: Condition,
    pub status: Status,
    /// For the half-line conditions: a point `x0 >= 0` where the polynomial
    /// under test is negative.
    pub witness: Option<Rational>,
}

impl TrailEntry {
    /// Ratio entries read `holds`, `fails`, `unknown`; the others read as
    /// membership statuses.
    pub fn status_label(&self) -> &'static str {
        match (self.condition, self.status) {
            (Condition::Ratio, Status::Member) => "holds",
            (Condition::Ratio, Status::NotMember) => "fails",
            (_, s) => s.as_str(),
        }
    }

    fn halfline(condition: Condition, v: &HalflineVerdict) -> Self {
        TrailEntry {
            condition,
            status: if v.member { Status::Member } else { Status::NotMember },
            witness: v.witness.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipVerdict {
    pub class_checked: MatrixClass,
    pub status: Status,
    pub witness_matrix: Option<Matrix2>,
    /// `(rho, mu)` for the 2x2 classes, `(x0, x0)` for the scalar class.
    pub witness_point: Option<(Rational, Rational)>,
    pub certificate_trail: Vec<TrailEntry>,
    pub budget_spent: BudgetSpent,
    /// Full ratio-condition outcome when it was evaluated.
    pub ratio: Option<RatioVerdict>,
}

impl MembershipVerdict {
    fn new(class_checked: MatrixClass, status: Status) -> Self {
        MembershipVerdict {
            class_checked,
            status,
            witness_matrix: None,
            witness_point: None,
            certificate_trail: Vec::new(),
            budget_spent: BudgetSpent::default(),
            ratio: None,
        }
    }

    /// `p(A)` for the witness matrix `A`.
    pub fn image(&self, p: &Polynomial) -> Option<Matrix2> {
        self.witness_matrix.as_ref().map(|a| horner_matrix_eval(p, a))
    }

    /// First negative entry of `p(A)` in row-major order, 0-based.
    pub fn image_negative_entry(&self, p: &Polynomial) -> Option<(usize, usize, Rational)> {
        self.image(p).and_then(|m| m.first_negative_entry())
    }

    pub fn ratio_certificate(&self) -> Option<&RatioCertificate> {
        self.ratio.as_ref().and_then(|r| r.certificate.as_ref())
    }
}

/// Nonnegativity on `[0, inf)`.
pub fn check_p1(p: &Polynomial) -> MembershipVerdict {
    let v = check_nonneg_halfline(p);
    if v.member {
        return MembershipVerdict::new(MatrixClass::P1, Status::Member);
    }
    let x0 = v.witness.expect("rejection carries a witness");
    MembershipVerdict {
        witness_point: Some((x0.clone(), x0)),
        ..MembershipVerdict::new(MatrixClass::P1, Status::NotMember)
    }
}

/// The spectral condition `p(rho) >= |p(mu)|` for all `rho >= |mu|`,
/// decided through `p'`, `p_e` and `p_o`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralVerdict {
    pub status: Status,
    pub trail: Vec<TrailEntry>,
    /// `(rho, mu)` with `rho >= |mu|` and `p(rho) < |p(mu)|`.
    pub witness_point: Option<(Rational, Rational)>,
}

pub fn check_spectral(p: &Polynomial) -> SpectralVerdict {
    let (even, odd) = p.decompose_parity();
    let derivative = check_nonneg_halfline(&p.derivative());
    let even_v = check_nonneg_halfline(&even);
    let odd_v = check_nonneg_halfline(&odd);
    let trail = vec![
        TrailEntry::halfline(Condition::Derivative, &derivative),
        TrailEntry::halfline(Condition::EvenPart, &even_v),
        TrailEntry::halfline(Condition::OddPart, &odd_v),
    ];
    let witness_point = if let Some(x0) = even_v.witness.or(odd_v.witness) {
        Some((x0.clone(), -x0))
    } else {
        derivative.witness.map(|x0| descent_witness(p, x0))
    };
    SpectralVerdict {
        status: if witness_point.is_some() { Status::NotMember } else { Status::Member },
        trail,
        witness_point,
    }
}

/// Given `p'(x0) < 0` with `x0 >= 0`, find `h > 0` with `p(x0 + h) < p(x0)`
/// and return `(x0 + h, x0)`.
fn descent_witness(p: &Polynomial, x0: Rational) -> (Rational, Rational) {
    let base = p.eval(&x0);
    for j in 0..=64 {
        let rho = &x0 + pow2(-j);
        if p.eval(&rho) < base {
            return (rho, x0);
        }
    }
    // p' keeps its sign on (x0, x0 + h] once that interval holds no root
    let dp = p.derivative();
    let mut h = pow2(-64);
    while sturm_count(&dp, x0.clone(), &x0 + &h).expect("p' is nonzero") > 0 {
        h /= Rational::from_integer(BigInt::from(2));
    }
    (&x0 + h, x0)
}

/// Preservers of 2x2 nonnegative matrices.
pub fn check_p2(p: &Polynomial, budget: RatioBudget) -> MembershipVerdict {
    let spectral = check_spectral(p);
    if let Some((rho, mu)) = spectral.witness_point {
        let matrix = witness_from_spectral(&rho, &mu).expect("rho >= |mu|");
        return MembershipVerdict {
            witness_matrix: Some(matrix),
            witness_point: Some((rho, mu)),
            certificate_trail: spectral.trail,
            ..MembershipVerdict::new(MatrixClass::P2, Status::NotMember)
        };
    }
    let ratio = check_ratio(p, budget);
    let mut trail = spectral.trail;
    let (status, ratio_status) = match ratio.status {
        RatioStatus::Holds => (Status::Member, Status::Member),
        RatioStatus::Fails => (Status::NotMember, Status::NotMember),
        RatioStatus::Unknown => (Status::Unknown, Status::Unknown),
    };
    trail.push(TrailEntry {
        condition: Condition::Ratio,
        status: ratio_status,
        witness: None,
    });
    let mut verdict = MembershipVerdict {
        certificate_trail: trail,
        budget_spent: ratio.budget_spent,
        ..MembershipVerdict::new(MatrixClass::P2, status)
    };
    if let Some(w) = &ratio.witness {
        verdict.witness_matrix = Some(witness_from_ratio(&w.rho, &w.mu).expect("0 < mu <= rho"));
        verdict.witness_point = Some((w.rho.clone(), w.mu.clone()));
    }
    verdict.ratio = Some(ratio);
    verdict
}

/// Preservers of 2x2 nonnegative circulants `[[a, b], [b, a]]`: the
/// spectral condition alone.
pub fn check_circulant2(p: &Polynomial) -> MembershipVerdict {
    let spectral = check_spectral(p);
    let witness_matrix = spectral
        .witness_point
        .as_ref()
        .map(|(rho, mu)| witness_from_spectral(rho, mu).expect("rho >= |mu|"));
    MembershipVerdict {
        witness_matrix,
        witness_point: spectral.witness_point,
        certificate_trail: spectral.trail,
        ..MembershipVerdict::new(MatrixClass::Circulant2, spectral.status)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScreenOutcome {
    /// Inconclusive.
    Pass,
    /// `a_index < 0` for some `index <= 2`, which rules out preserving
    /// 3x3 nonnegative matrices.
    Fail { index: usize, coefficient: Rational },
}

impl ScreenOutcome {
    pub fn as_str(&self) -> &'static str {
        match self {
            ScreenOutcome::Pass => "pass",
            ScreenOutcome::Fail { .. } => "fail",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            ScreenOutcome::Pass => 0,
            ScreenOutcome::Fail { .. } => 1,
        }
    }
}

/// A preserver of 3x3 nonnegative matrices of degree at least 2 has
/// `a_0, a_1, a_2 >= 0`. Lower degrees always pass.
pub fn p3_necessary_screen(p: &Polynomial) -> ScreenOutcome {
    if p.degree().unwrap_or(0) < 2 {
        return ScreenOutcome::Pass;
    }
    (0..=2)
        .map(|k| (k, p.coeff(k)))
        .find(|(_, a)| a.is_negative())
        .map_or(ScreenOutcome::Pass, |(index, coefficient)| ScreenOutcome::Fail { index, coefficient })
}

/// `true` when `A >= 0` and `p(A)` has a negative entry.
pub fn is_violation(p: &Polynomial, a: &Matrix2) -> bool {
    a.is_nonnegative() && horner_matrix_eval(p, a).first_negative_entry().is_some()
}
