//! Dyadic grid search for violations of the ratio condition.

use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;

use super::{ratio_value, ConeWitness};
use crate::poly::Polynomial;
use crate::rational::Rational;

pub(crate) struct GridSearch {
    pub witness: Option<ConeWitness>,
    pub points: u64,
    pub level: u32,
}

/// Search `(t, r) = (i / 2^l, j / 2^l)` with `1 <= i <= 2^l`, `1 <= j < 2^l`
/// for `l = 1, 2, ..., grid_exponent`, visiting only points new at each
/// level, in lexicographic `(t, r)` order. Returns the first violation found.
pub fn refute_ratio(p: &Polynomial, grid_exponent: u32) -> Option<ConeWitness> {
    search(p, grid_exponent).witness
}

/// Sign of `p(-t rho) + t p(rho)` (same sign as the ratio value) decided in
/// floating point when the result clears a rigorous rounding-error bound,
/// exactly otherwise.
struct SignOracle<'a> {
    p: &'a Polynomial,
    approx: Vec<f64>,
}

/// Relative slack on the absolute-value sum. Horner with `m` steps on inputs
/// that are themselves rounded stays below `(4m + 8) * 2^-53` relative; this
/// is many orders of magnitude looser.
const FILTER_SLACK: f64 = 1e-9;

impl<'a> SignOracle<'a> {
    fn new(p: &'a Polynomial) -> Self {
        let approx = p
            .coeffs()
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect();
        SignOracle { p, approx }
    }

    fn horner_with_abs(&self, x: f64) -> (f64, f64) {
        let ax = x.abs();
        self.approx
            .iter()
            .rev()
            .fold((0.0, 0.0), |(v, a), &c| (v * x + c, a * ax + c.abs()))
    }

    fn is_negative(&self, t_num: u64, r_num: u64, denom: u64) -> bool {
        let t = t_num as f64 / denom as f64;
        let rho = r_num as f64 / (denom - r_num) as f64;
        let (v1, a1) = self.horner_with_abs(-t * rho);
        let (v2, a2) = self.horner_with_abs(rho);
        let value = v1 + t * v2;
        let scale = a1 + t * a2;
        if value.is_finite() && scale.is_finite() && value.abs() > FILTER_SLACK * scale {
            return value < 0.0;
        }
        let (t, rho, _) = grid_point(t_num, r_num, denom);
        ratio_value(self.p, &rho, &(&t * &rho)).is_negative()
    }
}

fn grid_point(t_num: u64, r_num: u64, denom: u64) -> (Rational, Rational, Rational) {
    let t = Rational::new(t_num.into(), denom.into());
    let r = Rational::new(r_num.into(), denom.into());
    let rho = Rational::new(r_num.into(), (denom - r_num).into());
    (t, rho, r)
}

/// Fresh points visited at `level` up to and including `(i, j)`.
fn fresh_before(level: u32, n: u64, i: u64, j: u64) -> u64 {
    let row = |k: u64| if level == 1 || k % 2 == 1 { n - 1 } else { n / 2 };
    let full: u64 = (1..i).map(row).sum();
    let partial = if level == 1 || i % 2 == 1 { j } else { j.div_ceil(2) };
    full + partial
}

pub(crate) fn search(p: &Polynomial, grid_exponent: u32) -> GridSearch {
    let oracle = SignOracle::new(p);
    let mut points = 0u64;
    for level in 1..=grid_exponent {
        let n: u64 = 1 << level;
        let fresh = |i: u64, j: u64| level == 1 || i % 2 == 1 || j % 2 == 1;
        // Rows are independent; `find_first` keeps the lexicographically
        // smallest hit regardless of scheduling.
        let hit = (1..=n).into_par_iter().find_first(|&i| {
            (1..n).any(|j| fresh(i, j) && oracle.is_negative(i, j, n))
        });
        let fresh_count: u64 = if level == 1 { n * (n - 1) } else { n * (n - 1) - (n / 2) * (n / 2 - 1) };
        match hit {
            Some(i) => {
                let j = (1..n)
                    .find(|&j| fresh(i, j) && oracle.is_negative(i, j, n))
                    .expect("row has a hit");
                points += fresh_before(level, n, i, j);
                let (t, _, r) = grid_point(i, j, n);
                let witness = ConeWitness::from_grid(p, &t, &r).expect("negative grid point");
                return GridSearch {
                    witness: Some(witness),
                    points,
                    level,
                };
            }
            None => points += fresh_count,
        }
    }
    GridSearch {
        witness: None,
        points,
        level: grid_exponent,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn finds_independence_witness_at_first_level() {
        let s = search(&p(&[0, 2, 0, -2, 0, 1]), 10);
        assert_eq!(s.level, 1);
        let w = s.witness.unwrap();
        assert_eq!((w.rho, w.mu, w.value), (int(1), rat(1, 2), rat(-9, 32)));
    }

    #[test]
    fn no_witness_for_members() {
        assert!(refute_ratio(&p(&[0, 0, 1]), 8).is_none());
        assert!(refute_ratio(&p(&[0, -1]), 8).is_none());
        assert!(refute_ratio(&Polynomial::zero(), 4).is_none());
    }

    #[test]
    fn negative_constant_is_refuted() {
        let w = refute_ratio(&p(&[-2]), 3).unwrap();
        assert!(w.value.is_negative());
    }

    #[test]
    fn exact_zeros_fall_back_to_rationals() {
        // odd polynomial: ratio value vanishes identically on t = 1
        let q = p(&[0, 1, 0, 1]);
        assert!(refute_ratio(&q, 6).is_none());
    }
}
