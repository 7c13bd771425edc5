use num_traits::Zero;

use crate::poly::Polynomial;
use crate::rational::Rational;

/// Bivariate polynomial in `(t, r)`; `coeffs[i][j]` is the coefficient of
/// `t^i r^j`. Rows all have the same length and trailing zero rows and
/// columns are trimmed, so the zero polynomial has no rows.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    coeffs: Vec<Vec<Rational>>,
}

impl BiPoly {
    pub fn new(coeffs: Vec<Vec<Rational>>) -> Self {
        let mut bp = BiPoly { coeffs };
        bp.normalize();
        bp
    }

    pub fn zero() -> Self {
        BiPoly::default()
    }

    /// `a(t) * b(r)`.
    pub fn outer(t_part: &Polynomial, r_part: &Polynomial) -> Self {
        BiPoly::new(
            t_part
                .coeffs()
                .iter()
                .map(|a| r_part.coeffs().iter().map(|b| a * b).collect())
                .collect(),
        )
    }

    fn normalize(&mut self) {
        let width = self
            .coeffs
            .iter()
            .filter_map(|row| row.iter().rposition(|c| !c.is_zero()))
            .max()
            .map_or(0, |j| j + 1);
        for row in &mut self.coeffs {
            row.resize(width, Rational::zero());
        }
        while self
            .coeffs
            .last()
            .is_some_and(|row| row.iter().all(Zero::is_zero))
        {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Vec<Rational>] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.coeffs
            .get(i)
            .and_then(|row| row.get(j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `(deg_t, deg_r)`, with `(0, 0)` for the zero polynomial.
    pub fn degrees(&self) -> (usize, usize) {
        match self.coeffs.first() {
            None => (0, 0),
            Some(row) => (self.coeffs.len() - 1, row.len() - 1),
        }
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let rows = self.coeffs.len().max(other.coeffs.len());
        let cols = self.degrees().1.max(other.degrees().1) + 1;
        BiPoly::new(
            (0..rows)
                .map(|i| (0..cols).map(|j| self.coeff(i, j) + other.coeff(i, j)).collect())
                .collect(),
        )
    }

    pub fn eval(&self, t: &Rational, r: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, row| {
            let inner = row.iter().rev().fold(Rational::zero(), |a, c| a * r + c);
            acc * t + inner
        })
    }

    /// Largest `(a, b)` with `t^a r^b` dividing `self`, and the quotient.
    pub fn strip_monomial(&self) -> (usize, usize, BiPoly) {
        if self.is_zero() {
            return (0, 0, BiPoly::zero());
        }
        let a = self
            .coeffs
            .iter()
            .position(|row| row.iter().any(|c| !c.is_zero()))
            .unwrap_or(0);
        let b = self
            .coeffs
            .iter()
            .filter_map(|row| row.iter().position(|c| !c.is_zero()))
            .min()
            .unwrap_or(0);
        let quotient = self.coeffs[a..]
            .iter()
            .map(|row| row[b..].to_vec())
            .collect();
        (a, b, BiPoly::new(quotient))
    }
}
