//! Exact 2x2 matrices, matrix-polynomial evaluation and generators of
//! nonnegative matrices used to cross-check the analytic deciders.

mod falsify;

pub use falsify::{falsify_random, falsify_search, Falsification, Family};

use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;

/// Row-major 2x2 matrix `[[a11, a12], [a21, a22]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix2 {
    pub entries: [[Rational; 2]; 2],
}

impl Matrix2 {
    pub fn new(a11: Rational, a12: Rational, a21: Rational, a22: Rational) -> Self {
        Matrix2 {
            entries: [[a11, a12], [a21, a22]],
        }
    }

    pub fn zero() -> Self {
        Self::scalar(Rational::zero())
    }

    pub fn identity() -> Self {
        Self::scalar(Rational::one())
    }

    pub fn scalar(c: Rational) -> Self {
        Matrix2::new(c.clone(), Rational::zero(), Rational::zero(), c)
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i][j]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Rational> {
        self.entries.iter().flatten()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.iter().all(|x| !x.is_negative())
    }

    pub fn is_positive(&self) -> bool {
        self.iter().all(Signed::is_positive)
    }

    /// First strictly negative entry in row-major order, 0-based.
    pub fn first_negative_entry(&self) -> Option<(usize, usize, Rational)> {
        (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .find(|&(i, j)| self.entries[i][j].is_negative())
            .map(|(i, j)| (i, j, self.entries[i][j].clone()))
    }

    pub fn trace(&self) -> Rational {
        &self.entries[0][0] + &self.entries[1][1]
    }

    pub fn determinant(&self) -> Rational {
        &self.entries[0][0] * &self.entries[1][1] - &self.entries[0][1] * &self.entries[1][0]
    }

    pub fn scale(&self, c: &Rational) -> Matrix2 {
        let e = &self.entries;
        Matrix2::new(&e[0][0] * c, &e[0][1] * c, &e[1][0] * c, &e[1][1] * c)
    }

    pub fn transpose(&self) -> Matrix2 {
        let e = &self.entries;
        Matrix2::new(e[0][0].clone(), e[1][0].clone(), e[0][1].clone(), e[1][1].clone())
    }
}

impl Add for &Matrix2 {
    type Output = Matrix2;
    fn add(self, o: &Matrix2) -> Matrix2 {
        let (a, b) = (&self.entries, &o.entries);
        Matrix2::new(
            &a[0][0] + &b[0][0],
            &a[0][1] + &b[0][1],
            &a[1][0] + &b[1][0],
            &a[1][1] + &b[1][1],
        )
    }
}

impl Mul for &Matrix2 {
    type Output = Matrix2;
    fn mul(self, o: &Matrix2) -> Matrix2 {
        let (a, b) = (&self.entries, &o.entries);
        let cell = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        Matrix2::new(cell(0, 0), cell(0, 1), cell(1, 0), cell(1, 1))
    }
}

impl fmt::Display for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.entries;
        write!(f, "[[{}, {}], [{}, {}]]", e[0][0], e[0][1], e[1][0], e[1][1])
    }
}

/// `p(A) = sum a_k A^k` by Horner's scheme; the zero polynomial maps to the
/// zero matrix.
pub fn horner_matrix_eval(p: &Polynomial, a: &Matrix2) -> Matrix2 {
    p.coeffs()
        .iter()
        .rev()
        .fold(Matrix2::zero(), |acc, c| &(&acc * a) + &Matrix2::scalar(c.clone()))
}

/// Spectrum and shape parameters of a positive 2x2 matrix in the normal form
/// `1/(1+alpha) [[alpha rho + mu, rho - mu], [alpha (rho - mu), alpha mu + rho]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosMatrixParams {
    rho: Rational,
    mu: Rational,
    alpha: Rational,
}

impl PosMatrixParams {
    /// Requires `rho > |mu|`, `alpha > 0` and, when `mu < 0`,
    /// `|mu| / rho < alpha < rho / |mu|` so that every entry is positive.
    pub fn new(rho: Rational, mu: Rational, alpha: Rational) -> Result<Self> {
        if !(rho > mu.abs()) {
            return Err(Error::precondition("positive matrix needs rho > |mu|"));
        }
        if !alpha.is_positive() {
            return Err(Error::precondition("positive matrix needs alpha > 0"));
        }
        if mu.is_negative() {
            let m = mu.abs();
            if !(&m / &rho < alpha && alpha < &rho / &m) {
                return Err(Error::precondition("alpha outside the positivity window"));
            }
        }
        Ok(PosMatrixParams { rho, mu, alpha })
    }

    pub fn rho(&self) -> &Rational {
        &self.rho
    }

    pub fn mu(&self) -> &Rational {
        &self.mu
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    fn normal_form(&self, top: &Rational, bottom: &Rational) -> Matrix2 {
        // top plays rho, bottom plays mu
        let (a, one) = (&self.alpha, Rational::one());
        let inv = (&one + a).recip();
        Matrix2::new(
            a * top + bottom,
            top - bottom,
            a * (top - bottom),
            a * bottom + top,
        )
        .scale(&inv)
    }
}

/// The positive matrix with spectrum `{rho, mu}` described by `params`.
pub fn posmatrix_generate(params: &PosMatrixParams) -> Matrix2 {
    params.normal_form(&params.rho, &params.mu)
}

/// `p` applied to [`posmatrix_generate`] through the eigen-decomposition:
/// the same normal form with `p(rho)` and `p(mu)` in place of the spectrum.
pub fn closed_form_image(p: &Polynomial, params: &PosMatrixParams) -> Matrix2 {
    params.normal_form(&p.eval(&params.rho), &p.eval(&params.mu))
}

/// `P^T (D^-1 A D) P` with `D = diag(d1, d2)` and `P` the identity or the
/// swap permutation. Entrywise signs of `p(A)` are invariant under this.
pub fn scramble_similarity(a: &Matrix2, d1: &Rational, d2: &Rational, swap: bool) -> Result<Matrix2> {
    if !(d1.is_positive() && d2.is_positive()) {
        return Err(Error::precondition("diagonal scaling must be positive"));
    }
    let e = &a.entries;
    let scaled = Matrix2::new(
        e[0][0].clone(),
        &e[0][1] * d2 / d1,
        &e[1][0] * d1 / d2,
        e[1][1].clone(),
    );
    Ok(if swap {
        let s = &scaled.entries;
        Matrix2::new(s[1][1].clone(), s[1][0].clone(), s[0][1].clone(), s[0][0].clone())
    } else {
        scaled
    })
}

/// Symmetric circulant `1/2 [[rho + mu, rho - mu], [rho - mu, rho + mu]]`
/// with eigenvalues `rho` and `mu`. Requires `rho >= |mu|`, which makes it
/// nonnegative; if `p(rho) < |p(mu)|` then `p` of it has a negative entry.
pub fn witness_from_spectral(rho: &Rational, mu: &Rational) -> Result<Matrix2> {
    if !(rho >= &mu.abs()) {
        return Err(Error::precondition("spectral witness needs rho >= |mu|"));
    }
    let half = Rational::new(1.into(), 2.into());
    let (s, d) = (rho + mu, rho - mu);
    Ok(Matrix2::new(s.clone(), d.clone(), d, s).scale(&half))
}

/// `[[0, rho], [mu, rho - mu]]`, nonnegative for `0 < mu <= rho`, with
/// eigenvalues `rho` and `-mu`; `p` of it has `(1, 1)` entry
/// `(rho p(-mu) + mu p(rho)) / (rho + mu)`.
pub fn witness_from_ratio(rho: &Rational, mu: &Rational) -> Result<Matrix2> {
    if !(mu.is_positive() && mu <= rho) {
        return Err(Error::precondition("ratio witness needs 0 < mu <= rho"));
    }
    Ok(Matrix2::new(Rational::zero(), rho.clone(), mu.clone(), rho - mu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn m(a: Rational, b: Rational, c: Rational, d: Rational) -> Matrix2 {
        Matrix2::new(a, b, c, d)
    }

    #[test]
    fn horner_examples() {
        let a = m(rat(1, 3), int(2), int(0), int(-5));
        assert_eq!(horner_matrix_eval(&Polynomial::x(), &a), a);
        let swap = m(int(0), int(1), int(1), int(0));
        assert_eq!(horner_matrix_eval(&Polynomial::from_ints(&[0, 0, 1]), &swap), Matrix2::identity());
        let w = m(int(0), int(1), rat(1, 2), rat(1, 2));
        let image = horner_matrix_eval(&Polynomial::from_ints(&[0, 2, 0, -2, 0, 1]), &w);
        assert_eq!(image.get(0, 0), &rat(-3, 16));
        assert_eq!(horner_matrix_eval(&Polynomial::zero(), &w), Matrix2::zero());
    }

    #[test]
    fn posmatrix_examples() {
        let b = posmatrix_generate(&PosMatrixParams::new(int(1), rat(-1, 2), int(1)).unwrap());
        assert_eq!(b, m(rat(1, 4), rat(3, 4), rat(3, 4), rat(1, 4)));
        let b = posmatrix_generate(&PosMatrixParams::new(int(1), int(0), int(1)).unwrap());
        assert_eq!(b, m(rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)));
        let b = posmatrix_generate(&PosMatrixParams::new(int(2), int(1), int(2)).unwrap());
        assert_eq!(b, m(rat(5, 3), rat(1, 3), rat(2, 3), rat(4, 3)));
        assert!(b.is_positive());
        assert_eq!((b.trace(), b.determinant()), (int(3), int(2)));
    }

    #[test]
    fn positivity_window_enforced() {
        assert!(PosMatrixParams::new(int(1), rat(-1, 2), rat(1, 2)).is_err());
        assert!(PosMatrixParams::new(int(1), rat(-1, 2), int(2)).is_err());
        assert!(PosMatrixParams::new(int(1), int(1), int(1)).is_err());
        assert!(PosMatrixParams::new(int(1), int(0), int(0)).is_err());
    }

    #[test]
    fn closed_form_examples() {
        let params = PosMatrixParams::new(int(1), rat(-1, 2), int(1)).unwrap();
        assert_eq!(closed_form_image(&Polynomial::x(), &params), posmatrix_generate(&params));
        let sq = closed_form_image(&Polynomial::from_ints(&[0, 0, 1]), &params);
        assert_eq!(sq, m(rat(5, 8), rat(3, 8), rat(3, 8), rat(5, 8)));
        let b = posmatrix_generate(&params);
        assert_eq!(sq, &b * &b);
        let f = closed_form_image(&Polynomial::from_ints(&[0, 2, 0, -2, 0, 1]), &params);
        assert_eq!(f, m(rat(7, 64), rat(57, 64), rat(57, 64), rat(7, 64)));
    }

    #[test]
    fn scramble_examples() {
        let a = m(int(0), int(1), rat(1, 2), rat(1, 2));
        assert_eq!(scramble_similarity(&a, &int(1), &int(1), false).unwrap(), a);
        assert_eq!(
            scramble_similarity(&a, &int(1), &int(2), false).unwrap(),
            m(int(0), int(2), rat(1, 4), rat(1, 2))
        );
        let g = m(int(1), int(2), int(3), int(4));
        assert_eq!(scramble_similarity(&g, &int(1), &int(1), true).unwrap(), m(int(4), int(3), int(2), int(1)));
        assert!(scramble_similarity(&g, &int(0), &int(1), false).is_err());
    }

    #[test]
    fn witness_templates() {
        assert_eq!(witness_from_spectral(&int(1), &int(-1)).unwrap(), m(int(0), int(1), int(1), int(0)));
        assert_eq!(witness_from_spectral(&int(1), &int(1)).unwrap(), Matrix2::identity());
        assert_eq!(witness_from_spectral(&int(3), &int(1)).unwrap(), m(int(2), int(1), int(1), int(2)));
        assert!(witness_from_spectral(&int(1), &int(2)).is_err());

        assert_eq!(witness_from_ratio(&int(1), &rat(1, 2)).unwrap(), m(int(0), int(1), rat(1, 2), rat(1, 2)));
        assert_eq!(witness_from_ratio(&int(1), &int(1)).unwrap(), m(int(0), int(1), int(1), int(0)));
        assert_eq!(witness_from_ratio(&int(2), &int(1)).unwrap(), m(int(0), int(2), int(1), int(1)));
        assert!(witness_from_ratio(&int(1), &int(0)).is_err());
    }
}
