//! Tensor Bernstein coefficients on rational boxes inside `[0, 1]^2`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::bipoly::BiPoly;
use crate::rational::Rational;

/// Closed box `[t_lo, t_hi] x [r_lo, r_hi]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoxRegion {
    pub t_lo: Rational,
    pub t_hi: Rational,
    pub r_lo: Rational,
    pub r_hi: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    T,
    R,
}

impl BoxRegion {
    pub fn unit() -> Self {
        BoxRegion {
            t_lo: Rational::zero(),
            t_hi: Rational::one(),
            r_lo: Rational::zero(),
            r_hi: Rational::one(),
        }
    }

    pub fn t_width(&self) -> Rational {
        &self.t_hi - &self.t_lo
    }

    pub fn r_width(&self) -> Rational {
        &self.r_hi - &self.r_lo
    }

    pub fn area(&self) -> Rational {
        self.t_width() * self.r_width()
    }

    /// Longer side; ties go to `t`.
    pub fn split_axis(&self) -> Axis {
        if self.r_width() > self.t_width() {
            Axis::R
        } else {
            Axis::T
        }
    }

    pub fn halves(&self, axis: Axis) -> (BoxRegion, BoxRegion) {
        let two = Rational::from_integer(2.into());
        let mut lo = self.clone();
        let mut hi = self.clone();
        match axis {
            Axis::T => {
                let mid = (&self.t_lo + &self.t_hi) / &two;
                lo.t_hi = mid.clone();
                hi.t_lo = mid;
            }
            Axis::R => {
                let mid = (&self.r_lo + &self.r_hi) / &two;
                lo.r_hi = mid.clone();
                hi.r_lo = mid;
            }
        }
        (lo, hi)
    }

    pub fn contains(&self, t: &Rational, r: &Rational) -> bool {
        &self.t_lo <= t && t <= &self.t_hi && &self.r_lo <= r && r <= &self.r_hi
    }
}

/// Bernstein coefficients of a bivariate polynomial restricted to a box.
/// `coeffs[i][j]` pairs with `B_i(u) B_j(v)` where `t = t_lo + u * t_width`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernsteinBox {
    pub region: BoxRegion,
    pub coeffs: Vec<Vec<Rational>>,
}

impl BernsteinBox {
    pub fn degrees(&self) -> (usize, usize) {
        (self.coeffs.len() - 1, self.coeffs[0].len() - 1)
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs
            .iter()
            .flatten()
            .all(|c| !c.is_negative())
    }

    pub fn min_coefficient(&self) -> &Rational {
        self.coeffs.iter().flatten().min().expect("nonempty")
    }

    /// Corner coefficients, which equal the polynomial's corner values:
    /// `[(t_lo, r_lo), (t_lo, r_hi), (t_hi, r_lo), (t_hi, r_hi)]`.
    pub fn corners(&self) -> [&Rational; 4] {
        let (n, m) = self.degrees();
        [
            &self.coeffs[0][0],
            &self.coeffs[0][m],
            &self.coeffs[n][0],
            &self.coeffs[n][m],
        ]
    }

    /// Halve along `axis` by de Casteljau at 1/2.
    pub fn split(&self, axis: Axis) -> (BernsteinBox, BernsteinBox) {
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let (lo_region, hi_region) = self.region.halves(axis);
        let (lo, hi) = match axis {
            Axis::T => {
                let cols = transpose(&self.coeffs);
                let (l, h): (Vec<_>, Vec<_>) = cols.iter().map(|c| de_casteljau(c, &half)).unzip();
                (transpose(&l), transpose(&h))
            }
            Axis::R => self.coeffs.iter().map(|row| de_casteljau(row, &half)).unzip(),
        };
        (
            BernsteinBox {
                region: lo_region,
                coeffs: lo,
            },
            BernsteinBox {
                region: hi_region,
                coeffs: hi,
            },
        )
    }
}

/// Coefficient matrix padded to the full `(deg_t + 1) x (deg_r + 1)` shape,
/// with `(0, 0)` degrees for the zero polynomial.
fn dense(bp: &BiPoly) -> Vec<Vec<Rational>> {
    if bp.is_zero() {
        vec![vec![Rational::zero()]]
    } else {
        bp.coeffs().to_vec()
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Power-basis to Bernstein-basis coefficients on `[0, 1]`, same degree.
pub(crate) fn power_to_bernstein(c: &[Rational]) -> Vec<Rational> {
    let n = c.len() - 1;
    (0..=n)
        .map(|i| {
            (0..=i).fold(Rational::zero(), |acc, k| {
                acc + &c[k] * Rational::new(binomial(i, k), binomial(n, k))
            })
        })
        .collect()
}

/// Split Bernstein coefficients on `[0, 1]` at `s`; returns the coefficients
/// on `[0, s]` and `[s, 1]`.
pub(crate) fn de_casteljau(b: &[Rational], s: &Rational) -> (Vec<Rational>, Vec<Rational>) {
    let n = b.len();
    let one_minus = Rational::one() - s;
    let mut work = b.to_vec();
    let mut left = Vec::with_capacity(n);
    let mut right = Vec::with_capacity(n);
    left.push(work[0].clone());
    right.push(work[n - 1].clone());
    for level in 1..n {
        for k in 0..n - level {
            work[k] = &work[k] * &one_minus + &work[k + 1] * s;
        }
        left.push(work[0].clone());
        right.push(work[n - 1 - level].clone());
    }
    right.reverse();
    (left, right)
}

/// Bernstein coefficients on `[0, 1]` restricted to `[lo, hi]`.
fn restrict(b: &[Rational], lo: &Rational, hi: &Rational) -> Vec<Rational> {
    let upper = if hi.is_one() {
        b.to_vec()
    } else {
        de_casteljau(b, hi).0
    };
    if lo.is_zero() {
        upper
    } else {
        de_casteljau(&upper, &(lo / hi)).1
    }
}

fn transpose(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let cols = m[0].len();
    (0..cols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

fn map_rows(m: &[Vec<Rational>], f: impl Fn(&[Rational]) -> Vec<Rational>) -> Vec<Vec<Rational>> {
    m.iter().map(|row| f(row)).collect()
}

fn map_cols(m: &[Vec<Rational>], f: impl Fn(&[Rational]) -> Vec<Rational>) -> Vec<Vec<Rational>> {
    transpose(&map_rows(&transpose(m), f))
}

/// Bernstein coefficients of `bp` on `[0, 1]^2`.
pub fn unit_bernstein(bp: &BiPoly) -> BernsteinBox {
    let c = dense(bp);
    let coeffs = map_cols(&map_rows(&c, power_to_bernstein), power_to_bernstein);
    BernsteinBox {
        region: BoxRegion::unit(),
        coeffs,
    }
}

/// Bernstein coefficients of `bp` on `region`: unit-box conversion followed
/// by de Casteljau restriction along each axis.
pub fn bernstein_tensor(bp: &BiPoly, region: &BoxRegion) -> BernsteinBox {
    let unit = unit_bernstein(bp);
    let rows = map_rows(&unit.coeffs, |row| restrict(row, &region.r_lo, &region.r_hi));
    let coeffs = map_cols(&rows, |col| restrict(col, &region.t_lo, &region.t_hi));
    BernsteinBox {
        region: region.clone(),
        coeffs,
    }
}

/// Power coefficients of `q(lo + width * u)` in `u`.
fn affine_substitute(c: &[Rational], lo: &Rational, width: &Rational) -> Vec<Rational> {
    let n = c.len();
    let mut out = vec![Rational::zero(); n];
    // (lo + width u)^k expanded binomially
    for (k, ck) in c.iter().enumerate() {
        if ck.is_zero() {
            continue;
        }
        for j in 0..=k {
            let term = Rational::from_integer(binomial(k, j))
                * num_traits::pow(lo.clone(), k - j)
                * num_traits::pow(width.clone(), j);
            out[j] += ck * term;
        }
    }
    out
}

/// Same coefficients as [`bernstein_tensor`], computed by affine change of
/// variables in the power basis and a direct basis conversion. Used to replay
/// certificates through a route that shares no code with subdivision.
pub fn bernstein_by_substitution(bp: &BiPoly, region: &BoxRegion) -> BernsteinBox {
    let c = dense(bp);
    let (tw, rw) = (region.t_width(), region.r_width());
    let shifted = map_cols(
        &map_rows(&c, |row| affine_substitute(row, &region.r_lo, &rw)),
        |col| affine_substitute(col, &region.t_lo, &tw),
    );
    let coeffs = map_cols(&map_rows(&shifted, power_to_bernstein), power_to_bernstein);
    BernsteinBox {
        region: region.clone(),
        coeffs,
    }
}
