use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// Dense univariate polynomial over the rationals.
///
/// `coeffs[k]` is the coefficient of `x^k`. Trailing zeros are never stored,
/// so the zero polynomial is the empty vector and has no degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Largest coefficient magnitude, zero for the zero polynomial.
    pub fn max_norm(&self) -> Rational {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Polynomial {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Polynomial {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Even and odd parts `(p_e, p_o)` with `p = p_e + p_o`.
    pub fn decompose_parity(&self) -> (Polynomial, Polynomial) {
        let pick = |parity: usize| {
            Self::new(
                self.coeffs
                    .iter()
                    .enumerate()
                    .map(|(k, c)| if k % 2 == parity { c.clone() } else { Rational::zero() })
                    .collect(),
            )
        };
        (pick(0), pick(1))
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divide by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
            None => Self::zero(),
        }
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let d_deg = divisor.degree().ok_or(Error::DivisionByZero)?;
        let d_lc = &divisor.coeffs[d_deg];
        let mut rem = self.coeffs.clone();
        let Some(n_deg) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if n_deg < d_deg {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); n_deg - d_deg + 1];
        for shift in (0..=n_deg - d_deg).rev() {
            let lead = &rem[shift + d_deg];
            if lead.is_zero() {
                continue;
            }
            let factor = lead / d_lc;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &factor * dc;
            }
            quot[shift] = factor;
        }
        rem.truncate(d_deg);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// Exact quotient; the caller guarantees divisibility.
    pub(crate) fn exact_div(&self, divisor: &Polynomial) -> Polynomial {
        let (q, r) = self.div_rem(divisor).expect("nonzero divisor");
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
        let (mut u, mut v) = (a.monic(), b.monic());
        while !v.is_zero() {
            let r = u.rem(&v).expect("nonzero divisor");
            u = v;
            v = r.monic();
        }
        u.monic()
    }

    /// Radical of `self` (monic): same roots, each simple.
    pub fn square_free_part(&self) -> Result<Polynomial> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = Self::gcd(self, &self.derivative());
        Ok(self.exact_div(&g).monic())
    }

    /// Yun's algorithm. Returns monic, pairwise coprime, square-free factors
    /// `q_i` with their multiplicities so that `self = lc * prod q_i^i`.
    /// Constant factors are omitted, so a nonzero constant yields `[]`.
    pub fn square_free_decompose(&self) -> Result<Vec<(Polynomial, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = Self::gcd(&f, &df);
        let mut b = f.exact_div(&a0);
        let mut c = df.exact_div(&a0);
        let mut d = &c - &b.derivative();
        let mut factors = Vec::new();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = Self::gcd(&b, &d);
            b = b.exact_div(&a);
            c = d.exact_div(&a);
            d = &c - &b.derivative();
            if a.degree().unwrap_or(0) > 0 {
                factors.push((a, i));
            }
            i += 1;
        }
        Ok(factors)
    }

    /// `1 + max_{k<m} |a_k| / |a_m|`: every real root lies strictly inside
    /// `(-bound, bound)`.
    pub fn cauchy_bound(&self) -> Result<Rational> {
        let lc = self.leading_coefficient().ok_or(Error::ZeroPolynomial)?.abs();
        let lower = &self.coeffs[..self.coeffs.len() - 1];
        let max = lower
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero);
        Ok(Rational::one() + max / lc)
    }

    /// Sign of `p(x)` as `x -> +inf`: the sign of the leading coefficient.
    pub fn sign_at_pos_infinity(&self) -> i8 {
        self.leading_coefficient().map_or(0, crate::rational::sign)
    }

    pub fn sign_at_neg_infinity(&self) -> i8 {
        let s = self.sign_at_pos_infinity();
        match self.degree() {
            Some(d) if d % 2 == 1 => -s,
            _ => s,
        }
    }

    /// Multiplicity of the root at zero (number of leading zero coefficients).
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Drop the factor `x^k` where `k` is the multiplicity of the root at 0.
    pub fn strip_zero_root(&self) -> Polynomial {
        let k = self.zero_root_multiplicity();
        Self::new(self.coeffs[k.min(self.coeffs.len())..].to_vec())
    }

    /// Positive integer multiple with integer coefficients (denominators cleared).
    pub fn integer_coefficients(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()));
        self.coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect()
    }

    pub fn pow(&self, e: usize) -> Polynomial {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Parseable text in descending powers, e.g. `x^5 - 2*x^3 + 2*x`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}*")?;
                    }
                    write!(f, "x")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
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
    fn eval_examples() {
        assert_eq!(Polynomial::x().eval(&int(1)), int(1));
        assert_eq!(p(&[0, 2, 0, -2, 0, 1]).eval(&rat(-1, 2)), rat(-25, 32));
        assert_eq!(p(&[1, 1, -1, 0, 1]).eval(&int(1)), int(2));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[0, 2, 0, -2, 0, 1]).derivative(), p(&[2, 0, -6, 0, 5]));
        assert!(p(&[7]).derivative().is_zero());
        assert_eq!(p(&[1, 1, -1, 0, 1]).derivative(), p(&[1, -2, 0, 4]));
    }

    #[test]
    fn parity_examples() {
        let f = p(&[0, 2, 0, -2, 0, 1]);
        assert_eq!(f.decompose_parity(), (Polynomial::zero(), f.clone()));
        let g = p(&[1, 1, -1, 0, 1]);
        assert_eq!(g.decompose_parity(), (p(&[1, 0, -1, 0, 1]), p(&[0, 1])));
        assert_eq!(p(&[0, 0, 1]).decompose_parity(), (p(&[0, 0, 1]), Polynomial::zero()));
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(p(&[5]).reflect(), p(&[5]));
        let f = p(&[0, 2, 0, -2, 0, 1]);
        assert_eq!(f.reflect(), -&f);
        assert_eq!(p(&[1, 1, -1, 0, 1]).reflect(), p(&[1, -1, -1, 0, 1]));
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(p(&[0, 0, 0]), Polynomial::zero());
        assert_eq!(p(&[3]).degree(), Some(0));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(p(&[1, 1]).div_rem(&Polynomial::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn square_free_examples() {
        assert_eq!(p(&[1, -2, 1]).square_free_decompose().unwrap(), vec![(p(&[-1, 1]), 2)]);
        assert_eq!(p(&[0, 0, 0, 1]).square_free_decompose().unwrap(), vec![(p(&[0, 1]), 3)]);
        assert_eq!(p(&[-1, 0, 1]).square_free_decompose().unwrap(), vec![(p(&[-1, 0, 1]), 1)]);
        assert_eq!(Polynomial::zero().square_free_decompose(), Err(Error::ZeroPolynomial));
        assert!(p(&[4]).square_free_decompose().unwrap().is_empty());
    }

    #[test]
    fn cauchy_examples() {
        assert_eq!(p(&[-1, 0, 1]).cauchy_bound().unwrap(), int(2));
        assert_eq!(Polynomial::x().cauchy_bound().unwrap(), int(1));
        assert_eq!(p(&[0, 2, 0, -2, 0, 1]).cauchy_bound().unwrap(), int(3));
        assert_eq!(Polynomial::zero().cauchy_bound(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(p(&[0, 2, 0, -2, 0, 1]).to_string(), "x^5 - 2*x^3 + 2*x");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(Polynomial::constant(rat(3, 4)).to_string(), "3/4");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }
}
