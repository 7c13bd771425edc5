//! Complex numbers with dyadic-rational parts, rounded to a fixed number of
//! fractional bits after every inexact operation. Only the certificate
//! extractor uses these.

use num_complex::Complex64;
use num_traits::{Signed, Zero};

use crate::poly::Polynomial;
use crate::rational::{round_dyadic, sqrt_dyadic, to_f64, Rational};

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Cx {
    pub re: Rational,
    pub im: Rational,
}

impl Cx {
    pub fn zero() -> Self {
        Cx::real(Rational::zero())
    }

    pub fn real(re: Rational) -> Self {
        Cx {
            re,
            im: Rational::zero(),
        }
    }

    pub fn from_f64(z: Complex64, bits: u32) -> Self {
        let conv = |v: f64| {
            Rational::from_float(v)
                .map(|r| round_dyadic(&r, bits))
                .unwrap_or_else(Rational::zero)
        };
        Cx {
            re: conv(z.re),
            im: conv(z.im),
        }
    }

    pub fn add(&self, o: &Cx) -> Cx {
        Cx {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    pub fn sub(&self, o: &Cx) -> Cx {
        Cx {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    pub fn mul(&self, o: &Cx, bits: u32) -> Cx {
        Cx {
            re: round_dyadic(&(&self.re * &o.re - &self.im * &o.im), bits),
            im: round_dyadic(&(&self.re * &o.im + &self.im * &o.re), bits),
        }
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn div(&self, o: &Cx, bits: u32) -> Cx {
        let d = o.norm_sqr();
        Cx {
            re: round_dyadic(&((&self.re * &o.re + &self.im * &o.im) / &d), bits),
            im: round_dyadic(&((&self.im * &o.re - &self.re * &o.im) / &d), bits),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Square root with nonnegative imaginary part (and nonnegative real part
    /// on the nonnegative real axis).
    pub fn sqrt_upper(&self, bits: u32) -> Cx {
        if self.im.is_zero() {
            return if self.re.is_negative() {
                Cx {
                    re: Rational::zero(),
                    im: sqrt_dyadic(&-&self.re, bits),
                }
            } else {
                Cx::real(sqrt_dyadic(&self.re, bits))
            };
        }
        let two = Rational::from_integer(2.into());
        let modulus = sqrt_dyadic(&self.norm_sqr(), bits + 8);
        // Compute the larger of the two parts directly to avoid cancellation.
        let (re, im) = if self.re.is_negative() {
            let im = sqrt_dyadic(&((&modulus - &self.re) / &two), bits);
            let re = round_dyadic(&(self.im.abs() / (&two * &im)), bits);
            (re, im)
        } else {
            let re = sqrt_dyadic(&((&modulus + &self.re) / &two), bits);
            let im = round_dyadic(&(self.im.abs() / (&two * &re)), bits);
            (re, im)
        };
        // Principal root has the sign of im(self) in its imaginary part; flip
        // into the upper half plane.
        Cx { re: if self.im.is_negative() { -re } else { re }, im }
    }
}

/// Horner evaluation of a rational polynomial and its derivative at `z`.
fn eval_with_derivative(p: &Polynomial, z: &Cx, bits: u32) -> (Cx, Cx) {
    let mut val = Cx::zero();
    let mut der = Cx::zero();
    for c in p.coeffs().iter().rev() {
        der = der.mul(z, bits).add(&val);
        val = val.mul(z, bits).add(&Cx::real(c.clone()));
    }
    (val, der)
}

fn aberth_f64(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lc = coeffs[n];
    let radius = 1.0
        + coeffs[..n]
            .iter()
            .map(|c| (c / lc).abs())
            .fold(0.0f64, f64::max);
    let mut roots: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = std::f64::consts::TAU * (k as f64 + 0.25) / n as f64 + 0.4;
            Complex64::from_polar(radius * 0.5, theta)
        })
        .collect();
    let eval = |z: Complex64| {
        let mut v = Complex64::zero();
        let mut d = Complex64::zero();
        for &c in coeffs.iter().rev() {
            d = d * z + v;
            v = v * z + c;
        }
        (v, d)
    };
    for _ in 0..500 {
        let mut max_step = 0.0f64;
        for k in 0..n {
            let (v, d) = eval(roots[k]);
            if v == Complex64::zero() {
                continue;
            }
            let ratio = v / d;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| Complex64::new(1.0, 0.0) / (roots[k] - roots[j]))
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                roots[k] -= step;
                max_step = max_step.max(step.norm());
            }
        }
        if max_step < 1e-15 * radius {
            break;
        }
    }
    roots
}

/// All complex roots of a square-free rational polynomial, refined by
/// simultaneous Aberth iterations at `bits` fractional bits. Returns `None`
/// when the iteration does not settle.
pub(crate) fn roots_square_free(p: &Polynomial, bits: u32) -> Option<Vec<Cx>> {
    let n = p.degree()?;
    if n == 0 {
        return Some(Vec::new());
    }
    let monic = p.monic();
    if n == 1 {
        return Some(vec![Cx::real(-monic.coeff(0))]);
    }
    let approx: Vec<f64> = monic.coeffs().iter().map(to_f64).collect();
    let mut roots: Vec<Cx> = aberth_f64(&approx)
        .into_iter()
        .map(|z| Cx::from_f64(z, bits))
        .collect();
    let target = crate::rational::pow2(-2 * i64::from(bits) + 8);
    let one = Cx::real(Rational::from_integer(1.into()));
    for _ in 0..200 {
        let mut max_step = Rational::zero();
        for k in 0..n {
            let (v, d) = eval_with_derivative(&monic, &roots[k], bits);
            if v.is_zero() {
                continue;
            }
            if d.is_zero() {
                return None;
            }
            let ratio = v.div(&d, bits);
            let mut repulsion = Cx::zero();
            for j in (0..n).filter(|&j| j != k) {
                let diff = roots[k].sub(&roots[j]);
                if diff.is_zero() {
                    return None;
                }
                repulsion = repulsion.add(&one.div(&diff, bits));
            }
            let denom = one.sub(&ratio.mul(&repulsion, bits));
            if denom.is_zero() {
                return None;
            }
            let step = ratio.div(&denom, bits);
            let size = step.norm_sqr();
            if size > max_step {
                max_step = size;
            }
            roots[k] = roots[k].sub(&step);
        }
        if max_step <= target {
            return Some(roots);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{dyadic, int};

    #[test]
    fn sqrt_upper_half_plane() {
        let bits = 80;
        let minus_four = Cx::real(int(-4));
        assert_eq!(minus_four.sqrt_upper(bits), Cx { re: int(0), im: int(2) });
        // sqrt(-2i) in the upper half plane is -1 + i
        let z = Cx {
            re: int(0),
            im: int(-2),
        };
        let r = z.sqrt_upper(bits);
        let tol = dyadic(1, bits - 4);
        assert!((&r.re + int(1)).abs() < tol);
        assert!((&r.im - int(1)).abs() < tol);
    }

    #[test]
    fn roots_of_quadratic() {
        // x^2 + 1
        let p = Polynomial::from_ints(&[1, 0, 1]);
        let roots = roots_square_free(&p, 120).unwrap();
        assert_eq!(roots.len(), 2);
        for r in &roots {
            assert!(r.re.abs() < dyadic(1, 100));
            assert!((r.im.abs() - int(1)).abs() < dyadic(1, 100));
        }
    }
}
