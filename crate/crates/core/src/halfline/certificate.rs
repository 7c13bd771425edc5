use num_traits::{Signed, Zero};

use super::complex::{roots_square_free, Cx};
use super::check_nonneg_halfline;
use crate::error::{Error, Result};
use crate::poly::{sturm_count, Bound, Polynomial};
use crate::rational::{floor_log2, pow2, round_dyadic, sqrt_dyadic, Rational};

/// `p = (f1^2 + f2^2) + x (g1^2 + g2^2)` up to an exactly computed residual.
///
/// Coefficients are binary rationals; `residual` is the largest coefficient
/// magnitude of `p - (f1^2 + f2^2) - x (g1^2 + g2^2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyaSzegoCertificate {
    pub f1: Polynomial,
    pub f2: Polynomial,
    pub g1: Polynomial,
    pub g2: Polynomial,
    pub residual: Rational,
    pub tolerance: Rational,
    pub precision_bits: u32,
}

impl PolyaSzegoCertificate {
    /// `(f1^2 + f2^2) + x (g1^2 + g2^2)`.
    pub fn reconstruct(&self) -> Polynomial {
        let f = &(&self.f1 * &self.f1) + &(&self.f2 * &self.f2);
        let g = &(&self.g1 * &self.g1) + &(&self.g2 * &self.g2);
        &f + &(&Polynomial::x() * &g)
    }

    /// Recompute the residual against `p` from the stored polynomials.
    pub fn residual_against(&self, p: &Polynomial) -> Rational {
        (p - &self.reconstruct()).max_norm()
    }
}

/// Numerically factor `p` and assemble a half-line certificate.
///
/// When `p` is nonnegative on the whole real line the certificate is a plain
/// sum of two squares (`g1 = g2 = 0`), taken from the upper-half-plane roots
/// of `p`. Otherwise the roots of `p(x^2)` are used: with
/// `p(x^2) = |h(x)|^2`, splitting `Re h` and `Im h` into even and odd parts
/// gives `f1, g1` and `f2, g2`.
pub fn polya_szego_certificate(p: &Polynomial, precision_bits: u32) -> Result<PolyaSzegoCertificate> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !check_nonneg_halfline(p).member {
        return Err(Error::NotHalflineNonnegative);
    }
    let norm = p.max_norm();
    let tolerance = &norm * pow2(8 - i64::from(precision_bits));
    let work_bits = precision_bits + 64;

    let (h, split_parity) = if globally_nonnegative(p) {
        (sqrt_factor_global(p, work_bits), false)
    } else {
        (sqrt_factor_halfline(p, work_bits), true)
    };
    let not_found = || Error::CertificateNotFound {
        residual: Box::new(norm.clone()),
        tolerance: Box::new(tolerance.clone()),
    };
    let h = h.ok_or_else(not_found)?;

    // Scale-aware quantum: certificate coefficients are on the order of
    // sqrt(|p|_inf).
    let scale_exp = floor_log2(&norm).div_euclid(2);
    let frac_bits = (i64::from(precision_bits) - scale_exp).max(1) as u32;
    let round_poly = |c: Vec<Rational>| Polynomial::new(c.iter().map(|v| round_dyadic(v, frac_bits)).collect());

    let re: Vec<Rational> = h.iter().map(|z| z.re.clone()).collect();
    let im: Vec<Rational> = h.iter().map(|z| z.im.clone()).collect();
    let (f1, f2, g1, g2) = if split_parity {
        let (re_even, re_odd) = split_even_odd(&re);
        let (im_even, im_odd) = split_even_odd(&im);
        (round_poly(re_even), round_poly(im_even), round_poly(re_odd), round_poly(im_odd))
    } else {
        (round_poly(re), round_poly(im), Polynomial::zero(), Polynomial::zero())
    };
    let mut cert = PolyaSzegoCertificate {
        f1,
        f2,
        g1,
        g2,
        residual: Rational::zero(),
        tolerance,
        precision_bits,
    };
    cert.residual = cert.residual_against(p);
    if cert.residual > cert.tolerance {
        return Err(Error::CertificateNotFound {
            residual: Box::new(cert.residual),
            tolerance: Box::new(cert.tolerance),
        });
    }
    Ok(cert)
}

/// `c[0] + c[1] x + c[2] x^2 + ...` → coefficient lists of the even part in
/// `y = x^2` and the odd part divided by `x`, also in `y`.
fn split_even_odd(c: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let even = c.iter().step_by(2).cloned().collect();
    let odd = c.iter().skip(1).step_by(2).cloned().collect();
    (even, odd)
}

/// Every real root has even multiplicity (and the leading coefficient is
/// positive, which the half-line check already ensured).
fn globally_nonnegative(p: &Polynomial) -> bool {
    let factors = p.square_free_decompose().expect("nonzero");
    factors.iter().filter(|(_, m)| m % 2 == 1).all(|(q, _)| {
        sturm_count(q, Bound::NegInfinity, Bound::PosInfinity).expect("nonzero") == 0
    })
}

struct FactorRoots {
    multiplicity: usize,
    real: Vec<Rational>,
    upper: Vec<Cx>,
    lower: Vec<Cx>,
}

/// Roots of every square-free factor, with the real ones snapped to the
/// real axis (their number is known exactly from Sturm counts).
fn classified_roots(p: &Polynomial, bits: u32) -> Option<Vec<FactorRoots>> {
    let mut out = Vec::new();
    for (q, multiplicity) in p.square_free_decompose().ok()? {
        let mut roots = roots_square_free(&q, bits)?;
        let real_count = sturm_count(&q, Bound::NegInfinity, Bound::PosInfinity).ok()?;
        roots.sort_by_key(|z| z.im.abs());
        let complex = roots.split_off(real_count);
        let real = roots.into_iter().map(|z| z.re).collect();
        let (upper, lower): (Vec<Cx>, Vec<Cx>) = complex.into_iter().partition(|z| z.im.is_positive());
        if upper.len() != lower.len() {
            return None;
        }
        out.push(FactorRoots {
            multiplicity,
            real,
            upper,
            lower,
        });
    }
    Some(out)
}

fn times_linear(h: &[Cx], root: &Cx, bits: u32) -> Vec<Cx> {
    // h * (x - root)
    let mut out = vec![Cx::zero(); h.len() + 1];
    for (k, c) in h.iter().enumerate() {
        out[k + 1] = out[k + 1].add(c);
        out[k] = out[k].sub(&c.mul(root, bits));
    }
    out
}

fn sqrt_leading(p: &Polynomial, bits: u32) -> Cx {
    Cx::real(sqrt_dyadic(p.leading_coefficient().expect("nonzero"), bits))
}

/// `h` with `|h(x)|^2 = p(x)` on the real line.
fn sqrt_factor_global(p: &Polynomial, bits: u32) -> Option<Vec<Cx>> {
    let mut h = vec![sqrt_leading(p, bits)];
    for f in classified_roots(p, bits)? {
        for _ in 0..f.multiplicity / 2 {
            for w in &f.real {
                h = times_linear(&h, &Cx::real(w.clone()), bits);
            }
        }
        for _ in 0..f.multiplicity {
            for w in &f.upper {
                h = times_linear(&h, w, bits);
            }
        }
    }
    Some(h)
}

/// `h` with `|h(x)|^2 = p(x^2)` on the real line.
fn sqrt_factor_halfline(p: &Polynomial, bits: u32) -> Option<Vec<Cx>> {
    let zero_mult = p.zero_root_multiplicity();
    let rest = p.strip_zero_root();
    let mut h = vec![Cx::zero(); zero_mult];
    h.push(sqrt_leading(p, bits));
    for f in classified_roots(&rest, bits)? {
        for w in &f.real {
            if w.is_positive() {
                // x^2 - w = (x - sqrt w)(x + sqrt w), half the multiplicity each
                if f.multiplicity % 2 == 1 {
                    return None;
                }
                let s = sqrt_dyadic(w, bits);
                for _ in 0..f.multiplicity / 2 {
                    h = times_linear(&h, &Cx::real(s.clone()), bits);
                    h = times_linear(&h, &Cx::real(-&s), bits);
                }
            } else {
                let z = Cx::real(w.clone()).sqrt_upper(bits);
                for _ in 0..f.multiplicity {
                    h = times_linear(&h, &z, bits);
                }
            }
        }
        for w in f.upper.iter().chain(&f.lower) {
            let z = w.sqrt_upper(bits);
            for _ in 0..f.multiplicity {
                h = times_linear(&h, &z, bits);
            }
        }
    }
    Some(h)
}
