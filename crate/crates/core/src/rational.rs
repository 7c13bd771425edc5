//! Exact rational scalars and the few helpers the rest of the crate needs on
//! top of [`num_rational::BigRational`]: literal parsing, dyadic rounding and
//! fixed-point square roots.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / 2^exp`.
pub fn dyadic(num: i64, exp: u32) -> Rational {
    Rational::new(BigInt::from(num), BigInt::one() << exp)
}

pub fn pow2(exp: i64) -> Rational {
    if exp >= 0 {
        Rational::from_integer(BigInt::one() << exp as usize)
    } else {
        Rational::new(BigInt::one(), BigInt::one() << (-exp) as usize)
    }
}

/// Canonical `num/den` text, or just `num` for integers.
pub fn to_exact_string(x: &Rational) -> String {
    x.to_string()
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Parse an unsigned or signed rational literal: `7`, `-3/4`, `0.5`, `.5`,
/// `+2.25`. Decimals are converted exactly.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let parse_err = |message: &str| Error::Parse {
        position: 0,
        message: format!("{message}: `{text}`"),
    };
    if s.is_empty() {
        return Err(parse_err("empty coefficient"));
    }
    if s.chars().any(|c| c.is_ascii_alphabetic()) {
        return Err(Error::UnsupportedCoefficient {
            token: s.to_string(),
            position: 0,
        });
    }
    let (negative, body) = match s.as_bytes()[0] {
        b'-' => (true, s[1..].trim_start()),
        b'+' => (false, s[1..].trim_start()),
        _ => (false, s),
    };
    let value = if let Some((num, den)) = body.split_once('/') {
        let num = parse_decimal(num.trim()).ok_or_else(|| parse_err("bad numerator"))?;
        let den = parse_decimal(den.trim()).ok_or_else(|| parse_err("bad denominator"))?;
        if den.is_zero() {
            return Err(parse_err("zero denominator"));
        }
        num / den
    } else {
        parse_decimal(body).ok_or_else(|| parse_err("bad number"))?
    };
    Ok(if negative { -value } else { value })
}

/// Digits with an optional single decimal point; no sign, no exponent.
pub(crate) fn parse_decimal(s: &str) -> Option<Rational> {
    if s.is_empty() || s == "." {
        return None;
    }
    let (whole, frac) = match s.split_once('.') {
        Some((w, f)) => (w, f),
        None => (s, ""),
    };
    if !whole.bytes().all(|b| b.is_ascii_digit()) || !frac.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{whole}{frac}");
    let num: BigInt = digits.parse().ok()?;
    let den = num_traits::pow(BigInt::from(10u32), frac.len());
    Some(Rational::new(num, den))
}

/// Round to the nearest multiple of `2^-frac_bits` (ties away from zero).
pub fn round_dyadic(x: &Rational, frac_bits: u32) -> Rational {
    let scale = BigInt::one() << frac_bits;
    let scaled = x * Rational::from_integer(scale.clone());
    let two = BigInt::from(2);
    // floor(|v| + 1/2) with the sign reapplied
    let num = scaled.numer().abs() * &two + scaled.denom();
    let den = scaled.denom() * &two;
    let mag = num.div_floor(&den);
    let rounded = if scaled.is_negative() { -mag } else { mag };
    Rational::new(rounded, scale)
}

/// `floor(sqrt(x) * 2^frac_bits) / 2^frac_bits` for `x >= 0`.
pub fn sqrt_dyadic(x: &Rational, frac_bits: u32) -> Rational {
    assert!(!x.is_negative(), "square root of a negative rational");
    let shifted = (x.numer() << (2 * frac_bits as usize)) / x.denom();
    let root = shifted.sqrt();
    Rational::new(root, BigInt::one() << frac_bits)
}

/// floor(log2 |x|) for nonzero `x`.
pub fn floor_log2(x: &Rational) -> i64 {
    debug_assert!(!x.is_zero());
    let n = x.numer().magnitude();
    let d = x.denom().magnitude();
    let mut e = n.bits() as i64 - d.bits() as i64;
    // 2^e <= |x| < 2^(e+1) after at most one correction
    let probe = pow2(e);
    if x.abs() < probe {
        e -= 1;
    }
    e
}

pub fn sign(x: &Rational) -> i8 {
    match x.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}
