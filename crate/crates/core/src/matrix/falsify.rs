//! Randomized search for nonnegative 2x2 matrices `A` with `p(A)` not
//! entrywise nonnegative.
//!
//! Every sample is an integer matrix over a positive common denominator, so
//! the sign pattern of `p(A)` is that of `sum_k c_k d^(m-k) M^k` with the
//! denominators of `p` cleared. That is evaluated in checked `i128` and
//! redone with big integers on overflow.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::Matrix2;
use crate::poly::Polynomial;
use crate::rational::Rational;

/// The sampling families, used round-robin by trial index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Uniform entries on a grid of step `1/16` in `[0, S]`, `S` the Cauchy
    /// bound of `p`.
    Uniform,
    /// Symmetric circulants with spectrum `{rho, mu}`, `rho >= |mu|`.
    Circulant,
    /// `[[0, rho], [mu, rho - mu]]` over the compactified `(t, r)` grid of
    /// step `1/64`.
    RatioTemplate,
}

impl Family {
    fn of_trial(trial: u64) -> Self {
        match trial % 3 {
            0 => Family::Uniform,
            1 => Family::Circulant,
            _ => Family::RatioTemplate,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Uniform => "uniform",
            Family::Circulant => "circulant",
            Family::RatioTemplate => "ratio-template",
        }
    }
}

/// A violating sample together with where it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Falsification {
    pub trial: u64,
    pub family: Family,
    pub scrambled: bool,
    pub matrix: Matrix2,
}

/// `M / d` with `d > 0`.
#[derive(Debug, Clone, Copy)]
struct Sample {
    m: [[i64; 2]; 2],
    d: i64,
}

impl Sample {
    fn to_matrix(self) -> Matrix2 {
        let q = |n: i64| Rational::new(n.into(), self.d.into());
        Matrix2::new(q(self.m[0][0]), q(self.m[0][1]), q(self.m[1][0]), q(self.m[1][1]))
    }

    /// Diagonal similarity by `diag(2^a, 2^b)` followed by an optional swap,
    /// kept integral by raising the denominator to `d 2^(a+b)`.
    fn scrambled(self, a: u32, b: u32, swap: bool) -> Sample {
        let m = self.m;
        let s = 1i64 << (a + b);
        let mut out = [[m[0][0] * s, m[0][1] << (2 * b)], [m[1][0] << (2 * a), m[1][1] * s]];
        if swap {
            out = [[out[1][1], out[1][0]], [out[0][1], out[0][0]]];
        }
        Sample { m: out, d: self.d * s }
    }
}

struct Sampler {
    /// Uniform entries are `k / 16` with `0 <= k <= uniform_max`.
    uniform_max: i64,
    /// Circulant Perron roots are `i / 16` with `1 <= i <= rho_max`.
    rho_max: i64,
}

const UNIFORM_DENOM: i64 = 16;
const SCALE_CAP: i64 = 1 << 16;

impl Sampler {
    fn new(p: &Polynomial) -> Self {
        let bound = p
            .cauchy_bound()
            .ok()
            .filter(|b| *b > Rational::from_integer(1.into()))
            .unwrap_or_else(|| Rational::from_integer(1.into()));
        let scaled = (bound * Rational::from_integer(UNIFORM_DENOM.into())).ceil();
        let top = scaled.to_integer().to_i64().unwrap_or(SCALE_CAP).min(SCALE_CAP);
        Sampler {
            uniform_max: top,
            rho_max: top.max(UNIFORM_DENOM),
        }
    }

    fn draw(&self, family: Family, rng: &mut ChaCha8Rng) -> Sample {
        match family {
            Family::Uniform => {
                let mut e = || rng.gen_range(0..=self.uniform_max);
                Sample {
                    m: [[e(), e()], [e(), e()]],
                    d: UNIFORM_DENOM,
                }
            }
            Family::Circulant => {
                // rho = i / 16, mu = rho * j / 32; entries (rho +- mu) / 2
                let i = rng.gen_range(1..=self.rho_max);
                let j = rng.gen_range(-32..=32i64);
                let (s, t) = (i * (32 + j), i * (32 - j));
                Sample {
                    m: [[s, t], [t, s]],
                    d: 1024,
                }
            }
            Family::RatioTemplate => {
                // t = i / 64, r = j / 64, rho = r / (1 - r), mu = t rho
                let i = rng.gen_range(1..=64i64);
                let j = rng.gen_range(1..=63i64);
                Sample {
                    m: [[0, 64 * j], [i * j, (64 - i) * j]],
                    d: 64 * (64 - j),
                }
            }
        }
    }
}

/// Integer data for deciding the sign pattern of `p(M / d)`.
struct ImageSigns {
    coeffs: Vec<BigInt>,
    small: Option<Vec<i128>>,
}

impl ImageSigns {
    fn new(p: &Polynomial) -> Self {
        let coeffs = p.integer_coefficients();
        let small = coeffs.iter().map(ToPrimitive::to_i128).collect();
        ImageSigns { coeffs, small }
    }

    fn has_negative_entry(&self, s: &Sample) -> bool {
        if self.coeffs.is_empty() {
            return false;
        }
        if let Some(small) = &self.small {
            if let Some(neg) = horner_i128(small, s) {
                return neg;
            }
        }
        horner_big(&self.coeffs, s)
    }
}

fn horner_i128(c: &[i128], s: &Sample) -> Option<bool> {
    let m = s.m.map(|row| row.map(i128::from));
    let d = i128::from(s.d);
    let top = c.len() - 1;
    let mut acc = [[c[top], 0], [0, c[top]]];
    let mut dpow: i128 = 1;
    for k in (0..top).rev() {
        dpow = dpow.checked_mul(d)?;
        let mut next = [[0i128; 2]; 2];
        for (i, row) in next.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let a = acc[i][0].checked_mul(m[0][j])?;
                let b = acc[i][1].checked_mul(m[1][j])?;
                *cell = a.checked_add(b)?;
            }
        }
        let shift = c[k].checked_mul(dpow)?;
        next[0][0] = next[0][0].checked_add(shift)?;
        next[1][1] = next[1][1].checked_add(shift)?;
        acc = next;
    }
    Some(acc.iter().flatten().any(|&x| x < 0))
}

fn horner_big(c: &[BigInt], s: &Sample) -> bool {
    let m = s.m.map(|row| row.map(BigInt::from));
    let d = BigInt::from(s.d);
    let top = c.len() - 1;
    let mut acc = [[c[top].clone(), BigInt::zero()], [BigInt::zero(), c[top].clone()]];
    let mut dpow = BigInt::from(1);
    for k in (0..top).rev() {
        dpow *= &d;
        let cell = |i: usize, j: usize| &acc[i][0] * &m[0][j] + &acc[i][1] * &m[1][j];
        let mut next = [[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]];
        let shift = &c[k] * &dpow;
        next[0][0] += &shift;
        next[1][1] += &shift;
        acc = next;
    }
    acc.iter().flatten().any(|x| x < &BigInt::zero())
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Run `trials` independent samples and report the violation with the
/// smallest trial index, if any. Deterministic in `seed` regardless of how
/// rayon schedules the trials.
pub fn falsify_search(p: &Polynomial, trials: u64, seed: u64) -> Option<Falsification> {
    let sampler = Sampler::new(p);
    let signs = ImageSigns::new(p);
    (0..trials).into_par_iter().find_map_first(|trial| {
        let mut rng = trial_rng(seed, trial);
        let family = Family::of_trial(trial);
        let mut sample = sampler.draw(family, &mut rng);
        let scrambled = rng.gen_bool(0.5);
        if scrambled {
            sample = sample.scrambled(rng.gen_range(0..=3), rng.gen_range(0..=3), rng.gen());
        }
        signs.has_negative_entry(&sample).then(|| Falsification {
            trial,
            family,
            scrambled,
            matrix: sample.to_matrix(),
        })
    })
}

/// First sampled nonnegative matrix `A` with `p(A)` having a negative entry.
pub fn falsify_random(p: &Polynomial, trials: u64, seed: u64) -> Option<Matrix2> {
    falsify_search(p, trials, seed).map(|f| f.matrix)
}
