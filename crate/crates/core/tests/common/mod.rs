#![allow(dead_code)]

use np_preserve::rational::{int, rat};
use np_preserve::{Polynomial, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn p(c: &[i64]) -> Polynomial {
    Polynomial::from_ints(c)
}

pub fn independence() -> Polynomial {
    p(&[0, 2, 0, -2, 0, 1])
}

pub fn separation() -> Polynomial {
    p(&[1, 1, -1, 0, 1])
}

pub fn named_examples() -> Vec<Polynomial> {
    vec![
        independence(),
        p(&[0, -1]),
        separation(),
        Polynomial::x(),
        p(&[0, 0, 1]),
        p(&[2, 0, -6, 0, 5]),
        p(&[1, 0, -1, 0, 1]),
        p(&[1, -2, 0, 4]),
        p(&[1, 1, 1]),
        p(&[1, 1, -1, 1, 1]),
        p(&[2, 0, -2, 0, 1]),
        Polynomial::zero(),
        Polynomial::one(),
        p(&[-1]),
        Polynomial::constant(rat(3, 4)),
    ]
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut impl Rng, max_num: i64) -> Rational {
    rat(rng.gen_range(-max_num..=max_num), rng.gen_range(1..=4))
}

/// Random polynomial of degree at most `max_deg` from one of several
/// shapes, so the corpus mixes members, near-members and clear rejections.
pub fn random_polynomial(rng: &mut impl Rng, max_deg: usize) -> Polynomial {
    let deg = rng.gen_range(1..=max_deg);
    let coeffs: Vec<Rational> = match rng.gen_range(0..4) {
        // unconstrained
        0 => (0..=deg).map(|_| small_rational(rng, 4)).collect(),
        // nonnegative except one even coefficient nudged below zero
        1 => {
            let mut c: Vec<Rational> = (0..=deg).map(|_| rat(rng.gen_range(0..=8), rng.gen_range(1..=4))).collect();
            c[deg] = &c[deg] + int(1);
            let k = 2 * rng.gen_range(0..=deg / 2);
            if k > 0 && k < deg {
                c[k] = -rat(rng.gen_range(1..=4), rng.gen_range(2..=8));
            }
            c
        }
        // nonnegative odd part, even part with a nonnegative constant
        2 => (0..=deg)
            .map(|k| {
                if k % 2 == 1 || k == 0 {
                    rat(rng.gen_range(0..=6), rng.gen_range(1..=3))
                } else {
                    small_rational(rng, 3)
                }
            })
            .collect(),
        // product of linear factors with nonnegative roots
        _ => {
            let mut q = Polynomial::constant(rat(rng.gen_range(1..=3), rng.gen_range(1..=2)));
            for _ in 0..deg {
                let root = rat(rng.gen_range(0..=8), 4);
                q = &q * &Polynomial::new(vec![-root, int(1)]);
            }
            q.into_coeffs()
        }
    };
    Polynomial::new(coeffs)
}

/// 200 polynomials: the named examples plus random ones of degree <= 6.
pub fn corpus() -> Vec<Polynomial> {
    let mut out = named_examples();
    let mut r = rng(2024);
    while out.len() < 200 {
        let q = random_polynomial(&mut r, 6);
        if !out.contains(&q) {
            out.push(q);
        }
    }
    out
}
