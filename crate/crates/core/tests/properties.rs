mod common;

use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use np_preserve::cli::parse_expression;
use np_preserve::cone::{
    bernstein_by_substitution, compactify, ratio_value, unit_bernstein, Axis, BoxRegion, RatioBudget,
};
use np_preserve::halfline::check_nonneg_halfline;
use np_preserve::matrix::{horner_matrix_eval, posmatrix_generate, scramble_similarity, Matrix2, PosMatrixParams};
use np_preserve::poly::{sturm_count, Bound};
use np_preserve::preserver::{check_circulant2, check_p2, check_spectral, Status};
use np_preserve::rational::{int, rat};
use np_preserve::{Polynomial, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(rational(), 0..=max_deg + 1).prop_map(Polynomial::new)
}

fn nonneg_matrix() -> impl Strategy<Value = Matrix2> {
    prop::array::uniform4((0i64..=16, 1i64..=8)).prop_map(|e| {
        let q = |(n, d): (i64, i64)| rat(n, d);
        Matrix2::new(q(e[0]), q(e[1]), q(e[2]), q(e[3]))
    })
}

fn positive() -> impl Strategy<Value = Rational> {
    (1i64..=16, 1i64..=8).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #[test]
    fn parity_parts_recombine(p in poly(8), x in rational()) {
        let (e, o) = p.decompose_parity();
        prop_assert_eq!(&(&e + &o), &p);
        prop_assert_eq!(e.eval(&-x.clone()), e.eval(&x));
        prop_assert_eq!(o.eval(&-x.clone()), -o.eval(&x));
    }

    #[test]
    fn reflection_is_an_involution(p in poly(8), x in rational()) {
        prop_assert_eq!(p.reflect().reflect(), p.clone());
        prop_assert_eq!(p.reflect().eval(&x), p.eval(&-x));
    }

    #[test]
    fn ring_laws(a in poly(5), b in poly(5), c in poly(5), x in rational()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert!((&(&a - &b) + &b) == a);
    }

    #[test]
    fn division_with_remainder(a in poly(8), b in poly(4)) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn sturm_counts_constructed_roots(
        roots in prop::collection::btree_set(-20i64..=20, 1..6),
        lead in 1i64..=5,
        lo in -25i64..=25,
        width in 1i64..=30,
    ) {
        let mut p = Polynomial::constant(int(lead));
        for r in &roots {
            p = &p * &Polynomial::new(vec![rat(-*r, 4), int(1)]);
        }
        let (lo_q, hi_q) = (rat(lo, 4), rat(lo + width, 4));
        let expected = roots.iter().filter(|&&r| rat(r, 4) > lo_q && rat(r, 4) <= hi_q).count();
        prop_assert_eq!(sturm_count(&p, lo_q, hi_q).unwrap(), expected);
        prop_assert_eq!(sturm_count(&p, Bound::NegInfinity, Bound::PosInfinity).unwrap(), roots.len());
    }

    #[test]
    fn cauchy_bound_brackets_real_roots(p in poly(7)) {
        prop_assume!(p.degree().unwrap_or(0) >= 1);
        let b = p.cauchy_bound().unwrap();
        let all = sturm_count(&p, Bound::NegInfinity, Bound::PosInfinity).unwrap();
        prop_assert_eq!(sturm_count(&p, -b.clone(), b.clone()).unwrap(), all);
        prop_assert!(!p.eval(&b).is_zero() && !p.eval(&-b).is_zero());
    }

    #[test]
    fn halfline_rejections_carry_negative_witnesses(p in poly(7)) {
        let v = check_nonneg_halfline(&p);
        match &v.witness {
            Some(x0) => {
                prop_assert!(!v.member);
                prop_assert!(!x0.is_negative() && p.eval(x0).is_negative());
            }
            None => prop_assert!(v.member),
        }
    }

    #[test]
    fn compactification_identity(p in poly(6), t in (1i64..=16), r in (1i64..16)) {
        let m = p.degree().unwrap_or(0);
        let (t, r) = (rat(t, 16), rat(r, 16));
        let rho = &r / (Rational::one() - &r);
        let lhs = compactify(&p).eval(&t, &r) * &rho;
        let rhs = num_traits::pow(Rational::one() - &r, m) * ratio_value(&p, &rho, &(&t * &rho));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn subdivision_matches_substitution(p in poly(5), path in prop::collection::vec(any::<bool>(), 0..6)) {
        let bp = compactify(&p);
        prop_assume!(!bp.is_zero());
        let mut b = unit_bernstein(&bp);
        for go_high in path {
            let axis = b.region.split_axis();
            let (lo, hi) = b.split(axis);
            b = if go_high { hi } else { lo };
        }
        prop_assert_eq!(&bernstein_by_substitution(&bp, &b.region).coeffs, &b.coeffs);
    }

    #[test]
    fn halving_alternates_on_squares(depth in 0usize..8) {
        let mut region = BoxRegion::unit();
        for k in 0..depth {
            let axis = region.split_axis();
            prop_assert_eq!(axis, if k % 2 == 0 { Axis::T } else { Axis::R });
            region = region.halves(axis).0;
        }
    }

    #[test]
    fn similarity_preserves_image_signs(
        p in poly(5), a in nonneg_matrix(), d1 in positive(), d2 in positive(), swap in any::<bool>()
    ) {
        let s = scramble_similarity(&a, &d1, &d2, swap).unwrap();
        prop_assert!(s.is_nonnegative());
        let before = horner_matrix_eval(&p, &a).is_nonnegative();
        let after = horner_matrix_eval(&p, &s).is_nonnegative();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn generated_spectrum_is_exact(rho in positive(), frac in -15i64..=15, alpha_frac in 1i64..32) {
        let mu = &rho * rat(frac, 16);
        let alpha = if mu.is_negative() {
            let lo = -&mu / &rho;
            let hi = &rho / -&mu;
            &lo + (&hi - &lo) * rat(alpha_frac, 32)
        } else {
            rat(alpha_frac, 8)
        };
        let params = PosMatrixParams::new(rho.clone(), mu.clone(), alpha).unwrap();
        let b = posmatrix_generate(&params);
        prop_assert!(b.is_positive());
        prop_assert_eq!(b.trace(), &rho + &mu);
        prop_assert_eq!(b.determinant(), &rho * &mu);
    }

    #[test]
    fn display_parses_back(p in poly(8)) {
        prop_assert_eq!(parse_expression(&p.to_string()).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn membership_witnesses_violate(p in poly(5)) {
        let v = check_p2(&p, RatioBudget { grid_exponent: 8, max_boxes: 1 << 12 });
        if v.status == Status::NotMember {
            let a = v.witness_matrix.clone().unwrap();
            prop_assert!(a.is_nonnegative());
            prop_assert!(horner_matrix_eval(&p, &a).first_negative_entry().is_some());
        }
        if v.status == Status::Member {
            prop_assert_eq!(check_circulant2(&p).status, Status::Member);
            prop_assert!(check_nonneg_halfline(&p).member);
        }
        prop_assert_eq!(check_circulant2(&p).status, check_spectral(&p).status);
    }

    #[test]
    fn spectral_witness_breaks_the_spectral_inequality(p in poly(6)) {
        if let Some((rho, mu)) = check_spectral(&p).witness_point {
            prop_assert!(rho >= mu.abs());
            prop_assert!(p.eval(&rho) < p.eval(&mu).abs());
        }
    }
}

#[test]
fn zero_matrix_image_is_constant_term() {
    let p = common::independence();
    assert_eq!(horner_matrix_eval(&p, &Matrix2::zero()), Matrix2::zero());
    let q = Polynomial::from_ints(&[3, 1]);
    assert_eq!(horner_matrix_eval(&q, &Matrix2::zero()), Matrix2::scalar(int(3)));
}
