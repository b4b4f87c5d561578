//! Property tests for the exact kernels: ring axioms, evaluation
//! homomorphisms, series round-trips, and format round-trips.

use proptest::prelude::*;

use rstirling_core::factorials::degenerate_falling;
use rstirling_core::lambda_poly::LambdaPoly;
use rstirling_core::rational::Rational;
use rstirling_core::series::Series;
use rstirling_core::textfmt;
use rstirling_core::triangle::{transform_forward, transform_inverse};
use rstirling_core::xpoly::XPoly;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d))
}

fn lambda_poly(max_len: usize) -> impl Strategy<Value = LambdaPoly> {
    prop::collection::vec(rational(), 0..=max_len).prop_map(LambdaPoly::from_coeffs)
}

fn xpoly(max_xlen: usize, max_llen: usize) -> impl Strategy<Value = XPoly> {
    prop::collection::vec(lambda_poly(max_llen), 0..=max_xlen).prop_map(XPoly::from_coeffs)
}

fn series(order: usize) -> impl Strategy<Value = Series<LambdaPoly>> {
    prop::collection::vec(lambda_poly(3), order + 1..=order + 1).prop_map(Series::from_coeffs)
}

/// Series with an invertible scalar at t^0.
fn unit_series(order: usize) -> impl Strategy<Value = Series<LambdaPoly>> {
    (
        rational().prop_filter("nonzero constant", |c| !c.is_zero()),
        series(order),
    )
        .prop_map(|(c, s)| {
            let mut coeffs = s.coeffs().to_vec();
            coeffs[0] = LambdaPoly::constant(c);
            Series::from_coeffs(coeffs)
        })
}

proptest! {
    #[test]
    fn lambda_poly_ring_axioms(a in lambda_poly(4), b in lambda_poly(4), c in lambda_poly(4)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a - &a, LambdaPoly::zero());
        prop_assert_eq!(&a * &LambdaPoly::one(), a.clone());
    }

    #[test]
    fn xpoly_ring_axioms(a in xpoly(3, 3), b in xpoly(3, 3), c in xpoly(3, 3)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn xpoly_evaluation_is_a_homomorphism(
        a in xpoly(3, 3),
        b in xpoly(3, 3),
        x in rational(),
        l in rational(),
    ) {
        prop_assert_eq!((&a * &b).eval(&x, &l), a.eval(&x, &l) * b.eval(&x, &l));
        prop_assert_eq!((&a + &b).eval(&x, &l), a.eval(&x, &l) + b.eval(&x, &l));
        // partial evaluation at x commutes with full evaluation
        prop_assert_eq!(a.eval_x(&x).eval(&l), a.eval(&x, &l));
    }

    #[test]
    fn falling_factorial_matches_direct_product(
        n in 0usize..=8,
        x in rational(),
        l in rational(),
    ) {
        let symbolic = degenerate_falling(n, 0).eval(&x, &l);
        let mut direct = Rational::one();
        for j in 0..n {
            direct *= &x - &(Rational::from_integer(j as i64) * l.clone());
        }
        prop_assert_eq!(symbolic, direct);
    }

    #[test]
    fn series_mul_div_round_trip(a in series(6), b in unit_series(6)) {
        let prod = a.mul(&b).unwrap();
        prop_assert_eq!(prod.div(&b).unwrap(), a);
    }

    #[test]
    fn series_truncation_consistency(a in series(6), b in series(6), m in 0usize..=6) {
        let full = a.mul(&b).unwrap();
        let truncated = a.truncate(m).mul(&b.truncate(m)).unwrap();
        prop_assert_eq!(full.truncate(m), truncated);
    }

    #[test]
    fn lambda_poly_format_round_trip(p in lambda_poly(5)) {
        let s = textfmt::format_lambda_poly(&p);
        prop_assert_eq!(textfmt::parse_lambda_poly(&s).unwrap(), p);
    }

    #[test]
    fn xpoly_format_round_trip(p in xpoly(4, 4)) {
        let s = textfmt::format_xpoly(&p);
        prop_assert_eq!(textfmt::parse_xpoly(&s).unwrap(), p);
    }

    #[test]
    fn parser_never_panics(s in "[0-9Lx/^+* ()-]{0,24}") {
        // any outcome is fine, panicking is not
        let _ = textfmt::parse_xpoly(&s);
        let _ = textfmt::parse_lambda_poly(&s);
        let _ = s.parse::<Rational>();
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn inverse_relations_round_trip(
        vector in prop::collection::vec(lambda_poly(4), 1..=6),
        r in 0u32..=4,
    ) {
        let forward_then_back = transform_inverse(&transform_forward(&vector, r), r);
        prop_assert_eq!(&forward_then_back[..], &vector[..]);
        let back_then_forward = transform_forward(&transform_inverse(&vector, r), r);
        prop_assert_eq!(&back_then_forward[..], &vector[..]);
    }
}
