//! Acceptance suite: the end-to-end criteria the library must meet, each
//! checked exactly (zero-tolerance polynomial equality) at its stated
//! range. One pass/fail line prints per criterion; run with
//! `cargo test -p rstirling-core --test acceptance -- --nocapture` to see
//! them.

#![allow(clippy::needless_range_loop)]

mod common;

use rstirling_core::export::{FamilyExport, TriangleExport};
use rstirling_core::families::{
    bernoulli_second_kind, carlitz_bernoulli, fully_degenerate_bernoulli, harmonic,
};
use rstirling_core::identities::{
    check_corollary3, check_prop8_eq34, check_theorem1, check_theorem2, check_theorem4,
    check_theorem7, check_theorems5_6, run_all, FaultTarget, SuiteConfig, DEFAULT_SEED,
};
use rstirling_core::rational::Rational;
use rstirling_core::series::{degenerate_exp_at, degenerate_log, Series};
use rstirling_core::triangle::{StirlingKind, StirlingTriangle};

fn pass(criterion: &str) {
    println!("PASS  {criterion}");
}

#[test]
fn criterion_1_orthogonality() {
    for r in 0..=4u32 {
        for result in check_theorem1(12, r) {
            assert!(result.passed(), "orthogonality failed: {result:?}");
        }
    }
    pass("criterion 1: orthogonality relations, exact in λ, n ≤ 12, r ≤ 4");
}

#[test]
fn criterion_2_inverse_relations() {
    for r in 0..=4u32 {
        for result in check_theorem2(10, r, 100, DEFAULT_SEED) {
            assert!(result.passed(), "inverse relation failed: {result:?}");
        }
    }
    pass("criterion 2: inverse relations on 100 seeded vectors, n_max = 10, r ≤ 4");
}

#[test]
fn criterion_3_route_equivalence() {
    for r in 0..=4u32 {
        let basis = StirlingTriangle::second_kind_basis(12, r);
        let egf = StirlingTriangle::via_egf(StirlingKind::Second, r, 12);
        assert_eq!(basis, egf, "second kind r = {r}");

        let basis = StirlingTriangle::first_kind_unsigned_basis(12, r);
        let egf = StirlingTriangle::via_egf(StirlingKind::UnsignedFirst, r, 12);
        assert_eq!(basis, egf, "unsigned first kind r = {r}");
    }
    pass("criterion 3: basis-conversion and EGF triangles agree entrywise, n ≤ 12, r ≤ 4");
}

#[test]
fn criterion_4_closed_form_identities() {
    let p_set = [-2i64, -1, 0, 1, 2, 3];
    for r in 0..=3u32 {
        for result in check_corollary3(10, r) {
            assert!(result.passed(), "{result:?}");
        }
        for result in check_theorem4(10, r) {
            assert!(result.passed(), "{result:?}");
        }
        for result in check_theorems5_6(10, r).expect("routes agree") {
            assert!(result.passed(), "{result:?}");
        }
        for result in check_theorem7(10, r, &p_set).expect("routes agree") {
            assert!(result.passed(), "{result:?}");
        }
    }
    pass("criterion 4: closed-form identities, n ≤ 10, r ≤ 3, p ∈ {-2..3}");
}

#[test]
fn criterion_5_hyperharmonic_and_convolution() {
    for result in check_prop8_eq34(12, 4).expect("routes agree") {
        assert!(result.passed(), "{result:?}");
    }
    pass("criterion 5: hyperharmonic generating function and convolution, n ≤ 12, r ≤ 4");
}

#[test]
fn criterion_6_classical_limits() {
    let zero = Rational::zero();

    // Second-kind triangle at λ = 0 reproduces classical Stirling numbers
    // from an independent brute-force basis expansion.
    let triangle = StirlingTriangle::second_kind_basis(8, 0);
    let classical = common::classical_stirling_second(8);
    for n in 0..=8 {
        for k in 0..=n {
            assert_eq!(
                triangle.entry(n, k).eval(&zero),
                classical[n][k],
                "S({n},{k})"
            );
        }
    }

    // Both Bernoulli variants limit to the classical Bernoulli polynomials
    // from the independent classical EGF computation.
    let expect = common::classical_bernoulli_polynomials(10);
    let carlitz = carlitz_bernoulli(10);
    let fully = fully_degenerate_bernoulli(10);
    for n in 0..=10 {
        for (family, values) in [("carlitz", &carlitz), ("fully-degenerate", &fully)] {
            let at_zero = values.value(n).eval_lambda(&zero);
            for (k, c) in expect[n].iter().enumerate() {
                assert_eq!(
                    at_zero.coeff(k).as_constant().expect("constant"),
                    c.clone(),
                    "{family} B_{n} coefficient of x^{k}"
                );
            }
            assert_eq!(at_zero.degree(), Some(n));
        }
    }

    // Harmonic numbers at λ = 0.
    let h = harmonic(12).expect("routes agree");
    let classical = common::classical_harmonic(12);
    for n in 1..=12 {
        assert_eq!(h.value(n).eval(&zero), classical[n], "H_{n}");
    }

    pass("criterion 6: classical λ = 0 limits (Stirling, Bernoulli, harmonic)");
}

#[test]
fn criterion_7_compositional_inverse_pair() {
    let order = 20;
    let exp = degenerate_exp_at(&Rational::one(), order);
    let log = degenerate_log(order);

    // e_λ(log_λ(1+t)) = 1 + t, symbolically in λ
    let composed = exp.compose(&log).expect("composable");
    let one_plus_t = Series::one(order).add(&Series::t(order));
    assert_eq!(composed, one_plus_t);

    // reversion-computed inverse matches the closed-form coefficients
    let reverted = exp
        .sub(&Series::one(order))
        .reversion()
        .expect("revertible");
    assert_eq!(reverted, log);

    pass("criterion 7: compositional inverse pair to order 20, exact in λ");
}

#[test]
fn criterion_8_fault_injection_sensitivity() {
    let base = SuiteConfig {
        n_max: 6,
        r_max: 2,
        p_set: vec![-1, 1],
        trials: 10,
        ..SuiteConfig::default()
    };
    let clean = run_all(&base).expect("construction");
    assert_eq!(clean.failures(), 0, "clean run must pass");
    for target in FaultTarget::all() {
        let report = run_all(&SuiteConfig {
            fault: Some(target),
            ..base.clone()
        })
        .expect("construction");
        assert!(
            report.failures() >= 1,
            "fault in {target} was not detected:\n{}",
            report.to_text(true)
        );
    }
    pass("criterion 8: every single-entry fault injection triggers at least one failure");
}

#[test]
fn criterion_9_format_round_trips_and_determinism() {
    // triangle JSON and CSV round-trips, symbolic and λ-evaluated
    for r in 0..=2u32 {
        let t = StirlingTriangle::second_kind_basis(8, r);
        let export = TriangleExport::from_triangle(&t, None);
        assert_eq!(
            TriangleExport::from_json(&export.to_json())
                .unwrap()
                .to_triangle()
                .unwrap(),
            t
        );
        assert_eq!(
            TriangleExport::from_csv(&export.to_csv())
                .unwrap()
                .to_triangle()
                .unwrap(),
            t
        );

        let first = StirlingTriangle::first_kind_unsigned_basis(8, r);
        let export = TriangleExport::from_triangle(&first, None);
        assert_eq!(
            TriangleExport::from_json(&export.to_json()).unwrap(),
            export
        );
        assert_eq!(TriangleExport::from_csv(&export.to_csv()).unwrap(), export);

        let lambda = Rational::new(1, 2);
        let evaluated = TriangleExport::from_triangle(&t, Some(&lambda));
        assert_eq!(
            TriangleExport::from_csv(&evaluated.to_csv()).unwrap(),
            evaluated
        );
    }

    // family round-trips: an x-symbolic family and a λ-number sequence
    let fam = bernoulli_second_kind(8);
    let export =
        FamilyExport::from_xpoly_values(fam.family().as_str(), None, None, fam.values(), None);
    let parsed = FamilyExport::from_json(&export.to_json()).unwrap();
    assert_eq!(parsed.parsed_values().unwrap(), fam.values());
    assert_eq!(FamilyExport::from_csv(&export.to_csv()).unwrap(), export);

    let h = harmonic(8).expect("routes agree");
    let export = FamilyExport::from_lambda_values("harmonic", Some(1), None, h.values(), None);
    assert_eq!(FamilyExport::from_json(&export.to_json()).unwrap(), export);
    assert_eq!(FamilyExport::from_csv(&export.to_csv()).unwrap(), export);

    // stable-mode verification reports are byte-identical across runs
    let cfg = SuiteConfig {
        n_max: 5,
        r_max: 1,
        p_set: vec![1],
        trials: 5,
        ..SuiteConfig::default()
    };
    let a = run_all(&cfg).unwrap();
    let b = run_all(&cfg).unwrap();
    assert_eq!(a.to_json(true), b.to_json(true));
    assert_eq!(a.to_text(true), b.to_text(true));

    pass("criterion 9: JSON/CSV round-trips and stable-mode byte determinism");
}
