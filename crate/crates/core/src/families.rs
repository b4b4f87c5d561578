//! Degenerate special-polynomial and number families.
//!
//! Polynomial families are built from their generating functions with x kept
//! symbolic; number families that also have a closed form in terms of the
//! r-Stirling triangles are computed by both routes, and a disagreement is a
//! hard error rather than a test failure. Harmonic and hyperharmonic values
//! come from the defining sums and are cross-checked against coefficient
//! extraction from their generating function.

use std::fmt;

use crate::error::{Error, Result};
use crate::factorials::{lambda_binomial, one_factorial_inverse_lambda};
use crate::lambda_poly::LambdaPoly;
use crate::rational::{factorial, Rational};
use crate::series::{
    binomial_pow_x, degenerate_exp_at, degenerate_exp_x, degenerate_log, neg_degenerate_log_neg_t,
    one_minus_t_inv_pow, scaled_log, Series,
};
use crate::triangle::{cached_triangle, StirlingKind};
use crate::xpoly::XPoly;

/// Which polynomial family a `PolyFamily` holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    CarlitzBernoulli,
    FullyDegenerateBernoulli,
    Fubini,
    Euler,
    PolyBernoulli,
    BernoulliSecondKind,
}

impl FamilyKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyKind::CarlitzBernoulli => "carlitz-bernoulli",
            FamilyKind::FullyDegenerateBernoulli => "fully-degenerate-bernoulli",
            FamilyKind::Fubini => "fubini",
            FamilyKind::Euler => "euler",
            FamilyKind::PolyBernoulli => "poly-bernoulli",
            FamilyKind::BernoulliSecondKind => "bernoulli-second-kind",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A polynomial family: `values[n]` is the degree-n member, a polynomial in x
/// with λ-polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFamily {
    family: FamilyKind,
    n_max: usize,
    r: Option<u32>,
    p: Option<i64>,
    values: Vec<XPoly>,
}

impl PolyFamily {
    pub fn family(&self) -> FamilyKind {
        self.family
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn r(&self) -> Option<u32> {
        self.r
    }

    pub fn p(&self) -> Option<i64> {
        self.p
    }

    pub fn value(&self, n: usize) -> &XPoly {
        &self.values[n]
    }

    pub fn values(&self) -> &[XPoly] {
        &self.values
    }

    /// Evaluates every member at a rational x, leaving λ symbolic.
    pub fn eval_x(&self, x: &Rational) -> Vec<LambdaPoly> {
        self.values.iter().map(|v| v.eval_x(x)).collect()
    }

    /// Adds `delta` onto `values[n]`; used by fault-injection self-tests.
    pub fn perturb_value(&mut self, n: usize, delta: &XPoly) {
        self.values[n] = &self.values[n] + delta;
    }
}

/// Reads a polynomial family out of an EGF given as a series with
/// x-polynomial coefficients: `values[n]` = n!·[t^n].
fn family_from_egf(
    family: FamilyKind,
    r: Option<u32>,
    p: Option<i64>,
    egf: &Series<XPoly>,
) -> PolyFamily {
    let n_max = egf.order();
    PolyFamily {
        family,
        n_max,
        r,
        p,
        values: (0..=n_max)
            .map(|n| egf.coeff(n).scale_rational(&factorial(n)))
            .collect(),
    }
}

/// t/(e_λ(t) − 1) as a unit series, computed as the inverse of
/// (e_λ(t) − 1)/t.
fn carlitz_kernel(order: usize) -> Series<LambdaPoly> {
    let shifted = degenerate_exp_at(&Rational::one(), order + 1)
        .sub(&Series::one(order + 1))
        .shift_down(1)
        .expect("e_λ(t) − 1 has zero constant term");
    Series::one(order)
        .div(&shifted)
        .expect("unit constant term")
}

/// Carlitz degenerate Bernoulli polynomials: t/(e_λ(t)−1) · e_λ^x(t).
pub fn carlitz_bernoulli(n_max: usize) -> PolyFamily {
    let egf = carlitz_kernel(n_max)
        .lift_x()
        .mul(&degenerate_exp_x(n_max))
        .expect("equal orders");
    family_from_egf(FamilyKind::CarlitzBernoulli, None, None, &egf)
}

/// Fully degenerate Bernoulli polynomials:
/// log(1+λt)/(λ(e_λ(t)−1)) · e_λ^x(t).
pub fn fully_degenerate_bernoulli(n_max: usize) -> PolyFamily {
    let num = scaled_log(n_max + 1)
        .shift_down(1)
        .expect("scaled log has zero constant term");
    let den = degenerate_exp_at(&Rational::one(), n_max + 1)
        .sub(&Series::one(n_max + 1))
        .shift_down(1)
        .expect("e_λ(t) − 1 has zero constant term");
    let egf = num
        .div(&den)
        .expect("unit constant term")
        .lift_x()
        .mul(&degenerate_exp_x(n_max))
        .expect("equal orders");
    family_from_egf(FamilyKind::FullyDegenerateBernoulli, None, None, &egf)
}

/// Closed form for the fully degenerate Bernoulli numbers at x = r:
/// β_{n,λ}(r) = Σ_k (−1)^k {n+r brace k+r}_{r,λ} · k!/(k+1).
pub fn fully_degenerate_bernoulli_at_r_closed(n_max: usize, r: u32) -> Vec<LambdaPoly> {
    let second = cached_triangle(StirlingKind::Second, r, n_max);
    (0..=n_max)
        .map(|n| {
            let mut acc = LambdaPoly::zero();
            for k in 0..=n {
                let c = factorial(k) * Rational::new(1, k as i64 + 1);
                let term = second.entry(n, k).scale(&c);
                if k % 2 == 1 {
                    acc -= &term;
                } else {
                    acc += &term;
                }
            }
            acc
        })
        .collect()
}

/// Degenerate two-variable Fubini polynomials F_{n,λ}(x|y) with x symbolic
/// and y instantiated at a rational: 1/(1−x(e_λ(t)−1)) · e_λ^y(t), expanded
/// as Σ_k x^k (e_λ(t)−1)^k e_λ^y(t). Powers of (e_λ(t)−1) beyond the
/// truncation order contribute nothing since that series starts at t.
pub fn fubini(n_max: usize, y: &Rational) -> PolyFamily {
    let base = degenerate_exp_at(&Rational::one(), n_max).sub(&Series::one(n_max));
    let mut column = degenerate_exp_at(y, n_max);
    let mut egf: Series<XPoly> = Series::zero(n_max);
    for k in 0..=n_max {
        if k > 0 {
            column = column.mul(&base).expect("equal orders");
        }
        let lifted = column.map(|c| XPoly::monomial(c.clone(), k));
        egf = egf.add(&lifted);
    }
    family_from_egf(FamilyKind::Fubini, y.to_u32(), None, &egf)
}

/// Closed form F_{n,λ}(x|r) = Σ_k x^k k! {n+r brace k+r}_{r,λ}.
pub fn fubini_closed_form(n_max: usize, r: u32) -> Vec<XPoly> {
    let second = cached_triangle(StirlingKind::Second, r, n_max);
    (0..=n_max)
        .map(|n| {
            let mut acc = XPoly::zero();
            for k in 0..=n {
                acc += &XPoly::monomial(second.entry(n, k).scale(&factorial(k)), k);
            }
            acc
        })
        .collect()
}

/// Degenerate Euler polynomials 2/(e_λ(t)+1) · e_λ^x(t), x symbolic.
pub fn euler_polynomials(n_max: usize) -> PolyFamily {
    let den = degenerate_exp_at(&Rational::one(), n_max).add(&Series::one(n_max));
    let kernel = Series::constant(LambdaPoly::constant(Rational::from_integer(2)), n_max)
        .div(&den)
        .expect("constant term 2 is a unit");
    let egf = kernel
        .lift_x()
        .mul(&degenerate_exp_x(n_max))
        .expect("equal orders");
    family_from_egf(FamilyKind::Euler, None, None, &egf)
}

/// Degenerate Euler numbers at x = r, computed by the EGF and by the closed
/// form ℰ_{n,λ}(r) = Σ_k (−1/2)^k k! {n+r brace k+r}_{r,λ}. The two routes
/// must agree exactly.
pub fn euler(n_max: usize, r: u32) -> Result<Vec<LambdaPoly>> {
    let den = degenerate_exp_at(&Rational::one(), n_max).add(&Series::one(n_max));
    let num = degenerate_exp_at(&Rational::from_integer(r as i64), n_max)
        .scale(&Rational::from_integer(2));
    let egf = num.div(&den)?;
    let via_egf: Vec<LambdaPoly> = (0..=n_max)
        .map(|n| egf.coeff(n).scale(&factorial(n)))
        .collect();

    let second = cached_triangle(StirlingKind::Second, r, n_max);
    for (n, value) in via_egf.iter().enumerate() {
        let mut acc = LambdaPoly::zero();
        for k in 0..=n {
            let c = Rational::new(-1, 2).pow_i(k as i64).expect("finite power") * factorial(k);
            acc += &second.entry(n, k).scale(&c);
        }
        if &acc != value {
            return Err(Error::RouteDisagreement {
                family: "euler".to_string(),
                n,
            });
        }
    }
    Ok(via_egf)
}

/// Degenerate polylogarithm Li_{p,λ}(x) as a truncated series in x:
/// Σ_{n≥1} (−1)^{n−1} ∏_{j=1}^{n−1}(λ−j) / ((n−1)!·n^p) · x^n, p ∈ ℤ.
pub fn polylog(p: i64, n_max: usize) -> Series<LambdaPoly> {
    Series::from_fn(n_max, |n| {
        if n == 0 {
            return LambdaPoly::zero();
        }
        let numerators = one_factorial_inverse_lambda(n).expect("n >= 1");
        let n_pow = Rational::from_integer(n as i64)
            .pow_i(-p)
            .expect("n >= 1 is nonzero");
        let mut c = factorial(n - 1).recip().expect("(n-1)! > 0") * n_pow;
        if n % 2 == 0 {
            c = -c;
        }
        numerators.scale(&c)
    })
}

/// Degenerate poly-Bernoulli numbers β^{(p)}_{n,λ}(−r), by the EGF
/// Li_{p,λ}(1−e_λ(−t))/(1−e_λ(−t)) · e_λ^r(−t) and by the closed form
/// (−1)^n Σ_k ∏_{j=1}^{k}(λ−j)/(k+1)^p · {n+r brace k+r}_{r,λ}. The two
/// routes must agree exactly.
pub fn poly_bernoulli(p: i64, n_max: usize, r: u32) -> Result<Vec<LambdaPoly>> {
    // Li_{p,λ}(x)/x has the coefficients of the polylog shifted down one,
    // so no series division is needed: compose the shifted coefficients
    // with u = 1 − e_λ(−t), which has zero constant term.
    let li = polylog(p, n_max + 1);
    let shifted_li = Series::from_fn(n_max, |m| li.coeff(m + 1).clone());
    let u = Series::one(n_max).sub(&degenerate_exp_at(&Rational::one(), n_max).neg_t());
    let kernel = shifted_li.compose(&u)?;
    let egf = kernel.mul(&degenerate_exp_at(&Rational::from_integer(r as i64), n_max).neg_t())?;
    let via_egf: Vec<LambdaPoly> = (0..=n_max)
        .map(|n| egf.coeff(n).scale(&factorial(n)))
        .collect();

    let second = cached_triangle(StirlingKind::Second, r, n_max);
    for (n, value) in via_egf.iter().enumerate() {
        let mut acc = LambdaPoly::zero();
        for k in 0..=n {
            let weight = Rational::from_integer(k as i64 + 1)
                .pow_i(-p)
                .expect("k + 1 is nonzero");
            let prod = one_factorial_inverse_lambda(k + 1).expect("k + 1 >= 1");
            acc += &(&prod * second.entry(n, k)).scale(&weight);
        }
        if n % 2 == 1 {
            acc = -acc;
        }
        if &acc != value {
            return Err(Error::RouteDisagreement {
                family: "poly-bernoulli".to_string(),
                n,
            });
        }
    }
    Ok(via_egf)
}

/// Degenerate Bernoulli polynomials of the second kind:
/// t/log_λ(1+t) · (1+t)^x with the ordinary binomial series for (1+t)^x.
pub fn bernoulli_second_kind(n_max: usize) -> PolyFamily {
    let den = degenerate_log(n_max + 1)
        .shift_down(1)
        .expect("log_λ(1+t) has zero constant term");
    let egf = Series::one(n_max)
        .div(&den)
        .expect("unit constant term")
        .lift_x()
        .mul(&binomial_pow_x(n_max))
        .expect("equal orders");
    family_from_egf(FamilyKind::BernoulliSecondKind, None, None, &egf)
}

/// Degenerate (hyper)harmonic numbers H^{(r)}_{n,λ}.
///
/// `values[0]` is stored as 0 for every r: that is the constant term of the
/// generating function −log_λ(1−t)/(1−t)^r, and the convention every
/// convolution in this crate uses. The defining sum for n = 0 of the plain
/// harmonic numbers is 1 instead; `standalone(0)` reports that value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicSequence {
    r: u32,
    n_max: usize,
    values: Vec<LambdaPoly>,
}

impl HarmonicSequence {
    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// H^{(r)}_{n,λ} in the series convention (zero at n = 0).
    pub fn value(&self, n: usize) -> &LambdaPoly {
        &self.values[n]
    }

    pub fn values(&self) -> &[LambdaPoly] {
        &self.values
    }

    /// The standalone convention: H_{0,λ} = 1 for the plain harmonic
    /// numbers (r = 1); all other positions match `value`.
    pub fn standalone(&self, n: usize) -> LambdaPoly {
        if n == 0 && self.r == 1 {
            LambdaPoly::one()
        } else {
            self.values[n].clone()
        }
    }

    /// Adds `delta` onto `values[n]`; used by fault-injection self-tests.
    pub fn perturb_value(&mut self, n: usize, delta: &LambdaPoly) {
        self.values[n] = &self.values[n] + delta;
    }
}

/// Degenerate harmonic numbers H_{n,λ} = Σ_{k=1}^{n} (1/λ)binom(λ,k)(−1)^{k−1},
/// cross-checked against the coefficients of −log_λ(1−t)/(1−t).
pub fn harmonic(n_max: usize) -> Result<HarmonicSequence> {
    hyperharmonic(1, n_max)
}

/// Degenerate hyperharmonic numbers H^{(r)}_{n,λ}: r-fold partial sums of
/// the harmonic numbers, cross-checked against the coefficients of
/// −log_λ(1−t)/(1−t)^r. Requires r ≥ 1.
pub fn hyperharmonic(r: u32, n_max: usize) -> Result<HarmonicSequence> {
    if r == 0 {
        return Err(Error::Domain(
            "hyperharmonic order r must be >= 1".to_string(),
        ));
    }

    // r = 1 from the defining sum, then r-fold partial sums.
    let mut values = vec![LambdaPoly::zero(); n_max + 1];
    let mut acc = LambdaPoly::zero();
    for n in 1..=n_max {
        let mut term = lambda_binomial(n).expect("n >= 1");
        if n % 2 == 0 {
            term = -term;
        }
        acc += &term;
        values[n] = acc.clone();
    }
    for _ in 2..=r {
        let mut running = LambdaPoly::zero();
        for value in values.iter_mut().skip(1) {
            running += &*value;
            *value = running.clone();
        }
    }

    let gf = hyperharmonic_gf(r, n_max)?;
    for (n, value) in values.iter().enumerate() {
        if gf.coeff(n) != value {
            return Err(Error::RouteDisagreement {
                family: format!("hyperharmonic(r={r})"),
                n,
            });
        }
    }

    Ok(HarmonicSequence { r, n_max, values })
}

/// Ordinary generating function −log_λ(1−t)/(1−t)^r of the degenerate
/// hyperharmonic numbers; the coefficient of t^n is H^{(r)}_{n,λ} directly
/// (no factorial scaling). Requires r ≥ 1.
pub fn hyperharmonic_gf(r: u32, order: usize) -> Result<Series<LambdaPoly>> {
    if r == 0 {
        return Err(Error::Domain(
            "hyperharmonic order r must be >= 1".to_string(),
        ));
    }
    neg_degenerate_log_neg_t(order).mul(&one_minus_t_inv_pow(r, order))
}
