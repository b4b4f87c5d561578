//! The verification suite: every orthogonality/inverse relation and closed
//! form that ties the triangles to the polynomial families, run as exact
//! λ-polynomial checks over configurable (n, r, p) ranges.
//!
//! Checks compare canonical polynomial forms; there are no tolerances. The
//! only sampled check is the inverse-relation round-trip, which uses a
//! seeded deterministic generator and is complemented by the fully symbolic
//! orthogonality check (the two statements are equivalent as matrix
//! inverses).

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::factorials::one_factorial_inverse_lambda;
use crate::families::{
    bernoulli_second_kind, euler, fubini, fully_degenerate_bernoulli, hyperharmonic,
    hyperharmonic_gf, poly_bernoulli, HarmonicSequence, PolyFamily,
};
use crate::lambda_poly::LambdaPoly;
use crate::rational::{factorial, Rational};
use crate::textfmt;
use crate::triangle::{orthogonality_check_with, StirlingTriangle};
use crate::xpoly::XPoly;

/// Default seed for the inverse-relation round-trip vectors.
pub const DEFAULT_SEED: u64 = 0xC0FFEE;

/// Ranges and knobs for a verification run.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub n_max: usize,
    pub r_max: u32,
    pub p_set: Vec<i64>,
    pub seed: u64,
    pub trials: usize,
    pub jobs: usize,
    pub fault: Option<FaultTarget>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            n_max: 10,
            r_max: 3,
            p_set: vec![-2, -1, 0, 1, 2, 3],
            seed: DEFAULT_SEED,
            trials: 100,
            jobs: 1,
            fault: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one identity check over its whole parameter range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub identity_id: String,
    pub params: BTreeMap<String, i64>,
    pub status: Status,
    /// Canonical string of the first nonzero residual polynomial.
    pub residual: Option<String>,
    pub elapsed_ms: u64,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn finish(
        id: &str,
        params: &[(&str, i64)],
        residual: Option<String>,
        start: Instant,
    ) -> CheckResult {
        CheckResult {
            identity_id: id.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            status: if residual.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            residual,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }
}

/// Which input artifact a fault-injection run perturbs. Every target feeds
/// at least one check, so any perturbation must surface as a failure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaultTarget {
    FirstTriangle,
    SecondTriangle,
    FullyDegenerateBernoulli,
    Fubini,
    Euler,
    PolyBernoulli,
    BernoulliSecondKind,
    Hyperharmonic,
}

impl FaultTarget {
    pub fn all() -> [FaultTarget; 8] {
        [
            FaultTarget::FirstTriangle,
            FaultTarget::SecondTriangle,
            FaultTarget::FullyDegenerateBernoulli,
            FaultTarget::Fubini,
            FaultTarget::Euler,
            FaultTarget::PolyBernoulli,
            FaultTarget::BernoulliSecondKind,
            FaultTarget::Hyperharmonic,
        ]
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            FaultTarget::FirstTriangle => "triangle-first",
            FaultTarget::SecondTriangle => "triangle-second",
            FaultTarget::FullyDegenerateBernoulli => "fully-degenerate-bernoulli",
            FaultTarget::Fubini => "fubini",
            FaultTarget::Euler => "euler",
            FaultTarget::PolyBernoulli => "poly-bernoulli",
            FaultTarget::BernoulliSecondKind => "bernoulli-second-kind",
            FaultTarget::Hyperharmonic => "hyperharmonic",
        }
    }
}

impl fmt::Display for FaultTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FaultTarget {
    type Err = Error;

    /// Accepts artifact names and, as aliases, the id of the check the
    /// artifact most directly feeds (e.g. `thm1` perturbs the second-kind
    /// triangle).
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "triangle-second" | "thm1" => Ok(FaultTarget::SecondTriangle),
            "triangle-first" | "thm2" => Ok(FaultTarget::FirstTriangle),
            "fully-degenerate-bernoulli" | "cor3" => Ok(FaultTarget::FullyDegenerateBernoulli),
            "fubini" | "thm4" => Ok(FaultTarget::Fubini),
            "euler" | "thm5" | "thm6" => Ok(FaultTarget::Euler),
            "poly-bernoulli" | "thm7" => Ok(FaultTarget::PolyBernoulli),
            "bernoulli-second-kind" | "eq34" => Ok(FaultTarget::BernoulliSecondKind),
            "hyperharmonic" | "prop8" => Ok(FaultTarget::Hyperharmonic),
            _ => Err(Error::Parse(format!("unknown fault target {s:?}"))),
        }
    }
}

/// Aggregated, order-normalized results of a verification run.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    results: Vec<CheckResult>,
}

#[derive(Serialize)]
struct CheckResultJson<'a> {
    identity_id: &'a str,
    params: &'a BTreeMap<String, i64>,
    status: Status,
    residual: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u64>,
}

impl VerificationReport {
    fn new(mut results: Vec<CheckResult>) -> Self {
        results.sort_by(|a, b| {
            (&a.identity_id, a.params.iter().collect::<Vec<_>>())
                .cmp(&(&b.identity_id, b.params.iter().collect::<Vec<_>>()))
        });
        VerificationReport { results }
    }

    pub fn results(&self) -> &[CheckResult] {
        &self.results
    }

    pub fn failures(&self) -> usize {
        self.results.iter().filter(|r| !r.passed()).count()
    }

    pub fn all_passed(&self) -> bool {
        self.failures() == 0
    }

    /// JSON array of check results. With `stable`, timing fields are
    /// omitted so identical runs emit identical bytes.
    pub fn to_json(&self, stable: bool) -> String {
        let rows: Vec<CheckResultJson> = self
            .results
            .iter()
            .map(|r| CheckResultJson {
                identity_id: &r.identity_id,
                params: &r.params,
                status: r.status,
                residual: r.residual.as_deref(),
                elapsed_ms: (!stable).then_some(r.elapsed_ms),
            })
            .collect();
        let mut s = serde_json::to_string_pretty(&rows).expect("report serialization");
        s.push('\n');
        s
    }

    /// Human-readable table, one line per check plus a summary line.
    pub fn to_text(&self, stable: bool) -> String {
        let mut out = String::new();
        let id_width = self
            .results
            .iter()
            .map(|r| r.identity_id.len())
            .max()
            .unwrap_or(8)
            .max(8);
        let param_strings: Vec<String> = self
            .results
            .iter()
            .map(|r| {
                r.params
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        let param_width = param_strings
            .iter()
            .map(String::len)
            .max()
            .unwrap_or(6)
            .max(6);
        for (r, params) in self.results.iter().zip(&param_strings) {
            let status = match r.status {
                Status::Pass => "Pass",
                Status::Fail => "Fail",
            };
            if stable {
                out.push_str(&format!(
                    "{:<id_width$}  {:<param_width$}  {status}\n",
                    r.identity_id, params
                ));
            } else {
                out.push_str(&format!(
                    "{:<id_width$}  {:<param_width$}  {status}  {} ms\n",
                    r.identity_id, params, r.elapsed_ms
                ));
            }
            if let Some(residual) = &r.residual {
                out.push_str(&format!("{:id_width$}  residual: {residual}\n", ""));
            }
        }
        out.push_str(&format!(
            "{} checks, {} failures\n",
            self.results.len(),
            self.failures()
        ));
        out
    }
}

// ─── deterministic vector generator ───

/// SplitMix64; tiny and stable across platforms, which keeps reports
/// byte-identical for a given seed.
struct SplitMix64(u64);

impl SplitMix64 {
    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    fn lambda_poly(&mut self, max_degree: usize) -> LambdaPoly {
        let degree = self.below(max_degree as u64 + 1) as usize;
        LambdaPoly::from_coeffs(
            (0..=degree)
                .map(|_| {
                    let numer = self.below(19) as i64 - 9;
                    let denom = self.below(4) as i64 + 1;
                    Rational::new(numer, denom)
                })
                .collect(),
        )
    }
}

// ─── suite data and fault injection ───

struct SuiteData {
    n_max: usize,
    r_max: u32,
    p_set: Vec<i64>,
    /// Unsigned first-kind triangles, indexed by r.
    first: Vec<StirlingTriangle>,
    /// Second-kind triangles, indexed by r.
    second: Vec<StirlingTriangle>,
    /// Fully degenerate Bernoulli polynomials, x symbolic.
    beta: PolyFamily,
    /// Fubini families at y = r, indexed by r.
    fubini: Vec<PolyFamily>,
    /// Euler values at r, indexed by r.
    euler: Vec<Vec<LambdaPoly>>,
    /// Poly-Bernoulli values at −r, indexed by r then by p_set position.
    poly_bernoulli: Vec<Vec<Vec<LambdaPoly>>>,
    /// Bernoulli polynomials of the second kind, x symbolic.
    second_kind_bernoulli: PolyFamily,
    /// Hyperharmonic sequences for r = 1..=max(r_max, 1), indexed by r−1.
    hyperharmonic: Vec<HarmonicSequence>,
}

impl SuiteData {
    fn build(cfg: &SuiteConfig) -> Result<SuiteData> {
        let n_max = cfg.n_max;
        let r_range = 0..=cfg.r_max;
        let first = r_range
            .clone()
            .map(|r| StirlingTriangle::first_kind_unsigned_basis(n_max, r))
            .collect();
        let second: Vec<_> = r_range
            .clone()
            .map(|r| StirlingTriangle::second_kind_basis(n_max, r))
            .collect();
        let beta = fully_degenerate_bernoulli(n_max);
        let fubini = r_range
            .clone()
            .map(|r| fubini(n_max, &Rational::from_integer(r as i64)))
            .collect();
        let euler = r_range
            .clone()
            .map(|r| euler(n_max, r))
            .collect::<Result<_>>()?;
        let poly_bernoulli = r_range
            .map(|r| {
                cfg.p_set
                    .iter()
                    .map(|&p| poly_bernoulli(p, n_max, r))
                    .collect::<Result<_>>()
            })
            .collect::<Result<_>>()?;
        let second_kind_bernoulli = bernoulli_second_kind(n_max);
        let hyperharmonic = (1..=cfg.r_max.max(1))
            .map(|r| hyperharmonic(r, n_max))
            .collect::<Result<_>>()?;
        Ok(SuiteData {
            n_max,
            r_max: cfg.r_max,
            p_set: cfg.p_set.clone(),
            first,
            second,
            beta,
            fubini,
            euler,
            poly_bernoulli,
            second_kind_bernoulli,
            hyperharmonic,
        })
    }

    /// Adds 1 onto a single stored entry. Construction has already passed
    /// its internal dual-route checks, so only the downstream identity
    /// checks can catch this.
    fn inject(&mut self, target: FaultTarget) {
        let n = self.n_max.min(2);
        match target {
            FaultTarget::FirstTriangle => {
                self.first[0].perturb_entry(n, n.min(1), &LambdaPoly::one());
            }
            FaultTarget::SecondTriangle => {
                self.second[0].perturb_entry(n, n.min(1), &LambdaPoly::one());
            }
            FaultTarget::FullyDegenerateBernoulli => {
                self.beta.perturb_value(n, &XPoly::one());
            }
            FaultTarget::Fubini => {
                self.fubini[0].perturb_value(n, &XPoly::one());
            }
            FaultTarget::Euler => {
                let v = &mut self.euler[0][n];
                *v = &*v + &LambdaPoly::one();
            }
            FaultTarget::PolyBernoulli => {
                let v = &mut self.poly_bernoulli[0][0][n];
                *v = &*v + &LambdaPoly::one();
            }
            FaultTarget::BernoulliSecondKind => {
                self.second_kind_bernoulli.perturb_value(n, &XPoly::one());
            }
            FaultTarget::Hyperharmonic => {
                // n = 0 is the stored zero constant term; the generating-
                // function comparison still sees a perturbation there.
                let i = n.max(1).min(self.n_max);
                self.hyperharmonic[0].perturb_value(i, &LambdaPoly::one());
            }
        }
    }
}

// ─── check cores ───

fn thm1_core(first: &StirlingTriangle, second: &StirlingTriangle, r: u32) -> Vec<CheckResult> {
    let n_max = first.n_max() as i64;
    let start = Instant::now();
    let report = orthogonality_check_with(first, second);
    let mk = |id: &str, failure: &Option<crate::triangle::OrthFailure>| match failure {
        None => CheckResult::finish(id, &[("n_max", n_max), ("r", r as i64)], None, start),
        Some(f) => CheckResult::finish(
            id,
            &[
                ("n_max", n_max),
                ("r", r as i64),
                ("n", f.n as i64),
                ("j", f.j as i64),
            ],
            Some(textfmt::format_lambda_poly(&f.residual)),
            start,
        ),
    };
    vec![
        mk("thm1-first", &report.first_relation),
        mk("thm1-second", &report.second_relation),
    ]
}

fn thm2_core(
    first: &StirlingTriangle,
    second: &StirlingTriangle,
    r: u32,
    trials: usize,
    seed: u64,
) -> Vec<CheckResult> {
    let n_max = first.n_max();
    let params = [
        ("n_max", n_max as i64),
        ("r", r as i64),
        ("trials", trials as i64),
    ];
    let mut rng = SplitMix64(seed ^ (r as u64).wrapping_mul(0x9E37_79B9));

    let start = Instant::now();
    let mut forward_residual = None;
    for _ in 0..trials {
        let a: Vec<LambdaPoly> = (0..=n_max).map(|_| rng.lambda_poly(3)).collect();
        let b = second.apply_forward(&a);
        let round = first.apply_inverse_signed(&b);
        if let Some(i) = (0..=n_max).find(|&i| round[i] != a[i]) {
            forward_residual = Some(textfmt::format_lambda_poly(&(&round[i] - &a[i])));
            break;
        }
    }
    let forward = CheckResult::finish("thm2-forward", &params, forward_residual, start);

    let start = Instant::now();
    let mut backward_residual = None;
    for _ in 0..trials {
        let b: Vec<LambdaPoly> = (0..=n_max).map(|_| rng.lambda_poly(3)).collect();
        let a = first.apply_inverse_signed(&b);
        let round = second.apply_forward(&a);
        if let Some(i) = (0..=n_max).find(|&i| round[i] != b[i]) {
            backward_residual = Some(textfmt::format_lambda_poly(&(&round[i] - &b[i])));
            break;
        }
    }
    let backward = CheckResult::finish("thm2-backward", &params, backward_residual, start);

    vec![forward, backward]
}

/// n!/(n+1) = Σ_k (−1)^k {n+r brack k+r}_{r,λ} β_{k,λ}(r).
fn cor3_core(first: &StirlingTriangle, beta: &PolyFamily, r: u32) -> CheckResult {
    let n_max = first.n_max();
    let start = Instant::now();
    let beta_at_r = beta.eval_x(&Rational::from_integer(r as i64));
    let mut residual = None;
    for n in 0..=n_max {
        let mut acc = LambdaPoly::zero();
        for k in 0..=n {
            let term = first.entry(n, k) * &beta_at_r[k];
            if k % 2 == 1 {
                acc -= &term;
            } else {
                acc += &term;
            }
        }
        let expect = LambdaPoly::constant(factorial(n) * Rational::new(1, n as i64 + 1));
        let diff = &acc - &expect;
        if !diff.is_zero() {
            residual = Some(textfmt::format_lambda_poly(&diff));
            break;
        }
    }
    CheckResult::finish(
        "cor3",
        &[("n_max", n_max as i64), ("r", r as i64)],
        residual,
        start,
    )
}

/// x^n n! = Σ_k (−1)^{n−k} {n+r brack k+r}_{r,λ} F_{k,λ}(x|r), bivariate
/// in (x, λ).
fn thm4_core(first: &StirlingTriangle, fubini_family: &PolyFamily, r: u32) -> CheckResult {
    let n_max = first.n_max();
    let start = Instant::now();
    let mut residual = None;
    for n in 0..=n_max {
        let mut acc = XPoly::zero();
        for k in 0..=n {
            let term = fubini_family.value(k).scale(first.entry(n, k));
            if (n - k) % 2 == 1 {
                acc -= &term;
            } else {
                acc += &term;
            }
        }
        let expect = XPoly::monomial(LambdaPoly::constant(factorial(n)), n);
        let diff = &acc - &expect;
        if !diff.is_zero() {
            residual = Some(textfmt::format_xpoly(&diff));
            break;
        }
    }
    CheckResult::finish(
        "thm4",
        &[("n_max", n_max as i64), ("r", r as i64)],
        residual,
        start,
    )
}

/// ℰ_{n,λ}(r) = Σ_k (−1/2)^k k! {n+r brace k+r}_{r,λ}.
fn thm5_core(second: &StirlingTriangle, euler_values: &[LambdaPoly], r: u32) -> CheckResult {
    let n_max = second.n_max();
    let start = Instant::now();
    let mut residual = None;
    for n in 0..=n_max {
        let mut acc = LambdaPoly::zero();
        for k in 0..=n {
            let c = Rational::new(-1, 2).pow_i(k as i64).expect("finite power") * factorial(k);
            acc += &second.entry(n, k).scale(&c);
        }
        let diff = &acc - &euler_values[n];
        if !diff.is_zero() {
            residual = Some(textfmt::format_lambda_poly(&diff));
            break;
        }
    }
    CheckResult::finish(
        "thm5",
        &[("n_max", n_max as i64), ("r", r as i64)],
        residual,
        start,
    )
}

/// n!/2^n = Σ_k (−1)^k {n+r brack k+r}_{r,λ} ℰ_{k,λ}(r).
fn thm6_core(first: &StirlingTriangle, euler_values: &[LambdaPoly], r: u32) -> CheckResult {
    let n_max = first.n_max();
    let start = Instant::now();
    let mut residual = None;
    for n in 0..=n_max {
        let mut acc = LambdaPoly::zero();
        for k in 0..=n {
            let term = first.entry(n, k) * &euler_values[k];
            if k % 2 == 1 {
                acc -= &term;
            } else {
                acc += &term;
            }
        }
        let expect = LambdaPoly::constant(
            factorial(n) * Rational::new(1, 2).pow_i(n as i64).expect("finite power"),
        );
        let diff = &acc - &expect;
        if !diff.is_zero() {
            residual = Some(textfmt::format_lambda_poly(&diff));
            break;
        }
    }
    CheckResult::finish(
        "thm6",
        &[("n_max", n_max as i64), ("r", r as i64)],
        residual,
        start,
    )
}

/// ∏_{j=1}^{n}(j−λ)/(n+1)^p = Σ_k {n+r brack k+r}_{r,λ} β^{(p)}_{k,λ}(−r).
fn thm7_core(first: &StirlingTriangle, pb_values: &[LambdaPoly], r: u32, p: i64) -> CheckResult {
    let n_max = first.n_max();
    let start = Instant::now();
    let mut residual = None;
    for n in 0..=n_max {
        let mut lhs = one_factorial_inverse_lambda(n + 1).expect("n + 1 >= 1");
        if n % 2 == 1 {
            lhs = -lhs;
        }
        let weight = Rational::from_integer(n as i64 + 1)
            .pow_i(-p)
            .expect("n + 1 is nonzero");
        lhs = lhs.scale(&weight);

        let mut rhs = LambdaPoly::zero();
        for k in 0..=n {
            rhs += &(first.entry(n, k) * &pb_values[k]);
        }
        let diff = &rhs - &lhs;
        if !diff.is_zero() {
            residual = Some(textfmt::format_lambda_poly(&diff));
            break;
        }
    }
    CheckResult::finish(
        "thm7",
        &[("n_max", n_max as i64), ("p", p), ("r", r as i64)],
        residual,
        start,
    )
}

/// Hyperharmonic recursion values match the coefficients of
/// −log_λ(1−t)/(1−t)^r.
fn prop8_core(hyper: &HarmonicSequence, r: u32) -> CheckResult {
    let n_max = hyper.n_max();
    let start = Instant::now();
    let gf = hyperharmonic_gf(r, n_max).expect("r >= 1");
    let mut residual = None;
    for n in 0..=n_max {
        let diff = gf.coeff(n) - hyper.value(n);
        if !diff.is_zero() {
            residual = Some(textfmt::format_lambda_poly(&diff));
            break;
        }
    }
    CheckResult::finish(
        "prop8",
        &[("n_max", n_max as i64), ("r", r as i64)],
        residual,
        start,
    )
}

/// Σ_{k=0}^{n} (−1)^k/k! · b_{k,λ}(r) · H^{(r)}_{n−k,λ} = δ_{n,1}, with the
/// zero constant-term convention for the hyperharmonic numbers.
fn eq34_core(second_kind_bernoulli: &PolyFamily, hyper: &HarmonicSequence, r: u32) -> CheckResult {
    let n_max = hyper.n_max();
    let start = Instant::now();
    let b_at_r = second_kind_bernoulli.eval_x(&Rational::from_integer(r as i64));
    let mut residual = None;
    for n in 0..=n_max {
        let mut acc = LambdaPoly::zero();
        for k in 0..=n {
            let c = factorial(k).recip().expect("k! > 0");
            let term = (&b_at_r[k] * hyper.value(n - k)).scale(&c);
            if k % 2 == 1 {
                acc -= &term;
            } else {
                acc += &term;
            }
        }
        let expect = if n == 1 {
            LambdaPoly::one()
        } else {
            LambdaPoly::zero()
        };
        let diff = &acc - &expect;
        if !diff.is_zero() {
            residual = Some(textfmt::format_lambda_poly(&diff));
            break;
        }
    }
    CheckResult::finish(
        "eq34",
        &[("n_max", n_max as i64), ("r", r as i64)],
        residual,
        start,
    )
}

// ─── public per-identity entry points ───

/// Both orthogonality relations over 0 ≤ j ≤ n ≤ n_max at a given r.
pub fn check_theorem1(n_max: usize, r: u32) -> Vec<CheckResult> {
    let first = StirlingTriangle::first_kind_unsigned_basis(n_max, r);
    let second = StirlingTriangle::second_kind_basis(n_max, r);
    thm1_core(&first, &second, r)
}

/// Inverse-relation round-trips on seeded random λ-polynomial vectors.
pub fn check_theorem2(n_max: usize, r: u32, trials: usize, seed: u64) -> Vec<CheckResult> {
    let first = StirlingTriangle::first_kind_unsigned_basis(n_max, r);
    let second = StirlingTriangle::second_kind_basis(n_max, r);
    thm2_core(&first, &second, r, trials, seed)
}

pub fn check_corollary3(n_max: usize, r: u32) -> Vec<CheckResult> {
    let first = StirlingTriangle::first_kind_unsigned_basis(n_max, r);
    vec![cor3_core(&first, &fully_degenerate_bernoulli(n_max), r)]
}

pub fn check_theorem4(n_max: usize, r: u32) -> Vec<CheckResult> {
    let first = StirlingTriangle::first_kind_unsigned_basis(n_max, r);
    let fam = fubini(n_max, &Rational::from_integer(r as i64));
    vec![thm4_core(&first, &fam, r)]
}

pub fn check_theorems5_6(n_max: usize, r: u32) -> Result<Vec<CheckResult>> {
    let first = StirlingTriangle::first_kind_unsigned_basis(n_max, r);
    let second = StirlingTriangle::second_kind_basis(n_max, r);
    let values = euler(n_max, r)?;
    Ok(vec![
        thm5_core(&second, &values, r),
        thm6_core(&first, &values, r),
    ])
}

pub fn check_theorem7(n_max: usize, r: u32, p_set: &[i64]) -> Result<Vec<CheckResult>> {
    let first = StirlingTriangle::first_kind_unsigned_basis(n_max, r);
    p_set
        .iter()
        .map(|&p| Ok(thm7_core(&first, &poly_bernoulli(p, n_max, r)?, r, p)))
        .collect()
}

pub fn check_prop8_eq34(n_max: usize, r_max: u32) -> Result<Vec<CheckResult>> {
    let bsk = bernoulli_second_kind(n_max);
    let mut results = Vec::new();
    for r in 1..=r_max.max(1) {
        let hyper = hyperharmonic(r, n_max)?;
        results.push(prop8_core(&hyper, r));
        results.push(eq34_core(&bsk, &hyper, r));
    }
    Ok(results)
}

// ─── the runner ───

type Job<'a> = Box<dyn FnOnce() -> Vec<CheckResult> + Send + 'a>;

fn run_jobs(jobs: Vec<Job<'_>>, threads: usize) -> Vec<CheckResult> {
    if threads <= 1 {
        return jobs.into_iter().flat_map(|job| job()).collect();
    }
    let queue: Mutex<VecDeque<Job<'_>>> = Mutex::new(jobs.into());
    let results: Mutex<Vec<CheckResult>> = Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let job = queue.lock().expect("queue lock").pop_front();
                match job {
                    Some(job) => {
                        let out = job();
                        results.lock().expect("results lock").extend(out);
                    }
                    None => break,
                }
            });
        }
    });
    results.into_inner().expect("results lock")
}

/// Runs every identity check over the configured ranges and aggregates an
/// order-normalized report. Construction errors (a dual-route disagreement
/// while building a family) propagate as errors; identity failures are
/// reported, not raised.
pub fn run_all(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let mut data = SuiteData::build(cfg)?;
    if let Some(target) = cfg.fault {
        data.inject(target);
    }
    let data = &data;

    let mut jobs: Vec<Job<'_>> = Vec::new();
    for r in 0..=data.r_max {
        let i = r as usize;
        jobs.push(Box::new(move || {
            thm1_core(&data.first[i], &data.second[i], r)
        }));
        let (trials, seed) = (cfg.trials, cfg.seed);
        jobs.push(Box::new(move || {
            thm2_core(&data.first[i], &data.second[i], r, trials, seed)
        }));
        jobs.push(Box::new(move || {
            vec![cor3_core(&data.first[i], &data.beta, r)]
        }));
        jobs.push(Box::new(move || {
            vec![thm4_core(&data.first[i], &data.fubini[i], r)]
        }));
        jobs.push(Box::new(move || {
            vec![
                thm5_core(&data.second[i], &data.euler[i], r),
                thm6_core(&data.first[i], &data.euler[i], r),
            ]
        }));
        for (pi, &p) in data.p_set.iter().enumerate() {
            jobs.push(Box::new(move || {
                vec![thm7_core(&data.first[i], &data.poly_bernoulli[i][pi], r, p)]
            }));
        }
    }
    for (hi, hyper) in data.hyperharmonic.iter().enumerate() {
        let r = hi as u32 + 1;
        jobs.push(Box::new(move || {
            vec![
                prop8_core(hyper, r),
                eq34_core(&data.second_kind_bernoulli, hyper, r),
            ]
        }));
    }

    let results = run_jobs(jobs, cfg.jobs.max(1));
    Ok(VerificationReport::new(results))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_config() -> SuiteConfig {
        SuiteConfig {
            n_max: 6,
            r_max: 2,
            p_set: vec![-1, 0, 2],
            trials: 10,
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn clean_run_passes_everything() {
        let report = run_all(&small_config()).expect("construction");
        assert_eq!(report.failures(), 0, "{}", report.to_text(false));
        // thm1 ×2, thm2 ×2, cor3, thm4, thm5, thm6 per r (3 r-values),
        // thm7 per (r, p), prop8 + eq34 per r in 1..=2
        assert_eq!(report.results().len(), 3 * 8 + 3 * 3 + 2 * 2);
    }

    #[test]
    fn trivial_ranges_pass() {
        let report = run_all(&SuiteConfig {
            n_max: 0,
            r_max: 0,
            p_set: vec![0],
            trials: 3,
            ..SuiteConfig::default()
        })
        .expect("construction");
        assert_eq!(report.failures(), 0, "{}", report.to_text(false));
    }

    #[test]
    fn every_fault_target_is_detected() {
        for target in FaultTarget::all() {
            let cfg = SuiteConfig {
                fault: Some(target),
                ..small_config()
            };
            let report = run_all(&cfg).expect("construction");
            assert!(
                report.failures() >= 1,
                "fault {target} went undetected:\n{}",
                report.to_text(false)
            );
            let failed = report.results().iter().find(|r| !r.passed()).unwrap();
            assert!(failed.residual.is_some(), "fail carries a residual");
        }
    }

    #[test]
    fn fault_injection_at_degenerate_ranges_does_not_panic() {
        for target in FaultTarget::all() {
            let report = run_all(&SuiteConfig {
                n_max: 0,
                r_max: 0,
                p_set: vec![0],
                trials: 2,
                fault: Some(target),
                ..SuiteConfig::default()
            })
            .expect("construction");
            // At n_max = 0 the convolution multiplies the second-kind
            // Bernoulli value by the zero constant term, so that one fault
            // is invisible; every other target must still surface.
            if target != FaultTarget::BernoulliSecondKind {
                assert!(
                    report.failures() >= 1,
                    "fault {target} undetected at n_max = 0"
                );
            }
        }
    }

    #[test]
    fn fault_target_parsing() {
        assert_eq!(
            "thm1".parse::<FaultTarget>().unwrap(),
            FaultTarget::SecondTriangle
        );
        assert_eq!(
            "hyperharmonic".parse::<FaultTarget>().unwrap(),
            FaultTarget::Hyperharmonic
        );
        assert!("bogus".parse::<FaultTarget>().is_err());
    }

    #[test]
    fn stable_reports_are_deterministic() {
        let cfg = small_config();
        let a = run_all(&cfg).unwrap();
        let b = run_all(&cfg).unwrap();
        assert_eq!(a.to_json(true), b.to_json(true));
        assert_eq!(a.to_text(true), b.to_text(true));
        assert!(a.to_json(true).contains("\"identity_id\""));
        assert!(!a.to_json(true).contains("elapsed_ms"));
        assert!(a.to_json(false).contains("elapsed_ms"));
    }

    #[test]
    fn parallel_run_matches_serial() {
        let serial = run_all(&small_config()).unwrap();
        let parallel = run_all(&SuiteConfig {
            jobs: 4,
            ..small_config()
        })
        .unwrap();
        assert_eq!(serial.to_json(true), parallel.to_json(true));
    }

    #[test]
    fn individual_checks_pass_at_small_ranges() {
        for r in 0..=2 {
            for res in check_theorem1(6, r) {
                assert!(res.passed(), "{res:?}");
            }
            for res in check_theorem2(6, r, 5, DEFAULT_SEED) {
                assert!(res.passed(), "{res:?}");
            }
            for res in check_corollary3(6, r) {
                assert!(res.passed(), "{res:?}");
            }
            for res in check_theorem4(6, r) {
                assert!(res.passed(), "{res:?}");
            }
            for res in check_theorems5_6(6, r).unwrap() {
                assert!(res.passed(), "{res:?}");
            }
            for res in check_theorem7(6, r, &[-1, 1]).unwrap() {
                assert!(res.passed(), "{res:?}");
            }
        }
        for res in check_prop8_eq34(8, 3).unwrap() {
            assert!(res.passed(), "{res:?}");
        }
    }
}
