//! Degenerate (r-)Stirling triangles and the transforms built from them.
//!
//! Each triangle is computed by exact basis conversion: the defining
//! polynomial of row n is expanded in the target monic graded basis by
//! back-substitution from the top degree down. An independent route reads
//! the same entries off the column generating functions; the two must agree
//! entrywise, which the tests and the verification suite enforce.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::factorials::{degenerate_falling, degenerate_rising, ordinary_falling, ordinary_rising};
use crate::lambda_poly::LambdaPoly;
use crate::rational::factorial;
use crate::series::{degenerate_exp_at, neg_degenerate_log_neg_t, one_minus_t_inv_pow, Series};
use crate::xpoly::XPoly;
use crate::Rational;

/// Which Stirling family a triangle holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StirlingKind {
    /// Unsigned degenerate (r-)Stirling numbers of the first kind.
    UnsignedFirst,
    /// Signed degenerate Stirling numbers of the first kind (r = 0 only).
    SignedFirst,
    /// Degenerate (r-)Stirling numbers of the second kind.
    Second,
}

impl StirlingKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            StirlingKind::UnsignedFirst => "unsigned-first",
            StirlingKind::SignedFirst => "signed-first",
            StirlingKind::Second => "second",
        }
    }

    pub fn parse(s: &str) -> Option<StirlingKind> {
        match s {
            "unsigned-first" => Some(StirlingKind::UnsignedFirst),
            "signed-first" => Some(StirlingKind::SignedFirst),
            "second" => Some(StirlingKind::Second),
            _ => None,
        }
    }
}

impl fmt::Display for StirlingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How a triangle's entries were obtained. Metadata only: equality of
/// triangles compares kind, r, n_max and entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    BasisConversion,
    Egf,
    Recurrence,
    Imported,
}

/// Lower-triangular array of λ-polynomials indexed by (n, k), 0 ≤ k ≤ n.
#[derive(Clone, Debug)]
pub struct StirlingTriangle {
    kind: StirlingKind,
    r: u32,
    n_max: usize,
    entries: Vec<Vec<LambdaPoly>>,
    provenance: Provenance,
}

impl PartialEq for StirlingTriangle {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
            && self.r == other.r
            && self.n_max == other.n_max
            && self.entries == other.entries
    }
}

impl Eq for StirlingTriangle {}

/// Expands each `sources[n]` (monic of degree n) in the monic graded basis
/// `basis[0..=n]` by back-substitution, highest degree first.
fn change_of_basis(sources: &[XPoly], basis: &[XPoly]) -> Vec<Vec<LambdaPoly>> {
    sources
        .iter()
        .enumerate()
        .map(|(n, source)| {
            let mut remainder = source.clone();
            let mut row = vec![LambdaPoly::zero(); n + 1];
            for k in (0..=n).rev() {
                let c = remainder.coeff(k);
                if !c.is_zero() {
                    remainder = &remainder - &basis[k].scale(&c);
                }
                row[k] = c;
            }
            assert!(
                remainder.is_zero(),
                "back-substitution left a nonzero remainder at n = {n}"
            );
            row
        })
        .collect()
}

impl StirlingTriangle {
    /// Degenerate r-Stirling numbers of the second kind: entry (n, k) is the
    /// coefficient of (x)_k in (x+r)_{n,λ}.
    pub fn second_kind_basis(n_max: usize, r: u32) -> Self {
        let sources: Vec<XPoly> = (0..=n_max)
            .map(|n| degenerate_falling(n, r as i64))
            .collect();
        let basis: Vec<XPoly> = (0..=n_max).map(|k| ordinary_falling(k, 0)).collect();
        StirlingTriangle {
            kind: StirlingKind::Second,
            r,
            n_max,
            entries: change_of_basis(&sources, &basis),
            provenance: Provenance::BasisConversion,
        }
    }

    /// Unsigned degenerate r-Stirling numbers of the first kind: entry
    /// (n, k) is the coefficient of ⟨x⟩_{k,λ} in ⟨x+r⟩_n.
    pub fn first_kind_unsigned_basis(n_max: usize, r: u32) -> Self {
        let sources: Vec<XPoly> = (0..=n_max).map(|n| ordinary_rising(n, r as i64)).collect();
        let basis: Vec<XPoly> = (0..=n_max).map(|k| degenerate_rising(k, 0)).collect();
        StirlingTriangle {
            kind: StirlingKind::UnsignedFirst,
            r,
            n_max,
            entries: change_of_basis(&sources, &basis),
            provenance: Provenance::BasisConversion,
        }
    }

    /// Signed degenerate Stirling numbers of the first kind (r = 0):
    /// (−1)^{n−k} times the unsigned entry.
    pub fn signed_first_kind(n_max: usize) -> Self {
        let unsigned = StirlingTriangle::first_kind_unsigned_basis(n_max, 0);
        let entries = unsigned
            .entries
            .iter()
            .enumerate()
            .map(|(n, row)| {
                row.iter()
                    .enumerate()
                    .map(|(k, e)| if (n - k) % 2 == 1 { -e } else { e.clone() })
                    .collect()
            })
            .collect();
        StirlingTriangle {
            kind: StirlingKind::SignedFirst,
            r: 0,
            n_max,
            entries,
            provenance: Provenance::BasisConversion,
        }
    }

    /// Signed first kind by its defining expansion: the coefficient of
    /// (x)_{k,λ} in the ordinary falling factorial (x)_n. Used to validate
    /// the sign rule.
    pub fn signed_first_kind_direct(n_max: usize) -> Self {
        let sources: Vec<XPoly> = (0..=n_max).map(|n| ordinary_falling(n, 0)).collect();
        let basis: Vec<XPoly> = (0..=n_max).map(|k| degenerate_falling(k, 0)).collect();
        StirlingTriangle {
            kind: StirlingKind::SignedFirst,
            r: 0,
            n_max,
            entries: change_of_basis(&sources, &basis),
            provenance: Provenance::BasisConversion,
        }
    }

    /// Reads entries off the column generating functions: for the second
    /// kind e_λ^r(t)·(e_λ(t)−1)^k/k!, for the unsigned first kind
    /// (1−t)^{−r}·(−log_λ(1−t))^k/k!, entry (n, k) = n!·[t^n].
    pub fn via_egf(kind: StirlingKind, r: u32, n_max: usize) -> Self {
        assert!(
            kind != StirlingKind::SignedFirst || r == 0,
            "signed first kind is defined at r = 0"
        );
        let (base, prefactor): (Series<LambdaPoly>, Series<LambdaPoly>) = match kind {
            StirlingKind::Second => (
                degenerate_exp_at(&Rational::one(), n_max).sub(&Series::one(n_max)),
                degenerate_exp_at(&Rational::from_integer(r as i64), n_max),
            ),
            StirlingKind::UnsignedFirst | StirlingKind::SignedFirst => (
                neg_degenerate_log_neg_t(n_max),
                one_minus_t_inv_pow(r, n_max),
            ),
        };

        let mut entries: Vec<Vec<LambdaPoly>> = (0..=n_max)
            .map(|n| vec![LambdaPoly::zero(); n + 1])
            .collect();
        // column k: prefactor · base^k / k!, built incrementally
        let mut column = prefactor;
        for k in 0..=n_max {
            if k > 0 {
                column = column
                    .mul(&base)
                    .expect("equal orders by construction")
                    .scale(&Rational::new(1, k as i64));
            }
            for n in k..=n_max {
                entries[n][k] = column.coeff(n).scale(&factorial(n));
            }
        }

        if kind == StirlingKind::SignedFirst {
            for (n, row) in entries.iter_mut().enumerate() {
                for (k, e) in row.iter_mut().enumerate() {
                    if (n - k) % 2 == 1 {
                        *e = -&*e;
                    }
                }
            }
        }

        StirlingTriangle {
            kind,
            r,
            n_max,
            entries,
            provenance: Provenance::Egf,
        }
    }

    pub fn from_entries(
        kind: StirlingKind,
        r: u32,
        entries: Vec<Vec<LambdaPoly>>,
        provenance: Provenance,
    ) -> Self {
        assert!(!entries.is_empty(), "triangle needs row 0");
        for (n, row) in entries.iter().enumerate() {
            assert!(row.len() == n + 1, "row {n} must have {} entries", n + 1);
        }
        StirlingTriangle {
            kind,
            r,
            n_max: entries.len() - 1,
            entries,
            provenance,
        }
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Entry (n, k) for 0 ≤ k ≤ n ≤ n_max. Panics outside the triangle.
    pub fn entry(&self, n: usize, k: usize) -> &LambdaPoly {
        assert!(
            k <= n && n <= self.n_max,
            "entry ({n},{k}) outside triangle"
        );
        &self.entries[n][k]
    }

    pub fn row(&self, n: usize) -> &[LambdaPoly] {
        &self.entries[n]
    }

    /// Adds `delta` onto a single entry; the verification suite uses this
    /// for fault-injection self-tests.
    pub fn perturb_entry(&mut self, n: usize, k: usize, delta: &LambdaPoly) {
        assert!(
            k <= n && n <= self.n_max,
            "entry ({n},{k}) outside triangle"
        );
        self.entries[n][k] = &self.entries[n][k] + delta;
    }

    /// Evaluates every entry at a rational λ.
    pub fn eval_lambda(&self, lambda: &Rational) -> StirlingTriangle {
        StirlingTriangle {
            kind: self.kind,
            r: self.r,
            n_max: self.n_max,
            entries: self
                .entries
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|e| LambdaPoly::constant(e.eval(lambda)))
                        .collect()
                })
                .collect(),
            provenance: self.provenance,
        }
    }

    /// b_n = Σ_{k≤n} entry(n, k) · a_k.
    pub fn apply_forward(&self, a: &[LambdaPoly]) -> Vec<LambdaPoly> {
        assert!(a.len() <= self.n_max + 1, "vector longer than triangle");
        (0..a.len())
            .map(|n| {
                let mut acc = LambdaPoly::zero();
                for (k, ak) in a.iter().enumerate().take(n + 1) {
                    acc += &(self.entry(n, k) * ak);
                }
                acc
            })
            .collect()
    }

    /// a_n = Σ_{k≤n} (−1)^{n−k} entry(n, k) · b_k.
    pub fn apply_inverse_signed(&self, b: &[LambdaPoly]) -> Vec<LambdaPoly> {
        assert!(b.len() <= self.n_max + 1, "vector longer than triangle");
        (0..b.len())
            .map(|n| {
                let mut acc = LambdaPoly::zero();
                for (k, bk) in b.iter().enumerate().take(n + 1) {
                    let term = self.entry(n, k) * bk;
                    if (n - k) % 2 == 1 {
                        acc -= &term;
                    } else {
                        acc += &term;
                    }
                }
                acc
            })
            .collect()
    }
}

type CacheKey = (StirlingKind, u32, usize);

fn cache() -> &'static Mutex<HashMap<CacheKey, Arc<StirlingTriangle>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<StirlingTriangle>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Shared immutable triangle, computed once per (kind, r, n_max) by the
/// basis-conversion route.
pub fn cached_triangle(kind: StirlingKind, r: u32, n_max: usize) -> Arc<StirlingTriangle> {
    let mut map = cache().lock().expect("triangle cache poisoned");
    map.entry((kind, r, n_max))
        .or_insert_with(|| {
            Arc::new(match kind {
                StirlingKind::Second => StirlingTriangle::second_kind_basis(n_max, r),
                StirlingKind::UnsignedFirst => {
                    StirlingTriangle::first_kind_unsigned_basis(n_max, r)
                }
                StirlingKind::SignedFirst => StirlingTriangle::signed_first_kind(n_max),
            })
        })
        .clone()
}

/// Forward transform of the inverse-relation pair:
/// b_n = Σ_{k=0}^{n} {n+r brace k+r}_{r,λ} a_k.
pub fn transform_forward(a: &[LambdaPoly], r: u32) -> Vec<LambdaPoly> {
    if a.is_empty() {
        return Vec::new();
    }
    cached_triangle(StirlingKind::Second, r, a.len() - 1).apply_forward(a)
}

/// Inverse transform: a_n = Σ_{k=0}^{n} (−1)^{n−k} {n+r brack k+r}_{r,λ} b_k.
pub fn transform_inverse(b: &[LambdaPoly], r: u32) -> Vec<LambdaPoly> {
    if b.is_empty() {
        return Vec::new();
    }
    cached_triangle(StirlingKind::UnsignedFirst, r, b.len() - 1).apply_inverse_signed(b)
}

/// One failed Kronecker-delta cell of an orthogonality relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthFailure {
    pub n: usize,
    pub j: usize,
    pub residual: LambdaPoly,
}

/// Outcome of checking both orthogonality relations; `None` means the
/// relation holds for every cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalityReport {
    pub first_relation: Option<OrthFailure>,
    pub second_relation: Option<OrthFailure>,
}

impl OrthogonalityReport {
    pub fn passed(&self) -> bool {
        self.first_relation.is_none() && self.second_relation.is_none()
    }
}

/// Verifies, as exact λ-polynomial identities for all 0 ≤ j ≤ n ≤ n_max,
///
///   Σ_k (−1)^{n−k} {n+r brack k+r} {k+r brace j+r} = δ_{n,j}
///   Σ_k (−1)^{k−j} {n+r brace k+r} {k+r brack j+r} = δ_{n,j}
///
/// reporting the first failing cell of each relation.
pub fn orthogonality_check_with(
    first: &StirlingTriangle,
    second: &StirlingTriangle,
) -> OrthogonalityReport {
    assert_eq!(first.kind(), StirlingKind::UnsignedFirst);
    assert_eq!(second.kind(), StirlingKind::Second);
    assert_eq!(first.n_max(), second.n_max());
    let n_max = first.n_max();

    let delta = |n: usize, j: usize| {
        if n == j {
            LambdaPoly::one()
        } else {
            LambdaPoly::zero()
        }
    };

    let mut first_relation = None;
    let mut second_relation = None;
    'outer1: for n in 0..=n_max {
        for j in 0..=n {
            let mut acc = LambdaPoly::zero();
            for k in j..=n {
                let term = first.entry(n, k) * second.entry(k, j);
                if (n - k) % 2 == 1 {
                    acc -= &term;
                } else {
                    acc += &term;
                }
            }
            let residual = &acc - &delta(n, j);
            if !residual.is_zero() {
                first_relation = Some(OrthFailure { n, j, residual });
                break 'outer1;
            }
        }
    }
    'outer2: for n in 0..=n_max {
        for j in 0..=n {
            let mut acc = LambdaPoly::zero();
            for k in j..=n {
                let term = second.entry(n, k) * first.entry(k, j);
                if (k - j) % 2 == 1 {
                    acc -= &term;
                } else {
                    acc += &term;
                }
            }
            let residual = &acc - &delta(n, j);
            if !residual.is_zero() {
                second_relation = Some(OrthFailure { n, j, residual });
                break 'outer2;
            }
        }
    }

    OrthogonalityReport {
        first_relation,
        second_relation,
    }
}

/// Builds both triangles and checks the orthogonality relations.
pub fn orthogonality_matrix_check(n_max: usize, r: u32) -> OrthogonalityReport {
    let first = cached_triangle(StirlingKind::UnsignedFirst, r, n_max);
    let second = cached_triangle(StirlingKind::Second, r, n_max);
    orthogonality_check_with(&first, &second)
}
