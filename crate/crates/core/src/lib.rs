//! Exact computation of degenerate r-Stirling triangles, degenerate
//! special-polynomial families, and degenerate (hyper)harmonic numbers,
//! together with a symbolic verification suite for the identities that
//! relate them.
//!
//! Everything is computed over `ℚ[λ]`: the deformation parameter λ stays
//! symbolic, so every verified identity is a polynomial identity, not a
//! sampled one. Evaluation at a rational λ is a separate, explicit step.
//!
//! ```
//! use rstirling_core::rational::Rational;
//! use rstirling_core::triangle::{orthogonality_matrix_check, StirlingTriangle};
//!
//! let second = StirlingTriangle::second_kind_basis(4, 1);
//! // entry (2, 1) is the λ-polynomial 3 − λ
//! assert_eq!(second.entry(2, 1).to_string(), "3 - L");
//! // λ = 0 recovers the classical r-Stirling value
//! assert_eq!(second.entry(2, 1).eval(&Rational::zero()), Rational::from_integer(3));
//! // the two triangle kinds are mutually inverse, symbolically in λ
//! assert!(orthogonality_matrix_check(4, 1).passed());
//! ```

// Index-style loops mirror the (n, k) subscripts of the triangles and
// series throughout; iterator rewrites obscure them.
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod export;
pub mod factorials;
pub mod families;
pub mod identities;
pub mod lambda_poly;
pub mod rational;
pub mod ring;
pub mod series;
pub mod textfmt;
pub mod triangle;
pub mod xpoly;

pub use error::{Error, Result};
pub use lambda_poly::LambdaPoly;
pub use rational::Rational;
pub use ring::Coefficient;
pub use series::Series;
pub use triangle::{Provenance, StirlingKind, StirlingTriangle};
pub use xpoly::XPoly;
