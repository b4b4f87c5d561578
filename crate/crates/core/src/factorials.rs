//! Falling/rising factorial bases and the λ-factorial primitives.

use crate::error::{Error, Result};
use crate::lambda_poly::LambdaPoly;
use crate::rational::{factorial, Rational};
use crate::xpoly::XPoly;

/// ∏_{j=0}^{n-1} (x + shift − j·step) as a polynomial in x.
fn factorial_product(n: usize, shift: i64, step: &LambdaPoly) -> XPoly {
    let mut acc = XPoly::one();
    for j in 0..n {
        let constant = &LambdaPoly::constant(Rational::from_integer(shift))
            - &step.scale(&Rational::from_integer(j as i64));
        let factor = XPoly::from_coeffs(vec![constant, LambdaPoly::one()]);
        acc = &acc * &factor;
    }
    acc
}

/// Degenerate falling factorial (x+shift)_{n,λ} = ∏_{j<n} ((x+shift) − jλ).
pub fn degenerate_falling(n: usize, shift: i64) -> XPoly {
    factorial_product(n, shift, &LambdaPoly::lambda())
}

/// Ordinary falling factorial (x+shift)_n, i.e. the λ = 1 instance.
pub fn ordinary_falling(n: usize, shift: i64) -> XPoly {
    factorial_product(n, shift, &LambdaPoly::one())
}

/// Degenerate rising factorial ⟨x+shift⟩_{n,λ} = ∏_{j<n} ((x+shift) + jλ).
pub fn degenerate_rising(n: usize, shift: i64) -> XPoly {
    factorial_product(n, shift, &-&LambdaPoly::lambda())
}

/// Ordinary rising factorial ⟨x+shift⟩_n, i.e. the λ = 1 instance.
pub fn ordinary_rising(n: usize, shift: i64) -> XPoly {
    factorial_product(n, shift, &LambdaPoly::constant(Rational::from_integer(-1)))
}

/// (x₀)_{n,λ} for a rational x₀, as a polynomial in λ.
pub fn degenerate_falling_at(x: &Rational, n: usize) -> LambdaPoly {
    let mut acc = LambdaPoly::one();
    for j in 0..n {
        let factor = LambdaPoly::linear(x.clone(), Rational::from_integer(-(j as i64)));
        acc = &acc * &factor;
    }
    acc
}

/// (1/λ)·binom(λ, k) = (λ−1)(λ−2)⋯(λ−k+1)/k!, a polynomial in λ.
///
/// The 1/λ factor cancels analytically, so the result stays in `ℚ[λ]`.
/// Rejects k = 0, where the expression is not polynomial.
pub fn lambda_binomial(k: usize) -> Result<LambdaPoly> {
    if k == 0 {
        return Err(Error::Domain("lambda_binomial requires k >= 1".to_string()));
    }
    let mut acc = LambdaPoly::one();
    for j in 1..k {
        acc = &acc * &LambdaPoly::linear(Rational::from_integer(-(j as i64)), Rational::one());
    }
    Ok(acc.scale(&factorial(k).recip().expect("k! > 0")))
}

/// λ^{n−1}·(1)_{n,1/λ} = ∏_{j=1}^{n−1} (λ−j), a polynomial in λ.
///
/// These are the numerators of the degenerate logarithm series. Rejects
/// n = 0; n = 1 is the empty product.
pub fn one_factorial_inverse_lambda(n: usize) -> Result<LambdaPoly> {
    if n == 0 {
        return Err(Error::Domain(
            "one_factorial_inverse_lambda requires n >= 1".to_string(),
        ));
    }
    let mut acc = LambdaPoly::one();
    for j in 1..n {
        acc = &acc * &LambdaPoly::linear(Rational::from_integer(-(j as i64)), Rational::one());
    }
    Ok(acc)
}
