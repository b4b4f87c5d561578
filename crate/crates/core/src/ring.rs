//! Coefficient-ring abstraction for the series engine.

use std::fmt::Debug;

use crate::lambda_poly::LambdaPoly;
use crate::rational::Rational;
use crate::xpoly::XPoly;

/// Exact commutative ring with a rational-scalar action. The series engine
/// is generic over this trait so the same machinery runs over `ℚ[λ]` and over
/// x-polynomials with `ℚ[λ]` coefficients.
pub trait Coefficient: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
    fn from_rational(c: &Rational) -> Self;
    /// Multiplicative inverse when the element is a unit of the ring.
    fn invert_unit(&self) -> Option<Self>;
}

impl Coefficient for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
    fn from_rational(c: &Rational) -> Self {
        c.clone()
    }
    fn invert_unit(&self) -> Option<Self> {
        self.recip()
    }
}

impl Coefficient for LambdaPoly {
    fn zero() -> Self {
        LambdaPoly::zero()
    }
    fn one() -> Self {
        LambdaPoly::one()
    }
    fn is_zero(&self) -> bool {
        LambdaPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        LambdaPoly::scale(self, c)
    }
    fn from_rational(c: &Rational) -> Self {
        LambdaPoly::constant(c.clone())
    }
    /// Units of `ℚ[λ]` are the nonzero constants.
    fn invert_unit(&self) -> Option<Self> {
        self.as_constant()
            .and_then(|c| c.recip())
            .map(LambdaPoly::constant)
    }
}

impl Coefficient for XPoly {
    fn zero() -> Self {
        XPoly::zero()
    }
    fn one() -> Self {
        XPoly::one()
    }
    fn is_zero(&self) -> bool {
        XPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        self.scale_rational(c)
    }
    fn from_rational(c: &Rational) -> Self {
        XPoly::constant(LambdaPoly::constant(c.clone()))
    }
    /// Units are nonzero rational constants.
    fn invert_unit(&self) -> Option<Self> {
        self.as_constant()
            .and_then(|c| c.as_constant())
            .and_then(|c| c.recip())
            .map(|c| XPoly::constant(LambdaPoly::constant(c)))
    }
}
