//! Polynomials in x whose coefficients live in `ℚ[λ]`.
//!
//! This is the basis-conversion workhorse: falling/rising factorial bases,
//! the change-of-basis triangles, and the x-symbolic polynomial families all
//! operate on `XPoly` values. Canonical form mirrors `LambdaPoly`: no
//! trailing zero coefficients, zero is the empty list.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lambda_poly::LambdaPoly;
use crate::rational::Rational;
use crate::textfmt;

/// Polynomial in x over `ℚ[λ]`; `coeffs[i]` is the coefficient of x^i.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct XPoly {
    coeffs: Vec<LambdaPoly>,
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        XPoly::constant(LambdaPoly::one())
    }

    pub fn constant(c: LambdaPoly) -> Self {
        XPoly::from_coeffs(vec![c])
    }

    /// The polynomial x itself.
    pub fn x() -> Self {
        XPoly::from_coeffs(vec![LambdaPoly::zero(), LambdaPoly::one()])
    }

    /// `c · x^k`.
    pub fn monomial(c: LambdaPoly, k: usize) -> Self {
        if c.is_zero() {
            return XPoly::zero();
        }
        let mut coeffs = vec![LambdaPoly::zero(); k + 1];
        coeffs[k] = c;
        XPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<LambdaPoly>) -> Self {
        while coeffs.last().is_some_and(LambdaPoly::is_zero) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[LambdaPoly] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> LambdaPoly {
        self.coeffs.get(i).cloned().unwrap_or_else(LambdaPoly::zero)
    }

    /// Degree in x; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&LambdaPoly> {
        self.coeffs.last()
    }

    /// The value as a λ-polynomial when the x-degree is at most zero.
    pub fn as_constant(&self) -> Option<LambdaPoly> {
        match self.coeffs.len() {
            0 => Some(LambdaPoly::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Evaluates at a rational x, leaving λ symbolic.
    pub fn eval_x(&self, x: &Rational) -> LambdaPoly {
        let xp = LambdaPoly::constant(x.clone());
        let mut acc = LambdaPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &xp) + c;
        }
        acc
    }

    /// Evaluates λ at a rational, leaving x symbolic.
    pub fn eval_lambda(&self, lambda: &Rational) -> XPoly {
        XPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| LambdaPoly::constant(c.eval(lambda)))
                .collect(),
        )
    }

    /// Full evaluation at rational (x, λ).
    pub fn eval(&self, x: &Rational, lambda: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.eval(lambda);
        }
        acc
    }

    pub fn scale(&self, c: &LambdaPoly) -> Self {
        if c.is_zero() {
            return XPoly::zero();
        }
        XPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return XPoly::zero();
        }
        XPoly::from_coeffs(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    /// Substitutes x ↦ −x.
    pub fn reflect_x(&self) -> Self {
        XPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }
}

impl Add<&XPoly> for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect();
        XPoly::from_coeffs(coeffs)
    }
}

impl Sub<&XPoly> for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect();
        XPoly::from_coeffs(coeffs)
    }
}

impl Mul<&XPoly> for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut coeffs = vec![LambdaPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        XPoly::from_coeffs(coeffs)
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($Op:ident, $op:ident, $OpAssign:ident, $op_assign:ident) => {
        impl $Op for XPoly {
            type Output = XPoly;
            fn $op(self, rhs: XPoly) -> XPoly {
                (&self).$op(&rhs)
            }
        }
        impl $Op<&XPoly> for XPoly {
            type Output = XPoly;
            fn $op(self, rhs: &XPoly) -> XPoly {
                (&self).$op(rhs)
            }
        }
        impl $OpAssign<&XPoly> for XPoly {
            fn $op_assign(&mut self, rhs: &XPoly) {
                *self = (&*self).$op(rhs);
            }
        }
        impl $OpAssign for XPoly {
            fn $op_assign(&mut self, rhs: XPoly) {
                *self = (&*self).$op(&rhs);
            }
        }
    };
}

forward_owned!(Add, add, AddAssign, add_assign);
forward_owned!(Sub, sub, SubAssign, sub_assign);
forward_owned!(Mul, mul, MulAssign, mul_assign);

impl Neg for XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        -&self
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&textfmt::format_xpoly(self))
    }
}

impl FromStr for XPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        textfmt::parse_xpoly(s)
    }
}
