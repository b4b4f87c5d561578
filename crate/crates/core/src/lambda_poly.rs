//! Dense polynomials in the deformation parameter λ over the rationals.
//!
//! Every "degenerate number" in this crate is an element of `ℚ[λ]`. The
//! representation is canonical: no trailing zero coefficients, the zero
//! polynomial has an empty coefficient list. Equality is structural.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::textfmt;

/// Element of `ℚ[λ]`; `coeffs[i]` is the coefficient of λ^i.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LambdaPoly {
    coeffs: Vec<Rational>,
}

impl LambdaPoly {
    pub fn zero() -> Self {
        LambdaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        LambdaPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        LambdaPoly::from_coeffs(vec![c])
    }

    /// The polynomial λ itself.
    pub fn lambda() -> Self {
        LambdaPoly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `c0 + c1·λ`.
    pub fn linear(c0: Rational, c1: Rational) -> Self {
        LambdaPoly::from_coeffs(vec![c0, c1])
    }

    /// Builds from an ascending coefficient list, stripping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        LambdaPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of λ^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// The value as a rational when the degree is at most zero.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Horner evaluation at a rational λ.
    pub fn eval(&self, lambda: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * lambda + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return LambdaPoly::zero();
        }
        LambdaPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by λ^k.
    pub fn mul_lambda_pow(&self, k: usize) -> Self {
        if self.is_zero() {
            return LambdaPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        LambdaPoly { coeffs }
    }
}

impl Add<&LambdaPoly> for &LambdaPoly {
    type Output = LambdaPoly;
    fn add(self, rhs: &LambdaPoly) -> LambdaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        LambdaPoly::from_coeffs(coeffs)
    }
}

impl Sub<&LambdaPoly> for &LambdaPoly {
    type Output = LambdaPoly;
    fn sub(self, rhs: &LambdaPoly) -> LambdaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        LambdaPoly::from_coeffs(coeffs)
    }
}

impl Mul<&LambdaPoly> for &LambdaPoly {
    type Output = LambdaPoly;
    fn mul(self, rhs: &LambdaPoly) -> LambdaPoly {
        if self.is_zero() || rhs.is_zero() {
            return LambdaPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LambdaPoly::from_coeffs(coeffs)
    }
}

impl Neg for &LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        LambdaPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($Op:ident, $op:ident, $OpAssign:ident, $op_assign:ident) => {
        impl $Op for LambdaPoly {
            type Output = LambdaPoly;
            fn $op(self, rhs: LambdaPoly) -> LambdaPoly {
                (&self).$op(&rhs)
            }
        }
        impl $Op<&LambdaPoly> for LambdaPoly {
            type Output = LambdaPoly;
            fn $op(self, rhs: &LambdaPoly) -> LambdaPoly {
                (&self).$op(rhs)
            }
        }
        impl $OpAssign<&LambdaPoly> for LambdaPoly {
            fn $op_assign(&mut self, rhs: &LambdaPoly) {
                *self = (&*self).$op(rhs);
            }
        }
        impl $OpAssign for LambdaPoly {
            fn $op_assign(&mut self, rhs: LambdaPoly) {
                *self = (&*self).$op(&rhs);
            }
        }
    };
}

forward_owned!(Add, add, AddAssign, add_assign);
forward_owned!(Sub, sub, SubAssign, sub_assign);
forward_owned!(Mul, mul, MulAssign, mul_assign);

impl Neg for LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        -&self
    }
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&textfmt::format_lambda_poly(self))
    }
}

impl FromStr for LambdaPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        textfmt::parse_lambda_poly(s)
    }
}
