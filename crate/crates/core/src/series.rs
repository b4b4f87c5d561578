//! Truncated formal power series in t, the generating-function engine.
//!
//! A `Series<C>` holds coefficients of t^0 … t^N for a fixed truncation
//! order N. Binary operations demand equal orders and fail loudly on a
//! mismatch instead of silently coercing; everything is exact. The engine is
//! generic over the coefficient ring so the same code serves series over
//! `ℚ[λ]` and series with x-polynomial coefficients.

use crate::error::{Error, Result};
use crate::factorials::{
    degenerate_falling, degenerate_falling_at, one_factorial_inverse_lambda, ordinary_falling,
};
use crate::lambda_poly::LambdaPoly;
use crate::rational::{binomial, factorial, Rational};
use crate::ring::Coefficient;
use crate::xpoly::XPoly;

/// Power series truncated at t^order; `coeffs.len() == order + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series<C: Coefficient> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> Series<C> {
    /// Wraps an explicit coefficient list; the truncation order is
    /// `coeffs.len() - 1`. Panics on an empty list.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the t^0 slot");
        Series { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        Series {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Series::constant(C::one(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        let mut coeffs = vec![C::zero(); order + 1];
        coeffs[0] = c;
        Series { coeffs }
    }

    /// The series t (truncated, so just 0 when order = 0).
    pub fn t(order: usize) -> Self {
        let mut coeffs = vec![C::zero(); order + 1];
        if order >= 1 {
            coeffs[1] = C::one();
        }
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of t^n. Panics beyond the truncation order: that
    /// coefficient is unknown, not zero.
    pub fn coeff(&self, n: usize) -> &C {
        assert!(
            n < self.coeffs.len(),
            "coefficient t^{n} beyond truncation order {}",
            self.order()
        );
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_zero)
    }

    /// Drops coefficients above t^m. Panics if m exceeds the order.
    pub fn truncate(&self, m: usize) -> Self {
        assert!(
            m <= self.order(),
            "cannot truncate {} up to {m}",
            self.order()
        );
        Series {
            coeffs: self.coeffs[..=m].to_vec(),
        }
    }

    fn require_equal_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch(self.order(), other.order()))
        }
    }

    /// Termwise sum. Panics on an order mismatch; use the fallible ring
    /// operations when orders are not structurally guaranteed.
    pub fn add(&self, other: &Self) -> Self {
        self.require_equal_order(other).expect("series order");
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    /// Termwise difference. Panics on an order mismatch.
    pub fn sub(&self, other: &Self) -> Self {
        self.require_equal_order(other).expect("series order");
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(C::neg).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect(),
        }
    }

    pub fn scale_coeff(&self, c: &C) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Series<D> {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Cauchy product in the truncated ring.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.require_equal_order(other)?;
        let n = self.order();
        let mut coeffs = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Ok(Series { coeffs })
    }

    /// `self^k` by repeated multiplication.
    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Series::one(self.order());
        for _ in 0..k {
            acc = acc.mul(self).expect("equal orders by construction");
        }
        acc
    }

    /// Quotient q with q·other = self, by forward substitution. The divisor
    /// needs an invertible scalar at t^0.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.require_equal_order(other)?;
        let inv = other.coeffs[0]
            .invert_unit()
            .ok_or(Error::NonUnitConstantTerm)?;
        let n = self.order();
        let mut q: Vec<C> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut s = self.coeffs[k].clone();
            for (i, qi) in q.iter().enumerate() {
                if !qi.is_zero() && !other.coeffs[k - i].is_zero() {
                    s = s.sub(&qi.mul(&other.coeffs[k - i]));
                }
            }
            q.push(s.mul(&inv));
        }
        Ok(Series { coeffs: q })
    }

    /// Composition self ∘ inner by Horner evaluation in the truncated ring.
    /// The inner series must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.require_equal_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroInnerConstant);
        }
        let n = self.order();
        let mut acc = Series::constant(self.coeffs[n].clone(), n);
        for k in (0..n).rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] = acc.coeffs[0].add(&self.coeffs[k]);
        }
        Ok(acc)
    }

    /// Compositional inverse g with self ∘ g = g ∘ self = t, by Newton
    /// iteration with doubling precision. Requires zero constant term and an
    /// invertible linear coefficient.
    pub fn reversion(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ReversionConstantTerm);
        }
        if self.order() == 0 {
            return Err(Error::ReversionLinearTerm);
        }
        let lin_inv = self.coeffs[1]
            .invert_unit()
            .ok_or(Error::ReversionLinearTerm)?;
        let n = self.order();

        // g correct to order m; each step lifts m to min(2m, n).
        let mut g = Series::t(1).scale_coeff(&lin_inv);
        let mut m = 1usize;
        while m < n {
            let m2 = (2 * m).min(n);
            let s = self.truncate(m2);
            let g_lift = g.pad_to(m2);
            let ds = s.derivative().pad_to(m2);
            let residual = s.compose(&g_lift)?.sub(&Series::t(m2));
            let slope = ds.compose(&g_lift)?;
            g = g_lift.sub(&residual.div(&slope)?);
            m = m2;
        }

        let check = self.compose(&g)?;
        assert!(
            check == Series::t(n),
            "reversion fixed point not reached (internal error)"
        );
        Ok(g)
    }

    /// Formal derivative; known one order lower than the input.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Series::zero(0);
        }
        Series {
            coeffs: (1..self.coeffs.len())
                .map(|k| self.coeffs[k].scale(&Rational::from_integer(k as i64)))
                .collect(),
        }
    }

    fn pad_to(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, C::zero());
        Series { coeffs }
    }

    /// Exact division by t^j; the coefficients below t^j must vanish.
    /// The truncation order drops by j.
    pub fn shift_down(&self, j: usize) -> Result<Self> {
        if j > self.order() {
            return Err(Error::Domain(format!(
                "cannot divide an order-{} series by t^{j}",
                self.order()
            )));
        }
        for (k, c) in self.coeffs.iter().take(j).enumerate() {
            if !c.is_zero() {
                return Err(Error::NonzeroLowOrder(k, j));
            }
        }
        Ok(Series {
            coeffs: self.coeffs[j..].to_vec(),
        })
    }

    /// Multiplication by t^j; the truncation order grows by j.
    pub fn shift_up(&self, j: usize) -> Self {
        let mut coeffs = vec![C::zero(); j];
        coeffs.extend(self.coeffs.iter().cloned());
        Series { coeffs }
    }

    /// Substitutes t ↦ −t.
    pub fn neg_t(&self) -> Self {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { c.neg() } else { c.clone() })
                .collect(),
        }
    }
}

impl Series<LambdaPoly> {
    /// Evaluates every coefficient at a rational λ.
    pub fn eval_lambda(&self, lambda: &Rational) -> Series<Rational> {
        self.map(|c| c.eval(lambda))
    }

    /// Lifts into the x-polynomial coefficient ring.
    pub fn lift_x(&self) -> Series<XPoly> {
        self.map(|c| XPoly::constant(c.clone()))
    }
}

/// e_λ^x(t) = Σ (x)_{n,λ} t^n/n! at a rational x.
pub fn degenerate_exp_at(x: &Rational, order: usize) -> Series<LambdaPoly> {
    Series::from_fn(order, |n| {
        degenerate_falling_at(x, n).scale(&factorial(n).recip().expect("n! > 0"))
    })
}

/// e_λ^x(t) with x symbolic.
pub fn degenerate_exp_x(order: usize) -> Series<XPoly> {
    Series::from_fn(order, |n| {
        degenerate_falling(n, 0).scale_rational(&factorial(n).recip().expect("n! > 0"))
    })
}

/// log_λ(1+t) = Σ_{n≥1} ∏_{j=1}^{n−1}(λ−j) · t^n/n!, the compositional
/// inverse of e_λ(t) − 1 shifted by 1.
pub fn degenerate_log(order: usize) -> Series<LambdaPoly> {
    Series::from_fn(order, |n| {
        if n == 0 {
            LambdaPoly::zero()
        } else {
            one_factorial_inverse_lambda(n)
                .expect("n >= 1")
                .scale(&factorial(n).recip().expect("n! > 0"))
        }
    })
}

/// log(1+λt)/λ = Σ_{n≥1} (−1)^{n−1} λ^{n−1} t^n/n, a polynomial in λ.
pub fn scaled_log(order: usize) -> Series<LambdaPoly> {
    Series::from_fn(order, |n| {
        if n == 0 {
            LambdaPoly::zero()
        } else {
            let sign = if n % 2 == 1 { 1 } else { -1 };
            LambdaPoly::constant(Rational::new(sign, n as i64)).mul_lambda_pow(n - 1)
        }
    })
}

/// −log_λ(1−t) = Σ_{n≥1} (−1)^{n−1} ∏_{j=1}^{n−1}(λ−j) · t^n/n!.
pub fn neg_degenerate_log_neg_t(order: usize) -> Series<LambdaPoly> {
    degenerate_log(order).neg_t().neg()
}

/// (1−t)^{−r} = Σ binom(n+r−1, n) t^n.
pub fn one_minus_t_inv_pow(r: u32, order: usize) -> Series<LambdaPoly> {
    if r == 0 {
        return Series::one(order);
    }
    Series::from_fn(order, |n| {
        LambdaPoly::constant(binomial(n as u64 + r as u64 - 1, n as u64))
    })
}

/// (1+t)^{−r} = Σ (−1)^n binom(n+r−1, n) t^n.
pub fn one_plus_t_inv_pow(r: u32, order: usize) -> Series<LambdaPoly> {
    one_minus_t_inv_pow(r, order).neg_t()
}

/// (1+t)^x = Σ (x)_n t^n/n! with the ordinary falling factorial, x symbolic.
pub fn binomial_pow_x(order: usize) -> Series<XPoly> {
    Series::from_fn(order, |n| {
        ordinary_falling(n, 0).scale_rational(&factorial(n).recip().expect("n! > 0"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn qs(cs: &[(i64, i64)]) -> Series<LambdaPoly> {
        Series::from_coeffs(
            cs.iter()
                .map(|&(n, d)| LambdaPoly::constant(q(n, d)))
                .collect(),
        )
    }

    #[test]
    fn mul_difference_of_squares() {
        let a = qs(&[(1, 1), (1, 1), (0, 1)]);
        let b = qs(&[(1, 1), (-1, 1), (0, 1)]);
        assert_eq!(a.mul(&b).unwrap(), qs(&[(1, 1), (0, 1), (-1, 1)]));
    }

    #[test]
    fn mul_geometric_telescope() {
        let geo = qs(&[(1, 1), (1, 1), (1, 1), (1, 1), (1, 1)]);
        let one_minus_t = qs(&[(1, 1), (-1, 1), (0, 1), (0, 1), (0, 1)]);
        assert_eq!(geo.mul(&one_minus_t).unwrap(), Series::one(4));
    }

    #[test]
    fn mul_identity_element() {
        let a = qs(&[(1, 1), (2, 1), (1, 1)]);
        assert_eq!(a.mul(&Series::one(2)).unwrap(), a);
    }

    #[test]
    fn mul_order_mismatch_is_error() {
        let a = Series::<LambdaPoly>::one(2);
        let b = Series::<LambdaPoly>::one(3);
        assert_eq!(a.mul(&b), Err(Error::OrderMismatch(2, 3)));
    }

    #[test]
    fn div_rejects_zero_constant_divisor() {
        let a = Series::<LambdaPoly>::t(3);
        let b = Series::<LambdaPoly>::t(3);
        assert_eq!(a.div(&b), Err(Error::NonUnitConstantTerm));
    }

    #[test]
    fn div_geometric_series() {
        let one = Series::one(3);
        let b = qs(&[(1, 1), (-1, 1), (0, 1), (0, 1)]);
        assert_eq!(one.div(&b).unwrap(), qs(&[(1, 1), (1, 1), (1, 1), (1, 1)]));
    }

    #[test]
    fn div_by_shifted_degenerate_log() {
        // 1 / (log_λ(1+t)/t) = 1 − (λ−1)t/2 + … at order 1
        let b = degenerate_log(2).shift_down(1).unwrap();
        let got = Series::one(1).div(&b).unwrap();
        assert_eq!(got.coeff(0), &LambdaPoly::one());
        assert_eq!(got.coeff(1), &LambdaPoly::linear(q(1, 2), q(-1, 2)));
    }

    #[test]
    fn div_mul_round_trip() {
        let a = qs(&[(3, 2), (-1, 1), (5, 7), (0, 1)]);
        let b = qs(&[(2, 1), (1, 3), (-4, 1), (1, 1)]);
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod.div(&b).unwrap(), a);
    }

    #[test]
    fn compose_identity_inner() {
        let outer = qs(&[(1, 1), (2, 1), (3, 1)]);
        let t = Series::t(2);
        assert_eq!(outer.compose(&t).unwrap(), outer);
    }

    #[test]
    fn compose_rejects_nonzero_inner_constant() {
        let outer = Series::<LambdaPoly>::one(2);
        let inner = Series::<LambdaPoly>::one(2);
        assert_eq!(outer.compose(&inner), Err(Error::NonzeroInnerConstant));
    }

    #[test]
    fn compose_geometric_with_t_squared() {
        let geo = qs(&[(1, 1), (1, 1), (1, 1), (1, 1), (1, 1)]);
        let t2 = Series::t(4).pow(2);
        let got = geo.compose(&t2).unwrap();
        assert_eq!(got, qs(&[(1, 1), (0, 1), (1, 1), (0, 1), (1, 1)]));
    }

    #[test]
    fn exp_log_inverse_pair() {
        let n = 12;
        let exp = degenerate_exp_at(&Rational::one(), n);
        let log = degenerate_log(n);
        let composed = exp.compose(&log).unwrap();
        let mut expect = Series::one(n);
        expect = expect.add(&Series::t(n));
        assert_eq!(composed, expect);

        // swapped: log_λ(1 + (e_λ(t) − 1)) = t
        let e_minus_1 = exp.sub(&Series::one(n));
        assert_eq!(log.compose(&e_minus_1).unwrap(), Series::t(n));
    }

    #[test]
    fn exp_coefficients() {
        let e = degenerate_exp_at(&Rational::one(), 2);
        assert_eq!(e.coeff(0), &LambdaPoly::one());
        assert_eq!(e.coeff(1), &LambdaPoly::one());
        // (1)_{2,λ}/2! = (1 − λ)/2
        assert_eq!(e.coeff(2), &LambdaPoly::linear(q(1, 2), q(-1, 2)));
        let e2 = degenerate_exp_at(&q(2, 1), 1);
        assert_eq!(e2.coeff(1), &LambdaPoly::constant(q(2, 1)));
    }

    #[test]
    fn log_coefficients() {
        let l = degenerate_log(2);
        assert_eq!(l.coeff(0), &LambdaPoly::zero());
        assert_eq!(l.coeff(1), &LambdaPoly::one());
        assert_eq!(l.coeff(2), &LambdaPoly::linear(q(-1, 2), q(1, 2)));
        let s = scaled_log(2);
        assert_eq!(s.coeff(1), &LambdaPoly::one());
        assert_eq!(s.coeff(2), &LambdaPoly::linear(q(0, 1), q(-1, 2)));
    }

    #[test]
    fn geometric_pow_coefficients() {
        assert_eq!(one_minus_t_inv_pow(0, 3), Series::one(3));
        assert_eq!(
            one_minus_t_inv_pow(1, 3),
            qs(&[(1, 1), (1, 1), (1, 1), (1, 1)])
        );
        assert_eq!(one_minus_t_inv_pow(2, 2), qs(&[(1, 1), (2, 1), (3, 1)]));
        assert_eq!(one_plus_t_inv_pow(2, 2), qs(&[(1, 1), (-2, 1), (3, 1)]));
    }

    #[test]
    fn reversion_of_t_is_t() {
        let t = Series::<LambdaPoly>::t(6);
        assert_eq!(t.reversion().unwrap(), t);
    }

    #[test]
    fn reversion_matches_degenerate_log_closed_form() {
        let n = 10;
        let e_minus_1 = degenerate_exp_at(&Rational::one(), n).sub(&Series::one(n));
        let rev = e_minus_1.reversion().unwrap();
        assert_eq!(rev, degenerate_log(n));
    }

    #[test]
    fn reversion_of_rational_map() {
        // t/(1−t) reverts to t/(1+t) = t − t² + t³
        let s = qs(&[(0, 1), (1, 1), (1, 1), (1, 1)]);
        let rev = s.reversion().unwrap();
        assert_eq!(rev, qs(&[(0, 1), (1, 1), (-1, 1), (1, 1)]));
    }

    #[test]
    fn reversion_two_sided() {
        let n = 8;
        let s = degenerate_log(n);
        let g = s.reversion().unwrap();
        assert_eq!(s.compose(&g).unwrap(), Series::t(n));
        assert_eq!(g.compose(&s).unwrap(), Series::t(n));
    }

    #[test]
    fn reversion_preconditions() {
        assert_eq!(
            Series::<LambdaPoly>::one(3).reversion(),
            Err(Error::ReversionConstantTerm)
        );
        // zero linear coefficient
        let s = Series::<LambdaPoly>::t(3).pow(2);
        assert_eq!(s.reversion(), Err(Error::ReversionLinearTerm));
        // λ at t^1 is not a unit of `ℚ[λ]`
        let s = Series::from_coeffs(vec![
            LambdaPoly::zero(),
            LambdaPoly::lambda(),
            LambdaPoly::zero(),
        ]);
        assert_eq!(s.reversion(), Err(Error::ReversionLinearTerm));
    }

    #[test]
    fn shift_round_trip_and_errors() {
        let s = degenerate_log(5);
        let down = s.shift_down(1).unwrap();
        assert_eq!(down.order(), 4);
        assert_eq!(down.shift_up(1), s.truncate(5));
        assert_eq!(
            Series::<LambdaPoly>::one(2).shift_down(1),
            Err(Error::NonzeroLowOrder(0, 1))
        );
    }

    #[test]
    fn truncation_consistency() {
        let n = 10;
        let m = 6;
        let a = degenerate_exp_at(&q(3, 1), n);
        let b = degenerate_log(n);
        assert_eq!(a.truncate(m), degenerate_exp_at(&q(3, 1), m));
        assert_eq!(
            a.mul(&b).unwrap().truncate(m),
            a.truncate(m).mul(&b.truncate(m)).unwrap()
        );
        assert_eq!(
            a.compose(&b).unwrap().truncate(m),
            a.truncate(m).compose(&b.truncate(m)).unwrap()
        );
    }

    #[test]
    fn neg_t_flips_odd_coefficients() {
        let e = degenerate_exp_at(&Rational::one(), 3);
        let en = e.neg_t();
        assert_eq!(en.coeff(1), &(-&LambdaPoly::one()));
        assert_eq!(en.coeff(2), e.coeff(2));
    }

    #[test]
    fn eval_lambda_and_scalar_helpers() {
        let l = degenerate_log(3);
        let at_zero = l.eval_lambda(&Rational::zero());
        // log_λ(1+t) at λ = 0 is log(1+t): 0, 1, -1/2, 1/3
        assert_eq!(at_zero.coeffs()[2], q(-1, 2));
        assert_eq!(at_zero.coeffs()[3], q(1, 3));
        assert!(Series::<LambdaPoly>::zero(4).is_zero());
        assert!(!l.is_zero());
        let doubled = l.scale_coeff(&LambdaPoly::constant(q(2, 1)));
        assert_eq!(doubled.coeff(2), &LambdaPoly::linear(q(-1, 1), q(1, 1)));
    }
}
