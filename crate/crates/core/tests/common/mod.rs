//! Classical (λ-free) oracles, implemented independently of the library's
//! series engine and triangles: plain rational polynomials in one variable
//! and plain truncated rational series only.

use rstirling_core::rational::{binomial, factorial, Rational};

/// Product of a plain rational series, truncated at `order`.
fn series_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let order = a.len() - 1;
    let mut out = vec![Rational::zero(); order + 1];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            if i + j > order {
                break;
            }
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Quotient of plain rational series by forward substitution; the divisor
/// must have a nonzero constant term.
fn series_div(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let order = a.len() - 1;
    let inv = b[0].recip().expect("unit constant term");
    let mut q: Vec<Rational> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut s = a[k].clone();
        for (i, qi) in q.iter().enumerate() {
            s -= qi * &b[k - i];
        }
        q.push(s * &inv);
    }
    q
}

/// Classical Bernoulli numbers B_0..B_n from the generating function
/// t/(e^t − 1), computed as the inverse of Σ t^n/(n+1)!.
pub fn classical_bernoulli_numbers(n_max: usize) -> Vec<Rational> {
    let one = vec![Rational::one()]
        .into_iter()
        .chain((1..=n_max).map(|_| Rational::zero()))
        .collect::<Vec<_>>();
    let shifted_exp: Vec<Rational> = (0..=n_max)
        .map(|n| factorial(n + 1).recip().expect("factorial"))
        .collect();
    let egf = series_div(&one, &shifted_exp);
    (0..=n_max).map(|n| egf[n].clone() * factorial(n)).collect()
}

/// Classical Bernoulli polynomials as ascending coefficient lists in x,
/// via B_n(x) = Σ_k binom(n,k) B_k x^{n−k}.
pub fn classical_bernoulli_polynomials(n_max: usize) -> Vec<Vec<Rational>> {
    let numbers = classical_bernoulli_numbers(n_max);
    (0..=n_max)
        .map(|n| {
            let mut coeffs = vec![Rational::zero(); n + 1];
            for k in 0..=n {
                coeffs[n - k] = binomial(n as u64, k as u64) * numbers[k].clone();
            }
            coeffs
        })
        .collect()
}

/// Classical harmonic numbers H_0..H_n.
pub fn classical_harmonic(n_max: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero()];
    let mut acc = Rational::zero();
    for n in 1..=n_max {
        acc += Rational::new(1, n as i64);
        out.push(acc.clone());
    }
    out
}

/// Classical Stirling numbers of the second kind by brute-force basis
/// expansion: writes x^n in the falling-factorial basis using plain
/// rational polynomial arithmetic.
pub fn classical_stirling_second(n_max: usize) -> Vec<Vec<Rational>> {
    // falling[k] = x(x−1)⋯(x−k+1) as ascending coefficients
    let mut falling: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
    for k in 1..=n_max {
        let prev = &falling[k - 1];
        // multiply by (x − (k−1))
        let shift = Rational::from_integer(k as i64 - 1);
        let mut next = vec![Rational::zero(); prev.len() + 1];
        for (i, c) in prev.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * &shift;
        }
        falling.push(next);
    }

    (0..=n_max)
        .map(|n| {
            let mut remainder = vec![Rational::zero(); n + 1];
            remainder[n] = Rational::one();
            let mut row = vec![Rational::zero(); n + 1];
            for k in (0..=n).rev() {
                let c = remainder[k].clone();
                if !c.is_zero() {
                    for (i, f) in falling[k].iter().enumerate() {
                        remainder[i] -= f * &c;
                    }
                }
                row[k] = c;
            }
            assert!(remainder.iter().all(Rational::is_zero));
            row
        })
        .collect()
}

#[test]
fn oracle_spot_values() {
    // division self-check: q·b must reproduce a
    let a: Vec<Rational> = [3, -1, 4, -1, 5]
        .iter()
        .map(|&n| Rational::from_integer(n))
        .collect();
    let d: Vec<Rational> = [2, 7, -1, 8, 2]
        .iter()
        .map(|&n| Rational::from_integer(n))
        .collect();
    assert_eq!(series_mul(&series_div(&a, &d), &d), a);

    let b = classical_bernoulli_numbers(6);
    assert_eq!(b[0], Rational::one());
    assert_eq!(b[1], Rational::new(-1, 2));
    assert_eq!(b[2], Rational::new(1, 6));
    assert_eq!(b[3], Rational::zero());
    assert_eq!(b[4], Rational::new(-1, 30));
    assert_eq!(b[6], Rational::new(1, 42));

    let s = classical_stirling_second(5);
    assert_eq!(s[4][2], Rational::from_integer(7));
    assert_eq!(s[5][3], Rational::from_integer(25));
    assert_eq!(s[5][1], Rational::one());

    let h = classical_harmonic(4);
    assert_eq!(h[4], Rational::new(25, 12));
}
