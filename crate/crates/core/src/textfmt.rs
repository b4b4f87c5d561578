//! Canonical polynomial strings and their parser.
//!
//! λ-polynomials print in ascending λ-powers with the variable letter `L`
//! and exact `a/b` fractions, e.g. `1 - 3L + 2L^2`. Polynomials in x print
//! in descending x-powers; λ-coefficients with more than one term are
//! parenthesized, e.g. `x^2 + (3 - L)x + 1/2`. The parser accepts the
//! canonical form plus harmless variations (optional `*`, extra spaces), so
//! `parse(print(p)) == p` holds structurally for every value.

use crate::error::{Error, Result};
use crate::lambda_poly::LambdaPoly;
use crate::rational::Rational;
use crate::xpoly::XPoly;

pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// One printed term: its sign and the body without the sign.
fn lambda_term(mag: &Rational, pow: usize) -> String {
    match pow {
        0 => format_rational(mag),
        _ => {
            let var = if pow == 1 {
                "L".to_string()
            } else {
                format!("L^{pow}")
            };
            if mag.is_one() {
                var
            } else {
                format!("{}{}", format_rational(mag), var)
            }
        }
    }
}

fn join_terms(terms: Vec<(bool, String)>) -> String {
    let mut out = String::new();
    for (i, (neg, body)) in terms.into_iter().enumerate() {
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&body);
    }
    out
}

pub fn format_lambda_poly(p: &LambdaPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms = Vec::new();
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        terms.push((c.is_negative(), lambda_term(&c.abs(), i)));
    }
    join_terms(terms)
}

/// The single (sign, body) pair of a one-term λ-polynomial, if it is one.
fn single_lambda_term(p: &LambdaPoly) -> Option<(bool, Rational, usize)> {
    let mut found = None;
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if found.is_some() {
            return None;
        }
        found = Some((c.is_negative(), c.abs(), i));
    }
    found
}

pub fn format_xpoly(p: &XPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms = Vec::new();
    for m in (0..p.coeffs().len()).rev() {
        let c = &p.coeffs()[m];
        if c.is_zero() {
            continue;
        }
        let xpart = match m {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{m}"),
        };
        match single_lambda_term(c) {
            Some((neg, mag, lpow)) => {
                let body = if m > 0 && mag.is_one() && lpow == 0 {
                    xpart
                } else {
                    format!("{}{}", lambda_term(&mag, lpow), xpart)
                };
                terms.push((neg, body));
            }
            None => {
                terms.push((false, format!("({}){}", format_lambda_poly(c), xpart)));
            }
        }
    }
    join_terms(terms)
}

pub fn parse_lambda_poly(s: &str) -> Result<LambdaPoly> {
    let p = parse_xpoly_impl(s, false)?;
    p.as_constant()
        .ok_or_else(|| Error::Parse(format!("unexpected x in λ-polynomial: {s:?}")))
}

pub fn parse_xpoly(s: &str) -> Result<XPoly> {
    parse_xpoly_impl(s, true)
}

fn parse_xpoly_impl(s: &str, allow_x: bool) -> Result<XPoly> {
    let mut parser = Parser {
        bytes: s.as_bytes(),
        pos: 0,
        src: s,
    };
    let poly = parser.poly(allow_x)?;
    parser.skip_ws();
    if parser.pos != parser.bytes.len() {
        return Err(parser.fail("trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn fail(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {} in {:?}", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos) == Some(&b' ') {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn poly(&mut self, allow_x: bool) -> Result<XPoly> {
        let mut acc = XPoly::zero();
        let mut first = true;
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(b')') if !first => break,
                None => return Err(self.fail("empty polynomial")),
                _ => {}
            }
            let neg = if first {
                if self.eat(b'-') {
                    true
                } else {
                    self.eat(b'+');
                    false
                }
            } else if self.eat(b'-') {
                true
            } else if self.eat(b'+') {
                false
            } else {
                return Err(self.fail("expected '+' or '-'"));
            };
            let term = self.term(allow_x)?;
            acc = if neg { &acc - &term } else { &acc + &term };
            first = false;
        }
        Ok(acc)
    }

    fn term(&mut self, allow_x: bool) -> Result<XPoly> {
        self.skip_ws();
        let mut coeff = LambdaPoly::one();
        let mut seen = false;

        if self.eat(b'(') {
            let inner = self.poly(false)?;
            self.skip_ws();
            if !self.eat(b')') {
                return Err(self.fail("expected ')'"));
            }
            coeff = inner.as_constant().expect("paren group parsed without x");
            seen = true;
        } else if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            coeff = LambdaPoly::constant(self.number()?);
            seen = true;
        }

        self.skip_ws();
        self.eat(b'*');
        self.skip_ws();
        if self.eat(b'L') {
            let pow = self.exponent()?;
            coeff = coeff.mul_lambda_pow(pow);
            seen = true;
            self.skip_ws();
            self.eat(b'*');
            self.skip_ws();
        }

        let mut xpow = 0;
        if self.peek() == Some(b'x') {
            if !allow_x {
                return Err(self.fail("variable x not allowed here"));
            }
            self.pos += 1;
            xpow = self.exponent()?;
            seen = true;
        }

        if !seen {
            return Err(self.fail("expected a term"));
        }
        Ok(XPoly::monomial(coeff, xpow))
    }

    /// Optional `^digits` suffix; a bare variable has power 1.
    fn exponent(&mut self) -> Result<usize> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.fail("expected exponent digits"));
        }
        self.src[start..self.pos]
            .parse::<usize>()
            .map_err(|_| self.fail("exponent overflow"))
    }

    fn number(&mut self) -> Result<Rational> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.eat(b'/') {
            let dstart = self.pos;
            while self.peek().is_some_and(|b| b.is_ascii_digit()) {
                self.pos += 1;
            }
            if self.pos == dstart {
                return Err(self.fail("expected denominator digits"));
            }
        }
        self.src[start..self.pos]
            .parse::<Rational>()
            .map_err(|_| self.fail("invalid number"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn lp(cs: &[(i64, i64)]) -> LambdaPoly {
        LambdaPoly::from_coeffs(cs.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn lambda_poly_formatting() {
        assert_eq!(format_lambda_poly(&LambdaPoly::zero()), "0");
        assert_eq!(
            format_lambda_poly(&lp(&[(1, 1), (-3, 1), (2, 1)])),
            "1 - 3L + 2L^2"
        );
        assert_eq!(format_lambda_poly(&lp(&[(-1, 2), (1, 2)])), "-1/2 + 1/2L");
        assert_eq!(format_lambda_poly(&lp(&[(0, 1), (1, 1)])), "L");
        assert_eq!(format_lambda_poly(&lp(&[(0, 1), (-1, 1)])), "-L");
    }

    #[test]
    fn xpoly_formatting() {
        // x² + (3 - L)x + 1/2
        let p = XPoly::from_coeffs(vec![
            lp(&[(1, 2)]),
            lp(&[(3, 1), (-1, 1)]),
            LambdaPoly::one(),
        ]);
        assert_eq!(format_xpoly(&p), "x^2 + (3 - L)x + 1/2");
        // x - 1/2
        let p = XPoly::from_coeffs(vec![lp(&[(-1, 2)]), LambdaPoly::one()]);
        assert_eq!(format_xpoly(&p), "x - 1/2");
        // -3Lx^2 single-term coefficient stays unparenthesized
        let p = XPoly::monomial(lp(&[(0, 1), (-3, 1)]), 2);
        assert_eq!(format_xpoly(&p), "-3Lx^2");
        assert_eq!(format_xpoly(&XPoly::zero()), "0");
    }

    #[test]
    fn parse_round_trip_lambda() {
        for p in [
            LambdaPoly::zero(),
            LambdaPoly::one(),
            lp(&[(1, 1), (-3, 1), (2, 1)]),
            lp(&[(-1, 2), (0, 1), (5, 3)]),
            lp(&[(0, 1), (-1, 1)]),
        ] {
            let s = format_lambda_poly(&p);
            assert_eq!(parse_lambda_poly(&s).unwrap(), p, "round-trip of {s:?}");
        }
    }

    #[test]
    fn parse_round_trip_xpoly() {
        let cases = vec![
            XPoly::zero(),
            XPoly::one(),
            XPoly::x(),
            XPoly::from_coeffs(vec![lp(&[(-1, 2)]), LambdaPoly::one()]),
            XPoly::from_coeffs(vec![
                lp(&[(1, 1), (-1, 1)]),
                lp(&[(3, 1), (-1, 1)]),
                LambdaPoly::one(),
            ]),
            XPoly::monomial(lp(&[(0, 1), (0, 1), (7, 5)]), 3),
        ];
        for p in cases {
            let s = format_xpoly(&p);
            assert_eq!(parse_xpoly(&s).unwrap(), p, "round-trip of {s:?}");
        }
    }

    #[test]
    fn parser_accepts_compact_and_starred_forms() {
        assert_eq!(parse_lambda_poly("1-L").unwrap(), lp(&[(1, 1), (-1, 1)]));
        assert_eq!(
            parse_lambda_poly("1 - 3*L").unwrap(),
            lp(&[(1, 1), (-3, 1)])
        );
        assert_eq!(
            parse_xpoly("2*L*x^2").unwrap(),
            XPoly::monomial(lp(&[(0, 1), (2, 1)]), 2)
        );
        assert_eq!(parse_lambda_poly("1/2L").unwrap(), lp(&[(0, 1), (1, 2)]));
    }

    #[test]
    fn parser_rejects_garbage() {
        assert!(parse_lambda_poly("").is_err());
        assert!(parse_lambda_poly("1 +").is_err());
        assert!(parse_lambda_poly("x").is_err());
        assert!(parse_xpoly("x^").is_err());
        assert!(parse_xpoly("(1").is_err());
        assert!(parse_lambda_poly("1 & L").is_err());
    }
}
