//! Expression grammar for elements of `K = Q(t)` and place literals.
//!
//! Grammar (UTF-8 text): integer and rational literals, the variable `t`,
//! operators `+ - * / ^` (with nonnegative integer exponents), unary minus,
//! and parentheses.  A place literal is a polynomial expression or the
//! token `inf`.  Canonical printing (the `Display` impls) round-trips
//! through this parser.
//!
//! The parser also accepts an auxiliary variable `xi` when asked to — this
//! is used for the defining polynomials of algebraic targets; plain
//! `parse_ratfunc` rejects `xi`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::Place;
use crate::error::{Error, Result};

/// Parse an element of `K`.
pub fn parse_ratfunc(text: &str) -> Result<RatFunc> {
    let v = parse_expr(text, false)?;
    v.into_ratfunc(0)
}

/// Parse a place literal: a polynomial expression (normalized to monic,
/// must be irreducible) or `inf`.
pub fn parse_place(text: &str) -> Result<Place> {
    if text.trim() == "inf" {
        return Ok(Place::Infinite);
    }
    let x = parse_ratfunc(text)?;
    let poly = x
        .as_poly()
        .ok_or_else(|| Error::domain("a place literal must be a polynomial"))?;
    Place::finite(poly.clone())
}

/// Parse a polynomial in `t` and `xi` (used by `root(...)` target
/// literals): returned as coefficients of powers of `xi`.
pub fn parse_xi_poly(text: &str) -> Result<Vec<RatFunc>> {
    let v = parse_expr(text, true)?;
    match v {
        Value::XiPoly(coeffs) => Ok(coeffs),
    }
}

fn parse_expr(text: &str, allow_xi: bool) -> Result<Value> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        allow_xi,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(Error::parse(p.pos, "unexpected trailing input"));
    }
    Ok(v)
}

/// Parse result: a polynomial in `xi` with coefficients in `K`
/// (plain expressions are the degree-0 case).
#[derive(Debug, Clone)]
enum Value {
    XiPoly(Vec<RatFunc>),
}

impl Value {
    fn constant(c: RatFunc) -> Value {
        Value::XiPoly(vec![c])
    }

    fn xi() -> Value {
        Value::XiPoly(vec![RatFunc::zero(), RatFunc::one()])
    }

    fn coeffs(&self) -> &[RatFunc] {
        match self {
            Value::XiPoly(c) => c,
        }
    }

    fn trim(mut coeffs: Vec<RatFunc>) -> Value {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(RatFunc::zero());
        }
        Value::XiPoly(coeffs)
    }

    fn into_ratfunc(self, pos: usize) -> Result<RatFunc> {
        let c = self.coeffs();
        if c.len() > 1 {
            return Err(Error::parse(pos, "xi is not allowed in this context"));
        }
        Ok(c[0].clone())
    }

    fn add(&self, rhs: &Value) -> Value {
        let (a, b) = (self.coeffs(), rhs.coeffs());
        let n = a.len().max(b.len());
        let zero = RatFunc::zero();
        let coeffs = (0..n)
            .map(|k| a.get(k).unwrap_or(&zero) + b.get(k).unwrap_or(&zero))
            .collect();
        Value::trim(coeffs)
    }

    fn sub(&self, rhs: &Value) -> Value {
        let (a, b) = (self.coeffs(), rhs.coeffs());
        let n = a.len().max(b.len());
        let zero = RatFunc::zero();
        let coeffs = (0..n)
            .map(|k| a.get(k).unwrap_or(&zero) - b.get(k).unwrap_or(&zero))
            .collect();
        Value::trim(coeffs)
    }

    fn neg(&self) -> Value {
        Value::trim(self.coeffs().iter().map(|c| -c).collect())
    }

    fn mul(&self, rhs: &Value) -> Value {
        let (a, b) = (self.coeffs(), rhs.coeffs());
        let mut coeffs = vec![RatFunc::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(x * y);
            }
        }
        Value::trim(coeffs)
    }

    fn div(&self, rhs: &Value, pos: usize) -> Result<Value> {
        let d = rhs.coeffs();
        if d.len() > 1 {
            return Err(Error::parse(pos, "cannot divide by an expression in xi"));
        }
        if d[0].is_zero() {
            return Err(Error::parse(pos, "division by zero"));
        }
        let inv = d[0].recip().expect("nonzero");
        Ok(Value::trim(
            self.coeffs().iter().map(|c| c * &inv).collect(),
        ))
    }

    fn pow(&self, e: u32) -> Value {
        let mut acc = Value::constant(RatFunc::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    allow_xi: bool,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Value> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = acc.add(&rhs);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = acc.sub(&rhs);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Value> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = acc.mul(&rhs);
                }
                Some(b'/') => {
                    let op_pos = self.pos;
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = acc.div(&rhs, op_pos)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Value> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            let v = self.unary()?;
            Ok(v.neg())
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Value> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let exp_pos = self.pos;
            let e = self.integer()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| Error::parse(exp_pos, "exponent must be a nonnegative integer"))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Value> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(Error::parse(self.pos, "expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Value::constant(RatFunc::from_coeff(
                    BigRational::from_integer(n),
                )))
            }
            Some(b'x') if self.src[self.pos..].starts_with(b"xi") => {
                if !self.allow_xi {
                    return Err(Error::parse(self.pos, "xi is not allowed here"));
                }
                self.pos += 2;
                Ok(Value::xi())
            }
            Some(b't') => {
                self.pos += 1;
                Ok(Value::constant(RatFunc::from_poly(Poly::t())))
            }
            Some(c) => Err(Error::parse(
                self.pos,
                format!("unexpected character {:?}", c as char),
            )),
            None => Err(Error::parse(self.pos, "unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::parse(start, "expected an integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn poly(coeffs: &[i64]) -> Poly {
        Poly::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    #[test]
    fn parses_the_spec_examples() {
        let x = parse_ratfunc("(t-2)^3/(t+1)").unwrap();
        assert_eq!(x.num(), &poly(&[-2, 1]).pow(3));
        assert_eq!(x.den(), &poly(&[1, 1]));

        assert_eq!(parse_place("inf").unwrap(), Place::Infinite);

        let p = parse_place("t^2+2").unwrap();
        assert_eq!(p.degree(), 2);
    }

    #[test]
    fn rational_literals_and_precedence() {
        let x = parse_ratfunc("1/2*t^2 - t + 3/4").unwrap();
        assert!(x.is_polynomial());
        assert_eq!(x.num().coeff(2), BigRational::new(1.into(), 2.into()));
        assert_eq!(x.num().coeff(1), BigRational::from_integer((-1).into()));
        assert_eq!(x.num().coeff(0), BigRational::new(3.into(), 4.into()));

        // unary minus binds below ^
        let y = parse_ratfunc("-t^2").unwrap();
        assert_eq!(y.num(), &-&poly(&[0, 0, 1]));
    }

    #[test]
    fn error_positions() {
        match parse_ratfunc("t + ") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_ratfunc("t ^ -2") {
            Err(Error::Parse { .. }) => {}
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_ratfunc("xi + t").is_err());
    }

    #[test]
    fn place_rules() {
        assert!(parse_place("t^2-1").is_err()); // reducible
        assert!(parse_place("1/(t+1)").is_err()); // not a polynomial
        // normalization to monic is fine
        let p = parse_place("2*t+4").unwrap();
        assert_eq!(p, Place::Finite(poly(&[2, 1])));
    }

    #[test]
    fn print_parse_roundtrip() {
        let samples = [
            "t^3 - 3*t^2 + 5",
            "(t^2 + 1)/(t + 1)",
            "5/2*t^2",
            "0",
            "(t - 2)/(t^3 + t)",
        ];
        for s in samples {
            let v = parse_ratfunc(s).unwrap();
            let printed = v.to_string();
            let reparsed = parse_ratfunc(&printed).unwrap();
            assert_eq!(v, reparsed, "roundtrip failed for {s}");
        }
    }

    #[test]
    fn xi_polynomials() {
        let coeffs = parse_xi_poly("xi^2 - t*xi - 1").unwrap();
        assert_eq!(coeffs.len(), 3);
        assert_eq!(coeffs[0], RatFunc::from_int(-1));
        assert_eq!(coeffs[1], -&RatFunc::t());
        assert!(coeffs[2].num().is_one());
    }
}
