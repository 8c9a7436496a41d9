//! Dense univariate polynomials in `t` over exact rationals.
//!
//! Invariant: the coefficient vector never has a zero leading entry; the
//! zero polynomial is the empty vector.  Degree is the index of the leading
//! coefficient.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational coefficient (reduced fraction, positive denominator —
/// maintained by `num_rational` itself).
pub type Coeff = BigRational;

/// Parse an exact rational from `"p"` or `"p/q"`.
pub fn coeff_from_str(s: &str) -> Result<Coeff> {
    let s = s.trim();
    let mk_err = || Error::parse(0, format!("invalid rational literal {s:?}"));
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| mk_err())?;
        let d: BigInt = den.trim().parse().map_err(|_| mk_err())?;
        if d.is_zero() {
            return Err(Error::domain("zero denominator in rational literal"));
        }
        Ok(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().map_err(|_| mk_err())?;
        Ok(BigRational::from_integer(n))
    }
}

/// Render an exact rational as `"p"` or `"p/q"`.
pub fn coeff_to_string(x: &Coeff) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// A polynomial in `t` with `Coeff` coefficients, indexed by exponent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Coeff>,
}

impl Poly {
    /// Build from coefficients listed by ascending exponent; trims zeros.
    pub fn new(mut coeffs: Vec<Coeff>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: Coeff) -> Self {
        Poly::new(vec![c])
    }

    pub fn from_int(n: i64) -> Self {
        Poly::constant(BigRational::from_integer(n.into()))
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: Coeff, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Poly::monomial(BigRational::one(), 1)
    }

    /// `t - a`.
    pub fn t_minus(a: &Coeff) -> Self {
        Poly::new(vec![-a.clone(), BigRational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with `deg 0 = 0` convention avoided: callers that need the
    /// `deg(0) = -infinity` convention must handle `is_zero` themselves.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, k: usize) -> Coeff {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().map_or(false, |c| c.is_one())
    }

    /// Number of trailing zero coefficients = multiplicity of the root `t = 0`.
    pub fn trailing_zeros(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.coeffs.len())
    }

    pub fn eval(&self, x: &Coeff) -> Coeff {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from_integer(k.into()))
            .collect();
        Poly::new(coeffs)
    }

    pub fn mul_scalar(&self, s: &Coeff) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Divide every coefficient by the leading one.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            None => Poly::zero(),
            Some(lc) => {
                let inv = lc.recip();
                self.mul_scalar(&inv)
            }
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    pub fn div_rem(&self, div: &Poly) -> (Poly, Poly) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let dd = div.degree().unwrap();
        if self.degree().map_or(true, |d| d < dd) {
            return (Poly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let dn = rem.len() - 1;
        let lead_inv = div.leading_coeff().unwrap().recip();
        let mut quot = vec![BigRational::zero(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if !c.is_zero() {
                for j in 0..dd {
                    let delta = &c * &div.coeffs[j];
                    rem[k + j] = &rem[k + j] - delta;
                }
                rem[k + dd] = BigRational::zero();
            }
            quot[k] = c;
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, div: &Poly) -> Poly {
        let (q, r) = self.div_rem(div);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Multiplicity of the monic factor `q` in `self` (0 if coprime).
    pub fn multiplicity_of(&self, q: &Poly) -> u32 {
        assert!(!self.is_zero() && !q.is_constant());
        let mut m = 0;
        let mut cur = self.clone();
        loop {
            let (quo, rem) = cur.div_rem(q);
            if rem.is_zero() {
                m += 1;
                cur = quo;
            } else {
                return m;
            }
        }
    }

    /// Positive rational `r` such that `self / r` has coprime integer
    /// coefficients; sign is carried by the polynomial itself.
    pub fn rational_content(&self) -> Coeff {
        if self.is_zero() {
            return BigRational::one();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            num_gcd = num_integer::Integer::gcd(&num_gcd, c.numer());
            den_lcm = num_integer::Integer::lcm(&den_lcm, c.denom());
        }
        BigRational::new(num_gcd, den_lcm)
    }

    /// Integer coefficient vector of `self / rational_content()`.
    pub fn primitive_int_coeffs(&self) -> Vec<BigInt> {
        let content = self.rational_content();
        self.coeffs
            .iter()
            .map(|c| {
                let v = c / &content;
                debug_assert!(v.denom().is_one());
                v.numer().clone()
            })
            .collect()
    }

    /// Taylor shift: the polynomial `f(t + a)`.
    pub fn shift(&self, a: &Coeff) -> Poly {
        // Horner on f with argument (t + a).
        let mut acc = Poly::zero();
        let shift = Poly::new(vec![a.clone(), BigRational::one()]);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &shift) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Compose `self` with `g`: the polynomial `self(g(t))`.
    pub fn compose(&self, g: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Poly::constant(c.clone());
        }
        acc
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        Poly::new(out)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + a * b;
            }
        }
        Poly::new(out)
    }
}

impl Ord for Poly {
    /// Total order used for canonical sorting: degree first, then
    /// coefficients from the leading one down.
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| {
                for (a, b) in self.coeffs.iter().rev().zip(other.coeffs.iter().rev()) {
                    let ord = a.cmp(b);
                    if ord != Ordering::Equal {
                        return ord;
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Poly {
    /// Canonical form: terms by descending power, explicit `*` between a
    /// non-unit coefficient and `t`, no redundant `+ 0` terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign == "-" {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_part = coeff_to_string(&mag);
            if k == 0 {
                write!(f, "{coeff_part}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{coeff_part}*")?;
                }
                if k == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{k}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[1, 2, 1]); // (t+1)^2
        let b = p(&[1, 1]); // t+1
        assert_eq!(&b * &b, a);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, b);
        assert!(r.is_zero());
        assert_eq!(a.gcd(&b), b);
    }

    #[test]
    fn division_with_remainder() {
        let a = p(&[1, 0, 0, 1]); // t^3 + 1
        let b = p(&[2, 1]); // t + 2
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree_or_zero() < b.degree().unwrap());
    }

    #[test]
    fn multiplicity_counting() {
        let q = p(&[-2, 1]); // t - 2
        let f = &q.pow(3) * &p(&[1, 1]);
        assert_eq!(f.multiplicity_of(&q), 3);
        assert_eq!(f.multiplicity_of(&p(&[1, 1])), 1);
        assert_eq!(f.multiplicity_of(&p(&[5, 1])), 0);
    }

    #[test]
    fn taylor_shift_matches_eval() {
        let f = p(&[3, -1, 0, 2]);
        let a = BigRational::from_integer(4.into());
        let g = f.shift(&a);
        // g(x) = f(x + a)
        for x in [-2i64, 0, 1, 7] {
            let xr = BigRational::from_integer(x.into());
            assert_eq!(g.eval(&xr), f.eval(&(&xr + &a)));
        }
    }

    #[test]
    fn display_canonical() {
        let f = p(&[5, 0, -3, 1]);
        assert_eq!(f.to_string(), "t^3 - 3*t^2 + 5");
        assert_eq!(Poly::zero().to_string(), "0");
        let half = Poly::monomial(BigRational::new(5.into(), 2.into()), 2);
        assert_eq!(half.to_string(), "5/2*t^2");
    }

    #[test]
    fn content_extraction() {
        let f = Poly::new(vec![
            BigRational::new(2.into(), 3.into()),
            BigRational::new(4.into(), 9.into()),
        ]);
        let content = f.rational_content();
        assert_eq!(content, BigRational::new(2.into(), 9.into()));
        assert_eq!(
            f.primitive_int_coeffs(),
            vec![BigInt::from(3), BigInt::from(2)]
        );
    }
}
