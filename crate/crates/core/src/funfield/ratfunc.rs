//! Rational functions: elements of `K = Q(t)`.
//!
//! Canonical form: the denominator is monic and coprime to the numerator;
//! zero is `0/1`.  Equality of canonical forms agrees with
//! cross-multiplication.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::One;

use super::poly::{Coeff, Poly};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Build `num/den` in canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::domain("zero denominator"));
        }
        let mut rf = RatFunc { num, den };
        rf.normalize();
        Ok(rf)
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if !g.is_constant() {
            self.num = self.num.div_exact(&g);
            self.den = self.den.div_exact(&g);
        }
        let lc = self.den.leading_coeff().unwrap().clone();
        if !lc.is_one() {
            let inv = lc.recip();
            self.num = self.num.mul_scalar(&inv);
            self.den = self.den.mul_scalar(&inv);
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn from_coeff(c: Coeff) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        RatFunc::from_poly(Poly::from_int(n))
    }

    pub fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    pub fn t() -> Self {
        RatFunc::from_poly(Poly::t())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// As a polynomial, when the denominator is 1.
    pub fn as_poly(&self) -> Option<&Poly> {
        if self.is_polynomial() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    pub fn recip(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::domain("division by zero in K"));
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i32) -> Result<RatFunc> {
        if e >= 0 {
            RatFunc::new(self.num.pow(e as u32), self.den.pow(e as u32))
        } else {
            self.recip()?.pow(-e)
        }
    }

    /// Evaluate at a rational point where defined.
    pub fn eval(&self, x: &Coeff) -> Result<Coeff> {
        let d = self.den.eval(x);
        if num_traits::Zero::is_zero(&d) {
            return Err(Error::domain("pole at evaluation point"));
        }
        Ok(self.num.eval(x) / d)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFunc::new(num, den).expect("nonzero denominator")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFunc::new(num, den).expect("nonzero denominator")
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by zero in K");
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num).expect("nonzero denominator")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> Poly {
        Poly::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    #[test]
    fn canonical_reduction() {
        // (t^2 - 1) / (2t - 2)  ==  (1/2 t + 1/2) / 1
        let f = RatFunc::new(poly(&[-1, 0, 1]), poly(&[-2, 2])).unwrap();
        assert!(f.den().is_one());
        assert_eq!(
            f.num(),
            &Poly::new(vec![
                BigRational::new(1.into(), 2.into()),
                BigRational::new(1.into(), 2.into()),
            ])
        );
    }

    #[test]
    fn equality_matches_cross_multiplication() {
        let a = RatFunc::new(poly(&[0, 2]), poly(&[2, 2])).unwrap(); // 2t/(2t+2)
        let b = RatFunc::new(poly(&[0, 1]), poly(&[1, 1])).unwrap(); // t/(t+1)
        assert_eq!(a, b);
        assert_eq!(&a.num * &b.den, &b.num * &a.den);
    }

    #[test]
    fn field_operations() {
        let t = RatFunc::t();
        let one = RatFunc::one();
        let f = &one / &(&t - &one); // 1/(t-1)
        let g = &(&t - &one) * &f;
        assert_eq!(g, one);
        assert_eq!(&f + &(-&f), RatFunc::zero());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RatFunc::new(poly(&[1]), Poly::zero()).is_err());
    }
}
