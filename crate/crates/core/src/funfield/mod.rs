//! Exact arithmetic in `K = Q(t)`: places, valuations, absolute-value
//! exponents, and the product formula.
//!
//! A place is either a monic irreducible polynomial `q(t)` (a finite place,
//! of degree `deg q`) or the place at infinity (degree 1).  The absolute
//! value attached to a place is `|x|_p = c^(ord_p(x) * deg p)` for a fixed
//! `0 < c < 1`; all computation below stores and manipulates the exponent
//! `ord_p(x) * deg p` only, so results do not depend on `c`.

pub mod factor;
pub mod parse;
pub mod poly;
pub mod ratfunc;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use factor::{factor, is_irreducible, squarefree_decomposition};
pub use parse::{parse_place, parse_ratfunc};
pub use poly::{coeff_from_str, coeff_to_string, Coeff, Poly};
pub use ratfunc::RatFunc;

use crate::error::{Error, Result};

/// A place of `K = Q(t)` for the base geometry `Y = P^1`, `L = O(1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Place {
    /// Finite place: a monic irreducible polynomial in `t`.
    Finite(Poly),
    /// The place at infinity (`ord = deg den - deg num`), degree 1.
    Infinite,
}

impl Place {
    /// Finite place from a polynomial; it is normalized to monic form and
    /// must be irreducible over the rationals.
    pub fn finite(q: Poly) -> Result<Place> {
        if q.degree().map_or(true, |d| d == 0) {
            return Err(Error::domain("a finite place needs degree >= 1"));
        }
        let q = q.monic();
        if !factor::is_irreducible(&q) {
            return Err(Error::domain(format!("reducible place polynomial: {q}")));
        }
        Ok(Place::Finite(q))
    }

    /// Finite place `t - a`.
    pub fn linear(a: Coeff) -> Place {
        Place::Finite(Poly::t_minus(&a))
    }

    /// Finite place `t`.
    pub fn at_zero() -> Place {
        Place::Finite(Poly::t())
    }

    /// `deg_L(p)`: the polynomial degree, or 1 at infinity.
    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(q) => q.degree().expect("place polynomial nonzero"),
            Place::Infinite => 1,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Place::Infinite)
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(q) => write!(f, "{q}"),
            Place::Infinite => write!(f, "inf"),
        }
    }
}

impl Ord for Place {
    /// Finite places ordered by their polynomials; infinity sorts last.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Place::Finite(a), Place::Finite(b)) => a.cmp(b),
            (Place::Finite(_), Place::Infinite) => Ordering::Less,
            (Place::Infinite, Place::Finite(_)) => Ordering::Greater,
            (Place::Infinite, Place::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Place {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The constant `0 < c < 1` that turns exponents into absolute values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbsConfig {
    c: BigRational,
}

impl AbsConfig {
    pub fn new(c: BigRational) -> Result<Self> {
        if c <= BigRational::zero() || c >= BigRational::one() {
            return Err(Error::domain("the constant c must satisfy 0 < c < 1"));
        }
        Ok(AbsConfig { c })
    }

    pub fn c(&self) -> &BigRational {
        &self.c
    }

    /// `c^e` for an integer exponent `e` (exact rational).
    pub fn pow_int(&self, e: &BigInt) -> BigRational {
        let mag = e.magnitude().clone();
        let exp =
            u32::try_from(&mag).expect("exponent too large to render multiplicatively");
        let pos = BigRational::new(
            self.c.numer().pow(exp),
            self.c.denom().pow(exp),
        );
        if e.is_negative() {
            pos.recip()
        } else {
            pos
        }
    }
}

impl Default for AbsConfig {
    /// `c = 1/2`.
    fn default() -> Self {
        AbsConfig {
            c: BigRational::new(1.into(), 2.into()),
        }
    }
}

/// Exponent form of a magnitude: the value `c^exponent`, with the marker
/// `Infinity` for magnitude zero.  Multiplying magnitudes adds exponents;
/// since `0 < c < 1`, *larger* magnitudes have *smaller* exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LogMag {
    Finite(BigRational),
    /// Magnitude 0 (`c^(+infinity)`).
    Infinity,
}

impl LogMag {
    pub fn from_int(e: i64) -> LogMag {
        LogMag::Finite(BigRational::from_integer(e.into()))
    }

    pub fn zero() -> LogMag {
        LogMag::Finite(BigRational::zero())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, LogMag::Infinity)
    }

    pub fn exponent(&self) -> Option<&BigRational> {
        match self {
            LogMag::Finite(e) => Some(e),
            LogMag::Infinity => None,
        }
    }

    /// Exponent of a product of magnitudes.
    pub fn mul(&self, other: &LogMag) -> LogMag {
        match (self, other) {
            (LogMag::Finite(a), LogMag::Finite(b)) => LogMag::Finite(a + b),
            _ => LogMag::Infinity,
        }
    }

    /// Exponent ordering: compare as magnitudes (`Infinity` = magnitude 0 is
    /// the smallest magnitude, i.e. the largest exponent).
    pub fn cmp_exponent(&self, other: &LogMag) -> Ordering {
        match (self, other) {
            (LogMag::Finite(a), LogMag::Finite(b)) => a.cmp(b),
            (LogMag::Finite(_), LogMag::Infinity) => Ordering::Less,
            (LogMag::Infinity, LogMag::Finite(_)) => Ordering::Greater,
            (LogMag::Infinity, LogMag::Infinity) => Ordering::Equal,
        }
    }
}

impl fmt::Display for LogMag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LogMag::Finite(e) => write!(f, "{}", coeff_to_string(e)),
            LogMag::Infinity => write!(f, "inf"),
        }
    }
}

/// `ord_p(x)`: the valuation of `x` at the place `p`, or `None` for `x = 0`
/// (the valuation `+infinity`).
pub fn ord(p: &Place, x: &RatFunc) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    Some(match p {
        Place::Infinite => {
            x.den().degree().unwrap() as i64 - x.num().degree().unwrap() as i64
        }
        Place::Finite(q) => {
            // Numerator and denominator are coprime, so at most one of the
            // two multiplicities is nonzero.
            if q.degree() == Some(1) && q.coeff(0).is_zero() {
                // Fast path for the place t: count trailing zeros.
                x.num().trailing_zeros() as i64 - x.den().trailing_zeros() as i64
            } else {
                x.num().multiplicity_of(q) as i64 - x.den().multiplicity_of(q) as i64
            }
        }
    })
}

/// `ord_p` of a nonzero polynomial.
pub fn ord_poly(p: &Place, f: &Poly) -> i64 {
    debug_assert!(!f.is_zero());
    match p {
        Place::Infinite => -(f.degree().unwrap() as i64),
        Place::Finite(q) => {
            if q.degree() == Some(1) && q.coeff(0).is_zero() {
                f.trailing_zeros() as i64
            } else {
                f.multiplicity_of(q) as i64
            }
        }
    }
}

/// Exponent of `|x|_{p,K} = c^(ord_p(x) * deg p)`; `x = 0` maps to the
/// infinite-exponent marker.
pub fn abs_exponent(p: &Place, x: &RatFunc) -> LogMag {
    match ord(p, x) {
        None => LogMag::Infinity,
        Some(v) => LogMag::from_int(v * p.degree() as i64),
    }
}

/// The set of places where `ord_p(x) != 0`, sorted canonically.
///
/// Errors on `x = 0` (every place has infinite valuation).
pub fn support(x: &RatFunc) -> Result<Vec<Place>> {
    if x.is_zero() {
        return Err(Error::domain("support of 0 is not defined"));
    }
    let mut places = Vec::new();
    for (q, _) in factor::factor(x.num()) {
        places.push(Place::Finite(q));
    }
    for (q, _) in factor::factor(x.den()) {
        places.push(Place::Finite(q));
    }
    if x.num().degree() != x.den().degree() {
        places.push(Place::Infinite);
    }
    places.sort();
    places.dedup();
    Ok(places)
}

/// `sum_p ord_p(x) * deg p` over the support: always 0 (Artin–Whaples).
pub fn product_formula_sum(x: &RatFunc) -> Result<i64> {
    let places = support(x)?;
    let mut sum = 0i64;
    for p in &places {
        let v = ord(p, x).expect("x nonzero");
        sum += v * p.degree() as i64;
    }
    Ok(sum)
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

    fn rf(num: &[i64], den: &[i64]) -> RatFunc {
        RatFunc::new(poly(num), poly(den)).unwrap()
    }

    #[test]
    fn ord_reads_multiplicities() {
        // ord(t, t^2/(t+1)) = 2
        let x = rf(&[0, 0, 1], &[1, 1]);
        assert_eq!(ord(&Place::at_zero(), &x), Some(2));
        // ord(inf, (t^2+1)/t) = 1 - 2 = -1
        let y = rf(&[1, 0, 1], &[0, 1]);
        assert_eq!(ord(&Place::Infinite, &y), Some(-1));
        // nonzero constants are units everywhere
        let c = rf(&[5], &[1]);
        let p = Place::linear(BigRational::one());
        assert_eq!(ord(&p, &c), Some(0));
        // x = 0 has infinite valuation
        assert_eq!(ord(&p, &RatFunc::zero()), None);
    }

    #[test]
    fn ord_is_a_valuation_on_examples() {
        let p = Place::at_zero();
        let x = rf(&[0, 1], &[1, 1]); // t/(t+1), ord 1
        let y = rf(&[0, 0, 3], &[1]); // 3t^2, ord 2
        let prod = &x * &y;
        assert_eq!(ord(&p, &prod), Some(3));
        let sum = &x + &y;
        let vx = ord(&p, &x).unwrap();
        let vy = ord(&p, &y).unwrap();
        assert!(ord(&p, &sum).unwrap() >= vx.min(vy));
    }

    #[test]
    fn abs_exponent_scales_by_degree() {
        // place of t^2+2 (irreducible), x = t^2+2: exponent = 1 * 2
        let q = poly(&[2, 0, 1]);
        let p = Place::finite(q.clone()).unwrap();
        let x = RatFunc::from_poly(q);
        assert_eq!(abs_exponent(&p, &x), LogMag::from_int(2));
        assert_eq!(abs_exponent(&Place::at_zero(), &rf(&[0, 0, 0, 1], &[1])),
            LogMag::from_int(3));
        assert_eq!(abs_exponent(&Place::Infinite, &RatFunc::zero()), LogMag::Infinity);
    }

    #[test]
    fn support_and_product_formula() {
        // (t-2)^3/(t+1): support {t-2, t+1, inf}, sum 3 - 1 - 2 = 0
        let num = poly(&[-2, 1]).pow(3);
        let x = RatFunc::new(num, poly(&[1, 1])).unwrap();
        let s = support(&x).unwrap();
        assert_eq!(
            s,
            vec![
                Place::Finite(poly(&[-2, 1])),
                Place::Finite(poly(&[1, 1])),
                Place::Infinite
            ]
        );
        assert_eq!(product_formula_sum(&x).unwrap(), 0);

        // units have empty support
        assert!(support(&rf(&[7], &[1])).unwrap().is_empty());

        // t^2+2: support {t^2+2, inf}, sum 1*2 - 2 = 0
        let y = rf(&[2, 0, 1], &[1]);
        let sy = support(&y).unwrap();
        assert_eq!(sy.len(), 2);
        assert_eq!(product_formula_sum(&y).unwrap(), 0);

        assert!(product_formula_sum(&RatFunc::zero()).is_err());
    }

    #[test]
    fn abs_exponent_multiplicative() {
        let p = Place::finite(poly(&[2, 0, 1])).unwrap();
        let x = rf(&[2, 0, 1], &[0, 1]);
        let y = rf(&[4, 0, 4, 0, 1], &[3]); // contains (t^2+2)^2
        let expect = match (abs_exponent(&p, &x), abs_exponent(&p, &y)) {
            (LogMag::Finite(a), LogMag::Finite(b)) => LogMag::Finite(a + b),
            _ => unreachable!(),
        };
        assert_eq!(abs_exponent(&p, &(&x * &y)), expect);
    }

    #[test]
    fn place_construction_rules() {
        assert!(Place::finite(poly(&[-1, 0, 1])).is_err()); // t^2-1 reducible
        assert!(Place::finite(poly(&[3])).is_err()); // constant
        let p = Place::finite(poly(&[2, 0, 2])).unwrap(); // normalized monic
        assert_eq!(p, Place::Finite(poly(&[1, 0, 1])));
        assert_eq!(p.degree(), 2);
        assert_eq!(Place::Infinite.degree(), 1);
    }
}
