//! Exact coefficient arithmetic: arbitrary-precision rationals and dense
//! univariate polynomials in the indeterminate `x`.
//!
//! Every structure constant in the crate is a [`Poly`]. Degrees stay small
//! (bounded by the number of middle components in a product), so the dense
//! coefficient vector is the right representation.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Builds the rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn rint(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n!` as an arbitrary-precision integer.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Formats a rational as `p` or `p/q`.
pub fn fmt_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p` or `p/q` into a rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::parse(0, format!("not a rational: {s:?}"));
    match s.split_once('/') {
        None => Ok(Rational::from_integer(
            s.parse::<BigInt>().map_err(|_| bad())?,
        )),
        Some((n, d)) => {
            let n = n.trim().parse::<BigInt>().map_err(|_| bad())?;
            let d = d.trim().parse::<BigInt>().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// A polynomial in `x` with rational coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`. The vector never ends in a zero,
/// so the zero polynomial is the empty vector and structural equality is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Poly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `x^e`.
    pub fn x_pow(e: usize) -> Self {
        let mut c = vec![Rational::zero(); e + 1];
        c[e] = Rational::one();
        Poly { coeffs: c }
    }

    /// A constant polynomial.
    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The constant integer polynomial `n`.
    pub fn int(n: i64) -> Self {
        Poly::constant(rint(n))
    }

    /// Builds a polynomial from coefficients in increasing degree, trimming
    /// trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Builds a polynomial from integer coefficients in increasing degree.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| rint(c)).collect())
    }

    /// Coefficients in increasing degree (no trailing zeros).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// The constant value if the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Exact evaluation at an integer by Horner's scheme.
    pub fn evaluate(&self, n: i64) -> Rational {
        self.evaluate_rational(&rint(n))
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate_rational(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    /// Polynomial division with remainder: `self = q·d + r`, `deg r < deg d`.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.coeffs.len() - 1;
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / &lead;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Divides by the leading coefficient (zero stays zero).
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let l = self.leading();
        self.scale(&(Rational::one() / l))
    }

    /// Exact quotient; errors if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Domain("inexact polynomial division".into()))
        }
    }

    /// Integer-coefficient numerator and positive common denominator, so that
    /// `self = num / den` with `num` primitive up to sign of content.
    pub fn integer_form(&self) -> (Vec<BigInt>, BigInt) {
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        (num, den)
    }

    /// Human-readable form such as `x^2 - x`, `(x^2 - x)/2`, `-1/3`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let (num, den) = self.integer_form();
        let mut terms = Vec::new();
        for (i, c) in num.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let mono = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            let body = if mono.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                mono
            } else {
                format!("{mag}{mono}")
            };
            terms.push((c.is_negative(), body));
        }
        let mut s = String::new();
        for (k, (neg, body)) in terms.iter().enumerate() {
            match (k, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            s.push_str(body);
        }
        if den.is_one() {
            s
        } else if terms.len() == 1 {
            format!("{s}/{den}")
        } else {
            format!("({s})/{den}")
        }
    }

    /// JSON encoding `{"num": [...], "den": [...]}` with matched lengths.
    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            num: self.coeffs.iter().map(|c| c.numer().to_string()).collect(),
            den: self.coeffs.iter().map(|c| c.denom().to_string()).collect(),
        }
    }

    /// Inverse of [`Poly::to_json`].
    pub fn from_json(j: &PolyJson) -> Result<Poly> {
        if j.num.len() != j.den.len() {
            return Err(Error::parse(0, "num and den arrays differ in length"));
        }
        let coeffs = j
            .num
            .iter()
            .zip(&j.den)
            .map(|(n, d)| parse_rational(&format!("{n}/{d}")))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }
}

/// Serialized form of a [`Poly`]: parallel numerator and denominator arrays,
/// indexed by degree, with decimal-string entries (arbitrary precision).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

/// `p·(p−1)···(p−m+1)`; the empty product `1` when `m = 0`.
pub fn falling_factorial(p: &Poly, m: usize) -> Poly {
    (0..m).fold(Poly::one(), |acc, i| &acc * &(p - &Poly::int(i as i64)))
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.to_text())
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n)
            .map(|i| match (self.coeffs.get(i), o.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::from_coeffs(c)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self + &(-o)
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

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::from_coeffs(c)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, o: Poly) -> Poly {
        &self + &o
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, o: Poly) -> Poly {
        &self - &o
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, o: Poly) -> Poly {
        &self * &o
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, o: &Poly) {
        if self.coeffs.len() < o.coeffs.len() {
            self.coeffs.resize(o.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&o.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, o: &Poly) {
        *self += &(-o);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn falling_factorial_examples() {
        let x = Poly::x();
        assert_eq!(falling_factorial(&x, 0), Poly::one());
        assert_eq!(falling_factorial(&x, 2), Poly::from_ints(&[0, -1, 1]));
        let xm2 = &x - &Poly::int(2);
        // (x-2)(x-3)(x-4) = x^3 - 9x^2 + 26x - 24
        assert_eq!(
            falling_factorial(&xm2, 3),
            Poly::from_ints(&[-24, 26, -9, 1])
        );
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(Poly::from_ints(&[0, -1, 1]).evaluate(3), rint(6));
        assert_eq!(Poly::zero().evaluate(17), rint(0));
        assert_eq!(Poly::from_ints(&[-24, 26, -9, 1]).evaluate(5), rint(6));
    }

    #[test]
    fn text_forms() {
        assert_eq!(Poly::from_ints(&[0, -1, 1]).to_text(), "x^2 - x");
        assert_eq!(
            Poly::from_ints(&[0, -1, 1]).scale(&rat(1, 2)).to_text(),
            "(x^2 - x)/2"
        );
        assert_eq!(Poly::constant(rat(-1, 3)).to_text(), "-1/3");
        assert_eq!(Poly::x().scale(&rat(1, 4)).to_text(), "x/4");
        assert_eq!(Poly::zero().to_text(), "0");
        assert_eq!(Poly::one().to_text(), "1");
    }

    #[test]
    fn gcd_and_division() {
        let a = Poly::from_ints(&[-1, 0, 1]); // x^2 - 1
        let b = Poly::from_ints(&[1, 1]); // x + 1
        assert_eq!(a.gcd(&b), b);
        assert_eq!(a.exact_div(&b).unwrap(), Poly::from_ints(&[-1, 1]));
        assert!(a.exact_div(&Poly::x()).is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = Poly::from_coeffs(vec![rat(1, 2), rint(0), rat(-7, 3)]);
        let back = Poly::from_json(&p.to_json()).unwrap();
        assert_eq!(p, back);
        assert_eq!(
            Poly::from_json(&Poly::zero().to_json()).unwrap(),
            Poly::zero()
        );
    }
}
