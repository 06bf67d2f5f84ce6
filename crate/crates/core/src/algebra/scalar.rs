//! Exact Gaussian rationals `a + b·i` with `a, b ∈ ℚ`.
//!
//! Every coefficient in the crate lives in ℚ(i). Both parts are
//! [`BigRational`]s, which are kept in lowest terms with a positive
//! denominator by `num-rational`, so structural equality is value equality.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ParseError;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_real(re: BigRational) -> Self {
        Self { re, im: BigRational::zero() }
    }

    pub fn from_int<T: Into<BigInt>>(n: T) -> Self {
        Self::from_real(BigRational::from_integer(n.into()))
    }

    /// `num / den` as a real scalar. Panics when `den == 0`.
    pub fn from_frac<T: Into<BigInt>, U: Into<BigInt>>(num: T, den: U) -> Self {
        Self::from_real(BigRational::new(num.into(), den.into()))
    }

    pub fn i() -> Self {
        Self { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `re² + im²`.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn checked_inv(&self) -> Option<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return None;
        }
        Some(Self { re: &self.re / &n, im: -(&self.im / &n) })
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        self.checked_inv().expect("inverse of zero Gaussian rational")
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc *= &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Real part as an exact integer, if the value is a real integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.is_real() && self.re.is_integer() {
            Some(self.re.to_integer())
        } else {
            None
        }
    }

    /// Strictly positive real value.
    pub fn is_positive_real(&self) -> bool {
        self.is_real() && self.re.is_positive()
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self { re: BigRational::zero(), im: BigRational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::from_real(BigRational::one())
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigInt> for GaussianRational {
    fn from(n: BigInt) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(q: BigRational) -> Self {
        Self::from_real(q)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.is_real() && rhs.is_real() {
            return GaussianRational::from_real(&self.re * &rhs.re);
        }
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        if rhs.is_real() {
            assert!(!rhs.re.is_zero(), "division by zero Gaussian rational");
            return GaussianRational { re: &self.re / &rhs.re, im: &self.im / &rhs.re };
        }
        self * &rhs.inv()
    }
}

macro_rules! forward_owned_binop {
    ($Op:ident, $op:ident) => {
        impl $Op for GaussianRational {
            type Output = GaussianRational;
            fn $op(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$op(&rhs)
            }
        }
        impl<'a> $Op<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $op(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$op(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl<'a> AddAssign<&'a GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl AddAssign for GaussianRational {
    fn add_assign(&mut self, rhs: GaussianRational) {
        *self += &rhs;
    }
}

impl<'a> SubAssign<&'a GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl<'a> MulAssign<&'a GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

impl<'a> Neg for &'a GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl Sum for GaussianRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl Product for GaussianRational {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| acc * x)
    }
}

fn fmt_rational(q: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

/// Prints `p/q`, `p/q+r/si`, `p/q-r/si`, or `r/si` when the real part is zero.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return fmt_rational(&self.re, f);
        }
        if !self.re.is_zero() {
            fmt_rational(&self.re, f)?;
            if self.im.is_positive() {
                f.write_str("+")?;
            }
        }
        fmt_rational(&self.im, f)?;
        f.write_str("i")
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses a signed rational `[+-]p[/q]`.
pub(crate) fn parse_rational(s: &str) -> Result<BigRational, ParseError> {
    let s = s.trim();
    let bad = || ParseError::new(0, format!("invalid rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if !den.is_positive() {
        return Err(ParseError::new(0, format!("denominator must be a positive integer in `{s}`")));
    }
    Ok(BigRational::new(num, den))
}

/// Accepts everything [`Display`](fmt::Display) prints: `p`, `p/q`,
/// `p/q+r/si`, `p/q-r/si`, `r/si`, and also `a+bi` with `b` omitted as `i`.
impl FromStr for GaussianRational {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(ParseError::new(0, "empty scalar"));
        }
        let Some(body) = t.strip_suffix('i') else {
            return Ok(Self::from_real(parse_rational(&t)?));
        };
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        let (re, im) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("0", body),
        };
        let im = match im {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other)?,
        };
        Ok(Self::new(parse_rational(re)?, im))
    }
}

impl serde::Serialize for GaussianRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for GaussianRational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> GaussianRational {
        GaussianRational::from_frac(n, d)
    }

    #[test]
    fn normalizes_parts() {
        let x = q(6, -4);
        assert_eq!(x, q(-3, 2));
        assert_eq!(x.re().denom(), &BigInt::from(2));
    }

    #[test]
    fn field_ops() {
        let z = GaussianRational::new(BigRational::from_integer(1.into()), BigRational::from_integer(2.into()));
        let w = z.inv();
        assert_eq!(&z * &w, GaussianRational::one());
        assert_eq!(GaussianRational::i().pow(2), -GaussianRational::one());
        assert_eq!(GaussianRational::i().pow(4), GaussianRational::one());
        assert_eq!(&q(1, 2) / &q(1, 4), q(2, 1));
        assert!(GaussianRational::zero().checked_inv().is_none());
    }

    #[test]
    fn display_and_parse() {
        let cases = [
            (q(3, 1), "3"),
            (q(-3, 4), "-3/4"),
            (GaussianRational::new(BigRational::new(1.into(), 2.into()), BigRational::new((-3).into(), 5.into())), "1/2-3/5i"),
            (GaussianRational::new(BigRational::zero(), BigRational::one()), "1i"),
            (GaussianRational::new(BigRational::from_integer(2.into()), BigRational::from_integer(7.into())), "2+7i"),
        ];
        for (v, s) in cases {
            assert_eq!(v.to_string(), s);
            assert_eq!(s.parse::<GaussianRational>().unwrap(), v);
        }
        assert_eq!("-i".parse::<GaussianRational>().unwrap(), -GaussianRational::i());
        assert_eq!("1/2 + i".parse::<GaussianRational>().unwrap(), &q(1, 2) + &GaussianRational::i());
        assert!("1/0".parse::<GaussianRational>().is_err());
        assert!("1/-2".parse::<GaussianRational>().is_err());
        assert!("abc".parse::<GaussianRational>().is_err());
    }
}
