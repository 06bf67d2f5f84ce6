//! Dense univariate polynomials over ℚ(i) and their Euclidean gcd.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::scalar::GaussianRational;

/// `coeffs[d]` is the coefficient of `X^d`; the top coefficient is nonzero
/// unless the polynomial is zero (empty list).
#[derive(Clone, PartialEq, Eq, Hash, Default, serde::Serialize, serde::Deserialize)]
#[serde(from = "Vec<GaussianRational>", into = "Vec<GaussianRational>")]
pub struct UniPoly {
    coeffs: Vec<GaussianRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::new(vec![c])
    }

    /// `c · X^d`.
    pub fn monomial(d: usize, c: GaussianRational) -> Self {
        let mut v = vec![GaussianRational::zero(); d + 1];
        v[d] = c;
        Self::new(v)
    }

    pub fn x() -> Self {
        Self::monomial(1, GaussianRational::one())
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| GaussianRational::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> GaussianRational {
        self.coeffs.get(d).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplies by `X^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![GaussianRational::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self { coeffs: v }
    }

    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        self.coeffs
            .iter()
            .rev()
            .fold(GaussianRational::zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => {
                let inv = lc.inv();
                self.scale(&inv)
            }
        }
    }

    /// Quotient and remainder. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lc_inv = divisor.leading().unwrap().inv();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![GaussianRational::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let t = &rem[i + dd] * &lc_inv;
            if t.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let sub = &t * dc;
                rem[i + j] -= &sub;
            }
            quot[i] = t;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic gcd via the Euclidean remainder sequence; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    /// The root of a degree-one polynomial.
    pub fn linear_root(&self) -> Option<GaussianRational> {
        if self.degree() != Some(1) {
            return None;
        }
        Some(-(&self.coeffs[0] / &self.coeffs[1]))
    }
}

impl From<Vec<GaussianRational>> for UniPoly {
    fn from(v: Vec<GaussianRational>) -> Self {
        Self::new(v)
    }
}

impl From<UniPoly> for Vec<GaussianRational> {
    fn from(p: UniPoly) -> Self {
        p.coeffs
    }
}

impl<'a> Add for &'a UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl<'a> Sub for &'a UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl<'a> Mul for &'a UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![GaussianRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += &(a * b);
            }
        }
        UniPoly::new(v)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

/// Ascending powers of `X`: `12 + 6*X`, `1/2 + X + 2*X^2`.
impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = if c.is_real() && c.re().is_negative() { (true, -c) } else { (false, c.clone()) };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let coeff = if mag.is_real() { mag.to_string() } else { format!("({mag})") };
            match d {
                0 => f.write_str(&coeff)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{coeff}*")?;
                    }
                    f.write_str("X")?;
                    if d > 1 {
                        write!(f, "^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
        // 2 + 2X and 24 + 36X + 24X^2 share no root: P(-1) = 24 - 36 + 24 = 12
        let q = p(&[24, 36, 24]);
        assert_eq!(q.eval(&GaussianRational::from(-1)), GaussianRational::from(12));
        assert_eq!(p(&[2, 2]).gcd(&q), p(&[1]));
        assert_eq!(p(&[4, 2]).gcd(&UniPoly::zero()), p(&[2, 1]));
        assert!(UniPoly::zero().gcd(&UniPoly::zero()).is_zero());
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[5, -3, 0, 7, 2]);
        let b = p(&[1, 0, 3]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn display_ascending() {
        assert_eq!(p(&[12, 6]).to_string(), "12 + 6*X");
        assert_eq!(p(&[0, -1, 1]).to_string(), "-X + X^2");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }

    #[test]
    fn linear_root() {
        assert_eq!(p(&[2, 2]).linear_root(), Some(GaussianRational::from(-1)));
        assert_eq!(p(&[2, 2, 1]).linear_root(), None);
    }
}
