//! Sparse multivariate polynomials over ℚ(i).
//!
//! Terms live in a `BTreeMap` keyed by exponent vector, so iteration is
//! lexicographic and every printed or serialized form is reproducible.
//! Variables are indexed from 0 internally and printed as `X1, X2, ...`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::scalar::GaussianRational;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exps: Vec<u32>) -> Self {
        Self(exps)
    }

    pub fn zeros(m: usize) -> Self {
        Self(vec![0; m])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    num_vars: usize,
    terms: BTreeMap<ExponentVector, GaussianRational>,
}

impl MultiPoly {
    pub fn zero(num_vars: usize) -> Self {
        Self { num_vars, terms: BTreeMap::new() }
    }

    pub fn one(num_vars: usize) -> Self {
        Self::constant(num_vars, GaussianRational::one())
    }

    pub fn constant(num_vars: usize, c: GaussianRational) -> Self {
        Self::monomial(num_vars, ExponentVector::zeros(num_vars), c)
            .expect("zero exponent vector has the right length")
    }

    /// `c · X^exps`.
    pub fn monomial(
        num_vars: usize,
        exps: impl Into<ExponentVector>,
        c: GaussianRational,
    ) -> Result<Self> {
        let exps = exps.into();
        if exps.len() != num_vars {
            return Err(Error::ExponentLength { expected: num_vars, got: exps.len() });
        }
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Ok(Self { num_vars, terms })
    }

    /// The variable with 0-based index `i`.
    pub fn var(num_vars: usize, i: usize) -> Self {
        assert!(i < num_vars, "variable index {i} out of range for {num_vars} variables");
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Self::monomial(num_vars, e, GaussianRational::one()).unwrap()
    }

    /// Sums like terms and drops zeros.
    pub fn from_terms<I>(num_vars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, GaussianRational)>,
    {
        let mut p = Self::zero(num_vars);
        for (e, c) in terms {
            if e.len() != num_vars {
                return Err(Error::ExponentLength { expected: num_vars, got: e.len() });
            }
            p.add_term(e, &c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: ExponentVector, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Number of nonzero monomials.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> GaussianRational {
        self.terms.get(&ExponentVector(exps.to_vec())).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(ExponentVector::degree).max()
    }

    /// Variables that occur with a positive exponent in some term.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.num_vars)
            .filter(|&i| self.terms.keys().any(|e| e.0[i] > 0))
            .collect()
    }

    pub fn all_coefficients_positive_real(&self) -> bool {
        self.terms.values().all(|c| c.is_real() && c.re().is_positive())
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::VarCountMismatch { left: self.num_vars, right: other.num_vars });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.num_vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(e2), &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.num_vars);
        }
        Self {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    fn neg_ref(&self) -> Self {
        Self {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), -v)).collect(),
        }
    }

    /// `self^k` by repeated squaring; `pow(0)` is `1`.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.num_vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Relabels variables: variable `i` becomes variable `sigma[i]` (0-based).
    pub fn permute(&self, sigma: &[usize]) -> Result<Self> {
        let m = self.num_vars;
        let mut seen = vec![false; m];
        if sigma.len() != m {
            return Err(Error::NotAPermutation(m));
        }
        for &s in sigma {
            if s >= m || seen[s] {
                return Err(Error::NotAPermutation(m));
            }
            seen[s] = true;
        }
        let terms = self.terms.iter().map(|(e, c)| {
            let mut out = vec![0; m];
            for (i, &x) in e.0.iter().enumerate() {
                out[sigma[i]] = x;
            }
            (ExponentVector(out), c.clone())
        });
        Ok(Self { num_vars: m, terms: terms.collect() })
    }

    /// Embeds into a ring with more variables, mapping variable `i` to `map[i]`.
    pub fn embed(&self, target_vars: usize, map: &[usize]) -> Result<Self> {
        if map.len() != self.num_vars || map.iter().any(|&j| j >= target_vars) {
            return Err(Error::InvalidArgument(format!(
                "cannot embed {} variables into {target_vars} with map {map:?}",
                self.num_vars
            )));
        }
        let terms = self.terms.iter().map(|(e, c)| {
            let mut out = vec![0; target_vars];
            for (i, &x) in e.0.iter().enumerate() {
                out[map[i]] += x;
            }
            (ExponentVector(out), c.clone())
        });
        Self::from_terms(target_vars, terms)
    }

    pub fn eval(&self, point: &[GaussianRational]) -> Result<GaussianRational> {
        if point.len() != self.num_vars {
            return Err(Error::VarCountMismatch { left: self.num_vars, right: point.len() });
        }
        Ok(self
            .terms
            .iter()
            .map(|(e, c)| {
                e.0.iter().zip(point).fold(c.clone(), |acc, (&k, x)| acc * x.pow(k))
            })
            .sum())
    }

    /// Substitutes `value` for variable `var`; the variable count is unchanged.
    pub fn substitute(&self, var: usize, value: &GaussianRational) -> Self {
        let terms = self.terms.iter().map(|(e, c)| {
            let mut e = e.clone();
            let k = std::mem::take(&mut e.0[var]);
            (e, c * &value.pow(k))
        });
        Self::from_terms(self.num_vars, terms).unwrap()
    }

    /// Reads the polynomial as univariate in `var`; `None` if any other variable occurs.
    pub fn to_unipoly(&self, var: usize) -> Option<UniPoly> {
        let mut coeffs = Vec::new();
        for (e, c) in &self.terms {
            if e.0.iter().enumerate().any(|(i, &x)| i != var && x > 0) {
                return None;
            }
            let d = e.0[var] as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, GaussianRational::zero());
            }
            coeffs[d] = c.clone();
        }
        Some(UniPoly::new(coeffs))
    }
}

impl<'a> Add for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("MultiPoly addition")
    }
}

impl<'a> Sub for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).expect("MultiPoly subtraction")
    }
}

impl<'a> Mul for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("MultiPoly multiplication")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.neg_ref()
    }
}

/// Caches `f, f², f³, ...` so window scans extend powers one step at a time.
#[derive(Clone, Debug)]
pub struct PowerCache {
    powers: Vec<MultiPoly>,
}

impl PowerCache {
    pub fn new(base: MultiPoly) -> Self {
        let one = MultiPoly::one(base.num_vars());
        Self { powers: vec![one, base] }
    }

    pub fn base(&self) -> &MultiPoly {
        &self.powers[1]
    }

    pub fn get(&mut self, k: usize) -> &MultiPoly {
        while self.powers.len() <= k {
            let next = &self.powers[self.powers.len() - 1] * &self.powers[1];
            self.powers.push(next);
        }
        &self.powers[k]
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: &ExponentVector, names: Option<&[&str]>) -> fmt::Result {
    let mut first = true;
    for (i, &k) in e.0.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        match names.and_then(|n| n.get(i)) {
            Some(name) => f.write_str(name)?,
            None => write!(f, "X{}", i + 1)?,
        }
        if k > 1 {
            write!(f, "^{k}")?;
        }
    }
    Ok(())
}

fn write_poly(f: &mut fmt::Formatter<'_>, p: &MultiPoly, names: Option<&[&str]>) -> fmt::Result {
    if p.is_zero() {
        return f.write_str("0");
    }
    for (idx, (e, c)) in p.terms.iter().rev().enumerate() {
        let constant = e.degree() == 0;
        let (neg, mag) = if c.is_real() && c.re().is_negative() { (true, -c) } else { (false, c.clone()) };
        match (idx, neg) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        let unit = mag.is_one();
        if !mag.is_real() {
            write!(f, "({mag})")?;
        } else if !unit || constant {
            write!(f, "{mag}")?;
        }
        if !constant {
            if !unit {
                f.write_str("*")?;
            }
            write_monomial(f, e, names)?;
        }
    }
    Ok(())
}

/// Terms in descending lexicographic order, e.g. `X1^2 - 2*X1*X2 + X2^2`.
/// Non-real coefficients are parenthesized: `(1/2+3i)*X1`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self, None)
    }
}

/// See [`MultiPoly::display_with`].
pub struct NamedDisplay<'a> {
    poly: &'a MultiPoly,
    names: &'a [&'a str],
}

impl fmt::Display for NamedDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self.poly, Some(self.names))
    }
}

impl MultiPoly {
    /// Prints with custom variable names, e.g. `["n", "X"]`.
    pub fn display_with<'a>(&'a self, names: &'a [&'a str]) -> NamedDisplay<'a> {
        NamedDisplay { poly: self, names }
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({self})", self.num_vars)
    }
}
