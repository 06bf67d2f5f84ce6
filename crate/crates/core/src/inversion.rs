//! Truncated power series and compositional inversion.
//!
//! Inverse coefficients are reported in the scaled form
//! `a^{-1}(X) = X (1 + Σ_{n≥1} u_n/(n+1) X^n)`. Four routes compute `u_n`:
//! direct degree-by-degree solving ([`series_inverse`]), Lagrange extraction
//! ([`lagrange_u`]), and the closed additive and multiplicative sums
//! ([`aif_u`], [`mif_u`]).

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{factorial_q, GaussianRational, UniPoly};
use crate::error::{Error, Result};

/// Coefficients for degrees `0..=order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniSeries {
    coeffs: Vec<GaussianRational>,
}

impl UniSeries {
    /// Pads with zeros or truncates so that exactly `order + 1` coefficients remain.
    pub fn new(mut coeffs: Vec<GaussianRational>, order: usize) -> Self {
        coeffs.resize(order + 1, GaussianRational::zero());
        Self { coeffs }
    }

    pub fn from_poly(p: &UniPoly, order: usize) -> Self {
        Self::new(p.coeffs().to_vec(), order)
    }

    pub fn identity(order: usize) -> Self {
        Self::from_poly(&UniPoly::x(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &GaussianRational {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    /// `a(X) = X mod X²`.
    pub fn is_normalized(&self) -> bool {
        self.order() >= 1 && self.coeffs[0].is_zero() && self.coeffs[1].is_one()
    }

    fn mul_trunc(&self, other: &Self, order: usize) -> Self {
        let mut out = vec![GaussianRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += &(a * b);
            }
        }
        Self { coeffs: out }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn reciprocal(&self, order: usize) -> Result<Self> {
        let c0 = self.coeffs[0].checked_inv().ok_or_else(|| {
            Error::InvalidArgument("reciprocal of a series with zero constant term".into())
        })?;
        let mut out = vec![GaussianRational::zero(); order + 1];
        out[0] = c0.clone();
        for k in 1..=order {
            let mut s = GaussianRational::zero();
            for j in 1..=k.min(self.order()) {
                s += &(&self.coeffs[j] * &out[k - j]);
            }
            out[k] = -(&s * &c0);
        }
        Ok(Self { coeffs: out })
    }

    pub fn pow(&self, k: u32, order: usize) -> Self {
        let mut acc = Self::new(vec![GaussianRational::one()], order);
        let mut base = self.truncate(order);
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_trunc(&base, order);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_trunc(&base, order);
            }
        }
        acc
    }
}

/// `a(X) = X (1 - α1 X - ... - αm X^m)`.
pub fn additive_series(alpha: &[GaussianRational], order: usize) -> UniSeries {
    let mut c = vec![GaussianRational::zero(), GaussianRational::one()];
    c.extend(alpha.iter().map(|a| -a));
    UniSeries::new(c, order)
}

/// `a(X) = X (1 - μ1 X) ... (1 - μm X)`.
pub fn multiplicative_series(mu: &[GaussianRational], order: usize) -> UniSeries {
    let p = mu.iter().fold(UniPoly::x(), |acc, m| {
        &acc * &UniPoly::new(vec![GaussianRational::one(), -m])
    });
    UniSeries::from_poly(&p, order)
}

/// `a(b(X)) mod X^{order+1}`.
pub fn series_compose(a: &UniSeries, b: &UniSeries, order: usize) -> Result<UniSeries> {
    if !b.coeffs[0].is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let have = a.order().min(b.order());
    if have < order {
        return Err(Error::InsufficientOrder { needed: order, have });
    }
    // Horner: a0 + b (a1 + b (a2 + ...))
    let mut acc = UniSeries::new(vec![], order);
    for c in a.coeffs[..=order].iter().rev() {
        acc = acc.mul_trunc(b, order);
        acc.coeffs[0] += c;
    }
    Ok(acc)
}

/// The unique `b` with `a(b(X)) = X mod X^{order+1}`, solved one degree at a time.
pub fn series_inverse(a: &UniSeries, order: usize) -> Result<UniSeries> {
    if !a.is_normalized() {
        return Err(Error::NotNormalized);
    }
    if a.order() < order {
        return Err(Error::InsufficientOrder { needed: order, have: a.order() });
    }
    let mut b = UniSeries::identity(order.max(1));
    b = b.truncate(order);
    for k in 2..=order {
        // With b_k = 0, the X^k coefficient of a(b) is exactly what b_k must cancel.
        let partial = series_compose(&a.truncate(k), &b.truncate(k), k)?;
        b.coeffs[k] = -partial.coeffs[k].clone();
    }
    Ok(b)
}

/// Scaled inverse coefficients `u_1..u_N`, `u[n-1] = (n+1) [X^{n+1}] a^{-1}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct InverseCoefficients {
    pub u: Vec<GaussianRational>,
}

impl InverseCoefficients {
    pub fn from_inverse(b: &UniSeries) -> Self {
        let u = (1..b.order())
            .map(|n| &b.coeffs[n + 1] * &GaussianRational::from((n + 1) as i64))
            .collect();
        Self { u }
    }

    /// `u_n` for `n ≥ 1`.
    pub fn get(&self, n: usize) -> Option<&GaussianRational> {
        n.checked_sub(1).and_then(|i| self.u.get(i))
    }

    /// The inverse series `X (1 + Σ u_n/(n+1) X^n)`.
    pub fn to_series(&self) -> UniSeries {
        let mut c = vec![GaussianRational::zero(), GaussianRational::one()];
        for (i, u) in self.u.iter().enumerate() {
            let n = i + 1;
            c.push(u / &GaussianRational::from((n + 1) as i64));
        }
        let order = c.len() - 1;
        UniSeries::new(c, order)
    }
}

/// `u_n = [X^n] (a(X)/X)^{-(n+1)}`.
pub fn lagrange_u(a: &UniSeries, n: usize) -> Result<GaussianRational> {
    if !a.is_normalized() {
        return Err(Error::NotNormalized);
    }
    if a.order() < n + 1 {
        return Err(Error::InsufficientOrder { needed: n + 1, have: a.order() });
    }
    let h = UniSeries::new(a.coeffs[1..].to_vec(), n);
    let r = h.reciprocal(n)?;
    Ok(r.pow((n + 1) as u32, n).coeffs[n].clone())
}

/// Calls `visit` on each `j` with `Σ weight(i)·j_i = total`, the last index
/// varying slowest.
fn enumerate_weighted(m: usize, total: usize, weight: &dyn Fn(usize) -> usize, visit: &mut dyn FnMut(&[usize])) {
    fn rec(
        i: usize,
        remaining: usize,
        j: &mut Vec<usize>,
        weight: &dyn Fn(usize) -> usize,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if i == 0 {
            if remaining == 0 {
                visit(j);
            }
            return;
        }
        let w = weight(i - 1);
        for x in 0..=remaining / w {
            j[i - 1] = x;
            rec(i - 1, remaining - x * w, j, weight, visit);
        }
        j[i - 1] = 0;
    }
    let mut j = vec![0; m];
    rec(m, total, &mut j, weight, visit);
}

fn monomial_value(coeffs: &[GaussianRational], j: &[usize]) -> GaussianRational {
    coeffs.iter().zip(j).map(|(c, &e)| c.pow(e as u32)).product()
}

/// Additive inversion formula for `a = X (1 - Σ α_k X^k)`:
/// `u_n = (1/n!) Σ_{j1 + 2 j2 + ... + m jm = n} (n + |j|)! / (j1! ... jm!) α^j`.
pub fn aif_u(alpha: &[GaussianRational], n: usize) -> GaussianRational {
    let mut sum = GaussianRational::zero();
    enumerate_weighted(alpha.len(), n, &|i| i + 1, &mut |j| {
        let total: usize = j.iter().sum();
        let mut term = factorial_q(n + total);
        for &ji in j {
            term = &term / &factorial_q(ji);
        }
        sum += &(&term * &monomial_value(alpha, j));
    });
    &sum / &factorial_q(n)
}

/// Multiplicative inversion formula for `a = X Π (1 - μ_k X)`:
/// `u_n = (1/(n!)^m) Σ_{j1 + ... + jm = n} Π (n + j_k)! / j_k! μ^j`.
pub fn mif_u(mu: &[GaussianRational], n: usize) -> GaussianRational {
    let mut sum = GaussianRational::zero();
    enumerate_weighted(mu.len(), n, &|_| 1, &mut |j| {
        let term: GaussianRational =
            j.iter().map(|&ji| &factorial_q(n + ji) / &factorial_q(ji)).product();
        sum += &(&term * &monomial_value(mu, j));
    });
    &sum / &factorial_q(n).pow(mu.len() as u32)
}

/// Whether `a^{-1} = b^{-1} mod X^n`. When `a = b mod X^n` this is always true.
pub fn congruence_preserved(a: &UniSeries, b: &UniSeries, n: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::InvalidArgument("congruence modulus must be at least 2".into()));
    }
    let ia = series_inverse(a, n - 1)?;
    let ib = series_inverse(b, n - 1)?;
    Ok(ia == ib)
}

/// Every tuple of `grid^m`, first coordinate varying slowest.
pub fn grid_points(grid: &[GaussianRational], m: usize) -> Vec<Vec<GaussianRational>> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|p| {
                grid.iter().map(move |g| {
                    let mut q = p.clone();
                    q.push(g.clone());
                    q
                })
            })
            .collect();
    }
    out
}

/// Inverse-coefficient scan for one `α`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RigidityPoint {
    pub alpha: Vec<GaussianRational>,
    /// Coefficients of `X^2, ..., X^{n_max + m}` of the inverse.
    pub coefficients: Vec<GaussianRational>,
    /// Each `n` whose window `X^{n+1}, ..., X^{n+m}` vanishes.
    pub zero_windows: Vec<u32>,
}

/// A vanishing window for a nonzero `α`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RigidityFinding {
    pub alpha: Vec<GaussianRational>,
    pub n: u32,
}

pub fn rigidity_scan_point(alpha: &[GaussianRational], n_max: u32) -> Result<RigidityPoint> {
    let m = alpha.len();
    let top = n_max as usize + m;
    let inv = series_inverse(&additive_series(alpha, top), top)?;
    let coefficients = inv.coeffs()[2..].to_vec();
    let zero_windows = (1..=n_max)
        .filter(|&n| {
            let n = n as usize;
            (n + 1..=n + m).all(|d| inv.coeff(d).is_zero())
        })
        .collect();
    Ok(RigidityPoint { alpha: alpha.to_vec(), coefficients, zero_windows })
}

/// Scans every nonzero `α ∈ grid^m` and reports each window of `m`
/// consecutive vanishing inverse coefficients. Output follows grid order.
pub fn rigidity_window_scan(
    m: usize,
    grid: &[GaussianRational],
    n_max: u32,
) -> Result<Vec<RigidityFinding>> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let points: Vec<_> =
        grid_points(grid, m).into_iter().filter(|p| p.iter().any(|x| !x.is_zero())).collect();
    let scanned: Vec<RigidityPoint> =
        points.par_iter().map(|p| rigidity_scan_point(p, n_max)).collect::<Result<_>>()?;
    Ok(scanned
        .into_iter()
        .flat_map(|p| {
            let alpha = p.alpha;
            p.zero_windows.into_iter().map(move |n| RigidityFinding { alpha: alpha.clone(), n })
        })
        .collect())
}
