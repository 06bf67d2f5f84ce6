//! Two monomials in two variables: `f = μ1 X^a + μ2 X^b` with `a ≠ b ∈ ℕ²`.
//!
//! `L(f^n) = n! μ2^n P_{a,b,n}(μ1/μ2)` where
//! `P_{a,b,n}(X) = Σ_{k=0}^{n} (a1 k + b1 (n-k))! (a2 k + b2 (n-k))! / (k! (n-k)!) X^k`,
//! so `f` escapes the length-two window at `n` exactly when `P_{a,b,n}` and
//! `P_{a,b,n+1}` share a complex root. Since the coefficients are rational,
//! the gcd over ℚ decides that without any root finding.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{factorial, factorial_q, GaussianRational, MultiPoly, UniPoly};
use crate::error::{Error, Result};
use crate::functional::eval_l_power;
use crate::linalg::nullspace;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct ExponentPair {
    pub a: [u32; 2],
    pub b: [u32; 2],
}

impl ExponentPair {
    pub fn new(a: [u32; 2], b: [u32; 2]) -> Result<Self> {
        if a == b {
            return Err(Error::IdenticalExponents);
        }
        Ok(Self { a, b })
    }

    /// `c = a - b`, never zero.
    pub fn c(&self) -> [i64; 2] {
        [self.a[0] as i64 - self.b[0] as i64, self.a[1] as i64 - self.b[1] as i64]
    }

    /// Both vectors with their coordinates exchanged; gives the same `P_n`.
    pub fn swap(&self) -> Self {
        Self { a: [self.a[1], self.a[0]], b: [self.b[1], self.b[0]] }
    }

    /// The smaller of `self` and [`swap`](Self::swap).
    pub fn canonical(&self) -> Self {
        (*self).min(self.swap())
    }

    /// `μ1 X1^a1 X2^a2 + μ2 X1^b1 X2^b2`.
    pub fn polynomial(&self, mu1: &GaussianRational, mu2: &GaussianRational) -> MultiPoly {
        let t1 = MultiPoly::monomial(2, self.a.to_vec(), mu1.clone()).unwrap();
        let t2 = MultiPoly::monomial(2, self.b.to_vec(), mu2.clone()).unwrap();
        &t1 + &t2
    }
}

impl fmt::Display for ExponentPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a=({},{}) b=({},{})", self.a[0], self.a[1], self.b[0], self.b[1])
    }
}

pub fn pab_poly(pair: &ExponentPair, n: usize) -> UniPoly {
    let n32 = n as u32;
    let coeffs = (0..=n32)
        .map(|k| {
            let e1 = pair.a[0] * k + pair.b[0] * (n32 - k);
            let e2 = pair.a[1] * k + pair.b[1] * (n32 - k);
            let num = factorial(e1 as usize) * factorial(e2 as usize);
            let den = factorial(k as usize) * factorial((n32 - k) as usize);
            GaussianRational::from_real(BigRational::new(num, den))
        })
        .collect();
    UniPoly::new(coeffs)
}

/// Both sides of `L(f^n) = n! μ2^n P_{a,b,n}(μ1/μ2)`.
pub fn lemma33_sides(
    pair: &ExponentPair,
    mu1: &GaussianRational,
    mu2: &GaussianRational,
    n: u32,
) -> Result<(GaussianRational, GaussianRational)> {
    if mu1.is_zero() || mu2.is_zero() {
        return Err(Error::ZeroCoefficient);
    }
    let lhs = eval_l_power(&pair.polynomial(mu1, mu2), n);
    let p = pab_poly(pair, n as usize).eval(&(mu1 / mu2));
    let rhs = &(&factorial_q(n as usize) * &mu2.pow(n)) * &p;
    Ok((lhs, rhs))
}

pub fn check_lemma33(
    pair: &ExponentPair,
    mu1: &GaussianRational,
    mu2: &GaussianRational,
    n: u32,
) -> Result<bool> {
    let (l, r) = lemma33_sides(pair, mu1, mu2, n)?;
    Ok(l == r)
}

/// Monic `gcd(P_{a,b,n}, P_{a,b,n+1})`.
pub fn common_zero_gcd(pair: &ExponentPair, n: usize) -> UniPoly {
    pab_poly(pair, n).gcd(&pab_poly(pair, n + 1))
}

/// Degree of [`common_zero_gcd`]; zero means no common complex root.
pub fn common_zero_degree(pair: &ExponentPair, n: usize) -> usize {
    common_zero_gcd(pair, n).degree().unwrap_or(0)
}

/// `x X^a + X^b`. When `x` is a common root of `P_n` and `P_{n+1}`,
/// this polynomial has `L(f^n) = L(f^{n+1}) = 0`.
pub fn counterexample_from_root(pair: &ExponentPair, x: &GaussianRational) -> MultiPoly {
    pair.polynomial(x, &GaussianRational::one())
}

/// A rational common root, read off when the gcd is linear.
pub fn common_zero_witness(pair: &ExponentPair, n: usize) -> Option<(GaussianRational, MultiPoly)> {
    let x = common_zero_gcd(pair, n).linear_root()?;
    let f = counterexample_from_root(pair, &x);
    Some((x, f))
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RpcFinding {
    pub a: [u32; 2],
    pub b: [u32; 2],
    pub n: u32,
    pub gcd: UniPoly,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RpcPairResult {
    pub a: [u32; 2],
    pub b: [u32; 2],
    /// `deg gcd(P_n, P_{n+1})` for `n = 0..=n_max`.
    pub gcd_degrees: Vec<usize>,
    pub findings: Vec<RpcFinding>,
}

/// Distinct pairs with entries `<= max_exp`, one representative per swap class, sorted.
pub fn rpc_pairs(max_exp: u32) -> Vec<ExponentPair> {
    let vs: Vec<[u32; 2]> =
        (0..=max_exp).flat_map(|i| (0..=max_exp).map(move |j| [i, j])).collect();
    let mut out: Vec<ExponentPair> = vs
        .iter()
        .flat_map(|&a| vs.iter().map(move |&b| (a, b)))
        .filter(|(a, b)| a != b)
        .map(|(a, b)| ExponentPair { a, b })
        .filter(|p| p.canonical() == *p)
        .collect();
    out.sort();
    out
}

pub fn rpc_scan_pair(pair: &ExponentPair, n_max: usize) -> RpcPairResult {
    let polys: Vec<UniPoly> = (0..=n_max + 1).map(|n| pab_poly(pair, n)).collect();
    let mut gcd_degrees = Vec::with_capacity(n_max + 1);
    let mut findings = Vec::new();
    for n in 0..=n_max {
        let g = polys[n].gcd(&polys[n + 1]);
        let d = g.degree().unwrap_or(0);
        gcd_degrees.push(d);
        if d > 0 {
            findings.push(RpcFinding { a: pair.a, b: pair.b, n: n as u32, gcd: g });
        }
    }
    RpcPairResult { a: pair.a, b: pair.b, gcd_degrees, findings }
}

/// Every pair from [`rpc_pairs`], `n = 0..=n_max`. Findings are ordered by `(a, b, n)`.
pub fn rpc_scan(max_exp: u32, n_max: usize) -> Vec<RpcFinding> {
    rpc_pairs(max_exp)
        .par_iter()
        .map(|p| rpc_scan_pair(p, n_max).findings)
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Prop35Case {
    /// `a = (p, 0)`, `b = (0, 1)`.
    One,
    /// `a = (p, 0)`, `b = (p, 1)`.
    Two,
}

impl Prop35Case {
    pub fn pair(self, a_param: u32) -> ExponentPair {
        match self {
            Prop35Case::One => ExponentPair { a: [a_param, 0], b: [0, 1] },
            Prop35Case::Two => ExponentPair { a: [a_param, 0], b: [a_param, 1] },
        }
    }
}

/// Case one: `P_{n+1} - P_n = (p(n+1))!/(n+1)! X^{n+1}`.
/// Case two: `(pn)! P_{n+1} - (p(n+1))! P_n = (pn)! (p(n+1))!/(n+1)! X^{n+1}`.
pub fn prop35_residual(a_param: u32, n: usize, case: Prop35Case) -> UniPoly {
    let p = a_param as usize;
    let pair = case.pair(a_param);
    let (pn, pn1) = (pab_poly(&pair, n), pab_poly(&pair, n + 1));
    let top = GaussianRational::from_real(BigRational::new(factorial(p * (n + 1)), factorial(n + 1)));
    match case {
        Prop35Case::One => &(&pn1 - &pn) - &UniPoly::monomial(n + 1, top),
        Prop35Case::Two => {
            let f_n = factorial_q(p * n);
            let f_n1 = factorial_q(p * (n + 1));
            let lhs = &pn1.scale(&f_n) - &pn.scale(&f_n1);
            &lhs - &UniPoly::monomial(n + 1, &f_n * &top)
        }
    }
}

pub fn verify_prop35(a_param: u32, n_max: usize, case: Prop35Case) -> bool {
    (0..=n_max).all(|n| prop35_residual(a_param, n, case).is_zero())
}

/// `Σ_t C_t(n, X) P_{n+t}(X) = 0`. Each `C_t` is a polynomial in two
/// variables: index 0 is `n`, index 1 is `X`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Recurrence {
    coeffs: Vec<MultiPoly>,
}

const REC_VARS: [&str; 2] = ["n", "X"];

impl Recurrence {
    pub fn new(coeffs: Vec<MultiPoly>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::InvalidArgument("a recurrence needs at least two coefficients".into()));
        }
        if let Some(c) = coeffs.iter().find(|c| c.num_vars() != 2) {
            return Err(Error::VarCountMismatch { left: 2, right: c.num_vars() });
        }
        if coeffs.iter().all(MultiPoly::is_zero) {
            return Err(Error::InvalidArgument("all recurrence coefficients are zero".into()));
        }
        Ok(Self { coeffs })
    }

    /// Builds from `(t, n-degree, X-degree, value)` entries.
    pub fn from_entries(order: usize, entries: &[(usize, u32, u32, i64)]) -> Result<Self> {
        let mut coeffs = vec![MultiPoly::zero(2); order + 1];
        for &(t, i, j, v) in entries {
            let m = MultiPoly::monomial(2, vec![i, j], GaussianRational::from(v))?;
            coeffs[t] = &coeffs[t] + &m;
        }
        Self::new(coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    /// Scales to coprime integer coefficients with the leading coefficient of
    /// the first nonzero `C_t` positive. Leading means largest exponent vector.
    pub fn normalized(&self) -> Self {
        let mut lcm = BigInt::one();
        let mut gcd = BigInt::zero();
        for c in &self.coeffs {
            for (_, v) in c.terms() {
                lcm = lcm.lcm(v.re().denom());
                gcd = gcd.gcd(v.re().numer());
            }
        }
        let first = self.coeffs.iter().find(|c| !c.is_zero()).expect("nonzero recurrence");
        let lead = first.terms().next_back().unwrap().1;
        let mut s = BigRational::new(lcm, gcd);
        if lead.re().is_negative() {
            s = -s;
        }
        let s = GaussianRational::from_real(s);
        Self { coeffs: self.coeffs.iter().map(|c| c.scale(&s)).collect() }
    }

    pub fn is_scalar_multiple_of(&self, other: &Self) -> bool {
        self.coeffs.len() == other.coeffs.len() && self.normalized() == other.normalized()
    }

    /// The recurrence with `n` replaced by `n + 1`.
    pub fn shifted(&self) -> Self {
        let n_plus_1 = &MultiPoly::var(2, 0) + &MultiPoly::one(2);
        let shift = |c: &MultiPoly| {
            c.terms().fold(MultiPoly::zero(2), |acc, (e, v)| {
                let x = MultiPoly::monomial(2, vec![0, e.as_slice()[1]], v.clone()).unwrap();
                &acc + &(&n_plus_1.pow(e.as_slice()[0]) * &x)
            })
        };
        Self { coeffs: self.coeffs.iter().map(shift).collect() }
    }

    /// If `Σ_t C_t(n) P_{n+t} = s_n` with `s_{n+1} q(n) = s_n p(n)`, returns the
    /// order `r + 1` recurrence `q(n) R(n+1) - p(n) R(n) = 0`, which annihilates
    /// `P_n` itself. `p` and `q` are polynomials in `n` (variable 0).
    pub fn homogenized(&self, p: &MultiPoly, q: &MultiPoly) -> Self {
        let zero = MultiPoly::zero(2);
        let next = self.shifted();
        let coeffs = (0..=self.order() + 1)
            .map(|t| {
                let lo = self.coeffs.get(t).unwrap_or(&zero);
                let hi = if t == 0 { &zero } else { &next.coeffs[t - 1] };
                &(q * hi) - &(p * lo)
            })
            .collect();
        Self { coeffs }.normalized()
    }

    /// `C_t(n, X)` as a polynomial in `X`.
    pub fn coefficient_at(&self, t: usize, n: usize) -> UniPoly {
        self.coeffs[t]
            .substitute(0, &GaussianRational::from(n as i64))
            .to_unipoly(1)
            .expect("only X remains after substituting n")
    }
}

impl fmt::Display for Recurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (t, c) in self.coeffs.iter().enumerate() {
            if t > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", c.display_with(&REC_VARS))?;
        }
        f.write_str("]")
    }
}

/// `X P_n - (n+2) X P_{n+1} + P_{n+2} = 0` for `a = (1,1), b = (0,0)`.
pub fn printed_recurrence_a11_b00() -> Recurrence {
    Recurrence::from_entries(2, &[(0, 0, 1, 1), (1, 1, 1, -1), (1, 0, 1, -2), (2, 0, 0, 1)]).unwrap()
}

/// `27X P_n - 54(n+2) X P_{n+1} + 3(3n+8)(3n+7) X P_{n+2} - P_{n+3} = 0` for `a = (3,0), b = (0,0)`.
pub fn printed_recurrence_a30_b00() -> Recurrence {
    // 3(3n+8)(3n+7) = 27n² + 135n + 168
    Recurrence::from_entries(
        3,
        &[
            (0, 0, 1, 27),
            (1, 1, 1, -54),
            (1, 0, 1, -108),
            (2, 2, 1, 27),
            (2, 1, 1, 135),
            (2, 0, 1, 168),
            (3, 0, 0, -1),
        ],
    )
    .unwrap()
}

/// The inhomogeneous printed relations leave the constant `±P_{n+r}(0) = ±1/(n+r)!`;
/// the factor `1/(n+r+1)` between consecutive right-hand sides gives an
/// order `r + 1` recurrence that vanishes identically.
pub fn homogenized_printed_recurrence(rec: &Recurrence) -> Recurrence {
    let r = rec.order() as i64;
    let q = &MultiPoly::var(2, 0) + &MultiPoly::constant(2, GaussianRational::from(r + 1));
    rec.homogenized(&MultiPoly::one(2), &q)
}

/// `Σ_t C_t(n, X) P_{n+t}(X)`; zero exactly when the recurrence holds at `n`.
pub fn apply_recurrence(rec: &Recurrence, family: &dyn Fn(usize) -> UniPoly, n: usize) -> UniPoly {
    (0..=rec.order()).fold(UniPoly::zero(), |acc, t| {
        &acc + &(&rec.coefficient_at(t, n) * &family(n + t))
    })
}

/// Shape of the coefficient polynomials searched for.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RecurrenceAnsatz {
    pub order: usize,
    pub deg_n: usize,
    pub deg_x: usize,
}

impl RecurrenceAnsatz {
    pub fn unknowns(&self) -> usize {
        (self.order + 1) * (self.deg_n + 1) * (self.deg_x + 1)
    }

    /// First sampled `n`.
    pub fn first_sample(&self) -> usize {
        2.max(self.deg_n + 1)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiscoveredRecurrence {
    pub recurrence: Recurrence,
    /// Dimension of the solution space; the returned recurrence is the
    /// solution supported on the lowest-degree ansatz monomials.
    pub nullity: usize,
    /// Values of `n` used to build the linear system.
    pub fitted: (usize, usize),
    /// Fresh values of `n` on which the recurrence was re-checked.
    pub verified: (usize, usize),
}

/// Finds `C_0, ..., C_r` of the given shape annihilating `P_{a,b,n}` by
/// solving the coefficient equations at `n_samples` consecutive values of `n`,
/// then re-checks on the next `n_samples` values. The result is verified on
/// the tested range only.
pub fn discover_recurrence(
    pair: &ExponentPair,
    ansatz: RecurrenceAnsatz,
    n_samples: usize,
) -> Result<Option<DiscoveredRecurrence>> {
    let RecurrenceAnsatz { order, deg_n, deg_x } = ansatz;
    if order == 0 {
        return Err(Error::InvalidArgument("recurrence order must be at least 1".into()));
    }
    let n0 = ansatz.first_sample();
    let unknowns = ansatz.unknowns();
    let required = unknowns + 5;
    // the equation at n has one row per power of X up to deg_x + deg P_{n+r} = deg_x + n + r
    let equations: usize = (n0..n0 + n_samples).map(|n| deg_x + n + order + 1).sum();
    if equations < required {
        return Err(Error::Underdetermined { unknowns, equations, required });
    }

    // Unknown columns ordered by total degree, so the first free column's
    // nullspace vector lives on the lowest-degree monomials.
    let mut cols: Vec<(usize, usize, usize)> = (0..=order)
        .flat_map(|t| (0..=deg_n).flat_map(move |i| (0..=deg_x).map(move |j| (t, i, j))))
        .collect();
    cols.sort_by_key(|&(t, i, j)| (i + j, i, j, t));

    let family: Vec<UniPoly> = (0..n0 + 2 * n_samples + order + 1).map(|n| pab_poly(pair, n)).collect();
    let mut rows = Vec::with_capacity(equations);
    for n in n0..n0 + n_samples {
        let width = deg_x + n + order + 1;
        let mut block = vec![vec![BigRational::zero(); cols.len()]; width];
        let npow: Vec<BigRational> =
            (0..=deg_n).map(|i| BigRational::from_integer(BigInt::from(n).pow(i as u32))).collect();
        for (col, &(t, i, j)) in cols.iter().enumerate() {
            for (d, c) in family[n + t].coeffs().iter().enumerate() {
                block[d + j][col] += &npow[i] * c.re();
            }
        }
        rows.extend(block.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())));
    }

    let basis = nullspace(rows, cols.len());
    let Some(v) = basis.first() else {
        return Ok(None);
    };
    let mut coeffs = vec![MultiPoly::zero(2); order + 1];
    for (&(t, i, j), x) in cols.iter().zip(v) {
        if x.is_zero() {
            continue;
        }
        let m = MultiPoly::monomial(2, vec![i as u32, j as u32], GaussianRational::from_real(x.clone()))?;
        coeffs[t] = &coeffs[t] + &m;
    }
    let recurrence = Recurrence::new(coeffs)?.normalized();

    let fresh = n0 + n_samples..n0 + 2 * n_samples;
    let lookup = |k: usize| family.get(k).cloned().unwrap_or_else(|| pab_poly(pair, k));
    for n in fresh.clone() {
        if !apply_recurrence(&recurrence, &lookup, n).is_zero() {
            return Err(Error::VerificationFailed(n as u32));
        }
    }
    Ok(Some(DiscoveredRecurrence {
        recurrence,
        nullity: basis.len(),
        fitted: (n0, n0 + n_samples - 1),
        verified: (fresh.start, fresh.end - 1),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> GaussianRational {
        GaussianRational::from(n)
    }

    fn fr(n: i64, d: i64) -> GaussianRational {
        GaussianRational::from_frac(n, d)
    }

    fn pair(a: [u32; 2], b: [u32; 2]) -> ExponentPair {
        ExponentPair::new(a, b).unwrap()
    }

    #[test]
    fn pair_invariants() {
        assert_eq!(ExponentPair::new([1, 2], [1, 2]), Err(Error::IdenticalExponents));
        let p = pair([3, 0], [1, 2]);
        assert_eq!(p.c(), [2, -2]);
        assert_eq!(p.swap(), pair([0, 3], [2, 1]));
        assert_eq!(p.canonical(), pair([0, 3], [2, 1]));
    }

    #[test]
    fn pab_examples() {
        let p = pair([1, 1], [0, 0]);
        assert_eq!(pab_poly(&p, 2), UniPoly::new(vec![fr(1, 2), q(1), q(2)]));
        // a = (p,0), b = (0,1): Σ (pk)!/k! X^k
        let p = pair([2, 0], [0, 1]);
        let want = UniPoly::new((0..=4).map(|k| GaussianRational::from_real(BigRational::new(factorial(2 * k), factorial(k)))).collect());
        assert_eq!(pab_poly(&p, 4), want);
        assert_eq!(pab_poly(&pair([2, 1], [1, 2]), 1), UniPoly::from_ints(&[2, 2]));
        assert_eq!(pab_poly(&pair([2, 1], [1, 2]), 2), UniPoly::from_ints(&[24, 36, 24]));
    }

    #[test]
    fn lemma33_examples() {
        let e = pair([2, 1], [1, 2]);
        assert_eq!(lemma33_sides(&e, &q(1), &q(1), 1).unwrap(), (q(4), q(4)));
        assert_eq!(lemma33_sides(&pair([1, 1], [0, 0]), &q(1), &q(1), 2).unwrap(), (q(7), q(7)));
        assert_eq!(lemma33_sides(&e, &q(-3), &q(3), 1).unwrap(), (q(0), q(0)));
        assert_eq!(check_lemma33(&e, &q(0), &q(3), 1), Err(Error::ZeroCoefficient));
    }

    #[test]
    fn common_zero_examples() {
        assert_eq!(common_zero_degree(&pair([2, 1], [1, 2]), 1), 0);
        for a in 0..4 {
            for n in 0..6 {
                assert_eq!(common_zero_degree(&pair([a, 0], [0, 1]), n), 0);
                assert_eq!(common_zero_degree(&pair([a, 0], [a, 1]), n), 0);
            }
        }
        assert!(common_zero_witness(&pair([2, 1], [1, 2]), 1).is_none());
    }

    #[test]
    fn single_roots_give_vanishing_l() {
        // P_1 = 2 + 2X for the E^[2] pair has root -1, so L((-X1^2 X2 + X1 X2^2)^1) = 0
        let e = pair([2, 1], [1, 2]);
        let x = pab_poly(&e, 1).linear_root().unwrap();
        assert_eq!(x, q(-1));
        assert!(eval_l_power(&counterexample_from_root(&e, &x), 1).is_zero());
    }

    #[test]
    fn rpc_examples() {
        let pairs = rpc_pairs(1);
        // 4 vectors, 12 ordered pairs, swap classes: fixed points are pairs of symmetric vectors
        assert!(pairs.iter().all(|p| p.canonical() == *p && p.a != p.b));
        let mut all: Vec<_> = pairs.iter().flat_map(|p| [*p, p.swap()]).collect();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 12);
        assert!(rpc_scan(1, 3).is_empty());
        for p in rpc_pairs(3) {
            assert_eq!(pab_poly(&p, 5), pab_poly(&p.swap(), 5));
        }
    }

    #[test]
    fn prop35() {
        assert!(verify_prop35(2, 10, Prop35Case::One));
        assert!(verify_prop35(3, 10, Prop35Case::Two));
        assert!(verify_prop35(0, 6, Prop35Case::One));
        assert!(verify_prop35(0, 6, Prop35Case::Two));
    }

    #[test]
    fn printed_recurrences_miss_the_constant_term() {
        // X·1 - 2X(1 + X) + (1/2 + X + 2X^2) = 1/2
        let p11 = pair([1, 1], [0, 0]);
        let fam = |n: usize| pab_poly(&p11, n);
        let rec = printed_recurrence_a11_b00();
        assert_eq!(rec.to_string(), "[X, -n*X - 2*X, 1]");
        assert_eq!(apply_recurrence(&rec, &fam, 0), UniPoly::constant(fr(1, 2)));
        for n in 0..=20 {
            assert_eq!(apply_recurrence(&rec, &fam, n), UniPoly::constant(pab_poly(&p11, n + 2).coeff(0)));
        }

        let p30 = pair([3, 0], [0, 0]);
        let fam = |n: usize| pab_poly(&p30, n);
        let rec = printed_recurrence_a30_b00();
        for n in 0..=15 {
            assert_eq!(apply_recurrence(&rec, &fam, n), UniPoly::constant(-pab_poly(&p30, n + 3).coeff(0)));
        }

        let mut bad = rec.coeffs().to_vec();
        bad[3] = MultiPoly::constant(2, q(-2));
        let bad = Recurrence::new(bad).unwrap();
        assert!(!apply_recurrence(&bad, &fam, 3).is_zero());
    }

    #[test]
    fn homogenized_recurrences_vanish() {
        let p11 = pair([1, 1], [0, 0]);
        let h = homogenized_printed_recurrence(&printed_recurrence_a11_b00());
        assert_eq!(h.order(), 3);
        assert_eq!(h.to_string(), "[X, -2*n*X - 5*X, n^2*X + 6*n*X + 9*X + 1, -n - 3]");
        assert!((0..=20).all(|n| apply_recurrence(&h, &|k| pab_poly(&p11, k), n).is_zero()));

        let p30 = pair([3, 0], [0, 0]);
        let h = homogenized_printed_recurrence(&printed_recurrence_a30_b00());
        assert_eq!(h.order(), 4);
        assert!((0..=15).all(|n| apply_recurrence(&h, &|k| pab_poly(&p30, k), n).is_zero()));
    }

    #[test]
    fn normalization() {
        let rec = printed_recurrence_a11_b00();
        let scaled = Recurrence::new(rec.coeffs().iter().map(|c| c.scale(&fr(-3, 7))).collect()).unwrap();
        assert_eq!(scaled.normalized(), rec);
        assert!(scaled.is_scalar_multiple_of(&rec));
        assert!(Recurrence::new(vec![MultiPoly::zero(2), MultiPoly::zero(2)]).is_err());
    }

    #[test]
    fn discovery() {
        let p11 = pair([1, 1], [0, 0]);
        let a = RecurrenceAnsatz { order: 2, deg_n: 1, deg_x: 1 };
        assert_eq!(discover_recurrence(&p11, a, 8).unwrap(), None);
        let a = RecurrenceAnsatz { order: 3, deg_n: 2, deg_x: 1 };
        let d = discover_recurrence(&p11, a, 10).unwrap().unwrap();
        assert_eq!(d.nullity, 1);
        assert_eq!(d.recurrence, homogenized_printed_recurrence(&printed_recurrence_a11_b00()));

        let p30 = pair([3, 0], [0, 0]);
        for (deg_n, deg_x) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
            let a = RecurrenceAnsatz { order: 2, deg_n, deg_x };
            assert_eq!(discover_recurrence(&p30, a, 10).unwrap(), None);
        }
        let a = RecurrenceAnsatz { order: 3, deg_n: 2, deg_x: 1 };
        assert_eq!(discover_recurrence(&p30, a, 10).unwrap(), None);
        let a = RecurrenceAnsatz { order: 4, deg_n: 3, deg_x: 1 };
        let d = discover_recurrence(&p30, a, 10).unwrap().unwrap();
        assert_eq!(d.recurrence, homogenized_printed_recurrence(&printed_recurrence_a30_b00()));

        assert!(matches!(discover_recurrence(&p30, a, 1), Err(Error::Underdetermined { .. })));
    }
}
