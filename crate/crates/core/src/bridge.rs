//! The family `X1 ... Xm (μ1 X1 + ... + μm Xm)` linking `L` to the
//! multiplicative inversion formula, and the dimension-two polynomial
//! `P_n(X) = Σ_{k ≤ n/2} (2n-k)! / ((n-2k)! k!) X^k` with the identities it
//! satisfies.
//!
//! Every check here is a finite exact computation; a clean grid probe is
//! evidence, not a proof.

use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::factorial::pochhammer;
use crate::algebra::{factorial, factorial_q, GaussianRational, MultiPoly, UniPoly};
use crate::error::{Error, Result};
use crate::functional::eval_l_power;
use crate::inversion::{grid_points, mif_u};

/// `X1 ... Xm (μ1 X1 + ... + μm Xm)` with `m = mu.len()`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct EFamilyElement {
    pub mu: Vec<GaussianRational>,
}

impl EFamilyElement {
    pub fn new(mu: Vec<GaussianRational>) -> Self {
        Self { mu }
    }

    pub fn m(&self) -> usize {
        self.mu.len()
    }

    /// All multipliers nonzero, i.e. exactly `m` monomials.
    pub fn is_full(&self) -> bool {
        self.mu.iter().all(|x| !x.is_zero())
    }

    pub fn expand(&self) -> MultiPoly {
        expand_e(&self.mu)
    }
}

pub fn expand_e(mu: &[GaussianRational]) -> MultiPoly {
    let m = mu.len();
    let terms = mu.iter().enumerate().map(|(i, c)| {
        let mut e = vec![1u32; m];
        e[i] = 2;
        (e.into(), c.clone())
    });
    MultiPoly::from_terms(m, terms).expect("exponent vectors have length m")
}

/// Both sides of `(n!)^{m+1} u_n = L(f^n)`.
pub fn bridge_sides(el: &EFamilyElement, n: u32) -> (GaussianRational, GaussianRational) {
    let scale = factorial_q(n as usize).pow(el.m() as u32 + 1);
    let lhs = &scale * &mif_u(&el.mu, n as usize);
    let rhs = eval_l_power(&el.expand(), n);
    (lhs, rhs)
}

pub fn check_bridge_identity(el: &EFamilyElement, n: u32) -> bool {
    let (l, r) = bridge_sides(el, n);
    l == r
}

/// An element with its zero multipliers stripped and variables relabelled.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ReducedElement {
    pub m_prime: usize,
    pub mu_hat: Vec<GaussianRational>,
    /// `sigma[i]` is the original (0-based) position of reduced variable `i`; strictly increasing.
    pub sigma: Vec<usize>,
}

impl ReducedElement {
    pub fn expand(&self) -> MultiPoly {
        expand_e(&self.mu_hat)
    }
}

/// Keeps the nonzero `μ_i` in order. Then `L(f^k) = (k!)^{m-m'} L(f̂^k)`.
pub fn reduce_hat(el: &EFamilyElement) -> Result<ReducedElement> {
    let sigma: Vec<usize> = (0..el.m()).filter(|&i| !el.mu[i].is_zero()).collect();
    if sigma.is_empty() {
        return Err(Error::AllZero);
    }
    Ok(ReducedElement {
        m_prime: sigma.len(),
        mu_hat: sigma.iter().map(|&i| el.mu[i].clone()).collect(),
        sigma,
    })
}

pub fn p31_poly(n: usize) -> UniPoly {
    let coeffs = (0..=n / 2)
        .map(|k| {
            GaussianRational::from_int(factorial(2 * n - k) / (factorial(n - 2 * k) * factorial(k)))
        })
        .collect();
    UniPoly::new(coeffs)
}

/// `-3(3n+4)(3n+2) X² P_n - (2n+3)(9X+2) P_{n+1} + (4X+1) P_{n+2}` for a given family.
pub fn p31_recurrence_residual(family: &dyn Fn(usize) -> UniPoly, n: usize) -> UniPoly {
    let ni = n as i64;
    let c0 = UniPoly::from_ints(&[0, 0, -3 * (3 * ni + 4) * (3 * ni + 2)]);
    let c1 = UniPoly::from_ints(&[-2 * (2 * ni + 3), -9 * (2 * ni + 3)]);
    let c2 = UniPoly::from_ints(&[1, 4]);
    let s = &(&c0 * &family(n)) + &(&c1 * &family(n + 1));
    &s + &(&c2 * &family(n + 2))
}

pub fn verify_p31_recurrence_with(family: &dyn Fn(usize) -> UniPoly, n_max: usize) -> bool {
    (0..=n_max).all(|n| p31_recurrence_residual(family, n).is_zero())
}

/// The three-term recurrence of `P_n` as a polynomial identity in `X`, `n = 0..=n_max`.
pub fn verify_p31_recurrence(n_max: usize) -> bool {
    verify_p31_recurrence_with(&p31_poly, n_max)
}

/// The five-term certificate expression as a polynomial in `(n, k)`.
pub fn certificate_polynomial() -> MultiPoly {
    let n = MultiPoly::var(2, 0);
    let k = MultiPoly::var(2, 1);
    // a·n + b·k + c
    let lin = |a: i64, b: i64, c: i64| -> MultiPoly {
        let t = &n.scale(&a.into()) + &k.scale(&b.into());
        &t + &MultiPoly::constant(2, c.into())
    };
    let prod = |c: i64, fs: &[MultiPoly]| -> MultiPoly {
        fs.iter().fold(MultiPoly::constant(2, c.into()), |acc, f| &acc * f)
    };
    let terms = [
        prod(-3, &[lin(3, 0, 1), lin(3, 0, -1), lin(0, 1, 0), lin(0, 1, -1)]),
        prod(-9, &[lin(2, 0, 1), lin(2, -1, 1), lin(1, -2, 3), lin(0, 1, 0)]),
        prod(-2, &[lin(2, 0, 1), lin(1, -2, 3), lin(1, -2, 2), lin(1, -2, 1)]),
        prod(4, &[lin(2, -1, 3), lin(2, -1, 2), lin(2, -1, 1), lin(0, 1, 0)]),
        prod(1, &[lin(2, -1, 1), lin(1, -2, 3), lin(1, -2, 2), lin(2, -1, 2)]),
    ];
    terms.iter().fold(MultiPoly::zero(2), |acc, t| &acc + t)
}

pub fn verify_certificate_identity() -> bool {
    certificate_polynomial().is_zero()
}

/// `n(n-1)(μ1-μ2)² u_n + (n-1)(2n-1)(μ1+μ2)(μ1-2μ2)(μ2-2μ1) u_{n-1} - 3(3n-4)(3n-2) μ1² μ2² u_{n-2}`
/// with `u` from the two-factor multiplicative formula.
pub fn furter_residual(mu1: &GaussianRational, mu2: &GaussianRational, u: &[GaussianRational], n: usize) -> GaussianRational {
    let int = |x: i64| GaussianRational::from(x);
    let ni = n as i64;
    let two = int(2);
    let d = mu1 - mu2;
    let a = &int(ni * (ni - 1)) * &(&d * &d);
    let b = &(&(&int((ni - 1) * (2 * ni - 1)) * &(mu1 + mu2)) * &(mu1 - &(&two * mu2)))
        * &(mu2 - &(&two * mu1));
    let p = mu1 * mu2;
    let c = &int(-3 * (3 * ni - 4) * (3 * ni - 2)) * &(&p * &p);
    &(&(&a * &u[n]) + &(&b * &u[n - 1])) + &(&c * &u[n - 2])
}

pub fn verify_furter_recurrence(mu1: &GaussianRational, mu2: &GaussianRational, n_max: usize) -> bool {
    let mu = [mu1.clone(), mu2.clone()];
    let u: Vec<_> = (0..=n_max).map(|n| mif_u(&mu, n)).collect();
    (2..=n_max).all(|n| furter_residual(mu1, mu2, &u, n).is_zero())
}

/// `P_n(0) · ₂F₁((1-n)/2, -n/2; -2n; -4X)`, summed over `k = 0..=n/2`
/// where the upper Pochhammer symbols terminate the series.
pub fn p31_hypergeometric(n: usize) -> UniPoly {
    let ni = n as i64;
    let a = BigRational::new((1 - ni).into(), 2.into());
    let b = BigRational::new((-ni).into(), 2.into());
    let c = BigRational::from_integer((-2 * ni).into());
    let z = BigRational::from_integer((-4).into());
    let p0 = BigRational::from_integer(factorial(2 * n) / factorial(n));
    let coeffs = (0..=n / 2)
        .map(|k| {
            let num = pochhammer(&a, k) * pochhammer(&b, k) * z.pow(k as i32);
            let den = pochhammer(&c, k) * BigRational::from_integer(factorial(k));
            GaussianRational::from_real(&p0 * num / den)
        })
        .collect();
    UniPoly::new(coeffs)
}

pub fn verify_hypergeometric_form(n_max: usize) -> bool {
    (1..=n_max).all(|n| p31_hypergeometric(n) == p31_poly(n))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// One window vanishes and the other does not.
    WindowMismatch,
    /// Both windows vanish for a nonzero multiplier vector.
    NonzeroVanishing,
}

/// Windows `(u_n, ..., u_{n+m-1})` and `(L(f^n), ..., L(f^{n+m-1}))` for one `μ`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BridgePoint {
    pub mu: Vec<GaussianRational>,
    pub n: u32,
    pub u_window: Vec<GaussianRational>,
    pub l_window: Vec<GaussianRational>,
}

impl BridgePoint {
    pub fn violation(&self) -> Option<ViolationKind> {
        let u0 = self.u_window.iter().all(Zero::is_zero);
        let l0 = self.l_window.iter().all(Zero::is_zero);
        if u0 != l0 {
            Some(ViolationKind::WindowMismatch)
        } else if u0 && self.mu.iter().any(|x| !x.is_zero()) {
            Some(ViolationKind::NonzeroVanishing)
        } else {
            None
        }
    }
}

pub fn bridge_probe_point(mu: &[GaussianRational], n: u32) -> BridgePoint {
    let m = mu.len() as u32;
    let f = expand_e(mu);
    let mut cache = crate::algebra::PowerCache::new(f);
    let ks = n..n + m;
    let u_window = ks.clone().map(|k| mif_u(mu, k as usize)).collect();
    let l_window = ks.map(|k| crate::functional::eval_l(cache.get(k as usize))).collect();
    BridgePoint { mu: mu.to_vec(), n, u_window, l_window }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BridgeViolation {
    pub kind: ViolationKind,
    pub point: BridgePoint,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BridgeProbeReport {
    pub m: usize,
    pub n_values: Vec<u32>,
    pub points_scanned: usize,
    pub violations: Vec<BridgeViolation>,
}

/// Largest dimension the probe accepts.
pub const MAX_PROBE_DIM: usize = 4;

/// For each `μ ∈ grid^m` and each `n`, checks that the inverse-coefficient
/// window vanishes exactly when the `L` window does, and that neither
/// vanishes for nonzero `μ`.
pub fn bridge_equivalence_probe(
    m: usize,
    grid: &[GaussianRational],
    n_values: &[u32],
) -> Result<BridgeProbeReport> {
    if m == 0 || m > MAX_PROBE_DIM {
        return Err(Error::InvalidArgument(format!("probe dimension must be in 1..={MAX_PROBE_DIM}")));
    }
    if n_values.contains(&0) {
        return Err(Error::InvalidArgument("window start n must be at least 1".into()));
    }
    let points = grid_points(grid, m);
    let jobs: Vec<(&Vec<GaussianRational>, u32)> =
        points.iter().flat_map(|p| n_values.iter().map(move |&n| (p, n))).collect();
    let violations = jobs
        .par_iter()
        .map(|(mu, n)| bridge_probe_point(mu, *n))
        .collect::<Vec<_>>()
        .into_iter()
        .filter_map(|point| point.violation().map(|kind| BridgeViolation { kind, point }))
        .collect();
    Ok(BridgeProbeReport {
        m,
        n_values: n_values.to_vec(),
        points_scanned: points.len(),
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functional::in_fn;

    fn q(n: i64) -> GaussianRational {
        GaussianRational::from(n)
    }

    fn el(mu: &[i64]) -> EFamilyElement {
        EFamilyElement::new(mu.iter().map(|&x| q(x)).collect())
    }

    #[test]
    fn expand_examples() {
        let f = el(&[1, 1]).expand();
        assert_eq!(f.to_string(), "X1^2*X2 + X1*X2^2");
        assert!(el(&[0, 0, 0]).expand().is_zero());
        let g = el(&[3, -5]).expand();
        assert_eq!(g.coeff(&[2, 1]), q(3));
        assert_eq!(g.coeff(&[1, 2]), q(-5));
        assert_eq!(el(&[2, 0, 7]).expand().num_terms(), 2);
    }

    #[test]
    fn bridge_identity_examples() {
        assert_eq!(bridge_sides(&el(&[1]), 2), (q(24), q(24)));
        assert_eq!(bridge_sides(&el(&[1, 1]), 1), (q(4), q(4)));
        for n in 1..5 {
            assert!(check_bridge_identity(&el(&[0, 0]), n));
            assert!(check_bridge_identity(&el(&[2, -1, 3]), n));
        }
    }

    #[test]
    fn reduce_examples() {
        let r = reduce_hat(&el(&[5, 0, 7])).unwrap();
        assert_eq!(r.m_prime, 2);
        assert_eq!(r.mu_hat, vec![q(5), q(7)]);
        assert_eq!(r.sigma, vec![0, 2]);
        let full = reduce_hat(&el(&[1, 2, 3])).unwrap();
        assert_eq!((full.m_prime, full.sigma.clone()), (3, vec![0, 1, 2]));
        assert_eq!(reduce_hat(&el(&[0, 0])), Err(Error::AllZero));

        let e = el(&[0, 3]);
        let r = reduce_hat(&e).unwrap();
        assert_eq!(r.expand(), MultiPoly::monomial(1, vec![2], q(3)).unwrap());
        for k in 1..=5u32 {
            let lhs = eval_l_power(&e.expand(), k);
            let rhs = &factorial_q(k as usize) * &eval_l_power(&r.expand(), k);
            assert_eq!(lhs, rhs);
        }
        // membership transfers through the reduction
        for n in 1..4 {
            assert_eq!(in_fn(&e.expand(), n).unwrap().member, in_fn(&r.expand(), n).unwrap().member);
        }
    }

    #[test]
    fn p31_examples() {
        assert_eq!(p31_poly(0), UniPoly::from_ints(&[1]));
        assert_eq!(p31_poly(1), UniPoly::from_ints(&[2]));
        assert_eq!(p31_poly(2), UniPoly::from_ints(&[12, 6]));
        for n in 0..=40 {
            let p0 = GaussianRational::from_int(factorial(2 * n) / factorial(n));
            assert_eq!(p31_poly(n).coeff(0), p0);
        }
    }

    #[test]
    fn p31_recurrence() {
        // n = 0 by hand: -24X² - 3(9X+2)·2 + (4X+1)(12+6X) = 0
        assert!(p31_recurrence_residual(&p31_poly, 0).is_zero());
        assert!(verify_p31_recurrence(40));
        let broken = |n: usize| {
            if n == 5 {
                &p31_poly(5) + &UniPoly::from_ints(&[0, 1])
            } else {
                p31_poly(n)
            }
        };
        assert!(!verify_p31_recurrence_with(&broken, 10));
    }

    #[test]
    fn certificate() {
        assert!(verify_certificate_identity());
        let p = certificate_polynomial();
        assert!(p.eval(&[q(1), q(1)]).unwrap().is_zero());
        assert!(p.eval(&[q(3), q(2)]).unwrap().is_zero());
    }

    #[test]
    fn furter() {
        assert!(verify_furter_recurrence(&q(1), &q(1), 20));
        assert!(verify_furter_recurrence(&q(2), &q(-3), 20));
        assert!(verify_furter_recurrence(&q(0), &q(0), 10));
        // a perturbed u sequence breaks it
        let mu = [q(2), q(-3)];
        let mut u: Vec<_> = (0..=6).map(|n| mif_u(&mu, n)).collect();
        u[4] += &q(1);
        assert!(!furter_residual(&mu[0], &mu[1], &u, 4).is_zero());
    }

    #[test]
    fn hypergeometric() {
        assert_eq!(p31_hypergeometric(1), UniPoly::from_ints(&[2]));
        assert_eq!(p31_hypergeometric(2), UniPoly::from_ints(&[12, 6]));
        assert!(verify_hypergeometric_form(20));
    }

    #[test]
    fn probe_examples() {
        let zero = bridge_probe_point(&[q(0), q(0)], 2);
        assert!(zero.u_window.iter().chain(&zero.l_window).all(Zero::is_zero));
        assert_eq!(zero.violation(), None);

        let grid: Vec<_> = (-2..=2).map(q).collect();
        let r = bridge_equivalence_probe(2, &grid, &[1, 2, 3]).unwrap();
        assert_eq!(r.points_scanned, 25);
        assert!(r.violations.is_empty());

        let grid: Vec<_> = (-1..=1).map(q).collect();
        let r = bridge_equivalence_probe(3, &grid, &[1]).unwrap();
        assert_eq!(r.points_scanned, 27);
        assert!(r.violations.is_empty());

        assert!(bridge_equivalence_probe(5, &grid, &[1]).is_err());
    }
}
