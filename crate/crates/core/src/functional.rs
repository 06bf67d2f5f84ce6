//! The factorial functional `L(X1^l1 ... Xm^lm) = l1! ... lm!` and the
//! windowed membership tests built on it.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{factorial, GaussianRational, MultiPoly, PowerCache};
use crate::error::{Error, Result};

/// Applies `L` termwise. Linear in `f`.
pub fn eval_l(f: &MultiPoly) -> GaussianRational {
    f.terms()
        .map(|(e, c)| {
            let w: num_bigint::BigInt = e.as_slice().iter().map(|&l| factorial(l as usize)).product();
            c * &GaussianRational::from_int(w)
        })
        .sum()
}

/// `L(f^k)` from the full expansion of `f^k`.
pub fn eval_l_power(f: &MultiPoly, k: u32) -> GaussianRational {
    eval_l(&f.pow(k))
}

/// Outcome of testing `f` against the window `{n, ..., n + N(f) - 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipVerdict {
    pub member: bool,
    /// Smallest `k` in the window with `L(f^k) != 0`.
    pub witness_k: Option<u32>,
    pub window_start: u32,
    pub window_len: usize,
    /// `L(f^n), ..., L(f^(n + N(f) - 1))`, always complete.
    pub values: Vec<GaussianRational>,
}

fn check_start(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("window start n must be at least 1".into()));
    }
    Ok(())
}

fn verdict_from_cache(cache: &mut PowerCache, n: u32) -> MembershipVerdict {
    let len = cache.base().num_terms();
    let values: Vec<_> = (0..len as u32).map(|i| eval_l(cache.get((n + i) as usize))).collect();
    let witness_k = values.iter().position(|v| !v.is_zero()).map(|i| n + i as u32);
    MembershipVerdict {
        member: len == 0 || witness_k.is_some(),
        witness_k,
        window_start: n,
        window_len: len,
        values,
    }
}

/// Membership of `f` in the set of polynomials with a nonzero `L(f^k)` in
/// the length-`N(f)` window starting at `n` (zero is always a member).
pub fn in_fn(f: &MultiPoly, n: u32) -> Result<MembershipVerdict> {
    check_start(n)?;
    Ok(verdict_from_cache(&mut PowerCache::new(f.clone()), n))
}

/// [`in_fn`] for every `n` in `1..=n_max`, sharing one power cache.
pub fn strong_scan(f: &MultiPoly, n_max: u32) -> Result<Vec<MembershipVerdict>> {
    check_start(n_max)?;
    let mut cache = PowerCache::new(f.clone());
    Ok((1..=n_max).map(|n| verdict_from_cache(&mut cache, n)).collect())
}
