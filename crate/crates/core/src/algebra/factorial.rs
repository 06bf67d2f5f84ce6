//! Memoized factorials and friends.
//!
//! The table is process-wide and append-only: reads share a lock, growth
//! takes the write lock once per extension.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::scalar::GaussianRational;

static TABLE: RwLock<Vec<BigInt>> = RwLock::new(Vec::new());

pub fn factorial(n: usize) -> BigInt {
    {
        let table = TABLE.read().unwrap_or_else(|e| e.into_inner());
        if let Some(v) = table.get(n) {
            return v.clone();
        }
    }
    let mut table = TABLE.write().unwrap_or_else(|e| e.into_inner());
    if table.is_empty() {
        table.push(BigInt::one());
    }
    while table.len() <= n {
        let k = table.len();
        let next = &table[k - 1] * BigInt::from(k);
        table.push(next);
    }
    table[n].clone()
}

pub fn factorial_q(n: usize) -> GaussianRational {
    GaussianRational::from_int(factorial(n))
}

/// `binom(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Rising factorial `(x)_k = x (x+1) ... (x+k-1)`.
pub fn pochhammer(x: &BigRational, k: usize) -> BigRational {
    let mut acc = BigRational::one();
    let mut t = x.clone();
    for _ in 0..k {
        acc *= &t;
        t += BigRational::one();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let expect = [1u64, 1, 2, 6, 24, 120, 720, 5040];
        for (n, &v) in expect.iter().enumerate() {
            assert_eq!(factorial(n), BigInt::from(v));
        }
        assert_eq!(factorial(20), BigInt::from(2432902008176640000u64));
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(3, 5), BigInt::zero());
    }

    #[test]
    fn pochhammer_values() {
        let half = BigRational::new((-1).into(), 2.into());
        // (-1/2)(1/2)(3/2) = -3/8
        assert_eq!(pochhammer(&half, 3), BigRational::new((-3).into(), 8.into()));
        assert_eq!(pochhammer(&half, 0), BigRational::one());
        let neg = BigRational::from_integer((-2).into());
        assert_eq!(pochhammer(&neg, 3), BigRational::zero());
    }

    #[test]
    fn concurrent_growth() {
        let handles: Vec<_> = (0..8)
            .map(|i| std::thread::spawn(move || factorial(40 + i * 5)))
            .collect();
        for (i, h) in handles.into_iter().enumerate() {
            let got = h.join().unwrap();
            let want: BigInt = (1..=(40 + i * 5)).map(BigInt::from).product();
            assert_eq!(got, want);
        }
    }
}
