//! Inverse coefficients of X(1 - 2X - X^3) by four routes, and a Catalan check.

use faclab::algebra::{binomial, GaussianRational};
use faclab::inversion::{additive_series, aif_u, lagrange_u, mif_u, multiplicative_series, series_inverse, InverseCoefficients};

fn main() -> Result<(), faclab::Error> {
    let q = GaussianRational::from;
    let alpha = [q(2), q(0), q(1)];
    let order = 10;
    let a = additive_series(&alpha, order + 1);
    let direct = InverseCoefficients::from_inverse(&series_inverse(&a, order + 1)?);
    for n in 1..=order {
        let (d, f, l) = (direct.get(n).unwrap(), aif_u(&alpha, n), lagrange_u(&a, n)?);
        assert!(*d == f && f == l);
        println!("u_{n} = {d}");
    }

    let mu = [q(1), GaussianRational::from_frac(-1, 2)];
    let b = multiplicative_series(&mu, order + 1);
    let inv = InverseCoefficients::from_inverse(&series_inverse(&b, order + 1)?);
    assert!((1..=order).all(|n| inv.get(n) == Some(&mif_u(&mu, n))));
    println!("product form with mu = [1, -1/2] agrees up to n = {order}");

    let cat = series_inverse(&additive_series(&[q(1)], 16), 16)?;
    for k in 0..=15 {
        let c = GaussianRational::from_int(binomial(2 * k, k)) / GaussianRational::from(k as i64 + 1);
        assert_eq!(cat.coeff(k + 1), &c);
    }
    println!("inverse of X - X^2: {:?}", &cat.coeffs()[1..8]);
    Ok(())
}
