//! The E family: (n!)^(m+1) u_n = L(f^n), and the reduction to nonzero multipliers.

use faclab::bridge::{bridge_sides, reduce_hat, EFamilyElement};
use faclab::functional::eval_l_power;
use faclab::GaussianRational;

fn main() -> Result<(), faclab::Error> {
    let el = EFamilyElement::new(vec![GaussianRational::from(1), "1/2-i".parse().unwrap(), GaussianRational::from(-3)]);
    println!("f = {}", el.expand());
    for n in 1..=5 {
        let (lhs, rhs) = bridge_sides(&el, n);
        println!("n={n}: {lhs} = {rhs}");
        assert_eq!(lhs, rhs);
    }

    let sparse = EFamilyElement::new(vec![GaussianRational::from(0), GaussianRational::from(2), GaussianRational::from(0)]);
    let hat = reduce_hat(&sparse)?;
    println!("{} reduces to {} in {} variable(s)", sparse.expand(), hat.expand(), hat.m_prime);
    for k in 1..=4 {
        println!("k={k}: L(f^k) = {}, L(hat^k) = {}", eval_l_power(&sparse.expand(), k), eval_l_power(&hat.expand(), k));
    }
    Ok(())
}
