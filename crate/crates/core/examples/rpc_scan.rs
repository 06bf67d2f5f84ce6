//! Common roots of consecutive P_{a,b,n}, with a synthetic positive case.

use faclab::functional::eval_l_power;
use faclab::two_monomials::{counterexample_from_root, lemma33_sides, pab_poly, rpc_scan, ExponentPair};
use faclab::GaussianRational;

fn main() -> Result<(), faclab::Error> {
    let pair = ExponentPair::new([2, 1], [1, 2])?;
    for n in 0..=3 {
        println!("P_{n} = {}", pab_poly(&pair, n));
    }
    let (mu1, mu2) = (GaussianRational::from(2), "1+i".parse::<GaussianRational>().unwrap());
    let (l, r) = lemma33_sides(&pair, &mu1, &mu2, 3)?;
    println!("L(f^3) = {l} = {r}");

    // -1 is a root of P_1 = 2 + 2X alone, so only L(f^1) vanishes
    let f = counterexample_from_root(&pair, &GaussianRational::from(-1));
    println!("f = {f}: L(f) = {}, L(f^2) = {}", eval_l_power(&f, 1), eval_l_power(&f, 2));

    let findings = rpc_scan(2, 6);
    println!("pairs with entries <= 2, n <= 6: {} findings", findings.len());
    Ok(())
}
