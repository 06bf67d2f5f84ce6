//! L on powers of a few polynomials and the windowed membership test.

use faclab::expr::parse_poly;
use faclab::functional::{eval_l_power, in_fn, strong_scan};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = parse_poly("X1 - X2")?;
    for k in 1..=8 {
        println!("L(({f})^{k}) = {}", eval_l_power(&f, k));
    }

    let v = in_fn(&f, 3)?;
    println!("window at n=3: {:?} -> witness {:?}", v.values, v.witness_k);

    let g = parse_poly("X1^2*X2 - 2*X1*X2^2 + X3")?;
    let scan = strong_scan(&g, 6)?;
    let all = scan.iter().all(|v| v.member);
    println!("{g}: member of every window n = 1..=6: {all}");
    Ok(())
}
