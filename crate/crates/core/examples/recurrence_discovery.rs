//! Ansatz search for recurrences of P_{a,b,n} in n with coefficients in ℚ[n, X].

use faclab::two_monomials::{apply_recurrence, discover_recurrence, pab_poly, printed_recurrence_a11_b00, ExponentPair, RecurrenceAnsatz};

fn main() -> Result<(), faclab::Error> {
    let pair = ExponentPair::new([1, 1], [0, 0])?;
    let fam = |n: usize| pab_poly(&pair, n);
    let printed = printed_recurrence_a11_b00();
    for n in 0..4 {
        println!("{printed} at n={n}: {}", apply_recurrence(&printed, &fam, n));
    }
    for order in 2..=3 {
        let ansatz = RecurrenceAnsatz { order, deg_n: 2, deg_x: 1 };
        match discover_recurrence(&pair, ansatz, 10)? {
            None => println!("order {order}: none"),
            Some(d) => println!("order {order}: {} (checked on n = {}..={})", d.recurrence, d.verified.0, d.verified.1),
        }
    }
    Ok(())
}
