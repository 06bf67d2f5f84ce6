//! P_n(X) = Σ (2n-k)!/((n-2k)! k!) X^k: recurrence, certificate, 2F1 form and the μ-recurrence.

use faclab::bridge::{p31_poly, verify_certificate_identity, verify_furter_recurrence, verify_hypergeometric_form, verify_p31_recurrence};
use faclab::GaussianRational;

fn main() {
    for n in 0..=5 {
        println!("P_{n} = {}", p31_poly(n));
    }
    println!("three-term recurrence, n <= 40: {}", verify_p31_recurrence(40));
    println!("certificate expands to zero: {}", verify_certificate_identity());
    println!("2F1 form, n <= 20: {}", verify_hypergeometric_form(20));
    let (m1, m2) = (GaussianRational::from(3), GaussianRational::from_frac(-2, 5));
    println!("mu-recurrence for ({m1}, {m2}), n <= 20: {}", verify_furter_recurrence(&m1, &m2, 20));
}
