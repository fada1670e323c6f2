// For one r, lists every signed divisor v, the quotient r' = r/v and the
// resulting cap on the prime exponent n.

use std::error::Error;

use ap_squares::lehmer::bound_b;
use ap_squares::solver::signed_divisors;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    run(4687)
}

fn run(r: u64) -> Result<(), Box<dyn Error>> {
    println!("r = {r}");
    for v in signed_divisors(r) {
        let r_prime = r as i64 / v;
        let b = bound_b(r_prime, v)?;
        let exps = b.odd_prime_exponents();
        println!(
            "  v = {v:>6}  r' = {r_prime:>6}  B = {:>5}  contributors {:?}  ({} odd prime exponents)",
            b.bound,
            b.contributors,
            exps.len()
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    let r = std::env::args().nth(1).map(|a| a.parse()).transpose()?.unwrap_or(4687);
    run(r)
}
