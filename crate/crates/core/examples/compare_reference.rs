// Compares a solved range against the bundled reference table.

use std::error::Error;

use ap_squares::cli::{compare, reference_table};
use ap_squares::solve_range;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    run(1500)
}

fn run(r_max: u64) -> Result<(), Box<dyn Error>> {
    let found = solve_range(1, r_max, false);
    let reference: Vec<_> = reference_table().into_iter().filter(|s| s.r <= r_max).collect();
    let cmp = compare(&found, &reference);
    println!(
        "r <= {r_max}: {} matched, {} missing, {} extra",
        cmp.matched,
        cmp.missing.len(),
        cmp.extra.len()
    );
    if !cmp.is_exact() {
        return Err("table mismatch".into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    let r_max = std::env::args().nth(1).map(|a| a.parse()).transpose()?.unwrap_or(5000);
    run(r_max)
}
