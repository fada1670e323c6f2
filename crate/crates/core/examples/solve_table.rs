// Solves a range of r and prints the rows.
//
// cargo run --release --example solve_table -- 1 1000

use std::error::Error;

use ap_squares::cli::{write_solutions, OutputFormat};
use ap_squares::solve_range;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    run(1, 500)
}

fn run(r_min: u64, r_max: u64) -> Result<(), Box<dyn Error>> {
    let rows = solve_range(r_min, r_max, false);
    println!("{} primitive solutions with prime n for {r_min} <= r <= {r_max}", rows.len());
    write_solutions(&rows, OutputFormat::Table, &mut std::io::stdout())?;
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>());
    let r_min = args.next().transpose()?.unwrap_or(1);
    let r_max = args.next().transpose()?.unwrap_or(500);
    run(r_min, r_max)
}
