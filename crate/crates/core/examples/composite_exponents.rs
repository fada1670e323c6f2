// Composite exponents come from rows whose y is a perfect power.

use std::error::Error;

use ap_squares::cli::reference_table;
use ap_squares::ntheory::perfect_power;
use ap_squares::solver::expand_composite;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let table = reference_table();
    for row in &table {
        if let Some((b, e)) = perfect_power(&row.y) {
            println!("{row}: y = {b}^{e}");
        }
    }
    let expanded = expand_composite(&table);
    println!("{} rows, {} after composite expansion", table.len(), expanded.len());
    for row in expanded.iter().filter(|s| !table.contains(s)) {
        println!("  new: {row}");
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
