// Cross-checks the solver against exhaustive search over y and n.

use std::error::Error;

use num_bigint::BigUint;

use ap_squares::solver::{brute_force_oracle, expand_composite, solve_r};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let (y_max, n_max) = (20_000u64, 21u32);
    let y_cap = BigUint::from(y_max);
    let mut agreed = 0;
    for r in 1..=60u64 {
        let solver: Vec<_> = expand_composite(&solve_r(r))
            .into_iter()
            .filter(|s| s.y <= y_cap && s.n <= n_max)
            .collect();
        let oracle = brute_force_oracle(r, y_max, n_max);
        if solver != oracle {
            return Err(format!("r = {r}: solver {solver:?} vs oracle {oracle:?}").into());
        }
        agreed += oracle.len();
        for s in &oracle {
            println!("{s}");
        }
    }
    println!("{agreed} rows agree for r <= 60, y <= {y_max}, n <= {n_max}");
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
