// Builds the polynomial in u for (n, v, r) and extracts its integer roots.
//
// cargo run --example integer_roots -- 11 1 4687

use std::error::Error;

use ap_squares::rootfind::{build_poly, integer_roots, root_bound, roots_mod_prime};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    run(11, 1, 4687)
}

fn run(n: u32, v: i64, r: u64) -> Result<(), Box<dyn Error>> {
    let poly = build_poly(n, v, r)?;
    println!("(n, v, r) = ({n}, {v}, {r}): degree {}", poly.degree());
    println!("leading coefficient {}, constant {}", poly.leading(), poly.coeffs()[0]);
    println!("root bound {}", root_bound(&poly));
    for p in [5, 7, 11, 13] {
        println!("  roots mod {p}: {:?}", roots_mod_prime(n, v, r, p)?);
    }
    let roots = integer_roots(n, v, r)?;
    println!("integer roots: {roots:?}");
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match &args[..] {
        [n, v, r] => run(n.parse()?, v.parse()?, r.parse()?),
        _ => run_example(),
    }
}
