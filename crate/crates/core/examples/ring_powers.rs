// Arithmetic in Z[√−6]: recovers the r = 2 row from γ = 3 + 2√−6.

use std::error::Error;

use ap_squares::lehmer::PairParams;
use ap_squares::QuadInt;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let gamma = QuadInt::new(3, 2);
    let cube = gamma.pow(3);
    println!("γ = {gamma}, N(γ) = {}", gamma.norm());
    println!("γ³ = {cube}");
    // γ³ = 3·(3x + 2√−6), so x = Re(γ³)/9 and y = N(γ)/3
    println!("x = {}, y = {}", &cube.a / 9, gamma.norm() / 3);

    let pair = PairParams::new(3, 2)?;
    println!(
        "(α+β)² = {:?}, αβ = {:?}, Lehmer pair: {}",
        pair.trace_squared(),
        pair.product(),
        pair.is_lehmer()
    );
    for k in [1, 3, 5, 7] {
        println!("  ũ_{k} = {}", pair.lehmer_term(k)?);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
