//! Exact arithmetic well past 64 bits.

use num_bigint::BigUint;
use pellcf::contfrac::expand_sqrt;
use pellcf::pell::{self, PellProblem, Rhs};

fn main() -> pellcf::Result<()> {
    let m = BigUint::from(10u32).pow(30);
    let d = &m * &m + 1u32;
    println!("sqrt({d}) = {}", expand_sqrt(&d)?);

    let problem = PellProblem::new(1_000_099u64, Rhs::One)?;
    let fund = pell::fundamental(&problem)?.expect("N=1 is always solvable");
    println!("{problem}: x has {} digits", fund.x.to_string().len());
    assert!(pell::verify(&problem, &fund));
    Ok(())
}
