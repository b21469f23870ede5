//! Fundamental solution and the first few solutions of x^2 - d y^2 = N.
//!
//!     cargo run --example solve_pell -- 61 1 3

use pellcf::pell::{self, PellProblem, Rhs};

fn main() -> pellcf::Result<()> {
    let mut args = std::env::args().skip(1);
    let d: u64 = args.next().map_or(61, |s| s.parse().expect("d"));
    let n: i64 = args.next().map_or(1, |s| s.parse().expect("N"));
    let count: usize = args.next().map_or(3, |s| s.parse().expect("count"));

    let problem = PellProblem::new(d, Rhs::try_from(n)?)?;
    match pell::fundamental_certified(&problem)? {
        None => println!("{problem}: no solutions"),
        Some(f) => {
            println!("{problem}");
            println!("fundamental {} ({})", f.solution, f.certificate);
            for (i, s) in pell::solutions(&problem, count)?.iter().enumerate() {
                println!("  {}: {s}", i + 1);
            }
        }
    }
    Ok(())
}
