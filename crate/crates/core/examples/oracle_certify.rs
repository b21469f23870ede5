//! Compares generated solutions with a brute-force search over y.

use num_bigint::BigUint;
use pellcf::oracle::{brute_solutions_par, OracleQuery};
use pellcf::pell::{self, PellProblem, Rhs};

fn main() -> pellcf::Result<()> {
    let y_max = 100_000;
    for (d, rhs) in [(13u64, Rhs::MinusFour), (21, Rhs::Four), (41, Rhs::MinusOne), (46, Rhs::One)] {
        let problem = PellProblem::new(d, rhs)?;
        let generated = pell::solutions_up_to(&problem, &BigUint::from(y_max))?;
        let brute = brute_solutions_par(&OracleQuery::new(d, rhs, y_max)?);
        println!(
            "{problem}: {} generated, {} by search, {}",
            generated.len(),
            brute.len(),
            if generated == brute { "agree" } else { "DISAGREE" }
        );
    }
    Ok(())
}
