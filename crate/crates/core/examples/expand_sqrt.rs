//! Continued-fraction expansion of sqrt(d) with its first convergents.
//!
//!     cargo run --example expand_sqrt -- 94

use num_bigint::BigUint;
use pellcf::contfrac::expand_sqrt;

fn main() -> pellcf::Result<()> {
    let d: BigUint = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "94".into())
        .parse()
        .expect("d must be a non-negative integer");
    let cf = expand_sqrt(&d)?;
    println!("sqrt({d}) = {cf}");
    println!("period length {}", cf.period_length());
    for c in cf.convergents().take(cf.period_length() + 1) {
        println!("  p_{0}/q_{0} = {1}/{2}", c.n, c.p, c.q);
    }
    Ok(())
}
