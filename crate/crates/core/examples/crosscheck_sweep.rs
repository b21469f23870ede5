//! Full family sweep: patterns, fundamentals, equivalence, search, nonexistence.
//!
//!     cargo run --release --example crosscheck_sweep -- 50

use pellcf::sweep::{run, SweepConfig};

fn main() -> pellcf::Result<()> {
    let k_max = std::env::args().nth(1).map_or(30, |s| s.parse().expect("k_max"));
    let report = run(SweepConfig { k_max, ..SweepConfig::default() })?;
    for s in &report.sections {
        let verdict = if s.passed() { "PASS" } else { "FAIL" };
        println!("{verdict} {} ({} checked)", s.name, s.checked);
        for f in &s.failures {
            println!("    {f}");
        }
    }
    std::process::exit(if report.passed() { 0 } else { 1 });
}
