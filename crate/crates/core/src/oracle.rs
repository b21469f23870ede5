//! Exhaustive search over `y`, independent of the continued-fraction code.

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;

use crate::arith::{exact_sqrt, nonsquare_root};
use crate::error::{Error, Result};
use crate::pell::{PellSolution, Rhs};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleQuery {
    pub d: BigUint,
    pub rhs: Rhs,
    pub y_max: u64,
}

impl OracleQuery {
    pub fn new(d: impl Into<BigUint>, rhs: Rhs, y_max: u64) -> Result<Self> {
        let d = d.into();
        nonsquare_root(&d)?;
        if y_max == 0 {
            return Err(Error::EmptyOracleRange);
        }
        Ok(OracleQuery { d, rhs, y_max })
    }
}

fn solution_at(d: &BigUint, rhs: i64, y: u64) -> Option<PellSolution> {
    let y = BigUint::from(y);
    let x2 = BigInt::from(d * &y * &y) + rhs;
    let x = exact_sqrt(&x2.to_biguint()?)?;
    // x = 0 would need d y^2 = -N with d non-square
    Some(PellSolution { x, y })
}

/// Every positive `(x, y)` with `y <= y_max`, ascending by `y`.
pub fn brute_solutions(q: &OracleQuery) -> Vec<PellSolution> {
    let rhs = q.rhs.value();
    (1..=q.y_max)
        .filter_map(|y| solution_at(&q.d, rhs, y))
        .collect()
}

const CHUNK: u64 = 4096;

/// Same output as [`brute_solutions`], scanned in parallel chunks of `y` and
/// merged back in order.
pub fn brute_solutions_par(q: &OracleQuery) -> Vec<PellSolution> {
    let rhs = q.rhs.value();
    let chunks = q.y_max.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = c * CHUNK + 1;
            let hi = ((c + 1) * CHUNK).min(q.y_max);
            (lo..=hi)
                .filter_map(|y| solution_at(&q.d, rhs, y))
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Checks that no solution with `y < sol.y` exists.
pub fn is_minimal(d: &BigUint, rhs: Rhs, sol: &PellSolution) -> bool {
    let below: u64 = match u64::try_from(&sol.y) {
        Ok(y) => y - 1,
        Err(_) => return false,
    };
    (1..=below).all(|y| solution_at(d, rhs.value(), y).is_none())
}
