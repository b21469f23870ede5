use num_bigint::BigUint;
use thiserror::Error;

use crate::families::{Family, ReasonTag};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `d` is a perfect square (this includes 0 and 1).
    #[error("{0} is a perfect square")]
    PerfectSquare(BigUint),

    #[error("surd denominator must be nonzero")]
    ZeroDenominator,

    /// The state `(P + sqrt(d)) / Q` does not satisfy `Q | d - P^2`.
    #[error("surd state (P={p}, Q={q}) is not reduced for d={d}")]
    NotReduced { p: String, q: String, d: BigUint },

    #[error("right-hand side {0} is not one of 1, -1, 4, -4")]
    InvalidRhs(i64),

    #[error("Lucas parameters require k != 0, s != 0 and k^2 + 4s > 0 (got k={k}, s={s})")]
    InvalidLucasParams { k: String, s: String },

    #[error("parity laws are only stated for s = 1 or s = -1 (got s={0})")]
    ParityNeedsUnitS(String),

    #[error("k={k} is outside the range of the {family} family")]
    OutOfRange { family: Family, k: u64 },

    #[error("the {family} family only covers N = {supported}, not N = {rhs}")]
    UnsupportedRhs {
        family: Family,
        rhs: i64,
        supported: &'static str,
    },

    #[error("x^2 - {d}y^2 = {rhs} has no positive solution ({reason})")]
    Unsolvable {
        d: BigUint,
        rhs: i64,
        reason: Unsolvability,
    },

    /// The fundamental-solution search ran past its proven bound.
    #[error("search for x^2 - {d}y^2 = {rhs} exceeded its bound y <= {bound}")]
    InternalBoundExceeded { d: BigUint, rhs: i64, bound: BigUint },

    #[error("oracle bound y_max must be at least 1")]
    EmptyOracleRange,
}

/// Why an equation has no positive solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Unsolvability {
    /// Closed-form nonexistence result for a parameterized family.
    Family(ReasonTag),
    /// The continued fraction of sqrt(d) has even period length.
    PeriodLengthEven,
    /// Exhaustive search up to the proven bound found nothing.
    NoneUpToBound(BigUint),
    /// No convergent in two periods has the requested norm and no scaled
    /// unit exists.
    NoConvergentOrScaledUnit,
}

impl std::fmt::Display for Unsolvability {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Unsolvability::Family(tag) => write!(f, "{}", tag.citation()),
            Unsolvability::PeriodLengthEven => f.write_str("period length even"),
            Unsolvability::NoneUpToBound(b) => write!(f, "no solution with y <= {b}"),
            Unsolvability::NoConvergentOrScaledUnit => {
                f.write_str("no convergent has this norm and the +-1 equation is unsolvable")
            }
        }
    }
}
