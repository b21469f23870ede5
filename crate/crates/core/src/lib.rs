//! Exact solver for the Pell equations `x^2 - d y^2 = N`, `N` in `{1, -1, 4, -4}`.
//!
//! * [`arith`]: integer square roots and the `(P + sqrt(d)) / Q` state.
//! * [`contfrac`]: periodic expansion of `sqrt(d)` and its convergents.
//! * [`lucas`]: the sequences `U_n(k, s)` and `V_n(k, s)`.
//! * [`pell`]: fundamental solutions and enumeration for any non-square `d`.
//! * [`families`]: closed forms for `d = k^2 +- 4` and `d = k^2 +- 1`.
//! * [`oracle`]: exhaustive search used to certify the above.
//! * [`sweep`] and [`cli`]: the batch verification and command front end.
//!
//! ```
//! use pellcf::pell::{solutions, PellProblem, PellSolution, Rhs};
//!
//! let problem = PellProblem::new(13u32, Rhs::MinusOne).unwrap();
//! let sols = solutions(&problem, 2).unwrap();
//! assert_eq!(sols[0], PellSolution::new(18u32, 5u32));
//! assert_eq!(sols[1], PellSolution::new(23382u32, 6485u32));
//! ```

pub mod arith;
pub mod cli;
pub mod contfrac;
pub mod error;
pub mod families;
pub mod lucas;
pub mod oracle;
pub mod pell;
pub mod sweep;

pub use error::{Error, Result};
