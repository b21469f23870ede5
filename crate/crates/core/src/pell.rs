//! Solvability, fundamental solutions and enumeration of `x^2 - d y^2 = N`
//! for `N` in `{1, -1, 4, -4}`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::arith::{exact_sqrt, nonsquare_root};
use crate::contfrac::{convergent, expand_sqrt, SqrtCF};
use crate::error::{Error, Result, Unsolvability};

/// The right-hand side `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rhs {
    One,
    MinusOne,
    Four,
    MinusFour,
}

impl Rhs {
    pub const ALL: [Rhs; 4] = [Rhs::One, Rhs::MinusOne, Rhs::Four, Rhs::MinusFour];

    pub fn value(self) -> i64 {
        match self {
            Rhs::One => 1,
            Rhs::MinusOne => -1,
            Rhs::Four => 4,
            Rhs::MinusFour => -4,
        }
    }

    pub fn is_negative(self) -> bool {
        self.value() < 0
    }

    /// `+-1` with the same sign.
    pub fn unit(self) -> Rhs {
        if self.is_negative() {
            Rhs::MinusOne
        } else {
            Rhs::One
        }
    }
}

impl TryFrom<i64> for Rhs {
    type Error = Error;

    fn try_from(n: i64) -> Result<Rhs> {
        match n {
            1 => Ok(Rhs::One),
            -1 => Ok(Rhs::MinusOne),
            4 => Ok(Rhs::Four),
            -4 => Ok(Rhs::MinusFour),
            other => Err(Error::InvalidRhs(other)),
        }
    }
}

impl fmt::Display for Rhs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// `x^2 - d y^2 = N` with `d >= 2` non-square.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PellProblem {
    d: BigUint,
    rhs: Rhs,
}

impl PellProblem {
    pub fn new(d: impl Into<BigUint>, rhs: Rhs) -> Result<Self> {
        let d = d.into();
        nonsquare_root(&d)?;
        Ok(PellProblem { d, rhs })
    }

    pub fn d(&self) -> &BigUint {
        &self.d
    }

    pub fn rhs(&self) -> Rhs {
        self.rhs
    }

    fn unsolvable(&self, reason: Unsolvability) -> Error {
        Error::Unsolvable {
            d: self.d.clone(),
            rhs: self.rhs.value(),
            reason,
        }
    }
}

impl fmt::Display for PellProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^2 - {}y^2 = {}", self.d, self.rhs)
    }
}

/// A positive solution `x + y sqrt(d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PellSolution {
    pub x: BigUint,
    pub y: BigUint,
}

impl PellSolution {
    pub fn new(x: impl Into<BigUint>, y: impl Into<BigUint>) -> Self {
        PellSolution {
            x: x.into(),
            y: y.into(),
        }
    }

    /// `x^2 - d y^2`.
    pub fn norm(&self, d: &BigUint) -> BigInt {
        BigInt::from(&self.x * &self.x) - BigInt::from(d * &self.y * &self.y)
    }

    fn mul(&self, other: &PellSolution, d: &BigUint) -> PellSolution {
        PellSolution {
            x: &self.x * &other.x + d * &self.y * &other.y,
            y: &self.x * &other.y + &self.y * &other.x,
        }
    }

    fn square(&self, d: &BigUint) -> PellSolution {
        self.mul(self, d)
    }

    /// Divides both coordinates by `2^shift`, panicking if that is not exact.
    fn halve(self, shift: u64) -> PellSolution {
        if shift == 0 {
            return self;
        }
        let mask = (BigUint::one() << shift) - 1u32;
        assert!(
            (&self.x & &mask).is_zero() && (&self.y & &mask).is_zero(),
            "generator lost exactness: ({}, {}) not divisible by 2^{shift}",
            self.x,
            self.y
        );
        PellSolution {
            x: self.x >> shift,
            y: self.y >> shift,
        }
    }
}

impl fmt::Display for PellSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Exact check of `x^2 - d y^2 = N`.
pub fn verify(problem: &PellProblem, sol: &PellSolution) -> bool {
    sol.norm(&problem.d) == BigInt::from(problem.rhs.value())
}

/// `x^2 - d y^2 = -1` is solvable iff the period of `sqrt(d)` is odd.
pub fn is_negative_one_solvable(d: &BigUint) -> Result<bool> {
    Ok(expand_sqrt(d)?.period_length() % 2 == 1)
}

/// What guarantees that a fundamental solution is the smallest one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Certificate {
    /// `N = +-1`: read off convergent `p_{l-1}` or `p_{2l-1}`.
    ContinuedFraction,
    /// `N = 4` and `a > b^2 - 2`.
    NormFourBound,
    /// `|N| < sqrt(d)`: every primitive solution is a convergent, every
    /// imprimitive one is twice a solution of `N/4`.
    ConvergentScan,
    /// Exhaustive search in `y` up to a proven bound.
    ExhaustiveSearch,
}

impl Certificate {
    pub fn describe(self) -> &'static str {
        match self {
            Certificate::ContinuedFraction => "continued fraction period",
            Certificate::NormFourBound => "N=4 bound a > b^2 - 2",
            Certificate::ConvergentScan => "convergent scan (|N| < sqrt d)",
            Certificate::ExhaustiveSearch => "exhaustive search to proven bound",
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.describe())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fundamental {
    pub solution: PellSolution,
    pub certificate: Certificate,
}

/// The smallest positive solution, or `None` when there is none.
pub fn fundamental(problem: &PellProblem) -> Result<Option<PellSolution>> {
    Ok(fundamental_certified(problem)?.map(|f| f.solution))
}

/// Like [`fundamental`] but also says why the answer is minimal.
pub fn fundamental_certified(problem: &PellProblem) -> Result<Option<Fundamental>> {
    let cf = expand_sqrt(&problem.d)?;
    let found = match problem.rhs {
        Rhs::One | Rhs::MinusOne => unit_fundamental(&cf, problem.rhs).map(|solution| Fundamental {
            solution,
            certificate: Certificate::ContinuedFraction,
        }),
        Rhs::Four | Rhs::MinusFour => four_fundamental(&cf, problem)?,
    };
    if let Some(f) = &found {
        assert!(verify(problem, &f.solution));
    }
    Ok(found)
}

fn unit_fundamental(cf: &SqrtCF, rhs: Rhs) -> Option<PellSolution> {
    let l = cf.period_length();
    let index = match (rhs, l % 2 == 0) {
        (Rhs::One, true) => l - 1,
        (Rhs::One, false) => 2 * l - 1,
        (Rhs::MinusOne, false) => l - 1,
        (Rhs::MinusOne, true) => return None,
        _ => unreachable!("unit_fundamental called with N = +-4"),
    };
    let c = convergent(cf, index);
    Some(PellSolution::new(c.p, c.q))
}

// d <= 16 is exactly the range where |N| = 4 >= sqrt(d).
const CONVERGENT_SCAN_MIN_D: u32 = 17;

fn four_fundamental(cf: &SqrtCF, problem: &PellProblem) -> Result<Option<Fundamental>> {
    let d = &problem.d;
    let target = BigInt::from(problem.rhs.value());
    let scaled_unit = unit_fundamental(cf, problem.rhs.unit()).map(|s| PellSolution {
        x: s.x << 1u32,
        y: s.y << 1u32,
    });

    let found = if *d >= BigUint::from(CONVERGENT_SCAN_MIN_D) {
        // p_n^2 - d q_n^2 is periodic in n with period l up to sign, so two
        // periods see every norm that ever occurs.
        let primitive = cf
            .convergents()
            .take(2 * cf.period_length())
            .find(|c| BigInt::from(&c.p * &c.p) - BigInt::from(d * &c.q * &c.q) == target)
            .map(|c| PellSolution::new(c.p, c.q));
        let best = match (primitive, scaled_unit) {
            (Some(a), Some(b)) => Some(if a.y <= b.y { a } else { b }),
            (a, b) => a.or(b),
        };
        best.map(|solution| Fundamental {
            certificate: Certificate::ConvergentScan,
            solution,
        })
    } else {
        // 2(x1, y1) from the +-1 equation (or from N=1 when -1 is unsolvable)
        // bounds the search.
        let bound_from = match &scaled_unit {
            Some(s) => s.y.clone(),
            None => {
                unit_fundamental(cf, Rhs::One)
                    .expect("x^2 - dy^2 = 1 is always solvable")
                    .y
                    << 1u32
            }
        };
        search_by_y(d, problem.rhs, &bound_from).map(|solution| Fundamental {
            certificate: Certificate::ExhaustiveSearch,
            solution,
        })
    };

    Ok(found.map(|mut f| {
        if problem.rhs == Rhs::Four && satisfies_norm_four_bound(&f.solution) {
            f.certificate = Certificate::NormFourBound;
        }
        f
    }))
}

fn search_by_y(d: &BigUint, rhs: Rhs, bound: &BigUint) -> Option<PellSolution> {
    let mut y = BigUint::one();
    while y <= *bound {
        let dy2 = BigInt::from(d * &y * &y) + rhs.value();
        if let Some(x) = dy2.to_biguint().as_ref().and_then(exact_sqrt) {
            if !x.is_zero() {
                return Some(PellSolution { x, y });
            }
        }
        y += 1u32;
    }
    None
}

/// `a > b^2 - 2` for a solution `(a, b)` of `x^2 - d y^2 = 4`, which makes it
/// the fundamental one.
pub fn satisfies_norm_four_bound(sol: &PellSolution) -> bool {
    BigInt::from(sol.x.clone()) > BigInt::from(&sol.y * &sol.y) - 2
}

/// Ascending positive solutions generated from the fundamental one.
///
/// * `N = 1`:  `s_{n+1} = s_n s_1`
/// * `N = -1`: `s_{n+1} = s_n s_1^2`
/// * `N = 4`:  `s_{n+1} = s_n s_1 / 2`
/// * `N = -4`: `s_{n+1} = s_n t / 2` with `t = s_1^2 / 2`
///
/// Every halving is checked for exactness.
#[derive(Debug, Clone)]
pub struct Solutions {
    d: BigUint,
    step: PellSolution,
    halve: bool,
    current: Option<PellSolution>,
}

impl Solutions {
    pub fn new(problem: &PellProblem) -> Result<Self> {
        let first = fundamental(problem)?.ok_or_else(|| {
            problem.unsolvable(match problem.rhs {
                Rhs::MinusOne => Unsolvability::PeriodLengthEven,
                _ => Unsolvability::NoConvergentOrScaledUnit,
            })
        })?;
        Ok(Self::from_fundamental(problem, first))
    }

    pub fn from_fundamental(problem: &PellProblem, first: PellSolution) -> Self {
        let d = problem.d.clone();
        let (step, halve) = match problem.rhs {
            Rhs::One => (first.clone(), false),
            Rhs::MinusOne => (first.square(&d), false),
            Rhs::Four => (first.clone(), true),
            Rhs::MinusFour => (first.square(&d).halve(1), true),
        };
        Solutions {
            d,
            step,
            halve,
            current: Some(first),
        }
    }
}

impl Iterator for Solutions {
    type Item = PellSolution;

    fn next(&mut self) -> Option<PellSolution> {
        let cur = self.current.take()?;
        let next = cur.mul(&self.step, &self.d);
        self.current = Some(if self.halve { next.halve(1) } else { next });
        Some(cur)
    }
}

/// The first `count` positive solutions in ascending order.
pub fn solutions(problem: &PellProblem, count: usize) -> Result<Vec<PellSolution>> {
    let out: Vec<_> = Solutions::new(problem)?.take(count).collect();
    debug_assert!(out.iter().all(|s| verify(problem, s)));
    Ok(out)
}

/// All generated solutions with `y <= y_max`.
pub fn solutions_up_to(problem: &PellProblem, y_max: &BigUint) -> Result<Vec<PellSolution>> {
    match Solutions::new(problem) {
        Ok(it) => Ok(it.take_while(|s| s.y <= *y_max).collect()),
        Err(Error::Unsolvable { .. }) => Ok(Vec::new()),
        Err(e) => Err(e),
    }
}

fn power(base: &PellSolution, mut e: u64, d: &BigUint) -> PellSolution {
    let mut acc = PellSolution::new(1u32, 0u32);
    let mut b = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&b, d);
        }
        e >>= 1;
        if e > 0 {
            b = b.square(d);
        }
    }
    acc
}

/// The same solutions as [`solutions`], each computed independently by binary
/// powering of the fundamental solution:
/// `s^n`, `s^(2n-1)`, `s^n / 2^(n-1)` and `s^(2n-1) / 4^(n-1)`.
pub fn solutions_by_powering(problem: &PellProblem, count: usize) -> Result<Vec<PellSolution>> {
    let first = fundamental(problem)?.ok_or_else(|| {
        problem.unsolvable(match problem.rhs {
            Rhs::MinusOne => Unsolvability::PeriodLengthEven,
            _ => Unsolvability::NoConvergentOrScaledUnit,
        })
    })?;
    let d = &problem.d;
    Ok((1..=count as u64)
        .map(|n| match problem.rhs {
            Rhs::One => power(&first, n, d),
            Rhs::MinusOne => power(&first, 2 * n - 1, d),
            Rhs::Four => power(&first, n, d).halve(n - 1),
            Rhs::MinusFour => power(&first, 2 * n - 1, d).halve(2 * (n - 1)),
        })
        .collect())
}

/// `(fundamental of N = -1)^2`.
pub fn square_in_ring(sol: &PellSolution, d: &BigUint) -> PellSolution {
    sol.square(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn problem(d: u64, n: i64) -> PellProblem {
        PellProblem::new(d, Rhs::try_from(n).unwrap()).unwrap()
    }

    fn sol(x: u64, y: u64) -> PellSolution {
        PellSolution::new(x, y)
    }

    #[test]
    fn rhs_parsing() {
        assert_eq!(Rhs::try_from(-4).unwrap(), Rhs::MinusFour);
        assert_eq!(Rhs::try_from(2), Err(Error::InvalidRhs(2)));
    }

    #[test]
    fn problem_rejects_squares() {
        assert!(matches!(
            PellProblem::new(9u32, Rhs::One),
            Err(Error::PerfectSquare(_))
        ));
    }

    #[test]
    fn negative_one_solvability() {
        let b = |d: u64| is_negative_one_solvable(&BigUint::from(d)).unwrap();
        assert!(!b(3));
        assert!(b(5));
        assert!(b(13));
    }

    #[test]
    fn fundamentals() {
        let cases: [(u64, i64, Option<(u64, u64)>); 7] = [
            (5, -1, Some((2, 1))),
            (5, 1, Some((9, 4))),
            (13, -1, Some((18, 5))),
            (5, 4, Some((3, 1))),
            (5, -4, Some((1, 1))),
            (7, -4, None),
            (8, 1, Some((3, 1))),
        ];
        for (d, n, expected) in cases {
            assert_eq!(
                fundamental(&problem(d, n)).unwrap(),
                expected.map(|(x, y)| sol(x, y)),
                "d={d} N={n}"
            );
        }
    }

    #[test]
    fn certificates() {
        let f = fundamental_certified(&problem(5, 4)).unwrap().unwrap();
        assert_eq!(f.certificate, Certificate::NormFourBound);
        let f = fundamental_certified(&problem(13, -4)).unwrap().unwrap();
        assert_eq!(f.certificate, Certificate::ExhaustiveSearch);
        assert_eq!(f.solution, sol(3, 1));
        let f = fundamental_certified(&problem(29, -4)).unwrap().unwrap();
        assert_eq!(f.certificate, Certificate::ConvergentScan);
        assert_eq!(f.solution, sol(5, 1));
        let f = fundamental_certified(&problem(2, -1)).unwrap().unwrap();
        assert_eq!(f.certificate, Certificate::ContinuedFraction);
    }

    #[test]
    fn imprimitive_four_solution() {
        // d = 3: x^2 - 3y^2 = 4 is solved first by 2 * (2, 1)
        assert_eq!(fundamental(&problem(3, 4)).unwrap(), Some(sol(4, 2)));
        // d = 41 has no primitive N=4 convergent; 2 * (32, 5) is the answer
        assert_eq!(fundamental(&problem(41, -4)).unwrap(), Some(sol(64, 10)));
    }

    #[test]
    fn enumerations() {
        assert_eq!(
            solutions(&problem(2, 1), 3).unwrap(),
            vec![sol(3, 2), sol(17, 12), sol(99, 70)]
        );
        assert_eq!(
            solutions(&problem(5, 1), 2).unwrap(),
            vec![sol(9, 4), sol(161, 72)]
        );
        assert_eq!(
            solutions(&problem(5, -4), 3).unwrap(),
            vec![sol(1, 1), sol(4, 2), sol(11, 5)]
        );
        assert_eq!(
            solutions(&problem(13, -1), 2).unwrap(),
            vec![sol(18, 5), sol(23382, 6485)]
        );
        assert_eq!(
            solutions(&problem(5, 4), 2).unwrap(),
            vec![sol(3, 1), sol(7, 3)]
        );
    }

    #[test]
    fn unsolvable_reports_reason() {
        let err = solutions(&problem(3, -1), 1).unwrap_err();
        assert_eq!(
            err,
            Error::Unsolvable {
                d: BigUint::from(3u32),
                rhs: -1,
                reason: Unsolvability::PeriodLengthEven
            }
        );
        assert!(err.to_string().contains("period length even"));
    }

    #[test]
    fn verify_examples() {
        assert!(verify(&problem(5, -1), &sol(2, 1)));
        assert!(!verify(&problem(5, 1), &sol(2, 1)));
        assert!(verify(&problem(8, 4), &sol(6, 2)));
    }

    #[test]
    fn powering_matches_recurrence() {
        for (d, n) in [(2, 1), (13, -1), (5, 4), (5, -4), (21, 4), (29, -4)] {
            let p = problem(d, n);
            assert_eq!(
                solutions(&p, 8).unwrap(),
                solutions_by_powering(&p, 8).unwrap(),
                "d={d} N={n}"
            );
        }
    }
}
