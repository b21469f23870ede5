//! Closed-form solutions for `d = k^2 + 4, k^2 - 4, k^2 + 1, k^2 - 1` (and the
//! nonexistence result for `k^2 - k`), expressed through `U_n(k', s')` and
//! `V_n(k', s')`, with a cross-check against the generic solver.
//!
//! | family   | `k`      | `N = 1`                 | `N = -1`                  | `N = 4`          | `N = -4`             |
//! |----------|----------|-------------------------|---------------------------|------------------|----------------------|
//! | `k^2+4`  | `k > 1`  | `V_{2n}/2, U_{2n}/2` (even k), `V_{6n}/2, U_{6n}/2` (odd k) over `(k, 1)` | `V_{6n-3}/2, U_{6n-3}/2` (odd k) | `V_{2n}, U_{2n}` | `V_{2n-1}, U_{2n-1}` |
//! | `k^2-4`  | `k > 3`  | `V_{2n}/2, U_{2n}/2` (even k), `V_{3n}/2, U_{3n}/2` (odd k) over `(k, -1)` | none | `V_n, U_n` | none |
//! | `k^2+1`  | `k >= 1` | `V_{2n}/2, U_{2n}` over `(2k, 1)` | `V_{2n-1}/2, U_{2n-1}` | `V_{2n}, 2U_{2n}` (k != 2) | `V_{2n-1}, 2U_{2n-1}` (k != 2) |
//! | `k^2-1`  | `k > 1`  | `V_n/2, U_n` over `(2k, -1)` | none | `V_n, 2U_n` | none (k != 3) |
//! | `k^2-k`  | `k > 2`  | -                       | none                      | -                | -                    |
//!
//! `d = 5` (`k^2 + 1` with `k = 2`) is answered with Fibonacci and Lucas
//! numbers: `(L_{6n}/2, F_{6n}/2)`, `(L_{6n-3}/2, F_{6n-3}/2)`, `(L_{2n}, F_{2n})`
//! and `(L_{2n-1}, F_{2n-1})`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::contfrac::{expand_sqrt, SqrtCF};
use crate::error::{Error, Result, Unsolvability};
use crate::lucas::LucasParams;
use crate::oracle::{brute_solutions, OracleQuery};
use crate::pell::{self, PellProblem, PellSolution, Rhs};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `d = k^2 + 4`
    K2Plus4,
    /// `d = k^2 - 4`
    K2Minus4,
    /// `d = k^2 + 1`
    K2Plus1,
    /// `d = k^2 - 1`
    K2Minus1,
    /// `d = k^2 - k`, only for `N = -1`
    K2MinusK,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::K2Plus4,
        Family::K2Minus4,
        Family::K2Plus1,
        Family::K2Minus1,
        Family::K2MinusK,
    ];

    /// Smallest admissible `k`.
    pub fn min_k(self) -> u64 {
        match self {
            Family::K2Plus4 => 2,
            Family::K2Minus4 => 4,
            Family::K2Plus1 => 1,
            Family::K2Minus1 => 2,
            Family::K2MinusK => 3,
        }
    }

    pub fn d(self, k: u64) -> BigUint {
        let k = BigUint::from(k);
        let k2 = &k * &k;
        match self {
            Family::K2Plus4 => k2 + 4u32,
            Family::K2Minus4 => k2 - 4u32,
            Family::K2Plus1 => k2 + 1u32,
            Family::K2Minus1 => k2 - 1u32,
            Family::K2MinusK => k2 - k,
        }
    }

    pub fn supports(self, rhs: Rhs) -> bool {
        self != Family::K2MinusK || rhs == Rhs::MinusOne
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::K2Plus4 => "k2p4",
            Family::K2Minus4 => "k2m4",
            Family::K2Plus1 => "k2p1",
            Family::K2Minus1 => "k2m1",
            Family::K2MinusK => "k2mk",
        }
    }

    fn check_k(self, k: u64) -> Result<()> {
        if k < self.min_k() {
            Err(Error::OutOfRange { family: self, k })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::K2Plus4 => "k^2+4",
            Family::K2Minus4 => "k^2-4",
            Family::K2Plus1 => "k^2+1",
            Family::K2Minus1 => "k^2-1",
            Family::K2MinusK => "k^2-k",
        })
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s) || f.to_string() == s)
            .ok_or_else(|| format!("unknown family {s:?} (expected k2p4, k2m4, k2p1, k2m1 or k2mk)"))
    }
}

/// One parameterized equation `x^2 - d(k) y^2 = N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyCase {
    family: Family,
    k: u64,
    rhs: Rhs,
}

impl FamilyCase {
    pub fn new(family: Family, k: u64, rhs: Rhs) -> Result<Self> {
        family.check_k(k)?;
        if !family.supports(rhs) {
            return Err(Error::UnsupportedRhs {
                family,
                rhs: rhs.value(),
                supported: "-1",
            });
        }
        Ok(FamilyCase { family, k, rhs })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn rhs(&self) -> Rhs {
        self.rhs
    }

    pub fn d(&self) -> BigUint {
        self.family.d(self.k)
    }

    pub fn problem(&self) -> PellProblem {
        PellProblem::new(self.d(), self.rhs).expect("family d values are never squares")
    }

    /// Every admissible case with `k <= k_max`, ordered by family, then `k`, then `N`.
    pub fn all_up_to(k_max: u64) -> Vec<FamilyCase> {
        let mut out = Vec::new();
        for family in Family::ALL {
            for k in family.min_k()..=k_max {
                for rhs in Rhs::ALL {
                    if let Ok(case) = FamilyCase::new(family, k, rhs) {
                        out.push(case);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for FamilyCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "x^2 - ({})y^2 = {} with k={} (d={})",
            self.family,
            self.rhs,
            self.k,
            self.d()
        )
    }
}

/// Closed-form continued fraction of `sqrt(d(k))`.
pub fn family_cf(family: Family, k: u64) -> Result<SqrtCF> {
    family.check_k(k)?;
    let big = |n: u64| BigUint::from(n);
    let (a0, period): (u64, Vec<u64>) = match family {
        Family::K2Plus4 if k % 2 == 0 => (k, vec![k / 2, 2 * k]),
        Family::K2Plus4 => (k, vec![(k - 1) / 2, 1, 1, (k - 1) / 2, 2 * k]),
        Family::K2Minus4 if k == 4 => (3, vec![2, 6]),
        Family::K2Minus4 if k % 2 == 0 => (k - 1, vec![1, (k - 4) / 2, 1, 2 * (k - 1)]),
        Family::K2Minus4 => (k - 1, vec![1, (k - 3) / 2, 2, (k - 3) / 2, 1, 2 * (k - 1)]),
        Family::K2Plus1 => (k, vec![2 * k]),
        Family::K2Minus1 => (k - 1, vec![1, 2 * (k - 1)]),
        // sqrt(m^2 + m) = [m; 2, 2m] with m = k - 1
        Family::K2MinusK => (k - 1, vec![2, 2 * (k - 1)]),
    };
    Ok(SqrtCF::from_parts(
        family.d(k),
        big(a0),
        period.into_iter().map(big).collect(),
    ))
}

/// How an index `n >= 1` maps to the Lucas index `step * n - offset`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexMap {
    pub step: u64,
    pub offset: u64,
}

impl IndexMap {
    const fn new(step: u64, offset: u64) -> Self {
        IndexMap { step, offset }
    }

    pub fn at(self, n: u64) -> u64 {
        self.step * n - self.offset
    }
}

impl fmt::Display for IndexMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.step, self.offset) {
            (1, 0) => f.write_str("n"),
            (s, 0) => write!(f, "{s}n"),
            (1, o) => write!(f, "n-{o}"),
            (s, o) => write!(f, "{s}n-{o}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scale {
    Half,
    One,
    Double,
}

impl Scale {
    fn apply(self, v: &BigInt) -> BigInt {
        match self {
            Scale::Half => {
                let (q, r) = v.div_rem(&BigInt::from(2));
                assert!(r.is_zero(), "closed form halves an odd value {v}");
                q
            }
            Scale::One => v.clone(),
            Scale::Double => v << 1u32,
        }
    }

    fn wrap(self, inner: &str) -> String {
        match self {
            Scale::Half => format!("{inner}/2"),
            Scale::One => inner.to_string(),
            Scale::Double => format!("2{inner}"),
        }
    }
}

/// `(x_n, y_n) = (x_scale * V_i(k', s'), y_scale * U_i(k', s'))` with `i = index.at(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClosedForm {
    pub params: LucasParams,
    pub index: IndexMap,
    pub x_scale: Scale,
    pub y_scale: Scale,
}

impl ClosedForm {
    fn new(k: i64, s: i64, index: IndexMap, x_scale: Scale, y_scale: Scale) -> Self {
        ClosedForm {
            params: LucasParams::new(k, s).expect("family Lucas parameters are valid"),
            index,
            x_scale,
            y_scale,
        }
    }

    /// The first `count` terms, `n = 1..=count`.
    pub fn terms(&self, count: usize) -> Vec<PellSolution> {
        if count == 0 {
            return Vec::new();
        }
        let wanted: Vec<u64> = (1..=count as u64).map(|n| self.index.at(n)).collect();
        let last = *wanted.last().unwrap();
        let pairs: Vec<_> = self.params.iter().take(last as usize + 1).collect();
        wanted
            .into_iter()
            .map(|i| {
                let pair = &pairs[i as usize];
                let x = self.x_scale.apply(&pair.v);
                let y = self.y_scale.apply(&pair.u);
                assert!(x.is_positive() && y.is_positive());
                PellSolution {
                    x: x.magnitude().clone(),
                    y: y.magnitude().clone(),
                }
            })
            .collect()
    }

    pub fn describe(&self) -> String {
        let (k, s) = (self.params.k(), self.params.s());
        let v = format!("V_{{{}}}({k},{s})", self.index);
        let u = format!("U_{{{}}}({k},{s})", self.index);
        format!("({}, {})", self.x_scale.wrap(&v), self.y_scale.wrap(&u))
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// Why a family equation has no positive solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReasonTag {
    /// The period of `sqrt(d)` is even, so `N = -1` is unsolvable.
    PeriodLengthEven,
    /// `d` is odd and `x^2 - dy^2 = -1` is unsolvable; for odd `d` a
    /// solution of `-4` would force one of `-1`.
    OddDWithoutMinusOne,
    /// `d = k^2 - 4` with `k` even: `a` must be even and `(a/2, b)` would
    /// solve `x^2 - ((k/2)^2 - 1) y^2 = -1`.
    HalvesToK2Minus1,
    /// `d = k^2 - 1` with `k` odd: `a` must be even and `(a/2, b)` would
    /// solve `x^2 - (m^2 - m) y^2 = -1` with `m = (k+1)/2 > 2`.
    HalvesToK2MinusK,
}

impl ReasonTag {
    pub fn citation(self) -> &'static str {
        match self {
            ReasonTag::PeriodLengthEven => "period length even",
            ReasonTag::OddDWithoutMinusOne => {
                "d odd and x^2-dy^2=-1 unsolvable, so x^2-dy^2=-4 is unsolvable"
            }
            ReasonTag::HalvesToK2Minus1 => {
                "k even: (a/2, b) would solve x^2-((k/2)^2-1)y^2=-1, which has no solution"
            }
            ReasonTag::HalvesToK2MinusK => {
                "k odd: (a/2, b) would solve x^2-(m^2-m)y^2=-1 with m=(k+1)/2, which has no solution"
            }
        }
    }
}

impl fmt::Display for ReasonTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.citation())
    }
}

/// The closed-form answer to a [`FamilyCase`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyAnswer {
    Generator(ClosedForm),
    NoSolution(ReasonTag),
    /// No closed form is known; answered by the generic solver.
    Generic(&'static str),
}

const K2M1_K3_NOTE: &str =
    "x^2-8y^2=-4 (k=3) is solvable but has no closed family form; solved generically";

pub fn family_answer(case: &FamilyCase) -> FamilyAnswer {
    use FamilyAnswer::{Generator, Generic, NoSolution};
    use Scale::{Double, Half, One};

    let FamilyCase { family, k, rhs } = *case;
    let ki = k as i64;
    let even = k % 2 == 0;
    let im = IndexMap::new;
    match (family, rhs) {
        (Family::K2Plus4, Rhs::One) if even => Generator(ClosedForm::new(ki, 1, im(2, 0), Half, Half)),
        (Family::K2Plus4, Rhs::One) => Generator(ClosedForm::new(ki, 1, im(6, 0), Half, Half)),
        (Family::K2Plus4, Rhs::MinusOne) if even => NoSolution(ReasonTag::PeriodLengthEven),
        (Family::K2Plus4, Rhs::MinusOne) => Generator(ClosedForm::new(ki, 1, im(6, 3), Half, Half)),
        (Family::K2Plus4, Rhs::Four) => Generator(ClosedForm::new(ki, 1, im(2, 0), One, One)),
        (Family::K2Plus4, Rhs::MinusFour) => Generator(ClosedForm::new(ki, 1, im(2, 1), One, One)),

        (Family::K2Minus4, Rhs::One) if even => Generator(ClosedForm::new(ki, -1, im(2, 0), Half, Half)),
        (Family::K2Minus4, Rhs::One) => Generator(ClosedForm::new(ki, -1, im(3, 0), Half, Half)),
        (Family::K2Minus4, Rhs::MinusOne) => NoSolution(ReasonTag::PeriodLengthEven),
        (Family::K2Minus4, Rhs::Four) => Generator(ClosedForm::new(ki, -1, im(1, 0), One, One)),
        (Family::K2Minus4, Rhs::MinusFour) if even => NoSolution(ReasonTag::HalvesToK2Minus1),
        (Family::K2Minus4, Rhs::MinusFour) => NoSolution(ReasonTag::OddDWithoutMinusOne),

        // d = 5: Fibonacci and Lucas numbers
        (Family::K2Plus1, Rhs::One) if k == 2 => Generator(ClosedForm::new(1, 1, im(6, 0), Half, Half)),
        (Family::K2Plus1, Rhs::MinusOne) if k == 2 => Generator(ClosedForm::new(1, 1, im(6, 3), Half, Half)),
        (Family::K2Plus1, Rhs::Four) if k == 2 => Generator(ClosedForm::new(1, 1, im(2, 0), One, One)),
        (Family::K2Plus1, Rhs::MinusFour) if k == 2 => Generator(ClosedForm::new(1, 1, im(2, 1), One, One)),

        (Family::K2Plus1, Rhs::One) => Generator(ClosedForm::new(2 * ki, 1, im(2, 0), Half, One)),
        (Family::K2Plus1, Rhs::MinusOne) => Generator(ClosedForm::new(2 * ki, 1, im(2, 1), Half, One)),
        (Family::K2Plus1, Rhs::Four) => Generator(ClosedForm::new(2 * ki, 1, im(2, 0), One, Double)),
        (Family::K2Plus1, Rhs::MinusFour) => Generator(ClosedForm::new(2 * ki, 1, im(2, 1), One, Double)),

        (Family::K2Minus1, Rhs::One) => Generator(ClosedForm::new(2 * ki, -1, im(1, 0), Half, One)),
        (Family::K2Minus1, Rhs::MinusOne) => NoSolution(ReasonTag::PeriodLengthEven),
        (Family::K2Minus1, Rhs::Four) => Generator(ClosedForm::new(2 * ki, -1, im(1, 0), One, Double)),
        (Family::K2Minus1, Rhs::MinusFour) if k == 3 => Generic(K2M1_K3_NOTE),
        (Family::K2Minus1, Rhs::MinusFour) if even => NoSolution(ReasonTag::OddDWithoutMinusOne),
        (Family::K2Minus1, Rhs::MinusFour) => NoSolution(ReasonTag::HalvesToK2MinusK),

        (Family::K2MinusK, Rhs::MinusOne) => NoSolution(ReasonTag::PeriodLengthEven),
        (Family::K2MinusK, _) => unreachable!("FamilyCase::new rejects k^2-k with N != -1"),
    }
}

/// The fundamental solution from the explicit closed formulas.
pub fn family_fundamental(case: &FamilyCase) -> Result<Option<PellSolution>> {
    let FamilyCase { family, k, rhs } = *case;
    let kb = BigUint::from(k);
    let k2 = &kb * &kb;
    let k3 = &k2 * &kb;
    let sol = |x: BigUint, y: BigUint| Some(PellSolution { x, y });
    let even = k % 2 == 0;

    Ok(match (family, rhs) {
        (Family::K2Plus4, Rhs::MinusOne) if even => None,
        (Family::K2Plus4, Rhs::MinusOne) => sol((&k3 + 3u32 * &kb) >> 1u32, (&k2 + 1u32) >> 1u32),
        (Family::K2Plus4, Rhs::One) if even => sol((&k2 + 2u32) >> 1u32, &kb >> 1u32),
        (Family::K2Plus4, Rhs::One) => {
            // square of the N = -1 fundamental
            let x1: BigUint = (&k3 + 3u32 * &kb) >> 1u32;
            let y1: BigUint = (&k2 + 1u32) >> 1u32;
            let d = family.d(k);
            sol(&x1 * &x1 + d * &y1 * &y1, 2u32 * x1 * y1)
        }
        (Family::K2Plus4, Rhs::Four) => sol(&k2 + 2u32, kb),
        (Family::K2Plus4, Rhs::MinusFour) => sol(kb, BigUint::one()),

        (Family::K2Minus4, Rhs::One) if even => sol((&k2 - 2u32) >> 1u32, &kb >> 1u32),
        (Family::K2Minus4, Rhs::One) => sol((&k3 - 3u32 * &kb) >> 1u32, (&k2 - 1u32) >> 1u32),
        (Family::K2Minus4, Rhs::Four) => sol(kb, BigUint::one()),
        (Family::K2Minus4, _) => None,

        (Family::K2Plus1, Rhs::One) => sol(2u32 * &k2 + 1u32, 2u32 * &kb),
        (Family::K2Plus1, Rhs::MinusOne) => sol(kb, BigUint::one()),
        (Family::K2Plus1, Rhs::Four) if k == 2 => sol(3u32.into(), BigUint::one()),
        (Family::K2Plus1, Rhs::MinusFour) if k == 2 => sol(BigUint::one(), BigUint::one()),
        (Family::K2Plus1, Rhs::Four) => sol(4u32 * &k2 + 2u32, 4u32 * &kb),
        (Family::K2Plus1, Rhs::MinusFour) => sol(2u32 * &kb, 2u32.into()),

        (Family::K2Minus1, Rhs::One) => sol(kb, BigUint::one()),
        (Family::K2Minus1, Rhs::MinusOne) => None,
        (Family::K2Minus1, Rhs::Four) => sol(2u32 * &kb, 2u32.into()),
        (Family::K2Minus1, Rhs::MinusFour) if k == 3 => return pell::fundamental(&case.problem()),
        (Family::K2Minus1, Rhs::MinusFour) => None,

        (Family::K2MinusK, _) => None,
    })
}

/// The first `count` solutions from the closed form.
pub fn family_solutions(case: &FamilyCase, count: usize) -> Result<Vec<PellSolution>> {
    match family_answer(case) {
        FamilyAnswer::Generator(form) => Ok(form.terms(count)),
        FamilyAnswer::NoSolution(tag) => Err(Error::Unsolvable {
            d: case.d(),
            rhs: case.rhs.value(),
            reason: Unsolvability::Family(tag),
        }),
        FamilyAnswer::Generic(_) => pell::solutions(&case.problem(), count),
    }
}

pub fn family_nonexistence(case: &FamilyCase) -> Option<ReasonTag> {
    match family_answer(case) {
        FamilyAnswer::NoSolution(tag) => Some(tag),
        _ => None,
    }
}

/// One comparison in a [`Report`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub case: FamilyCase,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_divergence(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

pub const DEFAULT_ORACLE_Y_MAX: u64 = 10_000;

/// Compares every closed form for `case` with the generic machinery.
pub fn crosscheck(case: &FamilyCase, count: usize) -> Result<Report> {
    crosscheck_with_bound(case, count, DEFAULT_ORACLE_Y_MAX)
}

/// As [`crosscheck`], confirming nonexistence answers with the oracle up to `y_max`.
pub fn crosscheck_with_bound(case: &FamilyCase, count: usize, y_max: u64) -> Result<Report> {
    let problem = case.problem();
    let mut checks = Vec::new();
    let mut push = |name, passed, detail: String| checks.push(Check { name, passed, detail });

    let closed_cf = family_cf(case.family, case.k)?;
    let cf = expand_sqrt(problem.d())?;
    push(
        "continued fraction",
        closed_cf == cf,
        format!("closed {closed_cf}, expanded {cf}"),
    );

    let closed_fund = family_fundamental(case)?;
    let generic_fund = pell::fundamental(&problem)?;
    push(
        "fundamental solution",
        closed_fund == generic_fund,
        format!("closed {}, generic {}", show(&closed_fund), show(&generic_fund)),
    );

    match family_answer(case) {
        FamilyAnswer::NoSolution(tag) => {
            let query = OracleQuery::new(problem.d().clone(), case.rhs, y_max)?;
            let found = brute_solutions(&query);
            push(
                "nonexistence",
                generic_fund.is_none() && found.is_empty(),
                format!("{tag}; oracle found {} solution(s) with y <= {y_max}", found.len()),
            );
        }
        FamilyAnswer::Generator(_) | FamilyAnswer::Generic(_) => {
            let closed = family_solutions(case, count)?;
            let generic = pell::solutions(&problem, count)?;
            let all_verify = closed.iter().all(|s| pell::verify(&problem, s));
            let divergence = closed.iter().zip(&generic).position(|(a, b)| a != b);
            let detail = match divergence {
                Some(i) => format!("term {}: closed {}, generic {}", i + 1, closed[i], generic[i]),
                None if closed.len() != generic.len() => {
                    format!("closed gave {} terms, generic {}", closed.len(), generic.len())
                }
                None => format!("{} terms agree", closed.len()),
            };
            push(
                "solutions",
                all_verify && divergence.is_none() && closed.len() == generic.len(),
                detail,
            );
        }
    }

    Ok(Report {
        case: *case,
        checks,
    })
}

fn show(s: &Option<PellSolution>) -> String {
    s.as_ref().map_or_else(|| "none".to_string(), |s| s.to_string())
}
