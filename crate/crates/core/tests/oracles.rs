//! Checks against independently computed values: rational brackets of square
//! roots, interval-evaluated Binet formulas, brute-force search and frozen
//! fundamental units.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use pellcf::contfrac::expand_sqrt;
use pellcf::families::{family_answer, Family, FamilyAnswer, FamilyCase, Scale};
use pellcf::lucas::{lucas_pair, LucasParams};
use pellcf::oracle::{brute_solutions, is_minimal, OracleQuery};
use pellcf::pell::{self, Certificate, PellProblem, PellSolution, Rhs};

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn nonsquares(hi: u64) -> Vec<u64> {
    (2..=hi).filter(|&d| d.isqrt().pow(2) != d).collect()
}

/// Continued fraction of the rational `num / den` by Euclid.
fn euclid_cf(mut num: BigUint, mut den: BigUint) -> Vec<BigUint> {
    let mut out = Vec::new();
    while !den.is_zero() {
        let (q, r) = num.div_rem(&den);
        out.push(q);
        num = den;
        den = r;
    }
    out
}

/// Leading partial quotients of sqrt(d), read off a rational bracket
/// `s / 2^b <= sqrt(d) < (s + 1) / 2^b` with `s = isqrt(d * 4^b)`.
/// Only the prefix shared by both ends, minus its last term, is trusted.
fn bracket_quotients(d: u64, want: usize) -> Vec<BigUint> {
    let mut bits = 64u64;
    loop {
        let s = (big(d) << (2 * bits)).sqrt();
        let den = BigUint::one() << bits;
        let lo = euclid_cf(s.clone(), den.clone());
        let hi = euclid_cf(s + 1u32, den);
        let mut common: Vec<BigUint> = lo
            .into_iter()
            .zip(hi)
            .take_while(|(a, b)| a == b)
            .map(|(a, _)| a)
            .collect();
        common.pop();
        if common.len() >= want {
            common.truncate(want);
            return common;
        }
        bits *= 2;
    }
}

#[test]
fn quotients_agree_with_rational_brackets() {
    let bad: Vec<u64> = nonsquares(10_000)
        .into_par_iter()
        .filter(|&d| {
            let cf = expand_sqrt(&big(d)).unwrap();
            let want = 3 * cf.period_length() + 1;
            let ours: Vec<BigUint> = cf.quotients().take(want).cloned().collect();
            ours != bracket_quotients(d, want)
        })
        .collect();
    assert!(bad.is_empty(), "quotient mismatch for d in {bad:?}");
}

#[test]
fn periods_are_palindromes_closed_by_twice_a0() {
    for d in nonsquares(10_000) {
        let cf = expand_sqrt(&big(d)).unwrap();
        let period = cf.period();
        let (body, last) = period.split_at(period.len() - 1);
        assert_eq!(last[0], cf.a0() * 2u32, "d={d}");
        assert!(body.iter().eq(body.iter().rev()), "d={d}: {cf}");
        assert!(body.iter().all(|a| a <= cf.a0()), "d={d}: {cf}");
    }
}

#[test]
fn frozen_fundamental_units() {
    let cases: &[(u64, i64, &str, &str)] = &[
        (2, 1, "3", "2"),
        (13, -1, "18", "5"),
        (13, 1, "649", "180"),
        (13, 4, "11", "3"),
        (13, -4, "3", "1"),
        (29, -1, "70", "13"),
        (29, -4, "5", "1"),
        (21, 4, "5", "1"),
        (61, 1, "1766319049", "226153980"),
        (61, -1, "29718", "3805"),
        (109, 1, "158070671986249", "15140424455100"),
        (
            991,
            1,
            "379516400906811930638014896080",
            "12055735790331359447442538767",
        ),
    ];
    for &(d, n, x, y) in cases {
        let problem = PellProblem::new(d, Rhs::try_from(n).unwrap()).unwrap();
        let expected = PellSolution::new(x.parse::<BigUint>().unwrap(), y.parse::<BigUint>().unwrap());
        assert_eq!(pell::fundamental(&problem).unwrap(), Some(expected), "{problem}");
    }
}

/// Fixed-point bits for the dyadic intervals below.
const FRAC: u64 = 640;

/// `[lo, hi] / 2^FRAC`, rounded outward after every product.
#[derive(Clone, Debug)]
struct Interval {
    lo: BigInt,
    hi: BigInt,
}

impl Interval {
    fn int(v: i64) -> Self {
        let x = BigInt::from(v) << FRAC;
        Interval { lo: x.clone(), hi: x }
    }

    fn add(&self, o: &Interval) -> Interval {
        Interval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    fn neg(&self) -> Interval {
        Interval { lo: -&self.hi, hi: -&self.lo }
    }

    fn half(&self) -> Interval {
        Interval { lo: &self.lo >> 1u32, hi: (&self.hi + 1u32) >> 1u32 }
    }

    fn mul(&self, o: &Interval) -> Interval {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().unwrap() >> FRAC;
        let hi = (c.iter().max().unwrap() + ((BigInt::one() << FRAC) - 1)) >> FRAC;
        Interval { lo, hi }
    }

    /// Divides by a positive interval.
    fn div_pos(&self, o: &Interval) -> Interval {
        assert!(o.lo.is_positive());
        let c = [
            (&self.lo << FRAC, &o.lo),
            (&self.lo << FRAC, &o.hi),
            (&self.hi << FRAC, &o.lo),
            (&self.hi << FRAC, &o.hi),
        ];
        let lo = c.iter().map(|(n, d)| n.div_floor(d)).min().unwrap();
        let hi = c.iter().map(|(n, d)| n.div_ceil(d)).max().unwrap();
        Interval { lo, hi }
    }

    /// The unique integer inside, if the interval is narrower than one.
    fn pin(&self) -> Option<BigInt> {
        let one = BigInt::one() << FRAC;
        let lo = self.lo.div_ceil(&one);
        (&lo << FRAC <= self.hi && &self.hi - &self.lo < one).then_some(lo)
    }
}

/// `isqrt(n 4^FRAC) <= sqrt(n) 2^FRAC < isqrt(n 4^FRAC) + 1`.
fn sqrt_bracket(n: &BigUint) -> Interval {
    let s = BigInt::from((n << (2 * FRAC)).sqrt());
    Interval { lo: s.clone(), hi: s + 1u32 }
}

#[test]
fn binet_formulas_pin_lucas_values() {
    for k in 1i64..=20 {
        for s in [1i64, -1] {
            let Ok(params) = LucasParams::new(k, s) else { continue };
            let root = sqrt_bracket(params.discriminant().magnitude());
            let alpha = Interval::int(k).add(&root).half();
            let beta = Interval::int(k).add(&root.neg()).half();
            let (mut an, mut bn) = (Interval::int(1), Interval::int(1));
            for pair in params.iter().take(61) {
                let v = an.add(&bn).pin();
                let u = an.add(&bn.neg()).div_pos(&root).pin();
                assert_eq!(v.as_ref(), Some(&pair.v), "V_{}({k},{s})", pair.n);
                assert_eq!(u.as_ref(), Some(&pair.u), "U_{}({k},{s})", pair.n);
                an = an.mul(&alpha);
                bn = bn.mul(&beta);
            }
        }
    }
}

#[test]
fn small_norm_four_fundamentals_are_minimal() {
    // where a > b^2 - 2 the N = 4 fundamental must be the smallest solution
    let mut certified = 0;
    for d in nonsquares(500) {
        let problem = PellProblem::new(d, Rhs::Four).unwrap();
        let fund = pell::fundamental_certified(&problem).unwrap().unwrap();
        if pell::satisfies_norm_four_bound(&fund.solution) {
            assert!(is_minimal(&big(d), Rhs::Four, &fund.solution), "d={d}");
        }
        if fund.certificate == Certificate::NormFourBound {
            certified += 1;
        }
    }
    assert!(certified > 0);
}

#[test]
fn fundamentals_are_minimal_by_search() {
    let limit = big(100_000);
    let jobs: Vec<(u64, Rhs)> = nonsquares(500)
        .into_iter()
        .flat_map(|d| Rhs::ALL.into_iter().map(move |r| (d, r)))
        .collect();
    let bad: Vec<String> = jobs
        .par_iter()
        .filter_map(|&(d, rhs)| {
            let sol = pell::fundamental(&PellProblem::new(d, rhs).unwrap()).unwrap()?;
            (sol.y <= limit && !is_minimal(&big(d), rhs, &sol)).then(|| format!("d={d} N={rhs}"))
        })
        .collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn minus_four_solvable_odd_d_implies_minus_one_solvable() {
    for d in nonsquares(500).into_iter().filter(|d| d % 2 == 1) {
        let minus_four = pell::fundamental(&PellProblem::new(d, Rhs::MinusFour).unwrap()).unwrap();
        if minus_four.is_some() {
            assert!(pell::is_negative_one_solvable(&big(d)).unwrap(), "d={d}");
        }
    }
}

#[test]
fn k2_plus_1_norm_four_solutions_are_even() {
    for k in (1..=30u64).filter(|&k| k != 2) {
        for rhs in [Rhs::Four, Rhs::MinusFour] {
            let found = brute_solutions(&OracleQuery::new(k * k + 1, rhs, 10_000).unwrap());
            assert!(!found.is_empty(), "k={k} N={rhs}");
            for s in found {
                assert!(s.x.is_even() && s.y.is_even(), "k={k} N={rhs}: {s}");
            }
        }
    }
}

#[test]
fn closed_form_indices_satisfy_the_norm_identity() {
    for case in FamilyCase::all_up_to(30) {
        let FamilyAnswer::Generator(form) = family_answer(&case) else { continue };
        for n in 1..=5 {
            let i = form.index.at(n);
            let pair = lucas_pair(&form.params, i);
            assert!(pair.satisfies_norm_identity(&form.params), "{case} i={i}");
            if form.x_scale == Scale::One && form.y_scale == Scale::One {
                // (V, U) is itself a solution, so 4(-s')^i is N
                let norm = BigInt::from(4) * form.params.norm_power(i);
                assert_eq!(norm, BigInt::from(case.rhs().value()), "{case} i={i}");
            }
        }
    }
}

#[test]
fn every_family_has_unsolvable_or_generator_answers() {
    for family in Family::ALL {
        for k in family.min_k()..=30 {
            for rhs in Rhs::ALL.into_iter().filter(|&r| family.supports(r)) {
                let case = FamilyCase::new(family, k, rhs).unwrap();
                let generic = pell::fundamental(&case.problem()).unwrap();
                match family_answer(&case) {
                    FamilyAnswer::NoSolution(_) => assert!(generic.is_none(), "{case}"),
                    _ => assert!(generic.is_some(), "{case}"),
                }
            }
        }
    }
}
