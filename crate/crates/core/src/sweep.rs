//! Batch verification of every family case up to a bound on `k`.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::contfrac::expand_sqrt;
use crate::error::Result;
use crate::families::{crosscheck_with_bound, family_answer, family_cf, family_fundamental};
use crate::families::{Family, FamilyAnswer, FamilyCase};
use crate::oracle::{brute_solutions, OracleQuery};
use crate::pell::{self, PellProblem, Rhs};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub k_max: u64,
    pub count: usize,
    pub y_max: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            k_max: 30,
            count: 5,
            y_max: 10_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Section {
    fn from_outcomes(name: &'static str, outcomes: Vec<Result<Option<String>>>) -> Result<Section> {
        let checked = outcomes.len();
        let mut failures = Vec::new();
        for o in outcomes {
            if let Some(f) = o? {
                failures.push(f);
            }
        }
        Ok(Section {
            name,
            checked,
            failures,
        })
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub sections: Vec<Section>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.sections.iter().all(Section::passed)
    }

    pub fn failure_count(&self) -> usize {
        self.sections.iter().map(|s| s.failures.len()).sum()
    }
}

/// Runs every section. Cases are processed in parallel; each section reports
/// in case order regardless of scheduling.
pub fn run(config: SweepConfig) -> Result<SweepReport> {
    let cases = FamilyCase::all_up_to(config.k_max);
    let family_ks: Vec<(Family, u64)> = Family::ALL
        .into_iter()
        .flat_map(|f| (f.min_k()..=config.k_max).map(move |k| (f, k)))
        .collect();
    let ds: Vec<BigUint> = family_ks
        .iter()
        .map(|&(f, k)| f.d(k))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();

    let mut sections = Vec::new();

    let outcomes = family_ks
        .par_iter()
        .map(|&(family, k)| {
            let closed = family_cf(family, k)?;
            let expanded = expand_sqrt(&family.d(k))?;
            Ok((closed != expanded)
                .then(|| format!("{family} k={k}: closed {closed}, expanded {expanded}")))
        })
        .collect();
    sections.push(Section::from_outcomes("continued fraction patterns", outcomes)?);

    let outcomes = cases
        .par_iter()
        .map(|case| {
            let closed = family_fundamental(case)?;
            let generic = pell::fundamental(&case.problem())?;
            Ok((closed != generic).then(|| format!("{case}: closed {closed:?}, generic {generic:?}")))
        })
        .collect();
    sections.push(Section::from_outcomes("fundamental solutions", outcomes)?);

    let outcomes = cases
        .par_iter()
        .map(|case| {
            let report = crosscheck_with_bound(case, config.count, config.y_max)?;
            Ok(report
                .first_divergence()
                .map(|c| format!("{case}: {} ({})", c.name, c.detail)))
        })
        .collect();
    sections.push(Section::from_outcomes("family/generic equivalence", outcomes)?);

    let y_max = BigUint::from(config.y_max);
    let outcomes = ds
        .par_iter()
        .flat_map(|d| Rhs::ALL.into_par_iter().map(move |rhs| (d, rhs)))
        .map(|(d, rhs)| {
            let problem = PellProblem::new(d.clone(), rhs)?;
            let generated = pell::solutions_up_to(&problem, &y_max)?;
            let brute = brute_solutions(&OracleQuery::new(d.clone(), rhs, config.y_max)?);
            Ok((generated != brute).then(|| {
                format!(
                    "{problem}: generated {} solution(s), oracle {} with y <= {}",
                    generated.len(),
                    brute.len(),
                    config.y_max
                )
            }))
        })
        .collect();
    sections.push(Section::from_outcomes("oracle completeness", outcomes)?);

    let outcomes = cases
        .par_iter()
        .filter_map(|case| match family_answer(case) {
            FamilyAnswer::NoSolution(tag) => Some((case, tag)),
            _ => None,
        })
        .map(|(case, tag)| {
            let q = OracleQuery::new(case.d(), case.rhs(), config.y_max)?;
            let found = brute_solutions(&q);
            Ok((!found.is_empty())
                .then(|| format!("{case}: declared unsolvable ({tag}) but oracle found {}", found[0])))
        })
        .collect();
    sections.push(Section::from_outcomes("nonexistence", outcomes)?);

    let outcomes = ds
        .par_iter()
        .map(|d| {
            let odd = pell::is_negative_one_solvable(d)?;
            let problem = PellProblem::new(d.clone(), Rhs::MinusOne)?;
            let fund = pell::fundamental(&problem)?;
            let consistent = match &fund {
                Some(s) => odd && pell::verify(&problem, s),
                None => {
                    !odd && brute_solutions(&OracleQuery::new(d.clone(), Rhs::MinusOne, config.y_max)?)
                        .is_empty()
                }
            };
            Ok((!consistent).then(|| format!("d={d}: odd period {odd}, fundamental {fund:?}")))
        })
        .collect();
    sections.push(Section::from_outcomes("period parity", outcomes)?);

    Ok(SweepReport { config, sections })
}
