//! Command implementations behind the `pellcf` binary, and the versioned
//! output record they produce.
//!
//! Every integer in a record is a decimal string so that arbitrary precision
//! survives any JSON consumer.

use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::contfrac::expand_sqrt;
use crate::error::Error;
use crate::families::{family_answer, family_solutions, Family, FamilyAnswer, FamilyCase};
use crate::oracle::{brute_solutions_par, OracleQuery};
use crate::pell::{self, PellProblem, PellSolution, Rhs, Solutions};
use crate::sweep::{self, SweepConfig};

pub const SCHEMA_VERSION: &str = "1";

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    VerificationFailed = 1,
    InvalidInput = 2,
    Unsolvable = 3,
    Usage = 64,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }

    fn status(self) -> Status {
        match self {
            ExitStatus::Success => Status::Ok,
            ExitStatus::VerificationFailed => Status::Fail,
            ExitStatus::InvalidInput => Status::Invalid,
            ExitStatus::Unsolvable => Status::Unsolvable,
            ExitStatus::Usage => Status::Usage,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Unsolvable,
    Invalid,
    Usage,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommandEcho {
    pub name: String,
    pub args: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub x: String,
    pub y: String,
}

impl From<&PellSolution> for SolutionRecord {
    fn from(s: &PellSolution) -> Self {
        SolutionRecord {
            x: s.x.to_string(),
            y: s.y.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleAgreement {
    pub y_max: String,
    pub oracle_count: usize,
    pub generated_count: usize,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionRecord {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    ContinuedFraction {
        d: String,
        a0: String,
        period: Vec<String>,
        period_length: usize,
    },
    Solutions {
        d: String,
        n: String,
        certificate: Option<String>,
        solutions: Vec<SolutionRecord>,
        oracle: Option<OracleAgreement>,
        reason: Option<String>,
    },
    Family {
        family: String,
        k: String,
        n: String,
        d: String,
        answer: String,
        form: Option<String>,
        reason: Option<String>,
        solutions: Vec<SolutionRecord>,
    },
    Verify {
        k_max: String,
        count: String,
        y_max: String,
        sections: Vec<SectionRecord>,
        failures: usize,
    },
    Error {
        message: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema_version: String,
    pub command: CommandEcho,
    pub status: Status,
    pub payload: Payload,
}

/// A finished command: what to print and how to exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub record: OutputRecord,
    pub exit: ExitStatus,
}

impl Outcome {
    fn new(command: CommandEcho, exit: ExitStatus, payload: Payload) -> Self {
        Outcome {
            record: OutputRecord {
                schema_version: SCHEMA_VERSION.to_string(),
                command,
                status: exit.status(),
                payload,
            },
            exit,
        }
    }

    fn error(command: CommandEcho, err: &Error) -> Self {
        let exit = match err {
            Error::Unsolvable { .. } => ExitStatus::Unsolvable,
            Error::InvalidRhs(_) | Error::EmptyOracleRange => ExitStatus::Usage,
            _ => ExitStatus::InvalidInput,
        };
        Outcome::new(
            command,
            exit,
            Payload::Error {
                message: err.to_string(),
            },
        )
    }
}

fn echo(name: &str, args: &[String]) -> CommandEcho {
    CommandEcho {
        name: name.to_string(),
        args: args.to_vec(),
    }
}

/// `cf <d>`
pub fn cmd_cf(d: &BigUint) -> Outcome {
    let command = echo("cf", &[d.to_string()]);
    match expand_sqrt(d) {
        Ok(cf) => Outcome::new(
            command,
            ExitStatus::Success,
            Payload::ContinuedFraction {
                d: d.to_string(),
                a0: cf.a0().to_string(),
                period: cf.period().iter().map(ToString::to_string).collect(),
                period_length: cf.period_length(),
            },
        ),
        Err(e) => Outcome::error(command, &e),
    }
}

/// `solve <d> <N> <count> [--certify --ymax Y]`
pub fn cmd_solve(d: &BigUint, n: i64, count: usize, certify_y_max: Option<u64>) -> Outcome {
    let mut args = vec![d.to_string(), n.to_string(), count.to_string()];
    if let Some(y) = certify_y_max {
        args.extend(["--certify".to_string(), format!("--ymax={y}")]);
    }
    let command = echo("solve", &args);
    match solve(d, n, count, certify_y_max) {
        Ok((payload, exit)) => Outcome::new(command, exit, payload),
        Err(e) => Outcome::error(command, &e),
    }
}

fn solve(
    d: &BigUint,
    n: i64,
    count: usize,
    certify_y_max: Option<u64>,
) -> crate::Result<(Payload, ExitStatus)> {
    let problem = PellProblem::new(d.clone(), Rhs::try_from(n)?)?;
    let fundamental = pell::fundamental_certified(&problem)?;
    let Some(fundamental) = fundamental else {
        let reason = match problem.rhs() {
            Rhs::MinusOne => "period length even".to_string(),
            _ => "no convergent has this norm and the +-1 equation is unsolvable".to_string(),
        };
        let oracle = certify_y_max
            .map(|y| oracle_agreement(&problem, y, &[]))
            .transpose()?;
        let exit = match &oracle {
            Some(o) if !o.agrees => ExitStatus::VerificationFailed,
            _ => ExitStatus::Unsolvable,
        };
        let payload = Payload::Solutions {
            d: d.to_string(),
            n: n.to_string(),
            certificate: None,
            solutions: Vec::new(),
            oracle,
            reason: Some(format!("unsolvable ({reason})")),
        };
        return Ok((payload, exit));
    };

    let certificate = fundamental.certificate;
    let sols: Vec<PellSolution> = Solutions::from_fundamental(&problem, fundamental.solution)
        .take(count)
        .collect();
    let oracle = match certify_y_max {
        Some(y) => {
            let generated = pell::solutions_up_to(&problem, &BigUint::from(y))?;
            Some(oracle_agreement(&problem, y, &generated)?)
        }
        None => None,
    };
    let exit = match &oracle {
        Some(o) if !o.agrees => ExitStatus::VerificationFailed,
        _ => ExitStatus::Success,
    };
    let payload = Payload::Solutions {
        d: d.to_string(),
        n: n.to_string(),
        certificate: Some(certificate.to_string()),
        solutions: sols.iter().map(SolutionRecord::from).collect(),
        oracle,
        reason: None,
    };
    Ok((payload, exit))
}

fn oracle_agreement(
    problem: &PellProblem,
    y_max: u64,
    generated: &[PellSolution],
) -> crate::Result<OracleAgreement> {
    let q = OracleQuery::new(problem.d().clone(), problem.rhs(), y_max)?;
    let brute = brute_solutions_par(&q);
    Ok(OracleAgreement {
        y_max: y_max.to_string(),
        oracle_count: brute.len(),
        generated_count: generated.len(),
        agrees: brute == generated,
    })
}

/// `family <family> <k> <N> <count> [--force-generic]`
///
/// Out-of-range `k` is an error unless `force_generic` is set, in which case
/// `d(k)` is handed to the generic solver.
pub fn cmd_family(family: Family, k: u64, n: i64, count: usize, force_generic: bool) -> Outcome {
    let mut args = vec![family.name().to_string(), k.to_string(), n.to_string(), count.to_string()];
    if force_generic {
        args.push("--force-generic".to_string());
    }
    let command = echo("family", &args);
    match family_cmd(family, k, n, count, force_generic) {
        Ok((payload, exit)) => Outcome::new(command, exit, payload),
        Err(e) => Outcome::error(command, &e),
    }
}

fn family_d_signed(family: Family, k: u64) -> BigInt {
    let k = BigInt::from(k);
    let k2 = &k * &k;
    match family {
        Family::K2Plus4 => k2 + 4,
        Family::K2Minus4 => k2 - 4,
        Family::K2Plus1 => k2 + 1,
        Family::K2Minus1 => k2 - 1,
        Family::K2MinusK => k2 - k,
    }
}

fn family_cmd(
    family: Family,
    k: u64,
    n: i64,
    count: usize,
    force_generic: bool,
) -> crate::Result<(Payload, ExitStatus)> {
    let rhs = Rhs::try_from(n)?;
    let payload = |d: String, answer: &str, form, reason, sols: &[PellSolution]| Payload::Family {
        family: family.name().to_string(),
        k: k.to_string(),
        n: n.to_string(),
        d,
        answer: answer.to_string(),
        form,
        reason,
        solutions: sols.iter().map(SolutionRecord::from).collect(),
    };

    if force_generic {
        let d = family_d_signed(family, k);
        if !d.is_positive() {
            return Err(Error::OutOfRange { family, k });
        }
        let d = d.magnitude().clone();
        let problem = PellProblem::new(d.clone(), rhs)?;
        return Ok(match pell::solutions(&problem, count) {
            Ok(sols) => (
                payload(d.to_string(), "generic", None, None, &sols),
                ExitStatus::Success,
            ),
            Err(Error::Unsolvable { reason, .. }) => (
                payload(d.to_string(), "no_solution", None, Some(reason.to_string()), &[]),
                ExitStatus::Unsolvable,
            ),
            Err(e) => return Err(e),
        });
    }

    let case = FamilyCase::new(family, k, rhs)?;
    let d = case.d().to_string();
    Ok(match family_answer(&case) {
        FamilyAnswer::Generator(form) => {
            let sols = family_solutions(&case, count)?;
            (
                payload(d, "generator", Some(form.describe()), None, &sols),
                ExitStatus::Success,
            )
        }
        FamilyAnswer::NoSolution(tag) => (
            payload(d, "no_solution", None, Some(tag.citation().to_string()), &[]),
            ExitStatus::Unsolvable,
        ),
        FamilyAnswer::Generic(note) => {
            let sols = family_solutions(&case, count)?;
            (
                payload(d, "generic", None, Some(note.to_string()), &sols),
                ExitStatus::Success,
            )
        }
    })
}

/// `verify --kmax K --count C --ymax Y`
pub fn cmd_verify(config: SweepConfig) -> Outcome {
    let command = echo(
        "verify",
        &[
            format!("--kmax={}", config.k_max),
            format!("--count={}", config.count),
            format!("--ymax={}", config.y_max),
        ],
    );
    match sweep::run(config) {
        Ok(report) => {
            let exit = if report.passed() {
                ExitStatus::Success
            } else {
                ExitStatus::VerificationFailed
            };
            let payload = Payload::Verify {
                k_max: config.k_max.to_string(),
                count: config.count.to_string(),
                y_max: config.y_max.to_string(),
                failures: report.failure_count(),
                sections: report
                    .sections
                    .into_iter()
                    .map(|s| SectionRecord {
                        name: s.name.to_string(),
                        checked: s.checked,
                        failures: s.failures,
                    })
                    .collect(),
            };
            Outcome::new(command, exit, payload)
        }
        Err(e) => Outcome::error(command, &e),
    }
}

pub fn render_json(record: &OutputRecord) -> String {
    serde_json::to_string_pretty(record).expect("output record serializes")
}

/// Human-readable rendering carrying the same fields as the JSON form.
pub fn render_text(record: &OutputRecord) -> String {
    let mut out = String::new();
    let w = &mut out;
    match &record.payload {
        Payload::ContinuedFraction {
            d,
            a0,
            period,
            period_length,
        } => {
            let _ = writeln!(w, "sqrt({d}) = [{a0}; {}]", period.join(", "));
            let _ = writeln!(w, "a0={a0} period=[{}] l={period_length}", period.join(","));
        }
        Payload::Solutions {
            d,
            n,
            certificate,
            solutions,
            oracle,
            reason,
        } => {
            let _ = writeln!(w, "x^2 - {d}y^2 = {n}");
            if let Some(r) = reason {
                let _ = writeln!(w, "{r}");
            }
            if let Some(c) = certificate {
                let _ = writeln!(w, "fundamental certified by: {c}");
            }
            for (i, s) in solutions.iter().enumerate() {
                let _ = writeln!(w, "{:>4}: ({}, {})", i + 1, s.x, s.y);
            }
            if let Some(o) = oracle {
                let _ = writeln!(
                    w,
                    "oracle y<={}: {} found, {} generated, {}",
                    o.y_max,
                    o.oracle_count,
                    o.generated_count,
                    if o.agrees { "agree" } else { "DISAGREE" }
                );
            }
        }
        Payload::Family {
            family,
            k,
            n,
            d,
            answer,
            form,
            reason,
            solutions,
        } => {
            let _ = writeln!(w, "family {family} k={k} N={n} d={d}: {answer}");
            if let Some(f) = form {
                let _ = writeln!(w, "form: {f}");
            }
            if let Some(r) = reason {
                let _ = writeln!(w, "reason: {r}");
            }
            for (i, s) in solutions.iter().enumerate() {
                let _ = writeln!(w, "{:>4}: ({}, {})", i + 1, s.x, s.y);
            }
        }
        Payload::Verify {
            k_max,
            count,
            y_max,
            sections,
            failures,
        } => {
            let _ = writeln!(w, "verify k_max={k_max} count={count} y_max={y_max}");
            for s in sections {
                let verdict = if s.failures.is_empty() { "PASS" } else { "FAIL" };
                let _ = writeln!(w, "{verdict} {} ({} checked)", s.name, s.checked);
                for f in &s.failures {
                    let _ = writeln!(w, "    {f}");
                }
            }
            let _ = writeln!(w, "failures={failures}");
        }
        Payload::Error { message } => {
            let _ = writeln!(w, "error: {message}");
        }
    }
    out
}
