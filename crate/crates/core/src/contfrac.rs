//! Periodic continued fractions of `sqrt(d)` and their convergents.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{surd_step, QuadraticSurd};
use crate::error::Result;

/// `sqrt(d) = [a0; a1, ..., a_{l-1}, 2 a0]` with the bar over the block `a1..a_l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SqrtCF {
    d: BigUint,
    a0: BigUint,
    period: Vec<BigUint>,
}

impl SqrtCF {
    /// Builds an expansion from a known pattern. Panics if `period` is empty.
    pub fn from_parts(d: BigUint, a0: BigUint, period: Vec<BigUint>) -> Self {
        assert!(!period.is_empty(), "period of sqrt(d) has at least one term");
        SqrtCF { d, a0, period }
    }

    pub fn d(&self) -> &BigUint {
        &self.d
    }

    pub fn a0(&self) -> &BigUint {
        &self.a0
    }

    /// The repeating block `a1..a_l`.
    pub fn period(&self) -> &[BigUint] {
        &self.period
    }

    pub fn period_length(&self) -> usize {
        self.period.len()
    }

    /// `a_n` of the infinite expansion, using `a_{l+j} = a_j` for `j >= 1`.
    pub fn quotient(&self, n: usize) -> &BigUint {
        if n == 0 {
            &self.a0
        } else {
            &self.period[(n - 1) % self.period.len()]
        }
    }

    pub fn quotients(&self) -> impl Iterator<Item = &BigUint> + '_ {
        std::iter::once(&self.a0).chain(self.period.iter().cycle())
    }

    pub fn convergents(&self) -> Convergents<'_> {
        Convergents::new(self)
    }

    /// The last term of the period equals `2 a0`.
    pub fn ends_with_double_a0(&self) -> bool {
        self.period.last() == Some(&(&self.a0 << 1u32))
    }

    /// `a1..a_{l-1}` reads the same in both directions.
    pub fn is_symmetric(&self) -> bool {
        let body = &self.period[..self.period.len() - 1];
        body.iter().eq(body.iter().rev())
    }
}

impl fmt::Display for SqrtCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};", self.a0)?;
        for (i, a) in self.period.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{a}")?;
        }
        f.write_str("]")
    }
}

/// Expands `sqrt(d)`.
///
/// The period ends at the first step whose surd state equals the state after
/// the first step; `a_l = 2 a0` and the symmetry of the period are then checked
/// rather than used as the stopping rule.
pub fn expand_sqrt(d: &BigUint) -> Result<SqrtCF> {
    let start = QuadraticSurd::sqrt(d.clone())?;
    let (a0, first) = surd_step(&start);

    let mut period = Vec::new();
    let mut state = first.clone();
    loop {
        let (a, next) = surd_step(&state);
        period.push(a);
        if next == first {
            break;
        }
        state = next;
    }

    let cf = SqrtCF {
        d: d.clone(),
        a0,
        period,
    };
    assert!(cf.ends_with_double_a0(), "period of sqrt({d}) must end in 2*a0");
    debug_assert!(cf.is_symmetric());
    Ok(cf)
}

pub fn period_length(d: &BigUint) -> Result<usize> {
    Ok(expand_sqrt(d)?.period_length())
}

/// The n-th convergent `p_n / q_n = [a0; a1, ..., a_n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Convergent {
    pub n: usize,
    pub p: BigUint,
    pub q: BigUint,
}

/// Lazily generated convergents using
/// `p_n = a_n p_{n-1} + p_{n-2}`, `q_n = a_n q_{n-1} + q_{n-2}`
/// from `p_{-1} = 1, q_{-1} = 0, p_{-2} = 0, q_{-2} = 1`.
#[derive(Debug, Clone)]
pub struct Convergents<'a> {
    cf: &'a SqrtCF,
    n: usize,
    p: (BigUint, BigUint),
    q: (BigUint, BigUint),
}

impl<'a> Convergents<'a> {
    fn new(cf: &'a SqrtCF) -> Self {
        Convergents {
            cf,
            n: 0,
            p: (BigUint::zero(), BigUint::one()),
            q: (BigUint::one(), BigUint::zero()),
        }
    }
}

impl Iterator for Convergents<'_> {
    type Item = Convergent;

    fn next(&mut self) -> Option<Convergent> {
        let a = self.cf.quotient(self.n);
        let p = a * &self.p.1 + &self.p.0;
        let q = a * &self.q.1 + &self.q.0;
        let prev_p = std::mem::replace(&mut self.p.1, p.clone());
        self.p.0 = prev_p;
        let prev_q = std::mem::replace(&mut self.q.1, q.clone());
        self.q.0 = prev_q;
        let item = Convergent { n: self.n, p, q };
        self.n += 1;
        Some(item)
    }
}

pub fn convergent(cf: &SqrtCF, n: usize) -> Convergent {
    cf.convergents()
        .nth(n)
        .expect("convergent stream is infinite")
}

/// `gcd(p, q)`; always 1 for a convergent.
pub fn convergent_gcd(c: &Convergent) -> BigUint {
    c.p.gcd(&c.q)
}
