//! Exact integer primitives: integer square roots and the `(P + sqrt(d)) / Q`
//! state that drives the continued-fraction expansion of `sqrt(d)`.
//!
//! Nothing in here touches floating point.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Floor of the square root of `n`, together with whether `n` is a perfect square.
///
/// Values below 2^64 use the standard library's integer root; larger values run
/// Newton's iteration `x <- (x + n/x) / 2` from an overestimate and stop as soon
/// as the iterate stops decreasing.
pub fn isqrt(n: &BigUint) -> (BigUint, bool) {
    if let Some(small) = n.to_u64() {
        let r = small.isqrt();
        return (BigUint::from(r), r.checked_mul(r) == Some(small));
    }
    let root = newton_isqrt(n);
    let exact = &root * &root == *n;
    (root, exact)
}

fn newton_isqrt(n: &BigUint) -> BigUint {
    if n.is_zero() {
        return BigUint::zero();
    }
    // 2^ceil(bits/2) >= sqrt(n)
    let mut x = BigUint::one() << n.bits().div_ceil(2);
    loop {
        let y = (&x + n / &x) >> 1u32;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// `Some(root)` when `n` is a perfect square.
pub fn exact_sqrt(n: &BigUint) -> Option<BigUint> {
    match isqrt(n) {
        (r, true) => Some(r),
        _ => None,
    }
}

pub fn is_perfect_square(n: &BigUint) -> bool {
    isqrt(n).1
}

/// Floor of `sqrt(d)`, rejecting perfect squares.
pub(crate) fn nonsquare_root(d: &BigUint) -> Result<BigUint> {
    let (root, exact) = isqrt(d);
    if exact {
        return Err(Error::PerfectSquare(d.clone()));
    }
    Ok(root)
}

/// The quadratic irrational `(P + sqrt(d)) / Q`.
///
/// Always satisfies `Q != 0`, `Q | d - P^2` and `d` non-square.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    p: BigInt,
    q: BigInt,
    d: BigUint,
    // floor(sqrt(d)), kept alongside so stepping never recomputes it
    root: BigUint,
}

impl QuadraticSurd {
    pub fn new(p: BigInt, q: BigInt, d: BigUint) -> Result<Self> {
        let root = nonsquare_root(&d)?;
        if q.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let norm = BigInt::from(d.clone()) - &p * &p;
        if !norm.is_multiple_of(&q) {
            return Err(Error::NotReduced {
                p: p.to_string(),
                q: q.to_string(),
                d,
            });
        }
        Ok(QuadraticSurd { p, q, d, root })
    }

    /// The starting state `sqrt(d) = (0 + sqrt(d)) / 1`.
    pub fn sqrt(d: BigUint) -> Result<Self> {
        let root = nonsquare_root(&d)?;
        Ok(QuadraticSurd {
            p: BigInt::zero(),
            q: BigInt::one(),
            d,
            root,
        })
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn d(&self) -> &BigUint {
        &self.d
    }

    /// `floor(sqrt(d))`.
    pub fn isqrt_d(&self) -> &BigUint {
        &self.root
    }

    /// `floor((P + sqrt(d)) / Q)`.
    pub fn floor(&self) -> BigInt {
        // floor(P + sqrt(d)) = P + root, and sqrt(d) is irrational, so for
        // negative Q the quotient is never an integer.
        let top = &self.p + BigInt::from(self.root.clone());
        if self.q.sign() == Sign::Plus {
            top.div_floor(&self.q)
        } else {
            let abs_q = -&self.q;
            -(top.div_floor(&abs_q)) - 1
        }
    }

    /// `(a, 1 / (alpha - a))` with `a = floor(alpha)`.
    ///
    /// The successor is `P' = aQ - P`, `Q' = (d - P'^2) / Q`; the division is
    /// exact whenever `Q | d - P^2`, which is checked on every step.
    pub fn step(&self) -> (BigInt, QuadraticSurd) {
        let a = self.floor();
        let p_next = &a * &self.q - &self.p;
        let norm = BigInt::from(self.d.clone()) - &p_next * &p_next;
        let (q_next, rem) = norm.div_rem(&self.q);
        assert!(rem.is_zero(), "surd step lost the Q | d - P^2 invariant");
        // d non-square => d - P'^2 != 0
        debug_assert!(!q_next.is_zero());
        let next = QuadraticSurd {
            p: p_next,
            q: q_next,
            d: self.d.clone(),
            root: self.root.clone(),
        };
        (a, next)
    }
}

/// One continued-fraction step on a state with `alpha > 1` (or the initial
/// `sqrt(d)`), returning the nonnegative partial quotient.
pub fn surd_step(alpha: &QuadraticSurd) -> (BigUint, QuadraticSurd) {
    let (a, next) = alpha.step();
    let a = a
        .to_biguint()
        .expect("partial quotient of a surd > 1 is nonnegative");
    (a, next)
}
