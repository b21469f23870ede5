//! Generalized Fibonacci and Lucas sequences.
//!
//! `U_0 = 0, U_1 = 1`, `V_0 = 2, V_1 = k`, and both satisfy
//! `W_{n+1} = k W_n + s W_{n-1}`. With `D = k^2 + 4s` every pair obeys the
//! norm identity `V_n^2 - D U_n^2 = 4 (-s)^n`, which is what turns `(V_n, U_n)`
//! into solutions of `x^2 - D y^2 = +-4`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LucasParams {
    k: BigInt,
    s: BigInt,
}

impl LucasParams {
    pub fn new(k: impl Into<BigInt>, s: impl Into<BigInt>) -> Result<Self> {
        let (k, s) = (k.into(), s.into());
        let disc = &k * &k + BigInt::from(4) * &s;
        if k.is_zero() || s.is_zero() || !disc.is_positive() {
            return Err(Error::InvalidLucasParams {
                k: k.to_string(),
                s: s.to_string(),
            });
        }
        Ok(LucasParams { k, s })
    }

    /// Fibonacci / Lucas numbers, `(k, s) = (1, 1)`.
    pub fn fibonacci() -> Self {
        LucasParams {
            k: BigInt::one(),
            s: BigInt::one(),
        }
    }

    pub fn k(&self) -> &BigInt {
        &self.k
    }

    pub fn s(&self) -> &BigInt {
        &self.s
    }

    /// `k^2 + 4s`.
    pub fn discriminant(&self) -> BigInt {
        &self.k * &self.k + BigInt::from(4) * &self.s
    }

    /// `(-s)^n`, the product `alpha*beta` raised to `n`.
    pub fn norm_power(&self, n: u64) -> BigInt {
        let q = -&self.s;
        pow_u64(&q, n)
    }

    pub fn iter(&self) -> LucasIter<'_> {
        LucasIter {
            params: self,
            n: 0,
            u: (BigInt::zero(), BigInt::one()),
            v: (BigInt::from(2), self.k.clone()),
        }
    }
}

fn pow_u64(base: &BigInt, mut e: u64) -> BigInt {
    if base.magnitude().is_one() {
        // +-1 needs no multiplication
        return if base.is_negative() && e % 2 == 1 {
            -BigInt::one()
        } else {
            BigInt::one()
        };
    }
    let mut acc = BigInt::one();
    let mut b = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

/// `(n, U_n, V_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LucasPair {
    pub n: u64,
    pub u: BigInt,
    pub v: BigInt,
}

impl LucasPair {
    /// `V_n^2 - D U_n^2 == 4 (-s)^n`.
    pub fn satisfies_norm_identity(&self, params: &LucasParams) -> bool {
        &self.v * &self.v - params.discriminant() * &self.u * &self.u
            == BigInt::from(4) * params.norm_power(self.n)
    }
}

/// Successive pairs `(U_n, V_n)` for `n = 0, 1, 2, ...`.
#[derive(Debug, Clone)]
pub struct LucasIter<'a> {
    params: &'a LucasParams,
    n: u64,
    u: (BigInt, BigInt),
    v: (BigInt, BigInt),
}

impl Iterator for LucasIter<'_> {
    type Item = LucasPair;

    fn next(&mut self) -> Option<LucasPair> {
        let LucasParams { k, s } = self.params;
        let item = LucasPair {
            n: self.n,
            u: self.u.0.clone(),
            v: self.v.0.clone(),
        };
        let u_next = k * &self.u.1 + s * &self.u.0;
        let v_next = k * &self.v.1 + s * &self.v.0;
        self.u = (std::mem::replace(&mut self.u.1, u_next.clone()), u_next);
        self.v = (std::mem::replace(&mut self.v.1, v_next.clone()), v_next);
        self.n += 1;
        Some(item)
    }
}

/// `(U_n, V_n)` by walking the recurrence forward.
pub fn lucas_pair(params: &LucasParams, n: u64) -> LucasPair {
    let LucasParams { k, s } = params;
    let (mut u0, mut u1) = (BigInt::zero(), BigInt::one());
    let (mut v0, mut v1) = (BigInt::from(2), k.clone());
    for _ in 0..n {
        let u2 = k * &u1 + s * &u0;
        let v2 = k * &v1 + s * &v0;
        u0 = std::mem::replace(&mut u1, u2);
        v0 = std::mem::replace(&mut v1, v2);
    }
    LucasPair { n, u: u0, v: v0 }
}

pub fn lucas_u(params: &LucasParams, n: u64) -> BigInt {
    lucas_pair(params, n).u
}

pub fn lucas_v(params: &LucasParams, n: u64) -> BigInt {
    lucas_pair(params, n).v
}

/// `(U_n, V_n)` in `O(log n)` steps via
/// `U_{2m} = U_m V_m`, `V_{2m} = V_m^2 - 2(-s)^m` and the unit step
/// `U_{m+1} = (k U_m + V_m) / 2`, `V_{m+1} = (D U_m + k V_m) / 2`.
pub fn lucas_pair_fast(params: &LucasParams, n: u64) -> LucasPair {
    let LucasParams { k, .. } = params;
    let disc = params.discriminant();
    let minus_s = -params.s();
    let two = BigInt::from(2);

    let mut u = BigInt::zero();
    let mut v = two.clone();
    // (-s)^m for the current index m
    let mut q_m = BigInt::one();
    let mut m = 0u64;
    for bit in (0..u64::BITS - n.leading_zeros()).rev() {
        // double
        u = &u * &v;
        v = &v * &v - &two * &q_m;
        q_m = &q_m * &q_m;
        m *= 2;
        if (n >> bit) & 1 == 1 {
            let (u_next, ru) = (k * &u + &v).div_rem(&two);
            let (v_next, rv) = (&disc * &u + k * &v).div_rem(&two);
            debug_assert!(ru.is_zero() && rv.is_zero());
            u = u_next;
            v = v_next;
            q_m *= &minus_s;
            m += 1;
        }
    }
    debug_assert_eq!(m, n);
    LucasPair { n, u, v }
}

/// Closed parity law for `U_n(k, +-1)`: `Ok(true)` when even.
///
/// For even `k`, `U_n` is even exactly when `n` is even; for odd `k`, exactly
/// when `3 | n`.
pub fn parity_u(params: &LucasParams, n: u64) -> Result<bool> {
    unit_s(params)?;
    Ok(if params.k().is_even() {
        n % 2 == 0
    } else {
        n % 3 == 0
    })
}

/// Closed parity law for `V_n(k, +-1)`: always even for even `k`; for odd `k`,
/// even exactly when `3 | n`.
pub fn parity_v(params: &LucasParams, n: u64) -> Result<bool> {
    unit_s(params)?;
    Ok(params.k().is_even() || n % 3 == 0)
}

fn unit_s(params: &LucasParams) -> Result<()> {
    if params.s().magnitude().is_one() {
        Ok(())
    } else {
        Err(Error::ParityNeedsUnitS(params.s().to_string()))
    }
}
