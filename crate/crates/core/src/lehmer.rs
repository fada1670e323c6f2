//! Lehmer pairs attached to `γ = u + v√−6`, their odd-index terms, and the
//! exponent bound obtained from primitive divisors.
//!
//! With `α = γ/√3` and `β = γ̄/√3` we have `(α+β)² = 4u²/3` and
//! `αβ = (u² + 6v²)/3`. For odd `k` the Lehmer term is
//! `(αᵏ − βᵏ)/(α − β) = Im(γᵏ) / (v·3^((k−1)/2))`, so everything reduces to
//! exact powering in `Z[√−6]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ntheory::{factorize, is_prime, legendre, primes_up_to};
use crate::quadring::QuadInt;

/// Smallest prime index beyond which every Lehmer term has a primitive divisor.
pub const PRIMITIVE_DIVISOR_THRESHOLD: u64 = 7;

/// The pair `(u, v)` with `v ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairParams {
    u: BigInt,
    v: BigInt,
}

impl PairParams {
    pub fn new(u: impl Into<BigInt>, v: impl Into<BigInt>) -> Result<Self> {
        let v = v.into();
        if v.is_zero() {
            return Err(Error::ZeroV);
        }
        Ok(PairParams { u: u.into(), v })
    }

    pub fn u(&self) -> &BigInt {
        &self.u
    }

    pub fn v(&self) -> &BigInt {
        &self.v
    }

    pub fn gamma(&self) -> QuadInt {
        QuadInt::new(self.u.clone(), self.v.clone())
    }

    /// `(α+β)²`, or `None` when it is not a rational integer.
    pub fn trace_squared(&self) -> Option<BigInt> {
        let four_u2: BigInt = 4 * &self.u * &self.u;
        four_u2.is_multiple_of(&BigInt::from(3)).then(|| four_u2 / 3)
    }

    /// `αβ`, or `None` when it is not a rational integer.
    pub fn product(&self) -> Option<BigInt> {
        let norm = self.gamma().norm();
        norm.is_multiple_of(&BigInt::from(3)).then(|| norm / 3)
    }

    /// Whether `(α, β)` is a Lehmer pair.
    pub fn is_lehmer(&self) -> bool {
        if self.u.is_zero() || !self.u.is_multiple_of(&BigInt::from(3)) {
            return false;
        }
        match (self.trace_squared(), self.product()) {
            (Some(s), Some(p)) => s.gcd(&p).is_one(),
            _ => false,
        }
    }

    /// The Lehmer term of odd index `k`.
    pub fn lehmer_term(&self, k: u32) -> Result<BigInt> {
        if k % 2 == 0 {
            return Err(Error::EvenIndex(k));
        }
        let imag = self.gamma().pow(k).b;
        let denom = &self.v * BigInt::from(3).pow((k - 1) / 2);
        let (quot, rem) = imag.div_rem(&denom);
        if !rem.is_zero() {
            return Err(Error::NonIntegralTerm {
                u: self.u.to_string(),
                v: self.v.to_string(),
                k,
            });
        }
        Ok(quot)
    }
}

pub fn pair_is_lehmer(p: &PairParams) -> bool {
    p.is_lehmer()
}

pub fn lehmer_term(p: &PairParams, k: u32) -> Result<BigInt> {
    p.lehmer_term(k)
}

/// `B_q`: `q − 1` when `−6` is a square mod `q`, else `q + 1`.
pub fn bq(q: u64) -> Result<u64> {
    if q == 2 || q == 3 {
        return Err(Error::ExcludedPrime(q));
    }
    if !is_prime(q) {
        return Err(Error::NotOddPrime(q));
    }
    match legendre(&BigInt::from(-6), q)? {
        1 => Ok(q - 1),
        -1 => Ok(q + 1),
        _ => unreachable!("q does not divide 6"),
    }
}

/// Upper bound on a prime exponent `n` with `ũ_n = r′`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentBound {
    pub bound: u64,
    /// `(q, B_q)` for every prime `q | r′` with `q ∤ 6v`, ascending in `q`.
    pub contributors: Vec<(u64, u64)>,
}

impl ExponentBound {
    /// Odd primes `n ≤ bound`.
    pub fn odd_prime_exponents(&self) -> Vec<u32> {
        primes_up_to(self.bound)
            .into_iter()
            .skip(1)
            .map(|n| n as u32)
            .collect()
    }
}

/// Computes the bound for signed `r′` and `v`; only absolute values matter.
pub fn bound_b(r_prime: i64, v: i64) -> Result<ExponentBound> {
    if r_prime == 0 {
        return Err(Error::ZeroInput);
    }
    if v == 0 {
        return Err(Error::ZeroV);
    }
    let six_v = 6 * v.unsigned_abs();
    let mut contributors = Vec::new();
    for q in factorize(r_prime.unsigned_abs())?.primes() {
        if six_v % q != 0 {
            contributors.push((q, bq(q)?));
        }
    }
    let bound = contributors
        .iter()
        .map(|&(_, b)| b)
        .fold(PRIMITIVE_DIVISOR_THRESHOLD, u64::max);
    Ok(ExponentBound {
        bound,
        contributors,
    })
}
