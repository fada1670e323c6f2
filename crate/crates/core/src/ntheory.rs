//! Elementary number theory over `u64` and arbitrary-precision integers.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

const SMALL_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// `a * b mod m` without overflow.
#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test for every 64-bit input.
///
/// Trial division by the first twelve primes, then a strong-pseudoprime test
/// to those same twelve bases. That witness set has no 64-bit liars.
pub fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES {
        if m == p {
            return true;
        }
        if m % p == 0 {
            return false;
        }
    }
    if m < 41 * 41 {
        return true;
    }

    let mut d = m - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL_PRIMES {
        let mut x = pow_mod(a, d, m);
        if x == 1 || x == m - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, m);
            if x == m - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i.saturating_mul(i);
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

/// Prime factorization as ascending `(prime, exponent)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Multiplies the factorization back out.
    pub fn value(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

/// Factors `m` by trial division.
pub fn factorize(m: u64) -> Result<Factorization> {
    if m == 0 {
        return Err(Error::ZeroInput);
    }
    let mut rest = m;
    let mut factors = Vec::new();
    let mut push = |rest: &mut u64, p: u64| {
        let mut e = 0;
        while *rest % p == 0 {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(&mut rest, 2);
    let mut p = 3u64;
    while p <= rest / p {
        push(&mut rest, p);
        p += 2;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { factors })
}

/// All positive divisors of `m`, ascending.
pub fn divisors(m: u64) -> Result<Vec<u64>> {
    let f = factorize(m)?;
    let mut divs = vec![1u64];
    for &(p, e) in f.factors() {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    Ok(divs)
}

/// Legendre symbol `(a / q)` for an odd prime `q`.
///
/// Computed with the binary reciprocity algorithm after reducing `a` mod `q`.
pub fn legendre(a: &BigInt, q: u64) -> Result<i8> {
    if q == 2 || !is_prime(q) {
        return Err(Error::NotOddPrime(q));
    }
    let reduced = a.mod_floor(&BigInt::from(q));
    let mut a = reduced.to_u64().expect("residue below a u64 modulus");
    let mut n = q;
    let mut sign = 1i8;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    Ok(if n == 1 { sign } else { 0 })
}

/// `floor(m^(1/k))`.
pub fn integer_nth_root(m: &BigUint, k: u32) -> BigUint {
    assert!(k >= 1, "root index must be positive");
    m.nth_root(k)
}

/// Writes `y = b^e` with `e >= 2` maximal, or returns `None`.
pub fn perfect_power(y: &BigUint) -> Option<(BigUint, u32)> {
    if *y < BigUint::from(2u32) {
        return None;
    }
    let max_exp = (y.bits() - 1) as u32;
    (2..=max_exp).rev().find_map(|e| {
        let b = y.nth_root(e);
        (b.pow(e) == *y).then_some((b, e))
    })
}
