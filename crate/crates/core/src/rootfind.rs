//! The integer polynomial in `u` whose roots give `γ = u + v√−6` with
//! `Im(γⁿ) = r·3^((n−1)/2)`, and exact extraction of all its integer roots.
//!
//! Integer roots are found by a modular sieve. For small primes `p` the roots
//! mod `p` are found by evaluating `Im((u + v√−6)ⁿ)` in `F_p[√−6]` at every
//! residue (`O(p log n)` per prime, independent of the polynomial's degree).
//! Residue sets are combined by CRT until the modulus exceeds the width of the
//! root interval; every survivor is then screened by a few more primes and
//! confirmed with exact arithmetic.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ntheory::{is_prime, primes_up_to};
use crate::quadring::QuadInt;

const SIEVE_PRIME_LIMIT: u64 = 2000;
const MAX_RESIDUES: usize = 1 << 14;
const SCREEN_PRIMES: usize = 6;

/// Dense integer polynomial; `coeffs[i]` multiplies `uⁱ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Trailing zero coefficients are dropped.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("non-empty")
    }

    /// Horner evaluation.
    pub fn eval(&self, u: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * u + c)
    }
}

fn check_params(n: u32, v: i64, r: u64) -> Result<()> {
    if n < 3 || n % 2 == 0 || !is_prime(n as u64) {
        return Err(Error::InvalidExponent(n));
    }
    if v == 0 {
        return Err(Error::ZeroV);
    }
    if r == 0 {
        return Err(Error::ZeroInput);
    }
    Ok(())
}

/// `r·3^((n−1)/2)`.
pub fn imaginary_target(n: u32, r: u64) -> BigInt {
    BigInt::from(r) * BigInt::from(3).pow((n - 1) / 2)
}

/// `Σ_{k odd} C(n,k)·u^(n−k)·vᵏ·(−6)^((k−1)/2) − r·3^((n−1)/2)`.
pub fn build_poly(n: u32, v: i64, r: u64) -> Result<IntPoly> {
    check_params(n, v, r)?;
    let n_us = n as usize;
    let v_big = BigInt::from(v);
    let mut coeffs = vec![BigInt::zero(); n_us];
    let mut binom = BigInt::from(1);
    let mut v_pow = BigInt::from(1);
    let mut six_pow = BigInt::from(1);
    for k in 1..=n_us {
        binom = binom * (n_us - k + 1) / k;
        v_pow *= &v_big;
        if k % 2 == 1 {
            if k > 1 {
                six_pow *= -6;
            }
            coeffs[n_us - k] = &binom * &v_pow * &six_pow;
        }
    }
    coeffs[0] -= imaginary_target(n, r);
    Ok(IntPoly::new(coeffs))
}

/// Evaluates the same polynomial as [`build_poly`] through ring powering.
pub fn eval_via_ring(u: &BigInt, n: u32, v: i64, r: u64) -> BigInt {
    QuadInt::new(u.clone(), v).pow(n).b - imaginary_target(n, r)
}

fn ceil_root(m: &BigUint, k: u32) -> BigUint {
    let t = m.nth_root(k);
    if t.pow(k) < *m {
        t + 1u32
    } else {
        t
    }
}

/// `2·max_{i<d} ⌈|a_i/a_d|^(1/(d−i))⌉`, at least 1; bounds every real root.
pub fn root_bound(p: &IntPoly) -> BigInt {
    let d = p.degree();
    let lead = p.leading().magnitude();
    let mut best = BigUint::zero();
    for (i, a) in p.coeffs()[..d].iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let ratio = a.magnitude().div_ceil(lead);
        best = best.max(ceil_root(&ratio, (d - i) as u32));
    }
    BigInt::from((best * 2u32).max(BigUint::from(1u32)))
}

fn ceil_root_u64(m: u64, k: u32) -> u64 {
    let mut t = 1u64;
    while t.checked_pow(k).is_some_and(|x| x < m) {
        t += 1;
    }
    t
}

/// Closed-form bound for the polynomial of `(n, v, r)`, never below
/// [`root_bound`] of [`build_poly`]: the middle coefficients contribute at
/// most `n|v|` and the constant at most `⌈√6|v|⌉·⌈((1+r)/n)^(1/(n−1))⌉`.
pub(crate) fn family_root_bound(n: u32, v: i64, r: u64) -> u64 {
    let av = v.unsigned_abs() as u128;
    let middle = n as u128 * av;
    let x = (6 * av * av).isqrt() + 1;
    let t = ceil_root_u64((r.saturating_add(1)).div_ceil(n as u64), n - 1) as u128;
    let m = 2 * middle.max(x * t);
    u64::try_from(m).unwrap_or(u64::MAX / 4)
}

fn sieve_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| primes_up_to(SIEVE_PRIME_LIMIT))
}

/// Arithmetic in `F_p[ω]/(ω² + 6)` for a small prime `p`.
#[derive(Debug, Clone, Copy)]
struct ModRing {
    p: u64,
    omega_sq: u64,
}

impl ModRing {
    fn new(p: u64) -> Self {
        ModRing {
            p,
            omega_sq: (p * 6 - 6) % p,
        }
    }

    #[inline]
    fn mul(&self, x: (u64, u64), y: (u64, u64)) -> (u64, u64) {
        let p = self.p;
        let bb = x.1 * y.1 % p;
        (
            (x.0 * y.0 + self.omega_sq * bb) % p,
            (x.0 * y.1 + x.1 * y.0) % p,
        )
    }

    fn pow(&self, mut base: (u64, u64), mut e: u32) -> (u64, u64) {
        let mut acc = (1 % self.p, 0);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

/// The polynomial of `(n, v, r)` reduced mod one prime.
struct ModEvaluator {
    ring: ModRing,
    n: u32,
    v: u64,
    target: u64,
}

impl ModEvaluator {
    fn new(p: u64, n: u32, v: i64, r: u64) -> Self {
        let ring = ModRing::new(p);
        let three = ring.pow((3 % p, 0), (n - 1) / 2).0;
        ModEvaluator {
            ring,
            n,
            v: v.rem_euclid(p as i64) as u64,
            target: (r % p) * three % p,
        }
    }

    #[inline]
    fn is_root(&self, u: u64) -> bool {
        self.ring.pow((u, self.v), self.n).1 == self.target
    }

    fn is_root_signed(&self, u: i128) -> bool {
        self.is_root(u.rem_euclid(self.ring.p as i128) as u64)
    }

    /// Roots in `0..p`; the polynomial is even, so only half the residues are evaluated.
    fn roots(&self) -> Vec<u64> {
        let p = self.ring.p;
        let mut out = Vec::new();
        for u in 0..=p / 2 {
            if self.is_root(u) {
                out.push(u);
                if u != 0 && p - u != u {
                    out.push(p - u);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// Roots mod a prime `p` of the polynomial of `(n, v, r)`, ascending.
pub fn roots_mod_prime(n: u32, v: i64, r: u64, p: u64) -> Result<Vec<u64>> {
    check_params(n, v, r)?;
    if !is_prime(p) || p >= 1 << 31 {
        return Err(Error::NotOddPrime(p));
    }
    Ok(ModEvaluator::new(p, n, v, r).roots())
}

fn crt_combine(residues: &[u64], modulus: u64, roots: &[u64], p: u64) -> Vec<u64> {
    let inv = BigInt::from(modulus % p)
        .modinv(&BigInt::from(p))
        .expect("p does not divide the modulus");
    let inv: u64 = inv.try_into().expect("small");
    let mut out = Vec::with_capacity(residues.len() * roots.len());
    for &s in residues {
        let s_mod = s % p;
        for &t in roots {
            let k = (t + p - s_mod) % p * inv % p;
            out.push(s + modulus * k);
        }
    }
    out
}

/// All integer roots of [`build_poly`]`(n, v, r)`, ascending and distinct.
pub fn integer_roots(n: u32, v: i64, r: u64) -> Result<Vec<BigInt>> {
    check_params(n, v, r)?;
    let bound = family_root_bound(n, v, r) as i128;
    let span = (2 * bound + 1) as u128;
    let lead = n as u128 * v.unsigned_abs() as u128;

    let mut modulus = 1u64;
    let mut residues = vec![0u64];
    let mut screens: Vec<ModEvaluator> = Vec::new();
    for &p in sieve_primes() {
        if lead % p as u128 == 0 {
            continue;
        }
        let eval = ModEvaluator::new(p, n, v, r);
        if modulus as u128 >= span {
            screens.push(eval);
            if screens.len() >= SCREEN_PRIMES {
                break;
            }
            continue;
        }
        let roots = eval.roots();
        if roots.is_empty() {
            return Ok(Vec::new());
        }
        match modulus.checked_mul(p) {
            Some(next) if residues.len() * roots.len() <= MAX_RESIDUES => {
                residues = crt_combine(&residues, modulus, &roots, p);
                modulus = next;
            }
            _ => screens.push(eval),
        }
    }

    let step = modulus as i128;
    let mut found = Vec::new();
    for &s in &residues {
        let mut u = -bound + (s as i128 + bound).rem_euclid(step);
        while u <= bound {
            if screens.iter().all(|e| e.is_root_signed(u)) {
                let big = BigInt::from(u);
                if eval_via_ring(&big, n, v, r).is_zero() {
                    found.push(big);
                }
            }
            u += step;
        }
    }
    found.sort();
    found.dedup();
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{Signed, ToPrimitive};

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn brute_roots(n: u32, v: i64, r: u64) -> Vec<BigInt> {
        let p = build_poly(n, v, r).unwrap();
        let m = root_bound(&p).to_i64().unwrap();
        (-m..=m).map(BigInt::from).filter(|u| p.eval(u).is_zero()).collect()
    }

    #[test]
    fn build_poly_examples() {
        assert_eq!(build_poly(3, 2, 2).unwrap().coeffs(), ints(&[-54, 0, 6]).as_slice());
        assert_eq!(build_poly(3, 1, 7).unwrap().coeffs(), ints(&[-27, 0, 3]).as_slice());
        assert_eq!(
            build_poly(5, 1, 11).unwrap().coeffs(),
            ints(&[-63, 0, -60, 0, 5]).as_slice()
        );
        let p = build_poly(7, -3, 5).unwrap();
        assert_eq!(p.degree(), 6);
        assert_eq!(p.leading(), &BigInt::from(-21));
    }

    #[test]
    fn build_poly_rejects_bad_exponents() {
        for n in [0, 1, 2, 4, 9, 15] {
            assert!(matches!(build_poly(n, 1, 1), Err(Error::InvalidExponent(_))));
        }
        assert!(matches!(build_poly(3, 0, 1), Err(Error::ZeroV)));
        assert!(integer_roots(9, 1, 1).is_err());
    }

    #[test]
    fn eval_via_ring_examples() {
        assert_eq!(eval_via_ring(&BigInt::from(3), 3, 2, 2), BigInt::zero());
        assert_eq!(eval_via_ring(&BigInt::from(0), 3, 1, 7), BigInt::from(-27));
        assert_eq!(eval_via_ring(&BigInt::from(3), 3, 1, 7), BigInt::zero());
    }

    #[test]
    fn root_bound_examples() {
        assert_eq!(root_bound(&build_poly(3, 2, 2).unwrap()), BigInt::from(6));
        assert!(root_bound(&IntPoly::new(ints(&[-5, 1]))) >= BigInt::from(5));
        assert!(root_bound(&build_poly(3, 1, 7).unwrap()) >= BigInt::from(3));
        assert_eq!(root_bound(&IntPoly::new(ints(&[0, 0, 4]))), BigInt::from(1));
    }

    #[test]
    fn integer_root_examples() {
        assert_eq!(integer_roots(3, 2, 2).unwrap(), ints(&[-3, 3]));
        assert!(integer_roots(3, 1, 5).unwrap().is_empty());
        assert_eq!(integer_roots(3, 1, 7).unwrap(), ints(&[-3, 3]));
        // the r = 11 row needs v = −1
        assert!(integer_roots(5, 1, 11).unwrap().is_empty());
        assert_eq!(integer_roots(5, -1, 11).unwrap(), ints(&[-3, 3]));
    }

    #[test]
    fn ring_evaluation_matches_coefficients() {
        for n in [3u32, 5, 7, 11] {
            for v in (-6i64..=6).filter(|&v| v != 0) {
                for r in 1..=50u64 {
                    let p = build_poly(n, v, r).unwrap();
                    for u in -200i64..=200 {
                        let u = BigInt::from(u);
                        assert_eq!(eval_via_ring(&u, n, v, r), p.eval(&u));
                    }
                }
            }
        }
    }

    #[test]
    fn polynomial_is_even_and_odd_in_v() {
        for n in [3u32, 5, 7, 11, 13] {
            for v in [-5i64, -2, 1, 4] {
                for u in -40i64..=40 {
                    let u = BigInt::from(u);
                    let target = imaginary_target(n, 9);
                    assert_eq!(eval_via_ring(&-&u, n, v, 9), eval_via_ring(&u, n, v, 9));
                    assert_eq!(
                        eval_via_ring(&u, n, -v, 9) + &target,
                        -(eval_via_ring(&u, n, v, 9) + &target)
                    );
                }
            }
        }
    }

    #[test]
    fn family_bound_dominates_lagrange_bound() {
        for n in [3u32, 5, 7, 11, 13, 29] {
            for v in [-40i64, -7, -1, 1, 2, 5, 64] {
                for r in [1u64, 2, 7, 50, 999, 5000] {
                    let exact = root_bound(&build_poly(n, v, r).unwrap());
                    assert!(BigInt::from(family_root_bound(n, v, r)) >= exact, "n={n} v={v} r={r}");
                }
            }
        }
    }

    #[test]
    fn modular_roots_match_coefficient_reduction() {
        for (n, v, r) in [(3u32, 2i64, 2u64), (5, -1, 11), (7, 3, 40), (13, -2, 17)] {
            let poly = build_poly(n, v, r).unwrap();
            for p in [2u64, 3, 5, 7, 11, 13, 101] {
                let expected: Vec<u64> = (0..p)
                    .filter(|&u| poly.eval(&BigInt::from(u)).mod_floor(&BigInt::from(p)).is_zero())
                    .collect();
                assert_eq!(roots_mod_prime(n, v, r, p).unwrap(), expected, "n={n} v={v} r={r} p={p}");
            }
        }
        assert!(roots_mod_prime(3, 1, 1, 4).is_err());
    }

    #[test]
    fn crt_combine_reconstructs() {
        let out = crt_combine(&[1, 4], 5, &[2], 7);
        assert_eq!(out, vec![16, 9]);
        for x in out {
            assert!(x % 7 == 2 && [1, 4].contains(&(x % 5)));
        }
    }

    #[test]
    fn roots_are_complete_on_small_box() {
        for n in [3u32, 5, 7, 11] {
            for v in (-6i64..=6).filter(|&v| v != 0) {
                for r in 1..=50u64 {
                    let roots = integer_roots(n, v, r).unwrap();
                    assert_eq!(roots, brute_roots(n, v, r), "n={n} v={v} r={r}");
                    let m = root_bound(&build_poly(n, v, r).unwrap());
                    assert!(roots.iter().all(|u| u.abs() <= m));
                }
            }
        }
    }

    #[test]
    fn large_exponent_root() {
        // r = 4687 has (|x|, y, n) = (1277, 5, 11)
        let roots = integer_roots(11, 1, 4687).unwrap();
        assert!(!roots.is_empty());
        for u in &roots {
            assert!(eval_via_ring(u, 11, 1, 4687).is_zero());
        }
    }
}
