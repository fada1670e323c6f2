//! Enumerates every non-trivial primitive solution of
//! `(x − r)² + x² + (x + r)² = yⁿ`, i.e. `3x² + 2r² = yⁿ`, for a given `r`.
//!
//! For each signed divisor `v` of `r` the prime exponents are capped by
//! [`bound_b`]; each exponent yields a polynomial in `u` whose integer roots
//! are candidate generators `γ = u + v√−6` with `γⁿ = 3^((n−1)/2)(3x + r√−6)`.
//! Composite exponents are recovered afterwards from perfect-power values of `y`.

use std::collections::BTreeSet;
use std::cmp::Ordering;
use std::fmt;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering as AtomicOrdering};
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::lehmer::{bound_b, PairParams};
use crate::ntheory::{divisors, perfect_power};
use crate::quadring::QuadInt;
use crate::rootfind::{imaginary_target, integer_roots};

/// One integer root `u` of the polynomial for `(n, v, r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub r: u64,
    pub v: i64,
    pub n: u32,
    pub u: BigInt,
}

impl Candidate {
    pub fn gamma(&self) -> QuadInt {
        QuadInt::new(self.u.clone(), self.v)
    }
}

/// A table row `(r, |x|, y, n)`. Ordered by `(r, n, y, |x|)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Solution {
    pub r: u64,
    pub x_abs: BigUint,
    pub y: BigUint,
    pub n: u32,
}

impl Solution {
    pub fn new(r: u64, x_abs: impl Into<BigUint>, y: impl Into<BigUint>, n: u32) -> Self {
        Solution {
            r,
            x_abs: x_abs.into(),
            y: y.into(),
            n,
        }
    }

    pub fn verify(&self) -> bool {
        verify_solution(
            &BigInt::from(self.x_abs.clone()),
            &BigInt::from(self.y.clone()),
            self.r,
            self.n,
        )
    }
}

impl Ord for Solution {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.r, self.n, &self.y, &self.x_abs).cmp(&(other.r, other.n, &other.y, &other.x_abs))
    }
}

impl PartialOrd for Solution {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r = {}: (|x|, y, n) = ({}, {}, {})", self.r, self.x_abs, self.y, self.n)
    }
}

/// `3x² + 2r² = yⁿ` with `gcd(x, y) = 1` and `xy ≠ 0`.
pub fn verify_solution(x: &BigInt, y: &BigInt, r: u64, n: u32) -> bool {
    if x.is_zero() || y.is_zero() || !x.gcd(y).is_one() {
        return false;
    }
    let r = BigInt::from(r);
    3 * x * x + 2 * &r * &r == y.pow(n)
}

/// Turns a root into a table row, or `None` when it does not come from a
/// primitive solution.
pub fn recover_solution(c: &Candidate) -> Option<Solution> {
    let gamma = c.gamma();
    let w = gamma.pow(c.n);
    if w.b != imaginary_target(c.n, c.r) {
        return None;
    }
    let (x, rem) = w.a.div_rem(&BigInt::from(3).pow(c.n.div_ceil(2)));
    if !rem.is_zero() {
        return None;
    }
    let (y, rem) = gamma.norm().div_rem(&BigInt::from(3));
    if !rem.is_zero() || y < BigInt::from(2) {
        return None;
    }
    if !verify_solution(&x, &y, c.r, c.n) {
        return None;
    }
    let pair = PairParams::new(c.u.clone(), c.v).ok()?;
    if !pair.is_lehmer() {
        return None;
    }
    Some(Solution {
        r: c.r,
        x_abs: x.magnitude().clone(),
        y: y.magnitude().clone(),
        n: c.n,
    })
}

/// Signed divisors `±d` of `r`, positive first for each `d`.
pub fn signed_divisors(r: u64) -> Vec<i64> {
    divisors(r)
        .unwrap_or_default()
        .into_iter()
        .flat_map(|d| [d as i64, -(d as i64)])
        .collect()
}

/// Every integer root over all `v | r` (both signs) and prime `n ≤ B`.
pub fn candidates(r: u64) -> Vec<Candidate> {
    if r == 0 || r % 3 == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for v in signed_divisors(r) {
        let r_prime = r as i64 / v;
        let bound = bound_b(r_prime, v).expect("r′ and v are non-zero");
        for n in bound.odd_prime_exponents() {
            let roots = integer_roots(n, v, r).expect("valid exponent and v");
            out.extend(roots.into_iter().map(|u| Candidate { r, v, n, u }));
        }
    }
    out
}

/// All prime-exponent solutions for one `r`, sorted by `(n, y, |x|)`.
pub fn solve_r(r: u64) -> Vec<Solution> {
    candidates(r)
        .iter()
        .filter_map(recover_solution)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Adds `(r, |x|, b^(e/f), n·f)` for each `f | e`, `f > 1`, whenever `y = bᵉ`.
pub fn expand_composite(sols: &[Solution]) -> Vec<Solution> {
    let mut out = BTreeSet::new();
    for s in sols {
        out.insert(s.clone());
        let Some((base, e)) = perfect_power(&s.y) else {
            continue;
        };
        for f in (2..=e).filter(|f| e % f == 0) {
            out.insert(Solution {
                r: s.r,
                x_abs: s.x_abs.clone(),
                y: base.pow(e / f),
                n: s.n * f,
            });
        }
    }
    out.into_iter().collect()
}

/// Snapshot passed to progress callbacks.
#[derive(Debug, Clone, Copy)]
pub struct Progress {
    pub r: u64,
    pub done: u64,
    pub total: u64,
    pub found: usize,
}

/// Solutions for every `r` in `r_min..=r_max`, ordered by `(r, n, y, |x|)`.
///
/// Runs on the current rayon pool; the result does not depend on its size.
pub fn solve_range(r_min: u64, r_max: u64, include_composite: bool) -> Vec<Solution> {
    solve_range_with_progress(r_min, r_max, include_composite, |_| {})
}

pub fn solve_range_with_progress<F>(
    r_min: u64,
    r_max: u64,
    include_composite: bool,
    progress: F,
) -> Vec<Solution>
where
    F: Fn(Progress) + Sync,
{
    if r_min > r_max {
        return Vec::new();
    }
    let total = r_max - r_min + 1;
    let done = AtomicU64::new(0);
    let found = AtomicUsize::new(0);
    let per_r: Vec<Vec<Solution>> = (r_min..=r_max)
        .into_par_iter()
        .map(|r| {
            let sols = solve_r(r);
            let found = found.fetch_add(sols.len(), AtomicOrdering::Relaxed) + sols.len();
            let done = done.fetch_add(1, AtomicOrdering::Relaxed) + 1;
            progress(Progress {
                r,
                done,
                total,
                found,
            });
            sols
        })
        .collect();
    let mut all: Vec<Solution> = per_r.into_iter().flatten().collect();
    if include_composite {
        all = expand_composite(&all);
    }
    all.sort();
    all.dedup();
    all
}

/// Quadratic-residue tables for the screening moduli of the oracle.
struct SquareScreen {
    // (combined modulus, inverse of 3 mod it, component moduli)
    groups: [(u64, u64, &'static [u64]); 2],
    squares: Vec<(u64, Vec<bool>)>,
}

const SCREEN_A: &[u64] = &[64, 5, 7, 11, 13, 17];
const SCREEN_B: &[u64] = &[19, 23, 29, 31, 37];

impl SquareScreen {
    fn get() -> &'static SquareScreen {
        static SCREEN: OnceLock<SquareScreen> = OnceLock::new();
        SCREEN.get_or_init(|| {
            let group = |ms: &'static [u64]| {
                let m: u64 = ms.iter().product();
                let inv = (1..m).find(|k| 3 * k % m == 1).expect("3 is a unit");
                (m, inv, ms)
            };
            let squares = SCREEN_A
                .iter()
                .chain(SCREEN_B)
                .map(|&m| {
                    let mut table = vec![false; m as usize];
                    for t in 0..m {
                        table[(t * t % m) as usize] = true;
                    }
                    (m, table)
                })
                .collect();
            SquareScreen {
                groups: [group(SCREEN_A), group(SCREEN_B)],
                squares,
            }
        })
    }

    fn table(&self, m: u64) -> &[bool] {
        &self.squares.iter().find(|(k, _)| *k == m).expect("known modulus").1
    }

    /// Whether `(yⁿ − 2r²)/3` can be a square given `yⁿ` mod each group modulus.
    fn passes(&self, powers: [u64; 2], two_r2: [u64; 2]) -> bool {
        self.groups.iter().enumerate().all(|(i, &(m, inv3, parts))| {
            let t = (powers[i] + m - two_r2[i]) % m * inv3 % m;
            parts.iter().all(|&q| self.table(q)[(t % q) as usize])
        })
    }
}

/// Exhaustive search over `y ∈ [2, y_max]`, `n ∈ [2, n_max]`: accepts when
/// `(yⁿ − 2r²)/3` is a positive perfect square `x²` and the row verifies.
///
/// Shares no code with the root-finding path; cheap modular square screens
/// only skip `(y, n)` pairs that cannot pass the exact test.
pub fn brute_force_oracle(r: u64, y_max: u64, n_max: u32) -> Vec<Solution> {
    let screen = SquareScreen::get();
    let two_r2_big = BigUint::from(r) * r * 2u32;
    let two_r2 = screen.groups.map(|(m, _, _)| (&two_r2_big % m).try_into().unwrap_or(0u64));
    let two_r2_mod3 = (&two_r2_big % 3u32).try_into().unwrap_or(0u64);
    let mut out = BTreeSet::new();
    for y in 2..=y_max {
        let y_mod = screen.groups.map(|(m, _, _)| y % m);
        let mut powers = [1u64; 2];
        let mut pow3 = 1u64;
        for n in 1..=n_max {
            for i in 0..2 {
                powers[i] = powers[i] * y_mod[i] % screen.groups[i].0;
            }
            pow3 = pow3 * (y % 3) % 3;
            if n < 2 || pow3 != two_r2_mod3 || !screen.passes(powers, two_r2) {
                continue;
            }
            let yn = BigUint::from(y).pow(n);
            if yn <= two_r2_big {
                continue;
            }
            let (x2, rem) = (yn - &two_r2_big).div_rem(&BigUint::from(3u32));
            if !rem.is_zero() {
                continue;
            }
            let x = x2.sqrt();
            if &x * &x != x2 {
                continue;
            }
            if verify_solution(&BigInt::from(x.clone()), &BigInt::from(y), r, n) {
                out.insert(Solution::new(r, x, y, n));
            }
        }
    }
    out.into_iter().collect()
}
