//! Non-trivial primitive solutions of `(x − r)² + x² + (x + r)² = yⁿ`.
//!
//! The equation is `3x² + 2r² = yⁿ`. A primitive solution with odd prime `n`
//! gives `γ = u + v√−6` with `γⁿ = 3^((n−1)/2)(3x + r√−6)` and `v | r`.
//! Then `γ/√3` and `γ̄/√3` form a Lehmer pair whose `n`-th term is `r/v`, and
//! primitive divisors cap `n`. For each admissible `(v, n)` the possible `u`
//! are the integer roots of an explicit polynomial.
//!
//! ```
//! use ap_squares::solver::{solve_range, Solution};
//!
//! let rows = solve_range(1, 12, false);
//! assert_eq!(rows, vec![
//!     Solution::new(2, 21u32, 11u32, 3),
//!     Solution::new(7, 3u32, 5u32, 3),
//!     Solution::new(11, 31u32, 5u32, 5),
//! ]);
//! ```

pub mod cli;
pub mod error;
pub mod lehmer;
pub mod ntheory;
pub mod quadring;
pub mod rootfind;
pub mod solver;

pub use error::{Error, Result};
pub use quadring::QuadInt;
pub use solver::{solve_r, solve_range, Solution};
