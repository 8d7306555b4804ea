//! Exact lattice-point counting for circles and balls centred at the origin,
//! and the prime statistics built on top of those counts.
//!
//! `C(r)` is the number of integer points `(x, y)` with `x² + y² ≤ r²`. A value
//! of `C(r)` that is prime is a *Gauss circle prime*, and `κ(n)` counts the
//! radii `r ≤ n` that produce one. The crate computes these with integer-only
//! arithmetic and compares `κ(n)` against the prime counting function `π(n)`
//! and `n / ln n`.
//!
//! ```
//! use gauss_circle::lattice::{count_circle, Radius};
//! use gauss_circle::primes::is_prime;
//!
//! let rec = count_circle(Radius::new(5).unwrap()).unwrap();
//! assert_eq!(rec.count.get(), 81);
//! assert!(!is_prime(81));
//! ```
//!
//! Modules:
//!
//! - [`intmath`]: integer square roots and checked wide counts.
//! - [`lattice`]: per-radius counts, the incremental sweep, d-ball counts.
//! - [`primes`]: primality, the sieve behind `π(n)`, and `li(x)`.
//! - [`analysis`]: tabulation, crossover, error-bound, twin and heuristic reports.

pub mod analysis;
pub mod error;
pub mod intmath;
pub mod lattice;
pub mod primes;
mod summation;

pub use error::{Error, Result};
pub use intmath::WideCount;
pub use lattice::{CountRecord, Radius};
