//! Lattice-point counts in circles and d-dimensional balls.
//!
//! Circle counts use the quadrant decomposition `C(r) = 4·Q(r) + 4r + 1`,
//! where `Q(r) = Σ_{x=1}^{r} ⌊√(r² − x²)⌋` counts the open first quadrant and
//! `4r + 1` covers the two axes and the origin. Every circle count is therefore
//! `1 mod 4`.
//!
//! Two exact routes are provided: [`count_circle`] walks the boundary of one
//! circle in `O(r)`, and [`sweep_counts`] advances column heights from one
//! radius to the next, which is cheaper when every radius up to a horizon is
//! wanted. [`count_circle_bruteforce`] is the quadratic oracle for both.

mod ball;
mod sweep;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intmath::WideCount;

pub use ball::{count_ball, count_ball_bruteforce, BallCounter, MAX_DIMENSION};
pub use sweep::{
    chunk_bounds, sweep_counts, sweep_parallel, sweep_parallel_with, sweep_range, SweepState,
    DEFAULT_MEMORY_CAP,
};

/// Largest radius accepted by the counting routines.
pub const MAX_RADIUS: u32 = (1 << 31) - 1;

/// Radius guard for [`count_circle_bruteforce`].
pub const BRUTEFORCE_CIRCLE_GUARD: u32 = 10_000;

/// A circle or ball radius in lattice units, `0 ≤ r ≤ 2³¹ − 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Radius(u32);

impl Radius {
    pub const ZERO: Radius = Radius(0);

    pub fn new(r: u64) -> Result<Self> {
        if r > MAX_RADIUS as u64 {
            return Err(Error::RadiusOutOfRange {
                radius: r,
                max: MAX_RADIUS as u64,
            });
        }
        Ok(Radius(r as u32))
    }

    pub const fn get(self) -> u32 {
        self.0
    }

    /// `r²`, exact in 64 bits for every valid radius.
    pub const fn squared(self) -> u64 {
        self.0 as u64 * self.0 as u64
    }
}

impl TryFrom<u64> for Radius {
    type Error = Error;

    fn try_from(r: u64) -> Result<Self> {
        Radius::new(r)
    }
}

impl From<Radius> for u64 {
    fn from(r: Radius) -> u64 {
        r.0 as u64
    }
}

impl fmt::Display for Radius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// A radius, its lattice count, and whether the count is prime.
///
/// `prime` is `None` when the record came from a routine that does not test
/// primality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRecord {
    pub r: Radius,
    pub count: WideCount,
    pub prime: Option<bool>,
}

impl CountRecord {
    /// Fills in the primality verdict.
    pub fn with_primality(mut self) -> Result<Self> {
        let n = self
            .count
            .to_u64()
            .ok_or(Error::Overflow("primality input (count exceeds 64 bits)"))?;
        self.prime = Some(crate::primes::is_prime(n));
        Ok(self)
    }
}

/// `C(r) = 4q + 4r + 1` with checked arithmetic.
pub(crate) fn assemble_circle_count(r: Radius, quadrant: u128) -> Result<WideCount> {
    let four = WideCount::new(4);
    WideCount::new(quadrant)
        .checked_mul(four)?
        .checked_add(WideCount::from(r.get()).checked_mul(four)?)?
        .checked_add(WideCount::ONE)
}

/// Open-quadrant count `Q(r)` by walking the circle's boundary staircase.
///
/// Starts at `(x, y) = (r, 0)` and moves `x` down one column at a time while
/// `y` climbs as far as `y² ≤ r² − x²` allows. Only additions and comparisons
/// are used: `slack` tracks `r² − x² − y²`.
pub(crate) fn quadrant_count(r: Radius) -> u128 {
    let r = r.get() as u64;
    let mut y = 0u64;
    let mut slack = 0u64; // r² − x² − y² at x = r, y = 0
    let mut total = 0u128;
    for x in (1..=r).rev() {
        // Moving from column x + 1 to column x raises r² − x² by 2x + 1.
        if x < r {
            slack += 2 * x + 1;
        }
        while slack > 2 * y {
            // (y + 1)² − y² = 2y + 1 ≤ slack
            slack -= 2 * y + 1;
            y += 1;
        }
        total += y as u128;
    }
    total
}

/// Number of lattice points in the closed disc of radius `r`.
///
/// The returned record has no primality verdict; see
/// [`CountRecord::with_primality`].
pub fn count_circle(r: Radius) -> Result<CountRecord> {
    let count = assemble_circle_count(r, quadrant_count(r))?;
    Ok(CountRecord {
        r,
        count,
        prime: None,
    })
}

/// Quadratic double-loop count over `[−r, r]²`. Test oracle.
pub fn count_circle_bruteforce(r: Radius) -> Result<WideCount> {
    if r.get() > BRUTEFORCE_CIRCLE_GUARD {
        return Err(Error::GuardExceeded {
            what: "brute-force circle radius",
            value: r.get() as u64,
            limit: BRUTEFORCE_CIRCLE_GUARD as u64,
        });
    }
    let r = r.get() as i64;
    let rr = r * r;
    let mut n = 0u128;
    for x in -r..=r {
        for y in -r..=r {
            if x * x + y * y <= rr {
                n += 1;
            }
        }
    }
    Ok(WideCount::new(n))
}
