//! Integer square roots and overflow-checked counts.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Floor square root of a 128-bit value.
///
/// The float estimate only seeds the iteration; the returned value always
/// satisfies `s² ≤ x < (s + 1)²`.
pub fn integer_sqrt(x: u128) -> u128 {
    if x < 2 {
        return x;
    }
    let mut s = (x as f64).sqrt() as u128;
    if s == 0 {
        s = 1;
    }
    // One Newton step from any positive seed lands at or above the floor root;
    // from there the iteration decreases monotonically.
    s = (s + x / s) >> 1;
    loop {
        let t = (s + x / s) >> 1;
        if t >= s {
            break;
        }
        s = t;
    }
    while s * s > x {
        s -= 1;
    }
    while (s + 1).checked_mul(s + 1).is_some_and(|sq| sq <= x) {
        s += 1;
    }
    s
}

/// Floor square root of a 64-bit value.
pub fn integer_sqrt_u64(x: u64) -> u64 {
    let mut s = (x as f64).sqrt() as u64;
    // The f64 seed is within one of the root for every u64.
    while s.checked_mul(s).is_none_or(|sq| sq > x) {
        s -= 1;
    }
    while (s + 1).checked_mul(s + 1).is_some_and(|sq| sq <= x) {
        s += 1;
    }
    s
}

/// A non-negative lattice count with at least 128 bits of range.
///
/// Arithmetic never wraps: every operation either returns the exact result
/// or [`Error::Overflow`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WideCount(u128);

impl WideCount {
    pub const ZERO: WideCount = WideCount(0);
    pub const ONE: WideCount = WideCount(1);
    pub const MAX: WideCount = WideCount(u128::MAX);

    pub const fn new(value: u128) -> Self {
        WideCount(value)
    }

    pub const fn get(self) -> u128 {
        self.0
    }

    pub fn checked_add(self, rhs: WideCount) -> Result<WideCount> {
        checked_add(self, rhs)
    }

    pub fn checked_mul(self, rhs: WideCount) -> Result<WideCount> {
        self.0
            .checked_mul(rhs.0)
            .map(WideCount)
            .ok_or(Error::Overflow("lattice count product"))
    }

    /// The count as a `u64`, if it fits.
    pub fn to_u64(self) -> Option<u64> {
        u64::try_from(self.0).ok()
    }
}

/// Exact sum of two counts, or [`Error::Overflow`].
pub fn checked_add(a: WideCount, b: WideCount) -> Result<WideCount> {
    a.0.checked_add(b.0)
        .map(WideCount)
        .ok_or(Error::Overflow("lattice count sum"))
}

impl From<u64> for WideCount {
    fn from(v: u64) -> Self {
        WideCount(v as u128)
    }
}

impl From<u32> for WideCount {
    fn from(v: u32) -> Self {
        WideCount(v as u128)
    }
}

impl fmt::Display for WideCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}
