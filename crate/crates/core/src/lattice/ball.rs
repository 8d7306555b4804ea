//! Lattice points in d-dimensional balls.
//!
//! `S_d(m)` counts integer vectors of squared norm `≤ m` in `d` dimensions.
//! Slicing along one axis gives `S_d(m) = Σ_{|x| ≤ √m} S_{d−1}(m − x²)` with
//! `S_0(m) = 1`; sub-results are memoised on `(d − 1, remaining m)`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::intmath::{integer_sqrt_u64, WideCount};
use crate::lattice::Radius;

pub const MAX_DIMENSION: u32 = 10;

const BRUTEFORCE_MAX_DIMENSION: u32 = 4;
const BRUTEFORCE_MAX_RADIUS: u32 = 20;

/// Memoised d-ball counter. Reusing one counter across calls shares its
/// cache; [`count_ball`] uses a fresh one each time.
#[derive(Debug, Default)]
pub struct BallCounter {
    memo: HashMap<(u32, u64), u128>,
}

impl BallCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cached_entries(&self) -> usize {
        self.memo.len()
    }

    pub fn clear(&mut self) {
        self.memo.clear();
    }

    pub fn count(&mut self, d: u32, r: Radius) -> Result<WideCount> {
        if !(1..=MAX_DIMENSION).contains(&d) {
            return Err(Error::DimensionOutOfRange(d));
        }
        // Every point lies in the cube [−r, r]^d, so (2r + 1)^d fitting in
        // 128 bits guarantees the count does.
        let side = 2 * r.get() as u128 + 1;
        if side.checked_pow(d).is_none() {
            return Err(Error::Overflow("d-ball count (cube bound exceeds 128 bits)"));
        }
        self.slices(d, r.squared()).map(WideCount::new)
    }

    fn slices(&mut self, d: u32, m: u64) -> Result<u128> {
        match d {
            0 => return Ok(1),
            1 => return Ok(2 * integer_sqrt_u64(m) as u128 + 1),
            _ => {}
        }
        if let Some(&v) = self.memo.get(&(d - 1, m)) {
            return Ok(v);
        }
        let top = integer_sqrt_u64(m);
        // x = 0 once, ±x for x ≥ 1.
        let mut total = self.slices(d - 1, m)?;
        for x in 1..=top {
            let part = self.slices(d - 1, m - x * x)?;
            total = part
                .checked_mul(2)
                .and_then(|p| total.checked_add(p))
                .ok_or(Error::Overflow("d-ball slice sum"))?;
        }
        self.memo.insert((d - 1, m), total);
        Ok(total)
    }
}

/// `#{v ∈ ℤ^d : |v|² ≤ r²}` for `1 ≤ d ≤ 10`.
pub fn count_ball(d: u32, r: Radius) -> Result<WideCount> {
    BallCounter::new().count(d, r)
}

/// Exhaustive enumeration of `[−r, r]^d`, for `d ≤ 4` and `r ≤ 20`. Test oracle.
pub fn count_ball_bruteforce(d: u32, r: Radius) -> Result<WideCount> {
    if !(1..=BRUTEFORCE_MAX_DIMENSION).contains(&d) {
        return Err(Error::GuardExceeded {
            what: "brute-force ball dimension",
            value: d as u64,
            limit: BRUTEFORCE_MAX_DIMENSION as u64,
        });
    }
    if r.get() > BRUTEFORCE_MAX_RADIUS {
        return Err(Error::GuardExceeded {
            what: "brute-force ball radius",
            value: r.get() as u64,
            limit: BRUTEFORCE_MAX_RADIUS as u64,
        });
    }
    let r = r.get() as i64;
    let rr = r * r;
    let mut point = vec![-r; d as usize];
    let mut n = 0u128;
    loop {
        if point.iter().map(|c| c * c).sum::<i64>() <= rr {
            n += 1;
        }
        // Odometer increment.
        let mut i = 0;
        loop {
            if i == point.len() {
                return Ok(WideCount::new(n));
            }
            if point[i] < r {
                point[i] += 1;
                break;
            }
            point[i] = -r;
            i += 1;
        }
    }
}
