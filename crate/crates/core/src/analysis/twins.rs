use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intmath::WideCount;
use crate::lattice::{sweep_counts, CountRecord, Radius};

/// Consecutive radii `r`, `r + 1` whose circle counts are both prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinPair {
    pub r: Radius,
    pub c_r: WideCount,
    pub c_r_next: WideCount,
}

/// Twin pairs in an ordered record stream.
pub fn twin_pairs<I>(records: I) -> Result<Vec<TwinPair>>
where
    I: IntoIterator<Item = CountRecord>,
{
    let mut out = Vec::new();
    let mut prev: Option<CountRecord> = None;
    for rec in records {
        let prime = rec.prime.ok_or(Error::MissingVerdict(rec.r.get() as u64))?;
        if let Some(p) = prev {
            if rec.r.get() != p.r.get() + 1 {
                return Err(Error::UnorderedCounts {
                    expected: p.r.get() as u64 + 1,
                    found: rec.r.get() as u64,
                });
            }
            if prime && p.prime == Some(true) {
                out.push(TwinPair {
                    r: p.r,
                    c_r: p.count,
                    c_r_next: rec.count,
                });
            }
        }
        prev = Some(rec);
    }
    Ok(out)
}

/// All `r < n_max` with `C(r)` and `C(r + 1)` prime, ascending.
pub fn twin_scan(n_max: Radius) -> Result<Vec<TwinPair>> {
    if n_max.get() < 2 {
        return Err(Error::InvalidArgument("twin scan needs n_max ≥ 2".into()));
    }
    twin_pairs(sweep_counts(n_max)?.collect::<Result<Vec<_>>>()?)
}
