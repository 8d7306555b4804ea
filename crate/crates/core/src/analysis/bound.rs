use std::f64::consts::{PI, SQRT_2};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{sweep_counts, CountRecord, Radius};

/// Worst-case behaviour of `|C(r) − πr²|` against `2√2·πr + 2π` over
/// `1 ≤ r ≤ n_max`.
///
/// `violations` counts radii breaking the one-sided bound;
/// `sandwich_violations` counts radii outside `π(r − √2)² < C(r) < π(r + √2)²`.
/// Both comparisons are widened by one ulp so that floating rounding alone
/// never produces a violation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n_max: Radius,
    pub violations: u64,
    pub sandwich_violations: u64,
    pub worst_r: Radius,
    pub max_ratio: f64,
    pub max_abs_error: f64,
}

/// Checks both forms of the Gauss bound for every radius in the stream.
pub fn gauss_bound_report<I>(records: I) -> Result<BoundReport>
where
    I: IntoIterator<Item = CountRecord>,
{
    let mut report: Option<BoundReport> = None;
    for rec in records {
        let r = rec.r.get() as f64;
        let c = rec.count.get() as f64;
        let area = PI * r * r;
        let err = (c - area).abs();
        let bound = 2.0 * SQRT_2 * PI * r + 2.0 * PI;
        let ratio = err / bound;

        let lower = PI * (r - SQRT_2) * (r - SQRT_2);
        let upper = PI * (r + SQRT_2) * (r + SQRT_2);

        let rep = report.get_or_insert(BoundReport {
            n_max: rec.r,
            violations: 0,
            sandwich_violations: 0,
            worst_r: rec.r,
            max_ratio: f64::NEG_INFINITY,
            max_abs_error: 0.0,
        });
        rep.n_max = rep.n_max.max(rec.r);
        if err >= bound.next_up() {
            rep.violations += 1;
        }
        if c <= lower.next_down() || c >= upper.next_up() {
            rep.sandwich_violations += 1;
        }
        if ratio > rep.max_ratio {
            rep.max_ratio = ratio;
            rep.worst_r = rec.r;
        }
        rep.max_abs_error = rep.max_abs_error.max(err);
    }
    report.ok_or_else(|| Error::InvalidArgument("no radii to check".into()))
}

/// Sweeps `1..=n_max` and checks the bound at each radius.
pub fn verify_gauss_bound(n_max: Radius) -> Result<BoundReport> {
    if n_max.get() < 1 {
        return Err(Error::InvalidArgument("bound check needs n_max ≥ 1".into()));
    }
    gauss_bound_report(sweep_counts(n_max)?.collect::<Result<Vec<_>>>()?)
}
