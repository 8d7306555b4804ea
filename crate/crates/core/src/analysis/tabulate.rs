use serde::{Deserialize, Serialize};

use crate::analysis::{kappa_prefix, pnt, pnt_rounded};
use crate::error::{Error, Result};
use crate::lattice::{sweep_parallel, CountRecord, Radius};
use crate::primes::{build_sieve, PrimeTable};

/// One checkpoint of the `π(n)` / `κ(n)` / `n / ln n` comparison.
///
/// Ratios use the unrounded `n / ln n`. `ratio_pi_kappa` is `None` when
/// `κ(n) = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TabulationRow {
    pub n: u64,
    pub pi_n: u64,
    pub kappa_n: u64,
    pub pnt_rounded: u64,
    pub ratio_pi_kappa: Option<f64>,
    pub ratio_pi_pnt: f64,
    pub ratio_kappa_pnt: f64,
}

fn validate_checkpoints(checkpoints: &[u64]) -> Result<u64> {
    let (&first, &last) = match (checkpoints.first(), checkpoints.last()) {
        (Some(f), Some(l)) => (f, l),
        _ => return Err(Error::InvalidArgument("no checkpoints given".into())),
    };
    if first < 2 {
        return Err(Error::InvalidArgument(format!(
            "checkpoints must be at least 2, got {first}"
        )));
    }
    if checkpoints.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(
            "checkpoints must be strictly ascending".into(),
        ));
    }
    Ok(last)
}

/// One sweep and one sieve to the last checkpoint, with a row per checkpoint.
pub fn tabulate(checkpoints: &[u64], workers: usize) -> Result<Vec<TabulationRow>> {
    let n_max = validate_checkpoints(checkpoints)?;
    let records = sweep_parallel(Radius::new(n_max)?, workers)?;
    let table = build_sieve(n_max)?;
    tabulate_records(checkpoints, records, &table)
}

/// Rows from precomputed records covering `1..=last checkpoint`.
pub fn tabulate_records<I>(
    checkpoints: &[u64],
    records: I,
    table: &PrimeTable,
) -> Result<Vec<TabulationRow>>
where
    I: IntoIterator<Item = CountRecord>,
{
    let n_max = validate_checkpoints(checkpoints)?;
    let prefix = kappa_prefix(records.into_iter().take_while(|c| (c.r.get() as u64) <= n_max))?;
    let covered = prefix.len() as u64 - 1;
    if covered < n_max {
        return Err(Error::IncompleteCounts {
            expected: n_max,
            got: covered,
        });
    }
    checkpoints
        .iter()
        .map(|&n| {
            let pi_n = table.pi(n)?;
            let kappa_n = prefix[n as usize];
            let real = pnt(n);
            Ok(TabulationRow {
                n,
                pi_n,
                kappa_n,
                pnt_rounded: pnt_rounded(n)?,
                ratio_pi_kappa: (kappa_n > 0).then(|| pi_n as f64 / kappa_n as f64),
                ratio_pi_pnt: pi_n as f64 / real,
                ratio_kappa_pnt: kappa_n as f64 / real,
            })
        })
        .collect()
}
