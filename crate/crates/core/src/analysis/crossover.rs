use serde::{Deserialize, Serialize};

use crate::analysis::{kappa_prefix, pnt};
use crate::error::{Error, Result};
use crate::lattice::{sweep_counts, Radius};
use crate::primes::build_sieve;

/// Where `π(n) > κ(n) > n / ln n` starts to hold, for `2 ≤ n ≤ n_max`.
///
/// `onset` is the first `n` satisfying the chain. `sustained_from` is the
/// smallest `n₀` such that the chain holds for every `n` in `n₀..=n_max`.
/// `exceptions` lists the `n ≥ onset` where the chain fails; it is empty
/// exactly when the two agree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossoverReport {
    pub n_max: u64,
    pub onset: Option<u64>,
    pub sustained_from: Option<u64>,
    pub exceptions: Vec<u64>,
}

fn chain_holds(n: u64, pi_n: u64, kappa_n: u64) -> bool {
    pi_n > kappa_n && kappa_n as f64 > pnt(n)
}

/// Crossover report from `π` and `κ` prefix arrays indexed by `n`.
pub fn crossover_from_prefixes(pi: &[u64], kappa: &[u64], n_max: u64) -> Result<CrossoverReport> {
    if n_max < 2 {
        return Err(Error::InvalidArgument(format!(
            "crossover needs n_max ≥ 2, got {n_max}"
        )));
    }
    if (pi.len() as u64) <= n_max || (kappa.len() as u64) <= n_max {
        return Err(Error::IncompleteCounts {
            expected: n_max,
            got: pi.len().min(kappa.len()) as u64 - 1,
        });
    }
    let holds: Vec<bool> = (2..=n_max)
        .map(|n| chain_holds(n, pi[n as usize], kappa[n as usize]))
        .collect();
    let at = |n: u64| holds[(n - 2) as usize];

    let onset = (2..=n_max).find(|&n| at(n));
    let sustained_from = if at(n_max) {
        let mut n0 = n_max;
        while n0 > 2 && at(n0 - 1) {
            n0 -= 1;
        }
        Some(n0)
    } else {
        None
    };
    let exceptions = match onset {
        Some(start) => (start..=n_max).filter(|&n| !at(n)).collect(),
        None => Vec::new(),
    };
    Ok(CrossoverReport {
        n_max,
        onset,
        sustained_from,
        exceptions,
    })
}

/// Sweeps and sieves to `n_max` and locates the crossover.
pub fn find_crossover(n_max: u64) -> Result<CrossoverReport> {
    if n_max < 2 {
        return Err(Error::InvalidArgument(format!(
            "crossover needs n_max ≥ 2, got {n_max}"
        )));
    }
    let kappa = kappa_prefix(sweep_counts(Radius::new(n_max)?)?.collect::<Result<Vec<_>>>()?)?;
    let table = build_sieve(n_max)?;
    let pi = (0..=n_max).map(|n| table.pi(n)).collect::<Result<Vec<_>>>()?;
    crossover_from_prefixes(&pi, &kappa, n_max)
}
