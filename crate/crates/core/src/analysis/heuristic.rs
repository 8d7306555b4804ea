use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::analysis::kappa_prefix;
use crate::error::{Error, Result};
use crate::lattice::CountRecord;
use crate::summation::CompensatedSum;

/// `κ(n)` next to the odd-integer prime-density estimate of it.
///
/// `estimate_exact_counts` is `Σ_{k≤n} 2 / ln C(k)`;
/// `estimate_asymptotic` replaces `ln C(k)` with `ln π + 2 ln k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HeuristicRow {
    pub n: u64,
    pub kappa_n: u64,
    pub estimate_exact_counts: f64,
    pub estimate_asymptotic: f64,
}

/// Heuristic rows at each checkpoint, from records covering `1..=last`.
pub fn heuristic_series<I>(checkpoints: &[u64], records: I) -> Result<Vec<HeuristicRow>>
where
    I: IntoIterator<Item = CountRecord>,
{
    if checkpoints.is_empty() || checkpoints[0] < 1 || checkpoints.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(
            "checkpoints must be nonempty, ascending and at least 1".into(),
        ));
    }
    let n_max = *checkpoints.last().unwrap();
    let records: Vec<CountRecord> = records
        .into_iter()
        .take_while(|c| (c.r.get() as u64) <= n_max)
        .collect();
    let prefix = kappa_prefix(records.iter().copied())?;
    if (records.len() as u64) < n_max {
        return Err(Error::IncompleteCounts {
            expected: n_max,
            got: records.len() as u64,
        });
    }

    let log_pi = PI.ln();
    let mut exact = CompensatedSum::default();
    let mut asymptotic = CompensatedSum::default();
    let mut rows = Vec::with_capacity(checkpoints.len());
    let mut next = checkpoints.iter().peekable();
    for rec in &records {
        let k = rec.r.get() as u64;
        exact.add(2.0 / (rec.count.get() as f64).ln());
        asymptotic.add(2.0 / (log_pi + 2.0 * (k as f64).ln()));
        if next.peek() == Some(&&k) {
            next.next();
            rows.push(HeuristicRow {
                n: k,
                kappa_n: prefix[k as usize],
                estimate_exact_counts: exact.value(),
                estimate_asymptotic: asymptotic.value(),
            });
        }
    }
    Ok(rows)
}

/// The heuristic row at `n`.
pub fn heuristic_estimate<I>(n: u64, counts: I) -> Result<HeuristicRow>
where
    I: IntoIterator<Item = CountRecord>,
{
    if n < 1 {
        return Err(Error::InvalidArgument("heuristic estimate needs n ≥ 1".into()));
    }
    Ok(heuristic_series(&[n], counts)?[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{sweep_counts, Radius};

    fn records(n: u64) -> Vec<CountRecord> {
        sweep_counts(Radius::new(n).unwrap())
            .unwrap()
            .collect::<Result<_>>()
            .unwrap()
    }

    #[test]
    fn single_term() {
        let row = heuristic_estimate(1, records(1)).unwrap();
        assert!((row.estimate_exact_counts - 2.0 / 5f64.ln()).abs() < 1e-15);
        assert!((row.estimate_exact_counts - 1.2427).abs() < 1e-4);
        assert!((row.estimate_asymptotic - 2.0 / PI.ln()).abs() < 1e-15);
        assert_eq!(row.kappa_n, 1);
    }

    #[test]
    fn first_ten_terms() {
        // Term-by-term over C(1..10) = 5, 13, 29, 49, 81, 113, 149, 197, 253, 317.
        let oracle: f64 = [5.0f64, 13.0, 29.0, 49.0, 81.0, 113.0, 149.0, 197.0, 253.0, 317.0]
            .iter()
            .map(|c| 2.0 / c.ln())
            .sum();
        let row = heuristic_estimate(10, records(10)).unwrap();
        assert!((row.estimate_exact_counts - oracle).abs() < 1e-12);
        assert!((row.estimate_exact_counts - 5.4954).abs() < 1e-3);
        assert_eq!(row.kappa_n, 7);
    }

    #[test]
    fn monotone_and_close_to_each_other() {
        let cps: Vec<u64> = (1..=2000).collect();
        let rows = heuristic_series(&cps, records(2000)).unwrap();
        assert!(rows.windows(2).all(|w| {
            w[1].estimate_exact_counts > w[0].estimate_exact_counts
                && w[1].estimate_asymptotic > w[0].estimate_asymptotic
        }));
        for row in rows.iter().filter(|r| r.n >= 1000) {
            let gap = (row.estimate_exact_counts - row.estimate_asymptotic).abs();
            assert!(gap < 0.02 * row.n as f64, "n = {}: gap {gap}", row.n);
        }
    }

    #[test]
    fn errors() {
        assert!(heuristic_estimate(0, records(3)).is_err());
        assert!(matches!(
            heuristic_estimate(5, records(3)),
            Err(Error::IncompleteCounts { .. })
        ));
        assert!(heuristic_series(&[3, 2], records(3)).is_err());
    }
}
