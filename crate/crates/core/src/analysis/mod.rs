//! The measurements behind the tables: `κ(n)` against `π(n)` and `n / ln n`,
//! the crossover point, the Gauss error bound, twin circle primes, and the
//! heuristic estimate of `κ(n)`.
//!
//! Every report is computed from one ordered stream of [`CountRecord`]s,
//! usually produced by a single sweep to the largest radius needed.

mod bound;
mod crossover;
mod heuristic;
mod tabulate;
mod twins;

use crate::error::{Error, Result};
use crate::lattice::CountRecord;

pub use bound::{gauss_bound_report, verify_gauss_bound, BoundReport};
pub use crossover::{crossover_from_prefixes, find_crossover, CrossoverReport};
pub use heuristic::{heuristic_estimate, heuristic_series, HeuristicRow};
pub use tabulate::{tabulate, tabulate_records, TabulationRow};
pub use twins::{twin_pairs, twin_scan, TwinPair};

/// `n / ln n` as a real number.
pub fn pnt(n: u64) -> f64 {
    let n = n as f64;
    n / n.ln()
}

/// Nearest integer to `n / ln n`, ties away from zero.
pub fn pnt_rounded(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::Domain(format!("n / ln n needs n ≥ 2, got {n}")));
    }
    Ok(pnt(n).round() as u64)
}

/// Prefix counts of Gauss circle primes: entry `n` is `κ(n)` for
/// `n = 0..=len`.
///
/// The records must be exactly `r = 1, 2, …` in order, each with a primality
/// verdict.
pub fn kappa_prefix<I>(counts: I) -> Result<Vec<u64>>
where
    I: IntoIterator<Item = CountRecord>,
{
    let mut prefix = vec![0u64];
    for rec in counts {
        let expected = prefix.len() as u64;
        let r = rec.r.get() as u64;
        if r != expected {
            return Err(Error::UnorderedCounts { expected, found: r });
        }
        let prime = rec.prime.ok_or(Error::MissingVerdict(r))?;
        prefix.push(prefix[prefix.len() - 1] + prime as u64);
    }
    Ok(prefix)
}

/// `κ(n)`: the number of radii `r ≤ n` whose circle count is prime.
///
/// `counts` must cover `r = 1..=n` in order; records past `n` are ignored.
pub fn kappa<I>(n: u64, counts: I) -> Result<u64>
where
    I: IntoIterator<Item = CountRecord>,
{
    let prefix = kappa_prefix(counts.into_iter().take_while(|c| (c.r.get() as u64) <= n))?;
    let got = prefix.len() as u64 - 1;
    if got < n {
        return Err(Error::IncompleteCounts { expected: n, got });
    }
    Ok(prefix[n as usize])
}

/// Formats `v` with `places` decimals, rounding half away from zero.
pub fn format_decimal(v: f64, places: u32) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    let scale = 10f64.powi(places as i32);
    let scaled = (v * scale).round();
    let neg = scaled < 0.0;
    let digits = format!("{:.0}", scaled.abs());
    let places = places as usize;
    let digits = if digits.len() <= places {
        format!("{}{}", "0".repeat(places + 1 - digits.len()), digits)
    } else {
        digits
    };
    let (int, frac) = digits.split_at(digits.len() - places);
    let sign = if neg { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

/// Formats `v` with `places` decimals, truncating toward zero. This is how
/// the published ratio tables are printed.
///
/// A value whose scaled form lands within a few ulps below an integer (for
/// example `78 / 75 = 1.04`, computed as `1.0399999…`) is treated as that
/// integer.
pub fn format_truncated(v: f64, places: u32) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    let scale = 10f64.powi(places as i32);
    let scaled = v.abs() * scale;
    let mut kept = scaled.floor();
    if (kept + 1.0) - scaled <= 4.0 * f64::EPSILON * scaled.max(1.0) {
        kept += 1.0;
    }
    let signed = if v < 0.0 && kept > 0.0 { -kept } else { kept };
    format_decimal(signed / scale, places)
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
    fn kappa_examples() {
        let recs = records(100);
        assert_eq!(kappa(10, recs.iter().copied()), Ok(7));
        assert_eq!(kappa(1, recs.iter().copied()), Ok(1));
        assert_eq!(kappa(100, recs.iter().copied()), Ok(30));
        assert_eq!(kappa(0, recs.iter().copied()), Ok(0));
    }

    #[test]
    fn kappa_rejects_bad_streams() {
        let recs = records(10);
        assert_eq!(
            kappa(11, recs.iter().copied()),
            Err(Error::IncompleteCounts {
                expected: 11,
                got: 10
            })
        );
        let skipped = recs.iter().copied().filter(|c| c.r.get() != 4);
        assert_eq!(
            kappa(10, skipped),
            Err(Error::UnorderedCounts {
                expected: 4,
                found: 5
            })
        );
        let mut unset = recs.clone();
        unset[2].prime = None;
        assert_eq!(kappa(10, unset), Err(Error::MissingVerdict(3)));
    }

    #[test]
    fn kappa_steps_by_zero_or_one() {
        let prefix = kappa_prefix(records(2000)).unwrap();
        assert!(prefix.windows(2).all(|w| w[1] - w[0] <= 1));
        assert!(prefix.iter().enumerate().all(|(n, &k)| k <= n as u64));
    }

    #[test]
    fn pnt_examples() {
        assert_eq!(pnt_rounded(100), Ok(22));
        assert_eq!(pnt_rounded(1000), Ok(145));
        assert_eq!(pnt_rounded(10_000), Ok(1086));
        assert!(pnt_rounded(1).is_err());
        assert!(pnt_rounded(0).is_err());
        for n in 2..100_000 {
            let r = pnt_rounded(n).unwrap() as f64;
            assert!((pnt(n) - r).abs() <= 0.5);
        }
    }

    #[test]
    fn decimal_formatting() {
        assert_eq!(format_decimal(25.0 / 30.0, 5), "0.83333");
        assert_eq!(format_decimal(1.0, 5), "1.00000");
        assert_eq!(format_decimal(0.000004, 5), "0.00000");
        assert_eq!(format_decimal(0.000005, 5), "0.00001");
        assert_eq!(format_decimal(-1.234565, 2), "-1.23");
        assert_eq!(format_decimal(2.5, 0), "3");
        assert_eq!(format_decimal(1246.137215899, 4), "1246.1372");
        assert_eq!(format_decimal(f64::NAN, 5), "NaN");
    }

    #[test]
    fn truncated_formatting() {
        assert_eq!(format_truncated(25.0 / 30.0, 5), "0.83333");
        assert_eq!(format_truncated(1.0843189, 5), "1.08431");
        assert_eq!(format_truncated(78.0 / 75.0, 5), "1.04000");
        assert_eq!(format_truncated(0.3 * 3.0, 1), "0.9");
        assert_eq!(format_truncated(-1.999_999, 5), "-1.99999");
        assert_eq!(format_truncated(-0.000_001, 5), "0.00000");
        assert_eq!(format_truncated(9126.0, 5), "9126.00000");
    }

    #[test]
    fn ratio_table_values() {
        // (n, π(n), κ(n)) and the printed ratio triples.
        let rows = [
            (100u64, 25u64, 30u64, ["0.83333", "1.15129", "1.38155"]),
            (1000, 168, 157, ["1.07006", "1.16050", "1.08451"]),
            (10_000, 1229, 1188, ["1.03451", "1.13195", "1.09418"]),
            (100_000, 9592, 9126, ["1.05106", "1.10431", "1.05066"]),
            (2_000_000, 148_933, 143_082, ["1.04089", "1.08040", "1.03796"]),
        ];
        for (n, p, k, want) in rows {
            let got = [
                format_truncated(p as f64 / k as f64, 5),
                format_truncated(p as f64 / pnt(n), 5),
                format_truncated(k as f64 / pnt(n), 5),
            ];
            assert_eq!(got, want, "n = {n}");
        }
    }
}
