//! Incremental sweep over every radius up to a horizon.
//!
//! For each column `x ≥ 1` the sweep keeps `h_x = ⌊√(r² − x²)⌋` together with
//! the slack `r² − x² − h_x²`. Moving from `r` to `r + 1` adds `2r + 1` to every
//! slack, and a column grows by one for each `2h + 1` the slack can pay for.
//!
//! Only the columns on or below the diagonal (`2x² ≤ r²`) are stored. Each of
//! them grows by exactly one or two per radius, so the update has no data
//! dependent branches. The quadrant count follows from reflection in the
//! diagonal, `Q(r) = 2·Σ_{x ≤ a} (h_x − x) + a` with `a = ⌊r/√2⌋`, and the
//! columns past the diagonal are recovered from the stored ones on request.
//!
//! A sweep to `N` visits about `N²/(2√2)` columns in total with `Θ(N)` memory.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::intmath::integer_sqrt_u64;
use crate::lattice::{assemble_circle_count, CountRecord, Radius};

/// Default ceiling on column-state memory for a single sweep (2 GiB).
pub const DEFAULT_MEMORY_CAP: u64 = 2 << 30;

#[derive(Debug, Clone, Copy, Default)]
struct Column {
    height: u32,
    // r² − x² − height², always < 2·height + 1.
    slack: u32,
}

const COLUMN_BYTES: u64 = std::mem::size_of::<Column>() as u64;

/// Sequential sweep state; yields one [`CountRecord`] per radius.
///
/// Records carry a primality verdict. A sweep stops after its horizon or
/// after the first error.
#[derive(Debug, Clone)]
pub struct SweepState {
    n_max: Radius,
    r_current: u32,
    columns: Vec<Column>, // columns[x - 1] is column x, for 2x² ≤ r²
    octant_sum: u128,     // Σ of the stored heights
    failed: bool,
}

/// Largest `a` with `2a² ≤ r²`.
fn diagonal(r: u64) -> u64 {
    integer_sqrt_u64(r * r / 2)
}

impl SweepState {
    /// A sweep that will emit `C(1), …, C(n_max)`.
    pub fn new(n_max: Radius) -> Result<Self> {
        Self::starting_at(Radius::new(1)?, n_max, DEFAULT_MEMORY_CAP)
    }

    /// A sweep that will emit `C(start), …, C(n_max)`.
    ///
    /// The columns are initialised exactly at radius `start − 1` with one
    /// integer square root per column, so the emitted records are identical
    /// to those of a sweep started at 1.
    pub fn starting_at(start: Radius, n_max: Radius, memory_cap: u64) -> Result<Self> {
        let stored = diagonal(n_max.get() as u64);
        let needed = stored * COLUMN_BYTES;
        if needed > memory_cap {
            return Err(Error::MemoryCap {
                n_max: n_max.get() as u64,
                needed,
                cap: memory_cap,
            });
        }
        let r0 = start.get().saturating_sub(1);
        let rr = r0 as u64 * r0 as u64;
        let mut columns = Vec::with_capacity(stored as usize + 1);
        let mut sum = 0u128;
        for x in 1..=diagonal(r0 as u64) {
            let rem = rr - x * x;
            let h = integer_sqrt_u64(rem);
            columns.push(Column {
                height: h as u32,
                slack: (rem - h * h) as u32,
            });
            sum += h as u128;
        }
        Ok(SweepState {
            n_max,
            r_current: r0,
            columns,
            octant_sum: sum,
            failed: false,
        })
    }

    pub fn n_max(&self) -> Radius {
        self.n_max
    }

    /// Radius whose column state is currently held (0 before the first step).
    pub fn r_current(&self) -> u32 {
        self.r_current
    }

    /// `⌊√(r_current² − x²)⌋` for `x = 1..=r_current`, nondecreasing in
    /// `r_current` for each `x`.
    ///
    /// Past the diagonal, `h_x` is the number of stored columns at least `x`
    /// high; stored heights decrease with `x`, so that is a binary search.
    pub fn column_heights(&self) -> impl Iterator<Item = u32> + '_ {
        let a = self.columns.len() as u32;
        (1..=self.r_current).map(move |x| {
            if x <= a {
                self.columns[x as usize - 1].height
            } else {
                self.columns.partition_point(|c| c.height >= x) as u32
            }
        })
    }

    /// The open-quadrant count `Q(r_current) = Σ_x h_x`.
    pub fn running_quadrant_sum(&self) -> u128 {
        let a = self.columns.len() as u128;
        2 * (self.octant_sum - a * (a + 1) / 2) + a
    }

    /// Moves to the next radius and returns its record, or `None` past the
    /// horizon.
    pub fn advance(&mut self) -> Option<Result<CountRecord>> {
        if self.failed || self.r_current >= self.n_max.get() {
            return None;
        }
        let r = self.r_current as u64;
        let delta = 2 * r + 1;
        let mut extra = 0u64;
        for col in &mut self.columns {
            // √((r+1)² − x²) − √(r² − x²) lies in [1, √2] below the diagonal,
            // so the height rises by one, plus one more when the slack allows.
            let h = col.height as u64;
            let s = col.slack as u64 + delta - (2 * h + 1);
            let more = (s > 2 * (h + 1)) as u64;
            col.height = (h + 1 + more) as u32;
            col.slack = (s - more * (2 * h + 3)) as u32;
            extra += more;
        }
        let grown = self.columns.len() as u128 + extra as u128;
        self.octant_sum += grown;

        let next = r + 1;
        let nn = next * next;
        for x in self.columns.len() as u64 + 1..=diagonal(next) {
            let rem = nn - x * x;
            let h = integer_sqrt_u64(rem);
            self.columns.push(Column {
                height: h as u32,
                slack: (rem - h * h) as u32,
            });
            self.octant_sum += h as u128;
        }
        self.r_current += 1;

        let r = Radius(self.r_current);
        let record = assemble_circle_count(r, self.running_quadrant_sum()).and_then(|count| {
            CountRecord {
                r,
                count,
                prime: None,
            }
            .with_primality()
        });
        if record.is_err() {
            self.failed = true;
        }
        Some(record)
    }
}

impl Iterator for SweepState {
    type Item = Result<CountRecord>;

    fn next(&mut self) -> Option<Self::Item> {
        self.advance()
    }
}

/// Ordered stream of `C(1), …, C(n_max)` with primality verdicts.
pub fn sweep_counts(n_max: Radius) -> Result<SweepState> {
    SweepState::new(n_max)
}

/// Records for `start..=end`, collected.
pub fn sweep_range(start: Radius, end: Radius) -> Result<Vec<CountRecord>> {
    if start.get() == 0 {
        return Err(Error::InvalidArgument("sweeps start at radius 1".into()));
    }
    SweepState::starting_at(start, end, DEFAULT_MEMORY_CAP)?.collect()
}

/// Splits `1..=n_max` into at most `chunks` contiguous inclusive ranges of
/// roughly equal sweep work. Radius `r` costs about `r`, so boundaries sit at
/// `n_max·√(i / chunks)`.
pub fn chunk_bounds(n_max: u32, chunks: usize) -> Vec<(u32, u32)> {
    let chunks = chunks.max(1);
    let mut out = Vec::with_capacity(chunks);
    let mut start = 1u32;
    for i in 1..=chunks {
        let end = if i == chunks {
            n_max
        } else {
            ((n_max as f64) * (i as f64 / chunks as f64).sqrt()).round() as u32
        };
        if end >= start {
            out.push((start, end));
            start = end + 1;
        }
    }
    out
}

/// `C(1), …, C(n_max)` computed by independent chunked sweeps on `workers`
/// threads. The result is identical to the sequential sweep.
pub fn sweep_parallel(n_max: Radius, workers: usize) -> Result<Vec<CountRecord>> {
    sweep_parallel_with(n_max, workers, &|_| {})
}

/// [`sweep_parallel`] with a callback receiving the fraction of work done
/// after each chunk completes.
pub fn sweep_parallel_with(
    n_max: Radius,
    workers: usize,
    on_progress: &(dyn Fn(f64) + Sync),
) -> Result<Vec<CountRecord>> {
    let workers = workers.max(1);
    if n_max.get() == 0 {
        return Ok(Vec::new());
    }
    if workers == 1 {
        let out = sweep_counts(n_max)?.collect();
        on_progress(1.0);
        return out;
    }
    // More chunks than workers so uneven threads still finish together.
    let bounds = chunk_bounds(n_max.get(), workers * 4);
    let total_work: f64 = bounds.iter().map(|&(a, b)| chunk_work(a, b)).sum();
    let next = AtomicUsize::new(0);
    let done = Mutex::new(0.0f64);
    let mut slots: Vec<Option<Result<Vec<CountRecord>>>> = vec![None; bounds.len()];
    let slots_lock = Mutex::new(&mut slots);

    std::thread::scope(|scope| {
        for _ in 0..workers.min(bounds.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(a, b)) = bounds.get(i) else { break };
                let res = SweepState::starting_at(Radius(a), Radius(b), DEFAULT_MEMORY_CAP)
                    .and_then(|s| s.collect::<Result<Vec<_>>>());
                let failed = res.is_err();
                slots_lock.lock().unwrap()[i] = Some(res);
                {
                    let mut d = done.lock().unwrap();
                    *d += chunk_work(a, b);
                    on_progress(*d / total_work);
                }
                if failed {
                    break;
                }
            });
        }
    });

    let mut out = Vec::with_capacity(n_max.get() as usize);
    for slot in slots {
        match slot {
            Some(res) => out.extend(res?),
            // Only reachable when an earlier chunk failed and its worker quit.
            None => continue,
        }
    }
    Ok(out)
}

fn chunk_work(a: u32, b: u32) -> f64 {
    let (a, b) = (a as f64, b as f64);
    (b * b - (a - 1.0) * (a - 1.0)).max(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::count_circle;

    fn rad(r: u64) -> Radius {
        Radius::new(r).unwrap()
    }

    fn counts(recs: &[CountRecord]) -> Vec<u128> {
        recs.iter().map(|c| c.count.get()).collect()
    }

    #[test]
    fn table_one_sweep() {
        let recs: Vec<_> = sweep_counts(rad(10)).unwrap().collect::<Result<_>>().unwrap();
        assert_eq!(counts(&recs), vec![5, 13, 29, 49, 81, 113, 149, 197, 253, 317]);
        let primes: Vec<u32> = recs.iter().filter(|c| c.prime == Some(true)).map(|c| c.r.get()).collect();
        assert_eq!(primes, vec![1, 2, 3, 6, 7, 8, 10]);

        let one: Vec<_> = sweep_counts(rad(1)).unwrap().collect::<Result<_>>().unwrap();
        assert_eq!(counts(&one), vec![5]);
        assert_eq!(sweep_counts(rad(0)).unwrap().count(), 0);
    }

    #[test]
    fn sweep_matches_walk_to_200() {
        for rec in sweep_counts(rad(200)).unwrap() {
            let rec = rec.unwrap();
            assert_eq!(rec.count, count_circle(rec.r).unwrap().count);
        }
    }

    #[test]
    fn state_invariants_hold_between_steps() {
        let mut s = sweep_counts(rad(300)).unwrap();
        let mut prev: Vec<u32> = Vec::new();
        while let Some(rec) = s.advance() {
            rec.unwrap();
            let r = s.r_current() as u64;
            let heights: Vec<u32> = s.column_heights().collect();
            assert_eq!(heights.len() as u64, r);
            for (i, &h) in heights.iter().enumerate() {
                let x = i as u64 + 1;
                assert_eq!(h as u64, integer_sqrt_u64(r * r - x * x));
            }
            assert!(prev.iter().zip(&heights).all(|(a, b)| a <= b));
            assert_eq!(
                s.running_quadrant_sum(),
                heights.iter().map(|&h| h as u128).sum::<u128>()
            );
            prev = heights;
        }
    }

    #[test]
    fn started_midway_matches_from_one() {
        let full: Vec<_> = sweep_counts(rad(400)).unwrap().collect::<Result<_>>().unwrap();
        for start in [1u64, 2, 57, 399, 400] {
            let part = sweep_range(rad(start), rad(400)).unwrap();
            assert_eq!(part, full[start as usize - 1..]);
        }
        assert!(sweep_range(rad(0), rad(4)).is_err());
    }

    #[test]
    fn chunk_bounds_cover_range() {
        for n in [1u32, 2, 7, 100, 12_345] {
            for k in [1usize, 2, 3, 16, 200] {
                let b = chunk_bounds(n, k);
                assert_eq!(b.first().unwrap().0, 1);
                assert_eq!(b.last().unwrap().1, n);
                assert!(b.windows(2).all(|w| w[0].1 + 1 == w[1].0));
                assert!(b.iter().all(|&(a, e)| a <= e));
            }
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        let seq: Vec<_> = sweep_counts(rad(3000)).unwrap().collect::<Result<_>>().unwrap();
        for w in [1, 2, 3, 8] {
            assert_eq!(sweep_parallel(rad(3000), w).unwrap(), seq, "workers = {w}");
        }
        assert!(sweep_parallel(rad(0), 4).unwrap().is_empty());
        assert_eq!(sweep_parallel(rad(3), 16).unwrap(), seq[..3]);
    }

    #[test]
    fn memory_cap_rejects() {
        let err = SweepState::starting_at(rad(1), rad(1000), 100).unwrap_err();
        assert!(matches!(err, Error::MemoryCap { .. }));
    }
}
