use std::io::{self, BufRead, IsTerminal, Write};
use std::path::Path;
use std::time::Instant;

use anyhow::{anyhow, Context};
use gauss_circle::analysis::{
    crossover_from_prefixes, gauss_bound_report, heuristic_series, kappa_prefix,
    tabulate_records, twin_pairs,
};
use gauss_circle::lattice::{count_ball, count_circle, sweep_parallel_with};
use gauss_circle::primes::{build_sieve, is_prime, log_integral};
use gauss_circle::{CountRecord, Radius};

use crate::args::{Cli, Command, Format, OutputArgs, SweepArgs};
use crate::emit::{
    emit_rows, BallRow, CircleRow, CrossoverRow, DimCountRow, LiRow, Row,
};

/// Sweeps beyond this horizon announce their cost and ask for confirmation.
const LONG_RUN_THRESHOLD: u64 = 100_000;

/// Rough single-thread rate of column updates, for the runtime estimate.
const COLUMN_UPDATES_PER_SEC: f64 = 5.5e8;

#[derive(Debug)]
pub enum Failure {
    /// Bad flags or flag combinations; exit code 2.
    Usage(String),
    /// Guard violations, arithmetic limits and IO; exit code 3.
    Runtime(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Runtime(e)
    }
}

impl From<gauss_circle::Error> for Failure {
    fn from(e: gauss_circle::Error) -> Self {
        Failure::Runtime(e.into())
    }
}

type Outcome = Result<(), Failure>;

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Count { radius, dim, output } => {
            let r = Radius::new(radius)?;
            match dim {
                None => {
                    let rec = count_circle(r)?.with_primality()?;
                    write_rows(
                        &[CircleRow {
                            r: radius,
                            count: rec.count.get(),
                            prime: rec.prime,
                        }],
                        &output,
                    )
                }
                Some(d) => {
                    let count = count_ball(d, r)?.get();
                    let prime = u64::try_from(count).ok().map(is_prime);
                    write_rows(&[DimCountRow { d, r: radius, count, prime }], &output)
                }
            }
        }
        Command::Ball { dim, radius, output } => {
            let count = count_ball(dim, Radius::new(radius)?)?.get();
            write_rows(&[BallRow { d: dim, r: radius, count }], &output)
        }
        Command::Tabulate {
            max,
            checkpoints,
            sweep,
            output,
        } => {
            let cps = checkpoint_list(max, checkpoints.step, checkpoints.at, 2)?;
            let n_max = *cps.last().unwrap();
            let records = sweep_records(n_max, &sweep)?;
            let table = build_sieve(n_max)?;
            let rows = tabulate_records(&cps, records, &table)?;
            write_rows(&rows, &output)
        }
        Command::Crossover { max, sweep, output } => {
            if max < 2 {
                return Err(Failure::Usage("--max must be at least 2".into()));
            }
            let kappa = kappa_prefix(sweep_records(max, &sweep)?)?;
            let table = build_sieve(max)?;
            let pi = (0..=max).map(|n| table.pi(n)).collect::<Result<Vec<_>, _>>()?;
            let rep = crossover_from_prefixes(&pi, &kappa, max)?;
            write_rows(
                &[CrossoverRow {
                    n_max: rep.n_max,
                    onset: rep.onset,
                    sustained_from: rep.sustained_from,
                    exceptions: rep.exceptions.len(),
                }],
                &output,
            )
        }
        Command::VerifyBound { max, sweep, output } => {
            if max < 1 {
                return Err(Failure::Usage("--max must be at least 1".into()));
            }
            let rep = gauss_bound_report(sweep_records(max, &sweep)?)?;
            write_rows(&[rep], &output)
        }
        Command::Twins { max, sweep, output } => {
            if max < 2 {
                return Err(Failure::Usage("--max must be at least 2".into()));
            }
            let pairs = twin_pairs(sweep_records(max, &sweep)?)?;
            write_rows(&pairs, &output)
        }
        Command::Estimate {
            max,
            checkpoints,
            sweep,
            output,
        } => {
            let cps = match (checkpoints.step, checkpoints.at) {
                (None, None) => vec![max],
                (step, at) => checkpoint_list(max, step, at, 1)?,
            };
            if cps[0] < 1 {
                return Err(Failure::Usage("--max must be at least 1".into()));
            }
            let n_max = *cps.last().unwrap();
            let rows = heuristic_series(&cps, sweep_records(n_max, &sweep)?)?;
            write_rows(&rows, &output)
        }
        Command::Li { x, output } => {
            let li = log_integral(x)?;
            write_rows(&[LiRow { x, li }], &output)
        }
    }
}

fn checkpoint_list(
    max: u64,
    step: Option<u64>,
    at: Option<Vec<u64>>,
    min: u64,
) -> Result<Vec<u64>, Failure> {
    let cps = match (step, at) {
        (Some(0), _) => return Err(Failure::Usage("--step must be positive".into())),
        (Some(s), None) => (1..=max / s).map(|i| i * s).collect::<Vec<_>>(),
        (None, Some(list)) => list,
        _ => return Err(Failure::Usage("give exactly one of --step or --at".into())),
    };
    if cps.is_empty() {
        return Err(Failure::Usage(format!("no checkpoints fall within --max {max}")));
    }
    if cps[0] < min {
        return Err(Failure::Usage(format!("checkpoints must be at least {min}")));
    }
    if cps.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Failure::Usage("checkpoints must be strictly ascending".into()));
    }
    if *cps.last().unwrap() > max {
        return Err(Failure::Usage(format!("checkpoints must not exceed --max {max}")));
    }
    Ok(cps)
}

/// `C(1..=n_max)` with primality, announcing long runs on stderr.
fn sweep_records(n_max: u64, args: &SweepArgs) -> Result<Vec<CountRecord>, Failure> {
    let horizon = Radius::new(n_max)?;
    let workers = args.workers as usize;
    if n_max > LONG_RUN_THRESHOLD {
        confirm_long_run(n_max, workers, args.yes)?;
    }
    let started = Instant::now();
    let quiet = args.quiet;
    let last_decile = std::sync::atomic::AtomicU32::new(0);
    let progress = |fraction: f64| {
        if quiet || n_max < 10_000 {
            return;
        }
        let decile = (fraction * 10.0).floor() as u32;
        if decile > last_decile.fetch_max(decile, std::sync::atomic::Ordering::Relaxed) {
            eprintln!(
                "sweep: {:>3}% of radii work done ({:.1}s)",
                decile * 10,
                started.elapsed().as_secs_f64()
            );
        }
    };
    let records = sweep_parallel_with(horizon, workers, &progress)?;
    if !quiet && n_max >= 10_000 {
        eprintln!(
            "sweep: C(1..={n_max}) in {:.2}s with {workers} worker(s)",
            started.elapsed().as_secs_f64()
        );
    }
    Ok(records)
}

fn confirm_long_run(n_max: u64, workers: usize, yes: bool) -> Result<(), Failure> {
    let updates = (n_max as f64) * (n_max as f64) * std::f64::consts::FRAC_1_SQRT_2 / 2.0;
    let secs = updates / COLUMN_UPDATES_PER_SEC / workers as f64;
    eprintln!(
        "sweep to {n_max}: about {updates:.2e} column updates, roughly {secs:.0}s with {workers} worker(s)"
    );
    if yes || !io::stdin().is_terminal() {
        return Ok(());
    }
    eprint!("continue? [y/N] ");
    io::stderr().flush().ok();
    let mut answer = String::new();
    io::stdin()
        .lock()
        .read_line(&mut answer)
        .context("reading confirmation")?;
    if matches!(answer.trim(), "y" | "Y" | "yes") {
        Ok(())
    } else {
        Err(Failure::Runtime(anyhow!("aborted at the confirmation prompt")))
    }
}

fn write_rows<R: Row>(rows: &[R], output: &OutputArgs) -> Outcome {
    match &output.out {
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            emit_rows(rows, output.format, &mut lock).context("writing to stdout")?;
            lock.flush().context("flushing stdout")?;
        }
        Some(path) => write_atomically(path, rows, output.format)?,
    }
    Ok(())
}

/// Writes to a temporary file beside `path` and renames it into place, so an
/// interrupted run never leaves a partial data file.
fn write_atomically<R: Row>(path: &Path, rows: &[R], format: Format) -> anyhow::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("creating a temporary file in {}", dir.display()))?;
    emit_rows(rows, format, tmp.as_file_mut())
        .with_context(|| format!("writing {}", path.display()))?;
    tmp.as_file().sync_all().ok();
    tmp.persist(path)
        .with_context(|| format!("moving output into {}", path.display()))?;
    Ok(())
}
