//! Batched search for `p1` witnesses over `q = q_start, q_start + step, ..., <= q_max`.
//!
//! Batch `b` (1-based) starts at `q_start + batch_size·(b − 1)` rounded up to
//! the next multiple of `step` and ends `batch_size − 1` later (clamped to
//! `q_max`). When `batch_size` is not a multiple of `step` neighbouring
//! batches can overlap by one `q`; per-batch files keep those rows, the
//! aggregate files and totals count each `q` once.
//!
//! Output layout in `out_dir`:
//!
//! * `sweep.json`: the configuration, checked on resume
//! * `results_batchNNN.csv` (`q,x,y,z`) and `unsolved_batchNNN.csv` (`q`)
//! * `all_solutions.csv` and `all_unsolved.csv`
//!
//! Batch files are written to a temporary name and renamed, so a file that
//! exists is complete.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::verify_triple;
use crate::witness::{expand_p1, invert_p1, P1Witness, SearchBudget};

pub const META_FILE: &str = "sweep.json";
pub const ALL_SOLUTIONS: &str = "all_solutions.csv";
pub const ALL_UNSOLVED: &str = "all_unsolved.csv";

const META_FORMAT: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub q_start: u64,
    pub q_max: u64,
    pub step: u64,
    pub batch_size: u64,
    pub jobs: usize,
    pub out_dir: PathBuf,
    pub budget: SearchBudget,
}

impl SweepConfig {
    pub const DEFAULT_STEP: u64 = 252;
    pub const DEFAULT_Q_MAX: u64 = 10_000_000;
    pub const DEFAULT_BATCH_SIZE: u64 = 100_000;

    pub fn new(out_dir: impl Into<PathBuf>) -> Self {
        Self {
            q_start: Self::DEFAULT_STEP,
            q_max: Self::DEFAULT_Q_MAX,
            step: Self::DEFAULT_STEP,
            batch_size: Self::DEFAULT_BATCH_SIZE,
            jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
            out_dir: out_dir.into(),
            budget: SearchBudget::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidInput(m));
        if self.step == 0 || self.q_start == 0 || self.batch_size == 0 || self.jobs == 0 {
            return bad("q_start, step, batch_size and jobs must be positive".into());
        }
        if !self.q_start.is_multiple_of(self.step) {
            return bad(format!(
                "q_start = {} is not a multiple of step = {}",
                self.q_start, self.step
            ));
        }
        if self.q_start > self.q_max {
            return bad(format!(
                "empty range: q_start = {} > q_max = {}",
                self.q_start, self.q_max
            ));
        }
        Ok(())
    }

    /// Number of batches announced up front, `⌈(q_max − q_start + 1)/batch_size⌉`.
    pub fn batch_count(&self) -> u64 {
        (self.q_max - self.q_start + 1).div_ceil(self.batch_size)
    }

    pub fn batches(&self) -> Vec<Batch> {
        let mut out = Vec::new();
        for index in 1..=self.batch_count() {
            let Some(raw) = (index - 1)
                .checked_mul(self.batch_size)
                .and_then(|o| o.checked_add(self.q_start))
            else {
                break;
            };
            let rem = raw % self.step;
            let lo = if rem == 0 { raw } else { raw.saturating_add(self.step - rem) };
            if lo > self.q_max {
                break;
            }
            let hi = lo.saturating_add(self.batch_size - 1).min(self.q_max);
            out.push(Batch {
                index,
                lo,
                hi,
                step: self.step,
            });
        }
        out
    }

    fn meta(&self) -> SweepMeta {
        SweepMeta {
            format: META_FORMAT,
            q_start: self.q_start,
            q_max: self.q_max,
            step: self.step,
            batch_size: self.batch_size,
            small_range: self.budget.small_range,
            xmax_override: self.budget.xmax_override,
        }
    }
}

/// One batch interval `[lo, hi]`; `lo` is a multiple of `step`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Batch {
    pub index: u64,
    pub lo: u64,
    pub hi: u64,
    step: u64,
}

impl Batch {
    pub fn q_values(&self) -> impl Iterator<Item = u64> {
        let step = self.step;
        let hi = self.hi;
        std::iter::successors(Some(self.lo), move |&q| q.checked_add(step)).take_while(move |&q| q <= hi)
    }

    pub fn q_count(&self) -> u64 {
        (self.hi - self.lo) / self.step + 1
    }

    pub fn results_file(&self) -> String {
        format!("results_batch{:03}.csv", self.index)
    }

    pub fn unsolved_file(&self) -> String {
        format!("unsolved_batch{:03}.csv", self.index)
    }
}

/// Configuration persisted next to the batch files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepMeta {
    pub format: u32,
    pub q_start: u64,
    pub q_max: u64,
    pub step: u64,
    pub batch_size: u64,
    pub small_range: u64,
    pub xmax_override: Option<u64>,
}

impl SweepMeta {
    pub fn parse(data: &[u8]) -> Result<Self> {
        let meta: SweepMeta = serde_json::from_slice(data)
            .map_err(|e| Error::InvalidInput(format!("sweep metadata: {e}")))?;
        if meta.format != META_FORMAT {
            return Err(Error::InvalidInput(format!(
                "unsupported sweep metadata format {}",
                meta.format
            )));
        }
        Ok(meta)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BatchSummary {
    pub index: u64,
    pub lo: u64,
    pub hi: u64,
    pub found: usize,
    pub unsolved: usize,
    pub seconds: f64,
    /// Loaded from disk instead of computed.
    pub resumed: bool,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SweepReport {
    pub batches: Vec<BatchSummary>,
    /// Distinct `q` scanned across all batches.
    pub scanned: usize,
    /// Distinct `q` with a witness.
    pub solutions_found: usize,
    pub unsolved: Vec<u64>,
    /// Rows repeated because neighbouring batches overlap.
    pub overlap_rows: usize,
    pub audited: usize,
    pub diagnostics: Vec<String>,
}

impl SweepReport {
    pub fn wall_time_per_batch(&self) -> Vec<f64> {
        self.batches.iter().map(|b| b.seconds).collect()
    }
}

fn parse_u64(field: &str, line: u64) -> Result<u64> {
    if field.is_empty() || !field.bytes().all(|c| c.is_ascii_digit()) {
        return Err(Error::InvalidInput(format!(
            "line {line}: {field:?} is not a decimal integer"
        )));
    }
    field
        .parse()
        .map_err(|_| Error::InvalidInput(format!("line {line}: {field:?} out of range")))
}

fn csv_rows(data: &[u8], header: &[&str]) -> Result<Vec<Vec<u64>>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(data);
    let mut rows = Vec::new();
    let mut seen_header = false;
    for (i, rec) in reader.records().enumerate() {
        let line = i as u64 + 1;
        let rec = rec.map_err(|e| Error::InvalidInput(format!("line {line}: {e}")))?;
        if rec.len() != header.len() {
            return Err(Error::InvalidInput(format!(
                "line {line}: expected {} fields, found {}",
                header.len(),
                rec.len()
            )));
        }
        if !seen_header {
            if rec.iter().ne(header.iter().copied()) {
                return Err(Error::InvalidInput(format!(
                    "header must be {}",
                    header.join(",")
                )));
            }
            seen_header = true;
            continue;
        }
        rows.push(
            rec.iter()
                .map(|f| parse_u64(f, line))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    if !seen_header {
        return Err(Error::InvalidInput("missing header".into()));
    }
    Ok(rows)
}

/// Parses a `q,x,y,z` file; every row must be a valid witness.
pub fn parse_results_csv(data: &[u8]) -> Result<Vec<P1Witness>> {
    csv_rows(data, &["q", "x", "y", "z"])?
        .into_iter()
        .map(|r| P1Witness::from_parts(r[0], r[1], r[2], r[3]))
        .collect()
}

/// Parses a single-column `q` file.
pub fn parse_unsolved_csv(data: &[u8]) -> Result<Vec<u64>> {
    Ok(csv_rows(data, &["q"])?.into_iter().map(|r| r[0]).collect())
}

pub fn results_csv(rows: &[P1Witness]) -> String {
    let mut s = String::from("q,x,y,z\n");
    for w in rows {
        s.push_str(&w.to_string());
        s.push('\n');
    }
    s
}

pub fn unsolved_csv(qs: &[u64]) -> String {
    let mut s = String::from("q\n");
    for q in qs {
        s.push_str(&q.to_string());
        s.push('\n');
    }
    s
}

fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let tmp = path.with_extension("csv.tmp");
    fs::write(&tmp, contents).map_err(|e| Error::io(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| Error::io(path, e))
}

struct BatchResult {
    solutions: Vec<P1Witness>,
    unsolved: Vec<u64>,
    diagnostics: Vec<String>,
}

fn compute_batch(batch: &Batch, budget: &SearchBudget, pool: &rayon::ThreadPool) -> BatchResult {
    let qs: Vec<u64> = batch.q_values().collect();
    let outcomes: Vec<(u64, std::result::Result<P1Witness, String>)> = pool.install(|| {
        qs.par_iter()
            .map(|&q| {
                let out = match catch_unwind(AssertUnwindSafe(|| invert_p1(q, budget))) {
                    Ok(Ok(w)) => Ok(w),
                    Ok(Err(Error::NotFound { .. })) => Err(String::new()),
                    Ok(Err(e)) => Err(format!("q = {q}: {e}")),
                    Err(_) => Err(format!("q = {q}: worker panicked")),
                };
                (q, out)
            })
            .collect()
    });
    let mut res = BatchResult {
        solutions: Vec::new(),
        unsolved: Vec::new(),
        diagnostics: Vec::new(),
    };
    for (q, out) in outcomes {
        match out {
            Ok(w) => res.solutions.push(w),
            Err(msg) => {
                res.unsolved.push(q);
                if msg.is_empty() {
                    res.diagnostics.push(format!("q = {q}: no witness found"));
                } else {
                    res.diagnostics.push(msg);
                }
            }
        }
    }
    res.solutions.sort_by_key(|w| w.q());
    res.unsolved.sort_unstable();
    res
}

fn load_batch(dir: &Path, batch: &Batch) -> Result<Option<BatchResult>> {
    let rpath = dir.join(batch.results_file());
    let upath = dir.join(batch.unsolved_file());
    if !rpath.exists() || !upath.exists() {
        return Ok(None);
    }
    let corrupt = |path: &Path, reason: String| Error::Corrupt {
        path: path.to_path_buf(),
        reason,
    };
    let rdata = fs::read(&rpath).map_err(|e| Error::io(&rpath, e))?;
    let solutions = parse_results_csv(&rdata).map_err(|e| corrupt(&rpath, e.to_string()))?;
    let udata = fs::read(&upath).map_err(|e| Error::io(&upath, e))?;
    let unsolved = parse_unsolved_csv(&udata).map_err(|e| corrupt(&upath, e.to_string()))?;

    let expected: Vec<u64> = batch.q_values().collect();
    if (solutions.len() + unsolved.len()) as u64 != batch.q_count() {
        return Err(corrupt(
            &rpath,
            format!(
                "{} solved + {} unsolved rows, batch has {} values of q",
                solutions.len(),
                unsolved.len(),
                batch.q_count()
            ),
        ));
    }
    let mut all: Vec<u64> = solutions.iter().map(|w| w.q()).chain(unsolved.iter().copied()).collect();
    all.sort_unstable();
    if all != expected {
        return Err(corrupt(&rpath, format!("q values do not match batch [{}, {}]", batch.lo, batch.hi)));
    }
    if !solutions.windows(2).all(|w| w[0].q() < w[1].q()) {
        return Err(corrupt(&rpath, "rows not sorted by q".into()));
    }
    Ok(Some(BatchResult {
        solutions,
        unsolved,
        diagnostics: Vec::new(),
    }))
}

fn read_meta(dir: &Path) -> Result<Option<SweepMeta>> {
    let path = dir.join(META_FILE);
    match fs::read(&path) {
        Ok(data) => SweepMeta::parse(&data)
            .map(Some)
            .map_err(|e| Error::Corrupt {
                path,
                reason: e.to_string(),
            }),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
        Err(e) => Err(Error::io(path, e)),
    }
}

fn is_batch_file(name: &str) -> bool {
    (name.starts_with("results_batch") || name.starts_with("unsolved_batch")) && name.ends_with(".csv")
}

fn batch_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    for entry in fs::read_dir(dir).map_err(|e| Error::io(dir, e))? {
        let entry = entry.map_err(|e| Error::io(dir, e))?;
        if entry.file_name().to_str().is_some_and(is_batch_file) {
            out.push(entry.path());
        }
    }
    Ok(out)
}

/// Fresh run: any previous batch files in `out_dir` are replaced.
pub fn run_sweep(cfg: &SweepConfig, progress: &mut dyn Write) -> Result<SweepReport> {
    execute(cfg, progress, false)
}

/// Continues a run in `out_dir`, skipping batches whose files are already
/// present and consistent. Refuses when the stored configuration differs or
/// a batch file is corrupt.
pub fn resume_sweep(cfg: &SweepConfig, progress: &mut dyn Write) -> Result<SweepReport> {
    execute(cfg, progress, true)
}

fn execute(cfg: &SweepConfig, progress: &mut dyn Write, resume: bool) -> Result<SweepReport> {
    cfg.validate()?;
    let dir = &cfg.out_dir;
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;

    if resume {
        match read_meta(dir)? {
            Some(meta) if meta != cfg.meta() => {
                return Err(Error::ConfigMismatch(format!(
                    "{} holds {meta:?}, requested {:?}",
                    dir.join(META_FILE).display(),
                    cfg.meta()
                )));
            }
            Some(_) => {}
            None => {
                if !batch_files(dir)?.is_empty() {
                    return Err(Error::ConfigMismatch(format!(
                        "{} has batch files but no {META_FILE}",
                        dir.display()
                    )));
                }
            }
        }
    } else {
        for f in batch_files(dir)? {
            fs::remove_file(&f).map_err(|e| Error::io(&f, e))?;
        }
    }
    let meta_json = serde_json::to_string_pretty(&cfg.meta()).expect("metadata serializes");
    let meta_path = dir.join(META_FILE);
    fs::write(&meta_path, meta_json + "\n").map_err(|e| Error::io(&meta_path, e))?;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::InvalidInput(format!("worker pool: {e}")))?;

    let out = |progress: &mut dyn Write, line: String| {
        let _ = writeln!(progress, "{line}");
    };
    out(progress, format!("Using {} workers", cfg.jobs));
    out(
        progress,
        format!("qStart = {}, qMax = {}, step = {}", cfg.q_start, cfg.q_max, cfg.step),
    );
    out(progress, format!("Batch size = {}", cfg.batch_size));

    let total = cfg.batch_count();
    let mut report = SweepReport::default();
    let mut solved: BTreeMap<u64, P1Witness> = BTreeMap::new();
    let mut unsolved: BTreeSet<u64> = BTreeSet::new();
    let mut rows = 0usize;

    for batch in cfg.batches() {
        out(
            progress,
            format!(
                "\nProcessing batch {}/{}: q in [{}, {}]",
                batch.index, total, batch.lo, batch.hi
            ),
        );
        let start = Instant::now();
        let loaded = if resume { load_batch(dir, &batch)? } else { None };
        let resumed = loaded.is_some();
        let result = match loaded {
            Some(r) => r,
            None => {
                let r = compute_batch(&batch, &cfg.budget, &pool);
                write_atomic(&dir.join(batch.results_file()), &results_csv(&r.solutions))?;
                write_atomic(&dir.join(batch.unsolved_file()), &unsolved_csv(&r.unsolved))?;
                r
            }
        };
        let seconds = start.elapsed().as_secs_f64();
        if resumed {
            out(progress, "Loaded from existing batch files".into());
        }
        out(progress, format!("Solutions found: {}", result.solutions.len()));
        out(progress, format!("Unsolved q: {}", result.unsolved.len()));
        out(progress, format!("Time: {seconds:.2} sec"));
        for d in &result.diagnostics {
            out(progress, format!("warning: {d}"));
        }
        out(progress, format!("Batch {} complete", batch.index));

        rows += result.solutions.len() + result.unsolved.len();
        report.batches.push(BatchSummary {
            index: batch.index,
            lo: batch.lo,
            hi: batch.hi,
            found: result.solutions.len(),
            unsolved: result.unsolved.len(),
            seconds,
            resumed,
        });
        report.diagnostics.extend(result.diagnostics);
        for w in result.solutions {
            solved.insert(w.q(), w);
        }
        unsolved.extend(result.unsolved);
    }

    let solutions: Vec<P1Witness> = solved.into_values().collect();
    let unsolved: Vec<u64> = unsolved.into_iter().collect();
    write_atomic(&dir.join(ALL_SOLUTIONS), &results_csv(&solutions))?;
    write_atomic(&dir.join(ALL_UNSOLVED), &unsolved_csv(&unsolved))?;

    report.scanned = solutions.len() + unsolved.len();
    report.overlap_rows = rows - report.scanned;
    report.solutions_found = solutions.len();
    report.audited = audit_rows(&solutions, 0.01, cfg.q_start ^ cfg.q_max)?;
    report.unsolved = unsolved;

    out(progress, "\nProcessing complete!".into());
    out(progress, format!("Total solutions found: {}", report.solutions_found));
    out(progress, format!("Total unsolved q: {}", report.unsolved.len()));
    out(progress, format!("All results saved to: {}", dir.display()));
    Ok(report)
}

/// Re-checks a seeded random `fraction` of rows (at least one when any
/// exist): `p1(x, y, z) = q` and the expanded triple verifies `5/(5q + 1)`.
/// Returns the number of rows checked.
pub fn audit_rows(rows: &[P1Witness], fraction: f64, seed: u64) -> Result<usize> {
    if rows.is_empty() {
        return Ok(0);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let want = ((rows.len() as f64 * fraction).ceil() as usize).clamp(1, rows.len());
    for _ in 0..want {
        let w = &rows[rng.gen_range(0..rows.len())];
        let w = P1Witness::from_parts(w.q(), w.x(), w.y(), w.z())?;
        let d = expand_p1(&w)?;
        if !verify_triple(5, d.a(), d.triple()) {
            return Err(Error::NotAnIdentity {
                r: 5,
                a: d.a(),
                b: d.triple().b().to_string(),
                c: d.triple().c().to_string(),
                d: d.triple().d().to_string(),
            });
        }
    }
    Ok(want)
}

/// Audits an `all_solutions.csv` on disk.
pub fn audit_file(path: &Path, fraction: f64, seed: u64) -> Result<usize> {
    let data = fs::read(path).map_err(|e| Error::io(path, e))?;
    let rows = parse_results_csv(&data).map_err(|e| Error::Corrupt {
        path: path.to_path_buf(),
        reason: e.to_string(),
    })?;
    audit_rows(&rows, fraction, seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(q_max: u64, batch_size: u64) -> SweepConfig {
        SweepConfig {
            q_max,
            batch_size,
            jobs: 2,
            ..SweepConfig::new("unused")
        }
    }

    #[test]
    fn batch_plan_overlaps_at_full_scale() {
        let plan = cfg(100_000_000, 10_000_000).batches();
        let bounds: Vec<(u64, u64)> = plan.iter().map(|b| (b.lo, b.hi)).collect();
        assert_eq!(
            bounds,
            vec![
                (252, 10000251),
                (10000368, 20000367),
                (20000484, 30000483),
                (30000348, 40000347),
                (40000464, 50000463),
                (50000328, 60000327),
                (60000444, 70000443),
                (70000308, 80000307),
                (80000424, 90000423),
                (90000288, 100000000),
            ]
        );
        let counts: Vec<u64> = plan.iter().map(|b| b.q_count()).collect();
        assert_eq!(counts[..9], [39683; 9]);
        assert_eq!(counts[9], 39682);
        // per-batch rows sum to the printed total; overlaps make it exceed
        // the number of distinct multiples of 252
        assert_eq!(counts.iter().sum::<u64>(), 396829);
        assert_eq!(100_000_000 / 252, 396825);
    }

    #[test]
    fn batch_plan_small() {
        let plan = cfg(252 * 100, 252 * 10).batches();
        assert_eq!(plan.len(), 10);
        assert!(plan.iter().all(|b| b.q_count() == 10));
        let all: Vec<u64> = plan.iter().flat_map(|b| b.q_values()).collect();
        assert_eq!(all, (1..=100).map(|i| 252 * i).collect::<Vec<_>>());
    }

    #[test]
    fn batch_plan_has_no_gaps() {
        for batch_size in [1u64, 7, 100, 251, 252, 253, 1000, 5000] {
            let c = cfg(252 * 300, batch_size);
            let got: BTreeSet<u64> = c.batches().iter().flat_map(|b| b.q_values()).collect();
            let want: BTreeSet<u64> = (1..=300).map(|i| 252 * i).collect();
            assert_eq!(got, want, "batch_size = {batch_size}");
        }
    }

    #[test]
    fn config_validation() {
        assert!(cfg(251, 100).validate().is_err());
        let mut c = cfg(1000, 100);
        c.q_start = 100;
        assert!(c.validate().is_err());
        c.q_start = 252;
        c.jobs = 0;
        assert!(c.validate().is_err());
        assert!(cfg(252, 1).validate().is_ok());
    }

    #[test]
    fn csv_parsers() {
        let rows = parse_results_csv(b"q,x,y,z\n252,1,3,23\n").unwrap();
        assert_eq!(rows, vec![P1Witness::from_parts(252, 1, 3, 23).unwrap()]);
        assert!(parse_results_csv(b"q,x,y,z\n252,1,3,24\n").is_err());
        assert!(parse_results_csv(b"q,x,y\n").is_err());
        assert!(parse_results_csv(b"").is_err());
        assert!(parse_results_csv(b"q,x,y,z\n252,1,3\n").is_err());
        assert!(parse_results_csv(b"q,x,y,z\n-252,1,3,23\n").is_err());
        assert_eq!(parse_unsolved_csv(b"q\n").unwrap(), Vec::<u64>::new());
        assert_eq!(parse_unsolved_csv(b"q\n504\n756\n").unwrap(), vec![504, 756]);
        assert!(parse_unsolved_csv(b"q\n99999999999999999999999\n").is_err());
        assert!(parse_unsolved_csv(b"q\n 5\n").is_err());
    }

    #[test]
    fn csv_writers_round_trip() {
        let rows = vec![
            P1Witness::from_parts(252, 1, 3, 23).unwrap(),
            P1Witness::new(2, 1, 1).unwrap(),
        ];
        assert_eq!(parse_results_csv(results_csv(&rows).as_bytes()).unwrap(), rows);
        assert_eq!(results_csv(&rows[..1]), "q,x,y,z\n252,1,3,23\n");
        assert_eq!(unsolved_csv(&[]), "q\n");
    }

    #[test]
    fn meta_parse() {
        let c = cfg(1000, 100);
        let s = serde_json::to_string(&c.meta()).unwrap();
        assert_eq!(SweepMeta::parse(s.as_bytes()).unwrap(), c.meta());
        assert!(SweepMeta::parse(b"{}").is_err());
        assert!(SweepMeta::parse(b"not json").is_err());
        let bumped = s.replace("\"format\":1", "\"format\":2");
        assert!(SweepMeta::parse(bumped.as_bytes()).is_err());
    }

    #[test]
    fn audit_detects_bad_rows() {
        let good = vec![P1Witness::from_parts(252, 1, 3, 23).unwrap()];
        assert_eq!(audit_rows(&good, 0.01, 0).unwrap(), 1);
        assert_eq!(audit_rows(&[], 0.01, 0).unwrap(), 0);
    }
}
