use std::fs;
use std::path::Path;

use sierpinski::sweep::{parse_results_csv, ALL_SOLUTIONS, META_FILE};
use sierpinski::{resume_sweep, run_sweep, Error, SweepConfig};

fn config(dir: &Path, batch_size: u64, jobs: usize) -> SweepConfig {
    let mut cfg = SweepConfig::new(dir);
    cfg.q_start = 252;
    cfg.q_max = 252 * 1000;
    cfg.step = 252;
    cfg.batch_size = batch_size;
    cfg.jobs = jobs;
    cfg
}

fn quiet() -> std::io::Sink {
    std::io::sink()
}

#[test]
fn output_is_independent_of_jobs_and_batch_size() {
    let mut outputs = Vec::new();
    for (batch, jobs) in [(252 * 100, 1), (252 * 100, 4), (25_000, 3), (252 * 1000, 2)] {
        let dir = tempfile::tempdir().unwrap();
        let report = run_sweep(&config(dir.path(), batch, jobs), &mut quiet()).unwrap();
        assert_eq!(report.solutions_found, 1000);
        assert!(report.unsolved.is_empty());
        outputs.push(fs::read(dir.path().join(ALL_SOLUTIONS)).unwrap());
    }
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
    let rows = parse_results_csv(&outputs[0]).unwrap();
    assert_eq!(rows.first().unwrap().q(), 252);
    assert_eq!(rows.last().unwrap().q(), 252_000);
}

#[test]
fn resume_after_full_run_recomputes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = config(dir.path(), 252 * 100, 2);
    let first = run_sweep(&cfg, &mut quiet()).unwrap();
    let before = fs::read(dir.path().join(ALL_SOLUTIONS)).unwrap();
    let again = resume_sweep(&cfg, &mut quiet()).unwrap();
    assert!(again.batches.iter().all(|b| b.resumed));
    assert_eq!(again.solutions_found, first.solutions_found);
    assert_eq!(fs::read(dir.path().join(ALL_SOLUTIONS)).unwrap(), before);
}

#[test]
fn resume_fills_in_missing_batches() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = config(dir.path(), 252 * 100, 2);
    let full = run_sweep(&cfg, &mut quiet()).unwrap();
    assert_eq!(full.batches.len(), 10);
    let reference = fs::read(dir.path().join(ALL_SOLUTIONS)).unwrap();

    let keep = [1u64, 4, 9];
    for b in cfg.batches() {
        if !keep.contains(&b.index) {
            fs::remove_file(dir.path().join(b.results_file())).unwrap();
            fs::remove_file(dir.path().join(b.unsolved_file())).unwrap();
        }
    }
    fs::remove_file(dir.path().join(ALL_SOLUTIONS)).unwrap();

    let mut log = Vec::new();
    let report = resume_sweep(&cfg, &mut log).unwrap();
    let resumed: Vec<u64> = report.batches.iter().filter(|b| b.resumed).map(|b| b.index).collect();
    assert_eq!(resumed, keep);
    assert_eq!(fs::read(dir.path().join(ALL_SOLUTIONS)).unwrap(), reference);
    let log = String::from_utf8(log).unwrap();
    assert_eq!(log.matches("Loaded from existing batch files").count(), 3);
}

#[test]
fn corrupt_batch_file_is_named() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = config(dir.path(), 252 * 100, 2);
    run_sweep(&cfg, &mut quiet()).unwrap();
    let victim = cfg.batches()[2].results_file();
    let path = dir.path().join(&victim);
    let mut text = fs::read_to_string(&path).unwrap();
    text.push_str("999,1,1,1\n");
    fs::write(&path, text).unwrap();

    let err = resume_sweep(&cfg, &mut quiet()).unwrap_err();
    assert!(matches!(err, Error::Corrupt { .. }), "{err:?}");
    assert!(err.to_string().contains(&victim), "{err}");
}

#[test]
fn resume_refuses_different_configuration() {
    let dir = tempfile::tempdir().unwrap();
    run_sweep(&config(dir.path(), 252 * 100, 2), &mut quiet()).unwrap();
    let other = config(dir.path(), 252 * 50, 2);
    let err = resume_sweep(&other, &mut quiet()).unwrap_err();
    assert!(matches!(err, Error::ConfigMismatch(_)), "{err:?}");
}

#[test]
fn resume_refuses_batch_files_without_metadata() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = config(dir.path(), 252 * 100, 2);
    run_sweep(&cfg, &mut quiet()).unwrap();
    fs::remove_file(dir.path().join(META_FILE)).unwrap();
    assert!(matches!(
        resume_sweep(&cfg, &mut quiet()),
        Err(Error::ConfigMismatch(_))
    ));
}

#[test]
fn fresh_run_replaces_stale_batches() {
    let dir = tempfile::tempdir().unwrap();
    run_sweep(&config(dir.path(), 252 * 100, 2), &mut quiet()).unwrap();
    let small = config(dir.path(), 252 * 500, 2);
    let report = run_sweep(&small, &mut quiet()).unwrap();
    assert_eq!(report.batches.len(), 2);
    let batch_files = fs::read_dir(dir.path())
        .unwrap()
        .filter(|e| {
            let name = e.as_ref().unwrap().file_name();
            name.to_string_lossy().contains("_batch")
        })
        .count();
    assert_eq!(batch_files, 4);
}

#[test]
fn progress_log_has_batch_and_total_lines() {
    let dir = tempfile::tempdir().unwrap();
    let mut log = Vec::new();
    run_sweep(&config(dir.path(), 252 * 100, 2), &mut log).unwrap();
    let log = String::from_utf8(log).unwrap();
    assert!(log.contains("Processing batch 1/10: q in [252, 25451]"), "{log}");
    assert!(log.contains("Total solutions found: 1000"));
    assert!(log.contains("Total unsolved q: 0"));
}
