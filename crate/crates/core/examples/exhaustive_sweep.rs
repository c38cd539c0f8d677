//! Runs every check on every connected graph with up to `nmax` vertices and
//! summarizes the squared gaps `2d(v) - 1 - (λ² - μ²)`.
//!
//! ```text
//! cargo run --release --example exhaustive_sweep -- 7
//! ```

use std::error::Error;
use std::time::Instant;

use spectral_deletion::harness::{gap_statistics, run_scan, ScanConfig, Source, HISTOGRAM_WIDTH};

pub fn run(nmax: usize) -> Result<(), Box<dyn Error>> {
    let start = Instant::now();
    let report = run_scan(&ScanConfig::new(Source::enumerate(nmax)))?;
    let a = &report.aggregates;
    println!("{} graphs, {} (graph, vertex) pairs in {:.2?}", a.graphs, a.rows, start.elapsed());
    println!("violations {}, equality pairs {}", a.violation_count, a.equality_rows);

    let summary = gap_statistics(&report)?;
    println!("squared gap by n:");
    for (n, s) in &summary.by_n {
        println!("  n = {n}: {:>5} pairs, min {:.4}, median {:.4}, max {:.4}", s.count, s.min, s.median, s.max);
    }
    println!("squared gap by degree:");
    for (d, s) in &summary.by_degree {
        println!("  d = {d}: {:>5} pairs, min {:.4}, median {:.4}, max {:.4}", s.count, s.min, s.median, s.max);
    }
    println!("histogram (bucket width {HISTOGRAM_WIDTH}):");
    for (bucket, count) in a.gap_histogram.iter().take(12) {
        println!("  [{:.1}, {:.1}) {count}", *bucket as f64 * HISTOGRAM_WIDTH, (*bucket + 1) as f64 * HISTOGRAM_WIDTH);
    }
    if !report.is_clean() {
        return Err(format!("{} violations", report.violations.len()).into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    let nmax = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(6);
    run(nmax)
}
