//! Scans seeded Erdős–Rényi samples on a worker pool and writes the CSV
//! report. The output does not depend on the number of workers.
//!
//! ```text
//! cargo run --release --example random_scan_csv -- scan.csv
//! ```

use std::error::Error;

use spectral_deletion::harness::{export_csv, run_scan, write_csv, CheckSet, ScanConfig, Source};

pub fn run(out: Option<&str>) -> Result<(), Box<dyn Error>> {
    let mut config = ScanConfig::new(Source::Random { n: 16, p: 0.3, trials: 50, seed: 42 });
    config.checks = "theorem1,certificates,hong".parse::<CheckSet>()?;
    config.jobs = 4;
    let report = run_scan(&config)?;

    config.jobs = 1;
    let mut serial = Vec::new();
    write_csv(&run_scan(&config)?, &mut serial)?;
    let mut parallel = Vec::new();
    write_csv(&report, &mut parallel)?;
    assert_eq!(serial, parallel);

    let connected = report.graphs.iter().filter(|g| g.connected).count();
    println!("{} samples ({connected} connected), {} rows, {} violations", report.graphs.len(), report.rows.len(), report.violations.len());
    println!("min gap {:.6}", report.aggregates.min_gap.unwrap_or(f64::NAN));
    match out {
        Some(path) => {
            export_csv(&report, path)?;
            println!("wrote {path}");
        }
        None => {
            let text = String::from_utf8(parallel)?;
            for line in text.lines().take(4) {
                println!("{line}");
            }
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run(std::env::args().nth(1).as_deref())
}
