use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use super::{Result, ScanReport};

pub const CSV_HEADER: [&str; 14] = [
    "graph6",
    "n",
    "vertex",
    "degree",
    "lambda",
    "mu",
    "bound",
    "gap",
    "squared_gap",
    "equality_observed",
    "equality_predicted",
    "schur_residual",
    "m_min_eig",
    "degenerate",
];

const SIGNIFICANT: i32 = 12;

/// Renders `x` with 12 significant digits in the style of C's `%.12g`:
/// fixed notation for exponents in `-5..12`, scientific otherwise, trailing
/// zeros removed. Negative zero renders as `0`.
pub fn format_float(x: f64) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", (SIGNIFICANT - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..SIGNIFICANT).contains(&exp) {
        let fixed = format!("{:.*}", (SIGNIFICANT - 1 - exp) as usize, x);
        trim_zeros(&fixed).to_string()
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa), exp.abs())
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn opt_float(x: Option<f64>) -> String {
    x.map(format_float).unwrap_or_default()
}

fn opt_bool(x: Option<bool>) -> String {
    x.map(|b| b.to_string()).unwrap_or_default()
}

/// Writes the rows of `report` as CSV with [`CSV_HEADER`].
pub fn write_csv<W: Write>(report: &ScanReport, writer: W) -> Result<()> {
    let mut out = csv::Writer::from_writer(writer);
    out.write_record(CSV_HEADER)?;
    for row in &report.rows {
        out.write_record([
            row.graph6.clone(),
            row.n.to_string(),
            row.vertex.to_string(),
            row.degree.to_string(),
            format_float(row.lambda),
            format_float(row.mu),
            format_float(row.bound),
            format_float(row.gap),
            format_float(row.squared_gap),
            row.equality_observed.to_string(),
            opt_bool(row.equality_predicted),
            opt_float(row.schur_residual),
            opt_float(row.m_min_eig),
            opt_bool(row.degenerate),
        ])?;
    }
    out.flush()?;
    Ok(())
}

pub fn export_csv(report: &ScanReport, path: impl AsRef<Path>) -> Result<()> {
    write_csv(report, BufWriter::new(File::create(path)?))
}

/// Writes the whole report (rows, graph records, violations, aggregates)
/// as one JSON document.
pub fn export_json(report: &ScanReport, path: impl AsRef<Path>) -> Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    serde_json::to_writer_pretty(&mut out, report)?;
    out.write_all(b"\n")?;
    out.flush()?;
    Ok(())
}
