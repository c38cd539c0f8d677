use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Result, ScanError, ScanReport};

/// Order statistics of `2d(v) - 1 - (λ² - μ²)` over a set of rows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GapStats {
    pub count: usize,
    pub min: f64,
    /// Mean of the two middle values for even counts.
    pub median: f64,
    pub max: f64,
}

impl GapStats {
    fn from_values(mut values: Vec<f64>) -> Self {
        values.sort_by(f64::total_cmp);
        let count = values.len();
        let median = if count % 2 == 1 {
            values[count / 2]
        } else {
            0.5 * (values[count / 2 - 1] + values[count / 2])
        };
        GapStats { count, min: values[0], median, max: values[count - 1] }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GapSummary {
    pub overall: GapStats,
    pub by_n: BTreeMap<usize, GapStats>,
    pub by_degree: BTreeMap<usize, GapStats>,
}

pub fn gap_statistics(report: &ScanReport) -> Result<GapSummary> {
    if report.rows.is_empty() {
        return Err(ScanError::EmptyReport);
    }
    let mut by_n: BTreeMap<usize, Vec<f64>> = BTreeMap::new();
    let mut by_degree: BTreeMap<usize, Vec<f64>> = BTreeMap::new();
    for row in &report.rows {
        by_n.entry(row.n).or_default().push(row.squared_gap);
        by_degree.entry(row.degree).or_default().push(row.squared_gap);
    }
    Ok(GapSummary {
        overall: GapStats::from_values(report.rows.iter().map(|r| r.squared_gap).collect()),
        by_n: by_n.into_iter().map(|(k, v)| (k, GapStats::from_values(v))).collect(),
        by_degree: by_degree.into_iter().map(|(k, v)| (k, GapStats::from_values(v))).collect(),
    })
}
