//! Corpus scans.
//!
//! [`run_scan`] evaluates the deletion bound, its proof certificate, the
//! equality characterization and the companion bounds over every graph of a
//! corpus: all connected graphs up to seven vertices, seeded random graphs,
//! a graph6 file, or an in-memory list. Work is split per graph and may run
//! on a thread pool; rows are sorted by `(graph6, corpus position, vertex)`
//! afterwards, so the report does not depend on scheduling. For enumerated
//! corpora the graph6 string is that of the canonical labeling, so this is
//! the canonical-key order.

mod export;
mod stats;

pub use export::{export_csv, export_json, format_float, write_csv, CSV_HEADER};
pub use stats::{gap_statistics, GapStats, GapSummary};

use std::collections::BTreeMap;
use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{
    certificate_with_radii, equality_characterization, equality_structure_check, hong_bound, min_degree_corollary, nikiforov_bound,
    report_from_radii, BoundError, BoundOutcome, CorollaryOutcome, NikiforovOutcome, Tolerances,
};
use crate::graph::{enumerate_connected, erdos_renyi, graph6, Graph, Graph6Error, GraphError, VertexId, MAX_ENUMERATION_N};
use crate::linalg::spectral_radius;

/// Bucket width of the squared-gap histogram.
pub const HISTOGRAM_WIDTH: f64 = 0.1;

#[derive(Debug, Error)]
pub enum ScanError {
    #[error("invalid scan configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{path}: {source}")]
    File { path: PathBuf, source: Graph6Error },
    #[error("evaluating graph {graph6} at vertex {vertex:?}: {source}")]
    Evaluation { graph6: String, vertex: Option<usize>, source: BoundError },
    #[error("the report is empty")]
    EmptyReport,
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, ScanError>;

/// Where the graphs of a scan come from.
#[derive(Debug, Clone, PartialEq)]
pub enum Source {
    /// Every connected graph with `min_n <= n <= max_n` vertices, up to isomorphism.
    Enumerate { min_n: usize, max_n: usize },
    /// `trials` samples of `G(n, p)`; trial `t` uses seed `seed + t` (wrapping).
    Random { n: usize, p: f64, trials: usize, seed: u64 },
    /// One graph6 graph per line.
    File(PathBuf),
    Graphs(Vec<Graph>),
}

impl Source {
    /// Connected graphs on `2..=max_n` vertices.
    pub fn enumerate(max_n: usize) -> Self {
        Source::Enumerate { min_n: 2, max_n }
    }

    /// Connected graphs on exactly `n` vertices.
    pub fn enumerate_exact(n: usize) -> Self {
        Source::Enumerate { min_n: n, max_n: n }
    }

    pub fn load(&self) -> Result<Vec<Graph>> {
        match self {
            &Source::Enumerate { min_n, max_n } => {
                if min_n == 0 || min_n > max_n {
                    return Err(ScanError::InvalidConfig(format!("empty vertex range {min_n}..={max_n}")));
                }
                if max_n > MAX_ENUMERATION_N {
                    return Err(GraphError::EnumerationLimit { n: max_n, max: MAX_ENUMERATION_N }.into());
                }
                let mut graphs = Vec::new();
                for n in min_n..=max_n {
                    graphs.extend(enumerate_connected(n)?);
                }
                Ok(graphs)
            }
            &Source::Random { n, p, trials, seed } => {
                (0..trials as u64).map(|t| Ok(erdos_renyi(n, p, seed.wrapping_add(t))?)).collect()
            }
            Source::File(path) => {
                let file = File::open(path).map_err(|e| ScanError::File { path: path.clone(), source: Graph6Error::Io(e.to_string()) })?;
                graph6::read_all(BufReader::new(file)).map_err(|source| ScanError::File { path: path.clone(), source })
            }
            Source::Graphs(graphs) => Ok(graphs.clone()),
        }
    }
}

/// Which checks a scan runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSet {
    pub theorem1: bool,
    pub certificates: bool,
    pub hong: bool,
    pub nikiforov: bool,
    pub corollary: bool,
    pub equality: bool,
}

impl CheckSet {
    pub const ALL: CheckSet = CheckSet { theorem1: true, certificates: true, hong: true, nikiforov: true, corollary: true, equality: true };
    pub const NONE: CheckSet = CheckSet { theorem1: false, certificates: false, hong: false, nikiforov: false, corollary: false, equality: false };
}

impl Default for CheckSet {
    fn default() -> Self {
        CheckSet::ALL
    }
}

/// Comma-separated names out of `theorem1`, `certificates`, `hong`,
/// `nikiforov`, `corollary`, `equality`, or `all`.
impl FromStr for CheckSet {
    type Err = ScanError;

    fn from_str(s: &str) -> Result<Self> {
        let mut set = CheckSet::NONE;
        for name in s.split(',').map(str::trim).filter(|n| !n.is_empty()) {
            match name {
                "all" => set = CheckSet::ALL,
                "theorem1" => set.theorem1 = true,
                "certificates" => set.certificates = true,
                "hong" => set.hong = true,
                "nikiforov" => set.nikiforov = true,
                "corollary" => set.corollary = true,
                "equality" => set.equality = true,
                other => return Err(ScanError::InvalidConfig(format!("unknown check {other:?}"))),
            }
        }
        Ok(set)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanConfig {
    pub source: Source,
    pub tol: Tolerances,
    pub checks: CheckSet,
    /// Worker threads; `1` runs on the calling thread.
    pub jobs: usize,
}

impl ScanConfig {
    pub fn new(source: Source) -> Self {
        Self { source, tol: Tolerances::default(), checks: CheckSet::ALL, jobs: 1 }
    }

    fn validate(&self) -> Result<()> {
        if let Source::Random { n, p, .. } = self.source {
            if !(0.0..=1.0).contains(&p) {
                return Err(ScanError::InvalidConfig(format!("edge probability must lie in [0, 1], got {p}")));
            }
            if n == 0 {
                return Err(ScanError::InvalidConfig("random graphs need n >= 1".into()));
            }
        }
        if self.jobs == 0 {
            return Err(ScanError::InvalidConfig("jobs must be at least 1".into()));
        }
        Ok(())
    }
}

/// One `(graph, vertex)` record.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub graph6: String,
    #[serde(skip)]
    pub position: usize,
    pub n: usize,
    pub vertex: usize,
    pub degree: usize,
    pub lambda: f64,
    pub mu: f64,
    pub bound: f64,
    pub gap: f64,
    pub squared_gap: f64,
    pub equality_observed: bool,
    /// Only for connected graphs.
    pub equality_predicted: Option<bool>,
    pub schur_residual: Option<f64>,
    pub m_min_eig: Option<f64>,
    pub degenerate: Option<bool>,
    /// `|B²e_u - μ²e_u|_inf` for tight pairs with `d(v) = 1`.
    pub structure_residual: Option<f64>,
}

/// Graph-level results.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub graph6: String,
    #[serde(skip)]
    pub position: usize,
    pub n: usize,
    pub edges: usize,
    pub connected: bool,
    pub complete: bool,
    pub star: bool,
    pub hong: Option<BoundOutcome>,
    pub nikiforov: Option<NikiforovOutcome>,
    pub corollary: Option<CorollaryOutcome>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Theorem1,
    Monotonicity,
    Certificate,
    EqualityMismatch,
    EqualityStructure,
    Hong,
    HongEquality,
    Nikiforov,
    Corollary,
}

/// A check that failed. Any violation indicates a numerical or
/// implementation defect, since every checked statement is a theorem.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub graph6: String,
    pub vertex: Option<usize>,
    pub check: CheckKind,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Aggregates {
    pub graphs: usize,
    pub rows: usize,
    pub min_gap: Option<f64>,
    pub min_squared_gap: Option<f64>,
    pub violation_count: usize,
    pub equality_mismatches: usize,
    pub equality_rows: usize,
    /// Bucket index `k` counts rows with squared gap in `[0.1k, 0.1(k+1))`;
    /// slightly negative values land in bucket 0.
    pub gap_histogram: BTreeMap<i64, usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub rows: Vec<ScanRow>,
    pub graphs: Vec<GraphRecord>,
    pub violations: Vec<Violation>,
    pub aggregates: Aggregates,
}

impl ScanReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn from_rows(rows: Vec<ScanRow>) -> Self {
        Self::assemble(rows, Vec::new(), Vec::new())
    }

    fn assemble(mut rows: Vec<ScanRow>, mut graphs: Vec<GraphRecord>, mut violations: Vec<Violation>) -> Self {
        rows.sort_by(|a, b| (&a.graph6, a.position, a.vertex).cmp(&(&b.graph6, b.position, b.vertex)));
        graphs.sort_by(|a, b| (&a.graph6, a.position).cmp(&(&b.graph6, b.position)));
        violations.sort_by(|a, b| (&a.graph6, a.vertex, a.check).cmp(&(&b.graph6, b.vertex, b.check)));
        let mut histogram = BTreeMap::new();
        for row in &rows {
            let bucket = ((row.squared_gap.max(0.0) / HISTOGRAM_WIDTH) + 1e-9).floor() as i64;
            *histogram.entry(bucket).or_insert(0) += 1;
        }
        let aggregates = Aggregates {
            graphs: graphs.len(),
            rows: rows.len(),
            min_gap: rows.iter().map(|r| r.gap).reduce(f64::min),
            min_squared_gap: rows.iter().map(|r| r.squared_gap).reduce(f64::min),
            violation_count: violations.len(),
            equality_mismatches: violations.iter().filter(|v| v.check == CheckKind::EqualityMismatch).count(),
            equality_rows: rows.iter().filter(|r| r.equality_observed).count(),
            gap_histogram: histogram,
        };
        ScanReport { rows, graphs, violations, aggregates }
    }
}

struct GraphOutcome {
    rows: Vec<ScanRow>,
    record: GraphRecord,
    violations: Vec<Violation>,
}

fn evaluate_graph(position: usize, g: &Graph, config: &ScanConfig) -> Result<GraphOutcome> {
    let tol = &config.tol;
    let checks = config.checks;
    let key = g.to_graph6().map_err(|source| ScanError::Graph(source.into()))?;
    let connected = g.is_connected();
    let fail = |vertex: Option<usize>| {
        let graph6 = key.clone();
        move |source: BoundError| ScanError::Evaluation { graph6, vertex, source }
    };
    let mut violations = Vec::new();
    let mut violate = |vertex: Option<usize>, check: CheckKind, detail: String| {
        violations.push(Violation { graph6: key.clone(), vertex, check, detail });
    };

    let mut rows = Vec::new();
    // λ(G) is shared by every vertex, μ by the report and the certificate
    let lambda = spectral_radius(&g.adjacency_matrix(), tol.eig).map_err(|e| fail(None)(e.into()))?;
    for v in 0..g.n() {
        let vid = VertexId(v);
        let degree = g.degree(vid)?;
        if g.n() < 2 || degree == 0 {
            continue;
        }
        let h = g.delete_vertex(vid)?;
        let mu = spectral_radius(&h.adjacency_matrix(), tol.eig).map_err(|e| fail(Some(v))(e.into()))?;
        let report = report_from_radii(vid, degree, lambda, mu, tol);
        if checks.theorem1 {
            for detail in report.violations(tol) {
                violate(Some(v), CheckKind::Theorem1, detail);
            }
            if connected && report.mu >= report.lambda {
                violate(Some(v), CheckKind::Monotonicity, format!("mu = {} is not below lambda = {}", report.mu, report.lambda));
            }
        }
        let mut row = ScanRow {
            graph6: key.clone(),
            position,
            n: g.n(),
            vertex: v,
            degree: report.degree,
            lambda: report.lambda,
            mu: report.mu,
            bound: report.bound,
            gap: report.gap,
            squared_gap: report.squared_gap,
            equality_observed: report.equality,
            equality_predicted: None,
            schur_residual: None,
            m_min_eig: None,
            degenerate: None,
            structure_residual: None,
        };
        if checks.certificates {
            let cert = certificate_with_radii(g, vid, lambda, mu, tol).map_err(fail(Some(v)))?;
            for detail in cert.failures(tol) {
                violate(Some(v), CheckKind::Certificate, detail);
            }
            row.schur_residual = cert.schur_residual;
            row.m_min_eig = cert.m_min_eig;
            row.degenerate = Some(cert.degenerate);
        }
        if checks.equality && connected {
            let predicted = equality_characterization(g, vid).map_err(fail(Some(v)))?;
            row.equality_predicted = Some(predicted);
            if predicted != report.equality {
                violate(
                    Some(v),
                    CheckKind::EqualityMismatch,
                    format!("predicted equality {predicted} but observed gap {:e}", report.gap),
                );
            }
            if report.equality && report.degree == 1 {
                let residual = equality_structure_check(g, vid, tol).map_err(fail(Some(v)))?;
                row.structure_residual = Some(residual);
                if residual >= tol.num {
                    violate(Some(v), CheckKind::EqualityStructure, format!("|B^2 e_u - mu^2 e_u| = {residual:e}"));
                }
            }
        }
        rows.push(row);
    }

    let mut record = GraphRecord {
        graph6: key.clone(),
        position,
        n: g.n(),
        edges: g.edge_count(),
        connected,
        complete: g.is_complete(),
        star: g.is_star(),
        hong: None,
        nikiforov: None,
        corollary: None,
    };
    if checks.hong && g.min_degree() >= 1 {
        let outcome = hong_bound(g, tol).map_err(fail(None))?;
        if !outcome.holds {
            violate(None, CheckKind::Hong, format!("lambda = {} exceeds sqrt(2m - n + 1) = {}", outcome.lambda, outcome.bound));
        }
        if connected && outcome.tight != (record.complete || record.star) {
            violate(None, CheckKind::HongEquality, format!("tightness {} on a graph that is neither complete nor a star, or vice versa", outcome.tight));
        }
        record.hong = Some(outcome);
    }
    if checks.nikiforov && connected {
        match nikiforov_bound(g, tol) {
            Ok(outcome) => {
                if !outcome.holds {
                    violate(None, CheckKind::Nikiforov, format!("lambda = {} exceeds {}", outcome.lambda, outcome.bound));
                }
                record.nikiforov = Some(outcome);
            }
            Err(BoundError::NikiforovInapplicable { .. }) => {}
            Err(e) => return Err(fail(None)(e)),
        }
    }
    if checks.corollary && g.n() >= 2 {
        let outcome = min_degree_corollary(g, tol).map_err(fail(None))?;
        if !outcome.holds || !outcome.premise_holds {
            violate(
                None,
                CheckKind::Corollary,
                format!(
                    "lambda = {}, mu = {}, d = {}, 2m/n = {}",
                    outcome.lambda, outcome.mu, outcome.degree, outcome.average_degree
                ),
            );
        }
        record.corollary = Some(outcome);
    }
    Ok(GraphOutcome { rows, record, violations })
}

/// Runs every enabled check on every graph of the source.
///
/// The returned report lists violations rather than failing on the first
/// one; callers decide whether a non-clean report is fatal. Evaluation
/// errors (for instance eigensolver non-convergence) abort the scan.
pub fn run_scan(config: &ScanConfig) -> Result<ScanReport> {
    config.validate()?;
    let graphs = config.source.load()?;
    let outcomes: Vec<Result<GraphOutcome>> = if config.jobs == 1 {
        graphs.iter().enumerate().map(|(i, g)| evaluate_graph(i, g, config)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| ScanError::InvalidConfig(format!("cannot start worker pool: {e}")))?;
        pool.install(|| graphs.par_iter().enumerate().map(|(i, g)| evaluate_graph(i, g, config)).collect())
    };
    let mut rows = Vec::new();
    let mut records = Vec::new();
    let mut violations = Vec::new();
    for outcome in outcomes {
        let outcome = outcome?;
        rows.extend(outcome.rows);
        records.push(outcome.record);
        violations.extend(outcome.violations);
    }
    Ok(ScanReport::assemble(rows, records, violations))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;

    #[test]
    fn check_set_grammar() {
        assert_eq!("all".parse::<CheckSet>().unwrap(), CheckSet::ALL);
        let set: CheckSet = "theorem1, hong".parse().unwrap();
        assert!(set.theorem1 && set.hong && !set.certificates);
        assert!("theorem2".parse::<CheckSet>().is_err());
    }

    #[test]
    fn config_validation() {
        let cfg = ScanConfig::new(Source::Random { n: 5, p: 1.2, trials: 1, seed: 0 });
        assert!(matches!(run_scan(&cfg), Err(ScanError::InvalidConfig(_))));
        let cfg = ScanConfig::new(Source::enumerate(8));
        assert!(matches!(run_scan(&cfg), Err(ScanError::Graph(GraphError::EnumerationLimit { n: 8, max: 7 }))));
        let mut cfg = ScanConfig::new(Source::enumerate(3));
        cfg.jobs = 0;
        assert!(matches!(run_scan(&cfg), Err(ScanError::InvalidConfig(_))));
    }

    #[test]
    fn isolated_vertices_skipped() {
        let g = complete(3).unwrap().disjoint_union(&Graph::empty(1).unwrap());
        let report = run_scan(&ScanConfig::new(Source::Graphs(vec![g]))).unwrap();
        assert_eq!(report.rows.len(), 3);
        assert!(report.rows.iter().all(|r| r.equality_predicted.is_none()));
        assert!(report.graphs[0].hong.is_none());
        assert!(report.is_clean(), "{:?}", report.violations);
    }

    #[test]
    fn missing_file_reports_path() {
        let cfg = ScanConfig::new(Source::File("/nonexistent/graphs.g6".into()));
        match run_scan(&cfg) {
            Err(ScanError::File { path, .. }) => assert_eq!(path, PathBuf::from("/nonexistent/graphs.g6")),
            other => panic!("{other:?}"),
        }
    }
}
