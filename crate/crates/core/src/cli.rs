//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 a checked inequality or
//! identity failed (which points at a numerical or implementation defect).

use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::bounds::{proof_certificate, theorem1_report, Tolerances};
use crate::graph::{graph6, Family, Graph, GraphError, VertexId};
use crate::harness::{export_csv, export_json, format_float, run_scan, ScanConfig, ScanReport, Source};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;

/// A graph named on the command line: `g6:<line>`, `K<n>`, `S<n>`, `P<n>`,
/// `C<n>`, `ER:<n>,<p>,<seed>` or `file:<path>` (first graph in the file).
#[derive(Debug, Clone, PartialEq)]
pub enum GraphSpec {
    Graph6(String),
    Family(Family),
    File(PathBuf),
}

impl FromStr for GraphSpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, GraphError> {
        if let Some(line) = s.strip_prefix("g6:") {
            graph6::parse(line)?;
            Ok(GraphSpec::Graph6(line.trim().to_string()))
        } else if let Some(path) = s.strip_prefix("file:") {
            Ok(GraphSpec::File(PathBuf::from(path)))
        } else {
            Ok(GraphSpec::Family(s.parse()?))
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Graph6(line) => write!(f, "g6:{line}"),
            GraphSpec::Family(family) => family.fmt(f),
            GraphSpec::File(path) => write!(f, "file:{}", path.display()),
        }
    }
}

impl GraphSpec {
    pub fn resolve(&self) -> Result<Graph, String> {
        match self {
            GraphSpec::Graph6(line) => graph6::parse(line).map_err(|e| e.to_string()),
            GraphSpec::Family(family) => family.build().map_err(|e| e.to_string()),
            GraphSpec::File(path) => {
                let file = std::fs::File::open(path).map_err(|e| format!("{}: {e}", path.display()))?;
                let graphs = graph6::read_all(std::io::BufReader::new(file)).map_err(|e| format!("{}: {e}", path.display()))?;
                graphs.into_iter().next().ok_or_else(|| format!("{}: no graphs in file", path.display()))
            }
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "spectral-deletion", version, about = "Vertex-deletion bounds on the adjacency spectral radius")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct TolArgs {
    /// Slack for inequalities and the Schur residual
    #[arg(long = "tol", env = "SDL_TOL", default_value_t = Tolerances::default().num)]
    pub num: f64,
    /// |bound - lambda| below this counts as equality
    #[arg(long = "eq-tol", default_value_t = Tolerances::default().eq)]
    pub eq: f64,
    /// Eigensolver off-diagonal convergence tolerance
    #[arg(long = "eig-tol", default_value_t = Tolerances::default().eig)]
    pub eig: f64,
    /// Slack for positive semidefinite verdicts
    #[arg(long = "psd-tol", default_value_t = Tolerances::default().psd)]
    pub psd: f64,
    /// Skip matrix certificates when lambda - mu is at most this
    #[arg(long = "degeneracy-tol", default_value_t = Tolerances::default().degeneracy)]
    pub degeneracy: f64,
}

impl TolArgs {
    pub fn tolerances(&self) -> Result<Tolerances, String> {
        let tol = Tolerances { eig: self.eig, psd: self.psd, num: self.num, eq: self.eq, identity: Tolerances::default().identity, degeneracy: self.degeneracy };
        for (name, v) in [("tol", tol.num), ("eq-tol", tol.eq), ("eig-tol", tol.eig), ("psd-tol", tol.psd), ("degeneracy-tol", tol.degeneracy)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(format!("--{name} must be positive and finite, got {v}"));
            }
        }
        Ok(tol)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the deletion bound at one vertex
    Check {
        #[arg(long)]
        graph: GraphSpec,
        #[arg(long)]
        vertex: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        quiet: bool,
        #[command(flatten)]
        tol: TolArgs,
    },
    /// Print the numerical certificate for every step of the bound's proof
    Certify {
        #[arg(long)]
        graph: GraphSpec,
        #[arg(long)]
        vertex: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        quiet: bool,
        #[command(flatten)]
        tol: TolArgs,
    },
    /// Run all checks over a corpus of graphs
    Scan(ScanArgs),
    /// Print the graph6 line of a graph
    Encode {
        graph: GraphSpec,
        #[arg(long)]
        json: bool,
    },
    /// Print the edge list of a graph6 line
    Decode {
        text: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["nmax", "random", "file"]))]
pub struct ScanArgs {
    /// Every connected graph on nmin..=nmax vertices (nmax <= 7)
    #[arg(long)]
    pub nmax: Option<usize>,
    #[arg(long, default_value_t = 2, requires = "nmax")]
    pub nmin: usize,
    /// Random graphs as n,p,trials
    #[arg(long, value_name = "N,P,TRIALS")]
    pub random: Option<String>,
    #[arg(long, default_value_t = 0, requires = "random")]
    pub seed: u64,
    /// graph6 file, one graph per line
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Write per-vertex rows as CSV
    #[arg(long, value_name = "PATH")]
    pub csv: Option<PathBuf>,
    /// Write the full report as JSON (`-` for stdout)
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Comma-separated checks: theorem1, certificates, hong, nikiforov, corollary, equality, all
    #[arg(long, default_value = "all")]
    pub checks: String,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long)]
    pub quiet: bool,
    #[command(flatten)]
    pub tol: TolArgs,
}

impl ScanArgs {
    fn config(&self) -> Result<ScanConfig, String> {
        let source = if let Some(max_n) = self.nmax {
            Source::Enumerate { min_n: self.nmin, max_n }
        } else if let Some(spec) = &self.random {
            let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
            let [n, p, trials] = parts.as_slice() else {
                return Err(format!("--random expects n,p,trials, got {spec:?}"));
            };
            Source::Random {
                n: n.parse().map_err(|_| format!("bad n in --random {spec:?}"))?,
                p: p.parse().map_err(|_| format!("bad p in --random {spec:?}"))?,
                trials: trials.parse().map_err(|_| format!("bad trial count in --random {spec:?}"))?,
                seed: self.seed,
            }
        } else if let Some(path) = &self.file {
            Source::File(path.clone())
        } else {
            return Err("no graph source given".into());
        };
        Ok(ScanConfig {
            source,
            tol: self.tol.tolerances()?,
            checks: self.checks.parse().map_err(|e: crate::harness::ScanError| e.to_string())?,
            jobs: self.jobs,
        })
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{rendered}") } else { write!(out, "{rendered}") };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

fn io(e: std::io::Error) -> String {
    e.to_string()
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, String> {
    match command {
        Command::Check { graph, vertex, json, quiet, tol } => cmd_check(&graph, vertex, json, quiet, &tol.tolerances()?, out),
        Command::Certify { graph, vertex, json, quiet, tol } => cmd_certify(&graph, vertex, json, quiet, &tol.tolerances()?, out),
        Command::Scan(args) => cmd_scan(&args, out),
        Command::Encode { graph, json } => {
            let g = graph.resolve()?;
            let line = g.to_graph6().map_err(|e| e.to_string())?;
            if json {
                writeln!(out, "{}", json!({ "graph6": line })).map_err(io)?;
            } else {
                writeln!(out, "{line}").map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Decode { text, json } => {
            let g = graph6::parse(&text).map_err(|e| format!("invalid graph6 {text:?}: {e}"))?;
            if json {
                writeln!(out, "{}", json!({ "n": g.n(), "edges": g.edges() })).map_err(io)?;
            } else {
                writeln!(out, "n {}", g.n()).map_err(io)?;
                for (i, j) in g.edges() {
                    writeln!(out, "{i} {j}").map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn describe(spec: &GraphSpec, g: &Graph) -> String {
    match g.to_graph6() {
        Ok(line) => format!("{spec} (graph6 {line})"),
        Err(_) => spec.to_string(),
    }
}

pub fn cmd_check(spec: &GraphSpec, vertex: usize, json: bool, quiet: bool, tol: &Tolerances, out: &mut dyn Write) -> Result<i32, String> {
    let g = spec.resolve()?;
    let report = theorem1_report(&g, VertexId(vertex), tol).map_err(|e| e.to_string())?;
    let violations = report.violations(tol);
    if json && !quiet {
        let doc = json!({ "graph": spec.to_string(), "graph6": g.to_graph6().ok(), "report": report, "violations": violations });
        writeln!(out, "{doc}").map_err(io)?;
    } else if !quiet {
        let rows = [
            ("graph", describe(spec, &g)),
            ("vertex", format!("{vertex} (degree {})", report.degree)),
            ("lambda", format_float(report.lambda)),
            ("mu", format_float(report.mu)),
            ("bound", format_float(report.bound)),
            ("gap", format_float(report.gap)),
            ("squared_gap", format_float(report.squared_gap)),
            ("equality", report.equality.to_string()),
        ];
        for (k, v) in rows {
            writeln!(out, "{k:<12} {v}").map_err(io)?;
        }
        for v in &violations {
            writeln!(out, "VIOLATION    {v}").map_err(io)?;
        }
    }
    Ok(if violations.is_empty() { EXIT_OK } else { EXIT_VIOLATION })
}

pub fn cmd_certify(spec: &GraphSpec, vertex: usize, json: bool, quiet: bool, tol: &Tolerances, out: &mut dyn Write) -> Result<i32, String> {
    let g = spec.resolve()?;
    let cert = proof_certificate(&g, VertexId(vertex), tol).map_err(|e| e.to_string())?;
    let failures = cert.failures(tol);
    if json && !quiet {
        let doc = json!({ "graph": spec.to_string(), "graph6": g.to_graph6().ok(), "certificate": cert, "failures": failures });
        writeln!(out, "{doc}").map_err(io)?;
    } else if !quiet {
        let opt = |x: Option<f64>| x.map(format_float).unwrap_or_else(|| "-".into());
        let mut rows = vec![
            ("graph", describe(spec, &g)),
            ("vertex", format!("{vertex} (degree {})", cert.degree)),
            ("lambda", format_float(cert.lambda)),
            ("mu", format_float(cert.mu)),
        ];
        if cert.degenerate {
            rows.push((
                "skipped",
                format!(
                    "Schur identity and M: lambda - mu = {} <= {} so lambda I - B is not safely invertible",
                    format_float(cert.lambda - cert.mu),
                    format_float(tol.degeneracy)
                ),
            ));
        } else {
            rows.extend([
                ("schur_value", opt(cert.schur_value)),
                ("schur_resid", opt(cert.schur_residual)),
                ("m_min_eig", opt(cert.m_min_eig)),
                ("btMb", opt(cert.btmb)),
                ("eq1_lhs", opt(cert.eq1_lhs)),
            ]);
        }
        rows.extend([
            ("bTBb", cert.nbhd_edge_sum.to_string()),
            ("lambda_F", format_float(cert.lambda_f)),
            ("avg_deg_F", format_float(cert.avg_deg_f)),
            ("eq2_value", opt(cert.eq2_value)),
            ("m<=lam(d-1)", cert.m_leq_lambda_dm1.to_string()),
        ]);
        if cert.degree == 1 {
            rows.push(("branch", "d(v) = 1: b^T B b = 0 and lambda^2 - mu^2 <= 1 follows directly".into()));
        }
        for (k, v) in rows {
            writeln!(out, "{k:<12} {v}").map_err(io)?;
        }
        for f in &failures {
            writeln!(out, "FAILED       {f}").map_err(io)?;
        }
    }
    Ok(if failures.is_empty() { EXIT_OK } else { EXIT_VIOLATION })
}

fn summarize(report: &ScanReport, out: &mut dyn Write) -> std::io::Result<()> {
    let a = &report.aggregates;
    writeln!(out, "graphs           {}", a.graphs)?;
    writeln!(out, "rows             {}", a.rows)?;
    writeln!(out, "equality rows    {}", a.equality_rows)?;
    writeln!(out, "min gap          {}", a.min_gap.map(format_float).unwrap_or_else(|| "-".into()))?;
    writeln!(out, "min squared gap  {}", a.min_squared_gap.map(format_float).unwrap_or_else(|| "-".into()))?;
    writeln!(out, "eq. mismatches   {}", a.equality_mismatches)?;
    writeln!(out, "violations       {}", a.violation_count)?;
    for v in report.violations.iter().take(20) {
        let at = v.vertex.map(|x| format!(" vertex {x}")).unwrap_or_default();
        writeln!(out, "  {:?} {}{at}: {}", v.check, v.graph6, v.detail)?;
    }
    Ok(())
}

pub fn cmd_scan(args: &ScanArgs, out: &mut dyn Write) -> Result<i32, String> {
    let config = args.config()?;
    let report = run_scan(&config).map_err(|e| e.to_string())?;
    if let Some(path) = &args.csv {
        export_csv(&report, path).map_err(|e| e.to_string())?;
    }
    let json_to_stdout = args.json.as_deref().is_some_and(|p| p == std::path::Path::new("-"));
    if let Some(path) = args.json.as_ref().filter(|_| !json_to_stdout) {
        export_json(&report, path).map_err(|e| e.to_string())?;
    }
    if !args.quiet {
        if json_to_stdout {
            serde_json::to_writer(&mut *out, &report).map_err(|e| e.to_string())?;
            writeln!(out).map_err(io)?;
        } else {
            summarize(&report, out).map_err(io)?;
        }
    }
    Ok(if report.is_clean() { EXIT_OK } else { EXIT_VIOLATION })
}
