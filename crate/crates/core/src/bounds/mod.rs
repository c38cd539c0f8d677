//! The vertex-deletion bound `λ(G) <= sqrt(λ(G-v)² + 2d(v) - 1)` and its
//! companions.
//!
//! [`theorem1_report`] evaluates the bound for one `(G, v)` pair.
//! [`proof_certificate`] recomputes every intermediate quantity of the
//! matrix-analytic argument behind it (the Schur complement identity, the
//! positive semidefinite matrix `M`, the neighborhood edge sum `bᵀBb` and the
//! average degree of the closed neighborhood) so each step can be checked
//! numerically. The companion bounds are Hong's `λ <= sqrt(2m - n + 1)`,
//! Nikiforov's Perron-vector bound and the minimum-degree corollary
//! `λ(G) <= λ(G-v) + 1`.

mod certificate;
mod companion;
mod deletion;

pub use certificate::{proof_certificate, Certificate};
pub use companion::{hong_bound, min_degree_corollary, nikiforov_bound, BoundOutcome, CorollaryOutcome, NikiforovOutcome};
pub(crate) use certificate::certificate_with_radii;
pub(crate) use deletion::report_from_radii;
pub use deletion::{equality_characterization, equality_structure_check, theorem1_report, DeletionReport};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::GraphError;
use crate::linalg::{LinalgError, DEFAULT_PSD_TOL, DEFAULT_TOL};

/// Numerical tolerances shared by every check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Eigensolver off-diagonal convergence.
    pub eig: f64,
    /// Slack for positive semidefinite verdicts.
    pub psd: f64,
    /// Slack for inequalities (bound, monotonicity, Schur residual, chain).
    pub num: f64,
    /// `|bound - λ|` below this counts as equality.
    pub eq: f64,
    /// Allowed mismatch between the two sides of the `bᵀMb` identity.
    pub identity: f64,
    /// Matrix certificates are skipped when `λ - μ` is at most this.
    pub degeneracy: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { eig: DEFAULT_TOL, psd: DEFAULT_PSD_TOL, num: 1e-8, eq: 1e-7, identity: 1e-7, degeneracy: 1e-6 }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundError {
    #[error("vertex {0} is isolated; the bound needs d(v) >= 1")]
    IsolatedVertex(usize),
    #[error("the graph has a single vertex; nothing to delete")]
    SingleVertex,
    #[error("the equality characterization requires a connected graph")]
    Disconnected,
    #[error("vertex {vertex} has degree {degree}; the structure check needs a degree-1 vertex")]
    NotLeaf { vertex: usize, degree: usize },
    #[error("the bound is not tight at this pair (gap {gap:e})")]
    EqualityAbsent { gap: f64 },
    #[error("(B²e_u)_{vertex} = {value} but the common-neighbor count is {count}")]
    CommonNeighborMismatch { vertex: usize, value: f64, count: usize },
    #[error("Hong's bound needs minimum degree >= 1 (vertex {0} is isolated)")]
    HongPrecondition(usize),
    #[error("Nikiforov's bound is inapplicable: smallest Perron component squared is {x_sq} >= 1/2")]
    NikiforovInapplicable { x_sq: f64 },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub type Result<T> = std::result::Result<T, BoundError>;
