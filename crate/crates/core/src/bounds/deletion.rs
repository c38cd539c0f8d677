use serde::{Deserialize, Serialize};

use super::{BoundError, Result, Tolerances};
use crate::graph::{Graph, VertexId};
use crate::linalg::spectral_radius;

/// The deletion bound evaluated at one `(G, v)` pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeletionReport {
    pub vertex: VertexId,
    /// `λ(G)`.
    pub lambda: f64,
    /// `λ(G - v)`.
    pub mu: f64,
    pub degree: usize,
    /// `sqrt(μ² + 2d(v) - 1)`.
    pub bound: f64,
    /// `bound - λ`.
    pub gap: f64,
    /// `2d(v) - 1 - (λ² - μ²)`.
    pub squared_gap: f64,
    /// `|gap| < eq`.
    pub equality: bool,
}

impl DeletionReport {
    /// Ways in which this report contradicts interlacing or the bound itself.
    pub fn violations(&self, tol: &Tolerances) -> Vec<String> {
        let mut out = Vec::new();
        if self.mu > self.lambda + tol.num {
            out.push(format!("deleting a vertex raised the spectral radius: mu = {} > lambda = {}", self.mu, self.lambda));
        }
        if self.gap < -tol.num {
            out.push(format!("bound violated: lambda = {} > bound = {} (gap {:e})", self.lambda, self.bound, self.gap));
        }
        if self.squared_gap < -tol.num {
            out.push(format!("squared bound violated: lambda^2 - mu^2 exceeds 2d - 1 by {:e}", -self.squared_gap));
        }
        out
    }
}

pub(crate) fn require_deletable(g: &Graph, v: VertexId) -> Result<usize> {
    if g.n() < 2 {
        g.degree(v)?;
        return Err(BoundError::SingleVertex);
    }
    let d = g.degree(v)?;
    if d == 0 {
        return Err(BoundError::IsolatedVertex(v.0));
    }
    Ok(d)
}

/// Evaluates `λ(G) <= sqrt(λ(G-v)² + 2d(v) - 1)` for a non-isolated `v`.
pub fn theorem1_report(g: &Graph, v: VertexId, tol: &Tolerances) -> Result<DeletionReport> {
    let degree = require_deletable(g, v)?;
    let lambda = spectral_radius(&g.adjacency_matrix(), tol.eig)?;
    let mu = spectral_radius(&g.delete_vertex(v)?.adjacency_matrix(), tol.eig)?;
    Ok(report_from_radii(v, degree, lambda, mu, tol))
}

/// Assembles the report from already computed `λ(G)` and `λ(G - v)`.
pub(crate) fn report_from_radii(v: VertexId, degree: usize, lambda: f64, mu: f64, tol: &Tolerances) -> DeletionReport {
    let d = degree as f64;
    let bound = (mu * mu + 2.0 * d - 1.0).sqrt();
    let gap = bound - lambda;
    DeletionReport {
        vertex: v,
        lambda,
        mu,
        degree,
        bound,
        gap,
        squared_gap: 2.0 * d - 1.0 - (lambda * lambda - mu * mu),
        equality: gap.abs() < tol.eq,
    }
}

/// Predicted equality for connected `G`: `G` is complete, or `G` is a star
/// and `v` one of its leaves.
pub fn equality_characterization(g: &Graph, v: VertexId) -> Result<bool> {
    let degree = g.degree(v)?;
    if !g.is_connected() {
        return Err(BoundError::Disconnected);
    }
    if degree == 0 {
        return Err(BoundError::IsolatedVertex(v.0));
    }
    Ok(g.is_complete() || (g.is_star() && degree == 1))
}

/// For a tight pair with `d(v) = 1` and unique neighbor `u`, returns
/// `|B²e_u - μ²e_u|_inf` where `B = A(G - v)`.
///
/// Also checks that `(B²e_u)_w` equals the number of common neighbors of
/// `w` and `u` in `G - v` for every `w`.
pub fn equality_structure_check(g: &Graph, v: VertexId, tol: &Tolerances) -> Result<f64> {
    let degree = require_deletable(g, v)?;
    if degree != 1 {
        return Err(BoundError::NotLeaf { vertex: v.0, degree });
    }
    let report = theorem1_report(g, v, tol)?;
    if !report.equality {
        return Err(BoundError::EqualityAbsent { gap: report.gap });
    }
    let u = g.neighborhood(v)?[0].0;
    let u = if u > v.0 { u - 1 } else { u };
    let h = g.delete_vertex(v)?;
    let b = h.adjacency_matrix();
    let mut e_u = vec![0.0; h.n()];
    e_u[u] = 1.0;
    let b2e = b.mul_vec(&b.mul_vec(&e_u)?)?;
    let mu_sq = report.mu * report.mu;

    for (w, &value) in b2e.iter().enumerate() {
        let count = (0..h.n()).filter(|&x| h.has_edge(w, x) && h.has_edge(u, x)).count();
        if (value - count as f64).abs() > 1e-9 {
            return Err(BoundError::CommonNeighborMismatch { vertex: w, value, count });
        }
    }
    Ok(b2e
        .iter()
        .zip(&e_u)
        .fold(0.0_f64, |acc, (lhs, e)| acc.max((lhs - mu_sq * e).abs())))
}
