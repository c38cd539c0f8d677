use serde::{Deserialize, Serialize};

use super::{BoundError, Result, Tolerances};
use crate::graph::{Graph, VertexId};
use crate::linalg::{jacobi_eigen, spectral_radius};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundOutcome {
    pub lambda: f64,
    pub bound: f64,
    /// `λ <= bound + num`.
    pub holds: bool,
    /// `|bound - λ| < eq`.
    pub tight: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NikiforovOutcome {
    /// Vertex carrying the smallest Perron component.
    pub vertex: VertexId,
    /// That component of the unit Perron vector.
    pub x_min: f64,
    pub lambda: f64,
    pub mu: f64,
    pub bound: f64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorollaryOutcome {
    pub vertex: VertexId,
    pub degree: usize,
    pub lambda: f64,
    pub mu: f64,
    /// `2m / n`.
    pub average_degree: f64,
    /// `d(v) <= 2m/n <= λ`, within `num`.
    pub premise_holds: bool,
    /// `λ <= μ + 1 + num`.
    pub holds: bool,
}

/// Hong's inequality `λ(G) <= sqrt(2m - n + 1)` for graphs without isolated
/// vertices.
pub fn hong_bound(g: &Graph, tol: &Tolerances) -> Result<BoundOutcome> {
    if g.min_degree() == 0 {
        return Err(BoundError::HongPrecondition(g.min_degree_vertex().0));
    }
    let lambda = spectral_radius(&g.adjacency_matrix(), tol.eig)?;
    let bound = ((2 * g.edge_count() + 1 - g.n()) as f64).sqrt();
    Ok(BoundOutcome { lambda, bound, holds: lambda <= bound + tol.num, tight: (bound - lambda).abs() < tol.eq })
}

/// Nikiforov's bound `λ(G) <= λ(G - v_k)(1 - x_k²)/(1 - 2x_k²)` where `x_k`
/// is the smallest component of the unit Perron vector of connected `G`.
///
/// Components within `1e-12` of the minimum tie, and ties go to the lowest
/// index. Fails with [`BoundError::NikiforovInapplicable`] when
/// `x_k² >= 1/2 - num`, where the denominator is not safely positive.
pub fn nikiforov_bound(g: &Graph, tol: &Tolerances) -> Result<NikiforovOutcome> {
    if !g.is_connected() {
        return Err(BoundError::Disconnected);
    }
    let spectrum = jacobi_eigen(&g.adjacency_matrix(), tol.eig)?;
    let lambda = spectrum.max();
    let mut perron = spectrum.eigenvectors[0].clone();
    if perron.iter().sum::<f64>() < 0.0 {
        perron.iter_mut().for_each(|x| *x = -*x);
    }
    let smallest = perron.iter().copied().fold(f64::INFINITY, f64::min);
    let k = perron.iter().position(|&x| x <= smallest + 1e-12).expect("non-empty");
    let x = perron[k];
    let x_sq = x * x;
    if x_sq >= 0.5 - tol.num {
        return Err(BoundError::NikiforovInapplicable { x_sq });
    }
    let vertex = VertexId(k);
    let mu = spectral_radius(&g.delete_vertex(vertex)?.adjacency_matrix(), tol.eig)?;
    let bound = mu * (1.0 - x_sq) / (1.0 - 2.0 * x_sq);
    Ok(NikiforovOutcome { vertex, x_min: x, lambda, mu, bound, holds: lambda <= bound + tol.num })
}

/// `λ(G) <= λ(G - v) + 1` for `v` of minimum degree (lowest index on ties).
///
/// A minimum-degree vertex satisfies `d(v) <= 2m/n`, and `2m/n <= λ`; both
/// steps are checked and reported in `premise_holds`. An isolated `v` is
/// allowed: then `λ(G) = λ(G - v)`.
pub fn min_degree_corollary(g: &Graph, tol: &Tolerances) -> Result<CorollaryOutcome> {
    if g.n() < 2 {
        return Err(BoundError::SingleVertex);
    }
    let vertex = g.min_degree_vertex();
    let degree = g.degree(vertex)?;
    let lambda = spectral_radius(&g.adjacency_matrix(), tol.eig)?;
    let mu = spectral_radius(&g.delete_vertex(vertex)?.adjacency_matrix(), tol.eig)?;
    let average_degree = 2.0 * g.edge_count() as f64 / g.n() as f64;
    Ok(CorollaryOutcome {
        vertex,
        degree,
        lambda,
        mu,
        average_degree,
        premise_holds: degree as f64 <= average_degree + tol.num && average_degree <= lambda + tol.num,
        holds: lambda <= mu + 1.0 + tol.num,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, star};

    #[test]
    fn hong_precondition() {
        let g = complete(3).unwrap().disjoint_union(&Graph::empty(1).unwrap());
        assert_eq!(hong_bound(&g, &Tolerances::default()), Err(BoundError::HongPrecondition(3)));
    }

    #[test]
    fn hong_tight_on_complete() {
        let o = hong_bound(&complete(4).unwrap(), &Tolerances::default()).unwrap();
        assert!(o.holds && o.tight);
        assert!((o.bound - 3.0).abs() < 1e-15);
    }

    #[test]
    fn nikiforov_edge_inapplicable() {
        assert!(matches!(
            nikiforov_bound(&complete(2).unwrap(), &Tolerances::default()),
            Err(BoundError::NikiforovInapplicable { .. })
        ));
        assert!(matches!(
            nikiforov_bound(&Graph::empty(1).unwrap(), &Tolerances::default()),
            Err(BoundError::NikiforovInapplicable { .. })
        ));
        let g = complete(2).unwrap().disjoint_union(&complete(2).unwrap());
        assert_eq!(nikiforov_bound(&g, &Tolerances::default()), Err(BoundError::Disconnected));
    }

    #[test]
    fn nikiforov_ties_lowest_index() {
        let o = nikiforov_bound(&cycle(4).unwrap(), &Tolerances::default()).unwrap();
        assert_eq!(o.vertex, VertexId(0));
        let o = nikiforov_bound(&star(4).unwrap(), &Tolerances::default()).unwrap();
        assert_eq!(o.vertex, VertexId(1));
    }

    #[test]
    fn corollary_single_vertex() {
        assert_eq!(min_degree_corollary(&Graph::empty(1).unwrap(), &Tolerances::default()), Err(BoundError::SingleVertex));
        let o = min_degree_corollary(&Graph::empty(3).unwrap(), &Tolerances::default()).unwrap();
        assert!(o.holds && o.premise_holds);
    }
}
