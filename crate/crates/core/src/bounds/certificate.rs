use serde::{Deserialize, Serialize};

use super::deletion::require_deletable;
use super::{Result, Tolerances};
use crate::graph::{Graph, VertexId};
use crate::linalg::{min_eigenvalue, quadratic_form, solve_spd_many, spectral_radius, SymMatrix};

/// Numerical evidence for each step of the deletion-bound argument at one
/// `(G, v)` pair.
///
/// Notation: `A(G) = [[0, bᵀ], [b, B]]` with `B = A(G - v)` and `b` the
/// neighbor indicator of `v`; `F = G[{v} ∪ N(v)]`.
/// `M = (λI + B)/(λ² - μ²) - (λI - B)⁻¹`. The matrix fields are `None`
/// when `λ - μ` is within the degeneracy threshold, since `(λI - B)⁻¹`
/// does not exist there.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub vertex: VertexId,
    pub degree: usize,
    pub lambda: f64,
    pub mu: f64,
    pub degenerate: bool,
    /// `bᵀ(λI - B)⁻¹b`, which should equal `λ`.
    pub schur_value: Option<f64>,
    /// `|λ - bᵀ(λI - B)⁻¹b|`.
    pub schur_residual: Option<f64>,
    /// Smallest eigenvalue of `M`.
    pub m_min_eig: Option<f64>,
    /// `bᵀMb` as a quadratic form.
    pub btmb: Option<f64>,
    /// `(λ d(v) + bᵀBb)/(λ² - μ²) - λ` as a scalar formula.
    pub eq1_lhs: Option<f64>,
    /// `2 e(G[N(v)])` by direct edge counting.
    pub nbhd_edge_sum: usize,
    /// `bᵀBb` as a quadratic form.
    pub nbhd_quadratic_form: f64,
    pub f_order: usize,
    pub f_edge_count: usize,
    /// `λ(F)`.
    pub lambda_f: f64,
    /// `2 e(F) / |V(F)|`.
    pub avg_deg_f: f64,
    /// `2(d(d-1) - bᵀBb)/(d² - 1)`, only for `d(v) >= 2`.
    pub eq2_value: Option<f64>,
    /// `bᵀBb <= λ(d(v) - 1) + num`.
    pub m_leq_lambda_dm1: bool,
}

impl Certificate {
    /// Steps of the argument that the numbers fail to confirm.
    pub fn failures(&self, tol: &Tolerances) -> Vec<String> {
        let mut out = Vec::new();
        let d = self.degree;
        let m = self.nbhd_edge_sum;
        if (self.nbhd_quadratic_form - m as f64).abs() > 1e-9 {
            out.push(format!("b^T B b = {} differs from 2e(G[N(v)]) = {m}", self.nbhd_quadratic_form));
        }
        if m % 2 != 0 {
            out.push(format!("neighborhood edge sum {m} is odd"));
        }
        if m > d * (d - 1) {
            out.push(format!("neighborhood edge sum {m} exceeds d(d-1) = {}", d * (d - 1)));
        }
        if !self.m_leq_lambda_dm1 {
            out.push(format!("b^T B b = {m} exceeds lambda (d - 1) = {}", self.lambda * (d as f64 - 1.0)));
        }
        if self.f_order != d + 1 || self.f_edge_count * 2 != 2 * d + m {
            out.push(format!(
                "closed neighborhood has {} vertices and {} edges, expected {} and {}",
                self.f_order,
                self.f_edge_count,
                d + 1,
                (2 * d + m) / 2
            ));
        }
        if d >= 2 {
            let lower = m as f64 / (d as f64 - 1.0);
            if self.lambda + tol.num < self.lambda_f || self.lambda_f + tol.num < self.avg_deg_f || self.avg_deg_f + tol.num < lower {
                out.push(format!(
                    "chain lambda >= lambda(F) >= avg deg(F) >= m/(d-1) broken: {} , {}, {}, {}",
                    self.lambda, self.lambda_f, self.avg_deg_f, lower
                ));
            }
            if let Some(eq2) = self.eq2_value {
                if eq2 < -1e-12 {
                    out.push(format!("average-degree difference {eq2} is negative"));
                }
                if (eq2 - (self.avg_deg_f - lower)).abs() > 1e-9 {
                    out.push(format!("closed form {eq2} differs from avg deg(F) - m/(d-1) = {}", self.avg_deg_f - lower));
                }
            }
        }
        if let Some(r) = self.schur_residual {
            if r >= tol.num {
                out.push(format!("Schur complement residual {r:e} too large"));
            }
        }
        if let Some(e) = self.m_min_eig {
            if e < -tol.psd {
                out.push(format!("M is not positive semidefinite (min eigenvalue {e:e})"));
            }
        }
        if let (Some(lhs), Some(q)) = (self.eq1_lhs, self.btmb) {
            if (lhs - q).abs() >= tol.identity {
                out.push(format!("scalar form {lhs} and quadratic form b^T M b = {q} disagree"));
            }
        }
        out
    }
}

/// Builds the [`Certificate`] for `(G, v)`, `d(v) >= 1`.
pub fn proof_certificate(g: &Graph, v: VertexId, tol: &Tolerances) -> Result<Certificate> {
    require_deletable(g, v)?;
    let lambda = spectral_radius(&g.adjacency_matrix(), tol.eig)?;
    let mu = spectral_radius(&g.delete_vertex(v)?.adjacency_matrix(), tol.eig)?;
    certificate_with_radii(g, v, lambda, mu, tol)
}

/// [`proof_certificate`] with `λ(G)` and `λ(G - v)` supplied by the caller.
pub(crate) fn certificate_with_radii(g: &Graph, v: VertexId, lambda: f64, mu: f64, tol: &Tolerances) -> Result<Certificate> {
    let degree = require_deletable(g, v)?;
    let d = degree as f64;
    let h = g.delete_vertex(v)?;
    let b_mat = h.adjacency_matrix();
    let b = g.neighbor_indicator(v)?;

    let nbhd_edge_sum = 2 * g.neighborhood_edge_count(v)?;
    let nbhd_quadratic_form = quadratic_form(&b_mat, &b)?;
    let m = nbhd_edge_sum as f64;

    let f = g.closed_neighborhood_subgraph(v)?;
    let f_order = f.n();
    let f_edge_count = f.edge_count();
    let lambda_f = spectral_radius(&f.adjacency_matrix(), tol.eig)?;
    let avg_deg_f = 2.0 * f_edge_count as f64 / f_order as f64;
    let eq2_value = (degree >= 2).then(|| 2.0 * (d * (d - 1.0) - m) / (d * d - 1.0));
    let m_leq_lambda_dm1 = m <= lambda * (d - 1.0) + tol.num;

    let degenerate = lambda - mu <= tol.degeneracy;
    let mut cert = Certificate {
        vertex: v,
        degree,
        lambda,
        mu,
        degenerate,
        schur_value: None,
        schur_residual: None,
        m_min_eig: None,
        btmb: None,
        eq1_lhs: None,
        nbhd_edge_sum,
        nbhd_quadratic_form,
        f_order,
        f_edge_count,
        lambda_f,
        avg_deg_f,
        eq2_value,
        m_leq_lambda_dm1,
    };
    if degenerate {
        return Ok(cert);
    }

    let k = h.n();
    let identity = SymMatrix::identity(k)?;
    let resolvent_base = b_mat.combine(-1.0, &identity, lambda)?;
    let mut rhs: Vec<Vec<f64>> = identity.to_rows();
    rhs.push(b.clone());
    let mut columns = solve_spd_many(&resolvent_base, &rhs)?;
    let x = columns.pop().expect("b was pushed last");
    let schur_value: f64 = b.iter().zip(&x).map(|(p, q)| p * q).sum();

    // columns[j][i] = (λI - B)⁻¹_{ij}; symmetric up to rounding
    let inverse = SymMatrix::from_rows_symmetrized(&columns)?;
    let denom = lambda * lambda - mu * mu;
    let plus = b_mat.combine(1.0 / denom, &identity, lambda / denom)?;
    let m_matrix = plus.combine(1.0, &inverse, -1.0)?;

    cert.schur_value = Some(schur_value);
    cert.schur_residual = Some((lambda - schur_value).abs());
    cert.m_min_eig = Some(min_eigenvalue(&m_matrix, tol.eig)?);
    cert.btmb = Some(quadratic_form(&m_matrix, &b)?);
    cert.eq1_lhs = Some((lambda * d + m) / denom - lambda);
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, star};

    #[test]
    fn triangle_has_zero_m() {
        let c = proof_certificate(&complete(3).unwrap(), VertexId(0), &Tolerances::default()).unwrap();
        assert!(!c.degenerate);
        assert!((c.schur_value.unwrap() - 2.0).abs() < 1e-12);
        assert!(c.schur_residual.unwrap() < 1e-12);
        assert!(c.m_min_eig.unwrap().abs() < 1e-12);
        assert!(c.btmb.unwrap().abs() < 1e-12);
        assert_eq!(c.nbhd_edge_sum, 2);
        assert!((c.avg_deg_f - 2.0).abs() < 1e-15);
        assert!(c.eq2_value.unwrap().abs() < 1e-15);
        assert!(c.failures(&Tolerances::default()).is_empty());
    }

    #[test]
    fn disconnected_pair_is_degenerate() {
        // v sits in the smaller component, so λ(G - v) = λ(G)
        let g = complete(4).unwrap().disjoint_union(&complete(2).unwrap());
        let c = proof_certificate(&g, VertexId(4), &Tolerances::default()).unwrap();
        assert!(c.degenerate);
        assert!(c.schur_residual.is_none() && c.m_min_eig.is_none() && c.btmb.is_none() && c.eq1_lhs.is_none());
        assert!(c.failures(&Tolerances::default()).is_empty());
    }

    #[test]
    fn leaf_branch() {
        let c = proof_certificate(&star(4).unwrap(), VertexId(1), &Tolerances::default()).unwrap();
        assert_eq!(c.nbhd_edge_sum, 0);
        assert!(c.m_leq_lambda_dm1);
        assert!(c.eq2_value.is_none());
        assert!(c.schur_residual.unwrap() < 1e-9);
    }
}
