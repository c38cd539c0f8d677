//! Dense real symmetric linear algebra.
//!
//! Everything here works on [`SymMatrix`], a packed symmetric matrix that
//! stores one value per unordered index pair. The eigensolver is a cyclic
//! Jacobi iteration which returns the full orthonormal eigenbasis; the
//! spectral radius, minimum eigenvalue and positive semidefinite test are
//! all read off that decomposition. Linear systems with a positive definite
//! matrix go through a Cholesky factorization.

mod jacobi;
mod power;
mod solve;
mod sym;

pub use jacobi::{jacobi_eigen, jacobi_eigenvalues, Spectrum, MAX_SWEEPS};
pub use power::spectral_radius_power;
pub use solve::{solve_gaussian, solve_spd, solve_spd_many};
pub use sym::SymMatrix;

use thiserror::Error;

/// Off-diagonal convergence tolerance for the eigensolver.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Slack for the positive semidefinite verdict `min eigenvalue >= -psd_tol`.
pub const DEFAULT_PSD_TOL: f64 = 1e-8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LinalgError {
    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },
    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e})")]
    PowerNoConvergence { iterations: usize, residual: f64 },
    #[error("matrix is not positive definite (pivot {pivot:e} at row {row})")]
    NotPositiveDefinite { row: usize, pivot: f64 },
    #[error("linear solve residual {residual:e} exceeds the accepted bound {bound:e}")]
    InaccurateSolve { residual: f64, bound: f64 },
    #[error("singular matrix at column {column}")]
    Singular { column: usize },
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("matrix dimension must be at least 1")]
    Empty,
    #[error("tolerance must be positive and finite, got {0}")]
    BadTolerance(f64),
    #[error("power iteration needs a nonnegative matrix (entry ({row}, {col}) is {value})")]
    NegativeEntry { row: usize, col: usize, value: f64 },
}

pub type Result<T> = std::result::Result<T, LinalgError>;

/// Largest eigenvalue magnitude of `a`, read from the Jacobi eigenvalues.
///
/// For an adjacency matrix this is the Perron root, i.e. the largest
/// eigenvalue.
pub fn spectral_radius(a: &SymMatrix, tol: f64) -> Result<f64> {
    let values = jacobi_eigenvalues(a, tol)?;
    Ok(values[0].abs().max(values[values.len() - 1].abs()))
}

/// Smallest eigenvalue of `a`.
pub fn min_eigenvalue(a: &SymMatrix, tol: f64) -> Result<f64> {
    let values = jacobi_eigenvalues(a, tol)?;
    Ok(values[values.len() - 1])
}

/// `min_eigenvalue(a) >= -psd_tol`.
pub fn is_psd(a: &SymMatrix, tol: f64, psd_tol: f64) -> Result<bool> {
    Ok(min_eigenvalue(a, tol)? >= -psd_tol)
}

/// `xᵀAx`.
pub fn quadratic_form(a: &SymMatrix, x: &[f64]) -> Result<f64> {
    let ax = a.mul_vec(x)?;
    Ok(ax.iter().zip(x).map(|(l, r)| l * r).sum())
}

pub(crate) fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(LinalgError::BadTolerance(tol))
    }
}

pub(crate) fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0_f64, |acc, x| acc.max(x.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn adjacency(n: usize, edges: &[(usize, usize)]) -> SymMatrix {
        let mut m = SymMatrix::zeros(n).unwrap();
        for &(i, j) in edges {
            m.set(i, j, 1.0);
        }
        m
    }

    #[test]
    fn complete_graph_radius() {
        let k4 = adjacency(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!((spectral_radius(&k4, DEFAULT_TOL).unwrap() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn star_radius() {
        // λ² = n − 1 for K_{1,n−1}
        let s = adjacency(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!((spectral_radius(&s, DEFAULT_TOL).unwrap() - 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn disconnected_radius_is_max_over_components() {
        let g = adjacency(5, &[(0, 1), (0, 2), (1, 2), (3, 4)]);
        assert!((spectral_radius(&g, DEFAULT_TOL).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn quadratic_forms() {
        let k2 = adjacency(2, &[(0, 1)]);
        assert_eq!(quadratic_form(&k2, &[1.0, 1.0]).unwrap(), 2.0);
        let zero = SymMatrix::zeros(3).unwrap();
        assert_eq!(quadratic_form(&zero, &[3.0, -1.0, 7.0]).unwrap(), 0.0);
        let p3 = adjacency(3, &[(0, 1), (1, 2)]);
        assert_eq!(quadratic_form(&p3, &[1.0, 1.0, 1.0]).unwrap(), 4.0);
        assert_eq!(
            quadratic_form(&p3, &[1.0, 1.0]),
            Err(LinalgError::DimensionMismatch { expected: 3, actual: 2 })
        );
    }

    #[test]
    fn min_eigenvalues() {
        assert!((min_eigenvalue(&SymMatrix::identity(4).unwrap(), DEFAULT_TOL).unwrap() - 1.0).abs() < 1e-14);
        let k2 = adjacency(2, &[(0, 1)]);
        assert!((min_eigenvalue(&k2, DEFAULT_TOL).unwrap() + 1.0).abs() < 1e-14);
        assert_eq!(min_eigenvalue(&SymMatrix::zeros(3).unwrap(), DEFAULT_TOL).unwrap(), 0.0);
        assert!(!is_psd(&k2, DEFAULT_TOL, DEFAULT_PSD_TOL).unwrap());
    }

    #[test]
    fn rejects_bad_tolerance() {
        let i = SymMatrix::identity(2).unwrap();
        assert_eq!(spectral_radius(&i, 0.0), Err(LinalgError::BadTolerance(0.0)));
        assert!(matches!(spectral_radius(&i, f64::NAN), Err(LinalgError::BadTolerance(_))));
    }
}
