use super::{check_tol, LinalgError, Result, SymMatrix};

const MAX_ITERATIONS: usize = 200_000;

/// Spectral radius of a nonnegative symmetric matrix by power iteration.
///
/// Iterates on `A + cI` with `c` the largest row sum. The shift makes every
/// eigenvalue nonnegative, so the `±λ` pair of a bipartite graph no longer
/// ties for dominance. Starts from the all-ones vector, which has a positive
/// component along the Perron vector of every component. Stops once the
/// eigen-residual of the unit iterate is below `tol * max(1, λ)`; the Rayleigh
/// quotient error is then of order `residual² / gap`.
pub fn spectral_radius_power(a: &SymMatrix, tol: f64) -> Result<f64> {
    check_tol(tol)?;
    let n = a.dim();
    for i in 0..n {
        for j in i..n {
            let value = a.get(i, j);
            if value < 0.0 {
                return Err(LinalgError::NegativeEntry { row: i, col: j, value });
            }
        }
    }
    let shift = a.max_row_sum();
    if shift == 0.0 {
        return Ok(0.0);
    }
    let shifted = a.shifted(shift);
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut residual = f64::INFINITY;
    for _ in 0..MAX_ITERATIONS {
        let y = shifted.mul_vec(&x)?;
        let rayleigh: f64 = y.iter().zip(&x).map(|(p, q)| p * q).sum();
        residual = y.iter().zip(&x).map(|(p, q)| (p - rayleigh * q).powi(2)).sum::<f64>().sqrt();
        let lambda = rayleigh - shift;
        if residual <= tol * lambda.abs().max(1.0) {
            return Ok(lambda);
        }
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        x = y.into_iter().map(|v| v / norm).collect();
    }
    Err(LinalgError::PowerNoConvergence { iterations: MAX_ITERATIONS, residual })
}
