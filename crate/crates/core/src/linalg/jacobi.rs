use serde::{Deserialize, Serialize};

use super::{check_tol, LinalgError, Result, SymMatrix};

/// Sweep cap for [`jacobi_eigen`].
pub const MAX_SWEEPS: usize = 100;

/// Full eigendecomposition `A = U diag(t) Uᵀ` of a symmetric matrix.
///
/// Eigenvalues are sorted in nonincreasing order and `eigenvectors[i]` is the
/// unit eigenvector for `eigenvalues[i]`. `tol_used` is the accuracy actually
/// achieved, never smaller than the requested tolerance: every pair satisfies
/// `|A q_i - t_i q_i|_inf <= tol_used * max(1, |t_i|)` and `UᵀU` differs from
/// the identity by at most `tol_used` entrywise.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Vec<Vec<f64>>,
    pub tol_used: f64,
}

impl Spectrum {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn max(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues[self.eigenvalues.len() - 1]
    }

    pub fn spectral_radius(&self) -> f64 {
        self.max().abs().max(self.min().abs())
    }

    /// `U diag(t) Uᵀ`.
    pub fn reconstruct(&self) -> SymMatrix {
        let n = self.dim();
        SymMatrix::from_fn(n, |i, j| {
            self.eigenvalues
                .iter()
                .zip(&self.eigenvectors)
                .map(|(t, q)| t * q[i] * q[j])
                .sum()
        })
        .expect("spectrum is never empty")
    }

    /// Largest entrywise deviation of `UᵀU` from the identity.
    pub fn orthonormality_defect(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0_f64;
        for a in 0..n {
            for b in a..n {
                let dot: f64 = self.eigenvectors[a].iter().zip(&self.eigenvectors[b]).map(|(x, y)| x * y).sum();
                let target = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }

    /// `max_i |A q_i - t_i q_i|_inf / max(1, |t_i|)`.
    pub fn relative_residual(&self, a: &SymMatrix) -> f64 {
        self.eigenvalues
            .iter()
            .zip(&self.eigenvectors)
            .map(|(&t, q)| {
                let aq = a.mul_vec(q).expect("dimensions agree");
                let r = aq.iter().zip(q).fold(0.0_f64, |acc, (x, y)| acc.max((x - t * y).abs()));
                r / t.abs().max(1.0)
            })
            .fold(0.0, f64::max)
    }
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for &x in &a[p * n + p + 1..(p + 1) * n] {
            sum += 2.0 * x * x;
        }
    }
    sum.sqrt()
}

/// Cyclic Jacobi eigendecomposition.
///
/// Sweeps over all `(p, q)` pairs in row order, annihilating each
/// off-diagonal entry with a plane rotation, until the off-diagonal
/// Frobenius norm drops to `tol * ‖A‖_F`. Gives up after [`MAX_SWEEPS`].
pub fn jacobi_eigen(matrix: &SymMatrix, tol: f64) -> Result<Spectrum> {
    jacobi_with_cap(matrix, tol, MAX_SWEEPS)
}

/// Eigenvalues only, in nonincreasing order. Same iteration as
/// [`jacobi_eigen`] without accumulating the rotations.
pub fn jacobi_eigenvalues(matrix: &SymMatrix, tol: f64) -> Result<Vec<f64>> {
    let n = matrix.dim();
    let a = diagonalize(matrix, tol, MAX_SWEEPS, None)?;
    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(values)
}

fn jacobi_with_cap(matrix: &SymMatrix, tol: f64, max_sweeps: usize) -> Result<Spectrum> {
    let n = matrix.dim();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let a = diagonalize(matrix, tol, max_sweeps, Some(&mut v))?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]).then(i.cmp(&j)));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[i * n + i]).collect();
    let eigenvectors: Vec<Vec<f64>> = order.iter().map(|&k| (0..n).map(|i| v[i * n + k]).collect()).collect();

    let mut spectrum = Spectrum { eigenvalues, eigenvectors, tol_used: tol };
    let achieved = spectrum.relative_residual(matrix).max(spectrum.orthonormality_defect());
    spectrum.tol_used = tol.max(achieved);
    Ok(spectrum)
}

/// Runs the sweeps on a dense row-major copy and returns it; `v`, if
/// given, is multiplied on the right by every rotation.
fn diagonalize(matrix: &SymMatrix, tol: f64, max_sweeps: usize, mut v: Option<&mut Vec<f64>>) -> Result<Vec<f64>> {
    check_tol(tol)?;
    let n = matrix.dim();
    let mut a = vec![0.0; n * n];
    for i in 0..n {
        for j in i..n {
            let x = matrix.get(i, j);
            a[i * n + j] = x;
            a[j * n + i] = x;
        }
    }
    let target = tol * matrix.frobenius_norm();

    let mut sweeps = 0;
    let mut off = off_diagonal_norm(&a, n);
    while off > target {
        if sweeps == max_sweeps {
            return Err(LinalgError::NoConvergence { sweeps, residual: off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + tau.hypot(1.0))
                } else {
                    -1.0 / (-tau + tau.hypot(1.0))
                };
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;
                rotate(&mut a, n, p, q, c, s);
                if let Some(v) = v.as_deref_mut() {
                    for row in v.chunks_exact_mut(n) {
                        let vp = row[p];
                        let vq = row[q];
                        row[p] = c * vp - s * vq;
                        row[q] = s * vp + c * vq;
                    }
                }
            }
        }
        off = off_diagonal_norm(&a, n);
    }
    Ok(a)
}

/// `A <- Jᵀ A J` for the rotation `J` acting on coordinates `p < q`.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize, c: f64, s: f64) {
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let apq = a[p * n + q];
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a[k * n + p] = new_kp;
        a[p * n + k] = new_kp;
        a[k * n + q] = new_kq;
        a[q * n + k] = new_kq;
    }
    a[p * n + p] = c * c * app - 2.0 * c * s * apq + s * s * aqq;
    a[q * n + q] = s * s * app + 2.0 * c * s * apq + c * c * aqq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn cycle(n: usize) -> SymMatrix {
        SymMatrix::from_fn(n, |i, j| if j == i + 1 || (i == 0 && j == n - 1) { 1.0 } else { 0.0 }).unwrap()
    }

    #[test]
    fn identity_spectrum() {
        let s = jacobi_eigen(&SymMatrix::identity(5).unwrap(), 1e-12).unwrap();
        assert_eq!(s.eigenvalues, vec![1.0; 5]);
        assert!(s.orthonormality_defect() < 1e-15);
    }

    #[test]
    fn hexagon_spectrum() {
        let s = jacobi_eigen(&cycle(6), 1e-12).unwrap();
        let expected = [2.0, 1.0, 1.0, -1.0, -1.0, -2.0];
        for (got, want) in s.eigenvalues.iter().zip(expected) {
            assert!((got - want).abs() < 1e-12, "{got} vs {want}");
        }
    }

    #[test]
    fn path_top_eigenvalue() {
        let p4 = SymMatrix::from_fn(4, |i, j| if j == i + 1 { 1.0 } else { 0.0 }).unwrap();
        let s = jacobi_eigen(&p4, 1e-12).unwrap();
        assert!((s.max() - 2.0 * (PI / 5.0).cos()).abs() < 1e-12);
        assert!((s.max() - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn invariants_recorded_in_tol_used() {
        let a = SymMatrix::from_fn(6, |i, j| ((i * 7 + j * 3) % 5) as f64 - 2.0).unwrap();
        let s = jacobi_eigen(&a, 1e-12).unwrap();
        assert!(s.relative_residual(&a) <= s.tol_used);
        assert!(s.orthonormality_defect() <= s.tol_used);
        assert!(s.tol_used < 1e-10);
        assert!(s.eigenvalues.windows(2).all(|w| w[0] >= w[1]));
        assert!(s.reconstruct().max_abs_diff(&a) < 1e-12);
    }

    #[test]
    fn zero_matrix_is_already_diagonal() {
        let s = jacobi_eigen(&SymMatrix::zeros(3).unwrap(), 1e-12).unwrap();
        assert_eq!(s.eigenvalues, vec![0.0; 3]);
    }

    #[test]
    fn sweep_cap_reports_residual() {
        let a = SymMatrix::from_fn(8, |i, j| 1.0 / (1.0 + i as f64 + j as f64)).unwrap();
        match jacobi_with_cap(&a, 1e-12, 1) {
            Err(LinalgError::NoConvergence { sweeps, residual }) => {
                assert_eq!(sweeps, 1);
                assert!(residual > 1e-12);
            }
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }
}
