use super::{max_abs, LinalgError, Result, SymMatrix};

const RESIDUAL_FACTOR: f64 = 1e-10;

fn residual(a: &SymMatrix, x: &[f64], rhs: &[f64]) -> Vec<f64> {
    let ax = a.mul_vec(x).expect("dimensions checked");
    rhs.iter().zip(ax).map(|(b, y)| b - y).collect()
}

/// Solves `Ax = rhs` for symmetric positive definite `A`.
///
/// Uses a Cholesky factorization; a non-positive pivot means `A` is not
/// positive definite and is reported as [`LinalgError::NotPositiveDefinite`].
/// The result must satisfy `|Ax - rhs|_inf <= 1e-10 * max(1, |rhs|_inf)`. If
/// the Cholesky solution misses that (after one refinement step), Gaussian
/// elimination with partial pivoting is tried before giving up.
pub fn solve_spd(a: &SymMatrix, rhs: &[f64]) -> Result<Vec<f64>> {
    let mut x = solve_spd_many(a, std::slice::from_ref(&rhs))?;
    Ok(x.pop().expect("one right-hand side"))
}

/// [`solve_spd`] for several right-hand sides sharing one factorization.
pub fn solve_spd_many<R: AsRef<[f64]>>(a: &SymMatrix, rhs: &[R]) -> Result<Vec<Vec<f64>>> {
    let n = a.dim();
    if let Some(bad) = rhs.iter().find(|r| r.as_ref().len() != n) {
        return Err(LinalgError::DimensionMismatch { expected: n, actual: bad.as_ref().len() });
    }
    let factor = cholesky(a)?;
    rhs.iter().map(|r| refine(a, &factor, r.as_ref())).collect()
}

fn refine(a: &SymMatrix, factor: &[Vec<f64>], rhs: &[f64]) -> Result<Vec<f64>> {
    let bound = RESIDUAL_FACTOR * max_abs(rhs).max(1.0);
    let mut x = cholesky_solve(factor, rhs);
    let r = residual(a, &x, rhs);
    if max_abs(&r) <= bound {
        return Ok(x);
    }
    let correction = cholesky_solve(factor, &r);
    x.iter_mut().zip(correction).for_each(|(xi, ci)| *xi += ci);
    if max_abs(&residual(a, &x, rhs)) <= bound {
        return Ok(x);
    }
    let x = solve_gaussian(a, rhs)?;
    let res = max_abs(&residual(a, &x, rhs));
    if res <= bound {
        Ok(x)
    } else {
        Err(LinalgError::InaccurateSolve { residual: res, bound })
    }
}

/// Lower-triangular `L` with `A = L Lᵀ`, row-major.
fn cholesky(a: &SymMatrix) -> Result<Vec<Vec<f64>>> {
    let n = a.dim();
    let mut l = vec![vec![0.0; n]; n];
    for j in 0..n {
        let mut d = a.get(j, j);
        for k in 0..j {
            d -= l[j][k] * l[j][k];
        }
        if !(d > 0.0) {
            return Err(LinalgError::NotPositiveDefinite { row: j, pivot: d });
        }
        let d = d.sqrt();
        l[j][j] = d;
        for i in (j + 1)..n {
            let mut s = a.get(i, j);
            for k in 0..j {
                s -= l[i][k] * l[j][k];
            }
            l[i][j] = s / d;
        }
    }
    Ok(l)
}

fn cholesky_solve(l: &[Vec<f64>], rhs: &[f64]) -> Vec<f64> {
    let n = l.len();
    let mut y = vec![0.0; n];
    for i in 0..n {
        let s: f64 = (0..i).map(|k| l[i][k] * y[k]).sum();
        y[i] = (rhs[i] - s) / l[i][i];
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let s: f64 = ((i + 1)..n).map(|k| l[k][i] * x[k]).sum();
        x[i] = (y[i] - s) / l[i][i];
    }
    x
}

/// Gaussian elimination with partial pivoting; works for any nonsingular `A`.
pub fn solve_gaussian(a: &SymMatrix, rhs: &[f64]) -> Result<Vec<f64>> {
    let n = a.dim();
    if rhs.len() != n {
        return Err(LinalgError::DimensionMismatch { expected: n, actual: rhs.len() });
    }
    let mut m = a.to_rows();
    let mut b = rhs.to_vec();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))
            .expect("non-empty range");
        if m[pivot][col] == 0.0 {
            return Err(LinalgError::Singular { column: col });
        }
        m.swap(col, pivot);
        b.swap(col, pivot);
        for row in (col + 1)..n {
            let f = m[row][col] / m[col][col];
            if f == 0.0 {
                continue;
            }
            for k in col..n {
                m[row][k] -= f * m[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let s: f64 = ((i + 1)..n).map(|k| m[i][k] * x[k]).sum();
        x[i] = (b[i] - s) / m[i][i];
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        // 2I − A(K_2); inverse is (1/3)[[2,1],[1,2]]
        let a = SymMatrix::from_fn(2, |i, j| if i == j { 2.0 } else { -1.0 }).unwrap();
        let x = solve_spd(&a, &[1.0, 1.0]).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-15 && (x[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn identity_and_diagonal() {
        let x = solve_spd(&SymMatrix::identity(3).unwrap(), &[4.0, 5.0, 6.0]).unwrap();
        assert_eq!(x, vec![4.0, 5.0, 6.0]);
        let x = solve_spd(&SymMatrix::diagonal(&[2.0, 4.0]).unwrap(), &[2.0, 2.0]).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-15 && (x[1] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn indefinite_matrix_rejected() {
        let k2 = SymMatrix::from_fn(2, |i, j| if i == j { 0.0 } else { 1.0 }).unwrap();
        assert!(matches!(solve_spd(&k2, &[1.0, 1.0]), Err(LinalgError::NotPositiveDefinite { row: 0, .. })));
        let semidefinite = SymMatrix::from_fn(2, |_, _| 1.0).unwrap();
        assert!(matches!(solve_spd(&semidefinite, &[1.0, 1.0]), Err(LinalgError::NotPositiveDefinite { row: 1, .. })));
    }

    #[test]
    fn gaussian_handles_indefinite() {
        let k2 = SymMatrix::from_fn(2, |i, j| if i == j { 0.0 } else { 1.0 }).unwrap();
        assert_eq!(solve_gaussian(&k2, &[3.0, 5.0]).unwrap(), vec![5.0, 3.0]);
        let singular = SymMatrix::zeros(2).unwrap();
        assert_eq!(solve_gaussian(&singular, &[1.0, 1.0]), Err(LinalgError::Singular { column: 0 }));
    }

    #[test]
    fn dimension_mismatch() {
        let a = SymMatrix::identity(2).unwrap();
        assert_eq!(solve_spd(&a, &[1.0]), Err(LinalgError::DimensionMismatch { expected: 2, actual: 1 }));
    }
}
