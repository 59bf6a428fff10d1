use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::numerics::Matrix;

pub(crate) fn to_nalgebra(m: &Matrix) -> DMatrix<f64> {
    DMatrix::from_row_slice(m.rows(), m.cols(), m.as_slice())
}

pub(crate) fn from_nalgebra(m: &DMatrix<f64>) -> Matrix {
    Matrix::from_fn(m.nrows(), m.ncols(), |r, c| m[(r, c)])
}

/// Default singular-value cutoff for [`pinv`]: machine epsilon scaled by the
/// larger matrix dimension (relative to the largest singular value).
pub fn default_pinv_tol(rows: usize, cols: usize) -> f64 {
    f64::EPSILON * rows.max(cols) as f64
}

/// Moore-Penrose pseudoinverse via full SVD. Singular values below
/// `tol * sigma_max` are treated as zero.
pub fn pinv(m: &Matrix, tol: f64) -> Result<Matrix> {
    if !m.is_finite() {
        return Err(Error::NonFinite("pinv input".into()));
    }
    if tol < 0.0 {
        return Err(Error::Parameter(format!("pinv tol {tol} must be >= 0")));
    }
    if m.rows() == 0 || m.cols() == 0 {
        return Ok(Matrix::zeros(m.cols(), m.rows()));
    }
    let svd = to_nalgebra(m).svd(true, true);
    let u = svd.u.as_ref().expect("svd requested u");
    let v_t = svd.v_t.as_ref().expect("svd requested v_t");
    let sigma_max = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let cutoff = tol * sigma_max;

    // A+ = V * S+ * U^T
    let k = svd.singular_values.len();
    let mut s_inv = DMatrix::zeros(k, k);
    for i in 0..k {
        let s = svd.singular_values[i];
        if s > cutoff && s > 0.0 {
            s_inv[(i, i)] = 1.0 / s;
        }
    }
    let result = v_t.transpose() * s_inv * u.transpose();
    Ok(from_nalgebra(&result))
}

/// Solve A x = B for symmetric positive-definite A via Cholesky.
pub fn cholesky_solve_spd(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if a.rows() != a.cols() || a.rows() != b.rows() {
        return Err(Error::Dimension(format!(
            "cholesky solve {}x{} vs rhs {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let chol = nalgebra::linalg::Cholesky::new(to_nalgebra(a))
        .ok_or_else(|| Error::Numeric("matrix not positive definite".into()))?;
    let x = chol.solve(&to_nalgebra(b));
    Ok(from_nalgebra(&x))
}
