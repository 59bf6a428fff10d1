use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::numerics::Matrix;

/// Orthonormal DCT-II basis: B[k][n] = a_k * cos(pi*(2n+1)*k / (2N)) with
/// a_0 = sqrt(1/N), a_k = sqrt(2/N). B is orthogonal, so the 2-D transform
/// preserves energy and inverts exactly.
fn basis(n: usize) -> Matrix {
    let scale0 = (1.0 / n as f64).sqrt();
    let scale = (2.0 / n as f64).sqrt();
    Matrix::from_fn(n, n, |k, j| {
        let a = if k == 0 { scale0 } else { scale };
        a * (PI * (2 * j + 1) as f64 * k as f64 / (2 * n) as f64).cos()
    })
}

/// 2-D orthonormal DCT-II of a matrix (image rows = matrix rows).
///
/// For a constant n x n input of value c the DC coefficient is c*n and every
/// AC coefficient is 0.
pub fn dct2(img: &Matrix) -> Result<Matrix> {
    if img.rows() == 0 || img.cols() == 0 {
        return Err(Error::Dimension("dct2 of empty image".into()));
    }
    let bh = basis(img.rows());
    let bw = basis(img.cols());
    bh.matmul(img)?.matmul(&bw.transpose())
}

/// Inverse of [`dct2`] under the same orthonormal convention.
pub fn idct2(coeffs: &Matrix) -> Result<Matrix> {
    if coeffs.rows() == 0 || coeffs.cols() == 0 {
        return Err(Error::Dimension("idct2 of empty coefficients".into()));
    }
    let bh = basis(coeffs.rows());
    let bw = basis(coeffs.cols());
    bh.transpose().matmul(coeffs)?.matmul(&bw)
}
