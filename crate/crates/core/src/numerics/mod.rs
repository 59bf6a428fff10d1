//! Dense matrix kernels, orthonormal 2-D DCT, SVD-backed pseudoinverse and
//! PCA, and a seedable deterministic RNG. The numeric substrate for the rest
//! of the crate; all functions here are pure and thread-safe (the RNG is
//! single-owner by `&mut`).

mod dct;
mod linalg;
mod matrix;
mod pca;
mod rng;

pub use dct::{dct2, idct2};
pub use linalg::{cholesky_solve_spd, default_pinv_tol, pinv};
pub use matrix::Matrix;
pub use pca::{PcaModel, pca_fit};
pub use rng::Rng;

/// Nearest-rank percentile of an unsorted sample: the smallest element with
/// at least `p`% of the data at or below it. For a single-element sample any
/// percentile is that element (the degenerate-quantile rule used by the
/// benchmark report).
pub fn percentile_nearest_rank(values: &[f64], p: f64) -> Option<f64> {
    if values.is_empty() || !(0.0..=100.0).contains(&p) {
        return None;
    }
    let mut sorted: Vec<f64> = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("non-finite percentile input"));
    let n = sorted.len();
    let rank = ((p / 100.0) * n as f64).ceil() as usize;
    Some(sorted[rank.clamp(1, n) - 1])
}
