use crate::error::{Error, Result};
use crate::numerics::Matrix;
use crate::numerics::linalg::{from_nalgebra, to_nalgebra};

/// Principal-component model fit on row-sample data.
///
/// `components` holds the top-k right singular vectors as rows (orthonormal),
/// ordered by nonincreasing `variances`. Each component's sign is fixed so
/// its largest-magnitude entry is positive, making serialized models
/// reproducible.
#[derive(Debug, Clone)]
pub struct PcaModel {
    mean: Vec<f64>,
    components: Matrix,
    variances: Vec<f64>,
}

impl PcaModel {
    pub fn mean(&self) -> &[f64] {
        &self.mean
    }

    pub fn components(&self) -> &Matrix {
        &self.components
    }

    pub fn variances(&self) -> &[f64] {
        &self.variances
    }

    pub fn input_dim(&self) -> usize {
        self.mean.len()
    }

    pub fn rank(&self) -> usize {
        self.components.rows()
    }

    /// z = components * (x - mean)
    pub fn project(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.input_dim() {
            return Err(Error::Dimension(format!(
                "pca project: input {} vs model dim {}",
                x.len(),
                self.input_dim()
            )));
        }
        let centered: Vec<f64> = x.iter().zip(&self.mean).map(|(a, m)| a - m).collect();
        self.components.matvec(&centered)
    }

    /// x = components^T * z + mean
    pub fn reconstruct(&self, z: &[f64]) -> Result<Vec<f64>> {
        if z.len() != self.rank() {
            return Err(Error::Dimension(format!(
                "pca reconstruct: input {} vs rank {}",
                z.len(),
                self.rank()
            )));
        }
        let mut out = self.mean.clone();
        for (k, &zk) in z.iter().enumerate() {
            for (o, &c) in out.iter_mut().zip(self.components.row(k)) {
                *o += zk * c;
            }
        }
        Ok(out)
    }

    /// Mean squared per-element reconstruction error of x under this model.
    pub fn reconstruction_error(&self, x: &[f64]) -> Result<f64> {
        let rec = self.reconstruct(&self.project(x)?)?;
        let d = x.len() as f64;
        Ok(x.iter().zip(&rec).map(|(a, b)| (a - b) * (a - b)).sum::<f64>() / d)
    }
}

/// Fit a k-component PCA to n x d row-sample data via SVD of the centered
/// matrix. Requires 1 <= k <= min(n, d).
pub fn pca_fit(data: &Matrix, k: usize) -> Result<PcaModel> {
    let (n, d) = (data.rows(), data.cols());
    if k == 0 || k > n.min(d) {
        return Err(Error::Parameter(format!(
            "pca rank {k} out of range for {n}x{d} data"
        )));
    }
    let mut mean = vec![0.0; d];
    for r in 0..n {
        for (m, &v) in mean.iter_mut().zip(data.row(r)) {
            *m += v;
        }
    }
    for m in &mut mean {
        *m /= n as f64;
    }
    let centered = Matrix::from_fn(n, d, |r, c| data.get(r, c) - mean[c]);

    let svd = to_nalgebra(&centered).svd(false, true);
    let v_t = from_nalgebra(svd.v_t.as_ref().expect("svd requested v_t"));
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&a, &b| {
        svd.singular_values[b]
            .partial_cmp(&svd.singular_values[a])
            .unwrap()
            .then(a.cmp(&b))
    });

    let denom = if n > 1 { (n - 1) as f64 } else { 1.0 };
    let mut variances = Vec::with_capacity(k);
    let mut components = Matrix::zeros(k, d);
    for (row, &idx) in order.iter().take(k).enumerate() {
        let s = svd.singular_values[idx];
        variances.push(if n > 1 { s * s / denom } else { 0.0 });
        // Deterministic sign: largest-magnitude entry positive.
        let comp = v_t.row(idx);
        let mut best = 0usize;
        for (c, &v) in comp.iter().enumerate() {
            if v.abs() > comp[best].abs() {
                best = c;
            }
        }
        let flip = if comp[best] < 0.0 { -1.0 } else { 1.0 };
        for (c, &v) in comp.iter().enumerate() {
            components.set(row, c, flip * v);
        }
    }
    Ok(PcaModel {
        mean,
        components,
        variances,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::Rng;

    #[test]
    fn identical_rows_zero_variance_mean_row() {
        let row = [0.3, -1.2, 4.0];
        let data = Matrix::from_fn(5, 3, |_, c| row[c]);
        let model = pca_fit(&data, 2).unwrap();
        for &v in model.variances() {
            assert!(v.abs() < 1e-18);
        }
        for (m, r) in model.mean().iter().zip(&row) {
            assert!((m - r).abs() < 1e-12);
        }
    }

    #[test]
    fn line_y_eq_x_first_component() {
        // Points on y = x: rank-1 covariance with eigenvector (1,1)/sqrt(2).
        let data = Matrix::from_fn(6, 2, |r, _| r as f64 - 2.5);
        let model = pca_fit(&data, 1).unwrap();
        let c = model.components().row(0);
        let s = 1.0 / 2.0_f64.sqrt();
        assert!((c[0] - s).abs() < 1e-10 && (c[1] - s).abs() < 1e-10);
    }

    #[test]
    fn full_rank_reconstruction_exact() {
        let mut rng = Rng::new(31);
        let data = Matrix::from_fn(6, 4, |_, _| rng.range_f64(-1.0, 1.0));
        let model = pca_fit(&data, 4).unwrap();
        for r in 0..6 {
            let x = data.row(r);
            let rec = model.reconstruct(&model.project(x).unwrap()).unwrap();
            for (a, b) in x.iter().zip(&rec) {
                assert!((a - b).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn project_of_mean_is_zero() {
        let mut rng = Rng::new(8);
        let data = Matrix::from_fn(5, 3, |_, _| rng.range_f64(0.0, 1.0));
        let model = pca_fit(&data, 2).unwrap();
        let z = model.project(&model.mean().to_vec()).unwrap();
        for v in z {
            assert!(v.abs() < 1e-12);
        }
    }

    #[test]
    fn reconstruction_error_nonincreasing_in_k() {
        // Brute-force sweep k = 1..d on random 10x6 data.
        let mut rng = Rng::new(99);
        let data = Matrix::from_fn(10, 6, |_, _| rng.range_f64(-1.0, 1.0));
        let mut prev = f64::INFINITY;
        for k in 1..=6 {
            let model = pca_fit(&data, k).unwrap();
            let total: f64 = (0..10)
                .map(|r| model.reconstruction_error(data.row(r)).unwrap())
                .sum();
            assert!(
                total <= prev + 1e-9,
                "k={k}: error {total} > previous {prev}"
            );
            prev = total;
        }
        assert!(prev < 1e-8, "full rank should reconstruct exactly");
    }

    #[test]
    fn components_row_orthonormal_and_variances_sorted() {
        let mut rng = Rng::new(13);
        let data = Matrix::from_fn(12, 5, |_, _| rng.range_f64(-3.0, 3.0));
        let model = pca_fit(&data, 4).unwrap();
        let g = model
            .components()
            .matmul(&model.components().transpose())
            .unwrap();
        for r in 0..4 {
            for c in 0..4 {
                let expect = if r == c { 1.0 } else { 0.0 };
                assert!((g.get(r, c) - expect).abs() < 1e-8);
            }
        }
        for w in model.variances().windows(2) {
            assert!(w[0] >= w[1] - 1e-12);
        }
    }

    #[test]
    fn rank_out_of_range_rejected() {
        let data = Matrix::zeros(3, 2);
        assert!(matches!(pca_fit(&data, 0), Err(crate::Error::Parameter(_))));
        assert!(matches!(pca_fit(&data, 3), Err(crate::Error::Parameter(_))));
    }

    #[test]
    fn dimension_mismatch_errors() {
        let data = Matrix::identity(3);
        let model = pca_fit(&data, 2).unwrap();
        assert!(model.project(&[1.0, 2.0]).is_err());
        assert!(model.reconstruct(&[1.0, 2.0, 3.0]).is_err());
    }
}
