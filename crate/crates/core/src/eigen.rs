//! Cyclic Jacobi eigenvalue iteration for dense symmetric matrices.

use serde::Serialize;

use crate::error::SpectrumError;
use crate::matrix::DenseSymMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct JacobiOptions {
    /// Stop once the off-diagonal Frobenius norm is below `tol · ‖A‖_F`.
    pub tol: f64,
    pub max_sweeps: usize,
}

impl Default for JacobiOptions {
    fn default() -> Self {
        Self { tol: 1e-10, max_sweeps: 100 }
    }
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[i * n + j] * a[i * n + j];
            }
        }
    }
    sum.sqrt()
}

/// All eigenvalues of `m`, sorted descending.
pub fn numeric_eigenvalues(m: &DenseSymMatrix, opts: JacobiOptions) -> Result<Vec<f64>, SpectrumError> {
    let n = m.dimension();
    let norm = m.frobenius_norm();
    let mut work = m.clone();
    let a = work.data_mut();
    // rotations on entries this small relative to ‖A‖ cannot move any
    // eigenvalue by a representable amount
    let negligible = norm * 1e-18;

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(a, n);
        if off <= opts.tol * norm {
            break;
        }
        if sweeps == opts.max_sweeps {
            return Err(SpectrumError::NonConvergence { sweeps, off_norm: off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(a, n, p, q, negligible);
            }
        }
    }

    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eigenvalues.sort_by(|x, y| y.total_cmp(x));
    Ok(eigenvalues)
}

/// Annihilates `a[p][q]` with a plane rotation, keeping both triangles.
#[inline]
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize, negligible: f64) {
    let apq = a[p * n + q];
    if apq.abs() <= negligible {
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    let (head, tail) = a.split_at_mut(q * n);
    let row_p = &mut head[p * n..(p + 1) * n];
    let row_q = &mut tail[..n];
    for k in 0..n {
        let (x, y) = (row_p[k], row_q[k]);
        row_p[k] = c * x - s * y;
        row_q[k] = s * x + c * y;
    }
    row_p[p] = app - t * apq;
    row_q[q] = aqq + t * apq;
    row_p[q] = 0.0;
    row_q[p] = 0.0;
    for k in 0..n {
        if k != p && k != q {
            a[k * n + p] = a[p * n + k];
            a[k * n + q] = a[q * n + k];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eig(rows: &[Vec<f64>]) -> Vec<f64> {
        numeric_eigenvalues(&DenseSymMatrix::from_rows(rows).unwrap(), JacobiOptions::default()).unwrap()
    }

    fn assert_close(got: &[f64], want: &[f64], tol: f64) {
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() <= tol, "{got:?} vs {want:?}");
        }
    }

    #[test]
    fn zero_matrix() {
        assert_eq!(eig(&vec![vec![0.0; 3]; 3]), vec![0.0, 0.0, 0.0]);
    }

    #[test]
    fn star_k14_adjacency() {
        let m = DenseSymMatrix::adjacency_from_edges(5, (1..5).map(|l| (0, l)));
        let got = numeric_eigenvalues(&m, JacobiOptions::default()).unwrap();
        assert_close(&got, &[2.0, 0.0, 0.0, 0.0, -2.0], 1e-12);
    }

    #[test]
    fn two_by_two_closed_form() {
        // eigenvalues of [[a, b], [b, c]] are (a+c)/2 ± sqrt(((a-c)/2)^2 + b^2)
        let (a, b, c) = (2.0, -3.0, 5.0f64);
        let mid = (a + c) / 2.0;
        let rad = (((a - c) / 2.0f64).powi(2) + b * b).sqrt();
        assert_close(&eig(&[vec![a, b], vec![b, c]]), &[mid + rad, mid - rad], 1e-12);
    }

    #[test]
    fn path_graph_cosines() {
        // adjacency of the path P_n has eigenvalues 2cos(k·π/(n+1))
        let n = 9;
        let m = DenseSymMatrix::adjacency_from_edges(n, (0..n - 1).map(|i| (i, i + 1)));
        let mut want: Vec<f64> =
            (1..=n).map(|k| 2.0 * (k as f64 * std::f64::consts::PI / (n as f64 + 1.0)).cos()).collect();
        want.sort_by(|x, y| y.total_cmp(x));
        assert_close(&numeric_eigenvalues(&m, JacobiOptions::default()).unwrap(), &want, 1e-10);
    }

    #[test]
    fn trace_and_frobenius_preserved() {
        let m = DenseSymMatrix::from_fn(12, |i, j| ((i * 7 + j * 3) % 11) as f64 - 5.0);
        let ev = numeric_eigenvalues(&m, JacobiOptions::default()).unwrap();
        assert!((ev.iter().sum::<f64>() - m.trace()).abs() < 1e-9);
        let sq: f64 = ev.iter().map(|x| x * x).sum();
        assert!((sq - m.frobenius_norm().powi(2)).abs() < 1e-8);
    }

    #[test]
    fn sweep_limit_is_a_hard_error() {
        let m = DenseSymMatrix::from_fn(6, |i, j| (i + j) as f64);
        let err = numeric_eigenvalues(&m, JacobiOptions { tol: 1e-10, max_sweeps: 0 }).unwrap_err();
        assert!(matches!(err, SpectrumError::NonConvergence { sweeps: 0, .. }));
    }
}
