//! Cyclic Jacobi for dense symmetric matrices.

use crate::error::SpectralError;

pub const MAX_SWEEPS: usize = 100;
pub const OFF_TOLERANCE: f64 = 1e-14;

pub(crate) struct Decomposition {
    /// Eigenvalues in the order they sit on the final diagonal.
    pub values: Vec<f64>,
    /// Column `j` (stored as `vectors[i * n + j]`) pairs with `values[j]`.
    pub vectors: Option<Vec<f64>>,
}

fn off_mass(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// Diagonalizes row-major `a` in place. Stops once the off-diagonal
/// Frobenius mass is at most `OFF_TOLERANCE * ‖a‖_F`.
pub(crate) fn decompose(mut a: Vec<f64>, n: usize, want_vectors: bool) -> Result<Decomposition, SpectralError> {
    debug_assert_eq!(a.len(), n * n);
    let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let target = OFF_TOLERANCE * norm;
    let mut v = want_vectors.then(|| {
        let mut id = vec![0.0; n * n];
        for i in 0..n {
            id[i * n + i] = 1.0;
        }
        id
    });

    let mut sweeps = 0;
    loop {
        let off = off_mass(&a, n);
        if off <= target {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(SpectralError::NoConvergence { sweeps, off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                // signum(+0.0) is 1, so a zero theta gives the 45° rotation
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;

                if let Some(v) = v.as_mut() {
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }
    let values = (0..n).map(|i| a[i * n + i]).collect();
    Ok(Decomposition { values, vectors: v })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let d = decompose(vec![2.0, 1.0, 1.0, 2.0], 2, true).unwrap();
        let mut vals = d.values.clone();
        vals.sort_by(|a, b| b.total_cmp(a));
        assert!((vals[0] - 3.0).abs() < 1e-14);
        assert!((vals[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn zero_matrix_is_already_diagonal() {
        let d = decompose(vec![0.0; 9], 3, false).unwrap();
        assert_eq!(d.values, vec![0.0; 3]);
    }
}
