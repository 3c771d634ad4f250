//! Cyclic Jacobi eigenvalue iteration for dense symmetric matrices.

use serde::Serialize;

use super::SquareMatrix;
use crate::error::{Error, Result};

/// Eigenvalues sorted descending; `radius()` is the first.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn radius(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct JacobiOptions {
    pub max_sweeps: usize,
    /// Stop once the off-diagonal Frobenius norm is below `tolerance·‖M‖_F`.
    pub tolerance: f64,
    /// Symmetry is checked against `symmetry_tolerance·max|mᵢⱼ|`.
    pub symmetry_tolerance: f64,
}

impl Default for JacobiOptions {
    fn default() -> Self {
        Self {
            max_sweeps: 100,
            tolerance: 1e-12,
            symmetry_tolerance: 1e-12,
        }
    }
}

pub fn eigenvalues_symmetric(m: &SquareMatrix) -> Result<Spectrum> {
    eigenvalues_symmetric_with(m, JacobiOptions::default())
}

pub fn eigenvalues_symmetric_with(m: &SquareMatrix, opts: JacobiOptions) -> Result<Spectrum> {
    let n = m.order();
    let deviation = m.symmetry_deviation();
    let allowed = opts.symmetry_tolerance * m.max_abs();
    if deviation > allowed {
        return Err(Error::NotSymmetric {
            deviation,
            tolerance: allowed,
        });
    }
    let mut a: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| 0.5 * (m[(i, j)] + m[(j, i)])).collect())
        .collect();
    let target = opts.tolerance * m.frobenius_norm();

    let off_norm = |a: &[Vec<f64>]| -> f64 {
        let mut s = 0.0;
        for (p, row) in a.iter().enumerate() {
            for v in &row[p + 1..] {
                s += v * v;
            }
        }
        (2.0 * s).sqrt()
    };

    let mut converged = off_norm(&a) <= target;
    let mut sweeps = 0;
    while !converged {
        if sweeps == opts.max_sweeps {
            return Err(Error::NoConvergence {
                method: "cyclic Jacobi",
                iterations: opts.max_sweeps,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                // signum(0) is 1 for +0.0, which gives the 45° rotation.
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                a[p][p] -= t * apq;
                a[q][q] += t * apq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k][p];
                    let akq = a[k][q];
                    let new_kp = c * akp - s * akq;
                    let new_kq = s * akp + c * akq;
                    a[k][p] = new_kp;
                    a[p][k] = new_kp;
                    a[k][q] = new_kq;
                    a[q][k] = new_kq;
                }
            }
        }
        converged = off_norm(&a) <= target;
    }

    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eigenvalues.sort_by(|x, y| y.total_cmp(x));
    Ok(Spectrum { eigenvalues })
}
