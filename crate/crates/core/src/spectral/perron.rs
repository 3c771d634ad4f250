//! Perron roots of nonnegative (possibly nonsymmetric) matrices.

use super::SquareMatrix;
use crate::error::{Error, Result};
use crate::thresholds::largest_real_root;

#[derive(Debug, Clone, Copy)]
pub struct PerronOptions {
    pub max_iterations: usize,
    /// Relative change of successive estimates that counts as converged.
    pub tolerance: f64,
    /// Orders up to this are checked against the characteristic polynomial.
    pub cross_check_order: usize,
    pub cross_check_tolerance: f64,
}

impl Default for PerronOptions {
    fn default() -> Self {
        Self {
            max_iterations: 1_000_000,
            tolerance: 1e-12,
            cross_check_order: 4,
            cross_check_tolerance: 1e-8,
        }
    }
}

pub fn perron_root(m: &SquareMatrix) -> Result<f64> {
    perron_root_with(m, PerronOptions::default())
}

/// Power iteration on `M + I` from the all-ones vector. The unit shift
/// makes irreducible periodic matrices primitive without moving the
/// dominant eigenvector.
pub fn perron_root_with(m: &SquareMatrix, opts: PerronOptions) -> Result<f64> {
    let n = m.order();
    for i in 0..n {
        for j in 0..n {
            if m[(i, j)] < 0.0 {
                return Err(Error::NegativeEntry {
                    row: i,
                    col: j,
                    value: m[(i, j)],
                });
            }
        }
    }
    const SHIFT: f64 = 1.0;
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut estimate = f64::NAN;
    let mut converged = false;
    for _ in 0..opts.max_iterations {
        let mut y = m.mul_vec(&x);
        for (yi, xi) in y.iter_mut().zip(&x) {
            *yi += SHIFT * xi;
        }
        let next: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
        if (next - estimate).abs() < opts.tolerance * next.abs() {
            estimate = next;
            converged = true;
            break;
        }
        estimate = next;
    }
    if !converged {
        return Err(Error::NoConvergence {
            method: "power iteration",
            iterations: opts.max_iterations,
        });
    }
    let power = estimate - SHIFT;

    if n <= opts.cross_check_order {
        let polynomial = largest_real_root(&m.characteristic_polynomial()?, None)?;
        if (power - polynomial).abs() > opts.cross_check_tolerance {
            return Err(Error::PerronMismatch { power, polynomial });
        }
    }
    Ok(power)
}

/// `xᵀMx / xᵀx`.
pub fn rayleigh(m: &SquareMatrix, x: &[f64]) -> Result<f64> {
    if x.len() != m.order() {
        return Err(Error::InvalidParameters(format!(
            "vector length {} does not match matrix order {}",
            x.len(),
            m.order()
        )));
    }
    let xx: f64 = x.iter().map(|v| v * v).sum();
    if xx == 0.0 {
        return Err(Error::InvalidParameters("Rayleigh quotient of the zero vector".into()));
    }
    let mx = m.mul_vec(x);
    Ok(x.iter().zip(&mx).map(|(a, b)| a * b).sum::<f64>() / xx)
}
