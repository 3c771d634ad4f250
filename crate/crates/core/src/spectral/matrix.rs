use std::ops::Index;

use crate::error::{Error, Result};
use crate::thresholds::Polynomial;

/// Dense real square matrix, row-major. Entries are always finite.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl SquareMatrix {
    pub fn new(order: usize, entries: Vec<f64>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidMatrix("order must be at least 1".into()));
        }
        if entries.len() != order * order {
            return Err(Error::InvalidMatrix(format!(
                "expected {} entries for order {order}, got {}",
                order * order,
                entries.len()
            )));
        }
        if entries.iter().any(|e| !e.is_finite()) {
            return Err(Error::InvalidMatrix("entries must be finite".into()));
        }
        Ok(Self { order, entries })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.as_ref().len() != order) {
            return Err(Error::InvalidMatrix("rows must all have length equal to the row count".into()));
        }
        Self::new(order, rows.iter().flat_map(|r| r.as_ref().iter().copied()).collect())
    }

    pub fn identity(order: usize) -> Result<Self> {
        let mut entries = vec![0.0; order * order];
        for i in 0..order {
            entries[i * order + i] = 1.0;
        }
        Self::new(order, entries)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.order).map(|i| self.row(i).to_vec()).collect()
    }

    pub(crate) fn entries_mut(&mut self) -> &mut [f64] {
        &mut self.entries
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|e| e * e).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().fold(0.0, |m, e| m.max(e.abs()))
    }

    pub fn symmetry_deviation(&self) -> f64 {
        let mut dev = 0.0f64;
        for i in 0..self.order {
            for j in i + 1..self.order {
                dev = dev.max((self[(i, j)] - self[(j, i)]).abs());
            }
        }
        dev
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.order)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    fn mul(&self, other: &Self) -> Self {
        let n = self.order;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += a * other[(k, j)];
                }
            }
        }
        Self { order: n, entries: out }
    }

    /// `det(xI − M)` by Faddeev–LeVerrier. Exact for small integer matrices.
    pub fn characteristic_polynomial(&self) -> Result<Polynomial> {
        let n = self.order;
        if n > Polynomial::MAX_DEGREE {
            return Err(Error::InvalidMatrix(format!(
                "characteristic polynomial supports order ≤ {}",
                Polynomial::MAX_DEGREE
            )));
        }
        let mut coeffs = vec![1.0];
        let mut m = Self {
            order: n,
            entries: vec![0.0; n * n],
        };
        for k in 1..=n {
            // M_k = A·M_{k−1} + c_{n−k+1} I
            let mut next = self.mul(&m);
            let c_prev = *coeffs.last().expect("nonempty");
            for i in 0..n {
                next.entries[i * n + i] += c_prev;
            }
            let c = -self.mul(&next).trace() / k as f64;
            coeffs.push(c);
            m = next;
        }
        Polynomial::new(coeffs)
    }
}

impl Index<(usize, usize)> for SquareMatrix {
    type Output = f64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.entries[i * self.order + j]
    }
}
