use super::SquareMatrix;
use crate::error::{Error, Result};
use crate::graph::VertexPartition;

/// Absolute tolerance on row-sum deviation for calling a partition equitable.
pub const EQUITABLE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct QuotientView {
    /// `b_{ij}` = average row sum of block `M_{ij}`.
    pub matrix: SquareMatrix,
    pub equitable: bool,
    pub max_row_sum_deviation: f64,
}

pub fn quotient_matrix(m: &SquareMatrix, p: &VertexPartition) -> Result<QuotientView> {
    if p.order() != m.order() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} vertices but the matrix has order {}",
            p.order(),
            m.order()
        )));
    }
    let t = p.len();
    let mut entries = Vec::with_capacity(t * t);
    let mut deviation = 0.0f64;
    for rows in p.blocks() {
        for cols in p.blocks() {
            let sums: Vec<f64> = rows
                .iter()
                .map(|&i| cols.iter().map(|&j| m[(i, j)]).sum())
                .collect();
            let avg = sums.iter().sum::<f64>() / sums.len() as f64;
            deviation = sums.iter().fold(deviation, |d, s| d.max((s - avg).abs()));
            entries.push(avg);
        }
    }
    Ok(QuotientView {
        matrix: SquareMatrix::new(t, entries)?,
        equitable: deviation <= EQUITABLE_TOLERANCE,
        max_row_sum_deviation: deviation,
    })
}
