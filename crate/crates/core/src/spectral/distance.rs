use super::SquareMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Shortest-path distance matrix by one BFS per vertex.
pub fn all_pairs_distances(g: &Graph) -> Result<SquareMatrix> {
    let n = g.order();
    let mut entries = Vec::with_capacity(n * n);
    for v in 0..n {
        for d in g.bfs_distances(v) {
            entries.push(d.ok_or(Error::Disconnected)? as f64);
        }
    }
    SquareMatrix::new(n, entries)
}

/// Row sums of a distance matrix: `Tr(v) = Σ_u d(v, u)`.
pub fn transmissions(d: &SquareMatrix) -> Vec<f64> {
    (0..d.order()).map(|i| d.row(i).iter().sum()).collect()
}

/// `Q(G) = Diag(Tr) + D(G)`.
pub fn dsl_matrix(g: &Graph) -> Result<SquareMatrix> {
    let mut q = all_pairs_distances(g)?;
    let tr = transmissions(&q);
    let n = q.order();
    let entries = q.entries_mut();
    for (i, t) in tr.into_iter().enumerate() {
        entries[i * n + i] = t;
    }
    Ok(q)
}
