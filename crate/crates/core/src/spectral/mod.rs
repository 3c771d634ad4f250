//! Distance matrices, the distance signless Laplacian `Q(G)`, and the
//! eigenvalue machinery around it.

mod distance;
mod jacobi;
mod matrix;
mod perron;
mod quotient;

pub use distance::{all_pairs_distances, dsl_matrix, transmissions};
pub use jacobi::{eigenvalues_symmetric, eigenvalues_symmetric_with, JacobiOptions, Spectrum};
pub use matrix::SquareMatrix;
pub use perron::{perron_root, perron_root_with, rayleigh, PerronOptions};
pub use quotient::{quotient_matrix, QuotientView, EQUITABLE_TOLERANCE};

pub use crate::graph::VertexPartition;

use crate::error::Result;
use crate::graph::Graph;

/// `η₁(G)`, the largest eigenvalue of `Q(G)`.
pub fn dsl_radius(g: &Graph) -> Result<f64> {
    Ok(eigenvalues_symmetric(&dsl_matrix(g)?)?.radius())
}

/// Full spectrum of `Q(G)`, descending.
pub fn dsl_spectrum(g: &Graph) -> Result<Spectrum> {
    eigenvalues_symmetric(&dsl_matrix(g)?)
}
