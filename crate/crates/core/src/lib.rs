//! Distance signless Laplacian spectra of connected graphs, perfect-matching
//! oracles, and spectral thresholds that force perfect matchings.
//!
//! The crate is organised in layers:
//!
//! - [`graph`]: bitset graphs, graph6 and edge-list I/O, extremal families;
//! - [`spectral`]: distance matrices, `Q(G)`, Jacobi eigenvalues, Perron roots
//!   and equitable quotients;
//! - [`thresholds`]: integer threshold polynomials and their largest roots;
//! - [`matching`]: blossom, Hopcroft–Karp and Tutte/Hall witness scans;
//! - [`verifier`]: theorem checks, sweeps and reproducible campaigns.

pub mod error;
pub mod graph;
pub mod matching;
pub mod spectral;
pub mod thresholds;
pub mod verifier;

pub use error::{Error, Result};
pub use graph::{Bipartition, Graph, VertexPartition};
pub use matching::{MatchingResult, Witness, WitnessKind};
pub use spectral::{SquareMatrix, Spectrum};
