//! Labeled enumeration and seeded random sampling of connected graphs.
//!
//! Random draws use xoshiro256++ seeded through splitmix64
//! (`Xoshiro256PlusPlus::seed_from_u64`). Each candidate edge is kept when
//! the next uniform `f64 = (x >> 11)·2⁻⁵³` is below `p`; pairs are visited
//! in `(i, j)`, `i < j` lexicographic order.

use rand::Rng;
use rand_xoshiro::rand_core::SeedableRng;
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};

/// Largest order [`enumerate_connected`] accepts.
pub const ENUMERATION_CAP: usize = 7;
/// Largest side size [`enumerate_connected_bipartite`] accepts.
pub const BIPARTITE_ENUMERATION_CAP: usize = 4;
/// Rejection-sampling budget per draw.
pub const MAX_ATTEMPTS: usize = 100_000;

pub type Rng64 = Xoshiro256PlusPlus;

pub fn rng(seed: u64) -> Rng64 {
    Xoshiro256PlusPlus::seed_from_u64(seed)
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn cross_pairs(side: usize) -> Vec<(usize, usize)> {
    (0..side).flat_map(|x| (side..2 * side).map(move |y| (x, y))).collect()
}

fn from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e);
    Graph::from_edges(n, edges).expect("pairs are in range")
}

/// Every labeled connected graph on `n` vertices, in edge-mask order.
pub fn enumerate_connected(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > ENUMERATION_CAP {
        return Err(Error::ScanCapExceeded {
            size: n,
            cap: ENUMERATION_CAP,
        });
    }
    let pairs = pairs(n);
    let masks = 1u64 << pairs.len();
    Ok((0..masks)
        .map(move |m| from_mask(n, &pairs, m))
        .filter(Graph::is_connected))
}

/// Every connected bipartite graph with `X = 0..side` and
/// `Y = side..2·side`, in edge-mask order.
pub fn enumerate_connected_bipartite(side: usize) -> Result<impl Iterator<Item = (Graph, Bipartition)>> {
    if side == 0 {
        return Err(Error::EmptyGraph);
    }
    if side > BIPARTITE_ENUMERATION_CAP {
        return Err(Error::ScanCapExceeded {
            size: side,
            cap: BIPARTITE_ENUMERATION_CAP,
        });
    }
    let pairs = cross_pairs(side);
    let masks = 1u64 << pairs.len();
    Ok((0..masks)
        .map(move |m| from_mask(2 * side, &pairs, m))
        .filter(Graph::is_connected)
        .map(move |g| {
            let b = Bipartition::from_left(&g, (0..side).collect()).expect("cross edges only");
            (g, b)
        }))
}

fn check_probability(p: f64) -> Result<()> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::InvalidParameters(format!(
            "edge probability must lie in (0, 1], got {p}"
        )));
    }
    Ok(())
}

fn draw_connected(n: usize, pairs: &[(usize, usize)], p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    let mut rng = rng(seed);
    for _ in 0..MAX_ATTEMPTS {
        let edges: Vec<_> = pairs.iter().copied().filter(|_| rng.random::<f64>() < p).collect();
        let g = Graph::from_edges(n, edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::AttemptsExhausted {
        attempts: MAX_ATTEMPTS,
    })
}

/// Erdős–Rényi `G(n, p)` conditioned on connectivity by rejection.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    Graph::empty(n)?;
    draw_connected(n, &pairs(n), p, seed)
}

/// Random connected bipartite graph with sides `0..n` and `n..2n`; only
/// cross edges are drawn.
pub fn random_balanced_bipartite(n: usize, p: f64, seed: u64) -> Result<(Graph, Bipartition)> {
    Graph::empty(2 * n)?;
    let g = draw_connected(2 * n, &cross_pairs(n), p, seed)?;
    let b = Bipartition::from_left(&g, (0..n).collect())?;
    Ok((g, b))
}
