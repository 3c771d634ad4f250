//! Simple undirected graphs stored as dense symmetric bit rows.
//!
//! Vertices are `0..order`. Graph values are immutable once built; all
//! constructions in [`families`] produce fresh graphs with deterministic
//! labels (the left operand of a join or union takes the lowest indices).

mod bipartition;
pub mod edgelist;
pub mod families;
pub mod graph6;
mod partition;

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

pub use bipartition::{two_coloring, Bipartition};
pub use edgelist::{parse_edge_list, to_edge_list};
pub use families::*;
pub use graph6::{parse_graph6, to_graph6};
pub use partition::VertexPartition;

/// Largest order any constructor accepts. Downstream algebra is dense.
pub const DEFAULT_ORDER_CAP: usize = 4096;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// `n` isolated vertices.
    pub fn empty(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        if order > DEFAULT_ORDER_CAP {
            return Err(Error::OrderTooLarge {
                order,
                cap: DEFAULT_ORDER_CAP,
            });
        }
        let words = order.div_ceil(64);
        Ok(Self {
            order,
            words,
            bits: vec![0; order * words],
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(order)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.insert(u, v);
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            });
        }
        Ok(())
    }

    // Callers guarantee u != v and both in range.
    pub(crate) fn insert(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.order && v < self.order);
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order
            && v < self.order
            && self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// The adjacency row of `v` as packed 64-bit words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let tz = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + tz)
            })
        })
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(Option::is_some)
    }
}

/// True iff one BFS from vertex 0 reaches every vertex.
pub fn is_connected(g: &Graph) -> bool {
    g.is_connected()
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
