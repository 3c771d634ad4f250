use std::collections::VecDeque;

use super::MatchingResult;
use crate::error::Result;
use crate::graph::{Bipartition, Graph};

const NONE: usize = usize::MAX;

struct HopcroftKarp {
    adj: Vec<Vec<usize>>,
    mate_left: Vec<usize>,
    mate_right: Vec<usize>,
    layer: Vec<usize>,
}

impl HopcroftKarp {
    /// Layers free left vertices at 0; returns whether a free right vertex
    /// is reachable.
    fn bfs(&mut self) -> bool {
        let mut queue = VecDeque::new();
        for (u, layer) in self.layer.iter_mut().enumerate() {
            if self.mate_left[u] == NONE {
                *layer = 0;
                queue.push_back(u);
            } else {
                *layer = NONE;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &r in &self.adj[u] {
                match self.mate_right[r] {
                    NONE => found = true,
                    m if self.layer[m] == NONE => {
                        self.layer[m] = self.layer[u] + 1;
                        queue.push_back(m);
                    }
                    _ => {}
                }
            }
        }
        found
    }

    fn dfs(&mut self, u: usize) -> bool {
        for i in 0..self.adj[u].len() {
            let r = self.adj[u][i];
            let m = self.mate_right[r];
            if m == NONE || (self.layer[m] == self.layer[u] + 1 && self.dfs(m)) {
                self.mate_left[u] = r;
                self.mate_right[r] = u;
                return true;
            }
        }
        self.layer[u] = NONE;
        false
    }
}

/// Maximum matching of a bipartite graph by layered augmentation.
pub fn max_matching_bipartite(g: &Graph, b: &Bipartition) -> Result<MatchingResult> {
    let b = Bipartition::new(g, b.left().to_vec(), b.right().to_vec())?;
    let mut right_index = vec![NONE; g.order()];
    for (i, &y) in b.right().iter().enumerate() {
        right_index[y] = i;
    }
    let adj: Vec<Vec<usize>> = b
        .left()
        .iter()
        .map(|&x| g.neighbors(x).map(|y| right_index[y]).collect())
        .collect();
    let mut hk = HopcroftKarp {
        mate_left: vec![NONE; adj.len()],
        mate_right: vec![NONE; b.right().len()],
        layer: vec![NONE; adj.len()],
        adj,
    };
    while hk.bfs() {
        for u in 0..hk.adj.len() {
            if hk.mate_left[u] == NONE {
                hk.dfs(u);
            }
        }
    }
    let edges = hk
        .mate_left
        .iter()
        .enumerate()
        .filter(|&(_, &r)| r != NONE)
        .map(|(u, &r)| {
            let (x, y) = (b.left()[u], b.right()[r]);
            (x.min(y), x.max(y))
        })
        .collect();
    Ok(MatchingResult::new(g, edges))
}
