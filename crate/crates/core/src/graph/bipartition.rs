use std::collections::VecDeque;

use super::Graph;
use crate::error::{Error, Result};

/// A side assignment `(X, Y)` for a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    left: Vec<usize>,
    right: Vec<usize>,
}

impl Bipartition {
    /// Validates that `left`/`right` split the vertices and that every edge
    /// crosses between them. Both sides are stored sorted.
    pub fn new(g: &Graph, mut left: Vec<usize>, mut right: Vec<usize>) -> Result<Self> {
        let n = g.order();
        let mut side = vec![None; n];
        for (label, set) in [(0u8, &left), (1u8, &right)] {
            for &v in set {
                if v >= n {
                    return Err(Error::InvalidBipartition(format!("vertex {v} out of range")));
                }
                if side[v].replace(label).is_some() {
                    return Err(Error::InvalidBipartition(format!("vertex {v} listed twice")));
                }
            }
        }
        if let Some(v) = side.iter().position(Option::is_none) {
            return Err(Error::InvalidBipartition(format!("vertex {v} is on neither side")));
        }
        if let Some((u, v)) = g.edges().find(|&(u, v)| side[u] == side[v]) {
            return Err(Error::InvalidBipartition(format!(
                "edge {u}-{v} lies inside one side"
            )));
        }
        left.sort_unstable();
        right.sort_unstable();
        Ok(Self { left, right })
    }

    /// `X = left`, `Y` = everything else.
    pub fn from_left(g: &Graph, left: Vec<usize>) -> Result<Self> {
        let mut in_left = vec![false; g.order()];
        for &v in &left {
            if v < g.order() {
                in_left[v] = true;
            }
        }
        let right = (0..g.order()).filter(|&v| !in_left[v]).collect();
        Self::new(g, left, right)
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn right(&self) -> &[usize] {
        &self.right
    }

    pub fn is_balanced(&self) -> bool {
        self.left.len() == self.right.len()
    }
}

/// BFS 2-coloring. Each component is rooted at its smallest vertex, which
/// goes to the left side, so vertex 0 is always in `X`.
pub fn two_coloring(g: &Graph) -> Result<Bipartition> {
    let n = g.order();
    let mut color: Vec<Option<bool>> = vec![None; n];
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap_or(false);
            for v in g.neighbors(u) {
                match color[v] {
                    None => {
                        color[v] = Some(!cu);
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => {
                        return Err(Error::InvalidBipartition(format!(
                            "graph is not bipartite (odd cycle through edge {u}-{v})"
                        )));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let left = (0..n).filter(|&v| color[v] == Some(false)).collect();
    let right = (0..n).filter(|&v| color[v] == Some(true)).collect();
    Bipartition::new(g, left, right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_gamma, complete};

    #[test]
    fn coloring_of_gamma_recovers_sides() {
        let (g, b) = build_gamma(4, 3, 2).unwrap();
        let c = two_coloring(&g).unwrap();
        assert_eq!(c, b);
        assert!(c.is_balanced());
    }

    #[test]
    fn odd_cycle_rejected() {
        assert!(two_coloring(&complete(3).unwrap()).is_err());
    }

    #[test]
    fn inconsistent_sides_rejected() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(Bipartition::new(&g, vec![0, 1], vec![2, 3]).is_err());
        assert!(Bipartition::new(&g, vec![0, 2], vec![1]).is_err());
        assert!(Bipartition::new(&g, vec![0, 2], vec![1, 3, 2]).is_err());
        let ok = Bipartition::from_left(&g, vec![2, 0]).unwrap();
        assert_eq!(ok.left(), &[0, 2]);
        assert_eq!(ok.right(), &[1, 3]);
    }
}
