//! Edmonds' blossom algorithm, O(V³) variant.
//!
//! One alternating-tree search per exposed vertex. Blossoms are contracted
//! implicitly through the `base` array; vertices whose base changes are
//! pushed back onto the queue as even vertices.

use std::collections::VecDeque;

use super::MatchingResult;
use crate::graph::Graph;

const NONE: usize = usize::MAX;

struct Search<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        Self {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lowest_common_base(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, stem: usize, mut child: usize) {
        while self.base[v] != stem {
            let m = self.mate[v];
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = child;
            child = m;
            v = self.parent[m];
        }
    }

    fn contract(&mut self, v: usize, w: usize) {
        let stem = self.lowest_common_base(v, w);
        self.in_blossom.iter_mut().for_each(|b| *b = false);
        self.mark_path(v, stem, w);
        self.mark_path(w, stem, v);
        for i in 0..self.g.order() {
            if self.in_blossom[self.base[i]] {
                self.base[i] = stem;
                if !self.in_tree[i] {
                    self.in_tree[i] = true;
                    self.queue.push_back(i);
                }
            }
        }
    }

    /// Returns the exposed endpoint of an augmenting path from `root`.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        self.in_tree.iter_mut().for_each(|b| *b = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.in_tree[root] = true;
        self.queue.push_back(root);
        let g = self.g;
        while let Some(v) = self.queue.pop_front() {
            for w in g.neighbors(v) {
                if self.base[v] == self.base[w] || self.mate[v] == w {
                    continue;
                }
                let w_is_even = w == root || (self.mate[w] != NONE && self.parent[self.mate[w]] != NONE);
                if w_is_even {
                    self.contract(v, w);
                } else if self.parent[w] == NONE {
                    self.parent[w] = v;
                    if self.mate[w] == NONE {
                        return Some(w);
                    }
                    let m = self.mate[w];
                    self.in_tree[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

/// Maximum-cardinality matching of a general graph.
pub fn max_matching_general(g: &Graph) -> MatchingResult {
    let mut search = Search::new(g);
    for root in 0..g.order() {
        if search.mate[root] == NONE {
            if let Some(end) = search.find_path(root) {
                search.augment(end);
            }
        }
    }
    let edges = search
        .mate
        .iter()
        .enumerate()
        .filter(|&(v, &m)| m != NONE && v < m)
        .map(|(v, &m)| (v, m))
        .collect();
    MatchingResult::new(g, edges)
}
