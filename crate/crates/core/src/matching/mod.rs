//! Maximum matchings and the brute-force Tutte/Hall oracles that certify
//! when no perfect matching exists.

mod blossom;
mod hopcroft_karp;

use itertools::Itertools;
use serde::Serialize;

pub use blossom::max_matching_general;
pub use hopcroft_karp::max_matching_bipartite;

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};

/// Default cap on the number of vertices an exhaustive subset scan may cover.
pub const DEFAULT_SUBSET_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingResult {
    /// Edges as `(u, v)` with `u < v`, sorted.
    pub matched_edges: Vec<(usize, usize)>,
    pub is_perfect: bool,
}

impl MatchingResult {
    pub(crate) fn new(g: &Graph, mut edges: Vec<(usize, usize)>) -> Self {
        edges.sort_unstable();
        let result = Self {
            is_perfect: 2 * edges.len() == g.order(),
            matched_edges: edges,
        };
        debug_assert!(result.is_valid_for(g), "matching is not valid for its graph");
        result
    }

    pub fn size(&self) -> usize {
        self.matched_edges.len()
    }

    /// Edges are present in `g` and pairwise vertex-disjoint.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.order()];
        self.matched_edges.iter().all(|&(u, v)| {
            if u >= g.order() || v >= g.order() || !g.has_edge(u, v) || used[u] || used[v] {
                return false;
            }
            used[u] = true;
            used[v] = true;
            true
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessKind {
    Tutte,
    Hall,
}

/// A vertex set certifying that no perfect matching (or no `X`-saturating
/// matching) exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub set_s: Vec<usize>,
    /// `o(G−S) − |S|` for Tutte, `|S| − |N(S)|` for Hall.
    pub deficiency: usize,
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    g.order() % 2 == 0 && max_matching_general(g).is_perfect
}

/// Number of odd components of `G − S`.
pub fn odd_components(g: &Graph, s: &[usize]) -> Result<usize> {
    let n = g.order();
    let mut seen = vec![false; n];
    for &v in s {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, order: n });
        }
        seen[v] = true;
    }
    let mut odd = 0;
    let mut stack = Vec::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        stack.push(root);
        let mut size = 0usize;
        while let Some(u) = stack.pop() {
            size += 1;
            for w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        odd += size % 2;
    }
    Ok(odd)
}

fn odd_components_masked(rows: &[u64], alive: u64) -> usize {
    let mut rest = alive;
    let mut odd = 0;
    while rest != 0 {
        let mut comp = rest & rest.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = rows[v] & alive & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        odd += (comp.count_ones() % 2) as usize;
        rest &= !comp;
    }
    odd
}

/// Smallest `S` (then lexicographically first) with `o(G−S) > |S|`.
pub fn tutte_violation(g: &Graph, subset_cap: usize) -> Result<Option<Witness>> {
    let n = g.order();
    let cap = subset_cap.min(63);
    if n > cap {
        return Err(Error::ScanCapExceeded { size: n, cap });
    }
    let rows: Vec<u64> = (0..n).map(|v| g.row(v)[0]).collect();
    let all = (1u64 << n) - 1;
    // o(G−S) ≤ n − |S|, so only |S| < n/2 can violate.
    for k in (0..n).take_while(|&k| 2 * k < n) {
        for s in (0..n).combinations(k) {
            let mask = s.iter().fold(0u64, |m, &v| m | 1 << v);
            let odd = odd_components_masked(&rows, all & !mask);
            if odd > k {
                return Ok(Some(Witness {
                    kind: WitnessKind::Tutte,
                    set_s: s,
                    deficiency: odd - k,
                }));
            }
        }
    }
    Ok(None)
}

/// Smallest `S ⊆ X` (then lexicographically first) with `|N(S)| < |S|`.
pub fn hall_violation(g: &Graph, b: &Bipartition) -> Result<Option<Witness>> {
    hall_violation_with_cap(g, b, DEFAULT_SUBSET_CAP)
}

pub fn hall_violation_with_cap(g: &Graph, b: &Bipartition, subset_cap: usize) -> Result<Option<Witness>> {
    let b = Bipartition::new(g, b.left().to_vec(), b.right().to_vec())?;
    let x = b.left();
    if x.len() > subset_cap {
        return Err(Error::ScanCapExceeded {
            size: x.len(),
            cap: subset_cap,
        });
    }
    let words = g.row(0).len();
    for k in 1..=x.len() {
        for s in x.iter().copied().combinations(k) {
            let mut nbhd = vec![0u64; words];
            for &v in &s {
                for (acc, w) in nbhd.iter_mut().zip(g.row(v)) {
                    *acc |= w;
                }
            }
            let reach = nbhd.iter().map(|w| w.count_ones() as usize).sum::<usize>();
            if reach < k {
                return Ok(Some(Witness {
                    kind: WitnessKind::Hall,
                    set_s: s,
                    deficiency: k - reach,
                }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_g4, build_g5, build_gamma, complete};
    use proptest::prelude::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
    }

    fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    fn complete_bipartite(a: usize, b: usize) -> (Graph, Bipartition) {
        let g = Graph::from_edges(a + b, (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y)))).unwrap();
        let bp = Bipartition::from_left(&g, (0..a).collect()).unwrap();
        (g, bp)
    }

    /// Largest matching by exhaustive edge-subset search.
    fn brute_force_matching_size(g: &Graph) -> usize {
        fn go(edges: &[(usize, usize)], used: u64) -> usize {
            match edges.split_first() {
                None => 0,
                Some((&(u, v), rest)) => {
                    let skip = go(rest, used);
                    if used & (1 << u | 1 << v) == 0 {
                        skip.max(1 + go(rest, used | 1 << u | 1 << v))
                    } else {
                        skip
                    }
                }
            }
        }
        go(&g.edges().collect::<Vec<_>>(), 0)
    }

    #[test]
    fn general_examples() {
        let k4 = max_matching_general(&complete(4).unwrap());
        assert!(k4.is_perfect);
        assert_eq!(k4.size(), 2);
        let s = max_matching_general(&star(3));
        assert_eq!(s.size(), 1);
        assert!(!s.is_perfect);
        let p = petersen();
        assert!(has_perfect_matching(&p));
        assert_eq!(brute_force_matching_size(&p), 5);
    }

    #[test]
    fn perfect_matching_examples() {
        assert!(has_perfect_matching(&cycle(6)));
        assert!(!has_perfect_matching(&cycle(5)));
        for n in (4..=20).step_by(2) {
            assert!(!has_perfect_matching(&build_g4(n).unwrap()));
        }
    }

    #[test]
    fn odd_component_examples() {
        assert_eq!(odd_components(&build_g4(6).unwrap(), &[0]).unwrap(), 3);
        assert_eq!(odd_components(&complete(6).unwrap(), &[]).unwrap(), 0);
        assert_eq!(odd_components(&build_g5(2).unwrap(), &[0, 1]).unwrap(), 4);
        assert!(odd_components(&complete(3).unwrap(), &[3]).is_err());
    }

    #[test]
    fn tutte_examples() {
        let w = tutte_violation(&star(3), DEFAULT_SUBSET_CAP).unwrap().unwrap();
        assert_eq!(w.kind, WitnessKind::Tutte);
        assert_eq!(w.set_s, vec![0]);
        assert_eq!(w.deficiency, 2);
        assert_eq!(tutte_violation(&complete(6).unwrap(), DEFAULT_SUBSET_CAP).unwrap(), None);
        let (gamma, _) = build_gamma(3, 2, 1).unwrap();
        assert!(tutte_violation(&gamma, DEFAULT_SUBSET_CAP).unwrap().is_some());
        let odd = tutte_violation(&complete(5).unwrap(), DEFAULT_SUBSET_CAP).unwrap().unwrap();
        assert!(odd.set_s.is_empty());
        assert!(matches!(
            tutte_violation(&complete(25).unwrap(), DEFAULT_SUBSET_CAP),
            Err(Error::ScanCapExceeded { size: 25, cap: 24 })
        ));
    }

    #[test]
    fn bipartite_examples() {
        let (k33, b) = complete_bipartite(3, 3);
        assert!(max_matching_bipartite(&k33, &b).unwrap().is_perfect);
        assert_eq!(hall_violation(&k33, &b).unwrap(), None);
        let (k23, b) = complete_bipartite(2, 3);
        assert_eq!(max_matching_bipartite(&k23, &b).unwrap().size(), 2);
        let (g, b) = build_gamma(3, 2, 1).unwrap();
        let m = max_matching_bipartite(&g, &b).unwrap();
        assert_eq!(m.size(), 2);
        assert_eq!(brute_force_matching_size(&g), 2);
    }

    #[test]
    fn hall_examples() {
        for n in 3..=8 {
            let (g, b) = build_gamma(n, n - 1, n - 2).unwrap();
            let w = hall_violation(&g, &b).unwrap().unwrap();
            assert_eq!(w.kind, WitnessKind::Hall);
            assert!(w.set_s.len() <= n - 1);
            assert!(w.deficiency >= 1);
        }
        let (g, b) = build_gamma(4, 3, 1).unwrap();
        let w = hall_violation(&g, &b).unwrap().unwrap();
        assert_eq!(w.set_s, vec![0, 1]);
        assert_eq!(w.deficiency, 1);
    }

    #[test]
    fn wrong_bipartition_rejected() {
        let (g, _) = complete_bipartite(2, 2);
        let bad = Bipartition::new(&Graph::empty(4).unwrap(), vec![0, 2], vec![1, 3]).unwrap();
        assert!(max_matching_bipartite(&g, &bad).is_err());
        assert!(hall_violation(&g, &bad).is_err());
    }

    proptest! {
        #[test]
        fn general_matches_brute_force(n in 1usize..=9, mask in any::<u64>()) {
            let pairs: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            let edges = pairs.iter().enumerate().filter(|&(i, _)| mask >> (i % 64) & 1 == 1).map(|(_, &e)| e);
            let g = Graph::from_edges(n, edges).unwrap();
            let m = max_matching_general(&g);
            prop_assert!(m.is_valid_for(&g));
            prop_assert_eq!(m.size(), brute_force_matching_size(&g));
        }

        #[test]
        fn bipartite_agrees_with_general(a in 1usize..=6, b in 1usize..=6, mask in any::<u64>()) {
            let pairs: Vec<_> = (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y))).collect();
            let edges = pairs.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            let g = Graph::from_edges(a + b, edges).unwrap();
            let bp = Bipartition::from_left(&g, (0..a).collect()).unwrap();
            let hk = max_matching_bipartite(&g, &bp).unwrap();
            prop_assert!(hk.is_valid_for(&g));
            prop_assert_eq!(hk.size(), max_matching_general(&g).size());
            prop_assert_eq!(hk.size() == a, hall_violation(&g, &bp).unwrap().is_none());
        }
    }
}
