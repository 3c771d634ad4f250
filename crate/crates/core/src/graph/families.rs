//! Graph operations and the extremal families used by the matching
//! thresholds.
//!
//! Chained joins such as `K_s ∨ K_a ∨ K̄_b` are read as `K_s ∨ (K_a ∪ K̄_b)`:
//! the clique `K_s` is joined to everything, while `K_a` and `K̄_b` stay at
//! mutual distance two.

use super::{Bipartition, Graph, VertexPartition};
use crate::error::{Error, Result};

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

/// The complete graph `K_n`.
pub fn complete(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.insert(u, v);
        }
    }
    Ok(g)
}

/// `n` isolated vertices, the complement of `K_n`.
pub fn empty_graph(n: usize) -> Result<Graph> {
    Graph::empty(n)
}

fn union_shell(g: &Graph, h: &Graph) -> Result<Graph> {
    let offset = g.order();
    let mut out = Graph::empty(offset + h.order())?;
    for (u, v) in g.edges() {
        out.insert(u, v);
    }
    for (u, v) in h.edges() {
        out.insert(u + offset, v + offset);
    }
    Ok(out)
}

/// Disjoint union; `h`'s vertices are shifted by `g.order()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    union_shell(g, h)
}

/// Disjoint union plus every edge between the two vertex sets.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let mut out = union_shell(g, h)?;
    let offset = g.order();
    for u in 0..offset {
        for v in 0..h.order() {
            out.insert(u, v + offset);
        }
    }
    Ok(out)
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.order();
    let mut out = Graph::empty(n).expect("order already validated");
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                out.insert(u, v);
            }
        }
    }
    out
}

/// `K_s ∨ (K_{n₁} ∪ … ∪ K_{n_q})`. The clique occupies `0..s`, the parts
/// follow in the given order.
pub fn build_split_family(s: usize, parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(invalid("split family needs at least one part"));
    }
    if s == 0 || parts.contains(&0) {
        return Err(invalid("clique size and every part must be at least 1"));
    }
    let mut rest = complete(parts[0])?;
    for &p in &parts[1..] {
        rest = disjoint_union(&rest, &complete(p)?)?;
    }
    join(&complete(s)?, &rest)
}

fn check_even(n: usize, min: usize) -> Result<()> {
    if n % 2 == 1 || n < min {
        return Err(invalid(format!("order must be even and at least {min}, got {n}")));
    }
    Ok(())
}

/// `K_s ∨ (K_{n−s−q+1} ∪ K̄_{q−1})`: the split family with one big part and
/// `q − 1` singletons.
pub fn build_g2(n: usize, s: usize, q: usize) -> Result<Graph> {
    if s == 0 || q < 2 || n + 1 < s + q + 1 {
        return Err(invalid(format!(
            "build_g2 needs s ≥ 1, q ≥ 2 and n − s − q + 1 ≥ 1 (n={n}, s={s}, q={q})"
        )));
    }
    let mut parts = vec![n + 1 - s - q];
    parts.extend(std::iter::repeat_n(1, q - 1));
    build_split_family(s, &parts)
}

/// `K_s ∨ (K_{n−2s−1} ∪ K̄_{s+1})`, i.e. [`build_g2`] with `q = s + 2`.
pub fn build_g3(n: usize, s: usize) -> Result<Graph> {
    if s == 0 || n < 2 * s + 2 {
        return Err(invalid(format!("build_g3 needs s ≥ 1 and n ≥ 2s + 2 (n={n}, s={s})")));
    }
    build_g2(n, s, s + 2)
}

/// `K₁ ∨ (K_{n−3} ∪ K̄₂)`.
pub fn build_g4(n: usize) -> Result<Graph> {
    check_even(n, 4)?;
    build_g2(n, 1, 3)
}

/// `K_s ∨ K̄_{s+2}` on `2s + 2` vertices.
pub fn build_g5(s: usize) -> Result<Graph> {
    if s == 0 {
        return Err(invalid("build_g5 needs s ≥ 1"));
    }
    join(&complete(s)?, &empty_graph(s + 2)?)
}

/// `Γ_{s,k} = K_{n,n} − e(S, Y − N(S))`.
///
/// `X = 0..n` with `S = 0..s`; `Y = n..2n` with `N(S) = n..n+k`.
pub fn build_gamma(n: usize, s: usize, k: usize) -> Result<(Graph, Bipartition)> {
    if !(1 <= k && k < s && s < n) {
        return Err(invalid(format!(
            "build_gamma needs 1 ≤ k < s ≤ n − 1 (n={n}, s={s}, k={k})"
        )));
    }
    let mut g = Graph::empty(2 * n)?;
    for x in 0..n {
        for y in n..2 * n {
            let removed = x < s && y >= n + k;
            if !removed {
                g.insert(x, y);
            }
        }
    }
    let bip = Bipartition::new(&g, (0..n).collect(), (n..2 * n).collect())?;
    Ok((g, bip))
}

fn blocks(ranges: &[std::ops::Range<usize>]) -> Vec<Vec<usize>> {
    ranges.iter().map(|r| r.clone().collect()).collect()
}

/// Partition `(K̄_{q−1}, K_{n−s−q+1}, K_s)` of [`build_g2`].
pub fn g2_partition(n: usize, s: usize, q: usize) -> Result<VertexPartition> {
    build_g2(n, s, q)?;
    let big_end = n + 1 - q;
    VertexPartition::new(n, blocks(&[big_end..n, s..big_end, 0..s]))
}

/// Partition `(K_s, K_{n−2s−1}, K̄_{s+1})` of [`build_g3`] (and of
/// [`build_g4`] with `s = 1`).
pub fn g3_partition(n: usize, s: usize) -> Result<VertexPartition> {
    build_g3(n, s)?;
    let big_end = n - s - 1;
    VertexPartition::new(n, blocks(&[0..s, s..big_end, big_end..n]))
}

/// Partition `(K_s, K̄_{s+2})` of [`build_g5`].
pub fn g5_partition(s: usize) -> Result<VertexPartition> {
    let n = 2 * s + 2;
    VertexPartition::new(n, blocks(&[0..s, s..n]))
}

/// Partition `(S, X − S, N(S), Y − N(S))` of [`build_gamma`].
pub fn gamma_partition(n: usize, s: usize, k: usize) -> Result<VertexPartition> {
    build_gamma(n, s, k)?;
    VertexPartition::new(2 * n, blocks(&[0..s, s..n, n..n + k, n + k..2 * n]))
}
