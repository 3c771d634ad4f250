//! Numerical checks of the strict spectral-radius orderings between the
//! intermediate extremal families.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{build_g2, build_g3, build_g4, build_gamma, build_split_family, Graph};
use crate::spectral::dsl_radius;

/// A claimed strict inequality holds when its margin exceeds this.
pub const ORDERING_MARGIN: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderingRanges {
    /// Even orders for the general-graph chain.
    #[serde(default)]
    pub general: Vec<usize>,
    /// Side sizes for the bipartite chain.
    #[serde(default)]
    pub bipartite: Vec<usize>,
}

impl Default for OrderingRanges {
    fn default() -> Self {
        Self {
            general: (4..=16).step_by(2).collect(),
            bipartite: (3..=10).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrderingResult {
    pub claim: String,
    pub checked: usize,
    pub violations: usize,
    /// Smallest `larger − smaller` seen; `None` when nothing was checked.
    pub min_margin: Option<f64>,
    /// Parameters at the smallest margin.
    pub tightest: Option<String>,
}

impl OrderingResult {
    pub fn holds(&self) -> bool {
        self.violations == 0
    }
}

/// One comparison: `smaller` is claimed to have strictly smaller `η₁`.
struct Instance {
    label: String,
    smaller: Graph,
    larger: Graph,
}

fn evaluate(claim: &str, instances: Vec<Instance>) -> Result<OrderingResult> {
    let margins = instances
        .par_iter()
        .map(|i| Ok((dsl_radius(&i.larger)? - dsl_radius(&i.smaller)?, i.label.as_str())))
        .collect::<Result<Vec<_>>>()?;
    let tightest = margins
        .iter()
        .min_by(|a, b| a.0.total_cmp(&b.0));
    Ok(OrderingResult {
        claim: claim.to_string(),
        checked: margins.len(),
        violations: margins.iter().filter(|(m, _)| *m <= ORDERING_MARGIN).count(),
        min_margin: tightest.map(|t| t.0),
        tightest: tightest.map(|t| t.1.to_string()),
    })
}

/// Partitions of `total` into exactly `parts` odd parts, non-increasing.
pub fn odd_partitions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(total: usize, parts: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if total == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        if total < parts {
            return;
        }
        let mut p = max.min(total - (parts - 1));
        if p % 2 == 0 {
            p -= 1;
        }
        while p >= 1 {
            prefix.push(p);
            go(total - p, parts - 1, p, prefix, out);
            prefix.pop();
            if p < 2 {
                break;
            }
            p -= 2;
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        go(total, parts, total, &mut Vec::new(), &mut out);
    }
    out
}

/// `η₁(G″) < η₁(G′)` whenever the odd parts of `G′` are not already one
/// big part plus singletons.
fn merge_parts(ns: &[usize]) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for &n in ns {
        for s in 1..n {
            for q in (s + 2..=n - s).step_by(2) {
                for parts in odd_partitions(n - s, q) {
                    if parts[1] < 3 {
                        continue;
                    }
                    out.push(Instance {
                        label: format!("n={n} s={s} parts={parts:?}"),
                        smaller: build_g2(n, s, q)?,
                        larger: build_split_family(s, &parts)?,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// `η₁(G‴) < η₁(G″)` for `q ≥ s + 4`.
fn fewer_singletons(ns: &[usize]) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for &n in ns {
        for s in 1..n {
            for q in (s + 4..=n - s).step_by(2) {
                out.push(Instance {
                    label: format!("n={n} s={s} q={q}"),
                    smaller: build_g3(n, s)?,
                    larger: build_g2(n, s, q)?,
                });
            }
        }
    }
    Ok(out)
}

/// `η₁(G⁗) < η₁(G‴)` for `s ≥ 2`, `n ≥ 2s + 4`.
fn smallest_cut(ns: &[usize]) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for &n in ns {
        for s in (2..n).take_while(|&s| n >= 2 * s + 4) {
            out.push(Instance {
                label: format!("n={n} s={s}"),
                smaller: build_g4(n)?,
                larger: build_g3(n, s)?,
            });
        }
    }
    Ok(out)
}

/// `η₁(Γ_{s,s−1}) < η₁(Γ_{s,k})` for `1 ≤ k ≤ s − 2`.
fn widest_neighbourhood(ns: &[usize]) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for &n in ns {
        for s in 3..n {
            for k in 1..=s - 2 {
                out.push(Instance {
                    label: format!("n={n} s={s} k={k}"),
                    smaller: build_gamma(n, s, s - 1)?.0,
                    larger: build_gamma(n, s, k)?.0,
                });
            }
        }
    }
    Ok(out)
}

/// `η₁(Γ_{n−1,n−2}) < η₁(Γ_{s,s−1})` for `2 ≤ s ≤ n − 2`.
fn largest_deficient_set(ns: &[usize]) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for &n in ns {
        for s in (2..=n.saturating_sub(2)).filter(|_| n >= 4) {
            out.push(Instance {
                label: format!("n={n} s={s}"),
                smaller: build_gamma(n, n - 1, n - 2)?.0,
                larger: build_gamma(n, s, s - 1)?.0,
            });
        }
    }
    Ok(out)
}

pub const CLAIMS: [&str; 5] = [
    "eta1(G'') < eta1(G')",
    "eta1(G''') < eta1(G'') for q >= s+4",
    "eta1(G'''') < eta1(G''') for s >= 2, n >= 2s+4",
    "eta1(Gamma_{s,s-1}) < eta1(Gamma_{s,k}) for k <= s-2",
    "eta1(Gamma_{n-1,n-2}) < eta1(Gamma_{s,s-1}) for 2 <= s <= n-2",
];

/// Every claim, in the order of [`CLAIMS`].
pub fn ordering_suite(ranges: &OrderingRanges) -> Result<Vec<OrderingResult>> {
    let general = ranges.general.iter().copied().filter(|n| n % 2 == 0).collect::<Vec<_>>();
    let bipartite = &ranges.bipartite;
    Ok(vec![
        evaluate(CLAIMS[0], merge_parts(&general)?)?,
        evaluate(CLAIMS[1], fewer_singletons(&general)?)?,
        evaluate(CLAIMS[2], smallest_cut(&general)?)?,
        evaluate(CLAIMS[3], widest_neighbourhood(bipartite)?)?,
        evaluate(CLAIMS[4], largest_deficient_set(bipartite)?)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_partition_listing() {
        assert_eq!(odd_partitions(10, 4), vec![vec![7, 1, 1, 1], vec![5, 3, 1, 1], vec![3, 3, 3, 1]]);
        assert_eq!(odd_partitions(5, 1), vec![vec![5]]);
        assert!(odd_partitions(6, 1).is_empty());
        assert!(odd_partitions(3, 0).is_empty());
    }

    #[test]
    fn spec_instances() {
        let r = |g: &Graph| dsl_radius(g).unwrap();
        assert!(r(&build_g2(12, 2, 4).unwrap()) < r(&build_split_family(2, &[3, 3, 3, 1]).unwrap()));
        assert!(r(&build_gamma(5, 3, 2).unwrap().0) < r(&build_gamma(5, 3, 1).unwrap().0));
        assert!(r(&build_g4(12).unwrap()) < r(&build_g3(12, 2).unwrap()));
    }

    #[test]
    fn general_chain_holds() {
        let ranges = OrderingRanges {
            general: vec![6, 8, 10],
            bipartite: vec![],
        };
        let results = ordering_suite(&ranges).unwrap();
        for r in &results[..3] {
            assert!(r.checked > 0, "{}", r.claim);
            assert!(r.holds(), "{r:?}");
        }
        assert_eq!(results[3].checked, 0);
        assert_eq!(results[3].min_margin, None);
    }

    // Γ_{2,1} and Γ_{n−1,n−2} are isomorphic (swap the sides), so the last
    // claim is an equality at s = 2.
    #[test]
    fn gamma_endpoint_is_an_equality() {
        for n in 4..=8 {
            let a = dsl_radius(&build_gamma(n, 2, 1).unwrap().0).unwrap();
            let b = dsl_radius(&build_gamma(n, n - 1, n - 2).unwrap().0).unwrap();
            assert!((a - b).abs() < 1e-9);
        }
    }
}
