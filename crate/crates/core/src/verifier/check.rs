use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{build_g4, build_g5, build_gamma, to_graph6, Bipartition, Graph};
use crate::matching::{has_perfect_matching, max_matching_bipartite};
use crate::spectral::dsl_radius;
use crate::thresholds::{kappa, theorem1_threshold, Branch};

/// A graph this close to its threshold counts as at the threshold.
pub const CHECK_TOLERANCE: f64 = 1e-9;
/// Allowed `|η₁(extremal) − threshold|` at the extremal graphs.
pub const SHARPNESS_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Theorem {
    /// General graphs of even order against `θ(n)` or the split threshold.
    #[serde(rename = "1")]
    General,
    /// Balanced bipartite graphs against `κ(n)`.
    #[serde(rename = "2")]
    Bipartite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Consistent,
    Counterexample,
    /// Not below the threshold, so the theorem makes no claim.
    AboveThreshold,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::General => "1",
            Theorem::Bipartite => "2",
        })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Consistent => "consistent",
            Verdict::Counterexample => "counterexample",
            Verdict::AboveThreshold => "above-threshold",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    /// graph6 encoding of the checked graph.
    pub graph_id: String,
    pub eta1: f64,
    pub threshold: f64,
    pub below_threshold: bool,
    pub has_pm: bool,
    pub verdict: Verdict,
}

impl CheckReport {
    fn classify(g: &Graph, eta1: f64, threshold: f64, has_pm: bool, tol: f64) -> Result<Self> {
        let below_threshold = eta1 < threshold - tol;
        let verdict = if has_pm {
            Verdict::Consistent
        } else if below_threshold {
            Verdict::Counterexample
        } else {
            Verdict::AboveThreshold
        };
        Ok(Self {
            graph_id: to_graph6(g)?,
            eta1,
            threshold,
            below_threshold,
            has_pm,
            verdict,
        })
    }
}

pub fn check_theorem1(g: &Graph) -> Result<CheckReport> {
    check_theorem1_with(g, CHECK_TOLERANCE)
}

pub fn check_theorem1_with(g: &Graph, tol: f64) -> Result<CheckReport> {
    let n = g.order();
    if n % 2 == 1 || n < 4 {
        return Err(Error::InvalidParameters(format!(
            "theorem 1 needs an even order of at least 4, got {n}"
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let eta1 = dsl_radius(g)?;
    let threshold = theorem1_threshold(n)?.value;
    CheckReport::classify(g, eta1, threshold, has_perfect_matching(g), tol)
}

pub fn check_theorem2(g: &Graph, b: &Bipartition) -> Result<CheckReport> {
    check_theorem2_with(g, b, CHECK_TOLERANCE)
}

pub fn check_theorem2_with(g: &Graph, b: &Bipartition, tol: f64) -> Result<CheckReport> {
    if !b.is_balanced() {
        return Err(Error::InvalidBipartition(format!(
            "sides have sizes {} and {}",
            b.left().len(),
            b.right().len()
        )));
    }
    let side = b.left().len();
    if side < 3 {
        return Err(Error::InvalidParameters(format!(
            "theorem 2 needs side size at least 3, got {side}"
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let has_pm = max_matching_bipartite(g, b)?.is_perfect;
    let eta1 = dsl_radius(g)?;
    CheckReport::classify(g, eta1, kappa(side)?, has_pm, tol)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SharpnessPoint {
    pub theorem: Theorem,
    pub n: usize,
    pub eta1: f64,
    pub threshold: f64,
    /// `eta1 − threshold`.
    pub gap: f64,
    /// Whether the extremal graph has a perfect matching (it should not).
    pub has_pm: bool,
}

impl SharpnessPoint {
    pub fn is_sharp(&self, tol: f64) -> bool {
        self.gap.abs() <= tol && !self.has_pm
    }
}

/// The extremal graph for theorem 1 at even order `n`: `G⁗` on the `θ`
/// branch, `K_s ∨ K̄_{s+2}` with `s = n/2 − 1` on the split branch.
pub fn theorem1_extremal(n: usize) -> Result<Graph> {
    match theorem1_threshold(n)?.branch {
        Branch::Theta => build_g4(n),
        Branch::Split => build_g5(n / 2 - 1),
    }
}

pub fn sharpness_theorem1(n: usize) -> Result<SharpnessPoint> {
    let g = theorem1_extremal(n)?;
    let eta1 = dsl_radius(&g)?;
    let threshold = theorem1_threshold(n)?.value;
    Ok(SharpnessPoint {
        theorem: Theorem::General,
        n,
        eta1,
        threshold,
        gap: eta1 - threshold,
        has_pm: has_perfect_matching(&g),
    })
}

/// Compares `Γ_{n−1,n−2}` against `κ(n)`.
pub fn sharpness_theorem2(n: usize) -> Result<SharpnessPoint> {
    if n < 3 {
        return Err(Error::InvalidParameters(format!("side size must be at least 3, got {n}")));
    }
    let (g, b) = build_gamma(n, n - 1, n - 2)?;
    let eta1 = dsl_radius(&g)?;
    let threshold = kappa(n)?;
    Ok(SharpnessPoint {
        theorem: Theorem::Bipartite,
        n,
        eta1,
        threshold,
        gap: eta1 - threshold,
        has_pm: max_matching_bipartite(&g, &b)?.is_perfect,
    })
}
