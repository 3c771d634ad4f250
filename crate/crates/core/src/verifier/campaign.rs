use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use super::check::{
    check_theorem1_with, check_theorem2_with, sharpness_theorem1, sharpness_theorem2, CheckReport,
    SharpnessPoint, Verdict, CHECK_TOLERANCE, SHARPNESS_TOLERANCE,
};
use super::ordering::{ordering_suite, OrderingRanges, OrderingResult};
use super::sample::{
    enumerate_connected, enumerate_connected_bipartite, random_balanced_bipartite, random_connected,
    BIPARTITE_ENUMERATION_CAP, ENUMERATION_CAP,
};
use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RandomSweep {
    /// Orders (theorem 1) or side sizes (theorem 2); samples cycle through them.
    pub orders: Vec<usize>,
    pub samples: usize,
    #[serde(default = "default_probability")]
    pub p: f64,
}

fn default_probability() -> f64 {
    0.5
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Sweep {
    /// Orders (theorem 1) or side sizes (theorem 2) to enumerate exhaustively.
    #[serde(default)]
    pub exhaustive: Vec<usize>,
    #[serde(default)]
    pub random: Option<RandomSweep>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SharpnessRanges {
    #[serde(default)]
    pub theorem1: Vec<usize>,
    #[serde(default)]
    pub theorem2: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CampaignConfig {
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    #[serde(default = "default_sharpness_tolerance")]
    pub sharpness_tolerance: f64,
    #[serde(default)]
    pub theorem1: Option<Sweep>,
    #[serde(default)]
    pub theorem2: Option<Sweep>,
    #[serde(default)]
    pub sharpness: Option<SharpnessRanges>,
    #[serde(default)]
    pub orderings: Option<OrderingRanges>,
}

fn default_tolerance() -> f64 {
    CHECK_TOLERANCE
}

fn default_sharpness_tolerance() -> f64 {
    SHARPNESS_TOLERANCE
}

impl CampaignConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let config: Self = serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    /// Parses `key = value` lines. Keys are dotted paths into the JSON
    /// schema (`theorem1.random.samples = 100`); comma-separated values
    /// become lists, and `a..=b` expands to an inclusive range. Blank lines
    /// and `#` comments are skipped.
    pub fn from_key_values(text: &str) -> Result<Self> {
        let mut root = Map::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key = value", lineno + 1)))?;
            let path: Vec<&str> = key.trim().split('.').map(str::trim).collect();
            if path.iter().any(|p| p.is_empty()) {
                return Err(Error::Config(format!("line {}: empty key segment", lineno + 1)));
            }
            insert_path(&mut root, &path, parse_value(value.trim(), &path))
                .map_err(|e| Error::Config(format!("line {}: {e}", lineno + 1)))?;
        }
        let config: Self = serde_json::from_value(Value::Object(root)).map_err(|e| Error::Config(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    /// JSON when the text starts with `{`, key = value otherwise.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::from_json(text)
        } else {
            Self::from_key_values(text)
        }
    }

    pub fn validate(&self) -> Result<()> {
        let has_work = [&self.theorem1, &self.theorem2]
            .iter()
            .any(|s| s.as_ref().is_some_and(|s| !s.exhaustive.is_empty() || s.random.as_ref().is_some_and(|r| r.samples > 0)))
            || self
                .sharpness
                .as_ref()
                .is_some_and(|s| !s.theorem1.is_empty() || !s.theorem2.is_empty())
            || self
                .orderings
                .as_ref()
                .is_some_and(|o| !o.general.is_empty() || !o.bipartite.is_empty());
        if !has_work {
            return Err(Error::Config("no work specified".into()));
        }
        if !(self.tolerance > 0.0) || !(self.sharpness_tolerance > 0.0) {
            return Err(Error::Config("tolerances must be positive".into()));
        }
        if let Some(s) = &self.theorem1 {
            for &n in &s.exhaustive {
                if n > ENUMERATION_CAP {
                    return Err(Error::Config(format!(
                        "theorem1.exhaustive: order {n} exceeds the enumeration cap of {ENUMERATION_CAP}"
                    )));
                }
                check_theorem1_order(n, "theorem1.exhaustive")?;
            }
            if let Some(r) = &s.random {
                check_random(r, "theorem1.random")?;
                for &n in &r.orders {
                    check_theorem1_order(n, "theorem1.random.orders")?;
                }
            }
        }
        if let Some(s) = &self.theorem2 {
            for &n in &s.exhaustive {
                if n > BIPARTITE_ENUMERATION_CAP {
                    return Err(Error::Config(format!(
                        "theorem2.exhaustive: side {n} exceeds the enumeration cap of {BIPARTITE_ENUMERATION_CAP}"
                    )));
                }
                check_side(n, "theorem2.exhaustive")?;
            }
            if let Some(r) = &s.random {
                check_random(r, "theorem2.random")?;
                for &n in &r.orders {
                    check_side(n, "theorem2.random.orders")?;
                }
            }
        }
        if let Some(s) = &self.sharpness {
            for &n in &s.theorem1 {
                check_theorem1_order(n, "sharpness.theorem1")?;
            }
            for &n in &s.theorem2 {
                check_side(n, "sharpness.theorem2")?;
            }
        }
        Ok(())
    }
}

fn check_theorem1_order(n: usize, key: &str) -> Result<()> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::Config(format!("{key}: order {n} must be even and at least 4")));
    }
    Ok(())
}

fn check_side(n: usize, key: &str) -> Result<()> {
    if n < 3 {
        return Err(Error::Config(format!("{key}: side size {n} must be at least 3")));
    }
    Ok(())
}

fn check_random(r: &RandomSweep, key: &str) -> Result<()> {
    if r.samples > 0 && r.orders.is_empty() {
        return Err(Error::Config(format!("{key}: samples requested but no orders given")));
    }
    if !(r.p > 0.0 && r.p <= 1.0) {
        return Err(Error::Config(format!("{key}: p must lie in (0, 1]")));
    }
    Ok(())
}

const LIST_KEYS: [&str; 6] = ["exhaustive", "orders", "theorem1", "theorem2", "general", "bipartite"];

fn parse_value(text: &str, path: &[&str]) -> Value {
    let wants_list = path.len() > 1 && path.last().is_some_and(|k| LIST_KEYS.contains(k));
    if let Some((a, b)) = text.split_once("..=") {
        if let (Ok(a), Ok(b)) = (a.trim().parse::<u64>(), b.trim().parse::<u64>()) {
            return Value::Array((a..=b).map(Value::from).collect());
        }
    }
    if wants_list || text.contains(',') {
        return Value::Array(
            text.split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(scalar)
                .collect(),
        );
    }
    scalar(text)
}

fn scalar(text: &str) -> Value {
    if let Ok(v) = text.parse::<u64>() {
        return Value::from(v);
    }
    if let Ok(v) = text.parse::<f64>() {
        return Value::from(v);
    }
    match text {
        "true" => Value::Bool(true),
        "false" => Value::Bool(false),
        _ => Value::String(text.to_string()),
    }
}

fn insert_path(map: &mut Map<String, Value>, path: &[&str], value: Value) -> std::result::Result<(), String> {
    let (head, rest) = path.split_first().expect("non-empty path");
    if rest.is_empty() {
        map.insert(head.to_string(), value);
        return Ok(());
    }
    let entry = map
        .entry(head.to_string())
        .or_insert_with(|| Value::Object(Map::new()));
    match entry {
        Value::Object(inner) => insert_path(inner, rest, value),
        _ => Err(format!("key `{head}` is both a value and a section")),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignSummary {
    pub config: CampaignConfig,
    pub graphs_checked: usize,
    /// Sorted by graph6 string.
    pub counterexamples: Vec<CheckReport>,
    pub sharpness: Vec<SharpnessPoint>,
    pub orderings: Vec<OrderingResult>,
    /// Every per-graph report, sorted by graph6 string; kept only on request.
    #[serde(skip)]
    pub reports: Vec<CheckReport>,
}

impl CampaignSummary {
    pub fn sharpness_failures(&self) -> impl Iterator<Item = &SharpnessPoint> {
        let tol = self.config.sharpness_tolerance;
        self.sharpness.iter().filter(move |p| !p.is_sharp(tol))
    }

    /// No counterexamples, every extremal graph sharp, every ordering strict.
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
            && self.sharpness_failures().next().is_none()
            && self.orderings.iter().all(OrderingResult::holds)
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn write_reports_csv<W: Write>(&self, out: W) -> Result<()> {
        write_reports_csv(&self.reports, out)
    }
}

pub fn write_reports_csv<W: Write>(reports: &[CheckReport], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in reports {
        w.serialize(r).map_err(|e| Error::Config(e.to_string()))?;
    }
    w.flush().map_err(|e| Error::Config(e.to_string()))
}

/// Seed offsets keep the two random sweeps on disjoint streams.
const THEOREM2_STREAM: u64 = 1 << 40;

enum Job {
    General(Graph),
    Bipartite(Graph, Bipartition),
}

fn collect_jobs(config: &CampaignConfig) -> Result<Vec<Job>> {
    let mut jobs = Vec::new();
    if let Some(s) = &config.theorem1 {
        for &n in &s.exhaustive {
            jobs.extend(enumerate_connected(n)?.map(Job::General));
        }
        if let Some(r) = &s.random {
            let drawn = (0..r.samples)
                .into_par_iter()
                .map(|i| random_connected(r.orders[i % r.orders.len()], r.p, config.seed.wrapping_add(i as u64)))
                .collect::<Result<Vec<_>>>()?;
            jobs.extend(drawn.into_iter().map(Job::General));
        }
    }
    if let Some(s) = &config.theorem2 {
        for &n in &s.exhaustive {
            jobs.extend(enumerate_connected_bipartite(n)?.map(|(g, b)| Job::Bipartite(g, b)));
        }
        if let Some(r) = &s.random {
            let drawn = (0..r.samples)
                .into_par_iter()
                .map(|i| {
                    let seed = config.seed.wrapping_add(THEOREM2_STREAM).wrapping_add(i as u64);
                    random_balanced_bipartite(r.orders[i % r.orders.len()], r.p, seed)
                })
                .collect::<Result<Vec<_>>>()?;
            jobs.extend(drawn.into_iter().map(|(g, b)| Job::Bipartite(g, b)));
        }
    }
    Ok(jobs)
}

pub fn run_campaign(config: &CampaignConfig) -> Result<CampaignSummary> {
    run_campaign_with(config, false)
}

/// Runs every sweep in `config` on the current rayon pool. Output order is
/// independent of scheduling.
pub fn run_campaign_with(config: &CampaignConfig, keep_reports: bool) -> Result<CampaignSummary> {
    config.validate()?;
    let tol = config.tolerance;
    let jobs = collect_jobs(config)?;
    let mut reports = jobs
        .par_iter()
        .map(|job| match job {
            Job::General(g) => check_theorem1_with(g, tol),
            Job::Bipartite(g, b) => check_theorem2_with(g, b, tol),
        })
        .collect::<Result<Vec<_>>>()?;
    let graphs_checked = reports.len();
    reports.sort_by(|a, b| a.graph_id.cmp(&b.graph_id));
    let counterexamples: Vec<CheckReport> = reports
        .iter()
        .filter(|r| r.verdict == Verdict::Counterexample)
        .cloned()
        .collect();
    if !keep_reports {
        reports.clear();
    }

    let mut sharpness = Vec::new();
    if let Some(s) = &config.sharpness {
        for &n in &s.theorem1 {
            sharpness.push(sharpness_theorem1(n)?);
        }
        for &n in &s.theorem2 {
            sharpness.push(sharpness_theorem2(n)?);
        }
    }
    let orderings = match &config.orderings {
        Some(r) => ordering_suite(r)?,
        None => Vec::new(),
    };
    Ok(CampaignSummary {
        config: config.clone(),
        graphs_checked,
        counterexamples,
        sharpness,
        orderings,
        reports,
    })
}
