//! Acceptance gate. Prints one PASS/FAIL line per criterion followed by
//! indented detail lines, and exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use dslq_core::graph::{
    build_g2, build_g4, build_g5, build_gamma, complete, g2_partition, g3_partition, g5_partition, gamma_partition,
    parse_graph6, to_graph6, Bipartition, Graph, VertexPartition,
};
use dslq_core::matching::{
    has_perfect_matching, hall_violation, max_matching_bipartite, max_matching_general, tutte_violation,
    DEFAULT_SUBSET_CAP,
};
use dslq_core::spectral::{dsl_matrix, dsl_radius, perron_root, quotient_matrix, rayleigh};
use dslq_core::thresholds::{
    kappa, largest_real_root, phi, poly_h, poly_h_tilde, psi, split_threshold, theta, Polynomial,
};
use dslq_core::verifier::{
    enumerate_connected, enumerate_connected_bipartite, ordering_suite, random_balanced_bipartite,
    random_connected, run_campaign, rng, CampaignConfig, OrderingRanges, RandomSweep, Sweep,
};
use rand::Rng;
use rayon::prelude::*;

struct Outcome {
    pass: bool,
    details: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Self {
            pass: true,
            details: Vec::new(),
        }
    }

    /// Records a sub-check; any false sub-check fails the criterion.
    fn check(&mut self, ok: bool, line: impl Into<String>) {
        self.pass &= ok;
        let mark = if ok { "ok  " } else { "FAIL" };
        self.details.push(format!("{mark} {}", line.into()));
    }

    fn note(&mut self, line: impl Into<String>) {
        self.details.push(format!("     {}", line.into()));
    }

    fn runtime(&mut self, start: Instant, budget: Duration) {
        let took = start.elapsed();
        self.check(took < budget, format!("runtime {took:.2?} (budget {budget:?})"));
    }
}

fn criterion_1() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let t4 = theta(4).unwrap();
    let exact = 6.0 + 2.0 * 3f64.sqrt();
    o.check((t4 - exact).abs() <= 1e-9, format!("theta(4) = {t4:.12} vs 6+2*sqrt(3) = {exact:.12}"));
    for (n, expected) in [(6, 15.4597), (8, 20.8655), (10, 26.0148)] {
        let t = theta(n).unwrap();
        o.check((t - expected).abs() <= 5e-4, format!("theta({n}) = {t:.6} vs {expected} +- 5e-4"));
    }
    o.runtime(start, Duration::from_millis(100));
    o
}

fn criterion_2() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    for n in [4, 12, 14, 16, 18, 20] {
        let g = build_g4(n).unwrap();
        let (eta, t) = (dsl_radius(&g).unwrap(), theta(n).unwrap());
        o.check((eta - t).abs() <= 1e-6, format!("n={n}: eta1(G4) = {eta:.10}, theta = {t:.10}, gap {:.2e}", eta - t));
        o.check(!has_perfect_matching(&g), format!("n={n}: G4 has no perfect matching"));
    }
    for n in [6, 8, 10] {
        let g = build_g5(n / 2 - 1).unwrap();
        let (eta, t) = (dsl_radius(&g).unwrap(), split_threshold(n));
        o.check((eta - t).abs() <= 1e-6, format!("n={n}: eta1(G5) = {eta:.10}, split = {t:.10}, gap {:.2e}", eta - t));
        o.check(!has_perfect_matching(&g), format!("n={n}: G5 has no perfect matching"));
    }
    o.runtime(start, Duration::from_secs(1));
    o
}

/// Largest root of the characteristic polynomial of the 4×4 equitable
/// quotient that `Γ_{n−1,n−2}` actually has.
fn measured_quartic_root(n: usize) -> f64 {
    let n = n as f64;
    let p = Polynomial::new(vec![
        1.0,
        14.0 - 18.0 * n,
        119.0 * n * n - 214.0 * n + 96.0,
        -(342.0 * n.powi(3) - 1012.0 * n * n + 1016.0 * n - 352.0),
        360.0 * n.powi(4) - 1512.0 * n.powi(3) + 2432.0 * n * n - 1792.0 * n + 512.0,
    ])
    .unwrap();
    largest_real_root(&p, None).unwrap()
}

fn criterion_3() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    for n in 3..=12 {
        let (g, b) = build_gamma(n, n - 1, n - 2).unwrap();
        let eta = dsl_radius(&g).unwrap();
        let k = kappa(n).unwrap();
        o.check(
            (eta - k).abs() <= 1e-6,
            format!("n={n}: eta1(Gamma) = {eta:.10}, kappa = {k:.10}, gap {:.4e}", eta - k),
        );
        o.check(hall_violation(&g, &b).unwrap().is_some(), format!("n={n}: Gamma fails Hall's condition"));
        let q = dsl_matrix(&g).unwrap();
        let mean = rayleigh(&q, &vec![1.0; 2 * n]).unwrap();
        let nf = n as f64;
        o.note(format!(
            "n={n}: quotient quartic root {:.10}; 1'Q1/2n = {mean:.6} (6n+4-8/n = {:.6}, printed 6n+4-4/n = {:.6})",
            measured_quartic_root(n),
            6.0 * nf + 4.0 - 8.0 / nf,
            6.0 * nf + 4.0 - 4.0 / nf
        ));
    }
    o.runtime(start, Duration::from_secs(1));
    o
}

fn criterion_4() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let sweeps: [(&str, CampaignConfig); 4] = [
        ("theorem 1, exhaustive n = 4, 6", CampaignConfig {
            theorem1: Some(Sweep { exhaustive: vec![4, 6], random: None }),
            ..base_config()
        }),
        ("theorem 2, exhaustive side 3", CampaignConfig {
            theorem2: Some(Sweep { exhaustive: vec![3], random: None }),
            ..base_config()
        }),
        ("theorem 1, 10^4 random, n = 4..10", CampaignConfig {
            theorem1: Some(Sweep {
                exhaustive: vec![],
                random: Some(RandomSweep { orders: vec![4, 6, 8, 10], samples: 10_000, p: 0.5 }),
            }),
            ..base_config()
        }),
        ("theorem 2, 10^4 random, side 3..6", CampaignConfig {
            theorem2: Some(Sweep {
                exhaustive: vec![],
                random: Some(RandomSweep { orders: vec![3, 4, 5, 6], samples: 10_000, p: 0.5 }),
            }),
            ..base_config()
        }),
    ];
    for (label, config) in sweeps {
        let summary = run_campaign(&config).unwrap();
        let bad = &summary.counterexamples;
        o.check(
            bad.is_empty(),
            format!("{label}: {} graphs, {} counterexamples", summary.graphs_checked, bad.len()),
        );
        let mut distinct: Vec<(usize, String, f64, f64)> = Vec::new();
        for r in bad {
            let order = parse_graph6(&r.graph_id).unwrap().order();
            if !distinct.iter().any(|d| d.0 == order && (d.2 - r.eta1).abs() < 1e-9) {
                distinct.push((order, r.graph_id.clone(), r.eta1, r.threshold));
            }
        }
        for (order, id, eta, t) in distinct {
            o.note(format!("order {order}: e.g. {id}, eta1 = {eta:.8} < threshold {t:.8}, no perfect matching"));
        }
    }
    o.runtime(start, Duration::from_secs(60));
    o
}

fn base_config() -> CampaignConfig {
    CampaignConfig {
        seed: 20240601,
        tolerance: 1e-9,
        sharpness_tolerance: 1e-6,
        theorem1: None,
        theorem2: None,
        sharpness: None,
        orderings: None,
    }
}

fn criterion_5() -> Outcome {
    let mut o = Outcome::new();
    let mut general: Vec<Graph> = [2, 4, 6].iter().flat_map(|&n| enumerate_connected(n).unwrap()).collect();
    let exhaustive = general.len();
    general.extend(
        (0..10_000u64)
            .into_par_iter()
            .map(|i| random_connected(8 + (i % 3) as usize, 0.4, 7_000_000 + i).unwrap())
            .collect::<Vec<_>>(),
    );
    let disagreements = general
        .par_iter()
        .filter(|g| has_perfect_matching(g) != tutte_violation(g, DEFAULT_SUBSET_CAP).unwrap().is_none())
        .count();
    o.check(
        disagreements == 0,
        format!(
            "blossom vs Tutte scan: {} graphs ({exhaustive} exhaustive n = 2, 4, 6; 10^4 random n = 8..10), {disagreements} disagreements",
            general.len()
        ),
    );

    let mut bipartite: Vec<(Graph, Bipartition)> = (1..=4).flat_map(|s| enumerate_connected_bipartite(s).unwrap()).collect();
    let exhaustive = bipartite.len();
    bipartite.extend(
        (0..10_000u64)
            .into_par_iter()
            .map(|i| random_balanced_bipartite(3 + (i % 4) as usize, 0.4, 9_000_000 + i).unwrap())
            .collect::<Vec<_>>(),
    );
    let (hall_bad, size_bad) = bipartite
        .par_iter()
        .map(|(g, b)| {
            let hk = max_matching_bipartite(g, b).unwrap();
            let saturates = hk.size() == b.left().len();
            let hall = saturates != hall_violation(g, b).unwrap().is_none();
            let size = hk.size() != max_matching_general(g).size();
            (hall as usize, size as usize)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    o.check(
        hall_bad == 0,
        format!(
            "Hopcroft-Karp vs Hall scan: {} graphs ({exhaustive} exhaustive side 1..4; 10^4 random side 3..6), {hall_bad} disagreements",
            bipartite.len()
        ),
    );
    o.check(size_bad == 0, format!("Hopcroft-Karp vs blossom cardinality: {size_bad} disagreements"));
    o
}

fn quotient_identity(o: &mut Outcome, label: String, g: &Graph, p: &VertexPartition) {
    let q = dsl_matrix(g).unwrap();
    let view = quotient_matrix(&q, p).unwrap();
    let rho = perron_root(&view.matrix).unwrap();
    let eta = dsl_radius(g).unwrap();
    o.check(
        view.equitable && (rho - eta).abs() <= 1e-8,
        format!("{label}: equitable={}, |perron - eta1| = {:.2e}", view.equitable, (rho - eta).abs()),
    );
}

fn criterion_6() -> Outcome {
    let mut o = Outcome::new();
    for n in [4, 12, 14, 16, 18, 20] {
        quotient_identity(&mut o, format!("G4 n={n}"), &build_g4(n).unwrap(), &g3_partition(n, 1).unwrap());
    }
    for n in [6, 8, 10] {
        let s = n / 2 - 1;
        quotient_identity(&mut o, format!("G5 n={n}"), &build_g5(s).unwrap(), &g5_partition(s).unwrap());
    }
    for n in 3..=12 {
        let (g, _) = build_gamma(n, n - 1, n - 2).unwrap();
        quotient_identity(&mut o, format!("Gamma_{{n-1,n-2}} n={n}"), &g, &gamma_partition(n, n - 1, n - 2).unwrap());
    }
    let mut all_equitable = true;
    let mut count = 0;
    for n in (4..=16).step_by(2) {
        for s in 1..n {
            for q in (s + 2..=n - s).step_by(2) {
                let p = g2_partition(n, s, q).unwrap();
                let view = quotient_matrix(&dsl_matrix(&build_g2(n, s, q).unwrap()).unwrap(), &p).unwrap();
                all_equitable &= view.equitable;
                count += 1;
            }
        }
    }
    for n in 3..=10 {
        for s in 2..n {
            for k in 1..s {
                let p = gamma_partition(n, s, k).unwrap();
                let view = quotient_matrix(&dsl_matrix(&build_gamma(n, s, k).unwrap().0).unwrap(), &p).unwrap();
                all_equitable &= view.equitable;
                count += 1;
            }
        }
    }
    o.check(all_equitable, format!("every family partition equitable ({count} instances of G'' and Gamma_{{s,k}})"));
    o
}

fn criterion_7() -> Outcome {
    let mut o = Outcome::new();
    let h_ok = (3..=50).all(|n| poly_h(n, n - 1).unwrap() == poly_h_tilde(n).unwrap());
    o.check(h_ok, "h(n, n-1) = h~(n) coefficientwise for n = 3..50");

    let p31 = phi(3, 1).unwrap();
    o.check((p31 - 414.17).abs() <= 1.0, format!("phi(3,1) = {p31:.4} vs 414.17 +- 1.0"));

    let psi_ok = (3..=100).all(|n| (1..n).all(|s| psi(n, s).unwrap() > 0.0));
    o.check(psi_ok, "psi(n,s) > 0 for n = 3..100, 1 <= s <= n-1");
    let kappa_ok = (3..=100).all(|n| kappa(n).unwrap() > 6.0 * n as f64);
    o.check(kappa_ok, "kappa(n) > 6n for n = 3..100");

    let below: Vec<usize> = (6..=100).step_by(2).filter(|&n| split_threshold(n) < theta(n).unwrap()).collect();
    o.check(below == vec![6, 8, 10], format!("split threshold below theta exactly for n in {below:?}"));

    let phis: Vec<f64> = (3..=100).map(|n| phi(n, 1).unwrap()).collect();
    o.check(phis.windows(2).all(|w| w[0] < w[1]), "phi(n,1) strictly increasing for n = 3..100");

    let ranges = OrderingRanges::default();
    o.note(format!("ordering ranges: general n in {:?}, bipartite n in {:?}", ranges.general, ranges.bipartite));
    for r in ordering_suite(&ranges).unwrap() {
        o.check(
            r.holds(),
            format!(
                "{}: {} checked, {} violations, min margin {:.3e} at {}",
                r.claim,
                r.checked,
                r.violations,
                r.min_margin.unwrap_or(f64::NAN),
                r.tightest.as_deref().unwrap_or("-")
            ),
        );
    }
    o
}

fn criterion_8() -> Outcome {
    let mut o = Outcome::new();
    o.check(parse_graph6("C~").unwrap() == complete(4).unwrap(), "\"C~\" parses to K4");
    let mut r = rng(8);
    let mut failures = 0;
    for _ in 0..1000 {
        let n = r.random_range(1..=62usize);
        let p: f64 = r.random();
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|_| r.random::<f64>() < p)
            .collect();
        let g = Graph::from_edges(n, edges).unwrap();
        let text = to_graph6(&g).unwrap();
        if parse_graph6(&text).unwrap() != g || to_graph6(&parse_graph6(&text).unwrap()).unwrap() != text {
            failures += 1;
        }
    }
    o.check(failures == 0, format!("graph6 round trip over 1000 random graphs, n = 1..62: {failures} failures"));
    o
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("threshold reproduction", criterion_1),
        ("sharpness, theorem 1", criterion_2),
        ("sharpness, theorem 2", criterion_3),
        ("exhaustive and random theorem sweeps", criterion_4),
        ("matching oracle equivalence", criterion_5),
        ("equitable quotient identity", criterion_6),
        ("numeric side claims", criterion_7),
        ("graph6 format fidelity", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = run();
        let verdict = if outcome.pass { "PASS" } else { "FAIL" };
        println!("criterion {}: {verdict} {name}", i + 1);
        for d in &outcome.details {
            println!("    {d}");
        }
        failed += usize::from(!outcome.pass);
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
