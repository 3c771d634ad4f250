use dslq_core::graph::{build_gamma, Graph};
use dslq_core::spectral::{dsl_matrix, dsl_radius, rayleigh};
use dslq_core::thresholds::{largest_real_root, Polynomial};
use dslq_core::verifier::{random_connected, rng};
use proptest::prelude::*;
use rand::Rng;

fn connected() -> impl Strategy<Value = Graph> {
    (2usize..=12, 0.2f64..0.9, any::<u64>()).prop_map(|(n, p, seed)| random_connected(n, p, seed).unwrap())
}

fn with_extra_edge(g: &Graph, pick: usize) -> Option<Graph> {
    let n = g.order();
    let missing: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !g.has_edge(i, j))
        .collect();
    let extra = *missing.get(pick % missing.len().max(1))?;
    Some(Graph::from_edges(n, g.edges().chain(std::iter::once(extra))).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn adding_an_edge_never_increases_q(g in connected(), pick in any::<usize>()) {
        let Some(h) = with_extra_edge(&g, pick) else { return Ok(()); };
        let (qg, qh) = (dsl_matrix(&g).unwrap(), dsl_matrix(&h).unwrap());
        for i in 0..g.order() {
            for (a, b) in qg.row(i).iter().zip(qh.row(i)) {
                prop_assert!(a - b >= 0.0);
            }
        }
        prop_assert!(dsl_radius(&h).unwrap() <= dsl_radius(&g).unwrap() + 1e-9);
    }

    #[test]
    fn rayleigh_quotients_stay_below_radius(g in connected(), seed in any::<u64>()) {
        let q = dsl_matrix(&g).unwrap();
        let eta = dsl_radius(&g).unwrap();
        let mut r = rng(seed);
        for _ in 0..100 {
            let x: Vec<f64> = (0..g.order()).map(|_| r.random_range(-1.0..1.0)).collect();
            if x.iter().all(|v| *v == 0.0) {
                continue;
            }
            prop_assert!(rayleigh(&q, &x).unwrap() <= eta * (1.0 + 1e-12) + 1e-9);
        }
    }
}

#[test]
fn gamma_quartic_root_matches_radius() {
    for n in 3..=12usize {
        let x = n as f64;
        let p = Polynomial::new(vec![
            1.0,
            14.0 - 18.0 * x,
            119.0 * x * x - 214.0 * x + 96.0,
            -(342.0 * x.powi(3) - 1012.0 * x * x + 1016.0 * x - 352.0),
            360.0 * x.powi(4) - 1512.0 * x.powi(3) + 2432.0 * x * x - 1792.0 * x + 512.0,
        ])
        .unwrap();
        let root = largest_real_root(&p, None).unwrap();
        let (g, _) = build_gamma(n, n - 1, n - 2).unwrap();
        let eta = dsl_radius(&g).unwrap();
        assert!((root - eta).abs() < 1e-8, "n={n}: root {root} vs eta1 {eta}");
    }
}
