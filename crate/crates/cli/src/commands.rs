use std::fs;
use std::io::{self, Read, Write};

use dslq_core::graph::{
    build_g4, build_g5, build_gamma, parse_edge_list, parse_graph6, to_graph6, two_coloring, Bipartition, Graph,
};
use dslq_core::spectral::{dsl_matrix, eigenvalues_symmetric};
use dslq_core::thresholds::{kappa, theorem1_threshold};
use dslq_core::verifier::{
    check_theorem1_with, check_theorem2_with, run_campaign_with, write_reports_csv, CampaignConfig,
    CampaignSummary, CheckReport, Verdict, CHECK_TOLERANCE,
};
use serde_json::json;

use crate::error::{CliError, CliResult};
use crate::emit;
use crate::output::sig10;
use crate::{Cli, Command, Family, GlobalOpts, InputFormat, OutputFormat};

const EXIT_OK: u8 = 0;
const EXIT_FAILED: u8 = 1;

pub fn run(cli: &Cli) -> CliResult<u8> {
    let g = &cli.global;
    match &cli.command {
        Command::Spectrum { dump_q } => spectrum(g, *dump_q),
        Command::Threshold { theorem, n } => threshold(g, *theorem, *n),
        Command::Check { theorem, bipartition } => check(g, *theorem, bipartition),
        Command::Verify { config } => verify(g, config),
        Command::Extremal { family, n, s, k } => extremal(*family, *n, *s, *k),
    }
}

fn read_graph(opts: &GlobalOpts) -> CliResult<Graph> {
    let text = match &opts.file {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf)?;
            buf
        }
    };
    let g = match opts.format {
        InputFormat::Graph6 => parse_graph6(&text)?,
        InputFormat::Edgelist => parse_edge_list(&text)?,
    };
    Ok(g)
}

fn require_connected(g: &Graph) -> CliResult<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(CliError::Precondition(
            "graph is disconnected; the distance matrix is undefined".into(),
        ))
    }
}

fn print_json(value: &serde_json::Value) -> CliResult<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::Usage(e.to_string()))?;
    emit!("{text}")?;
    Ok(())
}

fn spectrum(opts: &GlobalOpts, dump_q: bool) -> CliResult<u8> {
    let g = read_graph(opts)?;
    require_connected(&g)?;
    let q = dsl_matrix(&g)?;
    let eigs = eigenvalues_symmetric(&q)?;
    match opts.output() {
        OutputFormat::Json => {
            let mut v = json!({ "eta1": eigs.radius(), "spectrum": eigs.eigenvalues() });
            if dump_q {
                v["q"] = json!(q.rows());
            }
            print_json(&v)?;
        }
        OutputFormat::Csv => {
            emit!("index,eigenvalue")?;
            for (i, e) in eigs.eigenvalues().iter().enumerate() {
                emit!("{i},{e}")?;
            }
        }
        OutputFormat::Human => {
            emit!("eta1 = {}", sig10(eigs.radius()))?;
            let all: Vec<String> = eigs.eigenvalues().iter().map(|&e| sig10(e)).collect();
            emit!("spectrum = {}", all.join(" "))?;
            if dump_q {
                emit!("Q =")?;
                for row in q.rows() {
                    let cells: Vec<String> = row.iter().map(|&x| sig10(x)).collect();
                    emit!("  {}", cells.join(" "))?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn threshold(opts: &GlobalOpts, theorem: u8, n: usize) -> CliResult<u8> {
    let (value, branch) = if theorem == 1 {
        let t = theorem1_threshold(n).map_err(|e| CliError::Usage(e.to_string()))?;
        (t.value, Some(t.branch))
    } else {
        (kappa(n).map_err(|e| CliError::Usage(e.to_string()))?, None)
    };
    match opts.output() {
        OutputFormat::Json => {
            let mut v = json!({ "theorem": theorem, "n": n, "threshold": value });
            if let Some(b) = branch {
                v["branch"] = json!(b);
            }
            print_json(&v)?;
        }
        OutputFormat::Csv => {
            emit!("theorem,n,threshold,branch")?;
            let b = branch.map(|b| b.to_string()).unwrap_or_default();
            emit!("{theorem},{n},{value},{b}")?;
        }
        OutputFormat::Human => match branch {
            Some(b) => emit!("threshold = {} (branch: {b})", sig10(value))?,
            None => emit!("threshold = {}", sig10(value))?,
        },
    }
    Ok(EXIT_OK)
}

fn parse_bipartition(g: &Graph, text: &str) -> CliResult<Bipartition> {
    if text == "auto" {
        return two_coloring(g).map_err(|e| CliError::Usage(e.to_string()));
    }
    let left = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad vertex `{s}` in --bipartition")))
        })
        .collect::<CliResult<Vec<_>>>()?;
    Bipartition::from_left(g, left).map_err(|e| CliError::Usage(e.to_string()))
}

fn print_report(opts: &GlobalOpts, report: &CheckReport) -> CliResult<()> {
    match opts.output() {
        OutputFormat::Json => print_json(&json!(report))?,
        OutputFormat::Csv => write_reports_csv(std::slice::from_ref(report), io::stdout())?,
        OutputFormat::Human => {
            emit!("graph = {}", report.graph_id)?;
            emit!("eta1 = {}", sig10(report.eta1))?;
            emit!("threshold = {}", sig10(report.threshold))?;
            emit!("below_threshold = {}", report.below_threshold)?;
            emit!("perfect_matching = {}", report.has_pm)?;
            emit!("verdict = {}", report.verdict)?;
        }
    }
    Ok(())
}

fn check(opts: &GlobalOpts, theorem: u8, bipartition: &str) -> CliResult<u8> {
    let g = read_graph(opts)?;
    let tol = opts.tol.unwrap_or(CHECK_TOLERANCE);
    let report = if theorem == 1 {
        let n = g.order();
        if n % 2 == 1 || n < 4 {
            return Err(CliError::Usage(format!(
                "theorem 1 needs an even order of at least 4, got {n}"
            )));
        }
        require_connected(&g)?;
        check_theorem1_with(&g, tol)?
    } else {
        let b = parse_bipartition(&g, bipartition)?;
        if !b.is_balanced() {
            return Err(CliError::Usage(format!(
                "theorem 2 needs a balanced bipartition, got sides of {} and {}",
                b.left().len(),
                b.right().len()
            )));
        }
        if b.left().len() < 3 {
            return Err(CliError::Usage("theorem 2 needs side size at least 3".into()));
        }
        require_connected(&g)?;
        check_theorem2_with(&g, &b, tol)?
    };
    print_report(opts, &report)?;
    Ok(if report.verdict == Verdict::Counterexample {
        EXIT_FAILED
    } else {
        EXIT_OK
    })
}

fn print_summary(summary: &CampaignSummary) -> CliResult<()> {
    emit!("graphs checked: {}", summary.graphs_checked)?;
    emit!("counterexamples: {}", summary.counterexamples.len())?;
    for r in summary.counterexamples.iter().take(20) {
        emit!("  {} eta1={} threshold={}", r.graph_id, sig10(r.eta1), sig10(r.threshold))?;
    }
    if summary.counterexamples.len() > 20 {
        emit!("  ... {} more", summary.counterexamples.len() - 20)?;
    }
    let tol = summary.config.sharpness_tolerance;
    for p in &summary.sharpness {
        emit!(
            "sharpness theorem {} n={}: eta1={} threshold={} gap={:.3e} {}",
            p.theorem,
            p.n,
            sig10(p.eta1),
            sig10(p.threshold),
            p.gap,
            if p.is_sharp(tol) { "ok" } else { "FAIL" }
        )?;
    }
    for o in &summary.orderings {
        emit!(
            "ordering {}: checked={} violations={}{}",
            o.claim,
            o.checked,
            o.violations,
            o.tightest.as_ref().map(|t| format!(" tightest={t}")).unwrap_or_default()
        )?;
    }
    emit!("result: {}", if summary.passed() { "pass" } else { "fail" })?;
    Ok(())
}

fn verify(opts: &GlobalOpts, path: &std::path::Path) -> CliResult<u8> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
    let mut config = CampaignConfig::parse(&text)?;
    if let Some(seed) = opts.seed {
        config.seed = seed;
    }
    if let Some(tol) = opts.tol {
        config.tolerance = tol;
    }
    let keep = opts.output() == OutputFormat::Csv;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let summary = pool.install(|| run_campaign_with(&config, keep))?;
    match opts.output() {
        OutputFormat::Json => emit!("{}", summary.to_json()?)?,
        OutputFormat::Csv => summary.write_reports_csv(io::stdout())?,
        OutputFormat::Human => print_summary(&summary)?,
    }
    io::stdout().flush()?;
    Ok(if summary.passed() { EXIT_OK } else { EXIT_FAILED })
}

fn extremal(family: Family, n: Option<usize>, s: Option<usize>, k: Option<usize>) -> CliResult<u8> {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| CliError::Usage(format!("--{flag} is required for this family")));
    let g = match family {
        Family::G4 => build_g4(need(n, "n")?),
        Family::G5 => {
            let s = match (s, n) {
                (Some(s), _) => s,
                (None, Some(n)) if n >= 4 && n % 2 == 0 => n / 2 - 1,
                _ => return Err(CliError::Usage("g5 needs --s, or an even --n of at least 4".into())),
            };
            build_g5(s)
        }
        Family::Gamma => {
            let n = need(n, "n")?;
            let s = need(s, "s")?;
            let k = k.unwrap_or(s.saturating_sub(1));
            build_gamma(n, s, k).map(|(g, _)| g)
        }
    }
    .map_err(|e| CliError::Usage(e.to_string()))?;
    emit!("{}", to_graph6(&g).map_err(|e| CliError::Usage(e.to_string()))?)?;
    Ok(EXIT_OK)
}
