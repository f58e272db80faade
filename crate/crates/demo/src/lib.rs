//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Each exported function returns JSON (or an SVG document) so the page
//! needs no bindings beyond strings and numbers.

use greedy_mis::experiments::{log_base, run_workload_experiment, tau_edgeless, workload_svg, ExperimentConfig, MRule};
use greedy_mis::{exact_mis, random_gnm, run_greedy, EngineConfig};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Graphs above this size skip the exact oracle in the page.
pub const ORACLE_LIMIT: usize = 90;

#[derive(Serialize)]
struct GreedyView {
    algorithm: String,
    size: usize,
    witness: Vec<usize>,
    rounds: usize,
    heuristic_evals: u64,
    adjacency_checks: u64,
    generation_sizes: Vec<usize>,
}

#[derive(Serialize)]
struct SolveView {
    n: usize,
    m: usize,
    edges: Vec<(usize, usize)>,
    alpha: Option<usize>,
    alpha_witness: Option<Vec<usize>>,
    greedy: Vec<GreedyView>,
}

/// Generates `G(n, m)` from `seed` and runs each comma-separated algorithm on it.
pub fn solve_random_json(n: usize, m: usize, seed: u64, algorithms: &str) -> Result<String, String> {
    let g = random_gnm(n, m, seed).map_err(|e| e.to_string())?;
    let oracle = (n <= ORACLE_LIMIT).then(|| exact_mis(&g));
    let mut greedy = Vec::new();
    for name in algorithms.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let cfg: EngineConfig = name.parse().map_err(|e: greedy_mis::Error| e.to_string())?;
        let r = run_greedy(&g, cfg).map_err(|e| format!("{name}: {e}"))?;
        greedy.push(GreedyView {
            algorithm: cfg.to_string(),
            size: r.size,
            witness: r.witness.as_slice().to_vec(),
            rounds: r.stats.rounds,
            heuristic_evals: r.stats.heuristic_evals,
            adjacency_checks: r.stats.adjacency_checks,
            generation_sizes: r.stats.generation_sizes,
        });
    }
    let view = SolveView {
        n,
        m,
        edges: g.edges().to_vec(),
        alpha: oracle.as_ref().map(|o| o.alpha),
        alpha_witness: oracle.map(|o| o.witness.as_slice().to_vec()),
        greedy,
    };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct TauPoint {
    k: u64,
    tau: String,
    log: Option<f64>,
}

/// `τ(n, k)` and `log_n τ` for `k = 1..=k_max`. τ is a decimal string since it outgrows doubles.
pub fn tau_curve_json(n: u64, k_max: u64) -> Result<String, String> {
    if n == 0 || k_max == 0 {
        return Err("n and k must be positive".into());
    }
    let points: Vec<TauPoint> = (1..=k_max)
        .map(|k| {
            let tau = tau_edgeless(n, k);
            TauPoint {
                k,
                log: log_base(&tau, n),
                tau: tau.to_string(),
            }
        })
        .collect();
    serde_json::to_string(&points).map_err(|e| e.to_string())
}

/// SVG of `w_b / w_a` against `m` for each `n`, using the `m = 2n, 4n, ...` sweep.
pub fn workload_plot_svg(n_values: &[usize], k: usize, seed: u64) -> Result<String, String> {
    if k == 0 {
        return Err("k must be positive".into());
    }
    let algos = vec![
        EngineConfig::new(greedy_mis::HeuristicKind::A, k),
        EngineConfig::new(greedy_mis::HeuristicKind::B, k),
    ];
    if let Some(&n) = n_values.iter().find(|&&n| MRule::Sweep.values(n).is_empty()) {
        return Err(format!("n = {n} is too small for an m sweep"));
    }
    let cfg = ExperimentConfig::new(n_values.to_vec(), MRule::Sweep, algos, 1, seed);
    let report = run_workload_experiment(&cfg).map_err(|e| e.to_string())?;
    String::from_utf8(workload_svg(&report, k)).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn solve_random(n: usize, m: usize, seed: u64, algorithms: &str) -> Result<String, JsError> {
    solve_random_json(n, m, seed, algorithms).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn tau_curve(n: u64, k_max: u64) -> Result<String, JsError> {
    tau_curve_json(n, k_max).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn workload_plot(n_values: Vec<usize>, k: usize, seed: u64) -> Result<String, JsError> {
    workload_plot_svg(&n_values, k, seed).map_err(|e| JsError::new(&e))
}
