//! Work done by heuristics `a` and `b` under the engine's cost model.

use super::{csv_bytes, map_runs, ExperimentConfig};
use crate::engine::{run_greedy, EngineConfig};
use crate::error::{Error, Result};
use crate::heuristics::HeuristicKind;
use crate::random::{derive_seed, random_gnm};

/// Totals per algorithm over the runs of one `(n, m)` cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WorkloadCell {
    pub n: usize,
    pub m: usize,
    /// `(algorithm, heuristic_evals, adjacency_checks)`, in configuration order.
    pub totals: Vec<(EngineConfig, u64, u64)>,
}

impl WorkloadCell {
    fn checks(&self, h: HeuristicKind, k: usize) -> Option<u64> {
        self.totals
            .iter()
            .find(|(a, _, _)| a.heuristic == h && a.k == k)
            .map(|t| t.2)
    }

    /// `w_b / w_a` for initial cardinality `k`, if both ran and `a` did any work.
    pub fn ratio(&self, k: usize) -> Option<f64> {
        let a = self.checks(HeuristicKind::A, k)?;
        let b = self.checks(HeuristicKind::B, k)?;
        (a > 0).then(|| b as f64 / a as f64)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WorkloadReport {
    pub cells: Vec<WorkloadCell>,
}

impl WorkloadReport {
    pub fn n_values(&self) -> Vec<usize> {
        let mut ns: Vec<usize> = self.cells.iter().map(|c| c.n).collect();
        ns.dedup();
        ns
    }

    /// `(m, w_b/w_a)` along the m-sweep at `n`.
    pub fn ratio_curve(&self, n: usize, k: usize) -> Vec<(usize, f64)> {
        self.cells
            .iter()
            .filter(|c| c.n == n)
            .filter_map(|c| Some((c.m, c.ratio(k)?)))
            .collect()
    }

    /// Largest `w_b / w_a` over all cells at `n`.
    pub fn max_ratio(&self, n: usize, k: usize) -> Option<f64> {
        self.ratio_curve(n, k).into_iter().map(|p| p.1).reduce(f64::max)
    }

    /// `R = max(w_b / w_a) / n`.
    pub fn normalized_ratio(&self, n: usize, k: usize) -> Option<f64> {
        self.max_ratio(n, k).map(|r| r / n as f64)
    }

    pub fn to_csv(&self) -> Vec<u8> {
        let rows = self.cells.iter().flat_map(|c| {
            c.totals.iter().map(move |(algo, evals, checks)| {
                [
                    c.n.to_string(),
                    c.m.to_string(),
                    algo.to_string(),
                    evals.to_string(),
                    checks.to_string(),
                ]
            })
        });
        csv_bytes(["n", "m", "algorithm", "heuristic_evals", "adjacency_checks"], rows)
    }
}

/// Runs every configured algorithm on the same seeded graphs and sums the
/// instrumentation counters per cell. No oracle is involved.
pub fn run_workload_experiment(cfg: &ExperimentConfig) -> Result<WorkloadReport> {
    cfg.validate()?;
    let mut cells = Vec::new();
    for (n, m) in cfg.cells() {
        let per_run = map_runs(cfg.runs, cfg.jobs, |r| {
            let g = random_gnm(n, m, derive_seed(cfg.base_seed, n, m, r)).expect("cell validated");
            cfg.algorithms
                .iter()
                .map(|&algo| match run_greedy(&g, algo) {
                    Ok(res) => (res.stats.heuristic_evals, res.stats.adjacency_checks),
                    Err(Error::NoSeedSets { .. }) => (0, 0),
                    Err(e) => panic!("greedy run on a valid graph failed: {e}"),
                })
                .collect::<Vec<_>>()
        });
        let totals = cfg
            .algorithms
            .iter()
            .enumerate()
            .map(|(i, &algo)| {
                let evals = per_run.iter().map(|r| r[i].0).sum();
                let checks = per_run.iter().map(|r| r[i].1).sum();
                (algo, evals, checks)
            })
            .collect();
        cells.push(WorkloadCell { n, m, totals });
    }
    Ok(WorkloadReport { cells })
}
