//! Seeded benchmark protocols: failure ratios and accuracy gaps against the
//! exact oracle, workload under the engine's cost model, and the edgeless
//! evaluation-count formula.
//!
//! Every graph is `random_gnm(n, m, derive_seed(base_seed, n, m, run))`, so
//! any single run can be regenerated from the report alone, and all
//! algorithms in a run see the same graph.

mod plot;
mod tau;
mod trials;
mod workload;

use std::time::Duration;

pub use plot::workload_svg;
pub use tau::{log_base, tau_edgeless};
pub use trials::{
    evaluate_graph, run_accuracy_experiment, run_failure_experiment, run_trials, AccuracyCell,
    AccuracyReport, AlgoGaps, AlgoTally, FailureCell, FailureReport, RunOutcome, TrialCell, Trials,
};
pub use workload::{run_workload_experiment, WorkloadCell, WorkloadReport};

use crate::engine::EngineConfig;
use crate::error::{Error, Result};
use crate::graph::max_edges;

/// How edge counts are chosen for each `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MRule {
    /// The same explicit list for every `n`.
    Explicit(Vec<usize>),
    /// `m = 4n`.
    FourN,
    /// `m = 2n, 4n, 6n, ...` while below `C(n,2)`. At `n = 50` this is `100, 200, ..., 1200`.
    Sweep,
}

impl MRule {
    pub fn values(&self, n: usize) -> Vec<usize> {
        match self {
            MRule::Explicit(ms) => ms.clone(),
            MRule::FourN => vec![4 * n],
            MRule::Sweep => {
                let step = 2 * n;
                (1..).map(|i| i * step).take_while(|&m| m < max_edges(n)).collect()
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExperimentConfig {
    pub n_values: Vec<usize>,
    pub m_rule: MRule,
    /// Family members compared in every run, e.g. `a1, b1, a2, b2`.
    pub algorithms: Vec<EngineConfig>,
    pub runs: usize,
    pub base_seed: u64,
    /// Worker threads for the runs of a cell; 0 or 1 runs inline.
    pub jobs: usize,
    /// Per-graph budget for the exact oracle. Runs that exceed it are
    /// excluded from every ratio and counted separately.
    pub oracle_timeout: Option<Duration>,
}

impl ExperimentConfig {
    pub fn new(n_values: Vec<usize>, m_rule: MRule, algorithms: Vec<EngineConfig>, runs: usize, base_seed: u64) -> Self {
        ExperimentConfig {
            n_values,
            m_rule,
            algorithms,
            runs,
            base_seed,
            jobs: 1,
            oracle_timeout: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Config(msg));
        if self.runs == 0 {
            return fail("runs must be at least 1".into());
        }
        if self.algorithms.is_empty() {
            return fail("no algorithms selected".into());
        }
        if self.n_values.is_empty() {
            return fail("no vertex counts given".into());
        }
        for &n in &self.n_values {
            if n < 4 {
                return fail(format!("n = {n} is below the minimum of 4"));
            }
            for m in self.m_rule.values(n) {
                if m > max_edges(n) {
                    return Err(Error::TooManyEdges { n, m, max: max_edges(n) });
                }
            }
        }
        Ok(())
    }

    /// `(n, m)` cells in configuration order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.n_values
            .iter()
            .flat_map(|&n| self.m_rule.values(n).into_iter().map(move |m| (n, m)))
            .collect()
    }
}

/// Maps `f` over `0..runs`, keeping run-index order whatever the thread count.
pub(crate) fn map_runs<T, F>(runs: usize, jobs: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if jobs > 1 {
        use rayon::prelude::*;
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            return pool.install(|| (0..runs).into_par_iter().map(&f).collect());
        }
    }
    let _ = jobs;
    (0..runs).map(f).collect()
}

/// Renders rows as comma-separated text with a header and `\n` line ends.
pub(crate) fn csv_bytes<const N: usize>(header: [&str; N], rows: impl IntoIterator<Item = [String; N]>) -> Vec<u8> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header).expect("writing to memory");
    for row in rows {
        w.write_record(&row).expect("writing to memory");
    }
    w.into_inner().expect("flushing to memory")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_grid_at_fifty() {
        let ms = MRule::Sweep.values(50);
        assert_eq!(ms, (1..=12).map(|i| i * 100).collect::<Vec<_>>());
        assert_eq!(MRule::FourN.values(30), vec![120]);
    }

    #[test]
    fn validation() {
        let algos = vec!["a1".parse().unwrap()];
        let ok = ExperimentConfig::new(vec![20], MRule::FourN, algos.clone(), 10, 1);
        assert!(ok.validate().is_ok());
        let mut bad = ok.clone();
        bad.runs = 0;
        assert!(bad.validate().is_err());
        let bad = ExperimentConfig::new(vec![3], MRule::FourN, algos.clone(), 10, 1);
        assert!(bad.validate().is_err());
        // 4n exceeds C(n,2) for small n
        let bad = ExperimentConfig::new(vec![6], MRule::FourN, algos.clone(), 10, 1);
        assert!(matches!(bad.validate(), Err(Error::TooManyEdges { .. })));
        let bad = ExperimentConfig::new(vec![20], MRule::FourN, vec![], 10, 1);
        assert!(bad.validate().is_err());
    }

    #[test]
    fn map_runs_keeps_order() {
        let seq = map_runs(50, 1, |i| i * i);
        let par = map_runs(50, 4, |i| i * i);
        assert_eq!(seq, par);
    }

    #[test]
    fn csv_shape() {
        let out = csv_bytes(["a", "b"], [["1".to_string(), "x".to_string()]]);
        assert_eq!(out, b"a,b\n1,x\n");
        let empty = csv_bytes(["a", "b"], std::iter::empty());
        assert_eq!(empty, b"a,b\n");
    }
}
