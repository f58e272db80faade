//! Paired greedy-vs-oracle runs, summarized as failure ratios or gap histograms.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use super::{csv_bytes, map_runs, ExperimentConfig};
use crate::engine::{run_greedy, EngineConfig};
use crate::error::{Error, Result};
use crate::exact::{exact_mis, exact_mis_until};
use crate::graph::Graph;
use crate::random::{derive_seed, random_gnm};

/// Result of one graph: `alpha` is `None` if the oracle ran out of time, and
/// `sizes[i]` is `None` when algorithm `i` had no independent seed set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutcome {
    pub alpha: Option<usize>,
    pub sizes: Vec<Option<usize>>,
}

/// Runs the oracle and every algorithm on `g`.
pub fn evaluate_graph(g: &Graph, algorithms: &[EngineConfig], oracle_timeout: Option<Duration>) -> RunOutcome {
    let alpha = match oracle_timeout {
        Some(t) => exact_mis_until(g, Instant::now() + t).map(|r| r.alpha),
        None => Some(exact_mis(g).alpha),
    };
    let sizes = match alpha {
        None => vec![None; algorithms.len()],
        Some(_) => algorithms
            .iter()
            .map(|&cfg| match run_greedy(g, cfg) {
                Ok(r) => Some(r.size),
                Err(Error::NoSeedSets { .. }) => None,
                Err(e) => panic!("greedy run on a valid graph failed: {e}"),
            })
            .collect(),
    };
    RunOutcome { alpha, sizes }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialCell {
    pub n: usize,
    pub m: usize,
    /// Graph seed of each run, in run order.
    pub seeds: Vec<u64>,
    pub outcomes: Vec<RunOutcome>,
}

impl TrialCell {
    pub fn oracle_timeouts(&self) -> usize {
        self.outcomes.iter().filter(|o| o.alpha.is_none()).count()
    }

    /// `(alpha, size)` for every run where both exist.
    fn pairs(&self, algo: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.outcomes.iter().filter_map(move |o| Some((o.alpha?, o.sizes[algo]?)))
    }

    fn gaps(&self, algo: usize) -> impl Iterator<Item = usize> + '_ {
        self.pairs(algo).map(|(alpha, size)| {
            alpha
                .checked_sub(size)
                .expect("greedy result larger than the independence number")
        })
    }

    fn infeasible(&self, algo: usize) -> usize {
        self.outcomes
            .iter()
            .filter(|o| o.alpha.is_some() && o.sizes[algo].is_none())
            .count()
    }
}

/// Raw per-run outcomes of a configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trials {
    pub algorithms: Vec<EngineConfig>,
    pub cells: Vec<TrialCell>,
}

pub fn run_trials(cfg: &ExperimentConfig) -> Result<Trials> {
    cfg.validate()?;
    let mut cells = Vec::new();
    for (n, m) in cfg.cells() {
        let seeds: Vec<u64> = (0..cfg.runs).map(|r| derive_seed(cfg.base_seed, n, m, r)).collect();
        let outcomes = map_runs(cfg.runs, cfg.jobs, |r| {
            let g = random_gnm(n, m, seeds[r]).expect("cell validated");
            evaluate_graph(&g, &cfg.algorithms, cfg.oracle_timeout)
        });
        cells.push(TrialCell { n, m, seeds, outcomes });
    }
    Ok(Trials {
        algorithms: cfg.algorithms.clone(),
        cells,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgoTally {
    pub algorithm: EngineConfig,
    /// Runs that count toward the ratio.
    pub runs: usize,
    pub failures: usize,
    /// Runs skipped because no independent `k`-set existed.
    pub infeasible: usize,
}

impl AlgoTally {
    /// `failures / runs`, or `None` when nothing was counted.
    pub fn ratio(&self) -> Option<f64> {
        (self.runs > 0).then(|| self.failures as f64 / self.runs as f64)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FailureCell {
    pub n: usize,
    pub m: usize,
    pub seeds: Vec<u64>,
    pub oracle_timeouts: usize,
    pub tallies: Vec<AlgoTally>,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct FailureReport {
    pub cells: Vec<FailureCell>,
}

impl FailureReport {
    pub fn to_csv(&self) -> Vec<u8> {
        let rows = self.cells.iter().flat_map(|c| {
            c.tallies.iter().map(move |t| {
                [
                    c.n.to_string(),
                    c.m.to_string(),
                    t.runs.to_string(),
                    t.algorithm.to_string(),
                    t.failures.to_string(),
                    t.ratio().map(|r| r.to_string()).unwrap_or_default(),
                ]
            })
        });
        csv_bytes(["n", "m", "runs", "algorithm", "failures", "ratio"], rows)
    }

    pub fn tally(&self, n: usize, algorithm: &str) -> Option<&AlgoTally> {
        self.cells
            .iter()
            .filter(|c| c.n == n)
            .flat_map(|c| &c.tallies)
            .find(|t| t.algorithm.to_string() == algorithm)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgoGaps {
    pub algorithm: EngineConfig,
    pub runs: usize,
    /// gap `α − A` → number of runs.
    pub histogram: BTreeMap<usize, usize>,
}

impl AlgoGaps {
    pub fn max_gap(&self) -> Option<usize> {
        self.histogram.keys().next_back().copied()
    }

    pub fn count(&self, gap: usize) -> usize {
        self.histogram.get(&gap).copied().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AccuracyCell {
    pub n: usize,
    pub m: usize,
    pub oracle_timeouts: usize,
    pub algos: Vec<AlgoGaps>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AccuracyReport {
    pub cells: Vec<AccuracyCell>,
}

impl AccuracyReport {
    pub fn to_csv(&self) -> Vec<u8> {
        let rows = self.cells.iter().flat_map(|c| {
            c.algos.iter().flat_map(move |a| {
                a.histogram.iter().map(move |(gap, count)| {
                    [
                        c.n.to_string(),
                        c.m.to_string(),
                        a.runs.to_string(),
                        a.algorithm.to_string(),
                        gap.to_string(),
                        count.to_string(),
                    ]
                })
            })
        });
        csv_bytes(["n", "m", "runs", "algorithm", "gap", "count"], rows)
    }

    pub fn gaps(&self, n: usize, algorithm: &str) -> Option<&AlgoGaps> {
        self.cells
            .iter()
            .filter(|c| c.n == n)
            .flat_map(|c| &c.algos)
            .find(|a| a.algorithm.to_string() == algorithm)
    }
}

impl Trials {
    pub fn failure_report(&self) -> FailureReport {
        let cells = self
            .cells
            .iter()
            .map(|c| FailureCell {
                n: c.n,
                m: c.m,
                seeds: c.seeds.clone(),
                oracle_timeouts: c.oracle_timeouts(),
                tallies: self
                    .algorithms
                    .iter()
                    .enumerate()
                    .map(|(i, &algorithm)| AlgoTally {
                        algorithm,
                        runs: c.pairs(i).count(),
                        failures: c.gaps(i).filter(|&g| g > 0).count(),
                        infeasible: c.infeasible(i),
                    })
                    .collect(),
            })
            .collect();
        FailureReport { cells }
    }

    pub fn accuracy_report(&self) -> AccuracyReport {
        let cells = self
            .cells
            .iter()
            .map(|c| AccuracyCell {
                n: c.n,
                m: c.m,
                oracle_timeouts: c.oracle_timeouts(),
                algos: self
                    .algorithms
                    .iter()
                    .enumerate()
                    .map(|(i, &algorithm)| {
                        let mut histogram = BTreeMap::new();
                        for gap in c.gaps(i) {
                            *histogram.entry(gap).or_insert(0) += 1;
                        }
                        AlgoGaps {
                            algorithm,
                            runs: c.pairs(i).count(),
                            histogram,
                        }
                    })
                    .collect(),
            })
            .collect();
        AccuracyReport { cells }
    }
}

pub fn run_failure_experiment(cfg: &ExperimentConfig) -> Result<FailureReport> {
    Ok(run_trials(cfg)?.failure_report())
}

pub fn run_accuracy_experiment(cfg: &ExperimentConfig) -> Result<AccuracyReport> {
    Ok(run_trials(cfg)?.accuracy_report())
}
