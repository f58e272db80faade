use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use greedy_mis::experiments::{
    log_base, run_trials, run_workload_experiment, tau_edgeless, workload_svg, ExperimentConfig, MRule,
};
use greedy_mis::{exact_mis, exact_mis_until, random_gnm, read_graph, run_greedy, write_graph, EngineConfig, Error, HeuristicKind};

/// Greedy maximum independent set heuristics, an exact oracle, and seeded experiments.
#[derive(Parser, Debug)]
#[command(name = "greedy-mis", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one greedy algorithm on a graph file.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value = "a", value_parser = parse_heuristic)]
        heuristic: HeuristicKind,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
    },
    /// Compute the independence number of a graph file exactly.
    Oracle {
        #[arg(long)]
        graph: PathBuf,
        /// Give up after this many seconds.
        #[arg(long)]
        timeout: Option<f64>,
    },
    /// Write a seeded uniform random graph with exactly m edges.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Output path; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the edgeless-graph evaluation count τ(n, k) and log_n τ.
    Formula {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Run a seeded experiment protocol.
    Experiment {
        #[arg(value_enum)]
        kind: ExperimentKind,
        #[command(flatten)]
        opts: ExperimentOpts,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExperimentKind {
    Failure,
    Accuracy,
    Workload,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MRuleArg {
    Explicit,
    #[value(name = "4n")]
    FourN,
    Sweep,
}

#[derive(Args, Debug)]
struct ExperimentOpts {
    /// Vertex counts, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<usize>,
    /// Edge counts, comma separated; implies `--m-rule explicit`.
    #[arg(long, value_delimiter = ',')]
    m: Vec<usize>,
    #[arg(long = "m-rule", value_enum)]
    m_rule: Option<MRuleArg>,
    /// Algorithms such as a1,b1,a2,b2.
    #[arg(long, value_delimiter = ',', value_parser = parse_algorithm)]
    algos: Vec<EngineConfig>,
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    runs: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// CSV output path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// SVG chart path (workload only).
    #[arg(long)]
    plot: Option<PathBuf>,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: u64,
    /// Per-graph oracle budget in seconds; runs that exceed it are excluded.
    #[arg(long)]
    timeout: Option<f64>,
}

fn parse_heuristic(s: &str) -> Result<HeuristicKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_algorithm(s: &str) -> Result<EngineConfig, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Failure classes, each with its own exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Input(String),
    Infeasible(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Input(_) => 2,
            Failure::Infeasible(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Input(m) | Failure::Infeasible(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::NoSeedSets { .. } | Error::TooManyEdges { .. } | Error::CardinalityTooLarge { .. } => {
                Failure::Infeasible(msg)
            }
            Error::Config(_) | Error::ZeroCardinality => Failure::Usage(msg),
            _ => Failure::Input(msg),
        }
    }
}

fn load(path: &Path) -> Result<greedy_mis::Graph, Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    read_graph(&bytes).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn save(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    std::fs::write(path, bytes).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn seconds(s: f64) -> Result<Duration, Failure> {
    Duration::try_from_secs_f64(s).map_err(|_| Failure::Usage(format!("invalid timeout {s}")))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Solve { graph, heuristic, k } => {
            let g = load(&graph)?;
            let r = run_greedy(&g, EngineConfig::new(heuristic, k as usize))?;
            println!("size={}", r.size);
            println!("witness={}", r.witness);
            println!(
                "rounds={} heuristic_evals={} adjacency_checks={}",
                r.stats.rounds, r.stats.heuristic_evals, r.stats.adjacency_checks
            );
        }
        Command::Oracle { graph, timeout } => {
            let g = load(&graph)?;
            let result = match timeout {
                Some(t) => exact_mis_until(&g, Instant::now() + seconds(t)?)
                    .ok_or_else(|| Failure::Infeasible(format!("oracle-timeout after {t}s")))?,
                None => exact_mis(&g),
            };
            println!("alpha={}", result.alpha);
            println!("witness={}", result.witness);
        }
        Command::Generate { n, m, seed, out } => {
            let bytes = write_graph(&random_gnm(n, m, seed)?);
            match out {
                Some(path) => save(&path, &bytes)?,
                None => print!("{}", String::from_utf8_lossy(&bytes)),
            }
        }
        Command::Formula { n, k } => {
            if n == 0 || k == 0 {
                return Err(Failure::Usage("--n and --k must be positive".into()));
            }
            let tau = tau_edgeless(n, k);
            let log = log_base(&tau, n).map_or("-".to_string(), |l| format!("{l:.2}"));
            println!("tau={tau} log={log}");
        }
        Command::Experiment { kind, opts } => experiment(kind, opts)?,
    }
    Ok(())
}

fn experiment(kind: ExperimentKind, opts: ExperimentOpts) -> Result<(), Failure> {
    let m_rule = match (opts.m_rule, opts.m.is_empty()) {
        (Some(MRuleArg::Explicit) | None, false) => MRule::Explicit(opts.m.clone()),
        (Some(MRuleArg::Explicit), true) => return Err(Failure::Usage("--m-rule explicit needs --m".into())),
        (Some(MRuleArg::FourN), true) => MRule::FourN,
        (Some(MRuleArg::Sweep), true) => MRule::Sweep,
        (None, true) => match kind {
            ExperimentKind::Workload => MRule::Sweep,
            _ => MRule::FourN,
        },
        (Some(_), false) => return Err(Failure::Usage("--m conflicts with --m-rule 4n/sweep".into())),
    };
    let algorithms = if opts.algos.is_empty() {
        let names: &[&str] = match kind {
            ExperimentKind::Workload => &["a1", "b1"],
            _ => &["a1", "b1", "a2", "b2"],
        };
        names.iter().map(|s| s.parse().expect("built-in name")).collect()
    } else {
        opts.algos.clone()
    };
    if opts.plot.is_some() && !matches!(kind, ExperimentKind::Workload) {
        return Err(Failure::Usage("--plot is only available for workload experiments".into()));
    }
    let mut cfg = ExperimentConfig::new(opts.n.clone(), m_rule, algorithms, opts.runs as usize, opts.seed);
    cfg.jobs = opts.jobs as usize;
    cfg.oracle_timeout = opts.timeout.map(seconds).transpose()?;
    cfg.validate()?;

    let csv = match kind {
        ExperimentKind::Failure | ExperimentKind::Accuracy => {
            let trials = run_trials(&cfg)?;
            let timeouts: usize = trials.cells.iter().map(|c| c.oracle_timeouts()).sum();
            if matches!(kind, ExperimentKind::Failure) {
                let report = trials.failure_report();
                for c in &report.cells {
                    for t in &c.tallies {
                        let ratio = t.ratio().map_or("-".to_string(), |r| format!("{r:.5}"));
                        println!("n={} m={} {} failures={}/{} ratio={ratio}", c.n, c.m, t.algorithm, t.failures, t.runs);
                    }
                }
                if timeouts > 0 {
                    println!("oracle-timeout: {timeouts} run(s) excluded");
                }
                report.to_csv()
            } else {
                let report = trials.accuracy_report();
                for c in &report.cells {
                    for a in &c.algos {
                        let hist: Vec<String> = a.histogram.iter().map(|(g, n)| format!("{g}:{n}")).collect();
                        println!("n={} m={} {} runs={} gaps {}", c.n, c.m, a.algorithm, a.runs, hist.join(" "));
                    }
                }
                if timeouts > 0 {
                    println!("oracle-timeout: {timeouts} run(s) excluded");
                }
                report.to_csv()
            }
        }
        ExperimentKind::Workload => {
            let report = run_workload_experiment(&cfg)?;
            let ks: Vec<usize> = {
                let mut ks: Vec<usize> = cfg.algorithms.iter().map(|a| a.k).collect();
                ks.sort_unstable();
                ks.dedup();
                ks
            };
            for &n in &cfg.n_values {
                for &k in &ks {
                    if let Some(max) = report.max_ratio(n, k) {
                        println!("n={n} k={k} max w_b/w_a={max:.3} R={:.4}", max / n as f64);
                    }
                }
            }
            if let Some(path) = &opts.plot {
                save(path, &workload_svg(&report, ks.first().copied().unwrap_or(1)))?;
            }
            report.to_csv()
        }
    };
    if let Some(path) = &opts.out {
        save(path, &csv)?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}
