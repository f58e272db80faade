//! The greedy family `A_hk`.
//!
//! Start from every independent `k`-set, then repeatedly grow each set by its
//! best-scoring non-neighbor until no set in the current generation can grow.
//! All sets grow in lockstep, so a generation always holds sets of a single
//! cardinality.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::heuristics::{score_in_pool, HeuristicKind, Scratch, Score};

/// Selects one member `A_hk` of the family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EngineConfig {
    pub heuristic: HeuristicKind,
    pub k: usize,
    /// Collapse identical sets after every round. Turning this off never
    /// changes the result, only the amount of work.
    pub dedup: bool,
}

impl EngineConfig {
    pub fn new(heuristic: HeuristicKind, k: usize) -> Self {
        EngineConfig {
            heuristic,
            k,
            dedup: true,
        }
    }
}

impl fmt::Display for EngineConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.heuristic, self.k)
    }
}

/// Parses names like `a1` or `b2`.
impl FromStr for EngineConfig {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Config(format!("unknown algorithm `{s}` (expected e.g. a1, b2)"));
        let mut chars = s.chars();
        let h = chars.next().ok_or_else(bad)?.to_string().parse().map_err(|_| bad())?;
        let k: usize = chars.as_str().parse().map_err(|_| bad())?;
        if k == 0 {
            return Err(Error::ZeroCardinality);
        }
        Ok(EngineConfig::new(h, k))
    }
}

/// Work counters for one run.
///
/// `adjacency_checks` follows a fixed cost model rather than the bit-parallel
/// work actually done:
/// - finding `N̄(S)` for `|S| = c` costs `c·(n−c)`;
/// - scoring a candidate costs `(c+1)·(n−c−1)` for finding `N̄(S ∪ {v})`;
/// - heuristic `b` adds `o²` for the induced degrees and `o` for the sum,
///   where `o = |N̄(S ∪ {v})|`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunStats {
    pub rounds: usize,
    pub heuristic_evals: u64,
    pub adjacency_checks: u64,
    /// Set count of the initial generation followed by each grown one.
    pub generation_sizes: Vec<usize>,
}

/// Independent sets of one cardinality, sorted and (by default) duplicate-free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generation {
    sets: Vec<VertexSet>,
    cardinality: usize,
}

impl Generation {
    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn cardinality(&self) -> usize {
        self.cardinality
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Builds a generation from explicit sets; each must be independent in
    /// `g` and all must share one cardinality.
    pub fn from_sets(g: &Graph, sets: Vec<VertexSet>) -> Result<Generation> {
        let cardinality = sets.first().map_or(0, VertexSet::len);
        for s in &sets {
            if s.len() != cardinality || !g.is_independent(s) {
                return Err(Error::Config(format!("{s} is not an independent {cardinality}-set")));
            }
        }
        let mut sets = sets;
        sets.sort_unstable();
        sets.dedup();
        Ok(Generation { sets, cardinality })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyResult {
    pub size: usize,
    pub witness: VertexSet,
    pub stats: RunStats,
}

/// Every independent `k`-subset of `V(g)`, in lexicographic order.
///
/// Walks the lexicographic k-subset sequence and skips the whole block behind
/// any prefix that is already dependent.
pub fn initial_generation(g: &Graph, k: usize) -> Result<Generation> {
    let n = g.n();
    if k == 0 {
        return Err(Error::ZeroCardinality);
    }
    if k > n {
        return Err(Error::CardinalityTooLarge { k, n });
    }
    let mut sets = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    'walk: loop {
        // first position that conflicts with an earlier member
        let clash = (1..k).find(|&i| cur[..i].iter().any(|&u| g.adjacent(u, cur[i])));
        match clash {
            None => {
                sets.push(VertexSet::from_sorted(cur.clone()));
                if !crate::combinatorics::skip_prefix(&mut cur, n, k) {
                    break 'walk;
                }
            }
            Some(i) => {
                if !crate::combinatorics::skip_prefix(&mut cur, n, i + 1) {
                    break 'walk;
                }
            }
        }
    }
    if sets.is_empty() {
        return Err(Error::NoSeedSets { k });
    }
    Ok(Generation {
        sets,
        cardinality: k,
    })
}

/// One round: each set with a non-empty non-neighborhood gains its
/// best-scoring non-neighbor (lowest id on ties); dead-end sets drop out.
pub fn expand_generation(g: &Graph, gen: &Generation, h: HeuristicKind, stats: &mut RunStats) -> Generation {
    expand(g, gen, h, stats, true)
}

fn expand(g: &Graph, gen: &Generation, h: HeuristicKind, stats: &mut RunStats, dedup: bool) -> Generation {
    let n = g.n() as u64;
    let c = gen.cardinality as u64;
    let find_cost = c * n.saturating_sub(c);
    let score_cost = (c + 1) * n.saturating_sub(c + 1);
    let mut scratch = Scratch::default();
    let mut grown = Vec::with_capacity(gen.sets.len());
    for s in &gen.sets {
        let pool = g.non_neighbor_bits(s);
        stats.adjacency_checks += find_cost;
        let mut best: Option<(Score, usize)> = None;
        for v in pool.iter() {
            let (score, o) = score_in_pool(g, &pool, v, h, &mut scratch);
            stats.heuristic_evals += 1;
            stats.adjacency_checks += score_cost;
            if h == HeuristicKind::B {
                let o = o as u64;
                stats.adjacency_checks += o * o + o;
            }
            // candidates arrive in increasing id order, so strict improvement keeps the lowest id
            if best.as_ref().is_none_or(|(b, _)| score > *b) {
                best = Some((score, v));
            }
        }
        if let Some((_, v)) = best {
            grown.push(s.with(v));
        }
    }
    if dedup {
        grown.sort_unstable();
        grown.dedup();
    }
    Generation {
        sets: grown,
        cardinality: gen.cardinality + 1,
    }
}

/// Runs `A_hk` on `g` to completion.
pub fn run_greedy(g: &Graph, cfg: EngineConfig) -> Result<GreedyResult> {
    let mut gen = initial_generation(g, cfg.k)?;
    let mut stats = RunStats {
        generation_sizes: vec![gen.len()],
        ..RunStats::default()
    };
    loop {
        let next = expand(g, &gen, cfg.heuristic, &mut stats, cfg.dedup);
        if next.is_empty() {
            break;
        }
        gen = next;
        stats.rounds += 1;
        stats.generation_sizes.push(gen.len());
    }
    let witness = gen.sets.iter().min().cloned().expect("generations are never empty here");
    Ok(GreedyResult {
        size: gen.cardinality,
        witness,
        stats,
    })
}
