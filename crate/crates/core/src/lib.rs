//! Greedy maximum independent set heuristics.
//!
//! The family `A_hk` starts from every independent `k`-set of a graph and
//! grows all of them in lockstep, adding to each set the non-neighbor that
//! scores best under heuristic `h`, until no set can grow. The crate also
//! provides an exact branch-and-bound oracle and a seeded experiment harness
//! for measuring how often, and by how much, the greedy answer falls short.
//!
//! ```
//! use greedy_mis::{exact_mis, run_greedy, EngineConfig, Graph, HeuristicKind};
//!
//! let g = Graph::cycle(5).unwrap();
//! let greedy = run_greedy(&g, EngineConfig::new(HeuristicKind::B, 1)).unwrap();
//! assert_eq!(greedy.size, exact_mis(&g).alpha);
//! ```

pub mod bitset;
pub mod combinatorics;
pub mod engine;
pub mod error;
pub mod exact;
pub mod experiments;
pub mod graph;
pub mod heuristics;
pub mod io;
pub mod random;

pub use engine::{expand_generation, initial_generation, run_greedy, EngineConfig, Generation, GreedyResult, RunStats};
pub use error::{Error, Result};
pub use exact::{brute_force_mis, exact_mis, exact_mis_until, OracleResult};
pub use graph::{Graph, VertexSet};
pub use heuristics::{score, stability, HeuristicKind, Score};
pub use io::{read_graph, write_graph};
pub use random::random_gnm;
