//! Exact independence number, used as the control for the greedy runs.

use std::time::Instant;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest graph [`brute_force_mis`] will accept.
pub const BRUTE_FORCE_MAX_N: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub alpha: usize,
    pub witness: VertexSet,
}

struct Search<'g> {
    g: &'g Graph,
    current: Vec<usize>,
    best: Vec<usize>,
    deadline: Option<Instant>,
    nodes: u64,
    expired: bool,
}

impl Search<'_> {
    fn out_of_time(&mut self) -> bool {
        if self.expired {
            return true;
        }
        self.nodes += 1;
        if let Some(deadline) = self.deadline {
            if self.nodes.is_multiple_of(1024) && Instant::now() >= deadline {
                self.expired = true;
            }
        }
        self.expired
    }

    fn take(&mut self, v: usize, remaining: &BitSet) {
        let mut rest = remaining.clone();
        rest.remove(v);
        rest.difference_with(self.g.row(v));
        self.current.push(v);
        self.branch(rest);
        self.current.pop();
    }

    fn branch(&mut self, remaining: BitSet) {
        if self.out_of_time() {
            return;
        }
        let left = remaining.len();
        if self.current.len() + left <= self.best.len() {
            return;
        }
        if left == 0 {
            self.best = self.current.clone();
            return;
        }
        let mut pivot = (0, 0);
        for v in remaining.iter() {
            let d = self.g.row(v).intersection_len(&remaining);
            if d <= 1 {
                // some maximum independent set of the remainder contains v
                self.take(v, &remaining);
                return;
            }
            if d > pivot.1 {
                pivot = (v, d);
            }
        }
        let v = pivot.0;
        self.take(v, &remaining);
        let mut without = remaining;
        without.remove(v);
        self.branch(without);
    }
}

fn search(g: &Graph, deadline: Option<Instant>) -> Option<OracleResult> {
    let mut s = Search {
        g,
        current: Vec::new(),
        best: Vec::new(),
        deadline,
        nodes: 0,
        expired: false,
    };
    s.branch(BitSet::full(g.n()));
    if s.expired {
        return None;
    }
    let witness = VertexSet::from_ids(s.best);
    Some(OracleResult {
        alpha: witness.len(),
        witness,
    })
}

/// Branch and bound on a maximum-degree vertex (take it and drop its closed
/// neighborhood, or drop it), pruning when the current set plus every
/// remaining vertex cannot beat the best found. Vertices of remaining degree
/// at most one are taken without branching.
pub fn exact_mis(g: &Graph) -> OracleResult {
    search(g, None).expect("no deadline was set")
}

/// [`exact_mis`] that gives up at `deadline`, returning `None`.
pub fn exact_mis_until(g: &Graph, deadline: Instant) -> Option<OracleResult> {
    search(g, Some(deadline))
}

/// Scans every vertex subset. Refuses graphs with more than
/// [`BRUTE_FORCE_MAX_N`] vertices.
pub fn brute_force_mis(g: &Graph) -> Result<OracleResult> {
    let n = g.n();
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::TooLargeForBruteForce {
            n,
            max: BRUTE_FORCE_MAX_N,
        });
    }
    let rows: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).fold(0u32, |acc, u| acc | 1 << u))
        .collect();
    let mut best = 0u32;
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() <= best.count_ones() {
            continue;
        }
        let independent = (0..n).all(|v| mask & (1 << v) == 0 || rows[v] & mask == 0);
        if independent {
            best = mask;
        }
    }
    let witness: VertexSet = (0..n).filter(|&v| best & (1 << v) != 0).collect();
    Ok(OracleResult {
        alpha: witness.len(),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
        Graph::new(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    #[test]
    fn exact_examples() {
        assert_eq!(exact_mis(&Graph::edgeless(9).unwrap()).alpha, 9);
        assert_eq!(exact_mis(&Graph::complete(7).unwrap()).alpha, 1);
        assert_eq!(exact_mis(&Graph::cycle(5).unwrap()).alpha, 2);
        let p = petersen();
        assert_eq!(p.m(), 15);
        let r = exact_mis(&p);
        assert_eq!(r.alpha, 4);
        assert!(p.is_independent(&r.witness));
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_mis(&Graph::edgeless(3).unwrap()).unwrap().alpha, 3);
        assert_eq!(brute_force_mis(&Graph::path(6).unwrap()).unwrap().alpha, 3);
        assert_eq!(brute_force_mis(&Graph::cycle(5).unwrap()).unwrap().alpha, 2);
        assert_eq!(brute_force_mis(&petersen()).unwrap().alpha, 4);
        assert_eq!(
            brute_force_mis(&Graph::edgeless(25).unwrap()),
            Err(Error::TooLargeForBruteForce { n: 25, max: 24 })
        );
    }

    #[test]
    fn expired_deadline_gives_up() {
        let g = crate::random::random_gnm(80, 320, 5).unwrap();
        let past = Instant::now();
        // the first deadline check happens after 1024 nodes, so tiny graphs may still finish
        if let Some(r) = exact_mis_until(&g, past) {
            assert_eq!(r, exact_mis(&g));
        }
        let far = Instant::now() + std::time::Duration::from_secs(3600);
        assert_eq!(exact_mis_until(&g, far), Some(exact_mis(&g)));
    }
}
