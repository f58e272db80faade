//! Seeded uniform G(n, m) generation.
//!
//! The generator is ChaCha8 keyed with four SplitMix64 outputs of the user
//! seed, and bounded integers come from rejection sampling on raw 64-bit
//! draws. Neither step depends on `rand`'s distribution code, so a seed maps
//! to the same graph on every platform and build.

use std::collections::HashSet;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{max_edges, Graph};

const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

/// SplitMix64 output function.
pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(GOLDEN_GAMMA);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed for run `run` of cell `(n, m)`: each coordinate is folded into the
/// state with `s = splitmix64(s ^ x)`, starting from `splitmix64(base)`.
pub fn derive_seed(base: u64, n: usize, m: usize, run: usize) -> u64 {
    [n as u64, m as u64, run as u64]
        .into_iter()
        .fold(splitmix64(base), |s, x| splitmix64(s ^ x))
}

/// The portable generator behind every seeded operation in the crate.
pub struct SeededRng(ChaCha8Rng);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        let mut key = [0u8; 32];
        let mut s = seed;
        for chunk in key.chunks_exact_mut(8) {
            s = splitmix64(s);
            chunk.copy_from_slice(&s.to_le_bytes());
        }
        SeededRng(ChaCha8Rng::from_seed(key))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform integer in `0..bound` (`bound > 0`), by rejection on the
    /// largest multiple of `bound` below 2^64.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % bound;
            }
        }
    }
}

/// Maps a pair index in `0..C(n,2)` to `(u, v)` with `u < v`, row-major by `u`.
fn unrank_pair(n: usize, mut index: usize) -> (usize, usize) {
    let mut u = 0;
    loop {
        let row = n - u - 1;
        if index < row {
            return (u, u + 1 + index);
        }
        index -= row;
        u += 1;
    }
}

/// Uniform random graph with exactly `m` distinct edges out of all `C(n,2)` pairs.
///
/// Pairs are drawn without replacement with Floyd's algorithm, so the cost is
/// `O(m)` expected regardless of density.
pub fn random_gnm(n: usize, m: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    let pairs = max_edges(n);
    if m > pairs {
        return Err(Error::TooManyEdges { n, m, max: pairs });
    }
    let mut rng = SeededRng::new(seed);
    let mut chosen: HashSet<usize> = HashSet::with_capacity(m);
    let mut order = Vec::with_capacity(m);
    for j in pairs - m..pairs {
        let t = rng.below(j as u64 + 1) as usize;
        let pick = if chosen.contains(&t) { j } else { t };
        chosen.insert(pick);
        order.push(pick);
    }
    Graph::new(n, order.into_iter().map(|i| unrank_pair(n, i)))
}
