//! Candidate scoring for the greedy step.
//!
//! Heuristic `a` scores a candidate `v` for a set `S` by how many
//! non-neighbors `S ∪ {v}` still has. Heuristic `b` scores it by the
//! stability of the subgraph induced on those non-neighbors, where the
//! stability of a graph `H` on `o` vertices is `Σ_v o / (deg_H(v) + 1)`.
//! Both are exact rationals so ties are detected without rounding.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, Zero};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HeuristicKind {
    /// Most non-neighbors left after adding the candidate.
    A,
    /// Most stable graph induced on the non-neighbors left after adding the candidate.
    B,
}

impl HeuristicKind {
    pub const ALL: [HeuristicKind; 2] = [HeuristicKind::A, HeuristicKind::B];

    pub fn letter(self) -> char {
        match self {
            HeuristicKind::A => 'a',
            HeuristicKind::B => 'b',
        }
    }
}

impl fmt::Display for HeuristicKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for HeuristicKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" | "A" => Ok(HeuristicKind::A),
            "b" | "B" => Ok(HeuristicKind::B),
            _ => Err(Error::Config(format!("unknown heuristic `{s}` (expected a or b)"))),
        }
    }
}

/// Exact non-negative rational score.
///
/// Stability sums whose terms all have denominators up to [`SCALED_MAX_TERM`]
/// are stored as a numerator over the fixed denominator `lcm(1..=40)`, so
/// comparing them is a single integer compare. Other values that fit in
/// `i128` stay there; anything larger (denominators grow like `lcm(1..=o)`)
/// is carried as a big rational. Comparison and equality are by value
/// regardless of representation.
#[derive(Clone)]
pub struct Score(Repr);

#[derive(Clone)]
enum Repr {
    /// value = x / SCALE
    Scaled(u128),
    Small(Ratio<i128>),
    Big(BigRational),
}

/// Largest `deg + 1` the fixed-denominator form covers.
pub const SCALED_MAX_TERM: usize = 40;
/// `lcm(1..=40)`.
const SCALE: u128 = 5_342_931_457_063_200;

impl Score {
    pub fn zero() -> Self {
        Score(Repr::Small(Ratio::from_integer(0)))
    }

    pub fn from_integer(v: u64) -> Self {
        Score(Repr::Small(Ratio::from_integer(v as i128)))
    }

    /// `o · Σ_j counts[j] / j`, where `counts[j]` vertices have `deg + 1 = j`.
    pub(crate) fn from_degree_counts(o: usize, counts: &[u64]) -> Self {
        if counts.iter().skip(SCALED_MAX_TERM + 1).all(|&c| c == 0) {
            let sum: u128 = counts
                .iter()
                .enumerate()
                .skip(1)
                .take(SCALED_MAX_TERM)
                .map(|(j, &c)| c as u128 * (SCALE / j as u128))
                .sum();
            return Score(Repr::Scaled(sum * o as u128));
        }
        let small = || -> Option<Ratio<i128>> {
            let mut sum = Ratio::from_integer(0i128);
            for (j, &c) in counts.iter().enumerate().skip(1) {
                if c > 0 {
                    sum = sum.checked_add(&Ratio::new(c as i128, j as i128))?;
                }
            }
            sum.checked_mul(&Ratio::from_integer(o as i128))
        };
        match small() {
            Some(r) => Score(Repr::Small(r)),
            None => {
                let mut sum = BigRational::zero();
                for (j, &c) in counts.iter().enumerate().skip(1) {
                    if c > 0 {
                        sum += BigRational::new(BigInt::from(c), BigInt::from(j));
                    }
                }
                Score(Repr::Big(sum * BigRational::from_integer(BigInt::from(o))))
            }
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Scaled(x) => BigRational::new(BigInt::from(*x), BigInt::from(SCALE)),
            Repr::Small(r) => BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        self.to_big().numer().clone()
    }

    pub fn denom(&self) -> BigInt {
        self.to_big().denom().clone()
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Scaled(x) => *x == 0,
            Repr::Small(r) => r.is_zero(),
            Repr::Big(r) => r.is_zero(),
        }
    }

    /// Lossy conversion for display and plotting only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        match &self.0 {
            Repr::Scaled(x) => *x as f64 / SCALE as f64,
            Repr::Small(r) => *r.numer() as f64 / *r.denom() as f64,
            Repr::Big(r) => r.to_f64().unwrap_or(f64::NAN),
        }
    }
}

impl Ord for Score {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Scaled(a), Repr::Scaled(b)) => a.cmp(b),
            (Repr::Small(a), Repr::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Score {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for Score {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Score {}

impl fmt::Debug for Score {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Score({self})")
    }
}

impl fmt::Display for Score {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.to_big();
        if r.is_integer() {
            write!(f, "{}", r.numer())
        } else {
            write!(f, "{}/{}", r.numer(), r.denom())
        }
    }
}

impl From<u64> for Score {
    fn from(v: u64) -> Self {
        Score::from_integer(v)
    }
}

/// Stability of `h`: `Σ_v o / (deg(v) + 1)` with `o = |V(h)|`. Zero for the empty graph.
pub fn stability(h: &Graph) -> Score {
    let o = h.n();
    let mut counts = vec![0u64; o + 1];
    for v in 0..o {
        counts[h.degree(v) + 1] += 1;
    }
    Score::from_degree_counts(o, &counts)
}

/// Scores candidate `v` for independent set `s` under heuristic `h`.
///
/// `v` must be a non-neighbor of `s`. Heuristic `b` looks only at the graph
/// induced on `N̄(s ∪ {v})`; `v` itself is not part of it.
pub fn score(g: &Graph, s: &VertexSet, v: usize, h: HeuristicKind) -> Result<Score> {
    let pool = g.non_neighbors(s)?;
    if !pool.contains(v) {
        return Err(Error::NotANonNeighbor { vertex: v });
    }
    let rest = g.non_neighbors(&s.with(v))?;
    Ok(match h {
        HeuristicKind::A => Score::from_integer(rest.len() as u64),
        HeuristicKind::B => stability(&g.induced_subgraph(&rest)?),
    })
}

/// Reusable buffers for [`score_in_pool`].
#[derive(Default)]
pub(crate) struct Scratch {
    counts: Vec<u64>,
}

/// Bit-set scoring used by the engine. `pool` is `N̄(S)` and `v ∈ pool`;
/// returns the score together with `|N̄(S ∪ {v})|`.
#[inline]
pub(crate) fn score_in_pool(
    g: &Graph,
    pool: &BitSet,
    v: usize,
    h: HeuristicKind,
    scratch: &mut Scratch,
) -> (Score, usize) {
    let mut rest = pool.clone();
    rest.remove(v);
    rest.difference_with(g.row(v));
    let o = rest.len();
    let score = match h {
        HeuristicKind::A => Score::from_integer(o as u64),
        HeuristicKind::B => {
            let counts = &mut scratch.counts;
            counts.clear();
            counts.resize(o + 1, 0);
            for w in rest.iter() {
                counts[g.row(w).intersection_len(&rest) + 1] += 1;
            }
            Score::from_degree_counts(o, counts)
        }
    };
    (score, o)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn stability_hand_values() {
        assert_eq!(stability(&Graph::edgeless(3).unwrap()), Score::from(9));
        assert_eq!(stability(&Graph::complete(3).unwrap()), Score::from(3));
        assert_eq!(stability(&Graph::path(3).unwrap()), Score::from(4));
        let empty = Graph::complete(3).unwrap().induced_subgraph(&VertexSet::new()).unwrap();
        assert!(stability(&empty).is_zero());
    }

    #[test]
    fn stability_fractional() {
        // star K1,3: 4 * (1/4 + 3/2) = 7
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(stability(&star), Score::from(7));
        // P4: 4 * (1/2 + 1/3 + 1/3 + 1/2) = 20/3
        assert_eq!(stability(&Graph::path(4).unwrap()).to_big(), ratio(20, 3));
    }

    #[test]
    fn score_examples() {
        let e4 = Graph::edgeless(4).unwrap();
        assert_eq!(score(&e4, &[0].into(), 1, HeuristicKind::A).unwrap(), Score::from(2));
        let p6 = Graph::path(6).unwrap();
        let s: VertexSet = [0].into();
        assert_eq!(score(&p6, &s, 2, HeuristicKind::B).unwrap(), Score::from(2));
        assert_eq!(score(&p6, &s, 3, HeuristicKind::B).unwrap(), Score::from(1));
        assert_eq!(score(&p6, &s, 2, HeuristicKind::A).unwrap(), Score::from(2));
        assert_eq!(score(&p6, &s, 5, HeuristicKind::A).unwrap(), Score::from(2));
        assert!(score(&p6, &[0, 2, 4].into(), 5, HeuristicKind::B).is_err());
        assert_eq!(
            score(&p6, &s, 1, HeuristicKind::A),
            Err(Error::NotANonNeighbor { vertex: 1 })
        );
    }

    #[test]
    fn dead_end_scores_zero() {
        let c5 = Graph::cycle(5).unwrap();
        for h in HeuristicKind::ALL {
            assert!(score(&c5, &[0].into(), 2, h).unwrap().is_zero());
        }
    }

    #[test]
    fn big_representation_compares_by_value() {
        // Degrees 0..=99 force lcm(1..=100) denominators past i128.
        let o = 100;
        let mut counts = vec![0u64; o + 1];
        for c in counts.iter_mut().skip(1) {
            *c = 1;
        }
        let big = Score::from_degree_counts(o, &counts);
        assert!(matches!(big.0, Repr::Big(_)));
        let mut expected = BigRational::zero();
        for j in 1..=o as i64 {
            expected += ratio(o as i64, j);
        }
        assert_eq!(big.to_big(), expected);
        assert!(big > Score::from(518));
        assert!(big < Score::from(519));
        let same = Score(Repr::Big(Score::from(7).to_big()));
        assert_eq!(same, Score::from(7));
    }

    #[test]
    fn all_representations_agree() {
        // 3 * (1/1 + 1/2 + 1/3) = 11/2 in each form
        let scaled = Score::from_degree_counts(3, &[0, 1, 1, 1]);
        assert!(matches!(scaled.0, Repr::Scaled(_)));
        let small = Score(Repr::Small(Ratio::new(11, 2)));
        let big = Score(Repr::Big(ratio(11, 2)));
        assert_eq!(scaled, small);
        assert_eq!(scaled, big);
        assert_eq!(scaled.to_big(), ratio(11, 2));
        assert!(scaled > Score::from(5) && scaled < Score::from(6));
        // one term past the scaled range falls back to the i128 form
        let mut counts = vec![0u64; 42];
        counts[41] = 1;
        counts[1] = 1;
        let wide = Score::from_degree_counts(2, &counts);
        assert!(matches!(wide.0, Repr::Small(_)));
        assert_eq!(wide.to_big(), ratio(2 * 42, 41));
    }

    #[test]
    fn display() {
        assert_eq!(Score::from(4).to_string(), "4");
        assert_eq!(stability(&Graph::path(4).unwrap()).to_string(), "20/3");
        assert_eq!("b".parse::<HeuristicKind>().unwrap(), HeuristicKind::B);
        assert!("c".parse::<HeuristicKind>().is_err());
    }

    mod props {
        use super::super::*;
        use crate::random::random_gnm;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn pool_scoring_matches_reference(n in 2usize..30, density in 0.0f64..0.6, seed in any::<u64>(), start in any::<u64>()) {
                let m = (density * crate::graph::max_edges(n) as f64) as usize;
                let g = random_gnm(n, m, seed).unwrap();
                let s: VertexSet = [start as usize % n].into();
                let pool = g.non_neighbor_bits(&s);
                let mut scratch = Scratch::default();
                for v in pool.iter() {
                    for h in HeuristicKind::ALL {
                        let (fast, o) = score_in_pool(&g, &pool, v, h, &mut scratch);
                        prop_assert_eq!(&fast, &score(&g, &s, v, h).unwrap());
                        prop_assert_eq!(o, g.non_neighbors(&s.with(v)).unwrap().len());
                    }
                }
            }

            #[test]
            fn degree_counts_match_big_sum(counts in proptest::collection::vec(0u64..4, 1..90)) {
                let o: u64 = counts.iter().skip(1).sum();
                let mut expected = BigRational::zero();
                for (j, &c) in counts.iter().enumerate().skip(1) {
                    expected += BigRational::new(BigInt::from(c * o), BigInt::from(j));
                }
                prop_assert_eq!(Score::from_degree_counts(o as usize, &counts).to_big(), expected);
            }
        }
    }
}
