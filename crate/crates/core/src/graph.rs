//! Simple undirected graphs on `0..n` and the vertex-set operations the
//! greedy family is built from.

use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Strictly increasing list of vertex ids, so equal sets compare equal.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Sorts and deduplicates `ids`.
    pub fn from_ids(ids: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = ids.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    /// Wraps an already strictly increasing vector.
    pub(crate) fn from_sorted(v: Vec<usize>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        VertexSet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// `self ∪ {v}`.
    pub fn with(&self, v: usize) -> VertexSet {
        let mut out = self.0.clone();
        if let Err(pos) = out.binary_search(&v) {
            out.insert(pos, v);
        }
        VertexSet(out)
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn to_bitset(&self, universe: usize) -> BitSet {
        BitSet::from_ids(universe, self.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::from_ids(v)
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        VertexSet::from_ids(v)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_ids(iter)
    }
}

/// Simple undirected graph on vertices `0..n`.
///
/// Edges are kept as a sorted list of `(u, v)` pairs with `u < v`; adjacency
/// rows are bit sets, so membership queries are a single word test.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<BitSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either orientation) collapse.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        Graph::build(n, edges)
    }

    fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut list = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        list.dedup();
        let mut adj = vec![BitSet::new(n); n];
        for &(u, v) in &list {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, edges: list, adj })
    }

    pub fn edgeless(n: usize) -> Result<Graph> {
        Graph::new(n, [])
    }

    pub fn complete(n: usize) -> Result<Graph> {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// The path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Result<Graph> {
        Graph::new(n, (1..n).map(|v| (v - 1, v)))
    }

    /// The cycle `0-1-...-(n-1)-0`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::Config(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// Vertex count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    /// Adjacency row of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    fn check_members(&self, s: &VertexSet) -> Result<()> {
        match s.max() {
            Some(v) if v >= self.n => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
            _ => Ok(()),
        }
    }

    /// Pairwise non-adjacency of `s`.
    pub fn is_independent(&self, s: &VertexSet) -> bool {
        let ids = s.as_slice();
        ids.iter().all(|&v| v < self.n)
            && ids
                .iter()
                .enumerate()
                .all(|(i, &u)| ids[i + 1..].iter().all(|&v| !self.adjacent(u, v)))
    }

    /// Independent and not extendable by any vertex.
    pub fn is_maximal_independent(&self, s: &VertexSet) -> bool {
        self.is_independent(s) && self.non_neighbor_bits(s).is_empty()
    }

    /// Bit-set form of [`Graph::non_neighbors`]; members of `s` must be in range.
    pub fn non_neighbor_bits(&self, s: &VertexSet) -> BitSet {
        let mut u = BitSet::full(self.n);
        for v in s.iter() {
            u.remove(v);
            u.difference_with(&self.adj[v]);
        }
        u
    }

    /// Vertices outside `s` adjacent to no member of `s`. For `s = ∅` this is every vertex.
    pub fn non_neighbors(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_members(s)?;
        Ok(VertexSet::from_sorted(self.non_neighbor_bits(s).iter().collect()))
    }

    /// Subgraph induced on `u`, relabelled `0..|u|` in increasing original-id order.
    /// The result may have zero vertices.
    pub fn induced_subgraph(&self, u: &VertexSet) -> Result<Graph> {
        self.check_members(u)?;
        let ids = u.as_slice();
        let mut edges = Vec::new();
        for (a, &x) in ids.iter().enumerate() {
            for (b, &y) in ids.iter().enumerate().skip(a + 1) {
                if self.adjacent(x, y) {
                    edges.push((a, b));
                }
            }
        }
        Graph::build(ids.len(), edges)
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let n = self.n;
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::build(n, edges.filter(|&(u, v)| !self.adjacent(u, v)))
            .expect("complement of a valid graph is valid")
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

/// `C(n, 2)`, the number of vertex pairs.
pub fn max_edges(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_basics() {
        let g = Graph::edgeless(5).unwrap();
        assert_eq!((g.n(), g.m()), (5, 0));
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.m(), 10);
        let g = Graph::new(4, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert!(g.adjacent(1, 0) && g.adjacent(0, 1));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::new(0, []), Err(Error::NoVertices));
        assert_eq!(Graph::new(3, [(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn non_neighbor_examples() {
        let e5 = Graph::edgeless(5).unwrap();
        assert_eq!(e5.non_neighbors(&[0].into()).unwrap(), [1, 2, 3, 4].into());
        assert_eq!(e5.non_neighbors(&VertexSet::new()).unwrap().len(), 5);
        let k5 = Graph::complete(5).unwrap();
        assert!(k5.non_neighbors(&[0].into()).unwrap().is_empty());
        let p4 = Graph::path(4).unwrap();
        assert_eq!(p4.non_neighbors(&[0].into()).unwrap(), [2, 3].into());
        assert_eq!(
            p4.non_neighbors(&[7].into()),
            Err(Error::VertexOutOfRange { vertex: 7, n: 4 })
        );
    }

    #[test]
    fn induced_examples() {
        let k5 = Graph::complete(5).unwrap();
        let k3 = k5.induced_subgraph(&[0, 1, 2].into()).unwrap();
        assert_eq!(k3, Graph::complete(3).unwrap());
        let empty = k5.induced_subgraph(&VertexSet::new()).unwrap();
        assert_eq!((empty.n(), empty.m()), (0, 0));
        let p6 = Graph::path(6).unwrap();
        let i = p6.induced_subgraph(&[4, 5].into()).unwrap();
        assert_eq!((i.n(), i.edges()), (2, &[(0, 1)][..]));
        assert!(p6.induced_subgraph(&[6].into()).is_err());
    }

    #[test]
    fn independence_checks() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(c5.is_independent(&[0, 2].into()));
        assert!(!c5.is_independent(&[0, 1].into()));
        assert!(c5.is_maximal_independent(&[0, 2].into()));
        assert!(!c5.is_maximal_independent(&[0].into()));
    }

    #[test]
    fn complement_of_complete_is_edgeless() {
        assert_eq!(Graph::complete(6).unwrap().complement().m(), 0);
        assert_eq!(Graph::cycle(5).unwrap().complement().m(), 5);
    }
}
