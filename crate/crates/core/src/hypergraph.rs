//! 3-graphs and 2-graphs with the codegree, link, shadow and norm primitives.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// A strictly increasing vertex triple.
pub type Triple = [usize; 3];

/// Orders with a dense membership table.
pub const DENSE_INDEX_MAX_N: usize = 24;

/// Unordered vertex pair with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pair {
    pub u: usize,
    pub v: usize,
}

impl Pair {
    /// Sorts the endpoints. Panics on equal endpoints.
    pub fn new(a: usize, b: usize) -> Pair {
        assert_ne!(a, b, "a pair needs two distinct vertices");
        if a < b {
            Pair { u: a, v: b }
        } else {
            Pair { u: b, v: a }
        }
    }

    pub fn checked(a: usize, b: usize, n: usize) -> Result<Pair> {
        for x in [a, b] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if a == b {
            return Err(Error::SameVertex(a));
        }
        Ok(Pair::new(a, b))
    }

    pub fn as_array(self) -> [usize; 2] {
        [self.u, self.v]
    }

    pub fn contains(self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

/// Sorts a triple, rejecting repeated vertices.
pub fn normalize_triple(t: [usize; 3], n: usize) -> Result<Triple> {
    for &x in &t {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    let mut s = t;
    s.sort_unstable();
    if s[0] == s[1] || s[1] == s[2] {
        return Err(Error::DegenerateEdge(t));
    }
    Ok(s)
}

/// The third vertex of `t` outside the pair `p` (which must lie in `t`).
pub fn third_vertex(t: &Triple, p: Pair) -> usize {
    t.iter()
        .copied()
        .find(|&x| x != p.u && x != p.v)
        .expect("triple has a vertex outside the pair")
}

/// The three pairs of a triple.
pub fn triple_pairs(t: &Triple) -> [Pair; 3] {
    [
        Pair { u: t[0], v: t[1] },
        Pair { u: t[0], v: t[2] },
        Pair { u: t[1], v: t[2] },
    ]
}

#[inline]
fn binom2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

#[inline]
fn binom3(x: usize) -> usize {
    if x < 3 {
        0
    } else {
        x * (x - 1) * (x - 2) / 6
    }
}

/// Colex rank of a sorted triple among all triples of `0..`.
#[inline]
pub fn colex_rank(t: &Triple) -> usize {
    t[0] + binom2(t[1]) + binom3(t[2])
}

/// Per-pair table of integers, indexed by `u * n + v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairTable {
    n: usize,
    data: Vec<u32>,
}

impl PairTable {
    pub fn new(n: usize) -> Self {
        PairTable {
            n,
            data: vec![0; n * n],
        }
    }

    #[inline]
    pub fn get(&self, p: Pair) -> u32 {
        self.data[p.u * self.n + p.v]
    }

    #[inline]
    pub fn get2(&self, a: usize, b: usize) -> u32 {
        self.get(Pair::new(a, b))
    }

    #[inline]
    pub fn add(&mut self, p: Pair, delta: i64) {
        let cell = &mut self.data[p.u * self.n + p.v];
        *cell = (*cell as i64 + delta) as u32;
    }

    /// All pairs `(u, v)` with `u < v` and their values, in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (Pair, u32)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |u| (u + 1..n).map(move |v| (Pair { u, v }, self.data[u * n + v])))
    }

    pub fn sum_of_squares(&self) -> u64 {
        self.iter().map(|(_, d)| d as u64 * d as u64).sum()
    }

    pub fn max(&self) -> u32 {
        self.iter().map(|(_, d)| d).max().unwrap_or(0)
    }
}

/// A 3-graph on vertices `0..n` with lexicographically sorted, deduplicated
/// edges.
#[derive(Clone, Debug)]
pub struct ThreeGraph {
    n: usize,
    edges: Vec<Triple>,
    dense: Option<BitSet>,
}

impl PartialEq for ThreeGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for ThreeGraph {}

impl ThreeGraph {
    pub fn new<I>(n: usize, triples: I) -> Result<ThreeGraph>
    where
        I: IntoIterator<Item = [usize; 3]>,
    {
        let mut edges = Vec::new();
        for t in triples {
            edges.push(normalize_triple(t, n)?);
        }
        Ok(Self::from_normalized(n, edges))
    }

    pub fn empty(n: usize) -> ThreeGraph {
        Self::from_normalized(n, Vec::new())
    }

    /// The complete 3-graph `K_n^3`.
    pub fn complete(n: usize) -> ThreeGraph {
        let mut edges = Vec::with_capacity(binom3(n));
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    edges.push([a, b, c]);
                }
            }
        }
        Self::from_normalized(n, edges)
    }

    /// Builds from already sorted triples; sorts and deduplicates the list.
    pub(crate) fn from_normalized(n: usize, mut edges: Vec<Triple>) -> ThreeGraph {
        edges.sort_unstable();
        edges.dedup();
        let dense = (n <= DENSE_INDEX_MAX_N).then(|| {
            let mut b = BitSet::new(binom3(n).max(1));
            for t in &edges {
                b.insert(colex_rank(t));
            }
            b
        });
        ThreeGraph { n, edges, dense }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Triple] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Membership of a sorted triple.
    #[inline]
    pub fn has_edge(&self, t: &Triple) -> bool {
        if t[2] >= self.n {
            return false;
        }
        match &self.dense {
            Some(b) => b.contains(colex_rank(t)),
            None => self.edges.binary_search(t).is_ok(),
        }
    }

    /// Membership of an arbitrary vertex triple.
    pub fn contains(&self, a: usize, b: usize, c: usize) -> bool {
        let mut t = [a, b, c];
        t.sort_unstable();
        t[0] != t[1] && t[1] != t[2] && self.has_edge(&t)
    }

    pub fn codegree(&self, a: usize, b: usize) -> Result<usize> {
        let p = Pair::checked(a, b, self.n)?;
        Ok(self
            .edges
            .iter()
            .filter(|t| t.contains(&p.u) && t.contains(&p.v))
            .count())
    }

    /// Codegrees of all pairs in one pass over the edges.
    pub fn codegrees(&self) -> PairTable {
        let mut table = PairTable::new(self.n);
        for t in &self.edges {
            for p in triple_pairs(t) {
                table.add(p, 1);
            }
        }
        table
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().filter(|t| t.contains(&v)).count())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for t in &self.edges {
            for &x in t {
                d[x] += 1;
            }
        }
        d
    }

    /// Link graph `L(v)` on the full vertex set.
    pub fn link(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let pairs = self.edges.iter().filter(|t| t.contains(&v)).map(|t| {
            match t.iter().position(|&x| x == v).unwrap() {
                0 => [t[1], t[2]],
                1 => [t[0], t[2]],
                _ => [t[0], t[1]],
            }
        });
        Ok(Graph::from_normalized(self.n, pairs.collect()))
    }

    /// All pairs covered by at least one edge.
    pub fn shadow(&self) -> Graph {
        let mut pairs: Vec<[usize; 2]> = self
            .edges
            .iter()
            .flat_map(|t| triple_pairs(t).map(Pair::as_array))
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        Graph::from_normalized(self.n, pairs)
    }

    /// `Σ_e d(e)²` over all pairs.
    pub fn l2_norm(&self) -> u64 {
        self.codegrees().sum_of_squares()
    }

    /// `s(v) = ‖L(v)‖₂ + 2 Σ_{e ∈ L(v)} d(e) − d(v)`.
    pub fn two_norm_degree(&self, v: usize) -> Result<u64> {
        let link = self.link(v)?;
        let codeg = self.codegrees();
        let link_norm: u64 = link.degrees().iter().map(|&d| (d * d) as u64).sum();
        let along: u64 = link.edges().iter().map(|e| codeg.get2(e[0], e[1]) as u64).sum();
        Ok(link_norm + 2 * along - link.len() as u64)
    }

    /// All `s(v)` at once.
    pub fn two_norm_degrees(&self) -> Vec<u64> {
        let codeg = self.codegrees();
        let mut link_deg = vec![0u64; self.n * self.n];
        let mut along = vec![0u64; self.n];
        let deg = self.degrees();
        for t in &self.edges {
            for (i, &x) in t.iter().enumerate() {
                let (a, b) = match i {
                    0 => (t[1], t[2]),
                    1 => (t[0], t[2]),
                    _ => (t[0], t[1]),
                };
                link_deg[x * self.n + a] += 1;
                link_deg[x * self.n + b] += 1;
                along[x] += codeg.get2(a, b) as u64;
            }
        }
        (0..self.n)
            .map(|v| {
                let sq: u64 = link_deg[v * self.n..(v + 1) * self.n].iter().map(|d| d * d).sum();
                sq + 2 * along[v] - deg[v] as u64
            })
            .collect()
    }

    /// Number of unordered pairs of edges sharing exactly two vertices.
    pub fn count_s2(&self) -> u64 {
        let mut keys: Vec<Pair> = self.edges.iter().flat_map(triple_pairs).collect();
        keys.sort_unstable();
        let mut total = 0u64;
        let mut i = 0;
        while i < keys.len() {
            let mut j = i;
            while j < keys.len() && keys[j] == keys[i] {
                j += 1;
            }
            let run = (j - i) as u64;
            total += run * (run - 1) / 2;
            i = j;
        }
        total
    }

    /// A 4-set spanning all four of its triples, if one exists.
    pub fn find_k43(&self) -> Option<[usize; 4]> {
        for t in &self.edges {
            let [a, b, c] = *t;
            for w in c + 1..self.n {
                if self.has_edge(&[a, b, w]) && self.has_edge(&[a, c, w]) && self.has_edge(&[b, c, w]) {
                    return Some([a, b, c, w]);
                }
            }
        }
        None
    }

    pub fn contains_k43(&self) -> bool {
        self.find_k43().is_some()
    }

    /// Induced subgraph on `s`, relabelled by ascending original label.
    pub fn induce(&self, s: &[usize]) -> Result<ThreeGraph> {
        let mut verts: Vec<usize> = s.to_vec();
        verts.sort_unstable();
        verts.dedup();
        let mut map = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            self.check_vertex(v)?;
            map[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|t| t.iter().all(|&x| map[x] != usize::MAX))
            .map(|t| [map[t[0]], map[t[1]], map[t[2]]])
            .collect();
        Ok(Self::from_normalized(verts.len(), edges))
    }

    /// `H − v`, relabelled.
    pub fn remove_vertex(&self, v: usize) -> Result<ThreeGraph> {
        self.check_vertex(v)?;
        let rest: Vec<usize> = (0..self.n).filter(|&x| x != v).collect();
        self.induce(&rest)
    }

    /// Image under the vertex map `perm` (a permutation of `0..n`).
    pub fn relabel(&self, perm: &[usize]) -> ThreeGraph {
        assert_eq!(perm.len(), self.n);
        let edges = self
            .edges
            .iter()
            .map(|t| {
                let mut s = [perm[t[0]], perm[t[1]], perm[t[2]]];
                s.sort_unstable();
                s
            })
            .collect();
        Self::from_normalized(self.n, edges)
    }

    /// `(H \ remove) ∪ add`, with triples already normalized.
    pub fn with_changes(&self, remove: &[Triple], add: &[Triple]) -> ThreeGraph {
        let mut drop = remove.to_vec();
        drop.sort_unstable();
        let mut edges: Vec<Triple> = self
            .edges
            .iter()
            .filter(|t| drop.binary_search(t).is_err())
            .copied()
            .collect();
        edges.extend_from_slice(add);
        Self::from_normalized(self.n, edges)
    }

    pub fn with_edge(&self, t: Triple) -> ThreeGraph {
        self.with_changes(&[], &[t])
    }

    /// `true` if every edge of `self` is an edge of `other`.
    pub fn is_subgraph_of(&self, other: &ThreeGraph) -> bool {
        self.edges.iter().all(|t| other.has_edge(t))
    }
}

/// A simple graph on vertices `0..n`.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<[usize; 2]>,
    adj: Vec<BitSet>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new<I>(n: usize, pairs: I) -> Result<Graph>
    where
        I: IntoIterator<Item = [usize; 2]>,
    {
        let mut edges = Vec::new();
        for [a, b] in pairs {
            edges.push(Pair::checked(a, b, n)?.as_array());
        }
        Ok(Self::from_normalized(n, edges))
    }

    pub fn empty(n: usize) -> Graph {
        Self::from_normalized(n, Vec::new())
    }

    pub(crate) fn from_normalized(n: usize, mut edges: Vec<[usize; 2]>) -> Graph {
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![BitSet::new(n); n];
        for &[a, b] in &edges {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        Graph { n, edges, adj }
    }

    pub(crate) fn from_adjacency(adj: Vec<BitSet>) -> Graph {
        let n = adj.len();
        let edges = (0..n)
            .flat_map(|u| adj[u].iter().filter(move |&v| v > u).map(move |v| [u, v]))
            .collect();
        Graph { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && self.adj[a].contains(b)
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn adjacency(&self) -> &[BitSet] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(BitSet::count).collect()
    }

    /// `Σ_v d(v)²`.
    pub fn l2_norm(&self) -> u64 {
        self.degrees().iter().map(|&d| (d * d) as u64).sum()
    }

    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges = self
            .edges
            .iter()
            .map(|&[a, b]| Pair::new(perm[a], perm[b]).as_array())
            .collect();
        Self::from_normalized(self.n, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> ThreeGraph {
        ThreeGraph::complete(4)
    }

    #[test]
    fn make_graph_normalizes_and_rejects() {
        let h = ThreeGraph::new(4, [[0, 1, 2]]).unwrap();
        assert_eq!(h.len(), 1);
        let h = ThreeGraph::new(4, [[2, 1, 0], [0, 1, 2]]).unwrap();
        assert_eq!(h.edges(), &[[0, 1, 2]]);
        assert_eq!(
            ThreeGraph::new(3, [[0, 1, 3]]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(ThreeGraph::new(3, [[0, 1, 1]]), Err(Error::DegenerateEdge([0, 1, 1])));
    }

    #[test]
    fn codegree_examples() {
        let h = ThreeGraph::new(4, [[0, 1, 2]]).unwrap();
        assert_eq!(h.codegree(0, 1).unwrap(), 1);
        for a in 0..4 {
            for b in a + 1..4 {
                assert_eq!(k4().codegree(a, b).unwrap(), 2);
            }
        }
        assert!(h.codegree(0, 9).is_err());
    }

    #[test]
    fn link_examples() {
        let h = ThreeGraph::new(4, [[0, 1, 2]]).unwrap();
        assert_eq!(h.link(0).unwrap().edges(), &[[1, 2]]);
        let h = ThreeGraph::new(4, [[0, 1, 2], [0, 1, 3]]).unwrap();
        assert_eq!(h.link(0).unwrap().edges(), &[[1, 2], [1, 3]]);
        assert_eq!(h.link(2).unwrap().edges(), &[[0, 1]]);
    }

    #[test]
    fn shadow_examples() {
        let h = ThreeGraph::new(3, [[0, 1, 2]]).unwrap();
        assert_eq!(h.shadow().edges(), &[[0, 1], [0, 2], [1, 2]]);
        assert!(ThreeGraph::empty(5).shadow().is_empty());
        assert_eq!(k4().shadow().len(), 6);
    }

    #[test]
    fn l2_norm_examples() {
        assert_eq!(ThreeGraph::new(3, [[0, 1, 2]]).unwrap().l2_norm(), 3);
        let star = ThreeGraph::new(5, [[0, 1, 2], [0, 1, 3], [0, 1, 4]]).unwrap();
        assert_eq!(star.l2_norm(), 15);
        assert_eq!(k4().l2_norm(), 24);
    }

    #[test]
    fn two_norm_degree_examples() {
        let h = ThreeGraph::new(3, [[0, 1, 2]]).unwrap();
        assert_eq!(h.two_norm_degree(0).unwrap(), 3);
        assert_eq!(ThreeGraph::empty(4).two_norm_degree(2).unwrap(), 0);
        let h = k4().with_changes(&[[1, 2, 3]], &[]);
        // vertex 0 lies in all three remaining edges
        let oracle = h.l2_norm() - h.remove_vertex(0).unwrap().l2_norm();
        assert_eq!(h.two_norm_degree(0).unwrap(), oracle);
        assert_eq!(oracle, 15);
        assert_eq!(h.two_norm_degrees()[0], 15);
    }

    #[test]
    fn count_s2_examples() {
        assert_eq!(ThreeGraph::new(3, [[0, 1, 2]]).unwrap().count_s2(), 0);
        assert_eq!(ThreeGraph::new(4, [[0, 1, 2], [0, 1, 3]]).unwrap().count_s2(), 1);
        assert_eq!(k4().count_s2(), 6);
        assert_eq!(2 * 6 + 3 * 4, k4().l2_norm());
    }

    #[test]
    fn k43_detection() {
        assert_eq!(k4().find_k43(), Some([0, 1, 2, 3]));
        assert!(!k4().with_changes(&[[0, 1, 3]], &[]).contains_k43());
    }

    #[test]
    fn induce_examples() {
        let h = ThreeGraph::new(4, [[0, 1, 2], [0, 1, 3]]).unwrap();
        let g = h.induce(&[0, 1, 2]).unwrap();
        assert_eq!((g.n(), g.edges()), (3, &[[0, 1, 2]][..]));
        assert_eq!(h.induce(&[0, 1, 2, 3]).unwrap(), h);
        let g = h.induce(&[0, 1, 3]).unwrap();
        assert_eq!(g.edges(), &[[0, 1, 2]]);
        assert!(h.induce(&[7]).is_err());
    }

    #[test]
    fn dense_and_sparse_membership_agree() {
        let big = ThreeGraph::new(30, [[0, 1, 29], [3, 4, 5]]).unwrap();
        assert!(big.has_edge(&[0, 1, 29]) && !big.has_edge(&[0, 1, 28]));
        assert!(big.contains(5, 4, 3));
    }

    #[test]
    fn graph_basics() {
        let p3 = Graph::new(3, [[0, 1], [2, 1]]).unwrap();
        assert_eq!(p3.l2_norm(), 6);
        assert_eq!(Graph::empty(4).l2_norm(), 0);
        assert!(Graph::new(2, [[1, 1]]).is_err());
    }
}
