//! Vertex 3-colored graphs: cyclic triangles, `Λ`, symmetrization and the
//! mixed directed structure.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use alloc::format;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::hypergraph::{Graph, Pair};
use crate::partition::{next, prev, Partition3};
use crate::rational::Rational;

/// Largest order for the exact longest-path search.
pub const EXACT_PATH_MAX_N: usize = 15;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    graph: Graph,
    partition: Partition3,
}

/// Color multisets `{0,1,2}`, `{i,i,i+1}`.
pub fn is_cyclic_type(colors: [usize; 3]) -> bool {
    let mut c = colors;
    c.sort_unstable();
    if c == [0, 1, 2] {
        return true;
    }
    // two equal colors i and a third equal to i + 1
    let (twice, once) = if c[0] == c[1] && c[1] != c[2] {
        (c[0], c[2])
    } else if c[1] == c[2] && c[0] != c[1] {
        (c[1], c[0])
    } else {
        return false;
    };
    once == next(twice)
}

impl ColoredGraph {
    pub fn new(graph: Graph, partition: Partition3) -> Result<ColoredGraph> {
        partition.check_covers(graph.n())?;
        Ok(ColoredGraph { graph, partition })
    }

    pub fn from_edges<I>(partition: Partition3, pairs: I) -> Result<ColoredGraph>
    where
        I: IntoIterator<Item = [usize; 2]>,
    {
        let g = Graph::new(partition.n(), pairs)?;
        Ok(ColoredGraph { graph: g, partition })
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn partition(&self) -> &Partition3 {
        &self.partition
    }

    pub fn len(&self) -> usize {
        self.graph.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    pub fn part(&self, v: usize) -> usize {
        self.partition.part(v)
    }

    fn with_adjacency(&self, adj: Vec<BitSet>) -> ColoredGraph {
        ColoredGraph {
            graph: Graph::from_adjacency(adj),
            partition: self.partition.clone(),
        }
    }

    /// Recolors `i -> i + shift`.
    pub fn rotate_colors(&self, shift: usize) -> ColoredGraph {
        ColoredGraph {
            graph: self.graph.clone(),
            partition: self.partition.rotate(shift),
        }
    }

    /// Triangles of one of the four cyclic types.
    pub fn cyclic_triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        self.scan_cyclic(|t| {
            out.push(t);
            true
        });
        out
    }

    fn scan_cyclic(&self, mut f: impl FnMut([usize; 3]) -> bool) {
        let adj = self.graph.adjacency();
        for &[a, b] in self.graph.edges() {
            let mut common = adj[a].clone();
            common.intersect_with(&adj[b]);
            for c in common.iter().filter(|&c| c > b) {
                if is_cyclic_type([self.part(a), self.part(b), self.part(c)]) && !f([a, b, c]) {
                    return;
                }
            }
        }
    }

    pub fn count_cyclic_triangles(&self) -> u64 {
        let mut k = 0;
        self.scan_cyclic(|_| {
            k += 1;
            true
        });
        k
    }

    pub fn find_cyclic_triangle(&self) -> Option<[usize; 3]> {
        let mut hit = None;
        self.scan_cyclic(|t| {
            hit = Some(t);
            false
        });
        hit
    }

    /// Density of cyclic triangles among all vertex triples.
    pub fn rho3(&self) -> Result<Rational> {
        let n = self.n();
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        let total = (n * (n - 1) * (n - 2) / 6) as i128;
        Ok(Rational::new(self.count_cyclic_triangles() as i128, total))
    }

    pub fn is_cyclic_triangle_free(&self) -> bool {
        self.find_cyclic_triangle().is_none()
    }

    /// Edge counts `e[i][j]` between parts (`e[i][i]` inside part `i`).
    pub fn part_edge_counts(&self) -> [[usize; 3]; 3] {
        let mut e = [[0; 3]; 3];
        for &[a, b] in self.graph.edges() {
            let (i, j) = (self.part(a), self.part(b));
            e[i][j] += 1;
            if i != j {
                e[j][i] += 1;
            }
        }
        e
    }

    /// Smallest 0-based `i` satisfying both local maximality inequalities.
    pub fn locally_maximal_index(&self) -> Option<usize> {
        let e = self.part_edge_counts();
        (0..3).find(|&i| {
            let (j, k) = (next(i), prev(i));
            e[i][j] + e[k][k] >= e[i][k] + e[i][i] && e[j][k] + e[k][k] >= e[i][k] + e[j][j]
        })
    }

    pub fn is_locally_maximal(&self) -> bool {
        self.locally_maximal_index().is_some()
    }

    /// `G_{u→v}`: `u` loses its edges and is joined to `N(v) \ {u}`.
    pub fn symmetrize(&self, u: usize, v: usize) -> Result<ColoredGraph> {
        let n = self.n();
        Pair::checked(u, v, n)?;
        let mut adj = self.graph.adjacency().to_vec();
        for w in adj[u].clone().iter() {
            adj[w].remove(u);
        }
        let mut target = adj[v].clone();
        target.remove(u);
        for w in target.iter() {
            adj[w].insert(u);
        }
        adj[u] = target;
        Ok(self.with_adjacency(adj))
    }

    /// Classes of same-part vertices with identical neighborhoods, numbered
    /// by smallest member.
    pub fn equivalence_classes(&self) -> EquivalenceClasses {
        let mut by_key: BTreeMap<(usize, &BitSet), usize> = BTreeMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of = vec![0; self.n()];
        for v in 0..self.n() {
            let key = (self.part(v), self.graph.neighbors(v));
            let id = *by_key.entry(key).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[id].push(v);
            class_of[v] = id;
        }
        EquivalenceClasses { classes, class_of }
    }

    /// Every vertex of class `from` receives the neighborhood of class `to`
    /// (minus `from` itself).
    pub fn class_symmetrize(&self, from: usize, to: usize) -> Result<ColoredGraph> {
        let ec = self.equivalence_classes();
        self.class_symmetrize_with(&ec, from, to)
    }

    fn class_symmetrize_with(&self, ec: &EquivalenceClasses, from: usize, to: usize) -> Result<ColoredGraph> {
        let k = ec.classes.len();
        for c in [from, to] {
            if c >= k {
                return Err(Error::UnknownClass(c));
            }
        }
        if from == to {
            return Err(Error::SameClass);
        }
        let (src, dst) = (&ec.classes[from], &ec.classes[to]);
        if self.part(src[0]) != self.part(dst[0]) {
            return Err(Error::CrossPartClasses);
        }
        let mut adj = self.graph.adjacency().to_vec();
        let from_set: BitSet = {
            let mut s = BitSet::new(self.n());
            src.iter().for_each(|&x| {
                s.insert(x);
            });
            s
        };
        for &x in src {
            for w in adj[x].clone().iter() {
                adj[w].remove(x);
            }
        }
        let mut target = adj[dst[0]].clone();
        target.difference_with(&from_set);
        for &x in src {
            for w in target.iter() {
                adj[w].insert(x);
            }
            adj[x] = target.clone();
        }
        Ok(self.with_adjacency(adj))
    }

    /// First same-part pair `u < v` (parts scanned in order) that is
    /// nonadjacent and inequivalent.
    pub fn first_unsymmetrized_pair(&self, ec: &EquivalenceClasses) -> Option<(usize, usize)> {
        for i in 0..3 {
            let members = self.partition.members(i);
            for (a, &u) in members.iter().enumerate() {
                for &v in &members[a + 1..] {
                    if !self.graph.has_edge(u, v) && ec.class_of[u] != ec.class_of[v] {
                        return Some((u, v));
                    }
                }
            }
        }
        None
    }

    pub fn is_locally_symmetrized(&self) -> bool {
        self.first_unsymmetrized_pair(&self.equivalence_classes()).is_none()
    }

    /// Merges classes until every nonadjacent same-part pair is equivalent.
    pub fn locally_symmetrize(&self) -> (ColoredGraph, Vec<SymmetrizationStep>) {
        let mut g = self.clone();
        let mut log = Vec::new();
        loop {
            let ec = g.equivalence_classes();
            let Some((u, v)) = g.first_unsymmetrized_pair(&ec) else {
                return (g, log);
            };
            let (cu, cv) = (ec.class_of[u], ec.class_of[v]);
            let toward_v = g.class_symmetrize_with(&ec, cu, cv).expect("same-part classes");
            let toward_u = g.class_symmetrize_with(&ec, cv, cu).expect("same-part classes");
            // ties go toward [u], whose smallest member is u < min [v]
            let (next_g, from, to) = if toward_v.len() > toward_u.len() {
                (toward_v, cu, cv)
            } else {
                (toward_u, cv, cu)
            };
            log.push(SymmetrizationStep {
                part: g.part(u),
                pair: (u, v),
                from_class: ec.classes[from].clone(),
                to_class: ec.classes[to].clone(),
                edges_before: g.len(),
                edges_after: next_g.len(),
                classes_before: ec.classes.len(),
            });
            g = next_g;
        }
    }

    pub fn in_neighbors(&self, v: usize) -> Vec<usize> {
        let p = prev(self.part(v));
        self.graph.neighbors(v).iter().filter(|&w| self.part(w) == p).collect()
    }

    pub fn out_neighbors(&self, v: usize) -> Vec<usize> {
        let p = next(self.part(v));
        self.graph.neighbors(v).iter().filter(|&w| self.part(w) == p).collect()
    }

    pub fn internal_neighbors(&self, v: usize) -> Vec<usize> {
        let p = self.part(v);
        self.graph.neighbors(v).iter().filter(|&w| self.part(w) == p).collect()
    }

    /// `(u, v)` is an edge with `v` in the part after `u`'s.
    pub fn is_directed_edge(&self, u: usize, v: usize) -> bool {
        self.graph.has_edge(u, v) && self.part(v) == next(self.part(u))
    }

    pub fn directed(&self) -> DirectedView<'_> {
        DirectedView::new(self)
    }

    /// Checks the structural facts of a locally symmetrized graph.
    pub fn check_symmetrized_facts(&self) -> Result<FactReport> {
        let ec = self.equivalence_classes();
        if let Some((u, v)) = self.first_unsymmetrized_pair(&ec) {
            return Err(Error::NotLocallySymmetrized(format!(
                "vertices {u} and {v} are nonadjacent and inequivalent"
            )));
        }
        let mut facts = Vec::new();
        let ctf = self.is_cyclic_triangle_free();

        // classes are independent
        let mut w = None;
        'outer: for c in &ec.classes {
            for (a, &x) in c.iter().enumerate() {
                for &y in &c[a + 1..] {
                    if self.graph.has_edge(x, y) {
                        w = Some(vec![x, y]);
                        break 'outer;
                    }
                }
            }
        }
        facts.push(Fact::new("classes-independent", true, w));

        // distinct classes within a part are complete to each other
        let mut w = None;
        'outer2: for u in 0..self.n() {
            for v in u + 1..self.n() {
                if self.part(u) == self.part(v)
                    && ec.class_of[u] != ec.class_of[v]
                    && !self.graph.has_edge(u, v)
                {
                    w = Some(vec![u, v]);
                    break 'outer2;
                }
            }
            let size = self.partition.sizes()[self.part(u)];
            if self.internal_neighbors(u).len() != size - ec.classes[ec.class_of[u]].len() {
                w = Some(vec![u]);
                break;
            }
        }
        facts.push(Fact::new("classes-complete", true, w));

        // minimum-length directed cycles are distinct
        let dv = self.directed();
        let w = dv
            .minimum_cycles(10_000)
            .into_iter()
            .find(|c| !ec.is_distinct(c));
        facts.push(Fact::new("short-cycles-distinct", true, w));

        // in-neighborhoods are empty or one whole class
        let mut w = None;
        for v in 0..self.n() {
            let inn = self.in_neighbors(v);
            if inn.is_empty() {
                continue;
            }
            let c = &ec.classes[ec.class_of[inn[0]]];
            if *c != inn {
                w = Some(vec![v]);
                break;
            }
        }
        facts.push(Fact::new("in-neighborhood-class", ctf, w));

        // N^-(u) and N^+(v) are disjoint along directed edges
        let mut w = None;
        'outer3: for &[a, b] in self.graph.edges() {
            for (u, v) in [(a, b), (b, a)] {
                if self.is_directed_edge(u, v) {
                    let out: Vec<usize> = self.out_neighbors(v);
                    if let Some(&x) = self.in_neighbors(u).iter().find(|x| out.contains(x)) {
                        w = Some(vec![u, v, x]);
                        break 'outer3;
                    }
                }
            }
        }
        facts.push(Fact::new("in-out-disjoint", ctf, w));

        Ok(FactReport {
            cyclic_triangle_free: ctf,
            facts,
        })
    }

    /// Degree sum along a directed path `x1 y1 z1 ... xk yk zk` compared with
    /// `3(k+1)n`, `n` the largest part size.
    pub fn degree_sum_on_path(&self, path: &[usize]) -> Result<PathBound> {
        if path.is_empty() || path.len() % 3 != 0 {
            return Err(Error::MalformedPath(format!(
                "length {} is not a positive multiple of 3",
                path.len()
            )));
        }
        let mut seen = BitSet::new(self.n());
        for (i, &v) in path.iter().enumerate() {
            if v >= self.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
            }
            if self.part(v) != i % 3 {
                return Err(Error::MalformedPath(format!(
                    "vertex {v} at position {i} is not in part {}",
                    i % 3 + 1
                )));
            }
            if !seen.insert(v) {
                return Err(Error::MalformedPath(format!("vertex {v} repeats")));
            }
        }
        for w in path.windows(2) {
            if !self.is_directed_edge(w[0], w[1]) {
                return Err(Error::MalformedPath(format!(
                    "{} -> {} is not a directed edge",
                    w[0], w[1]
                )));
            }
        }
        let k = path.len() / 3;
        let n = self.partition.sizes().into_iter().max().unwrap_or(0);
        let sum: usize = path.iter().map(|&v| self.graph.degree(v)).sum();
        let bound = 3 * (k + 1) * n;
        let ec = self.equivalence_classes();
        let inn = self.in_neighbors(path[0]);
        let zk = path[path.len() - 1];
        let precondition = inn.is_empty() || inn == ec.classes[ec.class_of[zk]];
        let distinct = ec.is_distinct(path);
        let hypotheses = precondition
            && distinct
            && self.is_cyclic_triangle_free()
            && self.first_unsymmetrized_pair(&ec).is_none();
        Ok(PathBound {
            k,
            n,
            sum,
            bound,
            holds: sum <= bound,
            precondition,
            distinct,
            hypotheses,
        })
    }
}

/// `Λ[V1,V2,V3]`: all `V1–V2` and `V2–V3` pairs plus all pairs inside `V3`.
pub fn build_lambda(n1: usize, n2: usize, n3: usize) -> ColoredGraph {
    let p = Partition3::from_sizes(n1, n2, n3);
    let (v1, v2, v3) = (0..n1, n1..n1 + n2, n1 + n2..n1 + n2 + n3);
    let mut edges = Vec::new();
    for a in v1.clone() {
        for b in v2.clone() {
            edges.push([a, b]);
        }
    }
    for b in v2 {
        for c in v3.clone() {
            edges.push([b, c]);
        }
    }
    for c in v3.clone() {
        for d in c + 1..v3.end {
            edges.push([c, d]);
        }
    }
    ColoredGraph::from_edges(p, edges).expect("valid construction")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceClasses {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

impl EquivalenceClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// No two vertices of `walk` share a class.
    pub fn is_distinct(&self, walk: &[usize]) -> bool {
        let mut ids: Vec<usize> = walk.iter().map(|&v| self.class_of[v]).collect();
        ids.sort_unstable();
        ids.windows(2).all(|w| w[0] != w[1])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetrizationStep {
    pub part: usize,
    pub pair: (usize, usize),
    pub from_class: Vec<usize>,
    pub to_class: Vec<usize>,
    pub edges_before: usize,
    pub edges_after: usize,
    pub classes_before: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fact {
    pub id: &'static str,
    /// `false` when the fact's hypotheses do not hold (reported, not checked).
    pub applies: bool,
    pub pass: bool,
    pub witness: Option<Vec<usize>>,
}

impl Fact {
    fn new(id: &'static str, applies: bool, witness: Option<Vec<usize>>) -> Fact {
        Fact {
            id,
            applies,
            pass: !applies || witness.is_none(),
            witness: if applies { witness } else { None },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactReport {
    pub cyclic_triangle_free: bool,
    pub facts: Vec<Fact>,
}

impl FactReport {
    pub fn all_pass(&self) -> bool {
        self.facts.iter().all(|f| f.pass)
    }

    pub fn get(&self, id: &str) -> Option<&Fact> {
        self.facts.iter().find(|f| f.id == id)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathBound {
    pub k: usize,
    /// Largest part size, used as `n` in the bound.
    pub n: usize,
    pub sum: usize,
    pub bound: usize,
    pub holds: bool,
    /// `N^-(x1)` is empty or the class of `zk`.
    pub precondition: bool,
    pub distinct: bool,
    /// All hypotheses of the bound hold, so `holds` is expected.
    pub hypotheses: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LongestPath {
    pub path: Vec<usize>,
    pub exact: bool,
}

/// The orientation `V_i → V_{i+1}` of all cross edges.
pub struct DirectedView<'a> {
    cg: &'a ColoredGraph,
    out: Vec<Vec<usize>>,
}

impl<'a> DirectedView<'a> {
    fn new(cg: &'a ColoredGraph) -> Self {
        let out = (0..cg.n()).map(|v| cg.out_neighbors(v)).collect();
        DirectedView { cg, out }
    }

    pub fn out(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn has_directed_cycle(&self) -> bool {
        // 0 = new, 1 = on stack, 2 = done
        let n = self.cg.n();
        let mut state = vec![0u8; n];
        for s in 0..n {
            if state[s] != 0 {
                continue;
            }
            let mut stack = vec![(s, 0usize)];
            state[s] = 1;
            while let Some(&mut (v, ref mut i)) = stack.last_mut() {
                if *i < self.out[v].len() {
                    let w = self.out[v][*i];
                    *i += 1;
                    match state[w] {
                        0 => {
                            state[w] = 1;
                            stack.push((w, 0));
                        }
                        1 => return true,
                        _ => {}
                    }
                } else {
                    state[v] = 2;
                    stack.pop();
                }
            }
        }
        false
    }

    /// Shortest directed cycle through `s`, by BFS.
    fn shortest_cycle_through(&self, s: usize) -> Option<Vec<usize>> {
        let n = self.cg.n();
        let mut parent = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        let mut queue = alloc::collections::VecDeque::new();
        seen[s] = true;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &w in &self.out[v] {
                if w == s {
                    let mut cyc = vec![v];
                    let mut x = v;
                    while x != s {
                        x = parent[x];
                        cyc.push(x);
                    }
                    cyc.reverse();
                    return Some(cyc);
                }
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    pub fn shortest_directed_cycle(&self) -> Option<Vec<usize>> {
        (0..self.cg.n())
            .filter_map(|s| self.shortest_cycle_through(s))
            .min_by_key(|c| c.len())
    }

    /// All minimum-length directed cycles, each listed from its smallest
    /// vertex, up to `limit` cycles.
    pub fn minimum_cycles(&self, limit: usize) -> Vec<Vec<usize>> {
        let Some(len) = self.shortest_directed_cycle().map(|c| c.len()) else {
            return Vec::new();
        };
        let mut out = Vec::new();
        for s in 0..self.cg.n() {
            let mut path = vec![s];
            self.extend_cycles(s, len, &mut path, &mut out, limit);
            if out.len() >= limit {
                break;
            }
        }
        out
    }

    fn extend_cycles(&self, s: usize, len: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, limit: usize) {
        if out.len() >= limit {
            return;
        }
        let v = *path.last().unwrap();
        for &w in &self.out[v] {
            if w == s && path.len() == len {
                out.push(path.clone());
            } else if w > s && path.len() < len && !path.contains(&w) {
                path.push(w);
                self.extend_cycles(s, len, path, out, limit);
                path.pop();
            }
        }
    }

    /// Longest directed path (in vertices). Exact for small orders, greedy
    /// otherwise.
    pub fn longest_directed_path(&self) -> LongestPath {
        let n = self.cg.n();
        if n == 0 {
            return LongestPath {
                path: Vec::new(),
                exact: true,
            };
        }
        if n <= EXACT_PATH_MAX_N {
            self.longest_exact()
        } else {
            self.longest_greedy()
        }
    }

    fn longest_exact(&self) -> LongestPath {
        let n = self.cg.n();
        let full = 1usize << n;
        // reach[mask] bit v: some path visits exactly `mask` and ends at v
        let mut reach = vec![0u32; full];
        let mut best = (1usize, 1usize << 0, 0usize);
        for v in 0..n {
            reach[1 << v] |= 1 << v;
        }
        for mask in 1..full {
            let ends = reach[mask];
            if ends == 0 {
                continue;
            }
            let size = mask.count_ones() as usize;
            for v in 0..n {
                if ends >> v & 1 == 0 {
                    continue;
                }
                if size > best.0 {
                    best = (size, mask, v);
                }
                for &w in &self.out[v] {
                    if mask >> w & 1 == 0 {
                        reach[mask | 1 << w] |= 1 << w;
                    }
                }
            }
        }
        // walk back
        let (_, mut mask, mut v) = best;
        let mut path = vec![v];
        while mask.count_ones() > 1 {
            let prev_mask = mask & !(1 << v);
            let u = (0..n)
                .find(|&u| reach[prev_mask] >> u & 1 == 1 && self.out[u].contains(&v))
                .expect("predecessor exists");
            path.push(u);
            mask = prev_mask;
            v = u;
        }
        path.reverse();
        LongestPath { path, exact: true }
    }

    fn longest_greedy(&self) -> LongestPath {
        let n = self.cg.n();
        let mut best: Vec<usize> = Vec::new();
        for s in 0..n {
            let mut path = vec![s];
            let mut used = vec![false; n];
            used[s] = true;
            loop {
                let v = *path.last().unwrap();
                let pick = self.out[v]
                    .iter()
                    .copied()
                    .filter(|&w| !used[w])
                    .max_by_key(|&w| (self.out[w].iter().filter(|&&x| !used[x]).count(), usize::MAX - w));
                match pick {
                    Some(w) => {
                        used[w] = true;
                        path.push(w);
                    }
                    None => break,
                }
            }
            if path.len() > best.len() {
                best = path;
            }
        }
        LongestPath {
            path: best,
            exact: false,
        }
    }
}

/// Human-readable one-line summary of a step.
pub fn describe_step(s: &SymmetrizationStep) -> String {
    format!(
        "part {}: {:?} -> {:?} ({} -> {} edges)",
        s.part + 1,
        s.from_class,
        s.to_class,
        s.edges_before,
        s.edges_after
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn triangle(colors: [usize; 3]) -> ColoredGraph {
        ColoredGraph::from_edges(Partition3::from_labels(&colors).unwrap(), [[0, 1], [1, 2], [0, 2]]).unwrap()
    }

    #[test]
    fn cyclic_types() {
        assert!(is_cyclic_type([0, 1, 2]));
        assert!(is_cyclic_type([0, 0, 1]));
        assert!(is_cyclic_type([2, 1, 1]));
        assert!(is_cyclic_type([0, 2, 2]));
        assert!(!is_cyclic_type([0, 0, 2]));
        assert!(!is_cyclic_type([1, 1, 1]));
        assert!(!is_cyclic_type([1, 2, 2]));
    }

    #[test]
    fn rho3_examples() {
        assert_eq!(build_lambda(2, 2, 2).rho3().unwrap(), frac(0, 1));
        assert_eq!(triangle([1, 2, 3]).rho3().unwrap(), frac(1, 1));
        assert_eq!(triangle([1, 1, 3]).rho3().unwrap(), frac(0, 1));
        assert_eq!(triangle([1, 1, 2]).rho3().unwrap(), frac(1, 1));
        let two = ColoredGraph::from_edges(Partition3::from_sizes(1, 1, 0), [[0, 1]]).unwrap();
        assert_eq!(two.rho3(), Err(Error::TooFewVertices(2)));
        assert!(!triangle([1, 2, 3]).is_cyclic_triangle_free());
        assert!(ColoredGraph::from_edges(Partition3::from_sizes(2, 2, 2), []).unwrap().is_cyclic_triangle_free());
    }

    #[test]
    fn lambda_counts() {
        let l = build_lambda(1, 1, 1);
        assert_eq!(l.graph().edges(), &[[0, 1], [1, 2]]);
        assert_eq!(l.graph().l2_norm(), 6);
        assert_eq!(build_lambda(2, 2, 2).len(), 9);
        assert_eq!(build_lambda(0, 0, 2).graph().edges(), &[[0, 1]]);
        for n in 1..=8usize {
            let l = build_lambda(n, n, n);
            assert_eq!(2 * l.len(), 5 * n * n - n);
            assert_eq!(l.graph().l2_norm() as usize, 9 * n * n * n - 4 * n * n + n);
            assert!(l.is_cyclic_triangle_free());
        }
    }

    #[test]
    fn locally_maximal_examples() {
        assert!(build_lambda(3, 3, 3).is_locally_maximal());
        let empty = ColoredGraph::from_edges(Partition3::from_sizes(2, 2, 2), []).unwrap();
        assert_eq!(empty.locally_maximal_index(), Some(0));
        let one = ColoredGraph::from_edges(Partition3::from_sizes(2, 2, 2), [[0, 1]]).unwrap();
        assert_eq!(one.locally_maximal_index(), Some(1));
    }

    #[test]
    fn symmetrize_examples() {
        let p = Partition3::from_sizes(2, 2, 2);
        // u = 0, v = 1 with N(0) = N(1) = {2}
        let g = ColoredGraph::from_edges(p.clone(), [[0, 2], [1, 2]]).unwrap();
        assert_eq!(g.symmetrize(0, 1).unwrap(), g);
        let g = ColoredGraph::from_edges(p.clone(), [[0, 1]]).unwrap();
        assert!(g.symmetrize(0, 1).unwrap().is_empty());
        // star centered at 2, leaf 0 becomes a twin of 2 without self-loop
        let g = ColoredGraph::from_edges(p.clone(), [[2, 0], [2, 4], [2, 5]]).unwrap();
        let s = g.symmetrize(0, 2).unwrap();
        assert_eq!(s.graph().edges(), &[[0, 4], [0, 5], [2, 4], [2, 5]]);
        assert_eq!(g.symmetrize(3, 3), Err(Error::SameVertex(3)));
    }

    #[test]
    fn equivalence_class_examples() {
        let empty = ColoredGraph::from_edges(Partition3::from_sizes(2, 2, 2), []).unwrap();
        assert_eq!(empty.equivalence_classes().len(), 3);
        let ec = build_lambda(2, 2, 2).equivalence_classes();
        assert_eq!(ec.classes, vec![vec![0, 1], vec![2, 3], vec![4], vec![5]]);
        let kb = ColoredGraph::from_edges(Partition3::from_sizes(2, 2, 2), [[0, 2], [0, 3], [1, 2], [1, 3]]).unwrap();
        assert_eq!(kb.equivalence_classes().len(), 3);
    }

    #[test]
    fn class_symmetrize_examples() {
        let l = build_lambda(2, 2, 2);
        let merged = l.class_symmetrize(3, 2).unwrap();
        assert_eq!(merged.len(), 8);
        assert!(!merged.graph().has_edge(4, 5));
        assert_eq!(l.class_symmetrize(1, 1), Err(Error::SameClass));
        assert_eq!(l.class_symmetrize(0, 1), Err(Error::CrossPartClasses));
        assert_eq!(l.class_symmetrize(0, 9), Err(Error::UnknownClass(9)));
    }

    #[test]
    fn locally_symmetrize_fixpoints() {
        let l = build_lambda(2, 2, 2);
        let (out, log) = l.locally_symmetrize();
        assert!(log.is_empty());
        assert_eq!(out, l);
        let empty = ColoredGraph::from_edges(Partition3::from_sizes(2, 2, 2), []).unwrap();
        assert!(empty.locally_symmetrize().1.is_empty());
        // 0 and 1 in V1 with different neighborhoods
        let g = ColoredGraph::from_edges(Partition3::from_sizes(2, 2, 2), [[0, 2], [0, 3], [1, 2]]).unwrap();
        let (out, log) = g.locally_symmetrize();
        assert_eq!(log.len(), 1);
        assert!(out.len() >= g.len());
        assert!(out.is_locally_symmetrized());
    }

    #[test]
    fn facts_on_lambda_and_violations() {
        let r = build_lambda(3, 3, 3).check_symmetrized_facts().unwrap();
        assert!(r.all_pass(), "{r:?}");
        let empty = ColoredGraph::from_edges(Partition3::from_sizes(2, 2, 2), []).unwrap();
        assert!(empty.check_symmetrized_facts().unwrap().all_pass());
        let g = ColoredGraph::from_edges(Partition3::from_sizes(2, 2, 2), [[0, 2]]).unwrap();
        assert!(matches!(g.check_symmetrized_facts(), Err(Error::NotLocallySymmetrized(_))));
    }

    #[test]
    fn directed_examples() {
        let l = build_lambda(2, 2, 2);
        assert!(!l.directed().has_directed_cycle());
        let t = triangle([1, 2, 3]);
        assert!(t.directed().has_directed_cycle());
        assert_eq!(t.directed().shortest_directed_cycle().unwrap().len(), 3);
        let e = ColoredGraph::from_edges(Partition3::from_sizes(1, 1, 1), []).unwrap();
        assert_eq!(e.directed().longest_directed_path().path.len(), 1);
        let lp = build_lambda(2, 2, 2).directed().longest_directed_path();
        assert_eq!(lp.path.len(), 3);
        assert!(lp.exact);
    }

    #[test]
    fn path_bound_examples() {
        let n = 4;
        let l = build_lambda(n, n, n);
        let r = l.degree_sum_on_path(&[0, n, 2 * n]).unwrap();
        assert_eq!(r.sum, n + 2 * n + (2 * n - 1));
        assert!(r.sum <= 6 * n);
        assert!(r.holds && r.hypotheses);
        assert!(matches!(l.degree_sum_on_path(&[]), Err(Error::MalformedPath(_))));
        assert!(matches!(l.degree_sum_on_path(&[0, 2 * n, n]), Err(Error::MalformedPath(_))));
    }
}
