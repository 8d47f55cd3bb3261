//! Exhaustive extremal searches at small orders.
//!
//! * K4³-free 3-graphs maximizing the l2-norm: level-wise isomorph-free
//!   generation (one canonical representative per class and edge count) with
//!   the sound bound `Σ_p (d(p) + a(p))²`, where `a(p)` counts the triples
//!   through `p` that can still be added. A naive scan serves as oracle.
//! * Cyclically triangle-free colored graphs with parts of size `n`
//!   (edge count or graph l2): a full scan, or a search over locally
//!   symmetrized blow-ups of small class graphs.
//! * Triangle-free 3-partite graphs: branch and bound over cross pairs plus
//!   a match against the split complete bipartite template.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::canon::{canonical_colored, canonical_form, canonize, COLORED_CAP};
use crate::colored::{build_lambda, is_cyclic_type, ColoredGraph};
use crate::constructions::{best_c_value, build_c, Composition3};
use crate::error::{Error, Result};
use crate::hypergraph::{ThreeGraph, Triple};
use crate::partition::{next, Partition3};
use crate::rational::{frac, int, Rational};

/// Largest order for [`census_k43`].
pub const K43_CAP: usize = 8;
/// Largest order for [`census_k43_naive`].
pub const K43_NAIVE_CAP: usize = 6;
/// Largest part size for the full colored scan (`3n <= 8`).
pub const MANTEL_EXHAUSTIVE_CAP: usize = 2;
/// Largest part size for the symmetrized colored search.
pub const MANTEL_ASSISTED_CAP: usize = 12;
/// Default bound on the number of classes in the symmetrized search.
pub const DEFAULT_CLASS_CAP: usize = 6;
/// Largest part size for the tripartite search.
pub const TRIPARTITE_CAP: usize = 3;
/// Largest part size for the naive tripartite scan.
pub const TRIPARTITE_NAIVE_CAP: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Objective {
    K43L2,
    MantelEdges,
    MantelL2,
    Tripartite,
}

impl Objective {
    pub fn name(self) -> &'static str {
        match self {
            Objective::K43L2 => "k43-l2",
            Objective::MantelEdges => "mantel-edges",
            Objective::MantelL2 => "mantel-l2",
            Objective::Tripartite => "tripartite",
        }
    }

    pub fn parse(s: &str) -> Result<Objective> {
        [Objective::K43L2, Objective::MantelEdges, Objective::MantelL2, Objective::Tripartite]
            .into_iter()
            .find(|o| o.name() == s)
            .ok_or_else(|| Error::InvalidParameter(alloc::format!("unknown census problem {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Representatives {
    ThreeGraphs(Vec<ThreeGraph>),
    Colored(Vec<ColoredGraph>),
}

impl Representatives {
    pub fn len(&self) -> usize {
        match self {
            Representatives::ThreeGraphs(v) => v.len(),
            Representatives::Colored(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Named construction the optimum is compared with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reference {
    pub name: String,
    pub value: u64,
    pub attains: bool,
    /// Every extremal class is a copy of the reference.
    pub unique: bool,
}

/// `optimum <= value`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpperBound {
    pub name: &'static str,
    pub value: Rational,
    pub holds: bool,
}

/// Split-template check for tripartite maximizers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TemplateCheck {
    pub all_match: bool,
    /// A maximizer that matches no template.
    pub witness: Option<ColoredGraph>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub n: usize,
    pub objective: Objective,
    pub optimum: u64,
    /// The optimum is over the whole class (not a restricted search).
    pub exact: bool,
    /// One canonical representative per extremal class.
    pub representatives: Representatives,
    /// Number of extremal classes, if classes were computed.
    pub class_count: Option<usize>,
    /// Classes modulo cyclic recoloring (colored problems).
    pub rotation_class_count: Option<usize>,
    /// Labeled extremal objects (scan modes).
    pub labeled_count: Option<u64>,
    pub reference: Reference,
    pub upper_bound: Option<UpperBound>,
    pub template: Option<TemplateCheck>,
    pub nodes: u64,
}

impl CensusReport {
    pub fn reference_ok(&self) -> bool {
        self.optimum >= self.reference.value
    }
}

// ---------------------------------------------------------------------------
// K4³-free l2 maximum

/// Triples of `[n]` as bit positions, with the data needed for fast
/// augmentation.
#[derive(Clone, Debug)]
pub struct K43Search {
    n: usize,
    triples: Vec<Triple>,
    /// `blockers[t]`: masks of three triples completing a K4³ with `t`.
    blockers: Vec<Vec<u64>>,
    pair_masks: Vec<u64>,
}

/// Result of expanding one node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    /// l2-norm when the node admits no further triple.
    pub leaf: Option<u64>,
    /// Canonical children (empty for leaves and pruned nodes).
    pub children: Vec<u64>,
}

impl K43Search {
    pub fn new(n: usize) -> Result<K43Search> {
        if n > K43_CAP {
            return Err(Error::SizeLimitExceeded { n, cap: K43_CAP });
        }
        let triples = ThreeGraph::complete(n).edges().to_vec();
        let index = |t: [usize; 3]| {
            let mut t = t;
            t.sort_unstable();
            triples.binary_search(&t).expect("triple")
        };
        let blockers = triples
            .iter()
            .map(|&[a, b, c]| {
                (0..n)
                    .filter(|x| ![a, b, c].contains(x))
                    .map(|x| (1u64 << index([a, b, x])) | (1 << index([a, c, x])) | (1 << index([b, c, x])))
                    .collect()
            })
            .collect();
        let mut pair_masks = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let m = triples
                    .iter()
                    .enumerate()
                    .filter(|(_, t)| t.contains(&a) && t.contains(&b))
                    .fold(0u64, |m, (i, _)| m | (1 << i));
                pair_masks.push(m);
            }
        }
        Ok(K43Search {
            n,
            triples,
            blockers,
            pair_masks,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn graph(&self, mask: u64) -> ThreeGraph {
        let edges = (0..self.triples.len()).filter(|&i| mask >> i & 1 == 1).map(|i| self.triples[i]);
        ThreeGraph::new(self.n, edges).expect("valid triples")
    }

    pub fn mask(&self, edges: &[Triple]) -> u64 {
        edges
            .iter()
            .fold(0, |m, t| m | (1 << self.triples.binary_search(t).expect("triple")))
    }

    /// Triples absent from `mask` whose addition keeps it K4³-free.
    pub fn addable(&self, mask: u64) -> u64 {
        let mut a = 0;
        for (i, bl) in self.blockers.iter().enumerate() {
            if mask >> i & 1 == 0 && bl.iter().all(|&b| b & mask != b) {
                a |= 1 << i;
            }
        }
        a
    }

    pub fn l2(&self, mask: u64) -> u64 {
        self.pair_masks.iter().map(|&p| u64::from((p & mask).count_ones()).pow(2)).sum()
    }

    pub fn upper_bound(&self, mask: u64, addable: u64) -> u64 {
        self.pair_masks
            .iter()
            .map(|&p| u64::from((p & mask).count_ones() + (p & addable).count_ones()).pow(2))
            .sum()
    }

    pub fn is_k43_free(&self, mask: u64) -> bool {
        (0..self.triples.len()).all(|i| mask >> i & 1 == 0 || self.blockers[i].iter().all(|&b| b & mask != b))
    }

    pub fn canonical(&self, mask: u64) -> u64 {
        let edges: Vec<Triple> = (0..self.triples.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| self.triples[i])
            .collect();
        let f = canonize(self.n, &edges, &vec![0; self.n]);
        self.mask(&f.edges)
    }

    /// Expands a node against the incumbent `best`; prunes when the bound is
    /// strictly below it.
    pub fn expand(&self, mask: u64, best: u64) -> Expansion {
        let a = self.addable(mask);
        if a == 0 {
            return Expansion {
                leaf: Some(self.l2(mask)),
                children: Vec::new(),
            };
        }
        if self.upper_bound(mask, a) < best {
            return Expansion {
                leaf: None,
                children: Vec::new(),
            };
        }
        let mut children: Vec<u64> = (0..self.triples.len())
            .filter(|&i| a >> i & 1 == 1)
            .map(|i| self.canonical(mask | 1 << i))
            .collect();
        children.sort_unstable();
        children.dedup();
        Expansion { leaf: None, children }
    }
}

/// Canonical keys of `C(c)` for every composition attaining the best value.
fn c_reference(n: usize) -> (u64, BTreeSet<Vec<Triple>>) {
    let (_, best) = best_c_value(n);
    let keys = Composition3::all(n)
        .into_iter()
        .filter(|&c| crate::constructions::c_l2_closed(c) == best)
        .map(|c| canonical_form(&build_c(c).0).expect("within cap").edges)
        .collect();
    (best.to_integer() as u64, keys)
}

fn k43_report(n: usize, optimum: u64, extremal: Vec<ThreeGraph>, nodes: u64, labeled: Option<u64>) -> CensusReport {
    let (value, keys) = c_reference(n);
    let forms: Vec<Vec<Triple>> = extremal.iter().map(|g| canonical_form(g).expect("within cap").edges).collect();
    let attains = optimum == value;
    CensusReport {
        n,
        objective: Objective::K43L2,
        optimum,
        exact: true,
        class_count: Some(extremal.len()),
        rotation_class_count: None,
        labeled_count: labeled,
        reference: Reference {
            name: alloc::format!("C_{n}"),
            value,
            attains,
            unique: attains && forms.iter().all(|f| keys.contains(f)),
        },
        representatives: Representatives::ThreeGraphs(extremal),
        upper_bound: None,
        template: None,
        nodes,
    }
}

/// Runs the level-wise search; `expand_level` maps a level to expansions in
/// order and may do so in parallel.
pub fn census_k43_with<F>(n: usize, mut expand_level: F) -> Result<CensusReport>
where
    F: FnMut(&K43Search, &[u64], u64) -> Vec<Expansion>,
{
    let search = K43Search::new(n)?;
    let (mut best, _) = c_reference(n);
    let mut extremal: BTreeSet<u64> = BTreeSet::new();
    let mut level: Vec<u64> = vec![0];
    let mut nodes = 0u64;
    while !level.is_empty() {
        nodes += level.len() as u64;
        let expansions = expand_level(&search, &level, best);
        let mut next: BTreeSet<u64> = BTreeSet::new();
        for (&g, ex) in level.iter().zip(expansions) {
            if let Some(v) = ex.leaf {
                if v > best {
                    best = v;
                    extremal.clear();
                }
                if v == best {
                    extremal.insert(g);
                }
            }
            next.extend(ex.children);
        }
        level = next.into_iter().collect();
    }
    let graphs = extremal.iter().map(|&m| search.graph(m)).collect();
    Ok(k43_report(n, best, graphs, nodes, None))
}

/// Maximum l2-norm of a K4³-free 3-graph on `n <= 8` vertices.
pub fn census_k43(n: usize) -> Result<CensusReport> {
    census_k43_with(n, |s, level, best| level.iter().map(|&g| s.expand(g, best)).collect())
}

/// Oracle: scans all `2^C(n,3)` edge sets.
pub fn census_k43_naive(n: usize) -> Result<CensusReport> {
    if n > K43_NAIVE_CAP {
        return Err(Error::SizeLimitExceeded { n, cap: K43_NAIVE_CAP });
    }
    let s = K43Search::new(n)?;
    let m = s.triples.len();
    let mut best = 0u64;
    let mut maximizers: Vec<u64> = Vec::new();
    for mask in 0u64..(1u64 << m) {
        if !s.is_k43_free(mask) {
            continue;
        }
        let v = s.l2(mask);
        if v > best {
            best = v;
            maximizers.clear();
        }
        if v == best {
            maximizers.push(mask);
        }
    }
    let labeled = maximizers.len() as u64;
    let classes: BTreeSet<u64> = maximizers.iter().map(|&g| s.canonical(g)).collect();
    let graphs = classes.iter().map(|&g| s.graph(g)).collect();
    Ok(k43_report(n, best, graphs, 1u64 << m, Some(labeled)))
}

// ---------------------------------------------------------------------------
// Colored Mantel

fn lambda_value(n: usize, objective: Objective) -> u64 {
    let l = build_lambda(n, n, n);
    match objective {
        Objective::MantelL2 => l.graph().l2_norm(),
        _ => l.len() as u64,
    }
}

fn rotation_key(g: &ColoredGraph) -> Result<(Vec<u8>, Vec<[usize; 2]>)> {
    let mut best: Option<(Vec<u8>, Vec<[usize; 2]>)> = None;
    for s in 0..3 {
        let f = canonical_colored(&g.rotate_colors(s))?;
        let k = (f.colors, f.edges);
        if best.as_ref().is_none_or(|b| k < *b) {
            best = Some(k);
        }
    }
    Ok(best.expect("three rotations"))
}

/// Canonical representatives of `graphs` plus the rotation-quotiented count.
fn colored_classes(graphs: &[ColoredGraph]) -> Result<(Vec<ColoredGraph>, usize)> {
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    let mut rot = BTreeSet::new();
    for g in graphs {
        let f = canonical_colored(g)?;
        if seen.insert((f.colors.clone(), f.edges.clone())) {
            let mut inv = vec![0usize; g.n()];
            for (old, &new) in f.labeling.iter().enumerate() {
                inv[new] = old;
            }
            let parts: Vec<u8> = (0..g.n()).map(|v| g.partition().parts()[inv[v]]).collect();
            reps.push(ColoredGraph::from_edges(Partition3::new(parts)?, f.edges.iter().copied())?);
            rot.insert(rotation_key(g)?);
        }
    }
    Ok((reps, rot.len()))
}

fn mantel_bound(n: usize, objective: Objective, optimum: u64) -> Option<UpperBound> {
    if objective != Objective::MantelEdges {
        return None;
    }
    let nn = int(n as i128);
    let value = frac(5, 2) * nn * nn + int(5) * nn;
    Some(UpperBound {
        name: "5n^2/2+5n",
        value,
        holds: int(optimum as i128) <= value,
    })
}

fn mantel_report(
    n: usize,
    objective: Objective,
    optimum: u64,
    exact: bool,
    maximizers: &[ColoredGraph],
    labeled: Option<u64>,
    nodes: u64,
) -> Result<CensusReport> {
    let (reps, class_count, rotation_class_count) = if 3 * n <= COLORED_CAP {
        let (reps, rot) = colored_classes(maximizers)?;
        let c = reps.len();
        (reps, Some(c), Some(rot))
    } else {
        (maximizers.to_vec(), None, None)
    };
    let value = lambda_value(n, objective);
    let lambda_keys: BTreeSet<_> = if 3 * n <= COLORED_CAP {
        (0..3)
            .map(|s| {
                let f = canonical_colored(&build_lambda(n, n, n).rotate_colors(s)).expect("within cap");
                (f.colors, f.edges)
            })
            .collect()
    } else {
        BTreeSet::new()
    };
    let attains = optimum == value;
    let unique = attains
        && class_count.is_some()
        && reps.iter().all(|g| {
            let f = canonical_colored(g).expect("within cap");
            lambda_keys.contains(&(f.colors, f.edges))
        });
    Ok(CensusReport {
        n,
        objective,
        optimum,
        exact,
        class_count,
        rotation_class_count,
        labeled_count: labeled,
        reference: Reference {
            name: alloc::format!("Lambda({n},{n},{n})"),
            value,
            attains,
            unique,
        },
        upper_bound: mantel_bound(n, objective, optimum),
        template: None,
        representatives: Representatives::Colored(reps),
        nodes,
    })
}

fn check_mantel_objective(objective: Objective) -> Result<()> {
    match objective {
        Objective::MantelEdges | Objective::MantelL2 => Ok(()),
        o => Err(Error::InvalidParameter(alloc::format!("{} is not a colored objective", o.name()))),
    }
}

/// Scans every colored graph with parts of size `n <= 2`.
pub fn census_colored_mantel(n: usize, objective: Objective) -> Result<CensusReport> {
    check_mantel_objective(objective)?;
    if n > MANTEL_EXHAUSTIVE_CAP {
        return Err(Error::SizeLimitExceeded {
            n,
            cap: MANTEL_EXHAUSTIVE_CAP,
        });
    }
    let v = 3 * n;
    let p = Partition3::from_sizes(n, n, n);
    let mut pairs = Vec::new();
    for a in 0..v {
        for b in a + 1..v {
            pairs.push([a, b]);
        }
    }
    let bit = |a: usize, b: usize| pairs.iter().position(|&q| q == [a.min(b), a.max(b)]).expect("pair");
    let mut cyclic = Vec::new();
    for a in 0..v {
        for b in a + 1..v {
            for c in b + 1..v {
                if is_cyclic_type([p.part(a), p.part(b), p.part(c)]) {
                    cyclic.push((1u64 << bit(a, b)) | (1 << bit(a, c)) | (1 << bit(b, c)));
                }
            }
        }
    }
    let value = |mask: u64| -> u64 {
        match objective {
            Objective::MantelL2 => {
                let mut deg = vec![0u64; v];
                for (i, &[a, b]) in pairs.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        deg[a] += 1;
                        deg[b] += 1;
                    }
                }
                deg.iter().map(|d| d * d).sum()
            }
            _ => u64::from(mask.count_ones()),
        }
    };
    let mut best = 0;
    let mut maximizers: Vec<u64> = Vec::new();
    let total = 1u64 << pairs.len();
    for mask in 0..total {
        if cyclic.iter().any(|&c| c & mask == c) {
            continue;
        }
        let val = value(mask);
        if val > best {
            best = val;
            maximizers.clear();
        }
        if val == best {
            maximizers.push(mask);
        }
    }
    let graphs: Vec<ColoredGraph> = maximizers
        .iter()
        .map(|&m| {
            let e = (0..pairs.len()).filter(|&i| m >> i & 1 == 1).map(|i| pairs[i]);
            ColoredGraph::from_edges(p.clone(), e).expect("valid pairs")
        })
        .collect();
    mantel_report(n, objective, best, true, &graphs, Some(maximizers.len() as u64), total)
}

/// Class graph: classes with their parts, and the cross-part class pairs.
struct ClassShape {
    part: Vec<usize>,
    cross: Vec<(usize, usize)>,
}

impl ClassShape {
    fn new(k: [usize; 3]) -> ClassShape {
        let mut part = Vec::new();
        for (i, &c) in k.iter().enumerate() {
            part.extend(core::iter::repeat_n(i, c));
        }
        let mut cross = Vec::new();
        for a in 0..part.len() {
            for b in a + 1..part.len() {
                if part[a] != part[b] {
                    cross.push((a, b));
                }
            }
        }
        ClassShape { part, cross }
    }

    fn adjacency(&self, pattern: u64) -> Vec<Vec<bool>> {
        let k = self.part.len();
        let mut adj = vec![vec![false; k]; k];
        for a in 0..k {
            for b in 0..k {
                if a != b && self.part[a] == self.part[b] {
                    adj[a][b] = true;
                }
            }
        }
        for (i, &(a, b)) in self.cross.iter().enumerate() {
            if pattern >> i & 1 == 1 {
                adj[a][b] = true;
                adj[b][a] = true;
            }
        }
        adj
    }

    fn cyclic_free(&self, adj: &[Vec<bool>]) -> bool {
        let k = self.part.len();
        for a in 0..k {
            for b in a + 1..k {
                if !adj[a][b] {
                    continue;
                }
                for c in b + 1..k {
                    if adj[a][c] && adj[b][c] && is_cyclic_type([self.part[a], self.part[b], self.part[c]]) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Compositions of `n` into exactly `k` positive parts.
fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 1..=n.saturating_sub(k - 1) {
        for mut rest in compositions(n - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn blow_up(shape: &ClassShape, adj: &[Vec<bool>], sizes: &[usize]) -> ColoredGraph {
    let mut class_of = Vec::new();
    for (c, &s) in sizes.iter().enumerate() {
        class_of.extend(core::iter::repeat_n(c, s));
    }
    let parts: Vec<u8> = class_of.iter().map(|&c| shape.part[c] as u8).collect();
    let mut edges = Vec::new();
    for a in 0..class_of.len() {
        for b in a + 1..class_of.len() {
            if adj[class_of[a]][class_of[b]] {
                edges.push([a, b]);
            }
        }
    }
    ColoredGraph::from_edges(Partition3::new(parts).expect("parts"), edges).expect("pairs")
}

/// Searches locally symmetrized graphs with at most `class_cap` classes,
/// optimizing class sizes exhaustively, with `Λ(n,n,n)` as the incumbent. Exact for the edge objective once
/// `class_cap >= 3n`.
pub fn census_colored_mantel_symmetrized(n: usize, objective: Objective, class_cap: usize) -> Result<CensusReport> {
    check_mantel_objective(objective)?;
    if n > MANTEL_ASSISTED_CAP {
        return Err(Error::SizeLimitExceeded {
            n,
            cap: MANTEL_ASSISTED_CAP,
        });
    }
    if n == 0 || class_cap < 3 {
        return Err(Error::InvalidParameter("need n >= 1 and at least 3 classes".into()));
    }
    // Λ is locally symmetrized but needs n classes in its third part
    let lambda = build_lambda(n, n, n);
    let mut best = lambda_value(n, objective);
    let mut winners: Vec<ColoredGraph> = vec![lambda];
    let mut nodes = 0u64;
    let kmax = n.min(class_cap - 2);
    for k1 in 1..=kmax {
        for k2 in 1..=kmax {
            for k3 in 1..=kmax {
                if k1 + k2 + k3 > class_cap {
                    continue;
                }
                let shape = ClassShape::new([k1, k2, k3]);
                let sizes: Vec<Vec<Vec<usize>>> = [k1, k2, k3].iter().map(|&k| compositions(n, k)).collect();
                for pattern in 0u64..(1u64 << shape.cross.len()) {
                    let adj = shape.adjacency(pattern);
                    if !shape.cyclic_free(&adj) {
                        continue;
                    }
                    for s1 in &sizes[0] {
                        for s2 in &sizes[1] {
                            for s3 in &sizes[2] {
                                nodes += 1;
                                let sz: Vec<usize> = s1.iter().chain(s2).chain(s3).copied().collect();
                                let val = class_value(&adj, &sz, objective);
                                if val > best {
                                    best = val;
                                    winners.clear();
                                }
                                if val == best && winners.len() < 4096 {
                                    winners.push(blow_up(&shape, &adj, &sz));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    debug_assert!(winners.iter().all(ColoredGraph::is_cyclic_triangle_free));
    let exact = objective == Objective::MantelEdges && class_cap >= 3 * n;
    mantel_report(n, objective, best, exact, &winners, None, nodes)
}

fn class_value(adj: &[Vec<bool>], sizes: &[usize], objective: Objective) -> u64 {
    let k = sizes.len();
    let deg: Vec<u64> = (0..k)
        .map(|a| (0..k).filter(|&b| adj[a][b]).map(|b| sizes[b] as u64).sum())
        .collect();
    match objective {
        Objective::MantelL2 => (0..k).map(|a| sizes[a] as u64 * deg[a] * deg[a]).sum(),
        _ => (0..k).map(|a| sizes[a] as u64 * deg[a]).sum::<u64>() / 2,
    }
}

// ---------------------------------------------------------------------------
// Triangle-free 3-partite graphs

struct Tripartite {
    n: usize,
    pairs: Vec<[usize; 2]>,
}

impl Tripartite {
    fn new(n: usize) -> Tripartite {
        let p = Partition3::from_sizes(n, n, n);
        let mut pairs = Vec::new();
        for a in 0..3 * n {
            for b in a + 1..3 * n {
                if p.part(a) != p.part(b) {
                    pairs.push([a, b]);
                }
            }
        }
        Tripartite { n, pairs }
    }

    fn graph(&self, mask: u64) -> ColoredGraph {
        let e = (0..self.pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| self.pairs[i]);
        ColoredGraph::from_edges(Partition3::from_sizes(self.n, self.n, self.n), e).expect("pairs")
    }

    fn triangle_free(&self, mask: u64) -> bool {
        let mut adj = vec![0u32; 3 * self.n];
        for (i, &[a, b]) in self.pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                if adj[a] & adj[b] != 0 {
                    return false;
                }
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
        }
        // edges added earlier may close a triangle with later ones
        self.pairs
            .iter()
            .enumerate()
            .all(|(i, &[a, b])| mask >> i & 1 == 0 || adj[a] & adj[b] == 0)
    }

    /// Edge masks of `K[U_{i1} ∪ U_{i+1}, U_{i2} ∪ U_{i+2}]` over all `i`
    /// and splits `U_i = U_{i1} ⊔ U_{i2}`.
    fn templates(&self) -> BTreeSet<u64> {
        let n = self.n;
        let part = |v: usize| v / n;
        let mut out = BTreeSet::new();
        for i in 0..3 {
            let j = next(i);
            for split in 0u32..(1 << n) {
                let side = |v: usize| -> u8 {
                    let q = part(v);
                    if q == i {
                        if split >> (v - i * n) & 1 == 1 {
                            0
                        } else {
                            1
                        }
                    } else if q == j {
                        0
                    } else {
                        1
                    }
                };
                let mask = self
                    .pairs
                    .iter()
                    .enumerate()
                    .filter(|(_, &[a, b])| side(a) != side(b))
                    .fold(0u64, |m, (idx, _)| m | (1 << idx));
                out.insert(mask);
            }
        }
        out
    }

    fn report(&self, best: u64, maximizers: &[u64], nodes: u64) -> Result<CensusReport> {
        let n = self.n;
        let templates = self.templates();
        let witness = maximizers.iter().find(|m| !templates.contains(m)).map(|&m| self.graph(m));
        let graphs: Vec<ColoredGraph> = maximizers.iter().map(|&m| self.graph(m)).collect();
        let (reps, rot) = colored_classes(&graphs)?;
        let value = 2 * (n * n) as u64;
        let nn = int(n as i128);
        let bound = int(2) * nn * nn + nn;
        Ok(CensusReport {
            n,
            objective: Objective::Tripartite,
            optimum: best,
            exact: true,
            class_count: Some(reps.len()),
            rotation_class_count: Some(rot),
            labeled_count: Some(maximizers.len() as u64),
            reference: Reference {
                name: "split complete bipartite (2n^2)".into(),
                value,
                attains: best == value,
                unique: witness.is_none(),
            },
            upper_bound: Some(UpperBound {
                name: "2n^2+n",
                value: bound,
                holds: int(best as i128) <= bound,
            }),
            template: Some(TemplateCheck {
                all_match: witness.is_none(),
                witness,
            }),
            representatives: Representatives::Colored(reps),
            nodes,
        })
    }
}

/// Maximum edge count of a triangle-free graph with three independent parts
/// of size `n <= 3`, with all maximizers checked against the split template.
pub fn census_tripartite(n: usize) -> Result<CensusReport> {
    if n > TRIPARTITE_CAP {
        return Err(Error::SizeLimitExceeded { n, cap: TRIPARTITE_CAP });
    }
    let t = Tripartite::new(n);
    struct Dfs<'a> {
        t: &'a Tripartite,
        adj: Vec<u32>,
        best: u64,
        maximizers: Vec<u64>,
        nodes: u64,
    }
    impl Dfs<'_> {
        fn go(&mut self, i: usize, mask: u64, count: u64) {
            self.nodes += 1;
            let remaining = (self.t.pairs.len() - i) as u64;
            if count + remaining < self.best {
                return;
            }
            if i == self.t.pairs.len() {
                if count > self.best {
                    self.best = count;
                    self.maximizers.clear();
                }
                self.maximizers.push(mask);
                return;
            }
            let [a, b] = self.t.pairs[i];
            if self.adj[a] & self.adj[b] == 0 {
                self.adj[a] |= 1 << b;
                self.adj[b] |= 1 << a;
                self.go(i + 1, mask | 1 << i, count + 1);
                self.adj[a] &= !(1 << b);
                self.adj[b] &= !(1 << a);
            }
            self.go(i + 1, mask, count);
        }
    }
    let mut d = Dfs {
        t: &t,
        adj: vec![0; 3 * n],
        best: 0,
        maximizers: Vec::new(),
        nodes: 0,
    };
    d.go(0, 0, 0);
    let (best, mut maximizers, nodes) = (d.best, d.maximizers, d.nodes);
    maximizers.sort_unstable();
    t.report(best, &maximizers, nodes)
}

/// Oracle: scans all `2^{3n²}` subgraphs.
pub fn census_tripartite_naive(n: usize) -> Result<CensusReport> {
    if n > TRIPARTITE_NAIVE_CAP {
        return Err(Error::SizeLimitExceeded {
            n,
            cap: TRIPARTITE_NAIVE_CAP,
        });
    }
    let t = Tripartite::new(n);
    let total = 1u64 << t.pairs.len();
    let mut best = 0;
    let mut maximizers = Vec::new();
    for mask in 0..total {
        if !t.triangle_free(mask) {
            continue;
        }
        let c = u64::from(mask.count_ones());
        if c > best {
            best = c;
            maximizers.clear();
        }
        if c == best {
            maximizers.push(mask);
        }
    }
    t.report(best, &maximizers, total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k43_small() {
        let r = census_k43(4).unwrap();
        assert_eq!(r.optimum, 15);
        assert_eq!(r.class_count, Some(1));
        assert!(r.reference.attains && r.reference.unique);
        for n in 3..=5 {
            let a = census_k43(n).unwrap();
            let b = census_k43_naive(n).unwrap();
            assert_eq!((a.optimum, a.class_count), (b.optimum, b.class_count), "n={n}");
            assert_eq!(a.representatives, b.representatives);
        }
        assert!(census_k43(9).is_err());
    }

    #[test]
    fn mantel_small() {
        let r = census_colored_mantel(1, Objective::MantelEdges).unwrap();
        assert!(r.optimum >= 2 && r.reference_ok());
        let r = census_colored_mantel(2, Objective::MantelL2).unwrap();
        assert!(r.optimum >= 58);
        assert!(census_colored_mantel(3, Objective::MantelEdges).is_err());
        assert!(census_colored_mantel(1, Objective::K43L2).is_err());
    }

    #[test]
    fn symmetrized_agrees_with_scan() {
        for n in 1..=2 {
            let a = census_colored_mantel(n, Objective::MantelEdges).unwrap();
            let b = census_colored_mantel_symmetrized(n, Objective::MantelEdges, 3 * n.max(2)).unwrap();
            assert!(b.exact);
            assert_eq!(a.optimum, b.optimum);
        }
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(5, 2).len(), 4);
        assert_eq!(compositions(4, 4), vec![vec![1, 1, 1, 1]]);
        assert!(compositions(2, 3).is_empty());
    }

    #[test]
    fn tripartite_small() {
        let r = census_tripartite(1).unwrap();
        assert_eq!(r.optimum, 2);
        assert_eq!(r.labeled_count, Some(3));
        for n in 1..=2 {
            let a = census_tripartite(n).unwrap();
            let b = census_tripartite_naive(n).unwrap();
            assert_eq!((a.optimum, a.labeled_count, a.class_count), (b.optimum, b.labeled_count, b.class_count));
            assert!(a.upper_bound.as_ref().unwrap().holds);
        }
    }
}
