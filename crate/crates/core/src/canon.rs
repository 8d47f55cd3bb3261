//! Canonical forms for isomorph rejection.
//!
//! Individualization-refinement: vertices are split into ordered cells by
//! iterated signature refinement, the search individualizes vertices of the
//! first non-singleton cell, and the canonical form is the smallest relabelled
//! edge list over all leaves. Branches on interchangeable twins are skipped.

use alloc::vec;
use alloc::vec::Vec;

use crate::colored::ColoredGraph;
use crate::error::{Error, Result};
use crate::hypergraph::ThreeGraph;

/// Largest 3-graph order accepted by [`canonical_form`].
pub const THREE_GRAPH_CAP: usize = 10;
/// Largest colored-graph order accepted by [`canonical_colored`].
pub const COLORED_CAP: usize = 12;

/// Canonical edge list of a `K`-uniform edge set plus the relabelling
/// `labeling[old] = new` that produces it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm<const K: usize> {
    pub n: usize,
    /// Vertex colors in canonical order (all zero for uncolored input).
    pub colors: Vec<u8>,
    pub edges: Vec<[usize; K]>,
    pub labeling: Vec<usize>,
}

impl<const K: usize> CanonicalForm<K> {
    /// The part of the form that decides isomorphism.
    pub fn key(&self) -> (usize, &[u8], &[[usize; K]]) {
        (self.n, &self.colors, &self.edges)
    }
}

pub fn canonical_form(h: &ThreeGraph) -> Result<CanonicalForm<3>> {
    if h.n() > THREE_GRAPH_CAP {
        return Err(Error::SizeLimitExceeded {
            n: h.n(),
            cap: THREE_GRAPH_CAP,
        });
    }
    Ok(canonize(h.n(), h.edges(), &vec![0; h.n()]))
}

/// Canonical form under color-preserving permutations.
pub fn canonical_colored(g: &ColoredGraph) -> Result<CanonicalForm<2>> {
    let n = g.n();
    if n > COLORED_CAP {
        return Err(Error::SizeLimitExceeded { n, cap: COLORED_CAP });
    }
    Ok(canonize(n, g.graph().edges(), g.partition().parts()))
}

pub fn isomorphic(a: &ThreeGraph, b: &ThreeGraph) -> Result<bool> {
    Ok(canonical_form(a)?.key() == canonical_form(b)?.key())
}

struct Ctx<'a, const K: usize> {
    n: usize,
    edges: &'a [[usize; K]],
    /// For every vertex, the sorted list of its co-members in each edge.
    rest: Vec<Vec<[usize; 2]>>,
    best: Option<(Vec<[usize; K]>, Vec<usize>)>,
}

/// Canonical form of a `K`-uniform edge set (`K` is 2 or 3) whose vertices are
/// pre-colored by `colors`.
pub fn canonize<const K: usize>(n: usize, edges: &[[usize; K]], colors: &[u8]) -> CanonicalForm<K> {
    assert!(K == 2 || K == 3);
    let mut rest = vec![Vec::new(); n];
    for e in edges {
        for i in 0..K {
            let mut r = [usize::MAX; 2];
            let mut j = 0;
            for (k, &x) in e.iter().enumerate() {
                if k != i {
                    r[j] = x;
                    j += 1;
                }
            }
            rest[e[i]].push(r);
        }
    }
    for r in &mut rest {
        r.sort_unstable();
    }
    let mut ctx = Ctx {
        n,
        edges,
        rest,
        best: None,
    };
    let mut initial: Vec<Vec<usize>> = Vec::new();
    let mut palette: Vec<u8> = colors.to_vec();
    palette.sort_unstable();
    palette.dedup();
    for c in palette {
        initial.push((0..n).filter(|&v| colors[v] == c).collect());
    }
    ctx.search(initial);
    let (edges, labeling) = ctx.best.take().unwrap_or_default();
    let mut canon_colors = vec![0u8; n];
    for v in 0..n {
        canon_colors[labeling[v]] = colors[v];
    }
    CanonicalForm {
        n,
        colors: canon_colors,
        edges,
        labeling,
    }
}

impl<const K: usize> Ctx<'_, K> {
    fn search(&mut self, cells: Vec<Vec<usize>>) {
        let cells = self.refine(cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(cell.iter().copied().filter(|&x| x != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            self.search(next);
        }
    }

    /// Transposing `u` and `v` is an automorphism.
    fn twins(&self, u: usize, v: usize) -> bool {
        let a = self.rest[u].iter().filter(|r| !r.contains(&v));
        let b = self.rest[v].iter().filter(|r| !r.contains(&u));
        a.eq(b)
    }

    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        let mut cell_of = vec![0usize; self.n];
        loop {
            for (i, c) in cells.iter().enumerate() {
                for &v in c {
                    cell_of[v] = i;
                }
            }
            let mut sig: Vec<Vec<u32>> = vec![Vec::new(); self.n];
            for (v, rs) in self.rest.iter().enumerate() {
                let s = &mut sig[v];
                for r in rs {
                    let a = cell_of[r[0]] as u32;
                    let key = if r[1] == usize::MAX {
                        a
                    } else {
                        let b = cell_of[r[1]] as u32;
                        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
                        (lo << 16) | hi
                    };
                    s.push(key);
                }
                s.sort_unstable();
            }
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
            for c in &cells {
                if c.len() == 1 {
                    next.push(c.clone());
                    continue;
                }
                let mut members = c.clone();
                members.sort_by(|&x, &y| sig[x].cmp(&sig[y]).then(x.cmp(&y)));
                let mut start = 0;
                for i in 1..=members.len() {
                    if i == members.len() || sig[members[i]] != sig[members[start]] {
                        next.push(members[start..i].to_vec());
                        start = i;
                    }
                }
            }
            if next.len() == cells.len() {
                return next;
            }
            cells = next;
        }
    }

    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let mut labeling = vec![0usize; self.n];
        for (i, c) in cells.iter().enumerate() {
            labeling[c[0]] = i;
        }
        let mut edges: Vec<[usize; K]> = self
            .edges
            .iter()
            .map(|e| {
                let mut r = e.map(|x| labeling[x]);
                r.sort_unstable();
                r
            })
            .collect();
        edges.sort_unstable();
        let better = match &self.best {
            None => true,
            Some((b, _)) => edges < *b,
        };
        if better {
            self.best = Some((edges, labeling));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_c, Composition3};

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    /// Lexicographically smallest sorted edge list over all permutations.
    fn brute_min(h: &ThreeGraph) -> Vec<[usize; 3]> {
        all_perms(h.n())
            .iter()
            .map(|p| h.relabel(p).edges().to_vec())
            .min()
            .unwrap()
    }

    #[test]
    fn single_edge_any_relabeling() {
        let a = ThreeGraph::new(4, [[0, 1, 2]]).unwrap();
        for p in all_perms(4) {
            assert!(isomorphic(&a, &a.relabel(&p)).unwrap());
        }
    }

    #[test]
    fn c211_is_k4_minus_edge() {
        let c = build_c(Composition3::new(2, 1, 1)).0;
        let k = ThreeGraph::complete(4).with_changes(&[[1, 2, 3]], &[]);
        assert_eq!(c.len(), 3);
        assert!(isomorphic(&c, &k).unwrap());
        assert_eq!(brute_min(&c), brute_min(&k));
    }

    #[test]
    fn canonical_agrees_with_permutation_oracle() {
        // all 3-graphs on 5 vertices with 3 edges: equal forms iff equal minima
        let all: Vec<[usize; 3]> = ThreeGraph::complete(5).edges().to_vec();
        let mut graphs = Vec::new();
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                for k in j + 1..all.len() {
                    graphs.push(ThreeGraph::new(5, [all[i], all[j], all[k]]).unwrap());
                }
            }
        }
        let forms: Vec<_> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
        let mins: Vec<_> = graphs.iter().map(brute_min).collect();
        for a in 0..graphs.len() {
            for b in a + 1..graphs.len() {
                assert_eq!(forms[a].key() == forms[b].key(), mins[a] == mins[b]);
            }
        }
    }

    #[test]
    fn labeling_reproduces_edges() {
        let c = build_c(Composition3::new(2, 2, 2)).0;
        let f = canonical_form(&c).unwrap();
        assert_eq!(c.relabel(&f.labeling).edges(), &f.edges[..]);
    }

    #[test]
    fn size_cap() {
        assert!(matches!(
            canonical_form(&ThreeGraph::empty(11)),
            Err(Error::SizeLimitExceeded { n: 11, cap: 10 })
        ));
    }
}
