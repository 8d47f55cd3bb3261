//! Bad and missing edges relative to a partition, partition optimization and
//! the hypothesis checklists of the two toggle operators.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::constructions::{c_edges, is_c_profile};
use crate::error::{Error, Result};
use crate::hypergraph::{triple_pairs, Pair, PairTable, ThreeGraph, Triple};
use crate::partition::{next, Partition3};
use crate::rational::{ge_scaled_sqrt, int, Rational};

/// Largest order for exhaustive partition optimization.
pub const EXHAUSTIVE_MAX_N: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    B,
    M,
    BInt,
    BBi,
    MTri,
    MBi,
}

impl Family {
    pub const ALL: [Family; 6] = [Family::B, Family::M, Family::BInt, Family::BBi, Family::MTri, Family::MBi];

    pub fn name(self) -> &'static str {
        match self {
            Family::B => "B",
            Family::M => "M",
            Family::BInt => "B_int",
            Family::BBi => "B_bi",
            Family::MTri => "M_tri",
            Family::MBi => "M_bi",
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownFamily(String::from(s)))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Whether a triple lies inside one part.
pub fn is_internal_triple(p: &Partition3, t: &Triple) -> bool {
    p.part(t[0]) == p.part(t[1]) && p.part(t[1]) == p.part(t[2])
}

/// Whether a triple meets all three parts.
pub fn is_transversal(p: &Partition3, t: &Triple) -> bool {
    p.profile(t) == [1, 1, 1]
}

pub fn is_c_triple(p: &Partition3, t: &Triple) -> bool {
    is_c_profile(p.profile(t))
}

/// The six families `B, M, B_int, B_bi, M_tri, M_bi`, each sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClassification {
    pub n: usize,
    pub b: Vec<Triple>,
    pub m: Vec<Triple>,
    pub b_int: Vec<Triple>,
    pub b_bi: Vec<Triple>,
    pub m_tri: Vec<Triple>,
    pub m_bi: Vec<Triple>,
    /// `|H ∩ C[P]|`.
    pub kept: usize,
}

pub fn classify_edges(h: &ThreeGraph, p: &Partition3) -> Result<EdgeClassification> {
    p.check_covers(h.n())?;
    let (mut b, mut b_int, mut b_bi) = (Vec::new(), Vec::new(), Vec::new());
    let mut kept = 0;
    for t in h.edges() {
        if is_c_triple(p, t) {
            kept += 1;
        } else {
            b.push(*t);
            if is_internal_triple(p, t) {
                b_int.push(*t);
            } else {
                b_bi.push(*t);
            }
        }
    }
    let (mut m, mut m_tri, mut m_bi) = (Vec::new(), Vec::new(), Vec::new());
    for t in c_edges(p) {
        if !h.has_edge(&t) {
            m.push(t);
            if is_transversal(p, &t) {
                m_tri.push(t);
            } else {
                m_bi.push(t);
            }
        }
    }
    Ok(EdgeClassification {
        n: h.n(),
        b,
        m,
        b_int,
        b_bi,
        m_tri,
        m_bi,
        kept,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyStats {
    pub family: Family,
    pub size: usize,
    /// `Δ(F)`: largest number of edges of `F` at one vertex.
    pub max_vertex_degree: usize,
    pub max_pair_codegree: u32,
    pub codegrees: PairTable,
}

impl EdgeClassification {
    pub fn family(&self, f: Family) -> &[Triple] {
        match f {
            Family::B => &self.b,
            Family::M => &self.m,
            Family::BInt => &self.b_int,
            Family::BBi => &self.b_bi,
            Family::MTri => &self.m_tri,
            Family::MBi => &self.m_bi,
        }
    }

    pub fn contains(&self, f: Family, t: &Triple) -> bool {
        self.family(f).binary_search(t).is_ok()
    }

    /// `d_F(e)`.
    pub fn codegree(&self, f: Family, e: Pair) -> usize {
        self.family(f).iter().filter(|t| t.contains(&e.u) && t.contains(&e.v)).count()
    }

    /// `N_F(e)`: third vertices of the edges of `F` through `e`.
    pub fn neighbors(&self, f: Family, e: Pair) -> Vec<usize> {
        self.family(f)
            .iter()
            .filter(|t| t.contains(&e.u) && t.contains(&e.v))
            .map(|t| crate::hypergraph::third_vertex(t, e))
            .collect()
    }

    pub fn codegrees(&self, f: Family) -> PairTable {
        let mut table = PairTable::new(self.n);
        for t in self.family(f) {
            for p in triple_pairs(t) {
                table.add(p, 1);
            }
        }
        table
    }

    pub fn max_vertex_degree(&self, f: Family) -> usize {
        let mut d = vec![0usize; self.n];
        for t in self.family(f) {
            for &x in t {
                d[x] += 1;
            }
        }
        d.into_iter().max().unwrap_or(0)
    }

    pub fn stats(&self, f: Family) -> FamilyStats {
        let codegrees = self.codegrees(f);
        FamilyStats {
            family: f,
            size: self.family(f).len(),
            max_vertex_degree: self.max_vertex_degree(f),
            max_pair_codegree: codegrees.max(),
            codegrees,
        }
    }
}

pub fn family_stats(ec: &EdgeClassification, family: &str) -> Result<FamilyStats> {
    Ok(ec.stats(Family::parse(family)?))
}

/// `|H ∩ C[P]|`.
pub fn intersection_size(h: &ThreeGraph, p: &Partition3) -> usize {
    h.edges().iter().filter(|t| is_c_triple(p, t)).count()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OptimizeMode {
    Exhaustive,
    VertexMoves,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimizedPartition {
    pub partition: Partition3,
    pub intersection: usize,
    /// Moves applied (vertex moves mode) or leaves visited (exhaustive mode).
    pub work: usize,
}

/// Maximizes `|H ∩ C[P]|`. Exhaustive mode returns the lexicographically
/// smallest maximizing assignment; vertex moves mode starts from `initial`
/// (balanced by label if absent) and stops at a single-vertex local maximum.
pub fn optimize_partition(h: &ThreeGraph, mode: OptimizeMode, initial: Option<&Partition3>) -> Result<OptimizedPartition> {
    match mode {
        OptimizeMode::Exhaustive => exhaustive_partition(h),
        OptimizeMode::VertexMoves => {
            let start = match initial {
                Some(p) => {
                    p.check_covers(h.n())?;
                    p.clone()
                }
                None => Partition3::balanced(h.n()),
            };
            Ok(vertex_moves(h, start))
        }
    }
}

fn exhaustive_partition(h: &ThreeGraph) -> Result<OptimizedPartition> {
    let n = h.n();
    if n > EXHAUSTIVE_MAX_N {
        return Err(Error::SizeLimitExceeded {
            n,
            cap: EXHAUSTIVE_MAX_N,
        });
    }
    if n == 0 {
        return Ok(OptimizedPartition {
            partition: Partition3::new(Vec::new())?,
            intersection: 0,
            work: 1,
        });
    }
    // edges grouped by their largest vertex, decided once that vertex is placed
    let mut by_max: Vec<Vec<Triple>> = vec![Vec::new(); n];
    for t in h.edges() {
        by_max[t[2]].push(*t);
    }
    let mut undecided_after = vec![0usize; n];
    let mut acc = h.len();
    for v in 0..n {
        acc -= by_max[v].len();
        undecided_after[v] = acc;
    }
    struct Search<'a> {
        by_max: &'a [Vec<Triple>],
        undecided_after: &'a [usize],
        assign: Vec<u8>,
        best: Option<(usize, Vec<u8>)>,
        leaves: usize,
    }
    impl Search<'_> {
        fn go(&mut self, v: usize, current: usize) {
            let n = self.assign.len();
            if v == n {
                self.leaves += 1;
                if self.best.as_ref().is_none_or(|(b, _)| current > *b) {
                    self.best = Some((current, self.assign.clone()));
                }
                return;
            }
            // vertex 0 sits in part 1 by cyclic symmetry of C
            let parts: &[u8] = if v == 0 { &[0] } else { &[0, 1, 2] };
            for &p in parts {
                self.assign[v] = p;
                let gained = self.by_max[v]
                    .iter()
                    .filter(|t| {
                        let mut c = [0usize; 3];
                        for &x in t.iter() {
                            c[self.assign[x] as usize] += 1;
                        }
                        is_c_profile(c)
                    })
                    .count();
                let cur = current + gained;
                if let Some((b, _)) = &self.best {
                    if cur + self.undecided_after[v] <= *b {
                        continue;
                    }
                }
                self.go(v + 1, cur);
            }
        }
    }
    let mut s = Search {
        by_max: &by_max,
        undecided_after: &undecided_after,
        assign: vec![0; n],
        best: None,
        leaves: 0,
    };
    s.go(0, 0);
    let (intersection, assign) = s.best.expect("at least one assignment");
    Ok(OptimizedPartition {
        partition: Partition3::new(assign)?,
        intersection,
        work: s.leaves,
    })
}

/// Number of edges at `v` that lie in `C[P]` when `v` is placed in `part`.
fn c_edges_at(h: &ThreeGraph, p: &mut Partition3, v: usize, part: usize, at_v: &[Triple]) -> usize {
    let old = p.part(v);
    p.set(v, part);
    let k = at_v.iter().filter(|t| is_c_triple(p, t)).count();
    p.set(v, old);
    let _ = h;
    k
}

fn vertex_moves(h: &ThreeGraph, mut p: Partition3) -> OptimizedPartition {
    let n = h.n();
    let mut at: Vec<Vec<Triple>> = vec![Vec::new(); n];
    for t in h.edges() {
        for &x in t {
            at[x].push(*t);
        }
    }
    let mut moves = 0;
    let mut since_move = 0;
    let mut v = 0;
    while n > 0 && since_move < n {
        let cur_part = p.part(v);
        let cur = c_edges_at(h, &mut p, v, cur_part, &at[v]);
        let better = (0..3)
            .filter(|&q| q != cur_part)
            .find(|&q| c_edges_at(h, &mut p, v, q, &at[v]) > cur);
        match better {
            Some(q) => {
                p.set(v, q);
                moves += 1;
                since_move = 0;
            }
            None => since_move += 1,
        }
        v = (v + 1) % n;
    }
    let intersection = intersection_size(h, &p);
    OptimizedPartition {
        partition: p,
        intersection,
        work: moves,
    }
}

/// Both sides of the two link inequalities at `v` (rotated so that `v`'s
/// part plays the role of `V1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinkInequalities {
    pub a_lhs: usize,
    pub a_rhs: usize,
    pub b_lhs: usize,
    pub b_rhs: usize,
}

impl LinkInequalities {
    pub fn hold(&self) -> bool {
        self.a_lhs >= self.a_rhs && self.b_lhs >= self.b_rhs
    }
}

pub fn link_inequalities(h: &ThreeGraph, p: &Partition3, v: usize) -> Result<LinkInequalities> {
    let link = h.link(v)?;
    let i = p.part(v);
    let (j, k) = (next(i), next(next(i)));
    let mut e = [[0usize; 3]; 3];
    for &[a, b] in link.edges() {
        let (x, y) = (p.part(a), p.part(b));
        e[x][y] += 1;
        if x != y {
            e[y][x] += 1;
        }
    }
    Ok(LinkInequalities {
        a_lhs: e[i][j] + e[k][k],
        a_rhs: e[i][k] + e[i][i],
        b_lhs: e[j][k] + e[k][k],
        b_rhs: e[i][k] + e[j][j],
    })
}

/// The hypothesis parameter `ξ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thresholds {
    pub xi: Rational,
    /// Also require `n >= 1/ξ`.
    pub enforce_order: bool,
}

impl Thresholds {
    pub fn new(xi: Rational) -> Result<Thresholds> {
        if xi <= int(0) || xi >= int(1) {
            return Err(Error::InvalidParameter(alloc::format!("xi must lie in (0,1), got {xi}")));
        }
        Ok(Thresholds { xi, enforce_order: true })
    }

    pub fn without_order(mut self) -> Self {
        self.enforce_order = false;
        self
    }

    /// `√ξ`, exact when `ξ` is a rational square.
    pub fn sqrt_xi(&self) -> Option<Rational> {
        crate::rational::exact_sqrt(&self.xi)
    }

    /// Rational enclosure of `c·√ξ·n`.
    pub fn scaled_sqrt_enclosure(&self, c: i128, n: usize) -> (Rational, Rational) {
        let (lo, hi) = crate::rational::sqrt_enclosure(&self.xi, 1_000_000_000);
        let k = int(c * n as i128);
        (lo * k, hi * k)
    }
}

/// Right-hand side of a checklist comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rhs {
    Value(Rational),
    /// `coef · √radicand`.
    ScaledSqrt { coef: Rational, radicand: Rational },
}

impl fmt::Display for Rhs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rhs::Value(v) => write!(f, "{v}"),
            Rhs::ScaledSqrt { coef, radicand } => write!(f, "{coef}*sqrt({radicand})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChecklistItem {
    pub id: &'static str,
    pub lhs: Rational,
    pub relation: Relation,
    pub rhs: Rhs,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checklist {
    pub phase: u8,
    pub e_star: Pair,
    pub items: Vec<ChecklistItem>,
}

impl Checklist {
    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn item(&self, id: &str) -> Option<&ChecklistItem> {
        self.items.iter().find(|i| i.id == id)
    }
}

fn le(id: &'static str, lhs: Rational, rhs: Rational) -> ChecklistItem {
    ChecklistItem {
        id,
        lhs,
        relation: Relation::Le,
        pass: lhs <= rhs,
        rhs: Rhs::Value(rhs),
    }
}

fn ge(id: &'static str, lhs: Rational, rhs: Rational) -> ChecklistItem {
    ChecklistItem {
        id,
        lhs,
        relation: Relation::Ge,
        pass: lhs >= rhs,
        rhs: Rhs::Value(rhs),
    }
}

fn ge_sqrt(id: &'static str, lhs: Rational, coef: Rational, radicand: Rational) -> ChecklistItem {
    ChecklistItem {
        id,
        lhs,
        relation: Relation::Ge,
        pass: ge_scaled_sqrt(&lhs, &coef, &radicand),
        rhs: Rhs::ScaledSqrt { coef, radicand },
    }
}

fn common_items(h: &ThreeGraph, p: &Partition3, ec: &EdgeClassification, t: &Thresholds) -> Vec<ChecklistItem> {
    let n = int(h.n() as i128);
    let xi = t.xi;
    let third = n / int(3);
    let spread = p
        .sizes()
        .iter()
        .map(|&s| {
            let d = int(s as i128) - third;
            if d < int(0) {
                -d
            } else {
                d
            }
        })
        .max()
        .unwrap_or_else(|| int(0));
    let delta = ec.max_vertex_degree(Family::M).max(ec.max_vertex_degree(Family::B));
    let mut items = Vec::new();
    if t.enforce_order {
        items.push(ge("n", n * xi, int(1)));
    }
    items.push(le("i", spread, xi * n));
    items.push(le("ii", int(delta as i128), xi * n * n));
    items
}

fn check_shadow(h: &ThreeGraph, e: Pair) -> Result<()> {
    if h.codegree(e.u, e.v)? == 0 {
        return Err(Error::EdgeNotInShadow(e.as_array()));
    }
    Ok(())
}

/// Items (i)–(v) for a pair inside one part.
pub fn check_phase_one_hypotheses(h: &ThreeGraph, p: &Partition3, e: Pair, t: &Thresholds) -> Result<Checklist> {
    p.check_covers(h.n())?;
    Pair::checked(e.u, e.v, h.n())?;
    if p.part(e.u) != p.part(e.v) {
        return Err(Error::EdgeNotInternal(e.as_array()));
    }
    check_shadow(h, e)?;
    let ec = classify_edges(h, p)?;
    let n = int(h.n() as i128);
    let xi = t.xi;
    let dm = int(ec.codegree(Family::M, e) as i128);
    let db = int(ec.codegree(Family::B, e) as i128);
    let dbbi = int(ec.codegree(Family::BBi, e) as i128);
    let mut items = common_items(h, p, &ec, t);
    items.push(ge_sqrt("iii", dm, int(47) * n, xi));
    items.push(ge("iv", dm, db - xi * n));
    items.push(le("v", dbbi, xi * n));
    Ok(Checklist {
        phase: 1,
        e_star: e,
        items,
    })
}

/// Items (i)–(iv) for a pair crossing two parts.
pub fn check_phase_two_hypotheses(h: &ThreeGraph, p: &Partition3, e: Pair, t: &Thresholds) -> Result<Checklist> {
    p.check_covers(h.n())?;
    Pair::checked(e.u, e.v, h.n())?;
    if p.part(e.u) == p.part(e.v) {
        return Err(Error::EdgeNotCrossing(e.as_array()));
    }
    check_shadow(h, e)?;
    let ec = classify_edges(h, p)?;
    let n = int(h.n() as i128);
    let xi = t.xi;
    let dmt = int(ec.codegree(Family::MTri, e) as i128);
    let db = int(ec.codegree(Family::B, e) as i128);
    let mut items = common_items(h, p, &ec, t);
    items.push(ge_sqrt("iii", dmt, int(90) * n, xi));
    items.push(ge("iv", dmt, db - xi * n));
    Ok(Checklist {
        phase: 2,
        e_star: e,
        items,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_c, Composition3};
    use crate::rational::frac;

    fn c6() -> (ThreeGraph, Partition3) {
        build_c(Composition3::new(2, 2, 2))
    }

    #[test]
    fn classify_native_c6_is_clean() {
        let (h, p) = c6();
        let ec = classify_edges(&h, &p).unwrap();
        for f in Family::ALL {
            assert!(ec.family(f).is_empty(), "{f}");
        }
        assert_eq!(ec.kept, 14);
    }

    #[test]
    fn classify_single_bad_edge() {
        // a, b in V1 = {0, 1}; c in V3 = {4, 5}
        let p = Partition3::from_sizes(2, 2, 2);
        let h = ThreeGraph::new(6, [[0, 1, 4]]).unwrap();
        let ec = classify_edges(&h, &p).unwrap();
        assert_eq!(ec.b, vec![[0, 1, 4]]);
        assert_eq!(ec.b_bi, vec![[0, 1, 4]]);
        assert_eq!(ec.m.len(), 14);
        assert_eq!(ec.stats(Family::B).max_vertex_degree, 1);
    }

    #[test]
    fn classify_missing_transversal() {
        let (h, p) = c6();
        let h = h.with_changes(&[[0, 2, 4]], &[]);
        let ec = classify_edges(&h, &p).unwrap();
        assert_eq!(ec.m, vec![[0, 2, 4]]);
        assert_eq!(ec.m_tri, ec.m);
        assert!(ec.b.is_empty());
        assert!(classify_edges(&h, &Partition3::from_sizes(1, 1, 1)).is_err());
    }

    #[test]
    fn missing_degree_after_isolating_a_vertex() {
        let (h, p) = c6();
        let at0: Vec<Triple> = h.edges().iter().filter(|t| t.contains(&0)).copied().collect();
        let g = h.with_changes(&at0, &[]);
        let ec = classify_edges(&g, &p).unwrap();
        assert_eq!(ec.stats(Family::M).max_vertex_degree, h.degree(0).unwrap());
        assert!(family_stats(&ec, "Q").is_err());
        assert_eq!(family_stats(&ec, "m_tri").unwrap().family, Family::MTri);
    }

    #[test]
    fn optimize_recovers_c6() {
        let (h, _) = c6();
        let r = optimize_partition(&h, OptimizeMode::Exhaustive, None).unwrap();
        assert_eq!(r.intersection, 14);
        let single = ThreeGraph::new(4, [[0, 1, 2]]).unwrap();
        let r = optimize_partition(&single, OptimizeMode::Exhaustive, None).unwrap();
        assert_eq!(r.intersection, 1);
        let k = ThreeGraph::complete(4).with_changes(&[[1, 2, 3]], &[]);
        let r = optimize_partition(&k, OptimizeMode::Exhaustive, None).unwrap();
        assert!(r.intersection >= 2);
        assert_eq!(r.intersection, 3);
    }

    #[test]
    fn exhaustive_matches_brute_force() {
        let k = ThreeGraph::complete(5);
        let r = optimize_partition(&k, OptimizeMode::Exhaustive, None).unwrap();
        let mut best: Option<(usize, Vec<u8>)> = None;
        for code in 0..3usize.pow(5) {
            let mut a = vec![0u8; 5];
            let mut c = code;
            for i in (0..5).rev() {
                a[i] = (c % 3) as u8;
                c /= 3;
            }
            let s = intersection_size(&k, &Partition3::new(a.clone()).unwrap());
            if best.as_ref().is_none_or(|(b, _)| s > *b) {
                best = Some((s, a));
            }
        }
        let (bs, ba) = best.unwrap();
        assert_eq!(r.intersection, bs);
        assert_eq!(r.partition.parts(), &ba[..]);
    }

    #[test]
    fn vertex_moves_fixpoint_satisfies_link_inequalities() {
        let k = ThreeGraph::complete(7);
        let r = optimize_partition(&k, OptimizeMode::VertexMoves, None).unwrap();
        for v in 0..7 {
            assert!(link_inequalities(&k, &r.partition, v).unwrap().hold());
        }
        assert!(r.intersection >= intersection_size(&k, &Partition3::balanced(7)));
        assert!(optimize_partition(&ThreeGraph::empty(13), OptimizeMode::Exhaustive, None).is_err());
    }

    #[test]
    fn phase_one_checklist_on_c6() {
        let (h, p) = c6();
        let t = Thresholds::new(frac(1, 4)).unwrap().without_order();
        let c = check_phase_one_hypotheses(&h, &p, Pair::new(0, 1), &t).unwrap();
        assert!(c.item("iv").unwrap().pass && c.item("v").unwrap().pass);
        assert!(!c.item("iii").unwrap().pass);
        assert!(matches!(
            check_phase_one_hypotheses(&h, &p, Pair::new(0, 2), &t),
            Err(Error::EdgeNotInternal(_))
        ));
    }

    #[test]
    fn phase_one_checklist_after_deleting_through_pair() {
        let (h, p) = build_c(Composition3::new(3, 3, 3));
        // drop all edges through {0,1} except one so the pair stays in the shadow
        let through: Vec<Triple> = h.edges().iter().filter(|t| t.contains(&0) && t.contains(&1)).copied().collect();
        assert_eq!(through.len(), 3);
        let g = h.with_changes(&through[1..], &[]);
        let t = Thresholds::new(frac(1, 10000)).unwrap().without_order();
        let c = check_phase_one_hypotheses(&g, &p, Pair::new(0, 1), &t).unwrap();
        let iii = c.item("iii").unwrap();
        assert_eq!(iii.lhs, int(2));
        // 2 >= 47 * 9 / 100 fails
        assert!(!iii.pass);
    }

    #[test]
    fn phase_two_checklist_errors() {
        let (h, p) = c6();
        let t = Thresholds::new(frac(1, 4)).unwrap();
        assert!(matches!(
            check_phase_two_hypotheses(&h, &p, Pair::new(0, 1), &t),
            Err(Error::EdgeNotCrossing(_))
        ));
        let g = ThreeGraph::new(6, [[0, 1, 2]]).unwrap();
        assert!(matches!(
            check_phase_two_hypotheses(&g, &p, Pair::new(0, 4), &t),
            Err(Error::EdgeNotInShadow(_))
        ));
        let c = check_phase_two_hypotheses(&h, &p, Pair::new(0, 2), &t).unwrap();
        assert!(!c.item("iii").unwrap().pass);
        assert!(c.item("iv").unwrap().pass);
    }
}
