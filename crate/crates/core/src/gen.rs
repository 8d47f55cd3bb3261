//! Seeded random instances for the property suites.

use alloc::vec::Vec;
use core::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::classification::is_c_triple;
use crate::colored::{is_cyclic_type, ColoredGraph};
use crate::constructions::build_c_on;
use crate::hypergraph::{Pair, ThreeGraph, Triple};
use crate::improve::Phase;
use crate::partition::{next, prev, Partition3};
use crate::rational::{frac, Rational};

/// Each triple independently with probability `p`.
pub fn random_three_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> ThreeGraph {
    let edges: Vec<Triple> = ThreeGraph::complete(n)
        .edges()
        .iter()
        .filter(|_| rng.gen_bool(p))
        .copied()
        .collect();
    ThreeGraph::new(n, edges).expect("valid triples")
}

/// Greedy random K4³-free 3-graph: triples in random order, each kept with
/// probability `p` when it closes no K4³.
pub fn random_k43_free<R: Rng>(n: usize, p: f64, rng: &mut R) -> ThreeGraph {
    let mut order = ThreeGraph::complete(n).edges().to_vec();
    order.shuffle(rng);
    let mut h = ThreeGraph::empty(n);
    for t in order {
        if !rng.gen_bool(p) {
            continue;
        }
        let g = h.with_edge(t);
        let closes = (0..n).filter(|x| !t.contains(x)).any(|x| {
            let [a, b, c] = t;
            g.contains(a, b, x) && g.contains(a, c, x) && g.contains(b, c, x)
        });
        if !closes {
            h = g;
        }
    }
    h
}

pub fn random_partition<R: Rng>(n: usize, rng: &mut R) -> Partition3 {
    Partition3::new((0..n).map(|_| rng.gen_range(0..3u8)).collect()).expect("parts in range")
}

/// Random cyclically triangle-free colored graph: pairs in random order, each
/// kept with probability `p` when it closes no cyclic triangle.
pub fn random_ctf_colored<R: Rng>(n: usize, p: f64, rng: &mut R) -> ColoredGraph {
    let part = random_partition(n, rng);
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            pairs.push([a, b]);
        }
    }
    pairs.shuffle(rng);
    let mut adj = alloc::vec![alloc::vec![false; n]; n];
    let mut edges = Vec::new();
    for [a, b] in pairs {
        if !rng.gen_bool(p) {
            continue;
        }
        let closes = (0..n).any(|c| adj[a][c] && adj[b][c] && is_cyclic_type([part.part(a), part.part(b), part.part(c)]));
        if !closes {
            adj[a][b] = true;
            adj[b][a] = true;
            edges.push([a, b]);
        }
    }
    ColoredGraph::from_edges(part, edges).expect("valid pairs")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToggleInstance {
    pub h: ThreeGraph,
    pub p: Partition3,
    pub e_star: Pair,
    pub phase: Phase,
}

/// A perturbed `C[P]`: each C-edge kept with probability `keep`, each other
/// triple added with probability `noise`. The phase follows the pair type.
pub fn random_toggle_instance<R: Rng>(n: usize, keep: f64, noise: f64, rng: &mut R) -> ToggleInstance {
    assert!(n >= 3);
    let p = random_partition(n, rng);
    let edges: Vec<Triple> = ThreeGraph::complete(n)
        .edges()
        .iter()
        .filter(|t| if is_c_triple(&p, t) { rng.gen_bool(keep) } else { rng.gen_bool(noise) })
        .copied()
        .collect();
    let h = ThreeGraph::new(n, edges).expect("valid triples");
    let a = rng.gen_range(0..n);
    let mut b = rng.gen_range(0..n - 1);
    if b >= a {
        b += 1;
    }
    let e_star = Pair::new(a, b);
    let phase = if p.part(a) == p.part(b) { Phase::One } else { Phase::Two };
    ToggleInstance { h, p, e_star, phase }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlantedInstance {
    pub h: ThreeGraph,
    pub p: Partition3,
    pub planted: Vec<Triple>,
    /// For each planted edge, the pair made to qualify for a queue.
    pub qualifying: Vec<Pair>,
}

/// `C[P]` on a balanced partition with `k` bad edges. Each bad edge gets a
/// queue pair: either an internal pair losing one C-edge (so `d_M >= 1`), or
/// a crossing pair losing `⌈n/10⌉` transversal edges.
pub fn planted_driver_instance<R: Rng>(n: usize, k: usize, rng: &mut R) -> PlantedInstance {
    assert!(n >= 6 && n % 3 == 0);
    let s = n / 3;
    let p = Partition3::from_sizes(s, s, s);
    let c = build_c_on(&p);
    let mut bad: Vec<Triple> = ThreeGraph::complete(n).edges().iter().filter(|t| !is_c_triple(&p, t)).copied().collect();
    bad.shuffle(rng);
    let planted: Vec<Triple> = bad.into_iter().take(k).collect();
    let mut delete: Vec<Triple> = Vec::new();
    let mut qualifying = Vec::new();
    let need = n.div_ceil(10);
    for t in &planted {
        let (a, b, other) = split_same_part(&p, t);
        let crossing = p.part(other) != p.part(a) && rng.gen_bool(0.5);
        if crossing {
            // transversal edges {a, other, w} with w in the third part
            let third = 3 - p.part(a) - p.part(other);
            let mut ws = p.members(third);
            ws.shuffle(rng);
            for &w in ws.iter().take(need) {
                delete.push(sorted([a, other, w]));
            }
            qualifying.push(Pair::new(a, other));
        } else {
            let j = next(p.part(a));
            let w = *p.members(j).choose(rng).expect("nonempty part");
            delete.push(sorted([a, b, w]));
            qualifying.push(Pair::new(a, b));
        }
    }
    delete.sort_unstable();
    delete.dedup();
    let h = c.with_changes(&delete, &planted);
    PlantedInstance {
        h,
        p,
        planted,
        qualifying,
    }
}

fn sorted(mut t: Triple) -> Triple {
    t.sort_unstable();
    t
}

/// Two vertices of a bad edge in a common part, and the remaining one.
fn split_same_part(p: &Partition3, t: &Triple) -> (usize, usize, usize) {
    let [a, b, c] = *t;
    if p.part(a) == p.part(b) {
        (a, b, c)
    } else if p.part(a) == p.part(c) {
        (a, c, b)
    } else {
        (b, c, a)
    }
}

/// Constant in hypothesis (iii).
pub fn hypothesis_constant(phase: Phase) -> u64 {
    match phase {
        Phase::One => 47,
        Phase::Two => 90,
    }
}

/// No hypothesis-satisfying instance exists at this order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Infeasible {
    pub n: usize,
    pub phase: Phase,
    /// Smallest codegree `m` with `m >= c·ξ^{1/2}·n` at `ξ = 1/n`.
    pub required: u64,
    /// Largest codegree available through the chosen pair.
    pub available: usize,
    /// Smallest order at which the generator succeeds.
    pub min_n: usize,
}

impl fmt::Display for Infeasible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "phase {} at n = {}: item (iii) needs codegree {} but only {} third vertices exist; smallest feasible n is {}",
            self.phase.number(),
            self.n,
            self.required,
            self.available,
            self.min_n
        )
    }
}

fn isqrt_ceil(x: u64) -> u64 {
    let r = x.isqrt();
    if r * r < x {
        r + 1
    } else {
        r
    }
}

/// `(required, available)` at order `n`: with `ξ = 1/n` item (iii) reads
/// `m >= c·sqrt(n)`, and `m` is at most the size of the part supplying third
/// vertices.
fn hypothesis_budget(n: usize, phase: Phase) -> (u64, usize) {
    let c = hypothesis_constant(phase);
    let required = isqrt_ceil(c * c * n as u64);
    // part sizes of Partition3::balanced(n)
    let (q, r) = (n / 3, n % 3);
    let available = match phase {
        Phase::One => q + usize::from(r > 1),
        Phase::Two => q,
    };
    (required, available)
}

/// Smallest `n' >= n` where the hypotheses can be met by the generator.
pub fn minimal_feasible_n(n: usize, phase: Phase) -> usize {
    let mut m = n.max(3);
    loop {
        let (req, avail) = hypothesis_budget(m, phase);
        if req <= avail as u64 {
            return m;
        }
        m += 1;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisInstance {
    pub h: ThreeGraph,
    pub p: Partition3,
    pub e_star: Pair,
    pub phase: Phase,
    pub xi: Rational,
}

/// `C[P]` on the balanced partition with `m` missing and `b` bad edges
/// through `e*`; `e*` is inside `V1` (phase one) or in `V1 × V2` (phase two).
pub fn plant_toggle_instance<R: Rng>(n: usize, phase: Phase, m: usize, b: usize, rng: &mut R) -> HypothesisInstance {
    let p = Partition3::balanced(n);
    let v1 = p.members(0);
    let (u1, u2) = match phase {
        Phase::One => (v1[0], v1[1]),
        Phase::Two => (v1[0], p.members(1)[0]),
    };
    // missing third vertices come from V2 (phase one) or V3 (phase two);
    // bad ones from V1 (phase one) or V2 (phase two)
    let (miss_part, bad_part) = match phase {
        Phase::One => (1, 0),
        Phase::Two => (prev(0), 1),
    };
    let mut ws = p.members(miss_part);
    ws.shuffle(rng);
    let delete: Vec<Triple> = ws.iter().take(m).map(|&w| sorted([u1, u2, w])).collect();
    let mut bs: Vec<usize> = p.members(bad_part).into_iter().filter(|&w| w != u1 && w != u2).collect();
    bs.shuffle(rng);
    let add: Vec<Triple> = bs.iter().take(b).map(|&w| sorted([u1, u2, w])).collect();
    let h = build_c_on(&p).with_changes(&delete, &add);
    HypothesisInstance {
        h,
        p,
        e_star: Pair::new(u1, u2),
        phase,
        xi: frac(1, n as i128),
    }
}

/// An instance meeting every hypothesis of the phase at `ξ = 1/n`, or the
/// reason none exists at this order.
pub fn hypothesis_instance<R: Rng>(n: usize, phase: Phase, rng: &mut R) -> core::result::Result<HypothesisInstance, Infeasible> {
    let (required, available) = hypothesis_budget(n, phase);
    if n < 6 || required > available as u64 {
        return Err(Infeasible {
            n,
            phase,
            required,
            available,
            min_n: minimal_feasible_n(n.max(6), phase),
        });
    }
    let m = rng.gen_range(required as usize..=available);
    // bad edges through e*: at most ξn = 1, and one keeps e* in the shadow
    // when every C-edge through it was removed
    let b = if m == available { 1 } else { rng.gen_range(0..=1) };
    Ok(plant_toggle_instance(n, phase, m, b, rng))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classification::{classify_edges, Family};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn ceil_sqrt() {
        for x in 0..2000u64 {
            let r = isqrt_ceil(x);
            assert!(r * r >= x && (r == 0 || (r - 1) * (r - 1) < x), "{x}");
        }
    }

    #[test]
    fn hypotheses_out_of_reach_at_desk_scale() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in [60, 90, 120] {
            let e = hypothesis_instance(n, Phase::One, &mut rng).unwrap_err();
            assert!(e.required > e.available as u64);
            assert!(hypothesis_instance(n, Phase::Two, &mut rng).is_err());
        }
        for n in 6..40 {
            let s = Partition3::balanced(n).sizes();
            assert_eq!(hypothesis_budget(n, Phase::One).1, s[1]);
            assert_eq!(hypothesis_budget(n, Phase::Two).1, s[2]);
        }
        let m1 = minimal_feasible_n(60, Phase::One);
        let (req, avail) = hypothesis_budget(m1, Phase::One);
        assert!(req <= avail as u64);
        let (req, avail) = hypothesis_budget(m1 - 1, Phase::One);
        assert!(req > avail as u64);
        assert!(minimal_feasible_n(60, Phase::Two) > m1);
    }

    #[test]
    fn planted_counts() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for phase in [Phase::One, Phase::Two] {
            let inst = plant_toggle_instance(12, phase, 3, 2, &mut rng);
            let ec = classify_edges(&inst.h, &inst.p).unwrap();
            let missing = if phase == Phase::One { Family::M } else { Family::MTri };
            assert_eq!(ec.codegree(missing, inst.e_star), 3);
            assert_eq!(ec.codegree(Family::B, inst.e_star), 2);
            assert_eq!(ec.b.len(), 2);
        }
    }

    #[test]
    fn planted_driver_pairs_qualify() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in [6, 9, 12] {
            let inst = planted_driver_instance(n, 5, &mut rng);
            assert_eq!(inst.planted.len(), 5);
            for (t, e) in inst.planted.iter().zip(&inst.qualifying) {
                assert!(t.contains(&e.u) && t.contains(&e.v));
            }
        }
    }

    #[test]
    fn random_generators() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            assert!(!random_k43_free(7, 0.8, &mut rng).contains_k43());
            assert!(random_ctf_colored(9, 0.7, &mut rng).is_cyclic_triangle_free());
            let t = random_toggle_instance(8, 0.8, 0.1, &mut rng);
            assert_eq!(t.phase == Phase::One, t.p.part(t.e_star.u) == t.p.part(t.e_star.v));
        }
        assert!(random_three_graph(6, 0.5, &mut rng).n() == 6);
    }
}
