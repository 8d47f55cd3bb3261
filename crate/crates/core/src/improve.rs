//! The two toggle operators with exact l2 accounting, and the two-phase driver.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::classification::{
    check_phase_one_hypotheses, check_phase_two_hypotheses, classify_edges, is_c_triple, is_transversal, Checklist,
    EdgeClassification, Family, Thresholds,
};
use crate::error::{Error, Result};
use crate::hypergraph::{Pair, PairTable, ThreeGraph, Triple};
use crate::partition::{next, Partition3};
use crate::rational::{frac, int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Phase {
    One,
    Two,
}

impl Phase {
    pub fn number(self) -> u8 {
        match self {
            Phase::One => 1,
            Phase::Two => 2,
        }
    }

    pub fn from_number(k: u8) -> Result<Phase> {
        match k {
            1 => Ok(Phase::One),
            2 => Ok(Phase::Two),
            _ => Err(Error::InvalidParameter(alloc::format!("phase must be 1 or 2, got {k}"))),
        }
    }
}

/// A set of pairs whose codegree moves by `sign` (±1) under a toggle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChangeSet {
    pub name: &'static str,
    pub sign: i8,
    pub pairs: Vec<Pair>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaReport {
    pub phase: Phase,
    pub e_star: Pair,
    pub removed: Vec<Triple>,
    pub added: Vec<Triple>,
    /// `S1, S2, S3` in phase one, `S1, S2a, S2b` in phase two.
    pub sets: Vec<ChangeSet>,
    pub d_before: u64,
    pub d_after: u64,
    pub l2_before: u64,
    pub l2_after: u64,
    /// `l2_after - l2_before`, recomputed from scratch.
    pub delta: i64,
    /// `(d*(e*)² - d(e*)²) + Σ_{S+}(2d+1) + Σ_{S-}(1-2d)`.
    pub decomposed: i64,
}

impl DeltaReport {
    pub fn set(&self, name: &str) -> Option<&ChangeSet> {
        self.sets.iter().find(|s| s.name == name)
    }

    pub fn reconciles(&self) -> bool {
        self.decomposed == self.delta && self.delta == self.l2_after as i64 - self.l2_before as i64
    }

    pub fn is_noop(&self) -> bool {
        self.removed.is_empty() && self.added.is_empty()
    }

    /// Expected codegree change per pair: every pair of the change sets and
    /// `e*` when its codegree moves.
    pub fn expected_changes(&self) -> BTreeMap<Pair, i64> {
        let mut m = BTreeMap::new();
        for s in &self.sets {
            for &p in &s.pairs {
                *m.entry(p).or_insert(0) += i64::from(s.sign);
            }
        }
        let de = self.d_after as i64 - self.d_before as i64;
        if de != 0 {
            *m.entry(self.e_star).or_insert(0) += de;
        }
        m.retain(|_, v| *v != 0);
        m
    }
}

/// `(u1, u2)` with `u2` in the part following `u1`'s.
fn orient(p: &Partition3, e: Pair) -> (usize, usize) {
    if p.part(e.v) == next(p.part(e.u)) {
        (e.u, e.v)
    } else {
        (e.v, e.u)
    }
}

fn sorted(a: usize, b: usize, c: usize) -> Triple {
    let mut t = [a, b, c];
    t.sort_unstable();
    t
}

/// Third vertices `w` with `{u1,u2,w}` bad in `h`, and with it missing
/// (transversal only in phase two).
fn toggle_neighbors(h: &ThreeGraph, p: &Partition3, e: Pair, phase: Phase) -> (Vec<usize>, Vec<usize>) {
    let (mut bad, mut missing) = (Vec::new(), Vec::new());
    for w in 0..h.n() {
        if e.contains(w) {
            continue;
        }
        let t = sorted(e.u, e.v, w);
        let present = h.has_edge(&t);
        let c = is_c_triple(p, &t);
        if present && !c {
            bad.push(w);
        } else if !present && c && (phase == Phase::One || is_transversal(p, &t)) {
            missing.push(w);
        }
    }
    (bad, missing)
}

fn check_toggle_args(h: &ThreeGraph, p: &Partition3, e: Pair, phase: Phase) -> Result<()> {
    p.check_covers(h.n())?;
    Pair::checked(e.u, e.v, h.n())?;
    let internal = p.part(e.u) == p.part(e.v);
    if internal != (phase == Phase::One) {
        return Err(Error::EdgePhaseMismatch {
            pair: e.as_array(),
            phase: phase.number(),
        });
    }
    Ok(())
}

/// `(H \ B(e*)) ∪ M(e*)` in phase one, `(H \ B(e*)) ∪ M_tri(e*)` in phase two.
pub fn apply_toggle(h: &ThreeGraph, p: &Partition3, e: Pair, phase: Phase) -> Result<(ThreeGraph, DeltaReport)> {
    let before = h.codegrees();
    apply_toggle_with(h, p, e, phase, &before)
}

/// As [`apply_toggle`], reusing the codegree table of `h`.
pub fn apply_toggle_with(
    h: &ThreeGraph,
    p: &Partition3,
    e: Pair,
    phase: Phase,
    before: &PairTable,
) -> Result<(ThreeGraph, DeltaReport)> {
    check_toggle_args(h, p, e, phase)?;
    let (bad, missing) = toggle_neighbors(h, p, e, phase);
    let removed: Vec<Triple> = bad.iter().map(|&w| sorted(e.u, e.v, w)).collect();
    let added: Vec<Triple> = missing.iter().map(|&w| sorted(e.u, e.v, w)).collect();
    let h2 = h.with_changes(&removed, &added);

    let (u1, u2) = match phase {
        Phase::One => (e.u, e.v),
        Phase::Two => orient(p, e),
    };
    let both = |ws: &[usize]| -> Vec<Pair> {
        let mut out = Vec::with_capacity(2 * ws.len());
        for &w in ws {
            out.push(Pair::new(u1, w));
            out.push(Pair::new(u2, w));
        }
        out
    };
    let s1 = ChangeSet {
        name: "S1",
        sign: 1,
        pairs: both(&missing),
    };
    let sets = match phase {
        Phase::One => {
            let i = p.part(u1);
            let (same, other): (Vec<usize>, Vec<usize>) = bad.iter().partition(|&&w| p.part(w) == i);
            alloc::vec![
                s1,
                ChangeSet {
                    name: "S2",
                    sign: -1,
                    pairs: both(&same),
                },
                ChangeSet {
                    name: "S3",
                    sign: -1,
                    pairs: both(&other),
                },
            ]
        }
        Phase::Two => alloc::vec![
            s1,
            ChangeSet {
                name: "S2a",
                sign: -1,
                pairs: bad.iter().map(|&w| Pair::new(u1, w)).collect(),
            },
            ChangeSet {
                name: "S2b",
                sign: -1,
                pairs: bad.iter().map(|&w| Pair::new(u2, w)).collect(),
            },
        ],
    };

    let d_before = u64::from(before.get(e));
    let d_after = d_before + added.len() as u64 - removed.len() as u64;
    let mut decomposed = (d_after * d_after) as i64 - (d_before * d_before) as i64;
    for s in &sets {
        for &q in &s.pairs {
            let d = i64::from(before.get(q));
            decomposed += if s.sign > 0 { 2 * d + 1 } else { 1 - 2 * d };
        }
    }
    let l2_before = before.sum_of_squares();
    let l2_after = h2.l2_norm();
    let report = DeltaReport {
        phase,
        e_star: e,
        removed,
        added,
        sets,
        d_before,
        d_after,
        l2_before,
        l2_after,
        delta: l2_after as i64 - l2_before as i64,
        decomposed,
    };
    Ok((h2, report))
}

/// A pair whose codegree change disagrees with the change sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChangeViolation {
    pub pair: Pair,
    pub expected: i64,
    pub actual: i64,
}

/// Compares the codegree change of every pair against the report.
pub fn verify_change_sets(before: &PairTable, after: &ThreeGraph, report: &DeltaReport) -> core::result::Result<(), ChangeViolation> {
    let expected = report.expected_changes();
    let after = after.codegrees();
    for (pair, b) in before.iter() {
        let actual = i64::from(after.get(pair)) - i64::from(b);
        let want = expected.get(&pair).copied().unwrap_or(0);
        if actual != want {
            return Err(ChangeViolation {
                pair,
                expected: want,
                actual,
            });
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IncreaseOutcome {
    /// Some hypothesis failed, so no increase is claimed.
    NoClaim,
    Increased,
    /// Hypotheses hold but the l2-norm did not increase.
    Counterexample,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncreaseReport {
    pub checklist: Checklist,
    pub report: DeltaReport,
    pub outcome: IncreaseOutcome,
}

pub fn verify_toggle_increase(h: &ThreeGraph, p: &Partition3, e: Pair, phase: Phase, t: &Thresholds) -> Result<IncreaseReport> {
    let checklist = match phase {
        Phase::One => check_phase_one_hypotheses(h, p, e, t)?,
        Phase::Two => check_phase_two_hypotheses(h, p, e, t)?,
    };
    let (_, report) = apply_toggle(h, p, e, phase)?;
    let outcome = if !checklist.all_pass() {
        IncreaseOutcome::NoClaim
    } else if report.delta > 0 {
        IncreaseOutcome::Increased
    } else {
        IncreaseOutcome::Counterexample
    };
    Ok(IncreaseReport {
        checklist,
        report,
        outcome,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Queues {
    /// Internal pairs with `d_M >= δ4 n`.
    pub internal: Vec<Pair>,
    /// Crossing pairs with `d_{M_tri} >= n/10`.
    pub crossing: Vec<Pair>,
    /// Bad bi-edges whose same-part pair has `d_M <= δ4 n`.
    pub b_tilde: Vec<Triple>,
}

pub fn build_queues(h: &ThreeGraph, p: &Partition3, delta4: Rational) -> Result<Queues> {
    if delta4 <= int(0) || delta4 >= int(1) {
        return Err(Error::InvalidParameter(alloc::format!("delta4 must lie in (0,1), got {delta4}")));
    }
    let ec = classify_edges(h, p)?;
    Ok(queues_from(&ec, p, delta4))
}

fn queues_from(ec: &EdgeClassification, p: &Partition3, delta4: Rational) -> Queues {
    let n = ec.n;
    let nn = int(n as i128);
    let dm = ec.codegrees(Family::M);
    let dmt = ec.codegrees(Family::MTri);
    let (mut internal, mut crossing) = (Vec::new(), Vec::new());
    for a in 0..n {
        for b in a + 1..n {
            let e = Pair::new(a, b);
            if p.part(a) == p.part(b) {
                if int(i128::from(dm.get(e))) >= delta4 * nn {
                    internal.push(e);
                }
            } else if int(i128::from(dmt.get(e))) >= nn * frac(1, 10) {
                crossing.push(e);
            }
        }
    }
    let b_tilde = ec
        .b_bi
        .iter()
        .filter(|t| {
            let (a, b) = same_part_pair(p, t);
            int(i128::from(dm.get(Pair::new(a, b)))) <= delta4 * nn
        })
        .copied()
        .collect();
    Queues {
        internal,
        crossing,
        b_tilde,
    }
}

/// The two vertices of a bi-edge lying in one part.
fn same_part_pair(p: &Partition3, t: &Triple) -> (usize, usize) {
    if p.part(t[0]) == p.part(t[1]) {
        (t[0], t[1])
    } else if p.part(t[0]) == p.part(t[2]) {
        (t[0], t[2])
    } else {
        (t[1], t[2])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DriverStep {
    pub report: DeltaReport,
    /// Bad set shrank (as a set) across this step.
    pub bad_monotone: bool,
    /// Missing set (`M` in phase one, `M_tri` in phase two) shrank.
    pub missing_monotone: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DriverTrace {
    pub queues: Queues,
    pub steps: Vec<DriverStep>,
    /// l2-norms of the input and after every step.
    pub l2: Vec<u64>,
    pub final_graph: ThreeGraph,
    pub leftover_bad: Vec<Triple>,
    pub input_k43_free: bool,
    pub final_k43_free: bool,
}

impl DriverTrace {
    pub fn final_within_c(&self) -> bool {
        self.leftover_bad.is_empty()
    }

    pub fn monotone(&self) -> bool {
        self.steps.iter().all(|s| s.bad_monotone && s.missing_monotone)
    }

    /// A free input became non-free.
    pub fn broke_k43_freeness(&self) -> bool {
        self.input_k43_free && !self.final_k43_free
    }
}

fn is_sorted_subset(a: &[Triple], b: &[Triple]) -> bool {
    a.iter().all(|t| b.binary_search(t).is_ok())
}

/// Runs phase one over the internal queue, then phase two over the crossing
/// queue. Queues come from the input graph; `shuffle` permutes each queue.
pub fn two_phase_driver<R: Rng>(h: &ThreeGraph, p: &Partition3, delta4: Rational, shuffle: Option<&mut R>) -> Result<DriverTrace> {
    let mut queues = build_queues(h, p, delta4)?;
    if let Some(rng) = shuffle {
        queues.internal.shuffle(rng);
        queues.crossing.shuffle(rng);
    }
    let mut g = h.clone();
    let mut ec = classify_edges(&g, p)?;
    let mut l2 = alloc::vec![g.l2_norm()];
    let mut steps = Vec::new();
    let jobs = queues
        .internal
        .iter()
        .map(|&e| (e, Phase::One))
        .chain(queues.crossing.iter().map(|&e| (e, Phase::Two)));
    for (e, phase) in jobs {
        let (g2, report) = apply_toggle(&g, p, e, phase)?;
        let ec2 = classify_edges(&g2, p)?;
        let missing = match phase {
            Phase::One => Family::M,
            Phase::Two => Family::MTri,
        };
        steps.push(DriverStep {
            bad_monotone: is_sorted_subset(&ec2.b, &ec.b),
            missing_monotone: is_sorted_subset(ec2.family(missing), ec.family(missing)),
            report,
        });
        l2.push(g2.l2_norm());
        g = g2;
        ec = ec2;
    }
    Ok(DriverTrace {
        queues,
        steps,
        l2,
        leftover_bad: ec.b,
        input_k43_free: !h.contains_k43(),
        final_k43_free: !g.contains_k43(),
        final_graph: g,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_c, Composition3};
    use rand_chacha::ChaCha8Rng;

    fn run(h: &ThreeGraph, p: &Partition3) -> DriverTrace {
        two_phase_driver::<ChaCha8Rng>(h, p, frac(1, 40), None).unwrap()
    }

    #[test]
    fn phase_one_relabeling_example() {
        // a=0, b=1 in V1, d=2 in V2, c=3 in V3
        let p = Partition3::from_sizes(2, 1, 1);
        let h = ThreeGraph::new(4, [[0, 1, 3]]).unwrap();
        let (g, r) = apply_toggle(&h, &p, Pair::new(0, 1), Phase::One).unwrap();
        assert_eq!(g.edges(), &[[0, 1, 2]]);
        assert_eq!(r.delta, 0);
        assert!(r.reconciles());
        assert_eq!(r.set("S1").unwrap().pairs.len(), 2);
        assert_eq!(r.set("S3").unwrap().pairs.len(), 2);
        assert!(r.set("S2").unwrap().pairs.is_empty());
        assert_eq!(verify_change_sets(&h.codegrees(), &g, &r), Ok(()));
    }

    #[test]
    fn c6_is_fixed_by_every_toggle() {
        let (h, p) = build_c(Composition3::new(2, 2, 2));
        for a in 0..6 {
            for b in a + 1..6 {
                let phase = if p.part(a) == p.part(b) { Phase::One } else { Phase::Two };
                let (g, r) = apply_toggle(&h, &p, Pair::new(a, b), phase).unwrap();
                assert_eq!(g, h);
                assert!(r.is_noop() && r.delta == 0 && r.sets.iter().all(|s| s.pairs.is_empty()));
                let wrong = if phase == Phase::One { Phase::Two } else { Phase::One };
                assert!(matches!(
                    apply_toggle(&h, &p, Pair::new(a, b), wrong),
                    Err(Error::EdgePhaseMismatch { .. })
                ));
            }
        }
    }

    #[test]
    fn phase_two_restores_transversal() {
        let (c6, p) = build_c(Composition3::new(2, 2, 2));
        let h = c6.with_changes(&[[0, 2, 4]], &[]);
        let (g, r) = apply_toggle(&h, &p, Pair::new(0, 2), Phase::Two).unwrap();
        assert_eq!(g, c6);
        assert_eq!(r.delta, c6.l2_norm() as i64 - h.l2_norm() as i64);
        assert!(r.reconciles());
    }

    #[test]
    fn phase_two_orients_and_sizes_sets() {
        // u1 in V1, u2 in V2, a bad edge {u1,u2,w} with w in V2
        let (c, p) = build_c(Composition3::new(2, 2, 2));
        let h = c.with_changes(&[], &[[0, 2, 3]]);
        let (g, r) = apply_toggle(&h, &p, Pair::new(0, 2), Phase::Two).unwrap();
        assert_eq!(g, c);
        assert_eq!(r.set("S2a").unwrap().pairs, alloc::vec![Pair::new(0, 3)]);
        assert_eq!(r.set("S2b").unwrap().pairs, alloc::vec![Pair::new(2, 3)]);
        assert!(r.reconciles());
        assert_eq!(verify_change_sets(&h.codegrees(), &g, &r), Ok(()));
    }

    #[test]
    fn queues_examples() {
        let (c6, p) = build_c(Composition3::new(2, 2, 2));
        let q = build_queues(&c6, &p, frac(1, 40)).unwrap();
        assert!(q.internal.is_empty() && q.crossing.is_empty() && q.b_tilde.is_empty());
        let through: Vec<Triple> = c6
            .edges()
            .iter()
            .filter(|t| t.contains(&0) && t.contains(&2) && is_transversal(&p, t))
            .copied()
            .collect();
        let h = c6.with_changes(&through, &[]);
        let q = build_queues(&h, &p, frac(1, 40)).unwrap();
        assert!(q.crossing.contains(&Pair::new(0, 2)));
        // bad bi-edge {0,1,4}: V1 pair {0,1} with nothing missing
        let h = c6.with_changes(&[], &[[0, 1, 4]]);
        let q = build_queues(&h, &p, frac(1, 40)).unwrap();
        assert_eq!(q.b_tilde, alloc::vec![[0, 1, 4]]);
        assert!(build_queues(&h, &p, int(1)).is_err());
    }

    #[test]
    fn driver_on_c6_is_empty() {
        let (c6, p) = build_c(Composition3::new(2, 2, 2));
        let t = run(&c6, &p);
        assert!(t.steps.is_empty() && t.final_graph == c6 && t.final_within_c());
    }

    #[test]
    fn driver_removes_planted_internal_edge() {
        let (c6, p) = build_c(Composition3::new(2, 2, 2));
        // {0,1} in V1 loses {0,1,2}; bad edge {0,1,4}
        let h = c6.with_changes(&[[0, 1, 2]], &[[0, 1, 4]]);
        let t = run(&h, &p);
        assert!(t.queues.internal.contains(&Pair::new(0, 1)));
        assert!(t.final_within_c() && t.monotone());
        assert!(t.final_graph.is_subgraph_of(&c6));
        assert_eq!(t.l2.len(), t.steps.len() + 1);
    }

    #[test]
    fn driver_reports_leftover() {
        let (c9, p) = build_c(Composition3::new(3, 3, 3));
        let h = c9.with_changes(&[], &[[0, 1, 6]]);
        let t = run(&h, &p);
        assert_eq!(t.leftover_bad, alloc::vec![[0, 1, 6]]);
        assert!(!t.final_within_c());
    }

    #[test]
    fn increase_no_claim_on_c6() {
        let (c6, p) = build_c(Composition3::new(2, 2, 2));
        let t = Thresholds::new(frac(1, 4)).unwrap();
        let r = verify_toggle_increase(&c6, &p, Pair::new(0, 1), Phase::One, &t).unwrap();
        assert_eq!(r.outcome, IncreaseOutcome::NoClaim);
    }
}
