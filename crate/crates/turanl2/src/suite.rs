//! The acceptance battery: twelve numbered criteria, each reduced to a
//! PASS/FAIL outcome with a one-line summary.

use std::fmt;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::ThreadPool;
use serde_json::{json, Value};

use turanl2_core::census::{
    census_colored_mantel, census_k43_naive, census_tripartite, census_tripartite_naive, Objective, K43_CAP,
};
use turanl2_core::classification::Thresholds;
use turanl2_core::colored::ColoredGraph;
use turanl2_core::constructions::{balancedness_sweep, build_c, build_c_on, c_l2_closed, Composition3};
use turanl2_core::gen::{
    hypothesis_instance, planted_driver_instance, random_ctf_colored, random_three_graph, random_toggle_instance,
    HypothesisInstance,
};
use turanl2_core::improve::{apply_toggle, two_phase_driver, verify_change_sets, verify_toggle_increase, IncreaseOutcome, Phase};
use turanl2_core::interval::certify_simplex;
use turanl2_core::rational::{frac, int};

use crate::formats::{write_file, write_h3, write_p3};
use crate::json as js;
use crate::par;

pub const NAMES: [&str; 12] = [
    "formula",
    "identities",
    "degrees",
    "balancedness",
    "simplex",
    "toggles",
    "increase",
    "driver",
    "symmetrization",
    "mantel",
    "census",
    "tripartite",
];

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Largest order for the exhaustive censuses.
    pub n_max: usize,
    pub interval_width: f64,
    /// Where counterexamples are written.
    pub artifacts: Option<PathBuf>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 1,
            n_max: 6,
            interval_width: 1e-6,
            artifacts: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: usize,
    pub name: &'static str,
    pub pass: bool,
    /// Samples contradicting a checked statement.
    pub violations: usize,
    pub detail: String,
    pub seconds: f64,
}

impl Outcome {
    /// Wall time is left out so that reports are reproducible.
    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "name": self.name,
            "pass": self.pass,
            "violations": self.violations,
            "detail": self.detail,
        })
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:>2} {}: {} ({:.2} s)",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.seconds
        )
    }
}

/// Parses `all` or a comma list of criterion names or numbers.
pub fn parse_selection(s: &str) -> Result<Vec<usize>, String> {
    if s.trim() == "all" {
        return Ok((1..=12).collect());
    }
    let mut out = Vec::new();
    for tok in s.split(',').map(str::trim) {
        let id = match tok.parse::<usize>() {
            Ok(k) if (1..=12).contains(&k) => k,
            _ => NAMES
                .iter()
                .position(|&n| n == tok)
                .map(|i| i + 1)
                .ok_or_else(|| format!("unknown criterion {tok:?}"))?,
        };
        if !out.contains(&id) {
            out.push(id);
        }
    }
    out.sort_unstable();
    Ok(out)
}

fn rng_for(seed: u64, criterion: usize, trial: usize) -> ChaCha8Rng {
    let mix = seed
        ^ (criterion as u64).rotate_left(56)
        ^ (trial as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
    ChaCha8Rng::seed_from_u64(mix)
}

pub fn run(id: usize, cfg: &SuiteConfig, pool: &ThreadPool) -> Outcome {
    let start = Instant::now();
    let (pass, violations, detail) = match id {
        1 => formula(pool),
        2 => identities(cfg, pool),
        3 => degrees(cfg, pool),
        4 => balancedness(pool),
        5 => simplex(cfg, pool),
        6 => toggles(cfg, pool),
        7 => increase(cfg, pool),
        8 => driver(cfg, pool),
        9 => symmetrization(cfg, pool),
        10 => mantel(),
        11 => census(cfg, pool),
        12 => tripartite(cfg),
        _ => panic!("criterion {id} does not exist"),
    };
    let seconds = start.elapsed().as_secs_f64();
    let limit = match id {
        1 => Some(60.0),
        5 => Some(300.0),
        10 => Some(10.0),
        _ => None,
    };
    let (pass, detail) = match limit {
        Some(l) if seconds >= l => (false, format!("{detail}; over the {l} s budget")),
        _ => (pass, detail),
    };
    Outcome {
        id,
        name: NAMES[id - 1],
        pass,
        violations,
        detail,
        seconds,
    }
}

type Res = (bool, usize, String);

fn formula(pool: &ThreadPool) -> Res {
    let comps: Vec<Composition3> = (1..=40).flat_map(Composition3::all).collect();
    let bad: Vec<Composition3> = par::trials(comps.len(), pool, |i| {
        let c = comps[i];
        (c_l2_closed(c) != int(i128::from(build_c(c).0.l2_norm()))).then_some(c)
    })
    .into_iter()
    .flatten()
    .collect();
    let detail = match bad.first() {
        None => format!("{} compositions with n <= 40 agree", comps.len()),
        Some(c) => format!("{} of {} disagree, first {:?}", bad.len(), comps.len(), c.0),
    };
    (bad.is_empty(), bad.len(), detail)
}

fn identities(cfg: &SuiteConfig, pool: &ThreadPool) -> Res {
    const COUNT: usize = 10_000;
    let bad = par::trials(COUNT, pool, |i| {
        let mut rng = rng_for(cfg.seed, 2, i);
        let n = rng.gen_range(3..=10);
        let p = rng.gen_range(0.0..1.0);
        let h = random_three_graph(n, p, &mut rng);
        let m = h.len() as u64;
        let sum: u64 = h.codegrees().iter().map(|(_, d)| u64::from(d)).sum();
        usize::from(h.l2_norm() != 2 * h.count_s2() + 3 * m || sum != 3 * m)
    })
    .into_iter()
    .sum::<usize>();
    (bad == 0, bad, format!("{COUNT} random 3-graphs with n <= 10, {bad} violations"))
}

fn degrees(cfg: &SuiteConfig, pool: &ThreadPool) -> Res {
    const COUNT: usize = 2000;
    let bad = par::trials(COUNT, pool, |i| {
        let mut rng = rng_for(cfg.seed, 3, i);
        let n = rng.gen_range(3..=12);
        let h = random_three_graph(n, rng.gen_range(0.0..1.0), &mut rng);
        let v = rng.gen_range(0..n);
        let drop = h.l2_norm() - h.remove_vertex(v).expect("v < n").l2_norm();
        usize::from(h.two_norm_degree(v).expect("v < n") != drop)
    })
    .into_iter()
    .sum::<usize>();
    (bad == 0, bad, format!("{COUNT} random (H, v), {bad} violations"))
}

fn balancedness(pool: &ThreadPool) -> Res {
    let reports = par::trials(25, pool, |i| balancedness_sweep(i + 6));
    let failed: Vec<usize> = reports.iter().filter(|r| !r.pass()).map(|r| r.n).collect();
    let gains: usize = reports.iter().map(|r| r.gains.len()).sum();
    let bad_gains: usize = reports.iter().map(|r| r.gains.iter().filter(|g| !g.pass()).count()).sum();
    let mut families: Vec<&str> = reports.iter().flat_map(|r| r.gains.iter().map(|g| g.polynomial)).collect();
    families.sort_unstable();
    families.dedup();
    let pass = failed.is_empty() && gains > 0;
    let detail = format!(
        "n = 6..=30: {} sweeps off template {:?}; {gains} gain checks over {} polynomials, {bad_gains} mismatches",
        failed.len(),
        failed,
        families.len()
    );
    (pass, failed.len() + bad_gains, detail)
}

fn simplex(cfg: &SuiteConfig, pool: &ThreadPool) -> Res {
    let mut parts = Vec::new();
    let mut pass = true;
    let mut violations = 0;
    for d in [200, 201] {
        let r = par::simplex(d, pool).expect("d > 0");
        pass &= r.holds() && r.zero_only_at_barycenter();
        violations += r.violations.len();
        parts.push(format!(
            "d = {d}: worst {} at {:?}, zeros {:?}",
            r.worst_margin, r.argmin, r.zeros
        ));
    }
    let iv = certify_simplex(cfg.interval_width);
    pass &= iv.certified_all();
    parts.push(format!(
        "interval width {:e}: {} certified, {} local, {} undecided",
        cfg.interval_width,
        iv.certified,
        iv.local,
        iv.undecided.len()
    ));
    (pass, violations + iv.undecided.len(), parts.join("; "))
}

fn toggles(cfg: &SuiteConfig, pool: &ThreadPool) -> Res {
    const COUNT: usize = 5000;
    let bad = par::trials(COUNT, pool, |i| {
        let mut rng = rng_for(cfg.seed, 6, i);
        let n = rng.gen_range(3..=30);
        let keep = rng.gen_range(0.3..1.0);
        let noise = rng.gen_range(0.0..0.2);
        let t = random_toggle_instance(n, keep, noise, &mut rng);
        let (g, r) = apply_toggle(&t.h, &t.p, t.e_star, t.phase).expect("phase follows the pair");
        let scratch = g.l2_norm() as i64 - t.h.l2_norm() as i64;
        let ok = r.delta == scratch && r.reconciles() && verify_change_sets(&t.h.codegrees(), &g, &r).is_ok();
        usize::from(!ok)
    })
    .into_iter()
    .sum::<usize>();
    (bad == 0, bad, format!("{COUNT} toggles with n <= 30, {bad} violations"))
}

enum Trial {
    Infeasible(String),
    Increased,
    Failed(HypothesisInstance, &'static str),
}

fn increase(cfg: &SuiteConfig, pool: &ThreadPool) -> Res {
    const COUNT: usize = 1000;
    let mut pass = true;
    let mut counterexamples = 0;
    let mut parts = Vec::new();
    for phase in [Phase::One, Phase::Two] {
        let results = par::trials(COUNT, pool, |i| {
            let mut rng = rng_for(cfg.seed, 7 + 100 * phase.number() as usize, i);
            let n = rng.gen_range(60..=120);
            match hypothesis_instance(n, phase, &mut rng) {
                Err(inf) => Trial::Infeasible(inf.to_string()),
                Ok(inst) => {
                    let t = Thresholds::new(inst.xi).expect("0 < xi < 1");
                    match verify_toggle_increase(&inst.h, &inst.p, inst.e_star, phase, &t) {
                        Ok(r) => match r.outcome {
                            IncreaseOutcome::Increased => Trial::Increased,
                            IncreaseOutcome::Counterexample => Trial::Failed(inst, "no increase"),
                            IncreaseOutcome::NoClaim => Trial::Failed(inst, "hypotheses not met"),
                        },
                        Err(_) => Trial::Failed(inst, "pair rejected"),
                    }
                }
            }
        });
        let increased = results.iter().filter(|r| matches!(r, Trial::Increased)).count();
        let infeasible: Vec<&String> = results
            .iter()
            .filter_map(|r| match r {
                Trial::Infeasible(s) => Some(s),
                _ => None,
            })
            .collect();
        let mut found = 0;
        for (i, r) in results.iter().enumerate() {
            if let Trial::Failed(inst, why) = r {
                found += 1;
                if let Some(dir) = &cfg.artifacts {
                    let _ = write_counterexample(dir, phase, i, inst, why);
                }
            }
        }
        pass &= increased == COUNT;
        let mut s = format!("phase {}: {increased}/{COUNT} increased", phase.number());
        if let Some(first) = infeasible.first() {
            s.push_str(&format!(", {} infeasible (e.g. {first})", infeasible.len()));
        }
        if found > 0 {
            s.push_str(&format!(", {found} counterexamples"));
        }
        counterexamples += found;
        parts.push(s);
    }
    (pass, counterexamples, parts.join("; "))
}

fn write_counterexample(dir: &Path, phase: Phase, trial: usize, inst: &HypothesisInstance, why: &str) -> std::io::Result<()> {
    let stem = dir.join(format!("counterexample-phase{}-{trial}", phase.number()));
    let meta = json!({
        "phase": phase.number(),
        "trial": trial,
        "eStar": js::pair(inst.e_star),
        "xi": js::rational(&inst.xi),
        "reason": why,
    });
    let io = |e: crate::formats::FormatError| std::io::Error::other(e.to_string());
    write_file(&stem.with_extension("h3"), &write_h3(&inst.h)).map_err(io)?;
    write_file(&stem.with_extension("p3"), &write_p3(&inst.p)).map_err(io)?;
    write_file(&stem.with_extension("json"), &format!("{meta}\n")).map_err(io)
}

fn driver(cfg: &SuiteConfig, pool: &ThreadPool) -> Res {
    const PER: usize = 20;
    let cases: Vec<(usize, usize, usize)> = [6, 9, 12]
        .into_iter()
        .flat_map(|n| (1..=5).flat_map(move |k| (0..PER).map(move |r| (n, k, r))))
        .collect();
    let bad = par::trials(cases.len(), pool, |i| {
        let (n, k, _) = cases[i];
        let mut rng = rng_for(cfg.seed, 8, i);
        let inst = planted_driver_instance(n, k, &mut rng);
        let c = build_c_on(&inst.p);
        match two_phase_driver(&inst.h, &inst.p, frac(1, 40), Some(&mut rng)) {
            Ok(t) => {
                let ok = t.final_within_c()
                    && t.final_graph.is_subgraph_of(&c)
                    && t.steps.iter().all(|s| s.bad_monotone);
                usize::from(!ok)
            }
            Err(_) => 1,
        }
    })
    .into_iter()
    .sum::<usize>();
    (
        bad == 0,
        bad,
        format!("{} planted instances on C_6, C_9, C_12 with 1..=5 bad edges, {bad} failures", cases.len()),
    )
}

fn symmetrization(cfg: &SuiteConfig, pool: &ThreadPool) -> Res {
    const COUNT: usize = 500;
    let bad = par::trials(COUNT, pool, |i| {
        let mut rng = rng_for(cfg.seed, 9, i);
        let n = rng.gen_range(1..=12);
        let g: ColoredGraph = random_ctf_colored(n, rng.gen_range(0.1..0.95), &mut rng);
        let (s, steps) = g.locally_symmetrize();
        let facts_ok = s.check_symmetrized_facts().map(|f| f.all_pass()).unwrap_or(false);
        let ok = s.len() >= g.len()
            && s.is_cyclic_triangle_free()
            && s.is_locally_symmetrized()
            && steps.iter().all(|st| st.edges_after >= st.edges_before)
            && facts_ok;
        usize::from(!ok)
    })
    .into_iter()
    .sum::<usize>();
    (bad == 0, bad, format!("{COUNT} colored graphs with <= 12 vertices, {bad} violations"))
}

fn mantel() -> Res {
    match census_colored_mantel(2, Objective::MantelEdges) {
        Ok(r) => {
            let pass = (9..=20).contains(&r.optimum);
            (
                pass,
                usize::from(!pass),
                format!(
                    "n = 2: optimum {} edges over {} labeled graphs scanned, within [9, 20]; the constant 5/2 is not testable at this order",
                    r.optimum, r.nodes
                ),
            )
        }
        Err(e) => (false, 1, e.to_string()),
    }
}

fn census(cfg: &SuiteConfig, pool: &ThreadPool) -> Res {
    let mut parts = Vec::new();
    let mut bad = 0;
    for n in 4..=cfg.n_max.min(5) {
        let fast = par::census_k43(n, pool);
        let slow = census_k43_naive(n);
        match (fast, slow) {
            (Ok(f), Ok(s)) => {
                let ok = f.optimum == s.optimum && f.class_count == s.class_count && (n != 4 || f.optimum == 15);
                bad += usize::from(!ok);
                parts.push(format!("n = {n}: search {} vs scan {}", f.optimum, s.optimum));
            }
            (f, s) => {
                bad += 1;
                parts.push(format!("n = {n}: {:?} / {:?}", f.err(), s.err()));
            }
        }
    }
    if cfg.n_max < 5 {
        bad += 1;
        parts.push("n-max below 5 skips the required orders".into());
    }
    for n in 6..=cfg.n_max.min(K43_CAP) {
        match par::census_k43(n, pool) {
            Ok(r) => parts.push(format!(
                "n = {n}: optimum {}, {} {} it{}",
                r.optimum,
                r.reference.name,
                if r.reference.attains { "attains" } else { "misses" },
                if r.reference.unique { " uniquely" } else { "" }
            )),
            Err(e) => {
                bad += 1;
                parts.push(format!("n = {n}: {e}"));
            }
        }
    }
    (bad == 0, bad, parts.join("; "))
}

fn tripartite(cfg: &SuiteConfig) -> Res {
    let mut parts = Vec::new();
    let mut bad = 0;
    for n in 1..=cfg.n_max.min(2) {
        match (census_tripartite(n), census_tripartite_naive(n)) {
            (Ok(f), Ok(s)) => {
                let bound = (2 * n * n + n) as u64;
                let template = f.template.as_ref().is_some_and(|t| t.all_match);
                let ok = f.optimum == s.optimum && f.optimum <= bound && template;
                bad += usize::from(!ok);
                let mut p = format!("n = {n}: search {} vs scan {}, bound {bound}", f.optimum, s.optimum);
                match f.template.as_ref().and_then(|t| t.witness.as_ref()) {
                    Some(w) => p.push_str(&format!(", off-template witness {:?}", w.graph().edges())),
                    None => p.push_str(", template matches"),
                }
                parts.push(p);
            }
            (f, s) => {
                bad += 1;
                parts.push(format!("n = {n}: {:?} / {:?}", f.err(), s.err()));
            }
        }
    }
    if cfg.n_max < 2 {
        bad += 1;
        parts.push("n-max below 2 skips the required orders".into());
    }
    (bad == 0, bad, parts.join("; "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selection() {
        assert_eq!(parse_selection("all").unwrap().len(), 12);
        assert_eq!(parse_selection("simplex, 1,1").unwrap(), [1, 5]);
        assert!(parse_selection("13").is_err());
        assert!(parse_selection("nope").is_err());
    }

    #[test]
    fn quick_criteria_pass() {
        let p = par::pool(2);
        let cfg = SuiteConfig::default();
        for id in [10, 12] {
            let o = run(id, &cfg, &p);
            assert!(o.pass, "{o}");
        }
    }
}
