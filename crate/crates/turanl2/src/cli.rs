//! Command line: argument parsing and one handler per subcommand.
//!
//! Exit codes: 0 success, 1 a checked statement failed, 2 usage or input
//! error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use turanl2_core::census::{
    census_colored_mantel, census_colored_mantel_symmetrized, census_k43_naive, census_tripartite,
    census_tripartite_naive, CensusReport, Objective, Representatives, DEFAULT_CLASS_CAP,
};
use turanl2_core::classification::{
    check_phase_one_hypotheses, check_phase_two_hypotheses, classify_edges, optimize_partition, OptimizeMode,
    Thresholds, EXHAUSTIVE_MAX_N,
};
use turanl2_core::colored::{build_lambda, describe_step, ColoredGraph};
use turanl2_core::constructions::{balancedness_sweep, build_b, build_c, c_l2_closed, Composition3};
use turanl2_core::improve::{apply_toggle, two_phase_driver, Phase};
use turanl2_core::inequality::s_spread;
use turanl2_core::interval::certify_simplex;
use turanl2_core::rational::{frac, int, Rational};
use turanl2_core::{Pair, Partition3, ThreeGraph};

use crate::formats::{self, parse_list, parse_rational, write_cg, write_file, write_h3, write_p3};
use crate::json as js;
use crate::par;
use crate::suite::{self, SuiteConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const DEFAULT_SEED: u64 = 1;

#[derive(Parser, Debug)]
#[command(name = "turanl2", version, about = "Exact l2-norm computations for K4-free 3-graphs")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Input file (.h3 or .cg, depending on the subcommand).
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Partition sidecar (.p3).
    #[arg(long, global = true)]
    pub partition: Option<PathBuf>,
    /// Output path or directory.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Worker threads; falls back to TURANL2_WORKERS, then the core count.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build C[V1,V2,V3] or B[V1,V2], or sweep all compositions of n.
    Construct {
        #[arg(long = "type", value_enum, default_value = "c")]
        kind: Kind,
        /// Part sizes, e.g. 2,2,2.
        #[arg(long)]
        sizes: Option<String>,
        /// Emit `n1,n2,n3,l2` for every composition of this order.
        #[arg(long)]
        sweep: Option<usize>,
    },
    /// Exact l2-norm of a 3-graph with the S2 identity cross-check.
    Norm {
        /// Also list the 2-norm degrees and their spread.
        #[arg(long)]
        degrees: bool,
    },
    /// Bad and missing edge families relative to a partition.
    Classify {
        /// How to find a partition when none is given.
        #[arg(long, value_enum)]
        optimize: Option<Optimize>,
        /// Check the toggle hypotheses for this pair, e.g. 0,1.
        #[arg(long)]
        edge: Option<String>,
        /// Threshold for the hypothesis checklist, as p/q.
        #[arg(long, default_value = "1/100")]
        xi: String,
        /// Skip the order requirement n >= 1/xi.
        #[arg(long)]
        no_order: bool,
    },
    /// Run one toggle or the two-phase driver; writes a JSON-lines trace.
    Improve {
        #[arg(long, default_value = "1/40")]
        delta4: String,
        /// Toggle a single pair instead of running the driver.
        #[arg(long)]
        toggle: Option<String>,
        /// Shuffle the queues with the seed.
        #[arg(long)]
        shuffle: bool,
    },
    /// Exhaustive extremal searches at small orders.
    Census {
        #[arg(long)]
        problem: String,
        #[arg(long)]
        n: usize,
        /// Use the plain full scan.
        #[arg(long)]
        exhaustive: bool,
        /// Class bound for the symmetrized colored Mantel search.
        #[arg(long, default_value_t = DEFAULT_CLASS_CAP)]
        class_cap: usize,
    },
    /// Colored Mantel tools: statistics of a .cg graph or the Λ construction.
    Mantel {
        /// Build Λ with these part sizes instead of reading --input.
        #[arg(long)]
        lambda: Option<String>,
        /// Degree sum along a directed path x1,y1,z1,...
        #[arg(long)]
        path: Option<String>,
    },
    /// Locally symmetrize a cyclically triangle-free colored graph.
    Symmetrize,
    /// The simplex inequality on a grid, optionally with the interval certificate.
    Ineq {
        #[arg(long, default_value_t = 200)]
        resolution: usize,
        #[arg(long)]
        interval: bool,
        /// Smallest box width for the interval certificate.
        #[arg(long, default_value_t = 1e-6)]
        width: f64,
    },
    /// Run the acceptance battery.
    Check {
        /// `all` or a comma list of criterion numbers or names.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Largest order for the exhaustive censuses.
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    #[value(name = "C", alias = "c")]
    C,
    #[value(name = "B", alias = "b")]
    B,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Optimize {
    Exhaustive,
    Moves,
}

/// `Ok(true)`: success; `Ok(false)`: verification failure; `Err`: usage.
type Outcome = Result<bool, String>;

trait Usage<T> {
    fn usage(self) -> Result<T, String>;
}

impl<T, E: std::fmt::Display> Usage<T> for Result<T, E> {
    fn usage(self) -> Result<T, String> {
        self.map_err(|e| e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(&cli) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_FAIL,
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    let c = &cli.common;
    match &cli.command {
        Command::Construct { kind, sizes, sweep } => construct(c, *kind, sizes.as_deref(), *sweep),
        Command::Norm { degrees } => norm(c, *degrees),
        Command::Classify {
            optimize,
            edge,
            xi,
            no_order,
        } => classify(c, *optimize, edge.as_deref(), xi, *no_order),
        Command::Improve { delta4, toggle, shuffle } => improve(c, delta4, toggle.as_deref(), *shuffle),
        Command::Census {
            problem,
            n,
            exhaustive,
            class_cap,
        } => census(c, problem, *n, *exhaustive, *class_cap),
        Command::Mantel { lambda, path } => mantel(c, lambda.as_deref(), path.as_deref()),
        Command::Symmetrize => symmetrize(c),
        Command::Ineq {
            resolution,
            interval,
            width,
        } => ineq(c, *resolution, *interval, *width),
        Command::Check { suite, n_max } => check(c, suite, *n_max),
    }
}

fn need<'a>(p: &'a Option<PathBuf>, flag: &str) -> Result<&'a Path, String> {
    p.as_deref().ok_or_else(|| format!("--{flag} is required"))
}

fn emit_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn pair_arg(s: &str, n: usize) -> Result<Pair, String> {
    match parse_list(s)?[..] {
        [a, b] => Pair::checked(a, b, n).usage(),
        _ => Err(format!("expected a pair a,b, got {s:?}")),
    }
}

fn sizes3(s: &str) -> Result<[usize; 3], String> {
    match parse_list(s)?[..] {
        [a, b, c] => Ok([a, b, c]),
        _ => Err(format!("expected three sizes n1,n2,n3, got {s:?}")),
    }
}

fn construct(c: &Common, kind: Kind, sizes: Option<&str>, sweep: Option<usize>) -> Outcome {
    if let Some(n) = sweep {
        let report = balancedness_sweep(n);
        let mut csv = String::from("n1,n2,n3,l2\n");
        for (comp, v) in &report.values {
            let [a, b, d] = comp.0;
            let _ = writeln!(csv, "{a},{b},{d},{v}");
        }
        match &c.output {
            Some(p) => write_file(p, &csv).usage()?,
            None => print!("{csv}"),
        }
        if c.json {
            emit_json(&json!({
                "n": n,
                "max": js::rational(&report.max),
                "maximizers": report.maximizers.iter().map(|m| m.0).collect::<Vec<_>>(),
                "maximizers_are_near_balanced": report.maximizers_are_near_balanced,
                "gains": report.gains.iter().map(|g| json!({
                    "polynomial": g.polynomial,
                    "parameter": g.parameter,
                    "from": g.from.0,
                    "to": g.to.0,
                    "expected": js::rational(&g.expected),
                    "actual": js::rational(&g.actual),
                    "pass": g.pass(),
                })).collect::<Vec<_>>(),
            }));
        }
        return Ok(report.pass());
    }
    let sizes = parse_list(sizes.ok_or("--sizes or --sweep is required")?)?;
    let (h, p, closed, label) = match (kind, &sizes[..]) {
        (Kind::C, &[a, b, d]) => {
            let comp = Composition3::new(a, b, d);
            let (h, p) = build_c(comp);
            (h, p, Some(c_l2_closed(comp)), "c")
        }
        (Kind::B, &[a, b]) => {
            let (h, side) = build_b(a, b);
            let p = Partition3::new(side).usage()?;
            (h, p, None, "b")
        }
        (Kind::C, _) => return Err("C needs three sizes".into()),
        (Kind::B, _) => return Err("B needs two sizes".into()),
    };
    let stem = c.output.clone().unwrap_or_else(|| PathBuf::from(format!("{label}{}", h.n())));
    write_file(&stem.with_extension("h3"), &write_h3(&h)).usage()?;
    write_file(&stem.with_extension("p3"), &write_p3(&p)).usage()?;
    let l2 = h.l2_norm();
    let ok = closed.is_none_or(|v| v == int(i128::from(l2)));
    if c.json {
        emit_json(&json!({
            "type": label.to_uppercase(),
            "sizes": sizes,
            "n": h.n(),
            "edges": h.len(),
            "l2": js::uint(l2),
            "closed_form": closed.as_ref().map(js::rational),
            "files": [stem.with_extension("h3"), stem.with_extension("p3")],
        }));
    } else {
        println!("{} {:?}: n = {}, |H| = {}, l2 = {l2}", label.to_uppercase(), sizes, h.n(), h.len());
        if let Some(v) = closed {
            println!("closed form {v} ({})", if ok { "agrees" } else { "DISAGREES" });
        }
        println!("wrote {} and {}", stem.with_extension("h3").display(), stem.with_extension("p3").display());
    }
    Ok(ok)
}

fn load_h3(c: &Common) -> Result<ThreeGraph, String> {
    formats::read_h3(need(&c.input, "input")?).usage()
}

fn load_cg(c: &Common) -> Result<ColoredGraph, String> {
    formats::read_cg(need(&c.input, "input")?).usage()
}

fn norm(c: &Common, degrees: bool) -> Outcome {
    let h = load_h3(c)?;
    let l2 = h.l2_norm();
    let s2 = h.count_s2();
    let m = h.len() as u64;
    let handshake: u64 = h.codegrees().iter().map(|(_, d)| u64::from(d)).sum();
    let ok = l2 == 2 * s2 + 3 * m && handshake == 3 * m;
    let spread = degrees.then(|| s_spread(&h));
    if c.json {
        let mut v = json!({
            "n": h.n(),
            "edges": m,
            "l2": js::uint(l2),
            "s2": js::uint(s2),
            "identity": js::uint(2 * s2 + 3 * m),
            "codegree_sum": js::uint(handshake),
            "pass": ok,
        });
        if let Some(r) = &spread {
            v["two_norm_degrees"] = json!(r.s.iter().map(|&x| js::uint(x)).collect::<Vec<_>>());
            v["max_pair_gap"] = js::uint(r.max_pair_gap);
            v["vs_average_gap"] = js::rational(&r.vs_average_gap);
            v["gap_bound"] = js::uint(r.bound);
        }
        emit_json(&v);
    } else {
        println!("n = {}, |H| = {m}", h.n());
        println!("l2 = {l2}");
        println!(
            "2*S2 + 3|H| = 2*{s2} + 3*{m} = {} ({})",
            2 * s2 + 3 * m,
            if l2 == 2 * s2 + 3 * m { "agrees" } else { "DISAGREES" }
        );
        println!("codegree sum = {handshake}, 3|H| = {}", 3 * m);
        if let Some(r) = &spread {
            println!("s(v) = {:?}", r.s);
            println!("max |s(u) - s(v)| = {} (60n^2 = {})", r.max_pair_gap, r.bound);
        }
    }
    Ok(ok)
}

fn partition_for(c: &Common, h: &ThreeGraph, optimize: Option<Optimize>) -> Result<Partition3, String> {
    if let Some(path) = &c.partition {
        let p = formats::read_p3(path).usage()?;
        p.check_covers(h.n()).usage()?;
        return Ok(p);
    }
    let mode = match optimize {
        Some(Optimize::Exhaustive) => OptimizeMode::Exhaustive,
        Some(Optimize::Moves) => OptimizeMode::VertexMoves,
        None if h.n() <= EXHAUSTIVE_MAX_N => OptimizeMode::Exhaustive,
        None => OptimizeMode::VertexMoves,
    };
    Ok(optimize_partition(h, mode, None).usage()?.partition)
}

fn classify(c: &Common, optimize: Option<Optimize>, edge: Option<&str>, xi: &str, no_order: bool) -> Outcome {
    let h = load_h3(c)?;
    let p = partition_for(c, &h, optimize)?;
    let ec = classify_edges(&h, &p).usage()?;
    if c.partition.is_none() {
        if let Some(out) = &c.output {
            write_file(&out.with_extension("p3"), &write_p3(&p)).usage()?;
        }
    }
    let checklist = match edge {
        Some(e) => {
            let e = pair_arg(e, h.n())?;
            let mut t = Thresholds::new(parse_rational(xi)?).usage()?;
            if no_order {
                t = t.without_order();
            }
            let cl = if p.part(e.u) == p.part(e.v) {
                check_phase_one_hypotheses(&h, &p, e, &t)
            } else {
                check_phase_two_hypotheses(&h, &p, e, &t)
            };
            Some(cl.usage()?)
        }
        None => None,
    };
    if c.json {
        let mut v = js::classification(&ec, &p);
        if let Some(cl) = &checklist {
            v["checklist"] = js::checklist(cl);
        }
        emit_json(&v);
    } else {
        println!("partition {} (sizes {:?}), |H ∩ C[P]| = {}", p.to_label_string(), p.sizes(), ec.kept);
        for f in turanl2_core::classification::Family::ALL {
            let s = ec.stats(f);
            println!(
                "{:>5}: {:>6} edges, max pair codegree {}, max vertex degree {}",
                f.name(),
                s.size,
                s.max_pair_codegree,
                s.max_vertex_degree
            );
        }
        if let Some(cl) = &checklist {
            println!("phase {} hypotheses for {:?}:", cl.phase, cl.e_star.as_array());
            for i in &cl.items {
                let rel = match i.relation {
                    turanl2_core::classification::Relation::Le => "<=",
                    turanl2_core::classification::Relation::Ge => ">=",
                };
                println!("  ({}) {} {rel} {}: {}", i.id, i.lhs, i.rhs, if i.pass { "ok" } else { "fails" });
            }
        }
    }
    Ok(true)
}

fn improve(c: &Common, delta4: &str, toggle: Option<&str>, shuffle: bool) -> Outcome {
    let h = load_h3(c)?;
    let p = formats::read_p3(need(&c.partition, "partition")?).usage()?;
    p.check_covers(h.n()).usage()?;
    if let Some(e) = toggle {
        let e = pair_arg(e, h.n())?;
        let phase = if p.part(e.u) == p.part(e.v) { Phase::One } else { Phase::Two };
        let (g, r) = apply_toggle(&h, &p, e, phase).usage()?;
        if let Some(out) = &c.output {
            write_file(out, &write_h3(&g)).usage()?;
        }
        if c.json {
            emit_json(&js::delta_report(&r));
        } else {
            println!(
                "phase {} toggle of {:?}: -{} +{} edges, l2 {} -> {} (delta {}, decomposed {})",
                phase.number(),
                e.as_array(),
                r.removed.len(),
                r.added.len(),
                r.l2_before,
                r.l2_after,
                r.delta,
                r.decomposed
            );
        }
        return Ok(r.reconciles());
    }
    let delta4: Rational = parse_rational(delta4)?;
    let seed = c.seed.unwrap_or(DEFAULT_SEED);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trace = two_phase_driver(&h, &p, delta4, shuffle.then_some(&mut rng)).usage()?;
    let mut lines = String::new();
    for s in &trace.steps {
        let _ = writeln!(lines, "{}", js::trace_step(&s.report));
    }
    match &c.output {
        Some(out) => {
            write_file(out, &lines).usage()?;
            write_file(&out.with_extension("h3"), &write_h3(&trace.final_graph)).usage()?;
        }
        None if !c.json => print!("{lines}"),
        None => {}
    }
    let ok = trace.steps.iter().all(|s| s.report.reconciles() && s.bad_monotone);
    if c.json {
        let mut v = js::driver_summary(&trace);
        v["seed"] = json!(seed);
        v["shuffled"] = json!(shuffle);
        emit_json(&v);
    } else {
        eprintln!(
            "{} steps, l2 {} -> {}, {} bad edges left, B monotone: {}",
            trace.steps.len(),
            trace.l2[0],
            trace.l2.last().copied().unwrap_or(0),
            trace.leftover_bad.len(),
            trace.steps.iter().all(|s| s.bad_monotone)
        );
    }
    Ok(ok)
}

fn census(c: &Common, problem: &str, n: usize, exhaustive: bool, class_cap: usize) -> Outcome {
    let objective = Objective::parse(problem).usage()?;
    let pool = par::pool(par::resolve_workers(c.workers));
    let report = match objective {
        Objective::K43L2 if exhaustive => census_k43_naive(n),
        Objective::K43L2 => par::census_k43(n, &pool),
        Objective::MantelEdges | Objective::MantelL2 if exhaustive => census_colored_mantel(n, objective),
        Objective::MantelEdges | Objective::MantelL2 => census_colored_mantel_symmetrized(n, objective, class_cap),
        Objective::Tripartite if exhaustive => census_tripartite_naive(n),
        Objective::Tripartite => census_tripartite(n),
    }
    .usage()?;
    let csv = census_csv(&report);
    if let Some(dir) = &c.output {
        write_file(&dir.join("census.csv"), &csv).usage()?;
        write_file(&dir.join("census.json"), &format!("{}\n", serde_json::to_string_pretty(&js::census(&report)).expect("serializable"))).usage()?;
        write_representatives(dir, &report)?;
    }
    if c.json {
        emit_json(&js::census(&report));
    } else {
        print!("{csv}");
    }
    Ok(report.upper_bound.as_ref().is_none_or(|u| u.holds))
}

fn census_csv(r: &CensusReport) -> String {
    let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
    format!(
        "problem,n,optimum,exact,classes,rotation_classes,labeled,reference,reference_value,attains,unique,nodes\n{},{},{},{},{},{},{},{},{},{},{},{}\n",
        r.objective.name(),
        r.n,
        r.optimum,
        r.exact,
        opt(r.class_count),
        opt(r.rotation_class_count),
        r.labeled_count.map(|v| v.to_string()).unwrap_or_default(),
        r.reference.name,
        r.reference.value,
        r.reference.attains,
        r.reference.unique,
        r.nodes
    )
}

fn write_representatives(dir: &Path, r: &CensusReport) -> Result<(), String> {
    match &r.representatives {
        Representatives::ThreeGraphs(v) => {
            for (i, h) in v.iter().enumerate() {
                write_file(&dir.join(format!("extremal-{i}.h3")), &write_h3(h)).usage()?;
            }
        }
        Representatives::Colored(v) => {
            for (i, g) in v.iter().enumerate() {
                write_file(&dir.join(format!("extremal-{i}.cg")), &write_cg(g)).usage()?;
            }
        }
    }
    Ok(())
}

fn mantel(c: &Common, lambda: Option<&str>, path: Option<&str>) -> Outcome {
    let g = match lambda {
        Some(s) => {
            let [a, b, d] = sizes3(s)?;
            let g = build_lambda(a, b, d);
            if let Some(out) = &c.output {
                write_file(&out.with_extension("cg"), &write_cg(&g)).usage()?;
            }
            g
        }
        None => load_cg(c)?,
    };
    let ctf = g.is_cyclic_triangle_free();
    let part = g.partition().sizes().into_iter().max().unwrap_or(0) as i128;
    let bound = frac(5 * part * part, 2) + int(5 * part);
    let within = int(g.len() as i128) <= bound;
    let path_bound = match path {
        Some(s) => Some(g.degree_sum_on_path(&parse_list(s)?).usage()?),
        None => None,
    };
    // a cyclically triangle-free graph above the bound, or a path bound whose
    // hypotheses hold but which fails, contradicts a checked statement
    let ok = (!ctf || within) && path_bound.as_ref().is_none_or(|b| !b.hypotheses || b.holds);
    if c.json {
        let mut v = json!({
            "n": g.n(),
            "colors": g.partition().to_label_string(),
            "edges": g.len(),
            "cyclic_triangles": js::uint(g.count_cyclic_triangles()),
            "rho3": g.rho3().ok().map(|r| js::rational(&r)),
            "cyclic_triangle_free": ctf,
            "locally_maximal_index": g.locally_maximal_index().map(|i| i + 1),
            "bound": js::rational(&bound),
            "within_bound": within,
        });
        if let Some(b) = &path_bound {
            v["path"] = json!({
                "k": b.k, "n": b.n, "sum": b.sum, "bound": b.bound, "holds": b.holds,
                "precondition": b.precondition, "distinct": b.distinct, "hypotheses": b.hypotheses,
            });
        }
        emit_json(&v);
    } else {
        println!("n = {}, colors {}, |G| = {}", g.n(), g.partition().to_label_string(), g.len());
        println!("cyclic triangles: {}", g.count_cyclic_triangles());
        match g.locally_maximal_index() {
            Some(i) => println!("locally maximal at part {}", i + 1),
            None => println!("not locally maximal"),
        }
        println!("5n^2/2 + 5n = {bound} with n = {part}: {}", if within { "within" } else { "exceeded" });
        if let Some(b) = &path_bound {
            println!(
                "path of length {}: degree sum {} vs 3(k+1)n = {} ({}; hypotheses {})",
                b.k,
                b.sum,
                b.bound,
                if b.holds { "holds" } else { "fails" },
                if b.hypotheses { "met" } else { "not met" }
            );
        }
    }
    Ok(ok)
}

fn symmetrize(c: &Common) -> Outcome {
    let g = load_cg(c)?;
    let ctf = g.is_cyclic_triangle_free();
    if !ctf {
        return Err("input has a cyclic triangle".into());
    }
    let (s, steps) = g.locally_symmetrize();
    let facts = s.check_symmetrized_facts().usage()?;
    if let Some(out) = &c.output {
        write_file(out, &write_cg(&s)).usage()?;
    }
    let ok = s.len() >= g.len() && s.is_cyclic_triangle_free() && facts.all_pass();
    if c.json {
        let mut v = js::facts(&facts);
        v["edges_before"] = json!(g.len());
        v["edges_after"] = json!(s.len());
        v["steps"] = json!(steps.iter().map(describe_step).collect::<Vec<_>>());
        emit_json(&v);
    } else {
        for st in &steps {
            println!("{}", describe_step(st));
        }
        println!("{} -> {} edges in {} steps", g.len(), s.len(), steps.len());
        for f in &facts.facts {
            let state = match (f.applies, f.pass) {
                (false, _) => "n/a",
                (true, true) => "ok",
                (true, false) => "FAILS",
            };
            println!("{}: {state}{}", f.id, f.witness.as_ref().map(|w| format!(" {w:?}")).unwrap_or_default());
        }
    }
    Ok(ok)
}

fn ineq(c: &Common, resolution: usize, interval: bool, width: f64) -> Outcome {
    if width.is_nan() || width <= 0.0 {
        return Err("--width must be positive".into());
    }
    let pool = par::pool(par::resolve_workers(c.workers));
    let r = par::simplex(resolution, &pool).usage()?;
    let iv = interval.then(|| certify_simplex(width));
    let spread = match &c.input {
        Some(p) => Some(s_spread(&formats::read_h3(p).usage()?)),
        None => None,
    };
    let ok = r.holds() && r.zero_only_at_barycenter() && iv.as_ref().is_none_or(|i| i.certified_all());
    if c.json {
        let mut v = js::simplex(&r);
        if let Some(i) = &iv {
            v["interval"] = js::interval(i);
        }
        if let Some(s) = &spread {
            v["spread"] = json!({
                "max_pair_gap": js::uint(s.max_pair_gap),
                "vs_average_gap": js::rational(&s.vs_average_gap),
                "bound": js::uint(s.bound),
            });
        }
        emit_json(&v);
    } else {
        println!(
            "d = {resolution}: {} points, worst margin {} at {:?}, {} zeros, {} violations",
            r.points,
            r.worst_margin,
            r.argmin,
            r.zeros.len(),
            r.violations.len()
        );
        if let Some(i) = &iv {
            println!(
                "interval: {} certified, {} local, {} outside, {} undecided, finest width {}",
                i.certified,
                i.local,
                i.outside,
                i.undecided.len(),
                i.finest
            );
        }
        if let Some(s) = &spread {
            println!("s-spread: max gap {} (60n^2 = {}), vs average {}", s.max_pair_gap, s.bound, s.vs_average_gap);
        }
    }
    Ok(ok)
}

fn check(c: &Common, selection: &str, n_max: usize) -> Outcome {
    let ids = suite::parse_selection(selection)?;
    let cfg = SuiteConfig {
        seed: c.seed.unwrap_or(DEFAULT_SEED),
        n_max,
        artifacts: c.output.clone(),
        ..SuiteConfig::default()
    };
    let pool = par::pool(par::resolve_workers(c.workers));
    if !c.json {
        println!("# seed {} (ChaCha8), n-max {n_max}", cfg.seed);
    }
    let mut outcomes = Vec::new();
    for id in ids {
        let o = suite::run(id, &cfg, &pool);
        if !c.json {
            println!("{o}");
        }
        outcomes.push(o);
    }
    let all = outcomes.iter().all(|o| o.pass);
    if c.json {
        emit_json(&json!({
            "seed": cfg.seed,
            "rng": "ChaCha8",
            "n_max": n_max,
            "criteria": outcomes.iter().map(|o| o.to_json()).collect::<Vec<_>>(),
            "all_pass": all,
        }));
    } else {
        println!("{} of {} criteria pass", outcomes.iter().filter(|o| o.pass).count(), outcomes.len());
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_common_flags_anywhere() {
        let cli = Cli::try_parse_from(["turanl2", "norm", "--input", "a.h3", "--json", "--workers", "2"]).unwrap();
        assert_eq!(cli.common.input.as_deref(), Some(Path::new("a.h3")));
        assert!(cli.common.json);
        assert_eq!(cli.common.workers, Some(2));
        let cli = Cli::try_parse_from(["turanl2", "--seed", "9", "check", "--suite", "1,2"]).unwrap();
        assert_eq!(cli.common.seed, Some(9));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run(["turanl2", "frobnicate"]), EXIT_USAGE);
        assert_eq!(run(["turanl2", "norm"]), EXIT_USAGE);
        assert_eq!(run(["turanl2", "construct", "--type", "C", "--sizes", "1,2"]), EXIT_USAGE);
        assert_eq!(run(["turanl2", "census", "--problem", "nope", "--n", "3"]), EXIT_USAGE);
        assert_eq!(run(["turanl2", "check", "--suite", "99"]), EXIT_USAGE);
    }

    #[test]
    fn pairs_and_sizes() {
        assert_eq!(pair_arg("3,1", 4).unwrap(), Pair::new(1, 3));
        assert!(pair_arg("1,1", 4).is_err());
        assert!(pair_arg("1,2,3", 4).is_err());
        assert_eq!(sizes3("1,2,3").unwrap(), [1, 2, 3]);
        assert!(sizes3("1,2").is_err());
    }
}
