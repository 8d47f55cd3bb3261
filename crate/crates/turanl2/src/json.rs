//! JSON encodings of core reports.
//!
//! Integers above `2^53` are written as decimal strings; rationals are always
//! strings `p/q` (or `p` when integral).

use serde_json::{json, Map, Value};

use turanl2_core::census::{CensusReport, Representatives};
use turanl2_core::classification::{Checklist, EdgeClassification, Family, Relation};
use turanl2_core::colored::FactReport;
use turanl2_core::improve::{DeltaReport, DriverTrace};
use turanl2_core::inequality::SimplexReport;
use turanl2_core::interval::IntervalReport;
use turanl2_core::rational::Rational;
use turanl2_core::{Pair, Partition3};

const SAFE: u64 = 1 << 53;

pub fn uint(x: u64) -> Value {
    if x > SAFE {
        Value::String(x.to_string())
    } else {
        Value::from(x)
    }
}

pub fn int(x: i64) -> Value {
    if x.unsigned_abs() > SAFE {
        Value::String(x.to_string())
    } else {
        Value::from(x)
    }
}

pub fn wide(x: i128) -> Value {
    if x.unsigned_abs() > u128::from(SAFE) {
        Value::String(x.to_string())
    } else {
        Value::from(x as i64)
    }
}

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn pair(p: Pair) -> Value {
    json!(p.as_array())
}

pub fn checklist(c: &Checklist) -> Value {
    let items: Vec<Value> = c
        .items
        .iter()
        .map(|i| {
            json!({
                "id": i.id,
                "lhs": rational(&i.lhs),
                "relation": match i.relation { Relation::Le => "<=", Relation::Ge => ">=" },
                "rhs": i.rhs.to_string(),
                "pass": i.pass,
            })
        })
        .collect();
    json!({
        "phase": c.phase,
        "eStar": pair(c.e_star),
        "items": items,
        "all_pass": c.all_pass(),
    })
}

/// One line of a driver trace.
pub fn trace_step(r: &DeltaReport) -> Value {
    json!({
        "phase": r.phase.number(),
        "eStar": pair(r.e_star),
        "removed": r.removed,
        "added": r.added,
        "delta": int(r.delta),
        "l2": uint(r.l2_after),
    })
}

pub fn delta_report(r: &DeltaReport) -> Value {
    let sets: Vec<Value> = r
        .sets
        .iter()
        .map(|s| json!({"name": s.name, "sign": s.sign, "pairs": s.pairs.iter().map(|p| p.as_array()).collect::<Vec<_>>()}))
        .collect();
    json!({
        "phase": r.phase.number(),
        "eStar": pair(r.e_star),
        "removed": r.removed,
        "added": r.added,
        "sets": sets,
        "d_before": uint(r.d_before),
        "d_after": uint(r.d_after),
        "l2_before": uint(r.l2_before),
        "l2_after": uint(r.l2_after),
        "delta": int(r.delta),
        "decomposed": int(r.decomposed),
        "reconciles": r.reconciles(),
    })
}

pub fn driver_summary(t: &DriverTrace) -> Value {
    json!({
        "queues": {
            "internal": t.queues.internal.iter().map(|p| p.as_array()).collect::<Vec<_>>(),
            "crossing": t.queues.crossing.iter().map(|p| p.as_array()).collect::<Vec<_>>(),
            "b_tilde": t.queues.b_tilde,
        },
        "steps": t.steps.len(),
        "l2": t.l2.iter().map(|&x| uint(x)).collect::<Vec<_>>(),
        "leftover_bad": t.leftover_bad,
        "final_within_c": t.final_within_c(),
        "monotone": t.monotone(),
        "input_k43_free": t.input_k43_free,
        "final_k43_free": t.final_k43_free,
    })
}

pub fn classification(ec: &EdgeClassification, p: &Partition3) -> Value {
    let mut fams = Map::new();
    for f in Family::ALL {
        let s = ec.stats(f);
        fams.insert(
            f.name().to_string(),
            json!({
                "size": s.size,
                "max_pair_codegree": s.max_pair_codegree,
                "max_vertex_degree": s.max_vertex_degree,
            }),
        );
    }
    json!({
        "n": ec.n,
        "partition": p.to_label_string(),
        "sizes": p.sizes(),
        "kept": ec.kept,
        "families": fams,
    })
}

pub fn facts(r: &FactReport) -> Value {
    let facts: Vec<Value> = r
        .facts
        .iter()
        .map(|f| {
            let mut m = Map::new();
            m.insert("id".into(), json!(f.id));
            m.insert("pass".into(), json!(f.pass));
            m.insert("applies".into(), json!(f.applies));
            if let Some(w) = &f.witness {
                m.insert("witness".into(), json!(w));
            }
            Value::Object(m)
        })
        .collect();
    json!({ "cyclic_triangle_free": r.cyclic_triangle_free, "facts": facts })
}

pub fn simplex(r: &SimplexReport) -> Value {
    json!({
        "resolution": r.d,
        "worst_margin_num": wide(*r.worst_margin.numer()),
        "worst_margin_den": wide(*r.worst_margin.denom()),
        "argmin": r.argmin,
        "points": r.points,
        "zeros": r.zeros,
        "violations": r.violations,
        "holds": r.holds(),
        "zero_only_at_barycenter": r.zero_only_at_barycenter(),
    })
}

pub fn interval(r: &IntervalReport) -> Value {
    json!({
        "min_width": r.min_width,
        "certified": r.certified,
        "local": r.local,
        "outside": r.outside,
        "undecided": r.undecided.iter().map(|b| json!([b.x1, b.x2, b.w])).collect::<Vec<_>>(),
        "finest": r.finest,
        "certified_all": r.certified_all(),
    })
}

pub fn census(r: &CensusReport) -> Value {
    let kind = match &r.representatives {
        Representatives::ThreeGraphs(_) => "h3",
        Representatives::Colored(_) => "cg",
    };
    let ub = r.upper_bound.as_ref().map(|u| {
        json!({"name": u.name, "value": rational(&u.value), "holds": u.holds})
    });
    let template = r.template.as_ref().map(|t| {
        json!({
            "all_match": t.all_match,
            "witness": t.witness.as_ref().map(|w| json!({
                "colors": w.partition().to_label_string(),
                "edges": w.graph().edges(),
            })),
        })
    });
    json!({
        "problem": r.objective.name(),
        "n": r.n,
        "optimum": uint(r.optimum),
        "exact": r.exact,
        "representatives": r.representatives.len(),
        "representative_format": kind,
        "class_count": r.class_count,
        "rotation_class_count": r.rotation_class_count,
        "labeled_count": r.labeled_count.map(uint),
        "reference": {
            "name": r.reference.name,
            "value": uint(r.reference.value),
            "attains": r.reference.attains,
            "unique": r.reference.unique,
        },
        "upper_bound": ub,
        "template": template,
        "nodes": uint(r.nodes),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use turanl2_core::rational::frac;

    #[test]
    fn big_numbers_are_strings() {
        assert_eq!(uint(5), json!(5));
        assert_eq!(uint(SAFE), json!(SAFE));
        assert_eq!(uint(SAFE + 1), json!("9007199254740993"));
        assert_eq!(int(-(SAFE as i64) - 1), json!("-9007199254740993"));
        assert_eq!(wide(1 << 60), json!("1152921504606846976"));
        assert_eq!(wide(-7), json!(-7));
        assert_eq!(rational(&frac(6, 4)), json!("3/2"));
    }
}
