//! JSON forms of the core types.
//!
//! A finite ring serializes as
//! `{"order": n, "add": [[..]], "mul": [[..]], "zero": i, "one": j, "label": s}`
//! with row-major nested tables; reading back what was written is the
//! identity.

use serde_json::{json, Map, Value};

use ringenv_core::envelopes::ClassTag;
use ringenv_core::finring::{FiniteRing, Ideal, RingHom};
use ringenv_core::verdict::{
    CandidateFailure, CandidateFailureReason, Certificate, EnvelopeMap, EnvelopeVerdict,
    RuleCitation, SymMapKind, Witness,
};
use ringenv_core::Limits;

pub fn ring_to_json(ring: &FiniteRing) -> Value {
    let n = ring.order();
    let rows = |table: &[usize]| -> Value {
        Value::Array(
            (0..n)
                .map(|i| Value::Array((0..n).map(|j| json!(table[i * n + j])).collect()))
                .collect(),
        )
    };
    json!({
        "order": n,
        "add": rows(ring.add_table()),
        "mul": rows(ring.mul_table()),
        "zero": ring.zero(),
        "one": ring.one(),
        "label": ring.label(),
    })
}

pub fn ring_from_json(value: &Value, limits: &Limits) -> Result<FiniteRing, String> {
    let obj = value.as_object().ok_or("expected an object")?;
    let order = obj
        .get("order")
        .and_then(Value::as_u64)
        .ok_or("missing order")? as usize;
    let table = |key: &str| -> Result<Vec<usize>, String> {
        let rows = obj.get(key).and_then(Value::as_array).ok_or_else(|| format!("missing {key}"))?;
        if rows.len() != order {
            return Err(format!("{key} must have {order} rows"));
        }
        let mut flat = Vec::with_capacity(order * order);
        for row in rows {
            let row = row.as_array().ok_or_else(|| format!("{key} rows must be arrays"))?;
            if row.len() != order {
                return Err(format!("{key} rows must have {order} entries"));
            }
            for v in row {
                flat.push(v.as_u64().ok_or_else(|| format!("{key} entries must be integers"))? as usize);
            }
        }
        Ok(flat)
    };
    let add = table("add")?;
    let mul = table("mul")?;
    let zero = obj.get("zero").and_then(Value::as_u64).ok_or("missing zero")? as usize;
    let one = obj.get("one").and_then(Value::as_u64).ok_or("missing one")? as usize;
    let label = obj
        .get("label")
        .and_then(Value::as_str)
        .ok_or("missing label")?
        .to_string();
    FiniteRing::from_tables(order, add, mul, zero, one, label, limits).map_err(|e| e.to_string())
}

pub fn hom_to_json(hom: &RingHom) -> Value {
    json!({
        "kind": "finite",
        "domain": hom.domain().label(),
        "codomain": hom.codomain().label(),
        "image": hom.image_table(),
    })
}

fn ideal_to_json(ideal: &Ideal) -> Value {
    let mut obj = Map::new();
    obj.insert("members".into(), json!(ideal.members()));
    if let Some(gens) = ideal.generators() {
        obj.insert("generators".into(), json!(gens));
    }
    Value::Object(obj)
}

fn rule_to_json(rule: &RuleCitation) -> Value {
    json!({ "rule": rule.rule, "statement": rule.statement })
}

fn map_to_json(map: &EnvelopeMap) -> Value {
    match map {
        EnvelopeMap::Finite(h) => hom_to_json(h),
        EnvelopeMap::Symbolic(m) => {
            let mut obj = Map::new();
            obj.insert("kind".into(), json!("symbolic"));
            obj.insert("domain".into(), json!(m.domain));
            obj.insert("codomain".into(), json!(m.codomain));
            match &m.kind {
                SymMapKind::Identity => {
                    obj.insert("map".into(), json!("identity"));
                }
                SymMapKind::Projection { kernel } => {
                    obj.insert("map".into(), json!("projection"));
                    obj.insert(
                        "kernel".into(),
                        json!(kernel.iter().map(|s| s.label()).collect::<Vec<_>>()),
                    );
                }
                SymMapKind::Diagonal { components } => {
                    obj.insert("map".into(), json!("diagonal"));
                    obj.insert("components".into(), json!(components));
                }
            }
            Value::Object(obj)
        }
    }
}

fn witness_to_json(witness: &Witness) -> Value {
    match witness {
        Witness::TwoMaximalIdeals(a, b) => json!({
            "kind": "two_maximal_ideals",
            "first": ideal_to_json(a),
            "second": ideal_to_json(b),
        }),
        Witness::NonPrimeNilpotentProduct { a, b } => json!({
            "kind": "non_prime_nilpotent_product",
            "a": a,
            "b": b,
        }),
        Witness::Unfactorable { codomain_label, map } => json!({
            "kind": "unfactorable",
            "codomain": codomain_label,
            "map": hom_to_json(map),
        }),
        Witness::NonMinimalEndomorphism(v) => json!({
            "kind": "non_minimal_endomorphism",
            "map": hom_to_json(v),
        }),
        Witness::FactorFailed { index, witness } => json!({
            "kind": "factor_failed",
            "index": index,
            "witness": witness_to_json(witness),
        }),
        Witness::Rule(rule) => json!({
            "kind": "rule",
            "rule": rule.rule,
            "statement": rule.statement,
        }),
    }
}

fn candidate_failure_to_json(c: &CandidateFailure) -> Value {
    let reason = match &c.reason {
        CandidateFailureReason::QuotientNotNoetherian => json!({
            "kind": "quotient_not_noetherian",
        }),
        CandidateFailureReason::CriterionFails { prime, rule } => json!({
            "kind": "criterion_fails",
            "prime": format!("{prime:?}"),
            "rule": rule_to_json(rule),
        }),
    };
    json!({
        "kernel": c.kernel.iter().map(|s| s.label()).collect::<Vec<_>>(),
        "reason": reason,
    })
}

fn certificate_to_json(cert: &Certificate) -> Value {
    match cert {
        Certificate::Field { maximal_ideal } => json!({
            "kind": "field",
            "maximal_ideal": ideal_to_json(maximal_ideal),
        }),
        Certificate::Semisimple { primes, factor_orders } => json!({
            "kind": "semisimple",
            "primes": primes.iter().map(ideal_to_json).collect::<Vec<_>>(),
            "factor_orders": factor_orders,
        }),
        Certificate::Domain { nilradical } => json!({
            "kind": "domain",
            "nilradical": ideal_to_json(nilradical),
        }),
        Certificate::NoetherianFinite { factors } => json!({
            "kind": "noetherian_finite",
            "factors": factors
                .iter()
                .map(|f| json!({
                    "label": f.label,
                    "order": f.order,
                    "stabilization_index": f.stabilization_index,
                    "stable_is_zero": f.stable_is_zero,
                }))
                .collect::<Vec<_>>(),
        }),
        Certificate::SymNoetherian { kernel, rules, failed_candidates } => json!({
            "kind": "sym_noetherian",
            "kernel": kernel.iter().map(|s| s.label()).collect::<Vec<_>>(),
            "rules": rules.iter().map(rule_to_json).collect::<Vec<_>>(),
            "failed_candidates": failed_candidates
                .iter()
                .map(candidate_failure_to_json)
                .collect::<Vec<_>>(),
        }),
    }
}

pub fn class_name(class: ClassTag) -> &'static str {
    match class {
        ClassTag::Field => "field",
        ClassTag::Semisimple => "semisimple",
        ClassTag::Domain => "domain",
        ClassTag::Noetherian => "noetherian",
    }
}

pub fn verdict_to_json(v: &EnvelopeVerdict) -> Value {
    let mut obj = Map::new();
    obj.insert("status".into(), json!(v.status.to_string()));
    obj.insert(
        "map".into(),
        v.map.as_ref().map(map_to_json).unwrap_or(Value::Null),
    );
    obj.insert(
        "witness".into(),
        v.witness.as_ref().map(witness_to_json).unwrap_or(Value::Null),
    );
    if let Some(reason) = &v.reason {
        obj.insert("reason".into(), json!(reason));
    }
    if let Some(min) = &v.minimal {
        obj.insert(
            "minimal".into(),
            json!({
                "minimal": min.minimal,
                "endomorphism_count": min.endomorphism_count,
                "commuting_count": min.commuting_count,
            }),
        );
    }
    if let Some(cert) = &v.certificate {
        obj.insert("certificate".into(), certificate_to_json(cert));
    }
    if let Some(note) = &v.note {
        obj.insert("note".into(), json!(note));
    }
    if let Some(cat) = &v.catalog {
        obj.insert(
            "catalog".into(),
            json!({ "class": class_name(cat.class), "max_order": cat.max_order }),
        );
    }
    Value::Object(obj)
}
