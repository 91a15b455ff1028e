//! Reports: one per evaluated expression, rendered as text or JSON. The
//! `status` field is the same in both renderings.

use serde_json::{json, Map, Value};

use ringenv_core::verdict::{EnvelopeMap, EnvelopeVerdict, VerdictStatus, Witness};

use crate::json::{hom_to_json, verdict_to_json};

#[derive(Clone, Debug)]
pub struct Report {
    pub input: String,
    pub backend: &'static str,
    pub command: String,
    pub status: String,
    pub body: ReportBody,
    pub total_ms: f64,
}

#[derive(Clone, Debug)]
pub struct PrimeInfo {
    pub generators: Vec<usize>,
    pub members: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct FactorInfo {
    pub label: String,
    pub order: usize,
    pub idempotent: usize,
    pub stabilization_index: usize,
}

#[derive(Clone, Debug)]
pub enum ReportBody {
    Envelope {
        class: &'static str,
        verdict: EnvelopeVerdict,
    },
    SpectrumFinite {
        primes: Vec<PrimeInfo>,
    },
    SpectrumSymbolic {
        primes: Vec<String>,
        complete: bool,
    },
    NilFinite {
        members: Vec<usize>,
        is_prime: bool,
    },
    NilPresented {
        zero_dimensional: bool,
        dimension: usize,
        nilpotent_variables: Vec<(String, bool)>,
        local: bool,
        x1_normal_form: String,
        x1_nonzero: bool,
    },
    NilSymbolic {
        descriptor: String,
    },
    Decompose {
        factors: Vec<FactorInfo>,
        iso_bijective: bool,
    },
    Verify {
        class: &'static str,
        theorem: EnvelopeVerdict,
        oracle: Option<EnvelopeVerdict>,
        oracle_summary: String,
        agree: bool,
        catalog_max_order: usize,
        adequacy_note: Option<String>,
    },
    Groebner {
        order: String,
        basis: Vec<String>,
        unit_ideal: bool,
        zero_dimensional: Option<bool>,
        dimension: Option<usize>,
    },
}

fn witness_summary(witness: &Witness) -> String {
    match witness {
        Witness::TwoMaximalIdeals(a, b) => format!("two maximal ideals {a} and {b}"),
        Witness::NonPrimeNilpotentProduct { a, b } => {
            format!("{a}·{b} is nilpotent but neither factor is")
        }
        Witness::Unfactorable { codomain_label, .. } => {
            format!("a map into {codomain_label} does not factor")
        }
        Witness::NonMinimalEndomorphism(_) => "a non-bijective commuting endomorphism".into(),
        Witness::FactorFailed { index, witness } => {
            format!("factor {index}: {}", witness_summary(witness))
        }
        Witness::Rule(rule) => format!("{rule}"),
    }
}

fn verdict_lines(v: &EnvelopeVerdict, out: &mut Vec<String>) {
    match v.status {
        VerdictStatus::Exists => {
            if let Some(map) = &v.map {
                out.push(format!("map: {} -> {}", map.domain_label(), map.codomain_label()));
                if let EnvelopeMap::Finite(h) = map {
                    out.push(format!("image: {:?}", h.image_table()));
                }
            }
        }
        VerdictStatus::NotExists => {
            if let Some(w) = &v.witness {
                out.push(format!("witness: {}", witness_summary(w)));
            }
        }
        VerdictStatus::Unknown => {
            if let Some(reason) = &v.reason {
                out.push(format!("reason: {reason}"));
            }
        }
    }
    if let Some(min) = &v.minimal {
        out.push(format!(
            "minimality: {} ({} endomorphisms, {} commuting)",
            min.minimal, min.endomorphism_count, min.commuting_count
        ));
    }
    if let Some(note) = &v.note {
        out.push(format!("note: {note}"));
    }
}

impl Report {
    pub fn to_text(&self) -> String {
        let mut lines = vec![
            format!("input: {}", self.input),
            format!("backend: {}", self.backend),
            format!("command: {}", self.command),
            format!("status: {}", self.status),
        ];
        match &self.body {
            ReportBody::Envelope { class, verdict } => {
                lines.push(format!("class: {class}"));
                verdict_lines(verdict, &mut lines);
            }
            ReportBody::SpectrumFinite { primes } => {
                lines.push(format!("primes: {}", primes.len()));
                for p in primes {
                    lines.push(format!(
                        "  ({}) = {:?}",
                        p.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(","),
                        p.members
                    ));
                }
            }
            ReportBody::SpectrumSymbolic { primes, complete } => {
                lines.push(format!(
                    "primes: {}{}",
                    primes.len(),
                    if *complete { "" } else { " (truncated; infinitely many)" }
                ));
                for p in primes {
                    lines.push(format!("  {p}"));
                }
            }
            ReportBody::NilFinite { members, is_prime } => {
                lines.push(format!("nilradical: {members:?}"));
                lines.push(format!("prime: {is_prime}"));
            }
            ReportBody::NilPresented {
                zero_dimensional,
                dimension,
                nilpotent_variables,
                local,
                x1_normal_form,
                x1_nonzero,
            } => {
                lines.push(format!("zero-dimensional: {zero_dimensional} (dimension {dimension})"));
                for (v, nil) in nilpotent_variables {
                    lines.push(format!("  {v} nilpotent: {nil}"));
                }
                lines.push(format!("local with nil maximal ideal: {local}"));
                lines.push(format!("normal form of x1: {x1_normal_form}"));
                lines.push(format!("x1 nonzero in the quotient: {x1_nonzero}"));
            }
            ReportBody::NilSymbolic { descriptor } => {
                lines.push(format!("nilradical: {descriptor} (square-zero)"));
            }
            ReportBody::Decompose { factors, iso_bijective } => {
                lines.push(format!("local factors: {}", factors.len()));
                for f in factors {
                    lines.push(format!(
                        "  {} (order {}, idempotent {}, m^n stabilizes at n={})",
                        f.label, f.order, f.idempotent, f.stabilization_index
                    ));
                }
                lines.push(format!("isomorphism verified: {iso_bijective}"));
            }
            ReportBody::Verify {
                class,
                theorem,
                oracle_summary,
                agree,
                catalog_max_order,
                adequacy_note,
                ..
            } => {
                lines.push(format!("class: {class}"));
                lines.push(format!("theorem verdict: {}", theorem.status));
                lines.push(format!("oracle: {oracle_summary}"));
                lines.push(format!("catalog max order: {catalog_max_order}"));
                lines.push(format!("agreement: {agree}"));
                if let Some(note) = adequacy_note {
                    lines.push(format!("note: {note}"));
                }
            }
            ReportBody::Groebner {
                order,
                basis,
                unit_ideal,
                zero_dimensional,
                dimension,
            } => {
                lines.push(format!("term order: {order}"));
                lines.push(format!("basis ({} elements):", basis.len()));
                for b in basis {
                    lines.push(format!("  {b}"));
                }
                lines.push(format!("unit ideal: {unit_ideal}"));
                if let Some(zd) = zero_dimensional {
                    lines.push(format!(
                        "zero-dimensional: {zd}{}",
                        dimension.map(|d| format!(" (dimension {d})")).unwrap_or_default()
                    ));
                }
            }
        }
        lines.push(format!("time: {:.1} ms", self.total_ms));
        lines.join("\n")
    }

    pub fn to_json(&self) -> Value {
        let mut result = Map::new();
        match &self.body {
            ReportBody::Envelope { class, verdict } => {
                result.insert("class".into(), json!(class));
                result.insert("verdict".into(), verdict_to_json(verdict));
            }
            ReportBody::SpectrumFinite { primes } => {
                result.insert(
                    "primes".into(),
                    Value::Array(
                        primes
                            .iter()
                            .map(|p| json!({ "generators": p.generators, "members": p.members }))
                            .collect(),
                    ),
                );
                result.insert("complete".into(), json!(true));
            }
            ReportBody::SpectrumSymbolic { primes, complete } => {
                result.insert("primes".into(), json!(primes));
                result.insert("complete".into(), json!(complete));
            }
            ReportBody::NilFinite { members, is_prime } => {
                result.insert("nilradical".into(), json!(members));
                result.insert("prime".into(), json!(is_prime));
            }
            ReportBody::NilPresented {
                zero_dimensional,
                dimension,
                nilpotent_variables,
                local,
                x1_normal_form,
                x1_nonzero,
            } => {
                result.insert("zero_dimensional".into(), json!(zero_dimensional));
                result.insert("dimension".into(), json!(dimension));
                result.insert(
                    "nilpotent_variables".into(),
                    Value::Array(
                        nilpotent_variables
                            .iter()
                            .map(|(v, n)| json!({ "variable": v, "nilpotent": n }))
                            .collect(),
                    ),
                );
                result.insert("local".into(), json!(local));
                result.insert("x1_normal_form".into(), json!(x1_normal_form));
                result.insert("x1_nonzero".into(), json!(x1_nonzero));
            }
            ReportBody::NilSymbolic { descriptor } => {
                result.insert("nilradical".into(), json!(descriptor));
                result.insert("square_zero".into(), json!(true));
            }
            ReportBody::Decompose { factors, iso_bijective } => {
                result.insert(
                    "factors".into(),
                    Value::Array(
                        factors
                            .iter()
                            .map(|f| {
                                json!({
                                    "label": f.label,
                                    "order": f.order,
                                    "idempotent": f.idempotent,
                                    "stabilization_index": f.stabilization_index,
                                })
                            })
                            .collect(),
                    ),
                );
                result.insert("iso_bijective".into(), json!(iso_bijective));
            }
            ReportBody::Verify {
                class,
                theorem,
                oracle,
                oracle_summary,
                agree,
                catalog_max_order,
                adequacy_note,
            } => {
                result.insert("class".into(), json!(class));
                result.insert("theorem".into(), verdict_to_json(theorem));
                if let Some(o) = oracle {
                    result.insert("oracle".into(), verdict_to_json(o));
                }
                result.insert("oracle_summary".into(), json!(oracle_summary));
                result.insert("agree".into(), json!(agree));
                result.insert(
                    "catalog".into(),
                    json!({ "class": class, "max_order": catalog_max_order }),
                );
                if let Some(note) = adequacy_note {
                    result.insert("adequacy_note".into(), json!(note));
                }
            }
            ReportBody::Groebner {
                order,
                basis,
                unit_ideal,
                zero_dimensional,
                dimension,
            } => {
                result.insert("term_order".into(), json!(order));
                result.insert("basis".into(), json!(basis));
                result.insert("unit_ideal".into(), json!(unit_ideal));
                if let Some(zd) = zero_dimensional {
                    result.insert("zero_dimensional".into(), json!(zd));
                }
                if let Some(d) = dimension {
                    result.insert("dimension".into(), json!(d));
                }
            }
        }
        json!({
            "input": self.input,
            "backend": self.backend,
            "command": self.command,
            "status": self.status,
            "result": Value::Object(result),
            "timings": { "total_ms": self.total_ms },
        })
    }
}

/// JSON form of a homomorphism, re-exported for report consumers.
pub fn hom_json(h: &ringenv_core::finring::RingHom) -> Value {
    hom_to_json(h)
}
