//! Backend inference and command dispatch.

use std::fmt;
use std::time::Instant;

use ringenv_core::envelopes::{
    domain_envelope, field_envelope, noetherian_envelope_finite, semisimple_envelope, ClassTag,
};
use ringenv_core::finring::{
    infinite_radical, is_local, local_decomposition, nilradical, spectrum, FinRingError,
    FiniteRing, Locality,
};
use ringenv_core::homsearch::{enumerate_homs, field_of_order, is_envelope, is_minimal,
    is_preenvelope, Catalog};
use ringenv_core::presented::{
    buchberger, fibonacci_truncation, is_zero_dimensional, normal_form, to_finite_ring,
    Polynomial, Presentation, PresentedError, TermOrder,
};
use ringenv_core::symring::{
    noetherian_envelope_decision, semisimple_envelope_sym, sym_spectrum, BaseRing,
    ModuleDescriptor, SymTrivExt, Summand,
};
use ringenv_core::verdict::{EnvelopeMap, VerdictStatus};
use ringenv_core::Limits;

use crate::ast::{Backend, BaseExpr, RingExpr, SummandExpr};
use crate::parse::ParseError;
use crate::report::{FactorInfo, PrimeInfo, Report, ReportBody};

/// Errors carrying their process exit code.
#[derive(Clone, Debug)]
pub enum CliError {
    /// Exit code 2.
    Parse(ParseError),
    /// Exit code 3.
    Resource(String),
    /// Exit code 4.
    Incompatible(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Resource(_) => 3,
            CliError::Incompatible(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(e) => e.fmt(f),
            CliError::Resource(msg) => write!(f, "resource limit: {msg}"),
            CliError::Incompatible(msg) => write!(f, "incompatible command: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

fn ring_err(e: FinRingError) -> CliError {
    match e {
        FinRingError::SizeLimit { .. } => CliError::Resource(e.to_string()),
        other => CliError::Incompatible(other.to_string()),
    }
}

fn pres_err(e: PresentedError) -> CliError {
    match e {
        PresentedError::SizeLimit { .. } | PresentedError::ResourceLimit => {
            CliError::Resource(e.to_string())
        }
        PresentedError::Ring(inner) => ring_err(inner),
        other => CliError::Incompatible(other.to_string()),
    }
}

#[derive(Clone, Copy, Debug)]
pub enum CliCommand {
    Envelope(ClassTag),
    Spectrum,
    Nil,
    Decompose,
    Verify(ClassTag),
    Groebner,
}

impl CliCommand {
    fn name(&self) -> String {
        match self {
            CliCommand::Envelope(c) => format!("envelope({c})"),
            CliCommand::Spectrum => "spectrum".into(),
            CliCommand::Nil => "nil".into(),
            CliCommand::Decompose => "decompose".into(),
            CliCommand::Verify(c) => format!("verify({c})"),
            CliCommand::Groebner => "groebner".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub catalog_max_order: usize,
    pub budget: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            catalog_max_order: 9,
            budget: 100_000,
        }
    }
}

fn cli_limits(opts: &RunOptions) -> Limits {
    Limits {
        max_ring_order: 64,
        max_hom_order: 64,
        spair_budget: opts.budget,
        max_vars: 8,
    }
}

fn presentation_of(expr: &RingExpr) -> Option<Result<Presentation, CliError>> {
    match expr {
        RingExpr::Presented { p, vars, relations } => Some(
            Presentation::new(*p, vars.clone(), relations.clone()).map_err(pres_err),
        ),
        RingExpr::FibTrunc { p, m } => Some(fibonacci_truncation(*p, *m).map_err(pres_err)),
        _ => None,
    }
}

/// Evaluates a finite- or presented-backend expression to tables.
fn eval_finite(expr: &RingExpr, limits: &Limits) -> Result<FiniteRing, CliError> {
    match expr {
        RingExpr::ZMod(n) => FiniteRing::zmod(*n as usize, limits).map_err(ring_err),
        RingExpr::GF(q) => field_of_order(*q as usize, limits)
            .ok_or_else(|| CliError::Incompatible(format!("{q} is not a prime power"))),
        RingExpr::Presented { .. } | RingExpr::FibTrunc { .. } => {
            let pres = presentation_of(expr).expect("presented expression")?;
            Ok(to_finite_ring(&pres, limits).map_err(pres_err)?.ring)
        }
        RingExpr::Product(terms) => {
            let factors: Vec<FiniteRing> = terms
                .iter()
                .map(|t| eval_finite(t, limits))
                .collect::<Result<_, _>>()?;
            Ok(FiniteRing::product(&factors, limits).map_err(ring_err)?.ring)
        }
        RingExpr::TrivExt { .. } | RingExpr::SymBase(_) => Err(CliError::Incompatible(
            "symbolic rings have no finite table form".into(),
        )),
    }
}

fn base_ring_of(base: &BaseExpr) -> BaseRing {
    match base {
        BaseExpr::Zp(p) => BaseRing::ZLocalized(*p),
        BaseExpr::Z => BaseRing::Integers,
        BaseExpr::Q => BaseRing::Rationals,
    }
}

/// Evaluates a symbolic expression; a bare base is the trivial extension
/// by the zero module.
fn eval_symbolic(expr: &RingExpr) -> Result<SymTrivExt, CliError> {
    match expr {
        RingExpr::SymBase(base) => SymTrivExt::new(base_ring_of(base), ModuleDescriptor::empty())
            .map_err(|e| CliError::Incompatible(e.to_string())),
        RingExpr::TrivExt { base, summands } => {
            let mut expanded: Vec<Summand> = Vec::new();
            for s in summands {
                match s {
                    SummandExpr::Free(k) => {
                        expanded.extend(std::iter::repeat_n(Summand::Free, *k as usize))
                    }
                    SummandExpr::Cyc(p, k) => expanded.push(Summand::Cyclic(*p, *k)),
                    SummandExpr::Pruefer(p) => expanded.push(Summand::Pruefer(*p)),
                    SummandExpr::Q => expanded.push(Summand::FullQ),
                }
            }
            SymTrivExt::new(base_ring_of(base), ModuleDescriptor::new(expanded))
                .map_err(|e| CliError::Incompatible(e.to_string()))
        }
        RingExpr::Product(_) => Err(CliError::Incompatible(
            "products of symbolic rings are not supported".into(),
        )),
        _ => Err(CliError::Incompatible("not a symbolic expression".into())),
    }
}

/// Evaluates one command against one expression.
pub fn run(expr: &RingExpr, command: CliCommand, opts: &RunOptions) -> Result<Report, CliError> {
    let start = Instant::now();
    let limits = cli_limits(opts);
    let backend = expr.backend();
    let input = expr.to_string();

    let (status, body) = match (command, backend) {
        (CliCommand::Envelope(class), Backend::Finite | Backend::Presented) => {
            let ring = eval_finite(expr, &limits)?;
            let verdict = match class {
                ClassTag::Field => field_envelope(&ring),
                ClassTag::Semisimple => semisimple_envelope(&ring),
                ClassTag::Domain => domain_envelope(&ring),
                ClassTag::Noetherian => noetherian_envelope_finite(&ring),
            }
            .map_err(ring_err)?;
            (
                verdict.status.to_string(),
                ReportBody::Envelope {
                    class: crate::json::class_name(class),
                    verdict,
                },
            )
        }
        (CliCommand::Envelope(class), Backend::Symbolic) => {
            let ring = eval_symbolic(expr)?;
            let verdict = match class {
                ClassTag::Noetherian => noetherian_envelope_decision(&ring),
                ClassTag::Semisimple if ring.module.is_empty() => {
                    semisimple_envelope_sym(&ring.base)
                        .map_err(|e| CliError::Incompatible(e.to_string()))?
                }
                other => {
                    return Err(CliError::Incompatible(format!(
                        "the symbolic backend decides noetherian envelopes (and semisimple for Zp(p)); not {other}"
                    )))
                }
            };
            (
                verdict.status.to_string(),
                ReportBody::Envelope {
                    class: crate::json::class_name(class),
                    verdict,
                },
            )
        }
        (CliCommand::Spectrum, Backend::Finite | Backend::Presented) => {
            let ring = eval_finite(expr, &limits)?;
            let primes = spectrum(&ring).map_err(ring_err)?;
            let infos: Vec<PrimeInfo> = primes
                .iter()
                .map(|p| PrimeInfo {
                    generators: p.ideal.generators().unwrap_or_default().to_vec(),
                    members: p.ideal.members().to_vec(),
                })
                .collect();
            ("ok".into(), ReportBody::SpectrumFinite { primes: infos })
        }
        (CliCommand::Spectrum, Backend::Symbolic) => {
            let ring = eval_symbolic(expr)?;
            let spec = sym_spectrum(&ring);
            (
                "ok".into(),
                ReportBody::SpectrumSymbolic {
                    primes: spec.primes.iter().map(|p| p.label()).collect(),
                    complete: spec.complete,
                },
            )
        }
        (CliCommand::Nil, Backend::Finite) => {
            let ring = eval_finite(expr, &limits)?;
            nil_finite_body(&ring)
        }
        (CliCommand::Nil, Backend::Presented) => {
            let pres = presentation_of(expr).expect("presented expression")?;
            nil_presented_body(&pres, &limits)?
        }
        (CliCommand::Nil, Backend::Symbolic) => {
            let ring = eval_symbolic(expr)?;
            (
                "ok".into(),
                ReportBody::NilSymbolic {
                    descriptor: format!("0⋉({})", ring.module.label()),
                },
            )
        }
        (CliCommand::Decompose, Backend::Finite | Backend::Presented) => {
            let ring = eval_finite(expr, &limits)?;
            let decomp = local_decomposition(&ring).map_err(ring_err)?;
            let mut factors = Vec::new();
            for (factor, e) in &decomp.factors {
                let maximal = match is_local(factor).map_err(ring_err)? {
                    Locality::Local { maximal } => maximal.ideal,
                    Locality::NotLocal { .. } => unreachable!("factors are local"),
                };
                let (_, n) = infinite_radical(factor, &maximal).map_err(ring_err)?;
                factors.push(FactorInfo {
                    label: factor.label().into(),
                    order: factor.order(),
                    idempotent: *e,
                    stabilization_index: n,
                });
            }
            (
                "ok".into(),
                ReportBody::Decompose {
                    factors,
                    iso_bijective: decomp.iso.is_bijective(),
                },
            )
        }
        (CliCommand::Decompose, Backend::Symbolic) => {
            return Err(CliError::Incompatible(
                "decompose needs a finite table representation".into(),
            ))
        }
        (CliCommand::Verify(class), Backend::Finite | Backend::Presented) => {
            let ring = eval_finite(expr, &limits)?;
            verify_body(&ring, class, opts, &limits)?
        }
        (CliCommand::Verify(_), Backend::Symbolic) => {
            return Err(CliError::Incompatible(
                "verify replays the homomorphism oracle, which needs finite tables".into(),
            ))
        }
        (CliCommand::Groebner, Backend::Presented) => {
            let pres = presentation_of(expr).expect("presented expression")?;
            let gb = buchberger(&pres, TermOrder::DegRevLex, &limits).map_err(pres_err)?;
            let unit = gb.is_unit_ideal();
            let (zd, dim) = if unit {
                (None, None)
            } else {
                let report = is_zero_dimensional(&gb).map_err(pres_err)?;
                (
                    Some(report.zero_dimensional),
                    report.zero_dimensional.then(|| report.dimension()),
                )
            };
            (
                "ok".into(),
                ReportBody::Groebner {
                    order: gb.order.to_string(),
                    basis: gb
                        .basis
                        .iter()
                        .map(|g| g.to_text(&gb.vars, gb.order))
                        .collect(),
                    unit_ideal: unit,
                    zero_dimensional: zd,
                    dimension: dim,
                },
            )
        }
        (CliCommand::Groebner, Backend::Finite | Backend::Symbolic) => {
            return Err(CliError::Incompatible(
                "groebner applies to presented quotient rings only".into(),
            ))
        }
    };

    Ok(Report {
        input,
        backend: backend.name(),
        command: command.name(),
        status,
        body,
        total_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

fn nil_finite_body(ring: &FiniteRing) -> (String, ReportBody) {
    let nil = nilradical(ring);
    let is_prime = nil.is_proper(ring)
        && ring.elements().all(|a| {
            nil.contains(a)
                || ring
                    .elements()
                    .all(|b| nil.contains(b) || !nil.contains(ring.mul(a, b)))
        });
    (
        "ok".into(),
        ReportBody::NilFinite {
            members: nil.members().to_vec(),
            is_prime,
        },
    )
}

fn nil_presented_body(
    pres: &Presentation,
    limits: &Limits,
) -> Result<(String, ReportBody), CliError> {
    let gb = buchberger(pres, TermOrder::DegRevLex, limits).map_err(pres_err)?;
    if gb.is_unit_ideal() {
        return Err(CliError::Incompatible(
            "the relations generate the unit ideal; the quotient is the zero ring".into(),
        ));
    }
    let report = is_zero_dimensional(&gb).map_err(pres_err)?;
    let bound = report.dimension() as u32 + 1;
    let nvars = pres.vars.len();
    let mut nilpotent_variables = Vec::new();
    for (i, name) in pres.vars.iter().enumerate() {
        let x = Polynomial::var(pres.p, nvars, i);
        let mut pow = x.clone();
        let mut nilpotent = false;
        for _ in 0..bound.max(2) {
            if normal_form(&pow, &gb).is_zero() {
                nilpotent = true;
                break;
            }
            pow = pow.mul(&x);
        }
        nilpotent_variables.push((name.clone(), nilpotent));
    }
    let local = report.zero_dimensional && nilpotent_variables.iter().all(|(_, n)| *n);
    let x1 = Polynomial::var(pres.p, nvars, 0);
    let x1_nf = normal_form(&x1, &gb);
    Ok((
        "ok".into(),
        ReportBody::NilPresented {
            zero_dimensional: report.zero_dimensional,
            dimension: report.dimension(),
            nilpotent_variables,
            local,
            x1_normal_form: x1_nf.to_text(&pres.vars, TermOrder::DegRevLex),
            x1_nonzero: !x1_nf.is_zero(),
        },
    ))
}

fn verify_body(
    ring: &FiniteRing,
    class: ClassTag,
    opts: &RunOptions,
    limits: &Limits,
) -> Result<(String, ReportBody), CliError> {
    let theorem = match class {
        ClassTag::Field => field_envelope(ring),
        ClassTag::Semisimple => semisimple_envelope(ring),
        ClassTag::Domain => domain_envelope(ring),
        ClassTag::Noetherian => noetherian_envelope_finite(ring),
    }
    .map_err(ring_err)?;

    let cat = Catalog::build(class, opts.catalog_max_order, limits);
    let max_residue = spectrum(ring)
        .map_err(ring_err)?
        .iter()
        .map(|p| ring.order() / p.ideal.len())
        .max()
        .unwrap_or(1);
    let adequacy_note = (max_residue > opts.catalog_max_order).then(|| {
        format!(
            "a residue field of order {max_residue} exceeds the catalog bound {}; the oracle answer is relative to the truncated catalog",
            opts.catalog_max_order
        )
    });

    let (agree, oracle, oracle_summary) = match theorem.status {
        VerdictStatus::Exists => {
            let f = theorem
                .map
                .as_ref()
                .and_then(EnvelopeMap::as_finite)
                .expect("finite verdict");
            let oracle = is_envelope(f, &cat, limits).map_err(ring_err)?;
            let agree = oracle.status == VerdictStatus::Exists;
            let summary = format!("is_envelope on the constructed map: {}", oracle.status);
            (agree, Some(oracle), summary)
        }
        VerdictStatus::NotExists => {
            let mut found: Option<String> = None;
            'outer: for s in &cat.rings {
                for g in enumerate_homs(ring, s, limits).map_err(ring_err)?.iter() {
                    let pre = is_preenvelope(g, &cat, limits).map_err(ring_err)?;
                    if pre.holds && is_minimal(g, limits).map_err(ring_err)?.minimal {
                        found = Some(format!(
                            "a catalog-relative envelope into {} exists",
                            s.label()
                        ));
                        break 'outer;
                    }
                }
            }
            let agree = found.is_none();
            let summary = found.unwrap_or_else(|| {
                "no map into a catalog member is a catalog-relative envelope".into()
            });
            (agree, None, summary)
        }
        VerdictStatus::Unknown => (false, None, "theorem verdict is Unknown".into()),
    };

    let status = if agree { "agree" } else { "discrepancy" };
    Ok((
        status.into(),
        ReportBody::Verify {
            class: crate::json::class_name(class),
            theorem,
            oracle,
            oracle_summary,
            agree,
            catalog_max_order: opts.catalog_max_order,
            adequacy_note,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    fn run_ok(input: &str, command: CliCommand) -> Report {
        run(&parse(input).unwrap(), command, &RunOptions::default()).unwrap()
    }

    #[test]
    fn envelope_semisimple_z12() {
        let report = run_ok("Z/12", CliCommand::Envelope(ClassTag::Semisimple));
        assert_eq!(report.status, "Exists");
        assert_eq!(report.backend, "finite");
    }

    #[test]
    fn envelope_noetherian_zp_q_cites_the_database() {
        let report = run_ok("triv(Zp(5); Q)", CliCommand::Envelope(ClassTag::Noetherian));
        assert_eq!(report.status, "NotExists");
        let json = report.to_json();
        let witness = &json["result"]["verdict"]["witness"];
        assert_eq!(witness["kind"], "rule");
        assert_eq!(witness["rule"], "db.zp-triv-q.no-noetherian-envelope");
    }

    #[test]
    fn nil_on_fibonacci_truncation() {
        let report = run_ok("fib(2,5)", CliCommand::Nil);
        match &report.body {
            ReportBody::NilPresented { local, x1_nonzero, .. } => {
                assert!(local);
                assert!(x1_nonzero);
            }
            other => panic!("unexpected body {other:?}"),
        }
    }

    #[test]
    fn groebner_rejected_on_symbolic() {
        let err = run(
            &parse("triv(Zp(3); Q)").unwrap(),
            CliCommand::Groebner,
            &RunOptions::default(),
        )
        .unwrap_err();
        assert_eq!(err.exit_code(), 4);
    }

    #[test]
    fn conversion_overflow_is_a_resource_error() {
        let err = run(
            &parse("fib(2,5)").unwrap(),
            CliCommand::Envelope(ClassTag::Field),
            &RunOptions::default(),
        )
        .unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn verify_agrees_on_z12() {
        let report = run_ok("Z/12", CliCommand::Verify(ClassTag::Semisimple));
        assert_eq!(report.status, "agree");
        let report = run_ok("Z/12", CliCommand::Verify(ClassTag::Domain));
        assert_eq!(report.status, "agree");
    }

    #[test]
    fn verify_notes_catalog_inadequacy() {
        let report = run_ok("Z/22", CliCommand::Verify(ClassTag::Field));
        match &report.body {
            ReportBody::Verify { adequacy_note, .. } => assert!(adequacy_note.is_some()),
            other => panic!("unexpected body {other:?}"),
        }
    }
}
