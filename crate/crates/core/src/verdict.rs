//! Envelope verdicts and the evidence they carry.
//!
//! A verdict is never a bare boolean: `Exists` comes with the constructed
//! map, `NotExists` with a structured counterexample, and `Unknown` with
//! the reason the question is out of reach. Certificates replay the data
//! the deciders computed (witness pairs, stabilization indices, rule
//! citations), so tests and reports can re-check them independently.

use alloc::string::String;
use alloc::vec::Vec;

use crate::finring::{Ideal, RingHom};
use crate::symring::{SymPrimeKind, Summand};

/// Three-valued envelope status.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VerdictStatus {
    Exists,
    NotExists,
    Unknown,
}

impl core::fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            VerdictStatus::Exists => "Exists",
            VerdictStatus::NotExists => "NotExists",
            VerdictStatus::Unknown => "Unknown",
        })
    }
}

/// The envelope map of an `Exists` verdict.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EnvelopeMap {
    /// A fully tabulated map between finite rings.
    Finite(RingHom),
    /// A symbolic map descriptor.
    Symbolic(SymMap),
}

impl EnvelopeMap {
    pub fn as_finite(&self) -> Option<&RingHom> {
        match self {
            EnvelopeMap::Finite(h) => Some(h),
            EnvelopeMap::Symbolic(_) => None,
        }
    }

    pub fn domain_label(&self) -> String {
        match self {
            EnvelopeMap::Finite(h) => h.domain().label().into(),
            EnvelopeMap::Symbolic(m) => m.domain.clone(),
        }
    }

    pub fn codomain_label(&self) -> String {
        match self {
            EnvelopeMap::Finite(h) => h.codomain().label().into(),
            EnvelopeMap::Symbolic(m) => m.codomain.clone(),
        }
    }
}

/// Descriptor of a symbolic ring map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymMap {
    pub domain: String,
    pub codomain: String,
    pub kind: SymMapKind,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SymMapKind {
    Identity,
    /// Projection killing the listed module summands.
    Projection { kernel: Vec<Summand> },
    /// Canonical map into a product, one component per listed target.
    Diagonal { components: Vec<String> },
}

/// Structured counterexample attached to a `NotExists` verdict.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Witness {
    /// Two distinct maximal ideals (failure of locality).
    TwoMaximalIdeals(Ideal, Ideal),
    /// Elements outside the nilradical whose product is nilpotent
    /// (failure of the nilradical being prime).
    NonPrimeNilpotentProduct { a: usize, b: usize },
    /// A morphism into a catalog member that does not factor through the
    /// candidate map.
    Unfactorable { codomain_label: String, map: RingHom },
    /// A non-bijective endomorphism commuting with the candidate map.
    NonMinimalEndomorphism(RingHom),
    /// Failure propagated from a product factor.
    FactorFailed { index: usize, witness: alloc::boxed::Box<Witness> },
    /// A rule from the theorem database.
    Rule(RuleCitation),
}

/// Evidence from the endomorphism sweep of a minimality check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MinimalityEvidence {
    pub minimal: bool,
    /// Total unital endomorphisms of the codomain.
    pub endomorphism_count: usize,
    /// Endomorphisms commuting with the map.
    pub commuting_count: usize,
}

/// A citation of a named rule. Rules are identified by stable ids and a
/// one-line mathematical statement.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RuleCitation {
    pub rule: &'static str,
    pub statement: String,
}

impl core::fmt::Display for RuleCitation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "[{}] {}", self.rule, self.statement)
    }
}

/// Per-factor stabilization data for the Noetherian decider.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactorStabilization {
    pub label: String,
    pub order: usize,
    /// Least `n` with `m^n = m^(n+1)`.
    pub stabilization_index: usize,
    /// Whether the stable power is the zero ideal (always true on finite
    /// rings).
    pub stable_is_zero: bool,
}

/// Machine-checkable evidence attached to a verdict.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Certificate {
    /// Field envelope: the unique maximal ideal the projection kills.
    Field { maximal_ideal: Ideal },
    /// Semisimple envelope: the primes indexing the residue-field product.
    Semisimple { primes: Vec<Ideal>, factor_orders: Vec<usize> },
    /// Domain envelope: the nilradical the projection kills.
    Domain { nilradical: Ideal },
    /// Noetherian decider on a finite ring: stabilization per local factor.
    NoetherianFinite { factors: Vec<FactorStabilization> },
    /// Symbolic epimorphic search: the kernel summands, the rules used at
    /// each prime, and the candidates that failed before one passed.
    SymNoetherian {
        kernel: Vec<Summand>,
        rules: Vec<RuleCitation>,
        failed_candidates: Vec<CandidateFailure>,
    },
}

/// Record of a rejected kernel candidate in the symbolic search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CandidateFailure {
    pub kernel: Vec<Summand>,
    pub reason: CandidateFailureReason,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CandidateFailureReason {
    /// Removing this kernel leaves an infinitely generated module.
    QuotientNotNoetherian,
    /// The localization criterion fails at the given prime.
    CriterionFails { prime: SymPrimeKind, rule: RuleCitation },
}

/// Reference to the catalog a verdict was checked against.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CatalogRef {
    pub class: crate::envelopes::ClassTag,
    pub max_order: usize,
}

/// Outcome of an envelope question, with enough evidence to replay it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EnvelopeVerdict {
    pub status: VerdictStatus,
    pub map: Option<EnvelopeMap>,
    pub witness: Option<Witness>,
    pub reason: Option<String>,
    pub minimal: Option<MinimalityEvidence>,
    pub certificate: Option<Certificate>,
    pub note: Option<String>,
    /// Present on verdicts produced relative to a finite catalog.
    pub catalog: Option<CatalogRef>,
}

impl EnvelopeVerdict {
    pub fn exists(map: EnvelopeMap) -> EnvelopeVerdict {
        EnvelopeVerdict {
            status: VerdictStatus::Exists,
            map: Some(map),
            witness: None,
            reason: None,
            minimal: None,
            certificate: None,
            note: None,
            catalog: None,
        }
    }

    pub fn not_exists(witness: Witness) -> EnvelopeVerdict {
        EnvelopeVerdict {
            status: VerdictStatus::NotExists,
            map: None,
            witness: Some(witness),
            reason: None,
            minimal: None,
            certificate: None,
            note: None,
            catalog: None,
        }
    }

    pub fn unknown(reason: impl Into<String>) -> EnvelopeVerdict {
        EnvelopeVerdict {
            status: VerdictStatus::Unknown,
            map: None,
            witness: None,
            reason: Some(reason.into()),
            minimal: None,
            certificate: None,
            note: None,
            catalog: None,
        }
    }

    pub fn with_certificate(mut self, certificate: Certificate) -> EnvelopeVerdict {
        self.certificate = Some(certificate);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> EnvelopeVerdict {
        self.note = Some(note.into());
        self
    }

    pub fn with_minimality(mut self, evidence: MinimalityEvidence) -> EnvelopeVerdict {
        self.minimal = Some(evidence);
        self
    }

    pub fn with_catalog(mut self, catalog: CatalogRef) -> EnvelopeVerdict {
        self.catalog = Some(catalog);
        self
    }

    /// Structural invariant: each status carries its mandatory payload.
    pub fn is_well_formed(&self) -> bool {
        match self.status {
            VerdictStatus::Exists => self.map.is_some(),
            VerdictStatus::NotExists => self.witness.is_some(),
            VerdictStatus::Unknown => self.reason.is_some(),
        }
    }
}
