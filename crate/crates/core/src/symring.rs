//! Symbolic trivial extensions `A ⋉ N`.
//!
//! The base ring `A` is one of `Z_(p)` (integers localized at a prime),
//! `Z`, or `Q`, and the module `N` is a finite direct sum of summands
//! drawn from: a free copy of `A`, a finite cyclic `A/p^k`, the Prüfer
//! group `p^∞` (torsion and divisible), and a full copy of `Q`. The
//! multiplication is `(a,m)(b,n) = (ab, an+bm)`, so `0 ⋉ N` is a
//! square-zero ideal and equals the nilradical; every prime ideal has the
//! form `p̂ = p ⋉ N` over a prime `p` of the base (including `p = 0`).
//!
//! Localization of the supported summands is a closed rule table; each
//! rule is cited by id in the verdicts that use it. The Noetherian
//! envelope decision combines an exhaustive search over summand-aligned
//! nil kernels (for the epimorphic case) with a small theorem database
//! for the known negative result, and reports `Unknown` otherwise.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::verdict::{
    CandidateFailure, CandidateFailureReason, Certificate, EnvelopeMap, EnvelopeVerdict,
    RuleCitation, SymMap, SymMapKind, Witness,
};

/// Errors raised by the symbolic backend.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymError {
    /// The base ring does not support the requested operation.
    UnsupportedBase,
    /// The nil ideal is not a sub-multiset of the module summands.
    UnsupportedSubmodule,
    /// A summand's prime is a unit in the base ring.
    IncompatibleSummand(String),
}

impl core::fmt::Display for SymError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SymError::UnsupportedBase => write!(f, "unsupported base ring"),
            SymError::UnsupportedSubmodule => {
                write!(f, "nil ideal is not aligned with the module summands")
            }
            SymError::IncompatibleSummand(msg) => write!(f, "incompatible summand: {msg}"),
        }
    }
}

impl core::error::Error for SymError {}

/// The supported base rings.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum BaseRing {
    /// `Z_(p)`: integers localized at the prime `p`.
    ZLocalized(u64),
    Integers,
    Rationals,
}

impl BaseRing {
    pub fn label(&self) -> String {
        match self {
            BaseRing::ZLocalized(p) => format!("Zp({p})"),
            BaseRing::Integers => "Z".into(),
            BaseRing::Rationals => "Q".into(),
        }
    }

    /// Nonzero primes of the base: `p` for `Z_(p)`, all primes for `Z`
    /// (infinitely many), none for `Q`.
    fn has_prime(&self, q: u64) -> bool {
        match self {
            BaseRing::ZLocalized(p) => *p == q,
            BaseRing::Integers => is_prime(q),
            BaseRing::Rationals => false,
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A module summand.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Summand {
    /// A free copy of the base ring.
    Free,
    /// `A/p^k`.
    Cyclic(u64, u32),
    /// The Prüfer group `p^∞`: torsion and divisible.
    Pruefer(u64),
    /// A full copy of `Q`.
    FullQ,
}

impl Summand {
    pub fn label(&self) -> String {
        match self {
            Summand::Free => "free(1)".into(),
            Summand::Cyclic(p, k) => format!("cyc({p}^{k})"),
            Summand::Pruefer(p) => format!("pruefer({p})"),
            Summand::FullQ => "Q".into(),
        }
    }

    /// Finitely generated over any supported base.
    fn finitely_generated(&self) -> bool {
        matches!(self, Summand::Free | Summand::Cyclic(..))
    }
}

/// A finite multiset of summands, kept sorted.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ModuleDescriptor {
    summands: Vec<Summand>,
}

impl ModuleDescriptor {
    pub fn new(mut summands: Vec<Summand>) -> ModuleDescriptor {
        summands.sort();
        ModuleDescriptor { summands }
    }

    pub fn empty() -> ModuleDescriptor {
        ModuleDescriptor::default()
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Multiset inclusion.
    pub fn is_sub_multiset_of(&self, other: &ModuleDescriptor) -> bool {
        let mut pool = other.summands.clone();
        for s in &self.summands {
            match pool.iter().position(|t| t == s) {
                Some(i) => {
                    pool.remove(i);
                }
                None => return false,
            }
        }
        true
    }

    /// Multiset difference `self \ other` (callers ensure inclusion).
    pub fn difference(&self, other: &ModuleDescriptor) -> ModuleDescriptor {
        let mut pool = self.summands.clone();
        for s in &other.summands {
            if let Some(i) = pool.iter().position(|t| t == s) {
                pool.remove(i);
            }
        }
        ModuleDescriptor::new(pool)
    }

    pub fn label(&self) -> String {
        if self.summands.is_empty() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        let frees = self.summands.iter().filter(|s| **s == Summand::Free).count();
        if frees > 0 {
            parts.push(format!("free({frees})"));
        }
        for s in &self.summands {
            if *s != Summand::Free {
                parts.push(s.label());
            }
        }
        parts.join(" + ")
    }
}

/// The symbolic trivial extension `A ⋉ N`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymTrivExt {
    pub base: BaseRing,
    pub module: ModuleDescriptor,
    label: String,
}

impl SymTrivExt {
    /// Validates that torsion summands live at non-units of the base:
    /// `Z_(p)` admits only `p`-torsion, `Q` admits no torsion at all.
    pub fn new(base: BaseRing, module: ModuleDescriptor) -> Result<SymTrivExt, SymError> {
        for s in module.summands() {
            match s {
                Summand::Cyclic(q, _) | Summand::Pruefer(q) => {
                    if !is_prime(*q) {
                        return Err(SymError::IncompatibleSummand(format!("{q} is not prime")));
                    }
                    if !base.has_prime(*q) {
                        return Err(SymError::IncompatibleSummand(format!(
                            "{q} is a unit in {}",
                            base.label()
                        )));
                    }
                }
                Summand::Free | Summand::FullQ => {}
            }
        }
        let label = if module.is_empty() {
            base.label()
        } else {
            format!("triv({}; {})", base.label(), module.label())
        };
        Ok(SymTrivExt {
            base,
            module,
            label,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// The ring is Noetherian exactly when the module is finitely
    /// generated (every summand free or cyclic): an infinitely generated
    /// summand gives a strictly increasing chain of ideals `0 ⋉ M'`.
    pub fn is_noetherian(&self) -> bool {
        self.module.summands().iter().all(|s| s.finitely_generated())
    }
}

/// How a prime of the extension sits over the base: `p̂ = p ⋉ N`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum SymPrimeKind {
    /// The generic prime `0 ⋉ N` (equal to the nilradical).
    Zero,
    /// `(q) ⋉ N` over the base prime `q`.
    AtPrime(u64),
}

/// A prime ideal of the extension.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SymPrime {
    pub kind: SymPrimeKind,
}

impl SymPrime {
    pub fn label(&self) -> String {
        match self.kind {
            SymPrimeKind::Zero => "0⋉N".into(),
            SymPrimeKind::AtPrime(q) => format!("({q})⋉N"),
        }
    }
}

/// Spectrum of a symbolic extension. For base `Z` the prime list is
/// truncated and `complete` is false.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymSpectrum {
    pub primes: Vec<SymPrime>,
    pub complete: bool,
}

/// Bound for the truncated prime list over `Z`.
const Z_PRIME_TRUNCATION: u64 = 30;

/// Prime descriptors of `A ⋉ N`. Every prime contains the square-zero
/// nilradical `0 ⋉ N`, so primes correspond to primes of the base.
pub fn sym_spectrum(ring: &SymTrivExt) -> SymSpectrum {
    match ring.base {
        BaseRing::ZLocalized(p) => SymSpectrum {
            primes: alloc::vec![
                SymPrime { kind: SymPrimeKind::Zero },
                SymPrime { kind: SymPrimeKind::AtPrime(p) },
            ],
            complete: true,
        },
        BaseRing::Rationals => SymSpectrum {
            primes: alloc::vec![SymPrime { kind: SymPrimeKind::Zero }],
            complete: true,
        },
        BaseRing::Integers => {
            let mut primes = alloc::vec![SymPrime { kind: SymPrimeKind::Zero }];
            let mut listed: Vec<u64> = (2..=Z_PRIME_TRUNCATION).filter(|&q| is_prime(q)).collect();
            for s in ring.module.summands() {
                if let Summand::Cyclic(q, _) | Summand::Pruefer(q) = s {
                    if !listed.contains(q) {
                        listed.push(*q);
                    }
                }
            }
            listed.sort_unstable();
            primes.extend(listed.into_iter().map(|q| SymPrime { kind: SymPrimeKind::AtPrime(q) }));
            SymSpectrum {
                primes,
                complete: false,
            }
        }
    }
}

/// A localized summand in normal form. `scaled_by` records a
/// multiplication by the prime that changed the module (divisible
/// summands absorb the scaling and stay unscaled).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LocalizedAtom {
    pub summand: Summand,
    pub at: SymPrimeKind,
    pub scaled_by: Option<u64>,
}

/// A localized module: the multiset of surviving atoms (empty = zero).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LocalizedModule {
    pub atoms: Vec<LocalizedAtom>,
}

impl LocalizedModule {
    pub fn is_zero(&self) -> bool {
        self.atoms.is_empty()
    }
}

fn cite(rule: &'static str, statement: &str) -> RuleCitation {
    RuleCitation {
        rule,
        statement: statement.into(),
    }
}

/// Localizes one summand at a prime. Returns the surviving atom (if any)
/// and the rule that justifies the outcome.
fn localize_summand(s: Summand, at: SymPrimeKind) -> (Option<LocalizedAtom>, RuleCitation) {
    let keep = |sc: Option<u64>| {
        Some(LocalizedAtom {
            summand: s,
            at,
            scaled_by: sc,
        })
    };
    match (s, at) {
        (Summand::Free, SymPrimeKind::Zero) => (
            keep(None),
            cite("loc.free.at-zero", "a free summand localizes at the generic prime to the fraction field, which is nonzero"),
        ),
        (Summand::Free, SymPrimeKind::AtPrime(_)) => (
            keep(None),
            cite("loc.free.at-p", "a free summand localizes at a maximal prime to the local base, which is nonzero"),
        ),
        (Summand::Cyclic(..), SymPrimeKind::Zero) => (
            None,
            cite("loc.torsion.at-zero", "a torsion module localizes to zero at the generic prime"),
        ),
        (Summand::Cyclic(p, _), SymPrimeKind::AtPrime(q)) if p == q => (
            keep(None),
            cite("loc.cyclic.at-own-prime", "a finite cyclic p-torsion summand survives localization at p"),
        ),
        (Summand::Cyclic(..), SymPrimeKind::AtPrime(_)) => (
            None,
            cite("loc.torsion.away", "p-torsion localizes to zero away from p, where p is invertible"),
        ),
        (Summand::Pruefer(_), SymPrimeKind::Zero) => (
            None,
            cite("loc.torsion.at-zero", "a torsion module localizes to zero at the generic prime"),
        ),
        (Summand::Pruefer(p), SymPrimeKind::AtPrime(q)) if p == q => (
            keep(None),
            cite("loc.pruefer.at-own-prime", "the Pruefer group survives localization at its own prime"),
        ),
        (Summand::Pruefer(..), SymPrimeKind::AtPrime(_)) => (
            None,
            cite("loc.torsion.away", "p-torsion localizes to zero away from p, where p is invertible"),
        ),
        (Summand::FullQ, SymPrimeKind::Zero) => (
            keep(None),
            cite("loc.fullq.at-zero", "Q is torsion free, so it survives localization at the generic prime"),
        ),
        (Summand::FullQ, SymPrimeKind::AtPrime(_)) => (
            keep(None),
            cite("loc.fullq.at-p", "Q is divisible, so it survives localization at every maximal prime"),
        ),
    }
}

/// Multiplies a localized atom by the prime it lives at. Divisible
/// summands absorb the scaling; the generic prime annihilates everything
/// (the ideal `0 ⋉ N` squares to zero).
fn scale_atom(atom: LocalizedAtom) -> (Option<LocalizedAtom>, RuleCitation) {
    match atom.at {
        SymPrimeKind::Zero => (
            None,
            cite("scale.at-zero-prime", "the generic prime of a trivial extension is square zero, so it annihilates any nil localization"),
        ),
        SymPrimeKind::AtPrime(q) => match atom.summand {
            Summand::Pruefer(p) if p == q => (
                Some(atom),
                cite("scale.divisible", "a divisible module satisfies p·D = D"),
            ),
            Summand::FullQ => (
                Some(atom),
                cite("scale.divisible", "a divisible module satisfies p·D = D"),
            ),
            Summand::Cyclic(p, 1) if p == q => (
                None,
                cite("scale.cyclic.collapses", "p·(A/p) = 0"),
            ),
            Summand::Cyclic(p, _) if p == q => (
                Some(LocalizedAtom { scaled_by: Some(q), ..atom }),
                cite("scale.cyclic.proper", "p·(A/p^k) is a proper nonzero submodule for k > 1"),
            ),
            Summand::Free => (
                Some(LocalizedAtom { scaled_by: Some(q), ..atom }),
                cite("scale.free.proper", "p·A_p is a proper nonzero ideal of the local base"),
            ),
            // torsion away from q has already localized to zero
            _ => (
                Some(atom),
                cite("scale.vacuous", "scaling a zero module is vacuous"),
            ),
        },
    }
}

/// Data of the localization of a nil ideal `I = 0 ⋉ M` at a prime: the
/// localized ideal `I_p̂`, the scaled ideal `p̂·I_p̂`, and the rules used.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LocalizationData {
    pub localized: LocalizedModule,
    pub scaled: LocalizedModule,
    pub rules: Vec<RuleCitation>,
}

impl LocalizationData {
    /// Whether `p̂·I_p̂ = I_p̂` as descriptors.
    pub fn scaling_is_identity(&self) -> bool {
        self.localized == self.scaled
    }
}

/// Computes `I_p̂` and `p̂·I_p̂` for a summand-aligned nil ideal
/// `I = 0 ⋉ M`, by the rule table.
pub fn localization_data(
    ring: &SymTrivExt,
    prime: &SymPrime,
    nil_part: &ModuleDescriptor,
) -> Result<LocalizationData, SymError> {
    if !nil_part.is_sub_multiset_of(&ring.module) {
        return Err(SymError::UnsupportedSubmodule);
    }
    let mut rules: Vec<RuleCitation> = Vec::new();
    let mut push_rule = |r: RuleCitation| {
        if !rules.contains(&r) {
            rules.push(r);
        }
    };
    let mut localized = LocalizedModule::default();
    let mut scaled = LocalizedModule::default();
    for &s in nil_part.summands() {
        let (atom, rule) = localize_summand(s, prime.kind);
        push_rule(rule);
        if let Some(atom) = atom {
            localized.atoms.push(atom);
            let (scaled_atom, rule) = scale_atom(atom);
            push_rule(rule);
            if let Some(a) = scaled_atom {
                scaled.atoms.push(a);
            }
        }
    }
    Ok(LocalizationData {
        localized,
        scaled,
        rules,
    })
}

/// Whether the criterion `p̂·I_p̂ = I_p̂` holds at every prime of the
/// base, including the infinitely many primes of `Z` (decided summand by
/// summand). On failure returns the offending prime and rule.
fn criterion_at_all_primes(
    ring: &SymTrivExt,
    nil_part: &ModuleDescriptor,
) -> Result<Vec<RuleCitation>, (SymPrimeKind, RuleCitation)> {
    let mut rules: Vec<RuleCitation> = Vec::new();
    let push_rule = |rules: &mut Vec<RuleCitation>, r: RuleCitation| {
        if !rules.contains(&r) {
            rules.push(r);
        }
    };

    // at the generic prime the scaled ideal is zero, so the localization
    // itself must vanish: every kernel summand must be torsion
    for &s in nil_part.summands() {
        let (atom, rule) = localize_summand(s, SymPrimeKind::Zero);
        push_rule(&mut rules, rule.clone());
        if atom.is_some() {
            return Err((SymPrimeKind::Zero, rule));
        }
        push_rule(
            &mut rules,
            cite("scale.at-zero-prime", "the generic prime of a trivial extension is square zero, so it annihilates any nil localization"),
        );
    }

    // at a maximal prime q each surviving summand must absorb the scaling
    for &s in nil_part.summands() {
        match s {
            Summand::Free => {
                // survives at every maximal prime and never absorbs scaling;
                // fails as soon as the base has one
                let witness_prime = match ring.base {
                    BaseRing::ZLocalized(p) => Some(p),
                    BaseRing::Integers => Some(2),
                    BaseRing::Rationals => None,
                };
                if let Some(q) = witness_prime {
                    let (_, rule) = localize_summand(s, SymPrimeKind::AtPrime(q));
                    return Err((SymPrimeKind::AtPrime(q), rule));
                }
            }
            Summand::Cyclic(p, _) => {
                // survives at p and scaling is proper there
                let atom = LocalizedAtom { summand: s, at: SymPrimeKind::AtPrime(p), scaled_by: None };
                let (_, rule) = scale_atom(atom);
                return Err((SymPrimeKind::AtPrime(p), rule));
            }
            Summand::Pruefer(p) => {
                let (_, loc_rule) = localize_summand(s, SymPrimeKind::AtPrime(p));
                push_rule(&mut rules, loc_rule);
                let atom = LocalizedAtom { summand: s, at: SymPrimeKind::AtPrime(p), scaled_by: None };
                let (scaled, rule) = scale_atom(atom);
                debug_assert!(scaled.is_some());
                push_rule(&mut rules, rule);
                push_rule(
                    &mut rules,
                    cite("loc.torsion.away", "p-torsion localizes to zero away from p, where p is invertible"),
                );
            }
            Summand::FullQ => unreachable!("FullQ is not torsion, caught at the generic prime"),
        }
    }
    Ok(rules)
}

/// Searches for a nil ideal `I = 0 ⋉ M` over summand subsets `M` such
/// that `R/I` is Noetherian and `p̂·I_p̂ = I_p̂` at every prime; when one
/// passes, the projection `R ↠ A ⋉ (N/M)` is an epimorphic Noetherian
/// envelope. Subsets are tried in increasing bitmask order over the
/// sorted summand list, so the identity (empty kernel) is found first
/// when the ring is already Noetherian.
///
/// When no summand-aligned kernel passes, the verdict is `Unknown`:
/// kernels that are not aligned with the summand decomposition are out of
/// the search space, so nonexistence is not established.
pub fn epimorphic_noetherian_envelope(ring: &SymTrivExt) -> EnvelopeVerdict {
    let summands = ring.module.summands();
    let n = summands.len();
    let mut failures: Vec<CandidateFailure> = Vec::new();
    for mask in 0..(1u32 << n) {
        let kernel = ModuleDescriptor::new(
            (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| summands[i])
                .collect(),
        );
        let remaining = ring.module.difference(&kernel);
        let quotient = SymTrivExt::new(ring.base, remaining).expect("sub-multiset stays valid");
        if !quotient.is_noetherian() {
            failures.push(CandidateFailure {
                kernel: kernel.summands().to_vec(),
                reason: CandidateFailureReason::QuotientNotNoetherian,
            });
            continue;
        }
        match criterion_at_all_primes(ring, &kernel) {
            Ok(rules) => {
                // replay the criterion through the concrete localization
                // table at the listed primes
                for p in sym_spectrum(ring).primes {
                    let data = localization_data(ring, &p, &kernel).expect("kernel is aligned");
                    assert!(data.scaling_is_identity(), "criterion replay failed at {}", p.label());
                }
                let map = SymMap {
                    domain: ring.label().into(),
                    codomain: quotient.label().into(),
                    kind: if kernel.is_empty() {
                        SymMapKind::Identity
                    } else {
                        SymMapKind::Projection {
                            kernel: kernel.summands().to_vec(),
                        }
                    },
                };
                return EnvelopeVerdict::exists(EnvelopeMap::Symbolic(map)).with_certificate(
                    Certificate::SymNoetherian {
                        kernel: kernel.summands().to_vec(),
                        rules,
                        failed_candidates: failures,
                    },
                );
            }
            Err((prime, rule)) => {
                failures.push(CandidateFailure {
                    kernel: kernel.summands().to_vec(),
                    reason: CandidateFailureReason::CriterionFails {
                        prime,
                        rule,
                    },
                });
            }
        }
    }
    EnvelopeVerdict::unknown(
        "no summand-aligned nil kernel yields an epimorphic Noetherian envelope; kernels outside the summand decomposition are not searched",
    )
    .with_certificate(Certificate::SymNoetherian {
        kernel: Vec::new(),
        rules: Vec::new(),
        failed_candidates: failures,
    })
}

fn theorem_db_zp_q() -> RuleCitation {
    cite(
        "db.zp-triv-q.no-noetherian-envelope",
        "the trivial extension of the p-local integers by Q has no Noetherian envelope",
    )
}

fn conjecture_monomorphic() -> RuleCitation {
    cite(
        "db.monomorphic-noetherian-envelope.open",
        "whether any non-Noetherian commutative ring has a monomorphic Noetherian envelope is open; no such ring is known",
    )
}

/// Full three-way Noetherian envelope decision:
///
/// 1. an epimorphic envelope found by the summand search settles `Exists`;
/// 2. the pattern `Z_(p) ⋉ Q` (exactly one full-`Q` summand) matches the
///    theorem database and settles `NotExists`;
/// 3. everything else is `Unknown`, citing the open question. `Unknown`
///    is never upgraded to `NotExists`.
pub fn noetherian_envelope_decision(ring: &SymTrivExt) -> EnvelopeVerdict {
    let epi = epimorphic_noetherian_envelope(ring);
    if epi.status == crate::verdict::VerdictStatus::Exists {
        return epi;
    }
    if matches!(ring.base, BaseRing::ZLocalized(_)) && ring.module.summands() == [Summand::FullQ] {
        let rule = theorem_db_zp_q();
        let mut v = EnvelopeVerdict::not_exists(Witness::Rule(rule.clone()))
            .with_note(rule.statement.clone());
        v.certificate = epi.certificate;
        return v;
    }
    let conj = conjecture_monomorphic();
    let mut v = EnvelopeVerdict::unknown(format!(
        "{}; {}",
        epi.reason.as_deref().unwrap_or("epimorphic search failed"),
        conj.statement
    ))
    .with_note(conj.statement.clone());
    v.certificate = epi.certificate;
    v.witness = None;
    v
}

/// The semisimple envelope of `Z_(p)` itself: the canonical map
/// `Z_(p) -> Q × F_p` into the product of the residue fields at the two
/// primes `0` and `(p)`.
pub fn semisimple_envelope_sym(base: &BaseRing) -> Result<EnvelopeVerdict, SymError> {
    match base {
        BaseRing::ZLocalized(p) => {
            let map = SymMap {
                domain: base.label(),
                codomain: format!("Q x F{p}"),
                kind: SymMapKind::Diagonal {
                    components: alloc::vec!["Q".into(), format!("F{p}")],
                },
            };
            Ok(EnvelopeVerdict::exists(EnvelopeMap::Symbolic(map)).with_note(format!(
                "canonical map of Zp({p}) into the product of its residue fields k(0) = Q and k(({p})) = F{p}"
            )))
        }
        _ => Err(SymError::UnsupportedBase),
    }
}

/// Kernel of the map in a symbolic verdict, as a module descriptor.
/// `None` when the verdict has no symbolic map.
pub fn symbolic_kernel(verdict: &EnvelopeVerdict) -> Option<ModuleDescriptor> {
    match &verdict.map {
        Some(EnvelopeMap::Symbolic(m)) => match &m.kind {
            SymMapKind::Identity | SymMapKind::Diagonal { .. } => Some(ModuleDescriptor::empty()),
            SymMapKind::Projection { kernel } => Some(ModuleDescriptor::new(kernel.clone())),
        },
        _ => None,
    }
}
