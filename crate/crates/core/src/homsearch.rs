//! Exhaustive enumeration of unital ring homomorphisms, and the
//! definition-level oracle for preenvelopes, minimality and envelopes
//! relative to a finite catalog of test codomains.
//!
//! Enumeration backtracks over the images of an additive generating set
//! of the domain. The generating set is chosen greedily starting from 1
//! (whose image is forced), so each additional generator divides the
//! search space by the codomain order; partial assignments are pruned by
//! propagating additive closure and checking consistency with both
//! operation tables on the span generated so far.
//!
//! The class of test objects is infinite; verdicts produced here are
//! always relative to the catalog they were checked against, and say so.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::envelopes::ClassTag;
use crate::finring::{FinRingError, FiniteRing, RingHom};
use crate::limits::Limits;
use crate::presented;
use crate::verdict::{
    CatalogRef, EnvelopeMap, EnvelopeVerdict, MinimalityEvidence, Witness,
};

/// The complete set of unital homomorphisms between two finite rings,
/// sorted by image table.
#[derive(Clone, Debug)]
pub struct HomSet {
    pub domain: FiniteRing,
    pub codomain: FiniteRing,
    pub homs: Vec<RingHom>,
}

impl HomSet {
    pub fn len(&self) -> usize {
        self.homs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.homs.is_empty()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, RingHom> {
        self.homs.iter()
    }
}

/// Additive generating data: generators plus, for every ring element, a
/// derivation `elem = parent + gen` discovered while the span grew.
struct GenData {
    gens: Vec<usize>,
    /// (parent element, generator index); the zero element is the root.
    deriv: Vec<Option<(usize, usize)>>,
    /// Elements in the order their images become determined, per phase:
    /// `phase_elems[k]` lists elements added while closing generator `k`.
    phase_elems: Vec<Vec<usize>>,
}

fn generating_data(ring: &FiniteRing) -> GenData {
    let n = ring.order();
    let mut in_span = alloc::vec![false; n];
    let mut deriv: Vec<Option<(usize, usize)>> = alloc::vec![None; n];
    let mut span: Vec<usize> = alloc::vec![ring.zero()];
    in_span[ring.zero()] = true;
    let mut gens: Vec<usize> = Vec::new();
    let mut phase_elems = Vec::new();

    loop {
        // 1 first (its image is forced), then the least element not yet
        // spanned
        let g = if gens.is_empty() && !in_span[ring.one()] {
            ring.one()
        } else {
            match (0..n).find(|&x| !in_span[x]) {
                Some(x) => x,
                None => break,
            }
        };
        let k = gens.len();
        gens.push(g);
        let mut phase = Vec::new();
        // close the span under addition of g; every new element is
        // recorded as parent + g, and the generator itself enters as 0 + g
        let mut frontier: Vec<usize> = span.clone();
        while let Some(e) = frontier.pop() {
            let s = ring.add(e, g);
            if !in_span[s] {
                in_span[s] = true;
                deriv[s] = Some((e, k));
                span.push(s);
                phase.push(s);
                frontier.push(s);
            }
        }
        phase_elems.push(phase);
    }
    GenData {
        gens,
        deriv,
        phase_elems,
    }
}

/// Enumerates every unital ring homomorphism from `r` to `s`.
pub fn enumerate_homs(
    r: &FiniteRing,
    s: &FiniteRing,
    limits: &Limits,
) -> Result<HomSet, FinRingError> {
    for order in [r.order(), s.order()] {
        if order > limits.max_hom_order {
            return Err(FinRingError::SizeLimit {
                requested: order,
                cap: limits.max_hom_order,
            });
        }
    }
    let gd = generating_data(r);
    let n = r.order();
    let mut img: Vec<usize> = alloc::vec![usize::MAX; n];
    img[r.zero()] = s.zero();
    // elements with known images, in assignment order
    let mut known: Vec<usize> = alloc::vec![r.zero()];
    let mut found: Vec<RingHom> = Vec::new();

    // Pairs whose sum or product is already imaged must stay consistent.
    // Sums never leave the span (it is a subgroup), so additive
    // consistency is fully established phase by phase; products can land
    // outside the current span and are settled by the leaf check.
    fn consistent_on_known(
        r: &FiniteRing,
        s: &FiniteRing,
        img: &[usize],
        known: &[usize],
        fresh: &[usize],
    ) -> bool {
        for &a in fresh {
            for &b in known {
                let sum = r.add(a, b);
                if img[sum] != s.add(img[a], img[b]) {
                    return false;
                }
                let prod = r.mul(a, b);
                if img[prod] != usize::MAX && img[prod] != s.mul(img[a], img[b]) {
                    return false;
                }
            }
        }
        true
    }

    fn full_multiplicative_check(r: &FiniteRing, s: &FiniteRing, img: &[usize]) -> bool {
        for a in 0..r.order() {
            for b in a..r.order() {
                if img[r.mul(a, b)] != s.mul(img[a], img[b]) {
                    return false;
                }
            }
        }
        true
    }

    fn search(
        r: &FiniteRing,
        s: &FiniteRing,
        gd: &GenData,
        phase: usize,
        img: &mut Vec<usize>,
        known: &mut Vec<usize>,
        found: &mut Vec<RingHom>,
    ) {
        if phase == gd.gens.len() {
            debug_assert!(img.iter().all(|&y| y != usize::MAX));
            if img[r.one()] == s.one() && full_multiplicative_check(r, s, img) {
                found.push(RingHom::new_unchecked(r.clone(), s.clone(), img.clone()));
            }
            return;
        }
        let g = gd.gens[phase];
        let forced_one = phase == 0 && g == r.one();
        let upper = if forced_one { 1 } else { s.order() };
        for y in 0..upper {
            let y = if forced_one { s.one() } else { y };
            let fresh = &gd.phase_elems[phase];
            for &e in fresh {
                let (parent, _) = gd.deriv[e].expect("derived element has a parent");
                img[e] = s.add(img[parent], y);
            }
            known.extend(fresh.iter().copied());
            if consistent_on_known(r, s, img, known, fresh) {
                search(r, s, gd, phase + 1, img, known, found);
            }
            for _ in 0..fresh.len() {
                let e = known.pop().expect("just pushed");
                img[e] = usize::MAX;
            }
        }
    }

    search(r, s, &gd, 0, &mut img, &mut known, &mut found);
    found.sort_by(|a, b| a.image_table().cmp(b.image_table()));
    Ok(HomSet {
        domain: r.clone(),
        codomain: s.clone(),
        homs: found,
    })
}

/// Finds `h` with `h ∘ f = g`, both maps sharing the domain. Returns the
/// first factoring map in canonical order.
pub fn factors_through(
    g: &RingHom,
    f: &RingHom,
    limits: &Limits,
) -> Result<Option<RingHom>, FinRingError> {
    debug_assert_eq!(g.domain(), f.domain());
    let homs = enumerate_homs(f.codomain(), g.codomain(), limits)?;
    Ok(homs.homs.into_iter().find(|h| &f.then(h) == g))
}

/// A catalog of test codomains for one ring class.
#[derive(Clone, Debug)]
pub struct Catalog {
    pub class: ClassTag,
    pub rings: Vec<FiniteRing>,
    pub provenance: String,
    pub max_order: usize,
}

impl Catalog {
    /// Deterministic generated family for a class:
    ///
    /// * fields: `F_q` for prime powers `q ≤ max_order`;
    /// * semisimple: products of those fields with total order within the
    ///   bound (single fields included);
    /// * domain: the fields again, since a finite integral domain is a
    ///   field;
    /// * noetherian: every finite ring qualifies, so the catalog reuses
    ///   the residue rings `Z/n` together with the semisimple family.
    pub fn build(class: ClassTag, max_order: usize, limits: &Limits) -> Catalog {
        let fields = field_family(max_order, limits);
        let (rings, provenance) = match class {
            ClassTag::Field => (fields, format!("prime-power fields of order <= {max_order}")),
            ClassTag::Domain => (
                fields,
                format!("prime-power fields of order <= {max_order} (finite domains are fields)"),
            ),
            ClassTag::Semisimple => (
                semisimple_family(max_order, limits),
                format!("products of prime-power fields with order <= {max_order}"),
            ),
            ClassTag::Noetherian => {
                let mut rings: Vec<FiniteRing> = Vec::new();
                for n in 2..=max_order {
                    rings.push(FiniteRing::zmod(n, limits).expect("within cap"));
                }
                for s in semisimple_family(max_order, limits) {
                    if !rings.iter().any(|r| r.label() == s.label()) {
                        rings.push(s);
                    }
                }
                (
                    rings,
                    format!("residue rings Z/n and semisimple rings of order <= {max_order}"),
                )
            }
        };
        for r in &rings {
            debug_assert!(class.holds(r), "catalog member {} fails the class predicate", r.label());
        }
        Catalog {
            class,
            rings,
            provenance,
            max_order,
        }
    }

    pub fn reference(&self) -> CatalogRef {
        CatalogRef {
            class: self.class,
            max_order: self.max_order,
        }
    }
}

/// The field `F_q` for a prime power `q`, built as `Z/p` or as
/// `F_p[x]/(f)` for the lexicographically least monic irreducible `f`.
pub fn field_of_order(q: usize, limits: &Limits) -> Option<FiniteRing> {
    let (p, k) = prime_power_split(q)?;
    if k == 1 {
        return Some(
            FiniteRing::zmod(p, limits)
                .expect("within cap")
                .relabel(format!("F{q}")),
        );
    }
    // scan monic degree-k polynomials over F_p in lexicographic
    // coefficient order until the quotient is a field
    let mut coeffs = alloc::vec![0u64; k];
    loop {
        let mut rel = presented::Polynomial::monomial(p as u64, 1, &alloc::vec![k as u32], 1);
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                rel = rel.add(&presented::Polynomial::monomial(p as u64, 1, &alloc::vec![i as u32], c));
            }
        }
        let pres = presented::Presentation::new(p as u64, alloc::vec!["x".into()], alloc::vec![rel])
            .expect("valid presentation");
        if let Ok(q_ring) = presented::to_finite_ring(&pres, limits) {
            if q_ring.ring.is_field() {
                return Some(q_ring.ring.relabel(format!("F{q}")));
            }
        }
        // next coefficient vector
        let mut i = 0;
        loop {
            if i == k {
                return None;
            }
            coeffs[i] += 1;
            if coeffs[i] < p as u64 {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
    }
}

fn prime_power_split(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut m = q;
            let mut k = 0;
            while m.is_multiple_of(p) {
                m /= p;
                k += 1;
            }
            return if m == 1 { Some((p, k)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

fn field_family(max_order: usize, limits: &Limits) -> Vec<FiniteRing> {
    (2..=max_order)
        .filter_map(|q| field_of_order(q, limits))
        .collect()
}

fn semisimple_family(max_order: usize, limits: &Limits) -> Vec<FiniteRing> {
    // nondecreasing sequences of prime-power orders with product <= cap
    let prime_powers: Vec<usize> = (2..=max_order)
        .filter(|&q| prime_power_split(q).is_some())
        .collect();
    let mut seqs: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<(Vec<usize>, usize)> = prime_powers
        .iter()
        .map(|&q| (alloc::vec![q], q))
        .collect();
    while let Some((seq, prod)) = stack.pop() {
        seqs.push(seq.clone());
        let last = *seq.last().expect("nonempty");
        for &q in prime_powers.iter().filter(|&&q| q >= last) {
            if prod * q <= max_order {
                let mut next = seq.clone();
                next.push(q);
                stack.push((next, prod * q));
            }
        }
    }
    seqs.sort_by_key(|s| (s.iter().product::<usize>(), s.len(), s.clone()));
    seqs.dedup();
    seqs.into_iter()
        .map(|seq| {
            if seq.len() == 1 {
                field_of_order(seq[0], limits).expect("prime power")
            } else {
                let factors: Vec<FiniteRing> = seq
                    .iter()
                    .map(|&q| field_of_order(q, limits).expect("prime power"))
                    .collect();
                FiniteRing::product(&factors, limits).expect("within cap").ring
            }
        })
        .collect()
}

/// Report of a preenvelope check against a catalog.
#[derive(Clone, Debug)]
pub struct PreenvelopeReport {
    pub holds: bool,
    /// On failure: the catalog member and the morphism into it that does
    /// not factor through the candidate.
    pub witness: Option<(FiniteRing, RingHom)>,
}

/// Checks the factoring half of the envelope definition: every morphism
/// from the domain into a catalog member must factor through `f`.
pub fn is_preenvelope(
    f: &RingHom,
    catalog: &Catalog,
    limits: &Limits,
) -> Result<PreenvelopeReport, FinRingError> {
    if !catalog.class.holds(f.codomain()) {
        return Err(FinRingError::ClassMismatch(format!(
            "codomain {} is not in the {} class",
            f.codomain().label(),
            catalog.class
        )));
    }
    let r = f.domain();
    for s in &catalog.rings {
        let from_r = enumerate_homs(r, s, limits)?;
        if from_r.is_empty() {
            continue;
        }
        let from_f = enumerate_homs(f.codomain(), s, limits)?;
        for g in from_r.iter() {
            let factors = from_f.iter().any(|h| &f.then(h) == g);
            if !factors {
                return Ok(PreenvelopeReport {
                    holds: false,
                    witness: Some((s.clone(), g.clone())),
                });
            }
        }
    }
    Ok(PreenvelopeReport {
        holds: true,
        witness: None,
    })
}

/// Report of a left-minimality check.
#[derive(Clone, Debug)]
pub struct MinimalityReport {
    pub minimal: bool,
    pub endomorphism_count: usize,
    pub commuting_count: usize,
    /// A non-bijective commuting endomorphism, when one exists.
    pub culprit: Option<RingHom>,
}

impl MinimalityReport {
    pub fn evidence(&self) -> MinimalityEvidence {
        MinimalityEvidence {
            minimal: self.minimal,
            endomorphism_count: self.endomorphism_count,
            commuting_count: self.commuting_count,
        }
    }
}

/// Checks left minimality: every endomorphism `v` of the codomain with
/// `v ∘ f = f` must be bijective.
pub fn is_minimal(f: &RingHom, limits: &Limits) -> Result<MinimalityReport, FinRingError> {
    let endos = enumerate_homs(f.codomain(), f.codomain(), limits)?;
    let mut commuting = 0usize;
    let mut culprit = None;
    for v in endos.iter() {
        if &f.then(v) == f {
            commuting += 1;
            if !v.is_bijective() && culprit.is_none() {
                culprit = Some(v.clone());
            }
        }
    }
    Ok(MinimalityReport {
        minimal: culprit.is_none(),
        endomorphism_count: endos.len(),
        commuting_count: commuting,
        culprit,
    })
}

/// The full definition-level oracle: `f` is an envelope relative to the
/// catalog when it is a preenvelope and left minimal.
pub fn is_envelope(
    f: &RingHom,
    catalog: &Catalog,
    limits: &Limits,
) -> Result<EnvelopeVerdict, FinRingError> {
    let pre = is_preenvelope(f, catalog, limits)?;
    if !pre.holds {
        let (s, g) = pre.witness.expect("failure carries a witness");
        return Ok(EnvelopeVerdict::not_exists(Witness::Unfactorable {
            codomain_label: s.label().into(),
            map: g,
        })
        .with_catalog(catalog.reference()));
    }
    let min = is_minimal(f, limits)?;
    if !min.minimal {
        let culprit = min.culprit.clone().expect("non-minimal has a culprit");
        return Ok(EnvelopeVerdict::not_exists(Witness::NonMinimalEndomorphism(culprit))
            .with_minimality(min.evidence())
            .with_catalog(catalog.reference()));
    }
    Ok(EnvelopeVerdict::exists(EnvelopeMap::Finite(f.clone()))
        .with_minimality(min.evidence())
        .with_catalog(catalog.reference()))
}
