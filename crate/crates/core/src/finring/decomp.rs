use alloc::format;
use alloc::vec::Vec;

use super::ideal::{is_local, preimage_ideal, spectrum, Locality};
use super::{FinRingError, FiniteRing, Ideal, PrimeIdeal, RingHom};
use crate::limits::Limits;

/// Decomposition of a finite commutative ring into local factors cut out
/// by its primitive idempotents.
#[derive(Clone, Debug)]
pub struct LocalDecomposition {
    /// Each factor `R·e` together with the idempotent `e` (as an element
    /// of the ambient ring).
    pub factors: Vec<(FiniteRing, usize)>,
    /// The isomorphism onto the product of the factors.
    pub iso: RingHom,
}

impl LocalDecomposition {
    /// Projection of the ambient ring onto factor `i`.
    pub fn projection(&self, i: usize) -> RingHom {
        let (factor, e) = &self.factors[i];
        let ring = self.iso.domain();
        let elems = factor_elements(ring, *e);
        let image: Vec<usize> = (0..ring.order())
            .map(|x| {
                let xe = ring.mul(x, *e);
                elems.binary_search(&xe).expect("x·e lies in R·e")
            })
            .collect();
        RingHom::new_unchecked(ring.clone(), factor.clone(), image)
    }
}

fn factor_elements(ring: &FiniteRing, e: usize) -> Vec<usize> {
    let mut elems: Vec<usize> = ring.elements().map(|x| ring.mul(x, e)).collect();
    elems.sort_unstable();
    elems.dedup();
    elems
}

/// Builds the ring `R·e` for an idempotent `e`; the unit is `e`.
fn idempotent_factor(ring: &FiniteRing, e: usize) -> FiniteRing {
    let elems = factor_elements(ring, e);
    let order = elems.len();
    let pos = |x: usize| elems.binary_search(&x).expect("closed under the operations");
    let mut add = alloc::vec![0usize; order * order];
    let mut mul = alloc::vec![0usize; order * order];
    for (i, &a) in elems.iter().enumerate() {
        for (j, &b) in elems.iter().enumerate() {
            add[i * order + j] = pos(ring.add(a, b));
            mul[i * order + j] = pos(ring.mul(a, b));
        }
    }
    let zero = pos(ring.zero());
    let one = pos(e);
    let label = format!("{}[e={}]", ring.label(), e);
    FiniteRing::from_tables(order, add, mul, zero, one, label, &Limits::with_ring_order(order))
        .expect("an idempotent cuts out a ring")
}

/// Decomposes the ring along its primitive idempotents.
///
/// The minimal nonzero idempotents of a finite commutative ring are
/// pairwise orthogonal and sum to one, and each factor `R·e` has no
/// nontrivial idempotents, hence is local. The degenerate order-1 ring
/// decomposes into the empty product.
pub fn local_decomposition(ring: &FiniteRing) -> Result<LocalDecomposition, FinRingError> {
    let idems: Vec<usize> = ring.elements().filter(|&e| ring.is_idempotent(e)).collect();
    let nonzero: Vec<usize> = idems.iter().copied().filter(|&e| e != ring.zero()).collect();
    // e ≤ f (as idempotents) when e·f = e; primitive = minimal nonzero
    let primitive: Vec<usize> = nonzero
        .iter()
        .copied()
        .filter(|&e| {
            nonzero
                .iter()
                .all(|&f| f == e || ring.mul(f, e) != f)
        })
        .collect();

    if ring.is_degenerate() {
        return Ok(LocalDecomposition {
            factors: Vec::new(),
            iso: RingHom::identity(ring),
        });
    }

    let mut sum = ring.zero();
    for &e in &primitive {
        for &f in &primitive {
            debug_assert!(e == f || ring.mul(e, f) == ring.zero(), "orthogonality");
        }
        sum = ring.add(sum, e);
    }
    assert_eq!(sum, ring.one(), "primitive idempotents must sum to 1");

    let factors: Vec<(FiniteRing, usize)> = primitive
        .iter()
        .map(|&e| (idempotent_factor(ring, e), e))
        .collect();
    let rings: Vec<FiniteRing> = factors.iter().map(|(f, _)| f.clone()).collect();
    let product = FiniteRing::product(&rings, &Limits::with_ring_order(ring.order()))?;

    let elem_tables: Vec<Vec<usize>> = primitive
        .iter()
        .map(|&e| factor_elements(ring, e))
        .collect();
    let orders: Vec<usize> = rings.iter().map(|f| f.order()).collect();
    let image: Vec<usize> = (0..ring.order())
        .map(|x| {
            let mut idx = 0usize;
            for k in (0..primitive.len()).rev() {
                let xe = ring.mul(x, primitive[k]);
                let c = elem_tables[k].binary_search(&xe).expect("component in factor");
                idx = idx * orders[k] + c;
            }
            idx
        })
        .collect();
    let iso = RingHom::new(ring.clone(), product.ring, image)?;
    assert!(iso.is_bijective(), "decomposition map must be bijective");
    Ok(LocalDecomposition { factors, iso })
}

/// Residue field `k(p) = R/p` with the canonical map. For a maximal ideal
/// of a finite ring the quotient is already a field, so no localization
/// is involved.
pub fn residue_field(
    ring: &FiniteRing,
    prime: &PrimeIdeal,
) -> Result<(FiniteRing, RingHom), FinRingError> {
    let certified = PrimeIdeal::certify(ring, prime.ideal.clone())?;
    let (q, proj) = ring.quotient(&certified.ideal)?;
    debug_assert!(q.is_field());
    let q = q.relabel(format!("k({})", certified.ideal));
    let proj = RingHom::new_unchecked(ring.clone(), q.clone(), proj.image_table().to_vec());
    Ok((q, proj))
}

/// Localization at a prime, realized as the unique local factor of the
/// decomposition whose maximal ideal pulls back to the prime; the map is
/// the projection onto that factor.
pub fn localize_at_prime(
    ring: &FiniteRing,
    prime: &PrimeIdeal,
) -> Result<(FiniteRing, RingHom), FinRingError> {
    PrimeIdeal::certify(ring, prime.ideal.clone())?;
    let decomp = local_decomposition(ring)?;
    for i in 0..decomp.factors.len() {
        let proj = decomp.projection(i);
        let factor = &decomp.factors[i].0;
        let maximal = match is_local(factor)? {
            Locality::Local { maximal } => maximal,
            Locality::NotLocal { .. } => unreachable!("decomposition factors are local"),
        };
        let pullback = preimage_ideal(&proj, &maximal.ideal);
        if pullback.members() == prime.ideal.members() {
            return Ok((factor.clone(), proj));
        }
    }
    Err(FinRingError::NotPrime)
}

/// Checks that the localization projections, assembled over all primes,
/// agree with the decomposition isomorphism up to matching of factors.
pub fn localizations_cover_decomposition(ring: &FiniteRing) -> Result<bool, FinRingError> {
    let decomp = local_decomposition(ring)?;
    let primes = spectrum(ring)?;
    if primes.len() != decomp.factors.len() {
        return Ok(false);
    }
    let mut used = alloc::vec![false; decomp.factors.len()];
    for p in &primes {
        let (_, proj) = localize_at_prime(ring, p)?;
        let mut found = false;
        for i in 0..decomp.factors.len() {
            if !used[i] && decomp.projection(i) == proj {
                used[i] = true;
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(used.into_iter().all(|u| u))
}

/// The unique maximal ideal of a local finite ring, as the set of
/// non-units.
pub fn maximal_ideal_of_local(ring: &FiniteRing) -> Result<Ideal, FinRingError> {
    match is_local(ring)? {
        Locality::Local { maximal } => Ok(maximal.ideal),
        Locality::NotLocal { .. } => Err(FinRingError::NotLocal),
    }
}
