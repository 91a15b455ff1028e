use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use super::{FinRingError, FiniteRing};
use crate::limits::BITSET_ORDER_MAX;

/// An ideal of a [`FiniteRing`], stored as its sorted member set.
///
/// When the ideal was produced from a generating set the generators are
/// kept for reporting; the member set is always authoritative.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Ideal {
    members: Vec<usize>,
    generators: Option<Vec<usize>>,
}

impl Ideal {
    pub(crate) fn from_members(mut members: Vec<usize>, generators: Option<Vec<usize>>) -> Ideal {
        members.sort_unstable();
        members.dedup();
        Ideal {
            members,
            generators,
        }
    }

    /// Wraps an explicit member set, verifying the ideal axioms.
    pub fn new(ring: &FiniteRing, members: Vec<usize>) -> Result<Ideal, FinRingError> {
        let ideal = Ideal::from_members(members, None);
        if !ideal.is_valid(ring) {
            return Err(FinRingError::NotIdeal);
        }
        Ok(ideal)
    }

    pub fn zero(ring: &FiniteRing) -> Ideal {
        Ideal {
            members: alloc::vec![ring.zero()],
            generators: Some(Vec::new()),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn generators(&self) -> Option<&[usize]> {
        self.generators.as_deref()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_zero(&self, ring: &FiniteRing) -> bool {
        self.members.len() == 1 && self.members[0] == ring.zero()
    }

    pub fn is_proper(&self, ring: &FiniteRing) -> bool {
        self.members.len() < ring.order()
    }

    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    /// Checks closure under addition and ambient multiplication, and that
    /// the stored generators (if any) generate the member set.
    pub fn is_valid(&self, ring: &FiniteRing) -> bool {
        if !self.contains(ring.zero()) {
            return false;
        }
        if self.members.iter().any(|&x| x >= ring.order()) {
            return false;
        }
        for &a in &self.members {
            for &b in &self.members {
                if !self.contains(ring.add(a, b)) {
                    return false;
                }
            }
            for r in ring.elements() {
                if !self.contains(ring.mul(r, a)) {
                    return false;
                }
            }
        }
        if let Some(gens) = &self.generators {
            if ideal_closure(ring, gens).members != self.members {
                return false;
            }
        }
        true
    }

    /// Recomputes a small generating set greedily (used for display).
    pub fn with_computed_generators(mut self, ring: &FiniteRing) -> Ideal {
        let target = to_bits(&self.members);
        let mut gens: Vec<usize> = Vec::new();
        let mut span = closure_bits(ring, 1u128 << ring.zero());
        for &x in &self.members {
            if span & (1u128 << x) == 0 {
                gens.push(x);
                span = closure_bits(ring, span | (1u128 << x));
                if span == target {
                    break;
                }
            }
        }
        self.generators = Some(gens);
        self
    }
}

impl core::fmt::Display for Ideal {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match &self.generators {
            Some(gens) if !gens.is_empty() => {
                f.write_str("(")?;
                for (i, g) in gens.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{g}")?;
                }
                f.write_str(")")
            }
            Some(_) => f.write_str("(0)"),
            None => {
                f.write_str("{")?;
                for (i, m) in self.members.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{m}")?;
                }
                f.write_str("}")
            }
        }
    }
}

/// A prime ideal with its multiplicatively-closed-complement certificate.
/// In a finite commutative ring every prime ideal is maximal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct PrimeIdeal {
    pub ideal: Ideal,
    /// Re-checkable certificate: for all `a, b` outside the ideal, `a·b`
    /// is outside the ideal.
    pub complement_closed: bool,
}

impl PrimeIdeal {
    /// Verifies properness and the complement certificate exhaustively.
    pub fn certify(ring: &FiniteRing, ideal: Ideal) -> Result<PrimeIdeal, FinRingError> {
        if !ideal.is_valid(ring) {
            return Err(FinRingError::NotIdeal);
        }
        if !ideal.is_proper(ring) || !complement_closed(ring, &ideal) {
            return Err(FinRingError::NotPrime);
        }
        Ok(PrimeIdeal {
            ideal,
            complement_closed: true,
        })
    }
}

impl core::fmt::Display for PrimeIdeal {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        self.ideal.fmt(f)
    }
}

fn complement_closed(ring: &FiniteRing, ideal: &Ideal) -> bool {
    for a in ring.elements() {
        if ideal.contains(a) {
            continue;
        }
        for b in ring.elements() {
            if !ideal.contains(b) && ideal.contains(ring.mul(a, b)) {
                return false;
            }
        }
    }
    true
}

fn to_bits(members: &[usize]) -> u128 {
    members.iter().fold(0u128, |acc, &m| acc | (1u128 << m))
}

fn from_bits(bits: u128) -> Vec<usize> {
    (0..128).filter(|&i| bits & (1u128 << i) != 0).collect()
}

fn check_bitset_cap(ring: &FiniteRing) -> Result<(), FinRingError> {
    if ring.order() > BITSET_ORDER_MAX {
        return Err(FinRingError::SizeLimit {
            requested: ring.order(),
            cap: BITSET_ORDER_MAX,
        });
    }
    Ok(())
}

/// Closure of a seed set under addition and ambient multiplication.
fn closure_bits(ring: &FiniteRing, seed: u128) -> u128 {
    let mut mem = seed | (1u128 << ring.zero());
    let mut stack: Vec<usize> = from_bits(mem);
    while let Some(e) = stack.pop() {
        for m in from_bits(mem) {
            let s = ring.add(e, m);
            if mem & (1u128 << s) == 0 {
                mem |= 1u128 << s;
                stack.push(s);
            }
        }
        for r in ring.elements() {
            let p = ring.mul(r, e);
            if mem & (1u128 << p) == 0 {
                mem |= 1u128 << p;
                stack.push(p);
            }
        }
    }
    mem
}

/// Smallest ideal containing the given generators.
pub fn ideal_closure(ring: &FiniteRing, gens: &[usize]) -> Ideal {
    assert!(ring.order() <= BITSET_ORDER_MAX, "ring too large for ideal arithmetic");
    let seed = gens.iter().fold(1u128 << ring.zero(), |acc, &g| acc | (1u128 << g));
    let bits = closure_bits(ring, seed);
    Ideal {
        members: from_bits(bits),
        generators: Some(gens.to_vec()),
    }
}

/// The set of nilpotent elements. It equals the intersection of all prime
/// ideals.
pub fn nilradical(ring: &FiniteRing) -> Ideal {
    let members: Vec<usize> = ring.elements().filter(|&a| ring.is_nilpotent(a)).collect();
    Ideal::from_members(members, None)
}

/// Every ideal of the ring, in increasing member-list order.
///
/// Ideals are discovered by closing each already-known ideal with one more
/// element; this walks the full ideal lattice without enumerating the
/// subgroup lattice of `(R,+)`.
pub fn all_ideals(ring: &FiniteRing) -> Result<Vec<Ideal>, FinRingError> {
    check_bitset_cap(ring)?;
    let zero_bits = closure_bits(ring, 1u128 << ring.zero());
    let mut seen: BTreeSet<u128> = BTreeSet::new();
    seen.insert(zero_bits);
    let mut stack = alloc::vec![zero_bits];
    while let Some(bits) = stack.pop() {
        for x in ring.elements() {
            if bits & (1u128 << x) == 0 {
                let bigger = closure_bits(ring, bits | (1u128 << x));
                if seen.insert(bigger) {
                    stack.push(bigger);
                }
            }
        }
    }
    let mut ideals: Vec<Ideal> = seen
        .into_iter()
        .map(|bits| Ideal::from_members(from_bits(bits), None))
        .collect();
    ideals.sort();
    Ok(ideals)
}

/// All prime (equivalently maximal) ideals with complement certificates,
/// sorted by member list.
pub fn spectrum(ring: &FiniteRing) -> Result<Vec<PrimeIdeal>, FinRingError> {
    if ring.is_degenerate() {
        return Err(FinRingError::ZeroRing);
    }
    let ideals = all_ideals(ring)?;
    let proper: Vec<&Ideal> = ideals.iter().filter(|i| i.is_proper(ring)).collect();
    let mut primes = Vec::new();
    for (k, &cand) in proper.iter().enumerate() {
        let maximal = proper
            .iter()
            .enumerate()
            .all(|(j, &other)| j == k || !cand.is_subset_of(other));
        if maximal {
            let ideal = cand.clone().with_computed_generators(ring);
            debug_assert!(complement_closed(ring, &ideal));
            primes.push(PrimeIdeal {
                ideal,
                complement_closed: complement_closed(ring, cand),
            });
        }
    }
    primes.sort();
    Ok(primes)
}

/// Outcome of the locality test.
#[derive(Clone, Debug)]
pub enum Locality {
    /// The unique maximal ideal.
    Local { maximal: PrimeIdeal },
    /// Two distinct maximal ideals witnessing failure.
    NotLocal { first: PrimeIdeal, second: PrimeIdeal },
}

impl Locality {
    pub fn maximal_ideal(&self) -> Option<&PrimeIdeal> {
        match self {
            Locality::Local { maximal } => Some(maximal),
            Locality::NotLocal { .. } => None,
        }
    }
}

/// Tests whether the ring has a unique maximal ideal.
pub fn is_local(ring: &FiniteRing) -> Result<Locality, FinRingError> {
    let primes = spectrum(ring)?;
    match primes.len() {
        0 => Err(FinRingError::ZeroRing),
        1 => Ok(Locality::Local {
            maximal: primes.into_iter().next().expect("one prime"),
        }),
        _ => {
            let mut it = primes.into_iter();
            Ok(Locality::NotLocal {
                first: it.next().expect("first"),
                second: it.next().expect("second"),
            })
        }
    }
}

/// Product ideal `I·J`: the additive closure of the pairwise products.
pub fn ideal_product(ring: &FiniteRing, lhs: &Ideal, rhs: &Ideal) -> Ideal {
    assert!(ring.order() <= BITSET_ORDER_MAX, "ring too large for ideal arithmetic");
    let mut seed = 1u128 << ring.zero();
    for &a in lhs.members() {
        for &b in rhs.members() {
            seed |= 1u128 << ring.mul(a, b);
        }
    }
    // products of ideal elements are already closed under ambient
    // multiplication, so closing under addition suffices; closure_bits
    // does both and lands on the same set
    Ideal::from_members(from_bits(closure_bits(ring, seed)), None)
}

/// Iterates powers of the maximal ideal of a local ring until they
/// stabilize; returns the stable ideal `∩ m^n` and the least `n` with
/// `m^n = m^(n+1)`.
///
/// On a finite local ring the maximal ideal is nilpotent, so the stable
/// ideal is always zero.
pub fn infinite_radical(
    ring: &FiniteRing,
    maximal: &Ideal,
) -> Result<(Ideal, usize), FinRingError> {
    match is_local(ring)? {
        Locality::Local { maximal: m } if m.ideal.members() == maximal.members() => {}
        _ => return Err(FinRingError::NotLocal),
    }
    let mut current = maximal.clone();
    let mut n = 1usize;
    loop {
        let next = ideal_product(ring, &current, maximal);
        if next.members() == current.members() {
            return Ok((current, n));
        }
        current = next;
        n += 1;
    }
}

/// Ideal generated by the image of an element set under a ring map
/// (computed in the codomain).
pub fn image_ideal(hom: &super::RingHom, members: &[usize]) -> Ideal {
    let image: Vec<usize> = members.iter().map(|&x| hom.apply(x)).collect();
    ideal_closure(hom.codomain(), &image)
}

/// Preimage of an ideal under a ring map.
pub fn preimage_ideal(hom: &super::RingHom, ideal: &Ideal) -> Ideal {
    let members: Vec<usize> = (0..hom.domain().order())
        .filter(|&x| ideal.contains(hom.apply(x)))
        .collect();
    Ideal::from_members(members, None)
}

#[allow(dead_code)]
fn display_set(members: &[usize]) -> String {
    use core::fmt::Write;
    let mut s = String::from("{");
    for (i, m) in members.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{m}");
    }
    s.push('}');
    s
}
