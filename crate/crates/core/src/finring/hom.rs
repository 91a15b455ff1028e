use alloc::string::String;
use alloc::vec::Vec;

use super::{FinRingError, FiniteRing};

/// A unital ring homomorphism between finite rings, stored as the total
/// map of element indices.
#[derive(Clone)]
pub struct RingHom {
    domain: FiniteRing,
    codomain: FiniteRing,
    image: Vec<usize>,
}

impl PartialEq for RingHom {
    fn eq(&self, other: &Self) -> bool {
        self.image == other.image && self.domain == other.domain && self.codomain == other.codomain
    }
}

impl Eq for RingHom {}

impl core::fmt::Debug for RingHom {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "RingHom({} -> {}, {:?})",
            self.domain.label(),
            self.codomain.label(),
            self.image
        )
    }
}

impl core::fmt::Display for RingHom {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{} -> {}", self.domain.label(), self.codomain.label())
    }
}

impl RingHom {
    /// Builds a homomorphism after verifying that the map is unital and
    /// respects both tables.
    pub fn new(
        domain: FiniteRing,
        codomain: FiniteRing,
        image: Vec<usize>,
    ) -> Result<RingHom, FinRingError> {
        let h = RingHom {
            domain,
            codomain,
            image,
        };
        if !h.is_valid() {
            return Err(FinRingError::InvalidTables(String::from(
                "map is not a unital ring homomorphism",
            )));
        }
        Ok(h)
    }

    pub(crate) fn new_unchecked(
        domain: FiniteRing,
        codomain: FiniteRing,
        image: Vec<usize>,
    ) -> RingHom {
        debug_assert!(RingHom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            image: image.clone()
        }
        .is_valid());
        RingHom {
            domain,
            codomain,
            image,
        }
    }

    pub fn identity(ring: &FiniteRing) -> RingHom {
        RingHom {
            domain: ring.clone(),
            codomain: ring.clone(),
            image: (0..ring.order()).collect(),
        }
    }

    fn is_valid(&self) -> bool {
        let n = self.domain.order();
        if self.image.len() != n {
            return false;
        }
        if self.image.iter().any(|&y| y >= self.codomain.order()) {
            return false;
        }
        if self.image[self.domain.one()] != self.codomain.one() {
            return false;
        }
        for a in 0..n {
            for b in 0..n {
                if self.image[self.domain.add(a, b)]
                    != self.codomain.add(self.image[a], self.image[b])
                {
                    return false;
                }
                if self.image[self.domain.mul(a, b)]
                    != self.codomain.mul(self.image[a], self.image[b])
                {
                    return false;
                }
            }
        }
        true
    }

    pub fn domain(&self) -> &FiniteRing {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteRing {
        &self.codomain
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.image[a]
    }

    pub fn image_table(&self) -> &[usize] {
        &self.image
    }

    /// `other ∘ self` (apply `self` first).
    pub fn then(&self, other: &RingHom) -> RingHom {
        debug_assert_eq!(self.codomain, other.domain);
        RingHom {
            domain: self.domain.clone(),
            codomain: other.codomain.clone(),
            image: self.image.iter().map(|&y| other.image[y]).collect(),
        }
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = alloc::vec![false; self.codomain.order()];
        for &y in &self.image {
            if seen[y] {
                return false;
            }
            seen[y] = true;
        }
        true
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = alloc::vec![false; self.codomain.order()];
        for &y in &self.image {
            seen[y] = true;
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_bijective(&self) -> bool {
        self.domain.order() == self.codomain.order() && self.is_injective()
    }

    /// Elements mapping to zero, in increasing order.
    pub fn kernel(&self) -> Vec<usize> {
        (0..self.domain.order())
            .filter(|&a| self.image[a] == self.codomain.zero())
            .collect()
    }

    /// The image as a sorted element set of the codomain. It is a unital
    /// subring.
    pub fn image_elements(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.image.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Splits the map through its image subring: returns the surjective
    /// corestriction onto the image and the inclusion back into the
    /// codomain; their composite is the original map.
    pub fn corestriction(&self) -> Result<(RingHom, RingHom), FinRingError> {
        let elems = self.image_elements();
        let (sub, incl) = self.codomain.subring(&elems)?;
        let image: Vec<usize> = self
            .image
            .iter()
            .map(|&y| elems.binary_search(&y).expect("image element"))
            .collect();
        let core = RingHom::new(self.domain.clone(), sub, image)?;
        Ok((core, incl))
    }
}
