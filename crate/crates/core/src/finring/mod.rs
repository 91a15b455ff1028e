//! Finite commutative rings given by operation tables.
//!
//! A [`FiniteRing`] stores its addition and multiplication tables
//! explicitly; elements are the indices `0..order`. Everything downstream
//! (ideals, spectrum, local decomposition, residue fields, localization)
//! is computed by exhaustive closure over those tables, which is cheap at
//! the supported orders and makes every claim re-checkable.
//!
//! All values are immutable after construction and operations are pure, so
//! rings, ideals and homomorphisms can be shared freely across threads.

mod decomp;
mod hom;
mod ideal;
mod ring;

pub use decomp::{
    local_decomposition, localizations_cover_decomposition, localize_at_prime,
    maximal_ideal_of_local, residue_field, LocalDecomposition,
};
pub use hom::RingHom;
pub use ideal::{
    all_ideals, ideal_closure, ideal_product, image_ideal, infinite_radical, is_local, nilradical,
    preimage_ideal, spectrum, Ideal, Locality, PrimeIdeal,
};
pub use ring::{FiniteModule, FiniteRing, ProductRing};

use alloc::string::String;
use core::fmt;

/// Errors raised by the finite-ring backend.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FinRingError {
    /// A requested construction or enumeration exceeds the configured cap.
    SizeLimit { requested: usize, cap: usize },
    /// The operation is undefined on the zero ring.
    ZeroRing,
    /// The supplied ideal is not prime.
    NotPrime,
    /// The ring is not local (or the supplied ideal is not its maximal
    /// ideal).
    NotLocal,
    /// A module action table violates the module axioms.
    InvalidAction(String),
    /// Operation tables violate the commutative ring axioms.
    InvalidTables(String),
    /// A member set is not an ideal of the ring.
    NotIdeal,
    /// A candidate codomain does not satisfy the class predicate it is
    /// being tested for.
    ClassMismatch(String),
}

impl fmt::Display for FinRingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FinRingError::SizeLimit { requested, cap } => {
                write!(f, "size limit exceeded: requested {requested}, cap {cap}")
            }
            FinRingError::ZeroRing => write!(f, "operation undefined on the zero ring"),
            FinRingError::NotPrime => write!(f, "ideal is not prime"),
            FinRingError::NotLocal => write!(f, "ring is not local"),
            FinRingError::InvalidAction(msg) => write!(f, "invalid module action: {msg}"),
            FinRingError::InvalidTables(msg) => write!(f, "invalid ring tables: {msg}"),
            FinRingError::NotIdeal => write!(f, "member set is not an ideal"),
            FinRingError::ClassMismatch(msg) => write!(f, "class mismatch: {msg}"),
        }
    }
}

impl core::error::Error for FinRingError {}
