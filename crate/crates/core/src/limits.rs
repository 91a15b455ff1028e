//! Resource caps shared by the computational backends.

/// Hard bound imposed by the bitset representation used for ideal
/// enumeration. Rings above this order cannot be decomposed or have their
/// spectrum enumerated.
pub const BITSET_ORDER_MAX: usize = 128;

/// Configurable size and budget caps.
///
/// Enumeration over finite rings is exponential in the worst case; the
/// defaults keep every operation comfortably interactive while still
/// covering the orders the test corpus exercises. All caps can be raised
/// per call site.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Largest ring order for which operation tables may be built.
    pub max_ring_order: usize,
    /// Largest domain or codomain order admitted by homomorphism
    /// enumeration.
    pub max_hom_order: usize,
    /// S-pair reduction budget for a single Groebner basis run.
    pub spair_budget: usize,
    /// Maximum number of polynomial variables in a presentation.
    pub max_vars: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_ring_order: 64,
            max_hom_order: 16,
            spair_budget: 100_000,
            max_vars: 8,
        }
    }
}

impl Limits {
    /// Defaults with the ring-order cap raised to `order`.
    pub fn with_ring_order(order: usize) -> Self {
        Limits {
            max_ring_order: order,
            ..Limits::default()
        }
    }

    /// Defaults with the hom-enumeration cap raised to `order`.
    pub fn with_hom_order(order: usize) -> Self {
        Limits {
            max_hom_order: order,
            ..Limits::default()
        }
    }
}
