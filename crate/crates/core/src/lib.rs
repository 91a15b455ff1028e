//! Envelope computations for commutative rings.
//!
//! Given a commutative ring in a computable representation, this crate
//! decides whether the ring has an envelope in the class of fields,
//! semisimple rings, integral domains or Noetherian rings, and constructs
//! the envelope map when it exists. A morphism `f: R -> F` with `F` in a
//! class is a preenvelope when every morphism from `R` into a member of the
//! class factors through `f`, and an envelope when additionally every
//! endomorphism `v` of `F` with `v∘f = f` is an isomorphism.
//!
//! Three backends cooperate:
//!
//! * [`finring`] represents finite commutative rings by their operation
//!   tables and provides ideal arithmetic, spectrum enumeration, local
//!   decomposition and localization.
//! * [`presented`] gives exact multivariate polynomial arithmetic over a
//!   prime field, Buchberger's algorithm, and conversion of
//!   zero-dimensional quotient algebras into table form.
//! * [`symring`] treats trivial extensions `A ⋉ N` of `Z_(p)`, `Z` or `Q`
//!   symbolically, with a closed rule table for localizing the supported
//!   module summands.
//!
//! On finite instances every verdict produced by the theorem layer in
//! [`envelopes`] can be replayed against the definition by exhaustive
//! homomorphism search ([`homsearch`]).
//!
//! The crate is `no_std` (alloc required); IO, parsing and report formats
//! live in the companion CLI crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod envelopes;
pub mod finring;
pub mod homsearch;
pub mod limits;
pub mod presented;
pub mod symring;
pub mod verdict;

pub use finring::{FiniteModule, FiniteRing, Ideal, LocalDecomposition, PrimeIdeal, RingHom};
pub use limits::Limits;
pub use verdict::{EnvelopeVerdict, VerdictStatus};
