//! Presented algebras: exact multivariate polynomial arithmetic over
//! `F_p`, Buchberger's algorithm, zero-dimensionality detection, and
//! conversion of zero-dimensional quotients to operation tables.
//!
//! A [`Presentation`] is a quotient `F_p[x_1..x_k]/(relations)`. The
//! truncated power-series family built by [`fibonacci_truncation`] is the
//! workhorse example: its defining relations force every variable into
//! the square of the maximal ideal while keeping prescribed nilpotency
//! degrees, so the quotient is a local algebra whose principal-ideal
//! chains can be inspected exactly.

mod convert;
mod groebner;
mod poly;

pub use convert::{principal_chain_strict, to_finite_ring, PresentedQuotient};
pub use groebner::{buchberger, is_zero_dimensional, normal_form, verify_basis, GroebnerBasis, ZeroDimReport};
pub use poly::{Monomial, Polynomial, TermOrder};

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::finring::FinRingError;
use crate::symring::is_prime;

/// Errors raised by the presented-algebra backend.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PresentedError {
    /// The S-pair budget was exhausted before the basis closed.
    ResourceLimit,
    /// The relations generate the unit ideal.
    UnitIdeal,
    /// The quotient is not a finite-dimensional vector space.
    NotZeroDimensional,
    /// A cap was exceeded.
    SizeLimit { requested: usize, cap: usize },
    /// A truncation needs at least three variables.
    TooFewVariables,
    /// Invalid presentation data.
    Invalid(String),
    /// Error from the finite-ring backend during conversion.
    Ring(FinRingError),
}

impl core::fmt::Display for PresentedError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            PresentedError::ResourceLimit => write!(f, "S-pair budget exhausted"),
            PresentedError::UnitIdeal => write!(f, "relations generate the unit ideal"),
            PresentedError::NotZeroDimensional => {
                write!(f, "quotient is not zero-dimensional")
            }
            PresentedError::SizeLimit { requested, cap } => {
                write!(f, "size limit exceeded: requested {requested}, cap {cap}")
            }
            PresentedError::TooFewVariables => write!(f, "truncation needs at least 3 variables"),
            PresentedError::Invalid(msg) => write!(f, "invalid presentation: {msg}"),
            PresentedError::Ring(e) => write!(f, "conversion failed: {e}"),
        }
    }
}

impl core::error::Error for PresentedError {}

impl From<FinRingError> for PresentedError {
    fn from(e: FinRingError) -> Self {
        PresentedError::Ring(e)
    }
}

/// A quotient presentation `F_p[x_1..x_k]/(relations)`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub p: u64,
    pub vars: Vec<String>,
    pub relations: Vec<Polynomial>,
}

impl Presentation {
    /// Validates that `p` is prime, relations are nonzero and match the
    /// variable count.
    pub fn new(p: u64, vars: Vec<String>, relations: Vec<Polynomial>) -> Result<Presentation, PresentedError> {
        if !is_prime(p) {
            return Err(PresentedError::Invalid(format!("{p} is not prime")));
        }
        for r in &relations {
            if r.is_zero() {
                return Err(PresentedError::Invalid("zero relation".into()));
            }
            if r.nvars() != vars.len() || r.characteristic() != p {
                return Err(PresentedError::Invalid(
                    "relation does not match the presentation".into(),
                ));
            }
        }
        Ok(Presentation { p, vars, relations })
    }

    /// DSL-style label `Fp[vars]/(relations)`.
    pub fn label(&self) -> String {
        let rels: Vec<String> = self
            .relations
            .iter()
            .map(|r| r.to_text(&self.vars, TermOrder::DegRevLex))
            .collect();
        format!("F{}[{}]/({})", self.p, self.vars.join(","), rels.join(", "))
    }
}

/// First `n` Fibonacci numbers `1, 1, 2, 3, 5, ...`.
fn fibonacci(n: usize) -> Vec<u64> {
    let mut fib = Vec::with_capacity(n);
    let (mut a, mut b) = (1u64, 1u64);
    for _ in 0..n {
        fib.push(a);
        let next = a + b;
        a = b;
        b = next;
    }
    fib
}

/// Truncation of the power-series algebra in infinitely many variables
/// where each variable is the product of the next two and the `i`-th
/// variable is nilpotent of index one more than the `i`-th Fibonacci
/// number: variables `x_1..x_m` over `F_p` with relations
/// `x_i - x_(i+1)·x_(i+2)` for `i ≤ m-2` and `x_i^(a_i + 1)` for all
/// `i`, where `a = 1, 1, 2, 3, 5, ...`. Relations that would mention
/// variables beyond `x_m` are dropped.
pub fn fibonacci_truncation(p: u64, m: usize) -> Result<Presentation, PresentedError> {
    if m < 3 {
        return Err(PresentedError::TooFewVariables);
    }
    if !is_prime(p) {
        return Err(PresentedError::Invalid(format!("{p} is not prime")));
    }
    let vars: Vec<String> = (1..=m).map(|i| format!("x{i}")).collect();
    let fib = fibonacci(m);
    let mut relations = Vec::new();
    for i in 0..m.saturating_sub(2) {
        let xi = Polynomial::var(p, m, i);
        let prod = Polynomial::var(p, m, i + 1).mul(&Polynomial::var(p, m, i + 2));
        relations.push(xi.sub(&prod));
    }
    for (i, &a) in fib.iter().enumerate() {
        let mut exps = alloc::vec![0u32; m];
        exps[i] = (a + 1) as u32;
        relations.push(Polynomial::monomial(p, m, &exps, 1));
    }
    Presentation::new(p, vars, relations)
}
