//! Shared corpus builders for the integration suites.
//!
//! The corpus is the deterministic family of finite rings the envelope
//! deciders are swept against: residue rings, small fields, truncated
//! polynomial rings, one non-principal local ring, trivial extensions of
//! prime-power residue rings, and pairwise products of the local members.

#![allow(dead_code)]

use ringenv_core::finring::{FiniteModule, FiniteRing};
use ringenv_core::presented::{to_finite_ring, Polynomial, Presentation};
use ringenv_core::Limits;

/// Caps wide enough for every corpus member (largest base ring has order
/// 81, largest product 36).
pub fn corpus_limits() -> Limits {
    Limits {
        max_ring_order: 128,
        max_hom_order: 128,
        spair_budget: 100_000,
        max_vars: 8,
    }
}

pub fn zmod(n: usize) -> FiniteRing {
    FiniteRing::zmod(n, &corpus_limits()).unwrap()
}

/// `F_p[x]/(x^k)` via the presented backend.
pub fn truncated_poly_ring(p: u64, k: u32) -> FiniteRing {
    let rel = Polynomial::monomial(p, 1, &[k], 1);
    let pres = Presentation::new(p, vec!["x".into()], vec![rel]).unwrap();
    to_finite_ring(&pres, &corpus_limits()).unwrap().ring
}

/// `F_2[x,y]/(x^2, x*y, y^2)`: the order-8 local ring with a
/// two-dimensional socle.
pub fn square_zero_plane() -> FiniteRing {
    let rels = vec![
        Polynomial::monomial(2, 2, &[2, 0], 1),
        Polynomial::monomial(2, 2, &[1, 1], 1),
        Polynomial::monomial(2, 2, &[0, 2], 1),
    ];
    let pres = Presentation::new(2, vec!["x".into(), "y".into()], rels).unwrap();
    to_finite_ring(&pres, &corpus_limits()).unwrap().ring
}

/// `Z/p^a ⋉ Z/p^b` (defined when `b ≤ a`).
pub fn trivial_extension_zmod(p: usize, a: u32, b: u32) -> FiniteRing {
    let base = zmod(p.pow(a));
    let module = FiniteModule::cyclic_over_zmod(&base, p.pow(b), &corpus_limits()).unwrap();
    FiniteRing::trivial_extension(&base, &module, &corpus_limits()).unwrap()
}

fn is_prime_usize(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn is_prime_power(n: usize) -> bool {
    (2..=n).filter(|&p| is_prime_usize(p)).any(|p| {
        let mut m = n;
        while m.is_multiple_of(p) {
            m /= p;
        }
        m == 1 && n.is_multiple_of(p)
    })
}

/// The non-product corpus families, in a fixed order.
pub fn base_corpus() -> Vec<FiniteRing> {
    let mut rings = Vec::new();
    for n in 2..=30 {
        rings.push(zmod(n));
    }
    for q in [2usize, 3, 4, 5, 7, 8, 9] {
        rings.push(ringenv_core::homsearch::field_of_order(q, &corpus_limits()).unwrap());
    }
    for p in [2u64, 3] {
        for k in 1..=4u32 {
            rings.push(truncated_poly_ring(p, k));
        }
    }
    rings.push(square_zero_plane());
    for (p, a, b) in trivial_extension_shapes() {
        rings.push(trivial_extension_zmod(p, a, b));
    }
    rings
}

/// Exponent pairs for `Z/p^a ⋉ Z/p^b` with order `p^(a+b) ≤ 32` and
/// `b ≤ a` (otherwise the cyclic action is undefined).
pub fn trivial_extension_shapes() -> Vec<(usize, u32, u32)> {
    let mut shapes = Vec::new();
    for p in [2usize, 3, 5] {
        for a in 1..=5u32 {
            for b in 1..=a {
                if p.pow(a + b) <= 32 {
                    shapes.push((p, a, b));
                }
            }
        }
    }
    shapes
}

/// Local members of the base corpus (checked, not assumed).
pub fn corpus_locals() -> Vec<FiniteRing> {
    let mut locals: Vec<FiniteRing> = Vec::new();
    for r in base_corpus() {
        let local = matches!(
            ringenv_core::finring::is_local(&r).unwrap(),
            ringenv_core::finring::Locality::Local { .. }
        );
        debug_assert_eq!(
            local,
            !r.label().starts_with("Z/") || is_prime_power(r.order())
        );
        if local && !locals.iter().any(|s| s.label() == r.label()) {
            locals.push(r);
        }
    }
    locals
}

/// Pairwise products of corpus locals with product order at most 36.
pub fn corpus_products() -> Vec<FiniteRing> {
    let locals = corpus_locals();
    let mut products = Vec::new();
    for i in 0..locals.len() {
        for j in i..locals.len() {
            if locals[i].order() * locals[j].order() <= 36 {
                let p = FiniteRing::product(
                    &[locals[i].clone(), locals[j].clone()],
                    &corpus_limits(),
                )
                .unwrap();
                products.push(p.ring);
            }
        }
    }
    products
}

/// The full sweep corpus: base families plus the products.
pub fn full_corpus() -> Vec<FiniteRing> {
    let mut rings = base_corpus();
    rings.extend(corpus_products());
    rings
}
