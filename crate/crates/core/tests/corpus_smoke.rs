//! Sanity and sizing checks for the shared corpus.

mod common;

use std::time::Instant;

#[test]
fn corpus_builds_and_reports_sizes() {
    let t = Instant::now();
    let base = common::base_corpus();
    let locals = common::corpus_locals();
    let products = common::corpus_products();
    println!(
        "base {} locals {} products {} ({} ms)",
        base.len(),
        locals.len(),
        products.len(),
        t.elapsed().as_millis()
    );
    assert_eq!(base.len(), 29 + 7 + 8 + 1 + common::trivial_extension_shapes().len());
    assert!(products.iter().all(|r| r.order() <= 36));
    assert!(!products.is_empty());
}

#[test]
fn spectrum_sweep_is_fast() {
    let t = Instant::now();
    let mut total_primes = 0usize;
    for r in common::full_corpus() {
        total_primes += ringenv_core::finring::spectrum(&r).unwrap().len();
    }
    println!("spectrum sweep: {} primes ({} ms)", total_primes, t.elapsed().as_millis());
}

#[test]
fn hom_enumeration_worst_case_timing() {
    let limits = common::corpus_limits();
    let f4 = ringenv_core::homsearch::field_of_order(4, &limits).unwrap();
    let f9 = ringenv_core::homsearch::field_of_order(9, &limits).unwrap();
    let big = ringenv_core::finring::FiniteRing::product(&[f4, f9], &limits).unwrap();
    let t = Instant::now();
    let mut homs = 0;
    for q in [2usize, 3, 4, 5, 7, 8, 9] {
        let s = ringenv_core::homsearch::field_of_order(q, &limits).unwrap();
        homs += ringenv_core::homsearch::enumerate_homs(&big.ring, &s, &limits)
            .unwrap()
            .len();
    }
    println!("F4xF9 -> fields: {} homs ({} ms)", homs, t.elapsed().as_millis());
    assert!(t.elapsed().as_secs() < 30);
}
