//! Buchberger's algorithm with the normal selection strategy.
//!
//! Pair selection is deterministic: lowest lcm degree first, ties broken
//! by generator indices. The product criterion (coprime leading
//! monomials) discards pairs whose S-polynomial reduces trivially. The
//! returned basis is reduced: monic, auto-reduced, sorted by leading
//! monomial in descending order.

use alloc::string::String;
use alloc::vec::Vec;

use super::poly::{inv_mod, Monomial, Polynomial, TermOrder};
use super::{Presentation, PresentedError};
use crate::limits::Limits;

/// A reduced Groebner basis of a presentation's relation ideal.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub p: u64,
    pub vars: Vec<String>,
    pub order: TermOrder,
    pub basis: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// The ideal contains 1.
    pub fn is_unit_ideal(&self) -> bool {
        self.basis.iter().any(|g| {
            g.leading_term(self.order)
                .map(|(m, _)| m.is_one())
                .unwrap_or(false)
        })
    }
}

/// Full reduction of `f` modulo `basis`: repeatedly cancels the leading
/// term if some basis leading monomial divides it, otherwise moves it to
/// the remainder. Deterministic (first dividing basis element wins); on a
/// Groebner basis the remainder is unique regardless.
fn reduce(f: &Polynomial, basis: &[Polynomial], order: TermOrder) -> Polynomial {
    let p = f.characteristic();
    let mut work = f.clone();
    let mut remainder = Polynomial::zero(p, f.nvars());
    'outer: while let Some((lm, lc)) = work.leading_term(order) {
        let lm = lm.clone();
        for g in basis {
            if let Some((gm, gc)) = g.leading_term(order) {
                if gm.divides(&lm) {
                    let factor = gm.div_into(&lm);
                    let scale = super::poly::mul_mod(lc, inv_mod(gc, p), p);
                    work = work.sub(&g.mul_term(&factor, scale));
                    continue 'outer;
                }
            }
        }
        let term = Polynomial::monomial(p, work.nvars(), &lm.0, lc);
        remainder = remainder.add(&term);
        work = work.sub(&term);
    }
    remainder
}

/// The unique remainder of `f` modulo the basis; idempotent.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    reduce(f, &gb.basis, gb.order)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, order: TermOrder) -> Polynomial {
    let p = f.characteristic();
    let (fm, fc) = f.leading_term(order).expect("nonzero");
    let (gm, gc) = g.leading_term(order).expect("nonzero");
    let lcm = fm.lcm(gm);
    let f_scaled = f.mul_term(&fm.div_into(&lcm), inv_mod(fc, p));
    let g_scaled = g.mul_term(&gm.div_into(&lcm), inv_mod(gc, p));
    f_scaled.sub(&g_scaled)
}

/// Computes the reduced Groebner basis of the presentation's relations.
pub fn buchberger(
    pres: &Presentation,
    order: TermOrder,
    limits: &Limits,
) -> Result<GroebnerBasis, PresentedError> {
    if pres.vars.len() > limits.max_vars {
        return Err(PresentedError::SizeLimit {
            requested: pres.vars.len(),
            cap: limits.max_vars,
        });
    }
    let mut basis: Vec<Polynomial> = pres
        .relations
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| f.monic(order))
        .collect();

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }
    let mut budget = limits.spair_budget;
    while !pairs.is_empty() {
        // normal strategy: lowest lcm degree, ties by index
        let best = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, &(i, j))| {
                let lm_i = basis[i].leading_term(order).expect("nonzero").0;
                let lm_j = basis[j].leading_term(order).expect("nonzero").0;
                (lm_i.lcm(lm_j).total_degree(), i, j)
            })
            .map(|(k, _)| k)
            .expect("nonempty");
        let (i, j) = pairs.swap_remove(best);

        let lm_i = basis[i].leading_term(order).expect("nonzero").0;
        let lm_j = basis[j].leading_term(order).expect("nonzero").0;
        if lm_i.coprime(lm_j) {
            continue;
        }
        if budget == 0 {
            return Err(PresentedError::ResourceLimit);
        }
        budget -= 1;

        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = reduce(&s, &basis, order);
        if !r.is_zero() {
            let r = r.monic(order);
            let new_idx = basis.len();
            basis.push(r);
            for k in 0..new_idx {
                pairs.push((k, new_idx));
            }
        }
    }

    // minimize: drop elements whose leading monomial another one divides
    let mut keep: Vec<bool> = alloc::vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let lm_i = basis[i].leading_term(order).expect("nonzero").0.clone();
        for j in 0..basis.len() {
            if i != j && keep[j] {
                let lm_j = basis[j].leading_term(order).expect("nonzero").0;
                if lm_j.divides(&lm_i) && (!lm_i.divides(lm_j) || j < i) {
                    keep[i] = false;
                    break;
                }
            }
        }
    }
    let minimal: Vec<Polynomial> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();

    // inter-reduce: replace each element by its remainder modulo the rest
    let mut reduced = minimal;
    loop {
        let mut changed = false;
        for i in 0..reduced.len() {
            let others: Vec<Polynomial> = reduced
                .iter()
                .enumerate()
                .filter(|&(j, _g)| j != i).map(|(_j, g)| g.clone())
                .collect();
            let r = reduce(&reduced[i], &others, order).monic(order);
            if r != reduced[i] {
                reduced[i] = r;
                changed = true;
            }
        }
        reduced.retain(|g| !g.is_zero());
        if !changed {
            break;
        }
    }
    reduced.sort_by(|a, b| {
        let la = a.leading_term(order).expect("nonzero").0;
        let lb = b.leading_term(order).expect("nonzero").0;
        order.cmp(lb, la)
    });

    Ok(GroebnerBasis {
        p: pres.p,
        vars: pres.vars.clone(),
        order,
        basis: reduced,
    })
}

/// Post-hoc Buchberger criterion: every S-polynomial of basis pairs
/// reduces to zero.
pub fn verify_basis(gb: &GroebnerBasis) -> bool {
    for i in 0..gb.basis.len() {
        for j in (i + 1)..gb.basis.len() {
            let s = s_polynomial(&gb.basis[i], &gb.basis[j], gb.order);
            if !reduce(&s, &gb.basis, gb.order).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Zero-dimensionality report: the quotient is a finite-dimensional
/// vector space exactly when every variable has a pure power among the
/// leading monomials. `standard_monomials` lists the monomials outside
/// the leading-term ideal, sorted ascending by the basis order; it is
/// empty when the ideal is not zero-dimensional.
#[derive(Clone, Debug)]
pub struct ZeroDimReport {
    pub zero_dimensional: bool,
    pub standard_monomials: Vec<Monomial>,
}

impl ZeroDimReport {
    pub fn dimension(&self) -> usize {
        self.standard_monomials.len()
    }
}

/// Decides zero-dimensionality and enumerates the standard monomials.
pub fn is_zero_dimensional(gb: &GroebnerBasis) -> Result<ZeroDimReport, PresentedError> {
    if gb.is_unit_ideal() {
        return Err(PresentedError::UnitIdeal);
    }
    let nvars = gb.nvars();
    let leading: Vec<Monomial> = gb
        .basis
        .iter()
        .map(|g| g.leading_term(gb.order).expect("nonzero").0.clone())
        .collect();

    // minimal pure-power exponent per variable
    let mut bound = alloc::vec![u32::MAX; nvars];
    for lm in &leading {
        if let Some(v) = lm.pure_power_of() {
            bound[v] = bound[v].min(lm.0[v]);
        }
    }
    if nvars == 0 {
        return Ok(ZeroDimReport {
            zero_dimensional: true,
            standard_monomials: alloc::vec![Monomial::one(0)],
        });
    }
    if bound.contains(&u32::MAX) {
        return Ok(ZeroDimReport {
            zero_dimensional: false,
            standard_monomials: Vec::new(),
        });
    }

    let mut standard: Vec<Monomial> = Vec::new();
    let mut exps = alloc::vec![0u32; nvars];
    loop {
        let m = Monomial(exps.clone());
        if !leading.iter().any(|lm| lm.divides(&m)) {
            standard.push(m);
        }
        let mut i = 0;
        loop {
            if i == nvars {
                standard.sort_by(|a, b| gb.order.cmp(a, b));
                return Ok(ZeroDimReport {
                    zero_dimensional: true,
                    standard_monomials: standard,
                });
            }
            exps[i] += 1;
            if exps[i] < bound[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}
