//! Bridges zero-dimensional presented algebras to the table backend.

use alloc::string::String;
use alloc::vec::Vec;

use super::groebner::{buchberger, is_zero_dimensional, normal_form, GroebnerBasis};
use super::poly::{Monomial, Polynomial, TermOrder};
use super::{Presentation, PresentedError};
use crate::finring::FiniteRing;
use crate::limits::Limits;

/// A zero-dimensional quotient algebra realized as a [`FiniteRing`],
/// remembering the standard monomial basis so elements can be moved back
/// and forth.
#[derive(Clone, Debug)]
pub struct PresentedQuotient {
    pub ring: FiniteRing,
    pub gb: GroebnerBasis,
    /// The standard monomials indexing coordinates, ascending in the
    /// basis order (the constant monomial first).
    pub monomials: Vec<Monomial>,
    /// Display labels of the standard monomials.
    pub labels: Vec<String>,
}

impl PresentedQuotient {
    fn p(&self) -> u64 {
        self.gb.p
    }

    fn coords_of_index(&self, mut idx: usize) -> Vec<u64> {
        let p = self.p() as usize;
        let mut coords = Vec::with_capacity(self.monomials.len());
        for _ in 0..self.monomials.len() {
            coords.push((idx % p) as u64);
            idx /= p;
        }
        coords
    }

    fn index_of_coords(&self, coords: &[u64]) -> usize {
        let p = self.p() as usize;
        let mut idx = 0usize;
        for &c in coords.iter().rev() {
            idx = idx * p + c as usize;
        }
        idx
    }

    /// The element represented by a polynomial (reduced to normal form).
    pub fn element_of(&self, f: &Polynomial) -> usize {
        let nf = normal_form(f, &self.gb);
        let mut coords = alloc::vec![0u64; self.monomials.len()];
        for (m, c) in nf.terms() {
            let k = self
                .monomials
                .iter()
                .position(|s| s == m)
                .expect("normal form lies in the standard span");
            coords[k] = c;
        }
        self.index_of_coords(&coords)
    }

    /// The normal-form polynomial representing an element.
    pub fn poly_of(&self, idx: usize) -> Polynomial {
        let coords = self.coords_of_index(idx);
        let mut f = Polynomial::zero(self.p(), self.gb.nvars());
        for (k, &c) in coords.iter().enumerate() {
            if c != 0 {
                f = f.add(&Polynomial::monomial(self.p(), self.gb.nvars(), &self.monomials[k].0, c));
            }
        }
        f
    }
}

/// Converts a zero-dimensional presentation into an explicit finite ring
/// of order `p^d`, where `d` is the number of standard monomials.
/// Multiplication is tabulated through the normal forms of the pairwise
/// products of standard monomials. A presentation with the unit ideal
/// yields the degenerate order-1 ring.
pub fn to_finite_ring(
    pres: &Presentation,
    limits: &Limits,
) -> Result<PresentedQuotient, PresentedError> {
    let gb = buchberger(pres, TermOrder::DegRevLex, limits)?;
    if gb.is_unit_ideal() {
        let ring = FiniteRing::from_tables(
            1,
            alloc::vec![0],
            alloc::vec![0],
            0,
            0,
            pres.label(),
            limits,
        )
        .expect("order-1 tables");
        return Ok(PresentedQuotient {
            ring,
            gb,
            monomials: Vec::new(),
            labels: Vec::new(),
        });
    }
    let report = is_zero_dimensional(&gb)?;
    if !report.zero_dimensional {
        return Err(PresentedError::NotZeroDimensional);
    }
    let monomials = report.standard_monomials;
    let d = monomials.len();
    let p = pres.p as usize;
    let mut order = 1usize;
    for _ in 0..d {
        order = order.checked_mul(p).ok_or(PresentedError::SizeLimit {
            requested: usize::MAX,
            cap: limits.max_ring_order,
        })?;
        if order > limits.max_ring_order {
            return Err(PresentedError::SizeLimit {
                requested: order,
                cap: limits.max_ring_order,
            });
        }
    }

    // structure constants: coordinates of s_i * s_j in the standard basis
    let mut struct_coords = alloc::vec![alloc::vec![alloc::vec![0u64; d]; d]; d];
    for i in 0..d {
        for j in 0..=i {
            let prod = Polynomial::monomial(pres.p, pres.vars.len(), &monomials[i].mul(&monomials[j]).0, 1);
            let nf = normal_form(&prod, &gb);
            for (m, c) in nf.terms() {
                let k = monomials.iter().position(|s| s == m).expect("standard monomial");
                struct_coords[i][j][k] = c;
                struct_coords[j][i][k] = c;
            }
        }
    }

    let pq_proto = PresentedQuotient {
        ring: FiniteRing::zmod(1, limits).expect("placeholder"),
        gb: gb.clone(),
        monomials: monomials.clone(),
        labels: Vec::new(),
    };

    let mut add = alloc::vec![0usize; order * order];
    let mut mul = alloc::vec![0usize; order * order];
    for a in 0..order {
        let ca = pq_proto.coords_of_index(a);
        for b in 0..order {
            let cb = pq_proto.coords_of_index(b);
            let mut sum = alloc::vec![0u64; d];
            for k in 0..d {
                sum[k] = (ca[k] + cb[k]) % pres.p;
            }
            add[a * order + b] = pq_proto.index_of_coords(&sum);

            let mut prod = alloc::vec![0u64; d];
            for i in 0..d {
                if ca[i] == 0 {
                    continue;
                }
                for j in 0..d {
                    if cb[j] == 0 {
                        continue;
                    }
                    let scale = (ca[i] * cb[j]) % pres.p;
                    for k in 0..d {
                        let s = struct_coords[i][j][k];
                        if s != 0 {
                            prod[k] = (prod[k] + scale * s) % pres.p;
                        }
                    }
                }
            }
            mul[a * order + b] = pq_proto.index_of_coords(&prod);
        }
    }
    let one_coords: Vec<u64> = monomials
        .iter()
        .map(|m| if m.is_one() { 1 } else { 0 })
        .collect();
    let one = pq_proto.index_of_coords(&one_coords);
    let ring = FiniteRing::from_tables(order, add, mul, 0, one, pres.label(), limits)
        .map_err(PresentedError::Ring)?;
    let labels: Vec<String> = monomials
        .iter()
        .map(|m| {
            Polynomial::monomial(pres.p, pres.vars.len(), &m.0, 1).to_text(&pres.vars, TermOrder::DegRevLex)
        })
        .collect();
    Ok(PresentedQuotient {
        ring,
        gb,
        monomials,
        labels,
    })
}

/// For consecutive pairs `(a, b)` of the given elements, decides whether
/// the principal ideals satisfy `(a) ⊂ (b)` strictly in the quotient
/// ring.
///
/// Membership `a ∈ (b)` is decided by Groebner reduction: `a` reduces to
/// zero modulo the relation ideal extended by `b`. This works at any
/// quotient dimension; the table route (convert and close ideals) is the
/// cross-check for small quotients and is exercised in the tests.
pub fn principal_chain_strict(
    pres: &Presentation,
    elements: &[Polynomial],
    limits: &Limits,
) -> Result<Vec<bool>, PresentedError> {
    let gb = buchberger(pres, TermOrder::DegRevLex, limits)?;
    if gb.is_unit_ideal() {
        return Err(PresentedError::UnitIdeal);
    }
    if !is_zero_dimensional(&gb)?.zero_dimensional {
        return Err(PresentedError::NotZeroDimensional);
    }

    let extended_gb = |b: &Polynomial| -> Result<GroebnerBasis, PresentedError> {
        let mut rels = pres.relations.clone();
        rels.push(b.clone());
        let ext = Presentation::new(pres.p, pres.vars.clone(), rels)?;
        buchberger(&ext, TermOrder::DegRevLex, limits)
    };

    let mut out = Vec::new();
    for pair in elements.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        let in_b = normal_form(a, &extended_gb(b)?).is_zero();
        let in_a = normal_form(b, &extended_gb(a)?).is_zero();
        out.push(in_b && !in_a);
    }
    Ok(out)
}
