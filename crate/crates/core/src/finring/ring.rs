use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{FinRingError, Ideal, RingHom};
use crate::limits::Limits;

/// A finite commutative unital ring presented by its operation tables.
///
/// Elements are the indices `0..order`. The order-1 ring (in which
/// `0 = 1`) is permitted as a degenerate value so that quotient and
/// product constructors stay total; the envelope deciders reject it.
#[derive(Clone)]
pub struct FiniteRing {
    order: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    zero: usize,
    one: usize,
    label: String,
}

impl PartialEq for FiniteRing {
    /// Structural equality on the tables; the label is cosmetic.
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && self.zero == other.zero
            && self.one == other.one
            && self.add == other.add
            && self.mul == other.mul
    }
}

impl Eq for FiniteRing {}

impl core::fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "FiniteRing({}, order {})", self.label, self.order)
    }
}

impl core::fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.label)
    }
}

impl FiniteRing {
    /// Builds a ring from explicit tables, checking every ring axiom
    /// exhaustively (commutativity, associativity, distributivity,
    /// identities, additive inverses).
    pub fn from_tables(
        order: usize,
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        one: usize,
        label: impl Into<String>,
        limits: &Limits,
    ) -> Result<FiniteRing, FinRingError> {
        if order == 0 {
            return Err(FinRingError::InvalidTables("order must be at least 1".into()));
        }
        if order > limits.max_ring_order {
            return Err(FinRingError::SizeLimit {
                requested: order,
                cap: limits.max_ring_order,
            });
        }
        if add.len() != order * order || mul.len() != order * order {
            return Err(FinRingError::InvalidTables(format!(
                "tables must have {} entries",
                order * order
            )));
        }
        if add.iter().chain(mul.iter()).any(|&e| e >= order) {
            return Err(FinRingError::InvalidTables("table entry out of range".into()));
        }
        if zero >= order || one >= order {
            return Err(FinRingError::InvalidTables("zero or one out of range".into()));
        }
        if (zero == one) != (order == 1) {
            return Err(FinRingError::InvalidTables(
                "zero = one exactly in the order-1 ring".into(),
            ));
        }

        let at = |t: &[usize], a: usize, b: usize| t[a * order + b];
        let mut neg = vec![usize::MAX; order];
        for a in 0..order {
            if at(&add, a, zero) != a {
                return Err(FinRingError::InvalidTables(format!("{a} + 0 != {a}")));
            }
            if at(&mul, a, one) != a {
                return Err(FinRingError::InvalidTables(format!("{a} * 1 != {a}")));
            }
            for b in 0..order {
                if at(&add, a, b) == zero {
                    neg[a] = b;
                }
            }
            if neg[a] == usize::MAX {
                return Err(FinRingError::InvalidTables(format!("{a} has no additive inverse")));
            }
        }
        for a in 0..order {
            for b in 0..order {
                if at(&add, a, b) != at(&add, b, a) {
                    return Err(FinRingError::InvalidTables(format!("addition not commutative at ({a},{b})")));
                }
                if at(&mul, a, b) != at(&mul, b, a) {
                    return Err(FinRingError::InvalidTables(format!("multiplication not commutative at ({a},{b})")));
                }
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = at(&add, a, b);
                let mab = at(&mul, a, b);
                for c in 0..order {
                    if at(&add, ab, c) != at(&add, a, at(&add, b, c)) {
                        return Err(FinRingError::InvalidTables(format!("addition not associative at ({a},{b},{c})")));
                    }
                    if at(&mul, mab, c) != at(&mul, a, at(&mul, b, c)) {
                        return Err(FinRingError::InvalidTables(format!("multiplication not associative at ({a},{b},{c})")));
                    }
                    if at(&mul, a, at(&add, b, c)) != at(&add, at(&mul, a, b), at(&mul, a, c)) {
                        return Err(FinRingError::InvalidTables(format!("distributivity fails at ({a},{b},{c})")));
                    }
                }
            }
        }

        Ok(FiniteRing {
            order,
            add,
            mul,
            neg,
            zero,
            one,
            label: label.into(),
        })
    }

    /// The ring `Z/n` with elements `0..n` and the usual residue tables.
    pub fn zmod(n: usize, limits: &Limits) -> Result<FiniteRing, FinRingError> {
        if n == 0 {
            return Err(FinRingError::InvalidTables("modulus must be positive".into()));
        }
        if n > limits.max_ring_order {
            return Err(FinRingError::SizeLimit {
                requested: n,
                cap: limits.max_ring_order,
            });
        }
        let mut add = vec![0usize; n * n];
        let mut mul = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = (a + b) % n;
                mul[a * n + b] = (a * b) % n;
            }
        }
        let one = if n == 1 { 0 } else { 1 };
        FiniteRing::from_tables(n, add, mul, 0, one, format!("Z/{n}"), limits)
    }

    /// Componentwise product of the given factors.
    ///
    /// The element with component index `c_i` in factor `i` gets index
    /// `c_1 + o_1*(c_2 + o_2*(...))`, so the first factor varies fastest.
    pub fn product(factors: &[FiniteRing], limits: &Limits) -> Result<ProductRing, FinRingError> {
        assert!(!factors.is_empty(), "product of no factors");
        let mut order = 1usize;
        for f in factors {
            order = order.saturating_mul(f.order);
            if order > limits.max_ring_order {
                return Err(FinRingError::SizeLimit {
                    requested: order,
                    cap: limits.max_ring_order,
                });
            }
        }
        let orders: Vec<usize> = factors.iter().map(|f| f.order).collect();
        let encode = |cs: &[usize]| -> usize {
            let mut idx = 0usize;
            for (c, o) in cs.iter().zip(orders.iter()).rev() {
                idx = idx * o + c;
            }
            idx
        };
        let decode = |mut idx: usize| -> Vec<usize> {
            let mut cs = Vec::with_capacity(orders.len());
            for &o in &orders {
                cs.push(idx % o);
                idx /= o;
            }
            cs
        };

        let mut add = vec![0usize; order * order];
        let mut mul = vec![0usize; order * order];
        let mut comps = vec![0usize; factors.len()];
        for a in 0..order {
            let ca = decode(a);
            for b in 0..order {
                let cb = decode(b);
                for (i, f) in factors.iter().enumerate() {
                    comps[i] = f.add(ca[i], cb[i]);
                }
                add[a * order + b] = encode(&comps);
                for (i, f) in factors.iter().enumerate() {
                    comps[i] = f.mul(ca[i], cb[i]);
                }
                mul[a * order + b] = encode(&comps);
            }
        }
        let zero = encode(&factors.iter().map(|f| f.zero).collect::<Vec<_>>());
        let one = encode(&factors.iter().map(|f| f.one).collect::<Vec<_>>());
        let label = factors
            .iter()
            .map(|f| f.label.clone())
            .collect::<Vec<_>>()
            .join(" x ");
        let ring = FiniteRing::from_tables(order, add, mul, zero, one, label, limits)?;

        let mut idempotents = Vec::with_capacity(factors.len());
        let mut projections = Vec::with_capacity(factors.len());
        for (i, f) in factors.iter().enumerate() {
            let mut cs: Vec<usize> = factors.iter().map(|g| g.zero).collect();
            cs[i] = f.one;
            idempotents.push(encode(&cs));
            let image: Vec<usize> = (0..order).map(|x| decode(x)[i]).collect();
            projections.push(RingHom::new(ring.clone(), f.clone(), image).expect("projection is a ring map"));
        }
        Ok(ProductRing {
            ring,
            idempotents,
            projections,
        })
    }

    /// Quotient by an ideal, together with the projection map.
    ///
    /// Cosets are represented by their least element; cosets are numbered
    /// in increasing representative order, so the zero coset is element 0.
    pub fn quotient(&self, ideal: &Ideal) -> Result<(FiniteRing, RingHom), FinRingError> {
        if !ideal.is_valid(self) {
            return Err(FinRingError::NotIdeal);
        }
        let n = self.order;
        let mut rep = vec![usize::MAX; n];
        for x in 0..n {
            let r = ideal
                .members()
                .iter()
                .map(|&i| self.add(x, i))
                .min()
                .expect("ideal contains zero");
            rep[x] = r;
        }
        let mut reps: Vec<usize> = rep.clone();
        reps.sort_unstable();
        reps.dedup();
        let order = reps.len();
        let class_of = |x: usize| reps.binary_search(&rep[x]).expect("representative present");

        let mut add = vec![0usize; order * order];
        let mut mul = vec![0usize; order * order];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                add[i * order + j] = class_of(self.add(a, b));
                mul[i * order + j] = class_of(self.mul(a, b));
            }
        }
        let zero = class_of(self.zero);
        let one = class_of(self.one);
        let label = format!("{}/{}", self.label, ideal);
        // The quotient of a valid ring is a valid ring; the order can only
        // shrink, so the full check stays cheap.
        let q = FiniteRing::from_tables(order, add, mul, zero, one, label, &Limits::with_ring_order(n))?;
        let image: Vec<usize> = (0..n).map(class_of).collect();
        let proj = RingHom::new(self.clone(), q.clone(), image).expect("projection is a ring map");
        Ok((q, proj))
    }

    /// Trivial extension `A ⋉ M`: the ring on `A ⊕ M` with
    /// `(a,m)·(b,n) = (ab, a·n + b·m)`. The pair `(a, m)` has index
    /// `a·|M| + m`. `0 ⋉ M` is a square-zero ideal.
    pub fn trivial_extension(
        a: &FiniteRing,
        module: &FiniteModule,
        limits: &Limits,
    ) -> Result<FiniteRing, FinRingError> {
        module.check_over(a)?;
        let ms = module.size;
        let order = a.order.saturating_mul(ms);
        if order > limits.max_ring_order {
            return Err(FinRingError::SizeLimit {
                requested: order,
                cap: limits.max_ring_order,
            });
        }
        let enc = |x: usize, m: usize| x * ms + m;
        let mut add = vec![0usize; order * order];
        let mut mul = vec![0usize; order * order];
        for x in 0..a.order {
            for m in 0..ms {
                let i = enc(x, m);
                for y in 0..a.order {
                    for n in 0..ms {
                        let j = enc(y, n);
                        add[i * order + j] = enc(a.add(x, y), module.add(m, n));
                        mul[i * order + j] =
                            enc(a.mul(x, y), module.add(module.act(x, n), module.act(y, m)));
                    }
                }
            }
        }
        let zero = enc(a.zero, module.zero);
        let one = enc(a.one, module.zero);
        let label = format!("triv({}; {})", a.label, module.label);
        FiniteRing::from_tables(order, add, mul, zero, one, label, limits)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Replaces the display label.
    pub fn relabel(mut self, label: impl Into<String>) -> FiniteRing {
        self.label = label.into();
        self
    }

    /// The order-1 ring, in which `0 = 1`.
    pub fn is_degenerate(&self) -> bool {
        self.order == 1
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut acc = self.one;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order
    }

    pub fn is_nilpotent(&self, a: usize) -> bool {
        let mut x = a;
        for _ in 0..self.order {
            if x == self.zero {
                return true;
            }
            x = self.mul(x, a);
        }
        x == self.zero
    }

    pub fn is_unit(&self, a: usize) -> bool {
        (0..self.order).any(|b| self.mul(a, b) == self.one)
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    /// Nonzero ring in which every nonzero element is invertible.
    pub fn is_field(&self) -> bool {
        self.order > 1 && (0..self.order).all(|a| a == self.zero || self.is_unit(a))
    }

    /// No nonzero nilpotent elements.
    pub fn is_reduced(&self) -> bool {
        (0..self.order).all(|a| a == self.zero || !self.is_nilpotent(a))
    }

    /// Finite commutative rings are semisimple exactly when they are
    /// reduced (a reduced finite ring is a product of fields).
    pub fn is_semisimple(&self) -> bool {
        self.order > 1 && self.is_reduced()
    }

    /// Nonzero ring without zero divisors. Finite integral domains are
    /// fields, so this agrees with [`FiniteRing::is_field`].
    pub fn is_domain(&self) -> bool {
        self.order > 1
            && (0..self.order).all(|a| {
                a == self.zero
                    || (0..self.order).all(|b| b == self.zero || self.mul(a, b) != self.zero)
            })
    }

    /// The unital subring on a subset closed under both operations and
    /// containing 0 and 1. Returns the relabeled ring and the inclusion
    /// map into `self`.
    pub fn subring(&self, elements: &[usize]) -> Result<(FiniteRing, RingHom), FinRingError> {
        let mut elems = elements.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if !elems.contains(&self.zero) || !elems.contains(&self.one) {
            return Err(FinRingError::InvalidTables("subring must contain 0 and 1".into()));
        }
        let order = elems.len();
        let pos = |x: usize| -> Result<usize, FinRingError> {
            elems
                .binary_search(&x)
                .map_err(|_| FinRingError::InvalidTables("subset not closed".into()))
        };
        let mut add = vec![0usize; order * order];
        let mut mul = vec![0usize; order * order];
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                add[i * order + j] = pos(self.add(a, b))?;
                mul[i * order + j] = pos(self.mul(a, b))?;
            }
        }
        let zero = pos(self.zero)?;
        let one = pos(self.one)?;
        let label = format!("{}|{{{} elems}}", self.label, order);
        let sub = FiniteRing::from_tables(
            order,
            add,
            mul,
            zero,
            one,
            label,
            &Limits::with_ring_order(self.order),
        )?;
        let incl = RingHom::new(sub.clone(), self.clone(), elems)?;
        Ok((sub, incl))
    }

    /// Raw addition table in row-major order (for serialization).
    pub fn add_table(&self) -> &[usize] {
        &self.add
    }

    /// Raw multiplication table in row-major order (for serialization).
    pub fn mul_table(&self) -> &[usize] {
        &self.mul
    }
}

/// A product ring together with its canonical idempotents `e_i` and the
/// component projections.
#[derive(Clone, Debug)]
pub struct ProductRing {
    pub ring: FiniteRing,
    pub idempotents: Vec<usize>,
    pub projections: Vec<RingHom>,
}

/// A finite module over a [`FiniteRing`], given by the addition table of
/// its underlying abelian group and the scalar action table.
#[derive(Clone, Debug)]
pub struct FiniteModule {
    size: usize,
    add: Vec<usize>,
    zero: usize,
    /// `action[r * size + m]` is `r · m`.
    action: Vec<usize>,
    ring_order: usize,
    label: String,
}

impl FiniteModule {
    /// Validates the abelian-group axioms and the module axioms
    /// (`1·m = m`, `(a+b)·m = a·m + b·m`, `a·(m+n) = a·m + a·n`,
    /// `(ab)·m = a·(b·m)`).
    pub fn new(
        ring: &FiniteRing,
        size: usize,
        add: Vec<usize>,
        zero: usize,
        action: Vec<usize>,
        label: impl Into<String>,
    ) -> Result<FiniteModule, FinRingError> {
        if size == 0 {
            return Err(FinRingError::InvalidAction("module must contain zero".into()));
        }
        if add.len() != size * size || zero >= size {
            return Err(FinRingError::InvalidAction("bad addition table shape".into()));
        }
        if action.len() != ring.order * size {
            return Err(FinRingError::InvalidAction("bad action table shape".into()));
        }
        if add.iter().chain(action.iter()).any(|&e| e >= size) {
            return Err(FinRingError::InvalidAction("table entry out of range".into()));
        }
        let at = |a: usize, b: usize| add[a * size + b];
        for m in 0..size {
            if at(m, zero) != m {
                return Err(FinRingError::InvalidAction("zero is not neutral".into()));
            }
            if (0..size).all(|n| at(m, n) != zero) {
                return Err(FinRingError::InvalidAction("missing additive inverse".into()));
            }
            for n in 0..size {
                if at(m, n) != at(n, m) {
                    return Err(FinRingError::InvalidAction("addition not commutative".into()));
                }
                for k in 0..size {
                    if at(at(m, n), k) != at(m, at(n, k)) {
                        return Err(FinRingError::InvalidAction("addition not associative".into()));
                    }
                }
            }
        }
        let act = |r: usize, m: usize| action[r * size + m];
        for m in 0..size {
            if act(ring.one, m) != m {
                return Err(FinRingError::InvalidAction("1 does not act as identity".into()));
            }
        }
        for r in 0..ring.order {
            for s in 0..ring.order {
                for m in 0..size {
                    if act(ring.add(r, s), m) != at(act(r, m), act(s, m)) {
                        return Err(FinRingError::InvalidAction(
                            "action not additive in the scalar".into(),
                        ));
                    }
                    if act(ring.mul(r, s), m) != act(r, act(s, m)) {
                        return Err(FinRingError::InvalidAction("action not associative".into()));
                    }
                }
            }
        }
        for r in 0..ring.order {
            for m in 0..size {
                for n in 0..size {
                    if act(r, at(m, n)) != at(act(r, m), act(r, n)) {
                        return Err(FinRingError::InvalidAction(
                            "action not additive in the module".into(),
                        ));
                    }
                }
            }
        }
        Ok(FiniteModule {
            size,
            add,
            zero,
            action,
            ring_order: ring.order,
            label: label.into(),
        })
    }

    /// The zero module.
    pub fn zero_module(ring: &FiniteRing) -> FiniteModule {
        FiniteModule {
            size: 1,
            add: vec![0],
            zero: 0,
            action: vec![0; ring.order],
            ring_order: ring.order,
            label: "0".into(),
        }
    }

    /// The ring acting on itself.
    pub fn regular(ring: &FiniteRing) -> FiniteModule {
        let size = ring.order;
        FiniteModule {
            size,
            add: ring.add.clone(),
            zero: ring.zero,
            action: ring.mul.clone(),
            ring_order: size,
            label: ring.label.clone(),
        }
    }

    /// `Z/m` as a module over `Z/n` via `x · v = x v mod m`; valid exactly
    /// when `m` divides `n`.
    pub fn cyclic_over_zmod(zmod_n: &FiniteRing, m: usize, limits: &Limits) -> Result<FiniteModule, FinRingError> {
        let _ = limits;
        let n = zmod_n.order;
        if m == 0 {
            return Err(FinRingError::InvalidAction("module order must be positive".into()));
        }
        let mut add = vec![0usize; m * m];
        for a in 0..m {
            for b in 0..m {
                add[a * m + b] = (a + b) % m;
            }
        }
        let mut action = vec![0usize; n * m];
        for r in 0..n {
            for v in 0..m {
                action[r * m + v] = (r * v) % m;
            }
        }
        FiniteModule::new(zmod_n, m, add, 0, action, format!("Z/{m}"))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    #[inline]
    pub fn act(&self, r: usize, m: usize) -> usize {
        self.action[r * self.size + m]
    }

    fn check_over(&self, ring: &FiniteRing) -> Result<(), FinRingError> {
        if self.ring_order != ring.order {
            return Err(FinRingError::InvalidAction(
                "module was built over a ring of different order".to_string(),
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn zmod_one_is_degenerate() {
        let r = FiniteRing::zmod(1, &lim()).unwrap();
        assert!(r.is_degenerate());
        assert_eq!(r.zero(), r.one());
    }

    #[test]
    fn zmod_four_arithmetic() {
        let r = FiniteRing::zmod(4, &lim()).unwrap();
        assert_eq!(r.add(2, 3), 1);
        assert_eq!(r.mul(2, 2), 0);
        assert!(!r.is_degenerate());
    }

    #[test]
    fn zmod_twelve_passes_axiom_check() {
        // from_tables re-verifies every axiom exhaustively
        let r = FiniteRing::zmod(12, &lim()).unwrap();
        assert_eq!(r.order(), 12);
    }

    #[test]
    fn zmod_cap_exceeded() {
        let err = FiniteRing::zmod(65, &lim()).unwrap_err();
        assert!(matches!(err, FinRingError::SizeLimit { .. }));
    }

    #[test]
    fn product_of_z2_z3_has_order_six() {
        let z2 = FiniteRing::zmod(2, &lim()).unwrap();
        let z3 = FiniteRing::zmod(3, &lim()).unwrap();
        let p = FiniteRing::product(&[z2, z3], &lim()).unwrap();
        assert_eq!(p.ring.order(), 6);
        assert_eq!(p.idempotents.len(), 2);
        for &e in &p.idempotents {
            assert!(p.ring.is_idempotent(e));
        }
    }

    #[test]
    fn singleton_product_is_relabeling() {
        let k = FiniteRing::zmod(5, &lim()).unwrap();
        let p = FiniteRing::product(core::slice::from_ref(&k), &lim()).unwrap();
        assert_eq!(p.ring, k);
    }

    #[test]
    fn product_z2_z2_has_four_idempotents() {
        let z2 = FiniteRing::zmod(2, &lim()).unwrap();
        let p = FiniteRing::product(&[z2.clone(), z2], &lim()).unwrap();
        let count = p.ring.elements().filter(|&e| p.ring.is_idempotent(e)).count();
        assert_eq!(count, 4);
    }

    #[test]
    fn quotient_of_z4_by_its_maximal_ideal() {
        let r = FiniteRing::zmod(4, &lim()).unwrap();
        let i = Ideal::new(&r, alloc::vec![0, 2]).unwrap();
        let (q, proj) = r.quotient(&i).unwrap();
        assert_eq!(q.order(), 2);
        assert!(proj.is_surjective());
        assert_eq!(proj.kernel(), alloc::vec![0, 2]);
    }

    #[test]
    fn quotient_by_zero_ideal_is_the_identity() {
        let r = FiniteRing::zmod(6, &lim()).unwrap();
        let (q, proj) = r.quotient(&Ideal::zero(&r)).unwrap();
        assert_eq!(q, r);
        assert!(proj.is_bijective());
    }

    #[test]
    fn quotient_of_z12_by_its_nilradical() {
        let r = FiniteRing::zmod(12, &lim()).unwrap();
        let nil = Ideal::new(&r, alloc::vec![0, 6]).unwrap();
        let (q, _) = r.quotient(&nil).unwrap();
        assert_eq!(q.order(), 6);
        assert!(q.is_reduced());
    }

    #[test]
    fn trivial_extension_by_zero_module_is_the_ring() {
        let a = FiniteRing::zmod(6, &lim()).unwrap();
        let m = FiniteModule::zero_module(&a);
        let r = FiniteRing::trivial_extension(&a, &m, &lim()).unwrap();
        assert_eq!(r.order(), 6);
        assert_eq!(r, FiniteRing::zmod(6, &lim()).unwrap());
    }

    #[test]
    fn trivial_extension_z4_by_z2() {
        let a = FiniteRing::zmod(4, &lim()).unwrap();
        let m = FiniteModule::cyclic_over_zmod(&a, 2, &lim()).unwrap();
        let r = FiniteRing::trivial_extension(&a, &m, &lim()).unwrap();
        assert_eq!(r.order(), 8);
        // (0,1)^2 = 0: the extension part squares to zero
        let x = 1;
        assert_eq!(r.mul(x, x), r.zero());
        // the non-units are exactly the pairs with even first component
        let non_units: Vec<usize> = r.elements().filter(|&e| !r.is_unit(e)).collect();
        assert_eq!(non_units, alloc::vec![0, 1, 4, 5]);
    }

    #[test]
    fn cyclic_module_needs_divisibility() {
        let a = FiniteRing::zmod(2, &lim()).unwrap();
        assert!(FiniteModule::cyclic_over_zmod(&a, 4, &lim()).is_err());
    }
}
