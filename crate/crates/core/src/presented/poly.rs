use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

/// Exponent vector of a monomial; the length always equals the number of
/// variables of the ambient presentation. The derived `Ord` (elementwise
/// lexicographic) is only used for canonical storage, not as a term
/// order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(alloc::vec![0; nvars])
    }

    pub fn var(i: usize, nvars: usize) -> Monomial {
        let mut e = alloc::vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees divisibility.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Nonzero exponent on exactly one variable.
    pub fn pure_power_of(&self) -> Option<usize> {
        let mut var = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if var.is_some() {
                    return None;
                }
                var = Some(i);
            }
        }
        var
    }
}

/// Term orders. Variables are ordered `x_1 > x_2 > ...` (lower index
/// greater).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TermOrder {
    /// Degree reverse lexicographic (the default).
    DegRevLex,
    /// Lexicographic.
    Lex,
}

impl TermOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Lex => a.0.cmp(&b.0),
            TermOrder::DegRevLex => {
                let da = a.total_degree();
                let db = b.total_degree();
                if da != db {
                    return da.cmp(&db);
                }
                // equal degree: the monomial with the smaller exponent at
                // the last differing position is the larger one
                for i in (0..a.0.len()).rev() {
                    if a.0[i] != b.0[i] {
                        return b.0[i].cmp(&a.0[i]);
                    }
                }
                Ordering::Equal
            }
        }
    }
}

impl core::fmt::Display for TermOrder {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            TermOrder::DegRevLex => "degrevlex",
            TermOrder::Lex => "lex",
        })
    }
}

pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    (a + b) % p
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a * b) % p
}

pub(crate) fn neg_mod(a: u64, p: u64) -> u64 {
    (p - a % p) % p
}

/// Inverse modulo a prime, by Fermat.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(result, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    result
}

/// An exact multivariate polynomial over the prime field `F_p`.
///
/// Terms are stored in a map keyed by exponent vector; zero coefficients
/// are never stored, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    p: u64,
    nvars: usize,
    terms: BTreeMap<Monomial, u64>,
}

impl Polynomial {
    pub fn zero(p: u64, nvars: usize) -> Polynomial {
        Polynomial {
            p,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(p: u64, nvars: usize, c: u64) -> Polynomial {
        let mut poly = Polynomial::zero(p, nvars);
        if !c.is_multiple_of(p) {
            poly.terms.insert(Monomial::one(nvars), c % p);
        }
        poly
    }

    pub fn var(p: u64, nvars: usize, i: usize) -> Polynomial {
        Polynomial::monomial(p, nvars, &Monomial::var(i, nvars).0, 1)
    }

    /// Single term `c · x^exps`.
    pub fn monomial(p: u64, nvars: usize, exps: &[u32], c: u64) -> Polynomial {
        debug_assert_eq!(exps.len(), nvars);
        let mut poly = Polynomial::zero(p, nvars);
        if !c.is_multiple_of(p) {
            poly.terms.insert(Monomial(exps.to_vec()), c % p);
        }
        poly
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    pub fn coefficient(&self, m: &Monomial) -> u64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    fn insert(&mut self, m: Monomial, c: u64) {
        let c = c % self.p;
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let s = add_mod(*o.get(), c, self.p);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.p, other.p);
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.insert(m.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            p: self.p,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, &c)| (m.clone(), neg_mod(c, self.p)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.p, other.p);
        let mut out = Polynomial::zero(self.p, self.nvars);
        for (m1, &c1) in &self.terms {
            for (m2, &c2) in &other.terms {
                out.insert(m1.mul(m2), mul_mod(c1, c2, self.p));
            }
        }
        out
    }

    pub fn scale(&self, c: u64) -> Polynomial {
        let c = c % self.p;
        if c == 0 {
            return Polynomial::zero(self.p, self.nvars);
        }
        Polynomial {
            p: self.p,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, &k)| (m.clone(), mul_mod(k, c, self.p)))
                .collect(),
        }
    }

    /// Multiplies by the term `c · x^m`.
    pub fn mul_term(&self, m: &Monomial, c: u64) -> Polynomial {
        let c = c % self.p;
        if c == 0 {
            return Polynomial::zero(self.p, self.nvars);
        }
        Polynomial {
            p: self.p,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, &v)| (k.mul(m), mul_mod(v, c, self.p)))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::constant(self.p, self.nvars, 1);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// The leading term under the given order.
    pub fn leading_term(&self, order: TermOrder) -> Option<(&Monomial, u64)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
            .map(|(m, &c)| (m, c))
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, order: TermOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, lc)) => self.scale(inv_mod(lc, self.p)),
        }
    }

    /// Renders terms in descending order with DSL-compatible syntax:
    /// `x^2 + 2*x*y + 1`.
    pub fn to_text(&self, names: &[String], order: TermOrder) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<(&Monomial, u64)> = self.terms.iter().map(|(m, &c)| (m, c)).collect();
        terms.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        let mut out = String::new();
        for (i, (m, c)) in terms.iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            let mut parts: Vec<String> = Vec::new();
            if *c != 1 || m.is_one() {
                parts.push(alloc::format!("{c}"));
            }
            for (v, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(names[v].clone()),
                    _ => parts.push(alloc::format!("{}^{}", names[v], e)),
                }
            }
            out.push_str(&parts.join("*"));
        }
        out
    }
}
