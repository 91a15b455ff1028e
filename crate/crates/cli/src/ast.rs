//! Abstract syntax of the ring description DSL.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr    := term ('x' term)*
//! term    := 'Z/'INT | 'F'INT | 'F'INT'['ids']' '/' '('polys')'
//!          | 'triv(' base ';' module ')' | 'Zp('INT')' | 'Q' | 'Z'
//!          | 'fib('INT','INT')'
//! module  := summand ('+' summand)*
//! summand := 'free('INT')' | 'cyc('INT'^'INT')' | 'pruefer('INT')' | 'Q'
//! poly    := ('-')? mono (('+'|'-') mono)*
//! mono    := factor ('*' factor)*
//! factor  := INT | IDENT ('^' INT)?
//! ```

use std::fmt;

use ringenv_core::presented::{Polynomial, TermOrder};

/// A ring expression. Products appear only at the top level, mirroring
/// the grammar.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RingExpr {
    ZMod(u64),
    GF(u64),
    Presented {
        p: u64,
        vars: Vec<String>,
        relations: Vec<Polynomial>,
    },
    TrivExt {
        base: BaseExpr,
        summands: Vec<SummandExpr>,
    },
    SymBase(BaseExpr),
    FibTrunc {
        p: u64,
        m: usize,
    },
    Product(Vec<RingExpr>),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BaseExpr {
    Zp(u64),
    Z,
    Q,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SummandExpr {
    Free(u64),
    Cyc(u64, u32),
    Pruefer(u64),
    Q,
}

impl fmt::Display for BaseExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseExpr::Zp(p) => write!(f, "Zp({p})"),
            BaseExpr::Z => f.write_str("Z"),
            BaseExpr::Q => f.write_str("Q"),
        }
    }
}

impl fmt::Display for SummandExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SummandExpr::Free(k) => write!(f, "free({k})"),
            SummandExpr::Cyc(p, k) => write!(f, "cyc({p}^{k})"),
            SummandExpr::Pruefer(p) => write!(f, "pruefer({p})"),
            SummandExpr::Q => f.write_str("Q"),
        }
    }
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::ZMod(n) => write!(f, "Z/{n}"),
            RingExpr::GF(q) => write!(f, "F{q}"),
            RingExpr::Presented { p, vars, relations } => {
                let rels: Vec<String> = relations
                    .iter()
                    .map(|r| r.to_text(vars, TermOrder::DegRevLex))
                    .collect();
                write!(f, "F{p}[{}]/({})", vars.join(","), rels.join(", "))
            }
            RingExpr::TrivExt { base, summands } => {
                let parts: Vec<String> = summands.iter().map(|s| s.to_string()).collect();
                write!(f, "triv({base}; {})", parts.join(" + "))
            }
            RingExpr::SymBase(base) => base.fmt(f),
            RingExpr::FibTrunc { p, m } => write!(f, "fib({p},{m})"),
            RingExpr::Product(terms) => {
                let parts: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
                f.write_str(&parts.join(" x "))
            }
        }
    }
}

impl RingExpr {
    /// Which backend evaluates this expression.
    pub fn backend(&self) -> Backend {
        match self {
            RingExpr::ZMod(_) | RingExpr::GF(_) => Backend::Finite,
            RingExpr::Presented { .. } | RingExpr::FibTrunc { .. } => Backend::Presented,
            RingExpr::TrivExt { .. } | RingExpr::SymBase(_) => Backend::Symbolic,
            RingExpr::Product(terms) => {
                if terms.iter().any(|t| t.backend() == Backend::Symbolic) {
                    Backend::Symbolic
                } else if terms.iter().any(|t| t.backend() == Backend::Presented) {
                    Backend::Presented
                } else {
                    Backend::Finite
                }
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Backend {
    Finite,
    Presented,
    Symbolic,
}

impl Backend {
    pub fn name(&self) -> &'static str {
        match self {
            Backend::Finite => "finite",
            Backend::Presented => "presented",
            Backend::Symbolic => "symbolic",
        }
    }
}
