//! Recursive-descent parser for the ring DSL. Whitespace-insensitive;
//! errors carry line and column.

use std::fmt;

use ringenv_core::presented::Polynomial;

use crate::ast::{BaseExpr, RingExpr, SummandExpr};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub expected: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}:{}: expected {}", self.line, self.col, self.expected)
    }
}

impl std::error::Error for ParseError {}

const MAX_EXPONENT: u64 = 1 << 16;

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Scanner<'a> {
        Scanner {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, expected: impl Into<String>) -> ParseError {
        let mut line = 1;
        let mut col = 1;
        for &b in &self.src[..self.pos.min(self.src.len())] {
            if b == b'\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        ParseError {
            line,
            col,
            expected: expected.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    /// Peeks past whitespace without consuming; `offset` is in raw bytes
    /// after the next non-space byte.
    fn peek_at(&mut self, offset: usize) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos + offset).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn eat(&mut self, token: &str) -> Result<(), ParseError> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            Ok(())
        } else {
            Err(self.error(format!("'{token}'")))
        }
    }

    fn tries(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("digits")
            .parse::<u64>()
            .map_err(|_| self.error("an integer within range"))
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
            while self.pos < self.src.len()
                && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
            {
                self.pos += 1;
            }
            Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii").to_string())
        } else {
            Err(self.error("an identifier"))
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.src.len()
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn is_prime_power(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut m = n;
            while m.is_multiple_of(p) {
                m /= p;
            }
            return m == 1;
        }
        p += 1;
    }
    true
}

/// Parses a complete expression; trailing input is an error.
pub fn parse(input: &str) -> Result<RingExpr, ParseError> {
    let mut s = Scanner::new(input);
    let expr = parse_expr(&mut s)?;
    if !s.at_end() {
        return Err(s.error("end of input or 'x'"));
    }
    Ok(expr)
}

fn parse_expr(s: &mut Scanner) -> Result<RingExpr, ParseError> {
    let mut terms = vec![parse_term(s)?];
    while s.peek() == Some(b'x') {
        s.bump();
        terms.push(parse_term(s)?);
    }
    if terms.len() == 1 {
        Ok(terms.pop().expect("one term"))
    } else {
        Ok(RingExpr::Product(terms))
    }
}

fn parse_term(s: &mut Scanner) -> Result<RingExpr, ParseError> {
    match s.peek() {
        Some(b'Z') => {
            if s.peek_at(1) == Some(b'/') {
                s.eat("Z/")?;
                let n = s.integer()?;
                if n == 0 {
                    return Err(s.error("a positive modulus"));
                }
                Ok(RingExpr::ZMod(n))
            } else if s.peek_at(1) == Some(b'p') {
                s.eat("Zp")?;
                s.eat("(")?;
                let p = s.integer()?;
                if !is_prime(p) {
                    return Err(s.error("a prime in Zp(...)"));
                }
                s.eat(")")?;
                Ok(RingExpr::SymBase(BaseExpr::Zp(p)))
            } else {
                s.eat("Z")?;
                Ok(RingExpr::SymBase(BaseExpr::Z))
            }
        }
        Some(b'Q') => {
            s.eat("Q")?;
            Ok(RingExpr::SymBase(BaseExpr::Q))
        }
        Some(b'F') => {
            s.eat("F")?;
            let q = s.integer()?;
            if s.peek() == Some(b'[') {
                parse_presented(s, q)
            } else {
                if !is_prime_power(q) {
                    return Err(s.error("a prime power after 'F'"));
                }
                Ok(RingExpr::GF(q))
            }
        }
        Some(b't') => {
            s.eat("triv")?;
            s.eat("(")?;
            let base = parse_base(s)?;
            s.eat(";")?;
            let summands = parse_module(s, &base)?;
            s.eat(")")?;
            Ok(RingExpr::TrivExt { base, summands })
        }
        Some(b'f') => {
            s.eat("fib")?;
            s.eat("(")?;
            let p = s.integer()?;
            if !is_prime(p) {
                return Err(s.error("a prime characteristic in fib(...)"));
            }
            s.eat(",")?;
            let m = s.integer()?;
            if m < 3 {
                return Err(s.error("at least 3 variables in fib(...)"));
            }
            s.eat(")")?;
            Ok(RingExpr::FibTrunc { p, m: m as usize })
        }
        _ => Err(s.error("a ring term (Z/n, Fq, Fp[..]/(..), triv(..), Zp(p), Z, Q, fib(p,m))")),
    }
}

fn parse_base(s: &mut Scanner) -> Result<BaseExpr, ParseError> {
    match s.peek() {
        Some(b'Z') => {
            if s.peek_at(1) == Some(b'p') {
                s.eat("Zp")?;
                s.eat("(")?;
                let p = s.integer()?;
                if !is_prime(p) {
                    return Err(s.error("a prime in Zp(...)"));
                }
                s.eat(")")?;
                Ok(BaseExpr::Zp(p))
            } else {
                s.eat("Z")?;
                Ok(BaseExpr::Z)
            }
        }
        Some(b'Q') => {
            s.eat("Q")?;
            Ok(BaseExpr::Q)
        }
        _ => Err(s.error("a base ring (Zp(p), Z, Q)")),
    }
}

fn parse_module(s: &mut Scanner, base: &BaseExpr) -> Result<Vec<SummandExpr>, ParseError> {
    let mut summands = vec![parse_summand(s, base)?];
    while s.tries("+") {
        summands.push(parse_summand(s, base)?);
    }
    Ok(summands)
}

fn parse_summand(s: &mut Scanner, base: &BaseExpr) -> Result<SummandExpr, ParseError> {
    let check_prime_fits = |s: &Scanner, p: u64| -> Result<(), ParseError> {
        let ok = match base {
            BaseExpr::Zp(p0) => p == *p0,
            BaseExpr::Z => true,
            BaseExpr::Q => false,
        };
        if ok {
            Ok(())
        } else {
            Err(s.error(format!("a prime that is a non-unit in {base:?}")))
        }
    };
    match s.peek() {
        Some(b'f') => {
            s.eat("free")?;
            s.eat("(")?;
            let k = s.integer()?;
            if k == 0 || k > 16 {
                return Err(s.error("a free rank between 1 and 16"));
            }
            s.eat(")")?;
            Ok(SummandExpr::Free(k))
        }
        Some(b'c') => {
            s.eat("cyc")?;
            s.eat("(")?;
            let p = s.integer()?;
            if !is_prime(p) {
                return Err(s.error("a prime in cyc(p^k)"));
            }
            check_prime_fits(s, p)?;
            s.eat("^")?;
            let k = s.integer()?;
            if k == 0 || k > MAX_EXPONENT {
                return Err(s.error("an exponent between 1 and 65536"));
            }
            s.eat(")")?;
            Ok(SummandExpr::Cyc(p, k as u32))
        }
        Some(b'p') => {
            s.eat("pruefer")?;
            s.eat("(")?;
            let p = s.integer()?;
            if !is_prime(p) {
                return Err(s.error("a prime in pruefer(p)"));
            }
            check_prime_fits(s, p)?;
            s.eat(")")?;
            Ok(SummandExpr::Pruefer(p))
        }
        Some(b'Q') => {
            s.eat("Q")?;
            Ok(SummandExpr::Q)
        }
        _ => Err(s.error("a module summand (free(k), cyc(p^k), pruefer(p), Q)")),
    }
}

fn parse_presented(s: &mut Scanner, p: u64) -> Result<RingExpr, ParseError> {
    if !is_prime(p) {
        return Err(s.error("a prime characteristic before '['"));
    }
    s.eat("[")?;
    let mut vars: Vec<String> = Vec::new();
    if s.peek() != Some(b']') {
        loop {
            let v = s.ident()?;
            if vars.contains(&v) {
                return Err(s.error("distinct variable names"));
            }
            vars.push(v);
            if !s.tries(",") {
                break;
            }
        }
    }
    if vars.len() > 16 {
        return Err(s.error("at most 16 variables"));
    }
    s.eat("]")?;
    s.eat("/")?;
    s.eat("(")?;
    let mut relations: Vec<Polynomial> = Vec::new();
    if s.peek() != Some(b')') {
        loop {
            let rel = parse_poly(s, p, &vars)?;
            if rel.is_zero() {
                return Err(s.error(format!("a relation that is nonzero modulo {p}")));
            }
            relations.push(rel);
            if !s.tries(",") {
                break;
            }
        }
    }
    s.eat(")")?;
    Ok(RingExpr::Presented { p, vars, relations })
}

fn parse_poly(s: &mut Scanner, p: u64, vars: &[String]) -> Result<Polynomial, ParseError> {
    let mut poly = Polynomial::zero(p, vars.len());
    let mut negate = s.tries("-");
    loop {
        let term = parse_mono(s, p, vars)?;
        poly = if negate { poly.sub(&term) } else { poly.add(&term) };
        if s.tries("+") {
            negate = false;
        } else if s.tries("-") {
            negate = true;
        } else {
            return Ok(poly);
        }
    }
}

fn parse_mono(s: &mut Scanner, p: u64, vars: &[String]) -> Result<Polynomial, ParseError> {
    let mut coeff = 1u64;
    let mut exps = vec![0u32; vars.len()];
    loop {
        match s.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = s.integer()?;
                coeff = (coeff * (n % p)) % p;
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = s.ident()?;
                let idx = vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| s.error(format!("a declared variable (one of {})", vars.join(", "))))?;
                let e = if s.tries("^") {
                    let e = s.integer()?;
                    if e > MAX_EXPONENT {
                        return Err(s.error("an exponent at most 65536"));
                    }
                    e as u32
                } else {
                    1
                };
                exps[idx] = exps[idx].saturating_add(e);
            }
            _ => return Err(s.error("a coefficient or variable")),
        }
        if !s.tries("*") {
            return Ok(Polynomial::monomial(p, vars.len(), &exps, coeff));
        }
    }
}
