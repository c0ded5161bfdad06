//! Named lattice families and a small textual syntax for them.
//!
//! Accepted forms: `chain(3)`, `boolean(2)`, `m3`, `n5`, `op(n5)`,
//! `product(chain(2),m3)`. Single-argument families also accept the
//! shorthand `chain:3` / `op:m3`.

use std::fmt;
use std::str::FromStr;

use super::Lattice;
use crate::error::{Error, Result};

pub const MAX_CHAIN: usize = 4096;
pub const MAX_BOOLEAN: usize = 10;

pub fn chain(n: usize) -> Result<Lattice> {
    if n == 0 || n > MAX_CHAIN {
        return Err(Error::InvalidParameter(format!(
            "chain length must be in 1..={MAX_CHAIN}, got {n}"
        )));
    }
    Ok(Lattice::from_leq(n, |x, y| x <= y)?.with_name(format!("chain({n})")))
}

pub fn boolean(k: usize) -> Result<Lattice> {
    if k > MAX_BOOLEAN {
        return Err(Error::InvalidParameter(format!(
            "boolean rank must be at most {MAX_BOOLEAN}, got {k}"
        )));
    }
    Ok(Lattice::from_leq(1 << k, |x, y| x & !y == 0)?.with_name(format!("boolean({k})")))
}

/// Bottom 0, atoms 1..=3, top 4.
pub fn m3() -> Lattice {
    Lattice::from_covers(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
        .expect("M3 is a lattice")
        .with_name("m3")
}

/// Bottom 0, the chain 1 < 2, the side element 3, top 4.
pub fn n5() -> Lattice {
    Lattice::from_covers(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])
        .expect("N5 is a lattice")
        .with_name("n5")
}

/// Coordinatewise order; element `(i, j)` has index `i * |right| + j`.
pub fn product(left: &Lattice, right: &Lattice) -> Result<Lattice> {
    let m = right.size();
    let lattice = Lattice::from_leq(left.size() * m, |x, y| {
        left.leq(x / m, y / m) && right.leq(x % m, y % m)
    })?;
    let name = format!(
        "product({},{})",
        left.name().unwrap_or("?"),
        right.name().unwrap_or("?")
    );
    Ok(lattice.with_name(name))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Chain(usize),
    Boolean(usize),
    M3,
    N5,
    Product(Box<FamilySpec>, Box<FamilySpec>),
    Op(Box<FamilySpec>),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Lattice> {
        let lattice = match self {
            FamilySpec::Chain(n) => chain(*n)?,
            FamilySpec::Boolean(k) => boolean(*k)?,
            FamilySpec::M3 => m3(),
            FamilySpec::N5 => n5(),
            FamilySpec::Product(a, b) => product(&a.build()?, &b.build()?)?,
            FamilySpec::Op(a) => a.build()?.op(),
        };
        Ok(lattice.with_name(self.to_string()))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Chain(n) => write!(f, "chain({n})"),
            FamilySpec::Boolean(k) => write!(f, "boolean({k})"),
            FamilySpec::M3 => write!(f, "m3"),
            FamilySpec::N5 => write!(f, "n5"),
            FamilySpec::Product(a, b) => write!(f, "product({a},{b})"),
            FamilySpec::Op(a) => write!(f, "op({a})"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut parser = Parser {
            src: compact.as_bytes(),
            pos: 0,
        };
        let spec = parser.spec()?;
        if parser.pos != parser.src.len() {
            return Err(parser.error("trailing input"));
        }
        Ok(spec)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

enum Arg {
    Int(usize),
    Spec(FamilySpec),
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::InvalidParameter(format!(
            "family spec `{}`: {what} at offset {}",
            String::from_utf8_lossy(self.src),
            self.pos
        ))
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn word(&mut self) -> &str {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("")
    }

    fn arg(&mut self) -> Result<Arg> {
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let w = self.word();
            return w
                .parse()
                .map(Arg::Int)
                .map_err(|_| self.error("bad integer"));
        }
        self.spec().map(Arg::Spec)
    }

    fn spec(&mut self) -> Result<FamilySpec> {
        let name = self.word().to_ascii_lowercase();
        let mut args = Vec::new();
        if self.eat(b'(') {
            loop {
                args.push(self.arg()?);
                if self.eat(b')') {
                    break;
                }
                if !self.eat(b',') {
                    return Err(self.error("expected `,` or `)`"));
                }
            }
        } else if self.eat(b':') {
            args.push(self.arg()?);
        }
        let int = |args: &[Arg], p: &Self| match args {
            [Arg::Int(n)] => Ok(*n),
            _ => Err(p.error("expected one integer argument")),
        };
        match name.as_str() {
            "chain" => Ok(FamilySpec::Chain(int(&args, self)?)),
            "boolean" | "bool" | "powerset" => Ok(FamilySpec::Boolean(int(&args, self)?)),
            "singleton" if args.is_empty() => Ok(FamilySpec::Chain(1)),
            "m3" if args.is_empty() => Ok(FamilySpec::M3),
            "n5" if args.is_empty() => Ok(FamilySpec::N5),
            "op" => match args.pop() {
                Some(Arg::Spec(s)) if args.is_empty() => Ok(FamilySpec::Op(Box::new(s))),
                _ => Err(self.error("op takes one lattice")),
            },
            "product" | "prod" => match (args.pop(), args.pop()) {
                (Some(Arg::Spec(b)), Some(Arg::Spec(a))) if args.is_empty() => {
                    Ok(FamilySpec::Product(Box::new(a), Box::new(b)))
                }
                _ => Err(self.error("product takes two lattices")),
            },
            _ => Err(self.error("unknown family")),
        }
    }
}
