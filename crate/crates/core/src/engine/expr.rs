//! Knot expressions and their text syntax.
//!
//! ```text
//! knot    := "U" | "double(" int "," knot ")" | "sum(" knot "," knot ")" | "sat(" knot "," pattern ")"
//! pattern := "D(" int ")" | "MER" | "F10" | "P21" | "P31" | "T31"
//! ```
//!
//! Whitespace between tokens is ignored.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Built-in satellite patterns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PatternId {
    /// Twisted double pattern with `k` full twists.
    D(i64),
    /// Meridian pattern; `C⋆MER = C`.
    Meridian,
    F10,
    P21,
    P31,
    T31,
}

impl PatternId {
    pub fn winding(self) -> usize {
        match self {
            PatternId::D(_) => 0,
            PatternId::Meridian | PatternId::F10 => 1,
            PatternId::P21 => 2,
            PatternId::P31 | PatternId::T31 => 3,
        }
    }

    /// Whether the pattern is only available with meridian color 0.
    pub fn uncolored_only(self) -> bool {
        matches!(self, PatternId::F10 | PatternId::P31 | PatternId::T31)
    }
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternId::D(k) => write!(f, "D({k})"),
            PatternId::Meridian => f.write_str("MER"),
            PatternId::F10 => f.write_str("F10"),
            PatternId::P21 => f.write_str("P21"),
            PatternId::P31 => f.write_str("P31"),
            PatternId::T31 => f.write_str("T31"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum KnotExpr {
    Unknot,
    Double(i64, Box<KnotExpr>),
    Sum(Box<KnotExpr>, Box<KnotExpr>),
    Sat(Box<KnotExpr>, PatternId),
}

impl KnotExpr {
    pub fn double(k: i64, companion: KnotExpr) -> Self {
        KnotExpr::Double(k, Box::new(companion))
    }

    pub fn sum(a: KnotExpr, b: KnotExpr) -> Self {
        KnotExpr::Sum(Box::new(a), Box::new(b))
    }

    pub fn sat(companion: KnotExpr, pattern: PatternId) -> Self {
        KnotExpr::Sat(Box::new(companion), pattern)
    }

    /// The figure-eight knot `double(1,U)`.
    pub fn figure_eight() -> Self {
        Self::double(1, KnotExpr::Unknot)
    }

    /// The right-handed trefoil `double(-1,U)`.
    pub fn trefoil() -> Self {
        Self::double(-1, KnotExpr::Unknot)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser { src: text, pos: 0 };
        let k = p.knot()?;
        p.skip_ws();
        if p.pos != text.len() {
            return Err(p.expected(&["end of input"]));
        }
        Ok(k)
    }
}

/// Canonical form: no whitespace, integers in plain decimal.
impl fmt::Display for KnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotExpr::Unknot => f.write_str("U"),
            KnotExpr::Double(k, c) => write!(f, "double({k},{c})"),
            KnotExpr::Sum(a, b) => write!(f, "sum({a},{b})"),
            KnotExpr::Sat(c, p) => write!(f, "sat({c},{p})"),
        }
    }
}

impl FromStr for KnotExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        KnotExpr::parse(s)
    }
}

impl FromStr for PatternId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s, pos: 0 };
        let pat = p.pattern()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.expected(&["end of input"]));
        }
        Ok(pat)
    }
}

struct Parser<'s> {
    src: &'s str,
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn expected(&self, what: &[&str]) -> Error {
        Error::Syntax { offset: self.pos, expected: what.iter().map(|s| s.to_string()).collect() }
    }

    fn punct(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.expected(&[&format!("'{c}'")]))
        }
    }

    fn ident(&mut self) -> (usize, &str) {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..].find(|c: char| !c.is_ascii_alphanumeric()).unwrap_or(self.src.len() - start);
        self.pos += len;
        (start, &self.src[start..start + len])
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        let mut end = start;
        if bytes.get(end) == Some(&b'-') {
            end += 1;
        }
        let digits = end;
        while bytes.get(end).is_some_and(u8::is_ascii_digit) {
            end += 1;
        }
        if end == digits {
            return Err(self.expected(&["integer"]));
        }
        let v = self.src[start..end].parse().map_err(|_| self.expected(&["integer within 64-bit range"]))?;
        self.pos = end;
        Ok(v)
    }

    fn knot(&mut self) -> Result<KnotExpr> {
        const STARTS: [&str; 4] = ["U", "double(", "sum(", "sat("];
        let (start, word) = self.ident();
        match word {
            "U" => Ok(KnotExpr::Unknot),
            "double" => {
                self.punct('(')?;
                let k = self.int()?;
                self.punct(',')?;
                let c = self.knot()?;
                self.punct(')')?;
                Ok(KnotExpr::double(k, c))
            }
            "sum" => {
                self.punct('(')?;
                let a = self.knot()?;
                self.punct(',')?;
                let b = self.knot()?;
                self.punct(')')?;
                Ok(KnotExpr::sum(a, b))
            }
            "sat" => {
                self.punct('(')?;
                let c = self.knot()?;
                self.punct(',')?;
                let p = self.pattern()?;
                self.punct(')')?;
                Ok(KnotExpr::sat(c, p))
            }
            _ => {
                self.pos = start;
                Err(self.expected(&STARTS))
            }
        }
    }

    fn pattern(&mut self) -> Result<PatternId> {
        let (start, word) = self.ident();
        let pat = match word {
            "D" => {
                self.punct('(')?;
                let k = self.int()?;
                self.punct(')')?;
                PatternId::D(k)
            }
            "MER" => PatternId::Meridian,
            "F10" => PatternId::F10,
            "P21" => PatternId::P21,
            "P31" => PatternId::P31,
            "T31" => PatternId::T31,
            "" => {
                self.pos = start;
                return Err(self.expected(&["D(", "MER", "F10", "P21", "P31", "T31"]));
            }
            other => return Err(Error::UnknownPattern(other.to_string())),
        };
        Ok(pat)
    }
}
