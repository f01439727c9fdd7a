//! The modular group Z/3 * Z/2 = <x, y | x^3, y^2> in alternating normal form.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum XiSym {
    X,
    Xinv,
    Y,
}

impl XiSym {
    fn is_x(self) -> bool {
        matches!(self, XiSym::X | XiSym::Xinv)
    }

    pub fn inverse(self) -> XiSym {
        match self {
            XiSym::X => XiSym::Xinv,
            XiSym::Xinv => XiSym::X,
            XiSym::Y => XiSym::Y,
        }
    }

    pub fn letter(self) -> &'static str {
        match self {
            XiSym::X => "x",
            XiSym::Xinv => "x'",
            XiSym::Y => "y",
        }
    }
}

/// Alternating normal form; empty means the identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct XiWord {
    blocks: Vec<XiSym>,
}

impl XiWord {
    pub fn identity() -> Self {
        XiWord::default()
    }

    pub fn blocks(&self) -> &[XiSym] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn y_count(&self) -> usize {
        self.blocks.iter().filter(|&&b| b == XiSym::Y).count()
    }

    /// Appends one symbol, merging with the last block when both lie in the
    /// same free factor.
    pub fn push(&mut self, s: XiSym) {
        match self.blocks.last().copied() {
            Some(XiSym::Y) if s == XiSym::Y => {
                self.blocks.pop();
            }
            Some(last) if last.is_x() && s.is_x() => {
                self.blocks.pop();
                if last == s {
                    self.blocks.push(s.inverse());
                }
            }
            _ => self.blocks.push(s),
        }
    }

    pub fn mul(&self, other: &XiWord) -> XiWord {
        let mut out = self.clone();
        for &s in &other.blocks {
            out.push(s);
        }
        out
    }

    pub fn inverse(&self) -> XiWord {
        XiWord { blocks: self.blocks.iter().rev().map(|s| s.inverse()).collect() }
    }

    pub fn pow(&self, n: usize) -> XiWord {
        (0..n).fold(XiWord::identity(), |acc, _| acc.mul(self))
    }

    /// Exponent sum of x modulo 3 and number of y's modulo 2; both vanish
    /// exactly on the commutator subgroup, which is free of rank 2.
    pub fn abelianization(&self) -> (u8, u8) {
        let mut ex = 0i32;
        for b in &self.blocks {
            match b {
                XiSym::X => ex += 1,
                XiSym::Xinv => ex -= 1,
                XiSym::Y => {}
            }
        }
        (ex.rem_euclid(3) as u8, (self.y_count() % 2) as u8)
    }
}

pub fn xi_reduce(syms: &[XiSym]) -> XiWord {
    let mut w = XiWord::identity();
    for &s in syms {
        w.push(s);
    }
    w
}

/// All normal forms of exactly length `n`.
pub fn xi_normal_forms(n: usize) -> Vec<XiWord> {
    let mut out = Vec::new();
    fn rec(n: usize, cur: &mut Vec<XiSym>, out: &mut Vec<XiWord>) {
        if cur.len() == n {
            out.push(XiWord { blocks: cur.clone() });
            return;
        }
        let choices: &[XiSym] = match cur.last() {
            None => &[XiSym::X, XiSym::Xinv, XiSym::Y],
            Some(XiSym::Y) => &[XiSym::X, XiSym::Xinv],
            Some(_) => &[XiSym::Y],
        };
        for &s in choices {
            cur.push(s);
            rec(n, cur, out);
            cur.pop();
        }
    }
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// All nonidentity normal forms of length at most `max_len`, shortest first.
pub fn xi_words_up_to(max_len: usize) -> Vec<XiWord> {
    (1..=max_len).flat_map(xi_normal_forms).collect()
}

impl fmt::Display for XiWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<&str> = self.blocks.iter().map(|b| b.letter()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for XiWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub fn parse_xi_syms(s: &str) -> Result<Vec<XiSym>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = Vec::new();
    let mut chars = compact.chars().peekable();
    while let Some(c) = chars.next() {
        let primed = chars.peek() == Some(&'\'');
        if primed {
            chars.next();
        }
        match (c, primed) {
            ('1', false) if compact.len() == 1 => {}
            ('x', false) => out.push(XiSym::X),
            ('x', true) => out.push(XiSym::Xinv),
            ('y', _) => out.push(XiSym::Y),
            _ => return Err(Error::Parse(format!("unexpected symbol {c:?} in {s:?}"))),
        }
    }
    Ok(out)
}

/// Parses `x`, `x'`, `y` and reduces to normal form.
impl FromStr for XiWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(xi_reduce(&parse_xi_syms(s)?))
    }
}
