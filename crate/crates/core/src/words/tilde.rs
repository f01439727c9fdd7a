//! Words in the central extension with generators A, B, C and central Z,
//! where A^3 = B^2 = C^2 = D^3 = Z, Z^2 = ABCD = 1.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TildeSym {
    A,
    Ainv,
    B,
    C,
}

pub const TILDE_ALPHABET: [TildeSym; 4] = [TildeSym::A, TildeSym::Ainv, TildeSym::B, TildeSym::C];

impl TildeSym {
    /// `A` and `A^-1` share a class; equal-or-inverse means same class.
    pub fn class(self) -> u8 {
        match self {
            TildeSym::A | TildeSym::Ainv => 0,
            TildeSym::B => 1,
            TildeSym::C => 2,
        }
    }

    /// Inverse as a symbol plus the Z it costs: B^-1 = ZB, C^-1 = ZC.
    pub fn inverse(self) -> (TildeSym, bool) {
        match self {
            TildeSym::A => (TildeSym::Ainv, false),
            TildeSym::Ainv => (TildeSym::A, false),
            TildeSym::B => (TildeSym::B, true),
            TildeSym::C => (TildeSym::C, true),
        }
    }

    pub fn letter(self) -> &'static str {
        match self {
            TildeSym::A => "A",
            TildeSym::Ainv => "A'",
            TildeSym::B => "B",
            TildeSym::C => "C",
        }
    }
}

/// Product of two same-class symbols: the replacement and its Z-cost.
/// A.A = Z A^-1, A^-1.A^-1 = Z A, A.A^-1 = 1, B.B = C.C = Z.
fn collapse(x: TildeSym, y: TildeSym) -> (Option<TildeSym>, bool) {
    use TildeSym::*;
    match (x, y) {
        (A, A) => (Some(Ainv), true),
        (Ainv, Ainv) => (Some(A), true),
        (A, Ainv) | (Ainv, A) => (None, false),
        (B, B) | (C, C) => (None, true),
        _ => unreachable!("collapse of different classes"),
    }
}

const RULE_ONE_LHS: [TildeSym; 4] = [TildeSym::C, TildeSym::A, TildeSym::B, TildeSym::C];
const RULE_ONE_RHS: [TildeSym; 5] = [TildeSym::B, TildeSym::Ainv, TildeSym::C, TildeSym::B, TildeSym::Ainv];
const RULE_TWO_LHS: [TildeSym; 4] = [TildeSym::C, TildeSym::B, TildeSym::Ainv, TildeSym::C];
const RULE_TWO_RHS: [TildeSym; 5] = [TildeSym::A, TildeSym::B, TildeSym::C, TildeSym::A, TildeSym::B];

/// `Z^z` times a word in A, A^-1, B, C.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TildeWord {
    pub syms: Vec<TildeSym>,
    pub z: bool,
}

impl TildeWord {
    pub fn new(syms: Vec<TildeSym>, z: bool) -> Self {
        TildeWord { syms, z }
    }

    pub fn identity() -> Self {
        TildeWord { syms: Vec::new(), z: false }
    }

    pub fn from_syms(syms: &[TildeSym]) -> Self {
        TildeWord { syms: syms.to_vec(), z: false }
    }

    pub fn len(&self) -> usize {
        self.syms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syms.is_empty()
    }

    pub fn c_count(&self) -> usize {
        self.syms.iter().filter(|&&s| s == TildeSym::C).count()
    }

    pub fn concat(&self, other: &TildeWord) -> TildeWord {
        let mut syms = self.syms.clone();
        syms.extend_from_slice(&other.syms);
        TildeWord { syms, z: self.z ^ other.z }
    }

    pub fn with_z(mut self, z: bool) -> Self {
        self.z ^= z;
        self
    }

    /// Rotation moving the first `k` symbols to the end; conjugate in the group.
    pub fn rotate(&self, k: usize) -> TildeWord {
        let mut syms = self.syms.clone();
        if !syms.is_empty() {
            syms.rotate_left(k % self.syms.len());
        }
        TildeWord { syms, z: self.z }
    }

    /// No adjacent same-class pair and no left side of either rewriting rule.
    pub fn is_reduced(&self) -> bool {
        has_reduced_shape(&self.syms)
    }

    /// Every rotation is reduced.
    pub fn is_cyclically_reduced(&self) -> bool {
        let n = self.syms.len();
        if n <= 1 {
            return true;
        }
        if self.syms[0].class() == self.syms[n - 1].class() {
            return false;
        }
        (0..n).all(|k| has_reduced_shape(&rotated(&self.syms, k)))
    }
}

fn rotated(syms: &[TildeSym], k: usize) -> Vec<TildeSym> {
    let mut v = syms.to_vec();
    v.rotate_left(k);
    v
}

fn has_reduced_shape(syms: &[TildeSym]) -> bool {
    syms.windows(2).all(|w| w[0].class() != w[1].class())
        && !syms.windows(4).any(|w| w == RULE_ONE_LHS || w == RULE_TWO_LHS)
}

/// Rewrites to the reduced form: leftmost same-class collapse first, then
/// the leftmost occurrence of `CABC -> BA^-1CBA^-1` or `CBA^-1C -> ABCAB`.
/// Each step lowers (number of C's, length) lexicographically.
pub fn reduce_tilde(w: &TildeWord) -> TildeWord {
    let mut syms = w.syms.clone();
    let mut z = w.z;
    loop {
        if let Some(i) = syms.windows(2).position(|p| p[0].class() == p[1].class()) {
            let (rep, dz) = collapse(syms[i], syms[i + 1]);
            z ^= dz;
            match rep {
                Some(s) => {
                    syms[i] = s;
                    syms.remove(i + 1);
                }
                None => {
                    syms.drain(i..i + 2);
                }
            }
            continue;
        }
        let hit = syms.windows(4).enumerate().find_map(|(i, win)| {
            if win == RULE_ONE_LHS {
                Some((i, &RULE_ONE_RHS[..]))
            } else if win == RULE_TWO_LHS {
                Some((i, &RULE_TWO_RHS[..]))
            } else {
                None
            }
        });
        match hit {
            Some((i, rhs)) => {
                syms.splice(i..i + 4, rhs.iter().copied());
            }
            None => return TildeWord { syms, z },
        }
    }
}

/// Reduces until every rotation is reduced; the result is a rotation of a
/// word equal to the input, hence conjugate to it.
pub fn cyclic_reduce(w: &TildeWord) -> TildeWord {
    let mut cur = reduce_tilde(w);
    loop {
        let n = cur.len();
        let bad = (1..n).find(|&k| !has_reduced_shape(&rotated(&cur.syms, k)));
        match bad {
            Some(k) => cur = reduce_tilde(&cur.rotate(k)),
            None => return cur,
        }
    }
}

/// Reverses the word, swaps A and A^-1, and tracks the Z from each B^-1 = ZB
/// and C^-1 = ZC.
pub fn invert_tilde(w: &TildeWord) -> TildeWord {
    let mut z = w.z;
    let syms = w
        .syms
        .iter()
        .rev()
        .map(|s| {
            let (inv, dz) = s.inverse();
            z ^= dz;
            inv
        })
        .collect();
    reduce_tilde(&TildeWord { syms, z })
}

/// Lexicographically least rotation, the key for conjugacy-invariant caches.
pub fn least_rotation(syms: &[TildeSym]) -> Vec<TildeSym> {
    (0..syms.len().max(1))
        .map(|k| if syms.is_empty() { Vec::new() } else { rotated(syms, k) })
        .min()
        .unwrap_or_default()
}

/// All words (z = false) of exactly length `n` that are cyclically reduced.
pub fn cyclically_reduced_words(n: usize) -> Vec<TildeWord> {
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(n);
    fn rec(n: usize, buf: &mut Vec<TildeSym>, out: &mut Vec<TildeWord>) {
        if buf.len() == n {
            let w = TildeWord::from_syms(buf);
            if w.is_cyclically_reduced() {
                out.push(w);
            }
            return;
        }
        for s in TILDE_ALPHABET {
            if buf.last().is_some_and(|l| l.class() == s.class()) {
                continue;
            }
            buf.push(s);
            rec(n, buf, out);
            buf.pop();
        }
    }
    rec(n, &mut buf, &mut out);
    out
}

impl fmt::Display for TildeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.z {
            write!(f, "Z*")?;
        }
        if self.syms.is_empty() {
            return write!(f, "1");
        }
        for s in &self.syms {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl fmt::Debug for TildeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses `A`, `A'`, `B`, `C` (whitespace-insensitive), optional leading
/// `Z*`; `1` or the empty string is the identity. `D` and `D'` are accepted
/// and expand to `CBA'` and `ABC`.
impl FromStr for TildeWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (z, body) = match compact.strip_prefix("Z*").or_else(|| compact.strip_prefix('Z')) {
            Some(rest) => (true, rest.to_string()),
            None => (false, compact.clone()),
        };
        let mut syms = Vec::new();
        let mut chars = body.chars().peekable();
        while let Some(c) = chars.next() {
            let primed = chars.peek() == Some(&'\'');
            if primed {
                chars.next();
            }
            match (c, primed) {
                ('1', false) if body.len() == 1 => {}
                ('A', false) => syms.push(TildeSym::A),
                ('A', true) => syms.push(TildeSym::Ainv),
                ('B', false) => syms.push(TildeSym::B),
                ('C', false) => syms.push(TildeSym::C),
                ('D', false) => syms.extend([TildeSym::C, TildeSym::B, TildeSym::Ainv]),
                ('D', true) => syms.extend([TildeSym::A, TildeSym::B, TildeSym::C]),
                _ => return Err(Error::Parse(format!("unexpected symbol {c:?} in {s:?}"))),
            }
        }
        Ok(TildeWord { syms, z })
    }
}
