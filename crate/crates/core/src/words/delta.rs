//! Words in the orbifold group <a, b, c, d | a^3, b^2, c^2, d^3, abcd> and
//! its decomposition along the amalgam <a, b> *_{ab = (cd)^-1} <c, d>.

use std::fmt;
use std::str::FromStr;

use super::tilde::{TildeSym, TildeWord};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DeltaSym {
    A,
    Ainv,
    B,
    C,
    D,
    Dinv,
}

pub const DELTA_ALPHABET: [DeltaSym; 6] =
    [DeltaSym::A, DeltaSym::Ainv, DeltaSym::B, DeltaSym::C, DeltaSym::D, DeltaSym::Dinv];

impl DeltaSym {
    /// Symbols of equal class multiply inside a single cyclic factor.
    pub fn class(self) -> u8 {
        match self {
            DeltaSym::A | DeltaSym::Ainv => 0,
            DeltaSym::B => 1,
            DeltaSym::C => 2,
            DeltaSym::D | DeltaSym::Dinv => 3,
        }
    }

    pub fn in_ab(self) -> bool {
        self.class() <= 1
    }

    pub fn inverse(self) -> DeltaSym {
        match self {
            DeltaSym::A => DeltaSym::Ainv,
            DeltaSym::Ainv => DeltaSym::A,
            DeltaSym::D => DeltaSym::Dinv,
            DeltaSym::Dinv => DeltaSym::D,
            s => s,
        }
    }

    pub fn letter(self) -> &'static str {
        match self {
            DeltaSym::A => "a",
            DeltaSym::Ainv => "a'",
            DeltaSym::B => "b",
            DeltaSym::C => "c",
            DeltaSym::D => "d",
            DeltaSym::Dinv => "d'",
        }
    }
}

fn collapse(x: DeltaSym, y: DeltaSym) -> Option<DeltaSym> {
    use DeltaSym::*;
    match (x, y) {
        (A, A) => Some(Ainv),
        (Ainv, Ainv) => Some(A),
        (D, D) => Some(Dinv),
        (Dinv, Dinv) => Some(D),
        _ => None,
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DeltaWord {
    pub syms: Vec<DeltaSym>,
}

impl DeltaWord {
    pub fn new(syms: Vec<DeltaSym>) -> Self {
        DeltaWord { syms }
    }

    pub fn identity() -> Self {
        DeltaWord::default()
    }

    pub fn len(&self) -> usize {
        self.syms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syms.is_empty()
    }

    pub fn concat(&self, other: &DeltaWord) -> DeltaWord {
        let mut syms = self.syms.clone();
        syms.extend_from_slice(&other.syms);
        DeltaWord { syms }
    }

    pub fn inverse(&self) -> DeltaWord {
        DeltaWord { syms: self.syms.iter().rev().map(|s| s.inverse()).collect() }
    }

    /// No two adjacent symbols from the same cyclic factor.
    pub fn is_freely_reduced(&self) -> bool {
        self.syms.windows(2).all(|w| w[0].class() != w[1].class())
    }

    /// Lift to the central extension: d = (abc)^-1 = C B A^-1 exactly, since
    /// the Z's of B^-1 = ZB and C^-1 = ZC cancel.
    pub fn lift(&self) -> TildeWord {
        let mut syms = Vec::with_capacity(self.syms.len() * 3);
        for s in &self.syms {
            match s {
                DeltaSym::A => syms.push(TildeSym::A),
                DeltaSym::Ainv => syms.push(TildeSym::Ainv),
                DeltaSym::B => syms.push(TildeSym::B),
                DeltaSym::C => syms.push(TildeSym::C),
                DeltaSym::D => syms.extend([TildeSym::C, TildeSym::B, TildeSym::Ainv]),
                DeltaSym::Dinv => syms.extend([TildeSym::A, TildeSym::B, TildeSym::C]),
            }
        }
        TildeWord::new(syms, false)
    }
}

/// Merges adjacent symbols of the same cyclic factor (a^3 = b^2 = c^2 = d^3 = 1).
pub fn free_reduce(syms: &[DeltaSym]) -> DeltaWord {
    let mut out: Vec<DeltaSym> = Vec::with_capacity(syms.len());
    for &s in syms {
        match out.last().copied() {
            Some(l) if l.class() == s.class() => {
                out.pop();
                if let Some(m) = collapse(l, s) {
                    out.push(m);
                }
            }
            _ => out.push(s),
        }
    }
    DeltaWord { syms: out }
}

impl fmt::Display for DeltaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syms.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<&str> = self.syms.iter().map(|s| s.letter()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for DeltaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses `a a' b c d d'` (whitespace-insensitive); does not reduce.
impl FromStr for DeltaWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut syms = Vec::new();
        let mut chars = compact.chars().peekable();
        while let Some(c) = chars.next() {
            let primed = chars.peek() == Some(&'\'');
            if primed {
                chars.next();
            }
            let sym = match (c, primed) {
                ('1', false) if compact.len() == 1 => continue,
                ('a', false) => DeltaSym::A,
                ('a', true) => DeltaSym::Ainv,
                ('b', _) => DeltaSym::B,
                ('c', _) => DeltaSym::C,
                ('d', false) => DeltaSym::D,
                ('d', true) => DeltaSym::Dinv,
                _ => return Err(Error::Parse(format!("unexpected symbol {c:?} in {s:?}"))),
            };
            syms.push(sym);
        }
        Ok(DeltaWord { syms })
    }
}

/// `alpha_0 gamma_1 alpha_1 ... gamma_k alpha_k` with alphas in <a, b>,
/// gammas nonempty in <c, d>, no gamma beginning or ending with `cd` or
/// `d'c` (those are pushed into the neighbouring alphas as `ba'` and `ab`),
/// and no interior alpha in the amalgamated subgroup <ab>.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DeltaNormalForm {
    pub alphas: Vec<DeltaWord>,
    pub gammas: Vec<DeltaWord>,
}

impl DeltaNormalForm {
    pub fn k(&self) -> usize {
        self.gammas.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.gammas.is_empty() && self.alphas.iter().all(|a| a.is_empty())
    }

    pub fn recompose(&self) -> DeltaWord {
        let mut syms = self.alphas[0].syms.clone();
        for (g, a) in self.gammas.iter().zip(&self.alphas[1..]) {
            syms.extend_from_slice(&g.syms);
            syms.extend_from_slice(&a.syms);
        }
        DeltaWord { syms }
    }

    pub fn max_alpha_len(&self) -> usize {
        self.alphas.iter().map(|a| a.len()).max().unwrap_or(0)
    }
}

impl fmt::Display for DeltaNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.alphas[0])?;
        for (g, a) in self.gammas.iter().zip(&self.alphas[1..]) {
            write!(f, " ({g}) [{a}]")?;
        }
        Ok(())
    }
}

use DeltaSym::{Ainv as SA_INV, Dinv as SD_INV, A as SA, B as SB, C as SC, D as SD};

const AB: [DeltaSym; 2] = [SA, SB];
const B_AINV: [DeltaSym; 2] = [SB, SA_INV];

fn starts_with(g: &DeltaWord, pat: [DeltaSym; 2]) -> bool {
    g.syms.len() >= 2 && g.syms[..2] == pat
}

fn ends_with(g: &DeltaWord, pat: [DeltaSym; 2]) -> bool {
    let n = g.syms.len();
    n >= 2 && g.syms[n - 2..] == pat
}

pub fn delta_normal_form(w: &DeltaWord) -> DeltaNormalForm {
    let reduced = free_reduce(&w.syms);
    let mut alphas: Vec<DeltaWord> = vec![DeltaWord::identity()];
    let mut gammas: Vec<DeltaWord> = Vec::new();
    let mut in_gamma = false;
    for &s in &reduced.syms {
        match (s.in_ab(), in_gamma) {
            (true, true) => {
                alphas.push(DeltaWord::new(vec![s]));
                in_gamma = false;
            }
            (true, false) => alphas.last_mut().expect("nonempty").syms.push(s),
            (false, false) => {
                gammas.push(DeltaWord::new(vec![s]));
                in_gamma = true;
            }
            (false, true) => gammas.last_mut().expect("nonempty").syms.push(s),
        }
    }
    if in_gamma {
        alphas.push(DeltaWord::identity());
    }
    let mut nf = DeltaNormalForm { alphas, gammas };
    normalize(&mut nf);
    nf
}

fn normalize(nf: &mut DeltaNormalForm) {
    // d'c = ab and cd = (ab)^-1 = ba'.
    let d_inv_c = [SD_INV, SC];
    let c_d = [SC, SD];
    loop {
        let mut changed = false;
        let mut j = 0;
        while j < nf.gammas.len() {
            let g = &mut nf.gammas[j];
            // the same element of <ab>, read on the other side
            let prefix = if starts_with(g, d_inv_c) {
                Some(AB)
            } else if starts_with(g, c_d) {
                Some(B_AINV)
            } else {
                None
            };
            if let Some(h) = prefix {
                g.syms.drain(..2);
                let a = &mut nf.alphas[j];
                *a = free_reduce(&[&a.syms[..], &h[..]].concat());
                changed = true;
            }
            let g = &mut nf.gammas[j];
            let suffix = if ends_with(g, d_inv_c) {
                Some(AB)
            } else if ends_with(g, c_d) {
                Some(B_AINV)
            } else {
                None
            };
            if let Some(h) = suffix {
                let n = g.syms.len();
                g.syms.truncate(n - 2);
                let a = &mut nf.alphas[j + 1];
                *a = free_reduce(&[&h[..], &a.syms[..]].concat());
                changed = true;
            }
            if nf.gammas[j].is_empty() {
                let right = nf.alphas.remove(j + 1);
                nf.gammas.remove(j);
                let left = &mut nf.alphas[j];
                *left = free_reduce(&[&left.syms[..], &right.syms[..]].concat());
                changed = true;
                continue;
            }
            j += 1;
        }
        // An interior alpha in the amalgamated subgroup <ab> = <cd> crosses
        // over (ab = d'c, ba' = cd) and joins its two gammas.
        if let Some((i, m)) = (1..nf.gammas.len()).find_map(|i| amalgam_power(&nf.alphas[i]).map(|m| (i, m))) {
            let right = nf.gammas.remove(i);
            nf.alphas.remove(i);
            let unit: [DeltaSym; 2] = if m > 0 { [SD_INV, SC] } else { [SC, SD] };
            let mut syms = nf.gammas[i - 1].syms.clone();
            for _ in 0..m.unsigned_abs() {
                syms.extend_from_slice(&unit);
            }
            syms.extend_from_slice(&right.syms);
            nf.gammas[i - 1] = free_reduce(&syms);
            changed = true;
        }
        if !changed {
            return;
        }
    }
}

/// `Some(m)` when a freely reduced ab-word equals `(ab)^m`.
fn amalgam_power(alpha: &DeltaWord) -> Option<i64> {
    let n = alpha.len();
    if n % 2 != 0 {
        return None;
    }
    let m = (n / 2) as i64;
    if alpha.syms.chunks(2).all(|c| c == AB) {
        Some(m)
    } else if alpha.syms.chunks(2).all(|c| c == B_AINV) {
        Some(-m)
    } else {
        None
    }
}

/// Freely reduced words of exactly length `n`.
pub fn freely_reduced_words(n: usize) -> Vec<DeltaWord> {
    let mut out = Vec::new();
    fn rec(n: usize, cur: &mut Vec<DeltaSym>, out: &mut Vec<DeltaWord>) {
        if cur.len() == n {
            out.push(DeltaWord { syms: cur.clone() });
            return;
        }
        for s in DELTA_ALPHABET {
            if cur.last().is_some_and(|l| l.class() == s.class()) {
                continue;
            }
            cur.push(s);
            rec(n, cur, out);
            cur.pop();
        }
    }
    rec(n, &mut Vec::new(), &mut out);
    out
}
