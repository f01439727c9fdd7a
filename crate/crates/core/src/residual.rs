//! The homomorphisms psi_n from the orbifold group to the modular group and
//! the certificates they produce for nontrivial words.

use serde::{Deserialize, Serialize};

use crate::algebra::Prime;
use crate::error::{Error, Result};
use crate::hausdorff::{iota, PGL2Elt};
use crate::trace::is_p_power_order;
use crate::words::delta::{delta_normal_form, free_reduce, DeltaSym, DeltaWord};
use crate::words::xi::{XiSym, XiWord};

pub const CERTIFICATE_SCHEMA: u32 = 1;

fn xy_power(n: usize) -> XiWord {
    let mut w = XiWord::identity();
    for _ in 0..n {
        w.push(XiSym::X);
        w.push(XiSym::Y);
    }
    w
}

/// `a -> x`, `b -> y`, `c -> (xy)^n y^-1 (xy)^-n`, `d -> (xy)^n x^-1 (xy)^-n`.
///
/// Runs of c and d share one conjugation, which gives the same element.
pub fn psi(n: usize, w: &DeltaWord) -> XiWord {
    let conj = xy_power(n);
    let conj_inv = conj.inverse();
    let mut out = XiWord::identity();
    let mut i = 0;
    let syms = &w.syms;
    while i < syms.len() {
        match syms[i] {
            DeltaSym::A => out.push(XiSym::X),
            DeltaSym::Ainv => out.push(XiSym::Xinv),
            DeltaSym::B => out.push(XiSym::Y),
            _ => {
                let mut inner = XiWord::identity();
                while i < syms.len() && !syms[i].in_ab() {
                    inner.push(match syms[i] {
                        DeltaSym::C => XiSym::Y,
                        DeltaSym::D => XiSym::Xinv,
                        DeltaSym::Dinv => XiSym::X,
                        _ => unreachable!(),
                    });
                    i += 1;
                }
                out = out.mul(&conj).mul(&inner).mul(&conj_inv);
                continue;
            }
        }
        i += 1;
    }
    out
}

/// Image of one symbol, straight from the defining formulas.
pub fn psi_sym(n: usize, s: DeltaSym) -> XiWord {
    let conj = xy_power(n);
    let mid = match s {
        DeltaSym::A => return "x".parse().expect("literal"),
        DeltaSym::Ainv => return "x'".parse().expect("literal"),
        DeltaSym::B => return "y".parse().expect("literal"),
        DeltaSym::C => "y".parse().expect("literal"),
        DeltaSym::D => "x'".parse().expect("literal"),
        DeltaSym::Dinv => "x".parse().expect("literal"),
    };
    conj.mul(&mid).mul(&conj.inverse())
}

/// Largest alpha-block length of the normal form.
pub fn certificate_bound(w: &DeltaWord) -> Result<usize> {
    let nf = delta_normal_form(w);
    if nf.is_trivial() {
        return Err(Error::TrivialWord);
    }
    Ok(nf.max_alpha_len())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualCertificate {
    pub schema: u32,
    pub word: String,
    pub p: u64,
    pub n: usize,
    #[serde(rename = "N")]
    pub bound: usize,
    pub image: String,
    /// `iota(image)`, row-major canonical `num/den` strings.
    pub matrix: [[String; 2]; 2],
    pub scalar: bool,
    pub p_power_order: bool,
}

impl ResidualCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Recomputes every field from the word and compares.
    pub fn verify(&self) -> Result<bool> {
        let w: DeltaWord = self.word.parse()?;
        let p = Prime::new(self.p)?;
        let image = psi(self.n, &w);
        let g = iota(&image, p);
        Ok(self.schema == CERTIFICATE_SCHEMA
            && !image.is_identity()
            && image.to_string() == self.image
            && certificate_bound(&w)? == self.bound
            && self.n > self.bound
            && g.entry_strings() == self.matrix
            && !g.is_identity()
            && !is_p_power_order(g.matrix())?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertifyOutcome {
    Certified(ResidualCertificate),
    /// The normal form is empty: the word is the identity.
    TrivialDetected,
    /// Every tried `n` killed the word; triviality is not decided.
    Inconclusive { bound: usize, tried_up_to: usize },
}

/// Tries `n = N + 1, N + 2, ...` up to `max(max_n, N + 1)` and records the
/// first `n` with nontrivial image.
pub fn faithfulness_certificate(w: &DeltaWord, p: Prime, max_n: usize) -> CertifyOutcome {
    let reduced = free_reduce(&w.syms);
    let bound = match certificate_bound(&reduced) {
        Ok(b) => b,
        Err(_) => return CertifyOutcome::TrivialDetected,
    };
    let top = max_n.max(bound + 1);
    for n in bound + 1..=top {
        let image = psi(n, &reduced);
        if image.is_identity() {
            continue;
        }
        let g = iota(&image, p);
        let p_power = is_p_power_order(g.matrix()).expect("PGL2 elements are invertible");
        return CertifyOutcome::Certified(ResidualCertificate {
            schema: CERTIFICATE_SCHEMA,
            word: w.to_string(),
            p: p.get(),
            n,
            bound,
            image: image.to_string(),
            matrix: g.entry_strings(),
            scalar: g.is_identity(),
            p_power_order: p_power,
        });
    }
    CertifyOutcome::Inconclusive { bound, tried_up_to: top }
}

/// First `n` in `(N, N + extra]` with `psi_n(w) = 1`, if any.
pub fn first_vanishing(w: &DeltaWord, bound: usize, extra: usize) -> Option<usize> {
    (bound + 1..=bound + extra).find(|&n| psi(n, w).is_identity())
}

/// Number of cancelling symbol pairs when `u` and `v` are concatenated.
pub fn cancellation_count(u: &XiWord, v: &XiWord) -> usize {
    (u.len() + v.len() - u.mul(v).len()) / 2
}

pub fn pgl2_of(w: &DeltaWord, n: usize, p: Prime) -> PGL2Elt {
    iota(&psi(n, w), p)
}
