//! The map Delta -> S3 and its kernel Gamma, a torsion-free surface group of
//! index 6.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use num_rational::Ratio;

use super::delta::{free_reduce, DeltaSym, DeltaWord};

/// Permutation of {0, 1, 2}; `self.0[i]` is the image of `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm3(pub [u8; 3]);

impl Perm3 {
    pub const IDENTITY: Perm3 = Perm3([0, 1, 2]);
    /// (1 2 3) in one-based cycle notation.
    pub const CYCLE: Perm3 = Perm3([1, 2, 0]);
    /// (1 2)
    pub const SWAP12: Perm3 = Perm3([1, 0, 2]);
    /// (2 3)
    pub const SWAP23: Perm3 = Perm3([0, 2, 1]);

    /// Composition `self . other`, applying `other` first.
    pub fn compose(self, other: Perm3) -> Perm3 {
        Perm3([self.0[other.0[0] as usize], self.0[other.0[1] as usize], self.0[other.0[2] as usize]])
    }

    pub fn inverse(self) -> Perm3 {
        let mut out = [0u8; 3];
        for i in 0..3 {
            out[self.0[i] as usize] = i as u8;
        }
        Perm3(out)
    }

    pub fn all() -> [Perm3; 6] {
        [
            Perm3([0, 1, 2]),
            Perm3([0, 2, 1]),
            Perm3([1, 0, 2]),
            Perm3([1, 2, 0]),
            Perm3([2, 0, 1]),
            Perm3([2, 1, 0]),
        ]
    }

    pub fn index(self) -> usize {
        Perm3::all().iter().position(|&q| q == self).expect("listed")
    }
}

impl fmt::Debug for Perm3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} {} {}]", self.0[0] + 1, self.0[1] + 1, self.0[2] + 1)
    }
}

pub fn sym_image(s: DeltaSym) -> Perm3 {
    match s {
        DeltaSym::A | DeltaSym::D => Perm3::CYCLE,
        DeltaSym::Ainv | DeltaSym::Dinv => Perm3::CYCLE.inverse(),
        DeltaSym::B => Perm3::SWAP12,
        DeltaSym::C => Perm3::SWAP23,
    }
}

pub fn s3_image(w: &DeltaWord) -> Perm3 {
    w.syms.iter().fold(Perm3::IDENTITY, |acc, &s| acc.compose(sym_image(s)))
}

pub fn kernel_member(w: &DeltaWord) -> bool {
    s3_image(w) == Perm3::IDENTITY
}

/// Monoid generators used for the coset enumeration.
pub const COSET_GENERATORS: [DeltaSym; 4] = [DeltaSym::A, DeltaSym::B, DeltaSym::C, DeltaSym::D];

/// Right cosets `Gamma g`, labelled by their S3 image, with a breadth-first
/// transversal and the action of each generator.
#[derive(Clone, Debug)]
pub struct CosetTable {
    pub transversal: BTreeMap<Perm3, DeltaWord>,
    /// `action[(coset, j)]` is the coset of `coset * COSET_GENERATORS[j]`.
    pub action: BTreeMap<(Perm3, usize), Perm3>,
}

impl CosetTable {
    pub fn build() -> Self {
        let mut transversal = BTreeMap::new();
        let mut action = BTreeMap::new();
        transversal.insert(Perm3::IDENTITY, DeltaWord::identity());
        let mut queue = VecDeque::from([Perm3::IDENTITY]);
        while let Some(c) = queue.pop_front() {
            for (j, &s) in COSET_GENERATORS.iter().enumerate() {
                let next = c.compose(sym_image(s));
                action.insert((c, j), next);
                if !transversal.contains_key(&next) {
                    let mut rep = transversal[&c].clone();
                    rep.syms.push(s);
                    transversal.insert(next, rep);
                    queue.push_back(next);
                }
            }
        }
        CosetTable { transversal, action }
    }

    pub fn index(&self) -> usize {
        self.transversal.len()
    }

    pub fn rep(&self, c: Perm3) -> &DeltaWord {
        &self.transversal[&c]
    }
}

/// `t s rep(ts)^-1` for a coset representative `t` and generator `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchreierGenerator {
    pub coset: Perm3,
    pub generator: DeltaSym,
    pub word: DeltaWord,
}

/// Nontrivial Schreier generators of Gamma, deduplicated.
pub fn schreier_generators(table: &CosetTable) -> Vec<SchreierGenerator> {
    let mut out: Vec<SchreierGenerator> = Vec::new();
    for (&c, t) in &table.transversal {
        for (j, &s) in COSET_GENERATORS.iter().enumerate() {
            let target = table.action[&(c, j)];
            let mut syms = t.syms.clone();
            syms.push(s);
            syms.extend(table.rep(target).inverse().syms);
            let word = free_reduce(&syms);
            if !word.is_empty() && !out.iter().any(|g| g.word == word) {
                out.push(SchreierGenerator { coset: c, generator: s, word });
            }
        }
    }
    out
}

/// Rewrites a kernel element as a product of Schreier words (Reidemeister-
/// Schreier); inverse letters are expanded as `a' = a a`, `d' = d d`. Returns
/// `None` if `w` is not in the kernel.
pub fn rewrite_in_schreier(table: &CosetTable, w: &DeltaWord) -> Option<Vec<DeltaWord>> {
    let mut coset = Perm3::IDENTITY;
    let mut factors = Vec::new();
    let expand = |s: DeltaSym| -> Vec<DeltaSym> {
        match s {
            DeltaSym::Ainv => vec![DeltaSym::A, DeltaSym::A],
            DeltaSym::Dinv => vec![DeltaSym::D, DeltaSym::D],
            s => vec![s],
        }
    };
    for &s in &w.syms {
        for g in expand(s) {
            let j = COSET_GENERATORS.iter().position(|&x| x == g).expect("generator");
            let target = table.action[&(coset, j)];
            let mut syms = table.rep(coset).syms.clone();
            syms.push(g);
            syms.extend(table.rep(target).inverse().syms);
            let f = free_reduce(&syms);
            if !f.is_empty() {
                factors.push(f);
            }
            coset = target;
        }
    }
    (coset == Perm3::IDENTITY).then_some(factors)
}

/// Orbifold Euler characteristic of Delta: 2 - sum (1 - 1/m_i) over the cone
/// orders 3, 2, 2, 3.
pub fn delta_euler_characteristic() -> Ratio<i64> {
    [3i64, 2, 2, 3]
        .iter()
        .fold(Ratio::from_integer(2), |acc, &m| acc - (Ratio::from_integer(1) - Ratio::new(1, m)))
}

/// Euler characteristic of Gamma, multiplicative in the index.
pub fn gamma_euler_characteristic(index: usize) -> Ratio<i64> {
    delta_euler_characteristic() * Ratio::from_integer(index as i64)
}

/// Genus of the closed orientable surface with the given Euler characteristic.
pub fn genus(chi: Ratio<i64>) -> Option<i64> {
    chi.is_integer().then(|| (2 - chi.to_integer()) / 2).filter(|g| 2 - 2 * g == chi.to_integer())
}
