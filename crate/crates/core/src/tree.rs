//! Bruhat-Tits trees of PGL2 at the places of F_p(t).
//!
//! Arithmetic is exact: the completion is never formed, only the local ring
//! of rational functions whose denominators are prime to the uniformizer.
//! The infinite place is handled by the substitution `t -> 1/t`, which
//! carries it to the place `t`.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::factor::{factor, monic_irreducibles};
use crate::algebra::{valuation, Field, Fp, FpPoly, Mat2, Place, Prime, RatF, Valuation};
use crate::error::{Error, Result};
use crate::hausdorff::{iota_x, iota_y, PGL2Elt};
use crate::par::{self, Exec};
use crate::surface::SurfacePoint;
use crate::trace::TraceEngine;
use crate::words::tilde::TildeWord;

/// Local coordinates at a place: the uniformizer, plus whether the variable
/// has been inverted to move infinity to `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Local {
    pi: FpPoly,
    inverted: bool,
}

impl Local {
    fn at(place: &Place, p: Prime) -> Self {
        match place {
            Place::Finite(pi) => Local { pi: pi.clone(), inverted: false },
            Place::Infinity => Local { pi: FpPoly::linear(p, 0), inverted: true },
        }
    }

    fn to_local(&self, f: &RatF) -> RatF {
        if self.inverted {
            f.invert_variable()
        } else {
            f.clone()
        }
    }

    fn to_global(&self, f: &RatF) -> RatF {
        self.to_local(f)
    }

    fn matrix(&self, m: &Mat2<RatF>) -> Mat2<RatF> {
        m.map(|e| self.to_local(e))
    }

    fn v(&self, f: &RatF) -> Valuation {
        valuation(f, &Place::Finite(self.pi.clone()))
    }

    fn pi_pow(&self, n: i64) -> RatF {
        let pn = RatF::from_poly(self.pi.pow(n.unsigned_abs()));
        if n >= 0 {
            pn
        } else {
            pn.inv().expect("nonzero")
        }
    }

    /// Residue of a `pi`-integral element, as a polynomial of degree below
    /// `deg pi`.
    fn residue(&self, u: &RatF) -> FpPoly {
        let den_inv = u.den().inv_mod(&self.pi).expect("integral element");
        u.num().mul_mod(&den_inv, &self.pi)
    }

    /// `b` reduced modulo `pi^n O`: its `pi`-adic expansion cut below `pi^n`.
    fn truncate(&self, b: &RatF, n: i64) -> RatF {
        let m = match self.v(b) {
            Valuation::Infinity => return b.zero_like(),
            Valuation::Finite(m) if m >= n => return b.zero_like(),
            Valuation::Finite(m) => m,
        };
        let mut u = b.clone() * self.pi_pow(-m);
        let pi = RatF::from_poly(self.pi.clone());
        let mut acc = FpPoly::zero(&self.pi.prime());
        for k in 0..(n - m) as usize {
            let c = self.residue(&u);
            acc = acc + c.clone() * self.pi.pow(k as u64);
            u = (u - RatF::from_poly(c)).div(&pi).expect("nonzero");
        }
        RatF::from_poly(acc) * self.pi_pow(m)
    }

    /// Canonical `(n, b)` of the lattice spanned by the columns of `m`.
    fn canonical(&self, m: &Mat2<RatF>) -> (i64, RatF) {
        let (mut c1, mut c2) = ((m.m11.clone(), m.m21.clone()), (m.m12.clone(), m.m22.clone()));
        if self.v(&c1.1) < self.v(&c2.1) {
            std::mem::swap(&mut c1, &mut c2);
        }
        let ratio = c1.1.div(&c2.1).expect("invertible matrix");
        let a = c1.0 - ratio * c2.0.clone();
        let d = c2.1;
        let n = self.v(&a).finite().expect("invertible") - self.v(&d).finite().expect("invertible");
        let b = c2.0.div(&d).expect("nonzero");
        (n, self.truncate(&b, n))
    }

    fn vertex_matrix(&self, n: i64, b: &RatF) -> Mat2<RatF> {
        Mat2::new(self.pi_pow(n), b.clone(), b.zero_like(), b.one_like())
    }

    /// `e2 - e1` for the elementary divisors of `m`.
    fn divisor_gap(&self, m: &Mat2<RatF>) -> u64 {
        let vd = self.v(&m.det()).finite().expect("invertible");
        let e1 = m.entries().iter().map(|e| self.v(e)).min().expect("four entries");
        (vd - 2 * e1.finite().expect("nonzero matrix")) as u64
    }

    fn residue_reps(&self) -> Vec<FpPoly> {
        FpPoly::all_below_degree(self.pi.prime(), self.pi.degree().expect("nonzero"))
    }
}

/// A homothety class of lattices, stored as the columns of
/// `[[pi^n, b], [0, 1]]` with `b` reduced modulo `pi^n`.
///
/// At infinity `pi = 1/t` and `b` is written in the global variable `t`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TreeVertex {
    place: Place,
    n: i64,
    b: RatF,
}

impl TreeVertex {
    pub fn base(place: &Place, p: Prime) -> Self {
        TreeVertex { place: place.clone(), n: 0, b: RatF::zero(&p) }
    }

    pub fn place(&self) -> &Place {
        &self.place
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn b(&self) -> &RatF {
        &self.b
    }

    pub fn is_base(&self) -> bool {
        self.n == 0 && self.b.is_zero()
    }

    fn local(&self) -> Local {
        Local::at(&self.place, self.b.prime())
    }

    /// Class of the lattice spanned by the columns of `m`.
    pub fn from_matrix(place: &Place, m: &Mat2<RatF>) -> Result<Self> {
        if m.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        let loc = Local::at(place, m.m11.prime());
        let (n, b) = loc.canonical(&loc.matrix(m));
        Ok(TreeVertex { place: place.clone(), n, b: loc.to_global(&b) })
    }

    fn local_matrix(&self) -> Mat2<RatF> {
        let loc = self.local();
        loc.vertex_matrix(self.n, &loc.to_local(&self.b))
    }

    /// The `q + 1` adjacent vertices.
    pub fn neighbors(&self) -> Vec<TreeVertex> {
        let loc = self.local();
        let v = self.local_matrix();
        let pi = loc.pi_pow(1);
        let (zero, one) = (pi.zero_like(), pi.one_like());
        let mut steps: Vec<Mat2<RatF>> = loc
            .residue_reps()
            .into_iter()
            .map(|c| Mat2::new(pi.clone(), RatF::from_poly(c), zero.clone(), one.clone()))
            .collect();
        steps.push(Mat2::new(one.clone(), zero.clone(), zero, pi));
        steps
            .iter()
            .map(|s| {
                let (n, b) = loc.canonical(&(&v * s));
                TreeVertex { place: self.place.clone(), n, b: loc.to_global(&b) }
            })
            .collect()
    }

    /// Image under `g`.
    pub fn act(&self, g: &PGL2Elt) -> TreeVertex {
        let loc = self.local();
        let m = &loc.matrix(g.matrix()) * &self.local_matrix();
        let (n, b) = loc.canonical(&m);
        TreeVertex { place: self.place.clone(), n, b: loc.to_global(&b) }
    }
}

impl fmt::Debug for TreeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[n={}, b={}]", self.place, self.n, self.b)
    }
}

impl fmt::Display for TreeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub fn vertex_distance(v1: &TreeVertex, v2: &TreeVertex) -> Result<u64> {
    if v1.place != v2.place {
        return Err(Error::PlaceMismatch);
    }
    let loc = v1.local();
    let m = &v1.local_matrix().inverse()? * &v2.local_matrix();
    Ok(loc.divisor_gap(&m))
}

/// All vertices within `radius` of `center`, in BFS order.
pub fn ball(center: &TreeVertex, radius: usize) -> Vec<TreeVertex> {
    let mut seen: HashMap<TreeVertex, usize> = HashMap::new();
    seen.insert(center.clone(), 0);
    let mut order = vec![center.clone()];
    let mut frontier = vec![center.clone()];
    for depth in 1..=radius {
        let mut next = Vec::new();
        for v in &frontier {
            for w in v.neighbors() {
                if !seen.contains_key(&w) {
                    seen.insert(w.clone(), depth);
                    order.push(w.clone());
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    order
}

/// `d(base, g . base)`, read off the matrix without building vertices.
pub fn base_displacement(g: &PGL2Elt, place: &Place) -> u64 {
    let m = g.matrix();
    let vd = valuation(&m.det(), place).finite().expect("invertible");
    let e1 = m.entries().iter().map(|e| valuation(e, place)).min().expect("four entries");
    (vd - 2 * e1.finite().expect("nonzero matrix")) as u64
}

/// `max(0, v(det) - 2 v(tr))`: the translation length on the metric tree.
///
/// An element of odd determinant valuation whose trace has larger valuation
/// inverts an edge; its length is 0 though it fixes no vertex.
pub fn translation_length(g: &PGL2Elt, place: &Place) -> u64 {
    let m = g.matrix();
    let vd = valuation(&m.det(), place).finite().expect("invertible");
    match valuation(&m.trace(), place) {
        Valuation::Infinity => 0,
        Valuation::Finite(vt) => (vd - 2 * vt).max(0) as u64,
    }
}

/// Minimum displacement of `g` over the vertices and edge midpoints of the
/// ball of radius `radius` about the base vertex. Brute force; independent
/// of [`translation_length`].
pub fn ball_min_displacement(g: &PGL2Elt, place: &Place, radius: usize, exec: Exec) -> u64 {
    min_displacement_over(g, &ball(&TreeVertex::base(place, g.prime()), radius), exec)
}

/// As [`ball_min_displacement`], over a precomputed vertex set.
pub fn min_displacement_over(g: &PGL2Elt, vertices: &[TreeVertex], exec: Exec) -> u64 {
    let Some(first) = vertices.first() else { panic!("empty vertex set") };
    let loc = first.local();
    let (g1, g2) = (loc.matrix(g.matrix()), loc.matrix(g.mul(g).matrix()));
    let per_vertex = par::map(exec, vertices, |v| {
        // d(v, gv) from the elementary divisors of v^-1 g v
        let m = v.local_matrix();
        let m_inv = m.inverse().expect("invertible");
        let d = loc.divisor_gap(&(&(&m_inv * &g1) * &m));
        // A midpoint of an edge that is not mapped to itself moves at least
        // as far as one of the edge's endpoints, so only inverted edges
        // can beat the vertex minimum.
        if d == 1 && loc.divisor_gap(&(&(&m_inv * &g2) * &m)) == 0 {
            0
        } else {
            d
        }
    });
    per_vertex.into_iter().min().expect("nonempty vertex set")
}

/// A finite set of places, sorted finite-first by degree then coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PlaceSet {
    pub places: Vec<Place>,
}

impl PlaceSet {
    pub fn new(mut places: Vec<Place>) -> Self {
        places.sort_by_key(place_key);
        places.dedup();
        PlaceSet { places }
    }

    pub fn is_empty(&self) -> bool {
        self.places.is_empty()
    }

    pub fn len(&self) -> usize {
        self.places.len()
    }

    pub fn contains(&self, pl: &Place) -> bool {
        self.places.contains(pl)
    }

    pub fn labels(&self) -> Vec<String> {
        self.places.iter().map(Place::label).collect()
    }
}

fn place_key(pl: &Place) -> (usize, Vec<u64>) {
    match pl {
        Place::Finite(pi) => (pi.degree().unwrap_or(0), pi.coeffs().iter().map(|c| c.value()).collect()),
        Place::Infinity => (usize::MAX, Vec::new()),
    }
}

/// Places where some generator moves the base vertex. Off this set every
/// generator lies in `PGL2(O)` up to scaling.
pub fn bad_places(gens: &[PGL2Elt]) -> PlaceSet {
    let mut out = Vec::new();
    for g in gens {
        let m = g.matrix();
        let mut polys = vec![m.det().num().clone(), m.det().den().clone()];
        polys.extend(m.entries().iter().map(|e| e.den().clone()));
        for f in polys {
            if f.degree().unwrap_or(0) > 0 {
                for (pi, _) in factor(&f).expect("nonzero").factors {
                    out.push(Place::Finite(pi));
                }
            }
        }
    }
    out.push(Place::Infinity);
    out.retain(|pl| gens.iter().any(|g| base_displacement(g, pl) != 0));
    PlaceSet::new(out)
}

/// Every finite place of degree at most `max_degree`, then infinity.
pub fn places_up_to_degree(p: Prime, max_degree: usize) -> Vec<Place> {
    let mut out: Vec<Place> = (1..=max_degree).flat_map(|d| monic_irreducibles(p, d)).map(Place::Finite).collect();
    out.push(Place::Infinity);
    out
}

/// Named generators of a subgroup of PGL2(F_p(t)).
#[derive(Clone, Debug)]
pub struct GenSet {
    pub names: Vec<String>,
    pub elts: Vec<PGL2Elt>,
}

impl GenSet {
    pub fn new(names: Vec<String>, elts: Vec<PGL2Elt>) -> Result<Self> {
        if names.len() != elts.len() || elts.is_empty() {
            return Err(Error::Config("need one name per generator, at least one generator".into()));
        }
        Ok(GenSet { names, elts })
    }

    /// `iota(x)` and `iota(y)`.
    pub fn hausdorff(p: Prime) -> Self {
        GenSet { names: vec!["x".into(), "y".into()], elts: vec![iota_x(p), iota_y(p)] }
    }

    /// The commutator subgroup of the modular group, free on
    /// `[x, y] = x y x' y` and `[x', y] = x' y x y`.
    pub fn hausdorff_commutators(p: Prime) -> Self {
        let (x, y) = (iota_x(p), iota_y(p));
        let xi = x.inverse();
        GenSet {
            names: vec!["[x,y]".into(), "[x',y]".into()],
            elts: vec![x.mul(&y).mul(&xi).mul(&y), xi.mul(&y).mul(&x).mul(&y)],
        }
    }

    fn letters(&self) -> Vec<(String, PGL2Elt)> {
        let mut out = Vec::new();
        for (n, g) in self.names.iter().zip(&self.elts) {
            out.push((n.clone(), g.clone()));
            let gi = g.inverse();
            if gi != *g {
                out.push((format!("{n}'"), gi));
            }
        }
        out
    }
}

/// A group element with a shortest word reaching it.
#[derive(Clone, Debug)]
pub struct BallElement {
    pub word: String,
    pub length: usize,
    pub elt: PGL2Elt,
}

/// Distinct nonidentity elements of word length `1..=max_len` in the
/// generators, each with a shortest word. Deterministic.
pub fn word_ball(gens: &GenSet, max_len: usize) -> Vec<BallElement> {
    let p = gens.elts[0].prime();
    let letters = gens.letters();
    let id = PGL2Elt::identity(p);
    let mut seen: HashMap<PGL2Elt, ()> = HashMap::new();
    seen.insert(id.clone(), ());
    let mut frontier = vec![BallElement { word: String::new(), length: 0, elt: id }];
    let mut out = Vec::new();
    for len in 1..=max_len {
        let mut next = Vec::new();
        for e in &frontier {
            for (name, g) in &letters {
                let h = e.elt.mul(g);
                if seen.contains_key(&h) {
                    continue;
                }
                seen.insert(h.clone(), ());
                let word = if e.word.is_empty() { name.clone() } else { format!("{} {}", e.word, name) };
                next.push(BallElement { word, length: len, elt: h });
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct DiscretenessReport {
    pub places: Vec<String>,
    pub max_len: usize,
    pub checked: usize,
    /// Nonidentity elements fixing the base vertex in every listed tree.
    pub failures: Vec<String>,
    /// `(word, displacement per place)` for the generators.
    pub generator_displacements: Vec<(String, Vec<u64>)>,
}

impl DiscretenessReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Base-stabilizer test on the product of the trees at `places`.
pub fn discreteness_check(gens: &GenSet, places: &PlaceSet, max_len: usize, exec: Exec) -> DiscretenessReport {
    let elements = word_ball(gens, max_len);
    let totals = par::map(exec, &elements, |e| places.places.iter().map(|pl| base_displacement(&e.elt, pl)).sum::<u64>());
    let failures = elements.iter().zip(&totals).filter(|(_, &t)| t == 0).map(|(e, _)| e.word.clone()).collect();
    let generator_displacements = gens
        .names
        .iter()
        .zip(&gens.elts)
        .map(|(n, g)| (n.clone(), places.places.iter().map(|pl| base_displacement(g, pl)).collect()))
        .collect();
    DiscretenessReport { places: places.labels(), max_len, checked: elements.len(), failures, generator_displacements }
}

/// Nonidentity elements of length at most `max_len` with translation length
/// 0 at `place`, each with a shortest word.
pub fn elliptic_witness_search(gens: &GenSet, place: &Place, max_len: usize, exec: Exec) -> Vec<BallElement> {
    let elements = word_ball(gens, max_len);
    let lengths = par::map(exec, &elements, |e| translation_length(&e.elt, place));
    elements.into_iter().zip(lengths).filter(|(_, l)| *l == 0).map(|(e, _)| e).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealPointRow {
    pub word: String,
    pub trace: String,
    /// Places where the trace has negative valuation, with that valuation.
    pub poles: Vec<(String, i64)>,
}

/// Trace values at a point of the character surface with coordinates in
/// F_p(t), and the places where they have a pole.
pub fn ideal_points_report(words: &[TildeWord], point: &SurfacePoint<RatF>) -> Vec<IdealPointRow> {
    let engine = TraceEngine::new();
    words
        .iter()
        .map(|w| {
            let tr = engine.trace(w).eval(&point.u, &point.v, &point.w);
            let mut poles = Vec::new();
            if tr.den().degree().unwrap_or(0) > 0 {
                for (pi, _) in factor(tr.den()).expect("nonzero").factors {
                    let pl = Place::Finite(pi);
                    poles.push((pl.label(), valuation(&tr, &pl).finite().expect("nonzero")));
                }
            }
            if let Valuation::Finite(v) = valuation(&tr, &Place::Infinity) {
                if v < 0 {
                    poles.push((Place::Infinity.label(), v));
                }
            }
            IdealPointRow { word: w.to_string(), trace: tr.to_string(), poles }
        })
        .collect()
}

/// `iota(x) iota(y)`, hyperbolic at `t` and at infinity.
pub fn iota_pair_product(p: Prime) -> PGL2Elt {
    iota_x(p).mul(&iota_y(p))
}

/// Polynomial-entry matrices with entries of degree at most `deg`, invertible.
pub fn random_pgl2(p: Prime, deg: usize, rng: &mut impl rand::Rng) -> PGL2Elt {
    use crate::algebra::FiniteField;
    loop {
        let mut entry = || {
            let d = rng.gen_range(0..=deg);
            RatF::from_poly(FpPoly::from_coeffs(&p, (0..=d).map(|_| Fp::random(&p, rng)).collect()))
        };
        let m = Mat2::new(entry(), entry(), entry(), entry());
        if let Ok(g) = PGL2Elt::new(m) {
            return g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p5() -> Prime {
        Prime::new(5).unwrap()
    }

    fn rf(p: Prime, s: &str) -> RatF {
        RatF::parse(p, s).unwrap()
    }

    fn places(p: Prime) -> Vec<Place> {
        vec![Place::origin(p), Place::linear(p, -1), Place::Infinity]
    }

    #[test]
    fn base_and_neighbors() {
        let p = p5();
        for pl in places(p).into_iter().chain([Place::finite(FpPoly::from_ints(p, &[2, 0, 1])).unwrap()]) {
            let base = TreeVertex::base(&pl, p);
            assert_eq!(vertex_distance(&base, &base).unwrap(), 0);
            let nb = base.neighbors();
            let q = pl.residue_size(p) as usize;
            assert_eq!(nb.len(), q + 1);
            assert_eq!(nb.iter().collect::<std::collections::HashSet<_>>().len(), q + 1);
            for w in &nb {
                assert_eq!(vertex_distance(&base, w).unwrap(), 1);
                assert!(w.neighbors().contains(&base));
            }
        }
        let pl = Place::origin(p);
        let v = TreeVertex::from_matrix(&pl, &Mat2::new(rf(p, "t"), rf(p, "0"), rf(p, "0"), rf(p, "1"))).unwrap();
        assert_eq!((v.n(), v.b().is_zero()), (1, true));
        assert_eq!(vertex_distance(&TreeVertex::base(&pl, p), &v).unwrap(), 1);
        assert_eq!(vertex_distance(&v, &TreeVertex::base(&Place::Infinity, p)), Err(Error::PlaceMismatch));
    }

    #[test]
    fn ball_sizes_and_metric() {
        let p = p5();
        for pl in places(p) {
            let b = ball(&TreeVertex::base(&pl, p), 3);
            // 1 + 6 + 30 + 150
            assert_eq!(b.len(), 187);
            let base = &b[0];
            for v in &b {
                assert!(vertex_distance(base, v).unwrap() <= 3);
                assert_eq!(v.neighbors().len(), 6);
            }
            for (i, u) in b.iter().enumerate().step_by(17) {
                for v in b.iter().step_by(23) {
                    let d = vertex_distance(u, v).unwrap();
                    assert_eq!(d, vertex_distance(v, u).unwrap());
                    assert_eq!(d == 0, u == v);
                    for w in b.iter().skip(i % 5).step_by(41) {
                        assert!(vertex_distance(u, w).unwrap() <= d + vertex_distance(v, w).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_form_is_class_invariant() {
        let p = p5();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for pl in places(p) {
            for _ in 0..50 {
                let m = random_pgl2(p, 2, &mut rng).matrix().clone();
                let k = random_pgl2(p, 0, &mut rng).matrix().clone();
                let c = rf(p, "t^2 + 3").div(&rf(p, "t - 2")).unwrap();
                let a = TreeVertex::from_matrix(&pl, &m).unwrap();
                // constants lie in GL2(O) at every place
                let b = TreeVertex::from_matrix(&pl, &(&m * &k).scale(&c)).unwrap();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn action_is_isometric() {
        let p = p5();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for pl in places(p) {
            let b = ball(&TreeVertex::base(&pl, p), 2);
            for _ in 0..10 {
                let g = random_pgl2(p, 2, &mut rng);
                for u in b.iter().step_by(5) {
                    for v in b.iter().step_by(7) {
                        assert_eq!(vertex_distance(&u.act(&g), &v.act(&g)).unwrap(), vertex_distance(u, v).unwrap());
                    }
                }
                let h = random_pgl2(p, 2, &mut rng);
                assert_eq!(b[3].act(&h).act(&g), b[3].act(&g.mul(&h)));
                assert_eq!(base_displacement(&g, &pl), vertex_distance(&b[0], &b[0].act(&g)).unwrap());
            }
        }
    }

    #[test]
    fn translation_length_examples() {
        let p = p5();
        let t = Place::origin(p);
        assert_eq!(translation_length(&PGL2Elt::identity(p), &t), 0);
        let (x, y) = (iota_x(p), iota_y(p));
        let xy = x.mul(&y);
        assert_eq!(translation_length(&xy, &t), 1);
        assert_eq!(ball_min_displacement(&xy, &t, 5, Exec::default()), 1);
        // y swaps the base vertex with a neighbor: an inverted edge
        assert_eq!(translation_length(&y, &t), 0);
        let base = TreeVertex::base(&t, p);
        let yb = base.act(&y);
        assert_eq!(vertex_distance(&base, &yb).unwrap(), 1);
        assert_eq!(yb.act(&y), base);
        assert!(ball(&base, 3).iter().all(|v| vertex_distance(v, &v.act(&y)).unwrap() > 0));
        assert_eq!(ball_min_displacement(&y, &t, 3, Exec::default()), 0);
    }

    #[test]
    fn formula_matches_ball_oracle() {
        let p = p5();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for pl in places(p) {
            for _ in 0..8 {
                let g = random_pgl2(p, 2, &mut rng);
                assert_eq!(translation_length(&g, &pl), ball_min_displacement(&g, &pl, 3, Exec::default()), "{g:?} at {pl}");
            }
        }
    }

    #[test]
    fn conjugation_and_powers() {
        let p = p5();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for pl in places(p) {
            for _ in 0..30 {
                let g = random_pgl2(p, 2, &mut rng);
                let h = random_pgl2(p, 2, &mut rng);
                let l = translation_length(&g, &pl);
                assert_eq!(translation_length(&h.mul(&g).mul(&h.inverse()), &pl), l);
                if l > 0 {
                    let mut gk = g.clone();
                    for k in 2..=4 {
                        gk = gk.mul(&g);
                        assert_eq!(translation_length(&gk, &pl), k * l);
                    }
                }
            }
        }
    }

    #[test]
    fn bad_places_examples() {
        let p = p5();
        let s = bad_places(&[iota_x(p), iota_y(p)]);
        assert_eq!(s.places, vec![Place::origin(p), Place::Infinity]);
        assert!(bad_places(&[PGL2Elt::identity(p)]).is_empty());
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let all = places_up_to_degree(p, 2);
        for _ in 0..20 {
            let g = random_pgl2(p, 2, &mut rng);
            let s = bad_places(std::slice::from_ref(&g));
            for pl in &all {
                if !s.contains(pl) {
                    let base = TreeVertex::base(pl, p);
                    assert_eq!(vertex_distance(&base, &base.act(&g)).unwrap(), 0);
                }
            }
        }
    }

    #[test]
    fn discreteness_and_witnesses() {
        let p = p5();
        let gens = GenSet::hausdorff(p);
        let s = bad_places(&gens.elts);
        // the torsion element x is integral with unit determinant everywhere
        let r = discreteness_check(&gens, &s, 6, Exec::default());
        assert!(r.failures.contains(&"x".to_string()));
        let single = discreteness_check(&gens, &PlaceSet::new(vec![Place::origin(p)]), 6, Exec::default());
        assert!(!single.passed());
        assert_eq!(r.failures, vec!["x".to_string(), "x'".to_string()]);
        let empty = discreteness_check(&gens, &PlaceSet::default(), 4, Exec::default());
        assert_eq!(empty.failures.len(), empty.checked);
        let comm = GenSet::hausdorff_commutators(p);
        assert!(discreteness_check(&comm, &s, 5, Exec::default()).passed());

        let wit = elliptic_witness_search(&gens, &Place::origin(p), 5, Exec::default());
        let words: Vec<&str> = wit.iter().map(|e| e.word.as_str()).collect();
        assert!(words.contains(&"x") && words.contains(&"y"));
        let conj = wit.iter().find(|e| e.length >= 3).expect("a conjugate");
        assert_eq!(translation_length(&conj.elt, &Place::origin(p)), 0);
    }

    #[test]
    fn word_ball_matches_normal_forms() {
        let p = p5();
        let ball = word_ball(&GenSet::hausdorff(p), 8);
        assert_eq!(ball.len(), crate::words::xi::xi_words_up_to(8).len());
    }

    #[test]
    fn ideal_points() {
        let p = p5();
        // the conic w = 0 through (2, 0), parametrized by slope t
        let q = rf(p, "3/(t^2 + 1)");
        let pt = SurfacePoint { u: rf(p, "2") - q.clone(), v: -(q * rf(p, "t")), w: rf(p, "0") };
        assert!(crate::surface::surface_eval(&pt.u, &pt.v, &pt.w).is_zero());
        let words: Vec<TildeWord> = ["BC", "AB", "ABC"].iter().map(|s| s.parse().unwrap()).collect();
        let rows = ideal_points_report(&words, &pt);
        // t^2 + 1 = (t - 2)(t + 2) over F_5
        assert_eq!(rows[0].poles.len(), 2);
        assert!(rows[0].poles.iter().all(|(pl, v)| *v == -1 && pl != "inf"));
        assert!(rows[1].poles.is_empty() && rows[2].poles.is_empty());
    }
}
