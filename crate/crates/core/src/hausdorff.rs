//! Hausdorff's embedding of the modular group into PGL2(F_p(t)) and its
//! ping-pong certificate on the projective line.

use std::fmt;

use serde::Serialize;

use crate::algebra::{mobius_act, Field, Fp, FpPoly, Mat2, Prime, ProjPt, RatF};
use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::words::xi::{xi_words_up_to, XiSym, XiWord};

/// A projective class, represented by a polynomial matrix with coprime
/// entries whose first nonzero entry (row-major) is monic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PGL2Elt {
    m: Mat2<RatF>,
}

impl PGL2Elt {
    pub fn new(m: Mat2<RatF>) -> Result<Self> {
        if m.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(PGL2Elt { m: canonicalize(&m) })
    }

    pub fn identity(p: Prime) -> Self {
        PGL2Elt { m: Mat2::identity(&p) }
    }

    pub fn matrix(&self) -> &Mat2<RatF> {
        &self.m
    }

    pub fn prime(&self) -> Prime {
        self.m.m11.prime()
    }

    pub fn mul(&self, o: &PGL2Elt) -> PGL2Elt {
        PGL2Elt { m: canonicalize(&(&self.m * &o.m)) }
    }

    pub fn inverse(&self) -> PGL2Elt {
        PGL2Elt { m: canonicalize(&self.m.adjugate()) }
    }

    pub fn is_identity(&self) -> bool {
        self.m.is_scalar()
    }

    pub fn max_degree(&self) -> usize {
        self.m.entries().iter().filter_map(|e| e.num().degree()).max().unwrap_or(0)
    }

    pub fn act(&self, x: &ProjPt<RatF>) -> ProjPt<RatF> {
        mobius_act(&self.m, x).expect("canonical elements are invertible")
    }

    /// Entries as canonical `num/den` strings, row-major.
    pub fn entry_strings(&self) -> [[String; 2]; 2] {
        [[self.m.m11.to_string(), self.m.m12.to_string()], [self.m.m21.to_string(), self.m.m22.to_string()]]
    }

    pub fn from_strings(p: Prime, e: &[[String; 2]; 2]) -> Result<Self> {
        let parse = |s: &str| RatF::parse(p, s);
        PGL2Elt::new(Mat2::new(parse(&e[0][0])?, parse(&e[0][1])?, parse(&e[1][0])?, parse(&e[1][1])?))
    }
}

impl fmt::Debug for PGL2Elt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.entry_strings();
        write!(f, "[[{}, {}], [{}, {}]]", e[0][0], e[0][1], e[1][0], e[1][1])
    }
}

fn canonicalize(m: &Mat2<RatF>) -> Mat2<RatF> {
    let p = m.m11.prime();
    let entries = m.entries();
    let lcm = entries.iter().fold(FpPoly::one(&p), |acc, e| {
        let g = acc.gcd(e.den());
        (acc * e.den().clone()).exact_div(&g)
    });
    let cleared: Vec<FpPoly> = entries.iter().map(|e| (e.num().clone() * lcm.clone()).exact_div(e.den())).collect();
    let content = cleared.iter().fold(FpPoly::zero(&p), |acc, e| acc.gcd(e));
    let lead = cleared.iter().find(|e| !e.is_zero()).expect("nonsingular").exact_div(&content);
    let scale = lead.lead().expect("nonzero").inv().expect("nonzero");
    let fix = |e: &FpPoly| RatF::from_poly(e.exact_div(&content).scale(&scale));
    Mat2::new(fix(&cleared[0]), fix(&cleared[1]), fix(&cleared[2]), fix(&cleared[3]))
}

pub fn iota_x(p: Prime) -> PGL2Elt {
    let c = |a: i64| RatF::constant(Fp::new(p, a));
    PGL2Elt::new(Mat2::new(c(0), c(1), c(-1), c(-1))).expect("det 1")
}

pub fn iota_y(p: Prime) -> PGL2Elt {
    let c = |a: i64| RatF::constant(Fp::new(p, a));
    PGL2Elt::new(Mat2::new(c(0), c(1), RatF::var(&p), c(0))).expect("det -t")
}

pub fn iota_sym(s: XiSym, p: Prime) -> PGL2Elt {
    match s {
        XiSym::X => iota_x(p),
        XiSym::Xinv => iota_x(p).inverse(),
        XiSym::Y => iota_y(p),
    }
}

/// `x -> [[0,1],[-1,-1]]`, `y -> [[0,1],[t,0]]`.
pub fn iota(w: &XiWord, p: Prime) -> PGL2Elt {
    w.blocks().iter().fold(PGL2Elt::identity(p), |acc, &s| acc.mul(&iota_sym(s, p)))
}

/// `(P : Q) -> (P(0) : Q(0))` for coprime polynomial coordinates.
pub fn reduce_to_fp(pt: &ProjPt<RatF>) -> ProjPt<Fp> {
    let (a, b) = pt.coords();
    // (a : b) = (a.num * b.den : b.num * a.den); coprime after clearing
    let p_poly = a.num().clone() * b.den().clone();
    let q_poly = b.num().clone() * a.den().clone();
    let g = p_poly.gcd(&q_poly);
    let (pp, qq) = (p_poly.exact_div(&g), q_poly.exact_div(&g));
    let zero = Fp::new(pp.prime(), 0);
    ProjPt::new(pp.eval(&zero), qq.eval(&zero)).expect("coprime polynomials do not both vanish at 0")
}

pub fn one_point(p: Prime) -> ProjPt<RatF> {
    ProjPt::affine(RatF::one(&p))
}

/// The three points `{0, -1, infinity}` of P^1(F_p) forming the x-orbit of
/// infinity.
pub fn pingpong_target(p: Prime) -> [ProjPt<Fp>; 3] {
    [ProjPt::affine(Fp::new(p, 0)), ProjPt::affine(Fp::new(p, -1)), ProjPt::infinity(&p)]
}

#[derive(Clone, Debug)]
pub struct PingPongTrail {
    /// Exact points after applying each letter, rightmost letter first.
    pub trail: Vec<ProjPt<RatF>>,
    pub reduced_trail: Vec<ProjPt<Fp>>,
    pub landed: ProjPt<Fp>,
    pub in_target: bool,
    /// The words x and x^-1 move 1 to -1/2 and -2 and are outside the claim.
    pub exempt: bool,
}

pub fn pingpong_check(w: &XiWord, p: Prime) -> Result<PingPongTrail> {
    if w.is_identity() {
        return Err(Error::TrivialWord);
    }
    let mut pt = one_point(p);
    let mut trail = Vec::with_capacity(w.len());
    let mut reduced_trail = Vec::with_capacity(w.len());
    for &s in w.blocks().iter().rev() {
        pt = iota_sym(s, p).act(&pt);
        reduced_trail.push(reduce_to_fp(&pt));
        trail.push(pt.clone());
    }
    let landed = reduced_trail.last().expect("nonempty").clone();
    let in_target = pingpong_target(p).contains(&landed);
    Ok(PingPongTrail { trail, reduced_trail, landed, in_target, exempt: w.y_count() == 0 })
}

#[derive(Clone, Debug, Serialize)]
pub struct InjectivityReport {
    pub p: u64,
    pub max_len: usize,
    pub checked: usize,
    pub scalar_failures: Vec<String>,
    pub pingpong_failures: Vec<String>,
    pub pingpong_exempt: Vec<String>,
    pub max_entry_degree: usize,
    /// Largest entry degree seen per y-count.
    pub degree_by_y_count: Vec<(usize, usize)>,
}

impl InjectivityReport {
    pub fn passed(&self) -> bool {
        self.scalar_failures.is_empty() && self.pingpong_failures.is_empty()
    }
}

/// Non-scalarity and ping-pong landing for every nonidentity normal form of
/// length at most `max_len`.
pub fn injectivity_suite(max_len: usize, p: Prime, exec: Exec) -> InjectivityReport {
    let words = xi_words_up_to(max_len);
    let results = par::map(exec, &words, |w| {
        let g = iota(w, p);
        let pp = pingpong_check(w, p).expect("nonidentity");
        (g.is_identity(), pp.in_target, pp.exempt, g.max_degree(), w.y_count())
    });
    let mut report = InjectivityReport {
        p: p.get(),
        max_len,
        checked: words.len(),
        scalar_failures: Vec::new(),
        pingpong_failures: Vec::new(),
        pingpong_exempt: Vec::new(),
        max_entry_degree: 0,
        degree_by_y_count: Vec::new(),
    };
    let mut by_y = std::collections::BTreeMap::new();
    for (w, (scalar, in_target, exempt, deg, ys)) in words.iter().zip(results) {
        if scalar {
            report.scalar_failures.push(w.to_string());
        }
        if exempt {
            report.pingpong_exempt.push(w.to_string());
        } else if !in_target {
            report.pingpong_failures.push(w.to_string());
        }
        report.max_entry_degree = report.max_entry_degree.max(deg);
        let e = by_y.entry(ys).or_insert(0);
        *e = (*e).max(deg);
    }
    report.degree_by_y_count = by_y.into_iter().collect();
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::xi::xi_reduce;

    fn p5() -> Prime {
        Prime::new(5).unwrap()
    }

    fn rf(p: Prime, s: &str) -> RatF {
        RatF::parse(p, s).unwrap()
    }

    #[test]
    fn torsion_is_scalar() {
        let p = p5();
        let x = iota_x(p);
        assert!(x.mul(&x).mul(&x).is_identity());
        let raw = iota_x(p).matrix().pow(3);
        assert!(raw.is_identity(), "x^3 is the identity matrix itself");
        let y2 = iota_y(p).matrix().pow(2);
        assert_eq!(y2, Mat2::scalar(RatF::var(&p)));
        assert!(!x.is_identity() && !iota_y(p).is_identity());
    }

    #[test]
    fn xy_product() {
        let p = p5();
        let raw = iota_x(p).matrix() * iota_y(p).matrix();
        assert_eq!(raw, Mat2::new(rf(p, "t"), rf(p, "0"), rf(p, "-t"), rf(p, "-1")));
        assert_eq!(raw.trace(), rf(p, "t - 1"));
        assert_eq!(raw.det(), rf(p, "-t"));
        assert_eq!(iota(&"x y".parse().unwrap(), p), PGL2Elt::new(raw).unwrap());
    }

    #[test]
    fn canonical_form_is_projective() {
        let p = p5();
        let g = iota(&"x y x' y x".parse().unwrap(), p);
        let scaled = PGL2Elt::new(g.matrix().scale(&rf(p, "3*t^2 + 1/1*t^1 + 2"))).unwrap();
        assert_eq!(scaled, g);
        assert_eq!(PGL2Elt::from_strings(p, &g.entry_strings()).unwrap(), g);
    }

    #[test]
    fn reduction_examples() {
        let p = p5();
        let mk = |a: &str, b: &str| ProjPt::new(rf(p, a), rf(p, b)).unwrap();
        assert_eq!(reduce_to_fp(&mk("1", "t")), ProjPt::infinity(&p));
        assert_eq!(reduce_to_fp(&mk("t + 1", "1")), ProjPt::affine(Fp::new(p, 1)));
        assert_eq!(reduce_to_fp(&mk("t", "t + 1")), ProjPt::affine(Fp::new(p, 0)));
    }

    #[test]
    fn pingpong_examples() {
        let p = p5();
        let y = pingpong_check(&"y".parse().unwrap(), p).unwrap();
        assert_eq!(y.landed, ProjPt::infinity(&p));
        let x = pingpong_check(&"x".parse().unwrap(), p).unwrap();
        // (0*1 + 1 : -1 - 1) = (1 : -2), i.e. -1/2
        assert_eq!(x.landed, ProjPt::affine(Fp::new(p, -1) * Fp::new(p, 2).inv().unwrap()));
        assert!(x.exempt);
        let w = pingpong_check(&xi_reduce(&[XiSym::X, XiSym::Y, XiSym::Xinv, XiSym::Y]), p).unwrap();
        assert!(w.in_target);
        assert!(pingpong_check(&XiWord::identity(), p).is_err());
    }

    #[test]
    fn x_cycles_the_target() {
        for p in [5u64, 7, 11] {
            let p = Prime::new(p).unwrap();
            let x = iota_x(p);
            let [zero, minus_one, inf] = pingpong_target(p);
            let lift = |q: &ProjPt<Fp>| match q.value() {
                Some(v) => ProjPt::affine(RatF::constant(*v)),
                None => ProjPt::infinity(&p),
            };
            assert_eq!(reduce_to_fp(&x.act(&lift(&inf))), zero);
            assert_eq!(reduce_to_fp(&x.act(&lift(&zero))), minus_one);
            assert_eq!(reduce_to_fp(&x.act(&lift(&minus_one))), inf);
        }
    }

    #[test]
    fn short_suite_passes() {
        let r = injectivity_suite(6, p5(), Exec::default());
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.pingpong_exempt, vec!["x".to_string(), "x'".to_string()]);
    }
}
