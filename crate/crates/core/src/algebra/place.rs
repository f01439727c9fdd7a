use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;


use super::factor::{factor, is_irreducible};
use super::field::Field;
use super::fp::Prime;
use super::poly::FpPoly;
use super::ratfunc::RatF;
use crate::error::{Error, Result};

/// Normalization used at the infinite place, stated in every report.
pub const INFINITE_VALUATION_CONVENTION: &str = "v_inf(num/den) = deg(den) - deg(num)";

/// Value of a discrete valuation, with a dedicated `+inf` for zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinity,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Valuation::Infinity
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Infinity, Valuation::Infinity) => Ordering::Equal,
            (Valuation::Infinity, _) => Ordering::Greater,
            (_, Valuation::Infinity) => Ordering::Less,
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
        }
    }
}

impl Add for Valuation {
    type Output = Valuation;
    fn add(self, o: Valuation) -> Valuation {
        match (self, o) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinity,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => write!(f, "+inf"),
        }
    }
}

/// A place of F_p(t): a monic irreducible polynomial, or infinity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Place {
    Finite(FpPoly),
    Infinity,
}

impl Place {
    pub fn finite(pi: FpPoly) -> Result<Self> {
        if !pi.is_monic() || !is_irreducible(&pi) {
            return Err(Error::Parse(format!("{pi} is not monic irreducible")));
        }
        Ok(Place::Finite(pi))
    }

    /// The place `t - a`.
    pub fn linear(p: Prime, a: i64) -> Self {
        Place::Finite(FpPoly::linear(p, a))
    }

    /// The place `t`.
    pub fn origin(p: Prime) -> Self {
        Place::linear(p, 0)
    }

    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(pi) => pi.degree().expect("nonzero"),
            Place::Infinity => 1,
        }
    }

    /// Cardinality of the residue field.
    pub fn residue_size(&self, p: Prime) -> u64 {
        p.get().pow(self.degree() as u32)
    }

    pub fn label(&self) -> String {
        match self {
            Place::Finite(pi) => format!("({pi})"),
            Place::Infinity => "inf".to_string(),
        }
    }

    pub fn parse(p: Prime, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s.eq_ignore_ascii_case("infinity") {
            return Ok(Place::Infinity);
        }
        let f = RatF::parse(p, s.trim_start_matches('(').trim_end_matches(')'))?;
        if !f.is_polynomial() {
            return Err(Error::Parse(format!("place {s:?} is not a polynomial")));
        }
        Place::finite(f.num().clone())
    }
}

impl fmt::Debug for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Multiplicity of `pi` in a nonzero polynomial.
pub fn poly_multiplicity(f: &FpPoly, pi: &FpPoly) -> i64 {
    let mut f = f.clone();
    let mut k = 0;
    loop {
        let (q, r) = f.div_rem(pi).expect("nonzero place");
        if !r.is_zero() {
            return k;
        }
        f = q;
        k += 1;
    }
}

pub fn valuation(f: &RatF, place: &Place) -> Valuation {
    if f.is_zero() {
        return Valuation::Infinity;
    }
    match place {
        Place::Finite(pi) => Valuation::Finite(poly_multiplicity(f.num(), pi) - poly_multiplicity(f.den(), pi)),
        Place::Infinity => {
            let dn = f.num().degree().expect("nonzero") as i64;
            let dd = f.den().degree().expect("nonzero") as i64;
            Valuation::Finite(dd - dn)
        }
    }
}

/// Places where a nonzero `f` has nonzero valuation: factors of num and den,
/// plus infinity when the degrees differ.
pub fn support(f: &RatF) -> Vec<Place> {
    let mut out = Vec::new();
    for poly in [f.num(), f.den()] {
        if poly.degree().unwrap_or(0) > 0 {
            for (g, _) in factor(poly).expect("nonzero").factors {
                out.push(Place::Finite(g));
            }
        }
    }
    if f.num().degree() != f.den().degree() {
        out.push(Place::Infinity);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::FiniteField;
    use crate::algebra::fp::Fp;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p5() -> Prime {
        Prime::new(5).unwrap()
    }

    fn random_poly(p: Prime, rng: &mut ChaCha8Rng, max_deg: usize) -> FpPoly {
        loop {
            let d = rng.gen_range(0..=max_deg);
            let f = FpPoly::from_coeffs(&p, (0..=d).map(|_| Fp::random(&p, rng)).collect());
            if !f.is_zero() {
                return f;
            }
        }
    }

    fn random_ratf(p: Prime, rng: &mut ChaCha8Rng) -> RatF {
        RatF::new(random_poly(p, rng, 4), random_poly(p, rng, 4)).unwrap()
    }

    #[test]
    fn examples() {
        let p = p5();
        let t = RatF::var(&p);
        assert_eq!(valuation(&t, &Place::origin(p)), Valuation::Finite(1));
        let f = RatF::new(FpPoly::one(&p), FpPoly::from_ints(p, &[1, 1])).unwrap();
        assert_eq!(valuation(&f, &Place::Infinity), Valuation::Finite(1));
        let g = RatF::new(FpPoly::from_ints(p, &[0, -1, 1]), FpPoly::from_ints(p, &[-1, 1])).unwrap();
        assert_eq!(g, t);
        assert_eq!(valuation(&g, &Place::linear(p, 1)), Valuation::Finite(0));
        assert_eq!(valuation(&RatF::zero(&p), &Place::Infinity), Valuation::Infinity);
    }

    #[test]
    fn valuation_is_multiplicative_and_ultrametric() {
        let p = p5();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let places = [Place::origin(p), Place::linear(p, 1), Place::finite(FpPoly::from_ints(p, &[2, 0, 1])).unwrap(), Place::Infinity];
        for _ in 0..1000 {
            let f = random_ratf(p, &mut rng);
            let g = random_ratf(p, &mut rng);
            for pl in &places {
                let vf = valuation(&f, pl);
                let vg = valuation(&g, pl);
                assert_eq!(valuation(&(f.clone() * g.clone()), pl), vf + vg);
                assert!(valuation(&(f.clone() + g.clone()), pl) >= vf.min(vg));
            }
        }
    }

    #[test]
    fn product_formula() {
        let p = Prime::new(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let f = random_ratf(p, &mut rng);
            if f.is_zero() {
                continue;
            }
            let total: i64 = support(&f)
                .iter()
                .map(|pl| pl.degree() as i64 * valuation(&f, pl).finite().unwrap())
                .sum();
            assert_eq!(total, 0);
        }
    }

    #[test]
    fn place_parsing() {
        let p = p5();
        assert_eq!(Place::parse(p, "inf").unwrap(), Place::Infinity);
        assert_eq!(Place::parse(p, "(1*t^1 + 1)").unwrap(), Place::linear(p, -1));
        assert!(Place::parse(p, "t^2 + 4").is_err());
    }
}
