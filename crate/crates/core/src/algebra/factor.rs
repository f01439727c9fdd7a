//! Factorization of polynomials over F_p: square-free decomposition,
//! distinct-degree splitting, then seeded Cantor-Zassenhaus equal-degree
//! splitting. Tiny inputs use trial division instead.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::fp::{Fp, Prime};
use super::poly::FpPoly;
use crate::error::{Error, Result};

const FACTOR_SEED: u64 = 0x7472_6565_6368_6172;
const TRIAL_DIVISION_MAX_DEGREE: usize = 3;

/// Irreducible factorization `f = lead * prod(g_i ^ e_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub lead: Fp,
    /// Monic irreducible factors with multiplicities, sorted by degree then
    /// coefficients.
    pub factors: Vec<(FpPoly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> FpPoly {
        self.factors
            .iter()
            .fold(FpPoly::constant(self.lead), |acc, (g, e)| acc * g.pow(*e as u64))
    }
}

pub fn factor(f: &FpPoly) -> Result<Factorization> {
    let lead = *f.lead().ok_or(Error::ZeroPolynomial)?;
    let monic = f.monic();
    let mut factors: Vec<(FpPoly, u32)> = Vec::new();
    if monic.degree().unwrap_or(0) > 0 {
        if monic.degree().unwrap() <= TRIAL_DIVISION_MAX_DEGREE {
            factors = trial_division(&monic);
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(FACTOR_SEED);
            for (g, e) in square_free(&monic) {
                for (d, h) in distinct_degree(&g) {
                    for irr in equal_degree(&h, d, &mut rng) {
                        factors.push((irr, e));
                    }
                }
            }
        }
    }
    factors.sort_by(|a, b| poly_key(&a.0).cmp(&poly_key(&b.0)));
    Ok(Factorization { lead, factors })
}

fn poly_key(f: &FpPoly) -> (usize, Vec<u64>) {
    (f.degree().unwrap_or(0), f.coeffs().iter().rev().map(|c| c.value()).collect())
}

/// Rabin's test.
pub fn is_irreducible(f: &FpPoly) -> bool {
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let p = f.prime();
    let q = p.get() as u128;
    let x = FpPoly::x(&p);
    let frob = |k: usize| x.pow_mod(q.pow(k as u32), f);
    if frob(n) != x.rem(f) {
        return false;
    }
    for r in prime_divisors(n) {
        let h = frob(n / r) - x.clone();
        if !h.gcd(f).is_one() {
            return false;
        }
    }
    true
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// All monic irreducible polynomials of exactly degree `d`.
pub fn monic_irreducibles(p: Prime, d: usize) -> Vec<FpPoly> {
    let count = p.get().pow(d as u32);
    (0..count)
        .map(|i| FpPoly::monic_from_index(p, d, i))
        .filter(is_irreducible)
        .collect()
}

fn trial_division(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let p = f.prime();
    let mut rest = f.clone();
    let mut out = Vec::new();
    for d in 1..=TRIAL_DIVISION_MAX_DEGREE {
        if rest.degree().unwrap_or(0) < d {
            break;
        }
        for g in monic_irreducibles(p, d) {
            let mut e = 0;
            while g.divides(&rest) {
                rest = rest.exact_div(&g);
                e += 1;
            }
            if e > 0 {
                out.push((g, e));
            }
        }
    }
    debug_assert!(rest.degree() == Some(0));
    out
}

/// Square-free decomposition of a monic polynomial: pairs `(g, e)` with `g`
/// square-free and `f = prod g^e`.
fn square_free(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let p = f.prime().get() as u32;
    let mut out = Vec::new();
    let d = f.derivative();
    if d.is_zero() {
        // f = h(t^p) = h(t)^p over F_p.
        for (g, e) in square_free(&pth_root(f)) {
            out.push((g, e * p));
        }
        return out;
    }
    let c = f.gcd(&d);
    let mut w = f.exact_div(&c);
    let mut c = c;
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.exact_div(&y);
        if !z.is_one() {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = c.exact_div(&w);
    }
    if !c.is_one() {
        for (g, e) in square_free(&pth_root(&c)) {
            out.push((g, e * p));
        }
    }
    out
}

fn pth_root(f: &FpPoly) -> FpPoly {
    let p = f.prime();
    let step = p.get() as usize;
    let coeffs = f.coeffs().iter().step_by(step).cloned().collect();
    FpPoly::from_coeffs(&p, coeffs)
}

/// Splits a square-free monic polynomial into products of irreducibles of
/// equal degree.
fn distinct_degree(f: &FpPoly) -> Vec<(usize, FpPoly)> {
    let p = f.prime();
    let q = p.get() as u128;
    let x = FpPoly::x(&p);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.rem(&rest);
    let mut d = 0;
    while rest.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(q, &rest);
        let g = (h.clone() - x.clone()).gcd(&rest);
        if !g.is_one() {
            rest = rest.exact_div(&g);
            h = h.rem(&rest);
            out.push((d, g));
        }
    }
    if let Some(deg) = rest.degree() {
        if deg > 0 {
            out.push((deg, rest));
        }
    }
    out
}

fn equal_degree(f: &FpPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let n = f.degree().unwrap_or(0);
    if n == d {
        return vec![f.clone()];
    }
    let p = f.prime();
    let q = p.get() as u128;
    let exponent = (q.pow(d as u32) - 1) / 2;
    loop {
        let a = FpPoly::from_coeffs(&p, (0..n).map(|_| <Fp as crate::algebra::field::FiniteField>::random(&p, rng)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = a.pow_mod(exponent, f) - FpPoly::one(&p);
        let g = b.gcd(f);
        if let Some(gd) = g.degree() {
            if gd > 0 && gd < n {
                let mut out = equal_degree(&g, d, rng);
                out.extend(equal_degree(&f.exact_div(&g), d, rng));
                return out;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::FiniteField;
    use crate::algebra::field::Field;
    use rand::Rng;

    fn p5() -> Prime {
        Prime::new(5).unwrap()
    }

    #[test]
    fn t_squared_plus_one_splits_mod_5() {
        let f = FpPoly::from_ints(p5(), &[1, 0, 1]);
        let fac = factor(&f).unwrap();
        assert_eq!(
            fac.factors,
            vec![(FpPoly::linear(p5(), -2), 1), (FpPoly::linear(p5(), -3), 1)]
        );
    }

    #[test]
    fn single_linear() {
        let t = FpPoly::x(&p5());
        let fac = factor(&t).unwrap();
        assert_eq!(fac.factors, vec![(t, 1)]);
    }

    #[test]
    fn squared_irreducible_quadratic() {
        let g = FpPoly::from_ints(p5(), &[1, 1, 1]);
        assert!((0..5).all(|a| !g.eval(&Fp::new(p5(), a)).is_zero()));
        let fac = factor(&g.pow(2)).unwrap();
        assert_eq!(fac.factors, vec![(g, 2)]);
    }

    #[test]
    fn zero_rejected() {
        assert_eq!(factor(&FpPoly::zero(&p5())), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn irreducible_counts() {
        // Necklace counts: 5, 10, 40, 150 monic irreducibles of degree 1..4 over F_5.
        let counts: Vec<usize> = (1..=4).map(|d| monic_irreducibles(p5(), d).len()).collect();
        assert_eq!(counts, vec![5, 10, 40, 150]);
    }

    #[test]
    fn pth_powers() {
        let f = FpPoly::from_ints(p5(), &[1, 1]).pow(5) * FpPoly::from_ints(p5(), &[2, 0, 1]).pow(7);
        let fac = factor(&f).unwrap();
        assert_eq!(fac.expand(), f);
        assert!(fac.factors.iter().all(|(g, _)| is_irreducible(g)));
    }

    #[test]
    fn random_expansions() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for p in [5u64, 7, 13] {
            let pr = Prime::new(p).unwrap();
            for _ in 0..500 {
                let deg = rng.gen_range(0..=8);
                let mut coeffs: Vec<Fp> = (0..deg).map(|_| Fp::random(&pr, &mut rng)).collect();
                coeffs.push(Fp::random_nonzero(&pr, &mut rng));
                let f = FpPoly::from_coeffs(&pr, coeffs);
                let fac = factor(&f).unwrap();
                assert_eq!(fac.expand(), f);
                assert!(fac.factors.iter().all(|(g, _)| g.is_monic() && is_irreducible(g)));
            }
        }
    }
}
