use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Field;

/// Exponent triple `(e_u, e_v, e_w)`.
pub type Exponents = [u32; 3];

/// Sparse integer polynomial in u, v, w.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly3 {
    terms: BTreeMap<Exponents, i64>,
}

impl IntPoly3 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, [0, 0, 0])
    }

    pub fn monomial(c: i64, e: Exponents) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(e, c);
        }
        IntPoly3 { terms }
    }

    pub fn u() -> Self {
        Self::monomial(1, [1, 0, 0])
    }

    pub fn v() -> Self {
        Self::monomial(1, [0, 1, 0])
    }

    pub fn w() -> Self {
        Self::monomial(1, [0, 0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: Exponents) -> i64 {
        self.terms.get(&e).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &i64)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn add_term(&mut self, e: Exponents, c: i64) {
        let entry = self.terms.entry(e).or_insert(0);
        *entry = entry.checked_add(c).expect("IntPoly3 coefficient overflow");
        if *entry == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn eval<F: Field>(&self, u: &F, v: &F, w: &F) -> F {
        let ctx = u.ctx();
        let powers = |x: &F, k: u32| {
            let mut out = vec![F::one(&ctx)];
            for _ in 0..k {
                let last = out.last().unwrap().clone() * x.clone();
                out.push(last);
            }
            out
        };
        let deg = |i: usize| self.terms.keys().map(|e| e[i]).max().unwrap_or(0);
        let pu = powers(u, deg(0));
        let pv = powers(v, deg(1));
        let pw = powers(w, deg(2));
        self.terms.iter().fold(F::zero(&ctx), |acc, (e, &c)| {
            acc + F::from_int(&ctx, c) * pu[e[0] as usize].clone() * pv[e[1] as usize].clone() * pw[e[2] as usize].clone()
        })
    }

    /// Terms in graded lex order with u > v > w, highest first.
    pub fn sorted_terms(&self) -> Vec<(Exponents, i64)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (*e, *c)).collect();
        v.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        v
    }
}

impl Add for IntPoly3 {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for (e, c) in o.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Sub for IntPoly3 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for IntPoly3 {
    type Output = Self;
    fn neg(self) -> Self {
        IntPoly3 { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl Mul for &IntPoly3 {
    type Output = IntPoly3;
    fn mul(self, o: &IntPoly3) -> IntPoly3 {
        let mut out = IntPoly3::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                let e = [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
                out.add_term(e, ca.checked_mul(*cb).expect("IntPoly3 coefficient overflow"));
            }
        }
        out
    }
}

impl Mul for IntPoly3 {
    type Output = IntPoly3;
    fn mul(self, o: IntPoly3) -> IntPoly3 {
        &self * &o
    }
}

impl fmt::Display for IntPoly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let body = ["u", "v", "w"]
                .iter()
                .zip(e.iter())
                .filter(|(_, &k)| k > 0)
                .map(|(name, &k)| if k == 1 { name.to_string() } else { format!("{name}^{k}") })
                .collect::<Vec<_>>()
                .join("*");
            let mag = c.unsigned_abs();
            let coef = if body.is_empty() || mag != 1 { mag.to_string() } else { String::new() };
            let sep = if !coef.is_empty() && !body.is_empty() { "*" } else { "" };
            match (i, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{coef}{sep}{body}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
