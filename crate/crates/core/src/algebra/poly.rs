use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Field;
use super::fp::{Fp, Prime};

/// Dense univariate polynomial, coefficients low to high, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<F: Field> {
    coeffs: Vec<F>,
    ctx: F::Ctx,
}

/// Polynomials over F_p in the indeterminate t.
pub type FpPoly = Poly<Fp>;

impl<F: Field> Poly<F> {
    pub fn from_coeffs(ctx: &F::Ctx, mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs, ctx: ctx.clone() }
    }

    pub fn zero(ctx: &F::Ctx) -> Self {
        Poly { coeffs: Vec::new(), ctx: ctx.clone() }
    }

    pub fn constant(c: F) -> Self {
        let ctx = c.ctx();
        Self::from_coeffs(&ctx, vec![c])
    }

    pub fn one(ctx: &F::Ctx) -> Self {
        Self::constant(F::one(ctx))
    }

    /// `c * x^k`
    pub fn monomial(c: F, k: usize) -> Self {
        let ctx = c.ctx();
        let mut v = vec![c.zero_like(); k];
        v.push(c);
        Self::from_coeffs(&ctx, v)
    }

    /// The indeterminate.
    pub fn x(ctx: &F::Ctx) -> Self {
        Self::monomial(F::one(ctx), 1)
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(|| F::zero(&self.ctx))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_coeffs(&self.ctx, self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![F::zero(&self.ctx); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v, ctx: self.ctx.clone() }
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(&self.ctx), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * F::from_int(&self.ctx, k as i64))
            .collect();
        Self::from_coeffs(&self.ctx, v)
    }

    /// `x^d * f(1/x)` for `d >= deg f`.
    pub fn reversed(&self, d: usize) -> Self {
        let mut v = vec![F::zero(&self.ctx); d + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            v[d - k] = c.clone();
        }
        Self::from_coeffs(&self.ctx, v)
    }

    /// Euclidean division; `None` when dividing by zero.
    pub fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        let dd = d.degree()?;
        let lead_inv = d.lead()?.inv()?;
        let mut rem = self.coeffs.clone();
        let n = rem.len();
        if n <= dd {
            return Some((Self::zero(&self.ctx), self.clone()));
        }
        let mut quot = vec![F::zero(&self.ctx); n - dd];
        for k in (0..n - dd).rev() {
            let c = rem[k + dd].clone() * lead_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * dc.clone();
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Some((Self::from_coeffs(&self.ctx, quot), Self::from_coeffs(&self.ctx, rem)))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).expect("division by zero polynomial").1
    }

    /// Exact quotient, panicking when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d).expect("division by zero polynomial");
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_rem(self).is_some_and(|(_, r)| r.is_zero())
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let zero = Self::zero(&self.ctx);
        let one = Self::one(&self.ctx);
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (one.clone(), zero.clone());
        let (mut t0, mut t1) = (zero, one);
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = s0 - q.clone() * s1.clone();
            s0 = std::mem::replace(&mut s1, s);
            let t = t0 - q * t1.clone();
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lead().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let li = l.inv().expect("nonzero");
                (r0.scale(&li), s0.scale(&li), t0.scale(&li))
            }
        }
    }

    /// Inverse of `self` modulo `m`, if coprime.
    pub fn inv_mod(&self, m: &Self) -> Option<Self> {
        let (g, s, _) = self.rem(m).ext_gcd(m);
        if g.is_one() {
            Some(s.rem(m))
        } else {
            None
        }
    }

    pub fn mul_mod(&self, other: &Self, m: &Self) -> Self {
        (self.clone() * other.clone()).rem(m)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ctx);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }

    pub fn pow_mod(&self, mut e: u128, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one(&self.ctx).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m);
            }
            base = base.mul_mod(&base, m);
            e >>= 1;
        }
        acc
    }
}

impl<F: Field> Add for Poly<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let (mut long, short) = if self.coeffs.len() >= o.coeffs.len() { (self, o) } else { (o, self) };
        for (k, c) in short.coeffs.into_iter().enumerate() {
            long.coeffs[k] = long.coeffs[k].clone() + c;
        }
        Self::from_coeffs(&long.ctx.clone(), long.coeffs)
    }
}

impl<F: Field> Neg for Poly<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Poly { coeffs: self.coeffs.into_iter().map(|c| -c).collect(), ctx: self.ctx }
    }
}

impl<F: Field> Sub for Poly<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<F: Field> Mul for Poly<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(&self.ctx);
        }
        let mut v = vec![F::zero(&self.ctx); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::from_coeffs(&self.ctx, v)
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

impl FpPoly {
    pub fn from_ints(p: Prime, coeffs: &[i64]) -> Self {
        Self::from_coeffs(&p, coeffs.iter().map(|&c| Fp::new(p, c)).collect())
    }

    /// `t - a`
    pub fn linear(p: Prime, a: i64) -> Self {
        Self::from_ints(p, &[-a, 1])
    }

    pub fn prime(&self) -> Prime {
        self.ctx
    }

    /// The monic polynomial of degree `d` whose lower coefficients are the
    /// base-p digits of `idx`.
    pub fn monic_from_index(p: Prime, d: usize, mut idx: u64) -> Self {
        let mut v = Vec::with_capacity(d + 1);
        for _ in 0..d {
            v.push(Fp::new(p, (idx % p.get()) as i64));
            idx /= p.get();
        }
        v.push(Fp::new(p, 1));
        Self::from_coeffs(&p, v)
    }

    /// All polynomials of degree < d (the residue representatives modulo a
    /// degree-d polynomial).
    pub fn all_below_degree(p: Prime, d: usize) -> Vec<Self> {
        let count = p.get().pow(d as u32);
        (0..count)
            .map(|mut idx| {
                let mut v = Vec::with_capacity(d);
                for _ in 0..d {
                    v.push(Fp::new(p, (idx % p.get()) as i64));
                    idx /= p.get();
                }
                Self::from_coeffs(&p, v)
            })
            .collect()
    }
}

/// Canonical text: `c_k*t^k + ... + c_1*t^1 + c_0`, zero terms omitted,
/// coefficients in [0, p). The zero polynomial prints as `0`.
impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*t^{k}")?;
            }
        }
        Ok(())
    }
}
