use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{FiniteField, Field};
use super::fp::{Fp, Prime};

/// Defining data of a quadratic extension `F[w]/(w^2 - c1 w - c0)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadCtx<F: Field> {
    pub c0: F,
    pub c1: F,
}

impl<F: FiniteField> QuadCtx<F> {
    /// `w^2 = n` with `n` the first non-square of the base field.
    pub fn standard(base: &F::Ctx) -> Self {
        let n = F::first_non_square(base);
        QuadCtx { c1: n.zero_like(), c0: n }
    }
}

impl<F: Field> QuadCtx<F> {
    pub fn base_ctx(&self) -> F::Ctx {
        self.c0.ctx()
    }

    pub fn generator(&self) -> QuadExt<F> {
        QuadExt { a: self.c0.zero_like(), b: self.c0.one_like(), ctx: self.clone() }
    }

    pub fn embed(&self, a: F) -> QuadExt<F> {
        QuadExt { b: a.zero_like(), a, ctx: self.clone() }
    }
}

/// `a + b*w` in a quadratic extension. With the standard context this is
/// F_{q^2}; with an arbitrary monic quadratic it adjoins a root of it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt<F: Field> {
    a: F,
    b: F,
    ctx: QuadCtx<F>,
}

/// F_{p^2} with `w^2` the smallest quadratic non-residue mod p.
pub type Fp2 = QuadExt<Fp>;

impl Fp2 {
    pub fn context(p: Prime) -> QuadCtx<Fp> {
        QuadCtx::standard(&p)
    }
}

impl<F: Field> QuadExt<F> {
    pub fn new(ctx: &QuadCtx<F>, a: F, b: F) -> Self {
        QuadExt { a, b, ctx: ctx.clone() }
    }

    pub fn parts(&self) -> (&F, &F) {
        (&self.a, &self.b)
    }

    pub fn is_base(&self) -> bool {
        self.b.is_zero()
    }

    pub fn norm(&self) -> F {
        let QuadCtx { c0, c1 } = &self.ctx;
        self.a.clone() * self.a.clone() + self.a.clone() * self.b.clone() * c1.clone()
            - self.b.clone() * self.b.clone() * c0.clone()
    }
}

impl<F: Field + fmt::Debug> fmt::Debug for QuadExt<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + {:?}w)", self.a, self.b)
    }
}

impl<F: Field + fmt::Display> fmt::Display for QuadExt<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{}+{}w", self.a, self.b)
        }
    }
}

impl<F: Field> Add for QuadExt<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        QuadExt { a: self.a + o.a, b: self.b + o.b, ctx: self.ctx }
    }
}

impl<F: Field> Sub for QuadExt<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        QuadExt { a: self.a - o.a, b: self.b - o.b, ctx: self.ctx }
    }
}

impl<F: Field> Neg for QuadExt<F> {
    type Output = Self;
    fn neg(self) -> Self {
        QuadExt { a: -self.a, b: -self.b, ctx: self.ctx }
    }
}

impl<F: Field> Mul for QuadExt<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let bd = self.b.clone() * o.b.clone();
        let a = self.a.clone() * o.a.clone() + bd.clone() * self.ctx.c0.clone();
        let b = self.a * o.b + self.b * o.a + bd * self.ctx.c1.clone();
        QuadExt { a, b, ctx: self.ctx }
    }
}

impl<F: Field> Field for QuadExt<F> {
    type Ctx = QuadCtx<F>;

    fn ctx(&self) -> QuadCtx<F> {
        self.ctx.clone()
    }

    fn zero(ctx: &QuadCtx<F>) -> Self {
        ctx.embed(ctx.c0.zero_like())
    }

    fn one(ctx: &QuadCtx<F>) -> Self {
        ctx.embed(ctx.c0.one_like())
    }

    fn from_int(ctx: &QuadCtx<F>, n: i64) -> Self {
        ctx.embed(ctx.c0.int_like(n))
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn inv(&self) -> Option<Self> {
        let n = self.norm().inv()?;
        let a = (self.a.clone() + self.b.clone() * self.ctx.c1.clone()) * n.clone();
        let b = -(self.b.clone() * n);
        Some(QuadExt { a, b, ctx: self.ctx.clone() })
    }

    fn characteristic(ctx: &QuadCtx<F>) -> u64 {
        F::characteristic(&ctx.base_ctx())
    }
}

impl<F: FiniteField> FiniteField for QuadExt<F> {
    fn order(ctx: &QuadCtx<F>) -> u64 {
        let q = F::order(&ctx.base_ctx());
        q * q
    }

    fn index(&self) -> u64 {
        let q = F::order(&self.ctx.base_ctx());
        self.a.index() + q * self.b.index()
    }

    fn from_index(ctx: &QuadCtx<F>, idx: u64) -> Self {
        let base = ctx.base_ctx();
        let q = F::order(&base);
        QuadExt {
            a: F::from_index(&base, idx % q),
            b: F::from_index(&base, (idx / q) % q),
            ctx: ctx.clone(),
        }
    }
}
