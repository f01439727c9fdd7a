use std::fmt::Debug;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;

/// A commutative field whose elements carry their own context (the prime,
/// the chosen non-residue, ...), so that constants can be produced from any
/// element without global state.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    type Ctx: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_int(ctx: &Self::Ctx, n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Option<Self>;
    fn characteristic(ctx: &Self::Ctx) -> u64;

    fn is_one(&self) -> bool {
        *self == Self::one(&self.ctx())
    }

    fn zero_like(&self) -> Self {
        Self::zero(&self.ctx())
    }

    fn one_like(&self) -> Self {
        Self::one(&self.ctx())
    }

    fn int_like(&self, n: i64) -> Self {
        Self::from_int(&self.ctx(), n)
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }
}

/// Finite fields: enumerable, with a canonical index used for deterministic
/// choices (e.g. "the smaller square root").
pub trait FiniteField: Field {
    fn order(ctx: &Self::Ctx) -> u64;
    fn index(&self) -> u64;
    fn from_index(ctx: &Self::Ctx, idx: u64) -> Self;

    fn elements(ctx: &Self::Ctx) -> Vec<Self> {
        (0..Self::order(ctx)).map(|i| Self::from_index(ctx, i)).collect()
    }

    fn random<R: Rng + ?Sized>(ctx: &Self::Ctx, rng: &mut R) -> Self {
        Self::from_index(ctx, rng.gen_range(0..Self::order(ctx)))
    }

    fn random_nonzero<R: Rng + ?Sized>(ctx: &Self::Ctx, rng: &mut R) -> Self {
        Self::from_index(ctx, rng.gen_range(1..Self::order(ctx)))
    }

    /// Euler's criterion; zero counts as a square.
    fn is_square(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        let q = Self::order(&self.ctx());
        self.pow((q - 1) / 2).is_one()
    }

    /// First non-square in enumeration order.
    fn first_non_square(ctx: &Self::Ctx) -> Self {
        (1..Self::order(ctx))
            .map(|i| Self::from_index(ctx, i))
            .find(|x| !x.is_square())
            .expect("odd-order field has a non-square")
    }

    /// Tonelli-Shanks. Of the two roots, returns the one with smaller index.
    fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if !self.is_square() {
            return None;
        }
        let ctx = self.ctx();
        let q = Self::order(&ctx);
        let mut s = 0u32;
        let mut odd = q - 1;
        while odd % 2 == 0 {
            odd /= 2;
            s += 1;
        }
        let z = Self::first_non_square(&ctx);
        let mut m = s;
        let mut c = z.pow(odd);
        let mut t = self.pow(odd);
        let mut r = self.pow((odd + 1) / 2);
        while !t.is_one() {
            let mut i = 0u32;
            let mut tt = t.clone();
            while !tt.is_one() {
                tt = tt.square();
                i += 1;
            }
            let mut b = c.clone();
            for _ in 0..(m - i - 1) {
                b = b.square();
            }
            m = i;
            c = b.square();
            t = t * c.clone();
            r = r * b;
        }
        let other = -r.clone();
        Some(if other.index() < r.index() { other } else { r })
    }
}
