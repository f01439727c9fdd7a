use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::field::{FiniteField, Field};
use crate::error::{Error, Result};

/// A prime p >= 5.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p < 5 {
            return Err(Error::CharacteristicTooSmall(p));
        }
        if p > u32::MAX as u64 {
            return Err(Error::Config(format!("prime {p} too large")));
        }
        Ok(Prime(p as u32))
    }

    pub fn get(self) -> u64 {
        self.0 as u64
    }
}

impl TryFrom<u64> for Prime {
    type Error = Error;
    fn try_from(p: u64) -> Result<Self> {
        Prime::new(p)
    }
}

impl From<Prime> for u64 {
    fn from(p: Prime) -> u64 {
        p.get()
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Element of the prime field F_p.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    v: u32,
    p: Prime,
}

impl Fp {
    pub fn new(p: Prime, n: i64) -> Self {
        let m = p.get() as i64;
        Fp { v: n.rem_euclid(m) as u32, p }
    }

    pub fn value(self) -> u64 {
        self.v as u64
    }

    pub fn prime(self) -> Prime {
        self.p
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        let p = self.p.get();
        Fp { v: ((self.v as u64 + o.v as u64) % p) as u32, p: self.p }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        let p = self.p.get();
        Fp { v: ((self.v as u64 + p - o.v as u64) % p) as u32, p: self.p }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        let p = self.p.get();
        Fp { v: ((self.v as u64 * o.v as u64) % p) as u32, p: self.p }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        let p = self.p.get();
        Fp { v: ((p - self.v as u64) % p) as u32, p: self.p }
    }
}

impl Field for Fp {
    type Ctx = Prime;

    fn ctx(&self) -> Prime {
        self.p
    }

    fn zero(ctx: &Prime) -> Self {
        Fp { v: 0, p: *ctx }
    }

    fn one(ctx: &Prime) -> Self {
        Fp { v: 1, p: *ctx }
    }

    fn from_int(ctx: &Prime, n: i64) -> Self {
        Fp::new(*ctx, n)
    }

    fn is_zero(&self) -> bool {
        self.v == 0
    }

    fn is_one(&self) -> bool {
        self.v == 1
    }

    fn inv(&self) -> Option<Self> {
        if self.v == 0 {
            None
        } else {
            Some(self.pow(self.p.get() - 2))
        }
    }

    fn characteristic(ctx: &Prime) -> u64 {
        ctx.get()
    }
}

impl FiniteField for Fp {
    fn order(ctx: &Prime) -> u64 {
        ctx.get()
    }

    fn index(&self) -> u64 {
        self.v as u64
    }

    fn from_index(ctx: &Prime, idx: u64) -> Self {
        Fp { v: (idx % ctx.get()) as u32, p: *ctx }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5(n: i64) -> Fp {
        Fp::new(Prime::new(5).unwrap(), n)
    }

    #[test]
    fn prime_validation() {
        assert!(Prime::new(5).is_ok());
        assert!(Prime::new(169).is_err());
        assert_eq!(Prime::new(3), Err(Error::CharacteristicTooSmall(3)));
        assert_eq!(Prime::new(9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(f5(4).sqrt(), Some(f5(2)));
        assert_eq!(f5(2).sqrt(), None);
        assert_eq!(f5(-1).sqrt(), Some(f5(2)));
        assert_eq!(f5(0).sqrt(), Some(f5(0)));
    }

    #[test]
    fn sqrt_all_primes() {
        for p in [5u64, 7, 11, 13, 17, 29, 97] {
            let pr = Prime::new(p).unwrap();
            for x in Fp::elements(&pr) {
                match x.sqrt() {
                    Some(r) => {
                        assert_eq!(r * r, x);
                        assert!(r.value() <= p - r.value() || r.value() == 0);
                    }
                    None => assert!(!x.is_square()),
                }
            }
        }
    }

    #[test]
    fn inverses() {
        for n in 1..5 {
            let x = f5(n);
            assert!((x * x.inv().unwrap()).is_one());
        }
        assert!(f5(0).inv().is_none());
    }
}
