use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::field::Field;
use super::fp::{Fp, Prime};
use super::poly::Poly;
use crate::error::{Error, Result};

/// Rational function `num/den` in lowest terms with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc<F: Field> {
    num: Poly<F>,
    den: Poly<F>,
}

/// The rational function field F_p(t).
pub type RatF = RatFunc<Fp>;

impl<F: Field> RatFunc<F> {
    /// Builds the canonical form; `None` when `den` is zero.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(RatFunc { den: Poly::one(num.ctx()), num });
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() { (num, den) } else { (num.exact_div(&g), den.exact_div(&g)) };
        if !den.is_monic() {
            let li = den.lead().expect("nonzero").inv().expect("nonzero");
            num = num.scale(&li);
            den = den.scale(&li);
        }
        Some(RatFunc { num, den })
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        let one = Poly::one(p.ctx());
        RatFunc { num: p, den: one }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// The indeterminate.
    pub fn var(ctx: &F::Ctx) -> Self {
        Self::from_poly(Poly::x(ctx))
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Re-canonicalizes; the identity on values built through the public API.
    pub fn canonical(&self) -> Self {
        Self::new(self.num.clone(), self.den.clone()).expect("nonzero denominator")
    }

    /// `f(t) -> f(1/t)`, the automorphism swapping the places `t` and infinity.
    pub fn invert_variable(&self) -> Self {
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        let d = dn.max(dd);
        Self::new(self.num.reversed(d), self.den.reversed(d)).expect("nonzero denominator")
    }

    pub fn eval(&self, x: &F) -> Option<F> {
        self.num.eval(x).div(&self.den.eval(x))
    }
}

impl<F: Field> Add for RatFunc<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        if self.den == o.den {
            return Self::new(self.num + o.num, self.den).expect("nonzero");
        }
        let num = self.num * o.den.clone() + o.num * self.den.clone();
        Self::new(num, self.den * o.den).expect("nonzero")
    }
}

impl<F: Field> Sub for RatFunc<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<F: Field> Neg for RatFunc<F> {
    type Output = Self;
    fn neg(self) -> Self {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl<F: Field> Mul for RatFunc<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.den.is_one() && o.den.is_one() {
            return Self::from_poly(self.num * o.num);
        }
        Self::new(self.num * o.num, self.den * o.den).expect("nonzero")
    }
}

impl<F: Field> Field for RatFunc<F> {
    type Ctx = F::Ctx;

    fn ctx(&self) -> F::Ctx {
        self.num.ctx().clone()
    }

    fn zero(ctx: &F::Ctx) -> Self {
        Self::from_poly(Poly::zero(ctx))
    }

    fn one(ctx: &F::Ctx) -> Self {
        Self::from_poly(Poly::one(ctx))
    }

    fn from_int(ctx: &F::Ctx, n: i64) -> Self {
        Self::constant(F::from_int(ctx, n))
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Self::new(self.den.clone(), self.num.clone())
        }
    }

    fn characteristic(ctx: &F::Ctx) -> u64 {
        F::characteristic(ctx)
    }
}

impl<F: Field> fmt::Debug for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})/({:?})", self.num, self.den)
    }
}

/// Canonical text `num/den`, always with the denominator.
impl fmt::Display for RatF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl RatF {
    pub fn prime(&self) -> Prime {
        self.num.prime()
    }

    /// Parses `num/den` (or a bare polynomial). Terms are `c*t^k`, `c*t`,
    /// `t^k`, `t` or `c`, joined by `+` or `-`.
    pub fn parse(p: Prime, s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut parts = compact.split('/');
        let num = parse_poly(p, parts.next().unwrap_or(""))?;
        let den = match parts.next() {
            Some(d) => parse_poly(p, d)?,
            None => Poly::one(&p),
        };
        if parts.next().is_some() {
            return Err(Error::Parse(format!("too many '/' in {s:?}")));
        }
        RatF::new(num, den).ok_or_else(|| Error::Parse(format!("zero denominator in {s:?}")))
    }
}

fn parse_poly(p: Prime, s: &str) -> Result<Poly<Fp>> {
    let s = s.trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut acc = Poly::zero(&p);
    let signed = s.replace('-', "+-");
    for raw in signed.split('+').filter(|t| !t.is_empty()) {
        let (neg, term) = match raw.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, raw),
        };
        let bad = || Error::Parse(format!("bad term {raw:?}"));
        let (coef, power) = match term.find('t') {
            None => (term.parse::<i64>().map_err(|_| bad())?, 0usize),
            Some(pos) => {
                let c = match term[..pos].trim_end_matches('*') {
                    "" => 1,
                    c => c.parse::<i64>().map_err(|_| bad())?,
                };
                let k = match &term[pos + 1..] {
                    "" => 1,
                    rest => rest.strip_prefix('^').ok_or_else(bad)?.parse::<usize>().map_err(|_| bad())?,
                };
                (c, k)
            }
        };
        let c = Fp::new(p, if neg { -coef } else { coef });
        acc = acc + Poly::monomial(c, power);
    }
    Ok(acc)
}

impl FromStr for RatF {
    type Err = Error;
    /// Parses with an explicit `p:` prefix, e.g. `5:1*t^1 + 4/1`.
    fn from_str(s: &str) -> Result<Self> {
        let (p, rest) = s.split_once(':').ok_or_else(|| Error::Parse("missing prime prefix".into()))?;
        let p = Prime::new(p.trim().parse().map_err(|_| Error::Parse(format!("bad prime {p:?}")))?)?;
        RatF::parse(p, rest)
    }
}
