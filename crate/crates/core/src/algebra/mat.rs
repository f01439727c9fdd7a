use std::fmt;
use std::ops::Mul;

use super::field::Field;
use crate::error::{Error, Result};

/// 2x2 matrix `[[m11, m12], [m21, m22]]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat2<F: Field> {
    pub m11: F,
    pub m12: F,
    pub m21: F,
    pub m22: F,
}

impl<F: Field> Mat2<F> {
    pub fn new(m11: F, m12: F, m21: F, m22: F) -> Self {
        Mat2 { m11, m12, m21, m22 }
    }

    pub fn identity(ctx: &F::Ctx) -> Self {
        Self::scalar(F::one(ctx))
    }

    pub fn scalar(c: F) -> Self {
        let z = c.zero_like();
        Mat2 { m11: c.clone(), m12: z.clone(), m21: z, m22: c }
    }

    pub fn diag(a: F, d: F) -> Self {
        let z = a.zero_like();
        Mat2 { m11: a, m12: z.clone(), m21: z, m22: d }
    }

    pub fn ctx(&self) -> F::Ctx {
        self.m11.ctx()
    }

    pub fn entries(&self) -> [&F; 4] {
        [&self.m11, &self.m12, &self.m21, &self.m22]
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Mat2<G> {
        Mat2 { m11: f(&self.m11), m12: f(&self.m12), m21: f(&self.m21), m22: f(&self.m22) }
    }

    pub fn det(&self) -> F {
        self.m11.clone() * self.m22.clone() - self.m12.clone() * self.m21.clone()
    }

    pub fn trace(&self) -> F {
        self.m11.clone() + self.m22.clone()
    }

    pub fn scale(&self, c: &F) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    /// The adjugate, equal to `det * inverse`.
    pub fn adjugate(&self) -> Self {
        Mat2 {
            m11: self.m22.clone(),
            m12: -self.m12.clone(),
            m21: -self.m21.clone(),
            m22: self.m11.clone(),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        let d = self.det().inv().ok_or(Error::SingularMatrix)?;
        Ok(self.adjugate().scale(&d))
    }

    pub fn is_scalar(&self) -> bool {
        self.m12.is_zero() && self.m21.is_zero() && self.m11 == self.m22
    }

    pub fn is_identity(&self) -> bool {
        self.is_scalar() && self.m11.is_one()
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(&self.ctx());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl<F: Field> Mul for &Mat2<F> {
    type Output = Mat2<F>;
    fn mul(self, o: &Mat2<F>) -> Mat2<F> {
        Mat2 {
            m11: self.m11.clone() * o.m11.clone() + self.m12.clone() * o.m21.clone(),
            m12: self.m11.clone() * o.m12.clone() + self.m12.clone() * o.m22.clone(),
            m21: self.m21.clone() * o.m11.clone() + self.m22.clone() * o.m21.clone(),
            m22: self.m21.clone() * o.m12.clone() + self.m22.clone() * o.m22.clone(),
        }
    }
}

impl<F: Field> Mul for Mat2<F> {
    type Output = Mat2<F>;
    fn mul(self, o: Mat2<F>) -> Mat2<F> {
        &self * &o
    }
}

impl<F: Field> fmt::Debug for Mat2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{:?}, {:?}], [{:?}, {:?}]]", self.m11, self.m12, self.m21, self.m22)
    }
}

/// Point `(P : Q)` of the projective line, stored canonically as `(x : 1)`
/// or `(1 : 0)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjPt<F: Field> {
    p: F,
    q: F,
}

impl<F: Field> ProjPt<F> {
    pub fn new(p: F, q: F) -> Option<Self> {
        if q.is_zero() {
            if p.is_zero() {
                return None;
            }
            let one = p.one_like();
            return Some(ProjPt { p: one, q });
        }
        let x = p.div(&q)?;
        Some(ProjPt { p: x, q: q.one_like() })
    }

    pub fn affine(x: F) -> Self {
        let one = x.one_like();
        ProjPt { p: x, q: one }
    }

    pub fn infinity(ctx: &F::Ctx) -> Self {
        ProjPt { p: F::one(ctx), q: F::zero(ctx) }
    }

    pub fn is_infinity(&self) -> bool {
        self.q.is_zero()
    }

    pub fn coords(&self) -> (&F, &F) {
        (&self.p, &self.q)
    }

    /// Affine coordinate, `None` at infinity.
    pub fn value(&self) -> Option<&F> {
        if self.is_infinity() {
            None
        } else {
            Some(&self.p)
        }
    }
}

impl<F: Field> fmt::Debug for ProjPt<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} : {:?})", self.p, self.q)
    }
}

/// Moebius action `(P : Q) -> (m11 P + m12 Q : m21 P + m22 Q)`.
pub fn mobius_act<F: Field>(m: &Mat2<F>, x: &ProjPt<F>) -> Result<ProjPt<F>> {
    if m.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    let (p, q) = x.coords();
    let np = m.m11.clone() * p.clone() + m.m12.clone() * q.clone();
    let nq = m.m21.clone() * p.clone() + m.m22.clone() * q.clone();
    Ok(ProjPt::new(np, nq).expect("invertible matrix maps nonzero vectors to nonzero vectors"))
}

/// 3x3 matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat3<F: Field> {
    pub rows: [[F; 3]; 3],
}

impl<F: Field> Mat3<F> {
    pub fn identity(ctx: &F::Ctx) -> Self {
        let z = F::zero(ctx);
        let o = F::one(ctx);
        Mat3 {
            rows: [
                [o.clone(), z.clone(), z.clone()],
                [z.clone(), o.clone(), z.clone()],
                [z.clone(), z, o],
            ],
        }
    }

    pub fn is_identity(&self) -> bool {
        (0..3).all(|i| (0..3).all(|j| if i == j { self.rows[i][j].is_one() } else { self.rows[i][j].is_zero() }))
    }
}

impl<F: Field> Mul for &Mat3<F> {
    type Output = Mat3<F>;
    fn mul(self, o: &Mat3<F>) -> Mat3<F> {
        let entry = |i: usize, j: usize| {
            (0..3).fold(self.rows[0][0].zero_like(), |acc, k| acc + self.rows[i][k].clone() * o.rows[k][j].clone())
        };
        Mat3 {
            rows: [
                [entry(0, 0), entry(0, 1), entry(0, 2)],
                [entry(1, 0), entry(1, 1), entry(1, 2)],
                [entry(2, 0), entry(2, 1), entry(2, 2)],
            ],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::FiniteField;
    use crate::algebra::fp::{Fp, Prime};
    use crate::algebra::poly::FpPoly;
    use crate::algebra::ratfunc::RatF;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn m5(a: i64, b: i64, c: i64, d: i64) -> Mat2<Fp> {
        let p = Prime::new(5).unwrap();
        Mat2::new(Fp::new(p, a), Fp::new(p, b), Fp::new(p, c), Fp::new(p, d))
    }

    #[test]
    fn mobius_examples() {
        let p = Prime::new(5).unwrap();
        let x = ProjPt::affine(Fp::new(p, 3));
        assert_eq!(mobius_act(&m5(1, 0, 0, 1), &x).unwrap(), x);
        let inf = ProjPt::infinity(&p);
        let zero = ProjPt::affine(Fp::new(p, 0));
        assert_eq!(mobius_act(&m5(0, 1, -1, -1), &inf).unwrap(), zero);
        assert_eq!(mobius_act(&m5(1, 1, 1, 1), &x), Err(Error::SingularMatrix));

        let t = RatF::var(&p);
        let one = RatF::one(&p);
        let m = Mat2::new(RatF::zero(&p), one.clone(), t.clone(), RatF::zero(&p));
        let img = mobius_act(&m, &ProjPt::affine(one.clone())).unwrap();
        assert_eq!(img, ProjPt::new(one, t).unwrap());
        assert_eq!(img.value().unwrap().den(), &FpPoly::x(&p));
    }

    #[test]
    fn action_law_and_det_multiplicative() {
        let p = Prime::new(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let rand_mat = |rng: &mut ChaCha8Rng| loop {
            let m = Mat2::new(Fp::random(&p, rng), Fp::random(&p, rng), Fp::random(&p, rng), Fp::random(&p, rng));
            if !m.det().is_zero() {
                return m;
            }
        };
        for _ in 0..500 {
            let m = rand_mat(&mut rng);
            let n = rand_mat(&mut rng);
            let x = if rand::Rng::gen_bool(&mut rng, 0.1) {
                ProjPt::infinity(&p)
            } else {
                ProjPt::affine(Fp::random(&p, &mut rng))
            };
            let mn = &m * &n;
            assert_eq!(mobius_act(&mn, &x).unwrap(), mobius_act(&m, &mobius_act(&n, &x).unwrap()).unwrap());
            assert_eq!(mn.det(), m.det() * n.det());
            assert_eq!(mn.trace(), (&n * &m).trace());
            assert!((&m * &m.inverse().unwrap()).is_identity());
        }
    }
}
