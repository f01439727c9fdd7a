use crate::algebra::{sqrt_in_field, Field, FiniteField, IntPoly3, Mat2, Mat3};
use crate::error::{Error, Result};
use crate::words::tilde::{TildeSym, TildeWord};

/// Images of A, B, C in SL2 with tr A = tr ABC = 1 and tr B = tr C = 0, so
/// A and D have order 6 and B, C have order 4.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RepTriple<F: Field> {
    mat_a: Mat2<F>,
    mat_b: Mat2<F>,
    mat_c: Mat2<F>,
}

impl<F: Field> RepTriple<F> {
    pub fn new(mat_a: Mat2<F>, mat_b: Mat2<F>, mat_c: Mat2<F>) -> Result<Self> {
        let ctx = mat_a.ctx();
        let one = F::one(&ctx);
        for (name, m) in [("A", &mat_a), ("B", &mat_b), ("C", &mat_c)] {
            if m.det() != one {
                return Err(Error::InvalidRepresentation(format!("det {name} != 1")));
            }
        }
        if mat_a.trace() != one {
            return Err(Error::InvalidRepresentation("tr A != 1".into()));
        }
        if !mat_b.trace().is_zero() || !mat_c.trace().is_zero() {
            return Err(Error::InvalidRepresentation("tr B or tr C != 0".into()));
        }
        let abc = &(&mat_a * &mat_b) * &mat_c;
        if abc.trace() != one {
            return Err(Error::InvalidRepresentation("tr ABC != 1".into()));
        }
        Ok(RepTriple { mat_a, mat_b, mat_c })
    }

    pub fn mat_a(&self) -> &Mat2<F> {
        &self.mat_a
    }

    pub fn mat_b(&self) -> &Mat2<F> {
        &self.mat_b
    }

    pub fn mat_c(&self) -> &Mat2<F> {
        &self.mat_c
    }

    pub fn sym_matrix(&self, s: TildeSym) -> Mat2<F> {
        match s {
            TildeSym::A => self.mat_a.clone(),
            // det 1, so the adjugate is the inverse
            TildeSym::Ainv => self.mat_a.adjugate(),
            TildeSym::B => self.mat_b.clone(),
            TildeSym::C => self.mat_c.clone(),
        }
    }

    /// Image of a word, with Z acting as -I.
    pub fn word_matrix(&self, w: &TildeWord) -> Mat2<F> {
        let m = w.syms.iter().fold(Mat2::identity(&self.mat_a.ctx()), |acc, &s| &acc * &self.sym_matrix(s));
        if w.z {
            m.neg()
        } else {
            m
        }
    }

    /// `(tr BC, tr CA, tr AB)`.
    pub fn uvw(&self) -> (F, F, F) {
        (
            (&self.mat_b * &self.mat_c).trace(),
            (&self.mat_c * &self.mat_a).trace(),
            (&self.mat_a * &self.mat_b).trace(),
        )
    }
}

pub fn eval_trace<F: Field>(w: &TildeWord, rho: &RepTriple<F>) -> F {
    rho.word_matrix(w).trace()
}

pub fn eval_trace_poly<F: Field>(t: &IntPoly3, rho: &RepTriple<F>) -> F {
    let (u, v, w) = rho.uvw();
    t.eval(&u, &v, &w)
}

/// The parametrized triple
/// `A = [[q, r], [(-1+q-q^2)/r, 1-q]]`, `B = diag(i, -i)`,
/// `C = [[s, 1], [-1-s^2, -s]]` for a chosen square root `i` of -1.
pub fn make_rep_with_i<F: Field>(q: &F, r: &F, s: &F, i: &F) -> Result<RepTriple<F>> {
    if (i.clone() * i.clone() + i.one_like()) != i.zero_like() {
        return Err(Error::NoSquareRootOfMinusOne);
    }
    let r_inv = r.inv().ok_or(Error::ZeroParameter("r"))?;
    let one = q.one_like();
    let a21 = (q.clone() - one.clone() - q.clone() * q.clone()) * r_inv;
    let mat_a = Mat2::new(q.clone(), r.clone(), a21, one.clone() - q.clone());
    let mat_b = Mat2::diag(i.clone(), -i.clone());
    let mat_c = Mat2::new(s.clone(), one.clone(), -one - s.clone() * s.clone(), -s.clone());
    RepTriple::new(mat_a, mat_b, mat_c)
}

pub fn make_rep<F: FiniteField>(q: &F, r: &F, s: &F) -> Result<RepTriple<F>> {
    let i = sqrt_in_field(&-q.one_like()).ok_or(Error::NoSquareRootOfMinusOne)?;
    make_rep_with_i(q, r, s, &i)
}

/// Matrix of `X -> M X M^-1` on trace-zero matrices in the basis
/// `E = [[0,1],[0,0]]`, `H = [[1,0],[0,-1]]`, `F = [[0,0],[1,0]]`.
pub fn adjoint_embed<F: Field>(m: &Mat2<F>) -> Result<Mat3<F>> {
    let ctx = m.ctx();
    if F::characteristic(&ctx) == 2 {
        return Err(Error::CharacteristicTooSmall(2));
    }
    let m_inv = m.inverse()?;
    let (z, o) = (F::zero(&ctx), F::one(&ctx));
    let basis = [
        Mat2::new(z.clone(), o.clone(), z.clone(), z.clone()),
        Mat2::new(o.clone(), z.clone(), z.clone(), -o.clone()),
        Mat2::new(z.clone(), z.clone(), o, z),
    ];
    let cols: Vec<[F; 3]> = basis
        .iter()
        .map(|x| {
            let y = &(m * x) * &m_inv;
            [y.m12.clone(), y.m11.clone(), y.m21.clone()]
        })
        .collect();
    let rows = std::array::from_fn(|i| std::array::from_fn(|j| cols[j][i].clone()));
    Ok(Mat3 { rows })
}

/// Whether the image of `m` in PGL2 has order a power of the characteristic:
/// scalar (order 1) or scalar times a nontrivial unipotent (order p).
pub fn is_p_power_order<F: Field>(m: &Mat2<F>) -> Result<bool> {
    let det = m.det();
    if det.is_zero() {
        return Err(Error::SingularMatrix);
    }
    if m.is_scalar() {
        return Ok(true);
    }
    let tr = m.trace();
    let four = F::from_int(&m.ctx(), 4);
    Ok(tr.clone() * tr == four * det)
}
