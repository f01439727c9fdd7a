//! The affine cubic `uvw + u^2 + v^2 + w^2 - u - 2 = 0`, the character map
//! onto it, and the two-parameter family of representations.

mod generated;

use std::ops::{Add, Mul, Sub};

use serde::Serialize;

use crate::algebra::{sqrt_in_field, Field, FiniteField, IntPoly3, Mat2, QuadCtx, QuadExt};
use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::trace::{make_rep, RepTriple};

pub use generated::{R_COEFF_NEG, R_COEFF_POS, R_COEFF_ZERO};

/// Largest field order accepted by exhaustive enumeration.
pub const ENUMERATION_LIMIT: u64 = 169;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct SurfacePoint<F> {
    pub u: F,
    pub v: F,
    pub w: F,
}

pub fn surface_eval<F: Field>(u: &F, v: &F, w: &F) -> F {
    let two = u.int_like(2);
    u.clone() * v.clone() * w.clone() + u.square() + v.square() + w.square() - u.clone() - two
}

pub fn surface_poly() -> IntPoly3 {
    let (u, v, w) = (IntPoly3::u(), IntPoly3::v(), IntPoly3::w());
    &(&u * &v) * &w + &u * &u + &v * &v + &w * &w - u - IntPoly3::constant(2)
}

/// `(tr BC, tr CA, tr AB)`; always on the surface for a valid triple.
pub fn phi<F: Field>(rho: &RepTriple<F>) -> SurfacePoint<F> {
    let (u, v, w) = rho.uvw();
    assert!(surface_eval(&u, &v, &w).is_zero(), "character map left the surface: arithmetic bug");
    SurfacePoint { u, v, w }
}

/// Traces and determinants of a triple `(X, Y, Z)` and its products, enough
/// to state the cubic trace identity.
#[derive(Clone, Debug)]
pub struct TripleTraces<R> {
    pub tx: R,
    pub ty: R,
    pub tz: R,
    pub tyz: R,
    pub tzx: R,
    pub txy: R,
    pub txyz: R,
    pub dx: R,
    pub dy: R,
    pub dz: R,
}

impl<F: Field> TripleTraces<F> {
    pub fn of(x: &Mat2<F>, y: &Mat2<F>, z: &Mat2<F>) -> Self {
        let xy = x * y;
        TripleTraces {
            tx: x.trace(),
            ty: y.trace(),
            tz: z.trace(),
            tyz: (y * z).trace(),
            tzx: (z * x).trace(),
            txy: xy.trace(),
            txyz: (&xy * z).trace(),
            dx: x.det(),
            dy: y.det(),
            dz: z.det(),
        }
    }
}

/// The left side of the cubic trace identity for 2x2 matrices; vanishes for
/// every triple. `four` is the constant 4 of the ring.
pub fn three_matrix_expression<R>(t: &TripleTraces<R>, four: R) -> R
where
    R: Clone + Add<Output = R> + Sub<Output = R> + Mul<Output = R>,
{
    let c = |x: &R| x.clone();
    let sq = |x: &R| x.clone() * x.clone();
    // cyclic orbits of (X, Y, Z)
    let cyc = [
        (&t.tx, &t.ty, &t.tz, &t.tyz, &t.dx, &t.dy, &t.dz),
        (&t.ty, &t.tz, &t.tx, &t.tzx, &t.dy, &t.dz, &t.dx),
        (&t.tz, &t.tx, &t.ty, &t.txy, &t.dz, &t.dx, &t.dy),
    ];
    let mut pos = c(&t.tx) * c(&t.ty) * c(&t.tz) * c(&t.txyz) + c(&t.tyz) * c(&t.tzx) * c(&t.txy) + sq(&t.txyz);
    let mut neg = four * c(&t.dx) * c(&t.dy) * c(&t.dz);
    for (tx, ty, tz, tyz, dx, dy, dz) in cyc {
        pos = pos + c(dx) * sq(tyz) + sq(tx) * c(dy) * c(dz);
        neg = neg + c(dx) * c(ty) * c(tz) * c(tyz) + c(tx) * c(tyz) * c(&t.txyz);
    }
    pos - neg
}

pub fn verify_three_matrix_identity<F: Field>(x: &Mat2<F>, y: &Mat2<F>, z: &Mat2<F>) -> F {
    let four = x.m11.int_like(4);
    three_matrix_expression(&TripleTraces::of(x, y, z), four)
}

/// The identity restricted to SL2 with tr A = tr ABC = 1, tr B = tr C = 0
/// and `(tr BC, tr CA, tr AB) = (u, v, w)`.
pub fn specialized_sl2_identity() -> IntPoly3 {
    let one = IntPoly3::constant(1);
    let t = TripleTraces {
        tx: one.clone(),
        ty: IntPoly3::zero(),
        tz: IntPoly3::zero(),
        tyz: IntPoly3::u(),
        tzx: IntPoly3::v(),
        txy: IntPoly3::w(),
        txyz: one.clone(),
        dx: one.clone(),
        dy: one.clone(),
        dz: one,
    };
    three_matrix_expression(&t, IntPoly3::constant(4))
}

/// All points of the surface over a finite field with at most
/// `ENUMERATION_LIMIT` elements, split over the u-coordinate.
pub fn enumerate_points<F: FiniteField>(ctx: &F::Ctx, exec: Exec) -> Result<Vec<SurfacePoint<F>>> {
    let order = F::order(ctx);
    if order > ENUMERATION_LIMIT {
        return Err(Error::FieldTooLarge { order, limit: ENUMERATION_LIMIT });
    }
    let elems = F::elements(ctx);
    let rows = par::map(exec, &elems, |u| {
        let mut row = Vec::new();
        for v in &elems {
            for w in &elems {
                if surface_eval(u, v, w).is_zero() {
                    row.push(SurfacePoint { u: u.clone(), v: v.clone(), w: w.clone() });
                }
            }
        }
        row
    });
    Ok(rows.into_iter().flatten().collect())
}

fn eval_terms<F: Field>(terms: &[(i64, u32, u32, u32)], q: &F, s: &F, i: &F) -> F {
    terms.iter().fold(q.zero_like(), |acc, &(c, ei, es, eq)| {
        acc + q.int_like(c) * i.pow(ei as u64) * s.pow(es as u64) * q.pow(eq as u64)
    })
}

/// `(c_pos, c_zero, c_neg)` with `tr ABC - 1 = c_pos r + c_zero + c_neg / r`.
pub fn r_coefficients<F: Field>(q: &F, s: &F, i: &F) -> (F, F, F) {
    (eval_terms(R_COEFF_POS, q, s, i), eval_terms(R_COEFF_ZERO, q, s, i), eval_terms(R_COEFF_NEG, q, s, i))
}

/// Roots of the trace condition, either all in the base field or in its
/// standard quadratic extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RRoots<F: Field> {
    Base(Vec<F>),
    Extension(QuadCtx<F>, Vec<QuadExt<F>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RSolution<F: Field> {
    pub i: F,
    pub discriminant: F,
    pub roots: RRoots<F>,
    pub warnings: Vec<String>,
}

impl<F: Field> RSolution<F> {
    pub fn in_base(&self) -> &[F] {
        match &self.roots {
            RRoots::Base(r) => r,
            RRoots::Extension(..) => &[],
        }
    }
}

/// Solves `c_pos r^2 + c_zero r + c_neg = 0` for nonzero `r`.
pub fn solve_for_r<F: FiniteField>(q: &F, s: &F) -> Result<RSolution<F>> {
    let ctx = q.ctx();
    if F::characteristic(&ctx) <= 3 {
        return Err(Error::CharacteristicTooSmall(F::characteristic(&ctx)));
    }
    let i = sqrt_in_field(&-F::one(&ctx)).ok_or(Error::NoSquareRootOfMinusOne)?;
    let mut warnings = Vec::new();
    if s.pow(4).is_one() {
        warnings.push("s is a 4th root of unity".to_string());
    }
    if q.pow(6).is_one() {
        warnings.push("q is a 6th root of unity".to_string());
    }
    let (a, b, c) = r_coefficients(q, s, &i);
    if a.is_zero() {
        return Err(Error::Degenerate("coefficient i(s^2+1) of r vanishes".into()));
    }
    if c.is_zero() {
        warnings.push("r = 0 root discarded".to_string());
    }
    let disc = b.square() - F::from_int(&ctx, 4) * a.clone() * c.clone();
    let two_a = F::from_int(&ctx, 2) * a.clone();
    let roots = match sqrt_in_field(&disc) {
        Some(d) => {
            let mut out = Vec::new();
            for cand in [(-b.clone() + d.clone()), (-b.clone() - d)] {
                let r = cand.div(&two_a).expect("2a is nonzero");
                if !r.is_zero() && !out.contains(&r) {
                    out.push(r);
                }
            }
            RRoots::Base(out)
        }
        None => {
            let ext = QuadCtx::standard(&ctx);
            let d = sqrt_in_field(&ext.embed(disc.clone())).expect("every element is a square after one quadratic step");
            let (eb, e2a) = (ext.embed(b.clone()), ext.embed(two_a));
            let roots = [(-eb.clone() + d.clone()), (-eb - d)]
                .into_iter()
                .map(|cand| cand.div(&e2a).expect("2a is nonzero"))
                .collect();
            warnings.push("discriminant is a non-square; roots lie in the quadratic extension".to_string());
            RRoots::Extension(ext, roots)
        }
    };
    Ok(RSolution { i, discriminant: disc, roots, warnings })
}

/// Admissible triples `make_rep(q, r, s)` over `F` itself, one per root.
pub fn reps_at<F: FiniteField>(q: &F, s: &F) -> Vec<RepTriple<F>> {
    match solve_for_r(q, s) {
        Ok(sol) => sol.in_base().iter().filter_map(|r| make_rep(q, r, s).ok()).collect(),
        Err(_) => Vec::new(),
    }
}
