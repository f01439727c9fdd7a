use super::rep::{make_rep_with_i, RepTriple};
use crate::algebra::{sqrt_in_field, Field, Fp2, Prime, QuadCtx, QuadExt, RatFunc};
use crate::error::{Error, Result};
use crate::surface::r_coefficients;

/// `F_{p^2}(q, s)[r]` with `r` a root of the trace condition tr ABC = 1.
pub type GenericField = QuadExt<RatFunc<RatFunc<Fp2>>>;

/// The parametrized triple at a generic point: q and s are independent
/// indeterminates and r is adjoined algebraically. Identities that hold here
/// hold on a dense subset of the parameter space.
pub fn generic_rep(p: Prime) -> Result<RepTriple<GenericField>> {
    let ctx = Fp2::context(p);
    let minus_one = -Fp2::one(&ctx);
    let i = sqrt_in_field(&minus_one).ok_or(Error::NoSquareRootOfMinusOne)?;
    let q = RatFunc::constant(RatFunc::var(&ctx));
    let s = RatFunc::<RatFunc<Fp2>>::var(&ctx);
    let i_k = RatFunc::constant(RatFunc::constant(i));
    let (c_pos, c_zero, c_neg) = r_coefficients(&q, &s, &i_k);
    // c_pos r^2 + c_zero r + c_neg = 0
    let lead_inv = c_pos.inv().ok_or_else(|| Error::Degenerate("vanishing r coefficient".into()))?;
    let qctx = QuadCtx { c0: -(c_neg * lead_inv.clone()), c1: -(c_zero * lead_inv) };
    let r = qctx.generator();
    make_rep_with_i(&qctx.embed(q), &r, &qctx.embed(s), &qctx.embed(i_k))
}
