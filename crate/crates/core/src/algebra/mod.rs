//! Exact arithmetic: prime fields and their quadratic extensions,
//! polynomials, rational functions, places, 2x2 matrices and integer
//! polynomials in three variables.

pub mod factor;
pub mod field;
pub mod fp;
pub mod intpoly3;
pub mod mat;
pub mod place;
pub mod poly;
pub mod quad;
pub mod ratfunc;

pub use factor::{factor, is_irreducible, monic_irreducibles, Factorization};
pub use field::{FiniteField, Field};
pub use fp::{Fp, Prime};
pub use intpoly3::IntPoly3;
pub use mat::{mobius_act, Mat2, Mat3, ProjPt};
pub use place::{valuation, Place, Valuation, INFINITE_VALUATION_CONVENTION};
pub use poly::{FpPoly, Poly};
pub use quad::{Fp2, QuadCtx, QuadExt};
pub use ratfunc::{RatF, RatFunc};

/// Square root in a finite field, the representative with smaller index.
pub fn sqrt_in_field<F: FiniteField>(a: &F) -> Option<F> {
    a.sqrt()
}
