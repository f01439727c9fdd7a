//! Exact constructions around the genus-2 surface group: trace polynomials
//! for the central extension of the (3,2,2,3) orbifold group, the cubic
//! character surface, residual certificates through the modular group,
//! Hausdorff's embedding into PGL2(F_p(t)), and actions on Bruhat-Tits trees.

pub mod algebra;
pub mod error;
pub mod hausdorff;
pub mod par;
pub mod pipeline;
pub mod residual;
pub mod surface;
pub mod trace;
pub mod tree;
pub mod words;

pub use error::{Error, Result};
