//! Word problems in the groups involved: the central extension of the
//! orbifold group (capitals, with central Z), the orbifold group itself
//! (lower case), and the modular group in x, y.

pub mod delta;
pub mod perm3;
pub mod tilde;
pub mod xi;

pub use delta::{delta_normal_form, free_reduce, DeltaNormalForm, DeltaSym, DeltaWord};
pub use perm3::{kernel_member, s3_image, schreier_generators, CosetTable, Perm3};
pub use tilde::{cyclic_reduce, invert_tilde, reduce_tilde, TildeSym, TildeWord};
pub use xi::{xi_reduce, XiSym, XiWord};
