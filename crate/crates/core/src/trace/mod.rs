//! Trace polynomials of words in the central extension, evaluation in
//! explicit SL2 representations, and the adjoint embedding.

mod engine;
mod generic;
mod rep;

pub use engine::{trace_poly, TraceEngine};
pub use generic::{generic_rep, GenericField};
pub use rep::{adjoint_embed, eval_trace, eval_trace_poly, is_p_power_order, make_rep, make_rep_with_i, RepTriple};
