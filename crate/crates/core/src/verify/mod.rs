//! Exact replay of every scheme on scalar polynomials, order and threshold
//! checks, and an extended-precision reference evaluator.

mod check;
pub mod dd;
mod poly;
mod reference;
mod series;
mod surd;

pub use check::{
    check_order, compute_theta, error_tail, render_wave_theta_source, solve_theta, tail_bound, OrderCheck,
    ThetaComputation, TAIL_TERMS,
};
pub use poly::{PolyOps, ScalarPoly};
pub use reference::{norm2, reference_cos_sin, relative_error, symmetric_cos_sin, ReferencePair};
pub use series::{divide_series, expansion, replay, Kernel, Output, Replay, Variant};
pub use surd::{parse_decimal, QuadSurd};
