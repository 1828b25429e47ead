//! Numerics for geometric (multiplicative) calculus over the positive reals.
//!
//! Everything is built on one representation choice: a geometric number is
//! its natural logarithm, so the geometric operations are ordinary arithmetic
//! on exponents and every computation here is conjugate to a classical one on
//! logs. The crate provides the arithmetic itself ([`arith`]), difference
//! tables on geometrically equidistant nodes ([`diff`]), geometric
//! Newton-Gregory interpolation ([`interp`]), and sequence-space norms,
//! summation identities, and multiplier-space diagnostics ([`seq`]).

pub mod arith;
pub mod diff;
pub mod error;
pub mod interp;
pub mod seq;

pub use arith::{
    abs_log_error, gfactorial, gsum, rel_log_error, GFactorialValue, GNum,
    DEFAULT_ZERO_TOLERANCE,
};
pub use diff::{
    backward_diff_table, factorial_function, forward_diff_table, nth_backward_diff,
    nth_forward_diff, DiffTable, Direction, GTable, DEFAULT_SPACING_TOLERANCE,
};
pub use error::{GeoError, Result};
pub use interp::{
    exactness_check, interp_backward, interp_forward, relative_offset, ExactnessReport,
    InterpResult,
};
pub use seq::{
    delta_g, delta_norm, dual_partial_sums, geometric_abel_sum, head_normalize, sup_norm,
    tail_sum, tail_sum_identity, DualReport, GSeq,
};
