//! The SO(3) surgery invariant, functions on the parameter set, and the
//! 3-torus computations.

mod gamma;
mod invariant;
mod torus;

pub use gamma::{
    gamma_tabulate, value_matches, GammaFunction, InvariantReport, Quantity, ReportRow, AUTO_EXACT_MAX_D,
    FLOAT_TOLERANCE,
};
pub use invariant::{wrt_invariant, wrt_invariant_hp, ArithMode, Value};
pub use torus::{
    f_mobius, independence_certificate, recolor_check, torus_invariant, torus_presentation, Certificate,
};
