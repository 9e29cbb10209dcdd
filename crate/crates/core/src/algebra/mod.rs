//! Exact coefficient arithmetic: Laurent polynomials in `A`, the rational
//! function field `Q(A)`, and cyclotomic fields for evaluation at the
//! roots of unity `exp(+-pi i/(2d+1))`.

mod cyclo;
mod dense;
mod laurent;
pub mod precision;
mod quantum;
mod ratfunc;

pub use cyclo::{evaluate_at, totient, CycloField, CycloNum, EvalPoint, Evaluate, Sign};
pub use laurent::{LaurentPoly, Q};
pub use precision::{cyclo_to_complex, HpComplex};
pub use quantum::{delta_color, loop_value, quantum_integer};
pub use ratfunc::{common_denominator, ratfunc_canonical, RatFunc};
