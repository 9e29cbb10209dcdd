//! The Kauffman bracket: an exhaustive state-sum oracle, a sweep evaluator
//! for larger diagrams, the Temperley–Lieb algebra with its Jones–Wenzl
//! projectors, and colored brackets of cabled links.

mod colored;
mod jw;
mod state_sum;
mod sweep;
mod tl;

pub use colored::{colored_bracket, colored_bracket_at, colored_bracket_generic, BracketMode, BracketValue};
pub use jw::{jones_wenzl, jones_wenzl_capped, DEFAULT_JW_CAP};
pub use state_sum::{bracket_state_sum, STATE_SUM_CAP};
pub use sweep::{
    bracket_sweep_in_order, bracket_tangle_sweep, bracket_tangle_sweep_capped, greedy_order,
    DEFAULT_WIDTH_CAP,
};
pub use tl::{tl_closure, tl_compose, TLDiagram, TLElement};
