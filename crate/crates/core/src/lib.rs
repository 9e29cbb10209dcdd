//! Exact Kauffman-bracket skein computations and SO(3) quantum invariants.
//!
//! The crate is layered bottom-up:
//!
//! * [`algebra`]: Laurent polynomials in `A`, rational functions, and exact
//!   cyclotomic fields for evaluation at `A = exp(+-pi i/(2d+1))`.
//! * [`diagrams`]: planar link diagrams, framings, cabling and the
//!   Borromean/Hopf/unknot fixtures.
//! * [`bracket`]: the Kauffman bracket (state-sum oracle and tangle sweep),
//!   Temperley–Lieb algebra, Jones–Wenzl projectors, colored brackets.
//! * [`recoupling`]: closed forms: Hopf pairings, meridian eigenvalues,
//!   twist coefficients, the surgery normalization `eta`, torus dimensions.
//! * [`wrt`]: the surgery invariant, functions on the parameter set, and
//!   the 3-torus computations built on top of everything else.

pub mod algebra;
pub mod bracket;
pub mod diagrams;
mod error;
pub mod recoupling;
pub mod wrt;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/algebra.md")]
    mod algebra {}
    #[doc = include_str!("../../../book/src/diagrams.md")]
    mod diagrams {}
    #[doc = include_str!("../../../book/src/bracket.md")]
    mod bracket {}
    #[doc = include_str!("../../../book/src/jones-wenzl.md")]
    mod jones_wenzl {}
    #[doc = include_str!("../../../book/src/recoupling.md")]
    mod recoupling {}
    #[doc = include_str!("../../../book/src/wrt.md")]
    mod wrt {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
