use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::invariant::{wrt_invariant, ArithMode, Value};
use crate::algebra::{EvalPoint, Q};
use crate::diagrams::{attach_meridian, borromean_fixture, SurgeryPresentation};
use crate::error::{Error, Result};
use crate::recoupling::meridian_series;

/// The 3-torus as surgery on the 0-framed Borromean rings, with a meridian
/// of the first component colored `a` (a circle factor of the torus).
pub fn torus_presentation(a: u32) -> SurgeryPresentation {
    let mut pres = attach_meridian(&borromean_fixture(), 0, a).expect("the fixture has a first component");
    pres.name = format!("3-torus with a circle colored {a}");
    pres
}

/// The surgery invariant of the 3-torus with an `a`-colored circle factor,
/// computed from the diagram.
pub fn torus_invariant(a: u32, p: EvalPoint, mode: ArithMode) -> Result<Value> {
    let max = 2 * p.d - 2;
    if a > max {
        return Err(Error::ColorRange { color: a, max });
    }
    wrt_invariant(&torus_presentation(a), p, mode)
}

/// Whether recoloring a 1-colored circle by `2d - 2` leaves the torus
/// invariant unchanged (both values being 1). `None` when `d < 2`.
pub fn recolor_check(p: EvalPoint) -> Option<bool> {
    if p.d < 2 {
        return None;
    }
    let one = meridian_series(1, p);
    let top = meridian_series(2 * p.d - 2, p);
    Some(one == top && one.is_rational_eq(&Q::from_integer(1.into())))
}

/// `f(z) = (pi i - 3 log z) / (pi i - log z)` with the principal logarithm,
/// defined off the closed negative real axis.
pub fn f_mobius(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re <= 0.0 {
        return Err(Error::BranchCut);
    }
    let pi_i = Complex64::new(0.0, std::f64::consts::PI);
    let log = z.ln();
    Ok((pi_i - 3.0 * log) / (pi_i - log))
}

/// A witness that the functions `d -> <empty>` and `d -> <colored 2>` are
/// not proportional: their 2x2 evaluation matrix at two levels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub d1: u32,
    pub d2: u32,
    /// `[[e(d1), k(d1)], [e(d2), k(d2)]]`.
    pub matrix: [[i64; 2]; 2],
    pub determinant: i64,
    pub independent: bool,
}

pub fn independence_certificate(d1: u32, d2: u32) -> Result<Certificate> {
    if d1 == d2 {
        return Err(Error::SameD(d1));
    }
    if d1 == 0 || d2 == 0 {
        return Err(Error::Precondition("levels start at d = 1".into()));
    }
    let row = |d: u32| -> Result<[i64; 2]> {
        let p = EvalPoint::plus(d);
        let value = |a: u32| {
            meridian_series(a, p)
                .as_rational()
                .filter(|q| q.is_integer())
                .and_then(|q| q.to_integer().to_i64())
                .ok_or_else(|| Error::Precondition(format!("series for color {a} at d={d} is not an integer")))
        };
        Ok([value(0)?, value(2)?])
    };
    let matrix = [row(d1)?, row(d2)?];
    let determinant = matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0];
    Ok(Certificate {
        d1,
        d2,
        matrix,
        determinant,
        independent: determinant != 0,
    })
}
