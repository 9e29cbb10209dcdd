//! Closed forms from recoupling theory: Hopf link pairings, the eigenvalue
//! of a colored meridian, twist coefficients, the surgery normalization
//! `eta`, and dimensions of torus state spaces.

use astro_float::BigFloat;

use crate::algebra::precision::{bits_for_digits, cyclo_to_complex, format_decimal, recip, sqrt, to_f64};
use crate::algebra::{delta_color, quantum_integer, ratfunc_canonical, CycloNum, EvalPoint, Evaluate, LaurentPoly, RatFunc, Sign};
use crate::error::{Error, Result};

/// Working precision for `eta`, in decimal digits.
pub const ETA_DIGITS: u32 = 40;

/// The 0-framed Hopf link colored `i` and `a`: `(-1)^(a+i) [(a+1)(i+1)]`.
pub fn hopf_eval(i: u32, a: u32) -> LaurentPoly {
    let q = quantum_integer(((a as usize) + 1) * ((i as usize) + 1));
    if (a + i) % 2 == 0 {
        q
    } else {
        -q
    }
}

/// The scalar by which an `a`-colored meridian acts on an `i`-colored
/// strand: `H(i, a) / Δ_i`.
pub fn meridian_eigenvalue(i: u32, a: u32) -> RatFunc {
    ratfunc_canonical(hopf_eval(i, a), delta_color(i as usize)).expect("Δ_i is a nonzero polynomial")
}

/// `sum_{i < d} H(i, a) / Δ_i` at `p`: the invariant of the 3-torus with an
/// `a`-colored circle factor.
pub fn meridian_series(a: u32, p: EvalPoint) -> CycloNum {
    (0..p.d).fold(CycloNum::zero(p.d), |acc, i| {
        let v = meridian_eigenvalue(i, a)
            .evaluate_at(p)
            .expect("the eigenvalue is a Laurent polynomial");
        &acc + &v
    })
}

/// Framing change of an `i`-colored strand under one positive kink:
/// `(-1)^i A^(i^2 + 2i)`.
pub fn twist_coefficient(i: u32) -> LaurentPoly {
    let e = (i as i64) * (i as i64) + 2 * i as i64;
    LaurentPoly::a_pow(e, if i % 2 == 0 { 1 } else { -1 })
}

/// The surgery color `ω = eta * sum_{i < d} Δ_i e_i` at level `2d + 1`.
#[derive(Clone, Debug)]
pub struct OmegaData {
    pub d: u32,
    /// `Δ_0, ..., Δ_{d-1}`.
    pub weights: Vec<LaurentPoly>,
    /// `sum Δ_i^2` at the `+` point; the `-` value is its conjugate.
    pub sum_squares: CycloNum,
    /// The positive root of `1 / sum Δ_i^2`.
    pub eta: BigFloat,
}

impl OmegaData {
    pub fn eta_f64(&self) -> f64 {
        to_f64(&self.eta)
    }

    pub fn eta_decimal(&self, digits: u32) -> String {
        format_decimal(&self.eta_at(digits), digits)
    }

    /// `eta` carried to at least `digits` decimal digits.
    pub fn eta_at(&self, digits: u32) -> BigFloat {
        if digits <= ETA_DIGITS {
            self.eta.clone()
        } else {
            eta_from(&self.sum_squares, digits)
        }
    }

    /// `sum Δ_i^2` at `p`.
    pub fn sum_squares_at(&self, sign: Sign) -> CycloNum {
        match sign {
            Sign::Plus => self.sum_squares.clone(),
            Sign::Minus => self.sum_squares.conjugate(),
        }
    }
}

pub fn omega_data(d: u32) -> OmegaData {
    let p = EvalPoint::plus(d);
    let weights: Vec<LaurentPoly> = (0..d as usize).map(delta_color).collect();
    let sum_squares = weights.iter().fold(CycloNum::zero(d), |acc, w| {
        let v = w.evaluate_at(p).expect("polynomials have no poles");
        &acc + &(&v * &v)
    });
    let eta = eta_from(&sum_squares, ETA_DIGITS);
    OmegaData {
        d,
        weights,
        sum_squares,
        eta,
    }
}

fn eta_from(sum_squares: &CycloNum, digits: u32) -> BigFloat {
    let bits = bits_for_digits(digits);
    let s = cyclo_to_complex(sum_squares, digits);
    recip(&sqrt(&s.re, bits), bits)
}

/// Dimension of the state space of the torus with one marked point colored
/// `color`, at level `2d + 1`: `d - c` for color `2c`, zero for odd colors.
pub fn dim_v_torus(color: u32, d: u32) -> Result<u32> {
    let max = 2 * d - 2;
    if color > max {
        return Err(Error::ColorRange { color, max });
    }
    Ok(if color % 2 == 0 { d - color / 2 } else { 0 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigenvalue_closed_form() {
        // H(i,a)/Δ_i = (-1)^a sum_k A^(2(i+1)(a-2k))
        for i in 0..8u32 {
            for a in 0..6u32 {
                let m = 2 * (i as i64 + 1);
                let s = if a % 2 == 0 { 1 } else { -1 };
                let want = LaurentPoly::from_int_terms((0..=a as i64).map(|k| (m * (a as i64 - 2 * k), s)));
                assert_eq!(meridian_eigenvalue(i, a).as_poly(), Some(&want));
            }
        }
    }

    #[test]
    fn dims() {
        assert_eq!(dim_v_torus(0, 4).unwrap(), 4);
        assert_eq!(dim_v_torus(2, 4).unwrap(), 3);
        assert_eq!(dim_v_torus(1, 4).unwrap(), 0);
        assert_eq!(dim_v_torus(6, 4).unwrap(), 1);
        assert_eq!(dim_v_torus(7, 4).unwrap_err().code(), "E_COLOR_RANGE");
    }
}
