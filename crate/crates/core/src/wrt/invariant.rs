use std::fmt;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::algebra::precision::{bits_for_digits, cyclo_to_complex, powi, HpComplex};
use crate::algebra::{CycloNum, EvalPoint, Evaluate};
use crate::bracket::colored_bracket_at;
use crate::diagrams::SurgeryPresentation;
use crate::error::{Error, Result};
use crate::recoupling::{omega_data, ETA_DIGITS};

/// How a value is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum ArithMode {
    /// In the cyclotomic field, no rounding.
    Exact,
    /// Through the numerical embedding.
    Float,
    /// Exact whenever possible, otherwise float.
    #[default]
    Auto,
}

impl ArithMode {
    pub fn name(self) -> &'static str {
        match self {
            ArithMode::Exact => "exact",
            ArithMode::Float => "float",
            ArithMode::Auto => "auto",
        }
    }
}

impl std::str::FromStr for ArithMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(ArithMode::Exact),
            "float" => Ok(ArithMode::Float),
            "auto" => Ok(ArithMode::Auto),
            _ => Err(Error::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

/// A computed invariant.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Exact(CycloNum),
    Float(Complex64),
}

impl Value {
    pub fn mode(&self) -> ArithMode {
        match self {
            Value::Exact(_) => ArithMode::Exact,
            Value::Float(_) => ArithMode::Float,
        }
    }

    pub fn to_c64(&self) -> Complex64 {
        match self {
            Value::Exact(x) => cyclo_to_complex(x, 20).to_c64(),
            Value::Float(z) => *z,
        }
    }

    pub fn as_exact(&self) -> Option<&CycloNum> {
        match self {
            Value::Exact(x) => Some(x),
            Value::Float(_) => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(x) => match x.as_rational() {
                Some(q) => write!(f, "{q}"),
                None => write!(f, "{x}"),
            },
            Value::Float(z) => write!(f, "{:.15} + {:.15}i", z.re, z.im),
        }
    }
}

/// Every coloring of the surgery components by `0..d`, in lexicographic order.
fn colorings(n: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|c| {
                (0..d).map(move |i| {
                    let mut c = c.clone();
                    c.push(i);
                    c
                })
            })
            .collect();
    }
    out
}

/// The colored sum `sum_c prod_j Δ_{c_j} <L(c)>` before normalization.
fn omega_sum(pres: &SurgeryPresentation, p: EvalPoint) -> Result<CycloNum> {
    let max = 2 * p.d - 2;
    if let Some(&c) = pres.extra_colors.iter().find(|&&c| c > max) {
        return Err(Error::ColorRange { color: c, max });
    }
    let omega = omega_data(p.d);
    let weights = omega
        .weights
        .iter()
        .map(|w| w.evaluate_at(p))
        .collect::<Result<Vec<_>>>()?;
    let terms = colorings(pres.surgery, p.d)
        .into_par_iter()
        .map(|c| {
            let bracket = colored_bracket_at(&pres.colored(&c), p)?;
            Ok(c.iter().fold(bracket, |acc, &i| &acc * &weights[i as usize]))
        })
        .collect::<Result<Vec<CycloNum>>>()?;
    Ok(terms.iter().fold(CycloNum::zero(p.d), |acc, t| &acc + t))
}

/// The invariant of the manifold obtained by surgery on the surgery
/// components, paired with the remaining colored components:
/// `eta^(1+n) sum_c prod_j Δ_{c_j} <L(c)>` over colorings `c` of the `n`
/// surgery components by `0..d`.
///
/// Only presentations with signature 0 are accepted. Exact mode needs
/// `1 + n` even, where `eta^(1+n) = (sum Δ_i^2)^(-(1+n)/2)`.
pub fn wrt_invariant(pres: &SurgeryPresentation, p: EvalPoint, mode: ArithMode) -> Result<Value> {
    let sigma = pres.signature();
    if sigma != 0 {
        return Err(Error::SigmaNonzero(sigma));
    }
    let power = 1 + pres.surgery;
    let exact = match mode {
        ArithMode::Exact if power % 2 == 1 => return Err(Error::EtaOddPower(power)),
        ArithMode::Exact => true,
        ArithMode::Float => false,
        ArithMode::Auto => power % 2 == 0,
    };
    let sum = omega_sum(pres, p)?;
    if exact {
        let inv = omega_data(p.d)
            .sum_squares_at(p.sign)
            .inverse()
            .expect("sum of squares is positive");
        Ok(Value::Exact(&sum * &inv.pow((power / 2) as u32)))
    } else {
        Ok(Value::Float(normalize(&sum, power, p.d, ETA_DIGITS).to_c64()))
    }
}

/// The same invariant through the numerical embedding, carried to `digits`
/// decimal digits.
pub fn wrt_invariant_hp(pres: &SurgeryPresentation, p: EvalPoint, digits: u32) -> Result<HpComplex> {
    let sigma = pres.signature();
    if sigma != 0 {
        return Err(Error::SigmaNonzero(sigma));
    }
    let sum = omega_sum(pres, p)?;
    Ok(normalize(&sum, 1 + pres.surgery, p.d, digits))
}

fn normalize(sum: &CycloNum, power: usize, d: u32, digits: u32) -> HpComplex {
    let bits = bits_for_digits(digits);
    let eta = powi(&omega_data(d).eta_at(digits), power, bits);
    cyclo_to_complex(sum, digits).scale(&eta)
}
