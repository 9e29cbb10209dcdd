use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::RangeInclusive;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::invariant::{ArithMode, Value};
use super::torus::f_mobius;
use crate::algebra::{CycloNum, EvalPoint, Sign, Q};
use crate::error::{Error, Result};
use crate::recoupling::meridian_series;

/// Absolute tolerance for comparisons involving floats.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

/// Largest level tabulated exactly in auto mode.
pub const AUTO_EXACT_MAX_D: u32 = 60;

/// A named function on the parameter set `{(d, +), (d, -)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quantity {
    /// The 3-torus alone.
    Empty,
    /// The 3-torus with a circle factor colored 1.
    K1,
    /// The 3-torus with a circle factor colored 2.
    K2,
    /// `K2 / Empty`.
    Ratio,
    /// The function `f` at `exp(+-pi i/(2d+1))`.
    F,
}

impl Quantity {
    pub const ALL: [Quantity; 5] = [Quantity::Empty, Quantity::K1, Quantity::K2, Quantity::Ratio, Quantity::F];

    pub fn name(self) -> &'static str {
        match self {
            Quantity::Empty => "empty",
            Quantity::K1 => "K1",
            Quantity::K2 => "K2",
            Quantity::Ratio => "ratio",
            Quantity::F => "f",
        }
    }

    /// The closed-form value at `p`.
    pub fn prediction(self, p: EvalPoint) -> Q {
        let d = Q::from_integer(p.d.into());
        let one = Q::from_integer(1.into());
        match self {
            Quantity::Empty => d,
            Quantity::K1 => one,
            Quantity::K2 => d - one,
            Quantity::Ratio => (&d - &one) / d,
            Quantity::F => match p.sign {
                Sign::Plus => (&d - &one) / d,
                Sign::Minus => (&d + Q::from_integer(2.into())) / (d + one),
            },
        }
    }

    fn color(self) -> Option<u32> {
        match self {
            Quantity::Empty => Some(0),
            Quantity::K1 => Some(1),
            Quantity::K2 => Some(2),
            _ => None,
        }
    }

    fn exact(self, p: EvalPoint) -> Option<CycloNum> {
        match self {
            Quantity::Ratio => meridian_series(2, p).checked_div(&meridian_series(0, p)),
            Quantity::F => None,
            q => Some(meridian_series(q.color().unwrap(), p)),
        }
    }

    fn float(self, p: EvalPoint) -> Option<Complex64> {
        match self {
            Quantity::Ratio => {
                let e = series_float(0, p.d);
                (e != 0.0).then(|| Complex64::new(series_float(2, p.d) / e, 0.0))
            }
            Quantity::F => {
                let angle = p.sign.as_i64() as f64 * std::f64::consts::PI / p.level() as f64;
                f_mobius(Complex64::from_polar(1.0, angle)).ok()
            }
            q => Some(Complex64::new(series_float(q.color().unwrap(), p.d), 0.0)),
        }
    }

    /// The value at `p`, or `None` where the function is undefined.
    pub fn value(self, p: EvalPoint, mode: ArithMode) -> Option<Value> {
        let exact = match mode {
            ArithMode::Exact => true,
            ArithMode::Float => false,
            ArithMode::Auto => p.d <= AUTO_EXACT_MAX_D,
        };
        if exact && self != Quantity::F {
            self.exact(p).map(Value::Exact)
        } else {
            self.float(p).map(Value::Float)
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Quantity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Quantity::ALL
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown quantity {s:?}")))
    }
}

/// `sum_{i < d} H(i, a) / Δ_i` in floating point via
/// `[n] = sin(n t) / sin(t)`, `t = 2 pi / (2d + 1)`; the value is the same
/// at both signs.
fn series_float(a: u32, d: u32) -> f64 {
    let t = 2.0 * std::f64::consts::PI / (2 * d + 1) as f64;
    let s = if a % 2 == 0 { 1.0 } else { -1.0 };
    (1..=d)
        .map(|m| {
            let m = m as f64;
            s * ((a as f64 + 1.0) * m * t).sin() / (m * t).sin()
        })
        .sum()
}

/// Values of a quantity over a window of levels, both signs.
#[derive(Clone, Debug)]
pub struct GammaFunction {
    pub quantity: Quantity,
    pub window: RangeInclusive<u32>,
    /// Per level, the values at `+` and `-`.
    pub values: BTreeMap<u32, [Value; 2]>,
    /// Levels where the function is undefined.
    pub exceptions: BTreeSet<u32>,
}

impl GammaFunction {
    pub fn get(&self, p: EvalPoint) -> Option<&Value> {
        let i = match p.sign {
            Sign::Plus => 0,
            Sign::Minus => 1,
        };
        self.values.get(&p.d).map(|v| &v[i])
    }

    /// Agreement at every level of the window where both are defined.
    pub fn agrees_with(&self, other: &GammaFunction) -> bool {
        self.values.iter().all(|(d, mine)| match other.values.get(d) {
            None => true,
            Some(theirs) => mine.iter().zip(theirs).all(|(a, b)| values_agree(a, b)),
        })
    }

    /// Agreement with the closed-form prediction at every defined level.
    pub fn matches_prediction(&self) -> bool {
        self.values.iter().all(|(&d, v)| {
            Sign::BOTH
                .iter()
                .zip(v)
                .all(|(&s, x)| value_matches(x, &self.quantity.prediction(EvalPoint::new(d, s)), FLOAT_TOLERANCE))
        })
    }
}

fn values_agree(a: &Value, b: &Value) -> bool {
    match (a, b) {
        (Value::Exact(x), Value::Exact(y)) => x == y,
        _ => (a.to_c64() - b.to_c64()).norm() <= FLOAT_TOLERANCE,
    }
}

/// Exact values must equal `q` exactly; float values within `tol`.
pub fn value_matches(v: &Value, q: &Q, tol: f64) -> bool {
    match v {
        Value::Exact(x) => x.is_rational_eq(q),
        Value::Float(z) => {
            let q = q.to_f64().unwrap_or(f64::NAN);
            (z.re - q).abs() <= tol && z.im.abs() <= tol
        }
    }
}

pub fn gamma_tabulate(quantity: Quantity, window: RangeInclusive<u32>, mode: ArithMode) -> Result<GammaFunction> {
    if window.is_empty() || *window.start() == 0 {
        return Err(Error::Precondition(format!(
            "window {}..{} must be nonempty and start at d >= 1",
            window.start(),
            window.end()
        )));
    }
    let rows: Vec<(u32, Option<[Value; 2]>)> = window
        .clone()
        .into_par_iter()
        .map(|d| {
            let plus = quantity.value(EvalPoint::plus(d), mode);
            let minus = quantity.value(EvalPoint::minus(d), mode);
            (d, plus.zip(minus).map(|(a, b)| [a, b]))
        })
        .collect();
    let mut values = BTreeMap::new();
    let mut exceptions = BTreeSet::new();
    for (d, v) in rows {
        match v {
            Some(v) => {
                values.insert(d, v);
            }
            None => {
                exceptions.insert(d);
            }
        }
    }
    Ok(GammaFunction {
        quantity,
        window,
        values,
        exceptions,
    })
}

/// One line of an invariant report.
#[derive(Clone, Debug)]
pub struct ReportRow {
    pub quantity: Quantity,
    pub point: EvalPoint,
    pub value: Option<Value>,
    pub prediction: Q,
    pub pass: bool,
}

impl ReportRow {
    /// Absolute difference from the prediction (0 for exact agreement).
    pub fn difference(&self) -> Option<f64> {
        let v = self.value.as_ref()?;
        if let Value::Exact(x) = v {
            if x.is_rational_eq(&self.prediction) {
                return Some(0.0);
            }
        }
        let q = self.prediction.to_f64().unwrap_or(f64::NAN);
        Some((v.to_c64() - Complex64::new(q, 0.0)).norm())
    }
}

/// Computed values against closed forms over a window.
#[derive(Clone, Debug)]
pub struct InvariantReport {
    pub name: String,
    pub rows: Vec<ReportRow>,
}

impl InvariantReport {
    pub fn new(quantities: &[Quantity], window: RangeInclusive<u32>, mode: ArithMode) -> Result<Self> {
        let mut rows = Vec::new();
        for &q in quantities {
            let g = gamma_tabulate(q, window.clone(), mode)?;
            for d in window.clone() {
                for (k, &sign) in Sign::BOTH.iter().enumerate() {
                    let p = EvalPoint::new(d, sign);
                    let prediction = q.prediction(p);
                    let value = g.values.get(&d).map(|v| v[k].clone());
                    let tol = if q == Quantity::F { 1e-12 } else { FLOAT_TOLERANCE };
                    let pass = value.as_ref().is_some_and(|v| value_matches(v, &prediction, tol));
                    rows.push(ReportRow {
                        quantity: q,
                        point: p,
                        value,
                        prediction,
                        pass,
                    });
                }
            }
        }
        Ok(Self {
            name: format!("levels {}..{}", window.start(), window.end()),
            rows,
        })
    }

    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}
