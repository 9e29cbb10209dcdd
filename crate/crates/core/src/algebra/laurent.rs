use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{Map, Value};

use crate::error::{Error, Result};

pub type Q = BigRational;

/// A sparse Laurent polynomial in `A` with rational coefficients.
///
/// Zero coefficients are never stored, so two polynomials are equal exactly
/// when their term maps are equal.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Q>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Q::from_integer(c.into()))
    }

    /// `c * A^exp`.
    pub fn monomial(exp: i64, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `sign * A^exp` for a small integer coefficient.
    pub fn a_pow(exp: i64, coeff: i64) -> Self {
        Self::monomial(exp, Q::from_integer(coeff.into()))
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Q)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn from_int_terms<I: IntoIterator<Item = (i64, i64)>>(iter: I) -> Self {
        Self::from_terms(iter.into_iter().map(|(e, c)| (e, Q::from_integer(c.into()))))
    }

    pub fn add_term(&mut self, exp: i64, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Q {
        self.terms.get(&exp).cloned().unwrap_or_else(Q::zero)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Q)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading(&self) -> Option<(i64, &Q)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    /// Returns the constant if the polynomial has degree zero (or is zero).
    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// Multiplication by `A^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Substitution `A -> A^k` (k may be negative).
    pub fn substitute_power(&self, k: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (e * k, c.clone())))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder. Works on the sparse representation, so dividing long
    /// polynomials by short ones stays cheap.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        let (dmax, dlead) = divisor.leading()?;
        let dmin = divisor.min_exp()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lowest = self.min_exp()? - dmin;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((rmax, rlead)) = rem.leading() {
            let e = rmax - dmax;
            if e < lowest {
                return None;
            }
            let c = rlead / dlead;
            for (de, dc) in divisor.terms() {
                rem.add_term(de + e, -(dc * &c));
            }
            quot.add_term(e, c);
        }
        Some(quot)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|(e, c)| z.powi(*e as i32) * c.to_f64().unwrap_or(f64::NAN))
            .sum()
    }

    /// JSON map `{"exponent": "p/q"}`.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (e, c) in self.terms.iter().rev() {
            map.insert(e.to_string(), Value::String(c.to_string()));
        }
        Value::Object(map)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("polynomial must be a JSON object".into()))?;
        let mut p = Self::zero();
        for (k, c) in obj {
            let e: i64 = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent {k:?}")))?;
            let s = c
                .as_str()
                .ok_or_else(|| Error::Parse(format!("coefficient of A^{e} must be a string")))?;
            p.add_term(e, parse_rational(s)?);
        }
        Ok(p)
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<Q> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms.iter() {
            self.add_term(*e, c.clone());
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms.iter() {
            for (e2, c2) in rhs.terms.iter() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

/// Canonical text form: decreasing exponents, explicit signs, `A^k` tokens,
/// e.g. `-A^2 - A^-2` or `1/2*A^4 + 3`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let var = match e {
                0 => String::new(),
                1 => "A".to_string(),
                e => format!("A^{e}"),
            };
            if var.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_int_terms(terms.iter().copied())
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(p(&[(2, -1), (-2, -1)]).to_string(), "-A^2 - A^-2");
        assert_eq!(LaurentPoly::one().to_string(), "1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        let half = LaurentPoly::monomial(4, Q::new(1.into(), 2.into())) + p(&[(0, 3), (1, -2)]);
        assert_eq!(half.to_string(), "1/2*A^4 - 2*A + 3");
    }

    #[test]
    fn no_zero_coefficients_after_cancellation() {
        let a = p(&[(3, 1), (0, 2)]);
        let b = p(&[(3, -1)]);
        let s = &a + &b;
        assert_eq!(s.len(), 1);
        assert_eq!(s, p(&[(0, 2)]));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division() {
        let a = p(&[(2, 1), (-2, 1)]);
        let b = p(&[(4, 1), (0, 1), (-4, 1)]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(b.div_exact(&a), None);
        assert_eq!(LaurentPoly::zero().div_exact(&a), Some(LaurentPoly::zero()));
        assert_eq!(a.div_exact(&LaurentPoly::zero()), None);
    }

    #[test]
    fn json_round_trip() {
        let x = LaurentPoly::monomial(-3, Q::new((-5).into(), 7.into())) + p(&[(2, 4)]);
        let v = x.to_json();
        assert_eq!(v.to_string(), r#"{"-3":"-5/7","2":"4"}"#);
        assert_eq!(LaurentPoly::from_json(&v).unwrap(), x);
        assert!(LaurentPoly::from_json(&serde_json::json!({"x": "1"})).is_err());
    }

    #[test]
    fn pow_matches_repeated_product() {
        let d = p(&[(2, -1), (-2, -1)]);
        let mut acc = LaurentPoly::one();
        for n in 0..6 {
            assert_eq!(d.pow(n), acc);
            acc = &acc * &d;
        }
    }
}
