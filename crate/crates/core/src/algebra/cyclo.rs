use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::dense::DensePoly;
use super::laurent::{LaurentPoly, Q};
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }

    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];
}

/// The point `A = exp(sign * pi * i / (2d + 1))` of the SO(3) parameter set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EvalPoint {
    pub d: u32,
    pub sign: Sign,
}

impl EvalPoint {
    pub fn new(d: u32, sign: Sign) -> Self {
        assert!(d >= 1, "evaluation level d must be at least 1");
        Self { d, sign }
    }

    pub fn plus(d: u32) -> Self {
        Self::new(d, Sign::Plus)
    }

    pub fn minus(d: u32) -> Self {
        Self::new(d, Sign::Minus)
    }

    /// `2d + 1`.
    pub fn level(self) -> u32 {
        2 * self.d + 1
    }

    /// Multiplicative order of `A`, `2(2d + 1)`.
    pub fn order(self) -> u32 {
        2 * self.level()
    }
}

impl fmt::Display for EvalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={} ({})", self.d, self.sign.symbol())
    }
}

/// `Q(zeta)` for `zeta = exp(pi i / (2d+1))`, stored as the quotient of
/// `Q[x]` by the cyclotomic polynomial of order `2(2d+1)`.
pub struct CycloField {
    d: u32,
    order: u32,
    modulus: DensePoly,
    /// `x^e mod modulus` for `0 <= e < order`.
    powers: Vec<Vec<Q>>,
}

impl CycloField {
    pub fn get(d: u32) -> Arc<CycloField> {
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycloField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(f) = cache.lock().unwrap().get(&d) {
            return f.clone();
        }
        let field = Arc::new(CycloField::build(d));
        cache.lock().unwrap().entry(d).or_insert(field).clone()
    }

    fn build(d: u32) -> Self {
        assert!(d >= 1);
        let order = 2 * (2 * d + 1);
        let modulus = cyclotomic_polynomial(order);
        let deg = modulus.degree().unwrap();
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![Q::zero(); deg];
        cur[0] = Q::one();
        for _ in 0..order {
            powers.push(cur.clone());
            // multiply by x and reduce with the monic modulus
            let top = cur.pop().unwrap();
            cur.insert(0, Q::zero());
            if !top.is_zero() {
                for (i, m) in modulus.c.iter().take(deg).enumerate() {
                    cur[i] -= &top * m;
                }
            }
        }
        Self {
            d,
            order,
            modulus,
            powers,
        }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Degree of the field over `Q`, i.e. Euler's phi of `2(2d+1)`.
    pub fn degree(&self) -> usize {
        self.powers[0].len()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Integer coefficients of the defining cyclotomic polynomial, low degree first.
    pub fn modulus_coefficients(&self) -> Vec<Q> {
        self.modulus.c.clone()
    }

    fn reduce(&self, raw: Vec<Q>) -> Vec<Q> {
        let deg = self.degree();
        let mut out = vec![Q::zero(); deg];
        for (e, c) in raw.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &self.powers[e % self.order as usize];
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o += &c * r;
                }
            }
        }
        out
    }
}

/// Cyclotomic polynomial `Phi_n` by exact division of `x^n - 1` by the
/// cyclotomic polynomials of the proper divisors of `n`.
pub(crate) fn cyclotomic_polynomial(n: u32) -> DensePoly {
    let mut c = vec![Q::zero(); n as usize + 1];
    c[0] = -Q::one();
    c[n as usize] = Q::one();
    let mut p = DensePoly::new(c);
    for k in 1..n {
        if n % k == 0 {
            let (q, r) = p.divrem(&cyclotomic_polynomial(k));
            debug_assert!(r.is_zero());
            p = q;
        }
    }
    p
}

/// Exact element of `Q(zeta)`, `zeta = exp(pi i / (2d+1))`.
#[derive(Clone)]
pub struct CycloNum {
    field: Arc<CycloField>,
    coeffs: Vec<Q>,
}

impl CycloNum {
    pub fn zero(d: u32) -> Self {
        let field = CycloField::get(d);
        let coeffs = vec![Q::zero(); field.degree()];
        Self { field, coeffs }
    }

    pub fn from_rational(d: u32, q: Q) -> Self {
        let mut z = Self::zero(d);
        z.coeffs[0] = q;
        z
    }

    pub fn from_int(d: u32, n: i64) -> Self {
        Self::from_rational(d, Q::from_integer(n.into()))
    }

    pub fn one(d: u32) -> Self {
        Self::from_int(d, 1)
    }

    /// `zeta^k` for any integer `k`.
    pub fn zeta_pow(d: u32, k: i64) -> Self {
        let field = CycloField::get(d);
        let e = k.rem_euclid(field.order as i64) as usize;
        let coeffs = field.powers[e].clone();
        Self { field, coeffs }
    }

    pub fn d(&self) -> u32 {
        self.field.d
    }

    pub fn field(&self) -> &CycloField {
        &self.field
    }

    /// Coefficients on `1, zeta, zeta^2, ...` of the reduced representative.
    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational number this element equals, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<Q> {
        self.coeffs[1..]
            .iter()
            .all(|c| c.is_zero())
            .then(|| self.coeffs[0].clone())
    }

    pub fn is_rational_eq(&self, q: &Q) -> bool {
        self.as_rational().as_ref() == Some(q)
    }

    /// Complex conjugation, the automorphism `zeta -> zeta^-1`.
    pub fn conjugate(&self) -> Self {
        let order = self.field.order as usize;
        let raw: Vec<Q> = {
            let mut raw = vec![Q::zero(); order];
            for (j, c) in self.coeffs.iter().enumerate() {
                raw[(order - j) % order] += c;
            }
            raw
        };
        Self {
            coeffs: self.field.reduce(raw),
            field: self.field.clone(),
        }
    }

    /// Fixed by conjugation, i.e. real under every complex embedding.
    pub fn is_real(&self) -> bool {
        *self == self.conjugate()
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let inv = DensePoly::new(self.coeffs.clone()).inverse_mod(&self.field.modulus)?;
        let mut coeffs = inv.c;
        coeffs.resize(self.field.degree(), Q::zero());
        Some(Self {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn checked_div(&self, rhs: &CycloNum) -> Option<Self> {
        rhs.inverse().map(|inv| self * &inv)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.d());
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, q: &Q) -> Self {
        Self {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    fn same_field(&self, other: &CycloNum) {
        assert_eq!(
            self.field.d, other.field.d,
            "mixing cyclotomic fields of different levels"
        );
    }
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        self.field.d == other.field.d && self.coeffs == other.coeffs
    }
}

impl Eq for CycloNum {}

impl Add<&CycloNum> for &CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &CycloNum) -> CycloNum {
        self.same_field(rhs);
        CycloNum {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Add for CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: CycloNum) -> CycloNum {
        &self + &rhs
    }
}

impl Sub<&CycloNum> for &CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &CycloNum) -> CycloNum {
        self.same_field(rhs);
        CycloNum {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Sub for CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: CycloNum) -> CycloNum {
        &self - &rhs
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

impl Mul<&CycloNum> for &CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &CycloNum) -> CycloNum {
        self.same_field(rhs);
        let n = self.coeffs.len();
        let mut raw = vec![Q::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        CycloNum {
            coeffs: self.field.reduce(raw),
            field: self.field.clone(),
        }
    }
}

impl Mul for CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: CycloNum) -> CycloNum {
        &self * &rhs
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (j, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{mag}*z")?,
                (_, true) => write!(f, "z^{j}")?,
                (_, false) => write!(f, "{mag}*z^{j}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNum[d={}]({self})", self.field.d)
    }
}

/// Evaluation `A -> zeta^(+-1)` into the cyclotomic field of a point.
pub trait Evaluate {
    fn evaluate_at(&self, p: EvalPoint) -> Result<CycloNum>;
}

impl Evaluate for LaurentPoly {
    fn evaluate_at(&self, p: EvalPoint) -> Result<CycloNum> {
        let field = CycloField::get(p.d);
        let order = field.order as i64;
        let mut out = vec![Q::zero(); field.degree()];
        for (e, c) in self.terms() {
            let k = (p.sign.as_i64() * e).rem_euclid(order) as usize;
            for (o, r) in out.iter_mut().zip(&field.powers[k]) {
                if !r.is_zero() {
                    *o += c * r;
                }
            }
        }
        Ok(CycloNum { field, coeffs: out })
    }
}

impl Evaluate for RatFunc {
    fn evaluate_at(&self, p: EvalPoint) -> Result<CycloNum> {
        let num = self.num().evaluate_at(p)?;
        if self.den().is_one() {
            return Ok(num);
        }
        let den = self.den().evaluate_at(p)?;
        num.checked_div(&den).ok_or(Error::Pole(p))
    }
}

/// Image of `x` under `A -> zeta^(+-1)`; fails with `E_POLE` when a
/// denominator vanishes at `p`.
pub fn evaluate_at<T: Evaluate + ?Sized>(x: &T, p: EvalPoint) -> Result<CycloNum> {
    x.evaluate_at(p)
}

/// Euler's totient, used to size cyclotomic fields.
pub fn totient(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}
