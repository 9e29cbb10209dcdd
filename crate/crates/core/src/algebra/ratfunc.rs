use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::dense::DensePoly;
use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// An element of the rational function field `Q(A)`, always held in
/// canonical form: `num / den` with `gcd(num, den) = 1`, `den` an ordinary
/// monic polynomial with nonzero constant term, and any monomial unit folded
/// into `num`. Canonical forms compare equal exactly when the functions do.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(c))
    }

    /// Reduce `num / den` to canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        ratfunc_canonical(num, den)
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The Laurent polynomial this function equals, if the denominator is 1.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn recip(&self) -> Result<Self> {
        ratfunc_canonical(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivZero);
        }
        ratfunc_canonical(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// `self * den` as a Laurent polynomial, when `den` is a multiple of the
    /// denominator.
    pub fn numerator_over(&self, den: &LaurentPoly) -> Option<LaurentPoly> {
        Some(&self.num * &den.div_exact(&self.den)?)
    }

    pub fn scale_poly(&self, p: &LaurentPoly) -> Self {
        ratfunc_canonical(&self.num * p, self.den.clone()).expect("nonzero denominator")
    }
}

/// Bring `num / den` to the canonical reduced form described on [`RatFunc`].
pub fn ratfunc_canonical(num: LaurentPoly, den: LaurentPoly) -> Result<RatFunc> {
    if den.is_zero() {
        return Err(Error::DivZero);
    }
    if num.is_zero() {
        return Ok(RatFunc::zero());
    }
    // cheap path: exact sparse division
    if let Some(q) = num.div_exact(&den) {
        return Ok(RatFunc::from_poly(q));
    }
    let (n, n_shift) = DensePoly::from_laurent(&num);
    let (d, d_shift) = DensePoly::from_laurent(&den);
    let g = n.gcd(&d);
    let (n, d) = if g.degree() == Some(0) {
        (n, d)
    } else {
        (n.divrem(&g).0, d.divrem(&g).0)
    };
    let lead = d.lead().expect("nonzero denominator").recip();
    let (n, d) = (n.scale(&lead), d.scale(&lead));
    Ok(RatFunc {
        num: n.to_laurent(n_shift - d_shift),
        den: d.to_laurent(0),
    })
}

/// Least common multiple of the denominators, monic.
pub fn common_denominator<'a, I: IntoIterator<Item = &'a RatFunc>>(items: I) -> LaurentPoly {
    let mut seen: Vec<&LaurentPoly> = Vec::new();
    let mut lcm = DensePoly::one();
    for r in items {
        if r.den.is_one() || seen.contains(&&r.den) {
            continue;
        }
        seen.push(&r.den);
        let (d, _) = DensePoly::from_laurent(&r.den);
        let g = lcm.gcd(&d);
        lcm = lcm.mul(&d.divrem(&g).0);
    }
    lcm.monic().to_laurent(0)
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return ratfunc_canonical(&self.num + &rhs.num, self.den.clone()).unwrap();
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        ratfunc_canonical(num, &self.den * &rhs.den).unwrap()
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        &self - &rhs
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        ratfunc_canonical(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}
