//! Dense univariate polynomials over the rationals. Internal workhorse for
//! gcd computations and cyclotomic reduction.

use num_traits::{One, Zero};

use super::laurent::{LaurentPoly, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct DensePoly {
    /// Coefficients from degree 0 upwards; no trailing zeros.
    pub(crate) c: Vec<Q>,
}

impl DensePoly {
    pub(crate) fn new(mut c: Vec<Q>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Self { c }
    }

    #[cfg(test)]
    pub(crate) fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| Q::from_integer(x.into())).collect())
    }

    pub(crate) fn one() -> Self {
        Self { c: vec![Q::one()] }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub(crate) fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub(crate) fn lead(&self) -> Option<&Q> {
        self.c.last()
    }

    /// Laurent polynomial with its lowest term moved to degree zero, and the
    /// shift that was removed.
    pub(crate) fn from_laurent(p: &LaurentPoly) -> (Self, i64) {
        let Some(lo) = p.min_exp() else {
            return (Self::new(vec![]), 0);
        };
        let hi = p.max_exp().unwrap();
        let mut c = vec![Q::zero(); (hi - lo + 1) as usize];
        for (e, x) in p.terms() {
            c[(e - lo) as usize] = x.clone();
        }
        (Self::new(c), lo)
    }

    pub(crate) fn to_laurent(&self, shift: i64) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.c
                .iter()
                .enumerate()
                .map(|(i, x)| (i as i64 + shift, x.clone())),
        )
    }

    pub(crate) fn scale(&self, k: &Q) -> Self {
        Self::new(self.c.iter().map(|x| x * k).collect())
    }

    pub(crate) fn monic(&self) -> Self {
        match self.lead() {
            Some(l) => self.scale(&l.recip()),
            None => self.clone(),
        }
    }

    pub(crate) fn sub(&self, other: &Self) -> Self {
        let n = self.c.len().max(other.c.len());
        let mut c = vec![Q::zero(); n];
        for (i, x) in self.c.iter().enumerate() {
            c[i] += x;
        }
        for (i, x) in other.c.iter().enumerate() {
            c[i] -= x;
        }
        Self::new(c)
    }

    pub(crate) fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(vec![]);
        }
        let mut c = vec![Q::zero(); self.c.len() + other.c.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.c.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        Self::new(c)
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub(crate) fn divrem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let inv = divisor.lead().unwrap().recip();
        let mut rem = self.c.clone();
        if rem.len() <= dd {
            return (Self::new(vec![]), self.clone());
        }
        let mut quot = vec![Q::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let coef = &rem[k + dd] * &inv;
            if coef.is_zero() {
                continue;
            }
            for (j, y) in divisor.c.iter().enumerate() {
                rem[k + j] -= &coef * y;
            }
            quot[k] = coef;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor.
    pub(crate) fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Inverse of `self` modulo `modulus`, if they are coprime.
    pub(crate) fn inverse_mod(&self, modulus: &Self) -> Option<Self> {
        // extended Euclid tracking only the coefficient of `self`
        let mut r0 = modulus.clone();
        let mut r1 = self.divrem(modulus).1;
        let mut t0 = Self::new(vec![]);
        let mut t1 = Self::one();
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = t;
        }
        if r0.degree() != Some(0) {
            return None;
        }
        let k = r0.c[0].recip();
        Some(t0.scale(&k).divrem(modulus).1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_of_products() {
        let a = DensePoly::from_ints(&[1, 1]); // 1 + x
        let b = DensePoly::from_ints(&[-2, 0, 1]); // x^2 - 2
        let c = DensePoly::from_ints(&[3, 0, 0, 1]);
        let g = a.mul(&b).gcd(&a.mul(&c));
        assert_eq!(g, a);
        assert_eq!(b.gcd(&c), DensePoly::one());
    }

    #[test]
    fn divrem_reconstructs() {
        let n = DensePoly::from_ints(&[5, -3, 0, 2, 7]);
        let d = DensePoly::from_ints(&[1, 0, 3]);
        let (q, r) = n.divrem(&d);
        assert!(r.degree().unwrap_or(0) < 2);
        assert_eq!(q.mul(&d).sub(&n.sub(&r)), DensePoly::new(vec![]));
    }

    #[test]
    fn modular_inverse() {
        let m = DensePoly::from_ints(&[1, -1, 1]); // x^2 - x + 1
        let a = DensePoly::from_ints(&[2, 1]);
        let inv = a.inverse_mod(&m).unwrap();
        assert_eq!(a.mul(&inv).divrem(&m).1, DensePoly::one());
        assert!(DensePoly::from_ints(&[0, 0]).inverse_mod(&m).is_none());
    }
}
