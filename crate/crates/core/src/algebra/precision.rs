//! High-precision complex embedding of cyclotomic values.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_complex::Complex64;

use super::cyclo::CycloNum;
use super::laurent::Q;

const RM: RoundingMode = RoundingMode::ToEven;

/// Working precision in bits for a requested number of decimal digits,
/// with guard bits.
pub fn bits_for_digits(digits: u32) -> usize {
    let digits = digits.max(15) as f64;
    (digits * std::f64::consts::LOG2_10).ceil() as usize + 64
}

/// A complex number with arbitrary-precision real and imaginary parts.
#[derive(Clone, Debug)]
pub struct HpComplex {
    pub re: BigFloat,
    pub im: BigFloat,
    bits: usize,
}

impl HpComplex {
    pub fn from_real(re: BigFloat, bits: usize) -> Self {
        Self {
            re,
            im: BigFloat::from_i64(0, bits),
            bits,
        }
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn add(&self, other: &HpComplex) -> HpComplex {
        Self {
            re: self.re.add(&other.re, self.bits, RM),
            im: self.im.add(&other.im, self.bits, RM),
            bits: self.bits,
        }
    }

    pub fn mul(&self, other: &HpComplex) -> HpComplex {
        let p = self.bits;
        let re = self.re.mul(&other.re, p, RM).sub(&self.im.mul(&other.im, p, RM), p, RM);
        let im = self.re.mul(&other.im, p, RM).add(&self.im.mul(&other.re, p, RM), p, RM);
        Self { re, im, bits: p }
    }

    pub fn scale(&self, k: &BigFloat) -> HpComplex {
        Self {
            re: self.re.mul(k, self.bits, RM),
            im: self.im.mul(k, self.bits, RM),
            bits: self.bits,
        }
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(to_f64(&self.re), to_f64(&self.im))
    }
}

pub fn to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    x.to_string().parse().unwrap_or(f64::NAN)
}

/// Decimal rendering with `digits` significant digits.
/// Fixed-point decimal with `digits` places after the point, rounded half
/// away from zero.
pub fn format_decimal(x: &BigFloat, digits: u32) -> String {
    let mut cc = Consts::new().expect("constants cache");
    let mut y = x.clone();
    y.set_precision(bits_for_digits(digits + 10), RM).ok();
    let text = y.format(Radix::Dec, RM, &mut cc).unwrap_or_default();
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.as_str()),
    };
    let (mantissa, exp) = body.split_once('e').unwrap_or((body, "0"));
    let Ok(exp) = exp.parse::<i64>() else {
        return text;
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let all = format!("{int}{frac}");
    let Ok(m) = all.parse::<BigInt>() else {
        return text;
    };
    // value = m * 10^(exp - frac.len()); we want round(value * 10^digits)
    let shift = exp - frac.len() as i64 + digits as i64;
    let ten = BigInt::from(10);
    let scaled = if shift >= 0 {
        m * num_traits::pow(ten, shift as usize)
    } else {
        let p = num_traits::pow(ten, (-shift) as usize);
        (m * 2 + &p) / (p * 2)
    };
    let mut s = scaled.to_string();
    let digits = digits as usize;
    if s.len() <= digits {
        s = format!("{}{s}", "0".repeat(digits + 1 - s.len()));
    }
    let (whole, rest) = s.split_at(s.len() - digits);
    let sign = if negative && scaled_is_nonzero(&s) { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{rest}")
    }
}

fn scaled_is_nonzero(s: &str) -> bool {
    s.bytes().any(|b| b != b'0')
}

pub fn rational_to_bigfloat(q: &Q, bits: usize) -> BigFloat {
    let mut cc = Consts::new().expect("constants cache");
    let n = BigFloat::parse(&q.numer().to_string(), Radix::Dec, bits, RM, &mut cc);
    let d = BigFloat::parse(&q.denom().to_string(), Radix::Dec, bits, RM, &mut cc);
    n.div(&d, bits, RM)
}

pub fn sqrt(x: &BigFloat, bits: usize) -> BigFloat {
    x.sqrt(bits, RM)
}

pub fn recip(x: &BigFloat, bits: usize) -> BigFloat {
    x.reciprocal(bits, RM)
}

pub fn powi(x: &BigFloat, n: usize, bits: usize) -> BigFloat {
    x.powi(n, bits, RM)
}

/// Numerical embedding `zeta -> exp(pi i / (2d+1))` with roughly `digits`
/// correct decimal digits. Requests below 15 digits are raised to 15.
pub fn cyclo_to_complex(x: &CycloNum, digits: u32) -> HpComplex {
    let bits = bits_for_digits(digits);
    let mut cc = Consts::new().expect("constants cache");
    let level = BigFloat::from_i64((2 * x.d() + 1) as i64, bits);
    let theta = cc.pi(bits, RM).div(&level, bits, RM);
    let mut re = BigFloat::from_i64(0, bits);
    let mut im = BigFloat::from_i64(0, bits);
    for (j, c) in x.coeffs().iter().enumerate() {
        if num_traits::Zero::is_zero(c) {
            continue;
        }
        let c = rational_to_bigfloat(c, bits);
        let angle = theta.mul(&BigFloat::from_i64(j as i64, bits), bits, RM);
        let cos = angle.cos(bits, RM, &mut cc);
        let sin = angle.sin(bits, RM, &mut cc);
        re = re.add(&c.mul(&cos, bits, RM), bits, RM);
        im = im.add(&c.mul(&sin, bits, RM), bits, RM);
    }
    HpComplex { re, im, bits }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{delta_color, evaluate_at, EvalPoint};

    #[test]
    fn fixed_point_rendering() {
        let bits = bits_for_digits(20);
        assert_eq!(format_decimal(&BigFloat::from_i64(0, bits), 4), "0.0000");
        assert_eq!(format_decimal(&BigFloat::from_i64(-3, bits), 2), "-3.00");
        let third = rational_to_bigfloat(&Q::new((-1).into(), 3.into()), bits);
        assert_eq!(format_decimal(&third, 5), "-0.33333");
        let big = rational_to_bigfloat(&Q::new(12345.into(), 2.into()), bits);
        assert_eq!(format_decimal(&big, 1), "6172.5");
        assert_eq!(format_decimal(&big, 0), "6173");
    }

    #[test]
    fn embedding_of_one_and_zeta() {
        let one = cyclo_to_complex(&CycloNum::one(3), 30).to_c64();
        assert_eq!(one, Complex64::new(1.0, 0.0));
        let z = cyclo_to_complex(&CycloNum::zeta_pow(1, 1), 30).to_c64();
        assert!((z - Complex64::new(0.5, 0.8660254037844386)).norm() < 1e-15);
    }

    #[test]
    fn golden_ratio_value() {
        let v = evaluate_at(&delta_color(1), EvalPoint::plus(2)).unwrap();
        let z = cyclo_to_complex(&v, 40);
        let want = -2.0 * (2.0 * std::f64::consts::PI / 5.0).cos();
        assert!((z.to_c64().re - want).abs() < 1e-15);
        assert!((want + 0.6180339887).abs() < 1e-10);
        // 40 digits: compare against (1 - sqrt 5) / 2 computed in big floats
        let bits = bits_for_digits(40);
        let five = BigFloat::from_i64(5, bits);
        let exact = BigFloat::from_i64(1, bits)
            .sub(&sqrt(&five, bits), bits, RM)
            .div(&BigFloat::from_i64(2, bits), bits, RM);
        let err = z.re.sub(&exact, bits, RM);
        assert!(to_f64(&err).abs() < 1e-38, "error {}", to_f64(&err));
    }
}
