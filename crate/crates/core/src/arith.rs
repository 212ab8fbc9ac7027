//! Exact rational and Gaussian-rational arithmetic.
//!
//! Every scalar in this crate is either a [`Rational`] or a
//! [`GaussianRational`] (an element of Q(i)). There is no floating point
//! anywhere. `BigRational` keeps values reduced with a positive denominator,
//! which is exactly the canonical form the rest of the crate relies on:
//! equality is structural and serialisation is unique.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Exact rational scalar (arbitrary precision, always reduced).
pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat_int(v: i64) -> Rational {
    BigRational::from_integer(BigInt::from(v))
}

/// Rational `num/den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// n! as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Binomial coefficient C(n, k) as a big integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Falling factorial m(m-1)...(m-d+1); zero when `d > m`.
pub fn falling(m: u32, d: u32) -> BigInt {
    if d > m {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..d {
        acc *= BigInt::from(m - j);
    }
    acc
}

/// Complex number with rational real and imaginary parts: the coefficient
/// field Q(i) used by all operators and polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational {
            re,
            im: Rational::zero(),
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(rat_int(v))
    }

    /// `num/den` as a real Gaussian rational.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(rat(num, den))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    /// i^k for any (possibly negative) integer exponent.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::one(),
            1 => Self::i(),
            2 => -Self::one(),
            _ => -Self::i(),
        }
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate; an involution.
    pub fn conjugate(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// |x|^2 = re^2 + im^2 as a rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Exact multiplicative inverse; errors on zero.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = self.norm_sqr();
        Ok(GaussianRational {
            re: &self.re / &d,
            im: -(&self.im / &d),
        })
    }

    /// Multiply by a rational scalar.
    pub fn scale(&self, s: &Rational) -> Self {
        GaussianRational {
            re: &self.re * s,
            im: &self.im * s,
        }
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: GaussianRational) -> GaussianRational {
        &self + &rhs
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: GaussianRational) -> GaussianRational {
        &self - &rhs
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: GaussianRational) -> GaussianRational {
        &self * &rhs
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

fn fmt_imag_magnitude(m: &Rational) -> String {
    if m.is_one() {
        "i".to_string()
    } else {
        format!("{}i", m)
    }
}

impl fmt::Display for GaussianRational {
    /// Reduced textual form: `"0"`, `"3"`, `"1/2-3/4i"`, `"i"`, `"-i"`, `"1+i"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            if self.im.is_negative() {
                return write!(f, "-{}", fmt_imag_magnitude(&-self.im.clone()));
            }
            return write!(f, "{}", fmt_imag_magnitude(&self.im));
        }
        if self.im.is_negative() {
            write!(f, "{}-{}", self.re, fmt_imag_magnitude(&-self.im.clone()))
        } else {
            write!(f, "{}+{}", self.re, fmt_imag_magnitude(&self.im))
        }
    }
}

/// One signed group of the grammar: a rational magnitude plus an `i` marker.
/// Returns the remaining input.
fn parse_group(s: &str) -> Result<(Rational, bool, &str)> {
    let (sign, s) = match s.as_bytes().first() {
        Some(b'-') => (-1, &s[1..]),
        Some(b'+') => (1, &s[1..]),
        _ => (1, s),
    };
    if let Some(rest) = s.strip_prefix('i') {
        let mut mag = Rational::one();
        if sign < 0 {
            mag = -mag;
        }
        return Ok((mag, true, rest));
    }
    let digits = |t: &str| t.bytes().take_while(|b| b.is_ascii_digit()).count();
    let nd = digits(s);
    if nd == 0 {
        return Err(Error::Parse(format!("expected a number in {s:?}")));
    }
    let numer = BigInt::from_str(&s[..nd]).map_err(|e| Error::Parse(e.to_string()))?;
    let mut rest = &s[nd..];
    let mut denom = BigInt::one();
    if let Some(r) = rest.strip_prefix('/') {
        let dd = digits(r);
        if dd == 0 {
            return Err(Error::Parse(format!("expected a denominator in {r:?}")));
        }
        denom = BigInt::from_str(&r[..dd]).map_err(|e| Error::Parse(e.to_string()))?;
        if denom.is_zero() {
            return Err(Error::Parse("zero denominator".to_string()));
        }
        rest = &r[dd..];
    }
    let imag = if let Some(r) = rest.strip_prefix('i') {
        rest = r;
        true
    } else {
        false
    };
    let mut mag = BigRational::new(numer, denom);
    if sign < 0 {
        mag = -mag;
    }
    Ok((mag, imag, rest))
}

impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty input".to_string()));
        }
        let (first, first_imag, rest) = parse_group(s)?;
        if rest.is_empty() {
            return Ok(if first_imag {
                GaussianRational::new(Rational::zero(), first)
            } else {
                GaussianRational::from_rational(first)
            });
        }
        if first_imag {
            return Err(Error::Parse(format!(
                "imaginary part must come last in {s:?}"
            )));
        }
        if !rest.starts_with('+') && !rest.starts_with('-') {
            return Err(Error::Parse(format!("unexpected trailing input {rest:?}")));
        }
        let (second, second_imag, tail) = parse_group(rest)?;
        if !second_imag || !tail.is_empty() {
            return Err(Error::Parse(format!("malformed Gaussian rational {s:?}")));
        }
        Ok(GaussianRational::new(first, second))
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
