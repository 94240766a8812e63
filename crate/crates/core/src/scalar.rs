//! Exact Gaussian rationals `a + b·i` with arbitrary-precision rational parts.
//!
//! Every structure constant, matrix entry and residual in the crate lives in
//! the field ℚ(i).  Values are always kept in canonical form: both parts are
//! reduced fractions with positive denominators (guaranteed by
//! [`num_rational::BigRational`]), so structural equality is value equality.
//!
//! The textual syntax shared by the parser and every printer is
//! `a/b`, `a`, `i`, `-i`, `3i/2`, `1+2i`, `1/2-i/3`: real part first, no
//! spaces, lowest terms.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ScalarError;

/// An exact Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GScalar {
    re: BigRational,
    im: BigRational,
}

/// Builds a rational `n/d` from machine integers; panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> BigRational {
    assert!(d != 0, "rational with zero denominator");
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `n` or `n/d`.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses a rational written as `n` or `n/d` (optionally signed).
pub fn parse_rational(text: &str) -> Result<BigRational, ScalarError> {
    let t = text.trim();
    let bad = || ScalarError::Parse(text.to_string());
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, d),
        None => (t, "1"),
    };
    let n: BigInt = num.trim().parse().map_err(|_| bad())?;
    let d: BigInt = den.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(ScalarError::DivisionByZero);
    }
    Ok(BigRational::new(n, d))
}

impl GScalar {
    /// Builds `re + im·i`.
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GScalar { re, im }
    }

    /// The additive identity.
    pub fn zero() -> Self {
        GScalar::default()
    }

    /// The multiplicative identity.
    pub fn one() -> Self {
        GScalar::real(BigRational::one())
    }

    /// The imaginary unit `i`.
    pub fn i() -> Self {
        GScalar::imag(BigRational::one())
    }

    /// A real value.
    pub fn real(re: BigRational) -> Self {
        GScalar { re, im: BigRational::zero() }
    }

    /// A pure imaginary value `im·i`.
    pub fn imag(im: BigRational) -> Self {
        GScalar { re: BigRational::zero(), im }
    }

    /// A real integer.
    pub fn from_int(n: i64) -> Self {
        GScalar::real(BigRational::from_integer(BigInt::from(n)))
    }

    /// The real rational `n/d`; panics if `d == 0`.
    pub fn from_ratio(n: i64, d: i64) -> Self {
        GScalar::real(rat(n, d))
    }

    /// Real part.
    pub fn re(&self) -> &BigRational {
        &self.re
    }

    /// Imaginary part (coefficient of `i`).
    pub fn im(&self) -> &BigRational {
        &self.im
    }

    /// True iff the value is zero.
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// True iff the value is one.
    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// True iff the imaginary part vanishes.
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// True iff the real part vanishes.
    pub fn is_pure_imaginary(&self) -> bool {
        self.re.is_zero()
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        GScalar { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `|z|² = re² + im²`, always a non-negative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; division by zero is an error.
    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(GScalar { re: &self.re / &n, im: -(&self.im / &n) })
    }

    /// Exact quotient `self / rhs`; division by zero is an error.
    pub fn checked_div(&self, rhs: &GScalar) -> Result<Self, ScalarError> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power (non-negative exponent).
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = GScalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplies by a rational.
    pub fn scale_rational(&self, q: &BigRational) -> Self {
        GScalar { re: &self.re * q, im: &self.im * q }
    }

    /// The value as a rational, if it is real.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_real().then(|| self.re.clone())
    }

    /// Sign of a real value: `-1`, `0` or `1`; `None` for non-real values.
    pub fn real_signum(&self) -> Option<i32> {
        if !self.is_real() {
            return None;
        }
        Some(if self.re.is_zero() {
            0
        } else if self.re.is_positive() {
            1
        } else {
            -1
        })
    }
}

fn format_imag(q: &BigRational) -> String {
    let n = q.numer();
    let d = q.denom();
    let head = if n.is_one() {
        "i".to_string()
    } else if (-n).is_one() {
        "-i".to_string()
    } else {
        format!("{n}i")
    };
    if d.is_one() {
        head
    } else {
        format!("{head}/{d}")
    }
}

impl fmt::Display for GScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", format_rational(&self.re)),
            (true, false) => write!(f, "{}", format_imag(&self.im)),
            (false, false) => {
                let sign = if self.im.is_positive() { "+" } else { "" };
                write!(f, "{}{}{}", format_rational(&self.re), sign, format_imag(&self.im))
            }
        }
    }
}

impl fmt::Debug for GScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses one unsigned term: `n`, `n/d`, `i`, `ni`, `i/d`, `ni/d`.
fn parse_term(t: &str, whole: &str) -> Result<GScalar, ScalarError> {
    let bad = || ScalarError::Parse(whole.to_string());
    if t.is_empty() {
        return Err(bad());
    }
    let (body, den) = match t.split_once('/') {
        Some((b, d)) => (b, Some(d)),
        None => (t, None),
    };
    let den: BigInt = match den {
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            d.parse().map_err(|_| bad())?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(ScalarError::DivisionByZero);
    }
    let (digits, imaginary) = match body.strip_suffix('i') {
        Some(d) => (d, true),
        None => (body, false),
    };
    let num: BigInt = if digits.is_empty() {
        if !imaginary {
            return Err(bad());
        }
        BigInt::one()
    } else {
        if !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        digits.parse().map_err(|_| bad())?
    };
    let q = BigRational::new(num, den);
    Ok(if imaginary { GScalar::imag(q) } else { GScalar::real(q) })
}

impl FromStr for GScalar {
    type Err = ScalarError;

    /// Parses the canonical scalar syntax; also accepts any sum of signed
    /// real/imaginary terms such as `-3/4+i` or `i/2-1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(ScalarError::Parse(s.to_string()));
        }
        let mut acc = GScalar::zero();
        let mut rest = text.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let (negative, after_sign) = match rest.as_bytes()[0] {
                b'+' if !first => (false, &rest[1..]),
                b'-' => (true, &rest[1..]),
                _ if first => (false, rest),
                _ => return Err(ScalarError::Parse(s.to_string())),
            };
            let end = after_sign.find(['+', '-']).unwrap_or(after_sign.len());
            let term = parse_term(&after_sign[..end], s)?;
            acc = if negative { &acc - &term } else { &acc + &term };
            rest = &after_sign[end..];
            first = false;
        }
        Ok(acc)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a GScalar> for &'a GScalar {
            type Output = GScalar;
            fn $method(self, rhs: &'a GScalar) -> GScalar {
                let f: fn(&GScalar, &GScalar) -> GScalar = $body;
                f(self, rhs)
            }
        }
        impl $tr<GScalar> for GScalar {
            type Output = GScalar;
            fn $method(self, rhs: GScalar) -> GScalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a GScalar> for GScalar {
            type Output = GScalar;
            fn $method(self, rhs: &'a GScalar) -> GScalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| GScalar { re: &a.re + &b.re, im: &a.im + &b.im });
forward_binop!(Sub, sub, |a, b| GScalar { re: &a.re - &b.re, im: &a.im - &b.im });
forward_binop!(Mul, mul, |a, b| GScalar {
    re: &a.re * &b.re - &a.im * &b.im,
    im: &a.re * &b.im + &a.im * &b.re,
});

impl Neg for GScalar {
    type Output = GScalar;
    fn neg(self) -> GScalar {
        GScalar { re: -self.re, im: -self.im }
    }
}

impl Neg for &GScalar {
    type Output = GScalar;
    fn neg(self) -> GScalar {
        GScalar { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl AddAssign<&GScalar> for GScalar {
    fn add_assign(&mut self, rhs: &GScalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GScalar> for GScalar {
    fn sub_assign(&mut self, rhs: &GScalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl From<i64> for GScalar {
    fn from(n: i64) -> Self {
        GScalar::from_int(n)
    }
}

impl From<BigRational> for GScalar {
    fn from(q: BigRational) -> Self {
        GScalar::real(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> GScalar {
        t.parse().unwrap()
    }

    #[test]
    fn conjugate_product_is_norm() {
        assert_eq!(s("1+2i") * s("1-2i"), s("5"));
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(GScalar::i() * GScalar::i(), GScalar::from_int(-1));
    }

    #[test]
    fn conjugate_sum_is_real() {
        assert_eq!(s("1/2+i/3") + s("1/2-i/3"), GScalar::one());
    }

    #[test]
    fn canonical_printing() {
        for t in ["0", "3", "-3/4", "i", "-i", "3i/2", "-3i/2", "i/3", "-i/3", "1+2i", "1/2-i/3"] {
            assert_eq!(s(t).to_string(), t, "round trip of {t}");
        }
        assert_eq!(s("2/4").to_string(), "1/2");
        assert_eq!(s("6i/4").to_string(), "3i/2");
        assert_eq!(s("i-1").to_string(), "-1+i");
    }

    #[test]
    fn malformed_scalars_are_rejected() {
        for t in ["", "1//2", "ii", "1/", "x", "1+", "2i3", "1/0"] {
            assert!(t.parse::<GScalar>().is_err(), "{t} should fail");
        }
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(GScalar::one().checked_div(&GScalar::zero()), Err(ScalarError::DivisionByZero));
        assert_eq!(s("1+i").checked_div(&s("1-i")).unwrap(), GScalar::i());
    }

    #[test]
    fn denominators_stay_positive_and_reduced() {
        let q = s("-6/4");
        assert_eq!(q, s("-3/2"));
        assert!(q.re().denom() > &BigInt::zero());
        let r = s("1/3") * s("3/5");
        assert_eq!(r.re().denom(), &BigInt::from(5));
    }
}
