//! Canonical arbitrary-precision rationals.
//!
//! [`Rational`] wraps a reduced `BigRational`: the denominator is always
//! positive, `gcd(|num|, den) = 1`, and zero is `0/1`. Everything in the
//! crate that looks like a scalar is one of these.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
}

/// Parse failure for the `a/b` text form; `pos` is the byte offset of the
/// first offending character.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("malformed rational {input:?} at position {pos}: {reason}")]
pub struct ParseRationalError {
    pub input: String,
    pub pos: usize,
    pub reason: &'static str,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds the canonical form of `num/den`.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, ArithError> {
        let den = den.into();
        if den.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn signum(&self) -> i32 {
        match self.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Naive height `max(|num|, den)`.
    pub fn height(&self) -> BigInt {
        let n = self.numer().abs();
        let d = self.denom().clone();
        n.max(d)
    }

    pub fn recip(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Integer power; negative exponents invert (and panic on zero).
    pub fn pow(&self, exp: i32) -> Self {
        Rational(num_traits::Pow::pow(&self.0, exp))
    }

    /// Exact nonnegative square root, if `self` is the square of a rational.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = exact_root(self.numer(), 2)?;
        let d = exact_root(self.denom(), 2)?;
        Some(Rational(BigRational::new_raw(n, d)))
    }

    /// Exact real `k`-th root. For odd `k` negative inputs have a (negative)
    /// root; for even `k` only the nonnegative root is returned.
    pub fn nth_root(&self, k: u32) -> Option<Self> {
        assert!(k >= 1, "root index must be positive");
        if k.is_multiple_of(2) && self.is_negative() {
            return None;
        }
        let n = exact_root(self.numer(), k)?;
        let d = exact_root(self.denom(), k)?;
        Some(Rational(BigRational::new_raw(n, d)))
    }

    pub fn is_square(&self) -> bool {
        self.sqrt().is_some()
    }

    pub fn is_cube(&self) -> bool {
        self.nth_root(3).is_some()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.numer().clone())
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

/// Exact integer `k`-th root (sign-preserving for odd `k`).
pub(crate) fn exact_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.is_negative() {
        if k.is_multiple_of(2) {
            return None;
        }
        return exact_root(&-n, k).map(|r| -r);
    }
    let r = n.nth_root(k);
    (num_traits::pow(r.clone(), k as usize) == *n).then_some(r)
}

/// Exact integer square root, if `n` is a perfect square.
pub fn integer_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    exact_root(n, 2)
}

pub fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    a.lcm(b)
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl From<&BigInt> for Rational {
    fn from(n: &BigInt) -> Self {
        Rational::from_integer(n.clone())
    }
}

macro_rules! from_prim {
    ($($t:ty),*) => {$(
        impl From<$t> for Rational {
            fn from(n: $t) -> Self {
                Rational::from_integer(BigInt::from(n))
            }
        }
    )*};
}
from_prim!(i32, i64, i128, u32, u64, usize);

/// `q(a, b)` is `a/b`; panics on a zero denominator. Test and table shorthand.
pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(num, den).expect("nonzero denominator")
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |pos, reason| ParseRationalError {
            input: s.to_string(),
            pos,
            reason,
        };
        if s.is_empty() {
            return Err(err(0, "empty input"));
        }
        let (num_part, den_part, slash) = match s.find('/') {
            Some(i) => (&s[..i], Some(&s[i + 1..]), i),
            None => (s, None, s.len()),
        };
        let num = parse_int(num_part, true).map_err(|(p, r)| err(p, r))?;
        let den = match den_part {
            Some(d) => {
                let den = parse_int(d, false).map_err(|(p, r)| err(slash + 1 + p, r))?;
                if den.is_zero() {
                    return Err(err(slash + 1, "zero denominator"));
                }
                den
            }
            None => BigInt::one(),
        };
        Ok(Rational(BigRational::new(num, den)))
    }
}

fn parse_int(s: &str, allow_sign: bool) -> Result<BigInt, (usize, &'static str)> {
    let bytes = s.as_bytes();
    let mut start = 0;
    if allow_sign && matches!(bytes.first(), Some(b'+') | Some(b'-')) {
        start = 1;
    }
    if start == bytes.len() {
        return Err((start, "missing digits"));
    }
    if let Some(i) = bytes[start..].iter().position(|b| !b.is_ascii_digit()) {
        return Err((start + i, "unexpected character"));
    }
    let digits = s.trim_start_matches('+');
    Ok(digits.parse::<BigInt>().expect("validated digits"))
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational(&self.0 $op rhs.0)
            }
        }
    };
}
binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);
binop!(Div, div, /);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |a, b| a + b)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::one(), |a, b| a * b)
    }
}

/// Orders rationals by height, then by value. Used wherever output must be
/// listed "smallest first".
pub fn cmp_by_height(a: &Rational, b: &Rational) -> Ordering {
    a.height().cmp(&b.height()).then_with(|| a.cmp(b))
}

/// All canonical rationals of height at most `bound`, sorted by height then
/// value.
pub fn rationals_up_to_height(bound: u64) -> Vec<Rational> {
    let mut out = Vec::new();
    for den in 1..=bound {
        for num in -(bound as i64)..=(bound as i64) {
            if num.unsigned_abs().gcd(&den) == 1 || (num == 0 && den == 1) {
                out.push(Rational(BigRational::new_raw(num.into(), den.into())));
            }
        }
    }
    out.sort_by(cmp_by_height);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_examples() {
        assert_eq!(Rational::new(6, -4).unwrap().to_string(), "-3/2");
        let z = Rational::new(0, 7).unwrap();
        assert_eq!((z.numer().clone(), z.denom().clone()), (0.into(), 1.into()));
        assert_eq!(Rational::new(-35, -8).unwrap().to_string(), "35/8");
        assert_eq!(Rational::new(1, 0), Err(ArithError::ZeroDenominator));
    }

    #[test]
    fn square_roots() {
        assert_eq!(q(196, 729).sqrt(), Some(q(14, 27)));
        assert_eq!(q(14, 27) * q(14, 27), q(196, 729));
        assert_eq!(Rational::zero().sqrt(), Some(Rational::zero()));
        assert_eq!(q(2, 1).sqrt(), None);
        assert_eq!(q(-4, 1).sqrt(), None);
        assert_eq!(q(4, 3).sqrt(), None);
    }

    #[test]
    fn cube_roots() {
        assert_eq!(q(-8, 27).nth_root(3), Some(q(-2, 3)));
        assert!(!q(2, 1).is_cube());
        assert!(q(1, 1).is_cube());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("-3/2".parse::<Rational>().unwrap(), q(-3, 2));
        assert_eq!("+7".parse::<Rational>().unwrap(), q(7, 1));
        assert_eq!("10/4".parse::<Rational>().unwrap().to_string(), "5/2");
        let e = "3/x".parse::<Rational>().unwrap_err();
        assert_eq!(e.pos, 2);
        let e = "1 /2".parse::<Rational>().unwrap_err();
        assert_eq!(e.pos, 1);
        assert!("1/0".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
        assert!("-".parse::<Rational>().is_err());
    }

    #[test]
    fn height_is_max_of_parts() {
        assert_eq!(q(-7, 5).height(), BigInt::from(7));
        assert_eq!(q(3, 11).height(), BigInt::from(11));
        assert_eq!(Rational::zero().height(), BigInt::from(1));
    }

    #[test]
    fn rationals_by_height() {
        let r = rationals_up_to_height(2);
        let s: Vec<String> = r.iter().map(|x| x.to_string()).collect();
        assert_eq!(s, ["-1", "0", "1", "-2", "-1/2", "1/2", "2"]);
    }
}
