//! Dense univariate polynomials over [`Rational`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::arith::{ParseRationalError, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("malformed polynomial: coefficient {index}: {source}")]
    Parse {
        index: usize,
        #[source]
        source: ParseRationalError,
    },
}

/// `coeffs[i]` is the coefficient of `x^i`; the top stored coefficient is
/// nonzero, and the zero polynomial stores nothing.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn x() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// `x - root`.
    pub fn linear(root: &Rational) -> Self {
        Poly::new(vec![-root, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(Rational::is_one)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lc = self.leading();
        self.scale(&lc.recip().expect("nonzero leading coefficient"))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from(i))
                .collect(),
        )
    }

    /// `f(c x)`.
    pub fn compose_scale(&self, c: &Rational) -> Poly {
        let mut pw = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &pw);
            pw *= c;
        }
        Poly::new(out)
    }

    /// `f(x^k)`.
    pub fn compose_power(&self, k: usize) -> Poly {
        assert!(k >= 1);
        let Some(d) = self.degree() else {
            return Poly::zero();
        };
        let mut out = vec![Rational::zero(); d * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * k] = c.clone();
        }
        Poly::new(out)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division: `self = b*q + r` with `deg r < deg b`.
    pub fn divrem(&self, b: &Poly) -> Result<(Poly, Poly), PolyError> {
        let db = b.degree().ok_or(PolyError::DivisionByZero)?;
        let lc_inv = b.leading().recip().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let Some(da) = self.degree() else {
            return Ok((Poly::zero(), Poly::zero()));
        };
        if da < db {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); da - db + 1];
        for i in (0..=da - db).rev() {
            let c = &rem[i + db] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                rem[i + j] -= &(&c * bj);
            }
            quot[i] = c;
        }
        rem.truncate(db);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Exact quotient when `b` divides `self`.
    pub fn exact_div(&self, b: &Poly) -> Option<Poly> {
        let (qt, r) = self.divrem(b).ok()?;
        r.is_zero().then_some(qt)
    }

    pub fn divides(&self, f: &Poly) -> bool {
        f.exact_div(self).is_some()
    }

    /// Monic gcd by Euclid over Q. `gcd(0, 0)` is `0`.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let (_, r) = x.divrem(&y).expect("nonzero divisor");
            x = y;
            y = r.monic();
        }
        x.monic()
    }

    /// Number of sign changes in the nonzero coefficients of `f(x)`, or of
    /// `f(-x)` when `negated` is set.
    pub fn sign_variations(&self, negated: bool) -> usize {
        let signs = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let s = c.signum();
                if negated && i % 2 == 1 {
                    -s
                } else {
                    s
                }
            });
        let mut count = 0;
        let mut prev = 0;
        for s in signs {
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    }

    /// Canonical text form: ascending coefficients `c0,c1,...,cn`.
    pub fn to_coeff_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(Rational::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse_coeffs(s: &str) -> Result<Poly, PolyError> {
        let coeffs = s
            .split(',')
            .enumerate()
            .map(|(index, c)| {
                c.parse::<Rational>()
                    .map_err(|source| PolyError::Parse { index, source })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(coeffs))
    }

    /// Deterministic total order: degree first, then coefficients from the
    /// constant term upward.
    pub fn canonical_cmp(&self, other: &Poly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

/// Sign variations of `f` (or `f(-x)`), the Descartes bound on positive
/// (negative) real roots.
pub fn descartes_sign_variations(f: &Poly, at_negated: bool) -> usize {
    f.sign_variations(at_negated)
}

pub fn product<'a>(factors: impl IntoIterator<Item = &'a Poly>) -> Poly {
    factors.into_iter().fold(Poly::one(), |acc, f| &acc * f)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() || i == 0 {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl FromStr for Poly {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Poly::parse_coeffs(s)
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_coeff_string())
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                self.$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(p(&[-1, 1]) * p(&[-2, 1]), p(&[2, -3, 1]));
        assert_eq!(p(&[2, -3, 1]) * p(&[7, 3, 1]), p(&[14, -15, 0, 0, 1]));
        let f = p(&[-3, 1]) * p(&[20, 1, 1]) * p(&[-13, 2, 1]);
        assert_eq!(f, p(&[780, -341, 0, 0, 0, 1]));
    }

    #[test]
    fn division_examples() {
        let a = p(&[-1, 0, 0, -3, 0, 0, 0, 0, 1]);
        let b = p(&[1, 1, 0, 1]);
        let (qt, r) = a.divrem(&b).unwrap();
        assert_eq!(qt, p(&[-1, 1, -1, -1, 0, 1]));
        assert!(r.is_zero());

        let (qt, r) = p(&[0, 0, 1]).divrem(&p(&[0, 1])).unwrap();
        assert_eq!((qt, r), (p(&[0, 1]), Poly::zero()));

        let a = p(&[8, 12, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        let b = p(&[2, 0, -2, 2, -2, 1]);
        assert!(a.divrem(&b).unwrap().1.is_zero());

        assert_eq!(a.divrem(&Poly::zero()), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(Poly::gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])), p(&[-1, 1]));
        // (x-3)^2 (x+1) = x^3 - 5x^2 + 3x + 9
        let f = p(&[9, 3, -5, 1]);
        assert_eq!(f, p(&[-3, 1]) * p(&[-3, 1]) * p(&[1, 1]));
        assert_eq!(Poly::gcd(&f, &f.derivative()), p(&[-3, 1]));
        assert_eq!(Poly::gcd(&p(&[1, 0, 1]), &p(&[0, 1, 1])), Poly::one());
    }

    #[test]
    fn evaluation_examples() {
        let f = p(&[780, -341, 0, 0, 0, 1]);
        assert_eq!(f.eval(&q(3, 1)), Rational::zero());
        assert_eq!(f.eval(&Rational::zero()), q(780, 1));
        let g = p(&[-3, 12, -6, -4, 9, -8, 4]);
        assert_eq!(g.eval(&q(1, 1)), q(4, 1));
    }

    #[test]
    fn descartes_examples() {
        // x^6 + 3x + 5: no variations either way
        assert_eq!(p(&[5, 3, 0, 0, 0, 0, 1]).sign_variations(false), 0);
        assert_eq!(p(&[-1, 0, 1]).sign_variations(false), 1);
        assert_eq!(p(&[14, -15, 0, 0, 1]).sign_variations(false), 2);
        assert_eq!(p(&[14, -15, 0, 0, 1]).sign_variations(true), 0);
    }

    #[test]
    fn text_forms() {
        let f = p(&[780, -341, 0, 0, 0, 1]);
        assert_eq!(f.to_string(), "x^5 - 341x + 780");
        assert_eq!(f.to_coeff_string(), "780,-341,0,0,0,1");
        assert_eq!("780,-341,0,0,0,1".parse::<Poly>().unwrap(), f);
        let g = Poly::new(vec![q(-1, 2), q(3, 4), q(1, 1)]);
        assert_eq!(g.to_string(), "x^2 + (3/4)x - 1/2");
        let e = "1,2/x".parse::<Poly>().unwrap_err();
        assert!(matches!(e, PolyError::Parse { index: 1, .. }));
    }

    #[test]
    fn compositions() {
        let f = p(&[1, 1, 1]);
        assert_eq!(f.compose_power(3), p(&[1, 0, 0, 1, 0, 0, 1]));
        assert_eq!(f.compose_scale(&q(2, 1)), p(&[1, 2, 4]));
    }
}
