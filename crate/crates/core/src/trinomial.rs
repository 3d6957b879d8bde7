//! Trinomials `x^n + A x^m + B`, scaling equivalence and reducibility type.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{rationals_up_to_height, ParseRationalError, Rational};
use crate::factor::{factor_over_q, rational_roots, FactorError, Factorization};
use crate::poly::Poly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TrinomialError {
    #[error("trinomial needs n >= 2 and 1 <= m < n, got n = {n}, m = {m}")]
    BadExponents { n: u32, m: u32 },
    #[error("trinomial coefficients must satisfy AB != 0")]
    ZeroCoefficient,
    #[error("scaling factor must be nonzero")]
    ZeroScale,
    #[error("expected \"n m A B\", got {0} fields")]
    FieldCount(usize),
    #[error("field {field}: invalid exponent {text:?}")]
    Exponent { field: usize, text: String },
    #[error("field {field}: {source}")]
    Coefficient {
        field: usize,
        #[source]
        source: ParseRationalError,
    },
}

/// The monic trinomial `x^n + A x^m + B`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Trinomial {
    pub n: u32,
    pub m: u32,
    #[serde(rename = "A")]
    pub a: Rational,
    #[serde(rename = "B")]
    pub b: Rational,
}

/// Nondecreasing degrees of the irreducible factors, with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ReducibilityType {
    pub degrees: Vec<usize>,
}

impl ReducibilityType {
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable();
        ReducibilityType { degrees }
    }

    pub fn linear_count(&self) -> usize {
        self.degrees.iter().filter(|&&d| d == 1).count()
    }

    pub fn is_irreducible(&self) -> bool {
        self.degrees.len() == 1
    }
}

impl fmt::Display for ReducibilityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.degrees.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl From<&[usize]> for ReducibilityType {
    fn from(d: &[usize]) -> Self {
        ReducibilityType::new(d.to_vec())
    }
}

impl Trinomial {
    pub fn new(n: u32, m: u32, a: Rational, b: Rational) -> Result<Self, TrinomialError> {
        if n < 2 || m < 1 || m >= n {
            return Err(TrinomialError::BadExponents { n, m });
        }
        if a.is_zero() || b.is_zero() {
            return Err(TrinomialError::ZeroCoefficient);
        }
        Ok(Trinomial { n, m, a, b })
    }

    /// Like [`Trinomial::new`] but allows `A = 0` or `B = 0`. Family
    /// generators use this for excluded parameter values.
    pub(crate) fn new_unchecked(n: u32, m: u32, a: Rational, b: Rational) -> Self {
        debug_assert!(n >= 2 && m >= 1 && m < n);
        Trinomial { n, m, a, b }
    }

    pub fn from_ints(n: u32, m: u32, a: i64, b: i64) -> Result<Self, TrinomialError> {
        Trinomial::new(n, m, a.into(), b.into())
    }

    pub fn is_admissible(&self) -> bool {
        !self.a.is_zero() && !self.b.is_zero()
    }

    pub fn poly(&self) -> Poly {
        let mut c = vec![Rational::zero(); self.n as usize + 1];
        c[0] = self.b.clone();
        c[self.m as usize] += &self.a;
        c[self.n as usize] = Rational::one();
        Poly::new(c)
    }

    /// `(n, m, A λ^(n-m), B λ^n)`, whose roots are `λ` times those of `self`.
    pub fn scale(&self, lambda: &Rational) -> Result<Trinomial, TrinomialError> {
        if lambda.is_zero() {
            return Err(TrinomialError::ZeroScale);
        }
        Ok(Trinomial {
            n: self.n,
            m: self.m,
            a: &self.a * &lambda.pow((self.n - self.m) as i32),
            b: &self.b * &lambda.pow(self.n as i32),
        })
    }

    pub fn classify(&self) -> Result<(ReducibilityType, Factorization), FactorError> {
        let fac = factor_over_q(&self.poly())?;
        Ok((ReducibilityType::new(fac.degrees()), fac))
    }

    pub fn reducibility_type(&self) -> Result<ReducibilityType, FactorError> {
        Ok(self.classify()?.0)
    }

    /// Scales a nonzero rational root `ρ` to 1. Returns the scaled trinomial
    /// and `ρ`; the scaled trinomial is `self.scale(1/ρ)`. The root of least
    /// height is used, ties broken by value.
    pub fn normalize_to_unit_root(&self) -> Option<(Trinomial, Rational)> {
        let rho = rational_roots(&self.poly())
            .into_iter()
            .map(|(r, _)| r)
            .filter(|r| !r.is_zero())
            .min_by(crate::arith::cmp_by_height)?;
        let scaled = self.scale(&rho.recip().ok()?).ok()?;
        Some((scaled, rho))
    }

    /// Integer-clearing scale: `λ = d` for the least positive integer `d`
    /// making both coefficients integral (trial division up to 10^6; a
    /// larger cofactor is treated as prime, which still clears denominators).
    pub fn integer_scaling(&self) -> (Trinomial, Rational) {
        let mut d = BigInt::from(1);
        for (c, e) in [(&self.a, self.n - self.m), (&self.b, self.n)] {
            for (p, k) in small_factorization(c.denom()) {
                let need = k.div_ceil(e);
                let have = multiplicity(&d, &p);
                if need > have {
                    d *= num_traits::pow(p.clone(), (need - have) as usize);
                }
            }
        }
        let lambda = Rational::from(d);
        let scaled = self.scale(&lambda).expect("nonzero");
        (scaled, lambda)
    }

    /// `λ` with `self.scale(λ) == other`, if any.
    pub fn equivalent_up_to_scaling(&self, other: &Trinomial) -> Option<Rational> {
        if self.n != other.n || self.m != other.m {
            return None;
        }
        if self.a.is_zero() != other.a.is_zero() || self.b.is_zero() != other.b.is_zero() {
            return None;
        }
        if self.a.is_zero() && self.b.is_zero() {
            return Some(Rational::one());
        }
        let n = self.n as i64;
        let d = (self.n - self.m) as i64;
        // Each nonzero coefficient pins a power of λ; combine via Bézout.
        let mut pins: Vec<(i64, Rational)> = Vec::new();
        if !self.a.is_zero() {
            pins.push((d, &other.a / &self.a));
        }
        if !self.b.is_zero() {
            pins.push((n, &other.b / &self.b));
        }
        let (g, val) = if pins.len() == 2 {
            let e = d.extended_gcd(&n);
            let v = &pins[0].1.pow(e.x as i32) * &pins[1].1.pow(e.y as i32);
            (e.gcd, v)
        } else {
            pins[0].clone()
        };
        let root = val.nth_root(g as u32)?;
        [root.clone(), -root]
            .into_iter()
            .find(|l| !l.is_zero() && self.scale(l).ok().as_ref() == Some(other))
    }

    /// `"n m A B"`.
    pub fn to_text(&self) -> String {
        format!("{} {} {} {}", self.n, self.m, self.a, self.b)
    }
}

fn small_factorization(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut out = Vec::new();
    let mut n = n.abs();
    let mut p = BigInt::from(2);
    let cap = BigInt::from(1_000_000);
    while &p * &p <= n && p <= cap {
        let mut k = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            k += 1;
        }
        if k > 0 {
            out.push((p.clone(), k));
        }
        p += 1;
    }
    if n > BigInt::from(1) {
        out.push((n, 1));
    }
    out
}

fn multiplicity(n: &BigInt, p: &BigInt) -> u32 {
    let mut n = n.clone();
    let mut k = 0;
    while !n.is_zero() && (&n % p).is_zero() {
        n /= p;
        k += 1;
    }
    k
}

impl fmt::Display for Trinomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly())
    }
}

impl fmt::Debug for Trinomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Trinomial({})", self.to_text())
    }
}

impl FromStr for Trinomial {
    type Err = TrinomialError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fields: Vec<&str> = s.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(TrinomialError::FieldCount(fields.len()));
        }
        let exp = |i: usize| -> Result<u32, TrinomialError> {
            fields[i].parse().map_err(|_| TrinomialError::Exponent {
                field: i,
                text: fields[i].to_string(),
            })
        };
        let coef = |i: usize| -> Result<Rational, TrinomialError> {
            fields[i]
                .parse()
                .map_err(|source| TrinomialError::Coefficient { field: i, source })
        };
        Trinomial::new(exp(0)?, exp(1)?, coef(2)?, coef(3)?)
    }
}

/// A trinomial found by [`scan_with_rational_root`] and its type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanHit {
    pub trinomial: Trinomial,
    #[serde(rename = "type")]
    pub rtype: ReducibilityType,
}

const FILTER_PRIMES: [u64; 10] = [5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Every `x^n + A x^m + B` with `A, B` nonzero of height at most `height`
/// that has a rational root, with its reducibility type, in scan order.
///
/// A rational root of a monic polynomial whose coefficients are integral at
/// `p` is itself integral at `p`, so it reduces to a root mod `p`. Pairs
/// without a root modulo some small prime are discarded before exact work.
pub fn scan_with_rational_root(n: u32, m: u32, height: u64) -> Vec<ScanHit> {
    let values: Vec<(i64, i64, Rational)> = rationals_up_to_height(height)
        .into_iter()
        .filter(|r| !r.is_zero())
        .map(|r| {
            let num = r.numer().to_i64().expect("small height");
            let den = r.denom().to_i64().expect("small height");
            (num, den, r)
        })
        .collect();
    let tables: Vec<(u64, Vec<(u64, u64)>)> = FILTER_PRIMES
        .iter()
        .map(|&p| {
            let t = (0..p)
                .map(|x| (pow_mod(x, n as u64, p), pow_mod(x, m as u64, p)))
                .collect();
            (p, t)
        })
        .collect();
    values
        .par_iter()
        .flat_map_iter(|(an, ad, a)| {
            let tables = &tables;
            values.iter().filter_map(move |(bn, bd, b)| {
                for (p, table) in tables {
                    let p = *p;
                    let (Some(ar), Some(br)) = (reduce(*an, *ad, p), reduce(*bn, *bd, p)) else {
                        continue;
                    };
                    if !table.iter().any(|&(xn, xm)| (xn + ar * xm % p + br) % p == 0) {
                        return None;
                    }
                }
                let t = Trinomial::new(n, m, a.clone(), b.clone()).expect("nonzero");
                if rational_roots(&t.poly()).is_empty() {
                    return None;
                }
                let rtype = t.reducibility_type().expect("degree within range");
                Some(ScanHit { trinomial: t, rtype })
            })
        })
        .collect()
}

/// Every reducible `x^n + A x^m + B` with `A, B` nonzero of height at most
/// `height`, with no pre-filter; each pair is factored.
pub fn scan_reducible(n: u32, m: u32, height: u64) -> Vec<ScanHit> {
    let values: Vec<Rational> = rationals_up_to_height(height)
        .into_iter()
        .filter(|r| !r.is_zero())
        .collect();
    values
        .par_iter()
        .flat_map_iter(|a| {
            values.iter().filter_map(move |b| {
                let t = Trinomial::new(n, m, a.clone(), b.clone()).expect("nonzero");
                let rtype = t.reducibility_type().expect("degree within range");
                (!rtype.is_irreducible()).then_some(ScanHit { trinomial: t, rtype })
            })
        })
        .collect()
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn reduce(num: i64, den: i64, p: u64) -> Option<u64> {
    let pi = p as i64;
    let d = den.rem_euclid(pi);
    if d == 0 {
        return None;
    }
    let inv = pow_mod(d as u64, p - 2, p);
    Some(num.rem_euclid(pi) as u64 * inv % p)
}
