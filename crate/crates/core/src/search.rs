//! Bounded-height searches for rational points on auxiliary curves.
//!
//! Three shapes are covered: `y^2 = f(t)` over canonical rationals `t`,
//! `Y^2 = F(X, Z)` for a binary form over coprime `(X, Z)`, and two-parameter
//! square conditions in weighted coordinates `(u, v)` where a third parameter
//! `w` is then solved for exactly.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{cmp_by_height, q, rationals_up_to_height, Rational};
use crate::families::{self, FamilyId};
use crate::poly::Poly;
use crate::trinomial::Trinomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("unknown curve preset {0:?}")]
    UnknownPreset(String),
    #[error("height bound must be at least 1")]
    ZeroHeight,
    #[error("G_n requires odd n >= 5, got {0}")]
    BadExponent(u32),
}

/// How a square condition is parametrized.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CurveShape {
    /// `y^2 = f(t)`, `f` in ascending coefficients.
    Affine { f: Poly },
    /// `Y^2 = sum c_i X^(d-i) Z^i`.
    Homogeneous { coeffs: Vec<Rational> },
    /// `value(u, v) = (L w + M)^2` with `u` of weight 1 and `v` of weight 2.
    TwoParameter { family: FamilyId },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareConditionCurve {
    pub key: String,
    pub reference: String,
    pub description: String,
    /// What the searched parameter stands for, e.g. `X/Z^2`.
    pub parameter: String,
    pub shape: CurveShape,
    /// Parameter tuples stated in the source, in the searched coordinates.
    pub claimed_points: Vec<Vec<Rational>>,
    /// Trinomials stated to arise from the curve, up to scaling.
    pub claimed_trinomials: Vec<Trinomial>,
    /// Whether the claimed set is asserted complete or only believed.
    pub claim_is_belief: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoundPoint {
    pub curve: String,
    pub params: Vec<Rational>,
    pub sqrt: Rational,
    pub height: u64,
    /// Exact solutions for the last parameter (two-parameter curves only).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub completions: Vec<Rational>,
}

fn ints(c: &[i64]) -> Vec<Rational> {
    c.iter().map(|&k| Rational::from(k)).collect()
}

fn pts(p: &[&[(i64, i64)]]) -> Vec<Vec<Rational>> {
    p.iter()
        .map(|t| t.iter().map(|&(a, b)| q(a, b)).collect())
        .collect()
}

fn tri(n: u32, m: u32, a: i64, b: i64) -> Trinomial {
    Trinomial::from_ints(n, m, a, b).expect("admissible")
}

fn tri_s(n: u32, m: u32, a: &str, b: &str) -> Trinomial {
    Trinomial::new(n, m, a.parse().expect("literal"), b.parse().expect("literal"))
        .expect("admissible")
}

/// Ascending polynomial from coefficients listed from the leading term down.
fn desc(c: &[i64]) -> Poly {
    let mut v = c.to_vec();
    v.reverse();
    Poly::from_ints(&v)
}

/// The preset registry.
pub fn curve_presets() -> Vec<SquareConditionCurve> {
    let affine = |key: &str, reference: &str, description: &str, parameter: &str, f: Poly| {
        SquareConditionCurve {
            key: key.into(),
            reference: reference.into(),
            description: description.into(),
            parameter: parameter.into(),
            shape: CurveShape::Affine { f },
            claimed_points: vec![],
            claimed_trinomials: vec![],
            claim_is_belief: false,
        }
    };
    let two = |key: &str, reference: &str, description: &str, family| SquareConditionCurve {
        key: key.into(),
        reference: reference.into(),
        description: description.into(),
        parameter: "(u, v) weighted, w solved".into(),
        shape: CurveShape::TwoParameter { family },
        claimed_points: vec![],
        claimed_trinomials: vec![],
        claim_is_belief: false,
    };
    vec![
        SquareConditionCurve {
            key: "C_THM42".into(),
            reference: "4.2".into(),
            description: "Y^2 = X^6 - 3X^4Z^2 + 51X^2Z^4 + 15Z^6".into(),
            parameter: "(X : Z)".into(),
            shape: CurveShape::Homogeneous {
                coeffs: ints(&[1, 0, -3, 0, 51, 0, 15]),
            },
            claimed_points: pts(&[&[(1, 1), (0, 1)], &[(1, 1), (1, 1)], &[(-1, 1), (1, 1)]]),
            claimed_trinomials: vec![],
            claim_is_belief: false,
        },
        SquareConditionCurve {
            claimed_points: pts(&[&[(-1, 1)], &[(1, 1)], &[(1, 3)], &[(7, 5)]]),
            claimed_trinomials: vec![],
            claim_is_belief: true,
            ..affine(
                "C_THM51",
                "5.1",
                "y^2 = 4v^6 - 8v^5 + 9v^4 - 4v^3 - 6v^2 + 12v - 3",
                "v",
                desc(&[4, -8, 9, -4, -6, 12, -3]),
            )
        },
        SquareConditionCurve {
            ..affine(
                "C_EQ4",
                "5.4",
                "y^2 = (v^2 + 2v - 1)(4v^3 - 3v^2 + 2v - 1)",
                "v",
                &desc(&[1, 2, -1]) * &desc(&[4, -3, 2, -1]),
            )
        },
        SquareConditionCurve {
            claimed_trinomials: vec![tri(9, 2, 32, -64), tri(9, 2, 81, -54), tri(9, 2, 729, -1458)],
            ..two(
                "C_EQ7",
                "5.5",
                "u^10 - 4u^8v + 10u^6v^2 - 12u^4v^3 - 3u^2v^4 + 12v^5 = (6(u^2 - v)w + u^5 - 8u^3v + 9uv^2)^2",
                FamilyId::N9M2_DIV,
            )
        },
        SquareConditionCurve {
            claimed_points: pts(&[&[(0, 1), (3, 1), (3, 1)], &[(1, 1), (1, 1), (2, 3)], &[(1, 1), (2, 1), (17, 14)]]),
            claimed_trinomials: vec![
                tri(10, 1, 297, -243),
                tri(10, 1, 8019, 13122),
                tri_s(10, 1, "261312546880", "2485545010816"),
            ],
            claim_is_belief: true,
            ..two(
                "C_EQ8",
                "5.6",
                "3u^10 - 15u^8v + 25u^6v^2 - 15u^4v^3 + 3v^5 = (3(2u^2 - v)w + 3u^5 - 10u^3v + 6uv^2)^2",
                FamilyId::D10M1_DIV,
            )
        },
        SquareConditionCurve {
            claimed_points: pts(&[&[(0, 1)], &[(1, 1)], &[(-3, 1)], &[(3, 1)], &[(-12, 1)]]),
            ..affine(
                "C_EQ11",
                "6.3",
                "y^2 = U(U^2 + 3p^4)(U^2 + 12Up^2 - 9p^4)",
                "U/p^2",
                &(&desc(&[1, 0]) * &desc(&[1, 0, 3])) * &desc(&[1, 12, -9]),
            )
        },
        SquareConditionCurve {
            claimed_points: pts(&[&[(-18, 1)], &[(6, 1)], &[(0, 1)], &[(-2, 1)], &[(1, 1)], &[(36, 1)]]),
            ..affine(
                "C_THM65",
                "6.5",
                "Y^2 = X(X^4 + 24X^3Z^2 + 24X^2Z^4 + 864XZ^6 + 1296Z^8)",
                "X/Z^2",
                &desc(&[1, 0]) * &desc(&[1, 24, 24, 864, 1296]),
            )
        },
        SquareConditionCurve {
            claimed_points: pts(&[&[(0, 1)], &[(4, 1)], &[(-12, 1)]]),
            ..affine(
                "C_THM66",
                "6.6",
                "Y^2 = X^5 + 9X^4Z^2 - 48X^3Z^4 + 864X^2Z^6 + 2304Z^10",
                "X/Z^2",
                desc(&[1, 9, -48, 864, 0, 2304]),
            )
        },
        SquareConditionCurve {
            claimed_trinomials: vec![tri(12, 3, 128, 256)],
            ..affine(
                "C_EQ13A",
                "6.4",
                "y^2 = 3(8v^3 + 3v^2u^2 - 12vu^4 + 4u^6)",
                "v/u^2",
                desc(&[24, 9, -36, 12]),
            )
        },
        SquareConditionCurve {
            claimed_points: pts(&[&[(0, 1)], &[(-1, 2)]]),
            ..affine(
                "C_THM61",
                "6.1",
                "y^2 = 6u^3 + 7u^2 + 4u + 1",
                "u",
                desc(&[6, 7, 4, 1]),
            )
        },
        SquareConditionCurve {
            claimed_trinomials: vec![tri(10, 2, 11, -12), tri(10, 2, -2005, -9996)],
            ..affine(
                "C_THM62W",
                "6.2",
                "y^2 = (2q - p^2)(2q^2 + 4p^2q - 3p^4)",
                "q/p^2",
                &desc(&[2, -1]) * &desc(&[2, 4, -3]),
            )
        },
    ]
}

pub fn preset(key: &str) -> Result<SquareConditionCurve, SearchError> {
    curve_presets()
        .into_iter()
        .find(|c| c.key.eq_ignore_ascii_case(key))
        .ok_or_else(|| SearchError::UnknownPreset(key.to_string()))
}

impl FromStr for SquareConditionCurve {
    type Err = SearchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        preset(s)
    }
}

impl fmt::Display for SquareConditionCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.key, self.description)
    }
}

impl SquareConditionCurve {
    /// Value of the square condition at `params` (`[t]`, `[X, Z]` or `[u, v]`).
    pub fn value(&self, params: &[Rational]) -> Rational {
        match &self.shape {
            CurveShape::Affine { f } => f.eval(&params[0]),
            CurveShape::Homogeneous { coeffs } => binary_form(coeffs, &params[0], &params[1]),
            CurveShape::TwoParameter { family } => two_parameter_value(*family, &params[0], &params[1]),
        }
    }

    /// Whether a found point re-substitutes exactly, including its completions.
    pub fn check_point(&self, p: &FoundPoint) -> bool {
        if p.sqrt.is_negative() || &p.sqrt * &p.sqrt != self.value(&p.params) {
            return false;
        }
        if let CurveShape::TwoParameter { family } = self.shape {
            return p.completions.iter().all(|w| {
                let full = [p.params[0].clone(), p.params[1].clone(), w.clone()];
                families::constraint_residual(family, &full).is_some_and(|d| d.is_zero())
            });
        }
        true
    }
}

fn binary_form(c: &[Rational], x: &Rational, z: &Rational) -> Rational {
    let d = c.len() - 1;
    c.iter()
        .enumerate()
        .map(|(i, ci)| &(ci * &x.pow((d - i) as i32)) * &z.pow(i as i32))
        .sum()
}

fn two_parameter_value(family: FamilyId, u: &Rational, v: &Rational) -> Rational {
    match family {
        FamilyId::N9M2_DIV => families::eq7_poly(u, v),
        FamilyId::D10M1_DIV => families::eq8_poly(u, v),
        other => unreachable!("{other} has no two-parameter square condition"),
    }
}

/// Every parameter of height at most `height` where the condition is a
/// rational square, with its nonnegative square root.
///
/// Affine curves scan all canonical rationals; binary forms scan coprime
/// `(X, Z)` with `Z > 0` plus `(1, 0)`; two-parameter curves scan integer
/// `(u, v)`, `u >= 0`, with no prime `p` dividing `u` while `p^2` divides `v`.
/// The bound applies to each coordinate separately.
pub fn search_square_values(
    curve: &SquareConditionCurve,
    height: u64,
) -> Result<Vec<FoundPoint>, SearchError> {
    if height == 0 {
        return Err(SearchError::ZeroHeight);
    }
    let candidates: Vec<Vec<Rational>> = match &curve.shape {
        CurveShape::Affine { .. } => rationals_up_to_height(height)
            .into_iter()
            .map(|t| vec![t])
            .collect(),
        CurveShape::Homogeneous { .. } => coprime_pairs(height),
        CurveShape::TwoParameter { .. } => weighted_pairs(height),
    };
    let mut found: Vec<FoundPoint> = candidates
        .into_par_iter()
        .filter_map(|params| {
            let s = curve.value(&params).sqrt()?;
            let completions = match curve.shape {
                CurveShape::TwoParameter { family } => {
                    let mut w = families::solve_last_parameter(family, &params, &s);
                    // (0, v, w) and (0, v, -w) are related by x -> -x
                    if params[0].is_zero() {
                        w.retain(|w| !w.is_negative());
                    }
                    w
                }
                _ => vec![],
            };
            let height = params
                .iter()
                .map(|p| p.height().to_u64().expect("bounded height"))
                .max()
                .unwrap_or(0);
            Some(FoundPoint {
                curve: curve.key.clone(),
                params,
                sqrt: s,
                height,
                completions,
            })
        })
        .collect();
    found.sort_by(cmp_found);
    Ok(found)
}

fn cmp_found(a: &FoundPoint, b: &FoundPoint) -> Ordering {
    a.height.cmp(&b.height).then_with(|| {
        a.params
            .iter()
            .zip(&b.params)
            .map(|(x, y)| cmp_by_height(x, y))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    })
}

fn coprime_pairs(h: u64) -> Vec<Vec<Rational>> {
    let h = h as i64;
    let mut out = vec![vec![Rational::from(1), Rational::from(0)]];
    for z in 1..=h {
        for x in -h..=h {
            if x.gcd(&z) == 1 {
                out.push(vec![Rational::from(x), Rational::from(z)]);
            }
        }
    }
    out
}

fn weighted_pairs(h: u64) -> Vec<Vec<Rational>> {
    let h = h as i64;
    let mut out = Vec::new();
    for u in 0..=h {
        for v in -h..=h {
            if (u, v) != (0, 0) && weighted_primitive(u, v) {
                out.push(vec![Rational::from(u), Rational::from(v)]);
            }
        }
    }
    out
}

/// No prime `p` with `p | u` and `p^2 | v`.
fn weighted_primitive(u: i64, v: i64) -> bool {
    let g = u.gcd(&v);
    let mut n = g;
    let mut p = 2;
    while p * p <= n || (n > 1 && p <= n) {
        if n % p == 0 {
            if v % (p * p) == 0 {
                return false;
            }
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    // u = 0 leaves only v, where any square factor can be scaled away
    !(u == 0 && v.unsigned_abs() != 1 && is_divisible_by_square(v))
}

fn is_divisible_by_square(v: i64) -> bool {
    let v = v.unsigned_abs();
    (2..).take_while(|p| p * p <= v).any(|p| v.is_multiple_of(p * p))
}

/// Trinomial attached to a found point of a two-parameter curve and one of
/// its completions.
pub fn point_trinomial(family: FamilyId, u: &Rational, v: &Rational, w: &Rational) -> Option<Trinomial> {
    let s = families::generate_one(family, &[u.clone(), v.clone(), w.clone()]).ok()?;
    s.trinomial.is_admissible().then_some(s.trinomial)
}

/// Which ternary equation to search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TernaryForm {
    /// `(p+q)(q+r)(r+p)(p+q+r) - (pq+qr+rp)^2`.
    Cor33,
    /// `((q-r)p^n + (r-p)q^n + (p-q)r^n) / ((p-q)(q-r)(r-p))`.
    G(u32),
}

impl TernaryForm {
    pub fn eval(&self, p: i64, q: i64, r: i64) -> BigInt {
        let (p, q, r) = (BigInt::from(p), BigInt::from(q), BigInt::from(r));
        match self {
            TernaryForm::Cor33 => {
                let s = &p * &q + &q * &r + &r * &p;
                (&p + &q) * (&q + &r) * (&r + &p) * (&p + &q + &r) - &s * &s
            }
            TernaryForm::G(n) => {
                let n = *n as usize;
                let pw = |x: &BigInt| num_traits::pow(x.clone(), n);
                let num = (&q - &r) * pw(&p) + (&r - &p) * pw(&q) + (&p - &q) * pw(&r);
                let den = (&p - &q) * (&q - &r) * (&r - &p);
                let (g, rem) = num.div_rem(&den);
                debug_assert!(rem.is_zero());
                g
            }
        }
    }
}

/// Pairwise distinct integer triples with entries in `[-h, h]` where the form
/// vanishes, in lexicographic order.
pub fn search_zero_locus_ternary(form: TernaryForm, h: u64) -> Result<Vec<(i64, i64, i64)>, SearchError> {
    if h == 0 {
        return Err(SearchError::ZeroHeight);
    }
    if let TernaryForm::G(n) = form {
        if n < 5 || n % 2 == 0 {
            return Err(SearchError::BadExponent(n));
        }
    }
    let h = h as i64;
    let mut out: Vec<(i64, i64, i64)> = (-h..=h)
        .into_par_iter()
        .flat_map_iter(|p| {
            (-h..=h).flat_map(move |q| {
                (-h..=h).filter_map(move |r| {
                    let distinct = p != q && q != r && r != p;
                    (distinct && form.eval(p, q, r).is_zero()).then_some((p, q, r))
                })
            })
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Point sets on a binary form that is even in `X`, merged under `X -> -X`.
pub fn point_classes(points: &[FoundPoint]) -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<Rational>> = points
        .iter()
        .map(|p| p.params.iter().map(|c| c.abs()).collect())
        .collect();
    out.sort_by(|a, b| a.iter().zip(b).map(|(x, y)| cmp_by_height(x, y)).find(|o| o.is_ne()).unwrap_or(Ordering::Equal));
    out.dedup();
    out
}

/// Parameter tuples of the found points; on two-parameter curves each
/// completion `w` is appended as a separate tuple.
pub fn found_parameters(points: &[FoundPoint]) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    for p in points {
        if p.completions.is_empty() {
            out.push(p.params.clone());
        }
        for w in &p.completions {
            let mut v = p.params.clone();
            v.push(w.clone());
            out.push(v);
        }
    }
    out
}

/// Comparison of a search against a preset's claimed points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimComparison {
    pub curve: String,
    pub height: u64,
    pub found: Vec<Vec<Rational>>,
    pub claimed: Vec<Vec<Rational>>,
    pub missing: Vec<Vec<Rational>>,
    pub extra: Vec<Vec<Rational>>,
    /// Found set equals the claimed set within the height bound.
    pub matches_up_to_height: bool,
}

/// Compares found points (for two-parameter curves, expanded with each
/// completion) against the claimed set, restricted to claimed points within
/// the bound.
pub fn compare_with_claims(curve: &SquareConditionCurve, found: &[FoundPoint], height: u64) -> ClaimComparison {
    let got = found_parameters(found);
    let within = |pt: &Vec<Rational>| {
        let coords = match curve.shape {
            CurveShape::TwoParameter { .. } => &pt[..2],
            _ => &pt[..],
        };
        coords.iter().all(|c| c.height() <= BigInt::from(height))
    };
    let claimed: Vec<Vec<Rational>> = curve.claimed_points.iter().filter(|p| within(p)).cloned().collect();
    let missing: Vec<Vec<Rational>> = claimed.iter().filter(|c| !got.contains(c)).cloned().collect();
    let extra: Vec<Vec<Rational>> = match curve.shape {
        // only the w != 0 completions are listed for the degree-10 condition
        CurveShape::TwoParameter { .. } => got
            .iter()
            .filter(|g| !claimed.contains(g) && g.last().is_some_and(|w| !w.is_zero()))
            .cloned()
            .collect(),
        _ => got.iter().filter(|g| !claimed.contains(g)).cloned().collect(),
    };
    ClaimComparison {
        curve: curve.key.clone(),
        height,
        matches_up_to_height: missing.is_empty() && extra.is_empty(),
        found: got,
        claimed,
        missing,
        extra,
    }
}
