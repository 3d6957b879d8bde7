//! Elliptic curves in long Weierstrass form over Q: group law, integral
//! short models, and Nagell–Lutz torsion enumeration.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::Rational;
use crate::factor::rational_roots;
use crate::poly::Poly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EllipticError {
    #[error("singular Weierstrass equation (discriminant 0)")]
    Singular,
    #[error("point {0} is not on the curve")]
    NotOnCurve(Box<EcPoint>),
    #[error("unknown curve {0:?}")]
    UnknownCurve(String),
}

/// `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeierstrassCurve {
    pub a1: Rational,
    pub a2: Rational,
    pub a3: Rational,
    pub a4: Rational,
    pub a6: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EcPoint {
    Infinity,
    Affine { x: Rational, y: Rational },
}

impl EcPoint {
    pub fn affine(x: Rational, y: Rational) -> Self {
        EcPoint::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, EcPoint::Infinity)
    }

    pub fn is_integral(&self) -> bool {
        match self {
            EcPoint::Infinity => true,
            EcPoint::Affine { x, y } => x.is_integer() && y.is_integer(),
        }
    }
}

impl fmt::Display for EcPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EcPoint::Infinity => f.write_str("O"),
            EcPoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

impl WeierstrassCurve {
    pub fn new(
        a1: Rational,
        a2: Rational,
        a3: Rational,
        a4: Rational,
        a6: Rational,
    ) -> Result<Self, EllipticError> {
        let c = WeierstrassCurve { a1, a2, a3, a4, a6 };
        if c.discriminant().is_zero() {
            return Err(EllipticError::Singular);
        }
        Ok(c)
    }

    /// `[a1, a2, a3, a4, a6]`.
    pub fn from_ints(a: [i64; 5]) -> Result<Self, EllipticError> {
        let [a1, a2, a3, a4, a6] = a.map(Rational::from);
        WeierstrassCurve::new(a1, a2, a3, a4, a6)
    }

    pub fn short(a: Rational, b: Rational) -> Result<Self, EllipticError> {
        let z = Rational::zero;
        WeierstrassCurve::new(z(), z(), z(), a, b)
    }

    fn b_invariants(&self) -> (Rational, Rational, Rational, Rational) {
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let b2 = &(a1 * a1) + &(a2 * &Rational::from(4));
        let b4 = &(a4 * &Rational::from(2)) + &(a1 * a3);
        let b6 = &(a3 * a3) + &(a6 * &Rational::from(4));
        let b8 = &(&(&(&(&(a1 * a1) * a6) + &(&(a2 * a6) * &Rational::from(4))) - &(&(a1 * a3) * a4))
            + &(&(a2 * a3) * a3))
            - &(a4 * a4);
        (b2, b4, b6, b8)
    }

    pub fn discriminant(&self) -> Rational {
        let (b2, b4, b6, b8) = self.b_invariants();
        let n = |k: i64| Rational::from(k);
        &(&(&-(&(&b2 * &b2) * &b8) - &(&(&(&b4 * &b4) * &b4) * &n(8))) - &(&(&b6 * &b6) * &n(27)))
            + &(&(&(&b2 * &b4) * &b6) * &n(9))
    }

    pub fn contains(&self, p: &EcPoint) -> bool {
        match p {
            EcPoint::Infinity => true,
            EcPoint::Affine { x, y } => {
                let lhs = &(&(y * y) + &(&(&self.a1 * x) * y)) + &(&self.a3 * y);
                let rhs = &(&(&(&(x * x) * x) + &(&(&self.a2 * x) * x)) + &(&self.a4 * x)) + &self.a6;
                lhs == rhs
            }
        }
    }

    fn check(&self, p: &EcPoint) -> Result<(), EllipticError> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(EllipticError::NotOnCurve(Box::new(p.clone())))
        }
    }

    pub fn neg(&self, p: &EcPoint) -> Result<EcPoint, EllipticError> {
        self.check(p)?;
        Ok(self.neg_unchecked(p))
    }

    fn neg_unchecked(&self, p: &EcPoint) -> EcPoint {
        match p {
            EcPoint::Infinity => EcPoint::Infinity,
            EcPoint::Affine { x, y } => {
                EcPoint::affine(x.clone(), &(&-y.clone() - &(&self.a1 * x)) - &self.a3)
            }
        }
    }

    pub fn add(&self, p: &EcPoint, q: &EcPoint) -> Result<EcPoint, EllipticError> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    fn add_unchecked(&self, p: &EcPoint, q: &EcPoint) -> EcPoint {
        let (x1, y1, x2, y2) = match (p, q) {
            (EcPoint::Infinity, _) => return q.clone(),
            (_, EcPoint::Infinity) => return p.clone(),
            (EcPoint::Affine { x: x1, y: y1 }, EcPoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let lambda = if x1 != x2 {
            &(y2 - y1) / &(x2 - x1)
        } else {
            let den = &(&(y1 * &Rational::from(2)) + &(&self.a1 * x1)) + &self.a3;
            if y1 != y2 || den.is_zero() {
                return EcPoint::Infinity;
            }
            let num = &(&(&(&(x1 * x1) * &Rational::from(3)) + &(&(&self.a2 * x1) * &Rational::from(2)))
                + &self.a4)
                - &(&self.a1 * y1);
            &num / &den
        };
        let nu = y1 - &(&lambda * x1);
        let x3 = &(&(&(&(&lambda * &lambda) + &(&self.a1 * &lambda)) - &self.a2) - x1) - x2;
        let y3 = &(&-(&(&lambda + &self.a1) * &x3) - &nu) - &self.a3;
        EcPoint::affine(x3, y3)
    }

    /// `k * P` by double-and-add; negative `k` multiplies `-P`.
    pub fn scalar_mul(&self, k: i64, p: &EcPoint) -> Result<EcPoint, EllipticError> {
        self.check(p)?;
        let base = if k < 0 { self.neg_unchecked(p) } else { p.clone() };
        let mut n = k.unsigned_abs();
        let mut acc = EcPoint::Infinity;
        let mut pow = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add_unchecked(&acc, &pow);
            }
            pow = self.add_unchecked(&pow, &pow);
            n >>= 1;
        }
        Ok(acc)
    }

    /// Order of `p` if it is at most 12, the largest torsion order over Q.
    pub fn order(&self, p: &EcPoint) -> Result<Option<usize>, EllipticError> {
        self.check(p)?;
        let mut q = p.clone();
        for k in 1..=12 {
            if q.is_infinity() {
                return Ok(Some(k));
            }
            q = self.add_unchecked(&q, p);
        }
        Ok(None)
    }

    pub fn integral_short_model(&self) -> ShortModel {
        ShortModel::from_curve(self)
    }

    /// All rational torsion points, sorted.
    pub fn torsion_points(&self) -> Vec<EcPoint> {
        let model = self.integral_short_model();
        let mut pts: Vec<EcPoint> = nagell_lutz_torsion(&model.a, &model.b)
            .iter()
            .map(|p| model.to_long(p))
            .collect();
        pts.sort();
        pts
    }
}

impl fmt::Display for WeierstrassCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}, {}, {}, {}]",
            self.a1, self.a2, self.a3, self.a4, self.a6
        )
    }
}

/// Integral model `Y^2 = X^3 + aX + b` of a long Weierstrass curve, with
/// `X = d^2 (x + b2/12)` and `Y = d^3 (y + (a1 x + a3)/2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortModel {
    pub a: BigInt,
    pub b: BigInt,
    pub d: BigInt,
    a1: Rational,
    a3: Rational,
    shift: Rational,
}

impl ShortModel {
    pub fn from_curve(c: &WeierstrassCurve) -> Self {
        let (b2, b4, b6, _) = c.b_invariants();
        let n = |k: i64| Rational::from(k);
        let c4 = &(&b2 * &b2) - &(&b4 * &n(24));
        let c6 = &(&-(&(&b2 * &b2) * &b2) + &(&(&b2 * &b4) * &n(36))) - &(&b6 * &n(216));
        let a = -(&c4 / &n(48));
        let b = -(&c6 / &n(864));
        let d = scaling_denominator(&a, &b);
        let dr = Rational::from(d.clone());
        let d2 = &dr * &dr;
        let a_int = &(&a * &d2) * &d2;
        let b_int = &(&(&b * &d2) * &d2) * &d2;
        ShortModel {
            a: a_int.to_integer().expect("integral after scaling"),
            b: b_int.to_integer().expect("integral after scaling"),
            d,
            a1: c.a1.clone(),
            a3: c.a3.clone(),
            shift: &b2 / &n(12),
        }
    }

    pub fn curve(&self) -> WeierstrassCurve {
        WeierstrassCurve::short(Rational::from(self.a.clone()), Rational::from(self.b.clone()))
            .expect("nonsingular model")
    }

    pub fn to_short(&self, p: &EcPoint) -> EcPoint {
        match p {
            EcPoint::Infinity => EcPoint::Infinity,
            EcPoint::Affine { x, y } => {
                let d = Rational::from(self.d.clone());
                let d2 = &d * &d;
                let xs = &(x + &self.shift) * &d2;
                let ys = &(y + &(&(&(&self.a1 * x) + &self.a3) / &Rational::from(2))) * &(&d2 * &d);
                EcPoint::affine(xs, ys)
            }
        }
    }

    pub fn to_long(&self, p: &EcPoint) -> EcPoint {
        match p {
            EcPoint::Infinity => EcPoint::Infinity,
            EcPoint::Affine { x, y } => {
                let d = Rational::from(self.d.clone());
                let d2 = &d * &d;
                let xl = &(x / &d2) - &self.shift;
                let yl = &(y / &(&d2 * &d)) - &(&(&(&self.a1 * &xl) + &self.a3) / &Rational::from(2));
                EcPoint::affine(xl, yl)
            }
        }
    }
}

/// Smallest `d > 0` making `a d^4` and `b d^6` integers.
fn scaling_denominator(a: &Rational, b: &Rational) -> BigInt {
    let mut d = BigInt::one();
    let den = a.denom().lcm(b.denom());
    for (p, _) in factor_small(&den) {
        let ea = valuation(a.denom(), &p);
        let eb = valuation(b.denom(), &p);
        let k = ea.div_ceil(4).max(eb.div_ceil(6));
        d *= num_traits::pow(p, k as usize);
    }
    d
}

fn valuation(n: &BigInt, p: &BigInt) -> u32 {
    let mut n = n.clone();
    let mut k = 0;
    while !n.is_zero() && (&n % p).is_zero() {
        n /= p;
        k += 1;
    }
    k
}

/// Prime factorization by trial division. Any cofactor left above the
/// trial bound is returned as if prime.
fn factor_small(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(10_000_000u64);
    while &p * &p <= n && p <= limit {
        let mut e = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

/// Positive integers `y` with `y^2 | n`.
fn square_divisor_roots(n: &BigInt) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    for (p, e) in factor_small(n) {
        let mut next = Vec::new();
        for y in &out {
            let mut pk = BigInt::one();
            for _ in 0..=e / 2 {
                next.push(y * &pk);
                pk *= &p;
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Torsion points of `Y^2 = X^3 + aX + b` (integral `a`, `b`), found among
/// integral points with `y = 0` or `y^2 | 4a^3 + 27b^2`.
pub fn nagell_lutz_torsion(a: &BigInt, b: &BigInt) -> Vec<EcPoint> {
    let curve = WeierstrassCurve::short(Rational::from(a.clone()), Rational::from(b.clone()))
        .expect("nonsingular model");
    let disc = BigInt::from(4) * a * a * a + BigInt::from(27) * b * b;
    let mut ys = vec![BigInt::zero()];
    ys.extend(square_divisor_roots(&disc));
    let mut out = vec![EcPoint::Infinity];
    for y in ys {
        // integer roots of x^3 + a x + b - y^2
        let cubic = Poly::new(vec![
            Rational::from(b - &y * &y),
            Rational::from(a.clone()),
            Rational::zero(),
            Rational::one(),
        ]);
        for (x, _) in rational_roots(&cubic) {
            if !x.is_integer() {
                continue;
            }
            let yr = Rational::from(y.clone());
            let signs = if y.is_zero() { vec![yr] } else { vec![yr.clone(), -yr] };
            for y in signs {
                let p = EcPoint::affine(x.clone(), y);
                if is_torsion(&curve, &p) {
                    out.push(p);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

fn is_torsion(curve: &WeierstrassCurve, p: &EcPoint) -> bool {
    let mut q = p.clone();
    for _ in 0..12 {
        if q.is_infinity() {
            return true;
        }
        if !q.is_integral() {
            return false;
        }
        q = curve.add_unchecked(&q, p);
    }
    q.is_infinity()
}

/// Registry entry for a curve attached to a published statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegisteredCurve {
    pub key: String,
    pub reference: String,
    pub curve: WeierstrassCurve,
    /// Points asserted to lie on the model (generators and named multiples).
    pub claimed_points: Vec<EcPoint>,
    pub claimed_torsion_order: Option<usize>,
    pub claimed_rank: Option<u32>,
}

struct Entry {
    key: &'static str,
    reference: &'static str,
    a: [i64; 5],
    points: &'static [(i64, i64, i64, i64)],
    torsion: Option<usize>,
    rank: Option<u32>,
}

const REGISTRY: &[Entry] = &[
    Entry { key: "E_THM31", reference: "3.1", a: [1, 0, 1, -1, -2], points: &[], torsion: Some(3), rank: Some(0) },
    Entry { key: "E_THM32", reference: "3.2", a: [1, 1, 1, 0, 0], points: &[(0, 1, 0, 1)], torsion: Some(4), rank: Some(0) },
    Entry { key: "E_THM41", reference: "4.1", a: [0, 0, 0, 3, 1], points: &[(0, 1, 1, 1), (9, 4, -35, 8)], torsion: None, rank: Some(1) },
    Entry { key: "E_THM53_2", reference: "5.3", a: [0, 4, 0, -16, 16], points: &[], torsion: Some(3), rank: Some(0) },
    Entry { key: "E_THM53_3", reference: "5.3", a: [0, 13, 0, 48, 64], points: &[], torsion: Some(6), rank: Some(0) },
    Entry { key: "E_THM61", reference: "6.1", a: [0, 7, 0, 24, 36], points: &[], torsion: None, rank: Some(0) },
    Entry { key: "E_THM62", reference: "6.2", a: [0, 12, 0, -4, 0], points: &[(5, 1, 3, 1)], torsion: None, rank: Some(1) },
    Entry { key: "E_THM64", reference: "6.4", a: [1, -1, 1, -56, 163], points: &[], torsion: Some(3), rank: Some(0) },
];

pub fn curve_registry() -> Vec<RegisteredCurve> {
    REGISTRY
        .iter()
        .map(|e| RegisteredCurve {
            key: e.key.to_string(),
            reference: e.reference.to_string(),
            curve: WeierstrassCurve::from_ints(e.a).expect("registry curves are nonsingular"),
            claimed_points: e
                .points
                .iter()
                .map(|&(xn, xd, yn, yd)| {
                    EcPoint::affine(
                        Rational::new(xn, xd).expect("nonzero"),
                        Rational::new(yn, yd).expect("nonzero"),
                    )
                })
                .collect(),
            claimed_torsion_order: e.torsion,
            claimed_rank: e.rank,
        })
        .collect()
}

pub fn registered_curve(key: &str) -> Result<RegisteredCurve, EllipticError> {
    curve_registry()
        .into_iter()
        .find(|c| c.key.eq_ignore_ascii_case(key))
        .ok_or_else(|| EllipticError::UnknownCurve(key.to_string()))
}

/// A claimed point that fails the on-curve check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OffCurvePoint {
    pub key: String,
    pub point: EcPoint,
    /// `lhs - rhs` of the curve equation at the point.
    pub defect: Rational,
    pub lhs: Rational,
    pub rhs: Rational,
}

/// On-curve check of every claimed point in the registry.
pub fn validate_registry() -> Vec<OffCurvePoint> {
    let mut out = Vec::new();
    for entry in curve_registry() {
        for p in &entry.claimed_points {
            if entry.curve.contains(p) {
                continue;
            }
            let EcPoint::Affine { x, y } = p else { continue };
            let c = &entry.curve;
            let lhs = &(&(y * y) + &(&(&c.a1 * x) * y)) + &(&c.a3 * y);
            let rhs = &(&(&(&(x * x) * x) + &(&(&c.a2 * x) * x)) + &(&c.a4 * x)) + &c.a6;
            out.push(OffCurvePoint {
                key: entry.key.clone(),
                point: p.clone(),
                defect: &lhs - &rhs,
                lhs,
                rhs,
            });
        }
    }
    out
}

/// Non-torsion integral points of smallest height with `|x| <= bound` on a
/// curve with integral coefficients, used to replace a misprinted generator.
pub fn small_non_torsion_points(curve: &WeierstrassCurve, bound: i64) -> Vec<EcPoint> {
    let mut out = Vec::new();
    for xi in -bound..=bound {
        let x = Rational::from(xi);
        // y^2 + (a1 x + a3) y - rhs(x) = 0
        let lin = &(&curve.a1 * &x) + &curve.a3;
        let rhs = &(&(&(&(&x * &x) * &x) + &(&(&curve.a2 * &x) * &x)) + &(&curve.a4 * &x)) + &curve.a6;
        let disc = &(&lin * &lin) + &(&rhs * &Rational::from(4));
        let Some(s) = disc.sqrt() else { continue };
        for sg in [s.clone(), -s.clone()] {
            let y = &(&sg - &lin) / &Rational::from(2);
            let p = EcPoint::affine(x.clone(), y);
            if curve.order(&p).ok().flatten().is_none() && !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out.sort_by(|a, b| point_height(a).cmp(&point_height(b)).then_with(|| a.cmp(b)));
    out
}

fn point_height(p: &EcPoint) -> BigInt {
    match p {
        EcPoint::Infinity => BigInt::zero(),
        EcPoint::Affine { x, .. } => x.height(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;

    fn pt(x: Rational, y: Rational) -> EcPoint {
        EcPoint::affine(x, y)
    }

    fn e41() -> WeierstrassCurve {
        WeierstrassCurve::from_ints([0, 0, 0, 3, 1]).unwrap()
    }

    #[test]
    fn doubling_on_degree_six_curve() {
        let c = e41();
        let p = pt(q(0, 1), q(1, 1));
        assert_eq!(c.add(&p, &p).unwrap(), pt(q(9, 4), q(-35, 8)));
        assert_eq!(c.scalar_mul(2, &p).unwrap(), pt(q(9, 4), q(-35, 8)));
    }

    #[test]
    fn identity_and_inverse() {
        let c = e41();
        let p = pt(q(0, 1), q(1, 1));
        assert_eq!(c.add(&p, &EcPoint::Infinity).unwrap(), p);
        let np = c.neg(&p).unwrap();
        assert_eq!(c.add(&p, &np).unwrap(), EcPoint::Infinity);
        assert_eq!(c.scalar_mul(0, &p).unwrap(), EcPoint::Infinity);
        assert_eq!(c.scalar_mul(-1, &p).unwrap(), np);
    }

    #[test]
    fn triple_matches_direct_sum() {
        let c = e41();
        let p = pt(q(0, 1), q(1, 1));
        let two = pt(q(9, 4), q(-35, 8));
        let three = c.scalar_mul(3, &p).unwrap();
        assert_eq!(three, c.add(&p, &two).unwrap());
        assert!(c.contains(&three));
    }

    #[test]
    fn off_curve_input_is_rejected() {
        let c = e41();
        let bad = pt(q(1, 1), q(1, 1));
        assert!(matches!(c.add(&bad, &bad), Err(EllipticError::NotOnCurve(_))));
        assert!(c.scalar_mul(3, &bad).is_err());
    }

    #[test]
    fn singular_curve_rejected() {
        assert_eq!(WeierstrassCurve::from_ints([0, 0, 0, 0, 0]), Err(EllipticError::Singular));
        assert_eq!(WeierstrassCurve::from_ints([0, 0, 0, -3, 2]), Err(EllipticError::Singular));
    }

    #[test]
    fn discriminant_of_short_form() {
        // -16 (4 a^3 + 27 b^2)
        let c = WeierstrassCurve::from_ints([0, 0, 0, 3, 1]).unwrap();
        assert_eq!(c.discriminant(), Rational::from(-16 * (4 * 27 + 27)));
    }

    #[test]
    fn short_model_round_trip() {
        let c = WeierstrassCurve::from_ints([1, -1, 1, -56, 163]).unwrap();
        let m = c.integral_short_model();
        let s = m.curve();
        for p in c.torsion_points() {
            let ps = m.to_short(&p);
            assert!(s.contains(&ps));
            assert_eq!(m.to_long(&ps), p);
        }
    }

    #[test]
    fn torsion_of_x3_minus_x() {
        let t = nagell_lutz_torsion(&BigInt::from(-1), &BigInt::from(0));
        assert_eq!(
            t,
            vec![
                EcPoint::Infinity,
                pt(q(-1, 1), q(0, 1)),
                pt(q(0, 1), q(0, 1)),
                pt(q(1, 1), q(0, 1)),
            ]
        );
    }

    #[test]
    fn torsion_orders_of_registry_curves() {
        let order = |k: &str| registered_curve(k).unwrap().curve.torsion_points().len();
        assert_eq!(order("E_THM32"), 4);
        assert_eq!(order("E_THM31"), 3);
        assert_eq!(order("E_THM64"), 3);
        assert_eq!(order("E_THM53_3"), 6);
        assert_eq!(order("E_THM53_2"), 3);
        let t32 = registered_curve("E_THM32").unwrap().curve.torsion_points();
        assert!(t32.contains(&pt(q(0, 1), q(0, 1))));
    }

    #[test]
    fn torsion_is_closed_under_addition() {
        for e in curve_registry() {
            let t = e.curve.torsion_points();
            for a in &t {
                for b in &t {
                    assert!(t.contains(&e.curve.add(a, b).unwrap()), "{}", e.key);
                }
            }
        }
    }

    #[test]
    fn validator_flags_only_misprinted_generator() {
        let bad = validate_registry();
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].key, "E_THM62");
        assert_eq!(bad[0].lhs, Rational::from(9));
        assert_eq!(bad[0].rhs, Rational::from(405));
    }

    #[test]
    fn replacement_generator_search() {
        let c = registered_curve("E_THM62").unwrap().curve;
        let found = small_non_torsion_points(&c, 10);
        assert_eq!(found[0], pt(q(1, 1), q(-3, 1)));
        assert!(found.contains(&pt(q(1, 1), q(3, 1))));
    }
}
