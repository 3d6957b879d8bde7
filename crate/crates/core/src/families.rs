//! Registry of parametric trinomial families with their claimed factorizations.
//!
//! Each family emits `x^n + A x^m + B` together with the factors the formulas
//! predict. Excluded parameter values still produce a sample, flagged with
//! `constraint_ok = false`; at a pole of the formulas that sample carries
//! `A = B = 0` and no claimed factors.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{q, Rational};
use crate::factor::{factor_over_q, rational_roots, FactorError};
use crate::poly::{product, Poly};
use crate::trinomial::{ReducibilityType, Trinomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown family {0:?}")]
    Unknown(String),
    #[error("{family} takes {expected} parameter(s), got {got}")]
    Arity {
        family: FamilyId,
        expected: usize,
        got: usize,
    },
    #[error(transparent)]
    Factor(#[from] FactorError),
}

macro_rules! family_ids {
    ($($id:ident),* $(,)?) => {
        #[allow(non_camel_case_types)]
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub enum FamilyId { $($id),* }

        impl FamilyId {
            pub const ALL: &'static [FamilyId] = &[$(FamilyId::$id),*];

            pub fn as_str(self) -> &'static str {
                match self { $(FamilyId::$id => stringify!($id)),* }
            }
        }
    };
}

family_ids!(
    Q4_112,
    Q4M2_112,
    Q4M2_1111,
    Q5_122,
    S6_123,
    S6M2_222_SYM,
    S6M2_222_B,
    S6M3_222,
    S6M3_1122,
    S6M3_123,
    S7_124,
    S7_34,
    S7M3_34,
    O8M3_DIV,
    N9M2_DIV,
    D10M1_DIV,
    F8_33,
    F10M2_33,
    F10M4_33,
    F12M3,
    F16M4,
    F15M3,
    SPORADIC7,
);

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyId {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| FamilyError::Unknown(s.to_string()))
    }
}

struct Spec {
    params: &'static [&'static str],
    n: u32,
    m: u32,
    reference: &'static str,
    claimed_type: Option<&'static [usize]>,
    exclusions: &'static str,
    constrained: bool,
}

fn entry(id: FamilyId) -> Spec {
    use FamilyId::*;
    let s = |params, n, m, reference, claimed_type, exclusions, constrained| Spec {
        params,
        n,
        m,
        reference,
        claimed_type,
        exclusions,
        constrained,
    };
    match id {
        Q4_112 => s(&["u"], 4, 1, "2.1", Some(&[1, 1, 2][..]), "u not in {0, -1}", false),
        Q4M2_112 => s(&["q"], 4, 2, "2.2", Some(&[1, 1, 2]), "q != 0, 1; -q not a square", false),
        Q4M2_1111 => s(&["u"], 4, 2, "2.2", Some(&[1, 1, 1, 1]), "u != 0", false),
        Q5_122 => s(&["v"], 5, 1, "3.1", Some(&[1, 2, 2]), "v not in {0, 1, 1/2}", false),
        S6_123 => s(&["v", "w"], 6, 1, "4.1", Some(&[1, 2, 3]), "(v, w) on (3v^2-2v+1-2w)^2 = (v-1)(5v^3-3v^2+3v+3)", true),
        S6M2_222_SYM => s(&["s", "v"], 6, 2, "4.3", Some(&[2, 2, 2]), "sv(s+v) != 0", false),
        S6M2_222_B => s(&["v"], 6, 2, "4.3", Some(&[2, 2, 2]), "v not in {0, 1, 1/2, 1/3}", false),
        S6M3_222 => s(&["u"], 6, 3, "4.4", Some(&[2, 2, 2]), "u not in {0, -1, -1/2}", false),
        S6M3_1122 => s(&["u"], 6, 3, "4.4", Some(&[1, 1, 2, 2]), "u not in {0, -1}", false),
        S6M3_123 => s(&["t"], 6, 3, "4.4", Some(&[1, 2, 3]), "t not a cube", false),
        S7_124 => s(&["v", "w"], 7, 1, "5.1", Some(&[1, 2, 4]), "(v, w) on 4v^6-8v^5+9v^4-4v^3-6v^2+12v-3 = (4v^3-3v^2+2v-1-2(3v-1)w)^2", true),
        S7_34 => s(&["u"], 7, 1, "5.3", Some(&[3, 4]), "u not in {1, 1/2, 1/3, 3/2}", false),
        S7M3_34 => s(&[], 7, 3, "5.3", Some(&[3, 4]), "none", false),
        O8M3_DIV => s(&["v", "w"], 8, 3, "5.4", Some(&[3, 5]), "(v, w) on (v^2+2v-1)(4v^3-3v^2+2v-1) = (2(v+2)w-(3v-1)(v+1))^2 with exact divisibility", true),
        N9M2_DIV => s(&["u", "v", "w"], 9, 2, "5.5", Some(&[3, 6]), "(u, v, w) on the degree-10 square condition with exact divisibility", true),
        D10M1_DIV => s(&["u", "v", "w"], 10, 1, "5.6", Some(&[3, 7]), "(u, v, w) on the degree-10 square condition with exact divisibility", true),
        F8_33 => s(&["q"], 8, 2, "6.1", Some(&[2, 3, 3]), "q not in {1, 1/2, 1/3}", false),
        F10M2_33 => s(&["p", "q", "r"], 10, 2, "6.2", Some(&[3, 3, 4]), "(2q-p^2)(2q^2+4p^2q-3p^4) = (r+2p(p^2-2q))^2", true),
        F10M4_33 => s(&[], 10, 4, "6.3", Some(&[3, 3, 4]), "none", false),
        F12M3 => s(&["r", "w"], 12, 3, "6.4", Some(&[3, 3, 6]), "rw(r-w) != 0", false),
        F16M4 => s(&["q"], 16, 4, "6.5", Some(&[4, 6, 6]), "q not in {1, 1/2, 1/3}", false),
        F15M3 => s(&[], 15, 3, "6.6", Some(&[5, 10]), "none", false),
        SPORADIC7 => s(&[], 0, 0, "7", None, "none", false),
    }
}

/// Registry entry as listed by [`list_families`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyInfo {
    pub id: FamilyId,
    pub arity: usize,
    pub params: Vec<String>,
    /// Degree and inner exponent; zero for the mixed-degree sporadic list.
    pub n: u32,
    pub m: u32,
    pub reference: String,
    pub claimed_type: Option<ReducibilityType>,
    pub exclusions: String,
    pub constrained: bool,
    pub fixed_cases: usize,
}

pub fn list_families() -> Vec<FamilyInfo> {
    FamilyId::ALL.iter().map(|&id| family_info(id)).collect()
}

pub fn family_info(id: FamilyId) -> FamilyInfo {
    let s = entry(id);
    FamilyInfo {
        id,
        arity: s.params.len(),
        params: s.params.iter().map(|p| p.to_string()).collect(),
        n: s.n,
        m: s.m,
        reference: s.reference.to_string(),
        claimed_type: s.claimed_type.map(ReducibilityType::from),
        exclusions: s.exclusions.to_string(),
        constrained: s.constrained,
        fixed_cases: fixed_raw(id).len(),
    }
}

/// One trinomial emitted by a family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySample {
    pub family: FamilyId,
    pub params: Vec<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub trinomial: Trinomial,
    pub claimed_factors: Vec<Poly>,
    pub constraint_ok: bool,
    pub degenerate: bool,
}

impl FamilySample {
    pub fn claimed_product(&self) -> Poly {
        product(&self.claimed_factors)
    }

    pub fn identity_holds(&self) -> bool {
        !self.claimed_factors.is_empty() && self.claimed_product() == self.trinomial.poly()
    }
}

/// Raw formula output before the sample flags are computed.
#[derive(Clone, Debug)]
pub(crate) struct Raw {
    pub n: u32,
    pub m: u32,
    pub a: Rational,
    pub b: Rational,
    pub factors: Vec<Poly>,
    pub admissible: bool,
    pub label: Option<String>,
}

impl Raw {
    fn new(n: u32, m: u32, a: Rational, b: Rational, factors: Vec<Poly>, admissible: bool) -> Self {
        Raw {
            n,
            m,
            a,
            b,
            factors,
            admissible,
            label: None,
        }
    }

    fn pole(n: u32, m: u32) -> Self {
        Raw::new(n, m, Rational::zero(), Rational::zero(), vec![], false)
    }

    fn labelled(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }
}

/// Emits the family at `params`. A family without parameters yields all of
/// its listed cases; otherwise a single sample.
pub fn generate(id: FamilyId, params: &[Rational]) -> Result<Vec<FamilySample>, FamilyError> {
    let arity = entry(id).params.len();
    if params.len() != arity {
        return Err(FamilyError::Arity {
            family: id,
            expected: arity,
            got: params.len(),
        });
    }
    if arity == 0 {
        return Ok(fixed_cases(id));
    }
    let raw = parametric_raw(id, params);
    Ok(vec![finish(id, params.to_vec(), raw)])
}

/// Single-sample convenience for parametric families.
pub fn generate_one(id: FamilyId, params: &[Rational]) -> Result<FamilySample, FamilyError> {
    let mut v = generate(id, params)?;
    Ok(v.remove(0))
}

/// The listed individual cases of a family (empty for purely parametric ones).
pub fn fixed_cases(id: FamilyId) -> Vec<FamilySample> {
    fixed_raw(id)
        .into_iter()
        .map(|raw| finish(id, vec![], raw))
        .collect()
}

/// Whether `params` satisfy the family's exclusions and, for constrained
/// families, its defining equation together with the exact identity.
pub fn check_constraint(id: FamilyId, params: &[Rational]) -> Result<bool, FamilyError> {
    Ok(generate(id, params)?.iter().all(|s| s.constraint_ok))
}

fn finish(id: FamilyId, params: Vec<Rational>, raw: Raw) -> FamilySample {
    let trinomial = Trinomial::new_unchecked(raw.n, raw.m, raw.a, raw.b);
    let mut constraint_ok = raw.admissible && trinomial.is_admissible();
    if entry(id).constrained && constraint_ok {
        // listed cases carry no parameters; only the identity is checked
        let on_curve = params.is_empty()
            || constraint_residual(id, &params).is_some_and(|d| d.is_zero());
        constraint_ok = on_curve && product(&raw.factors) == trinomial.poly();
    }
    let degenerate = raw.factors.iter().any(|f| {
        factor_over_q(f)
            .map(|fac| !fac.is_irreducible())
            .unwrap_or(false)
    });
    FamilySample {
        family: id,
        params,
        label: raw.label,
        trinomial,
        claimed_factors: raw.factors,
        constraint_ok,
        degenerate,
    }
}

fn r(n: i64) -> Rational {
    Rational::from(n)
}

/// Polynomial from coefficients listed from the leading term down.
fn desc(c: &[Rational]) -> Poly {
    Poly::new(c.iter().rev().cloned().collect())
}

fn desc_i(c: &[i64]) -> Poly {
    let mut v = c.to_vec();
    v.reverse();
    Poly::from_ints(&v)
}

fn big(s: &str) -> Rational {
    s.parse().expect("valid literal")
}

/// The trinomial coefficients of `f = x^n + A x^m + B`, if it has that shape.
fn read_trinomial(f: &Poly, m: usize) -> (Rational, Rational) {
    (f.coeff(m), f.coeff(0))
}

fn parametric_raw(id: FamilyId, p: &[Rational]) -> Raw {
    use FamilyId::*;
    let one = r(1);
    match id {
        Q4_112 => {
            let u = &p[0];
            let u2 = u * u;
            let a = -(&(u + &one) * &(&u2 + &one));
            let b = u * &(&(&u2 + u) + &one);
            let f = vec![
                desc(&[r(1), r(-1)]),
                desc(&[r(1), -u.clone()]),
                desc(&[r(1), u + &one, &(&u2 + u) + &one]),
            ];
            Raw::new(4, 1, a, b, f, !u.is_zero() && u != &r(-1))
        }
        Q4M2_112 => {
            let qq = &p[0];
            let a = qq - &one;
            let b = -qq.clone();
            let f = vec![desc(&[r(1), r(-1)]), desc(&[r(1), r(1)]), desc(&[r(1), r(0), qq.clone()])];
            let ok = !qq.is_zero() && qq != &one && !(-qq.clone()).is_square();
            Raw::new(4, 2, a, b, f, ok)
        }
        Q4M2_1111 => {
            let u = &p[0];
            let u2 = u * u;
            let a = -(&u2 + &one);
            let f = vec![
                desc(&[r(1), r(-1)]),
                desc(&[r(1), r(1)]),
                desc(&[r(1), -u.clone()]),
                desc(&[r(1), u.clone()]),
            ];
            Raw::new(4, 2, a, u2, f, !u.is_zero())
        }
        Q5_122 => {
            let v = &p[0];
            let den = &(v * &r(2)) - &one;
            if den.is_zero() {
                return Raw::pole(5, 1);
            }
            let v2 = v * v;
            let v3 = &v2 * v;
            let v4 = &v3 * v;
            let den2 = &den * &den;
            let a = &(&(&(&v2 - v) - &one) * &(&(&(&(&v4 - &(&v3 * &r(2))) + &(&v2 * &r(4))) - &(v * &r(3))) + &one)) / &den2;
            let b = -(&(&(&(v * &(v - &one)) * &(&v2 + &one)) * &(&(&v2 - &(v * &r(2))) + &r(2))) / &den2);
            let q1 = &(v * &(&(&v2 - &(v * &r(2))) + &r(2))) / &den;
            let w = &(&(v - &one) * &(&v2 + &one)) / &den;
            let f = vec![
                desc(&[r(1), r(-1)]),
                desc(&[r(1), &one - v, q1]),
                desc(&[r(1), v.clone(), w]),
            ];
            let ok = !v.is_zero() && v != &one;
            Raw::new(5, 1, a, b, f, ok)
        }
        S6_123 => {
            let (v, w) = (&p[0], &p[1]);
            let pp = &one - v;
            let qq = &(&(&pp - &(&pp * v)) + v) - w;
            let rr = &(&(&(&(&qq - &(&qq * v)) + &(&pp * v)) - &(&pp * w)) + w);
            let f = vec![
                desc(&[r(1), r(-1)]),
                desc(&[r(1), v.clone(), w.clone()]),
                desc(&[r(1), pp, qq, rr.clone()]),
            ];
            let prod = product(&f);
            let (a, b) = read_trinomial(&prod, 1);
            Raw::new(6, 1, a, b, f, true)
        }
        S6M2_222_SYM => {
            let (s, v) = (&p[0], &p[1]);
            let a = -(&(&(s * s) + &(s * v)) + &(v * v));
            let b = -(&(s * v) * &(s + v));
            let f = vec![
                desc(&[r(1), r(0), s.clone()]),
                desc(&[r(1), r(0), v.clone()]),
                desc(&[r(1), r(0), -(s + v)]),
            ];
            let ok = !(&(s * v) * &(s + v)).is_zero();
            Raw::new(6, 2, a, b, f, ok)
        }
        S6M2_222_B => {
            let v = &p[0];
            let a = -(&(v - &one) * &(&(v * &r(3)) - &one));
            let b = -(&(v * v) * &(&(v * &r(2)) - &one));
            let f = vec![
                desc(&[r(1), r(1), v.clone()]),
                desc(&[r(1), r(-1), v.clone()]),
                desc(&[r(1), r(0), &one - &(v * &r(2))]),
            ];
            let ok = ![r(0), r(1), q(1, 2), q(1, 3)].contains(v);
            Raw::new(6, 2, a, b, f, ok)
        }
        S6M3_222 => {
            let u = &p[0];
            let k = &(&(u * u) + u) + &one;
            let a = -(&(u * &r(27)) * &(u + &one));
            let b = &(&(&k * &k) * &k) * &r(27);
            let k3 = &k * &r(3);
            let f = vec![
                desc(&[r(1), r(3), k3.clone()]),
                desc(&[r(1), -(&(u + &one) * &r(3)), k3.clone()]),
                desc(&[r(1), u * &r(3), k3]),
            ];
            let ok = ![r(0), r(-1), q(-1, 2)].contains(u);
            Raw::new(6, 3, a, b, f, ok)
        }
        S6M3_1122 => {
            let u = &p[0];
            let u3 = &(u * u) * u;
            let a = -(&u3 + &one);
            let f = vec![
                desc(&[r(1), r(-1)]),
                desc(&[r(1), -u.clone()]),
                desc(&[r(1), r(1), r(1)]),
                desc(&[r(1), u.clone(), u * u]),
            ];
            let ok = !u.is_zero() && u != &r(-1);
            Raw::new(6, 3, a, u3, f, ok)
        }
        S6M3_123 => {
            let t = &p[0];
            let f = vec![
                desc(&[r(1), r(-1)]),
                desc(&[r(1), r(1), r(1)]),
                desc(&[r(1), r(0), r(0), t.clone()]),
            ];
            Raw::new(6, 3, t - &one, -t.clone(), f, !t.is_cube())
        }
        S7_124 => {
            let (v, w) = (&p[0], &p[1]);
            let v2 = v * v;
            let v3 = &v2 * v;
            let v4 = &v3 * v;
            let w2 = w * w;
            let c5 = &(&(&(&v4 - &v3) + &v2) - v) + &one;
            let a = &(&(&(&w2 * w) - &(&(v * &(&(v * &r(3)) + &one)) * &w2))
                + &(&(v * &(&(&(&v3 + &(&v2 * &r(3))) - &(v * &r(2))) + &one)) * w))
                - &(v * &c5);
            let c2 = &(&(&v2 * &r(3)) - &(v * &r(2))) + &one;
            let b = -(w * &(&(&w2 - &(&c2 * w)) + &c5));
            let pp = &one - v;
            let qq = &(&(&pp - &(&pp * v)) + v) - w;
            let rr = &(&(&(&qq - &(&qq * v)) + &(&pp * v)) - &(&pp * w)) + w;
            let ss = &(&(&(&(&rr - &(&rr * v)) + &(&qq * v)) - &(&qq * w)) + &(&pp * w));
            let f = vec![
                desc(&[r(1), r(-1)]),
                desc(&[r(1), v.clone(), w.clone()]),
                desc(&[r(1), pp, qq, rr, ss.clone()]),
            ];
            Raw::new(7, 1, a, b, f, true)
        }
        S7_34 => {
            let u = &p[0];
            let den = &(u * &r(2)) - &r(3);
            if den.is_zero() {
                return Raw::pole(7, 1);
            }
            let u2 = u * u;
            let den2 = &den * &den;
            let m31 = &(u * &r(3)) - &one;
            let m21 = &(u * &r(2)) - &one;
            let m1 = u - &one;
            let cyc = &(&u2 - u) + &one;
            let a = &(&(&(&(&u2 * &r(4)) - &(u * &r(5))) + &r(2)) * &(&(&(&(&u2 * u) - &u2) - &(u * &r(2))) + &one)) / &den2;
            let b = &(&(&(&m31 * &m21) * &m1) * &cyc) / &den2;
            let f = vec![
                desc(&[r(1), r(1), u.clone(), &(&m31 * &m1) / &den]),
                desc(&[
                    r(1),
                    r(-1),
                    -m1.clone(),
                    &(&(&u2 - &(u * &r(4))) + &r(2)) / &den,
                    &(&m21 * &cyc) / &den,
                ]),
            ];
            let ok = ![r(1), q(1, 2), q(1, 3)].contains(u);
            Raw::new(7, 1, a, b, f, ok)
        }
        O8M3_DIV => {
            let (v, w) = (&p[0], &p[1]);
            let v2 = v * v;
            let v3 = &v2 * v;
            let w2 = w * w;
            let a = &(&(&(&(&(&one - &(v * &r(5))) + &(&v2 * &r(6))) - &v3) + &(w * &r(4)))
                - &(&(v * w) * &r(6)))
                + &w2;
            let b = -(w * &(&(&(&(&(v - &(&v2 * &r(3))) + &v3) - w) + &(&(v * w) * &r(4))) - &w2));
            division_raw(8, 3, a, b, desc(&[r(1), r(1), v.clone(), w.clone()]))
        }
        N9M2_DIV => {
            let (u, v, w) = (&p[0], &p[1], &p[2]);
            let (a, b) = n9_coefficients(u, v, w);
            division_raw(9, 2, a, b, desc(&[r(1), u.clone(), v.clone(), w.clone()]))
        }
        D10M1_DIV => {
            let (u, v, w) = (&p[0], &p[1], &p[2]);
            let (a9, b9) = n9_coefficients(u, v, w);
            let u2 = u * u;
            let u3 = &u2 * u;
            let u4 = &u3 * u;
            let u6 = &u3 * &u3;
            let v2 = v * v;
            let inner = &(&(&(&(&(&u6 - &(&(&u4 * v) * &r(6))) + &(&(&u2 * &v2) * &r(10)))
                - &(&(&v2 * v) * &r(4)))
                + &(&(&u3 * w) * &r(4)))
                - &(&(&(u * v) * w) * &r(8)))
                + &(w * w);
            let a = &(w - &(u * v)) * &inner;
            // B here is -w times the A of the degree-9 family.
            let _ = b9;
            let b = -(w * &a9);
            division_raw(10, 1, a, b, desc(&[r(1), u.clone(), v.clone(), w.clone()]))
        }
        F8_33 => {
            let qq = &p[0];
            let (a, b, f) = f8_parts(qq);
            let ok = ![r(1), q(1, 2), q(1, 3)].contains(qq);
            Raw::new(8, 2, a, b, f, ok)
        }
        F10M2_33 => {
            let (pp, qq, rr) = (&p[0], &p[1], &p[2]);
            let p2 = pp * pp;
            let u = &p2 - &(qq * &r(2));
            let v = &(&(&(&p2 * &p2) - &(&(&p2 * qq) * &r(4))) + &(&(qq * qq) * &r(3))) + &(&(pp * rr) * &r(2));
            let u2 = &u * &u;
            let a = &(&-(&u2 * &u2) + &(&(&u2 * &v) * &r(3))) - &(&v * &v);
            let b = -(&(&u * &v) * &(&u2 - &(&v * &r(2))));
            let f = vec![
                desc(&[r(1), r(0), u, r(0), v]),
                desc(&[r(1), pp.clone(), qq.clone(), rr.clone()]),
                desc(&[r(1), -pp.clone(), qq.clone(), -rr.clone()]),
            ];
            Raw::new(10, 2, a, b, f, true)
        }
        F12M3 => {
            let (rr, w) = (&p[0], &p[1]);
            let a = -(&(rr - w) * &(&(rr * rr) + &(w * w)));
            let c0 = &(&(rr * rr) - &(rr * w)) + &(w * w);
            let b = -(&(rr * w) * &c0);
            let f = vec![
                desc(&[r(1), r(0), r(0), -rr.clone()]),
                desc(&[r(1), r(0), r(0), w.clone()]),
                desc(&[r(1), r(0), r(0), rr - w, r(0), r(0), c0]),
            ];
            let ok = !(&(rr * w) * &(rr - w)).is_zero();
            Raw::new(12, 3, a, b, f, ok)
        }
        F16M4 => {
            let qq = &p[0];
            let (a, b, f8) = f8_parts(qq);
            let f = f8.iter().map(|g| g.compose_power(2)).collect();
            let ok = ![r(1), q(1, 2), q(1, 3)].contains(qq);
            Raw::new(16, 4, a, b, f, ok)
        }
        S7M3_34 | F10M4_33 | F15M3 | SPORADIC7 => unreachable!("fixed family has no parameters"),
    }
}

fn n9_coefficients(u: &Rational, v: &Rational, w: &Rational) -> (Rational, Rational) {
    let u2 = u * u;
    let u3 = &u2 * u;
    let u4 = &u3 * u;
    let u5 = &u4 * u;
    let u6 = &u5 * u;
    let u7 = &u6 * u;
    let v2 = v * v;
    let v3 = &v2 * v;
    let w2 = w * w;
    let a = &(&(&(&(&(&(&u7 - &(&(&u5 * v) * &r(6))) + &(&(&u3 * &v2) * &r(10)))
        - &(&(u * &v3) * &r(4)))
        + &(&(&u4 * w) * &r(5)))
        - &(&(&(&u2 * v) * w) * &r(12)))
        + &(&(&v2 * w) * &r(3)))
        + &(&(u * &w2) * &r(3));
    let b = w * &(&(&(&(&(&(&u6 - &(&(&u4 * v) * &r(5))) + &(&(&u2 * &v2) * &r(6))) - &v3)
        + &(&(&u3 * w) * &r(4)))
        - &(&(&(u * v) * w) * &r(6)))
        + &w2);
    (a, b)
}

fn f8_parts(qq: &Rational) -> (Rational, Rational, Vec<Poly>) {
    let one = r(1);
    let q2 = qq * qq;
    let a = -(&(&(&(&q2 + &(qq * &r(2))) - &one) * &(&(&(&q2 * &r(9)) - &(qq * &r(10))) + &r(3))) / &r(4));
    let m1 = qq - &one;
    let m31 = &(qq * &r(3)) - &one;
    let m21 = &(qq * &r(2)) - &one;
    let b = &(&(&(&m1 * &m1) * &m21) * &(&m31 * &m31)) / &r(4);
    let rr = -(&(&m1 * &m31) / &r(2));
    let f = vec![
        desc(&[r(1), r(0), -m21]),
        desc(&[r(1), r(1), qq.clone(), rr.clone()]),
        desc(&[r(1), r(-1), qq.clone(), -rr]),
    ];
    (a, b, f)
}

/// Divisor plus polynomial-division quotient; the identity then holds
/// exactly when the remainder vanishes.
fn division_raw(n: u32, m: u32, a: Rational, b: Rational, divisor: Poly) -> Raw {
    let t = Trinomial::new_unchecked(n, m, a.clone(), b.clone()).poly();
    let (quot, _) = t.divrem(&divisor).expect("monic divisor");
    Raw::new(n, m, a, b, vec![divisor, quot], true)
}

fn quotient_raw(n: u32, m: u32, a: Rational, b: Rational, factor: Poly) -> Raw {
    division_raw(n, m, a, b, factor)
}

fn fixed_raw(id: FamilyId) -> Vec<Raw> {
    use FamilyId::*;
    let listed = |n, m, a: i64, b: i64, fs: &[&[i64]]| {
        Raw::new(n, m, r(a), r(b), fs.iter().map(|c| desc_i(c)).collect(), true)
    };
    match id {
        S7M3_34 => vec![listed(7, 3, 2, -1, &[&[1, 1, 0, -1], &[1, -1, 1, 0, 1]])],
        O8M3_DIV => vec![listed(8, 3, -3, -1, &[&[1, 0, 1, 1], &[1, 0, -1, -1, 1, -1]]).labelled("u = 0, t = 1")],
        F10M4_33 => vec![
            listed(10, 4, 6875, -312500, &[&[1, -5, 0, 50], &[1, 5, 0, -50], &[1, 0, 25, 0, 125]]),
            listed(10, 4, 891, -34992, &[&[1, -3, 9, -18], &[1, 3, 9, 18], &[1, 0, -9, 0, 108]]),
            listed(
                10,
                4,
                -119527785,
                -2195696106864,
                &[&[1, 39, 507, 3042], &[1, -39, 507, -3042], &[1, 0, 507, 0, 237276]],
            ),
            listed(
                10,
                4,
                37347689456,
                -609669805268160000,
                &[&[1, 28, 1960, 191100], &[1, -28, 1960, -191100], &[1, 0, -3136, 0, 16694496]],
            ),
        ],
        F12M3 => vec![
            listed(12, 3, 128, 256, &[&[1, 0, 0, 4], &[1, 2, 4, 4], &[1, -2, 0, 0, 8, -16, 16]]),
            listed(12, 3, -5616, -3888, &[&[1, 0, 0, -18], &[1, 0, 6, 6], &[1, 0, -6, 12, 36, -36, 36]]),
        ],
        F16M4 => F16M4_TRIPLES
            .iter()
            .map(|(v, a, b)| {
                let factor = desc(&[r(1), r(0), r(0), r(0), -big(v)]);
                quotient_raw(16, 4, big(a), big(b), factor).labelled(format!("v = {v}"))
            })
            .collect(),
        F15M3 => vec![
            listed(15, 3, -81, 216, &[&[1, 3, 6, 9, 9, 6], &[1, -3, 3, 0, 0, -6, 9, -9, 27, -54, 36]]),
            listed(
                15,
                3,
                270,
                729,
                &[&[1, 3, 6, 9, 12, 9], &[1, -3, 3, 0, -3, 9, -18, 0, 63, -108, 81]],
            ),
        ],
        SPORADIC7 => SPORADIC_ROWS
            .iter()
            .map(|(n, m, a, b, f)| quotient_raw(*n, *m, big(a), big(b), desc_i(f)))
            .collect(),
        _ => vec![],
    }
}

/// `(v, A, B)` with `x^4 - v` dividing `x^16 + A x^4 + B`.
pub const F16M4_TRIPLES: [(&str, &str, &str); 8] = [
    ("72", "-347004", "-1889568"),
    ("-4", "1088", "4096"),
    ("540", "-49968576", "-58047528960"),
    ("1500", "-2975000000", "-600000000000"),
    ("1234620", "-1767811196564438976", "-140874409936505522810880"),
    ("-333000", "49083580251562500", "4048461902770312500000"),
    ("1506456", "-718119113273864316", "-4068405448481125418940000"),
    ("3749256176", "-52702993391145847275486817276", "-29085892289306030859388663640000"),
];

/// `(n, m, A, B, factor)`; factor coefficients from the leading term down.
pub const SPORADIC_ROWS: [(u32, u32, &str, &str, &[i64]); 7] = [
    (9, 4, "27", "-108", &[1, 3, 6, 6]),
    (10, 3, "297", "648", &[1, 0, 3, 9, -9, 18]),
    (11, 1, "12", "8", &[1, -2, 2, -2, 0, 2]),
    (11, 3, "-6184976", "4216540160", &[1, 14, 98, 392]),
    (13, 1, "-340224", "732160", &[1, -2, 8, -20]),
    (16, 1, "3486328125", "9277343750", &[1, 5, 25, 50]),
    (16, 3, "34816", "-552960", &[1, 2, 0, -8, -24]),
];

/// `LHS - RHS` of a constrained family's defining equation, as displayed
/// (`None` for families without one).
pub fn constraint_residual(id: FamilyId, p: &[Rational]) -> Option<Rational> {
    use FamilyId::*;
    let one = r(1);
    Some(match id {
        S6_123 => {
            let (v, w) = (&p[0], &p[1]);
            let v2 = v * v;
            let sq = &(&(&(&v2 * &r(3)) - &(v * &r(2))) + &one) - &(w * &r(2));
            let rhs = &(v - &one) * &(&(&(&(&(&v2 * v) * &r(5)) - &(&v2 * &r(3))) + &(v * &r(3))) + &r(3));
            &(&sq * &sq) - &rhs
        }
        S7_124 => {
            let (v, w) = (&p[0], &p[1]);
            let sq = &(&s7_m(v) - &(&(&(v * &r(3)) - &one) * &(w * &r(2))));
            &eval_desc(&[4, -8, 9, -4, -6, 12, -3], v) - &(sq * sq)
        }
        O8M3_DIV => {
            let (v, w) = (&p[0], &p[1]);
            let sq = &(&(&(v + &r(2)) * &r(2)) * w) - &(&(&(v * &r(3)) - &one) * &(v + &one));
            &eq4_poly(v) - &(&sq * &sq)
        }
        N9M2_DIV => {
            let (u, v, w) = (&p[0], &p[1], &p[2]);
            let sq = &(&eq7_l(u, v) * w) + &eq7_m(u, v);
            &eq7_poly(u, v) - &(&sq * &sq)
        }
        D10M1_DIV => {
            let (u, v, w) = (&p[0], &p[1], &p[2]);
            let sq = &(&eq8_l(u, v) * w) + &eq8_m(u, v);
            &eq8_poly(u, v) - &(&sq * &sq)
        }
        F10M2_33 => {
            let (pp, qq, rr) = (&p[0], &p[1], &p[2]);
            let p2 = pp * pp;
            let lhs = &(&(qq * &r(2)) - &p2) * &(&(&(&(qq * qq) * &r(2)) + &(&(&p2 * qq) * &r(4))) - &(&(&p2 * &p2) * &r(3)));
            let sq = rr + &(&(pp * &r(2)) * &(&p2 - &(qq * &r(2))));
            &lhs - &(&sq * &sq)
        }
        _ => return None,
    })
}

/// `(m, W)` with `m * (T - prod(claimed)) == residual * W` identically in the
/// parameters, for constrained families.
pub fn identity_certificate(id: FamilyId, p: &[Rational]) -> Option<(Rational, Poly)> {
    use FamilyId::*;
    let x = Poly::x();
    let x2 = Poly::monomial(r(1), 2);
    Some(match id {
        S6_123 => (r(4), x2),
        S7_124 => (&(&(&p[0] * &r(3)) - &r(1)) * &r(4), x2),
        O8M3_DIV => (&(&p[0] + &r(2)) * &r(4), x),
        N9M2_DIV => (&(&(&p[0] * &p[0]) - &p[1]) * &r(-12), x),
        D10M1_DIV => (&(&(&(&p[0] * &p[0]) * &r(2)) - &p[1]) * &r(-3), x2),
        F10M2_33 => {
            let (pp, qq, rr) = (&p[0], &p[1], &p[2]);
            let p2 = pp * pp;
            let u = &p2 - &(qq * &r(2));
            let v = &(&(&(&p2 * &p2) - &(&(&p2 * qq) * &r(4))) + &(&(qq * qq) * &r(3))) + &(&(pp * rr) * &r(2));
            (r(-1), desc(&[r(1), r(0), u, r(0), v]))
        }
        _ => return None,
    })
}

fn eval_desc(c: &[i64], t: &Rational) -> Rational {
    desc_i(c).eval(t)
}

fn s7_m(v: &Rational) -> Rational {
    eval_desc(&[4, -3, 2, -1], v)
}

fn eq4_poly(v: &Rational) -> Rational {
    &eval_desc(&[1, 2, -1], v) * &eval_desc(&[4, -3, 2, -1], v)
}

/// Homogeneous form `sum c_i u^(2(d-i)) v^i`, with `u` of weight 1, `v` weight 2.
fn weighted(c: &[i64], u: &Rational, v: &Rational) -> Rational {
    let d = c.len() - 1;
    c.iter()
        .enumerate()
        .map(|(i, &ci)| &(&r(ci) * &u.pow(2 * (d - i) as i32)) * &v.pow(i as i32))
        .sum()
}

pub(crate) fn eq7_poly(u: &Rational, v: &Rational) -> Rational {
    weighted(&[1, -4, 10, -12, -3, 12], u, v)
}

pub(crate) fn eq7_l(u: &Rational, v: &Rational) -> Rational {
    &(&(u * u) - v) * &r(6)
}

pub(crate) fn eq7_m(u: &Rational, v: &Rational) -> Rational {
    u * &weighted(&[1, -8, 9], u, v)
}

pub(crate) fn eq8_poly(u: &Rational, v: &Rational) -> Rational {
    weighted(&[3, -15, 25, -15, 0, 3], u, v)
}

pub(crate) fn eq8_l(u: &Rational, v: &Rational) -> Rational {
    &(&(&(u * u) * &r(2)) - v) * &r(3)
}

pub(crate) fn eq8_m(u: &Rational, v: &Rational) -> Rational {
    u * &weighted(&[3, -10, 6], u, v)
}

/// Values of the last parameter `w` completing `fixed` to a point of the
/// family, given the square root `s` of the curve value at `fixed`.
///
/// Solves the linear form `L w + M = ±s`. Where `L` vanishes the form does
/// not determine `w`, and the exact remainder condition (quadratic in `w`,
/// linear on that locus) is solved instead.
pub fn solve_last_parameter(id: FamilyId, fixed: &[Rational], s: &Rational) -> Vec<Rational> {
    use FamilyId::*;
    let one = r(1);
    let (l, m, remainder): (Rational, Rational, Option<Poly>) = match id {
        S6_123 => {
            let v = &fixed[0];
            let m = &(&(&(v * v) * &r(3)) - &(v * &r(2))) + &one;
            (r(-2), m, None)
        }
        S7_124 => {
            let v = &fixed[0];
            let l = &(&(v * &r(3)) - &one) * &r(-2);
            // x^2 coefficient of T - prod, as a quadratic in w
            let k = desc(&[
                &one - &(v * &r(3)),
                eval_desc(&[4, -3, 2, -1], v),
                eval_desc(&[-1, 1, -1, 1, -1, 1], v),
            ]);
            (l, s7_m(v), Some(k))
        }
        O8M3_DIV => {
            let v = &fixed[0];
            let l = &(v + &r(2)) * &r(2);
            let m = -(&(&(v * &r(3)) - &one) * &(v + &one));
            // v^4 - 3v^3 + 3v^2 w + v^2 - v w^2 + 2v w - 2w^2 - w
            let k = desc(&[
                -(v + &r(2)),
                &(&(&(v * v) * &r(3)) + &(v * &r(2))) - &one,
                eval_desc(&[1, -3, 1, 0, 0], v),
            ]);
            (l, m, Some(k))
        }
        N9M2_DIV => {
            let (u, v) = (&fixed[0], &fixed[1]);
            let k = desc(&[
                &(&(u * u) * &r(3)) - &(v * &r(3)),
                u * &weighted(&[1, -8, 9], u, v),
                weighted(&[0, -1, 5, -6, 1], u, v),
            ]);
            (eq7_l(u, v), eq7_m(u, v), Some(k))
        }
        D10M1_DIV => {
            let (u, v) = (&fixed[0], &fixed[1]);
            let k = desc(&[
                &(&(u * u) * &r(6)) - &(v * &r(3)),
                u * &weighted(&[6, -20, 12], u, v),
                weighted(&[1, -7, 15, -10, 1], u, v),
            ]);
            (eq8_l(u, v), eq8_m(u, v), Some(k))
        }
        F10M2_33 => {
            let (pp, qq) = (&fixed[0], &fixed[1]);
            let m = &(pp * &r(2)) * &(&(pp * pp) - &(qq * &r(2)));
            (one.clone(), m, None)
        }
        _ => return vec![],
    };
    let mut out: Vec<Rational> = if !l.is_zero() {
        [s.clone(), -s.clone()]
            .iter()
            .map(|sg| &(sg - &m) / &l)
            .collect()
    } else {
        remainder
            .map(|k| rational_roots(&k).into_iter().map(|(w, _)| w).collect())
            .unwrap_or_default()
    };
    out.sort();
    out.dedup();
    out
}

/// A single-coefficient change to one claimed factor, for negative controls.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corruption {
    pub factor: usize,
    pub coeff: usize,
    pub delta: Rational,
}

impl Corruption {
    /// Constant term of the first factor off by one.
    pub fn constant_off_by_one() -> Self {
        Corruption {
            factor: 0,
            coeff: 0,
            delta: r(1),
        }
    }

    pub fn apply(&self, sample: &mut FamilySample) {
        if let Some(f) = sample.claimed_factors.get_mut(self.factor) {
            let mut c = f.coeffs().to_vec();
            if c.len() <= self.coeff {
                c.resize(self.coeff + 1, Rational::zero());
            }
            c[self.coeff] += &self.delta;
            *f = Poly::new(c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_sample(id: FamilyId, p: &[Rational]) -> FamilySample {
        generate_one(id, p).unwrap()
    }

    #[test]
    fn registry_has_all_entries() {
        let l = list_families();
        assert_eq!(l.len(), 23);
        let q4 = l.iter().find(|f| f.id == FamilyId::Q4_112).unwrap();
        assert_eq!(q4.arity, 1);
        let sp = l.iter().find(|f| f.id == FamilyId::SPORADIC7).unwrap();
        assert_eq!(sp.arity, 0);
        assert_eq!(sp.fixed_cases, 7);
    }

    #[test]
    fn ids_round_trip_through_strings() {
        for &id in FamilyId::ALL {
            assert_eq!(id.as_str().parse::<FamilyId>().unwrap(), id);
        }
        assert!("NOPE".parse::<FamilyId>().is_err());
    }

    #[test]
    fn quartic_at_two() {
        let s = one_sample(FamilyId::Q4_112, &[r(2)]);
        assert_eq!(s.trinomial, Trinomial::from_ints(4, 1, -15, 14).unwrap());
        assert!(s.identity_holds() && s.constraint_ok && !s.degenerate);
    }

    #[test]
    fn sextic_cubed_at_two() {
        let s = one_sample(FamilyId::S6M3_222, &[r(2)]);
        assert_eq!(s.trinomial, Trinomial::from_ints(6, 3, -162, 9261).unwrap());
        assert_eq!(
            s.claimed_factors,
            vec![desc_i(&[1, 3, 21]), desc_i(&[1, -9, 21]), desc_i(&[1, 6, 21])]
        );
        assert!(s.identity_holds());
    }

    #[test]
    fn degenerate_locus_is_flagged() {
        // a quadratic factor becomes a square of a linear one
        assert!(one_sample(FamilyId::S6M3_222, &[r(1)]).degenerate);
        assert!(!one_sample(FamilyId::S6M3_222, &[r(3)]).degenerate);
    }

    #[test]
    fn degree_ten_example() {
        let s = one_sample(FamilyId::F10M2_33, &[r(2), r(3), r(2)]);
        assert_eq!(s.trinomial, Trinomial::from_ints(10, 2, 11, -12).unwrap());
        assert!(s.constraint_ok && s.identity_holds());
        assert_eq!(s.claimed_factors[0], desc_i(&[1, 0, -2, 0, 3]));
    }

    #[test]
    fn constraint_examples() {
        assert!(check_constraint(FamilyId::S6_123, &[q(13, 5), q(61, 25)]).unwrap());
        assert!(!check_constraint(FamilyId::Q5_122, &[q(1, 2)]).unwrap());
        assert!(check_constraint(FamilyId::F10M2_33, &[r(2), r(3), r(14)]).unwrap());
        assert!(!check_constraint(FamilyId::F10M2_33, &[r(2), r(3), r(15)]).unwrap());
    }

    #[test]
    fn excluded_values_are_not_errors() {
        let s = one_sample(FamilyId::Q4_112, &[r(0)]);
        assert!(!s.constraint_ok);
        let s = one_sample(FamilyId::Q5_122, &[q(1, 2)]);
        assert!(!s.constraint_ok && s.claimed_factors.is_empty());
    }

    #[test]
    fn wrong_arity_is_an_error() {
        assert!(matches!(
            generate(FamilyId::Q4_112, &[]),
            Err(FamilyError::Arity { expected: 1, got: 0, .. })
        ));
        assert!(generate(FamilyId::SPORADIC7, &[r(1)]).is_err());
    }

    #[test]
    fn fixed_families_expand_exactly() {
        for id in [
            FamilyId::S7M3_34,
            FamilyId::F10M4_33,
            FamilyId::F15M3,
            FamilyId::SPORADIC7,
        ] {
            for s in generate(id, &[]).unwrap() {
                assert!(s.identity_holds(), "{id}: {}", s.trinomial);
            }
        }
        for id in [FamilyId::O8M3_DIV, FamilyId::F12M3, FamilyId::F16M4] {
            for s in fixed_cases(id) {
                assert!(s.identity_holds(), "{id}: {}", s.trinomial);
            }
        }
    }

    #[test]
    fn corruption_breaks_identity() {
        let mut s = one_sample(FamilyId::Q4_112, &[r(2)]);
        Corruption::constant_off_by_one().apply(&mut s);
        assert!(!s.identity_holds());
    }

    #[test]
    fn last_parameter_solutions() {
        // listed w values on the degree-7 square condition
        assert_eq!(
            solve_last_parameter(FamilyId::S7_124, &[r(-1)], &r(2)),
            vec![r(1), q(3, 2)]
        );
        assert_eq!(
            solve_last_parameter(FamilyId::S7_124, &[q(7, 5)], &q(446, 125)),
            vec![q(13, 25), q(327, 200)]
        );
        // L = 0 on the degree-10 condition at (u, v) = (1, 2)
        assert_eq!(
            solve_last_parameter(FamilyId::D10M1_DIV, &[r(1), r(2)], &r(0)),
            vec![q(17, 14)]
        );
        // L = 0 on the degree-8 condition at v = -2
        assert_eq!(solve_last_parameter(FamilyId::O8M3_DIV, &[r(-2)], &r(7)), vec![q(-44, 7)]);
        // L = 0 on the degree-7 condition at v = 1/3
        assert_eq!(
            solve_last_parameter(FamilyId::S7_124, &[q(1, 3)], &q(14, 27)),
            vec![q(13, 9)]
        );
    }

    #[test]
    fn remainder_solutions_complete_the_identity() {
        let s = generate_one(FamilyId::S7_124, &[q(1, 3), q(13, 9)]).unwrap();
        assert!(s.constraint_ok && s.identity_holds());
        // v = u^2 is the L = 0 locus of the degree-9 condition, and lies on it
        for k in 1..6 {
            let (u, v) = (r(k), r(k * k));
            let s = eq7_poly(&u, &v).sqrt().unwrap();
            let ws = solve_last_parameter(FamilyId::N9M2_DIV, &[u.clone(), v.clone()], &s);
            assert!(!ws.is_empty(), "u = {k}");
            for w in ws {
                let sample = generate_one(FamilyId::N9M2_DIV, &[u.clone(), v.clone(), w.clone()]).unwrap();
                assert!(sample.identity_holds(), "u = {k}, w = {w}");
            }
        }
    }

    #[test]
    fn certificates_hold_off_the_curve() {
        let pts = [q(2, 3), q(-5, 7), r(4)];
        for id in FamilyId::ALL.iter().copied().filter(|&id| entry(id).constrained) {
            let arity = entry(id).params.len();
            let p = &pts[..arity];
            let s = one_sample(id, p);
            let (m, w) = identity_certificate(id, p).unwrap();
            let delta = constraint_residual(id, p).unwrap();
            let lhs = (&s.trinomial.poly() - &s.claimed_product()).scale(&m);
            assert_eq!(lhs, w.scale(&delta), "{id}");
            assert!(!delta.is_zero());
        }
    }
}
