//! Factorization over Q by the Zassenhaus route: primitive integer form,
//! squarefree decomposition, factorization mod a small prime, Hensel
//! lifting, and recombination of modular factors by exact trial division.
//!
//! Lift precision: with `F` the primitive squarefree part of degree `n` and
//! leading coefficient `lc`, the modulus `p^k` is the least power exceeding
//! `2 * |lc| * 2^n * ceil(||F||_2)`. Any factor of `F` scaled to leading
//! coefficient `lc` has coefficients below half of that.

mod hensel;
mod modp;
mod zpoly;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::Rational;
use crate::poly::Poly;

pub use hensel::hensel_lift;
pub use modp::{choose_prime, factor_mod_p, factor_mod_p_seeded, is_prime, ModPoly, DEFAULT_SEED};
pub use zpoly::IntPoly;

/// Largest degree accepted by [`factor_over_q`].
pub const MAX_DEGREE: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FactorError {
    #[error("cannot factor the zero polynomial")]
    ZeroPolynomial,
    #[error("degree {degree} exceeds the supported maximum {max}")]
    UnsupportedDegree { degree: usize, max: usize },
    #[error("polynomial is not squarefree modulo {0}")]
    NotSquarefreeModP(u64),
    #[error("{0} is not an odd prime coprime to the leading coefficient")]
    BadPrime(u64),
    #[error("modular factors are not pairwise coprime")]
    NotCoprime,
    #[error("modular factors do not multiply to the polynomial")]
    SeedMismatch,
}

/// `scalar * prod(poly^multiplicity)`, factors monic irreducible over Q.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub scalar: Rational,
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(self.scalar.clone()), |acc, (g, e)| &acc * &g.pow(*e))
    }

    /// Degrees of the factors repeated by multiplicity, nondecreasing.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|(g, e)| std::iter::repeat_n(g.degree().unwrap_or(0), *e as usize))
            .collect();
        d.sort_unstable();
        d
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Complete factorization of `f` over Q, for `deg f <= 16`.
pub fn factor_over_q(f: &Poly) -> Result<Factorization, FactorError> {
    let Some(deg) = f.degree() else {
        return Err(FactorError::ZeroPolynomial);
    };
    if deg > MAX_DEGREE {
        return Err(FactorError::UnsupportedDegree {
            degree: deg,
            max: MAX_DEGREE,
        });
    }
    factor_any_degree(f)
}

/// Rational roots of `f` with multiplicities, ascending.
pub fn rational_roots(f: &Poly) -> Vec<(Rational, u32)> {
    if f.is_zero() {
        return vec![];
    }
    let fac = factor_any_degree(f).expect("nonzero polynomial");
    let mut roots: Vec<(Rational, u32)> = fac
        .factors
        .into_iter()
        .filter(|(g, _)| g.degree() == Some(1))
        .map(|(g, e)| (-g.coeff(0), e))
        .collect();
    roots.sort();
    roots
}

fn factor_any_degree(f: &Poly) -> Result<Factorization, FactorError> {
    if f.is_zero() {
        return Err(FactorError::ZeroPolynomial);
    }
    let scalar = f.leading();
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(&f.monic()) {
        let int = IntPoly::from_rational(&part);
        for g in zassenhaus(&int)? {
            factors.push((g.to_rational().monic(), mult));
        }
    }
    factors.sort_by(|a, b| match a.0.canonical_cmp(&b.0) {
        Ordering::Equal => a.1.cmp(&b.1),
        o => o,
    });
    Ok(Factorization { scalar, factors })
}

/// Yun's algorithm on a monic polynomial: `f = prod a_i^i` with the `a_i`
/// monic, squarefree and pairwise coprime. Trivial parts are omitted.
pub fn squarefree_decomposition(f: &Poly) -> Vec<(Poly, u32)> {
    if f.degree().unwrap_or(0) == 0 {
        return vec![];
    }
    if looks_squarefree(f) {
        return vec![(f.monic(), 1)];
    }
    let df = f.derivative();
    let a0 = Poly::gcd(f, &df);
    let mut b = f.exact_div(&a0).expect("gcd divides f");
    let c = df.exact_div(&a0).expect("gcd divides f'");
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = Poly::gcd(&b, &d);
        let nb = b.exact_div(&a).expect("gcd divides b");
        let c = d.exact_div(&a).expect("gcd divides d");
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.monic(), i));
        }
        d = &c - &nb.derivative();
        b = nb;
        i += 1;
    }
    out
}

/// Sufficient test: squarefree modulo some small prime implies squarefree.
fn looks_squarefree(f: &Poly) -> bool {
    let int = IntPoly::from_rational(f);
    let lc = int.leading();
    (3u64..200)
        .filter(|&p| is_prime(p))
        .filter(|&p| (&lc % BigInt::from(p)) != BigInt::from(0))
        .take(8)
        .any(|p| ModPoly::from_int_poly(&int, p).is_squarefree())
}

/// Irreducible factors over Z of a primitive squarefree `f` with positive
/// leading coefficient, each primitive with positive leading coefficient.
fn zassenhaus(f: &IntPoly) -> Result<Vec<IntPoly>, FactorError> {
    let n = match f.degree() {
        None | Some(0) => return Ok(vec![]),
        Some(1) => return Ok(vec![f.clone()]),
        Some(n) => n,
    };
    let p = choose_prime(f);
    let modular = factor_mod_p(f, p)?;
    if modular.len() == 1 {
        return Ok(vec![f.clone()]);
    }
    let bound = BigInt::from(2) * f.leading().abs() * (BigInt::one() << n) * f.norm2_ceil();
    let pb = BigInt::from(p);
    let mut pk = pb.clone();
    let mut k = 1u32;
    while pk <= bound {
        pk *= &pb;
        k += 1;
    }
    let lifted = hensel_lift(f, &modular, p, k)?;
    Ok(recombine(f, lifted, &pk))
}

fn recombine(f: &IntPoly, mut pool: Vec<IntPoly>, pk: &BigInt) -> Vec<IntPoly> {
    let mut found = Vec::new();
    let mut rest = f.clone();
    let mut s = 1;
    'outer: while 2 * s <= pool.len() {
        let mut idx: Vec<usize> = (0..s).collect();
        loop {
            let lc = rest.leading();
            let cand = idx
                .iter()
                .fold(IntPoly::new(vec![lc]), |acc, &i| acc.mul(&pool[i]).reduce(pk))
                .reduce_symmetric(pk)
                .primitive_part();
            if let Some(quot) = rest.exact_div(&cand) {
                found.push(cand);
                rest = quot;
                for &i in idx.iter().rev() {
                    pool.remove(i);
                }
                continue 'outer;
            }
            if !next_combination(&mut idx, pool.len()) {
                break;
            }
        }
        s += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        found.push(rest.primitive_part());
    }
    found
}

/// Advances `idx` to the next `idx.len()`-subset of `0..n` in lexicographic
/// order. Returns `false` after the last one.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let s = idx.len();
    for i in (0..s).rev() {
        if idx[i] < n - s + i {
            idx[i] += 1;
            for j in i + 1..s {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn combinations_in_lex_order() {
        let mut idx = vec![0, 1];
        let mut seen = vec![idx.clone()];
        while next_combination(&mut idx, 4) {
            seen.push(idx.clone());
        }
        assert_eq!(
            seen,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
    }

    #[test]
    fn quintic_with_one_rational_root() {
        let f = p(&[780, -341, 0, 0, 0, 1]);
        let fac = factor_over_q(&f).unwrap();
        assert_eq!(fac.degrees(), vec![1, 2, 2]);
        assert_eq!(fac.expand(), f);
        assert_eq!(rational_roots(&f), vec![(q(3, 1), 1)]);
    }

    #[test]
    fn sextic_display_factorization() {
        let f = p(&[82655, -19656, 0, 0, 0, 0, 1]);
        let fac = factor_over_q(&f).unwrap();
        let want = vec![
            (p(&[-5, 1]), 1),
            (p(&[61, 13, 1]), 1),
            (p(&[-271, 68, -8, 1]), 1),
        ];
        assert_eq!(fac.factors, want);
        assert!(fac.scalar.is_one());
    }

    #[test]
    fn degree_fifteen_splits_five_ten() {
        let mut c = vec![0i64; 16];
        c[0] = 216;
        c[3] = -81;
        c[15] = 1;
        let f = p(&c);
        let fac = factor_over_q(&f).unwrap();
        assert_eq!(fac.degrees(), vec![5, 10]);
        assert_eq!(fac.expand(), f);
    }

    #[test]
    fn x2_plus_nonsquare_irreducible() {
        for k in [2, 3, 5, 7, 8] {
            let fac = factor_over_q(&p(&[k, 0, 1])).unwrap();
            assert!(fac.is_irreducible());
        }
        assert!(rational_roots(&p(&[1, 0, 1])).is_empty());
    }

    #[test]
    fn repeated_factors_keep_multiplicity() {
        let f = &(p(&[-1, 1]).pow(3)) * &(p(&[1, 0, 1]).pow(2));
        let fac = factor_over_q(&f).unwrap();
        assert_eq!(fac.factors, vec![(p(&[-1, 1]), 3), (p(&[1, 0, 1]), 2)]);
    }

    #[test]
    fn non_monic_and_rational_input() {
        // 6x^2 - x - 1 = 6 (x - 1/2)(x + 1/3)
        let f = p(&[-1, -1, 6]);
        let fac = factor_over_q(&f).unwrap();
        assert_eq!(fac.scalar, q(6, 1));
        assert_eq!(
            fac.factors,
            vec![
                (Poly::new(vec![q(-1, 2), q(1, 1)]), 1),
                (Poly::new(vec![q(1, 3), q(1, 1)]), 1)
            ]
        );
        assert_eq!(rational_roots(&f), vec![(q(-1, 3), 1), (q(1, 2), 1)]);
    }

    #[test]
    fn quartic_two_rational_roots() {
        assert_eq!(
            rational_roots(&p(&[14, -15, 0, 0, 1])),
            vec![(q(1, 1), 1), (q(2, 1), 1)]
        );
    }

    #[test]
    fn constants_and_errors() {
        let fac = factor_over_q(&p(&[7])).unwrap();
        assert!(fac.factors.is_empty());
        assert_eq!(fac.scalar, q(7, 1));
        assert_eq!(factor_over_q(&Poly::zero()), Err(FactorError::ZeroPolynomial));
        let mut c = vec![0i64; 18];
        c[0] = 1;
        c[17] = 1;
        assert_eq!(
            factor_over_q(&p(&c)),
            Err(FactorError::UnsupportedDegree { degree: 17, max: 16 })
        );
    }

    #[test]
    fn swinnerton_dyer_style_many_modular_factors() {
        // x^8 - 40x^6 + 352x^4 - 960x^2 + 576 (min poly of √2+√3+√5) is
        // irreducible but splits into linear/quadratic pieces mod every prime.
        let f = p(&[576, 0, -960, 0, 352, 0, -40, 0, 1]);
        assert!(factor_over_q(&f).unwrap().is_irreducible());
    }
}
