//! Polynomials over the prime field F_p and their complete factorization
//! (distinct-degree, then Cantor–Zassenhaus equal-degree splitting).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::zpoly::IntPoly;
use super::FactorError;

/// Seed for the equal-degree splitting generator.
pub const DEFAULT_SEED: u64 = 0;

/// Polynomial over F_p with ascending coefficients in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl ModPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { p, coeffs }
    }

    pub fn from_int_poly(f: &IntPoly, p: u64) -> Self {
        let m = BigInt::from(p);
        ModPoly::new(
            p,
            f.coeffs()
                .iter()
                .map(|c| c.mod_floor(&m).to_u64().expect("reduced below p"))
                .collect(),
        )
    }

    pub fn to_int_poly(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    fn zero(p: u64) -> Self {
        ModPoly { p, coeffs: vec![] }
    }

    fn one(p: u64) -> Self {
        ModPoly { p, coeffs: vec![1] }
    }

    fn x(p: u64) -> Self {
        ModPoly { p, coeffs: vec![0, 1] }
    }

    fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.leading(), self.p);
        self.scale(inv)
    }

    pub fn scale(&self, c: u64) -> Self {
        ModPoly::new(self.p, self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)).collect())
    }

    pub fn add(&self, o: &ModPoly) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        ModPoly::new(
            self.p,
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).copied().unwrap_or(0);
                    let b = o.coeffs.get(i).copied().unwrap_or(0);
                    (a + b) % self.p
                })
                .collect(),
        )
    }

    pub fn sub(&self, o: &ModPoly) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        ModPoly::new(
            self.p,
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).copied().unwrap_or(0);
                    let b = o.coeffs.get(i).copied().unwrap_or(0);
                    (a + self.p - b) % self.p
                })
                .collect(),
        )
    }

    pub fn mul(&self, o: &ModPoly) -> Self {
        if self.is_zero() || o.is_zero() {
            return ModPoly::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, self.p)) % self.p;
            }
        }
        ModPoly::new(self.p, out)
    }

    pub fn divrem(&self, d: &ModPoly) -> (ModPoly, ModPoly) {
        let dd = d.degree().expect("division by zero polynomial mod p");
        let Some(ds) = self.degree() else {
            return (ModPoly::zero(self.p), ModPoly::zero(self.p));
        };
        if ds < dd {
            return (ModPoly::zero(self.p), self.clone());
        }
        let p = self.p;
        let inv = inv_mod(d.leading(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; ds - dd + 1];
        for i in (0..=ds - dd).rev() {
            let c = mul_mod(rem[i + dd], inv, p);
            if c == 0 {
                continue;
            }
            for (j, &b) in d.coeffs.iter().enumerate() {
                rem[i + j] = (rem[i + j] + p - mul_mod(c, b, p)) % p;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (ModPoly::new(p, quot), ModPoly::new(p, rem))
    }

    pub fn rem(&self, d: &ModPoly) -> ModPoly {
        self.divrem(d).1
    }

    pub fn derivative(&self) -> ModPoly {
        ModPoly::new(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % self.p, self.p))
                .collect(),
        )
    }

    /// Monic gcd.
    pub fn gcd(a: &ModPoly, b: &ModPoly) -> ModPoly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = x.rem(&y);
            x = y;
            y = r;
        }
        x.monic()
    }

    /// Returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
    pub fn ext_gcd(a: &ModPoly, b: &ModPoly) -> (ModPoly, ModPoly, ModPoly) {
        let p = a.p;
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (ModPoly::one(p), ModPoly::zero(p));
        let (mut t0, mut t1) = (ModPoly::zero(p), ModPoly::one(p));
        while !r1.is_zero() {
            let (qt, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&qt.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&qt.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = inv_mod(r0.leading(), p);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, e: &BigUint, m: &ModPoly) -> ModPoly {
        let mut result = ModPoly::one(self.p);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            result = result.mul(&result).rem(m);
            if e.bit(i) {
                result = result.mul(&base).rem(m);
            }
        }
        result
    }

    pub fn is_squarefree(&self) -> bool {
        ModPoly::gcd(self, &self.derivative()).degree() == Some(0)
    }

    fn lex_key(&self) -> (usize, Vec<u64>) {
        (self.coeffs.len(), self.coeffs.clone())
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod_u64(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "inverse of zero mod {p}");
    pow_mod_u64(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Complete factorization of `f` over F_p into distinct monic irreducibles,
/// sorted by degree then coefficients. `p` must be an odd prime not dividing
/// the leading coefficient, and `f` must be squarefree mod `p`.
pub fn factor_mod_p(f: &IntPoly, p: u64) -> Result<Vec<ModPoly>, FactorError> {
    factor_mod_p_seeded(f, p, DEFAULT_SEED)
}

pub fn factor_mod_p_seeded(f: &IntPoly, p: u64, seed: u64) -> Result<Vec<ModPoly>, FactorError> {
    if p < 3 || !is_prime(p) {
        return Err(FactorError::BadPrime(p));
    }
    let fp = ModPoly::from_int_poly(f, p);
    if fp.degree() != f.degree() {
        return Err(FactorError::BadPrime(p));
    }
    if fp.degree() == Some(0) {
        return Ok(vec![]);
    }
    if !fp.is_squarefree() {
        return Err(FactorError::NotSquarefreeModP(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (g, d) in distinct_degree(&fp.monic()) {
        equal_degree(&g, d, &mut rng, &mut out);
    }
    out.sort_by_key(ModPoly::lex_key);
    Ok(out)
}

/// Splits a monic squarefree `f` into products of irreducibles of equal degree.
fn distinct_degree(f: &ModPoly) -> Vec<(ModPoly, usize)> {
    let p = f.p;
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = ModPoly::x(p);
    let pe = BigUint::from(p);
    let mut d = 0;
    while let Some(deg) = rest.degree() {
        if deg < 2 * (d + 1) {
            if deg > 0 {
                out.push((rest.clone(), deg));
            }
            break;
        }
        d += 1;
        h = h.pow_mod(&pe, &rest);
        let g = ModPoly::gcd(&h.sub(&ModPoly::x(p)), &rest);
        if g.degree().unwrap_or(0) > 0 {
            rest = rest.divrem(&g).0;
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    out
}

/// Cantor–Zassenhaus splitting of a product of degree-`d` irreducibles.
fn equal_degree(g: &ModPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<ModPoly>) {
    let n = g.degree().unwrap_or(0);
    if n == 0 {
        return;
    }
    if n == d {
        out.push(g.monic());
        return;
    }
    let p = g.p;
    let exp = (num_traits::pow(BigUint::from(p), d) - BigUint::one()) / BigUint::from(2u32);
    loop {
        let a = ModPoly::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let direct = ModPoly::gcd(&a, g);
        let split = if direct.degree().unwrap_or(0) > 0 && direct.degree() != g.degree() {
            direct
        } else {
            let b = a.pow_mod(&exp, g).sub(&ModPoly::one(p));
            ModPoly::gcd(&b, g)
        };
        let sd = split.degree().unwrap_or(0);
        if sd > 0 && sd < n {
            let other = g.divrem(&split).0;
            equal_degree(&split, d, rng, out);
            equal_degree(&other, d, rng, out);
            return;
        }
    }
}

/// Smallest prime `>= 3` not dividing the leading coefficient for which `f`
/// stays squarefree.
pub fn choose_prime(f: &IntPoly) -> u64 {
    let lc = f.leading();
    let mut p = 3u64;
    loop {
        if is_prime(p) && !(&lc % BigInt::from(p)).is_zero() {
            let fp = ModPoly::from_int_poly(f, p);
            if fp.is_squarefree() {
                return p;
            }
        }
        p += 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roots_mod(f: &IntPoly, p: u64) -> Vec<u64> {
        let fp = ModPoly::from_int_poly(f, p);
        (0..p)
            .filter(|&x| {
                fp.coeffs()
                    .iter()
                    .rev()
                    .fold(0u64, |acc, &c| (mul_mod(acc, x, p) + c) % p)
                    == 0
            })
            .collect()
    }

    #[test]
    fn x2_plus_1_mod_5_splits() {
        let f = IntPoly::from_i64s(&[1, 0, 1]);
        // exhaustive oracle: roots 2 and 3
        assert_eq!(roots_mod(&f, 5), vec![2, 3]);
        let fs = factor_mod_p(&f, 5).unwrap();
        assert_eq!(fs, vec![ModPoly::new(5, vec![2, 1]), ModPoly::new(5, vec![3, 1])]);
    }

    #[test]
    fn x2_plus_1_mod_3_irreducible() {
        let f = IntPoly::from_i64s(&[1, 0, 1]);
        assert!(roots_mod(&f, 3).is_empty());
        assert_eq!(factor_mod_p(&f, 3).unwrap(), vec![ModPoly::new(3, vec![1, 0, 1])]);
    }

    #[test]
    fn x_is_its_own_factor() {
        let f = IntPoly::from_i64s(&[0, 1]);
        for p in [3, 5, 7, 11] {
            assert_eq!(factor_mod_p(&f, p).unwrap(), vec![ModPoly::new(p, vec![0, 1])]);
        }
    }

    #[test]
    fn rejects_non_squarefree_and_bad_primes() {
        let f = IntPoly::from_i64s(&[1, 2, 1]);
        assert_eq!(factor_mod_p(&f, 3), Err(FactorError::NotSquarefreeModP(3)));
        let g = IntPoly::from_i64s(&[1, 0, 3]);
        assert_eq!(factor_mod_p(&g, 3), Err(FactorError::BadPrime(3)));
        assert_eq!(factor_mod_p(&g, 9), Err(FactorError::BadPrime(9)));
    }

    #[test]
    fn product_of_factors_matches() {
        // x^8 - 3x^3 - 1 mod 7
        let f = IntPoly::from_i64s(&[-1, 0, 0, -3, 0, 0, 0, 0, 1]);
        let fs = factor_mod_p(&f, 7).unwrap();
        let prod = fs.iter().fold(ModPoly::new(7, vec![1]), |a, g| a.mul(g));
        assert_eq!(prod, ModPoly::from_int_poly(&f, 7).monic());
    }

    #[test]
    fn output_is_seed_independent_after_sorting() {
        let f = IntPoly::from_i64s(&[780, -341, 0, 0, 0, 1]);
        let p = choose_prime(&f);
        let a = factor_mod_p_seeded(&f, p, 0).unwrap();
        let b = factor_mod_p_seeded(&f, p, 12345).unwrap();
        assert_eq!(a, b);
    }
}
