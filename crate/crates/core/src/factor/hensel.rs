//! Linear multifactor Hensel lifting.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::modp::ModPoly;
use super::zpoly::IntPoly;
use super::FactorError;

/// Lifts monic modular factors of `f` from mod `p` to mod `p^k`.
///
/// Preconditions: the seeds are monic, pairwise coprime mod `p`, and
/// `lc(f) * prod(seeds) ≡ f (mod p)`. The result is monic factors with
/// coefficients in `[0, p^k)` satisfying `lc(f) * prod ≡ f (mod p^k)`, each
/// congruent to its seed mod `p`.
pub fn hensel_lift(
    f: &IntPoly,
    seeds: &[ModPoly],
    p: u64,
    k: u32,
) -> Result<Vec<IntPoly>, FactorError> {
    assert!(k >= 1);
    let pb = BigInt::from(p);
    let lc_p = ModPoly::from_int_poly(&IntPoly::new(vec![f.leading()]), p);
    let prod = seeds.iter().fold(lc_p, |acc, g| acc.mul(g));
    if prod != ModPoly::from_int_poly(f, p) {
        return Err(FactorError::SeedMismatch);
    }
    if seeds.is_empty() {
        return Ok(vec![]);
    }
    let pk = num_traits::pow(pb.clone(), k as usize);
    let mut out = Vec::with_capacity(seeds.len());
    let mut target = f.reduce(&pk);
    for (i, seed) in seeds.iter().enumerate() {
        if i + 1 == seeds.len() {
            out.push(make_monic(&target, &pk));
            break;
        }
        let lc = ModPoly::from_int_poly(&IntPoly::new(vec![target.leading()]), p);
        let rest = seeds[i + 1..].iter().fold(lc, |acc, g| acc.mul(g));
        let (g, h) = lift_pair(&target, seed, &rest, p, k)?;
        out.push(g);
        target = h;
    }
    Ok(out)
}

/// Lifts `f ≡ g0 * h0 (mod p)` with `g0` monic to `f ≡ g * h (mod p^k)`.
fn lift_pair(
    f: &IntPoly,
    g0: &ModPoly,
    h0: &ModPoly,
    p: u64,
    k: u32,
) -> Result<(IntPoly, IntPoly), FactorError> {
    let (gcd, s, t) = ModPoly::ext_gcd(g0, h0);
    if !gcd.is_one() {
        return Err(FactorError::NotCoprime);
    }
    let pb = BigInt::from(p);
    let mut g = g0.to_int_poly();
    // h carries lc(f) exactly so f - g*h never gains a top term.
    let mut h = with_leading(&h0.to_int_poly(), &f.leading());
    let mut pj = BigInt::one();
    for _ in 1..k {
        pj *= &pb;
        let diff = f.sub(&g.mul(&h));
        let e = divide_exact(&diff, &pj);
        let e = ModPoly::from_int_poly(&e, p);
        if e.is_zero() {
            continue;
        }
        let te = t.mul(&e);
        let (qt, dg) = te.divrem(g0);
        let dh = s.mul(&e).add(&qt.mul(h0));
        let next = &pj * &pb;
        g = add_scaled(&g, &dg.to_int_poly(), &pj).reduce(&next);
        h = add_scaled(&h, &dh.to_int_poly(), &pj).reduce(&next);
        h = with_leading(&h, &f.leading().mod_floor(&next));
    }
    let pk = pj * pb;
    Ok((g.reduce(&pk), h.reduce(&pk)))
}

fn with_leading(h: &IntPoly, lc: &BigInt) -> IntPoly {
    let mut c = h.coeffs().to_vec();
    if let Some(last) = c.last_mut() {
        *last = lc.clone();
    }
    IntPoly::new(c)
}

fn divide_exact(f: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let (q, r) = c.div_rem(m);
                debug_assert!(r.is_zero(), "Hensel invariant violated");
                q
            })
            .collect(),
    )
}

fn add_scaled(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    let n = a.coeffs().len().max(b.coeffs().len());
    let z = BigInt::zero();
    IntPoly::new(
        (0..n)
            .map(|i| a.coeffs().get(i).unwrap_or(&z) + b.coeffs().get(i).unwrap_or(&z) * m)
            .collect(),
    )
}

fn make_monic(f: &IntPoly, m: &BigInt) -> IntPoly {
    let inv = mod_inverse(&f.leading(), m).expect("leading coefficient is a unit mod p^k");
    f.scale(&inv).reduce(m)
}

pub(crate) fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}
