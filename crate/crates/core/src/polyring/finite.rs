//! Factorization over GF(q): squarefree split, distinct-degree, then
//! Cantor–Zassenhaus equal-degree splitting driven by a seeded ChaCha stream.

use num_bigint::BigUint;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{squarefree_decomposition, Poly};

pub(super) fn factor_monic(f: &Poly, seed: u64) -> Vec<(Poly, u32)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(f) {
        for (g, d) in distinct_degree(&part) {
            for h in equal_degree(&g, d, &mut rng) {
                out.push((h, mult));
            }
        }
    }
    out
}

pub(super) fn is_irreducible_monic(f: &Poly) -> bool {
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return false;
    }
    if !f.gcd(&f.derivative()).is_one() {
        return false;
    }
    let dd = distinct_degree(f);
    dd.len() == 1 && dd[0].1 == n
}

pub(super) fn roots_monic(f: &Poly, seed: u64) -> Vec<crate::fieldtower::FieldElem> {
    let field = f.field().clone();
    let q = field.order().unwrap();
    let x = Poly::x(field.clone());
    let lin = x.powmod(q, f).sub(&x).gcd(f);
    let lin = if lin.is_zero() { f.clone() } else { lin };
    if lin.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    equal_degree(&lin, 1, &mut rng)
        .into_iter()
        .map(|g| field.neg(&g.coeffs()[0]))
        .collect()
}

/// Splits a monic squarefree `f` into `(product of all degree-d factors, d)`.
fn distinct_degree(f: &Poly) -> Vec<(Poly, usize)> {
    let field = f.field().clone();
    let q = field.order().unwrap();
    let x = Poly::x(field);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut d = 0;
    while rest.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = h.powmod(q, &rest);
        let g = h.sub(&x).gcd(&rest);
        if g.degree().unwrap_or(0) > 0 {
            rest = rest.quo(&g);
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    if let Some(n) = rest.degree().filter(|&n| n > 0) {
        out.push((rest, n));
    }
    out
}

/// Splits a product of distinct monic irreducibles of degree `d`.
fn equal_degree(f: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let n = f.degree().unwrap();
    if n == d {
        return vec![f.clone()];
    }
    let field = f.field().clone();
    let q = field.order().unwrap();
    let p = field.characteristic();
    loop {
        let a = Poly::new(field.clone(), (0..n).map(|_| field.random(rng)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // trace to GF(2): a + a^2 + ... + a^(2^(k d - 1)), q = 2^k
            let k = q.trailing_zeros() as usize;
            let mut acc = a.rem(f);
            let mut cur = acc.clone();
            for _ in 1..k * d {
                cur = cur.mulmod(&cur, f);
                acc = acc.add(&cur);
            }
            acc
        } else {
            let e = (BigUint::from(q).pow(d as u32) - BigUint::one()) >> 1;
            a.powmod_big(&e, f).sub(&Poly::one(field.clone()))
        };
        let g = b.gcd(f);
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&f.quo(&g), d, rng));
            return out;
        }
    }
}
