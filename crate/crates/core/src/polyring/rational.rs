//! Factorization over ℚ: squarefree split, then Zassenhaus (factor modulo a
//! small prime, Hensel lift, recombine subsets of the lifted factors).

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{finite, squarefree_decomposition, Poly};
use crate::fieldtower::{fp, Field, FieldElem};

type ZPoly = Vec<BigInt>;

pub(super) fn factor_monic(f: &Poly) -> Vec<(Poly, u32)> {
    let q = f.field().clone();
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(f) {
        for g in factor_squarefree_z(&to_primitive_z(&part)) {
            out.push((from_z(&q, &g).monic(), mult));
        }
    }
    out
}

/// Primitive integer multiple of a polynomial over ℚ, positive leading coefficient.
pub(crate) fn to_primitive_z(f: &Poly) -> ZPoly {
    let rats: Vec<BigRational> = f
        .coeffs()
        .iter()
        .map(|c| match c {
            FieldElem::Q(r) => r.clone(),
            _ => unreachable!("rational coefficients expected"),
        })
        .collect();
    let den = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: ZPoly = rats.iter().map(|r| (r * &den).to_integer()).collect();
    primitive_part(&ints)
}

pub(crate) fn from_z(q: &Field, g: &[BigInt]) -> Poly {
    Poly::new(
        q.clone(),
        g.iter().map(|c| FieldElem::Q(BigRational::from_integer(c.clone()))).collect(),
    )
}

fn trim(v: &mut ZPoly) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn primitive_part(a: &[BigInt]) -> ZPoly {
    let mut v = a.to_vec();
    trim(&mut v);
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return v;
    }
    let sign = if v.last().unwrap().is_negative() { -g } else { g };
    v.iter().map(|c| c / &sign).collect()
}

fn mul_z(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Exact quotient `a / b` over ℤ, or `None` if `b` does not divide `a`.
fn div_exact_z(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    if r.len() < b.len() {
        return if r.is_empty() { Some(Vec::new()) } else { None };
    }
    let lb = b.last().unwrap();
    let mut q = vec![BigInt::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let (c, rem) = r[k + db].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        if !c.is_zero() {
            for (j, y) in b.iter().enumerate() {
                r[k + j] -= &c * y;
            }
        }
        q[k] = c;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(q)
}

fn reduce_mod_p(a: &[BigInt], p: u64) -> Vec<u64> {
    let m = BigInt::from(p);
    let mut v: Vec<u64> = a.iter().map(|c| c.mod_floor(&m).to_u64().unwrap()).collect();
    fp::trim(&mut v);
    v
}

fn mod_floor_all(a: &[BigInt], m: &BigInt) -> ZPoly {
    let mut v: ZPoly = a.iter().map(|c| c.mod_floor(m)).collect();
    trim(&mut v);
    v
}

fn from_fp(a: &[u64]) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).filter(|&n| fp::is_prime(n))
}

/// Irreducible factors over ℤ of a primitive squarefree polynomial.
fn factor_squarefree_z(g: &[BigInt]) -> Vec<ZPoly> {
    let n = g.len() - 1;
    if n <= 1 {
        return vec![g.to_vec()];
    }
    // x-power content: g squarefree means at most one factor X
    if g[0].is_zero() {
        let rest = g[1..].to_vec();
        let mut out = vec![vec![BigInt::zero(), BigInt::one()]];
        out.extend(factor_squarefree_z(&rest));
        return out;
    }
    let lc = g.last().unwrap().clone();
    // choose, among the first few usable primes, one with fewest modular factors
    let mut best: Option<(u64, Vec<Vec<u64>>)> = None;
    let mut tried = 0;
    for p in small_primes() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let gp = reduce_mod_p(g, p);
        if fp::gcd(&gp, &fp::derivative(&gp, p), p).len() > 1 {
            continue;
        }
        let fld = Field::prime(p).unwrap();
        let poly = Poly::new(fld.clone(), gp.iter().map(|&c| fld.from_prime_field(c)).collect()).monic();
        let facs: Vec<Vec<u64>> = finite::factor_monic(&poly, crate::DEFAULT_SEED)
            .into_iter()
            .map(|(h, _)| {
                h.coeffs()
                    .iter()
                    .map(|c| match c {
                        FieldElem::Ff(v) => v[0],
                        _ => unreachable!(),
                    })
                    .collect()
            })
            .collect();
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried >= 5 || best.as_ref().unwrap().1.len() == 1 {
            break;
        }
    }
    let (p, facs) = best.unwrap();
    if facs.len() == 1 {
        return vec![g.to_vec()];
    }
    // coefficient bound for factors of lc·g
    let maxc = g.iter().map(|c| c.abs()).max().unwrap();
    let bound = (BigInt::one() << n) * BigInt::from(n + 1) * maxc * lc.abs();
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut modulus = pb.clone();
    while modulus <= &bound * 2 {
        modulus *= &pb;
        k += 1;
    }
    let lifted = lift_all(g, &facs, &lc, p, k);
    recombine(g.to_vec(), lifted, &modulus)
}

/// Lifts `target ≡ lc · ∏ factors (mod p)` to monic factors modulo `p^k`.
fn lift_all(target: &[BigInt], factors: &[Vec<u64>], lc: &BigInt, p: u64, k: u32) -> Vec<ZPoly> {
    let m = BigInt::from(p).pow(k);
    if factors.len() == 1 {
        let inv = mod_inverse(lc, &m);
        let f: ZPoly = target.iter().map(|c| c * &inv).collect();
        return vec![mod_floor_all(&f, &m)];
    }
    let half = factors.len() / 2;
    let a0 = factors[..half].iter().fold(vec![1u64], |acc, f| fp::mul(&acc, f, p));
    let lcp = lc.mod_floor(&BigInt::from(p)).to_u64().unwrap();
    let b0 = factors[half..]
        .iter()
        .fold(vec![lcp], |acc, f| fp::mul(&acc, f, p));
    let (a, b) = lift_pair(target, &a0, &b0, p, k);
    let mut out = lift_all(&a, &factors[..half], &BigInt::one(), p, k);
    out.extend(lift_all(&b, &factors[half..], lc, p, k));
    out
}

/// Linear Hensel lifting of `f ≡ g0·h0 (mod p)`, `g0` monic, to `p^k`.
fn lift_pair(f: &[BigInt], g0: &[u64], h0: &[u64], p: u64, k: u32) -> (ZPoly, ZPoly) {
    let (one, _, t) = fp::ext_gcd(g0, h0, p);
    debug_assert_eq!(one, vec![1]);
    let mut g = from_fp(g0);
    let mut h = from_fp(h0);
    // keep deg(f - g·h) below deg f throughout
    *h.last_mut().unwrap() = f.last().unwrap().clone();
    let pb = BigInt::from(p);
    let mut pj = pb.clone();
    for _ in 1..k {
        let diff: ZPoly = {
            let gh = mul_z(&g, &h);
            let n = f.len().max(gh.len());
            let zero = BigInt::zero();
            (0..n)
                .map(|i| f.get(i).unwrap_or(&zero) - gh.get(i).unwrap_or(&zero))
                .collect()
        };
        let e: ZPoly = diff.iter().map(|c| c / &pj).collect();
        let ep = reduce_mod_p(&e, p);
        let dg = fp::rem(&fp::mul(&t, &ep, p), g0, p);
        let (dh, r) = fp::divrem(&fp::sub(&ep, &fp::mul(h0, &dg, p), p), g0, p);
        debug_assert!(r.is_empty());
        for (i, c) in dg.iter().enumerate() {
            g[i] += &pj * BigInt::from(*c);
        }
        for (i, c) in dh.iter().enumerate() {
            if i >= h.len() {
                h.push(BigInt::zero());
            }
            h[i] += &pj * BigInt::from(*c);
        }
        pj *= &pb;
        g = mod_floor_all(&g, &pj);
        h = mod_floor_all(&h, &pj);
        *h.last_mut().unwrap() = f.last().unwrap().clone();
    }
    (g, h)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn recombine(mut g: ZPoly, lifted: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut remaining: Vec<ZPoly> = lifted;
    let mut out = Vec::new();
    let mut s = 1;
    'outer: while 2 * s <= remaining.len() {
        let lc = g.last().unwrap().clone();
        for subset in (0..remaining.len()).combinations(s) {
            let prod = subset
                .iter()
                .fold(vec![lc.clone()], |acc, &i| mod_floor_all(&mul_z(&acc, &remaining[i]), modulus));
            let cand: ZPoly = prod.iter().map(|c| symmetric(c, modulus)).collect();
            let cand = primitive_part(&cand);
            if cand[0].is_zero() || !(&g[0] % &cand[0]).is_zero() {
                continue;
            }
            if let Some(q) = div_exact_z(&g, &cand) {
                out.push(cand);
                g = q;
                for &i in subset.iter().rev() {
                    remaining.remove(i);
                }
                continue 'outer;
            }
        }
        s += 1;
    }
    if g.len() > 1 {
        out.push(primitive_part(&g));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qpoly(v: &[i64]) -> Poly {
        let q = Field::rationals();
        Poly::new(q, v.iter().map(|&c| FieldElem::Q(BigRational::from_integer(c.into()))).collect())
    }

    #[test]
    fn swinnerton_dyer_like_irreducible() {
        // x^4 - 10x^2 + 1 splits modulo every prime into factors of degree <= 2
        let f = qpoly(&[1, 0, -10, 0, 1]);
        let fac = factor_monic(&f);
        assert_eq!(fac.len(), 1);
        assert_eq!(fac[0].0, f);
    }

    #[test]
    fn product_with_large_coefficients() {
        let a = qpoly(&[7, -3, 2]);
        let b = qpoly(&[-11, 0, 0, 5]);
        let c = qpoly(&[1, 1]);
        let f = a.mul(&b).mul(&c).mul(&c);
        let fac = factor_monic(&f.monic());
        let mut degs: Vec<(usize, u32)> = fac.iter().map(|(g, e)| (g.degree().unwrap(), *e)).collect();
        degs.sort();
        assert_eq!(degs, vec![(1, 2), (2, 1), (3, 1)]);
    }
}
