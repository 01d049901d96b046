//! Little-endian polynomials over ℚ as plain coefficient vectors, used for
//! number-field element arithmetic (reduction modulo the defining polynomial).

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type QPoly = Vec<BigRational>;

pub fn trim(v: &mut QPoly) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

pub fn sub(a: &[BigRational], b: &[BigRational]) -> QPoly {
    let n = a.len().max(b.len());
    let zero = BigRational::zero();
    let mut out: QPoly = (0..n)
        .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
        .collect();
    trim(&mut out);
    out
}

pub fn mul(a: &[BigRational], b: &[BigRational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub fn divrem(a: &[BigRational], b: &[BigRational]) -> (QPoly, QPoly) {
    assert!(!b.is_empty(), "polynomial division by zero over Q");
    let mut r: QPoly = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let db = b.len() - 1;
    let lead = b.last().unwrap().clone();
    let mut q = vec![BigRational::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let c = &r[k + db] / &lead;
        if !c.is_zero() {
            for (j, y) in b.iter().enumerate() {
                r[k + j] -= &c * y;
            }
        }
        q[k] = c;
    }
    trim(&mut q);
    trim(&mut r);
    (q, r)
}

/// `(g, s)` with `s*a ≡ g (mod m)`, `g` monic. Only the `a`-cofactor is tracked.
pub fn half_ext_gcd(a: &[BigRational], m: &[BigRational]) -> (QPoly, QPoly) {
    let (mut r0, mut r1) = (a.to_vec(), m.to_vec());
    trim(&mut r0);
    trim(&mut r1);
    let (mut s0, mut s1): (QPoly, QPoly) = (vec![BigRational::one()], Vec::new());
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if let Some(lc) = r0.last().cloned() {
        r0.iter_mut().for_each(|c| *c /= &lc);
        s0.iter_mut().for_each(|c| *c /= &lc);
    }
    (r0, s0)
}
