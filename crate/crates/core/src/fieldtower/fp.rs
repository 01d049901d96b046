//! Dense polynomials over a prime field GF(p) with `u64` coefficients.
//!
//! This is the substrate for finite-field element arithmetic (reduction modulo
//! the defining polynomial) and for numerators/denominators of rational
//! functions in `t`. Vectors are little-endian and always trimmed, so the zero
//! polynomial is the empty vector.

pub type FpPoly = Vec<u64>;

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue. Panics on zero.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverse of zero in GF({p})");
    pow_mod(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors by trial division.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn trim(v: &mut FpPoly) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub fn degree(a: &[u64]) -> Option<usize> {
    if a.is_empty() {
        None
    } else {
        Some(a.len() - 1)
    }
}

pub fn add(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    let mut out: FpPoly = (0..n)
        .map(|i| add_mod(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), p))
        .collect();
    trim(&mut out);
    out
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    let mut out: FpPoly = (0..n)
        .map(|i| sub_mod(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), p))
        .collect();
    trim(&mut out);
    out
}

pub fn neg(a: &[u64], p: u64) -> FpPoly {
    a.iter().map(|&c| sub_mod(0, c, p)).collect()
}

pub fn scale(a: &[u64], c: u64, p: u64) -> FpPoly {
    if c % p == 0 {
        return Vec::new();
    }
    a.iter().map(|&x| mul_mod(x, c, p)).collect()
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = add_mod(out[i + j], mul_mod(x, y, p), p);
        }
    }
    trim(&mut out);
    out
}

/// Euclidean division; panics if `b` is zero.
pub fn divrem(a: &[u64], b: &[u64], p: u64) -> (FpPoly, FpPoly) {
    assert!(!b.is_empty(), "polynomial division by zero over GF({p})");
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = inv_mod(*b.last().unwrap(), p);
    let mut q = vec![0u64; a.len() - db];
    for k in (0..q.len()).rev() {
        let c = mul_mod(r[k + db], lead_inv, p);
        q[k] = c;
        if c == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            r[k + j] = sub_mod(r[k + j], mul_mod(c, y, p), p);
        }
    }
    trim(&mut q);
    trim(&mut r);
    (q, r)
}

pub fn rem(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    divrem(a, b, p).1
}

pub fn monic(a: &[u64], p: u64) -> FpPoly {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => scale(a, inv_mod(lc, p), p),
    }
}

pub fn gcd(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    monic(&x, p)
}

/// Returns `(g, s, t)` with `s*a + t*b = g` and `g` monic (or zero).
pub fn ext_gcd(a: &[u64], b: &[u64], p: u64) -> (FpPoly, FpPoly, FpPoly) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1): (FpPoly, FpPoly) = (vec![1], Vec::new());
    let (mut t0, mut t1): (FpPoly, FpPoly) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        let t2 = sub(&t0, &mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    match r0.last() {
        None => (r0, s0, t0),
        Some(&lc) => {
            let inv = inv_mod(lc, p);
            (scale(&r0, inv, p), scale(&s0, inv, p), scale(&t0, inv, p))
        }
    }
}

pub fn derivative(a: &[u64], p: u64) -> FpPoly {
    let mut out: FpPoly = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
        .collect();
    trim(&mut out);
    out
}

pub fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> FpPoly {
    rem(&mul(a, b, p), m, p)
}

pub fn powmod(base: &[u64], mut exp: u64, m: &[u64], p: u64) -> FpPoly {
    let mut acc = rem(&[1], m, p);
    let mut b = rem(base, m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(&acc, &b, m, p);
        }
        b = mulmod(&b, &b, m, p);
        exp >>= 1;
    }
    acc
}

/// Rabin's irreducibility test for a polynomial of degree `n >= 1`.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let n = match degree(f) {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let f = monic(f, p);
    let x: FpPoly = vec![0, 1];
    // x^(p^k) mod f for k = 0..=n
    let mut frob = Vec::with_capacity(n + 1);
    let mut cur = rem(&x, &f, p);
    frob.push(cur.clone());
    for _ in 0..n {
        cur = powmod(&cur, p, &f, p);
        frob.push(cur.clone());
    }
    if frob[n] != rem(&x, &f, p) {
        return false;
    }
    for r in prime_divisors(n as u64) {
        let k = n / r as usize;
        let g = gcd(&sub(&frob[k], &x, p), &f, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Evaluates at a point of GF(p).
pub fn eval(a: &[u64], x: u64, p: u64) -> u64 {
    a.iter()
        .rev()
        .fold(0, |acc, &c| add_mod(mul_mod(acc, x, p), c, p))
}

/// Substitutes `t -> t^k`.
pub fn inflate(a: &[u64], k: usize) -> FpPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; (a.len() - 1) * k + 1];
    for (i, &c) in a.iter().enumerate() {
        out[i * k] = c;
    }
    out
}

/// Inverse of [`inflate`]: `Some` iff every exponent is divisible by `k`.
pub fn deflate(a: &[u64], k: usize) -> Option<FpPoly> {
    if a.iter().enumerate().any(|(i, &c)| c != 0 && i % k != 0) {
        return None;
    }
    Some(a.iter().step_by(k).copied().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_roundtrip() {
        let p = 5;
        let a = vec![3, 0, 4, 1, 2];
        let b = vec![1, 2, 3];
        let (q, r) = divrem(&a, &b, p);
        assert_eq!(add(&mul(&q, &b, p), &r, p), a);
        assert!(r.len() < b.len());
    }

    #[test]
    fn rabin_small_cases() {
        assert!(is_irreducible(&[1, 1, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1], 2));
        assert!(is_irreducible(&[1, 1, 0, 1], 2));
        assert!(is_irreducible(&[1, 0, 1], 3));
        assert!(!is_irreducible(&[0, 0, 1], 3));
    }

    #[test]
    fn ext_gcd_identity() {
        let p = 7;
        let a = vec![1, 2, 0, 1];
        let b = vec![3, 1, 1];
        let (g, s, t) = ext_gcd(&a, &b, p);
        assert_eq!(add(&mul(&s, &a, p), &mul(&t, &b, p), p), g);
    }

    #[test]
    fn inflate_deflate() {
        let a = vec![1, 0, 2];
        assert_eq!(deflate(&inflate(&a, 3), 3), Some(a));
        assert_eq!(deflate(&[0, 1], 2), None);
    }
}
