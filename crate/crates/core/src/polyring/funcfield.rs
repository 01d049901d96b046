//! Limited factorization over F_p(t): gcd splitting, p-th root extraction,
//! binomials `X^(p^k) − c`, and rational-root search. Separable remainders of
//! degree 2 or 3 without roots are irreducible; anything larger is refused.

use super::{elem_cmp, finite, pth_root_poly, Poly, PolyError};
use crate::fieldtower::{fp, Field, FieldElem, RatFunc};

/// Candidate roots tried before giving up.
const MAX_ROOT_CANDIDATES: usize = 50_000;

pub(super) fn factor_monic(f: &Poly, _seed: u64) -> Result<Vec<(Poly, u32)>, PolyError> {
    factor_rec(f)
}

fn factor_rec(f: &Poly) -> Result<Vec<(Poly, u32)>, PolyError> {
    let f = f.monic();
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        return Ok(vec![(f, 1)]);
    }
    let field = f.field().clone();
    let p = field.characteristic() as u32;
    let df = f.derivative();
    if df.is_zero() {
        if let Some(r) = pth_root_poly(&f) {
            return Ok(factor_rec(&r)?.into_iter().map(|(g, e)| (g, e * p)).collect());
        }
        if is_prime_power_binomial(&f, p as usize) {
            return Ok(vec![(f, 1)]);
        }
        return Err(PolyError::UnsupportedFactorization(format!(
            "inseparable polynomial {f} over {field}"
        )));
    }
    let g = f.gcd(&df);
    if g.degree().unwrap_or(0) > 0 {
        let mut out = factor_rec(&g)?;
        out.extend(factor_rec(&f.quo(&g))?);
        return Ok(out);
    }
    if let Some(r) = roots(&f)?.into_iter().next() {
        let lin = Poly::new(field.clone(), vec![field.neg(&r), field.one()]);
        let mut out = vec![(lin.clone(), 1)];
        out.extend(factor_rec(&f.quo(&lin))?);
        return Ok(out);
    }
    if n <= 3 {
        return Ok(vec![(f, 1)]);
    }
    Err(PolyError::UnsupportedFactorization(format!(
        "separable polynomial of degree {n} without roots over {field}"
    )))
}

/// `X^m + c` with `m` a power of `p` and `c` not a p-th power: irreducible.
fn is_prime_power_binomial(f: &Poly, p: usize) -> bool {
    let field = f.field();
    let n = f.degree().unwrap();
    let mut m = n;
    while m % p == 0 {
        m /= p;
    }
    m == 1
        && f.coeffs()[1..n].iter().all(|c| field.is_zero(c))
        && field.pth_root(&f.coeffs()[0]).is_none()
}

fn ratfunc(c: &FieldElem) -> &RatFunc {
    match c {
        FieldElem::Rf(r) => r,
        _ => unreachable!("function field coefficient expected"),
    }
}

/// Roots in F_p(t) of a monic polynomial: a root `u/v` in lowest terms of the
/// cleared polynomial has `u | a_0` and `v | a_n`.
pub(super) fn roots(f: &Poly) -> Result<Vec<FieldElem>, PolyError> {
    let field = f.field().clone();
    let p = field.characteristic();
    let mut out = Vec::new();
    let Some(v) = f.valuation() else {
        return Ok(out);
    };
    if v > 0 {
        out.push(field.zero());
    }
    let rest = Poly::new(field.clone(), f.coeffs()[v..].to_vec());
    if rest.degree().unwrap_or(0) == 0 {
        return Ok(out);
    }
    let den = rest
        .coeffs()
        .iter()
        .fold(vec![1u64], |acc, c| lcm(&acc, &ratfunc(c).den, p));
    let cleared: Vec<Vec<u64>> = rest
        .coeffs()
        .iter()
        .map(|c| {
            let r = ratfunc(c);
            fp::mul(&r.num, &fp::divrem(&den, &r.den, p).0, p)
        })
        .collect();
    let nums = monic_divisors(&cleared[0], p);
    let dens = monic_divisors(cleared.last().unwrap(), p);
    if nums.len() * dens.len() * (p as usize - 1) > MAX_ROOT_CANDIDATES {
        return Err(PolyError::UnsupportedFactorization(format!(
            "root search for {f} exceeds {MAX_ROOT_CANDIDATES} candidates"
        )));
    }
    for u in &nums {
        for w in &dens {
            if fp::gcd(u, w, p) != [1] {
                continue;
            }
            for c in 1..p {
                let r = field.from_ratfunc(fp::scale(u, c, p), w.clone());
                if field.is_zero(&rest.eval_unchecked(&r)) {
                    out.push(r);
                }
            }
        }
    }
    out.sort_by(|a, b| elem_cmp(&field, a, b));
    out.dedup();
    Ok(out)
}

fn lcm(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let g = fp::gcd(a, b, p);
    fp::monic(&fp::divrem(&fp::mul(a, b, p), &g, p).0, p)
}

/// All monic divisors of a nonzero polynomial over GF(p).
fn monic_divisors(a: &[u64], p: u64) -> Vec<Vec<u64>> {
    if a.len() <= 1 {
        return vec![vec![1]];
    }
    let fld = Field::prime(p).unwrap();
    let poly = Poly::new(fld.clone(), a.iter().map(|&c| fld.from_prime_field(c)).collect()).monic();
    let facs: Vec<(Vec<u64>, u32)> = finite::factor_monic(&poly, crate::DEFAULT_SEED)
        .into_iter()
        .map(|(g, e)| {
            let v = g
                .coeffs()
                .iter()
                .map(|c| match c {
                    FieldElem::Ff(v) => v[0],
                    _ => unreachable!(),
                })
                .collect();
            (v, e)
        })
        .collect();
    let mut out = vec![vec![1u64]];
    for (g, e) in facs {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut cur = d.clone();
            next.push(cur.clone());
            for _ in 0..e {
                cur = fp::mul(&cur, &g, p);
                next.push(cur.clone());
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_of_linear_detected() {
        let f2t = Field::function_field(2).unwrap();
        let t = f2t.generator().unwrap();
        // X^2 + t^2 = (X + t)^2
        let f = Poly::new(f2t.clone(), vec![f2t.mul(&t, &t), f2t.zero(), f2t.one()]);
        let fac = factor_rec(&f).unwrap();
        assert_eq!(fac.len(), 1);
        assert_eq!(fac[0].1, 2);
        assert_eq!(fac[0].0, Poly::new(f2t.clone(), vec![t, f2t.one()]));
    }

    #[test]
    fn binomial_over_subfield_is_irreducible() {
        let k = Field::perfect_power_subfield(2, 1).unwrap();
        let u = k.generator().unwrap();
        let f = Poly::new(k.clone(), vec![u, k.zero(), k.one()]);
        assert_eq!(factor_rec(&f).unwrap(), vec![(f, 1)]);
    }

    #[test]
    fn rational_root_found() {
        let f3t = Field::function_field(3).unwrap();
        // (X - t/(t+1)) (X + 1)
        let r = f3t.from_ratfunc(vec![0, 1], vec![1, 1]);
        let a = Poly::new(f3t.clone(), vec![f3t.neg(&r), f3t.one()]);
        let b = Poly::new(f3t.clone(), vec![f3t.one(), f3t.one()]);
        let got = roots(&a.mul(&b)).unwrap();
        assert!(got.contains(&r));
        assert!(got.contains(&f3t.from_int(-1)));
    }
}
