//! Factorization over ℚ(α) by Trager's norm method: shift until the norm of
//! `f(X − sα)` is squarefree, factor the norm over ℚ, pull factors back by gcd.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{rational, squarefree_decomposition, Poly, PolyError};
use crate::fieldtower::{Field, FieldElem};

const MAX_SHIFTS: i64 = 24;

pub(super) fn factor_monic(f: &Poly) -> Result<Vec<(Poly, u32)>, PolyError> {
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(f) {
        for g in factor_squarefree(&part)? {
            out.push((g, mult));
        }
    }
    Ok(out)
}

fn shifts() -> impl Iterator<Item = i64> {
    (0..).map(|i: i64| if i % 2 == 1 { (i + 1) / 2 } else { -i / 2 })
}

fn factor_squarefree(h: &Poly) -> Result<Vec<Poly>, PolyError> {
    if h.degree() == Some(1) {
        return Ok(vec![h.clone()]);
    }
    let k = h.field().clone();
    let alpha = k.generator().expect("number field generator");
    let q = Field::rationals();
    for s in shifts().take(MAX_SHIFTS as usize) {
        let sa = k.mul(&k.from_int(s), &alpha);
        let g = h.taylor_shift(&k.neg(&sa));
        let n = norm(&g, &q);
        if !n.gcd(&n.derivative()).is_one() {
            continue;
        }
        let parts = rational::factor_monic(&n.monic());
        if parts.len() == 1 {
            return Ok(vec![h.clone()]);
        }
        let out = parts
            .into_iter()
            .map(|(ni, _)| {
                let lifted = ni.map_field(k.clone(), |c| match c {
                    FieldElem::Q(r) => k.from_rational(r).unwrap(),
                    _ => unreachable!(),
                });
                h.gcd(&lifted.taylor_shift(&sa))
            })
            .collect();
        return Ok(out);
    }
    Err(PolyError::UnsupportedFactorization(format!(
        "no squarefree norm found for {h} within {MAX_SHIFTS} shifts"
    )))
}

/// `N(X) = Norm_{K/ℚ}(g(X))`, by evaluating at integer points and interpolating.
pub(crate) fn norm(g: &Poly, q: &Field) -> Poly {
    let k = g.field();
    let d = k.absolute_degree().unwrap() as usize;
    let deg = d * g.degree().unwrap_or(0);
    let xs: Vec<BigRational> = (0..=deg as i64).map(|i| BigRational::from_integer(BigInt::from(i))).collect();
    let ys: Vec<BigRational> = xs
        .iter()
        .map(|x| k.nf_norm(&g.eval_unchecked(&k.from_rational(x).unwrap())))
        .collect();
    interpolate(q, &xs, &ys)
}

/// Newton interpolation through `(xs[i], ys[i])`.
fn interpolate(q: &Field, xs: &[BigRational], ys: &[BigRational]) -> Poly {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut acc = Poly::zero(q.clone());
    for i in (0..n).rev() {
        let lin = Poly::new(q.clone(), vec![FieldElem::Q(-xs[i].clone()), q.one()]);
        acc = acc.mul(&lin).add(&Poly::constant(q.clone(), FieldElem::Q(dd[i].clone())));
    }
    if acc.coeffs().iter().all(|c| matches!(c, FieldElem::Q(r) if r.is_zero())) {
        return Poly::zero(q.clone());
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn cube_root_of_two_minpoly_over_its_field() {
        let k = Field::number_field(vec![q(-2), q(0), q(0), q(1)]).unwrap();
        let m = Poly::new(k.clone(), vec![k.from_int(-2), k.zero(), k.zero(), k.one()]);
        let f = factor_monic(&m).unwrap();
        let mut degs: Vec<usize> = f.iter().map(|(g, _)| g.degree().unwrap()).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 2]);
        let prod = f.iter().fold(Poly::one(k.clone()), |a, (g, _)| a.mul(g));
        assert_eq!(prod, m);
    }

    #[test]
    fn gaussian_field_splits_x2_plus_1() {
        let k = Field::number_field(vec![q(1), q(0), q(1)]).unwrap();
        let m = Poly::new(k.clone(), vec![k.one(), k.zero(), k.one()]);
        let f = factor_monic(&m).unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|(g, _)| g.degree() == Some(1)));
    }
}
