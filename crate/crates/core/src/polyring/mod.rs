//! Dense univariate polynomials over a [`Field`], with gcd and factorization.

mod finite;
mod funcfield;
mod numberfield;
mod rational;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigUint;
use thiserror::Error;

use crate::fieldtower::field::fmt_poly_with;
use crate::fieldtower::{ExtensionPair, Field, FieldDescriptor, FieldElem};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("factorization not supported: {0}")]
    UnsupportedFactorization(String),
}

/// A polynomial in `X` with coefficients low to high, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<FieldElem>,
}

impl Hash for Poly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_poly_with(&self.field, &self.coeffs, "X"))
    }
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<FieldElem>) -> Poly {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        debug_assert!(coeffs.iter().all(|c| field.owns(c)), "coefficient outside {field}");
        Poly { field, coeffs }
    }

    pub fn zero(field: Field) -> Poly {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn one(field: Field) -> Poly {
        let c = field.one();
        Poly::new(field, vec![c])
    }

    pub fn constant(field: Field, c: FieldElem) -> Poly {
        Poly::new(field, vec![c])
    }

    pub fn x(field: Field) -> Poly {
        Poly::monomial(field.clone(), field.one(), 1)
    }

    /// `c·X^k`.
    pub fn monomial(field: Field, c: FieldElem, k: usize) -> Poly {
        let mut coeffs = vec![field.zero(); k];
        coeffs.push(c);
        Poly::new(field, coeffs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<FieldElem> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.is_one(&self.coeffs[0])
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&FieldElem> {
        self.coeffs.last()
    }

    /// Exponent of the lowest nonzero term.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !self.field.is_zero(c))
    }

    fn same_field(&self, other: &Poly) {
        assert!(
            self.field == other.field,
            "polynomials over {} and {}",
            self.field,
            other.field
        );
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.same_field(other);
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(f.clone(), (0..n).map(|i| f.add(&self.coeff(i), &other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.same_field(other);
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(f.clone(), (0..n).map(|i| f.sub(&self.coeff(i), &other.coeff(i))).collect())
    }

    pub fn neg(&self) -> Poly {
        let f = &self.field;
        Poly::new(f.clone(), self.coeffs.iter().map(|c| f.neg(c)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.same_field(other);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field.clone());
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        Poly::new(f.clone(), out)
    }

    pub fn scale(&self, c: &FieldElem) -> Poly {
        let f = &self.field;
        Poly::new(f.clone(), self.coeffs.iter().map(|a| f.mul(a, c)).collect())
    }

    /// Multiplication by `X^k`.
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly::new(self.field.clone(), coeffs)
    }

    pub fn pow(&self, mut exp: u64) -> Poly {
        let mut acc = Poly::one(self.field.clone());
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn divrem(&self, b: &Poly) -> Result<(Poly, Poly), PolyError> {
        if b.field != self.field {
            return Err(PolyError::FieldMismatch(format!("{} vs {}", self.field, b.field)));
        }
        let Some(db) = b.degree() else {
            return Err(PolyError::DivisionByZeroPoly);
        };
        let f = &self.field;
        let mut r = self.coeffs.clone();
        if r.len() <= db {
            return Ok((Poly::zero(f.clone()), self.clone()));
        }
        let inv = f.inv(b.leading().unwrap());
        let mut q = vec![f.zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let c = f.mul(&r[k + db], &inv);
            if !f.is_zero(&c) {
                for (j, y) in b.coeffs.iter().enumerate() {
                    r[k + j] = f.sub(&r[k + j], &f.mul(&c, y));
                }
            }
            q[k] = c;
        }
        r.truncate(db);
        Ok((Poly::new(f.clone(), q), Poly::new(f.clone(), r)))
    }

    /// Remainder modulo a nonzero `b`.
    pub fn rem(&self, b: &Poly) -> Poly {
        self.divrem(b).expect("remainder by a nonzero polynomial").1
    }

    /// Exact quotient by a nonzero `b` (the remainder is discarded).
    pub fn quo(&self, b: &Poly) -> Poly {
        self.divrem(b).expect("quotient by a nonzero polynomial").0
    }

    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).is_zero()
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(&self.field.inv(lc)),
        }
    }

    /// Monic gcd (zero when both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = std::mem::replace(&mut b, r);
        }
        a.monic()
    }

    /// `(g, s, t)` with `s·self + t·other = g`, `g` monic or zero.
    pub fn gcd_extended(&self, other: &Poly) -> (Poly, Poly, Poly) {
        self.same_field(other);
        let f = self.field.clone();
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f.clone()), Poly::zero(f.clone()));
        let (mut t0, mut t1) = (Poly::zero(f.clone()), Poly::one(f.clone()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).unwrap();
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.leading().cloned() {
            None => (r0, s0, t0),
            Some(lc) => {
                let inv = f.inv(&lc);
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        Poly::new(
            f.clone(),
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| f.mul(c, &f.from_int(i as i64)))
                .collect(),
        )
    }

    pub fn mulmod(&self, other: &Poly, m: &Poly) -> Poly {
        self.mul(other).rem(m)
    }

    pub fn powmod(&self, exp: u64, m: &Poly) -> Poly {
        self.powmod_big(&BigUint::from(exp), m)
    }

    pub fn powmod_big(&self, exp: &BigUint, m: &Poly) -> Poly {
        let mut acc = Poly::one(self.field.clone()).rem(m);
        let base = self.rem(m);
        for i in (0..exp.bits()).rev() {
            acc = acc.mulmod(&acc, m);
            if exp.bit(i) {
                acc = acc.mulmod(&base, m);
            }
        }
        acc
    }

    /// Horner evaluation at an element of the coefficient field.
    pub fn evaluate(&self, x: &FieldElem) -> Result<FieldElem, PolyError> {
        if !self.field.owns(x) {
            return Err(PolyError::FieldMismatch(format!("point is not an element of {}", self.field)));
        }
        Ok(self.eval_unchecked(x))
    }

    pub(crate) fn eval_unchecked(&self, x: &FieldElem) -> FieldElem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    /// Evaluation at an element of an extension of the coefficient field.
    pub fn evaluate_in(&self, pair: &ExtensionPair, x: &FieldElem) -> Result<FieldElem, PolyError> {
        if pair.small() != &self.field {
            return Err(PolyError::FieldMismatch(format!(
                "polynomial over {} evaluated through {pair}",
                self.field
            )));
        }
        let lifted = self.map_field(pair.big().clone(), |c| pair.embed(c));
        lifted.evaluate(x)
    }

    /// Applies `f` to every coefficient, landing in `field`.
    pub fn map_field(&self, field: Field, f: impl Fn(&FieldElem) -> FieldElem) -> Poly {
        Poly::new(field, self.coeffs.iter().map(f).collect())
    }

    /// `self(X + c)`.
    pub fn taylor_shift(&self, c: &FieldElem) -> Poly {
        let f = &self.field;
        let lin = Poly::new(f.clone(), vec![c.clone(), f.one()]);
        self.coeffs.iter().rev().fold(Poly::zero(f.clone()), |acc, a| {
            acc.mul(&lin).add(&Poly::constant(f.clone(), a.clone()))
        })
    }

    /// Total order used to sort factor lists deterministically.
    pub fn canonical_cmp(&self, other: &Poly) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| {
            for (a, b) in self.coeffs.iter().zip(&other.coeffs).rev() {
                let o = elem_cmp(&self.field, a, b);
                if o != Ordering::Equal {
                    return o;
                }
            }
            Ordering::Equal
        })
    }
}

/// A fixed total order on field elements: index order for finite fields,
/// otherwise the order of the printed forms (shortest first).
pub fn elem_cmp(field: &Field, a: &FieldElem, b: &FieldElem) -> Ordering {
    if field.is_finite() {
        field.index_of(a).cmp(&field.index_of(b))
    } else {
        let (sa, sb) = (field.format(a), field.format(b));
        sa.len().cmp(&sb.len()).then(sa.cmp(&sb))
    }
}

/// `unit · ∏ factor^multiplicity`, factors monic irreducible and sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFactorization {
    pub unit: FieldElem,
    pub factors: Vec<(Poly, u32)>,
    /// PRNG seed used by the randomized splitting step.
    pub seed: u64,
}

impl PolyFactorization {
    pub fn expand(&self, field: &Field) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(field.clone(), self.unit.clone()), |acc, (g, e)| {
                acc.mul(&g.pow(*e as u64))
            })
    }

    fn normalize(mut self) -> Self {
        let mut merged: Vec<(Poly, u32)> = Vec::new();
        self.factors.sort_by(|a, b| a.0.canonical_cmp(&b.0));
        for (g, e) in self.factors {
            match merged.last_mut() {
                Some((h, m)) if *h == g => *m += e,
                _ => merged.push((g, e)),
            }
        }
        self.factors = merged;
        self
    }
}

impl fmt::Display for PolyFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = self.factors.first().map(|(g, _)| g.field().clone());
        let unit = match &field {
            Some(fl) => fl.format(&self.unit),
            None => format!("{:?}", self.unit),
        };
        let mut parts = Vec::new();
        if field.as_ref().is_none_or(|fl| !fl.is_one(&self.unit)) {
            parts.push(unit);
        }
        for (g, e) in &self.factors {
            if *e == 1 {
                parts.push(format!("({g})"));
            } else {
                parts.push(format!("({g})^{e}"));
            }
        }
        f.write_str(&parts.join("*"))
    }
}

/// Factors `a` into monic irreducibles using the crate default seed.
pub fn factor(a: &Poly) -> Result<PolyFactorization, PolyError> {
    factor_seeded(a, crate::DEFAULT_SEED)
}

pub fn factor_seeded(a: &Poly, seed: u64) -> Result<PolyFactorization, PolyError> {
    let field = a.field().clone();
    let Some(lc) = a.leading().cloned() else {
        return Err(PolyError::UnsupportedFactorization("the zero polynomial has no factorization".into()));
    };
    let monic = a.monic();
    let factors = if monic.degree() == Some(0) {
        Vec::new()
    } else {
        match field.descriptor() {
            FieldDescriptor::Prime { .. } | FieldDescriptor::Finite { .. } => finite::factor_monic(&monic, seed),
            FieldDescriptor::Rationals => rational::factor_monic(&monic),
            FieldDescriptor::NumberField { .. } => numberfield::factor_monic(&monic)?,
            FieldDescriptor::FunctionField { .. } | FieldDescriptor::PerfectPowerSubfield { .. } => {
                funcfield::factor_monic(&monic, seed)?
            }
        }
    };
    Ok(PolyFactorization { unit: lc, factors, seed }.normalize())
}

/// Whether `a` is irreducible over its coefficient field (units and zero are not).
pub fn is_irreducible(a: &Poly) -> Result<bool, PolyError> {
    match a.degree() {
        None | Some(0) => Ok(false),
        Some(1) => Ok(true),
        Some(_) => {
            if a.field().is_finite() {
                return Ok(finite::is_irreducible_monic(&a.monic()));
            }
            let f = factor(a)?;
            Ok(f.factors.len() == 1 && f.factors[0].1 == 1)
        }
    }
}

/// Distinct roots of `a` in its coefficient field, sorted.
pub fn roots(a: &Poly) -> Result<Vec<FieldElem>, PolyError> {
    if a.is_zero() {
        return Err(PolyError::UnsupportedFactorization("every element is a root of zero".into()));
    }
    let field = a.field().clone();
    let mut out: Vec<FieldElem> = if field.is_finite() {
        finite::roots_monic(&a.monic(), crate::DEFAULT_SEED)
    } else if matches!(
        field.descriptor(),
        FieldDescriptor::FunctionField { .. } | FieldDescriptor::PerfectPowerSubfield { .. }
    ) {
        funcfield::roots(&a.monic())?
    } else {
        factor(a)?
            .factors
            .into_iter()
            .filter(|(g, _)| g.degree() == Some(1))
            .map(|(g, _)| field.neg(&g.coeffs()[0]))
            .collect()
    };
    out.sort_by(|x, y| elem_cmp(&field, x, y));
    out.dedup();
    Ok(out)
}

/// Squarefree decomposition for characteristic zero or a perfect field.
/// Returns `(part, multiplicity)` with `part` monic squarefree and coprime.
pub(crate) fn squarefree_decomposition(f: &Poly) -> Vec<(Poly, u32)> {
    let field = f.field().clone();
    let p = field.characteristic();
    let f = f.monic();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let df = f.derivative();
    if df.is_zero() {
        // f = g(X^p) with p-th root coefficients
        let root = pth_root_poly(&f).expect("perfect coefficient field");
        for (g, e) in squarefree_decomposition(&root) {
            out.push((g, e * p as u32));
        }
        return out;
    }
    let mut c = f.gcd(&df);
    let mut w = f.quo(&c);
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.quo(&y);
        if fac.degree().unwrap_or(0) > 0 {
            out.push((fac, i));
        }
        w = y;
        c = c.quo(&w);
        i += 1;
    }
    if p > 0 && c.degree().unwrap_or(0) > 0 {
        let root = pth_root_poly(&c).expect("perfect coefficient field");
        for (g, e) in squarefree_decomposition(&root) {
            out.push((g, e * p as u32));
        }
    }
    out
}

/// `g` with `g^p = f`, when `f = Σ c_i X^(ip)` and every `c_i` has a p-th root.
pub(crate) fn pth_root_poly(f: &Poly) -> Option<Poly> {
    let field = f.field();
    let p = field.characteristic() as usize;
    if p == 0 {
        return None;
    }
    let mut out = Vec::new();
    for (i, c) in f.coeffs().iter().enumerate() {
        if i % p == 0 {
            out.push(field.pth_root(c)?);
        } else if !field.is_zero(c) {
            return None;
        }
    }
    Some(Poly::new(field.clone(), out))
}

#[cfg(test)]
mod tests;
