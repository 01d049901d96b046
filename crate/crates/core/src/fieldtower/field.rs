use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::fp::{self, FpPoly};
use super::qpoly;
use super::FieldError;

/// Largest finite field order accepted at construction.
pub const MAX_FINITE_ORDER: u64 = 1 << 32;
/// Largest defining degree accepted for number fields.
pub const MAX_NUMBER_FIELD_DEGREE: usize = 6;

/// What kind of computable field this is.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    /// GF(p).
    Prime { p: u64 },
    /// GF(p)[y]/(modulus) with `modulus` monic irreducible of degree `n >= 2`.
    Finite { p: u64, n: u32, modulus: Vec<u64> },
    /// ℚ.
    Rationals,
    /// ℚ[y]/(minpoly), `minpoly` monic irreducible of degree 2..=6.
    NumberField { minpoly: Vec<BigRational> },
    /// F_p(t).
    FunctionField { p: u64 },
    /// F_p(u) with u standing for t^(p^e), the subfield F_p(t^(p^e)) of F_p(t).
    PerfectPowerSubfield { p: u64, e: u32 },
}

/// A rational function `num/den` over GF(p), reduced with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    pub num: FpPoly,
    pub den: FpPoly,
}

impl RatFunc {
    pub fn new(num: FpPoly, den: FpPoly, p: u64) -> Self {
        assert!(!den.is_empty(), "rational function with zero denominator");
        let (mut num, mut den) = (num, den);
        fp::trim(&mut num);
        fp::trim(&mut den);
        if num.is_empty() {
            return RatFunc {
                num,
                den: vec![1],
            };
        }
        let g = fp::gcd(&num, &den, p);
        if g.len() > 1 {
            num = fp::divrem(&num, &g, p).0;
            den = fp::divrem(&den, &g, p).0;
        }
        let lc_inv = fp::inv_mod(*den.last().unwrap(), p);
        RatFunc {
            num: fp::scale(&num, lc_inv, p),
            den: fp::scale(&den, lc_inv, p),
        }
    }

    pub fn constant(c: u64) -> Self {
        let mut num = vec![c];
        fp::trim(&mut num);
        RatFunc { num, den: vec![1] }
    }
}

/// The representation of a field element. The owning [`Field`] is carried
/// by the container (polynomial, pair, ...), not by every element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElem {
    /// Coefficient vector over GF(p) of length n (n = 1 for prime fields).
    Ff(Vec<u64>),
    Q(BigRational),
    /// Coefficient vector over ℚ of length equal to the defining degree.
    Nf(Vec<BigRational>),
    Rf(RatFunc),
}

/// A shared handle on a field descriptor. Cloning is cheap.
#[derive(Clone)]
pub struct Field(Arc<FieldDescriptor>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            FieldDescriptor::Prime { p } => write!(f, "GF({p})"),
            FieldDescriptor::Finite { p, n, modulus } => {
                write!(f, "GF({}^{n})[{}]", p, fmt_fp_poly(modulus, "w"))
            }
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::NumberField { minpoly } => {
                let coeffs: Vec<FieldElem> =
                    minpoly.iter().map(|c| FieldElem::Q(c.clone())).collect();
                let q = Field::rationals();
                write!(f, "Q(w)[{}]", fmt_poly_with(&q, &coeffs, "w"))
            }
            FieldDescriptor::FunctionField { p } => write!(f, "F_{p}(t)"),
            FieldDescriptor::PerfectPowerSubfield { p, e } => {
                write!(f, "F_{p}(u), u = t^{}", p.pow(*e))
            }
        }
    }
}

impl Field {
    pub fn descriptor(&self) -> &FieldDescriptor {
        &self.0
    }

    pub fn prime(p: u64) -> Result<Field, FieldError> {
        if !fp::is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if p >= MAX_FINITE_ORDER {
            return Err(FieldError::TooLarge(format!("GF({p})")));
        }
        Ok(Field(Arc::new(FieldDescriptor::Prime { p })))
    }

    /// GF(p^n). Without an explicit modulus the least irreducible monic of
    /// degree `n` is used, ordering candidates by the base-p integer whose
    /// digits are the non-leading coefficients (constant term least significant).
    pub fn finite(p: u64, n: u32, modulus: Option<Vec<u64>>) -> Result<Field, FieldError> {
        if !fp::is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if n == 0 {
            return Err(FieldError::InvalidDescriptor("extension degree 0".into()));
        }
        let order = (p as u128).checked_pow(n);
        if order.is_none_or(|q| q > MAX_FINITE_ORDER as u128) {
            return Err(FieldError::TooLarge(format!("GF({p}^{n})")));
        }
        if n == 1 && modulus.is_none() {
            return Field::prime(p);
        }
        let modulus = match modulus {
            Some(mut m) => {
                m.iter_mut().for_each(|c| *c %= p);
                fp::trim(&mut m);
                if m.len() != n as usize + 1 {
                    return Err(FieldError::InvalidDescriptor(format!(
                        "modulus must have degree {n}"
                    )));
                }
                let m = fp::monic(&m, p);
                if !fp::is_irreducible(&m, p) {
                    return Err(FieldError::ReducibleModulus(fmt_fp_poly(&m, "y")));
                }
                m
            }
            None => least_irreducible(p, n),
        };
        if n == 1 {
            return Field::prime(p);
        }
        Ok(Field(Arc::new(FieldDescriptor::Finite { p, n, modulus })))
    }

    pub fn rationals() -> Field {
        Field(Arc::new(FieldDescriptor::Rationals))
    }

    /// ℚ(w) with `w` a root of `minpoly` (low-to-high coefficients).
    pub fn number_field(minpoly: Vec<BigRational>) -> Result<Field, FieldError> {
        let mut m = minpoly;
        qpoly::trim(&mut m);
        let d = m.len().saturating_sub(1);
        if !(2..=MAX_NUMBER_FIELD_DEGREE).contains(&d) {
            return Err(FieldError::InvalidDescriptor(format!(
                "number field degree must be between 2 and {MAX_NUMBER_FIELD_DEGREE}, got {d}"
            )));
        }
        let lc = m.last().unwrap().clone();
        m.iter_mut().for_each(|c| *c /= &lc);
        let q = Field::rationals();
        let poly = crate::polyring::Poly::new(
            q.clone(),
            m.iter().cloned().map(FieldElem::Q).collect(),
        );
        let irreducible = crate::polyring::is_irreducible(&poly)
            .map_err(|e| FieldError::InvalidDescriptor(e.to_string()))?;
        if !irreducible {
            return Err(FieldError::ReducibleModulus(poly.to_string()));
        }
        Ok(Field(Arc::new(FieldDescriptor::NumberField { minpoly: m })))
    }

    pub fn function_field(p: u64) -> Result<Field, FieldError> {
        if !fp::is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Field(Arc::new(FieldDescriptor::FunctionField { p })))
    }

    pub fn perfect_power_subfield(p: u64, e: u32) -> Result<Field, FieldError> {
        if !fp::is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if p.checked_pow(e).is_none_or(|q| q > 1 << 16) {
            return Err(FieldError::TooLarge(format!("t^({p}^{e})")));
        }
        Ok(Field(Arc::new(FieldDescriptor::PerfectPowerSubfield { p, e })))
    }

    pub fn characteristic(&self) -> u64 {
        match &*self.0 {
            FieldDescriptor::Prime { p }
            | FieldDescriptor::Finite { p, .. }
            | FieldDescriptor::FunctionField { p }
            | FieldDescriptor::PerfectPowerSubfield { p, .. } => *p,
            FieldDescriptor::Rationals | FieldDescriptor::NumberField { .. } => 0,
        }
    }

    /// Number of elements for finite fields.
    pub fn order(&self) -> Option<u64> {
        match &*self.0 {
            FieldDescriptor::Prime { p } => Some(*p),
            FieldDescriptor::Finite { p, n, .. } => Some(p.pow(*n)),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    /// Degree over the prime field for finite fields, over ℚ for number fields.
    pub fn absolute_degree(&self) -> Option<u32> {
        match &*self.0 {
            FieldDescriptor::Prime { .. } | FieldDescriptor::Rationals => Some(1),
            FieldDescriptor::Finite { n, .. } => Some(*n),
            FieldDescriptor::NumberField { minpoly } => Some(minpoly.len() as u32 - 1),
            _ => None,
        }
    }

    /// Modulus of a finite field (`y` for prime fields).
    pub fn ff_modulus(&self) -> Option<&[u64]> {
        match &*self.0 {
            FieldDescriptor::Prime { .. } => Some(&[0, 1]),
            FieldDescriptor::Finite { modulus, .. } => Some(modulus),
            _ => None,
        }
    }

    fn ff_n(&self) -> usize {
        match &*self.0 {
            FieldDescriptor::Prime { .. } => 1,
            FieldDescriptor::Finite { n, .. } => *n as usize,
            _ => unreachable!("not a finite field"),
        }
    }

    fn nf_minpoly(&self) -> &[BigRational] {
        match &*self.0 {
            FieldDescriptor::NumberField { minpoly } => minpoly,
            _ => unreachable!("not a number field"),
        }
    }

    fn pad_ff(&self, mut v: Vec<u64>) -> FieldElem {
        v.resize(self.ff_n(), 0);
        FieldElem::Ff(v)
    }

    fn pad_nf(&self, mut v: Vec<BigRational>) -> FieldElem {
        v.resize(self.nf_minpoly().len() - 1, BigRational::zero());
        FieldElem::Nf(v)
    }

    pub fn zero(&self) -> FieldElem {
        self.from_int(0)
    }

    pub fn one(&self) -> FieldElem {
        self.from_int(1)
    }

    pub fn from_int(&self, k: i64) -> FieldElem {
        self.from_rational(&BigRational::from_integer(BigInt::from(k)))
            .expect("integers embed in every field")
    }

    /// Image of a rational number; `None` when the denominator vanishes mod p.
    pub fn from_rational(&self, r: &BigRational) -> Option<FieldElem> {
        let p = self.characteristic();
        if p == 0 {
            return Some(match &*self.0 {
                FieldDescriptor::Rationals => FieldElem::Q(r.clone()),
                _ => self.pad_nf(vec![r.clone()]),
            });
        }
        let reduce = |x: &BigInt| -> u64 {
            let m = BigInt::from(p);
            let v = ((x % &m) + &m) % &m;
            u64::try_from(v).unwrap()
        };
        let num = reduce(r.numer());
        let den = reduce(r.denom());
        if den == 0 {
            return None;
        }
        let c = fp::mul_mod(num, fp::inv_mod(den, p), p);
        Some(self.from_prime_field(c))
    }

    /// Embeds an element of the prime field GF(p).
    pub fn from_prime_field(&self, c: u64) -> FieldElem {
        match &*self.0 {
            FieldDescriptor::Prime { .. } | FieldDescriptor::Finite { .. } => {
                self.pad_ff(vec![c])
            }
            FieldDescriptor::FunctionField { .. } | FieldDescriptor::PerfectPowerSubfield { .. } => {
                FieldElem::Rf(RatFunc::constant(c))
            }
            _ => panic!("{self} has characteristic zero"),
        }
    }

    /// The distinguished generator: `w` for extensions of the prime field, `t`
    /// (resp. `u`) for function fields. `None` for prime fields and ℚ.
    pub fn generator(&self) -> Option<FieldElem> {
        match &*self.0 {
            FieldDescriptor::Prime { .. } | FieldDescriptor::Rationals => None,
            FieldDescriptor::Finite { .. } => Some(self.pad_ff(vec![0, 1])),
            FieldDescriptor::NumberField { .. } => {
                Some(self.pad_nf(vec![BigRational::zero(), BigRational::one()]))
            }
            FieldDescriptor::FunctionField { .. } | FieldDescriptor::PerfectPowerSubfield { .. } => {
                Some(FieldElem::Rf(RatFunc {
                    num: vec![0, 1],
                    den: vec![1],
                }))
            }
        }
    }

    pub fn generator_name(&self) -> &'static str {
        match &*self.0 {
            FieldDescriptor::FunctionField { .. } => "t",
            FieldDescriptor::PerfectPowerSubfield { .. } => "u",
            _ => "w",
        }
    }

    pub fn is_zero(&self, a: &FieldElem) -> bool {
        match a {
            FieldElem::Ff(v) => v.iter().all(|&c| c == 0),
            FieldElem::Q(q) => q.is_zero(),
            FieldElem::Nf(v) => v.iter().all(|c| c.is_zero()),
            FieldElem::Rf(r) => r.num.is_empty(),
        }
    }

    pub fn is_one(&self, a: &FieldElem) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        match (a, b) {
            (FieldElem::Ff(x), FieldElem::Ff(y)) => {
                let p = self.characteristic();
                FieldElem::Ff(x.iter().zip(y).map(|(&u, &v)| fp::add_mod(u, v, p)).collect())
            }
            (FieldElem::Q(x), FieldElem::Q(y)) => FieldElem::Q(x + y),
            (FieldElem::Nf(x), FieldElem::Nf(y)) => {
                FieldElem::Nf(x.iter().zip(y).map(|(u, v)| u + v).collect())
            }
            (FieldElem::Rf(x), FieldElem::Rf(y)) => {
                let p = self.characteristic();
                if x.den == y.den {
                    return FieldElem::Rf(RatFunc::new(fp::add(&x.num, &y.num, p), x.den.clone(), p));
                }
                let num = fp::add(&fp::mul(&x.num, &y.den, p), &fp::mul(&y.num, &x.den, p), p);
                FieldElem::Rf(RatFunc::new(num, fp::mul(&x.den, &y.den, p), p))
            }
            _ => panic!("mixed element representations in {self}"),
        }
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        match a {
            FieldElem::Ff(x) => {
                let p = self.characteristic();
                FieldElem::Ff(x.iter().map(|&u| fp::sub_mod(0, u, p)).collect())
            }
            FieldElem::Q(x) => FieldElem::Q(-x),
            FieldElem::Nf(x) => FieldElem::Nf(x.iter().map(|u| -u).collect()),
            FieldElem::Rf(x) => FieldElem::Rf(RatFunc {
                num: fp::neg(&x.num, self.characteristic()),
                den: x.den.clone(),
            }),
        }
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        match (a, b) {
            (FieldElem::Ff(x), FieldElem::Ff(y)) => {
                let p = self.characteristic();
                if x.len() == 1 {
                    return FieldElem::Ff(vec![fp::mul_mod(x[0], y[0], p)]);
                }
                let m = self.ff_modulus().unwrap();
                self.pad_ff(fp::mulmod(x, y, m, p))
            }
            (FieldElem::Q(x), FieldElem::Q(y)) => FieldElem::Q(x * y),
            (FieldElem::Nf(x), FieldElem::Nf(y)) => {
                let prod = qpoly::mul(x, y);
                self.pad_nf(qpoly::divrem(&prod, self.nf_minpoly()).1)
            }
            (FieldElem::Rf(x), FieldElem::Rf(y)) => {
                let p = self.characteristic();
                FieldElem::Rf(RatFunc::new(
                    fp::mul(&x.num, &y.num, p),
                    fp::mul(&x.den, &y.den, p),
                    p,
                ))
            }
            _ => panic!("mixed element representations in {self}"),
        }
    }

    pub fn try_inv(&self, a: &FieldElem) -> Option<FieldElem> {
        if self.is_zero(a) {
            return None;
        }
        Some(match a {
            FieldElem::Ff(x) => {
                let p = self.characteristic();
                if x.len() == 1 {
                    return Some(FieldElem::Ff(vec![fp::inv_mod(x[0], p)]));
                }
                let mut xs = x.clone();
                fp::trim(&mut xs);
                let (_, s, _) = fp::ext_gcd(&xs, self.ff_modulus().unwrap(), p);
                self.pad_ff(s)
            }
            FieldElem::Q(x) => FieldElem::Q(x.recip()),
            FieldElem::Nf(x) => {
                let (_, s) = qpoly::half_ext_gcd(x, self.nf_minpoly());
                self.pad_nf(qpoly::divrem(&s, self.nf_minpoly()).1)
            }
            FieldElem::Rf(x) => FieldElem::Rf(RatFunc::new(
                x.den.clone(),
                x.num.clone(),
                self.characteristic(),
            )),
        })
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: &FieldElem) -> FieldElem {
        self.try_inv(a)
            .unwrap_or_else(|| panic!("inverse of zero in {self}"))
    }

    pub fn div(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.mul(a, &self.inv(b))
    }

    pub fn pow(&self, a: &FieldElem, mut exp: u64) -> FieldElem {
        let mut acc = self.one();
        let mut base = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `a^(p^k)`.
    pub fn frobenius(&self, a: &FieldElem, k: u32) -> FieldElem {
        match a {
            FieldElem::Rf(x) => {
                let q = self.characteristic().pow(k) as usize;
                FieldElem::Rf(RatFunc {
                    num: fp::inflate(&x.num, q),
                    den: fp::inflate(&x.den, q),
                })
            }
            _ => {
                let p = self.characteristic();
                assert!(p > 0, "Frobenius in characteristic zero");
                (0..k).fold(a.clone(), |acc, _| self.pow(&acc, p))
            }
        }
    }

    /// The unique p-th root when it exists (always, in a finite field).
    pub fn pth_root(&self, a: &FieldElem) -> Option<FieldElem> {
        let p = self.characteristic();
        match (a, self.order()) {
            (FieldElem::Ff(_), Some(q)) => Some(self.pow(a, q / p)),
            (FieldElem::Rf(x), _) => {
                let num = fp::deflate(&x.num, p as usize)?;
                let den = fp::deflate(&x.den, p as usize)?;
                Some(FieldElem::Rf(RatFunc { num, den }))
            }
            _ => None,
        }
    }

    /// Enumeration order for finite fields: `sum c_i p^i`.
    pub fn index_of(&self, a: &FieldElem) -> u64 {
        match a {
            FieldElem::Ff(v) => {
                let p = self.characteristic();
                v.iter().rev().fold(0, |acc, &c| acc * p + c)
            }
            _ => panic!("index_of on infinite field {self}"),
        }
    }

    pub fn element_at(&self, mut index: u64) -> FieldElem {
        let p = self.characteristic();
        let n = self.ff_n();
        let mut v = Vec::with_capacity(n);
        for _ in 0..n {
            v.push(index % p);
            index /= p;
        }
        FieldElem::Ff(v)
    }

    /// All elements of a finite field in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        let q = self.order().expect("enumerating an infinite field");
        (0..q).map(move |i| self.element_at(i))
    }

    /// A generator of the multiplicative group: the least element (in index
    /// order) of order |F| - 1.
    pub fn primitive_element(&self) -> Option<FieldElem> {
        let q = self.order()?;
        if q == 2 {
            return Some(self.one());
        }
        let primes = fp::prime_divisors(q - 1);
        (1..q)
            .map(|i| self.element_at(i))
            .find(|x| primes.iter().all(|&r| !self.is_one(&self.pow(x, (q - 1) / r))))
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElem {
        let p = self.characteristic();
        match &*self.0 {
            FieldDescriptor::Prime { .. } | FieldDescriptor::Finite { .. } => {
                self.element_at(rng.gen_range(0..self.order().unwrap()))
            }
            FieldDescriptor::Rationals => FieldElem::Q(random_small_rational(rng)),
            FieldDescriptor::NumberField { minpoly } => FieldElem::Nf(
                (0..minpoly.len() - 1)
                    .map(|_| random_small_rational(rng))
                    .collect(),
            ),
            FieldDescriptor::FunctionField { .. } | FieldDescriptor::PerfectPowerSubfield { .. } => {
                let num: FpPoly = (0..rng.gen_range(0..=3)).map(|_| rng.gen_range(0..p)).collect();
                let mut den: FpPoly = (0..rng.gen_range(0..=1)).map(|_| rng.gen_range(0..p)).collect();
                den.push(1);
                FieldElem::Rf(RatFunc::new(num, den, p))
            }
        }
    }

    /// Element as a string, using `w`, `t` or `u` for the generator.
    pub fn format(&self, a: &FieldElem) -> String {
        let var = self.generator_name();
        match a {
            FieldElem::Ff(v) => {
                if v.len() == 1 {
                    v[0].to_string()
                } else {
                    fmt_fp_poly(v, var)
                }
            }
            FieldElem::Q(q) => q.to_string(),
            FieldElem::Nf(v) => {
                let q = Field::rationals();
                let coeffs: Vec<FieldElem> = v.iter().cloned().map(FieldElem::Q).collect();
                fmt_poly_with(&q, &coeffs, var)
            }
            FieldElem::Rf(r) => {
                let num = fmt_fp_poly(&r.num, var);
                if r.den == [1] {
                    num
                } else {
                    format!("({num})/({})", fmt_fp_poly(&r.den, var))
                }
            }
        }
    }

    /// Whether `a` is a well-formed element of this field.
    pub fn owns(&self, a: &FieldElem) -> bool {
        match (&*self.0, a) {
            (FieldDescriptor::Prime { p }, FieldElem::Ff(v)) => v.len() == 1 && v[0] < *p,
            (FieldDescriptor::Finite { p, n, .. }, FieldElem::Ff(v)) => {
                v.len() == *n as usize && v.iter().all(|c| c < p)
            }
            (FieldDescriptor::Rationals, FieldElem::Q(_)) => true,
            (FieldDescriptor::NumberField { minpoly }, FieldElem::Nf(v)) => v.len() + 1 == minpoly.len(),
            (
                FieldDescriptor::FunctionField { p } | FieldDescriptor::PerfectPowerSubfield { p, .. },
                FieldElem::Rf(r),
            ) => r.num.iter().chain(&r.den).all(|c| c < p) && r.den.last() == Some(&1),
            _ => false,
        }
    }

    /// Builds an element from a GF(p) coefficient vector in the generator
    /// (finite fields) or a pair of polynomials in the generator (function fields).
    pub fn from_ff_coeffs(&self, v: Vec<u64>) -> FieldElem {
        let p = self.characteristic();
        let m = self.ff_modulus().expect("finite field");
        let reduced: Vec<u64> = v.into_iter().map(|c| c % p).collect();
        self.pad_ff(fp::rem(&reduced, m, p))
    }

    pub fn from_ratfunc(&self, num: FpPoly, den: FpPoly) -> FieldElem {
        let p = self.characteristic();
        FieldElem::Rf(RatFunc::new(
            num.into_iter().map(|c| c % p).collect(),
            den.into_iter().map(|c| c % p).collect(),
            p,
        ))
    }

    pub fn from_nf_coeffs(&self, v: Vec<BigRational>) -> FieldElem {
        self.pad_nf(qpoly::divrem(&v, self.nf_minpoly()).1)
    }

    /// Norm of a number-field element over ℚ (determinant of multiplication).
    pub fn nf_norm(&self, a: &FieldElem) -> BigRational {
        let d = self.nf_minpoly().len() - 1;
        let basis: Vec<FieldElem> = (0..d)
            .map(|i| {
                let mut v = vec![BigRational::zero(); d];
                v[i] = BigRational::one();
                FieldElem::Nf(v)
            })
            .collect();
        let rows: Vec<Vec<BigRational>> = basis
            .iter()
            .map(|b| match self.mul(a, b) {
                FieldElem::Nf(v) => v,
                _ => unreachable!(),
            })
            .collect();
        crate::linalg::det_q(rows)
    }
}

fn random_small_rational<R: Rng + ?Sized>(rng: &mut R) -> BigRational {
    let n: i64 = rng.gen_range(-5..=5);
    let d: i64 = rng.gen_range(1..=3);
    BigRational::new(n.into(), d.into())
}

/// The least irreducible monic polynomial of degree `n` over GF(p).
pub fn least_irreducible(p: u64, n: u32) -> Vec<u64> {
    let count = p.pow(n);
    for k in 0..count {
        let mut v = Vec::with_capacity(n as usize + 1);
        let mut x = k;
        for _ in 0..n {
            v.push(x % p);
            x /= p;
        }
        v.push(1);
        if fp::is_irreducible(&v, p) {
            return v;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

pub(crate) fn fmt_fp_poly(v: &[u64], var: &str) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => var.to_string(),
            (1, c) => format!("{c}*{var}"),
            (i, 1) => format!("{var}^{i}"),
            (i, c) => format!("{c}*{var}^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// Formats a coefficient list (low to high) as a polynomial in `var`.
pub(crate) fn fmt_poly_with(field: &Field, coeffs: &[FieldElem], var: &str) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if field.is_zero(c) {
            continue;
        }
        let mut s = field.format(c);
        let negative = matches!(c, FieldElem::Q(q) if q.is_negative());
        let compound = s.contains(['+', '-', '/']) && !(negative && !s[1..].contains(['+', '-', '/']));
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        if i > 0 {
            if field.is_one(c) {
                s = mono;
            } else if compound {
                s = format!("({s})*{mono}");
            } else {
                s = format!("{s}*{mono}");
            }
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        out.push_str(&s);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}
