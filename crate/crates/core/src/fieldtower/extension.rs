//! Embedded field pairs `K ⊆ L` and the extension predicates decided on them.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::field::{Field, FieldDescriptor, FieldElem, RatFunc};
use super::{fp, Cardinal, FieldError};
use crate::linalg::{FpSpan, QSpan};
use crate::polyring::{self, Poly};

/// Three-valued predicate outcome. `Unknown` means the field kinds fall outside
/// what the library can decide; it is never a guess.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tri {
    True,
    False,
    Unknown,
}

impl Tri {
    pub fn from_bool(b: bool) -> Tri {
        if b {
            Tri::True
        } else {
            Tri::False
        }
    }

    pub fn known(self) -> Option<bool> {
        match self {
            Tri::True => Some(true),
            Tri::False => Some(false),
            Tri::Unknown => None,
        }
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tri::True => "true",
            Tri::False => "false",
            Tri::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Predicate {
    Algebraic,
    Separable,
    Normal,
    Galois,
    PurelyInseparable,
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Predicate::Algebraic => "algebraic",
            Predicate::Separable => "separable",
            Predicate::Normal => "normal",
            Predicate::Galois => "galois",
            Predicate::PurelyInseparable => "purely_inseparable",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtensionPredicates {
    pub algebraic: Tri,
    pub separable: Tri,
    pub normal: Tri,
    pub galois: Tri,
    pub purely_inseparable: Tri,
}

impl ExtensionPredicates {
    pub fn get(&self, p: Predicate) -> Tri {
        match p {
            Predicate::Algebraic => self.algebraic,
            Predicate::Separable => self.separable,
            Predicate::Normal => self.normal,
            Predicate::Galois => self.galois,
            Predicate::PurelyInseparable => self.purely_inseparable,
        }
    }
}

impl fmt::Display for ExtensionPredicates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "algebraic={} separable={} normal={} galois={} purely_inseparable={}",
            self.algebraic, self.separable, self.normal, self.galois, self.purely_inseparable
        )
    }
}

/// The automorphism `x ↦ x^(q^power)` of a finite field, `q = |K|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    pub power: u32,
    pub q: u64,
}

impl Automorphism {
    pub fn apply(&self, field: &Field, x: &FieldElem) -> FieldElem {
        (0..self.power).fold(x.clone(), |acc, _| field.pow(&acc, self.q))
    }

    pub fn is_identity(&self) -> bool {
        self.power == 0
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.power == 0 {
            write!(f, "id")
        } else {
            write!(f, "x->x^{}", (self.q as u128).pow(self.power))
        }
    }
}

/// `|L*/K*|` with coset representatives when finite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetIndex {
    pub index: Cardinal,
    pub representatives: Vec<FieldElem>,
}

#[derive(Clone, Debug)]
enum PairKind {
    Identity,
    /// GF(p^m) into GF(p^n): images of the powers of K's generator.
    FiniteFinite { basis_images: Vec<Vec<u64>>, span: FpSpan },
    /// GF(p) into a rational function field of characteristic p.
    PrimeIntoFunction,
    RationalsIntoNumberField,
    /// F_p(u) into F_p(t) via u ↦ t^q, q = p^e.
    SubfieldIntoFunction { q: usize },
}

/// An embedded pair `small ⊆ big`.
#[derive(Clone, Debug)]
pub struct ExtensionPair {
    small: Field,
    big: Field,
    kind: PairKind,
}

impl fmt::Display for ExtensionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊆ {}", self.small, self.big)
    }
}

impl ExtensionPair {
    /// Builds the canonical embedding of `small` into `big` and spot-checks
    /// that it is a ring homomorphism.
    pub fn new(small: Field, big: Field) -> Result<ExtensionPair, FieldError> {
        let incompatible = |why: &str| FieldError::IncompatibleFields(format!("{small} into {big}: {why}"));
        if small.characteristic() != big.characteristic() {
            return Err(incompatible("characteristic mismatch"));
        }
        let kind = if small == big {
            PairKind::Identity
        } else {
            match (small.descriptor(), big.descriptor()) {
                (
                    FieldDescriptor::Prime { .. } | FieldDescriptor::Finite { .. },
                    FieldDescriptor::Prime { .. } | FieldDescriptor::Finite { .. },
                ) => {
                    let m = small.absolute_degree().unwrap();
                    let n = big.absolute_degree().unwrap();
                    if n % m != 0 {
                        return Err(incompatible(&format!("{m} does not divide {n}")));
                    }
                    if m == n {
                        return Err(incompatible("distinct moduli of equal degree are not identified"));
                    }
                    let p = big.characteristic();
                    let gamma = if m == 1 {
                        big.one()
                    } else {
                        generator_image(&small, &big)?
                    };
                    let mut basis_images = Vec::with_capacity(m as usize);
                    let mut cur = big.one();
                    for _ in 0..m {
                        basis_images.push(ff_coords(&cur));
                        cur = big.mul(&cur, &gamma);
                    }
                    let span = FpSpan::from_vectors(p, basis_images.clone());
                    PairKind::FiniteFinite { basis_images, span }
                }
                (
                    FieldDescriptor::Prime { .. },
                    FieldDescriptor::FunctionField { .. } | FieldDescriptor::PerfectPowerSubfield { .. },
                ) => PairKind::PrimeIntoFunction,
                (FieldDescriptor::Rationals, FieldDescriptor::NumberField { .. }) => {
                    PairKind::RationalsIntoNumberField
                }
                (FieldDescriptor::PerfectPowerSubfield { p, e }, FieldDescriptor::FunctionField { .. }) => {
                    PairKind::SubfieldIntoFunction { q: p.pow(*e) as usize }
                }
                _ => return Err(incompatible("unsupported pair")),
            }
        };
        let pair = ExtensionPair { small, big, kind };
        if !pair.embedding_is_homomorphism() {
            return Err(FieldError::IncompatibleFields(format!(
                "embedding {pair} failed the homomorphism spot-check"
            )));
        }
        Ok(pair)
    }

    pub fn small(&self) -> &Field {
        &self.small
    }

    pub fn big(&self) -> &Field {
        &self.big
    }

    pub fn is_identity(&self) -> bool {
        matches!(self.kind, PairKind::Identity)
    }

    pub fn is_finite_pair(&self) -> bool {
        self.small.is_finite() && self.big.is_finite()
    }

    /// Whether this is a pair F_p(t^(p^e)) ⊂ F_p(t).
    pub fn is_perfect_power_pair(&self) -> bool {
        matches!(self.kind, PairKind::SubfieldIntoFunction { .. })
    }

    /// Exponent `e` of a pair F_p(t^(p^e)) ⊂ F_p(t).
    pub fn inseparable_exponent(&self) -> Option<u32> {
        match self.small.descriptor() {
            FieldDescriptor::PerfectPowerSubfield { e, .. } if self.is_perfect_power_pair() => Some(*e),
            _ => None,
        }
    }

    /// Image of a `small` element in `big`.
    pub fn embed(&self, a: &FieldElem) -> FieldElem {
        match (&self.kind, a) {
            (PairKind::Identity, _) => a.clone(),
            (PairKind::FiniteFinite { basis_images, .. }, FieldElem::Ff(v)) => {
                let p = self.big.characteristic();
                let n = self.big.absolute_degree().unwrap() as usize;
                let mut out = vec![0u64; n];
                for (&c, img) in v.iter().zip(basis_images) {
                    for (o, &x) in out.iter_mut().zip(img) {
                        *o = fp::add_mod(*o, fp::mul_mod(c, x, p), p);
                    }
                }
                FieldElem::Ff(out)
            }
            (PairKind::PrimeIntoFunction, FieldElem::Ff(v)) => FieldElem::Rf(RatFunc::constant(v[0])),
            (PairKind::RationalsIntoNumberField, FieldElem::Q(q)) => {
                self.big.from_rational(q).unwrap()
            }
            (PairKind::SubfieldIntoFunction { q }, FieldElem::Rf(r)) => FieldElem::Rf(RatFunc {
                num: fp::inflate(&r.num, *q),
                den: fp::inflate(&r.den, *q),
            }),
            _ => panic!("element is not in {}", self.small),
        }
    }

    /// The preimage of a `big` element, if it lies in the image of `small`.
    pub fn pullback(&self, x: &FieldElem) -> Option<FieldElem> {
        match (&self.kind, x) {
            (PairKind::Identity, _) => Some(x.clone()),
            (PairKind::FiniteFinite { span, .. }, FieldElem::Ff(v)) => {
                let coeffs = span.express(v)?;
                Some(self.small.from_ff_coeffs(coeffs))
            }
            (PairKind::PrimeIntoFunction, FieldElem::Rf(r)) => {
                if r.den == [1] && r.num.len() <= 1 {
                    Some(self.small.from_prime_field(r.num.first().copied().unwrap_or(0)))
                } else {
                    None
                }
            }
            (PairKind::RationalsIntoNumberField, FieldElem::Nf(v)) => {
                if v[1..].iter().all(|c| c.is_zero()) {
                    Some(FieldElem::Q(v[0].clone()))
                } else {
                    None
                }
            }
            (PairKind::SubfieldIntoFunction { q }, FieldElem::Rf(r)) => {
                let num = fp::deflate(&r.num, *q)?;
                let den = fp::deflate(&r.den, *q)?;
                Some(FieldElem::Rf(RatFunc { num, den }))
            }
            _ => None,
        }
    }

    pub fn contains(&self, x: &FieldElem) -> bool {
        self.pullback(x).is_some()
    }

    /// Canonical representative of the additive coset `x + K` in `L`; zero
    /// exactly when `x ∈ K`.
    pub fn coset_representative(&self, x: &FieldElem) -> FieldElem {
        match (&self.kind, x) {
            (PairKind::Identity, _) => self.big.zero(),
            (PairKind::FiniteFinite { span, .. }, FieldElem::Ff(v)) => {
                let mut r = span.reduce(v);
                r.resize(v.len(), 0);
                FieldElem::Ff(r)
            }
            (PairKind::PrimeIntoFunction, FieldElem::Rf(r)) => {
                let p = self.big.characteristic();
                let (quot, _) = fp::divrem(&r.num, &r.den, p);
                let c = quot.first().copied().unwrap_or(0);
                self.big.sub(x, &self.big.from_prime_field(c))
            }
            (PairKind::RationalsIntoNumberField, FieldElem::Nf(v)) => {
                let mut w = v.clone();
                w[0] = BigRational::zero();
                FieldElem::Nf(w)
            }
            (PairKind::SubfieldIntoFunction { q }, FieldElem::Rf(r)) => {
                let p = self.big.characteristic();
                // a/b = a*b^(q-1) / b^q with b^q ∈ K; the K-component of the
                // numerator is its part supported on exponents divisible by q.
                let mut bpow = vec![1u64];
                for _ in 1..*q {
                    bpow = fp::mul(&bpow, &r.den, p);
                }
                let num = fp::mul(&r.num, &bpow, p);
                let den = fp::mul(&bpow, &r.den, p);
                let mut rest = num.clone();
                for (i, c) in rest.iter_mut().enumerate() {
                    if i % q == 0 {
                        *c = 0;
                    }
                }
                self.big.from_ratfunc(rest, den)
            }
            _ => panic!("element is not in {}", self.big),
        }
    }

    fn embedding_is_homomorphism(&self) -> bool {
        let (k, l) = (&self.small, &self.big);
        if l.add(&self.embed(&k.one()), &l.zero()) != l.one() || !l.is_zero(&self.embed(&k.zero())) {
            return false;
        }
        let mut samples = vec![k.one(), k.from_int(2)];
        if let Some(g) = k.generator() {
            samples.push(g.clone());
            samples.push(k.add(&g, &k.one()));
        }
        for a in &samples {
            for b in &samples {
                let sum = self.embed(&k.add(a, b));
                let prod = self.embed(&k.mul(a, b));
                if sum != l.add(&self.embed(a), &self.embed(b)) || prod != l.mul(&self.embed(a), &self.embed(b)) {
                    return false;
                }
                if self.pullback(&self.embed(a)).as_ref() != Some(a) {
                    return false;
                }
            }
        }
        true
    }

    /// `[L : K]`.
    pub fn degree(&self) -> Cardinal {
        match &self.kind {
            PairKind::Identity => Cardinal::Finite(1),
            PairKind::FiniteFinite { basis_images, .. } => {
                Cardinal::Finite(self.big.absolute_degree().unwrap() as u64 / basis_images.len() as u64)
            }
            PairKind::PrimeIntoFunction => Cardinal::Infinite,
            PairKind::RationalsIntoNumberField => Cardinal::Finite(self.big.absolute_degree().unwrap() as u64),
            PairKind::SubfieldIntoFunction { q } => Cardinal::Finite(*q as u64),
        }
    }

    /// Monic minimal polynomial of `alpha ∈ L` over `K`.
    pub fn minimal_polynomial(&self, alpha: &FieldElem) -> Result<Poly, FieldError> {
        if !self.big.owns(alpha) {
            return Err(FieldError::NotAnElement(self.big.to_string()));
        }
        let k = &self.small;
        if let Some(a) = self.pullback(alpha) {
            return Ok(Poly::new(k.clone(), vec![k.neg(&a), k.one()]));
        }
        match &self.kind {
            PairKind::FiniteFinite { .. } => {
                let l = &self.big;
                let q = k.order().unwrap();
                let mut orbit = vec![alpha.clone()];
                loop {
                    let next = l.pow(orbit.last().unwrap(), q);
                    if &next == alpha {
                        break;
                    }
                    orbit.push(next);
                }
                let prod = orbit.iter().fold(Poly::one(l.clone()), |acc, r| {
                    acc.mul(&Poly::new(l.clone(), vec![l.neg(r), l.one()]))
                });
                let coeffs = prod
                    .coeffs()
                    .iter()
                    .map(|c| self.pullback(c).expect("orbit product has coefficients in K"))
                    .collect();
                Ok(Poly::new(k.clone(), coeffs))
            }
            PairKind::RationalsIntoNumberField => {
                let l = &self.big;
                let mut span = QSpan::new();
                let mut cur = l.one();
                loop {
                    let FieldElem::Nf(v) = &cur else { unreachable!() };
                    if let Some(rel) = span.insert(v.clone()) {
                        let coeffs = rel.into_iter().map(FieldElem::Q).collect();
                        return Ok(Poly::new(k.clone(), coeffs));
                    }
                    cur = l.mul(&cur, alpha);
                }
            }
            PairKind::SubfieldIntoFunction { q } => {
                let l = &self.big;
                let p = l.characteristic();
                let mut e = 0u32;
                loop {
                    let pw = l.frobenius(alpha, e);
                    if let Some(beta) = self.pullback(&pw) {
                        let deg = p.pow(e) as usize;
                        let mut coeffs = vec![k.zero(); deg + 1];
                        coeffs[0] = k.neg(&beta);
                        coeffs[deg] = k.one();
                        return Ok(Poly::new(k.clone(), coeffs));
                    }
                    e += 1;
                    assert!(p.pow(e) as usize <= *q, "t^q always lies in the subfield");
                }
            }
            PairKind::PrimeIntoFunction => Err(FieldError::NotAlgebraic(self.big.format(alpha))),
            PairKind::Identity => unreachable!("identity pullback always succeeds"),
        }
    }

    /// Decides the extension predicates where supported; `Unknown` elsewhere.
    pub fn predicates(&self) -> ExtensionPredicates {
        let unknown = ExtensionPredicates {
            algebraic: Tri::Unknown,
            separable: Tri::Unknown,
            normal: Tri::Unknown,
            galois: Tri::Unknown,
            purely_inseparable: Tri::Unknown,
        };
        match &self.kind {
            PairKind::Identity => ExtensionPredicates {
                algebraic: Tri::True,
                separable: Tri::True,
                normal: Tri::True,
                galois: Tri::True,
                purely_inseparable: Tri::True,
            },
            PairKind::PrimeIntoFunction => ExtensionPredicates {
                algebraic: Tri::False,
                purely_inseparable: Tri::False,
                ..unknown
            },
            PairKind::FiniteFinite { .. } | PairKind::RationalsIntoNumberField | PairKind::SubfieldIntoFunction { .. } => {
                let gen = self.big.generator().expect("proper extension has a generator");
                let m = self.minimal_polynomial(&gen).expect("finite extensions are algebraic");
                let separable = m.gcd(&m.derivative()).is_one();
                let normal = self.splits_in_big(&m, &gen);
                let purely_inseparable = match &self.kind {
                    PairKind::SubfieldIntoFunction { .. } => self.contains(
                        &self.big.frobenius(&gen, self.inseparable_exponent().unwrap()),
                    ),
                    _ => self.degree() == Cardinal::Finite(1),
                };
                ExtensionPredicates {
                    algebraic: Tri::True,
                    separable: Tri::from_bool(separable),
                    normal: Tri::from_bool(normal),
                    galois: Tri::from_bool(separable && normal),
                    purely_inseparable: Tri::from_bool(purely_inseparable),
                }
            }
        }
    }

    /// Strict decision of one predicate.
    pub fn decide(&self, predicate: Predicate) -> Result<bool, FieldError> {
        self.predicates()
            .get(predicate)
            .known()
            .ok_or_else(|| FieldError::UnsupportedPredicate {
                predicate: predicate.to_string(),
                pair: self.to_string(),
            })
    }

    /// Whether the minimal polynomial `m` of the generator splits into linear
    /// factors over `L`.
    fn splits_in_big(&self, m: &Poly, gen: &FieldElem) -> bool {
        let l = &self.big;
        let m_big = m.map_field(l.clone(), |c| self.embed(c));
        match &self.kind {
            PairKind::FiniteFinite { .. } => {
                // m | x^|L| - x
                let x = Poly::x(l.clone());
                let xq = x.powmod(l.order().unwrap(), &m_big);
                xq.sub(&x).rem(&m_big).is_zero()
            }
            PairKind::RationalsIntoNumberField => match polyring::factor(&m_big) {
                Ok(f) => f.factors.iter().all(|(g, _)| g.degree() == Some(1)),
                Err(_) => false,
            },
            PairKind::SubfieldIntoFunction { q } => {
                let lin = Poly::new(l.clone(), vec![l.neg(gen), l.one()]);
                lin.pow(*q as u64) == m_big
            }
            _ => unreachable!(),
        }
    }

    /// The automorphisms of `L` fixing `K` (finite fields only).
    pub fn automorphism_group(&self) -> Result<Vec<Automorphism>, FieldError> {
        match &self.kind {
            PairKind::Identity => Ok(vec![Automorphism {
                power: 0,
                q: self.small.order().unwrap_or(1),
            }]),
            PairKind::FiniteFinite { .. } => {
                let q = self.small.order().unwrap();
                let d = self.degree().finite().unwrap() as u32;
                Ok((0..d).map(|power| Automorphism { power, q }).collect())
            }
            _ => Err(FieldError::UnsupportedPredicate {
                predicate: "automorphism_group".into(),
                pair: self.to_string(),
            }),
        }
    }

    /// Checks element by element that the fixed field of the automorphism
    /// group is exactly `K`. Fields larger than `limit` are checked on the
    /// first `limit` elements in index order.
    pub fn fixed_field_is_small(&self, limit: u64) -> Result<bool, FieldError> {
        let group = self.automorphism_group()?;
        let l = &self.big;
        let Some(order) = l.order() else {
            return Ok(true);
        };
        Ok((0..order.min(limit)).all(|i| {
            let x = l.element_at(i);
            let fixed = group.iter().all(|s| s.apply(l, &x) == x);
            fixed == self.contains(&x)
        }))
    }

    /// `|L*/K*|` with representatives `g^0, ..., g^(idx-1)` for a primitive `g`.
    pub fn unit_coset_index(&self) -> CosetIndex {
        match &self.kind {
            PairKind::Identity => CosetIndex {
                index: Cardinal::Finite(1),
                representatives: vec![self.big.one()],
            },
            PairKind::FiniteFinite { .. } => {
                let l = &self.big;
                let idx = (l.order().unwrap() - 1) / (self.small.order().unwrap() - 1);
                let g = l.primitive_element().unwrap();
                let mut reps = Vec::with_capacity(idx as usize);
                let mut cur = l.one();
                for _ in 0..idx {
                    reps.push(cur.clone());
                    cur = l.mul(&cur, &g);
                }
                CosetIndex {
                    index: Cardinal::Finite(idx),
                    representatives: reps,
                }
            }
            _ => CosetIndex {
                index: Cardinal::Infinite,
                representatives: Vec::new(),
            },
        }
    }
}

/// Functional alias for [`ExtensionPair::new`].
pub fn make_extension(small: Field, big: Field) -> Result<ExtensionPair, FieldError> {
    ExtensionPair::new(small, big)
}

fn ff_coords(x: &FieldElem) -> Vec<u64> {
    match x {
        FieldElem::Ff(v) => v.clone(),
        _ => unreachable!(),
    }
}

/// The least root (in index order) of `small`'s modulus inside `big`.
fn generator_image(small: &Field, big: &Field) -> Result<FieldElem, FieldError> {
    let modulus = small.ff_modulus().unwrap();
    let m_big = Poly::new(
        big.clone(),
        modulus.iter().map(|&c| big.from_prime_field(c)).collect(),
    );
    let roots = polyring::roots(&m_big).map_err(|e| FieldError::IncompatibleFields(e.to_string()))?;
    roots
        .into_iter()
        .min_by_key(|r| big.index_of(r))
        .ok_or_else(|| FieldError::IncompatibleFields(format!("{small} does not embed in {big}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, n: u32) -> Field {
        Field::finite(p, n, None).unwrap()
    }

    #[test]
    fn finite_degrees_and_errors() {
        let pair = ExtensionPair::new(gf(2, 1), gf(2, 2)).unwrap();
        assert_eq!(pair.degree(), Cardinal::Finite(2));
        let id = ExtensionPair::new(gf(3, 1), gf(3, 1)).unwrap();
        assert_eq!(id.degree(), Cardinal::Finite(1));
        assert!(matches!(
            ExtensionPair::new(gf(2, 2), gf(2, 3)),
            Err(FieldError::IncompatibleFields(_))
        ));
        let sub = ExtensionPair::new(gf(2, 2), gf(2, 4)).unwrap();
        assert_eq!(sub.degree(), Cardinal::Finite(2));
    }

    #[test]
    fn coset_representatives_vanish_on_small() {
        let pair = ExtensionPair::new(gf(2, 2), gf(2, 4)).unwrap();
        for x in pair.big().elements() {
            let r = pair.coset_representative(&x);
            assert_eq!(pair.big().is_zero(&r), pair.contains(&x));
            let diff = pair.big().sub(&x, &r);
            assert!(pair.contains(&diff));
        }
    }

    #[test]
    fn function_field_coset_representative() {
        let k = Field::perfect_power_subfield(2, 1).unwrap();
        let l = Field::function_field(2).unwrap();
        let pair = ExtensionPair::new(k, l.clone()).unwrap();
        // (t^3 + t^2 + 1)/(t+1): check x - rep ∈ K and rep ∉ K unless zero
        let x = l.from_ratfunc(vec![1, 0, 1, 1], vec![1, 1]);
        let r = pair.coset_representative(&x);
        assert!(pair.contains(&l.sub(&x, &r)));
        assert!(!pair.contains(&r));
        let y = l.from_ratfunc(vec![1, 0, 1], vec![0, 0, 1]);
        assert!(l.is_zero(&pair.coset_representative(&y)));
    }
}
