//! The composite rings `A + X·B[X]`: membership, units, irreducibility,
//! atomic factorization and the constructive witnesses built on them.

mod oracle;
mod report;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::fieldtower::{fp, ExtensionPair, Field, FieldElem, FieldError};
use crate::polyring::{self, Poly, PolyError};

pub use oracle::{BruteForce, OracleLimits};
pub use report::{diagram_violations, property_report, DIAGRAM};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CompositeError {
    #[error("{0} is not an element of the ring")]
    NotAMember(String),
    #[error("{0} is zero or a unit")]
    IsZeroOrUnit(String),
    #[error("the small ring is not a field, so the ring is not atomic")]
    SmallRingNotAField,
    #[error("the small ring is a field; chains of principal ideals stabilize")]
    SmallRingIsAField,
    #[error("{0} does not lie in X·B[X] or is zero")]
    NotInXB(String),
    #[error("{0} is not a usable nonunit divisor")]
    InvalidDivisor(String),
    #[error("search space too large: {0}")]
    SearchSpaceTooLarge(String),
    #[error("the pair {0} is not of the form F_p(t^(p^e)) ⊂ F_p(t)")]
    NotPurelyInseparablePair(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("classifier and divisor search disagree on {0}")]
    OracleDisagreement(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// The coefficient ring of the constant term.
#[derive(Clone, Debug)]
pub enum SmallRing {
    /// A subfield `K` of the big field `L`.
    Field(ExtensionPair),
    /// ℤ inside ℚ.
    Integers,
    /// ℤ with higher coefficients in ℤ_S, `S` generated by the listed primes.
    Localized(Vec<u64>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    FieldField,
    ZInQ,
    ZLocalized,
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RingKind::FieldField => "field-field",
            RingKind::ZInQ => "Z-in-Q",
            RingKind::ZLocalized => "Z-localized",
        })
    }
}

#[derive(Debug)]
struct RingInner {
    small: SmallRing,
    big: Field,
}

/// `A + X·B[X]`. Cloning is cheap.
#[derive(Clone, Debug)]
pub struct CompositeRing(Arc<RingInner>);

impl PartialEq for CompositeRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.to_string() == other.to_string()
    }
}

impl fmt::Display for CompositeRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.small {
            SmallRing::Field(pair) => write!(f, "{} + X*{}[X]", pair.small(), pair.big()),
            SmallRing::Integers => write!(f, "Z + X*Q[X]"),
            SmallRing::Localized(ps) => {
                let list: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
                write!(f, "Z + X*Z_S[X], S generated by {{{}}}", list.join(","))
            }
        }
    }
}

impl CompositeRing {
    /// `K + X·L[X]` for the canonical embedding `K ⊆ L`.
    pub fn fields(small: Field, big: Field) -> Result<CompositeRing, CompositeError> {
        Ok(CompositeRing::from_pair(ExtensionPair::new(small, big)?))
    }

    pub fn from_pair(pair: ExtensionPair) -> CompositeRing {
        let big = pair.big().clone();
        CompositeRing(Arc::new(RingInner {
            small: SmallRing::Field(pair),
            big,
        }))
    }

    /// `ℤ + X·ℚ[X]`.
    pub fn integers_in_rationals() -> CompositeRing {
        CompositeRing(Arc::new(RingInner {
            small: SmallRing::Integers,
            big: Field::rationals(),
        }))
    }

    /// `ℤ + X·ℤ_S[X]` with `S` the saturated multiplicative set generated by `primes`.
    pub fn localized(primes: &[u64]) -> Result<CompositeRing, CompositeError> {
        let mut ps = primes.to_vec();
        ps.sort_unstable();
        ps.dedup();
        if ps.is_empty() {
            return Err(CompositeError::InvalidRing("at least one inverted prime is required".into()));
        }
        if let Some(&bad) = ps.iter().find(|&&p| !fp::is_prime(p)) {
            return Err(CompositeError::Field(FieldError::NotPrime(bad)));
        }
        Ok(CompositeRing(Arc::new(RingInner {
            small: SmallRing::Localized(ps),
            big: Field::rationals(),
        })))
    }

    pub fn small(&self) -> &SmallRing {
        &self.0.small
    }

    pub fn big(&self) -> &Field {
        &self.0.big
    }

    pub fn kind(&self) -> RingKind {
        match self.0.small {
            SmallRing::Field(_) => RingKind::FieldField,
            SmallRing::Integers => RingKind::ZInQ,
            SmallRing::Localized(_) => RingKind::ZLocalized,
        }
    }

    pub fn pair(&self) -> Option<&ExtensionPair> {
        match &self.0.small {
            SmallRing::Field(p) => Some(p),
            _ => None,
        }
    }

    pub fn small_is_field(&self) -> bool {
        self.pair().is_some()
    }

    fn inverted_primes(&self) -> &[u64] {
        match &self.0.small {
            SmallRing::Localized(ps) => ps,
            _ => &[],
        }
    }

    /// Whether a rational is in ℤ_S for this ring's `S` (everything for ℤ ⊂ ℚ).
    fn in_higher_ring(&self, r: &BigRational) -> bool {
        match &self.0.small {
            SmallRing::Localized(ps) => {
                let mut d = r.denom().clone();
                for &p in ps {
                    let bp = BigInt::from(p);
                    while (&d % &bp).is_zero() {
                        d /= &bp;
                    }
                }
                d.is_one()
            }
            _ => true,
        }
    }

    pub fn zero(&self) -> Poly {
        Poly::zero(self.big().clone())
    }

    pub fn one(&self) -> Poly {
        Poly::one(self.big().clone())
    }

    /// Membership: constant term in `A`, higher coefficients in `B`.
    pub fn contains(&self, p: &Poly) -> bool {
        if p.field() != self.big() {
            return false;
        }
        let c0 = p.coeff(0);
        match &self.0.small {
            SmallRing::Field(pair) => pair.contains(&c0),
            SmallRing::Integers | SmallRing::Localized(_) => {
                let FieldElem::Q(c) = &c0 else { return false };
                c.is_integer()
                    && p.coeffs().iter().skip(1).all(|x| match x {
                        FieldElem::Q(r) => self.in_higher_ring(r),
                        _ => false,
                    })
            }
        }
    }

    pub fn element(&self, p: Poly) -> Result<CompositeElement, CompositeError> {
        if self.contains(&p) {
            Ok(CompositeElement { ring: self.clone(), poly: p })
        } else {
            Err(CompositeError::NotAMember(p.to_string()))
        }
    }

    fn require_member(&self, p: &Poly) -> Result<(), CompositeError> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(CompositeError::NotAMember(p.to_string()))
        }
    }

    /// Units: `K*` for field-field rings, `±1` when the small ring is ℤ.
    pub fn is_unit(&self, e: &Poly) -> bool {
        if !self.contains(e) || e.degree() != Some(0) {
            return false;
        }
        match &self.0.small {
            SmallRing::Field(_) => true,
            _ => matches!(&e.coeffs()[0], FieldElem::Q(c) if c.abs().is_one()),
        }
    }

    /// Whether `g` divides `e` in this ring, returning the cofactor.
    pub fn divide(&self, e: &Poly, g: &Poly) -> Option<Poly> {
        if g.is_zero() {
            return None;
        }
        let (q, r) = e.divrem(g).ok()?;
        (r.is_zero() && self.contains(&q)).then_some(q)
    }

    /// Classifies `e` as irreducible or not, naming the case that decided it.
    pub fn classify_irreducible(&self, e: &Poly) -> Result<Irreducibility, CompositeError> {
        self.require_member(e)?;
        if e.is_zero() || self.is_unit(e) {
            return Err(CompositeError::IsZeroOrUnit(e.to_string()));
        }
        let c0 = e.coeff(0);
        let big = self.big();
        if big.is_zero(&c0) {
            return Ok(match self.kind() {
                RingKind::FieldField if e.degree() == Some(1) => Irreducibility::irreducible(IrreducibilityTag::ScaledX),
                RingKind::FieldField => Irreducibility::reducible(IrreducibilityTag::Reducible),
                _ => Irreducibility::reducible(IrreducibilityTag::NonAtomDivisible),
            });
        }
        let q = e.scale(&big.inv(&c0));
        match self.kind() {
            RingKind::FieldField => {
                let irr = polyring::is_irreducible(&q)?;
                Ok(if irr {
                    Irreducibility::irreducible(IrreducibilityTag::UnitConstantForm)
                } else {
                    Irreducibility::reducible(IrreducibilityTag::Reducible)
                })
            }
            _ => self.classify_integral_constant(&c0, &q),
        }
    }

    /// `e = a·q` with `a ∈ ℤ \ {0}`, `q(0) = 1`. Any factorization `e = g·h` has
    /// `g = g0·q_g`, `h = h0·q_h` with `g0·h0 = a` and `q_g·q_h = q` in ℚ[X],
    /// so it suffices to enumerate integer splits and divisors of `q`.
    fn classify_integral_constant(&self, c0: &FieldElem, q: &Poly) -> Result<Irreducibility, CompositeError> {
        let FieldElem::Q(a) = c0 else { unreachable!() };
        let a = a.to_integer();
        let qf = self.big().clone();
        let fac = polyring::factor(q)?;
        // divisors of q normalized to constant term 1
        let mut divisors = vec![Poly::one(qf.clone())];
        for (g, m) in &fac.factors {
            let g1 = g.scale(&qf.inv(&g.coeff(0)));
            let mut next = Vec::new();
            for d in &divisors {
                let mut cur = d.clone();
                next.push(cur.clone());
                for _ in 0..*m {
                    cur = cur.mul(&g1);
                    next.push(cur.clone());
                }
            }
            divisors = next;
        }
        let abs_a = a.abs();
        let mut int_divs = Vec::new();
        let mut k = BigInt::one();
        while &k * &k <= abs_a {
            if (&abs_a % &k).is_zero() {
                int_divs.push(k.clone());
                int_divs.push(&abs_a / &k);
            }
            k += 1;
        }
        for g0 in &int_divs {
            let h0 = &a / g0;
            for qg in &divisors {
                let qh = q.quo(qg);
                let g = qg.scale(&FieldElem::Q(BigRational::from_integer(g0.clone())));
                let h = qh.scale(&FieldElem::Q(BigRational::from_integer(h0.clone())));
                if self.contains(&g) && self.contains(&h) && !self.is_unit(&g) && !self.is_unit(&h) {
                    return Ok(Irreducibility::reducible(IrreducibilityTag::Reducible));
                }
            }
        }
        Ok(Irreducibility::irreducible(IrreducibilityTag::UnitConstantForm))
    }

    /// Boolean form of [`Self::classify_irreducible`].
    pub fn is_irreducible(&self, e: &Poly) -> Result<bool, CompositeError> {
        Ok(self.classify_irreducible(e)?.irreducible)
    }

    /// The classifier, cross-checked against exhaustive divisor search when
    /// the input is within the oracle limits.
    pub fn classify_irreducible_verified(
        &self,
        e: &Poly,
        limits: OracleLimits,
    ) -> Result<Irreducibility, CompositeError> {
        let verdict = self.classify_irreducible(e)?;
        if let Ok(brute) = oracle::brute_is_irreducible(self, e, limits) {
            if brute != verdict.irreducible {
                return Err(CompositeError::OracleDisagreement(e.to_string()));
            }
        }
        Ok(verdict)
    }

    /// `e = c·X^k·∏ q_i` in `L[X]` with `q_i(0) = 1` irreducible; the constant
    /// `c` is folded into the first `X` atom, or returned as the unit if `k = 0`.
    pub fn factor_atoms(&self, e: &Poly) -> Result<Factorization, CompositeError> {
        let Some(pair) = self.pair() else {
            return Err(CompositeError::SmallRingNotAField);
        };
        self.require_member(e)?;
        if e.is_zero() || self.is_unit(e) {
            return Err(CompositeError::IsZeroOrUnit(e.to_string()));
        }
        let big = self.big().clone();
        let k = e.valuation().unwrap();
        let c = e.coeff(k);
        let core = Poly::new(big.clone(), e.coeffs()[k..].to_vec());
        let fac = polyring::factor(&core)?;
        let mut atoms = Vec::new();
        for i in 0..k {
            let coeff = if i == 0 { c.clone() } else { big.one() };
            atoms.push(Poly::monomial(big.clone(), coeff, 1));
        }
        for (g, m) in &fac.factors {
            let g1 = g.scale(&big.inv(&g.coeff(0)));
            for _ in 0..*m {
                atoms.push(g1.clone());
            }
        }
        let unit = if k == 0 {
            pair.pullback(&c).expect("constant term of a member lies in K")
        } else {
            pair.small().one()
        };
        Ok(Factorization { unit, atoms })
    }

    /// `(f) ⊊ (f/d) ⊊ (f/d²) ⊊ …`, each step certified.
    pub fn accp_failure_chain(&self, f: &Poly, d: &BigInt, steps: usize) -> Result<PrincipalChain, CompositeError> {
        if self.small_is_field() {
            return Err(CompositeError::SmallRingIsAField);
        }
        if f.is_zero() || !self.contains(f) || !f.field().is_zero(&f.coeff(0)) {
            return Err(CompositeError::NotInXB(f.to_string()));
        }
        if d.is_zero() || d.abs().is_one() {
            return Err(CompositeError::InvalidDivisor(format!("{d} is zero or a unit of Z")));
        }
        let big = self.big();
        let d_elem = FieldElem::Q(BigRational::from_integer(d.clone()));
        let d_inv = big.inv(&d_elem);
        if !self.in_higher_ring(&BigRational::new(BigInt::one(), d.clone())) {
            return Err(CompositeError::InvalidDivisor(format!(
                "1/{d} is not allowed in the higher coefficients"
            )));
        }
        let mut generators = vec![f.clone()];
        for _ in 0..steps {
            let next = generators.last().unwrap().scale(&d_inv);
            generators.push(next);
        }
        let inv_const = Poly::constant(big.clone(), d_inv);
        let d_const = Poly::constant(big.clone(), d_elem);
        let strict = generators
            .windows(2)
            .map(|w| {
                let contained = self.contains(&w[1]) && self.divide(&w[0], &w[1]).as_ref() == Some(&d_const);
                let reverse_fails = self.divide(&w[1], &w[0]).is_none() && !self.contains(&inv_const);
                contained && reverse_fails && !self.is_unit(&d_const)
            })
            .collect();
        Ok(PrincipalChain {
            generators,
            divisor: d.clone(),
            strict,
        })
    }

    /// Smallest `n` with `f^(p^n), g^(p^n) ∈ K[X]`, with the gcd `h` of the two
    /// powers over `K` and Bézout cofactors. `f`, `g` may be any polynomials
    /// over `L`; every ring between `K[X]` and `L[X]` is covered.
    pub fn almost_bezout_witness(&self, f: &Poly, g: &Poly) -> Result<BezoutWitness, CompositeError> {
        let pair = match self.pair() {
            Some(p) if p.is_perfect_power_pair() => p,
            _ => return Err(CompositeError::NotPurelyInseparablePair(self.to_string())),
        };
        if f.is_zero() || g.is_zero() {
            return Err(CompositeError::IsZeroOrUnit("0".into()));
        }
        if f.field() != self.big() || g.field() != self.big() {
            return Err(CompositeError::NotAMember(format!("{f}, {g}")));
        }
        let e = pair.inseparable_exponent().unwrap();
        for n in 0..=e {
            if let (Some(fp), Some(gp)) = (frobenius_into_small(pair, f, n), frobenius_into_small(pair, g, n)) {
                let (h, s, t) = fp.gcd_extended(&gp);
                return Ok(BezoutWitness {
                    n,
                    f_power: fp,
                    g_power: gp,
                    h,
                    s,
                    t,
                });
            }
        }
        unreachable!("p^e-th powers always land in the subfield")
    }

    /// The class of `p`'s constant term in `B/A`; zero exactly on members.
    pub fn quotient_class(&self, p: &Poly) -> Result<QuotientClass, CompositeError> {
        if p.field() != self.big() {
            return Err(CompositeError::NotAMember(p.to_string()));
        }
        let c0 = p.coeff(0);
        match &self.0.small {
            SmallRing::Field(pair) => Ok(QuotientClass::Field {
                field: pair.big().clone(),
                rep: pair.coset_representative(&c0),
            }),
            SmallRing::Integers | SmallRing::Localized(_) => {
                let higher_ok = p.coeffs().iter().all(|x| match x {
                    FieldElem::Q(r) => self.in_higher_ring(r),
                    _ => false,
                });
                if !higher_ok {
                    return Err(CompositeError::NotAMember(format!("{p} has coefficients outside Z_S")));
                }
                let FieldElem::Q(c) = c0 else { unreachable!() };
                let frac = &c - c.floor();
                Ok(QuotientClass::RationalModZ(frac))
            }
        }
    }

    /// A nonunit of the small ring that divides every element of `X·B[X]`
    /// (only when the small ring is not a field).
    pub fn canonical_nonunit(&self) -> Option<BigInt> {
        match &self.0.small {
            SmallRing::Field(_) => None,
            SmallRing::Integers => Some(BigInt::from(2)),
            SmallRing::Localized(ps) => Some(BigInt::from(ps[0])),
        }
    }

    /// The inverted primes (empty unless localized).
    pub fn primes(&self) -> &[u64] {
        self.inverted_primes()
    }

    /// Associate normal form in a field-field ring: scale by the element of `K*`
    /// that makes the lowest nonzero coefficient least in index order.
    pub fn normal_form(&self, g: &Poly) -> Poly {
        let Some(pair) = self.pair() else {
            return g.clone();
        };
        let Some(v) = g.valuation() else {
            return g.clone();
        };
        let k = pair.small();
        let big = self.big();
        let c = g.coeff(v);
        if !k.is_finite() {
            return if pair.contains(&c) { g.scale(&big.inv(&c)) } else { g.clone() };
        }
        let best = k
            .elements()
            .filter(|u| !k.is_zero(u))
            .map(|u| pair.embed(&u))
            .min_by_key(|u| big.index_of(&big.mul(u, &c)))
            .unwrap();
        g.scale(&best)
    }
}

fn frobenius_into_small(pair: &ExtensionPair, f: &Poly, n: u32) -> Option<Poly> {
    let big = pair.big();
    let k = pair.small();
    let q = big.characteristic().pow(n) as usize;
    let mut coeffs = vec![k.zero(); (f.degree().unwrap()) * q + 1];
    for (i, c) in f.coeffs().iter().enumerate() {
        coeffs[i * q] = pair.pullback(&big.frobenius(c, n))?;
    }
    Some(Poly::new(k.clone(), coeffs))
}

/// A ring element with its membership checked.
#[derive(Clone, Debug)]
pub struct CompositeElement {
    ring: CompositeRing,
    poly: Poly,
}

impl CompositeElement {
    pub fn ring(&self) -> &CompositeRing {
        &self.ring
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }
}

impl fmt::Display for CompositeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IrreducibilityTag {
    ScaledX,
    UnitConstantForm,
    Reducible,
    NonAtomDivisible,
}

impl fmt::Display for IrreducibilityTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IrreducibilityTag::ScaledX => "scaled-X",
            IrreducibilityTag::UnitConstantForm => "unit-constant-form",
            IrreducibilityTag::Reducible => "reducible",
            IrreducibilityTag::NonAtomDivisible => "non-atom-divisible",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Irreducibility {
    pub irreducible: bool,
    pub tag: IrreducibilityTag,
}

impl Irreducibility {
    fn irreducible(tag: IrreducibilityTag) -> Self {
        Irreducibility { irreducible: true, tag }
    }

    fn reducible(tag: IrreducibilityTag) -> Self {
        Irreducibility { irreducible: false, tag }
    }
}

/// `unit · ∏ atoms`; the unit is an element of the small field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FieldElem,
    pub atoms: Vec<Poly>,
}

impl Factorization {
    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn expand(&self, ring: &CompositeRing) -> Poly {
        let pair = ring.pair().expect("field-field ring");
        let unit = Poly::constant(ring.big().clone(), pair.embed(&self.unit));
        self.atoms.iter().fold(unit, |acc, a| acc.mul(a))
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.atoms.iter().map(|a| format!("({a})")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Principal ideals `(g_0) ⊊ (g_1) ⊊ …` with `g_k = d·g_(k+1)`.
#[derive(Clone, Debug)]
pub struct PrincipalChain {
    pub generators: Vec<Poly>,
    pub divisor: BigInt,
    /// `strict[k]` certifies `(g_k) ⊊ (g_(k+1))`.
    pub strict: Vec<bool>,
}

impl PrincipalChain {
    pub fn all_strict(&self) -> bool {
        self.strict.iter().all(|&s| s)
    }
}

impl fmt::Display for PrincipalChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(|g| format!("({g})")).collect();
        f.write_str(&parts.join(" < "))
    }
}

#[derive(Clone, Debug)]
pub struct BezoutWitness {
    pub n: u32,
    /// `f^(p^n)` as a polynomial over `K`.
    pub f_power: Poly,
    pub g_power: Poly,
    pub h: Poly,
    pub s: Poly,
    pub t: Poly,
}

impl BezoutWitness {
    /// `s·F + t·G = h`, `h | F` and `h | G`: the ideal `(F, G)` equals `(h)`.
    pub fn verify(&self) -> bool {
        let lhs = self.s.mul(&self.f_power).add(&self.t.mul(&self.g_power));
        lhs == self.h && self.h.divides(&self.f_power) && self.h.divides(&self.g_power)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuotientClass {
    /// Representative of `c + K` in `L`.
    Field { field: Field, rep: FieldElem },
    /// Fractional part of the constant term.
    RationalModZ(BigRational),
}

impl QuotientClass {
    pub fn is_zero(&self) -> bool {
        match self {
            QuotientClass::Field { field, rep } => field.is_zero(rep),
            QuotientClass::RationalModZ(r) => r.is_zero(),
        }
    }
}

impl fmt::Display for QuotientClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientClass::Field { field, rep } => write!(f, "{} + A", field.format(rep)),
            QuotientClass::RationalModZ(r) => write!(f, "{r} + Z"),
        }
    }
}
