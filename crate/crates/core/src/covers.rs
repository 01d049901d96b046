//! Rings of polynomials that map a subring into itself, `I(B, A)`, and the
//! composite rings `A + X·B[X]` covering them.
//!
//! The cover is certified by a witness polynomial in `I(B, A)` whose leading
//! coefficient escapes `A`: no composite with a smaller top ring contains it.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::composite::CompositeRing;
use crate::fieldtower::{ExtensionPair, Field, FieldElem};
use crate::polyring::Poly;

/// Witnesses over ℤ are evaluated on `-SAMPLE..=SAMPLE` after construction.
pub const SAMPLE: i64 = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error("modulus {0} is zero or a unit")]
    UnitOrZeroModulus(BigInt),
    #[error("{0} is not embedded in {1}")]
    NotEmbedded(String, String),
    #[error("the small field {0} is not finite")]
    InfiniteSubring(String),
    #[error("witness {0} failed its membership check")]
    WitnessCheckFailed(String),
}

/// Which `I(B, A)` is being covered.
#[derive(Clone, Debug)]
pub enum CoverVariant {
    /// `I(ℚ, ℤ)`; the witness uses residues modulo `modulus`.
    ResidueFinite { modulus: BigInt },
    /// `I(B, A)` for a finite field `A ⊆ B`; the witness is scaled by `b ∈ B`.
    FiniteSubring { pair: ExtensionPair, b: FieldElem },
}

impl CoverVariant {
    pub fn integers(modulus: i64) -> CoverVariant {
        CoverVariant::ResidueFinite {
            modulus: BigInt::from(modulus),
        }
    }

    pub fn finite(small: Field, big: Field, b: FieldElem) -> Result<CoverVariant, CoverError> {
        let pair = embedded_pair(&small, &big)?;
        Ok(CoverVariant::FiniteSubring { pair, b })
    }
}

impl fmt::Display for CoverVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverVariant::ResidueFinite { modulus } => write!(f, "I(Q, Z) r={modulus}"),
            CoverVariant::FiniteSubring { pair, b } => {
                write!(f, "I({}, {}) b={}", pair.big(), pair.small(), pair.big().format(b))
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct CoverInstance {
    pub variant: CoverVariant,
    pub witness: Poly,
    pub cover: CompositeRing,
}

impl fmt::Display for CoverInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ring={} cover=\"{}\" witness=\"{}\"", self.variant, self.cover, self.witness)
    }
}

fn embedded_pair(small: &Field, big: &Field) -> Result<ExtensionPair, CoverError> {
    if !small.is_finite() {
        return Err(CoverError::InfiniteSubring(small.to_string()));
    }
    ExtensionPair::new(small.clone(), big.clone()).map_err(|_| CoverError::NotEmbedded(small.to_string(), big.to_string()))
}

fn rational(n: &BigInt) -> FieldElem {
    FieldElem::Q(BigRational::from_integer(n.clone()))
}

fn is_integral_value(f: &Poly, a: &BigInt) -> bool {
    matches!(f.evaluate(&rational(a)), Ok(FieldElem::Q(v)) if v.is_integer())
}

/// `(1/r)·X·(X - 1)···(X - (|r| - 1))`, integer valued on ℤ because every
/// integer is congruent to one of the roots modulo `r`.
pub fn residue_witness(r: &BigInt) -> Result<Poly, CoverError> {
    let n = r.abs();
    if n < BigInt::from(2) {
        return Err(CoverError::UnitOrZeroModulus(r.clone()));
    }
    let q = Field::rationals();
    let count = n.to_u64().ok_or_else(|| CoverError::UnitOrZeroModulus(r.clone()))?;
    let mut f = Poly::constant(q.clone(), FieldElem::Q(BigRational::new(BigInt::one(), r.clone())));
    for i in 0..count {
        f = f.mul(&Poly::new(q.clone(), vec![rational(&-BigInt::from(i)), q.one()]));
    }
    if !(-SAMPLE..=SAMPLE).all(|a| is_integral_value(&f, &BigInt::from(a))) {
        return Err(CoverError::WitnessCheckFailed(f.to_string()));
    }
    Ok(f)
}

/// `b·∏_{a ∈ A}(X - a)`, which vanishes on `A`.
pub fn finite_subring_witness(small: &Field, big: &Field, b: &FieldElem) -> Result<Poly, CoverError> {
    let pair = embedded_pair(small, big)?;
    if !big.owns(b) {
        return Err(CoverError::NotEmbedded(format!("{b:?}"), big.to_string()));
    }
    Ok(subring_witness(&pair, b))
}

fn subring_witness(pair: &ExtensionPair, b: &FieldElem) -> Poly {
    let l = pair.big();
    pair.small().elements().fold(Poly::constant(l.clone(), b.clone()), |acc, a| {
        acc.mul(&Poly::new(l.clone(), vec![l.neg(&pair.embed(&a)), l.one()]))
    })
}

/// Whether `f` maps the small ring into itself.
///
/// Over ℤ only finitely many arguments need checking. With `N` the lcm of the
/// coefficient denominators, `f(a + N) - f(a) ∈ ℤ`, so `0..N` covers every
/// residue; independently, a polynomial of degree `d` taking integer values at
/// `d + 1` consecutive integers is integer valued. The shorter range is used.
pub fn int_valued_membership(variant: &CoverVariant, f: &Poly) -> bool {
    match variant {
        CoverVariant::ResidueFinite { .. } => {
            if f.field() != &Field::rationals() {
                return false;
            }
            let lcm = f.coeffs().iter().fold(BigInt::one(), |acc, c| match c {
                FieldElem::Q(r) => acc.lcm(r.denom()),
                _ => acc,
            });
            let by_degree = BigInt::from(f.degree().unwrap_or(0) + 1);
            let end = lcm.min(by_degree);
            let mut a = BigInt::zero();
            while a < end {
                if !is_integral_value(f, &a) {
                    return false;
                }
                a += 1;
            }
            true
        }
        CoverVariant::FiniteSubring { pair, .. } => {
            f.field() == pair.big()
                && pair
                    .small()
                    .elements()
                    .all(|a| f.evaluate(&pair.embed(&a)).is_ok_and(|v| pair.contains(&v)))
        }
    }
}

/// The composite cover together with its certifying witness.
pub fn composite_cover(variant: &CoverVariant) -> Result<CoverInstance, CoverError> {
    let (witness, cover) = match variant {
        CoverVariant::ResidueFinite { modulus } => (residue_witness(modulus)?, CompositeRing::integers_in_rationals()),
        CoverVariant::FiniteSubring { pair, b } => (subring_witness(pair, b), CompositeRing::from_pair(pair.clone())),
    };
    if !int_valued_membership(variant, &witness) || !cover.contains(&witness) {
        return Err(CoverError::WitnessCheckFailed(witness.to_string()));
    }
    Ok(CoverInstance {
        variant: variant.clone(),
        witness,
        cover,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> FieldElem {
        FieldElem::Q(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn residue_witness_examples() {
        let f = residue_witness(&BigInt::from(2)).unwrap();
        assert_eq!(f.coeffs(), &[q(0, 1), q(-1, 2), q(1, 2)]);
        assert_eq!(f.evaluate(&q(5, 1)).unwrap(), q(10, 1));
        let g = residue_witness(&BigInt::from(3)).unwrap();
        assert_eq!(g.evaluate(&q(4, 1)).unwrap(), q(8, 1));
        assert_eq!(g.leading(), Some(&q(1, 3)));
        for r in [-1, 0, 1] {
            assert!(matches!(residue_witness(&BigInt::from(r)), Err(CoverError::UnitOrZeroModulus(_))));
        }
        // a negative modulus keeps the sign in the leading coefficient
        assert_eq!(residue_witness(&BigInt::from(-2)).unwrap().leading(), Some(&q(-1, 2)));
    }

    #[test]
    fn finite_subring_witness_examples() {
        let a = Field::prime(2).unwrap();
        let b = Field::finite(2, 2, None).unwrap();
        let w = b.generator().unwrap();
        let f = finite_subring_witness(&a, &b, &w).unwrap();
        assert_eq!(f, Poly::new(b.clone(), vec![b.zero(), w.clone(), w.clone()]));
        assert!(finite_subring_witness(&a, &b, &b.zero()).unwrap().is_zero());
        let three = Field::prime(3).unwrap();
        assert!(matches!(finite_subring_witness(&three, &b, &w), Err(CoverError::NotEmbedded(..))));
        assert!(matches!(
            finite_subring_witness(&Field::rationals(), &Field::rationals(), &q(1, 1)),
            Err(CoverError::InfiniteSubring(_))
        ));
    }

    #[test]
    fn membership_examples() {
        let z = CoverVariant::integers(2);
        let q_field = Field::rationals();
        assert!(int_valued_membership(&z, &Poly::new(q_field.clone(), vec![q(0, 1), q(-1, 2), q(1, 2)])));
        assert!(!int_valued_membership(&z, &Poly::new(q_field, vec![q(0, 1), q(1, 2)])));
        let b = Field::finite(2, 2, None).unwrap();
        let w = b.generator().unwrap();
        let v = CoverVariant::finite(Field::prime(2).unwrap(), b.clone(), w.clone()).unwrap();
        assert!(!int_valued_membership(&v, &Poly::monomial(b.clone(), w, 1)));
        assert!(int_valued_membership(&v, &Poly::x(b)));
    }

    #[test]
    fn covers() {
        let c = composite_cover(&CoverVariant::integers(2)).unwrap();
        assert_eq!(c.cover, CompositeRing::integers_in_rationals());
        let b = Field::finite(2, 2, None).unwrap();
        let v = CoverVariant::finite(Field::prime(2).unwrap(), b.clone(), b.generator().unwrap()).unwrap();
        let c = composite_cover(&v).unwrap();
        assert_eq!(c.cover, CompositeRing::fields(Field::prime(2).unwrap(), b.clone()).unwrap());
        let same = CoverVariant::finite(b.clone(), b.clone(), b.one()).unwrap();
        let c = composite_cover(&same).unwrap();
        assert!(c.cover.pair().unwrap().is_identity());
    }
}
