use num_bigint::BigInt;
use num_rational::BigRational;
use polycomp::covers::{composite_cover, int_valued_membership, CoverVariant};
use polycomp::fieldtower::{Field, FieldElem};
use polycomp::polyring::Poly;
use proptest::prelude::*;

/// Evaluates a rational polynomial by Horner's rule, independent of `Poly`.
fn horner(coeffs: &[BigRational], a: i64) -> BigRational {
    let a = BigRational::from_integer(BigInt::from(a));
    coeffs.iter().rev().fold(BigRational::from_integer(0.into()), |acc, c| acc * &a + c)
}

fn rationals(p: &Poly) -> Vec<BigRational> {
    p.coeffs()
        .iter()
        .map(|c| match c {
            FieldElem::Q(r) => r.clone(),
            _ => unreachable!(),
        })
        .collect()
}

#[test]
fn integer_witnesses_take_integer_values() {
    for r in [2i64, 3, 5, 7] {
        let inst = composite_cover(&CoverVariant::integers(r)).unwrap();
        let c = rationals(&inst.witness);
        let hits = (-10..=10).filter(|&a| horner(&c, a).is_integer()).count();
        assert_eq!(hits, 21, "r={r}");
        assert!(!c.last().unwrap().is_integer());
    }
}

#[test]
fn finite_witness_vanishes_on_the_subfield() {
    let small = Field::prime(2).unwrap();
    let big = Field::finite(2, 3, None).unwrap();
    let b = big.generator().unwrap();
    let inst = composite_cover(&CoverVariant::finite(small, big.clone(), b.clone()).unwrap()).unwrap();
    for a in [big.zero(), big.one()] {
        assert!(big.is_zero(&inst.witness.evaluate(&a).unwrap()));
    }
    assert_eq!(inst.witness.leading(), Some(&b));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn membership_matches_sampled_values(c in prop::collection::vec((-6i64..6, 1i64..4), 1..4)) {
        let coeffs: Vec<BigRational> = c.iter().map(|&(n, d)| BigRational::new(n.into(), d.into())).collect();
        let f = Poly::new(Field::rationals(), coeffs.iter().cloned().map(FieldElem::Q).collect());
        let sampled = (-30..=30).all(|a| horner(&coeffs, a).is_integer());
        prop_assert_eq!(int_valued_membership(&CoverVariant::integers(2), &f), sampled);
    }
}
