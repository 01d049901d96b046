//! Classifier, atomic factorization and length sets checked against a naive
//! divisor search written independently of the library's own oracle.

use std::collections::BTreeSet;

use polycomp::composite::{BruteForce, CompositeRing, OracleLimits};
use polycomp::exec::ExecMode;
use polycomp::fieldtower::{Field, FieldElem};
use polycomp::polyring::Poly;
use proptest::prelude::*;

fn ring(small: Field, big: Field) -> CompositeRing {
    CompositeRing::fields(small, big).unwrap()
}

/// Every element of `K + X·L[X]` of degree at most `d`, with `K` given as the
/// list of its images in `L`.
fn elements(l: &Field, k: &[FieldElem], d: usize) -> Vec<Poly> {
    let lv: Vec<FieldElem> = l.elements().collect();
    let mut out = Vec::new();
    let mut digits = vec![0usize; d + 1];
    loop {
        let mut coeffs = vec![k[digits[0]].clone()];
        coeffs.extend(digits[1..].iter().map(|&i| lv[i].clone()));
        out.push(Poly::new(l.clone(), coeffs));
        let mut i = 0;
        loop {
            if i > d {
                return out;
            }
            digits[i] += 1;
            let radix = if i == 0 { k.len() } else { lv.len() };
            if digits[i] < radix {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

fn small_images(r: &CompositeRing) -> Vec<FieldElem> {
    let pair = r.pair().unwrap();
    pair.small().elements().map(|a| pair.embed(&a)).collect()
}

/// `e` factors as a product of two nonconstant members.
fn naive_reducible(r: &CompositeRing, e: &Poly, pool: &[Poly]) -> bool {
    let n = e.degree().unwrap();
    pool.iter()
        .filter(|g| matches!(g.degree(), Some(d) if d >= 1 && d < n))
        .any(|g| {
            let (q, rem) = e.divrem(g).unwrap();
            rem.is_zero() && r.contains(&q)
        })
}

fn check_classifier(r: &CompositeRing, max_deg: usize) {
    let pool = elements(r.big(), &small_images(r), max_deg);
    let mut checked = 0;
    for e in &pool {
        if e.is_zero() || r.is_unit(e) {
            continue;
        }
        let got = r.is_irreducible(e).unwrap();
        assert_eq!(got, !naive_reducible(r, e, &pool), "{e}");
        checked += 1;
    }
    assert!(checked > 0);
}

#[test]
fn classifier_matches_naive_search_gf2_gf4() {
    check_classifier(&ring(Field::prime(2).unwrap(), Field::finite(2, 2, None).unwrap()), 3);
}

#[test]
fn classifier_matches_naive_search_gf2_gf2() {
    let k = Field::prime(2).unwrap();
    check_classifier(&ring(k.clone(), k), 3);
}

#[test]
fn classifier_matches_naive_search_gf3_gf9() {
    check_classifier(&ring(Field::prime(3).unwrap(), Field::finite(3, 2, None).unwrap()), 2);
}

#[test]
fn half_factorial_to_degree_four() {
    let r = ring(Field::prime(2).unwrap(), Field::finite(2, 2, None).unwrap());
    let bf = BruteForce::new(&r, 4, OracleLimits::default(), ExecMode::default()).unwrap();
    for e in bf.candidates() {
        let len = r.factor_atoms(e).unwrap().len();
        assert_eq!(bf.length_set(e).unwrap(), BTreeSet::from([len]), "{e}");
    }
}

#[test]
fn divisor_count_of_x_powers_is_coset_index() {
    for (small, big) in [
        (Field::prime(2).unwrap(), Field::finite(2, 2, None).unwrap()),
        (Field::prime(2).unwrap(), Field::finite(2, 3, None).unwrap()),
        (Field::prime(3).unwrap(), Field::finite(3, 2, None).unwrap()),
    ] {
        let r = ring(small, big.clone());
        let idx = match r.pair().unwrap().unit_coset_index().index {
            polycomp::fieldtower::Cardinal::Finite(n) => n as usize,
            _ => unreachable!(),
        };
        // X itself only has the divisor X; from X^2 on every coset appears
        for k in 2..=3 {
            let xk = Poly::monomial(big.clone(), big.one(), k);
            let divs = r.irreducible_divisors(&xk).unwrap();
            assert_eq!(divs.len(), idx);
            for (i, a) in divs.iter().enumerate() {
                assert!(r.divide(&xk, a).is_some());
                for b in &divs[i + 1..] {
                    assert!(r.divide(a, b).is_none(), "{a} and {b} are associates");
                }
            }
        }
    }
}

#[test]
fn chain_of_twenty_steps() {
    let z = CompositeRing::integers_in_rationals();
    let q = Field::rationals();
    let chain = z
        .accp_failure_chain(&Poly::x(q), &num_bigint::BigInt::from(2), 20)
        .unwrap();
    assert_eq!(chain.generators.len(), 21);
    assert!(chain.all_strict());
}

fn gf9_ring() -> CompositeRing {
    ring(Field::prime(3).unwrap(), Field::finite(3, 2, None).unwrap())
}

fn member_strategy() -> impl Strategy<Value = Poly> {
    (0u64..3, prop::collection::vec(0u64..9, 1..5)).prop_map(|(c0, rest)| {
        let r = gf9_ring();
        let l = r.big().clone();
        let k = r.pair().unwrap().small().clone();
        let mut coeffs = vec![r.pair().unwrap().embed(&k.element_at(c0))];
        coeffs.extend(rest.into_iter().map(|i| l.element_at(i)));
        Poly::new(l, coeffs)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn factor_atoms_round_trip(e in member_strategy()) {
        let r = gf9_ring();
        prop_assume!(!e.is_zero() && !r.is_unit(&e));
        let f = r.factor_atoms(&e).unwrap();
        prop_assert_eq!(f.expand(&r), e);
        for a in &f.atoms {
            prop_assert!(r.is_irreducible(a).unwrap());
        }
    }

    #[test]
    fn quotient_class_is_exact(e in member_strategy(), c in 0u64..9) {
        let r = gf9_ring();
        let l = r.big().clone();
        let shifted = e.add(&Poly::constant(l.clone(), l.element_at(c)));
        prop_assert_eq!(r.quotient_class(&shifted).unwrap().is_zero(), r.contains(&shifted));
    }
}
