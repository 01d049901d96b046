use num_bigint::BigInt;
use num_rational::BigRational;
use polycomp::fieldtower::{Cardinal, ExtensionPair, Field, FieldElem, FieldError, Predicate, Tri};
use polycomp::polyring::Poly;
use proptest::prelude::*;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn gf(p: u64, n: u32) -> Field {
    Field::finite(p, n, None).unwrap()
}

fn cube_root_two() -> Field {
    Field::number_field(vec![q(-2), q(0), q(0), q(1)]).unwrap()
}

#[test]
fn degrees() {
    assert_eq!(ExtensionPair::new(Field::prime(2).unwrap(), gf(2, 2)).unwrap().degree(), Cardinal::Finite(2));
    let id = ExtensionPair::new(Field::prime(3).unwrap(), Field::prime(3).unwrap()).unwrap();
    assert!(id.is_identity());
    assert_eq!(id.degree(), Cardinal::Finite(1));
    assert_eq!(ExtensionPair::new(Field::rationals(), cube_root_two()).unwrap().degree(), Cardinal::Finite(3));
    assert_eq!(
        ExtensionPair::new(Field::perfect_power_subfield(3, 1).unwrap(), Field::function_field(3).unwrap())
            .unwrap()
            .degree(),
        Cardinal::Finite(3)
    );
    assert!(matches!(
        ExtensionPair::new(gf(2, 2), gf(2, 3)),
        Err(FieldError::IncompatibleFields(..))
    ));
    assert!(matches!(
        ExtensionPair::new(Field::prime(3).unwrap(), gf(2, 2)),
        Err(FieldError::IncompatibleFields(..))
    ));
}

#[test]
fn predicates_of_gf4_over_gf2() {
    let pair = ExtensionPair::new(Field::prime(2).unwrap(), gf(2, 2)).unwrap();
    let pr = pair.predicates();
    for p in [Predicate::Algebraic, Predicate::Separable, Predicate::Normal, Predicate::Galois] {
        assert_eq!(pr.get(p), Tri::True, "{p}");
    }
    assert_eq!(pr.purely_inseparable, Tri::False);
}

#[test]
fn cube_root_of_two_is_not_normal() {
    let pair = ExtensionPair::new(Field::rationals(), cube_root_two()).unwrap();
    let pr = pair.predicates();
    assert_eq!(pr.normal, Tri::False);
    assert_eq!(pr.separable, Tri::True);
    assert_eq!(pr.galois, Tri::False);
    // Q(i) is normal
    let gauss = Field::number_field(vec![q(1), q(0), q(1)]).unwrap();
    assert_eq!(ExtensionPair::new(Field::rationals(), gauss).unwrap().predicates().normal, Tri::True);
}

#[test]
fn purely_inseparable_function_field_pair() {
    let pair = ExtensionPair::new(Field::perfect_power_subfield(2, 1).unwrap(), Field::function_field(2).unwrap()).unwrap();
    let pr = pair.predicates();
    assert_eq!(pr.purely_inseparable, Tri::True);
    assert_eq!(pr.separable, Tri::False);
    assert_eq!(pr.galois, Tri::False);
    assert!(pair.decide(Predicate::PurelyInseparable).unwrap());
}

#[test]
fn transcendental_pair_is_undecided_where_it_must_be() {
    let pair = ExtensionPair::new(Field::prime(2).unwrap(), Field::function_field(2).unwrap()).unwrap();
    let pr = pair.predicates();
    assert_eq!(pr.algebraic, Tri::False);
    assert_eq!(pair.degree(), Cardinal::Infinite);
    assert!(pair.automorphism_group().is_err());
}

#[test]
fn automorphism_groups() {
    let pair = ExtensionPair::new(Field::prime(2).unwrap(), gf(2, 2)).unwrap();
    let g = pair.automorphism_group().unwrap();
    assert_eq!(g.len(), 2);
    assert!(g[0].is_identity());
    let l = pair.big();
    let w = l.generator().unwrap();
    assert_eq!(g[1].apply(l, &w), l.mul(&w, &w));
    assert!(pair.fixed_field_is_small(64).unwrap());

    let id = ExtensionPair::new(gf(2, 2), gf(2, 2)).unwrap();
    assert_eq!(id.automorphism_group().unwrap().len(), 1);

    let g9 = ExtensionPair::new(Field::prime(3).unwrap(), gf(3, 2)).unwrap();
    assert_eq!(g9.automorphism_group().unwrap().len(), 2);
    assert_eq!(g9.degree(), Cardinal::Finite(2));

    let g64 = ExtensionPair::new(gf(2, 2), gf(2, 6)).unwrap();
    assert_eq!(g64.automorphism_group().unwrap().len(), 3);
    assert!(g64.fixed_field_is_small(64).unwrap());
}

#[test]
fn coset_indices() {
    let pair = ExtensionPair::new(Field::prime(2).unwrap(), gf(2, 2)).unwrap();
    let c = pair.unit_coset_index();
    assert_eq!(c.index, Cardinal::Finite(3));
    let l = pair.big();
    let w = l.generator().unwrap();
    let mut reps = c.representatives.clone();
    reps.sort_by_key(|x| l.index_of(x));
    let mut expect = vec![l.one(), w.clone(), l.mul(&w, &w)];
    expect.sort_by_key(|x| l.index_of(x));
    assert_eq!(reps, expect);
    assert_eq!(ExtensionPair::new(gf(3, 2), gf(3, 2)).unwrap().unit_coset_index().index, Cardinal::Finite(1));
    assert_eq!(
        ExtensionPair::new(Field::prime(3).unwrap(), gf(3, 2)).unwrap().unit_coset_index().index,
        Cardinal::Finite(4)
    );
}

#[test]
fn minimal_polynomials() {
    let pair = ExtensionPair::new(Field::prime(2).unwrap(), gf(2, 2)).unwrap();
    let k = pair.small().clone();
    let w = pair.big().generator().unwrap();
    assert_eq!(
        pair.minimal_polynomial(&w).unwrap(),
        Poly::new(k.clone(), vec![k.one(), k.one(), k.one()])
    );
    assert_eq!(
        pair.minimal_polynomial(&pair.big().one()).unwrap(),
        Poly::new(k.clone(), vec![k.one(), k.one()])
    );

    let fpair = ExtensionPair::new(Field::perfect_power_subfield(2, 1).unwrap(), Field::function_field(2).unwrap()).unwrap();
    let u = fpair.small().generator().unwrap();
    let t = fpair.big().generator().unwrap();
    let ks = fpair.small().clone();
    assert_eq!(
        fpair.minimal_polynomial(&t).unwrap(),
        Poly::new(ks.clone(), vec![u, ks.zero(), ks.one()])
    );
}

#[test]
fn finite_pair_invariants() {
    for (m, n) in [(1u32, 2u32), (1, 3), (2, 4), (1, 4), (3, 6)] {
        let pair = ExtensionPair::new(gf(2, m), gf(2, n)).unwrap();
        let deg = (n / m) as usize;
        assert_eq!(pair.automorphism_group().unwrap().len(), deg);
        let idx = match pair.unit_coset_index().index {
            Cardinal::Finite(i) => i,
            Cardinal::Infinite => unreachable!(),
        };
        assert_eq!(idx * (2u64.pow(m) - 1), 2u64.pow(n) - 1);
        let l = pair.big();
        for x in l.elements().take(40) {
            let mp = pair.minimal_polynomial(&x).unwrap();
            let val = mp.evaluate_in(&pair, &x).unwrap();
            assert!(l.is_zero(&val));
            assert_eq!(deg % mp.degree().unwrap(), 0);
        }
        let pr = pair.predicates();
        assert!(pr.galois != Tri::True || (pr.separable == Tri::True && pr.normal == Tri::True));
    }
}

fn arbitrary_elem(field: Field) -> impl Strategy<Value = FieldElem> {
    let order = field.order();
    any::<u64>().prop_map(move |i| match order {
        Some(o) => field.element_at(i % o),
        None => field.from_int((i % 2001) as i64 - 1000),
    })
}

fn nf_elem() -> impl Strategy<Value = FieldElem> {
    prop::collection::vec(-20i64..20, 3).prop_map(|v| cube_root_two().from_nf_coeffs(v.into_iter().map(q).collect()))
}

fn ft_elem() -> impl Strategy<Value = FieldElem> {
    (prop::collection::vec(0u64..3, 1..4), prop::collection::vec(0u64..3, 1..3)).prop_map(|(n, mut d)| {
        d.push(1);
        Field::function_field(3).unwrap().from_ratfunc(n, d)
    })
}

macro_rules! ring_axioms {
    ($name:ident, $field:expr, $strat:expr) => {
        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]
            #[test]
            fn $name(a in $strat, b in $strat, c in $strat) {
                let f = $field;
                prop_assert_eq!(f.mul(&a, &f.mul(&b, &c)), f.mul(&f.mul(&a, &b), &c));
                prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
                prop_assert_eq!(f.add(&a, &f.neg(&a)), f.zero());
                if !f.is_zero(&a) {
                    prop_assert!(f.is_one(&f.mul(&a, &f.inv(&a))));
                }
            }
        }
    };
}

ring_axioms!(axioms_gf9, gf(3, 2), arbitrary_elem(gf(3, 2)));
ring_axioms!(axioms_gf64, gf(2, 6), arbitrary_elem(gf(2, 6)));
ring_axioms!(axioms_number_field, cube_root_two(), nf_elem());
ring_axioms!(axioms_function_field, Field::function_field(3).unwrap(), ft_elem());
