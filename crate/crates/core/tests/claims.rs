use num_bigint::BigInt;
use num_rational::BigRational;
use polycomp::claims::{run_claim, run_suite, Asserted, ClaimId, SuiteConfig, Tested};
use polycomp::composite::CompositeRing;
use polycomp::exec::ExecMode;
use polycomp::fieldtower::Field;

fn gf(p: u64, n: u32) -> Field {
    Field::finite(p, n, None).unwrap()
}

fn fields(k: Field, l: Field) -> CompositeRing {
    CompositeRing::fields(k, l).unwrap()
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[test]
fn equal_fields_have_no_contradictions() {
    let small = SuiteConfig { degree_bound: 3, ..SuiteConfig::default() };
    for r in [fields(Field::prime(2).unwrap(), Field::prime(2).unwrap()), fields(gf(3, 2), gf(3, 2))] {
        let rep = run_suite(&r, &small);
        assert!(rep.contradictions().is_empty(), "{}", rep.render_records());
        assert_eq!(rep.get(ClaimId::P14b).unwrap().tested, Tested::Pass);
        assert_eq!(rep.get(ClaimId::TDedekind).unwrap().tested, Tested::Pass);
    }
}

#[test]
fn gf4_over_gf2_contradicts_the_dedekind_statements() {
    let rep = run_suite(&fields(Field::prime(2).unwrap(), gf(2, 2)), &SuiteConfig::default());
    assert_eq!(
        rep.contradictions(),
        vec!["T_DEDEKIND", "P14a", "P14c", "P14d", "P13-vs-T_DEDEKIND"]
    );
    let p13 = rep.get(ClaimId::P13).unwrap();
    assert_eq!(p13.asserted, Asserted::False);
    assert_eq!(p13.tested, Tested::Pass);
    assert!(p13.witness.to_string().contains("minpoly=X^2 + X + 1"));
    // factorization claims agree with the enumeration
    for id in [ClaimId::P1a, ClaimId::P1b, ClaimId::P2, ClaimId::P3, ClaimId::P4, ClaimId::P5, ClaimId::P7] {
        assert_eq!(rep.get(id).unwrap().tested, Tested::Pass, "{id}");
    }
    let text = rep.render_records();
    assert!(text.contains("CROSS P13-vs-T_DEDEKIND consistent=false"));
    assert!(text.lines().last().unwrap().starts_with("SUMMARY agree=17 contradict=5 untested=3"));
}

#[test]
fn integers_in_rationals_fail_the_chain_conditions() {
    let rep = run_suite(&CompositeRing::integers_in_rationals(), &SuiteConfig::default());
    assert!(rep.contradictions().is_empty());
    for id in [ClaimId::P1a, ClaimId::P1b, ClaimId::P3, ClaimId::P7] {
        let v = rep.get(id).unwrap();
        assert_eq!((v.asserted.clone(), v.observed), (Asserted::False, Some(false)), "{id}");
    }
    assert_eq!(rep.get(ClaimId::P12a).unwrap().tested, Tested::Pass);
    assert_eq!(rep.get(ClaimId::P6).unwrap().tested, Tested::Untested);
}

#[test]
fn purely_inseparable_pair_is_almost_bezout() {
    let r = fields(Field::perfect_power_subfield(2, 1).unwrap(), Field::function_field(2).unwrap());
    let v = run_claim(&r, ClaimId::P11, &SuiteConfig::default()).unwrap();
    assert_eq!(v.tested, Tested::Pass);
    assert!(v.witness.to_string().contains("verified_pairs=50/50"));
    // t is integral over F_2(t^2) but not in the ring
    let ded = run_claim(&r, ClaimId::TDedekind, &SuiteConfig::default()).unwrap();
    assert_eq!(ded.tested, Tested::Fail);
}

#[test]
fn hypotheses_are_checked() {
    let z = CompositeRing::integers_in_rationals();
    assert!(run_claim(&z, ClaimId::P11, &SuiteConfig::default()).is_err());
    assert!(run_claim(&z, ClaimId::TDedekind, &SuiteConfig::default()).is_err());
    let cube = Field::number_field(vec![q(-2), q(0), q(0), q(1)]).unwrap();
    let r = fields(Field::rationals(), cube);
    // Q(2^(1/3)) is not normal over Q
    assert!(run_claim(&r, ClaimId::P06, &SuiteConfig::default()).is_err());
    let ded = run_claim(&r, ClaimId::TDedekind, &SuiteConfig::default()).unwrap();
    assert_eq!(ded.tested, Tested::Fail);
}

#[test]
fn overfield_flag_enables_separability_claims() {
    let r = fields(Field::prime(2).unwrap(), gf(2, 2));
    let off = run_claim(&r, ClaimId::P04, &SuiteConfig::default()).unwrap();
    assert_eq!(off.tested, Tested::Untested);
    let cfg = SuiteConfig { overfield_automorphisms: true, ..SuiteConfig::default() };
    assert_eq!(run_claim(&r, ClaimId::P04, &cfg).unwrap().tested, Tested::Pass);
    assert_eq!(run_claim(&r, ClaimId::P09, &cfg).unwrap().tested, Tested::Pass);
}

#[test]
fn reruns_and_modes_agree() {
    let r = fields(Field::prime(3).unwrap(), gf(3, 2));
    let par = SuiteConfig { degree_bound: 3, ..SuiteConfig::default() };
    let seq = SuiteConfig { mode: ExecMode::Sequential, ..par.clone() };
    let a = run_suite(&r, &seq).render_records();
    assert_eq!(a, run_suite(&r, &seq).render_records());
    assert_eq!(a, run_suite(&r, &par).render_records());
}

#[test]
fn claim_ids_round_trip() {
    for id in ClaimId::ALL {
        assert_eq!(id.as_str().parse::<ClaimId>().unwrap(), id);
    }
    assert!("P99".parse::<ClaimId>().is_err());
}
