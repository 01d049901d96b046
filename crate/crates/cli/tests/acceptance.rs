//! Acceptance criteria. Each criterion prints one line with its verdict and
//! runtime; the expected values come from independent computations below.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use polycomp::claims::{run_suite, SuiteConfig};
use polycomp::composite::CompositeRing;
use polycomp::covers::{composite_cover, finite_subring_witness, residue_witness, CoverVariant};
use polycomp::exec::ExecMode;
use polycomp::fieldtower::{Cardinal, ExtensionPair, Field, FieldElem, Tri};
use polycomp::ideals::{FractionalIdeal, Invertibility, PirVerdict};
use polycomp::polyring::Poly;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn ok(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn gf2() -> Field {
    Field::prime(2).unwrap()
}

fn gf4() -> Field {
    Field::finite(2, 2, None).unwrap()
}

fn proper() -> CompositeRing {
    CompositeRing::fields(gf2(), gf4()).unwrap()
}

/// Every element of GF(2) + X·GF(4)[X] of degree at most `d`, zero included.
fn members(ring: &CompositeRing, d: usize) -> Vec<Poly> {
    let l = ring.big().clone();
    let pair = ring.pair().unwrap().clone();
    let mut out: Vec<Vec<FieldElem>> = pair.small().elements().map(|c| vec![pair.embed(&c)]).collect();
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|v| l.elements().map(move |c| [v.clone(), vec![c]].concat()))
            .collect();
    }
    out.into_iter().map(|c| Poly::new(l.clone(), c)).collect()
}

/// Divisor search: `e` is reducible iff it is a product of two nonconstant
/// members (the nonzero constants of the ring are its units).
fn factor_pairs(ring: &CompositeRing, d: usize) -> HashMap<Poly, Vec<(Poly, Poly)>> {
    let nonconst: Vec<Poly> = members(ring, d).into_iter().filter(|p| p.degree().unwrap_or(0) >= 1).collect();
    let mut table: HashMap<Poly, Vec<(Poly, Poly)>> = HashMap::new();
    for a in &nonconst {
        for b in &nonconst {
            if a.degree().unwrap() + b.degree().unwrap() <= d {
                table.entry(a.mul(b)).or_default().push((a.clone(), b.clone()));
            }
        }
    }
    table
}

fn criterion_1() -> Outcome {
    let ring = proper();
    let pairs = factor_pairs(&ring, 3);
    let elems: Vec<Poly> = members(&ring, 3).into_iter().filter(|p| p.degree().unwrap_or(0) >= 1).collect();
    let mut agree = 0;
    for e in &elems {
        let oracle = !pairs.contains_key(e);
        if ring.is_irreducible(e).ok() == Some(oracle) {
            agree += 1;
        }
    }
    ok(agree == elems.len(), format!("{agree}/{} nonunits agree", elems.len()))
}

fn lengths(e: &Poly, pairs: &HashMap<Poly, Vec<(Poly, Poly)>>, memo: &mut HashMap<Poly, BTreeSet<usize>>) -> BTreeSet<usize> {
    if let Some(s) = memo.get(e) {
        return s.clone();
    }
    let mut out = BTreeSet::new();
    match pairs.get(e) {
        None => {
            out.insert(1);
        }
        Some(ps) => {
            for (a, b) in ps.clone() {
                for la in lengths(&a, pairs, memo) {
                    for lb in lengths(&b, pairs, memo) {
                        out.insert(la + lb);
                    }
                }
            }
        }
    }
    memo.insert(e.clone(), out.clone());
    out
}

fn criterion_2() -> Outcome {
    let ring = proper();
    let pairs = factor_pairs(&ring, 4);
    let mut memo = HashMap::new();
    let elems: Vec<Poly> = members(&ring, 4).into_iter().filter(|p| p.degree().unwrap_or(0) >= 1).collect();
    let mut exceptions = Vec::new();
    for e in &elems {
        let oracle = lengths(e, &pairs, &mut memo);
        let lib = ring.length_set(e, 4).unwrap_or_default();
        let atoms = ring.factor_atoms(e).map(|f| f.len()).unwrap_or(0);
        if oracle.len() != 1 || lib != oracle || !oracle.contains(&atoms) {
            exceptions.push(e.to_string());
        }
    }
    ok(
        exceptions.is_empty(),
        format!("{} elements, {} exceptions", elems.len(), exceptions.len()),
    )
}

fn criterion_3() -> Outcome {
    let ring = CompositeRing::integers_in_rationals();
    let q = Field::rationals();
    let chain = ring.accp_failure_chain(&Poly::x(q.clone()), &BigInt::from(2), 20).unwrap();
    // g_k = X/2^k; g_k = 2·g_(k+1) and 1/2 ∉ ℤ, so each step is strict
    let expected = (0..=20u32).all(|k| {
        let c = BigRational::new(BigInt::from(1), BigInt::from(2).pow(k));
        chain.generators[k as usize] == Poly::monomial(q.clone(), FieldElem::Q(c), 1)
    });
    ok(
        chain.generators.len() == 21 && chain.strict.len() == 20 && chain.all_strict() && expected,
        format!("{} ideals, {} strict steps", chain.generators.len(), chain.strict.iter().filter(|&&s| s).count()),
    )
}

fn criterion_4() -> Outcome {
    let x2 = |r: &CompositeRing| Poly::monomial(r.big().clone(), r.big().one(), 2);
    let ring = proper();
    let divs = ring.irreducible_divisors(&x2(&ring)).unwrap();
    let index = ExtensionPair::new(gf2(), gf4()).unwrap().unit_coset_index().index;
    // |GF(4)*| / |GF(2)*|
    let by_hand = (4 - 1) / (2 - 1);
    let same = CompositeRing::fields(gf2(), gf2()).unwrap();
    let divs_same = same.irreducible_divisors(&x2(&same)).unwrap();
    ok(
        divs.len() == by_hand && index == Cardinal::Finite(by_hand as u64) && divs_same.len() == 1,
        format!("proper pair {} divisors, index {index}; K = L {} divisor", divs.len(), divs_same.len()),
    )
}

fn criterion_5() -> Outcome {
    let ring = CompositeRing::fields(Field::perfect_power_subfield(2, 1).unwrap(), Field::function_field(2).unwrap()).unwrap();
    let l = ring.big().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(polycomp::DEFAULT_SEED);
    let poly = |rng: &mut ChaCha8Rng| loop {
        let d = rng.gen_range(0..=3);
        let p = Poly::new(l.clone(), (0..=d).map(|_| l.random(rng)).collect());
        if !p.is_zero() {
            return p;
        }
    };
    let mut passed = 0;
    for _ in 0..50 {
        let (f, g) = (poly(&mut rng), poly(&mut rng));
        let Ok(w) = ring.almost_bezout_witness(&f, &g) else { continue };
        // squares of f, g as computed here, lifted to L[X]
        let lift = |p: &Poly| Poly::new(l.clone(), p.coeffs().iter().map(|c| ring.pair().unwrap().embed(c)).collect());
        let powers_match = match w.n {
            0 => lift(&w.f_power) == f && lift(&w.g_power) == g,
            1 => lift(&w.f_power) == f.mul(&f) && lift(&w.g_power) == g.mul(&g),
            _ => false,
        };
        let bezout = w.s.mul(&w.f_power).add(&w.t.mul(&w.g_power)) == w.h;
        let two_sided = w.h.divides(&w.f_power) && w.h.divides(&w.g_power);
        if w.n <= 1 && powers_match && bezout && two_sided {
            passed += 1;
        }
    }
    ok(passed == 50, format!("{passed}/50 pairs"))
}

fn horner(c: &[BigRational], a: i64) -> BigRational {
    let a = BigRational::from_integer(a.into());
    c.iter().rev().fold(BigRational::from_integer(0.into()), |acc, x| acc * &a + x)
}

fn criterion_6() -> Outcome {
    let w = residue_witness(&BigInt::from(2)).unwrap();
    let coeffs: Vec<BigRational> = w
        .coeffs()
        .iter()
        .map(|c| match c {
            FieldElem::Q(r) => r.clone(),
            _ => unreachable!(),
        })
        .collect();
    let half = BigRational::new(1.into(), 2.into());
    let shape = coeffs == vec![BigRational::from_integer(0.into()), -half.clone(), half];
    let hits = (-10..=10).filter(|&a| horner(&coeffs, a).is_integer()).count();
    let l = gf4();
    let f = finite_subring_witness(&gf2(), &l, &l.generator().unwrap()).unwrap();
    let vanish = [l.zero(), l.one()].iter().filter(|a| l.is_zero(&f.evaluate(a).unwrap())).count();
    let cover = composite_cover(&CoverVariant::integers(2)).is_ok_and(|c| c.cover == CompositeRing::integers_in_rationals());
    ok(
        shape && hits == 21 && vanish == 2 && cover,
        format!("integer values {hits}/21, vanishing {vanish}/2"),
    )
}

fn criterion_7() -> Outcome {
    let same = CompositeRing::fields(gf2(), gf2()).unwrap();
    let k = same.big().clone();
    let x = Poly::x(k.clone());
    let inv = FractionalIdeal::principal(&same, x.clone()).unwrap().is_invertible().unwrap().is_invertible();
    let x1 = Poly::new(k.clone(), vec![k.one(), k.one()]);
    let target = FractionalIdeal::principal(&same, x.mul(&x1)).unwrap();
    let fac = target.factor().unwrap();
    let expected: BTreeSet<String> = ["(X)^1", "(X + 1)^1"].into_iter().map(String::from).collect();
    let got: BTreeSet<String> = fac.iter().map(|(p, e)| format!("{p}^{e}")).collect();
    let unit = FractionalIdeal::unit(&same).unwrap();
    let round_trip = fac.iter().fold(unit, |acc, (p, e)| acc.product(&p.pow(*e).unwrap()).unwrap()) == target;

    let ring = proper();
    let mut m = FractionalIdeal::maximal_x(&ring).unwrap();
    m.set_window(8);
    let colon = m.colon().unwrap() == FractionalIdeal::big_polynomials(&ring).unwrap();
    let not_inv = matches!(m.is_invertible().unwrap(), Invertibility::NotInvertible { ref product } if *product == m);
    ok(
        inv && got == expected && round_trip && colon && not_inv,
        format!("K = L: (X) invertible, (X^2+X) = {got:?}; proper pair: (T:M) = L[X], M(T:M) = M"),
    )
}

fn run_binary(ring: &str) -> Option<i32> {
    Command::new(env!("CARGO_BIN_EXE_polycomp"))
        .args([format!("ring={ring}"), "verify".into()])
        .output()
        .ok()?
        .status
        .code()
}

/// The criterion expects contradictions exactly on the Dedekind family and the
/// P13 integrality witness. `T/(X²T)` over GF(2) ⊂ GF(4) has 16 elements and
/// its ideal `(X, wX)` needs two generators, so P14d is contradicted too.
const EXPECTED_8: [&str; 4] = ["T_DEDEKIND", "P14a", "P14c", "P13-vs-T_DEDEKIND"];
const KNOWN_EXTRA_8: &str = "P14d";

fn criterion_8() -> Outcome {
    let cfg = SuiteConfig::default();
    let same = run_suite(&CompositeRing::fields(gf2(), gf2()).unwrap(), &cfg);
    let rep = run_suite(&proper(), &cfg);
    let got: BTreeSet<String> = rep.contradictions().into_iter().collect();
    let want: BTreeSet<String> = EXPECTED_8.iter().map(|s| s.to_string()).collect();
    let witness = rep.cross.iter().any(|c| {
        let w = c.witness.to_string();
        w.contains("integral=w") && w.contains("minpoly=X^2 + X + 1")
    });
    let codes = (run_binary("composite(gf(2),gf(2))"), run_binary("composite(gf(2),gf(4,2))"));
    let extra: Vec<&String> = got.difference(&want).collect();
    let missing: Vec<&String> = want.difference(&got).collect();
    ok(
        same.contradictions().is_empty() && extra.is_empty() && missing.is_empty() && witness && codes == (Some(0), Some(1)),
        format!(
            "K = L {} contradictions; proper pair {:?}; extra {extra:?}; missing {missing:?}; exit codes {codes:?}",
            same.contradictions().len(),
            got
        ),
    )
}

/// `T/(X)T` modelled directly: pairs `(c0, c1 mod GF(2))` with
/// `(a0, a1)(b0, b1) = (a0·b0, a0·b1 + b0·a1)`.
fn criterion_9() -> Outcome {
    let ring = proper();
    let xt = FractionalIdeal::principal(&ring, Poly::x(ring.big().clone())).unwrap();
    let verdict = xt.quotient_pir_check(ExecMode::default()).unwrap();

    let l = gf4();
    let class = |c: &FieldElem| l.index_of(c).min(l.index_of(&l.add(c, &l.one())));
    let mut elems: BTreeMap<(u64, u64), (u64, FieldElem)> = BTreeMap::new();
    for c0 in 0..2u64 {
        for c1 in l.elements() {
            elems.entry((c0, class(&c1))).or_insert((c0, c1));
        }
    }
    let keys: Vec<(u64, u64)> = elems.keys().copied().collect();
    let mul = |a: (u64, u64), b: (u64, u64)| {
        let (a0, a1) = &elems[&a];
        let (b0, b1) = &elems[&b];
        let s = |k: u64, e: &FieldElem| if k == 1 { e.clone() } else { l.zero() };
        (a0 * b0, class(&l.add(&s(*a0, b1), &s(*b0, a1))))
    };
    let add = |a: (u64, u64), b: (u64, u64)| {
        let (a0, a1) = &elems[&a];
        let (b0, b1) = &elems[&b];
        ((a0 + b0) % 2, class(&l.add(a1, b1)))
    };
    let mut ideals = BTreeSet::new();
    for mask in 1u32..(1 << keys.len()) {
        let set: BTreeSet<(u64, u64)> = (0..keys.len()).filter(|i| mask >> i & 1 == 1).map(|i| keys[i]).collect();
        let closed = set.contains(&(0, 0))
            && set.iter().all(|&a| set.iter().all(|&b| set.contains(&add(a, b))))
            && set.iter().all(|&a| keys.iter().all(|&r| set.contains(&mul(r, a))));
        if closed {
            ideals.insert(set);
        }
    }
    let principal = ideals.iter().all(|i| {
        i.iter()
            .any(|&g| keys.iter().map(|&r| mul(r, g)).collect::<BTreeSet<_>>() == *i)
    });
    let lib = match verdict {
        PirVerdict::PrincipalIdealRing { quotient_size, ideal_count, .. } => Some((quotient_size, ideal_count)),
        PirVerdict::Counterexample { .. } => None,
    };
    ok(
        lib == Some((keys.len() as u64, ideals.len())) && keys.len() == 4 && principal,
        format!("|T/XT| = {}, {} ideals, all principal: {principal}", keys.len(), ideals.len()),
    )
}

fn criterion_10() -> Outcome {
    let p = ExtensionPair::new(gf2(), gf4()).unwrap();
    let pr = p.predicates();
    let all = [pr.algebraic, pr.separable, pr.normal, pr.galois].iter().all(|&t| t == Tri::True);
    let group = p.automorphism_group().map(|g| g.len()).ok() == Some(2) && p.degree() == Cardinal::Finite(2);
    let f = ExtensionPair::new(Field::perfect_power_subfield(2, 1).unwrap(), Field::function_field(2).unwrap()).unwrap();
    let fp = f.predicates();
    let insep = fp.purely_inseparable == Tri::True && fp.separable == Tri::False;
    let q = |n: i64| BigRational::from_integer(n.into());
    let cube = Field::number_field(vec![q(-2), q(0), q(0), q(1)]).unwrap();
    let normal = ExtensionPair::new(Field::rationals(), cube).unwrap().predicates().normal == Tri::False;
    ok(
        all && group && insep && normal,
        format!("GF(4)/GF(2) Galois {all} |G|=[L:K]=2 {group}; F_2(t)/F_2(t^2) inseparable {insep}; Q(2^(1/3)) not normal {normal}"),
    )
}

fn main() {
    type Check = (u32, Duration, fn() -> Outcome);
    let criteria: [Check; 10] = [
        (1, Duration::from_secs(10), criterion_1),
        (2, Duration::from_secs(60), criterion_2),
        (3, Duration::from_secs(1), criterion_3),
        (4, Duration::MAX, criterion_4),
        (5, Duration::from_secs(30), criterion_5),
        (6, Duration::MAX, criterion_6),
        (7, Duration::from_secs(5), criterion_7),
        (8, Duration::MAX, criterion_8),
        (9, Duration::MAX, criterion_9),
        (10, Duration::from_secs(10), criterion_10),
    ];
    let start = Instant::now();
    let mut failed = Vec::new();
    for (n, limit, check) in criteria {
        let t = Instant::now();
        let out = check();
        let dt = t.elapsed();
        let pass = out.pass && dt <= limit;
        println!(
            "criterion {n:>2}: {} ({:.2}s) {}",
            if pass { "PASS" } else { "FAIL" },
            dt.as_secs_f64(),
            out.detail
        );
        if !pass {
            failed.push(n);
        }
    }
    let total = start.elapsed();
    println!("total {:.1}s", total.as_secs_f64());

    // criterion 8 stays red for the reason documented at EXPECTED_8; any other
    // failure, or a change in how 8 fails, is a regression
    let rep = run_suite(&proper(), &SuiteConfig::default());
    let extra: Vec<String> = rep
        .contradictions()
        .into_iter()
        .filter(|c| !EXPECTED_8.contains(&c.as_str()))
        .collect();
    assert_eq!(extra, vec![KNOWN_EXTRA_8.to_string()]);
    assert_eq!(failed, vec![8], "unexpected acceptance failures");
    assert!(total < Duration::from_secs(120));
}
