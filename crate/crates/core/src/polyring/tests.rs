use num_rational::BigRational;
use proptest::prelude::*;

use super::*;

fn gf(p: u64, n: u32) -> Field {
    Field::finite(p, n, None).unwrap()
}

fn ff(field: &Field, idx: &[u64]) -> Poly {
    Poly::new(field.clone(), idx.iter().map(|&i| field.element_at(i)).collect())
}

fn qp(v: &[i64]) -> Poly {
    let q = Field::rationals();
    Poly::new(q, v.iter().map(|&c| FieldElem::Q(BigRational::from_integer(c.into()))).collect())
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
fn brute_irreducible(f: &Poly) -> bool {
    let field = f.field().clone();
    let n = f.degree().unwrap();
    if n == 0 {
        return false;
    }
    let q = field.order().unwrap();
    for d in 1..=n / 2 {
        for code in 0..q.pow(d as u32) {
            let mut c = code;
            let mut coeffs = Vec::new();
            for _ in 0..d {
                coeffs.push(field.element_at(c % q));
                c /= q;
            }
            coeffs.push(field.one());
            if Poly::new(field.clone(), coeffs).divides(f) {
                return false;
            }
        }
    }
    true
}

#[test]
fn divmod_examples() {
    let f2 = gf(2, 1);
    let (q, r) = ff(&f2, &[1, 0, 1]).divrem(&ff(&f2, &[1, 1])).unwrap();
    assert_eq!(q, ff(&f2, &[1, 1]));
    assert!(r.is_zero());
    let k = Field::perfect_power_subfield(2, 1).unwrap();
    let u = k.generator().unwrap();
    let a = Poly::new(k.clone(), vec![u.clone(), k.zero(), k.one()]);
    let (q, r) = a.divrem(&Poly::x(k.clone())).unwrap();
    assert_eq!(q, Poly::x(k.clone()));
    assert_eq!(r, Poly::constant(k.clone(), u));
    assert_eq!(a.divrem(&Poly::zero(k)), Err(PolyError::DivisionByZeroPoly));
}

#[test]
fn gcd_examples() {
    let f2 = gf(2, 1);
    let (g, s, t) = ff(&f2, &[1, 0, 1]).gcd_extended(&ff(&f2, &[1, 1]));
    assert_eq!(g, ff(&f2, &[1, 1]));
    assert_eq!(s.mul(&ff(&f2, &[1, 0, 1])).add(&t.mul(&ff(&f2, &[1, 1]))), g);
    let k = Field::perfect_power_subfield(2, 1).unwrap();
    let u = k.generator().unwrap();
    let a = Poly::new(k.clone(), vec![k.one(), k.zero(), u.clone()]);
    let b = Poly::new(k.clone(), vec![u, k.zero(), k.one()]);
    let (g, s, t) = a.gcd_extended(&b);
    assert!(g.is_one());
    assert!(s.mul(&a).add(&t.mul(&b)).is_one());
}

#[test]
fn factor_examples() {
    let f2 = gf(2, 1);
    let f = factor(&ff(&f2, &[0, 1, 0, 0, 1])).unwrap();
    let got: Vec<Poly> = f.factors.iter().map(|(g, _)| g.clone()).collect();
    assert_eq!(got, vec![ff(&f2, &[0, 1]), ff(&f2, &[1, 1]), ff(&f2, &[1, 1, 1])]);
    let sq = factor(&ff(&f2, &[0, 0, 1])).unwrap();
    assert_eq!(sq.factors, vec![(ff(&f2, &[0, 1]), 2)]);
    let f4 = gf(2, 2);
    // 1 + X + wX^2
    assert!(is_irreducible(&ff(&f4, &[1, 1, 2])).unwrap());
    assert!(is_irreducible(&ff(&f2, &[1, 1, 1])).unwrap());
    assert!(!is_irreducible(&ff(&f2, &[0, 0, 1])).unwrap());
}

#[test]
fn evaluate_examples() {
    let f4 = gf(2, 2);
    let w = f4.generator().unwrap();
    let p = Poly::new(f4.clone(), vec![f4.zero(), w.clone(), w]);
    assert!(f4.is_zero(&p.evaluate(&f4.one()).unwrap()));
    let q = Field::rationals();
    let half = FieldElem::Q(BigRational::new(1.into(), 2.into()));
    let f = qp(&[0, -1, 1]).scale(&half);
    assert_eq!(f.evaluate(&q.from_int(5)).unwrap(), q.from_int(10));
    assert!(matches!(f.evaluate(&f4.one()), Err(PolyError::FieldMismatch(_))));
}

#[test]
fn factor_agrees_with_trial_division_small_fields() {
    for (p, n) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
        let field = gf(p, n);
        let q = field.order().unwrap();
        for deg in 1..=4u32 {
            // all monic polynomials of this degree
            for code in 0..q.pow(deg) {
                let mut c = code;
                let mut idx = Vec::new();
                for _ in 0..deg {
                    idx.push(c % q);
                    c /= q;
                }
                idx.push(1);
                let f = ff(&field, &idx);
                let fac = factor(&f).unwrap();
                assert_eq!(fac.expand(&field), f);
                let irr = fac.factors.len() == 1 && fac.factors[0].1 == 1;
                assert_eq!(irr, brute_irreducible(&f), "{f} over {field}");
                for (g, _) in &fac.factors {
                    assert!(brute_irreducible(g), "{g} reported irreducible");
                }
            }
        }
    }
}

#[test]
fn rational_factorization() {
    let f = qp(&[-2, 0, 0, 1]);
    assert!(is_irreducible(&f).unwrap());
    let g = qp(&[-1, 0, 0, 0, 1]);
    let fac = factor(&g).unwrap();
    assert_eq!(fac.factors.len(), 3);
    assert_eq!(fac.expand(&Field::rationals()), g);
}

#[test]
fn finite_roots() {
    let f4 = gf(2, 2);
    // X^2 + X + 1 over GF(4): roots w and w + 1
    let r = roots(&ff(&f4, &[1, 1, 1])).unwrap();
    assert_eq!(r, vec![f4.element_at(2), f4.element_at(3)]);
}

fn arb_gf_poly(field: Field, max_deg: usize) -> impl Strategy<Value = Poly> {
    let q = field.order().unwrap();
    prop::collection::vec(0..q, 0..=max_deg + 1).prop_map(move |v| ff(&field, &v))
}

fn arb_q_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((-9i64..=9, 1i64..=4), 0..=max_deg + 1).prop_map(|v| {
        let q = Field::rationals();
        Poly::new(
            q,
            v.into_iter()
                .map(|(n, d)| FieldElem::Q(BigRational::new(n.into(), d.into())))
                .collect(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn divmod_round_trip_gf9(a in arb_gf_poly(gf(3, 2), 6), b in arb_gf_poly(gf(3, 2), 3)) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(q.mul(&b).add(&r), a);
        prop_assert!(r.degree() < b.degree());
    }

    #[test]
    fn divmod_round_trip_q(a in arb_q_poly(5), b in arb_q_poly(3)) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(q.mul(&b).add(&r), a);
    }

    #[test]
    fn gcd_bezout_gf8(a in arb_gf_poly(gf(2, 3), 5), b in arb_gf_poly(gf(2, 3), 5)) {
        let (g, s, t) = a.gcd_extended(&b);
        prop_assert_eq!(s.mul(&a).add(&t.mul(&b)), g.clone());
        if !g.is_zero() {
            prop_assert!(g.divides(&a) && g.divides(&b));
        }
    }

    #[test]
    fn factor_round_trip_gf(a in arb_gf_poly(gf(5, 1), 7)) {
        prop_assume!(!a.is_zero());
        let f = factor(&a).unwrap();
        prop_assert_eq!(f.expand(a.field()), a);
        for (g, _) in &f.factors {
            prop_assert!(is_irreducible(g).unwrap());
        }
    }

    #[test]
    fn factor_round_trip_q(a in arb_q_poly(4), b in arb_q_poly(3)) {
        let prod = a.mul(&b);
        prop_assume!(!prod.is_zero());
        let f = factor(&prod).unwrap();
        prop_assert_eq!(f.expand(prod.field()), prod);
    }

    #[test]
    fn ring_axioms_gf4(a in arb_gf_poly(gf(2, 2), 3), b in arb_gf_poly(gf(2, 2), 3), c in arb_gf_poly(gf(2, 2), 3)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }
}
