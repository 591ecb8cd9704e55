use proptest::prelude::*;
use punctual::freeness::strip_units;
use punctual::hilbert::*;
use punctual::norms::norm_coeffs;
use punctual::rings::{Domain, Elem, UniPoly};
use punctual::sample;
use rand::Rng;

fn qq_u() -> Domain {
    "QQ(u)".parse().unwrap()
}

#[test]
fn origin_round_trips_over_fields() {
    for k in [Domain::rationals(), Domain::prime_field(7).unwrap()] {
        for n in 1..=5 {
            let u = vec![k.zero(); n];
            let p = classify_family(&family_from_point(&u, &k).unwrap()).unwrap();
            assert_eq!(p.u(), &u[..]);
            assert_eq!(p.family().to_poly(), UniPoly::x(&k).pow(n));
        }
    }
}

#[test]
fn note_scan_over_small_integers() {
    let q = Domain::rationals();
    for n in [2usize, 3] {
        let total = 7usize.pow(n as u32);
        let mut accepted = Vec::new();
        for idx in 0..total {
            let u: Vec<Elem> = (0..n).map(|j| q.from_i64((idx / 7usize.pow(j as u32) % 7) as i64 - 3)).collect();
            let t = is_point_of_hn(&u, &q).unwrap();
            if t.is_point {
                accepted.push(u);
                continue;
            }
            let w = t.witness.expect("rejection carries a witness");
            let f = family_from_point(&u, &q).unwrap();
            assert!(norm_coeffs(&f, &w.q).unwrap().norm().is_zero(), "{f}: {}", w.q);
        }
        assert_eq!(accepted, vec![vec![q.zero(); n]]);
    }
}

#[test]
fn rejected_points_raise_not_in_hilb() {
    let q = Domain::rationals();
    let f = family_from_point(&[q.from_i64(1)], &q).unwrap();
    assert!(matches!(classify_family(&f), Err(punctual::Error::NotInHilb { .. })));
    let d: Domain = "QQ[u]".parse().unwrap();
    let f = family_from_point(&[d.var("u").unwrap()], &d).unwrap();
    assert!(matches!(classify_family(&f), Err(punctual::Error::NotInHilb { .. })));
}

#[test]
fn ideal_examples() {
    let q = Domain::rationals();
    let gens = vec![UniPoly::from_ints(&q, &[0, 0, -1, 1]), UniPoly::from_ints(&q, &[0, 0, -1, 1])];
    let m = ideal_monic_generator(&IdealPresentation::new(&q, gens).unwrap()).unwrap();
    assert_eq!((m.generator, m.rank), (UniPoly::x(&q).pow(2), 2));
    let m = ideal_monic_generator(&IdealPresentation::new(&q, vec![UniPoly::from_ints(&q, &[-1, 1])]).unwrap()).unwrap();
    assert_eq!(m.rank, 0);
    assert!(m.family().is_none());
    let zero = IdealPresentation::new(&q, vec![UniPoly::zero(&q)]).unwrap();
    assert_eq!(ideal_monic_generator(&zero), Err(punctual::Error::ZeroIdeal));
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 40, ..ProptestConfig::default() })]

    #[test]
    fn function_field_points_round_trip(seed in any::<u64>()) {
        let d = qq_u();
        let f = sample::good_function_field_family(&d, 5, &mut sample::rng(seed));
        let p = classify_family(&f).unwrap();
        let back = family_from_point(p.u(), &d).unwrap();
        prop_assert_eq!(back.u(), f.u());
        let again = classify_family(&back).unwrap();
        prop_assert_eq!(again.u(), p.u());
    }

    #[test]
    fn hn_eval_is_a_homomorphism(seed in any::<u64>()) {
        let d = qq_u();
        let k = Domain::rationals();
        let mut r = sample::rng(seed);
        let f = sample::good_function_field_family(&d, 3, &mut r);
        let p = classify_family(&f).unwrap();
        let n = f.n();
        let a = sample::hn_element(&k, n, &mut r);
        let b = sample::hn_element(&k, n, &mut r);
        let (ea, eb) = (hn_eval(&a, &p).unwrap(), hn_eval(&b, &p).unwrap());
        prop_assert_eq!(hn_eval(&a.add(&b).unwrap(), &p).unwrap(), &ea + &eb);
        prop_assert_eq!(hn_eval(&a.mul(&b).unwrap(), &p).unwrap(), &ea * &eb);
        prop_assert_eq!(hn_eval(&a.sub(&a).unwrap(), &p).unwrap(), d.zero());
    }

    #[test]
    fn inverse_norm_evaluates_to_an_inverse(seed in any::<u64>()) {
        let k = Domain::prime_field(7).unwrap();
        let mut r = sample::rng(seed);
        let n = r.gen_range(1..=4);
        let p = classify_family(&family_from_point(&vec![k.zero(); n], &k).unwrap()).unwrap();
        let g = sample::unit_poly(&k, 4, &mut r);
        let a = HnElement::inverse_norm(&g, n).unwrap();
        let prod = a.mul(&HnElement::from_ebasis(norm_ebasis(&g, n).unwrap())).unwrap();
        prop_assert!(hn_eval(&prod, &p).unwrap().is_one());
        prop_assert!(prod.same_value(&HnElement::constant(&k, n, k.one())).unwrap());
    }

    #[test]
    fn monic_generator_is_unique(seed in any::<u64>()) {
        let q = Domain::rationals();
        let mut r = sample::rng(seed);
        let (gens, a) = sample::generator_list(&q, &mut r);
        let m = ideal_monic_generator(&IdealPresentation::new(&q, gens.clone()).unwrap()).unwrap();
        prop_assert_eq!(&m.generator, &UniPoly::x(&q).pow(a));
        prop_assert_eq!(m.rank, a);
        let other = sample::perturb_generators(&gens, &mut r);
        let m2 = ideal_monic_generator(&IdealPresentation::new(&q, other).unwrap()).unwrap();
        prop_assert_eq!(&m, &m2);
        for h in &gens {
            prop_assert!(strip_units(h).unwrap().f_part.exact_div(&m.generator).is_ok());
        }
    }
}
