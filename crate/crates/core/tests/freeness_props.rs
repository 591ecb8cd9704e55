use std::collections::BTreeMap;

use proptest::prelude::*;
use punctual::freeness::{check_family, k_factors, lemma22_factor, local_quotient_dim, strip_units, verify_witness, witness_order, Status};
use punctual::norms::{inverse_mod, norm_coeffs, MonicFamily};
use punctual::rings::{factor_univariate, multi_gcd, Domain, MultiPoly, UniPoly};
use punctual::sample;

/// `k[x]` factors of `f` over `k(u)` read off the gcd of the coefficients of
/// `u^j` after clearing denominators.
fn coefficient_gcd_factors(f: &UniPoly) -> Vec<(UniPoly, usize)> {
    let d = f.domain();
    let k = d.base_field();
    let fracs: Vec<(MultiPoly, MultiPoly)> =
        f.coeffs().iter().map(|c| { let (n, m) = c.as_fraction().unwrap(); (n.clone(), m.clone()) }).collect();
    let mut lcm = fracs[0].1.clone();
    for (_, den) in &fracs[1..] {
        let g = multi_gcd(&lcm, den);
        lcm = lcm.mul(den).div_exact(&g).unwrap();
    }
    let mut by_u: BTreeMap<Vec<u32>, Vec<punctual::Elem>> = BTreeMap::new();
    for (i, (num, den)) in fracs.iter().enumerate() {
        let cleared = num.mul(&lcm.div_exact(den).unwrap());
        for (e, c) in cleared.terms() {
            let row = by_u.entry(e.clone()).or_insert_with(|| vec![k.zero(); f.coeffs().len()]);
            row[i] = c.clone();
        }
    }
    let mut c = UniPoly::zero(&k);
    for row in by_u.into_values() {
        c = c.gcd(&UniPoly::new(&k, row)).unwrap();
    }
    if c.deg() == 0 {
        return Vec::new();
    }
    let mut out: Vec<(UniPoly, usize)> = factor_univariate(&c)
        .unwrap()
        .non_x_factors()
        .cloned()
        .collect();
    out.sort_by(|a, b| witness_order(&a.0, &b.0));
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn sampled_search_matches_coefficient_gcd(seed in any::<u64>(), good in any::<bool>()) {
        let d: Domain = "QQ(u)".parse().unwrap();
        let mut r = sample::rng(seed);
        let f = if good {
            sample::good_function_field_family(&d, 4, &mut r)
        } else {
            sample::bad_function_field_family(&d, 4, &mut r)
        };
        let found = k_factors(&f.to_poly()).unwrap();
        prop_assert_eq!(found.factors, coefficient_gcd_factors(&f.to_poly()));
    }

    #[test]
    fn witnesses_verify(seed in any::<u64>()) {
        let d: Domain = "QQ(u)".parse().unwrap();
        let mut r = sample::rng(seed);
        let f = sample::bad_function_field_family(&d, 4, &mut r);
        let v = check_family(&f).unwrap();
        prop_assert_eq!(v.status, Status::Bad);
        prop_assert!(verify_witness(&f, &v));
        prop_assert!(v.witness.unwrap().norm.is_zero());
        prop_assert!(local_quotient_dim(&f.to_poly()).unwrap() < f.n());
    }

    #[test]
    fn good_verdicts_give_invertible_norms(seed in any::<u64>()) {
        let d: Domain = "QQ(u)".parse().unwrap();
        let k = Domain::rationals();
        let mut r = sample::rng(seed);
        let f = sample::good_function_field_family(&d, 3, &mut r);
        prop_assert!(check_family(&f).unwrap().is_good());
        for _ in 0..5 {
            let g = sample::unit_poly(&k, 6, &mut r).embed_into(&d);
            prop_assert!(!norm_coeffs(&f, &g).unwrap().norm().is_zero());
            let inv = inverse_mod(&f, &g).unwrap();
            prop_assert!((&g * &inv).rem(&f.to_poly()).unwrap().is_one());
        }
    }

    #[test]
    fn verdict_agrees_with_strip(seed in any::<u64>(), good in any::<bool>()) {
        let d: Domain = "QQ(u)".parse().unwrap();
        let mut r = sample::rng(seed);
        let f = if good {
            sample::good_function_field_family(&d, 4, &mut r)
        } else {
            sample::bad_function_field_family(&d, 4, &mut r)
        };
        let s = strip_units(&f.to_poly()).unwrap();
        let by_strip = s.unit_part.is_one() && s.f_part.deg() == f.n();
        prop_assert_eq!(check_family(&f).unwrap().is_good(), by_strip);
    }

    #[test]
    fn lemma22_identity_over_function_field(seed in any::<u64>()) {
        let d: Domain = "QQ(u)".parse().unwrap();
        let mut r = sample::rng(seed);
        let g = sample::function_field_poly(&d, 5, &mut r);
        let l = lemma22_factor(&g).unwrap();
        prop_assert_eq!(&l.i * &l.g.embed_into(&d), &l.h * &g);
        prop_assert!(!l.g.coeff(0).is_zero());
        prop_assert!(strip_units(&l.i).unwrap().unit_part.is_one());
    }

    #[test]
    fn lemma22_identity_over_gf8(seed in any::<u64>()) {
        let kk = Domain::finite_field(2, 3).unwrap();
        let mut r = sample::rng(seed);
        let g = sample::poly(&kk, 1 + (seed % 4) as usize, &mut r);
        let l = lemma22_factor(&g).unwrap();
        prop_assert_eq!(&l.i * &l.g.embed_into(&kk), &l.h * &g);
        prop_assert!(l.i.deg() == l.i.x_valuation());
        if g.deg() > g.x_valuation() {
            prop_assert!(l.i.deg() < g.deg());
        }
    }
}

#[test]
fn zero_families_are_good_over_every_class() {
    for desc in ["QQ", "GF(7)", "QQ[u]", "GF(2^3)", "QQ(u,v)"] {
        let d: Domain = desc.parse().unwrap();
        for n in 1..=5 {
            let f = MonicFamily::new(&d, vec![d.zero(); n]).unwrap();
            assert!(check_family(&f).unwrap().is_good(), "{desc} n={n}");
        }
    }
}

#[test]
fn two_variable_function_field() {
    let d: Domain = "QQ(u,v)".parse().unwrap();
    let u = d.var("u").unwrap();
    let v = d.var("v").unwrap();
    let f = &UniPoly::linear(&(&u * &v)) * &UniPoly::from_ints(&d, &[2, 0, 1]);
    let fam = MonicFamily::from_poly(&f).unwrap();
    let verdict = check_family(&fam).unwrap();
    assert_eq!(verdict.witness.as_ref().unwrap().q.to_string(), "x^2 + 2");
    assert!(verify_witness(&fam, &verdict));
    let good = MonicFamily::from_poly(&UniPoly::linear(&(&u - &v))).unwrap();
    assert!(check_family(&good).unwrap().is_good());
}

#[test]
fn function_field_over_small_prime() {
    let d: Domain = "GF(3)(u)".parse().unwrap();
    let u = d.var("u").unwrap();
    // x^2 + 1 is irreducible over GF(3); its roots live in GF(9)
    let f = &UniPoly::from_ints(&d, &[1, 0, 1]) * &UniPoly::linear(&(&u * &u));
    let fam = MonicFamily::from_poly(&f).unwrap();
    let v = check_family(&fam).unwrap();
    assert_eq!(v.witness.as_ref().unwrap().q.to_string(), "x^2 + 1");
    assert!(verify_witness(&fam, &v));
}
