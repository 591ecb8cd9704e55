//! Seeded invariant suite behind `punctual verify`.

use rand::Rng;

use punctual::freeness::{check_family, lemma22_factor, verify_witness};
use punctual::hilbert::{classify_family, family_from_point, ideal_monic_generator, IdealPresentation};
use punctual::norms::{cofactor, inverse_mod, norm_coeffs, MonicFamily};
use punctual::rings::{Domain, UniPoly};
use punctual::sample;
use punctual::sympoly::{ebasis_eval, ebasis_reduce, symmetric_coeffs};
use punctual::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: usize,
    pub passed: usize,
}

type Case = fn(&mut rand_chacha::ChaCha8Rng) -> Result<bool, Error>;

fn field(r: &mut impl Rng) -> Domain {
    if r.gen_bool(0.5) {
        Domain::rationals()
    } else {
        Domain::prime_field(7).expect("prime")
    }
}

/// `sum_i (-1)^i s_i G^(n-i)`.
pub fn alternating_sum(f: &MonicFamily, g: &UniPoly) -> Result<UniPoly, Error> {
    let d = f.domain();
    let s = norm_coeffs(f, g)?;
    let mut acc = UniPoly::zero(d);
    for i in 0..=f.n() {
        let mut c = s.get(i, d);
        if i % 2 == 1 {
            c = -c;
        }
        acc = &acc + &g.pow(f.n() - i).scale(&c);
    }
    Ok(acc)
}

fn alternating_sum_case(r: &mut rand_chacha::ChaCha8Rng) -> Result<bool, Error> {
    let k = field(r);
    let f = sample::family(&k, r.gen_range(1..=4), r);
    let g = sample::poly(&k, r.gen_range(0..=4), r);
    let sum = alternating_sum(&f, &g)?;
    Ok(sum.rem(&f.to_poly())?.is_zero() && sum == &cofactor(&f, &g)? * &f.to_poly())
}

fn two_route_case(r: &mut rand_chacha::ChaCha8Rng) -> Result<bool, Error> {
    let k = field(r);
    let f = sample::family(&k, r.gen_range(1..=3), r);
    let g = sample::poly(&k, r.gen_range(0..=3), r);
    let s = norm_coeffs(&f, &g)?;
    let sym = symmetric_coeffs(&g, f.n())?;
    for (i, p) in sym.iter().enumerate().skip(1) {
        if ebasis_eval(&ebasis_reduce(p)?, f.u())? != s.get(i, &k) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn inverse_case(r: &mut rand_chacha::ChaCha8Rng) -> Result<bool, Error> {
    let k = field(r);
    let f = sample::family(&k, r.gen_range(1..=4), r);
    let g = sample::poly(&k, r.gen_range(0..=4), r);
    let top = norm_coeffs(&f, &g)?.norm().clone();
    match inverse_mod(&f, &g) {
        Ok(inv) => Ok(!top.is_zero() && (&g * &inv).rem(&f.to_poly())?.is_one()),
        Err(Error::NotAUnit(_)) => Ok(top.is_zero()),
        Err(e) => Err(e),
    }
}

fn witness_case(r: &mut rand_chacha::ChaCha8Rng) -> Result<bool, Error> {
    let k = field(r);
    let n = r.gen_range(1..=3);
    let f = if r.gen_bool(0.2) {
        MonicFamily::new(&k, vec![k.zero(); n])?
    } else {
        sample::family(&k, n, r)
    };
    let v = check_family(&f)?;
    Ok(if v.is_good() { f.to_poly() == UniPoly::x(&k).pow(n) } else { verify_witness(&f, &v) })
}

fn lemma22_case(r: &mut rand_chacha::ChaCha8Rng) -> Result<bool, Error> {
    let d: Domain = "QQ(u)".parse().expect("domain");
    let big_g = sample::function_field_poly(&d, 4, r);
    let l = lemma22_factor(&big_g)?;
    Ok(&l.i.embed_into(&d) * &l.g.embed_into(&d) == &l.h * &big_g && !l.g.coeff(0).is_zero())
}

fn round_trip_case(r: &mut rand_chacha::ChaCha8Rng) -> Result<bool, Error> {
    let d: Domain = "QQ(u)".parse().expect("domain");
    let f = sample::good_function_field_family(&d, 4, r);
    let p = classify_family(&f)?;
    Ok(family_from_point(p.u(), &d)? == f)
}

fn generator_case(r: &mut rand_chacha::ChaCha8Rng) -> Result<bool, Error> {
    let q = Domain::rationals();
    let (gens, a) = sample::generator_list(&q, r);
    let m = ideal_monic_generator(&IdealPresentation::new(&q, gens.clone())?)?;
    let m2 = ideal_monic_generator(&IdealPresentation::new(&q, sample::perturb_generators(&gens, r))?)?;
    Ok(m == m2 && m.rank == a && m.generator == UniPoly::x(&q).pow(a))
}

const CHECKS: [(&str, Case); 7] = [
    ("alternating_sum", alternating_sum_case),
    ("two_route_norms", two_route_case),
    ("inverse", inverse_case),
    ("witness_soundness", witness_case),
    ("lemma22_identity", lemma22_case),
    ("round_trip", round_trip_case),
    ("monic_generator", generator_case),
];

pub fn run_suite(seed: u64, cases: usize) -> Vec<CheckResult> {
    CHECKS
        .iter()
        .enumerate()
        .map(|(j, (name, case))| {
            let mut r = sample::rng(seed.wrapping_add(j as u64));
            let passed = (0..cases).filter(|_| case(&mut r).unwrap_or(false)).count();
            CheckResult { name, cases, passed }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes() {
        for c in run_suite(3, 5) {
            assert_eq!(c.passed, c.cases, "{}", c.name);
        }
    }
}
