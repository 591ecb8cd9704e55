//! Seeded random instances.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::freeness::conjugate_product;
use crate::hilbert::HnElement;
use crate::norms::MonicFamily;
use crate::rings::{Domain, DomainKind, Elem, MultiPoly, UniPoly};
use crate::sympoly::{ebasis_vars, EBasisPoly};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small random element of a base or finite field: over `QQ` a fraction
/// with numerator in `[-bound, bound]` and denominator in `1..=3`.
pub fn elem<R: Rng>(k: &Domain, rng: &mut R, bound: i64) -> Elem {
    match k.kind() {
        DomainKind::Rationals => {
            let num = rng.gen_range(-bound..=bound);
            let den = if rng.gen_bool(0.25) { rng.gen_range(1..=3) } else { 1 };
            k.from_rational(&BigRational::new(BigInt::from(num), BigInt::from(den)))
                .expect("rational")
        }
        _ if k.is_finite() => k.random_finite_elem(rng),
        _ => panic!("no sampler for {k}"),
    }
}

fn nonzero_elem<R: Rng>(k: &Domain, rng: &mut R, bound: i64) -> Elem {
    loop {
        let c = elem(k, rng, bound);
        if !c.is_zero() {
            return c;
        }
    }
}

/// Polynomial of degree exactly `deg`.
pub fn poly<R: Rng>(k: &Domain, deg: usize, rng: &mut R) -> UniPoly {
    let mut coeffs: Vec<Elem> = (0..deg).map(|_| elem(k, rng, 5)).collect();
    coeffs.push(nonzero_elem(k, rng, 5));
    UniPoly::new(k, coeffs)
}

/// Polynomial of degree at most `max_deg` with `g(0) != 0`.
pub fn unit_poly<R: Rng>(k: &Domain, max_deg: usize, rng: &mut R) -> UniPoly {
    let deg = rng.gen_range(0..=max_deg);
    let mut coeffs: Vec<Elem> = vec![nonzero_elem(k, rng, 5)];
    coeffs.extend((1..deg).map(|_| elem(k, rng, 5)));
    if deg > 0 {
        coeffs.push(nonzero_elem(k, rng, 5));
    }
    UniPoly::new(k, coeffs)
}

pub fn family<R: Rng>(k: &Domain, n: usize, rng: &mut R) -> MonicFamily {
    MonicFamily::new(k, (0..n).map(|_| elem(k, rng, 5)).collect()).expect("family")
}

/// Monic `F` of degree `n` over `GF(p)` that splits over `GF(p^r)`.
pub fn split_family<R: Rng>(p: u64, r: usize, n: usize, rng: &mut R) -> MonicFamily {
    let k = Domain::prime_field(p).expect("prime");
    let ext = Domain::finite_field(p, r).expect("field");
    let mut f = UniPoly::one(&k);
    while f.deg() < n {
        let a = ext.random_finite_elem(rng);
        let m = conjugate_product(&UniPoly::linear(&a));
        if f.deg() + m.deg() <= n {
            f = &f * &m;
        }
    }
    MonicFamily::from_poly(&f).expect("monic")
}

/// A monic factor with transcendental roots over `k(u)`: `x - (a u^e + b)`
/// or `x^2 - (a u + b)`.
pub fn transcendental_factor<R: Rng>(d: &Domain, rng: &mut R) -> UniPoly {
    let k = d.base_field();
    let u = d.var(&d.vars()[0]).expect("function field variable");
    let a = d.embed(&nonzero_elem(&k, rng, 3));
    let b = d.embed(&elem(&k, rng, 3));
    if rng.gen_bool(0.7) {
        let e = rng.gen_range(1..=2u64);
        UniPoly::linear(&(&(&a * &u.pow(e)) + &b))
    } else {
        let c = &(&a * &u) + &b;
        UniPoly::new(d, vec![-c, d.zero(), d.one()])
    }
}

/// Monic irreducible `q != x` in `k[x]`, of degree 1 or 2.
pub fn k_irreducible<R: Rng>(k: &Domain, rng: &mut R) -> UniPoly {
    loop {
        let deg = rng.gen_range(1..=2);
        let mut coeffs: Vec<Elem> = (0..deg).map(|_| elem(k, rng, 4)).collect();
        coeffs.push(k.one());
        let q = UniPoly::new(k, coeffs);
        if !q.coeff(0).is_zero() && crate::rings::factor::is_irreducible(&q).unwrap_or(false) {
            return q;
        }
    }
}

/// `x^a` times transcendental factors, over `k(u)`; a Good family.
pub fn good_function_field_family<R: Rng>(d: &Domain, max_n: usize, rng: &mut R) -> MonicFamily {
    let mut f = UniPoly::x(d).pow(rng.gen_range(0..=1));
    while f.deg() < max_n && (f.deg() == 0 || rng.gen_bool(0.6)) {
        let t = transcendental_factor(d, rng);
        if f.deg() + t.deg() <= max_n {
            f = &f * &t;
        }
    }
    MonicFamily::from_poly(&f).expect("monic")
}

/// A product of at least one `k`-irreducible and transcendental factors
/// over `k(u)`; a Bad family.
pub fn bad_function_field_family<R: Rng>(d: &Domain, max_n: usize, rng: &mut R) -> MonicFamily {
    let k = d.base_field();
    let mut f = k_irreducible(&k, rng).embed_into(d);
    while f.deg() + 1 < max_n && rng.gen_bool(0.6) {
        let next = if rng.gen_bool(0.5) {
            transcendental_factor(d, rng)
        } else {
            k_irreducible(&k, rng).embed_into(d)
        };
        if f.deg() + next.deg() <= max_n {
            f = &f * &next;
        }
    }
    MonicFamily::from_poly(&f).expect("monic")
}

/// A random mixture of `x`, `k`-irreducible and transcendental factors over
/// `k(u)`, scaled by a nonzero constant.
pub fn function_field_poly<R: Rng>(d: &Domain, max_deg: usize, rng: &mut R) -> UniPoly {
    let k = d.base_field();
    let mut g = UniPoly::constant(d, d.embed(&nonzero_elem(&k, rng, 3)));
    let target = rng.gen_range(1..=max_deg);
    while g.deg() < target {
        let next = match rng.gen_range(0..3) {
            0 => UniPoly::x(d),
            1 => k_irreducible(&k, rng).embed_into(d),
            _ => transcendental_factor(d, rng),
        };
        if g.deg() + next.deg() <= max_deg {
            g = &g * &next;
        }
    }
    g
}

/// Ideal generators over `k` of the form `unit * x^(a + e) * unit`, with
/// `e = 0` for the first one.
pub fn generator_list<R: Rng>(k: &Domain, rng: &mut R) -> (Vec<UniPoly>, usize) {
    let a = rng.gen_range(0..=3);
    let count = rng.gen_range(1..=3);
    let gens = (0..count)
        .map(|i| {
            let extra = if i == 0 { 0 } else { rng.gen_range(0..=1) };
            let unit = unit_poly(k, 2, rng);
            &(&unit * &UniPoly::x(k).pow(a + extra)) * &unit_poly(k, 1, rng)
        })
        .collect::<Vec<_>>();
    (gens, a)
}

/// Multiply each generator by a unit, shuffle, and duplicate one.
pub fn perturb_generators<R: Rng>(gens: &[UniPoly], rng: &mut R) -> Vec<UniPoly> {
    let k = gens[0].domain().clone();
    let mut out: Vec<UniPoly> = gens.iter().map(|g| g * &unit_poly(&k, 2, rng)).collect();
    let dup = out[rng.gen_range(0..out.len())].clone();
    out.push(dup);
    out.shuffle(rng);
    out
}

/// Polynomial in `s_1..s_n` of total degree at most `max_deg`.
pub fn ebasis_poly<R: Rng>(k: &Domain, n: usize, max_deg: u32, rng: &mut R) -> EBasisPoly {
    let vars = ebasis_vars(n);
    let mut p = MultiPoly::zero(k, vars.clone());
    for _ in 0..rng.gen_range(1..=3) {
        let mut e = vec![0u32; n];
        let mut left = rng.gen_range(0..=max_deg);
        while left > 0 {
            e[rng.gen_range(0..n)] += 1;
            left -= 1;
        }
        p = p.add(&MultiPoly::monomial(k, vars.clone(), e, elem(k, rng, 4)));
    }
    EBasisPoly::from_poly(n, p).expect("arity")
}

pub fn hn_element<R: Rng>(k: &Domain, n: usize, rng: &mut R) -> HnElement {
    let num = ebasis_poly(k, n, 2, rng);
    let dens = (0..rng.gen_range(0..=2)).map(|_| unit_poly(k, 2, rng)).collect();
    HnElement::new(num, dens).expect("denominators are in U")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_families_split() {
        let mut r = rng(1);
        for _ in 0..10 {
            let f = split_family(5, 2, 3, &mut r);
            let ext = Domain::finite_field(5, 2).unwrap();
            let roots = crate::rings::roots_with_multiplicity(&f.to_poly().embed_into(&ext)).unwrap();
            assert_eq!(roots.iter().map(|(_, m)| m).sum::<usize>(), 3);
        }
    }

    #[test]
    fn same_seed_same_instances() {
        let q = Domain::rationals();
        let a: Vec<UniPoly> = (0..5).map(|_| poly(&q, 3, &mut rng(9))).collect();
        let b: Vec<UniPoly> = (0..5).map(|_| poly(&q, 3, &mut rng(9))).collect();
        assert_eq!(a, b);
    }
}
