use proptest::prelude::*;
use punctual::rings::{Domain, MultiPoly, UniPoly};
use punctual::sample;
use punctual::sympoly::{
    delta_cofactor, delta_poly, ebasis_expand, ebasis_reduce, is_symmetric, lift, symmetric_coeff, sym_vars,
};

fn field(p: u64) -> Domain {
    if p == 0 { Domain::rationals() } else { Domain::prime_field(p).unwrap() }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn delta_expands_through_symmetric_coefficients(seed in any::<u64>(), p in prop::sample::select(vec![0u64, 7])) {
        let k = field(p);
        let mut r = sample::rng(seed);
        let n = 1 + (seed % 3) as usize;
        let g = sample::poly(&k, (seed / 3 % 4) as usize, &mut r);
        let vars = sym_vars(n);
        let gx = lift(&g, &vars, 0);
        let mut sum = gx.pow(n as u32);
        for i in 1..=n {
            let term = symmetric_coeff(&g, n, i).unwrap().mul(&gx.pow((n - i) as u32));
            sum = if i % 2 == 1 { sum.sub(&term) } else { sum.add(&term) };
        }
        prop_assert_eq!(delta_poly(&g, n).unwrap(), sum);
    }

    #[test]
    fn cofactor_identity(seed in any::<u64>(), p in prop::sample::select(vec![0u64, 7])) {
        let k = field(p);
        let mut r = sample::rng(seed);
        let n = 1 + (seed % 3) as usize;
        let g = sample::poly(&k, 1 + (seed / 3 % 3) as usize, &mut r);
        let h = delta_cofactor(&g, n).unwrap();
        prop_assert_eq!(h.mul(&delta_poly(&UniPoly::x(&k), n).unwrap()), delta_poly(&g, n).unwrap());
    }

    #[test]
    fn reduce_then_expand_is_identity(seed in any::<u64>()) {
        let k = field(0);
        let mut r = sample::rng(seed);
        let n = 2 + (seed % 2) as usize;
        let g = sample::poly(&k, 1 + (seed / 2 % 3) as usize, &mut r);
        for i in 1..=n {
            let p = symmetric_coeff(&g, n, i).unwrap();
            prop_assert_eq!(ebasis_expand(&ebasis_reduce(&p).unwrap()).unwrap(), p);
        }
    }

    #[test]
    fn adjacent_symmetry_gives_full_invariance(seed in any::<u64>(), tail in Just(vec![3usize, 1, 2]).prop_shuffle()) {
        let k = field(0);
        let mut r = sample::rng(seed);
        let g = sample::poly(&k, 2, &mut r);
        let p = symmetric_coeff(&g, 3, 1 + (seed % 3) as usize).unwrap();
        let t1: MultiPoly = MultiPoly::var(&k, sym_vars(3), 1);
        let q = p.add(&t1.scale(&k.from_i64((seed % 2) as i64)));
        let perm: Vec<usize> = std::iter::once(0).chain(tail).collect();
        if is_symmetric(&q) {
            prop_assert_eq!(q.permute_vars(&perm), q);
        }
    }
}

#[test]
fn random_deltas_are_symmetric() {
    let k = field(0);
    let mut r = sample::rng(11);
    for n in 1..=4 {
        let g = sample::poly(&k, 3, &mut r);
        assert!(is_symmetric(&delta_poly(&g, n).unwrap()));
    }
}
