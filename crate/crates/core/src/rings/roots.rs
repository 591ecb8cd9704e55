use num_bigint::BigUint;
use num_traits::One;

use super::{Domain, DomainKind, Elem, UniPoly, Value};
use crate::error::{Error, Result};
use crate::norms::MonicFamily;

/// Apply the evaluation homomorphism `u_i -> point[i]` to every coefficient
/// of a polynomial over a rational function field or polynomial ring.
pub fn specialize(f: &UniPoly, point: &[Elem]) -> Result<UniPoly> {
    let base = f.domain().base_field();
    specialize_into(f, point, &base)
}

/// [`specialize`] with the point taken in `target`, which must be the base
/// field or an extension of it.
pub fn specialize_into(f: &UniPoly, point: &[Elem], target: &Domain) -> Result<UniPoly> {
    let d = f.domain();
    let nvars = d.vars().len();
    if !matches!(d.kind(), DomainKind::RatFuncField { .. } | DomainKind::PolyRing { .. }) {
        return Err(Error::UnsupportedDomain { domain: d.to_string(), operation: "specialize" });
    }
    if point.len() != nvars {
        return Err(Error::ArityMismatch { expected: nvars, got: point.len() });
    }
    if let Some(bad) = point.iter().find(|p| !p.domain().same(target)) {
        return Err(Error::DomainMismatch(bad.domain().to_string(), target.to_string()));
    }
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| specialize_elem(c, point, target))
        .collect::<Result<Vec<_>>>()?;
    Ok(UniPoly::new(target, coeffs))
}

pub(crate) fn specialize_elem(c: &Elem, point: &[Elem], target: &Domain) -> Result<Elem> {
    match c.value() {
        Value::Frac(n, d) => {
            let den = d.eval(point, target);
            if den.is_zero() {
                return Err(Error::PoleAtPoint);
            }
            n.eval(point, target).checked_div(&den)
        }
        Value::Poly(p) => Ok(p.eval(point, target)),
        _ => Ok(target.embed(c)),
    }
}

/// All roots of `f` in its (finite) domain, with multiplicity, by exhaustive
/// search. Returns `(root, multiplicity)` pairs in enumeration order.
pub fn roots_with_multiplicity(f: &UniPoly) -> Result<Vec<(Elem, usize)>> {
    let d = f.domain();
    let order = d.order().ok_or_else(|| Error::UnsupportedDomain {
        domain: d.to_string(),
        operation: "roots_with_multiplicity",
    })?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut rest = f.clone();
    let mut out = Vec::new();
    let mut i = BigUint::from(0u32);
    while i < order && rest.deg() > 0 {
        let a = d.finite_elem(&i);
        let mut mult = 0;
        while rest.deg() > 0 && rest.eval(&a).is_zero() {
            rest = rest.exact_div(&UniPoly::linear(&a))?;
            mult += 1;
        }
        if mult > 0 {
            out.push((a, mult));
        }
        i += BigUint::one();
    }
    Ok(out)
}

/// `prod G(alpha_i)` over the roots of `F` (with multiplicity) in `GF(p^r)`,
/// returned as an element of `GF(p)`.
pub fn product_over_roots(family: &MonicFamily, g: &UniPoly, r: usize) -> Result<Elem> {
    let d = family.domain();
    let p = match d.kind() {
        DomainKind::PrimeField(p) => *p,
        _ => {
            return Err(Error::UnsupportedDomain {
                domain: d.to_string(),
                operation: "product_over_roots",
            })
        }
    };
    if !g.domain().same(d) {
        return Err(Error::DomainMismatch(g.domain().to_string(), d.to_string()));
    }
    let ext = Domain::finite_field(p, r)?;
    let f = family.to_poly().embed_into(&ext);
    let roots = roots_with_multiplicity(&f)?;
    let found: usize = roots.iter().map(|(_, m)| m).sum();
    if found < family.n() {
        return Err(Error::DoesNotSplit { found, needed: family.n() });
    }
    let mut acc = ext.one();
    for (a, m) in &roots {
        acc = &acc * &g.eval_in(a).pow(*m as u64);
    }
    Ok(acc
        .to_base_field()
        .expect("product over all roots is fixed by the Frobenius"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specialize_examples() {
        let d: Domain = "QQ(u)".parse().unwrap();
        let qq = Domain::rationals();
        let u = d.var("u").unwrap();
        let f = UniPoly::linear(&u);
        assert_eq!(specialize(&f, &[qq.from_i64(3)]).unwrap(), UniPoly::from_ints(&qq, &[-3, 1]));
        let g = UniPoly::new(&d, vec![d.zero(), d.one().checked_div(&u).unwrap()]);
        assert_eq!(specialize(&g, &[qq.zero()]), Err(Error::PoleAtPoint));
        let h = UniPoly::new(&d, vec![u.clone(), -(&d.one() + &u), d.one()]);
        assert_eq!(specialize(&h, &[qq.from_i64(5)]).unwrap(), UniPoly::from_ints(&qq, &[5, -6, 1]));
        assert!(matches!(specialize(&h, &[]), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn product_over_roots_examples() {
        let f5 = Domain::prime_field(5).unwrap();
        let fam = MonicFamily::from_poly(&UniPoly::from_ints(&f5, &[0, -1, 1])).unwrap();
        let g = UniPoly::from_ints(&f5, &[1, 1]);
        assert_eq!(product_over_roots(&fam, &g, 1).unwrap(), f5.from_i64(2));

        let fam = MonicFamily::from_poly(&UniPoly::from_ints(&f5, &[0, 0, 1])).unwrap();
        assert_eq!(product_over_roots(&fam, &g, 1).unwrap(), f5.one());

        let f3 = Domain::prime_field(3).unwrap();
        let fam = MonicFamily::from_poly(&UniPoly::from_ints(&f3, &[1, 0, 1])).unwrap();
        let x = UniPoly::x(&f3);
        assert_eq!(product_over_roots(&fam, &x, 2).unwrap(), f3.one());
        assert_eq!(
            product_over_roots(&fam, &x, 1),
            Err(Error::DoesNotSplit { found: 0, needed: 2 })
        );
    }
}
