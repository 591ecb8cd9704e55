//! Multivariate gcd over a field by recursive primitive remainder sequences.

use super::MultiPoly;

/// Greatest common divisor of two polynomials with coefficients in a field,
/// normalized to graded-lex leading coefficient 1. `gcd(0, 0) = 0`.
pub fn multi_gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let g = if a.is_zero() {
        b.clone()
    } else if b.is_zero() {
        a.clone()
    } else {
        gcd_from(a, b, 0)
    };
    normalize(g)
}

fn normalize(g: MultiPoly) -> MultiPoly {
    match g.leading_grlex_coeff() {
        Some(c) if !c.is_one() => g.scale(&c.inv().expect("field coefficient")),
        _ => g,
    }
}

/// gcd of nonzero `a`, `b` that only involve variables `var..`.
fn gcd_from(a: &MultiPoly, b: &MultiPoly, var: usize) -> MultiPoly {
    let one = MultiPoly::one(a.domain(), a.vars_arc());
    if var == a.nvars() {
        return one;
    }
    let (da, db) = (a.degree_in(var), b.degree_in(var));
    if da == 0 && db == 0 {
        return gcd_from(a, b, var + 1);
    }
    let ca = content(a, var);
    let cb = content(b, var);
    let c = gcd_from(&ca, &cb, var + 1);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let (mut r0, mut r1) = if pa.degree_in(var) >= pb.degree_in(var) { (pa, pb) } else { (pb, pa) };
    loop {
        if r1.degree_in(var) == 0 {
            // r1 is a nonzero polynomial free of `var`; primitive parts are coprime
            return c;
        }
        let r = prem(&r0, &r1, var);
        if r.is_zero() {
            let pp = primitive_part(&r1, var);
            return c.mul(&pp);
        }
        r0 = r1;
        r1 = primitive_part(&r, var);
    }
}

/// gcd of the coefficients of `p` viewed as a polynomial in `var`.
fn content(p: &MultiPoly, var: usize) -> MultiPoly {
    let mut acc: Option<MultiPoly> = None;
    for d in 0..=p.degree_in(var) as u32 {
        let c = p.coeff_in(var, d);
        if c.is_zero() {
            continue;
        }
        acc = Some(match acc {
            None => c,
            Some(g) => gcd_from(&g, &c, var + 1),
        });
        if acc.as_ref().is_some_and(|g| g.is_constant()) {
            break;
        }
    }
    acc.expect("nonzero polynomial")
}

fn primitive_part(p: &MultiPoly, var: usize) -> MultiPoly {
    let c = content(p, var);
    let pp = p.div_exact(&c).expect("content divides");
    if var + 1 == p.nvars() {
        let lc = pp.coeff_in(var, pp.degree_in(var) as u32).constant_value().expect("field coefficient");
        if !lc.is_one() {
            return pp.scale(&lc.inv().expect("field coefficient"));
        }
    }
    pp
}

/// Pseudo-remainder of `a` by `b` in the variable `var`.
fn prem(a: &MultiPoly, b: &MultiPoly, var: usize) -> MultiPoly {
    let db = b.degree_in(var) as u32;
    let lb = b.coeff_in(var, db);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(var) as u32 >= db {
        let dr = r.degree_in(var) as u32;
        let lr = r.coeff_in(var, dr);
        r = r.mul(&lb).sub(&b.mul(&lr).mul_var_pow(var, dr - db));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::Domain;

    fn vars() -> crate::rings::Vars {
        MultiPoly::vars_from(&["u", "v"])
    }

    #[test]
    fn gcd_of_products() {
        for d in [Domain::rationals(), Domain::prime_field(5).unwrap()] {
            let u = MultiPoly::var(&d, vars(), 0);
            let v = MultiPoly::var(&d, vars(), 1);
            let one = MultiPoly::one(&d, vars());
            let f = u.mul(&v).add(&one); // uv + 1
            let g = u.sub(&v.pow(2)); // u - v^2
            let h = u.add(&v).add(&one);
            let a = f.mul(&g).mul(&g);
            let b = g.mul(&h).scale(&d.from_i64(3));
            let gg = multi_gcd(&a, &b);
            // g normalized: grlex leader is -v^2, so -g
            assert_eq!(gg, g.neg());
            assert!(multi_gcd(&f, &h).is_one());
        }
    }

    #[test]
    fn gcd_with_zero() {
        let d = Domain::rationals();
        let u = MultiPoly::var(&d, vars(), 0);
        let two_u = u.scale(&d.from_i64(2));
        assert_eq!(multi_gcd(&two_u, &MultiPoly::zero(&d, vars())), u);
        assert!(multi_gcd(&MultiPoly::zero(&d, vars()), &MultiPoly::zero(&d, vars())).is_zero());
    }
}
