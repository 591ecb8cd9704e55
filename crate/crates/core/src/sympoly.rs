//! Polynomials in `x, t1..tn`: the products `Delta(G, t)`, their cofactors,
//! the symmetric functions `s_i(G(t))`, and reduction of symmetric
//! polynomials to the elementary basis.

use std::fmt;

use crate::error::{Error, Result};
use crate::rings::{Domain, Elem, MultiPoly, UniPoly, Vars};

/// Largest arity accepted by this module.
pub const MAX_ARITY: usize = 6;
/// Largest total degree accepted by this module.
pub const MAX_TOTAL_DEGREE: usize = 24;

/// Variables `x, t1, .., tn` (with `x` at index 0).
pub fn sym_vars(n: usize) -> Vars {
    let mut names = vec!["x".to_string()];
    names.extend((1..=n).map(|i| format!("t{i}")));
    MultiPoly::vars_from(&names)
}

/// Variables `s1, .., sn` of the elementary basis.
pub fn ebasis_vars(n: usize) -> Vars {
    let names: Vec<String> = (1..=n).map(|i| format!("s{i}")).collect();
    MultiPoly::vars_from(&names)
}

fn check_arity(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ArityMismatch { expected: 1, got: 0 });
    }
    if n > MAX_ARITY {
        return Err(Error::ResourceCap(format!("arity {n} exceeds {MAX_ARITY}")));
    }
    Ok(())
}

fn check_degree(d: usize) -> Result<()> {
    if d > MAX_TOTAL_DEGREE {
        return Err(Error::ResourceCap(format!("total degree {d} exceeds {MAX_TOTAL_DEGREE}")));
    }
    Ok(())
}

/// `s_i(t1..tn)`, with `s_0 = 1`.
pub fn elementary_symmetric(domain: &Domain, n: usize, i: usize) -> Result<MultiPoly> {
    check_arity(n)?;
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    let vars = sym_vars(n);
    Ok(elementary_table(domain, &vars, n).swap_remove(i))
}

/// `[s_0, .., s_n]` in the variables `vars` (indices `1..=n`).
fn elementary_table(domain: &Domain, vars: &Vars, n: usize) -> Vec<MultiPoly> {
    let ts: Vec<MultiPoly> = (1..=n).map(|j| MultiPoly::var(domain, vars.clone(), j)).collect();
    symmetric_table(domain, vars, &ts, n)
}

/// `e_k(values)` for `k = 0..=top`.
fn symmetric_table(domain: &Domain, vars: &Vars, values: &[MultiPoly], top: usize) -> Vec<MultiPoly> {
    let mut e = vec![MultiPoly::zero(domain, vars.clone()); top + 1];
    e[0] = MultiPoly::one(domain, vars.clone());
    for (j, v) in values.iter().enumerate() {
        for k in (1..=top.min(j + 1)).rev() {
            e[k] = e[k].add(&e[k - 1].mul(v));
        }
    }
    e
}

/// `G` as a polynomial in variable `var` of `vars`.
pub fn lift(g: &UniPoly, vars: &Vars, var: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(g.domain(), vars.clone());
    for (k, c) in g.coeffs().iter().enumerate() {
        let mut e = vec![0; vars.len()];
        e[var] = k as u32;
        p = p.add(&MultiPoly::monomial(g.domain(), vars.clone(), e, c.clone()));
    }
    p
}

/// `Delta(G, t) = prod_i (G(x) - G(t_i))`.
pub fn delta_poly(g: &UniPoly, n: usize) -> Result<MultiPoly> {
    check_arity(n)?;
    check_degree(n * g.deg())?;
    let vars = sym_vars(n);
    let gx = lift(g, &vars, 0);
    let mut acc = MultiPoly::one(g.domain(), vars.clone());
    for i in 1..=n {
        acc = acc.mul(&gx.sub(&lift(g, &vars, i)));
    }
    Ok(acc)
}

/// `H(x, t)` with `Delta(G, t) = H(x, t) Delta(x, t)`.
pub fn delta_cofactor(g: &UniPoly, n: usize) -> Result<MultiPoly> {
    let num = delta_poly(g, n)?;
    let den = delta_poly(&UniPoly::x(g.domain()), n)?;
    Ok(num
        .div_exact(&den)
        .unwrap_or_else(|e| panic!("Delta(G, t) not divisible by Delta(x, t): {e}")))
}

/// `s_i(G(t1), .., G(tn))`.
pub fn symmetric_coeff(g: &UniPoly, n: usize, i: usize) -> Result<MultiPoly> {
    check_arity(n)?;
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    Ok(symmetric_coeffs_upto(g, n, i)?.swap_remove(i))
}

/// `[s_0(G(t)), .., s_n(G(t))]`.
pub fn symmetric_coeffs(g: &UniPoly, n: usize) -> Result<Vec<MultiPoly>> {
    check_arity(n)?;
    symmetric_coeffs_upto(g, n, n)
}

fn symmetric_coeffs_upto(g: &UniPoly, n: usize, top: usize) -> Result<Vec<MultiPoly>> {
    check_degree(top * g.deg())?;
    let vars = sym_vars(n);
    let values: Vec<MultiPoly> = (1..=n).map(|j| lift(g, &vars, j)).collect();
    Ok(symmetric_table(g.domain(), &vars, &values, top))
}

/// Positions of the variables `t1, .., tn` in `p`, in order, if all exist.
fn t_positions(p: &MultiPoly) -> Vec<usize> {
    let mut out = Vec::new();
    for k in 1.. {
        match p.vars().iter().position(|v| *v == format!("t{k}")) {
            Some(i) => out.push(i),
            None => break,
        }
    }
    out
}

/// Invariance under every adjacent transposition `t_i <-> t_(i+1)`.
pub fn is_symmetric(p: &MultiPoly) -> bool {
    let ts = t_positions(p);
    let identity: Vec<usize> = (0..p.nvars()).collect();
    ts.windows(2).all(|w| {
        let mut perm = identity.clone();
        perm.swap(w[0], w[1]);
        p.permute_vars(&perm) == *p
    })
}

/// A polynomial in the elementary symmetric functions `s1..sn`, stored as a
/// [`MultiPoly`] in variables `s1..sn`.
#[derive(Clone, PartialEq, Eq)]
pub struct EBasisPoly {
    n: usize,
    poly: MultiPoly,
}

impl EBasisPoly {
    pub fn from_poly(n: usize, poly: MultiPoly) -> Result<EBasisPoly> {
        if poly.vars() != &ebasis_vars(n)[..] {
            return Err(Error::ArityMismatch { expected: n, got: poly.nvars() });
        }
        Ok(EBasisPoly { n, poly })
    }

    pub fn zero(domain: &Domain, n: usize) -> EBasisPoly {
        EBasisPoly { n, poly: MultiPoly::zero(domain, ebasis_vars(n)) }
    }

    pub fn one(domain: &Domain, n: usize) -> EBasisPoly {
        EBasisPoly::constant(domain, n, domain.one())
    }

    pub fn constant(domain: &Domain, n: usize, c: Elem) -> EBasisPoly {
        EBasisPoly { n, poly: MultiPoly::constant(domain, ebasis_vars(n), c) }
    }

    /// The generator `s_i`, `1 <= i <= n`.
    pub fn gen(domain: &Domain, n: usize, i: usize) -> EBasisPoly {
        assert!((1..=n).contains(&i), "generator index");
        EBasisPoly { n, poly: MultiPoly::var(domain, ebasis_vars(n), i - 1) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn domain(&self) -> &Domain {
        self.poly.domain()
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.poly.is_one()
    }

    fn check(&self, other: &EBasisPoly) -> Result<()> {
        if self.n != other.n {
            return Err(Error::ArityMismatch { expected: self.n, got: other.n });
        }
        if !self.domain().same(other.domain()) {
            return Err(Error::DomainMismatch(self.domain().to_string(), other.domain().to_string()));
        }
        Ok(())
    }

    pub fn add(&self, other: &EBasisPoly) -> Result<EBasisPoly> {
        self.check(other)?;
        Ok(EBasisPoly { n: self.n, poly: self.poly.add(&other.poly) })
    }

    pub fn sub(&self, other: &EBasisPoly) -> Result<EBasisPoly> {
        self.check(other)?;
        Ok(EBasisPoly { n: self.n, poly: self.poly.sub(&other.poly) })
    }

    pub fn mul(&self, other: &EBasisPoly) -> Result<EBasisPoly> {
        self.check(other)?;
        Ok(EBasisPoly { n: self.n, poly: self.poly.mul(&other.poly) })
    }

    pub fn scale(&self, c: &Elem) -> EBasisPoly {
        EBasisPoly { n: self.n, poly: self.poly.scale(c) }
    }

    pub fn neg(&self) -> EBasisPoly {
        EBasisPoly { n: self.n, poly: self.poly.neg() }
    }
}

impl fmt::Display for EBasisPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

impl fmt::Debug for EBasisPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EBasisPoly(n={}, {})", self.n, self.poly)
    }
}

/// Write a polynomial in `x, t1..tn` that is symmetric in `t` and free of
/// `x` as a polynomial in `s1..sn`.
///
/// Uses the leading-term algorithm under lex order `t1 > .. > tn`.
pub fn ebasis_reduce(p: &MultiPoly) -> Result<EBasisPoly> {
    let n = p.nvars().saturating_sub(1);
    if p.vars() != &sym_vars(n)[..] {
        return Err(Error::ArityMismatch { expected: n + 1, got: p.nvars() });
    }
    check_arity(n)?;
    check_degree(p.total_degree().unwrap_or(0))?;
    if p.degree_in(0) > 0 || !is_symmetric(p) {
        return Err(Error::NotSymmetric);
    }
    let d = p.domain();
    let e = elementary_table(d, &p.vars_arc(), n);
    let mut rest = p.clone();
    let mut out = EBasisPoly::zero(d, n);
    while let Some((lead, c)) = rest.leading_lex().map(|(e, c)| (e.clone(), c.clone())) {
        let a = &lead[1..];
        if a.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric);
        }
        let mut expo = vec![0u32; n];
        let mut term = MultiPoly::constant(d, p.vars_arc(), c.clone());
        for k in 0..n {
            let next = if k + 1 < n { a[k + 1] } else { 0 };
            expo[k] = a[k] - next;
            term = term.mul(&e[k + 1].pow(expo[k]));
        }
        rest = rest.sub(&term);
        out.poly = out.poly.add(&MultiPoly::monomial(d, ebasis_vars(n), expo, c));
    }
    Ok(out)
}

/// Substitute `s_i -> s_i(t)`.
pub fn ebasis_expand(q: &EBasisPoly) -> Result<MultiPoly> {
    check_arity(q.n)?;
    let vars = sym_vars(q.n);
    let e = elementary_table(q.domain(), &vars, q.n);
    let mut out = MultiPoly::zero(q.domain(), vars.clone());
    for (expo, c) in q.poly.terms() {
        let deg: usize = expo.iter().enumerate().map(|(i, &k)| (i + 1) * k as usize).sum();
        check_degree(deg)?;
        let mut term = MultiPoly::constant(q.domain(), vars.clone(), c.clone());
        for (i, &k) in expo.iter().enumerate() {
            term = term.mul(&e[i + 1].pow(k));
        }
        out = out.add(&term);
    }
    Ok(out)
}

/// Substitute `s_i -> u_i`; the result lives in the domain of `u`.
pub fn ebasis_eval(q: &EBasisPoly, u: &[Elem]) -> Result<Elem> {
    if u.len() != q.n {
        return Err(Error::ArityMismatch { expected: q.n, got: u.len() });
    }
    let target = u[0].domain();
    if let Some(bad) = u.iter().find(|c| !c.domain().same(target)) {
        return Err(Error::DomainMismatch(bad.domain().to_string(), target.to_string()));
    }
    if !target.can_embed(q.domain()) {
        return Err(Error::DomainMismatch(q.domain().to_string(), target.to_string()));
    }
    Ok(q.poly.eval(u, target))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qq() -> Domain {
        Domain::rationals()
    }

    fn t(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(&qq(), sym_vars(n), i)
    }

    #[test]
    fn elementary_examples() {
        let q = qq();
        assert_eq!(elementary_symmetric(&q, 2, 1).unwrap(), t(2, 1).add(&t(2, 2)));
        assert_eq!(elementary_symmetric(&q, 2, 2).unwrap(), t(2, 1).mul(&t(2, 2)));
        let e32 = t(3, 1).mul(&t(3, 2)).add(&t(3, 1).mul(&t(3, 3))).add(&t(3, 2).mul(&t(3, 3)));
        assert_eq!(elementary_symmetric(&q, 3, 2).unwrap(), e32);
        assert!(elementary_symmetric(&q, 3, 0).unwrap().is_one());
        assert_eq!(
            elementary_symmetric(&q, 2, 3),
            Err(Error::IndexOutOfRange { index: 3, max: 2 })
        );
        assert!(matches!(elementary_symmetric(&q, 7, 1), Err(Error::ResourceCap(_))));
    }

    #[test]
    fn delta_examples() {
        let q = qq();
        let x = t(2, 0);
        let d = delta_poly(&UniPoly::x(&q), 2).unwrap();
        assert_eq!(d, x.mul(&x).sub(&t(2, 1).add(&t(2, 2)).mul(&x)).add(&t(2, 1).mul(&t(2, 2))));
        let x1 = t(1, 0);
        let d = delta_poly(&UniPoly::from_ints(&q, &[0, 0, 1]), 1).unwrap();
        assert_eq!(d, x1.mul(&x1).sub(&t(1, 1).mul(&t(1, 1))));
        assert_eq!(delta_poly(&UniPoly::from_ints(&q, &[1, 1]), 2).unwrap(), delta_poly(&UniPoly::x(&q), 2).unwrap());
    }

    #[test]
    fn cofactor_examples() {
        let q = qq();
        let one = MultiPoly::one(&q, sym_vars(1));
        assert_eq!(delta_cofactor(&UniPoly::from_ints(&q, &[0, 0, 1]), 1).unwrap(), t(1, 0).add(&t(1, 1)));
        assert!(delta_cofactor(&UniPoly::x(&q), 3).unwrap().is_one());
        assert_eq!(
            delta_cofactor(&UniPoly::from_ints(&q, &[0, 1, 1]), 1).unwrap(),
            t(1, 0).add(&t(1, 1)).add(&one)
        );
    }

    #[test]
    fn symmetric_coeff_examples() {
        let q = qq();
        assert_eq!(symmetric_coeff(&UniPoly::x(&q), 2, 1).unwrap(), elementary_symmetric(&q, 2, 1).unwrap());
        let one = MultiPoly::one(&q, sym_vars(2));
        let want = t(2, 1).mul(&t(2, 2)).add(&t(2, 1)).add(&t(2, 2)).add(&one);
        assert_eq!(symmetric_coeff(&UniPoly::from_ints(&q, &[1, 1]), 2, 2).unwrap(), want);
        let c = symmetric_coeff(&UniPoly::from_ints(&q, &[5]), 2, 1).unwrap();
        assert_eq!(c.constant_value(), Some(q.from_i64(10)));
        assert!(matches!(symmetric_coeff(&UniPoly::x(&q), 2, 0), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn reduce_examples() {
        let q = qq();
        let p = t(2, 1).pow(2).add(&t(2, 2).pow(2));
        let r = ebasis_reduce(&p).unwrap();
        assert_eq!(r.to_string(), "s1^2 - 2*s2");
        assert_eq!(ebasis_expand(&r).unwrap(), p);
        assert_eq!(ebasis_reduce(&t(2, 1).mul(&t(2, 2))).unwrap().to_string(), "s2");
        let one = MultiPoly::one(&q, sym_vars(2));
        let p = t(2, 1).add(&one).mul(&t(2, 2).add(&one));
        assert_eq!(ebasis_reduce(&p).unwrap().to_string(), "s1 + s2 + 1");
        assert_eq!(ebasis_reduce(&t(2, 1).sub(&t(2, 2))), Err(Error::NotSymmetric));
        assert_eq!(ebasis_reduce(&t(2, 0)), Err(Error::NotSymmetric));
    }

    #[test]
    fn eval_examples() {
        let q = qq();
        let r = ebasis_reduce(&t(2, 1).pow(2).add(&t(2, 2).pow(2))).unwrap();
        assert_eq!(ebasis_eval(&r, &[q.from_i64(3), q.from_i64(2)]).unwrap(), q.from_i64(5));
        assert_eq!(ebasis_expand(&EBasisPoly::gen(&q, 2, 2)).unwrap(), t(2, 1).mul(&t(2, 2)));
        assert!(ebasis_eval(&EBasisPoly::one(&q, 3), &[q.from_i64(7), q.zero(), q.one()]).unwrap().is_one());
        assert!(matches!(ebasis_eval(&r, &[q.one()]), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn symmetry_checks() {
        assert!(is_symmetric(&t(2, 1).add(&t(2, 2))));
        assert!(!is_symmetric(&t(2, 1).sub(&t(2, 2))));
        let g = UniPoly::from_ints(&qq(), &[2, -1, 0, 3]);
        assert!(is_symmetric(&delta_poly(&g, 3).unwrap()));
    }
}
