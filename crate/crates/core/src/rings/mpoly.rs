use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::elem::format_sum;
use super::{Domain, Elem, Vars};
use crate::error::{Error, Result};

/// Exponent vector, one entry per variable.
pub type Exponent = Vec<u32>;

/// Sparse multivariate polynomial over a [`Domain`].
///
/// Terms are keyed by exponent vector; the `BTreeMap` order on exponent
/// vectors is the lexicographic term order with the first variable largest,
/// so the leading term is the last entry. No zero coefficients are stored.
#[derive(Clone)]
pub struct MultiPoly {
    domain: Domain,
    vars: Vars,
    terms: BTreeMap<Exponent, Elem>,
}

impl MultiPoly {
    pub fn zero(domain: &Domain, vars: Vars) -> MultiPoly {
        MultiPoly { domain: domain.clone(), vars, terms: BTreeMap::new() }
    }

    pub fn one(domain: &Domain, vars: Vars) -> MultiPoly {
        MultiPoly::constant(domain, vars, domain.one())
    }

    pub fn constant(domain: &Domain, vars: Vars, c: Elem) -> MultiPoly {
        let n = vars.len();
        MultiPoly::monomial(domain, vars, vec![0; n], c)
    }

    pub fn var(domain: &Domain, vars: Vars, i: usize) -> MultiPoly {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        MultiPoly::monomial(domain, vars, e, domain.one())
    }

    pub fn monomial(domain: &Domain, vars: Vars, exp: Exponent, c: Elem) -> MultiPoly {
        assert_eq!(exp.len(), vars.len(), "exponent length");
        let mut p = MultiPoly::zero(domain, vars);
        if !c.is_zero() {
            p.terms.insert(exp, domain.embed(&c));
        }
        p
    }

    pub fn from_terms(
        domain: &Domain,
        vars: Vars,
        terms: impl IntoIterator<Item = (Exponent, Elem)>,
    ) -> MultiPoly {
        let mut p = MultiPoly::zero(domain, vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Variables named by `names`, in that order.
    pub fn vars_from<S: AsRef<str>>(names: &[S]) -> Vars {
        Arc::from(names.iter().map(|s| s.as_ref().to_string()).collect::<Vec<_>>())
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn vars_arc(&self) -> Vars {
        self.vars.clone()
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Terms in ascending lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &Elem)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&k| k == 0))
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Elem> {
        match self.terms.len() {
            0 => Some(self.domain.zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&k| k == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn coeff(&self, exp: &[u32]) -> Elem {
        self.terms.get(exp).cloned().unwrap_or_else(|| self.domain.zero())
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| e.iter().map(|&k| k as usize).sum()).max()
    }

    pub fn degree_in(&self, var: usize) -> usize {
        self.terms.keys().map(|e| e[var] as usize).max().unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, exp: Exponent, c: Elem) {
        debug_assert_eq!(exp.len(), self.vars.len());
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(existing) => {
                let s = &*existing + &c;
                if s.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    fn check_compatible(&self, other: &MultiPoly) {
        assert!(self.domain.same(&other.domain), "coefficient domains differ");
        assert_eq!(self.vars, other.vars, "variable lists differ");
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.check_compatible(other);
        let (mut big, small) = if self.terms.len() >= other.terms.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (e, c) in &small.terms {
            big.add_term(e.clone(), c.clone());
        }
        big
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            domain: self.domain.clone(),
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.check_compatible(other);
        let mut out = MultiPoly::zero(&self.domain, self.vars.clone());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Elem) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.domain, self.vars.clone());
        if c.is_zero() {
            return out;
        }
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(&self.domain, self.vars.clone());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Leading term in lexicographic order.
    pub fn leading_lex(&self) -> Option<(&Exponent, &Elem)> {
        self.terms.iter().next_back()
    }

    /// Leading coefficient in graded-lex order (total degree first, ties by
    /// lexicographic order).
    pub fn leading_grlex_coeff(&self) -> Option<Elem> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| grlex_cmp(a, b))
            .map(|(_, c)| c.clone())
    }

    /// Coefficient of the first printed term.
    pub(crate) fn leading_printed_coeff(&self) -> Option<&Elem> {
        self.terms.values().next_back()
    }

    /// Division by `divisor` whose lexicographic leading coefficient is a
    /// unit. Returns `(quotient, remainder)` with `self = q * divisor + r`
    /// and no term of `r` divisible by the leading monomial of `divisor`.
    pub fn div_rem(&self, divisor: &MultiPoly) -> Result<(MultiPoly, MultiPoly)> {
        self.check_compatible(divisor);
        let (lead_exp, lead_c) = divisor.leading_lex().ok_or(Error::DivisionByZero)?;
        let lead_exp = lead_exp.clone();
        let lead_inv = lead_c.inv()?;
        let mut q = MultiPoly::zero(&self.domain, self.vars.clone());
        let mut r = MultiPoly::zero(&self.domain, self.vars.clone());
        let mut p = self.clone();
        while let Some((e, c)) = p.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            if e.iter().zip(&lead_exp).all(|(a, b)| a >= b) {
                let shift: Exponent = e.iter().zip(&lead_exp).map(|(a, b)| a - b).collect();
                let t = &c * &lead_inv;
                for (de, dc) in &divisor.terms {
                    let ne: Exponent = de.iter().zip(&shift).map(|(a, b)| a + b).collect();
                    p.add_term(ne, -(dc * &t));
                }
                q.add_term(shift, t);
            } else {
                p.terms.remove(&e);
                r.add_term(e, c);
            }
        }
        Ok((q, r))
    }

    /// Exact quotient; fails with `InexactDivision` on a nonzero remainder.
    ///
    /// If the divisor's leading coefficient is not a unit the quotient is
    /// still found whenever each step's coefficient quotient exists.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Result<MultiPoly> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if divisor.leading_lex().unwrap().1.is_unit() {
            let (q, r) = self.div_rem(divisor)?;
            return if r.is_zero() { Ok(q) } else { Err(Error::InexactDivision) };
        }
        self.check_compatible(divisor);
        let (lead_exp, lead_c) = divisor.leading_lex().unwrap();
        let (lead_exp, lead_c) = (lead_exp.clone(), lead_c.clone());
        let mut q = MultiPoly::zero(&self.domain, self.vars.clone());
        let mut p = self.clone();
        while let Some((e, c)) = p.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            if !e.iter().zip(&lead_exp).all(|(a, b)| a >= b) {
                return Err(Error::InexactDivision);
            }
            let t = c.exact_quotient(&lead_c).ok_or(Error::InexactDivision)?;
            let shift: Exponent = e.iter().zip(&lead_exp).map(|(a, b)| a - b).collect();
            for (de, dc) in &divisor.terms {
                let ne: Exponent = de.iter().zip(&shift).map(|(a, b)| a + b).collect();
                p.add_term(ne, -(dc * &t));
            }
            q.add_term(shift, t);
        }
        Ok(q)
    }

    /// Evaluate at `point` (one element per variable) in `target`, mapping
    /// coefficients through [`Domain::embed`].
    pub fn eval(&self, point: &[Elem], target: &Domain) -> Elem {
        assert_eq!(point.len(), self.vars.len(), "point arity");
        let mut powers: Vec<Vec<Elem>> = point.iter().map(|p| vec![target.one(), p.clone()]).collect();
        let mut acc = target.zero();
        for (e, c) in &self.terms {
            let mut t = target.embed(c);
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let k = k as usize;
                while powers[i].len() <= k {
                    let next = &powers[i][powers[i].len() - 1] * &point[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][k];
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Apply `perm` to variable positions: the exponent of variable `i`
    /// moves to position `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> MultiPoly {
        assert_eq!(perm.len(), self.vars.len());
        let mut out = MultiPoly::zero(&self.domain, self.vars.clone());
        for (e, c) in &self.terms {
            let mut ne = vec![0; e.len()];
            for (i, &k) in e.iter().enumerate() {
                ne[perm[i]] = k;
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Coefficient of `v^d` where `v` is variable `var`, as a polynomial in
    /// the same ring (with `v` absent).
    pub(crate) fn coeff_in(&self, var: usize, d: u32) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.domain, self.vars.clone());
        for (e, c) in &self.terms {
            if e[var] == d {
                let mut ne = e.clone();
                ne[var] = 0;
                out.terms.insert(ne, c.clone());
            }
        }
        out
    }

    pub(crate) fn mul_var_pow(&self, var: usize, k: u32) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.domain, self.vars.clone());
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne[var] += k;
            out.terms.insert(ne, c.clone());
        }
        out
    }

    /// Rebuild over another coefficient domain through `f`.
    pub fn map_coeffs(&self, target: &Domain, f: impl Fn(&Elem) -> Elem) -> MultiPoly {
        let mut out = MultiPoly::zero(target, self.vars.clone());
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }
}

pub(crate) fn grlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&k| k as u64).sum();
    let db: u64 = b.iter().map(|&k| k as u64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl PartialOrd for MultiPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MultiPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms.cmp(&other.terms)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().rev().map(|(e, c)| {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| super::elem::monomial(&self.vars[i], k as usize))
                .collect();
            (c.clone(), mono.join("*"))
        });
        f.write_str(&format_sum(terms))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> (Domain, Vars) {
        (Domain::rationals(), MultiPoly::vars_from(&["a", "b"]))
    }

    #[test]
    fn display_and_arith() {
        let (d, v) = ring();
        let a = MultiPoly::var(&d, v.clone(), 0);
        let b = MultiPoly::var(&d, v.clone(), 1);
        let p = a.add(&b).pow(2);
        assert_eq!(p.to_string(), "a^2 + 2*a*b + b^2");
        assert_eq!(a.sub(&b).to_string(), "a - b");
        assert_eq!(b.sub(&a).to_string(), "-a + b");
    }

    #[test]
    fn exact_division() {
        let (d, v) = ring();
        let a = MultiPoly::var(&d, v.clone(), 0);
        let b = MultiPoly::var(&d, v.clone(), 1);
        let num = a.pow(3).sub(&b.pow(3));
        let q = num.div_exact(&a.sub(&b)).unwrap();
        assert_eq!(q, a.pow(2).add(&a.mul(&b)).add(&b.pow(2)));
        assert_eq!(num.div_exact(&a.add(&b)), Err(Error::InexactDivision));
    }

    #[test]
    fn grlex_leading_coefficient() {
        let (d, v) = ring();
        let a = MultiPoly::var(&d, v.clone(), 0);
        let b = MultiPoly::var(&d, v.clone(), 1);
        // lex leads with a (coefficient 3), grlex with b^2 (coefficient -2)
        let p = a.scale(&d.from_i64(3)).add(&b.pow(2).scale(&d.from_i64(-2)));
        assert_eq!(p.leading_lex().unwrap().1, &d.from_i64(3));
        assert_eq!(p.leading_grlex_coeff().unwrap(), d.from_i64(-2));
    }
}
