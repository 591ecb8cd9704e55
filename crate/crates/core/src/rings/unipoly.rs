use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;

use super::elem::{format_sum, monomial};
use super::{Domain, Elem};
use crate::error::{Error, Result};

/// Dense univariate polynomial in `x`; `coeffs[i]` is the coefficient of
/// `x^i`, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    domain: Domain,
    coeffs: Vec<Elem>,
}

impl UniPoly {
    /// Build from coefficients (constant term first). Coefficients from the
    /// base field are mapped into `domain`.
    pub fn new(domain: &Domain, coeffs: Vec<Elem>) -> UniPoly {
        let coeffs = coeffs.into_iter().map(|c| domain.embed(&c)).collect();
        let mut p = UniPoly { domain: domain.clone(), coeffs };
        p.trim();
        p
    }

    pub fn from_ints(domain: &Domain, coeffs: &[i64]) -> UniPoly {
        UniPoly::new(domain, coeffs.iter().map(|&c| domain.from_i64(c)).collect())
    }

    pub fn zero(domain: &Domain) -> UniPoly {
        UniPoly { domain: domain.clone(), coeffs: Vec::new() }
    }

    pub fn one(domain: &Domain) -> UniPoly {
        UniPoly::constant(domain, domain.one())
    }

    pub fn x(domain: &Domain) -> UniPoly {
        UniPoly::monomial(domain, domain.one(), 1)
    }

    pub fn constant(domain: &Domain, c: Elem) -> UniPoly {
        UniPoly::new(domain, vec![c])
    }

    pub fn monomial(domain: &Domain, c: Elem, k: usize) -> UniPoly {
        let mut coeffs = vec![domain.zero(); k];
        coeffs.push(c);
        UniPoly::new(domain, coeffs)
    }

    /// `x - a`.
    pub fn linear(a: &Elem) -> UniPoly {
        let d = a.domain();
        UniPoly::new(d, vec![-a, d.one()])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.domain.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counted as 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> Option<&Elem> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_some_and(|c| c.is_one())
    }

    /// Whether the polynomial is `c * x^k`.
    pub fn is_monomial(&self) -> bool {
        !self.is_zero() && self.coeffs[..self.coeffs.len() - 1].iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: &Elem) -> UniPoly {
        UniPoly::new(&self.domain, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn shift(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.domain.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { domain: self.domain.clone(), coeffs }
    }

    pub fn pow(&self, k: usize) -> UniPoly {
        let mut acc = UniPoly::one(&self.domain);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horner evaluation at a point of the same domain.
    pub fn eval(&self, a: &Elem) -> Elem {
        self.eval_in(a)
    }

    /// Horner evaluation at a point of any domain the coefficients embed in.
    pub fn eval_in(&self, a: &Elem) -> Elem {
        let target = a.domain();
        let mut acc = target.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * a) + &target.embed(c);
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &self.domain.from_u64(i as u64))
            .collect();
        UniPoly::new(&self.domain, coeffs)
    }

    /// Long division by a polynomial whose leading coefficient is a unit.
    pub fn div_rem(&self, b: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        self.check_domain(b)?;
        let lb = b.lc().ok_or(Error::DivisionByZero)?;
        let inv = lb.inv().map_err(|_| Error::NotAUnit(lb.to_string()))?;
        let db = b.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= db {
            return Ok((UniPoly::zero(&self.domain), self.clone()));
        }
        let mut q = vec![self.domain.zero(); r.len() - db];
        for k in (db..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let c = &r[k] * &inv;
            for (j, bj) in b.coeffs.iter().enumerate() {
                r[k - db + j] = &r[k - db + j] - &(&c * bj);
            }
            q[k - db] = c;
        }
        r.truncate(db);
        Ok((UniPoly::new(&self.domain, q), UniPoly::new(&self.domain, r)))
    }

    pub fn rem(&self, b: &UniPoly) -> Result<UniPoly> {
        Ok(self.div_rem(b)?.1)
    }

    /// Quotient `q` with `self = q * b` exactly.
    ///
    /// Over polynomial rings the leading coefficient of `b` need not be a
    /// unit; each quotient coefficient must then exist in the ring.
    pub fn exact_div(&self, b: &UniPoly) -> Result<UniPoly> {
        self.check_domain(b)?;
        let lb = b.lc().ok_or(Error::DivisionByZero)?;
        if lb.is_unit() {
            let (q, r) = self.div_rem(b)?;
            return if r.is_zero() { Ok(q) } else { Err(Error::InexactDivision) };
        }
        let db = b.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.is_empty() {
            return Ok(UniPoly::zero(&self.domain));
        }
        if r.len() <= db {
            return Err(Error::InexactDivision);
        }
        let mut q = vec![self.domain.zero(); r.len() - db];
        for k in (db..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let c = r[k].exact_quotient(lb).ok_or(Error::InexactDivision)?;
            for (j, bj) in b.coeffs.iter().enumerate() {
                r[k - db + j] = &r[k - db + j] - &(&c * bj);
            }
            q[k - db] = c;
        }
        if r[..db].iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(UniPoly::new(&self.domain, q))
    }

    /// Divide by the leading coefficient (which must be a unit).
    pub fn monic(&self) -> Result<UniPoly> {
        match self.lc() {
            None => Ok(self.clone()),
            Some(c) if c.is_one() => Ok(self.clone()),
            Some(c) => Ok(self.scale(&c.inv().map_err(|_| Error::NotAUnit(c.to_string()))?)),
        }
    }

    fn require_field(&self, operation: &'static str) -> Result<()> {
        if self.domain.is_field() {
            Ok(())
        } else {
            Err(Error::UnsupportedDomain { domain: self.domain.to_string(), operation })
        }
    }

    fn check_domain(&self, other: &UniPoly) -> Result<()> {
        if self.domain.same(&other.domain) {
            Ok(())
        } else {
            Err(Error::DomainMismatch(self.domain.to_string(), other.domain.to_string()))
        }
    }

    /// Monic gcd over a field; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly> {
        self.require_field("poly_gcd")?;
        self.check_domain(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd over a field: `(g, s, t)` with `s*self + t*other = g`
    /// and `g` monic (or zero).
    pub fn xgcd(&self, other: &UniPoly) -> Result<(UniPoly, UniPoly, UniPoly)> {
        self.require_field("poly_xgcd")?;
        self.check_domain(other)?;
        let d = &self.domain;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (UniPoly::one(d), UniPoly::zero(d));
        let (mut t0, mut t1) = (UniPoly::zero(d), UniPoly::one(d));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.lc().cloned() {
            None => Ok((r0, s0, t0)),
            Some(c) => {
                let inv = c.inv()?;
                Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
            }
        }
    }

    /// `self^e mod m` for a monic (or unit-led) modulus.
    pub fn powmod(&self, e: &BigUint, m: &UniPoly) -> Result<UniPoly> {
        let base = self.rem(m)?;
        let mut acc = UniPoly::one(&self.domain).rem(m)?;
        for i in (0..e.bits()).rev() {
            acc = (&acc * &acc).rem(m)?;
            if e.bit(i) {
                acc = (&acc * &base).rem(m)?;
            }
        }
        Ok(acc)
    }

    /// Rebuild over `target` by mapping every coefficient through `f`.
    pub fn map_coeffs(&self, target: &Domain, f: impl Fn(&Elem) -> Elem) -> UniPoly {
        UniPoly::new(target, self.coeffs.iter().map(f).collect())
    }

    /// Coefficients mapped into a larger domain via [`Domain::embed`].
    pub fn embed_into(&self, target: &Domain) -> UniPoly {
        self.map_coeffs(target, |c| target.embed(c))
    }

    /// Coefficients pulled back to the base field, if they all lie there.
    pub fn to_base_field(&self) -> Option<UniPoly> {
        let base = self.domain.base_field();
        let coeffs: Option<Vec<Elem>> = self.coeffs.iter().map(|c| c.to_base_field()).collect();
        Some(UniPoly::new(&base, coeffs?))
    }

    /// Multiplicity of `x` as a factor (`0` for the zero polynomial).
    pub fn x_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count().min(self.deg())
    }
}

impl PartialOrd for UniPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then coefficients compared from the constant term up.
impl Ord for UniPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .map(|(i, c)| (c.clone(), monomial("x", i)));
        f.write_str(&format_sum(terms))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.domain)
    }
}

fn zip_with(a: &UniPoly, b: &UniPoly, f: impl Fn(&Elem, &Elem) -> Elem) -> UniPoly {
    assert!(a.domain.same(&b.domain), "polynomials over {} and {}", a.domain, b.domain);
    let n = a.coeffs.len().max(b.coeffs.len());
    let coeffs = (0..n).map(|i| f(&a.coeff(i), &b.coeff(i))).collect();
    UniPoly::new(&a.domain, coeffs)
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        zip_with(self, rhs, |a, b| a - b)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        assert!(self.domain.same(&rhs.domain), "polynomials over {} and {}", self.domain, rhs.domain);
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(&self.domain);
        }
        let mut out = vec![self.domain.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::new(&self.domain, out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(&self.domain, self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: UniPoly) -> UniPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn qq() -> Domain {
        Domain::rationals()
    }

    #[test]
    fn gcd_over_q() {
        let a = UniPoly::from_ints(&qq(), &[2, -3, 1]);
        let b = UniPoly::from_ints(&qq(), &[-1, 0, 1]);
        assert_eq!(a.gcd(&b).unwrap(), UniPoly::from_ints(&qq(), &[-1, 1]));
        let f = UniPoly::from_ints(&qq(), &[4, 0, 2]);
        assert_eq!(f.gcd(&UniPoly::zero(&qq())).unwrap(), UniPoly::from_ints(&qq(), &[2, 0, 1]));
        assert!(UniPoly::zero(&qq()).gcd(&UniPoly::zero(&qq())).unwrap().is_zero());
    }

    #[test]
    fn gcd_over_gf2() {
        let f2 = Domain::prime_field(2).unwrap();
        let a = UniPoly::from_ints(&f2, &[1, 0, 1]);
        assert_eq!(a.gcd(&a).unwrap(), a);
        let b = UniPoly::from_ints(&f2, &[1, 1]);
        assert_eq!(a.gcd(&b).unwrap(), b);
        assert_eq!(&b * &b, a);
    }

    #[test]
    fn gcd_needs_a_field() {
        let d: Domain = "QQ[u]".parse().unwrap();
        let a = UniPoly::x(&d);
        assert!(matches!(a.gcd(&a), Err(Error::UnsupportedDomain { .. })));
    }

    #[test]
    fn exact_division() {
        let a = UniPoly::from_ints(&qq(), &[-1, 0, 1]);
        let b = UniPoly::from_ints(&qq(), &[-1, 1]);
        assert_eq!(a.exact_div(&b).unwrap(), UniPoly::from_ints(&qq(), &[1, 1]));
        let c = UniPoly::from_ints(&qq(), &[1, 0, 1]);
        assert_eq!(c.exact_div(&b), Err(Error::InexactDivision));
        assert_eq!(c.exact_div(&UniPoly::zero(&qq())), Err(Error::DivisionByZero));
    }

    #[test]
    fn exact_division_over_polynomial_ring() {
        let d: Domain = "QQ[u]".parse().unwrap();
        let u = d.var("u").unwrap();
        // (u x + 1)(x - u) / (u x + 1)
        let a = UniPoly::new(&d, vec![d.one(), u.clone()]);
        let b = UniPoly::linear(&u);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        assert_eq!(b.exact_div(&a), Err(Error::InexactDivision));
    }

    #[test]
    fn xgcd_witness() {
        let a = UniPoly::from_ints(&qq(), &[2, -3, 1]);
        let b = UniPoly::from_ints(&qq(), &[-1, 0, 1]);
        let (g, s, t) = a.xgcd(&b).unwrap();
        assert_eq!(&(&s * &a) + &(&t * &b), g);
        assert_eq!(g, UniPoly::from_ints(&qq(), &[-1, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(UniPoly::from_ints(&qq(), &[2, -3, 1]).to_string(), "x^2 - 3*x + 2");
        assert_eq!(UniPoly::from_ints(&qq(), &[0, -1]).to_string(), "-x");
        assert_eq!(UniPoly::zero(&qq()).to_string(), "0");
        let d: Domain = "QQ(u)".parse().unwrap();
        let u = d.var("u").unwrap();
        let f = UniPoly::new(&d, vec![-&u, &u + &d.one()]);
        assert_eq!(f.to_string(), "(u + 1)*x - u");
        let g = UniPoly::new(&d, vec![-(&u + &d.one()), d.zero(), d.one()]);
        assert_eq!(g.to_string(), "x^2 - (u + 1)");
    }
}
