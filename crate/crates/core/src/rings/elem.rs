use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{inv_mod, multi_gcd, Domain, DomainKind, MultiPoly, EXT_GENERATOR};
use crate::error::{Error, Result};

/// Canonical payload of an element. Two elements of one domain are equal
/// exactly when their payloads are.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) enum Value {
    Rat(BigRational),
    Mod(u64),
    Ext(Vec<u64>),
    /// Reduced numerator/denominator; the denominator has graded-lex
    /// leading coefficient 1.
    Frac(MultiPoly, MultiPoly),
    Poly(MultiPoly),
}

/// An element of a [`Domain`].
#[derive(Clone)]
pub struct Elem {
    domain: Domain,
    value: Value,
}

impl Elem {
    pub(crate) fn from_parts(domain: Domain, value: Value) -> Elem {
        Elem { domain, value }
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub(crate) fn value(&self) -> &Value {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Rat(q) => q.is_zero(),
            Value::Mod(m) => *m == 0,
            Value::Ext(v) => v.is_empty(),
            Value::Frac(n, _) => n.is_zero(),
            Value::Poly(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Rat(q) => q.is_one(),
            Value::Mod(m) => *m == 1,
            Value::Ext(v) => v.len() == 1 && v[0] == 1,
            Value::Frac(n, d) => d.is_one() && n.is_one(),
            Value::Poly(p) => p.is_one(),
        }
    }

    /// Units: nonzero elements of fields, nonzero constants of polynomial rings.
    pub fn is_unit(&self) -> bool {
        match &self.value {
            Value::Poly(p) => p.constant_value().is_some_and(|c| !c.is_zero()),
            _ => !self.is_zero(),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.value {
            Value::Rat(q) => Some(q),
            _ => None,
        }
    }

    pub fn as_residue(&self) -> Option<u64> {
        match &self.value {
            Value::Mod(m) => Some(*m),
            _ => None,
        }
    }

    /// Coefficients in `1, y, y^2, ...` of an extension-field element.
    pub fn ext_coeffs(&self) -> Option<&[u64]> {
        match &self.value {
            Value::Ext(v) => Some(v),
            _ => None,
        }
    }

    /// Numerator and denominator of a rational-function-field element.
    pub fn as_fraction(&self) -> Option<(&MultiPoly, &MultiPoly)> {
        match &self.value {
            Value::Frac(n, d) => Some((n, d)),
            _ => None,
        }
    }

    pub fn as_multipoly(&self) -> Option<&MultiPoly> {
        match &self.value {
            Value::Poly(p) => Some(p),
            _ => None,
        }
    }

    /// Constant of the base field when this element lies in its image.
    pub fn to_base_field(&self) -> Option<Elem> {
        let base = self.domain.base_field();
        match &self.value {
            Value::Rat(_) | Value::Mod(_) => Some(self.clone()),
            Value::Ext(v) => match v.len() {
                0 => Some(base.zero()),
                1 => Some(base.from_u64(v[0])),
                _ => None,
            },
            Value::Frac(n, d) if d.is_one() => n.constant_value(),
            Value::Frac(..) => None,
            Value::Poly(p) => p.constant_value(),
        }
    }

    fn check_same(&self, other: &Elem) -> Result<()> {
        if self.domain.same(&other.domain) {
            Ok(())
        } else {
            Err(Error::DomainMismatch(self.domain.to_string(), other.domain.to_string()))
        }
    }

    pub fn try_add(&self, other: &Elem) -> Result<Elem> {
        self.check_same(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &Elem) -> Result<Elem> {
        self.check_same(other)?;
        Ok(self.add_unchecked(&other.neg_ref()))
    }

    pub fn try_mul(&self, other: &Elem) -> Result<Elem> {
        self.check_same(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// Division by a unit of the domain.
    pub fn checked_div(&self, other: &Elem) -> Result<Elem> {
        self.check_same(other)?;
        let inv = other.inv()?;
        Ok(self.mul_unchecked(&inv))
    }

    pub fn inv(&self) -> Result<Elem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let value = match (&self.value, self.domain.kind()) {
            (Value::Rat(q), _) => Value::Rat(q.recip()),
            (Value::Mod(m), DomainKind::PrimeField(p)) => Value::Mod(inv_mod(*m, *p).unwrap()),
            (Value::Ext(v), DomainKind::ExtField(e)) => {
                Value::Ext(e.inv(v).ok_or_else(|| Error::NotAUnit(self.to_string()))?)
            }
            (Value::Frac(n, d), _) => frac_normalize(d.clone(), n.clone()),
            (Value::Poly(p), _) => {
                let c = p
                    .constant_value()
                    .ok_or_else(|| Error::NotAUnit(self.to_string()))?;
                Value::Poly(MultiPoly::constant(p.domain(), p.vars_arc(), c.inv()?))
            }
            _ => unreachable!("payload does not match domain"),
        };
        Ok(Elem::from_parts(self.domain.clone(), value))
    }

    /// `self / other` when the quotient exists in the domain.
    pub fn exact_quotient(&self, other: &Elem) -> Option<Elem> {
        if other.is_zero() {
            return None;
        }
        match (&self.value, &other.value) {
            (Value::Poly(a), Value::Poly(b)) => {
                let q = a.div_exact(b).ok()?;
                Some(Elem::from_parts(self.domain.clone(), Value::Poly(q)))
            }
            _ => self.checked_div(other).ok(),
        }
    }

    pub fn pow(&self, e: u64) -> Elem {
        let mut acc = self.domain.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn pow_big(&self, e: &BigUint) -> Elem {
        let mut acc = self.domain.one();
        for i in (0..e.bits()).rev() {
            acc = &acc * &acc;
            if e.bit(i) {
                acc = &acc * self;
            }
        }
        acc
    }

    /// Frobenius `a -> a^p` on finite fields (identity on prime fields).
    pub fn frobenius(&self) -> Elem {
        match (&self.value, self.domain.kind()) {
            (Value::Ext(v), DomainKind::ExtField(e)) => {
                Elem::from_parts(self.domain.clone(), Value::Ext(e.frobenius(v)))
            }
            (Value::Mod(_), _) => self.clone(),
            _ => panic!("frobenius on non-finite domain {}", self.domain),
        }
    }

    /// Whether the printed form leads with a minus sign.
    pub(crate) fn is_negative_lead(&self) -> bool {
        match &self.value {
            Value::Rat(q) => q.is_negative(),
            Value::Frac(n, _) => n.leading_printed_coeff().is_some_and(|c| c.is_negative_lead()),
            Value::Poly(p) => p.leading_printed_coeff().is_some_and(|c| c.is_negative_lead()),
            _ => false,
        }
    }

    fn neg_ref(&self) -> Elem {
        let value = match (&self.value, self.domain.kind()) {
            (Value::Rat(q), _) => Value::Rat(-q),
            (Value::Mod(m), DomainKind::PrimeField(p)) => Value::Mod(if *m == 0 { 0 } else { p - m }),
            (Value::Ext(v), DomainKind::ExtField(e)) => Value::Ext(e.neg(v)),
            (Value::Frac(n, d), _) => Value::Frac(n.neg(), d.clone()),
            (Value::Poly(p), _) => Value::Poly(p.neg()),
            _ => unreachable!("payload does not match domain"),
        };
        Elem::from_parts(self.domain.clone(), value)
    }

    fn add_unchecked(&self, other: &Elem) -> Elem {
        let value = match (&self.value, &other.value, self.domain.kind()) {
            (Value::Rat(a), Value::Rat(b), _) => Value::Rat(a + b),
            (Value::Mod(a), Value::Mod(b), DomainKind::PrimeField(p)) => {
                Value::Mod(((*a as u128 + *b as u128) % *p as u128) as u64)
            }
            (Value::Ext(a), Value::Ext(b), DomainKind::ExtField(e)) => Value::Ext(e.add(a, b)),
            (Value::Frac(n1, d1), Value::Frac(n2, d2), _) => {
                if n1.is_zero() {
                    other.value.clone()
                } else if n2.is_zero() {
                    self.value.clone()
                } else if d1 == d2 {
                    frac_normalize(n1.add(n2), d1.clone())
                } else {
                    frac_add(n1, d1, n2, d2)
                }
            }
            (Value::Poly(a), Value::Poly(b), _) => Value::Poly(a.add(b)),
            _ => unreachable!("payload does not match domain"),
        };
        Elem::from_parts(self.domain.clone(), value)
    }

    fn mul_unchecked(&self, other: &Elem) -> Elem {
        let value = match (&self.value, &other.value, self.domain.kind()) {
            (Value::Rat(a), Value::Rat(b), _) => Value::Rat(a * b),
            (Value::Mod(a), Value::Mod(b), DomainKind::PrimeField(p)) => {
                Value::Mod(super::mul_mod(*a, *b, *p))
            }
            (Value::Ext(a), Value::Ext(b), DomainKind::ExtField(e)) => Value::Ext(e.mul(a, b)),
            (Value::Frac(n1, d1), Value::Frac(n2, d2), _) => {
                if n1.is_zero() || n2.is_zero() {
                    self.domain.zero_value()
                } else if d1.is_one() && d2.is_one() {
                    Value::Frac(n1.mul(n2), d1.clone())
                } else {
                    frac_mul(n1, d1, n2, d2)
                }
            }
            (Value::Poly(a), Value::Poly(b), _) => Value::Poly(a.mul(b)),
            _ => unreachable!("payload does not match domain"),
        };
        Elem::from_parts(self.domain.clone(), value)
    }
}

fn quo(a: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    if g.is_one() {
        a.clone()
    } else {
        a.div_exact(g).expect("gcd divides")
    }
}

/// Sum of two reduced fractions, reducing only against the common part of
/// the denominators.
fn frac_add(n1: &MultiPoly, d1: &MultiPoly, n2: &MultiPoly, d2: &MultiPoly) -> Value {
    let g = multi_gcd(d1, d2);
    let (e1, e2) = (quo(d1, &g), quo(d2, &g));
    let t = n1.mul(&e2).add(&n2.mul(&e1));
    if t.is_zero() {
        return frac_normalize(t, d1.clone());
    }
    if g.is_one() {
        return Value::Frac(t, d1.mul(d2));
    }
    let h = multi_gcd(&t, &g);
    Value::Frac(quo(&t, &h), e1.mul(&quo(d2, &h)))
}

/// Product of two reduced fractions by cross cancellation.
fn frac_mul(n1: &MultiPoly, d1: &MultiPoly, n2: &MultiPoly, d2: &MultiPoly) -> Value {
    let g1 = multi_gcd(n1, d2);
    let g2 = multi_gcd(n2, d1);
    Value::Frac(quo(n1, &g1).mul(&quo(n2, &g2)), quo(d1, &g2).mul(&quo(d2, &g1)))
}

/// Reduce a fraction of multivariate polynomials over a field to canonical
/// form.
pub(crate) fn frac_normalize(num: MultiPoly, den: MultiPoly) -> Value {
    assert!(!den.is_zero(), "zero denominator");
    if num.is_zero() {
        let one = MultiPoly::one(den.domain(), den.vars_arc());
        return Value::Frac(num, one);
    }
    let g = multi_gcd(&num, &den);
    let (mut num, mut den) = if g.is_constant() {
        (num, den)
    } else {
        (
            num.div_exact(&g).expect("gcd divides numerator"),
            den.div_exact(&g).expect("gcd divides denominator"),
        )
    };
    let lc = den.leading_grlex_coeff().expect("nonzero denominator");
    if !lc.is_one() {
        let s = lc.inv().expect("field coefficient");
        num = num.scale(&s);
        den = den.scale(&s);
    }
    Value::Frac(num, den)
}

impl PartialEq for Elem {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.domain.same(&other.domain)
    }
}

impl Eq for Elem {}

impl PartialOrd for Elem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ordering of canonical payloads; meaningful only within one domain.
impl Ord for Elem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value.cmp(&other.value)
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.domain)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Rat(q) => write!(f, "{q}"),
            Value::Mod(m) => write!(f, "{m}"),
            Value::Ext(v) => {
                let base = self.domain.base_field();
                let terms = v
                    .iter()
                    .enumerate()
                    .rev()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| (base.from_u64(c), monomial(EXT_GENERATOR, i)));
                f.write_str(&format_sum(terms))
            }
            Value::Frac(n, d) => {
                let num = n.to_string();
                if d.is_one() {
                    return f.write_str(&num);
                }
                let den = d.to_string();
                let num = if num.contains(' ') { format!("({num})") } else { num };
                let den = if den.contains([' ', '*', '/']) { format!("({den})") } else { den };
                write!(f, "{num}/{den}")
            }
            Value::Poly(p) => write!(f, "{p}"),
        }
    }
}

pub(crate) fn monomial(var: &str, exp: usize) -> String {
    match exp {
        0 => String::new(),
        1 => var.to_string(),
        e => format!("{var}^{e}"),
    }
}

/// Render `sum c_i * m_i` from `(coefficient, monomial)` pairs in display
/// order; an empty monomial marks the constant term.
pub(crate) fn format_sum(terms: impl Iterator<Item = (Elem, String)>) -> String {
    let terms: Vec<(Elem, String)> = terms.filter(|(c, _)| !c.is_zero()).collect();
    if terms.is_empty() {
        return "0".to_string();
    }
    let single = terms.len() == 1;
    let mut out = String::new();
    for (i, (c, mono)) in terms.into_iter().enumerate() {
        let neg = c.is_negative_lead();
        let abs = if neg { -&c } else { c };
        let coeff = abs.to_string();
        let compound = coeff.contains(' ');
        let body = if mono.is_empty() {
            if compound && (neg || !single) {
                format!("({coeff})")
            } else {
                coeff
            }
        } else if abs.is_one() {
            mono
        } else if compound {
            format!("({coeff})*{mono}")
        } else {
            format!("{coeff}*{mono}")
        };
        match (i, neg) {
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (0, false) => out.push_str(&body),
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
        }
    }
    out
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&Elem> for &Elem {
            type Output = Elem;
            fn $method(self, rhs: &Elem) -> Elem {
                self.$inner(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<Elem> for Elem {
            type Output = Elem;
            fn $method(self, rhs: Elem) -> Elem {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Elem> for Elem {
            type Output = Elem;
            fn $method(self, rhs: &Elem) -> Elem {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Elem {
    type Output = Elem;
    fn neg(self) -> Elem {
        self.neg_ref()
    }
}

impl Neg for Elem {
    type Output = Elem;
    fn neg(self) -> Elem {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> Elem {
        Domain::rationals()
            .from_rational(&BigRational::new(BigInt::from(n), BigInt::from(d)))
            .unwrap()
    }

    #[test]
    fn rational_sum() {
        assert_eq!(&q(1, 2) + &q(1, 3), q(5, 6));
        assert_eq!((&q(1, 2) + &q(1, 3)).to_string(), "5/6");
    }

    #[test]
    fn prime_field_product() {
        let f7 = Domain::prime_field(7).unwrap();
        assert_eq!(&f7.from_i64(3) * &f7.from_i64(5), f7.one());
        assert_eq!(f7.from_i64(-1).to_string(), "6");
        assert_eq!(f7.from_i64(3).inv().unwrap(), f7.from_i64(5));
    }

    #[test]
    fn function_field_quotient_is_canonical() {
        let d: Domain = "QQ(u)".parse().unwrap();
        let u = d.var("u").unwrap();
        let r = u.checked_div(&(&u + &d.one())).unwrap();
        assert_eq!(r.to_string(), "u/(u + 1)");
        // (u^2 - 1)/(2u + 2) reduces to (u - 1)/2
        let num = &(&u * &u) - &d.one();
        let den = &(&d.from_i64(2) * &u) + &d.from_i64(2);
        let r = num.checked_div(&den).unwrap();
        assert_eq!(r, (&u - &d.one()).checked_div(&d.from_i64(2)).unwrap());
        assert_eq!(r.to_string(), "1/2*u - 1/2");
        let back = &r * &den;
        assert_eq!(back, num);
    }

    #[test]
    fn multivariate_fraction_cancels() {
        let d: Domain = "QQ(u,v)".parse().unwrap();
        let u = d.var("u").unwrap();
        let v = d.var("v").unwrap();
        let num = &(&u * &u) - &(&v * &v);
        let den = &u - &v;
        assert_eq!(num.checked_div(&den).unwrap(), &u + &v);
        let r = d.one().checked_div(&(&u * &v)).unwrap();
        assert_eq!(r.to_string(), "1/(u*v)");
    }

    #[test]
    fn polynomial_ring_units() {
        let d: Domain = "QQ[u]".parse().unwrap();
        let u = d.var("u").unwrap();
        assert!(matches!(d.one().checked_div(&u), Err(Error::NotAUnit(_))));
        let two = d.from_i64(2);
        assert_eq!(u.checked_div(&two).unwrap().to_string(), "1/2*u");
        assert!(!u.is_unit());
        assert_eq!((&u * &u).exact_quotient(&u), Some(u.clone()));
        assert_eq!(u.exact_quotient(&(&u + &d.one())), None);
    }

    #[test]
    fn mismatched_domains_are_rejected() {
        let a = Domain::rationals().one();
        let b = Domain::prime_field(5).unwrap().one();
        assert!(matches!(a.try_add(&b), Err(Error::DomainMismatch(..))));
    }

    #[test]
    fn extension_display() {
        let d = Domain::finite_field(2, 2).unwrap();
        let w = d.var("y").unwrap();
        assert_eq!((&w * &w).to_string(), "y + 1");
        assert_eq!(w.pow(3), d.one());
    }
}
