//! Coefficient domains and exact arithmetic.
//!
//! A [`Domain`] is a cheap handle to one member of a fixed taxonomy: the
//! rationals, a prime field, a finite extension of a prime field, a rational
//! function field over the base field, or a polynomial ring over the base
//! field. Every domain is an algebra over its *base field* `k`, which is
//! always `QQ` or `GF(p)`.

mod elem;
pub mod ext;
pub mod factor;
mod mgcd;
mod mpoly;
mod roots;
mod unipoly;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::Zero;

pub use elem::Elem;
pub(crate) use elem::Value;
pub use ext::ExtField;
pub use factor::{factor_univariate, Factorization};
pub use mgcd::multi_gcd;
pub use mpoly::{Exponent, MultiPoly};
pub use roots::{product_over_roots, roots_with_multiplicity, specialize, specialize_into};
pub use unipoly::UniPoly;

use crate::error::{Error, Result};

/// Shared, immutable list of variable names.
pub type Vars = Arc<[String]>;

/// Name of the generator of an extension field in printed output.
pub const EXT_GENERATOR: &str = "y";

#[derive(Clone)]
pub struct Domain(Arc<DomainKind>);

#[derive(Debug, PartialEq, Eq)]
pub enum DomainKind {
    Rationals,
    PrimeField(u64),
    ExtField(ExtField),
    RatFuncField { base: Domain, vars: Vars },
    PolyRing { base: Domain, vars: Vars },
}

impl Domain {
    pub fn rationals() -> Domain {
        Domain(Arc::new(DomainKind::Rationals))
    }

    pub fn prime_field(p: u64) -> Result<Domain> {
        if !is_prime(p) {
            return Err(Error::InvalidDomain(format!("{p} is not prime")));
        }
        Ok(Domain(Arc::new(DomainKind::PrimeField(p))))
    }

    /// `GF(p^r)` with the lexicographically smallest monic irreducible
    /// modulus of degree `r` (coefficients compared from the constant term
    /// upwards). `r = 1` yields the prime field itself.
    pub fn finite_field(p: u64, r: usize) -> Result<Domain> {
        if r == 0 {
            return Err(Error::InvalidDomain("extension degree must be positive".into()));
        }
        let base = Domain::prime_field(p)?;
        if r == 1 {
            return Ok(base);
        }
        let modulus = ext::smallest_irreducible(p, r)?;
        Ok(Domain(Arc::new(DomainKind::ExtField(ExtField::new(base, modulus)))))
    }

    /// Extension of `GF(p)` by an explicit monic irreducible modulus
    /// (coefficients low to high).
    pub fn ext_field_with_modulus(p: u64, modulus: Vec<u64>) -> Result<Domain> {
        let base = Domain::prime_field(p)?;
        let modulus: Vec<u64> = modulus.into_iter().map(|c| c % p).collect();
        if modulus.len() < 3 || *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidDomain("modulus must be monic of degree >= 2".into()));
        }
        let as_poly = UniPoly::new(
            &base,
            modulus.iter().map(|&c| base.from_u64(c)).collect(),
        );
        if !factor::is_irreducible(&as_poly)? {
            return Err(Error::InvalidDomain("modulus is reducible".into()));
        }
        Ok(Domain(Arc::new(DomainKind::ExtField(ExtField::new(base, modulus)))))
    }

    pub fn rational_function_field<S: AsRef<str>>(base: &Domain, vars: &[S]) -> Result<Domain> {
        let vars = check_vars(base, vars)?;
        Ok(Domain(Arc::new(DomainKind::RatFuncField { base: base.clone(), vars })))
    }

    pub fn polynomial_ring<S: AsRef<str>>(base: &Domain, vars: &[S]) -> Result<Domain> {
        let vars = check_vars(base, vars)?;
        Ok(Domain(Arc::new(DomainKind::PolyRing { base: base.clone(), vars })))
    }

    pub fn kind(&self) -> &DomainKind {
        &self.0
    }

    pub fn same(&self, other: &Domain) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }

    /// The designated base field `k` (`QQ` or `GF(p)`).
    pub fn base_field(&self) -> Domain {
        match self.kind() {
            DomainKind::Rationals | DomainKind::PrimeField(_) => self.clone(),
            DomainKind::ExtField(e) => e.base.clone(),
            DomainKind::RatFuncField { base, .. } | DomainKind::PolyRing { base, .. } => {
                base.clone()
            }
        }
    }

    pub fn is_base_field(&self) -> bool {
        matches!(self.kind(), DomainKind::Rationals | DomainKind::PrimeField(_))
    }

    pub fn is_field(&self) -> bool {
        !matches!(self.kind(), DomainKind::PolyRing { .. })
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.kind(), DomainKind::PrimeField(_) | DomainKind::ExtField(_))
    }

    pub fn characteristic(&self) -> u64 {
        match self.base_field().kind() {
            DomainKind::PrimeField(p) => *p,
            _ => 0,
        }
    }

    /// Number of elements for finite fields.
    pub fn order(&self) -> Option<BigUint> {
        match self.kind() {
            DomainKind::PrimeField(p) => Some(BigUint::from(*p)),
            DomainKind::ExtField(e) => Some(BigUint::from(e.p).pow(e.degree() as u32)),
            _ => None,
        }
    }

    /// Function-field or polynomial-ring variables (empty otherwise).
    pub fn vars(&self) -> &[String] {
        match self.kind() {
            DomainKind::RatFuncField { vars, .. } | DomainKind::PolyRing { vars, .. } => vars,
            _ => &[],
        }
    }

    pub(crate) fn vars_arc(&self) -> Vars {
        match self.kind() {
            DomainKind::RatFuncField { vars, .. } | DomainKind::PolyRing { vars, .. } => {
                vars.clone()
            }
            _ => Arc::from(Vec::<String>::new()),
        }
    }

    pub fn ext(&self) -> Option<&ExtField> {
        match self.kind() {
            DomainKind::ExtField(e) => Some(e),
            _ => None,
        }
    }

    pub fn zero(&self) -> Elem {
        Elem::from_parts(self.clone(), self.zero_value())
    }

    pub fn one(&self) -> Elem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Elem {
        self.from_bigint(&num_bigint::BigInt::from(n))
    }

    pub fn from_u64(&self, n: u64) -> Elem {
        self.from_bigint(&num_bigint::BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &num_bigint::BigInt) -> Elem {
        let value = match self.kind() {
            DomainKind::Rationals => Value::Rat(num_rational::BigRational::from_integer(n.clone())),
            DomainKind::PrimeField(p) => Value::Mod(reduce_bigint(n, *p)),
            DomainKind::ExtField(e) => Value::Ext(e.constant(reduce_bigint(n, e.p))),
            DomainKind::RatFuncField { base, .. } => {
                let c = base.from_bigint(n);
                Value::Frac(
                    MultiPoly::constant(base, self.vars_arc(), c),
                    MultiPoly::one(base, self.vars_arc()),
                )
            }
            DomainKind::PolyRing { base, .. } => {
                Value::Poly(MultiPoly::constant(base, self.vars_arc(), base.from_bigint(n)))
            }
        };
        Elem::from_parts(self.clone(), value)
    }

    /// Image of a rational number; fails in characteristic `p` when `p`
    /// divides the denominator.
    pub fn from_rational(&self, q: &num_rational::BigRational) -> Result<Elem> {
        let num = self.from_bigint(q.numer());
        let den = self.from_bigint(q.denom());
        num.checked_div(&den)
    }

    /// The named function-field or polynomial-ring variable, or the
    /// extension generator `y`.
    pub fn var(&self, name: &str) -> Option<Elem> {
        match self.kind() {
            DomainKind::ExtField(e) if name == EXT_GENERATOR => {
                Some(Elem::from_parts(self.clone(), Value::Ext(e.reduce(vec![0, 1]))))
            }
            DomainKind::RatFuncField { base, vars } => {
                let i = vars.iter().position(|v| v == name)?;
                Some(Elem::from_parts(
                    self.clone(),
                    Value::Frac(MultiPoly::var(base, vars.clone(), i), MultiPoly::one(base, vars.clone())),
                ))
            }
            DomainKind::PolyRing { base, vars } => {
                let i = vars.iter().position(|v| v == name)?;
                Some(Elem::from_parts(self.clone(), Value::Poly(MultiPoly::var(base, vars.clone(), i))))
            }
            _ => None,
        }
    }

    /// Canonical map from the base field (or a prime field sitting under an
    /// extension) into this domain. Identity on elements already here.
    pub fn embed(&self, a: &Elem) -> Elem {
        if a.domain().same(self) {
            return a.clone();
        }
        let src = a.domain();
        match (self.kind(), a.value()) {
            (DomainKind::ExtField(e), Value::Mod(m)) if src.characteristic() == e.p => {
                Elem::from_parts(self.clone(), Value::Ext(e.constant(*m)))
            }
            (DomainKind::RatFuncField { base, vars }, _) if src.same(base) => Elem::from_parts(
                self.clone(),
                Value::Frac(
                    MultiPoly::constant(base, vars.clone(), a.clone()),
                    MultiPoly::one(base, vars.clone()),
                ),
            ),
            (DomainKind::PolyRing { base, vars }, _) if src.same(base) => Elem::from_parts(
                self.clone(),
                Value::Poly(MultiPoly::constant(base, vars.clone(), a.clone())),
            ),
            _ => panic!("no canonical map from {} into {}", src, self),
        }
    }

    /// Whether [`Domain::embed`] accepts elements of `src`.
    pub fn can_embed(&self, src: &Domain) -> bool {
        if src.same(self) {
            return true;
        }
        match self.kind() {
            DomainKind::ExtField(e) => {
                matches!(src.kind(), DomainKind::PrimeField(p) if *p == e.p)
            }
            DomainKind::RatFuncField { base, .. } | DomainKind::PolyRing { base, .. } => {
                src.same(base)
            }
            _ => false,
        }
    }

    /// Element number `index` in a fixed enumeration of a finite field
    /// (base-`p` digits become coefficients of `1, y, y^2, ...`).
    pub fn finite_elem(&self, index: &BigUint) -> Elem {
        match self.kind() {
            DomainKind::PrimeField(p) => {
                let r = index % BigUint::from(*p);
                self.from_u64(r.try_into().unwrap_or(0))
            }
            DomainKind::ExtField(e) => {
                let mut digits = Vec::with_capacity(e.degree());
                let mut rest = index.clone();
                let pb = BigUint::from(e.p);
                for _ in 0..e.degree() {
                    let d: u64 = (&rest % &pb).try_into().unwrap_or(0);
                    digits.push(d);
                    rest /= &pb;
                }
                Elem::from_parts(self.clone(), Value::Ext(e.reduce(digits)))
            }
            _ => panic!("finite_elem on infinite domain {self}"),
        }
    }

    /// Uniformly random element of a finite field.
    pub fn random_finite_elem<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        match self.kind() {
            DomainKind::PrimeField(p) => self.from_u64(rng.gen_range(0..*p)),
            DomainKind::ExtField(e) => {
                let digits = (0..e.degree()).map(|_| rng.gen_range(0..e.p)).collect();
                Elem::from_parts(self.clone(), Value::Ext(e.reduce(digits)))
            }
            _ => panic!("random_finite_elem on infinite domain {self}"),
        }
    }

    pub(crate) fn zero_value(&self) -> Value {
        match self.kind() {
            DomainKind::Rationals => Value::Rat(num_rational::BigRational::zero()),
            DomainKind::PrimeField(_) => Value::Mod(0),
            DomainKind::ExtField(_) => Value::Ext(Vec::new()),
            DomainKind::RatFuncField { base, vars } => Value::Frac(
                MultiPoly::zero(base, vars.clone()),
                MultiPoly::one(base, vars.clone()),
            ),
            DomainKind::PolyRing { base, vars } => Value::Poly(MultiPoly::zero(base, vars.clone())),
        }
    }
}

impl PartialEq for Domain {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for Domain {}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            DomainKind::Rationals => write!(f, "QQ"),
            DomainKind::PrimeField(p) => write!(f, "GF({p})"),
            DomainKind::ExtField(e) => write!(f, "GF({}^{})", e.p, e.degree()),
            DomainKind::RatFuncField { base, vars } => write!(f, "{}({})", base, vars.join(",")),
            DomainKind::PolyRing { base, vars } => write!(f, "{}[{}]", base, vars.join(",")),
        }
    }
}

impl fmt::Debug for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Domain {
    type Err = Error;

    /// Parses `QQ`, `GF(p)`, `GF(p^r)`, `QQ(u1,...)`, `GF(p)(u1,...)`,
    /// `QQ[u1,...]` and `GF(p)[u1,...]`.
    fn from_str(s: &str) -> Result<Domain> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::InvalidDomain(format!("cannot parse domain descriptor {s:?}"));
        let (base, rest) = if let Some(rest) = s.strip_prefix("QQ") {
            (Domain::rationals(), rest)
        } else if let Some(rest) = s.strip_prefix("GF(") {
            let close = rest.find(')').ok_or_else(bad)?;
            let inner = &rest[..close];
            let (p, r) = match inner.split_once('^') {
                Some((p, r)) => (p, r.parse::<usize>().map_err(|_| bad())?),
                None => (inner, 1),
            };
            let p = p.parse::<u64>().map_err(|_| bad())?;
            (Domain::finite_field(p, r)?, &rest[close + 1..])
        } else {
            return Err(bad());
        };
        if rest.is_empty() {
            return Ok(base);
        }
        let (open, close) = (rest.chars().next().unwrap(), rest.chars().last().unwrap());
        let inner = &rest[1..rest.len() - 1];
        let vars: Vec<&str> = inner.split(',').collect();
        match (open, close) {
            ('(', ')') => Domain::rational_function_field(&base, &vars),
            ('[', ']') => Domain::polynomial_ring(&base, &vars),
            _ => Err(bad()),
        }
    }
}

/// Names reserved for the polynomial variable, the extension generator and
/// the symmetric-function variables.
pub fn is_reserved_name(name: &str) -> bool {
    if name == "x" || name == EXT_GENERATOR {
        return true;
    }
    for prefix in ["t", "s", "e"] {
        if let Some(rest) = name.strip_prefix(prefix) {
            if !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()) {
                return true;
            }
        }
    }
    false
}

fn check_vars<S: AsRef<str>>(base: &Domain, vars: &[S]) -> Result<Vars> {
    if !base.is_base_field() {
        return Err(Error::InvalidDomain(format!(
            "function fields and polynomial rings must be over QQ or GF(p), not {base}"
        )));
    }
    if vars.is_empty() {
        return Err(Error::InvalidDomain("variable list is empty".into()));
    }
    let mut out: Vec<String> = Vec::with_capacity(vars.len());
    for v in vars {
        let v = v.as_ref();
        let mut chars = v.chars();
        let ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic())
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok || is_reserved_name(v) {
            return Err(Error::InvalidDomain(format!("invalid variable name {v:?}")));
        }
        if out.iter().any(|w| w == v) {
            return Err(Error::InvalidDomain(format!("duplicate variable {v:?}")));
        }
        out.push(v.to_string());
    }
    Ok(Arc::from(out))
}

fn reduce_bigint(n: &num_bigint::BigInt, p: u64) -> u64 {
    use num_integer::Integer;
    let r = n.mod_floor(&num_bigint::BigInt::from(p));
    r.try_into().expect("residue fits in u64")
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        None
    } else {
        Some(pow_mod(a, p - 2, p))
    }
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n % w == 0 {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptors_round_trip() {
        for s in ["QQ", "GF(7)", "GF(2^2)", "QQ(u)", "GF(5)(u,v)", "QQ[u1,u2]", "GF(3)[w]"] {
            let d: Domain = s.parse().unwrap();
            assert_eq!(d.to_string(), s);
        }
        let d: Domain = "GF(7^1)".parse().unwrap();
        assert_eq!(d.to_string(), "GF(7)");
    }

    #[test]
    fn descriptor_errors() {
        for s in ["ZZ", "GF(8)", "GF(4)", "QQ()", "QQ(u,u)", "QQ(x)", "QQ(t1)", "GF(2^2)(u)", "QQ(u]"] {
            assert!(s.parse::<Domain>().is_err(), "{s} should fail");
        }
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..50).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]);
        assert!(is_prime(18446744073709551557));
        assert!(!is_prime(3215031751));
    }

    #[test]
    fn gf4_modulus_is_x2_x_1() {
        let d = Domain::finite_field(2, 2).unwrap();
        assert_eq!(d.ext().unwrap().modulus(), &[1, 1, 1]);
        let d = Domain::finite_field(3, 2).unwrap();
        // x^2 + 1 is the first irreducible when the constant term leads
        assert_eq!(d.ext().unwrap().modulus(), &[1, 0, 1]);
    }
}
