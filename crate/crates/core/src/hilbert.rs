//! The ring `H_n = U^-1 k[s_1(t), .., s_n(t)]`, its universal family, and
//! the correspondence between its points and Good monic families.

use std::fmt;

use crate::error::{Error, Result};
use crate::freeness::{check_family, strip_units, Verdict, Witness};
use crate::norms::{norm_coeffs, MonicFamily};
use crate::rings::{Domain, Elem, UniPoly};
use crate::sympoly::{ebasis_eval, ebasis_reduce, symmetric_coeff, EBasisPoly};

/// `numerator / prod_g s_n(g(t))` with every `g` monic, nonconstant and
/// `g(0) != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HnElement {
    numerator: EBasisPoly,
    denominators: Vec<UniPoly>,
}

/// `s_n(g(t))` written in `s_1..s_n`.
pub fn norm_ebasis(g: &UniPoly, n: usize) -> Result<EBasisPoly> {
    ebasis_reduce(&symmetric_coeff(g, n, n)?)
}

impl HnElement {
    pub fn new(numerator: EBasisPoly, denominators: Vec<UniPoly>) -> Result<HnElement> {
        let k = numerator.domain().clone();
        let n = numerator.n();
        let mut num = numerator;
        let mut dens = Vec::with_capacity(denominators.len());
        for g in denominators {
            if !g.domain().same(&k) {
                return Err(Error::DomainMismatch(g.domain().to_string(), k.to_string()));
            }
            if g.is_zero() || g.coeff(0).is_zero() {
                return Err(Error::NotAUnit(format!("s{n}({g})")));
            }
            let c = g.lc().expect("nonzero").clone();
            // s_n(c g') = c^n s_n(g')
            num = num.scale(&c.pow(n as u64).inv()?);
            if g.deg() > 0 {
                dens.push(g.monic()?);
            }
        }
        dens.sort();
        Ok(HnElement { numerator: num, denominators: dens })
    }

    pub fn from_ebasis(numerator: EBasisPoly) -> HnElement {
        HnElement { numerator, denominators: Vec::new() }
    }

    /// The generator `s_i`.
    pub fn s(k: &Domain, n: usize, i: usize) -> HnElement {
        HnElement::from_ebasis(EBasisPoly::gen(k, n, i))
    }

    pub fn constant(k: &Domain, n: usize, c: Elem) -> HnElement {
        HnElement::from_ebasis(EBasisPoly::constant(k, n, c))
    }

    /// `1 / s_n(g(t))`.
    pub fn inverse_norm(g: &UniPoly, n: usize) -> Result<HnElement> {
        HnElement::new(EBasisPoly::one(g.domain(), n), vec![g.clone()])
    }

    pub fn n(&self) -> usize {
        self.numerator.n()
    }

    pub fn k(&self) -> &Domain {
        self.numerator.domain()
    }

    pub fn numerator(&self) -> &EBasisPoly {
        &self.numerator
    }

    pub fn denominators(&self) -> &[UniPoly] {
        &self.denominators
    }

    fn check(&self, other: &HnElement) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::ArityMismatch { expected: self.n(), got: other.n() });
        }
        if !self.k().same(other.k()) {
            return Err(Error::DomainMismatch(self.k().to_string(), other.k().to_string()));
        }
        Ok(())
    }

    /// Product of `s_n(g(t))` over `dens`, in the e-basis.
    fn norm_product(&self, dens: &[UniPoly]) -> Result<EBasisPoly> {
        let mut acc = EBasisPoly::one(self.k(), self.n());
        for g in dens {
            acc = acc.mul(&norm_ebasis(g, self.n())?)?;
        }
        Ok(acc)
    }

    pub fn add(&self, other: &HnElement) -> Result<HnElement> {
        self.check(other)?;
        let (lcm, extra_a, extra_b) = multiset_lcm(&self.denominators, &other.denominators);
        let a = self.numerator.mul(&self.norm_product(&extra_a)?)?;
        let b = other.numerator.mul(&self.norm_product(&extra_b)?)?;
        Ok(HnElement { numerator: a.add(&b)?, denominators: lcm })
    }

    pub fn neg(&self) -> HnElement {
        HnElement { numerator: self.numerator.neg(), denominators: self.denominators.clone() }
    }

    pub fn sub(&self, other: &HnElement) -> Result<HnElement> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &HnElement) -> Result<HnElement> {
        self.check(other)?;
        let mut dens = self.denominators.clone();
        dens.extend(other.denominators.iter().cloned());
        dens.sort();
        Ok(HnElement { numerator: self.numerator.mul(&other.numerator)?, denominators: dens })
    }

    /// Equality of values by cross-multiplication.
    pub fn same_value(&self, other: &HnElement) -> Result<bool> {
        self.check(other)?;
        let left = self.numerator.mul(&self.norm_product(&other.denominators)?)?;
        let right = other.numerator.mul(&self.norm_product(&self.denominators)?)?;
        Ok(left == right)
    }
}

/// `(lcm, lcm - a, lcm - b)` of sorted multisets.
fn multiset_lcm(a: &[UniPoly], b: &[UniPoly]) -> (Vec<UniPoly>, Vec<UniPoly>, Vec<UniPoly>) {
    let (mut i, mut j) = (0, 0);
    let (mut lcm, mut extra_a, mut extra_b) = (Vec::new(), Vec::new(), Vec::new());
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            lcm.push(a[i].clone());
            extra_b.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            lcm.push(b[j].clone());
            extra_a.push(b[j].clone());
            j += 1;
        } else {
            lcm.push(a[i].clone());
            i += 1;
            j += 1;
        }
    }
    (lcm, extra_a, extra_b)
}

impl fmt::Display for HnElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominators.is_empty() {
            return write!(f, "{}", self.numerator);
        }
        let num = self.numerator.to_string();
        if num.contains(' ') || num.contains('/') {
            write!(f, "({num})/")?;
        } else {
            write!(f, "{num}/")?;
        }
        let n = self.n();
        let dens: Vec<String> = self.denominators.iter().map(|g| format!("s{n}({g})")).collect();
        if dens.len() == 1 {
            write!(f, "{}", dens[0])
        } else {
            write!(f, "({})", dens.join("*"))
        }
    }
}

/// `F_n(x) = x^n - s_1 x^(n-1) + .. + (-1)^n s_n` over `H_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalFamily {
    pub coeffs: Vec<HnElement>,
}

impl UniversalFamily {
    pub fn n(&self) -> usize {
        self.coeffs.len()
    }
}

impl fmt::Display for UniversalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        match n {
            1 => write!(f, "x")?,
            _ => write!(f, "x^{n}")?,
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            let i = i + 1;
            let sign = if i % 2 == 1 { '-' } else { '+' };
            match n - i {
                0 => write!(f, " {sign} {c}")?,
                1 => write!(f, " {sign} {c}*x")?,
                p => write!(f, " {sign} {c}*x^{p}")?,
            }
        }
        Ok(())
    }
}

pub fn universal_family(k: &Domain, n: usize) -> Result<UniversalFamily> {
    if n == 0 {
        return Err(Error::ArityMismatch { expected: 1, got: 0 });
    }
    if !k.is_base_field() {
        return Err(Error::UnsupportedDomain { domain: k.to_string(), operation: "universal_family" });
    }
    Ok(UniversalFamily { coeffs: (1..=n).map(|i| HnElement::s(k, n, i)).collect() })
}

/// A homomorphism `H_n -> A`, recorded by the images `u_i` of `s_i` and the
/// Good verdict that makes every `s_n(g(t))` a unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbPoint {
    family: MonicFamily,
    verdict: Verdict,
}

impl HilbPoint {
    pub fn domain(&self) -> &Domain {
        self.family.domain()
    }

    pub fn u(&self) -> &[Elem] {
        self.family.u()
    }

    pub fn family(&self) -> &MonicFamily {
        &self.family
    }

    pub fn verdict(&self) -> &Verdict {
        &self.verdict
    }
}

/// The point of `H_n` classifying a Good family.
pub fn classify_family(family: &MonicFamily) -> Result<HilbPoint> {
    let verdict = check_family(family)?;
    match &verdict.witness {
        Some(w) if !verdict.is_good() => Err(Error::NotInHilb { witness: w.q.to_string() }),
        _ => Ok(HilbPoint { family: family.clone(), verdict }),
    }
}

/// `x^n - u_1 x^(n-1) + .. + (-1)^n u_n`.
pub fn family_from_point(u: &[Elem], domain: &Domain) -> Result<MonicFamily> {
    MonicFamily::new(domain, u.to_vec())
}

/// Image of `a` under the homomorphism of `at`.
pub fn hn_eval(a: &HnElement, at: &HilbPoint) -> Result<Elem> {
    if a.n() != at.u().len() {
        return Err(Error::ArityMismatch { expected: at.u().len(), got: a.n() });
    }
    let d = at.domain();
    if !d.base_field().same(a.k()) {
        return Err(Error::DomainMismatch(a.k().to_string(), d.base_field().to_string()));
    }
    let num = ebasis_eval(a.numerator(), at.u())?;
    let mut den = d.one();
    for g in a.denominators() {
        den = &den * norm_coeffs(at.family(), &g.embed_into(d))?.norm();
    }
    let inv = den
        .inv()
        .unwrap_or_else(|_| panic!("s_n(g(t)) maps to the non-unit {den} at a Good point"));
    Ok(&num * &inv)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointTest {
    pub is_point: bool,
    pub witness: Option<Witness>,
}

/// Whether `(u_1, .., u_n)` over a field is a point of `Spec H_n`.
pub fn is_point_of_hn(u: &[Elem], domain: &Domain) -> Result<PointTest> {
    if !domain.is_field() {
        return Err(Error::UnsupportedDomain { domain: domain.to_string(), operation: "is_point_of_hn" });
    }
    let verdict = check_family(&family_from_point(u, domain)?)?;
    Ok(PointTest { is_point: verdict.is_good(), witness: verdict.witness })
}

/// Polynomial generators of an ideal of `K (x) k[x]_(x)` over a field `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPresentation {
    domain: Domain,
    generators: Vec<UniPoly>,
}

impl IdealPresentation {
    pub fn new(domain: &Domain, generators: Vec<UniPoly>) -> Result<IdealPresentation> {
        if !domain.is_field() {
            return Err(Error::UnsupportedDomain { domain: domain.to_string(), operation: "ideal_monic_generator" });
        }
        if let Some(g) = generators.iter().find(|g| !g.domain().same(domain)) {
            return Err(Error::DomainMismatch(g.domain().to_string(), domain.to_string()));
        }
        Ok(IdealPresentation { domain: domain.clone(), generators })
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn generators(&self) -> &[UniPoly] {
        &self.generators
    }
}

/// The monic generator of an ideal and the rank of the quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonicGenerator {
    pub generator: UniPoly,
    pub rank: usize,
}

impl MonicGenerator {
    /// `None` for the unit ideal.
    pub fn family(&self) -> Option<MonicFamily> {
        (self.rank > 0).then(|| MonicFamily::from_poly(&self.generator).expect("monic of positive degree"))
    }
}

pub fn ideal_monic_generator(ideal: &IdealPresentation) -> Result<MonicGenerator> {
    let mut d = UniPoly::zero(&ideal.domain);
    for g in &ideal.generators {
        d = d.gcd(g)?;
    }
    if d.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let generator = strip_units(&d)?.f_part;
    let rank = generator.deg();
    Ok(MonicGenerator { generator, rank })
}
