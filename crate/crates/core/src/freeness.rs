//! Freeness of `A (x) k[x]_(x) / (F)` for a monic family `F`: the decision
//! procedure over the supported base rings, the factorization
//! `I g = H G`, and the splitting of a polynomial into its local part and
//! its unit part.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::norms::{norm_coeffs, MonicFamily};
use crate::rings::{factor_univariate, specialize_into, Domain, DomainKind, Elem, UniPoly};

/// Cap on admissible specialization points in the sampled-gcd search.
pub const MAX_SAMPLE_POINTS: usize = 24;
/// Sampling fields for finite `k` have at least this many elements.
pub const MIN_SAMPLING_FIELD: u64 = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Good,
    Bad,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Good => "Good",
            Status::Bad => "Bad",
        })
    }
}

/// Which decision rule applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    /// `A = k`: Good iff `F = x^n`.
    BaseField,
    /// `A` finite over `k`: Good iff `F = x^n`.
    ExtensionField,
    /// `A = k(u)`: Good iff no monic irreducible `q != x` of `k[x]` divides `F`.
    FunctionField,
    /// `A = k[u]`: Good iff every `u_i` vanishes.
    PolynomialRing,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::BaseField => "BaseField",
            Rule::ExtensionField => "ExtensionField",
            Rule::FunctionField => "FunctionField",
            Rule::PolynomialRing => "PolynomialRing",
        })
    }
}

/// A monic `q` in `k[x]` with `q(0) != 0` whose norm `s_{F,n}(q(t))` is not
/// a unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub q: UniPoly,
    pub norm: Elem,
    /// Residue point `phi` at which `F^phi` has the root, for `k[u]`.
    pub point: Option<Vec<Elem>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub rule: Rule,
    /// Candidates from `k[x]` tested against `F` and found not to divide it.
    pub rejected: Vec<UniPoly>,
    pub sample_points: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub witness: Option<Witness>,
    pub certificate: Certificate,
}

impl Verdict {
    pub fn is_good(&self) -> bool {
        self.status == Status::Good
    }
}

/// `k[x]` factors of a polynomial over `k(u)`, found by sampled gcds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KFactorSearch {
    /// Monic irreducible `q != x` in `k[x]` with their multiplicity in `F`.
    pub factors: Vec<(UniPoly, usize)>,
    pub rejected: Vec<UniPoly>,
    pub sample_points: usize,
}

/// Output of [`lemma22_factor`]: `i * g = h * G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma22 {
    pub g: UniPoly,
    pub i: UniPoly,
    pub h: UniPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripResult {
    pub f_part: UniPoly,
    pub unit_part: UniPoly,
}

fn is_x(p: &UniPoly) -> bool {
    p.deg() == 1 && p.coeff(0).is_zero()
}

fn is_x_power(p: &UniPoly) -> bool {
    p.is_monomial() && p.lc().is_some_and(|c| c.is_one())
}

/// Product of the distinct Frobenius conjugates of a monic irreducible `h`
/// over a finite field, as a polynomial over the prime field.
pub fn conjugate_product(h: &UniPoly) -> UniPoly {
    let d = h.domain();
    if d.is_base_field() {
        return h.clone();
    }
    let mut acc = h.clone();
    let mut cur = h.map_coeffs(d, |c| c.frobenius());
    while cur != *h {
        acc = &acc * &cur;
        cur = cur.map_coeffs(d, |c| c.frobenius());
    }
    acc.to_base_field().expect("Frobenius-stable polynomial has prime-field coefficients")
}

/// Distinct minimal polynomials over `k` of the nonzero roots of `f`, for
/// `f` over `k` or a finite extension of a prime field; sorted.
pub fn k_minimal_factors(f: &UniPoly) -> Result<Vec<UniPoly>> {
    let fac = factor_univariate(f)?;
    let mut out: Vec<UniPoly> = fac.non_x_factors().map(|(h, _)| conjugate_product(h)).collect();
    out.sort_by(witness_order);
    out.dedup();
    Ok(out)
}

/// Degree first, then coefficients from the constant term up; rationals
/// compare by absolute value before sign.
pub fn witness_order(a: &UniPoly, b: &UniPoly) -> Ordering {
    let key = |c: &Elem| match c.as_rational() {
        Some(q) => (Some(q.abs()), q.is_negative(), c.clone()),
        None => (None, false, c.clone()),
    };
    a.deg().cmp(&b.deg()).then_with(|| {
        let ka = a.coeffs().iter().map(key);
        let kb = b.coeffs().iter().map(key);
        ka.cmp(kb)
    })
}

/// The `i`-th element of the sampling sequence: `0, 1, -1, 2, -2, ..` over
/// `Q`, the fixed enumeration over finite fields.
pub fn sequence_elem(d: &Domain, i: usize) -> Elem {
    if d.is_finite() {
        d.finite_elem(&BigUint::from(i))
    } else {
        let k = i.div_ceil(2) as i64;
        d.from_i64(if i % 2 == 1 { k } else { -k })
    }
}

/// Index tuples in `[0, l]^m` with maximum exactly `l`.
fn grid_shell(m: usize, l: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0; m];
    loop {
        if cur.iter().copied().max().unwrap_or(0) == l {
            out.push(cur.clone());
        }
        let mut i = 0;
        loop {
            if i == m {
                return out;
            }
            if cur[i] < l {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

/// Sample points of `s^m` shell by shell; `None` once a finite `s` is
/// exhausted.
struct GridWalk {
    field: Domain,
    m: usize,
    limit: Option<usize>,
    shell: usize,
    pending: Vec<Vec<usize>>,
}

impl GridWalk {
    fn new(field: &Domain, m: usize) -> GridWalk {
        let limit = field.order().and_then(|o| o.to_usize());
        GridWalk { field: field.clone(), m, limit, shell: 0, pending: grid_shell(m, 0) }
    }
}

impl Iterator for GridWalk {
    type Item = Vec<Elem>;

    fn next(&mut self) -> Option<Vec<Elem>> {
        while self.pending.is_empty() {
            self.shell += 1;
            if self.limit.is_some_and(|q| self.shell >= q) {
                return None;
            }
            self.pending = grid_shell(self.m, self.shell);
            self.pending.reverse();
        }
        let idx = self.pending.pop()?;
        Some(idx.iter().map(|&i| sequence_elem(&self.field, i)).collect())
    }
}

/// Field the sample points are drawn from: `k` itself, or the smallest
/// `GF(p^r)` with at least [`MIN_SAMPLING_FIELD`] elements.
fn sampling_field(k: &Domain, min_size: u64) -> Result<Domain> {
    match k.kind() {
        DomainKind::PrimeField(p) => {
            let (mut r, mut q) = (1usize, *p);
            while q < min_size {
                r += 1;
                q = q.saturating_mul(*p);
            }
            Domain::finite_field(*p, r)
        }
        _ => Ok(k.clone()),
    }
}

fn function_field_base(d: &Domain) -> Option<Domain> {
    match d.kind() {
        DomainKind::RatFuncField { base, .. } => Some(base.clone()),
        _ => None,
    }
}

/// Monic irreducible factors `q != x` of `f` lying in `k[x]`, for `f` over
/// `k(u)`.
///
/// Candidates come from the gcd of specializations of `f`; each is accepted
/// only after exact division over `k(u)`.
pub fn k_factors(f: &UniPoly) -> Result<KFactorSearch> {
    let d = f.domain();
    let k = function_field_base(d)
        .ok_or_else(|| Error::UnsupportedDomain { domain: d.to_string(), operation: "k_factors" })?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.deg();
    let s = sampling_field(&k, MIN_SAMPLING_FIELD)?;
    let mut c: Option<UniPoly> = None;
    let (mut used, mut stable, mut prev) = (0usize, 0usize, usize::MAX);
    if n > 0 {
        for point in GridWalk::new(&s, d.vars().len()) {
            let spec = match specialize_into(f, &point, &s) {
                Ok(p) => p,
                Err(Error::PoleAtPoint) => continue,
                Err(e) => return Err(e),
            };
            if spec.deg() != n {
                continue;
            }
            used += 1;
            let g = match &c {
                None => spec.monic()?,
                Some(c) => c.gcd(&spec)?,
            };
            let core = g.deg() - g.x_valuation();
            c = Some(g);
            if core == 0 || used >= MAX_SAMPLE_POINTS {
                break;
            }
            if used >= 2 {
                if core == prev {
                    stable += 1;
                    if stable >= 2 {
                        break;
                    }
                } else {
                    stable = 0;
                }
            }
            prev = core;
        }
        if c.is_none() {
            return Err(Error::ResourceCap("no admissible specialization point".into()));
        }
    }
    let mut candidates = match &c {
        Some(c) if c.deg() > c.x_valuation() => k_minimal_factors(c)?,
        _ => Vec::new(),
    };
    candidates.retain(|q| !is_x(q));
    let mut factors = Vec::new();
    let mut rejected = Vec::new();
    for q in candidates {
        let qk = q.embed_into(d);
        let mut rest = f.clone();
        let mut mult = 0;
        while let Ok(next) = rest.exact_div(&qk) {
            rest = next;
            mult += 1;
        }
        if mult > 0 {
            factors.push((q, mult));
        } else {
            rejected.push(q);
        }
    }
    Ok(KFactorSearch { factors, rejected, sample_points: used })
}

fn witness(family: &MonicFamily, q: UniPoly, point: Option<Vec<Elem>>) -> Result<Witness> {
    let qa = q.embed_into(family.domain());
    let norm = norm_coeffs(family, &qa)?.norm().clone();
    Ok(Witness { q, norm, point })
}

fn bad(family: &MonicFamily, q: UniPoly, point: Option<Vec<Elem>>, certificate: Certificate) -> Result<Verdict> {
    Ok(Verdict { status: Status::Bad, witness: Some(witness(family, q, point)?), certificate })
}

fn good(certificate: Certificate) -> Verdict {
    Verdict { status: Status::Good, witness: None, certificate }
}

/// Decide whether `A (x) k[x]_(x) / (F)` is free of rank `n` with basis
/// `1, x, .., x^(n-1)`.
pub fn check_family(family: &MonicFamily) -> Result<Verdict> {
    let d = family.domain();
    let f = family.to_poly();
    let zero = family.u().iter().all(|c| c.is_zero());
    let cert = |rule| Certificate { rule, rejected: Vec::new(), sample_points: 0 };
    match d.kind() {
        DomainKind::Rationals | DomainKind::PrimeField(_) | DomainKind::ExtField(_) => {
            let rule = if d.is_base_field() { Rule::BaseField } else { Rule::ExtensionField };
            if zero {
                return Ok(good(cert(rule)));
            }
            let q = k_minimal_factors(&f)?.into_iter().next().expect("F != x^n has a nonzero root");
            bad(family, q, None, cert(rule))
        }
        DomainKind::RatFuncField { .. } => {
            let search = k_factors(&f)?;
            let certificate = Certificate {
                rule: Rule::FunctionField,
                rejected: search.rejected,
                sample_points: search.sample_points,
            };
            match search.factors.into_iter().next() {
                None => Ok(good(certificate)),
                Some((q, _)) => bad(family, q, None, certificate),
            }
        }
        DomainKind::PolyRing { base, vars } => {
            if zero {
                return Ok(good(cert(Rule::PolynomialRing)));
            }
            let (point, q) = polyring_witness(&f, base, vars.len())?;
            bad(family, q, Some(point), cert(Rule::PolynomialRing))
        }
    }
}

/// A point `phi` of `k[u]` (over a finite extension of `k` when `k` is
/// small) with `F^phi != x^n`, and the minimal polynomial over `k` of a
/// nonzero root of `F^phi`.
fn polyring_witness(f: &UniPoly, k: &Domain, m: usize) -> Result<(Vec<Elem>, UniPoly)> {
    let degree = f
        .coeffs()
        .iter()
        .filter_map(|c| c.as_multipoly().and_then(|p| p.total_degree()))
        .max()
        .unwrap_or(0);
    let s = sampling_field(k, degree as u64 + 1)?;
    for point in GridWalk::new(&s, m) {
        let spec = specialize_into(f, &point, &s)?;
        if is_x_power(&spec) {
            continue;
        }
        let q = k_minimal_factors(&spec)?.into_iter().next().expect("nonzero root");
        return Ok((point, q));
    }
    unreachable!("a nonzero polynomial of degree {degree} vanishes on no full grid of side {}", degree + 1)
}

/// Whether a Bad verdict's witness checks out: `q` monic with `q(0) != 0`,
/// norm recomputed and not a unit, and `q | F` when `A` is `k` or `k(u)`.
pub fn verify_witness(family: &MonicFamily, verdict: &Verdict) -> bool {
    let Some(w) = &verdict.witness else {
        return verdict.status == Status::Good;
    };
    let d = family.domain();
    if !w.q.is_monic() || w.q.coeff(0).is_zero() || !w.q.domain().is_base_field() {
        return false;
    }
    let qa = w.q.embed_into(d);
    let Ok(s) = norm_coeffs(family, &qa) else {
        return false;
    };
    if *s.norm() != w.norm || w.norm.is_unit() {
        return false;
    }
    match d.kind() {
        DomainKind::Rationals | DomainKind::PrimeField(_) | DomainKind::RatFuncField { .. } => {
            family.to_poly().exact_div(&qa).is_ok()
        }
        _ => true,
    }
}

fn require_field(g: &UniPoly, operation: &'static str) -> Result<()> {
    match g.domain().kind() {
        DomainKind::PolyRing { .. } => Err(Error::UnsupportedDomain { domain: g.domain().to_string(), operation }),
        _ => Ok(()),
    }
}

/// `I g = H G` with `g` in `k[x]`, `g(0) != 0`, and every root of `I` zero
/// or transcendental over `k`.
pub fn lemma22_factor(big_g: &UniPoly) -> Result<Lemma22> {
    require_field(big_g, "lemma22_factor")?;
    if big_g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let kk = big_g.domain();
    let k = kk.base_field();
    let mut g = UniPoly::one(&k);
    let mut i = big_g.clone();
    let mut h = UniPoly::one(kk);
    match kk.kind() {
        DomainKind::RatFuncField { .. } => {
            for (q, e) in k_factors(big_g)?.factors {
                let qe = q.pow(e);
                i = i.exact_div(&qe.embed_into(kk))?;
                g = &g * &qe;
            }
        }
        _ => {
            let fac = factor_univariate(big_g)?;
            for (g1_big, e) in fac.non_x_factors() {
                let g1 = conjugate_product(g1_big);
                let h1 = g1.embed_into(kk).exact_div(g1_big)?;
                i = i.exact_div(&g1_big.pow(*e))?;
                g = &g * &g1.pow(*e);
                h = &h * &h1.pow(*e);
            }
        }
    }
    Ok(Lemma22 { g, i, h })
}

/// Split `G = lc(G) * f_part * unit_part` with both parts monic and every
/// root of `f_part` zero or transcendental over `k`.
pub fn strip_units(big_g: &UniPoly) -> Result<StripResult> {
    let l = lemma22_factor(big_g)?;
    let f_part = l.i.monic()?;
    let unit_part = big_g.exact_div(&f_part)?.monic()?;
    Ok(StripResult { f_part, unit_part })
}

/// `dim_K K (x) k[x]_(x) / (G)`.
pub fn local_quotient_dim(big_g: &UniPoly) -> Result<usize> {
    Ok(strip_units(big_g)?.f_part.deg())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qq() -> Domain {
        Domain::rationals()
    }

    fn fam(f: &UniPoly) -> MonicFamily {
        MonicFamily::from_poly(f).unwrap()
    }

    fn qu() -> (Domain, Elem) {
        let d: Domain = "QQ(u)".parse().unwrap();
        let u = d.var("u").unwrap();
        (d, u)
    }

    #[test]
    fn shells_cover_the_grid() {
        let mut all: Vec<Vec<usize>> = (0..3).flat_map(|l| grid_shell(2, l)).collect();
        assert_eq!(all.len(), 9);
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 9);
        let seq: Vec<Elem> = (0..5).map(|i| sequence_elem(&qq(), i)).collect();
        assert_eq!(seq, [0, 1, -1, 2, -2].map(|v| qq().from_i64(v)));
    }

    #[test]
    fn base_field_examples() {
        let q = qq();
        let v = check_family(&fam(&UniPoly::from_ints(&q, &[-1, 1]))).unwrap();
        assert_eq!(v.status, Status::Bad);
        assert_eq!(v.witness.as_ref().unwrap().q, UniPoly::from_ints(&q, &[-1, 1]));
        assert!(verify_witness(&fam(&UniPoly::from_ints(&q, &[-1, 1])), &v));
        let v = check_family(&fam(&UniPoly::from_ints(&q, &[0, 0, 0, 1]))).unwrap();
        assert_eq!(v.status, Status::Good);
        let f = fam(&UniPoly::from_ints(&q, &[2, -3, 1]));
        let v = check_family(&f).unwrap();
        assert_eq!(v.witness.as_ref().unwrap().q, UniPoly::from_ints(&q, &[-1, 1]));
        assert!(v.witness.unwrap().norm.is_zero());
    }

    #[test]
    fn polynomial_ring_examples() {
        let d: Domain = "QQ[u]".parse().unwrap();
        let u = d.var("u").unwrap();
        let f = fam(&UniPoly::linear(&u));
        let v = check_family(&f).unwrap();
        assert_eq!(v.status, Status::Bad);
        assert!(verify_witness(&f, &v));
        let w = v.witness.unwrap();
        assert_eq!(w.point, Some(vec![qq().one()]));
        assert_eq!(w.norm, &u - &d.one());
        let f = fam(&UniPoly::from_ints(&d, &[0, 0, 1]));
        assert!(check_family(&f).unwrap().is_good());
    }

    #[test]
    fn polynomial_ring_over_small_field() {
        // u^2 + u vanishes on GF(2), so the residue point comes from GF(4)
        let d: Domain = "GF(2)[u]".parse().unwrap();
        let u = d.var("u").unwrap();
        let f = fam(&UniPoly::linear(&(&(&u * &u) + &u)));
        let v = check_family(&f).unwrap();
        assert_eq!(v.status, Status::Bad);
        assert!(verify_witness(&f, &v));
        let w = v.witness.unwrap();
        assert_eq!(w.q, UniPoly::from_ints(&Domain::prime_field(2).unwrap(), &[1, 1]));
        assert_eq!(w.point.unwrap()[0].domain().to_string(), "GF(2^2)");
    }

    #[test]
    fn function_field_examples() {
        let (d, u) = qu();
        let v = check_family(&fam(&UniPoly::linear(&u))).unwrap();
        assert!(v.is_good());
        let f = fam(&UniPoly::new(&d, vec![u.clone(), -(&d.one() + &u), d.one()]));
        let v = check_family(&f).unwrap();
        assert_eq!(v.witness.as_ref().unwrap().q, UniPoly::from_ints(&qq(), &[-1, 1]));
        assert!(verify_witness(&f, &v));
        let f = fam(&UniPoly::new(&d, vec![-&u, d.zero(), d.one()]));
        assert!(check_family(&f).unwrap().is_good());
    }

    #[test]
    fn function_field_over_gf2() {
        // (x^2 + x + 1)(x + u) over GF(2)(u): the cubic witness survives
        let d: Domain = "GF(2)(u)".parse().unwrap();
        let u = d.var("u").unwrap();
        let q = UniPoly::from_ints(&d, &[1, 1, 1]);
        let f = fam(&(&q * &UniPoly::linear(&u)));
        let v = check_family(&f).unwrap();
        assert_eq!(v.status, Status::Bad);
        assert_eq!(v.witness.as_ref().unwrap().q.deg(), 2);
        assert!(verify_witness(&f, &v));
    }

    #[test]
    fn extension_field_examples() {
        let d = Domain::finite_field(2, 2).unwrap();
        let w = d.var("y").unwrap();
        let f = fam(&UniPoly::linear(&w));
        let v = check_family(&f).unwrap();
        let f2 = Domain::prime_field(2).unwrap();
        assert_eq!(v.witness.as_ref().unwrap().q, UniPoly::from_ints(&f2, &[1, 1, 1]));
        assert!(verify_witness(&f, &v));
    }

    #[test]
    fn lemma22_examples() {
        let (d, u) = qu();
        let g = &UniPoly::from_ints(&d, &[-1, 1]) * &UniPoly::linear(&u);
        let l = lemma22_factor(&g).unwrap();
        assert_eq!(l.g, UniPoly::from_ints(&qq(), &[-1, 1]));
        assert_eq!(l.i, UniPoly::linear(&u));
        assert!(l.h.is_one());

        let f4 = Domain::finite_field(2, 2).unwrap();
        let w = f4.var("y").unwrap();
        let l = lemma22_factor(&UniPoly::linear(&w)).unwrap();
        assert_eq!(l.g, UniPoly::from_ints(&Domain::prime_field(2).unwrap(), &[1, 1, 1]));
        assert!(l.i.is_one());
        assert_eq!(l.h, UniPoly::linear(&(&w * &w)));

        let xm = UniPoly::from_ints(&d, &[0, 0, 0, 1]);
        let l = lemma22_factor(&xm).unwrap();
        assert!(l.g.is_one() && l.h.is_one());
        assert_eq!(l.i, xm);
    }

    #[test]
    fn strip_examples() {
        let q = qq();
        let s = strip_units(&UniPoly::from_ints(&q, &[0, 0, -1, 1])).unwrap();
        assert_eq!(s.f_part, UniPoly::from_ints(&q, &[0, 0, 1]));
        assert_eq!(s.unit_part, UniPoly::from_ints(&q, &[-1, 1]));
        let (d, u) = qu();
        let g = &UniPoly::x(&d) * &UniPoly::linear(&u);
        let s = strip_units(&g).unwrap();
        assert_eq!(s.f_part, g);
        assert!(s.unit_part.is_one());
        let cube = UniPoly::from_ints(&q, &[-2, 1]).pow(3);
        let s = strip_units(&cube).unwrap();
        assert!(s.f_part.is_one());
        assert_eq!(s.unit_part, cube);
        let s = strip_units(&UniPoly::from_ints(&q, &[0, -6, 3])).unwrap();
        assert_eq!((s.f_part, s.unit_part), (UniPoly::x(&q), UniPoly::from_ints(&q, &[-2, 1])));
    }

    #[test]
    fn quotient_dims() {
        let q = qq();
        assert_eq!(local_quotient_dim(&UniPoly::from_ints(&q, &[-1, 1])).unwrap(), 0);
        assert_eq!(local_quotient_dim(&UniPoly::from_ints(&q, &[0, 0, 0, 0, 1])).unwrap(), 4);
        let (d, u) = qu();
        let g = &UniPoly::from_ints(&d, &[-1, 1]) * &UniPoly::linear(&u);
        assert_eq!(local_quotient_dim(&g).unwrap(), 1);
        let r: Domain = "QQ[u]".parse().unwrap();
        assert!(matches!(local_quotient_dim(&UniPoly::x(&r)), Err(Error::UnsupportedDomain { .. })));
    }
}
