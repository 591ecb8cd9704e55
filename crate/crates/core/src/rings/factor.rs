//! Univariate factorization over `QQ`, `GF(p)` and `GF(p^r)`.
//!
//! Finite fields: squarefree decomposition, distinct-degree splitting and
//! Cantor-Zassenhaus equal-degree splitting (trace map in characteristic 2).
//! Rationals: Yun's squarefree decomposition, rational-root extraction and
//! Kronecker's method for the remaining factors, capped at degree
//! [`KRONECKER_DEGREE_CAP`].

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Domain, DomainKind, Elem, UniPoly};
use crate::error::{Error, Result};

/// Largest degree of a root-free squarefree factor handed to Kronecker's
/// method over the rationals.
pub const KRONECKER_DEGREE_CAP: usize = 8;

/// `f = unit * prod(factor_i ^ multiplicity_i)` with monic, pairwise
/// distinct irreducible factors sorted by degree then coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Elem,
    pub factors: Vec<(UniPoly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> UniPoly {
        let d = self.unit.domain();
        self.factors
            .iter()
            .fold(UniPoly::constant(d, self.unit.clone()), |acc, (f, m)| &acc * &f.pow(*m))
    }

    /// Irreducible factors other than `x`.
    pub fn non_x_factors(&self) -> impl Iterator<Item = &(UniPoly, usize)> {
        self.factors.iter().filter(|(f, _)| !(f.deg() == 1 && f.coeff(0).is_zero()))
    }
}

/// Factor with the default seed 0.
pub fn factor_univariate(f: &UniPoly) -> Result<Factorization> {
    factor_univariate_seeded(f, 0)
}

/// Factor `f`; the seed drives the random splitting over finite fields.
/// Output order does not depend on the seed.
pub fn factor_univariate_seeded(f: &UniPoly, seed: u64) -> Result<Factorization> {
    let d = f.domain();
    let lc = f.lc().ok_or(Error::ZeroPolynomial)?.clone();
    let monic = f.monic()?;
    let mut factors: Vec<(UniPoly, usize)> = Vec::new();
    match d.kind() {
        DomainKind::PrimeField(_) | DomainKind::ExtField(_) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for (part, mult) in squarefree_finite(&monic)? {
                for (block, deg) in distinct_degree(&part)? {
                    for irr in equal_degree(&block, deg, &mut rng)? {
                        factors.push((irr, mult));
                    }
                }
            }
        }
        DomainKind::Rationals => {
            for (part, mult) in squarefree_char0(&monic)? {
                for irr in factor_squarefree_rational(&part)? {
                    factors.push((irr, mult));
                }
            }
        }
        _ => {
            return Err(Error::UnsupportedDomain {
                domain: d.to_string(),
                operation: "factor_univariate",
            })
        }
    }
    factors.sort();
    Ok(Factorization { unit: lc, factors })
}

/// Irreducibility over `QQ` or a finite field. Constants are not irreducible.
pub fn is_irreducible(f: &UniPoly) -> Result<bool> {
    let n = match f.degree() {
        None | Some(0) => return Ok(false),
        Some(n) => n,
    };
    let d = f.domain();
    match d.kind() {
        DomainKind::PrimeField(_) | DomainKind::ExtField(_) => {
            // every reducible f has an irreducible factor of degree <= n/2
            let f = f.monic()?;
            let q = d.order().unwrap();
            let x = UniPoly::x(d);
            let mut h = x.clone();
            for _ in 1..=n / 2 {
                h = h.powmod(&q, &f)?;
                if !(&h - &x).gcd(&f)?.is_one() {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        DomainKind::Rationals => {
            let fac = factor_univariate(f)?;
            Ok(fac.factors.len() == 1 && fac.factors[0].1 == 1)
        }
        _ => Err(Error::UnsupportedDomain { domain: d.to_string(), operation: "is_irreducible" }),
    }
}

/// Squarefree decomposition of a monic polynomial over a finite field.
fn squarefree_finite(f: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
    let d = f.domain();
    let p = d.characteristic() as usize;
    let mut out = Vec::new();
    if f.deg() == 0 {
        return Ok(out);
    }
    let fp = f.derivative();
    let mut c = f.gcd(&fp)?;
    let mut w = f.exact_div(&c)?;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c)?;
        let fac = w.exact_div(&y)?;
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = c.exact_div(&w)?;
        i += 1;
    }
    if !c.is_one() {
        let root = pth_root(&c)?;
        for (g, m) in squarefree_finite(&root)? {
            out.push((g, m * p));
        }
    }
    Ok(out)
}

/// `g` with `g^p = f` when `f` only has exponents divisible by `p`.
fn pth_root(f: &UniPoly) -> Result<UniPoly> {
    let d = f.domain();
    let p = d.characteristic() as usize;
    // a -> a^(p^(r-1)) inverts the Frobenius on GF(p^r)
    let r = d.ext().map_or(1, |e| e.degree());
    let root_exp = BigUint::from(p).pow(r as u32 - 1);
    let coeffs: Vec<Elem> = (0..=f.deg() / p)
        .map(|i| f.coeff(i * p).pow_big(&root_exp))
        .collect();
    Ok(UniPoly::new(d, coeffs))
}

/// Split a squarefree monic polynomial into products of irreducibles of
/// equal degree, returned as `(product, degree)`.
fn distinct_degree(f: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
    let d = f.domain();
    let q = d.order().unwrap();
    let x = UniPoly::x(d);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut i = 1;
    while rest.deg() >= 2 * i {
        h = h.powmod(&q, &rest)?;
        let g = (&h - &x).gcd(&rest)?;
        if !g.is_one() {
            rest = rest.exact_div(&g)?;
            h = h.rem(&rest)?;
            out.push((g, i));
        }
        i += 1;
    }
    if rest.deg() > 0 {
        let n = rest.deg();
        out.push((rest, n));
    }
    Ok(out)
}

/// Cantor-Zassenhaus splitting of a product of distinct irreducibles of
/// degree `deg`.
fn equal_degree(f: &UniPoly, deg: usize, rng: &mut ChaCha8Rng) -> Result<Vec<UniPoly>> {
    let n = f.deg();
    if n == deg {
        return Ok(vec![f.clone()]);
    }
    let d = f.domain();
    let q = d.order().unwrap();
    let p = d.characteristic();
    loop {
        let a = UniPoly::new(d, (0..n).map(|_| d.random_finite_elem(rng)).collect());
        if a.deg() == 0 {
            continue;
        }
        let b = if p == 2 {
            // trace map a + a^2 + ... + a^(2^(k*deg - 1)) with q = 2^k
            let k = (q.bits() - 1) as usize;
            let mut t = a.rem(f)?;
            let mut acc = t.clone();
            for _ in 1..k * deg {
                t = (&t * &t).rem(f)?;
                acc = &acc + &t;
            }
            acc
        } else {
            let e = (q.pow(deg as u32) - BigUint::one()) / BigUint::from(2u32);
            &a.powmod(&e, f)? - &UniPoly::one(d)
        };
        let g = b.gcd(f)?;
        if g.deg() > 0 && g.deg() < n {
            let h = f.exact_div(&g)?;
            let mut out = equal_degree(&g, deg, rng)?;
            out.extend(equal_degree(&h, deg, rng)?);
            return Ok(out);
        }
    }
}

/// Yun's squarefree decomposition in characteristic 0 (monic input).
fn squarefree_char0(f: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
    let mut out = Vec::new();
    if f.deg() == 0 {
        return Ok(out);
    }
    let fp = f.derivative();
    let a0 = f.gcd(&fp)?;
    let mut b = f.exact_div(&a0)?;
    let mut c = fp.exact_div(&a0)?;
    let mut dd = &c - &b.derivative();
    let mut i = 1;
    while b.deg() > 0 {
        let a = b.gcd(&dd)?;
        b = b.exact_div(&a)?;
        c = dd.exact_div(&a)?;
        dd = &c - &b.derivative();
        if a.deg() > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    Ok(out)
}

/// Irreducible monic factors of a squarefree monic polynomial over `QQ`.
fn factor_squarefree_rational(f: &UniPoly) -> Result<Vec<UniPoly>> {
    let qq = f.domain().clone();
    let mut out = Vec::new();
    let mut rest = f.clone();
    if rest.deg() >= 1 && rest.coeff(0).is_zero() {
        out.push(UniPoly::x(&qq));
        rest = rest.exact_div(&UniPoly::x(&qq))?;
    }
    // rational roots
    let ints = integer_coeffs(&rest);
    if rest.deg() >= 1 {
        let a0 = ints[0].abs();
        let an = ints[ints.len() - 1].abs();
        let nums = divisors(&a0);
        let dens = divisors(&an);
        'search: for p in &nums {
            for q in &dens {
                for sign in [1, -1] {
                    if rest.deg() == 0 {
                        break 'search;
                    }
                    let root = BigRational::new(BigInt::from(sign) * p, q.clone());
                    let r = qq.from_rational(&root)?;
                    if rest.eval(&r).is_zero() {
                        let lin = UniPoly::linear(&r);
                        rest = rest.exact_div(&lin)?;
                        out.push(lin);
                    }
                }
            }
        }
    }
    if rest.deg() >= 2 {
        if rest.deg() > KRONECKER_DEGREE_CAP {
            return Err(Error::DegreeCapExceeded { degree: rest.deg(), cap: KRONECKER_DEGREE_CAP });
        }
        kronecker(&rest, 2, &mut out)?;
    } else if rest.deg() == 1 {
        out.push(rest);
    }
    Ok(out)
}

/// Primitive integer coefficients of `f` (up to a rational scalar).
fn integer_coeffs(f: &UniPoly) -> Vec<BigInt> {
    let rats: Vec<BigRational> = f.coeffs().iter().map(|c| c.as_rational().unwrap().clone()).collect();
    let lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rats.iter().map(|r| (r * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &content).collect()
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Kronecker's method: find the irreducible factors of a squarefree `f`
/// with no factors of degree below `min_deg`.
fn kronecker(f: &UniPoly, min_deg: usize, out: &mut Vec<UniPoly>) -> Result<()> {
    let n = f.deg();
    for s in min_deg..=n / 2 {
        if let Some(h) = kronecker_find(f, s)? {
            out.push(h.monic()?);
            let rest = f.exact_div(&h)?;
            return kronecker(&rest.monic()?, s, out);
        }
    }
    out.push(f.monic()?);
    Ok(())
}

/// A factor of `f` of degree exactly `s`, if one exists.
fn kronecker_find(f: &UniPoly, s: usize) -> Result<Option<UniPoly>> {
    let qq = f.domain().clone();
    let ints = integer_coeffs(f);
    let fz = UniPoly::new(&qq, ints.iter().map(|c| qq.from_bigint(c)).collect());
    let lead = ints.last().unwrap().clone();
    // candidate points 0, 1, -1, 2, -2, ... ranked by divisor count
    let mut pool: Vec<(usize, i64, BigInt)> = Vec::new();
    let mut k: i64 = 0;
    while pool.len() < 2 * (s + 1) + 4 {
        let a = if k % 2 == 0 { -(k / 2) } else { k / 2 + 1 };
        k += 1;
        let v = fz.eval(&qq.from_i64(a)).as_rational().unwrap().to_integer();
        if v.is_zero() {
            continue;
        }
        let count = divisors(&v).len();
        pool.push((count, a, v));
    }
    pool.sort_by(|x, y| x.0.cmp(&y.0).then(x.1.abs().cmp(&y.1.abs())).then(x.1.cmp(&y.1)));
    pool.truncate(s + 1);
    let points: Vec<i64> = pool.iter().map(|p| p.1).collect();
    let basis = lagrange_basis(&qq, &points);
    let choices: Vec<Vec<BigInt>> = pool
        .iter()
        .enumerate()
        .map(|(j, (_, _, v))| {
            let ds = divisors(v);
            if j == 0 {
                ds
            } else {
                ds.iter().flat_map(|d| [d.clone(), -d]).collect()
            }
        })
        .collect();
    let mut idx = vec![0usize; choices.len()];
    loop {
        let mut h = UniPoly::zero(&qq);
        for (j, b) in basis.iter().enumerate() {
            h = &h + &b.scale(&qq.from_bigint(&choices[j][idx[j]]));
        }
        if h.degree() == Some(s) && h.coeffs().iter().all(|c| c.as_rational().unwrap().is_integer()) {
            let hl = h.lc().unwrap().as_rational().unwrap().to_integer();
            if (&lead % &hl).is_zero() && f.exact_div(&h).is_ok() {
                return Ok(Some(h));
            }
        }
        // odometer increment
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return Ok(None);
            }
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn lagrange_basis(qq: &Domain, points: &[i64]) -> Vec<UniPoly> {
    points
        .iter()
        .enumerate()
        .map(|(j, &aj)| {
            let mut num = UniPoly::one(qq);
            let mut den = qq.one();
            for (k, &ak) in points.iter().enumerate() {
                if k != j {
                    num = &num * &UniPoly::linear(&qq.from_i64(ak));
                    den = &den * &qq.from_i64(aj - ak);
                }
            }
            num.scale(&den.inv().unwrap())
        })
        .collect()
}
