//! Arithmetic in `GF(p^r) = GF(p)[y] / (m(y))`.

use super::{factor, inv_mod, mul_mod, Domain, UniPoly};
use crate::error::{Error, Result};

/// A finite extension of a prime field, elements stored as coefficient
/// vectors of length `< r` with trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtField {
    pub(crate) base: Domain,
    pub(crate) p: u64,
    modulus: Vec<u64>,
}

impl ExtField {
    pub(crate) fn new(base: Domain, modulus: Vec<u64>) -> ExtField {
        let p = base.characteristic();
        ExtField { base, p, modulus }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Monic modulus, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn base(&self) -> &Domain {
        &self.base
    }

    pub(crate) fn constant(&self, c: u64) -> Vec<u64> {
        let c = c % self.p;
        if c == 0 {
            Vec::new()
        } else {
            vec![c]
        }
    }

    /// Reduce an arbitrary coefficient vector modulo `p` and the modulus.
    pub(crate) fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        let p = self.p;
        for c in v.iter_mut() {
            *c %= p;
        }
        let r = self.degree();
        while v.len() > r {
            let lead = v.pop().unwrap();
            if lead != 0 {
                let shift = v.len() - r;
                for (i, &m) in self.modulus[..r].iter().enumerate() {
                    let t = mul_mod(lead, m, p);
                    v[shift + i] = (v[shift + i] + p - t) % p;
                }
            }
        }
        trim(&mut v);
        v
    }

    pub(crate) fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut out = vec![0; a.len().max(b.len())];
        for (i, o) in out.iter_mut().enumerate() {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            *o = ((x as u128 + y as u128) % p as u128) as u64;
        }
        trim(&mut out);
        out
    }

    pub(crate) fn neg(&self, a: &[u64]) -> Vec<u64> {
        a.iter().map(|&c| if c == 0 { 0 } else { self.p - c }).collect()
    }

    pub(crate) fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let p = self.p;
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                let t = mul_mod(x, y, p);
                out[i + j] = ((out[i + j] as u128 + t as u128) % p as u128) as u64;
            }
        }
        self.reduce(out)
    }

    /// Inverse by the extended Euclidean algorithm over `GF(p)`.
    pub(crate) fn inv(&self, a: &[u64]) -> Option<Vec<u64>> {
        if a.is_empty() {
            return None;
        }
        let p = self.p;
        // s0 * a == r0 and s1 * a == r1 (mod m)
        let mut r0 = self.modulus.clone();
        let mut r1 = a.to_vec();
        let mut s0: Vec<u64> = Vec::new();
        let mut s1: Vec<u64> = vec![1];
        while !r1.is_empty() {
            let (q, r) = divrem_fp(&r0, &r1, p);
            let qs = mul_fp(&q, &s1, p);
            let s2 = sub_fp(&s0, &qs, p);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant since the modulus is irreducible
        if r0.len() != 1 {
            return None;
        }
        let c = inv_mod(r0[0], p)?;
        let scaled: Vec<u64> = s0.iter().map(|&x| mul_mod(x, c, p)).collect();
        Some(self.reduce(scaled))
    }

    /// `a^p`, the Frobenius image.
    pub(crate) fn frobenius(&self, a: &[u64]) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut base = a.to_vec();
        let mut e = self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        if a.is_empty() {
            Vec::new()
        } else {
            acc
        }
    }
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn sub_fp(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = ((x as u128 + p as u128 - y as u128) % p as u128) as u64;
    }
    trim(&mut out);
    out
}

fn mul_fp(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = ((out[i + j] as u128 + mul_mod(x, y, p) as u128) % p as u128) as u64;
        }
    }
    trim(&mut out);
    out
}

fn divrem_fp(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = inv_mod(*b.last().unwrap(), p).expect("nonzero leading coefficient");
    let mut q = vec![0u64; r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = mul_mod(*r.last().unwrap(), lead_inv, p);
        q[shift] = c;
        for (i, &bi) in b.iter().enumerate() {
            let t = mul_mod(c, bi, p);
            r[shift + i] = (r[shift + i] + p - t) % p;
        }
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

/// Lexicographically smallest monic irreducible polynomial of degree `r`
/// over `GF(p)`, comparing coefficient vectors from the constant term up.
pub(crate) fn smallest_irreducible(p: u64, r: usize) -> Result<Vec<u64>> {
    let base = Domain::prime_field(p)?;
    let mut digits = vec![0u64; r];
    loop {
        let mut coeffs = digits.clone();
        coeffs.push(1);
        if coeffs[0] != 0 {
            let poly = UniPoly::new(&base, coeffs.iter().map(|&c| base.from_u64(c)).collect());
            if factor::is_irreducible(&poly)? {
                return Ok(coeffs);
            }
        }
        // increment with digits[0] most significant
        let mut pos = r;
        loop {
            if pos == 0 {
                return Err(Error::InvalidDomain(format!(
                    "no irreducible polynomial of degree {r} over GF({p})"
                )));
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < p {
                break;
            }
            digits[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, r: usize) -> ExtField {
        Domain::finite_field(p, r).unwrap().ext().unwrap().clone()
    }

    #[test]
    fn every_nonzero_element_inverts() {
        for (p, r) in [(2, 3), (3, 2), (5, 2), (2, 4)] {
            let e = gf(p, r);
            let d = Domain::finite_field(p, r).unwrap();
            let q = p.pow(r as u32);
            for k in 1..q {
                let a = d.finite_elem(&k.into());
                let v = match a.value() {
                    super::super::Value::Ext(v) => v.clone(),
                    _ => unreachable!(),
                };
                let inv = e.inv(&v).unwrap();
                assert_eq!(e.mul(&v, &inv), vec![1], "GF({p}^{r}) element {k}");
            }
        }
    }

    #[test]
    fn frobenius_has_order_r() {
        let e = gf(3, 3);
        let a = vec![2, 1, 1];
        let mut b = a.clone();
        for _ in 0..3 {
            b = e.frobenius(&b);
        }
        assert_eq!(a, b);
        assert_ne!(e.frobenius(&a), a);
    }

    #[test]
    fn modulus_choices() {
        // x^3 + x^2 + 1 precedes x^3 + x + 1 when the constant term leads
        assert_eq!(gf(2, 3).modulus(), &[1, 0, 1, 1]);
        assert_eq!(gf(5, 2).modulus(), &[1, 1, 1]);
    }
}
