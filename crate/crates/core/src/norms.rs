//! Symmetrizing operators `s_{F,i}(G(t))` computed from the multiplication
//! operator of `G` on `A[x]/(F)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::rings::{Domain, Elem, UniPoly};

/// `F(x) = x^n - u_1 x^(n-1) + ... + (-1)^n u_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonicFamily {
    domain: Domain,
    u: Vec<Elem>,
}

impl MonicFamily {
    pub fn new(domain: &Domain, u: Vec<Elem>) -> Result<MonicFamily> {
        if u.is_empty() {
            return Err(Error::ArityMismatch { expected: 1, got: 0 });
        }
        if let Some(bad) = u.iter().find(|c| !domain.can_embed(c.domain())) {
            return Err(Error::DomainMismatch(bad.domain().to_string(), domain.to_string()));
        }
        let u = u.iter().map(|c| domain.embed(c)).collect();
        Ok(MonicFamily { domain: domain.clone(), u })
    }

    /// Read `u` off a monic polynomial of positive degree.
    pub fn from_poly(f: &UniPoly) -> Result<MonicFamily> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !f.is_monic() || f.deg() == 0 {
            return Err(Error::NotMonic(f.to_string()));
        }
        let n = f.deg();
        let u = (1..=n)
            .map(|i| {
                let c = f.coeff(n - i);
                if i % 2 == 1 { -&c } else { c }
            })
            .collect();
        Ok(MonicFamily { domain: f.domain().clone(), u })
    }

    pub fn n(&self) -> usize {
        self.u.len()
    }

    pub fn u(&self) -> &[Elem] {
        &self.u
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn to_poly(&self) -> UniPoly {
        let n = self.n();
        let mut coeffs = vec![self.domain.zero(); n + 1];
        coeffs[n] = self.domain.one();
        for (i, ui) in self.u.iter().enumerate() {
            let i = i + 1;
            coeffs[n - i] = if i % 2 == 1 { -ui } else { ui.clone() };
        }
        UniPoly::new(&self.domain, coeffs)
    }

    fn check(&self, g: &UniPoly) -> Result<()> {
        if g.domain().same(&self.domain) {
            Ok(())
        } else {
            Err(Error::DomainMismatch(g.domain().to_string(), self.domain.to_string()))
        }
    }
}

impl fmt::Display for MonicFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// `s = [s_{F,1}(G(t)), .., s_{F,n}(G(t))]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormCoeffs {
    pub n: usize,
    pub s: Vec<Elem>,
}

impl NormCoeffs {
    /// The top coefficient `s_{F,n}(G(t))`.
    pub fn norm(&self) -> &Elem {
        &self.s[self.n - 1]
    }

    /// `s_i` with `s_0 = 1`.
    pub fn get(&self, i: usize, domain: &Domain) -> Elem {
        if i == 0 {
            domain.one()
        } else {
            self.s[i - 1].clone()
        }
    }
}

/// Matrix of multiplication by `G` on `A[x]/(F)` in the basis `1, x, .., x^(n-1)`.
/// `rows[i][j]` is the coefficient of `x^i` in `G x^j mod F`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MulMatrix {
    pub rows: Vec<Vec<Elem>>,
}

impl MulMatrix {
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.rows[i][j]
    }
}

pub fn mul_matrix(family: &MonicFamily, g: &UniPoly) -> Result<MulMatrix> {
    family.check(g)?;
    let d = family.domain();
    let n = family.n();
    let f = family.to_poly();
    let x = UniPoly::x(d);
    let mut rows = vec![vec![d.zero(); n]; n];
    let mut col = g.rem(&f)?;
    for j in 0..n {
        for (i, row) in rows.iter_mut().enumerate() {
            row[j] = col.coeff(i);
        }
        col = (&col * &x).rem(&f)?;
    }
    Ok(MulMatrix { rows })
}

/// Coefficients `[1, c_1, .., c_n]` of `det(lambda I - M)` by Berkowitz's
/// division-free algorithm.
pub fn berkowitz_charpoly(m: &MulMatrix, domain: &Domain) -> Vec<Elem> {
    let n = m.n();
    if n == 0 {
        return vec![domain.one()];
    }
    let mut vec = vec![domain.one(), -m.get(n - 1, n - 1)];
    for k in (0..n - 1).rev() {
        // principal submatrix on indices k..n, split as [[a, R], [C, A]]
        let size = n - k;
        let a = m.get(k, k);
        let mut diags = vec![domain.one(), -a];
        let mut v: Vec<Elem> = (k + 1..n).map(|i| m.get(i, k).clone()).collect();
        for step in 0..size - 1 {
            let rv = (k + 1..n)
                .zip(&v)
                .fold(domain.zero(), |acc, (j, vj)| &acc + &(m.get(k, j) * vj));
            diags.push(-rv);
            if step + 2 < size {
                v = (k + 1..n)
                    .map(|i| {
                        (k + 1..n)
                            .zip(&v)
                            .fold(domain.zero(), |acc, (j, vj)| &acc + &(m.get(i, j) * vj))
                    })
                    .collect();
            }
        }
        // Toeplitz (size+1) x size lower-triangular matrix times vec
        let next = (0..=size)
            .map(|i| {
                (0..size.min(i + 1)).fold(domain.zero(), |acc, j| &acc + &(&diags[i - j] * &vec[j]))
            })
            .collect();
        vec = next;
    }
    vec
}

/// `s_{F,i}(G(t))` for `i = 1..n`.
pub fn norm_coeffs(family: &MonicFamily, g: &UniPoly) -> Result<NormCoeffs> {
    let m = mul_matrix(family, g)?;
    let c = berkowitz_charpoly(&m, family.domain());
    let s = c
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(i, ci)| if i % 2 == 1 { -ci } else { ci })
        .collect();
    Ok(NormCoeffs { n: family.n(), s })
}

/// `sum_i (-1)^i s_i G^(n-i)` for `i = 0..=top`, each power taken as
/// `G^(top-i)`.
fn alternating_sum(s: &NormCoeffs, g: &UniPoly, top: usize, modulus: Option<&UniPoly>) -> Result<UniPoly> {
    let d = g.domain();
    let mut acc = UniPoly::zero(d);
    for i in 0..=top {
        let c = s.get(i, d);
        let c = if i % 2 == 1 { -&c } else { c };
        // Horner in G
        acc = &(&acc * g) + &UniPoly::constant(d, c);
        if let Some(m) = modulus {
            acc = acc.rem(m)?;
        }
    }
    Ok(acc)
}

/// `H^u(x)` with `G^n - s_1 G^(n-1) + .. + (-1)^n s_n = H^u(x) F(x)`.
pub fn cofactor(family: &MonicFamily, g: &UniPoly) -> Result<UniPoly> {
    let s = norm_coeffs(family, g)?;
    let sum = alternating_sum(&s, g, family.n(), None)?;
    let (h, r) = sum.div_rem(&family.to_poly())?;
    assert!(r.is_zero(), "alternating norm sum not divisible by F: remainder {r}");
    Ok(h)
}

/// Inverse of `G` modulo `F`, of degree `< n`.
pub fn inverse_mod(family: &MonicFamily, g: &UniPoly) -> Result<UniPoly> {
    let s = norm_coeffs(family, g)?;
    let d = family.domain();
    let n = family.n();
    let top = s.norm();
    if !top.is_unit() {
        return Err(Error::NotAUnit(top.to_string()));
    }
    let f = family.to_poly();
    let gr = g.rem(&f)?;
    let bracket = alternating_sum(&s, &gr, n - 1, Some(&f))?;
    let signed = if n % 2 == 0 { -top.clone() } else { top.clone() };
    let check = (&gr * &bracket).rem(&f)?;
    assert!(
        check == UniPoly::constant(d, signed.clone()),
        "G * bracket = {check} mod F, expected {signed}"
    );
    let r = bracket.scale(&signed.inv()?);
    debug_assert!(r.degree().is_none_or(|k| k < n) && r.domain().same(d));
    Ok(r)
}
