//! Square-free decomposition, radicals, and p-th roots.
//!
//! The radical rad(a) is computed as the product of the square-free parts of
//! a, which avoids irreducible factorization entirely. Characteristic 0 uses
//! Yun's algorithm; characteristic p peels gcd(a, a') and extracts p-th power
//! content through the inverse Frobenius when the residual has zero
//! derivative.

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::poly::Poly;

/// `unit * prod(factor_i ^ mult_i)` reconstructs the input exactly.
/// Factors are monic, square-free, nonconstant, pairwise coprime, and sorted
/// by strictly increasing multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareFreeDecomposition {
    pub unit: FieldElem,
    pub parts: Vec<(Poly, usize)>,
}

impl SquareFreeDecomposition {
    /// Multiplies the decomposition back together.
    pub fn reconstruct(&self, field: crate::field::FieldDesc) -> Poly {
        let mut acc = Poly::constant(field, self.unit.clone());
        for (factor, mult) in &self.parts {
            acc = acc.mul(&factor.pow(*mult));
        }
        acc
    }
}

/// Extracts the p-th root of a polynomial with vanishing derivative over a
/// prime field. Frobenius is the identity on F_p, so the root's coefficient
/// of `t^i` is the input's coefficient of `t^{p*i}`.
pub fn pth_root(a: &Poly) -> Result<Poly> {
    let fd = a.field();
    let p = fd.characteristic();
    if p == 0 {
        return Err(Error::NotCharP);
    }
    if !a.derivative().is_zero() {
        return Err(Error::DerivativeNonzero);
    }
    let p = p as usize;
    let coeffs = a
        .coeffs()
        .iter()
        .step_by(p)
        .cloned()
        .collect::<Vec<_>>();
    Ok(Poly::new(fd, coeffs))
}

fn merge_part(parts: &mut Vec<(Poly, usize)>, factor: Poly, mult: usize) {
    if factor.is_constant() {
        return;
    }
    // parts at equal multiplicity merge by multiplication
    if let Some(entry) = parts.iter_mut().find(|(_, m)| *m == mult) {
        entry.0 = entry.0.mul(&factor);
    } else {
        parts.push((factor, mult));
    }
}

// Yun's algorithm; requires characteristic 0.
fn decompose_char0(a: &Poly) -> Result<Vec<(Poly, usize)>> {
    let mut parts = Vec::new();
    let d = a.derivative();
    let g = a.gcd_monic(&d)?;
    let mut b = a.div_exact(&g)?;
    let mut c = d.div_exact(&g)?;
    let mut i = 1;
    loop {
        let diff = c.sub(&b.derivative());
        if diff.is_zero() {
            merge_part(&mut parts, b, i);
            break;
        }
        let factor = b.gcd_monic(&diff)?;
        merge_part(&mut parts, factor.clone(), i);
        b = b.div_exact(&factor)?;
        c = diff.div_exact(&factor)?;
        i += 1;
    }
    Ok(parts)
}

// Musser-style peeling for characteristic p, with p-th power content
// handled by recursion through pth_root.
fn decompose_charp(a: &Poly, p: usize) -> Result<Vec<(Poly, usize)>> {
    if a.is_constant() {
        return Ok(Vec::new());
    }
    let d = a.derivative();
    if d.is_zero() {
        let root = pth_root(a)?;
        let inner = decompose_charp(&root.monic()?, p)?;
        let mut parts = Vec::new();
        for (factor, mult) in inner {
            merge_part(&mut parts, factor, mult * p);
        }
        return Ok(parts);
    }
    let mut parts = Vec::new();
    let mut c = a.gcd_monic(&d)?;
    let mut w = a.div_exact(&c)?;
    let mut i = 1;
    while !w.is_constant() {
        let y = w.gcd_monic(&c)?;
        let z = w.div_exact(&y)?;
        merge_part(&mut parts, z, i);
        w = y;
        c = c.div_exact(&w)?;
        i += 1;
    }
    // c now carries exactly the factors whose multiplicity is divisible by p
    if !c.is_constant() {
        for (factor, mult) in decompose_charp(&c, p)? {
            merge_part(&mut parts, factor, mult);
        }
    }
    Ok(parts)
}

/// Square-free decomposition of a nonzero polynomial.
pub fn squarefree_decompose(a: &Poly) -> Result<SquareFreeDecomposition> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit = a.leading_coeff();
    let monic = a.monic()?;
    let mut parts = match a.field().characteristic() {
        0 => decompose_char0(&monic)?,
        p => decompose_charp(&monic, p as usize)?,
    };
    parts.sort_by_key(|(_, m)| *m);
    Ok(SquareFreeDecomposition { unit, parts })
}

/// The monic square-free part of `a`, with `rad(0) = rad(constant) = 1`.
pub fn radical(a: &Poly) -> Poly {
    let fd = a.field();
    if a.is_zero() || a.is_constant() {
        return Poly::one(fd);
    }
    let dec = squarefree_decompose(a).expect("nonzero by the guard above");
    let mut acc = Poly::one(fd);
    for (factor, _) in &dec.parts {
        acc = acc.mul(factor);
    }
    acc
}

/// Both `rad(a)` and `a / rad(a)` from a single decomposition.
pub fn radical_split(a: &Poly) -> Result<(Poly, Poly)> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let rad = radical(a);
    let quot = a.div_exact(&rad)?;
    Ok((rad, quot))
}

/// The exact quotient `a / rad(a)`.
pub fn div_radical(a: &Poly) -> Result<Poly> {
    Ok(radical_split(a)?.1)
}

/// True iff `a` equals its own radical up to a unit.
pub fn is_squarefree(a: &Poly) -> Result<bool> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if a.is_constant() {
        return Ok(true);
    }
    Ok(radical(a) == a.monic()?)
}
