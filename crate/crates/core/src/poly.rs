//! Dense univariate polynomials over an exact field.
//!
//! Coefficients are stored in ascending order of degree: `coeffs[i]` is the
//! coefficient of `t^i`. The zero polynomial is the empty coefficient vector;
//! the trailing coefficient of a nonzero polynomial is always nonzero.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldDesc, FieldElem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    field: FieldDesc,
    coeffs: Vec<FieldElem>,
}

impl Poly {
    /// Builds a polynomial from coefficients in ascending degree order,
    /// trimming trailing zeros.
    pub fn new(field: FieldDesc, mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last().is_some_and(FieldElem::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: FieldDesc) -> Self {
        Poly { field, coeffs: vec![] }
    }

    pub fn one(field: FieldDesc) -> Self {
        Poly::constant(field, field.one())
    }

    pub fn constant(field: FieldDesc, c: FieldElem) -> Self {
        Poly::new(field, vec![c])
    }

    /// The monomial `c * t^k`.
    pub fn monomial(field: FieldDesc, c: FieldElem, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero(field);
        }
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = c;
        Poly { field, coeffs }
    }

    /// The variable `t`.
    pub fn var(field: FieldDesc) -> Self {
        Poly::monomial(field, field.one(), 1)
    }

    /// Convenience constructor from small integer coefficients, ascending.
    pub fn from_ints(field: FieldDesc, coeffs: &[i64]) -> Self {
        Poly::new(
            field,
            coeffs.iter().map(|&c| field.from_integer(c)).collect(),
        )
    }

    pub fn field(&self) -> FieldDesc {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
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

    /// Degree with the zero polynomial mapped to `None` (minus infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn nat_degree(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> FieldElem {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_one()
    }

    fn assert_same_field(&self, other: &Poly) {
        assert_eq!(self.field, other.field, "polynomials over different fields");
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.assert_same_field(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.field.add(&self.coeff(i), &other.coeff(i)))
            .collect();
        Poly::new(self.field, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| self.field.neg(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.assert_same_field(other);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let prod = self.field.mul(a, b);
                coeffs[i + j] = self.field.add(&coeffs[i + j], &prod);
            }
        }
        Poly::new(self.field, coeffs)
    }

    pub fn scalar_mul(&self, c: &FieldElem) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.field);
        }
        Poly {
            field: self.field,
            coeffs: self.coeffs.iter().map(|a| self.field.mul(a, c)).collect(),
        }
    }

    pub fn pow(&self, n: usize) -> Poly {
        let mut acc = Poly::one(self.field);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Euclidean division: `self = q * quot + rem` with `deg rem < deg q`.
    pub fn divmod(&self, q: &Poly) -> Result<(Poly, Poly)> {
        self.assert_same_field(q);
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let fd = self.field;
        let dq = q.coeffs.len() - 1;
        let lead_inv = fd.inv(&q.leading_coeff())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dq {
            return Ok((Poly::zero(fd), self.clone()));
        }
        let mut quot = vec![fd.zero(); rem.len() - dq];
        let mut top = rem.len();
        while top > dq {
            let k = top - 1 - dq;
            let factor = fd.mul(&rem[top - 1], &lead_inv);
            if !factor.is_zero() {
                for (j, qc) in q.coeffs.iter().enumerate() {
                    let sub = fd.mul(&factor, qc);
                    rem[k + j] = fd.sub(&rem[k + j], &sub);
                }
            }
            quot[k] = factor;
            top -= 1;
        }
        Ok((Poly::new(fd, quot), Poly::new(fd, rem)))
    }

    /// Exact division; errors on nonzero remainder.
    pub fn div_exact(&self, q: &Poly) -> Result<Poly> {
        let (quot, rem) = self.divmod(q)?;
        if !rem.is_zero() {
            return Err(Error::DivisibilityFailure(format!(
                "{q} does not divide {self}"
            )));
        }
        Ok(quot)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.divmod(self).map(|(_, r)| r.is_zero()).unwrap_or(false)
    }

    /// Formal derivative; the integer scalar `i` is mapped into the field,
    /// so p-th power terms vanish in characteristic p.
    pub fn derivative(&self) -> Poly {
        let fd = self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| fd.mul(&fd.from_integer(i as i64), c))
            .collect();
        Poly::new(fd, coeffs)
    }

    /// Scales to leading coefficient 1. Errors on the zero polynomial.
    pub fn monic(&self) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let inv = self.field.inv(&self.leading_coeff())?;
        Ok(self.scalar_mul(&inv))
    }

    /// Monic greatest common divisor via the Euclidean algorithm.
    pub fn gcd_monic(&self, other: &Poly) -> Result<Poly> {
        self.assert_same_field(other);
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b)?;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// True iff the monic gcd is 1; two zero polynomials are not coprime.
    pub fn is_coprime(&self, other: &Poly) -> bool {
        match self.gcd_monic(other) {
            Ok(g) => g.is_one(),
            Err(_) => false,
        }
    }

    /// Substitutes `t^p` for `t`: returns `self(t^p)`.
    pub fn compose_t_pow(&self, p: usize) -> Poly {
        assert!(p >= 1, "exponent must be at least 1");
        if self.is_constant() || p == 1 {
            return self.clone();
        }
        let fd = self.field;
        let mut coeffs = vec![fd.zero(); (self.coeffs.len() - 1) * p + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * p] = c.clone();
        }
        Poly::new(fd, coeffs)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &FieldElem) -> FieldElem {
        let fd = self.field;
        let mut acc = fd.zero();
        for c in self.coeffs.iter().rev() {
            acc = fd.add(&fd.mul(&acc, x), c);
        }
        acc
    }
}

impl fmt::Display for Poly {
    /// Canonical descending-degree rendering, e.g. `t^3 - 2*t + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
