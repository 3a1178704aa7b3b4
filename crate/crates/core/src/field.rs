//! Exact field arithmetic over the rationals and prime fields F_p.
//!
//! Rational elements are arbitrary-precision fractions kept in lowest terms
//! with positive denominator. Prime-field residues are fully reduced u64
//! values; the modulus is capped below 2^31 so products never overflow.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard cap on prime moduli; keeps residue products inside u64.
pub const MAX_MODULUS: u64 = (1 << 31) - 1;

/// Which exact field we are computing in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldDesc {
    Rationals,
    PrimeField { modulus: u64 },
}

/// An element of a [`FieldDesc`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElem {
    Rat(BigRational),
    Mod(u64),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldDesc {
    pub fn rationals() -> Self {
        FieldDesc::Rationals
    }

    /// Validates that `modulus` is a prime within the supported range.
    pub fn prime_field(modulus: u64) -> Result<Self> {
        if modulus > MAX_MODULUS {
            return Err(Error::ModulusTooLarge(modulus));
        }
        if !is_prime(modulus) {
            return Err(Error::NotPrime(modulus));
        }
        Ok(FieldDesc::PrimeField { modulus })
    }

    /// 0 for the rationals, p for F_p.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDesc::Rationals => 0,
            FieldDesc::PrimeField { modulus } => *modulus,
        }
    }

    pub fn zero(&self) -> FieldElem {
        match self {
            FieldDesc::Rationals => FieldElem::Rat(BigRational::zero()),
            FieldDesc::PrimeField { .. } => FieldElem::Mod(0),
        }
    }

    pub fn one(&self) -> FieldElem {
        match self {
            FieldDesc::Rationals => FieldElem::Rat(BigRational::one()),
            FieldDesc::PrimeField { .. } => FieldElem::Mod(1),
        }
    }

    /// The image of the integer `n` in this field.
    pub fn from_integer(&self, n: i64) -> FieldElem {
        match self {
            FieldDesc::Rationals => FieldElem::Rat(BigRational::from(BigInt::from(n))),
            FieldDesc::PrimeField { modulus } => {
                let p = *modulus as i128;
                let r = ((n as i128 % p) + p) % p;
                FieldElem::Mod(r as u64)
            }
        }
    }

    /// The exact fraction `num/den` in this field.
    pub fn from_fraction(&self, num: i64, den: i64) -> Result<FieldElem> {
        let n = self.from_integer(num);
        let d = self.from_integer(den);
        self.div(&n, &d)
    }

    pub fn add(&self, x: &FieldElem, y: &FieldElem) -> FieldElem {
        match (self, x, y) {
            (FieldDesc::Rationals, FieldElem::Rat(a), FieldElem::Rat(b)) => FieldElem::Rat(a + b),
            (FieldDesc::PrimeField { modulus }, FieldElem::Mod(a), FieldElem::Mod(b)) => {
                FieldElem::Mod((a + b) % modulus)
            }
            _ => panic!("field element mismatch"),
        }
    }

    pub fn sub(&self, x: &FieldElem, y: &FieldElem) -> FieldElem {
        self.add(x, &self.neg(y))
    }

    pub fn mul(&self, x: &FieldElem, y: &FieldElem) -> FieldElem {
        match (self, x, y) {
            (FieldDesc::Rationals, FieldElem::Rat(a), FieldElem::Rat(b)) => FieldElem::Rat(a * b),
            (FieldDesc::PrimeField { modulus }, FieldElem::Mod(a), FieldElem::Mod(b)) => {
                FieldElem::Mod(a * b % modulus)
            }
            _ => panic!("field element mismatch"),
        }
    }

    pub fn neg(&self, x: &FieldElem) -> FieldElem {
        match (self, x) {
            (FieldDesc::Rationals, FieldElem::Rat(a)) => FieldElem::Rat(-a),
            (FieldDesc::PrimeField { modulus }, FieldElem::Mod(a)) => {
                FieldElem::Mod(if *a == 0 { 0 } else { modulus - a })
            }
            _ => panic!("field element mismatch"),
        }
    }

    /// Multiplicative inverse; extended Euclid for prime fields.
    pub fn inv(&self, x: &FieldElem) -> Result<FieldElem> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match (self, x) {
            (FieldDesc::Rationals, FieldElem::Rat(a)) => Ok(FieldElem::Rat(a.recip())),
            (FieldDesc::PrimeField { modulus }, FieldElem::Mod(a)) => {
                // extended Euclid on (a, p) in signed arithmetic
                let (mut r0, mut r1) = (*a as i64, *modulus as i64);
                let (mut s0, mut s1) = (1i64, 0i64);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (s0, s1) = (s1, s0 - q * s1);
                }
                debug_assert_eq!(r0, 1);
                let p = *modulus as i64;
                Ok(FieldElem::Mod(((s0 % p + p) % p) as u64))
            }
            _ => panic!("field element mismatch"),
        }
    }

    pub fn div(&self, x: &FieldElem, y: &FieldElem) -> Result<FieldElem> {
        Ok(self.mul(x, &self.inv(y)?))
    }

    /// x^n by square-and-multiply.
    pub fn pow(&self, x: &FieldElem, n: u64) -> FieldElem {
        let mut acc = self.one();
        let mut base = x.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            n >>= 1;
        }
        acc
    }

    /// All elements of F_p in residue order. Errors on the rationals.
    pub fn elements(&self) -> Result<Vec<FieldElem>> {
        match self {
            FieldDesc::PrimeField { modulus } => {
                Ok((0..*modulus).map(FieldElem::Mod).collect())
            }
            FieldDesc::Rationals => Err(Error::NotFiniteField),
        }
    }
}

impl FieldElem {
    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rat(a) => a.is_zero(),
            FieldElem::Mod(a) => *a == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Rat(a) => a.is_one(),
            FieldElem::Mod(a) => *a == 1,
        }
    }

    /// Exact rational from big integers (rationals only).
    pub fn rational(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(FieldElem::Rat(BigRational::new(num, den)))
    }

    /// Numerator sign for rendering: true when the element prints with a
    /// leading minus. Prime-field residues are always nonnegative.
    pub fn is_negative(&self) -> bool {
        match self {
            FieldElem::Rat(a) => a.is_negative(),
            FieldElem::Mod(_) => false,
        }
    }

    /// The element with the sign stripped (identity over F_p).
    pub fn abs(&self) -> FieldElem {
        match self {
            FieldElem::Rat(a) => FieldElem::Rat(a.abs()),
            FieldElem::Mod(a) => FieldElem::Mod(*a),
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rat(a) => {
                if a.denom().is_one() {
                    write!(f, "{}", a.numer())
                } else {
                    write!(f, "{}/{}", a.numer(), a.denom())
                }
            }
            FieldElem::Mod(a) => write!(f, "{a}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_validation() {
        assert!(FieldDesc::prime_field(5).is_ok());
        assert_eq!(FieldDesc::prime_field(6), Err(Error::NotPrime(6)));
        assert_eq!(FieldDesc::prime_field(1), Err(Error::NotPrime(1)));
        assert_eq!(FieldDesc::prime_field(0), Err(Error::NotPrime(0)));
        assert!(FieldDesc::prime_field(2147483647).is_ok()); // 2^31 - 1 is prime
        assert_eq!(
            FieldDesc::prime_field(1 << 32),
            Err(Error::ModulusTooLarge(1 << 32))
        );
    }

    #[test]
    fn characteristics() {
        assert_eq!(FieldDesc::rationals().characteristic(), 0);
        assert_eq!(FieldDesc::prime_field(7).unwrap().characteristic(), 7);
        assert_eq!(FieldDesc::prime_field(2).unwrap().characteristic(), 2);
    }

    #[test]
    fn rational_arithmetic_canonical() {
        let q = FieldDesc::rationals();
        let half = q.from_fraction(1, 2).unwrap();
        let third = q.from_fraction(1, 3).unwrap();
        let sum = q.add(&half, &third);
        assert_eq!(sum, q.from_fraction(5, 6).unwrap());
        // canonical: reduced, positive denominator
        if let FieldElem::Rat(r) = &sum {
            assert!(r.denom() > &BigInt::from(0));
            assert_eq!(r.numer().clone(), BigInt::from(5));
        }
        let neg = q.from_fraction(2, -4).unwrap();
        assert_eq!(neg, q.from_fraction(-1, 2).unwrap());
    }

    #[test]
    fn prime_field_inverse() {
        let f5 = FieldDesc::prime_field(5).unwrap();
        assert_eq!(f5.inv(&FieldElem::Mod(2)).unwrap(), FieldElem::Mod(3));
        assert_eq!(
            f5.div(&FieldElem::Mod(1), &FieldElem::Mod(0)),
            Err(Error::DivisionByZero)
        );
        // exhaustive inverse check over small primes
        for p in [2u64, 3, 5, 7] {
            let fp = FieldDesc::prime_field(p).unwrap();
            for a in 1..p {
                let x = FieldElem::Mod(a);
                let inv = fp.inv(&x).unwrap();
                assert!(fp.mul(&inv, &x).is_one());
            }
        }
    }

    #[test]
    fn field_axioms_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let fields = [
            FieldDesc::rationals(),
            FieldDesc::prime_field(2).unwrap(),
            FieldDesc::prime_field(5).unwrap(),
        ];
        for fd in &fields {
            for _ in 0..1000 {
                let sample = |rng: &mut rand_chacha::ChaCha8Rng| match fd {
                    FieldDesc::Rationals => {
                        let n = rng.gen_range(-20i64..=20);
                        let d = rng.gen_range(1i64..=9);
                        fd.from_fraction(n, d).unwrap()
                    }
                    FieldDesc::PrimeField { modulus } => {
                        FieldElem::Mod(rng.gen_range(0..*modulus))
                    }
                };
                let x = sample(&mut rng);
                let y = sample(&mut rng);
                let z = sample(&mut rng);
                assert_eq!(fd.add(&x, &y), fd.add(&y, &x));
                assert_eq!(fd.mul(&x, &y), fd.mul(&y, &x));
                assert_eq!(
                    fd.add(&fd.add(&x, &y), &z),
                    fd.add(&x, &fd.add(&y, &z))
                );
                assert_eq!(
                    fd.mul(&fd.mul(&x, &y), &z),
                    fd.mul(&x, &fd.mul(&y, &z))
                );
                assert_eq!(
                    fd.mul(&x, &fd.add(&y, &z)),
                    fd.add(&fd.mul(&x, &y), &fd.mul(&x, &z))
                );
            }
        }
    }
}
