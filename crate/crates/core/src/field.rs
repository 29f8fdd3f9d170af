//! Exact coefficient fields: the rationals and prime fields `Z/p`.
//!
//! A [`Scalar`] carries its field with it, so mixing a rational with a
//! residue (or residues with different moduli) is detected at the point of
//! use. The `checked_*` methods report the mismatch as an error; the operator
//! impls treat it as a programming error and panic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};

/// Modulus of the default prime field.
pub const DEFAULT_PRIME: u32 = 32003;

/// Descriptor of a coefficient field.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    /// Builds a prime field, rejecting composite or tiny moduli.
    pub fn prime(p: u32) -> Result<Field> {
        if p < 2 || !is_prime(p) {
            return Err(AlgebraError::InvalidField(format!("{p} is not prime")));
        }
        if p > 1 << 31 {
            return Err(AlgebraError::InvalidField(format!("modulus {p} too large")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Prime {
                value: v.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    /// Maps a rational number into this field. Fails when the denominator
    /// vanishes modulo `p`.
    pub fn from_rational(self, q: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rational => Ok(Scalar::Rational(q.clone())),
            Field::Prime(p) => {
                let pm = BigInt::from(p);
                let num = q.numer().mod_floor(&pm).to_u32().unwrap();
                let den = q.denom().mod_floor(&pm).to_u32().unwrap();
                if den == 0 {
                    return Err(AlgebraError::InvalidField(format!(
                        "denominator {} vanishes modulo {p}",
                        q.denom()
                    )));
                }
                let value = (num as u64 * inv_mod(den, p) as u64 % p as u64) as u32;
                Ok(Scalar::Prime { value, modulus: p })
            }
        }
    }

    /// Number of elements, `None` for the rationals.
    pub fn size(self) -> Option<u64> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some(p as u64),
        }
    }

    /// Parses `q` or `fp:P`.
    pub fn parse(s: &str) -> Result<Field> {
        let s = s.trim();
        if s == "q" || s == "Q" || s == "rational" {
            return Ok(Field::Rational);
        }
        if let Some(p) = s.strip_prefix("fp:") {
            let p: u32 = p
                .trim()
                .parse()
                .map_err(|_| AlgebraError::InvalidField(format!("bad modulus in {s:?}")))?;
            return Field::prime(p);
        }
        Err(AlgebraError::InvalidField(format!("unknown field {s:?}")))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // a^(p-2) mod p
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    let m = p as u64;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    result as u32
}

/// An element of a [`Field`].
///
/// Rationals are kept reduced with positive denominator (guaranteed by
/// `BigRational`); residues lie in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    /// True when the printed form would carry a leading minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_negative(),
            Scalar::Prime { .. } => false,
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a + b)),
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, modulus: q })
                if p == q =>
            {
                let s = *a as u64 + *b as u64;
                Ok(Scalar::Prime {
                    value: (s % *p as u64) as u32,
                    modulus: *p,
                })
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, modulus: q })
                if p == q =>
            {
                Ok(Scalar::Prime {
                    value: (*a as u64 * *b as u64 % *p as u64) as u32,
                    modulus: *p,
                })
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        let inv = other.inverse().ok_or(AlgebraError::DivisionByZero)?;
        self.checked_mul(&inv)
    }

    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    /// Integer representative when the value is integral (residues map to
    /// their symmetric representative).
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rational(q) => {
                if q.is_integer() {
                    q.to_integer().to_i64()
                } else {
                    None
                }
            }
            Scalar::Prime { value, modulus } => {
                let v = *value as i64;
                let m = *modulus as i64;
                Some(if v > m / 2 { v - m } else { v })
            }
        }
    }

    fn mismatch(&self, other: &Scalar) -> AlgebraError {
        AlgebraError::FieldMismatch(self.field(), other.field())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.checked_add(rhs).expect("mixed-field addition")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.checked_sub(rhs).expect("mixed-field subtraction")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.checked_mul(rhs).expect("mixed-field multiplication")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_is_reduced() {
        let q = Field::Rational;
        let a = q.from_i64(6);
        let b = q.from_i64(4);
        let c = a.checked_div(&b).unwrap();
        assert_eq!(c.to_string(), "3/2");
        let z = a.checked_sub(&a).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn prime_arithmetic() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(-1);
        assert_eq!(a, f.from_i64(6));
        let inv = f.from_i64(3).inverse().unwrap();
        assert!((&inv * &f.from_i64(3)).is_one());
        let big = Field::Prime(DEFAULT_PRIME);
        let x = big.from_i64(12345);
        assert!((&x * &x.inverse().unwrap()).is_one());
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = Field::Rational.one();
        let b = Field::Prime(7).one();
        assert!(matches!(a.checked_add(&b), Err(AlgebraError::FieldMismatch(..))));
        let c = Field::Prime(11).one();
        assert!(b.checked_mul(&c).is_err());
    }

    #[test]
    fn composite_modulus_rejected() {
        assert!(Field::prime(32004).is_err());
        assert!(Field::parse("fp:32003").is_ok());
        assert_eq!(Field::parse("q").unwrap(), Field::Rational);
    }

    #[test]
    fn rational_into_prime() {
        let q = BigRational::new(BigInt::from(1), BigInt::from(2));
        let s = Field::Prime(7).from_rational(&q).unwrap();
        assert_eq!(s, Field::Prime(7).from_i64(4));
        let bad = BigRational::new(BigInt::from(1), BigInt::from(7));
        assert!(Field::Prime(7).from_rational(&bad).is_err());
    }
}
