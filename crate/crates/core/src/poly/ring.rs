//! Coefficient rings.
//!
//! Elements carry whatever context they need (a modulus, a conductor), so a
//! single element is enough to build the zero, the one, or the image of an
//! integer in the same ring.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::Value;

/// The closed set of coefficient rings used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "ring", rename_all = "kebab-case")]
pub enum RingDescriptor {
    Integers,
    Modular {
        m: u64,
    },
    PrimeField {
        p: u64,
    },
    /// `Z[ζ_n]`, optionally with coefficients reduced mod `m`.
    Cyclotomic {
        n: u32,
        m: Option<u64>,
    },
    /// `Z[z^{±1}]`, used as the coefficient ring of the symbolic twist matrix.
    LaurentIntegers,
}

pub trait Ring: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    /// Image of an integer under the canonical map `Z -> R`.
    fn int_like(&self, n: &BigInt) -> Self;

    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn inverse(&self) -> Option<Self>;

    fn descriptor(&self) -> RingDescriptor;

    /// JSON form of a single coefficient.
    fn to_json(&self) -> Value;

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Integer power; negative exponents need a unit.
    fn pow_signed(&self, e: i64) -> Option<Self> {
        if e >= 0 {
            Some(self.pow(e as u64))
        } else {
            self.inverse().map(|inv| inv.pow(e.unsigned_abs()))
        }
    }
}

impl Ring for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn int_like(&self, n: &BigInt) -> Self {
        n.clone()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn inverse(&self) -> Option<Self> {
        if One::is_one(&self.abs()) {
            Some(self.clone())
        } else {
            None
        }
    }
    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::Integers
    }
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

/// A residue class in `Z/m`. When `m` is prime this is an element of `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Zmod {
    value: u64,
    modulus: u64,
}

impl Zmod {
    pub fn new(value: i64, modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        let m = modulus as i128;
        Zmod {
            value: (value as i128).rem_euclid(m) as u64,
            modulus,
        }
    }

    pub fn from_bigint(n: &BigInt, modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        let r = n.mod_floor(&BigInt::from(modulus));
        Zmod {
            value: r.to_u64().expect("residue fits in u64"),
            modulus,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.modulus, other.modulus, "mixed moduli");
    }
}

impl fmt::Display for Zmod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Ring for Zmod {
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn zero_like(&self) -> Self {
        Zmod::new(0, self.modulus)
    }
    fn one_like(&self) -> Self {
        Zmod::new(1, self.modulus)
    }
    fn int_like(&self, n: &BigInt) -> Self {
        Zmod::from_bigint(n, self.modulus)
    }
    fn add(&self, other: &Self) -> Self {
        self.check(other);
        let s = (self.value as u128 + other.value as u128) % self.modulus as u128;
        Zmod {
            value: s as u64,
            modulus: self.modulus,
        }
    }
    fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let s = (self.value as u128 * other.value as u128) % self.modulus as u128;
        Zmod {
            value: s as u64,
            modulus: self.modulus,
        }
    }
    fn neg(&self) -> Self {
        Zmod {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }
    fn inverse(&self) -> Option<Self> {
        let g = (self.value as i128).extended_gcd(&(self.modulus as i128));
        if g.gcd != 1 {
            return None;
        }
        Some(Zmod {
            value: g.x.rem_euclid(self.modulus as i128) as u64,
            modulus: self.modulus,
        })
    }
    fn descriptor(&self) -> RingDescriptor {
        if is_prime(self.modulus) {
            RingDescriptor::PrimeField { p: self.modulus }
        } else {
            RingDescriptor::Modular { m: self.modulus }
        }
    }
    fn to_json(&self) -> Value {
        Value::String(self.value.to_string())
    }
}

/// Deterministic trial division; the primes used here stay small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zmod_inverse() {
        let x = Zmod::new(3, 7);
        assert_eq!(x.inverse(), Some(Zmod::new(5, 7)));
        assert_eq!(Zmod::new(2, 4).inverse(), None);
        assert_eq!(Zmod::new(-1, 5), Zmod::new(4, 5));
    }

    #[test]
    fn descriptors() {
        assert_eq!(
            Zmod::new(1, 7).descriptor(),
            RingDescriptor::PrimeField { p: 7 }
        );
        assert_eq!(
            Zmod::new(1, 4).descriptor(),
            RingDescriptor::Modular { m: 4 }
        );
    }

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn signed_powers() {
        let x = Zmod::new(3, 7);
        assert_eq!(x.pow_signed(-1), Some(Zmod::new(5, 7)));
        assert_eq!(x.pow(6), Zmod::new(1, 7));
        assert_eq!(BigInt::from(2).pow_signed(-1), None);
    }
}
