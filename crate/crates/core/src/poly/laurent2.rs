use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use super::laurent1::{fmt_monomial, fmt_terms, LaurentPoly1, Var};
use super::ring::Ring;
use crate::error::{Error, Result};

/// Laurent polynomial in `a` and `z` with integer coefficients.
///
/// Terms are keyed by `(a_exp, z_exp)` and iterate in ascending order of that
/// pair, which is also the serialization order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i64, i64), BigInt>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct DegreeProfile {
    pub z_degree: i64,
    pub a_span: i64,
    pub a_min: i64,
    pub a_max: i64,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(a_exp: i64, z_exp: i64, coeff: impl Into<BigInt>) -> Self {
        Self::from_terms([(a_exp, z_exp, coeff.into())])
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64, BigInt)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (a, z, c) in terms {
            p.add_term(a, z, &c);
        }
        p
    }

    /// Convenience constructor from small integer coefficients.
    pub fn from_small(terms: &[(i64, i64, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(a, z, c)| (a, z, BigInt::from(c))))
    }

    fn add_term(&mut self, a: i64, z: i64, c: &BigInt) {
        if Zero::is_zero(c) {
            return;
        }
        let key = (a, z);
        match self.terms.get_mut(&key) {
            Some(x) => {
                *x += c;
                if Zero::is_zero(x) {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&(a, z), c)| (a, z, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    pub fn coeff(&self, a_exp: i64, z_exp: i64) -> BigInt {
        self.terms.get(&(a_exp, z_exp)).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.0, k.1, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly2 {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.0, k.1, &-c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                out.add_term(k1.0 + k2.0, k1.1 + k2.1, &(c1 * c2));
            }
        }
        out
    }

    /// Multiplies by `a^da z^dz`.
    pub fn shift(&self, da: i64, dz: i64) -> Self {
        LaurentPoly2 {
            terms: self
                .terms
                .iter()
                .map(|(&(a, z), c)| ((a + da, z + dz), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = LaurentPoly2::mul(&acc, self);
        }
        acc
    }

    pub fn min_z_exp(&self) -> Option<i64> {
        self.terms.keys().map(|k| k.1).min()
    }

    pub fn degree_profile(&self) -> Result<DegreeProfile> {
        if self.is_zero() {
            return Err(Error::UndefinedDegree);
        }
        let z_degree = self.terms.keys().map(|k| k.1).max().unwrap();
        let a_min = self.terms.keys().next().unwrap().0;
        let a_max = self.terms.keys().next_back().unwrap().0;
        Ok(DegreeProfile {
            z_degree,
            a_span: a_max - a_min,
            a_min,
            a_max,
        })
    }

    /// The coefficient of `a^a_exp`, as a polynomial in `z`.
    pub fn a_slice(&self, a_exp: i64) -> LaurentPoly1<BigInt> {
        LaurentPoly1::from_terms(
            Var::Z,
            self.terms
                .range((a_exp, i64::MIN)..=(a_exp, i64::MAX))
                .map(|(&(_, z), c)| (z, c.clone())),
        )
    }

    /// `(f, g)` with `a^m f(z)` and `a^n g(z)` the lowest and highest `a`-rows.
    pub fn boundary_coeffs(&self) -> Result<(LaurentPoly1<BigInt>, LaurentPoly1<BigInt>)> {
        let prof = self.degree_profile()?;
        Ok((self.a_slice(prof.a_min), self.a_slice(prof.a_max)))
    }

    /// Substitutes `z := v`, leaving a polynomial in `a` over the ring of `v`.
    pub fn specialize_z<R: Ring>(&self, v: &R) -> Result<LaurentPoly1<R>> {
        let inv = v.inverse();
        if inv.is_none() && self.min_z_exp().is_some_and(|m| m < 0) {
            return Err(Error::PoleAtSpecialization(v.to_string()));
        }
        let mut powers: HashMap<i64, R> = HashMap::new();
        let terms: Vec<(i64, R)> = self
            .terms
            .iter()
            .map(|(&(a, z), c)| {
                let p = powers
                    .entry(z)
                    .or_insert_with(|| v.pow_signed(z).expect("unit checked above"))
                    .clone();
                (a, v.int_like(c).mul(&p))
            })
            .collect();
        Ok(LaurentPoly1::from_terms(Var::A, terms))
    }

    /// Substitutes `a := v`, leaving a polynomial in `z` over the ring of `v`.
    pub fn specialize_a<R: Ring>(&self, v: &R) -> Result<LaurentPoly1<R>> {
        if v.inverse().is_none() {
            return Err(Error::NotInvertible(v.to_string()));
        }
        let mut powers: HashMap<i64, R> = HashMap::new();
        let terms: Vec<(i64, R)> = self
            .terms
            .iter()
            .map(|(&(a, z), c)| {
                let p = powers
                    .entry(a)
                    .or_insert_with(|| v.pow_signed(a).expect("unit checked above"))
                    .clone();
                (z, v.int_like(c).mul(&p))
            })
            .collect();
        Ok(LaurentPoly1::from_terms(Var::Z, terms))
    }

    /// Substitutes `z := q(a)` for a Laurent polynomial `q` in `a`.
    ///
    /// Negative `z`-powers would need `q` to be a unit, which only happens for
    /// monomials.
    pub fn substitute_z_poly(&self, q: &LaurentPoly1<BigInt>) -> Result<LaurentPoly1<BigInt>> {
        assert_eq!(q.var(), Var::A);
        let mut out = LaurentPoly1::zero(Var::A);
        let mut powers: HashMap<i64, LaurentPoly1<BigInt>> = HashMap::new();
        for (&(a, z), c) in &self.terms {
            let p = match powers.get(&z) {
                Some(p) => p.clone(),
                None => {
                    let p = q
                        .pow_signed(z)
                        .ok_or_else(|| Error::PoleAtSpecialization(q.to_string()))?;
                    powers.insert(z, p.clone());
                    p
                }
            };
            out = LaurentPoly1::add(&out, &p.shift(a).scale(c));
        }
        Ok(out)
    }

    /// Regroups as a polynomial in `a` whose coefficients are polynomials in `z`.
    pub fn to_a_over_z(&self) -> LaurentPoly1<LaurentPoly1<BigInt>> {
        let mut rows: BTreeMap<i64, Vec<(i64, BigInt)>> = BTreeMap::new();
        for (&(a, z), c) in &self.terms {
            rows.entry(a).or_default().push((z, c.clone()));
        }
        LaurentPoly1::from_terms(
            Var::A,
            rows.into_iter()
                .map(|(a, zs)| (a, LaurentPoly1::from_terms(Var::Z, zs))),
        )
    }

    pub fn from_a_over_z(p: &LaurentPoly1<LaurentPoly1<BigInt>>) -> Self {
        Self::from_terms(
            p.terms()
                .flat_map(|(a, row)| row.terms().map(move |(z, c)| (a, z, c.clone()))),
        )
    }

    /// JSON form: `[[a_exp, z_exp, "coeff"], ...]` ascending by `(a_exp, z_exp)`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(&(a, z), c)| {
                    Value::Array(vec![
                        Value::from(a),
                        Value::from(z),
                        Value::String(c.to_string()),
                    ])
                })
                .collect(),
        )
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |why: &str| Error::Parse {
            position: 0,
            token: value.to_string(),
            reason: why.to_string(),
        };
        let arr = value.as_array().ok_or_else(|| bad("expected an array"))?;
        let mut terms = Vec::with_capacity(arr.len());
        for term in arr {
            let t = term
                .as_array()
                .filter(|t| t.len() == 3)
                .ok_or_else(|| bad("expected [a_exp, z_exp, coeff]"))?;
            let a = t[0]
                .as_i64()
                .ok_or_else(|| bad("a exponent must be an integer"))?;
            let z = t[1]
                .as_i64()
                .ok_or_else(|| bad("z exponent must be an integer"))?;
            let c: BigInt = t[2]
                .as_str()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad("coefficient must be a decimal string"))?;
            terms.push((a, z, c));
        }
        Ok(Self::from_terms(terms))
    }
}

impl Ring for LaurentPoly2 {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
    fn int_like(&self, n: &BigInt) -> Self {
        Self::from_terms([(0, 0, n.clone())])
    }
    fn add(&self, other: &Self) -> Self {
        LaurentPoly2::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        LaurentPoly2::mul(self, other)
    }
    fn neg(&self) -> Self {
        LaurentPoly2::neg(self)
    }
    fn sub(&self, other: &Self) -> Self {
        LaurentPoly2::sub(self, other)
    }
    fn inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&(a, z), c) = self.terms.iter().next().unwrap();
        if One::is_one(c) || *c == -BigInt::one() {
            Some(Self::monomial(-a, -z, c.clone()))
        } else {
            None
        }
    }
    fn descriptor(&self) -> super::ring::RingDescriptor {
        super::ring::RingDescriptor::LaurentIntegers
    }
    fn to_json(&self) -> Value {
        LaurentPoly2::to_json(self)
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(
            f,
            self.terms
                .iter()
                .map(|(&(a, z), c)| (fmt_monomial(&[(Var::A, a), (Var::Z, z)]), c)),
        )
    }
}

impl Serialize for LaurentPoly2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly2 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(deserializer)?;
        LaurentPoly2::from_json(&v).map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop2 {
    ($tr:ident, $method:ident) => {
        impl $tr<&LaurentPoly2> for &LaurentPoly2 {
            type Output = LaurentPoly2;
            fn $method(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
                LaurentPoly2::$method(self, rhs)
            }
        }
        impl $tr for LaurentPoly2 {
            type Output = LaurentPoly2;
            fn $method(self, rhs: LaurentPoly2) -> LaurentPoly2 {
                LaurentPoly2::$method(&self, &rhs)
            }
        }
    };
}

forward_binop2!(Add, add);
forward_binop2!(Sub, sub);
forward_binop2!(Mul, mul);

impl Neg for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        LaurentPoly2::neg(&self)
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        LaurentPoly2::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ring::Zmod;

    fn trefoil() -> LaurentPoly2 {
        LaurentPoly2::from_small(&[(2, 0, 2), (4, 0, -1), (2, 2, 1)])
    }

    fn figure_eight() -> LaurentPoly2 {
        LaurentPoly2::from_small(&[(2, 0, 1), (-2, 0, 1), (0, 0, -1), (0, 2, -1)])
    }

    fn zpoly(terms: &[(i64, i64)]) -> LaurentPoly1<BigInt> {
        LaurentPoly1::from_terms(Var::Z, terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn degree_profiles() {
        let prof = |p: &LaurentPoly2| {
            let d = p.degree_profile().unwrap();
            (d.z_degree, d.a_span, d.a_min, d.a_max)
        };
        assert_eq!(prof(&LaurentPoly2::one()), (0, 0, 0, 0));
        assert_eq!(prof(&trefoil()), (2, 2, 2, 4));
        assert_eq!(prof(&figure_eight()), (2, 4, -2, 2));
        assert_eq!(
            LaurentPoly2::zero().degree_profile(),
            Err(Error::UndefinedDegree)
        );
    }

    #[test]
    fn boundary_rows() {
        let (f, g) = trefoil().boundary_coeffs().unwrap();
        assert_eq!(f, zpoly(&[(0, 2), (2, 1)]));
        assert_eq!(g, zpoly(&[(0, -1)]));

        let (f, g) = LaurentPoly2::one().boundary_coeffs().unwrap();
        assert_eq!(f, zpoly(&[(0, 1)]));
        assert_eq!(g, zpoly(&[(0, 1)]));
        assert!(LaurentPoly2::zero().boundary_coeffs().is_err());
    }

    #[test]
    fn specialize_z_at_zero_and_mod_seven() {
        let at0 = trefoil().specialize_z(&BigInt::zero()).unwrap();
        assert_eq!(at0.to_string(), "2a^2 - a^4");

        // N = 3 - 5 in F_7
        let n = Zmod::new(5, 7);
        let s = trefoil().specialize_z(&n).unwrap();
        let expected =
            LaurentPoly1::from_terms(Var::A, [(2, Zmod::new(6, 7)), (4, Zmod::new(6, 7))]);
        assert_eq!(s, expected);
    }

    #[test]
    fn pole_at_specialization() {
        let unlink = LaurentPoly2::from_small(&[(-1, -1, 1), (1, -1, -1)]);
        assert!(matches!(
            unlink.specialize_z(&BigInt::zero()),
            Err(Error::PoleAtSpecialization(_))
        ));
        assert!(matches!(
            unlink.specialize_z(&Zmod::new(0, 7)),
            Err(Error::PoleAtSpecialization(_))
        ));
        // invertible value is fine
        assert!(unlink.specialize_z(&Zmod::new(3, 7)).is_ok());
    }

    #[test]
    fn specialize_a_rejects_zero() {
        assert!(trefoil().specialize_a(&BigInt::zero()).is_err());
        let at1 = trefoil().specialize_a(&BigInt::one()).unwrap();
        assert_eq!(at1, zpoly(&[(0, 1), (2, 1)]));
    }

    #[test]
    fn json_shape() {
        let v = trefoil().to_json();
        assert_eq!(v.to_string(), r#"[[2,0,"2"],[2,2,"1"],[4,0,"-1"]]"#);
        assert_eq!(LaurentPoly2::from_json(&v).unwrap(), trefoil());
        assert!(LaurentPoly2::from_json(&serde_json::json!([[1, 2]])).is_err());
    }

    #[test]
    fn a_over_z_round_trip() {
        let p = &trefoil() * &figure_eight();
        assert_eq!(LaurentPoly2::from_a_over_z(&p.to_a_over_z()), p);
    }

    #[test]
    fn display() {
        assert_eq!(trefoil().to_string(), "2a^2 + a^2z^2 - a^4");
        assert_eq!(LaurentPoly2::one().to_string(), "1");
    }
}
