use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;
use serde_json::Value;

use super::ring::{Ring, RingDescriptor, Zmod};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    A,
    Z,
    X,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Var::A => 'a',
            Var::Z => 'z',
            Var::X => 'x',
        };
        write!(f, "{c}")
    }
}

/// Laurent polynomial in one variable. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly1<R> {
    var: Var,
    terms: BTreeMap<i64, R>,
}

impl<R: Ring> LaurentPoly1<R> {
    pub fn zero(var: Var) -> Self {
        LaurentPoly1 {
            var,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(var: Var, exp: i64, coeff: R) -> Self {
        Self::from_terms(var, [(exp, coeff)])
    }

    pub fn constant(var: Var, coeff: R) -> Self {
        Self::monomial(var, 0, coeff)
    }

    /// Collects terms, summing repeated exponents and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (i64, R)>>(var: Var, terms: I) -> Self {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    fn add_term(&mut self, exp: i64, coeff: &R) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(c) => {
                let s = c.add(coeff);
                if s.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *c = s;
                }
            }
            None => {
                self.terms.insert(exp, coeff.clone());
            }
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &R)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Option<&R> {
        self.terms.get(&exp)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn degree(&self) -> Result<i64> {
        self.max_exp().ok_or(Error::UndefinedDegree)
    }

    /// Difference of the highest and lowest exponent.
    pub fn span(&self) -> Result<i64> {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => Ok(hi - lo),
            _ => Err(Error::UndefinedDegree),
        }
    }

    pub fn leading_coeff(&self) -> Option<&R> {
        self.terms.values().next_back()
    }

    /// `Some((e, c))` when the polynomial is the single term `c·v^e`.
    pub fn as_monomial(&self) -> Option<(i64, &R)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self.as_monomial(), Some((0, c)) if c.is_one())
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> LaurentPoly1<S> {
        LaurentPoly1::from_terms(self.var, self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    /// Multiplies by `v^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        LaurentPoly1 {
            var: self.var,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + shift, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_terms(self.var, self.terms.iter().map(|(e, x)| (*e, x.mul(c))))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.var, other.var, "mixed variables");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly1 {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.var, other.var, "mixed variables");
        let mut out = Self::zero(self.var);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, &c1.mul(c2));
            }
        }
        out
    }

    /// Evaluates at `v`; negative exponents need `v` to be a unit.
    pub fn eval(&self, v: &R) -> Result<R> {
        let mut acc = v.zero_like();
        for (e, c) in &self.terms {
            let p = v
                .pow_signed(*e)
                .ok_or_else(|| Error::NotInvertible(v.to_string()))?;
            acc = acc.add(&c.mul(&p));
        }
        Ok(acc)
    }

    /// JSON form: `[[exp, coeff], ...]`, ascending by exponent.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| Value::Array(vec![Value::from(*e), c.to_json()]))
                .collect(),
        )
    }
}

impl LaurentPoly1<BigInt> {
    /// Coefficientwise reduction into `Z/m`.
    pub fn reduce_mod(&self, m: u64) -> LaurentPoly1<Zmod> {
        self.map_coeffs(|c| Zmod::from_bigint(c, m))
    }

    pub fn from_json(var: Var, value: &Value) -> Result<Self> {
        let bad = |why: &str| Error::Parse {
            position: 0,
            token: value.to_string(),
            reason: why.to_string(),
        };
        let arr = value.as_array().ok_or_else(|| bad("expected an array"))?;
        let mut terms = Vec::with_capacity(arr.len());
        for term in arr {
            let pair = term
                .as_array()
                .filter(|t| t.len() == 2)
                .ok_or_else(|| bad("expected [exp, coeff]"))?;
            let e = pair[0]
                .as_i64()
                .ok_or_else(|| bad("exponent must be an integer"))?;
            let c: BigInt = pair[1]
                .as_str()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad("coefficient must be a decimal string"))?;
            terms.push((e, c));
        }
        Ok(Self::from_terms(var, terms))
    }
}

/// `Z[v^{±1}]` as a coefficient ring; units are `±v^e`.
impl Ring for LaurentPoly1<BigInt> {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn zero_like(&self) -> Self {
        Self::zero(self.var)
    }
    fn one_like(&self) -> Self {
        Self::constant(self.var, BigInt::one())
    }
    fn int_like(&self, n: &BigInt) -> Self {
        Self::constant(self.var, n.clone())
    }
    fn add(&self, other: &Self) -> Self {
        LaurentPoly1::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        LaurentPoly1::mul(self, other)
    }
    fn neg(&self) -> Self {
        LaurentPoly1::neg(self)
    }
    fn inverse(&self) -> Option<Self> {
        let (e, c) = self.as_monomial()?;
        if One::is_one(&c.abs()) {
            Some(Self::monomial(self.var, -e, c.clone()))
        } else {
            None
        }
    }
    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::LaurentIntegers
    }
    fn to_json(&self) -> Value {
        LaurentPoly1::to_json(self)
    }
}

pub(crate) fn fmt_monomial(parts: &[(Var, i64)]) -> String {
    let mut s = String::new();
    for (v, e) in parts {
        match e {
            0 => {}
            1 => s.push_str(&v.to_string()),
            e => s.push_str(&format!("{v}^{e}")),
        }
    }
    s
}

/// Writes `terms` joined with signs, e.g. `2a^2 - a^4 + a^2z^2`.
pub(crate) fn fmt_terms<C: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, C)>,
) -> fmt::Result {
    let mut first = true;
    for (mono, c) in terms {
        let cs = c.to_string();
        let compound = cs
            .chars()
            .skip(1)
            .any(|ch| ch == '+' || ch == '-' || ch == ' ');
        let (neg, body) = match cs.strip_prefix('-') {
            Some(rest) if !compound => (true, rest.to_string()),
            _ => (false, cs.clone()),
        };
        let body = if compound { format!("({body})") } else { body };
        let term = if mono.is_empty() {
            body
        } else if body == "1" {
            mono
        } else {
            format!("{body}{mono}")
        };
        match (first, neg) {
            (true, true) => write!(f, "-{term}")?,
            (true, false) => write!(f, "{term}")?,
            (false, true) => write!(f, " - {term}")?,
            (false, false) => write!(f, " + {term}")?,
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl<R: Ring> fmt::Display for LaurentPoly1<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(
            f,
            self.terms
                .iter()
                .map(|(e, c)| (fmt_monomial(&[(self.var, *e)]), c)),
        )
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl<R: Ring> $tr<&LaurentPoly1<R>> for &LaurentPoly1<R> {
            type Output = LaurentPoly1<R>;
            fn $method(self, rhs: &LaurentPoly1<R>) -> LaurentPoly1<R> {
                LaurentPoly1::$method(self, rhs)
            }
        }
        impl<R: Ring> $tr for LaurentPoly1<R> {
            type Output = LaurentPoly1<R>;
            fn $method(self, rhs: LaurentPoly1<R>) -> LaurentPoly1<R> {
                LaurentPoly1::$method(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl<R: Ring> Neg for &LaurentPoly1<R> {
    type Output = LaurentPoly1<R>;
    fn neg(self) -> LaurentPoly1<R> {
        LaurentPoly1::neg(self)
    }
}

impl<R: Ring> Neg for LaurentPoly1<R> {
    type Output = LaurentPoly1<R>;
    fn neg(self) -> LaurentPoly1<R> {
        LaurentPoly1::neg(&self)
    }
}
