//! Cyclotomic integer rings `Z[ζ_n]` and roots of unity in prime fields.
//!
//! Elements of `Z[ζ_n]` are stored densely as residues modulo the cyclotomic
//! polynomial `Φ_n`, so two elements are equal exactly when their stored
//! coefficient vectors are equal.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::{is_prime, LaurentPoly1, Ring, RingDescriptor, Var, Zmod};

/// An element of `Z[ζ_n]`.
pub type CyclotomicNumber = Cyclotomic<BigInt>;

static PHI_CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();

/// Dense coefficients of `Φ_n`, lowest degree first.
fn phi_coeffs(n: u32) -> Arc<Vec<BigInt>> {
    assert!(n >= 1, "conductor must be positive");
    let cache = PHI_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().unwrap().get(&n) {
        return c.clone();
    }
    // x^n - 1
    let mut num = vec![BigInt::from(0); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in divisors(n).into_iter().filter(|&d| d < n) {
        num = divide_monic(&num, &phi_coeffs(d));
    }
    let phi = Arc::new(num);
    cache.lock().unwrap().entry(n).or_insert(phi).clone()
}

/// Exact division by a monic divisor; panics on a nonzero remainder.
fn divide_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::from(0); num.len() - dd];
    for i in (dd..num.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for (j, dj) in den.iter().enumerate() {
            rem[i - dd + j] -= &c * dj;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division was not exact");
    quot
}

pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

pub fn euler_phi(n: u32) -> u32 {
    (1..=n).filter(|&j| num_integer::gcd(j, n) == 1).count() as u32
}

/// The `n`-th cyclotomic polynomial `Φ_n(x)`.
pub fn cyclotomic_poly(n: u32) -> LaurentPoly1<BigInt> {
    let phi = phi_coeffs(n);
    LaurentPoly1::from_terms(
        Var::X,
        phi.iter().enumerate().map(|(e, c)| (e as i64, c.clone())),
    )
}

/// An element of `R[ζ_n] = R[x]/(Φ_n)` for a coefficient ring `R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cyclotomic<C> {
    n: u32,
    coeffs: Vec<C>,
}

impl<C: Ring> Cyclotomic<C> {
    /// Reduces `Σ c_e x^e` modulo `Φ_n`; exponents are taken mod `n`, so
    /// negative powers of `ζ_n` are allowed.
    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(n: u32, base: &C, terms: I) -> Self {
        let phi = phi_coeffs(n);
        let d = phi.len() - 1;
        let mut dense = vec![base.zero_like(); (n as usize).max(d)];
        for (e, c) in terms {
            let i = e.rem_euclid(n as i64) as usize;
            dense[i] = dense[i].add(&c);
        }
        Self::reduce(n, dense, &phi)
    }

    fn reduce(n: u32, mut dense: Vec<C>, phi: &[BigInt]) -> Self {
        let d = phi.len() - 1;
        let phi_c: Vec<C> = phi.iter().map(|c| dense[0].int_like(c)).collect();
        for i in (d..dense.len()).rev() {
            let c = dense[i].clone();
            if c.is_zero() {
                continue;
            }
            for j in 0..d {
                dense[i - d + j] = dense[i - d + j].sub(&c.mul(&phi_c[j]));
            }
            dense[i] = c.zero_like();
        }
        dense.truncate(d);
        Cyclotomic { n, coeffs: dense }
    }

    pub fn constant(n: u32, c: C) -> Self {
        let base = c.clone();
        Self::from_terms(n, &base, [(0, c)])
    }

    /// `ζ_n^e` with coefficients in the ring of `base`.
    pub fn root_pow_over(n: u32, e: i64, base: &C) -> Self {
        Self::from_terms(n, base, [(e, base.one_like())])
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    /// Coefficients of the reduced representative, lowest degree first.
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn rep(&self) -> LaurentPoly1<C> {
        LaurentPoly1::from_terms(
            Var::X,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(e, c)| (e as i64, c.clone())),
        )
    }

    fn base(&self) -> &C {
        &self.coeffs[0]
    }
}

impl Cyclotomic<BigInt> {
    /// `ζ_n` in `Z[ζ_n]`.
    pub fn root(n: u32) -> Self {
        Self::root_pow(n, 1)
    }

    pub fn root_pow(n: u32, e: i64) -> Self {
        Self::root_pow_over(n, e, &BigInt::one())
    }

    pub fn from_int(n: u32, c: i64) -> Self {
        Self::constant(n, BigInt::from(c))
    }

    /// Coefficientwise reduction `Z[ζ_n] -> (Z/m)[ζ_n]`.
    pub fn reduce_coeffs(&self, m: u64) -> Cyclotomic<Zmod> {
        Cyclotomic {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| Zmod::from_bigint(c, m))
                .collect(),
        }
    }

    /// The ring map `Z[ζ_n] -> F_p` sending `ζ_n` to `image`.
    ///
    /// This is a homomorphism when `image` has multiplicative order `n`.
    pub fn to_prime_field(&self, image: &Zmod) -> Zmod {
        let mut acc = image.zero_like();
        let mut pw = image.one_like();
        for c in &self.coeffs {
            acc = acc.add(&image.int_like(c).mul(&pw));
            pw = pw.mul(image);
        }
        acc
    }
}

impl<C: Ring> Ring for Cyclotomic<C> {
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn zero_like(&self) -> Self {
        Cyclotomic {
            n: self.n,
            coeffs: vec![self.base().zero_like(); self.coeffs.len()],
        }
    }
    fn one_like(&self) -> Self {
        Self::constant(self.n, self.base().one_like())
    }
    fn int_like(&self, k: &BigInt) -> Self {
        Self::constant(self.n, self.base().int_like(k))
    }
    fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "mixed conductors");
        Cyclotomic {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }
    fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "mixed conductors");
        Cyclotomic {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }
    fn neg(&self) -> Self {
        Cyclotomic {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "mixed conductors");
        let d = self.coeffs.len();
        let zero = self.base().zero_like();
        let mut dense = vec![zero; 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    dense[i + j] = dense[i + j].add(&a.mul(b));
                }
            }
        }
        Self::reduce(self.n, dense, &phi_coeffs(self.n))
    }
    /// Only the units `±ζ_n^j` are inverted.
    fn inverse(&self) -> Option<Self> {
        let one = self.base().one_like();
        for j in 0..self.n as i64 {
            let r = Self::root_pow_over(self.n, j, &one);
            if *self == r {
                return Some(Self::root_pow_over(self.n, -j, &one));
            }
            if *self == r.neg() {
                return Some(Self::root_pow_over(self.n, -j, &one).neg());
            }
        }
        None
    }
    fn descriptor(&self) -> RingDescriptor {
        let m = match self.base().descriptor() {
            RingDescriptor::Modular { m } => Some(m),
            RingDescriptor::PrimeField { p } => Some(p),
            _ => None,
        };
        RingDescriptor::Cyclotomic { n: self.n, m }
    }
    fn to_json(&self) -> Value {
        json!({ "n": self.n, "rep": self.rep().to_json() })
    }
}

impl<C: Ring> fmt::Display for Cyclotomic<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n;
        crate::poly::fmt_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| {
                    let mono = match e {
                        0 => String::new(),
                        1 => format!("ζ{n}"),
                        e => format!("ζ{n}^{e}"),
                    };
                    (mono, c)
                }),
        )
    }
}

/// `(ζ_{2k}, ζ_{2k} - ζ_{2k}^{-1})` in `Z[ζ_{2k}]`.
pub fn zeta_twist_value(k: u64) -> Result<(CyclotomicNumber, CyclotomicNumber)> {
    if k < 2 {
        return Err(Error::KOutOfRange { k, min: 2 });
    }
    let n = (2 * k) as u32;
    let zeta = Cyclotomic::root(n);
    let z = zeta.sub(&Cyclotomic::root_pow(n, -1));
    debug_assert!(!Ring::is_zero(&z));
    Ok((zeta, z))
}

/// A primitive `2k`-th root of unity in `F_p` together with `N = ζ - ζ^{-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FiniteFieldRoot {
    pub p: u64,
    pub k: u64,
    #[serde(serialize_with = "ser_residue")]
    pub zeta: Zmod,
    #[serde(rename = "N", serialize_with = "ser_residue")]
    pub n_value: Zmod,
}

fn ser_residue<S: serde::Serializer>(x: &Zmod, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(x.value())
}

const ROOT_SEARCH_CAP: u64 = 1_000_000;

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn has_exact_order(x: &Zmod, order: u64) -> bool {
    x.pow(order).is_one()
        && prime_factors(order)
            .iter()
            .all(|q| !x.pow(order / q).is_one())
}

/// The `(skip+1)`-th smallest prime `p ≡ 1 (mod 2k)`, with an element of
/// order exactly `2k` obtained as the first `g^{(p-1)/2k}` that works.
pub fn find_finite_field_root(k: u64, skip: usize) -> Result<FiniteFieldRoot> {
    if k < 2 {
        return Err(Error::KOutOfRange { k, min: 2 });
    }
    let order = 2 * k;
    let mut seen = 0;
    for t in 1..=ROOT_SEARCH_CAP {
        let p = order * t + 1;
        if !is_prime(p) {
            continue;
        }
        if seen < skip {
            seen += 1;
            continue;
        }
        let e = (p - 1) / order;
        let zeta = (2..p)
            .map(|g| Zmod::new(g as i64, p).pow(e))
            .find(|h| has_exact_order(h, order))
            .expect("F_p^* is cyclic");
        let inv = zeta.inverse().expect("nonzero in a field");
        return Ok(FiniteFieldRoot {
            p,
            k,
            zeta,
            n_value: zeta.sub(&inv),
        });
    }
    Err(Error::SearchExhausted(ROOT_SEARCH_CAP))
}
