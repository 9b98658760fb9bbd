use num_bigint::BigInt;

use crate::poly::{LaurentPoly1, LaurentPoly2, Ring, Var};

/// Polynomial in `a` over a ring of `z`-values.
pub type APoly<R> = LaurentPoly1<R>;

/// The two-strand twist recursion matrix and its powers.
///
/// For a twist region with `n` parallel positive crossings,
/// `(P(L_n), P(L_{n+1}))^T = M^n (P(L_0), P(L_1))^T` with
/// `M = [[0, 1], [a^2, a z]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistMatrix<R> {
    entries: [[APoly<R>; 2]; 2],
    one: R,
}

impl<R: Ring> TwistMatrix<R> {
    /// `M` for the designated value `z`.
    pub fn base(z: &R) -> Self {
        let one = z.one_like();
        let zero = APoly::zero(Var::A);
        TwistMatrix {
            entries: [
                [zero, APoly::constant(Var::A, one.clone())],
                [
                    APoly::monomial(Var::A, 2, one.clone()),
                    APoly::monomial(Var::A, 1, z.clone()),
                ],
            ],
            one,
        }
    }

    pub fn identity(one: &R) -> Self {
        Self::scalar(APoly::constant(Var::A, one.one_like()), one)
    }

    pub fn scalar(s: APoly<R>, one: &R) -> Self {
        TwistMatrix {
            entries: [[s.clone(), APoly::zero(Var::A)], [APoly::zero(Var::A), s]],
            one: one.one_like(),
        }
    }

    pub fn entries(&self) -> &[[APoly<R>; 2]; 2] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &APoly<R> {
        &self.entries[i][j]
    }

    pub fn mul(&self, other: &Self) -> Self {
        let e = &self.entries;
        let f = &other.entries;
        let cell = |i: usize, j: usize| &(&e[i][0] * &f[0][j]) + &(&e[i][1] * &f[1][j]);
        TwistMatrix {
            entries: [[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]],
            one: self.one.clone(),
        }
    }

    /// `M^n` by square-and-multiply.
    pub fn pow(&self, mut n: u64) -> Self {
        let mut acc = Self::identity(&self.one);
        let mut base = self.clone();
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

    pub fn trace(&self) -> APoly<R> {
        &self.entries[0][0] + &self.entries[1][1]
    }

    pub fn det(&self) -> APoly<R> {
        let e = &self.entries;
        &(&e[0][0] * &e[1][1]) - &(&e[0][1] * &e[1][0])
    }

    /// Inverse when the determinant is a unit monomial `u a^e`.
    pub fn inverse(&self) -> Option<Self> {
        let det = self.det();
        let (e, c) = det.as_monomial()?;
        let inv = APoly::monomial(Var::A, -e, c.inverse()?);
        let m = &self.entries;
        let adj = [
            [m[1][1].clone(), m[0][1].neg()],
            [m[1][0].neg(), m[0][0].clone()],
        ];
        Some(TwistMatrix {
            entries: adj.map(|row| row.map(|x| &x * &inv)),
            one: self.one.clone(),
        })
    }

    /// True when the matrix equals `a^e · I`.
    pub fn is_scalar_power(&self, e: i64) -> bool {
        *self == Self::scalar(APoly::monomial(Var::A, e, self.one.clone()), &self.one)
    }

    pub fn apply(&self, v: &[APoly<R>; 2]) -> [APoly<R>; 2] {
        let e = &self.entries;
        [
            &(&e[0][0] * &v[0]) + &(&e[0][1] * &v[1]),
            &(&e[1][0] * &v[0]) + &(&e[1][1] * &v[1]),
        ]
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TwistMatrix<S> {
        TwistMatrix {
            entries: [
                [
                    self.entries[0][0].map_coeffs(&f),
                    self.entries[0][1].map_coeffs(&f),
                ],
                [
                    self.entries[1][0].map_coeffs(&f),
                    self.entries[1][1].map_coeffs(&f),
                ],
            ],
            one: f(&self.one),
        }
    }
}

/// The symbolic matrix over `Z[a^{±1}, z^{±1}]`, with `z` as a coefficient.
pub fn symbolic_twist_matrix() -> TwistMatrix<LaurentPoly1<BigInt>> {
    TwistMatrix::base(&LaurentPoly1::monomial(Var::Z, 1, BigInt::from(1)))
}

/// `M^n` for the base matrix at `z`; negative `n` uses `M^{-1}`.
pub fn twist_matrix_power<R: Ring>(z: &R, n: i64) -> TwistMatrix<R> {
    let m = TwistMatrix::base(z);
    if n >= 0 {
        m.pow(n as u64)
    } else {
        m.inverse()
            .expect("det M = -a^2 is a unit")
            .pow(n.unsigned_abs())
    }
}

/// HOMFLY of the closure of `σ_1^m` from the recursion, starting from the
/// two-component unlink and the unknot.
pub fn two_strand_homfly(m: i64) -> LaurentPoly2 {
    let m_pow = twist_matrix_power(&LaurentPoly1::monomial(Var::Z, 1, BigInt::from(1)), m);
    let base = [
        LaurentPoly2::to_a_over_z(&super::skein::unlink(2)),
        LaurentPoly2::to_a_over_z(&LaurentPoly2::one()),
    ];
    let [first, _] = m_pow.apply(&base);
    LaurentPoly2::from_a_over_z(&first)
}
