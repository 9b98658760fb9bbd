//! Necessary-condition obstructions to untying a knot with `t_2k` or
//! `t̄_2k` moves, and the degree bounds that go with them.
//!
//! Every test here is one-directional: `NotObstructed` means the invariants
//! cannot rule the move family out, never that an unknotting sequence exists.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cyclo::{zeta_twist_value, Cyclotomic, FiniteFieldRoot};
use crate::error::{Error, Result};
use crate::poly::{LaurentPoly1, LaurentPoly2, Ring};

pub const DEFAULT_K_MAX: u64 = 50;

pub const VERDICT_NOTE: &str =
    "verdicts are necessary conditions only: not-obstructed means not excluded by these invariants";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveFamily {
    /// parallel strands, equal orientations
    T,
    /// parallel strands, opposite orientations
    Tbar,
}

impl fmt::Display for MoveFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveFamily::T => write!(f, "t"),
            MoveFamily::Tbar => write!(f, "tbar"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TestKind {
    /// Conway polynomial mod k
    Fox,
    /// HOMFLY at `a = ζ_2k`
    HomflyAtRoot,
    /// HOMFLY at `z = ζ_2k - ζ_2k^{-1}`
    HomflyAtTwistValue,
    /// HOMFLY at `z = 0`, reduced mod 2
    HomflyMod2,
    /// HOMFLY at `z = N` in `F_p`
    HomflyModP,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Certificate {
    pub test: TestKind,
    pub residual: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    Obstructed(Certificate),
    NotObstructed,
}

impl Verdict {
    pub fn is_obstructed(&self) -> bool {
        matches!(self, Verdict::Obstructed(_))
    }

    fn obstructed(test: TestKind, residual: Value) -> Self {
        Verdict::Obstructed(Certificate { test, residual })
    }
}

fn require_k(k: u64, min: u64) -> Result<()> {
    if k < min {
        Err(Error::KOutOfRange { k, min })
    } else {
        Ok(())
    }
}

/// Conway polynomial mod `k` must stay `1` under `t̄_2k` moves.
pub fn fox_test(nabla: &LaurentPoly1<BigInt>, k: u64) -> Result<Verdict> {
    require_k(k, 2)?;
    let reduced = nabla.reduce_mod(k);
    Ok(if reduced.is_one() {
        Verdict::NotObstructed
    } else {
        Verdict::obstructed(TestKind::Fox, reduced.to_json())
    })
}

/// Monic Conway polynomial of degree at least two, the fibred-knot criterion.
/// When true, [`fox_test`] obstructs for every `k >= 2`.
pub fn fibred_obstruction(nabla: &LaurentPoly1<BigInt>) -> bool {
    match (nabla.degree(), nabla.leading_coeff()) {
        (Ok(d), Some(c)) => d >= 2 && c.abs() == BigInt::from(1),
        _ => false,
    }
}

/// `P(ζ_2k, z)` must equal `1` for a knot related to the unknot by `t̄_2k` moves.
pub fn tbar_test(p: &LaurentPoly2, k: u64) -> Result<Verdict> {
    require_k(k, 2)?;
    let (zeta, _) = zeta_twist_value(k)?;
    let s = p.specialize_a(&zeta)?;
    Ok(if s.is_one() {
        Verdict::NotObstructed
    } else {
        Verdict::obstructed(TestKind::HomflyAtRoot, s.to_json())
    })
}

/// True when `q` is exactly `a^{step·m}` with coefficient one.
fn is_unit_power<R: Ring>(q: &LaurentPoly1<R>, step: i64) -> bool {
    matches!(q.as_monomial(), Some((e, c)) if c.is_one() && e % step == 0)
}

/// `t_2k` moves multiply `P(a, z_k)` by powers of `a^{2k}` (`k >= 3`); for
/// `k = 2` the same holds for `P(a, 0)` over `F_2` with `a^4`.
pub fn t_test(p: &LaurentPoly2, k: u64) -> Result<Verdict> {
    require_k(k, 2)?;
    if k == 2 {
        let s = p.specialize_z(&BigInt::from(0))?.reduce_mod(2);
        return Ok(if is_unit_power(&s, 4) {
            Verdict::NotObstructed
        } else {
            Verdict::obstructed(TestKind::HomflyMod2, s.to_json())
        });
    }
    let (_, z) = zeta_twist_value(k)?;
    let s = p.specialize_z(&z)?;
    Ok(if is_unit_power(&s, 2 * k as i64) {
        Verdict::NotObstructed
    } else {
        Verdict::obstructed(TestKind::HomflyAtTwistValue, s.to_json())
    })
}

/// The `F_p` shadow of [`t_test`]. Weaker when it does not obstruct; equally
/// valid when it does.
pub fn t_test_modp(p: &LaurentPoly2, k: u64, root: &FiniteFieldRoot) -> Result<Verdict> {
    require_k(k, 3)?;
    if root.k != k {
        return Err(Error::MismatchedRoot {
            root: root.k,
            asked: k,
        });
    }
    let s = p.specialize_z(&root.n_value)?;
    Ok(if is_unit_power(&s, 2 * k as i64) {
        Verdict::NotObstructed
    } else {
        Verdict::obstructed(
            TestKind::HomflyModP,
            json!({ "p": root.p, "poly": s.to_json() }),
        )
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct FwmBounds {
    pub crossing_lb: i64,
    pub braid_index_lb: i64,
}

/// `c >= deg_z P + 1` and `b >= a-span/2 + 1`.
pub fn fwm_bounds(p: &LaurentPoly2) -> Result<FwmBounds> {
    let prof = p.degree_profile()?;
    if prof.a_span % 2 != 0 {
        return Err(Error::Inconsistent(format!(
            "odd a-span {} for a knot",
            prof.a_span
        )));
    }
    Ok(FwmBounds {
        crossing_lb: prof.z_degree + 1,
        braid_index_lb: prof.a_span / 2 + 1,
    })
}

/// Lower bound on the braid index of every knot reachable by `(t_2k)^{±1}`
/// moves: half the `a`-span of `P(a, z_k)`, plus one.
pub fn braid_index_lb_after_twist(p: &LaurentPoly2, k: u64) -> Result<i64> {
    require_k(k, 3)?;
    let (_, z) = zeta_twist_value(k)?;
    let s = p.specialize_z(&z)?;
    let span = s.span().map_err(|_| Error::VanishingSpecialization)?;
    if span % 2 != 0 {
        return Err(Error::Inconsistent(format!(
            "odd a-span {span} after specialization"
        )));
    }
    Ok(span / 2 + 1)
}

/// The `k` in `3..=k_max` where specializing at `z_k` shrinks the `a`-span,
/// i.e. where a boundary row `f` or `g` vanishes at `z_k`.
pub fn exceptional_k_set(p: &LaurentPoly2, k_max: u64) -> Result<BTreeSet<u64>> {
    let (f, g) = p.boundary_coeffs()?;
    let mut out = BTreeSet::new();
    for k in 3..=k_max {
        let (_, z) = zeta_twist_value(k)?;
        let lift = |q: &LaurentPoly1<BigInt>| {
            q.map_coeffs(|c| Cyclotomic::constant(2 * k as u32, c.clone()))
        };
        let vanishes =
            |q: &LaurentPoly1<BigInt>| -> Result<bool> { Ok(lift(q).eval(&z)?.is_zero()) };
        if vanishes(&f)? || vanishes(&g)? {
            out.insert(k);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KVerdict {
    pub k: u64,
    pub obstructed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    /// Extra `F_p` columns, present only when requested.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub modp: Vec<ModpColumn>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ModpColumn {
    pub p: u64,
    pub obstructed: bool,
}

impl KVerdict {
    fn from_verdict(k: u64, v: Verdict) -> Self {
        match v {
            Verdict::Obstructed(c) => KVerdict {
                k,
                obstructed: true,
                certificate: Some(c),
                modp: Vec::new(),
            },
            Verdict::NotObstructed => KVerdict {
                k,
                obstructed: false,
                certificate: None,
                modp: Vec::new(),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct BoundCheck {
    pub bound: String,
    pub value: i64,
    pub count: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Bounds {
    /// `P = 1`: the cardinality bounds say nothing.
    Inapplicable,
    Checked {
        checks: Vec<BoundCheck>,
    },
}

impl Serialize for Bounds {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(None)?;
        match self {
            Bounds::Inapplicable => m.serialize_entry("applicable", &false)?,
            Bounds::Checked { checks } => {
                m.serialize_entry("applicable", &true)?;
                m.serialize_entry("checks", checks)?;
            }
        }
        m.end()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct ObstructionReport {
    pub knot: String,
    pub family: MoveFamily,
    pub k_min: u64,
    pub k_max: u64,
    pub verdicts: Vec<KVerdict>,
    pub bounds: Bounds,
    pub note: &'static str,
}

impl ObstructionReport {
    /// The `k` not excluded by any test.
    pub fn candidates(&self) -> BTreeSet<u64> {
        self.verdicts
            .iter()
            .filter(|v| !v.obstructed)
            .map(|v| v.k)
            .collect()
    }

    fn count_from(&self, k0: u64) -> usize {
        self.candidates().range(k0..).count()
    }

    fn push_check(&mut self, bound: &str, value: i64, k0: u64) {
        let count = self.count_from(k0);
        if let Bounds::Checked { checks } = &mut self.bounds {
            checks.push(BoundCheck {
                bound: bound.to_string(),
                value,
                count,
                holds: count as i64 <= value,
            });
        }
    }

    /// Adds the headline bound from a known crossing number (t family) or
    /// braid index (t̄ family).
    pub fn attach_headline_bound(&mut self, invariant: i64) {
        match self.family {
            MoveFamily::T => self.push_check("c(K)-1", invariant - 1, 3),
            MoveFamily::Tbar => self.push_check("b(K)-1", invariant - 1, 2),
        }
    }

    pub fn bounds_hold(&self) -> bool {
        match &self.bounds {
            Bounds::Inapplicable => true,
            Bounds::Checked { checks } => checks.iter().all(|c| c.holds),
        }
    }

    /// Adds an `F_p` column per `k >= 3` for each of the `primes` smallest
    /// Dirichlet primes. Only meaningful for the t family.
    pub fn add_modp_columns(&mut self, p: &LaurentPoly2, primes: usize) -> Result<()> {
        for v in self.verdicts.iter_mut().filter(|v| v.k >= 3) {
            for skip in 0..primes {
                let root = crate::cyclo::find_finite_field_root(v.k, skip)?;
                let obstructed = t_test_modp(p, v.k, &root)?.is_obstructed();
                v.modp.push(ModpColumn {
                    p: root.p,
                    obstructed,
                });
            }
        }
        Ok(())
    }
}

/// Runs both move families for `k = 2..=k_max`. The t̄ verdict fuses the
/// Conway and HOMFLY tests; either one obstructs.
pub fn candidate_sets(
    knot: &str,
    p: &LaurentPoly2,
    nabla: &LaurentPoly1<BigInt>,
    k_max: u64,
) -> Result<(ObstructionReport, ObstructionReport)> {
    require_k(k_max, 2)?;
    let applicable = !p.is_one();
    let bounds = || {
        if applicable {
            Bounds::Checked { checks: Vec::new() }
        } else {
            Bounds::Inapplicable
        }
    };

    let mut t = ObstructionReport {
        knot: knot.to_string(),
        family: MoveFamily::T,
        k_min: 2,
        k_max,
        verdicts: Vec::new(),
        bounds: bounds(),
        note: VERDICT_NOTE,
    };
    let mut tbar = ObstructionReport {
        family: MoveFamily::Tbar,
        ..t.clone()
    };

    for k in 2..=k_max {
        t.verdicts.push(KVerdict::from_verdict(k, t_test(p, k)?));
        let v = match tbar_test(p, k)? {
            Verdict::NotObstructed => fox_test(nabla, k)?,
            obstructed => obstructed,
        };
        tbar.verdicts.push(KVerdict::from_verdict(k, v));
    }

    if applicable {
        let prof = p.degree_profile()?;
        t.push_check("deg_z(P)", prof.z_degree, 3);
        tbar.push_check("a-span(P)/2", prof.a_span / 2, 2);
    }
    Ok((t, tbar))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::find_finite_field_root;
    use crate::poly::Var;

    fn trefoil() -> LaurentPoly2 {
        LaurentPoly2::from_small(&[(2, 0, 2), (4, 0, -1), (2, 2, 1)])
    }

    fn k1() -> LaurentPoly2 {
        LaurentPoly2::from_small(&[(2, 0, 1), (-2, 0, 1), (0, 0, -1), (0, 2, -1)])
    }

    fn k2() -> LaurentPoly2 {
        LaurentPoly2::from_small(&[(4, 0, 1), (2, 0, -1), (-2, 0, 1), (0, 2, -1), (2, 2, -1)])
    }

    fn nabla(c: &[(i64, i64)]) -> LaurentPoly1<BigInt> {
        LaurentPoly1::from_terms(Var::Z, c.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn fox_examples() {
        let k2n = nabla(&[(0, 1), (2, -2)]);
        assert_eq!(fox_test(&k2n, 2).unwrap(), Verdict::NotObstructed);
        match fox_test(&k2n, 3).unwrap() {
            Verdict::Obstructed(c) => assert_eq!(c.residual.to_string(), r#"[[0,"1"],[2,"1"]]"#),
            v => panic!("{v:?}"),
        }
        let tre = nabla(&[(0, 1), (2, 1)]);
        for k in 2..=20 {
            assert!(fox_test(&tre, k).unwrap().is_obstructed());
        }
        assert!(fox_test(&tre, 1).is_err());
    }

    #[test]
    fn fibred_examples() {
        assert!(fibred_obstruction(&nabla(&[(0, 1), (2, 1)])));
        assert!(!fibred_obstruction(&nabla(&[(0, 1), (2, -2)])));
        assert!(!fibred_obstruction(&nabla(&[(0, 1)])));
    }

    #[test]
    fn tbar_examples() {
        assert_eq!(tbar_test(&k2(), 2).unwrap(), Verdict::NotObstructed);
        assert!(tbar_test(&trefoil(), 2).unwrap().is_obstructed());
        for k in 2..10 {
            assert_eq!(
                tbar_test(&LaurentPoly2::one(), k).unwrap(),
                Verdict::NotObstructed
            );
        }
    }

    #[test]
    fn t_examples() {
        assert!(t_test(&trefoil(), 3).unwrap().is_obstructed());
        assert_eq!(t_test(&trefoil(), 2).unwrap(), Verdict::NotObstructed);
        // specialization -a^4: a pure power, but coefficient -1
        match t_test(&trefoil(), 4).unwrap() {
            Verdict::Obstructed(c) => {
                assert_eq!(c.test, TestKind::HomflyAtTwistValue);
                assert_eq!(c.residual.to_string(), r#"[[4,{"n":8,"rep":[[0,"-1"]]}]]"#);
            }
            v => panic!("{v:?}"),
        }
        assert!(t_test(&k1(), 2).unwrap().is_obstructed());
    }

    #[test]
    fn modp_examples() {
        let root = find_finite_field_root(3, 0).unwrap();
        assert!(t_test_modp(&trefoil(), 3, &root).unwrap().is_obstructed());
        assert_eq!(
            t_test_modp(&LaurentPoly2::one(), 3, &root).unwrap(),
            Verdict::NotObstructed
        );
        assert_eq!(
            t_test_modp(&LaurentPoly2::monomial(6, 0, 1), 3, &root).unwrap(),
            Verdict::NotObstructed
        );
        assert_eq!(
            t_test_modp(&trefoil(), 4, &root),
            Err(Error::MismatchedRoot { root: 3, asked: 4 })
        );
    }

    #[test]
    fn fwm_examples() {
        let b = |p: &LaurentPoly2| {
            let f = fwm_bounds(p).unwrap();
            (f.crossing_lb, f.braid_index_lb)
        };
        assert_eq!(b(&trefoil()), (3, 2));
        assert_eq!(b(&LaurentPoly2::one()), (1, 1));
        assert_eq!(b(&k2()), (3, 4));
        let odd = LaurentPoly2::from_small(&[(0, 0, 1), (1, 0, 1)]);
        assert!(matches!(fwm_bounds(&odd), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn braid_index_after_twist() {
        assert_eq!(braid_index_lb_after_twist(&trefoil(), 3).unwrap(), 2);
        assert_eq!(braid_index_lb_after_twist(&trefoil(), 4).unwrap(), 1);
        assert_eq!(braid_index_lb_after_twist(&k2(), 3).unwrap(), 4);
    }

    #[test]
    fn exceptional_sets() {
        assert_eq!(
            exceptional_k_set(&trefoil(), 20).unwrap(),
            BTreeSet::from([4])
        );
        assert!(exceptional_k_set(&LaurentPoly2::one(), 20)
            .unwrap()
            .is_empty());
        assert!(exceptional_k_set(&k1(), 20).unwrap().is_empty());
        assert!(exceptional_k_set(&k2(), 20).unwrap().is_empty());
    }

    #[test]
    fn trefoil_candidates() {
        let (t, tbar) = candidate_sets("3_1", &trefoil(), &nabla(&[(0, 1), (2, 1)]), 20).unwrap();
        assert_eq!(t.candidates(), BTreeSet::from([2]));
        assert!(tbar.candidates().is_empty());
        assert!(t.bounds_hold() && tbar.bounds_hold());
    }

    #[test]
    fn unknot_bounds_inapplicable() {
        let (t, _) = candidate_sets("0_1", &LaurentPoly2::one(), &nabla(&[(0, 1)]), 5).unwrap();
        assert_eq!(t.bounds, Bounds::Inapplicable);
        assert_eq!(t.candidates().len(), 4);
    }
}
