//! Two-strand torus knots `T(2, m)` and twist knots `K_n`: closed-form
//! HOMFLY polynomials, explicit untwisting sequences, and the divisor-set
//! verification grid.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::homfly::two_strand_homfly;
use crate::obstruct::{braid_index_lb_after_twist, fox_test, t_test, tbar_test, MoveFamily};
use crate::poly::LaurentPoly2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Torus2,
    Twist,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyKind::Torus2 => write!(f, "torus2"),
            FamilyKind::Twist => write!(f, "twist"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyInstance {
    pub kind: FamilyKind,
    pub parameter: i64,
    #[serde(serialize_with = "serialize_display")]
    pub braid: BraidWord,
}

fn serialize_display<S: serde::Serializer>(
    b: &BraidWord,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(b)
}

impl FamilyInstance {
    /// `T(2, m)` as the closure of `σ_1^m`.
    pub fn torus2(m: i64) -> Result<Self> {
        if m.is_even() {
            return Err(Error::NotAKnot(2));
        }
        Ok(FamilyInstance {
            kind: FamilyKind::Torus2,
            parameter: m,
            braid: BraidWord::two_strand(m),
        })
    }

    /// `K_n`, with `K_0` the unknot and `K_1` the figure-eight.
    pub fn twist(n: i64) -> Result<Self> {
        if n < 0 {
            return Err(Error::Inconsistent(format!(
                "twist knot index {n} is negative"
            )));
        }
        Ok(FamilyInstance {
            kind: FamilyKind::Twist,
            parameter: n,
            braid: twist_knot_braid(n as usize),
        })
    }

    /// Closed-form HOMFLY polynomial.
    pub fn homfly(&self) -> Result<LaurentPoly2> {
        match self.kind {
            FamilyKind::Torus2 => torus_homfly(self.parameter),
            FamilyKind::Twist => Ok(twist_knot_homfly(self.parameter as u64)),
        }
    }

    pub fn name(&self) -> String {
        match self.kind {
            FamilyKind::Torus2 => format!("T(2,{})", self.parameter),
            FamilyKind::Twist => format!("K_{}", self.parameter),
        }
    }
}

/// A braid word whose closure is `K_n`, on `n + 2` strands for `n >= 2`.
pub fn twist_knot_braid(n: usize) -> BraidWord {
    match n {
        0 => BraidWord::new_unchecked(1, Vec::new()),
        1 => BraidWord::new_unchecked(3, vec![1, -2, 1, -2]),
        _ => {
            let mut w = vec![1, 1, 2, -1];
            for j in 2..n as i32 {
                w.extend([j, j + 1, -j]);
            }
            let top = n as i32 + 1;
            w.extend([-top, top - 1, -top]);
            BraidWord::new_unchecked(n + 2, w)
        }
    }
}

/// HOMFLY of `T(2, m)` from the twist-matrix recursion.
pub fn torus_homfly(m: i64) -> Result<LaurentPoly2> {
    if m.is_even() {
        return Err(Error::NotAKnot(2));
    }
    Ok(two_strand_homfly(m))
}

/// `P(K_{n+1}) = a^2 P(K_n) + (a^{-2} - 1 - z^2)`, `P(K_0) = 1`.
pub fn twist_knot_homfly(n: u64) -> LaurentPoly2 {
    let clasp = LaurentPoly2::from_small(&[(-2, 0, 1), (0, 0, -1), (0, 2, -1)]);
    (0..n).fold(LaurentPoly2::one(), |p, _| &p.shift(2, 0) + &clasp)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct Move {
    pub family: MoveFamily,
    pub k: u64,
    pub direction: i8,
    pub location: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MoveSequence {
    pub start: FamilyInstance,
    pub moves: Vec<Move>,
    pub end: &'static str,
}

const TWO_STRAND: &str = "two-strand twist region";
const CLASP: &str = "clasp twist region";

impl MoveSequence {
    /// Exponent bookkeeping: the crossing count of the twisted region after
    /// every move has been applied.
    pub fn final_exponent(&self) -> i64 {
        let start = match self.start.kind {
            FamilyKind::Torus2 => self.start.parameter,
            FamilyKind::Twist => 2 * self.start.parameter,
        };
        self.moves
            .iter()
            .fold(start, |e, m| e + i64::from(m.direction) * 2 * m.k as i64)
    }

    /// True when the replayed presentation is the unknot, both by exponent
    /// and by its closed-form HOMFLY polynomial.
    pub fn replays_to_unknot(&self) -> bool {
        let e = self.final_exponent();
        match self.start.kind {
            FamilyKind::Torus2 => e.abs() == 1 && two_strand_homfly(e).is_one(),
            FamilyKind::Twist => e == 0 && twist_knot_homfly(0).is_one(),
        }
    }
}

/// Explicit sequence of inverse moves to the unknot, when the family and `k`
/// admit the obvious one.
pub fn untwist_witness(
    inst: &FamilyInstance,
    family: MoveFamily,
    k: u64,
) -> Result<Option<MoveSequence>> {
    if k < 1 {
        return Err(Error::KOutOfRange { k, min: 1 });
    }
    let step = 2 * k as i64;
    let (count, direction, location) = match (inst.kind, family) {
        (FamilyKind::Torus2, MoveFamily::T) => {
            let m = inst.parameter;
            match [1, -1].into_iter().find(|eps| (m - eps) % step == 0) {
                Some(eps) => ((m - eps).abs() / step, -(m - eps).signum(), TWO_STRAND),
                None => return Ok(None),
            }
        }
        (FamilyKind::Twist, MoveFamily::Tbar) => {
            let n = inst.parameter;
            if n % k as i64 != 0 {
                return Ok(None);
            }
            (n / k as i64, -1, CLASP)
        }
        _ => return Ok(None),
    };
    let moves = (0..count)
        .map(|_| Move {
            family,
            k,
            direction: direction as i8,
            location,
        })
        .collect();
    Ok(Some(MoveSequence {
        start: inst.clone(),
        moves,
        end: "unknot",
    }))
}

fn divisors(n: u64) -> BTreeSet<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// The `k` for which `K_n` untwists by `t̄_2k` moves.
pub fn twist_divisor_set(n: u64) -> BTreeSet<u64> {
    divisors(n)
}

/// The `k` for which `T(2, 2n+1)` untwists by `t_2k` moves.
pub fn torus_divisor_set(n: u64) -> BTreeSet<u64> {
    divisors(n).union(&divisors(n + 1)).copied().collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct GridCell {
    pub family: FamilyKind,
    pub n: u64,
    pub k: u64,
    pub in_divisor_set: bool,
    pub witness: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_replays: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstructed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub braid_index_lb: Option<i64>,
    pub consistent: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct GridReport {
    pub n_max: u64,
    pub k_max: u64,
    pub passed: bool,
    pub cells: Vec<GridCell>,
}

impl GridReport {
    pub fn failures(&self) -> impl Iterator<Item = &GridCell> {
        self.cells.iter().filter(|c| !c.consistent)
    }
}

fn check_cell(inst: &FamilyInstance, p: &LaurentPoly2, n: u64, k: u64) -> Result<GridCell> {
    let (family, set) = match inst.kind {
        FamilyKind::Torus2 => (MoveFamily::T, torus_divisor_set(n)),
        FamilyKind::Twist => (MoveFamily::Tbar, twist_divisor_set(n)),
    };
    let in_set = set.contains(&k);
    let witness = untwist_witness(inst, family, k)?;
    let mut failures = Vec::new();
    if witness.is_some() != in_set {
        failures.push(format!(
            "witness present = {} but k in divisor set = {in_set}",
            witness.is_some()
        ));
    }
    let witness_replays = witness.as_ref().map(|w| w.replays_to_unknot());
    if witness_replays == Some(false) {
        failures.push("witness does not replay to the unknot".into());
    }
    let obstructed = if k >= 2 {
        let v = match family {
            MoveFamily::T => t_test(p, k)?.is_obstructed(),
            MoveFamily::Tbar => {
                let nabla = p.specialize_a(&num_bigint::BigInt::from(1))?;
                tbar_test(p, k)?.is_obstructed() || fox_test(&nabla, k)?.is_obstructed()
            }
        };
        if v == in_set {
            failures.push(format!("obstructed = {v} but k in divisor set = {in_set}"));
        }
        Some(v)
    } else {
        None
    };
    let braid_index_lb = if inst.kind == FamilyKind::Twist && k >= 3 {
        let b = braid_index_lb_after_twist(p, k)?;
        if b != n as i64 + 2 {
            failures.push(format!(
                "braid index bound {b} after twisting, expected {}",
                n + 2
            ));
        }
        Some(b)
    } else {
        None
    };
    Ok(GridCell {
        family: inst.kind,
        n,
        k,
        in_divisor_set: in_set,
        witness: witness.is_some(),
        witness_replays,
        obstructed,
        braid_index_lb,
        consistent: failures.is_empty(),
        failures,
    })
}

fn check_row(n: u64, k_max: u64) -> Result<Vec<GridCell>> {
    let mut out = Vec::new();
    for inst in [
        FamilyInstance::torus2(2 * n as i64 + 1)?,
        FamilyInstance::twist(n as i64)?,
    ] {
        let p = inst.homfly()?;
        for k in 1..=k_max {
            out.push(check_cell(&inst, &p, n, k)?);
        }
    }
    Ok(out)
}

/// Checks, for every `n <= n_max` and `k <= k_max`, that witnesses exist
/// exactly on the divisor sets and that every other `k >= 2` is obstructed.
pub fn verify_divisor_sets(n_max: u64, k_max: u64) -> Result<GridReport> {
    if n_max < 1 {
        return Err(Error::Inconsistent("n_max must be at least 1".into()));
    }
    if k_max < 2 {
        return Err(Error::KOutOfRange { k: k_max, min: 2 });
    }
    let rows: Vec<Result<Vec<GridCell>>> = std::thread::scope(|s| {
        let handles: Vec<_> = (1..=n_max)
            .map(|n| s.spawn(move || check_row(n, k_max)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    let mut cells = Vec::new();
    for row in rows {
        cells.extend(row?);
    }
    cells.sort_by_key(|c| (c.family == FamilyKind::Twist, c.n, c.k));
    Ok(GridReport {
        n_max,
        k_max,
        passed: cells.iter().all(|c| c.consistent),
        cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homfly::SkeinEngine;

    #[test]
    fn torus_values() {
        assert!(torus_homfly(1).unwrap().is_one());
        assert_eq!(
            torus_homfly(3).unwrap(),
            LaurentPoly2::from_small(&[(2, 0, 2), (4, 0, -1), (2, 2, 1)])
        );
        let p5 = torus_homfly(5).unwrap();
        let levels: BTreeSet<i64> = p5.terms().map(|(a, _, _)| a).collect();
        assert_eq!(levels, BTreeSet::from([4, 6]));
        assert_eq!(torus_homfly(4), Err(Error::NotAKnot(2)));
    }

    #[test]
    fn twist_values() {
        assert!(twist_knot_homfly(0).is_one());
        assert_eq!(
            twist_knot_homfly(1),
            LaurentPoly2::from_small(&[(2, 0, 1), (-2, 0, 1), (0, 0, -1), (0, 2, -1)])
        );
        let p2 = twist_knot_homfly(2);
        let prof = p2.degree_profile().unwrap();
        assert_eq!((prof.a_min, prof.a_max), (-2, 4));
    }

    #[test]
    fn twist_braids_match_closed_form() {
        let engine = SkeinEngine::default();
        for n in 0..=5 {
            let w = twist_knot_braid(n);
            assert_eq!(w.closure_component_count(), 1);
            assert_eq!(
                engine.homfly_braid(&w).unwrap(),
                twist_knot_homfly(n as u64),
                "n = {n}"
            );
        }
    }

    #[test]
    fn witness_examples() {
        let t25 = FamilyInstance::torus2(25).unwrap();
        let w = untwist_witness(&t25, MoveFamily::T, 12).unwrap().unwrap();
        assert_eq!((w.moves.len(), w.final_exponent()), (1, 1));
        let w = untwist_witness(&t25, MoveFamily::T, 13).unwrap().unwrap();
        assert_eq!((w.moves.len(), w.final_exponent()), (1, -1));
        let k2 = FamilyInstance::twist(2).unwrap();
        let w = untwist_witness(&k2, MoveFamily::Tbar, 2).unwrap().unwrap();
        assert_eq!(w.moves.len(), 1);
        assert!(w.replays_to_unknot());
        let t7 = FamilyInstance::torus2(7).unwrap();
        assert_eq!(untwist_witness(&t7, MoveFamily::T, 5).unwrap(), None);
        assert_eq!(untwist_witness(&t7, MoveFamily::Tbar, 1).unwrap(), None);
        assert!(untwist_witness(&t7, MoveFamily::T, 0).is_err());
    }

    #[test]
    fn divisor_sets() {
        assert_eq!(torus_divisor_set(1), BTreeSet::from([1, 2]));
        assert_eq!(
            torus_divisor_set(12),
            BTreeSet::from([1, 2, 3, 4, 6, 12, 13])
        );
    }

    #[test]
    fn divisor_grid_small() {
        let r = verify_divisor_sets(4, 12).unwrap();
        assert!(r.passed, "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.cells.len(), 2 * 4 * 12);
    }
}
