use std::collections::HashMap;
use std::sync::Mutex;

use crate::braid::{BraidWord, Diagram};
use crate::error::{Error, Result};
use crate::poly::{LaurentPoly1, LaurentPoly2};

pub const DEFAULT_CROSSING_CAP: usize = 20;

/// Value of the two-component unlink, `(a^{-1} - a) z^{-1}`.
pub fn unlink_factor() -> LaurentPoly2 {
    LaurentPoly2::from_small(&[(-1, -1, 1), (1, -1, -1)])
}

/// HOMFLY value of the `c`-component unlink.
pub fn unlink(c: usize) -> LaurentPoly2 {
    assert!(c >= 1);
    unlink_factor().pow(c as u32 - 1)
}

/// Skein-tree evaluator with a memo keyed on canonical braid words.
///
/// Normalisation is `a^{-1} P(L+) - a P(L-) = z P(L0)` and `P(O) = 1`.
#[derive(Debug)]
pub struct SkeinEngine {
    cap: usize,
    memo: Mutex<HashMap<(usize, Vec<i32>), LaurentPoly2>>,
}

impl Default for SkeinEngine {
    fn default() -> Self {
        Self::new(DEFAULT_CROSSING_CAP)
    }
}

impl SkeinEngine {
    pub fn new(cap: usize) -> Self {
        SkeinEngine {
            cap,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn homfly(&self, d: &Diagram) -> Result<LaurentPoly2> {
        self.homfly_braid(d.word())
    }

    pub fn homfly_braid(&self, word: &BraidWord) -> Result<LaurentPoly2> {
        if word.len() > self.cap {
            return Err(Error::TooLarge {
                crossings: word.len(),
                cap: self.cap,
            });
        }
        Ok(self.eval(word.strands(), word.letters().to_vec()))
    }

    fn eval(&self, strands: usize, letters: Vec<i32>) -> LaurentPoly2 {
        let (strands, letters) = simplify(strands, letters);
        if let Some(j) = unused_generator(strands, &letters) {
            let (left, right) = split_at_generator(j, &letters);
            let pl = self.eval(j, left);
            let pr = self.eval(strands - j, right);
            return &(&unlink_factor() * &pl) * &pr;
        }
        if letters.is_empty() {
            // one strand, no crossings
            return LaurentPoly2::one();
        }
        let key = canonical_key(strands, &letters);
        if let Some(p) = self.memo.lock().unwrap().get(&key) {
            return p.clone();
        }
        let word = BraidWord::new_unchecked(strands, letters);
        let diagram = word.to_diagram();
        let value = match diagram.first_bad_crossing() {
            None => unlink(diagram.component_count()),
            Some(j) => {
                let letters = word.letters();
                let mut switched = letters.to_vec();
                switched[j] = -switched[j];
                let mut smoothed = letters.to_vec();
                smoothed.remove(j);
                let p_switched = self.eval(strands, switched);
                let p_smoothed = self.eval(strands, smoothed);
                if letters[j] > 0 {
                    // P+ = a^2 P- + a z P0
                    &p_switched.shift(2, 0) + &p_smoothed.shift(1, 1)
                } else {
                    // P- = a^{-2} P+ - a^{-1} z P0
                    &p_switched.shift(-2, 0) - &p_smoothed.shift(-1, 1)
                }
            }
        };
        self.memo
            .lock()
            .unwrap()
            .entry(key)
            .or_insert_with(|| value.clone());
        value
    }
}

/// Isotopy-preserving reductions that only ever shrink the word: cyclic free
/// cancellation and destabilization at either end of the strand range.
fn simplify(mut strands: usize, mut letters: Vec<i32>) -> (usize, Vec<i32>) {
    loop {
        let before = (strands, letters.len());
        letters = cancel_cyclically(letters);
        if strands >= 2 {
            let top = (strands - 1) as i32;
            if letters.iter().filter(|l| l.abs() == top).count() == 1 {
                letters.retain(|l| l.abs() != top);
                strands -= 1;
            }
        }
        if strands >= 2 && letters.iter().filter(|l| l.abs() == 1).count() == 1 {
            letters.retain(|l| l.abs() != 1);
            for l in letters.iter_mut() {
                *l -= l.signum();
            }
            strands -= 1;
        }
        if (strands, letters.len()) == before {
            return (strands, letters);
        }
    }
}

fn cancel_cyclically(letters: Vec<i32>) -> Vec<i32> {
    let mut stack: Vec<i32> = Vec::with_capacity(letters.len());
    for l in letters {
        if stack.last() == Some(&-l) {
            stack.pop();
        } else {
            stack.push(l);
        }
    }
    // wrap-around pairs
    let mut lo = 0;
    let mut hi = stack.len();
    while hi - lo >= 2 && stack[lo] == -stack[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    stack[lo..hi].to_vec()
}

fn unused_generator(strands: usize, letters: &[i32]) -> Option<usize> {
    (1..strands).find(|&g| !letters.iter().any(|l| l.unsigned_abs() as usize == g))
}

/// Splits a word that never uses `σ_j` into words on strands `1..=j` and
/// `j+1..=n` (the latter reindexed from 1).
fn split_at_generator(j: usize, letters: &[i32]) -> (Vec<i32>, Vec<i32>) {
    let j = j as i32;
    let left = letters.iter().copied().filter(|l| l.abs() < j).collect();
    let right = letters
        .iter()
        .copied()
        .filter(|l| l.abs() > j)
        .map(|l| l - j * l.signum())
        .collect();
    (left, right)
}

/// Minimal rotation over the word and its left-right flip `σ_i -> σ_{n-i}`,
/// both of which preserve the closure up to isotopy.
fn canonical_key(strands: usize, letters: &[i32]) -> (usize, Vec<i32>) {
    let flipped: Vec<i32> = letters
        .iter()
        .map(|l| l.signum() * (strands as i32 - l.abs()))
        .collect();
    let best = [letters.to_vec(), flipped]
        .into_iter()
        .map(|w| min_rotation(&w))
        .min()
        .unwrap();
    (strands, best)
}

fn min_rotation(w: &[i32]) -> Vec<i32> {
    (0..w.len().max(1))
        .map(|s| {
            let mut r = w.to_vec();
            if !r.is_empty() {
                r.rotate_left(s);
            }
            r
        })
        .min()
        .unwrap()
}

/// HOMFLY polynomial of a closed braid diagram, default crossing cap.
pub fn homfly(d: &Diagram) -> Result<LaurentPoly2> {
    SkeinEngine::default().homfly(d)
}

/// Conway polynomial `∇(z) = P(1, z)`.
pub fn conway(d: &Diagram) -> Result<LaurentPoly1<num_bigint::BigInt>> {
    conway_of(&homfly(d)?)
}

pub fn conway_of(p: &LaurentPoly2) -> Result<LaurentPoly1<num_bigint::BigInt>> {
    p.specialize_a(&num_bigint::BigInt::from(1))
}

/// `P(a, a^{-1} - a)`, identically `1` for a knot.
pub fn unit_specialization(p: &LaurentPoly2) -> Result<LaurentPoly1<num_bigint::BigInt>> {
    let q = LaurentPoly1::from_terms(
        crate::poly::Var::A,
        [
            (-1, num_bigint::BigInt::from(1)),
            (1, num_bigint::BigInt::from(-1)),
        ],
    );
    p.substitute_z_poly(&q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(s: &str) -> LaurentPoly2 {
        homfly(&s.parse::<BraidWord>().unwrap().to_diagram()).unwrap()
    }

    #[test]
    fn cancellation() {
        assert_eq!(cancel_cyclically(vec![1, -1, 2]), vec![2]);
        assert_eq!(cancel_cyclically(vec![1, 2, -2, -1]), Vec::<i32>::new());
        assert_eq!(cancel_cyclically(vec![-1, 2, 1]), vec![2]);
    }

    #[test]
    fn splitting() {
        assert_eq!(
            split_at_generator(2, &[1, 3, -1, -4]),
            (vec![1, -1], vec![1, -2])
        );
        assert_eq!(unused_generator(4, &[1, 3]), Some(2));
    }

    #[test]
    fn unknot_and_unlinks() {
        assert!(h("").is_one());
        assert!(h("1").is_one());
        assert!(h("-1 -2").is_one());
        assert_eq!(h("3:"), unlink(3));
        assert_eq!(h("1 -1"), unlink(2));
    }

    #[test]
    fn hopf_and_trefoil() {
        // a z P(H-) = a^-2 - 1 - z^2
        let hm = h("-1 -1");
        assert_eq!(
            hm.shift(1, 1),
            LaurentPoly2::from_small(&[(-2, 0, 1), (0, 0, -1), (0, 2, -1)])
        );
        assert_eq!(
            h("1 1 1"),
            LaurentPoly2::from_small(&[(2, 0, 2), (4, 0, -1), (2, 2, 1)])
        );
        assert_eq!(
            h("1 -2 1 -2"),
            LaurentPoly2::from_small(&[(2, 0, 1), (-2, 0, 1), (0, 0, -1), (0, 2, -1)])
        );
    }

    #[test]
    fn mirror_swaps_a() {
        let p = h("1 1 1");
        let q = h("-1 -1 -1");
        let mirrored = LaurentPoly2::from_terms(p.terms().map(|(a, z, c)| (-a, z, c.clone())));
        assert_eq!(q, mirrored);
    }

    #[test]
    fn conway_examples() {
        let c = |s: &str| {
            conway(&s.parse::<BraidWord>().unwrap().to_diagram())
                .unwrap()
                .to_string()
        };
        assert_eq!(c(""), "1");
        assert_eq!(c("1 -2 1 -2"), "1 - z^2");
        assert_eq!(c("1 1 1"), "1 + z^2");
    }

    #[test]
    fn unit_specialization_is_one() {
        for w in ["", "1 1 1", "1 -2 1 -2", "1 1 1 2 -1 2"] {
            assert!(unit_specialization(&h(w)).unwrap().is_one(), "{w}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        let w: BraidWord = "1 1 1 1 1".parse().unwrap();
        let engine = SkeinEngine::new(4);
        assert_eq!(
            engine.homfly_braid(&w),
            Err(Error::TooLarge {
                crossings: 5,
                cap: 4
            })
        );
    }
}
