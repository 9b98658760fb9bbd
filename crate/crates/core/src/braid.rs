//! Braid words and the combinatorial diagrams of their closures.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A word in the Artin generators of `B_n`.
///
/// Letter `i > 0` is `σ_i`; letter `-i` is `σ_i^{-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Parse {
                position: 0,
                token: "0".into(),
                reason: "strand count must be at least 1".into(),
            });
        }
        for (pos, &l) in letters.iter().enumerate() {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::Parse {
                    position: pos,
                    token: l.to_string(),
                    reason: format!("generator out of range for {strands} strands"),
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Uses the smallest strand count the letters allow.
    pub fn from_letters(letters: Vec<i32>) -> Result<Self> {
        let strands = letters
            .iter()
            .map(|l| l.unsigned_abs() as usize + 1)
            .max()
            .unwrap_or(1);
        Self::new(strands, letters)
    }

    /// The closure of `σ_1^m` on two strands.
    pub fn two_strand(m: i64) -> Self {
        let letter = if m >= 0 { 1 } else { -1 };
        BraidWord {
            strands: 2,
            letters: vec![letter; m.unsigned_abs() as usize],
        }
    }

    pub(crate) fn new_unchecked(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters
            .iter()
            .all(|&l| l != 0 && (l.unsigned_abs() as usize) < strands));
        BraidWord { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    /// Permutation of strand positions: `perm[p]` is where the strand entering
    /// at position `p` leaves.
    pub fn permutation(&self) -> Vec<usize> {
        let mut pos: Vec<usize> = (0..self.strands).collect();
        // track the strand that currently sits at each position
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            pos.swap(i, i + 1);
        }
        let mut perm = vec![0; self.strands];
        for (p, &s) in pos.iter().enumerate() {
            perm[s] = p;
        }
        perm
    }

    /// Number of link components of the closure.
    pub fn closure_component_count(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = perm[p];
            }
        }
        cycles
    }

    /// Stabilization: appends `σ_n^{±1}` on a new strand.
    pub fn stabilize(&self, positive: bool) -> Self {
        let mut letters = self.letters.clone();
        let g = self.strands as i32;
        letters.push(if positive { g } else { -g });
        BraidWord {
            strands: self.strands + 1,
            letters,
        }
    }

    /// Cyclic rotation (conjugation) by `shift` letters.
    pub fn rotate(&self, shift: usize) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let s = shift % letters.len();
            letters.rotate_left(s);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    pub fn mirror(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|l| -l).collect(),
        }
    }

    pub fn to_diagram(&self) -> Diagram {
        Diagram::from_braid(self)
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Whitespace-separated nonzero integers, optionally prefixed by `n:` to
    /// fix the strand count, e.g. `"1 -2 1 -2"` or `"3:1 1 1"`.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let (forced, body) = match text.split_once(':') {
            Some((n, rest)) => {
                let n: usize = n.trim().parse().map_err(|_| Error::Parse {
                    position: 0,
                    token: n.to_string(),
                    reason: "strand count must be a positive integer".into(),
                })?;
                (Some(n), rest)
            }
            None => (None, text),
        };
        let mut letters = Vec::new();
        for (pos, tok) in body.split_whitespace().enumerate() {
            let l: i32 = tok.parse().map_err(|_| Error::Parse {
                position: pos,
                token: tok.to_string(),
                reason: "not an integer".into(),
            })?;
            if l == 0 {
                return Err(Error::Parse {
                    position: pos,
                    token: tok.to_string(),
                    reason: "generator index 0".into(),
                });
            }
            letters.push(l);
        }
        match forced {
            Some(n) => BraidWord::new(n, letters),
            None => BraidWord::from_letters(letters),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let natural = self
            .letters
            .iter()
            .map(|l| l.unsigned_abs() as usize + 1)
            .max()
            .unwrap_or(1);
        if self.strands != natural {
            write!(f, "{}:", self.strands)?;
        }
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Over,
    Under,
}

/// One crossing of a closed braid diagram.
///
/// Strands run downward. For a positive letter the strand entering from the
/// right passes over; for a negative letter the one entering from the left.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub sign: i8,
    pub over_in: usize,
    pub over_out: usize,
    pub under_in: usize,
    pub under_out: usize,
}

impl Crossing {
    fn out_for(&self, role: Role) -> usize {
        match role {
            Role::Over => self.over_out,
            Role::Under => self.under_out,
        }
    }
}

/// An edge of the diagram: from the crossing it leaves to the crossing it
/// enters, or a crossingless loop when both are `None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub tail: Option<(usize, Role)>,
    pub head: Option<(usize, Role)>,
}

/// Purely combinatorial diagram of a braid closure. Crossing `j` comes from
/// letter `j` of the source word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    word: BraidWord,
    crossings: Vec<Crossing>,
    arcs: Vec<Arc>,
    components: usize,
}

impl Diagram {
    pub fn from_braid(word: &BraidWord) -> Self {
        let n = word.strands;
        let len = word.letters.len();
        // arc 2j leaves crossing j at the left position, 2j+1 at the right;
        // untouched positions get loop arcs after those
        let mut last_out: Vec<Option<usize>> = vec![None; n];
        for (j, &l) in word.letters.iter().enumerate() {
            let i = l.unsigned_abs() as usize - 1;
            last_out[i] = Some(2 * j);
            last_out[i + 1] = Some(2 * j + 1);
        }
        let mut arcs = vec![
            Arc {
                tail: None,
                head: None
            };
            2 * len
        ];
        let mut cur: Vec<usize> = vec![usize::MAX; n];
        for p in 0..n {
            match last_out[p] {
                Some(a) => cur[p] = a,
                None => {
                    cur[p] = arcs.len();
                    arcs.push(Arc {
                        tail: None,
                        head: None,
                    });
                }
            }
        }
        let mut crossings = Vec::with_capacity(len);
        for (j, &l) in word.letters.iter().enumerate() {
            let i = l.unsigned_abs() as usize - 1;
            let from_left = cur[i];
            let from_right = cur[i + 1];
            // the strand from the left leaves at the right position and vice versa
            let to_right = 2 * j + 1;
            let to_left = 2 * j;
            let c = if l > 0 {
                Crossing {
                    sign: 1,
                    over_in: from_right,
                    over_out: to_left,
                    under_in: from_left,
                    under_out: to_right,
                }
            } else {
                Crossing {
                    sign: -1,
                    over_in: from_left,
                    over_out: to_right,
                    under_in: from_right,
                    under_out: to_left,
                }
            };
            arcs[c.over_in].head = Some((j, Role::Over));
            arcs[c.under_in].head = Some((j, Role::Under));
            arcs[c.over_out].tail = Some((j, Role::Over));
            arcs[c.under_out].tail = Some((j, Role::Under));
            crossings.push(c);
            cur[i] = to_left;
            cur[i + 1] = to_right;
        }
        let mut d = Diagram {
            word: word.clone(),
            crossings,
            arcs,
            components: 0,
        };
        d.components = d.trace_components().len();
        d
    }

    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    fn next_arc(&self, arc: usize) -> usize {
        match self.arcs[arc].head {
            Some((c, role)) => self.crossings[c].out_for(role),
            None => arc,
        }
    }

    /// Arc cycles, each starting at its smallest arc id, ordered by that id.
    pub fn trace_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.arcs.len()];
        let mut comps = Vec::new();
        for start in 0..self.arcs.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut a = start;
            while !seen[a] {
                seen[a] = true;
                cycle.push(a);
                a = self.next_arc(a);
            }
            comps.push(cycle);
        }
        comps
    }

    /// The first crossing that is first reached along its under-strand when
    /// components are walked in order from their basepoints.
    ///
    /// `None` means the diagram is descending, hence a split unlink.
    pub fn first_bad_crossing(&self) -> Option<usize> {
        let mut visited = vec![false; self.crossings.len()];
        for comp in self.trace_components() {
            for &a in &comp {
                if let Some((c, role)) = self.arcs[a].head {
                    if !visited[c] {
                        if role == Role::Under {
                            return Some(c);
                        }
                        visited[c] = true;
                    }
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn parse_examples() {
        let b = parse("1 1 1");
        assert_eq!((b.strands(), b.letters()), (2, &[1, 1, 1][..]));
        let b = parse("");
        assert_eq!((b.strands(), b.len()), (1, 0));
        let b = parse("1 -2 1 -2");
        assert_eq!((b.strands(), b.letters()), (3, &[1, -2, 1, -2][..]));
        let b = parse("4: 1 1 1");
        assert_eq!(b.strands(), 4);
    }

    #[test]
    fn parse_errors_carry_position() {
        match "1 0 1".parse::<BraidWord>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 1),
            other => panic!("{other:?}"),
        }
        match "1 x".parse::<BraidWord>() {
            Err(Error::Parse {
                position, token, ..
            }) => assert_eq!((position, token.as_str()), (1, "x")),
            other => panic!("{other:?}"),
        }
        match "2:1 2".parse::<BraidWord>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 1),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn print_parse() {
        for s in ["1 1 1", "", "1 -2 1 -2", "3:1 1 1", "5:"] {
            assert_eq!(parse(s).to_string(), s);
        }
    }

    #[test]
    fn component_counts() {
        assert_eq!(parse("1 1 1").closure_component_count(), 1);
        assert_eq!(parse("1 1").closure_component_count(), 2);
        assert_eq!(parse("1 -2 1 -2").closure_component_count(), 1);
        assert_eq!(parse("3:").closure_component_count(), 3);
    }

    #[test]
    fn diagrams() {
        let d = parse("").to_diagram();
        assert_eq!((d.crossing_count(), d.component_count()), (0, 1));

        let d = parse("1 1 1").to_diagram();
        assert_eq!(d.crossing_count(), 3);
        assert!(d.crossings().iter().all(|c| c.sign == 1));
        assert_eq!(d.component_count(), 1);

        let d = parse("-1 -1").to_diagram();
        assert!(d.crossings().iter().all(|c| c.sign == -1));
        assert_eq!(d.component_count(), 2);
    }

    #[test]
    fn every_arc_is_wired() {
        let d = parse("1 -2 1 3 -2 -3").to_diagram();
        for a in d.arcs() {
            assert!(a.head.is_some() && a.tail.is_some());
        }
        for (j, c) in d.crossings().iter().enumerate() {
            assert_eq!(d.arcs()[c.over_in].head, Some((j, Role::Over)));
            assert_eq!(d.arcs()[c.under_out].tail, Some((j, Role::Under)));
        }
    }

    #[test]
    fn descending_detection() {
        // a single crossing and the split two-component diagram are both unlinks
        assert!(parse("").to_diagram().first_bad_crossing().is_none());
        assert!(
            parse("1").to_diagram().first_bad_crossing().is_none()
                || parse("-1").to_diagram().first_bad_crossing().is_none()
        );
        // the trefoil diagram cannot be descending
        assert!(parse("1 1 1").to_diagram().first_bad_crossing().is_some());
    }
}
