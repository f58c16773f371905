//! Arcs on `n + 1` nodes, encoded as a left endpoint plus the word of
//! under/over letters at the interior nodes.
//!
//! Nodes are the integers `0..=n`. An arc runs from `left` to
//! `right = left + pattern.len() + 1` and passes below (`u`) or above (`o`)
//! each node strictly in between. The terminal letter `e` of the full word
//! encoding is implicit, so two arcs are combinatorially equivalent exactly
//! when they are equal as values.

use std::fmt;

use crate::error::{Error, Result};

/// Word letters, totally ordered `U < E < O`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    U,
    E,
    O,
}

impl Letter {
    pub fn from_char(c: char) -> Result<Letter> {
        match c {
            'u' => Ok(Letter::U),
            'o' => Ok(Letter::O),
            'e' => Ok(Letter::E),
            _ => Err(Error::BadPatternLetter),
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::U => 'u',
            Letter::E => 'e',
            Letter::O => 'o',
        }
    }

    /// Swap under and over; `E` is fixed.
    pub fn mirrored(self) -> Letter {
        match self {
            Letter::U => Letter::O,
            Letter::O => Letter::U,
            Letter::E => Letter::E,
        }
    }
}

/// An arc on `n + 1` nodes.
///
/// Ordering is lexicographic by `(left, pattern)` with `u < o`, which is the
/// canonical enumeration order used everywhere in this crate.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Arc {
    n: usize,
    left: usize,
    pattern: Vec<Letter>,
}

impl PartialOrd for Arc {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Arc {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.left, &self.pattern).cmp(&(other.left, &other.pattern))
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.left, self.pattern_string())
    }
}

impl Arc {
    /// Canonical constructor. Rejects out-of-range endpoints and any `e`
    /// in the pattern.
    pub fn new(left: usize, pattern: Vec<Letter>, n: usize) -> Result<Arc> {
        if pattern.contains(&Letter::E) {
            return Err(Error::BadPatternLetter);
        }
        let right = left + pattern.len() + 1;
        if right > n {
            return Err(Error::ArcOutOfRange {
                left,
                len: pattern.len(),
                right,
                n,
            });
        }
        Ok(Arc { n, left, pattern })
    }

    /// Parse `"left:pattern"`, e.g. `"0:uoou"` or `"3:"`.
    pub fn parse(s: &str, n: usize) -> Result<Arc> {
        let bad = || Error::BadArcString(s.to_string());
        let (l, p) = s.split_once(':').ok_or_else(bad)?;
        let left: usize = l.trim().parse().map_err(|_| bad())?;
        let pattern = p
            .trim()
            .chars()
            .map(Letter::from_char)
            .collect::<Result<Vec<_>>>()?;
        Arc::new(left, pattern, n)
    }

    /// Shorthand used pervasively in tests: `arc(0, "uoou", 6)`.
    pub fn from_str_pattern(left: usize, pattern: &str, n: usize) -> Result<Arc> {
        let pattern = pattern
            .chars()
            .map(Letter::from_char)
            .collect::<Result<Vec<_>>>()?;
        Arc::new(left, pattern, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.left + self.pattern.len() + 1
    }

    pub fn pattern(&self) -> &[Letter] {
        &self.pattern
    }

    pub fn pattern_string(&self) -> String {
        self.pattern.iter().map(|l| l.to_char()).collect()
    }

    /// Interior nodes, i.e. the arrow support `[left+1, right-1]`.
    pub fn arrow_support(&self) -> std::ops::Range<usize> {
        self.left + 1..self.right()
    }

    /// Support vertices of the corresponding brick: `(left, right]`.
    pub fn support_vertices(&self) -> std::ops::RangeInclusive<usize> {
        self.left + 1..=self.right()
    }

    /// Letter of the full word at node `i`: `E` at the endpoints, the
    /// pattern letter strictly inside, `None` outside the closed support.
    pub fn letter_at(&self, i: usize) -> Option<Letter> {
        if i == self.left || i == self.right() {
            Some(Letter::E)
        } else if i > self.left && i < self.right() {
            Some(self.pattern[i - self.left - 1])
        } else {
            None
        }
    }

    /// The arc reflected through the node axis (all letters swapped).
    pub fn mirrored(&self) -> Arc {
        Arc {
            n: self.n,
            left: self.left,
            pattern: self.pattern.iter().map(|l| l.mirrored()).collect(),
        }
    }
}

/// All arcs on `n + 1` nodes in canonical order. The count is
/// `2^(n+1) - n - 2`.
pub fn enumerate_arcs(n: usize) -> Vec<Arc> {
    let mut out = Vec::new();
    for left in 0..n {
        // Depth-first with `u` before `o` yields (left, pattern)
        // lexicographic order, shorter prefixes first.
        let max_len = n - left - 1;
        let mut stack: Vec<Vec<Letter>> = vec![Vec::new()];
        while let Some(pattern) = stack.pop() {
            if pattern.len() < max_len {
                let mut with_o = pattern.clone();
                with_o.push(Letter::O);
                stack.push(with_o);
                let mut with_u = pattern.clone();
                with_u.push(Letter::U);
                stack.push(with_u);
            }
            out.push(Arc {
                n,
                left,
                pattern,
            });
        }
    }
    debug_assert!(out.windows(2).all(|w| w[0] < w[1]));
    out
}

/// `inner` occupies part of `outer` and passes on the same side of every
/// node in its own arrow support.
pub fn is_restriction(inner: &Arc, outer: &Arc) -> bool {
    assert_eq!(inner.n(), outer.n(), "arcs must share an ambient node count");
    if inner.left < outer.left || inner.right() > outer.right() {
        return false;
    }
    inner
        .arrow_support()
        .all(|k| outer.letter_at(k) == inner.letter_at(k))
}

/// Restriction whose non-shared endpoints sit below `outer`'s over-passes on
/// the left and under-passes on the right.
pub fn is_quotient_arc(inner: &Arc, outer: &Arc) -> bool {
    is_restriction(inner, outer)
        && (inner.left == outer.left || outer.letter_at(inner.left) == Some(Letter::O))
        && (inner.right() == outer.right() || outer.letter_at(inner.right()) == Some(Letter::U))
}

/// Dual of [`is_quotient_arc`].
pub fn is_submodule_arc(inner: &Arc, outer: &Arc) -> bool {
    is_restriction(inner, outer)
        && (inner.left == outer.left || outer.letter_at(inner.left) == Some(Letter::U))
        && (inner.right() == outer.right() || outer.letter_at(inner.right()) == Some(Letter::O))
}

/// Pattern test `u*o*`: all under-passes strictly before all over-passes.
pub fn is_tau_rigid_arc(arc: &Arc) -> bool {
    let mut seen_o = false;
    for &l in arc.pattern() {
        match l {
            Letter::O => seen_o = true,
            Letter::U if seen_o => return false,
            _ => {}
        }
    }
    true
}

/// Orientation of the interior nodes `1..=n-1`, one letter each.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EpsOrientation {
    letters: Vec<Letter>,
}

impl EpsOrientation {
    pub fn new(letters: Vec<Letter>) -> Result<EpsOrientation> {
        if letters.contains(&Letter::E) {
            return Err(Error::BadOrientation);
        }
        Ok(EpsOrientation { letters })
    }

    /// Parse e.g. `"uou"` for `n = 4`.
    pub fn parse(s: &str) -> Result<EpsOrientation> {
        let letters = s
            .chars()
            .map(Letter::from_char)
            .collect::<Result<Vec<_>>>()
            .map_err(|_| Error::BadOrientation)?;
        EpsOrientation::new(letters)
    }

    pub fn constant(l: Letter, n: usize) -> Result<EpsOrientation> {
        EpsOrientation::new(vec![l; n.saturating_sub(1)])
    }

    pub fn n(&self) -> usize {
        self.letters.len() + 1
    }

    /// Letter at interior node `i`, `1 <= i <= n-1`.
    pub fn at(&self, i: usize) -> Letter {
        assert!(i >= 1 && i < self.n(), "node {i} outside orientation domain");
        self.letters[i - 1]
    }

    pub fn as_string(&self) -> String {
        self.letters.iter().map(|l| l.to_char()).collect()
    }

    /// All `2^(n-1)` orientations for ambient size `n`, in lexicographic
    /// order with `u < o`.
    pub fn all(n: usize) -> Vec<EpsOrientation> {
        let k = n.saturating_sub(1);
        let mut out = Vec::with_capacity(1 << k);
        for bits in 0..(1usize << k) {
            let letters = (0..k)
                .map(|i| {
                    if bits >> i & 1 == 0 {
                        Letter::U
                    } else {
                        Letter::O
                    }
                })
                .collect();
            out.push(EpsOrientation { letters });
        }
        out
    }
}

/// The arc matches the orientation at every node of its arrow support.
pub fn is_eps_admissible(arc: &Arc, eps: &EpsOrientation) -> bool {
    assert_eq!(arc.n(), eps.n(), "orientation and arc ambient sizes differ");
    arc.arrow_support()
        .all(|k| arc.letter_at(k) == Some(eps.at(k)))
}
