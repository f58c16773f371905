//! Crossing classification and the word-combinatorial Hom/Ext counts.
//!
//! All intersection data between two arcs is computed by scanning integer
//! pairs `i < j` in their common closed support; no curves are ever drawn.
//! A pair `(i, j)` encodes a crossing directed from `src` to `dst` when
//!
//!   (b) the arcs agree strictly between `i` and `j`,
//!   (c) at `j` the source letter is `<= e` and the destination letter is
//!       `>= e`,
//!   (d) `i` is the source's left endpoint or the source passes above `i`,
//!   (e) `i` is the destination's left endpoint or the destination passes
//!       below `i`.
//!
//! Such a pair is a shared-endpoint crossing when `i` is a shared left
//! endpoint or `j` is a shared right endpoint, and a nontrivial crossing
//! otherwise. The directed crossings from `src` to `dst` are in bijection
//! with a basis of `Hom(src-brick, dst-brick)`: the basis arc for `(i, j)`
//! runs from `i` to `j` along the common letters.

use crate::arc::{Arc, Letter};
use crate::error::{Error, Result};

/// Scan for all directed crossing pairs from `src` to `dst`.
pub fn directed_crossing_pairs(src: &Arc, dst: &Arc) -> Vec<(usize, usize)> {
    assert_eq!(src.n(), dst.n(), "arcs must share an ambient node count");
    let lo = src.left().max(dst.left());
    let hi = src.right().min(dst.right());
    let mut pairs = Vec::new();
    if lo >= hi {
        return pairs;
    }
    for i in lo..hi {
        let d_ok = i == src.left() || src.letter_at(i) == Some(Letter::O);
        let e_ok = i == dst.left() || dst.letter_at(i) == Some(Letter::U);
        if !(d_ok && e_ok) {
            continue;
        }
        for j in (i + 1)..=hi {
            let sj = src.letter_at(j).expect("j inside closed support");
            let dj = dst.letter_at(j).expect("j inside closed support");
            if sj <= Letter::E && Letter::E <= dj {
                pairs.push((i, j));
            }
            // Once the words disagree at an interior node no larger j can
            // satisfy the agreement condition.
            if j < hi && sj != dj {
                break;
            }
        }
    }
    pairs
}

fn is_shared_pair(src: &Arc, dst: &Arc, pair: (usize, usize)) -> bool {
    let (i, j) = pair;
    (i == src.left() && i == dst.left()) || (j == src.right() && j == dst.right())
}

/// Basis arcs of `Hom(src-brick, dst-brick)`: quotient arcs of `src` that
/// are submodule arcs of `dst`, in canonical order.
pub fn hom_arcs(src: &Arc, dst: &Arc) -> Vec<Arc> {
    directed_crossing_pairs(src, dst)
        .into_iter()
        .map(|(i, j)| {
            let letters = ((i + 1)..j)
                .map(|k| {
                    let l = src.letter_at(k).expect("interior of both arcs");
                    debug_assert_eq!(Some(l), dst.letter_at(k));
                    l
                })
                .collect();
            Arc::new(i, letters, src.n()).expect("pair inside the ambient range")
        })
        .collect()
}

/// Classified intersection data for an arc pair.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct CrossingReport {
    pub shared_left: bool,
    pub shared_right: bool,
    /// Number of contested endpoints (0 or 1).
    pub contested: usize,
    pub nontrivial_1to2: usize,
    pub nontrivial_2to1: usize,
    pub shared_directed_1to2: usize,
    pub shared_directed_2to1: usize,
}

impl CrossingReport {
    pub fn shared_endpoints(&self) -> usize {
        usize::from(self.shared_left) + usize::from(self.shared_right)
    }

    pub fn nontrivial(&self) -> usize {
        self.nontrivial_1to2 + self.nontrivial_2to1
    }

    /// Contested endpoints plus nontrivial crossings.
    pub fn ext_crossings(&self) -> usize {
        self.contested + self.nontrivial()
    }

    /// Shared endpoints plus nontrivial crossings.
    pub fn hom_crossings(&self) -> usize {
        self.shared_endpoints() + self.nontrivial()
    }
}

pub fn crossing_report(a1: &Arc, a2: &Arc) -> CrossingReport {
    assert_eq!(a1.n(), a2.n(), "arcs must share an ambient node count");
    let mut rep = CrossingReport {
        shared_left: a1.left() == a2.left(),
        shared_right: a1.right() == a2.right(),
        contested: usize::from(a1.right() == a2.left() || a1.left() == a2.right()),
        ..CrossingReport::default()
    };
    for pair in directed_crossing_pairs(a1, a2) {
        if is_shared_pair(a1, a2, pair) {
            rep.shared_directed_1to2 += 1;
        } else {
            rep.nontrivial_1to2 += 1;
        }
    }
    for pair in directed_crossing_pairs(a2, a1) {
        if is_shared_pair(a2, a1, pair) {
            rep.shared_directed_2to1 += 1;
        } else {
            rep.nontrivial_2to1 += 1;
        }
    }
    debug_assert_eq!(
        rep.shared_directed_1to2 + rep.shared_directed_2to1,
        rep.shared_endpoints()
    );
    debug_assert!(rep.contested == 0 || rep.hom_crossings() == 0);
    rep
}

/// Shared-endpoint count minus contested-endpoint count. Agrees with the
/// bilinear form on the dimension vectors of the corresponding bricks.
pub fn euler_form_arcs(a1: &Arc, a2: &Arc) -> i64 {
    let rep = crossing_report(a1, a2);
    rep.shared_endpoints() as i64 - rep.contested as i64
}

/// Which member of the algebra family an Ext dimension refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExtMode {
    /// `S` empty: every Ext-crossing contributes.
    Preprojective,
    /// `S = [2, n-1]`: a contested endpoint contributes one dimension,
    /// otherwise only nontrivial crossings directed from `y` to `x` count.
    Gentle,
}

/// `dim Ext^1(x-brick, y-brick)` read off the crossing census.
pub fn ext_dim_arcs(x: &Arc, y: &Arc, mode: ExtMode) -> usize {
    let rep = crossing_report(x, y);
    match mode {
        ExtMode::Preprojective => rep.ext_crossings(),
        ExtMode::Gentle => {
            if rep.contested == 1 {
                1
            } else {
                rep.nontrivial_2to1
            }
        }
    }
}

/// `later` is clockwise of `earlier`: the unique shared endpoint, as a
/// directed crossing, points from `later` to `earlier`.
///
/// Errors unless the arcs share exactly one endpoint and do not otherwise
/// intersect.
pub fn is_clockwise(later: &Arc, earlier: &Arc) -> Result<bool> {
    let rep = crossing_report(later, earlier);
    if rep.shared_endpoints() != 1 || rep.contested != 0 || rep.nontrivial() != 0 {
        return Err(Error::NotClockwiseComparable);
    }
    Ok(rep.shared_directed_1to2 == 1)
}

/// The two arcs can occur as `(second, first)` in a weak exceptional
/// sequence: disjoint, or one shared endpoint directed from `second` to
/// `first` with no other intersections. Equal arcs are never a weak pair.
pub fn is_weak_pair_arcs(second: &Arc, first: &Arc) -> bool {
    let rep = crossing_report(second, first);
    if rep.contested != 0 || rep.nontrivial() != 0 {
        return false;
    }
    match rep.shared_endpoints() {
        0 => true,
        1 => rep.shared_directed_1to2 == 1,
        _ => false,
    }
}

/// No nontrivial crossings; shared and contested endpoints are allowed.
pub fn almost_rigid_pair_arcs(a1: &Arc, a2: &Arc) -> bool {
    debug_assert_ne!(a1, a2, "almost-rigid pairs are pairs of distinct arcs");
    crossing_report(a1, a2).nontrivial() == 0
}

/// Resolve a nontrivial crossing pair `(i, j)` directed from `y` to `x`
/// into the two middle-term arcs: glue `y`'s left half to `x`'s right half
/// and dually.
pub fn resolve_crossing(x: &Arc, y: &Arc, pair: (usize, usize)) -> Result<(Arc, Arc)> {
    let (i, j) = pair;
    let valid = directed_crossing_pairs(y, x).contains(&pair) && !is_shared_pair(y, x, pair);
    if !valid {
        return Err(Error::NotACrossingPair { i, j });
    }
    let glue = |left_arc: &Arc, right_arc: &Arc| -> Arc {
        let left = left_arc.left();
        let right = right_arc.right();
        let letters = ((left + 1)..right)
            .map(|k| {
                if k <= i {
                    left_arc.letter_at(k).expect("left half covers k")
                } else if k < j {
                    left_arc.letter_at(k).expect("common support covers k")
                } else {
                    right_arc.letter_at(k).expect("right half covers k")
                }
            })
            .collect();
        Arc::new(left, letters, x.n()).expect("glued arc stays in range")
    };
    Ok((glue(y, x), glue(x, y)))
}
