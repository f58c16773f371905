//! The quiver-with-relations data of the algebra family.
//!
//! The double quiver of the linear `A_n` quiver has arrows `a_e: e -> e+1`
//! and `a_e*: e+1 -> e` for `1 <= e <= n-1`. A family member is cut out by
//! the length-two relations below; a hereditary quotient instead kills one
//! arrow of each pair outright.

use std::collections::BTreeSet;
use std::fmt;

use crate::arc::{EpsOrientation, Letter};
use crate::error::{Error, Result};

/// An arrow of the double quiver, indexed by its edge `1..=n-1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ArrowId {
    /// `a_e: e -> e+1`
    Fwd(usize),
    /// `a_e*: e+1 -> e`
    Bwd(usize),
}

impl ArrowId {
    pub fn edge(self) -> usize {
        match self {
            ArrowId::Fwd(e) | ArrowId::Bwd(e) => e,
        }
    }

    pub fn source(self) -> usize {
        match self {
            ArrowId::Fwd(e) => e,
            ArrowId::Bwd(e) => e + 1,
        }
    }

    pub fn target(self) -> usize {
        match self {
            ArrowId::Fwd(e) => e + 1,
            ArrowId::Bwd(e) => e,
        }
    }

    /// All arrows for rank `n`, in edge order with the forward arrow first.
    pub fn all(n: usize) -> Vec<ArrowId> {
        (1..n)
            .flat_map(|e| [ArrowId::Fwd(e), ArrowId::Bwd(e)])
            .collect()
    }
}

impl fmt::Display for ArrowId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArrowId::Fwd(e) => write!(f, "a{e}"),
            ArrowId::Bwd(e) => write!(f, "a{e}*"),
        }
    }
}

/// A signed sum of two-step paths based at one vertex. Paths are written in
/// composition order: `[alpha, beta]` means first `alpha`, then `beta`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation {
    pub vertex: usize,
    pub terms: Vec<(i64, [ArrowId; 2])>,
}

impl Relation {
    fn monomial(vertex: usize, path: [ArrowId; 2]) -> Relation {
        Relation {
            vertex,
            terms: vec![(1, path)],
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AlgebraKind {
    /// Quotient of the double quiver by the commutation/vanishing relations
    /// selected by `S` (a subset of the inner vertices `2..=n-1`).
    PreprojectiveFamily { s: BTreeSet<usize> },
    /// Path algebra of the orientation: at edge `e` only the forward arrow
    /// survives when `eps(e) = u`, only the backward arrow when
    /// `eps(e) = o`.
    Hereditary { eps: EpsOrientation },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraSpec {
    n: usize,
    kind: AlgebraKind,
    relations: Vec<Relation>,
    killed: Vec<ArrowId>,
}

impl AlgebraSpec {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> &AlgebraKind {
        &self.kind
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn killed(&self) -> &[ArrowId] {
        &self.killed
    }

    pub fn is_killed(&self, a: ArrowId) -> bool {
        self.killed.contains(&a)
    }

    pub fn is_hereditary(&self) -> bool {
        matches!(self.kind, AlgebraKind::Hereditary { .. })
    }

    /// `S` for a family member, `None` in hereditary mode.
    pub fn relation_set(&self) -> Option<&BTreeSet<usize>> {
        match &self.kind {
            AlgebraKind::PreprojectiveFamily { s } => Some(s),
            AlgebraKind::Hereditary { .. } => None,
        }
    }

    /// Whether this is the fully-separated member `S = [2, n-1]`.
    pub fn is_gentle_member(&self) -> bool {
        match &self.kind {
            AlgebraKind::PreprojectiveFamily { s } => s.len() == self.n.saturating_sub(2),
            AlgebraKind::Hereditary { .. } => false,
        }
    }

    pub fn describe(&self) -> String {
        match &self.kind {
            AlgebraKind::PreprojectiveFamily { s } => {
                if s.is_empty() {
                    format!("preproj(n={})", self.n)
                } else {
                    let items: Vec<String> = s.iter().map(|v| v.to_string()).collect();
                    format!("preproj(n={}, S={{{}}})", self.n, items.join(","))
                }
            }
            AlgebraKind::Hereditary { eps } => {
                format!("hereditary(n={}, eps={})", self.n, eps.as_string())
            }
        }
    }
}

/// Family member for a subset `S` of `[2, n-1]`.
///
/// Relations, one locus at a time: `a_1 a_1*` at vertex 1 and
/// `a_{n-1}* a_{n-1}` at vertex `n`; at an inner vertex `i` the two
/// monomials `a_i a_i*` and `a_{i-1}* a_{i-1}` when `i` is in `S`, their
/// difference otherwise.
pub fn algebra<I: IntoIterator<Item = usize>>(n: usize, s: I) -> Result<AlgebraSpec> {
    assert!(n >= 1, "rank must be positive");
    let s: BTreeSet<usize> = s.into_iter().collect();
    for &v in &s {
        if v < 2 || v + 1 > n {
            return Err(Error::BadRelationSet(v));
        }
    }
    let mut relations = Vec::new();
    if n >= 2 {
        relations.push(Relation::monomial(1, [ArrowId::Fwd(1), ArrowId::Bwd(1)]));
        for i in 2..n {
            if s.contains(&i) {
                relations.push(Relation::monomial(i, [ArrowId::Fwd(i), ArrowId::Bwd(i)]));
                relations.push(Relation::monomial(
                    i,
                    [ArrowId::Bwd(i - 1), ArrowId::Fwd(i - 1)],
                ));
            } else {
                relations.push(Relation {
                    vertex: i,
                    terms: vec![
                        (1, [ArrowId::Fwd(i), ArrowId::Bwd(i)]),
                        (-1, [ArrowId::Bwd(i - 1), ArrowId::Fwd(i - 1)]),
                    ],
                });
            }
        }
        relations.push(Relation::monomial(
            n,
            [ArrowId::Bwd(n - 1), ArrowId::Fwd(n - 1)],
        ));
    }
    Ok(AlgebraSpec {
        n,
        kind: AlgebraKind::PreprojectiveFamily { s },
        relations,
        killed: Vec::new(),
    })
}

/// The classical member `S` empty.
pub fn preprojective(n: usize) -> AlgebraSpec {
    algebra(n, []).expect("empty S is always valid")
}

/// The fully-separated member `S = [2, n-1]`.
pub fn gentle(n: usize) -> AlgebraSpec {
    algebra(n, 2..n.max(2)).expect("full S is always valid")
}

/// Path algebra of the orientation: kills `a_e` when `eps(e) = o` and
/// `a_e*` when `eps(e) = u`, so the surviving arrow at edge `e` matches the
/// letter an admissible arc shows at node `e`. No length-two relations.
pub fn hereditary_algebra(n: usize, eps: EpsOrientation) -> Result<AlgebraSpec> {
    if eps.n() != n {
        return Err(Error::BadOrientation);
    }
    let mut killed = Vec::new();
    for e in 1..n {
        match eps.at(e) {
            Letter::U => killed.push(ArrowId::Bwd(e)),
            Letter::O => killed.push(ArrowId::Fwd(e)),
            Letter::E => return Err(Error::BadOrientation),
        }
    }
    Ok(AlgebraSpec {
        n,
        kind: AlgebraKind::Hereditary { eps },
        relations: Vec::new(),
        killed,
    })
}

/// All family members for a given rank, in subset order.
pub fn all_family_members(n: usize) -> Vec<AlgebraSpec> {
    let inner: Vec<usize> = (2..n.max(1)).collect();
    let mut out = Vec::with_capacity(1 << inner.len());
    for bits in 0..(1usize << inner.len()) {
        let subset = inner
            .iter()
            .enumerate()
            .filter(|(idx, _)| bits >> idx & 1 == 1)
            .map(|(_, &v)| v);
        out.push(algebra(n, subset).expect("subsets of the inner range are valid"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preprojective_relations_of_rank_four() {
        let a = preprojective(4);
        assert_eq!(a.relations().len(), 4);
        assert_eq!(a.relations()[0].terms, vec![(1, [ArrowId::Fwd(1), ArrowId::Bwd(1)])]);
        assert_eq!(
            a.relations()[1].terms,
            vec![
                (1, [ArrowId::Fwd(2), ArrowId::Bwd(2)]),
                (-1, [ArrowId::Bwd(1), ArrowId::Fwd(1)]),
            ]
        );
        assert_eq!(
            a.relations()[3].terms,
            vec![(1, [ArrowId::Bwd(3), ArrowId::Fwd(3)])]
        );
    }

    #[test]
    fn gentle_member_has_six_monomials_at_rank_four() {
        let a = algebra(4, [2, 3]).unwrap();
        assert!(a.is_gentle_member());
        assert_eq!(a.relations().len(), 6);
        assert!(a.relations().iter().all(|r| r.terms.len() == 1));
    }

    #[test]
    fn relation_set_bounds() {
        assert!(algebra(4, [4]).is_err());
        assert!(algebra(4, [1]).is_err());
        assert!(algebra(3, [2]).is_ok());
        assert_eq!(all_family_members(4).len(), 4);
        assert_eq!(all_family_members(2).len(), 1);
    }

    #[test]
    fn hereditary_killing_follows_the_orientation() {
        // eps identically u keeps every forward arrow.
        let a = hereditary_algebra(3, EpsOrientation::constant(Letter::U, 3).unwrap()).unwrap();
        assert_eq!(a.killed(), &[ArrowId::Bwd(1), ArrowId::Bwd(2)]);
        assert!(a.relations().is_empty());
        let b = hereditary_algebra(3, EpsOrientation::parse("ou").unwrap()).unwrap();
        assert_eq!(b.killed(), &[ArrowId::Fwd(1), ArrowId::Bwd(2)]);
    }

    #[test]
    fn rank_one_has_no_relations() {
        assert!(preprojective(1).relations().is_empty());
        assert!(ArrowId::all(1).is_empty());
    }
}
