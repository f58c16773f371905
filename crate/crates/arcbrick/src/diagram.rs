//! Ordered arc diagrams, the graph-theoretic checks behind the length
//! bound, and the enumeration/search routines.

use crate::arc::{enumerate_arcs, Arc, EpsOrientation, is_eps_admissible};
use crate::crossing::{crossing_report, is_weak_pair_arcs};
use crate::error::{Error, Result};

/// An ordered sequence of arcs, listed later-to-earlier (the head of the
/// list is the last term of the corresponding sequence of bricks).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ArcDiagram {
    n: usize,
    arcs: Vec<Arc>,
}

impl ArcDiagram {
    pub fn new(n: usize, arcs: Vec<Arc>) -> Result<ArcDiagram> {
        for a in &arcs {
            if a.n() != n {
                return Err(Error::AmbientMismatch(a.n(), n));
            }
        }
        Ok(ArcDiagram { n, arcs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }
}

/// Every later/earlier pair is a weak pair. Repeated arcs fail.
pub fn is_clockwise_ordered(d: &ArcDiagram) -> bool {
    let arcs = d.arcs();
    for p in 0..arcs.len() {
        for q in (p + 1)..arcs.len() {
            if !is_weak_pair_arcs(&arcs[p], &arcs[q]) {
                return false;
            }
        }
    }
    true
}

/// No two distinct arcs have any Hom-crossing; contested endpoints are
/// permitted.
pub fn is_noncrossing(arcs: &[Arc]) -> bool {
    for p in 0..arcs.len() {
        for q in (p + 1)..arcs.len() {
            if arcs[p] == arcs[q] {
                return false;
            }
            if crossing_report(&arcs[p], &arcs[q]).hom_crossings() != 0 {
                return false;
            }
        }
    }
    true
}

/// Graph-theoretic summary of a diagram: arcs as edges on the nodes they
/// use.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DiagramGraphReport {
    pub simple: bool,
    pub bipartite: bool,
    pub edge_count: usize,
    /// Edge count within the planar bipartite bound `2m - 4` on `m >= 3`
    /// used nodes (at most one edge on fewer nodes).
    pub planar_bound_ok: bool,
    pub k33_free: bool,
}

pub fn diagram_graph_check(d: &ArcDiagram) -> DiagramGraphReport {
    let edges: Vec<(usize, usize)> = d.arcs().iter().map(|a| (a.left(), a.right())).collect();
    let mut nodes: Vec<usize> = edges.iter().flat_map(|&(l, r)| [l, r]).collect();
    nodes.sort_unstable();
    nodes.dedup();

    let mut sorted_edges = edges.clone();
    sorted_edges.sort_unstable();
    let simple = sorted_edges.windows(2).all(|w| w[0] != w[1]);

    let index_of = |v: usize| nodes.binary_search(&v).expect("node present");
    let mut adj = vec![Vec::new(); nodes.len()];
    for &(l, r) in &edges {
        let (a, b) = (index_of(l), index_of(r));
        adj[a].push(b);
        adj[b].push(a);
    }

    // BFS two-coloring.
    let mut color = vec![None; nodes.len()];
    let mut bipartite = true;
    for start in 0..nodes.len() {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                match color[w] {
                    None => {
                        color[w] = Some(!color[v].unwrap());
                        queue.push_back(w);
                    }
                    Some(c) if c == color[v].unwrap() => bipartite = false,
                    _ => {}
                }
            }
        }
    }

    let edge_count = edges.len();
    let m = nodes.len();
    let planar_bound_ok = if m >= 3 {
        edge_count <= 2 * m - 4
    } else {
        edge_count <= 1
    };

    // K_{3,3} subgraph: three nodes with three common neighbours.
    let neighbour_set = |v: usize| -> u64 {
        let mut bits = 0u64;
        for &w in &adj[v] {
            bits |= 1 << w;
        }
        bits
    };
    let sets: Vec<u64> = (0..nodes.len()).map(neighbour_set).collect();
    let mut k33_free = true;
    'outer: for a in 0..nodes.len() {
        for b in (a + 1)..nodes.len() {
            let ab = sets[a] & sets[b];
            if ab.count_ones() < 3 {
                continue;
            }
            for third in sets.iter().skip(b + 1) {
                if (ab & third).count_ones() >= 3 {
                    k33_free = false;
                    break 'outer;
                }
            }
        }
    }

    DiagramGraphReport {
        simple,
        bipartite,
        edge_count,
        planar_bound_ok,
        k33_free,
    }
}

/// A clockwise-ordered diagram of length `2n - 2` realizing the complete
/// bipartite graph `K_{n-1,2}`: the fan of all-under arcs into node `n - 1`
/// followed by the fan of all-over arcs into node `n`.
pub fn max_weak_example(n: usize) -> Result<ArcDiagram> {
    if n < 2 {
        return Err(Error::DiagramTooSmall(2));
    }
    let mut arcs = Vec::with_capacity(2 * n - 2);
    for t in (1..=(2 * n - 2)).rev() {
        let arc = if t >= n {
            let left = t - n;
            Arc::from_str_pattern(left, &"u".repeat(n - 2 - left), n)?
        } else {
            Arc::from_str_pattern(n - t - 1, &"o".repeat(t), n)?
        };
        arcs.push(arc);
    }
    ArcDiagram::new(n, arcs)
}

// Forced-order digraph over a candidate set: an edge a -> b means a must
// come later than b. A set of pairwise weak-compatible arcs is realizable
// as a diagram iff this digraph is acyclic.
struct OrderDigraph {
    edges: Vec<(usize, usize)>,
}

impl OrderDigraph {
    fn new() -> Self {
        OrderDigraph { edges: Vec::new() }
    }

    fn has_cycle(&self, count: usize) -> bool {
        let mut adj = vec![Vec::new(); count];
        for &(a, b) in &self.edges {
            adj[a].push(b);
        }
        // 0 = unseen, 1 = on stack, 2 = done
        let mut state = vec![0u8; count];
        fn visit(v: usize, adj: &[Vec<usize>], state: &mut [u8]) -> bool {
            state[v] = 1;
            for &w in &adj[v] {
                if state[w] == 1 || (state[w] == 0 && visit(w, adj, state)) {
                    return true;
                }
            }
            state[v] = 2;
            false
        }
        (0..count).any(|v| state[v] == 0 && visit(v, &adj, &mut state))
    }

    /// Later-to-earlier listing: repeatedly emit the canonically smallest
    /// vertex all of whose must-be-later predecessors are already out.
    fn topo_order(&self, arcs: &[Arc]) -> Vec<Arc> {
        let count = arcs.len();
        let mut emitted = vec![false; count];
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            let mut next: Option<usize> = None;
            for v in 0..count {
                if emitted[v] {
                    continue;
                }
                if self.edges.iter().any(|&(a, b)| b == v && !emitted[a]) {
                    continue;
                }
                match next {
                    Some(cur) if arcs[v] >= arcs[cur] => {}
                    _ => next = Some(v),
                }
            }
            let v = next.expect("digraph is acyclic");
            emitted[v] = true;
            out.push(arcs[v].clone());
        }
        out
    }
}

/// How two arcs may coexist in a weak set: incompatible, unconstrained, or
/// with a forced relative order.
fn pair_constraint(a: &Arc, b: &Arc) -> Option<Option<bool>> {
    // None: incompatible. Some(None): disjoint. Some(Some(true)): a later.
    let rep = crossing_report(a, b);
    if rep.contested != 0 || rep.nontrivial() != 0 {
        return None;
    }
    match rep.shared_endpoints() {
        0 => Some(None),
        1 => Some(Some(rep.shared_directed_1to2 == 1)),
        _ => None,
    }
}

/// Exact maximum length of a clockwise-ordered diagram, with one witness.
/// Exhaustive branch-and-bound over canonical arc order; the result is
/// checked against the planar edge bound `max(1, 2n - 2)` rather than
/// capped by it.
pub fn longest_weak_length(n: usize) -> (usize, ArcDiagram) {
    let arcs = enumerate_arcs(n);
    let cap = if n >= 2 { 2 * n - 2 } else { 1 };

    // Pairwise constraints, indexed by arc position.
    let k = arcs.len();
    let mut compat = vec![vec![None; k]; k];
    for i in 0..k {
        for j in (i + 1)..k {
            compat[i][j] = pair_constraint(&arcs[i], &arcs[j]);
            compat[j][i] = compat[i][j].map(|c| c.map(|later| !later));
        }
    }

    // Branch and bound. Only the lossless "cannot beat the best" prune is
    // used, so the search refutes longer candidates instead of assuming
    // the planar edge bound; `cap` merely sizes the expectation below.
    struct Search<'a> {
        arcs: &'a [Arc],
        compat: &'a [Vec<Option<Option<bool>>>],
        best: Vec<usize>,
    }

    impl Search<'_> {
        fn run(&mut self, chosen: &mut Vec<usize>, edges: &mut OrderDigraph, from: usize) {
            if chosen.len() > self.best.len() {
                self.best = chosen.clone();
            }
            for cand in from..self.arcs.len() {
                if chosen.len() + (self.arcs.len() - cand) <= self.best.len() {
                    break;
                }
                let mut new_edges = Vec::new();
                let mut ok = true;
                for (slot, &c) in chosen.iter().enumerate() {
                    match self.compat[c][cand] {
                        None => {
                            ok = false;
                            break;
                        }
                        Some(None) => {}
                        Some(Some(true)) => new_edges.push((slot, chosen.len())),
                        Some(Some(false)) => new_edges.push((chosen.len(), slot)),
                    }
                }
                if !ok {
                    continue;
                }
                let before = edges.edges.len();
                edges.edges.extend(new_edges);
                if !edges.has_cycle(chosen.len() + 1) {
                    chosen.push(cand);
                    self.run(chosen, edges, cand + 1);
                    chosen.pop();
                }
                edges.edges.truncate(before);
            }
        }
    }

    let mut search = Search {
        arcs: &arcs,
        compat: &compat,
        best: Vec::new(),
    };
    search.run(&mut Vec::new(), &mut OrderDigraph::new(), 0);
    debug_assert!(search.best.len() <= cap);

    let chosen: Vec<Arc> = search.best.iter().map(|&i| arcs[i].clone()).collect();
    let mut digraph = OrderDigraph::new();
    for p in 0..chosen.len() {
        for q in (p + 1)..chosen.len() {
            match pair_constraint(&chosen[p], &chosen[q]) {
                Some(Some(true)) => digraph.edges.push((p, q)),
                Some(Some(false)) => digraph.edges.push((q, p)),
                _ => {}
            }
        }
    }
    let ordered = digraph.topo_order(&chosen);
    let len = ordered.len();
    (
        len,
        ArcDiagram::new(n, ordered).expect("search stays in ambient range"),
    )
}

/// All clockwise-ordered diagrams of length `k`, in lexicographic order of
/// the later-to-earlier arc lists.
pub fn enumerate_weak(n: usize, k: usize) -> Vec<ArcDiagram> {
    let arcs = enumerate_arcs(n);
    let mut out = Vec::new();
    let mut chosen: Vec<Arc> = Vec::new();
    fn extend(
        arcs: &[Arc],
        n: usize,
        k: usize,
        chosen: &mut Vec<Arc>,
        out: &mut Vec<ArcDiagram>,
    ) {
        if chosen.len() == k {
            out.push(ArcDiagram::new(n, chosen.clone()).expect("same ambient"));
            return;
        }
        for cand in arcs {
            if chosen.iter().all(|later| is_weak_pair_arcs(later, cand)) {
                chosen.push(cand.clone());
                extend(arcs, n, k, chosen, out);
                chosen.pop();
            }
        }
    }
    extend(&arcs, n, k, &mut chosen, &mut out);
    out
}

/// All noncrossing arc sets (semibrick diagrams), as sorted arc lists in
/// lexicographic order; includes the empty set.
pub fn enumerate_noncrossing(n: usize) -> Vec<Vec<Arc>> {
    let arcs = enumerate_arcs(n);
    let mut out = Vec::new();
    let mut chosen: Vec<Arc> = Vec::new();
    fn extend(arcs: &[Arc], from: usize, chosen: &mut Vec<Arc>, out: &mut Vec<Vec<Arc>>) {
        out.push(chosen.clone());
        for idx in from..arcs.len() {
            let cand = &arcs[idx];
            if chosen
                .iter()
                .all(|prev| crossing_report(prev, cand).hom_crossings() == 0)
            {
                chosen.push(cand.clone());
                extend(arcs, idx + 1, chosen, out);
                chosen.pop();
            }
        }
    }
    extend(&arcs, 0, &mut chosen, &mut out);
    out
}

/// Underlying arc sets of clockwise-ordered diagrams: pairwise weak
/// compatibility plus an acyclic forced-order digraph. Sorted arc lists,
/// lexicographic order, empty set included.
pub fn enumerate_clockwise_sets(n: usize) -> Vec<Vec<Arc>> {
    let arcs = enumerate_arcs(n);
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    let mut digraph = OrderDigraph::new();

    fn extend(
        arcs: &[Arc],
        from: usize,
        chosen: &mut Vec<usize>,
        digraph: &mut OrderDigraph,
        out: &mut Vec<Vec<Arc>>,
    ) {
        out.push(chosen.iter().map(|&i| arcs[i].clone()).collect());
        for cand in from..arcs.len() {
            let mut new_edges = Vec::new();
            let mut ok = true;
            for (slot, &c) in chosen.iter().enumerate() {
                match pair_constraint(&arcs[c], &arcs[cand]) {
                    None => {
                        ok = false;
                        break;
                    }
                    Some(None) => {}
                    Some(Some(true)) => new_edges.push((slot, chosen.len())),
                    Some(Some(false)) => new_edges.push((chosen.len(), slot)),
                }
            }
            if !ok {
                continue;
            }
            let before = digraph.edges.len();
            digraph.edges.extend(new_edges);
            if !digraph.has_cycle(chosen.len() + 1) {
                chosen.push(cand);
                extend(arcs, cand + 1, chosen, digraph, out);
                chosen.pop();
            }
            digraph.edges.truncate(before);
        }
    }
    extend(&arcs, 0, &mut chosen, &mut digraph, &mut out);
    out
}

/// Strand-diagram test for a fixed orientation: every arc admissible, no
/// nontrivial crossings, shared endpoints clockwise-ordered, and each
/// contested endpoint `x` resolved by the orientation: over means `x` is
/// the earlier arc's right endpoint, under means the later arc's.
pub fn is_strand_diagram(d: &ArcDiagram, eps: &EpsOrientation) -> bool {
    if d.n() != eps.n() {
        return false;
    }
    if !d.arcs().iter().all(|a| is_eps_admissible(a, eps)) {
        return false;
    }
    let arcs = d.arcs();
    for p in 0..arcs.len() {
        for q in (p + 1)..arcs.len() {
            let later = &arcs[p];
            let earlier = &arcs[q];
            let rep = crossing_report(later, earlier);
            if rep.nontrivial() != 0 {
                return false;
            }
            match rep.shared_endpoints() {
                0 => {}
                1 => {
                    if rep.shared_directed_1to2 != 1 {
                        return false;
                    }
                }
                _ => return false,
            }
            if rep.contested == 1 {
                let x = if later.right() == earlier.left() {
                    later.right()
                } else {
                    earlier.right()
                };
                let required = match eps.at(x) {
                    crate::arc::Letter::O => earlier.right(),
                    crate::arc::Letter::U => later.right(),
                    crate::arc::Letter::E => unreachable!("orientations carry no e"),
                };
                if x != required {
                    return false;
                }
            }
        }
    }
    true
}
