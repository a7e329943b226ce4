//! Graph-side invariants: 3-disjoint edges, the induced matching number
//! `a(G)` and the matching number.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub type Edge = (usize, usize);

fn normalize((u, v): Edge) -> Edge {
    (u.min(v), u.max(v))
}

fn check_edge(g: &Graph, e: Edge) -> Result<Edge> {
    if g.has_edge(e.0, e.1) {
        Ok(normalize(e))
    } else {
        Err(Error::NotAnEdge(format!("{{{}, {}}}", e.0, e.1)))
    }
}

/// The induced subgraph on the four endpoints is exactly the two edges.
pub fn is_three_disjoint(g: &Graph, e1: Edge, e2: Edge) -> Result<bool> {
    let e1 = check_edge(g, e1)?;
    let e2 = check_edge(g, e2)?;
    let direct = induced_is_two_edges(g, e1, e2);
    debug_assert_eq!(direct, complement_is_four_cycle(g, e1, e2));
    Ok(direct)
}

fn induced_is_two_edges(g: &Graph, (a, b): Edge, (c, d): Edge) -> bool {
    let ends: VertexSet = [a, b, c, d].into_iter().collect();
    if ends.len() != 4 {
        return false;
    }
    let sub = g.induced(ends).expect("endpoints are vertices");
    sub.edge_count() == 2
}

/// Same predicate phrased on the complement: the four endpoints induce a
/// 4-cycle there.
pub fn complement_is_four_cycle(g: &Graph, e1: Edge, e2: Edge) -> bool {
    let ends: VertexSet = [e1.0, e1.1, e2.0, e2.1].into_iter().collect();
    if ends.len() != 4 {
        return false;
    }
    let sub = g.complement().induced(ends).expect("endpoints are vertices");
    sub.edge_count() == 4 && ends.iter().all(|v| sub.degree(v).unwrap() == 2)
}

/// A maximum set of pairwise 3-disjoint edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMatching {
    pub edges: Vec<Edge>,
}

impl InducedMatching {
    pub fn size(&self) -> usize {
        self.edges.len()
    }
}

/// `a(G)`, the maximum number of pairwise 3-disjoint edges, by
/// branch-and-bound over the edges in lexicographic order.
pub fn a_invariant(g: &Graph) -> InducedMatching {
    let edges = g.edges();
    let closed: Vec<VertexSet> = (0..g.universe())
        .map(|v| g.closed_neighbors(v).unwrap_or(VertexSet::EMPTY))
        .collect();
    let mut search = InducedSearch {
        edges: &edges,
        closed: &closed,
        chosen: Vec::new(),
        best: Vec::new(),
    };
    search.run(0, g.vertices());
    InducedMatching { edges: search.best }
}

struct InducedSearch<'a> {
    edges: &'a [Edge],
    closed: &'a [VertexSet],
    chosen: Vec<Edge>,
    best: Vec<Edge>,
}

impl InducedSearch<'_> {
    fn upper_bound(&self, from: usize, allowed: VertexSet) -> usize {
        let mut count = 0;
        let mut touched = VertexSet::EMPTY;
        for &(u, v) in &self.edges[from..] {
            if allowed.contains(u) && allowed.contains(v) {
                count += 1;
                touched = touched.with(u).with(v);
            }
        }
        count.min(touched.len() / 2)
    }

    fn run(&mut self, from: usize, allowed: VertexSet) {
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        if self.chosen.len() + self.upper_bound(from, allowed) <= self.best.len() {
            return;
        }
        for idx in from..self.edges.len() {
            let (u, v) = self.edges[idx];
            if !(allowed.contains(u) && allowed.contains(v)) {
                continue;
            }
            self.chosen.push((u, v));
            self.run(idx + 1, allowed - self.closed[u] - self.closed[v]);
            self.chosen.pop();
            if self.chosen.len() + self.upper_bound(idx + 1, allowed) <= self.best.len() {
                return;
            }
        }
    }
}

/// `α'(G)`: size of a maximum matching.
pub fn matching_number(g: &Graph) -> usize {
    fn solve(g: &Graph, s: VertexSet, memo: &mut HashMap<VertexSet, usize>) -> usize {
        let Some(v) = s.min() else { return 0 };
        if let Some(&m) = memo.get(&s) {
            return m;
        }
        let rest = s.without(v);
        let mut best = solve(g, rest, memo);
        for u in (g.neighbors(v).unwrap() & rest).iter() {
            best = best.max(1 + solve(g, rest.without(u), memo));
        }
        memo.insert(s, best);
        best
    }
    // vertices without edges never matter
    let active: VertexSet = g
        .vertices()
        .iter()
        .filter(|&v| g.degree(v).unwrap() > 0)
        .collect();
    solve(g, active, &mut HashMap::new())
}
