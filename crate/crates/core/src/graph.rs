//! Finite simple graphs on labeled vertices.
//!
//! Vertex labels are dense integers `0..universe`. Deleting vertices keeps the
//! labels of the survivors, so anything computed on a subgraph (certificates,
//! covers, witnesses) can be replayed against the original graph.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertices: VertexSet,
    adjacency: Vec<VertexSet>,
}

/// A 2-coloring of a graph's vertices with every edge crossing sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub side_one: VertexSet,
    pub side_two: VertexSet,
}

impl Graph {
    /// The edgeless graph on `0..n`.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            vertices: VertexSet::first(n),
            adjacency: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph on `0..n` from a bitmask over the pairs `(u, v)`, `u < v`,
    /// listed in lexicographic order.
    pub fn from_pair_mask(n: usize, mask: u64) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (bit, (u, v)) in pairs(n).enumerate() {
            if bit < 64 && mask >> bit & 1 == 1 {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// Inverse of [`Graph::from_pair_mask`] over the label range `0..universe`.
    pub fn pair_mask(&self) -> u64 {
        pairs(self.universe())
            .enumerate()
            .filter(|&(bit, (u, v))| bit < 64 && self.has_edge(u, v))
            .fold(0u64, |m, (bit, _)| m | 1 << bit)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
        }
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
        Ok(())
    }

    /// One past the largest label this graph was built with.
    pub fn universe(&self) -> usize {
        self.adjacency.len()
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.contains(v)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if self.contains_vertex(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        match (s - self.vertices).min() {
            Some(v) => Err(Error::UnknownVertex(v)),
            None => Ok(()),
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.contains_vertex(u) && self.adjacency[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in self.vertices.iter() {
            for v in self.adjacency[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.iter().map(|v| self.adjacency[v].len()).sum::<usize>() / 2
    }

    /// Open neighborhood `N(x)`.
    pub fn neighbors(&self, x: usize) -> Result<VertexSet> {
        self.check_vertex(x)?;
        Ok(self.adjacency[x])
    }

    /// Closed neighborhood `{x} ∪ N(x)`.
    pub fn closed_neighbors(&self, x: usize) -> Result<VertexSet> {
        Ok(self.neighbors(x)?.with(x))
    }

    pub fn degree(&self, x: usize) -> Result<usize> {
        Ok(self.neighbors(x)?.len())
    }

    /// The induced subgraph on `V ∖ s`. Surviving labels are unchanged.
    pub fn delete_vertices(&self, s: VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        let vertices = self.vertices - s;
        let adjacency = self
            .adjacency
            .iter()
            .enumerate()
            .map(|(v, &nbrs)| {
                if vertices.contains(v) {
                    nbrs - s
                } else {
                    VertexSet::EMPTY
                }
            })
            .collect();
        Ok(Graph {
            vertices,
            adjacency,
        })
    }

    /// `G ∖ ({x} ∪ N(x))`.
    pub fn closed_neighborhood_delete(&self, x: usize) -> Result<Graph> {
        self.delete_vertices(self.closed_neighbors(x)?)
    }

    /// The induced subgraph on `keep`.
    pub fn induced(&self, keep: VertexSet) -> Result<Graph> {
        self.check_set(keep)?;
        self.delete_vertices(self.vertices - keep)
    }

    /// Lowest-labeled vertex of degree exactly one.
    pub fn degree_one_vertex(&self) -> Option<usize> {
        self.vertices.iter().find(|&v| self.adjacency[v].len() == 1)
    }

    pub fn complement(&self) -> Graph {
        let adjacency = self
            .adjacency
            .iter()
            .enumerate()
            .map(|(v, &nbrs)| {
                if self.vertices.contains(v) {
                    (self.vertices - nbrs).without(v)
                } else {
                    VertexSet::EMPTY
                }
            })
            .collect();
        Graph {
            vertices: self.vertices,
            adjacency,
        }
    }

    /// Maximal connected vertex sets, ordered by lowest label.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for start in self.vertices.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next | self.adjacency[v];
                }
                frontier = next - comp;
                comp = comp | frontier;
            }
            seen = seen | comp;
            out.push(comp);
        }
        out
    }

    /// A 2-coloring by BFS; the lowest label of each component goes to
    /// `side_one`. `None` if some component contains an odd cycle.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut side = vec![None::<bool>; self.universe()];
        let mut queue = VecDeque::new();
        for start in self.vertices.iter() {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                let s = side[v].unwrap();
                for w in self.adjacency[v].iter() {
                    match side[w] {
                        None => {
                            side[w] = Some(!s);
                            queue.push_back(w);
                        }
                        Some(t) if t == s => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let side_one = self
            .vertices
            .iter()
            .filter(|&v| side[v] == Some(false))
            .collect();
        Some(Bipartition {
            side_one,
            side_two: self.vertices - side_one,
        })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.connected_components().len() == self.order()
    }

    pub fn is_tree(&self) -> bool {
        self.order() > 0 && self.is_forest() && self.connected_components().len() == 1
    }

    /// An isomorphism-invariant code for graphs on at most 16 vertices.
    ///
    /// Vertices are first split into cells by iterated degree refinement;
    /// the code is the lexicographically smallest upper-triangle adjacency
    /// bit string over all orderings that list the cells in refinement order.
    /// Two graphs receive equal codes iff they are isomorphic.
    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        let verts = self.vertices.to_vec();
        let n = verts.len();
        if n > 16 {
            return Err(Error::TooManyVertices(n));
        }
        let adj: Vec<u32> = verts
            .iter()
            .map(|&v| self.adjacency[v].compress(self.vertices).bits())
            .collect();

        let colors = refine_colors(&adj);
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| colors[v]);
        let cell_of_pos: Vec<usize> = order.iter().map(|&v| colors[v]).collect();

        let mut search = CanonSearch {
            adj: &adj,
            colors: &colors,
            cell_of_pos: &cell_of_pos,
            n,
            perm: Vec::with_capacity(n),
            best: None,
        };
        search.dfs(0, 0, 0);
        Ok(CanonicalForm {
            order: n,
            code: search.best.unwrap_or(0),
        })
    }

    /// Relabels vertices to `0..order()` preserving their relative order.
    pub fn compacted(&self) -> Graph {
        let n = self.order();
        let mut g = Graph::empty(n).expect("order within limits");
        for (u, v) in self.edges() {
            let cu = VertexSet::singleton(u).compress(self.vertices).min().unwrap();
            let cv = VertexSet::singleton(v).compress(self.vertices).min().unwrap();
            g.add_edge(cu, cv).unwrap();
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.vertices)
            .field("edges", &self.edges())
            .finish()
    }
}

/// Pairs `(u, v)` with `u < v < n` in lexicographic order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub order: usize,
    pub code: u128,
}

fn refine_colors(adj: &[u32]) -> Vec<usize> {
    let n = adj.len();
    let mut colors: Vec<usize> = adj.iter().map(|a| a.count_ones() as usize).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = VertexSet::from_bits(adj[v])
                    .iter()
                    .map(|w| colors[w])
                    .collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        colors = sigs
            .iter()
            .map(|s| distinct.binary_search(s).unwrap())
            .collect();
        if distinct.len() == classes {
            return colors;
        }
        classes = distinct.len();
    }
}

struct CanonSearch<'a> {
    adj: &'a [u32],
    colors: &'a [usize],
    cell_of_pos: &'a [usize],
    n: usize,
    perm: Vec<usize>,
    best: Option<u128>,
}

impl CanonSearch<'_> {
    fn total_bits(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }

    fn dfs(&mut self, pos: usize, prefix: u128, used: u32) {
        if pos == self.n {
            if self.best.is_none_or(|b| prefix < b) {
                self.best = Some(prefix);
            }
            return;
        }
        let bits_after = pos * (pos + 1) / 2;
        for v in 0..self.n {
            if used >> v & 1 == 1 || self.colors[v] != self.cell_of_pos[pos] {
                continue;
            }
            let mut code = prefix;
            for &p in &self.perm {
                code = code << 1 | u128::from(self.adj[v] >> p & 1);
            }
            if let Some(best) = self.best {
                let rem = self.total_bits() - bits_after;
                if code > best >> rem {
                    continue;
                }
            }
            self.perm.push(v);
            self.dfs(pos + 1, code, used | 1 << v);
            self.perm.pop();
        }
    }
}

/// Canonical string for a tree (AHU encoding rooted at the center).
/// Equal strings iff the trees are isomorphic.
pub fn tree_canonical_code(g: &Graph) -> Option<String> {
    if !g.is_tree() {
        return None;
    }
    let mut degree: Vec<usize> = (0..g.universe())
        .map(|v| if g.contains_vertex(v) { g.adjacency[v].len() } else { 0 })
        .collect();
    let mut remaining = g.vertices();
    let mut layer: Vec<usize> = remaining.iter().filter(|&v| degree[v] <= 1).collect();
    while remaining.len() > 2 {
        let mut next = Vec::new();
        for &leaf in &layer {
            remaining.remove(leaf);
            for w in g.adjacency[leaf].iter() {
                if remaining.contains(w) {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    remaining
        .iter()
        .map(|root| ahu(g, root, usize::MAX))
        .min()
}

fn ahu(g: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = g.adjacency[v]
        .iter()
        .filter(|&w| w != parent)
        .map(|w| ahu(g, w, v))
        .collect();
    kids.sort();
    let mut s = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
    s.push('(');
    kids.iter().for_each(|k| s.push_str(k));
    s.push(')');
    s
}
