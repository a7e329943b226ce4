//! Vertex decomposability and shellability deciders with replayable
//! certificates.
//!
//! A complex is vertex decomposable if it is a simplex (one facet), empty
//! (void or irrelevant), or has a shedding vertex `x`: every facet of
//! `del(x)` is a facet of the complex, and both `del(x)` and `lk(x)` are
//! vertex decomposable. A shelling is an ordering `F_1, ..., F_s` of the
//! facets such that for all `i < j` some `x ∈ F_j ∖ F_i` satisfies
//! `F_j ∖ F_l = {x}` for some `l < j`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use dashmap::DashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::simplicial::SimplicialComplex;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DecompositionTree {
    /// The complex has exactly one facet.
    Simplex,
    /// The complex is void or irrelevant.
    Void,
    Shed {
        vertex: usize,
        deletion: Box<DecompositionTree>,
        link: Box<DecompositionTree>,
    },
}

impl DecompositionTree {
    fn shed(vertex: usize, deletion: DecompositionTree, link: DecompositionTree) -> Self {
        DecompositionTree::Shed {
            vertex,
            deletion: Box::new(deletion),
            link: Box::new(link),
        }
    }

    fn relabel(&self, map: &dyn Fn(usize) -> usize) -> Self {
        match self {
            DecompositionTree::Shed {
                vertex,
                deletion,
                link,
            } => DecompositionTree::shed(map(*vertex), deletion.relabel(map), link.relabel(map)),
            leaf => leaf.clone(),
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            DecompositionTree::Shed { deletion, link, .. } => 1 + deletion.node_count() + link.node_count(),
            _ => 1,
        }
    }
}

impl fmt::Display for DecompositionTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecompositionTree::Simplex => write!(f, "(simplex)"),
            DecompositionTree::Void => write!(f, "(void)"),
            DecompositionTree::Shed {
                vertex,
                deletion,
                link,
            } => write!(f, "(shed {vertex} {deletion} {link})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingOrder(pub Vec<VertexSet>);

impl fmt::Display for ShellingOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(shelling")?;
        for facet in &self.0 {
            write!(f, " (")?;
            for (i, v) in facet.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Decomposition(DecompositionTree),
    Shelling(ShellingOrder),
}

impl Certificate {
    /// FNV-1a hash of the s-expression, as 16 hex digits.
    pub fn digest(&self) -> String {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in self.to_string().bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        format!("{h:016x}")
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Decomposition(t) => t.fmt(f),
            Certificate::Shelling(s) => s.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Sexpr {
    Atom(String),
    List(Vec<Sexpr>),
}

fn parse_sexpr(text: &str) -> Result<Sexpr> {
    let bad = |m: &str| Error::MalformedCertificate(m.to_string());
    let spaced = text.replace('(', " ( ").replace(')', " ) ");
    let mut stack: Vec<Vec<Sexpr>> = vec![Vec::new()];
    for tok in spaced.split_whitespace() {
        match tok {
            "(" => stack.push(Vec::new()),
            ")" => {
                let done = stack.pop().ok_or_else(|| bad("unbalanced ')'"))?;
                stack
                    .last_mut()
                    .ok_or_else(|| bad("unbalanced ')'"))?
                    .push(Sexpr::List(done));
            }
            atom => stack.last_mut().unwrap().push(Sexpr::Atom(atom.to_string())),
        }
    }
    if stack.len() != 1 {
        return Err(bad("unbalanced '('"));
    }
    let mut top = stack.pop().unwrap();
    if top.len() != 1 {
        return Err(bad("expected exactly one expression"));
    }
    Ok(top.pop().unwrap())
}

fn vertex_atom(s: &Sexpr) -> Result<usize> {
    match s {
        Sexpr::Atom(a) => a
            .parse()
            .map_err(|_| Error::MalformedCertificate(format!("bad vertex {a:?}"))),
        Sexpr::List(_) => Err(Error::MalformedCertificate("expected a vertex".into())),
    }
}

fn tree_from_sexpr(s: &Sexpr) -> Result<DecompositionTree> {
    let bad = |m: String| Error::MalformedCertificate(m);
    let Sexpr::List(items) = s else {
        return Err(bad("expected a list".into()));
    };
    match items.first() {
        Some(Sexpr::Atom(h)) if h == "simplex" && items.len() == 1 => Ok(DecompositionTree::Simplex),
        Some(Sexpr::Atom(h)) if h == "void" && items.len() == 1 => Ok(DecompositionTree::Void),
        Some(Sexpr::Atom(h)) if h == "shed" && items.len() == 4 => Ok(DecompositionTree::shed(
            vertex_atom(&items[1])?,
            tree_from_sexpr(&items[2])?,
            tree_from_sexpr(&items[3])?,
        )),
        _ => Err(bad("unknown tree node".into())),
    }
}

impl FromStr for Certificate {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let s = parse_sexpr(text)?;
        if let Sexpr::List(items) = &s {
            if items.first() == Some(&Sexpr::Atom("shelling".into())) {
                let mut facets = Vec::new();
                for item in &items[1..] {
                    let Sexpr::List(vs) = item else {
                        return Err(Error::MalformedCertificate("facet must be a list".into()));
                    };
                    let mut facet = VertexSet::EMPTY;
                    for v in vs {
                        let v = vertex_atom(v)?;
                        if v >= MAX_VERTICES {
                            return Err(Error::MalformedCertificate(format!("vertex {v} out of range")));
                        }
                        facet.insert(v);
                    }
                    facets.push(facet);
                }
                return Ok(Certificate::Shelling(ShellingOrder(facets)));
            }
        }
        tree_from_sexpr(&s).map(Certificate::Decomposition)
    }
}

/// Vertex decomposability search with a shared memo table.
///
/// The memo is keyed by the compacted facet encoding (supports relabeled to
/// `0..k` in ascending order) and stores the answer in compact labels. All
/// writers for one key compute the same value, so concurrent use from
/// several threads is fine.
pub struct VdSolver {
    memo: Option<DashMap<Vec<u32>, Option<Arc<DecompositionTree>>>>,
}

impl Default for VdSolver {
    fn default() -> Self {
        Self::new()
    }
}

impl VdSolver {
    pub fn new() -> Self {
        VdSolver {
            memo: Some(DashMap::new()),
        }
    }

    pub fn without_memo() -> Self {
        VdSolver { memo: None }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.as_ref().map_or(0, DashMap::len)
    }

    /// A decomposition tree if the complex is vertex decomposable.
    /// Shedding candidates are tried in ascending label order.
    pub fn decompose(&self, complex: &SimplicialComplex) -> Option<DecompositionTree> {
        if let Some(leaf) = leaf_for(complex) {
            return Some(leaf);
        }
        let Some(memo) = &self.memo else {
            return self.search(complex);
        };
        let key = complex.compact_key();
        let support = complex.support();
        let to_support = |pos: usize| VertexSet::singleton(pos).expand(support).min().unwrap();
        if let Some(hit) = memo.get(&key) {
            return hit.as_ref().map(|t| t.relabel(&to_support));
        }
        let found = self.search(complex);
        let to_compact = |v: usize| VertexSet::singleton(v).compress(support).min().unwrap();
        memo.insert(key, found.as_ref().map(|t| Arc::new(t.relabel(&to_compact))));
        found
    }

    fn search(&self, complex: &SimplicialComplex) -> Option<DecompositionTree> {
        for x in complex.support().iter() {
            let xs = VertexSet::singleton(x);
            let deletion = complex.deletion(xs);
            if !deletion.facets().iter().all(|&f| complex.is_facet(f)) {
                continue;
            }
            let link = complex.link(xs).expect("support vertex is a face");
            let Some(link_tree) = self.decompose(&link) else {
                continue;
            };
            if let Some(del_tree) = self.decompose(&deletion) {
                return Some(DecompositionTree::shed(x, del_tree, link_tree));
            }
        }
        None
    }

    /// Vertex decomposability of the independence complex of `g`.
    ///
    /// Splits `g` into connected components first (the independence complex
    /// of a disjoint union is the join of the pieces, and a join is vertex
    /// decomposable iff both factors are). On a connected graph, if
    /// `N[x] ⊆ N[y]` for some `x ≠ y`, then `y` sheds whenever `G ∖ y` and
    /// `G ∖ N[y]` are vertex decomposable; that is tried first. If it
    /// fails the full complex search decides.
    pub fn decompose_graph(&self, g: &Graph) -> Option<DecompositionTree> {
        let complex = SimplicialComplex::independence_complex(g);
        if let Some(leaf) = leaf_for(&complex) {
            return Some(leaf);
        }
        let components = g.connected_components();
        if components.len() > 1 {
            let mut acc: Option<(DecompositionTree, SimplicialComplex)> = None;
            for comp in components {
                let sub = g.induced(comp).expect("component is a vertex subset");
                let tree = self.decompose_graph(&sub)?;
                let sub_complex = SimplicialComplex::independence_complex(&sub);
                acc = Some(match acc {
                    None => (tree, sub_complex),
                    Some((t, c)) => {
                        let joined = graft(&t, &c, &tree, &sub_complex);
                        (joined, join(&c, &sub_complex))
                    }
                });
            }
            return acc.map(|(t, _)| t);
        }
        if let Some((_, y)) = dominated_pair(g) {
            let without_y = g.delete_vertices(VertexSet::singleton(y)).unwrap();
            let without_ny = g.closed_neighborhood_delete(y).unwrap();
            if let Some(del_tree) = self.decompose_graph(&without_y) {
                if let Some(link_tree) = self.decompose_graph(&without_ny) {
                    return Some(DecompositionTree::shed(y, del_tree, link_tree));
                }
            }
        }
        self.decompose(&complex)
    }
}

/// First pair `(x, y)`, `x` ascending then `y` ascending, with
/// `N[x] ⊆ N[y]` and `x ≠ y`.
pub fn dominated_pair(g: &Graph) -> Option<(usize, usize)> {
    for x in g.vertices().iter() {
        let nx = g.closed_neighbors(x).unwrap();
        for y in g.neighbors(x).unwrap().iter() {
            if nx.is_subset(g.closed_neighbors(y).unwrap()) {
                return Some((x, y));
            }
        }
    }
    None
}

fn leaf_for(complex: &SimplicialComplex) -> Option<DecompositionTree> {
    if complex.is_void() || complex.is_irrelevant() {
        Some(DecompositionTree::Void)
    } else if complex.is_simplex() {
        Some(DecompositionTree::Simplex)
    } else {
        None
    }
}

/// The join of complexes on disjoint ground sets.
fn join(a: &SimplicialComplex, b: &SimplicialComplex) -> SimplicialComplex {
    let mut facets = Vec::with_capacity(a.facets().len() * b.facets().len());
    for &f in a.facets() {
        for &g in b.facets() {
            facets.push(f | g);
        }
    }
    SimplicialComplex::from_facets_unchecked(a.ground_set() | b.ground_set(), facets)
}

/// A tree for `first * second` from trees for the two factors: shed
/// through `first` as before, then continue with `second`'s tree below
/// every leaf.
fn graft(
    first_tree: &DecompositionTree,
    first: &SimplicialComplex,
    second_tree: &DecompositionTree,
    second: &SimplicialComplex,
) -> DecompositionTree {
    match first_tree {
        DecompositionTree::Shed {
            vertex,
            deletion,
            link,
        } => {
            let xs = VertexSet::singleton(*vertex);
            DecompositionTree::shed(
                *vertex,
                graft(deletion, &first.deletion(xs), second_tree, second),
                graft(link, &first.link(xs).unwrap(), second_tree, second),
            )
        }
        _ if first.is_void() => DecompositionTree::Void,
        _ if first.is_irrelevant() => second_tree.clone(),
        // a nonempty simplex: the join is a cone over `second`
        _ => cone(second_tree, second),
    }
}

fn cone(tree: &DecompositionTree, complex: &SimplicialComplex) -> DecompositionTree {
    match tree {
        DecompositionTree::Shed {
            vertex,
            deletion,
            link,
        } => {
            let xs = VertexSet::singleton(*vertex);
            DecompositionTree::shed(
                *vertex,
                cone(deletion, &complex.deletion(xs)),
                cone(link, &complex.link(xs).unwrap()),
            )
        }
        _ if complex.is_void() => DecompositionTree::Void,
        _ => DecompositionTree::Simplex,
    }
}

pub fn is_vertex_decomposable(complex: &SimplicialComplex) -> Option<DecompositionTree> {
    VdSolver::new().decompose(complex)
}

pub fn is_vd_graph(g: &Graph) -> Option<DecompositionTree> {
    VdSolver::new().decompose_graph(g)
}

/// A shelling order if one exists.
///
/// Only orders listing facets by non-increasing size are explored: any
/// shelling can be rearranged that way, preserving the relative order of
/// facets of equal size. Whether a facet may come next depends only on the
/// set already placed, so dead sets are remembered.
pub fn is_shellable(complex: &SimplicialComplex) -> Option<ShellingOrder> {
    let mut facets = complex.facets().to_vec();
    facets.sort_by(|a, b| b.len().cmp(&a.len()).then(a.lex_cmp(*b)));
    if facets.len() <= 1 {
        return Some(ShellingOrder(facets));
    }
    let s = facets.len();
    let diff: Vec<Vec<VertexSet>> = facets
        .iter()
        .map(|&fj| facets.iter().map(|&fl| fj - fl).collect())
        .collect();
    let mut search = ShellSearch {
        facets: &facets,
        diff: &diff,
        order: Vec::with_capacity(s),
        placed: vec![0u64; s.div_ceil(64)],
        dead: HashSet::new(),
    };
    search
        .run()
        .then(|| ShellingOrder(search.order.iter().map(|&i| facets[i]).collect()))
}

struct ShellSearch<'a> {
    facets: &'a [VertexSet],
    diff: &'a [Vec<VertexSet>],
    order: Vec<usize>,
    placed: Vec<u64>,
    dead: HashSet<Vec<u64>>,
}

impl ShellSearch<'_> {
    fn is_placed(&self, j: usize) -> bool {
        self.placed[j / 64] >> (j % 64) & 1 == 1
    }

    fn toggle(&mut self, j: usize) {
        self.placed[j / 64] ^= 1 << (j % 64);
    }

    fn can_append(&self, j: usize) -> bool {
        let row = &self.diff[j];
        let witnesses = self
            .order
            .iter()
            .map(|&l| row[l])
            .filter(|d| d.len() == 1)
            .fold(VertexSet::EMPTY, |a, d| a | d);
        self.order.iter().all(|&i| !row[i].is_disjoint(witnesses))
    }

    fn run(&mut self) -> bool {
        let s = self.facets.len();
        if self.order.len() == s {
            return true;
        }
        if self.dead.contains(&self.placed) {
            return false;
        }
        let next_size = (0..s)
            .filter(|&j| !self.is_placed(j))
            .map(|j| self.facets[j].len())
            .max()
            .unwrap();
        for j in 0..s {
            if self.is_placed(j) || self.facets[j].len() != next_size {
                continue;
            }
            if !self.order.is_empty() && !self.can_append(j) {
                continue;
            }
            self.order.push(j);
            self.toggle(j);
            if self.run() {
                return true;
            }
            self.toggle(j);
            self.order.pop();
        }
        self.dead.insert(self.placed.clone());
        false
    }
}

/// Replays a certificate using only the definitions.
pub fn verify_certificate(complex: &SimplicialComplex, cert: &Certificate) -> Result<bool> {
    match cert {
        Certificate::Decomposition(t) => verify_tree(complex, t),
        Certificate::Shelling(order) => Ok(verify_shelling(complex, order)),
    }
}

fn verify_tree(complex: &SimplicialComplex, tree: &DecompositionTree) -> Result<bool> {
    match tree {
        DecompositionTree::Simplex => Ok(complex.facets().len() == 1),
        DecompositionTree::Void => Ok(complex.is_void() || complex.is_irrelevant()),
        DecompositionTree::Shed {
            vertex,
            deletion,
            link,
        } => {
            if *vertex >= MAX_VERTICES {
                return Err(Error::MalformedCertificate(format!("vertex {vertex} out of range")));
            }
            let xs = VertexSet::singleton(*vertex);
            if !complex.is_face(xs) {
                return Ok(false);
            }
            let del = complex.deletion(xs);
            if !del.facets().iter().all(|&f| complex.is_facet(f)) {
                return Ok(false);
            }
            let lk = complex.link(xs)?;
            Ok(verify_tree(&del, deletion)? && verify_tree(&lk, link)?)
        }
    }
}

fn verify_shelling(complex: &SimplicialComplex, order: &ShellingOrder) -> bool {
    let f = &order.0;
    let mut listed = f.clone();
    listed.sort_unstable();
    listed.dedup();
    if listed.len() != f.len() || listed != complex.facets() {
        return false;
    }
    for j in 0..f.len() {
        for i in 0..j {
            let ok = (f[j] - f[i])
                .iter()
                .any(|x| (0..j).any(|l| f[j] - f[l] == VertexSet::singleton(x)));
            if !ok {
                return false;
            }
        }
    }
    true
}
