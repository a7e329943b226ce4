//! Simplicial complexes stored by their facets.
//!
//! The ground set is tracked separately from the faces: a ground vertex that
//! lies in no face is allowed, which keeps link and deletion closed
//! operations. Two degenerate complexes are distinguished:
//! the void complex (no faces at all) and the irrelevant complex (the empty
//! face only).

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ground: VertexSet,
    /// Antichain, sorted ascending by bitmask.
    facets: Vec<VertexSet>,
}

/// Face counts by dimension; index `0` is dimension `-1` (the empty face).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    pub fn get(&self, dim: isize) -> usize {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|i| self.0.get(i).copied())
            .unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

/// Keeps the inclusion-maximal members, sorted and deduplicated.
pub(crate) fn maximal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable_by_key(|s| std::cmp::Reverse(s.len()));
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

/// Keeps the inclusion-minimal members, sorted and deduplicated.
pub(crate) fn minimal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable_by_key(|s| s.len());
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

impl SimplicialComplex {
    /// The complex generated by `generators`; non-maximal generators are
    /// dropped. Every generator must lie inside `ground`.
    pub fn from_facets<I: IntoIterator<Item = VertexSet>>(ground: VertexSet, generators: I) -> Result<Self> {
        let gens: Vec<VertexSet> = generators.into_iter().collect();
        if let Some(bad) = gens.iter().find(|f| !f.is_subset(ground)) {
            return Err(Error::NotInGroundSet(bad.to_string()));
        }
        Ok(Self::from_facets_unchecked(ground, gens))
    }

    pub(crate) fn from_facets_unchecked(ground: VertexSet, gens: Vec<VertexSet>) -> Self {
        SimplicialComplex {
            ground,
            facets: maximal_sets(gens),
        }
    }

    pub fn void(ground: VertexSet) -> Self {
        SimplicialComplex {
            ground,
            facets: Vec::new(),
        }
    }

    pub fn irrelevant(ground: VertexSet) -> Self {
        SimplicialComplex {
            ground,
            facets: vec![VertexSet::EMPTY],
        }
    }

    /// The full simplex on `ground`.
    pub fn simplex(ground: VertexSet) -> Self {
        SimplicialComplex {
            ground,
            facets: vec![ground],
        }
    }

    /// Faces are the independent sets of `g`; ground set is `V(g)`.
    pub fn independence_complex(g: &Graph) -> Self {
        let mut facets = Vec::new();
        let non_adj = |v: usize| (g.vertices() - g.neighbors(v).unwrap()).without(v);
        // Bron-Kerbosch with pivoting on the complement graph.
        fn expand(
            r: VertexSet,
            mut p: VertexSet,
            mut x: VertexSet,
            non_adj: &dyn Fn(usize) -> VertexSet,
            out: &mut Vec<VertexSet>,
        ) {
            if p.is_empty() {
                if x.is_empty() {
                    out.push(r);
                }
                return;
            }
            let pivot = (p | x)
                .iter()
                .max_by_key(|&u| (non_adj(u) & p).len())
                .unwrap();
            for v in (p - non_adj(pivot)).iter() {
                let nv = non_adj(v);
                expand(r.with(v), p & nv, x & nv, non_adj, out);
                p.remove(v);
                x.insert(v);
            }
        }
        expand(VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &non_adj, &mut facets);
        Self::from_facets_unchecked(g.vertices(), facets)
    }

    pub fn ground_set(&self) -> VertexSet {
        self.ground
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets == [VertexSet::EMPTY]
    }

    /// Exactly one facet (so the irrelevant complex counts, the void one does not).
    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    /// Union of all faces.
    pub fn support(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |a, &f| a | f)
    }

    pub fn is_face(&self, f: VertexSet) -> bool {
        self.facets.iter().any(|&h| f.is_subset(h))
    }

    pub fn is_facet(&self, f: VertexSet) -> bool {
        self.facets.binary_search(&f).is_ok()
    }

    /// All faces, grouped by cardinality (`result[k]` holds the `k`-sets),
    /// each group in lexicographic order.
    pub fn faces_by_size(&self) -> Vec<Vec<VertexSet>> {
        let Some(top) = self.facets.iter().map(|f| f.len()).max() else {
            return Vec::new();
        };
        let mut all: Vec<VertexSet> = self.facets.iter().flat_map(|f| f.subsets()).collect();
        all.sort_unstable();
        all.dedup();
        let mut by_size = vec![Vec::new(); top + 1];
        for f in all {
            by_size[f.len()].push(f);
        }
        for group in &mut by_size {
            group.sort_by(|a, b| a.lex_cmp(*b));
        }
        by_size
    }

    pub fn faces(&self) -> Vec<VertexSet> {
        self.faces_by_size().into_iter().flatten().collect()
    }

    /// `{ H : H ∩ F = ∅, H ∪ F ∈ Δ }` on the ground set minus `F`.
    pub fn link(&self, f: VertexSet) -> Result<Self> {
        if !self.is_face(f) {
            return Err(Error::NotAFace(f.to_string()));
        }
        let gens = self
            .facets
            .iter()
            .filter(|h| f.is_subset(**h))
            .map(|&h| h - f)
            .collect();
        Ok(Self::from_facets_unchecked(self.ground - f, gens))
    }

    /// `{ H ∈ Δ : H ∩ F = ∅ }` on the ground set minus `F`.
    pub fn deletion(&self, f: VertexSet) -> Self {
        let gens = self.facets.iter().map(|&h| h - f).collect();
        Self::from_facets_unchecked(self.ground - f, gens)
    }

    /// Faces contained in `w`.
    pub fn restriction(&self, w: VertexSet) -> Result<Self> {
        if !w.is_subset(self.ground) {
            return Err(Error::NotInGroundSet(w.to_string()));
        }
        let gens = self.facets.iter().map(|&h| h & w).collect();
        Ok(Self::from_facets_unchecked(w, gens))
    }

    /// The complex generated by all `d`-dimensional faces.
    pub fn pure_skeleton(&self, d: isize) -> Result<Self> {
        let dim = self.dimension();
        if d < -1 || dim.is_none_or(|top| d > top) {
            return Err(Error::DimensionOutOfRange(d));
        }
        let size = (d + 1) as usize;
        let mut gens = Vec::new();
        for &h in self.facets.iter().filter(|h| h.len() >= size) {
            gens.extend(h.subsets().filter(|s| s.len() == size));
        }
        Ok(Self::from_facets_unchecked(self.ground, gens))
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// `None` for the void complex, `-1` for the irrelevant one.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.faces_by_size().iter().map(Vec::len).collect())
    }

    /// Vertices occurring in faces, relabeled densely in ascending order;
    /// sorted facets. Two complexes with the same key are isomorphic via the
    /// order-preserving map between their supports.
    pub fn compact_key(&self) -> Vec<u32> {
        let support = self.support();
        let mut key: Vec<u32> = self.facets.iter().map(|f| f.compress(support).bits()).collect();
        key.sort_unstable();
        key
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("ground", &self.ground)
            .field("facets", &self.facets)
            .finish()
    }
}
