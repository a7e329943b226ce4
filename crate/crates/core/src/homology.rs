//! Reduced simplicial homology over exact fields, graded Betti numbers of
//! Stanley-Reisner rings via Hochster's formula, and the homological
//! Cohen-Macaulay / sequentially Cohen-Macaulay tests.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ideals::SquareFreeMonomialIdeal;
use crate::linalg::{is_prime, rank_mod_p, rank_rational};
use crate::simplicial::SimplicialComplex;
use crate::vertex_set::VertexSet;

/// Coefficient field for homology.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    #[default]
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn rank(self, rows: &[Vec<i64>]) -> usize {
        match self {
            FieldSpec::Rationals => rank_rational(rows),
            FieldSpec::Prime(p) => rank_mod_p(rows, p),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "p:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// `q` for the rationals, `p:<prime>` for a prime field.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "q" | "Q" => Ok(FieldSpec::Rationals),
            _ => {
                let p = s
                    .strip_prefix("p:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::InvalidParameter(format!("bad field {s:?}, expected q or p:<prime>")))?;
                FieldSpec::prime(p)
            }
        }
    }
}

/// Dimensions of reduced homology; `dims[0]` is degree `-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    pub dims: Vec<usize>,
}

impl HomologyProfile {
    pub fn get(&self, degree: isize) -> usize {
        usize::try_from(degree + 1)
            .ok()
            .and_then(|i| self.dims.get(i).copied())
            .unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// `Σ (-1)^d dim H̃_d`.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(i, &d)| if i % 2 == 1 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

pub fn reduced_homology(complex: &SimplicialComplex, field: FieldSpec) -> HomologyProfile {
    homology_of_faces(&complex.faces_by_size(), field)
}

/// `ranks[k]` is the rank of the boundary map from `k`-element faces to
/// `(k-1)`-element faces; `ranks[0]` and the last entry are `0`.
pub fn boundary_ranks(complex: &SimplicialComplex, field: FieldSpec) -> Vec<usize> {
    ranks_of_faces(&complex.faces_by_size(), field)
}

fn ranks_of_faces(by_size: &[Vec<VertexSet>], field: FieldSpec) -> Vec<usize> {
    let mut ranks = vec![0usize; by_size.len() + 1];
    let support = by_size
        .get(1)
        .map_or(VertexSet::EMPTY, |v| v.iter().fold(VertexSet::EMPTY, |a, &f| a | f));
    let indexer = FaceIndex::new(support);
    for k in 1..by_size.len() {
        let lower = &by_size[k - 1];
        let upper = &by_size[k];
        if upper.is_empty() || lower.is_empty() {
            continue;
        }
        let index = indexer.index_of(lower);
        let rows: Vec<Vec<i64>> = upper
            .iter()
            .map(|&face| {
                let mut row = vec![0i64; lower.len()];
                for (pos, v) in face.iter().enumerate() {
                    let col = index(face.without(v));
                    row[col] = if pos % 2 == 0 { 1 } else { -1 };
                }
                row
            })
            .collect();
        ranks[k] = field.rank(&rows);
    }
    ranks
}

/// Reduced homology from faces grouped by cardinality (`by_size[k]` = the
/// `k`-element faces). The empty face is part of the chain complex.
pub(crate) fn homology_of_faces(by_size: &[Vec<VertexSet>], field: FieldSpec) -> HomologyProfile {
    if by_size.is_empty() || by_size[0].is_empty() {
        return HomologyProfile { dims: vec![0] };
    }
    let ranks = ranks_of_faces(by_size, field);
    let dims = (0..by_size.len())
        .map(|k| by_size[k].len() - ranks[k] - ranks[k + 1])
        .collect();
    HomologyProfile { dims }
}

/// Maps faces to row indices; dense table for small supports.
struct FaceIndex {
    support: VertexSet,
}

impl FaceIndex {
    fn new(support: VertexSet) -> Self {
        FaceIndex { support }
    }

    fn index_of<'a>(&self, faces: &'a [VertexSet]) -> Box<dyn Fn(VertexSet) -> usize + 'a> {
        let support = self.support;
        if support.len() <= 16 {
            let mut table = vec![usize::MAX; 1 << support.len()];
            for (i, f) in faces.iter().enumerate() {
                table[f.compress(support).bits() as usize] = i;
            }
            Box::new(move |f| table[f.compress(support).bits() as usize])
        } else {
            let map: HashMap<VertexSet, usize> = faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
            Box::new(move |f| map[&f])
        }
    }
}

/// Graded Betti numbers `β_{i,j}` of a quotient `R/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub subject: String,
    entries: BTreeMap<(usize, usize), usize>,
}

impl BettiTable {
    pub fn new(subject: impl Into<String>) -> Self {
        BettiTable {
            subject: subject.into(),
            entries: BTreeMap::new(),
        }
    }

    /// Adds `m` to `β_{i,j}`; zero additions are ignored.
    pub fn add(&mut self, i: usize, j: usize, m: usize) {
        if m > 0 {
            *self.entries.entry((i, j)).or_insert(0) += m;
        }
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries `((i, j), β_{i,j})` sorted by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `max { j - i : β_{i,j} ≠ 0 }`.
    pub fn regularity(&self) -> Result<usize> {
        self.entries
            .keys()
            .map(|&(i, j)| j - i)
            .max()
            .ok_or(Error::EmptyTable)
    }

    /// `max { i : β_{i,j} ≠ 0 }`.
    pub fn projective_dimension(&self) -> Result<usize> {
        self.entries
            .keys()
            .map(|&(i, _)| i)
            .max()
            .ok_or(Error::EmptyTable)
    }

    /// Same entries, ignoring the subject label.
    pub fn same_numbers(&self, other: &BettiTable) -> bool {
        self.entries == other.entries
    }
}

/// `β_{i,j}(R/I) = Σ_{|W| = j} dim H̃_{j-i-1}(Δ_I|_W)` where `Δ_I` is the
/// Stanley-Reisner complex of `I`.
pub fn hochster_betti(ideal: &SquareFreeMonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let mut table = BettiTable::new(ideal.to_string());
    table.add(0, 0, 1);
    let gens = ideal.generators();
    let mut local: Vec<VertexSet> = Vec::with_capacity(gens.len());
    for w in ideal.ground_set().subsets().skip(1) {
        local.clear();
        local.extend(gens.iter().copied().filter(|g| g.is_subset(w)));
        let covered = local.iter().fold(VertexSet::EMPTY, |a, &g| a | g);
        if covered != w {
            // a vertex of W outside every generator is a cone point
            continue;
        }
        let j = w.len();
        let mut by_size = vec![Vec::new(); j + 1];
        for face in w.subsets() {
            if !local.iter().any(|g| g.is_subset(face)) {
                by_size[face.len()].push(face);
            }
        }
        while by_size.last().is_some_and(Vec::is_empty) {
            by_size.pop();
        }
        let h = homology_of_faces(&by_size, field);
        for (k, &dim) in h.dims.iter().enumerate() {
            // degree d = k - 1, homological index i = j - d - 1 = j - k
            table.add(j - k, j, dim);
        }
    }
    Ok(table)
}

/// Reisner's criterion: `H̃_i(lk F) = 0` for every face `F` and every
/// `i < dim lk F`.
pub fn is_cohen_macaulay(complex: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    if !complex.is_pure() {
        return Ok(false);
    }
    for face in complex.faces() {
        if complex.is_facet(face) {
            continue;
        }
        let link = complex.link(face)?;
        let dim = link.dimension().expect("link of a face is not void");
        let h = reduced_homology(&link, field);
        if (-1..dim).any(|i| h.get(i) != 0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Duval's criterion: every pure skeleton is Cohen-Macaulay.
pub fn is_sequentially_cm(complex: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    let dim = complex.dimension().ok_or(Error::VoidComplex)?;
    for d in -1..=dim {
        if !is_cohen_macaulay(&complex.pure_skeleton(d)?, field)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cycle, path};
    use crate::ideals::SquareFreeMonomialIdeal;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn ind(g: &crate::graph::Graph) -> SimplicialComplex {
        SimplicialComplex::independence_complex(g)
    }

    #[test]
    fn homology_examples() {
        let q = FieldSpec::Rationals;
        let hollow = SimplicialComplex::from_facets(set(&[0, 1, 2]), [set(&[0, 1]), set(&[1, 2]), set(&[0, 2])]).unwrap();
        assert_eq!(reduced_homology(&hollow, q).dims, vec![0, 0, 1]);
        let points = SimplicialComplex::from_facets(set(&[0, 1]), [set(&[0]), set(&[1])]).unwrap();
        assert_eq!(reduced_homology(&points, q).dims, vec![0, 1]);
        let simplex = SimplicialComplex::simplex(set(&[0, 1, 2]));
        assert!(reduced_homology(&simplex, q).is_acyclic());
        let irr = SimplicialComplex::irrelevant(set(&[0]));
        assert_eq!(reduced_homology(&irr, q).dims, vec![1]);
        let void = SimplicialComplex::void(set(&[0]));
        assert!(reduced_homology(&void, q).is_acyclic());
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // 6-vertex triangulation of RP^2
        let tri = [
            [0, 1, 3], [0, 1, 5], [0, 2, 4], [0, 2, 5], [0, 3, 4],
            [1, 2, 3], [1, 2, 4], [1, 4, 5], [2, 3, 5], [3, 4, 5],
        ];
        let rp2 = SimplicialComplex::from_facets(
            VertexSet::first(6),
            tri.iter().map(|t| set(t)),
        )
        .unwrap();
        let q = reduced_homology(&rp2, FieldSpec::Rationals);
        assert!(q.is_acyclic());
        let f2 = reduced_homology(&rp2, FieldSpec::Prime(2));
        assert_eq!(f2.dims, vec![0, 0, 1, 1]);
    }

    #[test]
    fn hochster_examples() {
        let q = FieldSpec::Rationals;
        let k2 = hochster_betti(&SquareFreeMonomialIdeal::edge_ideal(&path(2)), q).unwrap();
        assert_eq!(k2.entries().collect::<Vec<_>>(), vec![((0, 0), 1), ((1, 2), 1)]);
        assert_eq!(k2.regularity().unwrap(), 1);
        assert_eq!(k2.projective_dimension().unwrap(), 1);

        let p3 = hochster_betti(&SquareFreeMonomialIdeal::edge_ideal(&path(3)), q).unwrap();
        assert_eq!(
            p3.entries().collect::<Vec<_>>(),
            vec![((0, 0), 1), ((1, 2), 2), ((2, 3), 1)]
        );
        assert_eq!(p3.regularity().unwrap(), 1);
        assert_eq!(p3.projective_dimension().unwrap(), 2);

        let c8 = hochster_betti(&SquareFreeMonomialIdeal::edge_ideal(&cycle(8)), q).unwrap();
        assert_eq!(c8.regularity().unwrap(), 3);

        let unit = SquareFreeMonomialIdeal::unit(VertexSet::first(2));
        assert_eq!(hochster_betti(&unit, q), Err(Error::UnitIdeal));
        assert_eq!(BettiTable::new("x").regularity(), Err(Error::EmptyTable));
    }

    #[test]
    fn cover_ideal_of_edge() {
        let cover = SquareFreeMonomialIdeal::cover_ideal(&path(2));
        let t = hochster_betti(&cover, FieldSpec::Rationals).unwrap();
        assert_eq!(t.projective_dimension().unwrap(), 2);
    }

    #[test]
    fn cohen_macaulay_examples() {
        let q = FieldSpec::Rationals;
        assert!(is_cohen_macaulay(&ind(&path(2)), q).unwrap());
        assert!(!is_cohen_macaulay(&ind(&cycle(4)), q).unwrap());
        assert!(is_cohen_macaulay(&SimplicialComplex::simplex(set(&[0, 1, 2])), q).unwrap());
        assert_eq!(
            is_cohen_macaulay(&SimplicialComplex::void(set(&[0])), q),
            Err(Error::VoidComplex)
        );
    }

    #[test]
    fn sequentially_cm_examples() {
        let q = FieldSpec::Rationals;
        assert!(is_sequentially_cm(&ind(&path(3)), q).unwrap());
        assert!(!is_sequentially_cm(&ind(&cycle(4)), q).unwrap());
        assert!(!is_sequentially_cm(&ind(&cycle(8)), q).unwrap());
        assert!(is_sequentially_cm(&ind(&cycle(5)), q).unwrap());
        assert_eq!(
            is_sequentially_cm(&SimplicialComplex::void(set(&[0])), q),
            Err(Error::VoidComplex)
        );
    }

    #[test]
    fn field_parsing() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("p:7".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(7));
        assert!("p:8".parse::<FieldSpec>().is_err());
        assert!("z".parse::<FieldSpec>().is_err());
    }
}
