//! Square-free monomial ideals: edge ideals, cover ideals and Alexander
//! duality, plus the cover-ideal splitting along a degree-one vertex.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::simplicial::{minimal_sets, SimplicialComplex};
use crate::vertex_set::VertexSet;

/// A square-free monomial ideal in the polynomial ring whose variables are
/// the ground set. Each generator is stored as its support.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquareFreeMonomialIdeal {
    ground: VertexSet,
    /// Minimal generators: an antichain, sorted.
    generators: Vec<VertexSet>,
    unit: bool,
}

impl SquareFreeMonomialIdeal {
    pub fn new<I: IntoIterator<Item = VertexSet>>(ground: VertexSet, generators: I) -> Result<Self> {
        let gens: Vec<VertexSet> = generators.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| !g.is_subset(ground)) {
            return Err(Error::NotInGroundSet(bad.to_string()));
        }
        Ok(Self::from_gens(ground, gens))
    }

    fn from_gens(ground: VertexSet, gens: Vec<VertexSet>) -> Self {
        if gens.iter().any(|g| g.is_empty()) {
            return Self::unit(ground);
        }
        SquareFreeMonomialIdeal {
            ground,
            generators: minimal_sets(gens),
            unit: false,
        }
    }

    pub fn zero(ground: VertexSet) -> Self {
        SquareFreeMonomialIdeal {
            ground,
            generators: Vec::new(),
            unit: false,
        }
    }

    pub fn unit(ground: VertexSet) -> Self {
        SquareFreeMonomialIdeal {
            ground,
            generators: Vec::new(),
            unit: true,
        }
    }

    /// `I(G) = (x_u x_v : {u,v} ∈ E(G))`.
    pub fn edge_ideal(g: &Graph) -> Self {
        let gens = g
            .edges()
            .into_iter()
            .map(|(u, v)| VertexSet::singleton(u).with(v))
            .collect();
        Self::from_gens(g.vertices(), gens)
    }

    /// Generated by the products over minimal vertex covers. The edgeless
    /// graph has the empty cover, so its cover ideal is the unit ideal.
    pub fn cover_ideal(g: &Graph) -> Self {
        Self::from_gens(g.vertices(), minimal_vertex_covers(g))
    }

    pub fn ground_set(&self) -> VertexSet {
        self.ground
    }

    pub fn generators(&self) -> &[VertexSet] {
        &self.generators
    }

    pub fn is_unit(&self) -> bool {
        self.unit
    }

    pub fn is_zero(&self) -> bool {
        !self.unit && self.generators.is_empty()
    }

    /// Same generators over a larger ring.
    pub fn embed(&self, ground: VertexSet) -> Result<Self> {
        if !self.ground.is_subset(ground) {
            return Err(Error::NotInGroundSet(self.ground.to_string()));
        }
        Ok(SquareFreeMonomialIdeal {
            ground,
            ..self.clone()
        })
    }

    /// Contains the square-free monomial with support `m`.
    pub fn contains(&self, m: VertexSet) -> bool {
        self.unit || self.generators.iter().any(|g| g.is_subset(m))
    }

    /// `m · I` for a monomial `m` whose support avoids every generator, so
    /// that the product stays square-free.
    pub fn times_monomial(&self, m: VertexSet) -> Result<Self> {
        if !m.is_subset(self.ground) {
            return Err(Error::NotInGroundSet(m.to_string()));
        }
        if self.unit {
            return Ok(Self::from_gens(self.ground, vec![m]));
        }
        if let Some(g) = self.generators.iter().find(|g| !g.is_disjoint(m)) {
            return Err(Error::InvalidParameter(format!(
                "monomial {m} shares support with generator {g}"
            )));
        }
        Ok(Self::from_gens(
            self.ground,
            self.generators.iter().map(|&g| g | m).collect(),
        ))
    }

    pub fn sum(&self, other: &Self) -> Self {
        let ground = self.ground | other.ground;
        if self.unit || other.unit {
            return Self::unit(ground);
        }
        let gens = self.generators.iter().chain(&other.generators).copied().collect();
        Self::from_gens(ground, gens)
    }

    /// For square-free monomial ideals the intersection is generated by the
    /// pairwise least common multiples, i.e. unions of supports.
    pub fn intersection(&self, other: &Self) -> Self {
        let ground = self.ground | other.ground;
        if self.unit {
            return Self { ground, ..other.clone() };
        }
        if other.unit {
            return Self { ground, ..self.clone() };
        }
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for &a in &self.generators {
            for &b in &other.generators {
                gens.push(a | b);
            }
        }
        Self::from_gens(ground, gens)
    }

    /// Generated by the minimal transversals of the generator supports.
    pub fn alexander_dual(&self) -> Result<Self> {
        if self.unit {
            return Err(Error::UnitIdeal);
        }
        if self.generators.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        Ok(Self::from_gens(self.ground, minimal_transversals(&self.generators)))
    }

    /// Faces are the subsets of the ground set containing no generator.
    pub fn stanley_reisner_complex(&self) -> Result<SimplicialComplex> {
        if self.unit {
            return Err(Error::UnitIdeal);
        }
        let facets = minimal_transversals(&self.generators)
            .into_iter()
            .map(|t| self.ground - t)
            .collect();
        Ok(SimplicialComplex::from_facets_unchecked(self.ground, facets))
    }
}

impl fmt::Display for SquareFreeMonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.unit {
            return write!(f, "(1)");
        }
        if self.generators.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            for v in g.iter() {
                write!(f, "x{v}")?;
            }
        }
        write!(f, ")")
    }
}

impl fmt::Debug for SquareFreeMonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.ground)
    }
}

/// Minimal hitting sets of a family, built one member at a time.
pub(crate) fn minimal_transversals(family: &[VertexSet]) -> Vec<VertexSet> {
    let mut current = vec![VertexSet::EMPTY];
    for &member in family {
        let mut next = Vec::with_capacity(current.len() * 2);
        for &t in &current {
            if t.is_disjoint(member) {
                next.extend(member.iter().map(|v| t.with(v)));
            } else {
                next.push(t);
            }
        }
        current = minimal_sets(next);
    }
    current
}

/// All inclusion-minimal vertex covers, as complements of maximal
/// independent sets.
pub fn minimal_vertex_covers(g: &Graph) -> Vec<VertexSet> {
    let mut covers: Vec<VertexSet> = SimplicialComplex::independence_complex(g)
        .facets()
        .iter()
        .map(|&f| g.vertices() - f)
        .collect();
    covers.sort_unstable();
    covers
}

/// All minimal vertex covers have the same size.
pub fn is_unmixed(g: &Graph) -> bool {
    let covers = minimal_vertex_covers(g);
    covers.windows(2).all(|w| w[0].len() == w[1].len())
}

/// The decomposition of a cover ideal along a degree-one vertex `x` with
/// neighbor `y`:
///
/// * `I(G)^∨ = (∏ N(y)) · I(G')^∨ + y · I(G'')^∨`
/// * `(∏ N(y)) · I(G')^∨ ∩ y · I(G'')^∨ = y · (∏ N(y)) · I(G')^∨`
///
/// with `G' = G ∖ N[y]` and `G'' = G ∖ N[x]`, both cover ideals viewed in
/// the ring of `G`.
#[derive(Clone, Debug)]
pub struct CoverSplitting {
    pub leaf: usize,
    pub neighbor: usize,
    pub g_prime: Graph,
    pub g_dblprime: Graph,
    pub sum_holds: bool,
    pub intersection_holds: bool,
}

pub fn cover_ideal_splitting(g: &Graph, x: usize) -> Result<CoverSplitting> {
    let nx = g.neighbors(x)?;
    if nx.len() != 1 {
        return Err(Error::NotDegreeOne {
            vertex: x,
            degree: nx.len(),
        });
    }
    let y = nx.min().unwrap();
    let ny = g.neighbors(y)?;
    let g_prime = g.closed_neighborhood_delete(y)?;
    let g_dblprime = g.closed_neighborhood_delete(x)?;

    let ambient = g.vertices();
    let cover = SquareFreeMonomialIdeal::cover_ideal(g);
    let prime_cover = SquareFreeMonomialIdeal::cover_ideal(&g_prime).embed(ambient)?;
    let dblprime_cover = SquareFreeMonomialIdeal::cover_ideal(&g_dblprime).embed(ambient)?;

    let left = prime_cover.times_monomial(ny)?;
    let right = dblprime_cover.times_monomial(VertexSet::singleton(y))?;
    let sum_holds = left.sum(&right) == cover;
    let intersection_holds = left.intersection(&right) == prime_cover.times_monomial(ny.with(y))?;

    Ok(CoverSplitting {
        leaf: x,
        neighbor: y,
        g_prime,
        g_dblprime,
        sum_holds,
        intersection_holds,
    })
}
