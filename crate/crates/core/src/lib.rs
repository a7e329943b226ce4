//! Edge ideals of finite simple graphs and the combinatorics of their
//! independence complexes.
//!
//! The crate computes, with exact arithmetic, the invariants that tie a
//! graph `G` to its edge ideal `I(G)`: vertex decomposability and
//! shellability of the independence complex (with replayable
//! certificates), (sequential) Cohen-Macaulayness, graded Betti numbers,
//! regularity and projective dimension, and the graph-side quantities
//! `a(G)` (induced matching number) and the matching number.
//!
//! [`harness`] runs exhaustive and seeded verification campaigns that
//! cross-check these quantities against each other.

pub mod decomposition;
pub mod error;
pub mod generate;
pub mod graph;
pub mod harness;
pub mod homology;
pub mod ideals;
pub mod invariants;
pub mod io;
pub mod linalg;
pub mod simplicial;
pub mod vertex_set;

pub use decomposition::{Certificate, DecompositionTree, ShellingOrder, VdSolver};
pub use error::{Error, Result};
pub use generate::Family;
pub use graph::{Bipartition, Graph};
pub use homology::{BettiTable, FieldSpec, HomologyProfile};
pub use ideals::SquareFreeMonomialIdeal;
pub use simplicial::{FVector, SimplicialComplex};
pub use vertex_set::{VertexSet, MAX_VERTICES};
