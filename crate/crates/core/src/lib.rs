//! Classification of simplicial complexes as Cohen–Macaulay (CM), approximately
//! Cohen–Macaulay (ACM), sequentially Cohen–Macaulay but not ACM, or not
//! sequentially Cohen–Macaulay.
//!
//! Every verdict can be reached two ways. Route A stays on the complex: Reisner's
//! link-homology criterion and the pure-skeleton test for sequential CM-ness.
//! Route B passes to the Stanley–Reisner ideal `I_{Δ*}` of the Alexander dual and
//! asks whether it is componentwise linear and in which degrees it is generated.
//! The [`harness`] module runs both routes over every complex on a few vertices.

pub mod complex;
pub mod criteria;
pub mod duality;
mod error;
pub mod harness;
pub mod homology;
pub mod vertex_set;

pub use complex::{Dimension, SimplicialComplex};
pub use criteria::{
    classify, dual_ideal, graded_betti_hochster, has_linear_resolution_er, is_acm_route_a,
    is_acm_route_b, is_cohen_macaulay, is_componentwise_linear, is_scm_dual, is_scm_skeleton,
    BettiTable, ClassReport, CmCheck, CmWitness, ComponentwiseLinearity, DegreeLinearity, Route,
    Verdict,
};
pub use duality::{
    alexander_dual, complex_of_ideal, generation_degrees, ideal_of_complex, squarefree_component,
    SquarefreeIdeal,
};
pub use error::{Error, Result};
pub use homology::{
    boundary_matrix, rank, reduced_betti, reduced_betti_numbers, BoundaryMatrix, FieldSpec, Prime,
};
pub use vertex_set::{VertexSet, MAX_VERTICES};
