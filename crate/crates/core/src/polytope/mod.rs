//! The local polytope: Collins–Gisin coordinates, exact rank and facet
//! certificates.

mod cg;
mod facet;
mod matrix;
mod rank;

pub use cg::{cg_dimension, strategy_to_cg, CgLayout, CollinsGisinVector};
pub use facet::{
    analyze_facet, cg_matrix, is_facet, saturating_vertices, FacetAnalysis, FacetCertificate,
    FacetOptions, FacetReason,
};
pub use matrix::{parse_int_matrix, write_int_matrix, IntMatrix};
pub use rank::rank_exact;

/// Parameters `(m_A, m_B, n_A, n_B)` of a local polytope.
pub type PolytopeParams = crate::game::Scenario;
