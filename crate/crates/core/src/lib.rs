//! Domination polynomials of small graphs.
//!
//! Graphs have at most 62 vertices and are stored as bitmask adjacency
//! rows. Polynomials are exact up to order 30. On top of the counting
//! kernels sit a canonical labeling, an isomorphism-free generator for
//! regular graphs, and grouping of graphs by polynomial.
//!
//! ```
//! use domipoly_core::{domination_polynomial, Graph};
//!
//! let p = domination_polynomial(&Graph::petersen()).unwrap();
//! assert_eq!(p.to_string(), "x^10 + 10x^9 + 45x^8 + 120x^7 + 200x^6 + 192x^5 + 75x^4 + 10x^3");
//! ```

pub mod canon;
pub mod catalog;
pub mod combinatorics;
pub mod domination;
pub mod edge_list;
pub mod equivalence;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod polynomial;
pub mod structure;
pub mod verify;

pub use canon::{are_isomorphic, automorphism_orbits, canonical_form, canonical_labeling, is_vertex_transitive};
pub use catalog::{Catalog, CatalogEntry, CatalogError, Fingerprint};
pub use domination::{
    count_dominating, count_dominating_ie, domination_number, domination_polynomial, gamma_sets,
    DominationError, GammaFamily,
};
pub use edge_list::parse_edge_list;
pub use equivalence::{partition_by_polynomial, EquivalenceClass};
pub use error::{GraphError, ParseError};
pub use graph::{Graph, Permutation, VertexSet};
pub use graph6::{encode_graph6, parse_graph6};
pub use polynomial::DominationPolynomial;
pub use structure::{MinDegreeInference, StructureError, SubgraphCounts};
