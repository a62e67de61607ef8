//! Isomorphism-free collections of small graphs with precomputed invariants.

mod align;
mod assignment;
mod generate;
mod io;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{canonical_labeling, orbits_of};
use crate::domination::{domination_polynomial, DominationError};
use crate::error::ParseError;
use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::polynomial::DominationPolynomial;
use crate::structure::count_subgraphs;

pub use align::{
    align_to_reference, reference_table, AlignmentReport, Discrepancy, ReferenceEntry, REFERENCE_NAMES,
};
pub use generate::{generate_all, generate_regular, MAX_GENERATION_ORDER};
pub use io::{export_graph6, load_catalog, parse_catalog, save_catalog, write_catalog};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("no {k}-regular graph on {n} vertices: n*k is odd")]
    OddDegreeSum { n: usize, k: usize },
    #[error("degree {k} must be below the order {n}")]
    DegreeTooLarge { n: usize, k: usize },
    #[error("order {n} exceeds the generation limit {max}")]
    OrderTooLarge { n: usize, max: usize },
    #[error(transparent)]
    Domination(#[from] DominationError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {source}")]
    Json {
        line: usize,
        #[source]
        source: serde_json::Error,
    },
    #[error("line {line}: {source}")]
    Graph6 {
        line: usize,
        #[source]
        source: ParseError,
    },
    #[error("line {line}: stored {field} {stored} but the graph gives {computed}")]
    Mismatch {
        line: usize,
        field: &'static str,
        stored: String,
        computed: String,
    },
    #[error("line {line}: graph is isomorphic to the one on line {first}")]
    DuplicateGraph { line: usize, first: usize },
    #[error("line {line}: name {name:?} is not one of G1..G21")]
    BadName { line: usize, name: String },
    #[error("line {line}: name {name} already used on line {first}")]
    DuplicateName {
        line: usize,
        name: String,
        first: usize,
    },
    #[error("alignment needs the 21 cubic graphs of order 10: {0}")]
    AlignmentShape(String),
    #[error("no assignment respects connectivity:\n{0}")]
    AlignmentInfeasible(String),
    #[error("alignment differs from the reference table:\n{0}")]
    AlignmentInexact(String),
}

/// Invariants stored with every entry and rechecked on load.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub poly: DominationPolynomial,
    pub girth: Option<usize>,
    pub triangles: usize,
    /// Diamonds, i.e. 4-sets inducing exactly five edges.
    pub t: usize,
    /// K4 subgraphs.
    pub s: usize,
    pub connected: bool,
    /// Number of vertex orbits under the automorphism group.
    pub orbits: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    /// The graph in canonical labeling.
    pub graph: Graph,
    /// graph6 of `graph`, which is also its canonical form.
    pub graph6: String,
    pub fingerprint: Fingerprint,
    pub paper_name: Option<String>,
}

impl CatalogEntry {
    /// Canonically relabels `g` and computes its fingerprint.
    pub fn new(g: &Graph) -> Result<Self, CatalogError> {
        let canon = canonical_labeling(g);
        let sub = count_subgraphs(&canon.graph);
        let fingerprint = Fingerprint {
            poly: domination_polynomial(&canon.graph)?,
            girth: sub.girth,
            triangles: sub.triangles,
            t: sub.diamonds,
            s: sub.k4s,
            connected: canon.graph.is_connected(),
            orbits: orbits_of(g.order(), &canon.generators).len(),
        };
        Ok(CatalogEntry {
            graph6: encode_graph6(&canon.graph),
            graph: canon.graph,
            fingerprint,
            paper_name: None,
        })
    }

    pub fn poly(&self) -> &DominationPolynomial {
        &self.fingerprint.poly
    }

    /// `d(G, i)`.
    pub fn d(&self, i: usize) -> u64 {
        self.fingerprint.poly.coeff_u64(i)
    }

    /// The reference name if assigned, otherwise the graph6 string.
    pub fn label(&self) -> &str {
        self.paper_name.as_deref().unwrap_or(&self.graph6)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularParams {
    pub order: usize,
    pub degree: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Catalog {
    /// Set for catalogs of `k`-regular graphs on `n` vertices.
    pub params: Option<RegularParams>,
    /// Sorted by graph6, pairwise non-isomorphic.
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    /// Builds a catalog from graphs that are already pairwise
    /// non-isomorphic; duplicates are dropped.
    pub fn from_graphs<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> Result<Self, CatalogError> {
        let mut entries = graphs
            .into_iter()
            .map(CatalogEntry::new)
            .collect::<Result<Vec<_>, _>>()?;
        entries.sort_by(|a, b| a.graph6.cmp(&b.graph6));
        entries.dedup_by(|a, b| a.graph6 == b.graph6);
        let params = infer_params(&entries);
        Ok(Catalog { params, entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn connected_count(&self) -> usize {
        self.entries.iter().filter(|e| e.fingerprint.connected).count()
    }

    pub fn by_name(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.paper_name.as_deref() == Some(name))
    }

    pub fn by_graph6(&self, graph6: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.graph6 == graph6)
    }
}

pub(crate) fn infer_params(entries: &[CatalogEntry]) -> Option<RegularParams> {
    let first = entries.first()?;
    let order = first.graph.order();
    let degree = first.graph.regular_degree()?;
    entries
        .iter()
        .all(|e| e.graph.order() == order && e.graph.regular_degree() == Some(degree))
        .then_some(RegularParams { order, degree })
}
