//! What the coefficients of a domination polynomial force about the graph,
//! and the small-subgraph counts that determine the top coefficients of a
//! cubic graph on ten vertices.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinatorics::{binomial, subsets_of_size};
use crate::domination::{domination_number, domination_polynomial, DominationError};
use crate::graph::{closed_twin_in, girth, Graph, VertexSet};
use crate::polynomial::DominationPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("no coefficient d(G,j) equals C(n,j); not the polynomial of a graph")]
    MalformedPolynomial,
    #[error("the polynomial of the empty graph carries no degree information")]
    EmptyGraph,
    #[error("expected a cubic graph on 10 vertices, got order {order} with degrees {min_degree:?}..{max_degree:?}")]
    NotCubicOrder10 {
        order: usize,
        min_degree: Option<usize>,
        max_degree: Option<usize>,
    },
    #[error("reference graph is not regular")]
    NotRegular,
    #[error("reference graph has closed twins {0} and {1}")]
    ClosedTwins(usize, usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("minimum degree {0} is below 3")]
    MinDegreeBelowThree(usize),
    #[error(transparent)]
    Domination(#[from] DominationError),
}

/// What the first full coefficient says about the minimum degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinDegreeInference {
    /// Smallest `j` with `d(G, j) = C(n, j)`.
    pub l: usize,
    /// `δ(G) = n − l`.
    pub delta: usize,
    /// `C(n, l−1) − d(G, l−1)`: the number of distinct non-dominating
    /// `(l−1)`-sets, each of which is `V ∖ N[v]` for a vertex of degree δ.
    pub min_degree_vertex_lower_bound: u64,
}

/// Reads δ(G) off the polynomial alone.
///
/// Every `j`-set dominates iff no vertex has `n − 1 − deg(v) >= j`
/// non-neighbors, so the first full coefficient sits at `j = n − δ`.
pub fn infer_min_degree(p: &DominationPolynomial) -> Result<MinDegreeInference, StructureError> {
    let n = p.order();
    if n == 0 {
        return Err(StructureError::EmptyGraph);
    }
    let l = (0..=n)
        .find(|&j| p.coeff_u64(j) == binomial(n, j))
        .ok_or(StructureError::MalformedPolynomial)?;
    if l == 0 {
        return Err(StructureError::MalformedPolynomial);
    }
    Ok(MinDegreeInference {
        l,
        delta: n - l,
        min_degree_vertex_lower_bound: binomial(n, l - 1) - p.coeff_u64(l - 1),
    })
}

/// Some pair `u < v` with `N[u] = N[v]`.
pub fn has_closed_twins(g: &Graph) -> Option<(usize, usize)> {
    closed_twin_in(g, g.vertices())
}

/// Vertices of minimum degree.
pub fn min_degree_vertices(g: &Graph) -> VertexSet {
    match g.min_degree() {
        Some(d) => (0..g.order()).filter(|&v| g.degree(v) == d).collect(),
        None => VertexSet::EMPTY,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityTransferReport {
    /// Degree of the reference graph.
    pub k: usize,
    pub polynomials_match: bool,
    pub candidate_is_k_regular: bool,
    /// Equal polynomials imply the candidate is `k`-regular.
    pub conclusion_holds: bool,
}

/// For a `k`-regular reference `h` without closed twins, any `g` with the
/// same polynomial must be `k`-regular: δ(g) = k from the first full
/// coefficient, and the next coefficient down counts all `n` vertices as
/// having degree δ.
pub fn check_regularity_transfer(
    g: &Graph,
    h: &Graph,
) -> Result<RegularityTransferReport, StructureError> {
    let k = h.regular_degree().ok_or(StructureError::NotRegular)?;
    if let Some((u, v)) = has_closed_twins(h) {
        return Err(StructureError::ClosedTwins(u, v));
    }
    let polynomials_match = domination_polynomial(g)? == domination_polynomial(h)?;
    let candidate_is_k_regular = g.regular_degree() == Some(k);
    Ok(RegularityTransferReport {
        k,
        polynomials_match,
        candidate_is_k_regular,
        conclusion_holds: !polynomials_match || candidate_is_k_regular,
    })
}

/// Counts of the small subgraphs that correct `d(G, 6)` for cubic graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgraphCounts {
    /// 4-vertex sets inducing exactly five edges (K4 minus an edge).
    /// Sets inducing a K4 are counted only in `k4s`.
    pub diamonds: usize,
    pub k4s: usize,
    pub triangles: usize,
    pub girth: Option<usize>,
}

fn induced_edges(g: &Graph, s: VertexSet) -> usize {
    s.iter().map(|v| (g.neighbors(v) & s).len()).sum::<usize>() / 2
}

pub fn count_subgraphs(g: &Graph) -> SubgraphCounts {
    let n = g.order();
    let mut diamonds = 0;
    let mut k4s = 0;
    for bits in subsets_of_size(n, 4) {
        match induced_edges(g, VertexSet::from_bits(bits)) {
            5 => diamonds += 1,
            6 => k4s += 1,
            _ => {}
        }
    }
    let triangles = subsets_of_size(n, 3)
        .filter(|&bits| induced_edges(g, VertexSet::from_bits(bits)) == 3)
        .count();
    SubgraphCounts {
        diamonds,
        k4s,
        triangles,
        girth: girth(g),
    }
}

fn require_cubic_order_10(g: &Graph) -> Result<(), StructureError> {
    if g.order() == 10 && g.regular_degree() == Some(3) {
        Ok(())
    } else {
        Err(StructureError::NotCubicOrder10 {
            order: g.order(),
            min_degree: g.min_degree(),
            max_degree: g.max_degree(),
        })
    }
}

/// Number of distinct sets `V ∖ N[v]` over all vertices.
pub fn distinct_closed_complements(g: &Graph) -> usize {
    let all = g.vertices();
    let mut seen: Vec<VertexSet> = (0..g.order()).map(|v| all - g.closed_neighborhood(v)).collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// `d(G, 6) = C(10, 6) − (10 − t − 3s)` for a cubic graph of order 10.
///
/// A 6-set fails to dominate iff it is `V ∖ N[v]` for some `v`. Two such
/// complements coincide iff the vertices are closed twins, which in a cubic
/// graph happens exactly for the two middle vertices of a diamond and for
/// all four vertices of a K4.
pub fn d6_by_formula(g: &Graph) -> Result<u64, StructureError> {
    require_cubic_order_10(g)?;
    let c = count_subgraphs(g);
    Ok(binomial(10, 6) - (10 - c.diamonds as u64 - 3 * c.k4s as u64))
}

/// Non-dominating 5-sets of a cubic graph of order 10, counted through
/// their characterization as 5-subsets of some `V ∖ N[x]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonDominatingFiveSets {
    /// Distinct non-dominating 5-sets; equals `252 − d(G, 5)`.
    pub count: u64,
    /// `(x, y)` pairs generating a 5-set, `10 × 6 = 60`.
    pub generated: u64,
    /// 5-sets produced by more than one pair, with their multiplicity.
    pub collisions: Vec<(VertexSet, u32)>,
}

impl NonDominatingFiveSets {
    pub fn collision_free(&self) -> bool {
        self.collisions.is_empty()
    }
}

pub fn count_nondominating_5sets(g: &Graph) -> Result<NonDominatingFiveSets, StructureError> {
    require_cubic_order_10(g)?;
    let all = g.vertices();
    let mut multiplicity: BTreeMap<VertexSet, u32> = BTreeMap::new();
    let mut generated = 0;
    for x in 0..g.order() {
        let outside = all - g.closed_neighborhood(x);
        for y in outside {
            *multiplicity.entry(outside.without(y)).or_default() += 1;
            generated += 1;
        }
    }
    Ok(NonDominatingFiveSets {
        count: multiplicity.len() as u64,
        generated,
        collisions: multiplicity.into_iter().filter(|&(_, m)| m > 1).collect(),
    })
}

/// Whether `γ(G) <= ⌊3n/8⌋` for a connected graph with `δ(G) >= 3`.
pub fn check_gamma_bound(g: &Graph) -> Result<bool, StructureError> {
    if !g.is_connected() {
        return Err(StructureError::Disconnected);
    }
    let delta = g.min_degree().unwrap_or(0);
    if delta < 3 {
        return Err(StructureError::MinDegreeBelowThree(delta));
    }
    Ok(domination_number(g) <= 3 * g.order() / 8)
}
