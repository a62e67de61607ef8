//! Dominating sets: predicates, exact counts per cardinality, the
//! domination polynomial and γ-sets.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::is_vertex_transitive;
use crate::combinatorics::{binomial, subsets_of_size};
use crate::graph::{Graph, VertexSet};
use crate::polynomial::DominationPolynomial;

/// Largest order accepted by the full `2ⁿ` subset sweeps.
pub const MAX_SWEEP_ORDER: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DominationError {
    #[error(
        "order {n} is above the {MAX_SWEEP_ORDER}-vertex limit for exhaustive sweeps; \
         split the graph into components and multiply their polynomials"
    )]
    Capacity { n: usize },
    #[error("graph is not vertex-transitive")]
    NotVertexTransitive,
    #[error("n·d_v = {numerator} is not divisible by i = {size}; counting and orbits disagree")]
    InexactDivision { numerator: u64, size: usize },
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("set size must be at least 1")]
    EmptySize,
}

/// All γ-sets of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaFamily {
    pub gamma: usize,
    /// In ascending bitmask order.
    pub sets: Vec<VertexSet>,
}

#[inline]
pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    g.closed_neighborhood_set(s) == g.vertices()
}

/// Dominating sets of size `i`, ascending by bitmask.
pub fn dominating_sets_of_size(g: &Graph, i: usize) -> impl Iterator<Item = VertexSet> + '_ {
    subsets_of_size(g.order(), i)
        .map(VertexSet::from_bits)
        .filter(move |&s| is_dominating(g, s))
}

/// `d(G, i)` by testing every `i`-subset.
pub fn count_dominating(g: &Graph, i: usize) -> u64 {
    dominating_sets_of_size(g, i).count() as u64
}

/// `d_v(G, i)`: dominating `i`-sets that contain `v`.
pub fn count_dominating_containing(g: &Graph, v: usize, i: usize) -> Result<u64, DominationError> {
    let n = g.order();
    if v >= n {
        return Err(DominationError::VertexOutOfRange { vertex: v, n });
    }
    if i == 0 {
        return Err(DominationError::EmptySize);
    }
    let below = (1u64 << v) - 1;
    let count = subsets_of_size(n - 1, i - 1)
        .map(|x| VertexSet::from_bits((x & below) | ((x & !below) << 1) | (1u64 << v)))
        .filter(|&s| is_dominating(g, s))
        .count();
    Ok(count as u64)
}

/// `d(G, i) = n·d_v(G, i) / i` for a vertex-transitive graph, with the
/// division checked for exactness.
pub fn count_via_transitivity(g: &Graph, i: usize) -> Result<u64, DominationError> {
    if i == 0 {
        return Err(DominationError::EmptySize);
    }
    if !is_vertex_transitive(g) {
        return Err(DominationError::NotVertexTransitive);
    }
    let dv = count_dominating_containing(g, 0, i)?;
    let numerator = g.order() as u64 * dv;
    if !numerator.is_multiple_of(i as u64) {
        return Err(DominationError::InexactDivision { numerator, size: i });
    }
    Ok(numerator / i as u64)
}

/// `N[S]` for every subset `S` of the `width` vertices starting at
/// `offset`, indexed by the subset mask shifted down by `offset`.
fn cover_table(g: &Graph, offset: usize, width: usize) -> Vec<u64> {
    let mut table = vec![0u64; 1 << width];
    for mask in 1..table.len() {
        let low = mask.trailing_zeros() as usize;
        table[mask] = table[mask & (mask - 1)] | g.closed_neighborhood(offset + low).bits();
    }
    table
}

/// Runs `visit(cover, popcount)` for every subset of the vertices, split
/// into a low and a high half so both lookup tables stay small. Partial
/// tallies from disjoint high-half ranges are summed.
fn sweep<F>(g: &Graph, visit: F) -> Result<Vec<u64>, DominationError>
where
    F: Fn(&mut [u64], u64, u32) + Sync,
{
    let n = g.order();
    if n > MAX_SWEEP_ORDER {
        return Err(DominationError::Capacity { n });
    }
    let lo_width = n / 2;
    let lo = cover_table(g, 0, lo_width);
    let hi = cover_table(g, lo_width, n - lo_width);
    let lo_pop: Vec<u32> = (0..lo.len() as u64).map(u64::count_ones).collect();
    let slots = 2 * (n + 1);
    let tally = (0..hi.len())
        .into_par_iter()
        .fold(
            || vec![0u64; slots],
            |mut acc, h| {
                let base = (h as u64).count_ones();
                for (l, &c) in lo.iter().enumerate() {
                    visit(&mut acc, c | hi[h], base + lo_pop[l]);
                }
                acc
            },
        )
        .reduce(
            || vec![0u64; slots],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(tally)
}

/// The full polynomial from one pass over all `2ⁿ` subsets, each tallied
/// by its size.
pub fn domination_polynomial(g: &Graph) -> Result<DominationPolynomial, DominationError> {
    let n = g.order();
    let full = g.vertices().bits();
    let tally = sweep(g, |acc, cover, size| {
        if cover == full {
            acc[size as usize] += 1;
        }
    })?;
    Ok(DominationPolynomial::new(
        tally[..=n].iter().map(|&c| BigUint::from(c)).collect(),
    ))
}

/// `Σ_{∅≠T⊆V} (−1)^{|T|+1}` grouped by `|N[T]|`.
fn signed_cover_sizes(g: &Graph) -> Result<Vec<i128>, DominationError> {
    let n = g.order();
    // slots [0, n] count odd |T|, [n+1, 2n+1] count even |T|
    let tally = sweep(g, move |acc, cover, size| {
        if size > 0 {
            let s = cover.count_ones() as usize;
            acc[if size % 2 == 1 { s } else { n + 1 + s }] += 1;
        }
    })?;
    Ok((0..=n)
        .map(|s| tally[s] as i128 - tally[n + 1 + s] as i128)
        .collect())
}

fn ie_count(n: usize, signed: &[i128], i: usize) -> u64 {
    let non_dominating: i128 = signed
        .iter()
        .enumerate()
        .map(|(s, &w)| w * binomial(n - s, i) as i128)
        .sum();
    let total = binomial(n, i) as i128;
    u64::try_from(total - non_dominating).expect("inclusion-exclusion count is a valid size")
}

/// `d(G, i)` by inclusion–exclusion over the vertices that fail to be
/// dominated: an `i`-set misses every vertex of `T` iff it avoids `N[T]`.
pub fn count_dominating_ie(g: &Graph, i: usize) -> Result<u64, DominationError> {
    let n = g.order();
    if i > n {
        return Ok(0);
    }
    let signed = signed_cover_sizes(g)?;
    Ok(ie_count(n, &signed, i))
}

/// Every coefficient by inclusion–exclusion.
pub fn domination_polynomial_ie(g: &Graph) -> Result<DominationPolynomial, DominationError> {
    let n = g.order();
    let signed = signed_cover_sizes(g)?;
    Ok(DominationPolynomial::new(
        (0..=n).map(|i| BigUint::from(ie_count(n, &signed, i))).collect(),
    ))
}

/// γ(G) and every dominating set of that size.
pub fn gamma_sets(g: &Graph) -> GammaFamily {
    for i in 0..=g.order() {
        let sets: Vec<VertexSet> = dominating_sets_of_size(g, i).collect();
        if !sets.is_empty() {
            return GammaFamily { gamma: i, sets };
        }
    }
    unreachable!("the full vertex set always dominates")
}

pub fn domination_number(g: &Graph) -> usize {
    (0..=g.order())
        .find(|&i| dominating_sets_of_size(g, i).next().is_some())
        .expect("the full vertex set always dominates")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(g: &Graph) -> Vec<u64> {
        domination_polynomial(g).unwrap().to_u64s()
    }

    #[test]
    fn petersen_counts() {
        let p = Graph::petersen();
        assert_eq!(count_dominating(&p, 3), 10);
        assert_eq!(count_dominating(&p, 4), 75);
        assert_eq!(count_dominating_ie(&p, 5).unwrap(), 192);
        assert_eq!(count_dominating_ie(&p, 6).unwrap(), 200);
        assert_eq!(poly(&p), vec![0, 0, 0, 10, 75, 192, 200, 120, 45, 10, 1]);
    }

    #[test]
    fn petersen_pairs_never_dominate() {
        let p = Graph::petersen();
        assert!(subsets_of_size(10, 2).all(|s| !is_dominating(&p, VertexSet::from_bits(s))));
    }

    #[test]
    fn star_center_dominates() {
        let star = Graph::star(3);
        assert!(is_dominating(&star, VertexSet::singleton(0)));
        assert!(!is_dominating(&star, VertexSet::singleton(1)));
        assert!(is_dominating(&star, star.vertices()));
    }

    #[test]
    fn complete_and_empty() {
        let k4 = Graph::complete(4);
        assert_eq!(count_dominating(&k4, 1), 4);
        assert_eq!(count_dominating(&k4, 2), 6);
        assert_eq!(poly(&k4), vec![0, 4, 6, 4, 1]);
        assert_eq!(poly(&Graph::empty(5)), vec![0, 0, 0, 0, 0, 1]);
        assert_eq!(poly(&Graph::empty(0)), vec![1]);
        assert_eq!(count_dominating(&Graph::empty(0), 0), 1);
        assert_eq!(count_dominating(&k4, 0), 0);
        assert_eq!(count_dominating(&k4, 5), 0);
    }

    #[test]
    fn gamma_families() {
        let p = gamma_sets(&Graph::petersen());
        assert_eq!((p.gamma, p.sets.len()), (3, 10));
        assert!(p.sets.windows(2).all(|w| w[0] < w[1]));
        let k4 = gamma_sets(&Graph::complete(4));
        assert_eq!((k4.gamma, k4.sets.len()), (1, 4));
        // of the 10 pairs in C5 only the five at distance two dominate
        let c5 = gamma_sets(&Graph::cycle(5));
        assert_eq!((c5.gamma, c5.sets.len()), (2, 5));
        assert_eq!(domination_number(&Graph::cycle(5)), 2);
    }

    #[test]
    fn containing_counts() {
        let p = Graph::petersen();
        for v in 0..10 {
            assert_eq!(count_dominating_containing(&p, v, 4).unwrap(), 30);
            assert_eq!(count_dominating_containing(&p, v, 3).unwrap(), 3);
        }
        assert_eq!(count_dominating_containing(&Graph::complete(4), 2, 1).unwrap(), 1);
        assert_eq!(
            count_dominating_containing(&p, 10, 1),
            Err(DominationError::VertexOutOfRange { vertex: 10, n: 10 })
        );
    }

    #[test]
    fn transitivity_shortcut() {
        let p = Graph::petersen();
        assert_eq!(count_via_transitivity(&p, 4).unwrap(), 75);
        assert_eq!(count_via_transitivity(&p, 3).unwrap(), 10);
        assert_eq!(count_via_transitivity(&Graph::cycle(5), 2).unwrap(), 5);
        assert_eq!(
            count_via_transitivity(&Graph::star(3), 2),
            Err(DominationError::NotVertexTransitive)
        );
        assert_eq!(count_via_transitivity(&p, 0), Err(DominationError::EmptySize));
    }

    #[test]
    fn capacity_limit() {
        let big = Graph::empty(31);
        assert_eq!(
            domination_polynomial(&big),
            Err(DominationError::Capacity { n: 31 })
        );
        assert!(count_dominating_ie(&big, 3).is_err());
    }

    #[test]
    fn product_law_on_two_k4() {
        let k4 = Graph::complete(4);
        let two = k4.disjoint_union(&k4).unwrap();
        let p = domination_polynomial(&k4).unwrap();
        assert_eq!(domination_polynomial(&two).unwrap(), p.product(&p));
    }
}
