use std::collections::HashSet;

use rayon::prelude::*;

use super::{Catalog, CatalogError, RegularParams};
use crate::canon::canonical_form;
use crate::graph::{Graph, VertexSet};
use crate::graph6::parse_graph6;

/// Largest order accepted by [`generate_regular`].
pub const MAX_GENERATION_ORDER: usize = 16;

/// Largest order accepted by [`generate_all`].
pub const MAX_ALL_ORDER: usize = 9;

/// Partial `k`-regular graph. Vertices below `next` are saturated and no
/// edge between vertices at or above `next` exists yet except those
/// already forced by earlier vertices.
#[derive(Clone)]
struct Partial {
    adj: Vec<u64>,
    deg: Vec<usize>,
    next: usize,
}

impl Partial {
    fn connect(&mut self, v: usize, w: usize) {
        self.adj[v] |= 1 << w;
        self.adj[w] |= 1 << v;
        self.deg[v] += 1;
        self.deg[w] += 1;
    }

    fn graph(&self) -> Graph {
        Graph::from_adjacency(self.adj.iter().map(|&b| VertexSet::from_bits(b)).collect())
            .expect("partial graphs stay simple")
    }

    /// All ways to saturate vertex `next`. Untouched vertices are
    /// interchangeable, so only the lowest-indexed ones are ever chosen.
    fn children(&self, k: usize) -> Vec<Partial> {
        let n = self.adj.len();
        let v = self.next;
        let need = k - self.deg[v];
        let (fresh, used): (Vec<usize>, Vec<usize>) = (v + 1..n)
            .filter(|&w| self.deg[w] < k)
            .partition(|&w| self.deg[w] == 0);
        let mut out = Vec::new();
        for f in 0..=need.min(fresh.len()) {
            let rest = need - f;
            if rest > used.len() {
                continue;
            }
            for pick in crate::combinatorics::subsets_of_size(used.len(), rest) {
                let mut child = self.clone();
                for &w in &fresh[..f] {
                    child.connect(v, w);
                }
                for i in VertexSet::from_bits(pick) {
                    child.connect(v, used[i]);
                }
                child.next = v + 1;
                out.push(child);
            }
        }
        out
    }

    fn collect_leaves(&self, k: usize, seen: &mut HashSet<Vec<u8>>) {
        if self.next == self.adj.len() {
            seen.insert(canonical_form(&self.graph()));
            return;
        }
        for child in self.children(k) {
            child.collect_leaves(k, seen);
        }
    }
}

/// Canonical graph6 strings of all `k`-regular graphs on `n` vertices, up
/// to isomorphism, sorted.
fn regular_forms(n: usize, k: usize) -> Vec<Vec<u8>> {
    let root = Partial {
        adj: vec![0; n],
        deg: vec![0; n],
        next: 0,
    };
    // Expand a few levels sequentially so the parallel phase has work to
    // split.
    let mut frontier = vec![root];
    while frontier.len() < 64 && frontier.first().is_some_and(|p| p.next < n) {
        frontier = frontier.iter().flat_map(|p| p.children(k)).collect();
    }
    let seen = frontier
        .par_iter()
        .fold(HashSet::new, |mut seen, p| {
            p.collect_leaves(k, &mut seen);
            seen
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    let mut forms: Vec<Vec<u8>> = seen.into_iter().collect();
    forms.sort_unstable();
    forms
}

/// All `k`-regular simple graphs on `n` vertices up to isomorphism,
/// connected or not, sorted by graph6.
pub fn generate_regular(n: usize, k: usize) -> Result<Catalog, CatalogError> {
    if n > MAX_GENERATION_ORDER {
        return Err(CatalogError::OrderTooLarge {
            n,
            max: MAX_GENERATION_ORDER,
        });
    }
    if k >= n {
        return Err(CatalogError::DegreeTooLarge { n, k });
    }
    if n * k % 2 == 1 {
        return Err(CatalogError::OddDegreeSum { n, k });
    }
    let graphs: Vec<Graph> = regular_forms(n, k)
        .iter()
        .map(|form| parse_graph6(std::str::from_utf8(form).expect("ascii")).expect("own encoding"))
        .collect();
    let mut catalog = Catalog::from_graphs(&graphs)?;
    catalog.params = Some(RegularParams { order: n, degree: k });
    Ok(catalog)
}

/// All graphs on `n` vertices up to isomorphism, in canonical labeling and
/// sorted by graph6. Built by adding one vertex at a time with every
/// possible neighborhood.
pub fn generate_all(n: usize) -> Result<Vec<Graph>, CatalogError> {
    if n > MAX_ALL_ORDER {
        return Err(CatalogError::OrderTooLarge {
            n,
            max: MAX_ALL_ORDER,
        });
    }
    let mut level = vec![Graph::empty(0)];
    for m in 0..n {
        let mut forms: Vec<Vec<u8>> = level
            .par_iter()
            .flat_map_iter(|g| {
                (0..1u64 << m).map(move |nbrs| {
                    let mut adj = g.adjacency().to_vec();
                    let nbrs = VertexSet::from_bits(nbrs);
                    for u in nbrs {
                        adj[u] = adj[u].with(m);
                    }
                    adj.push(nbrs);
                    canonical_form(&Graph::from_adjacency(adj).expect("extension is simple"))
                })
            })
            .collect();
        forms.par_sort_unstable();
        forms.dedup();
        level = forms
            .iter()
            .map(|f| parse_graph6(std::str::from_utf8(f).expect("ascii")).expect("own encoding"))
            .collect();
    }
    Ok(level)
}
