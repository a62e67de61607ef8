//! Simple undirected graphs on at most [`MAX_ORDER`] vertices, stored as
//! per-vertex neighborhood bitmasks.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Largest supported order. A vertex set must fit in one `u64`, and the
/// single-byte graph6 order header stops at 62.
pub const MAX_ORDER: usize = 62;

/// A subset of `{0, .., n-1}` packed into a machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// All of `{0, .., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    #[inline]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    /// Members shifted to 1-based labels, for display at the text boundary.
    pub fn to_one_based(self) -> Vec<usize> {
        self.iter().map(|v| v + 1).collect()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, VertexSet::with)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// A bijection on `{0, .., n-1}`; `image[v]` is where `v` goes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n).collect() }
    }

    pub fn new(image: Vec<usize>) -> Result<Self, GraphError> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || seen[x] {
                return Err(GraphError::InvalidPermutation);
            }
            seen[x] = true;
        }
        Ok(Permutation { image })
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.image
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.image.len()];
        for (v, &w) in self.image.iter().enumerate() {
            inv[w] = v;
        }
        Permutation { image: inv }
    }

    /// `self` after `first`: `v -> self(first(v))`.
    pub fn after(&self, first: &Permutation) -> Permutation {
        Permutation {
            image: first.image.iter().map(|&w| self.image[w]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(v, &w)| v == w)
    }

    pub fn map_set(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|v| self.image[v]).collect()
    }
}

/// Simple undirected graph. `adj[v]` is the open neighborhood `N(v)`.
///
/// Values are immutable once built; all constructors validate symmetry,
/// irreflexivity and range.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// # Panics
    /// If `n > MAX_ORDER`.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "graph order {n} exceeds {MAX_ORDER}");
        Graph {
            adj: vec![VertexSet::EMPTY; n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u] = adj[u].with(v);
            adj[v] = adj[v].with(u);
        }
        Ok(Graph { adj })
    }

    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        let all = VertexSet::full(n);
        for (v, &nb) in adj.iter().enumerate() {
            if !nb.is_subset(all) {
                return Err(GraphError::VertexOutOfRange {
                    vertex: (nb - all).first().unwrap_or(n),
                    n,
                });
            }
            if nb.contains(v) {
                return Err(GraphError::SelfLoop(v));
            }
            if let Some(u) = nb.iter().find(|&u| !adj[u].contains(v)) {
                return Err(GraphError::Asymmetric(v, u));
            }
        }
        Ok(Graph { adj })
    }

    pub fn complete(n: usize) -> Self {
        let all = VertexSet::full(n);
        assert!(n <= MAX_ORDER, "graph order {n} exceeds {MAX_ORDER}");
        Graph {
            adj: (0..n).map(|v| all.without(v)).collect(),
        }
    }

    /// The cycle `C_n` (`n >= 3`).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    /// The star `K_{1,leaves}` with center `0`.
    pub fn star(leaves: usize) -> Self {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("valid star")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j)));
        Graph::from_edges(a + b, edges).expect("valid complete bipartite graph")
    }

    /// `C_m × K_2`: two `m`-cycles joined by a perfect matching.
    pub fn prism(m: usize) -> Self {
        let edges = (0..m).flat_map(|i| {
            let j = (i + 1) % m;
            [(i, j), (m + i, m + j), (i, m + i)]
        });
        Graph::from_edges(2 * m, edges).expect("valid prism")
    }

    /// The Petersen graph as the Kneser graph `K(5,2)`: vertices are the
    /// 2-subsets of a 5-set in lexicographic order, adjacent iff disjoint.
    pub fn petersen() -> Self {
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
            .collect();
        let mut edges = Vec::new();
        for (i, &(a, b)) in pairs.iter().enumerate() {
            for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
                if a != c && a != d && b != c && b != d {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(pairs.len(), edges).expect("valid Kneser graph")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// `N[v] = N(v) ∪ {v}`.
    #[inline]
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// `N[S]`, the union of closed neighborhoods over `s`.
    pub fn closed_neighborhood_set(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(s, |acc, v| acc | self.adj[v])
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|s| s.len()).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(|s| s.len()).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(|s| s.len()).max()
    }

    /// The common degree if the graph is regular (and non-empty).
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.min_degree()?;
        (self.max_degree() == Some(k)).then_some(k)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// The graph with vertex `v` renamed to `perm(v)`.
    pub fn relabel(&self, perm: &Permutation) -> Graph {
        assert_eq!(perm.len(), self.order(), "permutation size mismatch");
        let mut adj = vec![VertexSet::EMPTY; self.order()];
        for (v, &nb) in self.adj.iter().enumerate() {
            adj[perm.apply(v)] = perm.map_set(nb);
        }
        Graph { adj }
    }

    /// Whether `perm` maps edges onto edges.
    pub fn is_automorphism(&self, perm: &Permutation) -> bool {
        perm.len() == self.order()
            && self
                .adj
                .iter()
                .enumerate()
                .all(|(v, &nb)| perm.map_set(nb) == self.adj[perm.apply(v)])
    }

    /// Subgraph induced on `s`, with vertices renumbered in ascending order.
    /// The returned vector maps new indices back to old ones.
    pub fn induced_subgraph(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = s.iter().collect();
        let mut new_index = [usize::MAX; 64];
        for (i, &v) in old.iter().enumerate() {
            new_index[v] = i;
        }
        let adj = old
            .iter()
            .map(|&v| (self.adj[v] & s).iter().map(|u| new_index[u]).collect())
            .collect();
        (Graph { adj }, old)
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn component_sets(&self) -> Vec<VertexSet> {
        let mut remaining = self.vertices();
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = frontier.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v]);
                frontier = next - comp;
                comp = comp | next;
            }
            remaining = remaining - comp;
            out.push(comp);
        }
        out
    }

    /// Connected components as standalone graphs.
    pub fn components(&self) -> Vec<Component> {
        self.component_sets()
            .into_iter()
            .map(|s| {
                let (graph, vertices) = self.induced_subgraph(s);
                Component { graph, vertices }
            })
            .collect()
    }

    /// Connected and non-empty.
    pub fn is_connected(&self) -> bool {
        self.component_sets().len() == 1
    }

    /// `self ∪ other` with `other`'s vertices shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.order();
        let total = n + other.order();
        if total > MAX_ORDER {
            return Err(GraphError::TooLarge(total));
        }
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|s| VertexSet::from_bits(s.bits() << n)),
        );
        Ok(Graph { adj })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.order())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// One connected component: the component as a graph of its own plus the
/// original index of each of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub graph: Graph,
    pub vertices: Vec<usize>,
}

/// Distinct vertices `u < v` with `N[u] = N[v]`, restricted to `among`.
pub fn closed_twin_in(g: &Graph, among: VertexSet) -> Option<(usize, usize)> {
    let vs: Vec<usize> = among.iter().collect();
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            if g.closed_neighborhood(u) == g.closed_neighborhood(v) {
                return Some((u, v));
            }
        }
    }
    None
}

/// Length of a shortest cycle, or `None` for a forest.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::with_capacity(n);
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}
