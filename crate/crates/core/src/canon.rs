//! Canonical labeling and automorphism orbits by individualization and
//! refinement.
//!
//! The search tree starts from the coarsest equitable refinement of the
//! (optionally colored) vertex partition. At each node the first
//! non-singleton cell is split by individualizing each of its vertices in
//! turn, and the result is refined again. Every leaf is a discrete ordered
//! partition, i.e. a relabeling of the graph; the canonical form is the
//! smallest relabeled adjacency matrix over all leaves.
//!
//! Two leaves with identical relabeled matrices differ by an automorphism.
//! Those automorphisms are used to skip children that lie in the same orbit
//! of the pointwise stabilizer of the current path, and a leaf equivalent
//! to the first leaf abandons its whole branch back to where it left the
//! first path. The automorphisms collected this way generate the full
//! group, so their orbits are the automorphism orbits.

use std::cmp::Ordering;

use crate::graph::{Graph, Permutation};
use crate::graph6::encode_graph6;

type Cells = Vec<Vec<usize>>;

/// A canonical relabeling of a graph together with the automorphisms seen
/// while searching for it.
#[derive(Clone, Debug)]
pub struct Canonical {
    /// Original vertex `v` becomes `labeling.apply(v)` in `graph`.
    pub labeling: Permutation,
    pub graph: Graph,
    /// Generators of the automorphism group (of the colored graph when a
    /// coloring was supplied).
    pub generators: Vec<Permutation>,
}

/// Split cells until every vertex in a cell sees the same number of
/// neighbors in every cell. New cells are ordered by their neighbor-count
/// signature, so the result depends only on the structure.
fn refine(g: &Graph, mut cells: Cells) -> Cells {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | (1u64 << v)))
            .collect();
        let mut out: Cells = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                out.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let nb = g.neighbors(v).bits();
                    (masks.iter().map(|&m| (nb & m).count_ones()).collect(), v)
                })
                .collect();
            keyed.sort_unstable();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    out.push(keyed[start..i].iter().map(|k| k.1).collect());
                    start = i;
                }
            }
        }
        if out.len() == cells.len() {
            return out;
        }
        cells = out;
    }
}

struct Leaf {
    code: Vec<u64>,
    order: Vec<usize>,
}

struct Search<'g> {
    g: &'g Graph,
    first: Option<Leaf>,
    first_path: Vec<usize>,
    best: Option<Leaf>,
    generators: Vec<Permutation>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph) -> Self {
        Search {
            g,
            first: None,
            first_path: Vec::new(),
            best: None,
            generators: Vec::new(),
        }
    }

    /// Returns `Some(level)` when the caller chain should unwind to the node
    /// at depth `level`.
    fn node(&mut self, cells: Cells, path: &mut Vec<usize>) -> Option<usize> {
        let cells = refine(self.g, cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(&cells, path);
        };
        let candidates = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &candidates {
            if !explored.is_empty() && self.equivalent_to_explored(v, &explored, path) {
                continue;
            }
            explored.push(v);
            let mut child = cells.clone();
            let rest: Vec<usize> = child[target].iter().copied().filter(|&w| w != v).collect();
            child[target] = vec![v];
            child.insert(target + 1, rest);
            path.push(v);
            let jump = self.node(child, path);
            path.pop();
            if let Some(level) = jump {
                if level < path.len() {
                    return Some(level);
                }
            }
        }
        None
    }

    fn equivalent_to_explored(&self, v: usize, explored: &[usize], path: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        let fixing = self
            .generators
            .iter()
            .filter(|gen| path.iter().all(|&p| gen.apply(p) == p));
        for gen in fixing {
            for x in 0..n {
                union(&mut parent, x, gen.apply(x));
            }
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == root)
    }

    fn leaf(&mut self, cells: &Cells, path: &[usize]) -> Option<usize> {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = relabeled_rows(self.g, &order);

        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                code: code.clone(),
                order: order.clone(),
            });
            self.first_path = path.to_vec();
            self.best = Some(Leaf { code, order });
            return None;
        };
        if code == first.code {
            let aut = mapping(&first.order, &order);
            self.push_generator(aut);
            return path
                .iter()
                .zip(&self.first_path)
                .position(|(a, b)| a != b);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match code.cmp(&best.code) {
            Ordering::Less => self.best = Some(Leaf { code, order }),
            Ordering::Equal => {
                let aut = mapping(&best.order, &order);
                self.push_generator(aut);
            }
            Ordering::Greater => {}
        }
        None
    }

    fn push_generator(&mut self, aut: Permutation) {
        debug_assert!(self.g.is_automorphism(&aut), "leaf mapping is not an automorphism");
        if !aut.is_identity() {
            self.generators.push(aut);
        }
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

/// Adjacency rows of `g` after moving `order[p]` to position `p`.
fn relabeled_rows(g: &Graph, order: &[usize]) -> Vec<u64> {
    let mut pos = vec![0usize; order.len()];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    order
        .iter()
        .map(|&v| g.neighbors(v).iter().fold(0u64, |m, w| m | (1u64 << pos[w])))
        .collect()
}

/// The permutation sending `from[p]` to `to[p]` for every position `p`.
fn mapping(from: &[usize], to: &[usize]) -> Permutation {
    let mut image = vec![0usize; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        image[a] = b;
    }
    Permutation::new(image).expect("leaf orders are permutations")
}

fn run(g: &Graph, initial: Cells) -> Canonical {
    let mut search = Search::new(g);
    search.node(initial, &mut Vec::new());
    let best = search.best.expect("search visits at least one leaf");
    let mut image = vec![0usize; best.order.len()];
    for (p, &v) in best.order.iter().enumerate() {
        image[v] = p;
    }
    let labeling = Permutation::new(image).expect("leaf order is a permutation");
    Canonical {
        graph: g.relabel(&labeling),
        labeling,
        generators: search.generators,
    }
}

pub fn canonical_labeling(g: &Graph) -> Canonical {
    let n = g.order();
    let initial = if n == 0 { Vec::new() } else { vec![(0..n).collect()] };
    run(g, initial)
}

/// Canonical labeling of a vertex-colored graph. Color classes are kept in
/// ascending color order, so two colored graphs get the same canonical
/// graph iff some color-preserving isomorphism maps one onto the other and
/// their color classes have matching sizes in that order.
pub fn canonical_labeling_colored(g: &Graph, colors: &[usize]) -> Canonical {
    assert_eq!(colors.len(), g.order(), "one color per vertex");
    let mut keyed: Vec<(usize, usize)> = colors.iter().copied().zip(0..).collect();
    keyed.sort_unstable();
    let mut cells: Cells = Vec::new();
    for (i, &(c, v)) in keyed.iter().enumerate() {
        if i == 0 || keyed[i - 1].0 != c {
            cells.push(Vec::new());
        }
        cells.last_mut().expect("pushed above").push(v);
    }
    run(g, cells)
}

/// A labeling-independent byte string: the graph6 encoding of the
/// canonically relabeled graph. Equal strings ⟺ isomorphic graphs.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    encode_graph6(&canonical_labeling(g).graph).into_bytes()
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && g.size() == h.size() && canonical_form(g) == canonical_form(h)
}

pub fn automorphism_generators(g: &Graph) -> Vec<Permutation> {
    canonical_labeling(g).generators
}

/// Vertex orbits of `Aut(g)`, each sorted, ordered by smallest member.
pub fn automorphism_orbits(g: &Graph) -> Vec<Vec<usize>> {
    orbits_of(g.order(), &automorphism_generators(g))
}

/// Orbits of the group generated by `generators` on `{0, .., n-1}`.
pub fn orbits_of(n: usize, generators: &[Permutation]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    for gen in generators {
        for x in 0..n {
            union(&mut parent, x, gen.apply(x));
        }
    }
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        if slot[r] == usize::MAX {
            slot[r] = orbits.len();
            orbits.push(Vec::new());
        }
        orbits[slot[r]].push(v);
    }
    orbits
}

pub fn is_vertex_transitive(g: &Graph) -> bool {
    g.order() > 0 && automorphism_orbits(g).len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeling_invariance_small() {
        let p = Graph::petersen();
        let perm = Permutation::new(vec![3, 7, 1, 9, 0, 2, 8, 4, 6, 5]).unwrap();
        assert_eq!(canonical_form(&p), canonical_form(&p.relabel(&perm)));
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        assert_ne!(canonical_form(&Graph::complete(4)), canonical_form(&Graph::cycle(4)));
        assert_ne!(
            canonical_form(&Graph::complete_bipartite(3, 3)),
            canonical_form(&Graph::prism(3))
        );
    }

    #[test]
    fn orbits_of_small_graphs() {
        assert_eq!(automorphism_orbits(&Graph::petersen()), vec![(0..10).collect::<Vec<_>>()]);
        assert_eq!(automorphism_orbits(&Graph::complete(4)).len(), 1);
        assert_eq!(automorphism_orbits(&Graph::star(3)), vec![vec![0], vec![1, 2, 3]]);
        assert_eq!(automorphism_orbits(&Graph::path(4)), vec![vec![0, 3], vec![1, 2]]);
        assert!(is_vertex_transitive(&Graph::petersen()));
        assert!(!is_vertex_transitive(&Graph::star(3)));
        assert!(!is_vertex_transitive(&Graph::empty(0)));
    }

    #[test]
    fn generators_are_automorphisms() {
        for g in [Graph::petersen(), Graph::prism(5), Graph::complete(6), Graph::empty(7)] {
            for gen in automorphism_generators(&g) {
                assert!(g.is_automorphism(&gen));
            }
        }
    }

    #[test]
    fn highly_symmetric_graphs_finish() {
        // empty and complete graphs are the worst case for the search tree
        let e = Graph::empty(30);
        assert_eq!(automorphism_orbits(&e).len(), 1);
        let k = Graph::complete(30);
        assert_eq!(canonical_labeling(&k).graph, k);
    }

    #[test]
    fn zero_and_one_vertex() {
        assert_eq!(canonical_form(&Graph::empty(0)), b"?".to_vec());
        assert_eq!(canonical_form(&Graph::empty(1)), b"@".to_vec());
    }

    #[test]
    fn colored_search_respects_colors() {
        let p4 = Graph::path(4);
        let a = canonical_labeling_colored(&p4, &[1, 0, 0, 0]).graph;
        let b = canonical_labeling_colored(&p4, &[0, 0, 0, 1]).graph;
        let c = canonical_labeling_colored(&p4, &[0, 1, 0, 0]).graph;
        // endpoints 0 and 3 are swapped by the reflection; vertex 1 is not
        let a2 = canonical_labeling_colored(&p4, &[0, 0, 0, 0]).graph;
        assert_eq!(
            canonical_labeling_colored(&p4, &[1, 0, 0, 0]).graph,
            canonical_labeling_colored(&p4, &[0, 0, 0, 1]).graph
        );
        assert_ne!(a, c);
        assert_eq!(a, b);
        assert_eq!(a2, canonical_labeling(&p4).graph);
    }
}
