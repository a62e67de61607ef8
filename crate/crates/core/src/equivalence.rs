//! Grouping graphs by domination polynomial, and catalog-relative
//! uniqueness.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::catalog::{Catalog, CatalogEntry};
use crate::polynomial::DominationPolynomial;
use crate::structure::has_closed_twins;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassMember {
    pub graph6: String,
    pub paper_name: Option<String>,
}

impl ClassMember {
    fn of(e: &CatalogEntry) -> Self {
        ClassMember {
            graph6: e.graph6.clone(),
            paper_name: e.paper_name.clone(),
        }
    }

    pub fn label(&self) -> &str {
        self.paper_name.as_deref().unwrap_or(&self.graph6)
    }
}

/// Graphs sharing one polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceClass {
    pub key: DominationPolynomial,
    /// Sorted by graph6.
    pub members: Vec<ClassMember>,
}

impl EquivalenceClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, graph6: &str) -> bool {
        self.members.iter().any(|m| m.graph6 == graph6)
    }
}

/// Sort key: γ, then d(G, γ), then the whole coefficient vector.
fn class_order(p: &DominationPolynomial) -> (usize, u64, &DominationPolynomial) {
    let gamma = p.gamma().unwrap_or(0);
    (gamma, p.coeff_u64(gamma), p)
}

/// Groups entries by exact polynomial equality. The result does not depend
/// on input order.
pub fn partition_by_polynomial(entries: &[CatalogEntry]) -> Vec<EquivalenceClass> {
    let mut groups: BTreeMap<&DominationPolynomial, Vec<&CatalogEntry>> = BTreeMap::new();
    for e in entries {
        groups.entry(e.poly()).or_default().push(e);
    }
    let mut classes: Vec<EquivalenceClass> = groups
        .into_iter()
        .map(|(key, mut members)| {
            members.sort_by(|a, b| a.graph6.cmp(&b.graph6));
            EquivalenceClass {
                key: key.clone(),
                members: members.into_iter().map(ClassMember::of).collect(),
            }
        })
        .collect();
    classes.sort_by(|a, b| class_order(&a.key).cmp(&class_order(&b.key)));
    classes
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Uniqueness {
    pub unique: bool,
    /// Other entries with the same polynomial.
    pub witnesses: Vec<ClassMember>,
}

/// Whether no other entry of `c` shares the polynomial of `entry`.
pub fn is_unique_within(entry: &CatalogEntry, c: &Catalog) -> Uniqueness {
    let witnesses: Vec<ClassMember> = c
        .entries
        .iter()
        .filter(|o| o.graph6 != entry.graph6 && o.poly() == entry.poly())
        .map(ClassMember::of)
        .collect();
    Uniqueness {
        unique: witnesses.is_empty(),
        witnesses,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TiedGraph {
    pub member: ClassMember,
    /// `d(G, γ+1)`.
    pub next: u64,
}

/// The two-step comparison: first the number of γ-sets, then the number of
/// dominating sets of size γ+1, then any later coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniquenessArgument {
    pub subject: ClassMember,
    pub gamma: usize,
    /// `d(G, γ)`.
    pub gamma_sets: u64,
    /// Every entry (the subject included) with the same γ and `d(G, γ)`.
    pub ties: Vec<TiedGraph>,
    /// Whether `d(G, γ+1)` alone separates the subject from the ties.
    pub separated_by_next: bool,
    /// Smallest `i` such that coefficients up to `i` separate the subject
    /// from every other entry; absent when some entry has the same
    /// polynomial.
    pub separating_index: Option<usize>,
    /// A closed-twin pair of the subject, which rules out transferring
    /// regularity to every graph with the same polynomial.
    pub closed_twins: Option<(usize, usize)>,
    /// The subject is regular and twin free, so any graph sharing its
    /// polynomial is regular of the same degree and therefore lies in a
    /// complete regular catalog.
    pub regularity_transfers: bool,
    pub uniqueness: Uniqueness,
}

fn first_difference(a: &DominationPolynomial, b: &DominationPolynomial) -> Option<usize> {
    if a.order() != b.order() {
        return Some(0);
    }
    (0..=a.order()).find(|&i| a.coeff(i) != b.coeff(i))
}

pub fn uniqueness_argument(entry: &CatalogEntry, c: &Catalog) -> UniquenessArgument {
    let p = entry.poly();
    let gamma = p.gamma().unwrap_or(0);
    let gamma_sets = p.coeff_u64(gamma);
    let ties: Vec<TiedGraph> = c
        .entries
        .iter()
        .filter(|o| o.poly().gamma() == p.gamma() && o.d(gamma) == gamma_sets)
        .map(|o| TiedGraph {
            member: ClassMember::of(o),
            next: o.d(gamma + 1),
        })
        .collect();
    let separated_by_next = ties
        .iter()
        .filter(|t| t.member.graph6 != entry.graph6)
        .all(|t| t.next != entry.d(gamma + 1));
    let separating_index = c
        .entries
        .iter()
        .filter(|o| o.graph6 != entry.graph6)
        .map(|o| first_difference(p, o.poly()))
        .try_fold(0, |acc, d| d.map(|d| acc.max(d)));
    let closed_twins = has_closed_twins(&entry.graph);
    UniquenessArgument {
        subject: ClassMember::of(entry),
        gamma,
        gamma_sets,
        ties,
        separated_by_next,
        separating_index,
        closed_twins,
        regularity_transfers: closed_twins.is_none() && entry.graph.regular_degree().is_some(),
        uniqueness: is_unique_within(entry, c),
    }
}

/// Plain-text table: one row per class.
pub fn render_table(classes: &[EquivalenceClass]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:<5} {:<4} {:<5} {:<8} {:<24} polynomial", "class", "size", "gamma", "d(gamma)", "members");
    for (i, class) in classes.iter().enumerate() {
        let gamma = class.key.gamma().unwrap_or(0);
        let members = class.members.iter().map(|m| m.label()).collect::<Vec<_>>().join(", ");
        let _ = writeln!(
            out,
            "{:<5} {:<4} {:<5} {:<8} {:<24} {}",
            i + 1,
            class.len(),
            gamma,
            class.key.coeff_u64(gamma),
            members,
            class.key
        );
    }
    let sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
    let _ = writeln!(
        out,
        "{} graphs, {} classes, {} singletons",
        sizes.iter().sum::<usize>(),
        classes.len(),
        sizes.iter().filter(|&&s| s == 1).count()
    );
    out
}
