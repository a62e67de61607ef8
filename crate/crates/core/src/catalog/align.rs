//! Naming the 21 cubic graphs of order 10 G1..G21 from a reference table
//! of stated coefficients.
//!
//! The reference drawings are not machine readable, so names are assigned
//! from the stated coefficients alone. The assignment minimizes the total
//! absolute deviation from those statements with connectivity as a hard
//! constraint. Every deviation in the chosen assignment is reported, and
//! names that could go to more than one graph at the same optimal cost are
//! listed as ambiguous.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::assignment::{min_cost_assignment, FORBIDDEN};
use super::{Catalog, CatalogEntry, CatalogError};

pub const REFERENCE_NAMES: [&str; 21] = [
    "G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "G9", "G10", "G11", "G12", "G13", "G14",
    "G15", "G16", "G17", "G18", "G19", "G20", "G21",
];

/// Stated coefficients of one named graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ReferenceEntry {
    pub name: &'static str,
    pub connected: bool,
    pub d3: u64,
    pub d4: Option<u64>,
    pub d5: Option<u64>,
    pub d6: u64,
    /// Full coefficient list `d(G,0)..d(G,10)` where one is printed.
    pub poly: Option<[u64; 11]>,
}

const PETERSEN: [u64; 11] = [0, 0, 0, 10, 75, 192, 200, 120, 45, 10, 1];
const PAIR_85: [u64; 11] = [0, 0, 0, 10, 85, 192, 200, 120, 45, 10, 1];
const DISCONNECTED: [u64; 11] = [0, 0, 0, 36, 134, 216, 203, 120, 45, 10, 1];

const fn entry(name: &'static str, d3: u64, d4: Option<u64>, d5: Option<u64>, d6: u64) -> ReferenceEntry {
    ReferenceEntry {
        name,
        connected: true,
        d3,
        d4,
        d5,
        d6,
        poly: None,
    }
}

const fn full(name: &'static str, connected: bool, poly: [u64; 11]) -> ReferenceEntry {
    ReferenceEntry {
        name,
        connected,
        d3: poly[3],
        d4: Some(poly[4]),
        d5: Some(poly[5]),
        d6: poly[6],
        poly: Some(poly),
    }
}

const REFERENCE: [ReferenceEntry; 21] = [
    entry("G1", 22, None, None, 202),
    entry("G2", 12, None, None, 200),
    entry("G3", 17, None, None, 201),
    entry("G4", 15, None, None, 200),
    entry("G5", 24, None, None, 201),
    full("G6", true, PAIR_85),
    entry("G7", 6, Some(80), Some(192), 200),
    entry("G8", 6, Some(80), Some(192), 200),
    entry("G9", 10, Some(91), None, 200),
    full("G10", true, PAIR_85),
    entry("G11", 12, None, None, 200),
    entry("G12", 15, None, None, 200),
    entry("G13", 8, None, None, 200),
    entry("G14", 22, None, None, 200),
    entry("G15", 12, None, None, 200),
    entry("G16", 6, Some(85), None, 200),
    full("G17", true, PETERSEN),
    entry("G18", 16, None, None, 202),
    entry("G19", 13, None, None, 200),
    full("G20", false, DISCONNECTED),
    full("G21", false, DISCONNECTED),
];

/// Stated coefficients for G1 through G21.
pub fn reference_table() -> &'static [ReferenceEntry; 21] {
    &REFERENCE
}

/// One stated coefficient that the assigned graph does not have.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub name: String,
    pub graph6: String,
    /// `d<i>` for the coefficient of `x^i`.
    pub field: String,
    pub stated: u64,
    pub computed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlignmentReport {
    /// Total absolute deviation of the chosen assignment.
    pub cost: u64,
    /// Name to graph6, in name order.
    pub assignments: Vec<(String, String)>,
    pub discrepancies: Vec<Discrepancy>,
    /// Names that reach the optimum with more than one graph, mapped to
    /// all such graphs.
    pub alternatives: BTreeMap<String, Vec<String>>,
}

impl AlignmentReport {
    pub fn is_exact(&self) -> bool {
        self.discrepancies.is_empty()
    }

    pub fn is_ambiguous(&self, name: &str) -> bool {
        self.alternatives.contains_key(name)
    }

    pub fn graph6_of(&self, name: &str) -> Option<&str> {
        self.assignments
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, g)| g.as_str())
    }

    /// One line per discrepancy.
    pub fn diff(&self) -> String {
        self.discrepancies.iter().fold(String::new(), |mut out, d| {
            let _ = writeln!(
                out,
                "{} ({}): {} stated {} computed {}",
                d.name, d.graph6, d.field, d.stated, d.computed
            );
            out
        })
    }

    pub fn ensure_exact(&self) -> Result<(), CatalogError> {
        if self.is_exact() {
            Ok(())
        } else {
            Err(CatalogError::AlignmentInexact(self.diff()))
        }
    }
}

fn stated_fields(r: &ReferenceEntry) -> Vec<(usize, u64)> {
    match r.poly {
        Some(p) => p.iter().copied().enumerate().collect(),
        None => [(3, Some(r.d3)), (4, r.d4), (5, r.d5), (6, Some(r.d6))]
            .into_iter()
            .filter_map(|(i, v)| v.map(|v| (i, v)))
            .collect(),
    }
}

fn deviation(r: &ReferenceEntry, e: &CatalogEntry) -> i64 {
    if r.connected != e.fingerprint.connected {
        return FORBIDDEN;
    }
    stated_fields(r)
        .into_iter()
        .map(|(i, v)| v.abs_diff(e.d(i)) as i64)
        .sum()
}

/// Optimal cost over the rows and columns not yet used.
fn residual_optimum(cost: &[Vec<i64>], rows_used: &[bool], cols_used: &[bool]) -> i64 {
    let cols: Vec<usize> = (0..cols_used.len()).filter(|&j| !cols_used[j]).collect();
    let sub: Vec<Vec<i64>> = (0..rows_used.len())
        .filter(|&i| !rows_used[i])
        .map(|i| cols.iter().map(|&j| cost[i][j]).collect())
        .collect();
    min_cost_assignment(&sub).0
}

/// Assigns G1..G21 to the entries of the cubic order-10 catalog, replacing
/// any names already present.
///
/// Among optimal assignments the one chosen is lexicographically first:
/// G1 takes the earliest entry (by graph6) that still allows an optimum,
/// then G2, and so on.
pub fn align_to_reference(c: &mut Catalog) -> Result<AlignmentReport, CatalogError> {
    let shape_ok = c.len() == REFERENCE.len()
        && c
            .entries
            .iter()
            .all(|e| e.graph.order() == 10 && e.graph.regular_degree() == Some(3));
    if !shape_ok {
        return Err(CatalogError::AlignmentShape(format!(
            "got {} entries with orders {:?}",
            c.len(),
            c.entries.iter().map(|e| e.graph.order()).collect::<Vec<_>>()
        )));
    }
    let cost: Vec<Vec<i64>> = REFERENCE
        .iter()
        .map(|r| c.entries.iter().map(|e| deviation(r, e)).collect())
        .collect();
    let (optimum, _) = min_cost_assignment(&cost);
    if optimum >= FORBIDDEN {
        let stated = REFERENCE.iter().filter(|r| !r.connected).count();
        return Err(CatalogError::AlignmentInfeasible(format!(
            "{} disconnected names but {} disconnected graphs",
            stated,
            c.len() - c.connected_count()
        )));
    }

    let n = REFERENCE.len();
    let reaches = |i: usize, j: usize, fixed_cost: i64, rows: &mut Vec<bool>, cols: &mut Vec<bool>| {
        rows[i] = true;
        cols[j] = true;
        let ok = fixed_cost + cost[i][j] + residual_optimum(&cost, rows, cols) == optimum;
        rows[i] = false;
        cols[j] = false;
        ok
    };

    let mut alternatives = BTreeMap::new();
    for (i, r) in REFERENCE.iter().enumerate() {
        let options: Vec<String> = (0..n)
            .filter(|&j| reaches(i, j, 0, &mut vec![false; n], &mut vec![false; n]))
            .map(|j| c.entries[j].graph6.clone())
            .collect();
        if options.len() > 1 {
            alternatives.insert(r.name.to_string(), options);
        }
    }

    let mut rows = vec![false; n];
    let mut cols = vec![false; n];
    let mut fixed_cost = 0;
    let mut chosen = vec![0; n];
    for i in 0..n {
        let j = (0..n)
            .find(|&j| !cols[j] && reaches(i, j, fixed_cost, &mut rows, &mut cols))
            .expect("an optimal completion always exists");
        rows[i] = true;
        cols[j] = true;
        fixed_cost += cost[i][j];
        chosen[i] = j;
    }

    for e in &mut c.entries {
        e.paper_name = None;
    }
    let mut assignments = Vec::with_capacity(n);
    let mut discrepancies = Vec::new();
    for (r, &j) in REFERENCE.iter().zip(&chosen) {
        let e = &mut c.entries[j];
        e.paper_name = Some(r.name.to_string());
        assignments.push((r.name.to_string(), e.graph6.clone()));
        for (i, stated) in stated_fields(r) {
            if e.d(i) != stated {
                discrepancies.push(Discrepancy {
                    name: r.name.to_string(),
                    graph6: e.graph6.clone(),
                    field: format!("d{i}"),
                    stated,
                    computed: e.d(i),
                });
            }
        }
    }
    Ok(AlignmentReport {
        cost: optimum as u64,
        assignments,
        discrepancies,
        alternatives,
    })
}
