//! The acceptance checks as a pass/warn/fail ledger.
//!
//! Every check compares computed values with the stated ones exactly. A
//! failing check reports what was computed so the difference is visible.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::canon::are_isomorphic;
use crate::catalog::{
    align_to_reference, generate_all, generate_regular, AlignmentReport, Catalog, CatalogEntry,
    CatalogError,
};
use crate::combinatorics::binomial;
use crate::domination::{
    count_dominating, count_dominating_containing, count_dominating_ie, count_via_transitivity,
    domination_number, domination_polynomial,
};
use crate::equivalence::partition_by_polynomial;
use crate::graph::Graph;
use crate::structure::{
    check_gamma_bound, count_nondominating_5sets, d6_by_formula, infer_min_degree,
    MinDegreeInference,
};

pub const PETERSEN_POLY: [u64; 11] = [0, 0, 0, 10, 75, 192, 200, 120, 45, 10, 1];
pub const DISCONNECTED_POLY: [u64; 11] = [0, 0, 0, 36, 134, 216, 203, 120, 45, 10, 1];
pub const H_POLY: [u64; 7] = [0, 0, 9, 20, 15, 6, 1];
pub const K4_POLY: [u64; 5] = [0, 4, 6, 4, 1];
/// `C(10,6) − d(G,6)` for the 21 graphs, as value: multiplicity.
pub const D6_DEFICITS: [(u64, usize); 4] = [(7, 2), (8, 2), (9, 2), (10, 15)];
pub const D3_EQ_10_D4: [u64; 4] = [75, 85, 85, 91];
pub const D3_EQ_6_D4: [u64; 3] = [80, 80, 85];
/// γ-set counts of G1..G19.
pub const GAMMA_SET_COUNTS: [u64; 19] = [22, 12, 17, 15, 24, 10, 6, 6, 10, 10, 12, 15, 8, 22, 12, 6, 10, 16, 13];
/// γ-set count of G13 as listed, and as used later in the uniqueness argument.
pub const G13_COUNTS: (u64, u64) = (8, 7);
pub const CUBIC_COUNTS: [(usize, usize); 4] = [(4, 1), (6, 2), (8, 5), (10, 21)];
pub const CUBIC_10_CONNECTED: usize = 19;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Warn,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Warn => "WARN",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: String,
    pub status: Status,
    pub detail: String,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {:>2} {}: {}", self.status, self.id, self.title, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ledger {
    pub results: Vec<CriterionResult>,
}

impl Ledger {
    /// No check failed; warnings are allowed.
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.status != Status::Fail)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let _ = writeln!(out, "{r}");
        }
        let count = |s| self.results.iter().filter(|r| r.status == s).count();
        let _ = writeln!(
            out,
            "{} pass, {} warn, {} fail",
            count(Status::Pass),
            count(Status::Warn),
            count(Status::Fail)
        );
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularCount {
    pub order: usize,
    pub degree: usize,
    pub total: usize,
    pub connected: usize,
}

/// Everything the checks need, computed once.
#[derive(Clone, Debug)]
pub struct Context {
    /// Cubic graphs of order 10, named G1..G21.
    pub catalog: Catalog,
    pub alignment: AlignmentReport,
    /// Differences between a supplied catalog and a fresh generation.
    pub source_issue: Option<String>,
    pub regular_counts: Vec<RegularCount>,
    /// All graphs on 1 to 8 vertices up to isomorphism.
    pub small_graphs: Vec<Graph>,
}

impl Context {
    pub fn generate() -> Result<Self, CatalogError> {
        Self::build(None)
    }

    /// Uses `supplied` in place of a fresh (10,3) catalog after checking it
    /// against one.
    pub fn with_catalog(supplied: Catalog) -> Result<Self, CatalogError> {
        Self::build(Some(supplied))
    }

    fn build(supplied: Option<Catalog>) -> Result<Self, CatalogError> {
        let mut regular_counts = Vec::new();
        let mut fresh = None;
        for (order, _) in CUBIC_COUNTS {
            let c = generate_regular(order, 3)?;
            regular_counts.push(RegularCount {
                order,
                degree: 3,
                total: c.len(),
                connected: c.connected_count(),
            });
            fresh = Some(c);
        }
        let mut catalog = fresh.expect("order 10 is generated last");
        let mut alignment = align_to_reference(&mut catalog)?;
        let source_issue = supplied.and_then(|s| {
            let issue = compare_catalogs(&s, &catalog);
            if issue.is_none() {
                let mut s = s;
                alignment = align_to_reference(&mut s).expect("same graphs as the fresh catalog");
                catalog = s;
            }
            issue
        });
        let mut small_graphs = Vec::new();
        for n in 1..=8 {
            small_graphs.extend(generate_all(n)?);
        }
        Ok(Context {
            catalog,
            alignment,
            source_issue,
            regular_counts,
            small_graphs,
        })
    }

    fn named(&self, name: &str) -> Option<&CatalogEntry> {
        self.catalog.by_name(name)
    }
}

fn compare_catalogs(supplied: &Catalog, fresh: &Catalog) -> Option<String> {
    let mut out = String::new();
    for e in &fresh.entries {
        match supplied.by_graph6(&e.graph6) {
            None => {
                let _ = writeln!(out, "missing {}", e.graph6);
            }
            Some(s) if s.paper_name.is_some() && s.paper_name != e.paper_name => {
                let _ = writeln!(
                    out,
                    "{} named {} but aligns to {}",
                    e.graph6,
                    s.label(),
                    e.label()
                );
            }
            Some(_) => {}
        }
    }
    for s in &supplied.entries {
        if fresh.by_graph6(&s.graph6).is_none() {
            let _ = writeln!(out, "unexpected {}", s.graph6);
        }
    }
    (!out.is_empty()).then(|| out.trim_end().replace('\n', "; "))
}

pub const TITLES: [&str; 13] = [
    "Petersen polynomial",
    "vertex-transitive counting identity",
    "full coefficients d7..d10",
    "d6 formula and distribution",
    "d5 = 192 for G6 G7 G8 G10 G17",
    "d4 among graphs with d3 = 10",
    "d4 among graphs with d3 = 6",
    "gamma-set counts of connected graphs",
    "disconnected pair factorization",
    "equivalence classes",
    "minimum degree from the polynomial",
    "sweep agrees with inclusion-exclusion",
    "generation counts and gamma bound",
];

fn pass_if(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v
}

fn petersen_polynomial() -> (Status, String) {
    let got = domination_polynomial(&Graph::petersen()).map(|p| p.to_u64s());
    match got {
        Ok(c) => (pass_if(c == PETERSEN_POLY), format!("{c:?}")),
        Err(e) => (Status::Fail, e.to_string()),
    }
}

fn transitive_identity() -> (Status, String) {
    let p = Graph::petersen();
    let mut mismatches = Vec::new();
    for i in 1..=10 {
        match count_via_transitivity(&p, i) {
            Ok(v) if v == count_dominating(&p, i) => {}
            other => mismatches.push(format!("i={i}: {other:?}")),
        }
    }
    let dv4: Vec<u64> = (0..10)
        .map(|v| count_dominating_containing(&p, v, 4).unwrap_or(0))
        .collect();
    let ok = mismatches.is_empty() && dv4.iter().all(|&d| d == 30);
    let detail = if ok {
        "n*d_v/i = d for i in 1..10; d_v(4) = 30 at every vertex".to_string()
    } else {
        format!("mismatches {mismatches:?}; d_v(4) = {dv4:?}")
    };
    (pass_if(ok), detail)
}

fn full_top_coefficients(ctx: &Context) -> (Status, String) {
    let bad: Vec<&str> = ctx
        .catalog
        .entries
        .iter()
        .filter(|e| (7..=10).any(|i| e.d(i) != binomial(10, i)))
        .map(|e| e.label())
        .collect();
    let ok = bad.is_empty() && ctx.catalog.len() == 21;
    (pass_if(ok), format!("{} graphs checked, not full: {bad:?}", ctx.catalog.len()))
}

fn d6_distribution(ctx: &Context) -> (Status, String) {
    let mut formula_mismatch = Vec::new();
    let mut deficits: BTreeMap<u64, usize> = BTreeMap::new();
    for e in &ctx.catalog.entries {
        let direct = count_dominating(&e.graph, 6);
        match d6_by_formula(&e.graph) {
            Ok(f) if f == direct => {}
            other => formula_mismatch.push(format!("{}: {other:?} vs {direct}", e.label())),
        }
        *deficits.entry(binomial(10, 6) - direct).or_default() += 1;
    }
    let expected: BTreeMap<u64, usize> = D6_DEFICITS.into_iter().collect();
    let ok = formula_mismatch.is_empty() && deficits == expected;
    let detail = format!(
        "formula matches direct count on {}/{} graphs; C(10,6) - d6 distribution {deficits:?}, expected {expected:?}",
        ctx.catalog.len() - formula_mismatch.len(),
        ctx.catalog.len()
    );
    (pass_if(ok), detail)
}

fn d5_named(ctx: &Context) -> (Status, String) {
    let mut parts = Vec::new();
    let mut ok = true;
    for name in ["G6", "G7", "G8", "G10", "G17"] {
        let Some(e) = ctx.named(name) else {
            return (Status::Fail, format!("{name} not assigned"));
        };
        let five = count_nondominating_5sets(&e.graph);
        let via_complements = five.as_ref().map(|f| 252 - f.count).ok();
        ok &= e.d(5) == 192 && via_complements == Some(192);
        parts.push(format!("{name}={}", e.d(5)));
    }
    let total = ctx.catalog.entries.iter().filter(|e| e.d(5) == 192).count();
    (
        pass_if(ok && total >= 5),
        format!("{}; {total} graphs in all have d5 = 192", parts.join(" ")),
    )
}

fn ladder(ctx: &Context, d3: u64) -> Vec<(u64, &CatalogEntry)> {
    let mut v: Vec<(u64, &CatalogEntry)> = ctx
        .catalog
        .entries
        .iter()
        .filter(|e| e.d(3) == d3)
        .map(|e| (e.d(4), e))
        .collect();
    v.sort_by_key(|&(d4, _)| d4);
    v
}

fn ladder_10(ctx: &Context) -> (Status, String) {
    let l = ladder(ctx, 10);
    let d4: Vec<u64> = l.iter().map(|&(d, _)| d).collect();
    let owners_of_75: Vec<&&CatalogEntry> = l.iter().filter(|(d, _)| *d == 75).map(|(_, e)| e).collect();
    let petersen_owns =
        owners_of_75.len() == 1 && are_isomorphic(&owners_of_75[0].graph, &Graph::petersen());
    let ok = d4 == D3_EQ_10_D4 && petersen_owns;
    let labels: Vec<&str> = l.iter().map(|(_, e)| e.label()).collect();
    (
        pass_if(ok),
        format!(
            "d4 {d4:?} for {labels:?}, expected {D3_EQ_10_D4:?}; 75 {} the Petersen graph alone",
            if petersen_owns { "belongs to" } else { "does not belong to" }
        ),
    )
}

fn ladder_6(ctx: &Context) -> (Status, String) {
    let l = ladder(ctx, 6);
    let d4: Vec<u64> = l.iter().map(|&(d, _)| d).collect();
    let labels: Vec<&str> = l.iter().map(|(_, e)| e.label()).collect();
    (
        pass_if(d4 == D3_EQ_6_D4),
        format!("d4 {d4:?} for {labels:?}, expected {D3_EQ_6_D4:?}"),
    )
}

fn gamma_set_counts(ctx: &Context) -> (Status, String) {
    let got = sorted(
        ctx.catalog
            .entries
            .iter()
            .filter(|e| e.fingerprint.connected)
            .map(|e| e.d(3))
            .collect(),
    );
    let expected = sorted(GAMMA_SET_COUNTS.to_vec());
    let g13 = ctx.named("G13").map(|e| e.d(3));
    let g13_note = match g13 {
        Some(v) if v == G13_COUNTS.0 => format!("G13 computed {v}, agreeing with its listed sets rather than the count {}", G13_COUNTS.1),
        Some(v) if v == G13_COUNTS.1 => format!("G13 computed {v}, agreeing with the count rather than its {} listed sets", G13_COUNTS.0),
        Some(v) => format!("G13 computed {v}, matching neither {} nor {}", G13_COUNTS.0, G13_COUNTS.1),
        None => "G13 not assigned".to_string(),
    };
    let detail = format!("computed {got:?}, expected {expected:?}; {g13_note}");
    let status = if got != expected {
        Status::Fail
    } else {
        Status::Warn
    };
    (status, detail)
}

fn disconnected_pair(ctx: &Context) -> (Status, String) {
    let pair: Vec<&CatalogEntry> = ctx
        .catalog
        .entries
        .iter()
        .filter(|e| !e.fingerprint.connected)
        .collect();
    if pair.len() != 2 {
        return (Status::Fail, format!("{} disconnected graphs", pair.len()));
    }
    let k4 = Graph::complete(4);
    let mut problems = Vec::new();
    for e in &pair {
        if e.poly().to_u64s() != DISCONNECTED_POLY {
            problems.push(format!("{} has {:?}", e.label(), e.poly().to_u64s()));
        }
        let comps = e.graph.components();
        let (k4s, others): (Vec<_>, Vec<_>) = comps.iter().partition(|c| are_isomorphic(&c.graph, &k4));
        if k4s.len() != 1 || others.len() != 1 {
            problems.push(format!("{} is not H plus K4", e.label()));
            continue;
        }
        let dh = domination_polynomial(&others[0].graph).expect("six vertices");
        let dk = domination_polynomial(&k4s[0].graph).expect("four vertices");
        if dh.to_u64s() != H_POLY || dk.to_u64s() != K4_POLY || &dh.product(&dk) != e.poly() {
            problems.push(format!("{}: D(H) = {:?}, D(K4) = {:?}", e.label(), dh.to_u64s(), dk.to_u64s()));
        }
    }
    let ok = problems.is_empty();
    let detail = if ok {
        format!("both equal {DISCONNECTED_POLY:?} = D(H) * D(K4)")
    } else {
        problems.join("; ")
    };
    (pass_if(ok), detail)
}

fn classes(ctx: &Context) -> (Status, String) {
    let classes = partition_by_polynomial(&ctx.catalog.entries);
    let pairs: Vec<String> = classes
        .iter()
        .filter(|c| c.len() > 1)
        .map(|c| {
            format!(
                "{{{}}}",
                c.members.iter().map(|m| m.label()).collect::<Vec<_>>().join(", ")
            )
        })
        .collect();
    let singletons = classes.iter().filter(|c| c.len() == 1).count();
    let all_small = classes.iter().all(|c| c.len() <= 2);
    let petersen = Graph::petersen();
    let petersen_alone = classes.iter().any(|c| {
        c.len() == 1
            && ctx
                .catalog
                .by_graph6(&c.members[0].graph6)
                .is_some_and(|e| are_isomorphic(&e.graph, &petersen))
    });
    let ok = pairs.len() == 3 && singletons == 15 && all_small && petersen_alone;
    (
        pass_if(ok),
        format!(
            "{} classes: pairs {}, {singletons} singletons; Petersen {}",
            classes.len(),
            pairs.join(" "),
            if petersen_alone { "alone" } else { "not alone" }
        ),
    )
}

fn min_degree_inference(ctx: &Context) -> (Status, String) {
    let corpus: Vec<&Graph> = ctx.small_graphs.iter().filter(|g| g.order() <= 7).collect();
    let wrong: Vec<String> = corpus
        .iter()
        .filter_map(|g| {
            let p = domination_polynomial(g).ok()?;
            let inferred = infer_min_degree(&p).ok().map(|i| i.delta);
            (inferred != g.min_degree()).then(|| format!("{}: {inferred:?}", crate::graph6::encode_graph6(g)))
        })
        .collect();
    let petersen = infer_min_degree(&domination_polynomial(&Graph::petersen()).expect("order 10"));
    let expected = MinDegreeInference {
        l: 7,
        delta: 3,
        min_degree_vertex_lower_bound: 10,
    };
    let ok = wrong.is_empty() && petersen == Ok(expected);
    (
        pass_if(ok),
        format!(
            "{} graphs on 1..7 vertices, {} wrong; Petersen {:?}",
            corpus.len(),
            wrong.len(),
            petersen
        ),
    )
}

fn oracle_agreement(ctx: &Context) -> (Status, String) {
    let mut checked = 0usize;
    let mut wrong = Vec::new();
    for g in &ctx.small_graphs {
        for i in 0..=g.order() {
            checked += 1;
            let direct = count_dominating(g, i);
            if count_dominating_ie(g, i) != Ok(direct) {
                wrong.push(format!("{} i={i}", crate::graph6::encode_graph6(g)));
            }
        }
    }
    (
        pass_if(wrong.is_empty()),
        format!(
            "{} graphs on 1..8 vertices, {checked} coefficients, {} disagree {:?}",
            ctx.small_graphs.len(),
            wrong.len(),
            wrong.iter().take(5).collect::<Vec<_>>()
        ),
    )
}

fn generation(ctx: &Context) -> (Status, String) {
    let totals: Vec<(usize, usize)> = ctx.regular_counts.iter().map(|r| (r.order, r.total)).collect();
    let ten_connected = ctx
        .regular_counts
        .iter()
        .find(|r| r.order == 10)
        .map(|r| r.connected);
    let connected: Vec<&CatalogEntry> = ctx
        .catalog
        .entries
        .iter()
        .filter(|e| e.fingerprint.connected)
        .collect();
    let bound_ok = connected
        .iter()
        .all(|e| check_gamma_bound(&e.graph) == Ok(true) && domination_number(&e.graph) == 3);
    let ok = totals == CUBIC_COUNTS
        && ten_connected == Some(CUBIC_10_CONNECTED)
        && bound_ok
        && ctx.source_issue.is_none();
    let per_order: Vec<String> = ctx
        .regular_counts
        .iter()
        .map(|r| format!("n={}: {} ({} connected)", r.order, r.total, r.connected))
        .collect();
    let mut detail = format!(
        "{}; expected totals {:?}; gamma = 3 <= floor(30/8) on {} connected graphs: {}",
        per_order.join(", "),
        CUBIC_COUNTS,
        connected.len(),
        bound_ok
    );
    if let Some(issue) = &ctx.source_issue {
        let _ = write!(detail, "; supplied catalog: {issue}");
    }
    (pass_if(ok), detail)
}

/// Evaluates criterion `id` (1 to 13).
pub fn check(id: u8, ctx: &Context) -> CriterionResult {
    let (status, detail) = match id {
        1 => petersen_polynomial(),
        2 => transitive_identity(),
        3 => full_top_coefficients(ctx),
        4 => d6_distribution(ctx),
        5 => d5_named(ctx),
        6 => ladder_10(ctx),
        7 => ladder_6(ctx),
        8 => gamma_set_counts(ctx),
        9 => disconnected_pair(ctx),
        10 => classes(ctx),
        11 => min_degree_inference(ctx),
        12 => oracle_agreement(ctx),
        13 => generation(ctx),
        _ => panic!("criteria are numbered 1 to 13"),
    };
    CriterionResult {
        id,
        title: TITLES[id as usize - 1].to_string(),
        status,
        detail,
    }
}

pub fn run(ctx: &Context) -> Ledger {
    Ledger {
        results: (1..=13).map(|id| check(id, ctx)).collect(),
    }
}
