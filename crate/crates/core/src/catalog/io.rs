//! JSON-lines persistence. Every line is revalidated on load.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{infer_params, Catalog, CatalogEntry, CatalogError, REFERENCE_NAMES};
use crate::graph6::parse_graph6;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Line {
    graph6: String,
    paper_name: Option<String>,
    poly: Vec<u64>,
    girth: Option<usize>,
    t: usize,
    s: usize,
    connected: bool,
}

impl From<&CatalogEntry> for Line {
    fn from(e: &CatalogEntry) -> Self {
        Line {
            graph6: e.graph6.clone(),
            paper_name: e.paper_name.clone(),
            poly: e.fingerprint.poly.to_u64s(),
            girth: e.fingerprint.girth,
            t: e.fingerprint.t,
            s: e.fingerprint.s,
            connected: e.fingerprint.connected,
        }
    }
}

/// One JSON object per entry, newline terminated.
pub fn write_catalog(c: &Catalog) -> String {
    let mut out = String::new();
    for e in &c.entries {
        out.push_str(&serde_json::to_string(&Line::from(e)).expect("plain data serializes"));
        out.push('\n');
    }
    out
}

pub fn save_catalog(c: &Catalog, path: impl AsRef<Path>) -> Result<(), CatalogError> {
    let path = path.as_ref();
    std::fs::write(path, write_catalog(c)).map_err(|source| CatalogError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn check<T: PartialEq + std::fmt::Debug>(
    line: usize,
    field: &'static str,
    stored: T,
    computed: T,
) -> Result<(), CatalogError> {
    if stored == computed {
        Ok(())
    } else {
        Err(CatalogError::Mismatch {
            line,
            field,
            stored: format!("{stored:?}"),
            computed: format!("{computed:?}"),
        })
    }
}

/// Parses and revalidates catalog text. Graphs may be stored in any
/// labeling; entries come back canonically relabeled and sorted.
pub fn parse_catalog(text: &str) -> Result<Catalog, CatalogError> {
    let mut entries = Vec::new();
    let mut forms: HashMap<String, usize> = HashMap::new();
    let mut names: HashMap<String, usize> = HashMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let stored: Line =
            serde_json::from_str(raw).map_err(|source| CatalogError::Json { line, source })?;
        let g = parse_graph6(&stored.graph6).map_err(|source| CatalogError::Graph6 { line, source })?;
        let mut entry = CatalogEntry::new(&g)?;
        let fp = &entry.fingerprint;
        check(line, "poly", stored.poly, fp.poly.to_u64s())?;
        check(line, "girth", stored.girth, fp.girth)?;
        check(line, "t", stored.t, fp.t)?;
        check(line, "s", stored.s, fp.s)?;
        check(line, "connected", stored.connected, fp.connected)?;
        if let Some(&first) = forms.get(&entry.graph6) {
            return Err(CatalogError::DuplicateGraph { line, first });
        }
        forms.insert(entry.graph6.clone(), line);
        if let Some(name) = stored.paper_name {
            if !REFERENCE_NAMES.contains(&name.as_str()) {
                return Err(CatalogError::BadName { line, name });
            }
            if let Some(&first) = names.get(&name) {
                return Err(CatalogError::DuplicateName { line, name, first });
            }
            names.insert(name.clone(), line);
            entry.paper_name = Some(name);
        }
        entries.push(entry);
    }
    entries.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    Ok(Catalog {
        params: infer_params(&entries),
        entries,
    })
}

pub fn load_catalog(path: impl AsRef<Path>) -> Result<Catalog, CatalogError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| CatalogError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_catalog(&text)
}

/// Plain graph6, one graph per line.
pub fn export_graph6(c: &Catalog) -> String {
    c.entries.iter().fold(String::new(), |mut out, e| {
        let _ = writeln!(out, "{}", e.graph6);
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::graph6::encode_graph6;

    fn sample() -> Catalog {
        let mut c = Catalog::from_graphs(&[Graph::complete(4), Graph::prism(3)]).unwrap();
        c.entries[0].paper_name = Some("G20".into());
        c
    }

    #[test]
    fn round_trip() {
        let c = sample();
        let text = write_catalog(&c);
        assert_eq!(text.lines().count(), 2);
        assert_eq!(parse_catalog(&text).unwrap(), c);
    }

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.jsonl");
        let c = sample();
        save_catalog(&c, &path).unwrap();
        assert_eq!(load_catalog(&path).unwrap().entries, c.entries);
        assert!(matches!(
            load_catalog(dir.path().join("missing.jsonl")),
            Err(CatalogError::Io { .. })
        ));
    }

    #[test]
    fn accepts_any_labeling() {
        let p = Graph::petersen();
        let line = format!(
            r#"{{"graph6":"{}","paper_name":null,"poly":[0,0,0,10,75,192,200,120,45,10,1],"girth":5,"t":0,"s":0,"connected":true}}"#,
            encode_graph6(&p)
        );
        let c = parse_catalog(&line).unwrap();
        assert_eq!(c.entries[0], CatalogEntry::new(&p).unwrap());
        assert_eq!(c.params.map(|p| (p.order, p.degree)), Some((10, 3)));
    }

    #[test]
    fn rejects_corruption_with_line_numbers() {
        let good = write_catalog(&sample());
        let first = good.lines().next().unwrap();

        let wrong_poly = first.replace("\"poly\":[0,4,", "\"poly\":[0,5,");
        let err = parse_catalog(&format!("{first}\n{wrong_poly}\n")).unwrap_err();
        assert!(matches!(err, CatalogError::Mismatch { line: 2, field: "poly", .. }), "{err}");

        let err = parse_catalog(&format!("\n{first}\n{first}\n")).unwrap_err();
        assert!(matches!(err, CatalogError::DuplicateGraph { line: 3, first: 2 }), "{err}");

        let err = parse_catalog("{\"graph6\": 1}").unwrap_err();
        assert!(matches!(err, CatalogError::Json { line: 1, .. }), "{err}");

        let bad6 = first.replace("\"C~\"", "\"C!\"");
        assert!(matches!(parse_catalog(&bad6), Err(CatalogError::Graph6 { line: 1, .. })));

        let bad_name = first.replace("G20", "G22");
        assert!(matches!(parse_catalog(&bad_name), Err(CatalogError::BadName { line: 1, .. })));

        let wrong_s = first.replace("\"s\":1", "\"s\":0");
        assert!(matches!(
            parse_catalog(&wrong_s),
            Err(CatalogError::Mismatch { field: "s", .. })
        ));
    }

    #[test]
    fn graph6_export() {
        let c = sample();
        assert_eq!(export_graph6(&c), format!("C~\n{}\n", c.entries[1].graph6));
    }
}
