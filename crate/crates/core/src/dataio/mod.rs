//! Family, K3 and edge tables.
//!
//! Family and K3 tables hold one record per line as `key=value` fields;
//! `#` starts a comment and values containing spaces are double-quoted.
//!
//! ```text
//! # full record: presentation plus optional ingested invariants
//! id=23 dim=3 format=hypersurface weights=4,5,6,7,23 degrees=46 basket=3*(1/2),(1/4),(2/5),(1/6),(2/7) degree=1/420 pg=0 chi=1
//! # node stub: no presentation, only what the web needs
//! id=19 codim=1 pg=1
//! ```
//!
//! Keys of a full record: `id`, `label`, `dim`, `format`
//! (`hypersurface`, `ci`, `pfaffian`), `weights`, `degrees` (Pfaffian degrees
//! for `pfaffian`), `basket` (`none` or `m*(a/r)` items), and the ingested
//! invariants `degree` (`K^3` or `A^2`), `pg`, `chi`, `kc2`, `euler`, `codim`.
//! Ingested invariants are checked against the presentation on load.
//!
//! Edge tables hold `tail head kind [k3=ID] [note=TEXT]` per line, with kinds
//! `k3-typeI`, `k3-typeII1`, `k3-numerical`, `non-k3` and `unknown`.

mod record;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::Path;

use crate::families::{series_degree, Basket, CachedInvariants, Family, Format, WeightSystem};
use crate::rr::{extract_k3_invariants, extract_threefold_invariants};
use crate::series::Rational;
use crate::web::{EdgeKind, NodeInfo, WebEdge, WebGraph};

#[derive(Debug, thiserror::Error)]
pub enum DataError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: family {id}: {check}")]
    Validation { line: usize, id: String, check: String },
    #[error("line {line}: duplicate id {id}")]
    DuplicateId { line: usize, id: u32 },
    #[error("line {line}: unresolved id {id}")]
    UnresolvedId { line: usize, id: u32 },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// A web node known only by id: what the web needs without a
/// presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeStub {
    pub id: u32,
    pub codim: Option<u8>,
    pub p_g: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FamilyTable {
    pub families: Vec<Family>,
    pub stubs: Vec<NodeStub>,
}

impl FamilyTable {
    pub fn get(&self, id: u32) -> Option<&Family> {
        self.families.iter().find(|f| f.id == Some(id))
    }

    pub fn contains_id(&self, id: u32) -> bool {
        self.get(id).is_some() || self.stubs.iter().any(|s| s.id == id)
    }

    pub fn ids(&self) -> BTreeSet<u32> {
        self.families
            .iter()
            .filter_map(|f| f.id)
            .chain(self.stubs.iter().map(|s| s.id))
            .collect()
    }

    /// Node data for every record: codimension and `p_g`, derived for full
    /// records.
    pub fn node_infos(&self) -> BTreeMap<u32, NodeInfo> {
        let mut out = BTreeMap::new();
        for f in &self.families {
            let Some(id) = f.id else { continue };
            let p_g = f
                .hilbert_series()
                .ok()
                .and_then(|p| p.expand(1).ok())
                .and_then(|s| s.to_integers())
                .and_then(|c| u64::try_from(c[1]).ok());
            out.insert(
                id,
                NodeInfo {
                    codim: Some(f.codimension() as u8),
                    p_g,
                    label: Some(f.label.clone()),
                },
            );
        }
        for s in &self.stubs {
            out.insert(
                s.id,
                NodeInfo {
                    codim: s.codim,
                    p_g: s.p_g,
                    label: None,
                },
            );
        }
        out
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> DataError {
    DataError::Parse {
        line,
        message: message.into(),
    }
}

fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, record::strip_comment(l).trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_rational(s: &str) -> Option<Rational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse().ok()?, d.trim().parse().ok()?),
        None => (s.trim().parse().ok()?, num::BigInt::from(1)),
    };
    if d == num::BigInt::from(0) {
        return None;
    }
    Some(Rational::new(n, d))
}

fn parse_u64_list(s: &str) -> Option<Vec<u64>> {
    s.split(',').map(|x| x.trim().parse().ok()).collect()
}

fn parse_record(
    line: usize,
    text: &str,
    dimension: Option<u32>,
    check: fn(&Family) -> Result<(), String>,
) -> Result<Result<Family, NodeStub>, DataError> {
    let tokens = record::tokenize(text).map_err(|m| parse_err(line, m))?;
    let fields = record::fields(&tokens).map_err(|m| parse_err(line, m))?;
    let map: BTreeMap<&str, &str> = fields.iter().map(|(k, v)| (k.as_str(), v.as_str())).collect();
    let known = [
        "id", "label", "dim", "format", "weights", "degrees", "basket", "degree", "pg", "chi", "kc2", "euler", "codim",
    ];
    if let Some(k) = map.keys().find(|k| !known.contains(k)) {
        return Err(parse_err(line, format!("unknown key {k:?}")));
    }
    let bad = |key: &str, v: &str| parse_err(line, format!("bad value for {key}: {v:?}"));
    let id: u32 = match map.get("id") {
        Some(v) => v.parse().map_err(|_| bad("id", v))?,
        None => return Err(parse_err(line, "missing id")),
    };
    let int_field = |key: &str| -> Result<Option<i64>, DataError> {
        map.get(key)
            .map(|v| v.parse::<i64>().map_err(|_| bad(key, v)))
            .transpose()
    };
    let codim = int_field("codim")?
        .map(|c| u8::try_from(c).map_err(|_| bad("codim", map["codim"])))
        .transpose()?;
    let p_g = int_field("pg")?
        .map(|c| u64::try_from(c).map_err(|_| bad("pg", map["pg"])))
        .transpose()?;
    let Some(weights) = map.get("weights") else {
        if let Some(k) = ["label", "format", "degrees", "basket", "degree", "chi", "kc2", "euler"]
            .iter()
            .find(|k| map.contains_key(**k))
        {
            return Err(parse_err(line, format!("{k} given without weights")));
        }
        return Ok(Err(NodeStub { id, codim, p_g }));
    };
    let weights = WeightSystem::new(parse_u64_list(weights).ok_or_else(|| bad("weights", weights))?)
        .map_err(|e| parse_err(line, e.to_string()))?;
    let degrees = map.get("degrees").ok_or_else(|| parse_err(line, "missing degrees"))?;
    let degrees = parse_u64_list(degrees).ok_or_else(|| bad("degrees", degrees))?;
    let dim = match (int_field("dim")?, dimension) {
        (Some(d), _) => u32::try_from(d).map_err(|_| bad("dim", map["dim"]))?,
        (None, Some(d)) => d,
        (None, None) => return Err(parse_err(line, "missing dim")),
    };
    let format = match map.get("format") {
        Some(v) => v.parse::<Format>().map_err(|e| parse_err(line, e.to_string()))?,
        None if degrees.len() == 1 => Format::Hypersurface,
        None => Format::CompleteIntersection,
    };
    let basket: Basket = map
        .get("basket")
        .map(|v| v.parse())
        .transpose()
        .map_err(|e: crate::families::FamilyError| parse_err(line, e.to_string()))?
        .unwrap_or_default();
    let rational_field = |key: &str| -> Result<Option<Rational>, DataError> {
        map.get(key)
            .map(|v| parse_rational(v).ok_or_else(|| bad(key, v)))
            .transpose()
    };
    let cached = CachedInvariants {
        degree: rational_field("degree")?,
        chi: int_field("chi")?,
        p_g,
        kc2: rational_field("kc2")?,
        euler: int_field("euler")?,
    };
    let mut f = Family {
        id: Some(id),
        label: String::new(),
        ambient: weights,
        format,
        equation_degrees: degrees,
        dimension: dim,
        basket,
        cached,
    };
    f.label = match map.get("label") {
        Some(l) => l.to_string(),
        None => f.default_label(),
    };
    let invalid = |check: String| DataError::Validation {
        line,
        id: id.to_string(),
        check,
    };
    if let Some(c) = codim {
        if c as usize != f.codimension() {
            return Err(invalid(format!(
                "codim {c} but the presentation has codimension {}",
                f.codimension()
            )));
        }
    }
    check(&f).map_err(invalid)?;
    Ok(Ok(f))
}

/// Presentation checks plus agreement of ingested and derived invariants.
pub fn validate_family(f: &Family) -> Result<(), String> {
    f.validate().map_err(|e| e.to_string())?;
    let p = f.hilbert_series().map_err(|e| e.to_string())?;
    let derived = series_degree(&p, f.dimension).ok_or("Hilbert series has the wrong pole order at 1")?;
    if let Some(d) = &f.cached.degree {
        if *d != derived {
            return Err(format!("ingested degree {d} conflicts with derived {derived}"));
        }
    }
    let head = p.expand(1).map_err(|e| e.to_string())?;
    let c1 = &head.coefficients()[1];
    if let Some(pg) = f.cached.p_g {
        if Rational::from_integer(pg.into()) != *c1 {
            return Err(format!("ingested pg {pg} conflicts with derived {c1}"));
        }
    }
    match f.dimension {
        3 => {
            let inv = extract_threefold_invariants(&p, &f.basket)
                .map_err(|e| format!("basket {} does not fit the Hilbert series: {e}", f.basket))?;
            if let Some(chi) = f.cached.chi {
                if chi != inv.chi {
                    return Err(format!("ingested chi {chi} conflicts with derived {}", inv.chi));
                }
            }
        }
        _ => {
            extract_k3_invariants(&p, &f.basket)
                .map_err(|e| format!("basket {} does not fit the Hilbert series: {e}", f.basket))?;
        }
    }
    Ok(())
}

/// One record given inline, e.g. `weights=1,1,1,1,1 degrees=6`. Only the
/// presentation is checked; `id` defaults to 0 and `dim` to 3.
pub fn parse_presentation(text: &str) -> Result<Family, DataError> {
    let text = if text.split_whitespace().any(|t| t.starts_with("id=")) {
        text.to_string()
    } else {
        format!("id=0 {text}")
    };
    match parse_record(1, &text, Some(3), |f| f.validate().map_err(|e| e.to_string()))? {
        Ok(mut f) => {
            if f.id == Some(0) {
                f.id = None;
            }
            Ok(f)
        }
        Err(_) => Err(parse_err(1, "missing weights")),
    }
}

fn parse_table(text: &str, dimension: Option<u32>) -> Result<FamilyTable, DataError> {
    let mut table = FamilyTable::default();
    let mut seen = BTreeSet::new();
    for (line, l) in lines(text) {
        let rec = parse_record(line, l, dimension, validate_family)?;
        let id = match &rec {
            Ok(f) => f.id.unwrap_or_default(),
            Err(s) => s.id,
        };
        if !seen.insert(id) {
            return Err(DataError::DuplicateId { line, id });
        }
        match rec {
            Ok(f) => table.families.push(f),
            Err(s) => table.stubs.push(s),
        }
    }
    Ok(table)
}

/// Parses and validates a table of canonical 3-folds.
pub fn parse_families(text: &str) -> Result<FamilyTable, DataError> {
    let table = parse_table(text, Some(3))?;
    check_dimension(text, &table, 3)?;
    Ok(table)
}

/// Parses and validates a table of K3 surfaces; stubs are not allowed.
pub fn parse_k3s(text: &str) -> Result<FamilyTable, DataError> {
    let table = parse_table(text, Some(2))?;
    if let Some(s) = table.stubs.first() {
        return Err(DataError::Validation {
            line: line_of(text, s.id),
            id: s.id.to_string(),
            check: "K3 records need a presentation".into(),
        });
    }
    check_dimension(text, &table, 2)?;
    Ok(table)
}

fn check_dimension(text: &str, table: &FamilyTable, dim: u32) -> Result<(), DataError> {
    match table.families.iter().find(|f| f.dimension != dim) {
        Some(f) => {
            let id = f.id.unwrap_or_default();
            Err(DataError::Validation {
                line: line_of(text, id),
                id: id.to_string(),
                check: format!("dimension {} in a table of dimension {dim}", f.dimension),
            })
        }
        None => Ok(()),
    }
}

fn line_of(text: &str, id: u32) -> usize {
    let needle = format!("id={id}");
    lines(text)
        .find(|(_, l)| l.split_whitespace().any(|t| t == needle))
        .map(|(n, _)| n)
        .unwrap_or(0)
}

fn read(path: &Path) -> Result<String, DataError> {
    std::fs::read_to_string(path).map_err(|source| DataError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_families(path: &Path) -> Result<FamilyTable, DataError> {
    parse_families(&read(path)?)
}

pub fn load_k3s(path: &Path) -> Result<FamilyTable, DataError> {
    parse_k3s(&read(path)?)
}

/// Canonical text of a table: full records, then stubs, each in file order.
pub fn save_table(table: &FamilyTable) -> String {
    let mut out = String::new();
    for f in &table.families {
        let mut fields: Vec<(&str, String)> = Vec::new();
        if let Some(id) = f.id {
            fields.push(("id", id.to_string()));
        }
        fields.push(("label", f.label.clone()));
        fields.push(("dim", f.dimension.to_string()));
        fields.push(("format", f.format.to_string()));
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        fields.push(("weights", join(f.ambient.weights())));
        fields.push(("degrees", join(&f.equation_degrees)));
        fields.push(("basket", f.basket.to_string()));
        let c = &f.cached;
        if let Some(d) = &c.degree {
            fields.push(("degree", d.to_string()));
        }
        if let Some(v) = c.p_g {
            fields.push(("pg", v.to_string()));
        }
        if let Some(v) = c.chi {
            fields.push(("chi", v.to_string()));
        }
        if let Some(v) = &c.kc2 {
            fields.push(("kc2", v.to_string()));
        }
        if let Some(v) = c.euler {
            fields.push(("euler", v.to_string()));
        }
        let _ = writeln!(out, "{}", record::render(&fields));
    }
    for s in &table.stubs {
        let mut fields: Vec<(&str, String)> = vec![("id", s.id.to_string())];
        if let Some(c) = s.codim {
            fields.push(("codim", c.to_string()));
        }
        if let Some(p) = s.p_g {
            fields.push(("pg", p.to_string()));
        }
        let _ = writeln!(out, "{}", record::render(&fields));
    }
    out
}

/// Parses an edge table; every endpoint must be a node of `table`.
pub fn parse_edges(text: &str, table: &FamilyTable) -> Result<Vec<WebEdge>, DataError> {
    let mut out = Vec::new();
    for (line, l) in lines(text) {
        let tokens = record::tokenize(l).map_err(|m| parse_err(line, m))?;
        let [tail, head, kind, rest @ ..] = &tokens[..] else {
            return Err(parse_err(line, "expected: tail head kind [k3=ID] [note=TEXT]"));
        };
        let id = |s: &str| {
            s.parse::<u32>()
                .map_err(|_| parse_err(line, format!("bad node id {s:?}")))
        };
        let (tail, head) = (id(tail)?, id(head)?);
        let kind: EdgeKind = kind
            .parse()
            .map_err(|e: crate::web::WebError| parse_err(line, e.to_string()))?;
        for n in [tail, head] {
            if !table.contains_id(n) {
                return Err(DataError::UnresolvedId { line, id: n });
            }
        }
        if tail == head {
            return Err(parse_err(line, "edge is a loop"));
        }
        let mut e = WebEdge::new(tail, head, kind);
        for (k, v) in record::fields(rest).map_err(|m| parse_err(line, m))? {
            match k.as_str() {
                "k3" => e.k3_ref = Some(v.parse().map_err(|_| parse_err(line, format!("bad k3 id {v:?}")))?),
                "note" => e.annotation = v,
                other => return Err(parse_err(line, format!("unknown key {other:?}"))),
            }
        }
        out.push(e);
    }
    Ok(out)
}

pub fn load_edges(path: &Path, table: &FamilyTable) -> Result<Vec<WebEdge>, DataError> {
    parse_edges(&read(path)?, table)
}

pub fn save_edges(edges: &[WebEdge]) -> String {
    let mut out = String::new();
    for e in edges {
        let _ = write!(out, "{} {} {}", e.tail, e.head, e.kind);
        if let Some(k) = e.k3_ref {
            let _ = write!(out, " k3={k}");
        }
        if !e.annotation.is_empty() {
            let _ = write!(out, " {}", record::render(&[("note", e.annotation.clone())]));
        }
        out.push('\n');
    }
    out
}

/// The web on every node of `table` with the given edges.
pub fn build_web(table: &FamilyTable, edges: &[WebEdge]) -> WebGraph {
    let mut g = WebGraph::new();
    for (id, info) in table.node_infos() {
        g.add_node(id, info);
    }
    for e in edges {
        g.add_edge(e.clone()).expect("edges were resolved against the table");
    }
    g
}

/// `(tail, head)` pairs of numerical-only edges, for the transition search.
pub fn numerical_pairs(edges: &[WebEdge]) -> BTreeSet<(u32, u32)> {
    edges
        .iter()
        .filter(|e| e.kind == EdgeKind::K3Numerical)
        .map(|e| (e.tail, e.head))
        .collect()
}

pub const SEED_FAMILIES: &str = include_str!("../../data/families.txt");
pub const SEED_K3S: &str = include_str!("../../data/k3s.txt");
pub const SEED_EDGES: &str = include_str!("../../data/edges.txt");

/// Tables and edges, loaded together.
#[derive(Clone, Debug)]
pub struct Dataset {
    pub families: FamilyTable,
    pub k3s: FamilyTable,
    pub edges: Vec<WebEdge>,
}

impl Dataset {
    pub fn seed() -> Self {
        Self::parse(SEED_FAMILIES, SEED_K3S, SEED_EDGES).expect("seed data is valid")
    }

    pub fn parse(families: &str, k3s: &str, edges: &str) -> Result<Self, DataError> {
        let families = parse_families(families)?;
        let k3s = parse_k3s(k3s)?;
        let edges = parse_edges(edges, &families)?;
        Ok(Self { families, k3s, edges })
    }

    /// `families.txt`, `k3s.txt` and `edges.txt` in `dir`.
    pub fn load(dir: &Path) -> Result<Self, DataError> {
        Self::parse(
            &read(&dir.join("families.txt"))?,
            &read(&dir.join("k3s.txt"))?,
            &read(&dir.join("edges.txt"))?,
        )
    }

    pub fn web(&self) -> WebGraph {
        build_web(&self.families, &self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ratio;

    #[test]
    fn x46_record() {
        let t = parse_families("id=23 weights=4,5,6,7,23 degrees=46 basket=3*(1/2),(1/4),(2/5),(1/6),(2/7)").unwrap();
        let f = t.get(23).unwrap();
        assert_eq!(series_degree(&f.hilbert_series().unwrap(), 3), Some(ratio(1, 420)));
    }

    #[test]
    fn validation_errors() {
        let e = parse_families("id=1 weights=1,1,2,2 degrees=6 dim=3").unwrap_err();
        assert!(matches!(&e, DataError::Validation { line: 1, check, .. } if check.contains("dimension mismatch")));
        let e = parse_families("# x6\nid=1 weights=1,1,1,1,1 degrees=6 degree=1").unwrap_err();
        assert!(matches!(&e, DataError::Validation { line: 2, check, .. } if check.contains("conflicts")));
        let e = parse_families("id=2 weights=1,1,1,1,2 degrees=7").unwrap_err();
        assert!(matches!(&e, DataError::Validation { check, .. } if check.contains("does not fit")));
        let e = parse_families("id=1 codim=1\nid=1 codim=1").unwrap_err();
        assert!(matches!(e, DataError::DuplicateId { line: 2, id: 1 }));
        assert!(matches!(
            parse_families("id=1 colour=red"),
            Err(DataError::Parse { .. })
        ));
    }

    #[test]
    fn inline_presentation() {
        let f = parse_presentation("weights=1,1,1,1,2 degrees=7").unwrap();
        assert_eq!(f.id, None);
        assert!(f.basket.is_empty());
        let s = parse_presentation("dim=2 weights=1,1,2,2 degrees=6").unwrap();
        assert_eq!(s.label, "S_6 ⊂ P(1,1,2,2)");
        assert!(parse_presentation("weights=1,1,2,2 degrees=6").is_err());
        assert!(parse_presentation("degrees=6").is_err());
    }

    #[test]
    fn edges_resolve() {
        let t = parse_families("id=1 codim=1\nid=12 codim=1\nid=17 codim=1\nid=23 codim=1").unwrap();
        let e = parse_edges("12 17 non-k3\n17 23 k3-typeII1 note=*", &t).unwrap();
        assert_eq!(e[1].kind, EdgeKind::K3TypeII1);
        assert_eq!(e[1].annotation, "*");
        assert!(matches!(
            parse_edges("1 999 k3-typeI", &t),
            Err(DataError::UnresolvedId { id: 999, .. })
        ));
        assert!(matches!(
            parse_edges("1 12 k3-typeIII", &t),
            Err(DataError::Parse { .. })
        ));
        assert_eq!(parse_edges(&save_edges(&e), &t).unwrap(), e);
    }

    #[test]
    fn seed_loads_and_round_trips() {
        let d = Dataset::seed();
        let again = parse_families(&save_table(&d.families)).unwrap();
        assert_eq!(again, d.families);
        let k3 = parse_k3s(&save_table(&d.k3s)).unwrap();
        assert_eq!(k3, d.k3s);
        assert_eq!(parse_edges(&save_edges(&d.edges), &d.families).unwrap(), d.edges);
    }
}
