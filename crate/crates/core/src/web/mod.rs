//! The web of canonical 3-folds: families as nodes, transitions as typed
//! directed edges. Connectivity is always taken on the undirected support.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};
use std::str::FromStr;

use petgraph::unionfind::UnionFind;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WebError {
    #[error("edge {0} -> {0} is a loop")]
    Loop(u32),
    #[error("edge endpoint {0} is not a registered node")]
    UnknownNode(u32),
    #[error("unknown edge kind {0:?}")]
    UnknownKind(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    K3TypeI,
    K3TypeII1,
    /// A K3 matches numerically but no construction is known.
    K3Numerical,
    NonK3,
    Unknown,
}

impl EdgeKind {
    pub const ALL: [EdgeKind; 5] = [
        EdgeKind::K3TypeI,
        EdgeKind::K3TypeII1,
        EdgeKind::K3Numerical,
        EdgeKind::NonK3,
        EdgeKind::Unknown,
    ];

    /// Edges of constructed K3 transitions.
    pub fn proven() -> BTreeSet<EdgeKind> {
        [EdgeKind::K3TypeI, EdgeKind::K3TypeII1].into_iter().collect()
    }

    fn dashed(self) -> bool {
        matches!(self, EdgeKind::K3Numerical | EdgeKind::NonK3 | EdgeKind::Unknown)
    }
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeKind::K3TypeI => "k3-typeI",
            EdgeKind::K3TypeII1 => "k3-typeII1",
            EdgeKind::K3Numerical => "k3-numerical",
            EdgeKind::NonK3 => "non-k3",
            EdgeKind::Unknown => "unknown",
        })
    }
}

impl FromStr for EdgeKind {
    type Err = WebError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        EdgeKind::ALL
            .into_iter()
            .find(|k| k.to_string() == s)
            .ok_or_else(|| WebError::UnknownKind(s.to_string()))
    }
}

/// Parses a comma separated kind list; `proven` and `all` are shorthands.
pub fn parse_kinds(s: &str) -> Result<BTreeSet<EdgeKind>, WebError> {
    let mut out = BTreeSet::new();
    for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
        match item {
            "proven" => out.extend(EdgeKind::proven()),
            "all" => out.extend(EdgeKind::ALL),
            other => {
                out.insert(other.parse()?);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct WebEdge {
    pub tail: u32,
    pub head: u32,
    pub kind: EdgeKind,
    pub k3_ref: Option<u32>,
    /// Free text such as `*` or `†`.
    pub annotation: String,
}

impl WebEdge {
    pub fn new(tail: u32, head: u32, kind: EdgeKind) -> Self {
        Self {
            tail,
            head,
            kind,
            k3_ref: None,
            annotation: String::new(),
        }
    }

    pub fn with_annotation(mut self, note: impl Into<String>) -> Self {
        self.annotation = note.into();
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NodeInfo {
    pub codim: Option<u8>,
    pub p_g: Option<u64>,
    pub label: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WebGraph {
    nodes: BTreeMap<u32, NodeInfo>,
    edges: Vec<WebEdge>,
}

impl WebGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers a node; a repeated id overwrites the earlier info.
    pub fn add_node(&mut self, id: u32, info: NodeInfo) {
        self.nodes.insert(id, info);
    }

    pub fn add_edge(&mut self, e: WebEdge) -> Result<(), WebError> {
        if e.tail == e.head {
            return Err(WebError::Loop(e.tail));
        }
        for id in [e.tail, e.head] {
            if !self.nodes.contains_key(&id) {
                return Err(WebError::UnknownNode(id));
            }
        }
        self.edges.push(e);
        Ok(())
    }

    pub fn nodes(&self) -> &BTreeMap<u32, NodeInfo> {
        &self.nodes
    }

    pub fn edges(&self) -> &[WebEdge] {
        &self.edges
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    fn edges_of<'a>(&'a self, kinds: &'a BTreeSet<EdgeKind>) -> impl Iterator<Item = &'a WebEdge> + 'a {
        self.edges.iter().filter(move |e| kinds.contains(&e.kind))
    }

    fn index(&self) -> BTreeMap<u32, usize> {
        self.nodes.keys().enumerate().map(|(i, &id)| (id, i)).collect()
    }
}

/// Connected components of the undirected graph on the given edge kinds.
/// Each component is sorted; components are ordered by smallest id.
pub fn components(g: &WebGraph, kinds: &BTreeSet<EdgeKind>) -> Vec<Vec<u32>> {
    let index = g.index();
    let mut uf = UnionFind::<usize>::new(index.len());
    for e in g.edges_of(kinds) {
        uf.union(index[&e.tail], index[&e.head]);
    }
    let mut groups: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
    for (&id, &i) in &index {
        groups.entry(uf.find_mut(i)).or_default().push(id);
    }
    let mut out: Vec<Vec<u32>> = groups.into_values().collect();
    out.sort();
    out
}

/// Kruskal over the edges sorted by `(tail, head)`: one spanning tree per
/// component.
pub fn spanning_forest(g: &WebGraph, kinds: &BTreeSet<EdgeKind>) -> Vec<WebEdge> {
    let index = g.index();
    let mut uf = UnionFind::<usize>::new(index.len());
    let mut edges: Vec<&WebEdge> = g.edges_of(kinds).collect();
    edges.sort_by_key(|e| (e.tail, e.head, e.kind));
    edges
        .into_iter()
        .filter(|e| uf.union(index[&e.tail], index[&e.head]))
        .cloned()
        .collect()
}

/// Induced subgraph on the nodes satisfying `keep`.
pub fn subweb(g: &WebGraph, keep: impl Fn(u32, &NodeInfo) -> bool) -> WebGraph {
    let nodes: BTreeMap<u32, NodeInfo> = g
        .nodes
        .iter()
        .filter(|(&id, info)| keep(id, info))
        .map(|(&id, info)| (id, info.clone()))
        .collect();
    let edges = g
        .edges
        .iter()
        .filter(|e| nodes.contains_key(&e.tail) && nodes.contains_key(&e.head))
        .cloned()
        .collect();
    WebGraph { nodes, edges }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WebStats {
    pub node_count: usize,
    pub edge_count: usize,
    pub component_count: usize,
    /// Component sizes, largest first.
    pub sizes: Vec<usize>,
    /// Nodes with no edge of the selected kinds.
    pub isolated: Vec<u32>,
    /// Node count per codimension; `None` for nodes without a tag.
    pub per_codim: BTreeMap<Option<u8>, usize>,
}

impl fmt::Display for WebStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &mut dyn Iterator<Item = String>| v.collect::<Vec<_>>().join(",");
        writeln!(f, "nodes: {}", self.node_count)?;
        writeln!(f, "edges: {}", self.edge_count)?;
        writeln!(f, "components: {}", self.component_count)?;
        writeln!(f, "sizes: {}", join(&mut self.sizes.iter().map(|s| s.to_string())))?;
        writeln!(
            f,
            "isolated: {}",
            join(&mut self.isolated.iter().map(|s| s.to_string()))
        )?;
        for (c, n) in &self.per_codim {
            match c {
                Some(c) => writeln!(f, "codim {c}: {n}")?,
                None => writeln!(f, "codim ?: {n}")?,
            }
        }
        Ok(())
    }
}

pub fn stats(g: &WebGraph, kinds: &BTreeSet<EdgeKind>) -> WebStats {
    let comps = components(g, kinds);
    let mut sizes: Vec<usize> = comps.iter().map(Vec::len).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    let isolated = comps.iter().filter(|c| c.len() == 1).map(|c| c[0]).collect();
    let mut per_codim = BTreeMap::new();
    for info in g.nodes.values() {
        *per_codim.entry(info.codim).or_default() += 1;
    }
    WebStats {
        node_count: g.nodes.len(),
        edge_count: g.edges_of(kinds).count(),
        component_count: comps.len(),
        sizes,
        isolated,
        per_codim,
    }
}

#[derive(Clone, Debug)]
pub struct DotOptions {
    pub kinds: BTreeSet<EdgeKind>,
    /// Put nodes of equal `p_g` on one rank.
    pub rank_by_pg: bool,
}

impl Default for DotOptions {
    fn default() -> Self {
        Self {
            kinds: EdgeKind::ALL.into_iter().collect(),
            rank_by_pg: true,
        }
    }
}

/// Graphviz digraph; nodes are named `n<ID>` and labelled with the id.
pub fn to_dot(g: &WebGraph, opts: &DotOptions) -> String {
    let mut out = String::from("digraph web {\n");
    for (id, info) in &g.nodes {
        let _ = write!(out, "  n{id} [label=\"{id}\"");
        if let Some(pg) = info.p_g {
            let _ = write!(out, ", pg={pg}");
        }
        out.push_str("];\n");
    }
    if opts.rank_by_pg {
        let mut ranks: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for (&id, info) in &g.nodes {
            if let Some(pg) = info.p_g {
                ranks.entry(pg).or_default().push(id);
            }
        }
        for (_, ids) in ranks.iter().rev() {
            let names: Vec<String> = ids.iter().map(|id| format!("n{id}")).collect();
            let _ = writeln!(out, "  {{ rank=same; {}; }}", names.join("; "));
        }
    }
    for e in g.edges_of(&opts.kinds) {
        let mut attrs = vec![format!("kind=\"{}\"", e.kind)];
        if e.kind.dashed() {
            attrs.push("style=dashed".into());
        }
        if e.kind == EdgeKind::K3TypeII1 || !e.annotation.is_empty() {
            let label = if e.annotation.is_empty() {
                "*"
            } else {
                e.annotation.as_str()
            };
            attrs.push(format!("label=\"{}\"", label.replace('"', "\\\"")));
        }
        let _ = writeln!(out, "  n{} -> n{} [{}];", e.tail, e.head, attrs.join(", "));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: u32, edges: &[(u32, u32)]) -> WebGraph {
        let mut g = WebGraph::new();
        for id in 1..=n {
            g.add_node(id, NodeInfo::default());
        }
        for &(a, b) in edges {
            g.add_edge(WebEdge::new(a, b, EdgeKind::K3TypeI)).unwrap();
        }
        g
    }

    #[test]
    fn edge_validation() {
        let mut g = graph(2, &[]);
        assert_eq!(
            g.add_edge(WebEdge::new(1, 1, EdgeKind::K3TypeI)),
            Err(WebError::Loop(1))
        );
        assert_eq!(
            g.add_edge(WebEdge::new(1, 9, EdgeKind::K3TypeI)),
            Err(WebError::UnknownNode(9))
        );
        assert!("k3-typeIII".parse::<EdgeKind>().is_err());
        for k in EdgeKind::ALL {
            assert_eq!(k.to_string().parse::<EdgeKind>().unwrap(), k);
        }
    }

    #[test]
    fn components_and_forest() {
        let all: BTreeSet<_> = EdgeKind::ALL.into_iter().collect();
        let g = graph(4, &[]);
        assert_eq!(components(&g, &all).len(), 4);
        let g = graph(3, &[(1, 2), (2, 3), (1, 3)]);
        assert_eq!(components(&g, &all), vec![vec![1, 2, 3]]);
        let f = spanning_forest(&g, &all);
        assert_eq!(
            f.iter().map(|e| (e.tail, e.head)).collect::<Vec<_>>(),
            vec![(1, 2), (1, 3)]
        );
        assert!(spanning_forest(&graph(1, &[]), &all).is_empty());
    }

    #[test]
    fn kinds_restrict_edges() {
        let mut g = graph(3, &[(1, 2)]);
        g.add_edge(WebEdge::new(2, 3, EdgeKind::NonK3)).unwrap();
        assert_eq!(components(&g, &EdgeKind::proven()).len(), 2);
        assert_eq!(components(&g, &parse_kinds("proven,non-k3").unwrap()).len(), 1);
    }

    #[test]
    fn subweb_and_stats() {
        let mut g = graph(4, &[(1, 2), (3, 4)]);
        g.add_node(
            1,
            NodeInfo {
                codim: Some(1),
                ..Default::default()
            },
        );
        let s = subweb(&g, |_, info| info.codim == Some(1));
        assert_eq!(s.node_count(), 1);
        assert!(s.edges().is_empty());
        assert_eq!(subweb(&g, |_, _| false).node_count(), 0);
        let st = stats(&graph(5, &[(1, 2), (2, 3)]), &EdgeKind::proven());
        assert_eq!(st.sizes, vec![3, 1, 1]);
        assert_eq!(st.isolated, vec![4, 5]);
    }

    #[test]
    fn dot_output() {
        let mut g = graph(23, &[(1, 6)]);
        g.add_edge(WebEdge::new(17, 23, EdgeKind::K3TypeII1).with_annotation("*"))
            .unwrap();
        let dot = to_dot(&g, &DotOptions::default());
        assert!(dot.contains("n1 -> n6"));
        assert!(dot.contains("n17 -> n23 [kind=\"k3-typeII1\", label=\"*\"]"));
        assert_eq!(to_dot(&WebGraph::new(), &DotOptions::default()), "digraph web {\n}\n");
    }
}
