//! Labelled defining graphs and their decomposition into big chunks.
//!
//! Vertices are kept in lexicographic order of their names; every index in
//! this module refers to that order, so iteration is deterministic and index
//! comparison agrees with name comparison.

mod blocks;
mod canonical;
mod parse;
mod retract;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::word::is_valid_symbol;

pub use blocks::{big_chunks, classify_chunk, separating_vertices, BigChunk, BlockDecomposition, ChunkClass};
pub use canonical::{canonical_form, CANONICAL_FORM_CAP};
pub use parse::parse_graph;
pub use retract::{retract_word, Retraction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {source}")]
    AtLine { line: usize, source: Box<GraphError> },
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("invalid vertex name `{0}` (allowed: [A-Za-z0-9_]+)")]
    InvalidName(String),
    #[error("edge {{{u},{v}}} has label {label}, labels must be at least 2")]
    LabelBelowTwo { u: String, v: String, label: i64 },
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge {{{u},{v}}}")]
    DuplicateEdge { u: String, v: String },
    #[error("edge uses undeclared vertex `{0}`")]
    UndeclaredVertex(String),
    #[error("graph has no vertices")]
    Empty,
    #[error("graph is disconnected; components: {}", fmt_components(.0))]
    Disconnected(Vec<Vec<String>>),
    #[error("operation needs at least {needed} vertices, graph has {found}")]
    TooFewVertices { needed: usize, found: usize },
    #[error("canonical form is capped at {cap} vertices, graph has {found}")]
    CanonicalCapExceeded { cap: usize, found: usize },
    #[error("vertex set {0:?} is not a big chunk of the graph")]
    NotAChunk(Vec<String>),
    #[error("vertex `{vertex}` has several nearest chunk vertices {candidates:?}")]
    AmbiguousRetraction { vertex: String, candidates: Vec<String> },
    #[error("retraction does not respect the relation on edge {{{u},{v}}}")]
    IncompatibleRetraction { u: String, v: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
}

fn fmt_components(components: &[Vec<String>]) -> String {
    components.iter().map(|c| format!("{{{}}}", c.join(","))).collect::<Vec<_>>().join(" ")
}

impl GraphError {
    fn at_line(self, line: usize) -> GraphError {
        GraphError::AtLine { line, source: Box::new(self) }
    }
}

/// Name of a vertex: a nonempty token over `[A-Za-z0-9_]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(name: impl Into<String>) -> Result<Self, GraphError> {
        let name = name.into();
        if is_valid_symbol(&name) {
            Ok(VertexId(name))
        } else {
            Err(GraphError::InvalidName(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for VertexId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        VertexId::new(s).map_err(D::Error::custom)
    }
}

/// An edge `{u, v}` with `u < v` (as vertex indices) and its label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub label: u32,
}

/// A finite simplicial graph whose edges carry labels `m >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabelledGraph {
    names: Vec<VertexId>,
    adjacency: Vec<BTreeMap<usize, u32>>,
}

impl LabelledGraph {
    /// Builds a graph from explicit vertex and edge lists. Every edge
    /// endpoint must be declared.
    pub fn new<V, S>(vertices: V, edges: &[(&str, &str, u32)]) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut builder = GraphBuilder::default();
        for v in vertices {
            builder.add_vertex(v)?;
        }
        for &(u, v, label) in edges {
            for w in [u, v] {
                if !builder.has_vertex(w) {
                    return Err(GraphError::UndeclaredVertex(w.to_string()));
                }
            }
            builder.add_edge(u, v, i64::from(label))?;
        }
        Ok(builder.build())
    }

    /// Builds a graph from an edge list, declaring endpoints on the fly.
    pub fn from_edges(edges: &[(&str, &str, u32)]) -> Result<Self, GraphError> {
        let mut builder = GraphBuilder::default();
        for &(u, v, label) in edges {
            builder.add_vertex(u)?;
            builder.add_vertex(v)?;
            builder.add_edge(u, v, i64::from(label))?;
        }
        Ok(builder.build())
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        self.names[v].as_str()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.binary_search_by(|n| n.as_str().cmp(name)).ok()
    }

    pub fn label(&self, u: usize, v: usize) -> Option<u32> {
        self.adjacency[u].get(&v).copied()
    }

    /// Neighbours of `v` in increasing order, with edge labels.
    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.adjacency[v].iter().map(|(&w, &l)| (w, l))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Edges sorted by `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for (&v, &label) in nbrs.range(u + 1..) {
                out.push(Edge { u, v, label });
            }
        }
        out
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_where(|_| true)
    }

    fn components_where(&self, keep_edge: impl Fn(u32) -> bool) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for (w, l) in self.neighbours(v) {
                    if keep_edge(l) && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.components().len() == 1
    }

    /// Errors unless the graph is nonempty and connected.
    pub fn require_connected(&self) -> Result<(), GraphError> {
        if self.is_empty() {
            return Err(GraphError::Empty);
        }
        let comps = self.components();
        if comps.len() > 1 {
            return Err(GraphError::Disconnected(self.named_sets(&comps)));
        }
        Ok(())
    }

    pub(crate) fn named_sets(&self, sets: &[Vec<usize>]) -> Vec<Vec<String>> {
        sets.iter().map(|s| s.iter().map(|&v| self.name(v).to_string()).collect()).collect()
    }

    /// Breadth-first distances from `source`; `usize::MAX` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for (w, _) in self.neighbours(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// The full subgraph induced on `vertices` (indices into `self`).
    pub fn induced(&self, vertices: &[usize]) -> LabelledGraph {
        let keep: BTreeSet<usize> = vertices.iter().copied().collect();
        let mut builder = GraphBuilder::default();
        for &v in &keep {
            builder.add_vertex(self.name(v)).expect("names already validated");
        }
        for e in self.edges() {
            if keep.contains(&e.u) && keep.contains(&e.v) {
                builder.add_edge(self.name(e.u), self.name(e.v), i64::from(e.label)).expect("edges already validated");
            }
        }
        builder.build()
    }

    /// The same graph with every vertex renamed through `rename`, which must
    /// be injective and produce valid names.
    pub fn renamed(&self, mut rename: impl FnMut(&str) -> String) -> Result<LabelledGraph, GraphError> {
        let names: Vec<String> = self.names.iter().map(|n| rename(n.as_str())).collect();
        let edges: Vec<(String, String, u32)> =
            self.edges().into_iter().map(|e| (names[e.u].clone(), names[e.v].clone(), e.label)).collect();
        let mut builder = GraphBuilder::default();
        for n in &names {
            if builder.has_vertex(n) {
                return Err(GraphError::Syntax(format!("renaming is not injective at `{n}`")));
            }
            builder.add_vertex(n.as_str())?;
        }
        for (u, v, l) in &edges {
            builder.add_edge(u, v, i64::from(*l))?;
        }
        Ok(builder.build())
    }

    /// Serialises in the line-based `artin-graph v1` format.
    pub fn to_artin_text(&self) -> String {
        let mut out = String::from("# artin-graph v1\n");
        for v in &self.names {
            out.push_str(&format!("v {v}\n"));
        }
        for e in self.edges() {
            out.push_str(&format!("e {} {} {}\n", self.name(e.u), self.name(e.v), e.label));
        }
        out
    }
}

/// Partition of the vertices into classes joined by odd-labelled paths.
pub fn odd_components(g: &LabelledGraph) -> Vec<Vec<VertexId>> {
    g.components_where(|label| label % 2 == 1)
        .into_iter()
        .map(|c| c.into_iter().map(|v| g.names[v].clone()).collect())
        .collect()
}

/// Incremental construction with validation of every simplicial invariant.
#[derive(Debug, Default, Clone)]
pub(crate) struct GraphBuilder {
    vertices: BTreeSet<String>,
    edges: BTreeMap<(String, String), u32>,
}

impl GraphBuilder {
    pub(crate) fn has_vertex(&self, name: &str) -> bool {
        self.vertices.contains(name)
    }

    pub(crate) fn add_vertex(&mut self, name: impl Into<String>) -> Result<(), GraphError> {
        let name = name.into();
        if !is_valid_symbol(&name) {
            return Err(GraphError::InvalidName(name));
        }
        self.vertices.insert(name);
        Ok(())
    }

    pub(crate) fn add_edge(&mut self, u: &str, v: &str, label: i64) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u.to_string()));
        }
        if label < 2 {
            return Err(GraphError::LabelBelowTwo { u: u.to_string(), v: v.to_string(), label });
        }
        let label = u32::try_from(label).map_err(|_| GraphError::Syntax(format!("label {label} out of range")))?;
        let key = if u < v { (u.to_string(), v.to_string()) } else { (v.to_string(), u.to_string()) };
        if self.edges.contains_key(&key) {
            return Err(GraphError::DuplicateEdge { u: key.0, v: key.1 });
        }
        self.edges.insert(key, label);
        Ok(())
    }

    pub(crate) fn build(self) -> LabelledGraph {
        let names: Vec<VertexId> = self.vertices.into_iter().map(VertexId).collect();
        let index = |s: &str| names.binary_search_by(|n| n.as_str().cmp(s)).unwrap();
        let mut adjacency = vec![BTreeMap::new(); names.len()];
        for ((u, v), label) in &self.edges {
            let (iu, iv) = (index(u), index(v));
            adjacency[iu].insert(iv, *label);
            adjacency[iv].insert(iu, *label);
        }
        LabelledGraph { names, adjacency }
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<(String, String, u32)>,
}

impl Serialize for LabelledGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GraphJson {
            vertices: self.names.iter().map(|n| n.0.clone()).collect(),
            edges: self
                .edges()
                .into_iter()
                .map(|e| (self.name(e.u).to_string(), self.name(e.v).to_string(), e.label))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LabelledGraph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = GraphJson::deserialize(deserializer)?;
        let edges: Vec<(&str, &str, u32)> = raw.edges.iter().map(|(u, v, l)| (u.as_str(), v.as_str(), *l)).collect();
        LabelledGraph::new(raw.vertices, &edges).map_err(D::Error::custom)
    }
}

impl LabelledGraph {
    /// Parses the JSON form `{"vertices": [...], "edges": [[u, v, label], ...]}`.
    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        serde_json::from_str(text).map_err(|e| GraphError::Syntax(format!("graph JSON: {e}")))
    }
}
