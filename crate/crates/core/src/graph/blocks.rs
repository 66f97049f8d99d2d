use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::{GraphError, LabelledGraph, VertexId};

/// A maximal connected induced subgraph without separating vertices,
/// identified by its sorted vertex indices in the parent graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BigChunk {
    pub vertices: Vec<usize>,
}

impl BigChunk {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn names<'g>(&self, g: &'g LabelledGraph) -> Vec<&'g str> {
        self.vertices.iter().map(|&v| g.name(v)).collect()
    }

    /// The chunk as a standalone labelled graph.
    pub fn subgraph(&self, g: &LabelledGraph) -> LabelledGraph {
        g.induced(&self.vertices)
    }

    pub fn edge_count(&self, g: &LabelledGraph) -> usize {
        g.edges().iter().filter(|e| self.contains(e.u) && self.contains(e.v)).count()
    }
}

/// Big chunks, separating vertices, and which chunks each separating vertex
/// belongs to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub chunks: Vec<BigChunk>,
    pub separating: Vec<usize>,
    pub incidence: BTreeMap<usize, Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockReport {
    pub chunks: Vec<Vec<String>>,
    pub separating: Vec<String>,
    pub classes: Vec<String>,
}

impl BlockDecomposition {
    pub fn report(&self, g: &LabelledGraph) -> BlockReport {
        BlockReport {
            chunks: self.chunks.iter().map(|c| c.names(g).into_iter().map(String::from).collect()).collect(),
            separating: self.separating.iter().map(|&v| g.name(v).to_string()).collect(),
            classes: self.chunks.iter().map(|c| classify_chunk(g, c).to_string()).collect(),
        }
    }

    /// Chunk indices containing `v`.
    pub fn chunks_containing(&self, v: usize) -> Vec<usize> {
        (0..self.chunks.len()).filter(|&i| self.chunks[i].contains(v)).collect()
    }
}

/// Role of a big chunk in the JSJ construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum ChunkClass {
    /// An isolated vertex; only arises for one-vertex graphs.
    SingleVertex,
    BigBig,
    ToralLeaf {
        tip: VertexId,
    },
    BraidedLeaf {
        label: u32,
        tip: VertexId,
    },
    OddLeaf {
        label: u32,
        tip: VertexId,
    },
    OddNonLeafEdge {
        label: u32,
    },
    Label2NonLeafEdge,
    EvenNonLeafEdge {
        label: u32,
    },
}

impl ChunkClass {
    pub fn tip(&self) -> Option<&VertexId> {
        match self {
            ChunkClass::ToralLeaf { tip } | ChunkClass::BraidedLeaf { tip, .. } | ChunkClass::OddLeaf { tip, .. } => {
                Some(tip)
            }
            _ => None,
        }
    }

    pub fn is_leaf(&self) -> bool {
        self.tip().is_some()
    }
}

impl fmt::Display for ChunkClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChunkClass::SingleVertex => f.write_str("SingleVertex"),
            ChunkClass::BigBig => f.write_str("BigBig"),
            ChunkClass::ToralLeaf { .. } => f.write_str("ToralLeaf"),
            ChunkClass::BraidedLeaf { label, .. } => write!(f, "BraidedLeaf({label})"),
            ChunkClass::OddLeaf { label, .. } => write!(f, "OddLeaf({label})"),
            ChunkClass::OddNonLeafEdge { label } => write!(f, "OddNonLeafEdge({label})"),
            ChunkClass::Label2NonLeafEdge => f.write_str("Label2NonLeafEdge"),
            ChunkClass::EvenNonLeafEdge { label } => write!(f, "EvenNonLeafEdge({label})"),
        }
    }
}

/// Vertex sets of the blocks of `g` (biconnected components, bridges, and
/// isolated vertices). Iterative Hopcroft–Tarjan, so deep graphs do not
/// exhaust the stack.
pub(crate) fn blocks(g: &LabelledGraph) -> Vec<Vec<usize>> {
    const UNSEEN: usize = usize::MAX;
    let n = g.vertex_count();
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbours(v).map(|(w, _)| w).collect()).collect();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![UNSEEN; n];
    let mut clock = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        if nbrs[root].is_empty() {
            out.push(vec![root]);
            continue;
        }
        let mut frames: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some(frame) = frames.last_mut() {
            let v = frame.0;
            if frame.1 < nbrs[v].len() {
                let w = nbrs[v][frame.1];
                frame.1 += 1;
                if disc[w] == UNSEEN {
                    parent[w] = v;
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    edge_stack.push((v, w));
                    frames.push((w, 0));
                } else if w != parent[v] && disc[w] < disc[v] {
                    low[v] = low[v].min(disc[w]);
                    edge_stack.push((v, w));
                }
            } else {
                frames.pop();
                if let Some(&(u, _)) = frames.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some((x, y)) = edge_stack.pop() {
                            block.push(x);
                            block.push(y);
                            if (x, y) == (u, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        block.dedup();
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

fn chunk_order(a: &BigChunk, b: &BigChunk) -> std::cmp::Ordering {
    a.vertices[0].cmp(&b.vertices[0]).then(b.len().cmp(&a.len())).then(a.vertices.cmp(&b.vertices))
}

/// Decomposes a connected graph into big chunks.
///
/// Chunks are ordered by least vertex, then by decreasing size, then by
/// vertex list.
pub fn big_chunks(g: &LabelledGraph) -> Result<BlockDecomposition, GraphError> {
    g.require_connected()?;
    let mut chunks: Vec<BigChunk> = blocks(g).into_iter().map(|vertices| BigChunk { vertices }).collect();
    chunks.sort_by(chunk_order);

    let mut membership: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, c) in chunks.iter().enumerate() {
        for &v in &c.vertices {
            membership.entry(v).or_default().push(i);
        }
    }
    let incidence: BTreeMap<usize, Vec<usize>> = membership.into_iter().filter(|(_, cs)| cs.len() >= 2).collect();
    let separating = incidence.keys().copied().collect();
    Ok(BlockDecomposition { chunks, separating, incidence })
}

/// Vertices whose removal disconnects a connected graph.
pub fn separating_vertices(g: &LabelledGraph) -> Result<Vec<VertexId>, GraphError> {
    let d = big_chunks(g)?;
    Ok(d.separating.iter().map(|&v| g.vertices()[v].clone()).collect())
}

/// Classifies a chunk of `g`. Two-vertex chunks are leaves when an endpoint
/// has valence one in `g`; if both do (`g` is a single edge) the
/// lexicographically larger endpoint is taken as the tip.
pub fn classify_chunk(g: &LabelledGraph, c: &BigChunk) -> ChunkClass {
    match c.vertices.as_slice() {
        [_] => ChunkClass::SingleVertex,
        &[u, v] => {
            let label = g.label(u, v).expect("two-vertex chunk is an edge");
            let tip = if g.degree(v) == 1 {
                Some(v)
            } else if g.degree(u) == 1 {
                Some(u)
            } else {
                None
            };
            match tip.map(|t| g.vertices()[t].clone()) {
                Some(tip) if label == 2 => ChunkClass::ToralLeaf { tip },
                Some(tip) if label.is_multiple_of(2) => ChunkClass::BraidedLeaf { label, tip },
                Some(tip) => ChunkClass::OddLeaf { label, tip },
                None if label == 2 => ChunkClass::Label2NonLeafEdge,
                None if label.is_multiple_of(2) => ChunkClass::EvenNonLeafEdge { label },
                None => ChunkClass::OddNonLeafEdge { label },
            }
        }
        _ => ChunkClass::BigBig,
    }
}
