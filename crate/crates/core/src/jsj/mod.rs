//! Graphs of groups built from a defining graph: the bipartite chunk /
//! separating-vertex graph, the JSJ decomposition over cyclic subgroups,
//! its collapse onto big chunk parabolics, and the JSJ splittings of
//! dihedral Artin groups.

mod build;
mod dot;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{GraphError, LabelledGraph, VertexId};
use crate::presentation::artin_presentation;
use crate::word::Word;

pub use build::{build_jsj, build_skeleton, collapse_jsj, dihedral_jsj, Skeleton, SkeletonEdge, SkeletonNode};
pub use dot::to_dot;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JsjError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("no JSJ exists for Z^2")]
    NoJsjExists,
    #[error("dihedral label must be at least 2, got {0}")]
    InvalidLabel(u32),
    #[error("a two-vertex chunk {0:?} has no well-defined tip")]
    AmbiguousTip(Vec<String>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
    Red,
}

/// A vertex or edge group, described by how it sits inside `A_Γ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum GroupDescriptor {
    /// `<v>` for a vertex `v` of Γ.
    CyclicOnGenerator { generator: VertexId },
    /// The standard parabolic `A_Λ` of a chunk Λ.
    ChunkParabolic { chunk: LabelledGraph },
    /// `<a, z> ≅ Z^2`, where `z` is written as an explicit word of `A_Γ` and
    /// denoted by `symbol` inside the group.
    FreeAbelianPair { base: VertexId, symbol: String, central: Word },
    /// Infinite cyclic group generated by `symbol`, which stands for `word`.
    CyclicOnWord { symbol: String, word: Word },
}

impl GroupDescriptor {
    /// Generators and relators of the vertex group, over its local symbols.
    pub fn expand(&self) -> (Vec<String>, Vec<Word>) {
        match self {
            GroupDescriptor::CyclicOnGenerator { generator } => (vec![generator.to_string()], vec![]),
            GroupDescriptor::ChunkParabolic { chunk } => {
                let p = artin_presentation(chunk);
                (p.generators, p.relators)
            }
            GroupDescriptor::FreeAbelianPair { base, symbol, .. } => {
                let (a, z) = (base.as_str(), symbol.as_str());
                let commutator = Word::parse(&format!("{a} {z} {a}^-1 {z}^-1")).expect("valid symbols");
                (vec![a.to_string(), z.to_string()], vec![commutator])
            }
            GroupDescriptor::CyclicOnWord { symbol, .. } => (vec![symbol.clone()], vec![]),
        }
    }

    /// Words of `A_Γ` generating the group.
    pub fn generating_words(&self) -> Vec<Word> {
        match self {
            GroupDescriptor::CyclicOnGenerator { generator } => vec![Word::letter(generator.as_str(), 1)],
            GroupDescriptor::ChunkParabolic { chunk } => {
                chunk.vertices().iter().map(|v| Word::letter(v.as_str(), 1)).collect()
            }
            GroupDescriptor::FreeAbelianPair { base, central, .. } => {
                vec![Word::letter(base.as_str(), 1), central.clone()]
            }
            GroupDescriptor::CyclicOnWord { word, .. } => vec![word.clone()],
        }
    }

    /// Whether generator `v` of Γ occurs in a generating word.
    pub fn mentions(&self, v: &str) -> bool {
        self.generating_words().iter().any(|w| w.letters().iter().any(|l| l.symbol == v))
    }

    /// Number of local generators.
    pub fn rank(&self) -> usize {
        self.expand().0.len()
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::CyclicOnGenerator { generator } => write!(f, "<{generator}>"),
            GroupDescriptor::ChunkParabolic { chunk } => {
                let names: Vec<&str> = chunk.vertices().iter().map(|v| v.as_str()).collect();
                write!(f, "A{{{}}}", names.join(","))
            }
            GroupDescriptor::FreeAbelianPair { base, symbol, central } => {
                write!(f, "<{base}, {symbol}> where {symbol} = {central}")
            }
            GroupDescriptor::CyclicOnWord { symbol, word } => write!(f, "<{symbol}> where {symbol} = {word}"),
        }
    }
}

/// Where a vertex of the graph of groups comes from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Origin {
    /// Big chunk with this index in the block decomposition of Γ.
    Chunk {
        index: usize,
    },
    Separating {
        vertex: VertexId,
    },
    /// Red vertex attached to the braided leaf with this chunk index.
    Red {
        chunk: usize,
    },
    /// Vertex of a dihedral JSJ splitting; Γ is the whole edge.
    Dihedral,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoGVertex {
    pub id: String,
    pub color: Color,
    pub group: GroupDescriptor,
    pub origin: Origin,
}

/// An edge of the base graph. `source_image` and `target_image` are the
/// images of the edge group generator in the endpoint groups, written over
/// the local symbols of those groups. Loops have `source == target` and a
/// stable letter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoGEdge {
    pub source: usize,
    pub target: usize,
    pub edge_group: GroupDescriptor,
    pub source_image: Word,
    pub target_image: Word,
    pub stable_letter: Option<String>,
}

impl GoGEdge {
    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphOfGroups {
    /// The defining graph Γ.
    pub graph: LabelledGraph,
    pub vertices: Vec<GoGVertex>,
    pub edges: Vec<GoGEdge>,
}

impl GraphOfGroups {
    pub fn count(&self, color: Color) -> usize {
        self.vertices.iter().filter(|v| v.color == color).count()
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|e| e.is_loop()).count()
    }

    /// Degree in the base graph; a loop contributes 2.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().map(|e| usize::from(e.source == v) + usize::from(e.target == v)).sum()
    }

    pub fn is_base_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return false;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.source), find(&mut parent, e.target));
            parent[a] = b;
        }
        let root = find(&mut parent, 0);
        (0..n).all(|v| find(&mut parent, v) == root)
    }
}

/// One line per vertex, then one per edge:
///
/// ```text
/// black chunk1: <a>
/// white sep_a: <a>
/// loop chunk1 [b]: a = a
/// edge chunk2 -- red2: z_a_d = r_a_d^3
/// ```
impl fmt::Display for GraphOfGroups {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.vertices {
            let color = match v.color {
                Color::Black => "black",
                Color::White => "white",
                Color::Red => "red",
            };
            writeln!(f, "{color} {}: {}", v.id, v.group)?;
        }
        for e in &self.edges {
            let (s, t) = (&self.vertices[e.source].id, &self.vertices[e.target].id);
            match (&e.stable_letter, e.is_loop()) {
                (Some(letter), true) => write!(f, "loop {s} [{letter}]")?,
                (Some(letter), false) => write!(f, "edge {s} -- {t} [{letter}]")?,
                (None, _) => write!(f, "edge {s} -- {t}")?,
            }
            writeln!(f, ": {} = {}", e.source_image, e.target_image)?;
        }
        Ok(())
    }
}

/// First Betti number `|E| - |V| + 1` of the base graph (loops count as edges).
pub fn betti_number(j: &GraphOfGroups) -> usize {
    (j.edges.len() + 1).checked_sub(j.vertices.len()).expect("base graph of a graph of groups is connected")
}
