use std::collections::BTreeMap;

use super::{Color, GoGEdge, GoGVertex, GraphOfGroups, GroupDescriptor, JsjError, Origin};
use crate::graph::{big_chunks, classify_chunk, ChunkClass, GraphError, LabelledGraph, VertexId};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonNode {
    pub color: Color,
    pub origin: Origin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkeletonEdge {
    /// Black chunk vertex to white separating vertex it contains.
    Incidence { black: usize, white: usize },
    /// Loop on the black vertex of a toral leaf.
    Loop { black: usize },
    /// Black vertex of a braided leaf to its red vertex.
    Red { black: usize, red: usize },
}

/// Base graph of the JSJ decomposition: the bipartite chunk / separating
/// vertex graph with a loop on every toral leaf and a red vertex hanging off
/// every braided leaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Skeleton {
    pub nodes: Vec<SkeletonNode>,
    pub edges: Vec<SkeletonEdge>,
    pub classes: Vec<ChunkClass>,
}

impl Skeleton {
    pub fn count(&self, color: Color) -> usize {
        self.nodes.iter().filter(|n| n.color == color).count()
    }
}

fn require_three(g: &LabelledGraph) -> Result<(), JsjError> {
    g.require_connected()?;
    if g.vertex_count() < 3 {
        return Err(GraphError::TooFewVertices { needed: 3, found: g.vertex_count() }.into());
    }
    Ok(())
}

/// Nodes are ordered black (chunk order), white (vertex order), red (chunk
/// order); edges are incidences, then loops, then red edges.
pub fn build_skeleton(g: &LabelledGraph) -> Result<Skeleton, JsjError> {
    require_three(g)?;
    let d = big_chunks(g)?;
    let classes: Vec<ChunkClass> = d.chunks.iter().map(|c| classify_chunk(g, c)).collect();

    let mut nodes: Vec<SkeletonNode> = (0..d.chunks.len())
        .map(|index| SkeletonNode { color: Color::Black, origin: Origin::Chunk { index } })
        .collect();
    let mut white_of = BTreeMap::new();
    for &s in &d.separating {
        white_of.insert(s, nodes.len());
        nodes
            .push(SkeletonNode { color: Color::White, origin: Origin::Separating { vertex: g.vertices()[s].clone() } });
    }

    let mut edges = Vec::new();
    for (black, c) in d.chunks.iter().enumerate() {
        for &v in &c.vertices {
            if let Some(&white) = white_of.get(&v) {
                edges.push(SkeletonEdge::Incidence { black, white });
            }
        }
    }
    for (black, class) in classes.iter().enumerate() {
        if matches!(class, ChunkClass::ToralLeaf { .. }) {
            edges.push(SkeletonEdge::Loop { black });
        }
    }
    for (black, class) in classes.iter().enumerate() {
        if matches!(class, ChunkClass::BraidedLeaf { .. }) {
            let red = nodes.len();
            nodes.push(SkeletonNode { color: Color::Red, origin: Origin::Red { chunk: black } });
            edges.push(SkeletonEdge::Red { black, red });
        }
    }
    Ok(Skeleton { nodes, edges, classes })
}

/// Base and tip of a leaf chunk `{base, tip}`.
fn leaf_ends(g: &LabelledGraph, chunk: &[usize], tip: &VertexId) -> Result<(VertexId, VertexId), JsjError> {
    let names: Vec<&VertexId> = chunk.iter().map(|&v| &g.vertices()[v]).collect();
    let base = names.iter().find(|v| **v != tip).copied().cloned();
    match base {
        Some(base) if g.degree(g.index_of(base.as_str()).unwrap()) >= 2 => Ok((base, tip.clone())),
        _ => Err(JsjError::AmbiguousTip(names.iter().map(|v| v.to_string()).collect())),
    }
}

fn node_id(g: &LabelledGraph, origin: &Origin) -> String {
    match origin {
        Origin::Chunk { index } => format!("chunk{index}"),
        Origin::Separating { vertex } => format!("sep_{vertex}"),
        Origin::Red { chunk } => format!("red{chunk}"),
        Origin::Dihedral => format!("dihedral_{}", g.edge_count()),
    }
}

/// The JSJ decomposition over cyclic subgroups of `A_Γ`, for connected Γ on
/// at least three vertices.
///
/// Black vertices carry chunk parabolics, except even leaves: a toral leaf
/// `{a, b}` with tip `b` becomes `<a>` with a loop whose stable letter is
/// `b`; a braided leaf with label `2m` becomes `<a, z>` joined to a red
/// vertex `<r>`, `r = ab`, along `r^m = z`. White vertices are `<v>` for the
/// separating vertices, included into the chunks containing them.
pub fn build_jsj(g: &LabelledGraph) -> Result<GraphOfGroups, JsjError> {
    let skeleton = build_skeleton(g)?;
    let d = big_chunks(g)?;

    // Per black vertex: descriptor, plus data for its loop or red edge.
    let mut groups = Vec::new();
    let mut loop_data = BTreeMap::new();
    let mut red_data = BTreeMap::new();
    for (i, class) in skeleton.classes.iter().enumerate() {
        let chunk = &d.chunks[i];
        let group = match class {
            ChunkClass::ToralLeaf { tip } => {
                let (a, b) = leaf_ends(g, &chunk.vertices, tip)?;
                loop_data.insert(i, (a.clone(), b));
                GroupDescriptor::CyclicOnGenerator { generator: a }
            }
            ChunkClass::BraidedLeaf { label, tip } => {
                let (a, b) = leaf_ends(g, &chunk.vertices, tip)?;
                let z_symbol = format!("z_{a}_{b}");
                let central = Word::alternating(a.as_str(), b.as_str(), *label);
                red_data.insert(i, (a.clone(), b.clone(), label / 2, z_symbol.clone(), central.clone()));
                GroupDescriptor::FreeAbelianPair { base: a, symbol: z_symbol, central }
            }
            _ => GroupDescriptor::ChunkParabolic { chunk: chunk.subgraph(g) },
        };
        groups.push(group);
    }

    let mut vertices: Vec<GoGVertex> = Vec::with_capacity(skeleton.nodes.len());
    for node in &skeleton.nodes {
        let group = match &node.origin {
            Origin::Chunk { index } => groups[*index].clone(),
            Origin::Separating { vertex } => GroupDescriptor::CyclicOnGenerator { generator: vertex.clone() },
            Origin::Red { chunk } => {
                let (a, b, ..) = &red_data[chunk];
                GroupDescriptor::CyclicOnWord {
                    symbol: format!("r_{a}_{b}"),
                    word: Word::parse(&format!("{a} {b}")).expect("valid symbols"),
                }
            }
            Origin::Dihedral => unreachable!("skeletons have no dihedral vertices"),
        };
        vertices.push(GoGVertex {
            id: node_id(g, &node.origin),
            color: node.color,
            group,
            origin: node.origin.clone(),
        });
    }

    let mut edges = Vec::with_capacity(skeleton.edges.len());
    for e in &skeleton.edges {
        let edge = match *e {
            SkeletonEdge::Incidence { black, white } => {
                let Origin::Separating { vertex } = &skeleton.nodes[white].origin else {
                    unreachable!("white nodes come from separating vertices")
                };
                let image = Word::letter(vertex.as_str(), 1);
                GoGEdge {
                    source: black,
                    target: white,
                    edge_group: GroupDescriptor::CyclicOnGenerator { generator: vertex.clone() },
                    source_image: image.clone(),
                    target_image: image,
                    stable_letter: None,
                }
            }
            SkeletonEdge::Loop { black } => {
                let (a, b) = &loop_data[&black];
                let image = Word::letter(a.as_str(), 1);
                GoGEdge {
                    source: black,
                    target: black,
                    edge_group: GroupDescriptor::CyclicOnGenerator { generator: a.clone() },
                    source_image: image.clone(),
                    target_image: image,
                    stable_letter: Some(b.to_string()),
                }
            }
            SkeletonEdge::Red { black, red } => {
                let (a, b, m, z_symbol, central) = &red_data[&black];
                GoGEdge {
                    source: black,
                    target: red,
                    edge_group: GroupDescriptor::CyclicOnWord { symbol: z_symbol.clone(), word: central.clone() },
                    source_image: Word::letter(z_symbol.as_str(), 1),
                    target_image: Word::letter(format!("r_{a}_{b}"), i64::from(*m)),
                    stable_letter: None,
                }
            }
        };
        edges.push(edge);
    }

    Ok(GraphOfGroups { graph: g.clone(), vertices, edges })
}

/// Collapses every loop and every edge with a red endpoint. Black vertices
/// touched by a collapsed edge get back their whole chunk parabolic; red
/// vertices disappear.
pub fn collapse_jsj(j: &GraphOfGroups) -> GraphOfGroups {
    let is_red = |v: usize| j.vertices[v].color == Color::Red;
    let collapsed = |e: &GoGEdge| e.is_loop() || is_red(e.source) || is_red(e.target);
    let mut absorbed = vec![false; j.vertices.len()];
    for e in j.edges.iter().filter(|e| collapsed(e)) {
        absorbed[e.source] = true;
        absorbed[e.target] = true;
    }

    let chunks = big_chunks(&j.graph).ok();
    let chunk_graph = |origin: &Origin| -> Option<LabelledGraph> {
        match origin {
            Origin::Chunk { index } => chunks.as_ref().map(|d| d.chunks[*index].subgraph(&j.graph)),
            Origin::Dihedral => Some(j.graph.clone()),
            _ => None,
        }
    };

    let mut new_index = vec![usize::MAX; j.vertices.len()];
    let mut vertices = Vec::new();
    for (i, v) in j.vertices.iter().enumerate() {
        if is_red(i) {
            continue;
        }
        let mut v = v.clone();
        if absorbed[i] {
            if let Some(chunk) = chunk_graph(&v.origin) {
                v.group = GroupDescriptor::ChunkParabolic { chunk };
            }
        }
        new_index[i] = vertices.len();
        vertices.push(v);
    }
    let edges = j
        .edges
        .iter()
        .filter(|e| !collapsed(e))
        .map(|e| GoGEdge { source: new_index[e.source], target: new_index[e.target], ..e.clone() })
        .collect();
    GraphOfGroups { graph: j.graph.clone(), vertices, edges }
}

/// JSJ splitting of the dihedral Artin group with label `n`, with
/// `y = ab`. Odd `n`: amalgam `<x> *_{x^2 = y^n} <y>`, `x = prod(a, b, n)`.
/// Even `n = 2m >= 4`: HNN extension of `<y>` with stable letter `x = a`
/// fixing `y^m`. Label 2 (`Z^2`) has no JSJ decomposition.
pub fn dihedral_jsj(n: u32) -> Result<GraphOfGroups, JsjError> {
    if n < 2 {
        return Err(JsjError::InvalidLabel(n));
    }
    if n == 2 {
        return Err(JsjError::NoJsjExists);
    }
    let graph = LabelledGraph::from_edges(&[("a", "b", n)]).expect("valid edge");
    let ab = Word::parse("a b").expect("valid word");
    let y = GroupDescriptor::CyclicOnWord { symbol: "y".into(), word: ab.clone() };
    let vertex = |id: &str, group| GoGVertex { id: id.into(), color: Color::Black, group, origin: Origin::Dihedral };

    let (vertices, edges) = if n % 2 == 1 {
        let delta = Word::alternating("a", "b", n);
        let x = GroupDescriptor::CyclicOnWord { symbol: "x".into(), word: delta.clone() };
        let edge = GoGEdge {
            source: 0,
            target: 1,
            edge_group: GroupDescriptor::CyclicOnWord { symbol: "z".into(), word: delta.pow(2) },
            source_image: Word::letter("x", 2),
            target_image: Word::letter("y", i64::from(n)),
            stable_letter: None,
        };
        (vec![vertex("x", x), vertex("y", y)], vec![edge])
    } else {
        let m = i64::from(n / 2);
        let edge = GoGEdge {
            source: 0,
            target: 0,
            edge_group: GroupDescriptor::CyclicOnWord { symbol: "z".into(), word: ab.pow(m) },
            source_image: Word::letter("y", m),
            target_image: Word::letter("y", m),
            stable_letter: Some("x".into()),
        };
        (vec![vertex("y", y)], vec![edge])
    };
    Ok(GraphOfGroups { graph, vertices, edges })
}
