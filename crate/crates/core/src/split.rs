//! Whether the Artin group splits over a cyclic subgroup, with a witness.
//!
//! On a connected graph with at least three vertices the group splits over
//! a (virtually) cyclic subgroup exactly when the graph has a separating
//! vertex, and then the splitting is visual. Graphs on at most two vertices
//! and disconnected graphs always split over `Z`.

use std::collections::{BTreeSet, VecDeque};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use serde_json::json;

use crate::graph::{big_chunks, GraphError, LabelledGraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Ends {
    OneEnded,
    MoreThanOneEnd,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitKind {
    /// Connected, at least three vertices, no separating vertex.
    NoSplit,
    /// `A_left *_<vertex> A_right`.
    VisualSplit { vertex: VertexId, left: Vec<VertexId>, right: Vec<VertexId> },
    /// Single edge with label at least 3.
    DihedralSplit { label: u32 },
    /// Single edge with label 2: `Z^2` is an HNN extension of `Z`.
    AbelianRankTwo,
    /// Disconnected, at least three vertices: free product of the components.
    FreeProductSplit { components: Vec<Vec<VertexId>> },
    /// Two isolated vertices: `F_2 = <a, b, t | t a t^-1 = b>`.
    FreeRankTwo,
    /// A single vertex. No claim about splittings over `Z` is made.
    InfiniteCyclic,
}

impl SplitKind {
    pub fn tag(&self) -> &'static str {
        match self {
            SplitKind::NoSplit => "NoSplit",
            SplitKind::VisualSplit { .. } => "VisualSplit",
            SplitKind::DihedralSplit { .. } => "DihedralSplit",
            SplitKind::AbelianRankTwo => "AbelianRankTwo",
            SplitKind::FreeProductSplit { .. } => "FreeProductSplit",
            SplitKind::FreeRankTwo => "FreeRankTwo",
            SplitKind::InfiniteCyclic => "InfiniteCyclic",
        }
    }

    /// Whether the verdict asserts a splitting over `Z`.
    pub fn splits(&self) -> bool {
        !matches!(self, SplitKind::NoSplit | SplitKind::InfiniteCyclic)
    }

    fn witness(&self) -> serde_json::Value {
        match self {
            SplitKind::VisualSplit { vertex, left, right } => {
                json!({ "vertex": vertex, "left": left, "right": right })
            }
            SplitKind::DihedralSplit { label } => json!({ "label": label }),
            SplitKind::FreeProductSplit { components } => json!({ "components": components }),
            _ => serde_json::Value::Null,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitVerdict {
    pub kind: SplitKind,
    pub ends: Ends,
}

impl Serialize for SplitVerdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SplitVerdict", 3)?;
        s.serialize_field("verdict", self.kind.tag())?;
        s.serialize_field("witness", &self.kind.witness())?;
        s.serialize_field("ends", &self.ends)?;
        s.end()
    }
}

pub fn splits_over_cyclic(g: &LabelledGraph) -> Result<SplitVerdict, GraphError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(GraphError::Empty);
    }
    let ids = |vs: &[usize]| -> Vec<VertexId> { vs.iter().map(|&v| g.vertices()[v].clone()).collect() };
    let components = g.components();
    let (kind, ends) = if n == 1 {
        (SplitKind::InfiniteCyclic, Ends::MoreThanOneEnd)
    } else if components.len() > 1 {
        if n == 2 {
            (SplitKind::FreeRankTwo, Ends::MoreThanOneEnd)
        } else {
            let components = components.iter().map(|c| ids(c)).collect();
            (SplitKind::FreeProductSplit { components }, Ends::MoreThanOneEnd)
        }
    } else if n == 2 {
        let label = g.label(0, 1).expect("connected two-vertex graph is an edge");
        if label == 2 {
            (SplitKind::AbelianRankTwo, Ends::OneEnded)
        } else {
            (SplitKind::DihedralSplit { label }, Ends::OneEnded)
        }
    } else {
        match visual_split(g)? {
            None => (SplitKind::NoSplit, Ends::OneEnded),
            Some((v, left, right)) => (
                SplitKind::VisualSplit { vertex: g.vertices()[v].clone(), left: ids(&left), right: ids(&right) },
                Ends::OneEnded,
            ),
        }
    };
    Ok(SplitVerdict { kind, ends })
}

/// Separating vertex index with the two vertex sets of a visual splitting.
type Sides = (usize, Vec<usize>, Vec<usize>);

/// Visual splitting over the least separating vertex `v`: the left side is
/// the union of the chunks reachable from the first chunk in the block-cut
/// tree once `v` is deleted, the right side is everything else plus `v`.
fn visual_split(g: &LabelledGraph) -> Result<Option<Sides>, GraphError> {
    let d = big_chunks(g)?;
    let Some(&v) = d.separating.first() else {
        return Ok(None);
    };
    let mut reached = vec![false; d.chunks.len()];
    reached[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        for &s in &d.chunks[c].vertices {
            if s == v {
                continue;
            }
            for &next in d.incidence.get(&s).into_iter().flatten() {
                if !reached[next] {
                    reached[next] = true;
                    queue.push_back(next);
                }
            }
        }
    }
    let left: BTreeSet<usize> =
        (0..d.chunks.len()).filter(|&c| reached[c]).flat_map(|c| d.chunks[c].vertices.iter().copied()).collect();
    let right: Vec<usize> = (0..g.vertex_count()).filter(|u| *u == v || !left.contains(u)).collect();
    Ok(Some((v, left.into_iter().collect(), right)))
}

/// Checks a visual-splitting witness: the sides overlap exactly in `v`,
/// cover the graph, are proper, induce connected subgraphs, and no edge
/// joins `left - v` to `right - v`.
pub fn is_valid_visual_split(g: &LabelledGraph, v: &str, left: &[VertexId], right: &[VertexId]) -> bool {
    let index = |xs: &[VertexId]| -> Option<BTreeSet<usize>> { xs.iter().map(|x| g.index_of(x.as_str())).collect() };
    let (Some(v), Some(l), Some(r)) = (g.index_of(v), index(left), index(right)) else {
        return false;
    };
    let n = g.vertex_count();
    let overlap: Vec<usize> = l.intersection(&r).copied().collect();
    if overlap != [v] || l.union(&r).count() != n || l.len() == n || r.len() == n {
        return false;
    }
    for side in [&l, &r] {
        let vs: Vec<usize> = side.iter().copied().collect();
        if !g.induced(&vs).is_connected() {
            return false;
        }
    }
    g.edges().iter().all(|e| {
        let crosses = |a: usize, b: usize| a != v && b != v && l.contains(&a) && !l.contains(&b);
        !crosses(e.u, e.v) && !crosses(e.v, e.u)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    fn names(v: &[VertexId]) -> Vec<&str> {
        v.iter().map(|x| x.as_str()).collect()
    }

    #[test]
    fn triangle_does_not_split() {
        let verdict = splits_over_cyclic(&tri()).unwrap();
        assert_eq!(verdict, SplitVerdict { kind: SplitKind::NoSplit, ends: Ends::OneEnded });
    }

    #[test]
    fn path_splits_visually_over_middle_vertex() {
        let g = p3();
        let verdict = splits_over_cyclic(&g).unwrap();
        let SplitKind::VisualSplit { vertex, left, right } = &verdict.kind else { panic!("{verdict:?}") };
        assert_eq!(vertex.as_str(), "b");
        assert_eq!(names(left), ["a", "b"]);
        assert_eq!(names(right), ["b", "c"]);
        assert!(is_valid_visual_split(&g, "b", left, right));
        assert_eq!(verdict.ends, Ends::OneEnded);
    }

    #[test]
    fn small_and_disconnected_cases() {
        let edge = |l| LabelledGraph::from_edges(&[("a", "b", l)]).unwrap();
        assert_eq!(splits_over_cyclic(&edge(5)).unwrap().kind, SplitKind::DihedralSplit { label: 5 });
        assert_eq!(splits_over_cyclic(&edge(2)).unwrap().kind, SplitKind::AbelianRankTwo);
        let two = LabelledGraph::new(["a", "b"], &[]).unwrap();
        let v = splits_over_cyclic(&two).unwrap();
        assert_eq!(v, SplitVerdict { kind: SplitKind::FreeRankTwo, ends: Ends::MoreThanOneEnd });
        let one = LabelledGraph::new(["a"], &[]).unwrap();
        let v = splits_over_cyclic(&one).unwrap();
        assert_eq!(v, SplitVerdict { kind: SplitKind::InfiniteCyclic, ends: Ends::MoreThanOneEnd });
        let three = LabelledGraph::new(["a", "b", "c"], &[("a", "b", 3)]).unwrap();
        let v = splits_over_cyclic(&three).unwrap();
        let SplitKind::FreeProductSplit { components } = &v.kind else { panic!() };
        assert_eq!(components.len(), 2);
        assert_eq!(v.ends, Ends::MoreThanOneEnd);
        let empty = LabelledGraph::new(Vec::<String>::new(), &[]).unwrap();
        assert_eq!(splits_over_cyclic(&empty), Err(GraphError::Empty));
    }

    #[test]
    fn witness_when_first_chunk_avoids_vertex() {
        // Chunks: {a,b}, {b,c}, {c,d}; least separating vertex is b.
        let g = LabelledGraph::from_edges(&[("a", "b", 2), ("b", "c", 3), ("c", "d", 4)]).unwrap();
        let v = splits_over_cyclic(&g).unwrap();
        let SplitKind::VisualSplit { vertex, left, right } = &v.kind else { panic!() };
        assert_eq!(vertex.as_str(), "b");
        assert_eq!(names(left), ["a", "b"]);
        assert_eq!(names(right), ["b", "c", "d"]);
        // Star centred at a later vertex, first chunk not containing it.
        let g = LabelledGraph::from_edges(&[("a", "m", 2), ("m", "z", 3), ("m", "y", 3), ("b", "a", 3)]).unwrap();
        let v = splits_over_cyclic(&g).unwrap();
        let SplitKind::VisualSplit { vertex, left, right } = &v.kind else { panic!() };
        assert_eq!(vertex.as_str(), "a");
        assert!(is_valid_visual_split(&g, "a", left, right));
    }

    #[test]
    fn invalid_witnesses_are_rejected() {
        let g = p3();
        let ids = |xs: &[&str]| xs.iter().map(|x| VertexId::new(*x).unwrap()).collect::<Vec<_>>();
        assert!(!is_valid_visual_split(&g, "b", &ids(&["a", "b", "c"]), &ids(&["b"])));
        assert!(!is_valid_visual_split(&g, "a", &ids(&["a", "b"]), &ids(&["a", "c"])));
        assert!(!is_valid_visual_split(&tri(), "a", &ids(&["a", "b"]), &ids(&["a", "c"])));
    }

    #[test]
    fn json_shape() {
        let text = serde_json::to_string(&splits_over_cyclic(&p3()).unwrap()).unwrap();
        assert_eq!(
            text,
            r#"{"verdict":"VisualSplit","witness":{"left":["a","b"],"right":["b","c"],"vertex":"b"},"ends":"OneEnded"}"#
        );
    }
}
