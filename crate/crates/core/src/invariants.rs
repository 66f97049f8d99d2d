//! Isomorphism invariants of Artin groups read off the JSJ decomposition,
//! certified comparison of two profiles, and the graph criterion for
//! acylindrical hyperbolicity of `Aut(A_Γ)`.

use serde::Serialize;
use serde_json::{json, Value};

use crate::graph::{
    big_chunks, canonical_form, classify_chunk, separating_vertices, ChunkClass, LabelledGraph, VertexId,
};
use crate::jsj::{betti_number, build_jsj, JsjError};
use crate::presentation::{abelianize, artin_presentation, AbelianShape};

/// Invariants of `A_Γ` that any isomorphism must preserve, plus graph-level
/// data that is only reported.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantProfile {
    pub chunk_count: usize,
    pub toral_leaf_count: usize,
    /// Sorted.
    pub braided_leaf_labels: Vec<u32>,
    pub label2_nonleaf_edge_count: usize,
    /// Sorted hex canonical forms of chunks with at least three vertices.
    /// Chunks too large for canonical labelling appear as
    /// `oversize:<vertices>:<edges>`.
    pub bigbig_canonical_forms: Vec<String>,
    /// Sorted.
    pub odd_leaf_labels: Vec<u32>,
    pub abelianization: AbelianShape,
    /// First Betti number of the base graph of `J(Γ)`.
    pub betti: usize,
}

/// Profile of a connected graph on at least three vertices.
pub fn profile(g: &LabelledGraph) -> Result<InvariantProfile, JsjError> {
    let j = build_jsj(g)?;
    let d = big_chunks(g)?;
    let mut toral_leaf_count = 0;
    let mut braided_leaf_labels = Vec::new();
    let mut label2_nonleaf_edge_count = 0;
    let mut bigbig_canonical_forms = Vec::new();
    let mut odd_leaf_labels = Vec::new();
    for c in &d.chunks {
        match classify_chunk(g, c) {
            ChunkClass::ToralLeaf { .. } => toral_leaf_count += 1,
            ChunkClass::BraidedLeaf { label, .. } => braided_leaf_labels.push(label),
            ChunkClass::OddLeaf { label, .. } => odd_leaf_labels.push(label),
            ChunkClass::Label2NonLeafEdge => label2_nonleaf_edge_count += 1,
            ChunkClass::BigBig => {
                let sub = c.subgraph(g);
                let form = match canonical_form(&sub) {
                    Ok(bytes) => bytes.iter().map(|b| format!("{b:02x}")).collect(),
                    Err(_) => format!("oversize:{}:{}", sub.vertex_count(), sub.edge_count()),
                };
                bigbig_canonical_forms.push(form);
            }
            ChunkClass::SingleVertex | ChunkClass::OddNonLeafEdge { .. } | ChunkClass::EvenNonLeafEdge { .. } => {}
        }
    }
    braided_leaf_labels.sort_unstable();
    odd_leaf_labels.sort_unstable();
    bigbig_canonical_forms.sort();

    let abelianization = abelianize(&artin_presentation(g));
    let betti = betti_number(&j);
    assert_eq!(betti, toral_leaf_count, "Betti number of J(Γ) must count toral leaves");
    assert!(abelianization.torsion.is_empty(), "Artin groups have torsion-free abelianization");
    Ok(InvariantProfile {
        chunk_count: d.chunks.len(),
        toral_leaf_count,
        braided_leaf_labels,
        label2_nonleaf_edge_count,
        bigbig_canonical_forms,
        odd_leaf_labels,
        abelianization,
        betti,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ReasonCode {
    ChunkCountMismatch,
    ToralLeafCountMismatch,
    BraidedLeafLabelMismatch,
    Label2NonLeafEdgeCountMismatch,
    AbelianizationMismatch,
}

/// A certified invariant on which the two profiles differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Reason {
    pub code: ReasonCode,
    pub left: Value,
    pub right: Value,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum CompareVerdict {
    /// The groups are not isomorphic; `reasons` is never empty.
    NonIsomorphic { reasons: Vec<Reason> },
    /// No certified invariant distinguishes the groups. This does not mean
    /// they are isomorphic.
    Consistent { notes: Vec<String> },
}

impl CompareVerdict {
    pub fn is_non_isomorphic(&self) -> bool {
        matches!(self, CompareVerdict::NonIsomorphic { .. })
    }

    pub fn reason_codes(&self) -> Vec<ReasonCode> {
        match self {
            CompareVerdict::NonIsomorphic { reasons } => reasons.iter().map(|r| r.code).collect(),
            CompareVerdict::Consistent { .. } => Vec::new(),
        }
    }
}

const INCONCLUSIVE: &str = "inconclusive: graph-level difference, not a certified group invariant";

/// Compares two profiles. Only differences in invariants known to be
/// preserved by group isomorphisms yield `NonIsomorphic`; differences in
/// big-big chunk shapes or odd leaf labels are recorded as notes.
pub fn compare(p: &InvariantProfile, q: &InvariantProfile) -> CompareVerdict {
    let mut reasons = Vec::new();
    let mut check = |code, left: Value, right: Value| {
        if left != right {
            reasons.push(Reason { code, left, right });
        }
    };
    check(ReasonCode::ChunkCountMismatch, json!(p.chunk_count), json!(q.chunk_count));
    check(ReasonCode::ToralLeafCountMismatch, json!(p.toral_leaf_count), json!(q.toral_leaf_count));
    check(ReasonCode::BraidedLeafLabelMismatch, json!(p.braided_leaf_labels), json!(q.braided_leaf_labels));
    check(
        ReasonCode::Label2NonLeafEdgeCountMismatch,
        json!(p.label2_nonleaf_edge_count),
        json!(q.label2_nonleaf_edge_count),
    );
    check(ReasonCode::AbelianizationMismatch, json!(p.abelianization), json!(q.abelianization));
    if !reasons.is_empty() {
        return CompareVerdict::NonIsomorphic { reasons };
    }
    let mut notes = Vec::new();
    if p.bigbig_canonical_forms != q.bigbig_canonical_forms {
        notes.push(format!("bigbig_canonical_forms differ: {INCONCLUSIVE}"));
    }
    if p.odd_leaf_labels != q.odd_leaf_labels {
        notes.push(format!("odd_leaf_labels differ: {INCONCLUSIVE}"));
    }
    CompareVerdict::Consistent { notes }
}

pub const TORSION_FREE_ASSUMPTION: &str = "assuming torsion-free";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AcylindricityVerdict {
    pub acylindrically_hyperbolic: bool,
    /// A separating vertex `s` and a vertex `t` that does not commute with it.
    pub witness: Option<(VertexId, VertexId)>,
    pub reason: String,
    pub assumption: &'static str,
}

/// Whether Γ has a separating vertex `s` that is not central, i.e. some
/// other vertex `t` is not joined to `s` by an edge with label 2. When that
/// happens, and `A_Γ` is torsion-free, `Aut(A_Γ)` is acylindrically
/// hyperbolic.
pub fn aut_acylindrically_hyperbolic(g: &LabelledGraph) -> Result<AcylindricityVerdict, JsjError> {
    g.require_connected()?;
    let separating = separating_vertices(g)?;
    for s in &separating {
        let si = g.index_of(s.as_str()).expect("separating vertex is in the graph");
        let t = (0..g.vertex_count()).find(|&t| t != si && g.label(si, t) != Some(2));
        if let Some(t) = t {
            let t = g.vertices()[t].clone();
            let kind = match g.label(si, g.index_of(t.as_str()).unwrap()) {
                Some(m) => format!("the edge {{{s},{t}}} has label {m}, so they generate a non-abelian dihedral group"),
                None => format!("{s} and {t} are not adjacent, so they generate a free group"),
            };
            return Ok(AcylindricityVerdict {
                acylindrically_hyperbolic: true,
                reason: format!("separating vertex {s} is not central: {kind}"),
                witness: Some((s.clone(), t)),
                assumption: TORSION_FREE_ASSUMPTION,
            });
        }
    }
    let reason = if separating.is_empty() {
        "no separating vertex".to_string()
    } else {
        "every separating vertex is joined to all other vertices by edges with label 2".to_string()
    };
    Ok(AcylindricityVerdict {
        acylindrically_hyperbolic: false,
        witness: None,
        reason,
        assumption: TORSION_FREE_ASSUMPTION,
    })
}
