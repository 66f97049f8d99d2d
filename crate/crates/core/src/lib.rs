//! Cyclic splittings, JSJ decompositions, and isomorphism invariants of
//! Artin groups, computed from their labelled defining graphs.

pub mod dihedral;
pub mod graph;
pub mod invariants;
pub mod jsj;
pub mod presentation;
pub mod split;
pub mod word;

pub use graph::{LabelledGraph, VertexId};
pub use word::{GeneratorWord, Letter, Word};
