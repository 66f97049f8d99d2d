use super::{BigChunk, GraphError, LabelledGraph};
use crate::word::Word;

/// The nearest-vertex map from a connected graph onto one of its big chunks.
/// It sends every generator to the unique closest chunk vertex and induces a
/// retraction of the Artin group onto the chunk parabolic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Retraction {
    image: Vec<usize>,
}

impl Retraction {
    /// Computes and validates the map. Fails if some vertex has two nearest
    /// chunk vertices, or if some edge of `g` is not sent to a vertex or to an
    /// edge of the chunk with the same label; either means `chunk` is not a
    /// big chunk.
    pub fn new(g: &LabelledGraph, chunk: &BigChunk) -> Result<Self, GraphError> {
        g.require_connected()?;
        let n = g.vertex_count();
        if chunk.is_empty() || chunk.vertices.iter().any(|&v| v >= n) {
            return Err(GraphError::NotAChunk(Vec::new()));
        }
        let dist: Vec<Vec<usize>> = chunk.vertices.iter().map(|&c| g.distances_from(c)).collect();
        let mut image = vec![0; n];
        for v in 0..n {
            let best = dist.iter().map(|d| d[v]).min().expect("chunk is nonempty");
            let nearest: Vec<usize> =
                (0..chunk.len()).filter(|&i| dist[i][v] == best).map(|i| chunk.vertices[i]).collect();
            if nearest.len() > 1 {
                return Err(GraphError::AmbiguousRetraction {
                    vertex: g.name(v).to_string(),
                    candidates: nearest.iter().map(|&c| g.name(c).to_string()).collect(),
                });
            }
            image[v] = nearest[0];
        }
        for e in g.edges() {
            let (ru, rv) = (image[e.u], image[e.v]);
            if ru != rv && g.label(ru, rv) != Some(e.label) {
                return Err(GraphError::IncompatibleRetraction {
                    u: g.name(e.u).to_string(),
                    v: g.name(e.v).to_string(),
                });
            }
        }
        Ok(Retraction { image })
    }

    pub fn image_of(&self, v: usize) -> usize {
        self.image[v]
    }

    /// Applies the map letter by letter; exponents and word shape are kept.
    pub fn apply(&self, g: &LabelledGraph, w: &Word) -> Result<Word, GraphError> {
        let mut out = Word::new();
        for l in w.letters() {
            let v = g.index_of(&l.symbol).ok_or_else(|| GraphError::UnknownGenerator(l.symbol.clone()))?;
            out.push(g.name(self.image[v]), l.exp);
        }
        Ok(out)
    }
}

/// Rewrites `w` as a word over the chunk's vertices via the nearest-vertex
/// retraction.
pub fn retract_word(g: &LabelledGraph, chunk: &BigChunk, w: &Word) -> Result<Word, GraphError> {
    Retraction::new(g, chunk)?.apply(g, w)
}
