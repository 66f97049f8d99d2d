use super::{GraphError, LabelledGraph};

/// Largest graph accepted by [`canonical_form`].
pub const CANONICAL_FORM_CAP: usize = 12;

/// Canonical byte string of a labelled graph: the lexicographically least
/// encoding, over all vertex orderings, of the vertex count followed by the
/// strict lower triangle of the labelled adjacency matrix (row by row, each
/// entry a big-endian `u32`, `0` for a non-edge).
///
/// Two graphs get the same form iff they are isomorphic as labelled graphs.
/// The search is exhaustive with two exact prunings: a branch whose prefix
/// already exceeds the best encoding is cut, and of two vertices that are
/// interchangeable (same labels towards every other vertex) only one is
/// tried at each position.
pub fn canonical_form(g: &LabelledGraph) -> Result<Vec<u8>, GraphError> {
    let n = g.vertex_count();
    if n > CANONICAL_FORM_CAP {
        return Err(GraphError::CanonicalCapExceeded { cap: CANONICAL_FORM_CAP, found: n });
    }
    let matrix: Vec<Vec<u32>> = (0..n).map(|i| (0..n).map(|j| g.label(i, j).unwrap_or(0)).collect()).collect();
    let twins: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| (0..n).all(|w| w == i || w == j || matrix[i][w] == matrix[j][w])).collect())
        .collect();

    let mut search = Search {
        matrix: &matrix,
        twins: &twins,
        perm: Vec::with_capacity(n),
        used: vec![false; n],
        current: vec![n as u8],
        best: None,
    };
    search.run();
    Ok(search.best.unwrap_or_else(|| vec![0]))
}

struct Search<'a> {
    matrix: &'a [Vec<u32>],
    twins: &'a [Vec<bool>],
    perm: Vec<usize>,
    used: Vec<bool>,
    current: Vec<u8>,
    best: Option<Vec<u8>>,
}

impl Search<'_> {
    fn run(&mut self) {
        let n = self.matrix.len();
        let depth = self.perm.len();
        if depth == n {
            if self.best.as_ref().is_none_or(|b| self.current < *b) {
                self.best = Some(self.current.clone());
            }
            return;
        }
        let mut tried: Vec<usize> = Vec::new();
        for c in 0..n {
            if self.used[c] || tried.iter().any(|&t| self.twins[t][c]) {
                continue;
            }
            tried.push(c);
            let mark = self.current.len();
            for &p in &self.perm {
                self.current.extend_from_slice(&self.matrix[c][p].to_be_bytes());
            }
            let worse = self.best.as_ref().is_some_and(|b| self.current[..] > b[..self.current.len()]);
            if !worse {
                self.perm.push(c);
                self.used[c] = true;
                self.run();
                self.used[c] = false;
                self.perm.pop();
            }
            self.current.truncate(mark);
        }
    }
}
