//! Finite presentations, their abelianizations, and the presentation of the
//! fundamental group of a graph of groups.

mod gog;
mod snf;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::LabelledGraph;
use crate::word::{is_valid_symbol, Word, WordError};

pub use gog::gog_presentation;
pub use snf::{smith_normal_form, IntegerMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("relator uses undeclared generator `{0}`")]
    UndeclaredGenerator(String),
    #[error("generator `{0}` declared twice")]
    DuplicateGenerator(String),
    #[error("invalid generator name `{0}`")]
    InvalidGenerator(String),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Word { line: usize, source: WordError },
    #[error("graph of groups has a disconnected base graph")]
    DisconnectedBase,
    #[error("graph of groups has no vertices")]
    EmptyBase,
}

/// `<generators | relators>`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, PresentationError> {
        let mut seen = std::collections::BTreeSet::new();
        for g in &generators {
            if !is_valid_symbol(g) {
                return Err(PresentationError::InvalidGenerator(g.clone()));
            }
            if !seen.insert(g.as_str()) {
                return Err(PresentationError::DuplicateGenerator(g.clone()));
            }
        }
        for r in &relators {
            for l in r.letters() {
                if !seen.contains(l.symbol.as_str()) {
                    return Err(PresentationError::UndeclaredGenerator(l.symbol.clone()));
                }
            }
        }
        Ok(Presentation { generators, relators })
    }

    /// Parses the text form:
    ///
    /// ```text
    /// gen: a b c
    /// rel: a b a b^-1 a^-1 b^-1
    /// ```
    ///
    /// Exactly one `gen:` line, before any `rel:` line; `#` comments and
    /// blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self, PresentationError> {
        let mut generators: Option<Vec<String>> = None;
        let mut relators = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let syntax = |message: &str| PresentationError::Syntax { line: line_no, message: message.into() };
            if let Some(rest) = line.strip_prefix("gen:") {
                if generators.is_some() {
                    return Err(syntax("second `gen:` line"));
                }
                generators = Some(rest.split_whitespace().map(String::from).collect());
            } else if let Some(rest) = line.strip_prefix("rel:") {
                if generators.is_none() {
                    return Err(syntax("`rel:` before `gen:`"));
                }
                relators.push(Word::parse(rest).map_err(|source| PresentationError::Word { line: line_no, source })?);
            } else {
                return Err(syntax("expected `gen:` or `rel:`"));
            }
        }
        let generators =
            generators.ok_or(PresentationError::Syntax { line: 0, message: "missing `gen:` line".into() })?;
        Presentation::new(generators, relators)
    }

    /// Exponent-sum matrix: one row per relator, one column per generator.
    pub fn relation_matrix(&self) -> IntegerMatrix {
        let column: BTreeMap<&str, usize> = self.generators.iter().enumerate().map(|(j, g)| (g.as_str(), j)).collect();
        let mut m = IntegerMatrix::zeros(self.relators.len(), self.generators.len());
        for (i, r) in self.relators.iter().enumerate() {
            for l in r.letters() {
                let j = column[l.symbol.as_str()];
                let x = m.get(i, j) + BigInt::from(l.exp);
                m.set(i, j, x);
            }
        }
        m
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gen: {}", self.generators.join(" "))?;
        for r in &self.relators {
            if r.is_empty() {
                writeln!(f, "rel:")?;
            } else {
                writeln!(f, "rel: {r}")?;
            }
        }
        Ok(())
    }
}

/// Standard presentation of `A_Γ`: one generator per vertex and one relator
/// `prod(a,b,m) prod(b,a,m)^-1` per edge `{a, b}`, `a < b`.
pub fn artin_presentation(g: &LabelledGraph) -> Presentation {
    let generators = g.vertices().iter().map(|v| v.to_string()).collect();
    let relators = g
        .edges()
        .into_iter()
        .map(|e| {
            let (a, b) = (g.name(e.u), g.name(e.v));
            Word::alternating(a, b, e.label).concat(&Word::alternating(b, a, e.label).inverse())
        })
        .collect();
    Presentation { generators, relators }
}

/// `Z^free_rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k` with `t_1 | t_2 | ... | t_k`, all `t_i >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianShape {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianShape {
    pub fn free(rank: usize) -> Self {
        AbelianShape { free_rank: rank, torsion: Vec::new() }
    }
}

impl fmt::Display for AbelianShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

struct TorsionList<'a>(&'a [BigInt]);

impl Serialize for TorsionList<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for t in self.0 {
            match t.to_u64() {
                Some(x) => seq.serialize_element(&x)?,
                None => seq.serialize_element(&t.to_string())?,
            }
        }
        seq.end()
    }
}

impl Serialize for AbelianShape {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("AbelianShape", 2)?;
        s.serialize_field("free_rank", &self.free_rank)?;
        s.serialize_field("torsion", &TorsionList(&self.torsion))?;
        s.end()
    }
}

/// Abelianization via the Smith normal form of the exponent-sum matrix.
pub fn abelianize(p: &Presentation) -> AbelianShape {
    let factors = smith_normal_form(&p.relation_matrix());
    let nonzero = factors.iter().filter(|d| !d.is_zero()).count();
    AbelianShape {
        free_rank: p.generators.len() - nonzero,
        torsion: factors.into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect(),
    }
}

pub fn shapes_equal(a: &AbelianShape, b: &AbelianShape) -> bool {
    a == b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn single_edge_presentations() {
        let g = LabelledGraph::from_edges(&[("a", "b", 3)]).unwrap();
        assert_eq!(artin_presentation(&g).to_string(), "gen: a b\nrel: a b a b^-1 a^-1 b^-1\n");
        let g = LabelledGraph::from_edges(&[("a", "b", 2)]).unwrap();
        assert_eq!(artin_presentation(&g).to_string(), "gen: a b\nrel: a b a^-1 b^-1\n");
        let g = LabelledGraph::new(["a", "b"], &[]).unwrap();
        assert_eq!(artin_presentation(&g).to_string(), "gen: a b\n");
    }

    #[test]
    fn abelianization_examples() {
        assert_eq!(abelianize(&artin_presentation(&p3())), AbelianShape::free(2));
        assert_eq!(abelianize(&artin_presentation(&tri())), AbelianShape::free(1));
        let cyclic = Presentation::parse("gen: x\nrel: x^3").unwrap();
        assert_eq!(abelianize(&cyclic), AbelianShape { free_rank: 0, torsion: vec![BigInt::from(3)] });
        assert_eq!(abelianize(&artin_presentation(&triangle_leaves())), AbelianShape::free(4));
    }

    #[test]
    fn torsion_chain() {
        let p = Presentation::parse("gen: x y z\nrel: x^2\nrel: y^6\nrel: x y x^-1 y^-1").unwrap();
        let s = abelianize(&p);
        assert_eq!(s.free_rank, 1);
        assert_eq!(s.torsion, vec![BigInt::from(2), BigInt::from(6)]);
        assert_eq!(s.to_string(), "Z + Z/2 + Z/6");
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"{"free_rank":1,"torsion":[2,6]}"#);
    }

    #[test]
    fn shape_comparison() {
        assert!(shapes_equal(&AbelianShape::free(2), &AbelianShape::free(2)));
        assert!(!shapes_equal(&AbelianShape::free(1), &AbelianShape::free(2)));
        let t = AbelianShape { free_rank: 0, torsion: vec![BigInt::from(2), BigInt::from(6)] };
        assert!(shapes_equal(&t, &t.clone()));
    }

    #[test]
    fn text_format() {
        let p = Presentation::parse("# comment\ngen: x y\n\nrel: x^2 y^-3\n").unwrap();
        assert_eq!(p.relators.len(), 1);
        assert_eq!(Presentation::parse(&p.to_string()).unwrap(), p);
        assert!(matches!(Presentation::parse("rel: x"), Err(PresentationError::Syntax { line: 1, .. })));
        assert!(matches!(Presentation::parse("gen: x\nrel: y"), Err(PresentationError::UndeclaredGenerator(_))));
        assert!(matches!(Presentation::parse("gen: x x"), Err(PresentationError::DuplicateGenerator(_))));
        assert!(matches!(Presentation::parse("gen: x\ngen: y"), Err(PresentationError::Syntax { line: 2, .. })));
        assert!(matches!(Presentation::parse("gen: x\nrel: x^0"), Err(PresentationError::Word { line: 2, .. })));
        assert!(Presentation::parse("").is_err());
        let empty_rel = Presentation::parse("gen: x\nrel:").unwrap();
        assert_eq!(empty_rel.relators, vec![Word::new()]);
        assert_eq!(empty_rel.to_string(), "gen: x\nrel:\n");
    }
}
