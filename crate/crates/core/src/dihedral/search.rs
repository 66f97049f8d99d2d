use std::collections::HashSet;

use num_integer::Integer;
use serde::Serialize;

use super::{internal_normal_form, membership_of_form, normal_form, DihedralError, DihedralNormalForm, DihedralWord};
use crate::word::Word;

/// A word `w` and degree `k` such that `w^k = a^i z^j` is primitive in `⟨a, z⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootCounterexample {
    pub word: DihedralWord,
    pub degree: u32,
    pub power: (i64, i64),
}

/// `(ab)^m = z`, the root of degree exactly `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootWitness {
    pub word: DihedralWord,
    pub degree: u32,
    pub power: Option<(i64, i64)>,
    pub primitive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootSearchReport {
    pub n: u32,
    pub max_length: usize,
    pub max_degree: u32,
    /// Freely reduced words enumerated, including the empty word.
    pub words_enumerated: usize,
    /// Distinct group elements among them.
    pub distinct_elements: usize,
    pub counterexamples: Vec<RootCounterexample>,
    pub witness: RootWitness,
}

fn is_primitive((i, j): (i64, i64)) -> bool {
    i.gcd(&j) == 1
}

fn power_form(n: u32, f: &DihedralNormalForm, k: u32) -> DihedralNormalForm {
    let w = f.to_internal_word().pow(i64::from(k));
    internal_normal_form(n, &w).expect("powers of short words stay within limits")
}

/// All freely reduced words over `a^±1`, `b^±1` of length at most `max_length`,
/// shortest first, each length in lexicographic order of `a, a^-1, b, b^-1`.
fn freely_reduced_words(max_length: usize) -> Vec<Vec<(u8, i8)>> {
    const LETTERS: [(u8, i8); 4] = [(b'a', 1), (b'a', -1), (b'b', 1), (b'b', -1)];
    let mut all = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_length {
        let mut next = Vec::new();
        for w in &frontier {
            for l in LETTERS {
                if w.last() != Some(&(l.0, -l.1)) {
                    let mut v: Vec<(u8, i8)> = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

/// Searches for roots of primitive elements of `⟨a, z⟩` of degree above `m`
/// in the dihedral Artin group with label `n = 2m`.
///
/// Every freely reduced word of length at most `max_length` is tried with
/// every degree `m < k <= max_degree`; words are deduplicated by normal form
/// first. Also checks that `ab` is a root of degree `m` of the primitive
/// element `z`.
pub fn root_bound_search(n: u32, max_length: usize, max_degree: u32) -> Result<RootSearchReport, DihedralError> {
    if n % 2 == 1 {
        return Err(DihedralError::WrongParity(n, "label must be even"));
    }
    if n < 4 {
        return Err(DihedralError::WrongParity(n, "label must be at least 4"));
    }
    let m = n / 2;
    let words = freely_reduced_words(max_length);
    let mut seen = HashSet::new();
    let mut counterexamples = Vec::new();
    for letters in &words {
        let word = Word(
            letters.iter().map(|&(s, e)| crate::word::Letter::new((s as char).to_string(), i64::from(e))).collect(),
        );
        let w = DihedralWord::new(n, word)?;
        let f = normal_form(&w);
        if !seen.insert(f.clone()) {
            continue;
        }
        for k in m + 1..=max_degree {
            if let Some(power) = membership_of_form(&power_form(n, &f, k)) {
                if is_primitive(power) {
                    counterexamples.push(RootCounterexample { word: w.clone(), degree: k, power });
                }
            }
        }
    }

    let r = DihedralWord::parse(n, "a b")?;
    let power = membership_of_form(&power_form(n, &normal_form(&r), m));
    let witness = RootWitness { word: r, degree: m, power, primitive: power.is_some_and(is_primitive) };
    Ok(RootSearchReport {
        n,
        max_length,
        max_degree,
        words_enumerated: words.len(),
        distinct_elements: seen.len(),
        counterexamples,
        witness,
    })
}
