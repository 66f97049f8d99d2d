//! The word problem in dihedral Artin groups `⟨a, b | prod(a,b,n) = prod(b,a,n)⟩`.
//!
//! Odd labels are handled through the amalgam `⟨x, y | x^2 = y^n⟩` with
//! `y = ab`, `x = prod(a,b,n)`; even labels `n = 2m` through the HNN extension
//! `⟨x, y | x y^m x^-1 = y^m⟩` with `x = a`, `y = ab`. Label 2 is `Z^2`.

mod search;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::word::{Word, WordError};

pub use search::{root_bound_search, RootCounterexample, RootSearchReport, RootWitness};

/// Largest total exponent accepted in a dihedral word. Normal forms grow
/// linearly with it, so this bounds memory.
pub const MAX_WORD_LENGTH: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DihedralError {
    #[error("dihedral label must be at least 2, got {0}")]
    LabelTooSmall(u32),
    #[error("label {0} is not supported here: {1}")]
    WrongParity(u32, &'static str),
    #[error("unknown letter `{0}`; dihedral words use `a` and `b`")]
    UnknownLetter(String),
    #[error("labels differ: {0} and {1}")]
    LabelMismatch(u32, u32),
    #[error("word length {0} exceeds the limit of {MAX_WORD_LENGTH}")]
    TooLong(u64),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// A word over `a`, `b` in the dihedral Artin group with label `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DihedralWord {
    n: u32,
    word: Word,
}

impl DihedralWord {
    pub fn new(n: u32, word: Word) -> Result<Self, DihedralError> {
        if n < 2 {
            return Err(DihedralError::LabelTooSmall(n));
        }
        if let Some(l) = word.letters().iter().find(|l| l.symbol != "a" && l.symbol != "b") {
            return Err(DihedralError::UnknownLetter(l.symbol.clone()));
        }
        if word.length() > MAX_WORD_LENGTH {
            return Err(DihedralError::TooLong(word.length()));
        }
        Ok(DihedralWord { n, word })
    }

    pub fn parse(n: u32, text: &str) -> Result<Self, DihedralError> {
        DihedralWord::new(n, Word::parse(text)?)
    }

    pub fn label(&self) -> u32 {
        self.n
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn concat(&self, other: &DihedralWord) -> Result<DihedralWord, DihedralError> {
        same_label(self, other)?;
        DihedralWord::new(self.n, self.word.concat(&other.word))
    }

    pub fn inverse(&self) -> DihedralWord {
        DihedralWord { n: self.n, word: self.word.inverse() }
    }

    pub fn pow(&self, k: i64) -> Result<DihedralWord, DihedralError> {
        DihedralWord::new(self.n, self.word.pow(k))
    }
}

impl fmt::Display for DihedralWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            f.write_str("1")
        } else {
            self.word.fmt(f)
        }
    }
}

fn same_label(u: &DihedralWord, v: &DihedralWord) -> Result<(), DihedralError> {
    if u.n == v.n {
        Ok(())
    } else {
        Err(DihedralError::LabelMismatch(u.n, v.n))
    }
}

/// Rewrites a word over `a`, `b` in the generators `x`, `y`.
pub fn to_internal(w: &DihedralWord) -> Result<Word, DihedralError> {
    let n = w.n;
    if n < 3 {
        return Err(DihedralError::LabelTooSmall(n));
    }
    let (a, b) = if n % 2 == 1 {
        let h = i64::from(n - 1) / 2;
        (Word(vec![letter("y", -h), letter("x", 1)]), Word(vec![letter("x", -1), letter("y", h + 1)]))
    } else {
        (Word::letter("x", 1), Word(vec![letter("x", -1), letter("y", 1)]))
    };
    Ok(w.word.substitute(|s| if s == "a" { a.clone() } else { b.clone() }))
}

fn letter(s: &str, e: i64) -> crate::word::Letter {
    crate::word::Letter::new(s, e)
}

/// Syllable of the odd normal form: `x`, or `y^j` with `1 <= j < n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OddSyllable {
    X,
    Y(u32),
}

impl fmt::Display for OddSyllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OddSyllable::X => f.write_str("x"),
            OddSyllable::Y(1) => f.write_str("y"),
            OddSyllable::Y(j) => write!(f, "y^{j}"),
        }
    }
}

impl Serialize for OddSyllable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `c^central` times alternating syllables, where `c = x^2 = y^n` is central.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct OddNormalForm {
    pub n: u32,
    pub central: i64,
    pub syllables: Vec<OddSyllable>,
}

/// `y^{s_0} x^{e_1} y^{s_1} ... x^{e_l} y^{s_l}` with `0 <= s_i < m` for
/// `i < l`, `e_i = ±1`, and no pinch `x^e x^-e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct EvenNormalForm {
    pub n: u32,
    pub y_exponents: Vec<i64>,
    pub x_signs: Vec<i8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "form", rename_all = "lowercase")]
pub enum DihedralNormalForm {
    /// Label 2: `a^a b^b`.
    Abelian {
        a: i64,
        b: i64,
    },
    Odd(OddNormalForm),
    Even(EvenNormalForm),
}

impl DihedralNormalForm {
    pub fn label(&self) -> u32 {
        match self {
            DihedralNormalForm::Abelian { .. } => 2,
            DihedralNormalForm::Odd(f) => f.n,
            DihedralNormalForm::Even(f) => f.n,
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            DihedralNormalForm::Abelian { a, b } => *a == 0 && *b == 0,
            DihedralNormalForm::Odd(f) => f.central == 0 && f.syllables.is_empty(),
            DihedralNormalForm::Even(f) => f.x_signs.is_empty() && f.y_exponents == [0],
        }
    }

    /// The normal form written over `x`, `y` (over `a`, `b` for label 2).
    pub fn to_internal_word(&self) -> Word {
        let mut w = Word::new();
        match self {
            DihedralNormalForm::Abelian { a, b } => {
                w.push("a", *a);
                w.push("b", *b);
            }
            DihedralNormalForm::Odd(f) => {
                w.push("x", 2 * f.central);
                for s in &f.syllables {
                    match s {
                        OddSyllable::X => w.push("x", 1),
                        OddSyllable::Y(j) => w.push("y", i64::from(*j)),
                    }
                }
            }
            DihedralNormalForm::Even(f) => {
                for (i, s) in f.y_exponents.iter().enumerate() {
                    if i > 0 {
                        w.push("x", i64::from(f.x_signs[i - 1]));
                    }
                    w.push("y", *s);
                }
            }
        }
        w.free_reduce()
    }

    /// The normal form read back as a word over `a`, `b`.
    pub fn to_word(&self) -> DihedralWord {
        let n = self.label();
        let y = Word::alternating("a", "b", 2);
        let x = if n % 2 == 1 { Word::alternating("a", "b", n) } else { Word::letter("a", 1) };
        let word = match self {
            DihedralNormalForm::Abelian { .. } => self.to_internal_word(),
            _ => self.to_internal_word().substitute(|s| if s == "x" { x.clone() } else { y.clone() }),
        };
        DihedralWord { n, word }
    }
}

impl fmt::Display for DihedralNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if let DihedralNormalForm::Odd(o) = self {
            match o.central {
                0 => {}
                1 => parts.push("c".into()),
                k => parts.push(format!("c^{k}")),
            }
            parts.extend(o.syllables.iter().map(|s| s.to_string()));
        } else {
            parts.extend(self.to_internal_word().letters().iter().map(|l| l.to_string()));
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// Accumulates a normal form while letters are multiplied on the right.
struct Machine {
    n: u32,
    central: i64,
    odd: Vec<OddSyllable>,
    even: Vec<EvenItem>,
    abelian: (i64, i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum EvenItem {
    X(i8),
    Y(i64),
}

impl Machine {
    fn new(n: u32) -> Self {
        Machine { n, central: 0, odd: Vec::new(), even: Vec::new(), abelian: (0, 0) }
    }

    fn m(&self) -> i64 {
        i64::from(self.n / 2)
    }

    fn push_x(&mut self, e: i64) {
        if self.n % 2 == 1 {
            let t = if self.odd.last() == Some(&OddSyllable::X) {
                self.odd.pop();
                1 + e
            } else {
                e
            };
            self.central += t.div_euclid(2);
            if t.rem_euclid(2) == 1 {
                self.odd.push(OddSyllable::X);
            }
        } else {
            let sign = e.signum() as i8;
            for _ in 0..e.unsigned_abs() {
                if self.even.last() == Some(&EvenItem::X(-sign)) {
                    self.even.pop();
                } else {
                    self.even.push(EvenItem::X(sign));
                }
            }
        }
    }

    fn push_y(&mut self, e: i64) {
        if self.n % 2 == 1 {
            let n = i64::from(self.n);
            let t = match self.odd.last() {
                Some(&OddSyllable::Y(j)) => {
                    self.odd.pop();
                    i64::from(j) + e
                }
                _ => e,
            };
            self.central += t.div_euclid(n);
            let r = t.rem_euclid(n);
            if r != 0 {
                self.odd.push(OddSyllable::Y(r as u32));
            }
        } else {
            let m = self.m();
            let t = match self.even.last() {
                Some(&EvenItem::Y(s)) => {
                    self.even.pop();
                    s + e
                }
                _ => e,
            };
            self.central += t.div_euclid(m);
            let r = t.rem_euclid(m);
            if r != 0 {
                self.even.push(EvenItem::Y(r));
            }
        }
    }

    fn finish(self) -> DihedralNormalForm {
        if self.n == 2 {
            return DihedralNormalForm::Abelian { a: self.abelian.0, b: self.abelian.1 };
        }
        if self.n % 2 == 1 {
            return DihedralNormalForm::Odd(OddNormalForm { n: self.n, central: self.central, syllables: self.odd });
        }
        let m = self.m();
        let mut y_exponents = Vec::new();
        let mut x_signs = Vec::new();
        let mut current = 0;
        for item in &self.even {
            match *item {
                EvenItem::Y(s) => current = s,
                EvenItem::X(e) => {
                    y_exponents.push(current);
                    x_signs.push(e);
                    current = 0;
                }
            }
        }
        y_exponents.push(current + self.central * m);
        DihedralNormalForm::Even(EvenNormalForm { n: self.n, y_exponents, x_signs })
    }
}

/// Normal form of a word over `x`, `y` in the internal presentation for
/// label `n >= 3`, or over `a`, `b` when `n = 2`.
pub fn internal_normal_form(n: u32, w: &Word) -> Result<DihedralNormalForm, DihedralError> {
    if n < 2 {
        return Err(DihedralError::LabelTooSmall(n));
    }
    let (first, second) = if n == 2 { ("a", "b") } else { ("x", "y") };
    let mut machine = Machine::new(n);
    let mut x_length: u64 = 0;
    for l in w.letters() {
        if l.symbol == first {
            x_length += l.exp.unsigned_abs();
            if x_length > MAX_WORD_LENGTH {
                return Err(DihedralError::TooLong(x_length));
            }
            if n == 2 {
                machine.abelian.0 += l.exp;
            } else {
                machine.push_x(l.exp);
            }
        } else if l.symbol == second {
            if n == 2 {
                machine.abelian.1 += l.exp;
            } else {
                machine.push_y(l.exp);
            }
        } else {
            return Err(DihedralError::UnknownLetter(l.symbol.clone()));
        }
    }
    Ok(machine.finish())
}

pub fn normal_form(w: &DihedralWord) -> DihedralNormalForm {
    let internal = if w.n == 2 { w.word.clone() } else { to_internal(w).expect("label checked") };
    internal_normal_form(w.n, &internal).expect("letters and length checked on construction")
}

pub fn words_equal(u: &DihedralWord, v: &DihedralWord) -> Result<bool, DihedralError> {
    same_label(u, v)?;
    Ok(normal_form(u) == normal_form(v))
}

/// Whether `w` commutes with both `a` and `b`.
pub fn is_central(w: &DihedralWord) -> bool {
    ["a", "b"].iter().all(|g| {
        let g = DihedralWord { n: w.n, word: Word::letter(*g, 1) };
        let left = DihedralWord { n: w.n, word: w.word.concat(&g.word) };
        let right = DihedralWord { n: w.n, word: g.word.concat(&w.word) };
        normal_form(&left) == normal_form(&right)
    })
}

/// The Garside element `Δ = prod(a,b,n)` and the centre generator `z`
/// (`Δ` for even `n`, `Δ^2` for odd `n`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GarsideData {
    pub n: u32,
    pub delta: DihedralWord,
    pub z: DihedralWord,
}

pub fn garside(n: u32) -> Result<GarsideData, DihedralError> {
    let delta = DihedralWord::new(n, Word::alternating("a", "b", n))?;
    let z = if n.is_multiple_of(2) { delta.clone() } else { delta.pow(2)? };
    assert!(is_central(&z), "z must be central for label {n}");
    Ok(GarsideData { n, delta, z })
}

/// For odd `n`: whether `Δ a Δ^-1 = b`.
pub fn delta_conjugates_generators(n: u32) -> Result<bool, DihedralError> {
    if n.is_multiple_of(2) {
        return Err(DihedralError::WrongParity(n, "label must be odd"));
    }
    let delta = garside(n)?.delta;
    let a = DihedralWord::parse(n, "a")?;
    let b = DihedralWord::parse(n, "b")?;
    let conjugate = delta.concat(&a)?.concat(&delta.inverse())?;
    words_equal(&conjugate, &b)
}

/// For even `n`: `(i, j)` with `w = a^i z^j`, if `w` lies in `⟨a, z⟩`.
pub fn membership_a_z(w: &DihedralWord) -> Result<Option<(i64, i64)>, DihedralError> {
    if w.n % 2 == 1 {
        return Err(DihedralError::WrongParity(w.n, "label must be even"));
    }
    Ok(membership_of_form(&normal_form(w)))
}

fn membership_of_form(nf: &DihedralNormalForm) -> Option<(i64, i64)> {
    match nf {
        // In Z^2, z = ab.
        DihedralNormalForm::Abelian { a, b } => Some((a - b, *b)),
        DihedralNormalForm::Even(f) => {
            let m = i64::from(f.n / 2);
            let (last, inner) = f.y_exponents.split_last().expect("at least one exponent");
            let sign = f.x_signs.first().copied().unwrap_or(1);
            let pure_x = inner.iter().all(|&s| s == 0) && f.x_signs.iter().all(|&e| e == sign);
            if pure_x && last % m == 0 {
                Some((i64::from(sign) * f.x_signs.len() as i64, last / m))
            } else {
                None
            }
        }
        DihedralNormalForm::Odd(_) => None,
    }
}
