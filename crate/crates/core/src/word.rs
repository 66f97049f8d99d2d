//! Words over named generators, written as whitespace-separated tokens
//! `a`, `a^-1`, `b^3`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("token {position}: empty generator name in `{token}`")]
    EmptySymbol { position: usize, token: String },
    #[error("token {position}: invalid generator name in `{token}` (allowed: [A-Za-z0-9_])")]
    InvalidSymbol { position: usize, token: String },
    #[error("token {position}: invalid exponent in `{token}`")]
    InvalidExponent { position: usize, token: String },
    #[error("token {position}: zero exponent in `{token}`")]
    ZeroExponent { position: usize, token: String },
    #[error("token {position}: exponent in `{token}` exceeds {MAX_EXPONENT} in absolute value")]
    ExponentTooLarge { position: usize, token: String },
}

/// Largest exponent magnitude accepted by the parser. Keeps every exponent
/// sum formed from parsed words far inside `i64`.
pub const MAX_EXPONENT: i64 = 1_000_000_000;

pub(crate) fn is_valid_symbol(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

/// One syllable `symbol^exp` with `exp != 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub symbol: String,
    pub exp: i64,
}

impl Letter {
    pub fn new(symbol: impl Into<String>, exp: i64) -> Self {
        Letter { symbol: symbol.into(), exp }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 1 {
            write!(f, "{}", self.symbol)
        } else {
            write!(f, "{}^{}", self.symbol, self.exp)
        }
    }
}

/// A word in a free group. Adjacent letters over the same symbol are allowed;
/// nothing is reduced unless [`Word::free_reduce`] is called.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

/// Words over the vertices of a defining graph.
pub type GeneratorWord = Word;

impl Word {
    pub fn new() -> Self {
        Word(Vec::new())
    }

    pub fn letter(symbol: impl Into<String>, exp: i64) -> Self {
        if exp == 0 {
            return Word::new();
        }
        Word(vec![Letter::new(symbol, exp)])
    }

    /// `prod(u, v, n)`: the length-`n` prefix of `u v u v ...`.
    pub fn alternating(u: &str, v: &str, n: u32) -> Word {
        Word((0..n).map(|i| Letter::new(if i % 2 == 0 { u } else { v }, 1)).collect())
    }

    pub fn parse(text: &str) -> Result<Self, WordError> {
        let mut letters = Vec::new();
        for (position, token) in text.split_whitespace().enumerate() {
            let (symbol, exp) = match token.split_once('^') {
                Some((s, e)) => {
                    let exp = e
                        .parse::<i64>()
                        .map_err(|_| WordError::InvalidExponent { position, token: token.to_string() })?;
                    (s, exp)
                }
                None => (token, 1),
            };
            if symbol.is_empty() {
                return Err(WordError::EmptySymbol { position, token: token.to_string() });
            }
            if !is_valid_symbol(symbol) {
                return Err(WordError::InvalidSymbol { position, token: token.to_string() });
            }
            if exp == 0 {
                return Err(WordError::ZeroExponent { position, token: token.to_string() });
            }
            if exp.unsigned_abs() > MAX_EXPONENT as u64 {
                return Err(WordError::ExponentTooLarge { position, token: token.to_string() });
            }
            letters.push(Letter::new(symbol, exp));
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Sum of absolute exponents.
    pub fn length(&self) -> u64 {
        self.0.iter().map(|l| l.exp.unsigned_abs()).sum()
    }

    pub fn push(&mut self, symbol: impl Into<String>, exp: i64) {
        if exp != 0 {
            self.0.push(Letter::new(symbol, exp));
        }
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| Letter::new(l.symbol.clone(), -l.exp)).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        out.extend(other.0.iter().cloned());
        Word(out)
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Vec::with_capacity(base.0.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            out.extend(base.0.iter().cloned());
        }
        Word(out)
    }

    /// Merges adjacent letters on the same symbol and drops zero exponents.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for l in &self.0 {
            match out.last_mut() {
                Some(last) if last.symbol == l.symbol => {
                    last.exp += l.exp;
                    if last.exp == 0 {
                        out.pop();
                    }
                }
                _ if l.exp == 0 => {}
                _ => out.push(l.clone()),
            }
        }
        Word(out)
    }

    /// Total exponent of `symbol` in the word.
    pub fn exponent_sum(&self, symbol: &str) -> i64 {
        self.0.iter().filter(|l| l.symbol == symbol).map(|l| l.exp).sum()
    }

    /// Replaces every symbol through `f`, keeping exponents.
    pub fn map_symbols(&self, mut f: impl FnMut(&str) -> String) -> Word {
        Word(self.0.iter().map(|l| Letter::new(f(&l.symbol), l.exp)).collect())
    }

    /// Substitutes a word for every letter.
    pub fn substitute(&self, mut f: impl FnMut(&str) -> Word) -> Word {
        let mut out = Word::new();
        for l in &self.0 {
            out = out.concat(&f(&l.symbol).pow(l.exp));
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Word::parse(s)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Word::parse(&s).map_err(serde::de::Error::custom)
    }
}
