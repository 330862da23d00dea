//! Twist words: positive factorizations recorded only by the topological type
//! of each vanishing cycle.
//!
//! Grammar (whitespace separated, case-sensitive):
//!
//! ```text
//! word  := token*
//! token := "N"            non-separating twist
//!        | "S" digits     separating twist of type h
//! ```
//!
//! A word file holds one word per line; lines starting with `#` and blank
//! lines are skipped.

use std::fmt;

use crate::error::{CensusError, Result};
use crate::invariants::{modulus, separating_weight, FiberTypeVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Token {
    NonSeparating,
    Separating(i64),
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::NonSeparating => write!(f, "N"),
            Token::Separating(h) => write!(f, "S{h}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistWord {
    genus: i64,
    tokens: Vec<Token>,
}

impl TwistWord {
    pub fn new(genus: i64, tokens: Vec<Token>) -> Result<Self> {
        if genus < 1 {
            return Err(CensusError::InvalidGenus { genus, min: 1 });
        }
        let max = genus / 2;
        for (i, t) in tokens.iter().enumerate() {
            if let Token::Separating(h) = *t {
                if !(1..=max).contains(&h) {
                    return Err(CensusError::SeparatingTypeOutOfRange {
                        h,
                        max,
                        genus,
                        token: i + 1,
                        offset: 0,
                    });
                }
            }
        }
        Ok(TwistWord { genus, tokens })
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.tokens.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Which mapping class group's abelianization to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    Full,
    Hyperelliptic,
}

pub fn parse(genus: i64, text: &str) -> Result<TwistWord> {
    if genus < 1 {
        return Err(CensusError::InvalidGenus { genus, min: 1 });
    }
    let max = genus / 2;
    let mut tokens = Vec::new();
    for (idx, (offset, raw)) in split_with_offsets(text).enumerate() {
        let token_no = idx + 1;
        let unknown = || CensusError::Parse {
            token: token_no,
            offset,
            text: raw.to_string(),
        };
        let token = if raw == "N" {
            Token::NonSeparating
        } else if let Some(digits) = raw.strip_prefix('S') {
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(unknown());
            }
            let h: i64 = digits.parse().map_err(|_| unknown())?;
            if !(1..=max).contains(&h) {
                return Err(CensusError::SeparatingTypeOutOfRange {
                    h,
                    max,
                    genus,
                    token: token_no,
                    offset,
                });
            }
            Token::Separating(h)
        } else {
            return Err(unknown());
        };
        tokens.push(token);
    }
    Ok(TwistWord { genus, tokens })
}

fn split_with_offsets(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = text;
    let mut base = 0;
    std::iter::from_fn(move || {
        let start = rest.find(|c: char| !c.is_whitespace())?;
        let tail = &rest[start..];
        let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
        let item = (base + start, &tail[..len]);
        base += start + len;
        rest = &tail[len..];
        Some(item)
    })
}

/// A parsed non-comment line of a word file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordLine {
    /// 1-based line number in the file.
    pub line: usize,
    pub word: TwistWord,
}

pub fn parse_word_file(genus: i64, text: &str) -> Result<Vec<WordLine>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let word = parse(genus, line).map_err(|e| CensusError::AtLine {
            line: i + 1,
            source: Box::new(e),
        })?;
        out.push(WordLine { line: i + 1, word });
    }
    Ok(out)
}

pub fn to_fiber_vector(w: &TwistWord) -> Result<FiberTypeVector> {
    if w.genus < 2 {
        return Err(CensusError::InvalidGenus {
            genus: w.genus,
            min: 2,
        });
    }
    if w.tokens.is_empty() {
        return Err(CensusError::TrivialFibration);
    }
    let mut n = 0i64;
    let mut s = vec![0i64; (w.genus / 2) as usize];
    for t in &w.tokens {
        match *t {
            Token::NonSeparating => n += 1,
            Token::Separating(h) => s[(h - 1) as usize] += 1,
        }
    }
    FiberTypeVector::new(w.genus, n, s)
}

/// Order of `H_1` of the (hyperelliptic) mapping class group.
pub fn h1_order(genus: i64, group: Group) -> Result<i64> {
    if genus < 1 {
        return Err(CensusError::InvalidGenus { genus, min: 1 });
    }
    match group {
        Group::Full => Ok(match genus {
            1 => 12,
            2 => 10,
            _ => 1,
        }),
        Group::Hyperelliptic => modulus(genus),
    }
}

/// Image of the word in `H_1(HMod_g) = Z/h1_order`: each non-separating twist
/// is the generator, a type-`h` separating twist is `2h(4h+2)` generators.
pub fn abelianization_image(w: &TwistWord) -> Result<i64> {
    let m = h1_order(w.genus, Group::Hyperelliptic)?;
    let mut acc = 0i64;
    for t in &w.tokens {
        let weight = match *t {
            Token::NonSeparating => 1,
            Token::Separating(h) => separating_weight(h)? % m,
        };
        acc = (acc + weight) % m;
    }
    Ok(acc)
}

/// A vanishing image is necessary, not sufficient, for the word to be a
/// relation in `HMod_g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NecessaryCondition {
    Pass,
    Fail,
}

impl NecessaryCondition {
    pub fn of(w: &TwistWord) -> Result<Self> {
        Ok(if abelianization_image(w)? == 0 && !w.is_empty() {
            NecessaryCondition::Pass
        } else {
            NecessaryCondition::Fail
        })
    }

    pub fn as_str(self) -> &'static str {
        match self {
            NecessaryCondition::Pass => "PASS",
            NecessaryCondition::Fail => "FAIL",
        }
    }
}
