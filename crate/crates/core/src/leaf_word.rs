//! Leaf words (shifted first differences of leaf functions) and the
//! caterpillar realization procedure.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::caterpillar::CaterpillarSequence;
use crate::error::{Error as CrateError, Result};
use crate::leaf_function::{LeafFunction, LeafValue};
use crate::word::{BinaryWord, PrefixNormalViolation};

/// A letter of a leaf word: an integer difference, or `ω` when one of the
/// two values is `-inf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LeafLetter {
    Int(i64),
    Omega,
}

impl fmt::Display for LeafLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LeafLetter::Int(v) => write!(f, "{v}"),
            LeafLetter::Omega => f.write_str("w"),
        }
    }
}

impl FromStr for LeafLetter {
    type Err = CrateError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "w" | "ω" => Ok(LeafLetter::Omega),
            tok => tok
                .parse()
                .map(LeafLetter::Int)
                .map_err(|e| CrateError::Parse(format!("leaf letter {tok:?}: {e}"))),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LeafWord(Vec<LeafLetter>);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeafWordClass {
    /// Alphabet within `{0, 1}`.
    TreeCompatible,
    /// Otherwise admissible, with a negative letter or `ω`.
    NonTree,
    /// Some letter above 1, or `ω` followed by an integer.
    Invalid,
}

impl LeafWord {
    pub fn new(letters: Vec<LeafLetter>) -> Self {
        LeafWord(letters)
    }

    pub fn letters(&self) -> &[LeafLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The word as a binary word, when every letter is 0 or 1.
    pub fn to_binary(&self) -> Option<BinaryWord> {
        self.0
            .iter()
            .map(|l| match l {
                LeafLetter::Int(0) => Some(0),
                LeafLetter::Int(1) => Some(1),
                _ => None,
            })
            .collect::<Option<Vec<u8>>>()
            .map(|bits| BinaryWord::new(bits).expect("bits are binary"))
    }

    pub fn classify(&self) -> LeafWordClass {
        let too_big = self.0.iter().any(|l| matches!(l, LeafLetter::Int(v) if *v > 1));
        let omega_then_int = self
            .0
            .iter()
            .skip_while(|l| **l != LeafLetter::Omega)
            .any(|l| *l != LeafLetter::Omega);
        if too_big || omega_then_int {
            LeafWordClass::Invalid
        } else if self.to_binary().is_some() {
            LeafWordClass::TreeCompatible
        } else {
            LeafWordClass::NonTree
        }
    }
}

impl From<&BinaryWord> for LeafWord {
    fn from(w: &BinaryWord) -> Self {
        LeafWord(w.letters().iter().map(|&a| LeafLetter::Int(a as i64)).collect())
    }
}

impl fmt::Display for LeafWord {
    /// Comma-separated letters, `ω` written `w`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for LeafWord {
    type Err = CrateError;

    /// Comma-separated letters, or a compact string of `0`/`1`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(LeafWord::default());
        }
        if !s.contains(',') && s.chars().all(|c| c == '0' || c == '1') {
            return Ok(LeafWord::from(&s.parse::<BinaryWord>()?));
        }
        s.split(',')
            .map(str::parse)
            .collect::<Result<Vec<_>>>()
            .map(LeafWord)
    }
}

/// `ΔL(i) = L(i + 3) - L(i + 2)` for `i = 1..=n-3`, with `ω` wherever an
/// operand is `-inf`.
pub fn delta_leaf_word(lf: &LeafFunction) -> Result<LeafWord> {
    if lf.n() < 3 {
        return Err(CrateError::SizeOutOfRange {
            size: lf.n(),
            min: 3,
            max: usize::MAX,
        });
    }
    lf.validate()?;
    Ok(raw_delta(lf))
}

fn raw_delta(lf: &LeafFunction) -> LeafWord {
    let v = lf.values();
    LeafWord(
        (4..=lf.n())
            .map(|j| match (v[j - 1], v[j]) {
                (LeafValue::Finite(a), LeafValue::Finite(b)) => LeafLetter::Int(b as i64 - a as i64),
                _ => LeafLetter::Omega,
            })
            .collect(),
    )
}

/// The leaf function on `|w| + 3` vertices whose leaf word is `w` and whose
/// first values are `0, 0, 2, 2`.
pub fn leaf_function_from_word(w: &BinaryWord) -> LeafFunction {
    let mut values = vec![LeafValue::Finite(0), LeafValue::Finite(0), LeafValue::Finite(2)];
    values.extend(w.prefix_ones().into_iter().map(|p| LeafValue::Finite(p + 2)));
    LeafFunction::new(values).expect("nonempty")
}

/// Why a leaf function is not the leaf function of any caterpillar.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Rejection {
    #[error("a caterpillar has at least 3 vertices, got n = {n}")]
    TooSmall { n: usize },
    #[error("values must start 0,0,2,2, got {found}")]
    BadPrefix { found: String },
    #[error("leaf word letter {letter} at position {position} is not 0 or 1")]
    BadAlphabet { position: usize, letter: LeafLetter },
    #[error(
        "leaf word {word} is not prefix normal: prefix {} has fewer ones than factor {}",
        .violation.prefix, .violation.factor
    )]
    NotPrefixNormal {
        word: BinaryWord,
        violation: PrefixNormalViolation,
    },
}

/// Decides whether `lf` is the leaf function of a caterpillar and, if so,
/// returns the reading caterpillar of its leaf word.
pub fn realize_caterpillar(lf: &LeafFunction) -> std::result::Result<CaterpillarSequence, Rejection> {
    if lf.n() < 3 {
        return Err(Rejection::TooSmall { n: lf.n() });
    }
    let head = &lf.values()[..4];
    let expected = [0, 0, 2, 2].map(LeafValue::Finite);
    if head != expected {
        let found = head.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        return Err(Rejection::BadPrefix { found });
    }
    let word = raw_delta(lf);
    if let Some((position, &letter)) = word
        .letters()
        .iter()
        .enumerate()
        .find(|(_, l)| !matches!(l, LeafLetter::Int(0) | LeafLetter::Int(1)))
    {
        return Err(Rejection::BadAlphabet {
            position: position + 1,
            letter,
        });
    }
    let binary = word.to_binary().expect("alphabet checked");
    if let Some(violation) = binary.prefix_normal_violation() {
        return Err(Rejection::NotPrefixNormal {
            word: binary,
            violation,
        });
    }
    Ok(binary.reading_caterpillar())
}

/// Whether the reading caterpillars of two words have the same leaf
/// function.
pub fn leaf_equivalent(w1: &BinaryWord, w2: &BinaryWord) -> bool {
    w1.reading_caterpillar().leaf_function() == w2.reading_caterpillar().leaf_function()
}
