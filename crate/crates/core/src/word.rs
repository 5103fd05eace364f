//! Binary words, maximal-ones profiles and prefix normality.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::caterpillar::CaterpillarSequence;
use crate::error::{Error, Result};

pub const MAX_PNW_LENGTH: usize = 22;

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryWord {
    letters: Vec<u8>,
}

impl BinaryWord {
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        if let Some(bad) = letters.iter().find(|&&a| a > 1) {
            return Err(Error::Parse(format!("letter {bad} is not binary")));
        }
        Ok(BinaryWord { letters })
    }

    pub fn empty() -> Self {
        BinaryWord::default()
    }

    pub(crate) fn from_bits(letters: Vec<u8>) -> Self {
        debug_assert!(letters.iter().all(|&a| a <= 1));
        BinaryWord { letters }
    }

    /// The `index`-th word of length `len` in lexicographic order.
    pub fn from_index(index: u64, len: usize) -> Self {
        BinaryWord {
            letters: (0..len).map(|i| (index >> (len - 1 - i) & 1) as u8).collect(),
        }
    }

    /// Every word of length `len`, lexicographic order.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = BinaryWord> {
        (0..1u64 << len).map(move |idx| BinaryWord::from_index(idx, len))
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `|w|_1`
    pub fn ones(&self) -> usize {
        self.letters.iter().filter(|&&a| a == 1).count()
    }

    pub fn prefix(&self, len: usize) -> BinaryWord {
        BinaryWord::from_bits(self.letters[..len].to_vec())
    }

    pub fn suffix(&self, len: usize) -> BinaryWord {
        BinaryWord::from_bits(self.letters[self.len() - len..].to_vec())
    }

    pub fn factor(&self, start: usize, len: usize) -> BinaryWord {
        BinaryWord::from_bits(self.letters[start..start + len].to_vec())
    }

    pub fn reversed(&self) -> BinaryWord {
        BinaryWord::from_bits(self.letters.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &BinaryWord) -> BinaryWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BinaryWord::from_bits(letters)
    }

    pub fn push(&mut self, bit: bool) {
        self.letters.push(u8::from(bit));
    }

    /// Maximum number of ones over the factors of length `len`.
    pub fn f1(&self, len: usize) -> Result<usize> {
        if len > self.len() {
            return Err(Error::SizeOutOfRange {
                size: len,
                min: 0,
                max: self.len(),
            });
        }
        Ok(window_max(&self.letters, len))
    }

    pub fn f1_profile(&self) -> F1Profile {
        F1Profile((0..=self.len()).map(|i| window_max(&self.letters, i)).collect())
    }

    /// Ones-counts of the prefixes of length `0..=|w|`.
    pub fn prefix_ones(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len() + 1);
        out.push(0);
        let mut acc = 0;
        for &a in &self.letters {
            acc += a as usize;
            out.push(acc);
        }
        out
    }

    /// `max_i F_1(w, i) - |pref_i(w)|_1`, zero exactly for prefix normal words.
    pub fn prefix_normal_deficit(&self) -> usize {
        let profile = self.f1_profile();
        profile
            .0
            .iter()
            .zip(self.prefix_ones())
            .map(|(&f, p)| f - p)
            .max()
            .unwrap_or(0)
    }

    pub fn is_prefix_normal(&self) -> bool {
        self.prefix_normal_violation().is_none()
    }

    pub fn is_k_prefix_normal(&self, k: usize) -> bool {
        self.prefix_normal_deficit() <= k
    }

    /// The shortest prefix beaten by a factor of equal length, paired with
    /// the leftmost factor of that length with the most ones.
    pub fn prefix_normal_violation(&self) -> Option<PrefixNormalViolation> {
        let prefix_ones = self.prefix_ones();
        (1..=self.len()).find_map(|len| {
            let (start, ones) = best_window(&self.letters, len);
            (ones > prefix_ones[len]).then(|| PrefixNormalViolation {
                prefix: self.prefix(len),
                factor: self.factor(start, len),
                factor_start: start,
            })
        })
    }

    /// Prefix normal form: the word whose letters are the increments of the
    /// maximal-ones profile.
    pub fn pnf(&self) -> BinaryWord {
        let profile = self.f1_profile();
        BinaryWord::from_bits(profile.0.windows(2).map(|w| (w[1] - w[0]) as u8).collect())
    }

    /// Same length and same maximal-ones profile.
    pub fn equivalent(&self, other: &BinaryWord) -> bool {
        self.len() == other.len() && self.f1_profile() == other.f1_profile()
    }

    /// Reading caterpillar: start from `(2)`; a `0` turns the last entry
    /// `r` into `r - 1, 1`, a `1` increments it.
    pub fn reading_caterpillar(&self) -> CaterpillarSequence {
        let mut seq = vec![2usize];
        for &a in &self.letters {
            let last = seq.last_mut().expect("never empty");
            if a == 0 {
                *last -= 1;
                seq.push(1);
            } else {
                *last += 1;
            }
        }
        CaterpillarSequence::new(seq).expect("reading caterpillars are valid")
    }
}

fn window_max(letters: &[u8], len: usize) -> usize {
    best_window(letters, len).1
}

/// Leftmost start of a length-`len` window with the most ones.
fn best_window(letters: &[u8], len: usize) -> (usize, usize) {
    if len == 0 {
        return (0, 0);
    }
    let mut count: usize = letters[..len].iter().map(|&a| a as usize).sum();
    let mut best = (0, count);
    for start in 1..=letters.len() - len {
        count = count + letters[start + len - 1] as usize - letters[start - 1] as usize;
        if count > best.1 {
            best = (start, count);
        }
    }
    best
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &a in &self.letters {
            f.write_str(if a == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    /// Accepts a string of `0`/`1`; the empty string is the empty word.
    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::Parse(format!("{other:?} is not a binary letter"))),
            })
            .collect::<Result<Vec<u8>>>()
            .map(BinaryWord::from_bits)
    }
}

/// `F_1(w, 0..=|w|)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct F1Profile(Vec<usize>);

impl F1Profile {
    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn word_len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("profiles always serialize")
    }
}

/// A prefix and an equal-length factor with strictly more ones. When found
/// by [`BinaryWord::prefix_normal_violation`] the length is minimal, so the
/// prefix ends in `0`, the factor starts with `1`, and the remaining parts
/// are abelian equivalent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixNormalViolation {
    pub prefix: BinaryWord,
    pub factor: BinaryWord,
    pub factor_start: usize,
}

impl PrefixNormalViolation {
    /// `(u, u')` with `u0` the prefix and `1u'` the factor.
    pub fn abelian_pair(&self) -> (BinaryWord, BinaryWord) {
        let n = self.prefix.len();
        (self.prefix.prefix(n - 1), self.factor.suffix(n - 1))
    }
}

/// Every prefix normal word of length `len`, lexicographic order.
pub fn enumerate_pnw(len: usize) -> Result<Vec<BinaryWord>> {
    if len > MAX_PNW_LENGTH {
        return Err(Error::BoundExceeded {
            what: "prefix normal word length",
            value: len,
            bound: MAX_PNW_LENGTH,
        });
    }
    let mut out = Vec::new();
    let mut letters = Vec::with_capacity(len);
    let mut prefix_ones = vec![0usize];
    extend_pnw(len, &mut letters, &mut prefix_ones, &mut out);
    Ok(out)
}

/// Depth-first extension; appending a letter only creates new suffix
/// factors, so only those need to be compared against the prefixes.
fn extend_pnw(
    len: usize,
    letters: &mut Vec<u8>,
    prefix_ones: &mut Vec<usize>,
    out: &mut Vec<BinaryWord>,
) {
    if letters.len() == len {
        out.push(BinaryWord::from_bits(letters.clone()));
        return;
    }
    for a in [0u8, 1] {
        letters.push(a);
        let m = letters.len();
        let total = prefix_ones[m - 1] + a as usize;
        prefix_ones.push(total);
        // suffix of length l has total - prefix_ones[m - l] ones
        let ok = (1..=m).all(|l| total - prefix_ones[m - l] <= prefix_ones[l]);
        if ok {
            extend_pnw(len, letters, prefix_ones, out);
        }
        prefix_ones.pop();
        letters.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    /// Definition-level oracle: compare every prefix with every factor.
    fn naive_prefix_normal(word: &BinaryWord) -> bool {
        let n = word.len();
        (1..=n).all(|len| {
            let p = word.prefix(len).ones();
            (0..=n - len).all(|start| word.factor(start, len).ones() <= p)
        })
    }

    fn naive_f1(word: &BinaryWord, len: usize) -> usize {
        (0..=word.len() - len)
            .map(|s| word.factor(s, len).ones())
            .max()
            .unwrap()
    }

    #[test]
    fn f1_examples() {
        assert_eq!(w("00110101100").f1(5), Ok(3));
        assert_eq!(w("1101011011").f1(5), Ok(4));
        let x = w("0110100");
        assert_eq!(x.f1(x.len()), Ok(x.ones()));
        assert_eq!(x.f1(0), Ok(0));
        assert!(x.f1(8).is_err());
    }

    #[test]
    fn profile_oracle_exhaustive() {
        for len in 0..=12 {
            for word in BinaryWord::all_of_length(len) {
                let profile = word.f1_profile();
                assert_eq!(profile.values()[0], 0);
                assert_eq!(profile.values()[len], word.ones());
                assert!(profile.values().windows(2).all(|d| d[1] - d[0] <= 1));
                if len <= 9 {
                    for i in 0..=len {
                        assert_eq!(profile.values()[i], naive_f1(&word, i));
                    }
                    assert_eq!(word.is_prefix_normal(), naive_prefix_normal(&word));
                }
                assert_eq!(word.pnf().f1_profile(), profile);
            }
        }
    }

    #[test]
    fn prefix_normal_examples() {
        for s in ["", "0000", "111", "110101"] {
            assert!(w(s).is_prefix_normal(), "{s}");
        }
        let bad = w("1101011011");
        assert!(!bad.is_prefix_normal());
        let v = bad.prefix_normal_violation().unwrap();
        assert_eq!((v.prefix.to_string(), v.factor.to_string()), ("11010".into(), "11011".into()));
        assert_eq!(v.factor_start, 5);
        let (u, u2) = v.abelian_pair();
        assert_eq!((u.to_string(), u2.to_string()), ("1101".into(), "1011".into()));
    }

    #[test]
    fn k_prefix_normal_examples() {
        let f1 = w("1101011011");
        assert!(f1.is_k_prefix_normal(1));
        assert!(!f1.is_k_prefix_normal(0));
        let f2 = w("1110010011100111");
        assert!(f2.is_k_prefix_normal(2));
        assert!(!f2.is_k_prefix_normal(1));
        for len in 0..=8 {
            for word in BinaryWord::all_of_length(len) {
                assert!(word.is_k_prefix_normal(len));
                assert_eq!(word.is_k_prefix_normal(0), word.is_prefix_normal());
            }
        }
    }

    #[test]
    fn pnf_examples() {
        assert_eq!(w("011").pnf(), w("110"));
        assert_eq!(w("110101").pnf(), w("110101"));
        assert_eq!(
            w("00110101100").f1_profile().values(),
            &[0, 1, 2, 2, 3, 3, 4, 5, 5, 5, 5, 5]
        );
        let x = w("00110101100");
        for i in 0..=x.len() {
            assert_eq!(x.f1(i), Ok(naive_f1(&x, i)));
        }
        assert_eq!(x.pnf(), w("11010110000"));
    }

    #[test]
    fn pnf_is_unique_prefix_normal_member_of_class() {
        for len in 0..=10 {
            let mut classes: BTreeMap<Vec<usize>, Vec<BinaryWord>> = BTreeMap::new();
            for word in BinaryWord::all_of_length(len) {
                classes
                    .entry(word.f1_profile().values().to_vec())
                    .or_default()
                    .push(word);
            }
            for members in classes.values() {
                let normal: Vec<&BinaryWord> =
                    members.iter().filter(|m| naive_prefix_normal(m)).collect();
                assert_eq!(normal.len(), 1);
                assert!(members.iter().all(|m| &m.pnf() == normal[0]));
            }
        }
    }

    #[test]
    fn equivalence_examples() {
        assert!(w("01").equivalent(&w("10")));
        assert!(!w("01").equivalent(&w("11")));
        assert!(w("00110101100").equivalent(&w("11010110000")));
        assert!(!w("0").equivalent(&w("00")));
    }

    #[test]
    fn reading_caterpillar_examples() {
        assert_eq!(BinaryWord::empty().reading_caterpillar().as_slice(), &[2]);
        assert_eq!(w("110101").reading_caterpillar().as_slice(), &[3, 1, 2]);
        assert_eq!(
            w("00110101100").reading_caterpillar().as_slice(),
            &[1, 0, 2, 1, 2, 0, 1]
        );
    }

    #[test]
    fn pnw_enumeration() {
        let show = |n| -> Vec<String> {
            enumerate_pnw(n).unwrap().iter().map(ToString::to_string).collect()
        };
        assert_eq!(show(0), vec![""]);
        assert_eq!(show(2), vec!["00", "10", "11"]);
        assert_eq!(show(3), vec!["000", "100", "101", "110", "111"]);
        for len in 0..=12 {
            let filtered: Vec<BinaryWord> = BinaryWord::all_of_length(len)
                .filter(BinaryWord::is_prefix_normal)
                .collect();
            assert_eq!(enumerate_pnw(len).unwrap(), filtered);
        }
        assert!(enumerate_pnw(23).is_err());
    }

    #[test]
    fn violation_witness_shape() {
        for len in 0..=10 {
            for word in BinaryWord::all_of_length(len) {
                match word.prefix_normal_violation() {
                    None => assert!(naive_prefix_normal(&word)),
                    Some(v) => {
                        let n = v.prefix.len();
                        assert_eq!(v.prefix, word.prefix(n));
                        assert_eq!(v.factor, word.factor(v.factor_start, n));
                        assert_eq!(v.prefix.letters()[n - 1], 0);
                        assert_eq!(v.factor.letters()[0], 1);
                        let (u, u2) = v.abelian_pair();
                        assert_eq!(u.ones(), u2.ones());
                    }
                }
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w("0110").to_string(), "0110");
        assert_eq!(w("").len(), 0);
        assert!("012".parse::<BinaryWord>().is_err());
        assert!(BinaryWord::new(vec![0, 2]).is_err());
        assert_eq!(w("0011").f1_profile().to_json(), "[0,1,2,2,2]");
    }
}
