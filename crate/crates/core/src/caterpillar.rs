//! Caterpillar sequences and their algebra.
//!
//! A sequence `(s_1, ..., s_k)` records how many pendant leaves hang off
//! each spine vertex. Sequences form a monoid under [`graft`] with identity
//! `(2)`, are partially ordered by the shifted domination of their spine
//! degrees ([`CaterpillarSequence::is_subsequence_of`]), and are in
//! bijection with binary words through the reading caterpillar.
//!
//! [`graft`]: CaterpillarSequence::graft

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::leaf_function::{LeafFunction, LeafValue};
use crate::word::BinaryWord;

pub const MAX_HASSE_SIZE: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CaterpillarSequence(Vec<usize>);

impl CaterpillarSequence {
    /// Requires `k >= 1`, `s_1, s_k >= 1`, and `s_1 >= 2` when `k = 1`.
    pub fn new(s: Vec<usize>) -> Result<Self> {
        match s.as_slice() {
            [] => Err(Error::InvalidSequence(s, "empty sequence")),
            [only] if *only < 2 => Err(Error::InvalidSequence(s, "a single entry must be >= 2")),
            [first, .., last] if *first == 0 || *last == 0 => {
                Err(Error::InvalidSequence(s, "end entries must be >= 1"))
            }
            _ => Ok(CaterpillarSequence(s)),
        }
    }

    /// The identity `(2)`: a chain on three vertices.
    pub fn identity() -> Self {
        CaterpillarSequence(vec![2])
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Spine length `k`.
    pub fn spine_len(&self) -> usize {
        self.0.len()
    }

    /// Vertex count `k + sum s_i`.
    pub fn size(&self) -> usize {
        self.0.len() + self.leaves()
    }

    pub fn leaves(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn reversal(&self) -> Self {
        CaterpillarSequence(self.0.iter().rev().copied().collect())
    }

    /// Degrees of the spine vertices in the caterpillar graph.
    pub fn spine_degrees(&self) -> Vec<usize> {
        let k = self.0.len();
        if k == 1 {
            return self.0.clone();
        }
        self.0
            .iter()
            .enumerate()
            .map(|(i, &s)| if i == 0 || i == k - 1 { s + 1 } else { s + 2 })
            .collect()
    }

    /// `self ⪯ other`: some shift of `self`'s spine degrees is dominated
    /// pointwise by `other`'s.
    pub fn is_subsequence_of(&self, other: &CaterpillarSequence) -> bool {
        let (mine, theirs) = (self.spine_degrees(), other.spine_degrees());
        if mine.len() > theirs.len() {
            return false;
        }
        (0..=theirs.len() - mine.len())
            .any(|shift| mine.iter().zip(&theirs[shift..]).all(|(a, b)| a <= b))
    }

    /// Merges the last spine vertex of `self` with the first of `other`.
    pub fn graft(&self, other: &CaterpillarSequence) -> CaterpillarSequence {
        let mut s = self.0.clone();
        let last = s.pop().expect("never empty");
        s.push(last + other.0[0] - 2);
        s.extend_from_slice(&other.0[1..]);
        CaterpillarSequence(s)
    }

    fn check_subsize(&self, i: usize) -> Result<()> {
        if i < 3 || i > self.size() {
            return Err(Error::SizeOutOfRange {
                size: i,
                min: 3,
                max: self.size(),
            });
        }
        Ok(())
    }

    /// `(a, alpha)` with `Left_i = (s_1, ..., s_a, alpha)`,
    /// `i = sum_{m <= a} (s_m + 1) + alpha + 1` and `1 <= alpha <= s_{a+1} + 1`.
    pub fn alpha_left(&self, i: usize) -> Result<(usize, usize)> {
        self.check_subsize(i)?;
        let mut consumed = 0;
        for (a, &s) in self.0.iter().enumerate() {
            let alpha = i - 1 - consumed;
            if alpha <= s + 1 {
                return Ok((a, alpha));
            }
            consumed += s + 1;
        }
        unreachable!("i <= size always lands on the last spine vertex")
    }

    /// `(b, beta)` with `Right_i = (beta, s_b, ..., s_k)` (1-based `b`,
    /// `b = k + 1` meaning `(beta)`), `i = sum_{m >= b} (s_m + 1) + beta + 1`
    /// and `1 <= beta <= s_{b-1} + 1`.
    pub fn beta_right(&self, i: usize) -> Result<(usize, usize)> {
        self.check_subsize(i)?;
        let k = self.0.len();
        let mut consumed = 0;
        for b in (2..=k + 1).rev() {
            let beta = i - 1 - consumed;
            let s = self.0[b - 2];
            if beta <= s + 1 {
                return Ok((b, beta));
            }
            consumed += s + 1;
        }
        unreachable!("i <= size always lands on the first spine vertex")
    }

    /// Left caterpillar subsequence of size `i`: peel leaves off the right end.
    pub fn left(&self, i: usize) -> Result<CaterpillarSequence> {
        let (a, alpha) = self.alpha_left(i)?;
        let mut s = self.0[..a].to_vec();
        s.push(alpha);
        Ok(CaterpillarSequence(s))
    }

    /// Right caterpillar subsequence of size `i`: peel leaves off the left end.
    pub fn right(&self, i: usize) -> Result<CaterpillarSequence> {
        let (b, beta) = self.beta_right(i)?;
        let mut s = vec![beta];
        s.extend_from_slice(&self.0[b - 1..]);
        Ok(CaterpillarSequence(s))
    }

    /// `(Left_i, Right_{|S|+3-i})`, whose graft is `self`.
    pub fn decompose(&self, i: usize) -> Result<(CaterpillarSequence, CaterpillarSequence)> {
        let left = self.left(i)?;
        let right = self.right(self.size() + 3 - i)?;
        Ok((left, right))
    }

    /// The binary word whose reading caterpillar is `self`.
    pub fn word(&self) -> BinaryWord {
        let s = &self.0;
        let k = s.len();
        let mut letters = Vec::with_capacity(self.size() - 3);
        if k == 1 {
            letters.resize(s[0] - 2, 1);
        } else {
            for (i, &si) in s.iter().enumerate() {
                let ones = if i == 0 || i == k - 1 { si - 1 } else { si };
                if i > 0 {
                    letters.push(0);
                }
                letters.extend(std::iter::repeat(1).take(ones));
            }
        }
        BinaryWord::from_bits(letters)
    }

    /// Leaf function of the caterpillar: `L(i) = F_1(w, i - 3) + 2` for
    /// `i >= 3`, where `w` is the sequence's word.
    pub fn leaf_function(&self) -> LeafFunction {
        let profile = self.word().f1_profile();
        let mut values = vec![LeafValue::Finite(0), LeafValue::Finite(0), LeafValue::Finite(2)];
        values.extend(profile.values().iter().map(|&f| LeafValue::Finite(f + 2)));
        LeafFunction::new(values).expect("nonempty")
    }

    /// All sequences of the given size, lexicographic order.
    pub fn all_of_size(size: usize) -> Vec<CaterpillarSequence> {
        fn fill(remaining: usize, acc: &mut Vec<usize>, out: &mut Vec<CaterpillarSequence>) {
            // each entry costs one spine vertex plus its leaves
            if remaining == 0 {
                if let Ok(s) = CaterpillarSequence::new(acc.clone()) {
                    out.push(s);
                }
                return;
            }
            for s in 0..remaining {
                if acc.is_empty() && s == 0 {
                    continue;
                }
                acc.push(s);
                fill(remaining - s - 1, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        if size >= 3 {
            fill(size, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for CaterpillarSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for CaterpillarSequence {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let s = text
            .trim()
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("{tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        CaterpillarSequence::new(s)
    }
}

/// The caterpillar sequences of size at most some bound, ordered by the
/// subsequence relation.
#[derive(Debug, Clone)]
pub struct CaterpillarPoset {
    elements: Vec<CaterpillarSequence>,
    /// `above[x]` is the bitset of strict upper bounds of `x`.
    above: Vec<Vec<u64>>,
}

impl CaterpillarPoset {
    /// Elements are sorted by size, then lexicographically.
    pub fn up_to(max_size: usize) -> Result<Self> {
        if max_size > MAX_HASSE_SIZE {
            return Err(Error::BoundExceeded {
                what: "poset size",
                value: max_size,
                bound: MAX_HASSE_SIZE,
            });
        }
        let elements: Vec<CaterpillarSequence> =
            (3..=max_size).flat_map(CaterpillarSequence::all_of_size).collect();
        let words = elements.len().div_ceil(64);
        let above = elements
            .iter()
            .enumerate()
            .map(|(x, lo)| {
                let mut bits = vec![0u64; words];
                for (y, hi) in elements.iter().enumerate() {
                    if x != y && lo.is_subsequence_of(hi) {
                        bits[y / 64] |= 1 << (y % 64);
                    }
                }
                bits
            })
            .collect();
        Ok(CaterpillarPoset { elements, above })
    }

    pub fn elements(&self) -> &[CaterpillarSequence] {
        &self.elements
    }

    fn index(&self, s: &CaterpillarSequence) -> Option<usize> {
        self.elements.iter().position(|e| e == s)
    }

    fn members(&self, bits: &[u64]) -> impl Iterator<Item = usize> + '_ {
        let bits = bits.to_vec();
        (0..self.elements.len()).filter(move |&y| bits[y / 64] >> (y % 64) & 1 == 1)
    }

    /// Cover pairs `(lower, upper)`: `upper` is above `lower` with nothing
    /// strictly between.
    pub fn covers(&self) -> Vec<(CaterpillarSequence, CaterpillarSequence)> {
        let mut out = Vec::new();
        for x in 0..self.elements.len() {
            let mut direct = self.above[x].clone();
            for z in self.members(&self.above[x]) {
                for (d, a) in direct.iter_mut().zip(&self.above[z]) {
                    *d &= !a;
                }
            }
            for y in self.members(&direct) {
                out.push((self.elements[x].clone(), self.elements[y].clone()));
            }
        }
        out
    }

    /// Elements that are minimal among the common upper bounds of `a` and `b`.
    pub fn minimal_upper_bounds(
        &self,
        a: &CaterpillarSequence,
        b: &CaterpillarSequence,
    ) -> Vec<CaterpillarSequence> {
        let (Some(ia), Some(ib)) = (self.index(a), self.index(b)) else {
            return Vec::new();
        };
        let upper = |x: usize| -> Vec<u64> {
            let mut bits = self.above[x].clone();
            bits[x / 64] |= 1 << (x % 64);
            bits
        };
        let common: Vec<u64> = upper(ia).iter().zip(upper(ib)).map(|(p, q)| p & q).collect();
        let mut strictly_above_some = vec![0u64; common.len()];
        for z in self.members(&common) {
            for (s, a) in strictly_above_some.iter_mut().zip(&self.above[z]) {
                *s |= a;
            }
        }
        let minimal: Vec<u64> = common
            .iter()
            .zip(&strictly_above_some)
            .map(|(c, s)| c & !s)
            .collect();
        self.members(&minimal).map(|y| self.elements[y].clone()).collect()
    }

    /// Elements with no strict lower bound.
    pub fn minima(&self) -> Vec<CaterpillarSequence> {
        let n = self.elements.len();
        let mut has_lower = vec![false; n];
        for x in 0..n {
            for y in self.members(&self.above[x]) {
                has_lower[y] = true;
            }
        }
        (0..n)
            .filter(|&y| !has_lower[y])
            .map(|y| self.elements[y].clone())
            .collect()
    }
}

/// Cover relations of the caterpillar poset restricted to sizes
/// `<= max_size`.
pub fn hasse_covers(max_size: usize) -> Result<Vec<(CaterpillarSequence, CaterpillarSequence)>> {
    Ok(CaterpillarPoset::up_to(max_size)?.covers())
}

/// Graphviz digraph of cover pairs, edges pointing upward; nodes are
/// grouped by size into ranks.
pub fn hasse_dot(covers: &[(CaterpillarSequence, CaterpillarSequence)]) -> String {
    let mut by_size: BTreeMap<usize, Vec<&CaterpillarSequence>> = BTreeMap::new();
    for (lo, hi) in covers {
        for s in [lo, hi] {
            let rank = by_size.entry(s.size()).or_default();
            if !rank.contains(&s) {
                rank.push(s);
            }
        }
    }
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
    for (size, rank) in &by_size {
        let _ = writeln!(out, "  {{ rank=same; // size {size}");
        for s in rank {
            let _ = writeln!(out, "    \"{s}\";");
        }
        out.push_str("  }\n");
    }
    for (lo, hi) in covers {
        let _ = writeln!(out, "  \"{lo}\" -> \"{hi}\";");
    }
    out.push_str("}\n");
    out
}
