//! Bounded exhaustive sweeps of the structural laws relating graphs, leaf
//! functions, caterpillar sequences and binary words.
//!
//! Each claim runs over every instance up to a size bound and returns a
//! [`VerifyReport`]. Instances are checked in parallel; reports and their
//! failure lists come back in a fixed order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::caterpillar::CaterpillarSequence;
use crate::error::{Error, Result};
use crate::graph::{caterpillar_graph, fk_tree, wheel, Graph};
use crate::leaf_function::{LeafFunction, LeafValue};
use crate::leaf_word::{delta_leaf_word, leaf_equivalent, leaf_function_from_word, realize_caterpillar};
use crate::oracle::{leaf_function_bruteforce, leaf_function_with, OracleConfig};
use crate::trees::{canonical_form, enumerate_free_trees};
use crate::word::{enumerate_pnw, BinaryWord};

/// Failure lists are truncated to this many entries.
pub const MAX_RECORDED_FAILURES: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Poset,
    Morphism,
    Theorem53,
    Theorem61,
    Trees,
    Oracle,
}

impl Suite {
    pub const NAMES: [&'static str; 7] =
        ["all", "poset", "morphism", "theorem53", "theorem61", "trees", "oracle"];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Suite::All => "all",
            Suite::Poset => "poset",
            Suite::Morphism => "morphism",
            Suite::Theorem53 => "theorem53",
            Suite::Theorem61 => "theorem61",
            Suite::Trees => "trees",
            Suite::Oracle => "oracle",
        };
        f.write_str(name)
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "poset" => Suite::Poset,
            "morphism" => Suite::Morphism,
            "theorem53" => Suite::Theorem53,
            "theorem61" => Suite::Theorem61,
            "trees" => Suite::Trees,
            "oracle" => Suite::Oracle,
            other => return Err(Error::Parse(format!("unknown suite {other:?}"))),
        })
    }
}

/// Outcome of one claim at one bound. `failures` is empty exactly when the
/// claim held on every instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub claim: String,
    pub bound: usize,
    pub instances: u64,
    pub failures: Vec<String>,
    pub failure_count: u64,
    pub wall_time_secs: f64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Outcome {
    instances: u64,
    failures: Vec<String>,
}

impl Outcome {
    fn single(ok: bool, message: impl FnOnce() -> String) -> Vec<String> {
        if ok {
            Vec::new()
        } else {
            vec![message()]
        }
    }
}

/// Checks every item in parallel, keeping the failure order of `items`.
fn sweep<T, F>(items: &[T], check: F) -> Outcome
where
    T: Sync,
    F: Fn(&T) -> Vec<String> + Sync,
{
    let failures: Vec<String> = items.par_iter().map(&check).collect::<Vec<_>>().concat();
    Outcome {
        instances: items.len() as u64,
        failures,
    }
}

pub struct Claim {
    pub id: &'static str,
    pub suite: Suite,
    pub default_bound: usize,
    pub limit: usize,
    run: fn(usize) -> Outcome,
}

impl Claim {
    /// Runs at `bound`, clamped to the claim's limit.
    pub fn run(&self, bound: Option<usize>) -> VerifyReport {
        let bound = bound.unwrap_or(self.default_bound).min(self.limit);
        let start = Instant::now();
        let outcome = (self.run)(bound);
        let failure_count = outcome.failures.len() as u64;
        let mut failures = outcome.failures;
        failures.truncate(MAX_RECORDED_FAILURES);
        VerifyReport {
            claim: self.id.to_string(),
            bound,
            instances: outcome.instances,
            failures,
            failure_count,
            wall_time_secs: start.elapsed().as_secs_f64(),
        }
    }
}

pub fn claims() -> Vec<Claim> {
    use Suite::*;
    let c = |id, suite, default_bound, limit, run| Claim {
        id,
        suite,
        default_bound,
        limit,
        run,
    };
    vec![
        c("subsequence-partial-order", Poset, 7, 9, subsequence_partial_order),
        c("graft-monoid", Poset, 8, 9, graft_monoid),
        c("graft-reversal", Poset, 8, 10, graft_reversal),
        c("graft-upper-bound", Poset, 8, 10, graft_upper_bound),
        c("left-right-subsequences", Poset, 10, 14, left_right_subsequences),
        c("decomposition", Poset, 12, 16, decomposition),
        c("rc-morphism", Morphism, 6, 8, rc_morphism),
        c("rc-word-roundtrip", Morphism, 12, 16, rc_word_roundtrip),
        c("rc-prefix-suffix-laws", Morphism, 8, 12, rc_prefix_suffix_laws),
        c("f1-profile-laws", Morphism, 12, 14, f1_profile_laws),
        c("prefix-normal-witness", Morphism, 10, 14, prefix_normal_witness),
        c("leaf-word-of-prefix-normal", Theorem53, 12, 14, leaf_word_of_prefix_normal),
        c("leaf-word-is-pnf", Theorem53, 10, 12, leaf_word_is_pnf),
        c("fully-leafed-left-prefix", Theorem53, 10, 14, fully_leafed_left_prefix),
        c("pnf-uniqueness", Theorem53, 10, 14, pnf_uniqueness),
        c("leaf-equivalence-iff-profile", Theorem61, 8, 10, leaf_equivalence_iff_profile),
        c("factor-subsequences", Theorem61, 8, 12, factor_subsequences),
        c("fully-leafed-left-right", Theorem61, 8, 10, fully_leafed_left_right),
        c("tree-leaf-words-prefix-normal", Trees, 12, 14, tree_leaf_words_prefix_normal),
        c("tree-leaf-functions-monotone", Trees, 12, 14, tree_leaf_functions_monotone),
        c("fk-leaf-words", Trees, 3, 3, fk_leaf_words),
        c("wheel-formula", Oracle, 12, 16, wheel_formula_claim),
        c("caterpillar-oracle-agreement", Oracle, 14, 17, caterpillar_oracle_agreement),
        c("non-tree-leaf-functions", Oracle, 7, 7, non_tree_leaf_functions),
    ]
}

/// Runs every claim of `suite` in order. With `max_n`, each claim's bound
/// is `max_n` clamped to that claim's limit; a `max_n` above every limit in
/// the suite is an error.
pub fn run_suite(suite: Suite, max_n: Option<usize>) -> Result<Vec<VerifyReport>> {
    let selected: Vec<Claim> = claims()
        .into_iter()
        .filter(|c| suite == Suite::All || c.suite == suite)
        .collect();
    if let Some(n) = max_n {
        let largest = selected.iter().map(|c| c.limit).max().unwrap_or(0);
        if n > largest {
            return Err(Error::BoundExceeded {
                what: "verify bound",
                value: n,
                bound: largest,
            });
        }
    }
    Ok(selected.iter().map(|c| c.run(max_n)).collect())
}

pub fn run_claim(id: &str, bound: Option<usize>) -> Result<VerifyReport> {
    claims()
        .into_iter()
        .find(|c| c.id == id)
        .map(|c| c.run(bound))
        .ok_or_else(|| Error::InvalidParameter(format!("unknown claim {id:?}")))
}

fn sequences_up_to(max_size: usize) -> Vec<CaterpillarSequence> {
    (3..=max_size).flat_map(CaterpillarSequence::all_of_size).collect()
}

fn words_up_to(max_len: usize) -> Vec<BinaryWord> {
    (0..=max_len).flat_map(BinaryWord::all_of_length).collect()
}

fn pnw_up_to(max_len: usize) -> Vec<BinaryWord> {
    (0..=max_len)
        .flat_map(|n| enumerate_pnw(n).expect("within limit"))
        .collect()
}

fn oracle_of(s: &CaterpillarSequence) -> LeafFunction {
    leaf_function_bruteforce(&caterpillar_graph(s)).expect("caterpillar within oracle bound")
}

fn finite(lf: &LeafFunction, i: usize) -> Option<usize> {
    lf.get(i).and_then(LeafValue::finite)
}

fn subsequence_partial_order(n: usize) -> Outcome {
    let seqs = sequences_up_to(n);
    let m = seqs.len();
    let rel: Vec<Vec<bool>> = seqs
        .iter()
        .map(|a| seqs.iter().map(|b| a.is_subsequence_of(b)).collect())
        .collect();
    let idx: Vec<usize> = (0..m).collect();
    let mut out = sweep(&idx, |&x| {
        let mut f = Vec::new();
        if !rel[x][x] {
            f.push(format!("not reflexive at {}", seqs[x]));
        }
        for y in 0..m {
            if x != y && rel[x][y] && rel[y][x] {
                f.push(format!("not antisymmetric: {} and {}", seqs[x], seqs[y]));
            }
            if !rel[x][y] {
                continue;
            }
            for z in 0..m {
                if rel[y][z] && !rel[x][z] {
                    f.push(format!("not transitive: {} {} {}", seqs[x], seqs[y], seqs[z]));
                }
            }
        }
        f
    });
    out.instances = (m * m * m) as u64;
    out
}

fn pairs_up_to(n: usize) -> (Vec<CaterpillarSequence>, Vec<(usize, usize)>) {
    let seqs = sequences_up_to(n);
    let m = seqs.len();
    let pairs = (0..m).flat_map(|a| (0..m).map(move |b| (a, b))).collect();
    (seqs, pairs)
}

fn graft_monoid(n: usize) -> Outcome {
    let seqs = sequences_up_to(n);
    let id = CaterpillarSequence::identity();
    let idx: Vec<usize> = (0..seqs.len()).collect();
    let mut out = sweep(&idx, |&a| {
        let s = &seqs[a];
        let mut f = Vec::new();
        if s.graft(&id) != *s || id.graft(s) != *s {
            f.push(format!("identity fails at {s}"));
        }
        for t in &seqs {
            let st = s.graft(t);
            if st.size() != s.size() + t.size() - 3 || st.leaves() + 2 != s.leaves() + t.leaves() {
                f.push(format!("size or leaves not additive: {s} <> {t}"));
            }
            for u in &seqs {
                if st.graft(u) != s.graft(&t.graft(u)) {
                    f.push(format!("not associative: {s} {t} {u}"));
                }
            }
        }
        f
    });
    out.instances = (seqs.len() as u64).pow(3);
    out
}

fn graft_reversal(n: usize) -> Outcome {
    let (seqs, pairs) = pairs_up_to(n);
    sweep(&pairs, |&(a, b)| {
        let (s, t) = (&seqs[a], &seqs[b]);
        Outcome::single(s.graft(t).reversal() == t.reversal().graft(&s.reversal()), || {
            format!("reversal of {s} <> {t}")
        })
    })
}

fn graft_upper_bound(n: usize) -> Outcome {
    let (seqs, pairs) = pairs_up_to(n);
    sweep(&pairs, |&(a, b)| {
        let (s, t) = (&seqs[a], &seqs[b]);
        let st = s.graft(t);
        Outcome::single(s.is_subsequence_of(&st) && t.is_subsequence_of(&st), || {
            format!("{s} or {t} not below {st}")
        })
    })
}

fn left_right_subsequences(n: usize) -> Outcome {
    let seqs = sequences_up_to(n);
    sweep(&seqs, |s| {
        let mut f = Vec::new();
        for i in 3..=s.size() {
            let (l, r) = (s.left(i).unwrap(), s.right(i).unwrap());
            if l.size() != i || r.size() != i || !l.is_subsequence_of(s) || !r.is_subsequence_of(s) {
                f.push(format!("left/right of {s} at {i}"));
            }
            if s.reversal().left(i).unwrap() != r.reversal() {
                f.push(format!("reversal symmetry of {s} at {i}"));
            }
        }
        f
    })
}

fn decomposition(n: usize) -> Outcome {
    let seqs = sequences_up_to(n);
    sweep(&seqs, |s| {
        (3..=s.size())
            .filter(|&i| {
                let (l, r) = s.decompose(i).unwrap();
                l.graft(&r) != *s
            })
            .map(|i| format!("decompose {s} at {i}"))
            .collect()
    })
}

fn rc_morphism(n: usize) -> Outcome {
    let words = words_up_to(n);
    let rcs: Vec<CaterpillarSequence> = words.iter().map(BinaryWord::reading_caterpillar).collect();
    let idx: Vec<usize> = (0..words.len()).collect();
    let mut out = sweep(&idx, |&a| {
        let u = &words[a];
        let mut f = Vec::new();
        if u.reversed().reading_caterpillar() != rcs[a].reversal() {
            f.push(format!("reversal at {u:?}"));
        }
        for (b, v) in words.iter().enumerate() {
            if u.concat(v).reading_caterpillar() != rcs[a].graft(&rcs[b]) {
                f.push(format!("rc({u}{v}) != rc({u}) <> rc({v})"));
            }
        }
        f
    });
    out.instances = (words.len() * words.len()) as u64;
    out
}

fn rc_word_roundtrip(n: usize) -> Outcome {
    let words = words_up_to(n);
    let mut out = sweep(&words, |w| {
        Outcome::single(w.reading_caterpillar().word() == *w, || format!("word_of(rc({w}))"))
    });
    let seqs = sequences_up_to(n + 3);
    let back = sweep(&seqs, |s| {
        Outcome::single(s.word().reading_caterpillar() == *s, || format!("rc(word_of({s}))"))
    });
    out.instances += back.instances;
    out.failures.extend(back.failures);
    out
}

fn rc_prefix_suffix_laws(n: usize) -> Outcome {
    let words = words_up_to(n);
    sweep(&words, |w| {
        let s = w.reading_caterpillar();
        let mut f = Vec::new();
        if s.size() != w.len() + 3 || s.leaves() != w.ones() + 2 {
            f.push(format!("size or leaves of rc({w})"));
        }
        for a in [false, true] {
            let mut wa = w.clone();
            wa.push(a);
            if wa.reading_caterpillar().leaves() != s.leaves() + a as usize {
                f.push(format!("leaves after appending to {w}"));
            }
        }
        for i in 3..=s.size() {
            let (p, q) = (w.prefix(i - 3), w.suffix(i - 3));
            let (l, r) = (s.left(i).unwrap(), s.right(i).unwrap());
            if l != p.reading_caterpillar() || l.leaves() != p.ones() + 2 {
                f.push(format!("left of rc({w}) at {i}"));
            }
            if r != q.reading_caterpillar() || r.leaves() != q.ones() + 2 {
                f.push(format!("right of rc({w}) at {i}"));
            }
        }
        f
    })
}

fn f1_profile_laws(n: usize) -> Outcome {
    let words = words_up_to(n);
    sweep(&words, |w| {
        let profile = w.f1_profile();
        let steps_ok = profile.values().windows(2).all(|d| d[1] == d[0] || d[1] == d[0] + 1);
        let ok = steps_ok
            && w.pnf().f1_profile() == profile
            && w.is_k_prefix_normal(0) == w.is_prefix_normal();
        Outcome::single(ok, || format!("profile laws at {w:?}"))
    })
}

fn prefix_normal_witness(n: usize) -> Outcome {
    let words = words_up_to(n);
    sweep(&words, |w| {
        let ok = match w.prefix_normal_violation() {
            None => w.is_prefix_normal(),
            Some(v) => {
                let (u, u2) = v.abelian_pair();
                let mut u0 = u.clone();
                u0.push(false);
                let mut one_u2 = BinaryWord::new(vec![1]).unwrap();
                one_u2 = one_u2.concat(&u2);
                !w.is_prefix_normal()
                    && u.len() == u2.len()
                    && u.ones() == u2.ones()
                    && w.prefix(u0.len()) == u0
                    && w.factor(v.factor_start, one_u2.len()) == one_u2
            }
        };
        Outcome::single(ok, || format!("witness for {w:?}"))
    })
}

fn leaf_word_of_prefix_normal(n: usize) -> Outcome {
    let words = pnw_up_to(n);
    sweep(&words, |w| {
        let s = w.reading_caterpillar();
        let lf = oracle_of(&s);
        let ok = lf == s.leaf_function()
            && lf == leaf_function_from_word(w)
            && delta_leaf_word(&lf).ok().and_then(|d| d.to_binary()).as_ref() == Some(w)
            && realize_caterpillar(&lf).as_ref() == Ok(&s);
        Outcome::single(ok, || format!("leaf word of rc({w:?})"))
    })
}

fn leaf_word_is_pnf(n: usize) -> Outcome {
    let words = words_up_to(n);
    sweep(&words, |w| {
        let lf = oracle_of(&w.reading_caterpillar());
        let word = delta_leaf_word(&lf).ok().and_then(|d| d.to_binary());
        let ok = word.as_ref() == Some(&w.pnf()) && w.pnf().is_prefix_normal();
        Outcome::single(ok, || format!("leaf word of rc({w:?}) is {word:?}"))
    })
}

fn fully_leafed_left_prefix(n: usize) -> Outcome {
    let words = pnw_up_to(n);
    sweep(&words, |w| {
        let s = w.reading_caterpillar();
        let lf = oracle_of(&s);
        (3..=s.size())
            .filter(|&i| finite(&lf, i) != Some(s.left(i).unwrap().leaves()))
            .map(|i| format!("left of rc({w:?}) at {i}"))
            .collect()
    })
}

fn pnf_uniqueness(n: usize) -> Outcome {
    let lengths: Vec<usize> = (0..=n).collect();
    let mut out = sweep(&lengths, |&len| {
        let mut classes: BTreeMap<Vec<usize>, Vec<BinaryWord>> = BTreeMap::new();
        for w in BinaryWord::all_of_length(len) {
            classes.entry(w.f1_profile().values().to_vec()).or_default().push(w);
        }
        let mut f = Vec::new();
        for members in classes.values() {
            let normal: Vec<&BinaryWord> = members.iter().filter(|w| w.is_prefix_normal()).collect();
            if normal.len() != 1 || members.iter().any(|w| w.pnf() != *normal[0]) {
                f.push(format!("class of {:?} has prefix normal members {normal:?}", members[0]));
            }
        }
        f
    });
    out.instances = (0..=n).map(|l| 1u64 << l).sum();
    out
}

fn leaf_equivalence_iff_profile(n: usize) -> Outcome {
    let mut out = Outcome {
        instances: 0,
        failures: Vec::new(),
    };
    for len in 0..=n {
        let words: Vec<BinaryWord> = BinaryWord::all_of_length(len).collect();
        let lfs: Vec<LeafFunction> = words
            .par_iter()
            .map(|w| oracle_of(&w.reading_caterpillar()))
            .collect();
        let idx: Vec<usize> = (0..words.len()).collect();
        let part = sweep(&idx, |&a| {
            let mut f = Vec::new();
            for b in a..words.len() {
                let same_profile = words[a].equivalent(&words[b]);
                if (lfs[a] == lfs[b]) != same_profile
                    || leaf_equivalent(&words[a], &words[b]) != same_profile
                {
                    f.push(format!("{} vs {}", words[a], words[b]));
                }
            }
            f
        });
        let m = words.len() as u64;
        out.instances += m * (m + 1) / 2;
        out.failures.extend(part.failures);
    }
    out
}

fn factor_subsequences(n: usize) -> Outcome {
    let words = words_up_to(n);
    sweep(&words, |w| {
        let s = w.reading_caterpillar();
        let mut f = Vec::new();
        for len in 0..=w.len() {
            for start in 0..=w.len() - len {
                let u = w.factor(start, len);
                let r = u.reading_caterpillar();
                if !r.is_subsequence_of(&s) || r.size() != len + 3 || r.leaves() != u.ones() + 2 {
                    f.push(format!("factor {u:?} of {w:?}"));
                }
            }
        }
        f
    })
}

fn fully_leafed_left_right(n: usize) -> Outcome {
    let words = words_up_to(n);
    sweep(&words, |w| {
        let s = w.reading_caterpillar();
        let lf = oracle_of(&s);
        let size = s.size();
        let mut f = Vec::new();
        for i in 3..=size {
            let target = finite(&lf, i);
            let lr = (i..=size).any(|j| Some(s.right(j).unwrap().left(i).unwrap().leaves()) == target);
            let rl = (i..=size).any(|j| Some(s.left(j).unwrap().right(i).unwrap().leaves()) == target);
            if !lr || !rl {
                f.push(format!("rc({w:?}) at {i}"));
            }
        }
        f
    })
}

fn trees_from(min: usize, n: usize) -> Vec<Graph> {
    (min..=n)
        .flat_map(|order| enumerate_free_trees(order).expect("within limit"))
        .collect()
}

fn tree_leaf_words_prefix_normal(n: usize) -> Outcome {
    let trees = trees_from(3, n);
    let words: Vec<Option<BinaryWord>> = trees
        .par_iter()
        .map(|t| {
            let lf = leaf_function_bruteforce(t).expect("within oracle bound");
            delta_leaf_word(&lf).ok().and_then(|d| d.to_binary())
        })
        .collect();
    // (order, word) -> (count, first tree index)
    let mut bad: BTreeMap<(usize, String), (usize, usize)> = BTreeMap::new();
    for (idx, (t, w)) in trees.iter().zip(&words).enumerate() {
        let word = match w {
            Some(w) if w.is_prefix_normal() => continue,
            Some(w) => w.to_string(),
            None => "non-binary".to_string(),
        };
        bad.entry((t.vertex_count(), word)).or_insert((0, idx)).0 += 1;
    }
    let failures = bad
        .into_iter()
        .map(|((order, word), (count, idx))| {
            format!(
                "leaf word {word} not prefix normal: {count} tree(s) on {order} vertices, e.g. {}",
                canonical_form(&trees[idx]).expect("tree")
            )
        })
        .collect();
    Outcome {
        instances: trees.len() as u64,
        failures,
    }
}

fn tree_leaf_functions_monotone(n: usize) -> Outcome {
    let trees = trees_from(1, n);
    sweep(&trees, |t| {
        let lf = leaf_function_bruteforce(t).expect("within oracle bound");
        Outcome::single(lf.is_non_decreasing(), || {
            format!("{} has leaf function {lf}", canonical_form(t).expect("tree"))
        })
    })
}

/// The expected leaf word `1^{k+1} 0^k 1 0^k 1^{k+1} 0^k 1^{k+1}`.
pub fn fk_expected_word(k: usize) -> BinaryWord {
    let mut bits = Vec::new();
    for (bit, count) in [(1, k + 1), (0, k), (1, 1), (0, k), (1, k + 1), (0, k), (1, k + 1)] {
        bits.extend(std::iter::repeat(bit).take(count));
    }
    BinaryWord::new(bits).expect("binary")
}

fn fk_leaf_words(max_k: usize) -> Outcome {
    let ks: Vec<usize> = (1..=max_k).collect();
    sweep(&ks, |&k| {
        let g = fk_tree(k).expect("k >= 1");
        let lf = leaf_function_with(&g, &OracleConfig::pruned(g.vertex_count()))
            .expect("within the mask width");
        let word = delta_leaf_word(&lf).ok().and_then(|d| d.to_binary());
        let ok = match &word {
            Some(w) => {
                *w == fk_expected_word(k) && w.is_k_prefix_normal(k) && !w.is_k_prefix_normal(k - 1)
            }
            None => false,
        };
        Outcome::single(ok, || format!("F_{k} has leaf word {word:?}"))
    })
}

/// Leaf function of the wheel with `n` rim vertices, in closed form.
pub fn wheel_formula(n: usize) -> Vec<LeafValue> {
    (0..=n + 1)
        .map(|i| match i {
            0 | 1 => LeafValue::Finite(0),
            2 => LeafValue::Finite(2),
            _ if i <= n / 2 + 1 => LeafValue::Finite(i - 1),
            _ if i < n => LeafValue::Finite(2),
            _ => LeafValue::NegInfinity,
        })
        .collect()
}

fn wheel_formula_claim(n: usize) -> Outcome {
    let sizes: Vec<usize> = (5..=n).collect();
    sweep(&sizes, |&m| {
        let lf = leaf_function_bruteforce(&wheel(m).expect("m >= 3")).expect("within bound");
        Outcome::single(lf.values() == wheel_formula(m).as_slice(), || {
            format!("wheel({m}) has leaf function {lf}")
        })
    })
}

fn caterpillar_oracle_agreement(n: usize) -> Outcome {
    let mut seqs = sequences_up_to(n);
    let mut rng = StdRng::seed_from_u64(0x1eaf);
    for _ in 0..200 {
        let size = rng.gen_range(3..=20);
        let w = BinaryWord::from_index(rng.gen_range(0..1u64 << (size - 3)), size - 3);
        seqs.push(w.reading_caterpillar());
    }
    sweep(&seqs, |s| {
        Outcome::single(oracle_of(s) == s.leaf_function(), || format!("mismatch at {s}"))
    })
}

fn non_tree_leaf_functions(n: usize) -> Outcome {
    let mut out = Outcome {
        instances: 0,
        failures: Vec::new(),
    };
    for order in 1..=n {
        let slots: Vec<(usize, usize)> =
            (0..order).flat_map(|u| (u + 1..order).map(move |v| (u, v))).collect();
        let masks: Vec<u64> = (0..1u64 << slots.len()).collect();
        let part = sweep(&masks, |&mask| {
            let edges = slots
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e);
            let g = Graph::new(order, edges).expect("simple");
            if !g.is_connected() {
                return Vec::new();
            }
            let lf = leaf_function_bruteforce(&g).expect("within bound");
            let mut ok = lf.is_non_decreasing() == g.is_tree();
            if order >= 3 && g.edge_count() < slots.len() {
                ok &= lf.get(3) == Some(LeafValue::Finite(2));
            }
            Outcome::single(ok, || format!("graph {:?}: {lf}", g.edges().collect::<Vec<_>>()))
        });
        out.instances += part.instances;
        out.failures.extend(part.failures);
    }
    out
}
