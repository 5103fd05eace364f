//! Exhaustive enumeration of induced subtrees.
//!
//! Every connected vertex set is grown from its smallest vertex (the anchor)
//! with an exclusive-neighborhood extension set, so each induced subtree is
//! produced exactly once. A candidate that would close a cycle is dropped
//! from the extension set for good, since every superset would contain the
//! same cycle. Vertex sets are `u64` bitmasks, which caps graphs at 64
//! vertices; the configurable default bound is much lower.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::leaf_function::{LeafFunction, LeafValue};

pub const DEFAULT_MAX_VERTICES: usize = 20;
const MASK_BITS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_vertices: usize,
    /// Fan anchors out over the rayon pool and merge by max.
    pub parallel: bool,
    /// Skip branches whose optimistic leaf counts cannot beat the best seen.
    pub prune: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_vertices: DEFAULT_MAX_VERTICES,
            parallel: false,
            prune: false,
        }
    }
}

impl OracleConfig {
    pub fn pruned(max_vertices: usize) -> Self {
        OracleConfig {
            max_vertices,
            parallel: false,
            prune: true,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Node {
    set: u64,
    size: usize,
    leaves: usize,
    ext: u64,
    closed_nbhd: u64,
    above_anchor: u64,
}

impl Node {
    /// Upper bound on how many more vertices this branch can add.
    fn room(&self) -> usize {
        (self.ext | (self.above_anchor & !self.closed_nbhd)).count_ones() as usize
    }
}

trait Visitor {
    /// Sees one induced subtree; returning `false` skips its extensions.
    fn visit(&mut self, node: &Node) -> bool;
}

struct Engine {
    adj: Vec<u64>,
}

impl Engine {
    fn new(g: &Graph) -> Self {
        let adj = (0..g.vertex_count())
            .map(|u| g.neighbors(u).iter().fold(0u64, |m, &v| m | (1 << v)))
            .collect();
        Engine { adj }
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    fn root(&self, anchor: usize) -> Node {
        let bit = 1u64 << anchor;
        let above_anchor = !((bit << 1).wrapping_sub(1)) & full_mask(self.n());
        Node {
            set: bit,
            size: 1,
            leaves: 0,
            ext: self.adj[anchor] & above_anchor,
            closed_nbhd: self.adj[anchor] | bit,
            above_anchor,
        }
    }

    fn grow<V: Visitor>(&self, node: Node, visitor: &mut V) {
        if !visitor.visit(&node) {
            return;
        }
        let mut ext = node.ext;
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            let wbit = 1u64 << w;
            ext &= !wbit;
            let attach = self.adj[w] & node.set;
            debug_assert_eq!(attach.count_ones(), 1);
            let parent = attach.trailing_zeros() as usize;
            let leaves = if node.size == 1 {
                2
            } else {
                let parent_was_leaf = (self.adj[parent] & node.set).count_ones() == 1;
                node.leaves + 1 - usize::from(parent_was_leaf)
            };
            let fresh = self.adj[w] & !node.closed_nbhd & node.above_anchor;
            let child = Node {
                set: node.set | wbit,
                size: node.size + 1,
                leaves,
                ext: (ext & !self.adj[w]) | fresh,
                closed_nbhd: node.closed_nbhd | self.adj[w],
                above_anchor: node.above_anchor,
            };
            self.grow(child, visitor);
        }
    }
}

fn full_mask(n: usize) -> u64 {
    if n >= MASK_BITS {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_bound(g: &Graph, bound: usize) -> Result<()> {
    let n = g.vertex_count();
    let bound = bound.min(MASK_BITS);
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "graph size",
            value: n,
            bound,
        });
    }
    Ok(())
}

/// Best leaf count per size, `None` for sizes with no induced subtree.
struct LeafMax {
    best: Vec<Option<usize>>,
    prune: bool,
}

impl LeafMax {
    fn new(n: usize, prune: bool) -> Self {
        LeafMax {
            best: vec![None; n + 1],
            prune,
        }
    }

    fn can_improve(&self, node: &Node) -> bool {
        let last = (node.size + node.room()).min(self.best.len() - 1);
        (node.size + 1..=last).any(|j| {
            let optimistic = if node.size == 1 {
                j - 1
            } else {
                (node.leaves + j - node.size).min(j - 1)
            };
            self.best[j].map_or(true, |b| b < optimistic)
        })
    }

    fn merge(mut self, other: LeafMax) -> LeafMax {
        for (a, b) in self.best.iter_mut().zip(other.best) {
            *a = (*a).max(b);
        }
        self
    }
}

impl Visitor for LeafMax {
    fn visit(&mut self, node: &Node) -> bool {
        let slot = &mut self.best[node.size];
        if slot.map_or(true, |b| b < node.leaves) {
            *slot = Some(node.leaves);
        }
        !self.prune || self.can_improve(node)
    }
}

/// Leaf function of `g` by exhaustive enumeration, default configuration.
pub fn leaf_function_bruteforce(g: &Graph) -> Result<LeafFunction> {
    leaf_function_with(g, &OracleConfig::default())
}

pub fn leaf_function_with(g: &Graph, config: &OracleConfig) -> Result<LeafFunction> {
    check_bound(g, config.max_vertices)?;
    let n = g.vertex_count();
    let engine = Engine::new(g);
    let run = |anchor: usize| {
        let mut visitor = LeafMax::new(n, config.prune);
        engine.grow(engine.root(anchor), &mut visitor);
        visitor
    };
    let merged = if config.parallel {
        (0..n)
            .into_par_iter()
            .map(run)
            .reduce(|| LeafMax::new(n, config.prune), LeafMax::merge)
    } else {
        let mut acc = LeafMax::new(n, config.prune);
        for anchor in 0..n {
            // later anchors reuse earlier bests for pruning
            let mut visitor = LeafMax {
                best: acc.best.clone(),
                prune: config.prune,
            };
            engine.grow(engine.root(anchor), &mut visitor);
            acc = acc.merge(visitor);
        }
        acc
    };
    let mut values = Vec::with_capacity(n + 1);
    values.push(LeafValue::Finite(0));
    values.extend(merged.best.into_iter().skip(1).map(|b| match b {
        Some(v) => LeafValue::Finite(v),
        None => LeafValue::NegInfinity,
    }));
    LeafFunction::new(values)
}

fn mask_to_vec(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// Lexicographic order of the sorted element lists of two equal-size sets.
fn lex_less(a: u64, b: u64) -> bool {
    let diff = a ^ b;
    diff != 0 && a & (diff & diff.wrapping_neg()) != 0
}

struct Collect {
    target: usize,
    found: Vec<(u64, usize)>,
}

impl Visitor for Collect {
    fn visit(&mut self, node: &Node) -> bool {
        if node.size == self.target {
            self.found.push((node.set, node.leaves));
            false
        } else {
            true
        }
    }
}

fn subtrees_of_size(g: &Graph, size: usize) -> Result<Vec<(u64, usize)>> {
    let n = g.vertex_count();
    if size > n {
        return Err(Error::SizeOutOfRange {
            size,
            min: 0,
            max: n,
        });
    }
    check_bound(g, MASK_BITS)?;
    if size == 0 {
        return Ok(vec![(0, 0)]);
    }
    let engine = Engine::new(g);
    let mut visitor = Collect {
        target: size,
        found: Vec::new(),
    };
    for anchor in 0..n {
        engine.grow(engine.root(anchor), &mut visitor);
    }
    let mut found = visitor.found;
    found.sort_by(|a, b| mask_to_vec(a.0).cmp(&mask_to_vec(b.0)));
    Ok(found)
}

/// All vertex sets of size `size` inducing a tree, each once, in
/// lexicographic order of their sorted elements.
pub fn enumerate_induced_subtrees(g: &Graph, size: usize) -> Result<Vec<Vec<usize>>> {
    Ok(subtrees_of_size(g, size)?
        .into_iter()
        .map(|(set, _)| mask_to_vec(set))
        .collect())
}

/// The lexicographically smallest fully leafed vertex set of size `size`,
/// or `None` when `g` has no induced subtree of that size.
pub fn fully_leafed_witness(g: &Graph, size: usize) -> Result<Option<Vec<usize>>> {
    let found = subtrees_of_size(g, size)?;
    let mut best: Option<(u64, usize)> = None;
    for (set, leaves) in found {
        best = match best {
            Some((bs, bl)) if bl > leaves || (bl == leaves && !lex_less(set, bs)) => Some((bs, bl)),
            _ => Some((set, leaves)),
        };
    }
    Ok(best.map(|(set, _)| mask_to_vec(set)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caterpillar::CaterpillarSequence;
    use crate::graph::{caterpillar_graph, chain, complete, cycle, star, wheel};
    use LeafValue::{Finite as F, NegInfinity as NI};

    /// Independent oracle: scan all 2^n subsets.
    fn subset_scan(g: &Graph) -> Vec<LeafValue> {
        let n = g.vertex_count();
        let mut best = vec![NI; n + 1];
        best[0] = F(0);
        for mask in 1u32..(1 << n) {
            let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let sub = g.induced_subgraph(&verts).unwrap().graph;
            if let Ok(l) = sub.leaf_count() {
                best[verts.len()] = best[verts.len()].max(F(l));
            }
        }
        best
    }

    #[test]
    fn wheel_ten() {
        let lf = leaf_function_bruteforce(&wheel(10).unwrap()).unwrap();
        let expect = [F(0), F(0), F(2), F(2), F(3), F(4), F(5), F(2), F(2), F(2), NI, NI];
        assert_eq!(lf.values(), &expect);
    }

    #[test]
    fn small_families() {
        let seq = CaterpillarSequence::new(vec![3, 1, 2]).unwrap();
        let lf = leaf_function_bruteforce(&caterpillar_graph(&seq)).unwrap();
        assert_eq!(lf, LeafFunction::from_finite(&[0, 0, 2, 2, 3, 4, 4, 5, 5, 6]).unwrap());
        let lf = leaf_function_bruteforce(&chain(5).unwrap()).unwrap();
        assert_eq!(lf, LeafFunction::from_finite(&[0, 0, 2, 2, 2, 2]).unwrap());
        let lf = leaf_function_bruteforce(&Graph::empty(0)).unwrap();
        assert_eq!(lf.values(), &[F(0)]);
        let lf = leaf_function_bruteforce(&Graph::empty(2)).unwrap();
        assert_eq!(lf.values(), &[F(0), F(0), NI]);
    }

    #[test]
    fn agrees_with_subset_scan() {
        let graphs = [
            wheel(6).unwrap(),
            wheel(7).unwrap(),
            cycle(6).unwrap(),
            complete(5),
            star(6),
            Graph::new(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6)]).unwrap(),
            Graph::new(6, [(0, 1), (2, 3), (3, 4)]).unwrap(),
        ];
        for g in &graphs {
            let expect = subset_scan(g);
            for config in [
                OracleConfig::default(),
                OracleConfig::pruned(20),
                OracleConfig {
                    parallel: true,
                    ..OracleConfig::default()
                },
                OracleConfig {
                    parallel: true,
                    prune: true,
                    max_vertices: 20,
                },
            ] {
                let lf = leaf_function_with(g, &config).unwrap();
                assert_eq!(lf.values(), expect.as_slice(), "{g:?} {config:?}");
            }
        }
    }

    #[test]
    fn size_bound() {
        let g = chain(21).unwrap();
        assert!(matches!(
            leaf_function_bruteforce(&g),
            Err(Error::BoundExceeded { value: 21, bound: 20, .. })
        ));
        assert!(leaf_function_with(&g, &OracleConfig::pruned(25)).is_ok());
    }

    #[test]
    fn enumeration_examples() {
        assert!(enumerate_induced_subtrees(&complete(3), 3).unwrap().is_empty());
        assert_eq!(
            enumerate_induced_subtrees(&chain(4).unwrap(), 2).unwrap(),
            vec![vec![0, 1], vec![1, 2], vec![2, 3]]
        );
        assert!(enumerate_induced_subtrees(&wheel(4).unwrap(), 5).unwrap().is_empty());
        assert_eq!(
            enumerate_induced_subtrees(&chain(2).unwrap(), 0).unwrap(),
            vec![Vec::<usize>::new()]
        );
        assert!(enumerate_induced_subtrees(&chain(2).unwrap(), 3).is_err());
    }

    #[test]
    fn enumeration_matches_subset_filter() {
        let g = wheel(7).unwrap();
        for size in 0..=g.vertex_count() {
            let expect: Vec<Vec<usize>> = {
                let mut sets: Vec<Vec<usize>> = (0u32..1 << g.vertex_count())
                    .filter(|m| m.count_ones() as usize == size)
                    .map(|m| (0..g.vertex_count()).filter(|&v| m >> v & 1 == 1).collect())
                    .filter(|vs: &Vec<usize>| g.induced_subgraph(vs).unwrap().graph.is_tree())
                    .collect();
                sets.sort();
                sets
            };
            assert_eq!(enumerate_induced_subtrees(&g, size).unwrap(), expect);
        }
    }

    #[test]
    fn witnesses() {
        assert_eq!(
            fully_leafed_witness(&chain(3).unwrap(), 3).unwrap(),
            Some(vec![0, 1, 2])
        );
        assert_eq!(
            fully_leafed_witness(&star(4), 0).unwrap(),
            Some(Vec::new())
        );
        let w10 = wheel(10).unwrap();
        for (size, leaves) in [(6, 5), (7, 2)] {
            let set = fully_leafed_witness(&w10, size).unwrap().unwrap();
            assert_eq!(set.len(), size);
            let sub = w10.induced_subgraph(&set).unwrap().graph;
            assert_eq!(sub.leaf_count(), Ok(leaves));
        }
        assert_eq!(fully_leafed_witness(&w10, 10).unwrap(), None);
        assert!(fully_leafed_witness(&w10, 12).is_err());
    }

    #[test]
    fn witness_is_lexicographically_first() {
        // star: every pair {0, leaf} has 2 leaves; smallest is {0, 1}
        assert_eq!(fully_leafed_witness(&star(4), 2).unwrap(), Some(vec![0, 1]));
        assert!(lex_less(0b0011, 0b0101));
        assert!(!lex_less(0b0101, 0b0011));
        assert!(!lex_less(0b0101, 0b0101));
    }
}
