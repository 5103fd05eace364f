//! Free (unlabeled) trees: canonical encodings and enumeration by order.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_FREE_TREE_ORDER: usize = 14;

/// Parenthesis encoding of the tree rooted at `root`, children sorted.
fn rooted_encoding(g: &Graph, root: usize) -> String {
    fn encode(g: &Graph, u: usize, parent: usize) -> String {
        let mut children: Vec<String> = g
            .neighbors(u)
            .iter()
            .filter(|&&v| v != parent)
            .map(|&v| encode(g, v, u))
            .collect();
        children.sort_unstable();
        let mut out = String::with_capacity(2 + children.iter().map(String::len).sum::<usize>());
        out.push('(');
        children.iter().for_each(|c| out.push_str(c));
        out.push(')');
        out
    }
    encode(g, root, usize::MAX)
}

/// The one or two centers, found by peeling leaves layer by layer.
fn centers(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for &v in g.neighbors(leaf) {
                if degree[v] > 0 {
                    degree[v] -= 1;
                    if degree[v] == 1 {
                        next.push(v);
                    }
                }
            }
        }
        layer = next;
    }
    let mut out = layer;
    out.sort_unstable();
    out
}

/// Isomorphism-invariant encoding of a tree: the smallest rooted encoding
/// over its centers.
pub fn canonical_form(g: &Graph) -> Result<String> {
    if g.vertex_count() == 0 || !g.is_tree() {
        return Err(Error::NotATree);
    }
    Ok(centers(g)
        .into_iter()
        .map(|c| rooted_encoding(g, c))
        .min()
        .expect("a nonempty tree has a center"))
}

/// Rebuilds a tree from an encoding, labeling vertices in preorder.
fn from_encoding(code: &str) -> Graph {
    let mut edges = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut next = 0;
    for c in code.chars() {
        if c == '(' {
            if let Some(&parent) = stack.last() {
                edges.push((parent, next));
            }
            stack.push(next);
            next += 1;
        } else {
            stack.pop();
        }
    }
    Graph::new(next, edges).expect("encodings describe simple trees")
}

/// One representative per isomorphism class of trees on `n` vertices, in
/// increasing order of canonical encoding.
pub fn enumerate_free_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_FREE_TREE_ORDER {
        return Err(Error::SizeOutOfRange {
            size: n,
            min: 1,
            max: MAX_FREE_TREE_ORDER,
        });
    }
    let mut level: BTreeSet<String> = BTreeSet::from(["()".to_string()]);
    for order in 1..n {
        let mut next = BTreeSet::new();
        for code in &level {
            let g = from_encoding(code);
            for u in 0..order {
                let grown = Graph::new(order + 1, g.edges().chain([(u, order)]))
                    .expect("adding a pendant vertex keeps the graph simple");
                next.insert(canonical_form(&grown).expect("still a tree"));
            }
        }
        level = next;
    }
    Ok(level.iter().map(|code| from_encoding(code)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{chain, star};

    /// Prüfer decoding, used to list every labeled tree.
    fn prufer_tree(code: &[usize], n: usize) -> Graph {
        let mut degree = vec![1; n];
        for &c in code {
            degree[c] += 1;
        }
        let mut edges = Vec::new();
        for &c in code {
            let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
            edges.push((leaf, c));
            degree[leaf] -= 1;
            degree[c] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        edges.push((rest[0], rest[1]));
        Graph::new(n, edges).unwrap()
    }

    /// Backtracking isomorphism test, independent of the canonical encoding.
    fn isomorphic(a: &Graph, b: &Graph) -> bool {
        let n = a.vertex_count();
        if n != b.vertex_count() || a.edge_count() != b.edge_count() {
            return false;
        }
        let mut da: Vec<usize> = (0..n).map(|u| a.degree(u)).collect();
        let mut db: Vec<usize> = (0..n).map(|u| b.degree(u)).collect();
        da.sort_unstable();
        db.sort_unstable();
        if da != db {
            return false;
        }
        fn extend(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            let u = map.len();
            if u == a.vertex_count() {
                return true;
            }
            for v in 0..b.vertex_count() {
                if used[v] || a.degree(u) != b.degree(v) {
                    continue;
                }
                if (0..u).all(|x| a.has_edge(x, u) == b.has_edge(map[x], v)) {
                    map.push(v);
                    used[v] = true;
                    if extend(a, b, map, used) {
                        return true;
                    }
                    map.pop();
                    used[v] = false;
                }
            }
            false
        }
        extend(a, b, &mut Vec::new(), &mut vec![false; n])
    }

    fn labeled_census(n: usize) -> usize {
        let mut reps: Vec<Graph> = Vec::new();
        let total = n.pow(n as u32 - 2);
        for idx in 0..total {
            let mut code = Vec::with_capacity(n - 2);
            let mut x = idx;
            for _ in 0..n - 2 {
                code.push(x % n);
                x /= n;
            }
            let t = prufer_tree(&code, n);
            if !reps.iter().any(|r| isomorphic(r, &t)) {
                reps.push(t);
            }
        }
        reps.len()
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_free_trees(1).unwrap().len(), 1);
        let three = enumerate_free_trees(3).unwrap();
        assert_eq!(three.len(), 1);
        assert_eq!(canonical_form(&three[0]), canonical_form(&chain(3).unwrap()));
        let four = enumerate_free_trees(4).unwrap();
        assert_eq!(four.len(), 2);
        let codes: BTreeSet<String> = four.iter().map(|t| canonical_form(t).unwrap()).collect();
        assert!(codes.contains(&canonical_form(&chain(4).unwrap()).unwrap()));
        assert!(codes.contains(&canonical_form(&star(3)).unwrap()));
    }

    #[test]
    fn seven_vertices_against_labeled_enumeration() {
        let expected = labeled_census(7);
        assert_eq!(expected, 11);
        assert_eq!(enumerate_free_trees(7).unwrap().len(), expected);
    }

    #[test]
    fn known_sequence_up_to_fourteen() {
        let counts = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159];
        for (n, &count) in (1..=14).zip(counts.iter()) {
            let trees = enumerate_free_trees(n).unwrap();
            assert_eq!(trees.len(), count, "n = {n}");
            assert!(trees.iter().all(|t| t.vertex_count() == n && t.is_tree()));
        }
        assert!(enumerate_free_trees(15).is_err());
        assert!(enumerate_free_trees(0).is_err());
    }

    #[test]
    fn canonical_form_is_label_independent() {
        let a = Graph::new(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let b = Graph::new(5, [(4, 3), (3, 2), (3, 0), (0, 1)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_ne!(canonical_form(&a), canonical_form(&chain(5).unwrap()));
        assert!(canonical_form(&Graph::empty(2)).is_err());
    }
}
