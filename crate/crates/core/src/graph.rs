//! Simple undirected graphs on dense vertex labels `0..n`.
//!
//! Edges are kept as canonical `(min, max)` pairs in a sorted set so that
//! every iteration order (and therefore every witness reported by the
//! enumerators) is reproducible.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::caterpillar::CaterpillarSequence;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

/// The result of [`Graph::induced_subgraph`]: the relabeled graph plus the
/// original label of every new vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub index_map: Vec<usize>,
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    /// Builds a simple graph, rejecting self-loops, repeated edges and
    /// endpoints outside `0..n`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for vertex in [u, v] {
            if vertex >= self.n {
                return Err(Error::VertexOutOfRange { vertex, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let key = (u.min(v), u.max(v));
        if !self.edges.insert(key) {
            return Err(Error::DuplicateEdge(key.0, key.1));
        }
        for (a, b) in [(u, v), (v, u)] {
            let row = &mut self.adjacency[a];
            let pos = row.partition_point(|&x| x < b);
            row.insert(pos, b);
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adjacency[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adjacency[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// `G[U]` with vertices relabeled `0..|U|` in increasing original order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<InducedSubgraph> {
        let mut index_map: Vec<usize> = vertices.to_vec();
        index_map.sort_unstable();
        index_map.dedup();
        if let Some(&vertex) = index_map.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex, n: self.n });
        }
        let mut relabel = vec![usize::MAX; self.n];
        for (new, &old) in index_map.iter().enumerate() {
            relabel[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| relabel[u] != usize::MAX && relabel[v] != usize::MAX)
            .map(|&(u, v)| (relabel[u], relabel[v]));
        let graph = Graph::new(index_map.len(), edges)?;
        Ok(InducedSubgraph { graph, index_map })
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == self.n
    }

    /// Connected with `n - 1` edges. The empty graph counts as the empty tree.
    pub fn is_tree(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.edges.len() == self.n - 1 && self.is_connected()
    }

    /// Number of degree-one vertices of a tree.
    pub fn leaf_count(&self) -> Result<usize> {
        if !self.is_tree() {
            return Err(Error::NotATree);
        }
        Ok((0..self.n).filter(|&u| self.degree(u) == 1).count())
    }

    /// Parses the edge-list text format: a header line `n m` followed by `m`
    /// lines `u v`.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|line| !line.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing header line".into()))?;
        let (n, m) = parse_pair(header)?;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            edges.push(parse_pair(line)?);
        }
        if edges.len() != m {
            return Err(Error::Parse(format!(
                "header announces {m} edges, found {}",
                edges.len()
            )));
        }
        Graph::new(n, edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Graphviz `graph` text; vertices in `highlight` get `color=blue`.
    pub fn to_dot(&self, highlight: Option<&[usize]>) -> String {
        let marked: BTreeSet<usize> = highlight.unwrap_or(&[]).iter().copied().collect();
        let mut out = String::from("graph G {\n");
        for u in 0..self.n {
            if marked.contains(&u) {
                let _ = writeln!(out, "  {u} [color=blue];");
            } else {
                let _ = writeln!(out, "  {u};");
            }
        }
        for &(u, v) in &self.edges {
            if marked.contains(&u) && marked.contains(&v) {
                let _ = writeln!(out, "  {u} -- {v} [color=blue];");
            } else {
                let _ = writeln!(out, "  {u} -- {v};");
            }
        }
        out.push_str("}\n");
        out
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(|tok| {
        tok.parse::<usize>()
            .map_err(|e| Error::Parse(format!("{tok:?}: {e}")))
    });
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a?, b?)),
        _ => Err(Error::Parse(format!("expected two integers, got {line:?}"))),
    }
}

/// Wheel `W_n`: a cycle on `n` rim vertices `1..=n` and hub `0`.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "wheel needs at least 3 rim vertices, got {n}"
        )));
    }
    let rim = (1..=n).map(|i| (i, i % n + 1));
    let spokes = (1..=n).map(|i| (0, i));
    Graph::new(n + 1, rim.chain(spokes))
}

/// Star `K_{1,m}` centered at vertex `0`.
pub fn star(m: usize) -> Graph {
    Graph::new(m + 1, (1..=m).map(|i| (0, i))).expect("star edges are simple")
}

/// Path on `n` vertices.
pub fn chain(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("chain needs at least 1 vertex".into()));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(n, edges).expect("complete graph edges are simple")
}

/// The caterpillar of a sequence: spine `0..k`, then the pendant leaves of
/// each spine vertex in spine order.
pub fn caterpillar_graph(seq: &CaterpillarSequence) -> Graph {
    let s = seq.as_slice();
    let k = s.len();
    let mut edges: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
    let mut next = k;
    for (spine, &count) in s.iter().enumerate() {
        for _ in 0..count {
            edges.push((spine, next));
            next += 1;
        }
    }
    Graph::new(next, edges).expect("caterpillar edges are simple")
}

/// The tree `F_k`: a hub joined to three arms, each a chain of `k - 1`
/// vertices ending at the center of a star with `k + 2` leaves. For `k = 1`
/// the hub is joined to the star centers directly.
pub fn fk_tree(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidParameter("F_k needs k >= 1".into()));
    }
    let mut edges = Vec::new();
    let mut next = 1;
    for _ in 0..3 {
        let mut prev = 0;
        for _ in 0..k - 1 {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        let center = next;
        next += 1;
        edges.push((prev, center));
        for _ in 0..k + 2 {
            edges.push((center, next));
            next += 1;
        }
    }
    Graph::new(next, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn union_find_is_tree(g: &Graph) -> bool {
        let n = g.vertex_count();
        if n == 0 {
            return true;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let mut components = n;
        for (u, v) in g.edges() {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
        components == 1 && g.edge_count() == n - 1
    }

    #[test]
    fn induced_subgraph_relabels_in_order() {
        let p = chain(3).unwrap();
        let sub = p.induced_subgraph(&[1, 0]).unwrap();
        assert_eq!(sub.graph.vertex_count(), 2);
        assert_eq!(sub.graph.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(sub.index_map, vec![0, 1]);

        let empty = wheel(5).unwrap().induced_subgraph(&[]).unwrap();
        assert_eq!(empty.graph, Graph::empty(0));

        assert_eq!(
            p.induced_subgraph(&[0, 3]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn rejects_non_simple_edges() {
        assert_eq!(Graph::new(2, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::new(2, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert!(Graph::new(2, [(0, 2)]).is_err());
    }

    #[test]
    fn tree_predicate() {
        assert!(chain(3).unwrap().is_tree());
        assert!(!complete(3).is_tree());
        assert!(!wheel(10).unwrap().is_tree());
        assert!(Graph::empty(0).is_tree());
        assert!(Graph::empty(1).is_tree());
        assert!(!Graph::empty(2).is_tree());
    }

    #[test]
    fn leaf_counts() {
        assert_eq!(Graph::empty(1).leaf_count(), Ok(0));
        assert_eq!(chain(2).unwrap().leaf_count(), Ok(2));
        assert_eq!(star(5).leaf_count(), Ok(5));
        assert_eq!(complete(3).leaf_count(), Err(Error::NotATree));
    }

    #[test]
    fn wheel_shapes() {
        let k4 = wheel(3).unwrap();
        assert_eq!(k4, complete(4));
        let w10 = wheel(10).unwrap();
        assert_eq!((w10.vertex_count(), w10.edge_count()), (11, 20));
        let w4 = wheel(4).unwrap();
        assert_eq!(w4.degree(0), 4);
        assert!((1..=4).all(|v| w4.degree(v) == 3));
        assert!(wheel(2).is_err());
    }

    #[test]
    fn caterpillar_graphs() {
        let seq = |v: &[usize]| CaterpillarSequence::new(v.to_vec()).unwrap();
        // the 3-chain, centered at 0
        assert_eq!(
            caterpillar_graph(&seq(&[2])),
            Graph::new(3, [(0, 1), (0, 2)]).unwrap()
        );
        let c = caterpillar_graph(&seq(&[3, 0, 2, 4, 0, 1]));
        assert_eq!(c.vertex_count(), 16);
        assert_eq!(c.leaf_count(), Ok(10));
        assert_eq!(caterpillar_graph(&seq(&[5])), star(5));
        let spine: Vec<usize> = (0..6).map(|u| c.degree(u)).collect();
        assert_eq!(spine, vec![4, 2, 4, 6, 2, 2]);
    }

    #[test]
    fn caterpillar_graph_sizes_and_leaves() {
        for size in 3..=12 {
            for s in CaterpillarSequence::all_of_size(size) {
                let g = caterpillar_graph(&s);
                assert_eq!(g.vertex_count(), s.size());
                assert_eq!(g.leaf_count(), Ok(s.leaves()));
                assert!(union_find_is_tree(&g));
            }
        }
    }

    #[test]
    fn fk_tree_sizes() {
        for k in 1..=5 {
            let f = fk_tree(k).unwrap();
            assert_eq!(f.vertex_count(), 6 * k + 7);
            assert!(f.is_tree());
            assert!(union_find_is_tree(&f));
            assert_eq!(f.leaf_count(), Ok(3 * (k + 2)));
        }
        assert_eq!(fk_tree(1).unwrap().vertex_count(), 13);
        assert_eq!(fk_tree(2).unwrap().vertex_count(), 19);
        assert!(fk_tree(0).is_err());
    }

    #[test]
    fn generators_agree_with_union_find() {
        let graphs = [
            chain(1).unwrap(),
            chain(7).unwrap(),
            star(0),
            star(6),
            wheel(6).unwrap(),
            cycle(5).unwrap(),
            complete(5),
        ];
        for g in &graphs {
            assert_eq!(g.is_tree(), union_find_is_tree(g), "{g:?}");
        }
    }

    #[test]
    fn edge_list_round_trip() {
        let w = wheel(5).unwrap();
        let text = w.to_edge_list();
        assert!(text.starts_with("6 10\n"));
        assert_eq!(Graph::from_edge_list(&text).unwrap(), w);
        assert!(Graph::from_edge_list("3 2\n0 1\n").is_err());
        assert!(Graph::from_edge_list("3 1\n0 x\n").is_err());
    }

    #[test]
    fn dot_highlights_vertices() {
        let dot = chain(3).unwrap().to_dot(Some(&[0, 1]));
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("0 [color=blue];"));
        assert!(dot.contains("  2;"));
        assert!(dot.contains("0 -- 1 [color=blue];"));
        assert!(dot.contains("1 -- 2;"));
    }
}
