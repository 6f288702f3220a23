//! Simple undirected graphs: edge-list ingestion, named generators, random
//! connected graphs, and exhaustive enumeration of small labeled connected
//! graphs by edge-subset bitmask.

use std::collections::HashSet;
use std::fmt::Write as _;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Largest vertex count supported by [`enumerate_connected`]; 2^21 edge
/// subsets at n = 7 is the practical ceiling.
pub const MAX_ENUM_N: usize = 7;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: self-loop at vertex {v}")]
    SelfLoop { line: usize, v: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("empty edge list")]
    Empty,
    #[error("{0}")]
    InvalidParam(String),
    #[error("enumeration supports 1 <= n <= {MAX_ENUM_N}, got {0}")]
    EnumRange(usize),
}

/// A simple undirected graph on vertices `0..n`. Edges are normalized to
/// `(u, v)` with `u < v` and kept sorted; degrees and connectivity are
/// computed once at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    degrees: Vec<usize>,
    connected: bool,
}

impl Graph {
    /// Builds a graph from a vertex count and an edge list, validating
    /// simplicity (no loops, no duplicates) and vertex range.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::InvalidParam("vertex count must be >= 1".into()));
        }
        let mut normalized = Vec::with_capacity(edges.len());
        let mut seen = HashSet::new();
        for (line, &(u, v)) in edges.iter().enumerate() {
            let line = line + 1;
            if u >= n || v >= n {
                return Err(GraphError::Parse {
                    line,
                    msg: format!("vertex id out of range: {} {}", u, v),
                });
            }
            if u == v {
                return Err(GraphError::SelfLoop { line, v });
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge { line, u: e.0, v: e.1 });
            }
            normalized.push(e);
        }
        normalized.sort_unstable();
        Ok(Graph::from_parts(n, normalized))
    }

    // Caller guarantees edges are normalized, unique, and in range.
    fn from_parts(n: usize, edges: Vec<(usize, usize)>) -> Graph {
        let mut degrees = vec![0usize; n];
        for &(u, v) in &edges {
            degrees[u] += 1;
            degrees[v] += 1;
        }
        let connected = bfs_connected(n, &edges);
        Graph { n, edges, degrees, connected }
    }

    /// Parses the edge-list text format: one edge per line, two
    /// whitespace-separated vertex ids; `#` comments and blank lines are
    /// skipped. `n` is `1 + max` vertex id seen.
    pub fn from_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut edges = Vec::new();
        let mut lines = Vec::new();
        let mut max_id = 0usize;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = trimmed.split_whitespace().collect();
            if tokens.len() != 2 {
                return Err(GraphError::Parse {
                    line,
                    msg: format!("expected two vertex ids, got {:?}", trimmed),
                });
            }
            let mut ids = [0usize; 2];
            for (slot, tok) in ids.iter_mut().zip(&tokens) {
                *slot = tok.parse().map_err(|_| GraphError::Parse {
                    line,
                    msg: format!("malformed vertex id {:?}", tok),
                })?;
            }
            max_id = max_id.max(ids[0]).max(ids[1]);
            edges.push((ids[0], ids[1]));
            lines.push(line);
        }
        if edges.is_empty() {
            return Err(GraphError::Empty);
        }
        let n = max_id + 1;
        let mut seen = HashSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for (&(u, v), &line) in edges.iter().zip(&lines) {
            if u == v {
                return Err(GraphError::SelfLoop { line, v });
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge { line, u: e.0, v: e.1 });
            }
            normalized.push(e);
        }
        normalized.sort_unstable();
        Ok(Graph::from_parts(n, normalized))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// Degree sequence d1 >= d2 >= ... >= dn.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut ds = self.degrees.clone();
        ds.sort_unstable_by(|a, b| b.cmp(a));
        ds
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    /// Serializes back to the edge-list text format, one `u v` line per
    /// edge in sorted order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            writeln!(out, "{} {}", u, v).unwrap();
        }
        out
    }

    /// The graph with vertex `i` renamed to `perm[i]`. Used by tests to
    /// check relabeling invariance of spectral quantities.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::from_edges(self.n, &edges).expect("relabeling preserves simplicity")
    }
}

fn bfs_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n <= 1 {
        return true;
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

/// Named graph families used throughout the test suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    /// `Star(n)` is K_{1,n-1}: vertex 0 joined to each of `1..n`.
    Star(usize),
    CompleteBipartite(usize, usize),
}

pub fn gen_family(family: Family) -> Result<Graph, GraphError> {
    match family {
        Family::Complete(n) => {
            if n < 1 {
                return Err(GraphError::InvalidParam("complete requires n >= 1".into()));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Ok(Graph::from_parts(n, edges))
        }
        Family::Path(n) => {
            if n < 1 {
                return Err(GraphError::InvalidParam("path requires n >= 1".into()));
            }
            let edges = (0..n.saturating_sub(1)).map(|u| (u, u + 1)).collect();
            Ok(Graph::from_parts(n, edges))
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(GraphError::InvalidParam("cycle requires n >= 3".into()));
            }
            let mut edges: Vec<(usize, usize)> =
                (0..n - 1).map(|u| (u, u + 1)).collect();
            edges.push((0, n - 1));
            edges.sort_unstable();
            Ok(Graph::from_parts(n, edges))
        }
        Family::Star(n) => {
            if n < 1 {
                return Err(GraphError::InvalidParam("star requires n >= 1".into()));
            }
            let edges = (1..n).map(|v| (0, v)).collect();
            Ok(Graph::from_parts(n, edges))
        }
        Family::CompleteBipartite(a, b) => {
            if a < 1 || b < 1 {
                return Err(GraphError::InvalidParam(
                    "complete_bipartite requires both sides >= 1".into(),
                ));
            }
            let mut edges = Vec::new();
            for u in 0..a {
                for v in a..a + b {
                    edges.push((u, v));
                }
            }
            Ok(Graph::from_parts(a + b, edges))
        }
    }
}

/// Samples G(n, p) and retries with an incremented attempt counter until the
/// result is connected. Deterministic in `(n, edge_prob, seed)`.
pub fn gen_random_connected(n: usize, edge_prob: f64, seed: u64) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::InvalidParam("random requires n >= 2".into()));
    }
    if !(edge_prob > 0.0 && edge_prob <= 1.0) {
        return Err(GraphError::InvalidParam(
            "edge probability must lie in (0, 1]".into(),
        ));
    }
    let mut attempt: u64 = 0;
    loop {
        let stream = seed.wrapping_add(attempt.wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let mut rng = ChaCha8Rng::seed_from_u64(stream);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen::<f64>() < edge_prob {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_parts(n, edges);
        if g.connected {
            return Ok(g);
        }
        attempt += 1;
    }
}

/// Number of vertex pairs, i.e. bits in an edge-subset mask for `n` vertices.
pub fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// The graph whose edge set is the given bitmask over vertex pairs in
/// lexicographic order: bit 0 is (0,1), bit 1 is (0,2), and so on.
pub fn graph_from_edge_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::with_capacity(mask.count_ones() as usize);
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_parts(n, edges)
}

/// Iterator over every labeled simple connected graph on `n` vertices, in
/// ascending edge-subset bitmask order.
pub struct ConnectedGraphs {
    n: usize,
    next_mask: u64,
    end: u64,
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_mask < self.end {
            let g = graph_from_edge_mask(self.n, self.next_mask);
            self.next_mask += 1;
            if g.connected {
                return Some(g);
            }
        }
        None
    }
}

pub fn enumerate_connected(n: usize) -> Result<ConnectedGraphs, GraphError> {
    if !(1..=MAX_ENUM_N).contains(&n) {
        return Err(GraphError::EnumRange(n));
    }
    Ok(ConnectedGraphs {
        n,
        next_mask: 0,
        end: 1u64 << pair_count(n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_path_three() {
        let g = Graph::from_edge_list("0 1\n1 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 2);
        assert_eq!(g.degree_sequence(), vec![2, 1, 1]);
        assert!(g.is_connected());
    }

    #[test]
    fn parses_cycle_four() {
        let g = Graph::from_edge_list("0 1\n1 2\n2 3\n3 0").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 4);
        assert!(g.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn parser_accepts_comments_and_crlf() {
        let g = Graph::from_edge_list("# a path\r\n0 1\r\n\r\n1 2\r\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn rejects_self_loop() {
        assert!(matches!(
            Graph::from_edge_list("0 0"),
            Err(GraphError::SelfLoop { .. })
        ));
    }

    #[test]
    fn rejects_duplicate_edge() {
        assert!(matches!(
            Graph::from_edge_list("0 1\n1 0"),
            Err(GraphError::DuplicateEdge { .. })
        ));
    }

    #[test]
    fn rejects_empty_input() {
        assert!(matches!(Graph::from_edge_list("# nothing"), Err(GraphError::Empty)));
    }

    #[test]
    fn rejects_malformed_token() {
        assert!(matches!(
            Graph::from_edge_list("0 x"),
            Err(GraphError::Parse { .. })
        ));
    }

    #[test]
    fn connectivity() {
        assert!(Graph::from_edge_list("0 1\n1 2").unwrap().is_connected());
        assert!(!Graph::from_edge_list("0 1\n2 3").unwrap().is_connected());
        assert!(gen_family(Family::Complete(5)).unwrap().is_connected());
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(gen_family(Family::Star(4)).unwrap().degree_sequence(), vec![3, 1, 1, 1]);
        assert_eq!(gen_family(Family::Complete(4)).unwrap().degree_sequence(), vec![3, 3, 3, 3]);
    }

    #[test]
    fn family_generators() {
        let k4 = gen_family(Family::Complete(4)).unwrap();
        assert_eq!(k4.m(), 6);
        assert!(k4.degrees().iter().all(|&d| d == 3));

        let star = gen_family(Family::Star(4)).unwrap();
        assert_eq!(star.m(), 3);

        assert!(gen_family(Family::Cycle(2)).is_err());

        let k23 = gen_family(Family::CompleteBipartite(2, 3)).unwrap();
        assert_eq!(k23.n(), 5);
        assert_eq!(k23.m(), 6);
        assert_eq!(k23.degree_sequence(), vec![3, 3, 2, 2, 2]);
    }

    #[test]
    fn random_p_one_is_complete() {
        let g = gen_random_connected(5, 1.0, 123).unwrap();
        assert_eq!(g.m(), 10);
    }

    #[test]
    fn random_two_vertices_is_k2() {
        let g = gen_random_connected(2, 0.5, 9).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn random_is_deterministic() {
        let a = gen_random_connected(8, 0.4, 42).unwrap();
        let b = gen_random_connected(8, 0.4, 42).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_connected(3).unwrap().count(), 4);
        assert_eq!(enumerate_connected(4).unwrap().count(), 38);
        assert_eq!(enumerate_connected(5).unwrap().count(), 728);
        assert!(enumerate_connected(8).is_err());
        assert!(enumerate_connected(0).is_err());
    }

    #[test]
    fn enumeration_yields_connected_only() {
        for g in enumerate_connected(4).unwrap() {
            assert!(g.is_connected());
        }
    }

    proptest! {
        #[test]
        fn degree_sum_is_twice_edge_count(n in 2usize..12, p in 0.05f64..1.0, seed in 0u64..500) {
            let g = gen_random_connected(n, p, seed).unwrap();
            let total: usize = g.degrees().iter().sum();
            prop_assert_eq!(total, 2 * g.m());
            prop_assert!(g.is_connected());
        }

        #[test]
        fn random_graphs_reproducible(n in 2usize..10, seed in 0u64..200) {
            let a = gen_random_connected(n, 0.4, seed).unwrap();
            let b = gen_random_connected(n, 0.4, seed).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}
