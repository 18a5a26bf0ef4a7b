//! Graph ingestion, generators, connectivity, and BFS all-pairs distances.
//!
//! Vertices are labeled 1..n in all input and output; matrix accessors are
//! 0-indexed like every other matrix in the crate.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::numerics::matrix::SymMatrix;

/// Simple undirected graph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Builds from 1-indexed endpoint pairs; duplicates collapse, order of
    /// endpoints is irrelevant. `n` is the largest label mentioned (or the
    /// explicit minimum given).
    pub fn from_edges(
        min_n: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut edges = BTreeSet::new();
        let mut n = min_n;
        for (u, v) in pairs {
            if u == 0 || v == 0 {
                return Err(Error::EdgeListParse {
                    line: 0,
                    msg: "vertex labels start at 1".into(),
                });
            }
            if u == v {
                return Err(Error::EdgeListParse {
                    line: 0,
                    msg: format!("self-loop at vertex {u}"),
                });
            }
            n = n.max(u).max(v);
            edges.insert((u.min(v), u.max(v)));
        }
        Ok(Graph { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as ordered `(u, v)` pairs with `u < v`, 1-indexed.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// 0-indexed adjacency lists.
    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u - 1].push(v - 1);
            adj[v - 1].push(u - 1);
        }
        adj
    }

    /// Degree sequence indexed by vertex − 1.
    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency().iter().map(Vec::len).collect()
    }

    /// True iff the graph is a path on its n vertices in some labeling:
    /// connected, n − 1 edges, max degree ≤ 2.
    pub fn is_path(&self) -> bool {
        if self.n == 1 {
            return self.edges.is_empty();
        }
        self.edges.len() == self.n - 1
            && self.degrees().iter().all(|&d| d <= 2)
            && distance_matrix(self).is_ok()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph(n={}, m={})", self.n, self.edges.len())
    }
}

/// Parses the edge-list format: lines `u v` with whitespace-separated
/// positive integers, `#` comments and blank lines ignored. `n` is the
/// maximum label mentioned.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (u, v) = match (fields.next(), fields.next(), fields.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => {
                return Err(Error::EdgeListParse {
                    line: line_no,
                    msg: format!("expected two fields, got {line:?}"),
                })
            }
        };
        let parse = |s: &str| -> Result<usize> {
            s.parse::<usize>().map_err(|_| Error::EdgeListParse {
                line: line_no,
                msg: format!("not a positive integer: {s:?}"),
            })
        };
        let (u, v) = (parse(u)?, parse(v)?);
        if u == 0 || v == 0 {
            return Err(Error::EdgeListParse {
                line: line_no,
                msg: "vertex labels start at 1".into(),
            });
        }
        if u == v {
            return Err(Error::EdgeListParse {
                line: line_no,
                msg: format!("self-loop at vertex {u}"),
            });
        }
        pairs.push((u, v));
    }
    Graph::from_edges(0, pairs)
}

/// The path `P_n`: edges {1,2}, {2,3}, …, {n−1,n}.
pub fn path_graph(n: usize) -> Graph {
    assert!(n >= 1, "path graph needs n >= 1");
    Graph::from_edges(n, (1..n).map(|i| (i, i + 1))).expect("valid path edges")
}

/// The cycle `C_n`, n ≥ 3.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::CycleTooSmall(n));
    }
    let mut pairs: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    pairs.push((n, 1));
    Graph::from_edges(n, pairs)
}

/// The complete graph `K_n`.
pub fn complete_graph(n: usize) -> Graph {
    assert!(n >= 1, "complete graph needs n >= 1");
    let pairs = (1..=n).flat_map(|u| ((u + 1)..=n).map(move |v| (u, v)));
    Graph::from_edges(n, pairs).expect("valid complete edges")
}

/// The star `K_{1,n−1}` on n vertices, centered at vertex 1.
pub fn star_graph(n: usize) -> Graph {
    assert!(n >= 1, "star graph needs n >= 1");
    Graph::from_edges(n, (2..=n).map(|v| (1, v))).expect("valid star edges")
}

/// Generator specs `path:N`, `cycle:N`, `complete:N`.
pub fn parse_graph_spec(spec: &str) -> Result<Graph> {
    let bad = || Error::BadGraphSpec(spec.to_string());
    let (kind, count) = spec.split_once(':').ok_or_else(bad)?;
    let n: usize = count.trim().parse().map_err(|_| bad())?;
    if n == 0 {
        return Err(bad());
    }
    match kind.trim() {
        "path" => Ok(path_graph(n)),
        "cycle" => cycle_graph(n),
        "complete" => Ok(complete_graph(n)),
        "star" => Ok(star_graph(n)),
        _ => Err(bad()),
    }
}

/// Shortest-path distance matrix of a connected graph. Entries are exact
/// small integers stored as `u32`; access is 0-indexed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.dist[i * self.n + j]
    }

    /// The same matrix with `f64` entries, for the eigen machinery.
    pub fn to_sym_f64(&self) -> SymMatrix<f64> {
        SymMatrix::from_fn(self.n, |i, j| self.get(i, j) as f64)
    }
}

/// BFS from every vertex. Fails on a disconnected graph, naming a pair of
/// mutually unreachable vertices (1-indexed).
pub fn distance_matrix(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut dist = vec![0u32; n * n];
    let mut queue = std::collections::VecDeque::new();
    for src in 0..n {
        let row = &mut dist[src * n..(src + 1) * n];
        let mut seen = vec![false; n];
        seen[src] = true;
        queue.clear();
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    row[v] = row[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        if let Some(unreached) = seen.iter().position(|&s| !s) {
            return Err(Error::Disconnected {
                u: src + 1,
                v: unreached + 1,
            });
        }
    }
    Ok(DistanceMatrix { n, dist })
}
