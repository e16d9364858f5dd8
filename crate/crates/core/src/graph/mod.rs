//! Simple undirected graphs and their standard matrices.

mod edgelist;
pub mod families;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{DenseSymMatrix, Matrix};

pub use edgelist::{parse_edge_list, serialize_edge_list, ParseError, ParseErrorKind};

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically. That
/// order is the canonical edge order: it fixes the columns of
/// [`Graph::incidence`] and the ids of edge-vertices in derived graphs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, normalizing each pair to `u < v`. Self-loops,
    /// duplicate edges and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut canon = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(Self { n, edges: canon })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Index of `(u, v)` in the canonical edge order.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(u, v)| {
                if u == i {
                    Some(v)
                } else if v == i {
                    Some(u)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn adjacency(&self) -> DenseSymMatrix {
        let mut a = Matrix::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            a[(u, v)] = 1.0;
            a[(v, u)] = 1.0;
        }
        DenseSymMatrix::new(a).expect("adjacency is symmetric")
    }

    pub fn degree_matrix(&self) -> DenseSymMatrix {
        let d: Vec<f64> = self.degrees().into_iter().map(|d| d as f64).collect();
        DenseSymMatrix::from_diagonal(&d)
    }

    /// `L = D − A`.
    pub fn laplacian(&self) -> DenseSymMatrix {
        let mut l = Matrix::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            l[(u, u)] += 1.0;
            l[(v, v)] += 1.0;
            l[(u, v)] -= 1.0;
            l[(v, u)] -= 1.0;
        }
        DenseSymMatrix::new(l).expect("laplacian is symmetric")
    }

    /// Vertex-edge incidence matrix (`n x m`, 0/1); column `e` has ones at
    /// the endpoints of `edges()[e]`.
    pub fn incidence(&self) -> Matrix {
        let mut b = Matrix::zeros(self.n, self.m());
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            b[(u, e)] = 1.0;
            b[(v, e)] = 1.0;
        }
        b
    }

    /// True iff the graph has exactly one component. The graph on zero
    /// vertices is not connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Hop distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let adj = self.adjacency_lists();
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Copy of the graph with vertex `k` and its incident edges removed;
    /// vertices above `k` shift down by one.
    pub fn without_vertex(&self, k: usize) -> Graph {
        let shift = |w: usize| if w > k { w - 1 } else { w };
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| u != k && v != k)
            .map(|&(u, v)| (shift(u), shift(v)))
            .collect();
        Graph {
            n: self.n.saturating_sub(1),
            edges,
        }
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }
}
