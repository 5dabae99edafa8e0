//! Simple undirected graphs stored as sorted adjacency lists.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::error::{Error, Result};

/// An undirected edge with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Returns `None` for a self-loop.
    pub fn new(a: usize, b: usize) -> Option<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Some(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => None,
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

/// The first structural defect found by [`Graph::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {vertex} lists neighbor {neighbor}, outside 0..{vertex_count}")]
    OutOfRange {
        vertex: usize,
        neighbor: usize,
        vertex_count: usize,
    },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("parallel edge {0}")]
    ParallelEdge(Edge),
    #[error("asymmetric adjacency: {from} lists {to} but not the reverse")]
    Asymmetric { from: usize, to: usize },
    #[error("graph is disconnected: vertex {unreached} is not reachable from vertex 0")]
    Disconnected { unreached: usize },
}

/// A finite simple undirected graph on vertices `0..vertex_count`.
///
/// Neighbor lists are kept sorted, so [`Graph::edges`] and every sum over
/// edges runs in a fixed lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list and validates it.
    ///
    /// Self-loops, repeated edges, ids `>= vertex_count` and disconnected
    /// results are rejected.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (a, b) in edges {
            if let Some(&x) = [a, b].iter().find(|&&x| x >= vertex_count) {
                return Err(Error::Input(format!(
                    "vertex {x} out of range for {vertex_count} vertices"
                )));
            }
            adjacency[a].push(b);
            if a != b {
                adjacency[b].push(a);
            }
        }
        let graph = Self::from_adjacency(adjacency);
        graph.validate()?;
        Ok(graph)
    }

    /// Wraps raw adjacency lists without validating them.
    ///
    /// Lists are sorted but duplicates are kept, so [`Graph::validate`] can
    /// still report parallel edges, asymmetry and loops.
    pub fn from_adjacency(mut adjacency: Vec<Vec<usize>>) -> Self {
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph { adjacency }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> Result<&[usize]> {
        self.adjacency
            .get(v)
            .map(Vec::as_slice)
            .ok_or_else(|| self.out_of_range(v))
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.neighbors(v).map(<[usize]>::len)
    }

    /// Sum of the degrees of the neighbors of `v` (the S-value of `v`).
    pub fn neighbor_degree_sum(&self, v: usize) -> Result<usize> {
        Ok(self
            .neighbors(v)?
            .iter()
            .map(|&u| self.adjacency[u].len())
            .sum())
    }

    /// Degrees of all vertices, indexed by vertex id.
    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// S-values of all vertices, indexed by vertex id.
    pub fn neighbor_degree_sums(&self) -> Vec<usize> {
        let degrees = self.degrees();
        self.adjacency
            .iter()
            .map(|list| list.iter().map(|&u| degrees[u]).sum())
            .collect()
    }

    /// Every edge once, as `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<Edge> {
        self.edge_iter().collect()
    }

    pub(crate) fn edge_iter(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .filter(move |&&v| v > u)
                .map(move |&v| Edge { u, v })
        })
    }

    /// Checks the simple-graph invariants and connectivity.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let n = self.vertex_count();
        if n == 0 {
            return Err(Violation::Empty);
        }
        for (v, list) in self.adjacency.iter().enumerate() {
            for (i, &u) in list.iter().enumerate() {
                if u >= n {
                    return Err(Violation::OutOfRange {
                        vertex: v,
                        neighbor: u,
                        vertex_count: n,
                    });
                }
                if u == v {
                    return Err(Violation::SelfLoop(v));
                }
                if i > 0 && list[i - 1] == u {
                    return Err(Violation::ParallelEdge(Edge::new(u, v).unwrap()));
                }
            }
        }
        for (v, list) in self.adjacency.iter().enumerate() {
            for &u in list {
                if self.adjacency[u].binary_search(&v).is_err() {
                    return Err(Violation::Asymmetric { from: v, to: u });
                }
            }
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &u in &self.adjacency[v] {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        match seen.iter().position(|&s| !s) {
            Some(unreached) => Err(Violation::Disconnected { unreached }),
            None => Ok(()),
        }
    }

    fn out_of_range(&self, v: usize) -> Error {
        Error::Input(format!(
            "vertex {v} out of range for {} vertices",
            self.vertex_count()
        ))
    }
}
