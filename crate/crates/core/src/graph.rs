//! Dynamic undirected simple graph.

use crate::error::{Error, Result};
use std::collections::{HashMap, HashSet};
use std::fmt;

/// Vertex identifier. Ids need not be contiguous.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexId(pub u32);

impl From<u32> for VertexId {
    fn from(v: u32) -> Self {
        VertexId(v)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Unordered edge, stored with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub a: VertexId,
    pub b: VertexId,
}

impl Edge {
    pub fn new(u: impl Into<VertexId>, v: impl Into<VertexId>) -> Result<Self> {
        let (u, v) = (u.into(), v.into());
        if u == v {
            return Err(Error::InvalidEdge(u));
        }
        Ok(if u < v { Edge { a: u, b: v } } else { Edge { a: v, b: u } })
    }
}

/// Undirected simple graph with hash-backed adjacency sets.
///
/// Vertices are registered on first mention and never removed; an isolated
/// vertex has degree zero.
#[derive(Debug, Clone, Default)]
pub struct Graph {
    adj: HashMap<VertexId, HashSet<VertexId>>,
    m: usize,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from an edge list, ignoring duplicates.
    pub fn from_edges<I, A, B>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (A, B)>,
        A: Into<VertexId>,
        B: Into<VertexId>,
    {
        let mut g = Graph::new();
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Registers `v` without adding edges.
    pub fn add_vertex(&mut self, v: impl Into<VertexId>) {
        self.adj.entry(v.into()).or_default();
    }

    /// Inserts `{u, v}`. Returns `false` if the edge was already present.
    pub fn insert_edge(&mut self, u: impl Into<VertexId>, v: impl Into<VertexId>) -> Result<bool> {
        let e = Edge::new(u, v)?;
        if !self.adj.entry(e.a).or_default().insert(e.b) {
            return Ok(false);
        }
        self.adj.entry(e.b).or_default().insert(e.a);
        self.m += 1;
        Ok(true)
    }

    /// Deletes `{u, v}`. Returns `false` if the edge was absent.
    pub fn delete_edge(&mut self, u: impl Into<VertexId>, v: impl Into<VertexId>) -> Result<bool> {
        let e = Edge::new(u, v)?;
        let removed = self.adj.get_mut(&e.a).is_some_and(|s| s.remove(&e.b));
        if removed {
            if let Some(s) = self.adj.get_mut(&e.b) {
                s.remove(&e.a);
            }
            self.m -= 1;
        }
        Ok(removed)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&v))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj.get(&v).map_or(0, HashSet::len)
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.get(&v).into_iter().flatten().copied()
    }

    /// Neighbors of `v` in ascending order.
    pub fn sorted_neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut out: Vec<_> = self.neighbors(v).collect();
        out.sort_unstable();
        out
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    /// All registered vertices in ascending order.
    pub fn vertices(&self) -> Vec<VertexId> {
        let mut out: Vec<_> = self.adj.keys().copied().collect();
        out.sort_unstable();
        out
    }

    /// All edges in ascending canonical order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> = self
            .adj
            .iter()
            .flat_map(|(&a, s)| s.iter().filter(move |&&b| a < b).map(move |&b| Edge { a, b }))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }
}
