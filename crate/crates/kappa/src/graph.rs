//! Simple undirected graphs over dense vertex indices `0..n`, with the
//! constructions used throughout: complements, disjoint copies, complete
//! multipartite graphs, and odd neighborhoods.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A simple undirected graph: one neighbor bitset per vertex.
///
/// Immutable after construction; adjacency is symmetric and irreflexive.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::empty(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| {
                let mut s = VertexSet::full(n);
                s.remove(v);
                s
            })
            .collect();
        Graph { n, adj }
    }

    pub fn cycle(n: usize) -> Self {
        if n < 3 {
            return Graph::empty(n);
        }
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).expect("cycle edges are in range")
    }

    /// Decode a graph from an edge mask over the `n*(n-1)/2` pairs
    /// `(0,1),(0,2),(1,2),(0,3),...` (column-major upper triangle, the same
    /// order graph6 uses). Only valid for small `n`.
    pub fn from_edge_mask(n: usize, mut mask: u64) -> Self {
        let mut edges = Vec::new();
        for v in 1..n {
            for u in 0..v {
                if mask & 1 == 1 {
                    edges.push((u, v));
                }
                mask >>= 1;
            }
        }
        Graph::from_edge_list(n, &edges).expect("mask edges are in range")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for v in 0..self.n {
            for u in self.adj[v].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Closed neighborhood `{v} ∪ N(v)`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// `Odd(S)`: vertices with an odd number of neighbors in `s`. Membership
    /// of a vertex in `s` itself plays no role.
    pub fn odd_neighborhood(&self, s: &VertexSet) -> VertexSet {
        assert_eq!(s.universe(), self.n, "vertex set universe mismatch");
        let mut out = VertexSet::empty(self.n);
        for v in 0..self.n {
            if self.adj[v].intersection_parity(s) {
                out.insert(v);
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let adj = (0..self.n)
            .map(|v| {
                let mut s = self.adj[v].complement();
                s.remove(v);
                s
            })
            .collect();
        Graph { n: self.n, adj }
    }

    /// `r` disjoint copies; copy `i` occupies indices `[i*n, (i+1)*n)`.
    pub fn disjoint_copies(&self, r: usize) -> Result<Graph> {
        if r == 0 {
            return Err(Error::InvalidParameter("copy count r must be >= 1".into()));
        }
        let n = self.n;
        let mut edges = Vec::with_capacity(r * self.edge_count());
        for i in 0..r {
            for (u, v) in self.edges() {
                edges.push((i * n + u, i * n + v));
            }
        }
        Graph::from_edge_list(r * n, &edges)
    }

    /// Complete q-partite graph with parts of size p; part `i` is the index
    /// block `[i*p, (i+1)*p)`.
    pub fn complete_multipartite(p: usize, q: usize) -> Result<Graph> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidParameter(
                "multipartite parameters p, q must be >= 1".into(),
            ));
        }
        let n = p * q;
        let adj = (0..n)
            .map(|v| {
                let part = v / p;
                let mut s = VertexSet::full(n);
                for u in part * p..(part + 1) * p {
                    s.remove(u);
                }
                s
            })
            .collect();
        Ok(Graph { n, adj })
    }

    /// `(Δ, δ)`: maximal and minimal degree. Rejects the empty graph.
    pub fn degree_stats(&self) -> Result<(usize, usize)> {
        if self.n == 0 {
            return Err(Error::InvalidParameter(
                "degree stats undefined on the empty graph".into(),
            ));
        }
        let degs = self.adj.iter().map(VertexSet::len);
        Ok((degs.clone().max().unwrap(), degs.min().unwrap()))
    }

    pub fn is_regular(&self) -> bool {
        match self.degree_stats() {
            Ok((max, min)) => max == min,
            Err(_) => true,
        }
    }

    pub fn component_count(&self) -> usize {
        let mut seen = VertexSet::empty(self.n);
        let mut count = 0;
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            count += 1;
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(v) = stack.pop() {
                for u in self.adj[v].iter() {
                    if !seen.contains(u) {
                        seen.insert(u);
                        stack.push(u);
                    }
                }
            }
        }
        count
    }
}

/// A named graph-family construction, as accepted by the CLI.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum FamilySpec {
    Multipartite { p: usize, q: usize },
    Copies { base: Graph6Source, r: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Empty { n: usize },
    Complement { base: Graph6Source },
}

/// Graph6 text carried inside a family spec (kept as text so specs stay
/// serializable).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Graph6Source(pub String);

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::Multipartite { p, q } => Graph::complete_multipartite(*p, *q),
            FamilySpec::Copies { base, r } => crate::graph6::decode(&base.0)?.disjoint_copies(*r),
            FamilySpec::Cycle { n } => Ok(Graph::cycle(*n)),
            FamilySpec::Complete { n } => Ok(Graph::complete(*n)),
            FamilySpec::Empty { n } => Ok(Graph::empty(*n)),
            FamilySpec::Complement { base } => Ok(crate::graph6::decode(&base.0)?.complement()),
        }
    }
}
