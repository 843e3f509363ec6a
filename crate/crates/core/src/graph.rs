//! Oriented multigraphs with loops and parallel edges.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
}

impl Edge {
    pub fn new(tail: usize, head: usize) -> Self {
        Self { tail, head }
    }

    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }

    /// The endpoint opposite to `v`. For a loop this is `v` itself.
    pub fn other(&self, v: usize) -> usize {
        if v == self.tail {
            self.head
        } else {
            self.tail
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EdgeKind {
    Loop,
    Bridge,
    Ordinary,
}

/// How ids move when an edge is deleted or contracted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeRelabeling {
    /// `edges[old]` is the new id, `None` for the removed edge.
    pub edges: Vec<Option<usize>>,
    /// `vertices[old]` is the new vertex id.
    pub vertices: Vec<usize>,
}

impl EdgeRelabeling {
    /// Carries a 1-chain across the relabeling, dropping the removed edge's
    /// coefficient.
    pub fn transport<T: Clone>(&self, chain: &[T]) -> Vec<T> {
        let mut out: Vec<Option<T>> = vec![None; self.new_edge_count()];
        for (old, new) in self.edges.iter().enumerate() {
            if let Some(new) = new {
                out[*new] = Some(chain[old].clone());
            }
        }
        out.into_iter().map(|x| x.expect("relabeling is onto")).collect()
    }

    /// Inverse of [`transport`](Self::transport): fills the removed edge with `fill`.
    pub fn lift<T: Clone>(&self, chain: &[T], fill: T) -> Vec<T> {
        self.edges
            .iter()
            .map(|new| new.map_or_else(|| fill.clone(), |n| chain[n].clone()))
            .collect()
    }

    pub fn new_edge_count(&self) -> usize {
        self.edges.iter().flatten().count()
    }
}

/// Finite multigraph on vertices `0..vertex_count` with an ordered edge list.
/// Edge ids are positions in the list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

impl Multigraph {
    pub fn new(vertex_count: usize, edges: Vec<Edge>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::NoVertices);
        }
        for (i, e) in edges.iter().enumerate() {
            for v in [e.tail, e.head] {
                if v >= vertex_count {
                    return Err(Error::VertexOutOfRange { edge: i, vertex: v, vertex_count });
                }
            }
        }
        Ok(Self { vertex_count, edges })
    }

    /// Convenience constructor from `(tail, head)` pairs.
    pub fn from_pairs(vertex_count: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(vertex_count, pairs.iter().map(|&(t, h)| Edge::new(t, h)).collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Result<Edge> {
        self.edges.get(id).copied().ok_or(Error::InvalidEdge { edge: id, edge_count: self.edges.len() })
    }

    /// `∂₁`: −1 at the tail, +1 at the head, zero columns for loops.
    pub fn incidence_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.vertex_count, self.edges.len());
        for (j, e) in self.edges.iter().enumerate() {
            if !e.is_loop() {
                m[(e.tail, j)] = BigInt::from(-1);
                m[(e.head, j)] = BigInt::from(1);
            }
        }
        m
    }

    /// Boundary of a 1-chain, `∂₁ x`, without building the matrix.
    pub fn boundary(&self, chain: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(chain.len(), self.edges.len(), "chain length does not match edge count");
        let mut out = vec![BigInt::from(0); self.vertex_count];
        for (e, c) in self.edges.iter().zip(chain) {
            if !e.is_loop() {
                out[e.tail] -= c;
                out[e.head] += c;
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components_without(None) == 1
    }

    /// Number of connected components after (optionally) ignoring one edge.
    fn components_without(&self, skip: Option<usize>) -> usize {
        let mut dsu = DisjointSets::new(self.vertex_count);
        for (i, e) in self.edges.iter().enumerate() {
            if Some(i) != skip {
                dsu.union(e.tail, e.head);
            }
        }
        dsu.count()
    }

    pub fn delete(&self, sigma: usize) -> Result<(Multigraph, EdgeRelabeling)> {
        self.edge(sigma)?;
        let edges = self.edges.iter().enumerate().filter(|&(i, _)| i != sigma).map(|(_, e)| *e).collect();
        let relabel = EdgeRelabeling {
            edges: relabel_edges(self.edges.len(), sigma),
            vertices: (0..self.vertex_count).collect(),
        };
        Ok((Multigraph { vertex_count: self.vertex_count, edges }, relabel))
    }

    /// `G/σ`. For a non-loop edge the larger endpoint id is merged into the
    /// smaller one and higher vertex ids shift down by one. A loop is simply
    /// deleted.
    pub fn contract(&self, sigma: usize) -> Result<(Multigraph, EdgeRelabeling)> {
        let e = self.edge(sigma)?;
        if e.is_loop() {
            return self.delete(sigma);
        }
        let (keep, gone) = (e.tail.min(e.head), e.tail.max(e.head));
        let vertices: Vec<usize> = (0..self.vertex_count)
            .map(|v| match v.cmp(&gone) {
                std::cmp::Ordering::Less => v,
                std::cmp::Ordering::Equal => keep,
                std::cmp::Ordering::Greater => v - 1,
            })
            .collect();
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != sigma)
            .map(|(_, e)| Edge::new(vertices[e.tail], vertices[e.head]))
            .collect();
        let relabel = EdgeRelabeling { edges: relabel_edges(self.edges.len(), sigma), vertices };
        Ok((Multigraph { vertex_count: self.vertex_count - 1, edges }, relabel))
    }

    /// Identifies all endpoints of `set` to a single vertex and removes the
    /// edges of `set`. Used for `G/C` with `C` a cycle.
    pub fn contract_set(&self, set: &[usize]) -> Result<Multigraph> {
        let mut dsu = DisjointSets::new(self.vertex_count);
        let mut removed = vec![false; self.edges.len()];
        for &s in set {
            let e = self.edge(s)?;
            dsu.union(e.tail, e.head);
            removed[s] = true;
        }
        let mut ids = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        for v in 0..self.vertex_count {
            let r = dsu.find(v);
            if ids[r] == usize::MAX {
                ids[r] = next;
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .zip(&removed)
            .filter(|(_, &gone)| !gone)
            .map(|(e, _)| Edge::new(ids[dsu.find(e.tail)], ids[dsu.find(e.head)]))
            .collect();
        Multigraph::new(next, edges)
    }

    pub fn classify_edge(&self, sigma: usize) -> Result<EdgeKind> {
        let e = self.edge(sigma)?;
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(if e.is_loop() {
            EdgeKind::Loop
        } else if self.components_without(Some(sigma)) > 1 {
            EdgeKind::Bridge
        } else {
            EdgeKind::Ordinary
        })
    }

    /// `|E| − |V| + 1`, the rank of the cycle space.
    pub fn corank(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.edges.len() + 1 - self.vertex_count)
    }

    /// Same graph with the orientation of `edge` reversed.
    pub fn reversed(&self, edge: usize) -> Result<Multigraph> {
        let e = self.edge(edge)?;
        let mut g = self.clone();
        g.edges[edge] = Edge::new(e.head, e.tail);
        Ok(g)
    }
}

fn relabel_edges(count: usize, removed: usize) -> Vec<Option<usize>> {
    (0..count)
        .map(|i| match i.cmp(&removed) {
            std::cmp::Ordering::Less => Some(i),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(i - 1),
        })
        .collect()
}

/// Union-find with path halving.
#[derive(Clone, Debug)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    sets: usize,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), sets: n }
    }

    pub(crate) fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    /// Returns false if `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        self.sets -= 1;
        true
    }

    pub(crate) fn count(&self) -> usize {
        self.sets
    }
}
