//! Spanning trees, cycletrees and fundamental cycle bases.
//!
//! Enumeration walks the edge list once, deciding for each edge whether it
//! is contracted into the partial structure or deleted. Union-find tracks
//! the contracted graph; an edge whose ends are already merged behaves as a
//! loop and an edge whose deletion would disconnect the remaining graph is
//! a bridge and must be contracted. Every leaf of the recursion is therefore
//! a valid output and nothing is generated twice.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DisjointSets, Edge, Multigraph};
use crate::linalg::{det, IntMatrix};

/// Default bound on `|E|` for the exponential enumerations.
pub const DEFAULT_EDGE_CAP: usize = 16;

/// Edge ids of a spanning tree, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SpanningTree {
    edges: Vec<usize>,
}

/// Connected spanning subgraph with `|V|` edges and its oriented unique
/// cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cycletree {
    edges: Vec<usize>,
    cycle: Vec<BigInt>,
}

/// Fundamental cycles `z_e` of a spanning tree, one per non-tree edge in
/// increasing id order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleBasis {
    tree: SpanningTree,
    non_tree: Vec<usize>,
    cycles: Vec<Vec<BigInt>>,
}

impl SpanningTree {
    /// Validates that `edges` spans `g` without cycles.
    pub fn new(g: &Multigraph, mut edges: Vec<usize>) -> Result<Self> {
        edges.sort_unstable();
        edges.dedup();
        if edges.len() + 1 != g.vertex_count() {
            return Err(Error::NotSpanningTree);
        }
        let mut dsu = DisjointSets::new(g.vertex_count());
        for &e in &edges {
            let Edge { tail, head } = g.edge(e)?;
            if !dsu.union(tail, head) {
                return Err(Error::NotSpanningTree);
            }
        }
        Ok(Self { edges })
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn contains(&self, e: usize) -> bool {
        self.edges.binary_search(&e).is_ok()
    }
}

impl Cycletree {
    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    /// `z_Y`, oriented so its smallest-id edge has coefficient +1.
    pub fn cycle(&self) -> &[BigInt] {
        &self.cycle
    }

    pub fn contains(&self, e: usize) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Edge ids on the unique cycle.
    pub fn cycle_edges(&self) -> Vec<usize> {
        self.cycle.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i).collect()
    }
}

impl CycleBasis {
    pub fn tree(&self) -> &SpanningTree {
        &self.tree
    }

    pub fn non_tree_edges(&self) -> &[usize] {
        &self.non_tree
    }

    pub fn cycles(&self) -> &[Vec<BigInt>] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// `Σ m_e z_e`.
    pub fn combine(&self, coords: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(coords.len(), self.cycles.len(), "coordinate count does not match basis size");
        let len = self.cycles.first().map_or(0, Vec::len);
        let mut out = vec![BigInt::zero(); len];
        for (m, z) in coords.iter().zip(&self.cycles) {
            if m.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(z) {
                if !x.is_zero() {
                    *o += m * x;
                }
            }
        }
        out
    }

    /// `[z]_β`: the coefficients of `z` on the non-tree edges. Fails if `z`
    /// is not a cycle.
    pub fn express(&self, z: &[BigInt]) -> Result<Vec<BigInt>> {
        let coords: Vec<BigInt> = self.non_tree.iter().map(|&e| z[e].clone()).collect();
        if self.cycles.is_empty() {
            return if z.iter().all(Zero::is_zero) { Ok(coords) } else { Err(Error::NotACycle) };
        }
        if z.len() != self.cycles[0].len() {
            return Err(Error::DimensionMismatch(format!(
                "chain has {} entries, graph has {} edges",
                z.len(),
                self.cycles[0].len()
            )));
        }
        if self.combine(&coords) != z {
            return Err(Error::NotACycle);
        }
        Ok(coords)
    }

    /// `|E| × m` matrix with the basis cycles as columns.
    pub fn matrix(&self, edge_count: usize) -> IntMatrix {
        IntMatrix::from_columns(edge_count, &self.cycles).expect("basis cycles have one entry per edge")
    }
}

fn check_cap(g: &Multigraph, cap: usize) -> Result<()> {
    if g.edge_count() > cap {
        return Err(Error::CapExceeded { edges: g.edge_count(), cap });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Whether the contracted graph stays connected using only edges `from..`.
fn connected_with(g: &Multigraph, dsu: &DisjointSets, from: usize) -> bool {
    let mut d = dsu.clone();
    for e in &g.edges()[from..] {
        d.union(e.tail, e.head);
        if d.count() == 1 {
            return true;
        }
    }
    d.count() == 1
}

/// All spanning trees, sorted lexicographically by edge-id set.
pub fn spanning_trees(g: &Multigraph, cap: usize) -> Result<Vec<SpanningTree>> {
    check_cap(g, cap)?;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(g.vertex_count());
    tree_search(g, 0, DisjointSets::new(g.vertex_count()), &mut chosen, &mut out);
    out.sort();
    Ok(out)
}

fn tree_search(g: &Multigraph, i: usize, dsu: DisjointSets, chosen: &mut Vec<usize>, out: &mut Vec<SpanningTree>) {
    if dsu.count() == 1 {
        out.push(SpanningTree { edges: chosen.clone() });
        return;
    }
    let Some(e) = g.edges().get(i) else { return };
    let mut d = dsu.clone();
    if d.find(e.tail) == d.find(e.head) {
        tree_search(g, i + 1, dsu, chosen, out);
        return;
    }
    let bridge = !connected_with(g, &dsu, i + 1);
    d.union(e.tail, e.head);
    chosen.push(i);
    tree_search(g, i + 1, d, chosen, out);
    chosen.pop();
    if !bridge {
        tree_search(g, i + 1, dsu, chosen, out);
    }
}

/// Tree-number `k(G)` by the matrix-tree theorem: the determinant of the
/// vertex Laplacian with the first row and column removed.
pub fn tree_number(g: &Multigraph) -> Result<BigInt> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let d1 = g.incidence_matrix();
    let lap = &d1 * &d1.transpose();
    let n = g.vertex_count();
    let reduced: Vec<Vec<BigInt>> = (1..n).map(|r| lap.row(r)[1..].to_vec()).collect();
    let m = IntMatrix::from_rows(&reduced)?;
    det(&m)
}

/// All cycletrees, sorted by edge-id set, each with its canonical cycle.
pub fn cycletrees(g: &Multigraph, cap: usize) -> Result<Vec<Cycletree>> {
    check_cap(g, cap)?;
    let mut sets = Vec::new();
    let mut chosen = Vec::with_capacity(g.vertex_count());
    cycletree_search(g, 0, DisjointSets::new(g.vertex_count()), false, &mut chosen, &mut sets);
    sets.sort();
    sets.into_iter()
        .map(|edges| {
            let cycle = unique_cycle(g, &edges)?;
            Ok(Cycletree { edges, cycle })
        })
        .collect()
}

fn cycletree_search(
    g: &Multigraph,
    i: usize,
    dsu: DisjointSets,
    closed: bool,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let Some(e) = g.edges().get(i) else {
        if closed && dsu.count() == 1 {
            out.push(chosen.clone());
        }
        return;
    };
    let mut d = dsu.clone();
    if d.find(e.tail) == d.find(e.head) {
        if !closed {
            chosen.push(i);
            cycletree_search(g, i + 1, dsu.clone(), true, chosen, out);
            chosen.pop();
        }
        cycletree_search(g, i + 1, dsu, closed, chosen, out);
        return;
    }
    let bridge = !connected_with(g, &dsu, i + 1);
    d.union(e.tail, e.head);
    chosen.push(i);
    cycletree_search(g, i + 1, d, closed, chosen, out);
    chosen.pop();
    if !bridge {
        cycletree_search(g, i + 1, dsu, closed, chosen, out);
    }
}

/// The oriented unique cycle `z_Y` of a cycletree edge set. Leaves are
/// stripped until only the cycle remains; the cycle is then walked starting
/// along its smallest edge in the tail→head direction.
pub fn unique_cycle(g: &Multigraph, edges: &[usize]) -> Result<Vec<BigInt>> {
    let n = g.vertex_count();
    let mut set: Vec<usize> = edges.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.len() != edges.len() || set.len() != n {
        return Err(Error::NotCycletree);
    }
    let mut dsu = DisjointSets::new(n);
    for &e in &set {
        let Edge { tail, head } = g.edge(e)?;
        dsu.union(tail, head);
    }
    if dsu.count() != 1 {
        return Err(Error::NotCycletree);
    }

    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &e in &set {
        let ed = g.edges()[e];
        incident[ed.tail].push(e);
        if !ed.is_loop() {
            incident[ed.head].push(e);
        }
    }
    let mut alive = vec![false; g.edge_count()];
    for &e in &set {
        alive[e] = true;
    }
    let degree = |v: usize, alive: &[bool], incident: &[Vec<usize>]| {
        incident[v].iter().filter(|&&e| alive[e]).map(|&e| if g.edges()[e].is_loop() { 2 } else { 1 }).sum::<usize>()
    };
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| degree(v, &alive, &incident) == 1).collect();
    while let Some(v) = queue.pop_front() {
        let Some(&e) = incident[v].iter().find(|&&e| alive[e]) else { continue };
        if degree(v, &alive, &incident) != 1 {
            continue;
        }
        alive[e] = false;
        let u = g.edges()[e].other(v);
        if degree(u, &alive, &incident) == 1 {
            queue.push_back(u);
        }
    }

    let mut z = vec![BigInt::zero(); g.edge_count()];
    let start = set.iter().copied().find(|&e| alive[e]).ok_or(Error::NotCycletree)?;
    let first = g.edges()[start];
    z[start] = BigInt::one();
    if first.is_loop() {
        return Ok(z);
    }
    let (mut at, mut prev) = (first.head, start);
    while at != first.tail {
        let next = incident[at]
            .iter()
            .copied()
            .find(|&e| alive[e] && e != prev && z[e].is_zero())
            .ok_or(Error::NotCycletree)?;
        let ed = g.edges()[next];
        if ed.tail == at {
            z[next] = BigInt::one();
            at = ed.head;
        } else {
            z[next] = -BigInt::one();
            at = ed.tail;
        }
        prev = next;
    }
    Ok(z)
}

/// Lexicographically smallest spanning tree by greedy insertion in edge-id
/// order. `first` is inserted before everything else and `avoid` is never
/// used.
pub fn greedy_spanning_tree(g: &Multigraph, first: Option<usize>, avoid: Option<usize>) -> Result<SpanningTree> {
    let mut dsu = DisjointSets::new(g.vertex_count());
    let mut edges = Vec::with_capacity(g.vertex_count());
    let order = first.into_iter().chain((0..g.edge_count()).filter(|&e| Some(e) != first));
    for e in order {
        if Some(e) == avoid {
            continue;
        }
        let Edge { tail, head } = g.edge(e)?;
        if dsu.union(tail, head) {
            edges.push(e);
        }
    }
    if dsu.count() != 1 {
        return Err(Error::Disconnected);
    }
    edges.sort_unstable();
    Ok(SpanningTree { edges })
}

/// Fundamental basis: for each non-tree edge `e`, `z_e = [e] + (tree path
/// from head(e) back to tail(e))`. Loops give `z_e = [e]`.
pub fn fundamental_basis(g: &Multigraph, tree: &SpanningTree) -> Result<CycleBasis> {
    let tree = SpanningTree::new(g, tree.edges.clone())?;
    let n = g.vertex_count();
    let mut adjacent: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &e in tree.edges() {
        let ed = g.edges()[e];
        adjacent[ed.tail].push(e);
        adjacent[ed.head].push(e);
    }
    // BFS from vertex 0: parent edge and depth of every vertex.
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    depth[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for &e in &adjacent[v] {
            let u = g.edges()[e].other(v);
            if depth[u] == usize::MAX {
                depth[u] = depth[v] + 1;
                parent[u] = Some(e);
                queue.push_back(u);
            }
        }
    }
    let up = |v: usize| {
        let e = parent[v].expect("non-root vertex has a parent edge");
        (e, g.edges()[e].other(v))
    };

    let non_tree: Vec<usize> = (0..g.edge_count()).filter(|&e| !tree.contains(e)).collect();
    let cycles = non_tree
        .iter()
        .map(|&e| {
            let mut z = vec![BigInt::zero(); g.edge_count()];
            z[e] = BigInt::one();
            let Edge { tail, head } = g.edges()[e];
            // walk head → lca forwards and tail → lca backwards
            let (mut a, mut b) = (head, tail);
            while a != b {
                if depth[a] >= depth[b] {
                    let (pe, p) = up(a);
                    z[pe] += if g.edges()[pe].tail == a { 1 } else { -1 };
                    a = p;
                } else {
                    let (pe, p) = up(b);
                    z[pe] += if g.edges()[pe].tail == b { -1 } else { 1 };
                    b = p;
                }
            }
            z
        })
        .collect();
    Ok(CycleBasis { tree, non_tree, cycles })
}

/// Every simple cycle (loops and 2-cycles of parallel edges included) with
/// +1 on its smallest edge, following the same orientation rule as
/// [`unique_cycle`].
pub fn simple_cycles(g: &Multigraph, cap: usize) -> Result<Vec<Vec<BigInt>>> {
    check_cap(g, cap)?;
    let n = g.vertex_count();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in g.edges().iter().enumerate() {
        if !e.is_loop() {
            incident[e.tail].push(i);
            incident[e.head].push(i);
        }
    }
    let mut out = Vec::new();
    for (s, e) in g.edges().iter().enumerate() {
        let mut z = vec![BigInt::zero(); g.edge_count()];
        z[s] = BigInt::one();
        if e.is_loop() {
            out.push(z);
            continue;
        }
        let mut visited = vec![false; n];
        visited[e.head] = true;
        path_search(g, &incident, s, e.head, e.tail, &mut visited, &mut z, &mut out);
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn path_search(
    g: &Multigraph,
    incident: &[Vec<usize>],
    smallest: usize,
    at: usize,
    target: usize,
    visited: &mut [bool],
    z: &mut Vec<BigInt>,
    out: &mut Vec<Vec<BigInt>>,
) {
    for &e in &incident[at] {
        if e <= smallest {
            continue;
        }
        let ed = g.edges()[e];
        let next = ed.other(at);
        if visited[next] {
            continue;
        }
        z[e] = if ed.tail == at { BigInt::one() } else { -BigInt::one() };
        if next == target {
            out.push(z.clone());
        } else {
            visited[next] = true;
            path_search(g, incident, smallest, next, target, visited, z, out);
            visited[next] = false;
        }
        z[e] = BigInt::zero();
    }
}
