//! Mixed graphs on a dense vertex set.
//!
//! A [`PartiallyOrientedGraph`] carries, for every unordered pair of
//! vertices, at most one of: nothing, an undirected edge, or an arc in one
//! direction. Vertices are `0..n`. Deleting a vertex shifts every higher
//! index down by one.

use alloc::vec::Vec;
use core::fmt;

use crate::error::GraphError;

pub type VertexId = usize;

/// The relation between an ordered pair `(u, v)` of vertices, seen from `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Rel {
    None = 0,
    Edge = 1,
    /// The arc `(u, v)`.
    Out = 2,
    /// The arc `(v, u)`.
    In = 3,
}

impl Rel {
    /// The same relation seen from the other endpoint.
    #[inline]
    pub fn reversed(self) -> Rel {
        match self {
            Rel::Out => Rel::In,
            Rel::In => Rel::Out,
            r => r,
        }
    }

    #[inline]
    pub fn is_adjacent(self) -> bool {
        self != Rel::None
    }
}

/// A simple undirected graph stored as a dense adjacency matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: alloc::vec![false; n * n],
        }
    }

    pub fn new(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            check_pair(n, u, v)?;
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// The chordless cycle on `n >= 3` vertices in index order.
    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0);
        }
        g
    }

    pub(crate) fn add_edge(&mut self, u: VertexId, v: VertexId) {
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        let row = &self.adj[v * self.n..(v + 1) * self.n];
        row.iter()
            .enumerate()
            .filter_map(|(u, &a)| if a { Some(u) } else { None })
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).count()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&a| a).count() / 2
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() * 2 == self.n * self.n.saturating_sub(1)
    }

    /// `N[u] = N[v]`.
    pub fn same_closed_neighborhood(&self, u: VertexId, v: VertexId) -> bool {
        (0..self.n).all(|w| {
            let in_u = w == u || self.has_edge(u, w);
            let in_v = w == v || self.has_edge(v, w);
            in_u == in_v
        })
    }

    /// The subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced(&self, vertices: &[VertexId]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Connected components, each sorted, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = alloc::vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = alloc::vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

/// A mixed graph `(V, E ∪ A)`: undirected edges `E` and arcs `A`, with no
/// pair of vertices carrying more than one of them.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartiallyOrientedGraph {
    n: usize,
    rel: Vec<Rel>,
}

fn check_pair(n: usize, u: VertexId, v: VertexId) -> Result<(), GraphError> {
    for x in [u, v] {
        if x >= n {
            return Err(GraphError::VertexOutOfRange { vertex: x, order: n });
        }
    }
    if u == v {
        return Err(GraphError::SelfLoop { vertex: u });
    }
    Ok(())
}

impl PartiallyOrientedGraph {
    /// Validates and builds a partially oriented graph. Repeated items are
    /// merged; a pair used in two different roles is rejected.
    pub fn new(n: usize, edges: &[(VertexId, VertexId)], arcs: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut h = PartiallyOrientedGraph::empty(n);
        for &(u, v) in edges {
            check_pair(n, u, v)?;
            match h.rel(u, v) {
                Rel::None | Rel::Edge => h.set(u, v, Rel::Edge),
                _ => return Err(GraphError::ConflictingPair { u, v }),
            }
        }
        for &(u, v) in arcs {
            check_pair(n, u, v)?;
            match h.rel(u, v) {
                Rel::None | Rel::Out => h.set(u, v, Rel::Out),
                _ => return Err(GraphError::ConflictingPair { u, v }),
            }
        }
        Ok(h)
    }

    pub fn empty(n: usize) -> Self {
        PartiallyOrientedGraph {
            n,
            rel: alloc::vec![Rel::None; n * n],
        }
    }

    /// Sets the relation of `(u, v)` and mirrors it onto `(v, u)`.
    pub(crate) fn set(&mut self, u: VertexId, v: VertexId, r: Rel) {
        self.rel[u * self.n + v] = r;
        self.rel[v * self.n + u] = r.reversed();
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rel(&self, u: VertexId, v: VertexId) -> Rel {
        self.rel[u * self.n + v]
    }

    #[inline]
    pub fn is_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.rel(u, v).is_adjacent()
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.rel(u, v) == Rel::Edge
    }

    #[inline]
    pub fn has_arc(&self, tail: VertexId, head: VertexId) -> bool {
        self.rel(tail, head) == Rel::Out
    }

    /// Undirected edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.pairs_where(|r| r == Rel::Edge)
    }

    /// Arcs as `(tail, head)`, sorted.
    pub fn arcs(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in 0..self.n {
                if self.rel(u, v) == Rel::Out {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn pairs_where(&self, pred: impl Fn(Rel) -> bool) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if pred(self.rel(u, v)) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.rel.iter().filter(|&&r| r == Rel::Edge).count() / 2
    }

    pub fn arc_count(&self) -> usize {
        self.rel.iter().filter(|&&r| r == Rel::Out).count()
    }

    pub fn out_neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.n).filter(move |&u| self.rel(v, u) == Rel::Out)
    }

    pub fn in_neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.n).filter(move |&u| self.rel(v, u) == Rel::In)
    }

    /// The underlying graph: every arc becomes an edge.
    pub fn underlying(&self) -> Graph {
        Graph {
            n: self.n,
            adj: self.rel.iter().map(|r| r.is_adjacent()).collect(),
        }
    }

    /// Reverses every arc.
    pub fn dual(&self) -> Self {
        PartiallyOrientedGraph {
            n: self.n,
            rel: self.rel.iter().map(|r| r.reversed()).collect(),
        }
    }

    /// Removes `v`; vertices above `v` move down by one.
    pub fn delete_vertex(&self, v: VertexId) -> Result<Self, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.n,
            });
        }
        let keep: Vec<VertexId> = (0..self.n).filter(|&u| u != v).collect();
        Ok(self.induced(&keep))
    }

    /// Replaces the arc `(tail, head)` by the edge `tail head`.
    pub fn relax_arc(&self, tail: VertexId, head: VertexId) -> Result<Self, GraphError> {
        if tail >= self.n || head >= self.n || !self.has_arc(tail, head) {
            return Err(GraphError::ArcAbsent { tail, head });
        }
        let mut h = self.clone();
        h.set(tail, head, Rel::Edge);
        Ok(h)
    }

    /// Replaces the edge `tail head` by the arc `(tail, head)`.
    pub fn orient_edge(&self, tail: VertexId, head: VertexId) -> Result<Self, GraphError> {
        if tail >= self.n || head >= self.n || !self.has_edge(tail, head) {
            return Err(GraphError::EdgeAbsent { u: tail, v: head });
        }
        let mut h = self.clone();
        h.set(tail, head, Rel::Out);
        Ok(h)
    }

    /// The mixed subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`. Callers pass distinct in-range vertices.
    pub fn induced(&self, vertices: &[VertexId]) -> Self {
        let mut h = PartiallyOrientedGraph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                h.set(i, j, self.rel(u, v));
            }
        }
        h
    }

    /// A copy with one more vertex, `n`, isolated.
    pub(crate) fn with_extra_vertex(&self) -> Self {
        let all: Vec<VertexId> = (0..self.n).collect();
        let mut h = PartiallyOrientedGraph::empty(self.n + 1);
        for &u in &all {
            for &v in &all[u + 1..] {
                h.set(u, v, self.rel(u, v));
            }
        }
        h
    }

    /// A topological order of the arcs (edges ignored), or `None` when the
    /// arcs contain a directed cycle. Ties go to the lowest index.
    pub fn arc_topological_order(&self) -> Option<Vec<VertexId>> {
        let mut indeg: Vec<usize> = (0..self.n).map(|v| self.in_neighbors(v).count()).collect();
        let mut order = Vec::with_capacity(self.n);
        let mut done = alloc::vec![false; self.n];
        for _ in 0..self.n {
            let next = (0..self.n).find(|&v| !done[v] && indeg[v] == 0)?;
            done[next] = true;
            order.push(next);
            for w in self.out_neighbors(next) {
                indeg[w] -= 1;
            }
        }
        Some(order)
    }

    /// True iff there are no edges, the arcs are acyclic, and every in- and
    /// out-neighbourhood is a set of pairwise adjacent vertices.
    pub fn is_acyclic_local_tournament(&self) -> bool {
        self.edge_count() == 0 && self.arc_topological_order().is_some() && self.is_local_tournament_arcs()
    }

    /// The local tournament condition on the arcs, ignoring edges and cycles.
    pub fn is_local_tournament_arcs(&self) -> bool {
        (0..self.n).all(|v| {
            let outs: Vec<_> = self.out_neighbors(v).collect();
            let ins: Vec<_> = self.in_neighbors(v).collect();
            pairwise_adjacent(self, &outs) && pairwise_adjacent(self, &ins)
        })
    }
}

fn pairwise_adjacent(h: &PartiallyOrientedGraph, vs: &[VertexId]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &a)| vs[i + 1..].iter().all(|&b| h.is_adjacent(a, b)))
}

impl From<&Graph> for PartiallyOrientedGraph {
    fn from(g: &Graph) -> Self {
        PartiallyOrientedGraph {
            n: g.n,
            rel: g.adj.iter().map(|&a| if a { Rel::Edge } else { Rel::None }).collect(),
        }
    }
}

impl From<Graph> for PartiallyOrientedGraph {
    fn from(g: Graph) -> Self {
        PartiallyOrientedGraph::from(&g)
    }
}

impl fmt::Debug for PartiallyOrientedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Pog")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .field("arcs", &self.arcs())
            .finish()
    }
}
