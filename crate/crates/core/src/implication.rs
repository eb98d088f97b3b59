//! Forcing between ordered pairs of adjacent vertices and the implication
//! classes it generates.
//!
//! `(u, v)` forces `(x, y)` when the pairs are equal, when `y = u` and `x` is
//! a neighbour of `u` not adjacent to `v`, or when `x = v` and `y` is a
//! neighbour of `v` not adjacent to `u`. Forcing is symmetric, so its
//! reflexive-transitive closure is a union-find over the `2|E|` ordered
//! pairs.

use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::{Graph, PartiallyOrientedGraph, VertexId};

/// One implication class: a set of edges, and the orientation of each edge
/// in the coset of ordered pairs containing the smallest edge `(u, v)`,
/// `u < v`. `orientation` is `None` when the class implies both directions
/// of its edges, which never happens in a proper interval graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImplicationClass {
    pub edges: Vec<(VertexId, VertexId)>,
    pub orientation: Option<Vec<(VertexId, VertexId)>>,
}

impl ImplicationClass {
    pub fn is_trivial(&self) -> bool {
        self.edges.len() == 1
    }
}

/// Whether two ordered pairs are implied in the same or in opposite
/// directions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alignment {
    Aligned,
    Opposed,
}

/// The partition of `E` into implication classes.
#[derive(Clone, Debug)]
pub struct ImplicationPartition {
    n: usize,
    edge_id: Vec<usize>,
    root: Vec<usize>,
    class_of_edge: Vec<usize>,
    classes: Vec<ImplicationClass>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller id as root
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

impl ImplicationPartition {
    /// Index of the ordered pair `(u, v)`: `2e` for `u < v`, `2e + 1`
    /// otherwise, where `e` is the edge's rank in lexicographic order.
    fn pair(&self, u: VertexId, v: VertexId) -> Option<usize> {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        match self.edge_id.get(a * self.n + b) {
            Some(&e) if e != usize::MAX => Some(2 * e + usize::from(u > v)),
            _ => None,
        }
    }

    pub fn classes(&self) -> &[ImplicationClass] {
        &self.classes
    }

    /// The index of the class containing edge `uv`.
    pub fn class_of(&self, u: VertexId, v: VertexId) -> Option<usize> {
        self.pair(u, v).map(|p| self.class_of_edge[p / 2])
    }

    /// `(u, v)` implies `(x, y)`.
    pub fn implies(&self, p: (VertexId, VertexId), q: (VertexId, VertexId)) -> bool {
        match (self.pair(p.0, p.1), self.pair(q.0, q.1)) {
            (Some(a), Some(b)) => self.root[a] == self.root[b],
            _ => false,
        }
    }

    /// How `(u, v)` relates to `(x, y)` under implication, if at all. A pair
    /// implying both `(x, y)` and `(y, x)` reports `Aligned`.
    pub fn alignment(&self, p: (VertexId, VertexId), q: (VertexId, VertexId)) -> Option<Alignment> {
        if self.implies(p, q) {
            Some(Alignment::Aligned)
        } else if self.implies(p, (q.1, q.0)) {
            Some(Alignment::Opposed)
        } else {
            None
        }
    }
}

/// `(u, v)` forces `(x, y)` in `g`. Both pairs must be edges of `g`.
pub fn gamma_forces(g: &Graph, p: (VertexId, VertexId), q: (VertexId, VertexId)) -> Result<bool, Error> {
    for (a, b) in [p, q] {
        if a >= g.order() || b >= g.order() || !g.has_edge(a, b) {
            return Err(Error::NotAnEdge { u: a, v: b });
        }
    }
    let ((u, v), (x, y)) = (p, q);
    Ok((u == x && v == y) || (u == y && v != x && !g.has_edge(v, x)) || (v == x && u != y && !g.has_edge(u, y)))
}

/// Closes forcing over all ordered pairs of `g` and groups edges into
/// implication classes, ordered by their smallest edge.
pub fn implication_classes(g: &Graph) -> ImplicationPartition {
    let n = g.order();
    let edges = g.edges();
    let mut edge_id = alloc::vec![usize::MAX; n * n];
    for (e, &(u, v)) in edges.iter().enumerate() {
        edge_id[u * n + v] = e;
    }
    let mut part = ImplicationPartition {
        n,
        edge_id,
        root: Vec::new(),
        class_of_edge: alloc::vec![0; edges.len()],
        classes: Vec::new(),
    };

    let mut uf = UnionFind::new(2 * edges.len());
    for &(a, b) in &edges {
        for (u, v) in [(a, b), (b, a)] {
            let p = part.pair(u, v).expect("edge");
            // (u, v) forces (x, u) for x adjacent to u but not to v
            for x in g.neighbors(u) {
                if x != v && !g.has_edge(v, x) {
                    uf.union(p, part.pair(x, u).expect("edge"));
                }
            }
            // (u, v) forces (v, y) for y adjacent to v but not to u
            for y in g.neighbors(v) {
                if y != u && !g.has_edge(u, y) {
                    uf.union(p, part.pair(v, y).expect("edge"));
                }
            }
        }
    }
    part.root = (0..2 * edges.len()).map(|p| uf.find(p)).collect();

    let mut key_to_class: Vec<(usize, usize)> = Vec::new();
    for (e, &(u, v)) in edges.iter().enumerate() {
        let key = part.root[2 * e].min(part.root[2 * e + 1]);
        let idx = match key_to_class.iter().find(|(k, _)| *k == key) {
            Some(&(_, i)) => i,
            None => {
                key_to_class.push((key, part.classes.len()));
                part.classes.push(ImplicationClass {
                    edges: Vec::new(),
                    orientation: Some(Vec::new()),
                });
                part.classes.len() - 1
            }
        };
        part.class_of_edge[e] = idx;
        part.classes[idx].edges.push((u, v));
    }

    let mut classes = core::mem::take(&mut part.classes);
    for class in &mut classes {
        let (u0, v0) = class.edges[0];
        let rep = part.root[part.pair(u0, v0).expect("edge")];
        let mut orient = Vec::with_capacity(class.edges.len());
        for &(u, v) in &class.edges {
            let fwd = part.root[part.pair(u, v).expect("edge")];
            let back = part.root[part.pair(v, u).expect("edge")];
            if fwd == back {
                orient.clear();
                class.orientation = None;
                break;
            }
            orient.push(if fwd == rep { (u, v) } else { (v, u) });
        }
        if class.orientation.is_some() {
            class.orientation = Some(orient);
        }
    }
    part.classes = classes;
    part
}

/// `N[u] = N[v]` for the edge `uv`.
pub fn is_balanced(g: &Graph, u: VertexId, v: VertexId) -> Result<bool, Error> {
    if u >= g.order() || v >= g.order() || !g.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    Ok(g.same_closed_neighborhood(u, v))
}

/// Vertices adjacent to every other vertex.
pub fn universal_vertices(g: &Graph) -> Vec<VertexId> {
    let n = g.order();
    (0..n).filter(|&v| g.degree(v) + 1 == n).collect()
}

/// Vertices other than `tail` and `head` adjacent to exactly one of them.
/// The arc has a balancing vertex exactly when this is a single vertex.
pub fn arc_balancing_candidates(
    h: &PartiallyOrientedGraph,
    tail: VertexId,
    head: VertexId,
) -> Result<Vec<VertexId>, Error> {
    if tail >= h.order() || head >= h.order() || !h.has_arc(tail, head) {
        return Err(crate::error::GraphError::ArcAbsent { tail, head }.into());
    }
    Ok((0..h.order())
        .filter(|&w| w != tail && w != head && h.is_adjacent(w, tail) != h.is_adjacent(w, head))
        .collect())
}

/// The `(tail, head)`-balancing vertex, if there is one.
pub fn balancing_vertex(h: &PartiallyOrientedGraph, tail: VertexId, head: VertexId) -> Result<Option<VertexId>, Error> {
    let c = arc_balancing_candidates(h, tail, head)?;
    Ok(if c.len() == 1 { Some(c[0]) } else { None })
}
