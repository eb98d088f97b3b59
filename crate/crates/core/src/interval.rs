//! Proper interval recognition through straight enumerations.
//!
//! A straight enumeration is a vertex order with the umbrella property: for
//! `u < v < w` in the order, an edge `uw` forces edges `uv` and `vw`. Each
//! connected component is ordered by three LexBFS sweeps (the second and
//! third break ties towards the vertex latest in the previous sweep), the
//! components are concatenated, and the result is always re-checked with
//! [`umbrella_holds`]. When no straight enumeration exists,
//! [`wegner_witness`] finds an induced claw, net, tent or chordless cycle of
//! length at least four.

use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::{Graph, PartiallyOrientedGraph, VertexId};
use crate::iso::mixed_isomorphic;

/// A vertex order with the umbrella property for a particular graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StraightEnumeration {
    order: Vec<VertexId>,
    position: Vec<usize>,
}

impl StraightEnumeration {
    /// Checks `order` against `g`.
    pub fn new(g: &Graph, order: Vec<VertexId>) -> Result<Self, Error> {
        if !umbrella_holds(g, &order)? {
            return Err(Error::NotStraight);
        }
        Ok(Self::from_verified(order))
    }

    fn from_verified(order: Vec<VertexId>) -> Self {
        let mut position = alloc::vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        StraightEnumeration { order, position }
    }

    pub fn order(&self) -> &[VertexId] {
        &self.order
    }

    pub fn position(&self, v: VertexId) -> usize {
        self.position[v]
    }

    /// `u` comes before `v`.
    pub fn precedes(&self, u: VertexId, v: VertexId) -> bool {
        self.position[u] < self.position[v]
    }

    /// The reverse of a straight enumeration is again straight.
    pub fn reversed(&self) -> Self {
        let mut order = self.order.clone();
        order.reverse();
        Self::from_verified(order)
    }

    pub fn into_order(self) -> Vec<VertexId> {
        self.order
    }
}

fn is_permutation(order: &[VertexId], n: usize) -> bool {
    if order.len() != n {
        return false;
    }
    let mut seen = alloc::vec![false; n];
    order.iter().all(|&v| v < n && !core::mem::replace(&mut seen[v], true))
}

/// True iff `order` has the umbrella property for `g`. Checked as: every
/// closed neighbourhood occupies a contiguous block of the order.
pub fn umbrella_holds(g: &Graph, order: &[VertexId]) -> Result<bool, Error> {
    let n = g.order();
    if !is_permutation(order, n) {
        return Err(Error::NotAPermutation);
    }
    let mut pos = alloc::vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    Ok((0..n).all(|v| {
        let (mut lo, mut hi, mut count) = (pos[v], pos[v], 1);
        for w in g.neighbors(v) {
            lo = lo.min(pos[w]);
            hi = hi.max(pos[w]);
            count += 1;
        }
        hi - lo + 1 == count
    }))
}

/// LexBFS by partition refinement. Without `prev`, ties go to the lowest
/// index; with `prev`, to the vertex appearing latest in `prev`.
fn lex_bfs(g: &Graph, prev: Option<&[VertexId]>) -> Vec<VertexId> {
    let n = g.order();
    let mut key = alloc::vec![0usize; n];
    match prev {
        Some(p) => {
            for (i, &v) in p.iter().enumerate() {
                key[v] = i;
            }
        }
        None => {
            for (v, k) in key.iter_mut().enumerate() {
                *k = n - v;
            }
        }
    }
    let mut parts: Vec<Vec<VertexId>> = alloc::vec![(0..n).collect()];
    let mut out = Vec::with_capacity(n);
    while !parts.is_empty() {
        let first = &mut parts[0];
        let at = (0..first.len())
            .max_by_key(|&i| key[first[i]])
            .expect("parts are non-empty");
        let v = first.remove(at);
        if first.is_empty() {
            parts.remove(0);
        }
        out.push(v);
        let mut next = Vec::with_capacity(parts.len() * 2);
        for p in parts {
            let (near, far): (Vec<_>, Vec<_>) = p.into_iter().partition(|&w| g.has_edge(v, w));
            if !near.is_empty() {
                next.push(near);
            }
            if !far.is_empty() {
                next.push(far);
            }
        }
        parts = next;
    }
    out
}

fn sweep_component(g: &Graph) -> Vec<VertexId> {
    let first = lex_bfs(g, None);
    let second = lex_bfs(g, Some(&first));
    lex_bfs(g, Some(&second))
}

/// A straight enumeration of `g`, or `None` if `g` is not a proper interval
/// graph. Components appear consecutively, ordered by smallest vertex.
pub fn straight_enumeration(g: &Graph) -> Option<StraightEnumeration> {
    let mut order = Vec::with_capacity(g.order());
    for comp in g.components() {
        let local = g.induced(&comp);
        order.extend(sweep_component(&local).into_iter().map(|i| comp[i]));
    }
    match umbrella_holds(g, &order) {
        Ok(true) => Some(StraightEnumeration::from_verified(order)),
        _ => None,
    }
}

/// Straight enumerations of each component of `g`, in component order.
pub(crate) fn component_enumerations(g: &Graph) -> Option<Vec<Vec<VertexId>>> {
    let se = straight_enumeration(g)?;
    let comps = g.components();
    let mut comp_of = alloc::vec![0; g.order()];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    let mut out: Vec<Vec<VertexId>> = alloc::vec![Vec::new(); comps.len()];
    for &v in se.order() {
        out[comp_of[v]].push(v);
    }
    Some(out)
}

/// The minimal non-proper-interval graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WegnerKind {
    /// A chordless cycle of the given length, at least four.
    Cycle(usize),
    Tent,
    Claw,
    Net,
}

impl WegnerKind {
    /// The model graph. Claw: centre 0. Net: triangle 0,1,2 with pendant
    /// `3+i` at `i`. Tent: triangle 0,1,2 with 3 on 0-1, 4 on 1-2, 5 on 0-2.
    /// Cycle: `0 - 1 - ... - (k-1) - 0`.
    pub fn model(self) -> Graph {
        let (n, edges): (usize, &[(usize, usize)]) = match self {
            WegnerKind::Cycle(k) => return Graph::cycle(k),
            WegnerKind::Claw => (4, &[(0, 1), (0, 2), (0, 3)]),
            WegnerKind::Net => (6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]),
            WegnerKind::Tent => (
                6,
                &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (1, 4), (2, 4), (0, 5), (2, 5)],
            ),
        };
        Graph::new(n, edges).expect("model edges are valid")
    }

    pub fn name(self) -> &'static str {
        match self {
            WegnerKind::Cycle(_) => "cycle",
            WegnerKind::Tent => "tent",
            WegnerKind::Claw => "claw",
            WegnerKind::Net => "net",
        }
    }
}

/// An induced copy of a minimal non-proper-interval graph. `vertices[i]`
/// plays the role of vertex `i` of [`WegnerKind::model`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WegnerWitness {
    pub kind: WegnerKind,
    pub vertices: Vec<VertexId>,
}

impl WegnerWitness {
    /// The vertices are distinct, in range, and induce the named graph.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.order();
        if matches!(self.kind, WegnerKind::Cycle(k) if k < 4) {
            return false;
        }
        let mut seen = alloc::vec![false; n];
        if !self
            .vertices
            .iter()
            .all(|&v| v < n && !core::mem::replace(&mut seen[v], true))
        {
            return false;
        }
        let sub = PartiallyOrientedGraph::from(g.induced(&self.vertices));
        let model = PartiallyOrientedGraph::from(self.kind.model());
        mixed_isomorphic(&sub, &model).is_some()
    }
}

/// Finds an induced claw, chordless cycle of length at least four, net or
/// tent, in that order of preference.
pub fn wegner_witness(g: &Graph) -> Result<WegnerWitness, Error> {
    if straight_enumeration(g).is_some() {
        return Err(Error::ProperIntervalGraph);
    }
    find_claw(g)
        .or_else(|| shortest_chordless_cycle(g))
        .or_else(|| find_net_or_tent(g))
        .ok_or(Error::ProperIntervalGraph)
}

fn find_claw(g: &Graph) -> Option<WegnerWitness> {
    for c in 0..g.order() {
        let nb: Vec<_> = g.neighbors(c).collect();
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &d in &nb[j + 1..] {
                    if !g.has_edge(a, d) && !g.has_edge(b, d) {
                        return Some(WegnerWitness {
                            kind: WegnerKind::Claw,
                            vertices: alloc::vec![c, a, b, d],
                        });
                    }
                }
            }
        }
    }
    None
}

/// Shortest chordless cycle through some induced path `a - b - c`: a
/// shortest `a`-`c` path avoiding `b` and the rest of `N(b)`, closed by `b`.
fn shortest_chordless_cycle(g: &Graph) -> Option<WegnerWitness> {
    let n = g.order();
    let mut best: Option<Vec<VertexId>> = None;
    for b in 0..n {
        let nb: Vec<_> = g.neighbors(b).collect();
        for (i, &a) in nb.iter().enumerate() {
            for &c in &nb[i + 1..] {
                if g.has_edge(a, c) {
                    continue;
                }
                let blocked = |w: VertexId| w == b || (w != a && w != c && g.has_edge(b, w));
                let mut parent = alloc::vec![usize::MAX; n];
                parent[a] = a;
                let mut queue = alloc::vec![a];
                let mut qi = 0;
                while qi < queue.len() && parent[c] == usize::MAX {
                    let u = queue[qi];
                    qi += 1;
                    for w in g.neighbors(u) {
                        if parent[w] == usize::MAX && !blocked(w) {
                            parent[w] = u;
                            queue.push(w);
                        }
                    }
                }
                if parent[c] == usize::MAX {
                    continue;
                }
                let mut cycle = alloc::vec![b];
                let mut path = alloc::vec![c];
                while *path.last().unwrap() != a {
                    let last = *path.last().unwrap();
                    path.push(parent[last]);
                }
                path.reverse();
                cycle.extend(path);
                if best.as_ref().is_none_or(|bc| cycle.len() < bc.len()) {
                    best = Some(cycle);
                }
            }
        }
    }
    best.map(|vertices| WegnerWitness {
        kind: WegnerKind::Cycle(vertices.len()),
        vertices,
    })
}

fn find_net_or_tent(g: &Graph) -> Option<WegnerWitness> {
    let n = g.order();
    let independent = |xs: &[VertexId]| {
        xs.iter()
            .enumerate()
            .all(|(i, &x)| xs[i + 1..].iter().all(|&y| x != y && !g.has_edge(x, y)))
    };
    let only = |w: VertexId, yes: &[VertexId], no: &[VertexId]| {
        !yes.contains(&w)
            && !no.contains(&w)
            && yes.iter().all(|&y| g.has_edge(w, y))
            && no.iter().all(|&z| !g.has_edge(w, z))
    };
    for p in 0..n {
        for q in g.neighbors(p).filter(|&q| q > p) {
            for r in g.neighbors(q).filter(|&r| r > q && g.has_edge(p, r)) {
                let tri = [p, q, r];
                // net: a private pendant at each corner
                let pend = |i: usize| -> Vec<VertexId> {
                    let others: Vec<_> = tri.iter().copied().filter(|&t| t != tri[i]).collect();
                    (0..n).filter(|&w| only(w, &[tri[i]], &others)).collect()
                };
                let (xs, ys, zs) = (pend(0), pend(1), pend(2));
                for &x in &xs {
                    for &y in &ys {
                        for &z in &zs {
                            if independent(&[x, y, z]) {
                                return Some(WegnerWitness {
                                    kind: WegnerKind::Net,
                                    vertices: alloc::vec![p, q, r, x, y, z],
                                });
                            }
                        }
                    }
                }
                // tent: a private common neighbour on each side
                let side = |i: usize, j: usize, k: usize| -> Vec<VertexId> {
                    (0..n).filter(|&w| only(w, &[tri[i], tri[j]], &[tri[k]])).collect()
                };
                let (xs, ys, zs) = (side(0, 1, 2), side(1, 2, 0), side(0, 2, 1));
                for &x in &xs {
                    for &y in &ys {
                        for &z in &zs {
                            if independent(&[x, y, z]) {
                                return Some(WegnerWitness {
                                    kind: WegnerKind::Tent,
                                    vertices: alloc::vec![p, q, r, x, y, z],
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    None
}
