//! Isomorphism and canonical codes for mixed graphs.
//!
//! Both routes share the same colour refinement: vertices are split by how
//! many edges, out-arcs and in-arcs they have into each current cell until
//! the partition is stable. [`mixed_isomorphic`] then backtracks over
//! colour-respecting maps; [`canonical_code`] individualises vertices one at
//! a time and keeps the lexicographically smallest adjacency encoding over
//! the discrete partitions reached.

use alloc::vec::Vec;

use crate::graph::{PartiallyOrientedGraph, Rel, VertexId};

/// A vertex bijection `v -> image(v)`, edges to edges and arcs to arcs with
/// direction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsoMapping(Vec<VertexId>);

impl IsoMapping {
    pub fn identity(n: usize) -> Self {
        IsoMapping((0..n).collect())
    }

    /// `None` unless `images` is a permutation of `0..images.len()`.
    pub fn from_images(images: Vec<VertexId>) -> Option<Self> {
        let mut seen = alloc::vec![false; images.len()];
        for &v in &images {
            if v >= images.len() || core::mem::replace(&mut seen[v], true) {
                return None;
            }
        }
        Some(IsoMapping(images))
    }

    #[inline]
    pub fn image(&self, v: VertexId) -> VertexId {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0; self.0.len()];
        for (v, &w) in self.0.iter().enumerate() {
            inv[w] = v;
        }
        IsoMapping(inv)
    }

    /// The graph with every vertex `v` renamed to `image(v)`.
    pub fn apply(&self, h: &PartiallyOrientedGraph) -> PartiallyOrientedGraph {
        let n = h.order();
        let mut out = PartiallyOrientedGraph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                out.set(self.image(u), self.image(v), h.rel(u, v));
            }
        }
        out
    }

    /// Whether this mapping carries `from` onto `to` exactly.
    pub fn is_isomorphism(&self, from: &PartiallyOrientedGraph, to: &PartiallyOrientedGraph) -> bool {
        from.order() == self.0.len()
            && to.order() == self.0.len()
            && (0..from.order())
                .all(|u| (0..from.order()).all(|v| from.rel(u, v) == to.rel(self.image(u), self.image(v))))
    }
}

const REL_KINDS: usize = 3;

#[inline]
fn rel_slot(r: Rel) -> Option<usize> {
    match r {
        Rel::None => None,
        Rel::Edge => Some(0),
        Rel::Out => Some(1),
        Rel::In => Some(2),
    }
}

/// Splits the ordered cells until every vertex of a cell sees the same
/// number of edges, out-arcs and in-arcs into every cell. New cells are
/// ordered by signature, so the result depends only on the labelled
/// structure, not on the vertex names.
fn refine(h: &PartiallyOrientedGraph, mut cells: Vec<Vec<VertexId>>) -> Vec<Vec<VertexId>> {
    let n = h.order();
    let mut cell_of = alloc::vec![0usize; n];
    loop {
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let k = cells.len();
        let mut next = Vec::with_capacity(k);
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u16>, VertexId)> = cell
                .iter()
                .map(|&v| {
                    let mut sig = alloc::vec![0u16; k * REL_KINDS];
                    for w in 0..n {
                        if let Some(s) = rel_slot(h.rel(v, w)) {
                            sig[cell_of[w] * REL_KINDS + s] += 1;
                        }
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        let stable = next.len() == cells.len();
        cells = next;
        if stable {
            return cells;
        }
    }
}

/// Swapping `u` and `v` is an automorphism.
fn swappable(h: &PartiallyOrientedGraph, u: VertexId, v: VertexId) -> bool {
    matches!(h.rel(u, v), Rel::None | Rel::Edge)
        && (0..h.order()).all(|w| w == u || w == v || h.rel(u, w) == h.rel(v, w))
}

fn encode(h: &PartiallyOrientedGraph, order: &[VertexId]) -> Vec<u8> {
    let n = order.len();
    let mut code = Vec::with_capacity(4 + n * n.saturating_sub(1) / 2);
    code.extend_from_slice(&(n as u32).to_be_bytes());
    for i in 0..n {
        for j in i + 1..n {
            code.push(h.rel(order[i], order[j]) as u8);
        }
    }
    code
}

struct CanonSearch<'a> {
    h: &'a PartiallyOrientedGraph,
    best: Option<(Vec<u8>, Vec<VertexId>)>,
}

impl CanonSearch<'_> {
    fn visit(&mut self, cells: Vec<Vec<VertexId>>) {
        let cells = refine(self.h, cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<VertexId> = cells.iter().map(|c| c[0]).collect();
            let code = encode(self.h, &order);
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, order));
            }
            return;
        };
        let mut tried: Vec<VertexId> = Vec::new();
        for &v in &cells[target] {
            if tried.iter().any(|&u| swappable(self.h, u, v)) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(alloc::vec![v]);
            child.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            self.visit(child);
        }
    }
}

/// The canonical code together with the vertex order that produces it:
/// `order[i]` is the vertex placed at canonical position `i`.
pub fn canonical_form(h: &PartiallyOrientedGraph) -> (Vec<u8>, Vec<VertexId>) {
    if h.order() == 0 {
        return (encode(h, &[]), Vec::new());
    }
    let mut search = CanonSearch { h, best: None };
    search.visit(alloc::vec![(0..h.order()).collect()]);
    search.best.expect("search reaches at least one leaf")
}

/// A byte string equal for two graphs exactly when they are isomorphic as
/// mixed graphs.
pub fn canonical_code(h: &PartiallyOrientedGraph) -> Vec<u8> {
    canonical_form(h).0
}

/// The canonical representative of `h`'s isomorphism class.
pub fn canonical_graph(h: &PartiallyOrientedGraph) -> PartiallyOrientedGraph {
    let (_, order) = canonical_form(h);
    h.induced(&order)
}

/// An isomorphism `h1 -> h2` of mixed graphs, if one exists.
pub fn mixed_isomorphic(h1: &PartiallyOrientedGraph, h2: &PartiallyOrientedGraph) -> Option<IsoMapping> {
    let n = h1.order();
    if n != h2.order() || h1.edge_count() != h2.edge_count() || h1.arc_count() != h2.arc_count() {
        return None;
    }
    // Refine both graphs together so that colours are comparable.
    let mut union = PartiallyOrientedGraph::empty(2 * n);
    for u in 0..n {
        for v in u + 1..n {
            union.set(u, v, h1.rel(u, v));
            union.set(n + u, n + v, h2.rel(u, v));
        }
    }
    let cells = refine(&union, alloc::vec![(0..2 * n).collect()]);
    let mut colour = alloc::vec![0usize; 2 * n];
    for (i, c) in cells.iter().enumerate() {
        if c.iter().filter(|&&v| v < n).count() * 2 != c.len() {
            return None;
        }
        for &v in c {
            colour[v] = i;
        }
    }

    // Map vertices so each new one is as constrained as possible.
    let mut seq: Vec<VertexId> = Vec::with_capacity(n);
    let mut placed = alloc::vec![false; n];
    let cell_size = |v: VertexId| cells[colour[v]].len();
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = seq.iter().filter(|&&u| h1.is_adjacent(u, v)).count();
                (links, core::cmp::Reverse(cell_size(v)), core::cmp::Reverse(v))
            })
            .expect("an unplaced vertex remains");
        placed[next] = true;
        seq.push(next);
    }

    let mut map = alloc::vec![usize::MAX; n];
    let mut used = alloc::vec![false; n];
    if extend(h1, h2, &colour, &seq, 0, &mut map, &mut used) {
        Some(IsoMapping(map))
    } else {
        None
    }
}

fn extend(
    h1: &PartiallyOrientedGraph,
    h2: &PartiallyOrientedGraph,
    colour: &[usize],
    seq: &[VertexId],
    depth: usize,
    map: &mut [VertexId],
    used: &mut [bool],
) -> bool {
    let n = h1.order();
    let Some(&a) = seq.get(depth) else {
        return true;
    };
    for b in 0..n {
        if used[b] || colour[n + b] != colour[a] {
            continue;
        }
        let consistent = seq[..depth].iter().all(|&p| h1.rel(a, p) == h2.rel(b, map[p]));
        if !consistent {
            continue;
        }
        map[a] = b;
        used[b] = true;
        if extend(h1, h2, colour, seq, depth + 1, map, used) {
            return true;
        }
        used[b] = false;
    }
    map[a] = usize::MAX;
    false
}
