//! Brute-force completability and exhaustive obstruction enumeration.
//!
//! Independent of the structural machinery: the oracle tries orientations
//! edge by edge, pruning partial orientations that already break the local
//! tournament condition or close a directed cycle.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::{PartiallyOrientedGraph, Rel, VertexId};
use crate::iso::canonical_form;
use crate::obstruction::is_obstruction_with;

pub const DEFAULT_EDGE_CAP: usize = 25;
/// Largest order [`enumerate_obstructions`] accepts.
pub const ENUMERATION_LIMIT: usize = 6;

/// Exhaustive search over orientations of the undirected edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    pub edge_cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            edge_cap: DEFAULT_EDGE_CAP,
        }
    }
}

impl Oracle {
    pub fn with_edge_cap(edge_cap: usize) -> Self {
        Oracle { edge_cap }
    }

    /// An orientation of every edge giving an acyclic local tournament.
    pub fn alt_completion(&self, h: &PartiallyOrientedGraph) -> Result<Option<PartiallyOrientedGraph>, Error> {
        self.search(h, true)
    }

    /// An orientation of every edge giving a local tournament.
    pub fn lt_completion(&self, h: &PartiallyOrientedGraph) -> Result<Option<PartiallyOrientedGraph>, Error> {
        self.search(h, false)
    }

    pub fn alt_completable(&self, h: &PartiallyOrientedGraph) -> Result<bool, Error> {
        self.alt_completion(h).map(|d| d.is_some())
    }

    pub fn lt_completable(&self, h: &PartiallyOrientedGraph) -> Result<bool, Error> {
        self.lt_completion(h).map(|d| d.is_some())
    }

    fn search(&self, h: &PartiallyOrientedGraph, acyclic: bool) -> Result<Option<PartiallyOrientedGraph>, Error> {
        let edges = h.edges();
        if edges.len() > self.edge_cap {
            return Err(Error::EdgeCapExceeded {
                edges: edges.len(),
                cap: self.edge_cap,
            });
        }
        if !h.is_local_tournament_arcs() || (acyclic && h.arc_topological_order().is_none()) {
            return Ok(None);
        }
        let mut s = Search {
            g: h.clone(),
            edges,
            acyclic,
            stack: Vec::new(),
            seen: Vec::new(),
        };
        Ok(if s.run(0) { Some(s.g) } else { None })
    }
}

struct Search {
    g: PartiallyOrientedGraph,
    edges: Vec<(VertexId, VertexId)>,
    acyclic: bool,
    stack: Vec<VertexId>,
    seen: Vec<bool>,
}

impl Search {
    fn run(&mut self, i: usize) -> bool {
        let Some(&(u, v)) = self.edges.get(i) else {
            return true;
        };
        for (t, hd) in [(u, v), (v, u)] {
            if self.admissible(t, hd) {
                self.g.set(t, hd, Rel::Out);
                if self.run(i + 1) {
                    return true;
                }
                self.g.set(t, hd, Rel::Edge);
            }
        }
        false
    }

    /// Adding `t -> hd` keeps out- and in-neighbourhoods cliques and, when
    /// required, creates no directed cycle.
    fn admissible(&mut self, t: VertexId, hd: VertexId) -> bool {
        let g = &self.g;
        if g.out_neighbors(t).any(|w| w != hd && !g.is_adjacent(w, hd)) {
            return false;
        }
        if g.in_neighbors(hd).any(|w| w != t && !g.is_adjacent(w, t)) {
            return false;
        }
        !self.acyclic || !self.reaches(hd, t)
    }

    fn reaches(&mut self, from: VertexId, to: VertexId) -> bool {
        self.seen.clear();
        self.seen.resize(self.g.order(), false);
        self.stack.clear();
        self.stack.push(from);
        self.seen[from] = true;
        while let Some(x) = self.stack.pop() {
            if x == to {
                return true;
            }
            for y in self.g.out_neighbors(x) {
                if !self.seen[y] {
                    self.seen[y] = true;
                    self.stack.push(y);
                }
            }
        }
        false
    }
}

/// Acyclic-local-tournament completability with the default cap.
pub fn oracle_alt_completable(h: &PartiallyOrientedGraph) -> Result<bool, Error> {
    Oracle::default().alt_completable(h)
}

/// Local-tournament completability with the default cap.
pub fn oracle_lt_completable(h: &PartiallyOrientedGraph) -> Result<bool, Error> {
    Oracle::default().lt_completable(h)
}

/// All relations a new vertex may have to an old one.
pub const ALL_RELATIONS: [Rel; 4] = [Rel::None, Rel::Edge, Rel::Out, Rel::In];
/// Relations of an undirected graph.
pub const UNDIRECTED_RELATIONS: [Rel; 2] = [Rel::None, Rel::Edge];

/// Every way of adding vertex `n` to `parent` with relations from
/// `alphabet` (the relation read from the new vertex's side).
pub fn augmentations<'a>(
    parent: &'a PartiallyOrientedGraph,
    alphabet: &'a [Rel],
) -> impl Iterator<Item = PartiallyOrientedGraph> + 'a {
    let n = parent.order();
    let k = alphabet.len();
    let total = k.checked_pow(n as u32).expect("augmentation count overflows");
    (0..total).map(move |mut code| {
        let mut g = parent.with_extra_vertex();
        for u in 0..n {
            let r = alphabet[code % k];
            code /= k;
            if r != Rel::None {
                g.set(n, u, r);
            }
        }
        g
    })
}

/// Isomorphism classes of mixed graphs on `0..=max_n` vertices, grown one
/// vertex at a time. `keep` must be hereditary (closed under vertex
/// deletion) for the result to be complete; rejected graphs are not
/// extended. Level `k` holds canonical representatives sorted by code.
pub fn enumerate_graphs<F>(max_n: usize, alphabet: &[Rel], mut keep: F) -> Vec<Vec<PartiallyOrientedGraph>>
where
    F: FnMut(&PartiallyOrientedGraph) -> bool,
{
    let mut levels = Vec::with_capacity(max_n + 1);
    let empty = PartiallyOrientedGraph::empty(0);
    levels.push(if keep(&empty) { alloc::vec![empty] } else { Vec::new() });
    for _ in 0..max_n {
        let mut next = BTreeMap::new();
        for parent in levels.last().expect("nonempty") {
            for child in augmentations(parent, alphabet) {
                let (code, order) = canonical_form(&child);
                if !next.contains_key(&code) && keep(&child) {
                    next.insert(code, child.induced(&order));
                }
            }
        }
        levels.push(next.into_values().collect());
    }
    levels
}

/// One level of obstruction enumeration: completable graphs (to be grown
/// further) and obstructions, both keyed by canonical code.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Level {
    pub completable: BTreeMap<Vec<u8>, PartiallyOrientedGraph>,
    pub obstructions: BTreeMap<Vec<u8>, PartiallyOrientedGraph>,
}

impl Level {
    pub fn merge(&mut self, other: Level) {
        self.completable.extend(other.completable);
        self.obstructions.extend(other.obstructions);
    }
}

/// Grows each parent by one vertex in every way and sorts the children
/// into completable graphs and obstructions, using the oracle throughout.
pub fn expand_level(parents: &[PartiallyOrientedGraph]) -> Level {
    let oracle = Oracle::default();
    let completable = |g: &PartiallyOrientedGraph| oracle.alt_completable(g).expect("small graphs fit the cap");
    let mut level = Level::default();
    for parent in parents {
        for child in augmentations(parent, &ALL_RELATIONS) {
            let (code, order) = canonical_form(&child);
            if level.completable.contains_key(&code) || level.obstructions.contains_key(&code) {
                continue;
            }
            // canonical representatives keep merged levels independent of
            // chunking
            let child = child.induced(&order);
            if completable(&child) {
                level.completable.insert(code, child);
            } else if is_obstruction_with(&child, completable) {
                level.obstructions.insert(code, child);
            }
        }
    }
    level
}

/// The outcome of exhaustive enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationReport {
    pub max_n: usize,
    /// Obstructions up to isomorphism, sorted by order then canonical code.
    pub obstructions: Vec<(Vec<u8>, PartiallyOrientedGraph)>,
    /// `counts[k]` obstructions on `k` vertices, for `k` in `0..=max_n`.
    pub counts: Vec<usize>,
    /// `completable_counts[k]` completable graphs on `k` vertices up to
    /// isomorphism.
    pub completable_counts: Vec<usize>,
}

/// Every obstruction on at most `max_n` vertices, up to isomorphism,
/// for `max_n` at most [`ENUMERATION_LIMIT`].
pub fn enumerate_obstructions(max_n: usize) -> Result<EnumerationReport, Error> {
    enumerate_obstructions_by(max_n, expand_level)
}

/// As [`enumerate_obstructions`], driving each level through `expand`
/// (for instance [`expand_level`] over chunks in parallel, merged in any
/// order).
///
/// Only completable graphs are grown: deleting a vertex from an
/// obstruction leaves a completable graph, and completability is inherited
/// by induced subgraphs, so every obstruction has a completable parent.
pub fn enumerate_obstructions_by<F>(max_n: usize, mut expand: F) -> Result<EnumerationReport, Error>
where
    F: FnMut(&[PartiallyOrientedGraph]) -> Level,
{
    if max_n > ENUMERATION_LIMIT {
        return Err(Error::OrderTooLarge {
            requested: max_n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut parents = alloc::vec![PartiallyOrientedGraph::empty(0)];
    let mut obstructions = Vec::new();
    let mut counts = alloc::vec![0];
    let mut completable_counts = alloc::vec![1];
    for _ in 0..max_n {
        let level = expand(&parents);
        counts.push(level.obstructions.len());
        completable_counts.push(level.completable.len());
        obstructions.extend(level.obstructions);
        parents = level.completable.into_values().collect();
    }
    Ok(EnumerationReport {
        max_n,
        obstructions,
        counts,
        completable_counts,
    })
}
