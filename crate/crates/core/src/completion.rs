//! Deciding and constructing completions to acyclic local tournaments.
//!
//! The decision runs in three stages: the underlying graph must have a
//! straight enumeration, the arcs must be acyclic, and no component may
//! contain an unbalanced arc pointing forward together with one pointing
//! backward in its enumeration. Every negative answer carries a certificate
//! that can be checked on its own.

use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::{Graph, PartiallyOrientedGraph, Rel, VertexId};
use crate::interval::{component_enumerations, umbrella_holds, wegner_witness, StraightEnumeration, WegnerWitness};

/// The direction of an arc relative to a straight enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArcSign {
    pub arc: (VertexId, VertexId),
    /// The tail precedes the head.
    pub positive: bool,
    /// The endpoints have equal closed neighbourhoods.
    pub balanced: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompletionCertificate {
    /// An acyclic local tournament on the same vertices extending every arc.
    Completed(PartiallyOrientedGraph),
    /// The underlying graph is not a proper interval graph.
    NotProperInterval(WegnerWitness),
    /// Vertices of a directed cycle formed by arcs, in cycle order.
    DirectedCycle(Vec<VertexId>),
    /// Two unbalanced arcs in one component pointing in opposite directions
    /// along `order`.
    OpposingUnbalancedArcs {
        positive: (VertexId, VertexId),
        negative: (VertexId, VertexId),
        order: StraightEnumeration,
    },
}

impl CompletionCertificate {
    pub fn is_completed(&self) -> bool {
        matches!(self, CompletionCertificate::Completed(_))
    }

    /// Re-checks the certificate against `h` from scratch.
    pub fn verify(&self, h: &PartiallyOrientedGraph) -> bool {
        let g = h.underlying();
        match self {
            CompletionCertificate::Completed(d) => verify_completion(h, d),
            CompletionCertificate::NotProperInterval(w) => w.verify(&g),
            CompletionCertificate::DirectedCycle(c) => is_directed_cycle(h, c),
            CompletionCertificate::OpposingUnbalancedArcs {
                positive,
                negative,
                order,
            } => {
                let (p, q) = (*positive, *negative);
                if !matches!(umbrella_holds(&g, order.order()), Ok(true)) {
                    return false;
                }
                if !h.has_arc(p.0, p.1) || !h.has_arc(q.0, q.1) {
                    return false;
                }
                let same_component = g.components().iter().any(|c| c.contains(&p.0) && c.contains(&q.0));
                same_component
                    && order.precedes(p.0, p.1)
                    && order.precedes(q.1, q.0)
                    && !g.same_closed_neighborhood(p.0, p.1)
                    && !g.same_closed_neighborhood(q.0, q.1)
            }
        }
    }
}

fn is_directed_cycle(h: &PartiallyOrientedGraph, c: &[VertexId]) -> bool {
    let n = h.order();
    if c.len() < 3 {
        return false;
    }
    let mut seen = alloc::vec![false; n];
    if !c.iter().all(|&v| v < n && !core::mem::replace(&mut seen[v], true)) {
        return false;
    }
    (0..c.len()).all(|i| h.has_arc(c[i], c[(i + 1) % c.len()]))
}

/// Sign and balancedness of every arc of `h`, in arc order.
pub fn arc_signs(h: &PartiallyOrientedGraph, order: &StraightEnumeration) -> Result<Vec<ArcSign>, Error> {
    let g = h.underlying();
    if !umbrella_holds(&g, order.order())? {
        return Err(Error::NotStraight);
    }
    Ok(h.arcs()
        .into_iter()
        .map(|(u, v)| ArcSign {
            arc: (u, v),
            positive: order.precedes(u, v),
            balanced: g.same_closed_neighborhood(u, v),
        })
        .collect())
}

/// A shortest directed cycle made of arcs, if any.
pub fn shortest_directed_cycle(h: &PartiallyOrientedGraph) -> Option<Vec<VertexId>> {
    let n = h.order();
    let mut best: Option<Vec<VertexId>> = None;
    for s in 0..n {
        // BFS from s back to s
        let mut parent = alloc::vec![usize::MAX; n];
        let mut queue = alloc::vec![s];
        let mut qi = 0;
        let mut closing = None;
        'bfs: while qi < queue.len() {
            let u = queue[qi];
            qi += 1;
            for w in h.out_neighbors(u) {
                if w == s {
                    closing = Some(u);
                    break 'bfs;
                }
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    queue.push(w);
                }
            }
        }
        if let Some(mut u) = closing {
            let mut cycle = alloc::vec![u];
            while u != s {
                u = parent[u];
                cycle.push(u);
            }
            cycle.reverse();
            if best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
                best = Some(cycle);
            }
        }
    }
    best
}

/// The first component with both a positive and a negative unbalanced arc,
/// reported as `(positive, negative)`.
fn opposing_pair(
    h: &PartiallyOrientedGraph,
    g: &Graph,
    comps: &[Vec<VertexId>],
) -> Option<((VertexId, VertexId), (VertexId, VertexId))> {
    let mut pos = alloc::vec![0; h.order()];
    let mut comp_of = alloc::vec![0; h.order()];
    for (ci, c) in comps.iter().enumerate() {
        for (i, &v) in c.iter().enumerate() {
            pos[v] = i;
            comp_of[v] = ci;
        }
    }
    let mut first_pos = alloc::vec![None; comps.len()];
    let mut first_neg = alloc::vec![None; comps.len()];
    for (u, v) in h.arcs() {
        if g.same_closed_neighborhood(u, v) {
            continue;
        }
        let slot = if pos[u] < pos[v] {
            &mut first_pos
        } else {
            &mut first_neg
        };
        slot[comp_of[u]].get_or_insert((u, v));
    }
    (0..comps.len()).find_map(|c| Some((first_pos[c]?, first_neg[c]?)))
}

/// Whether `h` can be completed to an acyclic local tournament.
pub fn can_complete(h: &PartiallyOrientedGraph) -> bool {
    let g = h.underlying();
    let Some(comps) = component_enumerations(&g) else {
        return false;
    };
    h.arc_topological_order().is_some() && opposing_pair(h, &g, &comps).is_none()
}

/// Decides completability and returns either a completion or a refutation.
pub fn complete(h: &PartiallyOrientedGraph) -> CompletionCertificate {
    let g = h.underlying();
    let Some(mut comps) = component_enumerations(&g) else {
        let w = wegner_witness(&g).expect("graph without a straight enumeration has a witness");
        return CompletionCertificate::NotProperInterval(w);
    };
    if h.arc_topological_order().is_none() {
        let c = shortest_directed_cycle(h).expect("cyclic arcs contain a directed cycle");
        return CompletionCertificate::DirectedCycle(c);
    }
    if let Some((positive, negative)) = opposing_pair(h, &g, &comps) {
        let order = StraightEnumeration::new(&g, comps.concat()).expect("component enumerations are straight");
        return CompletionCertificate::OpposingUnbalancedArcs {
            positive,
            negative,
            order,
        };
    }

    for comp in &mut comps {
        let mut pos = alloc::vec![0; h.order()];
        for (i, &v) in comp.iter().enumerate() {
            pos[v] = i;
        }
        let backwards = comp.iter().any(|&u| {
            h.out_neighbors(u)
                .any(|v| pos[v] < pos[u] && !g.same_closed_neighborhood(u, v))
        });
        if backwards {
            comp.reverse();
        }
        // Twins sit in contiguous runs; order each run along its arcs.
        let mut start = 0;
        while start < comp.len() {
            let mut end = start + 1;
            while end < comp.len() && g.same_closed_neighborhood(comp[start], comp[end]) {
                end += 1;
            }
            if end - start > 1 {
                let run = h.induced(&comp[start..end]);
                let topo = run.arc_topological_order().expect("arcs are acyclic");
                let sorted: Vec<VertexId> = topo.iter().map(|&i| comp[start + i]).collect();
                comp[start..end].copy_from_slice(&sorted);
            }
            start = end;
        }
    }

    let order = comps.concat();
    let mut pos = alloc::vec![0; h.order()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut d = PartiallyOrientedGraph::empty(h.order());
    for (u, v) in g.edges() {
        if pos[u] < pos[v] {
            d.set(u, v, Rel::Out);
        } else {
            d.set(v, u, Rel::Out);
        }
    }
    debug_assert!(verify_completion(h, &d));
    CompletionCertificate::Completed(d)
}

/// `d` is an acyclic local tournament with the same underlying graph as `h`
/// and containing every arc of `h`.
pub fn verify_completion(h: &PartiallyOrientedGraph, d: &PartiallyOrientedGraph) -> bool {
    d.order() == h.order()
        && d.edge_count() == 0
        && d.underlying() == h.underlying()
        && h.arcs().into_iter().all(|(u, v)| d.has_arc(u, v))
        && d.is_acyclic_local_tournament()
}
