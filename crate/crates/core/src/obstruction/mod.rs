//! Minimal uncompletable mixed graphs: the definitional test, greedy
//! extraction, and classification against the catalog.

mod catalog;

pub use catalog::{
    catalog_build, catalog_entries, describe, CatalogEntry, Family, CYCLE_MIN, F2_VIII_MIN, F3_VIII_MIN, F3_VI_MIN,
    F3_V_MIN,
};

use alloc::vec::Vec;

use crate::completion::can_complete;
use crate::error::Error;
use crate::graph::{PartiallyOrientedGraph, VertexId};
use crate::iso::mixed_isomorphic;

/// `h` is uncompletable while every single-vertex deletion and every
/// single-arc relaxation is completable, as judged by `completable`.
pub fn is_obstruction_with<F>(h: &PartiallyOrientedGraph, mut completable: F) -> bool
where
    F: FnMut(&PartiallyOrientedGraph) -> bool,
{
    if completable(h) {
        return false;
    }
    for v in 0..h.order() {
        if !completable(&h.delete_vertex(v).expect("in range")) {
            return false;
        }
    }
    h.arcs()
        .into_iter()
        .all(|(t, hd)| completable(&h.relax_arc(t, hd).expect("arc present")))
}

/// [`is_obstruction_with`] using the polynomial decision procedure.
pub fn is_obstruction(h: &PartiallyOrientedGraph) -> bool {
    is_obstruction_with(h, can_complete)
}

/// An obstruction found inside a larger graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extraction {
    pub graph: PartiallyOrientedGraph,
    /// Original labels of the kept vertices, increasing; vertex `i` of
    /// `graph` is `vertices[i]` of the input.
    pub vertices: Vec<VertexId>,
}

impl Extraction {
    /// Arcs of the input that were relaxed to edges, in original labels.
    pub fn relaxed_arcs(&self, h: &PartiallyOrientedGraph) -> Vec<(VertexId, VertexId)> {
        let map = &self.vertices;
        let mut out = Vec::new();
        for (i, &a) in map.iter().enumerate() {
            for (j, &b) in map.iter().enumerate() {
                if h.has_arc(a, b) && !self.graph.has_arc(i, j) {
                    out.push((a, b));
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// Shrinks an uncompletable graph to an obstruction it critically contains.
///
/// Vertices are tried for deletion in increasing label, then arcs for
/// relaxation in lexicographic order; each step is kept if the result is
/// still uncompletable. A single pass of each suffices because a vertex or
/// arc that cannot be dropped stays undroppable as the graph shrinks.
pub fn extract_obstruction(h: &PartiallyOrientedGraph) -> Result<Extraction, Error> {
    if can_complete(h) {
        return Err(Error::Completable);
    }
    let mut g = h.clone();
    let mut vertices: Vec<VertexId> = (0..h.order()).collect();
    let mut i = 0;
    while i < g.order() {
        let smaller = g.delete_vertex(i).expect("in range");
        if can_complete(&smaller) {
            i += 1;
        } else {
            g = smaller;
            vertices.remove(i);
        }
    }
    for (t, hd) in g.arcs() {
        let relaxed = g.relax_arc(t, hd).expect("arc present");
        if !can_complete(&relaxed) {
            g = relaxed;
        }
    }
    debug_assert!(is_obstruction(&g));
    Ok(Extraction { graph: g, vertices })
}

/// Names the catalog entry isomorphic to `h`, preferring the undualized
/// member. `None` if `h` matches nothing in the catalog.
pub fn classify_obstruction(h: &PartiallyOrientedGraph) -> Option<CatalogEntry> {
    let n = h.order();
    let (edges, arcs) = (h.edge_count(), h.arc_count());
    for family in Family::all_up_to(n).into_iter().filter(|f| f.order() == n) {
        let base = catalog_build(CatalogEntry::new(family, false)).expect("admissible size");
        if base.edge_count() != edges || base.arc_count() != arcs {
            continue;
        }
        if mixed_isomorphic(h, &base).is_some() {
            return Some(CatalogEntry::new(family, false));
        }
        if mixed_isomorphic(h, &base.dual()).is_some() {
            return Some(CatalogEntry::new(family, true));
        }
    }
    None
}

/// An extracted obstruction together with its catalog name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub extraction: Extraction,
    pub entry: Option<CatalogEntry>,
}

/// Extracts and classifies in one go.
pub fn obstruction_report(h: &PartiallyOrientedGraph) -> Result<ObstructionReport, Error> {
    let extraction = extract_obstruction(h)?;
    let entry = classify_obstruction(&extraction.graph);
    Ok(ObstructionReport { extraction, entry })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use alloc::vec;

    fn pog(n: usize, e: &[(usize, usize)], a: &[(usize, usize)]) -> PartiallyOrientedGraph {
        PartiallyOrientedGraph::new(n, e, a).unwrap()
    }

    #[test]
    fn single_arc_is_not_an_obstruction() {
        assert!(!is_obstruction(&pog(2, &[], &[(0, 1)])));
    }

    #[test]
    fn inward_path_is_an_obstruction() {
        let h = pog(3, &[], &[(0, 1), (2, 1)]);
        assert!(is_obstruction(&h));
        assert_eq!(
            classify_obstruction(&h),
            Some(CatalogEntry::new(Family::F3Vi(3), false))
        );
    }

    #[test]
    fn outward_path_is_the_dual() {
        let h = pog(3, &[], &[(1, 0), (1, 2)]);
        assert_eq!(classify_obstruction(&h), Some(CatalogEntry::new(Family::F3Vi(3), true)));
    }

    #[test]
    fn c4_classifies_as_cycle() {
        let h = PartiallyOrientedGraph::from(Graph::cycle(4));
        assert_eq!(
            classify_obstruction(&h),
            Some(CatalogEntry::new(Family::Cycle(4), false))
        );
    }

    #[test]
    fn non_obstructions_are_unclassified() {
        assert_eq!(classify_obstruction(&pog(3, &[(1, 2)], &[(0, 1)])), None);
    }

    #[test]
    fn extraction_drops_a_pendant() {
        let h = pog(4, &[(2, 3)], &[(0, 1), (2, 1)]);
        let x = extract_obstruction(&h).unwrap();
        assert_eq!(x.vertices, vec![0, 1, 2]);
        assert_eq!(x.graph, pog(3, &[], &[(0, 1), (2, 1)]));
        assert!(x.relaxed_arcs(&h).is_empty());
    }

    #[test]
    fn extraction_relaxes_a_redundant_arc() {
        // C4 with one arc: relaxing gives C4, still uncompletable
        let h = pog(4, &[(1, 2), (2, 3), (0, 3)], &[(0, 1)]);
        let x = extract_obstruction(&h).unwrap();
        assert_eq!(x.graph, PartiallyOrientedGraph::from(Graph::cycle(4)));
        assert_eq!(x.relaxed_arcs(&h), vec![(0, 1)]);
    }

    #[test]
    fn extraction_rejects_completable() {
        assert_eq!(extract_obstruction(&pog(2, &[], &[(0, 1)])), Err(Error::Completable));
    }

    #[test]
    fn catalog_members_are_obstructions() {
        for f in Family::all_up_to(8) {
            for dual in [false, true] {
                let h = catalog_build(CatalogEntry::new(f, dual)).unwrap();
                assert!(is_obstruction(&h), "{f} dual={dual}");
            }
        }
    }

    #[test]
    fn catalog_members_classify_to_themselves() {
        for f in Family::all_up_to(8) {
            let h = catalog_build(CatalogEntry::new(f, false)).unwrap();
            assert_eq!(classify_obstruction(&h).map(|e| e.family), Some(f));
        }
    }
}
