//! The obstruction families as data.
//!
//! Fixed families are stored as 0-based edge and arc lists. Parametric
//! families are generated.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::graph::{Graph, PartiallyOrientedGraph, VertexId};
use crate::interval::WegnerKind;

pub const CYCLE_MIN: usize = 4;
pub const F2_VIII_MIN: usize = 3;
/// Smallest order at which the stretched pattern is an obstruction; fixed
/// by running the definitional test on the first candidate sizes.
pub const F3_V_MIN: usize = 5;
pub const F3_VI_MIN: usize = 3;
/// See [`F3_V_MIN`].
pub const F3_VIII_MIN: usize = 7;

/// An obstruction family. Parametric families carry their vertex count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Cycle(usize),
    Tent,
    Claw,
    Net,
    F2I,
    F2Ii,
    F2Iii,
    F2Iv,
    F2V,
    F2Vi,
    F2Vii,
    /// A complete graph whose arcs form one directed Hamiltonian cycle.
    F2Viii(usize),
    F3I,
    F3Ii,
    F3Iii,
    F3Iv,
    F3V(usize),
    /// A chordless path with both end arcs pointing inwards.
    F3Vi(usize),
    F3Vii,
    F3Viii(usize),
}

/// A family member, possibly with every arc reversed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CatalogEntry {
    pub family: Family,
    pub dualized: bool,
}

impl CatalogEntry {
    pub fn new(family: Family, dualized: bool) -> Self {
        CatalogEntry { family, dualized }
    }
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.family.fmt(f)?;
        if self.dualized {
            f.write_str(" (dual)")?;
        }
        Ok(())
    }
}

struct Table {
    n: usize,
    edges: &'static [(VertexId, VertexId)],
    arcs: &'static [(VertexId, VertexId)],
}

impl Table {
    fn build(&self) -> PartiallyOrientedGraph {
        PartiallyOrientedGraph::new(self.n, self.edges, self.arcs).expect("catalog tables are valid")
    }
}

// Completable to local tournaments.
const F2_I: Table = Table {
    n: 4,
    edges: &[(1, 2), (0, 2), (1, 3)],
    arcs: &[(0, 1), (3, 2)],
};
const F2_II: Table = Table {
    n: 4,
    edges: &[(1, 2), (2, 3), (1, 3)],
    arcs: &[(0, 1), (2, 0)],
};
const F2_III: Table = Table {
    n: 5,
    edges: &[(2, 3), (3, 4), (0, 2), (1, 3), (2, 4)],
    arcs: &[(0, 1), (2, 1)],
};
const F2_IV: Table = Table {
    n: 5,
    edges: &[(3, 4), (1, 2), (2, 3), (1, 3), (0, 2)],
    arcs: &[(4, 2), (0, 1)],
};
const F2_V: Table = Table {
    n: 5,
    edges: &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 4), (0, 3)],
    arcs: &[(0, 2), (3, 1)],
};
const F2_VI: Table = Table {
    n: 6,
    edges: &[(4, 5), (1, 2), (3, 4), (0, 2), (1, 3), (2, 4), (3, 5), (1, 4), (0, 3)],
    arcs: &[(3, 2), (0, 1)],
};
const F2_VII: Table = Table {
    n: 6,
    edges: &[
        (0, 1),
        (2, 3),
        (4, 5),
        (0, 2),
        (1, 3),
        (2, 4),
        (3, 5),
        (0, 3),
        (1, 4),
        (2, 5),
    ],
    arcs: &[(1, 2), (4, 3)],
};

// Not completable to local tournaments.
const F3_I: Table = Table {
    n: 4,
    edges: &[(2, 3), (0, 1)],
    arcs: &[(3, 1), (1, 2)],
};
const F3_II: Table = Table {
    n: 5,
    edges: &[(0, 1), (3, 4), (1, 3)],
    arcs: &[(1, 2), (3, 2)],
};
const F3_III: Table = Table {
    n: 5,
    edges: &[(0, 1), (3, 4), (0, 2), (1, 3), (2, 4)],
    arcs: &[(1, 2), (3, 2)],
};
const F3_IV: Table = Table {
    n: 6,
    edges: &[(0, 1), (4, 5), (2, 3), (1, 3), (2, 4), (1, 4)],
    arcs: &[(1, 2), (4, 3)],
};
const F3_VII: Table = Table {
    n: 6,
    edges: &[(1, 2), (2, 3), (3, 4), (0, 2), (1, 3), (2, 4), (3, 5)],
    arcs: &[(0, 1), (5, 4)],
};

const NAMES: &[&str] = &[
    "Cycle", "Tent", "Claw", "Net", "F2_i", "F2_ii", "F2_iii", "F2_iv", "F2_v", "F2_vi", "F2_vii", "F2_viii", "F3_i",
    "F3_ii", "F3_iii", "F3_iv", "F3_v", "F3_vi", "F3_vii", "F3_viii",
];

impl Family {
    pub fn name(self) -> &'static str {
        use Family::*;
        let i = match self {
            Cycle(_) => 0,
            Tent => 1,
            Claw => 2,
            Net => 3,
            F2I => 4,
            F2Ii => 5,
            F2Iii => 6,
            F2Iv => 7,
            F2V => 8,
            F2Vi => 9,
            F2Vii => 10,
            F2Viii(_) => 11,
            F3I => 12,
            F3Ii => 13,
            F3Iii => 14,
            F3Iv => 15,
            F3V(_) => 16,
            F3Vi(_) => 17,
            F3Vii => 18,
            F3Viii(_) => 19,
        };
        NAMES[i]
    }

    /// All family names accepted by [`Family::parse`].
    pub fn names() -> &'static [&'static str] {
        NAMES
    }

    /// Looks a family up by name (case-insensitive). Parametric families
    /// need `size`; fixed ones accept it only when it matches.
    pub fn parse(name: &str, size: Option<usize>) -> Result<Family, Error> {
        use Family::*;
        let idx = NAMES
            .iter()
            .position(|n| n.eq_ignore_ascii_case(name))
            .ok_or_else(|| Error::UnknownFamily(name.to_string()))?;
        let name = NAMES[idx];
        let fixed = [
            Tent, Claw, Net, F2I, F2Ii, F2Iii, F2Iv, F2V, F2Vi, F2Vii, F3I, F3Ii, F3Iii, F3Iv, F3Vii,
        ];
        if let Some(&f) = fixed.iter().find(|f| f.name() == name) {
            return match size {
                Some(k) if k != f.order() => Err(Error::FixedFamily { family: name }),
                _ => Ok(f),
            };
        }
        let k = size.ok_or(Error::MissingSize { family: name })?;
        let family = match idx {
            0 => Cycle(k),
            11 => F2Viii(k),
            16 => F3V(k),
            17 => F3Vi(k),
            _ => F3Viii(k),
        };
        family.check()?;
        Ok(family)
    }

    /// The smallest admissible vertex count of a parametric family.
    pub fn minimum(self) -> Option<usize> {
        match self {
            Family::Cycle(_) => Some(CYCLE_MIN),
            Family::F2Viii(_) => Some(F2_VIII_MIN),
            Family::F3V(_) => Some(F3_V_MIN),
            Family::F3Vi(_) => Some(F3_VI_MIN),
            Family::F3Viii(_) => Some(F3_VIII_MIN),
            _ => None,
        }
    }

    pub fn is_parametric(self) -> bool {
        self.minimum().is_some()
    }

    fn check(self) -> Result<(), Error> {
        if let Some(min) = self.minimum() {
            let k = self.order();
            if k < min {
                return Err(Error::ParameterTooSmall {
                    family: self.name(),
                    minimum: min,
                    got: k,
                });
            }
        }
        Ok(())
    }

    /// Number of vertices.
    pub fn order(self) -> usize {
        use Family::*;
        match self {
            Cycle(k) | F2Viii(k) | F3V(k) | F3Vi(k) | F3Viii(k) => k,
            Claw | F2I | F2Ii | F3I => 4,
            F2Iii | F2Iv | F2V | F3Ii | F3Iii => 5,
            Tent | Net | F2Vi | F2Vii | F3Iv | F3Vii => 6,
        }
    }

    /// The same family at a different size; fixed families only at their
    /// own size.
    pub fn with_order(self, k: usize) -> Option<Family> {
        use Family::*;
        let f = match self {
            Cycle(_) => Cycle(k),
            F2Viii(_) => F2Viii(k),
            F3V(_) => F3V(k),
            F3Vi(_) => F3Vi(k),
            F3Viii(_) => F3Viii(k),
            fixed if fixed.order() == k => fixed,
            _ => return None,
        };
        f.check().ok().map(|_| f)
    }

    /// Whether members complete to (not necessarily acyclic) local
    /// tournaments. `None` for the arcless families.
    pub fn completes_to_local_tournament(self) -> Option<bool> {
        use Family::*;
        match self {
            Cycle(_) | Tent | Claw | Net => None,
            F2I | F2Ii | F2Iii | F2Iv | F2V | F2Vi | F2Vii | F2Viii(_) => Some(true),
            _ => Some(false),
        }
    }

    /// One representative of every family at every size in `0..=max_n`.
    pub fn all_up_to(max_n: usize) -> Vec<Family> {
        use Family::*;
        let mut out: Vec<Family> = [
            Tent, Claw, Net, F2I, F2Ii, F2Iii, F2Iv, F2V, F2Vi, F2Vii, F3I, F3Ii, F3Iii, F3Iv, F3Vii,
        ]
        .into_iter()
        .filter(|f| f.order() <= max_n)
        .collect();
        for make in [Cycle as fn(usize) -> Family, F2Viii, F3V, F3Vi, F3Viii] {
            let min = make(0).minimum().expect("parametric");
            out.extend((min..=max_n).map(make));
        }
        out.sort();
        out
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        if self.is_parametric() {
            write!(f, "({})", self.order())?;
        }
        Ok(())
    }
}

/// Builds the mixed graph of `entry`.
pub fn catalog_build(entry: CatalogEntry) -> Result<PartiallyOrientedGraph, Error> {
    entry.family.check()?;
    let h = build_family(entry.family);
    Ok(if entry.dualized { h.dual() } else { h })
}

fn from_lists(n: usize, edges: &[(VertexId, VertexId)], arcs: &[(VertexId, VertexId)]) -> PartiallyOrientedGraph {
    PartiallyOrientedGraph::new(n, edges, arcs).expect("generated lists are valid")
}

fn build_family(family: Family) -> PartiallyOrientedGraph {
    use Family::*;
    match family {
        Cycle(k) => Graph::cycle(k).into(),
        Tent => WegnerKind::Tent.model().into(),
        Claw => WegnerKind::Claw.model().into(),
        Net => WegnerKind::Net.model().into(),
        F2I => F2_I.build(),
        F2Ii => F2_II.build(),
        F2Iii => F2_III.build(),
        F2Iv => F2_IV.build(),
        F2V => F2_V.build(),
        F2Vi => F2_VI.build(),
        F2Vii => F2_VII.build(),
        F3I => F3_I.build(),
        F3Ii => F3_II.build(),
        F3Iii => F3_III.build(),
        F3Iv => F3_IV.build(),
        F3Vii => F3_VII.build(),
        F2Viii(k) => {
            let arcs: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
            let edges: Vec<_> = (0..k)
                .flat_map(|u| (u + 2..k).map(move |v| (u, v)))
                .filter(|&(u, v)| !(u == 0 && v == k - 1))
                .collect();
            from_lists(k, &edges, &arcs)
        }
        F3Vi(k) => {
            let edges: Vec<_> = (1..k - 2).map(|i| (i, i + 1)).collect();
            from_lists(k, &edges, &[(0, 1), (k - 1, k - 2)])
        }
        F3V(k) => {
            // 0 - 1, triangle 1 2 p0 with arc (1, 2), path p0 .. pm, arc (t, pm)
            let m = k - F3_V_MIN;
            let p = |i: usize| 3 + i;
            let t = k - 1;
            let mut edges = alloc::vec![(0, 1), (1, p(0)), (2, p(0))];
            edges.extend((0..m).map(|i| (p(i), p(i + 1))));
            from_lists(k, &edges, &[(1, 2), (t, p(m))])
        }
        F3Viii(k) => {
            // 0 - 1, triangle 1 2 q0 with arc (1, 2), path q0 .. qm,
            // triangle qm d c with arc (c, d), c - j
            let m = k - F3_VIII_MIN;
            let q = |i: usize| 3 + i;
            let (d, c, j) = (k - 3, k - 2, k - 1);
            let mut edges = alloc::vec![(0, 1), (1, q(0)), (2, q(0)), (q(m), d), (q(m), c), (c, j)];
            edges.extend((0..m).map(|i| (q(i), q(i + 1))));
            from_lists(k, &edges, &[(1, 2), (c, d)])
        }
    }
}

/// Every catalog entry with at most `max_n` vertices, both orientations.
pub fn catalog_entries(max_n: usize) -> Vec<CatalogEntry> {
    Family::all_up_to(max_n)
        .into_iter()
        .flat_map(|f| [CatalogEntry::new(f, false), CatalogEntry::new(f, true)])
        .collect()
}

/// Human-readable listing, one family per line.
pub fn describe(entry: CatalogEntry) -> Result<String, Error> {
    use core::fmt::Write;
    let h = catalog_build(entry)?;
    let mut s = String::new();
    let _ = write!(s, "{entry}: n={} edges={:?} arcs={:?}", h.order(), h.edges(), h.arcs());
    Ok(s)
}
