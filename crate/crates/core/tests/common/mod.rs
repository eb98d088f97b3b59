//! Generators and independent reference checks shared by the integration
//! tests. Nothing here calls the structural algorithms under test.

#![allow(dead_code)]

use pogcomp_core::graph::{Graph, PartiallyOrientedGraph, Rel};
use pogcomp_core::iso::mixed_isomorphic;
use rand::seq::SliceRandom;
use rand::Rng;

pub type Pog = PartiallyOrientedGraph;

/// Each pair independently none, edge, or an arc either way, with equal
/// probability.
pub fn uniform_pog<R: Rng>(rng: &mut R, n: usize) -> Pog {
    let mut edges = Vec::new();
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            match rng.gen_range(0..4) {
                0 => {}
                1 => edges.push((u, v)),
                2 => arcs.push((u, v)),
                _ => arcs.push((v, u)),
            }
        }
    }
    Pog::new(n, &edges, &arcs).unwrap()
}

/// Integer points on a line, adjacent when at most `reach` apart. Points
/// are returned sorted, so `0..n` is a straight enumeration.
pub fn unit_interval_graph<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let span = rng.gen_range(1..=2 * n.max(1));
    let reach = rng.gen_range(1..=3);
    let mut xs: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=span)).collect();
    xs.sort_unstable();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if xs[v] - xs[u] <= reach {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// A proper interval graph with each edge left undirected or oriented at
/// random.
pub fn pig_pog<R: Rng>(rng: &mut R, n: usize) -> Pog {
    let g = unit_interval_graph(rng, n);
    let p_arc = rng.gen_range(0.05..0.5);
    let mut edges = Vec::new();
    let mut arcs = Vec::new();
    for (u, v) in g.edges() {
        if rng.gen_bool(p_arc) {
            arcs.push(if rng.gen_bool(0.5) { (u, v) } else { (v, u) });
        } else {
            edges.push((u, v));
        }
    }
    relabel(rng, &Pog::new(n, &edges, &arcs).unwrap())
}

/// An acyclic local tournament built from a unit interval model, with some
/// arcs relaxed. Completable by construction.
pub fn completable_pog<R: Rng>(rng: &mut R, n: usize) -> Pog {
    let g = unit_interval_graph(rng, n);
    // flipping a whole component keeps the orientation an acyclic local
    // tournament
    let comps = g.components();
    let flip: Vec<bool> = comps.iter().map(|_| rng.gen_bool(0.5)).collect();
    let mut comp_of = vec![0; n];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    let keep_arc = rng.gen_range(0.0..=1.0);
    let mut edges = Vec::new();
    let mut arcs = Vec::new();
    for (u, v) in g.edges() {
        if rng.gen_bool(keep_arc) {
            arcs.push(if flip[comp_of[u]] { (v, u) } else { (u, v) });
        } else {
            edges.push((u, v));
        }
    }
    relabel(rng, &Pog::new(n, &edges, &arcs).unwrap())
}

pub fn relabel<R: Rng>(rng: &mut R, h: &Pog) -> Pog {
    let mut perm: Vec<usize> = (0..h.order()).collect();
    perm.shuffle(rng);
    h.induced(&perm)
}

/// `x` arises from `h` by keeping `kept` (in this order) and turning some
/// arcs into edges.
pub fn critically_embeds(x: &Pog, h: &Pog, kept: &[usize]) -> bool {
    if kept.len() != x.order() {
        return false;
    }
    let mut seen = vec![false; h.order()];
    for &v in kept {
        if v >= h.order() || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    for i in 0..x.order() {
        for j in 0..x.order() {
            if i == j {
                continue;
            }
            let (rx, rh) = (x.rel(i, j), h.rel(kept[i], kept[j]));
            let ok = rx == rh || (rx == Rel::Edge && matches!(rh, Rel::Out | Rel::In));
            if !ok {
                return false;
            }
        }
    }
    true
}

/// All subsets of `0..n` with exactly `k` elements, increasing.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

fn claw() -> Graph {
    Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
}

fn net() -> Graph {
    Graph::new(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap()
}

fn tent() -> Graph {
    Graph::new(
        6,
        &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (1, 4), (2, 4), (0, 5), (2, 5)],
    )
    .unwrap()
}

/// Some vertex subset induces a claw, net, tent, or chordless cycle of
/// length at least four, found by trying every subset.
pub fn has_induced_wegner_graph(g: &Graph) -> bool {
    let n = g.order();
    let fixed: Vec<Pog> = [claw(), net(), tent()].iter().map(Pog::from).collect();
    for k in 4..=n {
        for s in subsets(n, k) {
            let sub = g.induced(&s);
            let two_regular = (0..k).all(|v| sub.degree(v) == 2);
            if two_regular && sub.components().len() == 1 {
                return true;
            }
            let p = Pog::from(sub);
            if fixed
                .iter()
                .any(|f| f.order() == k && mixed_isomorphic(&p, f).is_some())
            {
                return true;
            }
        }
    }
    false
}

/// `u < v < w` in `order` and `uw` an edge force `uv` and `vw`.
pub fn is_straight(g: &Graph, order: &[usize]) -> bool {
    let n = order.len();
    for a in 0..n {
        for c in a + 1..n {
            if !g.has_edge(order[a], order[c]) {
                continue;
            }
            for b in a + 1..c {
                if !g.has_edge(order[a], order[b]) || !g.has_edge(order[b], order[c]) {
                    return false;
                }
            }
        }
    }
    true
}

/// All permutations of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k - 1 {
            heap(k - 1, cur, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            cur.swap(j, k - 1);
        }
        heap(k - 1, cur, out);
    }
    heap(n, &mut cur, &mut out);
    out
}

/// The implication relation on ordered pairs, computed directly from the
/// forcing definition by transitive closure. Pair `2e` is `edges[e]` as
/// listed, `2e + 1` its reverse.
pub struct ReferenceImplication {
    pub pairs: Vec<(usize, usize)>,
    pub related: Vec<Vec<bool>>,
}

impl ReferenceImplication {
    pub fn new(g: &Graph) -> Self {
        let pairs: Vec<(usize, usize)> = g.edges().into_iter().flat_map(|(u, v)| [(u, v), (v, u)]).collect();
        let m = pairs.len();
        let forces = |(u, v): (usize, usize), (x, y): (usize, usize)| {
            (u == x && v == y) || (u == y && v != x && !g.has_edge(v, x)) || (v == x && u != y && !g.has_edge(u, y))
        };
        let mut related: Vec<Vec<bool>> = (0..m)
            .map(|i| (0..m).map(|j| forces(pairs[i], pairs[j])).collect())
            .collect();
        for k in 0..m {
            let via = related[k].clone();
            for row in related.iter_mut() {
                if row[k] {
                    for (cell, &reach) in row.iter_mut().zip(&via) {
                        *cell |= reach;
                    }
                }
            }
        }
        ReferenceImplication { pairs, related }
    }

    /// Edge classes: edges grouped when some orientation of one implies
    /// some orientation of the other. Each class lists edges `(u, v)`,
    /// `u < v`, sorted.
    pub fn classes(&self) -> Vec<Vec<(usize, usize)>> {
        let m = self.pairs.len() / 2;
        let mut class_of = vec![usize::MAX; m];
        let mut out: Vec<Vec<(usize, usize)>> = Vec::new();
        for e in 0..m {
            if class_of[e] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = Vec::new();
            for (f, slot) in class_of.iter_mut().enumerate() {
                if self.related[2 * e][2 * f] || self.related[2 * e][2 * f + 1] {
                    *slot = id;
                    members.push(self.pairs[2 * f]);
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }
}

/// Every orientation of `g` that is a local tournament.
pub fn local_tournament_orientations(g: &Graph) -> Vec<Pog> {
    let edges = g.edges();
    let mut out = Vec::new();
    for mask in 0u64..(1 << edges.len()) {
        let arcs: Vec<_> = edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if mask >> i & 1 == 1 { (v, u) } else { (u, v) })
            .collect();
        let d = Pog::new(g.order(), &[], &arcs).unwrap();
        if d.is_local_tournament_arcs() {
            out.push(d);
        }
    }
    out
}
