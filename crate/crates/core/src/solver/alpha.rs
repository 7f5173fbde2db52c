use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::{Meter, SearchBudget, SquareGraph};
use crate::graph::{is_independent, Coord, TorusDims};

/// Outcome of a maximum independent set search on the square of a torus.
#[derive(Clone, Debug, Serialize)]
pub struct AlphaResult {
    pub dims: TorusDims,
    /// Size of the best independent set found.
    pub alpha: usize,
    /// Proven upper bound on the independence number.
    pub upper_bound: usize,
    pub witness: Vec<Coord>,
    /// The search ran to completion, so `alpha == upper_bound`.
    pub certified: bool,
    pub nodes: u64,
}

/// `floor(mn / 5)`: members of an independent set of the square have
/// pairwise disjoint closed neighborhoods of 5 vertices in the torus.
pub fn packing_bound(dims: TorusDims) -> usize {
    dims.order() / 5
}

/// Size of a greedy clique cover of `p`, an upper bound on its independence
/// number.
fn clique_cover(g: &SquareGraph, p: &FixedBitSet) -> usize {
    let mut rest = p.clone();
    let mut cliques = 0;
    while let Some(u) = rest.ones().next() {
        rest.set(u, false);
        let mut cand = rest.clone();
        cand.intersect_with(g.neighbor_set(u));
        while let Some(w) = cand.ones().next() {
            rest.set(w, false);
            cand.set(w, false);
            cand.intersect_with(g.neighbor_set(w));
        }
        cliques += 1;
    }
    cliques
}

struct Search<'a> {
    g: &'a SquareGraph,
    meter: Meter,
    target: usize,
    cur: Vec<usize>,
    best: Vec<usize>,
}

impl Search<'_> {
    fn record(&mut self) {
        if self.cur.len() > self.best.len() {
            self.best.clone_from(&self.cur);
        }
    }

    fn done(&self) -> bool {
        self.best.len() >= self.target || self.meter.exhausted()
    }

    fn expand(&mut self, p: FixedBitSet) {
        if self.meter.tick() {
            return;
        }
        self.record();
        if self.done() || p.is_clear() || self.cur.len() + clique_cover(self.g, &p) <= self.best.len() {
            return;
        }
        let (v, deg) = p
            .ones()
            .map(|v| (v, p.intersection_count(self.g.neighbor_set(v))))
            .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)))
            .expect("non-empty");
        if deg == 0 {
            let depth = self.cur.len();
            self.cur.extend(p.ones());
            self.record();
            self.cur.truncate(depth);
            return;
        }
        let mut with = p.clone();
        with.difference_with(self.g.neighbor_set(v));
        with.set(v, false);
        self.cur.push(v);
        self.expand(with);
        self.cur.pop();
        if self.done() {
            return;
        }
        let mut without = p;
        without.set(v, false);
        self.expand(without);
    }
}

/// Maximum independent set of the square of `T_{m,n}` by branch and bound.
///
/// Branches on the vertex of highest degree among the candidates (include
/// first), pruning with a greedy clique cover. The torus is
/// vertex-transitive, so vertex `(0, 0)` is placed in the set up front.
pub fn max_independent_set(dims: TorusDims, budget: SearchBudget) -> AlphaResult {
    let g = SquareGraph::new(dims);
    let order = g.order();
    let mut all = FixedBitSet::with_capacity(order);
    all.insert_range(..);
    let target = packing_bound(dims).min(clique_cover(&g, &all)).max(1);
    let mut s = Search {
        g: &g,
        meter: Meter::new(budget),
        target,
        cur: vec![0],
        best: vec![0],
    };
    let mut rest = all;
    rest.difference_with(g.neighbor_set(0));
    rest.set(0, false);
    s.expand(rest);

    let certified = !s.meter.exhausted() || s.best.len() >= target;
    s.best.sort_unstable();
    let witness: Vec<Coord> = s.best.iter().map(|&v| dims.coord_of(v)).collect();
    assert!(is_independent(dims, &witness), "solver produced a dependent set on {dims}");
    AlphaResult {
        dims,
        alpha: witness.len(),
        upper_bound: if certified { witness.len() } else { target },
        witness,
        certified,
        nodes: s.meter.nodes,
    }
}
