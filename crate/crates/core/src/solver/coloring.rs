use super::{Meter, SearchBudget, SquareGraph};
use crate::graph::{verify_coloring, Coloring, TorusDims};

/// Outcome of [`find_k_coloring`].
#[derive(Clone, Debug)]
pub enum KColoring {
    /// A verified coloring with at most `k` colors.
    Found(Coloring),
    /// The search space was exhausted: no `k`-coloring exists.
    Exhausted,
    /// The budget ran out first.
    BudgetOut,
}

struct Search<'a> {
    g: &'a SquareGraph,
    k: usize,
    color: Vec<u8>,
    /// `counts[v * (k + 1) + c]`: colored neighbors of `v` with color `c`.
    counts: Vec<u16>,
    /// Bit `c` set when some neighbor of `v` has color `c`.
    sat: Vec<u64>,
    uncolored_deg: Vec<u32>,
    max_used: usize,
    colored: usize,
    meter: Meter,
}

impl Search<'_> {
    fn pick(&self) -> usize {
        (0..self.g.order())
            .filter(|&v| self.color[v] == 0)
            .max_by_key(|&v| {
                (
                    self.sat[v].count_ones(),
                    self.uncolored_deg[v],
                    std::cmp::Reverse(v),
                )
            })
            .expect("an uncolored vertex remains")
    }

    /// Colors `v` with `c`; returns `false` if some uncolored neighbor is
    /// left with no available color.
    fn assign(&mut self, v: usize, c: usize) -> bool {
        self.color[v] = c as u8;
        self.colored += 1;
        let mut alive = true;
        for &w in self.g.neighbors(v) {
            self.uncolored_deg[w] -= 1;
            let slot = &mut self.counts[w * (self.k + 1) + c];
            *slot += 1;
            if *slot == 1 {
                self.sat[w] |= 1 << c;
                if self.color[w] == 0 && self.sat[w].count_ones() as usize == self.k {
                    alive = false;
                }
            }
        }
        alive
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = 0;
        self.colored -= 1;
        for &w in self.g.neighbors(v) {
            self.uncolored_deg[w] += 1;
            let slot = &mut self.counts[w * (self.k + 1) + c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[w] &= !(1 << c);
            }
        }
    }

    fn solve(&mut self) -> bool {
        if self.colored == self.g.order() {
            return true;
        }
        if self.meter.tick() {
            return false;
        }
        let v = self.pick();
        let limit = self.k.min(self.max_used + 1);
        for c in 1..=limit {
            if self.sat[v] & (1 << c) != 0 {
                continue;
            }
            let prev_max = self.max_used;
            self.max_used = self.max_used.max(c);
            if self.assign(v, c) && self.solve() {
                return true;
            }
            self.unassign(v, c);
            self.max_used = prev_max;
            if self.meter.exhausted() {
                return false;
            }
        }
        false
    }
}

/// Searches for a proper coloring of the square of `T_{m,n}` with at most
/// `k` colors.
///
/// Backtracking in saturation order (most distinct neighbor colors first,
/// ties by uncolored degree, then row-major index) with forward checking.
/// A color above the largest used so far is only tried as the next unused
/// one, which removes color-permutation symmetry.
pub fn find_k_coloring(dims: TorusDims, k: u32, budget: SearchBudget) -> KColoring {
    // Degree is at most 12, so 13 colors always suffice.
    let k = (k as usize).min(13);
    if k == 0 {
        return KColoring::Exhausted;
    }
    let g = SquareGraph::new(dims);
    let order = g.order();
    let mut s = Search {
        g: &g,
        k,
        color: vec![0; order],
        counts: vec![0; order * (k + 1)],
        sat: vec![0; order],
        uncolored_deg: (0..order).map(|v| g.neighbors(v).len() as u32).collect(),
        max_used: 0,
        colored: 0,
        meter: Meter::new(budget),
    };
    if s.solve() {
        let grid = s.color.iter().map(|&c| u32::from(c)).collect();
        let coloring = Coloring::new(dims, grid).expect("search colors are contiguous from 1");
        assert!(
            verify_coloring(&coloring).is_valid(),
            "solver produced an improper coloring on {dims}"
        );
        KColoring::Found(coloring)
    } else if s.meter.exhausted() {
        KColoring::BudgetOut
    } else {
        KColoring::Exhausted
    }
}
