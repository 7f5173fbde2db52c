use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::graph::TorusDims;

/// The square of a torus as bit-packed neighbor sets, vertices in row-major
/// order.
#[derive(Clone, Debug)]
pub struct SquareGraph {
    dims: TorusDims,
    adj: Vec<FixedBitSet>,
    lists: Vec<Vec<usize>>,
}

impl SquareGraph {
    /// Builds the square by a depth-2 breadth-first search from every vertex
    /// of the explicit torus.
    pub fn new(dims: TorusDims) -> Self {
        let (m, n) = (dims.m(), dims.n());
        let order = dims.order();
        let torus: Vec<[usize; 4]> = (0..order)
            .map(|v| {
                let (r, c) = (v / n, v % n);
                [
                    ((r + 1) % m) * n + c,
                    ((r + m - 1) % m) * n + c,
                    r * n + (c + 1) % n,
                    r * n + (c + n - 1) % n,
                ]
            })
            .collect();
        let mut adj = vec![FixedBitSet::with_capacity(order); order];
        let mut depth = vec![usize::MAX; order];
        for s in 0..order {
            depth.fill(usize::MAX);
            depth[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if depth[u] == 2 {
                    continue;
                }
                for &w in &torus[u] {
                    if depth[w] == usize::MAX {
                        depth[w] = depth[u] + 1;
                        adj[s].insert(w);
                        queue.push_back(w);
                    }
                }
            }
        }
        let lists = adj.iter().map(|a| a.ones().collect()).collect();
        Self { dims, adj, lists }
    }

    pub fn dims(&self) -> TorusDims {
        self.dims
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbor_set(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.lists[v]
    }
}
