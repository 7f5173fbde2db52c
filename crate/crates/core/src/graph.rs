//! The toroidal grid `C_m x C_n`, its square, and coloring verification.
//!
//! Vertices are addressed by `(row, col)` with `row` in `0..m` and `col` in
//! `0..n`. Two distinct vertices are adjacent in the square when their torus
//! distance (sum of the cyclic distances per coordinate) is at most 2.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Cycle lengths of a toroidal grid: `m` rows, `n` columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TorusDims {
    m: usize,
    n: usize,
}

impl TorusDims {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m < 3 || n < 3 {
            return Err(Error::InvalidDims { m, n });
        }
        Ok(Self { m, n })
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of vertices, `m * n`.
    #[inline]
    pub fn order(&self) -> usize {
        self.m * self.n
    }

    pub fn transposed(&self) -> Self {
        Self {
            m: self.n,
            n: self.m,
        }
    }

    pub fn coord(&self, row: usize, col: usize) -> Result<Coord> {
        let c = Coord { row, col };
        self.check(c)?;
        Ok(c)
    }

    pub fn check(&self, c: Coord) -> Result<()> {
        if c.row >= self.m || c.col >= self.n {
            return Err(Error::CoordOutOfRange {
                row: c.row,
                col: c.col,
                m: self.m,
                n: self.n,
            });
        }
        Ok(())
    }

    /// Row-major vertex index.
    #[inline]
    pub fn index(&self, c: Coord) -> usize {
        c.row * self.n + c.col
    }

    #[inline]
    pub fn coord_of(&self, index: usize) -> Coord {
        Coord {
            row: index / self.n,
            col: index % self.n,
        }
    }

    /// All vertices in row-major order.
    pub fn coords(&self) -> impl Iterator<Item = Coord> + '_ {
        (0..self.order()).map(move |i| self.coord_of(i))
    }
}

impl fmt::Display for TorusDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.m, self.n)
    }
}

/// A vertex of the torus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Coord {
    pub row: usize,
    pub col: usize,
}

impl Coord {
    pub const fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

#[inline]
fn cyclic(a: usize, b: usize, len: usize) -> usize {
    let d = a.abs_diff(b);
    d.min(len - d)
}

/// Graph distance between `u` and `v` in `C_m x C_n`.
pub fn torus_distance(dims: TorusDims, u: Coord, v: Coord) -> Result<usize> {
    dims.check(u)?;
    dims.check(v)?;
    Ok(cyclic(u.row, v.row, dims.m) + cyclic(u.col, v.col, dims.n))
}

/// Offsets `(dr, dc)` with `1 <= |dr| + |dc| <= 2`.
const SQUARE_OFFSETS: [(isize, isize); 12] = [
    (-2, 0),
    (-1, -1),
    (-1, 0),
    (-1, 1),
    (0, -2),
    (0, -1),
    (0, 1),
    (0, 2),
    (1, -1),
    (1, 0),
    (1, 1),
    (2, 0),
];

#[inline]
fn wrap(x: usize, d: isize, len: usize) -> usize {
    (x as isize + d).rem_euclid(len as isize) as usize
}

/// Neighbors of `v` in the square of the torus, in row-major order.
///
/// On 3- and 4-cycles some offsets land on the same vertex (or on `v`
/// itself); the set semantics absorb that, so the result may hold fewer
/// than 12 vertices.
pub fn square_neighbors(dims: TorusDims, v: Coord) -> Result<Vec<Coord>> {
    dims.check(v)?;
    Ok(square_neighbor_set(dims, v).into_iter().collect())
}

fn square_neighbor_set(dims: TorusDims, v: Coord) -> BTreeSet<Coord> {
    SQUARE_OFFSETS
        .iter()
        .map(|&(dr, dc)| Coord {
            row: wrap(v.row, dr, dims.m),
            col: wrap(v.col, dc, dims.n),
        })
        .filter(|&u| u != v)
        .collect()
}

/// A color assignment to every vertex of a torus.
///
/// Colors are positive and the palette is exactly `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    dims: TorusDims,
    grid: Vec<u32>,
    k: u32,
}

impl Coloring {
    /// Builds a coloring from a row-major grid.
    pub fn new(dims: TorusDims, grid: Vec<u32>) -> Result<Self> {
        if grid.len() != dims.order() {
            return Err(Error::DimensionMismatch {
                m: dims.m,
                n: dims.n,
                expected: dims.order(),
                got: grid.len(),
            });
        }
        if let Some(i) = grid.iter().position(|&c| c == 0) {
            let c = dims.coord_of(i);
            return Err(Error::ZeroColor {
                row: c.row,
                col: c.col,
            });
        }
        let k = distinct(&grid);
        if let Some(&color) = grid.iter().find(|&&c| c > k) {
            return Err(Error::PaletteGap { k, color });
        }
        Ok(Self { dims, grid, k })
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        let dims = TorusDims::new(m, n)?;
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                m,
                n,
                expected: n,
                got: bad.len(),
            });
        }
        Self::new(dims, rows.concat())
    }

    pub fn dims(&self) -> TorusDims {
        self.dims
    }

    /// Number of distinct colors.
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn grid(&self) -> &[u32] {
        &self.grid
    }

    pub fn get(&self, c: Coord) -> u32 {
        self.grid[self.dims.index(c)]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.grid.chunks(self.dims.n)
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.rows().map(<[u32]>::to_vec).collect()
    }

    /// Same coloring on the transposed torus.
    pub fn transposed(&self) -> Self {
        let t = self.dims.transposed();
        let mut grid = vec![0; self.grid.len()];
        for c in self.dims.coords() {
            grid[t.index(Coord::new(c.col, c.row))] = self.get(c);
        }
        Self {
            dims: t,
            grid,
            k: self.k,
        }
    }
}

fn distinct(grid: &[u32]) -> u32 {
    grid.iter().collect::<BTreeSet<_>>().len() as u32
}

/// Number of distinct colors in the coloring.
pub fn color_count(coloring: &Coloring) -> u32 {
    distinct(&coloring.grid)
}

/// Two vertices within distance 2 sharing a color.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub u: Coord,
    pub v: Coord,
    pub color: u32,
    pub distance: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} and {} share color {} at distance {}",
            self.u, self.v, self.color, self.distance
        )
    }
}

/// Outcome of [`verify_coloring`]: empty means the coloring is proper.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Verification {
    pub violations: Vec<Violation>,
}

impl Verification {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that `coloring` is a proper coloring of the square of its torus.
///
/// Every violating unordered pair is reported once, with `u` before `v` in
/// row-major order.
pub fn verify_coloring(coloring: &Coloring) -> Verification {
    let dims = coloring.dims;
    let mut violations = Vec::new();
    let mut near = [0usize; 12];
    for v in dims.coords() {
        let vi = dims.index(v);
        let cv = coloring.grid[vi];
        for (slot, &(dr, dc)) in near.iter_mut().zip(&SQUARE_OFFSETS) {
            *slot = wrap(v.row, dr, dims.m) * dims.n + wrap(v.col, dc, dims.n);
        }
        near.sort_unstable();
        let mut prev = usize::MAX;
        for &ui in &near {
            if ui == prev || ui <= vi {
                continue;
            }
            prev = ui;
            if coloring.grid[ui] == cv {
                let u = dims.coord_of(ui);
                violations.push(Violation {
                    u: v,
                    v: u,
                    color: cv,
                    distance: cyclic(u.row, v.row, dims.m) + cyclic(u.col, v.col, dims.n),
                });
            }
        }
    }
    Verification { violations }
}

/// Whether `set` is independent in the square (pairwise distance at least 3).
pub fn is_independent(dims: TorusDims, set: &[Coord]) -> bool {
    set.iter().enumerate().all(|(i, &a)| {
        set[i + 1..].iter().all(|&b| {
            a != b && cyclic(a.row, b.row, dims.m) + cyclic(a.col, b.col, dims.n) > 2
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(m: usize, n: usize) -> TorusDims {
        TorusDims::new(m, n).unwrap()
    }

    #[test]
    fn rejects_short_cycles() {
        assert!(matches!(TorusDims::new(2, 5), Err(Error::InvalidDims { .. })));
        assert!(TorusDims::new(3, 3).is_ok());
    }

    #[test]
    fn distance_examples() {
        let c = Coord::new;
        assert_eq!(torus_distance(d(7, 7), c(0, 0), c(0, 0)).unwrap(), 0);
        assert_eq!(torus_distance(d(3, 3), c(0, 0), c(2, 2)).unwrap(), 2);
        // BFS on the explicit product graph gives 6 (see tests/graph_oracle.rs).
        assert_eq!(torus_distance(d(5, 8), c(0, 0), c(2, 4)).unwrap(), 6);
    }

    #[test]
    fn distance_rejects_out_of_range() {
        let err = torus_distance(d(4, 4), Coord::new(4, 0), Coord::new(0, 0));
        assert!(matches!(err, Err(Error::CoordOutOfRange { .. })));
    }

    #[test]
    fn neighbor_counts() {
        assert_eq!(square_neighbors(d(7, 7), Coord::new(0, 0)).unwrap().len(), 12);
        assert_eq!(square_neighbors(d(3, 3), Coord::new(0, 0)).unwrap().len(), 8);
        assert_eq!(square_neighbors(d(4, 5), Coord::new(1, 1)).unwrap().len(), 11);
    }

    #[test]
    fn all_ones_on_k9_has_36_violations() {
        let c = Coloring::new(d(3, 3), vec![1; 9]).unwrap();
        assert_eq!(c.k(), 1);
        assert_eq!(color_count(&c), 1);
        let report = verify_coloring(&c);
        assert_eq!(report.violations.len(), 36);
        assert!(report.violations.iter().all(|v| v.distance <= 2 && v.color == 1));
    }

    #[test]
    fn coloring_validation() {
        assert!(matches!(
            Coloring::new(d(3, 3), vec![1; 8]),
            Err(Error::DimensionMismatch { .. })
        ));
        let mut g = vec![1; 9];
        g[4] = 0;
        assert!(matches!(Coloring::new(d(3, 3), g), Err(Error::ZeroColor { row: 1, col: 1 })));
        let mut g = vec![1; 9];
        g[0] = 3;
        assert!(matches!(Coloring::new(d(3, 3), g), Err(Error::PaletteGap { k: 2, color: 3 })));
    }

    #[test]
    fn transpose_roundtrip() {
        let c = Coloring::new(d(3, 4), (0..12).map(|i| i + 1).collect()).unwrap();
        let t = c.transposed();
        assert_eq!(t.dims(), d(4, 3));
        assert_eq!(t.get(Coord::new(3, 0)), c.get(Coord::new(0, 3)));
        assert_eq!(t.transposed(), c);
    }

    #[test]
    fn independence_check() {
        let dims = d(5, 5);
        assert!(is_independent(dims, &[Coord::new(0, 0), Coord::new(1, 2)]));
        assert!(!is_independent(dims, &[Coord::new(0, 0), Coord::new(4, 4)]));
    }
}
