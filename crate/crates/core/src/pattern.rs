//! Color matrices and the tiling algebra used to assemble larger colorings.
//!
//! A [`Pattern`] is any `p x q` matrix of positive colors. Read as a coloring
//! of `T_{p,q}` it may or may not be proper; the operations here are purely
//! structural and every assembled result must be re-verified by the caller.

use std::fmt;

use crate::error::{Error, Result};
use crate::format::grid_text;
use crate::graph::{verify_coloring, Coloring, TorusDims, Verification};

#[derive(Clone, Debug)]
pub struct Pattern {
    name: String,
    rows: usize,
    cols: usize,
    cells: Vec<u32>,
}

/// Equality compares shape and cells; the name is only a label.
impl PartialEq for Pattern {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.cells == other.cells
    }
}

impl Eq for Pattern {}

impl Pattern {
    pub fn new(name: impl Into<String>, rows: usize, cols: usize, cells: Vec<u32>) -> Result<Self> {
        let name = name.into();
        if rows == 0 || cols == 0 {
            return Err(Error::Usage(format!("pattern `{name}` must be non-empty")));
        }
        if cells.len() != rows * cols {
            return Err(Error::Usage(format!(
                "pattern `{name}`: {} cells for a {rows}x{cols} shape",
                cells.len()
            )));
        }
        if cells.contains(&0) {
            return Err(Error::Usage(format!("pattern `{name}`: colors must be positive")));
        }
        Ok(Self {
            name,
            rows,
            cols,
            cells,
        })
    }

    pub fn from_rows(name: impl Into<String>, rows: &[Vec<u32>]) -> Result<Self> {
        let name = name.into();
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Usage(format!("pattern `{name}`: ragged rows")));
        }
        Self::new(name, rows.len(), cols, rows.concat())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn cells(&self) -> &[u32] {
        &self.cells
    }

    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.cells[row * self.cols + col]
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Interprets the matrix as a coloring of `T_{rows,cols}`.
    pub fn to_coloring(&self) -> Result<Coloring> {
        Coloring::new(TorusDims::new(self.rows, self.cols)?, self.cells.clone())
    }

    /// Verifies the pattern as a coloring of its own-size torus.
    pub fn verify(&self) -> Result<Verification> {
        Ok(verify_coloring(&self.to_coloring()?))
    }

    pub fn to_text(&self) -> String {
        grid_text(self.rows, self.cols, &self.cells)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// The first `i` rows of `p` (`X_i`).
pub fn take_rows(p: &Pattern, i: usize) -> Result<Pattern> {
    if i == 0 || i > p.rows {
        return Err(Error::Usage(format!(
            "take_rows({}, {i}): need 1 <= i <= {}",
            p.name, p.rows
        )));
    }
    if i == p.rows {
        return Ok(p.clone());
    }
    Pattern::new(
        format!("{}_{i}", p.name),
        i,
        p.cols,
        p.cells[..i * p.cols].to_vec(),
    )
}

/// The first `j` columns of `p` (`X'_j`).
pub fn take_cols(p: &Pattern, j: usize) -> Result<Pattern> {
    if j == 0 || j > p.cols {
        return Err(Error::Usage(format!(
            "take_cols({}, {j}): need 1 <= j <= {}",
            p.name, p.cols
        )));
    }
    if j == p.cols {
        return Ok(p.clone());
    }
    let cells = p.cells.chunks(p.cols).flat_map(|r| &r[..j]).copied().collect();
    Pattern::new(format!("{}'_{j}", p.name), p.rows, j, cells)
}

/// Concatenates parts top to bottom.
pub fn vstack(parts: &[Pattern]) -> Result<Pattern> {
    let first = parts
        .first()
        .ok_or_else(|| Error::Usage("vstack of no patterns".into()))?;
    if parts.len() == 1 {
        return Ok(first.clone());
    }
    if let Some(bad) = parts.iter().find(|p| p.cols != first.cols) {
        return Err(Error::Usage(format!(
            "vstack: `{}` has {} columns, `{}` has {}",
            bad.name, bad.cols, first.name, first.cols
        )));
    }
    let rows = parts.iter().map(|p| p.rows).sum();
    let cells = parts.iter().flat_map(|p| p.cells.iter().copied()).collect();
    Pattern::new(join_names(parts, "/"), rows, first.cols, cells)
}

/// Concatenates parts left to right.
pub fn hstack(parts: &[Pattern]) -> Result<Pattern> {
    let first = parts
        .first()
        .ok_or_else(|| Error::Usage("hstack of no patterns".into()))?;
    if parts.len() == 1 {
        return Ok(first.clone());
    }
    if let Some(bad) = parts.iter().find(|p| p.rows != first.rows) {
        return Err(Error::Usage(format!(
            "hstack: `{}` has {} rows, `{}` has {}",
            bad.name, bad.rows, first.name, first.rows
        )));
    }
    let cols = parts.iter().map(|p| p.cols).sum();
    let mut cells = Vec::with_capacity(first.rows * cols);
    for r in 0..first.rows {
        for p in parts {
            cells.extend_from_slice(&p.cells[r * p.cols..(r + 1) * p.cols]);
        }
    }
    Pattern::new(join_names(parts, "|"), first.rows, cols, cells)
}

fn join_names(parts: &[Pattern], sep: &str) -> String {
    // Collapse runs of identical names so long assemblies stay readable.
    let mut out = String::new();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j].name == parts[i].name {
            j += 1;
        }
        if !out.is_empty() {
            out.push_str(sep);
        }
        if j - i > 1 {
            out.push_str(&format!("{}x{}", j - i, parts[i].name));
        } else {
            out.push_str(&parts[i].name);
        }
        i = j;
    }
    format!("[{out}]")
}

pub fn transpose(p: &Pattern) -> Pattern {
    let mut cells = vec![0; p.cells.len()];
    for r in 0..p.rows {
        for c in 0..p.cols {
            cells[c * p.rows + r] = p.cells[r * p.cols + c];
        }
    }
    Pattern {
        name: format!("{}^T", p.name),
        rows: p.cols,
        cols: p.rows,
        cells,
    }
}

/// A copy of `p` with one cell overwritten.
pub fn set_cell(p: &Pattern, row: usize, col: usize, color: u32) -> Result<Pattern> {
    if row >= p.rows || col >= p.cols {
        return Err(Error::Usage(format!(
            "set_cell({}, {row}, {col}): outside {}x{}",
            p.name, p.rows, p.cols
        )));
    }
    if color == 0 {
        return Err(Error::Usage("set_cell: colors must be positive".into()));
    }
    let mut q = p.clone();
    q.cells[row * p.cols + col] = color;
    Ok(q)
}

/// `count` copies of `p` side by side.
pub fn repeat_h(p: &Pattern, count: usize) -> Result<Pattern> {
    hstack(&vec![p.clone(); count])
}

/// `count` copies of `p` stacked vertically.
pub fn repeat_v(p: &Pattern, count: usize) -> Result<Pattern> {
    vstack(&vec![p.clone(); count])
}

/// Periodic tiling of `p` onto an `m x n` grid; `p` must divide both sides.
pub fn tile(p: &Pattern, m: usize, n: usize) -> Result<Pattern> {
    if !m.is_multiple_of(p.rows) || !n.is_multiple_of(p.cols) {
        return Err(Error::Usage(format!(
            "{}x{} pattern `{}` does not tile {m}x{n}",
            p.rows, p.cols, p.name
        )));
    }
    repeat_v(&repeat_h(p, n / p.cols)?, m / p.rows)
}
