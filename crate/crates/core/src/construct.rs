//! Pattern-based constructions: given `(m, n)`, pick the best applicable
//! recipe, assemble it from catalogue patterns, and verify the result.
//!
//! Every recipe is tried in both orientations. Candidates are ordered by the
//! number of colors the recipe promises, then by how much surgery it needs
//! (plain tiling, combination of full patterns, subpatterns, cell edits),
//! then by recipe order, then non-transposed first. Only the winner is
//! built; a failed verification is an error, never a silent fallback.

use std::fmt;

use serde::Serialize;

use crate::catalogue::pattern;
use crate::error::{Error, Result};
use crate::graph::{verify_coloring, Coloring, TorusDims};
use crate::pattern::{hstack, repeat_h, repeat_v, set_cell, take_cols, take_rows, tile, transpose, vstack, Pattern};
use crate::semigroup::decompose;

/// The construction families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Recipe {
    /// Tile the 5x5 pattern `I`.
    TileI,
    /// Tile the 11x11 six-coloring.
    Tile11,
    /// Tile the 4x3 pattern `F`.
    TileF,
    /// Stack a 3-row strip built from `C`, `D`, `E` or a sporadic 3-row pattern.
    ThreeRow,
    /// Stack a 5-row strip built from `I`, `J` or a sporadic 5-row pattern.
    FiveRow,
    /// Stack a 6-row strip built from `L` and `M`.
    SixRow,
    /// Stack a 4-row strip built from `F`, `G`, `H1` or `H2`.
    FourRow,
    /// Blocks of `A` and its subpatterns, with the corner fix when needed.
    AFamily,
    /// Blocks of `K` and its subpatterns.
    KFamily,
}

const RECIPES: [Recipe; 9] = [
    Recipe::TileI,
    Recipe::Tile11,
    Recipe::TileF,
    Recipe::ThreeRow,
    Recipe::FiveRow,
    Recipe::SixRow,
    Recipe::FourRow,
    Recipe::AFamily,
    Recipe::KFamily,
];

/// Amount of surgery a recipe needs; lower is preferred.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rank {
    Tiling,
    Combination,
    Subpattern,
    CellEdit,
}

/// An applicable recipe and what it promises, before anything is built.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub recipe: Recipe,
    pub transposed: bool,
    pub promised_k: u32,
    pub rank: Rank,
}

/// A verified coloring produced by [`construct`].
#[derive(Clone, Debug)]
pub struct ConstructionResult {
    pub coloring: Coloring,
    pub k: u32,
    /// Short tag such as `three-row`, `A-family+corner-fix` or
    /// `transpose-of-sporadic-3x5`.
    pub method: String,
    pub recipe: Recipe,
    pub transposed: bool,
    /// Block layout of the assembled pattern, e.g. `[[A/A_4]|2x[A/A_4]'_3]`.
    pub layout: String,
}

impl fmt::Display for ConstructionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} colors via {}", self.coloring.dims(), self.k, self.method)
    }
}

/// Cells of the 17x17 `K` assembly `[[K/K/K_3] | [K/K/K_3]'_4]` that must be
/// recolored, as `(row, col, from, to)`. The plain assembly has conflicts
/// along both seams of the 4-column block.
pub const K_SEAM_PATCH: [(usize, usize, u32, u32); 14] = [
    (3, 1, 2, 7),
    (4, 0, 3, 2),
    (4, 16, 6, 7),
    (5, 14, 1, 7),
    (5, 15, 2, 1),
    (6, 16, 1, 2),
    (7, 16, 4, 7),
    (11, 0, 3, 7),
    (12, 0, 6, 5),
    (13, 1, 5, 7),
    (14, 0, 1, 2),
    (14, 1, 2, 5),
    (14, 16, 4, 7),
    (15, 2, 5, 7),
];

/// Promised colors and rank of `recipe` on an `m x n` grid, if it applies.
fn plan(recipe: Recipe, m: usize, n: usize) -> Option<(u32, Rank)> {
    use Rank::*;
    match recipe {
        Recipe::TileI => (m.is_multiple_of(5) && n.is_multiple_of(5)).then_some((5, Tiling)),
        Recipe::Tile11 => (m.is_multiple_of(11) && n.is_multiple_of(11)).then_some((6, Tiling)),
        Recipe::TileF => (m.is_multiple_of(4) && n.is_multiple_of(3)).then_some((6, Tiling)),
        Recipe::ThreeRow => {
            if !m.is_multiple_of(3) {
                return None;
            }
            Some(match n {
                3 => (9, Tiling),
                5 => (8, Tiling),
                9 => (7, Tiling),
                _ if n.is_multiple_of(2) => (6, Combination),
                _ => (7, Combination),
            })
        }
        Recipe::FiveRow => {
            if !m.is_multiple_of(5) || n < 6 || n.is_multiple_of(5) {
                return None;
            }
            Some(match n {
                7 => (7, Tiling),
                8 | 9 | 13 | 14 | 19 => (6, Tiling),
                _ => (6, Combination),
            })
        }
        Recipe::SixRow => (m.is_multiple_of(6) && n >= 6).then_some((6, Combination)),
        Recipe::FourRow => {
            if !m.is_multiple_of(4) {
                return None;
            }
            match n {
                4 => Some((8, Tiling)),
                7 => Some((7, Tiling)),
                _ => decompose(3, 5, n).map(|d| if d.b == 0 { (6, Tiling) } else { (7, Combination) }),
            }
        }
        Recipe::AFamily => {
            let rows = decompose(7, 4, m)?;
            let cols = decompose(7, 3, n)?;
            let rank = match (rows.b > 0, cols.b > 0) {
                (true, true) => CellEdit,
                (false, false) => Tiling,
                _ => Subpattern,
            };
            Some((7, rank))
        }
        Recipe::KFamily => {
            let rows = decompose(7, 3, m)?;
            let cols = decompose(13, 4, n)?;
            if (m, n) == (17, 17) {
                Some((7, CellEdit))
            } else if cols.b > 0 {
                None
            } else if rows.b > 0 {
                Some((7, Subpattern))
            } else {
                Some((7, Tiling))
            }
        }
    }
}

/// Every applicable recipe for `m x n` in both orientations, best first.
pub fn candidates(m: usize, n: usize) -> Vec<Candidate> {
    let mut out = Vec::new();
    for (order, &recipe) in RECIPES.iter().enumerate() {
        for transposed in [false, true] {
            let (rm, rn) = if transposed { (n, m) } else { (m, n) };
            if let Some((promised_k, rank)) = plan(recipe, rm, rn) {
                out.push((order, Candidate { recipe, transposed, promised_k, rank }));
            }
        }
    }
    out.sort_by_key(|(order, c)| (c.promised_k, c.rank, *order, c.transposed));
    out.into_iter().map(|(_, c)| c).collect()
}

/// A horizontal strip `[first?, X x a, Y x b]`, skipping empty runs.
fn strip(first: Option<&Pattern>, x: &Pattern, a: usize, y: &Pattern, b: usize) -> Result<Pattern> {
    let mut parts: Vec<Pattern> = first.into_iter().cloned().collect();
    parts.extend(std::iter::repeat_n(x.clone(), a));
    parts.extend(std::iter::repeat_n(y.clone(), b));
    hstack(&parts)
}

fn three_row_strip(n: usize) -> Result<(Pattern, &'static str)> {
    let (c, d, e) = (pattern("C"), pattern("D"), pattern("E"));
    Ok(match n {
        3 => (pattern("3x3").clone(), "sporadic-3x3"),
        5 => (pattern("3x5").clone(), "sporadic-3x5"),
        9 => (pattern("3x9").clone(), "sporadic-3x9"),
        _ if n.is_multiple_of(2) => {
            let s = decompose(6, 4, n).ok_or(Error::NoRecipe { m: 3, n })?;
            (strip(None, d, s.a, c, s.b)?, "three-row")
        }
        _ => {
            let s = decompose(6, 4, n - 7).ok_or(Error::NoRecipe { m: 3, n })?;
            (strip(Some(e), d, s.a, c, s.b)?, "three-row")
        }
    })
}

fn five_row_strip(n: usize) -> Result<(Pattern, &'static str)> {
    Ok(match n {
        7 => (pattern("5x7").clone(), "sporadic-5x7"),
        8 => (pattern("5x8").clone(), "sporadic-5x8"),
        9 => (pattern("5x9").clone(), "sporadic-5x9"),
        13 => (pattern("5x13").clone(), "sporadic-5x13"),
        14 => (pattern("5x14").clone(), "sporadic-5x14"),
        19 => (pattern("5x19").clone(), "sporadic-5x19"),
        16 => (repeat_h(pattern("5x8"), 2)?, "double-5x8"),
        _ => {
            let s = decompose(5, 6, n).ok_or(Error::NoRecipe { m: 5, n })?;
            (strip(None, pattern("I"), s.a, pattern("J"), s.b)?, "five-row")
        }
    })
}

fn four_row_strip(n: usize) -> Result<(Pattern, &'static str)> {
    Ok(match n {
        4 => (pattern("H1").clone(), "sporadic-H1"),
        7 => (pattern("H2").clone(), "sporadic-H2"),
        _ => {
            let s = decompose(3, 5, n).ok_or(Error::NoRecipe { m: 4, n })?;
            (strip(None, pattern("F"), s.a, pattern("G"), s.b)?, "four-row")
        }
    })
}

fn six_row_strip(n: usize) -> Result<Pattern> {
    let s = decompose(4, 3, n).ok_or(Error::NoRecipe { m: 6, n })?;
    strip(None, pattern("L"), s.a, pattern("M"), s.b)
}

/// Block decomposition of an `A`-family assembly: `m = 7a + 4b`,
/// `n = 7c + 3d`.
pub fn a_family_blocks(m: usize, n: usize) -> Option<(usize, usize, usize, usize)> {
    let rows = decompose(7, 4, m)?;
    let cols = decompose(7, 3, n)?;
    Some((rows.a, rows.b, cols.a, cols.b))
}

/// `[Y x c | Y'_3 x d]` with `Y = [A x a / A_4 x b]`, no cell edits.
pub fn assemble_a_family(m: usize, n: usize) -> Result<Pattern> {
    let (a, b, c, d) = a_family_blocks(m, n).ok_or(Error::NoRecipe { m, n })?;
    let big = pattern("A");
    let mut blocks = vec![big.clone(); a];
    blocks.extend(std::iter::repeat_n(take_rows(big, 4)?, b));
    let y = vstack(&blocks)?;
    let mut parts = vec![y.clone(); c];
    parts.extend(std::iter::repeat_n(take_cols(&y, 3)?, d));
    hstack(&parts)
}

/// Cells the corner fix recolors from 4 to 3 in an `A`-family assembly with
/// `b, d > 0`: the top-right cell of every `Y'_3` copy in the top row and
/// in the first row of every `A_4` block after the first.
pub fn corner_fix_cells(a: usize, b: usize, c: usize, d: usize) -> Vec<(usize, usize)> {
    if b == 0 || d == 0 {
        return Vec::new();
    }
    let rows = std::iter::once(0).chain((1..b).map(|t| 7 * a + 4 * t));
    let rows: Vec<usize> = rows.collect();
    rows.iter()
        .flat_map(|&r| (0..d).map(move |t| (r, 7 * c + 3 * t + 2)))
        .collect()
}

/// Applies the corner fix, checking each edited cell holds color 4.
pub fn apply_corner_fix(p: &Pattern, cells: &[(usize, usize)]) -> Result<Pattern> {
    let mut out = p.clone();
    for &(r, c) in cells {
        if out.get(r, c) != 4 {
            return Err(Error::Usage(format!(
                "corner fix expects color 4 at ({r}, {c}), found {}",
                out.get(r, c)
            )));
        }
        out = set_cell(&out, r, c, 3)?;
    }
    Ok(out)
}

/// Block decomposition of a `K`-family assembly: `m = 7a + 3b`,
/// `n = 13c + 4d`.
pub fn k_family_blocks(m: usize, n: usize) -> Option<(usize, usize, usize, usize)> {
    let rows = decompose(7, 3, m)?;
    let cols = decompose(13, 4, n)?;
    Some((rows.a, rows.b, cols.a, cols.b))
}

/// `[X x c | X'_4 x d]` with `X = [K x a / K_3 x b]`, no cell edits.
pub fn assemble_k_family(m: usize, n: usize) -> Result<Pattern> {
    let (a, b, c, d) = k_family_blocks(m, n).ok_or(Error::NoRecipe { m, n })?;
    let big = pattern("K");
    let mut blocks = vec![big.clone(); a];
    blocks.extend(std::iter::repeat_n(take_rows(big, 3)?, b));
    let x = vstack(&blocks)?;
    let mut parts = vec![x.clone(); c];
    parts.extend(std::iter::repeat_n(take_cols(&x, 4)?, d));
    hstack(&parts)
}

/// Applies [`K_SEAM_PATCH`] to the 17x17 assembly.
pub fn apply_k_seam_patch(p: &Pattern) -> Result<Pattern> {
    if (p.rows(), p.cols()) != (17, 17) {
        return Err(Error::Usage("the seam patch only applies to 17x17".into()));
    }
    let mut out = p.clone();
    for &(r, c, from, to) in &K_SEAM_PATCH {
        if out.get(r, c) != from {
            return Err(Error::Usage(format!(
                "seam patch expects color {from} at ({r}, {c}), found {}",
                out.get(r, c)
            )));
        }
        out = set_cell(&out, r, c, to)?;
    }
    Ok(out)
}

fn is_valid(p: &Pattern) -> Result<bool> {
    Ok(p.verify()?.is_valid())
}

/// Builds `recipe` on `m x n` (non-transposed). Returns the pattern and tag.
fn build(recipe: Recipe, m: usize, n: usize) -> Result<(Pattern, String)> {
    let (p, tag) = match recipe {
        Recipe::TileI => (tile(pattern("I"), m, n)?, "tile-I"),
        Recipe::Tile11 => (tile(pattern("11x11"), m, n)?, "tile-11x11"),
        Recipe::TileF => (tile(pattern("F"), m, n)?, "tile-F"),
        Recipe::ThreeRow => {
            let (s, tag) = three_row_strip(n)?;
            (repeat_v(&s, m / 3)?, tag)
        }
        Recipe::FiveRow => {
            let (s, tag) = five_row_strip(n)?;
            (repeat_v(&s, m / 5)?, tag)
        }
        Recipe::SixRow => (repeat_v(&six_row_strip(n)?, m / 6)?, "six-row"),
        Recipe::FourRow => {
            let (s, tag) = four_row_strip(n)?;
            (repeat_v(&s, m / 4)?, tag)
        }
        Recipe::AFamily => {
            let plain = assemble_a_family(m, n)?;
            let (a, b, c, d) = a_family_blocks(m, n).ok_or(Error::NoRecipe { m, n })?;
            if b > 0 && d > 0 && !is_valid(&plain)? {
                let fixed = apply_corner_fix(&plain, &corner_fix_cells(a, b, c, d))?;
                (fixed, "A-family+corner-fix")
            } else {
                (plain, "A-family")
            }
        }
        Recipe::KFamily => {
            let plain = assemble_k_family(m, n)?;
            if (m, n) == (17, 17) {
                (apply_k_seam_patch(&plain)?, "K-family+seam-patch")
            } else {
                (plain, "K-family")
            }
        }
    };
    Ok((p, tag.to_string()))
}

/// Constructs a verified coloring of the square of `T_{m,n}` using the
/// fewest colors any recipe promises.
pub fn construct(m: usize, n: usize) -> Result<ConstructionResult> {
    let dims = TorusDims::new(m, n)?;
    let best = *candidates(m, n).first().ok_or(Error::NoRecipe { m, n })?;
    let (p, tag) = if best.transposed {
        let (p, tag) = build(best.recipe, n, m)?;
        (transpose(&p), format!("transpose-of-{tag}"))
    } else {
        build(best.recipe, m, n)?
    };
    let coloring = Coloring::new(dims, p.cells().to_vec())?;
    let report = verify_coloring(&coloring);
    if !report.is_valid() {
        return Err(Error::RecipeFailed {
            method: tag,
            m,
            n,
            violations: report.violations.len(),
        });
    }
    Ok(ConstructionResult {
        k: coloring.k(),
        coloring,
        method: tag,
        recipe: best.recipe,
        transposed: best.transposed,
        layout: p.name().to_string(),
    })
}

/// One row of the summary table of exactly known values.
#[derive(Clone, Copy, Debug)]
pub struct Table1Row {
    pub label: &'static str,
    pub value: u32,
    /// Established by computer search rather than by a construction plus a
    /// counting bound.
    pub starred: bool,
    applies: fn(usize, usize) -> bool,
}

impl Table1Row {
    /// Whether `(m, n)` satisfies this row as written (no transposition).
    pub fn matches(&self, m: usize, n: usize) -> bool {
        m >= 3 && n >= 3 && (self.applies)(m, n)
    }
}

const fn row(label: &'static str, value: u32, starred: bool, applies: fn(usize, usize) -> bool) -> Table1Row {
    Table1Row { label, value, starred, applies }
}

pub const TABLE1: [Table1Row; 16] = [
    row("m,n = 0 (mod 5)", 5, false, |m, n| m % 5 == 0 && n % 5 == 0),
    row("m=3, n = 0 (mod 2)", 6, false, |m, n| m == 3 && n % 2 == 0),
    row("m=4, n = 0 (mod 3)", 6, false, |m, n| m == 4 && n % 3 == 0),
    row("m=6, n >= 6", 6, false, |m, n| m == 6 && n >= 6),
    row("m=8, n=11,13 (*)", 6, true, |m, n| m == 8 && (n == 11 || n == 13)),
    row("m = 0 (mod 3), m != 0 (mod 5), n = 0 (mod 2), n != 0 (mod 5)", 6, false, |m, n| {
        m % 3 == 0 && m % 5 != 0 && n % 2 == 0 && n % 5 != 0
    }),
    row("m = 0 (mod 5), n != 0 (mod 5), n >= 6, n != 7", 6, false, |m, n| {
        m % 5 == 0 && n % 5 != 0 && n >= 6 && n != 7
    }),
    row("m = 0 (mod 6), n >= 6, n != 0 (mod 5)", 6, false, |m, n| m % 6 == 0 && n >= 6 && n % 5 != 0),
    row("m,n = 0 (mod 11), m,n != 0 (mod 5)", 6, false, |m, n| {
        m % 11 == 0 && n % 11 == 0 && m % 5 != 0 && n % 5 != 0
    }),
    row("m=3, n != 0 (mod 2), n != 3,5", 7, false, |m, n| m == 3 && n % 2 == 1 && n != 3 && n != 5),
    row("m=4, n != 0 (mod 3), n != 4", 7, false, |m, n| m == 4 && n % 3 != 0 && n != 4),
    row("m=5, n=7", 7, false, |m, n| (m, n) == (5, 7)),
    row("m=7, n=7,8 (*)", 7, true, |m, n| m == 7 && (n == 7 || n == 8)),
    row("m=3, n=5", 8, false, |m, n| (m, n) == (3, 5)),
    row("m=4, n=4", 8, false, |m, n| (m, n) == (4, 4)),
    row("m=3, n=3", 9, false, |m, n| (m, n) == (3, 3)),
];

/// The first summary-table row matching `(m, n)`, else `(n, m)`.
pub fn table1_row(m: usize, n: usize) -> Option<&'static Table1Row> {
    TABLE1
        .iter()
        .find(|r| r.matches(m, n))
        .or_else(|| TABLE1.iter().find(|r| r.matches(n, m)))
}

/// The exact chromatic number recorded in the summary table, if any row
/// covers `(m, n)` or its transpose.
pub fn table1_value(m: usize, n: usize) -> Option<u32> {
    table1_row(m, n).map(|r| r.value)
}
