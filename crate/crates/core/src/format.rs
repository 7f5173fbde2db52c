//! Coloring file formats.
//!
//! Text: a first line `m n`, then `m` lines of `n` space-separated positive
//! integers. JSON: `{"m": .., "n": .., "colors": k, "grid": [[..], ..]}`.
//! Both are row-major with 1-based colors.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Coloring, TorusDims};

/// Serializes to the text format, newline-terminated.
pub fn to_text(c: &Coloring) -> String {
    grid_text(c.dims().m(), c.dims().n(), c.grid())
}

pub(crate) fn grid_text(m: usize, n: usize, cells: &[u32]) -> String {
    let mut out = format!("{m} {n}\n");
    for row in cells.chunks(n) {
        let mut first = true;
        for x in row {
            if !first {
                out.push(' ');
            }
            first = false;
            let _ = write!(out, "{x}");
        }
        out.push('\n');
    }
    out
}

/// Parses a `p q` header plus `p` rows of `q` integers. Dimensions are not
/// required to be at least 3 here; that is the caller's concern.
pub(crate) fn parse_grid(text: &str) -> Result<(usize, usize, Vec<u32>)> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad header `{header}`"))))
        .collect::<Result<_>>()?;
    let [m, n] = dims[..] else {
        return Err(Error::Parse(format!("header must be `m n`, got `{header}`")));
    };
    if m == 0 || n == 0 {
        return Err(Error::Parse(format!("empty dimensions `{header}`")));
    }
    let mut cells = Vec::with_capacity(m * n);
    for r in 0..m {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("expected {m} rows, found {r}")))?;
        let row: Vec<u32> = line
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Parse(format!("row {r}: bad color `{t}`")))
            })
            .collect::<Result<_>>()?;
        if row.len() != n {
            return Err(Error::Parse(format!(
                "row {r}: expected {n} colors, found {}",
                row.len()
            )));
        }
        cells.extend(row);
    }
    if let Some(extra) = lines.next() {
        return Err(Error::Parse(format!("trailing data after {m} rows: `{extra}`")));
    }
    Ok((m, n, cells))
}

pub fn from_text(text: &str) -> Result<Coloring> {
    let (m, n, cells) = parse_grid(text)?;
    Coloring::new(TorusDims::new(m, n)?, cells)
}

#[derive(Serialize, Deserialize)]
struct ColoringJson {
    m: usize,
    n: usize,
    colors: u32,
    grid: Vec<Vec<u32>>,
}

pub fn to_json(c: &Coloring) -> String {
    let doc = ColoringJson {
        m: c.dims().m(),
        n: c.dims().n(),
        colors: c.k(),
        grid: c.to_rows(),
    };
    let mut s = serde_json::to_string(&doc).expect("plain struct serializes");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<Coloring> {
    let doc: ColoringJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if doc.grid.len() != doc.m || doc.grid.iter().any(|r| r.len() != doc.n) {
        return Err(Error::Parse(format!(
            "grid shape does not match m={} n={}",
            doc.m, doc.n
        )));
    }
    let c = Coloring::new(TorusDims::new(doc.m, doc.n)?, doc.grid.concat())?;
    if c.k() != doc.colors {
        return Err(Error::Parse(format!(
            "`colors` says {} but the grid uses {}",
            doc.colors,
            c.k()
        )));
    }
    Ok(c)
}

/// Parses either format, choosing JSON when the input starts with `{`.
pub fn parse_any(text: &str) -> Result<Coloring> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        from_text(text)
    }
}

pub fn read_coloring(path: &Path) -> Result<Coloring> {
    parse_any(&fs::read_to_string(path)?)
}

/// Writes `contents` next to `path` and renames it into place.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = "3 4\n1 4 2 5\n2 5 3 6\n3 6 1 4\n";

    #[test]
    fn text_roundtrip() {
        let c = from_text(SMALL).unwrap();
        assert_eq!(c.k(), 6);
        assert_eq!(to_text(&c), SMALL);
    }

    #[test]
    fn json_roundtrip() {
        let c = from_text(SMALL).unwrap();
        let j = to_json(&c);
        assert_eq!(
            j,
            "{\"m\":3,\"n\":4,\"colors\":6,\"grid\":[[1,4,2,5],[2,5,3,6],[3,6,1,4]]}\n"
        );
        assert_eq!(from_json(&j).unwrap(), c);
        assert_eq!(parse_any(&j).unwrap(), c);
    }

    #[test]
    fn truncated_input_is_a_parse_error() {
        assert!(matches!(from_text("3 4\n1 4 2 5\n"), Err(Error::Parse(_))));
        assert!(matches!(from_text("3 4\n1 4 2\n2 5 3 6\n3 6 1 4\n"), Err(Error::Parse(_))));
        assert!(matches!(from_text(""), Err(Error::Parse(_))));
        assert!(matches!(from_text("3\n"), Err(Error::Parse(_))));
        assert!(matches!(from_text("3 3\n1 2 x\n"), Err(Error::Parse(_))));
    }

    #[test]
    fn json_color_count_must_agree() {
        let bad = "{\"m\":3,\"n\":3,\"colors\":2,\"grid\":[[1,1,1],[1,1,1],[1,1,1]]}";
        assert!(matches!(from_json(bad), Err(Error::Parse(_))));
    }
}
