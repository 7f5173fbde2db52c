//! Non-negative integer combinations `a*r + b*s` of two generators.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// Witness that `t = a*r + b*s` with `a, b >= 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub a: usize,
    pub b: usize,
}

/// Writes `t` as `a*r + b*s`, maximizing `a`; `None` if `t` is not
/// representable.
///
/// `b` only matters modulo `r`, so at most `r` candidates are tried and the
/// smallest feasible `b` (hence the largest `a`) wins.
pub fn decompose(r: usize, s: usize, t: usize) -> Option<Decomposition> {
    assert!(r >= 1 && s >= 1, "generators must be positive");
    (0..r)
        .take_while(|&b| b * s <= t)
        .find(|&b| (t - b * s).is_multiple_of(r))
        .map(|b| Decomposition {
            r,
            s,
            t,
            a: (t - b * s) / r,
            b,
        })
}

/// `(r-1)(s-1)`: every `t` at or above it is representable.
pub fn frobenius_threshold(r: usize, s: usize) -> Result<usize> {
    if r <= 1 || s <= 1 {
        return Err(Error::Usage(format!(
            "frobenius_threshold({r}, {s}): generators must exceed 1"
        )));
    }
    if r.gcd(&s) != 1 {
        return Err(Error::Usage(format!(
            "frobenius_threshold({r}, {s}): generators must be coprime"
        )));
    }
    Ok((r - 1) * (s - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab(r: usize, s: usize, t: usize) -> Option<(usize, usize)> {
        decompose(r, s, t).map(|d| (d.a, d.b))
    }

    #[test]
    fn examples() {
        assert_eq!(ab(7, 4, 11), Some((1, 1)));
        assert_eq!(ab(7, 3, 13), Some((1, 2)));
        assert_eq!(ab(3, 7, 11), None);
        assert_eq!(ab(5, 9, 0), Some((0, 0)));
    }

    #[test]
    fn maximizes_first_coefficient() {
        // 42 = 6*7 = 3*14: prefer six 7s.
        assert_eq!(ab(7, 2, 42), Some((6, 0)));
        assert_eq!(ab(5, 6, 30), Some((6, 0)));
        assert_eq!(ab(4, 6, 12), Some((3, 0)));
    }

    #[test]
    fn thresholds() {
        assert_eq!(frobenius_threshold(4, 7).unwrap(), 18);
        assert_eq!(frobenius_threshold(3, 7).unwrap(), 12);
        assert_eq!(frobenius_threshold(13, 4).unwrap(), 36);
        assert!(frobenius_threshold(4, 6).is_err());
        assert!(frobenius_threshold(1, 6).is_err());
    }
}
