//! Exact solvers against plain exhaustive search written from the distance
//! formula alone.

use torus_square::graph::is_independent;
use torus_square::solver::{
    ceil_lower_bound, chromatic_number, find_k_coloring, max_independent_set, KColoring, SearchBudget,
};
use torus_square::{torus_distance, verify_coloring, Coord, TorusDims};

fn close(d: TorusDims, a: usize, b: usize) -> bool {
    torus_distance(d, d.coord_of(a), d.coord_of(b)).unwrap() <= 2
}

/// Largest independent set by include/exclude over vertices in row-major
/// order.
fn naive_alpha(d: TorusDims) -> usize {
    fn go(d: TorusDims, v: usize, chosen: &mut Vec<usize>, best: &mut usize) {
        if chosen.len() + (d.order() - v) <= *best {
            return;
        }
        if v == d.order() {
            *best = chosen.len();
            return;
        }
        if chosen.iter().all(|&u| !close(d, u, v)) {
            chosen.push(v);
            go(d, v + 1, chosen, best);
            chosen.pop();
        }
        go(d, v + 1, chosen, best);
    }
    let mut best = 0;
    go(d, 0, &mut Vec::new(), &mut best);
    best
}

/// Smallest `k` admitting a coloring, by row-major backtracking where a new
/// color may only be the next unused one.
fn naive_chi(d: TorusDims) -> u32 {
    fn go(d: TorusDims, v: usize, k: u32, used: u32, colors: &mut Vec<u32>) -> bool {
        if v == d.order() {
            return true;
        }
        for c in 1..=k.min(used + 1) {
            if (0..v).all(|u| colors[u] != c || !close(d, u, v)) {
                colors.push(c);
                if go(d, v + 1, k, used.max(c), colors) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }
    (1..).find(|&k| go(d, 0, k, 0, &mut Vec::new())).unwrap()
}

fn small_sizes() -> Vec<TorusDims> {
    (3..=10)
        .flat_map(|m| (3..=10).map(move |n| (m, n)))
        .filter(|&(m, n)| m * n <= 30)
        .map(|(m, n)| TorusDims::new(m, n).unwrap())
        .collect()
}

#[test]
fn alpha_matches_exhaustive_search() {
    for d in small_sizes() {
        let a = max_independent_set(d, SearchBudget::UNLIMITED);
        assert!(a.certified);
        assert_eq!(a.alpha, naive_alpha(d), "{d}");
        assert_eq!(a.witness.len(), a.alpha);
        assert!(is_independent(d, &a.witness));
    }
}

#[test]
fn chi_matches_exhaustive_search() {
    for d in small_sizes() {
        let r = chromatic_number(d, SearchBudget::UNLIMITED).unwrap();
        assert!(r.certified, "{d}");
        assert_eq!(r.upper, naive_chi(d), "{d}");
        let w = r.witness.unwrap();
        assert!(verify_coloring(&w).is_valid());
        assert_eq!(w.k(), r.upper);
    }
}

#[test]
fn frozen_values() {
    let d = |m, n| TorusDims::new(m, n).unwrap();
    // From the exhaustive search above.
    assert_eq!(naive_alpha(d(3, 8)), 4);
    assert_eq!(naive_alpha(d(4, 6)), 4);
    assert_eq!(max_independent_set(d(3, 3), SearchBudget::UNLIMITED).alpha, 1);
    assert_eq!(max_independent_set(d(3, 8), SearchBudget::UNLIMITED).alpha, 4);
    assert_eq!(max_independent_set(d(4, 6), SearchBudget::UNLIMITED).alpha, 4);
    assert_eq!(max_independent_set(d(5, 7), SearchBudget::UNLIMITED).alpha, 5);
}

#[test]
fn strip_bounds_on_alpha() {
    for n in 3..=16 {
        let a3 = max_independent_set(TorusDims::new(3, n).unwrap(), SearchBudget::UNLIMITED);
        assert!(a3.certified && a3.alpha <= n / 2, "3x{n}");
        let a4 = max_independent_set(TorusDims::new(4, n).unwrap(), SearchBudget::UNLIMITED);
        assert!(a4.certified && a4.alpha <= 2 * n / 3, "4x{n}");
    }
    for n in 3..=9 {
        let a5 = max_independent_set(TorusDims::new(5, n).unwrap(), SearchBudget::UNLIMITED);
        assert!(a5.certified && a5.alpha <= n, "5x{n}");
        if n % 5 != 0 {
            assert!(a5.alpha < n, "5x{n}");
        }
    }
}

#[test]
fn lower_bound_from_alpha() {
    let d = |m, n| TorusDims::new(m, n).unwrap();
    assert_eq!(ceil_lower_bound(d(5, 7), 5).unwrap(), 7);
    assert_eq!(ceil_lower_bound(d(3, 3), 1).unwrap(), 9);
    assert_eq!(ceil_lower_bound(d(3, 5), 2).unwrap(), 8);
    assert!(ceil_lower_bound(d(3, 5), 0).is_err());
}

#[test]
fn coloring_search_outcomes() {
    let d = |m, n| TorusDims::new(m, n).unwrap();
    assert!(matches!(find_k_coloring(d(3, 3), 8, SearchBudget::UNLIMITED), KColoring::Exhausted));
    assert!(matches!(find_k_coloring(d(4, 4), 7, SearchBudget::UNLIMITED), KColoring::Exhausted));
    match find_k_coloring(d(3, 3), 9, SearchBudget::UNLIMITED) {
        KColoring::Found(c) => assert_eq!(c.k(), 9),
        other => panic!("{other:?}"),
    }
    assert!(matches!(find_k_coloring(d(7, 7), 6, SearchBudget::nodes(10)), KColoring::BudgetOut));
}

#[test]
fn budget_truncation_is_reported() {
    let d = TorusDims::new(9, 9).unwrap();
    let a = max_independent_set(d, SearchBudget::nodes(3));
    assert!(!a.certified);
    assert!(a.alpha <= a.upper_bound);
    assert!(is_independent(d, &a.witness));
    let r = chromatic_number(TorusDims::new(7, 7).unwrap(), SearchBudget::nodes(1)).unwrap();
    assert!(r.lower <= r.upper);
}

#[test]
fn witnesses_start_at_the_origin() {
    let a = max_independent_set(TorusDims::new(6, 7).unwrap(), SearchBudget::UNLIMITED);
    assert_eq!(a.witness[0], Coord::new(0, 0));
}
