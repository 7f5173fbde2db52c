use rayon::prelude::*;
use torus_square::construct::{construct, table1_row, TABLE1};
use torus_square::verify_coloring;

fn grid(lo: usize, hi: usize) -> Vec<(usize, usize)> {
    (lo..=hi).flat_map(|m| (lo..=hi).map(move |n| (m, n))).collect()
}

#[test]
fn every_size_up_to_100_is_constructed_and_verified() {
    let failures: Vec<_> = grid(3, 100)
        .into_par_iter()
        .filter_map(|(m, n)| match construct(m, n) {
            Ok(r) if verify_coloring(&r.coloring).is_valid() && r.k == r.coloring.k() => None,
            Ok(r) => Some(format!("{m}x{n}: {} did not verify", r.method)),
            Err(e) => Some(format!("{m}x{n}: {e}")),
        })
        .collect();
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn seven_colors_suffice_except_four_sizes() {
    for (m, n) in grid(3, 60) {
        let k = construct(m, n).unwrap().k;
        let expected_max = match (m, n) {
            (3, 3) => 9,
            (3, 5) | (5, 3) | (4, 4) => 8,
            _ => 7,
        };
        if expected_max > 7 {
            assert_eq!(k, expected_max, "{m}x{n}");
        } else {
            assert!(k <= 7, "{m}x{n} used {k}");
        }
    }
}

#[test]
fn transposing_does_not_change_the_color_count() {
    for (m, n) in grid(3, 40) {
        assert_eq!(construct(m, n).unwrap().k, construct(n, m).unwrap().k, "{m}x{n}");
    }
}

#[test]
fn five_colors_exactly_when_both_sides_are_multiples_of_five() {
    for (m, n) in grid(3, 60) {
        let five = construct(m, n).unwrap().k == 5;
        assert_eq!(five, m % 5 == 0 && n % 5 == 0, "{m}x{n}");
    }
}

#[test]
fn constructions_meet_unstarred_table_values() {
    for (m, n) in grid(3, 60) {
        if let Some(row) = table1_row(m, n) {
            let k = construct(m, n).unwrap().k;
            if row.starred {
                assert!(k <= 7, "{m}x{n}");
            } else {
                assert_eq!(k, row.value, "{m}x{n} ({})", row.label);
            }
        }
    }
}

#[test]
fn overlapping_table_rows_agree() {
    for (m, n) in grid(3, 60) {
        let values: Vec<u32> = TABLE1
            .iter()
            .filter(|r| r.matches(m, n) || r.matches(n, m))
            .map(|r| r.value)
            .collect();
        assert!(values.windows(2).all(|w| w[0] == w[1]), "{m}x{n}: {values:?}");
    }
}
