use num_integer::Integer;
use proptest::prelude::*;
use torus_square::semigroup::{decompose, frobenius_threshold};

/// Membership by trying every `b` in `0..=t/s`.
fn representable(r: usize, s: usize, t: usize) -> bool {
    (0..=t / s).any(|b| (t - b * s).is_multiple_of(r))
}

fn coprime_pairs() -> impl Iterator<Item = (usize, usize)> {
    (2..=20).flat_map(|r| (2..=20).map(move |s| (r, s))).filter(|&(r, s)| r.gcd(&s) == 1)
}

#[test]
fn membership_matches_brute_force() {
    for (r, s) in coprime_pairs() {
        for t in 0..=500 {
            assert_eq!(decompose(r, s, t).is_some(), representable(r, s, t), "{t} in S({r},{s})");
        }
    }
}

#[test]
fn everything_from_the_threshold_on_and_not_just_below() {
    for (r, s) in coprime_pairs() {
        let th = frobenius_threshold(r, s).unwrap();
        assert_eq!(th, (r - 1) * (s - 1));
        assert!(decompose(r, s, th - 1).is_none(), "S({r},{s})");
        assert!((th..=th + 100).all(|t| decompose(r, s, t).is_some()), "S({r},{s})");
    }
}

proptest! {
    #[test]
    fn decomposition_is_exact_and_maximizes_first(r in 1usize..25, s in 1usize..25, t in 0usize..600) {
        match decompose(r, s, t) {
            Some(d) => {
                prop_assert_eq!(d.a * r + d.b * s, t);
                prop_assert_eq!((d.r, d.s, d.t), (r, s, t));
                let best_a = (0..=t / r).rev().find(|a| (t - a * r) % s == 0).unwrap();
                prop_assert_eq!(d.a, best_a);
            }
            None => prop_assert!(!representable(r, s, t)),
        }
    }
}
