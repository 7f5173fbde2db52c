use torus_square::solver::SearchBudget;
use torus_square::survey::{
    from_jsonl, reproduce_table1, run_survey, to_jsonl, ChiValue, Conjecture1, RowStatus, SurveyRow, Table1Verdict,
};

fn row(rows: &[SurveyRow], m: usize, n: usize) -> &SurveyRow {
    rows.iter().find(|r| (r.m, r.n) == (m, n)).unwrap()
}

#[test]
fn small_survey_rows() {
    let rows = run_survey(5, 7, 40, SearchBudget::default()).unwrap();
    let pairs: Vec<_> = rows.iter().map(|r| (r.m, r.n)).collect();
    let mut sorted = pairs.clone();
    sorted.sort();
    assert_eq!(pairs, sorted);
    assert!(rows.iter().all(|r| r.m <= r.n));

    let r33 = row(&rows, 3, 3);
    assert_eq!((r33.chi, r33.conjecture1), (ChiValue::Exact(9), Conjecture1::Holds));
    let r57 = row(&rows, 5, 7);
    assert_eq!((r57.alpha.value, r57.lower, r57.chi), (5, 7, ChiValue::Exact(7)));
    assert_eq!(r57.conjecture1, Conjecture1::Holds);
    let r47 = row(&rows, 4, 7);
    assert_eq!((r47.constructed_k, r47.table1), (7, Table1Verdict::Match));

    for r in &rows {
        let (lo, hi) = r.chi.bounds();
        assert!(r.lower <= lo && lo <= hi && hi <= r.constructed_k, "{r:?}");
        assert_ne!(r.conjecture1, Conjecture1::Violated, "{r:?}");
        assert_ne!(r.table1, Table1Verdict::Mismatch, "{r:?}");
    }
}

#[test]
fn rows_above_the_vertex_limit_use_counting_bounds() {
    let rows = run_survey(8, 13, 49, SearchBudget::default()).unwrap();
    let r = row(&rows, 8, 11);
    assert!(!r.alpha.certified || r.alpha.value == r.alpha.upper);
    assert_eq!(r.alpha.upper, 88 / 5);
    assert_eq!(r.chi, ChiValue::Interval([6, 7]));
    assert_eq!(r.conjecture1, Conjecture1::Open);
    assert_eq!(r.table1, Table1Verdict::Match);
}

#[test]
fn reports_are_deterministic_and_round_trip() {
    let a = run_survey(6, 8, 49, SearchBudget::default()).unwrap();
    let b = run_survey(6, 8, 49, SearchBudget::default()).unwrap();
    assert_eq!(a, b);
    let text = to_jsonl(&a);
    assert_eq!(text.lines().count(), a.len());
    assert_eq!(from_jsonl(&text).unwrap(), a);
    let first = text.lines().next().unwrap();
    assert_eq!(
        first,
        r#"{"m":3,"n":3,"alpha":{"value":1,"upper":1,"certified":true},"lower":9,"constructed_k":9,"chi":9,"conjecture1":"holds","table1":"match"}"#
    );
}

#[test]
fn table_rows_without_extended_budget() {
    let checks = reproduce_table1(49, SearchBudget::default(), None).unwrap();
    assert_eq!(checks.len(), 16);
    for c in &checks {
        let expected = if c.starred { RowStatus::Deferred } else { RowStatus::Pass };
        assert_eq!(c.status, expected, "{}", c.label);
    }
    let first = &checks[0];
    let sizes: Vec<_> = first.instances.iter().map(|i| (i.m, i.n)).collect();
    assert_eq!(sizes, [(5, 5), (5, 10), (10, 10)]);
}
