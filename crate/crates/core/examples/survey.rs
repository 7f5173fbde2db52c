//! Survey small tori and certify the summary table of known values.
//!
//!     cargo run --release --example survey -- 9 12

use torus_square::solver::SearchBudget;
use torus_square::survey::{reproduce_table1, run_survey, six_color_summary, table1_report, to_table, DEFAULT_EXACT_VERTEX_LIMIT};

fn main() -> torus_square::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (max_m, max_n) = match args[..] {
        [m, n] => (m, n),
        _ => (8, 10),
    };
    let budget = SearchBudget::default();
    let rows = run_survey(max_m, max_n, DEFAULT_EXACT_VERTEX_LIMIT, budget)?;
    print!("{}", to_table(&rows));
    for s in six_color_summary(&rows) {
        println!("m={}: first 6-colorable n={:?}, all n from {:?}", s.m, s.first_n, s.from_n);
    }
    println!();
    print!("{}", table1_report(&reproduce_table1(DEFAULT_EXACT_VERTEX_LIMIT, budget, None)?));
    Ok(())
}
