//! Exact chromatic numbers of small squares.
//!
//!     cargo run --release --example chromatic -- 7 8

use torus_square::format::to_text;
use torus_square::solver::{chromatic_number, SearchBudget};
use torus_square::TorusDims;

fn main() -> torus_square::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let sizes: Vec<(usize, usize)> = if args.len() >= 2 {
        args.chunks_exact(2).map(|p| (p[0], p[1])).collect()
    } else {
        vec![(3, 3), (3, 5), (4, 4), (5, 5), (5, 7), (7, 7)]
    };
    for (m, n) in sizes {
        let r = chromatic_number(TorusDims::new(m, n)?, SearchBudget::default())?;
        println!(
            "{}: chi in [{}, {}] certified={} lower bound from {:?}",
            r.dims, r.lower, r.upper, r.certified, r.lower_source
        );
        if let Some(c) = &r.witness {
            print!("{}", to_text(c));
        }
    }
    Ok(())
}
