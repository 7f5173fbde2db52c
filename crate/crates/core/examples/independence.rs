//! Maximum independent sets of the square and the lower bound they give.
//!
//!     cargo run --release --example independence -- 5 7

use torus_square::solver::{ceil_lower_bound, max_independent_set, SearchBudget};
use torus_square::TorusDims;

fn main() -> torus_square::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let sizes: Vec<(usize, usize)> = if args.len() >= 2 {
        args.chunks_exact(2).map(|p| (p[0], p[1])).collect()
    } else {
        vec![(3, 3), (3, 5), (3, 8), (4, 4), (4, 6), (5, 7), (7, 7)]
    };
    for (m, n) in sizes {
        let dims = TorusDims::new(m, n)?;
        let a = max_independent_set(dims, SearchBudget::default());
        let set: Vec<String> = a.witness.iter().map(ToString::to_string).collect();
        println!(
            "{dims}: alpha={} certified={} chi>={}  {}",
            a.alpha,
            a.certified,
            ceil_lower_bound(dims, a.upper_bound)?,
            set.join(" ")
        );
    }
    Ok(())
}
