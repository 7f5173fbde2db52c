//! Build and verify a coloring for the given sizes.
//!
//!     cargo run --example construct -- 11 13 17 17 3 5

use torus_square::{construct, verify_coloring};

fn main() -> torus_square::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let sizes: Vec<(usize, usize)> = if args.len() >= 2 {
        args.chunks_exact(2).map(|p| (p[0], p[1])).collect()
    } else {
        vec![(3, 3), (3, 5), (4, 4), (5, 10), (6, 9), (7, 11), (11, 13), (13, 17), (17, 17)]
    };
    for (m, n) in sizes {
        let r = construct(m, n)?;
        assert!(verify_coloring(&r.coloring).is_valid());
        println!("{m:>3}x{n:<3} k={}  {:<28} {}", r.k, r.method, r.layout);
    }
    Ok(())
}
