//! Two-generator combinations and the threshold above which every integer
//! is representable.
//!
//!     cargo run --example sylvester -- 7 4

use torus_square::semigroup::{decompose, frobenius_threshold};

fn main() -> torus_square::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (r, s) = match args[..] {
        [r, s] => (r, s),
        _ => (7, 4),
    };
    let threshold = frobenius_threshold(r, s)?;
    println!("every t >= {threshold} is a*{r} + b*{s}");
    for t in 0..=threshold + 3 {
        match decompose(r, s, t) {
            Some(d) => println!("{t:>3} = {}*{r} + {}*{s}", d.a, d.b),
            None => println!("{t:>3}   not representable"),
        }
    }
    Ok(())
}
