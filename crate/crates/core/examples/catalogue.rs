//! Re-verify every catalogue pattern on its own torus.
//!
//!     cargo run --example catalogue

use torus_square::catalogue::PatternLibrary;

fn main() {
    let lib = PatternLibrary::builtin();
    for c in lib.check() {
        println!(
            "{:<6} {:>2}x{:<2} {} colors  {}",
            c.name,
            c.rows,
            c.cols,
            c.colors,
            if c.ok() { "ok" } else { "FAILED" }
        );
    }
}
