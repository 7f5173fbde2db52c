//! Assemble the 11x13 coloring from `A` blocks and repair it.
//!
//! Stacking `A` over `A_4` and appending two copies of the first three
//! columns leaves same-colored pairs across the seams. Recoloring a single
//! corner cell is not enough; the fix has to touch the top-right cell of
//! every 3-column block.
//!
//!     cargo run --example corner_fix

use torus_square::construct::{a_family_blocks, apply_corner_fix, assemble_a_family, corner_fix_cells};
use torus_square::pattern::set_cell;

fn main() -> torus_square::Result<()> {
    let (m, n) = (11, 13);
    let (a, b, c, d) = a_family_blocks(m, n).expect("11 = 7 + 4, 13 = 7 + 2*3");
    println!("{m} = 7*{a} + 4*{b}, {n} = 7*{c} + 3*{d}");

    let plain = assemble_a_family(m, n)?;
    println!("layout {}", plain.name());
    println!("plain assembly: {} violations", plain.verify()?.violations.len());

    let corner_only = set_cell(&plain, 0, n - 1, 3)?;
    let report = corner_only.verify()?;
    println!("top-right cell only: {} violations", report.violations.len());
    for v in &report.violations {
        println!("  {v}");
    }

    let cells = corner_fix_cells(a, b, c, d);
    let fixed = apply_corner_fix(&plain, &cells)?;
    println!("cells recolored 4 -> 3: {cells:?}");
    println!("fixed: {} violations", fixed.verify()?.violations.len());
    print!("{fixed}");
    Ok(())
}
