//! Maximizing the bound expression over the simplex.
//!
//! Prints a small table of the expression, the grid+refinement maximizer,
//! and writes a heatmap SVG next to the working directory.

use bergec5::paths::{bound_value, maximize_bound};
use bergec5::report::bound_heatmap_svg;

fn main() {
    println!("B(a1, a2) = ((4 - 2a1 - a2)/12) * sqrt((5a1 + 3a2 + 3)/6)\n");
    println!("   a1    a2      B");
    for (a1, a2) in [
        (0.0, 0.0),
        (1.0, 0.0),
        (0.0, 1.0),
        (0.5, 0.5),
        (0.0, 2.0 / 3.0),
    ] {
        println!("  {a1:.2}  {a2:.4}  {:.6}", bound_value(a1, a2));
    }

    let curve = maximize_bound();
    println!(
        "\nmaximum {:.9} at (a1, a2) = ({:.6}, {:.6}), error bound {:.1e}",
        curve.maximum, curve.maximizer.0, curve.maximizer.1, curve.error_bound
    );
    println!("(the coefficient of n^(3/2) in the upper bound; < 0.2536)");

    let svg = bound_heatmap_svg(&curve);
    let path = "bound_curve.svg";
    std::fs::write(path, svg).expect("write svg");
    println!("wrote {path}");
}
