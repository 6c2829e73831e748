//! Exact extremal values at small n by branch-and-bound.
//!
//! Prints the maximum number of hyperedges of an n-vertex hypergraph with
//! no Berge 5-cycle, a witness family, and the sanity ceiling
//! sqrt(2)·n^(3/2) + 4.5n.

use bergec5::berge::is_c5_free;
use bergec5::extremal::search_extremal;
use std::time::Duration;

fn main() {
    for n in 3..=7 {
        let r = search_extremal(n, Some(Duration::from_secs(300))).expect("n within envelope");
        assert!(is_c5_free(&r.witness));
        let ceiling = 2.0f64.sqrt() * (n as f64).powf(1.5) + 4.5 * n as f64;
        println!(
            "n={n}: m* = {}{}  (nodes {}, {} ms, ceiling {:.1})",
            r.m_star,
            if r.exact { "" } else { " (lower bound only)" },
            r.nodes_explored,
            r.elapsed_ms,
            ceiling
        );
        if n <= 5 {
            let triples: Vec<String> = r
                .witness
                .edges()
                .iter()
                .map(|t| format!("{}{}{}", t[0], t[1], t[2]))
                .collect();
            println!("      witness: {}", triples.join(" "));
        }
    }
}
