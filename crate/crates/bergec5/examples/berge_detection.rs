//! Berge pattern containment with certificates.
//!
//! Builds a few small hypergraphs and queries them for Berge cycles, paths
//! and K4, printing the witness (vertex images + assigned hyperedges) when
//! one exists. Also shows the brute-force oracle agreeing with the detector.

use bergec5::berge::{berge_girth, contains_berge, is_linear, oracle_contains_berge, PatternGraph};
use bergec5::Hypergraph3;

fn main() {
    // F2: hyperedges oab, obc, ocd, oda with center o = 0
    let f2 = Hypergraph3::build(5, [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 1, 4]]).unwrap();
    // the Fano plane: 7 points, 7 lines, every pair on exactly one line
    let fano = Hypergraph3::build(
        7,
        [
            [0, 1, 2],
            [0, 3, 4],
            [0, 5, 6],
            [1, 3, 5],
            [1, 4, 6],
            [2, 3, 6],
            [2, 4, 5],
        ],
    )
    .unwrap();

    for (name, h) in [("F2", &f2), ("Fano plane", &fano)] {
        println!("== {name}: n={} m={}", h.n(), h.edge_count());
        println!("   linear: {}, Berge girth: {:?}", is_linear(h), berge_girth(h));
        for (label, pattern) in [
            ("C2", PatternGraph::cycle(2).unwrap()),
            ("C3", PatternGraph::cycle(3).unwrap()),
            ("C4", PatternGraph::cycle(4).unwrap()),
            ("C5", PatternGraph::cycle(5).unwrap()),
            ("K4", PatternGraph::complete(4).unwrap()),
            ("P3", PatternGraph::path(3).unwrap()),
        ] {
            match contains_berge(h, &pattern) {
                Some(w) => {
                    w.verify(h, &pattern).expect("witness must validate");
                    println!("   Berge-{label}: yes, vertices {:?} hyperedges {:?}", w.vmap, w.emap);
                }
                None => println!("   Berge-{label}: no"),
            }
            // the exhaustive oracle agrees on these small instances
            let slow = oracle_contains_berge(h, &pattern).unwrap();
            assert_eq!(slow.is_some(), contains_berge(h, &pattern).is_some());
        }
        println!();
    }
}
