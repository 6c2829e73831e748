//! Thin/fat pairs, tightly-connected blocks and core classification.

use bergec5::structure::{blocks, classify_core, classify_pairs, thin_hyperedges};
use bergec5::Hypergraph3;

fn main() {
    // three blocks: a K4³, a crown with thin attachments, and a lone triple
    let h = Hypergraph3::build(
        13,
        [
            // K4³ on 0..4
            [0, 1, 2],
            [0, 1, 3],
            [0, 2, 3],
            [1, 2, 3],
            // crown {456, 457} fattened by two thin hyperedges
            [4, 5, 6],
            [4, 5, 7],
            [4, 6, 8],
            [5, 7, 8],
            // isolated hyperedge
            [10, 11, 12],
        ],
    )
    .unwrap();

    let pc = classify_pairs(&h);
    println!(
        "n={} m={}; {} thin pairs, {} fat pairs",
        h.n(),
        h.edge_count(),
        pc.thin_count(),
        pc.fat_count()
    );
    println!("thin hyperedges: {:?}", thin_hyperedges(&h));

    for b in blocks(&h) {
        let cls = classify_core(&h, &b).expect("C5-free input classifies");
        println!(
            "block {}: hyperedges {:?} -> core {:?}, shape {:?}",
            b.id, b.hyperedges, cls.core, cls.shape
        );
    }
}
