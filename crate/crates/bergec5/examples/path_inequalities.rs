//! The inequality verifier suite on a generated C5-free instance.
//!
//! The per-element 3-path bounds carry asymptotic constants, so they are
//! extremely loose at this scale; the point is that every check runs and
//! the slack is visible.

use bergec5::decompose::decompose;
use bergec5::extremal::random_c5free;
use bergec5::paths::{
    blakley_roy_check, count_3walks, count_good_3paths, verify_claim12, verify_claim8,
    verify_claims13_14_15, verify_lemma9_all, verify_neighborhood_lemma,
};

fn main() {
    let h = random_c5free(20, 5);
    let g = h.shadow();
    println!(
        "n={} m={} shadow edges={} 3-walks={}",
        h.n(),
        h.edge_count(),
        g.edge_count(),
        count_3walks(&g)
    );
    let stats = count_good_3paths(&g);
    println!(
        "ordered good 3-paths: {} (of {} 3-walks); ordered bad 2-paths: {}",
        stats.good3, stats.walks3, stats.bad2
    );

    let mut reports = vec![
        verify_claim8(&h),
        verify_lemma9_all(&h),
        verify_neighborhood_lemma(&h),
        blakley_roy_check(&g),
        verify_claim12(&h),
    ];
    let d = decompose(&h).expect("C5-free");
    reports.extend(verify_claims13_14_15(&h, &d));

    for rep in &reports {
        let worst = rep
            .items
            .iter()
            .filter_map(|i| i.ratio)
            .fold(f64::NEG_INFINITY, f64::max);
        println!(
            "{:<12} {} ({} instances{})",
            rep.claim,
            if rep.holds { "holds" } else { "VIOLATED" },
            rep.items.len(),
            if worst.is_finite() {
                format!(", worst lhs/rhs = {worst:.4}")
            } else {
                String::new()
            }
        );
    }
}
