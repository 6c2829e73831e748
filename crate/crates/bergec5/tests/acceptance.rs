//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured numbers (visible with `--nocapture`). Tolerances and limits
//! are pinned in the assertions.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use bergec5::berge::{contains_berge_cycle, oracle_contains_berge};
use bergec5::decompose::{decompose, verify_claim6, verify_observation7};
use bergec5::extremal::{bollobas_gyori, incidence_c4free_bipartite, random_c5free, search_extremal};
use bergec5::hypergraph::{Hypergraph3, ShadowGraph, Triple, Vertex};
use bergec5::paths::{
    blakley_roy_check, maximize_bound, verify_claim8, verify_lemma9_all, verify_neighborhood_lemma,
};
use bergec5::structure::{blocks, classify_core};
use bergec5::{contains_berge, is_c5_free, PatternGraph};

fn all_triples(n: usize) -> Vec<Triple> {
    let mut out = Vec::new();
    for a in 0..n as Vertex {
        for b in (a + 1)..n as Vertex {
            for c in (b + 1)..n as Vertex {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Shared C5-free corpus: 1000 maximal instances with 5 ≤ n ≤ 30.
fn corpus() -> &'static Vec<Hypergraph3> {
    static CORPUS: OnceLock<Vec<Hypergraph3>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(0xBE26E);
        let params: Vec<(usize, u64)> = (0..1000).map(|i| (rng.gen_range(5..=30), i)).collect();
        params
            .par_iter()
            .map(|&(n, seed)| random_c5free(n, seed))
            .collect()
    })
}

fn pass(id: u32, detail: String) {
    println!("ACCEPTANCE {id} PASS: {detail}");
}

#[test]
fn criterion_1_oracle_equivalence() {
    let start = Instant::now();
    let patterns: Vec<(&str, PatternGraph)> = vec![
        ("C2", PatternGraph::cycle(2).unwrap()),
        ("C3", PatternGraph::cycle(3).unwrap()),
        ("C4", PatternGraph::cycle(4).unwrap()),
        ("C5", PatternGraph::cycle(5).unwrap()),
        ("K4", PatternGraph::complete(4).unwrap()),
        ("P2", PatternGraph::path(2).unwrap()),
        ("P3", PatternGraph::path(3).unwrap()),
        ("P4", PatternGraph::path(4).unwrap()),
    ];
    const CASES: u64 = 10_000;
    let disagreements: usize = (0..CASES)
        .into_par_iter()
        .map(|case| {
            let mut rng = ChaCha8Rng::seed_from_u64(case.wrapping_mul(7919).wrapping_add(13));
            let n = rng.gen_range(4..=6usize);
            let mut ts = all_triples(n);
            ts.shuffle(&mut rng);
            let m = rng.gen_range(0..=8.min(ts.len()));
            let h = Hypergraph3::build(n, ts[..m].iter().copied()).unwrap();
            let mut bad = 0usize;
            for (name, f) in &patterns {
                let fast = contains_berge(&h, f);
                let slow = oracle_contains_berge(&h, f).expect("within oracle limits");
                if fast.is_some() != slow.is_some() {
                    eprintln!("disagreement on case {case} pattern {name}: {:?}", h.edges());
                    bad += 1;
                }
                if let Some(w) = &fast {
                    w.verify(&h, f).expect("detector witness must validate");
                }
                if let Some(w) = &slow {
                    w.verify(&h, f).expect("oracle witness must validate");
                }
            }
            bad
        })
        .sum();
    let elapsed = start.elapsed();
    assert_eq!(disagreements, 0, "detector/oracle disagreements");
    assert!(
        elapsed < Duration::from_secs(60),
        "criterion 1 took {elapsed:?}, limit 60 s"
    );
    pass(1, format!("{CASES} hypergraphs x 8 patterns, 0 disagreements, {elapsed:?}"));
}

#[test]
fn criterion_2_core_classification() {
    let mut blocks_seen = 0usize;
    for h in corpus() {
        for b in blocks(h) {
            let cls = classify_core(h, &b);
            assert!(
                cls.is_ok(),
                "unclassifiable core in C5-free instance: {:?}",
                h.edges()
            );
            blocks_seen += 1;
        }
    }
    pass(2, format!(
        "{} instances, {blocks_seen} blocks, 0 unclassifiable",
        corpus().len()
    ));
}

#[test]
fn criterion_3_decomposition_soundness() {
    for h in corpus() {
        let g = h.shadow();
        let d = decompose(h).expect("corpus instances are C5-free");
        // exact edge partition
        let covered: usize = d.elements.iter().map(|el| el.kind.edges().len()).sum();
        assert_eq!(covered, g.edge_count(), "partition size mismatch");
        assert_eq!(d.edge_owner.len(), g.edge_count(), "owner map incomplete");
        let obs7 = verify_observation7(h, &d.elements);
        assert!(obs7.holds, "{:?}", obs7.violations);
        let c6 = verify_claim6(h, &d);
        assert!(c6.holds, "identity failed: {} vs {}", c6.lhs, c6.rhs);
    }
    pass(3, format!(
        "{} instances: exact partitions, provenance and identity checks all hold",
        corpus().len()
    ));
}

#[test]
fn criterion_4_construction_reproduction() {
    let mut q5_ratio = 0.0;
    let mut q5_part_ratio = 0.0;
    let mut q5_elapsed = Duration::ZERO;
    for q in [2u32, 3, 5] {
        let start = Instant::now();
        let g0 = incidence_c4free_bipartite(q).unwrap();
        let h = bollobas_gyori(&g0).unwrap();
        let big_n = (q * q + q + 1) as usize;
        assert_eq!(h.n(), 3 * big_n);
        assert_eq!(h.edge_count(), (q as usize + 1) * big_n);
        assert!(is_c5_free(&h), "construction q={q} must be C5-free");
        let elapsed = start.elapsed();
        if q == 5 {
            q5_elapsed = elapsed;
            assert!(
                elapsed < Duration::from_secs(300),
                "q=5 took {elapsed:?}, limit 5 min"
            );
            // density against the asymptotic constant 1/(3√3); the per-part
            // form m/(n/3)^{3/2} approaches 1 and is reported alongside
            let ratio = h.edge_count() as f64 / (h.n() as f64).powf(1.5);
            let target = 1.0 / (3.0 * 3.0f64.sqrt());
            assert!(
                (ratio - target).abs() <= 0.25 * target,
                "density {ratio:.5} not within 25% of {target:.5}"
            );
            q5_ratio = ratio;
            q5_part_ratio = h.edge_count() as f64 / (h.n() as f64 / 3.0).powf(1.5);
        }
    }
    pass(4, format!(
        "q in {{2,3,5}} reproduce counts and verify C5-free; q=5 density {:.5} (target 0.19245 +/- 25%), m/(n/3)^1.5 = {:.5}, {:?}",
        q5_ratio, q5_part_ratio, q5_elapsed
    ));
}

#[test]
fn criterion_5_degree_and_spread_inequalities() {
    let mut vertices_checked = 0usize;
    let mut p5_unchecked = 0usize;
    for h in corpus() {
        let c8 = verify_claim8(h);
        assert!(c8.holds, "claim8 failed: {:?}", c8.failures().first());
        if let Some(note) = &c8.note {
            if note.contains("skipped") {
                p5_unchecked += 1;
            }
        }
        let l9 = verify_lemma9_all(h);
        assert!(l9.holds, "lemma9 failed: {:?}", l9.failures().first());
        let nb = verify_neighborhood_lemma(h);
        assert!(nb.holds, "neighborhood failed: {:?}", nb.failures().first());
        vertices_checked += h.n();
    }
    assert_eq!(p5_unchecked, 0, "all link P5 searches fit in the budget");
    pass(5, format!(
        "{} instances / {vertices_checked} vertices: claim8 (+no-P5 links), lemma9, neighborhood all hold",
        corpus().len()
    ));
}

#[test]
fn criterion_6_blakley_roy() {
    for h in corpus() {
        let rep = blakley_roy_check(&h.shadow());
        assert!(rep.holds, "Blakley-Roy failed on a shadow: counting bug");
    }
    let mut checked = corpus().len();
    for case in 0..1000u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(case.wrapping_mul(104729));
        let n = rng.gen_range(2..=40usize);
        let p: f64 = rng.gen_range(0.05..0.9);
        let mut pairs = Vec::new();
        for u in 0..n as Vertex {
            for v in (u + 1)..n as Vertex {
                if rng.gen_bool(p) {
                    pairs.push((u, v));
                }
            }
        }
        let g = ShadowGraph::from_pairs(n, pairs);
        let rep = blakley_roy_check(&g);
        assert!(rep.holds, "Blakley-Roy failed on G({n}, {p:.2})");
        checked += 1;
    }
    pass(6, format!("{checked} graphs, 0 failures"));
}

#[test]
fn criterion_7_bound_optimizer() {
    let start = Instant::now();
    let curve = maximize_bound();
    let elapsed = start.elapsed();
    assert!(
        (curve.maximizer.0 - 0.0).abs() < 1e-4 && (curve.maximizer.1 - 2.0 / 3.0).abs() < 1e-4,
        "maximizer {:?} not within 1e-4 of (0, 2/3)",
        curve.maximizer
    );
    assert!(
        curve.maximum >= 0.25347 && curve.maximum <= 0.25367,
        "maximum {} outside [0.25347, 0.25367]",
        curve.maximum
    );
    assert!(curve.maximum < 0.2536 + 1e-4);
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}, limit 1 s");
    pass(7, format!(
        "max {:.6} at ({:.5}, {:.5}), {elapsed:?}",
        curve.maximum, curve.maximizer.0, curve.maximizer.1
    ));
}

#[test]
fn criterion_8_exact_extremal_values() {
    // n = 4: analytically forced (a Berge-C5 needs 5 distinct vertices)
    let r4 = search_extremal(4, None).unwrap();
    assert_eq!(r4.m_star, 4);
    assert!(r4.exact);

    // n = 5: cross-check against full subset enumeration with the
    // brute-force containment oracle
    let ts5 = all_triples(5);
    let c5 = PatternGraph::cycle(5).unwrap();
    let mut best_by_enumeration = 0usize;
    for mask in 0u32..(1 << ts5.len()) {
        let chosen: Vec<Triple> = ts5
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, t)| *t)
            .collect();
        let size = chosen.len();
        if size <= best_by_enumeration {
            continue;
        }
        let h = Hypergraph3::build(5, chosen).unwrap();
        if oracle_contains_berge(&h, &c5).unwrap().is_none() {
            best_by_enumeration = size;
        }
    }
    let r5 = search_extremal(5, None).unwrap();
    assert_eq!(r5.m_star, best_by_enumeration, "search vs full enumeration at n=5");
    assert!(is_c5_free(&r5.witness) && r5.witness.edge_count() == r5.m_star);

    // n = 6: exact within 10 minutes, witness verified, and an exhaustive
    // spot-check that no C5-free family of size m*+1 exists
    let start = Instant::now();
    let r6 = search_extremal(6, None).unwrap();
    let elapsed6 = start.elapsed();
    assert!(r6.exact, "n=6 must be exact");
    assert!(
        elapsed6 < Duration::from_secs(600),
        "n=6 took {elapsed6:?}, limit 10 min"
    );
    assert!(is_c5_free(&r6.witness) && r6.witness.edge_count() == r6.m_star);
    let ts6 = all_triples(6);
    let target = r6.m_star as u32 + 1;
    let found_bigger = (0u32..(1 << ts6.len()))
        .into_par_iter()
        .filter(|mask| mask.count_ones() == target)
        .any(|mask| {
            let chosen: Vec<Triple> = ts6
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, t)| *t)
                .collect();
            let h = Hypergraph3::build(6, chosen).unwrap();
            contains_berge_cycle(&h, 5).unwrap().is_none()
        });
    assert!(!found_bigger, "exhaustive check found a C5-free family of size m*+1 at n=6");

    // Sanity ceiling for every exact value
    for r in [&r4, &r5, &r6] {
        let ceiling = 2.0f64.sqrt() * (r.n as f64).powf(1.5) + 4.5 * r.n as f64;
        assert!((r.m_star as f64) <= ceiling);
    }
    pass(8, format!(
        "m*(4)={} m*(5)={} (= enumeration) m*(6)={} (exact in {elapsed6:?}, size-{} exhaustion verified)",
        r4.m_star, r5.m_star, r6.m_star, target
    ));
}

#[test]
fn criterion_9_determinism() {
    let pool1 = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let pool8 = rayon::ThreadPoolBuilder::new().num_threads(8).build().unwrap();

    // decompose: bit-identical across runs and thread counts
    let h = random_c5free(26, 99);
    let d_ref = serde_json::to_string(&decompose(&h).unwrap()).unwrap();
    let d_1 = pool1.install(|| serde_json::to_string(&decompose(&h).unwrap()).unwrap());
    let d_8 = pool8.install(|| serde_json::to_string(&decompose(&h).unwrap()).unwrap());
    assert_eq!(d_ref, d_1);
    assert_eq!(d_ref, d_8);

    // random generator: fixed seed reproduces exactly
    assert_eq!(random_c5free(24, 7), random_c5free(24, 7));

    // search: same fingerprint (n, m*, witness, exactness, node count)
    // across repeated runs and across 1 vs 8 threads
    let s_ref = search_extremal(5, None).unwrap().fingerprint();
    let s_rep = search_extremal(5, None).unwrap().fingerprint();
    let s_1 = pool1.install(|| search_extremal(5, None).unwrap().fingerprint());
    let s_8 = pool8.install(|| search_extremal(5, None).unwrap().fingerprint());
    assert_eq!(s_ref, s_rep);
    assert_eq!(s_ref, s_1);
    assert_eq!(s_ref, s_8);

    let s6_1 = pool1.install(|| search_extremal(6, None).unwrap().fingerprint());
    let s6_8 = pool8.install(|| search_extremal(6, None).unwrap().fingerprint());
    assert_eq!(s6_1, s6_8);

    pass(9, "decompose, random_c5free and search_extremal reproduce bit-for-bit across runs and across 1 vs 8 threads".into());
}
