//! Structural analysis of Berge-C5-free 3-uniform hypergraphs.
//!
//! The library turns the structure theory of 3-uniform hypergraphs without
//! Berge 5-cycles into executable machinery: cycle/pattern detection with
//! certificates, block and core decomposition, the shadow edge decomposition
//! with its exact counting identity, path-counting inequality verifiers, the
//! closed bound maximization, the projective-plane lower-bound construction,
//! and exact extremal search at small vertex counts.
//!
//! ## Examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run -p bergec5 --example berge_detection     # pattern containment + witnesses
//! cargo run -p bergec5 --example blocks_and_cores    # thin/fat pairs, blocks, core shapes
//! cargo run -p bergec5 --example edge_decomposition  # shadow partition + exact identity
//! cargo run -p bergec5 --example path_inequalities   # inequality verifier suite
//! cargo run -p bergec5 --example bound_curve         # maximize the bound expression
//! cargo run -p bergec5 --example bollobas_gyori      # the lower-bound construction
//! cargo run -p bergec5 --example random_corpus       # seeded maximal C5-free instances
//! cargo run -p bergec5 --example extremal_search     # exact small-n extremal values
//! cargo run -p bergec5 --example analyze_file        # full pipeline on a .h3 file
//! ```
//!
//! A thin CLI (`bergec5`) exposes the same operations on `.h3` files:
//! `check`, `structure`, `decompose`, `verify`, `bound`, `construct`,
//! `gen`, `search`, `analyze`.
//!
//! ## Quick start
//!
//! ```
//! use bergec5::{Hypergraph3, is_c5_free};
//!
//! // the complete 3-uniform hypergraph on 4 vertices
//! let h = Hypergraph3::build(4, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap();
//! assert!(is_c5_free(&h));
//! let d = bergec5::decompose::decompose(&h).unwrap();
//! assert_eq!(d.elements.len(), 1); // the shadow is one K4
//! ```

pub mod berge;
pub mod decompose;
pub mod extremal;
pub mod hypergraph;
pub mod io;
pub mod paths;
pub mod rational;
pub mod report;
pub mod structure;

pub use berge::{
    berge_girth, contains_berge, contains_berge_cycle, is_c5_free, is_linear, BergeWitness,
    PatternGraph,
};
pub use hypergraph::{Hypergraph3, ShadowGraph};
