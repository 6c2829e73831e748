//! Thin/fat pairs, tightly-connected blocks, cores, and core classification.
//!
//! Hyperedges sharing two vertices are chained into maximal blocks; removing
//! the thin hyperedges of a block leaves its core. For a hypergraph with no
//! Berge-C5 the core is always empty, a crown, F1, F2 or K4³, and the
//! classifier reports `Unclassifiable` (with a cycle recheck) otherwise.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::berge::{contains_berge_cycle, BergeWitness};
use crate::hypergraph::{pair, Hypergraph3, HyperedgeId, Pair, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PairKind {
    Thin,
    Fat,
}

/// Thin/fat classification of every covered pair. Thin ⟺ codegree 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairClass {
    map: BTreeMap<Pair, PairKind>,
}

impl PairClass {
    pub fn kind(&self, u: Vertex, v: Vertex) -> Option<PairKind> {
        self.map.get(&pair(u, v)).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Pair, &PairKind)> {
        self.map.iter()
    }

    pub fn thin_count(&self) -> usize {
        self.map.values().filter(|&&k| k == PairKind::Thin).count()
    }

    pub fn fat_count(&self) -> usize {
        self.map.values().filter(|&&k| k == PairKind::Fat).count()
    }
}

pub fn classify_pairs(h: &Hypergraph3) -> PairClass {
    let map = h
        .pair_entries()
        .map(|(&p, ids)| {
            let kind = if ids.len() == 1 {
                PairKind::Thin
            } else {
                PairKind::Fat
            };
            (p, kind)
        })
        .collect();
    PairClass { map }
}

/// Hyperedges with at least two thin pairs, ascending.
pub fn thin_hyperedges(h: &Hypergraph3) -> Vec<HyperedgeId> {
    (0..h.edge_count())
        .filter(|&id| {
            let t = h.edge(id);
            let thin = crate::hypergraph::triple_pairs(&t)
                .iter()
                .filter(|&&p| h.pair_edges(p).len() == 1)
                .count();
            thin >= 2
        })
        .collect()
}

/// A maximal set of tightly-connected hyperedges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Block {
    pub id: usize,
    pub hyperedges: Vec<HyperedgeId>,
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(len: usize) -> Self {
        Self {
            parent: (0..len).collect(),
            size: vec![1; len],
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut x = x;
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}

/// Partition of the hyperedges into blocks: connected components of the
/// "share two vertices" relation, read off the pair index. Blocks are
/// ordered by their smallest hyperedge id.
pub fn blocks(h: &Hypergraph3) -> Vec<Block> {
    let mut uf = UnionFind::new(h.edge_count());
    for (_, ids) in h.pair_entries() {
        for w in ids.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    let mut by_root: BTreeMap<usize, Vec<HyperedgeId>> = BTreeMap::new();
    for id in 0..h.edge_count() {
        let root = uf.find(id);
        by_root.entry(root).or_default().push(id);
    }
    let mut groups: Vec<Vec<HyperedgeId>> = by_root.into_values().collect();
    groups.sort_by_key(|g| g[0]);
    groups
        .into_iter()
        .enumerate()
        .map(|(id, hyperedges)| Block { id, hyperedges })
        .collect()
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("the given hyperedge set is not a block of this hypergraph")]
    NotABlock,
}

fn check_is_block(h: &Hypergraph3, b: &Block) -> Result<(), StructureError> {
    let all = blocks(h);
    if all
        .iter()
        .any(|real| real.hyperedges == b.hyperedges)
    {
        Ok(())
    } else {
        Err(StructureError::NotABlock)
    }
}

/// The core of a block: the block minus its thin hyperedges. Thinness is
/// measured by codegrees in the full hypergraph; since every hyperedge
/// containing a pair lies in the same block, block-local codegrees coincide
/// (asserted here).
pub fn core(h: &Hypergraph3, b: &Block) -> Result<Vec<HyperedgeId>, StructureError> {
    check_is_block(h, b)?;
    Ok(core_unchecked(h, b))
}

pub(crate) fn core_unchecked(h: &Hypergraph3, b: &Block) -> Vec<HyperedgeId> {
    let inside: std::collections::BTreeSet<HyperedgeId> = b.hyperedges.iter().copied().collect();
    b.hyperedges
        .iter()
        .copied()
        .filter(|&id| {
            let t = h.edge(id);
            let thin = crate::hypergraph::triple_pairs(&t)
                .iter()
                .filter(|&&p| {
                    let ids = h.pair_edges(p);
                    debug_assert!(
                        ids.iter().all(|i| inside.contains(i)),
                        "pair covered from outside its block"
                    );
                    ids.len() == 1
                })
                .count();
            thin < 2
        })
        .collect()
}

/// The five shapes a core of a Berge-C5-free hypergraph can take.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CoreShape {
    Empty,
    /// Hyperedges `abc_1, …, abc_k` through the common pair `ab`.
    Crown { pair: Pair, tips: Vec<Vertex> },
    /// Three hyperedges on four vertices (K4³ minus an edge); `pivot` is the
    /// vertex in all three hyperedges, `rim` the other three sorted.
    F1 { pivot: Vertex, rim: [Vertex; 3] },
    /// Hyperedges `oab, obc, ocd, oda`; `ring` is the outer 4-cycle starting
    /// at its smallest vertex toward its smaller neighbor.
    F2 { center: Vertex, ring: [Vertex; 4] },
    /// The complete 3-uniform hypergraph on four vertices.
    K43 { vertices: [Vertex; 4] },
}

/// Classified core of a block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoreClass {
    pub shape: CoreShape,
    pub core: Vec<HyperedgeId>,
}

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    NotABlock(#[from] StructureError),
    #[error("core of block {block} matches none of the five shapes; Berge-C5 witness {}", if c5_witness.is_some() { "found (caller's certificate was wrong)" } else { "not found" })]
    Unclassifiable {
        block: usize,
        core: Vec<HyperedgeId>,
        /// Recheck payload: a certified C5-free hypergraph cannot reach this
        /// state, so the error carries the result of a fresh cycle search.
        c5_witness: Option<Box<BergeWitness>>,
    },
}

/// Structural matcher used by both the classifier and the decomposition.
/// Shapes are tried in a fixed precedence order: Empty, K4³, F2, F1, Crown.
pub(crate) fn shape_of(h: &Hypergraph3, core_ids: &[HyperedgeId]) -> Option<CoreShape> {
    if core_ids.is_empty() {
        return Some(CoreShape::Empty);
    }
    let triples: Vec<[Vertex; 3]> = core_ids.iter().map(|&id| h.edge(id)).collect();
    let mut support: Vec<Vertex> = triples.iter().flatten().copied().collect();
    support.sort_unstable();
    support.dedup();

    // K4³: four hyperedges on four vertices.
    if triples.len() == 4 && support.len() == 4 {
        return Some(CoreShape::K43 {
            vertices: [support[0], support[1], support[2], support[3]],
        });
    }

    // F2: four hyperedges, five vertices, one common center, outer 4-cycle.
    if triples.len() == 4 && support.len() == 5 {
        let center = support
            .iter()
            .copied()
            .find(|&v| triples.iter().all(|t| t.contains(&v)))?;
        let mut outer_adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
        for t in &triples {
            let rest: Vec<Vertex> = t.iter().copied().filter(|&v| v != center).collect();
            outer_adj.entry(rest[0]).or_default().push(rest[1]);
            outer_adj.entry(rest[1]).or_default().push(rest[0]);
        }
        if outer_adj.len() != 4 || outer_adj.values().any(|nb| nb.len() != 2) {
            return None;
        }
        // walk the 4-cycle from the smallest outer vertex toward its
        // smaller neighbor
        let start = *outer_adj.keys().next().unwrap();
        let mut nbrs = outer_adj[&start].clone();
        nbrs.sort_unstable();
        let mut ring = vec![start, nbrs[0]];
        while ring.len() < 4 {
            let last = ring[ring.len() - 1];
            let prev = ring[ring.len() - 2];
            let next = outer_adj[&last]
                .iter()
                .copied()
                .find(|&w| w != prev && !ring.contains(&w))?;
            ring.push(next);
        }
        // closing edge must exist
        if !outer_adj[&ring[3]].contains(&ring[0]) {
            return None;
        }
        return Some(CoreShape::F2 {
            center,
            ring: [ring[0], ring[1], ring[2], ring[3]],
        });
    }

    // F1: three hyperedges on four vertices.
    if triples.len() == 3 && support.len() == 4 {
        let pivot = support
            .iter()
            .copied()
            .find(|&v| triples.iter().all(|t| t.contains(&v)))?;
        let rim: Vec<Vertex> = support.iter().copied().filter(|&v| v != pivot).collect();
        return Some(CoreShape::F1 {
            pivot,
            rim: [rim[0], rim[1], rim[2]],
        });
    }

    // Crown: all hyperedges share a common pair. For a single hyperedge the
    // anchor pair is ambiguous; take the lexicographically smallest.
    let first = triples[0];
    let mut candidates: Vec<Pair> = crate::hypergraph::triple_pairs(&first).to_vec();
    candidates.retain(|&(a, b)| triples.iter().all(|t| t.contains(&a) && t.contains(&b)));
    if let Some(&anchor) = candidates.first() {
        let tips: Vec<Vertex> = triples
            .iter()
            .map(|t| {
                t.iter()
                    .copied()
                    .find(|&v| v != anchor.0 && v != anchor.1)
                    .unwrap()
            })
            .collect();
        let mut sorted_tips = tips;
        sorted_tips.sort_unstable();
        return Some(CoreShape::Crown {
            pair: anchor,
            tips: sorted_tips,
        });
    }
    None
}

/// Matches the core of `b` against the five shapes. For inputs that are not
/// Berge-C5-free this is best effort: when nothing matches, the error
/// includes a fresh Berge-C5 search so a wrong caller certificate shows up.
pub fn classify_core(h: &Hypergraph3, b: &Block) -> Result<CoreClass, ClassifyError> {
    check_is_block(h, b)?;
    let core_ids = core_unchecked(h, b);
    match shape_of(h, &core_ids) {
        Some(shape) => Ok(CoreClass {
            shape,
            core: core_ids,
        }),
        None => Err(ClassifyError::Unclassifiable {
            block: b.id,
            c5_witness: contains_berge_cycle(h, 5).expect("5 >= 2").map(Box::new),
            core: core_ids,
        }),
    }
}

/// Block-level sanity from the core definition: an empty core means the
/// whole block is a crown, and otherwise every fat pair covered by the block
/// lies in the shadow of the core.
#[derive(Debug, Clone, Serialize)]
pub struct Obs6Report {
    pub holds: bool,
    pub violations: Vec<String>,
}

pub fn verify_observation6(h: &Hypergraph3) -> Obs6Report {
    let mut violations = Vec::new();
    for b in blocks(h) {
        let core_ids = core_unchecked(h, &b);
        if core_ids.is_empty() {
            let shape = shape_of(h, &b.hyperedges);
            if !matches!(shape, Some(CoreShape::Crown { .. })) {
                violations.push(format!("block {} has empty core but is not a crown", b.id));
            }
            continue;
        }
        let mut core_pairs: Vec<Pair> = core_ids
            .iter()
            .flat_map(|&id| crate::hypergraph::triple_pairs(&h.edge(id)))
            .collect();
        core_pairs.sort_unstable();
        core_pairs.dedup();
        for &id in &b.hyperedges {
            for p in crate::hypergraph::triple_pairs(&h.edge(id)) {
                if h.pair_edges(p).len() >= 2 && core_pairs.binary_search(&p).is_err() {
                    violations.push(format!(
                        "block {}: fat pair ({}, {}) not in the core shadow",
                        b.id, p.0, p.1
                    ));
                }
            }
        }
    }
    Obs6Report {
        holds: violations.is_empty(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_3() -> Hypergraph3 {
        Hypergraph3::build(4, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap()
    }

    fn crown(k: u32) -> Hypergraph3 {
        Hypergraph3::build(2 + k as usize, (0..k).map(|i| [0, 1, 2 + i])).unwrap()
    }

    fn f2() -> Hypergraph3 {
        Hypergraph3::build(5, [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 1, 4]]).unwrap()
    }

    #[test]
    fn single_hyperedge_all_pairs_thin() {
        let h = Hypergraph3::build(3, [[0, 1, 2]]).unwrap();
        let pc = classify_pairs(&h);
        assert_eq!(pc.thin_count(), 3);
        assert_eq!(pc.fat_count(), 0);
    }

    #[test]
    fn k4_3_all_pairs_fat() {
        let pc = classify_pairs(&k4_3());
        assert_eq!(pc.fat_count(), 6);
        assert_eq!(pc.thin_count(), 0);
    }

    #[test]
    fn crown2_pair_classes() {
        let pc = classify_pairs(&crown(2));
        assert_eq!(pc.kind(0, 1), Some(PairKind::Fat));
        assert_eq!(pc.kind(0, 2), Some(PairKind::Thin));
        assert_eq!(pc.kind(1, 3), Some(PairKind::Thin));
        assert_eq!(pc.fat_count(), 1);
        assert_eq!(pc.thin_count(), 4);
    }

    #[test]
    fn thin_hyperedge_examples() {
        let h = Hypergraph3::build(3, [[0, 1, 2]]).unwrap();
        assert_eq!(thin_hyperedges(&h), vec![0]);
        assert_eq!(thin_hyperedges(&k4_3()), Vec::<usize>::new());
        assert_eq!(thin_hyperedges(&crown(2)), vec![0, 1]);
    }

    #[test]
    fn sharing_one_vertex_gives_two_blocks() {
        let h = Hypergraph3::build(5, [[0, 1, 2], [2, 3, 4]]).unwrap();
        assert_eq!(blocks(&h).len(), 2);
    }

    #[test]
    fn sharing_a_pair_gives_one_block() {
        let h = Hypergraph3::build(4, [[0, 1, 2], [0, 1, 3]]).unwrap();
        let bs = blocks(&h);
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].hyperedges, vec![0, 1]);
    }

    #[test]
    fn f2_is_one_block() {
        assert_eq!(blocks(&f2()).len(), 1);
    }

    #[test]
    fn blocks_partition_every_hyperedge() {
        let h = Hypergraph3::build(7, [[0, 1, 2], [0, 1, 3], [3, 4, 5], [2, 5, 6]]).unwrap();
        let bs = blocks(&h);
        let mut all: Vec<usize> = bs.iter().flat_map(|b| b.hyperedges.clone()).collect();
        all.sort_unstable();
        assert_eq!(all, (0..h.edge_count()).collect::<Vec<_>>());
    }

    #[test]
    fn core_of_single_hyperedge_block_is_empty() {
        let h = Hypergraph3::build(3, [[0, 1, 2]]).unwrap();
        let b = &blocks(&h)[0];
        assert!(core(&h, b).unwrap().is_empty());
    }

    #[test]
    fn core_of_k4_3_is_everything() {
        let h = k4_3();
        let b = &blocks(&h)[0];
        assert_eq!(core(&h, b).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn core_rejects_non_block() {
        let h = Hypergraph3::build(5, [[0, 1, 2], [2, 3, 4]]).unwrap();
        let fake = Block {
            id: 0,
            hyperedges: vec![0, 1],
        };
        assert_eq!(core(&h, &fake).unwrap_err(), StructureError::NotABlock);
    }

    #[test]
    fn two_hyperedge_blocks_have_empty_cores() {
        // Exhaustive over the two shapes of a 2-hyperedge block: both
        // hyperedges are thin (two thin pairs each), so the core is empty.
        let shared_pair = Hypergraph3::build(4, [[0, 1, 2], [0, 1, 3]]).unwrap();
        let b = &blocks(&shared_pair)[0];
        assert!(core(&shared_pair, b).unwrap().is_empty());
    }

    #[test]
    fn core_with_fixed_thinness_rule() {
        // {oab, obc, ocd, odb} with o=0: hyperedge 0ab is thin (oa, ab thin),
        // the rest have at most one thin pair, leaving an F1 core on {0,b,c,d}.
        let h = Hypergraph3::build(5, [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 2]]).unwrap();
        let b = &blocks(&h)[0];
        let c = core(&h, b).unwrap();
        assert_eq!(c.len(), 3);
        let cls = classify_core(&h, b).unwrap();
        assert!(matches!(cls.shape, CoreShape::F1 { .. }));
    }

    #[test]
    fn classify_f2() {
        let h = f2();
        let b = &blocks(&h)[0];
        let cls = classify_core(&h, b).unwrap();
        match cls.shape {
            CoreShape::F2 { center, ring } => {
                assert_eq!(center, 0);
                assert_eq!(ring[0], 1);
                // ring is a rotation of the outer cycle 1-2-3-4
                assert_eq!(ring, [1, 2, 3, 4]);
            }
            other => panic!("expected F2, got {other:?}"),
        }
    }

    #[test]
    fn classify_f1() {
        let h = Hypergraph3::build(4, [[0, 1, 2], [1, 2, 3], [0, 2, 3]]).unwrap();
        let b = &blocks(&h)[0];
        let cls = classify_core(&h, b).unwrap();
        match cls.shape {
            CoreShape::F1 { pivot, rim } => {
                assert_eq!(pivot, 2);
                assert_eq!(rim, [0, 1, 3]);
            }
            other => panic!("expected F1, got {other:?}"),
        }
    }

    #[test]
    fn crown5_shape_from_common_pair() {
        let h = crown(5);
        match shape_of(&h, &[0, 1, 2, 3, 4]).unwrap() {
            CoreShape::Crown { pair, tips } => {
                assert_eq!(pair, (0, 1));
                assert_eq!(tips, vec![2, 3, 4, 5, 6]);
            }
            other => panic!("expected crown, got {other:?}"),
        }
        // standalone crowns consist of thin hyperedges, so the block's
        // actual core is empty
        let b = &blocks(&h)[0];
        assert_eq!(classify_core(&h, b).unwrap().shape, CoreShape::Empty);
    }

    #[test]
    fn nonempty_crown_core_via_attached_thin_hyperedges() {
        // crown {012, 013} whose tip pairs are fattened by the thin
        // hyperedges 024 and 134, so the crown survives as the core
        let h = Hypergraph3::build(5, [[0, 1, 2], [0, 1, 3], [0, 2, 4], [1, 3, 4]]).unwrap();
        let b = &blocks(&h)[0];
        let cls = classify_core(&h, b).unwrap();
        match cls.shape {
            CoreShape::Crown { pair, tips } => {
                assert_eq!(pair, (0, 1));
                assert_eq!(tips, vec![2, 3]);
            }
            other => panic!("expected crown core, got {other:?}"),
        }
        assert_eq!(cls.core, vec![0, 1]);
    }

    #[test]
    fn classify_k43() {
        let h = k4_3();
        let b = &blocks(&h)[0];
        let cls = classify_core(&h, b).unwrap();
        assert!(matches!(cls.shape, CoreShape::K43 { vertices: [0, 1, 2, 3] }));
    }

    #[test]
    fn classify_empty_core() {
        let h = crown(2);
        let b = &blocks(&h)[0];
        let cls = classify_core(&h, b).unwrap();
        assert_eq!(cls.shape, CoreShape::Empty);
        assert!(cls.core.is_empty());
    }

    #[test]
    fn crown_size_one_anchor_is_smallest_pair() {
        let h = Hypergraph3::build(4, [[1, 2, 3]]).unwrap();
        match shape_of(&h, &[0]).unwrap() {
            CoreShape::Crown { pair, tips } => {
                assert_eq!(pair, (1, 2));
                assert_eq!(tips, vec![3]);
            }
            other => panic!("expected crown, got {other:?}"),
        }
    }

    #[test]
    fn observation6_on_small_instances() {
        for h in [k4_3(), crown(3), f2(), Hypergraph3::build(3, [[0, 1, 2]]).unwrap()] {
            let rep = verify_observation6(&h);
            assert!(rep.holds, "{:?}", rep.violations);
        }
    }
}
