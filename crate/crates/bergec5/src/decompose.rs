//! Edge decomposition of the 2-shadow into 2-paths, triangles and K4's,
//! driven by the block/core structure, plus the α-statistics and the exact
//! hyperedge-count identity and per-element provenance checks.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::berge::{contains_berge_cycle, BergeWitness};
use crate::hypergraph::{pair, triple_pairs, Hypergraph3, HyperedgeId, Pair, ShadowGraph, Vertex};
use crate::rational::{rat_int, rat_str, Rational};
use crate::structure::{blocks, core_unchecked, shape_of, CoreShape};

/// One element of the decomposition together with where it came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompElement {
    pub kind: ElementKind,
    /// Block the element was emitted from.
    pub block: usize,
    /// Hyperedges backing the element (one for paths/triangles, four for K4).
    pub provenance: Vec<HyperedgeId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ElementKind {
    /// The path `a – mid – b`, consuming edges `{a,mid}` and `{mid,b}`.
    Path2 { a: Vertex, mid: Vertex, b: Vertex },
    Triangle { vertices: [Vertex; 3] },
    K4 { vertices: [Vertex; 4] },
}

impl ElementKind {
    /// Shadow edges consumed by this element.
    pub fn edges(&self) -> Vec<Pair> {
        match *self {
            ElementKind::Path2 { a, mid, b } => vec![pair(a, mid), pair(mid, b)],
            ElementKind::Triangle { vertices: [a, b, c] } => {
                vec![pair(a, b), pair(a, c), pair(b, c)]
            }
            ElementKind::K4 { vertices: [a, b, c, d] } => vec![
                pair(a, b),
                pair(a, c),
                pair(a, d),
                pair(b, c),
                pair(b, d),
                pair(c, d),
            ],
        }
    }
}

/// A validated partition of the shadow edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub elements: Vec<DecompElement>,
    /// Shadow edge → index of the owning element.
    #[serde(serialize_with = "edge_owner_entries")]
    pub edge_owner: BTreeMap<Pair, usize>,
}

fn edge_owner_entries<S: serde::Serializer>(
    map: &BTreeMap<Pair, usize>,
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_seq(map.iter().map(|(&p, &idx)| (p, idx)))
}

#[derive(Debug, Error)]
pub enum DecomposeError {
    #[error("input contains a Berge-C5; the decomposition is only defined for C5-free hypergraphs")]
    NotC5Free { witness: Box<BergeWitness> },
    #[error("structural precondition violated: {detail}")]
    StructureViolation { detail: String },
}

/// Classifies the failure: a fresh C5 search distinguishes a wrong caller
/// certificate from an internal bug (the latter is impossible for genuinely
/// C5-free inputs).
fn fail(h: &Hypergraph3, detail: String) -> DecomposeError {
    match contains_berge_cycle(h, 5).expect("5 >= 2") {
        Some(w) => DecomposeError::NotC5Free { witness: Box::new(w) },
        None => DecomposeError::StructureViolation { detail },
    }
}

fn crown_elements(
    block_id: usize,
    anchor: Pair,
    tips_with_ids: &[(Vertex, HyperedgeId)],
) -> Vec<DecompElement> {
    let (a, b) = anchor;
    let mut out = Vec::with_capacity(tips_with_ids.len());
    // triangle on the smallest tip, 2-paths a–tip–b for the rest
    let (c1, id1) = tips_with_ids[0];
    out.push(DecompElement {
        kind: ElementKind::Triangle {
            vertices: {
                let mut v = [a, b, c1];
                v.sort_unstable();
                v
            },
        },
        block: block_id,
        provenance: vec![id1],
    });
    for &(c, id) in &tips_with_ids[1..] {
        out.push(DecompElement {
            kind: ElementKind::Path2 { a, mid: c, b },
            block: block_id,
            provenance: vec![id],
        });
    }
    out
}

fn block_elements(h: &Hypergraph3, block_id: usize, hids: &[HyperedgeId]) -> Result<Vec<DecompElement>, String> {
    let block = crate::structure::Block {
        id: block_id,
        hyperedges: hids.to_vec(),
    };
    let core_ids = core_unchecked(h, &block);
    let mut out = Vec::new();

    let tips_of_crown = |ids: &[HyperedgeId], anchor: Pair| -> Vec<(Vertex, HyperedgeId)> {
        let mut tips: Vec<(Vertex, HyperedgeId)> = ids
            .iter()
            .map(|&id| {
                let t = h.edge(id);
                let tip = t
                    .iter()
                    .copied()
                    .find(|&v| v != anchor.0 && v != anchor.1)
                    .unwrap();
                (tip, id)
            })
            .collect();
        tips.sort_unstable();
        tips
    };

    if core_ids.is_empty() {
        // the whole block must be a crown
        let Some(CoreShape::Crown { pair: anchor, .. }) = shape_of(h, hids) else {
            return Err(format!("block {block_id} has an empty core but is not a crown"));
        };
        out.extend(crown_elements(block_id, anchor, &tips_of_crown(hids, anchor)));
        return Ok(out);
    }

    // thin hyperedges outside the core become 2-paths over their thin pairs
    for &id in hids {
        if core_ids.contains(&id) {
            continue;
        }
        let t = h.edge(id);
        let thin: Vec<Pair> = triple_pairs(&t)
            .iter()
            .copied()
            .filter(|&p| h.pair_edges(p).len() == 1)
            .collect();
        if thin.len() != 2 {
            return Err(format!(
                "thin hyperedge {id} in block {block_id} has {} thin pairs, expected exactly 2",
                thin.len()
            ));
        }
        // the two thin pairs share the middle vertex
        let (p1, p2) = (thin[0], thin[1]);
        let mid = if p1.0 == p2.0 || p1.0 == p2.1 { p1.0 } else { p1.1 };
        let mut ends: Vec<Vertex> = [p1.0, p1.1, p2.0, p2.1]
            .into_iter()
            .filter(|&v| v != mid)
            .collect();
        ends.sort_unstable();
        out.push(DecompElement {
            kind: ElementKind::Path2 {
                a: ends[0],
                mid,
                b: ends[1],
            },
            block: block_id,
            provenance: vec![id],
        });
    }

    // then the core's own shadow
    match shape_of(h, &core_ids) {
        Some(CoreShape::Crown { pair: anchor, .. }) => {
            out.extend(crown_elements(
                block_id,
                anchor,
                &tips_of_crown(&core_ids, anchor),
            ));
        }
        Some(CoreShape::F1 { pivot, rim }) => {
            // paths r0–r1–p, r1–r2–p, p–r0–r2 partition the six pairs
            let [r0, r1, r2] = rim;
            let find_id = |t: [Vertex; 3]| -> Result<HyperedgeId, String> {
                let mut s = t;
                s.sort_unstable();
                core_ids
                    .iter()
                    .copied()
                    .find(|&id| h.edge(id) == s)
                    .ok_or_else(|| format!("F1 core in block {block_id} is missing {s:?}"))
            };
            out.push(DecompElement {
                kind: ElementKind::Path2 { a: r0, mid: r1, b: pivot },
                block: block_id,
                provenance: vec![find_id([r0, r1, pivot])?],
            });
            out.push(DecompElement {
                kind: ElementKind::Path2 { a: r1, mid: r2, b: pivot },
                block: block_id,
                provenance: vec![find_id([r1, r2, pivot])?],
            });
            out.push(DecompElement {
                kind: ElementKind::Path2 { a: pivot, mid: r0, b: r2 },
                block: block_id,
                provenance: vec![find_id([pivot, r0, r2])?],
            });
        }
        Some(CoreShape::F2 { center, ring }) => {
            let [a, b, c, d] = ring;
            for (x, y) in [(a, b), (b, c), (c, d), (d, a)] {
                let mut t = [x, y, center];
                t.sort_unstable();
                let id = core_ids
                    .iter()
                    .copied()
                    .find(|&id| h.edge(id) == t)
                    .ok_or_else(|| format!("F2 core in block {block_id} is missing {t:?}"))?;
                out.push(DecompElement {
                    kind: ElementKind::Path2 { a: x, mid: y, b: center },
                    block: block_id,
                    provenance: vec![id],
                });
            }
        }
        Some(CoreShape::K43 { vertices }) => {
            out.push(DecompElement {
                kind: ElementKind::K4 { vertices },
                block: block_id,
                provenance: core_ids.clone(),
            });
        }
        Some(CoreShape::Empty) => unreachable!("nonempty core classified as empty"),
        None => {
            return Err(format!(
                "core of block {block_id} matches none of the five shapes"
            ));
        }
    }
    Ok(out)
}

/// Decomposes the shadow of a Berge-C5-free hypergraph into 2-paths,
/// triangles and K4's. Per block: thin hyperedges outside the core emit the
/// 2-path over their thin pairs, and the core's shadow is partitioned
/// according to its shape (crown → triangle plus tip paths, F1 → 3 paths,
/// F2 → 4 paths, K4³ → one K4). The result is a validated exact partition.
///
/// Blocks are processed in parallel; elements are concatenated in block-id
/// order, so the output is deterministic.
pub fn decompose(h: &Hypergraph3) -> Result<Decomposition, DecomposeError> {
    let bs = blocks(h);
    let per_block: Vec<Result<Vec<DecompElement>, String>> = bs
        .par_iter()
        .map(|b| block_elements(h, b.id, &b.hyperedges))
        .collect();

    let mut elements = Vec::new();
    for r in per_block {
        match r {
            Ok(els) => elements.extend(els),
            Err(detail) => return Err(fail(h, detail)),
        }
    }

    // validate the exact-partition invariant
    let g = h.shadow();
    let mut edge_owner: BTreeMap<Pair, usize> = BTreeMap::new();
    for (idx, el) in elements.iter().enumerate() {
        for p in el.kind.edges() {
            if !g.has_edge(p.0, p.1) {
                return Err(fail(
                    h,
                    format!("element {idx} uses pair {p:?} outside the shadow"),
                ));
            }
            if let Some(prev) = edge_owner.insert(p, idx) {
                return Err(fail(
                    h,
                    format!("pair {p:?} owned by both element {prev} and element {idx}"),
                ));
            }
        }
    }
    if edge_owner.len() != g.edge_count() {
        return Err(fail(
            h,
            format!(
                "decomposition covers {} of {} shadow edges",
                edge_owner.len(),
                g.edge_count()
            ),
        ));
    }
    Ok(Decomposition { elements, edge_owner })
}

/// Edge fractions of the decomposition, kept as exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaStats {
    /// Fraction of shadow edges lying in triangle elements.
    pub alpha1: Rational,
    /// Fraction of shadow edges lying in 2-path elements.
    pub alpha2: Rational,
    /// 1 − α1 − α2.
    pub alpha_k4: Rational,
    pub triangles: usize,
    pub paths: usize,
    pub k4s: usize,
    pub shadow_edges: usize,
}

pub fn alpha_stats(d: &Decomposition, g: &ShadowGraph) -> AlphaStats {
    let mut triangles = 0usize;
    let mut paths = 0usize;
    let mut k4s = 0usize;
    for el in &d.elements {
        match el.kind {
            ElementKind::Path2 { .. } => paths += 1,
            ElementKind::Triangle { .. } => triangles += 1,
            ElementKind::K4 { .. } => k4s += 1,
        }
    }
    let m = g.edge_count();
    let frac = |count: usize| {
        if m == 0 {
            rat_int(0)
        } else {
            Rational::new((count as i64).into(), (m as i64).into())
        }
    };
    let alpha1 = frac(3 * triangles);
    let alpha2 = frac(2 * paths);
    let alpha_k4 = rat_int(1) - alpha1.clone() - alpha2.clone();
    AlphaStats {
        alpha1,
        alpha2,
        alpha_k4: if m == 0 { rat_int(0) } else { alpha_k4 },
        triangles,
        paths,
        k4s,
        shadow_edges: m,
    }
}

/// Exact identity `|H| = (α1/3 + α2/2 + 2(1−α1−α2)/3)·|G|`.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub claim: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

pub fn verify_claim6(h: &Hypergraph3, d: &Decomposition) -> IdentityReport {
    let g = h.shadow();
    let a = alpha_stats(d, &g);
    let lhs = rat_int(h.edge_count() as i64);
    let rhs = (a.alpha1.clone() / rat_int(3)
        + a.alpha2.clone() / rat_int(2)
        + rat_int(2) * a.alpha_k4.clone() / rat_int(3))
        * rat_int(g.edge_count() as i64);
    IdentityReport {
        claim: "claim6".into(),
        holds: lhs == rhs,
        lhs: rat_str(&lhs),
        rhs: rat_str(&rhs),
    }
}

/// Provenance checks: a triangle element is the shadow of a hyperedge, a
/// 2-path `a–mid–b` is backed by the hyperedge `{a,mid,b}` with `{a,b}` fat,
/// and a K4 element is the shadow of a full K4³.
#[derive(Debug, Clone, Serialize)]
pub struct Obs7Report {
    pub holds: bool,
    pub violations: Vec<String>,
}

pub fn verify_observation7(h: &Hypergraph3, elements: &[DecompElement]) -> Obs7Report {
    let mut violations = Vec::new();
    for (idx, el) in elements.iter().enumerate() {
        match el.kind {
            ElementKind::Triangle { vertices } => {
                if !h.contains_triple(&vertices) {
                    violations.push(format!(
                        "element {idx}: triangle {vertices:?} is not a hyperedge"
                    ));
                }
            }
            ElementKind::Path2 { a, mid, b } => {
                let mut t = [a, mid, b];
                t.sort_unstable();
                if !h.contains_triple(&t) {
                    violations.push(format!(
                        "element {idx}: 2-path {a}-{mid}-{b} is not backed by a hyperedge"
                    ));
                }
                if h.pair_edges(pair(a, b)).len() < 2 {
                    violations.push(format!(
                        "element {idx}: endpoint pair ({a}, {b}) of the 2-path is thin"
                    ));
                }
            }
            ElementKind::K4 { vertices: [a, b, c, d] } => {
                for t in [[a, b, c], [a, b, d], [a, c, d], [b, c, d]] {
                    let mut s = t;
                    s.sort_unstable();
                    if !h.contains_triple(&s) {
                        violations.push(format!(
                            "element {idx}: K4 element is missing hyperedge {s:?}"
                        ));
                    }
                }
            }
        }
    }
    Obs7Report {
        holds: violations.is_empty(),
        violations,
    }
}
