//! Walk and path counting in the shadow, good/bad path classification, and
//! executable versions of the path-counting inequalities together with the
//! final bound maximization.
//!
//! Counting convention: every walk/path count here is ordered (a sequence
//! and its reverse are two objects). Decisions are exact — integer or
//! rational arithmetic, with square-free comparisons against `C·√n` bounds —
//! while reported `lhs`/`rhs` values are `f64` for display.

use std::collections::HashSet;

use num::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::decompose::{Decomposition, ElementKind};
use crate::hypergraph::{pair, Hypergraph3, Pair, ShadowGraph, Vertex};
use crate::rational::{rat, rat_f64, rat_int};

/// Constants pinned from the inequality proofs.
pub const C0: u64 = 5440;
pub const C1: u64 = 92160;
pub const C2: u64 = 31360;
pub const C3: u64 = 92160;
pub const C4: u64 = C1 + C2 + C3 + 2 * C0;

/// Node budget for the depth-limited path searches.
pub const PATH_SEARCH_BUDGET: u64 = 10_000_000;
/// Largest component size for the exact longest-path search.
pub const LONGEST_PATH_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PathClass {
    Good,
    Bad,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("not a path: {0}")]
pub struct NotAPath(pub String);

/// One checked instance of an inequality.
#[derive(Debug, Clone, Serialize)]
pub struct InequalityItem {
    pub subject: String,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs − lhs`; how loose the bound is at this instance.
    pub slack: f64,
    /// `lhs / rhs` when the bound is positive.
    pub ratio: Option<f64>,
    pub holds: bool,
}

impl InequalityItem {
    fn new(subject: String, lhs: f64, rhs: f64, holds: bool) -> Self {
        Self {
            subject,
            lhs,
            rhs,
            slack: rhs - lhs,
            ratio: if rhs > 0.0 { Some(lhs / rhs) } else { None },
            holds,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InequalityReport {
    pub claim: String,
    pub holds: bool,
    pub items: Vec<InequalityItem>,
    pub note: Option<String>,
}

impl InequalityReport {
    fn from_items(claim: &str, items: Vec<InequalityItem>, note: Option<String>) -> Self {
        Self {
            claim: claim.to_string(),
            holds: items.iter().all(|i| i.holds),
            items,
            note,
        }
    }

    /// Worst offender first, for compact failure messages.
    pub fn failures(&self) -> Vec<&InequalityItem> {
        self.items.iter().filter(|i| !i.holds).collect()
    }
}

/// Exact decision of `lhs ≤ base + c·√n` over the integers.
fn le_with_sqrt(lhs: i128, base: i128, c: i128, n: i128) -> bool {
    if lhs <= base {
        return true;
    }
    let d = BigInt::from(lhs - base);
    &d * &d <= BigInt::from(c) * BigInt::from(c) * BigInt::from(n)
}

/// Ordered 3-walk count via two adjacency passes: `w = A·d`, then `d·w`.
pub fn count_3walks(g: &ShadowGraph) -> u64 {
    let deg: Vec<u64> = (0..g.n()).map(|v| g.degree(v as Vertex) as u64).collect();
    let mut w = vec![0u64; g.n()];
    for (v, slot) in w.iter_mut().enumerate() {
        *slot = g.neighbors(v as Vertex).iter().map(|&u| deg[u as usize]).sum();
    }
    deg.iter().zip(&w).map(|(&d, &w)| d * w).sum()
}

/// `count_3walks(G) ≥ n·d̄_G³`, decided exactly: `walks·n² ≥ 8m³`.
pub fn blakley_roy_check(g: &ShadowGraph) -> InequalityReport {
    let walks = count_3walks(g);
    let n = g.n() as i128;
    let m = g.edge_count() as i128;
    let holds = if n == 0 {
        walks == 0
    } else {
        BigInt::from(walks) * BigInt::from(n * n) >= BigInt::from(8) * BigInt::from(m).pow(3)
    };
    let rhs = if n == 0 { 0.0 } else { 8.0 * (m as f64).powi(3) / (n as f64) / (n as f64) };
    InequalityReport::from_items(
        "blakley-roy",
        vec![InequalityItem::new("3-walks vs n·d̄³".into(), walks as f64, rhs, holds)],
        None,
    )
}

/// Both edges of the 2-path `x–y–z` lie in a common triangle of the shadow.
/// The only triangle that can contain both `xy` and `yz` is `xyz` itself,
/// so this is exactly endpoint adjacency. (Reading "in a triangle" per edge
/// would make every shadow 2-path bad, since each shadow edge sits in the
/// triangle of a witnessing hyperedge.)
fn is_bad_2path(g: &ShadowGraph, x: Vertex, _y: Vertex, z: Vertex) -> bool {
    g.has_edge(x, z)
}

/// A 2-path is bad iff both of its edges lie in a triangle of the shadow,
/// i.e. iff its endpoints are adjacent.
pub fn classify_2path(g: &ShadowGraph, x: Vertex, y: Vertex, z: Vertex) -> Result<PathClass, NotAPath> {
    if x == z || x == y || y == z {
        return Err(NotAPath(format!("{x},{y},{z} are not three distinct vertices")));
    }
    if !g.has_edge(x, y) || !g.has_edge(y, z) {
        return Err(NotAPath(format!("{x}-{y}-{z} is not a path in the shadow")));
    }
    Ok(if is_bad_2path(g, x, y, z) {
        PathClass::Bad
    } else {
        PathClass::Good
    })
}

/// A 3-path is good iff both of its 2-subpaths are good.
pub fn is_good_3path(g: &ShadowGraph, p: [Vertex; 4]) -> Result<bool, NotAPath> {
    let [a, b, c, d] = p;
    let mut sorted = p;
    sorted.sort_unstable();
    sorted.windows(2).try_for_each(|w| {
        if w[0] == w[1] {
            Err(NotAPath(format!("{p:?} repeats vertex {}", w[0])))
        } else {
            Ok(())
        }
    })?;
    if !(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d)) {
        return Err(NotAPath(format!("{p:?} is not a path in the shadow")));
    }
    Ok(classify_2path(g, a, b, c)? == PathClass::Good
        && classify_2path(g, b, c, d)? == PathClass::Good)
}

/// Ordered walk/path tallies for a shadow graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathStats {
    /// Ordered 3-walks (backtracking allowed).
    pub walks3: u64,
    /// Ordered good 3-paths (4 distinct vertices, both 2-subpaths good).
    pub good3: u64,
    /// Ordered bad 2-paths.
    pub bad2: u64,
    /// Ordered good 2-paths starting at each vertex.
    pub good2_from: Vec<u64>,
}

pub fn count_good_3paths(g: &ShadowGraph) -> PathStats {
    let mut bad2 = 0u64;
    let mut good2_from = vec![0u64; g.n()];
    for y in 0..g.n() as Vertex {
        for &x in g.neighbors(y) {
            for &z in g.neighbors(y) {
                if x == z {
                    continue;
                }
                if is_bad_2path(g, x, y, z) {
                    bad2 += 1;
                } else {
                    good2_from[x as usize] += 1;
                }
            }
        }
    }
    let mut good3 = 0u64;
    for x1 in 0..g.n() as Vertex {
        for &x2 in g.neighbors(x1) {
            for &x0 in g.neighbors(x1) {
                if x0 == x2 {
                    continue;
                }
                if is_bad_2path(g, x0, x1, x2) {
                    continue;
                }
                for &x3 in g.neighbors(x2) {
                    if x3 == x1 || x3 == x0 {
                        continue;
                    }
                    if !is_bad_2path(g, x1, x2, x3) {
                        good3 += 1;
                    }
                }
            }
        }
    }
    PathStats {
        walks3: count_3walks(g),
        good3,
        bad2,
        good2_from,
    }
}

/// Ordered good 3-paths whose first edge is `e` (either orientation).
pub fn good_3paths_from_edge(g: &ShadowGraph, e: Pair) -> u64 {
    let mut count = 0u64;
    for (x0, x1) in [(e.0, e.1), (e.1, e.0)] {
        for &x2 in g.neighbors(x1) {
            if x2 == x0 || is_bad_2path(g, x0, x1, x2) {
                continue;
            }
            for &x3 in g.neighbors(x2) {
                if x3 == x1 || x3 == x0 {
                    continue;
                }
                if !is_bad_2path(g, x1, x2, x3) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Is there a simple path with exactly `k` edges? Depth-limited DFS with a
/// node budget; `None` when the budget runs out before a conclusion.
pub fn has_path_of_length(g: &ShadowGraph, k: usize, budget: u64) -> Option<bool> {
    if k == 0 {
        return Some(g.n() > 0);
    }
    let mut spent = 0u64;
    let mut visited = vec![false; g.n()];

    fn dfs(
        g: &ShadowGraph,
        v: Vertex,
        left: usize,
        visited: &mut [bool],
        spent: &mut u64,
        budget: u64,
    ) -> Option<bool> {
        if left == 0 {
            return Some(true);
        }
        if *spent >= budget {
            return None;
        }
        *spent += 1;
        for &w in g.neighbors(v) {
            if visited[w as usize] {
                continue;
            }
            visited[w as usize] = true;
            let sub = dfs(g, w, left - 1, visited, spent, budget);
            visited[w as usize] = false;
            match sub {
                Some(true) => return Some(true),
                Some(false) => {}
                None => return None,
            }
        }
        Some(false)
    }

    let mut inconclusive = false;
    for s in 0..g.n() as Vertex {
        if g.degree(s) == 0 {
            continue;
        }
        visited[s as usize] = true;
        let r = dfs(g, s, k, &mut visited, &mut spent, budget);
        visited[s as usize] = false;
        match r {
            Some(true) => return Some(true),
            Some(false) => {}
            None => inconclusive = true,
        }
    }
    if inconclusive {
        None
    } else {
        Some(false)
    }
}

/// Exact longest path (in edges) by exhaustive DFS. `None` when some
/// component exceeds [`LONGEST_PATH_CAP`] vertices or the budget runs out.
pub fn longest_path(g: &ShadowGraph) -> Option<usize> {
    let mut best = 0usize;
    let mut spent = 0u64;

    fn dfs(
        g: &ShadowGraph,
        v: Vertex,
        len: usize,
        visited: &mut [bool],
        best: &mut usize,
        spent: &mut u64,
    ) -> bool {
        if *spent >= PATH_SEARCH_BUDGET {
            return false;
        }
        *spent += 1;
        *best = (*best).max(len);
        for &w in g.neighbors(v) {
            if visited[w as usize] {
                continue;
            }
            visited[w as usize] = true;
            let ok = dfs(g, w, len + 1, visited, best, spent);
            visited[w as usize] = false;
            if !ok {
                return false;
            }
        }
        true
    }

    for comp in g.components() {
        if comp.len() == 1 {
            continue;
        }
        if comp.len() > LONGEST_PATH_CAP {
            return None;
        }
        let mut visited = vec![false; g.n()];
        for &s in &comp {
            visited[s as usize] = true;
            if !dfs(g, s, 0, &mut visited, &mut best, &mut spent) {
                return None;
            }
            visited[s as usize] = false;
        }
    }
    Some(best)
}

/// If the graph has no path with `k` edges, then `|E| ≤ (k−1)·|V|/2`
/// (non-isolated vertices, matching how the bound is applied to links).
pub fn erdos_gallai_check(g: &ShadowGraph, k: usize) -> InequalityReport {
    let non_isolated = (0..g.n()).filter(|&v| g.degree(v as Vertex) > 0).count();
    let lhs = rat_int(g.edge_count() as i64);
    let rhs = rat((k as i64 - 1) * non_isolated as i64, 2);
    let edge_bound = lhs <= rhs;
    let premise = has_path_of_length(g, k, PATH_SEARCH_BUDGET);
    let (holds, note) = match premise {
        Some(false) => (edge_bound, Some(format!("no path of length {k}; bound asserted"))),
        Some(true) => (true, Some(format!("path of length {k} exists; bound vacuous"))),
        None => (true, Some("path search budget exhausted; not checked".into())),
    };
    InequalityReport::from_items(
        "erdos-gallai",
        vec![InequalityItem::new(
            format!("|E| vs (k−1)|V|/2, k={k}"),
            rat_f64(&lhs),
            rat_f64(&rhs),
            holds,
        )],
        note,
    )
}

/// Per-vertex link bound `|L_v| ≤ 2|N(v)|`, plus the structural fact behind
/// it: a C5-free hypergraph has no path of length 5 in any link.
pub fn verify_claim8(h: &Hypergraph3) -> InequalityReport {
    let g = h.shadow();
    let mut items = Vec::new();
    let mut unchecked = 0usize;
    for v in 0..h.n() as Vertex {
        let lhs = h.degree(v);
        let rhs = 2 * g.degree(v);
        items.push(InequalityItem::new(
            format!("v={v}"),
            lhs as f64,
            rhs as f64,
            lhs <= rhs,
        ));
        match has_path_of_length(&h.link(v), 5, PATH_SEARCH_BUDGET) {
            Some(false) => {}
            Some(true) => items.push(InequalityItem::new(
                format!("v={v} (path of length 5 in link)"),
                1.0,
                0.0,
                false,
            )),
            None => unchecked += 1,
        }
    }
    let note = if unchecked > 0 {
        Some(format!("no-P5 link check skipped for {unchecked} vertices (budget)"))
    } else {
        Some("no-P5 link check passed for all vertices".into())
    };
    InequalityReport::from_items("claim8", items, note)
}

/// `G_v`: edges of the shadow inside `N(v)` that are witnessed by a
/// hyperedge avoiding `v`.
fn neighborhood_graph_without(h: &Hypergraph3, g: &ShadowGraph, v: Vertex) -> ShadowGraph {
    let nbrs = g.neighbors(v);
    let mut pairs = Vec::new();
    for (i, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[i + 1..] {
            let ids = h.pair_edges(pair(x, y));
            if ids.iter().any(|&id| !h.edge(id).contains(&v)) {
                pairs.push(pair(x, y));
            }
        }
    }
    ShadowGraph::from_pairs(h.n(), pairs)
}

/// Neighborhood density: `|G[N(v)]| < 8|N(v)|` for every non-isolated
/// vertex, with the no-P12 structural check on `G_v`.
pub fn verify_neighborhood_lemma(h: &Hypergraph3) -> InequalityReport {
    let g = h.shadow();
    let mut items = Vec::new();
    let mut unchecked = 0usize;
    for v in 0..h.n() as Vertex {
        let dg = g.degree(v);
        if dg == 0 {
            continue;
        }
        let induced = g.induced(g.neighbors(v));
        let lhs = induced.edge_count();
        let rhs = 8 * dg;
        items.push(InequalityItem::new(
            format!("v={v}"),
            lhs as f64,
            rhs as f64,
            lhs < rhs,
        ));
        match has_path_of_length(&neighborhood_graph_without(h, &g, v), 12, PATH_SEARCH_BUDGET) {
            Some(false) => {}
            Some(true) => items.push(InequalityItem::new(
                format!("v={v} (path of length 12 in G_v)"),
                1.0,
                0.0,
                false,
            )),
            None => unchecked += 1,
        }
    }
    let note = if unchecked > 0 {
        Some(format!("no-P12 check skipped for {unchecked} vertices (budget)"))
    } else {
        None
    };
    InequalityReport::from_items("neighborhood", items, note)
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("M is not a subset of N({vertex})")]
pub struct BadNeighborhoodSet {
    pub vertex: Vertex,
}

/// Good-2-path spread bound `|𝒫| < 2|M′| + 48·d_G(v)` for the good 2-paths
/// `v-x-y` with `x ∈ M ⊆ N(v)`.
pub fn verify_lemma9(
    h: &Hypergraph3,
    v: Vertex,
    m_set: &[Vertex],
) -> Result<InequalityReport, BadNeighborhoodSet> {
    let g = h.shadow();
    for &x in m_set {
        if !g.has_edge(v, x) {
            return Err(BadNeighborhoodSet { vertex: v });
        }
    }
    if g.degree(v) == 0 {
        return Ok(InequalityReport::from_items(
            "lemma9",
            Vec::new(),
            Some(format!("v={v} is isolated; vacuous")),
        ));
    }
    let mut count = 0u64;
    let mut endpoints: HashSet<Vertex> = HashSet::new();
    for &x in m_set {
        for &y in g.neighbors(x) {
            if y == v {
                continue;
            }
            if !is_bad_2path(&g, v, x, y) {
                count += 1;
                endpoints.insert(y);
            }
        }
    }
    let lhs = count;
    let rhs = 2 * endpoints.len() as u64 + 48 * g.degree(v) as u64;
    Ok(InequalityReport::from_items(
        "lemma9",
        vec![InequalityItem::new(
            format!("v={v}, |M|={}", m_set.len()),
            lhs as f64,
            rhs as f64,
            lhs < rhs,
        )],
        None,
    ))
}

/// Lemma 9 with `M = N(v)` for every non-isolated vertex.
pub fn verify_lemma9_all(h: &Hypergraph3) -> InequalityReport {
    let g = h.shadow();
    let mut items = Vec::new();
    for v in 0..h.n() as Vertex {
        if g.degree(v) == 0 {
            continue;
        }
        let rep = verify_lemma9(h, v, g.neighbors(v)).expect("N(v) ⊆ N(v)");
        items.extend(rep.items);
    }
    InequalityReport::from_items("lemma9", items, None)
}

/// Good 3-path lower bound `good3 ≥ n·d̄_G³ − C0·n^{3/2}·d̄_G`.
/// At desk scale the right side is negative, so this is reported as
/// trivially satisfied rather than treated as informative.
pub fn verify_claim12(h: &Hypergraph3) -> InequalityReport {
    let g = h.shadow();
    let stats = count_good_3paths(&g);
    let n = g.n() as i128;
    let m = g.edge_count() as i128;
    // good3 ≥ 8m³/n² − 2·C0·m·√n  ⟺  8m³ − good3·n² ≤ 2·C0·m·n²·√n
    let holds = if n == 0 {
        true
    } else {
        let delta = BigInt::from(8) * BigInt::from(m).pow(3)
            - BigInt::from(stats.good3) * BigInt::from(n * n);
        if delta <= BigInt::from(0) {
            true
        } else {
            let c = BigInt::from(2) * BigInt::from(C0) * BigInt::from(m) * BigInt::from(n * n);
            &delta * &delta <= &c * &c * BigInt::from(n)
        }
    };
    let nf = n as f64;
    let davg = if n == 0 { 0.0 } else { 2.0 * m as f64 / nf };
    let rhs = nf * davg.powi(3) - C0 as f64 * nf.powf(1.5) * davg;
    InequalityReport::from_items(
        "claim12",
        vec![InequalityItem::new(
            "good 3-paths vs n·d̄³ − C0·n^{3/2}·d̄".into(),
            stats.good3 as f64,
            rhs,
            holds,
        )],
        Some("lower bound; negative at desk scale".into()),
    )
}

/// Per-element good-3-path upper bounds: triangles `≤ 8n + C1·√n`,
/// 2-paths `≤ 4n + C2·√n`, K4's `≤ 6n + C3·√n`. The constants make these
/// loose at desk scale; observed/bound ratios are part of the report.
pub fn verify_claims13_14_15(h: &Hypergraph3, d: &Decomposition) -> Vec<InequalityReport> {
    let g = h.shadow();
    let n = h.n() as i128;
    let nf = n as f64;
    let sqrt_n = nf.sqrt();

    let mut items13 = Vec::new();
    let mut items14 = Vec::new();
    let mut items15 = Vec::new();
    for (idx, el) in d.elements.iter().enumerate() {
        let lhs: u64 = el
            .kind
            .edges()
            .into_iter()
            .map(|e| good_3paths_from_edge(&g, e))
            .sum();
        match el.kind {
            ElementKind::Triangle { .. } => {
                let holds = le_with_sqrt(lhs as i128, 8 * n, C1 as i128, n);
                items13.push(InequalityItem::new(
                    format!("element#{idx} (triangle)"),
                    lhs as f64,
                    8.0 * nf + C1 as f64 * sqrt_n,
                    holds,
                ));
            }
            ElementKind::Path2 { .. } => {
                let holds = le_with_sqrt(lhs as i128, 4 * n, C2 as i128, n);
                items14.push(InequalityItem::new(
                    format!("element#{idx} (2-path)"),
                    lhs as f64,
                    4.0 * nf + C2 as f64 * sqrt_n,
                    holds,
                ));
            }
            ElementKind::K4 { .. } => {
                let holds = le_with_sqrt(lhs as i128, 6 * n, C3 as i128, n);
                items15.push(InequalityItem::new(
                    format!("element#{idx} (K4)"),
                    lhs as f64,
                    6.0 * nf + C3 as f64 * sqrt_n,
                    holds,
                ));
            }
        }
    }
    let note = Some("asymptotic constants; expect large slack at small n".to_string());
    vec![
        InequalityReport::from_items("claim13", items13, note.clone()),
        InequalityReport::from_items("claim14", items14, note.clone()),
        InequalityReport::from_items("claim15", items15, note),
    ]
}

/// Report-only comparison of the maximum shadow degree against `160·√n`,
/// before and after peeling. The bound is a proof device conditioned on the
/// peeling normalization, so nothing is asserted.
#[derive(Debug, Clone, Serialize)]
pub struct MaxDegreeReport {
    pub max_shadow_degree: usize,
    pub threshold: f64,
    pub exceeded: bool,
    pub peeled_max_shadow_degree: usize,
    pub peeled_threshold: f64,
    pub peeled_exceeded: bool,
}

pub fn max_degree_report(h: &Hypergraph3) -> MaxDegreeReport {
    // exact: max_dg² > 160²·n
    let exceeds = |max_dg: usize, n: usize| (max_dg as u128).pow(2) > 160u128 * 160 * n as u128;
    let g = h.shadow();
    let max_dg = (0..h.n()).map(|v| g.degree(v as Vertex)).max().unwrap_or(0);
    let peeled = h.peel(rat(1, 3));
    let pg = peeled.hypergraph.shadow();
    let pmax = (0..peeled.hypergraph.n())
        .map(|v| pg.degree(v as Vertex))
        .max()
        .unwrap_or(0);
    MaxDegreeReport {
        max_shadow_degree: max_dg,
        threshold: 160.0 * (h.n() as f64).sqrt(),
        exceeded: exceeds(max_dg, h.n()),
        peeled_max_shadow_degree: pmax,
        peeled_threshold: 160.0 * (peeled.hypergraph.n() as f64).sqrt(),
        peeled_exceeded: exceeds(pmax, peeled.hypergraph.n()),
    }
}

/// The final bound expression and its maximization over the simplex.
#[derive(Debug, Clone, Serialize)]
pub struct BoundCurve {
    pub maximizer: (f64, f64),
    pub maximum: f64,
    pub grid_step: f64,
    /// Conservative error bound from the final refinement step width.
    pub error_bound: f64,
}

/// `B(α1, α2) = ((4 − 2α1 − α2)/12) · sqrt((5α1 + 3α2 + 3)/6)`.
pub fn bound_value(a1: f64, a2: f64) -> f64 {
    ((4.0 - 2.0 * a1 - a2) / 12.0) * ((5.0 * a1 + 3.0 * a2 + 3.0) / 6.0).sqrt()
}

/// Grid search over `{α1, α2 ≥ 0, α1 + α2 ≤ 1}` followed by nested local
/// refinement. The gradient of `B` is bounded by 1 on the simplex, so the
/// final step width gives a conservative error bound.
pub fn maximize_bound_with_step(step: f64) -> BoundCurve {
    assert!(step > 0.0 && step <= 0.1, "grid step must be in (0, 0.1]");
    let mut best = (f64::MIN, 0.0f64, 0.0f64);
    let cells = (1.0 / step).ceil() as usize;
    for i in 0..=cells {
        let a1 = (i as f64 * step).min(1.0);
        for j in 0..=cells {
            let a2 = (j as f64 * step).min(1.0 - a1);
            let v = bound_value(a1, a2);
            if v > best.0 {
                best = (v, a1, a2);
            }
            if a2 >= 1.0 - a1 {
                break;
            }
        }
    }

    // local nested grids: shrink the window by 10x per round
    let mut radius = step;
    let mut sub = step / 10.0;
    for _ in 0..7 {
        let (_, c1, c2) = best;
        let lo1 = (c1 - radius).max(0.0);
        let hi1 = (c1 + radius).min(1.0);
        let mut a1 = lo1;
        while a1 <= hi1 + sub / 2.0 {
            let lo2 = (c2 - radius).max(0.0);
            let hi2 = (c2 + radius).min(1.0 - a1);
            let mut a2 = lo2.min(hi2);
            while a2 <= hi2 + sub / 2.0 {
                let v = bound_value(a1, a2.min(1.0 - a1));
                if v > best.0 {
                    best = (v, a1, a2.min(1.0 - a1));
                }
                a2 += sub;
            }
            a1 += sub;
        }
        radius = sub * 2.0;
        sub /= 10.0;
    }

    BoundCurve {
        maximizer: (best.1, best.2),
        maximum: best.0,
        grid_step: step,
        error_bound: (sub * 40.0).max(1e-12),
    }
}

pub fn maximize_bound() -> BoundCurve {
    maximize_bound_with_step(1e-3)
}
