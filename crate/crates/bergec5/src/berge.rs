//! Berge-F containment: a hypergraph contains a Berge-F when there is an
//! injective placement of V(F) and an injective assignment of E(F) to
//! hyperedges such that each hyperedge contains the image of its graph edge.
//!
//! Two routes are provided: the production detector (embedding enumeration
//! plus maximum bipartite matching for the edge assignment) and a brute-force
//! oracle used to cross-check it, plus a specialized backtracking detector
//! for Berge cycles.

use serde::Serialize;
use thiserror::Error;

use crate::hypergraph::{pair, Hypergraph3, HyperedgeId, Vertex};

/// A small pattern graph on vertices `0..k`. Parallel edges are allowed
/// (a 2-cycle is the doubled edge), self-loops are not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternGraph {
    k: usize,
    edges: Vec<(usize, usize)>,
}

pub const MAX_PATTERN_VERTICES: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PatternError {
    #[error("pattern has {0} vertices; at most {MAX_PATTERN_VERTICES} supported")]
    TooManyVertices(usize),
    #[error("pattern vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("self-loop at pattern vertex {0}")]
    SelfLoop(usize),
    #[error("cycle length must be at least 2, got {0}")]
    CycleTooShort(usize),
    #[error("path length must be at least 1, got {0}")]
    PathTooShort(usize),
}

impl PatternGraph {
    pub fn new(k: usize, edges: Vec<(usize, usize)>) -> Result<Self, PatternError> {
        if k > MAX_PATTERN_VERTICES {
            return Err(PatternError::TooManyVertices(k));
        }
        let mut norm = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u == v {
                return Err(PatternError::SelfLoop(u));
            }
            if u >= k {
                return Err(PatternError::VertexOutOfRange(u));
            }
            if v >= k {
                return Err(PatternError::VertexOutOfRange(v));
            }
            norm.push((u.min(v), u.max(v)));
        }
        Ok(Self { k, edges: norm })
    }

    /// The cycle C_k; C_2 is the pair of parallel edges.
    pub fn cycle(k: usize) -> Result<Self, PatternError> {
        if k < 2 {
            return Err(PatternError::CycleTooShort(k));
        }
        if k == 2 {
            return Self::new(2, vec![(0, 1), (0, 1)]);
        }
        let edges = (0..k).map(|i| (i, (i + 1) % k)).collect();
        Self::new(k, edges)
    }

    /// The path with `len` edges on `len + 1` vertices.
    pub fn path(len: usize) -> Result<Self, PatternError> {
        if len < 1 {
            return Err(PatternError::PathTooShort(len));
        }
        Self::new(len + 1, (0..len).map(|i| (i, i + 1)).collect())
    }

    /// The complete graph K_k.
    pub fn complete(k: usize) -> Result<Self, PatternError> {
        let mut edges = Vec::new();
        for u in 0..k {
            for v in (u + 1)..k {
                edges.push((u, v));
            }
        }
        Self::new(k, edges)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Distinct pattern neighbors of `u` (multiplicities collapsed).
    pub fn neighbors(&self, u: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == u {
                    Some(b)
                } else if b == u {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Number of distinct neighbors. Any vertex embedded as `u` needs at
    /// least this many shadow neighbors: the pattern neighbors of `u` embed
    /// injectively, and each incident pattern edge forces its image pair
    /// into some hyperedge, hence into the shadow.
    pub fn distinct_degree(&self, u: usize) -> usize {
        self.neighbors(u).len()
    }

    fn multiplicity(&self, u: usize, v: usize) -> usize {
        let key = (u.min(v), u.max(v));
        self.edges.iter().filter(|&&e| e == key).count()
    }
}

/// Certificate for a Berge-F copy: `vmap[u]` is the image of pattern vertex
/// `u`, `emap[i]` the hyperedge assigned to the i-th pattern edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BergeWitness {
    pub vmap: Vec<Vertex>,
    pub emap: Vec<HyperedgeId>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WitnessViolation {
    #[error("vertex map has wrong arity or repeated/out-of-range images")]
    BadVertexMap,
    #[error("edge map has wrong arity or repeated/out-of-range hyperedges")]
    BadEdgeMap,
    #[error("pattern edge {index} maps to hyperedge {hyperedge} not containing its image pair")]
    NotContained { index: usize, hyperedge: HyperedgeId },
}

impl BergeWitness {
    /// Checks the witness invariants against a concrete hypergraph/pattern.
    pub fn verify(&self, h: &Hypergraph3, f: &PatternGraph) -> Result<(), WitnessViolation> {
        if self.vmap.len() != f.k() {
            return Err(WitnessViolation::BadVertexMap);
        }
        let mut seen = self.vmap.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != self.vmap.len() || self.vmap.iter().any(|&v| (v as usize) >= h.n()) {
            return Err(WitnessViolation::BadVertexMap);
        }
        if self.emap.len() != f.edges().len() {
            return Err(WitnessViolation::BadEdgeMap);
        }
        let mut ids = self.emap.clone();
        ids.sort_unstable();
        ids.dedup();
        if ids.len() != self.emap.len() || self.emap.iter().any(|&id| id >= h.edge_count()) {
            return Err(WitnessViolation::BadEdgeMap);
        }
        for (i, &(u, v)) in f.edges().iter().enumerate() {
            let t = h.edge(self.emap[i]);
            let (a, b) = (self.vmap[u], self.vmap[v]);
            if !t.contains(&a) || !t.contains(&b) {
                return Err(WitnessViolation::NotContained {
                    index: i,
                    hyperedge: self.emap[i],
                });
            }
        }
        Ok(())
    }
}

/// Kuhn's augmenting-path maximum matching; returns a full left matching
/// if one exists. Left side is the pattern edge list, so it stays tiny.
fn perfect_matching(candidates: &[Vec<usize>], right_count: usize) -> Option<Vec<usize>> {
    let mut match_right: Vec<Option<usize>> = vec![None; right_count];

    fn augment(
        u: usize,
        candidates: &[Vec<usize>],
        visited: &mut [bool],
        match_right: &mut [Option<usize>],
    ) -> bool {
        for &r in &candidates[u] {
            if visited[r] {
                continue;
            }
            visited[r] = true;
            if match_right[r].is_none()
                || augment(match_right[r].unwrap(), candidates, visited, match_right)
            {
                match_right[r] = Some(u);
                return true;
            }
        }
        false
    }

    for u in 0..candidates.len() {
        let mut visited = vec![false; right_count];
        if !augment(u, candidates, &mut visited, &mut match_right) {
            return None;
        }
    }
    let mut match_left = vec![usize::MAX; candidates.len()];
    for (r, &m) in match_right.iter().enumerate() {
        if let Some(u) = m {
            match_left[u] = r;
        }
    }
    Some(match_left)
}

/// Embedding order: start from the highest-degree pattern vertex, then
/// greedily prefer vertices with the most already-placed neighbors so the
/// partial embedding stays connected and candidate sets stay small.
fn embedding_order(f: &PatternGraph) -> Vec<usize> {
    let k = f.k();
    let mut order = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    for _ in 0..k {
        let mut best: Option<(usize, usize, usize)> = None; // (placed_nbrs, degree, vertex)
        for u in 0..k {
            if placed[u] {
                continue;
            }
            let pn = f.neighbors(u).iter().filter(|&&w| placed[w]).count();
            let key = (pn, f.distinct_degree(u), u);
            let better = match best {
                None => true,
                Some((bpn, bdeg, bu)) => {
                    (key.0, key.1) > (bpn, bdeg) || ((key.0, key.1) == (bpn, bdeg) && u < bu)
                }
            };
            if better {
                best = Some(key);
            }
        }
        let (_, _, u) = best.unwrap();
        placed[u] = true;
        order.push(u);
    }
    order
}

/// Decides Berge-F containment and returns a witness when one exists.
///
/// Injective vertex embeddings are enumerated with two sound prunes
/// (shadow adjacency of completed pattern edges, and the shadow-degree
/// lower bound from [`PatternGraph::distinct_degree`]); the edge-to-hyperedge
/// assignment is then decided by maximum bipartite matching.
pub fn contains_berge(h: &Hypergraph3, f: &PatternGraph) -> Option<BergeWitness> {
    if f.edges().len() > h.edge_count() || f.k() > h.n() {
        return None;
    }
    if f.edges().is_empty() {
        return Some(BergeWitness {
            vmap: (0..f.k() as Vertex).collect(),
            emap: Vec::new(),
        });
    }
    let g = h.shadow();
    let order = embedding_order(f);
    let mut vmap: Vec<Option<Vertex>> = vec![None; f.k()];
    let mut used = vec![false; h.n()];

    fn rec(
        pos: usize,
        order: &[usize],
        f: &PatternGraph,
        h: &Hypergraph3,
        g: &crate::hypergraph::ShadowGraph,
        vmap: &mut Vec<Option<Vertex>>,
        used: &mut Vec<bool>,
    ) -> Option<BergeWitness> {
        if pos == order.len() {
            return assign_edges(h, f, vmap);
        }
        let u = order[pos];
        let need = f.distinct_degree(u);
        let placed_nbrs: Vec<usize> = f
            .neighbors(u)
            .into_iter()
            .filter(|&w| vmap[w].is_some())
            .collect();

        let try_vertex = |v: Vertex,
                          vmap: &mut Vec<Option<Vertex>>,
                          used: &mut Vec<bool>|
         -> Option<BergeWitness> {
            if used[v as usize] || g.degree(v) < need {
                return None;
            }
            for &w in &placed_nbrs {
                let img = vmap[w].unwrap();
                if !g.has_edge(v, img) {
                    return None;
                }
                if h.pair_edges(pair(v, img)).len() < f.multiplicity(u, w) {
                    return None;
                }
            }
            vmap[u] = Some(v);
            used[v as usize] = true;
            let r = rec(pos + 1, order, f, h, g, vmap, used);
            vmap[u] = None;
            used[v as usize] = false;
            r
        };

        if !placed_nbrs.is_empty() {
            // Scan the smallest placed-neighbor adjacency list.
            let best = placed_nbrs
                .iter()
                .copied()
                .min_by_key(|&w| g.degree(vmap[w].unwrap()))
                .unwrap();
            let base = vmap[best].unwrap();
            for &v in g.neighbors(base) {
                if let Some(w) = try_vertex(v, vmap, used) {
                    return Some(w);
                }
            }
        } else {
            for v in 0..h.n() as Vertex {
                if let Some(w) = try_vertex(v, vmap, used) {
                    return Some(w);
                }
            }
        }
        None
    }

    fn assign_edges(
        h: &Hypergraph3,
        f: &PatternGraph,
        vmap: &[Option<Vertex>],
    ) -> Option<BergeWitness> {
        let mut right: Vec<HyperedgeId> = Vec::new();
        let mut right_of = std::collections::HashMap::new();
        let mut candidates: Vec<Vec<usize>> = Vec::with_capacity(f.edges().len());
        for &(u, v) in f.edges() {
            let p = pair(vmap[u].unwrap(), vmap[v].unwrap());
            let mut c = Vec::new();
            for &id in h.pair_edges(p) {
                let r = *right_of.entry(id).or_insert_with(|| {
                    right.push(id);
                    right.len() - 1
                });
                c.push(r);
            }
            if c.is_empty() {
                return None;
            }
            candidates.push(c);
        }
        let match_left = perfect_matching(&candidates, right.len())?;
        Some(BergeWitness {
            vmap: vmap.iter().map(|v| v.unwrap()).collect(),
            emap: match_left.into_iter().map(|r| right[r]).collect(),
        })
    }

    rec(0, &order, f, h, &g, &mut vmap, &mut used)
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("Berge cycle length must be at least 2, got {0}")]
pub struct CycleLengthError(pub usize);

/// Direct backtracking detector for Berge-C_k: searches alternating
/// sequences of distinct vertices and distinct hyperedges. Agrees with
/// `contains_berge(h, C_k)` by construction and is cross-checked in tests.
pub fn contains_berge_cycle(
    h: &Hypergraph3,
    k: usize,
) -> Result<Option<BergeWitness>, CycleLengthError> {
    if k < 2 {
        return Err(CycleLengthError(k));
    }
    if k > h.n() || k > h.edge_count() {
        return Ok(None);
    }

    struct State<'a> {
        h: &'a Hypergraph3,
        k: usize,
        verts: Vec<Vertex>,
        used_v: Vec<bool>,
        used_e: Vec<HyperedgeId>,
    }

    fn extend(s: &mut State) -> bool {
        let depth = s.verts.len();
        let current = *s.verts.last().unwrap();
        if depth == s.k {
            // close the cycle back to verts[0]
            let first = s.verts[0];
            for &eid in s.h.pair_edges(pair(current, first)) {
                if !s.used_e.contains(&eid) {
                    s.used_e.push(eid);
                    return true;
                }
            }
            return false;
        }
        for &eid in s.h.edges_at(current) {
            if s.used_e.contains(&eid) {
                continue;
            }
            for &w in &s.h.edge(eid) {
                // verts[0] is the minimum of the cycle, so only grow upward.
                if w == current || s.used_v[w as usize] || w < s.verts[0] {
                    continue;
                }
                s.used_e.push(eid);
                s.used_v[w as usize] = true;
                s.verts.push(w);
                if extend(s) {
                    return true;
                }
                s.verts.pop();
                s.used_v[w as usize] = false;
                s.used_e.pop();
            }
        }
        false
    }

    for start in 0..h.n() as Vertex {
        let mut s = State {
            h,
            k,
            verts: vec![start],
            used_v: vec![false; h.n()],
            used_e: Vec::with_capacity(k),
        };
        s.used_v[start as usize] = true;
        if extend(&mut s) {
            // emap[i] covers the pattern edge (i, i+1 mod k), matching
            // PatternGraph::cycle's edge order.
            return Ok(Some(BergeWitness {
                vmap: s.verts,
                emap: s.used_e,
            }));
        }
    }
    Ok(None)
}

/// No Berge cycle of length 5.
pub fn is_c5_free(h: &Hypergraph3) -> bool {
    contains_berge_cycle(h, 5).expect("5 >= 2").is_none()
}

/// Linear ⟺ every codegree is at most 1 ⟺ no Berge-C2.
pub fn is_linear(h: &Hypergraph3) -> bool {
    h.pair_entries().all(|(_, ids)| ids.len() <= 1)
}

/// Smallest `k ≥ 2` with a Berge-C_k; `None` when Berge-acyclic.
/// A Berge cycle of length k needs k distinct vertices and k distinct
/// hyperedges, so the search is bounded by `min(n, |H|)`.
pub fn berge_girth(h: &Hypergraph3) -> Option<usize> {
    for k in 2..=h.n().min(h.edge_count()) {
        if contains_berge_cycle(h, k).expect("k >= 2").is_some() {
            return Some(k);
        }
    }
    None
}

pub const ORACLE_MAX_EDGES: usize = 12;
pub const ORACLE_MAX_PATTERN: usize = 6;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("oracle limits exceeded: |H| = {m} (max {ORACLE_MAX_EDGES}), k = {k} (max {ORACLE_MAX_PATTERN})")]
pub struct OracleLimit {
    pub m: usize,
    pub k: usize,
}

/// Exhaustive reference implementation: tries every injective vertex map and
/// every edge-to-hyperedge assignment by plain backtracking, scanning the
/// hyperedge list directly. Semantically identical to [`contains_berge`].
pub fn oracle_contains_berge(
    h: &Hypergraph3,
    f: &PatternGraph,
) -> Result<Option<BergeWitness>, OracleLimit> {
    if h.edge_count() > ORACLE_MAX_EDGES || f.k() > ORACLE_MAX_PATTERN {
        return Err(OracleLimit {
            m: h.edge_count(),
            k: f.k(),
        });
    }
    if f.edges().len() > h.edge_count() || f.k() > h.n() {
        return Ok(None);
    }

    fn assign(
        i: usize,
        h: &Hypergraph3,
        f: &PatternGraph,
        vmap: &[Vertex],
        emap: &mut Vec<HyperedgeId>,
    ) -> bool {
        if i == f.edges().len() {
            return true;
        }
        let (u, v) = f.edges()[i];
        let (a, b) = (vmap[u], vmap[v]);
        for id in 0..h.edge_count() {
            if emap.contains(&id) {
                continue;
            }
            let t = h.edge(id);
            if t.contains(&a) && t.contains(&b) {
                emap.push(id);
                if assign(i + 1, h, f, vmap, emap) {
                    return true;
                }
                emap.pop();
            }
        }
        false
    }

    fn place(
        u: usize,
        h: &Hypergraph3,
        f: &PatternGraph,
        vmap: &mut Vec<Vertex>,
        used: &mut Vec<bool>,
    ) -> Option<BergeWitness> {
        if u == f.k() {
            let mut emap = Vec::new();
            if assign(0, h, f, vmap, &mut emap) {
                return Some(BergeWitness {
                    vmap: vmap.clone(),
                    emap,
                });
            }
            return None;
        }
        for v in 0..h.n() as Vertex {
            if used[v as usize] {
                continue;
            }
            vmap.push(v);
            used[v as usize] = true;
            if let Some(w) = place(u + 1, h, f, vmap, used) {
                return Some(w);
            }
            used[v as usize] = false;
            vmap.pop();
        }
        None
    }

    let mut vmap = Vec::with_capacity(f.k());
    let mut used = vec![false; h.n()];
    Ok(place(0, h, f, &mut vmap, &mut used))
}
