//! Generators and exact extremal search: the projective-plane incidence
//! construction and its triple expansion, a seeded greedy C5-free corpus
//! generator, and branch-and-bound search for the small-n extremal values.

use std::collections::{HashMap, HashSet};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::hypergraph::{pair, Hypergraph3, Pair, Triple, Vertex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("q = {0} is not prime (prime fields only)")]
    QNotPrime(u32),
    #[error("q = {0} is too large (q ≤ 13 supported)")]
    QTooLarge(u32),
    #[error("input bipartite graph contains a C4")]
    NotC4Free,
    #[error("internal construction check failed: {0}")]
    SelfCheck(String),
}

/// Parameters of the point–line incidence construction over the prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConstructionParams {
    pub q: u32,
    /// `q² + q + 1` points (and as many lines).
    pub points: usize,
}

impl ConstructionParams {
    pub fn new(q: u32) -> Result<Self, ConstructError> {
        if q > 13 {
            return Err(ConstructError::QTooLarge(q));
        }
        let is_prime = q >= 2 && (2..q).all(|d| q % d != 0);
        if !is_prime {
            return Err(ConstructError::QNotPrime(q));
        }
        Ok(Self {
            q,
            points: (q * q + q + 1) as usize,
        })
    }
}

/// Bipartite graph with parts `0..left` and `0..right`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipartiteGraph {
    pub left: usize,
    pub right: usize,
    pub edges: Vec<(u32, u32)>,
}

impl BipartiteGraph {
    /// Adjacency of the combined graph (left vertices, then right).
    fn combined_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.left + self.right];
        for &(l, r) in &self.edges {
            adj[l as usize].push(self.left + r as usize);
            adj[self.left + r as usize].push(l as usize);
        }
        adj
    }

    /// No two left vertices share two right neighbors.
    pub fn is_c4_free(&self) -> bool {
        let mut right_nbrs: Vec<Vec<u32>> = vec![Vec::new(); self.left];
        for &(l, r) in &self.edges {
            right_nbrs[l as usize].push(r);
        }
        let mut seen: HashSet<(u32, u32)> = HashSet::new();
        for nbrs in &right_nbrs {
            for i in 0..nbrs.len() {
                for j in (i + 1)..nbrs.len() {
                    let key = pair(nbrs[i], nbrs[j]);
                    if !seen.insert(key) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Shortest cycle length of an undirected graph via BFS from every vertex.
pub fn graph_girth(adj: &[Vec<usize>]) -> Option<usize> {
    let n = adj.len();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        parent.iter_mut().for_each(|p| *p = usize::MAX);
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    if best.map_or(true, |b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}

/// Point–line incidence graph of the projective plane over the prime field:
/// `q²+q+1` points and lines, `(q+1)(q²+q+1)` incidences, girth 6.
pub fn incidence_c4free_bipartite(q: u32) -> Result<BipartiteGraph, ConstructError> {
    let params = ConstructionParams::new(q)?;
    // canonical projective representatives: first nonzero coordinate is 1
    let mut reps: Vec<[u32; 3]> = Vec::with_capacity(params.points);
    for y in 0..q {
        for z in 0..q {
            reps.push([1, y, z]);
        }
    }
    for z in 0..q {
        reps.push([0, 1, z]);
    }
    reps.push([0, 0, 1]);
    debug_assert_eq!(reps.len(), params.points);

    let mut edges = Vec::with_capacity((q as usize + 1) * params.points);
    for (pi, p) in reps.iter().enumerate() {
        for (li, l) in reps.iter().enumerate() {
            let dot = (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q;
            if dot == 0 {
                edges.push((pi as u32, li as u32));
            }
        }
    }
    let g0 = BipartiteGraph {
        left: params.points,
        right: params.points,
        edges,
    };
    if g0.edges.len() != (q as usize + 1) * params.points {
        return Err(ConstructError::SelfCheck(format!(
            "incidence count {} != (q+1)(q²+q+1)",
            g0.edges.len()
        )));
    }
    if !g0.is_c4_free() {
        return Err(ConstructError::SelfCheck("incidence graph contains a C4".into()));
    }
    match graph_girth(&g0.combined_adjacency()) {
        Some(6) => Ok(g0),
        other => Err(ConstructError::SelfCheck(format!(
            "incidence graph girth {other:?}, expected 6"
        ))),
    }
}

/// Expands a C4-free bipartite graph into a Berge-C5-free hypergraph:
/// every right vertex `u` becomes the fresh pair `u1 u2`, and each edge
/// `uv` becomes the triple `u1 u2 v`. Left vertices keep ids `0..left`;
/// right vertex `j` becomes `left + 2j` and `left + 2j + 1`.
pub fn bollobas_gyori(g0: &BipartiteGraph) -> Result<Hypergraph3, ConstructError> {
    if !g0.is_c4_free() {
        return Err(ConstructError::NotC4Free);
    }
    let n = g0.left + 2 * g0.right;
    let triples = g0.edges.iter().map(|&(l, r)| {
        [
            l,
            (g0.left + 2 * r as usize) as Vertex,
            (g0.left + 2 * r as usize + 1) as Vertex,
        ]
    });
    let h = Hypergraph3::build(n, triples).map_err(|e| ConstructError::SelfCheck(e.to_string()))?;
    if h.edge_count() != g0.edges.len() {
        return Err(ConstructError::SelfCheck(
            "hyperedge count differs from |E(G0)|".into(),
        ));
    }
    Ok(h)
}

/// Incrementally grown hypergraph with pair and vertex indices, supporting
/// LIFO push/pop and a Berge-C5 check restricted to cycles through the most
/// recently added hyperedge. Vertex sets are u64 masks, so n ≤ 64.
struct Growing {
    n: usize,
    edges: Vec<Triple>,
    pair_map: HashMap<Pair, Vec<usize>>,
    vert_edges: Vec<Vec<usize>>,
}

impl Growing {
    fn new(n: usize) -> Self {
        assert!(n <= 64, "incremental generator supports n ≤ 64");
        Self {
            n,
            edges: Vec::new(),
            pair_map: HashMap::new(),
            vert_edges: vec![Vec::new(); n],
        }
    }

    fn len(&self) -> usize {
        self.edges.len()
    }

    fn push(&mut self, t: Triple) {
        let id = self.edges.len();
        self.edges.push(t);
        for p in crate::hypergraph::triple_pairs(&t) {
            self.pair_map.entry(p).or_default().push(id);
        }
        for &v in &t {
            self.vert_edges[v as usize].push(id);
        }
    }

    fn pop(&mut self) {
        let t = self.edges.pop().expect("pop from empty");
        let id = self.edges.len();
        for p in crate::hypergraph::triple_pairs(&t) {
            let list = self.pair_map.get_mut(&p).unwrap();
            debug_assert_eq!(*list.last().unwrap(), id);
            list.pop();
            if list.is_empty() {
                self.pair_map.remove(&p);
            }
        }
        for &v in &t {
            let list = &mut self.vert_edges[v as usize];
            debug_assert_eq!(*list.last().unwrap(), id);
            list.pop();
        }
    }

    /// Does the hypergraph contain a Berge-C5 through the last pushed edge?
    /// Sound for a hypergraph that was C5-free before the push.
    fn last_edge_creates_c5(&self) -> bool {
        if self.edges.len() < 5 {
            return false;
        }
        let eid = self.edges.len() - 1;
        let e = self.edges[eid];
        for (x, y) in [
            (e[0], e[1]),
            (e[1], e[0]),
            (e[0], e[2]),
            (e[2], e[0]),
            (e[1], e[2]),
            (e[2], e[1]),
        ] {
            let used_v = (1u64 << x) | (1u64 << y);
            let mut used_e = vec![eid];
            if self.chain(x, y, 2, &mut used_e, used_v) {
                return true;
            }
        }
        false
    }

    /// Extends the alternating sequence `v1=start, h1, v2=current, …` to a
    /// closed Berge 5-cycle; `depth` is the index of `current`.
    fn chain(&self, start: Vertex, current: Vertex, depth: usize, used_e: &mut Vec<usize>, used_v: u64) -> bool {
        if depth == 5 {
            if let Some(ids) = self.pair_map.get(&pair(current, start)) {
                return ids.iter().any(|id| !used_e.contains(id));
            }
            return false;
        }
        for &eid in &self.vert_edges[current as usize] {
            if used_e.contains(&eid) {
                continue;
            }
            for &w in &self.edges[eid] {
                if w == current || used_v & (1u64 << w) != 0 {
                    continue;
                }
                // the 5th vertex must close back to the start
                if depth == 4 && !self.pair_map.contains_key(&pair(w, start)) {
                    continue;
                }
                used_e.push(eid);
                let found = self.chain(start, w, depth + 1, used_e, used_v | (1u64 << w));
                used_e.pop();
                if found {
                    return true;
                }
            }
        }
        false
    }

    fn freeze(&self) -> Hypergraph3 {
        Hypergraph3::build(self.n, self.edges.iter().copied()).expect("valid growing state")
    }
}

/// All triples of `0..n` in lexicographic order.
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

/// Seeded maximal C5-free hypergraph: shuffles all triples and greedily adds
/// each one when the incremental cycle check stays clean. Deterministic per
/// seed; the result is maximal with respect to adding any further triple.
pub fn random_c5free(n: usize, seed: u64) -> Hypergraph3 {
    assert!(n <= 40, "random_c5free supports n ≤ 40");
    let mut triples = all_triples(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    triples.shuffle(&mut rng);
    let mut grow = Growing::new(n);
    for t in triples {
        grow.push(t);
        if grow.last_edge_creates_c5() {
            grow.pop();
        }
    }
    grow.freeze()
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("exact search supports n ≤ 12, got {0}")]
    TooLarge(usize),
}

/// Result of the exact search. `exact` is false when the budget ran out, in
/// which case `m_star` is only a lower bound.
#[derive(Debug, Clone, Serialize)]
pub struct SearchResult {
    pub n: usize,
    pub m_star: usize,
    pub witness: Hypergraph3,
    pub exact: bool,
    pub nodes_explored: u64,
    pub elapsed_ms: u128,
}

impl SearchResult {
    /// The schedule-independent part of the result, for determinism checks.
    pub fn fingerprint(&self) -> (usize, usize, Vec<Triple>, bool, u64) {
        (
            self.n,
            self.m_star,
            self.witness.edges().to_vec(),
            self.exact,
            self.nodes_explored,
        )
    }
}

/// Precomputed vertex permutations fixing `{0..=v}` setwise and permuting
/// the rest arbitrarily; used to canonicalize partial choice sets at the
/// prefix boundaries where such permutations stabilize the decision order.
fn boundary_perms(n: usize, v: usize) -> Vec<Vec<Vertex>> {
    fn perms_of(items: &[Vertex]) -> Vec<Vec<Vertex>> {
        if items.is_empty() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for (i, &x) in items.iter().enumerate() {
            let mut rest = items.to_vec();
            rest.remove(i);
            for mut tail in perms_of(&rest) {
                let mut p = vec![x];
                p.append(&mut tail);
                out.push(p);
            }
        }
        out
    }
    let low: Vec<Vertex> = (0..=v as Vertex).collect();
    let high: Vec<Vertex> = (v as Vertex + 1..n as Vertex).collect();
    let mut out = Vec::new();
    for lp in perms_of(&low) {
        for hp in perms_of(&high) {
            let mut sigma = vec![0 as Vertex; n];
            for (i, &img) in lp.iter().enumerate() {
                sigma[i] = img;
            }
            for (i, &img) in hp.iter().enumerate() {
                sigma[v + 1 + i] = img;
            }
            out.push(sigma);
        }
    }
    out
}

fn canonical_under(perms: &[Vec<Vertex>], s: &[Triple]) -> Vec<Triple> {
    let mut best: Option<Vec<Triple>> = None;
    for sigma in perms {
        let mut mapped: Vec<Triple> = s
            .iter()
            .map(|t| {
                let mut m = [
                    sigma[t[0] as usize],
                    sigma[t[1] as usize],
                    sigma[t[2] as usize],
                ];
                m.sort_unstable();
                m
            })
            .collect();
        mapped.sort_unstable();
        if best.as_ref().map_or(true, |b| &mapped < b) {
            best = Some(mapped);
        }
    }
    best.unwrap()
}

const MEMO_CAP: usize = 300_000;

struct SubtreeState<'a> {
    triples: &'a [Triple],
    /// (decision index, fixed-prefix v) pairs where iso-merging is sound.
    boundaries: &'a [(usize, usize)],
    perms: &'a [Vec<Vec<Vertex>>],
    deadline: Option<Instant>,
    best: usize,
    nodes: u64,
    timed_out: bool,
    memo: HashSet<(usize, Vec<Triple>)>,
}

impl SubtreeState<'_> {
    fn explore(&mut self, grow: &mut Growing, i: usize) {
        self.nodes += 1;
        if self.nodes % 4096 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                }
            }
        }
        if self.timed_out {
            return;
        }
        let cur = grow.len();
        if cur > self.best {
            self.best = cur;
        }
        if i == self.triples.len() || cur + (self.triples.len() - i) <= self.best {
            return;
        }
        // Isomorph rejection: at a boundary index the already-decided prefix
        // is exactly the triples meeting {0..=v} first, so any permutation
        // stabilizing {0..=v} maps decided triples to decided triples.
        // Equal canonical forms mean equal completion values, and the first
        // visit has already pushed `best` at least that high.
        if let Some(&(_, v)) = self.boundaries.iter().find(|&&(bi, _)| bi == i) {
            if self.memo.len() < MEMO_CAP {
                let mut s = grow.edges.clone();
                s.sort_unstable();
                let key = (i, canonical_under(&self.perms[v], &s));
                if !self.memo.insert(key) {
                    return;
                }
            }
        }
        grow.push(self.triples[i]);
        if !grow.last_edge_creates_c5() {
            self.explore(grow, i + 1);
        }
        grow.pop();
        self.explore(grow, i + 1);
    }
}

/// Greedy lower bound: the best of 100 seeded maximal instances.
fn greedy_lower_bound(n: usize) -> usize {
    (0..100)
        .map(|seed| random_c5free(n, seed).edge_count())
        .max()
        .unwrap_or(0)
}

/// Lexicographically canonical witness of the given size: the first
/// include-preferring DFS solution.
fn extract_witness(triples: &[Triple], n: usize, target: usize) -> Vec<Triple> {
    fn rec(triples: &[Triple], grow: &mut Growing, i: usize, target: usize) -> bool {
        if grow.len() == target {
            return true;
        }
        if i == triples.len() || grow.len() + (triples.len() - i) < target {
            return false;
        }
        grow.push(triples[i]);
        if !grow.last_edge_creates_c5() && rec(triples, grow, i + 1, target) {
            return true;
        }
        grow.pop();
        rec(triples, grow, i + 1, target)
    }
    let mut grow = Growing::new(n);
    let ok = rec(triples, &mut grow, 0, target);
    assert!(ok, "no witness of size {target} found");
    grow.edges.clone()
}

/// Exact `ex₃(n, C5)` by branch-and-bound over the triples in lexicographic
/// order: include/exclude decisions with an incremental cycle check on
/// inclusion, count pruning against the best known family, and isomorph
/// rejection by exact canonical forms at prefix boundaries.
///
/// Exactness is practical up to n = 6 in seconds and n = 7 as a stretch;
/// on budget exhaustion the result is flagged inexact and `m_star` is the
/// best lower bound found. The witness is extracted by a deterministic
/// second pass, so completed searches are reproducible bit for bit across
/// runs and thread counts.
pub fn search_extremal(n: usize, budget: Option<Duration>) -> Result<SearchResult, SearchError> {
    if n > 12 {
        return Err(SearchError::TooLarge(n));
    }
    let start = Instant::now();
    let triples = all_triples(n);
    let k = triples.len();
    if k == 0 {
        return Ok(SearchResult {
            n,
            m_star: 0,
            witness: Hypergraph3::empty(n),
            exact: true,
            nodes_explored: 0,
            elapsed_ms: start.elapsed().as_millis(),
        });
    }

    let greedy = greedy_lower_bound(n);
    let deadline = budget.map(|b| start + b);

    // iso-merge boundaries: after all triples containing 0, then {0,1}
    let choose2 = |m: usize| m * m.saturating_sub(1) / 2;
    let mut boundaries: Vec<(usize, usize)> = Vec::new();
    let mut perms: Vec<Vec<Vec<Vertex>>> = Vec::new();
    if (4..=8).contains(&n) {
        boundaries.push((choose2(n - 1), 0));
        boundaries.push((choose2(n - 1) + choose2(n - 2), 1));
        perms.push(boundary_perms(n, 0));
        perms.push(boundary_perms(n, 1));
    }

    // Any nonempty C5-free family has an isomorphic copy containing the
    // first triple {0,1,2}, so it is forced in.
    let run_subtree = |include1: bool, include2: bool| -> (usize, u64, bool) {
        let mut grow = Growing::new(n);
        grow.push(triples[0]);
        let mut i = 1;
        if k >= 3 {
            if include1 {
                grow.push(triples[1]);
            }
            if include2 {
                grow.push(triples[2]);
            }
            i = 3;
        }
        let mut st = SubtreeState {
            triples: &triples,
            boundaries: &boundaries,
            perms: &perms,
            deadline,
            best: greedy,
            nodes: 0,
            timed_out: false,
            memo: HashSet::new(),
        };
        st.explore(&mut grow, i);
        (st.best, st.nodes, st.timed_out)
    };

    let (m_star, nodes, timed_out) = if k >= 3 {
        let results: Vec<(usize, u64, bool)> = [(true, true), (true, false), (false, true), (false, false)]
            .par_iter()
            .map(|&(a, b)| run_subtree(a, b))
            .collect();
        (
            results.iter().map(|r| r.0).max().unwrap(),
            results.iter().map(|r| r.1).sum(),
            results.iter().any(|r| r.2),
        )
    } else {
        let r = run_subtree(false, false);
        (r.0, r.1, r.2)
    };

    let witness_triples = extract_witness(&triples, n, m_star);
    let witness = Hypergraph3::build(n, witness_triples).expect("witness triples");
    debug_assert!(crate::berge::is_c5_free(&witness));
    Ok(SearchResult {
        n,
        m_star,
        witness,
        exact: !timed_out,
        nodes_explored: nodes,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::berge::is_c5_free;

    #[test]
    fn fano_incidence_counts_and_girth() {
        let g0 = incidence_c4free_bipartite(2).unwrap();
        assert_eq!(g0.left, 7);
        assert_eq!(g0.right, 7);
        assert_eq!(g0.edges.len(), 21);
        assert!(g0.is_c4_free());
        assert_eq!(graph_girth(&g0.combined_adjacency()), Some(6));
    }

    #[test]
    fn q3_incidence_counts() {
        let g0 = incidence_c4free_bipartite(3).unwrap();
        assert_eq!(g0.left, 13);
        assert_eq!(g0.edges.len(), 52);
    }

    #[test]
    fn non_prime_q_rejected() {
        assert_eq!(
            incidence_c4free_bipartite(4).unwrap_err(),
            ConstructError::QNotPrime(4)
        );
        assert_eq!(
            incidence_c4free_bipartite(17).unwrap_err(),
            ConstructError::QTooLarge(17)
        );
    }

    #[test]
    fn construction_q2_is_c5_free() {
        let g0 = incidence_c4free_bipartite(2).unwrap();
        let h = bollobas_gyori(&g0).unwrap();
        assert_eq!(h.n(), 21);
        assert_eq!(h.edge_count(), 21);
        assert!(is_c5_free(&h));
    }

    #[test]
    fn construction_q3_counts() {
        let g0 = incidence_c4free_bipartite(3).unwrap();
        let h = bollobas_gyori(&g0).unwrap();
        assert_eq!(h.n(), 39);
        assert_eq!(h.edge_count(), 52);
        assert!(is_c5_free(&h));
    }

    #[test]
    fn construction_single_edge() {
        let g0 = BipartiteGraph {
            left: 1,
            right: 1,
            edges: vec![(0, 0)],
        };
        let h = bollobas_gyori(&g0).unwrap();
        assert_eq!(h.edge_count(), 1);
        assert_eq!(h.edge(0), [0, 1, 2]);
    }

    #[test]
    fn bollobas_gyori_rejects_c4() {
        let g0 = BipartiteGraph {
            left: 2,
            right: 2,
            edges: vec![(0, 0), (0, 1), (1, 0), (1, 1)],
        };
        assert_eq!(bollobas_gyori(&g0).unwrap_err(), ConstructError::NotC4Free);
    }

    #[test]
    fn split_side_symmetry_for_q2() {
        // the incidence graph is self-dual, so splitting the other side
        // gives the same vertex and edge counts
        let g0 = incidence_c4free_bipartite(2).unwrap();
        let flipped = BipartiteGraph {
            left: g0.right,
            right: g0.left,
            edges: g0.edges.iter().map(|&(l, r)| (r, l)).collect(),
        };
        let h1 = bollobas_gyori(&g0).unwrap();
        let h2 = bollobas_gyori(&flipped).unwrap();
        assert_eq!(h1.n(), h2.n());
        assert_eq!(h1.edge_count(), h2.edge_count());
        assert!(is_c5_free(&h2));
    }

    #[test]
    fn random_c5free_n4_takes_everything() {
        for seed in [0, 1, 7] {
            let h = random_c5free(4, seed);
            assert_eq!(h.edge_count(), 4);
        }
    }

    #[test]
    fn random_c5free_is_deterministic() {
        let a = random_c5free(10, 1);
        let b = random_c5free(10, 1);
        assert_eq!(a, b);
        let c = random_c5free(10, 2);
        assert_ne!(a.edges(), c.edges());
    }

    #[test]
    fn random_c5free_outputs_verify() {
        for seed in 0..8 {
            let h = random_c5free(12, seed);
            assert!(is_c5_free(&h), "seed {seed}");
        }
    }

    #[test]
    fn random_c5free_is_maximal() {
        let h = random_c5free(8, 3);
        let triples: Vec<Triple> = h.edges().to_vec();
        for t in all_triples(8) {
            if triples.contains(&t) {
                continue;
            }
            let mut extended = triples.clone();
            extended.push(t);
            let bigger = Hypergraph3::build(8, extended).unwrap();
            assert!(!is_c5_free(&bigger), "adding {t:?} kept it C5-free");
        }
    }

    #[test]
    fn search_n4_is_four() {
        let r = search_extremal(4, None).unwrap();
        assert_eq!(r.m_star, 4);
        assert!(r.exact);
        assert_eq!(r.witness.edge_count(), 4);
        assert!(is_c5_free(&r.witness));
    }

    #[test]
    fn search_small_monotone() {
        let values: Vec<usize> = (3..=6)
            .map(|n| search_extremal(n, None).unwrap().m_star)
            .collect();
        assert_eq!(values[0], 1);
        assert!(values.windows(2).all(|w| w[0] <= w[1]), "{values:?}");
        assert!(is_c5_free(&search_extremal(5, None).unwrap().witness));
    }

    #[test]
    fn search_beats_greedy() {
        for n in 4..=6 {
            let greedy = (0..100)
                .map(|seed| random_c5free(n, seed).edge_count())
                .max()
                .unwrap();
            let r = search_extremal(n, None).unwrap();
            assert!(r.m_star >= greedy);
        }
    }

    #[test]
    fn search_rejects_large_n() {
        assert_eq!(search_extremal(13, None).unwrap_err(), SearchError::TooLarge(13));
    }

    #[test]
    fn boundary_perms_counts() {
        assert_eq!(boundary_perms(5, 0).len(), 24);
        assert_eq!(boundary_perms(5, 1).len(), 2 * 6);
    }
}
