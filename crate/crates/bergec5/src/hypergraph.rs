//! Canonical 3-uniform hypergraph representation: edges as sorted triples,
//! pair-indexed adjacency, the 2-shadow, links, degrees and min-degree peeling.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::rational::{rat_div_or_zero, Rational};

pub type Vertex = u32;
/// Unordered vertex pair, stored with the smaller vertex first.
pub type Pair = (Vertex, Vertex);
/// Hyperedge as a strictly increasing vertex triple.
pub type Triple = [Vertex; 3];
pub type HyperedgeId = usize;

/// Normalize an unordered pair to `(min, max)`.
pub fn pair(u: Vertex, v: Vertex) -> Pair {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// The three vertex pairs of a triple, in lexicographic order.
pub fn triple_pairs(t: &Triple) -> [Pair; 3] {
    [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("hyperedge {0:?} has a repeated vertex")]
    RepeatedVertex([Vertex; 3]),
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("codegree is undefined for a repeated vertex {0}")]
pub struct DegeneratePair(pub Vertex);

/// A 3-uniform hypergraph on vertices `0..n`.
///
/// Edges are deduplicated and kept sorted, so hyperedge ids are stable for a
/// given edge set and every iteration order in the crate is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypergraph3 {
    n: usize,
    edges: Vec<Triple>,
    #[serde(skip)]
    pair_index: BTreeMap<Pair, Vec<HyperedgeId>>,
    #[serde(skip)]
    vert_edges: Vec<Vec<HyperedgeId>>,
}

impl Hypergraph3 {
    /// Builds a canonical hypergraph from arbitrary triples: each triple is
    /// sorted, duplicates are removed, and the pair index is constructed.
    pub fn build<I>(n: usize, triples: I) -> Result<Self, BuildError>
    where
        I: IntoIterator<Item = [Vertex; 3]>,
    {
        let mut edges: Vec<Triple> = Vec::new();
        for raw in triples {
            let mut t = raw;
            t.sort_unstable();
            if t[0] == t[1] || t[1] == t[2] {
                return Err(BuildError::RepeatedVertex(raw));
            }
            for &v in &t {
                if (v as usize) >= n {
                    return Err(BuildError::VertexOutOfRange { vertex: v, n });
                }
            }
            edges.push(t);
        }
        edges.sort_unstable();
        edges.dedup();

        let mut pair_index: BTreeMap<Pair, Vec<HyperedgeId>> = BTreeMap::new();
        let mut vert_edges: Vec<Vec<HyperedgeId>> = vec![Vec::new(); n];
        for (id, t) in edges.iter().enumerate() {
            for p in triple_pairs(t) {
                pair_index.entry(p).or_default().push(id);
            }
            for &v in t {
                vert_edges[v as usize].push(id);
            }
        }
        Ok(Self {
            n,
            edges,
            pair_index,
            vert_edges,
        })
    }

    pub fn empty(n: usize) -> Self {
        Self::build(n, std::iter::empty()).expect("empty hypergraph")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of hyperedges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Triple] {
        &self.edges
    }

    pub fn edge(&self, id: HyperedgeId) -> Triple {
        self.edges[id]
    }

    pub fn contains_triple(&self, t: &Triple) -> bool {
        self.edges.binary_search(t).is_ok()
    }

    /// Ids of the hyperedges containing both vertices of `p` (ascending).
    pub fn pair_edges(&self, p: Pair) -> &[HyperedgeId] {
        self.pair_index
            .get(&pair(p.0, p.1))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Iterator over all covered pairs with their hyperedge id lists.
    pub fn pair_entries(&self) -> impl Iterator<Item = (&Pair, &Vec<HyperedgeId>)> {
        self.pair_index.iter()
    }

    /// Ids of the hyperedges containing vertex `v` (ascending).
    pub fn edges_at(&self, v: Vertex) -> &[HyperedgeId] {
        &self.vert_edges[v as usize]
    }

    /// Hypergraph degree `d(v)`.
    pub fn degree(&self, v: Vertex) -> usize {
        self.vert_edges[v as usize].len()
    }

    /// Number of hyperedges containing the pair `{u, v}`.
    pub fn codeg(&self, u: Vertex, v: Vertex) -> Result<usize, DegeneratePair> {
        if u == v {
            return Err(DegeneratePair(u));
        }
        Ok(self.pair_edges(pair(u, v)).len())
    }

    /// The 2-shadow: the graph of all pairs covered by some hyperedge.
    pub fn shadow(&self) -> ShadowGraph {
        ShadowGraph::from_pairs(self.n, self.pair_index.keys().copied())
    }

    /// The link of `v`: the graph `{uw | uvw ∈ H}` on the same vertex range
    /// (`v` itself is isolated in the result).
    pub fn link(&self, v: Vertex) -> ShadowGraph {
        let pairs = self.edges_at(v).iter().map(|&id| {
            let t = self.edges[id];
            let rest: Vec<Vertex> = t.iter().copied().filter(|&x| x != v).collect();
            pair(rest[0], rest[1])
        });
        ShadowGraph::from_pairs(self.n, pairs)
    }

    /// Per-vertex hypergraph and shadow degrees, their averages, and a
    /// per-vertex record of the degree sandwich `d_G(v)/2 ≤ d(v) ≤ 2·d_G(v)`.
    /// The right-hand side is a theorem only for Berge-C5-free hypergraphs,
    /// so it is reported rather than assumed.
    pub fn degrees(&self) -> DegreeReport {
        let g = self.shadow();
        let d: Vec<usize> = (0..self.n).map(|v| self.degree(v as Vertex)).collect();
        let dg: Vec<usize> = (0..self.n).map(|v| g.degree(v as Vertex)).collect();
        let left_ok = d
            .iter()
            .zip(&dg)
            .map(|(&d, &dg)| dg <= 2 * d)
            .collect();
        let right_ok = d
            .iter()
            .zip(&dg)
            .map(|(&d, &dg)| d <= 2 * dg)
            .collect();
        DegreeReport {
            avg_d: rat_div_or_zero(3 * self.edge_count() as i64, self.n as i64),
            avg_dg: rat_div_or_zero(2 * g.edge_count() as i64, self.n as i64),
            d,
            dg,
            eq1_left_ok: left_ok,
            eq1_right_ok: right_ok,
        }
    }

    /// Iterated minimum-degree peeling: while some vertex has
    /// `d(v) < ratio · d̄` (averages recomputed after every deletion), delete
    /// the smallest such vertex together with its incident hyperedges. The
    /// survivors are relabeled densely; `kept[i]` is the original id of the
    /// new vertex `i`.
    pub fn peel(&self, ratio: Rational) -> Peeled {
        assert!(ratio > Rational::from_integer(0.into()), "ratio must be positive");
        let mut live_v: Vec<bool> = vec![true; self.n];
        let mut live_e: Vec<bool> = vec![true; self.edge_count()];
        let mut deg: Vec<usize> = (0..self.n).map(|v| self.degree(v as Vertex)).collect();
        let mut nv = self.n;
        let mut ne = self.edge_count();

        loop {
            if nv == 0 {
                break;
            }
            // d(v) < ratio · 3·ne/nv  ⟺  d(v)·nv·den < num·3·ne
            let num = ratio.numer();
            let den = ratio.denom();
            let victim = (0..self.n).find(|&v| {
                live_v[v]
                    && num::BigInt::from(deg[v]) * num::BigInt::from(nv) * den
                        < num * num::BigInt::from(3 * ne)
            });
            let Some(v) = victim else { break };
            live_v[v] = false;
            nv -= 1;
            for &eid in self.edges_at(v as Vertex) {
                if live_e[eid] {
                    live_e[eid] = false;
                    ne -= 1;
                    for &u in &self.edges[eid] {
                        deg[u as usize] -= 1;
                    }
                }
            }
        }

        let kept: Vec<Vertex> = (0..self.n)
            .filter(|&v| live_v[v])
            .map(|v| v as Vertex)
            .collect();
        let relabel: BTreeMap<Vertex, Vertex> = kept
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i as Vertex))
            .collect();
        let triples = self
            .edges
            .iter()
            .enumerate()
            .filter(|(id, _)| live_e[*id])
            .map(|(_, t)| [relabel[&t[0]], relabel[&t[1]], relabel[&t[2]]]);
        let hypergraph = Hypergraph3::build(kept.len(), triples).expect("relabeled peel result");
        Peeled { hypergraph, kept }
    }
}

/// Result of [`Hypergraph3::peel`]: the surviving hypergraph on relabeled
/// vertices plus the original ids of the survivors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Peeled {
    pub hypergraph: Hypergraph3,
    pub kept: Vec<Vertex>,
}

/// Simple undirected graph with sorted adjacency lists; used for the
/// 2-shadow, links and neighborhood subgraphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShadowGraph {
    n: usize,
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl ShadowGraph {
    pub fn from_pairs<I>(n: usize, pairs: I) -> Self
    where
        I: IntoIterator<Item = Pair>,
    {
        let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
        let mut m = 0;
        let mut seen: Vec<Pair> = pairs.into_iter().map(|(u, v)| pair(u, v)).collect();
        seen.sort_unstable();
        seen.dedup();
        for (u, v) in seen {
            assert!(u != v, "self-loop in shadow graph");
            adj[u as usize].push(v);
            adj[v as usize].push(u);
            m += 1;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Self { n, adj, m }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v as usize].len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v as usize]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<Pair> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if (u as Vertex) < v {
                    out.push((u as Vertex, v));
                }
            }
        }
        out
    }

    /// Average degree `2m/n` as an exact rational (0 for the empty graph).
    pub fn avg_degree(&self) -> Rational {
        rat_div_or_zero(2 * self.m as i64, self.n as i64)
    }

    /// Do `u` and `v` have a common neighbor?
    pub fn have_common_neighbor(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = (self.neighbors(u), self.neighbors(v));
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    /// Subgraph keeping only edges with both endpoints in `verts`
    /// (same vertex range; everything else becomes isolated).
    pub fn induced(&self, verts: &[Vertex]) -> ShadowGraph {
        let mut inside = vec![false; self.n];
        for &v in verts {
            inside[v as usize] = true;
        }
        let pairs = self.edges().into_iter().filter(|&(u, v)| {
            inside[u as usize] && inside[v as usize]
        });
        ShadowGraph::from_pairs(self.n, pairs)
    }

    /// Connected components as sorted vertex lists (isolated vertices form
    /// singleton components), ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s as Vertex];
            seen[s] = true;
            let mut stack = vec![s as Vertex];
            while let Some(v) = stack.pop() {
                for &w in self.neighbors(v) {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// Per-vertex degree table for a hypergraph and its shadow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    /// `d(v)`: hypergraph degree.
    pub d: Vec<usize>,
    /// `d_G(v)`: degree in the 2-shadow.
    pub dg: Vec<usize>,
    /// `d̄ = 3|H|/n`.
    pub avg_d: Rational,
    /// `d̄_G = 2|G|/n`.
    pub avg_dg: Rational,
    /// Whether `d_G(v) ≤ 2·d(v)` (holds unconditionally).
    pub eq1_left_ok: Vec<bool>,
    /// Whether `d(v) ≤ 2·d_G(v)` (a theorem only for C5-free hypergraphs).
    pub eq1_right_ok: Vec<bool>,
}

impl DegreeReport {
    pub fn max_shadow_degree(&self) -> usize {
        self.dg.iter().copied().max().unwrap_or(0)
    }
}
