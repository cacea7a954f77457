//! Child graphs of a recursion node.

use crate::error::Result;
use crate::graphcore::{restricted_dijkstra, CentroidSplit, Digraph, Edge, SpTree, VertexId};
use crate::progdijk::UpdTable;

/// A child graph over a subset of the parent's vertices.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Digraph,
    /// Child-local id -> parent-local id, ascending.
    pub vertices: Vec<VertexId>,
    /// Child-local id of the source.
    pub source: VertexId,
}

pub(super) struct LocalMap {
    to_local: Vec<u32>,
    pub(super) vertices: Vec<VertexId>,
}

const ABSENT: u32 = u32::MAX;

impl LocalMap {
    pub(super) fn new(n: usize, keep: impl Fn(VertexId) -> bool) -> Self {
        let mut to_local = vec![ABSENT; n];
        let mut vertices = Vec::new();
        for v in (0..n).filter(|&v| keep(v)) {
            to_local[v] = vertices.len() as u32;
            vertices.push(v);
        }
        LocalMap { to_local, vertices }
    }

    pub(super) fn get(&self, v: VertexId) -> Option<VertexId> {
        let l = self.to_local[v];
        (l != ABSENT).then_some(l as VertexId)
    }

    fn edge(&self, src: VertexId, dst: VertexId, weight: u64) -> Edge {
        Edge {
            src: self.to_local[src] as VertexId,
            dst: self.to_local[dst] as VertexId,
            weight,
        }
    }

    fn finish(self, mut edges: Vec<Edge>, source: VertexId) -> Subgraph {
        // parallel edges: keep the lightest
        edges.sort_unstable();
        edges.dedup_by_key(|e| (e.src, e.dst));
        let source = self.get(source).expect("source is kept");
        Subgraph {
            graph: Digraph::from_edges_unchecked(self.vertices.len(), edges),
            vertices: self.vertices,
            source,
        }
    }
}

/// `G2`: the subgraph induced by `V(T2) \ {z}`, plus the source with one
/// edge `(s, u)` per vertex `u` below the centroid, weighted by the shortest
/// `s -> u` distance whose intermediate vertices all lie in `T1`.
pub fn construct_g2(g: &Digraph, tree: &SpTree, split: &CentroidSplit) -> Result<Subgraph> {
    let s = tree.root();
    let map = LocalMap::new(g.n(), |v| v == s || split.below_centroid(v));
    let mut edges: Vec<Edge> = g
        .edges()
        .iter()
        .filter(|e| split.below_centroid(e.src) && split.below_centroid(e.dst))
        .map(|e| map.edge(e.src, e.dst, e.weight))
        .collect();
    let entry = restricted_dijkstra(g, s, |v| split.in_t1(v))?;
    for (u, d) in entry.iter().enumerate() {
        if let (true, Some(d)) = (split.below_centroid(u), d.finite()) {
            edges.push(map.edge(s, u, d));
        }
    }
    Ok(map.finish(edges, s))
}

/// `G1`: the subgraph induced by `V(T1)` plus
/// * `F1`: edges `(z, u)` for `u` in `T1`, weighted by the shortest `z -> u`
///   distance whose intermediate vertices all lie below the centroid;
/// * `F2`: for every logged entry `(., l, v_b)` of a path vertex `v_c` with
///   `v_b != v_c`, an edge `(v_b, v_c)` of weight `l - dist_T(s, v_b)`.
pub fn construct_g1(
    g: &Digraph,
    tree: &SpTree,
    split: &CentroidSplit,
    table: &UpdTable,
) -> Result<Subgraph> {
    let s = tree.root();
    let z = split.centroid();
    let map = LocalMap::new(g.n(), |v| split.in_t1(v));
    let mut edges: Vec<Edge> = g
        .edges()
        .iter()
        .filter(|e| split.in_t1(e.src) && split.in_t1(e.dst))
        .map(|e| map.edge(e.src, e.dst, e.weight))
        .collect();

    let exit = restricted_dijkstra(g, z, |v| split.below_centroid(v))?;
    for (u, d) in exit.iter().enumerate() {
        if let (true, Some(d)) = (split.in_t1(u) && u != z, d.finite()) {
            edges.push(map.edge(z, u, d));
        }
    }

    for &c in split.root_path() {
        for level in 0..table.level_count() {
            for e in table.entries(level, c) {
                if e.branch == c {
                    continue;
                }
                let to_branch = tree
                    .dist(e.branch)
                    .finite()
                    .expect("branch lies on the path");
                debug_assert!(e.length > to_branch);
                edges.push(map.edge(e.branch, c, e.length - to_branch));
            }
        }
    }
    Ok(map.finish(edges, s))
}

/// Number of `F2` candidates (entries whose branch differs from the target).
pub fn f2_candidates(split: &CentroidSplit, table: &UpdTable) -> usize {
    split
        .root_path()
        .iter()
        .map(|&c| {
            (0..table.level_count())
                .map(|level| {
                    table
                        .entries(level, c)
                        .iter()
                        .filter(|e| e.branch != c)
                        .count()
                })
                .sum::<usize>()
        })
        .sum()
}
