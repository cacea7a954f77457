use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::graph::{Digraph, VertexId};
use crate::distance::{Distance, INF};
use crate::error::Result;

const NO_PARENT: u32 = u32::MAX;

/// Output of a single-source search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortestPaths {
    pub dist: Vec<Distance>,
    pub parent: Vec<Option<VertexId>>,
}

/// Core label-setting search.
///
/// `blocked` is removed from the graph. Out-edges of a settled vertex `u`
/// are relaxed only when `u == src` or `expand(u)` holds. Among equal-length
/// predecessors the smallest id that settles before the target wins.
pub(crate) fn search<F>(
    g: &Digraph,
    src: VertexId,
    blocked: Option<VertexId>,
    expand: F,
) -> (Vec<u64>, Vec<u32>)
where
    F: Fn(VertexId) -> bool,
{
    let n = g.n();
    let mut dist = vec![INF; n];
    let mut parent = vec![NO_PARENT; n];
    let mut settled = vec![false; n];
    if blocked == Some(src) {
        return (dist, parent);
    }
    let mut heap = BinaryHeap::new();
    dist[src] = 0;
    heap.push(Reverse((0u64, src as u32)));
    while let Some(Reverse((d, u))) = heap.pop() {
        let u = u as usize;
        if settled[u] || d != dist[u] {
            continue;
        }
        settled[u] = true;
        if u != src && !expand(u) {
            continue;
        }
        for (v, w) in g.out_edges(u) {
            if settled[v] || Some(v) == blocked {
                continue;
            }
            let cand = d + w;
            if cand < dist[v] {
                dist[v] = cand;
                parent[v] = u as u32;
                heap.push(Reverse((cand, v as u32)));
            } else if cand == dist[v] && (u as u32) < parent[v] {
                parent[v] = u as u32;
            }
        }
    }
    (dist, parent)
}

fn finish(dist: Vec<u64>, parent: Vec<u32>) -> ShortestPaths {
    ShortestPaths {
        dist: dist.into_iter().map(Distance::from_raw).collect(),
        parent: parent
            .into_iter()
            .map(|p| (p != NO_PARENT).then_some(p as VertexId))
            .collect(),
    }
}

/// Exact single-source shortest paths with canonical (smallest-id) parents.
pub fn dijkstra(g: &Digraph, src: VertexId) -> Result<ShortestPaths> {
    g.check_vertex(src)?;
    let (dist, parent) = search(g, src, None, |_| true);
    Ok(finish(dist, parent))
}

/// Shortest paths in `g - removed`. Removing `src` leaves everything unreachable.
pub fn dijkstra_avoiding(g: &Digraph, src: VertexId, removed: VertexId) -> Result<ShortestPaths> {
    g.check_vertex(src)?;
    g.check_vertex(removed)?;
    let (dist, parent) = search(g, src, Some(removed), |_| true);
    Ok(finish(dist, parent))
}

/// Distances over paths whose intermediate vertices all satisfy `interior`.
/// The source and the destination are exempt from the predicate.
pub fn restricted_dijkstra<F>(g: &Digraph, src: VertexId, interior: F) -> Result<Vec<Distance>>
where
    F: Fn(VertexId) -> bool,
{
    g.check_vertex(src)?;
    let (dist, _) = search(g, src, None, interior);
    Ok(dist.into_iter().map(Distance::from_raw).collect())
}
