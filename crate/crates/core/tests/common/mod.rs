//! Independent reference oracles and instance generators shared by the
//! integration tests. Nothing here calls the library's Dijkstra.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vsdo_core::generate::{generate, Family};
use vsdo_core::{Digraph, Distance, VertexId};

/// Bellman-Ford from `s` on `g` with `removed` deleted.
pub fn bellman_ford(g: &Digraph, s: VertexId, removed: Option<VertexId>) -> Vec<Distance> {
    let n = g.n();
    let mut d = vec![u64::MAX; n];
    if removed == Some(s) {
        return vec![Distance::Unreachable; n];
    }
    d[s] = 0;
    for _ in 0..n {
        let mut changed = false;
        for e in g.edges() {
            if Some(e.src) == removed || Some(e.dst) == removed || d[e.src] == u64::MAX {
                continue;
            }
            let c = d[e.src] + e.weight;
            if c < d[e.dst] {
                d[e.dst] = c;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    d.into_iter()
        .map(|x| {
            if x == u64::MAX {
                Distance::Unreachable
            } else {
                Distance::Finite(x)
            }
        })
        .collect()
}

/// Minimum over all simple `s`-paths accepted by `allow`, per endpoint.
///
/// `allow(path, next)` decides whether `next` may extend `path`;
/// `accept(path)` decides whether the path counts for its last vertex.
pub fn enumerate_paths(
    g: &Digraph,
    s: VertexId,
    allow: &dyn Fn(&[VertexId], VertexId) -> bool,
    accept: &dyn Fn(&[VertexId]) -> bool,
) -> Vec<Distance> {
    let n = g.n();
    let mut best = vec![Distance::Unreachable; n];
    let mut on = vec![false; n];
    let mut path = vec![s];
    on[s] = true;
    fn go(
        g: &Digraph,
        path: &mut Vec<VertexId>,
        on: &mut [bool],
        len: u64,
        best: &mut [Distance],
        allow: &dyn Fn(&[VertexId], VertexId) -> bool,
        accept: &dyn Fn(&[VertexId]) -> bool,
    ) {
        let u = *path.last().unwrap();
        if accept(path) {
            best[u] = best[u].min(Distance::Finite(len));
        }
        for (v, w) in g.out_edges(u) {
            if on[v] || !allow(path, v) {
                continue;
            }
            on[v] = true;
            path.push(v);
            go(g, path, on, len + w, best, allow, accept);
            path.pop();
            on[v] = false;
        }
    }
    go(g, &mut path, &mut on, 0, &mut best, allow, accept);
    best
}

/// `dist_{G - x}(s, t)` for every `t` by enumeration.
pub fn enumerate_avoiding(g: &Digraph, s: VertexId, x: VertexId) -> Vec<Distance> {
    enumerate_paths(g, s, &|_, v| v != x, &|_| true)
}

/// Shortest departing paths avoiding the vertex at position `f` of `path`,
/// by enumeration of simple paths checked against the two defining
/// conditions.
pub fn enumerate_departing(g: &Digraph, path: &[VertexId], f: usize) -> Vec<Distance> {
    let n = g.n();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in path.iter().enumerate() {
        pos[v] = i;
    }
    let fault = path[f];
    let prefix = |v: VertexId| pos[v] < f;
    let suffix = |v: VertexId| pos[v] != usize::MAX && pos[v] > f;
    enumerate_paths(
        g,
        path[0],
        &|p, v| {
            if v == fault {
                return false;
            }
            // prefix vertices must form a prefix of the path
            if prefix(v) && !p.iter().all(|&u| prefix(u)) {
                return false;
            }
            // suffix vertices may only end the path
            !suffix(*p.last().unwrap())
        },
        &|_| true,
    )
}

/// A seeded instance description for the randomized suites.
#[derive(Clone, Debug)]
pub struct Instance {
    pub family: Family,
    pub n: usize,
    pub m: usize,
    pub max_w: u64,
    pub seed: u64,
    pub source: VertexId,
}

impl Instance {
    pub fn graph(&self) -> Digraph {
        generate(self.family, self.n, self.m, self.max_w, self.seed)
    }
}

/// Small random multigraph with a tree-ish backbone from `0` so most
/// vertices are reachable.
pub fn small_graph(rng: &mut ChaCha8Rng, n: usize, extra: usize, max_w: u64) -> Digraph {
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.push((u, v, rng.gen_range(1..=max_w)));
    }
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        edges.push((u, v, rng.gen_range(1..=max_w)));
    }
    Digraph::new(n, edges).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
