//! Brute-force reference oracles. Never used by [`crate::Vsdo`] itself.

use crate::distance::Distance;
use crate::error::{Error, Result};
use crate::graphcore::{
    dijkstra, dijkstra_avoiding, CentroidSplit, Digraph, Edge, SpTree, VertexId,
};
use crate::progdijk::interval;

/// Exact `dist_{G - x}(s, t)` for every `x != s` and every `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SsrpTable {
    n: usize,
    source: VertexId,
    d: Vec<Distance>,
}

impl SsrpTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    /// # Panics
    /// If `x` is the source or either id is out of range.
    pub fn get(&self, x: VertexId, t: VertexId) -> Distance {
        assert!(x != self.source, "the source cannot fail");
        assert!(x < self.n && t < self.n);
        self.d[x * self.n + t]
    }
}

/// One Dijkstra per failed vertex.
pub fn exact_ssrp(g: &Digraph, s: VertexId) -> Result<SsrpTable> {
    g.check_vertex(s)?;
    let n = g.n();
    let mut d = vec![Distance::Unreachable; n * n];
    for x in (0..n).filter(|&x| x != s) {
        let sp = dijkstra_avoiding(g, s, x)?;
        d[x * n..(x + 1) * n].copy_from_slice(&sp.dist);
    }
    Ok(SsrpTable { n, source: s, d })
}

fn is_path_edge(split: &CentroidSplit, e: &Edge) -> bool {
    matches!((split.position(e.src), split.position(e.dst)), (Some(a), Some(b)) if b == a + 1)
}

/// Dijkstra from a super source `n` attached to `seeds`, over the edges of
/// `g` that pass `keep`.
fn super_source_dijkstra(
    g: &Digraph,
    seeds: impl Iterator<Item = (VertexId, u64)>,
    keep: impl Fn(&Edge) -> bool,
) -> Result<Vec<Distance>> {
    let n = g.n();
    let mut edges: Vec<(VertexId, VertexId, u64)> = g
        .edges()
        .iter()
        .filter(|e| keep(e))
        .map(|e| (e.src, e.dst, e.weight))
        .collect();
    edges.extend(seeds.map(|(v, w)| (n, v, w)));
    let h = Digraph::new(n + 1, edges)?;
    let mut dist = dijkstra(&h, n)?.dist;
    dist.truncate(n);
    Ok(dist)
}

/// Exact shortest departing-path length `ddist_{G - v_f}(s, t)` for every `t`.
pub fn exact_departing(
    g: &Digraph,
    tree: &SpTree,
    split: &CentroidSplit,
    fault: VertexId,
) -> Result<Vec<Distance>> {
    let f = match split.position(fault) {
        Some(0) => return Err(Error::SourceFault),
        Some(f) => f,
        None => return Err(Error::NotOnPath(fault)),
    };
    let path = split.root_path();
    let seeds = path[..f]
        .iter()
        .map(|&v| (v, tree.dist(v).finite().expect("path is covered")));
    super_source_dijkstra(g, seeds, |e| {
        if e.src == fault || e.dst == fault || is_path_edge(split, e) {
            return false;
        }
        let into_prefix = split.position(e.dst).is_some_and(|b| b < f);
        let out_of_suffix = split.position(e.src).is_some_and(|a| a > f);
        !into_prefix && !out_of_suffix
    })
}

/// Exact `minL(Gamma(I, t))` for the dyadic interval `I = interval(p, level,
/// round)`, from the explicitly materialised interval graph.
pub fn exact_departing_by_interval(
    g: &Digraph,
    tree: &SpTree,
    split: &CentroidSplit,
    level: u32,
    round: usize,
) -> Result<Vec<Distance>> {
    let path = split.root_path();
    let Some(iv) = interval(path.len(), level, round) else {
        return Ok(vec![Distance::Unreachable; g.n()]);
    };
    let seeds = path[iv.lo..=iv.hi]
        .iter()
        .map(|&v| (v, tree.dist(v).finite().expect("path is covered")));
    super_source_dijkstra(g, seeds, |e| {
        if is_path_edge(split, e) {
            return false;
        }
        let into_done = split.position(e.dst).is_some_and(|b| b <= iv.hi);
        let out_of_rest = split.position(e.src).is_some_and(|a| a > iv.hi);
        !into_done && !out_of_rest
    })
}
