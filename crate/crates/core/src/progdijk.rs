//! Progressive Dijkstra over the dyadic interval family of the root path.
//!
//! For every level `i` the root path (padded to `p' = 2^L` positions) is cut
//! into `2^i` aligned blocks. Rounds `j = 0, 1, ...` process the block graphs
//! in order, reusing the distance labels of earlier rounds: a vertex re-enters
//! the heap only when its label improves by more than a `1 + eps2` factor.
//! Every insertion is logged in `upd(i, v)`; the log encodes `r(i, j, v)`,
//! the label of `v` after round `j`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::distance::{Distance, INF};
use crate::error::{Error, Result};
use crate::graphcore::{CentroidSplit, Digraph, SpTree, VertexId};

/// Aligned block `[lo, hi]` of path positions at a given level and round.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyadicIndex {
    pub level: u32,
    pub round: u32,
    pub lo: usize,
    pub hi: usize,
}

/// Smallest power of two `>= p` (1 for `p <= 1`).
pub fn padded_len(p: usize) -> usize {
    p.max(1).next_power_of_two()
}

/// `log2` of the padded length; levels run over `0..=level_count(p) - 1`.
pub fn level_count(p: usize) -> u32 {
    padded_len(p).trailing_zeros() + 1
}

fn block_size(p: usize, level: u32) -> usize {
    padded_len(p) >> level
}

/// The clipped interval `I^level_round`, or `None` when it lies past the path end.
pub fn interval(p: usize, level: u32, round: usize) -> Option<DyadicIndex> {
    let b = block_size(p, level);
    let lo = round * b;
    if lo >= p || round >= 1usize << level {
        return None;
    }
    Some(DyadicIndex {
        level,
        round: round as u32,
        lo,
        hi: (lo + b - 1).min(p - 1),
    })
}

/// Round `j(level, pos)` whose interval contains path position `pos`.
pub fn round_of(p: usize, level: u32, pos: usize) -> usize {
    pos / block_size(p, level)
}

/// Partition of positions `[0, b - 1]` into aligned blocks, largest first.
pub fn dyadic_prefix_cover(b: usize, p: usize) -> Result<Vec<DyadicIndex>> {
    if b == 0 || b > p {
        return Err(Error::InvalidPrefix { b, p });
    }
    let top = level_count(p) - 1;
    let mut cover = Vec::new();
    let mut a = 0;
    while a < b {
        let mut k = top;
        // block of size 2^k starting at a must be aligned and fit inside [a, b)
        while (a & ((1usize << k) - 1)) != 0 || a + (1usize << k) > b {
            k -= 1;
        }
        let level = top - k;
        cover.push(interval(p, level, a >> k).expect("cover block lies inside the path"));
        a += 1usize << k;
    }
    Ok(cover)
}

/// Whether `candidate` beats `current` by more than a `1 + eps2` factor.
pub fn improves(candidate: u64, current: u64, eps2: f64) -> bool {
    current == INF || (candidate as f64) * (1.0 + eps2) < current as f64
}

/// One logged improvement of `d[v]`: after round `round`, `d[v] = length`,
/// realised by a departing path that branches off the root path at `branch`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UpdEntry {
    pub round: u32,
    pub length: u64,
    pub branch: VertexId,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct UpdLevel {
    pub(crate) offsets: Vec<u32>,
    pub(crate) entries: Vec<UpdEntry>,
}

impl UpdLevel {
    fn from_lists(lists: Vec<Vec<UpdEntry>>) -> Self {
        let mut offsets = Vec::with_capacity(lists.len() + 1);
        offsets.push(0u32);
        let total = lists.iter().map(Vec::len).sum();
        let mut entries = Vec::with_capacity(total);
        for list in lists {
            entries.extend(list);
            offsets.push(entries.len() as u32);
        }
        UpdLevel { offsets, entries }
    }

    fn list(&self, v: VertexId) -> &[UpdEntry] {
        &self.entries[self.offsets[v] as usize..self.offsets[v + 1] as usize]
    }
}

/// The per-level improvement logs `upd(i, v)`.
#[derive(Clone, Debug, PartialEq)]
pub struct UpdTable {
    pub(crate) path_len: usize,
    pub(crate) eps2: f64,
    pub(crate) levels: Vec<UpdLevel>,
}

impl UpdTable {
    pub fn path_len(&self) -> usize {
        self.path_len
    }

    pub fn padded_len(&self) -> usize {
        padded_len(self.path_len)
    }

    pub fn eps2(&self) -> f64 {
        self.eps2
    }

    pub fn level_count(&self) -> u32 {
        self.levels.len() as u32
    }

    /// `upd(level, v)`, ascending by round.
    pub fn entries(&self, level: u32, v: VertexId) -> &[UpdEntry] {
        self.levels[level as usize].list(v)
    }

    pub fn total_entries(&self) -> usize {
        self.levels.iter().map(|l| l.entries.len()).sum()
    }

    /// `r(level, round, v)`: the label of `v` after round `round`, i.e. the
    /// last logged length with round `<= round`. `round = -1` (or an empty
    /// prefix of the log) yields `Unreachable`.
    pub fn r_lookup(&self, level: u32, round: i64, v: VertexId) -> Distance {
        if round < 0 {
            return Distance::Unreachable;
        }
        let list = self.entries(level, v);
        let idx = list.partition_point(|e| i64::from(e.round) <= round);
        match idx {
            0 => Distance::Unreachable,
            _ => Distance::Finite(list[idx - 1].length),
        }
    }
}

const NO_POS: usize = usize::MAX;

/// Runs the progressive Dijkstra on every level of the root path of `split`.
pub fn run_progressive(g: &Digraph, tree: &SpTree, split: &CentroidSplit, eps2: f64) -> UpdTable {
    let n = g.n();
    let path = split.root_path();
    let p = path.len();
    if p == 0 {
        return UpdTable {
            path_len: 0,
            eps2,
            levels: Vec::new(),
        };
    }
    let pos: Vec<usize> = (0..n)
        .map(|v| split.position(v).unwrap_or(NO_POS))
        .collect();
    let seed: Vec<u64> = path
        .iter()
        .map(|&v| {
            tree.dist(v)
                .finite()
                .expect("root path vertices are covered")
        })
        .collect();

    let levels = (0..level_count(p))
        .map(|level| run_level(g, path, &pos, &seed, eps2, level))
        .collect();
    UpdTable {
        path_len: p,
        eps2,
        levels,
    }
}

fn run_level(
    g: &Digraph,
    path: &[VertexId],
    pos: &[usize],
    seed: &[u64],
    eps2: f64,
    level: u32,
) -> UpdLevel {
    let n = g.n();
    let p = path.len();
    let mut d = vec![INF; n];
    let mut branch = vec![VertexId::MAX; n];
    let mut in_heap = vec![false; n];
    let mut lists: Vec<Vec<UpdEntry>> = vec![Vec::new(); n];
    let mut heap: BinaryHeap<Reverse<(u64, u32)>> = BinaryHeap::new();

    for round in 0..(1usize << level) {
        let Some(iv) = interval(p, level, round) else {
            break;
        };
        let round_tag = round as u32;
        // reset and seed from the virtual source
        for k in iv.lo..=iv.hi {
            let u = path[k];
            d[u] = seed[k];
            branch[u] = u;
            in_heap[u] = true;
            heap.push(Reverse((seed[k], u as u32)));
            lists[u].push(UpdEntry {
                round: round_tag,
                length: seed[k],
                branch: u,
            });
        }
        while let Some(Reverse((du, u))) = heap.pop() {
            let u = u as usize;
            if !in_heap[u] || du != d[u] {
                continue;
            }
            in_heap[u] = false;
            let pu = pos[u];
            if pu != NO_POS && pu > iv.hi {
                continue;
            }
            for (v, w) in g.out_edges(u) {
                let pv = pos[v];
                if pv != NO_POS && (pv <= iv.hi || (pu != NO_POS && pv == pu + 1)) {
                    continue;
                }
                let cand = du + w;
                if in_heap[v] {
                    if cand < d[v] {
                        d[v] = cand;
                        branch[v] = branch[u];
                        heap.push(Reverse((cand, v as u32)));
                        let last = lists[v].last_mut().expect("in-heap vertex has an entry");
                        debug_assert_eq!(last.round, round_tag);
                        last.length = cand;
                        last.branch = branch[u];
                    }
                } else if improves(cand, d[v], eps2) {
                    d[v] = cand;
                    branch[v] = branch[u];
                    in_heap[v] = true;
                    heap.push(Reverse((cand, v as u32)));
                    lists[v].push(UpdEntry {
                        round: round_tag,
                        length: cand,
                        branch: branch[u],
                    });
                }
            }
        }
    }
    UpdLevel::from_lists(lists)
}
