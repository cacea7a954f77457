//! Oracle for faults on the root path `P_T`: the departing-path oracle over
//! the progressive Dijkstra logs, the per-fault source-to-centroid table, and
//! their combination.

use std::fmt;
use std::str::FromStr;

use crate::distance::{Distance, INF};
use crate::error::{Error, Result};
use crate::graphcore::{dijkstra_avoiding, CentroidSplit, Digraph, SpTree, VertexId};
use crate::progdijk::{round_of, UpdTable};

/// Answers approximate shortest departing-path lengths for faults on `P_T`.
#[derive(Clone, Debug, PartialEq)]
pub struct DpOracle {
    pub(crate) table: UpdTable,
    pub(crate) path: Vec<VertexId>,
    pos: Vec<u32>,
}

const OFF_PATH: u32 = u32::MAX;

impl DpOracle {
    pub fn new(table: UpdTable, path: Vec<VertexId>, n: usize) -> Self {
        let mut pos = vec![OFF_PATH; n];
        for (i, &v) in path.iter().enumerate() {
            pos[v] = i as u32;
        }
        DpOracle { table, path, pos }
    }

    pub fn table(&self) -> &UpdTable {
        &self.table
    }

    pub fn path(&self) -> &[VertexId] {
        &self.path
    }

    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.pos
            .get(v)
            .copied()
            .filter(|&p| p != OFF_PATH)
            .map(|p| p as usize)
    }

    /// `min_i r(i, j(i, v_f) - 1, t)`.
    pub fn query(&self, fault: VertexId, t: VertexId) -> Result<Distance> {
        let f = self.position(fault).ok_or(Error::NotOnPath(fault))?;
        if f == 0 {
            return Err(Error::SourceFault);
        }
        if t == self.path[0] {
            return Ok(Distance::ZERO);
        }
        if t == fault {
            return Ok(Distance::Unreachable);
        }
        let p = self.table.path_len();
        let best = (0..self.table.level_count())
            .map(|level| {
                self.table
                    .r_lookup(level, round_of(p, level, f) as i64 - 1, t)
            })
            .min()
            .unwrap_or(Distance::Unreachable);
        Ok(best)
    }
}

/// Source of the per-fault `dist_{G - v_f}(s, z)` estimates.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SzProvider {
    /// One Dijkstra on `G - v_f` per path vertex.
    #[default]
    Exact,
    /// Derived from the departing-path logs: the best detour that rejoins
    /// `P_T` at some `c` after the fault, then follows the tree to `z`.
    Fast,
}

impl SzProvider {
    pub fn as_str(self) -> &'static str {
        match self {
            SzProvider::Exact => "exact",
            SzProvider::Fast => "fast",
        }
    }

    pub(crate) fn code(self) -> u8 {
        match self {
            SzProvider::Exact => 0,
            SzProvider::Fast => 1,
        }
    }

    pub(crate) fn from_code(code: u8) -> Option<Self> {
        match code {
            0 => Some(SzProvider::Exact),
            1 => Some(SzProvider::Fast),
            _ => None,
        }
    }
}

impl FromStr for SzProvider {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(SzProvider::Exact),
            "fast" => Ok(SzProvider::Fast),
            other => Err(Error::UnknownProvider(other.to_string())),
        }
    }
}

impl fmt::Display for SzProvider {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `d̂(v_f)` for every position of `P_T`; position 0 (the source) is unused.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SzTable {
    pub(crate) dhat: Vec<Distance>,
}

impl SzTable {
    pub fn get(&self, pos: usize) -> Distance {
        self.dhat[pos]
    }

    pub fn values(&self) -> &[Distance] {
        &self.dhat
    }
}

pub fn build_sz_table(
    g: &Digraph,
    tree: &SpTree,
    split: &CentroidSplit,
    provider: SzProvider,
    dp: &DpOracle,
) -> Result<SzTable> {
    let path = split.root_path();
    let p = path.len();
    let z = split.centroid();
    let s = tree.root();
    let mut dhat = vec![Distance::Unreachable; p];
    match provider {
        SzProvider::Exact => {
            for (f, &vf) in path.iter().enumerate().skip(1) {
                dhat[f] = dijkstra_avoiding(g, s, vf)?.dist[z];
            }
        }
        SzProvider::Fast => {
            fast_sz(tree, dp, z, &mut dhat);
        }
    }
    Ok(SzTable { dhat })
}

/// Every logged length `l` for a path vertex `c` at position `k`, logged in
/// round `j` of level `i`, prices a detour for each fault position `f` with
/// `(j + 1) * block_i <= f < k`. Ranges are applied cheapest first with a
/// next-unpainted-position forest.
fn fast_sz(tree: &SpTree, dp: &DpOracle, z: VertexId, dhat: &mut [Distance]) {
    let table = &dp.table;
    let p = dp.path.len();
    let padded = table.padded_len();
    let dist_z = tree.dist(z).finite().expect("centroid is covered");
    let mut ranges: Vec<(u64, usize, usize)> = Vec::new();
    for (k, &c) in dp.path.iter().enumerate() {
        let to_z = dist_z - tree.dist(c).finite().expect("path vertex is covered");
        for level in 0..table.level_count() {
            let block = padded >> level;
            for e in table.entries(level, c) {
                let lo = (e.round as usize + 1) * block;
                if lo < k {
                    ranges.push((e.length.saturating_add(to_z), lo.max(1), k - 1));
                }
            }
        }
    }
    ranges.sort_unstable();
    // next[f] = smallest unpainted position >= f
    let mut next: Vec<usize> = (0..=p).collect();
    fn find(next: &mut [usize], mut x: usize) -> usize {
        while next[x] != x {
            next[x] = next[next[x]];
            x = next[x];
        }
        x
    }
    for (value, lo, hi) in ranges {
        if value == INF {
            continue;
        }
        let mut f = find(&mut next, lo);
        while f <= hi {
            dhat[f] = Distance::Finite(value);
            next[f] = f + 1;
            f = find(&mut next, f + 1);
        }
    }
}

/// The `P_T`-faulty oracle: departing paths from the logs, jumping paths via
/// `d̂(v_f) + dist_T(z, t)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PfOracle {
    pub(crate) dp: DpOracle,
    pub(crate) sz: SzTable,
    pub(crate) dist_to_centroid: u64,
}

impl PfOracle {
    pub fn new(dp: DpOracle, sz: SzTable, dist_to_centroid: u64) -> Self {
        PfOracle {
            dp,
            sz,
            dist_to_centroid,
        }
    }

    pub fn dp(&self) -> &DpOracle {
        &self.dp
    }

    pub fn sz(&self) -> &SzTable {
        &self.sz
    }

    /// `min(dp_query(v_f, t), d̂(v_f) + dist_T(z, t))` for `t` below the
    /// centroid; `tree_dist_t` is `dist_T(s, t)`.
    pub fn query(&self, fault: VertexId, t: VertexId, tree_dist_t: Distance) -> Result<Distance> {
        let departing = self.dp.query(fault, t)?;
        let f = self.dp.position(fault).ok_or(Error::NotOnPath(fault))?;
        let below = match tree_dist_t {
            Distance::Finite(d) if d >= self.dist_to_centroid => d - self.dist_to_centroid,
            _ => return Err(Error::NotOnPath(t)),
        };
        Ok(departing.min(self.sz.get(f) + below))
    }
}
