//! Binary oracle format, little-endian throughout.
//!
//! ```text
//! magic     "VSDO1"
//! version   u16
//! header    n u64, m u64, max_weight u64, source u64,
//!           eps f64, eps1 f64, eps2 f64, provider u8,
//!           node_count u64, root u64
//! node*     id u64, k u32, vertices [u32; k], source u32,
//!           parent [u32; k] (u32::MAX = none), dist [u64; k] (u64::MAX = INF),
//!           kind u8
//!   kind 0  edge_count u32, (src u32, dst u32, weight u64)*
//!   kind 1  centroid u32, child1 u32, child2 u32, side [u8; k],
//!           path_len u32, path [u32; path_len], level_count u32,
//!           level* (offsets [u32; k + 1], (round u32, length u64, branch u32)*),
//!           dhat [u64; path_len], dist_to_centroid u64
//! ```
//!
//! Nodes are stored in post-order, so children precede their parent.

use std::io::{self, Read, Write};

use byteorder::{LittleEndian as LE, ReadBytesExt, WriteBytesExt};

use super::{BuildConfig, NodeKind, OracleNode, SplitNode, Vsdo, IN_CHILD1, IN_CHILD2};
use crate::distance::{Distance, INF};
use crate::error::{Error, Result};
use crate::graphcore::{Digraph, Edge, SpTree, LEAF_SIZE};
use crate::pathfault::{DpOracle, PfOracle, SzProvider, SzTable};
use crate::progdijk::{level_count, UpdEntry, UpdLevel, UpdTable};

pub const MAGIC: &[u8; 5] = b"VSDO1";
pub const VERSION: u16 = 1;

const NONE: u32 = u32::MAX;
const KIND_LEAF: u8 = 0;
const KIND_SPLIT: u8 = 1;

impl Vsdo {
    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        w.write_all(MAGIC)?;
        w.write_u16::<LE>(VERSION)?;
        w.write_u64::<LE>(self.n as u64)?;
        w.write_u64::<LE>(self.m as u64)?;
        w.write_u64::<LE>(self.max_weight)?;
        w.write_u64::<LE>(self.source as u64)?;
        w.write_f64::<LE>(self.config.eps)?;
        w.write_f64::<LE>(self.config.eps1)?;
        w.write_f64::<LE>(self.config.eps2)?;
        w.write_u8(self.config.sz_provider.code())?;
        w.write_u64::<LE>(self.nodes.len() as u64)?;
        w.write_u64::<LE>(self.root as u64)?;
        for node in &self.nodes {
            write_node(w, node)?;
        }
        Ok(())
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut buf = Vec::new();
        self.write_to(&mut buf)
            .expect("writing to a Vec cannot fail");
        buf
    }

    /// Reads an oracle and checks that nothing follows it.
    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        let o = read_oracle(r).map_err(eof_to_truncated)?;
        let mut probe = [0u8; 1];
        match r.read(&mut probe)? {
            0 => Ok(o),
            _ => Err(Error::Corrupt("trailing bytes".into())),
        }
    }

    pub fn from_bytes(mut bytes: &[u8]) -> Result<Self> {
        Self::read_from(&mut bytes)
    }
}

fn eof_to_truncated(e: Error) -> Error {
    match e {
        Error::Io(io) if io.kind() == io::ErrorKind::UnexpectedEof => Error::Truncated,
        other => other,
    }
}

fn write_node<W: Write>(w: &mut W, node: &OracleNode) -> Result<()> {
    let k = node.vertices.len();
    w.write_u64::<LE>(node.id)?;
    w.write_u32::<LE>(k as u32)?;
    for &v in &node.vertices {
        w.write_u32::<LE>(v as u32)?;
    }
    w.write_u32::<LE>(node.source as u32)?;
    for p in node.tree.parents() {
        w.write_u32::<LE>(p.map_or(NONE, |p| p as u32))?;
    }
    for d in node.tree.dists() {
        w.write_u64::<LE>(d.raw())?;
    }
    match &node.kind {
        NodeKind::Leaf(g) => {
            w.write_u8(KIND_LEAF)?;
            w.write_u32::<LE>(g.m() as u32)?;
            for e in g.edges() {
                w.write_u32::<LE>(e.src as u32)?;
                w.write_u32::<LE>(e.dst as u32)?;
                w.write_u64::<LE>(e.weight)?;
            }
        }
        NodeKind::Split(sp) => {
            w.write_u8(KIND_SPLIT)?;
            w.write_u32::<LE>(sp.centroid as u32)?;
            w.write_u32::<LE>(sp.child1 as u32)?;
            w.write_u32::<LE>(sp.child2 as u32)?;
            w.write_all(&sp.side)?;
            let dp = &sp.pf.dp;
            w.write_u32::<LE>(dp.path.len() as u32)?;
            for &v in &dp.path {
                w.write_u32::<LE>(v as u32)?;
            }
            w.write_u32::<LE>(dp.table.levels.len() as u32)?;
            for level in &dp.table.levels {
                for &o in &level.offsets {
                    w.write_u32::<LE>(o)?;
                }
                for e in &level.entries {
                    w.write_u32::<LE>(e.round)?;
                    w.write_u64::<LE>(e.length)?;
                    w.write_u32::<LE>(e.branch as u32)?;
                }
            }
            for d in &sp.pf.sz.dhat {
                w.write_u64::<LE>(d.raw())?;
            }
            w.write_u64::<LE>(sp.pf.dist_to_centroid)?;
        }
    }
    Ok(())
}

fn corrupt(msg: impl Into<String>) -> Error {
    Error::Corrupt(msg.into())
}

fn read_index<R: Read>(r: &mut R, bound: usize, what: &str) -> Result<usize> {
    let v = r.read_u32::<LE>()? as usize;
    if v >= bound {
        return Err(corrupt(format!("{what} {v} out of range {bound}")));
    }
    Ok(v)
}

/// Length prefix, capped so a corrupt count cannot trigger a huge allocation.
fn read_len<R: Read>(r: &mut R, cap: usize, what: &str) -> Result<usize> {
    let v = r.read_u64::<LE>()?;
    usize::try_from(v)
        .ok()
        .filter(|&v| v <= cap)
        .ok_or_else(|| corrupt(format!("{what} {v} exceeds {cap}")))
}

fn read_oracle<R: Read>(r: &mut R) -> Result<Vsdo> {
    let mut magic = [0u8; 5];
    r.read_exact(&mut magic)?;
    if &magic != MAGIC {
        return Err(Error::BadMagic);
    }
    let version = r.read_u16::<LE>()?;
    if version != VERSION {
        return Err(Error::UnsupportedVersion(version));
    }
    let n = read_len(r, u32::MAX as usize - 1, "vertex count")?;
    let m = read_len(r, usize::MAX, "edge count")?;
    let max_weight = r.read_u64::<LE>()?;
    let source = read_len(r, n.saturating_sub(1), "source")?;
    let eps = r.read_f64::<LE>()?;
    let eps1 = r.read_f64::<LE>()?;
    let eps2 = r.read_f64::<LE>()?;
    let provider = SzProvider::from_code(r.read_u8()?).ok_or_else(|| corrupt("provider code"))?;
    let config = BuildConfig {
        eps,
        eps1,
        eps2,
        leaf_size: LEAF_SIZE,
        sz_provider: provider,
    };
    if BuildConfig::new(n, eps, provider)? != config {
        return Err(corrupt("accuracy parameters disagree with eps"));
    }
    let count = read_len(r, 2 * n.max(1), "node count")?;
    let root = read_len(r, count.saturating_sub(1), "root index")?;
    let mut nodes = Vec::with_capacity(count);
    for idx in 0..count {
        nodes.push(read_node(r, idx, n, eps2, &nodes)?);
    }
    if root + 1 != count || nodes[root].local(source).is_none() {
        return Err(corrupt("root node"));
    }
    Ok(Vsdo {
        config,
        n,
        m,
        max_weight,
        source,
        nodes,
        root,
    })
}

fn read_node<R: Read>(
    r: &mut R,
    idx: usize,
    n: usize,
    eps2: f64,
    done: &[OracleNode],
) -> Result<OracleNode> {
    let id = r.read_u64::<LE>()?;
    let k = r.read_u32::<LE>()? as usize;
    if k == 0 || k > n {
        return Err(corrupt(format!("node {idx} has {k} vertices")));
    }
    let mut vertices = Vec::with_capacity(k);
    for _ in 0..k {
        vertices.push(read_index(r, n, "vertex")?);
    }
    if vertices.windows(2).any(|w| w[0] >= w[1]) {
        return Err(corrupt("node vertices not ascending"));
    }
    let source = read_index(r, k, "node source")?;
    let mut parent = Vec::with_capacity(k);
    for _ in 0..k {
        let p = r.read_u32::<LE>()?;
        parent.push(match p {
            NONE => None,
            p if (p as usize) < k => Some(p as usize),
            _ => return Err(corrupt("tree parent")),
        });
    }
    let mut dist = Vec::with_capacity(k);
    for _ in 0..k {
        dist.push(Distance::from_raw(r.read_u64::<LE>()?));
    }
    let tree = SpTree::from_parts(source, parent, dist);
    if tree.covered_count() != k || (0..k).any(|v| !tree.dist(v).is_finite()) {
        return Err(corrupt("tree does not span the node"));
    }

    let kind = match r.read_u8()? {
        KIND_LEAF => {
            let m = r.read_u32::<LE>()? as usize;
            let mut edges = Vec::with_capacity(m.min(k * k));
            for _ in 0..m {
                let src = read_index(r, k, "edge tail")?;
                let dst = read_index(r, k, "edge head")?;
                let weight = r.read_u64::<LE>()?;
                edges.push(Edge { src, dst, weight });
            }
            NodeKind::Leaf(Digraph::from_edges_unchecked(k, edges))
        }
        KIND_SPLIT => NodeKind::Split(Box::new(read_split(r, k, eps2, idx, done)?)),
        other => return Err(corrupt(format!("node kind {other}"))),
    };
    Ok(OracleNode {
        id,
        vertices,
        source,
        tree,
        kind,
    })
}

fn read_split<R: Read>(
    r: &mut R,
    k: usize,
    eps2: f64,
    idx: usize,
    done: &[OracleNode],
) -> Result<SplitNode> {
    let centroid = read_index(r, k, "centroid")?;
    // post-order: children were read before this node
    let child1 = read_index(r, idx, "child")?;
    let child2 = read_index(r, idx, "child")?;
    let mut side = vec![0u8; k];
    r.read_exact(&mut side)?;
    if side.iter().any(|&b| b & !(IN_CHILD1 | IN_CHILD2) != 0) {
        return Err(corrupt("membership bits"));
    }
    let count = |bit: u8| side.iter().filter(|&&b| b & bit != 0).count();
    if count(IN_CHILD1) != done[child1].len() || count(IN_CHILD2) != done[child2].len() {
        return Err(corrupt("child sizes"));
    }

    let p = r.read_u32::<LE>()? as usize;
    if p == 0 || p > k {
        return Err(corrupt("path length"));
    }
    let mut path = Vec::with_capacity(p);
    for _ in 0..p {
        path.push(read_index(r, k, "path vertex")?);
    }
    let levels_n = r.read_u32::<LE>()?;
    if levels_n != level_count(p) {
        return Err(corrupt("level count"));
    }
    let mut levels = Vec::with_capacity(levels_n as usize);
    for _ in 0..levels_n {
        let mut offsets = Vec::with_capacity(k + 1);
        for _ in 0..=k {
            offsets.push(r.read_u32::<LE>()?);
        }
        if offsets[0] != 0 || offsets.windows(2).any(|w| w[0] > w[1]) {
            return Err(corrupt("upd offsets"));
        }
        let total = offsets[k] as usize;
        let mut entries = Vec::with_capacity(total.min(1 << 20));
        for _ in 0..total {
            let round = r.read_u32::<LE>()?;
            let length = r.read_u64::<LE>()?;
            let branch = read_index(r, k, "branch")?;
            entries.push(UpdEntry {
                round,
                length,
                branch,
            });
        }
        levels.push(UpdLevel { offsets, entries });
    }
    let mut dhat = Vec::with_capacity(p);
    for _ in 0..p {
        dhat.push(Distance::from_raw(r.read_u64::<LE>()?));
    }
    let dist_to_centroid = r.read_u64::<LE>()?;
    if dist_to_centroid == INF {
        return Err(corrupt("centroid distance"));
    }
    let table = UpdTable {
        path_len: p,
        eps2,
        levels,
    };
    let dp = DpOracle::new(table, path, k);
    Ok(SplitNode {
        centroid,
        side,
        pf: PfOracle::new(dp, SzTable { dhat }, dist_to_centroid),
        child1,
        child2,
    })
}
