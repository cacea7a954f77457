use super::graph::VertexId;
use super::spt::SpTree;
use crate::error::{Error, Result};

/// Trees with at most this many vertices are never split.
pub const LEAF_SIZE: usize = 6;

const OFF_PATH: u32 = u32::MAX;

/// Centroid bipartition of a rooted tree into edge-disjoint subtrees `T1`
/// (holding the root) and `T2` (rooted at the centroid), sharing only the
/// centroid, together with the root-to-centroid path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentroidSplit {
    centroid: VertexId,
    in_t1: Vec<bool>,
    in_t2: Vec<bool>,
    root_path: Vec<VertexId>,
    pos: Vec<u32>,
}

impl CentroidSplit {
    pub fn centroid(&self) -> VertexId {
        self.centroid
    }

    pub fn in_t1(&self, v: VertexId) -> bool {
        self.in_t1[v]
    }

    pub fn in_t2(&self, v: VertexId) -> bool {
        self.in_t2[v]
    }

    /// `v` lies in `T2` but is not the centroid.
    pub fn below_centroid(&self, v: VertexId) -> bool {
        self.in_t2[v] && v != self.centroid
    }

    pub fn t1_size(&self) -> usize {
        self.in_t1.iter().filter(|&&b| b).count()
    }

    pub fn t2_size(&self) -> usize {
        self.in_t2.iter().filter(|&&b| b).count()
    }

    /// `P_T = <v_0 = root, ..., v_{p-1} = centroid>`.
    pub fn root_path(&self) -> &[VertexId] {
        &self.root_path
    }

    pub fn path_len(&self) -> usize {
        self.root_path.len()
    }

    pub fn position(&self, v: VertexId) -> Option<usize> {
        let p = self.pos[v];
        (p != OFF_PATH).then_some(p as usize)
    }

    pub fn on_path(&self, v: VertexId) -> bool {
        self.pos[v] != OFF_PATH
    }
}

/// Splits the covered part of `tree` at a centroid.
///
/// The centroid minimises the largest component of `T - z` (smallest id on
/// ties). Components are taken largest first and each goes to the currently
/// lighter side.
pub fn centroid_bipartition(tree: &SpTree) -> Result<CentroidSplit> {
    let k = tree.covered_count();
    if k <= LEAF_SIZE {
        return Err(Error::TreeTooSmall(k));
    }
    let n = tree.len();
    let root = tree.root();

    let mut best = (usize::MAX, VertexId::MAX);
    for &v in tree.preorder() {
        let up = k - tree.subtree_size(v);
        let down = tree
            .children(v)
            .map(|c| tree.subtree_size(c))
            .max()
            .unwrap_or(0);
        best = best.min((up.max(down), v));
    }
    let z = best.1;

    // (size, representative, child of z or None for the root side)
    let mut comps: Vec<(usize, VertexId, Option<VertexId>)> = tree
        .children(z)
        .map(|c| (tree.subtree_size(c), c, Some(c)))
        .collect();
    if z != root {
        let up_rep = tree
            .parent(z)
            .expect("non-root covered vertex has a parent");
        comps.push((k - tree.subtree_size(z), up_rep, None));
    }
    comps.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

    let mut load = [0usize; 2];
    let mut side_of = Vec::with_capacity(comps.len());
    for comp in &comps {
        let side = usize::from(load[1] < load[0]);
        load[side] += comp.0;
        side_of.push(side);
    }
    let t1_side = comps
        .iter()
        .zip(&side_of)
        .find(|(c, _)| c.2.is_none())
        .map_or(0, |(_, &s)| s);

    let mut in_t1 = vec![false; n];
    let mut in_t2 = vec![false; n];
    in_t1[z] = true;
    in_t2[z] = true;
    let preorder = tree.preorder();
    for (comp, &side) in comps.iter().zip(&side_of) {
        let target = if side == t1_side {
            &mut in_t1
        } else {
            &mut in_t2
        };
        match comp.2 {
            Some(c) => {
                let range = tree.tin(c) as usize..=tree.tout(c) as usize;
                for &v in &preorder[range] {
                    target[v] = true;
                }
            }
            None => {
                for &v in preorder {
                    if !tree.is_ancestor(z, v) {
                        target[v] = true;
                    }
                }
            }
        }
    }

    let root_path = tree.path_from_root(z);
    let mut pos = vec![OFF_PATH; n];
    for (i, &v) in root_path.iter().enumerate() {
        pos[v] = i as u32;
    }
    Ok(CentroidSplit {
        centroid: z,
        in_t1,
        in_t2,
        root_path,
        pos,
    })
}
