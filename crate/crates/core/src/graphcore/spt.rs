use super::dijkstra::dijkstra;
use super::graph::{Digraph, VertexId};
use crate::distance::Distance;
use crate::error::Result;

/// Shortest path tree with preorder timestamps for O(1) ancestor tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpTree {
    root: VertexId,
    parent: Vec<Option<VertexId>>,
    dist: Vec<Distance>,
    /// Preorder index, `u32::MAX` for vertices not reached from the root.
    tin: Vec<u32>,
    /// Last preorder index inside the subtree.
    tout: Vec<u32>,
    preorder: Vec<VertexId>,
    child_start: Vec<u32>,
    child_list: Vec<u32>,
}

const UNSEEN: u32 = u32::MAX;

impl SpTree {
    /// Assembles a tree from parent pointers and distances. Children are
    /// visited in ascending id order.
    pub fn from_parts(root: VertexId, parent: Vec<Option<VertexId>>, dist: Vec<Distance>) -> Self {
        let n = parent.len();
        let mut child_start = vec![0u32; n + 1];
        for p in parent.iter().flatten() {
            child_start[p + 1] += 1;
        }
        for v in 0..n {
            child_start[v + 1] += child_start[v];
        }
        let mut cursor: Vec<u32> = child_start[..n].to_vec();
        let mut child_list = vec![0u32; child_start[n] as usize];
        // ascending v gives ascending children per parent
        for (v, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                child_list[cursor[p] as usize] = v as u32;
                cursor[p] += 1;
            }
        }

        let mut tin = vec![UNSEEN; n];
        let mut tout = vec![UNSEEN; n];
        let mut preorder = Vec::with_capacity(n);
        let mut stack: Vec<(VertexId, u32)> = vec![(root, child_start[root])];
        tin[root] = 0;
        preorder.push(root);
        while let Some(top) = stack.last_mut() {
            let (v, next) = *top;
            if next < child_start[v + 1] {
                top.1 += 1;
                let c = child_list[next as usize] as usize;
                tin[c] = preorder.len() as u32;
                preorder.push(c);
                stack.push((c, child_start[c]));
            } else {
                tout[v] = preorder.len() as u32 - 1;
                stack.pop();
            }
        }
        SpTree {
            root,
            parent,
            dist,
            tin,
            tout,
            preorder,
            child_start,
            child_list,
        }
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<VertexId>] {
        &self.parent
    }

    pub fn dist(&self, v: VertexId) -> Distance {
        self.dist[v]
    }

    pub fn dists(&self) -> &[Distance] {
        &self.dist
    }

    pub fn is_covered(&self, v: VertexId) -> bool {
        self.tin[v] != UNSEEN
    }

    pub fn covered_count(&self) -> usize {
        self.preorder.len()
    }

    /// Covered vertices in preorder.
    pub fn preorder(&self) -> &[VertexId] {
        &self.preorder
    }

    pub fn tin(&self, v: VertexId) -> u32 {
        self.tin[v]
    }

    pub fn tout(&self, v: VertexId) -> u32 {
        self.tout[v]
    }

    pub fn children(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.child_list[self.child_start[v] as usize..self.child_start[v + 1] as usize]
            .iter()
            .map(|&c| c as VertexId)
    }

    /// Number of vertices in the subtree of `v` (0 if uncovered).
    pub fn subtree_size(&self, v: VertexId) -> usize {
        if self.is_covered(v) {
            (self.tout[v] - self.tin[v] + 1) as usize
        } else {
            0
        }
    }

    /// Reflexive: every covered vertex is its own ancestor.
    pub fn is_ancestor(&self, a: VertexId, b: VertexId) -> bool {
        self.is_covered(a)
            && self.is_covered(b)
            && self.tin[a] <= self.tin[b]
            && self.tout[b] <= self.tout[a]
    }

    /// Tree path from the root to `v`, inclusive.
    pub fn path_from_root(&self, v: VertexId) -> Vec<VertexId> {
        let mut path = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }
}

/// Shortest path tree from `s` with canonical smallest-id tie breaking.
pub fn build_spt(g: &Digraph, s: VertexId) -> Result<SpTree> {
    let sp = dijkstra(g, s)?;
    Ok(SpTree::from_parts(s, sp.parent, sp.dist))
}
