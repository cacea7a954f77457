//! The recursive oracle: one node per recursion subproblem, query routing,
//! and the on-disk format.

mod codec;
mod construct;

pub use codec::{MAGIC, VERSION};
pub use construct::{construct_g1, construct_g2, f2_candidates, Subgraph};

use construct::LocalMap;

use crate::distance::Distance;
use crate::error::{Error, Result};
use crate::graphcore::{
    build_spt, centroid_bipartition, dijkstra, dijkstra_avoiding, Digraph, Edge, SpTree, VertexId,
    LEAF_SIZE,
};
use crate::pathfault::{build_sz_table, DpOracle, PfOracle, SzProvider};
use crate::progdijk::run_progressive;

/// `ceil(log2 n)`, with `0` for `n <= 1`.
pub fn ceil_log2(n: usize) -> u32 {
    if n <= 1 {
        0
    } else {
        usize::BITS - (n - 1).leading_zeros()
    }
}

/// Accuracy parameters shared by every recursion node.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BuildConfig {
    pub eps: f64,
    pub eps1: f64,
    pub eps2: f64,
    pub leaf_size: usize,
    pub sz_provider: SzProvider,
}

impl BuildConfig {
    /// Derives `eps1` and `eps2` from `eps` and the input vertex count.
    pub fn new(n: usize, eps: f64, sz_provider: SzProvider) -> Result<Self> {
        if !(eps > 0.0 && eps <= 1.0) {
            return Err(Error::InvalidEpsilon(eps));
        }
        let log_n = f64::from(ceil_log2(n).max(1));
        let eps1 = eps / (3.0 * log_n);
        let eps2 = eps1 / (2.0 * log_n);
        Ok(BuildConfig {
            eps,
            eps1,
            eps2,
            leaf_size: LEAF_SIZE,
            sz_provider,
        })
    }
}

/// Bits of [`OracleNode::side`].
pub(crate) const IN_CHILD1: u8 = 1;
pub(crate) const IN_CHILD2: u8 = 2;

#[derive(Clone, Debug, PartialEq)]
pub struct SplitNode {
    pub(crate) centroid: VertexId,
    /// Per local vertex: `IN_CHILD1 | IN_CHILD2` membership bits.
    pub(crate) side: Vec<u8>,
    pub(crate) pf: PfOracle,
    pub(crate) child1: usize,
    pub(crate) child2: usize,
}

impl SplitNode {
    pub fn centroid(&self) -> VertexId {
        self.centroid
    }

    pub fn pf(&self) -> &PfOracle {
        &self.pf
    }

    pub fn in_child1(&self, v: VertexId) -> bool {
        self.side[v] & IN_CHILD1 != 0
    }

    pub fn in_child2(&self, v: VertexId) -> bool {
        self.side[v] & IN_CHILD2 != 0
    }

    /// Node indices of the `T1` and `T2` children.
    pub fn children(&self) -> (usize, usize) {
        (self.child1, self.child2)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum NodeKind {
    Leaf(Digraph),
    Split(Box<SplitNode>),
}

/// One recursion subproblem. Vertices are numbered locally in ascending
/// order of their global id.
#[derive(Clone, Debug, PartialEq)]
pub struct OracleNode {
    pub(crate) id: u64,
    pub(crate) vertices: Vec<VertexId>,
    pub(crate) source: VertexId,
    pub(crate) tree: SpTree,
    pub(crate) kind: NodeKind,
}

impl OracleNode {
    /// Heap-style id: root `1`, children `2i` and `2i + 1`.
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn depth(&self) -> u32 {
        63 - self.id.leading_zeros()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Global ids, ascending.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn local(&self, global: VertexId) -> Option<VertexId> {
        self.vertices.binary_search(&global).ok()
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn tree(&self) -> &SpTree {
        &self.tree
    }

    pub fn kind(&self) -> &NodeKind {
        &self.kind
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self.kind, NodeKind::Leaf(_))
    }

    pub fn split(&self) -> Option<&SplitNode> {
        match &self.kind {
            NodeKind::Split(sp) => Some(sp),
            NodeKind::Leaf(_) => None,
        }
    }
}

/// Per-query counters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct QueryTrace {
    pub visits: u32,
    pub pf_calls: u32,
    pub dp_calls: u32,
    pub leaf_runs: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VsdoStats {
    pub nodes: usize,
    pub leaves: usize,
    pub depth: u32,
    /// Sum of node vertex counts, per depth.
    pub vertices_per_depth: Vec<usize>,
    pub upd_entries: usize,
    pub max_upd_list: usize,
    pub leaf_edges: usize,
    pub path_vertices: usize,
}

/// A `(1 + eps)`-approximate single-source vertex-fault distance oracle.
#[derive(Clone, Debug, PartialEq)]
pub struct Vsdo {
    pub(crate) config: BuildConfig,
    pub(crate) n: usize,
    pub(crate) m: usize,
    pub(crate) max_weight: u64,
    pub(crate) source: VertexId,
    pub(crate) nodes: Vec<OracleNode>,
    pub(crate) root: usize,
}

impl Vsdo {
    pub fn build(g: &Digraph, s: VertexId, eps: f64, sz_provider: SzProvider) -> Result<Self> {
        g.check_vertex(s)?;
        g.validate_input()?;
        let config = BuildConfig::new(g.n(), eps, sz_provider)?;

        let reach = dijkstra(g, s)?;
        let map = LocalMap::new(g.n(), |v| reach.dist[v].is_finite());
        let edges = g
            .edges()
            .iter()
            .filter_map(|e| {
                Some(Edge {
                    src: map.get(e.src)?,
                    dst: map.get(e.dst)?,
                    weight: e.weight,
                })
            })
            .collect();
        let root_graph = Digraph::from_edges_unchecked(map.vertices.len(), edges);
        let root_source = map.get(s).expect("source reaches itself");

        let mut builder = Builder {
            config,
            nodes: Vec::new(),
        };
        let root = builder.build_node(root_graph, map.vertices, root_source, 1)?;
        Ok(Vsdo {
            config,
            n: g.n(),
            m: g.m(),
            max_weight: g.max_weight(),
            source: s,
            nodes: builder.nodes,
            root,
        })
    }

    pub fn config(&self) -> &BuildConfig {
        &self.config
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn max_weight(&self) -> u64 {
        self.max_weight
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    /// Nodes in post-order; the root is last.
    pub fn nodes(&self) -> &[OracleNode] {
        &self.nodes
    }

    pub fn root(&self) -> &OracleNode {
        &self.nodes[self.root]
    }

    pub fn node(&self, idx: usize) -> &OracleNode {
        &self.nodes[idx]
    }

    pub fn depth(&self) -> u32 {
        self.nodes.iter().map(OracleNode::depth).max().unwrap_or(0)
    }

    /// Approximate `dist_{G - x}(s, t)`.
    pub fn query(&self, x: VertexId, t: VertexId) -> Result<Distance> {
        self.query_traced(x, t).map(|(d, _)| d)
    }

    pub fn query_traced(&self, x: VertexId, t: VertexId) -> Result<(Distance, QueryTrace)> {
        for v in [x, t] {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
        }
        if x == self.source {
            return Err(Error::SourceFault);
        }
        let mut trace = QueryTrace::default();
        if t == self.source {
            return Ok((Distance::ZERO, trace));
        }
        if x == t || self.root().local(t).is_none() {
            return Ok((Distance::Unreachable, trace));
        }
        let d = self.query_node(self.root, x, t, &mut trace)?;
        Ok((d, trace))
    }

    fn query_node(
        &self,
        idx: usize,
        x: VertexId,
        t: VertexId,
        trace: &mut QueryTrace,
    ) -> Result<Distance> {
        trace.visits += 1;
        let node = &self.nodes[idx];
        let tl = node.local(t).expect("target belongs to the node");
        let xl = match node.local(x) {
            Some(xl) if node.tree.is_ancestor(xl, tl) => xl,
            _ => return Ok(node.tree.dist(tl)),
        };
        match &node.kind {
            NodeKind::Leaf(graph) => {
                trace.leaf_runs += 1;
                Ok(dijkstra_avoiding(graph, node.source, xl)?.dist[tl])
            }
            NodeKind::Split(sp) => {
                let on_path = sp.pf.dp.position(xl).is_some();
                if on_path && sp.in_child2(tl) {
                    trace.pf_calls += 1;
                    sp.pf.query(xl, tl, node.tree.dist(tl))
                } else if sp.in_child1(xl) && sp.in_child1(tl) {
                    let below = self.query_node(sp.child1, x, t, trace)?;
                    if on_path {
                        trace.dp_calls += 1;
                        Ok(below.min(sp.pf.dp.query(xl, tl)?))
                    } else {
                        Ok(below)
                    }
                } else if sp.in_child2(xl) && sp.in_child2(tl) {
                    self.query_node(sp.child2, x, t, trace)
                } else {
                    unreachable!("an off-path T1 vertex is never an ancestor of a T2 vertex")
                }
            }
        }
    }

    pub fn stats(&self) -> VsdoStats {
        let depth = self.depth();
        let mut st = VsdoStats {
            nodes: self.nodes.len(),
            depth,
            vertices_per_depth: vec![0; depth as usize + 1],
            ..VsdoStats::default()
        };
        for node in &self.nodes {
            st.vertices_per_depth[node.depth() as usize] += node.len();
            match &node.kind {
                NodeKind::Leaf(g) => {
                    st.leaves += 1;
                    st.leaf_edges += g.m();
                }
                NodeKind::Split(sp) => {
                    let table = sp.pf.dp.table();
                    st.upd_entries += table.total_entries();
                    st.path_vertices += table.path_len();
                    for level in 0..table.level_count() {
                        for v in 0..node.len() {
                            st.max_upd_list = st.max_upd_list.max(table.entries(level, v).len());
                        }
                    }
                }
            }
        }
        st
    }
}

struct Builder {
    config: BuildConfig,
    nodes: Vec<OracleNode>,
}

impl Builder {
    fn build_node(
        &mut self,
        g: Digraph,
        vertices: Vec<VertexId>,
        source: VertexId,
        id: u64,
    ) -> Result<usize> {
        let tree = build_spt(&g, source)?;
        debug_assert_eq!(tree.covered_count(), g.n());
        if g.n() <= self.config.leaf_size {
            self.nodes.push(OracleNode {
                id,
                vertices,
                source,
                tree,
                kind: NodeKind::Leaf(g),
            });
            return Ok(self.nodes.len() - 1);
        }

        let split = centroid_bipartition(&tree)?;
        let table = run_progressive(&g, &tree, &split, self.config.eps2);
        let dp = DpOracle::new(table, split.root_path().to_vec(), g.n());
        let sz = build_sz_table(&g, &tree, &split, self.config.sz_provider, &dp)?;
        let g1 = construct_g1(&g, &tree, &split, dp.table())?;
        let g2 = construct_g2(&g, &tree, &split)?;
        drop(g);

        let mut side = vec![0u8; vertices.len()];
        for (v, bits) in side.iter_mut().enumerate() {
            if split.in_t1(v) {
                *bits |= IN_CHILD1;
            }
            if split.below_centroid(v) || v == source {
                *bits |= IN_CHILD2;
            }
        }
        let z = split.centroid();
        let to_z = tree.dist(z).finite().expect("centroid is covered");
        let pf = PfOracle::new(dp, sz, to_z);

        let globals = |sub: &Subgraph| {
            sub.vertices
                .iter()
                .map(|&v| vertices[v])
                .collect::<Vec<_>>()
        };
        let (v1, v2) = (globals(&g1), globals(&g2));
        let left = id.checked_mul(2).expect("recursion depth fits in 63 bits");
        let child1 = self.build_node(g1.graph, v1, g1.source, left)?;
        let child2 = self.build_node(g2.graph, v2, g2.source, left + 1)?;

        self.nodes.push(OracleNode {
            id,
            vertices,
            source,
            tree,
            kind: NodeKind::Split(Box::new(SplitNode {
                centroid: z,
                side,
                pf,
                child1,
                child2,
            })),
        });
        Ok(self.nodes.len() - 1)
    }
}
