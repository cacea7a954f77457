use crate::error::{Error, Result};

/// Dense vertex index in `[0, n)`.
pub type VertexId = usize;

/// Edge weight. Input graphs use `1..=W`; derived graphs may carry larger
/// synthetic weights.
pub type Weight = u64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub src: VertexId,
    pub dst: VertexId,
    pub weight: Weight,
}

/// Directed multigraph with a CSR out-adjacency index.
///
/// Self-loops are dropped on construction. Parallel edges are kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    edges: Vec<Edge>,
    first_out: Vec<u32>,
    head: Vec<u32>,
    weight: Vec<Weight>,
}

impl Digraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId, Weight)>,
    {
        let mut list = Vec::new();
        for (src, dst, weight) in edges {
            for v in [src, dst] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if src != dst {
                list.push(Edge { src, dst, weight });
            }
        }
        Ok(Self::from_edges_unchecked(n, list))
    }

    pub(crate) fn from_edges_unchecked(n: usize, edges: Vec<Edge>) -> Self {
        let mut first_out = vec![0u32; n + 1];
        for e in &edges {
            first_out[e.src + 1] += 1;
        }
        for v in 0..n {
            first_out[v + 1] += first_out[v];
        }
        let mut cursor: Vec<u32> = first_out[..n].to_vec();
        let mut head = vec![0u32; edges.len()];
        let mut weight = vec![0; edges.len()];
        for e in &edges {
            let slot = cursor[e.src] as usize;
            head[slot] = e.dst as u32;
            weight[slot] = e.weight;
            cursor[e.src] += 1;
        }
        Digraph {
            n,
            edges,
            first_out,
            head,
            weight,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn out_edges(&self, u: VertexId) -> impl Iterator<Item = (VertexId, Weight)> + '_ {
        let range = self.first_out[u] as usize..self.first_out[u + 1] as usize;
        self.head[range.clone()]
            .iter()
            .zip(&self.weight[range])
            .map(|(&v, &w)| (v as VertexId, w))
    }

    pub fn out_degree(&self, u: VertexId) -> usize {
        (self.first_out[u + 1] - self.first_out[u]) as usize
    }

    pub fn max_weight(&self) -> Weight {
        self.edges.iter().map(|e| e.weight).max().unwrap_or(0)
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Checks the input-graph contract: every weight is at least 1 and
    /// `n * W * n` fits in 64 bits.
    pub fn validate_input(&self) -> Result<()> {
        if let Some(e) = self.edges.iter().find(|e| e.weight == 0) {
            return Err(Error::InvalidWeight {
                src: e.src,
                dst: e.dst,
                weight: e.weight,
            });
        }
        let n = self.n as u64;
        let w = self.max_weight().max(1);
        if n.checked_mul(w)
            .and_then(|x| x.checked_mul(n))
            .is_none_or(|x| x == u64::MAX)
        {
            return Err(Error::DistanceOverflow {
                n: self.n,
                max_weight: w,
            });
        }
        Ok(())
    }
}
