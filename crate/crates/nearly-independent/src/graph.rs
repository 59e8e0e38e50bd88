//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` neighbor bitmask per vertex, so subset
//! and neighborhood operations are single word operations. Vertices are
//! labelled `0..n`. All operations are pure: they return new graphs and
//! never mutate the receiver.

use std::fmt;

use thiserror::Error;

/// Hard cap on the number of vertices, so a [`VertexSet`] fits in one word.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("({0},{1}) is not an edge")]
    NotAnEdge(usize, usize),
}

/// A set of vertices of a graph of order at most 64, as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1u64 << v) != 0
    }

    #[must_use]
    pub fn insert(self, v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 | (1u64 << v))
    }

    #[must_use]
    pub fn remove(self, v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 & !(1u64 << v))
    }

    #[must_use]
    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Complement relative to the full vertex set of an order-`n` graph.
    #[must_use]
    pub fn complement_within(self, n: usize) -> Self {
        VertexSet(!self.0 & Self::full(n).0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Iterates members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// Smallest member, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s = s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An immutable simple undirected graph with vertices `0..n`, `n <= 64`.
///
/// Invariants (checked in debug builds):
/// * adjacency is symmetric,
/// * no self-loops,
/// * no adjacency bit at or above position `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The graph with no vertices.
    pub fn empty() -> Self {
        Graph { n: 0, adj: Vec::new() }
    }

    /// The edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are errors.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::edgeless(n)?;
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
                }
            }
            g.adj[u] |= 1u64 << v;
            g.adj[v] |= 1u64 << u;
        }
        debug_assert!(g.check_invariants());
        Ok(g)
    }

    /// Builds directly from neighbor bitmasks, validating the invariants.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let full = VertexSet::full(n).bits();
        for (v, &mask) in adj.iter().enumerate() {
            if mask & !full != 0 {
                return Err(GraphError::VertexOutOfRange {
                    vertex: (mask & !full).trailing_zeros() as usize,
                    order: n,
                });
            }
            if mask & (1u64 << v) != 0 {
                return Err(GraphError::SelfLoop(v));
            }
        }
        for v in 0..n {
            for u in (v + 1)..n {
                let uv = adj[v] >> u & 1;
                let vu = adj[u] >> v & 1;
                if uv != vu {
                    return Err(GraphError::NotAnEdge(v, u));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    fn check_invariants(&self) -> bool {
        let full = VertexSet::full(self.n).bits();
        self.adj.iter().enumerate().all(|(v, &m)| {
            m & !full == 0
                && m & (1u64 << v) == 0
                && (0..self.n).all(|u| (m >> u & 1) == (self.adj[u] >> v & 1))
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1u64 << v) != 0
    }

    /// Open neighborhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Closed neighborhood `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | (1u64 << v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Maximum degree, or `None` for the graph with no vertices.
    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(|m| m.count_ones() as usize).max()
    }

    /// A vertex of maximum degree, lowest label on ties.
    pub fn max_degree_vertex(&self) -> Option<usize> {
        (0..self.n).max_by_key(|&v| (self.degree(v), usize::MAX - v))
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges as `(u, v)` pairs with `u < v`, lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut above = self.adj[u] >> (u + 1) << (u + 1);
            while above != 0 {
                let v = above.trailing_zeros() as usize;
                above &= above - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// Degree multiset in increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        degs.sort_unstable();
        degs
    }

    /// Number of edges with both ends inside `s`.
    pub fn edges_within(&self, s: VertexSet) -> usize {
        s.iter()
            .map(|v| (self.adj[v] & s.bits()).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Disjoint union; vertices of `other` are relabelled by an offset of
    /// `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = Vec::with_capacity(n);
        adj.extend_from_slice(&self.adj);
        adj.extend(other.adj.iter().map(|&m| m << self.n));
        Ok(Graph { n, adj })
    }

    /// Join: disjoint union plus every edge between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.disjoint_union(other)?;
        let left = VertexSet::full(self.n).bits();
        let right = VertexSet::full(g.n).bits() & !left;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        debug_assert!(g.check_invariants());
        Ok(g)
    }

    /// Complement graph: the edge set becomes exactly the non-edges.
    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).bits();
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & full & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Induced subgraph on `V \ s`; remaining vertices are compacted to
    /// `0..n-|s|` preserving relative order.
    pub fn delete_vertices(&self, s: VertexSet) -> Graph {
        let keep = self.vertex_set().difference(s);
        self.induced(keep)
    }

    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.delete_vertices(VertexSet::singleton(v))
    }

    /// Induced subgraph on `keep`, compacted to `0..|keep|` preserving order.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let keep = keep.intersection(self.vertex_set());
        let n = keep.len();
        let mut adj = Vec::with_capacity(n);
        for v in keep.iter() {
            let mut mask = 0u64;
            // Compact: bit i of the new mask is the i-th kept neighbor.
            for (i, u) in keep.iter().enumerate() {
                if self.adj[v] >> u & 1 != 0 {
                    mask |= 1u64 << i;
                }
            }
            adj.push(mask);
        }
        Graph { n, adj }
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut comps = Vec::new();
        for v in 0..self.n {
            if seen.contains(v) {
                continue;
            }
            let mut comp = VertexSet::singleton(v);
            loop {
                let mut grown = comp;
                for u in comp.iter() {
                    grown = grown.union(self.neighbors(u));
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen = seen.union(comp);
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal order");
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            let mut mask = 0u64;
            let mut bits = self.adj[v];
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                mask |= 1u64 << perm[u];
            }
            adj[perm[v]] = mask;
        }
        let g = Graph { n: self.n, adj };
        debug_assert!(g.check_invariants());
        g
    }

    /// Raw neighbor bitmasks; index `v` holds `N(v)`.
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
