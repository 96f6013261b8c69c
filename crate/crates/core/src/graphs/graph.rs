use std::fmt;

use crate::bitset::{bit, full, Bits};
use crate::error::{invalid, Result};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// A finite simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored as one `u64` row per vertex, so `n` is capped at
/// [`MAX_VERTICES`]. The relation is kept symmetric and irreflexive by every
/// mutator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return invalid(format!("graph has {n} vertices, at most {MAX_VERTICES} supported"));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for v in 0..n {
            g.adj[v] = full(n) & !bit(v);
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, rejecting asymmetric or reflexive input.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        let g = Graph { n, adj: rows };
        if n > MAX_VERTICES {
            return invalid(format!("graph has {n} vertices, at most {MAX_VERTICES} supported"));
        }
        for u in 0..n {
            if g.adj[u] & !full(n) != 0 {
                return invalid(format!("row {u} references a vertex outside 0..{n}"));
            }
            if g.adj[u] & bit(u) != 0 {
                return invalid(format!("self-loop at {u}"));
            }
            for v in Bits(g.adj[u]) {
                if g.adj[v] & bit(u) == 0 {
                    return invalid(format!("adjacency not symmetric at ({u}, {v})"));
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Neighborhood of `v` as a bitmask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        full(self.n)
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return invalid(format!("edge ({u}, {v}) out of range for n = {}", self.n));
        }
        if u == v {
            return invalid(format!("self-loop at {u}"));
        }
        self.add_edge(u, v);
        Ok(())
    }

    /// Panics on out-of-range vertices; loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "vertex out of range");
        if u != v {
            self.adj[u] |= bit(v);
            self.adj[v] |= bit(u);
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.adj[u] & !full(u + 1)).map(move |v| (u, v)))
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let all = full(self.n);
        (0..self.n)
            .flat_map(move |u| Bits(!self.adj[u] & all & !full(u + 1)).map(move |v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Whether `mask` induces a clique.
    pub fn is_clique(&self, mask: u64) -> bool {
        Bits(mask).all(|v| self.adj[v] & mask == mask & !bit(v))
    }

    /// Whether `mask` induces an independent set.
    pub fn is_independent(&self, mask: u64) -> bool {
        Bits(mask).all(|v| self.adj[v] & mask == 0)
    }

    pub fn complement(&self) -> Graph {
        let all = full(self.n);
        Graph {
            n: self.n,
            adj: (0..self.n).map(|v| !self.adj[v] & all & !bit(v)).collect(),
        }
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut seen = 0u64;
        for &v in vertices {
            if v >= self.n {
                return invalid(format!("vertex {v} out of range for n = {}", self.n));
            }
            if seen & bit(v) != 0 {
                return invalid(format!("vertex {v} listed twice"));
            }
            seen |= bit(v);
        }
        let k = vertices.len();
        let mut h = Graph::new(k)?;
        for i in 0..k {
            for j in (i + 1)..k {
                if self.has_edge(vertices[i], vertices[j]) {
                    h.add_edge(i, j);
                }
            }
        }
        Ok(h)
    }

    /// `E(self) ⊆ E(other)` on the same vertex set.
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj.iter().zip(&other.adj).all(|(a, b)| a & !b == 0)
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return invalid("permutation length does not match vertex count");
        }
        let mut g = Graph::new(self.n)?;
        for (u, v) in self.edges() {
            g.try_add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

fn check_same_n(gs: &[Graph]) -> Result<usize> {
    let Some(first) = gs.first() else {
        return invalid("empty graph list");
    };
    if let Some(g) = gs.iter().find(|g| g.n != first.n) {
        return invalid(format!("vertex count mismatch: {} vs {}", first.n, g.n));
    }
    Ok(first.n)
}

/// Graph whose edges are present in every input.
pub fn intersect_graphs(gs: &[Graph]) -> Result<Graph> {
    let n = check_same_n(gs)?;
    let adj = (0..n).map(|v| gs.iter().fold(u64::MAX, |m, g| m & g.adj[v])).collect();
    Ok(Graph { n, adj })
}

/// Graph whose edges are present in some input.
pub fn union_edges(gs: &[Graph]) -> Result<Graph> {
    let n = check_same_n(gs)?;
    let adj = (0..n).map(|v| gs.iter().fold(0, |m, g| m | g.adj[v])).collect();
    Ok(Graph { n, adj })
}

/// Path on `n` vertices `0 - 1 - ... - n-1`.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("path within capacity")
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    if n >= 3 {
        g.add_edge(n - 1, 0);
    }
    g
}

/// Star with center 0 and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::from_edges(leaves + 1, &edges).expect("star within capacity")
}
