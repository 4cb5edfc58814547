//! Simple undirected graphs on at most 64 vertices, stored as adjacency bitsets.
//!
//! Vertices are always `0..n`. Every operation that removes or merges vertices
//! returns a new graph with a deterministic relabeling: surviving vertices keep
//! their relative order.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order. Adjacency rows are `u64` bitsets.
pub const MAX_ORDER: usize = 64;

/// A set of vertices as a bitmask.
pub type VertexSet = u64;

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in increasing order.
pub fn iter_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderLimit { order: n, limit: MAX_ORDER });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// The graph with no vertices.
    pub fn empty() -> Self {
        Graph { n: 0, adj: Vec::new() }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            if !g.add_edge(u, v)? {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows. Rows must be symmetric and loop-free.
    pub fn from_adjacency(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        let g = Graph { n, adj: rows };
        if n > MAX_ORDER {
            return Err(Error::OrderLimit { order: n, limit: MAX_ORDER });
        }
        for u in 0..n {
            let row = g.adj[u];
            if row & !low_mask(n) != 0 {
                return Err(Error::invalid(format!("row {u} has bits outside 0..{n}")));
            }
            if row & bit(u) != 0 {
                return Err(Error::SelfLoop(u));
            }
            for v in iter_bits(row) {
                if g.adj[v] & bit(u) == 0 {
                    return Err(Error::invalid(format!("asymmetric adjacency at {u},{v}")));
                }
            }
        }
        Ok(g)
    }

    /// Adds `{u, v}`; returns `false` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let fresh = self.adj[u] & bit(v) == 0;
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(fresh)
    }

    /// Appends an isolated vertex and returns its index.
    pub fn add_vertex(&mut self) -> Result<usize> {
        if self.n == MAX_ORDER {
            return Err(Error::OrderLimit { order: self.n + 1, limit: MAX_ORDER });
        }
        self.adj.push(0);
        self.n += 1;
        Ok(self.n - 1)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.n })
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn all_vertices(&self) -> VertexSet {
        low_mask(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        iter_bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Degrees sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| iter_bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn adjacency_rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u] &= !bit(v);
        g.adj[v] &= !bit(u);
        Ok(g)
    }

    /// Subgraph induced by `keep`, relabeled to `0..|keep|` in increasing order.
    /// The second value maps new labels to old ones.
    pub fn induced(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let keep = keep & self.all_vertices();
        let old: Vec<usize> = iter_bits(keep).collect();
        let mut new_of = [usize::MAX; MAX_ORDER];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let adj = old
            .iter()
            .map(|&v| iter_bits(self.adj[v] & keep).fold(0u64, |acc, w| acc | bit(new_of[w])))
            .collect();
        (Graph { n: old.len(), adj }, old)
    }

    /// `G - S` for a vertex set `S`.
    pub fn without_vertices(&self, remove: VertexSet) -> Graph {
        self.induced(self.all_vertices() & !remove).0
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen & bit(s) != 0 {
                continue;
            }
            let comp = self.reach(s, self.all_vertices());
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `s` inside `within`.
    pub(crate) fn reach(&self, s: usize, within: VertexSet) -> VertexSet {
        let mut comp = bit(s);
        let mut frontier = bit(s);
        while frontier != 0 {
            let mut next = 0u64;
            for v in iter_bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, self.all_vertices()) == self.all_vertices()
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// Acyclic (every component a tree).
    pub fn is_forest(&self) -> bool {
        self.size() + self.component_count() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.is_connected() && self.size() + 1 == self.n
    }

    /// Connected with maximum degree at most 2 and no cycle.
    pub fn is_path(&self) -> bool {
        self.is_tree() && self.max_degree() <= 2
    }

    /// Whether edge `{u, v}` lies on some cycle.
    pub fn edge_on_cycle(&self, u: usize, v: usize) -> bool {
        let mut g = self.clone();
        g.adj[u] &= !bit(v);
        g.adj[v] &= !bit(u);
        g.reach(u, g.all_vertices()) & bit(v) != 0
    }

    /// Applies `perm` where `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::invalid("permutation length differs from order"));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen & bit(p) != 0 {
                return Err(Error::invalid("not a permutation"));
            }
            seen |= bit(p);
        }
        Ok(self.relabel_unchecked(perm))
    }

    pub(crate) fn relabel_unchecked(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            adj[perm[u]] = iter_bits(self.adj[u]).fold(0u64, |acc, w| acc | bit(perm[w]));
        }
        Graph { n: self.n, adj }
    }

    /// Disjoint union; `h`'s vertices are shifted by `self.order()`.
    pub fn disjoint_union(&self, h: &Graph) -> Result<Graph> {
        let n = self.n + h.n;
        if n > MAX_ORDER {
            return Err(Error::OrderLimit { order: n, limit: MAX_ORDER });
        }
        let shift = self.n;
        let mut adj = self.adj.clone();
        adj.extend(h.adj.iter().map(|&r| r << shift));
        Ok(Graph { n, adj })
    }

    /// Joins `u ∈ self` and `v ∈ h` by a single new edge.
    pub fn bridge(&self, u: usize, h: &Graph, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        h.check_vertex(v)?;
        let mut g = self.disjoint_union(h)?;
        g.add_edge(u, self.n + v)?;
        Ok(g)
    }

    /// Merges `u ∈ self` with `v ∈ h`. The merged vertex keeps label `u`;
    /// the remaining vertices of `h` follow `self`'s in their original order.
    pub fn identify(&self, u: usize, h: &Graph, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        h.check_vertex(v)?;
        let n = self.n + h.n - 1;
        if n > MAX_ORDER {
            return Err(Error::OrderLimit { order: n, limit: MAX_ORDER });
        }
        let map = |w: usize| -> usize {
            match w.cmp(&v) {
                std::cmp::Ordering::Equal => u,
                std::cmp::Ordering::Less => self.n + w,
                std::cmp::Ordering::Greater => self.n + w - 1,
            }
        };
        let mut g = self.clone();
        g.n = n;
        g.adj.resize(n, 0);
        for (a, b) in h.edges() {
            let (x, y) = (map(a), map(b));
            g.adj[x] |= bit(y);
            g.adj[y] |= bit(x);
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
