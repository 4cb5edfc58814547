//! Permanental sums by edge and vertex deletion.
//!
//! For an edge `uv`:
//! `PS(G) = PS(G-uv) + PS(G-u-v) + 2 Σ_{C ∋ uv} PS(G - V(C))`,
//! for a vertex `v`:
//! `PS(G) = PS(G-v) + Σ_{u ~ v} PS(G-v-u) + 2 Σ_{C ∋ v} PS(G - V(C))`,
//! and `PS` is multiplicative over components. Paths short-circuit to
//! `PS(P_n) = F(n+1)`. Connected remainders are memoized by canonical
//! certificate.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, RwLock};

use num_bigint::BigUint;

use crate::bounds::fib;
use crate::canon::{certificate, Certificate};
use crate::cycles::{cycles_through_edge, cycles_through_vertex};
use crate::error::Result;
use crate::graph::{bit, Graph};
use crate::poly::PermSum;

/// Shared memo from canonical certificate to permanental sum.
#[derive(Default, Debug)]
pub struct PsCache {
    map: RwLock<HashMap<Certificate, BigUint>>,
}

impl PsCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, key: &Certificate) -> Option<BigUint> {
        self.map.read().expect("cache lock poisoned").get(key).cloned()
    }

    pub fn insert(&self, key: Certificate, value: BigUint) {
        self.map.write().expect("cache lock poisoned").insert(key, value);
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("cache lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Snapshot of all entries, for auditing.
    pub fn entries(&self) -> Vec<(Certificate, BigUint)> {
        let map = self.map.read().expect("cache lock poisoned");
        let mut v: Vec<_> = map.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        v.sort();
        v
    }
}

/// Which cycle edge the edge rule expands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeChoice {
    /// Lexicographically smallest edge lying on a cycle.
    SmallestCycleEdge,
    /// A cycle edge picked by hashing the seed with the graph.
    Seeded(u64),
}

#[derive(Clone, Debug)]
pub struct RecursiveEngine {
    cache: Option<Arc<PsCache>>,
    choice: EdgeChoice,
}

impl Default for RecursiveEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl RecursiveEngine {
    /// Engine with a private cache.
    pub fn new() -> Self {
        RecursiveEngine { cache: Some(Arc::new(PsCache::new())), choice: EdgeChoice::SmallestCycleEdge }
    }

    pub fn without_cache() -> Self {
        RecursiveEngine { cache: None, choice: EdgeChoice::SmallestCycleEdge }
    }

    pub fn with_cache(cache: Arc<PsCache>) -> Self {
        RecursiveEngine { cache: Some(cache), choice: EdgeChoice::SmallestCycleEdge }
    }

    pub fn edge_choice(mut self, choice: EdgeChoice) -> Self {
        self.choice = choice;
        self
    }

    pub fn cache(&self) -> Option<&Arc<PsCache>> {
        self.cache.as_ref()
    }

    pub fn ps(&self, g: &Graph) -> PermSum {
        PermSum(self.ps_raw(g))
    }

    fn ps_raw(&self, g: &Graph) -> BigUint {
        let comps = g.components();
        match comps.len() {
            0 => BigUint::from(1u32),
            1 => self.ps_connected(g),
            _ => comps.into_iter().map(|c| self.ps_connected(&g.induced(c).0)).product(),
        }
    }

    fn ps_connected(&self, g: &Graph) -> BigUint {
        let n = g.order();
        if n <= 1 {
            return BigUint::from(1u32);
        }
        let tree = g.size() + 1 == n;
        if tree && g.max_degree() <= 2 {
            return fib(n + 1);
        }
        let key = self.cache.as_ref().map(|c| (c, certificate(g)));
        if let Some((cache, cert)) = &key {
            if let Some(v) = cache.get(cert) {
                return v;
            }
        }
        let value = if tree { self.leaf_rule(g) } else { self.edge_rule(g) };
        if let Some((cache, cert)) = key {
            cache.insert(cert, value.clone());
        }
        value
    }

    /// `PS(T) = PS(T-v) + PS(T-v-u)` for a leaf `v` with neighbour `u`.
    fn leaf_rule(&self, t: &Graph) -> BigUint {
        let v = (0..t.order()).find(|&v| t.degree(v) == 1).expect("a tree on 2+ vertices has a leaf");
        let u = t.neighbor_set(v).trailing_zeros() as usize;
        self.ps_raw(&t.without_vertices(bit(v))) + self.ps_raw(&t.without_vertices(bit(v) | bit(u)))
    }

    fn pick_cycle_edge(&self, g: &Graph) -> (usize, usize) {
        let mut on_cycle = g.edges().filter(|&(u, v)| g.edge_on_cycle(u, v));
        match self.choice {
            EdgeChoice::SmallestCycleEdge => on_cycle.next().expect("graph with a cycle has a cycle edge"),
            EdgeChoice::Seeded(seed) => {
                let all: Vec<_> = on_cycle.collect();
                let mut h = DefaultHasher::new();
                seed.hash(&mut h);
                g.hash(&mut h);
                all[(h.finish() % all.len() as u64) as usize]
            }
        }
    }

    fn edge_rule(&self, g: &Graph) -> BigUint {
        let (u, v) = self.pick_cycle_edge(g);
        let cycles = cycles_through_edge(g, u, v).expect("picked an edge of g");
        let mut total = self.ps_raw(&g.without_edge(u, v).expect("picked an edge of g"));
        total += self.ps_raw(&g.without_vertices(bit(u) | bit(v)));
        let cyc: BigUint = cycles.iter().map(|c| self.ps_raw(&g.without_vertices(c.vertex_set()))).sum();
        total + cyc * 2u32
    }

    /// The vertex-deletion identity evaluated at `v`, with sub-terms from this engine.
    pub fn vertex_rule(&self, g: &Graph, v: usize) -> Result<PermSum> {
        g.check_vertex(v)?;
        let mut total = self.ps_raw(&g.without_vertices(bit(v)));
        for u in g.neighbors(v) {
            total += self.ps_raw(&g.without_vertices(bit(v) | bit(u)));
        }
        let cyc: BigUint = cycles_through_vertex(g, v)?
            .iter()
            .map(|c| self.ps_raw(&g.without_vertices(c.vertex_set())))
            .sum();
        Ok(PermSum(total + cyc * 2u32))
    }

    /// The edge-deletion identity evaluated at a chosen edge `uv`.
    pub fn edge_rule_at(&self, g: &Graph, u: usize, v: usize) -> Result<PermSum> {
        let cycles = cycles_through_edge(g, u, v)?;
        let mut total = self.ps_raw(&g.without_edge(u, v)?);
        total += self.ps_raw(&g.without_vertices(bit(u) | bit(v)));
        let cyc: BigUint = cycles.iter().map(|c| self.ps_raw(&g.without_vertices(c.vertex_set()))).sum();
        Ok(PermSum(total + cyc * 2u32))
    }
}

/// Permanental sum with a fresh memo.
pub fn ps_recursive(g: &Graph) -> PermSum {
    RecursiveEngine::new().ps(g)
}

pub fn ps_vertex_rule(g: &Graph, v: usize) -> Result<PermSum> {
    RecursiveEngine::new().vertex_rule(g, v)
}
