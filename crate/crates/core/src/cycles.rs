//! Simple-cycle enumeration.

use crate::error::{Error, Result};
use crate::graph::{bit, iter_bits, low_mask, Graph, VertexSet};

/// A simple cycle as a vertex sequence in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().fold(0, |m, &v| m | bit(v))
    }

    pub fn sorted_vertices(&self) -> Vec<usize> {
        let mut s = self.vertices.clone();
        s.sort_unstable();
        s
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    fn sort_key(&self) -> (Vec<usize>, Vec<usize>) {
        (self.sorted_vertices(), self.vertices.clone())
    }
}

fn sort_cycles(mut cycles: Vec<Cycle>) -> Vec<Cycle> {
    cycles.sort_by_cached_key(Cycle::sort_key);
    cycles
}

/// Every simple cycle through edge `{u, v}`, one per simple `u`–`v` path in
/// `G - uv`. Each cycle is listed starting at `u` and ending at `v`.
pub fn cycles_through_edge(g: &Graph, u: usize, v: usize) -> Result<Vec<Cycle>> {
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge(u, v));
    }
    let mut out = Vec::new();
    let mut path = vec![u];
    paths_to(g, v, bit(u), &mut path, &mut |p| {
        if p.len() >= 3 {
            out.push(Cycle { vertices: p.to_vec() });
        }
    });
    Ok(sort_cycles(out))
}

fn paths_to(g: &Graph, target: usize, used: u64, path: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    let last = *path.last().expect("path is never empty");
    for w in iter_bits(g.neighbor_set(last) & !used) {
        if path.len() == 1 && w == target {
            // the edge uv itself
            continue;
        }
        path.push(w);
        if w == target {
            emit(path);
        } else {
            paths_to(g, target, used | bit(w), path, emit);
        }
        path.pop();
    }
}

/// Every simple cycle of `g` exactly once: anchored at its smallest vertex
/// and oriented so that the second vertex is smaller than the last.
pub fn all_cycles(g: &Graph) -> Vec<Cycle> {
    let mut out = Vec::new();
    for s in 0..g.order() {
        let larger = g.all_vertices() & !low_mask(s + 1);
        let mut path = vec![s];
        extend_from(g, s, larger, &mut path, &mut out);
    }
    sort_cycles(out)
}

fn extend_from(g: &Graph, s: usize, free: u64, path: &mut Vec<usize>, out: &mut Vec<Cycle>) {
    let last = *path.last().expect("path is never empty");
    let nbrs = g.neighbor_set(last);
    if path.len() >= 3 && nbrs & bit(s) != 0 && path[1] < last {
        out.push(Cycle { vertices: path.clone() });
    }
    for w in iter_bits(nbrs & free) {
        path.push(w);
        extend_from(g, s, free & !bit(w), path, out);
        path.pop();
    }
}

/// Every simple cycle containing `v`.
pub fn cycles_through_vertex(g: &Graph, v: usize) -> Result<Vec<Cycle>> {
    g.check_vertex(v)?;
    Ok(all_cycles(g).into_iter().filter(|c| c.contains(v)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn c4_has_one_cycle_per_edge() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        for (u, v) in c4.edges() {
            let cs = cycles_through_edge(&c4, u, v).unwrap();
            assert_eq!(cs.len(), 1);
            assert_eq!(cs[0].len(), 4);
        }
        assert_eq!(all_cycles(&c4).len(), 1);
    }

    #[test]
    fn k4_counts() {
        // 4 triangles + 3 four-cycles
        assert_eq!(all_cycles(&k4()).len(), 7);
        // through an edge: 2 triangles + 2 four-cycles
        assert_eq!(cycles_through_edge(&k4(), 0, 1).unwrap().len(), 4);
        assert_eq!(cycles_through_vertex(&k4(), 0).unwrap().len(), 6);
    }

    #[test]
    fn non_edge_is_rejected() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(cycles_through_edge(&p3, 0, 2), Err(Error::NotAnEdge(0, 2)));
    }

    #[test]
    fn order_is_lexicographic_by_vertex_set() {
        let cs = all_cycles(&k4());
        let keys: Vec<_> = cs.iter().map(|c| c.sorted_vertices()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }
}
