#![allow(dead_code)]

use permsum::harness::enumerate;
use permsum::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

/// Random connected graph: a random spanning tree plus up to `extra` edges.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, extra: usize) -> Graph {
    let mut g = Graph::new(n).unwrap();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        g.add_edge(parent, order[i]).unwrap();
    }
    let max_edges = n * (n - 1) / 2;
    let target = (g.size() + extra).min(max_edges);
    while g.size() < target {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !g.has_edge(u, v) {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Random graph with edge probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Random labeled tree on `n` vertices.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    random_connected(rng, n, 0)
}

/// Every connected graph of order 1..=max_n, up to isomorphism.
pub fn connected_corpus(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(|n| enumerate::naive(n, None, true).unwrap()).collect()
}

pub fn triangles(g: &Graph) -> usize {
    let mut t = 0;
    for (u, v) in g.edges() {
        t += (g.neighbor_set(u) & g.neighbor_set(v)).count_ones() as usize;
    }
    t / 3
}
