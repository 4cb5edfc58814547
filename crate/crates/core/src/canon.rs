//! Canonical labeling by colour refinement and individualization.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualize each vertex of the first smallest non-trivial
//! cell in turn, recurse. Leaves are discrete partitions; the canonical graph
//! is the lexicographically smallest relabeled adjacency among the leaves.
//!
//! Automorphisms are detected whenever two leaves yield the same graph. They
//! prune siblings lying in the same orbit of the pointwise stabilizer of the
//! current prefix, and a leaf equivalent to the first leaf lets the search
//! jump back to the level where its path left the first path.

use crate::graph::{bit, iter_bits, Graph};

/// Isomorphism-invariant certificate: equal iff the graphs are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Certificate(Vec<u64>);

impl Certificate {
    pub fn order(&self) -> usize {
        self.0.len()
    }

    /// The canonical representative as a graph.
    pub fn graph(&self) -> Graph {
        Graph::from_adjacency(self.0.clone()).expect("certificate rows form a simple graph")
    }
}

/// Returns the canonical relabeling of `g` and its certificate.
pub fn canonical_form(g: &Graph) -> (Graph, Certificate) {
    let labeling = canonical_labeling(g);
    let canon = g.relabel_unchecked(&labeling);
    let cert = Certificate(canon.adjacency_rows().to_vec());
    (canon, cert)
}

pub fn certificate(g: &Graph) -> Certificate {
    canonical_form(g).1
}

pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_form(g).0
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.size() == b.size()
        && a.degree_sequence() == b.degree_sequence()
        && certificate(a) == certificate(b)
}

/// `labeling[v]` is the canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let mut search = Search { g, n, first: None, best: None, autos: Vec::new(), jump_to: None };
    let root = Partition::unit(n);
    search.visit(root, &mut Vec::new());
    let (_, perm) = search.best.expect("search visits at least one leaf");
    perm
}

/// Ordered partition: `cells[i]` is a sorted vertex list.
#[derive(Clone)]
struct Partition {
    cells: Vec<Vec<usize>>,
}

impl Partition {
    fn unit(n: usize) -> Self {
        Partition { cells: vec![(0..n).collect()] }
    }

    fn is_discrete(&self, n: usize) -> bool {
        self.cells.len() == n
    }

    /// Splits cells by neighbour counts into every cell until stable.
    fn refine(&mut self, g: &Graph) {
        loop {
            let masks: Vec<u64> =
                self.cells.iter().map(|c| c.iter().fold(0u64, |m, &v| m | bit(v))).collect();
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(self.cells.len());
            for cell in &self.cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let row = g.neighbor_set(v);
                        (masks.iter().map(|m| (row & m).count_ones()).collect(), v)
                    })
                    .collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                        start = i;
                    }
                }
            }
            let changed = next.len() != self.cells.len();
            self.cells = next;
            if !changed {
                return;
            }
        }
    }

    fn individualize(&self, v: usize) -> Partition {
        let mut cells = Vec::with_capacity(self.cells.len() + 1);
        for cell in &self.cells {
            if cell.contains(&v) && cell.len() > 1 {
                cells.push(vec![v]);
                cells.push(cell.iter().copied().filter(|&w| w != v).collect());
            } else {
                cells.push(cell.clone());
            }
        }
        Partition { cells }
    }

    fn target_cell(&self) -> &[usize] {
        self.cells
            .iter()
            .filter(|c| c.len() > 1)
            .min_by_key(|c| c.len())
            .expect("non-discrete partition has a non-trivial cell")
    }

    /// `perm[v]` = position of `v`'s singleton cell.
    fn labeling(&self, n: usize) -> Vec<usize> {
        let mut perm = vec![0; n];
        for (i, c) in self.cells.iter().enumerate() {
            perm[c[0]] = i;
        }
        perm
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    /// First leaf: its path and relabeled adjacency.
    first: Option<(Vec<usize>, Vec<u64>, Vec<usize>)>,
    /// Best leaf so far: relabeled adjacency and labeling.
    best: Option<(Vec<u64>, Vec<usize>)>,
    /// Automorphisms as permutations `v -> image`.
    autos: Vec<Vec<usize>>,
    /// Abandon the current subtree up to this prefix length.
    jump_to: Option<usize>,
}

impl Search<'_> {
    fn visit(&mut self, mut part: Partition, path: &mut Vec<usize>) {
        part.refine(self.g);
        if part.is_discrete(self.n) {
            self.leaf(&part, path);
            return;
        }
        let cell: Vec<usize> = part.target_cell().to_vec();
        let depth = path.len();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() && self.same_orbit_as_any(path, v, &explored) {
                continue;
            }
            explored.push(v);
            path.push(v);
            self.visit(part.individualize(v), path);
            path.pop();
            if let Some(level) = self.jump_to {
                if level < depth {
                    return;
                }
                self.jump_to = None;
            }
        }
    }

    fn leaf(&mut self, part: &Partition, path: &[usize]) {
        let perm = part.labeling(self.n);
        let rows = self.g.relabel_unchecked(&perm).adjacency_rows().to_vec();
        let Some((first_path, first_rows, first_perm)) = &self.first else {
            self.first = Some((path.to_vec(), rows.clone(), perm.clone()));
            self.best = Some((rows, perm));
            return;
        };
        if rows == *first_rows {
            let auto = compose_inverse(first_perm, &perm);
            let diverge = first_path.iter().zip(path).position(|(a, b)| a != b).unwrap_or(path.len());
            self.autos.push(auto);
            self.jump_to = Some(diverge);
            return;
        }
        let (best_rows, best_perm) = self.best.as_ref().expect("best set with first");
        match rows.cmp(best_rows) {
            std::cmp::Ordering::Less => self.best = Some((rows, perm)),
            std::cmp::Ordering::Equal => {
                let auto = compose_inverse(best_perm, &perm);
                self.autos.push(auto);
            }
            std::cmp::Ordering::Greater => {}
        }
    }

    /// Whether `v` is in the orbit of an already explored vertex under the
    /// automorphisms that fix `path` pointwise.
    fn same_orbit_as_any(&self, path: &[usize], v: usize, explored: &[usize]) -> bool {
        let stab: Vec<&Vec<usize>> = self.autos.iter().filter(|a| path.iter().all(|&p| a[p] == p)).collect();
        if stab.is_empty() {
            return false;
        }
        let mut orbit = bit(v);
        let mut frontier = bit(v);
        while frontier != 0 {
            let mut next = 0u64;
            for w in iter_bits(frontier) {
                for a in &stab {
                    next |= bit(a[w]);
                }
            }
            next &= !orbit;
            orbit |= next;
            frontier = next;
        }
        explored.iter().any(|&e| orbit & bit(e) != 0)
    }
}

/// Automorphism `x -> a^{-1}(b(x))` mapping leaf `b`'s labeling onto leaf `a`'s.
fn compose_inverse(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut a_inv = vec![0; a.len()];
    for (v, &p) in a.iter().enumerate() {
        a_inv[p] = v;
    }
    b.iter().map(|&p| a_inv[p]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn relabeled_paths_agree() {
        let a = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(certificate(&a), certificate(&b));
    }

    #[test]
    fn cycle_and_path_differ() {
        assert_ne!(certificate(&cycle(4)), certificate(&path(4)));
    }

    #[test]
    fn highly_symmetric_graphs_finish() {
        let mut k = Graph::new(12).unwrap();
        for u in 0..12 {
            for v in u + 1..12 {
                k.add_edge(u, v).unwrap();
            }
        }
        let (c, _) = canonical_form(&k);
        assert_eq!(c, k);
        let mut star = Graph::new(16).unwrap();
        for v in 1..16 {
            star.add_edge(0, v).unwrap();
        }
        let mut star2 = Graph::new(16).unwrap();
        for v in 0..15 {
            star2.add_edge(15, v).unwrap();
        }
        assert_eq!(certificate(&star), certificate(&star2));
        let e = Graph::new(10).unwrap();
        assert_eq!(canonical_graph(&e), e);
    }

    #[test]
    fn labeling_is_a_permutation() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let mut l = canonical_labeling(&g);
        l.sort();
        assert_eq!(l, (0..6).collect::<Vec<_>>());
        assert_eq!(certificate(&g).graph().size(), 6);
    }
}
