//! Isomorph-free generators. Everything returned is a canonical graph, sorted.

use std::collections::BTreeSet;

use crate::canon::canonical_graph;
use crate::error::{Error, Result};
use crate::family::{make_b1, make_b2, make_b3, make_cycle, make_path};
use crate::graph::{iter_bits, Graph};

pub const TREE_MAX_ORDER: usize = 12;
pub const UNICYCLIC_MAX_ORDER: usize = 12;
pub const BICYCLIC_MAX_ORDER: usize = 12;
pub const FOREST_MAX_ORDER: usize = 10;
pub const NAIVE_MAX_ORDER: usize = 9;

fn check_range(what: &str, n: usize, min: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(Error::OrderLimit { order: n, limit: max });
    }
    if n < min {
        return Err(Error::invalid(format!("{what} need n >= {min}, got {n}")));
    }
    Ok(())
}

#[cfg(feature = "parallel")]
fn flat_map_collect<T, F>(items: &[Graph], f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&Graph) -> Vec<T> + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().flat_map_iter(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn flat_map_collect<T, F>(items: &[Graph], f: F) -> Vec<T>
where
    F: Fn(&Graph) -> Vec<T>,
{
    items.iter().flat_map(f).collect()
}

fn with_leaf(g: &Graph, v: usize) -> Graph {
    let mut h = g.clone();
    let w = h.add_vertex().expect("order stays below the limit");
    h.add_edge(v, w).expect("fresh vertex");
    h
}

fn dedup(graphs: Vec<Graph>) -> Vec<Graph> {
    let set: BTreeSet<Graph> = graphs.into_iter().collect();
    set.into_iter().collect()
}

/// All connected graphs of order `n` obtained from `bases` by repeatedly
/// hanging leaves; i.e. every connected graph whose 2-core is one of them.
fn grow(bases: Vec<Graph>, n: usize) -> Vec<Graph> {
    let mut by_order: Vec<Vec<Graph>> = vec![Vec::new(); n + 1];
    for b in bases {
        if b.order() <= n {
            by_order[b.order()].push(canonical_graph(&b));
        }
    }
    let mut level: Vec<Graph> = Vec::new();
    for (k, bases_k) in by_order.into_iter().enumerate() {
        let mut next =
            flat_map_collect(&level, |g| (0..g.order()).map(|v| canonical_graph(&with_leaf(g, v))).collect());
        next.extend(bases_k);
        level = dedup(next);
        if k == n {
            break;
        }
    }
    level
}

pub fn trees(n: usize) -> Result<Vec<Graph>> {
    check_range("trees", n, 1, TREE_MAX_ORDER)?;
    Ok(grow(vec![make_path(1)?], n))
}

pub fn unicyclic(n: usize) -> Result<Vec<Graph>> {
    check_range("unicyclic graphs", n, 3, UNICYCLIC_MAX_ORDER)?;
    let bases = (3..=n).map(make_cycle).collect::<Result<Vec<_>>>()?;
    Ok(grow(bases, n))
}

/// 2-cores of bicyclic graphs of order at most `n`.
pub fn bicyclic_bases(n: usize) -> Result<Vec<Graph>> {
    let mut bases = Vec::new();
    for p in 3..=n {
        for q in p..=n {
            if p + q - 1 <= n {
                bases.push(make_b1(p, q)?);
            }
            for r in 0..=n.saturating_sub(p + q) {
                bases.push(make_b2(p, q, r)?);
            }
        }
    }
    for p in 0..=n {
        for q in 0..=p {
            for r in 0..=q {
                if q == 0 || p + q + r + 2 > n {
                    continue;
                }
                bases.push(make_b3(p, q, r)?);
            }
        }
    }
    Ok(bases)
}

pub fn bicyclic(n: usize) -> Result<Vec<Graph>> {
    check_range("bicyclic graphs", n, 4, BICYCLIC_MAX_ORDER)?;
    Ok(grow(bicyclic_bases(n)?, n))
}

/// All forests of order `n`, trees included.
pub fn forests(n: usize) -> Result<Vec<Graph>> {
    check_range("forests", n, 1, FOREST_MAX_ORDER)?;
    let trees_by_order = (1..=n).map(trees).collect::<Result<Vec<_>>>()?;
    let mut by_order: Vec<Vec<Graph>> = vec![vec![Graph::empty()]];
    for k in 1..=n {
        let mut out = Vec::new();
        for t in 1..=k {
            for tree in &trees_by_order[t - 1] {
                for rest in &by_order[k - t] {
                    out.push(canonical_graph(&tree.disjoint_union(rest)?));
                }
            }
        }
        by_order.push(dedup(out));
    }
    Ok(by_order.swap_remove(n))
}

/// Every graph on `n` vertices with `m` edges (any size when `m` is `None`),
/// optionally only connected ones, by adding one vertex at a time with every
/// possible neighbourhood.
pub fn naive(n: usize, m: Option<usize>, connected: bool) -> Result<Vec<Graph>> {
    check_range("naive enumeration", n, 0, NAIVE_MAX_ORDER)?;
    // any graph on k+1 vertices minus some vertex is a graph on k vertices,
    // and a connected graph always has a vertex whose removal keeps it connected
    let mut level = vec![Graph::empty()];
    for k in 0..n {
        let remaining = n - k - 1;
        let next = flat_map_collect(&level, |g| {
            let mut out = Vec::new();
            for nbrs in 0u64..(1u64 << k) {
                if connected && k > 0 && nbrs == 0 {
                    continue;
                }
                let e = g.size() + nbrs.count_ones() as usize;
                if let Some(m) = m {
                    let can_add = (k + 1..n).sum::<usize>();
                    if e > m || e + can_add < m || (connected && e + remaining > m) {
                        continue;
                    }
                }
                let mut h = g.clone();
                let w = h.add_vertex().expect("order stays below the limit");
                for u in iter_bits(nbrs) {
                    h.add_edge(u, w).expect("fresh vertex");
                }
                out.push(canonical_graph(&h));
            }
            out
        });
        level = dedup(next);
    }
    if let Some(m) = m {
        level.retain(|g| g.size() == m);
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::family::make_b3;

    #[test]
    fn small_counts() {
        assert_eq!(trees(4).unwrap().len(), 2);
        assert_eq!(trees(1).unwrap().len(), 1);
        let t: Vec<_> = (1..=10).map(|n| trees(n).unwrap().len()).collect();
        assert_eq!(t, [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
        assert_eq!(unicyclic(4).unwrap().len(), 2);
        assert_eq!(bicyclic(4).unwrap().len(), 1);
        assert_eq!(bicyclic(5).unwrap().len(), 5);
        let f: Vec<_> = (1..=8).map(|n| forests(n).unwrap().len()).collect();
        assert_eq!(f, [1, 2, 3, 6, 10, 20, 37, 76]);
    }

    #[test]
    fn naive_examples() {
        let k4e = naive(4, Some(5), true).unwrap();
        assert_eq!(k4e.len(), 1);
        assert!(is_isomorphic(&k4e[0], &make_b3(1, 1, 0).unwrap()));
        assert_eq!(naive(5, Some(6), true).unwrap().len(), 5);
        assert_eq!(naive(3, Some(3), true).unwrap().len(), 1);
        let all4: usize = (0..=6).map(|m| naive(4, Some(m), false).unwrap().len()).sum();
        assert_eq!(all4, 11);
        assert_eq!(naive(4, None, false).unwrap().len(), 11);
        assert_eq!(naive(5, None, true).unwrap().len(), 21);
    }

    #[test]
    fn limits() {
        assert!(matches!(bicyclic(13), Err(Error::OrderLimit { .. })));
        assert!(bicyclic(3).is_err());
        assert!(forests(11).is_err());
        assert!(naive(10, None, true).is_err());
    }
}
