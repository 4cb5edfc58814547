//! Direct enumeration of Sachs subgraphs (vertex-disjoint unions of edges and
//! cycles). This is the ground-truth engine: slow, simple, no shortcuts.

use num_bigint::BigUint;

use crate::cycles::all_cycles;
use crate::error::{Error, Result};
use crate::graph::{bit, iter_bits, Graph};
use crate::poly::{PermSum, Polynomial};

/// Largest order accepted by this engine.
pub const SACHS_MAX_ORDER: usize = 16;

fn check_order(g: &Graph) -> Result<()> {
    if g.order() > SACHS_MAX_ORDER {
        return Err(Error::EngineLimit { engine: "sachs", order: g.order(), limit: SACHS_MAX_ORDER });
    }
    Ok(())
}

/// `w[k] = Σ_H 2^{c(H)}` over Sachs subgraphs `H` on exactly `k` vertices.
///
/// Branches on the smallest uncovered vertex: leave it out, match it to a
/// larger free neighbour, or cover it with a cycle whose smallest vertex it is.
/// Counts fit `u128`: the total is `per(I + A) <= 16!` at the order limit.
pub fn sachs_weights(g: &Graph) -> Result<Vec<BigUint>> {
    check_order(g)?;
    let n = g.order();
    let mut cycles_from: Vec<Vec<(u64, usize)>> = vec![Vec::new(); n];
    for c in all_cycles(g) {
        let anchor = c.vertices()[0];
        cycles_from[anchor].push((c.vertex_set(), c.len()));
    }
    let mut acc = vec![0u128; n + 1];
    let mut walker = Walker { adj: g.adjacency_rows(), cycles_from: &cycles_from, acc: &mut acc };
    walker.branch(g.all_vertices(), 0, 0);
    Ok(acc.into_iter().map(BigUint::from).collect())
}

struct Walker<'a> {
    adj: &'a [u64],
    cycles_from: &'a [Vec<(u64, usize)>],
    acc: &'a mut [u128],
}

impl Walker<'_> {
    fn branch(&mut self, free: u64, covered: usize, cycles: u32) {
        if free == 0 {
            self.acc[covered] += 1u128 << cycles;
            return;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !bit(v);
        self.branch(rest, covered, cycles);
        for u in iter_bits(self.adj[v] & rest) {
            self.branch(rest & !bit(u), covered + 2, cycles);
        }
        for &(set, len) in &self.cycles_from[v] {
            if set & !free == 0 {
                self.branch(free & !set, covered + len, cycles + 1);
            }
        }
    }
}

pub fn sachs_weight(g: &Graph, k: usize) -> Result<BigUint> {
    if k > g.order() {
        return Err(Error::invalid(format!("k = {k} exceeds the order {}", g.order())));
    }
    Ok(sachs_weights(g)?.swap_remove(k))
}

pub fn coefficients_sachs(g: &Graph) -> Result<Polynomial> {
    Ok(Polynomial::from_weights(&sachs_weights(g)?))
}

pub fn ps_sachs(g: &Graph) -> Result<PermSum> {
    Ok(PermSum(sachs_weights(g)?.into_iter().sum()))
}
