//! 2-cores and the three-way split of bicyclic graphs.

use serde::Serialize;

use crate::cycles::all_cycles;
use crate::error::{Error, Result};
use crate::graph::{bit, iter_bits, Graph};

/// The 2-core of `g` with a map from core vertex to original vertex.
/// Empty when `g` is a forest.
pub fn two_core(g: &Graph) -> (Graph, Vec<usize>) {
    let mut alive = g.all_vertices();
    loop {
        let weak = iter_bits(alive)
            .filter(|&v| (g.neighbor_set(v) & alive).count_ones() <= 1)
            .fold(0u64, |m, v| m | bit(v));
        if weak == 0 {
            break;
        }
        alive &= !weak;
    }
    g.induced(alive)
}

/// Which base a bicyclic graph's 2-core is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BicyclicClass {
    /// Two cycles sharing one vertex.
    TypeB1,
    /// Two disjoint cycles joined by a path.
    TypeB2,
    /// Theta graph.
    TypeB3,
}

impl BicyclicClass {
    pub fn name(self) -> &'static str {
        match self {
            BicyclicClass::TypeB1 => "TypeB1",
            BicyclicClass::TypeB2 => "TypeB2",
            BicyclicClass::TypeB3 => "TypeB3",
        }
    }
}

pub fn is_bicyclic(g: &Graph) -> bool {
    g.order() > 0 && g.is_connected() && g.size() == g.order() + 1
}

pub fn classify_bicyclic(g: &Graph) -> Result<BicyclicClass> {
    if !g.is_connected() {
        return Err(Error::NotBicyclic("graph is disconnected".into()));
    }
    if g.size() != g.order() + 1 {
        return Err(Error::NotBicyclic(format!("{} edges on {} vertices", g.size(), g.order())));
    }
    let (core, _) = two_core(g);
    if (0..core.order()).any(|v| core.degree(v) == 4) {
        Ok(BicyclicClass::TypeB1)
    } else if all_cycles(&core).len() == 3 {
        Ok(BicyclicClass::TypeB3)
    } else {
        Ok(BicyclicClass::TypeB2)
    }
}
