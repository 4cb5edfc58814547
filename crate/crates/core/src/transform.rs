//! The two pendant-tree rearrangements that never decrease the permanental sum.

use crate::error::{Error, Result};
use crate::family::make_path;
use crate::graph::Graph;

/// Type I: hang tree `tree` (rooted at `root`) on vertex `v` of `g`, and
/// separately hang a path of the same order by one of its ends.
///
/// Returns `(G1, G2)`: `G1 = g ∘_v tree`, `G2 = g ∘_v P_|T|`. The shared
/// vertex keeps label `v`; tree vertices follow `g`'s.
pub fn transform_type_i(g: &Graph, v: usize, tree: &Graph, root: usize) -> Result<(Graph, Graph)> {
    if g.order() == 1 {
        return Err(Error::invalid("type I needs G different from P1"));
    }
    g.check_vertex(v)?;
    tree.check_vertex(root)?;
    if !tree.is_tree() {
        return Err(Error::invalid("type I needs a tree"));
    }
    if tree.order() <= 2 {
        return Err(Error::invalid("type I needs a tree on more than 2 vertices"));
    }
    let g1 = g.identify(v, tree, root)?;
    let g2 = g.identify(v, &make_path(tree.order())?, 0)?;
    Ok((g1, g2))
}

/// A graph `G` with a hanging path `u, u_1, …, u_p, v` (every `u_i` of
/// degree 2 in `G`, `p >= 2`) and two pendant path lengths `s`, `t >= 1`.
/// `u == v` is allowed, in which case the path closes a cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeIiInstance {
    pub base: Graph,
    /// `[u, u_1, …, u_p, v]`.
    pub path: Vec<usize>,
    pub s: usize,
    pub t: usize,
}

/// The three graphs of a type II rearrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeIiGraphs {
    /// `P_s` hanging from `u_1` and `P_t` from `u_p`.
    pub g1: Graph,
    /// `P_{s+t}` hanging from `u_p`.
    pub g2: Graph,
    /// `P_{s+t}` hanging from `u_1`.
    pub g3: Graph,
}

impl TypeIiInstance {
    pub fn validate(&self) -> Result<()> {
        let g = &self.base;
        let path = &self.path;
        if path.len() < 4 {
            return Err(Error::invalid("type II needs p >= 2 internal path vertices"));
        }
        if self.s == 0 || self.t == 0 {
            return Err(Error::invalid("type II needs s, t >= 1"));
        }
        for &w in path {
            g.check_vertex(w)?;
        }
        for pair in path.windows(2) {
            if !g.has_edge(pair[0], pair[1]) {
                return Err(Error::NotAnEdge(pair[0], pair[1]));
            }
        }
        let inner = &path[1..path.len() - 1];
        let (u, v) = (path[0], path[path.len() - 1]);
        let mut seen = std::collections::HashSet::new();
        for &w in inner {
            if !seen.insert(w) || w == u || w == v {
                return Err(Error::invalid(
                    "internal path vertices must be distinct from each other and from the ends",
                ));
            }
            if g.degree(w) != 2 {
                return Err(Error::invalid(format!(
                    "internal vertex {w} has degree {} instead of 2",
                    g.degree(w)
                )));
            }
        }
        Ok(())
    }

    pub fn apply(&self) -> Result<TypeIiGraphs> {
        self.validate()?;
        let first = self.path[1];
        let last = self.path[self.path.len() - 2];
        let (s, t) = (self.s, self.t);
        let g1 = self.base.bridge(first, &make_path(s)?, 0)?.bridge(last, &make_path(t)?, 0)?;
        let g2 = self.base.bridge(last, &make_path(s + t)?, 0)?;
        let g3 = self.base.bridge(first, &make_path(s + t)?, 0)?;
        Ok(TypeIiGraphs { g1, g2, g3 })
    }
}

pub fn transform_type_ii(instance: &TypeIiInstance) -> Result<TypeIiGraphs> {
    instance.apply()
}
