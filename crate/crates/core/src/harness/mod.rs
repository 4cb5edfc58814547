//! Exhaustive enumeration of small graph classes, ranking by permanental sum,
//! and checking of extremal claims against the enumeration.

pub mod enumerate;
mod verify;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::poly::PermSum;
use crate::recursive::{PsCache, RecursiveEngine};
use crate::structure::{classify_bicyclic, BicyclicClass};

pub use enumerate::{
    BICYCLIC_MAX_ORDER, FOREST_MAX_ORDER, NAIVE_MAX_ORDER, TREE_MAX_ORDER, UNICYCLIC_MAX_ORDER,
};
pub use verify::VerificationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GraphClass {
    #[serde(rename = "tree")]
    Tree,
    /// Forest with at least two components.
    #[serde(rename = "forest")]
    Forest,
    #[serde(rename = "unicyclic")]
    Unicyclic,
    TypeB1,
    TypeB2,
    TypeB3,
    #[serde(rename = "other")]
    Other,
}

impl GraphClass {
    pub fn of(g: &Graph) -> GraphClass {
        if g.is_forest() {
            return if g.component_count() <= 1 { GraphClass::Tree } else { GraphClass::Forest };
        }
        if !g.is_connected() {
            return GraphClass::Other;
        }
        if g.size() == g.order() {
            return GraphClass::Unicyclic;
        }
        match classify_bicyclic(g) {
            Ok(BicyclicClass::TypeB1) => GraphClass::TypeB1,
            Ok(BicyclicClass::TypeB2) => GraphClass::TypeB2,
            Ok(BicyclicClass::TypeB3) => GraphClass::TypeB3,
            Err(_) => GraphClass::Other,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Tree => "tree",
            GraphClass::Forest => "forest",
            GraphClass::Unicyclic => "unicyclic",
            GraphClass::TypeB1 => "TypeB1",
            GraphClass::TypeB2 => "TypeB2",
            GraphClass::TypeB3 => "TypeB3",
            GraphClass::Other => "other",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn as_decimal<S: Serializer>(ps: &PermSum, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&ps.to_string())
}

/// One enumerated graph. `graph6` is the canonical form's encoding.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationRecord {
    pub graph6: String,
    pub n: usize,
    pub class: GraphClass,
    #[serde(serialize_with = "as_decimal")]
    pub ps: PermSum,
    /// 1-based position within `class`, by PS descending then `graph6`.
    pub rank: usize,
}

impl EnumerationRecord {
    pub fn graph(&self) -> Graph {
        crate::graph6::decode_graph6(&self.graph6).expect("records hold valid graph6")
    }
}

fn by_ps_desc(a: &EnumerationRecord, b: &EnumerationRecord) -> std::cmp::Ordering {
    b.ps.cmp(&a.ps).then_with(|| a.graph6.cmp(&b.graph6))
}

/// Highest-PS records first (ties by `graph6`), at most `top_k` of them.
pub fn rank(records: &[EnumerationRecord], top_k: usize) -> Vec<EnumerationRecord> {
    let mut out = records.to_vec();
    out.sort_by(by_ps_desc);
    out.truncate(top_k);
    out
}

/// Fills in `rank` per class and orders records by class, then rank.
pub fn assign_ranks(records: &mut [EnumerationRecord]) {
    records.sort_by(|a, b| a.class.cmp(&b.class).then_with(|| by_ps_desc(a, b)));
    let mut last = None;
    let mut r = 0;
    for rec in records.iter_mut() {
        if last != Some(rec.class) {
            last = Some(rec.class);
            r = 0;
        }
        r += 1;
        rec.rank = r;
    }
}

type RecordLists = HashMap<(Family, usize), Arc<Vec<EnumerationRecord>>>;

/// Which generator to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Trees,
    Forests,
    Unicyclic,
    Bicyclic,
    Naive { m: Option<usize>, connected: bool },
}

/// Enumerator with a shared PS cache and memoized record lists.
pub struct Harness {
    engine: RecursiveEngine,
    lists: Mutex<RecordLists>,
}

impl Default for Harness {
    fn default() -> Self {
        Self::new()
    }
}

impl Harness {
    pub fn new() -> Self {
        Harness {
            engine: RecursiveEngine::with_cache(Arc::new(PsCache::new())),
            lists: Mutex::new(HashMap::new()),
        }
    }

    pub fn engine(&self) -> &RecursiveEngine {
        &self.engine
    }

    pub fn ps(&self, g: &Graph) -> PermSum {
        self.engine.ps(g)
    }

    pub fn records(&self, family: Family, n: usize) -> Result<Arc<Vec<EnumerationRecord>>> {
        if let Some(v) = self.lists.lock().expect("lock poisoned").get(&(family, n)) {
            return Ok(v.clone());
        }
        let graphs = match family {
            Family::Trees => enumerate::trees(n)?,
            Family::Forests => enumerate::forests(n)?,
            Family::Unicyclic => enumerate::unicyclic(n)?,
            Family::Bicyclic => enumerate::bicyclic(n)?,
            Family::Naive { m, connected } => enumerate::naive(n, m, connected)?,
        };
        let list = Arc::new(self.to_records(&graphs));
        self.lists.lock().expect("lock poisoned").insert((family, n), list.clone());
        Ok(list)
    }

    /// Records for canonical graphs, ranked per class.
    pub fn to_records(&self, graphs: &[Graph]) -> Vec<EnumerationRecord> {
        let make = |g: &Graph| EnumerationRecord {
            graph6: encode_graph6(g),
            n: g.order(),
            class: GraphClass::of(g),
            ps: self.engine.ps(g),
            rank: 0,
        };
        #[cfg(feature = "parallel")]
        let mut out: Vec<_> = {
            use rayon::prelude::*;
            graphs.par_iter().map(make).collect()
        };
        #[cfg(not(feature = "parallel"))]
        let mut out: Vec<_> = graphs.iter().map(make).collect();
        assign_ranks(&mut out);
        out
    }

    pub fn trees(&self, n: usize) -> Result<Arc<Vec<EnumerationRecord>>> {
        self.records(Family::Trees, n)
    }

    pub fn forests(&self, n: usize) -> Result<Arc<Vec<EnumerationRecord>>> {
        self.records(Family::Forests, n)
    }

    pub fn unicyclic(&self, n: usize) -> Result<Arc<Vec<EnumerationRecord>>> {
        self.records(Family::Unicyclic, n)
    }

    pub fn bicyclic(&self, n: usize) -> Result<Arc<Vec<EnumerationRecord>>> {
        self.records(Family::Bicyclic, n)
    }

    pub fn naive(&self, n: usize, m: Option<usize>, connected: bool) -> Result<Arc<Vec<EnumerationRecord>>> {
        self.records(Family::Naive { m, connected }, n)
    }
}

pub fn enumerate_trees(n: usize) -> Result<Vec<EnumerationRecord>> {
    Ok(Harness::new().trees(n)?.to_vec())
}

pub fn enumerate_forests(n: usize) -> Result<Vec<EnumerationRecord>> {
    Ok(Harness::new().forests(n)?.to_vec())
}

pub fn enumerate_unicyclic(n: usize) -> Result<Vec<EnumerationRecord>> {
    Ok(Harness::new().unicyclic(n)?.to_vec())
}

pub fn enumerate_bicyclic(n: usize) -> Result<Vec<EnumerationRecord>> {
    Ok(Harness::new().bicyclic(n)?.to_vec())
}

pub fn enumerate_naive(n: usize, m: usize, connected_only: bool) -> Result<Vec<EnumerationRecord>> {
    Ok(Harness::new().naive(n, Some(m), connected_only)?.to_vec())
}

pub fn verify(claim: crate::bounds::Claim, n: usize) -> Result<VerificationReport> {
    Harness::new().verify(claim, n)
}
