//! Exact permanental polynomials and permanental sums of simple graphs.
//!
//! Three independent engines compute `PS(G) = Σ |b_k|` for
//! `per(xI - A(G)) = Σ b_k x^{n-k}`:
//!
//! - [`sachs`]: enumerates Sachs subgraphs directly;
//! - [`ryser`]: `PS(G) = per(I + A)` via Ryser's formula;
//! - [`recursive`]: edge/vertex deletion with memoization.
//!
//! [`harness`] enumerates small trees, forests, unicyclic and bicyclic graphs
//! and checks the closed forms in [`bounds`] against them.

pub mod bounds;
pub mod canon;
pub mod cycles;
pub mod error;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod poly;
pub mod recursive;
pub mod ryser;
pub mod sachs;
pub mod structure;
pub mod transform;

pub use bounds::{bound, d_family_monotonicity, fib, lemma46_gap, Claim};
pub use canon::{canonical_form, canonical_graph, certificate, is_isomorphic, Certificate};
pub use error::{Error, Result};
pub use family::{Attach, FamilySpec};
pub use graph::{Graph, MAX_ORDER};
pub use graph6::{decode_graph6, encode_graph6};
pub use poly::{PermSum, Polynomial};
pub use recursive::{ps_recursive, ps_vertex_rule, RecursiveEngine};
pub use ryser::{coefficients_permanent, ps_permanent};
pub use sachs::{coefficients_sachs, ps_sachs};
pub use structure::{classify_bicyclic, BicyclicClass};
