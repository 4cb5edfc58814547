//! Browser bindings. Every export returns a JSON string or an error message.

use std::str::FromStr;

use permsum::harness::{rank, Family, Harness};
use permsum::{bound, coefficients_sachs, decode_graph6, encode_graph6, Claim, FamilySpec, Graph};
use serde::Serialize;
use wasm_bindgen::prelude::wasm_bindgen;

/// Largest order the page will enumerate or verify at.
pub const WEB_MAX_ORDER: usize = 10;

#[derive(Serialize)]
struct GraphView {
    graph6: String,
    n: usize,
    edges: Vec<(usize, usize)>,
    ps: String,
    poly: Option<String>,
    class: String,
}

fn view(g: &Graph, h: &Harness) -> GraphView {
    GraphView {
        graph6: encode_graph6(g),
        n: g.order(),
        edges: g.edges().collect(),
        ps: h.ps(g).to_string(),
        poly: coefficients_sachs(g).ok().map(|p| p.to_string()),
        class: permsum::harness::GraphClass::of(g).to_string(),
    }
}

fn json<T: Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

/// A family spec such as `B2(3,3,2)` or a graph6 string.
#[wasm_bindgen]
pub fn describe(input: &str) -> Result<String, String> {
    let input = input.trim();
    let g = if input.contains('(') {
        FamilySpec::from_str(input).and_then(|s| s.build())
    } else {
        decode_graph6(input)
    }
    .map_err(|e| e.to_string())?;
    json(&view(&g, &Harness::new()))
}

#[derive(Serialize)]
struct ClaimView {
    claim: String,
    n: usize,
    statement: &'static str,
    bound: Option<String>,
    expected: String,
    observed: String,
    extremal_expected: Option<String>,
    extremal_observed: Vec<String>,
    pass: bool,
}

#[wasm_bindgen]
pub fn verify_claim(claim: &str, n: usize) -> Result<String, String> {
    let claim = Claim::from_str(claim).map_err(|e| e.to_string())?;
    if n > WEB_MAX_ORDER {
        return Err(format!("the page checks n <= {WEB_MAX_ORDER}; use the CLI for more"));
    }
    let r = Harness::new().verify(claim, n).map_err(|e| e.to_string())?;
    json(&ClaimView {
        claim: r.claim,
        n,
        statement: claim.statement(),
        bound: bound(claim, n).ok().map(|b| b.to_string()),
        expected: r.expected,
        observed: r.observed,
        extremal_expected: r.extremal_expected,
        extremal_observed: r.extremal_observed,
        pass: r.pass,
    })
}

/// The `k` graphs of highest PS in a class: tree, forest, unicyclic or bicyclic.
#[wasm_bindgen]
pub fn top_graphs(class: &str, n: usize, k: usize) -> Result<String, String> {
    let family = match class {
        "tree" => Family::Trees,
        "forest" => Family::Forests,
        "unicyclic" => Family::Unicyclic,
        "bicyclic" => Family::Bicyclic,
        other => return Err(format!("unknown class {other:?}")),
    };
    if n > WEB_MAX_ORDER {
        return Err(format!("the page enumerates n <= {WEB_MAX_ORDER}; use the CLI for more"));
    }
    let h = Harness::new();
    let recs = h.records(family, n).map_err(|e| e.to_string())?;
    let views: Vec<_> = rank(&recs, k).iter().map(|r| view(&r.graph(), &h)).collect();
    json(&views)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    #[test]
    fn describe_family_and_graph6() {
        let v: Value = serde_json::from_str(&describe("C(3)").unwrap()).unwrap();
        assert_eq!(v["ps"], "6");
        assert_eq!(v["poly"], "1,0,3,-2");
        assert_eq!(v["class"], "unicyclic");
        assert_eq!(v["edges"].as_array().unwrap().len(), 3);
        let w: Value = serde_json::from_str(&describe(v["graph6"].as_str().unwrap()).unwrap()).unwrap();
        assert_eq!(w["ps"], "6");
        assert!(describe("Q(3)").is_err());
    }

    #[test]
    fn verify_in_page_range() {
        let v: Value = serde_json::from_str(&verify_claim("thm1.3", 8).unwrap()).unwrap();
        assert_eq!(v["pass"], true);
        assert_eq!(v["bound"], v["expected"]);
        assert!(verify_claim("thm1.3", 11).is_err());
        assert!(verify_claim("nope", 8).is_err());
    }

    #[test]
    fn top_is_sorted() {
        let v: Value = serde_json::from_str(&top_graphs("bicyclic", 6, 3).unwrap()).unwrap();
        let ps: Vec<u64> =
            v.as_array().unwrap().iter().map(|r| r["ps"].as_str().unwrap().parse().unwrap()).collect();
        assert_eq!(ps.len(), 3);
        assert!(ps.windows(2).all(|w| w[0] >= w[1]));
        assert!(top_graphs("cubic", 6, 3).is_err());
    }
}
