use num_bigint::BigUint;
use serde::Serialize;

use super::{EnumerationRecord, GraphClass, Harness};
use crate::bounds::{self, bound, lemma46_sides, Claim};
use crate::canon::canonical_graph;
use crate::error::{Error, Result};
use crate::family::{
    make_b1a, make_b2, make_b2p, make_b3p, make_cycle, make_d, make_dprime, make_path, Attach,
};
use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::harness::enumerate::{FOREST_MAX_ORDER, UNICYCLIC_MAX_ORDER};

/// Outcome of checking one claim at one order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub n: usize,
    pub expected: String,
    pub observed: String,
    pub extremal_expected: Option<String>,
    pub extremal_observed: Vec<String>,
    pub pass: bool,
}

fn canon6(g: &Graph) -> String {
    encode_graph6(&canonical_graph(g))
}

/// Largest PS among `pool` and every graph attaining it.
fn maximum<'a>(pool: impl Iterator<Item = &'a EnumerationRecord>) -> Option<(BigUint, Vec<String>)> {
    let mut best: Option<(BigUint, Vec<String>)> = None;
    for r in pool {
        match &mut best {
            Some((v, gs)) if r.ps.0 == *v => gs.push(r.graph6.clone()),
            Some((v, _)) if r.ps.0 < *v => {}
            _ => best = Some((r.ps.0.clone(), vec![r.graph6.clone()])),
        }
    }
    if let Some((_, gs)) = &mut best {
        gs.sort();
    }
    best
}

fn unverifiable(claim: Claim, n: usize, reason: impl Into<String>) -> Error {
    Error::Unverifiable { claim: claim.id(), n, reason: reason.into() }
}

/// Largest `n` the harness can check a claim at.
fn check_limit(claim: Claim) -> Option<usize> {
    match claim {
        Claim::Lem2_7 | Claim::Lem2_8 => Some(FOREST_MAX_ORDER),
        Claim::Lem4_6 => None,
        Claim::Lem5_1 => Some(60),
        _ => Some(UNICYCLIC_MAX_ORDER),
    }
}

impl Harness {
    /// Checks `claim` at order `n` against exhaustive enumeration.
    pub fn verify(&self, claim: Claim, n: usize) -> Result<VerificationReport> {
        if !claim.is_valid_at(n) {
            let (lo, hi) = claim.validity();
            let range = match hi {
                Some(hi) if hi == lo => format!("n = {lo}"),
                Some(hi) => format!("{lo} <= n <= {hi}"),
                None => format!("n >= {lo}"),
            };
            return Err(unverifiable(claim, n, format!("the claim covers {range}")));
        }
        if let Some(limit) = check_limit(claim) {
            if n > limit {
                return Err(unverifiable(claim, n, format!("enumeration stops at n = {limit}")));
            }
        }
        match claim {
            Claim::Lem2_7 => {
                let all = self.forests(n)?;
                self.max_report(claim, n, all.iter(), None, &make_path(n)?)
            }
            Claim::Lem2_8 => {
                let all = self.forests(n)?;
                let multi = all.iter().filter(|r| r.class == GraphClass::Forest);
                let expected = make_path(2)?.disjoint_union(&make_path(n - 2)?)?;
                self.max_report(claim, n, multi, None, &expected)
            }
            Claim::Lem2_9 => {
                let all = self.unicyclic(n)?;
                self.max_report(claim, n, all.iter(), None, &make_d(3, n - 3)?)
            }
            Claim::Lem2_10 => {
                let all = self.unicyclic(n)?;
                self.max_report(claim, n, all.iter(), Some(&make_d(3, n - 3)?), &make_dprime(n, 3)?)
            }
            Claim::Lem4_3 => {
                let all = self.unicyclic(n)?;
                self.max_report(claim, n, all.iter(), None, &make_cycle(4)?)
            }
            Claim::Thm1_1 => {
                let all = self.bicyclic(n)?;
                let pool = all.iter().filter(|r| r.class == GraphClass::TypeB1);
                self.max_report(claim, n, pool, None, &make_b1a(3, 3, n - 5, Attach::Rim)?)
            }
            Claim::Lem4_1 => {
                let all = self.bicyclic(n)?;
                let pool = all.iter().filter(|r| r.class == GraphClass::TypeB2);
                self.max_report(claim, n, pool, None, &make_b2(3, 3, n - 6)?)
            }
            Claim::Thm1_2 => {
                let all = self.bicyclic(n)?;
                let pool = all.iter().filter(|r| r.class == GraphClass::TypeB2);
                self.max_report(claim, n, pool, Some(&make_b2(3, 3, n - 6)?), &make_b2p(n - 7)?)
            }
            Claim::Thm1_3 => {
                let all = self.bicyclic(n)?;
                let pool = all.iter().filter(|r| r.class == GraphClass::TypeB3);
                self.max_report(claim, n, pool, None, &make_b3p(n - 4)?)
            }
            Claim::Thm1_4 => {
                let all = self.bicyclic(n)?;
                self.max_report(claim, n, all.iter(), Some(&make_b2(3, 3, n - 6)?), &make_b2p(n - 7)?)
            }
            Claim::Lem4_2 => self.unicyclic_pairs(n),
            Claim::Lem4_5 => self.forest_plus_unicyclic(n),
            Claim::Lem4_6 => {
                let (rhs, lhs) = lemma46_sides(n)?;
                Ok(VerificationReport {
                    claim: claim.id().into(),
                    n,
                    pass: lhs <= rhs && (lhs == rhs) == (n == 9),
                    expected: rhs.to_string(),
                    observed: lhs.to_string(),
                    extremal_expected: None,
                    extremal_observed: Vec::new(),
                })
            }
            Claim::Lem5_1 => {
                let seq = bounds::d_family_monotonicity(n)?;
                let decreasing = seq.windows(2).all(|w| w[0] > w[1]);
                let expected = bound(Claim::Lem2_9, n)?;
                let top = seq.iter().max().expect("n >= 5 gives a non-empty sequence");
                let mut argmax = Vec::new();
                for (i, ps) in seq.iter().enumerate() {
                    if ps == top {
                        argmax.push(canon6(&make_d(i + 3, n - i - 3)?));
                    }
                }
                argmax.sort();
                Ok(VerificationReport {
                    claim: claim.id().into(),
                    n,
                    pass: decreasing && seq[0].0 == expected,
                    expected: expected.to_string(),
                    observed: seq.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","),
                    extremal_expected: Some(canon6(&make_d(3, n - 3)?)),
                    extremal_observed: argmax,
                })
            }
        }
    }

    /// Checks "the maximum of `pool` (without `exclude`) is the claim's bound,
    /// attained only by `expected`". With `exclude`, that graph must also be
    /// the unique maximum of the whole pool.
    fn max_report<'a>(
        &self,
        claim: Claim,
        n: usize,
        pool: impl Iterator<Item = &'a EnumerationRecord> + Clone,
        exclude: Option<&Graph>,
        expected: &Graph,
    ) -> Result<VerificationReport> {
        let value = bound(claim, n)?;
        let expected6 = canon6(expected);
        let mut pass = true;
        let (observed, extremal) = match exclude {
            None => maximum(pool),
            Some(top) => {
                let top6 = canon6(top);
                let first = maximum(pool.clone()).map(|(_, gs)| gs);
                pass &= first.as_deref() == Some(std::slice::from_ref(&top6));
                maximum(pool.filter(|r| r.graph6 != top6))
            }
        }
        .ok_or_else(|| unverifiable(claim, n, "nothing to compare against"))?;
        pass &= observed == value && extremal == [expected6.clone()];
        Ok(VerificationReport {
            claim: claim.id().into(),
            n,
            expected: value.to_string(),
            observed: observed.to_string(),
            extremal_expected: Some(expected6),
            extremal_observed: extremal,
            pass,
        })
    }

    /// Largest `PS(U_m) PS(U_t)` over unicyclic `U_m`, `U_t` with
    /// `m, t >= 5`, `m + t = n`; must stay strictly below the bound.
    fn unicyclic_pairs(&self, n: usize) -> Result<VerificationReport> {
        let claim = Claim::Lem4_2;
        let value = bound(claim, n)?;
        let mut best: Option<(BigUint, Vec<String>)> = None;
        for m in 5..=n / 2 {
            let t = n - m;
            let (a, ga) = maximum(self.unicyclic(m)?.iter()).expect("unicyclic graphs exist");
            let (b, gb) = maximum(self.unicyclic(t)?.iter()).expect("unicyclic graphs exist");
            let product = a * b;
            let unions = unions(&ga, &gb)?;
            merge_best(&mut best, product, unions);
        }
        let (observed, extremal) = best.ok_or_else(|| unverifiable(claim, n, "no admissible split"))?;
        Ok(VerificationReport {
            claim: claim.id().into(),
            n,
            pass: observed < value,
            expected: value.to_string(),
            observed: observed.to_string(),
            extremal_expected: None,
            extremal_observed: extremal,
        })
    }

    /// Largest `PS(H) PS(U_t)` over non-empty forests `H` and unicyclic `U_t`
    /// of total order `n`.
    fn forest_plus_unicyclic(&self, n: usize) -> Result<VerificationReport> {
        let claim = Claim::Lem4_5;
        let value = bound(claim, n)?;
        let mut best: Option<(BigUint, Vec<String>)> = None;
        for t in 3..n {
            let (a, ga) = maximum(self.forests(n - t)?.iter()).expect("forests exist");
            let (b, gb) = maximum(self.unicyclic(t)?.iter()).expect("unicyclic graphs exist");
            merge_best(&mut best, a * b, unions(&ga, &gb)?);
        }
        let (observed, extremal) = best.ok_or_else(|| unverifiable(claim, n, "no admissible split"))?;
        let expected6 = canon6(&make_path(n - 3)?.disjoint_union(&make_cycle(3)?)?);
        Ok(VerificationReport {
            claim: claim.id().into(),
            n,
            pass: observed == value && extremal == [expected6.clone()],
            expected: value.to_string(),
            observed: observed.to_string(),
            extremal_expected: Some(expected6),
            extremal_observed: extremal,
        })
    }

    /// Maximum PS over type B2 graphs other than `B2(3,3,n-6)`, with every
    /// graph attaining it. Reported for orders where no closed form is claimed.
    pub fn observe_second_max_b2(&self, n: usize) -> Result<(BigUint, Vec<String>)> {
        if n < 6 {
            return Err(Error::invalid(format!("type B2 graphs need n >= 6, got {n}")));
        }
        let all = self.bicyclic(n)?;
        let top6 = canon6(&make_b2(3, 3, n - 6)?);
        maximum(all.iter().filter(|r| r.class == GraphClass::TypeB2 && r.graph6 != top6))
            .ok_or_else(|| Error::invalid(format!("only one type B2 graph at n = {n}")))
    }
}

fn unions(left: &[String], right: &[String]) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for a in left {
        for b in right {
            let g = crate::graph6::decode_graph6(a)?.disjoint_union(&crate::graph6::decode_graph6(b)?)?;
            out.push(canon6(&g));
        }
    }
    Ok(out)
}

fn merge_best(best: &mut Option<(BigUint, Vec<String>)>, value: BigUint, graphs: Vec<String>) {
    match best {
        Some((v, gs)) if *v == value => {
            gs.extend(graphs);
            gs.sort();
            gs.dedup();
        }
        Some((v, _)) if *v > value => {}
        _ => {
            let mut graphs = graphs;
            graphs.sort();
            graphs.dedup();
            *best = Some((value, graphs));
        }
    }
}
