//! Exhaustive σ1 distributions over isomorphism classes and mechanical
//! verification of the extremal bounds:
//!
//! * every connected graph satisfies σ1(G) >= |E(G)|, with equality exactly
//!   on the good graphs;
//! * every graph of order n >= 6 satisfies σ1(G) <= 27·2^(n-6), with
//!   equality exactly on 3K2 ∪ (n-6)K1 and 4K2 ∪ (n-8)K1.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::canon::CanonicalCode;
use crate::enumerate::{enumerate_codes, EnumerateError, GraphFilter};
use crate::family::FamilySpec;
use crate::good::goodness;
use crate::graph6;
use crate::report::VerifyReport;
use crate::sigma::{sigma1, Count};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtremalError {
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error("max-bound verification covers orders 6 through 8, got {0}")]
    UnsupportedOrder(usize),
    #[error("order {order} exceeds the verification guard {guard}")]
    AboveGuard { order: usize, guard: usize },
}

/// Order cap for [`verify_min_bound`].
pub const MIN_BOUND_GUARD: usize = 8;

/// One isomorphism class with its edge count and σ1 value.
#[derive(Debug, Clone, Serialize)]
pub struct DistributionEntry {
    #[serde(serialize_with = "serialize_code_as_graph6")]
    pub code: CanonicalCode,
    pub edges: usize,
    pub sigma1: u128,
}

fn serialize_code_as_graph6<S: serde::Serializer>(
    code: &CanonicalCode,
    ser: S,
) -> Result<S::Ok, S::Error> {
    ser.serialize_str(&graph6::emit(&code.to_graph()))
}

/// σ1 over every isomorphism class of order `n` passing the filter,
/// entries sorted by canonical code.
#[derive(Debug, Clone)]
pub struct SigmaDistribution {
    pub n: usize,
    pub filter: GraphFilter,
    pub entries: Vec<DistributionEntry>,
}

impl SigmaDistribution {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// σ1 values in ascending order (the distribution as a multiset).
    pub fn sigma_values(&self) -> Vec<Count> {
        let mut values: Vec<Count> = self.entries.iter().map(|e| Count::new(e.sigma1)).collect();
        values.sort_unstable();
        values
    }

    pub fn max_sigma(&self) -> Option<Count> {
        self.entries.iter().map(|e| Count::new(e.sigma1)).max()
    }

    /// Codes of the classes attaining a given σ1 value.
    pub fn classes_with_value(&self, value: Count) -> Vec<CanonicalCode> {
        self.entries
            .iter()
            .filter(|e| Count::new(e.sigma1) == value)
            .map(|e| e.code)
            .collect()
    }

    /// Tab-separated `graph6 m sigma1` rows in canonical-code order.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("graph6\tm\tsigma1\n");
        for e in &self.entries {
            out.push_str(&format!(
                "{}\t{}\t{}\n",
                graph6::emit(&e.code.to_graph()),
                e.edges,
                e.sigma1
            ));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "filter": self.filter.to_string(),
            "classes": self.entries,
        })
    }
}

/// Computes σ1 for every representative of order `n` passing the filter.
pub fn sigma1_distribution(
    n: usize,
    filter: GraphFilter,
) -> Result<SigmaDistribution, EnumerateError> {
    let codes: Vec<CanonicalCode> = enumerate_codes(n, filter)?.into_iter().collect();
    let entries: Vec<DistributionEntry> = codes
        .par_iter()
        .map(|&code| {
            let g = code.to_graph();
            DistributionEntry {
                code,
                edges: g.edge_count(),
                sigma1: sigma1(&g).value(),
            }
        })
        .collect();
    Ok(SigmaDistribution { n, filter, entries })
}

/// Checks σ1(G) >= m over every connected graph of order <= `n_max`, with
/// equality exactly on the good graphs.
pub fn verify_min_bound(n_max: usize) -> Result<VerifyReport, ExtremalError> {
    if n_max > MIN_BOUND_GUARD {
        return Err(ExtremalError::AboveGuard { order: n_max, guard: MIN_BOUND_GUARD });
    }
    let mut report = VerifyReport::new("min-bound");
    for n in 1..=n_max {
        let codes: Vec<CanonicalCode> =
            enumerate_codes(n, GraphFilter::Connected)?.into_iter().collect();
        let violations: Vec<String> = codes
            .par_iter()
            .flat_map_iter(|&code| {
                let g = code.to_graph();
                let m = Count::new(g.edge_count() as u128);
                let s1 = sigma1(&g);
                let good = goodness(&g).is_good;
                let g6 = graph6::emit(&g);
                let mut bad = Vec::new();
                if s1 < m {
                    bad.push(format!("{g6}: sigma1 = {s1} below edge count {m}"));
                }
                if (s1 == m) != good {
                    bad.push(format!(
                        "{g6}: sigma1 = {s1}, m = {m}, good = {good}: equality and goodness disagree"
                    ));
                }
                bad
            })
            .collect();
        report.push(format!("min-bound over connected graphs of order {n}"), violations);
    }
    Ok(report)
}

/// The claimed maximizers of σ1 at order n: 3K2 ∪ (n-6)K1, and for n >= 8
/// also 4K2 ∪ (n-8)K1.
pub fn max_bound_equality_specs(n: usize) -> Vec<FamilySpec> {
    let mut specs = vec![FamilySpec::MatchingPlusIsolated { pairs: 3, isolated: n - 6 }];
    if n >= 8 {
        specs.push(FamilySpec::MatchingPlusIsolated { pairs: 4, isolated: n - 8 });
    }
    specs
}

/// Checks σ1(G) <= 27·2^(n-6) over every graph of each requested order
/// (6 through 8), and that the equality set is exactly the claimed one.
pub fn verify_max_bound(orders: &[usize]) -> Result<VerifyReport, ExtremalError> {
    let mut report = VerifyReport::new("max-bound");
    for &n in orders {
        if !(6..=8).contains(&n) {
            return Err(ExtremalError::UnsupportedOrder(n));
        }
        let bound = Count::new(27) * Count::pow2(n as u32 - 6);
        let dist = sigma1_distribution(n, GraphFilter::All)?;

        let above: Vec<String> = dist
            .entries
            .iter()
            .filter(|e| Count::new(e.sigma1) > bound)
            .map(|e| {
                format!(
                    "{}: sigma1 = {} exceeds bound {bound}",
                    graph6::emit(&e.code.to_graph()),
                    e.sigma1
                )
            })
            .collect();
        report.push(format!("sigma1 <= {bound} over all graphs of order {n}"), above);

        let mut attained = dist.classes_with_value(bound);
        attained.sort_unstable();
        let mut expected: Vec<CanonicalCode> = max_bound_equality_specs(n)
            .iter()
            .map(|spec| {
                let g = spec.construct().expect("equality specs are valid");
                crate::canon::canonical_code(&g).expect("order is within the canonical guard")
            })
            .collect();
        expected.sort_unstable();
        expected.dedup();

        let mut mismatches = Vec::new();
        for code in &attained {
            if !expected.contains(code) {
                mismatches.push(format!(
                    "{}: unexpectedly attains the bound",
                    graph6::emit(&code.to_graph())
                ));
            }
        }
        for code in &expected {
            if !attained.contains(code) {
                mismatches.push(format!(
                    "{}: claimed maximizer does not attain the bound",
                    graph6::emit(&code.to_graph())
                ));
            }
        }
        report.push(format!("equality set at order {n}"), mismatches);
    }
    Ok(report)
}
