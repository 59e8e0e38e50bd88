//! Isomorph-free exhaustive enumeration of small graphs.
//!
//! Orders up to 6 iterate every upper-triangle bitmask and deduplicate by
//! canonical code. Larger orders grow representatives one vertex at a time:
//! every order-n graph arises from an order-(n-1) graph by attaching a new
//! vertex with some neighborhood, so extending each representative by all
//! 2^(n-1) masks and deduplicating canonically covers every class. For the
//! connected filter it suffices to extend connected parents by nonempty
//! masks, since deleting a non-cut vertex of a connected graph leaves a
//! connected graph.

use std::collections::BTreeSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{canonical_code, CanonicalCode};
use crate::graph::Graph;

/// Which isomorphism classes to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFilter {
    All,
    Connected,
    /// Exactly this many edges.
    Size(usize),
}

impl std::fmt::Display for GraphFilter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GraphFilter::All => write!(f, "all"),
            GraphFilter::Connected => write!(f, "connected"),
            GraphFilter::Size(m) => write!(f, "size {m}"),
        }
    }
}

/// Guard for `All` and `Size` enumeration.
pub const ENUMERATE_ALL_GUARD: usize = 8;
/// Guard for `Connected` enumeration.
pub const ENUMERATE_CONNECTED_GUARD: usize = 9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("order {order} exceeds the enumeration guard {guard} for filter {filter}")]
    AboveGuard { order: usize, guard: usize, filter: String },
}

/// One canonical representative per isomorphism class of order `n` passing
/// the filter, sorted by canonical code.
pub fn enumerate_graphs(n: usize, filter: GraphFilter) -> Result<Vec<Graph>, EnumerateError> {
    let codes = enumerate_codes(n, filter)?;
    Ok(codes.into_iter().map(|c| c.to_graph()).collect())
}

/// Canonical codes of the classes of order `n` passing the filter.
pub fn enumerate_codes(
    n: usize,
    filter: GraphFilter,
) -> Result<BTreeSet<CanonicalCode>, EnumerateError> {
    let guard = match filter {
        GraphFilter::Connected => ENUMERATE_CONNECTED_GUARD,
        GraphFilter::All | GraphFilter::Size(_) => ENUMERATE_ALL_GUARD,
    };
    if n > guard {
        return Err(EnumerateError::AboveGuard {
            order: n,
            guard,
            filter: filter.to_string(),
        });
    }
    let codes = match filter {
        GraphFilter::All => all_codes(n),
        GraphFilter::Connected => connected_codes(n),
        GraphFilter::Size(m) => all_codes(n)
            .into_iter()
            .filter(|c| c.to_graph().edge_count() == m)
            .collect(),
    };
    Ok(codes)
}

fn all_codes(n: usize) -> BTreeSet<CanonicalCode> {
    if n <= 6 {
        masks_codes(n, false)
    } else {
        extend_codes(&all_codes(n - 1), n, false)
    }
}

fn connected_codes(n: usize) -> BTreeSet<CanonicalCode> {
    if n <= 6 {
        masks_codes(n, true)
    } else {
        extend_codes(&connected_codes(n - 1), n, true)
    }
}

/// Every upper-triangle bitmask of an order-n graph, canonically deduped.
fn masks_codes(n: usize, connected_only: bool) -> BTreeSet<CanonicalCode> {
    let pairs: Vec<(usize, usize)> = (1..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    let total = 1u64 << pairs.len();
    (0..total)
        .into_par_iter()
        .filter_map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(p, _)| mask >> p & 1 != 0)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::build(n, &edges).expect("mask edges are in range");
            if connected_only && !g.is_connected() {
                return None;
            }
            Some(canonical_code(&g).expect("enumeration order is within the canonical guard"))
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

/// Extends each parent by one vertex attached along every admissible mask.
fn extend_codes(
    parents: &BTreeSet<CanonicalCode>,
    n: usize,
    connected_only: bool,
) -> BTreeSet<CanonicalCode> {
    let parent_graphs: Vec<Graph> = parents.iter().map(|c| c.to_graph()).collect();
    parent_graphs
        .par_iter()
        .flat_map_iter(|parent| {
            let first_mask = u64::from(connected_only);
            (first_mask..(1u64 << (n - 1))).map(move |mask| {
                let mut adj: Vec<u64> = parent.adjacency().to_vec();
                adj.push(mask);
                for (v, entry) in adj.iter_mut().enumerate().take(n - 1) {
                    *entry |= (mask >> v & 1) << (n - 1);
                }
                let g = Graph::from_adjacency(adj).expect("extension keeps adjacency symmetric");
                canonical_code(&g).expect("extension order is within the canonical guard")
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    // non-isomorphic graph counts: 1, 2, 4, 11, 34, 156, 1044 for n = 1..7
    #[test]
    fn all_counts_match_known_sequence() {
        let expected = [1usize, 2, 4, 11, 34, 156, 1044];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(enumerate_codes(n, GraphFilter::All).unwrap().len(), want, "n = {n}");
        }
    }

    // connected counts: 1, 1, 2, 6, 21, 112, 853 for n = 1..7
    #[test]
    fn connected_counts_match_known_sequence() {
        let expected = [1usize, 1, 2, 6, 21, 112, 853];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(
                enumerate_codes(n, GraphFilter::Connected).unwrap().len(),
                want,
                "n = {n}"
            );
        }
    }

    #[test]
    fn size_filter() {
        // order-4 graphs with 3 edges: P4, K3 plus K1, the star
        let graphs = enumerate_graphs(4, GraphFilter::Size(3)).unwrap();
        assert_eq!(graphs.len(), 3);
        assert!(graphs.iter().all(|g| g.edge_count() == 3));
    }

    #[test]
    fn representatives_are_canonical_and_sorted() {
        let graphs = enumerate_graphs(5, GraphFilter::All).unwrap();
        let codes: Vec<_> = graphs
            .iter()
            .map(|g| canonical_code(g).unwrap())
            .collect();
        let mut sorted = codes.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(codes, sorted);
    }

    #[test]
    fn guards() {
        assert!(enumerate_codes(9, GraphFilter::All).is_err());
        assert!(enumerate_codes(10, GraphFilter::Connected).is_err());
        assert!(enumerate_codes(9, GraphFilter::Size(3)).is_err());
    }

    #[test]
    fn degenerate_orders() {
        assert_eq!(enumerate_graphs(0, GraphFilter::All).unwrap().len(), 1);
        assert_eq!(enumerate_graphs(1, GraphFilter::Connected).unwrap().len(), 1);
    }
}
