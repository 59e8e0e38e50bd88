//! Good edges, good graphs and the generated family H.
//!
//! An edge uv is good when `N[u] ∪ N[v]` covers every vertex; a connected
//! graph all of whose edges are good is a good graph. Good graphs are
//! exactly the connected graphs with σ1 equal to the edge count, and the
//! family is generated from K1 and the complete bipartite graphs by joins
//! and joins with edgeless graphs.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::canon::{canonical_code, CanonError, CanonicalCode};
use crate::enumerate::{enumerate_graphs, EnumerateError, GraphFilter};
use crate::graph::{Graph, GraphError};

/// Order cap for [`generate_h`]; the closure is combinatorial in the cap.
pub const H_GENERATION_GUARD: usize = 10;
/// Order cap for [`verify_h_characterization`], which exhausts all graphs.
pub const H_VERIFY_GUARD: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GoodError {
    #[error("order {order} exceeds the guard {guard}")]
    AboveGuard { order: usize, guard: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
}

/// True when `N[u] ∪ N[v] = V(G)`. Errors if uv is not an edge.
pub fn is_good_edge(g: &Graph, u: usize, v: usize) -> Result<bool, GraphError> {
    if !g.has_edge(u, v) {
        return Err(GraphError::NotAnEdge(u, v));
    }
    let cover = g.closed_neighborhood(u).union(g.closed_neighborhood(v));
    Ok(cover == g.vertex_set())
}

/// Per-graph goodness verdict with the offending edges.
#[derive(Debug, Clone)]
pub struct GoodnessReport {
    pub graph: Graph,
    pub bad_edges: Vec<(usize, usize)>,
    pub is_good: bool,
}

/// Checks every edge; a good graph must also be connected. K1 is good
/// vacuously, the graph with no vertices is not (it is not connected).
pub fn goodness(g: &Graph) -> GoodnessReport {
    let bad_edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| {
            !is_good_edge(g, u, v).expect("edges() yields only edges")
        })
        .collect();
    let is_good = bad_edges.is_empty() && g.is_connected();
    GoodnessReport { graph: g.clone(), bad_edges, is_good }
}

/// The members of the generated family, keyed by canonical code.
#[derive(Debug, Clone, Default)]
pub struct HFamily {
    members: BTreeMap<CanonicalCode, Graph>,
}

impl HFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, code: &CanonicalCode) -> bool {
        self.members.contains_key(code)
    }

    pub fn codes(&self) -> impl Iterator<Item = &CanonicalCode> {
        self.members.keys()
    }

    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        self.members.values()
    }

    pub fn of_order(&self, n: usize) -> Vec<&Graph> {
        self.members.values().filter(|g| g.vertex_count() == n).collect()
    }
}

/// Generates every member of the family with order at most `max_order`:
/// seed with K1 and all complete bipartite graphs, then close under joins
/// of two members and joins with edgeless graphs, pruning above the cap.
pub fn generate_h(max_order: usize) -> Result<HFamily, GoodError> {
    if max_order > H_GENERATION_GUARD {
        return Err(GoodError::AboveGuard { order: max_order, guard: H_GENERATION_GUARD });
    }
    let mut family = HFamily::default();
    let mut queue: Vec<Graph> = Vec::new();

    if max_order >= 1 {
        insert_member(&mut family, &mut queue, Graph::edgeless(1)?)?;
    }
    for r in 1..max_order {
        for s in r..=(max_order - r) {
            let biclique = crate::family::FamilySpec::CompleteBipartite { r, s }
                .construct()
                .expect("seed parameters are valid");
            insert_member(&mut family, &mut queue, biclique)?;
        }
    }

    // fixpoint: pair each popped member with everything currently known;
    // since every pair's later member still gets popped, all pairs are seen
    while let Some(g) = queue.pop() {
        let partners: Vec<Graph> = family.members.values().cloned().collect();
        for h in partners {
            if g.vertex_count() + h.vertex_count() <= max_order {
                insert_member(&mut family, &mut queue, g.join(&h)?)?;
            }
        }
        for extra in 1..=(max_order.saturating_sub(g.vertex_count())) {
            insert_member(&mut family, &mut queue, g.join(&Graph::edgeless(extra)?)?)?;
        }
    }
    Ok(family)
}

fn insert_member(
    family: &mut HFamily,
    queue: &mut Vec<Graph>,
    g: Graph,
) -> Result<(), GoodError> {
    let code = canonical_code(&g)?;
    if let std::collections::btree_map::Entry::Vacant(slot) = family.members.entry(code) {
        slot.insert(g.clone());
        queue.push(g);
    }
    Ok(())
}

/// Outcome of checking that the generated family coincides with the
/// goodness predicate over all connected graphs of order <= `max_order`.
#[derive(Debug, Clone)]
pub struct HCharacterization {
    pub max_order: usize,
    pub matches: bool,
    /// generated but not good (would refute soundness of the generation)
    pub generated_not_good: Vec<CanonicalCode>,
    /// good but never generated (would refute completeness)
    pub good_not_generated: Vec<CanonicalCode>,
}

/// Exhaustively compares [`generate_h`] with the goodness filter.
pub fn verify_h_characterization(max_order: usize) -> Result<HCharacterization, GoodError> {
    if max_order > H_VERIFY_GUARD {
        return Err(GoodError::AboveGuard { order: max_order, guard: H_VERIFY_GUARD });
    }
    let generated = generate_h(max_order)?;
    let mut good_codes = Vec::new();
    for n in 1..=max_order {
        for g in enumerate_graphs(n, GraphFilter::Connected)? {
            if goodness(&g).is_good {
                good_codes.push(canonical_code(&g)?);
            }
        }
    }
    let good_set: std::collections::BTreeSet<_> = good_codes.iter().copied().collect();
    let generated_not_good: Vec<CanonicalCode> = generated
        .codes()
        .filter(|c| !good_set.contains(c))
        .copied()
        .collect();
    let good_not_generated: Vec<CanonicalCode> = good_set
        .iter()
        .filter(|c| !generated.contains(c))
        .copied()
        .collect();
    let matches = generated_not_good.is_empty() && good_not_generated.is_empty();
    Ok(HCharacterization { max_order, matches, generated_not_good, good_not_generated })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;
    use crate::sigma::{sigma1, Count};

    fn fam(spec: FamilySpec) -> Graph {
        spec.construct().unwrap()
    }

    #[test]
    fn good_edges_of_small_graphs() {
        let k3 = fam(FamilySpec::Complete { n: 3 });
        for (u, v) in k3.edges() {
            assert!(is_good_edge(&k3, u, v).unwrap());
        }
        let p4 = fam(FamilySpec::Path { n: 4 });
        assert!(!is_good_edge(&p4, 0, 1).unwrap(), "end edge misses a vertex");
        assert!(is_good_edge(&p4, 1, 2).unwrap(), "middle edge covers all");
        assert!(is_good_edge(&p4, 0, 2).is_err(), "not an edge");
    }

    #[test]
    fn goodness_reports() {
        let star = fam(FamilySpec::Star { n: 6 });
        assert!(goodness(&star).is_good);

        let c5 = fam(FamilySpec::Cycle { n: 5 });
        let report = goodness(&c5);
        assert!(!report.is_good);
        assert_eq!(report.bad_edges.len(), 5);

        let c4 = fam(FamilySpec::Cycle { n: 4 });
        assert!(goodness(&c4).is_good);

        // disconnected, and each edge misses the other component
        let two_k2 = fam(FamilySpec::MatchingPlusIsolated { pairs: 2, isolated: 0 });
        assert!(!goodness(&two_k2).is_good);
        assert_eq!(goodness(&two_k2).bad_edges.len(), 2);

        let k1 = Graph::edgeless(1).unwrap();
        assert!(goodness(&k1).is_good);
        assert!(!goodness(&Graph::empty()).is_good);
    }

    #[test]
    fn h_family_small_orders() {
        let h2 = generate_h(2).unwrap();
        assert_eq!(h2.len(), 2); // K1 and K2

        let h3 = generate_h(3).unwrap();
        let k3 = canonical_code(&fam(FamilySpec::Complete { n: 3 })).unwrap();
        let p3 = canonical_code(&fam(FamilySpec::Path { n: 3 })).unwrap();
        assert!(h3.contains(&k3));
        assert!(h3.contains(&p3));
        assert_eq!(h3.len(), 4);

        let h4 = generate_h(4).unwrap();
        let c4 = canonical_code(&fam(FamilySpec::Cycle { n: 4 })).unwrap();
        let k4 = canonical_code(&fam(FamilySpec::Complete { n: 4 })).unwrap();
        let p4 = canonical_code(&fam(FamilySpec::Path { n: 4 })).unwrap();
        assert!(h4.contains(&c4));
        assert!(h4.contains(&k4));
        assert!(!h4.contains(&p4));
        // per-order member counts 1, 1, 2, 4
        for (n, want) in [(1, 1), (2, 1), (3, 2), (4, 4)] {
            assert_eq!(h4.of_order(n).len(), want, "order {n}");
        }
    }

    #[test]
    fn h_members_are_good_and_connected() {
        let h5 = generate_h(5).unwrap();
        assert_eq!(h5.len(), 1 + 1 + 2 + 4 + 6);
        for g in h5.graphs() {
            let report = goodness(g);
            assert!(report.is_good, "generated member not good: {g:?}");
            assert!(g.is_connected());
        }
    }

    #[test]
    fn h_members_attain_sigma1_equals_edge_count() {
        for g in generate_h(6).unwrap().graphs() {
            assert_eq!(sigma1(g), Count::new(g.edge_count() as u128), "{g:?}");
        }
    }

    #[test]
    fn characterization_matches_up_to_5() {
        for max_order in [4, 5] {
            let outcome = verify_h_characterization(max_order).unwrap();
            assert!(outcome.matches, "difference at max_order {max_order}");
        }
    }

    #[test]
    fn guards() {
        assert!(generate_h(11).is_err());
        assert!(verify_h_characterization(9).is_err());
    }
}
