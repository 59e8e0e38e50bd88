//! Property-based invariants across the crate, plus a large seeded random
//! sample backing the oracle-equivalence claim beyond the exhaustive orders.

use proptest::collection::vec;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nearly_independent::{
    canonical_code, graph6, sigma0, sigma1, sigma_k_brute, Count, FamilySpec, Graph, VertexSet,
};

/// Strategy: a graph of order up to `max_n` from random pair bits.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if bits[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::build(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(12)) {
        let encoded = graph6::emit(&g);
        prop_assert_eq!(graph6::parse(&encoded).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(10)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
    }

    #[test]
    fn join_edge_count(g in arb_graph(8), h in arb_graph(8)) {
        let joined = g.join(&h).unwrap();
        prop_assert_eq!(
            joined.edge_count(),
            g.edge_count() + h.edge_count() + g.vertex_count() * h.vertex_count()
        );
    }

    #[test]
    fn deleting_nothing_changes_nothing(g in arb_graph(12)) {
        prop_assert_eq!(g.delete_vertices(VertexSet::EMPTY), g.clone());
    }

    #[test]
    fn canonical_code_is_permutation_invariant(
        g in arb_graph(7),
        seed in any::<u64>(),
    ) {
        let n = g.vertex_count();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        prop_assert_eq!(
            canonical_code(&g.permute(&perm)).unwrap(),
            canonical_code(&g).unwrap()
        );
    }

    #[test]
    fn component_multiplicativity_of_sigma0(g in arb_graph(6), h in arb_graph(6)) {
        let combined = g.disjoint_union(&h).unwrap();
        prop_assert_eq!(sigma0(&combined), sigma0(&g) * sigma0(&h));
    }

    #[test]
    fn union_rule_for_sigma1(g in arb_graph(6), h in arb_graph(6)) {
        let combined = g.disjoint_union(&h).unwrap();
        prop_assert_eq!(
            sigma1(&combined),
            sigma1(&g) * sigma0(&h) + sigma0(&g) * sigma1(&h)
        );
    }

    #[test]
    fn vertex_removal_strictly_decreases_sigma1(g in arb_graph(8)) {
        prop_assume!(g.edge_count() > 0);
        let s1 = sigma1(&g);
        for v in g.vertices() {
            prop_assert!(s1 > sigma1(&g.delete_vertex(v)));
        }
    }

    #[test]
    fn recursion_agrees_with_oracle(g in arb_graph(10)) {
        prop_assert_eq!(sigma0(&g), sigma_k_brute(&g, 0).unwrap());
        prop_assert_eq!(sigma1(&g), sigma_k_brute(&g, 1).unwrap());
    }

    #[test]
    fn disjoint_union_is_associative_up_to_isomorphism(
        a in arb_graph(3),
        b in arb_graph(3),
        c in arb_graph(3),
    ) {
        let left = a.disjoint_union(&b).unwrap().disjoint_union(&c).unwrap();
        let right = a.disjoint_union(&b.disjoint_union(&c).unwrap()).unwrap();
        prop_assert_eq!(
            canonical_code(&left).unwrap(),
            canonical_code(&right).unwrap()
        );
    }

    #[test]
    fn wheel_is_cycle_joined_with_a_vertex(n in 4usize..=10) {
        let wheel = FamilySpec::Wheel { n }.construct().unwrap();
        let built = FamilySpec::Cycle { n: n - 1 }
            .construct()
            .unwrap()
            .join(&Graph::edgeless(1).unwrap())
            .unwrap();
        prop_assert_eq!(
            canonical_code(&wheel).unwrap(),
            canonical_code(&built).unwrap()
        );
    }
}

/// Ten thousand seeded random graphs of order up to 12: recursion equals
/// the subset-enumeration oracle for both sigma0 and sigma1.
#[test]
fn oracle_equivalence_random_sample() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for round in 0..10_000 {
        let n = rng.gen_range(1..=12);
        let p: f64 = rng.gen_range(0.05..0.95);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::build(n, &edges).unwrap();
        assert_eq!(sigma0(&g), sigma_k_brute(&g, 0).unwrap(), "sigma0, round {round}, {g:?}");
        assert_eq!(sigma1(&g), sigma_k_brute(&g, 1).unwrap(), "sigma1, round {round}, {g:?}");
    }
}

/// Every enumerated class representative survives a graph6 round trip.
#[test]
fn graph6_round_trip_over_enumerated_classes() {
    for n in 0..=5 {
        for g in nearly_independent::enumerate_graphs(n, nearly_independent::GraphFilter::All)
            .unwrap()
        {
            assert_eq!(graph6::parse(&graph6::emit(&g)).unwrap(), g);
        }
    }
}

/// sigma_k over k always sums to 2^n (spot sample; the acceptance suite
/// runs the full randomized version).
#[test]
fn histogram_total_spot_sample() {
    for spec in [
        FamilySpec::Wheel { n: 7 },
        FamilySpec::Lollipop { n: 8, k: 3 },
        FamilySpec::CompleteBipartite { r: 3, s: 4 },
    ] {
        let g = spec.construct().unwrap();
        let total: Count = nearly_independent::sigma_histogram(&g)
            .unwrap()
            .iter()
            .copied()
            .sum();
        assert_eq!(total, Count::pow2(g.vertex_count() as u32));
    }
}
