//! Counting k-nearly independent vertex subsets.
//!
//! A subset S of vertices is k-nearly independent when the subgraph induced
//! by S has exactly k edges, so 0-nearly independent subsets are the usual
//! independent sets (the Merrifield-Simmons index counts them) and
//! [`sigma1`] counts subsets inducing exactly one edge.
//!
//! [`sigma_k_brute`] enumerates all subsets and is the reference oracle for
//! every k. [`sigma0`] and [`sigma1`] use vertex-deletion recursions with
//! component splitting and memoization:
//!
//! `σ0(G) = σ0(G−v) + σ0(G−N[v])`
//! `σ1(G) = σ1(G−v) + σ1(G−N[v]) + Σ_{u∈N(v)} σ0(G−(N[u]∪N[v]))`
//!
//! The three σ1 terms count the subsets avoiding v, containing v with no
//! neighbor, and containing v as an edge endpoint. Any pivot vertex v gives
//! the same value; the default picks a maximum-degree vertex.

use std::collections::HashMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul};

use thiserror::Error;

use crate::graph::Graph;

/// Exact nonnegative count with overflow-checked arithmetic.
///
/// All σ values at the supported order cap fit comfortably (σ_k ≤ 2^64);
/// arithmetic panics rather than wraps if a future extension overflows.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Count(u128);

impl Count {
    pub const ZERO: Count = Count(0);
    pub const ONE: Count = Count(1);

    pub fn new(value: u128) -> Self {
        Count(value)
    }

    pub fn value(self) -> u128 {
        self.0
    }

    /// 2^exp as a Count.
    pub fn pow2(exp: u32) -> Self {
        Count(1u128.checked_shl(exp).expect("count overflow in 2^exp"))
    }

    pub fn checked_sub(self, other: Count) -> Option<Count> {
        self.0.checked_sub(other.0).map(Count)
    }
}

impl Add for Count {
    type Output = Count;
    fn add(self, rhs: Count) -> Count {
        Count(self.0.checked_add(rhs.0).expect("count overflow in addition"))
    }
}

impl AddAssign for Count {
    fn add_assign(&mut self, rhs: Count) {
        *self = *self + rhs;
    }
}

impl Mul for Count {
    type Output = Count;
    fn mul(self, rhs: Count) -> Count {
        Count(self.0.checked_mul(rhs.0).expect("count overflow in multiplication"))
    }
}

impl Sum for Count {
    fn sum<I: Iterator<Item = Count>>(iter: I) -> Count {
        iter.fold(Count::ZERO, Add::add)
    }
}

impl From<u64> for Count {
    fn from(v: u64) -> Count {
        Count(v as u128)
    }
}

impl From<u128> for Count {
    fn from(v: u128) -> Count {
        Count(v)
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SigmaError {
    #[error("order {order} exceeds the brute-force enumeration guard {guard}")]
    AboveGuard { order: usize, guard: usize },
}

/// Default order cap for subset enumeration (2^25 subsets).
pub const BRUTE_FORCE_GUARD: usize = 25;

/// Counts subsets of V(G) inducing exactly `k` edges by enumerating all 2^n
/// subsets. The empty set counts for k = 0.
pub fn sigma_k_brute(g: &Graph, k: usize) -> Result<Count, SigmaError> {
    sigma_k_brute_with_guard(g, k, BRUTE_FORCE_GUARD)
}

/// [`sigma_k_brute`] with an explicit order guard.
pub fn sigma_k_brute_with_guard(g: &Graph, k: usize, guard: usize) -> Result<Count, SigmaError> {
    let n = g.vertex_count();
    if n > guard {
        return Err(SigmaError::AboveGuard { order: n, guard });
    }
    let adj = g.adjacency();
    let mut count = 0u128;
    for subset in 0..(1u128 << n) {
        let s = subset as u64;
        if induced_edges(adj, s) == k {
            count += 1;
        }
    }
    Ok(Count(count))
}

/// Full histogram: entry `k` is σ_k(G), for k = 0..=m. Σ over the histogram
/// is 2^n since every subset induces some number of edges.
pub fn sigma_histogram(g: &Graph) -> Result<Vec<Count>, SigmaError> {
    sigma_histogram_with_guard(g, BRUTE_FORCE_GUARD)
}

pub fn sigma_histogram_with_guard(g: &Graph, guard: usize) -> Result<Vec<Count>, SigmaError> {
    let n = g.vertex_count();
    if n > guard {
        return Err(SigmaError::AboveGuard { order: n, guard });
    }
    let adj = g.adjacency();
    let mut hist = vec![Count::ZERO; g.edge_count() + 1];
    for subset in 0..(1u128 << n) {
        let s = subset as u64;
        hist[induced_edges(adj, s)] += Count::ONE;
    }
    Ok(hist)
}

fn induced_edges(adj: &[u64], s: u64) -> usize {
    let mut twice = 0u32;
    let mut bits = s;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        twice += (adj[v] & s).count_ones();
    }
    (twice / 2) as usize
}

/// How the recursion picks its pivot vertex. Every rule yields the same
/// counts; this exists so tests can randomize the recursion shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PivotRule {
    /// Maximum degree, lowest label on ties (the default).
    #[default]
    MaxDegree,
    /// Always vertex 0 of the current subgraph.
    MinLabel,
    /// Pseudorandom choice from a seed.
    Seeded(u64),
}

/// Memo table shared by the σ0/σ1 recursions, keyed by the compacted
/// adjacency encoding of a subgraph (identical encodings mean identical
/// labelled graphs, so stored values are exact, not merely isomorphic).
#[derive(Default)]
pub struct MemoTable {
    entries: HashMap<Vec<u64>, MemoEntry>,
}

#[derive(Default, Clone, Copy)]
struct MemoEntry {
    s0: Option<Count>,
    s1: Option<Count>,
}

impl MemoTable {
    pub fn new() -> Self {
        MemoTable::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Number of independent vertex subsets (the Merrifield-Simmons index),
/// including the empty set.
pub fn sigma0(g: &Graph) -> Count {
    sigma0_memo(g, &mut MemoTable::new())
}

/// [`sigma0`] reusing a caller-provided memo table.
pub fn sigma0_memo(g: &Graph, memo: &mut MemoTable) -> Count {
    Eval { memo, rule: PivotRule::MaxDegree, rng: 0 }.sigma0(g)
}

/// Number of vertex subsets inducing exactly one edge.
pub fn sigma1(g: &Graph) -> Count {
    sigma1_memo(g, &mut MemoTable::new())
}

/// [`sigma1`] reusing a caller-provided memo table.
pub fn sigma1_memo(g: &Graph, memo: &mut MemoTable) -> Count {
    Eval { memo, rule: PivotRule::MaxDegree, rng: 0 }.sigma1(g)
}

/// σ1 with an explicit pivot rule.
pub fn sigma1_with_rule(g: &Graph, rule: PivotRule) -> Count {
    let seed = match rule {
        PivotRule::Seeded(s) => s,
        _ => 0,
    };
    Eval { memo: &mut MemoTable::new(), rule, rng: seed }.sigma1(g)
}

/// σ0 with an explicit pivot rule.
pub fn sigma0_with_rule(g: &Graph, rule: PivotRule) -> Count {
    let seed = match rule {
        PivotRule::Seeded(s) => s,
        _ => 0,
    };
    Eval { memo: &mut MemoTable::new(), rule, rng: seed }.sigma0(g)
}

/// σ1 of the disjoint union without building it: a 1-nearly independent
/// subset of G ∪ H has its single edge in exactly one part, the trace on the
/// other part being independent, so
/// σ1(G ∪ H) = σ1(G)σ0(H) + σ0(G)σ1(H).
pub fn sigma1_union(g: &Graph, h: &Graph) -> Count {
    let mut memo = MemoTable::new();
    let (g1, g0) = (sigma1_memo(g, &mut memo), sigma0_memo(g, &mut memo));
    let (h1, h0) = (sigma1_memo(h, &mut memo), sigma0_memo(h, &mut memo));
    g1 * h0 + g0 * h1
}

struct Eval<'a> {
    memo: &'a mut MemoTable,
    rule: PivotRule,
    rng: u64,
}

impl Eval<'_> {
    fn pivot(&mut self, g: &Graph) -> usize {
        match self.rule {
            PivotRule::MaxDegree => g.max_degree_vertex().expect("nonempty graph"),
            PivotRule::MinLabel => 0,
            PivotRule::Seeded(_) => {
                // splitmix64 step
                self.rng = self.rng.wrapping_add(0x9e37_79b9_7f4a_7c15);
                let mut z = self.rng;
                z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
                z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
                z ^= z >> 31;
                (z % g.vertex_count() as u64) as usize
            }
        }
    }

    fn sigma0(&mut self, g: &Graph) -> Count {
        let n = g.vertex_count();
        if n == 0 {
            return Count::ONE;
        }
        if g.edge_count() == 0 {
            return Count::pow2(n as u32);
        }
        if let Some(hit) = self.memo.entries.get(g.adjacency()).and_then(|e| e.s0) {
            return hit;
        }
        let comps = g.connected_components();
        let value = if comps.len() > 1 {
            comps
                .iter()
                .map(|&c| self.sigma0(&g.induced(c)))
                .fold(Count::ONE, Mul::mul)
        } else {
            let v = self.pivot(g);
            self.sigma0(&g.delete_vertex(v)) + self.sigma0(&g.delete_vertices(g.closed_neighborhood(v)))
        };
        self.memo
            .entries
            .entry(g.adjacency().to_vec())
            .or_default()
            .s0 = Some(value);
        value
    }

    fn sigma1(&mut self, g: &Graph) -> Count {
        if g.edge_count() == 0 {
            return Count::ZERO;
        }
        if let Some(hit) = self.memo.entries.get(g.adjacency()).and_then(|e| e.s1) {
            return hit;
        }
        let comps = g.connected_components();
        let value = if comps.len() > 1 {
            // union rule: the edge lives in one component, the rest is independent
            let parts: Vec<Graph> = comps.iter().map(|&c| g.induced(c)).collect();
            let s0: Vec<Count> = parts.iter().map(|p| self.sigma0(p)).collect();
            let mut total = Count::ZERO;
            for (i, part) in parts.iter().enumerate() {
                let others = s0
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &c)| c)
                    .fold(Count::ONE, Mul::mul);
                total += self.sigma1(part) * others;
            }
            total
        } else {
            let v = self.pivot(g);
            let without_v = self.sigma1(&g.delete_vertex(v));
            let v_alone = self.sigma1(&g.delete_vertices(g.closed_neighborhood(v)));
            let mut v_in_edge = Count::ZERO;
            for u in g.neighbors(v).iter() {
                let both = g.closed_neighborhood(u).union(g.closed_neighborhood(v));
                v_in_edge += self.sigma0(&g.delete_vertices(both));
            }
            without_v + v_alone + v_in_edge
        };
        self.memo
            .entries
            .entry(g.adjacency().to_vec())
            .or_default()
            .s1 = Some(value);
        value
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;

    fn fam(spec: FamilySpec) -> Graph {
        spec.construct().unwrap()
    }

    fn k(n: usize) -> Graph {
        fam(FamilySpec::Complete { n })
    }

    fn path(n: usize) -> Graph {
        fam(FamilySpec::Path { n })
    }

    fn cycle(n: usize) -> Graph {
        fam(FamilySpec::Cycle { n })
    }

    #[test]
    fn brute_force_spot_values() {
        assert_eq!(sigma_k_brute(&k(3), 1).unwrap(), Count::new(3));
        assert_eq!(sigma_k_brute(&path(4), 1).unwrap(), Count::new(5));
        let edgeless5 = Graph::edgeless(5).unwrap();
        assert_eq!(sigma_k_brute(&edgeless5, 1).unwrap(), Count::ZERO);
        let two_k2 = fam(FamilySpec::MatchingPlusIsolated { pairs: 2, isolated: 0 });
        assert_eq!(sigma_k_brute(&two_k2, 1).unwrap(), Count::new(6));
        assert_eq!(sigma_k_brute(&k(4), 0).unwrap(), Count::new(5));
    }

    #[test]
    fn brute_force_guard() {
        let g = Graph::edgeless(26).unwrap();
        assert_eq!(
            sigma_k_brute(&g, 0),
            Err(SigmaError::AboveGuard { order: 26, guard: 25 })
        );
        assert!(sigma_k_brute_with_guard(&g, 0, 26).is_ok());
    }

    #[test]
    fn sigma0_values() {
        assert_eq!(sigma0(&path(4)), Count::new(8));
        for n in 1..=6 {
            assert_eq!(sigma0(&k(n)), Count::new(n as u128 + 1));
        }
        assert_eq!(sigma0(&Graph::empty()), Count::ONE);
        assert_eq!(sigma0(&cycle(5)), Count::new(11));
    }

    #[test]
    fn sigma1_values() {
        assert_eq!(sigma1(&path(3)), Count::new(2));
        let three_k2 = fam(FamilySpec::MatchingPlusIsolated { pairs: 3, isolated: 0 });
        assert_eq!(sigma1(&three_k2), Count::new(27));
        let c3c4 = cycle(3).disjoint_union(&cycle(4)).unwrap();
        assert_eq!(sigma1(&c3c4), Count::new(37));
        // n-1 + 2^(n-3) at n = 6
        let u6 = fam(FamilySpec::UnicyclicStar { n: 6 });
        assert_eq!(sigma1(&u6), Count::new(13));
        assert_eq!(sigma1(&Graph::empty()), Count::ZERO);
    }

    #[test]
    fn sigma1_union_rule() {
        let k2 = k(2);
        assert_eq!(sigma1_union(&k2, &k2), Count::new(6));
        let c4 = cycle(4);
        assert_eq!(sigma1_union(&c4, &c4), Count::new(56));
        // joining with K1-bar doubles sigma1
        let g = path(5);
        let one = Graph::edgeless(1).unwrap();
        assert_eq!(sigma1_union(&g, &one), sigma1(&g) + sigma1(&g));
        // and it matches the union built explicitly
        let built = c4.disjoint_union(&cycle(5)).unwrap();
        assert_eq!(sigma1_union(&c4, &cycle(5)), sigma1(&built));
    }

    #[test]
    fn recursion_matches_brute_force_on_samples() {
        let samples = [
            path(6),
            cycle(7),
            k(5),
            fam(FamilySpec::Wheel { n: 6 }),
            fam(FamilySpec::Broom { n: 7, k: 3 }),
            fam(FamilySpec::Tadpole { n: 8, k: 3 }),
            path(3).disjoint_union(&cycle(4)).unwrap(),
        ];
        for g in &samples {
            assert_eq!(sigma0(g), sigma_k_brute(g, 0).unwrap());
            assert_eq!(sigma1(g), sigma_k_brute(g, 1).unwrap());
        }
    }

    #[test]
    fn pivot_rules_agree() {
        let samples = [
            cycle(6),
            fam(FamilySpec::Lollipop { n: 7, k: 3 }),
            path(2).disjoint_union(&k(4)).unwrap(),
        ];
        for g in &samples {
            let reference = sigma1(g);
            assert_eq!(sigma1_with_rule(g, PivotRule::MinLabel), reference);
            for seed in 0..5 {
                assert_eq!(sigma1_with_rule(g, PivotRule::Seeded(seed)), reference);
            }
        }
    }

    #[test]
    fn edge_removal_can_move_sigma1_either_way() {
        // K3 minus an edge drops from 3 to 2
        assert_eq!(sigma1(&k(3)), Count::new(3));
        assert_eq!(sigma1(&path(3)), Count::new(2));
        // P3 minus an edge stays at 2
        let k2_k1 = fam(FamilySpec::MatchingPlusIsolated { pairs: 1, isolated: 1 });
        assert_eq!(sigma1(&k2_k1), Count::new(2));
        // P4 minus its middle edge rises from 5 to 6
        assert_eq!(sigma1(&path(4)), Count::new(5));
        let two_k2 = fam(FamilySpec::MatchingPlusIsolated { pairs: 2, isolated: 0 });
        assert_eq!(sigma1(&two_k2), Count::new(6));
    }

    #[test]
    fn cycle_union_values_against_oracle() {
        // frozen by the subset-enumeration oracle, one pair per order 7..=10
        let cases = [
            ((3, 4), 37u128),
            ((4, 4), 56),
            ((3, 5), 73),
            ((4, 5), 114),
            ((3, 6), 126),
            ((4, 6), 198),
            ((5, 5), 220),
        ];
        for ((a, b), want) in cases {
            let g = cycle(a).disjoint_union(&cycle(b)).unwrap();
            assert_eq!(sigma1(&g), Count::new(want), "C{a} u C{b}");
            assert_eq!(sigma_k_brute(&g, 1).unwrap(), Count::new(want), "C{a} u C{b} oracle");
        }
    }

    #[test]
    fn histogram_sums_to_power_of_two() {
        for g in [path(5), cycle(6), k(4)] {
            let hist = sigma_histogram(&g).unwrap();
            let total: Count = hist.iter().copied().sum();
            assert_eq!(total, Count::pow2(g.vertex_count() as u32));
            assert_eq!(hist[0], sigma0(&g));
            assert_eq!(hist[1], sigma1(&g));
        }
    }

    #[test]
    fn memo_is_shared_across_calls() {
        let mut memo = MemoTable::new();
        let g = cycle(8);
        let first = sigma1_memo(&g, &mut memo);
        let entries = memo.len();
        assert!(entries > 0);
        let second = sigma1_memo(&g, &mut memo);
        assert_eq!(first, second);
        assert_eq!(memo.len(), entries);
    }

    #[test]
    fn count_arithmetic() {
        assert_eq!(Count::new(3) + Count::new(4), Count::new(7));
        assert_eq!(Count::new(3) * Count::new(4), Count::new(12));
        assert_eq!(Count::pow2(10), Count::new(1024));
        assert_eq!(Count::new(5).checked_sub(Count::new(7)), None);
        assert_eq!(format!("{}", Count::new(42)), "42");
    }

    #[test]
    #[should_panic(expected = "count overflow")]
    fn count_overflow_panics() {
        let _ = Count::new(u128::MAX) + Count::ONE;
    }
}
