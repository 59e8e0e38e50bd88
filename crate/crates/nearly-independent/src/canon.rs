//! Canonical codes for small graphs.
//!
//! The code is the lexicographically smallest upper-triangle bit string of
//! the adjacency matrix over the admissible relabelings, where a relabeling
//! is admissible when it lists the classes of the iterated degree partition
//! in class order. Restricting to admissible relabelings is sound because
//! the partition is an isomorphism invariant: two graphs receive equal codes
//! exactly when they are isomorphic. Pair bits are taken column by column,
//! (0,1), (0,2), (1,2), (0,3), ..., the same order graph6 uses.

use thiserror::Error;

use crate::graph::Graph;

/// Orders above this give permutation searches too large to be worthwhile.
pub const CANONICAL_GUARD: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CanonError {
    #[error("order {order} exceeds the canonicalization guard {CANONICAL_GUARD}")]
    AboveGuard { order: usize },
}

/// Canonical encoding of a graph of order at most 10; equal codes iff
/// isomorphic. Ordering is by (order, bit string).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    n: u8,
    bits: u64,
}

impl CanonicalCode {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Upper-triangle bits under the canonical labeling; pair p of C(n,2)
    /// sits at position C(n,2)-1-p so that integer order is lexicographic.
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Header byte (the order) followed by the packed bit string.
    pub fn to_bytes(&self) -> Vec<u8> {
        let pairs = pair_count(self.n as usize);
        let mut out = Vec::with_capacity(1 + pairs.div_ceil(8));
        out.push(self.n);
        let mut acc = 0u8;
        let mut filled = 0;
        for p in 0..pairs {
            let bit = (self.bits >> (pairs - 1 - p)) & 1;
            acc = (acc << 1) | bit as u8;
            filled += 1;
            if filled == 8 {
                out.push(acc);
                acc = 0;
                filled = 0;
            }
        }
        if filled > 0 {
            out.push(acc << (8 - filled));
        }
        out
    }

    /// The canonical representative graph this code describes.
    pub fn to_graph(&self) -> Graph {
        let n = self.n as usize;
        let pairs = pair_count(n);
        let mut edges = Vec::new();
        let mut p = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (pairs - 1 - p) & 1 != 0 {
                    edges.push((i, j));
                }
                p += 1;
            }
        }
        Graph::build(n, &edges).expect("decoded code is a valid graph")
    }
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Computes the canonical code of `g` (order at most 10).
pub fn canonical_code(g: &Graph) -> Result<CanonicalCode, CanonError> {
    let n = g.vertex_count();
    if n > CANONICAL_GUARD {
        return Err(CanonError::AboveGuard { order: n });
    }
    if n < 2 {
        return Ok(CanonicalCode { n: n as u8, bits: 0 });
    }

    let classes = refine_partition(g);
    // position -> class, fixed by class sizes
    let mut class_of_position = Vec::with_capacity(n);
    for (c, members) in classes.iter().enumerate() {
        for _ in members {
            class_of_position.push(c);
        }
    }

    let twins = twin_classes(g);
    let mut search = Search {
        g,
        pairs: pair_count(n),
        class_of_position,
        classes,
        twins,
        placed: Vec::with_capacity(n),
        best: u64::MAX,
    };
    search.run(0, 0);
    Ok(CanonicalCode { n: n as u8, bits: search.best })
}

/// Canonical representative: `canonical_code(g)` decoded back to a graph.
pub fn canonical_form(g: &Graph) -> Result<Graph, CanonError> {
    Ok(canonical_code(g)?.to_graph())
}

/// Iterated degree partition: start from degrees, then repeatedly split
/// classes by the multiset of neighbor classes until stable. Classes come
/// out in a label-independent order.
fn refine_partition(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut color: Vec<usize> = {
        let mut degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        let mut sorted = degrees.clone();
        sorted.sort_unstable();
        sorted.dedup();
        degrees
            .drain(..)
            .map(|d| sorted.binary_search(&d).unwrap())
            .collect()
    };
    loop {
        let mut signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut neighbor_colors: Vec<usize> =
                    g.neighbors(v).iter().map(|u| color[u]).collect();
                neighbor_colors.sort_unstable();
                (color[v], neighbor_colors)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        let new_color: Vec<usize> = signatures
            .drain(..)
            .map(|sig| distinct.binary_search(&sig).unwrap())
            .collect();
        let stable = {
            let count = |c: &[usize]| {
                let mut u = c.to_vec();
                u.sort_unstable();
                u.dedup();
                u.len()
            };
            count(&new_color) == count(&color)
        };
        color = new_color;
        if stable {
            break;
        }
    }
    let class_count = color.iter().max().map_or(0, |&c| c + 1);
    let mut classes = vec![Vec::new(); class_count];
    for (v, &c) in color.iter().enumerate() {
        classes[c].push(v);
    }
    classes
}

/// Twin partition: u and v are twins when exchanging them is an
/// automorphism, i.e. their neighborhoods agree outside the pair.
fn twin_classes(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut class = (0..n).collect::<Vec<_>>();
    for u in 0..n {
        for v in (u + 1)..n {
            let mu = g.neighbors(u).bits() & !(1 << v) & !(1 << u);
            let mv = g.neighbors(v).bits() & !(1 << u) & !(1 << v);
            if mu == mv && class[v] == v {
                class[v] = class[u];
            }
        }
    }
    class
}

struct Search<'a> {
    g: &'a Graph,
    pairs: usize,
    class_of_position: Vec<usize>,
    classes: Vec<Vec<usize>>,
    twins: Vec<usize>,
    placed: Vec<usize>,
    best: u64,
}

impl Search<'_> {
    /// DFS over admissible placements; `acc` holds the first
    /// C(pos,2) bits of the candidate string.
    fn run(&mut self, pos: usize, acc: u64) {
        let n = self.g.vertex_count();
        if pos == n {
            if acc < self.best {
                self.best = acc;
            }
            return;
        }
        let class = self.class_of_position[pos];
        let candidates: Vec<usize> = self.classes[class]
            .iter()
            .copied()
            .filter(|v| !self.placed.contains(v))
            .collect();
        let mut tried_twins: Vec<usize> = Vec::new();
        for v in candidates {
            // twins generate identical subtrees, explore one representative
            if tried_twins.contains(&self.twins[v]) {
                continue;
            }
            tried_twins.push(self.twins[v]);

            let mut row = 0u64;
            for &u in self.placed.iter() {
                row = (row << 1) | u64::from(self.g.has_edge(u, v));
            }
            let next = (acc << pos) | row;
            let total_bits = pair_count(pos + 1);
            // lexicographic prune against the best full string found so far
            if self.best != u64::MAX && next > self.best >> (self.pairs - total_bits) {
                continue;
            }
            self.placed.push(v);
            self.run(pos + 1, next);
            self.placed.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;

    fn fam(spec: FamilySpec) -> Graph {
        spec.construct().unwrap()
    }

    #[test]
    fn relabeled_paths_share_a_code() {
        let a = Graph::build(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        // the same path traversed 2-0-3-1
        let b = Graph::build(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_code(&a).unwrap(), canonical_code(&b).unwrap());
    }

    #[test]
    fn different_graphs_get_different_codes() {
        let k3 = fam(FamilySpec::Complete { n: 3 });
        let p3 = fam(FamilySpec::Path { n: 3 });
        assert_ne!(canonical_code(&k3).unwrap(), canonical_code(&p3).unwrap());
        let c4 = fam(FamilySpec::Cycle { n: 4 });
        let star4 = fam(FamilySpec::Star { n: 4 });
        assert_ne!(canonical_code(&c4).unwrap(), canonical_code(&star4).unwrap());
    }

    #[test]
    fn code_survives_permutation() {
        let g = fam(FamilySpec::Tadpole { n: 7, k: 3 });
        let reference = canonical_code(&g).unwrap();
        let perms = [
            vec![6, 5, 4, 3, 2, 1, 0],
            vec![3, 0, 6, 1, 5, 2, 4],
            vec![1, 2, 3, 4, 5, 6, 0],
        ];
        for p in perms {
            assert_eq!(canonical_code(&g.permute(&p)).unwrap(), reference);
        }
    }

    #[test]
    fn canonical_form_is_stable() {
        for spec in [
            FamilySpec::Cycle { n: 6 },
            FamilySpec::Broom { n: 6, k: 3 },
            FamilySpec::CompleteBipartite { r: 2, s: 4 },
        ] {
            let g = fam(spec);
            let form = canonical_form(&g).unwrap();
            assert_eq!(canonical_code(&form).unwrap(), canonical_code(&g).unwrap());
            assert_eq!(form.degree_sequence(), g.degree_sequence());
        }
    }

    #[test]
    fn symmetric_graphs_are_fast_enough() {
        // regular and twin-heavy worst cases all run through the search
        for spec in [
            FamilySpec::Edgeless { n: 10 },
            FamilySpec::Complete { n: 10 },
            FamilySpec::Cycle { n: 10 },
            FamilySpec::CompleteBipartite { r: 5, s: 5 },
            FamilySpec::MatchingPlusIsolated { pairs: 5, isolated: 0 },
        ] {
            let g = fam(spec);
            let code = canonical_code(&g).unwrap();
            assert_eq!(code.to_graph().edge_count(), g.edge_count());
        }
    }

    #[test]
    fn guard_is_enforced() {
        let g = Graph::edgeless(11).unwrap();
        assert_eq!(canonical_code(&g), Err(CanonError::AboveGuard { order: 11 }));
    }

    #[test]
    fn bytes_round_trip_structure() {
        let g = fam(FamilySpec::Wheel { n: 6 });
        let code = canonical_code(&g).unwrap();
        let bytes = code.to_bytes();
        assert_eq!(bytes[0] as usize, 6);
        assert_eq!(bytes.len(), 1 + 15usize.div_ceil(8));
    }
}
