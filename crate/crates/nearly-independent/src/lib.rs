//! Exact counting of k-nearly independent vertex subsets of small graphs.
//!
//! A vertex subset is k-nearly independent when it induces exactly k edges;
//! for k = 0 these are the independent sets counted by the
//! Merrifield-Simmons index, and σ1 counts the subsets inducing exactly one
//! edge. The crate provides:
//!
//! * [`Graph`]: immutable bitmask graphs on up to 64 vertices, with
//!   constructors for the named parametric families ([`FamilySpec`]) and
//!   graph6 I/O ([`graph6`]);
//! * [`sigma_k_brute`] as the subset-enumeration oracle, and [`sigma0`] /
//!   [`sigma1`] via memoized vertex-deletion recursions;
//! * [`closed_forms`]: exact integer formulas for σ1 of paths, cycles,
//!   wheels, brooms, lollipops, tadpoles and more, with golden-ratio
//!   expressions realized as Fibonacci/Lucas recurrences;
//! * [`good`]: good edges and good graphs (σ1 meets its lower bound exactly
//!   on these) and the join-generated family they form;
//! * [`extremal`]: isomorph-free enumeration of small graphs, σ1
//!   distribution tables, and mechanical verification of the extremal
//!   bounds.
//!
//! ```
//! use nearly_independent::{sigma1, Count, FamilySpec};
//!
//! let p4 = FamilySpec::Path { n: 4 }.construct()?;
//! assert_eq!(sigma1(&p4), Count::new(5));
//! # Ok::<(), nearly_independent::FamilyError>(())
//! ```
//!
//! Runnable walkthroughs live in the `examples/` directory; the thin
//! `sigma1` binary exposes the same functionality on the command line.

pub mod canon;
pub mod closed_forms;
pub mod enumerate;
pub mod extremal;
pub mod family;
pub mod good;
pub mod graph;
pub mod graph6;
pub mod report;
pub mod sigma;

pub use canon::{canonical_code, canonical_form, CanonError, CanonicalCode};
pub use closed_forms::{
    sigma0_path, sigma1_family, sigma1_path, sigma1_path_by_edge_sum, ClosedFormError, PathCounts,
};
pub use enumerate::{enumerate_codes, enumerate_graphs, EnumerateError, GraphFilter};
pub use extremal::{
    sigma1_distribution, verify_max_bound, verify_min_bound, ExtremalError, SigmaDistribution,
};
pub use family::{FamilyError, FamilySpec};
pub use good::{
    generate_h, goodness, is_good_edge, verify_h_characterization, GoodError, GoodnessReport,
    HFamily,
};
pub use graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
pub use report::{Check, CheckStatus, VerifyReport};
pub use sigma::{
    sigma0, sigma0_memo, sigma1, sigma1_memo, sigma1_union, sigma1_with_rule, sigma_histogram,
    sigma_k_brute, sigma_k_brute_with_guard, Count, MemoTable, PivotRule, SigmaError,
    BRUTE_FORCE_GUARD,
};
