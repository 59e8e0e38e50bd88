//! Closed formulas for sigma1 of the named families, checked against the
//! recursion on the constructed graphs.
//!
//!     cargo run --release -p nearly-independent --example closed_formulas

use nearly_independent::{
    sigma0_path, sigma1, sigma1_family, sigma1_path, sigma1_path_by_edge_sum, FamilySpec,
    PathCounts,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("paths (t, sigma0, sigma1):");
    for t in 0..=12 {
        let counts = PathCounts::new(t)?;
        println!("  P_{t:<2} {:>6} {:>6}", counts.s0, counts.s1);
    }

    // two independent routes to sigma1 of a path
    for t in [10, 25, 40] {
        assert_eq!(sigma1_path(t)?, sigma1_path_by_edge_sum(t)?);
    }
    println!("Lucas/Fibonacci route matches the edge-sum convolution up to t = 40");

    // negative and zero indices follow the usual conventions
    assert_eq!(sigma0_path(-3)?.value(), 1);
    assert_eq!(sigma1_path(0)?.value(), 0);

    println!("\nfamily formulas vs the recursion:");
    let specs = [
        FamilySpec::Complete { n: 8 },
        FamilySpec::Cycle { n: 11 },
        FamilySpec::Star { n: 9 },
        FamilySpec::CompleteBipartite { r: 3, s: 5 },
        FamilySpec::Wheel { n: 9 },
        FamilySpec::UnicyclicStar { n: 8 },
        FamilySpec::Broom { n: 10, k: 4 },
        FamilySpec::Lollipop { n: 10, k: 4 },
        FamilySpec::Tadpole { n: 10, k: 4 },
        FamilySpec::MatchingPlusIsolated { pairs: 4, isolated: 2 },
    ];
    for spec in specs {
        let formula = sigma1_family(&spec)?;
        let recursive = sigma1(&spec.construct()?);
        assert_eq!(formula, recursive);
        println!("  {spec:<22} sigma1 = {formula}");
    }

    // closed forms stay exact far beyond brute-force range
    println!("\nlarge instances, exact integers:");
    for spec in [
        FamilySpec::Path { n: 64 },
        FamilySpec::Cycle { n: 64 },
        FamilySpec::Broom { n: 64, k: 30 },
    ] {
        println!("  {spec:<12} sigma1 = {}", sigma1_family(&spec)?);
    }
    Ok(())
}
