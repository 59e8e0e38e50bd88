//! Mechanical verification of the two extremal bounds on sigma1.
//!
//!     cargo run --release -p nearly-independent --example extremal_bounds

use nearly_independent::{
    extremal::max_bound_equality_specs, sigma1, verify_max_bound, verify_min_bound, Count,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // lower bound: sigma1 >= m for connected graphs, equality on good graphs
    let report = verify_min_bound(6)?;
    print!("{}", report.render_human());
    assert!(report.passed());

    // upper bound: sigma1 <= 27/64 * 2^n, equality on 3K2 and 4K2 plus
    // isolated vertices
    let report = verify_max_bound(&[6, 7, 8])?;
    print!("{}", report.render_human());
    assert!(report.passed());

    println!("\nclaimed maximizers and their sigma1:");
    for n in 6..=8 {
        let bound = Count::new(27) * Count::pow2(n as u32 - 6);
        for spec in max_bound_equality_specs(n) {
            let value = sigma1(&spec.construct()?);
            println!("  n = {n}: {spec:<14} sigma1 = {value} (bound {bound})");
            assert_eq!(value, bound);
        }
    }
    Ok(())
}
