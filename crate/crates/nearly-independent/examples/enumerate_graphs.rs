//! Isomorph-free enumeration of small graphs and the sigma1 distribution
//! tables over all classes of a given order.
//!
//!     cargo run --release -p nearly-independent --example enumerate_graphs

use nearly_independent::{
    enumerate_graphs, sigma1_distribution, Count, GraphFilter,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("isomorphism classes by order:");
    println!("{:>3} {:>8} {:>10}", "n", "all", "connected");
    for n in 1..=7 {
        let all = enumerate_graphs(n, GraphFilter::All)?.len();
        let connected = enumerate_graphs(n, GraphFilter::Connected)?.len();
        println!("{n:>3} {all:>8} {connected:>10}");
    }

    // classes with a fixed number of edges
    let with_three = enumerate_graphs(5, GraphFilter::Size(3))?;
    println!("\norder-5 classes with exactly 3 edges: {}", with_three.len());

    // the sigma1 distribution over all order-5 classes
    let dist = sigma1_distribution(5, GraphFilter::All)?;
    println!("\nsigma1 distribution at order 5 ({} classes):", dist.len());
    let values = dist.sigma_values();
    let mut line = String::new();
    for v in &values {
        line.push_str(&format!("{v} "));
    }
    println!("  {line}");
    println!("  max = {}", dist.max_sigma().unwrap());

    // which classes attain the maximum
    let top = dist.classes_with_value(dist.max_sigma().unwrap());
    for code in top {
        println!("  attained by {:?}", code.to_graph());
    }

    // machine-readable exports
    let small = sigma1_distribution(3, GraphFilter::All)?;
    println!("\nTSV export of the order-3 table:\n{}", small.to_tsv());
    assert_eq!(small.max_sigma(), Some(Count::new(3)));
    Ok(())
}
