//! Build graphs three ways and count their k-nearly independent subsets.
//!
//!     cargo run --release -p nearly-independent --example compute_sigma

use nearly_independent::{
    graph6, sigma0, sigma1, sigma_histogram, sigma_k_brute, FamilySpec, Graph,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // from an explicit edge list: the bowtie, two triangles sharing a vertex
    let bowtie = Graph::build(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])?;
    println!("bowtie: n = {}, m = {}", bowtie.vertex_count(), bowtie.edge_count());
    println!("  sigma0 = {}", sigma0(&bowtie));
    println!("  sigma1 = {}", sigma1(&bowtie));

    // from a family spec
    let broom = FamilySpec::Broom { n: 7, k: 3 }.construct()?;
    println!("broom:7:3: sigma1 = {}", sigma1(&broom));

    // from a graph6 string (this one is the 4-cycle)
    let c4 = graph6::parse("Cr")?;
    println!("graph6 \"Cr\": sigma1 = {}", sigma1(&c4));

    // sigma_k for every k at once: the histogram over all 2^n subsets
    let wheel = FamilySpec::Wheel { n: 6 }.construct()?;
    let hist = sigma_histogram(&wheel)?;
    println!("wheel:6 histogram (k: sigma_k):");
    for (k, count) in hist.iter().enumerate() {
        if count.value() > 0 {
            println!("  {k:>2}: {count}");
        }
    }
    let total: u128 = hist.iter().map(|c| c.value()).sum();
    println!("  total {total} = 2^{}", wheel.vertex_count());

    // the recursion always agrees with the brute-force oracle
    for g in [&bowtie, &broom, &c4] {
        assert_eq!(sigma1(g), sigma_k_brute(g, 1)?);
    }
    println!("recursion and brute force agree on all examples");
    Ok(())
}
