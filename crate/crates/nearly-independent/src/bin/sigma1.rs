//! Thin command-line front end: compute sigma_k, verify the structural and
//! extremal results, and reproduce the small-order distribution tables.

use std::io::BufRead;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use nearly_independent::{
    enumerate, extremal, good, graph6, report::VerifyReport, sigma, sigma0, sigma1, sigma1_family,
    sigma1_path, sigma1_path_by_edge_sum, sigma_k_brute_with_guard, FamilySpec, Graph, GraphFilter,
};

#[derive(Parser)]
#[command(
    name = "sigma1",
    version,
    about = "Count k-nearly independent vertex subsets and verify their extremal theory"
)]
struct Cli {
    /// Worker threads for enumeration-heavy commands (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Table,
    Json,
    Tsv,
}

#[derive(Args)]
#[group(multiple = false)]
struct GraphInput {
    /// A single graph6 string
    #[arg(long)]
    graph6: Option<String>,
    /// A family spec such as path:4, broom:7:3, matching:3:2
    #[arg(long)]
    family: Option<String>,
    /// File with one graph6 string per line
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute sigma_k for one or more graphs (stdin when no input is given)
    Compute {
        #[command(flatten)]
        input: GraphInput,
        /// Which sigma_k to compute
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Override the brute-force order guard used for k >= 2
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run a verification suite and report violations
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Largest order to cover (suite-specific default)
        #[arg(long)]
        max_n: Option<usize>,
        /// Restrict max-bound to a single order (6, 7 or 8)
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print the sigma1 distribution over all isomorphism classes of order n
    Table {
        #[arg(long)]
        n: usize,
        /// Restrict to connected classes
        #[arg(long)]
        connected: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    /// Closed formulas against the recursion and the brute-force oracle
    ClosedForms,
    /// Recursion against the brute-force oracle over all small graphs
    Recursion,
    /// sigma1 >= m on connected graphs, equality exactly on good graphs
    MinBound,
    /// sigma1 <= 27*2^(n-6) with the exact equality sets
    MaxBound,
    /// Generated family H against the goodness filter
    HFamily,
}

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Writes to stdout, exiting quietly if the consumer closed the pipe.
fn emit_output(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if out.write_all(text.as_bytes()).is_err() || out.flush().is_err() {
        std::process::exit(0);
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: cannot configure {jobs} worker threads: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let outcome = match cli.command {
        Command::Compute { input, k, max_n, format } => cmd_compute(input, k, max_n, format),
        Command::Verify { suite, max_n, n, format } => cmd_verify(suite, max_n, n, format),
        Command::Table { n, connected, format } => cmd_table(n, connected, format),
    };
    match outcome {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

/// Labelled input graphs from whichever source was selected.
fn read_graphs(input: GraphInput) -> Result<Vec<(String, Graph)>, String> {
    if let Some(text) = input.graph6 {
        let g = graph6::parse(&text).map_err(|e| e.to_string())?;
        return Ok(vec![(text, g)]);
    }
    if let Some(spec_text) = input.family {
        let spec: FamilySpec = spec_text.parse().map_err(|e| format!("{e}"))?;
        let g = spec.construct().map_err(|e| e.to_string())?;
        return Ok(vec![(spec_text, g)]);
    }
    let lines: Vec<String> = if let Some(path) = input.file {
        let content = std::fs::read_to_string(&path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        content.lines().map(str::to_string).collect()
    } else {
        std::io::stdin()
            .lock()
            .lines()
            .collect::<Result<_, _>>()
            .map_err(|e| format!("cannot read stdin: {e}"))?
    };
    lines
        .into_iter()
        .map(|l| l.trim().to_string())
        .filter(|l| !l.is_empty())
        .map(|l| {
            let g = graph6::parse(&l).map_err(|e| format!("{l:?}: {e}"))?;
            Ok((l, g))
        })
        .collect()
}

fn cmd_compute(
    input: GraphInput,
    k: usize,
    max_n: Option<usize>,
    format: Format,
) -> Result<ExitCode, String> {
    let graphs = read_graphs(input)?;
    let guard = max_n.unwrap_or(sigma::BRUTE_FORCE_GUARD);
    let mut rows = Vec::with_capacity(graphs.len());
    for (label, g) in &graphs {
        let value = match k {
            0 => sigma0(g),
            1 => sigma1(g),
            _ => sigma_k_brute_with_guard(g, k, guard).map_err(|e| e.to_string())?,
        };
        rows.push((label.clone(), value));
    }
    let mut out = String::new();
    match format {
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|(label, value)| {
                    serde_json::json!({ "input": label, "k": k, "sigma": value.value() })
                })
                .collect();
            out.push_str(&serde_json::to_string_pretty(&items).unwrap());
            out.push('\n');
        }
        Format::Tsv => {
            for (label, value) in &rows {
                out.push_str(&format!("{label}\t{value}\n"));
            }
        }
        Format::Table => {
            if rows.len() == 1 {
                out.push_str(&format!("{}\n", rows[0].1));
            } else {
                for (label, value) in &rows {
                    out.push_str(&format!("{label}\t{value}\n"));
                }
            }
        }
    }
    emit_output(&out);
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    suite: Suite,
    max_n: Option<usize>,
    n: Option<usize>,
    format: Format,
) -> Result<ExitCode, String> {
    let report = match suite {
        Suite::ClosedForms => verify_closed_forms(max_n.unwrap_or(14))?,
        Suite::Recursion => verify_recursion(max_n.unwrap_or(7))?,
        Suite::MinBound => {
            extremal::verify_min_bound(max_n.unwrap_or(7)).map_err(|e| e.to_string())?
        }
        Suite::MaxBound => {
            let orders: Vec<usize> = match n {
                Some(n) => vec![n],
                None => vec![6, 7, 8],
            };
            extremal::verify_max_bound(&orders).map_err(|e| e.to_string())?
        }
        Suite::HFamily => verify_h_family(max_n.unwrap_or(7))?,
    };
    match format {
        Format::Json => {
            emit_output(&format!("{}\n", serde_json::to_string_pretty(&report).unwrap()))
        }
        Format::Table | Format::Tsv => emit_output(&report.render_human()),
    }
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VIOLATION)
    })
}

/// Every family instance of order <= max_n: the closed formula must agree
/// with the recursion, plus the two independent path routes up to n = 40.
fn verify_closed_forms(max_n: usize) -> Result<VerifyReport, String> {
    let mut report = VerifyReport::new("closed-forms");
    for (name, specs) in family_instances(max_n) {
        let mut bad = Vec::new();
        for spec in specs {
            let formula = sigma1_family(&spec).map_err(|e| e.to_string())?;
            let g = spec.construct().map_err(|e| e.to_string())?;
            let recursion = sigma1(&g);
            if formula != recursion {
                bad.push(format!(
                    "{spec}: formula {formula} != recursion {recursion} ({})",
                    graph6::emit(&g)
                ));
            }
        }
        report.push(format!("{name} formula vs recursion (order <= {max_n})"), bad);
    }
    let mut conv_bad = Vec::new();
    for t in 1..=40i64 {
        let direct = sigma1_path(t).map_err(|e| e.to_string())?;
        let conv = sigma1_path_by_edge_sum(t).map_err(|e| e.to_string())?;
        if direct != conv {
            conv_bad.push(format!("path:{t}: closed form {direct} != edge-sum {conv}"));
        }
    }
    report.push("path sigma1 via Lucas/Fibonacci vs edge-sum convolution (n <= 40)", conv_bad);
    Ok(report)
}

/// All valid instances of each family with order <= max_n.
fn family_instances(max_n: usize) -> Vec<(&'static str, Vec<FamilySpec>)> {
    vec![
        ("path", (1..=max_n).map(|n| FamilySpec::Path { n }).collect()),
        ("cycle", (3..=max_n).map(|n| FamilySpec::Cycle { n }).collect()),
        ("complete", (1..=max_n).map(|n| FamilySpec::Complete { n }).collect()),
        ("star", (1..=max_n).map(|n| FamilySpec::Star { n }).collect()),
        ("edgeless", (1..=max_n).map(|n| FamilySpec::Edgeless { n }).collect()),
        ("wheel", (4..=max_n).map(|n| FamilySpec::Wheel { n }).collect()),
        (
            "unicyclic-star",
            (3..=max_n).map(|n| FamilySpec::UnicyclicStar { n }).collect(),
        ),
        (
            "complete-bipartite",
            (1..=max_n)
                .flat_map(|r| (r..=max_n).map(move |s| (r, s)))
                .filter(|(r, s)| r + s <= max_n)
                .map(|(r, s)| FamilySpec::CompleteBipartite { r, s })
                .collect(),
        ),
        (
            "broom",
            (2..=max_n)
                .flat_map(|k| (k..=max_n).map(move |n| FamilySpec::Broom { n, k }))
                .collect(),
        ),
        (
            "lollipop",
            (2..=max_n)
                .flat_map(|k| (k..=max_n).map(move |n| FamilySpec::Lollipop { n, k }))
                .collect(),
        ),
        (
            "tadpole",
            (2..=max_n)
                .flat_map(|k| (k + 2..=max_n).map(move |n| FamilySpec::Tadpole { n, k }))
                .collect(),
        ),
        (
            "matching",
            (0..=max_n / 2)
                .flat_map(|pairs| {
                    (0..=(max_n - 2 * pairs))
                        .map(move |isolated| FamilySpec::MatchingPlusIsolated { pairs, isolated })
                })
                .collect(),
        ),
    ]
}

/// sigma0/sigma1 recursions against the subset-enumeration oracle over
/// every isomorphism class of order <= max_n.
fn verify_recursion(max_n: usize) -> Result<VerifyReport, String> {
    use rayon::prelude::*;
    let mut report = VerifyReport::new("recursion");
    for n in 1..=max_n {
        let graphs =
            enumerate::enumerate_graphs(n, GraphFilter::All).map_err(|e| e.to_string())?;
        let bad: Vec<String> = graphs
            .par_iter()
            .flat_map_iter(|g| {
                let mut bad = Vec::new();
                let brute0 = sigma::sigma_k_brute(g, 0).expect("order is under the brute guard");
                let brute1 = sigma::sigma_k_brute(g, 1).expect("order is under the brute guard");
                if sigma0(g) != brute0 {
                    bad.push(format!("{}: sigma0 recursion disagrees with oracle", graph6::emit(g)));
                }
                if sigma1(g) != brute1 {
                    bad.push(format!("{}: sigma1 recursion disagrees with oracle", graph6::emit(g)));
                }
                bad
            })
            .collect();
        report.push(format!("recursion vs oracle over all classes of order {n}"), bad);
    }
    Ok(report)
}

/// The generated family H against the goodness filter, order by order.
fn verify_h_family(max_n: usize) -> Result<VerifyReport, String> {
    let outcome = good::verify_h_characterization(max_n).map_err(|e| e.to_string())?;
    let mut report = VerifyReport::new("h-family");
    report.push(
        format!("generated members are good (order <= {max_n})"),
        outcome
            .generated_not_good
            .iter()
            .map(|c| format!("{}: generated but not good", graph6::emit(&c.to_graph())))
            .collect(),
    );
    report.push(
        format!("good graphs are generated (order <= {max_n})"),
        outcome
            .good_not_generated
            .iter()
            .map(|c| format!("{}: good but not generated", graph6::emit(&c.to_graph())))
            .collect(),
    );
    Ok(report)
}

fn cmd_table(n: usize, connected: bool, format: Format) -> Result<ExitCode, String> {
    let filter = if connected { GraphFilter::Connected } else { GraphFilter::All };
    let dist = extremal::sigma1_distribution(n, filter).map_err(|e| e.to_string())?;
    // rows ordered by (sigma1, canonical code)
    let mut entries: Vec<_> = dist.entries.iter().collect();
    entries.sort_by_key(|e| (e.sigma1, e.code));
    let mut out = String::new();
    match format {
        Format::Json => {
            let rows: Vec<serde_json::Value> = entries
                .iter()
                .map(|e| {
                    serde_json::json!({
                        "graph6": graph6::emit(&e.code.to_graph()),
                        "m": e.edges,
                        "sigma1": e.sigma1,
                    })
                })
                .collect();
            let doc = serde_json::json!({
                "n": n,
                "filter": filter.to_string(),
                "classes": rows,
            });
            out.push_str(&serde_json::to_string_pretty(&doc).unwrap());
            out.push('\n');
        }
        Format::Tsv => {
            out.push_str("graph6\tm\tsigma1\n");
            for e in entries {
                out.push_str(&format!(
                    "{}\t{}\t{}\n",
                    graph6::emit(&e.code.to_graph()),
                    e.edges,
                    e.sigma1
                ));
            }
        }
        Format::Table => {
            out.push_str(&format!("{:<12} {:>3} {:>8}\n", "graph6", "m", "sigma1"));
            for e in &entries {
                out.push_str(&format!(
                    "{:<12} {:>3} {:>8}\n",
                    graph6::emit(&e.code.to_graph()),
                    e.edges,
                    e.sigma1
                ));
            }
            let max = dist.max_sigma().map(|c| c.to_string()).unwrap_or_default();
            out.push_str(&format!("{} classes of order {n}, max sigma1 = {max}\n", dist.len()));
        }
    }
    emit_output(&out);
    Ok(ExitCode::SUCCESS)
}
