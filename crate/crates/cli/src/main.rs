use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use maxleaf_cli::format::{write_dot, write_graph, write_trace, write_tree};
use maxleaf_cli::{bench, load_graph, load_tree, write_output, CliError};
use maxleaf_core::approx::{approximate, approximate_any_root};
use maxleaf_core::exact::{maxleaf_exact_with_limit, DEFAULT_EXACT_LIMIT};
use maxleaf_core::gen::{Family, GenSpec};
use maxleaf_core::reduce::{decide, kernelize, KernelDecision};

#[derive(Parser)]
#[command(name = "maxleaf", version, about = "Rooted maximum leaf outbranching tools")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a generated instance.
    Gen {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.1)]
        prob: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Reduce an instance and report its size.
    Kernelize {
        graph: PathBuf,
        /// Reduced digraph (compacted ids, `# label` lines give originals).
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Is there an outbranching with at least k leaves?
    Decide {
        graph: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Constant-factor approximation with its report.
    Approx {
        graph: PathBuf,
        #[arg(long)]
        tree: Option<PathBuf>,
        /// Ignore the given root and try every vertex.
        #[arg(long)]
        all_roots: bool,
    },
    /// Exact optimum for small instances.
    Exact {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
        limit: usize,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Check a tree file against a graph file.
    Verify { graph: PathBuf, tree: PathBuf },
    /// Graphviz rendering, optionally highlighting a tree.
    Dot {
        graph: PathBuf,
        #[arg(long)]
        tree: Option<PathBuf>,
    },
    /// CSV of approximation against the exact optimum.
    Bench {
        #[arg(long, value_parser = parse_family, default_value = "random")]
        family: Family,
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.1)]
        prob: f64,
        #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
        limit: usize,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
        format!("unknown family {s:?}; expected one of {}", names.join(", "))
    })
}

fn save_tree(path: Option<&Path>, t: &maxleaf_core::Outbranching) -> Result<(), CliError> {
    match path {
        Some(p) => write_output(Some(p), &write_tree(t)),
        None => Ok(()),
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.cmd {
        Cmd::Gen { family, size, seed, prob, output } => {
            let d = GenSpec { family, size, seed, arc_probability: prob }.generate()?;
            write_output(output.as_deref(), &write_graph(&d))?;
        }
        Cmd::Kernelize { graph, output, trace } => {
            let d = load_graph(&graph)?;
            let k = kernelize(&d)?;
            println!("n={} m={}", d.vertex_count(), d.arc_count());
            println!("reduced_n={} reduced_m={}", k.reduced.vertex_count(), k.reduced.arc_count());
            println!("steps={}", k.trace.steps.len());
            if let Some(p) = output {
                write_output(Some(&p), &write_graph(&k.reduced))?;
            }
            if let Some(p) = trace {
                write_output(Some(&p), &write_trace(&k.trace))?;
            }
        }
        Cmd::Decide { graph, k, witness } => {
            let d = load_graph(&graph)?;
            match decide(&d, k)? {
                KernelDecision::True { witness: t, .. } => {
                    println!("TRUE leaves={}", t.leaf_count());
                    save_tree(witness.as_deref(), &t)?;
                }
                KernelDecision::False => println!("FALSE"),
                KernelDecision::Reduced(kernel) => {
                    println!("REDUCED n={} m={}", kernel.reduced.vertex_count(), kernel.reduced.arc_count());
                }
            }
        }
        Cmd::Approx { graph, tree, all_roots } => {
            let d = load_graph(&graph)?;
            let (t, rep) = if all_roots {
                let arcs: Vec<_> = d.arcs().collect();
                approximate_any_root(d.capacity(), &arcs)?
            } else {
                approximate(&d)?
            };
            println!("root={}", t.root());
            println!("{rep}");
            save_tree(tree.as_deref(), &t)?;
        }
        Cmd::Exact { graph, limit, witness } => {
            let d = load_graph(&graph)?;
            let res = maxleaf_exact_with_limit(&d, limit)?;
            println!("maxleaf={} explored={}", res.maxleaf, res.explored);
            save_tree(witness.as_deref(), &res.witness)?;
        }
        Cmd::Verify { graph, tree } => {
            let d = load_graph(&graph)?;
            let t = load_tree(&tree)?;
            match d.verify(&t) {
                Ok(leaves) => println!("valid leaves={leaves}"),
                Err(defect) => {
                    println!("invalid: {defect}");
                    return Ok(ExitCode::from(1));
                }
            }
        }
        Cmd::Dot { graph, tree } => {
            let d = load_graph(&graph)?;
            let t = tree.map(|p| load_tree(&p)).transpose()?;
            print!("{}", write_dot(&d, t.as_ref()));
        }
        Cmd::Bench { family, size, count, seed, prob, limit } => {
            let spec = GenSpec { family, size, seed, arc_probability: prob };
            let rows = bench::run(spec, count, limit)?;
            print!("{}", bench::to_csv(&rows));
            match bench::worst_ratio(&rows) {
                Some(w) => eprintln!("worst_ratio={w:.4}"),
                None => eprintln!("worst_ratio=n/a"),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
