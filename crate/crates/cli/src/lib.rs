//! The `heapable` command line, as a library so it can run in-process.

use std::ffi::OsString;
use std::fmt::Display;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use heapable::greedy::{forest_signatures, GreedyTrace};
use heapable::hammersley::write_csv;
use heapable::io::{forest_to_json, parse_box_csv, parse_interval_csv, parse_permutation, parse_poset_json};
use heapable::oracle::{max_clique_intervals, oracle_k_width, oracle_max_heapable, oracle_width_antichain};
use heapable::{
    estimate_scaling, greedy_max_heapable_subset, greedy_partition_permutation, greedy_partition_sequence,
    greedy_partition_set, k_width, sweep_partition, Arity, ExactInterval, GreedyPartition, HeapForest, Rational,
    Scalar, SimConfig, SimMode,
};

pub mod crosscheck;

#[derive(Parser)]
#[command(name = "heapable", version, about = "Partitions of partial orders into k-ary chains")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact k-width of a poset given as JSON
    Kwidth {
        #[arg(long, value_parser = arity)]
        k: Arity,
        #[arg(long)]
        poset: PathBuf,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Greedy partition of an interval sequence (CSV, input order)
    IntervalsSeq(GreedyArgs),
    /// Greedy partition of an interval set (CSV)
    IntervalsSet(GreedyArgs),
    /// Largest k-heapable subset of an interval set (CSV)
    MaxHeapable(GreedyArgs),
    /// Partition of a permutation of 0..n into k-heapable subsequences
    Permutation(GreedyArgs),
    /// Sweep-line partition of boxes (CSV: lx,ly,ux,uy)
    Trapezoid {
        #[arg(long, value_parser = arity)]
        k: Arity,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Monte-Carlo estimate of the k-width of random intervals
    Simulate {
        #[arg(long, value_parser = arity)]
        k: Arity,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "seq", value_parser = mode)]
        mode: SimMode,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Exhaustive reference computations on small inputs
    Oracle {
        #[arg(long, value_enum)]
        what: OracleKind,
        #[arg(long, value_parser = arity, default_value = "1")]
        k: Arity,
        /// Poset JSON, for kwidth and antichain
        #[arg(long)]
        poset: Option<PathBuf>,
        /// Interval CSV, for maxheap and clique
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Random cross-checks between the greedy, sweep, flow and oracle solvers
    Crosscheck {
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct GreedyArgs {
    #[arg(long, value_parser = arity)]
    k: Arity,
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    witness: Option<PathBuf>,
    /// Print one line per inserted item
    #[arg(long)]
    trace: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleKind {
    Kwidth,
    Maxheap,
    Antichain,
    Clique,
}

fn arity(s: &str) -> Result<Arity, String> {
    let k: usize = s.parse().map_err(|_| format!("`{s}` is not a positive integer"))?;
    Arity::new(k).map_err(|e| e.to_string())
}

fn mode(s: &str) -> Result<SimMode, String> {
    s.parse()
}

enum Failure {
    Usage(String),
    Input(String),
    Violation(usize),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(format!("standard output: {e}"))
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Outcome {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// Prefixes a library error with the file it came from; parse errors
/// already carry their line number.
fn in_file(path: &Path) -> impl Fn(heapable::Error) -> Failure + '_ {
    move |e| Failure::Input(format!("{}: {e}", path.display()))
}

fn print_trace<T: Display>(out: &mut dyn Write, enabled: bool, trace: &GreedyTrace<T>) -> io::Result<()> {
    if enabled {
        write!(out, "{trace}")?;
    }
    Ok(())
}

fn write_witness(path: Option<&PathBuf>, forest: &HeapForest, k: Arity) -> Outcome {
    match path {
        Some(p) => write(p, &(forest_to_json(forest, k) + "\n")),
        None => Ok(()),
    }
}

fn join<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn signature_line<T: Scalar>(sig: &[T]) -> String {
    format!("[{}]", sig.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
}

/// Shared body of `intervals-seq` and `intervals-set`: trace, one
/// signature line per chain, then the chain count.
fn interval_partition(
    out: &mut dyn Write,
    a: &GreedyArgs,
    solve: fn(&[ExactInterval], Arity) -> GreedyPartition<Rational>,
) -> Outcome {
    let items = parse_interval_csv(&read(&a.input)?).map_err(in_file(&a.input))?;
    let g = solve(&items, a.k);
    print_trace(out, a.trace, &g.trace)?;
    for sig in forest_signatures(&items, &g.forest, a.k) {
        writeln!(out, "chain {}", signature_line(&sig.0))?;
    }
    write_witness(a.witness.as_ref(), &g.forest, a.k)?;
    writeln!(out, "{}", g.count)?;
    Ok(())
}

fn run(cli: Cli, out: &mut dyn Write) -> Outcome {
    match cli.command {
        Command::Kwidth { k, poset, witness } => {
            let p = parse_poset_json(&read(&poset)?).map_err(in_file(&poset))?;
            let w = k_width(&p, k);
            write_witness(witness.as_ref(), &w.forest, k)?;
            writeln!(out, "matching {}", w.matching.len())?;
            writeln!(out, "{}", w.count)?;
        }
        Command::IntervalsSeq(a) => interval_partition(out, &a, greedy_partition_sequence)?,
        Command::IntervalsSet(a) => interval_partition(out, &a, greedy_partition_set)?,
        Command::MaxHeapable(a) => {
            let items = parse_interval_csv(&read(&a.input)?).map_err(in_file(&a.input))?;
            let g = greedy_max_heapable_subset(&items, a.k);
            print_trace(out, a.trace, &g.trace)?;
            if let Some(path) = &a.witness {
                let mut doc: serde_json::Value =
                    serde_json::from_str(&forest_to_json(&g.forest, a.k)).expect("valid json");
                doc["subset"] = serde_json::json!(g.subset);
                write(path, &(serde_json::to_string_pretty(&doc).expect("json") + "\n"))?;
            }
            writeln!(out, "subset {}", join(&g.subset))?;
            writeln!(out, "{}", g.subset.len())?;
        }
        Command::Permutation(a) => {
            let perm = parse_permutation(&read(&a.input)?).map_err(in_file(&a.input))?;
            let g = greedy_partition_permutation(&perm, a.k).map_err(in_file(&a.input))?;
            print_trace(out, a.trace, &g.trace)?;
            write_witness(a.witness.as_ref(), &g.forest, a.k)?;
            writeln!(out, "{}", g.count)?;
        }
        Command::Trapezoid { k, input, witness } => {
            let boxes = parse_box_csv(&read(&input)?).map_err(in_file(&input))?;
            let s = sweep_partition(&boxes, k);
            write_witness(witness.as_ref(), &s.forest, k)?;
            writeln!(out, "{}", s.count)?;
        }
        Command::Simulate {
            k,
            n,
            trials,
            seed,
            mode,
            csv,
        } => {
            let config = SimConfig {
                n: n as usize,
                k,
                trials: trials as usize,
                seed,
                mode,
            };
            let stats = estimate_scaling(&config);
            if let Some(path) = &csv {
                let mut buf = Vec::new();
                write_csv(&mut buf, &config, &stats).expect("in-memory write");
                write(path, &String::from_utf8(buf).expect("utf-8"))?;
            }
            writeln!(out, "n={n} k={k} mode={} trials={trials} seed={seed}", mode.as_str())?;
            writeln!(out, "mean {:.6} stderr {:.6}", stats.mean, stats.stderr)?;
            writeln!(out, "{:.6}", stats.normalized)?;
        }
        Command::Oracle { what, k, poset, input } => {
            let need =
                |p: Option<PathBuf>, flag: &str| p.ok_or_else(|| Failure::Usage(format!("--what needs --{flag} FILE")));
            let value = match what {
                OracleKind::Kwidth | OracleKind::Antichain => {
                    let path = need(poset, "poset")?;
                    let p = parse_poset_json(&read(&path)?).map_err(in_file(&path))?;
                    match what {
                        OracleKind::Kwidth => oracle_k_width(&p, k),
                        _ => oracle_width_antichain(&p),
                    }
                    .map_err(in_file(&path))?
                }
                OracleKind::Maxheap | OracleKind::Clique => {
                    let path = need(input, "input")?;
                    let items = parse_interval_csv(&read(&path)?).map_err(in_file(&path))?;
                    match what {
                        OracleKind::Maxheap => oracle_max_heapable(&items, k).map_err(in_file(&path))?,
                        _ => max_clique_intervals(&items),
                    }
                }
            };
            writeln!(out, "{value}")?;
        }
        Command::Crosscheck { trials, seed } => {
            let report = crosscheck::run(trials, seed);
            for line in &report.lines {
                writeln!(out, "{line}")?;
            }
            writeln!(out, "{}", report.mismatches)?;
            if report.mismatches > 0 {
                return Err(Failure::Violation(report.mismatches));
            }
        }
    }
    Ok(())
}

/// Runs one invocation; returns the process exit status.
pub fn execute<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    1
                }
            };
        }
    };
    let (code, msg) = match run(cli, out) {
        Ok(()) => return 0,
        Err(Failure::Usage(msg)) => (1, msg),
        Err(Failure::Input(msg)) => (2, msg),
        Err(Failure::Violation(count)) => (3, format!("{count} cross-check mismatches")),
    };
    let _ = writeln!(err, "error: {msg}");
    code
}
