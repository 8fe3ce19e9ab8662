use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use btdist::{
    distance_table, distance_table_cached, exact_distance, pair_distance, sort_permutation, three_bond_witness,
    toric_class_linearized, DistanceTable, Permutation,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

mod suites;

#[derive(Parser, Debug)]
#[command(name = "btdist", version, about = "Block-transposition distances on the symmetric group")]
struct Cli {
    /// Print a single-line JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact distance to the identity (n <= 12).
    Dist { perm: String },
    /// Exact distance between two permutations of equal size.
    Pair { perm: String, other: String },
    /// A verified sorting word, certified against floor((2n-2)/3) when n >= 9.
    Sort { perm: String },
    /// Number of linear bonds.
    Bonds { perm: String },
    /// The members of the toric class.
    Toric { perm: String },
    /// Two moves gaining at least three bonds on a toric relative.
    Witness { perm: String },
    /// Maximum distance over all permutations of size n (n <= 10).
    Diameter {
        n: usize,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Build the distance table for n and write it to a cache file.
    Table {
        n: usize,
        #[arg(long)]
        cache: PathBuf,
    },
    /// Number of permutations at each distance (n <= 10).
    Distribution {
        n: usize,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Run a verification suite; exit code 2 on the first failed check.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Shifting,
    Toric,
    Criteria,
    Witness,
    Metric,
    Sort,
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Internal(String),
}

impl From<btdist::Error> for CliError {
    fn from(e: btdist::Error) -> Self {
        if e.is_input_error() {
            CliError::Input(e.to_string())
        } else {
            CliError::Internal(e.to_string())
        }
    }
}

type CliResult<T = ()> = Result<T, CliError>;

fn parse(s: &str) -> CliResult<Permutation> {
    Ok(s.parse()?)
}

fn triple(cp: &btdist::CutPoints) -> [usize; 3] {
    cp.triple()
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("plain data serializes"));
}

#[derive(Serialize)]
struct DistOut<'a> {
    n: usize,
    perm: &'a Permutation,
    distance: usize,
}

#[derive(Serialize)]
struct PairOut<'a> {
    n: usize,
    perm: &'a Permutation,
    other: &'a Permutation,
    distance: usize,
}

#[derive(Serialize)]
struct SortOut<'a> {
    n: usize,
    perm: &'a Permutation,
    length: usize,
    word: Vec<[usize; 3]>,
    certified_bound: Option<usize>,
}

#[derive(Serialize)]
struct BondsOut<'a> {
    n: usize,
    perm: &'a Permutation,
    bonds: usize,
}

#[derive(Serialize)]
struct ToricOut<'a> {
    n: usize,
    perm: &'a Permutation,
    class: Vec<Permutation>,
}

#[derive(Serialize)]
struct WitnessOut<'a> {
    n: usize,
    perm: &'a Permutation,
    rho: &'a Permutation,
    r: usize,
    sigma: [usize; 3],
    tau: [usize; 3],
    placement: btdist::Placement,
    bonds: usize,
}

#[derive(Serialize)]
struct DiameterOut {
    n: usize,
    diameter: u8,
}

#[derive(Serialize)]
struct DistributionOut {
    n: usize,
    histogram: Vec<u64>,
}

fn table(n: usize, cache: Option<&Path>) -> CliResult<Arc<DistanceTable>> {
    Ok(match cache {
        Some(path) => distance_table_cached(n, path)?,
        None => distance_table(n)?,
    })
}

fn run(cli: Cli) -> CliResult {
    let json = cli.json;
    match cli.command {
        Command::Dist { perm } => {
            let pi = parse(&perm)?;
            let distance = exact_distance(&pi)?;
            if json {
                print_json(&DistOut { n: pi.n(), perm: &pi, distance });
            } else {
                println!("{distance}");
            }
        }
        Command::Pair { perm, other } => {
            let (pi, nu) = (parse(&perm)?, parse(&other)?);
            let distance = pair_distance(&pi, &nu)?;
            if json {
                print_json(&PairOut {
                    n: pi.n(),
                    perm: &pi,
                    other: &nu,
                    distance,
                });
            } else {
                println!("{distance}");
            }
        }
        Command::Sort { perm } => {
            let pi = parse(&perm)?;
            let sorted = sort_permutation(&pi)?;
            let word: Vec<[usize; 3]> = sorted.word.moves.iter().map(triple).collect();
            if json {
                print_json(&SortOut {
                    n: pi.n(),
                    perm: &pi,
                    length: sorted.len(),
                    word,
                    certified_bound: sorted.certified_bound,
                });
            } else {
                let moves: Vec<String> = sorted.word.moves.iter().map(ToString::to_string).collect();
                println!("{}", format!("word: {}", moves.join(" ")).trim_end());
                println!("length: {}", sorted.len());
                match sorted.certified_bound {
                    Some(b) => println!("certified bound: {b}"),
                    None => println!("certified bound: none"),
                }
            }
        }
        Command::Bonds { perm } => {
            let pi = parse(&perm)?;
            let bonds = pi.linear_bonds().count;
            if json {
                print_json(&BondsOut { n: pi.n(), perm: &pi, bonds });
            } else {
                println!("{bonds}");
            }
        }
        Command::Toric { perm } => {
            let pi = parse(&perm)?;
            let class: Vec<Permutation> = toric_class_linearized(&pi).into_iter().collect();
            if json {
                print_json(&ToricOut { n: pi.n(), perm: &pi, class });
            } else {
                for member in &class {
                    println!("{member}");
                }
            }
        }
        Command::Witness { perm } => {
            let pi = parse(&perm)?;
            let w = three_bond_witness(&pi)?;
            w.verify(&pi)?;
            if json {
                print_json(&WitnessOut {
                    n: pi.n(),
                    perm: &pi,
                    rho: &w.rho,
                    r: w.toric_r,
                    sigma: triple(&w.sigma),
                    tau: triple(&w.tau),
                    placement: w.placement,
                    bonds: w.achieved_bonds,
                });
            } else {
                println!("rho: {}", w.rho);
                println!("r: {}", w.toric_r);
                println!("sigma: {}", w.sigma);
                println!("tau: {}", w.tau);
                println!("placement: {}", w.placement.label());
                println!("bonds: {}", w.achieved_bonds);
                println!("route: {}", w.route);
            }
        }
        Command::Diameter { n, cache } => {
            let diameter = table(n, cache.as_deref())?.diameter();
            if json {
                print_json(&DiameterOut { n, diameter });
            } else {
                println!("{diameter}");
            }
        }
        Command::Table { n, cache } => {
            let t = table(n, Some(&cache))?;
            if json {
                print_json(&DiameterOut { n, diameter: t.diameter() });
            } else {
                println!("n = {n}: {} entries, diameter {}, cached at {}", t.distances().len(), t.diameter(), cache.display());
            }
        }
        Command::Distribution { n, cache } => {
            let histogram = table(n, cache.as_deref())?.histogram();
            if json {
                print_json(&DistributionOut { n, histogram });
            } else {
                for (d, count) in histogram.iter().enumerate() {
                    println!("{d}\t{count}");
                }
            }
        }
        Command::Verify { suite, max_n, seed } => {
            let summary = suites::run(suite, max_n, seed)?;
            println!("{summary}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("verification failure: {msg}");
            ExitCode::from(2)
        }
    }
}
