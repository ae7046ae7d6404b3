//! Command-line surface.  Standard output carries machine-readable data
//! only (TSV, JSONL, CSV, or JSON); progress and diagnostics go to
//! standard error.  Exit codes: 0 success, 1 verification failure,
//! 2 usage error.

use std::fs::File;
use std::io::BufWriter;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use erdos_straus::arith::{verify_raw, SpfTable};
use erdos_straus::error::Error;
use erdos_straus::family::{self, family_by_id, render_catalog_table};
use erdos_straus::solver;
use erdos_straus::survey;
use erdos_straus::tame;

#[derive(Parser)]
#[command(name = "erdos-straus", about = "Exact solver and survey tool for 4/n = 1/n1 + 1/n2 + 1/n3", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve 4/n for one n and print the triple with its derivation.
    Solve {
        n: u64,
        /// Emit the full derivation as JSON instead of TSV.
        #[arg(long)]
        json: bool,
    },
    /// Classify every m with 24m+1 prime up to a bound; JSONL output.
    Classify {
        #[arg(long = "max-m")]
        max_m: u64,
        #[arg(long, default_value_t = default_workers())]
        workers: usize,
        /// Write to a file instead of standard output.
        #[arg(long)]
        out: Option<String>,
    },
    /// Family catalog operations.
    Families {
        #[command(subcommand)]
        cmd: FamiliesCmd,
    },
    /// Tame/wild census and per-family coverage.
    Coverage {
        #[arg(long = "max-m")]
        max_m: u64,
        /// Also write the per-family table as CSV to this path.
        #[arg(long)]
        csv: Option<String>,
    },
    /// Check the identity 4/n = 1/n1 + 1/n2 + 1/n3 exactly.
    Verify { n: u64, n1: u64, n2: u64, n3: u64 },
    /// List every wild m (prime 24m+1, no tame certificate) up to a bound.
    Wild {
        #[arg(long = "max-m")]
        max_m: u64,
    },
    /// Audit the catalog against its published reference values.
    Reconcile {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum FamiliesCmd {
    /// Print the whole catalog as a TSV table.
    List,
    /// Instantiate one member from an explicit parameter assignment.
    Gen {
        id: String,
        #[command(flatten)]
        set: SetArgs,
    },
    /// Enumerate all members of a family with m up to a bound.
    Members {
        id: String,
        #[arg(long = "max-m")]
        max_m: u64,
    },
    /// Find every (family, assignment) producing a given m.
    Match { m: u64 },
}

#[derive(Args)]
struct SetArgs {
    /// Parameter assignment name=value; repeat for each parameter,
    /// multiplier included.
    #[arg(long = "set", value_name = "NAME=VALUE")]
    set: Vec<String>,
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |p| p.get())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Domain(_) | Error::Parse(_) | Error::UnknownFamily(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.cmd {
        Cmd::Solve { n, json } => {
            let d = solver::solve(n)?;
            if json {
                println!("{}", serde_json::to_string(&d).expect("serializable"));
            } else {
                let rules: Vec<String> = d.steps.iter().map(|r| format!("{r:?}")).collect();
                println!(
                    "{}\t{}\t{}\t{}\t{}",
                    d.n,
                    d.triple.n1,
                    d.triple.n2,
                    d.triple.n3,
                    rules.join(";")
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Classify { max_m, workers, out } => {
            let spf = sieve_for(max_m)?;
            eprintln!("classifying m <= {max_m} on {workers} worker(s)");
            let records = survey::classify_range(max_m, workers, &spf)?;
            eprintln!("{} prime records", records.len());
            match out {
                Some(path) => {
                    let f = BufWriter::new(File::create(path)?);
                    survey::write_jsonl(&records, true, f)?;
                }
                None => survey::write_jsonl(&records, true, std::io::stdout().lock())?,
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Families { cmd } => run_families(cmd),
        Cmd::Coverage { max_m, csv } => {
            let spf = sieve_for(max_m)?;
            eprintln!("surveying coverage for m <= {max_m}");
            let rep = survey::coverage(max_m, default_workers(), &spf)?;
            if let Some(path) = csv {
                let f = BufWriter::new(File::create(path)?);
                survey::write_family_csv(&rep, f)?;
            }
            println!("{}", serde_json::to_string(&rep).expect("serializable"));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { n, n1, n2, n3 } => {
            let ok = verify_raw(n, n1, n2, n3)?;
            println!("{ok}");
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Cmd::Wild { max_m } => {
            let spf = sieve_for(max_m)?;
            for m in tame::wild_primes(max_m, &spf)? {
                println!("{m}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Reconcile { json } => {
            let rep = family::reconcile::reconcile();
            if json {
                println!("{}", serde_json::to_string(&rep).expect("serializable"));
            } else {
                print!("{}", rep.render_text());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_families(cmd: FamiliesCmd) -> Result<ExitCode, Error> {
    match cmd {
        FamiliesCmd::List => {
            print!("{}", render_catalog_table());
        }
        FamiliesCmd::Gen { id, set } => {
            let desc = family_by_id(&id)?;
            let mut by_name: Vec<(String, i64)> = Vec::new();
            for kv in &set.set {
                let (name, value) = kv
                    .split_once('=')
                    .ok_or_else(|| Error::Parse(format!("expected NAME=VALUE, got {kv:?}")))?;
                let value: i64 = value
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad integer in {kv:?}")))?;
                by_name.push((name.to_string(), value));
            }
            let lookup = |name: &str| -> Result<i64, Error> {
                by_name
                    .iter()
                    .find(|(n, _)| n == name)
                    .map(|&(_, v)| v)
                    .ok_or_else(|| Error::Domain(format!("{id}: missing --set {name}=...")))
            };
            let params: Vec<i64> = desc
                .params
                .iter()
                .map(|p| lookup(p.name))
                .collect::<Result<_, _>>()?;
            let mult = lookup(desc.multiplier.name)?;
            let inst = family::instantiate(desc, &params, mult)?;
            println!("{}", serde_json::to_string(&inst).expect("serializable"));
        }
        FamiliesCmd::Members { id, max_m } => {
            let desc = family_by_id(&id)?;
            for inst in family::members_up_to(desc, max_m) {
                println!("{}", serde_json::to_string(&inst).expect("serializable"));
            }
        }
        FamiliesCmd::Match { m } => {
            for inst in family::match_m(m) {
                println!("{}", serde_json::to_string(&inst).expect("serializable"));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn sieve_for(m_max: u64) -> Result<SpfTable, Error> {
    if m_max < 1 {
        return Err(Error::Domain("--max-m must be at least 1".into()));
    }
    SpfTable::new(18 * m_max.max(1))
}
