use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use discarr::acceptance::{run_all, DEFAULT_SEED};
use discarr::arrangement::random_generic;
use discarr::discriminantal::{codim2_census, construct_dependent, StratumKind};
use discarr::gale::{gale_invariance, gale_transform, PointConfig};
use discarr::io::{
    arrangement_from_json, arrangement_to_json, census_to_json, config_from_json, config_to_json,
    to_json, BraidFile, InvarianceEntry, RelationsFile, SectionFile,
};
use discarr::monodromy::{
    check_against_census, nilpotent_relations, presentation, random_section, section_report,
};
use discarr::planar::verify_independence;
use discarr::{Error, GenericArrangement};

/// Exact computations on discriminantal arrangements.
#[derive(Parser, Debug)]
#[command(name = "discarr", version)]
struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

/// Where the arrangement comes from: a file, or a random one.
#[derive(Args, Debug)]
struct Source {
    /// Arrangement JSON file.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Entry bound for random normals (default: max(2n, 10)).
    #[arg(long)]
    bound: Option<i64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Random trace-generic arrangement.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Codimension-2 census of B(n,k).
    Census(Source),
    /// Arrangement with one planted dependent triple.
    DependentConstruct {
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = 0)]
        t: usize,
    },
    /// Gale transform of a point configuration (or of the normals).
    Gale(Source),
    /// Concurrency of pair partitions versus the Gale dual.
    GaleInvariance {
        /// Configurations of each label.
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
    /// Trace independence and the dimension formula for B(n,2).
    PlanarVerify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        cap: usize,
        #[arg(long, default_value_t = 5)]
        trials: usize,
    },
    /// Generic plane section and its singular points.
    Section(Source),
    /// Braid monodromy of a generic section.
    Monodromy(Source),
    /// Fundamental group presentation of a generic section.
    Presentation {
        #[command(flatten)]
        source: Source,
        /// Keep one relator fewer per point than the block size.
        #[arg(long)]
        reduce: bool,
    },
    /// Quadratic relations of the nilpotent completion.
    Relations(Source),
    /// Runs the acceptance suite.
    Accept,
}

/// Outcome of a command: output text, and whether it reports a discrepancy.
struct Outcome {
    text: String,
    discrepancy: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome {
            text,
            discrepancy: false,
        }
    }
}

fn default_bound(n: usize) -> i64 {
    (2 * n as i64).max(10)
}

fn load_arrangement(src: &Source, seed: u64) -> anyhow::Result<GenericArrangement> {
    if let Some(path) = &src.input {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))?;
        return Ok(arrangement_from_json(&text)?);
    }
    let (Some(n), Some(k)) = (src.n, src.k) else {
        return Err(Error::Precondition("give --input FILE or both --n and --k".into()).into());
    };
    Ok(random_generic(n, k, seed, src.bound.unwrap_or(default_bound(n)))?)
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let seed = cli.seed;
    Ok(match &cli.command {
        Command::Gen { n, k, bound } => {
            let a = random_generic(*n, *k, seed, bound.unwrap_or(default_bound(*n)))?;
            Outcome::ok(arrangement_to_json(&a))
        }
        Command::Census(src) => {
            let a = load_arrangement(src, seed)?;
            let census = codim2_census(&a)?;
            let other = census.iter().any(|r| r.kind == StratumKind::Other);
            Outcome {
                text: census_to_json(&census),
                discrepancy: other,
            }
        }
        Command::DependentConstruct { s, t } => {
            Outcome::ok(arrangement_to_json(&construct_dependent(*s, *t, seed)?))
        }
        Command::Gale(src) => {
            let p = match &src.input {
                Some(path) => {
                    let text = fs::read_to_string(path).map_err(|e| {
                        Error::Precondition(format!("cannot read {}: {e}", path.display()))
                    })?;
                    if text.contains("\"vectors\"") {
                        config_from_json(&text)?
                    } else {
                        PointConfig::new(arrangement_from_json(&text)?.normals().transpose())?
                    }
                }
                None => PointConfig::new(load_arrangement(src, seed)?.normals().transpose())?,
            };
            Outcome::ok(config_to_json(&gale_transform(&p)?))
        }
        Command::GaleInvariance { trials } => {
            let cases = gale_invariance(*trials, seed)?;
            let entries: Vec<InvarianceEntry> = cases.iter().map(InvarianceEntry::from).collect();
            Outcome {
                text: to_json(&entries),
                discrepancy: cases
                    .iter()
                    .any(|c| !c.agrees() || c.original.is_some() != c.constructed_positive),
            }
        }
        Command::PlanarVerify { n, cap, trials } => {
            let report = verify_independence(*n, *cap, *trials, seed)?;
            Outcome {
                discrepancy: !report.discrepancies.is_empty(),
                text: to_json(&report),
            }
        }
        Command::Section(src) => {
            let a = load_arrangement(src, seed)?;
            let sec = random_section(&a, seed)?;
            Outcome::ok(to_json(&SectionFile::from(&sec)))
        }
        Command::Monodromy(src) => {
            let a = load_arrangement(src, seed)?;
            let sec = random_section(&a, seed)?;
            let braids = sec.braids()?;
            let report = section_report(&sec, &codim2_census(&a)?)?;
            if !report.passed() {
                eprintln!("{}", to_json(&report));
            }
            Outcome {
                text: to_json(&BraidFile::new(sec.strand_count(), &braids)),
                discrepancy: !report.passed(),
            }
        }
        Command::Presentation { source, reduce } => {
            let a = load_arrangement(source, seed)?;
            let sec = random_section(&a, seed)?;
            let p = presentation(&sec.braids()?, sec.strand_count(), *reduce);
            let ab = p.abelianization();
            let free = ab.is_free_of_rank(sec.strand_count());
            if !free {
                eprintln!("abelianization: rank {}, torsion {:?}", ab.free_rank, ab.torsion);
            }
            Outcome {
                text: p.to_text(),
                discrepancy: !free,
            }
        }
        Command::Relations(src) => {
            let a = load_arrangement(src, seed)?;
            let rel = nilpotent_relations(&a)?;
            let check = check_against_census(&rel, &codim2_census(&a)?);
            if let Err(e) = &check {
                eprintln!("{e}");
            }
            Outcome {
                text: to_json(&RelationsFile::new(a.n(), a.k(), &rel)),
                discrepancy: check.is_err(),
            }
        }
        Command::Accept => {
            let results = run_all(seed);
            for r in &results {
                eprintln!("{}", r.line());
            }
            Outcome {
                discrepancy: results.iter().any(|r| !r.passed),
                text: to_json(&results),
            }
        }
    })
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Fault(_)) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: cannot configure {j} worker threads: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli) {
        Ok(out) => {
            if let Some(path) = &cli.output {
                if let Err(e) = fs::write(path, &out.text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(if out.discrepancy { 2 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
