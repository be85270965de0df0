use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::Serialize;

use kyoung::ideal::{self, IdealSpec};
use kyoung::lattice::build_ideal;
use kyoung::qseries::{rank_gen_gamma, rank_gen_lk, QPoly};
use kyoung::verify::{render, CheckName, ExportFormat, Payload, Span, SweepConfig, VerificationReport};
use kyoung::{covers, k_conjugate, k_skew, Direction, Partition};

/// Exact computations in the k-Young lattice and verification sweeps.
///
/// Exit status: 0 when everything checked passes, 1 when a sweep finds a
/// counterexample, 2 on invalid input.
#[derive(Parser)]
#[command(name = "kyoung", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// k-conjugate of a k-bounded partition.
    Kconj {
        /// Comma-separated parts, e.g. 4,3,2,2,1,1.
        parts: Partition,
        #[arg(long)]
        k: usize,
    },
    /// k-skew diagram, printed as outer/inner.
    Kskew {
        parts: Partition,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Covers in the k-Young order, one per line.
    Covers {
        parts: Partition,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "up")]
        dir: Direction,
    },
    /// Members of L^k(m,n), or its Hasse diagram or rank vector.
    Ideal(IdealArgs),
    /// Rank-generating function of L^k(m,n), or of the stratum Γ^k(m,n).
    Rankgen {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Use the stratum Γ^k(m,n) instead of the whole ideal.
        #[arg(long)]
        gamma: bool,
        /// Print the coefficient array instead of the polynomial.
        #[arg(long)]
        json: bool,
    },
    /// Run one verification sweep.
    Verify(VerifyArgs),
    /// Run a sweep described by a JSON config file.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        /// Keep wall-clock times in the report.
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Args)]
#[command(group(ArgGroup::new("fmt").args(["dot", "json", "csv"])))]
struct IdealArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Hasse diagram in Graphviz DOT.
    #[arg(long)]
    dot: bool,
    /// Hasse diagram as JSON.
    #[arg(long)]
    json: bool,
    /// Rank vector as CSV.
    #[arg(long)]
    csv: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// conjecture-u, conjecture-gen, sieved, sieved-sweep, sieved-gaussian or structure.
    check: CheckName,
    /// Ranges are `lo..hi` (inclusive) or a single value.
    #[arg(long)]
    m: Option<Span>,
    #[arg(long)]
    n: Option<Span>,
    #[arg(long)]
    k: Option<Span>,
    #[arg(long)]
    a: Option<Span>,
    #[arg(long)]
    b: Option<Span>,
    /// For conjecture-u: n runs up to k + n_extra.
    #[arg(long)]
    n_extra: Option<usize>,
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    primes: Option<Vec<usize>>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value = "json")]
    format: ExportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Keep wall-clock times in the report.
    #[arg(long)]
    timing: bool,
}

impl VerifyArgs {
    fn to_config(&self) -> SweepConfig {
        SweepConfig {
            m: self.m,
            n: self.n,
            k: self.k,
            a: self.a,
            b: self.b,
            n_extra: self.n_extra,
            max_degree: self.max_degree,
            primes: self.primes.clone(),
            samples: self.samples,
            seed: self.seed,
            format: self.format,
            out: self.out.clone(),
            ..SweepConfig::new(self.check)
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn ideal(args: &IdealArgs) -> Result<()> {
    let spec = IdealSpec::new(args.m, args.n, args.k)?;
    let text = if args.dot || args.json {
        let diagram = build_ideal(&spec.generator(), spec.k())?;
        let format = if args.dot { ExportFormat::Dot } else { ExportFormat::Json };
        render(Payload::Diagram(&diagram), format)?
    } else {
        let members = ideal::enumerate(&spec);
        if args.csv {
            let ranks = ideal::rank_vector(&members, spec.top_rank())?;
            render(Payload::Ranks(&ranks), ExportFormat::Csv)?
        } else {
            members.iter().map(|p| format!("{p}\n")).collect()
        }
    };
    emit(&text, args.out.as_deref())
}

fn rankgen(m: usize, n: usize, k: usize, gamma: bool, json: bool) -> Result<()> {
    let poly: QPoly = if gamma { rank_gen_gamma(m, n, k)? } else { rank_gen_lk(m, n, k)? };
    println!("{}", if json { poly.to_json() } else { poly.pretty() });
    Ok(())
}

/// Runs the sweep, writes the reports and returns whether all were clean.
fn sweep(config: &SweepConfig, timing: bool) -> Result<bool> {
    let reports: Vec<VerificationReport> = config
        .run()?
        .into_iter()
        .map(|r| if timing { r } else { r.without_timing() })
        .collect();
    for r in &reports {
        eprintln!("{}", r.summary());
    }
    let text = render(Payload::Reports(&reports), config.format)?;
    emit(&text, config.out.as_deref())?;
    Ok(reports.iter().all(VerificationReport::is_clean))
}

#[derive(Serialize)]
struct SkewJson<'a> {
    outer: &'a Partition,
    inner: &'a Partition,
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Kconj { parts, k } => println!("{}", k_conjugate(&parts, k)?),
        Command::Kskew { parts, k, json } => {
            let skew = k_skew(&parts, k)?;
            if json {
                println!("{}", serde_json::to_string(&SkewJson { outer: skew.outer(), inner: skew.inner() })?);
            } else {
                println!("{}/{}", skew.outer(), skew.inner());
            }
        }
        Command::Covers { parts, k, dir } => {
            for p in covers(&parts, k, dir)? {
                println!("{p}");
            }
        }
        Command::Ideal(args) => ideal(&args)?,
        Command::Rankgen { m, n, k, gamma, json } => rankgen(m, n, k, gamma, json)?,
        Command::Verify(args) => return sweep(&args.to_config(), args.timing),
        Command::Sweep { config, timing } => {
            let config = SweepConfig::from_file(&config)
                .with_context(|| format!("cannot load config {}", config.display()))?;
            return sweep(&config, timing);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
