use std::fmt::Display;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use hx_core::connectivity::ORACLE_MAX_VERTICES;
use hx_core::constructions::{
    build_chain, build_msh, build_starlike, build_starlike_random, build_two_halves, ChainVariant, StarLikeSpec,
};
use hx_core::format::{read_file, write_file};
use hx_core::maximality::{greedy_maximalize, is_kl_edge_maximal_with, Method, DEFAULT_ORACLE_CAP};
use hx_core::normalize::{normalize, SatelliteSpectrum};
use hx_core::params::{bounds, params};
use hx_core::sweep::{default_grid, sweep_row};
use hx_core::{kappa_flow, kappa_oracle, Hypergraph};

const ERROR_EXIT: u8 = 3;

#[derive(Parser)]
#[command(name = "hx", version, about = "Edge-maximal uniform hypergraphs: bounds, constructions, checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the thresholds t and s for (k, r).
    Params {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        r: u64,
    },
    /// Print lower and upper size bounds as JSON.
    Bounds {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        l: u64,
        #[arg(long)]
        r: u64,
    },
    /// Build a hypergraph and write it in the text format.
    Construct(ConstructArgs),
    /// Edge-connectivity and a minimum cut, as JSON.
    Kappa {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Oracle::Auto)]
        oracle: Oracle,
    },
    /// Check (k,l)-edge-maximality. Exit 0: maximal, 1: not maximal, 2: a dense subset exists.
    Verify {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, value_enum, default_value_t = Oracle::Auto)]
        oracle: Oracle,
    },
    /// Add random admissible edges until the hypergraph is (k,l)-edge-maximal.
    Maximalize {
        /// Starting hypergraph; the edgeless one on --n vertices when omitted.
        file: Option<PathBuf>,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, required_unless_present = "file")]
        n: Option<usize>,
        #[arg(long, required_unless_present = "file")]
        r: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Rewrite a satellite spectrum to its fixpoint and print the trace.
    Normalize {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        r: usize,
        /// Satellite sizes, comma separated (1 or r..=l-1).
        #[arg(long, value_delimiter = ',')]
        spectrum: Vec<usize>,
    },
    /// Tabulate bounds, construction sizes and maximality over a parameter grid, as CSV.
    Sweep {
        #[arg(long, value_delimiter = ',')]
        k: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        r: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Oracle::Auto)]
        oracle: Oracle,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long, value_enum)]
    variant: Option<Variant>,
    /// Satellite sizes for `starlike`, comma separated.
    #[arg(long, value_delimiter = ',')]
    satellites: Vec<usize>,
    /// Random attachment for `starlike`; canonical when omitted.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Msh,
    TwoHalves,
    Chain,
    Starlike,
    Complete,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    I,
    Ii,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Oracle {
    On,
    Off,
    Auto,
}

#[derive(Serialize)]
struct Failure {
    error: &'static str,
    message: String,
}

impl Failure {
    fn new(error: &'static str, message: impl Display) -> Self {
        Failure { error, message: message.to_string() }
    }
}

macro_rules! failure_from {
    ($($ty:ty => $kind:literal),* $(,)?) => {
        $(impl From<$ty> for Failure {
            fn from(e: $ty) -> Self {
                Failure::new($kind, e)
            }
        })*
    };
}

failure_from! {
    hx_core::params::ParamError => "parameter",
    hx_core::HypergraphError => "hypergraph",
    hx_core::format::ParseError => "input",
    hx_core::connectivity::ConnectivityError => "oracle",
    hx_core::maximality::MaximalityError => "maximality",
    hx_core::normalize::NormalizeError => "normalize",
    hx_core::sweep::SweepError => "sweep",
    io::Error => "io",
    csv::Error => "io",
    serde_json::Error => "io",
}

fn oracle_cap() -> Result<usize, Failure> {
    match std::env::var("HX_ORACLE_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::new("parameter", format!("HX_ORACLE_CAP must be an integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_ORACLE_CAP),
    }
}

fn method(oracle: Oracle, n: usize) -> Result<Method, Failure> {
    Ok(match oracle {
        Oracle::On if n > ORACLE_MAX_VERTICES => {
            return Err(Failure::new(
                "oracle",
                format!("oracle handles at most {ORACLE_MAX_VERTICES} vertices, got n={n}"),
            ))
        }
        Oracle::On => Method::Oracle,
        Oracle::Off => Method::Fast,
        Oracle::Auto => Method::auto(n, oracle_cap()?),
    })
}

fn need<T>(v: Option<T>, flag: &str, family: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::new("usage", format!("{family} needs --{flag}")))
}

fn print_json(value: &impl Serialize) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn emit(h: &Hypergraph, output: Option<&PathBuf>) -> Result<(), Failure> {
    match output {
        Some(path) => write_file(h, path)?,
        None => io::stdout().lock().write_all(h.to_text().as_bytes())?,
    }
    Ok(())
}

fn construct(a: &ConstructArgs) -> Result<Hypergraph, Failure> {
    Ok(match a.family {
        Family::Msh => {
            build_msh(need(a.n, "n", "msh")?, need(a.k, "k", "msh")?, need(a.l, "l", "msh")?, need(a.r, "r", "msh")?)?
        }
        Family::TwoHalves => build_two_halves(
            need(a.t, "t", "two-halves")?,
            need(a.r, "r", "two-halves")?,
            need(a.p, "p", "two-halves")?,
            need(a.l, "l", "two-halves")?,
        )?,
        Family::Chain => {
            let variant = match need(a.variant, "variant", "chain")? {
                Variant::I => ChainVariant::I,
                Variant::Ii => ChainVariant::II,
            };
            let k = need(a.k, "k", "chain")?;
            let r = need(a.r, "r", "chain")?;
            let n = need(a.n, "n", "chain")?;
            let nucleus = match variant {
                ChainVariant::I => 0,
                ChainVariant::II => need(a.a, "a", "chain --variant ii")?,
            };
            build_chain(n, nucleus, k, r, variant)?
        }
        Family::Starlike => {
            let spec = StarLikeSpec {
                k: need(a.k, "k", "starlike")?,
                r: need(a.r, "r", "starlike")?,
                l: need(a.l, "l", "starlike")?,
                satellites: a.satellites.clone(),
            };
            match a.seed {
                Some(seed) => build_starlike_random(&spec, &mut ChaCha8Rng::seed_from_u64(seed))?,
                None => build_starlike(&spec)?,
            }
        }
        Family::Complete => Hypergraph::complete(need(a.n, "n", "complete")?, need(a.r, "r", "complete")?)?,
    })
}

#[derive(Serialize)]
struct KappaOutput {
    kappa: usize,
    witness: Option<hx_core::CutWitness>,
    method: Method,
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Params { k, r } => {
            let p = params(k, r)?;
            println!("t={} s={}", p.t, p.s);
        }
        Command::Bounds { n, k, l, r } => print_json(&bounds(n, k, l, r)?)?,
        Command::Construct(args) => emit(&construct(&args)?, args.output.as_ref())?,
        Command::Kappa { file, oracle } => {
            let h = read_file(&file)?;
            let method = method(oracle, h.n())?;
            let res = match method {
                Method::Oracle => kappa_oracle(&h)?,
                Method::Fast => kappa_flow(&h),
            };
            print_json(&KappaOutput { kappa: res.kappa, witness: res.witness, method })?;
        }
        Command::Verify { file, k, l, oracle } => {
            let h = read_file(&file)?;
            let report = is_kl_edge_maximal_with(&h, k, l, method(oracle, h.n())?)?;
            print_json(&report)?;
            let code = if !report.property_a {
                2
            } else if report.maximal {
                0
            } else {
                1
            };
            return Ok(ExitCode::from(code));
        }
        Command::Maximalize { file, k, l, seed, n, r, output } => {
            let start = match file {
                Some(path) => read_file(&path)?,
                None => Hypergraph::empty(n.expect("enforced by clap"), r.expect("enforced by clap"))?,
            };
            emit(&greedy_maximalize(&start, k, l, seed)?, output.as_ref())?;
        }
        Command::Normalize { k, l, r, spectrum } => {
            let sp = SatelliteSpectrum::from_sizes(k, r, l, &spectrum)?;
            print_json(&normalize(&sp)?)?;
        }
        Command::Sweep { k, r, oracle, output } => {
            let cap = oracle_cap()?;
            let forced = match oracle {
                Oracle::On => Some(Method::Oracle),
                Oracle::Off => Some(Method::Fast),
                Oracle::Auto => None,
            };
            let sink: Box<dyn Write> = match &output {
                Some(path) => Box::new(std::fs::File::create(path)?),
                None => Box::new(io::stdout().lock()),
            };
            let mut w = csv::Writer::from_writer(sink);
            let mut bad = 0;
            for (pn, pk, pl, pr) in default_grid() {
                if (!k.is_empty() && !k.contains(&pk)) || (!r.is_empty() && !r.contains(&pr)) {
                    continue;
                }
                let row = sweep_row(pn, pk, pl, pr, forced, cap)?;
                bad += usize::from(!row.consistent());
                w.serialize(row)?;
            }
            w.flush()?;
            if bad > 0 {
                return Err(Failure::new("sweep", format!("{bad} rows violate lower <= msh = upper or maximality")));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.render().to_string();
            let first = msg.lines().next().unwrap_or_default().trim_start_matches("error: ");
            return fail(&Failure::new("usage", first));
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(f) => fail(&f),
    }
}

fn fail(f: &Failure) -> ExitCode {
    eprintln!("{}", serde_json::to_string(f).expect("plain struct serializes"));
    ExitCode::from(ERROR_EXIT)
}
