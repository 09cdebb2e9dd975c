//! Command-line surface for the cup-length library: invariant tables,
//! verification campaigns, search witnesses, and generating polynomials.

mod campaigns;
mod output;
mod table;
mod tcgen;
mod witness;

use clap::{ArgGroup, Args, Parser, Subcommand};
use cuplen::search::DEFAULT_BUDGET;
use cuplen::verify::GridSpec;
use output::Format;
use std::process::ExitCode;

/// An inclusive parameter range, written `a..b` or as a single value.
#[derive(Clone, Copy, Debug)]
pub struct Span {
    pub lo: u32,
    pub hi: u32,
}

impl Span {
    fn parse(s: &str) -> Result<Span, String> {
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (a, b),
            None => (s, s),
        };
        let lo: u32 = lo.trim().parse().map_err(|_| format!("bad bound in {s:?}"))?;
        let hi: u32 = hi.trim().parse().map_err(|_| format!("bad bound in {s:?}"))?;
        if lo == 0 || hi < lo {
            return Err(format!("range {s:?} must satisfy 1 <= lo <= hi"));
        }
        Ok(Span { lo, hi })
    }

    pub fn values(self) -> impl Iterator<Item = u32> {
        self.lo..=self.hi
    }
}

fn parse_span(s: &str) -> Result<Span, String> {
    Span::parse(s)
}

fn parse_grid(s: &str) -> Result<GridSpec, String> {
    let (mut n, mut g, mut k) = (None, None, None);
    for part in s.split(',') {
        let (key, val) = part
            .split_once('=')
            .ok_or_else(|| format!("expected key=range, got {part:?}"))?;
        let span = Span::parse(val)?;
        match key.trim() {
            "n" => n = Some(span),
            "g" => g = Some(span),
            "k" => k = Some(span),
            other => return Err(format!("unknown grid key {other:?}")),
        }
    }
    let n = n.ok_or("grid needs n=..")?;
    let g = g.ok_or("grid needs g=..")?;
    let k = k.ok_or("grid needs k=..")?;
    Ok(GridSpec::new((n.lo, n.hi), (g.lo, g.hi), (k.lo, k.hi)))
}

#[derive(Parser)]
#[command(
    name = "cuplen",
    version,
    about = "Zero-divisor cup lengths and sequential topological complexity \
             of symmetric products of non-orientable surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "md")]
    format: Format,

    /// Worker threads for search campaigns (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Expansion budget, counted in tensor term pairs, for search-backed
    /// commands.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form invariants over parameter ranges.
    Table(TableArgs),
    /// Cross-validation campaigns; exits nonzero on any mismatch.
    Verify(VerifyArgs),
    /// Brute-force witness for a single instance.
    Witness(WitnessArgs),
    /// TC-generating polynomial of one symmetric-product family.
    Tcgen(TcgenArgs),
}

#[derive(Args)]
pub struct TableArgs {
    /// Derived gap case table for the n = 51 family.
    #[arg(long = "example-3-1", conflicts_with_all = ["n", "g", "k"])]
    example_3_1: bool,

    /// Number of points, a value or range a..b.
    #[arg(short, value_parser = parse_span, required_unless_present = "example_3_1")]
    n: Option<Span>,

    /// Genus, a value or range a..b.
    #[arg(short, value_parser = parse_span, required_unless_present = "example_3_1")]
    g: Option<Span>,

    /// Number of prescribed stops, a value or range a..b.
    #[arg(short, value_parser = parse_span, required_unless_present = "example_3_1")]
    k: Option<Span>,
}

#[derive(Args)]
#[command(group = ArgGroup::new("op").required(true).multiple(false))]
pub struct VerifyArgs {
    /// Search-vs-formula sweep over a grid, e.g. n=1..3,g=1..3,k=2.
    #[arg(long, value_parser = parse_grid, group = "op")]
    grid: Option<GridSpec>,

    /// Compare restricted and unrestricted searches on the tiny grid.
    #[arg(long, group = "op")]
    reduction_soundness: bool,

    /// Randomized capacity-law campaigns.
    #[arg(long, group = "op")]
    capacity_props: bool,

    /// Randomized vanishing campaign in the even-k mid-genus window.
    #[arg(long, group = "op")]
    vanishing_law: bool,

    /// Truth table for iterated squared zero-divisor products.
    #[arg(long, group = "op")]
    bad_zero_divisors: bool,

    /// Closed-form law sweep over the large grid.
    #[arg(long, group = "op")]
    structural: bool,

    /// Seed for the randomized campaigns.
    #[arg(long, default_value_t = 7)]
    seed: u64,

    /// Sample count override for the randomized campaigns.
    #[arg(long)]
    instances: Option<u64>,

    /// Enumerate all exponent tuples instead of the reduced family.
    #[arg(long)]
    unrestricted: bool,

    /// Disable capacity-based pruning.
    #[arg(long)]
    no_prune: bool,

    /// Number of points for --bad-zero-divisors.
    #[arg(short, default_value_t = 3)]
    n: u32,

    /// Genus for --bad-zero-divisors.
    #[arg(short, default_value_t = 3)]
    g: u32,
}

#[derive(Args)]
pub struct WitnessArgs {
    /// Number of points.
    #[arg(short)]
    n: u32,

    /// Genus.
    #[arg(short)]
    g: u32,

    /// Number of prescribed stops.
    #[arg(short)]
    k: u32,

    /// Enumerate all exponent tuples instead of the reduced family.
    #[arg(long)]
    unrestricted: bool,
}

#[derive(Args)]
pub struct TcgenArgs {
    /// Number of points.
    #[arg(short)]
    n: u64,

    /// Genus.
    #[arg(short)]
    g: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    let run = match &cli.command {
        Command::Table(args) => table::run(args),
        Command::Verify(args) => campaigns::run(args, cli.budget),
        Command::Witness(args) => witness::run(args, cli.budget),
        Command::Tcgen(args) => tcgen::run(args),
    };
    match run {
        Ok(out) => {
            print!("{}", out.render(cli.format));
            if out.clean {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
