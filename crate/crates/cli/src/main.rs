//! `latsec`: regimes, secure rates, s.d.o.f. sweeps and Monte Carlo runs.
//!
//! Exit status is 0 on success, 2 for bad flags and 3 when the inputs are
//! well-formed but violate a model precondition.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::thread;

use clap::{Args, Parser, Subcommand};
use latsec_core::channel::{classify_regime, symmetric_split, ChannelGains, PowerSplit};
use latsec_core::csv::{self, number};
use latsec_core::region::{
    sdof_sweep, search_split, secure_rates, SecureRatePair, SplitGrid, SplitRule, SweepTemplate,
};
use latsec_core::sim::{self, masking_config};
use latsec_core::CombinationRates;

const OUT_DIR_ENV: &str = "LATSEC_OUT_DIR";
const SWEEP_HEADER: &str = "p,r1,r2,sum_rate,normalizer,ratio,gaussian_ref";

#[derive(Parser, Debug)]
#[command(
    name = "latsec",
    version,
    about = "Secure rates for the two-user Gaussian interference channel with lattice jamming"
)]
struct Cli {
    /// Write output here instead of stdout. Relative paths resolve against
    /// $LATSEC_OUT_DIR when it is set.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Read powers (p, split powers, gamma^2) as 10 log10 and gains as
    /// 20 log10 values.
    #[arg(long, global = true)]
    db: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Regime ratios and classification.
    #[command(allow_negative_numbers = true)]
    Regime(GainArgs),
    /// Secure rate pair with penalties and combination-rate diagnostics.
    #[command(allow_negative_numbers = true)]
    Rates {
        #[command(flatten)]
        gains: GainArgs,
        #[command(flatten)]
        split: SplitArgs,
    },
    /// Sum secure rate against P for a fixed regime ratio (CSV).
    #[command(allow_negative_numbers = true)]
    Sweep(SweepArgs),
    /// Monte Carlo masking, leakage and decoding checks (CSV).
    #[command(allow_negative_numbers = true)]
    Simulate(SimArgs),
    /// Best power split over a grid.
    #[command(allow_negative_numbers = true)]
    Search {
        #[command(flatten)]
        gains: GainArgs,
        /// Message-fraction levels per user; the grid has levels^2 points.
        #[arg(long, default_value_t = 19, conflicts_with = "gamma_sq")]
        levels: usize,
        /// Search symmetric splits with these gamma^2 values instead.
        #[arg(long, value_delimiter = ',', value_parser = finite)]
        gamma_sq: Option<Vec<f64>>,
    },
}

#[derive(Args, Debug)]
struct GainArgs {
    #[arg(long, value_parser = finite)]
    h11: f64,
    #[arg(long, value_parser = finite)]
    h22: f64,
    #[arg(long, value_parser = finite)]
    h12: f64,
    #[arg(long, value_parser = finite)]
    h21: f64,
    /// Per-user power budget.
    #[arg(long, value_parser = finite)]
    p: f64,
}

#[derive(Args, Debug)]
struct SplitArgs {
    /// Symmetric split with this gamma^2 (default 1/(h21^2 p)).
    #[arg(long, value_parser = finite, conflicts_with_all = ["pt1", "pu1", "pt2", "pu2"])]
    gamma_sq: Option<f64>,
    #[arg(long, value_parser = finite, requires_all = ["pu1", "pt2", "pu2"])]
    pt1: Option<f64>,
    #[arg(long, value_parser = finite, requires_all = ["pt1", "pt2", "pu2"])]
    pu1: Option<f64>,
    #[arg(long, value_parser = finite, requires_all = ["pt1", "pu1", "pu2"])]
    pt2: Option<f64>,
    #[arg(long, value_parser = finite, requires_all = ["pt1", "pu1", "pt2"])]
    pu2: Option<f64>,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long, value_parser = finite, default_value_t = 1.0)]
    h11: f64,
    #[arg(long, value_parser = finite, default_value_t = 1.0)]
    h22: f64,
    /// Regime ratio log(INR)/log(SNR) held fixed along the sweep.
    #[arg(long, value_parser = finite)]
    ratio: f64,
    /// Comma-separated, strictly increasing power budgets.
    #[arg(long, value_delimiter = ',', value_parser = finite, required = true)]
    p: Vec<f64>,
    /// Fixed gamma^2 for every point instead of 1/(h21^2 P).
    #[arg(long, value_parser = finite, conflicts_with = "search_levels")]
    gamma_sq: Option<f64>,
    /// Pick the best split on a levels x levels fraction grid at each point.
    #[arg(long)]
    search_levels: Option<usize>,
}

#[derive(Args, Debug)]
struct SimArgs {
    /// Comma-separated power budgets.
    #[arg(long, value_delimiter = ',', value_parser = finite, default_value = "10000")]
    p: Vec<f64>,
    /// Message lattice is k times coarser than the jamming lattice
    /// (p_t1 = k^2 p_u2).
    #[arg(long, default_value_t = 2)]
    k: u32,
    /// The four fine nesting ratios, coarsest first.
    #[arg(long, value_delimiter = ',', num_args = 4, default_value = "2,2,2,2")]
    fine: Vec<u32>,
    #[arg(long, default_value_t = 4)]
    bins: u32,
    #[arg(long, default_value_t = 100_000)]
    samples: usize,
    /// Comma-separated seeds; one row per (p, seed).
    #[arg(long, value_delimiter = ',', default_value = "1")]
    seeds: Vec<u64>,
    #[arg(long)]
    no_noise: bool,
}

fn finite(s: &str) -> Result<f64, String> {
    let v: f64 = s.trim().parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("{s} is not a finite number"))
    }
}

enum Failure {
    Domain(latsec_core::Error),
    Io(String),
}

impl From<latsec_core::Error> for Failure {
    fn from(e: latsec_core::Error) -> Self {
        Failure::Domain(e)
    }
}

struct Units {
    db: bool,
}

impl Units {
    fn power(&self, x: f64) -> f64 {
        if self.db {
            10f64.powf(x / 10.0)
        } else {
            x
        }
    }

    fn gain(&self, x: f64) -> f64 {
        if self.db {
            10f64.powf(x / 20.0)
        } else {
            x
        }
    }

    fn gains(&self, g: &GainArgs) -> latsec_core::Result<ChannelGains> {
        ChannelGains::new(
            self.gain(g.h11),
            self.gain(g.h22),
            self.gain(g.h12),
            self.gain(g.h21),
            self.power(g.p),
        )
    }

    fn split(&self, gains: &ChannelGains, s: &SplitArgs) -> latsec_core::Result<PowerSplit> {
        match (s.pt1, s.pu1, s.pt2, s.pu2) {
            (Some(pt1), Some(pu1), Some(pt2), Some(pu2)) => Ok(PowerSplit::new(
                self.power(pt1),
                self.power(pu1),
                self.power(pt2),
                self.power(pu2),
            )),
            _ => symmetric_split(gains, s.gamma_sq.map(|g| self.power(g))),
        }
    }
}

fn regime(units: &Units, args: &GainArgs) -> Result<String, Failure> {
    let gains = units.gains(args)?;
    let (r1, r2) = gains.regime_ratios();
    let (inr1, inr2) = gains.inr();
    let mut out = String::new();
    let _ = writeln!(out, "inr1 = {}", number(inr1));
    let _ = writeln!(out, "inr2 = {}", number(inr2));
    let _ = writeln!(out, "ratio1 = {}", number(r1));
    let _ = writeln!(out, "ratio2 = {}", number(r2));
    let _ = writeln!(out, "regime = {}", classify_regime(&gains)?);
    Ok(out)
}

fn describe_rates(out: &mut String, split: &PowerSplit, rates: &SecureRatePair) {
    let _ = writeln!(
        out,
        "split = p_t1 {} p_u1 {} p_t2 {} p_u2 {}",
        number(split.p_t1),
        number(split.p_u1),
        number(split.p_t2),
        number(split.p_u2)
    );
    let _ = writeln!(out, "regime = {}", rates.regime);
    let _ = writeln!(out, "r1 < {}", number(rates.r1));
    let _ = writeln!(out, "r2 < {}", number(rates.r2));
    let _ = writeln!(out, "penalty1 = {}", number(rates.penalty1));
    let _ = writeln!(out, "penalty2 = {}", number(rates.penalty2));
    let receivers = [
        (1, &rates.diagnostics.receiver1),
        (2, &rates.diagnostics.receiver2),
    ];
    for (k, c) in receivers {
        describe_combination(out, k, c);
    }
    for user in &rates.diagnostics.jamming_above_noise {
        let _ = writeln!(
            out,
            "warning: folded jamming at receiver {user} exceeds the noise power"
        );
    }
}

fn describe_combination(out: &mut String, k: u8, c: &CombinationRates) {
    let _ = writeln!(
        out,
        "receiver{k}: r_comb_1 {} r_comb_2 {} a {} beta {} sigma_sq {} sum_lower {} gap {:.1e}{}",
        number(c.r_comb_1),
        number(c.r_comb_2),
        c.best_a.canonical(),
        number(c.best_beta),
        number(c.sigma_star_sq),
        number(c.sum_rate_lower),
        c.cross_check_gap,
        if c.reordered { " reordered" } else { "" }
    );
}

fn rates(units: &Units, gains: &GainArgs, split: &SplitArgs) -> Result<String, Failure> {
    let gains = units.gains(gains)?;
    let split = units.split(&gains, split)?;
    let pair = secure_rates(&gains, &split)?;
    let mut out = String::new();
    describe_rates(&mut out, &split, &pair);
    Ok(out)
}

fn sweep(units: &Units, args: &SweepArgs) -> Result<String, Failure> {
    let template = SweepTemplate {
        h11: units.gain(args.h11),
        h22: units.gain(args.h22),
        ratio: args.ratio,
    };
    let p: Vec<f64> = args.p.iter().map(|&x| units.power(x)).collect();
    let rule = match (args.gamma_sq, args.search_levels) {
        (_, Some(levels)) => SplitRule::Search(SplitGrid::Fractions { levels }),
        (gamma, None) => SplitRule::Symmetric(gamma.map(|g| units.power(g))),
    };
    let points = sdof_sweep(&template, &p, &rule)?;
    let mut out = String::from(SWEEP_HEADER);
    out.push('\n');
    for pt in points {
        let row = [
            pt.p,
            pt.r1,
            pt.r2,
            pt.sum_rate,
            pt.normalizer,
            pt.ratio,
            0.0,
        ]
        .map(number);
        out.push_str(&csv::row(&row));
        out.push('\n');
    }
    Ok(out)
}

fn simulate(units: &Units, args: &SimArgs) -> Result<String, Failure> {
    let fine: [u32; 4] = args
        .fine
        .clone()
        .try_into()
        .expect("clap enforces four values");
    let mut configs = Vec::new();
    for &p in &args.p {
        for &seed in &args.seeds {
            let config =
                masking_config(units.power(p), args.k, fine, args.bins, args.samples, seed)?;
            configs.push(config.with_noise(!args.no_noise));
        }
    }
    // each run owns its generator; rows come back in input order
    let workers = thread::available_parallelism().map_or(1, |n| n.get());
    let mut rows: Vec<latsec_core::Result<String>> = Vec::with_capacity(configs.len());
    for batch in configs.chunks(workers) {
        thread::scope(|s| {
            let handles: Vec<_> = batch
                .iter()
                .map(|c| s.spawn(move || sim::run(c).map(|r| r.csv_row(c))))
                .collect();
            rows.extend(
                handles
                    .into_iter()
                    .map(|h| h.join().expect("simulation thread panicked")),
            );
        });
    }
    let mut out = String::from(sim::CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row?);
        out.push('\n');
    }
    Ok(out)
}

fn search(
    units: &Units,
    gains: &GainArgs,
    levels: usize,
    gamma_sq: &Option<Vec<f64>>,
) -> Result<String, Failure> {
    let gains = units.gains(gains)?;
    let grid = match gamma_sq {
        Some(list) => SplitGrid::Gamma(list.iter().map(|&g| units.power(g)).collect()),
        None => SplitGrid::Fractions { levels },
    };
    let (split, pair) = search_split(&gains, &grid)?;
    let mut out = String::new();
    let _ = writeln!(out, "sum < {}", number(pair.sum()));
    describe_rates(&mut out, &split, &pair);
    Ok(out)
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    let Some(path) = out else {
        print!("{text}");
        return Ok(());
    };
    let path = match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) if path.is_relative() => PathBuf::from(dir).join(path),
        _ => path.clone(),
    };
    std::fs::write(&path, text)
        .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let units = Units { db: cli.db };
    let result = match &cli.command {
        Command::Regime(g) => regime(&units, g),
        Command::Rates { gains, split } => rates(&units, gains, split),
        Command::Sweep(args) => sweep(&units, args),
        Command::Simulate(args) => simulate(&units, args),
        Command::Search {
            gains,
            levels,
            gamma_sq,
        } => search(&units, gains, *levels, gamma_sq),
    }
    .and_then(|text| emit(&text, cli.out.as_ref()));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
