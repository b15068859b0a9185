use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hoeffding_core::{DeviationForm, MgfBoundKind, Sidedness};

/// Seed used when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 0x5EED;

#[derive(Debug, Parser)]
#[command(name = "hoeffding", version, about = "Skew-aware Hoeffding tail bounds for bounded zero-mean sums")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tail-bound report rows for an interval list.
    Bound(BoundArgs),
    /// Certify the MGF bound on one interval over a log-spaced s-grid.
    Lemma(LemmaArgs),
    /// Monte Carlo tail estimate against the improved one-sided bound.
    Simulate(SimulateArgs),
    /// Sample size for an iid family, or deviation for an interval list.
    Invert(InvertArgs),
    /// Improved vs original bound on a grid of deviations.
    Compare(CompareArgs),
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write CSV here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    Sum,
    Mean,
}

impl From<FormArg> for DeviationForm {
    fn from(f: FormArg) -> Self {
        match f {
            FormArg::Sum => DeviationForm::SumForm,
            FormArg::Mean => DeviationForm::MeanForm,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SidedArg {
    One,
    Two,
    Both,
}

impl SidedArg {
    pub fn expand(self) -> Vec<Sidedness> {
        match self {
            SidedArg::One => vec![Sidedness::One],
            SidedArg::Two => vec![Sidedness::Two],
            SidedArg::Both => vec![Sidedness::One, Sidedness::Two],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Improved,
    Original,
    Both,
}

impl KindArg {
    pub fn expand(self) -> Vec<MgfBoundKind> {
        match self {
            KindArg::Improved => vec![MgfBoundKind::Improved],
            KindArg::Original => vec![MgfBoundKind::Original],
            KindArg::Both => vec![MgfBoundKind::Improved, MgfBoundKind::Original],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SingleKind {
    Improved,
    Original,
}

impl From<SingleKind> for MgfBoundKind {
    fn from(k: SingleKind) -> Self {
        match k {
            SingleKind::Improved => MgfBoundKind::Improved,
            SingleKind::Original => MgfBoundKind::Original,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SingleSided {
    One,
    Two,
}

impl From<SingleSided> for Sidedness {
    fn from(s: SingleSided) -> Self {
        match s {
            SingleSided::One => Sidedness::One,
            SingleSided::Two => Sidedness::Two,
        }
    }
}

/// Distribution placed on every interval by `simulate`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DistArg {
    TwoPoint,
    Mixture(f64),
}

fn parse_dist(s: &str) -> Result<DistArg, String> {
    if s == "two-point" {
        return Ok(DistArg::TwoPoint);
    }
    let c = s
        .strip_prefix("mixture:")
        .ok_or_else(|| format!("unknown distribution '{s}' (expected two-point or mixture:<c>)"))?;
    let c: f64 = c.parse().map_err(|_| format!("mixture weight '{c}' is not a number"))?;
    if !(0.0..=1.0).contains(&c) {
        return Err(format!("mixture weight {c} must lie in [0, 1]"));
    }
    Ok(DistArg::Mixture(c))
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|_| format!("seed '{s}' is not a 64-bit unsigned integer"))
}

/// `start:stop:steps`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TGrid {
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

impl TGrid {
    pub fn points(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.start];
        }
        let step = (self.stop - self.start) / (self.steps - 1) as f64;
        let mut pts: Vec<f64> = (0..self.steps).map(|i| self.start + step * i as f64).collect();
        pts[self.steps - 1] = self.stop;
        pts
    }
}

fn parse_t_grid(s: &str) -> Result<TGrid, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [start, stop, steps] = parts[..] else {
        return Err(format!("t-grid '{s}' must look like start:stop:steps"));
    };
    let num = |x: &str| x.trim().parse::<f64>().map_err(|_| format!("'{x}' is not a number"));
    let (start, stop) = (num(start)?, num(stop)?);
    let steps: usize = steps
        .trim()
        .parse()
        .map_err(|_| format!("steps '{steps}' is not a positive integer"))?;
    if !(start.is_finite() && stop.is_finite()) || start <= 0.0 {
        return Err("t-grid start must be positive and finite".into());
    }
    if stop < start {
        return Err(format!("t-grid stop {stop} is below start {start}"));
    }
    if steps < 1 {
        return Err("t-grid needs at least one step".into());
    }
    Ok(TGrid { start, stop, steps })
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    /// Interval-list CSV (header `a,b`).
    #[arg(long)]
    pub intervals: PathBuf,
    #[arg(long, allow_negative_numbers = true)]
    pub t: f64,
    #[arg(long, value_enum, default_value = "sum")]
    pub form: FormArg,
    #[arg(long, value_enum, default_value = "both")]
    pub sided: SidedArg,
    #[arg(long, value_enum, default_value = "both")]
    pub kind: KindArg,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct LemmaArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub a: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub b: f64,
    #[arg(long, allow_negative_numbers = true, default_value_t = 10.0)]
    pub s_max: f64,
    #[arg(long, default_value_t = 200)]
    pub s_steps: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long)]
    pub intervals: PathBuf,
    #[arg(long, allow_negative_numbers = true)]
    pub t: f64,
    #[arg(long, value_enum, default_value = "sum")]
    pub form: FormArg,
    #[arg(long, default_value_t = 100_000)]
    pub reps: u64,
    /// Decimal or 0x-prefixed hexadecimal.
    #[arg(long, value_parser = parse_seed, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// `two-point` or `mixture:<c>` with c in [0, 1].
    #[arg(long, value_parser = parse_dist, default_value = "two-point")]
    pub dist: DistArg,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct InvertArgs {
    /// Lower endpoint of an iid family (sample-size mode).
    #[arg(long, allow_negative_numbers = true, requires_all = ["b", "t"], conflicts_with = "intervals")]
    pub a: Option<f64>,
    #[arg(long, allow_negative_numbers = true, requires = "a")]
    pub b: Option<f64>,
    /// Mean deviation in sample-size mode.
    #[arg(long, allow_negative_numbers = true, requires = "a")]
    pub t: Option<f64>,
    /// Interval list (deviation mode).
    #[arg(long, required_unless_present = "a")]
    pub intervals: Option<PathBuf>,
    #[arg(long, allow_negative_numbers = true)]
    pub delta: f64,
    #[arg(long, value_enum, default_value = "improved")]
    pub kind: SingleKind,
    /// Deviation mode only.
    #[arg(long, value_enum, default_value = "one", conflicts_with = "a")]
    pub sided: SingleSided,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[arg(long)]
    pub intervals: PathBuf,
    /// `start:stop:steps`, evenly spaced and inclusive.
    #[arg(long, value_parser = parse_t_grid)]
    pub t_grid: TGrid,
    #[arg(long, value_enum, default_value = "sum")]
    pub form: FormArg,
    #[arg(long, value_enum, default_value = "one")]
    pub sided: SingleSided,
    #[command(flatten)]
    pub output: Output,
}
