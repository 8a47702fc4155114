use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use exact_core::{parse_scalar, parse_scalar_list, Scalar};
use identity_suites::Suite;

#[derive(Debug, Parser)]
#[command(name = "integrable-lab", version, about = "Exact identity checks for q-boson, Toda and Hall-Littlewood structures")]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = OutputMode::Human)]
    pub output: OutputMode,
    /// Flat `key = value` file of default flags; explicit flags override it.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Stores the flags of this invocation in a config file.
    #[arg(long, global = true, value_name = "PATH")]
    pub save_config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Human,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Runs a named identity suite.
    Verify(VerifyArgs),
    /// Evaluates a symmetric polynomial at rational points.
    Eval(EvalArgs),
    /// Dumps an operator as a graded, basis-labelled matrix.
    Matrix(MatrixArgs),
    /// Solves a periodic Bethe system numerically and checks the eigenvectors.
    Bethe(BetheArgs),
    /// Compares the truncated Gaudin sum with its determinant form.
    Gaudin(GaudinArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite name.
    #[arg(value_parser = suite)]
    pub suite: Suite,
    /// Draw seed; defaults to INTEGRABLE_LAB_SEED, then 0.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub draws: Option<usize>,
    /// Sites, or alphabet length for symmetric function suites.
    #[arg(long = "N")]
    pub sites: Option<usize>,
    /// Particles, Bethe magnons or Gaudin size.
    #[arg(long = "n")]
    pub particles: Option<usize>,
    #[arg(long)]
    pub cap: Option<usize>,
    #[arg(long)]
    pub degree: Option<usize>,
    #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
    pub t: Option<Scalar>,
    #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
    pub x: Option<Scalar>,
    /// Numeric tolerance for floating-point suites.
    #[arg(long)]
    pub tolerance: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EvalKind {
    #[value(name = "P")]
    P,
    #[value(name = "Q")]
    Q,
    #[value(name = "R")]
    R,
    Skew,
    Qr,
    Er,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SkewChoice {
    P,
    QOmega,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    pub kind: EvalKind,
    /// Partition such as `[2,1]`.
    #[arg(long)]
    pub lambda: Option<String>,
    /// Lower partition for `skew`, or an integer exponent tuple such as `(1,0)` for `R`.
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    /// Comma-separated rational variables.
    #[arg(long, value_parser = scalar_list, allow_hyphen_values = true)]
    pub vars: ScalarList,
    #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
    pub t: Scalar,
    /// Coefficient index for `qr` and `er`.
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long, value_enum, default_value_t = SkewChoice::P)]
    pub skew_kind: SkewChoice,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixKind {
    Lambda,
    Q,
    Gamma,
    Lax,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyChoice {
    #[value(name = "L")]
    L,
    #[value(name = "R")]
    R,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LaxChoice {
    Qboson,
    Spin,
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    pub which: MatrixKind,
    #[arg(long = "N", default_value_t = 2)]
    pub sites: usize,
    #[arg(long = "n", default_value_t = 2)]
    pub particles: usize,
    #[arg(long, value_parser = scalar, allow_hyphen_values = true, default_value = "1/3")]
    pub t: Scalar,
    #[arg(long, value_parser = scalar, allow_hyphen_values = true, default_value = "2")]
    pub x: Scalar,
    #[arg(long, value_enum, default_value_t = FamilyChoice::L)]
    pub family: FamilyChoice,
    /// `-` creates boxes, `+` removes them.
    #[arg(long, value_parser = sign, allow_hyphen_values = true, default_value = "-")]
    pub sign: vertex_operators::Sign,
    /// Weight cap of the partition basis.
    #[arg(long = "D", default_value_t = 3)]
    pub weight_cap: usize,
    #[arg(long, value_enum, default_value_t = LaxChoice::Qboson)]
    pub lax_kind: LaxChoice,
    /// Spin for the spin-s Lax operator.
    #[arg(long, value_parser = scalar, allow_hyphen_values = true, default_value = "0")]
    pub s: Scalar,
    /// Occupation cap of the single-site space.
    #[arg(long, default_value_t = 3)]
    pub cap: usize,
}

#[derive(Debug, Args)]
pub struct BetheArgs {
    #[arg(long = "N")]
    pub sites: usize,
    #[arg(long = "M")]
    pub magnons: usize,
    #[arg(long, value_parser = scalar, allow_hyphen_values = true, default_value = "1/3")]
    pub t: Scalar,
    #[arg(long, value_parser = scalar, allow_hyphen_values = true, default_value = "1")]
    pub x: Scalar,
    #[arg(long, value_parser = scalar, allow_hyphen_values = true, default_value = "0")]
    pub s: Scalar,
    /// Spectral parameter of the eigenvector check.
    #[arg(long, value_parser = scalar, allow_hyphen_values = true, default_value = "1/5")]
    pub z: Scalar,
    /// Random starting points.
    #[arg(long, default_value_t = 20)]
    pub seeds: usize,
    /// Seed of the starting points; defaults to INTEGRABLE_LAB_SEED, then 0.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = 100)]
    pub max_iterations: usize,
    /// Bound on the Bethe equation residuals.
    #[arg(long, default_value_t = 1e-10)]
    pub tolerance: f64,
}

#[derive(Debug, Args)]
pub struct GaudinArgs {
    #[arg(long, value_parser = scalar_list, allow_hyphen_values = true)]
    pub u: ScalarList,
    #[arg(long, value_parser = scalar_list, allow_hyphen_values = true)]
    pub v: ScalarList,
    #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
    pub t: Scalar,
    #[arg(long, value_parser = scalar, allow_hyphen_values = true, default_value = "0")]
    pub s: Scalar,
    #[arg(long, default_value_t = 60)]
    pub truncation: usize,
}

/// A parsed comma-separated list, kept as one flag value.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarList(pub Vec<Scalar>);

fn scalar(text: &str) -> Result<Scalar, String> {
    parse_scalar(text).map_err(|e| e.to_string())
}

fn scalar_list(text: &str) -> Result<ScalarList, String> {
    parse_scalar_list(text).map(ScalarList).map_err(|e| e.to_string())
}

fn suite(text: &str) -> Result<Suite, String> {
    text.parse::<Suite>().map_err(|e| {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("{e}; known suites: {}", names.join(", "))
    })
}

fn sign(text: &str) -> Result<vertex_operators::Sign, String> {
    match text {
        "-" | "minus" => Ok(vertex_operators::Sign::Minus),
        "+" | "plus" => Ok(vertex_operators::Sign::Plus),
        other => Err(format!("expected `-` or `+`, found `{other}`")),
    }
}
