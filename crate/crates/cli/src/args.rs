use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "tilekit", version, about = "Decide, construct and certify translational tilings")]
pub struct Cli {
    /// Emit JSON (always on; accepted for compatibility).
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads for parallel searches.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,

    /// Write a run manifest to this file.
    #[arg(long, global = true, value_name = "FILE")]
    pub manifest: Option<PathBuf>,

    /// Re-verify a previously emitted JSON document.
    #[arg(long, value_name = "FILE")]
    pub verify: Option<PathBuf>,

    /// Rejected: every algorithm is deterministic.
    #[arg(long, global = true, hide = true, allow_hyphen_values = true)]
    pub seed: Option<String>,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Does a finite set tile the integers?
    TilesZ(TilesZArgs),
    /// All complements of a set in Z_n.
    Complements(ComplementsArgs),
    /// Vuza canons of Z_n.
    Vuza(VuzaArgs),
    /// Is Z_n a good group?
    GoodGroup(GoodGroupArgs),
    /// Does a finite set tile Z^2?
    TilesZ2(TilesZ2Args),
    /// A tiling of Z^2 by {(0,0),(2,0),(0,2),(2,2)} with no period.
    Aperiodic(AperiodicArgs),
    /// Can the unit square be tiled by two bricks?
    Bricks(BricksArgs),
    /// Check a matrix file for the complex Hadamard property.
    Hadamard(HadamardArgs),
    /// Search dephased Butson matrices BH(k, q).
    Butson(ButsonArgs),
    /// Spectrum and tiling complement of a subset of Z_n^d.
    Spectral(SpectralArgs),
    /// Tile <=> spectral for every subset of Z_n, n <= max-n.
    FugledeSweep(FugledeArgs),
    /// The positive Fejer-kernel sum that tiles the line at level 2.
    Steinhaus(SteinhausArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::TilesZ(_) => "tiles-z",
            Command::Complements(_) => "complements",
            Command::Vuza(_) => "vuza",
            Command::GoodGroup(_) => "good-group",
            Command::TilesZ2(_) => "tiles-z2",
            Command::Aperiodic(_) => "aperiodic",
            Command::Bricks(_) => "bricks",
            Command::Hadamard(_) => "hadamard",
            Command::Butson(_) => "butson",
            Command::Spectral(_) => "spectral",
            Command::FugledeSweep(_) => "fuglede-sweep",
            Command::Steinhaus(_) => "steinhaus",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Stategraph,
    Cyclotomic,
    Both,
}

#[derive(Debug, Args)]
pub struct TilesZArgs {
    /// Comma-separated integers.
    #[arg(long, allow_hyphen_values = true)]
    pub set: String,
    #[arg(long, value_enum, default_value_t = Method::Both)]
    pub method: Method,
    /// Largest diameter handed to the state-graph decider.
    #[arg(long, default_value_t = tilekit::line::DEFAULT_MAX_DIAMETER)]
    pub max_diameter: u64,
    /// Stop the cyclotomic search at this period.
    #[arg(long)]
    pub max_period: Option<u64>,
}

#[derive(Debug, Args)]
pub struct ComplementsArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long, allow_hyphen_values = true)]
    pub set: String,
    #[arg(long)]
    pub limit: Option<usize>,
}

#[derive(Debug, Args)]
pub struct VuzaArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub limit: Option<usize>,
    /// Lift the default limit for n >= 108.
    #[arg(long)]
    pub full: bool,
}

#[derive(Debug, Args)]
pub struct GoodGroupArgs {
    #[arg(long)]
    pub n: u64,
}

#[derive(Debug, Args)]
pub struct TilesZ2Args {
    /// Points as "x,y;x,y;...".
    #[arg(long, allow_hyphen_values = true)]
    pub points: String,
    #[arg(long, default_value_t = 12)]
    pub max_n: u64,
    #[arg(long, default_value_t = 12)]
    pub max_period: u64,
    #[arg(long, default_value_t = 5_000_000)]
    pub node_budget: u64,
}

#[derive(Debug, Args)]
pub struct AperiodicArgs {
    #[arg(long, default_value_t = 20)]
    pub radius: i64,
    /// Also write the document to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BricksArgs {
    /// Brick A as "w x h" with rational sides, e.g. 1/2x1/3.
    #[arg(long)]
    pub a: String,
    #[arg(long)]
    pub b: String,
    /// Include the placements of a tiling.
    #[arg(long)]
    pub construct: bool,
}

#[derive(Debug, Args)]
pub struct HadamardArgs {
    /// Matrix file: {"q", "exponents"}, {"phases"} or {"entries": [[[re, im], ...]]}.
    #[arg(long, value_name = "FILE")]
    pub check: PathBuf,
    #[arg(long, default_value_t = tilekit::spectral::DEFAULT_TOLERANCE)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct ButsonArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub q: u64,
    /// Maximum number of matrices; all when absent.
    #[arg(long)]
    pub limit: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SpectralArgs {
    #[arg(long, required_unless_present = "non_tile_z3_5")]
    pub n: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub d: usize,
    /// "0,1,2" for d = 1, "0,0;1,0" otherwise.
    #[arg(long, allow_hyphen_values = true, required_unless_present = "non_tile_z3_5")]
    pub set: Option<String>,
    /// Build the spectral non-tile in Z_3^5 from a BH(6, 3) matrix.
    #[arg(long, conflicts_with_all = ["n", "set"])]
    pub non_tile_z3_5: bool,
}

#[derive(Debug, Args)]
pub struct FugledeArgs {
    #[arg(long, default_value_t = 12)]
    pub max_n: u64,
}

#[derive(Debug, Args)]
pub struct SteinhausArgs {
    /// Run the positivity and translate-sum checks (the default).
    #[arg(long)]
    pub check: bool,
    /// Translates n with |n| <= N in each sum.
    #[arg(long = "N", default_value_t = 10_000)]
    pub n: u64,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 1e-3)]
    pub step: f64,
    /// Scan f on [0, range].
    #[arg(long, default_value_t = 100.0)]
    pub range: f64,
    #[arg(long, default_value_t = 1e-2)]
    pub tol: f64,
}
