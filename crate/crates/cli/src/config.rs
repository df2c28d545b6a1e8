use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qcat::lie::{LieType, RootSystem};

/// Environment variable naming the directory artifacts go to when
/// `--output` is absent.
pub const OUTPUT_DIR_ENV: &str = "QCAT_OUTPUT_DIR";

#[derive(Debug, Parser)]
#[command(name = "qcat", version, about = "Exact data and axiom checks for quantum-group fusion categories")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Truncated fusion table of the alcove category.
    Fusion(CommonArgs),
    /// S and T matrices.
    Modular(CommonArgs),
    /// Braid image versus centralizer dimension on truncated powers of V.
    Duality(CommonArgs),
    /// Every check available for the category, with a pass/fail report.
    Verify(CommonArgs),
    /// R-symbols on pairs (λ, V) before and after the coboundary twist.
    Twist(CommonArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Fusion(_) => "fusion",
            Command::Modular(_) => "modular",
            Command::Duality(_) => "duality",
            Command::Verify(_) => "verify",
            Command::Twist(_) => "twist",
        }
    }

    pub fn args(&self) -> &CommonArgs {
        match self {
            Command::Fusion(a) | Command::Modular(a) | Command::Duality(a) | Command::Verify(a) | Command::Twist(a) => a,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Pretty => "txt",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Cartan type: A, B, C, D or G2.
    #[arg(long = "type", value_name = "TYPE")]
    pub lie_type: String,
    /// Rank; defaults to 2 for G2 and 1 otherwise.
    #[arg(long)]
    pub rank: Option<usize>,
    #[arg(long)]
    pub level: i64,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
    /// Artifact path; `-` writes to standard output.
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
    /// Largest tensor power for towers and truncation checks.
    #[arg(long, default_value_t = 6)]
    pub n_max: usize,
    /// Random gauges and negative controls in `verify`.
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Where the artifact goes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Destination {
    Stdout,
    File(PathBuf),
}

/// A validated invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: &'static str,
    pub root_system: RootSystem,
    pub level: i64,
    pub format: Format,
    pub destination: Destination,
    pub n_max: usize,
    pub trials: usize,
    pub seed: u64,
}

impl RunConfig {
    pub fn from_cli(cmd: &Command, output_dir: Option<PathBuf>) -> Result<Self, String> {
        let a = cmd.args();
        let lie_type: LieType = a.lie_type.parse().map_err(|e| format!("{e}"))?;
        let rank = a.rank.unwrap_or(if lie_type == LieType::G2 { 2 } else { 1 });
        let root_system = RootSystem::new(lie_type, rank).map_err(|e| format!("{e}"))?;
        if a.level < 1 {
            return Err(format!("level must be positive, got {}", a.level));
        }
        if a.n_max < 2 {
            return Err(format!("--n-max must be at least 2, got {}", a.n_max));
        }
        let label = format!("{}_k{}", type_label(&root_system), a.level);
        let destination = match (&a.output, output_dir) {
            (Some(p), _) if p.as_os_str() == "-" => Destination::Stdout,
            (Some(p), _) => Destination::File(p.clone()),
            (None, Some(dir)) => Destination::File(dir.join(format!("{}_{label}.{}", cmd.name(), a.format.extension()))),
            (None, None) => Destination::Stdout,
        };
        Ok(Self {
            command: cmd.name(),
            root_system,
            level: a.level,
            format: a.format,
            destination,
            n_max: a.n_max,
            trials: a.trials,
            seed: a.seed,
        })
    }

    pub fn type_label(&self) -> String {
        type_label(&self.root_system)
    }

    pub fn is_a1(&self) -> bool {
        self.root_system.lie_type == LieType::A && self.root_system.rank == 1
    }
}

/// `A1`, `B2`, … and plain `G2`.
pub fn type_label(rs: &RootSystem) -> String {
    match rs.lie_type {
        LieType::G2 => "G2".into(),
        t => format!("{t}{}", rs.rank),
    }
}
