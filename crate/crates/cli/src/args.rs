use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dynsym::landau::Presentation;
use dynsym::suite::{OutputFormat, Suite};
use dynsym::transforms::KsMode;

#[derive(Debug, Parser)]
#[command(name = "dynsym", version, about = "Exact checks of dynamical-symmetry algebras")]
pub struct Cli {
    /// TOML file with suite defaults.
    #[arg(long, global = true, env = "DYNSYM_CONFIG")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one suite or all of them.
    Verify(VerifyArgs),
    /// Print a truncated spectrum.
    Spectrum {
        #[command(subcommand)]
        target: SpectrumTarget,
    },
    /// Write exact tables as JSON.
    Dump(DumpArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: SuiteArg,
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long = "fock-cutoff-2mode")]
    pub fock_cutoff_2mode: Option<usize>,
    #[arg(long = "fock-cutoff-4mode")]
    pub fock_cutoff_4mode: Option<usize>,
    #[arg(long)]
    pub tolerance: Option<f64>,
    #[arg(long, value_enum)]
    pub ks_mode: Option<KsModeArg>,
    /// Restrict the so23 suite to one presentation.
    #[arg(long, value_enum)]
    pub presentation: Option<PresentationArg>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum SpectrumTarget {
    /// Eigenvalues of H/(ħω) on two truncated oscillator modes.
    Landau(LandauArgs),
}

#[derive(Debug, Args)]
pub struct LandauArgs {
    #[arg(long, default_value_t = 12)]
    pub cutoff: usize,
    /// Field strength in gauss; mass and charge default to the electron.
    #[arg(long)]
    pub field_gauss: Option<f64>,
    /// Mass in grams.
    #[arg(long)]
    pub mass: Option<f64>,
    /// Charge in esu.
    #[arg(long)]
    pub charge: Option<f64>,
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DumpArgs {
    #[arg(value_enum)]
    pub target: DumpTarget,
    #[arg(long, value_enum, default_value = "json")]
    pub format: JsonOnly,
    /// Only this presentation (generators).
    #[arg(long, value_enum)]
    pub presentation: Option<PresentationArg>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum DumpTarget {
    Sigma,
    Generators,
    StructureConstants,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum JsonOnly {
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SuiteArg {
    All,
    Weyl,
    So23,
    Landau,
    Jordan,
    Tkk,
    Hydrogen,
    Spinor,
    Transforms,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Weyl => Suite::Weyl,
            SuiteArg::So23 => Suite::So23,
            SuiteArg::Landau => Suite::Landau,
            SuiteArg::Jordan => Suite::Jordan,
            SuiteArg::Tkk => Suite::Tkk,
            SuiteArg::Hydrogen => Suite::Hydrogen,
            SuiteArg::Spinor => Suite::Spinor,
            SuiteArg::Transforms => Suite::Transforms,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => OutputFormat::Text,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KsModeArg {
    PaperLiteral,
    HopfNormalized,
}

impl From<KsModeArg> for KsMode {
    fn from(m: KsModeArg) -> Self {
        match m {
            KsModeArg::PaperLiteral => KsMode::PaperLiteral,
            KsModeArg::HopfNormalized => KsMode::HopfNormalized,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum PresentationArg {
    Phase,
    Holomorphic,
    Oscillator,
    Spinorial,
}

impl From<PresentationArg> for Presentation {
    fn from(p: PresentationArg) -> Self {
        match p {
            PresentationArg::Phase => Presentation::Phase,
            PresentationArg::Holomorphic => Presentation::Holomorphic,
            PresentationArg::Oscillator => Presentation::Oscillator,
            PresentationArg::Spinorial => Presentation::Spinorial,
        }
    }
}
