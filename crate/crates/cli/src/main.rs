//! `dynsym`: run the verification suites, print spectra and dump tables.

mod args;

use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use dynsym::landau::LandauFrame;
use dynsym::suite::{self, OutputFormat, SuiteConfig};

use args::{Cli, Command, DumpTarget, SpectrumTarget, VerifyArgs};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn load_config(path: Option<&Path>) -> Result<SuiteConfig, String> {
    let Some(path) = path else { return Ok(SuiteConfig::default()) };
    let text = std::fs::read_to_string(path).map_err(|e| format!("reading {}: {e}", path.display()))?;
    toml::from_str(&text).map_err(|e| format!("parsing {}: {e}", path.display()))
}

fn apply_flags(mut cfg: SuiteConfig, v: &VerifyArgs) -> SuiteConfig {
    if let Some(s) = v.seed {
        cfg.seed = s;
    }
    if let Some(t) = v.trials {
        cfg.trials = t;
    }
    if let Some(c) = v.fock_cutoff_2mode {
        cfg.fock_cutoff_2mode = c;
    }
    if let Some(c) = v.fock_cutoff_4mode {
        cfg.fock_cutoff_4mode = c;
    }
    if let Some(t) = v.tolerance {
        cfg.tolerance_numeric = t;
    }
    if let Some(m) = v.ks_mode {
        cfg.ks_mode = m.into();
    }
    if let Some(p) = v.presentation {
        cfg.presentation = Some(p.into());
    }
    if let Some(f) = v.format {
        cfg.output = f.into();
    }
    cfg
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), String> {
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("writing {}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json(v: &impl serde::Serialize) -> Result<String, String> {
    serde_json::to_string_pretty(v).map(|s| s + "\n").map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Verify(v) => {
            let cfg = apply_flags(load_config(cli.config.as_deref())?, &v);
            cfg.validate().map_err(|e| e.to_string())?;
            let report = suite::run_suite(v.suite.into(), &cfg).map_err(|e| e.to_string())?;
            let mut text = suite::emit_report(&report, cfg.output).map_err(|e| e.to_string())?;
            if cfg.output == OutputFormat::Json {
                text.push('\n');
            }
            emit(&text, v.output.as_deref())?;
            Ok(if report.passed() { 0 } else { EXIT_FAIL })
        }
        Command::Spectrum { target: SpectrumTarget::Landau(s) } => {
            let frame = match (s.field_gauss, s.mass, s.charge) {
                (None, None, None) => None,
                (Some(b), m, e) => Some(
                    LandauFrame::gaussian(
                        b,
                        m.unwrap_or(dynsym::landau::ELECTRON_MASS_G),
                        e.unwrap_or(dynsym::landau::ELECTRON_CHARGE_ESU),
                    )
                    .map_err(|e| e.to_string())?,
                ),
                (None, _, _) => return Err("--mass and --charge need --field-gauss".into()),
            };
            let report = suite::spectrum_report(s.cutoff, frame).map_err(|e| e.to_string())?;
            let text = match s.format.map(OutputFormat::from).unwrap_or_default() {
                OutputFormat::Json => json(&report)?,
                OutputFormat::Text => report.to_text(),
            };
            emit(&text, s.output.as_deref())?;
            Ok(0)
        }
        Command::Dump(d) => {
            let value = match d.target {
                DumpTarget::Sigma => suite::dump_sigma(),
                DumpTarget::Generators => suite::dump_generators(d.presentation.map(Into::into)),
                DumpTarget::StructureConstants => suite::dump_structure_constants(),
            }
            .map_err(|e| e.to_string())?;
            emit(&json(&value)?, d.output.as_deref())?;
            Ok(0)
        }
    }
}
