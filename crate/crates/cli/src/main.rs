mod commands;
mod config;
mod error;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use barut_core::algebra::Representation;
use barut_core::barut::{BarutParams, Branch};
use barut_core::fgm::FieldFamily;
use barut_core::verify::{Suite, VerifyOptions};
use clap::{Parser, Subcommand};
use num_complex::Complex64;

use commands::{FieldArgs, InvariantArgs, Outcome, Rendered, SpectrumArgs};
use config::OutputFormat;
use error::CliError;

#[derive(Parser)]
#[command(name = "barut-kit", version, about = "Spectra, invariants and identity checks for the Barut equations")]
struct Cli {
    /// JSON configuration file (BARUT_KIT_CONFIG takes precedence).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    output: Option<OutputFormat>,
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Mass spectrum of the second- or third-order operator.
    Spectrum {
        #[arg(long, allow_hyphen_values = true)]
        a: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        b: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        b1: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        b2: f64,
        #[arg(long, allow_hyphen_values = true)]
        m: f64,
        #[arg(long)]
        third_order: bool,
        #[arg(long, default_value = "++", value_parser = parse_branch, allow_hyphen_values = true)]
        branch: Branch,
        #[arg(long, default_value = "chiral", value_parser = parse_rep)]
        rep: Representation,
    },
    /// Electron, muon and tau masses.
    Leptons {
        #[arg(long)]
        alpha_inverse: Option<f64>,
        #[arg(long)]
        electron_mass: Option<f64>,
    },
    /// Energy, charge and tensor samples of a mode set.
    Invariants {
        modeset: PathBuf,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        alpha1_re: f64,
        #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
        alpha1_im: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        alpha2: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        alpha3: f64,
        /// Defaults to the on-shell value for the set's mass.
        #[arg(long, allow_hyphen_values = true)]
        alpha4: Option<f64>,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        time: f64,
        /// Cross-check against an n³ quadrature.
        #[arg(long)]
        quadrature: Option<usize>,
    },
    /// γ matrices in the requested representation.
    Transform {
        #[arg(long, value_parser = parse_rep)]
        rep: Representation,
    },
    /// Squared Dirac operator identity and chirality in a background field.
    FgmCheck {
        #[arg(long, value_parser = parse_family)]
        field: FieldFamily,
        #[arg(long, default_value_t = 1.0)]
        mass: f64,
        #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
        charge: f64,
        /// a₀,a₁,a₂,a₃
        #[arg(long, default_value = "0.2,0.1,-0.4,0.3", value_parser = parse_list::<4>, allow_hyphen_values = true)]
        potential: [f64; 4],
        /// F₀₁,F₀₂,F₀₃,F₁₂,F₁₃,F₂₃
        #[arg(long, default_value = "0.3,0,0,0.8,0,-0.2", value_parser = parse_list::<6>, allow_hyphen_values = true)]
        strength: [f64; 6],
    },
    /// Run identity and invariant suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, hide = true)]
        corrupt_unitary: bool,
    },
}

fn parse_branch(s: &str) -> Result<Branch, String> {
    s.parse()
}

fn parse_rep(s: &str) -> Result<Representation, String> {
    s.parse()
}

fn parse_family(s: &str) -> Result<FieldFamily, String> {
    s.parse().map_err(|e: barut_core::Error| e.to_string())
}

fn parse_list<const N: usize>(s: &str) -> Result<[f64; N], String> {
    let v: Vec<f64> = s.split(',').map(|x| x.trim().parse::<f64>().map_err(|e| format!("`{x}`: {e}"))).collect::<Result<_, _>>()?;
    v.try_into().map_err(|v: Vec<f64>| format!("expected {N} comma-separated numbers, got {}", v.len()))
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let mut cfg = config::load(cli.config.as_deref())?;
    if let Some(t) = cli.tolerance {
        cfg.tolerance = t;
    }
    if let Some(o) = cli.output {
        cfg.output_format = Some(o);
    }
    if let Command::Leptons { alpha_inverse, electron_mass } = &cli.command {
        cfg.alpha_inverse = alpha_inverse.unwrap_or(cfg.alpha_inverse);
        cfg.electron_mass_mev = electron_mass.unwrap_or(cfg.electron_mass_mev);
    }
    cfg.validate()?;
    let csv_out = cfg.output_format == Some(OutputFormat::Csv);
    let no_csv = |name: &str| {
        if csv_out {
            Err(CliError::Usage(format!("csv output is not available for `{name}`")))
        } else {
            Ok(())
        }
    };
    match cli.command {
        Command::Spectrum { a, b, b1, b2, m, third_order, branch, rep } => {
            if !third_order && (b1 != 0.0 || b2 != 0.0) {
                return Err(CliError::Usage("--b1/--b2 require --third-order".into()));
            }
            let params = BarutParams { a, b, b1, b2, m };
            commands::spectrum(&SpectrumArgs { params, third_order, branch, rep }, csv_out)
        }
        Command::Leptons { .. } => commands::leptons(&cfg, csv_out),
        Command::Invariants { modeset, alpha1_re, alpha1_im, alpha2, alpha3, alpha4, time, quadrature } => {
            no_csv("invariants")?;
            let set = commands::read_mode_set(&modeset, &cfg)?;
            let args = InvariantArgs { alpha1: Complex64::new(alpha1_re, alpha1_im), alpha2, alpha3, alpha4, time, quadrature };
            commands::invariants_cmd(&set, &args)
        }
        Command::Transform { rep } => commands::transform(rep, cfg.tolerance, csv_out),
        Command::FgmCheck { field, mass, charge, potential, strength } => {
            no_csv("fgm-check")?;
            if !(mass > 0.0) {
                return Err(CliError::Usage(format!("--mass must be positive, got {mass}")));
            }
            commands::fgm_check(&FieldArgs { family: field, mass, charge, potential, strength }, cfg.tolerance)
        }
        Command::Verify { suite, seed, corrupt_unitary } => {
            no_csv("verify")?;
            let suites = Suite::parse_selection(&suite)?;
            let mut opts = VerifyOptions { tolerance: cfg.tolerance, corrupt_majorana: corrupt_unitary, ..Default::default() };
            if let Some(s) = seed {
                opts.seed = s;
            }
            commands::verify(&suites, &opts, cfg.output_format == Some(OutputFormat::Json))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(outcome) => {
            match outcome.rendered {
                Rendered::Json(v) => print!("{}", output::render(&v)),
                Rendered::Text(s) => print!("{s}"),
            }
            match outcome.failure {
                Some(name) => {
                    let e = CliError::Verification(name);
                    eprintln!("error: {e}");
                    e.exit_code()
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
