use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use preoperad::harness::{
    parse_algebra, run_axioms, run_cohomology, run_gerstenhaber, run_identities, MuMode, Report,
    RunConfig,
};

#[derive(Parser)]
#[command(
    name = "preoperad",
    version,
    about = "Exact checks and cohomology for linear pre-operads over finite-dimensional algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MuArg {
    Table,
    Random,
}

#[derive(Subcommand)]
enum Command {
    /// Check the pre-operad axioms on seeded random cochains.
    Axioms {
        /// JSON algebra file.
        file: PathBuf,
        #[arg(long, default_value_t = 200)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "max-arity", default_value_t = 3)]
        max_arity: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the full identity catalog (axioms plus every derived identity).
    Identities {
        file: PathBuf,
        #[arg(long, default_value_t = 200)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "max-arity", default_value_t = 3)]
        max_arity: u32,
        /// Use the algebra's multiplication table or a seeded random one.
        #[arg(long, value_enum, default_value_t = MuArg::Table)]
        mu: MuArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compute cohomology dimensions of the coboundary complex.
    Cohomology {
        file: PathBuf,
        #[arg(long = "max-degree", default_value_t = 4)]
        max_degree: usize,
        /// Print deterministic representatives per degree.
        #[arg(long = "show-basis")]
        show_basis: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Tabulate and verify the induced graded structure on cohomology.
    Gerstenhaber {
        file: PathBuf,
        #[arg(long = "max-degree", default_value_t = 4)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn emit(report: &Report, format: Format) -> ExitCode {
    match format {
        Format::Text => print!("{}", report.render_text()),
        Format::Json => println!("{}", report.to_json()),
    }
    ExitCode::from(report.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Axioms {
            file,
            samples,
            seed,
            max_arity,
            format,
        } => {
            let cfg = RunConfig {
                samples: *samples,
                seed: *seed,
                max_arity: *max_arity,
                ..RunConfig::default()
            };
            parse_algebra(file)
                .and_then(|alg| run_axioms(&alg, &file.display().to_string(), &cfg))
                .map(|r| (r, *format))
        }
        Command::Identities {
            file,
            samples,
            seed,
            max_arity,
            mu,
            format,
        } => {
            let cfg = RunConfig {
                samples: *samples,
                seed: *seed,
                max_arity: *max_arity,
                ..RunConfig::default()
            };
            let mode = match mu {
                MuArg::Table => MuMode::Table,
                MuArg::Random => MuMode::Random,
            };
            parse_algebra(file)
                .and_then(|alg| run_identities(&alg, &file.display().to_string(), &cfg, mode))
                .map(|r| (r, *format))
        }
        Command::Cohomology {
            file,
            max_degree,
            show_basis,
            format,
        } => parse_algebra(file)
            .and_then(|alg| {
                run_cohomology(&alg, &file.display().to_string(), *max_degree, *show_basis)
            })
            .map(|r| (r, *format)),
        Command::Gerstenhaber {
            file,
            max_degree,
            format,
        } => parse_algebra(file)
            .and_then(|alg| run_gerstenhaber(&alg, &file.display().to_string(), *max_degree))
            .map(|r| (r, *format)),
    };

    match result {
        Ok((report, format)) => emit(&report, format),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
