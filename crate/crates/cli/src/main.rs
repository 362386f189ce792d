//! Command-line driver: compute tables, re-run verification suites, and
//! print the three factor matrices.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or unsupported
//! type, 3 data-file error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use weylpsi::{build_document, render_matrix, render_text, verify_type, Suite, WhichMatrix};
use weylpsi_core::coxeter::CartanType;
use weylpsi_core::error::{Error, Result};
use weylpsi_core::psi::PsiContext;

#[derive(Parser)]
#[command(
    name = "weylpsi",
    version,
    about = "Exact class-to-character polynomial tables for Weyl groups"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the value table and unipotent assignments for one type.
    Compute {
        /// Cartan type, e.g. B2.
        #[arg(long = "type")]
        typename: String,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Re-run verification suites and report PASS/FAIL per check.
    Verify {
        /// Cartan type, or "all" for every supported type.
        #[arg(long = "type")]
        typename: String,
        /// Which suite to run.
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
    /// Print one factor matrix with row and column labels.
    Matrices {
        /// Cartan type, e.g. A1.
        #[arg(long = "type")]
        typename: String,
        /// Which factor to print.
        #[arg(long, value_enum)]
        which: WhichArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Golden,
    Invariants,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichArg {
    #[value(name = "A")]
    A,
    #[value(name = "Aprime")]
    Aprime,
    #[value(name = "Adoubleprime")]
    Adoubleprime,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::UnknownType(_) | Error::Unsupported(_) => 2,
                Error::Data(_) | Error::Io(_) => 3,
                _ => 1,
            })
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.cmd {
        Cmd::Compute { typename, format } => {
            let ctx = PsiContext::new(CartanType::parse(&typename)?)?;
            match format {
                Format::Text => print!("{}", render_text(&ctx)?),
                Format::Json => {
                    let doc = build_document(&ctx, env!("CARGO_PKG_VERSION"))?;
                    let rendered = serde_json::to_string_pretty(&doc)
                        .map_err(|e| Error::Invariant(e.to_string()))?;
                    println!("{rendered}");
                }
            }
            Ok(true)
        }
        Cmd::Verify { typename, suite } => {
            let suite = match suite {
                SuiteArg::Golden => Suite::Golden,
                SuiteArg::Invariants => Suite::Invariants,
                SuiteArg::All => Suite::All,
            };
            let names: Vec<String> = if typename == "all" {
                CartanType::supported_names()
                    .iter()
                    .map(|s| s.to_string())
                    .collect()
            } else {
                vec![typename]
            };
            let mut ok = true;
            for name in &names {
                let mut report = String::new();
                ok &= verify_type(name, suite, &mut report)?;
                print!("{report}");
            }
            Ok(ok)
        }
        Cmd::Matrices { typename, which } => {
            let ctx = PsiContext::new(CartanType::parse(&typename)?)?;
            let which = match which {
                WhichArg::A => WhichMatrix::Left,
                WhichArg::Aprime => WhichMatrix::Middle,
                WhichArg::Adoubleprime => WhichMatrix::Right,
            };
            print!("{}", render_matrix(&ctx, which));
            Ok(true)
        }
    }
}
