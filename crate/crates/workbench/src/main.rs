use std::path::Path;
use std::process::ExitCode;
use std::rc::Rc;

use clap::{Parser, Subcommand, ValueEnum};
use ydl_core::hopf::HopfAlgebra;
use ydl_core::ydl::Variant;
use ydl_workbench::catalog;
use ydl_workbench::format::{load_hopf, load_r_matrix, load_zeta};
use ydl_workbench::report::{render_machine, render_text};
use ydl_workbench::suite::{run_suite, SuiteKind, SuiteOptions};

#[derive(Parser)]
#[command(
    name = "ydl",
    version,
    about = "Exact axiom workbench for Hopf algebras and Yetter-Drinfel'd-Long bimodules"
)]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Commands {
    /// Run a named check suite on an algebra instance
    Check {
        /// hopf | ydl | symmetry | pseudosymmetry | u | qt | cqt | roundtrip | all
        suite: String,
        /// Catalog key (k, c2, c3, c2c2, s3, dual_s3, sweedler,
        /// c2_tensor_c2) or path to an algebra JSON file
        #[arg(long)]
        algebra: String,
        /// R-matrix: catalog key (unit, r0) or path to a JSON file
        #[arg(long)]
        r: Option<String>,
        /// Bilinear form: catalog key (eps, sign) or path to a JSON file
        #[arg(long)]
        zeta: Option<String>,
        /// Restrict the ydl suite to one of the four variant structures
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        variant: Option<u8>,
        /// Report style
        #[arg(long, value_enum, default_value = "text")]
        report: ReportFormat,
        /// Load the algebra without validating the Hopf axioms
        #[arg(long)]
        unchecked: bool,
    },
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn resolve_algebra(spec: &str, unchecked: bool) -> Result<(String, Rc<HopfAlgebra>), String> {
    if let Some(h) = catalog::algebra(spec) {
        return Ok((spec.to_string(), h));
    }
    let path = Path::new(spec);
    if !path.exists() {
        return Err(format!(
            "{spec:?} is neither a catalog key ({}) nor an existing file",
            catalog::ALGEBRA_KEYS.join(", ")
        ));
    }
    let h = load_hopf(path, unchecked).map_err(|e| e.to_string())?;
    let label = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| spec.to_string());
    Ok((label, h.into_rc()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Commands::Check {
            suite,
            algebra,
            r,
            zeta,
            variant,
            report,
            unchecked,
        } => {
            let kind: SuiteKind = match suite.parse() {
                Ok(k) => k,
                Err(e) => return fail(e),
            };
            let (label, h) = match resolve_algebra(&algebra, unchecked) {
                Ok(x) => x,
                Err(e) => return fail(e),
            };
            let mut opts = SuiteOptions::default();
            if let Some(spec) = r {
                opts.r = match catalog::r_matrix(&spec, &h) {
                    Some(r) => Some(r),
                    None => match load_r_matrix(&h, Path::new(&spec)) {
                        Ok(r) => Some(r),
                        Err(e) => return fail(e),
                    },
                };
            }
            if let Some(spec) = zeta {
                opts.zeta = match catalog::zeta_form(&spec, &h) {
                    Some(z) => Some(z),
                    None => match load_zeta(&h, Path::new(&spec)) {
                        Ok(z) => Some(z),
                        Err(e) => return fail(e),
                    },
                };
            }
            opts.variant = variant.and_then(Variant::from_index);

            let result = match run_suite(kind, &label, &h, &opts) {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
            let rendered = match report {
                ReportFormat::Text => render_text(&result),
                ReportFormat::Machine => render_machine(&result),
            };
            print!("{rendered}");
            if result.overall {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
