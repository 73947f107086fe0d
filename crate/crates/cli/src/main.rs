//! Command line frontend for the sequence operad calculus.
//!
//! Results print mod 2 by default; `--integral` switches the operad and
//! chain commands to signed integer coefficients. Exit codes: 0 on
//! success, 1 when `verify` finds a failing check, 2 on usage or input
//! errors.

use caesura::hochschild::{cochain_algebra, GradedAlgebra, HochschildComplex};
use caesura::pipeline;
use caesura::simplicial::builtin;
use caesura::Surjection;
use clap::{Parser, Subcommand};
use std::path::Path;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "caesura",
    version,
    about = "Sequence operad calculus on simplicial chains"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the boundary of a surjection, e.g. (1,2,1,3)
    Diff {
        /// The surjection, as a parenthesized value list
        surjection: String,
        /// Keep integer coefficients instead of reducing mod 2
        #[arg(long)]
        integral: bool,
    },
    /// Print the partial composition u ∘ₖ v
    Compose {
        /// The outer surjection
        u: String,
        /// The slot of u to compose into, counted from 1
        k: u32,
        /// The inner surjection
        v: String,
        /// Keep integer coefficients instead of reducing mod 2
        #[arg(long)]
        integral: bool,
    },
    /// Apply a surjection to a chain of a built-in space by interval cuts
    Cut {
        /// The surjection acting on the chain
        surjection: String,
        /// The space, "delta:n" or "sphere:n"
        space: String,
        /// The chain, e.g. "e2" or "01 - 02 + 12"
        chain: String,
        /// Keep integer coefficients instead of reducing mod 2
        #[arg(long)]
        integral: bool,
    },
    /// Print a basis of Hochschild homology in one total degree
    Hh {
        /// A built-in space ("sphere:2", cochain algebra) or a file with
        /// an algebra description
        algebra: String,
        /// The total degree
        degree: usize,
        /// Bar lengths to retain in the complex
        #[arg(long, default_value_t = 8)]
        truncation: usize,
    },
    /// Run the full verification pipeline and report every check
    Verify {
        /// Print the report as JSON instead of text
        #[arg(long)]
        json: bool,
        /// Bar lengths to retain in the Hochschild complex
        #[arg(long, default_value_t = 8)]
        truncation: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Diff {
            surjection,
            integral,
        } => {
            let u: Surjection = surjection.parse()?;
            let d = u.boundary();
            if integral {
                println!("{d}");
            } else {
                println!("{}", d.mod2());
            }
        }
        Command::Compose { u, k, v, integral } => {
            let u: Surjection = u.parse()?;
            let v: Surjection = v.parse()?;
            let c = u.compose(k, &v)?;
            if integral {
                println!("{c}");
            } else {
                println!("{}", c.mod2());
            }
        }
        Command::Cut {
            surjection,
            space,
            chain,
            integral,
        } => {
            let u: Surjection = surjection.parse()?;
            let space = builtin(&space)?;
            let chain = space.parse_chain(&chain)?;
            let tensor = space.interval_cut_action(&u, &chain);
            if integral {
                println!("{}", space.render_tensor(&tensor));
            } else {
                println!("{}", space.render_tensor_mod2(&tensor));
            }
        }
        Command::Hh {
            algebra,
            degree,
            truncation,
        } => {
            let algebra = load_algebra(&algebra)?;
            let complex = HochschildComplex::new(algebra, truncation)?;
            for class in complex.hh_basis(degree)? {
                println!("{}", complex.algebra().render_class(&class));
            }
        }
        Command::Verify { json, truncation } => {
            let report = pipeline::verify(truncation)?;
            if json {
                print!("{}", report.to_json());
            } else {
                print!("{}", report.render_human());
            }
            return Ok(if report.all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            });
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// A built-in space spec yields its cochain algebra, truncated at the top
/// dimension; anything else is read as an algebra description file.
fn load_algebra(spec: &str) -> Result<GradedAlgebra, Box<dyn std::error::Error>> {
    if let Ok(space) = builtin(spec) {
        let top = space.dimension_count() - 1;
        return Ok(cochain_algebra(&space, top));
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| format!("cannot read algebra description {spec}: {e}"))?;
    let name = Path::new(spec)
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| spec.to_string());
    Ok(GradedAlgebra::parse(name, &text)?)
}
