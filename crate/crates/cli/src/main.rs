//! `hyperalg`: check, compute with and enumerate finite hyperstructures
//! described in `.hyp` files.
//!
//! Exit codes: 0 when every check passes, 1 on a semantic failure (an axiom
//! or theorem fails, a precondition is unmet, a budget is exceeded), 2 on
//! usage or parse errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "hyperalg", version, about = "Finite hypergroups, Krasner hyperfields and hypervector spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Equal,
    Inclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Laws,
    Linalg,
    Basis,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    #[value(name = "hypergroup")]
    Hypergroup,
    #[value(name = "commutative-hypergroup")]
    CommutativeHypergroup,
    #[value(name = "hyperfield")]
    Hyperfield,
}

#[derive(Args, Debug, Clone)]
struct Shared {
    /// Structure file in the `.hyp` format.
    file: PathBuf,
    /// Block to operate on (defaults to every block, or the only space).
    #[arg(long, visible_alias = "space")]
    structure: Option<String>,
    /// How distributivity is checked in hyperfields.
    #[arg(long, value_enum, default_value = "equal")]
    distributive: Mode,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate every structure (or one) against its axioms.
    Check(Shared),
    /// Union of the linear combinations of the given vectors.
    Span {
        #[command(flatten)]
        shared: Shared,
        #[arg(long, num_args = 1.., value_delimiter = ',', required = true)]
        vectors: Vec<String>,
    },
    /// Smallest set containing the vectors closed under addition and scalars.
    Closure {
        #[command(flatten)]
        shared: Shared,
        #[arg(long, num_args = 0.., value_delimiter = ',')]
        vectors: Vec<String>,
    },
    /// Linear dependence of a vector list, with a witness.
    Depend {
        #[command(flatten)]
        shared: Shared,
        #[arg(long, num_args = 1.., value_delimiter = ',', required = true)]
        vectors: Vec<String>,
    },
    /// Extend an independent list (possibly empty) to a basis.
    Basis {
        #[command(flatten)]
        shared: Shared,
        #[arg(long, num_args = 0.., value_delimiter = ',')]
        vectors: Vec<String>,
    },
    /// Dimension of the space.
    Dim(Shared),
    /// Linear sum of two subspaces given by their members.
    Sum {
        #[command(flatten)]
        shared: Shared,
        #[arg(long, num_args = 1.., value_delimiter = ',', required = true)]
        left: Vec<String>,
        #[arg(long, num_args = 1.., value_delimiter = ',', required = true)]
        right: Vec<String>,
    },
    /// Exhaustive census of small structures, written as a `.hyp` file.
    Enumerate {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        order: usize,
        /// Restrict a hypergroup census to commutative tables.
        #[arg(long)]
        commutative: bool,
        /// Worker threads (defaults to the number of CPUs).
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long, value_enum, default_value = "equal")]
        distributive: Mode,
        /// Write the census here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the theorem harness.
    Verify {
        #[command(flatten)]
        shared: Shared,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
    },
    /// Print a built-in hyperfield and, with `--power`, its product space.
    Builtin {
        /// K2, S3 or GFp(p).
        name: String,
        #[arg(long)]
        power: Option<usize>,
    },
}

#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Semantic(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Semantic(_) => 1,
            Failure::Usage(_) => 2,
        }
    }
}

impl From<hyperalg::Error> for Failure {
    fn from(e: hyperalg::Error) -> Self {
        Failure::Semantic(e.to_string())
    }
}

/// What a command printed and whether its checks passed.
struct Outcome {
    text: String,
    ok: bool,
}

fn read(path: &PathBuf) -> Result<hyperalg::format::StructureFile, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    hyperalg::format::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}
