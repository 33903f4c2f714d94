use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tempfile::NamedTempFile;

use operad_cli::builtins::{self, Loaded};
use operad_cli::checks;
use operad_cli::commands::{self, Options, Output};
use operad_cli::error::{CliError, Result};
use operad_core::trees::Mode;

#[derive(Parser)]
#[command(
    name = "cohere",
    version,
    about = "Relation modules, coherence constraints and Tel-A-graphs of quadratic operads"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    NonSigma,
    Symmetric,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::NonSigma => Mode::NonSigma,
            ModeArg::Symmetric => Mode::Symmetric,
        }
    }
}

#[derive(Args)]
struct Common {
    /// Builtin presentation name or path to a .pres file
    presentation: String,
    /// Reinterpret the presentation in this mode (drops published labels)
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    /// Directory for output files
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Use canonical labels instead of the published ones
    #[arg(long)]
    no_aliases: bool,
}

#[derive(Args)]
struct WithArity {
    #[command(flatten)]
    common: Common,
    /// Arity n
    #[arg(default_value_t = 4)]
    n: usize,
    /// Allow arities above the cap
    #[arg(long)]
    force: bool,
}

#[derive(Subcommand)]
enum Command {
    /// List tree and relation-module bases
    Basis(WithArity),
    /// Assemble pi(n), write it as CSV and report its kernel
    Pimatrix {
        #[command(flatten)]
        a: WithArity,
        /// Also print the CSV
        #[arg(long)]
        csv: bool,
    },
    /// Coherence constraints up to arity n
    Coherence(WithArity),
    /// Tel-A-graph of pi(n)
    Graph {
        #[command(flatten)]
        a: WithArity,
        /// Build the dual graph (vertices are relations)
        #[arg(long)]
        dual: bool,
        /// Orient edges and report cycles or component sums
        #[arg(long)]
        orient: bool,
        /// Write a DOT file
        #[arg(long)]
        dot: bool,
    },
    /// Quadratic dual and Koszulness checks
    Koszul(Common),
    /// Word equations from a decorated Tel-A-graph
    Words {
        #[command(flatten)]
        a: WithArity,
        /// `derived`, a builtin label set, or a path
        #[arg(long)]
        labels: String,
    },
    /// Run every acceptance criterion
    CheckAll,
}

fn options(c: &Common, force: bool) -> Options {
    Options { mode: c.mode.map(Mode::from), force, no_aliases: c.no_aliases, ..Options::default() }
}

fn io(path: &Path) -> impl Fn(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io { path: path.to_path_buf(), source }
}

fn write_atomic(dir: &Path, name: &str, body: &str) -> Result<PathBuf> {
    std::fs::create_dir_all(dir).map_err(io(dir))?;
    let path = dir.join(name);
    let mut tmp = NamedTempFile::new_in(dir).map_err(io(dir))?;
    tmp.write_all(body.as_bytes()).map_err(io(&path))?;
    tmp.persist(&path).map_err(|e| CliError::Io { path: path.clone(), source: e.error })?;
    Ok(path)
}

fn emit(out: Output, dir: &Path) -> Result<()> {
    print!("{}", out.text);
    for (name, body) in out.files {
        let p = write_atomic(dir, &name, &body)?;
        println!("wrote {}", p.display());
    }
    Ok(())
}

fn load(c: &Common) -> Result<Loaded> {
    builtins::load(&c.presentation, c.mode.map(Mode::from))
}

fn check_all() -> Result<bool> {
    let mut all = true;
    for r in checks::run_all() {
        let o = r?;
        println!("criterion {}: {}", o.criterion, if o.pass { "PASS" } else { "FAIL" });
        for n in &o.notes {
            println!("  {n}");
        }
        all &= o.pass;
    }
    Ok(all)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Basis(a) => {
            emit(commands::cmd_basis(&load(&a.common)?, a.n, &options(&a.common, a.force))?, &a.common.out)?
        }
        Command::Pimatrix { a, csv } => {
            let opts = Options { csv, ..options(&a.common, a.force) };
            emit(commands::cmd_pimatrix(&load(&a.common)?, a.n, &opts)?, &a.common.out)?
        }
        Command::Coherence(a) => {
            emit(commands::cmd_coherence(&load(&a.common)?, a.n, &options(&a.common, a.force))?, &a.common.out)?
        }
        Command::Graph { a, dual, orient, dot } => {
            let opts = Options { dual, orient, dot, ..options(&a.common, a.force) };
            emit(commands::cmd_graph(&load(&a.common)?, a.n, &opts)?, &a.common.out)?
        }
        Command::Koszul(c) => emit(commands::cmd_koszul(&load(&c)?)?, &c.out)?,
        Command::Words { a, labels } => {
            let opts = Options { labels: Some(labels), ..options(&a.common, a.force) };
            emit(commands::cmd_words(&load(&a.common)?, a.n, &opts)?, &a.common.out)?
        }
        Command::CheckAll => return check_all(),
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
