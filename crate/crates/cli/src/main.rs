use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use nearbi::commands;
use nearbi::corpus;
use nearbi::format::{self, Document, Kind};
use nearbi::render::Report;

/// Nearly associative algebras, coalgebras and bialgebras over ℚ.
#[derive(Parser)]
#[command(name = "nearbi", version)]
struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for searches (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check identities and structure results for an algebra.
    Check {
        /// Algebra file or fixture name.
        algebra: String,
        /// Required predicates (repeatable); default is the full battery.
        #[arg(long = "predicate")]
        predicates: Vec<String>,
        /// Run the full battery in addition to the predicates.
        #[arg(long)]
        full: bool,
        /// Bilinear form to test for being quadratic.
        #[arg(long)]
        form: Option<String>,
        /// Intertwiner A → A* from which to build a quadratic form.
        #[arg(long)]
        phi: Option<String>,
    },
    /// Write the double algebra of a candidate bialgebra.
    Double {
        algebra: String,
        coproduct: String,
        /// Output file (default: stdout).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide whether (A, Δ) is a nearly associative bialgebra.
    Bialgebra { algebra: String, coproduct: String },
    /// Analyse a skew r against the LR-Yang-Baxter equation.
    Ybe { algebra: String, r: String },
    /// Enumerate skew r with small support and report the coboundary bialgebras.
    SearchR {
        algebra: String,
        /// Comma-separated rational coefficients.
        #[arg(long, default_value = "1,-1")]
        coeffs: String,
        /// Number of pairs i < j in the support.
        #[arg(long, default_value_t = 1)]
        support: usize,
    },
    /// Check every fixture (or every file in a directory) against its
    /// recorded expectations.
    Report {
        /// Directory of TOML files (default: built-in fixtures).
        dir: Option<PathBuf>,
        /// Trials per randomized cross-check suite.
        #[arg(long, default_value_t = 0)]
        random: usize,
    },
}

fn load(input: &str, kind: Kind, what: &str) -> anyhow::Result<Document> {
    let doc = corpus::load(input)?;
    commands::expect_kind(&doc, kind, what)?;
    Ok(doc)
}

fn load_dir(dir: &PathBuf) -> anyhow::Result<Vec<(String, Document)>> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .with_context(|| format!("reading {}", dir.display()))?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<_, _>>()?;
    paths.retain(|p| p.extension().is_some_and(|e| e == "toml"));
    paths.sort();
    paths
        .iter()
        .map(|p| {
            let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            let doc = format::parse_document(&text).with_context(|| format!("parsing {}", p.display()))?;
            let stem = p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            Ok((stem, doc))
        })
        .collect()
}

fn run(cli: Cli) -> anyhow::Result<Option<Report>> {
    let jobs = cli.jobs.unwrap_or_else(rayon::current_num_threads).max(1);
    let report = match cli.command {
        Command::Check {
            algebra,
            predicates,
            full,
            form,
            phi,
        } => {
            let a = load(&algebra, Kind::Algebra, "ALG")?;
            let form = form.map(|f| load(&f, Kind::Form, "--form")).transpose()?;
            let phi = phi.map(|f| load(&f, Kind::Form, "--phi")).transpose()?;
            commands::check(&a, &predicates, full, form.as_ref(), phi.as_ref())?
        }
        Command::Double {
            algebra,
            coproduct,
            output,
        } => {
            let a = load(&algebra, Kind::Algebra, "ALG")?;
            let c = load(&coproduct, Kind::Coproduct, "COPRODUCT")?;
            let text = commands::double(&a, &c)?.to_toml();
            match output {
                Some(path) => std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
            return Ok(None);
        }
        Command::Bialgebra { algebra, coproduct } => {
            let a = load(&algebra, Kind::Algebra, "ALG")?;
            let c = load(&coproduct, Kind::Coproduct, "COPRODUCT")?;
            commands::bialgebra(&a, &c)?
        }
        Command::Ybe { algebra, r } => {
            let a = load(&algebra, Kind::Algebra, "ALG")?;
            let r = load(&r, Kind::RMatrix, "R")?;
            commands::ybe(&a, &r)?
        }
        Command::SearchR {
            algebra,
            coeffs,
            support,
        } => {
            let a = load(&algebra, Kind::Algebra, "ALG")?;
            commands::search_r(&a, &commands::parse_coeffs(&coeffs)?, support, jobs)?
        }
        Command::Report { dir, random } => {
            let docs = match &dir {
                Some(d) => load_dir(d)?,
                None => corpus::all(),
            };
            commands::report(&docs, random, cli.seed)?
        }
    };
    Ok(Some(report))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(report)) => {
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
