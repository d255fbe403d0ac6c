mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use amenability_core::constants::report::amenability_report_capped;
use amenability_core::constants::standard_polynomial_check;
use amenability_core::constants::verify::hr_sequence_capped;
use amenability_core::corpus::standard_corpus;
use amenability_core::degrees::DEFAULT_CLASS_CAP;
use amenability_core::group::DEFAULT_MAX_ORDER;
use amenability_core::suite::{DEFAULT_SEED, DEFAULT_TRIALS};
use amenability_core::{run_theorem, Error, FamilyExpression, Outcome, Report, Subject, SuiteOptions, Theorem};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use render::{Format, ScanRow};

const EXIT_FAILED: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_CAP: u8 = 3;

/// Amenability constants of finite groups.
#[derive(Parser, Debug)]
#[command(name = "amenability", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,

    /// Random functions or matrix tuples per randomized check.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS)]
    trials: usize,

    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Largest group order that will be built.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,

    /// Largest number of conjugacy classes the exact degree computation accepts.
    #[arg(long, global = true, default_value_t = DEFAULT_CLASS_CAP)]
    class_cap: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// Family expression such as "D(4)xC(3)" or "Hr(3,2)". A value ending
    /// in .json is read as a Cayley table file.
    #[arg(long)]
    group: Option<String>,

    /// Cayley table file: {"order": n, "table": [[...], ...], "labels": [...]}.
    #[arg(long)]
    table: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the amenability report of one group.
    Report {
        #[command(flatten)]
        source: Source,
    },
    /// Run one verification suite.
    Verify {
        /// johnson-vs-ad, two-degree, minimal, products, key-trick, plancherel, muK or al.
        theorem: String,
        #[arg(long, conflicts_with = "table")]
        group: Option<String>,
        #[arg(long)]
        table: Option<PathBuf>,
        /// Second factor for `products`; without it a product expression is split.
        #[arg(long)]
        with: Option<String>,
    },
    /// Report on many groups: expressions, a directory of tables, or the built-in corpus.
    Scan {
        expressions: Vec<String>,
        #[arg(long)]
        dir: Option<PathBuf>,
        #[arg(long)]
        corpus: bool,
    },
    /// Reports on Hr(p,n) for n = 1..N.
    HrSequence {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u32,
    },
    /// Evaluate the standard polynomial P_2n on random d x d integer matrices.
    AlCheck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Overflow { .. } | Error::CapExceeded { .. } | Error::ClassCapExceeded { .. } => EXIT_CAP,
        Error::Inconsistent(_) | Error::DegenerateSample(_) | Error::NoSuitablePrime => EXIT_FAILED,
        _ => EXIT_INVALID,
    }
}

fn subject(group: Option<&str>, table: Option<&PathBuf>, max_order: usize) -> amenability_core::Result<Subject> {
    match (group, table) {
        (Some(g), None) if g.ends_with(".json") => Subject::from_table(g.as_ref(), max_order),
        (Some(g), None) => Subject::parse(g, max_order),
        (None, Some(t)) => Subject::from_table(t, max_order),
        _ => Err(Error::InvalidParameter("give exactly one of --group or --table".into())),
    }
}

fn run(cli: &Cli) -> amenability_core::Result<(String, bool)> {
    let format = match cli.format {
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
        FormatArg::Text => Format::Text,
    };
    let opts = SuiteOptions { trials: cli.trials, seed: cli.seed, max_order: cli.max_order, class_cap: cli.class_cap };
    match &cli.command {
        Command::Report { source } => {
            let s = subject(source.group.as_deref(), source.table.as_ref(), cli.max_order)?;
            let report: Report = amenability_report_capped(&s.group, &s.descriptor, cli.class_cap)?;
            Ok((render::report(&report, format), true))
        }
        Command::Verify { theorem, group, table, with } => {
            let theorem: Theorem = theorem.parse()?;
            let s = if theorem.needs_group() { Some(subject(group.as_deref(), table.as_ref(), cli.max_order)?) } else { None };
            let partner = with.as_deref().map(|w| subject(Some(w), None, cli.max_order)).transpose()?;
            let r = run_theorem(theorem, s.as_ref(), partner.as_ref(), &opts)?;
            Ok((render::theorem(&r, format), r.outcome() != Outcome::Fail))
        }
        Command::Scan { expressions, dir, corpus } => {
            let mut inputs: Vec<ScanInput> = expressions.iter().map(|e| ScanInput::Expr(e.clone())).collect();
            if *corpus {
                inputs.extend(standard_corpus().into_iter().map(ScanInput::Family));
            }
            if let Some(dir) = dir {
                let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
                    .map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?
                    .filter_map(|entry| entry.ok().map(|e| e.path()))
                    .filter(|p| p.extension().is_some_and(|x| x == "json"))
                    .collect();
                paths.sort();
                inputs.extend(paths.into_iter().map(ScanInput::Table));
            }
            if inputs.is_empty() {
                return Err(Error::InvalidParameter("scan needs expressions, --dir or --corpus".into()));
            }
            let rows: Vec<ScanRow> = inputs.par_iter().map(|input| input.run(cli.max_order, cli.class_cap)).collect();
            let ok = rows.iter().all(|r| r.result.is_ok());
            Ok((render::scan(&rows, format), ok))
        }
        Command::HrSequence { p, n } => {
            let seq = hr_sequence_capped::<i128>(*p, *n, cli.max_order)?;
            Ok((render::hr_sequence(&seq, format), seq.constant && seq.spectra_match))
        }
        Command::AlCheck { n, d } => {
            let r = standard_polynomial_check(*n, *d, cli.trials, cli.seed)?;
            Ok((render::al_check(&r, format), r.passed()))
        }
    }
}

enum ScanInput {
    Expr(String),
    Family(FamilyExpression),
    Table(PathBuf),
}

impl ScanInput {
    fn run(&self, max_order: usize, class_cap: usize) -> ScanRow {
        let (name, s) = match self {
            ScanInput::Expr(e) => (e.clone(), subject(Some(e), None, max_order)),
            ScanInput::Family(e) => (e.to_string(), Subject::from_expr(e.clone(), max_order)),
            ScanInput::Table(p) => (p.display().to_string(), Subject::from_table(p, max_order)),
        };
        let result = s.and_then(|s| amenability_report_capped(&s.group, &s.descriptor, class_cap));
        ScanRow { name, result }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAILED)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
