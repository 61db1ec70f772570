use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fcentral::products::conjecture_search;
use fcentral::report::{render, write_atomic, Record};
use fcentral::verify::{run_suite, Suite, VerifyConfig, DEFAULT_SAMPLES};
use fcentral::{largeness, ElementSet, Error, FamilySpec, Filter, FiniteSemigroup, IdealCatalog};

/// Finite-model checks for filter-relative largeness in semigroups.
#[derive(Parser)]
#[command(name = "fcentral", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArgs {
    /// Emit the tab-separated record format instead of the human report.
    #[arg(long, global = true)]
    structured: bool,
    /// Write the report to this file (atomically) instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct Source {
    /// Multiplication-table file.
    #[arg(required_unless_present = "family")]
    table: Option<PathBuf>,
    /// Named family instead of a file, e.g. `Z6`, `RZ2`, `M2,3`.
    #[arg(long, conflicts_with = "table")]
    family: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a table file parses and is associative.
    Validate {
        table: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Print the minimal ideals and idempotents of a semigroup.
    Catalog {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Evaluate every largeness predicate for a set and a filter.
    Classify {
        #[command(flatten)]
        source: Source,
        /// Set literal, e.g. `0,2,4` (empty string for the empty set).
        #[arg(long)]
        set: String,
        /// Filter literal, e.g. `filter=0,2,4`; defaults to the whole carrier.
        #[arg(long)]
        filter: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run a verification suite over the enumerated universe.
    Verify {
        /// enumeration, duality, equivalence, algebraic, structure, central,
        /// dynamics, products, examples or all.
        suite: String,
        #[arg(long, default_value_t = 3)]
        max_order: usize,
        /// Required when max order exceeds 3.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Search products of small semigroups for rectangles that break the filter product theorems.
    Search {
        #[arg(long, default_value_t = 3)]
        max_order: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
}

/// Exit status: 0 success, 1 a property or validation failure, 2 bad input.
enum Failure {
    Property(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::AssociativityViolation { .. } | Error::TheoremViolation(_) => Failure::Property(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load(source: &Source) -> Result<FiniteSemigroup, Failure> {
    match (&source.table, &source.family) {
        (_, Some(spec)) => Ok(fcentral::semigroup::make_family(spec.parse::<FamilySpec>()?)?),
        (Some(path), None) => Ok(FiniteSemigroup::parse_table(&read(path)?)?),
        (None, None) => Err(Failure::Usage("a table file or --family is required".into())),
    }
}

fn emit(out: &OutputArgs, records: Vec<Record>, human: String) -> Result<(), Failure> {
    let text = if out.structured { render(&records) } else { human };
    match &out.output {
        Some(path) => write_atomic(path, &text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Validate { table, out } => {
            let text = read(&table)?;
            match FiniteSemigroup::parse_table(&text) {
                Ok(s) => {
                    let mut r = Record::new("validate", table.display());
                    r.push("order", s.order()).push("associative", true);
                    emit(&out, vec![r], format!("{}: associative semigroup of order {}\n", table.display(), s.order()))
                }
                Err(Error::AssociativityViolation { x, y, z, left, right }) => {
                    let mut r = Record::new("validate", table.display());
                    r.push("associative", false).push("witness", format!("{x},{y},{z}"));
                    let human = format!(
                        "{}: not associative at ({x},{y},{z}): ({x}·{y})·{z} = {left} but {x}·({y}·{z}) = {right}\n",
                        table.display()
                    );
                    emit(&out, vec![r], human)?;
                    Err(Failure::Property(format!("associativity fails at ({x},{y},{z})")))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Catalog { source, out } => {
            let s = load(&source)?;
            let cat = IdealCatalog::new(&s);
            let list = |v: &[ElementSet]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
            let human = format!(
                "{} (order {})\n  idempotents          {}\n  minimal idempotents  {}\n  smallest ideal       {}\n  minimal left ideals  {}\n  minimal right ideals {}\n",
                s.label(),
                s.order(),
                cat.idempotents,
                cat.minimal_idempotents,
                cat.smallest_ideal,
                list(&cat.minimal_left_ideals),
                list(&cat.minimal_right_ideals)
            );
            emit(&out, cat.records(&s.label()), human)
        }
        Command::Classify { source, set, filter, out } => {
            let s = load(&source)?;
            let a = ElementSet::parse_literal(s.order(), &set)?;
            let f = match filter {
                Some(lit) => Filter::parse_literal(s.order(), &lit)?,
                None => Filter::trivial(s.order()),
            };
            let report = largeness::classify(&s, &a, &f)?;
            emit(&out, report.records(), report.human())?;
            if report.all_agree() && report.strong_and_thick_implies_central != Some(false) {
                Ok(())
            } else {
                Err(Failure::Property("predicate routes disagree".into()))
            }
        }
        Command::Verify { suite, max_order, seed, samples, out } => {
            let suite: Suite = suite.parse()?;
            let cfg = VerifyConfig { max_order, seed, samples };
            let reports = run_suite(suite, &cfg)?;
            let records = reports.iter().flat_map(|r| r.records()).collect();
            let human = reports.iter().map(|r| r.human()).collect::<String>();
            emit(&out, records, human)?;
            match reports.iter().find(|r| !r.passed()) {
                None => Ok(()),
                Some(r) => Err(Failure::Property(format!("suite {} failed", r.suite))),
            }
        }
        Command::Search { max_order, seed, samples, out } => {
            let report = conjecture_search(max_order, seed, samples)?;
            emit(&out, report.records(), report.human())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Property(msg)) => {
            eprintln!("fcentral: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("fcentral: {msg}");
            ExitCode::from(2)
        }
    }
}
