use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use relcomp::closure::{closure, ClosedFamily};
use relcomp::complement::{bar, check_induced, complements, hat, rel_complements};
use relcomp::enumerate::{resolve_statements, run_suite};
use relcomp::format::{parse_lattice, print_lattice};
use relcomp::verify::{check_all, verify_product_identity, Factor, Statement};
use relcomp::{dot, regress, Error, Interval, Lattice};

/// Finite lattices and relative complementation.
#[derive(Parser)]
#[command(name = "relcomp", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a lattice file and check that it describes a lattice.
    Validate { file: PathBuf },
    /// Bounds and structural flags.
    Info { file: PathBuf },
    /// Complements x⁺.
    Comp { file: PathBuf, x: String },
    /// Relative complements x^ab in [a, b].
    Relcomp {
        file: PathBuf,
        a: String,
        b: String,
        x: String,
    },
    /// (x⁺ ∨ a) ∧ b.
    Bar {
        file: PathBuf,
        a: String,
        b: String,
        x: String,
    },
    /// (x⁺ ∧ b) ∨ a.
    Hat {
        file: PathBuf,
        a: String,
        b: String,
        x: String,
    },
    /// Whether u induces a relative complement of z in [a, b].
    Induced {
        file: PathBuf,
        a: String,
        b: String,
        u: String,
        z: String,
    },
    /// (A^ab)^ab for A given as element names.
    Closure {
        file: PathBuf,
        a: String,
        b: String,
        #[arg(num_args = 0..)]
        xs: Vec<String>,
    },
    /// Every closed subset of [a, b].
    ClosedSets { file: PathBuf, a: String, b: String },
    /// Check statements on one lattice (default: the whole suite).
    Check {
        file: PathBuf,
        #[arg(long, conflicts_with = "all")]
        statement: Vec<String>,
        #[arg(long)]
        all: bool,
    },
    /// Check statements on every lattice with at most `max` elements.
    Enumerate {
        #[arg(long)]
        max: usize,
        #[arg(long)]
        statement: Vec<String>,
    },
    /// Recompute every worked value from the figures.
    PaperRegress,
    /// Hasse diagram in DOT format.
    Dot { file: PathBuf },
    /// Print the lattice back in the input format.
    Print { file: PathBuf },
    /// Check the product identity on 2^boolean × M_n1 × M_n2 × ...
    ProductIdentity {
        #[arg(long, default_value_t = 1)]
        boolean: usize,
        #[arg(long = "m")]
        m: Vec<usize>,
    },
    /// List statement ids.
    Statements,
}

enum Failure {
    Check,
    Input(String),
    Query(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_validation() {
            Failure::Input(e.to_string())
        } else {
            Failure::Query(e.to_string())
        }
    }
}

type Outcome = Result<(), Failure>;

fn load(path: &Path) -> Result<Lattice, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_lattice(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn interval<'l>(l: &'l Lattice, a: &str, b: &str) -> Result<Interval<'l>, Failure> {
    Ok(Interval::named(l, a, b)?)
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Validate { file } => {
            let l = load(&file)?;
            println!("ok: {} ({} elements)", l.name(), l.len());
        }
        Command::Info { file } => {
            let l = load(&file)?;
            println!("name: {}", l.name());
            println!("elements: {}", l.len());
            println!("bottom: {}", l.name_of(l.bottom()));
            println!("top: {}", l.name_of(l.top()));
            println!("modular: {}", l.is_modular());
            println!("distributive: {}", l.is_distributive());
            println!("complemented: {}", l.is_complemented());
            println!("relatively complemented: {}", l.is_rel_complemented());
        }
        Command::Comp { file, x } => {
            let l = load(&file)?;
            let x = l.lookup(&x)?;
            println!("{}", l.format_set(&complements(&l, x)));
        }
        Command::Relcomp { file, a, b, x } => {
            let l = load(&file)?;
            let i = interval(&l, &a, &b)?;
            println!("{}", l.format_set(&rel_complements(&i, l.lookup(&x)?)?));
        }
        Command::Bar { file, a, b, x } => {
            let l = load(&file)?;
            let i = interval(&l, &a, &b)?;
            println!("{}", l.format_set(&bar(&i, l.lookup(&x)?)?));
        }
        Command::Hat { file, a, b, x } => {
            let l = load(&file)?;
            let i = interval(&l, &a, &b)?;
            println!("{}", l.format_set(&hat(&i, l.lookup(&x)?)?));
        }
        Command::Induced { file, a, b, u, z } => {
            let l = load(&file)?;
            let i = interval(&l, &a, &b)?;
            let r = check_induced(&i, l.lookup(&z)?, l.lookup(&u)?)?;
            print!("{}", r.render(&l));
        }
        Command::Closure { file, a, b, xs } => {
            let l = load(&file)?;
            let i = interval(&l, &a, &b)?;
            let set = l.set_named(&xs)?;
            println!("{}", l.format_set(&closure(&i, &set)?));
        }
        Command::ClosedSets { file, a, b } => {
            let l = load(&file)?;
            let i = interval(&l, &a, &b)?;
            let family = ClosedFamily::new(&i)?;
            for s in family.sets() {
                println!("{}", l.format_set(s));
            }
            println!("{} closed sets", family.len());
        }
        Command::Check {
            file,
            statement,
            all: _,
        } => {
            let l = load(&file)?;
            let statements = if statement.is_empty() {
                Statement::suite()
            } else {
                let pats: Vec<&str> = statement.iter().map(String::as_str).collect();
                resolve_statements(&pats)?
            };
            let reports = check_all(&l, &statements);
            for r in &reports {
                println!("{}", r.render(&l));
            }
            if reports.iter().any(|r| !r.holds) {
                return Err(Failure::Check);
            }
        }
        Command::Enumerate { max, statement } => {
            let pats: Vec<&str> = if statement.is_empty() {
                vec!["all"]
            } else {
                statement.iter().map(String::as_str).collect()
            };
            let run = run_suite(max, &pats)?;
            print!("{}", run.render());
            if !run.failures.is_empty() {
                return Err(Failure::Check);
            }
        }
        Command::PaperRegress => {
            let rows = regress::rows();
            print!("{}", regress::render(&rows));
            if rows.iter().any(|r| !r.holds()) {
                return Err(Failure::Check);
            }
        }
        Command::Dot { file } => {
            let l = load(&file)?;
            print!("{}", dot::to_dot(&l));
        }
        Command::Print { file } => {
            let l = load(&file)?;
            print!("{}", print_lattice(&l));
        }
        Command::ProductIdentity { boolean, m } => {
            let mut factors = vec![Factor::Boolean(boolean)];
            factors.extend(m.into_iter().map(Factor::M));
            let r = verify_product_identity(&factors)?;
            // The product has no file to resolve names against; witnesses
            // carry element ids and the product's own names.
            let built: Vec<Lattice> = factors
                .iter()
                .map(|f| f.build())
                .collect::<Result<_, _>>()?;
            let refs: Vec<&Lattice> = built.iter().collect();
            let l = Lattice::direct_product(&refs)?;
            println!("{}", r.render(&l));
            if !r.holds {
                return Err(Failure::Check);
            }
        }
        Command::Statements => {
            for s in Statement::ALL {
                let tag = if s.is_general() {
                    ""
                } else {
                    " (not in suite)"
                };
                println!("{}{tag}", s.id());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Query(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
