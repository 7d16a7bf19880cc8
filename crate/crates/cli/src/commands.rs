//! Subcommand definitions and dispatch. One subcommand per library
//! operation; exit codes are 0 pass/equivalent, 1 fail/not-equivalent,
//! 2 inconclusive, 3 usage or parse error.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use leibniz_ly::{
    adjoint_rep, catalog, check_leibniz_rep, check_left_leibniz, check_ly, check_ly_rep,
    classify_symmetry, decide_equivalence_leibniz_with_budget, decide_equivalence_ly_with_budget,
    dual_rep, induce_ly_rep, leibniz_to_ly, ly_adjoint_rep, random_leibniz, Algebra, AxiomReport,
    EquivStatus, EquivalenceVerdict, Error, LYAlgebra, LYRep, LeibnizRep, DEFAULT_GRID_BUDGET,
};

use crate::files::{
    algebra_to_doc, leibniz_rep_to_doc, load_algebra, load_rep, ly_rep_to_doc, ly_to_doc,
    write_doc, ParsedAlgebra, ParsedRep,
};
use crate::report::{witness_to_doc, Report};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "leibniz-ly", version, about = "Exact Leibniz / Lie-Yamaguti algebra toolkit")]
pub struct Cli {
    /// Report format on stdout.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,

    /// Cap on exact grid evaluations in equivalence decisions.
    #[arg(long, global = true, default_value_t = DEFAULT_GRID_BUDGET)]
    pub budget: u64,

    /// Safety cap on algebra and module dimensions.
    #[arg(long, global = true, default_value_t = 8)]
    pub max_dim: usize,

    /// Include wall-clock timing in the report.
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the left Leibniz identity on an algebra file.
    CheckLeibniz { file: PathBuf },
    /// Check the Lie-Yamaguti axioms on an LY algebra file.
    CheckLy { file: PathBuf },
    /// Build the associated LY algebra of a left Leibniz algebra.
    ToLy {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Build the adjoint representation (of either algebra kind).
    Adjoint {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Build the dual of a Leibniz representation.
    Dualize {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Build the LY representation induced by a Leibniz representation.
    Induce {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Check the Leibniz representation identities.
    CheckRep { file: PathBuf },
    /// Check the LY representation axioms.
    CheckLyRep { file: PathBuf },
    /// Classify a Leibniz representation: antisymmetric, symmetric, or neither.
    Classify { file: PathBuf },
    /// Decide equivalence of two representations of the same kind.
    Equiv { rep1: PathBuf, rep2: PathBuf },
    /// Write a catalog algebra to a file.
    Catalog {
        name: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Rejection-sample a Leibniz algebra.
    Random {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        max_attempts: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
}

fn usage(e: Error) -> CliError {
    CliError::Usage(e.to_string())
}

fn check_dim(what: &str, dim: usize, max_dim: usize) -> Result<(), CliError> {
    if dim > max_dim {
        return Err(CliError::Usage(format!(
            "{what} dimension {dim} exceeds --max-dim {max_dim}"
        )));
    }
    Ok(())
}

fn load_leibniz_algebra(path: &Path, max_dim: usize) -> Result<Algebra, CliError> {
    match load_algebra(path)?.0 {
        ParsedAlgebra::Leibniz(a) => {
            check_dim("algebra", a.dim(), max_dim)?;
            Ok(a)
        }
        ParsedAlgebra::Ly(_) => Err(CliError::Usage(format!(
            "{}: expected a leibniz algebra file",
            path.display()
        ))),
    }
}

fn load_ly_algebra(path: &Path, max_dim: usize) -> Result<LYAlgebra, CliError> {
    match load_algebra(path)?.0 {
        ParsedAlgebra::Ly(l) => {
            check_dim("algebra", l.dim(), max_dim)?;
            Ok(l)
        }
        ParsedAlgebra::Leibniz(_) => Err(CliError::Usage(format!(
            "{}: expected an ly algebra file",
            path.display()
        ))),
    }
}

fn load_leibniz_rep(path: &Path, max_dim: usize) -> Result<LeibnizRep, CliError> {
    match load_rep(path)? {
        ParsedRep::Leibniz(r) => {
            check_dim("algebra", r.algebra().dim(), max_dim)?;
            check_dim("module", r.dim_v(), max_dim)?;
            Ok(r)
        }
        ParsedRep::Ly(_) => Err(CliError::Usage(format!(
            "{}: expected a leibniz-rep file",
            path.display()
        ))),
    }
}

fn load_ly_rep(path: &Path, max_dim: usize) -> Result<LYRep, CliError> {
    match load_rep(path)? {
        ParsedRep::Ly(r) => {
            check_dim("algebra", r.algebra().dim(), max_dim)?;
            check_dim("module", r.dim_v(), max_dim)?;
            Ok(r)
        }
        ParsedRep::Leibniz(_) => Err(CliError::Usage(format!(
            "{}: expected an ly-rep file",
            path.display()
        ))),
    }
}

/// A construction whose precondition check failed: report the violations and
/// exit 1 rather than abort.
fn rejected(command: String, context: &'static str, report: &AxiomReport) -> Report {
    Report::from_check(command, report).with_note(format!("{context}: input rejected"))
}

fn verdict_report(command: String, verdict: EquivalenceVerdict) -> Report {
    let exit = match verdict.status {
        EquivStatus::Equivalent => 0,
        EquivStatus::NotEquivalent => 1,
        EquivStatus::Inconclusive => 2,
    };
    let mut report = Report::new(command, verdict.status.to_string(), exit);
    report.witness = verdict.witness.as_ref().map(witness_to_doc);
    report.note = Some(verdict.note);
    report
}

pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    let max_dim = cli.max_dim;
    match &cli.command {
        Command::CheckLeibniz { file } => {
            let command = format!("check-leibniz {}", file.display());
            let a = load_leibniz_algebra(file, max_dim)?;
            Ok(Report::from_check(command, &check_left_leibniz(&a)))
        }
        Command::CheckLy { file } => {
            let command = format!("check-ly {}", file.display());
            let l = load_ly_algebra(file, max_dim)?;
            Ok(Report::from_check(command, &check_ly(&l)))
        }
        Command::ToLy { file, output } => {
            let command = format!("to-ly {} -o {}", file.display(), output.display());
            let a = load_leibniz_algebra(file, max_dim)?;
            match leibniz_to_ly(&a) {
                Ok(ly) => {
                    write_doc(output, &ly_to_doc(&ly))?;
                    Ok(Report::new(command, "ok", 0).with_note(format!("wrote {}", output.display())))
                }
                Err(Error::AxiomsFailed { context, report }) => Ok(rejected(command, context, &report)),
                Err(e) => Err(usage(e)),
            }
        }
        Command::Adjoint { file, output } => {
            let command = format!("adjoint {} -o {}", file.display(), output.display());
            let (parsed, _) = load_algebra(file)?;
            check_dim("algebra", parsed.dim(), max_dim)?;
            let result = match parsed {
                ParsedAlgebra::Leibniz(a) => adjoint_rep(&a).map(|rep| leibniz_rep_to_doc(&rep)),
                ParsedAlgebra::Ly(l) => ly_adjoint_rep(&l).map(|rep| ly_rep_to_doc(&rep)),
            };
            match result {
                Ok(doc) => {
                    write_doc(output, &doc)?;
                    Ok(Report::new(command, "ok", 0).with_note(format!("wrote {}", output.display())))
                }
                Err(Error::AxiomsFailed { context, report }) => Ok(rejected(command, context, &report)),
                Err(e) => Err(usage(e)),
            }
        }
        Command::Dualize { file, output } => {
            let command = format!("dualize {} -o {}", file.display(), output.display());
            let rep = load_leibniz_rep(file, max_dim)?;
            match dual_rep(&rep) {
                Ok(dual) => {
                    write_doc(output, &leibniz_rep_to_doc(&dual))?;
                    Ok(Report::new(command, "ok", 0).with_note(format!("wrote {}", output.display())))
                }
                Err(Error::AxiomsFailed { context, report }) => Ok(rejected(command, context, &report)),
                Err(e) => Err(usage(e)),
            }
        }
        Command::Induce { file, output } => {
            let command = format!("induce {} -o {}", file.display(), output.display());
            let rep = load_leibniz_rep(file, max_dim)?;
            match induce_ly_rep(&rep) {
                Ok(ind) => {
                    write_doc(output, &ly_rep_to_doc(&ind))?;
                    Ok(Report::new(command, "ok", 0).with_note(format!("wrote {}", output.display())))
                }
                Err(Error::AxiomsFailed { context, report }) => Ok(rejected(command, context, &report)),
                Err(e) => Err(usage(e)),
            }
        }
        Command::CheckRep { file } => {
            let command = format!("check-rep {}", file.display());
            let rep = load_leibniz_rep(file, max_dim)?;
            Ok(Report::from_check(command, &check_leibniz_rep(&rep)))
        }
        Command::CheckLyRep { file } => {
            let command = format!("check-ly-rep {}", file.display());
            let rep = load_ly_rep(file, max_dim)?;
            Ok(Report::from_check(command, &check_ly_rep(&rep)))
        }
        Command::Classify { file } => {
            let command = format!("classify {}", file.display());
            let rep = load_leibniz_rep(file, max_dim)?;
            let class = classify_symmetry(&rep);
            Ok(Report::new(command, class.to_string(), 0))
        }
        Command::Equiv { rep1, rep2 } => {
            let command = format!("equiv {} {}", rep1.display(), rep2.display());
            let (r1, r2) = (load_rep(rep1)?, load_rep(rep2)?);
            let verdict = match (r1, r2) {
                (ParsedRep::Leibniz(r1), ParsedRep::Leibniz(r2)) => {
                    for r in [&r1, &r2] {
                        check_dim("algebra", r.algebra().dim(), max_dim)?;
                        check_dim("module", r.dim_v(), max_dim)?;
                    }
                    decide_equivalence_leibniz_with_budget(&r1, &r2, cli.budget).map_err(usage)?
                }
                (ParsedRep::Ly(r1), ParsedRep::Ly(r2)) => {
                    for r in [&r1, &r2] {
                        check_dim("algebra", r.algebra().dim(), max_dim)?;
                        check_dim("module", r.dim_v(), max_dim)?;
                    }
                    decide_equivalence_ly_with_budget(&r1, &r2, cli.budget).map_err(usage)?
                }
                _ => {
                    return Err(CliError::Usage(
                        "equiv requires two representation files of the same kind".to_string(),
                    ))
                }
            };
            Ok(verdict_report(command, verdict))
        }
        Command::Catalog { name, output } => {
            let command = format!("catalog {} -o {}", name, output.display());
            let a = catalog(name).map_err(usage)?;
            check_dim("algebra", a.dim(), max_dim)?;
            write_doc(output, &algebra_to_doc(&a))?;
            Ok(Report::new(command, "ok", 0).with_note(format!("wrote {}", output.display())))
        }
        Command::Random { dim, seed, max_attempts, output } => {
            let command = format!(
                "random --dim {dim} --seed {seed} -o {}",
                output.display()
            );
            check_dim("algebra", *dim, max_dim)?;
            match random_leibniz(*dim, *seed, *max_attempts) {
                Some(a) => {
                    write_doc(output, &algebra_to_doc(&a))?;
                    Ok(Report::new(command, "ok", 0).with_note(format!("wrote {}", output.display())))
                }
                None => Ok(Report::new(command, "inconclusive", 2).with_note(format!(
                    "no Leibniz algebra found within {max_attempts} attempts"
                ))),
            }
        }
    }
}
