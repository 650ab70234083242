//! Command-line interface to the series computations in `gwtqft`.
//!
//! Subcommands mirror the library layers: symmetric-group data
//! (`partitions`, `characters`), closed-form series (`cap`, `closed`),
//! surface evaluation (`relative`, `hurwitz`, `connected`), algebra
//! structure (`lift`), and the verification suites (`verify`).
//!
//! Output is JSON by default; `--text` renders human-readable series.
//! Exit codes: 0 on success, 1 on domain errors or failed checks, 2 on
//! usage errors, 3 when an enumeration exceeds its operation budget
//! (`--budget` or the `GWTQFT_BUDGET` environment variable).

mod parse;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gwtqft::closedforms::{cap, d1_relative, d2_closed, fp_genus0};
use gwtqft::frobenius::{central_idempotents, FrobeniusAlgebra};
use gwtqft::partitions::{enumerate, Partition};
use gwtqft::symchar::CharacterTable;
use gwtqft::tqft::{
    dw_invariant, evaluate_relative, hurwitz_brute_force, SurfaceSpec, TqftModel, DEFAULT_BUDGET,
};
use gwtqft::transforms::{connected_from_disconnected, BivariateSeries};
use gwtqft::verify::run_suite;
use gwtqft::{Error, Result, TruncatedSeries};

#[derive(Parser)]
#[command(name = "gwtqft", version, about = "Exact series computations for branched-cover invariants")]
struct Cli {
    /// Render human-readable text instead of JSON.
    #[arg(long, global = true)]
    text: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ClosedModel {
    /// Degree one: s^(2g - 2 + b) with s = (2 sin(t/2)) / t.
    D1,
    /// Degree two: closed surfaces from the two explicit eigenvalues.
    D2,
    /// Genus zero, any degree: the free-point series.
    Fp0,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum RelativeModel {
    /// Character sums over the symmetric group (t-independent).
    Dw,
    /// Evaluation inside the class algebra (same values, algebraic route).
    Class,
    /// The deformed degree-one theory.
    D1,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ConnectedModel {
    /// Character sums, any degree.
    Dw,
    /// Deformed theory, degree one only.
    D1,
    /// Deformed theory through degree two.
    D2,
}

#[derive(Subcommand)]
enum Command {
    /// List the partitions of d (conjugacy classes of S_d) in canonical order.
    Partitions { degree: usize },
    /// Print the character table of S_d.
    Characters { degree: usize },
    /// Genus-zero one-boundary series for a partition such as "2,1".
    Cap {
        partition: String,
        #[arg(long)]
        order: usize,
    },
    /// Closed-form generating series of the deformed theories.
    Closed {
        #[arg(long, value_enum)]
        model: ClosedModel,
        #[arg(long, default_value_t = 0)]
        genus: usize,
        /// Degree of the covers (required for fp0).
        #[arg(long)]
        degree: Option<usize>,
        /// Number of unconstrained boundary circles (d1 only).
        #[arg(long, default_value_t = 0)]
        boundaries: usize,
        #[arg(long)]
        order: usize,
    },
    /// Invariant of one surface with boundary conditions such as "2,1;3".
    Relative {
        degree: usize,
        #[arg(long, default_value_t = 0)]
        genus: usize,
        #[arg(long)]
        boundaries: Option<String>,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = RelativeModel::Dw)]
        model: RelativeModel,
    },
    /// Count covers by brute-force enumeration over the symmetric group.
    Hurwitz {
        degree: usize,
        #[arg(long, default_value_t = 0)]
        genus: usize,
        #[arg(long)]
        boundaries: Option<String>,
        /// Operation budget; overrides the GWTQFT_BUDGET environment variable.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Lift the central idempotents of the class algebra and report spectra.
    Lift {
        degree: usize,
        #[arg(long)]
        order: usize,
    },
    /// Connected generating series from the disconnected ones.
    Connected {
        #[arg(long, value_enum)]
        model: ConnectedModel,
        #[arg(long, default_value_t = 0)]
        genus: usize,
        #[arg(long)]
        max_degree: usize,
        #[arg(long)]
        order: usize,
    },
    /// Run a verification suite: all, quick, or one named check.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(Error::TooLarge { required, budget }) => {
            eprintln!(
                "error: enumeration needs about {required} operations, over the budget of {budget}"
            );
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Partitions { degree } => partitions_cmd(*degree, cli.text),
        Command::Characters { degree } => characters_cmd(*degree, cli.text),
        Command::Cap { partition, order } => cap_cmd(partition, *order, cli.text),
        Command::Closed {
            model,
            genus,
            degree,
            boundaries,
            order,
        } => closed_cmd(*model, *genus, *degree, *boundaries, *order, cli.text),
        Command::Relative {
            degree,
            genus,
            boundaries,
            order,
            model,
        } => relative_cmd(*degree, *genus, boundaries.as_deref(), *order, *model, cli.text),
        Command::Hurwitz {
            degree,
            genus,
            boundaries,
            budget,
        } => hurwitz_cmd(*degree, *genus, boundaries.as_deref(), *budget, cli.text),
        Command::Lift { degree, order } => lift_cmd(*degree, *order, cli.text),
        Command::Connected {
            model,
            genus,
            max_degree,
            order,
        } => connected_cmd(*model, *genus, *max_degree, *order, cli.text),
        Command::Verify { suite } => verify_cmd(suite),
    }
}

fn emit(value: Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(&value).expect("JSON values serialize")
    );
}

fn series_value(s: &TruncatedSeries) -> Value {
    serde_json::to_value(s).expect("series serialize")
}

fn partition_value(p: &Partition) -> Value {
    json!({ "label": p.to_string(), "parts": p.parts() })
}

fn partitions_cmd(d: usize, text: bool) -> Result<ExitCode> {
    let classes = enumerate(d);
    if text {
        for p in &classes {
            println!(
                "{p}  z = {}  class size = {}",
                p.centralizer_order(),
                p.class_size()
            );
        }
    } else {
        let entries: Vec<Value> = classes
            .iter()
            .map(|p| {
                json!({
                    "label": p.to_string(),
                    "parts": p.parts(),
                    "centralizer_order": p.centralizer_order(),
                    "class_size": p.class_size(),
                })
            })
            .collect();
        emit(json!({ "degree": d, "count": classes.len(), "classes": entries }));
    }
    Ok(ExitCode::SUCCESS)
}

fn characters_cmd(d: usize, text: bool) -> Result<ExitCode> {
    if d == 0 {
        return Err(Error::Domain("the character table needs degree >= 1".into()));
    }
    let table = CharacterTable::get(d);
    let classes = enumerate(d);
    let labels: Vec<String> = classes.iter().map(|p| p.to_string()).collect();
    let n = classes.len();
    let values: Vec<Vec<i64>> = (0..n)
        .map(|r| (0..n).map(|c| table.value(r, c)).collect())
        .collect();
    let dims: Vec<u64> = (0..n).map(|r| table.dimension(r)).collect();
    if text {
        println!("classes: {}", labels.join("  "));
        for r in 0..n {
            let row: Vec<String> = values[r].iter().map(|v| v.to_string()).collect();
            println!("{} (dim {}): {}", labels[r], dims[r], row.join("  "));
        }
    } else {
        emit(json!({
            "degree": d,
            "representations": labels,
            "classes": labels,
            "dimensions": dims,
            "table": values,
        }));
    }
    Ok(ExitCode::SUCCESS)
}

fn cap_cmd(spec: &str, order: usize, text: bool) -> Result<ExitCode> {
    let p = parse::parse_partition(spec)?;
    let series = cap(&p, order);
    if text {
        println!("cap{p} = {series}");
    } else {
        emit(json!({
            "partition": partition_value(&p),
            "degree": p.size(),
            "order": order,
            "series": series_value(&series),
        }));
    }
    Ok(ExitCode::SUCCESS)
}

fn closed_cmd(
    model: ClosedModel,
    genus: usize,
    degree: Option<usize>,
    boundaries: usize,
    order: usize,
    text: bool,
) -> Result<ExitCode> {
    let (name, effective_degree, series) = match model {
        ClosedModel::D1 => {
            if degree.is_some_and(|dd| dd != 1) {
                return Err(Error::Domain("the d1 model is degree one".into()));
            }
            ("d1", 1, d1_relative(genus, boundaries, order))
        }
        ClosedModel::D2 => {
            if degree.is_some_and(|dd| dd != 2) {
                return Err(Error::Domain("the d2 model is degree two".into()));
            }
            if boundaries != 0 {
                return Err(Error::Domain(
                    "the d2 model covers closed surfaces only".into(),
                ));
            }
            ("d2", 2, d2_closed(genus, order))
        }
        ClosedModel::Fp0 => {
            let dd = degree.ok_or_else(|| {
                Error::Domain("the fp0 model needs --degree".into())
            })?;
            if genus != 0 || boundaries != 0 {
                return Err(Error::Domain(
                    "the fp0 model is the closed genus-zero series".into(),
                ));
            }
            ("fp0", dd, fp_genus0(dd, order))
        }
    };
    if text {
        println!("{series}");
    } else {
        emit(json!({
            "model": name,
            "genus": genus,
            "degree": effective_degree,
            "boundaries": boundaries,
            "order": order,
            "series": series_value(&series),
        }));
    }
    Ok(ExitCode::SUCCESS)
}

fn relative_cmd(
    degree: usize,
    genus: usize,
    boundaries: Option<&str>,
    order: usize,
    model: RelativeModel,
    text: bool,
) -> Result<ExitCode> {
    let bs = match boundaries {
        Some(spec) => parse::parse_boundaries(spec, degree)?,
        None => Vec::new(),
    };
    let spec = SurfaceSpec::new(degree, genus, bs)?;
    let (name, tqft_model) = match model {
        RelativeModel::Dw => ("dw", TqftModel::Dw),
        RelativeModel::Class => (
            "class",
            TqftModel::Algebra(FrobeniusAlgebra::class_algebra(degree, order)?),
        ),
        RelativeModel::D1 => ("d1", TqftModel::D1),
    };
    let series = evaluate_relative(&tqft_model, &spec, order)?;
    if text {
        println!("{series}");
    } else {
        emit(json!({
            "degree": degree,
            "genus": genus,
            "boundaries": spec.boundaries().iter().map(partition_value).collect::<Vec<_>>(),
            "model": name,
            "order": order,
            "series": series_value(&series),
        }));
    }
    Ok(ExitCode::SUCCESS)
}

fn budget_from_env() -> Result<Option<u64>> {
    match std::env::var("GWTQFT_BUDGET") {
        Ok(raw) => raw
            .parse::<u64>()
            .map(Some)
            .map_err(|_| Error::Domain(format!("GWTQFT_BUDGET is not a number: '{raw}'"))),
        Err(_) => Ok(None),
    }
}

fn hurwitz_cmd(
    degree: usize,
    genus: usize,
    boundaries: Option<&str>,
    budget: Option<u64>,
    text: bool,
) -> Result<ExitCode> {
    let bs = match boundaries {
        Some(spec) => parse::parse_boundaries(spec, degree)?,
        None => Vec::new(),
    };
    let budget = match budget {
        Some(b) => b,
        None => budget_from_env()?.unwrap_or(DEFAULT_BUDGET),
    };
    let count = hurwitz_brute_force(degree, genus, &bs, budget)?;
    if text {
        println!("{count}");
    } else {
        emit(json!({
            "degree": degree,
            "genus": genus,
            "boundaries": bs.iter().map(partition_value).collect::<Vec<_>>(),
            "budget": budget,
            "count": count.to_string(),
        }));
    }
    Ok(ExitCode::SUCCESS)
}

fn lift_cmd(degree: usize, order: usize, text: bool) -> Result<ExitCode> {
    if degree == 0 {
        return Err(Error::Domain("the class algebra needs degree >= 1".into()));
    }
    let algebra = FrobeniusAlgebra::class_algebra(degree, order)?;
    let seeds = central_idempotents(degree, order)?;
    let report = algebra.lift_idempotents_traced(&seeds)?;
    let mut eigenvalues = Vec::with_capacity(report.idempotents.len());
    for e in &report.idempotents {
        eigenvalues.push(algebra.counit_of(e)?.invert()?);
    }
    let rep_labels: Vec<String> = enumerate(degree).iter().map(|p| p.to_string()).collect();
    if text {
        for (label, lambda) in rep_labels.iter().zip(&eigenvalues) {
            println!("{label}: eigenvalue = {lambda}");
        }
    } else {
        emit(json!({
            "degree": degree,
            "order": order,
            "representations": rep_labels,
            "class_labels": algebra.labels(),
            "eigenvalues": eigenvalues.iter().map(series_value).collect::<Vec<_>>(),
            "idempotents": report
                .idempotents
                .iter()
                .map(|e| e.coords().iter().map(series_value).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "residual_valuations": report.residual_valuations,
        }));
    }
    Ok(ExitCode::SUCCESS)
}

fn connected_cmd(
    model: ConnectedModel,
    genus: usize,
    max_degree: usize,
    order: usize,
    text: bool,
) -> Result<ExitCode> {
    let (name, coeffs) = match model {
        ConnectedModel::Dw => {
            let coeffs = (1..=max_degree)
                .map(|d| Ok(TruncatedSeries::constant(dw_invariant(d, genus, &[])?, order)))
                .collect::<Result<Vec<_>>>()?;
            ("dw", coeffs)
        }
        ConnectedModel::D1 => {
            if max_degree != 1 {
                return Err(Error::Domain("the d1 model stops at degree one".into()));
            }
            ("d1", vec![d1_relative(genus, 0, order)])
        }
        ConnectedModel::D2 => {
            if max_degree == 0 || max_degree > 2 {
                return Err(Error::Domain("the d2 model stops at degree two".into()));
            }
            let mut coeffs = vec![d1_relative(genus, 0, order)];
            if max_degree == 2 {
                coeffs.push(d2_closed(genus, order));
            }
            ("d2", coeffs)
        }
    };
    let z = BivariateSeries::new(coeffs)?;
    let f = connected_from_disconnected(&z);
    if text {
        for d in 1..=z.qdeg() {
            println!("F_{d} = {}", f.coeff(d));
        }
    } else {
        emit(json!({
            "model": name,
            "genus": genus,
            "max_degree": max_degree,
            "order": order,
            "disconnected": z.coeffs().iter().map(series_value).collect::<Vec<_>>(),
            "connected": f.coeffs().iter().map(series_value).collect::<Vec<_>>(),
        }));
    }
    Ok(ExitCode::SUCCESS)
}

fn verify_cmd(suite: &str) -> Result<ExitCode> {
    let outcomes = run_suite(suite)?;
    let mut passed = 0;
    for outcome in &outcomes {
        let verdict = if outcome.passed { "PASS" } else { "FAIL" };
        println!("{verdict}  {}  {}", outcome.name, outcome.detail);
        if outcome.passed {
            passed += 1;
        }
    }
    println!("{passed}/{} checks passed", outcomes.len());
    if passed == outcomes.len() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::FAILURE)
    }
}
