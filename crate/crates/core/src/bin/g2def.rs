use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use g2def::deform::solve_deformations;
use g2def::field::FieldElem;
use g2def::g2::{identity_suite, schur_suite, standard_g2, SuiteReport};
use g2def::homogeneous::{builtin, builtin_names, load_space, space_to_json, ReductiveSpace};
use g2def::par::{init_threads_from_env, Exec};
use g2def::rep::{deformation_targets, enumerate_candidates, GroupSpec};
use g2def::Error;

#[derive(Parser)]
#[command(name = "g2def", version, about = "Exact infinitesimal deformations of nearly parallel G2-structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Add approximate decimal values next to exact ones.
    #[arg(long, global = true)]
    decimal: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run the G2 identity and Schur-constant suites.
    Verify,
    /// Check a space: invariants, torsion and nearly parallel data.
    Check { space: String },
    /// List the Casimir candidates of a space's group.
    Candidates { space: String },
    /// Compute the infinitesimal deformation report.
    Deform { space: String },
    /// Write a space (e.g. a built-in) as a JSON space file.
    Export { space: String },
}

/// Outcome of a subcommand: the rendered output and whether every
/// verification passed.
struct Outcome {
    text: String,
    passed: bool,
}

fn select(space: &str) -> Result<ReductiveSpace, Error> {
    if builtin_names().contains(&space) {
        builtin(space)
    } else if std::path::Path::new(space).exists() {
        load_space(space)
    } else {
        Err(Error::Parse(format!(
            "`{space}` is neither a built-in space ({}) nor an existing file",
            builtin_names().join(", ")
        )))
    }
}

fn pretty(v: &serde_json::Value) -> Result<String, Error> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn approx(x: &FieldElem) -> String {
    let (re, im) = x.to_f64_pair();
    if im == 0.0 {
        format!("{re:.9}")
    } else {
        format!("{re:.9} + {im:.9}i")
    }
}

fn verify(cli: &Cli) -> Result<Outcome, Error> {
    let exec = Exec::default();
    let reports: Vec<SuiteReport> = vec![identity_suite(&standard_g2(), exec), schur_suite(exec)];
    let passed = reports.iter().all(SuiteReport::all_passed);
    let text = match cli.format {
        Format::Json => pretty(&json!({ "passed": passed, "suites": reports }))?,
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let _ = writeln!(s, "{}", r.suite);
                for c in &r.checks {
                    let mark = if c.passed { "PASS" } else { "FAIL" };
                    let _ = writeln!(s, "  {mark}  {:<58} {:>5} cases  {}", c.name, c.cases, c.detail);
                }
            }
            let _ = writeln!(s, "{}", if passed { "all checks passed" } else { "some checks FAILED" });
            s
        }
    };
    Ok(Outcome { text, passed })
}

fn check(cli: &Cli, name: &str) -> Result<Outcome, Error> {
    let space = select(name)?;
    let ideals = space.ideals()?;
    let ideal_list: Vec<serde_json::Value> = ideals
        .iter()
        .map(|(idx, f)| json!({ "dim": idx.len(), "factor": f.map(|f| f.to_string()) }))
        .collect();
    let base = json!({
        "space": space.name,
        "dim_g": space.dim(),
        "dim_h": space.h_basis.len(),
        "c2": space.c2.to_string(),
        "orientation": space.orientation,
        "ideals": ideal_list,
        "invariants": "jacobi, [h,h] in h, [h,m] in m, B(h,m) = 0, frame orthonormal for -c2 B: verified",
    });
    let (mut v, passed) = match space.nearly_parallel_data() {
        Ok(d) => {
            let mut v = base;
            v["torsion"] = space.torsion_form()?.to_text().into();
            v["tau0"] = d.tau0.to_string().into();
            v["scal"] = d.scal.to_string().into();
            v["sigma_o"] = d.sigma_o.to_text().into();
            v["sigma_o_norm_squared"] = d.sigma_o.norm_squared().to_string().into();
            v["nearly_parallel"] = true.into();
            if cli.decimal {
                v["tau0_approx"] = approx(&d.tau0).into();
                v["scal_approx"] = approx(&d.scal).into();
            }
            (v, true)
        }
        Err(e @ (Error::NotNearlyParallel(_) | Error::NotSkew(_) | Error::NotStable(_))) => {
            let mut v = base;
            v["nearly_parallel"] = false.into();
            v["failure"] = e.to_string().into();
            (v, false)
        }
        Err(e) => return Err(e),
    };
    let text = match cli.format {
        Format::Json => pretty(&v)?,
        Format::Text => {
            let mut s = String::new();
            if let Some(obj) = v.as_object_mut() {
                for (k, val) in obj.iter() {
                    let shown = match val {
                        serde_json::Value::String(x) => x.clone(),
                        other => other.to_string(),
                    };
                    let _ = writeln!(s, "{k}: {shown}");
                }
            }
            s
        }
    };
    Ok(Outcome { text, passed })
}

fn candidates(cli: &Cli, name: &str) -> Result<Outcome, Error> {
    let space = select(name)?;
    if space.factors.is_empty() {
        return Err(Error::InvariantViolation("space declares no group factors".into()));
    }
    let spec = GroupSpec { factors: space.factors.clone() };
    let targets = deformation_targets();
    let search = enumerate_candidates(&spec, &targets)?;
    let rows: Vec<serde_json::Value> = search
        .candidates
        .iter()
        .map(|c| {
            let mut v = json!({
                "weight": c.weights,
                "label": c.label(),
                "casimir": c.casimir.to_string(),
                "adjoint_of": c.adjoint_of.map(|f| spec.factors[f].to_string()),
            });
            if cli.decimal {
                v["casimir_approx"] = approx(&FieldElem::from_rational(c.casimir.clone())).into();
            }
            v
        })
        .collect();
    let text = match cli.format {
        Format::Json => pretty(&json!({
            "space": space.name,
            "groups": spec.to_string(),
            "targets": targets.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "search_box": search.bounds,
            "candidates": rows,
        }))?,
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "space: {}", space.name);
            let _ = writeln!(s, "group: {spec}");
            let t: Vec<String> = targets.iter().map(ToString::to_string).collect();
            let _ = writeln!(s, "targets: {}", t.join(", "));
            let _ = writeln!(s, "search box:");
            for b in &search.bounds {
                let _ = writeln!(s, "  {b}");
            }
            let _ = writeln!(s, "{:<24} {:>8}  adjoint of", "candidate", "casimir");
            for c in &search.candidates {
                let adj = c.adjoint_of.map_or("-".to_string(), |f| spec.factors[f].to_string());
                let _ = writeln!(s, "{:<24} {:>8}  {adj}", c.label(), c.casimir.to_string());
            }
            s
        }
    };
    Ok(Outcome { text, passed: true })
}

fn deform(cli: &Cli, name: &str) -> Result<Outcome, Error> {
    let space = select(name)?;
    let report = solve_deformations(&space, Exec::default())?;
    let text = match cli.format {
        Format::Json => report.to_json(cli.decimal)?,
        Format::Text => report.to_text(cli.decimal),
    };
    Ok(Outcome { text, passed: true })
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Verify => verify(cli),
        Command::Check { space } => check(cli, space),
        Command::Candidates { space } => candidates(cli, space),
        Command::Deform { space } => deform(cli, space),
        Command::Export { space } => Ok(Outcome { text: space_to_json(&select(space)?)?, passed: true }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_threads_from_env();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &outcome.text),
        None => {
            print!("{}", outcome.text);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
