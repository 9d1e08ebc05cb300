//! Command-line front end for the Lefschetz toolkit.
//!
//! Subcommands load an algebra from a definition file (see `defs`) or
//! build a member of one of the built-in families, then run the matching
//! analysis:
//!
//! - `hilbert` prints the Hilbert series with its Sperner data;
//! - `check --weak|--strong` searches for a Lefschetz witness and exits 0
//!   for a certified witness, 1 for a certified failure, 2 when every
//!   candidate failed without a structural obstruction;
//! - `jordan`, `gr`, `csm` analyze multiplication by one chosen form;
//! - `tensor`, `powersum`, `xy` build and cross-check product and
//!   complete-intersection instances;
//! - `verify` runs the built-in consistency corpus.
//!
//! `--json` switches every subcommand to a machine format carrying a
//! top-level `"schema": 1`; identical inputs and search settings yield
//! byte-identical output. Usage and input errors exit with code 3.

mod defs;

use std::error::Error;
use std::path::{Path, PathBuf};
use std::process;

use clap::{ArgGroup, Parser, Subcommand};
use lefschetz_core::constructions::{
    central_simple_modules, central_simple_slp_check, free_extension_check,
    gorenstein_central_simple_check, graded_ring_consistency_check, monomial_ci_certificate,
    power_sum_report, run_verification_suite, tensor_slp_check, CheckReport,
};
use lefschetz_core::graded::{
    find_lefschetz_witness, LefschetzMode, LinearForm, SearchConfig,
};
use lefschetz_core::polyring::parse_polynomial;

use defs::Definition;

#[derive(Parser)]
#[command(
    name = "lefschetz",
    version,
    about = "Exact weak/strong Lefschetz analysis for weighted graded algebras"
)]
struct Cli {
    /// Emit machine-readable JSON instead of the human report.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the randomized phase of the witness search.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Random candidates tried after the deterministic ones.
    #[arg(long, global = true, default_value_t = 5)]
    trials: usize,
    /// Magnitude bound for random form coefficients.
    #[arg(long, global = true, default_value_t = 1_000_000, value_parser = clap::value_parser!(i64).range(1..))]
    coeff_bound: i64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Hilbert series and its Sperner data.
    Hilbert { file: PathBuf },
    /// Search for a weak or strong Lefschetz witness.
    #[command(group(ArgGroup::new("mode").required(true).args(["weak", "strong"])))]
    Check {
        file: PathBuf,
        /// Ask for a form with every slice map injective or surjective.
        #[arg(long)]
        weak: bool,
        /// Ask for a form with every centered power map bijective.
        #[arg(long)]
        strong: bool,
    },
    /// Print the Jordan profile of multiplication by a form.
    Jordan {
        file: PathBuf,
        /// A declared form name or a polynomial expression.
        #[arg(long)]
        form: Option<String>,
    },
    /// Compare the algebra against its associated graded ring at a form.
    Gr {
        file: PathBuf,
        /// A declared form name or a polynomial expression.
        #[arg(long)]
        form: Option<String>,
    },
    /// Decompose along a form's central simple modules and cross-check.
    Csm {
        file: PathBuf,
        /// A declared form name or a polynomial expression.
        #[arg(long)]
        form: Option<String>,
    },
    /// Check a tensor product of two algebras against its factors.
    Tensor { left: PathBuf, right: PathBuf },
    /// Build a power-sum complete intersection and verify it as a free extension.
    Powersum {
        /// Number of variables.
        #[arg(long)]
        n: usize,
        /// Lowest power-sum degree.
        #[arg(long)]
        a: usize,
    },
    /// Certify the two-variable monomial complete intersection (x^r, y^s).
    Xy {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
    },
    /// Run the built-in verification corpus.
    Verify {
        /// Restrict to one check family by its identifier, e.g. 9.1.
        #[arg(long)]
        filter: Option<String>,
    },
}

fn main() {
    // Restore the default SIGPIPE disposition so a downstream reader that
    // closes early (`lefschetz verify | head`) ends the process quietly
    // instead of panicking on a failed write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let config =
        SearchConfig { seed: cli.seed, trials: cli.trials, coeff_bound: cli.coeff_bound };
    let result = match &cli.command {
        Command::Hilbert { file } => cmd_hilbert(file, cli.json),
        Command::Check { file, weak, .. } => {
            let mode = if *weak { LefschetzMode::Weak } else { LefschetzMode::Strong };
            cmd_check(file, mode, cli.json, &config)
        }
        Command::Jordan { file, form } => cmd_jordan(file, form.as_deref(), cli.json),
        Command::Gr { file, form } => cmd_gr(file, form.as_deref(), cli.json, &config),
        Command::Csm { file, form } => cmd_csm(file, form.as_deref(), cli.json, &config),
        Command::Tensor { left, right } => cmd_tensor(left, right, cli.json, &config),
        Command::Powersum { n, a } => cmd_powersum(*n, *a, cli.json, &config),
        Command::Xy { r, s } => cmd_xy(*r, *s, cli.json),
        Command::Verify { filter } => cmd_verify(filter.as_deref(), cli.json, &config),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            3
        }
    }
}

/// Prints `value` with the top-level schema marker added.
fn emit(value: serde_json::Value) {
    let mut value = value;
    if let serde_json::Value::Object(map) = &mut value {
        map.insert("schema".into(), 1.into());
    }
    println!("{value}");
}

fn cmd_hilbert(path: &Path, json: bool) -> Result<i32, Box<dyn Error>> {
    let def = defs::load(path)?;
    let series = def.algebra.hilbert();
    let data = series.sperner_data();
    if json {
        emit(serde_json::json!({ "series": series.to_json(), "sperner": data.to_json() }));
    } else {
        println!("{}", join(&series.coefficient_row()));
        println!("sperner: {}", data.sperner);
        println!("cosperner: {}", data.cosperner);
        println!("sperner vector: {}", join(&data.sperner_vector));
        println!("symmetric: {}", data.symmetric);
        println!("unimodal: {}", data.unimodal);
        match &data.reflecting_degree {
            Some(d) => println!("reflecting degree: {d}"),
            None => println!("reflecting degree: none"),
        }
    }
    Ok(0)
}

fn cmd_check(
    path: &Path,
    mode: LefschetzMode,
    json: bool,
    config: &SearchConfig,
) -> Result<i32, Box<dyn Error>> {
    let def = defs::load(path)?;
    let report = find_lefschetz_witness(def.algebra.module(), mode, config)?;
    if json {
        emit(report.to_json());
    } else {
        println!("mode: {}", report.mode);
        println!("status: {}", report.status.as_str());
        if let Some(name) = &report.witness_name {
            println!("witness: {name}");
        }
        if let Some(obstruction) = &report.obstruction {
            println!("obstruction: {obstruction}");
        }
        if let Some(profile) = &report.profile {
            println!("profile: {profile}");
        }
        println!("hilbert: {}", report.hilbert);
    }
    Ok(report.exit_code())
}

fn cmd_jordan(path: &Path, form: Option<&str>, json: bool) -> Result<i32, Box<dyn Error>> {
    let def = defs::load(path)?;
    let (name, form) = resolve_form(&def, path, form)?;
    let profile = def.algebra.module().jordan_profile(&form)?;
    if json {
        emit(serde_json::json!({ "form": name, "profile": profile.blocks() }));
    } else {
        println!("{profile}");
    }
    Ok(0)
}

fn cmd_gr(
    path: &Path,
    form: Option<&str>,
    json: bool,
    config: &SearchConfig,
) -> Result<i32, Box<dyn Error>> {
    let def = defs::load(path)?;
    let (name, form) = resolve_form(&def, path, form)?;
    let instance = format!("{} with z = {}", path.display(), name);
    let report = graded_ring_consistency_check(&def.algebra, &form, &instance, config)?;
    Ok(finish_reports(&[report], json, &[]))
}

fn cmd_csm(
    path: &Path,
    form: Option<&str>,
    json: bool,
    config: &SearchConfig,
) -> Result<i32, Box<dyn Error>> {
    let def = defs::load(path)?;
    let (name, form) = resolve_form(&def, path, form)?;
    let decomposition = central_simple_modules(def.algebra.module(), &form)?;
    let instance = format!("{} with z = {}", path.display(), name);
    let mut reports =
        vec![central_simple_slp_check(&def.algebra, &form, &instance, config)?];
    if def.algebra.is_gorenstein() {
        reports.push(gorenstein_central_simple_check(&def.algebra, &form, &instance, config)?);
    }
    if !json {
        for (i, module) in decomposition.modules().iter().enumerate() {
            println!(
                "U_{}: f = {}, multiplicity = {}, h = {}, thickened h = {}",
                i + 1,
                decomposition.f_values()[i],
                decomposition.multiplicities()[i],
                module.hilbert(),
                decomposition.tilde_modules()[i].hilbert(),
            );
        }
    }
    let shown_by_table = ["f_values", "multiplicities", "quotient_series", "thickened_series"];
    Ok(finish_reports(&reports, json, &shown_by_table))
}

fn cmd_tensor(
    left: &Path,
    right: &Path,
    json: bool,
    config: &SearchConfig,
) -> Result<i32, Box<dyn Error>> {
    let left_def = defs::load(left)?;
    let right_def = defs::load(right)?;
    let instance = format!("{} (x) {}", left.display(), right.display());
    let report = tensor_slp_check(
        left_def.algebra.module(),
        right_def.algebra.module(),
        &instance,
        config,
    )?;
    Ok(finish_reports(&[report], json, &[]))
}

fn cmd_powersum(
    n: usize,
    a: usize,
    json: bool,
    config: &SearchConfig,
) -> Result<i32, Box<dyn Error>> {
    let (instance, power_report) = power_sum_report(n, a, config)?;
    let extension_report = free_extension_check(&instance, config)?;
    Ok(finish_reports(&[extension_report, power_report], json, &[]))
}

fn cmd_xy(r: usize, s: usize, json: bool) -> Result<i32, Box<dyn Error>> {
    let (_, report) = monomial_ci_certificate(r, s)?;
    Ok(finish_reports(&[report], json, &[]))
}

fn cmd_verify(
    filter: Option<&str>,
    json: bool,
    config: &SearchConfig,
) -> Result<i32, Box<dyn Error>> {
    let reports = run_verification_suite(filter, config)?;
    if let Some(f) = filter {
        if reports.is_empty() {
            return Err(format!("no checks match filter `{f}`").into());
        }
    }
    if json {
        emit(serde_json::json!({
            "reports": reports.iter().map(CheckReport::to_json).collect::<Vec<_>>(),
        }));
    } else {
        for report in &reports {
            println!("{report}");
        }
        let failed = reports.iter().filter(|r| !r.consistent).count();
        if failed == 0 {
            println!("{} checks, all consistent", reports.len());
        } else {
            println!("{} checks, {failed} inconsistent", reports.len());
        }
    }
    Ok(if reports.iter().all(|r| r.consistent) { 0 } else { 1 })
}

/// Picks the form a command should analyze: an explicit `--form` value is
/// first matched against declared names and otherwise parsed as an
/// expression; with no flag the file must declare exactly one form.
fn resolve_form(
    def: &Definition,
    path: &Path,
    spec: Option<&str>,
) -> Result<(String, LinearForm), Box<dyn Error>> {
    match spec {
        Some(text) => {
            if let Some((name, form)) = def.forms.iter().find(|(n, _)| n == text) {
                return Ok((name.clone(), form.clone()));
            }
            let ring = def.algebra.presentation().ring().clone();
            let poly = parse_polynomial(text, &ring)
                .map_err(|e| format!("in --form expression: {e}"))?;
            let form = def
                .algebra
                .form_from_polynomial(&poly)
                .map_err(|e| format!("in --form expression: {e}"))?;
            Ok((def.algebra.module().form_name(&form), form))
        }
        None => match def.forms.len() {
            1 => Ok(def.forms[0].clone()),
            0 => Err(format!(
                "{} declares no forms; pass --form <name or expression>",
                path.display()
            )
            .into()),
            n => Err(format!("{} declares {n} forms; pass --form to choose one", path.display())
                .into()),
        },
    }
}

/// Prints consistency reports and maps them to an exit code: 0 when every
/// report is consistent, 1 otherwise. `shown_elsewhere` names detail keys
/// a command has already rendered in a friendlier layout.
fn finish_reports(reports: &[CheckReport], json: bool, shown_elsewhere: &[&str]) -> i32 {
    if json {
        emit(serde_json::json!({
            "reports": reports.iter().map(CheckReport::to_json).collect::<Vec<_>>(),
        }));
    } else {
        for report in reports {
            println!("{report}");
            if let serde_json::Value::Object(map) = &report.details {
                for (key, value) in map {
                    if shown_elsewhere.contains(&key.as_str()) {
                        continue;
                    }
                    println!("  {key}: {}", render_value(value));
                }
            }
        }
    }
    if reports.iter().all(|r| r.consistent) {
        0
    } else {
        1
    }
}

fn render_value(value: &serde_json::Value) -> String {
    match value {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn join(row: &[usize]) -> String {
    row.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}
