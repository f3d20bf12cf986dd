//! Command-line front end: triple loading, command dispatch and reports.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::algebra::{builtin, parse_triple, validate_triple, SymmetricBimodule, Triple};
use crate::complex::{classical_hochschild_dims, CochainComplex};
use crate::derivations::{check_hc1, check_hh1, der1_system, der_system};
use crate::error::Error;
use crate::exactlin::Rational;
use crate::kaehler::{check_universal, classical_omega_dim, hom_omega, omega_presentation};
use crate::report::CheckReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Validate,
    Hh,
    Hc,
    Der,
    Der1,
    Omega,
    Check,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Hh => "hh",
            Command::Hc => "hc",
            Command::Der => "der",
            Command::Der1 => "der1",
            Command::Omega => "omega",
            Command::Check => "check",
        }
    }
}

/// Which symmetric bimodule plays the role of M.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ModuleChoice {
    /// M = A*
    #[default]
    Dual,
    /// M = A
    #[value(name = "self")]
    #[serde(rename = "self")]
    Regular,
}

impl ModuleChoice {
    pub fn build(self, t: &Triple) -> SymmetricBimodule {
        match self {
            ModuleChoice::Dual => SymmetricBimodule::dual(t.a()),
            ModuleChoice::Regular => SymmetricBimodule::regular(t.a()),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Builtin(String),
    File(PathBuf),
}

#[derive(Clone, Debug, Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Built-in triple: field, dual-k, dual-dual, trunc-x4, mat2-k
    #[arg(long, value_name = "NAME")]
    builtin: Option<String>,
    /// JSON file describing a triple
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
}

/// Exact secondary Hochschild and cyclic cohomology over Q.
#[derive(Debug, Parser)]
#[command(name = "secohom", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    #[command(flatten)]
    input: InputArgs,
    /// Highest cochain level to compute
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(0..=3))]
    max_n: u8,
    #[arg(long, value_enum, default_value_t = ModuleChoice::Dual)]
    module: ModuleChoice,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub input: Input,
    pub command: Command,
    pub max_n: usize,
    pub module_choice: ModuleChoice,
    pub format: Format,
}

impl RunConfig {
    pub const MAX_N_CAP: usize = 3;

    /// Parses command-line arguments, exiting with usage on error.
    pub fn from_args() -> Self {
        Self::from_cli(Cli::parse())
    }

    pub fn try_from_args<I, T>(args: I) -> Result<Self, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        Cli::try_parse_from(args).map(Self::from_cli)
    }

    fn from_cli(cli: Cli) -> Self {
        let input = match (cli.input.builtin, cli.input.file) {
            (Some(name), _) => Input::Builtin(name),
            (None, Some(path)) => Input::File(path),
            (None, None) => unreachable!("clap enforces one input"),
        };
        RunConfig {
            input,
            command: cli.command,
            max_n: cli.max_n as usize,
            module_choice: cli.module,
            format: cli.format,
        }
    }

    pub fn builtin(name: &str, command: Command) -> Self {
        RunConfig {
            input: Input::Builtin(name.to_string()),
            command,
            max_n: 2,
            module_choice: ModuleChoice::Dual,
            format: Format::Json,
        }
    }

    pub fn load(&self) -> Result<Triple, Error> {
        match &self.input {
            Input::Builtin(name) => builtin::builtin(name),
            Input::File(path) => {
                let text = std::fs::read_to_string(path)?;
                parse_triple(&text)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleSummary {
    pub source: String,
    pub dim_a: usize,
    pub dim_b: usize,
    pub labels_a: Vec<String>,
    pub labels_b: Vec<String>,
    pub commutative: bool,
}

impl TripleSummary {
    fn new(source: String, t: &Triple) -> Self {
        TripleSummary {
            source,
            dim_a: t.a().dim(),
            dim_b: t.b().dim(),
            labels_a: t.a().labels().to_vec(),
            labels_b: t.b().labels().to_vec(),
            commutative: t.is_commutative(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionSpace {
    pub module: ModuleChoice,
    pub dim: usize,
    pub basis: Vec<Vec<(usize, Rational)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaSummary {
    pub dim: usize,
    pub free_dim: usize,
    pub relation_rank: usize,
    pub hom_module: ModuleChoice,
    pub hom_dim: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Results {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub valid: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hh: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hc: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub der: Option<SolutionSpace>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub der1: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<OmegaSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skipped {
    pub name: String,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CohomologyReport {
    pub triple: TripleSummary,
    pub command: Command,
    pub results: Results,
    pub checks: Vec<CheckReport>,
    pub skipped: Vec<Skipped>,
    pub timing_ms: u64,
}

// timing is excluded so that reruns compare equal
impl PartialEq for CohomologyReport {
    fn eq(&self, other: &Self) -> bool {
        self.triple == other.triple
            && self.command == other.command
            && self.results == other.results
            && self.checks == other.checks
            && self.skipped == other.skipped
    }
}

impl CohomologyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, Error> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let t = &self.triple;
        let _ = writeln!(
            out,
            "triple {}: dim A = {}, dim B = {}, {}",
            t.source,
            t.dim_a,
            t.dim_b,
            if t.commutative { "commutative" } else { "noncommutative" }
        );
        let r = &self.results;
        if let Some(v) = r.valid {
            let _ = writeln!(out, "valid: {v}");
        }
        if let Some(hh) = &r.hh {
            let _ = writeln!(out, "HH dims: {hh:?}");
        }
        if let Some(hc) = &r.hc {
            let _ = writeln!(out, "HC dims: {hc:?}");
        }
        if let Some(d) = &r.der {
            let name = match d.module {
                ModuleChoice::Dual => "A*",
                ModuleChoice::Regular => "A",
            };
            let _ = writeln!(out, "Der(T, {name}) dim: {}", d.dim);
        }
        if let Some(d) = r.der1 {
            let _ = writeln!(out, "Der1 dim: {d}");
        }
        if let Some(o) = &r.omega {
            let _ = writeln!(
                out,
                "Omega1 dim: {} (free {}, relations {}); Hom dim: {}",
                o.dim, o.free_dim, o.relation_rank, o.hom_dim
            );
        }
        for c in &self.checks {
            let _ = writeln!(out, "[{}] {}: {}", if c.passed { "pass" } else { "FAIL" }, c.name, c.detail);
            if let Some(w) = &c.witness {
                let entries: Vec<String> = w.iter().map(|(i, v)| format!("{i}:{v}")).collect();
                let _ = writeln!(out, "       witness {{{}}}", entries.join(", "));
            }
        }
        for s in &self.skipped {
            let _ = writeln!(out, "[skip] {}: {}", s.name, s.reason);
        }
        let _ = writeln!(out, "time: {} ms", self.timing_ms);
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
        }
    }
}

fn source_name(input: &Input) -> String {
    match input {
        Input::Builtin(name) => name.clone(),
        Input::File(path) => path.display().to_string(),
    }
}

fn solution_space(module: ModuleChoice, basis: &crate::exactlin::SubspaceBasis) -> SolutionSpace {
    SolutionSpace {
        module,
        dim: basis.dim(),
        basis: basis.vectors().iter().map(|v| v.entries().to_vec()).collect(),
    }
}

/// Runs one command. Errors cover unreadable input and commutative-only
/// commands on a noncommutative triple; failing checks are reported, not
/// returned as errors.
pub fn run(config: &RunConfig) -> Result<CohomologyReport, Error> {
    if config.max_n > RunConfig::MAX_N_CAP {
        return Err(Error::Malformed(format!(
            "max_n {} exceeds the cap {}",
            config.max_n,
            RunConfig::MAX_N_CAP
        )));
    }
    let start = Instant::now();
    let t = config.load()?;
    let mut report = CohomologyReport {
        triple: TripleSummary::new(source_name(&config.input), &t),
        command: config.command,
        results: Results::default(),
        checks: Vec::new(),
        skipped: Vec::new(),
        timing_ms: 0,
    };
    match config.command {
        Command::Validate => {
            let check = validation_check(&t);
            report.results.valid = Some(check.passed);
            report.checks.push(check);
        }
        Command::Hh => {
            let cx = CochainComplex::build(&t, config.max_n)?;
            report.results.hh = Some(cx.hochschild_dims());
        }
        Command::Hc => {
            let cx = CochainComplex::build(&t, config.max_n)?;
            report.results.hc = Some(cx.cyclic_dims()?);
        }
        Command::Der => {
            t.require_commutative("der")?;
            let system = der_system(&t, &config.module_choice.build(&t))?;
            report.results.der = Some(solution_space(config.module_choice, &system.solutions()));
        }
        Command::Der1 => {
            t.require_commutative("der1")?;
            report.results.der1 = Some(der1_system(&t)?.solutions().dim());
        }
        Command::Omega => {
            t.require_commutative("omega")?;
            let omega = omega_presentation(&t)?;
            let hom = hom_omega(&t, &config.module_choice.build(&t))?;
            report.results.omega = Some(OmegaSummary {
                dim: omega.dim(),
                free_dim: omega.free_dim(),
                relation_rank: omega.relation_span().dim(),
                hom_module: config.module_choice,
                hom_dim: hom.solutions().dim(),
            });
        }
        Command::Check => run_checks(&t, config.max_n, &mut report)?,
    }
    report.timing_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

fn validation_check(t: &Triple) -> CheckReport {
    match validate_triple(t) {
        Ok(()) => CheckReport::pass("validate_triple", "all axioms hold"),
        Err(v) => CheckReport::fail_plain("validate_triple", v.to_string()),
    }
}

fn run_checks(t: &Triple, max_n: usize, report: &mut CohomologyReport) -> Result<(), Error> {
    let validation = validation_check(t);
    let valid = validation.passed;
    report.results.valid = Some(valid);
    report.checks.push(validation);
    if !valid {
        report.skipped.push(Skipped {
            name: "remaining checks".into(),
            reason: "triple failed validation".into(),
        });
        return Ok(());
    }

    let cx = CochainComplex::build(t, max_n)?;
    report.checks.push(cx.verify());
    report.checks.push(cx.verify_cyclic_order());
    let hh = cx.hochschild_dims();
    report.results.hh = Some(hh.clone());
    match cx.cyclic_dims() {
        Ok(hc) => {
            report.checks.push(CheckReport::pass(
                "cyclic_subcomplex",
                format!("Ker(1 - Λ) is preserved up to level {max_n}"),
            ));
            report.results.hc = Some(hc);
        }
        Err(Error::SubcomplexViolation { level }) => report.checks.push(CheckReport::fail_plain(
            "cyclic_subcomplex",
            format!("∂ does not preserve cyclic cochains at level {level}"),
        )),
        Err(e) => return Err(e),
    }

    if t.is_commutative() {
        let d0_zero = cx.boundary(0).is_zero();
        report.checks.push(if d0_zero {
            CheckReport::pass("boundary0_vanishes", "∂⁰ = 0")
        } else {
            CheckReport::fail_plain("boundary0_vanishes", "∂⁰ is nonzero on a commutative triple")
        });
        report.checks.push(check_hh1(t)?);
        report.checks.push(check_hc1(t)?);
        for choice in [ModuleChoice::Dual, ModuleChoice::Regular] {
            report.checks.push(check_universal(t, &choice.build(t))?);
        }
    } else {
        for name in [
            "boundary0_vanishes",
            "HH1 = Der(T, A*)",
            "HC1 = Der1(T, A*)",
            "Hom_A(Ω1, A*) = Der(T, A*)",
            "Hom_A(Ω1, A) = Der(T, A)",
        ] {
            report.skipped.push(Skipped {
                name: name.into(),
                reason: "requires a commutative triple".into(),
            });
        }
    }

    if t.b().dim() == 1 {
        let classical = classical_hochschild_dims(t.a(), max_n)?;
        report.checks.push(if classical == hh {
            CheckReport::pass("classical_reduction", format!("HH matches classical HH(A, A*) = {classical:?}"))
        } else {
            CheckReport::fail_plain(
                "classical_reduction",
                format!("secondary {hh:?} differs from classical {classical:?}"),
            )
        });
        if t.is_commutative() {
            let secondary = omega_presentation(t)?.dim();
            let classical = classical_omega_dim(t.a())?;
            report.checks.push(if secondary == classical {
                CheckReport::pass("classical_omega", format!("Ω¹ matches classical I/I², dim {classical}"))
            } else {
                CheckReport::fail_plain(
                    "classical_omega",
                    format!("secondary Ω¹ dim {secondary} differs from classical {classical}"),
                )
            });
        }
    } else {
        report.skipped.push(Skipped {
            name: "classical_reduction".into(),
            reason: "B is not the ground field".into(),
        });
    }
    Ok(())
}
