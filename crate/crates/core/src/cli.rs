//! Command-line front end: `list`, `verify`, `sweep` and `all`.
//!
//! Exit status is 0 when every executed check passed, 1 when any check
//! failed and 2 for usage or validation errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::identities::{
    list_identities, parse_binding, validate, IdentityId, IdentitySpec, IntegrationDomain, Params,
};
use crate::quadrature::QuadratureConfig;
use crate::report::{write_atomic, OutputFormat, Report};
use crate::verifier::{full_matrix, sweep, verify_with, RunConfig, SweepGrid, Thresholds};
use crate::Error;

/// Environment variable that overrides the default `max_level`.
pub const MAX_LEVEL_ENV: &str = "LOGLOG_LAB_MAX_LEVEL";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "loglog-lab",
    version,
    about = "Verify doubly logarithmic integral identities by quadrature, series and closed form"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the registered identities and their parameters.
    List,
    /// Verify one identity at one parameter point.
    Verify(Target),
    /// Verify one identity over a parameter grid (default grid if no --param).
    Sweep(Target),
    /// Run every identity over its default grid.
    All,
}

#[derive(Debug, Args)]
struct Target {
    /// Identity tag, e.g. GR-4.325.7.
    #[arg(long)]
    id: String,
    /// Parameter binding name=value; complex values as a+bi. Repeat for sweeps.
    #[arg(long = "param", value_name = "NAME=VALUE")]
    params: Vec<String>,
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Quadrature absolute tolerance.
    #[arg(long, global = true)]
    abs_tol: Option<f64>,
    /// Finest quadrature level (3..=12); overrides LOGLOG_LAB_MAX_LEVEL.
    #[arg(long, global = true)]
    max_level: Option<u32>,
    /// Acceptance threshold applied to every check.
    #[arg(long, global = true)]
    threshold: Option<f64>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: OutputFormat,
    /// Write the report here (atomically) instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Record elapsed = 0 so repeated runs produce identical reports.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum CommandKind {
    List,
    Verify,
    Sweep,
    All,
}

/// A parsed and validated command line.
#[derive(Debug, Clone, PartialEq)]
pub struct CliConfig {
    pub command: CommandKind,
    pub identity_id: Option<IdentityId>,
    /// Parameter points: one for `verify`, the grid for `sweep`.
    pub points: Vec<Params>,
    pub run: RunConfig,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
}

/// A usage or validation error, with the text shown to the user.
#[derive(Debug, Clone, PartialEq)]
pub struct UsageError(pub String);

impl CliConfig {
    /// Parses arguments (including the program name) and validates them
    /// against the registry. `env_max_level` is the raw value of
    /// [`MAX_LEVEL_ENV`], if set.
    pub fn parse<I, T>(args: I, env_max_level: Option<String>) -> Result<Self, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args)?;
        Self::from_cli(cli, env_max_level).map_err(|UsageError(msg)| {
            clap::Error::raw(clap::error::ErrorKind::ValueValidation, msg + "\n")
        })
    }

    fn from_cli(cli: Cli, env_max_level: Option<String>) -> Result<Self, UsageError> {
        let common = cli.common;
        let mut quadrature = QuadratureConfig::default();
        if let Some(tol) = common.abs_tol {
            quadrature.abs_tol = tol;
        }
        let max_level = match (common.max_level, env_max_level) {
            (Some(level), _) => Some(level),
            (None, Some(raw)) => Some(raw.trim().parse::<u32>().map_err(|_| {
                UsageError(format!("{MAX_LEVEL_ENV}: expected an integer in 3..=12, got `{raw}`"))
            })?),
            (None, None) => None,
        };
        if let Some(level) = max_level {
            quadrature.max_level = level;
        }
        quadrature
            .validate()
            .map_err(|e| UsageError(format!("--abs-tol/--max-level: {e}")))?;
        let thresholds = match common.threshold {
            Some(t) if t.is_finite() && t > 0.0 => Thresholds::uniform(t),
            Some(t) => return Err(UsageError(format!("--threshold must be positive, got {t}"))),
            None => Thresholds::default(),
        };
        let run = RunConfig {
            quadrature,
            thresholds,
            record_timing: !common.no_timing,
        };

        let (command, identity_id, points) = match cli.command {
            Command::List => (CommandKind::List, None, Vec::new()),
            Command::All => (CommandKind::All, None, Vec::new()),
            Command::Verify(target) => {
                let id = parse_id(&target.id)?;
                let params = single_point(id, &target.params)?;
                (CommandKind::Verify, Some(id), vec![params])
            }
            Command::Sweep(target) => {
                let id = parse_id(&target.id)?;
                let points = sweep_points(id, &target.params)?;
                (CommandKind::Sweep, Some(id), points)
            }
        };
        Ok(CliConfig {
            command,
            identity_id,
            points,
            run,
            output_format: common.format,
            output_path: common.output,
        })
    }
}

fn parse_id(text: &str) -> Result<IdentityId, UsageError> {
    text.parse().map_err(|_| {
        let known: Vec<&str> = IdentityId::ALL.iter().map(|id| id.as_str()).collect();
        UsageError(format!("--id: unknown identity `{text}` (known: {})", known.join(", ")))
    })
}

fn param_error(id: IdentityId, detail: impl std::fmt::Display) -> UsageError {
    let schema = id.spec().schema_description();
    let detail = detail.to_string();
    if detail.contains(&schema) {
        UsageError(format!("--param: {detail}"))
    } else {
        UsageError(format!("--param: {detail}\n  {id} parameters: {schema}"))
    }
}

fn single_point(id: IdentityId, bindings: &[String]) -> Result<Params, UsageError> {
    let mut params = Params::new();
    for text in bindings {
        let (name, value) = parse_binding(text).map_err(|e| param_error(id, e))?;
        if params.get(&name).is_some() {
            return Err(param_error(id, format!("`{name}` given more than once")));
        }
        params.insert(&name, value);
    }
    check_params(id, &params)?;
    Ok(params)
}

fn check_params(id: IdentityId, params: &Params) -> Result<(), UsageError> {
    validate(id, params).map_err(|e| match e {
        Error::InvalidParams { detail, .. } => param_error(id, detail),
        other => param_error(id, other),
    })
}

fn sweep_points(id: IdentityId, bindings: &[String]) -> Result<Vec<Params>, UsageError> {
    if bindings.is_empty() {
        return Ok(SweepGrid::default_for(id)
            .map(|g| g.points())
            .unwrap_or_else(|| vec![Params::new()]));
    }
    let mut name: Option<String> = None;
    let mut values = Vec::new();
    for text in bindings {
        let (n, v) = parse_binding(text).map_err(|e| param_error(id, e))?;
        match &name {
            Some(existing) if *existing != n => {
                return Err(param_error(id, "a sweep varies a single parameter"));
            }
            _ => name = Some(n),
        }
        values.push(v);
    }
    let name = name.expect("at least one binding");
    let points: Vec<Params> = values.iter().map(|&v| Params::new().with(&name, v)).collect();
    for p in &points {
        check_params(id, p)?;
    }
    Ok(points)
}

#[derive(Serialize)]
struct ListEntry<'a> {
    id: &'a str,
    params: Vec<String>,
    value_kind: crate::identities::ValueKind,
    integration_domain: &'static str,
    has_series_form: bool,
    statement: &'a str,
}

fn domain_label(d: IntegrationDomain) -> &'static str {
    match d {
        IntegrationDomain::Unit => "(0, 1)",
        IntegrationDomain::QuarterToHalfPi => "(π/4, π/2)",
        IntegrationDomain::None => "none",
    }
}

fn list_entry(spec: &IdentitySpec) -> ListEntry<'_> {
    ListEntry {
        id: spec.id.as_str(),
        params: spec
            .param_schema
            .iter()
            .map(|k| format!("{}: {}", k.name(), k.domain()))
            .collect(),
        value_kind: spec.value_kind,
        integration_domain: domain_label(spec.integration_domain),
        has_series_form: spec.has_series_form,
        statement: spec.statement,
    }
}

fn render_list(format: OutputFormat) -> String {
    let entries: Vec<ListEntry> = list_identities().iter().map(list_entry).collect();
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(&entries).expect("plain data") + "\n",
        OutputFormat::Markdown => {
            let mut out = String::from("| id | params | domain | series | statement |\n|---|---|---|---|---|\n");
            for e in &entries {
                let params = if e.params.is_empty() { "-".to_string() } else { e.params.join("; ") };
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} |\n",
                    e.id,
                    params,
                    e.integration_domain,
                    if e.has_series_form { "yes" } else { "no" },
                    e.statement
                ));
            }
            out
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["id", "params", "integration_domain", "has_series_form", "statement"])
                .expect("in-memory write");
            for e in &entries {
                w.write_record([
                    e.id,
                    &e.params.join("; "),
                    e.integration_domain,
                    if e.has_series_form { "true" } else { "false" },
                    e.statement,
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        }
    }
}

/// Runs a validated configuration, writing the report to `out` unless an
/// output path was given. Returns the exit status.
pub fn execute(config: &CliConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let (text, status) = match config.command {
        CommandKind::List => (render_list(config.output_format), EXIT_OK),
        _ => {
            let report = match build_report(config) {
                Ok(r) => r,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    return EXIT_USAGE;
                }
            };
            let status = if report.all_passed() { EXIT_OK } else { EXIT_FAILED };
            (report.render(config.output_format), status)
        }
    };
    let written = match &config.output_path {
        Some(path) => write_atomic(path, &text),
        None => out.write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: cannot write report: {e}");
        return EXIT_USAGE;
    }
    status
}

fn build_report(config: &CliConfig) -> crate::Result<Report> {
    let run = &config.run;
    match config.command {
        CommandKind::All => full_matrix(run),
        CommandKind::Verify => {
            let id = config.identity_id.expect("verify carries an identity");
            let result = verify_with(id, &config.points[0], run)?;
            Ok(Report::new(*run, vec![result]))
        }
        CommandKind::Sweep => {
            let id = config.identity_id.expect("sweep carries an identity");
            let results = match id.spec().param_schema.first() {
                Some(kind) => {
                    let values = config
                        .points
                        .iter()
                        .map(|p| p.get(kind.name()).expect("validated point"))
                        .collect();
                    sweep(id, &SweepGrid::new(id, kind.name(), values)?, run)?
                }
                None => vec![verify_with(id, &Params::new(), run)?],
            };
            Ok(Report::new(*run, results))
        }
        CommandKind::List => unreachable!("list does not build a report"),
    }
}

/// Full command-line entry point: parse, validate, run.
pub fn run<I, T>(args: I, env_max_level: Option<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match CliConfig::parse(args, env_max_level) {
        Ok(config) => execute(&config, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            code
        }
    }
}
