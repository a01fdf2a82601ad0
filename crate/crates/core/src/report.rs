//! Report structure and its JSON, Markdown and CSV renderings.
//!
//! JSON layout: `{"run_config": …, "results": […], "summary": {"pass", "fail",
//! "skipped"}}`. Complex values are written as `{"re": r, "im": i}` and values
//! with a zero imaginary part as plain numbers. Numbers use the shortest
//! representation that parses back to the same `f64`.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::identities::{format_complex, IntegrationDomain};
use crate::verifier::{RunConfig, Verdict, VerificationResult};
use crate::ComplexValue;

/// Serde adapters for [`ComplexValue`].
pub mod complex_repr {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    pub(crate) enum Repr {
        Real(f64),
        Complex { re: f64, im: f64 },
    }

    impl From<ComplexValue> for Repr {
        fn from(v: ComplexValue) -> Self {
            if v.im == 0.0 {
                Repr::Real(v.re)
            } else {
                Repr::Complex { re: v.re, im: v.im }
            }
        }
    }

    impl From<Repr> for ComplexValue {
        fn from(r: Repr) -> Self {
            match r {
                Repr::Real(re) => ComplexValue::new(re, 0.0),
                Repr::Complex { re, im } => ComplexValue::new(re, im),
            }
        }
    }

    pub fn serialize<S: Serializer>(v: &ComplexValue, s: S) -> Result<S::Ok, S::Error> {
        Repr::from(*v).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<ComplexValue, D::Error> {
        Repr::deserialize(d).map(Into::into)
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(v: &Option<ComplexValue>, s: S) -> Result<S::Ok, S::Error> {
            v.map(Repr::from).serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<ComplexValue>, D::Error> {
            Ok(Option::<Repr>::deserialize(d)?.map(Into::into))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(results: &[VerificationResult]) -> Self {
        let mut s = Summary::default();
        for r in results {
            match r.verdict {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::Skipped => s.skipped += 1,
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub run_config: RunConfig,
    pub results: Vec<VerificationResult>,
    pub summary: Summary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Markdown,
    Csv,
}

impl Report {
    pub fn new(run_config: RunConfig, results: Vec<VerificationResult>) -> Self {
        let summary = Summary::of(&results);
        Report {
            run_config,
            results,
            summary,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report values are finite")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str("| id | params | lhs | rhs | \\|Δ\\| | verdict |\n");
        out.push_str("|---|---|---|---|---|---|\n");
        for r in &self.results {
            // Entries without an integral show the series as their left side.
            let lhs = match r.identity_id.spec().integration_domain {
                IntegrationDomain::None => r.series_value,
                _ => r.lhs_quadrature,
            };
            let delta = r.max_error().map_or("-".to_string(), |e| format!("{e:.2e}"));
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} |",
                r.identity_id,
                r.params,
                short(lhs),
                short(r.rhs_closed),
                delta,
                r.verdict.as_str()
            );
        }
        let s = self.summary;
        let _ = writeln!(out, "\npass: {}, fail: {}, skipped: {}", s.pass, s.fail, s.skipped);
        for r in self.results.iter().filter(|r| r.cause.is_some()) {
            let _ = writeln!(
                out,
                "- {} {}: {}",
                r.identity_id,
                r.params,
                r.cause.as_deref().unwrap_or_default()
            );
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let header = [
            "identity_id",
            "params",
            "lhs_quadrature_re",
            "lhs_quadrature_im",
            "lhs_halfline_re",
            "lhs_halfline_im",
            "rhs_closed_re",
            "rhs_closed_im",
            "series_value_re",
            "series_value_im",
            "abs_error_qc",
            "abs_error_hc",
            "abs_error_qs",
            "abs_error_cs",
            "quad_error_estimate",
            "evaluations",
            "elapsed",
            "threshold",
            "verdict",
            "cause",
        ];
        w.write_record(header).expect("in-memory write");
        for r in &self.results {
            let mut row = vec![r.identity_id.to_string(), r.params.to_string()];
            for v in [r.lhs_quadrature, r.lhs_halfline, r.rhs_closed, r.series_value] {
                row.push(num(v.map(|c| c.re)));
                row.push(num(v.map(|c| c.im)));
            }
            for e in [
                r.abs_error_qc,
                r.abs_error_hc,
                r.abs_error_qs,
                r.abs_error_cs,
                r.quad_error_estimate,
            ] {
                row.push(num(e));
            }
            row.push(r.evaluations.to_string());
            row.push(r.elapsed.to_string());
            row.push(r.threshold.to_string());
            row.push(r.verdict.as_str().to_string());
            row.push(r.cause.clone().unwrap_or_default());
            w.write_record(&row).expect("in-memory write");
        }
        let bytes = w.into_inner().expect("in-memory flush");
        String::from_utf8(bytes).expect("csv output is utf-8")
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => self.to_json() + "\n",
            OutputFormat::Markdown => self.to_markdown(),
            OutputFormat::Csv => self.to_csv(),
        }
    }
}

fn num(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn short(v: Option<ComplexValue>) -> String {
    match v {
        None => "-".to_string(),
        Some(c) if c.im == 0.0 => format!("{:.12}", c.re),
        Some(c) => format_complex(ComplexValue::new(round12(c.re), round12(c.im))),
    }
}

fn round12(x: f64) -> f64 {
    format!("{x:.12}").parse().unwrap_or(x)
}

/// Writes `contents` to `path` through a temporary file in the same directory
/// followed by a rename, so readers never observe a partial report.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::{IdentityId, Params};
    use crate::verifier::{verify_with, RunConfig};

    fn sample() -> Report {
        let run = RunConfig {
            record_timing: false,
            ..RunConfig::default()
        };
        let results = vec![
            verify_with(IdentityId::Gr4325_1, &Params::new(), &run).unwrap(),
            verify_with(
                IdentityId::Gr4325_8,
                &Params::new().with("mu", ComplexValue::new(1.0, 1.0)),
                &run,
            )
            .unwrap(),
            verify_with(IdentityId::SawtoothEq7, &Params::new().with_real("x", 0.25), &run).unwrap(),
        ];
        Report::new(run, results)
    }

    #[test]
    fn json_round_trip() {
        let report = sample();
        let text = report.to_json();
        assert!(text.contains("\"abs_error_qc\""));
        assert!(text.contains("\"re\""));
        let back = Report::from_json(&text).unwrap();
        assert_eq!(back, report);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn markdown_has_one_row_per_check() {
        let report = sample();
        let md = report.to_markdown();
        let rows = md.lines().filter(|l| l.starts_with("| GR-") || l.starts_with("| SAW")).count();
        assert_eq!(rows, report.results.len());
        assert!(md.starts_with("| id | params | lhs | rhs |"));
    }

    #[test]
    fn csv_rows() {
        let report = sample();
        let text = report.to_csv();
        let mut rdr = csv::Reader::from_reader(text.as_bytes());
        assert_eq!(rdr.records().count(), report.results.len());
    }

    #[test]
    fn atomic_write() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("r.json");
        write_atomic(&path, "first").unwrap();
        write_atomic(&path, "second").unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), "second");
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    }
}
