//! Three-way checks: quadrature of the left side, the closed form, and the
//! equivalent series, compared pairwise against an acceptance threshold.

use std::f64::consts::PI;
use std::thread;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::identities::{
    closed_form_with_tol, default_grid, series_form, validate, IdentityId, Integrand,
    IntegrationDomain, ParamKind, Params, ValueKind,
};
use crate::quadrature::{
    integrate_halfline, integrate_interval, transform_loglog, QuadratureConfig, QuadratureResult,
};
use crate::report::{complex_repr, Report};
use crate::{ComplexValue, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
        }
    }
}

/// Outcome of one identity at one parameter point.
///
/// Comparison slots that do not apply (no integral, no series, or a failed
/// evaluation) are `None`; `cause` then says why when it was a failure.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationResult {
    pub identity_id: IdentityId,
    pub params: Params,
    #[serde(with = "complex_repr::option")]
    pub lhs_quadrature: Option<ComplexValue>,
    /// Second quadrature route through the half-line substitution (GR-4.325.10).
    #[serde(with = "complex_repr::option")]
    pub lhs_halfline: Option<ComplexValue>,
    #[serde(with = "complex_repr::option")]
    pub rhs_closed: Option<ComplexValue>,
    #[serde(with = "complex_repr::option")]
    pub series_value: Option<ComplexValue>,
    /// |quadrature − closed form|
    pub abs_error_qc: Option<f64>,
    /// |half-line quadrature − closed form|
    pub abs_error_hc: Option<f64>,
    /// |quadrature − series|
    pub abs_error_qs: Option<f64>,
    /// |closed form − series|
    pub abs_error_cs: Option<f64>,
    /// Sum of the error estimates reported by the quadrature routes.
    pub quad_error_estimate: Option<f64>,
    pub evaluations: u64,
    /// Wall time in seconds; 0 when timing is disabled.
    pub elapsed: f64,
    pub threshold: f64,
    pub verdict: Verdict,
    pub cause: Option<String>,
}

impl VerificationResult {
    /// The populated pairwise errors, in field order.
    pub fn errors(&self) -> impl Iterator<Item = f64> + '_ {
        [self.abs_error_qc, self.abs_error_hc, self.abs_error_qs, self.abs_error_cs]
            .into_iter()
            .flatten()
    }

    pub fn max_error(&self) -> Option<f64> {
        self.errors().reduce(f64::max)
    }
}

/// Acceptance thresholds by check category.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Thresholds {
    /// Real identities with an elementary closed form.
    pub closed_form: f64,
    /// GR-4.325.7, GR-4.325.2 and GR-4.325.11.
    pub parametric: f64,
    /// GR-4.325.2 with |λ| ≥ 0.9π.
    pub near_boundary: f64,
    /// KUMMER-EQ6.
    pub kummer: f64,
    /// SAWTOOTH-EQ7.
    pub sawtooth: f64,
    /// When set, replaces every category above.
    pub uniform: Option<f64>,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            closed_form: 1e-9,
            parametric: 1e-8,
            near_boundary: 1e-6,
            kummer: 1e-6,
            sawtooth: 1e-8,
            uniform: None,
        }
    }
}

impl Thresholds {
    pub fn uniform(threshold: f64) -> Self {
        Thresholds {
            uniform: Some(threshold),
            ..Thresholds::default()
        }
    }

    pub fn for_check(&self, id: IdentityId, params: &Params) -> f64 {
        if let Some(t) = self.uniform {
            return t;
        }
        match id {
            IdentityId::Gr4325_2 => {
                let near = params.get("lambda").is_some_and(|l| l.re.abs() >= 0.9 * PI);
                if near {
                    self.near_boundary
                } else {
                    self.parametric
                }
            }
            IdentityId::Gr4325_7 | IdentityId::Gr4325_11 => self.parametric,
            IdentityId::KummerEq6 => self.kummer,
            IdentityId::SawtoothEq7 => self.sawtooth,
            _ => self.closed_form,
        }
    }

    fn validate(&self) -> Result<()> {
        let all = [
            self.closed_form,
            self.parametric,
            self.near_boundary,
            self.kummer,
            self.sawtooth,
        ];
        for t in all.into_iter().chain(self.uniform) {
            check_threshold(t)?;
        }
        Ok(())
    }
}

fn check_threshold(t: f64) -> Result<()> {
    if t.is_finite() && t > 0.0 {
        Ok(())
    } else {
        Err(Error::domain("verify", format!("threshold must be positive, got {t}")))
    }
}

/// Everything that determines a verification run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub quadrature: QuadratureConfig,
    pub thresholds: Thresholds,
    /// When false, `elapsed` is recorded as 0 so repeated runs are bit-identical.
    pub record_timing: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            quadrature: QuadratureConfig::default(),
            thresholds: Thresholds::default(),
            record_timing: true,
        }
    }
}

/// Points for one identity's single parameter, all strictly inside its domain.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid {
    parameter: &'static str,
    values: Vec<ComplexValue>,
}

impl SweepGrid {
    pub fn new(id: IdentityId, parameter: &str, values: Vec<ComplexValue>) -> Result<Self> {
        let kind = id
            .spec()
            .param_schema
            .iter()
            .find(|k| k.name() == parameter)
            .copied()
            .ok_or_else(|| Error::InvalidParams {
                id: id.to_string(),
                detail: format!(
                    "no parameter `{parameter}` to sweep (expected {})",
                    id.spec().schema_description()
                ),
            })?;
        if values.is_empty() {
            return Err(Error::InvalidParams {
                id: id.to_string(),
                detail: "sweep grid is empty".into(),
            });
        }
        for &v in &values {
            validate(id, &Params::new().with(kind.name(), v))?;
        }
        Ok(SweepGrid {
            parameter: kind.name(),
            values,
        })
    }

    pub fn real(id: IdentityId, parameter: &str, values: &[f64]) -> Result<Self> {
        let values = values.iter().map(|&v| ComplexValue::new(v, 0.0)).collect();
        SweepGrid::new(id, parameter, values)
    }

    /// The registry's default grid, or `None` for identities without parameters.
    pub fn default_for(id: IdentityId) -> Option<Self> {
        let kind: ParamKind = *id.spec().param_schema.first()?;
        let values = default_grid(id)
            .iter()
            .map(|p| p.get(kind.name()).expect("default grid binds the parameter"))
            .collect();
        Some(SweepGrid {
            parameter: kind.name(),
            values,
        })
    }

    pub fn parameter(&self) -> &str {
        self.parameter
    }

    pub fn values(&self) -> &[ComplexValue] {
        &self.values
    }

    pub fn points(&self) -> Vec<Params> {
        self.values
            .iter()
            .map(|&v| Params::new().with(self.parameter, v))
            .collect()
    }
}

/// Three-way check of one identity at one point with an explicit threshold.
pub fn verify(
    id: IdentityId,
    params: &Params,
    quad_cfg: &QuadratureConfig,
    threshold: f64,
) -> Result<VerificationResult> {
    check_threshold(threshold)?;
    validate(id, params)?;
    quad_cfg.validate()?;
    Ok(run_check(id, params, quad_cfg, threshold, true))
}

/// As [`verify`], with the threshold taken from `run.thresholds`.
pub fn verify_with(id: IdentityId, params: &Params, run: &RunConfig) -> Result<VerificationResult> {
    run.thresholds.validate()?;
    validate(id, params)?;
    run.quadrature.validate()?;
    let threshold = run.thresholds.for_check(id, params);
    Ok(run_check(id, params, &run.quadrature, threshold, run.record_timing))
}

/// One result per grid point, in grid order.
pub fn sweep(id: IdentityId, grid: &SweepGrid, run: &RunConfig) -> Result<Vec<VerificationResult>> {
    if !id.spec().param_schema.iter().any(|k| k.name() == grid.parameter) {
        return Err(Error::InvalidParams {
            id: id.to_string(),
            detail: format!("grid parameter `{}` does not belong to this identity", grid.parameter),
        });
    }
    run_points(id, &grid.points(), run)
}

/// Every registry identity over its default grid.
pub fn full_matrix(run: &RunConfig) -> Result<Report> {
    let mut results = Vec::new();
    for id in IdentityId::ALL {
        results.extend(run_points(id, &default_grid(id), run)?);
    }
    Ok(Report::new(*run, results))
}

fn run_points(id: IdentityId, points: &[Params], run: &RunConfig) -> Result<Vec<VerificationResult>> {
    run.thresholds.validate()?;
    run.quadrature.validate()?;
    for p in points {
        validate(id, p)?;
    }
    // Points are independent; each thread returns its own result and the
    // joins are collected in grid order.
    let results = thread::scope(|scope| {
        let handles: Vec<_> = points
            .iter()
            .map(|p| {
                scope.spawn(move || {
                    let threshold = run.thresholds.for_check(id, p);
                    run_check(id, p, &run.quadrature, threshold, run.record_timing)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification thread panicked"))
            .collect()
    });
    Ok(results)
}

fn distance(a: Option<ComplexValue>, b: Option<ComplexValue>) -> Option<f64> {
    Some((a? - b?).norm())
}

fn run_check(
    id: IdentityId,
    params: &Params,
    quad_cfg: &QuadratureConfig,
    threshold: f64,
    record_timing: bool,
) -> VerificationResult {
    let started = Instant::now();
    let spec = id.spec();
    let mut causes: Vec<String> = Vec::new();
    let mut evaluations = 0u64;
    let mut estimate: Option<f64> = None;
    let real_valued = spec.value_kind == ValueKind::Real;
    let mut record = |label: &str, r: Result<QuadratureResult>| -> Option<ComplexValue> {
        match r {
            Ok(q) => {
                evaluations += q.evaluations;
                *estimate.get_or_insert(0.0) += q.error_estimate;
                let mut v = q.value;
                if real_valued {
                    v.im = 0.0;
                }
                Some(v)
            }
            Err(e) => {
                causes.push(format!("{label}: {e}"));
                None
            }
        }
    };

    // Integrand construction cannot fail here: params were validated and
    // the domain is checked before use.
    let (lhs_quadrature, lhs_halfline) = match spec.integration_domain.bounds() {
        Some((a, b)) => {
            let f = Integrand::new(id, params).expect("validated parameters");
            let primary = record("quadrature", integrate_interval(|p| f.eval(p), a, b, quad_cfg));
            let halfline = if id == IdentityId::Gr4325_10 {
                let g = transform_loglog(f, ComplexValue::new(1.0, 0.0)).expect("μ = 1 is admissible");
                record("half-line quadrature", integrate_halfline(g, quad_cfg))
            } else {
                None
            };
            (primary, halfline)
        }
        None => (None, None),
    };

    let series_tol = (0.1 * threshold).max(1e-12);
    let rhs_closed = match closed_form_with_tol(id, params, series_tol) {
        Ok(v) => Some(v),
        Err(e) => {
            causes.push(format!("closed form: {e}"));
            None
        }
    };
    let series_value = if spec.has_series_form {
        match series_form(id, params, series_tol) {
            Ok(v) => v,
            Err(e) => {
                causes.push(format!("series: {e}"));
                None
            }
        }
    } else {
        None
    };

    let mut result = VerificationResult {
        identity_id: id,
        params: params.clone(),
        lhs_quadrature,
        lhs_halfline,
        rhs_closed,
        series_value,
        abs_error_qc: distance(lhs_quadrature, rhs_closed),
        abs_error_hc: distance(lhs_halfline, rhs_closed),
        abs_error_qs: distance(lhs_quadrature, series_value),
        abs_error_cs: distance(rhs_closed, series_value),
        quad_error_estimate: estimate,
        evaluations,
        elapsed: 0.0,
        threshold,
        verdict: Verdict::Pass,
        cause: None,
    };

    let labels = ["abs_error_qc", "abs_error_hc", "abs_error_qs", "abs_error_cs"];
    let slots = [
        result.abs_error_qc,
        result.abs_error_hc,
        result.abs_error_qs,
        result.abs_error_cs,
    ];
    for (label, slot) in labels.iter().zip(slots) {
        if let Some(err) = slot {
            if !(err <= threshold) {
                causes.push(format!("{label} = {err:e} exceeds threshold {threshold:e}"));
            }
        }
    }
    let any_comparison = slots.iter().any(Option::is_some);
    result.verdict = if !causes.is_empty() {
        Verdict::Fail
    } else if any_comparison {
        Verdict::Pass
    } else {
        Verdict::Skipped
    };
    if !causes.is_empty() {
        result.cause = Some(causes.join("; "));
    }
    if record_timing {
        result.elapsed = started.elapsed().as_secs_f64();
    }
    // Entries without an integral only ever compare series and closed form.
    debug_assert!(spec.integration_domain != IntegrationDomain::None || result.lhs_quadrature.is_none());
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quiet() -> RunConfig {
        RunConfig {
            record_timing: false,
            ..RunConfig::default()
        }
    }

    #[test]
    fn simple_pass() {
        let r = verify(IdentityId::Gr4325_1, &Params::new(), &QuadratureConfig::default(), 1e-9).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        assert!(r.abs_error_qc.unwrap() <= 1e-10);
        assert!(r.evaluations > 0);
        assert!(r.elapsed >= 0.0);
    }

    #[test]
    fn invalid_inputs_are_errors() {
        let cfg = QuadratureConfig::default();
        assert!(verify(IdentityId::Gr4325_1, &Params::new(), &cfg, 0.0).is_err());
        let bad = Params::new().with_real("t", 4.0);
        assert!(verify(IdentityId::Gr4325_7, &bad, &cfg, 1e-9).is_err());
        assert!(SweepGrid::real(IdentityId::Gr4325_7, "t", &[]).is_err());
        assert!(SweepGrid::real(IdentityId::Gr4325_7, "t", &[PI]).is_err());
        assert!(SweepGrid::real(IdentityId::Gr4325_7, "mu", &[1.0]).is_err());
    }

    #[test]
    fn kummer_compares_series_only() {
        let p = Params::new().with_real("x", 0.25);
        let r = verify_with(IdentityId::KummerEq6, &p, &quiet()).unwrap();
        assert!(r.lhs_quadrature.is_none());
        assert!(r.abs_error_qc.is_none());
        assert!(r.abs_error_cs.unwrap() <= 1e-6);
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn tiny_threshold_fails_with_cause() {
        let r = verify(IdentityId::Gr4325_3, &Params::new(), &QuadratureConfig::default(), 1e-18).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(r.cause.unwrap().contains("exceeds threshold"));
    }

    #[test]
    fn single_point_sweep_matches_verify() {
        let run = quiet();
        let grid = SweepGrid::real(IdentityId::Gr4325_7, "t", &[0.5]).unwrap();
        let swept = sweep(IdentityId::Gr4325_7, &grid, &run).unwrap();
        let single = verify_with(IdentityId::Gr4325_7, &grid.points()[0], &run).unwrap();
        assert_eq!(swept, vec![single]);
    }

    #[test]
    fn under_resolved_halfline_route_fails() {
        let cfg = QuadratureConfig {
            max_level: 3,
            ..QuadratureConfig::default()
        };
        let r = verify(IdentityId::Gr4325_10, &Params::new(), &cfg, 1e-8).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(r.cause.unwrap().contains("did not converge"));
    }
}
