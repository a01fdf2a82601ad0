//! Registry of the verified identities.
//!
//! Each entry binds an identity tag to its parameter schema, the integrand of
//! its left-hand side, its closed form and (where one exists) an equivalent
//! series. Identity tags such as `GR-4.325.7` are the stable vocabulary of the
//! command line and of every report.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, LN_2, PI};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::quadrature::{Abscissa, LogLogIntegrand};
use crate::report::complex_repr::Repr;
use crate::series::{eq5_sum, prop2_series, prop5_series};
use crate::specfun::{
    digamma, dirichlet_beta, kummer_log_gamma, log_gamma, sawtooth_series, FourierEvalConfig,
    EULER_GAMMA,
};
use crate::{ComplexValue, Error, Result};

/// Tolerance handed to the series engines when a closed form delegates to one.
pub const CLOSED_FORM_SERIES_TOL: f64 = 1e-10;

/// Below this |t| the parametric closed form switches to its Taylor branch.
const SMALL_T: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    Gr4229_7,
    Gr4325_1,
    Gr4325_2,
    Gr4325_3,
    Gr4325_4,
    Gr4325_5,
    Gr4325_6,
    Gr4325_7,
    Gr4325_8,
    Gr4325_10,
    Gr4325_11,
    KummerEq6,
    SawtoothEq7,
}

impl IdentityId {
    pub const ALL: [IdentityId; 13] = [
        IdentityId::Gr4229_7,
        IdentityId::Gr4325_1,
        IdentityId::Gr4325_2,
        IdentityId::Gr4325_3,
        IdentityId::Gr4325_4,
        IdentityId::Gr4325_5,
        IdentityId::Gr4325_6,
        IdentityId::Gr4325_7,
        IdentityId::Gr4325_8,
        IdentityId::Gr4325_10,
        IdentityId::Gr4325_11,
        IdentityId::KummerEq6,
        IdentityId::SawtoothEq7,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::Gr4229_7 => "GR-4.229.7",
            IdentityId::Gr4325_1 => "GR-4.325.1",
            IdentityId::Gr4325_2 => "GR-4.325.2",
            IdentityId::Gr4325_3 => "GR-4.325.3",
            IdentityId::Gr4325_4 => "GR-4.325.4",
            IdentityId::Gr4325_5 => "GR-4.325.5",
            IdentityId::Gr4325_6 => "GR-4.325.6",
            IdentityId::Gr4325_7 => "GR-4.325.7",
            IdentityId::Gr4325_8 => "GR-4.325.8",
            IdentityId::Gr4325_10 => "GR-4.325.10",
            IdentityId::Gr4325_11 => "GR-4.325.11",
            IdentityId::KummerEq6 => "KUMMER-EQ6",
            IdentityId::SawtoothEq7 => "SAWTOOTH-EQ7",
        }
    }

    pub fn spec(self) -> &'static IdentitySpec {
        REGISTRY
            .iter()
            .find(|s| s.id == self)
            .expect("every identity has a registry entry")
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for IdentityId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A named parameter and its admissible domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    /// μ ∈ ℂ with Re μ > 0
    Mu,
    /// λ ∈ (−π, π)
    Lambda,
    /// t ∈ (−π, π)
    T,
    /// x ∈ (0, 1)
    X,
}

impl ParamKind {
    pub fn name(self) -> &'static str {
        match self {
            ParamKind::Mu => "mu",
            ParamKind::Lambda => "lambda",
            ParamKind::T => "t",
            ParamKind::X => "x",
        }
    }

    pub fn domain(self) -> &'static str {
        match self {
            ParamKind::Mu => "complex with Re(mu) > 0",
            ParamKind::Lambda | ParamKind::T => "real in the open interval (−π, π)",
            ParamKind::X => "real in the open interval (0, 1)",
        }
    }

    pub fn is_complex(self) -> bool {
        matches!(self, ParamKind::Mu)
    }

    fn check(self, value: ComplexValue) -> std::result::Result<(), String> {
        if !value.is_finite() {
            return Err(format!("{} must be finite", self.name()));
        }
        if !self.is_complex() && value.im != 0.0 {
            return Err(format!("{} must be real ({})", self.name(), self.domain()));
        }
        let ok = match self {
            ParamKind::Mu => value.re > 0.0,
            ParamKind::Lambda | ParamKind::T => value.re.abs() < PI,
            ParamKind::X => value.re > 0.0 && value.re < 1.0,
        };
        if ok {
            Ok(())
        } else {
            Err(format!("{} = {} is outside its domain", self.name(), format_complex(value)))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ValueKind {
    Real,
    Complex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntegrationDomain {
    /// (0, 1)
    Unit,
    /// (π/4, π/2)
    QuarterToHalfPi,
    /// Series-versus-closed-form entries with no integral.
    None,
}

impl IntegrationDomain {
    pub fn bounds(self) -> Option<(f64, f64)> {
        match self {
            IntegrationDomain::Unit => Some((0.0, 1.0)),
            IntegrationDomain::QuarterToHalfPi => Some((FRAC_PI_4, FRAC_PI_2)),
            IntegrationDomain::None => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentitySpec {
    pub id: IdentityId,
    pub param_schema: &'static [ParamKind],
    pub value_kind: ValueKind,
    pub integration_domain: IntegrationDomain,
    pub has_series_form: bool,
    /// Human-readable statement of the identity.
    pub statement: &'static str,
}

impl IdentitySpec {
    /// Parameter schema rendered for usage messages, e.g. `t: real in …`.
    pub fn schema_description(&self) -> String {
        if self.param_schema.is_empty() {
            return "no parameters".to_string();
        }
        self.param_schema
            .iter()
            .map(|k| format!("{}: {}", k.name(), k.domain()))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

use IdentityId::*;
use IntegrationDomain as D;

static REGISTRY: [IdentitySpec; 13] = [
    IdentitySpec {
        id: Gr4229_7,
        param_schema: &[],
        value_kind: ValueKind::Real,
        integration_domain: D::QuarterToHalfPi,
        has_series_form: true,
        statement: "∫_{π/4}^{π/2} ln ln tan x dx = (π/2) ln(√(2π) Γ(3/4)/Γ(1/4))",
    },
    IdentitySpec {
        id: Gr4325_1,
        param_schema: &[],
        value_kind: ValueKind::Real,
        integration_domain: D::Unit,
        has_series_form: true,
        statement: "∫₀¹ ln(−ln x)/(1+x) dx = −(ln 2)²/2",
    },
    IdentitySpec {
        id: Gr4325_2,
        param_schema: &[ParamKind::Lambda],
        value_kind: ValueKind::Complex,
        integration_domain: D::Unit,
        has_series_form: false,
        statement: "∫₀¹ ln(−ln x)/(x+e^{iλ}) dx = Σ_{k≥1} (−1)^k e^{−ikλ}(γ + ln k)/k",
    },
    IdentitySpec {
        id: Gr4325_3,
        param_schema: &[],
        value_kind: ValueKind::Real,
        integration_domain: D::Unit,
        has_series_form: false,
        statement: "∫₀¹ ln(−ln x)/(1+x)² dx = (ln(π/2) − γ)/2",
    },
    IdentitySpec {
        id: Gr4325_4,
        param_schema: &[],
        value_kind: ValueKind::Real,
        integration_domain: D::Unit,
        has_series_form: true,
        statement: "∫₀¹ ln(−ln x)/(1+x²) dx = (π/2) ln(√(2π) Γ(3/4)/Γ(1/4))",
    },
    IdentitySpec {
        id: Gr4325_5,
        param_schema: &[],
        value_kind: ValueKind::Real,
        integration_domain: D::Unit,
        has_series_form: true,
        statement: "∫₀¹ ln(−ln x)/(1+x+x²) dx = (π/√3) ln(∛(2π) Γ(2/3)/Γ(1/3))",
    },
    IdentitySpec {
        id: Gr4325_6,
        param_schema: &[],
        value_kind: ValueKind::Real,
        integration_domain: D::Unit,
        has_series_form: true,
        statement: "∫₀¹ ln(−ln x)/(1−x+x²) dx = (2π/√3)((5/6) ln 2π − ln Γ(1/6))",
    },
    IdentitySpec {
        id: Gr4325_7,
        param_schema: &[ParamKind::T],
        value_kind: ValueKind::Real,
        integration_domain: D::Unit,
        has_series_form: true,
        statement: "∫₀¹ ln(−ln x)/(1+2x cos t+x²) dx = (π/(2 sin t)) ln((2π)^{t/π} Γ(1/2+t/2π)/Γ(1/2−t/2π))",
    },
    IdentitySpec {
        id: Gr4325_8,
        param_schema: &[ParamKind::Mu],
        value_kind: ValueKind::Complex,
        integration_domain: D::Unit,
        has_series_form: false,
        statement: "∫₀¹ ln(−ln x) x^{μ−1} dx = −(γ + ln μ)/μ",
    },
    IdentitySpec {
        id: Gr4325_10,
        param_schema: &[],
        value_kind: ValueKind::Real,
        integration_domain: D::Unit,
        has_series_form: true,
        statement: "∫₀¹ ln(−ln x)/((1+x²)√(−ln x)) dx = −(ln√(8/π) + π/4 + γ/2) √π β(1/2)",
    },
    IdentitySpec {
        id: Gr4325_11,
        param_schema: &[ParamKind::Mu],
        value_kind: ValueKind::Complex,
        integration_domain: D::Unit,
        has_series_form: false,
        statement: "∫₀¹ ln(−ln x) x^{μ−1}/√(−ln x) dx = −(γ + ln 4μ) √(π/μ)",
    },
    IdentitySpec {
        id: KummerEq6,
        param_schema: &[ParamKind::X],
        value_kind: ValueKind::Real,
        integration_domain: D::None,
        has_series_form: true,
        statement: "ln Γ(x) = ½ ln(π/sin πx) + (1/π) Σ_{k≥1} (γ + ln 2π + ln k) sin(2kπx)/k",
    },
    IdentitySpec {
        id: SawtoothEq7,
        param_schema: &[ParamKind::X],
        value_kind: ValueKind::Real,
        integration_domain: D::None,
        has_series_form: true,
        statement: "1/2 − x = (1/π) Σ_{k≥1} sin(2kπx)/k",
    },
];

/// All registry entries in fixed order.
pub fn list_identities() -> &'static [IdentitySpec] {
    &REGISTRY
}

/// Parameter bindings for one identity evaluation.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Params {
    bindings: BTreeMap<String, ComplexValue>,
}

impl Params {
    pub fn new() -> Self {
        Params::default()
    }

    pub fn with(mut self, name: &str, value: ComplexValue) -> Self {
        self.bindings.insert(name.to_string(), value);
        self
    }

    pub fn with_real(self, name: &str, value: f64) -> Self {
        self.with(name, ComplexValue::new(value, 0.0))
    }

    pub fn insert(&mut self, name: &str, value: ComplexValue) {
        self.bindings.insert(name.to_string(), value);
    }

    pub fn get(&self, name: &str) -> Option<ComplexValue> {
        self.bindings.get(name).copied()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, ComplexValue)> {
        self.bindings.iter().map(|(k, v)| (k.as_str(), *v))
    }

    fn real(&self, kind: ParamKind) -> f64 {
        self.bindings[kind.name()].re
    }

    fn complex(&self, kind: ParamKind) -> ComplexValue {
        self.bindings[kind.name()]
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(self.bindings.len()))?;
        for (k, v) in &self.bindings {
            map.serialize_entry(k, &Repr::from(*v))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Params {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, Repr>::deserialize(deserializer)?;
        Ok(Params {
            bindings: raw.into_iter().map(|(k, v)| (k, v.into())).collect(),
        })
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bindings.is_empty() {
            return f.write_str("-");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(k, v)| format!("{k}={}", format_complex(v)))
            .collect();
        f.write_str(&parts.join(","))
    }
}

/// Formats as `a`, `a+bi` or `a-bi`.
pub fn format_complex(v: ComplexValue) -> String {
    if v.im == 0.0 {
        format!("{}", v.re)
    } else if v.im < 0.0 {
        format!("{}-{}i", v.re, -v.im)
    } else {
        format!("{}+{}i", v.re, v.im)
    }
}

/// Parses `3`, `-0.5`, `2i`, `-i`, `1+1i`, `3-2.5i`, `1e-3+2E1i`.
pub fn parse_complex(text: &str) -> std::result::Result<ComplexValue, String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("cannot parse `{text}` as a real or complex number (use a, bi or a+bi)");
    if s.is_empty() {
        return Err(bad());
    }
    let Some(body) = s.strip_suffix(['i', 'j']) else {
        return s.parse::<f64>().map(|re| ComplexValue::new(re, 0.0)).map_err(|_| bad());
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re_text, im_text) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("", body),
    };
    let re = if re_text.is_empty() {
        0.0
    } else {
        re_text.parse::<f64>().map_err(|_| bad())?
    };
    let im = match im_text {
        "" | "+" => 1.0,
        "-" => -1.0,
        t => t.parse::<f64>().map_err(|_| bad())?,
    };
    Ok(ComplexValue::new(re, im))
}

/// Parses `name=value`.
pub fn parse_binding(text: &str) -> std::result::Result<(String, ComplexValue), String> {
    let (name, value) = text
        .split_once('=')
        .ok_or_else(|| format!("expected name=value, got `{text}`"))?;
    let name = name.trim();
    if name.is_empty() {
        return Err(format!("missing parameter name in `{text}`"));
    }
    Ok((name.to_string(), parse_complex(value)?))
}

/// Checks that `params` binds exactly the identity's schema, all in domain.
pub fn validate(id: IdentityId, params: &Params) -> Result<()> {
    let spec = id.spec();
    let invalid = |detail: String| Error::InvalidParams {
        id: id.to_string(),
        detail: format!("{detail} (expected {})", spec.schema_description()),
    };
    for (name, _) in params.iter() {
        if !spec.param_schema.iter().any(|k| k.name() == name) {
            return Err(invalid(format!("unexpected parameter `{name}`")));
        }
    }
    for kind in spec.param_schema {
        let value = params
            .get(kind.name())
            .ok_or_else(|| invalid(format!("missing parameter `{}`", kind.name())))?;
        kind.check(value).map_err(invalid)?;
    }
    Ok(())
}

/// The left-hand-side integrand of one identity at fixed parameters.
#[derive(Debug, Clone, Copy)]
pub struct Integrand {
    id: IdentityId,
    mu: ComplexValue,
    phase: ComplexValue,
    cos_t: f64,
    sin_t: f64,
}

impl Integrand {
    pub fn new(id: IdentityId, params: &Params) -> Result<Self> {
        validate(id, params)?;
        if id.spec().integration_domain == IntegrationDomain::None {
            return Err(Error::InvalidParams {
                id: id.to_string(),
                detail: "this entry has no integral".into(),
            });
        }
        let mut integrand = Integrand {
            id,
            mu: ComplexValue::new(1.0, 0.0),
            phase: ComplexValue::new(1.0, 0.0),
            cos_t: 1.0,
            sin_t: 0.0,
        };
        match id {
            Gr4325_2 => {
                let lambda = params.real(ParamKind::Lambda);
                integrand.phase = ComplexValue::new(lambda.cos(), lambda.sin());
            }
            Gr4325_7 => {
                let t = params.real(ParamKind::T);
                integrand.cos_t = t.cos();
                integrand.sin_t = t.sin();
            }
            Gr4325_8 | Gr4325_11 => integrand.mu = params.complex(ParamKind::Mu),
            _ => {}
        }
        Ok(integrand)
    }

    pub fn id(&self) -> IdentityId {
        self.id
    }

    /// Rational factor `R(x)` of the `ln(−ln x) R(x)` entries, complex-capable.
    fn rational(&self, x: ComplexValue) -> ComplexValue {
        let one = ComplexValue::new(1.0, 0.0);
        match self.id {
            Gr4325_1 => (one + x).inv(),
            Gr4325_2 => (x + self.phase).inv(),
            Gr4325_3 => ((one + x) * (one + x)).inv(),
            Gr4325_4 | Gr4325_10 => (one + x * x).inv(),
            Gr4325_5 => (one + x + x * x).inv(),
            Gr4325_6 => (one - x + x * x).inv(),
            Gr4325_7 => {
                // (x + cos t)² + sin² t keeps the near-pole case t → ±π accurate.
                let shifted = x + self.cos_t;
                (shifted * shifted + self.sin_t * self.sin_t).inv()
            }
            _ => one,
        }
    }

    /// Value at a point of the integration domain.
    pub fn eval(&self, p: Abscissa) -> ComplexValue {
        if self.id == Gr4229_7 {
            // ln tan(π/4 + e) = 2 atanh(tan e); ln tan(π/2 − d) = −ln tan d
            let ln_tan = if p.from_lo <= p.from_hi {
                2.0 * p.from_lo.tan().atanh()
            } else {
                -p.from_hi.tan().ln()
            };
            return ComplexValue::new(ln_tan.ln(), 0.0);
        }
        let s = p.neg_ln();
        let lnln = s.ln();
        let x = ComplexValue::new(p.x, 0.0);
        match self.id {
            Gr4325_8 => power_weight(self.mu, s) * lnln,
            Gr4325_11 => power_weight(self.mu, s) * (lnln / s.sqrt()),
            Gr4325_10 => self.rational(x) * (lnln / s.sqrt()),
            _ => self.rational(x) * lnln,
        }
    }
}

/// `x^{μ−1} = e^{−(μ−1)s}` with `s = −ln x`.
fn power_weight(mu: ComplexValue, s: f64) -> ComplexValue {
    (-(mu - 1.0) * s).exp()
}

impl LogLogIntegrand for Integrand {
    fn at(&self, p: Abscissa) -> ComplexValue {
        self.eval(p)
    }

    /// `f(e^{−s}) e^{−s}`; not defined for the tangent-form entry (returns NaN).
    fn log_form(&self, s: ComplexValue) -> ComplexValue {
        let lnln = s.ln();
        match self.id {
            Gr4229_7 | KummerEq6 | SawtoothEq7 => ComplexValue::new(f64::NAN, f64::NAN),
            Gr4325_8 => lnln * (-self.mu * s).exp(),
            Gr4325_11 => lnln * (-self.mu * s).exp() / s.sqrt(),
            Gr4325_10 => {
                let x = (-s).exp();
                lnln * x * self.rational(x) / s.sqrt()
            }
            _ => {
                let x = (-s).exp();
                lnln * x * self.rational(x)
            }
        }
    }
}

/// Integrand value at one point, `p` given with both endpoint distances.
pub fn integrand(id: IdentityId, params: &Params, p: Abscissa) -> Result<ComplexValue> {
    Ok(Integrand::new(id, params)?.eval(p))
}

fn real(v: f64) -> ComplexValue {
    ComplexValue::new(v, 0.0)
}

fn ln_two_pi() -> f64 {
    (2.0 * PI).ln()
}

/// `(π/(2 sin t)) [ (t/π) ln 2π + ln Γ(1/2 + t/2π) − ln Γ(1/2 − t/2π) ]`, with
/// the removable singularity at t = 0 handled by its even Taylor expansion.
pub fn parametric_closed_form(t: f64) -> Result<f64> {
    if !(t.abs() < PI) {
        return Err(Error::domain(
            "parametric_closed_form",
            format!("t = {t} is outside the open interval (−π, π)"),
        ));
    }
    if t.abs() < SMALL_T {
        let base = 0.5 * ((PI / 2.0).ln() - EULER_GAMMA);
        let h = 1e-3;
        let psi2 = (digamma(0.5 + h)? - 2.0 * digamma(0.5)? + digamma(0.5 - h)?) / (h * h);
        let curvature = base / 6.0 + psi2 / (48.0 * PI * PI);
        return Ok(base + curvature * t * t);
    }
    let tau = t / (2.0 * PI);
    let log_ratio = t / PI * ln_two_pi() + log_gamma(0.5 + tau)? - log_gamma(0.5 - tau)?;
    Ok(PI / (2.0 * t.sin()) * log_ratio)
}

/// Both algebraic routes to the `1/(1 − x + x²)` closed form: the one through
/// Γ(5/6) and the Γ(1/6)-only form obtained with Γ(1/6)Γ(5/6) = 2π.
pub fn gr_4325_6_routes() -> Result<(f64, f64)> {
    let via_five_sixths = PI / 3f64.sqrt()
        * (2.0 / 3.0 * ln_two_pi() + log_gamma(5.0 / 6.0)? - log_gamma(1.0 / 6.0)?);
    let one_sixth_only = 2.0 * PI / 3f64.sqrt() * (5.0 / 6.0 * ln_two_pi() - log_gamma(1.0 / 6.0)?);
    Ok((via_five_sixths, one_sixth_only))
}

fn vardi_closed_form() -> Result<f64> {
    Ok(FRAC_PI_2 * (0.5 * ln_two_pi() + log_gamma(0.75)? - log_gamma(0.25)?))
}

/// Right-hand side of an identity, computed only from special functions and
/// series (never from quadrature).
pub fn closed_form(id: IdentityId, params: &Params) -> Result<ComplexValue> {
    closed_form_with_tol(id, params, CLOSED_FORM_SERIES_TOL)
}

/// As [`closed_form`], with an explicit tolerance for the entries whose right
/// side is itself a series (GR-4.325.2).
pub fn closed_form_with_tol(id: IdentityId, params: &Params, series_tol: f64) -> Result<ComplexValue> {
    validate(id, params)?;
    let gamma = EULER_GAMMA;
    Ok(match id {
        Gr4229_7 | Gr4325_4 => real(vardi_closed_form()?),
        Gr4325_1 => real(-0.5 * LN_2 * LN_2),
        Gr4325_2 => prop2_series(params.real(ParamKind::Lambda), series_tol)?,
        Gr4325_3 => real(0.5 * ((PI / 2.0).ln() - gamma)),
        Gr4325_5 => real(
            PI / 3f64.sqrt() * (ln_two_pi() / 3.0 + log_gamma(2.0 / 3.0)? - log_gamma(1.0 / 3.0)?),
        ),
        Gr4325_6 => real(gr_4325_6_routes()?.1),
        Gr4325_7 => real(parametric_closed_form(params.real(ParamKind::T))?),
        Gr4325_8 => {
            let mu = params.complex(ParamKind::Mu);
            if mu.im == 0.0 {
                real(-(gamma + mu.re.ln()) / mu.re)
            } else {
                -(mu.ln() + gamma) / mu
            }
        }
        Gr4325_10 => {
            let factor = (8.0 / PI).sqrt().ln() + PI / 4.0 + gamma / 2.0;
            real(-factor * PI.sqrt() * dirichlet_beta(0.5)?)
        }
        Gr4325_11 => {
            let mu = params.complex(ParamKind::Mu);
            if mu.im == 0.0 {
                real(-(gamma + (4.0 * mu.re).ln()) * (PI / mu.re).sqrt())
            } else {
                -((mu * 4.0).ln() + gamma) * (mu.inv() * PI).sqrt()
            }
        }
        KummerEq6 => real(log_gamma(params.real(ParamKind::X))?),
        SawtoothEq7 => real(0.5 - params.real(ParamKind::X)),
    })
}

/// The equivalent series of an identity, when it has one.
///
/// `tol` is the absolute accuracy requested from the accelerator; the
/// `S(t)/sin t` entries scale it by `|sin t|`.
pub fn series_form(id: IdentityId, params: &Params, tol: f64) -> Result<Option<ComplexValue>> {
    validate(id, params)?;
    let sine_route = |t: f64| -> Result<Option<ComplexValue>> {
        let s = t.sin();
        Ok(Some(real(eq5_sum(t, tol * s.abs())? / s)))
    };
    match id {
        Gr4325_1 => Ok(Some(real(prop2_series(0.0, tol)?.re))),
        Gr4229_7 | Gr4325_4 => sine_route(FRAC_PI_2),
        Gr4325_5 => sine_route(FRAC_PI_3),
        Gr4325_6 => sine_route(2.0 * FRAC_PI_3),
        Gr4325_7 => {
            let t = params.real(ParamKind::T);
            if t == 0.0 {
                Ok(None)
            } else {
                sine_route(t)
            }
        }
        Gr4325_10 => Ok(Some(real(prop5_series(tol)?))),
        KummerEq6 | SawtoothEq7 => {
            let x = params.real(ParamKind::X);
            let cfg = FourierEvalConfig {
                tolerance: tol,
                ..FourierEvalConfig::default()
            };
            let v = if id == KummerEq6 {
                kummer_log_gamma(x, &cfg)?
            } else {
                sawtooth_series(x, &cfg)?
            };
            Ok(Some(real(v)))
        }
        Gr4325_2 | Gr4325_3 | Gr4325_8 | Gr4325_11 => Ok(None),
    }
}

/// The specialization that ties an identity to another registry entry.
pub fn consistency_pair(id: IdentityId) -> Option<(IdentityId, Params)> {
    match id {
        Gr4229_7 => Some((Gr4325_4, Params::new())),
        Gr4325_1 => Some((Gr4325_2, Params::new().with_real("lambda", 0.0))),
        Gr4325_3 => Some((Gr4325_7, Params::new().with_real("t", 0.0))),
        Gr4325_4 => Some((Gr4325_7, Params::new().with_real("t", FRAC_PI_2))),
        Gr4325_5 => Some((Gr4325_7, Params::new().with_real("t", FRAC_PI_3))),
        Gr4325_6 => Some((Gr4325_7, Params::new().with_real("t", 2.0 * FRAC_PI_3))),
        _ => None,
    }
}

/// The parameter points exercised for an identity by the full matrix.
pub fn default_grid(id: IdentityId) -> Vec<Params> {
    let reals = |name: &str, values: &[f64]| -> Vec<Params> {
        values.iter().map(|&v| Params::new().with_real(name, v)).collect()
    };
    let complexes = |values: &[(f64, f64)]| -> Vec<Params> {
        values
            .iter()
            .map(|&(re, im)| Params::new().with("mu", ComplexValue::new(re, im)))
            .collect()
    };
    match id {
        Gr4325_2 => reals(
            "lambda",
            &[0.0, 0.5, -0.5, FRAC_PI_3, -FRAC_PI_3, FRAC_PI_2, -FRAC_PI_2, 2.5, -2.5],
        ),
        Gr4325_7 => reals(
            "t",
            &[
                0.1,
                -0.1,
                FRAC_PI_3,
                -FRAC_PI_3,
                FRAC_PI_2,
                -FRAC_PI_2,
                2.0 * FRAC_PI_3,
                -2.0 * FRAC_PI_3,
                3.0,
                -3.0,
            ],
        ),
        Gr4325_8 => complexes(&[(0.5, 0.0), (1.0, 0.0), (2.0, 0.0), (5.0, 0.0), (1.0, 1.0), (3.0, 2.0)]),
        Gr4325_11 => complexes(&[(0.5, 0.0), (1.0, 0.0), (2.0, 0.0), (1.0, 1.0)]),
        KummerEq6 | SawtoothEq7 => reals("x", &[0.1, 0.25, 1.0 / 3.0, 0.75, 0.9]),
        _ => vec![Params::new()],
    }
}
