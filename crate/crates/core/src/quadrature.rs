//! Double-exponential quadrature.
//!
//! [`integrate_01`] is the tanh-sinh rule on (0, 1) with abscissae
//! `x_j = (1 + tanh((π/2) sinh(jh)))/2`. The abscissae are generated as
//! distances from the nearer endpoint, so integrands that need `1 − x`
//! (for example `−ln x` near `x = 1`) receive it without cancellation
//! through [`Abscissa`]. [`integrate_halfline`] is the exp-sinh rule on
//! (0, ∞) with `u_j = exp((π/2) sinh(jh))`.
//!
//! Level `ℓ` uses step `h = 8 / 2^ℓ`; each level reuses the previous sum and
//! only evaluates the new odd-indexed nodes. Samples are accumulated in a
//! fixed order with compensated summation, so results are bit-reproducible.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::{ComplexValue, Error, Result};

/// Step of level 0.
const BASE_STEP: f64 = 8.0;

/// Levels below this are never accepted as converged.
const MIN_ACCEPT_LEVEL: u32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    /// Target absolute error.
    pub abs_tol: f64,
    /// Finest level tried; 3 ≤ max_level ≤ 12.
    pub max_level: u32,
    /// Abscissae closer than this to an endpoint are dropped.
    pub clip_epsilon: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            abs_tol: 1e-12,
            max_level: 10,
            clip_epsilon: 1e-300,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        const OP: &str = "QuadratureConfig";
        if !(self.abs_tol.is_finite() && self.abs_tol > 0.0) {
            return Err(Error::domain(OP, format!("abs_tol must be positive, got {}", self.abs_tol)));
        }
        if !(3..=12).contains(&self.max_level) {
            return Err(Error::domain(
                OP,
                format!("max_level must lie in 3..=12, got {}", self.max_level),
            ));
        }
        if !(self.clip_epsilon > 0.0 && self.clip_epsilon <= 1e-10) {
            return Err(Error::domain(
                OP,
                format!("clip_epsilon must lie in (0, 1e-10], got {}", self.clip_epsilon),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: ComplexValue,
    /// Difference between the last two levels, floored at the rounding level
    /// of the sum.
    pub error_estimate: f64,
    pub evaluations: u64,
    pub level_reached: u32,
}

/// A quadrature node on a finite interval `(a, b)`, with its distances to both
/// endpoints computed directly rather than by subtraction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Abscissa {
    pub x: f64,
    /// `x − a`
    pub from_lo: f64,
    /// `b − x`
    pub from_hi: f64,
}

impl Abscissa {
    /// A point of (0, 1) given as `(x, 1 − x)`.
    pub fn unit(x: f64, one_minus_x: f64) -> Self {
        Abscissa {
            x,
            from_lo: x,
            from_hi: one_minus_x,
        }
    }

    /// `−ln x` for a point of (0, 1), accurate at both ends.
    pub fn neg_ln(&self) -> f64 {
        if self.from_lo < 0.5 {
            -self.from_lo.ln()
        } else {
            -(-self.from_hi).ln_1p()
        }
    }
}

/// An integrand on (0, 1) that can also be evaluated through `s = −ln x`.
///
/// `log_form(s)` must return `f(e^{−s})·e^{−s}` and be analytic in `s` for
/// `Re s > 0`, so that `∫₀¹ f dx = ∫₀^∞ log_form(s) ds` and the ray can be
/// rotated for complex scale factors.
pub trait LogLogIntegrand {
    fn at(&self, p: Abscissa) -> ComplexValue;
    fn log_form(&self, s: ComplexValue) -> ComplexValue;
}

/// Builds a [`LogLogIntegrand`] from its log form alone; the (0, 1) form is
/// recovered as `log_form(−ln x)/x`.
#[derive(Debug, Clone, Copy)]
pub struct LogForm<F>(pub F);

impl<F: Fn(ComplexValue) -> ComplexValue> LogLogIntegrand for LogForm<F> {
    fn at(&self, p: Abscissa) -> ComplexValue {
        (self.0)(ComplexValue::new(p.neg_ln(), 0.0)) / p.x
    }

    fn log_form(&self, s: ComplexValue) -> ComplexValue {
        (self.0)(s)
    }
}

impl<T: LogLogIntegrand + ?Sized> LogLogIntegrand for &T {
    fn at(&self, p: Abscissa) -> ComplexValue {
        (**self).at(p)
    }

    fn log_form(&self, s: ComplexValue) -> ComplexValue {
        (**self).log_form(s)
    }
}

/// The substitution `−μ ln x → u`: returns `g` with `∫₀¹ f dx = ∫₀^∞ g du`,
/// `g(u) = log_form(u/μ)/μ`. For `f = ln(−ln x) x^{μ−1}` this is
/// `(1/μ) e^{−u} ln(u/μ)`.
pub fn transform_loglog<I: LogLogIntegrand>(
    f: I,
    mu: ComplexValue,
) -> Result<impl Fn(f64) -> ComplexValue> {
    if !(mu.re > 0.0 && mu.is_finite()) {
        return Err(Error::domain(
            "transform_loglog",
            format!("requires Re(μ) > 0, got {mu}"),
        ));
    }
    let inv_mu = mu.inv();
    Ok(move |u: f64| f.log_form(inv_mu * u) * inv_mu)
}

#[derive(Default, Clone, Copy)]
struct Accumulator {
    sum: ComplexValue,
    carry: ComplexValue,
    magnitude: f64,
    count: u64,
}

impl Accumulator {
    fn add(&mut self, x: ComplexValue) {
        fn step(sum: &mut f64, carry: &mut f64, x: f64) {
            let t = *sum + x;
            if sum.abs() >= x.abs() {
                *carry += (*sum - t) + x;
            } else {
                *carry += (x - t) + *sum;
            }
            *sum = t;
        }
        step(&mut self.sum.re, &mut self.carry.re, x.re);
        step(&mut self.sum.im, &mut self.carry.im, x.im);
        self.magnitude += x.re.abs() + x.im.abs();
        self.count += 1;
    }

    fn value(&self) -> ComplexValue {
        self.sum + self.carry
    }
}

/// Walks the levels, handing each refined sum to `visit` together with its
/// difference from the previous level and the rounding floor. Stops as soon
/// as `visit` returns a result.
fn walk_levels<N, V>(cfg: &QuadratureConfig, t_max: f64, node: N, mut visit: V) -> Result<Option<QuadratureResult>>
where
    N: Fn(f64) -> Result<Option<ComplexValue>>,
    V: FnMut(u32, QuadratureResult, f64) -> Option<QuadratureResult>,
{
    cfg.validate()?;
    let mut acc = Accumulator::default();
    let eval = |t: f64, acc: &mut Accumulator| -> Result<()> {
        if let Some(v) = node(t)? {
            acc.add(v);
        }
        Ok(())
    };

    // Level 0: nodes at multiples of BASE_STEP.
    eval(0.0, &mut acc)?;
    let mut j = 1;
    while j as f64 * BASE_STEP <= t_max {
        let t = j as f64 * BASE_STEP;
        eval(-t, &mut acc)?;
        eval(t, &mut acc)?;
        j += 1;
    }
    let mut h = BASE_STEP;
    let mut previous = acc.value() * h;
    let first = QuadratureResult {
        value: previous,
        error_estimate: f64::INFINITY,
        evaluations: acc.count.max(1),
        level_reached: 0,
    };
    if let Some(done) = visit(0, first, 0.0) {
        return Ok(Some(done));
    }

    for level in 1..=cfg.max_level {
        h *= 0.5;
        let mut j = 1u64;
        while j as f64 * h <= t_max {
            let t = j as f64 * h;
            eval(-t, &mut acc)?;
            eval(t, &mut acc)?;
            j += 2;
        }
        let current = acc.value() * h;
        let rounding = 8.0 * f64::EPSILON * acc.magnitude * h;
        let step = QuadratureResult {
            value: current,
            error_estimate: (current - previous).norm(),
            evaluations: acc.count.max(1),
            level_reached: level,
        };
        if let Some(done) = visit(level, step, rounding) {
            return Ok(Some(done));
        }
        previous = current;
    }
    Ok(None)
}

/// Shared driver: `node(t)` returns the weight-times-sample contribution at
/// `t` (already multiplied by dx/dt), or `None` when the node is clipped.
fn double_exponential<N>(op: &'static str, cfg: &QuadratureConfig, t_max: f64, node: N) -> Result<QuadratureResult>
where
    N: Fn(f64) -> Result<Option<ComplexValue>>,
{
    let mut last_delta = f64::INFINITY;
    let accepted = walk_levels(cfg, t_max, node, |level, step, rounding| {
        let delta = step.error_estimate;
        last_delta = delta;
        (level >= MIN_ACCEPT_LEVEL && delta <= cfg.abs_tol.max(rounding)).then(|| QuadratureResult {
            error_estimate: delta.max(rounding),
            ..step
        })
    })?;
    accepted.ok_or_else(|| {
        Error::convergence(
            op,
            format!(
                "level {} reached with inter-level difference {last_delta:e} above abs_tol {:e}",
                cfg.max_level, cfg.abs_tol
            ),
        )
    })
}

/// Tanh-sinh rule on (0, 1).
pub fn integrate_01<F>(f: F, cfg: &QuadratureConfig) -> Result<QuadratureResult>
where
    F: Fn(Abscissa) -> ComplexValue,
{
    integrate_mapped("integrate_01", f, 0.0, 1.0, cfg)
}

/// Tanh-sinh rule on (a, b) after the affine map to (0, 1).
pub fn integrate_interval<F>(f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<QuadratureResult>
where
    F: Fn(Abscissa) -> ComplexValue,
{
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(Error::domain(
            "integrate_interval",
            format!("requires finite a < b, got ({a}, {b})"),
        ));
    }
    integrate_mapped("integrate_interval", f, a, b, cfg)
}

fn unit_nodes<F>(f: F, a: f64, b: f64, clip: f64) -> (f64, impl Fn(f64) -> Result<Option<ComplexValue>>)
where
    F: Fn(Abscissa) -> ComplexValue,
{
    let width = b - a;
    // Offset 1/(1 + e^{π sinh t}) drops below clip once π sinh t > ln(1/clip).
    let t_max = ((1.0 / clip).ln() / PI).asinh();
    let node = move |t: f64| -> Result<Option<ComplexValue>> {
        let u = PI * t.sinh();
        // Distance to the nearer endpoint first, then the complement.
        let (lo, hi) = if t >= 0.0 {
            let hi = 1.0 / (1.0 + u.exp());
            (1.0 - hi, hi)
        } else {
            let lo = 1.0 / (1.0 + (-u).exp());
            (lo, 1.0 - lo)
        };
        if lo < clip || hi < clip {
            return Ok(None);
        }
        let p = Abscissa {
            x: if lo <= hi { a + width * lo } else { b - width * hi },
            from_lo: width * lo,
            from_hi: width * hi,
        };
        let y = f(p);
        if !y.is_finite() {
            return Err(Error::NonFiniteSample { x: p.x });
        }
        let weight = width * lo * hi * PI * t.cosh();
        Ok(Some(y * weight))
    };
    (t_max, node)
}

fn integrate_mapped<F>(op: &'static str, f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<QuadratureResult>
where
    F: Fn(Abscissa) -> ComplexValue,
{
    let (t_max, node) = unit_nodes(f, a, b, cfg.clip_epsilon);
    double_exponential(op, cfg, t_max, node)
}

/// The tanh-sinh sum on (0, 1) at every level `0..=cfg.max_level`, without
/// any stopping test; `error_estimate` holds the difference from the
/// previous level. Useful for watching the convergence rate.
pub fn level_trace_01<F>(f: F, cfg: &QuadratureConfig) -> Result<Vec<QuadratureResult>>
where
    F: Fn(Abscissa) -> ComplexValue,
{
    let (t_max, node) = unit_nodes(f, 0.0, 1.0, cfg.clip_epsilon);
    let mut trace = Vec::new();
    walk_levels(cfg, t_max, node, |_, step, _| {
        trace.push(step);
        None
    })?;
    Ok(trace)
}

/// Exp-sinh rule on (0, ∞).
pub fn integrate_halfline<G>(g: G, cfg: &QuadratureConfig) -> Result<QuadratureResult>
where
    G: Fn(f64) -> ComplexValue,
{
    let clip = cfg.clip_epsilon;
    // u = e^{(π/2) sinh t} stays inside [clip, 1/clip].
    let t_max = (2.0 * (1.0 / clip).ln() / PI).asinh();
    let node = |t: f64| -> Result<Option<ComplexValue>> {
        let u = (0.5 * PI * t.sinh()).exp();
        if !(clip..=1.0 / clip).contains(&u) {
            return Ok(None);
        }
        let y = g(u);
        if !y.is_finite() {
            return Err(Error::NonFiniteSample { x: u });
        }
        let weight = u * 0.5 * PI * t.cosh();
        Ok(Some(y * weight))
    };
    double_exponential("integrate_halfline", cfg, t_max, node)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

    fn c(re: f64) -> ComplexValue {
        ComplexValue::new(re, 0.0)
    }

    fn lnln(p: Abscissa) -> f64 {
        p.neg_ln().ln()
    }

    #[test]
    fn constant_integrand() {
        let r = integrate_01(|_| c(1.0), &QuadratureConfig::default()).unwrap();
        assert!((r.value.re - 1.0).abs() < 1e-14);
        assert!(r.evaluations > 0);
    }

    #[test]
    fn loglog_is_minus_gamma() {
        let r = integrate_01(|p| c(lnln(p)), &QuadratureConfig::default()).unwrap();
        assert!((r.value.re + EULER_GAMMA).abs() < 1e-12, "{r:?}");
    }

    #[test]
    fn loglog_over_one_plus_x() {
        let r = integrate_01(|p| c(lnln(p) / (1.0 + p.x)), &QuadratureConfig::default()).unwrap();
        assert!((r.value.re + 0.5 * LN_2 * LN_2).abs() < 1e-12, "{r:?}");
    }

    #[test]
    fn halfline_values() {
        let cfg = QuadratureConfig::default();
        let r = integrate_halfline(|u| c((-u).exp()), &cfg).unwrap();
        assert!((r.value.re - 1.0).abs() < 1e-13);
        let r = integrate_halfline(|u| c((-u).exp() * u.ln()), &cfg).unwrap();
        assert!((r.value.re + EULER_GAMMA).abs() < 1e-12);
        let r = integrate_halfline(|u| c((-u).exp() / u.sqrt()), &cfg).unwrap();
        assert!((r.value.re - PI.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn interval_values() {
        let cfg = QuadratureConfig::default();
        let r = integrate_interval(|_| c(1.0), 0.0, 2.0, &cfg).unwrap();
        assert!((r.value.re - 2.0).abs() < 1e-14);
        let a = integrate_interval(|p| c(lnln(p)), 0.0, 1.0, &cfg).unwrap();
        let b = integrate_01(|p| c(lnln(p)), &cfg).unwrap();
        assert_eq!(a.value, b.value);
        assert!(integrate_interval(|_| c(1.0), 1.0, 1.0, &cfg).is_err());
    }

    #[test]
    fn vardi_tangent_form() {
        let cfg = QuadratureConfig::default();
        let f = |p: Abscissa| {
            let ln_tan = if p.from_lo <= p.from_hi {
                2.0 * p.from_lo.tan().atanh()
            } else {
                -p.from_hi.tan().ln()
            };
            c(ln_tan.ln())
        };
        let r = integrate_interval(f, PI / 4.0, PI / 2.0, &cfg).unwrap();
        assert!((r.value.re + 0.260_442_806_300_988_45).abs() < 1e-11, "{r:?}");
    }

    #[test]
    fn transform_matches_lemma() {
        let cfg = QuadratureConfig::default();
        let mu = 2.0;
        let f = LogForm(move |s: ComplexValue| s.ln() * (-s * mu).exp());
        let direct = integrate_01(|p| f.at(p), &cfg).unwrap();
        let g = transform_loglog(&f, c(mu)).unwrap();
        let half = integrate_halfline(g, &cfg).unwrap();
        let expected = -(EULER_GAMMA + mu.ln()) / mu;
        assert!((expected + 0.635_181_422_730_739_1).abs() < 1e-15);
        assert!((direct.value.re - expected).abs() < 1e-12);
        assert!((half.value.re - expected).abs() < 1e-12);
    }

    #[test]
    fn transform_complex_mu() {
        // f = ln(−ln x)·x^{i}, substituted with μ = 1 + i
        let cfg = QuadratureConfig::default();
        let i = ComplexValue::new(0.0, 1.0);
        let f = LogForm(move |s: ComplexValue| s.ln() * (-(i + 1.0) * s).exp());
        let direct = integrate_01(|p| f.at(p), &cfg).unwrap();
        let half = integrate_halfline(transform_loglog(&f, ComplexValue::new(1.0, 1.0)).unwrap(), &cfg).unwrap();
        let tol = 2.0 * cfg.abs_tol.max(direct.error_estimate + half.error_estimate);
        assert!((direct.value - half.value).norm() <= tol, "{direct:?} {half:?}");
        let oracle = ComplexValue::new(-0.854_593_709_289_476_9, 0.069_195_545_892_028_6);
        assert!((direct.value - oracle).norm() < 1e-12);
    }

    #[test]
    fn transform_rejects_left_half_plane() {
        let f = LogForm(|s: ComplexValue| s);
        assert!(transform_loglog(&f, c(0.0)).is_err());
        assert!(transform_loglog(&f, ComplexValue::new(-1.0, 2.0)).is_err());
    }

    #[test]
    fn non_finite_sample_aborts() {
        let r = integrate_01(|p| c(1.0 / (p.x - 0.5)), &QuadratureConfig::default());
        assert!(matches!(r, Err(Error::NonFiniteSample { .. })));
    }

    #[test]
    fn config_validation() {
        let mut cfg = QuadratureConfig::default();
        cfg.max_level = 2;
        assert!(integrate_01(|_| c(1.0), &cfg).is_err());
        cfg.max_level = 13;
        assert!(cfg.validate().is_err());
        cfg = QuadratureConfig { clip_epsilon: 1e-5, ..Default::default() };
        assert!(cfg.validate().is_err());
        cfg = QuadratureConfig { abs_tol: 0.0, ..Default::default() };
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn under_resolved_run_reports_convergence_failure() {
        let cfg = QuadratureConfig { max_level: 3, ..Default::default() };
        let r = integrate_01(
            |p| {
                let s = p.neg_ln();
                c(s.ln() / ((1.0 + p.x * p.x) * s.sqrt()))
            },
            &cfg,
        );
        assert!(matches!(r, Err(Error::Convergence { .. })), "{r:?}");
    }
}
