//! Tanh-sinh and exp-sinh quadrature on endpoint-singular integrands, and the
//! level-by-level error decay.

use loglog_lab::quadrature::{integrate_01, integrate_halfline, level_trace_01, QuadratureConfig};
use loglog_lab::ComplexValue;

fn main() -> loglog_lab::Result<()> {
    let exact = -0.5 * std::f64::consts::LN_2.powi(2);
    println!("∫₀¹ ln(−ln x)/(1+x) dx, exact {exact:.16}");
    let trace_cfg = QuadratureConfig {
        max_level: 7,
        ..QuadratureConfig::default()
    };
    let trace = level_trace_01(|p| ComplexValue::new(p.neg_ln().ln() / (1.0 + p.x), 0.0), &trace_cfg)?;
    for step in &trace {
        println!(
            "  level {}: {:+.16}  |err| {:.2e}  evals {:>4}",
            step.level_reached,
            step.value.re,
            (step.value.re - exact).abs(),
            step.evaluations
        );
    }

    let cfg = QuadratureConfig::default();
    let r = integrate_01(|p| ComplexValue::new(1.0 / p.x.sqrt(), 0.0), &cfg)?;
    println!("∫₀¹ x^(−1/2) dx        = {:.15} (level {})", r.value.re, r.level_reached);
    let r = integrate_halfline(|u| ComplexValue::new((-u).exp() * u.ln(), 0.0), &cfg)?;
    println!("∫₀^∞ e^(−u) ln u du    = {:.15} (−γ)", r.value.re);
    Ok(())
}
