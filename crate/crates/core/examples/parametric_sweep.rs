//! Sweep the parametric family 1/(1 + 2x cos t + x²) across (−π, π), showing
//! quadrature, closed form and the S(t)/sin t series side by side.

use loglog_lab::identities::IdentityId;
use loglog_lab::verifier::{sweep, RunConfig, SweepGrid};

fn main() -> loglog_lab::Result<()> {
    let ts: Vec<f64> = (-6..=6).map(|k| k as f64 * 0.5).collect();
    let grid = SweepGrid::real(IdentityId::Gr4325_7, "t", &ts)?;
    let results = sweep(IdentityId::Gr4325_7, &grid, &RunConfig::default())?;
    println!("{:>5}  {:>20}  {:>9}  {:>9}  verdict", "t", "closed form", "|q−c|", "|s−c|");
    for (t, r) in ts.iter().zip(&results) {
        println!(
            "{t:>5.1}  {:>20.14}  {:>9.1e}  {:>9}  {}",
            r.rhs_closed.map_or(f64::NAN, |v| v.re),
            r.abs_error_qc.unwrap_or(f64::NAN),
            r.abs_error_cs.map_or("-".to_string(), |e| format!("{e:.1e}")),
            r.verdict.as_str()
        );
    }
    Ok(())
}
