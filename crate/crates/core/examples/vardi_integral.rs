//! Vardi's integral in both of its forms: over (π/4, π/2) with ln ln tan x and
//! over (0, 1) with ln(−ln x)/(1 + x²).

use loglog_lab::identities::{closed_form, IdentityId, Params};
use loglog_lab::quadrature::QuadratureConfig;
use loglog_lab::verifier::verify;

fn main() -> loglog_lab::Result<()> {
    let cfg = QuadratureConfig::default();
    let closed = closed_form(IdentityId::Gr4325_4, &Params::new())?.re;
    println!("(π/2) ln(√(2π) Γ(3/4)/Γ(1/4)) = {closed:.15}");
    for id in [IdentityId::Gr4229_7, IdentityId::Gr4325_4] {
        let r = verify(id, &Params::new(), &cfg, 1e-9)?;
        println!(
            "{:<11} quadrature {:.15}  |Δ| {:.1e}  est {:.1e}  {}",
            id.as_str(),
            r.lhs_quadrature.map_or(f64::NAN, |v| v.re),
            r.abs_error_qc.unwrap_or(f64::NAN),
            r.quad_error_estimate.unwrap_or(f64::NAN),
            r.verdict.as_str()
        );
    }
    Ok(())
}
