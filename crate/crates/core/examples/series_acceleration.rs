//! The two accelerators on classical series, then the three named series.

use std::f64::consts::FRAC_PI_2;

use loglog_lab::series::{eq5_sum, prop2_series, prop5_series, sum_alternating, sum_phase, TermGenerator};

fn main() -> loglog_lab::Result<()> {
    let harmonic = TermGenerator::new(0, |k| 1.0 / (k + 1) as f64);
    let r = sum_alternating(&harmonic, 1e-15)?;
    println!(
        "Σ (−1)^k/(k+1)       = {:.16}  [{} terms, {}]",
        r.value.re,
        r.terms_used,
        r.method.as_str()
    );

    let inverse = TermGenerator::new(1, |k| 1.0 / k as f64);
    let r = sum_phase(&inverse, FRAC_PI_2, 1e-12)?;
    println!(
        "Σ e^(ikπ/2)/k        = {:.12} {:+.12}i  [{} terms, {}]",
        r.value.re,
        r.value.im,
        r.terms_used,
        r.method.as_str()
    );

    for lambda in [0.0, 1.0, 2.5] {
        let v = prop2_series(lambda, 1e-11)?;
        println!("prop2_series({lambda:>3})   = {:.12} {:+.12}i", v.re, v.im);
    }
    println!("eq5_sum(π/2)         = {:.12}", eq5_sum(FRAC_PI_2, 1e-12)?);
    println!("prop5_series         = {:.12}", prop5_series(1e-12)?);

    let constant = TermGenerator::new(0, |_| 1.0);
    match sum_alternating(&constant, 1e-12) {
        Ok(r) => println!("Σ (−1)^k             = {}", r.value.re),
        Err(e) => println!("Σ (−1)^k             : {e}"),
    }
    Ok(())
}
