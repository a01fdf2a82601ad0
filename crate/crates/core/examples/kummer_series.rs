//! Kummer's Fourier series for ln Γ(x) and the sawtooth series, summed with
//! the phase accelerator and compared with direct evaluation.

use loglog_lab::specfun::{kummer_log_gamma, log_gamma, sawtooth_series, FourierEvalConfig};

fn main() -> loglog_lab::Result<()> {
    let cfg = FourierEvalConfig::default();
    println!("{:>6}  {:>18}  {:>9}  {:>9}", "x", "ln Γ(x)", "Kummer Δ", "sawtooth Δ");
    for x in [0.05, 0.1, 0.25, 1.0 / 3.0, 0.5, 0.75, 0.9, 0.95] {
        let lg = log_gamma(x)?;
        let kummer = kummer_log_gamma(x, &cfg)?;
        let saw = sawtooth_series(x, &cfg)?;
        println!(
            "{x:>6.3}  {lg:>18.14}  {:>9.1e}  {:>9.1e}",
            (kummer - lg).abs(),
            (saw - (0.5 - x)).abs()
        );
    }
    Ok(())
}
