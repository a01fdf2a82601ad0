//! Special-function kernels.
//!
//! Everything here works on positive real arguments in `f64`. Γ uses a
//! Lanczos approximation (g = 7, nine coefficients), ψ an upward recurrence
//! followed by the Stirling-type asymptotic series, and ζ/ζ′ an
//! Euler–Maclaurin sum with the tail corrected through B₁₀. The Dirichlet η
//! (on (0, 1]) and β functions go through the alternating-series accelerator.

use std::f64::consts::{LN_2, PI};

use crate::series::{sum_alternating, sum_phase_capped, TermGenerator};
use crate::{Error, Result};

/// Euler–Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082;

/// First Stieltjes constant γ₁.
pub const STIELTJES_1: f64 = -0.072_815_845_483_676_724_860_586_375_875;

/// Named constants used by the closed forms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    pub euler_gamma: f64,
    pub ln_two: f64,
    pub pi: f64,
    pub stieltjes_1: f64,
}

pub const CONSTANTS: Constants = Constants {
    euler_gamma: EULER_GAMMA,
    ln_two: LN_2,
    pi: PI,
    stieltjes_1: STIELTJES_1,
};

/// Truncation controls for the Fourier-type series of ln Γ and the sawtooth.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourierEvalConfig {
    pub tolerance: f64,
    pub max_terms: usize,
}

impl Default for FourierEvalConfig {
    fn default() -> Self {
        FourierEvalConfig {
            tolerance: 1e-7,
            max_terms: 20_000,
        }
    }
}

impl FourierEvalConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return Err(Error::domain(
                "FourierEvalConfig",
                format!("tolerance must be positive, got {}", self.tolerance),
            ));
        }
        if self.max_terms < 8 {
            return Err(Error::domain(
                "FourierEvalConfig",
                format!("max_terms must be at least 8, got {}", self.max_terms),
            ));
        }
        Ok(())
    }
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn positive(op: &'static str, x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(op, format!("requires x > 0, got {x}")))
    }
}

/// Lanczos series `A_g(z)` and the shifted point `t = z + g + 1/2` for Γ(z + 1).
fn lanczos_sum(z: f64) -> (f64, f64) {
    let mut a = LANCZOS_COEFFS[0];
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        a += c / (z + i as f64);
    }
    (a, z + LANCZOS_G + 0.5)
}

/// Γ(x) for x > 0. Overflows to `+∞` beyond x ≈ 171.6.
pub fn gamma(x: f64) -> Result<f64> {
    positive("gamma", x)?;
    Ok(gamma_unchecked(x))
}

fn gamma_unchecked(x: f64) -> f64 {
    if x < 0.5 {
        // Γ(x)Γ(1−x) = π / sin(πx)
        return PI / ((PI * x).sin() * gamma_unchecked(1.0 - x));
    }
    let (a, t) = lanczos_sum(x - 1.0);
    // t^(x−1/2) split in halves so that it does not overflow before e^{−t} applies.
    let half = t.powf(0.5 * (x - 0.5));
    (2.0 * PI).sqrt() * half * (half * (-t).exp()) * a
}

/// ln Γ(x) for x > 0, valid far beyond the overflow point of Γ.
pub fn log_gamma(x: f64) -> Result<f64> {
    positive("log_gamma", x)?;
    Ok(log_gamma_unchecked(x))
}

fn log_gamma_unchecked(x: f64) -> f64 {
    if x < 0.5 {
        return (PI / (PI * x).sin()).ln() - log_gamma_unchecked(1.0 - x);
    }
    let (a, t) = lanczos_sum(x - 1.0);
    0.5 * (2.0 * PI).ln() + (x - 0.5) * t.ln() - t + a.ln()
}

/// Digamma ψ(x) = Γ′(x)/Γ(x) for x > 0.
pub fn digamma(x: f64) -> Result<f64> {
    positive("digamma", x)?;
    let mut x = x;
    let mut shift = 0.0;
    while x < 10.0 {
        shift -= 1.0 / x;
        x += 1.0;
    }
    // ln x − 1/(2x) − Σ B₂ₖ/(2k x^{2k})
    let inv2 = 1.0 / (x * x);
    let tail = inv2
        * (1.0 / 12.0
            - inv2
                * (1.0 / 120.0
                    - inv2
                        * (1.0 / 252.0
                            - inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0 - inv2 * 691.0 / 32_760.0)))));
    Ok(shift + x.ln() - 0.5 / x - tail)
}

/// Number of directly summed terms in the Euler–Maclaurin scheme.
const ZETA_DIRECT_TERMS: u32 = 20;

/// B₂ⱼ/(2j)! for j = 1..5.
const BERNOULLI_OVER_FACTORIAL: [f64; 5] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30_240.0,
    -1.0 / 1_209_600.0,
    1.0 / 47_900_160.0,
];

fn above_one(op: &'static str, s: f64) -> Result<()> {
    if s > 1.0 && s.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(op, format!("requires s > 1, got {s}")))
    }
}

/// Riemann ζ(s) for real s > 1.
pub fn zeta(s: f64) -> Result<f64> {
    above_one("zeta", s)?;
    let n = ZETA_DIRECT_TERMS as f64;
    // Sum the small tail terms first.
    let mut sum = 0.0;
    let mut pochhammer = s;
    let mut power = n.powf(-s - 1.0);
    let mut corrections = [0.0; 5];
    for (j, &b) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        corrections[j] = b * pochhammer * power;
        pochhammer *= (s + 2.0 * j as f64 + 1.0) * (s + 2.0 * j as f64 + 2.0);
        power /= n * n;
    }
    for c in corrections.iter().rev() {
        sum += c;
    }
    sum += 0.5 * n.powf(-s);
    for k in (1..ZETA_DIRECT_TERMS).rev() {
        sum += (k as f64).powf(-s);
    }
    Ok(sum + n.powf(1.0 - s) / (s - 1.0))
}

/// ζ′(s) for real s > 1, from the termwise-differentiated Euler–Maclaurin sum.
pub fn zeta_prime(s: f64) -> Result<f64> {
    above_one("zeta_prime", s)?;
    let n = ZETA_DIRECT_TERMS as f64;
    let ln_n = n.ln();
    let mut sum = 0.0;
    // d/ds [c_j (s)_{2j−1} N^{−s−2j+1}] = c_j N^{…} [(s)_{2j−1}' − ln N (s)_{2j−1}]
    let mut pochhammer = s;
    let mut pochhammer_log_derivative = 1.0 / s;
    let mut power = n.powf(-s - 1.0);
    let mut corrections = [0.0; 5];
    for (j, &b) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        corrections[j] = b * power * pochhammer * (pochhammer_log_derivative - ln_n);
        let a1 = s + 2.0 * j as f64 + 1.0;
        let a2 = a1 + 1.0;
        pochhammer *= a1 * a2;
        pochhammer_log_derivative += 1.0 / a1 + 1.0 / a2;
        power /= n * n;
    }
    for c in corrections.iter().rev() {
        sum += c;
    }
    sum -= 0.5 * ln_n * n.powf(-s);
    for k in (2..ZETA_DIRECT_TERMS).rev() {
        let k = k as f64;
        sum -= k.ln() * k.powf(-s);
    }
    let head = n.powf(1.0 - s) / (s - 1.0);
    Ok(sum - head * (ln_n + 1.0 / (s - 1.0)))
}

/// Laurent expansion of ζ about s = 1 truncated after the γ (`order = 0`) or
/// the γ₁ (`order = 1`) term.
pub fn zeta_laurent(s: f64, order: u8) -> Result<f64> {
    const OP: &str = "zeta_laurent";
    if !s.is_finite() || s == 1.0 || (s - 1.0).abs() > 0.5 {
        return Err(Error::domain(
            OP,
            format!("requires s ≠ 1 and |s − 1| ≤ 0.5, got {s}"),
        ));
    }
    let d = s - 1.0;
    match order {
        0 => Ok(1.0 / d + EULER_GAMMA),
        1 => Ok(1.0 / d + EULER_GAMMA - STIELTJES_1 * d),
        _ => Err(Error::domain(OP, format!("order must be 0 or 1, got {order}"))),
    }
}

const ALTERNATING_TOL: f64 = 1e-14;

/// Dirichlet η(s) = Σ_{k≥1} (−1)^{k−1} k^{−s} for s > 0.
pub fn eta(s: f64) -> Result<f64> {
    if !(s > 0.0 && s.is_finite()) {
        return Err(Error::domain("eta", format!("requires s > 0, got {s}")));
    }
    if s > 1.0 {
        // 1 − 2^{1−s} without cancellation near s = 1
        let factor = -((1.0 - s) * LN_2).exp_m1();
        return Ok(factor * zeta(s)?);
    }
    let terms = TermGenerator::new(0, move |k| ((k + 1) as f64).powf(-s));
    Ok(sum_alternating(&terms, ALTERNATING_TOL)?.value.re)
}

/// η′(s) for s ≥ 1. At s = 1 this is the closed value γ ln 2 − (ln 2)²/2.
pub fn eta_prime(s: f64) -> Result<f64> {
    if !(s >= 1.0 && s.is_finite()) {
        return Err(Error::domain("eta_prime", format!("requires s ≥ 1, got {s}")));
    }
    if s == 1.0 {
        return Ok(EULER_GAMMA * LN_2 - 0.5 * LN_2 * LN_2);
    }
    let two_pow = ((1.0 - s) * LN_2).exp();
    let one_minus = -((1.0 - s) * LN_2).exp_m1();
    Ok(two_pow * LN_2 * zeta(s)? + one_minus * zeta_prime(s)?)
}

/// Dirichlet β(s) = Σ_{k≥0} (−1)^k (2k+1)^{−s} for s > 0.
pub fn dirichlet_beta(s: f64) -> Result<f64> {
    if !(s > 0.0 && s.is_finite()) {
        return Err(Error::domain(
            "dirichlet_beta",
            format!("requires s > 0, got {s}"),
        ));
    }
    let terms = TermGenerator::new(0, move |k| ((2 * k + 1) as f64).powf(-s));
    Ok(sum_alternating(&terms, ALTERNATING_TOL)?.value.re)
}

/// The scalar c with β′(1/2) = c·β(1/2), obtained by differentiating the
/// β functional equation at its fixed point s = 1/2.
pub fn beta_prime_half_factor() -> f64 {
    -0.5 * (2.0 / PI).ln() - PI / 4.0 + 0.5 * EULER_GAMMA + LN_2
}

/// β′(1/2) in closed form.
pub fn beta_prime_half() -> Result<f64> {
    Ok(beta_prime_half_factor() * dirichlet_beta(0.5)?)
}

fn unit_interval(op: &'static str, x: f64) -> Result<()> {
    if x > 0.0 && x < 1.0 {
        Ok(())
    } else {
        Err(Error::domain(op, format!("requires 0 < x < 1, got {x}")))
    }
}

/// Kummer's Fourier series
/// `ln Γ(x) = ½ ln(π/sin πx) + (1/π) Σ (γ + ln 2π + ln k) sin(2kπx)/k`.
pub fn kummer_log_gamma(x: f64, cfg: &FourierEvalConfig) -> Result<f64> {
    const OP: &str = "kummer_log_gamma";
    unit_interval(OP, x)?;
    cfg.validate()?;
    let offset = EULER_GAMMA + (2.0 * PI).ln();
    let terms = TermGenerator::new(1, move |k| {
        let k = k as f64;
        (offset + k.ln()) / k
    });
    let sum = sum_phase_capped(&terms, 2.0 * PI * x, cfg.tolerance, cfg.max_terms)?;
    Ok(0.5 * (PI / (PI * x).sin()).ln() + sum.value.im / PI)
}

/// `(1/π) Σ sin(2kπx)/k`, which equals `1/2 − x` on (0, 1).
pub fn sawtooth_series(x: f64, cfg: &FourierEvalConfig) -> Result<f64> {
    unit_interval("sawtooth_series", x)?;
    cfg.validate()?;
    let terms = TermGenerator::new(1, |k| 1.0 / k as f64);
    let sum = sum_phase_capped(&terms, 2.0 * PI * x, cfg.tolerance, cfg.max_terms)?;
    Ok(sum.value.im / PI)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Reference values: mpmath at 40 digits.
    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    fn rel_close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs()
    }

    #[test]
    fn constants_in_range() {
        assert!(EULER_GAMMA > 0.577215 && EULER_GAMMA < 0.577216);
        assert!(STIELTJES_1 > -0.072816 && STIELTJES_1 < -0.072815);
        assert!(rel_close(CONSTANTS.ln_two.exp(), 2.0, 2.0 * f64::EPSILON));
    }

    #[test]
    fn euler_gamma_from_defining_limit() {
        // H_n − ln n = γ + 1/(2n) − 1/(12n²) + 1/(120n⁴) − …
        let n = 1000.0_f64;
        let mut harmonic = 0.0;
        for k in (1..=1000).rev() {
            harmonic += 1.0 / k as f64;
        }
        let estimate =
            harmonic - n.ln() - 0.5 / n + 1.0 / (12.0 * n * n) - 1.0 / (120.0 * n.powi(4));
        assert!(close(estimate, EULER_GAMMA, 1e-14), "{estimate}");
    }

    #[test]
    fn gamma_values() {
        assert!(rel_close(gamma(0.5).unwrap(), PI.sqrt(), 1e-14));
        assert!(rel_close(gamma(1.0).unwrap(), 1.0, 1e-14));
        assert!(rel_close(gamma(0.25).unwrap(), 3.625_609_908_221_908_3, 1e-13));
        assert!(rel_close(gamma(19.5).unwrap(), 2.772_432_298_633_371_8e16, 1e-13));
        assert!(rel_close(gamma(1e-3).unwrap(), 999.423_772_484_595_5, 1e-13));
    }

    #[test]
    fn gamma_domain() {
        assert!(matches!(gamma(0.0), Err(Error::Domain { .. })));
        assert!(matches!(gamma(-1.5), Err(Error::Domain { .. })));
        assert!(gamma(f64::NAN).is_err());
        assert!(log_gamma(0.0).is_err());
        assert!(digamma(-2.0).is_err());
    }

    #[test]
    fn log_gamma_values() {
        assert!(close(log_gamma(0.5).unwrap(), 0.5 * PI.ln(), 1e-14));
        assert!(close(log_gamma(1.0).unwrap(), 0.0, 1e-14));
        assert!(close(log_gamma(2.0).unwrap(), 0.0, 1e-14));
        assert!(close(log_gamma(0.25).unwrap(), 1.288_022_524_698_077_5, 1e-13));
        assert!(close(log_gamma(0.75).unwrap(), 0.203_280_951_431_295_37, 1e-13));
        assert!(close(log_gamma(30.5).unwrap(), 72.953_471_184_169_41, 1e-11));
        assert!(close(log_gamma(200.0).unwrap(), 857.933_669_825_857_4, 1e-10));
    }

    #[test]
    fn digamma_values() {
        assert!(close(digamma(0.5).unwrap(), -1.963_510_026_021_423_5, 1e-13));
        assert!(close(digamma(1.0).unwrap(), -EULER_GAMMA, 1e-13));
        assert!(close(digamma(2.0).unwrap(), 1.0 - EULER_GAMMA, 1e-13));
        assert!(close(digamma(0.1).unwrap(), -10.423_754_940_411_077, 1e-12));
        assert!(close(digamma(7.3).unwrap(), 1.917_820_335_637_986, 1e-13));
        assert!(close(digamma(15.0).unwrap(), 2.674_346_661_660_793_7, 1e-13));
    }

    #[test]
    fn digamma_at_half_composition() {
        let residual = digamma(0.5).unwrap() + EULER_GAMMA + 2.0 * LN_2;
        assert!(residual.abs() <= 1e-12, "{residual}");
    }

    #[test]
    fn zeta_values() {
        assert!(close(zeta(2.0).unwrap(), PI * PI / 6.0, 1e-13));
        assert!(close(zeta(4.0).unwrap(), PI.powi(4) / 90.0, 1e-13));
        assert!(close(zeta(50.0).unwrap(), 1.0, 1e-12));
        assert!(close(zeta(3.0).unwrap(), 1.202_056_903_159_594_3, 1e-13));
        assert!(close(zeta(1.5).unwrap(), 2.612_375_348_685_488_3, 1e-13));
        assert!(close(zeta(1.01).unwrap(), 100.577_943_338_496_87, 1e-12));
        assert!(matches!(zeta(1.0), Err(Error::Domain { .. })));
        assert!(zeta(0.5).is_err());
    }

    #[test]
    fn zeta_prime_values() {
        assert!(close(zeta_prime(2.0).unwrap(), -0.937_548_254_315_843_8, 1e-12));
        assert!(close(zeta_prime(3.0).unwrap(), -0.198_126_242_885_636_85, 1e-12));
        assert!(close(zeta_prime(1.5).unwrap(), -3.932_239_737_431_101_5, 1e-11));
        assert!(close(zeta_prime(50.0).unwrap(), 0.0, 1e-10));
        assert!(close(zeta_prime(1.01).unwrap(), -9_999.927_281_160_453, 1e-9));
        assert!(zeta_prime(1.0).is_err());
    }

    #[test]
    fn zeta_laurent_values() {
        let v = zeta_laurent(1.1, 1).unwrap();
        assert!(close(v, 10.0 + EULER_GAMMA - STIELTJES_1 * 0.1, 1e-13));
        assert!(close(v, 10.584_497_249_449_9, 1e-12));
        assert!(close(zeta_laurent(1.1, 0).unwrap(), 10.577_215_664_901_533, 1e-12));
        assert!(zeta_laurent(1.0, 1).is_err());
        assert!(zeta_laurent(1.6, 1).is_err());
        assert!(zeta_laurent(1.1, 2).is_err());
    }

    #[test]
    fn zeta_laurent_accuracy() {
        for s in [1.01, 1.05, 1.1] {
            let d = s - 1.0;
            let gap = (zeta_laurent(s, 1).unwrap() - zeta(s).unwrap()).abs();
            assert!(gap <= 0.5 * d * d, "s = {s}: {gap}");
        }
    }

    #[test]
    fn eta_values() {
        assert!(close(eta(1.0).unwrap(), LN_2, 1e-13));
        assert!(close(eta(2.0).unwrap(), PI * PI / 12.0, 1e-13));
        assert!(close(eta(0.5).unwrap(), 0.604_898_643_421_630_4, 1e-13));
        assert!(close(eta(0.25).unwrap(), 0.554_487_385_914_073_1, 1e-13));
        assert!(close(eta(0.9).unwrap(), 0.676_831_935_284_540_5, 1e-13));
        assert!(close(eta(1.5).unwrap(), 0.765_147_024_625_407_9, 1e-13));
        assert!(eta(0.0).is_err());
    }

    #[test]
    fn eta_continuous_across_one() {
        let below = eta(1.0).unwrap();
        let above = eta(1.0 + 1e-9).unwrap();
        assert!((below - above).abs() < 1e-8);
    }

    #[test]
    fn eta_prime_values() {
        assert!(close(eta_prime(1.0).unwrap(), 0.159_868_903_742_430_97, 1e-15));
        assert!(close(eta_prime(2.0).unwrap(), 0.101_316_578_163_504_5, 1e-11));
        assert!(close(eta_prime(1.5).unwrap(), 0.128_674_750_830_357_2, 1e-11));
        assert!(close(eta_prime(3.0).unwrap(), 0.059_705_906_160_195_36, 1e-11));
        let far = eta_prime(50.0).unwrap();
        assert!(far > 0.0 && far < 1e-12, "{far}");
        assert!(eta_prime(0.9).is_err());
    }

    #[test]
    fn eta_prime_against_alternating_log_series() {
        for s in [1.5, 2.0, 3.0] {
            let terms = TermGenerator::new(2, move |k| {
                let k = k as f64;
                k.ln() * k.powf(-s)
            });
            let series = sum_alternating(&terms, 1e-13).unwrap().value.re;
            assert!((eta_prime(s).unwrap() - series).abs() <= 1e-9);
        }
    }

    #[test]
    fn dirichlet_beta_values() {
        assert!(close(dirichlet_beta(1.0).unwrap(), PI / 4.0, 1e-13));
        assert!(close(dirichlet_beta(0.5).unwrap(), 0.667_691_457_189_609_2, 1e-13));
        assert!(close(dirichlet_beta(2.0).unwrap(), 0.915_965_594_177_219, 1e-13));
        assert!(close(dirichlet_beta(0.3).unwrap(), 0.607_183_612_954_785_9, 1e-13));
        assert!(dirichlet_beta(0.0).is_err());
    }

    #[test]
    fn beta_functional_equation() {
        for s in [0.25, 0.5, 0.75] {
            let lhs = dirichlet_beta(1.0 - s).unwrap();
            let rhs = (2.0 / PI).powf(s)
                * (PI * s / 2.0).sin()
                * gamma(s).unwrap()
                * dirichlet_beta(s).unwrap();
            assert!((lhs - rhs).abs() <= 1e-9, "s = {s}");
        }
    }

    #[test]
    fn beta_prime_half_values() {
        let v = beta_prime_half().unwrap();
        assert!(close(v, 0.281_864_748_315_611_8, 1e-12), "{v}");
        assert!(close(beta_prime_half_factor(), 0.422_148_202_257_990_9, 1e-14));
        let h = 1e-4;
        let fd = (dirichlet_beta(0.5 + h).unwrap() - dirichlet_beta(0.5 - h).unwrap()) / (2.0 * h);
        assert!((fd - v).abs() <= 1e-6, "{fd} vs {v}");
    }

    #[test]
    fn kummer_values() {
        let cfg = FourierEvalConfig::default();
        assert!(close(kummer_log_gamma(0.5, &cfg).unwrap(), 0.5 * PI.ln(), 1e-9));
        assert!(close(kummer_log_gamma(0.25, &cfg).unwrap(), 1.288_022_524_698_077_5, 1e-6));
        assert!(close(kummer_log_gamma(0.75, &cfg).unwrap(), 0.203_280_951_431_295_37, 1e-6));
        for x in [0.1, 0.25, 1.0 / 3.0, 0.75, 0.9] {
            let gap = (kummer_log_gamma(x, &cfg).unwrap() - log_gamma(x).unwrap()).abs();
            assert!(gap <= 1e-6, "x = {x}: {gap}");
        }
        assert!(kummer_log_gamma(0.0, &cfg).is_err());
        assert!(kummer_log_gamma(1.0, &cfg).is_err());
    }

    #[test]
    fn kummer_respects_config() {
        let bad = FourierEvalConfig {
            tolerance: 1e-7,
            max_terms: 4,
        };
        assert!(kummer_log_gamma(0.3, &bad).is_err());
        let starved = FourierEvalConfig {
            tolerance: 1e-15,
            max_terms: 20,
        };
        assert!(matches!(
            kummer_log_gamma(0.3, &starved),
            Err(Error::Convergence { .. })
        ));
    }

    #[test]
    fn sawtooth_values() {
        let cfg = FourierEvalConfig::default();
        assert!(close(sawtooth_series(0.5, &cfg).unwrap(), 0.0, 1e-12));
        assert!(close(sawtooth_series(0.25, &cfg).unwrap(), 0.25, 1e-8));
        assert!(close(sawtooth_series(0.9, &cfg).unwrap(), -0.4, 1e-8));
        assert!(sawtooth_series(1.5, &cfg).is_err());
    }

    #[test]
    fn gamma_reflection_fixed_points() {
        for x in [0.1, 0.3, 0.5, 0.77, 0.95] {
            let lhs = gamma(x).unwrap() * gamma(1.0 - x).unwrap();
            let rhs = PI / (PI * x).sin();
            assert!((lhs - rhs).abs() <= 1e-10 * rhs.abs());
        }
    }
}
